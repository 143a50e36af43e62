//! Weyl group elements as words in root reflections.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use num_traits::Signed;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::model::{CartanModel, RatVector};
use crate::roots::RootSystem;

pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// A product of root reflections. Letters are listed in the order they are
/// applied: `apply(v) = s_{letters[k-1]}( ... s_{letters[0]}(v))`.
#[derive(Clone, Debug)]
pub struct WeylWord {
    model: CartanModel,
    letters: Vec<RatVector>,
    matrix: OnceLock<RatMatrix>,
}

impl PartialEq for WeylWord {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model && self.letters == other.letters
    }
}

impl Eq for WeylWord {}

impl WeylWord {
    pub fn identity(model: &CartanModel) -> Self {
        Self::from_letters(model, Vec::new())
    }

    /// No root check; use [`WeylWord::from_roots`] for validated input.
    pub fn from_letters(model: &CartanModel, letters: Vec<RatVector>) -> Self {
        WeylWord {
            model: model.clone(),
            letters,
            matrix: OnceLock::new(),
        }
    }

    pub fn from_roots(rs: &RootSystem, letters: Vec<RatVector>) -> Result<Self> {
        for l in &letters {
            rs.root(l)?;
        }
        Ok(Self::from_letters(rs.model(), letters))
    }

    pub fn letters(&self) -> &[RatVector] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn apply(&self, v: &RatVector) -> RatVector {
        self.letters
            .iter()
            .fold(v.clone(), |acc, eta| self.model.reflect(eta, &acc))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self::from_letters(&self.model, letters)
    }

    pub fn inverse(&self) -> WeylWord {
        Self::from_letters(&self.model, self.letters.iter().rev().cloned().collect())
    }

    /// `v -> w(v)` as an ambient matrix acting on column vectors.
    pub fn matrix(&self) -> &RatMatrix {
        self.matrix.get_or_init(|| {
            let n = self.model.ambient_dim();
            let mut m = RatMatrix::zeros(n, n);
            for j in 0..n {
                let col = self.apply(&self.model.e(j));
                for (i, x) in col.coords().iter().enumerate() {
                    m.set(i, j, x.clone());
                }
            }
            m
        })
    }

    /// Checks `<w a, w b> = <a, b>` on the simple roots (a basis of the span).
    pub fn preserves_form(&self, rs: &RootSystem) -> bool {
        let basis = rs.simple_root_vectors();
        let images: Vec<RatVector> = basis
            .iter()
            .map(|b| RatVector::new(self.matrix().mul_vec(b.coords())))
            .collect();
        basis.iter().zip(&images).all(|(a, wa)| {
            basis
                .iter()
                .zip(&images)
                .all(|(b, wb)| rs.pairing(a, b) == rs.pairing(wa, wb))
        })
    }

    pub fn permutes_roots(&self, rs: &RootSystem) -> bool {
        let images: HashSet<RatVector> = rs.root_vectors().map(|r| self.apply(r)).collect();
        images.len() == rs.roots().len() && images.iter().all(|v| rs.is_root(v))
    }
}

impl Serialize for WeylWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WeylWord", 2)?;
        st.serialize_field("letters", &self.letters)?;
        st.serialize_field("matrix", self.matrix())?;
        st.end()
    }
}

/// `w_eta(v) = v - 2<eta,v>/<eta,eta> eta`
pub fn reflect(rs: &RootSystem, eta: &RatVector, v: &RatVector) -> Result<RatVector> {
    rs.root(eta)?;
    Ok(rs.model().reflect(eta, v))
}

/// The dominant element of the orbit of `v` and a word carrying `v` to it.
pub fn dominant_rep(rs: &RootSystem, v: &RatVector) -> (RatVector, WeylWord) {
    let simple = rs.simple_root_vectors();
    let mut cur = v.clone();
    let mut letters = Vec::new();
    while let Some(a) = simple
        .iter()
        .find(|a| rs.pairing(a, &cur).is_negative())
    {
        cur = rs.model().reflect(a, &cur);
        letters.push(a.clone());
    }
    (cur, WeylWord::from_letters(rs.model(), letters))
}

/// Orbit of `v` under the simple reflections, sorted lexicographically.
pub fn weyl_orbit(rs: &RootSystem, v: &RatVector, cap: usize) -> Result<Vec<RatVector>> {
    let simple = rs.simple_root_vectors();
    let mut seen: HashSet<RatVector> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(x) = queue.pop_front() {
        for a in &simple {
            let y = rs.model().reflect(a, &x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<RatVector> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Word for the longest element, which sends `rho` to `-rho`.
pub fn longest_word(rs: &RootSystem) -> &[RatVector] {
    rs.longest_word.get_or_init(|| {
        let rho = rs.rho();
        dominant_rep(rs, &rho.neg()).1.letters().to_vec()
    })
}

/// `-id` lies in `W` iff `dominant_rep(-w) == w` for every fundamental
/// weight `w`. (`rho` alone cannot decide it: `-rho` is always in its orbit.)
pub fn minus_id_in_weyl(rs: &RootSystem) -> bool {
    *rs.minus_id.get_or_init(|| {
        rs.fundamental_weights()
            .iter()
            .all(|w| dominant_rep(rs, &w.neg()).0 == *w)
    })
}

/// `|W|` as the orbit size of the strictly dominant vector `rho`.
pub fn weyl_order(rs: &RootSystem, cap: usize) -> Result<usize> {
    Ok(weyl_orbit(rs, &rs.rho(), cap)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::roots::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn v(xs: &[i64]) -> RatVector {
        RatVector::from_i64(xs)
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        assert_eq!(reflect(&a2, &v(&[1, -1, 0]), &v(&[1, 0, -1])).unwrap(), v(&[0, 1, -1]));
        let c3 = rs("C3");
        assert_eq!(reflect(&c3, &v(&[2, 0, 0]), &v(&[1, 1, 1])).unwrap(), v(&[-1, 1, 1]));
        assert!(matches!(
            reflect(&c3, &v(&[1, 0, 0]), &v(&[1, 1, 1])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn dominant_rep_examples() {
        let a2 = rs("A2");
        let (d, w) = dominant_rep(&a2, &v(&[-1, 0, 1]));
        assert_eq!(d, v(&[1, 0, -1]));
        assert_eq!(w.apply(&v(&[-1, 0, 1])), d);
        let (d, w) = dominant_rep(&a2, &v(&[1, 0, -1]));
        assert_eq!(d, v(&[1, 0, -1]));
        assert!(w.is_empty());
        let b2 = rs("B2");
        let (d, w) = dominant_rep(&b2, &v(&[0, -2]));
        assert_eq!(d, v(&[2, 0]));
        assert!(w.preserves_form(&b2));
        assert!(w.permutes_roots(&b2));
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs("A2");
        assert_eq!(weyl_orbit(&a2, &v(&[1, 0, -1]), DEFAULT_ORBIT_CAP).unwrap().len(), 6);
        let b2 = rs("B2");
        assert_eq!(
            weyl_orbit(&b2, &v(&[1, 0]), DEFAULT_ORBIT_CAP).unwrap(),
            vec![v(&[-1, 0]), v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]
        );
        assert_eq!(weyl_orbit(&b2, &v(&[0, 0]), 1).unwrap(), vec![v(&[0, 0])]);
        assert!(matches!(
            weyl_orbit(&a2, &v(&[1, 0, -1]), 3),
            Err(Error::OrbitCapExceeded { cap: 3 })
        ));
    }

    #[test]
    fn minus_id_examples() {
        assert!(minus_id_in_weyl(&rs("B2")));
        assert!(!minus_id_in_weyl(&rs("A2")));
        assert!(minus_id_in_weyl(&rs("D4")));
        assert!(!minus_id_in_weyl(&rs("D5")));
    }

    #[test]
    fn longest_word_negates_rho() {
        for t in ["A3", "B3", "G2", "D5"] {
            let r = rs(t);
            let w = WeylWord::from_letters(r.model(), longest_word(&r).to_vec());
            assert_eq!(w.apply(&r.rho()), r.rho().neg(), "{t}");
        }
    }

    #[test]
    fn matrix_matches_apply() {
        let g2 = rs("G2");
        let (_, w) = dominant_rep(&g2, &g2.rho().neg());
        let x = g2.model().epsilon_i(0).scale(&int(3));
        assert_eq!(RatVector::new(w.matrix().mul_vec(x.coords())), w.apply(&x));
        assert_eq!(w.then(&w.inverse()).apply(&x), x);
    }
}
