//! Root systems of every compact simple type in explicit coordinates.
//!
//! Conventions per family (coordinates are 1-based in the labels):
//!
//! | type | model | roots | chamber | highest root |
//! |------|-------|-------|---------|--------------|
//! | A_n  | sum-zero R^{n+1} | e_i - e_j | x1 >= ... >= x_{n+1} | e1 - e_{n+1} |
//! | B_n  | R^n | ±e_i, ±e_i ± e_j | x1 >= ... >= xn >= 0 | e1 + e2 |
//! | C_n  | R^n | ±2e_i, ±e_i ± e_j | x1 >= ... >= xn >= 0 | 2e1 |
//! | D_n  | R^n | ±e_i ± e_j | x1 >= ... >= x_{n-1} >= abs(xn) | e1 + e2 |
//! | E6   | (n, xi) | ±2eps, eps_i - eps_j, eps_i+eps_j+eps_k ± eps | x2 >= ... >= x6, x1+x5+x6 >= n/2 >= 0 | eps1 - eps6 |
//! | E7   | sum-zero R^8 | eps_i - eps_j, eps_i+eps_j+eps_k+eps_l | x2 >= ... >= x8, x1+x6+x7+x8 >= 0 | eps1 - eps8 |
//! | E8   | sum-zero R^9 | eps_i - eps_j, ±(eps_i+eps_j+eps_k) | x2 >= ... >= x9, x2+x3+x4 <= 0 | eps1 - eps9 |
//! | F4   | R^4 | ±e_i, ±e_i ± e_j, (±e1±e2±e3±e4)/2 | x2 >= x3 >= x4 >= 0, x1 >= x2+x3+x4 | e1 + e2 |
//! | G2   | sum-zero R^3 | ±eps_i, eps_i - eps_j | 0 >= x2 >= x3 | eps1 - eps3 |
//!
//! Here `eps_i = e_i - (1/k) sum_j e_j` on a sum-zero block of size `k`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cochar::LatticeFamily;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::model::{CartanModel, RatVector};
use crate::rational::{self, int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::UnsupportedRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// The default sweep: A1-A8, B2-B8, C3-C8, D4-D9, E6-E8, F4, G2.
    pub fn default_sweep() -> Vec<SimpleType> {
        let mut v = Vec::new();
        let mut push = |f, r| v.push(SimpleType::new(f, r).expect("in range"));
        (1..=8).for_each(|r| push(Family::A, r));
        (2..=8).for_each(|r| push(Family::B, r));
        (3..=8).for_each(|r| push(Family::C, r));
        (4..=9).for_each(|r| push(Family::D, r));
        (6..=8).for_each(|r| push(Family::E, r));
        push(Family::F, 4);
        push(Family::G, 2);
        v
    }

    /// Closed-form number of roots.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Order of the Weyl group as the product of the degrees.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        let degrees: Vec<u128> = match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => (1..n).map(|i| 2 * i).chain([n]).collect(),
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        };
        let _ = fact;
        degrees.iter().product()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(t.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::UnknownType(t.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub vector: RatVector,
    #[serde(serialize_with = "ser_rat")]
    pub norm_sq: Rational,
}

pub(crate) fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format(q))
}

/// `sum_k coeffs[k] * v[k] >= 0`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberInequality {
    pub label: String,
    #[serde(serialize_with = "ser_rats")]
    pub coeffs: Vec<Rational>,
}

fn ser_rats<S: serde::Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(rational::format))
}

impl ChamberInequality {
    pub fn holds(&self, v: &RatVector) -> bool {
        !CartanModel::evaluate(&self.coeffs, v).is_negative()
    }
}

/// Result of checking an inequality the chamber is asserted to imply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImpliedInequality {
    pub label: String,
    pub implied: bool,
}

#[derive(Debug)]
pub struct RootSystem {
    stype: SimpleType,
    model: CartanModel,
    roots: Vec<Root>,
    index: HashMap<RatVector, usize>,
    positive: Vec<usize>,
    simple: Vec<usize>,
    highest: usize,
    chamber: Vec<ChamberInequality>,
    interior: RatVector,
    simple_gram_inv: RatMatrix,
    implied: Vec<ImpliedInequality>,
    pub(crate) lattices: OnceLock<LatticeFamily>,
    pub(crate) longest_word: OnceLock<Vec<RatVector>>,
    pub(crate) minus_id: OnceLock<bool>,
    weights: OnceLock<Vec<RatVector>>,
    coweights: OnceLock<Vec<RatVector>>,
}

struct RawData {
    model: CartanModel,
    roots: Vec<RatVector>,
    chamber: Vec<ChamberInequality>,
    highest: RatVector,
    implied: Vec<(String, Vec<Rational>)>,
}

fn functional(dim: usize, terms: &[(usize, Rational)]) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); dim];
    for (k, q) in terms {
        c[*k] += q;
    }
    c
}

/// `x_i >= x_{i+1}` for consecutive coordinates in `range` (0-based storage
/// index, 1-based label offset `label_shift`).
fn descending(dim: usize, range: std::ops::Range<usize>, label_shift: usize) -> Vec<ChamberInequality> {
    range
        .clone()
        .zip(range.skip(1))
        .map(|(i, j)| ChamberInequality {
            label: format!("x{} >= x{}", i + label_shift, j + label_shift),
            coeffs: functional(dim, &[(i, int(1)), (j, int(-1))]),
        })
        .collect()
}

fn signed_pairs(model: &CartanModel, n: usize) -> Vec<RatVector> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(model.e(i).scale(&int(si)).add(&model.e(j).scale(&int(sj))));
            }
        }
    }
    out
}

fn raw_data(t: SimpleType) -> RawData {
    let n = t.rank;
    match t.family {
        Family::A => {
            let model = CartanModel::sum_zero(n + 1);
            let mut roots = Vec::new();
            for i in 0..=n {
                for j in 0..=n {
                    if i != j {
                        roots.push(model.e(i).sub(&model.e(j)));
                    }
                }
            }
            RawData {
                chamber: descending(n + 1, 0..n + 1, 1),
                highest: model.e(0).sub(&model.e(n)),
                model,
                roots,
                implied: vec![],
            }
        }
        Family::B | Family::C => {
            let model = CartanModel::euclidean(n);
            let long = if t.family == Family::B { 1 } else { 2 };
            let mut roots = signed_pairs(&model, n);
            for i in 0..n {
                roots.push(model.e(i).scale(&int(long)));
                roots.push(model.e(i).scale(&int(-long)));
            }
            let mut chamber = descending(n, 0..n, 1);
            chamber.push(ChamberInequality {
                label: format!("x{n} >= 0"),
                coeffs: functional(n, &[(n - 1, int(1))]),
            });
            let highest = if t.family == Family::B {
                model.e(0).add(&model.e(1))
            } else {
                model.e(0).scale(&int(2))
            };
            RawData {
                model,
                roots,
                chamber,
                highest,
                implied: vec![],
            }
        }
        Family::D => {
            let model = CartanModel::euclidean(n);
            let roots = signed_pairs(&model, n);
            let mut chamber = descending(n, 0..n, 1);
            chamber.push(ChamberInequality {
                label: format!("x{} >= -x{}", n - 1, n),
                coeffs: functional(n, &[(n - 2, int(1)), (n - 1, int(1))]),
            });
            RawData {
                highest: model.e(0).add(&model.e(1)),
                model,
                roots,
                chamber,
                implied: vec![],
            }
        }
        Family::E if n == 6 => {
            let model = CartanModel::epsilon_sum_zero(6);
            let eps = model.e(0);
            let eps_i = |i: usize| model.epsilon_i(i);
            let mut roots = vec![eps.scale(&int(2)), eps.scale(&int(-2))];
            for i in 0..6 {
                for j in 0..6 {
                    if i != j {
                        roots.push(eps_i(i).sub(&eps_i(j)));
                    }
                }
            }
            for c in (0..6).combinations(3) {
                let s = eps_i(c[0]).add(&eps_i(c[1])).add(&eps_i(c[2]));
                roots.push(s.add(&eps));
                roots.push(s.sub(&eps));
            }
            let dim = 7;
            let mut chamber = descending(dim, 2..7, 0);
            chamber.push(ChamberInequality {
                label: "x1 + x5 + x6 >= n/2".into(),
                coeffs: functional(dim, &[(1, int(1)), (5, int(1)), (6, int(1)), (0, rat(-1, 2))]),
            });
            chamber.push(ChamberInequality {
                label: "n/2 >= 0".into(),
                coeffs: functional(dim, &[(0, rat(1, 2))]),
            });
            RawData {
                highest: eps_i(0).sub(&eps_i(5)),
                model,
                roots,
                chamber,
                implied: vec![("x1 >= x2".into(), functional(dim, &[(1, int(1)), (2, int(-1))]))],
            }
        }
        Family::E if n == 7 => {
            let model = CartanModel::sum_zero(8);
            let eps_i = |i: usize| model.epsilon_i(i);
            let mut roots = Vec::new();
            for i in 0..8 {
                for j in 0..8 {
                    if i != j {
                        roots.push(eps_i(i).sub(&eps_i(j)));
                    }
                }
            }
            for c in (0..8).combinations(4) {
                roots.push(c.iter().fold(model.zero(), |acc, &i| acc.add(&eps_i(i))));
            }
            let mut chamber = descending(8, 1..8, 1);
            chamber.push(ChamberInequality {
                label: "x1 + x6 + x7 + x8 >= 0".into(),
                coeffs: functional(8, &[(0, int(1)), (5, int(1)), (6, int(1)), (7, int(1))]),
            });
            RawData {
                highest: eps_i(0).sub(&eps_i(7)),
                model,
                roots,
                chamber,
                implied: vec![("x1 >= x2".into(), functional(8, &[(0, int(1)), (1, int(-1))]))],
            }
        }
        Family::E => {
            let model = CartanModel::sum_zero(9);
            let eps_i = |i: usize| model.epsilon_i(i);
            let mut roots = Vec::new();
            for i in 0..9 {
                for j in 0..9 {
                    if i != j {
                        roots.push(eps_i(i).sub(&eps_i(j)));
                    }
                }
            }
            for c in (0..9).combinations(3) {
                let s = c.iter().fold(model.zero(), |acc, &i| acc.add(&eps_i(i)));
                roots.push(s.neg());
                roots.push(s);
            }
            let mut chamber = descending(9, 1..9, 1);
            chamber.push(ChamberInequality {
                label: "x2 + x3 + x4 <= 0".into(),
                coeffs: functional(9, &[(1, int(-1)), (2, int(-1)), (3, int(-1))]),
            });
            RawData {
                highest: eps_i(0).sub(&eps_i(8)),
                model,
                roots,
                chamber,
                implied: vec![("x1 >= x2".into(), functional(9, &[(0, int(1)), (1, int(-1))]))],
            }
        }
        Family::F => {
            let model = CartanModel::euclidean(4);
            let mut roots = signed_pairs(&model, 4);
            for i in 0..4 {
                roots.push(model.e(i));
                roots.push(model.e(i).neg());
            }
            for signs in 0..16u32 {
                let coords = (0..4)
                    .map(|k| if signs >> k & 1 == 1 { rat(-1, 2) } else { rat(1, 2) })
                    .collect();
                roots.push(RatVector::new(coords));
            }
            let mut chamber = descending(4, 1..4, 1);
            chamber.push(ChamberInequality {
                label: "x4 >= 0".into(),
                coeffs: functional(4, &[(3, int(1))]),
            });
            chamber.push(ChamberInequality {
                label: "x1 >= x2 + x3 + x4".into(),
                coeffs: functional(4, &[(0, int(1)), (1, int(-1)), (2, int(-1)), (3, int(-1))]),
            });
            RawData {
                highest: model.e(0).add(&model.e(1)),
                model,
                roots,
                chamber,
                implied: vec![("x1 >= x2".into(), functional(4, &[(0, int(1)), (1, int(-1))]))],
            }
        }
        Family::G => {
            let model = CartanModel::sum_zero(3);
            let eps_i = |i: usize| model.epsilon_i(i);
            let mut roots = Vec::new();
            for i in 0..3 {
                roots.push(eps_i(i));
                roots.push(eps_i(i).neg());
                for j in 0..3 {
                    if i != j {
                        roots.push(eps_i(i).sub(&eps_i(j)));
                    }
                }
            }
            let chamber = vec![
                ChamberInequality {
                    label: "0 >= x2".into(),
                    coeffs: functional(3, &[(1, int(-1))]),
                },
                ChamberInequality {
                    label: "x2 >= x3".into(),
                    coeffs: functional(3, &[(1, int(1)), (2, int(-1))]),
                },
            ];
            RawData {
                highest: eps_i(0).sub(&eps_i(2)),
                model,
                roots,
                chamber,
                implied: vec![("x1 >= x2".into(), functional(3, &[(0, int(1)), (1, int(-1))]))],
            }
        }
    }
}

/// Constructs the root system of `t` and cross-checks it.
pub fn build_root_system(t: SimpleType) -> Result<RootSystem> {
    // re-validate in case the caller bypassed SimpleType::new
    let t = SimpleType::new(t.family, t.rank)?;
    let raw = raw_data(t);
    let model = raw.model;
    let mut vecs = raw.roots;
    vecs.sort();
    vecs.dedup();
    if vecs.len() != t.root_count() {
        return Err(Error::Inconsistent(format!(
            "{t}: generated {} roots, expected {}",
            vecs.len(),
            t.root_count()
        )));
    }
    for v in &vecs {
        model.check(v)?;
    }
    let roots: Vec<Root> = vecs
        .into_iter()
        .map(|v| Root {
            norm_sq: model.norm_sq(&v),
            vector: v,
        })
        .collect();
    let index: HashMap<RatVector, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.vector.clone(), i))
        .collect();

    if raw.chamber.len() != t.rank {
        return Err(Error::Inconsistent(format!("{t}: chamber has {} walls", raw.chamber.len())));
    }
    // interior point: <x, u_i> = 1 for each wall normal u_i
    let normals: Vec<RatVector> = raw
        .chamber
        .iter()
        .map(|c| model.represent_functional(&c.coeffs))
        .collect();
    let r = t.rank;
    let mut g = RatMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            g.set(i, j, model.form(&normals[i], &normals[j]));
        }
    }
    let y = g
        .inverse()
        .map_err(|_| Error::Inconsistent(format!("{t}: chamber walls are dependent")))?
        .mul_vec(&vec![Rational::one(); r]);
    let interior = y
        .iter()
        .zip(&normals)
        .fold(model.zero(), |acc, (c, u)| acc.axpy(c, u));
    if !raw
        .chamber
        .iter()
        .all(|c| CartanModel::evaluate(&c.coeffs, &interior).is_positive())
    {
        return Err(Error::Inconsistent(format!("{t}: interior point not strictly inside")));
    }

    let positive: Vec<usize> = (0..roots.len())
        .filter(|&i| {
            let p = model.form(&roots[i].vector, &interior);
            assert!(!p.is_zero(), "interior point orthogonal to a root");
            p.is_positive()
        })
        .collect();
    let positive_set: std::collections::HashSet<&RatVector> =
        positive.iter().map(|&i| &roots[i].vector).collect();
    let decomposable = |v: &RatVector| {
        positive
            .iter()
            .any(|&i| positive_set.contains(&v.sub(&roots[i].vector)))
    };
    let simple_unordered: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&i| !decomposable(&roots[i].vector))
        .collect();
    if simple_unordered.len() != r {
        return Err(Error::Inconsistent(format!(
            "{t}: found {} simple roots",
            simple_unordered.len()
        )));
    }
    // order simple roots by wall; each must be a positive multiple of its normal
    let mut simple = Vec::with_capacity(r);
    for (wall, u) in raw.chamber.iter().zip(&normals) {
        let hit = simple_unordered.iter().copied().find(|&i| {
            let a = &roots[i].vector;
            let k = model.form(a, u) / model.norm_sq(a);
            k.is_positive() && a.scale(&k) == *u
        });
        match hit {
            Some(i) => simple.push(i),
            None => {
                return Err(Error::Inconsistent(format!(
                    "{t}: wall {:?} has no simple root",
                    wall.label
                )))
            }
        }
    }

    let mut gs = RatMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            gs.set(i, j, model.form(&roots[simple[i]].vector, &roots[simple[j]].vector));
        }
    }
    let simple_gram_inv = gs.inverse().map_err(|_| Error::Inconsistent("simple roots dependent".into()))?;

    let highest = *index
        .get(&raw.highest)
        .ok_or_else(|| Error::Inconsistent(format!("{t}: stated highest root is not a root")))?;

    let mut rs = RootSystem {
        stype: t,
        model,
        roots,
        index,
        positive,
        simple,
        highest,
        chamber: raw.chamber,
        interior,
        simple_gram_inv,
        implied: Vec::new(),
        lattices: OnceLock::new(),
        longest_word: OnceLock::new(),
        minus_id: OnceLock::new(),
        weights: OnceLock::new(),
        coweights: OnceLock::new(),
    };

    let delta = rs.highest_root().vector.clone();
    if !rs.is_dominant(&delta) {
        return Err(Error::Inconsistent(format!("{t}: highest root is not dominant")));
    }
    for root in &rs.roots {
        let diff = rs.simple_coefficients(&delta.sub(&root.vector));
        if diff.iter().any(Signed::is_negative) {
            return Err(Error::Inconsistent(format!(
                "{t}: {} is not below the highest root",
                root.vector
            )));
        }
    }
    rs.implied = raw
        .implied
        .into_iter()
        .map(|(label, coeffs)| {
            let u = rs.model.represent_functional(&coeffs);
            let implied = rs.simple_coefficients(&u).iter().all(|c| !c.is_negative());
            ImpliedInequality { label, implied }
        })
        .collect();
    Ok(rs)
}

impl RootSystem {
    pub fn simple_type(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank
    }

    pub fn model(&self) -> &CartanModel {
        &self.model
    }

    /// All roots, ascending lexicographic by coordinates.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_vectors(&self) -> impl Iterator<Item = &RatVector> {
        self.roots.iter().map(|r| &r.vector)
    }

    pub fn positive_roots(&self) -> Vec<&Root> {
        self.positive.iter().map(|&i| &self.roots[i]).collect()
    }

    /// Simple roots, one per chamber wall in wall order.
    pub fn simple_roots(&self) -> Vec<&Root> {
        self.simple.iter().map(|&i| &self.roots[i]).collect()
    }

    pub fn simple_root_vectors(&self) -> Vec<RatVector> {
        self.simple.iter().map(|&i| self.roots[i].vector.clone()).collect()
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn chamber(&self) -> &[ChamberInequality] {
        &self.chamber
    }

    /// Strictly interior chamber point used to decide positivity.
    pub fn interior_point(&self) -> &RatVector {
        &self.interior
    }

    /// Inequalities the chamber is asserted to imply, with the verdict.
    pub fn implied_inequalities(&self) -> &[ImpliedInequality] {
        &self.implied
    }

    pub fn root_index(&self, v: &RatVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &RatVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn root(&self, v: &RatVector) -> Result<&Root> {
        self.root_index(v)
            .map(|i| &self.roots[i])
            .ok_or_else(|| Error::NotARoot(v.to_string()))
    }

    pub fn pairing(&self, a: &RatVector, b: &RatVector) -> Rational {
        self.model.form(a, b)
    }

    /// Satisfies every chamber inequality.
    pub fn is_dominant(&self, v: &RatVector) -> bool {
        self.chamber.iter().all(|c| c.holds(v))
    }

    /// Dominance decided through the simple roots instead of the walls.
    pub fn is_dominant_by_simple_roots(&self, v: &RatVector) -> bool {
        self.simple
            .iter()
            .all(|&i| !self.model.form(&self.roots[i].vector, v).is_negative())
    }

    /// Coefficients of `v` (in the span) in the simple-root basis.
    pub fn simple_coefficients(&self, v: &RatVector) -> Vec<Rational> {
        let b: Vec<Rational> = self
            .simple
            .iter()
            .map(|&i| self.model.form(&self.roots[i].vector, v))
            .collect();
        self.simple_gram_inv.mul_vec(&b)
    }

    /// Coefficients of the highest root in the simple roots.
    pub fn marks(&self) -> Vec<Rational> {
        self.simple_coefficients(&self.highest_root().vector)
    }

    pub fn coroot(&self, eta: &RatVector) -> RatVector {
        eta.scale(&(int(2) / self.model.norm_sq(eta)))
    }

    /// Basis of the span dual to the simple coroots.
    pub fn fundamental_weights(&self) -> Vec<RatVector> {
        self.weights.get_or_init(|| self.compute_fundamental_weights()).clone()
    }

    fn compute_fundamental_weights(&self) -> Vec<RatVector> {
        let r = self.rank();
        let simple = self.simple_root_vectors();
        let mut cartan = RatMatrix::zeros(r, r);
        for k in 0..r {
            for j in 0..r {
                cartan.set(k, j, self.model.form(&simple[k], &self.coroot(&simple[j])));
            }
        }
        let inv = cartan.inverse().expect("Cartan matrix is invertible");
        (0..r)
            .map(|i| {
                (0..r).fold(self.model.zero(), |acc, k| acc.axpy(inv.get(i, k), &simple[k]))
            })
            .collect()
    }

    /// Basis of the span dual to the simple roots.
    pub fn fundamental_coweights(&self) -> Vec<RatVector> {
        self.coweights.get_or_init(|| self.compute_fundamental_coweights()).clone()
    }

    fn compute_fundamental_coweights(&self) -> Vec<RatVector> {
        let r = self.rank();
        let simple = self.simple_root_vectors();
        (0..r)
            .map(|i| {
                (0..r).fold(self.model.zero(), |acc, k| {
                    acc.axpy(self.simple_gram_inv.get(i, k), &simple[k])
                })
            })
            .collect()
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> RatVector {
        self.positive
            .iter()
            .fold(self.model.zero(), |acc, &i| acc.add(&self.roots[i].vector))
            .scale(&rat(1, 2))
    }

    /// `max_eta |<eta, v>|` with the lexicographically first root attaining
    /// `<eta, v> = +max` (roots come in `±` pairs).
    /// JSON description: type, model, roots, highest root, simple roots,
    /// chamber.
    pub fn describe(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.stype,
            "rank": self.rank(),
            "model": {
                "tag": self.model.tag(),
                "form": self.model.gram_description(),
                "ambient_dim": self.model.ambient_dim(),
            },
            "root_count": self.roots.len(),
            "roots": self.roots,
            "highest_root": self.highest_root(),
            "simple_roots": self.simple_roots(),
            "chamber": self.chamber,
            "interior_point": self.interior,
            "fundamental_weights": self.fundamental_weights(),
            "implied_inequalities": self.implied,
            "minus_id_in_weyl": crate::weyl::minus_id_in_weyl(self),
        })
    }

    pub fn max_abs_pairing(&self, v: &RatVector) -> (Rational, &Root) {
        let mut best: Option<(Rational, usize)> = None;
        for (i, r) in self.roots.iter().enumerate() {
            let p = self.model.form(&r.vector, v);
            if best.as_ref().map_or(true, |(b, _)| p > *b) {
                best = Some((p, i));
            }
        }
        let (p, i) = best.expect("root systems are nonempty");
        (p, &self.roots[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn v(xs: &[i64]) -> RatVector {
        RatVector::from_i64(xs)
    }

    #[test]
    fn type_ranges() {
        assert!("A1".parse::<SimpleType>().is_ok());
        assert!(matches!("B1".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("C2".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("D3".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("E5".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("E9".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("F3".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("G3".parse::<SimpleType>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("X3".parse::<SimpleType>(), Err(Error::UnknownType(_))));
        assert_eq!(t("d5").to_string(), "D5");
    }

    #[test]
    fn g2_roots_and_highest_root() {
        let rs = build_root_system(t("G2")).unwrap();
        assert_eq!(rs.roots().len(), 12);
        let short = rs.roots().iter().filter(|r| r.norm_sq == rat(2, 3)).count();
        assert_eq!(short, 6);
        assert_eq!(rs.highest_root().vector, v(&[1, 0, -1]));
    }

    #[test]
    fn e8_root_count_by_shape() {
        let rs = build_root_system(t("E8")).unwrap();
        assert_eq!(rs.roots().len(), 240);
        let integral = rs
            .roots()
            .iter()
            .filter(|r| r.vector.coords().iter().all(rational::is_integer))
            .count();
        assert_eq!(integral, 72);
        assert!(rs.roots().iter().all(|r| r.norm_sq == int(2)));
    }

    #[test]
    fn a1_roots() {
        let rs = build_root_system(t("A1")).unwrap();
        let got: Vec<_> = rs.root_vectors().cloned().collect();
        assert_eq!(got, vec![v(&[-1, 1]), v(&[1, -1])]);
    }

    #[test]
    fn dominance_examples() {
        let b2 = build_root_system(t("B2")).unwrap();
        assert!(b2.is_dominant(&v(&[1, 0])));
        let a2 = build_root_system(t("A2")).unwrap();
        assert!(!a2.is_dominant(&v(&[1, -1, 0])));
        let d4 = build_root_system(t("D4")).unwrap();
        assert!(d4.is_dominant(&v(&[1, 1, 1, -1])));
    }

    #[test]
    fn simple_root_examples() {
        let a2 = build_root_system(t("A2")).unwrap();
        assert_eq!(a2.simple_root_vectors(), vec![v(&[1, -1, 0]), v(&[0, 1, -1])]);
        let b2 = build_root_system(t("B2")).unwrap();
        assert_eq!(b2.simple_root_vectors(), vec![v(&[1, -1]), v(&[0, 1])]);
        let g2 = build_root_system(t("G2")).unwrap();
        let m = g2.model().clone();
        assert_eq!(
            g2.simple_root_vectors(),
            vec![m.epsilon_i(1).neg(), m.epsilon_i(1).sub(&m.epsilon_i(2))]
        );
    }

    #[test]
    fn fundamental_weight_examples() {
        let a1 = build_root_system(t("A1")).unwrap();
        assert_eq!(
            a1.fundamental_weights(),
            vec![RatVector::new(vec![rat(1, 2), rat(-1, 2)])]
        );
        let b2 = build_root_system(t("B2")).unwrap();
        assert_eq!(
            b2.fundamental_weights(),
            vec![v(&[1, 0]), RatVector::new(vec![rat(1, 2), rat(1, 2)])]
        );
    }

    #[test]
    fn every_type_builds_and_notes_hold() {
        for st in SimpleType::default_sweep() {
            let rs = build_root_system(st).unwrap();
            assert_eq!(rs.simple_roots().len(), st.rank());
            assert_eq!(rs.fundamental_weights().len(), st.rank());
            for note in rs.implied_inequalities() {
                assert!(note.implied, "{st}: {} not implied", note.label);
            }
        }
    }

    #[test]
    fn degree_products() {
        assert_eq!(t("G2").weyl_order(), 12);
        assert_eq!(t("F4").weyl_order(), 1152);
        assert_eq!(t("A3").weyl_order(), 24);
        assert_eq!(t("B3").weyl_order(), 48);
        assert_eq!(t("D4").weyl_order(), 192);
        assert_eq!(t("E6").weyl_order(), 51840);
    }

    #[test]
    fn max_pairing_maximizer() {
        let a2 = build_root_system(t("A2")).unwrap();
        let eps1 = a2.model().epsilon_i(0);
        let (m, root) = a2.max_abs_pairing(&eps1);
        assert_eq!(m, int(1));
        assert_eq!(root.vector, v(&[1, -1, 0]));
    }
}
