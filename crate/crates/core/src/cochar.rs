//! Coroot, cocharacter, root and weight lattices, the quotient of the
//! cocharacter lattice by the coroot lattice, and semifree representatives.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::enumerate_dominant;
use crate::lattice::{finite_quotient, lattice_from_generators, FiniteAbelianGroup, Lattice};
use crate::model::{CartanModel, RatVector};
use crate::rational::{self, int, is_integer, rat, Rational};
use crate::roots::{ser_rat, Family, RootSystem, SimpleType};

#[derive(Clone, Debug)]
pub struct LatticeFamily {
    /// Integer span of the roots.
    pub root_lattice: Lattice,
    /// Integer span of the coroots `2 eta / <eta, eta>`.
    pub coroot: Lattice,
    /// Dual of the root lattice.
    pub cochar: Lattice,
    /// Dual of the coroot lattice.
    pub weight: Lattice,
}

fn build_family(rs: &RootSystem) -> Result<LatticeFamily> {
    let roots: Vec<RatVector> = rs.root_vectors().cloned().collect();
    let coroots: Vec<RatVector> = roots.iter().map(|r| rs.coroot(r)).collect();
    let root_lattice = lattice_from_generators(&roots, rs.model())?;
    let coroot = lattice_from_generators(&coroots, rs.model())?;
    let cochar = root_lattice.dual()?;
    let weight = coroot.dual()?;
    Ok(LatticeFamily {
        root_lattice,
        coroot,
        cochar,
        weight,
    })
}

/// The four lattices of `rs`, computed once and cached on the system.
pub fn lattice_family(rs: &RootSystem) -> &LatticeFamily {
    rs.lattices
        .get_or_init(|| build_family(rs).expect("root data spans a nondegenerate lattice"))
}

/// A validated element of the cocharacter lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cocharacter(RatVector);

impl Cocharacter {
    pub fn new(rs: &RootSystem, v: RatVector) -> Result<Self> {
        rs.model().check(&v)?;
        match lattice_family(rs).cochar.contains(&v) {
            Ok(true) => Ok(Cocharacter(v)),
            _ => Err(Error::NotACocharacter(v.to_string())),
        }
    }

    /// Representative of coset `index` in the certified transversal.
    pub fn from_coset(rs: &RootSystem, index: usize) -> Result<Self> {
        let table = semifree_transversal(rs)?;
        table
            .semifree_reps
            .iter()
            .find(|r| r.coset == index)
            .map(|r| Cocharacter(r.lambda.clone()))
            .ok_or_else(|| {
                Error::Usage(format!(
                    "coset index {index} out of range (group order {})",
                    table.group.order()
                ))
            })
    }

    pub fn vector(&self) -> &RatVector {
        &self.0
    }

    pub fn into_vector(self) -> RatVector {
        self.0
    }
}

/// A closed-form membership description of one lattice.
struct ClosedForm {
    lattice: &'static str,
    description: String,
    /// Grid denominator for the candidate scan.
    denominator: i64,
    predicate: Box<dyn Fn(&RatVector) -> bool>,
}

fn all_pairs(xs: &[Rational], f: impl Fn(&Rational, &Rational) -> bool) -> bool {
    xs.iter().all(|a| xs.iter().all(|b| f(a, b)))
}

fn closed_forms(t: SimpleType) -> Vec<ClosedForm> {
    let n = t.rank();
    let integral = |v: &RatVector| v.coords().iter().all(is_integer);
    let even_sum = move |v: &RatVector| {
        integral(v) && is_integer(&(v.coords().iter().sum::<Rational>() / int(2)))
    };
    let plus_minus = |v: &RatVector| {
        all_pairs(v.coords(), |a, b| is_integer(&(a + b)) && is_integer(&(a - b)))
    };
    let differences = |xs: &[Rational]| all_pairs(xs, |a, b| is_integer(&(a - b)));
    match t.family() {
        Family::A => vec![
            ClosedForm {
                lattice: "cochar",
                description: "x_i - x_j integral".into(),
                denominator: n as i64 + 1,
                predicate: Box::new(move |v| differences(v.coords())),
            },
            ClosedForm {
                lattice: "coroot",
                description: "integral coordinates".into(),
                denominator: 1,
                predicate: Box::new(integral),
            },
        ],
        Family::B => vec![
            ClosedForm {
                lattice: "cochar",
                description: "integral coordinates".into(),
                denominator: 1,
                predicate: Box::new(integral),
            },
            ClosedForm {
                lattice: "coroot",
                description: "integral coordinates with even sum".into(),
                denominator: 1,
                predicate: Box::new(even_sum),
            },
        ],
        Family::C => vec![
            ClosedForm {
                lattice: "cochar",
                description: "x_i +- x_j integral".into(),
                denominator: 2,
                predicate: Box::new(plus_minus),
            },
            ClosedForm {
                lattice: "coroot",
                description: "integral coordinates".into(),
                denominator: 1,
                predicate: Box::new(integral),
            },
        ],
        Family::D => vec![
            ClosedForm {
                lattice: "cochar",
                description: "x_i +- x_j integral".into(),
                denominator: 2,
                predicate: Box::new(plus_minus),
            },
            ClosedForm {
                lattice: "coroot",
                description: "integral coordinates with even sum".into(),
                denominator: 1,
                predicate: Box::new(even_sum),
            },
        ],
        Family::E if n == 6 => vec![
            ClosedForm {
                lattice: "cochar",
                description: "n integral, n/2 + 3 x_i integral, x_i - x_j integral".into(),
                denominator: 6,
                predicate: Box::new(move |v| {
                    let c = v.coords();
                    let half_n = &c[0] / int(2);
                    is_integer(&c[0])
                        && c[1..].iter().all(|x| is_integer(&(&half_n + int(3) * x)))
                        && differences(&c[1..])
                }),
            },
            ClosedForm {
                lattice: "coroot",
                description: "n integral, n/2 + x_i integral".into(),
                denominator: 6,
                predicate: Box::new(|v| {
                    let c = v.coords();
                    let half_n = &c[0] / int(2);
                    is_integer(&c[0]) && c[1..].iter().all(|x| is_integer(&(&half_n + x)))
                }),
            },
        ],
        Family::E if n == 7 => vec![
            ClosedForm {
                lattice: "cochar",
                description: "4 x_i integral, x_i - x_j integral".into(),
                denominator: 4,
                predicate: Box::new(move |v| {
                    v.coords().iter().all(|x| is_integer(&(int(4) * x))) && differences(v.coords())
                }),
            },
            ClosedForm {
                lattice: "coroot",
                description: "x_i +- x_j integral".into(),
                denominator: 2,
                predicate: Box::new(plus_minus),
            },
        ],
        Family::E => simply_connected(
            "3 x_i integral, x_i - x_j integral",
            3,
            Box::new(move |v: &RatVector| {
                v.coords().iter().all(|x| is_integer(&(int(3) * x))) && differences(v.coords())
            }),
        ),
        Family::F => simply_connected("integral coordinates with even sum", 1, Box::new(even_sum)),
        Family::G => simply_connected("integral coordinates", 1, Box::new(integral)),
    }
}

/// One description serving both lattices, which coincide.
fn simply_connected(
    description: &str,
    denominator: i64,
    predicate: Box<dyn Fn(&RatVector) -> bool>,
) -> Vec<ClosedForm> {
    let shared: std::rc::Rc<dyn Fn(&RatVector) -> bool> = predicate.into();
    ["cochar", "coroot"]
        .into_iter()
        .map(|lattice| {
            let p = shared.clone();
            ClosedForm {
                lattice,
                description: description.to_string(),
                denominator,
                predicate: Box::new(move |v| p(v)),
            }
        })
        .collect()
}

/// Candidate points of the box `-1 <= x_k < 2` whose coordinates in the
/// constrained block share one fractional part `j / d`.
fn candidates(model: &CartanModel, d: i64) -> Vec<RatVector> {
    let dim = model.ambient_dim();
    let block = if model.has_epsilon_axis() { 1..dim } else { 0..dim };
    let m = block.len();
    let mut out = Vec::new();
    let extra: Vec<i64> = if model.has_epsilon_axis() {
        (-2..=2).collect()
    } else {
        vec![0]
    };
    let total = 3usize.pow(m as u32);
    for j in 0..d {
        for code in 0..total {
            let mut c = code;
            let z: Vec<i64> = (0..m)
                .map(|_| {
                    let x = (c % 3) as i64 - 1;
                    c /= 3;
                    x
                })
                .collect();
            // numerators over d
            let nums: Vec<i64> = z.iter().map(|zk| j + d * zk).collect();
            if model.is_sum_zero() && nums.iter().sum::<i64>() != 0 {
                continue;
            }
            for &e in &extra {
                let mut coords = Vec::with_capacity(dim);
                if model.has_epsilon_axis() {
                    coords.push(int(e));
                }
                coords.extend(nums.iter().map(|&x| rat(x, d)));
                out.push(RatVector::new(coords));
            }
        }
    }
    out
}

/// Lattice generated by the candidates that satisfy `pred`.
fn materialize(model: &CartanModel, d: i64, pred: &dyn Fn(&RatVector) -> bool) -> Option<Lattice> {
    let mut cur: Option<Lattice> = None;
    for v in candidates(model, d) {
        if v.is_zero() || !pred(&v) {
            continue;
        }
        if let Some(l) = &cur {
            if matches!(l.contains(&v), Ok(true)) {
                continue;
            }
        }
        let mut gens: Vec<RatVector> = cur.as_ref().map(|l| l.basis().to_vec()).unwrap_or_default();
        gens.push(v);
        cur = Some(lattice_from_generators(&gens, model).expect("nonempty generators"));
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeFormCheck {
    pub lattice: String,
    pub description: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeFormReport {
    #[serde(rename = "type")]
    pub stype: SimpleType,
    pub checks: Vec<LatticeFormCheck>,
}

impl LatticeFormReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Compares the computed lattices with their closed-form descriptions.
pub fn verify_lattice_forms(rs: &RootSystem) -> LatticeFormReport {
    let fam = lattice_family(rs);
    let mut checks = Vec::new();
    let forms = closed_forms(rs.simple_type());
    for form in &forms {
        let computed = if form.lattice == "cochar" {
            &fam.cochar
        } else {
            &fam.coroot
        };
        let basis_ok = computed.basis().iter().all(|b| (form.predicate)(b));
        let materialized = materialize(rs.model(), form.denominator, &form.predicate);
        let equal = materialized.as_ref() == Some(computed);
        let detail = if equal && basis_ok {
            "canonical bases agree".to_string()
        } else if !basis_ok {
            "a computed basis vector violates the description".to_string()
        } else {
            match materialized {
                Some(l) => format!("materialized basis {:?} differs from {:?}", l.basis(), computed.basis()),
                None => "no candidate satisfies the description".to_string(),
            }
        };
        checks.push(LatticeFormCheck {
            lattice: form.lattice.to_string(),
            description: form.description.clone(),
            pass: equal && basis_ok,
            detail,
        });
    }
    let dual_root = fam.cochar.dual().ok();
    checks.push(LatticeFormCheck {
        lattice: "root".into(),
        description: "dual of the cocharacter lattice".into(),
        pass: dual_root.as_ref() == Some(&fam.root_lattice),
        detail: String::new(),
    });
    let dual_weight = fam.weight.dual().ok();
    checks.push(LatticeFormCheck {
        lattice: "weight".into(),
        description: "dual of the coroot lattice".into(),
        pass: dual_weight.as_ref() == Some(&fam.coroot),
        detail: String::new(),
    });
    checks.push(LatticeFormCheck {
        lattice: "coroot".into(),
        description: "contained in the cocharacter lattice".into(),
        pass: fam.coroot.is_sublattice_of(&fam.cochar),
        detail: String::new(),
    });
    LatticeFormReport {
        stype: rs.simple_type(),
        checks,
    }
}

/// The standard representatives of the quotient, one per coset.
pub fn standard_representatives(rs: &RootSystem) -> Vec<RatVector> {
    let t = rs.simple_type();
    let m = rs.model();
    let n = t.rank();
    let half_sum = || RatVector::new(vec![rat(1, 2); n]);
    match t.family() {
        Family::A => (0..=n)
            .map(|k| (0..k).fold(m.zero(), |acc, i| acc.add(&m.epsilon_i(i))))
            .collect(),
        Family::B => vec![m.zero(), m.e(0)],
        Family::C => vec![m.zero(), half_sum()],
        Family::D => vec![m.zero(), m.e(0), half_sum(), half_sum().sub(&m.e(n - 1))],
        Family::E if n == 6 => {
            let s = m.epsilon_i(0).add(&m.epsilon_i(1));
            vec![m.zero(), s.clone(), s.neg()]
        }
        Family::E if n == 7 => vec![m.zero(), m.epsilon_i(0).add(&m.epsilon_i(1))],
        _ => vec![m.zero()],
    }
}

/// `max |<eta, lam>|` over the roots, with a maximizing root.
pub fn max_abs_root_pairing(rs: &RootSystem, lam: &RatVector) -> (Rational, RatVector) {
    let (p, root) = rs.max_abs_pairing(lam);
    (p, root.vector.clone())
}

pub fn is_semifree(rs: &RootSystem, lam: &RatVector) -> bool {
    max_abs_root_pairing(rs, lam).0 <= int(1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedRep {
    pub coset: usize,
    pub lambda: RatVector,
    #[serde(serialize_with = "ser_rat")]
    pub max_pairing: Rational,
    pub maximizing_root: RatVector,
    /// True when the representative is the standard one for its coset.
    pub standard: bool,
    /// A minimal-norm element of the coset.
    pub min_norm: RatVector,
    #[serde(serialize_with = "ser_rat")]
    pub min_norm_sq: Rational,
}

impl CertifiedRep {
    /// Recomputes every pairing independently of the stored maximizer.
    pub fn reverify(&self, rs: &RootSystem) -> bool {
        let brute = rs
            .root_vectors()
            .map(|r| rational::abs(&rs.pairing(r, &self.lambda)))
            .max()
            .unwrap_or_else(Rational::zero);
        brute == self.max_pairing
            && rs.pairing(&self.maximizing_root, &self.lambda) == self.max_pairing
            && rs.is_root(&self.maximizing_root)
    }
}

#[derive(Clone, Debug)]
pub struct Pi1Table {
    pub stype: SimpleType,
    pub group: FiniteAbelianGroup,
    pub standard_reps: Vec<RatVector>,
    pub semifree_reps: Vec<CertifiedRep>,
}

#[derive(Serialize)]
struct Pi1Json<'a> {
    #[serde(rename = "type")]
    stype: String,
    rank: usize,
    invariant_factors: Vec<u64>,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<&'a [CertifiedRep]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subgroups: Option<Vec<Vec<usize>>>,
}

impl Pi1Table {
    /// JSON form; representatives and subgroups only when `with_reps`.
    pub fn to_json(&self, with_reps: bool) -> serde_json::Value {
        let j = Pi1Json {
            stype: self.stype.to_string(),
            rank: self.stype.rank(),
            invariant_factors: self.group.invariant_factors_u64(),
            order: self.group.order(),
            representatives: with_reps.then_some(&self.semifree_reps[..]),
            subgroups: with_reps.then(|| self.group.subgroups()),
        };
        serde_json::to_value(j).expect("serializable")
    }
}

/// Checks that `reps` meet every coset of `group` exactly once.
fn check_transversal(group: &FiniteAbelianGroup, reps: &[RatVector]) -> Result<Vec<usize>> {
    if reps.len() != group.order() {
        return Err(Error::NotATransversal(format!(
            "{} representatives for a group of order {}",
            reps.len(),
            group.order()
        )));
    }
    let mut seen = vec![false; group.order()];
    let mut idx = Vec::with_capacity(reps.len());
    for r in reps {
        let i = group
            .coset_index(r)
            .map_err(|_| Error::NotATransversal(format!("{r} is not a cocharacter")))?;
        if seen[i] {
            return Err(Error::NotATransversal(format!("{r} repeats coset {i}")));
        }
        seen[i] = true;
        idx.push(i);
    }
    Ok(idx)
}

/// Minimal-norm element of each coset. Dominant elements suffice since the
/// Weyl group fixes every coset; searching `<lam, delta> <= b` is conclusive
/// once the best norm is at most `(b+1)^2 / <delta, delta>`.
fn min_norm_elements(rs: &RootSystem, group: &FiniteAbelianGroup) -> BTreeMap<usize, (Rational, RatVector)> {
    let fam = lattice_family(rs);
    let delta_sq = rs.highest_root().norm_sq.clone();
    let mut best: BTreeMap<usize, (Rational, RatVector)> = BTreeMap::new();
    for b in 1..=16u64 {
        best.clear();
        for lam in enumerate_dominant(rs, &fam.cochar, b) {
            let idx = group.coset_index(&lam).expect("cocharacter");
            let nsq = rs.model().norm_sq(&lam);
            let better = best
                .get(&idx)
                .map_or(true, |(q, v)| nsq < *q || (nsq == *q && lam < *v));
            if better {
                best.insert(idx, (nsq, lam));
            }
        }
        let bound = int(((b + 1) * (b + 1)) as i64) / &delta_sq;
        if best.len() == group.order() && best.values().all(|(q, _)| *q <= bound) {
            return best;
        }
    }
    best
}

fn certify(
    rs: &RootSystem,
    coset: usize,
    lambda: RatVector,
    standard: bool,
    min: &(Rational, RatVector),
) -> CertifiedRep {
    let (max_pairing, maximizing_root) = max_abs_root_pairing(rs, &lambda);
    CertifiedRep {
        coset,
        lambda,
        max_pairing,
        maximizing_root,
        standard,
        min_norm: min.1.clone(),
        min_norm_sq: min.0.clone(),
    }
}

/// Search a box of coroot-lattice translates of `rep` for a semifree one.
fn fallback_search(rs: &RootSystem, rep: &RatVector) -> Option<RatVector> {
    let basis = lattice_family(rs).coroot.basis();
    let r = basis.len();
    let total = 3usize.pow(r as u32);
    let mut found: Option<RatVector> = None;
    for code in 0..total {
        let mut c = code;
        let v = basis.iter().fold(rep.clone(), |acc, b| {
            let k = (c % 3) as i64 - 1;
            c /= 3;
            acc.axpy(&int(k), b)
        });
        if is_semifree(rs, &v) && found.as_ref().map_or(true, |f| v < *f) {
            found = Some(v);
        }
    }
    found
}

/// The quotient `cochar / coroot` with the standard representatives
/// verified as a transversal and certified semifree.
pub fn fundamental_group(rs: &RootSystem) -> Result<Pi1Table> {
    let fam = lattice_family(rs);
    let group = finite_quotient(&fam.coroot, &fam.cochar)?;
    let standard_reps = standard_representatives(rs);
    let cosets = check_transversal(&group, &standard_reps)?;
    let mins = min_norm_elements(rs, &group);
    let mut semifree_reps = Vec::new();
    for (rep, &coset) in standard_reps.iter().zip(&cosets) {
        let min = mins
            .get(&coset)
            .cloned()
            .unwrap_or_else(|| (rs.model().norm_sq(rep), rep.clone()));
        let cert = if is_semifree(rs, rep) {
            certify(rs, coset, rep.clone(), true, &min)
        } else {
            match fallback_search(rs, rep) {
                Some(v) => certify(rs, coset, v, false, &min),
                None => return Err(Error::TransversalIncomplete { coset }),
            }
        };
        semifree_reps.push(cert);
    }
    semifree_reps.sort_by_key(|c| c.coset);
    Ok(Pi1Table {
        stype: rs.simple_type(),
        group,
        standard_reps,
        semifree_reps,
    })
}

/// A certified semifree representative for every coset.
pub fn semifree_transversal(rs: &RootSystem) -> Result<Pi1Table> {
    let table = fundamental_group(rs)?;
    for c in &table.semifree_reps {
        if c.max_pairing > int(1) {
            return Err(Error::TransversalIncomplete { coset: c.coset });
        }
    }
    Ok(table)
}

/// Coordinates of the cocharacter-lattice point with fundamental-coweight
/// coefficients `c`.
pub fn from_coweight_coords(rs: &RootSystem, c: &[Rational]) -> RatVector {
    rs.fundamental_coweights()
        .iter()
        .zip(c)
        .fold(rs.model().zero(), |acc, (w, k)| acc.axpy(k, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn v(xs: &[i64]) -> RatVector {
        RatVector::from_i64(xs)
    }

    fn lat(m: &CartanModel, gens: &[RatVector]) -> Lattice {
        lattice_from_generators(gens, m).unwrap()
    }

    #[test]
    fn b2_lattices() {
        let b2 = rs("B2");
        let fam = lattice_family(&b2);
        let m = b2.model();
        assert_eq!(fam.cochar, lat(m, &[v(&[1, 0]), v(&[0, 1])]));
        assert_eq!(fam.coroot, lat(m, &[v(&[1, 1]), v(&[1, -1])]));
    }

    #[test]
    fn c3_coroot_is_standard() {
        let c3 = rs("C3");
        let m = c3.model();
        assert_eq!(lattice_family(&c3).coroot, lat(m, &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]));
        let half = RatVector::new(vec![rat(1, 2); 3]);
        assert!(lattice_family(&c3).cochar.contains(&half).unwrap());
    }

    #[test]
    fn e7_coroot_membership() {
        let e7 = rs("E7");
        let fam = lattice_family(&e7);
        let half = RatVector::new(vec![rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)]);
        assert!(fam.coroot.contains(&half).unwrap());
        let quarter = e7.model().epsilon_i(0).add(&e7.model().epsilon_i(1));
        assert!(!fam.coroot.contains(&quarter).unwrap());
        assert!(fam.cochar.contains(&quarter).unwrap());
    }

    #[test]
    fn lattice_forms_small_types() {
        for t in ["A2", "B3", "C3", "D5", "E6", "G2"] {
            let r = verify_lattice_forms(&rs(t));
            assert!(r.all_pass(), "{t}: {:?}", r.checks);
        }
    }

    #[test]
    fn pi1_examples() {
        let a3 = fundamental_group(&rs("A3")).unwrap();
        assert_eq!(a3.group.invariant_factors_u64(), vec![4]);
        let d4 = fundamental_group(&rs("D4")).unwrap();
        assert_eq!(d4.group.invariant_factors_u64(), vec![2, 2]);
        let d5 = fundamental_group(&rs("D5")).unwrap();
        assert_eq!(d5.group.invariant_factors_u64(), vec![4]);
        let f4 = fundamental_group(&rs("F4")).unwrap();
        assert!(f4.group.is_trivial());
        assert_eq!(f4.semifree_reps.len(), 1);
    }

    #[test]
    fn semifree_examples() {
        let c3 = rs("C3");
        assert!(is_semifree(&c3, &RatVector::new(vec![rat(1, 2); 3])));
        let a2 = rs("A2");
        let (p, root) = max_abs_root_pairing(&a2, &v(&[1, 1, -2]));
        assert_eq!(p, int(3));
        assert!(!is_semifree(&a2, &v(&[1, 1, -2])));
        assert!(rs("E8").root_vectors().all(|r| r.dim() == 9));
        assert!(is_semifree(&a2, &v(&[0, 0, 0])));
        assert_eq!(a2.pairing(&root, &v(&[1, 1, -2])), int(3));
        assert_eq!(a2.pairing(&v(&[1, 0, -1]), &v(&[1, 1, -2])), int(3));
    }

    #[test]
    fn e6_transversal() {
        let e6 = rs("E6");
        let t = semifree_transversal(&e6).unwrap();
        assert_eq!(t.group.invariant_factors_u64(), vec![3]);
        for c in &t.semifree_reps {
            assert!(c.standard);
            assert!(c.reverify(&e6));
            if c.coset != 0 {
                assert_eq!(c.max_pairing, int(1));
            }
        }
    }

    #[test]
    fn min_norm_is_minuscule_size() {
        // nontrivial minimal elements pair to 1 with the highest root
        let a4 = rs("A4");
        let t = fundamental_group(&a4).unwrap();
        for c in &t.semifree_reps {
            if c.coset != 0 {
                assert_eq!(a4.pairing(&a4.highest_root().vector, &c.min_norm), int(1));
            }
        }
    }
}
