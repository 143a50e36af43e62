//! Sweeps over types and dominant cocharacters, and report rendering.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cochar::{fundamental_group, lattice_family, semifree_transversal, verify_lattice_forms};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::model::RatVector;
use crate::rational::{self, int, Rational};
use crate::reversor::{
    build_reversor, claim_c_check, decompose_orthogonal, verify_claim_b, verify_claim_d,
    OrthogonalDecomposition,
};
use crate::roots::{build_root_system, Family, RootSystem, SimpleType};
use crate::weyl::{minus_id_in_weyl, WeylWord};

/// Per-coordinate bound `|x_k| <= box_k` for dominant `lam` with
/// `<lam, delta> <= bound`, from `lam = sum c_i w_i`, `sum c_i m_i <= bound`.
pub fn coordinate_box(rs: &RootSystem, bound: u64) -> Vec<Rational> {
    let coweights = rs.fundamental_coweights();
    let marks = rs.marks();
    let dim = rs.model().ambient_dim();
    (0..dim)
        .map(|k| {
            coweights
                .iter()
                .zip(&marks)
                .map(|(w, m)| rational::abs(&w.coords()[k]) / m)
                .max()
                .unwrap_or_else(|| int(0))
                * int(bound as i64)
        })
        .collect()
}

/// Dominant points of `lattice` with `<lam, delta> <= bound`, sorted.
pub fn enumerate_dominant(rs: &RootSystem, lattice: &Lattice, bound: u64) -> Vec<RatVector> {
    let simple = rs.simple_root_vectors();
    // lattice points pair with simple roots in (1/den) Z
    let mut den = BigInt::one();
    for b in lattice.basis() {
        for a in &simple {
            den = den.lcm(rs.pairing(a, b).denom());
        }
    }
    let den: i64 = den.try_into().expect("small denominator");
    let marks: Vec<i64> = rs
        .marks()
        .iter()
        .map(|m| rational::to_i64(m).expect("integral marks"))
        .collect();
    let coweights = rs.fundamental_coweights();
    let budget = bound as i64 * den;
    let mut out = Vec::new();
    let mut ks = vec![0i64; marks.len()];

    fn go(
        i: usize,
        left: i64,
        marks: &[i64],
        ks: &mut Vec<i64>,
        emit: &mut dyn FnMut(&[i64]),
    ) {
        if i == marks.len() {
            emit(ks);
            return;
        }
        let mut k = 0;
        while k * marks[i] <= left {
            ks[i] = k;
            go(i + 1, left - k * marks[i], marks, ks, emit);
            k += 1;
        }
        ks[i] = 0;
    }

    let model = rs.model().clone();
    let mut emit = |ks: &[i64]| {
        let v = ks
            .iter()
            .zip(&coweights)
            .fold(model.zero(), |acc, (k, w)| acc.axpy(&rational::rat(*k, den), w));
        if matches!(lattice.contains(&v), Ok(true)) {
            out.push(v);
        }
    };
    go(0, budget, &marks, &mut ks, &mut emit);
    out.sort();
    let bx = coordinate_box(rs, bound);
    for v in &out {
        assert!(
            v.coords().iter().zip(&bx).all(|(x, b)| rational::abs(x) <= *b),
            "{v} escapes the coordinate box"
        );
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Pi1,
    Transversal,
    Lattices,
    A,
    B,
    C,
    D,
    Reversor,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Pi1,
        Claim::Transversal,
        Claim::Lattices,
        Claim::A,
        Claim::B,
        Claim::C,
        Claim::D,
        Claim::Reversor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Pi1 => "pi1",
            Claim::Transversal => "transversal",
            Claim::Lattices => "lattices",
            Claim::A => "a",
            Claim::B => "b",
            Claim::C => "c",
            Claim::D => "d",
            Claim::Reversor => "reversor",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Usage(format!("unknown claim {s:?}")))
    }
}

impl Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

pub fn parse_claims(s: &str) -> Result<BTreeSet<Claim>> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(str::parse).collect()
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub types: Vec<SimpleType>,
    pub claims: BTreeSet<Claim>,
    pub pairing_bound: u64,
    pub claim_a_bound: u64,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            types: SimpleType::default_sweep(),
            claims: Claim::ALL.into_iter().collect(),
            pairing_bound: 8,
            claim_a_bound: 2,
            seed: 0,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.pairing_bound == 0 || self.claim_a_bound == 0 {
            return Err(Error::Usage("bounds must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub id: String,
    pub system: SimpleType,
    pub claim: Claim,
    pub status: Status,
    /// Certificate for a pass, witness for a fail, reason otherwise.
    pub witness: Value,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub lambda: Option<RatVector>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub cases: Vec<Case>,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.cases {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inapplicable => s.inapplicable += 1,
            }
        }
        s
    }

    pub fn has_failures(&self) -> bool {
        self.cases.iter().any(|c| c.status == Status::Fail)
    }

    pub fn sort(&mut self) {
        self.cases.sort_by(|a, b| {
            (a.system, a.claim, &a.lambda, &a.id).cmp(&(b.system, b.claim, &b.lambda, &b.id))
        });
    }

    pub fn filter(&self, t: SimpleType, claim: Claim) -> impl Iterator<Item = &Case> {
        self.cases
            .iter()
            .filter(move |c| c.system == t && c.claim == claim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Usage(format!("unknown format {other:?}"))),
        }
    }
}

pub fn summary_line(s: &Summary) -> String {
    format!("{} pass / {} fail / {} inapplicable", s.pass, s.fail, s.inapplicable)
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "version": 1,
                "cases": r.cases,
                "summary": r.summary(),
            });
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &r.cases {
                s.push_str(&format!("{:<12} {} ({} ms)", c.status.to_string(), c.id, c.elapsed_ms));
                if c.status != Status::Pass {
                    s.push_str(&format!("  {}", c.witness));
                }
                s.push('\n');
            }
            s.push_str(&summary_line(&r.summary()));
            s.push('\n');
            s
        }
    }
}

/// Expected invariant factors of `cochar / coroot`.
pub fn expected_pi1(t: SimpleType) -> Vec<u64> {
    let n = t.rank() as u64;
    match t.family() {
        Family::A => vec![n + 1],
        Family::B | Family::C => vec![2],
        Family::D if n % 2 == 0 => vec![2, 2],
        Family::D => vec![4],
        Family::E => match n {
            6 => vec![3],
            7 => vec![2],
            _ => vec![],
        },
        Family::F | Family::G => vec![],
    }
}

/// Decompositions written out by hand for some types, as root lists.
pub fn listed_decompositions(rs: &RootSystem) -> Vec<(String, Vec<RatVector>)> {
    let t = rs.simple_type();
    let m = rs.model();
    let n = t.rank();
    match (t.family(), n) {
        (Family::C, _) => vec![(
            "half the sum of 2e_i".into(),
            (0..n).map(|i| m.e(i).scale(&int(2))).collect(),
        )],
        (Family::E, 6) => {
            let eps = m.e(0);
            let e = |i| m.epsilon_i(i);
            vec![(
                "(eps1 - eps6) + (eps + eps1 + eps2 + eps6)".into(),
                vec![e(0).sub(&e(5)), eps.add(&e(0)).add(&e(1)).add(&e(5))],
            )]
        }
        (Family::E, 7) => {
            let e = |i| m.epsilon_i(i);
            vec![
                (
                    "(eps1 + eps2 + eps3 + eps4) + (eps1 - eps4)".into(),
                    vec![e(0).add(&e(1)).add(&e(2)).add(&e(3)), e(0).sub(&e(3))],
                ),
                (
                    "(eps1 + eps2 + eps3 + eps4) + (eps1 - eps4) + (eps2 - eps3)".into(),
                    vec![
                        e(0).add(&e(1)).add(&e(2)).add(&e(3)),
                        e(0).sub(&e(3)),
                        e(1).sub(&e(2)),
                    ],
                ),
            ]
        }
        (Family::E, 8) => {
            let e = |i| m.epsilon_i(i);
            vec![(
                "(eps1 - eps9) + (eps1 + eps2 + eps9)".into(),
                vec![e(0).sub(&e(8)), e(0).add(&e(1)).add(&e(8))],
            )]
        }
        _ => Vec::new(),
    }
}

fn decomposition_json(d: &OrthogonalDecomposition) -> Value {
    serde_json::to_value(d).expect("serializable")
}

struct CaseBuilder {
    system: SimpleType,
    claim: Claim,
}

impl CaseBuilder {
    fn make(&self, label: &str, lambda: Option<RatVector>, status: Status, witness: Value, start: Instant) -> Case {
        let id = match &lambda {
            Some(l) => format!("{}/{}/{}", self.system, self.claim, l),
            None if label.is_empty() => format!("{}/{}", self.system, self.claim),
            None => format!("{}/{}/{}", self.system, self.claim, label),
        };
        Case {
            id,
            system: self.system,
            claim: self.claim,
            status,
            witness,
            elapsed_ms: start.elapsed().as_millis() as u64,
            lambda,
        }
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn pi1_case(rs: &RootSystem) -> Case {
    let start = Instant::now();
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::Pi1 };
    let expected = expected_pi1(rs.simple_type());
    match fundamental_group(rs) {
        Ok(t) => {
            let got = t.group.invariant_factors_u64();
            b.make(
                "",
                None,
                pass_if(got == expected),
                json!({"invariant_factors": got, "expected": expected}),
                start,
            )
        }
        Err(e) => b.make("", None, Status::Fail, json!({"error": e.to_string()}), start),
    }
}

fn transversal_case(rs: &RootSystem) -> Case {
    let start = Instant::now();
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::Transversal };
    match semifree_transversal(rs) {
        Ok(t) => {
            let ok = t.semifree_reps.iter().all(|c| {
                c.standard
                    && c.reverify(rs)
                    && if c.coset == 0 {
                        c.max_pairing <= int(1)
                    } else {
                        c.max_pairing == int(1)
                    }
            });
            b.make("", None, pass_if(ok), t.to_json(true), start)
        }
        Err(e) => b.make("", None, Status::Fail, json!({"error": e.to_string()}), start),
    }
}

fn lattices_case(rs: &RootSystem) -> Case {
    let start = Instant::now();
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::Lattices };
    let r = verify_lattice_forms(rs);
    b.make("", None, pass_if(r.all_pass()), serde_json::to_value(&r).expect("serializable"), start)
}

fn claim_a_cases(rs: &RootSystem, bound: u64) -> Vec<Case> {
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::A };
    let fam = lattice_family(rs);
    let lams: Vec<RatVector> = enumerate_dominant(rs, &fam.coroot, bound)
        .into_iter()
        .filter(|l| !l.is_zero())
        .collect();
    let mut cases: Vec<Case> = lams
        .par_iter()
        .map(|lam| {
            let start = Instant::now();
            match decompose_orthogonal(rs, lam) {
                Ok(d) if d.verify(rs) => b.make("", Some(lam.clone()), Status::Pass, decomposition_json(&d), start),
                Ok(d) => b.make("", Some(lam.clone()), Status::Fail, decomposition_json(&d), start),
                Err(e) => b.make(
                    "",
                    Some(lam.clone()),
                    Status::Fail,
                    json!({"lambda": lam, "error": e.to_string()}),
                    start,
                ),
            }
        })
        .collect();
    for (label, roots) in listed_decompositions(rs) {
        let start = Instant::now();
        let lam = roots.iter().fold(rs.model().zero(), |acc, r| {
            acc.axpy(&(int(2) / rs.model().norm_sq(r)), r)
        });
        let enumerated = lams.binary_search(&lam).is_ok();
        match OrthogonalDecomposition::from_roots(rs, &lam, &roots) {
            Some(d) if enumerated => {
                cases.push(b.make(&format!("listed {label}"), None, Status::Pass, decomposition_json(&d), start))
            }
            _ => cases.push(b.make(
                &format!("listed {label}"),
                None,
                Status::Fail,
                json!({"lambda": lam, "enumerated": enumerated, "roots": roots}),
                start,
            )),
        }
    }
    cases
}

fn claim_b_case(rs: &RootSystem) -> Case {
    let start = Instant::now();
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::B };
    match verify_claim_b(rs) {
        Ok(ok) => b.make(
            "",
            None,
            pass_if(ok),
            json!({"closure_size": crate::reversor::closure_from_seed(rs).len(), "roots": rs.roots().len()}),
            start,
        ),
        Err(e) => b.make("", None, Status::Inapplicable, json!({"reason": e.to_string()}), start),
    }
}

fn claim_c_cases(rs: &RootSystem, bound: u64) -> Vec<Case> {
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::C };
    if minus_id_in_weyl(rs) {
        return vec![b.make(
            "",
            None,
            Status::Inapplicable,
            json!({"reason": "-id lies in the Weyl group"}),
            Instant::now(),
        )];
    }
    let fam = lattice_family(rs);
    let delta = rs.highest_root().vector.clone();
    let lams: Vec<RatVector> = enumerate_dominant(rs, &fam.coroot, bound)
        .into_iter()
        .filter(|l| rs.pairing(&delta, l) > int(2))
        .collect();
    lams.par_iter()
        .map(|lam| {
            let start = Instant::now();
            match claim_c_check(rs, lam) {
                Ok(c) => {
                    let ok = c.holds() && c.violators.is_empty();
                    let w = serde_json::to_value(&c).expect("serializable");
                    b.make("", Some(lam.clone()), pass_if(ok), w, start)
                }
                Err(e) => b.make("", Some(lam.clone()), Status::Fail, json!({"error": e.to_string()}), start),
            }
        })
        .collect()
}

fn claim_d_case(rs: &RootSystem) -> Case {
    let start = Instant::now();
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::D };
    let (only, list) = verify_claim_d(rs);
    let minus_id = minus_id_in_weyl(rs);
    b.make(
        "",
        None,
        pass_if(minus_id || only),
        json!({"only_highest_root": only, "minus_id_in_weyl": minus_id, "dominant_roots": list}),
        start,
    )
}

/// A random word of simple reflections, for conjugated spot checks.
fn random_word(rs: &RootSystem, rng: &mut ChaCha8Rng) -> WeylWord {
    let simple = rs.simple_root_vectors();
    let len = rng.gen_range(0..=2 * simple.len());
    let letters = (0..len)
        .map(|_| simple[rng.gen_range(0..simple.len())].clone())
        .collect();
    WeylWord::from_letters(rs.model(), letters)
}

fn reversor_cases(rs: &RootSystem, cfg: &SweepConfig) -> Vec<Case> {
    let b = CaseBuilder { system: rs.simple_type(), claim: Claim::Reversor };
    let fam = lattice_family(rs);
    let mut lams: BTreeSet<RatVector> = enumerate_dominant(rs, &fam.coroot, cfg.claim_a_bound)
        .into_iter()
        .collect();
    if minus_id_in_weyl(rs) {
        lams.extend(enumerate_dominant(rs, &fam.coroot, cfg.pairing_bound));
    }
    lams.remove(&rs.model().zero());
    let lams: Vec<RatVector> = lams.into_iter().collect();
    let type_seed = cfg.seed ^ (rs.simple_type().rank() as u64) << 32 ^ rs.simple_type().family().letter() as u64;
    lams.par_iter()
        .enumerate()
        .map(|(i, lam)| {
            let start = Instant::now();
            let mut rng = ChaCha8Rng::seed_from_u64(type_seed.wrapping_add(i as u64));
            let conj = random_word(rs, &mut rng).apply(lam);
            let direct = build_reversor(rs, lam);
            let spot = build_reversor(rs, &conj);
            match (direct, spot) {
                (Ok(r), Ok(s)) => {
                    let ok = r.verify(rs) && s.verify(rs);
                    let w = json!({
                        "lambda": lam,
                        "path": r.path,
                        "word": r.word.letters(),
                        "conjugate": conj,
                        "conjugate_word": s.word.letters(),
                    });
                    b.make("", Some(lam.clone()), pass_if(ok), w, start)
                }
                (Err(e), _) | (_, Err(e)) => {
                    b.make("", Some(lam.clone()), Status::Fail, json!({"lambda": lam, "error": e.to_string()}), start)
                }
            }
        })
        .collect()
}

fn cases_for(t: SimpleType, cfg: &SweepConfig) -> Vec<Case> {
    let rs = match build_root_system(t) {
        Ok(rs) => rs,
        Err(e) => {
            return vec![Case {
                id: format!("{t}/build"),
                system: t,
                claim: Claim::Pi1,
                status: Status::Fail,
                witness: json!({"error": e.to_string()}),
                elapsed_ms: 0,
                lambda: None,
            }]
        }
    };
    let mut out = Vec::new();
    for claim in &cfg.claims {
        match claim {
            Claim::Pi1 => out.push(pi1_case(&rs)),
            Claim::Transversal => out.push(transversal_case(&rs)),
            Claim::Lattices => out.push(lattices_case(&rs)),
            Claim::A => out.extend(claim_a_cases(&rs, cfg.claim_a_bound)),
            Claim::B => out.push(claim_b_case(&rs)),
            Claim::C => out.extend(claim_c_cases(&rs, cfg.pairing_bound)),
            Claim::D => out.push(claim_d_case(&rs)),
            Claim::Reversor => out.extend(reversor_cases(&rs, cfg)),
        }
    }
    out
}

pub fn run_verification_suite(cfg: &SweepConfig) -> Result<Report> {
    cfg.validate()?;
    let mut report = Report {
        cases: cfg
            .types
            .par_iter()
            .flat_map_iter(|t| cases_for(*t, cfg))
            .collect(),
    };
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn v(xs: &[i64]) -> RatVector {
        RatVector::from_i64(xs)
    }

    #[test]
    fn enumeration_examples() {
        let a2 = rs("A2");
        assert_eq!(
            enumerate_dominant(&a2, &lattice_family(&a2).coroot, 2),
            vec![v(&[0, 0, 0]), v(&[1, 0, -1])]
        );
        let b2 = rs("B2");
        assert_eq!(
            enumerate_dominant(&b2, &lattice_family(&b2).coroot, 2),
            vec![v(&[0, 0]), v(&[1, 1]), v(&[2, 0])]
        );
        let a1 = rs("A1");
        assert_eq!(enumerate_dominant(&a1, &lattice_family(&a1).coroot, 0), vec![v(&[0, 0])]);
    }

    #[test]
    fn empty_and_restricted_configs() {
        let cfg = SweepConfig {
            types: vec![],
            ..SweepConfig::default()
        };
        let r = run_verification_suite(&cfg).unwrap();
        assert!(r.cases.is_empty());
        assert_eq!(render_report(&r, Format::Text), "0 pass / 0 fail / 0 inapplicable\n");

        let cfg = SweepConfig {
            types: vec!["A2".parse().unwrap(), "B3".parse().unwrap()],
            claims: BTreeSet::from([Claim::D]),
            ..SweepConfig::default()
        };
        let r = run_verification_suite(&cfg).unwrap();
        assert_eq!(r.cases.len(), 2);
        assert!(r.cases.iter().all(|c| c.claim == Claim::D && c.status == Status::Pass));
    }

    #[test]
    fn format_parsing() {
        assert!("xml".parse::<Format>().is_err());
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!(parse_claims("a,b,zz").is_err());
        assert_eq!(parse_claims("a,d").unwrap(), BTreeSet::from([Claim::A, Claim::D]));
    }
}
