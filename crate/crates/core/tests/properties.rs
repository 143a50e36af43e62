//! Property tests and brute-force oracles for the root systems, lattices,
//! Weyl words and the reversor engine.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use proptest::prelude::*;
use weylcert::cochar::lattice_family;
use weylcert::harness::enumerate_dominant;
use weylcert::rational::{abs, int, rat};
use weylcert::reversor::{build_reversor, claim_c_check};
use weylcert::weyl::{dominant_rep, minus_id_in_weyl, weyl_orbit, DEFAULT_ORBIT_CAP};
use weylcert::{
    build_root_system, finite_quotient, lattice_from_generators, CartanModel, Error, Lattice, RatVector, Rational,
    RootSystem, SimpleType, WeylWord,
};

const SMALL: [&str; 12] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];
const MIXED: [&str; 10] = ["A2", "A5", "B3", "C4", "D5", "D6", "E6", "E7", "F4", "G2"];

fn sys(s: &str) -> &'static RootSystem {
    static S: OnceLock<HashMap<SimpleType, RootSystem>> = OnceLock::new();
    let all = S.get_or_init(|| {
        SMALL
            .iter()
            .chain(MIXED.iter())
            .chain(["E8", "D7", "D9"].iter())
            .map(|t| {
                let t: SimpleType = t.parse().unwrap();
                (t, build_root_system(t).unwrap())
            })
            .collect()
    });
    &all[&s.parse::<SimpleType>().unwrap()]
}

fn form(m: &CartanModel, a: &RatVector, b: &RatVector) -> Rational {
    a.coords()
        .iter()
        .zip(b.coords())
        .enumerate()
        .map(|(k, (x, y))| {
            let w = if m.has_epsilon_axis() && k == 0 { rat(1, 2) } else { int(1) };
            w * x * y
        })
        .sum()
}

fn dominant_oracle(rs: &RootSystem, v: &RatVector) -> bool {
    rs.positive_roots()
        .iter()
        .all(|r| form(rs.model(), &r.vector, v) >= int(0))
}

/// A vector of the model from free integer coordinates.
fn vector_from(m: &CartanModel, xs: &[i64]) -> RatVector {
    let mut v: Vec<Rational> = xs.iter().take(m.ambient_dim()).map(|x| int(*x)).collect();
    v.resize(m.ambient_dim(), int(0));
    m.project(&RatVector::new(v))
}

fn word_from(rs: &RootSystem, picks: &[usize]) -> WeylWord {
    let roots: Vec<RatVector> = rs.root_vectors().cloned().collect();
    WeylWord::from_letters(rs.model(), picks.iter().map(|i| roots[i % roots.len()].clone()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dominance_tests_agree(t in 0..MIXED.len(), xs in prop::collection::vec(-6i64..=6, 9)) {
        let rs = sys(MIXED[t]);
        let v = vector_from(rs.model(), &xs);
        let oracle = dominant_oracle(rs, &v);
        prop_assert_eq!(rs.is_dominant(&v), oracle);
        prop_assert_eq!(rs.is_dominant_by_simple_roots(&v), oracle);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dominant_rep_is_unique_in_orbit(
        t in 0..MIXED.len(),
        xs in prop::collection::vec(-4i64..=4, 9),
        picks in prop::collection::vec(0usize..1000, 0..12),
    ) {
        let rs = sys(MIXED[t]);
        let v = vector_from(rs.model(), &xs);
        let (d, w) = dominant_rep(rs, &v);
        prop_assert!(dominant_oracle(rs, &d));
        prop_assert_eq!(w.apply(&v), d.clone());
        let moved = word_from(rs, &picks).apply(&v);
        prop_assert_eq!(dominant_rep(rs, &moved).0, d);
    }

    #[test]
    fn words_preserve_form_and_roots(t in 0..MIXED.len(), picks in prop::collection::vec(0usize..1000, 0..10)) {
        let rs = sys(MIXED[t]);
        let w = word_from(rs, &picks);
        prop_assert!(w.preserves_form(rs));
        prop_assert!(w.permutes_roots(rs));
        let x = rs.interior_point();
        prop_assert_eq!(RatVector::new(w.matrix().mul_vec(x.coords())), w.apply(x));
        prop_assert_eq!(w.then(&w.inverse()).apply(x), x.clone());
    }

    #[test]
    fn hnf_basis_is_canonical(
        gens in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 1..5),
        mix in prop::collection::vec(-3i64..=3, 4),
    ) {
        let m = CartanModel::euclidean(3);
        let vs: Vec<RatVector> = gens.iter().map(|g| RatVector::from_i64(g)).collect();
        prop_assume!(vs.iter().any(|v| !v.is_zero()));
        let l = lattice_from_generators(&vs, &m).unwrap();
        // adding integer combinations and reordering spans the same lattice
        let extra = vs.iter().zip(&mix).fold(m.zero(), |acc, (v, c)| acc.axpy(&int(*c), v));
        let mut other = vs.clone();
        other.reverse();
        other.push(extra);
        prop_assert_eq!(&lattice_from_generators(&other, &m).unwrap(), &l);
        for v in &vs {
            prop_assert!(l.contains(v).unwrap());
        }
        // index of the doubled lattice is 2^rank
        let doubled: Vec<RatVector> = vs.iter().map(|v| v.scale(&int(2))).collect();
        let d = lattice_from_generators(&doubled, &m).unwrap();
        let q = finite_quotient(&d, &l).unwrap();
        prop_assert_eq!(q.order(), 1usize << l.rank());
    }

    #[test]
    fn rational_format_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let x = rat(p, q);
        prop_assert_eq!(weylcert::rational::parse(&weylcert::rational::format(&x)).unwrap(), x);
    }

    /// On A_n a reversor exists iff the coordinate multisets of lambda and
    /// -lambda agree, since the Weyl group permutes coordinates.
    #[test]
    fn type_a_reversor_matches_multiset(n in 1usize..6, xs in prop::collection::vec(-4i64..=4, 5)) {
        let rs = sys(["A1", "A2", "A3", "A4", "A5"][n - 1]);
        let mut c: Vec<i64> = xs[..n].to_vec();
        c.push(-c.iter().sum::<i64>());
        let lam = RatVector::from_i64(&c);
        prop_assume!(!lam.is_zero());
        let mut a = c.clone();
        a.sort();
        let mut b: Vec<i64> = c.iter().map(|x| -x).collect();
        b.sort();
        match build_reversor(rs, &lam) {
            Ok(r) => {
                prop_assert_eq!(a, b);
                prop_assert_eq!(r.word.apply(&lam), lam.neg());
            }
            Err(Error::NoReversor { .. }) => prop_assert_ne!(a, b),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn reversor_exists_when_minus_id_in_weyl(
        t in 0..4usize,
        xs in prop::collection::vec(-5i64..=5, 8),
    ) {
        let rs = sys(["B3", "C4", "D6", "F4"][t]);
        prop_assert!(minus_id_in_weyl(rs));
        // doubled so it lies in every cocharacter lattice (F4 needs even sums)
        let lam = vector_from(rs.model(), &xs).scale(&int(2));
        prop_assume!(!lam.is_zero());
        let r = build_reversor(rs, &lam).unwrap();
        prop_assert_eq!(r.word.apply(&lam), lam.neg());
    }
}

#[test]
fn reflections_permute_roots_with_integral_pairings() {
    for t in MIXED.iter().chain(["E8"].iter()) {
        let rs = sys(t);
        let m = rs.model();
        let roots: HashSet<RatVector> = rs.root_vectors().cloned().collect();
        for eta in rs.root_vectors() {
            let image: HashSet<RatVector> = roots.iter().map(|z| m.reflect(eta, z)).collect();
            assert_eq!(image, roots, "{t}: reflection in {eta}");
            for z in rs.root_vectors() {
                let c = int(2) * form(m, eta, z) / form(m, eta, eta);
                assert!(c.is_integer(), "{t}: <{eta},{z}>");
            }
        }
    }
}

#[test]
fn fundamental_weights_are_dual_to_simple_coroots() {
    for t in MIXED {
        let rs = sys(t);
        let m = rs.model();
        let simple = rs.simple_root_vectors();
        for (i, w) in rs.fundamental_weights().iter().enumerate() {
            for (j, a) in simple.iter().enumerate() {
                let c = int(2) * form(m, w, a) / form(m, a, a);
                assert_eq!(c, int(i64::from(i == j)), "{t}");
            }
        }
    }
}

/// `max over the orbit <w a, lambda> = <dom(a), lambda>` for dominant lambda.
#[test]
fn orbit_maximum_is_at_the_dominant_element() {
    for t in ["A3", "B3", "G2", "D4"] {
        let rs = sys(t);
        let m = rs.model();
        let lams = enumerate_dominant(rs, &lattice_family(rs).coroot, 3);
        for a in enumerate_dominant(rs, &lattice_family(rs).weight, 2) {
            let orbit = weyl_orbit(rs, &a, DEFAULT_ORBIT_CAP).unwrap();
            let negated = orbit.iter().map(RatVector::neg).collect::<BTreeSet<_>>();
            let (neg_dom, _) = dominant_rep(rs, &a.neg());
            assert!(negated.contains(&neg_dom));
            for lam in &lams {
                let max = orbit.iter().map(|x| form(m, x, lam)).max().unwrap();
                assert_eq!(max, form(m, &a, lam), "{t} {a} {lam}");
            }
        }
    }
}

/// All dominant points of `lattice` with `<lam, delta> <= bound` by scanning
/// every point of `(1/den) Z^n` in the cube `|x_k| <= half_width`.
fn box_scan(rs: &RootSystem, lattice: &Lattice, bound: i64, half_width: i64) -> Vec<RatVector> {
    let m = rs.model();
    let den: i64 = lattice.scale().try_into().unwrap();
    let free = if m.is_sum_zero() { m.ambient_dim() - 1 } else { m.ambient_dim() };
    let steps = 2 * half_width * den + 1;
    let delta = &rs.highest_root().vector;
    let mut out = Vec::new();
    let mut idx = vec![0i64; free];
    loop {
        let mut coords: Vec<Rational> = idx.iter().map(|k| rat(k - half_width * den, den)).collect();
        if m.is_sum_zero() {
            let s: Rational = coords.iter().sum();
            coords.push(-s);
        }
        let v = RatVector::new(coords);
        if abs(v.coords().last().unwrap()) <= int(half_width)
            && form(m, delta, &v) <= int(bound)
            && dominant_oracle(rs, &v)
            && lattice.contains(&v).unwrap()
        {
            out.push(v);
        }
        let mut k = 0;
        while k < free {
            idx[k] += 1;
            if idx[k] < steps {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == free {
            break;
        }
    }
    out.sort();
    out
}

#[test]
fn enumeration_matches_box_scan() {
    for t in SMALL {
        let rs = sys(t);
        let fam = lattice_family(rs);
        let (bound, half_width) = match t {
            "F4" | "G2" => (2, 4),
            _ => (3, 3),
        };
        for (name, lattice) in [("coroot", &fam.coroot), ("cochar", &fam.cochar)] {
            let fast = enumerate_dominant(rs, lattice, bound as u64);
            let slow = box_scan(rs, lattice, bound, half_width);
            assert_eq!(fast, slow, "{t} {name} lattice, bound {bound}");
        }
    }
}

/// The fundamental-weight reduction of claim (c) against a direct search
/// over the orbits of all dominant weights with `<a, delta> <= 4`.
#[test]
fn claim_c_reduction_is_sound() {
    for t in ["A2", "A3", "D5"] {
        let rs = sys(t);
        let m = rs.model();
        let orbits: Vec<Vec<RatVector>> = enumerate_dominant(rs, &lattice_family(rs).weight, 4)
            .into_iter()
            .filter(|a| !a.is_zero())
            .map(|a| weyl_orbit(rs, &a, DEFAULT_ORBIT_CAP).unwrap())
            .collect();
        let delta = &rs.highest_root().vector;
        for lam in enumerate_dominant(rs, &lattice_family(rs).coroot, 6) {
            if form(m, delta, &lam) <= int(2) {
                assert!(claim_c_check(rs, &lam).is_err());
                continue;
            }
            let c = claim_c_check(rs, &lam).unwrap();
            let brute = orbits
                .iter()
                .map(|o| o.iter().map(|a| abs(&form(m, a, &lam))).max().unwrap())
                .min()
                .unwrap();
            assert_eq!(brute, c.min, "{t} {lam}");
            assert_eq!(brute > int(1), c.holds(), "{t} {lam}");
        }
    }
}
