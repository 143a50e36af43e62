//! Lattices with exact rational bases, their duals and finite quotients.
//!
//! A lattice is stored by its canonical basis: the generators are scaled by
//! the least common denominator, brought to row Hermite normal form, and
//! scaled back. Equal point sets therefore have identical stored bases and
//! `==` on [`Lattice`] is lattice equality.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{hnf, snf, IntMatrix, RatMatrix};
use crate::model::{CartanModel, RatVector};
use crate::rational::{self, common_denominator, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    model: CartanModel,
    basis: Vec<RatVector>,
    pivots: Vec<usize>,
    scale: BigInt,
}

/// Builds the lattice spanned over the integers by `gens`.
pub fn lattice_from_generators(gens: &[RatVector], model: &CartanModel) -> Result<Lattice> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for g in gens {
        model.check(g)?;
    }
    let scale = common_denominator(gens.iter().flat_map(|g| g.coords()));
    let dim = model.ambient_dim();
    let rows: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| {
            g.coords()
                .iter()
                .map(|q| (q * Rational::from_integer(scale.clone())).to_integer())
                .collect()
        })
        .collect();
    let (h, _) = hnf(&IntMatrix::from_rows(rows, dim));
    let scale_q = Rational::from_integer(scale);
    let mut basis = Vec::new();
    let mut pivots = Vec::new();
    for i in 0..h.rows() {
        let Some(p) = (0..dim).find(|&j| !h.get(i, j).is_zero()) else {
            break;
        };
        pivots.push(p);
        basis.push(RatVector::new(
            h.row(i)
                .iter()
                .map(|x| Rational::from_integer(x.clone()) / &scale_q)
                .collect(),
        ));
    }
    let scale = common_denominator(basis.iter().flat_map(|b| b.coords()));
    Ok(Lattice {
        model: model.clone(),
        basis,
        pivots,
        scale,
    })
}

impl Lattice {
    pub fn model(&self) -> &CartanModel {
        &self.model
    }

    pub fn basis(&self) -> &[RatVector] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Smallest positive integer clearing every denominator of the basis.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    /// Coordinates of `v` in the stored basis, or `NotInSpan`.
    pub fn coordinates(&self, v: &RatVector) -> Result<Vec<Rational>> {
        if v.dim() != self.model.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.model.ambient_dim(),
                got: v.dim(),
            });
        }
        let mut residual = v.clone();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = &residual.coords()[p] / &b.coords()[p];
            residual = residual.axpy(&-c.clone(), b);
            coeffs.push(c);
        }
        if residual.is_zero() {
            Ok(coeffs)
        } else {
            Err(Error::NotInSpan)
        }
    }

    pub fn contains(&self, v: &RatVector) -> Result<bool> {
        Ok(self.coordinates(v)?.iter().all(rational::is_integer))
    }

    pub fn in_span(&self, v: &RatVector) -> bool {
        self.coordinates(v).is_ok()
    }

    /// True when every basis vector of `self` lies in `other`.
    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis
            .iter()
            .all(|b| other.contains(b).unwrap_or(false))
    }

    pub fn gram(&self) -> RatMatrix {
        let r = self.rank();
        let mut g = RatMatrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                g.set(i, j, self.model.form(&self.basis[i], &self.basis[j]));
            }
        }
        g
    }

    /// `{ v in span : (v, w) in Z for all w in self }`.
    pub fn dual(&self) -> Result<Lattice> {
        if self.basis.is_empty() {
            return Err(Error::DegenerateForm);
        }
        let ginv = self.gram().inverse().map_err(|_| Error::DegenerateForm)?;
        let r = self.rank();
        let dual: Vec<RatVector> = (0..r)
            .map(|i| {
                (0..r).fold(self.model.zero(), |acc, j| acc.axpy(ginv.get(i, j), &self.basis[j]))
            })
            .collect();
        lattice_from_generators(&dual, &self.model)
    }

    /// Reduces `v` into the half-open parallelepiped spanned by the basis.
    pub fn reduce(&self, v: &RatVector) -> Result<RatVector> {
        let coeffs = self.coordinates(v)?;
        Ok(coeffs
            .iter()
            .zip(&self.basis)
            .fold(v.clone(), |acc, (c, b)| acc.axpy(&-c.floor(), b)))
    }

    /// Integer matrix of `self`'s basis expressed in `sup`'s basis.
    fn matrix_in(&self, sup: &Lattice) -> Result<IntMatrix> {
        let rows = self
            .basis
            .iter()
            .map(|b| {
                let c = sup
                    .coordinates(b)
                    .map_err(|_| Error::NotSublattice(format!("{b} lies outside the span")))?;
                c.into_iter()
                    .map(|q| {
                        if rational::is_integer(&q) {
                            Ok(q.to_integer())
                        } else {
                            Err(Error::NotSublattice(format!("{b} is not in the larger lattice")))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_rows(rows, sup.rank()))
    }

    /// `|det|` of `self`'s basis written in `sup`'s basis (the index).
    pub fn index_in(&self, sup: &Lattice) -> Result<BigInt> {
        if self.rank() != sup.rank() {
            return Err(Error::NotSublattice("ranks differ".into()));
        }
        Ok(self.matrix_in(sup)?.determinant().abs())
    }
}

/// `sup / sub` with invariant factors and one representative per coset.
#[derive(Clone, Debug)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    coset_reps: Vec<RatVector>,
    adapted: Vec<RatVector>,
    diagonal: Vec<BigInt>,
    snf_right: IntMatrix,
    sup: Lattice,
}

pub fn finite_quotient(sub: &Lattice, sup: &Lattice) -> Result<FiniteAbelianGroup> {
    if sub.rank() != sup.rank() {
        return Err(Error::NotSublattice(format!(
            "rank {} sublattice in rank {} lattice",
            sub.rank(),
            sup.rank()
        )));
    }
    let a = sub.matrix_in(sup)?;
    let (s, _u, v) = snf(&a);
    let vinv = v
        .to_rational()
        .inverse()
        .expect("unimodular")
        .to_integer()
        .expect("unimodular inverse is integral");
    let r = sup.rank();
    // rows of V^{-1} * B(sup): a basis of sup in which sub is diagonal
    let adapted: Vec<RatVector> = (0..r)
        .map(|i| {
            (0..r).fold(sup.model.zero(), |acc, j| {
                acc.axpy(&Rational::from_integer(vinv.get(i, j).clone()), &sup.basis[j])
            })
        })
        .collect();
    let diagonal: Vec<BigInt> = (0..r).map(|i| s.get(i, i).clone()).collect();
    let invariant_factors: Vec<BigInt> = diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect();
    let mut group = FiniteAbelianGroup {
        invariant_factors,
        coset_reps: Vec::new(),
        adapted,
        diagonal,
        snf_right: v,
        sup: sup.clone(),
    };
    let order = group.order();
    group.coset_reps = (0..order)
        .map(|idx| {
            let digits = group.digits_of_index(idx);
            let v = group
                .nontrivial_positions()
                .zip(&digits)
                .fold(sup.model.zero(), |acc, (pos, d)| {
                    acc.axpy(&rational::int(*d as i64), &group.adapted[pos])
                });
            sub.reduce(&v).expect("representative lies in the span")
        })
        .collect();
    Ok(group)
}

impl FiniteAbelianGroup {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn invariant_factors_u64(&self) -> Vec<u64> {
        self.invariant_factors
            .iter()
            .map(|d| d.to_u64().expect("small invariant factor"))
            .collect()
    }

    pub fn order(&self) -> usize {
        self.invariant_factors_u64().iter().product::<u64>() as usize
    }

    pub fn coset_reps(&self) -> &[RatVector] {
        &self.coset_reps
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    fn nontrivial_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.diagonal
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > BigInt::one())
            .map(|(i, _)| i)
    }

    fn digits_of_index(&self, mut idx: usize) -> Vec<u64> {
        self.invariant_factors_u64()
            .iter()
            .map(|&f| {
                let d = idx as u64 % f;
                idx /= f as usize;
                d
            })
            .collect()
    }

    fn index_of_digits(&self, digits: &[u64]) -> usize {
        let factors = self.invariant_factors_u64();
        let mut idx = 0usize;
        for (d, f) in digits.iter().zip(&factors).rev() {
            idx = idx * (*f as usize) + *d as usize;
        }
        idx
    }

    /// Digit vector of the coset of `v` (one digit per invariant factor).
    pub fn coset_digits(&self, v: &RatVector) -> Result<Vec<u64>> {
        let c = self
            .sup
            .coordinates(v)
            .map_err(|_| Error::NotSublattice(format!("{v} lies outside the span")))?;
        if !c.iter().all(rational::is_integer) {
            return Err(Error::NotSublattice(format!("{v} is not in the larger lattice")));
        }
        // v = c B = (c V)(V^{-1} B): coordinates in the adapted basis are c V
        let r = c.len();
        Ok(self
            .nontrivial_positions()
            .map(|pos| {
                let x: BigInt = (0..r).map(|k| c[k].to_integer() * self.snf_right.get(k, pos)).sum();
                x.mod_floor(&self.diagonal[pos]).to_u64().expect("small digit")
            })
            .collect())
    }

    pub fn coset_index(&self, v: &RatVector) -> Result<usize> {
        Ok(self.index_of_digits(&self.coset_digits(v)?))
    }

    /// All subgroups, each as the sorted list of its coset indices.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let order = self.order();
        let factors = self.invariant_factors_u64();
        let add = |a: usize, b: usize| -> usize {
            let (da, db) = (self.digits_of_index(a), self.digits_of_index(b));
            let sum: Vec<u64> = da
                .iter()
                .zip(&db)
                .zip(&factors)
                .map(|((x, y), f)| (x + y) % f)
                .collect();
            self.index_of_digits(&sum)
        };
        let generated = |gens: &[usize]| -> Vec<usize> {
            let mut set: BTreeSet<usize> = BTreeSet::from([0]);
            loop {
                let snapshot: Vec<usize> = set.iter().copied().collect();
                let before = set.len();
                for &x in &snapshot {
                    for &g in gens {
                        set.insert(add(x, g));
                    }
                }
                if set.len() == before {
                    return set.into_iter().collect();
                }
            }
        };
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        out.insert(vec![0]);
        // every subgroup of a finite abelian group of rank r is r-generated
        let mut stack: Vec<Vec<usize>> = (0..order).map(|g| vec![g]).collect();
        while let Some(gens) = stack.pop() {
            out.insert(generated(&gens));
            if gens.len() < factors.len() {
                let last = *gens.last().unwrap();
                for g in last + 1..order {
                    let mut next = gens.clone();
                    next.push(g);
                    stack.push(next);
                }
            }
        }
        let mut v: Vec<Vec<usize>> = out.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }
}
