//! Coordinate models for a Cartan subalgebra with an exact inner product.
//!
//! Three shapes cover every simple type:
//!
//! * plain `R^k` with the standard form (B, C, D, F4),
//! * the sum-zero hyperplane of `R^k`, kept in full ambient coordinates
//!   (A_n in `R^{n+1}`, E7 in `R^8`, E8 in `R^9`, G2 in `R^3`),
//! * the E6 model `n*eps + xi`, stored as `(n, xi_1..xi_6)` with `xi`
//!   summing to zero and form `<(n,xi),(m,zeta)> = n*m/2 + xi.zeta`.
//!   The vector `eps` is orthogonal to the `xi` part and has norm 1/2,
//!   so no irrational entries are ever needed.

use std::fmt;
use std::ops::Range;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, rat, Rational};

/// An exact vector in ambient model coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<Rational>);

impl RatVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RatVector(coords.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }

    /// `self + c * other`
    pub fn axpy(&self, c: &Rational, other: &RatVector) -> RatVector {
        if c.is_zero() {
            return self.clone();
        }
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rational::format).collect()
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for RatVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for q in &self.0 {
            seq.serialize_element(&rational::format(q))?;
        }
        seq.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanModel {
    ambient_dim: usize,
    sum_zero: bool,
    epsilon_axis: bool,
}

impl CartanModel {
    pub fn euclidean(dim: usize) -> Self {
        CartanModel {
            ambient_dim: dim,
            sum_zero: false,
            epsilon_axis: false,
        }
    }

    pub fn sum_zero(dim: usize) -> Self {
        CartanModel {
            ambient_dim: dim,
            sum_zero: true,
            epsilon_axis: false,
        }
    }

    /// The E6 model: coordinate 0 is the `eps` coefficient, 1..=6 the
    /// sum-zero part.
    pub fn epsilon_sum_zero(xi_dim: usize) -> Self {
        CartanModel {
            ambient_dim: xi_dim + 1,
            sum_zero: true,
            epsilon_axis: true,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_sum_zero(&self) -> bool {
        self.sum_zero
    }

    pub fn has_epsilon_axis(&self) -> bool {
        self.epsilon_axis
    }

    /// Dimension of the modeled space.
    pub fn dim(&self) -> usize {
        self.ambient_dim - usize::from(self.sum_zero)
    }

    /// Coordinates constrained to sum to zero (empty when unconstrained).
    pub fn sum_zero_range(&self) -> Range<usize> {
        match (self.sum_zero, self.epsilon_axis) {
            (false, _) => 0..0,
            (true, false) => 0..self.ambient_dim,
            (true, true) => 1..self.ambient_dim,
        }
    }

    /// Diagonal entry of the Gram matrix at coordinate `k`.
    pub fn weight(&self, k: usize) -> Rational {
        if self.epsilon_axis && k == 0 {
            rat(1, 2)
        } else {
            Rational::one()
        }
    }

    pub fn tag(&self) -> String {
        match (self.sum_zero, self.epsilon_axis) {
            (false, _) => format!("euclidean R^{}", self.ambient_dim),
            (true, false) => format!("sum-zero hyperplane of R^{}", self.ambient_dim),
            (true, true) => format!(
                "n*eps + xi, xi in the sum-zero hyperplane of R^{}, <eps,eps> = 1/2",
                self.ambient_dim - 1
            ),
        }
    }

    pub fn gram_description(&self) -> String {
        if self.epsilon_axis {
            "<(n,xi),(m,zeta)> = n*m/2 + xi.zeta".to_string()
        } else {
            "standard dot product".to_string()
        }
    }

    pub fn zero(&self) -> RatVector {
        RatVector::zeros(self.ambient_dim)
    }

    /// Validates coordinates against the model.
    pub fn vector(&self, coords: Vec<Rational>) -> Result<RatVector> {
        let v = RatVector(coords);
        self.check(&v)?;
        Ok(v)
    }

    pub fn check(&self, v: &RatVector) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.dim(),
            });
        }
        if self.sum_zero {
            let s: Rational = v.0[self.sum_zero_range()].iter().sum();
            if !s.is_zero() {
                return Err(Error::InvalidVector(format!(
                    "{v} violates the sum-zero constraint (sum {})",
                    rational::format(&s)
                )));
            }
        }
        Ok(())
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        self.check(v).is_ok()
    }

    pub fn form(&self, a: &RatVector, b: &RatVector) -> Rational {
        debug_assert_eq!(a.dim(), self.ambient_dim);
        let mut s: Rational = a.0.iter().zip(&b.0).skip(usize::from(self.epsilon_axis)).map(|(x, y)| x * y).sum();
        if self.epsilon_axis {
            s += &a.0[0] * &b.0[0] / rational::int(2);
        }
        s
    }

    pub fn norm_sq(&self, a: &RatVector) -> Rational {
        self.form(a, a)
    }

    /// The vector representing the linear functional `v -> sum_k c_k v_k`
    /// on the modeled space.
    pub fn represent_functional(&self, coeffs: &[Rational]) -> RatVector {
        assert_eq!(coeffs.len(), self.ambient_dim);
        let mut u: Vec<Rational> = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c / self.weight(k))
            .collect();
        let range = self.sum_zero_range();
        if !range.is_empty() {
            let mean: Rational =
                u[range.clone()].iter().sum::<Rational>() / rational::int(range.len() as i64);
            for x in &mut u[range] {
                *x -= &mean;
            }
        }
        RatVector(u)
    }

    /// Evaluates `sum_k c_k v_k`.
    pub fn evaluate(coeffs: &[Rational], v: &RatVector) -> Rational {
        coeffs
            .iter()
            .zip(&v.0)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Orthogonal projection of an ambient vector into the modeled space.
    pub fn project(&self, v: &RatVector) -> RatVector {
        let mut u = v.0.clone();
        let range = self.sum_zero_range();
        if !range.is_empty() {
            let mean: Rational =
                u[range.clone()].iter().sum::<Rational>() / rational::int(range.len() as i64);
            for x in &mut u[range] {
                *x -= &mean;
            }
        }
        RatVector(u)
    }

    /// `e_i - (1/k) sum_j e_j` on the sum-zero block (0-based `i` within it).
    pub fn epsilon_i(&self, i: usize) -> RatVector {
        let range = self.sum_zero_range();
        assert!(!range.is_empty(), "epsilon_i needs a sum-zero model");
        let mut e = self.zero();
        e.0[range.start + i] = Rational::one();
        self.project(&e)
    }

    /// Standard basis vector `e_i` of the ambient coordinates (0-based).
    pub fn e(&self, i: usize) -> RatVector {
        let mut e = self.zero();
        e.0[i] = Rational::one();
        e
    }

    /// Reflection of `v` in the hyperplane orthogonal to `eta`.
    pub fn reflect(&self, eta: &RatVector, v: &RatVector) -> RatVector {
        let c = rational::int(2) * self.form(eta, v) / self.norm_sq(eta);
        v.axpy(&-c, eta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_model_form() {
        let m = CartanModel::epsilon_sum_zero(6);
        let eps = m.e(0);
        assert_eq!(m.norm_sq(&eps), rat(1, 2));
        let two_eps = eps.scale(&rational::int(2));
        assert_eq!(m.norm_sq(&two_eps), rational::int(2));
        let e1 = m.epsilon_i(0);
        assert_eq!(m.form(&eps, &e1), Rational::zero());
        assert_eq!(m.norm_sq(&e1), rat(5, 6));
    }

    #[test]
    fn sum_zero_validation() {
        let m = CartanModel::sum_zero(3);
        assert!(m.vector(vec![rational::int(1), rational::int(0), rational::int(-1)]).is_ok());
        assert!(matches!(
            m.vector(vec![rational::int(1), rational::int(0), rational::int(0)]),
            Err(Error::InvalidVector(_))
        ));
        assert!(matches!(
            m.vector(vec![rational::int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn functional_representation() {
        // -x2 on the sum-zero plane of R^3 is represented by -eps_2.
        let m = CartanModel::sum_zero(3);
        let f = [Rational::zero(), rational::int(-1), Rational::zero()];
        let u = m.represent_functional(&f);
        assert_eq!(u, m.epsilon_i(1).neg());
        let v = RatVector::from_i64(&[2, -3, 1]);
        assert_eq!(m.form(&u, &v), CartanModel::evaluate(&f, &v));

        // n/2 on the E6 model is represented by eps itself.
        let m6 = CartanModel::epsilon_sum_zero(6);
        let mut f6 = vec![Rational::zero(); 7];
        f6[0] = rat(1, 2);
        assert_eq!(m6.represent_functional(&f6), m6.e(0));
    }

    #[test]
    fn reflection_formula() {
        let m = CartanModel::sum_zero(3);
        let eta = RatVector::from_i64(&[1, -1, 0]);
        let v = RatVector::from_i64(&[1, 0, -1]);
        assert_eq!(m.reflect(&eta, &v), RatVector::from_i64(&[0, 1, -1]));
        assert_eq!(m.reflect(&eta, &m.reflect(&eta, &v)), v);
    }
}
