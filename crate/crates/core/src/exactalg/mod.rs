//! Exact integer linear algebra and polynomial arithmetic.
//!
//! Everything here works over `Z` with arbitrary-precision coefficients;
//! nothing in the symbolic core touches floating point.

mod matrix;
mod polynomial;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use matrix::{integer_kernel, IntegerMatrix};
pub use polynomial::{Exponents, Polynomial};

use crate::error::{Error, Result};

/// Integer linear form on a rank-`r` lattice (a character of the torus).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm(coeffs)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Integer pairing with a cocharacter.
    pub fn pair(&self, v: &[i64]) -> i64 {
        debug_assert_eq!(self.0.len(), v.len());
        self.0.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// The form as a degree-one polynomial in `w_1..w_r`.
    pub fn to_polynomial(&self) -> Polynomial {
        let r = self.rank();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| Polynomial::var(r, i).scale(&BigInt::from(c)))
            .fold(Polynomial::zero(r), |acc, t| &acc + &t)
    }

    /// Pullback along the sublattice whose basis vectors are the columns of
    /// `basis` (an `r x r'` matrix).
    pub fn restrict(&self, basis: &IntegerMatrix) -> Result<LinearForm> {
        if basis.rows() != self.rank() {
            return Err(Error::RankMismatch { expected: basis.rows(), found: self.rank() });
        }
        Ok(LinearForm((0..basis.cols()).map(|j| self.pair(&basis.column(j))).collect()))
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i64>> for LinearForm {
    fn from(v: Vec<i64>) -> Self {
        LinearForm(v)
    }
}

/// Expands `prod_j a_j(w)^{e_j}` over `rank` variables.
pub fn eval_product(rank: usize, forms: &[(LinearForm, u32)]) -> Result<Polynomial> {
    let mut acc = Polynomial::one(rank);
    for (form, e) in forms {
        if form.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: form.rank() });
        }
        if *e > 0 {
            acc = &acc * &form.to_polynomial().pow(*e);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(v: &[i64]) -> LinearForm {
        LinearForm::new(v.to_vec())
    }

    #[test]
    fn product_of_weight_one_is_w() {
        let p = eval_product(1, &[(lf(&[1]), 1)]).unwrap();
        assert_eq!(p, Polynomial::var(1, 0));
    }

    #[test]
    fn product_of_three_weight_one_factors() {
        let p = eval_product(1, &[(lf(&[1]), 3)]).unwrap();
        assert_eq!(p, Polynomial::var(1, 0).pow(3));
    }

    #[test]
    fn weight_two_squared() {
        let p = eval_product(1, &[(lf(&[2]), 2)]).unwrap();
        assert_eq!(p, Polynomial::monomial(1, vec![2], 4));
    }

    #[test]
    fn empty_product_is_one() {
        assert!(eval_product(3, &[]).unwrap().is_one());
    }

    #[test]
    fn mismatched_rank_is_rejected() {
        let err = eval_product(2, &[(lf(&[1]), 1)]).unwrap_err();
        assert_eq!(err, Error::RankMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn restriction_to_diagonal() {
        let basis = IntegerMatrix::from_columns(2, &[vec![1, 1]]).unwrap();
        assert_eq!(lf(&[1, 0]).restrict(&basis).unwrap(), lf(&[1]));
        assert_eq!(lf(&[1, -1]).restrict(&basis).unwrap(), lf(&[0]));
    }
}
