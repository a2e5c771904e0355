use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial, dense over the ambient variables.
pub type Exponents = Vec<u32>;

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The coordinate function `w_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(nvars, exps, 1)
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal the number of variables");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::RankMismatch { expected: nvars, found: exps.len() });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Polynomial::one(self.nvars)
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest total degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True when every term has the same total degree. The zero polynomial
    /// is homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Splits `c * w^e` into its scalar and exponent vector; `None` when the
    /// polynomial is zero or has more than one term.
    pub fn as_scaled_monomial(&self) -> Option<(&BigInt, &[u32])> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, e.as_slice()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `w_i -> images[i]`. All images must share a variable count,
    /// which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Polynomial], target_nvars: usize) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::RankMismatch { expected: self.nvars, found: images.len() });
        }
        if let Some(bad) = images.iter().find(|p| p.nvars != target_nvars) {
            return Err(Error::RankMismatch { expected: target_nvars, found: bad.nvars });
        }
        let mut out = Polynomial::zero(target_nvars);
        for (exps, c) in &self.terms {
            let mut term = Polynomial::constant(target_nvars, c.clone());
            for (img, &k) in images.iter().zip(exps) {
                if k > 0 {
                    term = &term * &img.pow(k);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different numbers of variables"
        );
    }

    /// Renders with caller-supplied variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }

    pub(crate) fn default_names(nvars: usize) -> Vec<String> {
        if nvars == 1 {
            vec!["w".to_string()]
        } else {
            (1..=nvars).map(|i| format!("w{i}")).collect()
        }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        // highest monomials first
        for (i, (exps, c)) in self.poly.terms.iter().rev().enumerate() {
            let mono: Vec<String> = exps
                .iter()
                .zip(self.names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, name)| if k == 1 { name.to_string() } else { format!("{name}^{k}") })
                .collect();
            let mono = mono.join("*");
            let negative = c.is_negative();
            let abs = c.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            match (i, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Polynomial::default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        fmt::Display::fmt(&PolyDisplay { poly: self, names: &refs }, f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_ring(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Polynomial {
        Polynomial::var(1, 0)
    }

    #[test]
    fn zero_coefficients_cancel() {
        let p = &w() - &w();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn power_of_scaled_variable() {
        let two_w = w().scale(&BigInt::from(2));
        let p = two_w.pow(2);
        assert_eq!(p, Polynomial::monomial(1, vec![2], 4));
        assert_eq!(p.to_string(), "4*w^2");
    }

    #[test]
    fn rendering() {
        let p = &(&w().pow(3) - &Polynomial::constant(1, 2)) + &w();
        assert_eq!(p.to_string(), "w^3 + w - 2");
        assert_eq!((-&w()).to_string(), "-w");
        assert_eq!(Polynomial::one(1).to_string(), "1");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        let q = &Polynomial::var(2, 0) * &Polynomial::var(2, 1).pow(2);
        assert_eq!(q.to_string(), "w1*w2^2");
        assert_eq!(q.display_with(&["x", "y"]).to_string(), "x*y^2");
    }

    #[test]
    fn homogeneity_and_degree() {
        let p = &w().pow(2) + &w();
        assert!(!p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
        assert!(Polynomial::zero(1).is_homogeneous());
        assert_eq!(Polynomial::zero(1).degree(), None);
        let (c, e) = w().pow(3).scale(&BigInt::from(-5)).as_scaled_monomial().map(|(c, e)| (c.clone(), e.to_vec())).unwrap();
        assert_eq!(c, BigInt::from(-5));
        assert_eq!(e, vec![3]);
    }

    #[test]
    fn substitution_into_fewer_variables() {
        // w1 + 2*w2 with w1 -> t, w2 -> -t gives -t
        let p = &Polynomial::var(2, 0) + &Polynomial::var(2, 1).scale(&BigInt::from(2));
        let t = Polynomial::var(1, 0);
        let q = p.substitute(&[t.clone(), -&t], 1).unwrap();
        assert_eq!(q, -&t);
    }

    #[test]
    fn big_coefficients_are_exact() {
        let p = Polynomial::constant(1, 3).pow(100);
        let expected: BigInt = num_traits::pow(BigInt::from(3), 100);
        assert_eq!(p.coefficient(&[0]), expected);
    }
}
