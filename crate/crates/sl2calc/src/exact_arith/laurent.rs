use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Coefficient};

/// Laurent polynomial in one variable `q` with coefficients in `C`.
///
/// Stored as a map from exponent to nonzero coefficient, so structural
/// equality is equality of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// `c * q^k`.
    pub fn monomial(k: i64, c: C) -> Self {
        let mut f = Self::zero();
        f.add_term(k, c);
        f
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(k, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(C::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, d)| (*k, d.clone() * c)))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Drops all terms of degree greater than `max_degree`.
    pub fn truncate_above(&self, max_degree: i64) -> Self {
        LaurentPoly { terms: self.terms.range(..=max_degree).map(|(k, c)| (*k, c.clone())).collect() }
    }

    /// Exact division in `C[q, q^{-1}]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ArithError> {
        let (&lead_k, lead_c) = d.terms.iter().next_back().ok_or(ArithError::DivisionByZero)?;
        let inexact = || ArithError::InexactDivision {
            dividend: self.to_string(),
            divisor: d.to_string(),
        };
        let (Some(self_low), Some(d_low)) = (self.min_degree(), d.min_degree()) else {
            return Ok(Self::zero());
        };
        // Any quotient term has exponent at least `self_low - d_low`.
        let quot_floor = self_low - d_low;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&k, c)) = rem.terms.iter().next_back() {
            let qk = k - lead_k;
            if qk < quot_floor {
                return Err(inexact());
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (dk, dc) in &d.terms {
                rem.add_term(dk + qk, -(dc.clone() * &qc));
            }
            quot.add_term(qk, qc);
        }
        Ok(quot)
    }
}

impl<C: Coefficient> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1.clone() * c2);
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    /// Printed in increasing degree, e.g. `q^-2 + 2 + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            match (var.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{var}")?,
                (false, false) => write!(f, "{abs}*{var}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = LaurentPoly<i64>;

    fn q_plus_qinv() -> L {
        &L::q_pow(1) + &L::q_pow(-1)
    }

    #[test]
    fn square_of_quantum_two() {
        let sq = &q_plus_qinv() * &q_plus_qinv();
        assert_eq!(sq, L::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(sq.to_string(), "q^-2 + 2 + q^2");
    }

    #[test]
    fn bar_examples() {
        assert_eq!(L::q_pow(3).bar(), L::q_pow(-3));
        let diff = &L::q_pow(1) - &L::q_pow(-1);
        assert_eq!(&diff * &q_plus_qinv(), &L::q_pow(2) - &L::q_pow(-2));
        assert!(q_plus_qinv().is_bar_invariant());
        assert!(!diff.is_bar_invariant());
    }

    #[test]
    fn exact_division() {
        let num = &L::q_pow(2) - &L::q_pow(-2);
        let den = &L::q_pow(1) - &L::q_pow(-1);
        assert_eq!(num.div_exact(&den).unwrap(), q_plus_qinv());
        assert!(L::q_pow(1).div_exact(&q_plus_qinv()).is_err());
        assert!(L::one().div_exact(&L::zero()).is_err());
        assert!(L::zero().div_exact(&den).unwrap().is_zero());
    }
}
