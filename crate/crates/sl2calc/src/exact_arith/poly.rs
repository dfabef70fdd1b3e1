use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Coefficient};

/// Exponent vector of a monomial, ordered graded-lexicographically
/// (total degree first, then lexicographically with `x_1 > x_2 > ...`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; num_vars] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    /// `self / other` if `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { degree: self.degree - other.degree, exps })
    }
}

/// Sparse polynomial in `x_1, ..., x_n` with coefficients in `C`.
///
/// The term map never stores zero coefficients, so structural equality is
/// polynomial equality. Variables are numbered from 1 in every public method,
/// matching the usual mathematical notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    num_vars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, C::one())
    }

    pub fn constant(num_vars: usize, c: C) -> Self {
        let mut p = Self::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(num_vars), c);
        }
        p
    }

    /// The variable `x_i` (1-based).
    pub fn var(num_vars: usize, i: usize) -> Result<Self, ArithError> {
        check_index(i, num_vars)?;
        let mut exps = vec![0; num_vars];
        exps[i - 1] = 1;
        Ok(Self::monomial(exps, C::one()))
    }

    /// `c * x^exps`; the number of variables is `exps.len()`.
    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let num_vars = exps.len();
        let mut p = Self::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(exps), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(num_vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), num_vars, "exponent vector length must equal num_vars");
            p.add_term(Monomial::new(exps), c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.degree == 0 && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(&Monomial::new(exps.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree (in the variables, not the doubled grading); `None` for 0.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common total degree of all terms, if the polynomial is homogeneous.
    /// The zero polynomial is not considered homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        check_vars(self, other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        check_vars(self, other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        check_vars(self, other)?;
        let mut out = Self::zero(self.num_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), d.clone() * c)).collect();
        MultiPoly { num_vars: self.num_vars, terms }
    }

    pub fn mul_monomial(&self, exps: &[u32]) -> Self {
        let m = Monomial::new(exps.to_vec());
        let terms = self.terms.iter().map(|(k, c)| (k.mul(&m), c.clone())).collect();
        MultiPoly { num_vars: self.num_vars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.num_vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `s_i(p)`: exchanges `x_i` and `x_{i+1}` (1-based).
    pub fn swap_vars(&self, i: usize) -> Result<Self, ArithError> {
        if i == 0 || i >= self.num_vars {
            return Err(ArithError::IndexOutOfRange { index: i, num_vars: self.num_vars });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                exps.swap(i - 1, i);
                (Monomial { degree: m.degree, exps }, c.clone())
            })
            .collect();
        Ok(MultiPoly { num_vars: self.num_vars, terms })
    }

    /// Applies an arbitrary permutation of the variables: `x_j -> x_{perm[j-1]}`
    /// where `perm` lists 1-based targets.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_vars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; self.num_vars];
                for (j, e) in m.exps.iter().enumerate() {
                    exps[perm[j] - 1] = *e;
                }
                (Monomial { degree: m.degree, exps }, c.clone())
            })
            .collect();
        MultiPoly { num_vars: self.num_vars, terms }
    }

    /// Divided difference `(p - s_i p) / (x_i - x_{i+1})`, evaluated with the
    /// closed form on monomials (no polynomial division is performed).
    pub fn divided_difference(&self, i: usize) -> Result<Self, ArithError> {
        if i == 0 || i >= self.num_vars {
            return Err(ArithError::IndexOutOfRange { index: i, num_vars: self.num_vars });
        }
        let (u, v) = (i - 1, i);
        let mut out = Self::zero(self.num_vars);
        for (m, c) in &self.terms {
            let (p, r) = (m.exps[u], m.exps[v]);
            if p == r {
                continue;
            }
            // x_u^p x_v^r with p > r gives (x_u x_v)^r * sum_{k} x_u^k x_v^{p-r-1-k};
            // the case p < r is the same with the opposite sign.
            let (hi, lo, coeff) = if p > r { (p, r, c.clone()) } else { (r, p, -c.clone()) };
            let span = hi - lo - 1;
            for k in 0..=span {
                let mut exps = m.exps.clone();
                exps[u] = lo + k;
                exps[v] = lo + span - k;
                out.add_term(Monomial::new(exps), coeff.clone());
            }
        }
        Ok(out)
    }

    /// The same divided difference computed literally as an exact polynomial
    /// division; used to cross-check [`MultiPoly::divided_difference`].
    pub fn divided_difference_by_division(&self, i: usize) -> Result<Self, ArithError> {
        let numerator = self.try_sub(&self.swap_vars(i)?)?;
        let denominator = Self::var(self.num_vars, i)?.try_sub(&Self::var(self.num_vars, i + 1)?)?;
        numerator.div_exact(&denominator)
    }

    /// Exact division. Fails unless `d` divides `self` in `C[x]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ArithError> {
        check_vars(self, d)?;
        let (lead_m, lead_c) = d.leading_term().ok_or(ArithError::DivisionByZero)?;
        let inexact = || ArithError::InexactDivision {
            dividend: self.to_string(),
            divisor: d.to_string(),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.num_vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m).ok_or_else(inexact)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(&qm), -(dc.clone() * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Substitutes `x_i = 0` (the variable is kept, with exponent zero).
    pub fn set_var_zero(&self, i: usize) -> Result<Self, ArithError> {
        check_index(i, self.num_vars)?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[i - 1] == 0)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(MultiPoly { num_vars: self.num_vars, terms })
    }

    /// Deletes variable `x_i`, which must not occur in the polynomial.
    pub fn remove_var(&self, i: usize) -> Result<Self, ArithError> {
        check_index(i, self.num_vars)?;
        let mut out = Self::zero(self.num_vars - 1);
        for (m, c) in &self.terms {
            if m.exps[i - 1] != 0 {
                return Err(ArithError::IndexOutOfRange { index: i, num_vars: self.num_vars });
            }
            let mut exps = m.exps.clone();
            exps.remove(i - 1);
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Re-embeds the polynomial into `num_vars` variables, renaming
    /// `x_j -> x_{j + offset}`.
    pub fn embed(&self, num_vars: usize, offset: usize) -> Self {
        assert!(offset + self.num_vars <= num_vars, "embedding does not fit");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; num_vars];
                exps[offset..offset + self.num_vars].copy_from_slice(&m.exps);
                (Monomial { degree: m.degree, exps }, c.clone())
            })
            .collect();
        MultiPoly { num_vars, terms }
    }

    /// Whether the polynomial is invariant under all permutations of the
    /// variables `x_lo, ..., x_hi` (inclusive, 1-based).
    pub fn is_symmetric_in(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|i| self.swap_vars(i).map(|s| &s == self).unwrap_or(false))
    }

    pub fn is_symmetric(&self) -> bool {
        self.num_vars < 2 || self.is_symmetric_in(1, self.num_vars)
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.num_vars);
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.exps) {
                for _ in 0..*e {
                    t *= x;
                }
            }
            total += &t;
        }
        total
    }
}

fn check_index(i: usize, num_vars: usize) -> Result<(), ArithError> {
    if i == 0 || i > num_vars {
        Err(ArithError::IndexOutOfRange { index: i, num_vars })
    } else {
        Ok(())
    }
}

fn check_vars<C>(p: &MultiPoly<C>, r: &MultiPoly<C>) -> Result<(), ArithError> {
    if p.num_vars != r.num_vars {
        Err(ArithError::VarCountMismatch { left: p.num_vars, right: r.num_vars })
    } else {
        Ok(())
    }
}

// Operator impls panic on a variable-count mismatch; the `try_*` methods are
// the fallible forms.

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MultiPoly { num_vars: self.num_vars, terms }
    }
}

impl<C: Coefficient> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    /// Terms are printed from the largest monomial down, e.g. `x1^2 - 2*x1*x2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(j, e)| if *e == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly<i64>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 1), x(2, 2));
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        let rhs = &x1.pow(2) - &x2.pow(2);
        assert_eq!(lhs, rhs);
        assert!((&lhs * &P::zero(2)).is_zero());
    }

    #[test]
    fn square_of_trinomial() {
        let s = &(&x(3, 1) + &x(3, 2)) + &x(3, 3);
        let sq = s.pow(2);
        assert_eq!(sq.num_terms(), 6);
        assert_eq!(sq.coeff(&[1, 1, 0]), 2);
        assert_eq!(sq.coeff(&[0, 1, 1]), 2);
        assert_eq!(sq.coeff(&[2, 0, 0]), 1);
    }

    #[test]
    fn swap_examples() {
        assert_eq!(x(2, 1).swap_vars(1).unwrap(), x(2, 2));
        let x1x2 = &x(2, 1) * &x(2, 2);
        assert_eq!(x1x2.swap_vars(1).unwrap(), x1x2);
        let p = P::monomial(vec![2, 0, 1], 1);
        assert_eq!(p.swap_vars(1).unwrap(), P::monomial(vec![0, 2, 1], 1));
        assert!(p.swap_vars(3).is_err());
        assert!(p.swap_vars(0).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let (x1, x2) = (x(2, 1), x(2, 2));
        let d = &x1 - &x2;
        assert_eq!((&x1.pow(2) - &x2.pow(2)).div_exact(&d).unwrap(), &x1 + &x2);
        let cube = &x1.pow(3) - &x2.pow(3);
        let expected = &(&x1.pow(2) + &(&x1 * &x2)) + &x2.pow(2);
        assert_eq!(cube.div_exact(&d).unwrap(), expected);
        assert!(P::zero(2).div_exact(&d).unwrap().is_zero());
        assert!(matches!(x1.div_exact(&d), Err(ArithError::InexactDivision { .. })));
        assert!(matches!(x1.div_exact(&P::zero(2)), Err(ArithError::DivisionByZero)));
        assert!(matches!(
            x1.div_exact(&P::scale(&x1, &2)),
            Err(ArithError::InexactDivision { .. })
        ));
    }

    #[test]
    fn var_count_mismatch_is_an_error() {
        assert_eq!(
            x(2, 1).try_add(&x(3, 1)),
            Err(ArithError::VarCountMismatch { left: 2, right: 3 })
        );
        assert!(x(2, 1).try_mul(&x(3, 1)).is_err());
    }

    #[test]
    fn divided_difference_closed_form() {
        // d_1(x1) = 1, d_1(x1 x2) = 0, d_1(x1^2) = x1 + x2, d_1(x2) = -1.
        assert_eq!(x(2, 1).divided_difference(1).unwrap(), P::one(2));
        assert!((&x(2, 1) * &x(2, 2)).divided_difference(1).unwrap().is_zero());
        assert_eq!(x(2, 1).pow(2).divided_difference(1).unwrap(), &x(2, 1) + &x(2, 2));
        assert_eq!(x(2, 2).divided_difference(1).unwrap(), -P::one(2));
    }

    #[test]
    fn display_format() {
        let p = &(&x(2, 1).pow(2) - &(&x(2, 1) * &x(2, 2)).scale(&2)) + &P::one(2);
        assert_eq!(p.to_string(), "x1^2 - 2*x1*x2 + 1");
        assert_eq!(P::zero(3).to_string(), "0");
        assert_eq!((-&x(1, 1)).to_string(), "-x1");
    }

    #[test]
    fn embed_and_remove() {
        let p = &x(2, 1) * &x(2, 2);
        let e = p.embed(4, 1);
        assert_eq!(e, P::monomial(vec![0, 1, 1, 0], 1));
        assert_eq!(e.remove_var(4).unwrap(), P::monomial(vec![0, 1, 1], 1));
        assert!(e.remove_var(2).is_err());
        assert!(e.set_var_zero(2).unwrap().is_zero());
    }
}
