//! The nilHecke algebra `NH_a`: the ring of operators on `Z[x_1, ..., x_a]`
//! generated by multiplication by `x_i` and the divided differences `∂_i`.
//!
//! Elements are kept in the normal form `Σ_w f_w ∂_w` (polynomial on the
//! left). Products follow operator composition: `u * v` applies `v` first,
//! which in string-diagram language stacks `u` on top of `v`.
//!
//! The thick calculus — idempotents, splitters, thick crossings and the matrix
//! units that realise `NH_a` as a matrix algebra over its centre — lives in
//! [`thick`].

mod perm;
pub mod relations;
pub mod thick;

pub use perm::Permutation;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact_arith::ArithError;
use crate::partitions::PartitionError;
use crate::Poly;

/// Errors from nilHecke computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NhError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("sequence {0:?} is not an elementary sequence for this rank")]
    NotElementarySequence(Vec<u32>),

    #[error(
        "normal-form equality ({normal_form}) disagrees with the action on the staircase basis ({action})"
    )]
    RepresentationMismatch { normal_form: bool, action: bool },

    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// An element `Σ_w f_w(x) ∂_w` of the nilHecke algebra of rank `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NhElement {
    rank: usize,
    terms: BTreeMap<Permutation, Poly>,
}

impl NhElement {
    pub fn zero(rank: usize) -> Self {
        NhElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_poly(Poly::one(rank))
    }

    /// Multiplication by the polynomial `p` (rank = number of variables of `p`).
    pub fn from_poly(p: Poly) -> Self {
        let rank = p.num_vars();
        let mut out = Self::zero(rank);
        out.add_term(Permutation::identity(rank), p);
        out
    }

    /// The single term `f ∂_w`.
    pub fn term(f: Poly, w: Permutation) -> Self {
        assert_eq!(f.num_vars(), w.size(), "coefficient and permutation rank differ");
        let mut out = Self::zero(w.size());
        out.add_term(w, f);
        out
    }

    /// Multiplication by `x_i` (1-based).
    pub fn x(i: usize, rank: usize) -> Result<Self, NhError> {
        if i == 0 || i > rank {
            return Err(NhError::IndexOutOfRange { index: i, rank });
        }
        Ok(Self::from_poly(Poly::var(rank, i)?))
    }

    /// The divided difference `∂_i` (1-based, `i < rank`).
    pub fn dd(i: usize, rank: usize) -> Result<Self, NhError> {
        if i == 0 || i >= rank {
            return Err(NhError::IndexOutOfRange { index: i, rank });
        }
        Ok(Self::dd_perm(Permutation::identity(rank).left_mul_simple(i)))
    }

    /// `∂_w`.
    pub fn dd_perm(w: Permutation) -> Self {
        let rank = w.size();
        Self::term(Poly::one(rank), w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Normal-form terms `(w, f_w)` in a fixed order.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Poly {
        self.terms.get(w).cloned().unwrap_or_else(|| Poly::zero(self.rank))
    }

    fn add_term(&mut self, w: Permutation, f: Poly) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + &f;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, f);
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<(), NhError> {
        if self.rank != other.rank {
            Err(NhError::RankMismatch { left: self.rank, right: other.rank })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, NhError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(w.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, NhError> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, f) in &self.terms {
            out.add_term(w.clone(), f.scale(c));
        }
        out
    }

    /// Left multiplication by a polynomial: `p * self`.
    pub fn poly_mul_left(&self, p: &Poly) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, f) in &self.terms {
            out.add_term(w.clone(), p * f);
        }
        out
    }

    /// `∂_i * self`, using `∂_i g = s_i(g) ∂_i + ∂_i(g)` and
    /// `∂_i ∂_u = ∂_{s_i u}` when lengths add (zero otherwise).
    fn dd_mul_left(&self, i: usize) -> Self {
        let mut out = Self::zero(self.rank);
        for (u, h) in &self.terms {
            if u.left_ascent(i) {
                out.add_term(u.left_mul_simple(i), h.swap_vars(i).expect("index checked by caller"));
            }
            out.add_term(u.clone(), h.divided_difference(i).expect("index checked by caller"));
        }
        out
    }

    /// Normal-form product `self * other` (apply `other` first).
    pub fn try_mul(&self, other: &Self) -> Result<Self, NhError> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (w, f) in &self.terms {
            let mut acc = other.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = acc.dd_mul_left(i);
                if acc.is_zero() {
                    break;
                }
            }
            for (u, g) in acc.terms {
                out.add_term(u, f * &g);
            }
        }
        Ok(out)
    }

    /// Operator action on a polynomial.
    pub fn apply(&self, p: &Poly) -> Result<Poly, NhError> {
        if p.num_vars() != self.rank {
            return Err(NhError::RankMismatch { left: self.rank, right: p.num_vars() });
        }
        let mut out = Poly::zero(self.rank);
        for (w, f) in &self.terms {
            let mut image = p.clone();
            for &i in w.reduced_word().iter().rev() {
                image = image.divided_difference(i)?;
                if image.is_zero() {
                    break;
                }
            }
            out = &out + &(f * &image);
        }
        Ok(out)
    }

    /// Same as [`NhElement::apply`] but computing every divided difference as
    /// an exact polynomial division, for cross-checking.
    pub fn apply_by_division(&self, p: &Poly) -> Result<Poly, NhError> {
        if p.num_vars() != self.rank {
            return Err(NhError::RankMismatch { left: self.rank, right: p.num_vars() });
        }
        let mut out = Poly::zero(self.rank);
        for (w, f) in &self.terms {
            let mut image = p.clone();
            for &i in w.reduced_word().iter().rev() {
                image = image.divided_difference_by_division(i)?;
            }
            out = &out + &(f * &image);
        }
        Ok(out)
    }

    /// Equality tested twice: by normal form and by the action on the
    /// staircase basis `x^β`, `β_i ≤ a - i`. Since `Z[x]` is free over the
    /// symmetric polynomials on that basis and the action is linear over them,
    /// the two tests must agree; a disagreement is reported as an error.
    pub fn nh_equal(&self, other: &Self) -> Result<bool, NhError> {
        self.check_rank(other)?;
        let normal_form = self == other;
        let diff = self.try_sub(other)?;
        let mut action = true;
        for m in staircase_basis(self.rank) {
            if !diff.apply(&m)?.is_zero() {
                action = false;
                break;
            }
        }
        if normal_form != action {
            return Err(NhError::RepresentationMismatch { normal_form, action });
        }
        Ok(normal_form)
    }

    /// Horizontal juxtaposition `self ⊗ other` in `NH_{a+b}`; the variables of
    /// `other` are shifted by `a`.
    pub fn tensor(&self, other: &Self) -> Self {
        let n = self.rank + other.rank;
        let mut out = Self::zero(n);
        for (w, f) in &self.terms {
            let f = f.embed(n, 0);
            for (v, g) in &other.terms {
                out.add_term(w.tensor(v), &f * &g.embed(n, self.rank));
            }
        }
        out
    }

    /// The degree, if homogeneous: `deg(f ∂_w) = 2 deg f - 2 ℓ(w)`. The zero
    /// element has no degree.
    pub fn degree(&self) -> Option<i64> {
        let mut result = None;
        for (w, f) in &self.terms {
            let d = 2 * f.homogeneous_degree()? as i64 - 2 * w.length() as i64;
            match result {
                None => result = Some(d),
                Some(r) if r != d => return None,
                _ => {}
            }
        }
        result
    }

    /// Whether `self` commutes with every generator `x_i`, `∂_i`.
    pub fn is_central(&self) -> Result<bool, NhError> {
        let mut gens = Vec::new();
        for i in 1..=self.rank {
            gens.push(Self::x(i, self.rank)?);
        }
        for i in 1..self.rank {
            gens.push(Self::dd(i, self.rank)?);
        }
        for g in gens {
            if self.try_mul(&g)? != g.try_mul(self)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The `a!` staircase monomials `x^β` with `0 ≤ β_i ≤ a - i`.
pub fn staircase_basis(a: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; a];
    fn go(i: usize, a: usize, exps: &mut Vec<u32>, out: &mut Vec<Poly>) {
        if i == a {
            out.push(Poly::monomial(exps.clone(), BigInt::one()));
            return;
        }
        for e in 0..=(a - 1 - i) as u32 {
            exps[i] = e;
            go(i + 1, a, exps, out);
        }
        exps[i] = 0;
    }
    go(0, a, &mut exps, &mut out);
    out
}

impl Add for &NhElement {
    type Output = NhElement;
    fn add(self, rhs: Self) -> NhElement {
        self.try_add(rhs).expect("nilHecke addition")
    }
}

impl Sub for &NhElement {
    type Output = NhElement;
    fn sub(self, rhs: Self) -> NhElement {
        self.try_sub(rhs).expect("nilHecke subtraction")
    }
}

impl Mul for &NhElement {
    type Output = NhElement;
    fn mul(self, rhs: Self) -> NhElement {
        self.try_mul(rhs).expect("nilHecke multiplication")
    }
}

impl Neg for &NhElement {
    type Output = NhElement;
    fn neg(self) -> NhElement {
        self.scale(&-BigInt::one())
    }
}

impl Add for NhElement {
    type Output = NhElement;
    fn add(self, rhs: Self) -> NhElement {
        &self + &rhs
    }
}

impl Sub for NhElement {
    type Output = NhElement;
    fn sub(self, rhs: Self) -> NhElement {
        &self - &rhs
    }
}

impl Mul for NhElement {
    type Output = NhElement;
    fn mul(self, rhs: Self) -> NhElement {
        &self * &rhs
    }
}

impl Neg for NhElement {
    type Output = NhElement;
    fn neg(self) -> NhElement {
        -&self
    }
}

impl fmt::Display for NhElement {
    /// `(f)*d[213] + (g)*d[123]`; the identity permutation prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, p)| if w.is_identity() { format!("({p})") } else { format!("({p})*d{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sum of a sequence of elements of the same rank.
pub fn sum<'a, I: IntoIterator<Item = &'a NhElement>>(rank: usize, items: I) -> NhElement {
    let mut out = NhElement::zero(rank);
    for x in items {
        out = &out + x;
    }
    out
}

/// Product `u_1 * u_2 * ... * u_k` (top to bottom).
pub fn product<'a, I: IntoIterator<Item = &'a NhElement>>(rank: usize, items: I) -> NhElement {
    let mut out = NhElement::one(rank);
    for x in items {
        out = &out * x;
    }
    out
}
