//! The ring Λ of symmetric functions (truncated by weight), the bubble
//! dictionary, fake bubbles, thick-bubble determinants and the Hopf-algebra
//! structure behind the higher Grassmannian relations.
//!
//! Elements of Λ are stored in the Schur basis; products are computed through
//! the monomial basis. The weight of `π_α` is `|α|`; its q-degree `2|α|` is
//! only used for reporting.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_arith::determinant;
use crate::partitions::{Partition, PartitionError};
use crate::symfun::{complete_on, lr_coeff, sign_pow, MonomialSym};
use crate::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassmannianError {
    #[error("partition {partition} has more than {rows} parts")]
    TooManyParts { partition: Partition, rows: usize },
    #[error("alphabet sizes must be positive to drop a variable (got a={a}, b={b})")]
    EmptyAlphabet { a: usize, b: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// An element of Λ truncated at weight `cutoff`, in the Schur basis.
///
/// Products that would create terms above the cutoff drop them and set the
/// truncation flag, so checks can assert they stayed in the exact range.
/// Equality compares coefficients only.
#[derive(Clone, Debug)]
pub struct LambdaElement {
    cutoff: u32,
    coeffs: BTreeMap<Partition, BigInt>,
    truncated: bool,
}

impl PartialEq for LambdaElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for LambdaElement {}

impl LambdaElement {
    pub fn zero(cutoff: u32) -> Self {
        LambdaElement { cutoff, coeffs: BTreeMap::new(), truncated: false }
    }

    pub fn one(cutoff: u32) -> Self {
        Self::schur(&Partition::empty(), cutoff)
    }

    /// The Schur function `π_α` (zero with the truncation flag set if `|α|`
    /// exceeds the cutoff).
    pub fn schur(alpha: &Partition, cutoff: u32) -> Self {
        let mut out = Self::zero(cutoff);
        out.add_term(alpha.clone(), BigInt::one());
        out
    }

    /// `h_r = π_{(r)}`; zero for `r < 0`.
    pub fn complete(r: i64, cutoff: u32) -> Self {
        match r {
            r if r < 0 => Self::zero(cutoff),
            r => Self::schur(&Partition::row(r as u32), cutoff),
        }
    }

    /// `ε_r = π_{(1^r)}`; zero for `r < 0`.
    pub fn elementary(r: i64, cutoff: u32) -> Self {
        match r {
            r if r < 0 => Self::zero(cutoff),
            r => Self::schur(&Partition::column(r as usize), cutoff),
        }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (Partition, BigInt)>>(cutoff: u32, terms: I) -> Self {
        let mut out = Self::zero(cutoff);
        for (alpha, c) in terms {
            out.add_term(alpha, c);
        }
        out
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &Partition) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(&Partition::empty()).is_one()
    }

    /// Whether some term was dropped for exceeding the cutoff.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// The common weight of all terms, if the element is homogeneous and
    /// nonzero.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.coeffs.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// The q-degree `2|α|` of a homogeneous element.
    pub fn q_degree(&self) -> Option<i64> {
        self.homogeneous_weight().map(|w| 2 * w as i64)
    }

    pub fn add_term(&mut self, alpha: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if alpha.weight() > self.cutoff {
            self.truncated = true;
            return;
        }
        let entry = self.coeffs.entry(alpha.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&alpha);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self { truncated: self.truncated, ..Self::zero(self.cutoff) };
        for (alpha, d) in &self.coeffs {
            out.add_term(alpha.clone(), d * c);
        }
        out
    }

    /// Re-expresses the element with a different cutoff.
    pub fn with_cutoff(&self, cutoff: u32) -> Self {
        let mut out = Self { truncated: self.truncated, ..Self::zero(cutoff) };
        for (alpha, c) in &self.coeffs {
            out.add_term(alpha.clone(), c.clone());
        }
        out
    }

    fn combine(&self, other: &Self, sign: &BigInt) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = Self { truncated: self.truncated || other.truncated, ..Self::zero(cutoff) };
        for (alpha, c) in &self.coeffs {
            out.add_term(alpha.clone(), c.clone());
        }
        for (alpha, c) in &other.coeffs {
            out.add_term(alpha.clone(), c * sign);
        }
        out
    }

    /// Homogeneous components in the monomial basis, keyed by weight.
    fn monomial_components(&self) -> BTreeMap<u32, MonomialSym> {
        let mut out: BTreeMap<u32, BTreeMap<Partition, BigInt>> = BTreeMap::new();
        for (alpha, c) in &self.coeffs {
            out.entry(alpha.weight()).or_default().insert(alpha.clone(), c.clone());
        }
        out.into_iter().map(|(w, part)| (w, MonomialSym::from_schur(&part, None))).collect()
    }

    fn product(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = Self { truncated: self.truncated || other.truncated, ..Self::zero(cutoff) };
        let left = self.monomial_components();
        let right = other.monomial_components();
        let mut acc = MonomialSym::zero(None);
        for (wl, l) in &left {
            for (wr, r) in &right {
                if wl + wr > cutoff {
                    out.truncated = true;
                } else {
                    acc = &acc + &(l * r);
                }
            }
        }
        for (alpha, c) in acc.to_schur() {
            out.add_term(alpha, c);
        }
        out
    }

    /// The antipode `S(π_α) = (-1)^{|α|} π_{ᾱ}` (`ᾱ` the conjugate).
    pub fn antipode(&self) -> Self {
        let mut out = Self { truncated: self.truncated, ..Self::zero(self.cutoff) };
        for (alpha, c) in &self.coeffs {
            out.add_term(alpha.conjugate(), c * sign_pow(alpha.weight() as i64));
        }
        out
    }

    /// The counit: the constant term.
    pub fn counit(&self) -> BigInt {
        self.coeff(&Partition::empty())
    }

    /// The coproduct `Δ(π_α) = Σ c_{β,γ}^α π_β ⊗ π_γ`, from
    /// Littlewood–Richardson coefficients.
    pub fn coproduct(&self) -> Tensor {
        let mut out = Tensor::new();
        for (alpha, c) in &self.coeffs {
            for beta in sub_partitions(alpha) {
                let rest = alpha.weight() - beta.weight();
                for gamma in crate::partitions::partitions_of(rest, None) {
                    let lr = lr_coeff(&beta, &gamma, alpha);
                    if !lr.is_zero() {
                        tensor_add(&mut out, (beta.clone(), gamma), lr * c);
                    }
                }
            }
        }
        out
    }

    /// The coproduct computed without Littlewood–Richardson coefficients:
    /// `Δ` is the ring map with `Δ(h_r) = Σ h_i ⊗ h_{r-i}`, applied to the
    /// Jacobi–Trudy determinant of each `π_α`.
    pub fn coproduct_by_determinant(&self) -> Tensor {
        let mut out = Tensor::new();
        for (alpha, c) in &self.coeffs {
            let l = alpha.len();
            let top = alpha.part(0) as usize + l;
            // Variables 1..=top are h'_r (left factor), top+1..=2top are h''_r.
            let nv = 2 * top.max(1);
            let entry = |m: i64| -> Poly {
                let mut p = Poly::zero(nv);
                for i in 0..=m.max(-1) {
                    let mut exps = vec![0u32; nv];
                    if i > 0 {
                        exps[i as usize - 1] += 1;
                    }
                    if m - i > 0 {
                        exps[top + (m - i) as usize - 1] += 1;
                    }
                    p = &p + &Poly::monomial(exps, BigInt::one());
                }
                p
            };
            let matrix: Vec<Vec<Poly>> = (0..l)
                .map(|s| (0..l).map(|t| entry(alpha.part(s) as i64 + t as i64 - s as i64)).collect())
                .collect();
            let det = determinant(&matrix, &Poly::one(nv));
            let mut h_cache: BTreeMap<Partition, BTreeMap<Partition, BigInt>> = BTreeMap::new();
            let mut h_schur = |mu: Partition| -> BTreeMap<Partition, BigInt> {
                h_cache.entry(mu.clone()).or_insert_with(|| h_product_in_schur(&mu)).clone()
            };
            for (mono, d) in det.terms() {
                let (left, right) = mono.exps().split_at(top);
                let mu = partition_from_multiplicities(left);
                let nu = partition_from_multiplicities(right);
                let ls = h_schur(mu);
                let rs = h_schur(nu);
                for (beta, x) in &ls {
                    for (gamma, y) in &rs {
                        tensor_add(&mut out, (beta.clone(), gamma.clone()), x * y * d * c);
                    }
                }
            }
        }
        out
    }
}

/// Partitions contained in `alpha`.
fn sub_partitions(alpha: &Partition) -> Vec<Partition> {
    crate::partitions::partitions_up_to(alpha.weight(), Some(alpha.len()))
        .into_iter()
        .filter(|beta| alpha.contains(beta))
        .collect()
}

/// Schur expansion of `h_μ = h_{μ_1} h_{μ_2} ⋯`.
fn h_product_in_schur(mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut acc = MonomialSym::one(None);
    for &r in mu.parts() {
        acc = &acc * &MonomialSym::complete(r as i64, None);
    }
    acc.to_schur()
}

/// The partition with `mult[r-1]` parts equal to `r`.
fn partition_from_multiplicities(mult: &[u32]) -> Partition {
    let parts = mult
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i as u32 + 1, k as usize))
        .collect();
    Partition::from_unsorted(parts)
}

/// An element of Λ ⊗ Λ in the basis `π_β ⊗ π_γ`.
pub type Tensor = BTreeMap<(Partition, Partition), BigInt>;

fn tensor_add(t: &mut Tensor, key: (Partition, Partition), c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = t.entry(key.clone()).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        t.remove(&key);
    }
}

/// `M ∘ (S ⊗ I)` applied to a tensor: `Σ c · S(π_β) π_γ`.
pub fn antipode_multiply(t: &Tensor, cutoff: u32) -> LambdaElement {
    let mut out = LambdaElement::zero(cutoff);
    for ((beta, gamma), c) in t {
        let left = LambdaElement::schur(beta, cutoff).antipode();
        let term = &left * &LambdaElement::schur(gamma, cutoff);
        out = &out + &term.scale(c);
    }
    out
}

impl Add for &LambdaElement {
    type Output = LambdaElement;
    fn add(self, rhs: &LambdaElement) -> LambdaElement {
        self.combine(rhs, &BigInt::one())
    }
}

impl Sub for &LambdaElement {
    type Output = LambdaElement;
    fn sub(self, rhs: &LambdaElement) -> LambdaElement {
        self.combine(rhs, &-BigInt::one())
    }
}

impl Mul for &LambdaElement {
    type Output = LambdaElement;
    fn mul(self, rhs: &LambdaElement) -> LambdaElement {
        self.product(rhs)
    }
}

impl Neg for &LambdaElement {
    type Output = LambdaElement;
    fn neg(self) -> LambdaElement {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (alpha, c)) in self.coeffs.iter().enumerate() {
            let (sign, mag) = if c < &BigInt::zero() { ("-", -c) } else { ("+", c.clone()) };
            match (k, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if alpha.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "π{alpha}")?;
            } else {
                write!(f, "{mag}*π{alpha}")?;
            }
        }
        Ok(())
    }
}

/// Orientation of a closed bubble.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

/// A thin dotted bubble in the region labelled `n`, described by its offset
/// `r` from the baseline dot count `♠` (`n-1` clockwise, `-n-1`
/// counterclockwise). Its degree is `2r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BubbleLabel {
    pub orientation: Orientation,
    pub n: i64,
    pub offset: i64,
}

impl BubbleLabel {
    pub fn new(orientation: Orientation, n: i64, offset: i64) -> Self {
        BubbleLabel { orientation, n, offset }
    }

    /// Baseline dot count `♠`.
    pub fn spade(&self) -> i64 {
        match self.orientation {
            Orientation::Clockwise => self.n - 1,
            Orientation::CounterClockwise => -self.n - 1,
        }
    }

    /// Nominal number of dots `♠ + r`.
    pub fn dots(&self) -> i64 {
        self.spade() + self.offset
    }

    /// A bubble is fake when its nominal dot count is negative.
    pub fn is_fake(&self) -> bool {
        self.dots() < 0
    }

    pub fn degree(&self) -> i64 {
        2 * self.offset
    }

    /// Image in Λ: clockwise `r ↦ h_r`, counterclockwise `r ↦ (-1)^r ε_r`.
    pub fn value(&self, cutoff: u32) -> LambdaElement {
        thin_bubble_value(self.orientation, self.offset, cutoff)
    }
}

impl fmt::Display for BubbleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::Clockwise => "cw",
            Orientation::CounterClockwise => "ccw",
        };
        write!(f, "{o}(♠{:+})_{}", self.offset, self.n)
    }
}

fn thin_bubble_value(orientation: Orientation, r: i64, cutoff: u32) -> LambdaElement {
    match orientation {
        Orientation::Clockwise => LambdaElement::complete(r, cutoff),
        Orientation::CounterClockwise => LambdaElement::elementary(r, cutoff).scale(&sign_pow(r)),
    }
}

/// A polynomial in thin bubbles of one orientation: variable `r` (1-based)
/// is the bubble with offset `r`; a monomial is recorded as the partition
/// of its offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BubblePolynomial {
    pub orientation: Orientation,
    pub n: i64,
    pub terms: BTreeMap<Partition, BigInt>,
}

impl BubblePolynomial {
    /// The bubble labels of one monomial, in increasing offset.
    pub fn labels(&self, monomial: &Partition) -> Vec<BubbleLabel> {
        monomial.parts().iter().rev().map(|&r| BubbleLabel::new(self.orientation, self.n, r as i64)).collect()
    }
}

/// Polynomial in the variables `b_1, ..., b_R` given by
/// `det[b_{rows[s] + t - s}]` with `b_0 = 1`, `b_m = 0` for `m < 0`, and an
/// optional sign `(-1)^m` on every entry. The result is keyed by offset
/// partitions.
fn bubble_determinant(rows: &[u32], signed: bool) -> BTreeMap<Partition, BigInt> {
    let l = rows.len();
    let nv = (rows.first().copied().unwrap_or(0) as usize + l).max(1);
    let entry = |m: i64| -> Poly {
        let sign = if signed { sign_pow(m) } else { BigInt::one() };
        match m {
            m if m < 0 => Poly::zero(nv),
            0 => Poly::one(nv),
            m => {
                let mut exps = vec![0u32; nv];
                exps[m as usize - 1] = 1;
                Poly::monomial(exps, sign)
            }
        }
    };
    let matrix: Vec<Vec<Poly>> = (0..l)
        .map(|s| (0..l).map(|t| entry(rows[s] as i64 + t as i64 - s as i64)).collect())
        .collect();
    determinant(&matrix, &Poly::one(nv))
        .terms()
        .map(|(mono, c)| (partition_from_multiplicities(mono.exps()), c.clone()))
        .collect()
}

/// `φⁿ`: writes `f` as a polynomial in thin bubbles of the given
/// orientation (clockwise bubbles correspond to `h_r`, counterclockwise ones
/// to `(-1)^r ε_r`), using the Jacobi–Trudy and dual determinants.
pub fn phi_n(f: &LambdaElement, n: i64, orientation: Orientation) -> BubblePolynomial {
    let mut terms: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (alpha, c) in f.coeffs() {
        let expansion = match orientation {
            Orientation::Clockwise => bubble_determinant(alpha.parts(), false),
            // π_α = det[ε_{α'_s + t - s}], and ε_m = (-1)^m · (ccw bubble m).
            Orientation::CounterClockwise => bubble_determinant(alpha.conjugate().parts(), false)
                .into_iter()
                .map(|(mu, d)| {
                    let s = sign_pow(mu.weight() as i64);
                    (mu, d * s)
                })
                .collect(),
        };
        for (mu, d) in expansion {
            let entry = terms.entry(mu.clone()).or_insert_with(BigInt::zero);
            *entry += d * c;
            if entry.is_zero() {
                terms.remove(&mu);
            }
        }
    }
    BubblePolynomial { orientation, n, terms }
}

/// `(φⁿ)⁻¹`: evaluates a bubble polynomial in Λ.
pub fn phi_n_inverse(p: &BubblePolynomial, cutoff: u32) -> LambdaElement {
    let mut out = LambdaElement::zero(cutoff);
    for (mu, c) in &p.terms {
        let mut term = LambdaElement::one(cutoff);
        for &r in mu.parts() {
            term = &term * &thin_bubble_value(p.orientation, r as i64, cutoff);
        }
        out = &out + &term.scale(c);
    }
    out
}

/// Counterclockwise bubble values `ccw_0, ..., ccw_D` obtained by inverting
/// the clockwise series: `Σ ccw_r t^r = (Σ h_r t^r)^{-1}`. The result does
/// not depend on `n`; the labels record which bubbles are fake in region `n`.
pub fn fake_bubble_series(n: i64, cutoff: u32) -> Vec<(BubbleLabel, LambdaElement)> {
    let cw: Vec<LambdaElement> = (0..=cutoff as i64).map(|r| LambdaElement::complete(r, cutoff)).collect();
    let mut ccw: Vec<LambdaElement> = vec![LambdaElement::one(cutoff)];
    for m in 1..=cutoff as usize {
        let mut acc = LambdaElement::zero(cutoff);
        for r in 1..=m {
            acc = &acc + &(&cw[r] * &ccw[m - r]);
        }
        ccw.push(-&acc);
    }
    ccw.into_iter()
        .enumerate()
        .map(|(r, v)| (BubbleLabel::new(Orientation::CounterClockwise, n, r as i64), v))
        .collect()
}

/// Coefficients of `t^0, ..., t^D` in `(Σ cw_r t^r)(Σ ccw_r t^r)`, with the
/// clockwise values `h_r` and the given counterclockwise values.
pub fn grassmannian_product(ccw: &[LambdaElement], cutoff: u32) -> Vec<LambdaElement> {
    (0..=cutoff as usize)
        .map(|m| {
            let mut acc = LambdaElement::zero(cutoff);
            for (r, c) in ccw.iter().enumerate().take(m + 1) {
                acc = &acc + &(&LambdaElement::complete((m - r) as i64, cutoff) * c);
            }
            acc
        })
        .collect()
}

fn check_thickness(alpha: &Partition, a: usize) -> Result<(), GrassmannianError> {
    if alpha.len() > a {
        Err(GrassmannianError::TooManyParts { partition: alpha.clone(), rows: a })
    } else {
        Ok(())
    }
}

/// Thick bubble of thickness `a` labelled by `α ∈ P(a)`, reduced to thin
/// bubbles by the signed `a × a` determinant and evaluated through `φⁿ`.
pub fn thick_bubble(alpha: &Partition, a: usize, orientation: Orientation) -> Result<LambdaElement, GrassmannianError> {
    check_thickness(alpha, a)?;
    let rows = alpha.padded(a);
    let signed = orientation == Orientation::CounterClockwise;
    // The counterclockwise signs are folded into the entries, so every
    // variable b_r evaluates to the plain h_r or ε_r.
    let cutoff = alpha.weight();
    let mut out = LambdaElement::zero(cutoff);
    for (mu, c) in &bubble_determinant(&rows, signed) {
        let mut term = LambdaElement::one(cutoff);
        for &r in mu.parts() {
            let v = match orientation {
                Orientation::Clockwise => LambdaElement::complete(r as i64, cutoff),
                Orientation::CounterClockwise => LambdaElement::elementary(r as i64, cutoff),
            };
            term = &term * &v;
        }
        out = &out + &term.scale(c);
    }
    Ok(out.scale(&sign_pow((a * a.saturating_sub(1) / 2) as i64)))
}

/// Closed form of the thick bubble: clockwise `(-1)^{a(a-1)/2} π_α`,
/// counterclockwise `(-1)^{a(a-1)/2 + |α|} π_{ᾱ}`.
pub fn thick_bubble_closed_form(
    alpha: &Partition,
    a: usize,
    orientation: Orientation,
) -> Result<LambdaElement, GrassmannianError> {
    check_thickness(alpha, a)?;
    let base = (a * a.saturating_sub(1) / 2) as i64;
    let cutoff = alpha.weight();
    Ok(match orientation {
        Orientation::Clockwise => LambdaElement::schur(alpha, cutoff).scale(&sign_pow(base)),
        Orientation::CounterClockwise => {
            LambdaElement::schur(&alpha.conjugate(), cutoff).scale(&sign_pow(base + alpha.weight() as i64))
        }
    })
}

/// Left side of the higher Grassmannian relation for `π_α`, by direct
/// expansion: `Σ_{β,γ} (-1)^{|β|} c_{β,γ}^α π_{β̄} π_γ`.
pub fn hgr_direct(alpha: &Partition) -> LambdaElement {
    let cutoff = alpha.weight();
    let mut out = LambdaElement::zero(cutoff);
    for beta in sub_partitions(alpha) {
        for gamma in crate::partitions::partitions_of(alpha.weight() - beta.weight(), None) {
            let c = lr_coeff(&beta, &gamma, alpha);
            if c.is_zero() {
                continue;
            }
            let term = &LambdaElement::schur(&beta.conjugate(), cutoff) * &LambdaElement::schur(&gamma, cutoff);
            out = &out + &term.scale(&(c * sign_pow(beta.weight() as i64)));
        }
    }
    out
}

/// The same quantity as `M (S ⊗ I) Δ (π_α)`, with the coproduct taken from
/// the determinant route.
pub fn hgr_hopf(alpha: &Partition) -> LambdaElement {
    let cutoff = alpha.weight();
    let delta = LambdaElement::schur(alpha, cutoff).coproduct_by_determinant();
    antipode_multiply(&delta, cutoff)
}

/// Both routes agree with `ι ε (π_α) = δ_{α,∅}`.
pub fn higher_grassmannian_check(alpha: &Partition) -> bool {
    let expected = if alpha.is_empty() { LambdaElement::one(0) } else { LambdaElement::zero(0) };
    let direct = hgr_direct(alpha);
    let hopf = hgr_hopf(alpha);
    direct == expected && hopf == expected && !direct.is_truncated() && !hopf.is_truncated()
}

/// Expansion of `h_i(x, y, z)` over split alphabets: `x` with `a` variables,
/// `y` with `b` variables and `z` infinite. The entry for `r` is the
/// polynomial in `x_1..x_a, y_1..y_b` multiplying `h_r(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExpansion {
    pub i: u32,
    pub a: usize,
    pub b: usize,
    pub coeffs: BTreeMap<u32, Poly>,
}

pub fn central_element_coeffs(i: u32, a: usize, b: usize) -> CentralExpansion {
    let nv = a + b;
    let mut coeffs = BTreeMap::new();
    for r in 0..=i {
        let mut p = Poly::zero(nv);
        for s in 0..=(i - r) {
            let t = i - r - s;
            p = &p + &(&complete_on(s as i64, nv, 0, a) * &complete_on(t as i64, nv, a, b));
        }
        if !p.is_zero() {
            coeffs.insert(r, p);
        }
    }
    CentralExpansion { i, a, b, coeffs }
}

impl CentralExpansion {
    /// Sets `x_a = y_b = 0` and removes both variables.
    pub fn drop_last_variables(&self) -> Result<CentralExpansion, GrassmannianError> {
        if self.a == 0 || self.b == 0 {
            return Err(GrassmannianError::EmptyAlphabet { a: self.a, b: self.b });
        }
        let mut coeffs = BTreeMap::new();
        for (&r, p) in &self.coeffs {
            let reduced = p
                .set_var_zero(self.a + self.b)
                .and_then(|q| q.remove_var(self.a + self.b))
                .and_then(|q| q.set_var_zero(self.a))
                .and_then(|q| q.remove_var(self.a))
                .expect("indices in range");
            if !reduced.is_zero() {
                coeffs.insert(r, reduced);
            }
        }
        Ok(CentralExpansion { i: self.i, a: self.a - 1, b: self.b - 1, coeffs })
    }

    /// Specializes `z` to `c` further variables and returns the resulting
    /// polynomial in `a + b + c` variables.
    pub fn specialize(&self, c: usize) -> Poly {
        let nv = self.a + self.b + c;
        let mut out = Poly::zero(nv);
        for (&r, p) in &self.coeffs {
            out = &out + &(&p.embed(nv, 0) * &complete_on(r as i64, nv, self.a + self.b, c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_box, partitions_up_to};
    use crate::symfun::complete;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn products_and_truncation() {
        let h1 = LambdaElement::complete(1, 3);
        let sq = &h1 * &h1;
        assert_eq!(sq, LambdaElement::from_coeffs(3, [(p("2"), BigInt::one()), (p("1,1"), BigInt::one())]));
        assert!(!sq.is_truncated());
        let h2 = LambdaElement::complete(2, 3);
        let over = &h2 * &h2;
        assert!(over.is_zero());
        assert!(over.is_truncated());
        assert_eq!(sq.homogeneous_weight(), Some(2));
        assert_eq!(sq.q_degree(), Some(4));
        assert_eq!(sq.to_string(), "π(1,1) + π(2)");
    }

    #[test]
    fn bubble_labels() {
        let b = BubbleLabel::new(Orientation::Clockwise, 2, 0);
        assert_eq!(b.spade(), 1);
        assert!(!b.is_fake());
        let c = BubbleLabel::new(Orientation::CounterClockwise, 2, 1);
        assert_eq!(c.dots(), -2);
        assert!(c.is_fake());
        assert_eq!(c.degree(), 2);
        assert!(b.value(4).is_one());
        assert!(BubbleLabel::new(Orientation::CounterClockwise, 0, -1).value(4).is_zero());
        assert_eq!(c.value(4), LambdaElement::elementary(1, 4).scale(&BigInt::from(-1)));
    }

    #[test]
    fn dictionary_round_trip() {
        for alpha in partitions_up_to(5, None) {
            let f = LambdaElement::schur(&alpha, 5);
            for o in [Orientation::Clockwise, Orientation::CounterClockwise] {
                let bubbles = phi_n(&f, 3, o);
                assert_eq!(phi_n_inverse(&bubbles, 5), f, "{alpha} {o:?}");
            }
        }
        let h1h2 = &LambdaElement::complete(1, 4) * &LambdaElement::complete(2, 4);
        let bubbles = phi_n(&h1h2, 0, Orientation::Clockwise);
        assert_eq!(bubbles.terms.len(), 1);
        assert_eq!(bubbles.terms.get(&p("2,1")), Some(&BigInt::one()));
        let labels = bubbles.labels(&p("2,1"));
        assert_eq!(labels[0].offset, 1);
        assert_eq!(labels[1].offset, 2);
    }

    #[test]
    fn fake_series_inverts() {
        let series = fake_bubble_series(1, 8);
        for (label, v) in &series {
            let r = label.offset;
            assert_eq!(*v, LambdaElement::elementary(r, 8).scale(&sign_pow(r)));
        }
        let values: Vec<_> = series.into_iter().map(|(_, v)| v).collect();
        let prod = grassmannian_product(&values, 8);
        assert!(prod[0].is_one());
        assert!(prod[1..].iter().all(LambdaElement::is_zero));
    }

    #[test]
    fn thick_bubbles_match_closed_form() {
        for a in 1..=3 {
            for alpha in enumerate_box(a, 4) {
                for o in [Orientation::Clockwise, Orientation::CounterClockwise] {
                    let det = thick_bubble(&alpha, a, o).unwrap();
                    assert_eq!(det, thick_bubble_closed_form(&alpha, a, o).unwrap(), "{alpha} a={a} {o:?}");
                    assert!(!det.is_truncated());
                }
            }
        }
        let cw = thick_bubble(&p("1,1"), 2, Orientation::Clockwise).unwrap();
        assert_eq!(cw, LambdaElement::schur(&p("1,1"), 2).scale(&BigInt::from(-1)));
        let ccw = thick_bubble(&p("2"), 2, Orientation::CounterClockwise).unwrap();
        assert_eq!(ccw, LambdaElement::schur(&p("1,1"), 2).scale(&BigInt::from(-1)));
        assert!(thick_bubble(&p("1,1,1"), 2, Orientation::Clockwise).is_err());
    }

    #[test]
    fn hopf_structure() {
        for r in 0..=5 {
            assert_eq!(
                LambdaElement::complete(r, 6).antipode(),
                LambdaElement::elementary(r, 6).scale(&sign_pow(r))
            );
        }
        for alpha in partitions_up_to(6, None) {
            let f = LambdaElement::schur(&alpha, 6);
            assert_eq!(f.antipode().antipode(), f);
        }
        for alpha in partitions_up_to(4, None) {
            let f = LambdaElement::schur(&alpha, 4);
            assert_eq!(f.coproduct(), f.coproduct_by_determinant(), "{alpha}");
            assert_eq!(f.counit().is_one(), alpha.is_empty());
        }
        // Δ(ε_3) = Σ ε_i ⊗ ε_{3-i}.
        let delta = LambdaElement::elementary(3, 3).coproduct();
        assert_eq!(delta.len(), 4);
        for i in 0..=3usize {
            assert!(delta.get(&(Partition::column(i), Partition::column(3 - i))).is_some_and(|c| c.is_one()));
        }
    }

    #[test]
    fn higher_grassmannian() {
        for alpha in partitions_up_to(4, None) {
            assert!(higher_grassmannian_check(&alpha), "{alpha}");
        }
        assert!(hgr_direct(&Partition::empty()).is_one());
    }

    #[test]
    fn central_element() {
        let e = central_element_coeffs(0, 2, 2);
        assert_eq!(e.coeffs.len(), 1);
        assert!(e.coeffs[&0].is_one());
        let e = central_element_coeffs(1, 1, 1);
        let dropped = e.drop_last_variables().unwrap();
        assert_eq!(dropped.coeffs.len(), 1);
        assert!(dropped.coeffs[&1].is_one());
        for i in 0..=3 {
            let e = central_element_coeffs(i, 2, 2);
            assert_eq!(e.drop_last_variables().unwrap(), central_element_coeffs(i, 1, 1));
            assert_eq!(e.specialize(2), complete(i as i64, 6));
        }
        assert!(central_element_coeffs(1, 0, 1).drop_last_variables().is_err());
    }
}
