//! The idempotented quantum group U̇(sl₂) over ℤ[q, q⁻¹].
//!
//! Elements of `1_m U̇ 1_n` are stored as ℤ[q,q⁻¹]-combinations of the spanning
//! products `E^{(a)}F^{(b)}1_n` and `F^{(b)}E^{(a)}1_n` (with `m = n + 2a - 2b`).
//! Multiplication rewrites everything into the `EF` order; the canonical basis
//! is reached from there. The action on the irreducible modules `V(N)` gives
//! an independent equality test.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::partitions::{enumerate_box, partitions_up_to};
use crate::symfun::sign_pow;
use crate::Laurent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UdotError {
    #[error("tag {tag} does not map weight {from} to weight {to}")]
    WeightMismatch { tag: Tag, from: i64, to: i64 },
    #[error("decomposition of {form} with a={a}, b={b} requires {requirement} (got n={n})")]
    WrongSide { form: &'static str, a: u32, b: u32, n: i64, requirement: String },
    #[error("exponents must be positive (got a={a}, b={b}, c={c})")]
    NonPositive { a: u32, b: u32, c: u32 },
}

/// Quantum integer `[m] = q^{m-1} + q^{m-3} + … + q^{1-m}`, with `[-m] = -[m]`.
pub fn qint(m: i64) -> Laurent {
    let k = m.abs();
    let sign = if m < 0 { -BigInt::one() } else { BigInt::one() };
    Laurent::from_terms((0..k).map(|i| (k - 1 - 2 * i, sign.clone())))
}

/// Quantum factorial `[a]! = [1][2]⋯[a]`.
pub fn qfact(a: u32) -> Laurent {
    (1..=a as i64).fold(Laurent::one(), |acc, i| &acc * &qint(i))
}

/// Balanced q-binomial `[m choose j]` for any integer `m`: the product formula
/// with exact division for `m ≥ 0`, the reflection
/// `[−m choose j] = (−1)^j [m+j−1 choose j]` otherwise.
pub fn qbin(m: i64, j: u32) -> Laurent {
    if m < 0 {
        return qbin(-m + j as i64 - 1, j).scale(&sign_pow(j as i64));
    }
    let numerator = (0..j as i64).fold(Laurent::one(), |acc, i| &acc * &qint(m - i));
    numerator.div_exact(&qfact(j)).expect("q-binomial division is exact")
}

/// `[m choose j]` from the q-Pascal recursion alone (an independent route).
pub fn qbin_pascal(m: i64, j: u32) -> Laurent {
    fn go(m: i64, j: u32, memo: &mut HashMap<(i64, u32), Laurent>) -> Laurent {
        if j == 0 {
            return Laurent::one();
        }
        if m == 0 {
            return Laurent::zero();
        }
        if let Some(v) = memo.get(&(m, j)) {
            return v.clone();
        }
        let j64 = j as i64;
        let v = if m > 0 {
            // [m, j] = q^{-j} [m-1, j] + q^{m-j} [m-1, j-1]
            &go(m - 1, j, memo).shift(-j64) + &go(m - 1, j - 1, memo).shift(m - j64)
        } else {
            // Solved from the same recursion at m+1.
            (&go(m + 1, j, memo) - &go(m, j - 1, memo).shift(m + 1 - j64)).shift(j64)
        };
        memo.insert((m, j), v.clone());
        v
    }
    go(m, j, &mut HashMap::new())
}

/// Precomputed q-binomials for `m` in a range and `j ≤ j_max`; immutable
/// once built and therefore safe to share between threads.
#[derive(Clone, Debug)]
pub struct QBinomTable {
    m_min: i64,
    m_max: i64,
    j_max: u32,
    values: HashMap<(i64, u32), Laurent>,
}

impl QBinomTable {
    pub fn new(m_min: i64, m_max: i64, j_max: u32) -> Self {
        let mut values = HashMap::new();
        for m in m_min..=m_max {
            for j in 0..=j_max {
                values.insert((m, j), qbin(m, j));
            }
        }
        QBinomTable { m_min, m_max, j_max, values }
    }

    /// Table lookup, falling back to direct computation outside the range.
    pub fn get(&self, m: i64, j: u32) -> Laurent {
        if (self.m_min..=self.m_max).contains(&m) && j <= self.j_max {
            self.values[&(m, j)].clone()
        } else {
            qbin(m, j)
        }
    }
}

/// A spanning product of divided powers applied to `1_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// `E^{(a)} F^{(b)} 1_n`
    EF { a: u32, b: u32 },
    /// `F^{(b)} E^{(a)} 1_n`
    FE { b: u32, a: u32 },
}

impl Tag {
    pub fn e_power(&self) -> u32 {
        match *self {
            Tag::EF { a, .. } | Tag::FE { a, .. } => a,
        }
    }

    pub fn f_power(&self) -> u32 {
        match *self {
            Tag::EF { b, .. } | Tag::FE { b, .. } => b,
        }
    }

    /// Target weight when applied to `1_n`.
    pub fn target(&self, n: i64) -> i64 {
        n + 2 * self.e_power() as i64 - 2 * self.f_power() as i64
    }

    /// Membership in the canonical basis: `E^{(a)}1_n`, `F^{(b)}1_n`, `EF`
    /// with `n ≤ b−a` and `FE` with `n ≥ b−a`. At `n = b−a` both tags name
    /// the same element.
    pub fn is_canonical(&self, n: i64) -> bool {
        let d = self.f_power() as i64 - self.e_power() as i64;
        if self.e_power() == 0 || self.f_power() == 0 {
            return true;
        }
        match self {
            Tag::EF { .. } => n <= d,
            Tag::FE { .. } => n >= d,
        }
    }

    /// Canonical and, on the boundary `n = b−a`, the chosen `EF`
    /// representative.
    pub fn is_preferred_canonical(&self, n: i64) -> bool {
        let d = self.f_power() as i64 - self.e_power() as i64;
        if self.e_power() == 0 || self.f_power() == 0 {
            return *self == self.normalized();
        }
        match self {
            Tag::EF { .. } => n <= d,
            Tag::FE { .. } => n > d,
        }
    }

    /// `E^{(a)}1_n` and `F^{(b)}1_n`, written as `EF` tags with one exponent 0.
    fn normalized(self) -> Tag {
        match self {
            Tag::FE { b, a } if a == 0 || b == 0 => Tag::EF { a, b },
            t => t,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Tag::EF { a, b } => write!(f, "E^({a})F^({b})"),
            Tag::FE { b, a } => write!(f, "F^({b})E^({a})"),
        }
    }
}

/// An element of `1_m U̇ 1_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UdotElement {
    source: i64,
    target: i64,
    terms: BTreeMap<Tag, Laurent>,
}

impl UdotElement {
    pub fn zero(source: i64, target: i64) -> Self {
        UdotElement { source, target, terms: BTreeMap::new() }
    }

    /// The idempotent `1_n`.
    pub fn idempotent(n: i64) -> Self {
        Self::basis(Tag::EF { a: 0, b: 0 }, n)
    }

    /// `E^{(a)}1_n`.
    pub fn e(a: u32, n: i64) -> Self {
        Self::basis(Tag::EF { a, b: 0 }, n)
    }

    /// `F^{(b)}1_n`.
    pub fn f(b: u32, n: i64) -> Self {
        Self::basis(Tag::EF { a: 0, b }, n)
    }

    /// A single spanning product applied to `1_n`.
    pub fn basis(tag: Tag, n: i64) -> Self {
        let mut out = Self::zero(n, tag.target(n));
        out.terms.insert(tag.normalized(), Laurent::one());
        out
    }

    /// Builds an element from tagged coefficients; every tag must map
    /// weight `source` to `target`.
    pub fn from_terms<I>(source: i64, target: i64, terms: I) -> Result<Self, UdotError>
    where
        I: IntoIterator<Item = (Tag, Laurent)>,
    {
        let mut out = Self::zero(source, target);
        for (tag, c) in terms {
            if tag.target(source) != target {
                return Err(UdotError::WeightMismatch { tag, from: source, to: target });
            }
            out.add_term(tag, c);
        }
        Ok(out)
    }

    pub fn source(&self) -> i64 {
        self.source
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn terms(&self) -> &BTreeMap<Tag, Laurent> {
        &self.terms
    }

    pub fn coeff(&self, tag: &Tag) -> Laurent {
        self.terms.get(&tag.normalized()).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, tag: Tag, c: Laurent) {
        if c.is_zero() {
            return;
        }
        let tag = tag.normalized();
        let entry = self.terms.entry(tag).or_insert_with(Laurent::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&tag);
        }
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero(self.source, self.target);
        for (tag, d) in &self.terms {
            out.add_term(*tag, d * c);
        }
        out
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(
            (self.source, self.target),
            (other.source, other.target),
            "adding elements of different weight spaces"
        );
        let mut out = self.clone();
        for (tag, c) in &other.terms {
            out.add_term(*tag, c.scale(&BigInt::from(sign)));
        }
        out
    }

    /// Whether every tag is the chosen canonical representative.
    pub fn is_canonical_form(&self) -> bool {
        self.terms.keys().all(|t| t.is_preferred_canonical(self.source))
    }

    /// Rewrites into the `EF` normal form.
    pub fn to_ef(&self) -> Self {
        let mut out = Self::zero(self.source, self.target);
        for (tag, c) in &self.terms {
            let piece = match *tag {
                Tag::EF { .. } => Self::basis(*tag, self.source),
                Tag::FE { b, a } => f_times_ef(b, &Self::e(a, self.source)),
            };
            out = &out + &piece.scale(c);
        }
        out
    }

    /// Expansion in the canonical basis: `EF` tags with `n ≤ b−a` are kept,
    /// the others are rewritten with
    /// `E^{(a)}F^{(b)}1_n = Σ_j [a−b+n choose j] F^{(b−j)}E^{(a−j)}1_n`.
    pub fn to_canonical(&self) -> Self {
        let n = self.source;
        let ef = self.to_ef();
        let mut out = Self::zero(n, self.target);
        for (tag, c) in &ef.terms {
            let (a, b) = (tag.e_power(), tag.f_power());
            if tag.is_preferred_canonical(n) {
                out.add_term(*tag, c.clone());
                continue;
            }
            for j in 0..=a.min(b) {
                let coeff = qbin(a as i64 - b as i64 + n, j);
                out.add_term(Tag::FE { b: b - j, a: a - j }, &coeff * c);
            }
        }
        out
    }

    /// Scalar by which the element acts from the weight-`n` line of `V(N)` to
    /// the weight-`m` line (zero if either weight does not occur).
    pub fn act_on_irrep(&self, big_n: u32) -> Laurent {
        let big_n = big_n as i64;
        let in_range = |w: i64| w.abs() <= big_n && (big_n - w) % 2 == 0;
        if !in_range(self.source) || !in_range(self.target) {
            return Laurent::zero();
        }
        let k = (big_n - self.source) / 2;
        let mut out = Laurent::zero();
        for (tag, c) in &self.terms {
            let (a, b) = (tag.e_power() as i64, tag.f_power() as i64);
            let scalar = match tag {
                Tag::EF { .. } => {
                    // F^{(b)} then E^{(a)}.
                    if k + b > big_n {
                        Laurent::zero()
                    } else {
                        &irrep_f(big_n, k, b) * &irrep_e(big_n, k + b, a)
                    }
                }
                Tag::FE { .. } => {
                    if k - a < 0 {
                        Laurent::zero()
                    } else {
                        &irrep_e(big_n, k, a) * &irrep_f(big_n, k - a, b)
                    }
                }
            };
            out = &out + &(&scalar * c);
        }
        out
    }

    /// Agreement of the actions on `V(N)` for `N ≤ max_n`.
    pub fn same_action(&self, other: &Self, max_n: u32) -> bool {
        (0..=max_n).all(|big_n| self.act_on_irrep(big_n) == other.act_on_irrep(big_n))
    }

    /// Product `self · other`; zero if the weights do not compose.
    pub fn mul(&self, other: &Self) -> Self {
        if self.source != other.target {
            return Self::zero(other.source, self.target);
        }
        let right = other.to_ef();
        let mut out = Self::zero(other.source, self.target);
        for (tag, c) in &self.to_ef().terms {
            let (a, b) = (tag.e_power(), tag.f_power());
            let piece = e_times_ef(a, &f_times_ef(b, &right));
            out = &out + &piece.scale(c);
        }
        out
    }
}

/// `F^{(b)} v_k = [k+b choose b] v_{k+b}` in `V(N)`.
fn irrep_f(_big_n: i64, k: i64, b: i64) -> Laurent {
    qbin(k + b, b as u32)
}

/// `E^{(a)} v_k = [N−k+a choose a] v_{k−a}` in `V(N)` (zero if `k < a`).
fn irrep_e(big_n: i64, k: i64, a: i64) -> Laurent {
    if k < a {
        Laurent::zero()
    } else {
        qbin(big_n - k + a, a as u32)
    }
}

/// `E^{(k)} · x` for `x` in `EF` normal form:
/// `E^{(k)}E^{(a)} = [a+k choose k] E^{(a+k)}`.
fn e_times_ef(k: u32, x: &UdotElement) -> UdotElement {
    let mut out = UdotElement::zero(x.source, x.target + 2 * k as i64);
    for (tag, c) in &x.terms {
        let (a, b) = (tag.e_power(), tag.f_power());
        out.add_term(Tag::EF { a: a + k, b }, &qbin((a + k) as i64, k) * c);
    }
    out
}

/// `F^{(k)} · x` for `x` in `EF` normal form, using
/// `F^{(k)}E^{(a)}1_w = Σ_j [k−a−w choose j] E^{(a−j)}F^{(k−j)}1_w` and
/// `F^{(k−j)}F^{(b)} = [b+k−j choose b] F^{(b+k−j)}`.
fn f_times_ef(k: u32, x: &UdotElement) -> UdotElement {
    let mut out = UdotElement::zero(x.source, x.target - 2 * k as i64);
    for (tag, c) in &x.terms {
        let (a, b) = (tag.e_power(), tag.f_power());
        let w = x.source - 2 * b as i64;
        for j in 0..=a.min(k) {
            let coeff = &qbin(k as i64 - a as i64 - w, j) * &qbin((b + k - j) as i64, b);
            out.add_term(Tag::EF { a: a - j, b: b + k - j }, &coeff * c);
        }
    }
    out
}

impl Add for &UdotElement {
    type Output = UdotElement;
    fn add(self, rhs: &UdotElement) -> UdotElement {
        self.combine(rhs, 1)
    }
}

impl Sub for &UdotElement {
    type Output = UdotElement;
    fn sub(self, rhs: &UdotElement) -> UdotElement {
        self.combine(rhs, -1)
    }
}

impl Mul for &UdotElement {
    type Output = UdotElement;
    fn mul(self, rhs: &UdotElement) -> UdotElement {
        UdotElement::mul(self, rhs)
    }
}

impl Neg for &UdotElement {
    type Output = UdotElement;
    fn neg(self) -> UdotElement {
        self.scale(&-Laurent::one())
    }
}

impl fmt::Display for UdotElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(tag, c)| {
                let body = match (tag.e_power(), tag.f_power()) {
                    (0, 0) => String::new(),
                    (a, 0) => format!("E^({a})"),
                    (0, b) => format!("F^({b})"),
                    _ => tag.to_string(),
                };
                let coeff = if c.is_one() { String::new() } else { format!("({c})") };
                format!("{coeff}{body}1_{}", self.source)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All canonical tags `x` with source weight `n` and exponents at most
/// `max_power`, using the chosen representative at the boundary.
pub fn canonical_tags(n: i64, max_power: u32) -> Vec<Tag> {
    let mut out = Vec::new();
    for a in 0..=max_power {
        for b in 0..=max_power {
            for tag in [Tag::EF { a, b }, Tag::FE { b, a }] {
                if tag.normalized() == tag && tag.is_preferred_canonical(n) {
                    out.push(tag);
                }
            }
        }
    }
    out
}

/// Structure constants `m_{x,y}^z` of the canonical basis: `x · y` for `y`
/// at source `n` and `x` at the target of `y`, expanded canonically.
pub fn structure_constants(x: Tag, y: Tag, n: i64) -> BTreeMap<Tag, Laurent> {
    let left = UdotElement::basis(x, y.target(n));
    let right = UdotElement::basis(y, n);
    (&left * &right).to_canonical().terms().clone()
}

/// For `a, b, c > 0`: `E^{(a)}F^{(b)}1_{n+2c}` and `F^{(b)}E^{(c)}1_n` are
/// never both canonical, and neither are `F^{(a)}E^{(b)}1_{n−2c}` and
/// `E^{(b)}F^{(c)}1_n`. Returns whether both statements hold.
pub fn triple_not_both_canonical(a: u32, b: u32, c: u32, n: i64) -> Result<bool, UdotError> {
    if a == 0 || b == 0 || c == 0 {
        return Err(UdotError::NonPositive { a, b, c });
    }
    let c64 = c as i64;
    let first = Tag::EF { a, b }.is_canonical(n + 2 * c64) && Tag::FE { b, a: c }.is_canonical(n);
    let second = Tag::FE { b: a, a: b }.is_canonical(n - 2 * c64) && Tag::EF { a: b, b: c }.is_canonical(n);
    Ok(!first && !second)
}

/// Graded multiplicity of `E^{(a+b)}` in `E^{(a)}E^{(b)}`: `Σ_{α∈P(a,b)} q^{2|α|−ab}`.
pub fn decomposition_multiplicities_ee(a: u32, b: u32) -> Laurent {
    let ab = (a * b) as i64;
    enumerate_box(a as usize, b)
        .iter()
        .fold(Laurent::zero(), |acc, alpha| &acc + &Laurent::q_pow(2 * alpha.weight() as i64 - ab))
}

/// Summands of `E^{(a)}F^{(b)}1_n` for `n ≥ b−a`: copies of
/// `F^{(b−j)}E^{(a−j)}1_n` shifted by `2|α| − j(n+a−b−j)`, one for each
/// `α ∈ P(j, n+a−b−j)`. Keys are `(j, shift)`, values multiplicities.
pub fn decomposition_multiplicities_ef(a: u32, b: u32, n: i64) -> Result<BTreeMap<(u32, i64), u64>, UdotError> {
    let m = n + a as i64 - b as i64;
    if m < 0 {
        return Err(UdotError::WrongSide { form: "EF", a, b, n, requirement: format!("n ≥ {}", b as i64 - a as i64) });
    }
    Ok(shift_multiset(a.min(b), m))
}

/// Summands of `F^{(b)}E^{(a)}1_n` for `n ≤ b−a`: copies of
/// `E^{(a−j)}F^{(b−j)}1_n` shifted by `2|α| − j(b−a−n−j)`, one for each
/// `α ∈ P(j, b−a−n−j)`.
pub fn decomposition_multiplicities_fe(a: u32, b: u32, n: i64) -> Result<BTreeMap<(u32, i64), u64>, UdotError> {
    let m = b as i64 - a as i64 - n;
    if m < 0 {
        return Err(UdotError::WrongSide { form: "FE", a, b, n, requirement: format!("n ≤ {}", b as i64 - a as i64) });
    }
    Ok(shift_multiset(a.min(b), m))
}

fn shift_multiset(max_j: u32, m: i64) -> BTreeMap<(u32, i64), u64> {
    let mut out = BTreeMap::new();
    for j in 0..=max_j {
        let cols = m - j as i64;
        if cols < 0 {
            continue;
        }
        let ji = j as i64;
        for alpha in enumerate_box(j as usize, cols as u32) {
            *out.entry((j, 2 * alpha.weight() as i64 - ji * cols)).or_insert(0) += 1;
        }
    }
    out
}

/// Folds a shift multiset into generating functions `j ↦ Σ q^{shift}`.
pub fn generating_functions(mult: &BTreeMap<(u32, i64), u64>) -> BTreeMap<u32, Laurent> {
    let mut out: BTreeMap<u32, Laurent> = BTreeMap::new();
    for (&(j, shift), &k) in mult {
        let entry = out.entry(j).or_insert_with(Laurent::zero);
        *entry = &*entry + &Laurent::monomial(shift, BigInt::from(k));
    }
    out
}

/// Exponent of the `j`-th summand in the graded rank of the space of maps
/// between `E^{(a)}F^{(b)}1_n` and its neighbours.
fn hom_base_exponent(a: u32, b: u32, delta: u32, n: i64, j: u32) -> i64 {
    let (a, b, d, j) = (a as i64, b as i64, delta as i64, j as i64);
    2 * j * (j + b - a - n) + d * d + d * (b - a - n + 2 * j)
}

/// `g(x) = Π_{j=1}^x 1/(1 − q^{2j})`, truncated above degree `cutoff`.
fn g_series(x: u32, cutoff: i64) -> Laurent {
    let mut out = Laurent::one();
    for j in 1..=x as i64 {
        let geometric = Laurent::from_terms((0..).map(|k| 2 * j * k).take_while(|&d| d <= cutoff.max(0)).map(|d| (d, BigInt::one())));
        out = (&out * &geometric).truncate_above(cutoff);
    }
    out
}

/// Graded rank, route 1: the closed product formula
/// `Σ_j q^{e_j} g(a−j) g(b−j) g(δ+j) g(j)`, truncated above `cutoff`.
pub fn hom_rank_formula(a: u32, b: u32, delta: u32, n: i64, cutoff: i64) -> Laurent {
    let mut out = Laurent::zero();
    for j in 0..=a.min(b) {
        let base = hom_base_exponent(a, b, delta, n, j);
        let budget = cutoff - base;
        if budget < 0 {
            continue;
        }
        let series = [a - j, b - j, delta + j, j]
            .iter()
            .fold(Laurent::one(), |acc, &x| (&acc * &g_series(x, budget)).truncate_above(budget));
        out = &out + &series.shift(base);
    }
    out
}

/// Graded rank, route 2: enumerates quadruples of partitions
/// `(α, β, γ, σ)` with at most `a−j`, `b−j`, `δ+j`, `j` parts and adds
/// `q^{e_j + 2(|α|+|β|+|γ|+|σ|)}`.
pub fn hom_rank_enumerated(a: u32, b: u32, delta: u32, n: i64, cutoff: i64) -> Laurent {
    let mut out = Laurent::zero();
    for j in 0..=a.min(b) {
        let base = hom_base_exponent(a, b, delta, n, j);
        if base > cutoff {
            continue;
        }
        let max_weight = ((cutoff - base) / 2) as u32;
        // Number of partitions with at most `len` parts, by weight.
        let count = |len: u32| -> Vec<u64> {
            let mut c = vec![0u64; max_weight as usize + 1];
            for p in partitions_up_to(max_weight, Some(len as usize)) {
                c[p.weight() as usize] += 1;
            }
            c
        };
        let lists = [count(a - j), count(b - j), count(delta + j), count(j)];
        for w0 in 0..=max_weight {
            for w1 in 0..=max_weight - w0 {
                for w2 in 0..=max_weight - w0 - w1 {
                    for w3 in 0..=max_weight - w0 - w1 - w2 {
                        let k = lists[0][w0 as usize] * lists[1][w1 as usize] * lists[2][w2 as usize] * lists[3][w3 as usize];
                        if k > 0 {
                            let deg = base + 2 * (w0 + w1 + w2 + w3) as i64;
                            out = &out + &Laurent::monomial(deg, BigInt::from(k));
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::q_cardinality;

    fn l(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    #[test]
    fn quantum_numbers() {
        assert_eq!(qint(0), Laurent::zero());
        assert_eq!(qint(3), l(&[(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(qint(-2), l(&[(-1, -1), (1, -1)]));
        assert_eq!(qbin(2, 1), l(&[(-1, 1), (1, 1)]));
        assert_eq!(qbin(5, 0), Laurent::one());
        assert_eq!(qbin(0, 1), Laurent::zero());
        assert_eq!(qbin(-1, 1), l(&[(0, -1)]));
        for m in -6..=8 {
            for j in 0..=5 {
                assert_eq!(qbin(m, j), qbin_pascal(m, j), "m={m} j={j}");
                if m >= j as i64 {
                    assert!(qbin(m, j).is_bar_invariant());
                }
            }
        }
        let table = QBinomTable::new(-3, 3, 2);
        assert_eq!(table.get(-2, 2), qbin(-2, 2));
        assert_eq!(table.get(9, 4), qbin(9, 4));
    }

    #[test]
    fn cardinality_matches_binomial() {
        for a in 0..=6 {
            for b in 0..=6u32 {
                assert_eq!(q_cardinality(a, b), qbin((a as i64) + b as i64, a as u32));
                assert_eq!(decomposition_multiplicities_ee(a as u32, b), qbin((a as i64) + b as i64, a as u32));
            }
        }
    }

    #[test]
    fn basic_products() {
        // E 1_1 · F 1_1 ... i.e. EF1_1 = FE1_1 + 1_1.
        let ef = &UdotElement::e(1, -1) * &UdotElement::f(1, 1);
        let canon = ef.to_canonical();
        assert_eq!(canon.coeff(&Tag::FE { b: 1, a: 1 }), Laurent::one());
        assert_eq!(canon.coeff(&Tag::EF { a: 0, b: 0 }), Laurent::one());
        let ee = &UdotElement::e(1, 2) * &UdotElement::e(1, 0);
        assert_eq!(ee, UdotElement::e(2, 0).scale(&qbin(2, 1)));
        // EF1_0 = FE1_0; on this boundary the EF tag is the representative.
        let ef0 = UdotElement::basis(Tag::EF { a: 1, b: 1 }, 0);
        assert_eq!(UdotElement::basis(Tag::FE { b: 1, a: 1 }, 0).to_canonical(), ef0);
        assert_eq!(ef0.to_canonical(), ef0);
        // EF1_2 = FE1_2 + [2]1_2.
        let ef2 = UdotElement::basis(Tag::EF { a: 1, b: 1 }, 2).to_canonical();
        assert_eq!(ef2.coeff(&Tag::EF { a: 0, b: 0 }), qint(2));
        assert!(ef2.is_canonical_form());
        // Weight mismatch gives zero.
        assert!((&UdotElement::idempotent(1) * &UdotElement::idempotent(0)).is_zero());
        assert!(UdotElement::from_terms(0, 2, [(Tag::EF { a: 0, b: 1 }, Laurent::one())]).is_err());
    }

    #[test]
    fn commutator_on_irreps() {
        for n in -4..=4 {
            let ef = UdotElement::basis(Tag::EF { a: 1, b: 1 }, n);
            let fe = UdotElement::basis(Tag::FE { b: 1, a: 1 }, n);
            let diff = &ef - &fe;
            let expected = UdotElement::idempotent(n).scale(&qint(n));
            assert!(diff.same_action(&expected, 10));
            assert_eq!(diff.to_ef(), expected.to_ef());
        }
    }

    #[test]
    fn canonical_round_trip_and_positivity() {
        for n in -4..=4 {
            for y in canonical_tags(n, 2) {
                let el = UdotElement::basis(y, n);
                assert_eq!(el.to_canonical(), el);
                assert_eq!(el.to_ef().to_canonical(), el);
                for x in canonical_tags(y.target(n), 2) {
                    for c in structure_constants(x, y, n).values() {
                        assert!(c.is_nonnegative(), "{x} {y} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn triples() {
        assert_eq!(triple_not_both_canonical(1, 1, 1, 0), Ok(true));
        assert!(triple_not_both_canonical(0, 1, 1, 0).is_err());
    }

    #[test]
    fn decompositions() {
        let m = decomposition_multiplicities_ef(1, 1, 0).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.get(&(0, 0)), Some(&1));
        let g = generating_functions(&decomposition_multiplicities_ef(1, 1, 2).unwrap());
        assert_eq!(g[&1], qbin(2, 1));
        assert!(decomposition_multiplicities_ef(0, 2, 0).is_err());
        assert!(decomposition_multiplicities_fe(2, 0, 0).is_err());
    }

    #[test]
    fn hom_rank_routes() {
        assert_eq!(hom_rank_formula(0, 0, 0, 0, 20), Laurent::one());
        for (a, b, d, n) in [(1, 1, 0, 0), (0, 0, 1, 0), (2, 1, 1, -1), (3, 3, 2, 4)] {
            assert_eq!(hom_rank_formula(a, b, d, n, 20), hom_rank_enumerated(a, b, d, n, 20), "{a} {b} {d} {n}");
        }
    }
}
