//! The local relations of the nilHecke algebra and of its thick calculus,
//! packaged as pairs of elements that must coincide.
//!
//! Every constructor returns a [`Relation`] (or a list of them); calling
//! [`Relation::holds`] compares the two sides with the double equality oracle
//! of [`NhElement::nh_equal`]. Diagrams are read bottom to top and `u * v`
//! stacks `u` on top of `v`, as elsewhere in this crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::thick::{
    block_crossing, delta, delta_poly, e_alpha, e_l, idempotent, lambda_alpha, lambda_l, longest_dd, merge,
    sigma_alpha, sigma_l, split, thick_crossing, thin,
};
use super::{sum, NhElement, NhError, Permutation};
use crate::partitions::{enumerate_box, partitions_up_to, Partition};
use crate::symfun::{apply_da_to_exponents, elementary_on, lr_coeff, schur_on, sign_pow, two_alphabet_expand, DaOutcome};
use crate::Poly;

/// Two elements of the same nilHecke algebra that are claimed to be equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: NhElement,
    pub rhs: NhElement,
}

impl Relation {
    pub fn new(lhs: NhElement, rhs: NhElement) -> Self {
        Relation { lhs, rhs }
    }

    /// Whether both sides agree, as normal forms and as operators.
    pub fn holds(&self) -> Result<bool, NhError> {
        self.lhs.nh_equal(&self.rhs)
    }

    /// A printable description of the two sides, used as a failure witness.
    pub fn witness(&self) -> String {
        format!("lhs = {}; rhs = {}", self.lhs, self.rhs)
    }
}

/// Which of two mirror-image versions of a relation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

fn dot_power(i: usize, power: u32, rank: usize) -> NhElement {
    let mut exps = vec![0; rank];
    exps[i - 1] = power;
    NhElement::from_poly(Poly::monomial(exps, BigInt::one()))
}

/// `∂_1 ∂_2 ⋯ ∂_{a-1}`: the strand at the bottom right travels to the top left.
fn strand_right_to_left(a: usize) -> Result<NhElement, NhError> {
    (1..a).try_fold(NhElement::one(a), |acc, i| Ok(&acc * &NhElement::dd(i, a)?))
}

/// `∂_{a-1} ⋯ ∂_1`: the strand at the bottom left travels to the top right.
fn strand_left_to_right(a: usize) -> Result<NhElement, NhError> {
    (1..a).rev().try_fold(NhElement::one(a), |acc, i| Ok(&acc * &NhElement::dd(i, a)?))
}

/// `∂_i D_a = 0` and `D_a ∂_i = 0`.
pub fn dd_annihilates_longest(a: usize, i: usize) -> Result<Vec<Relation>, NhError> {
    let d = longest_dd(a);
    let di = NhElement::dd(i, a)?;
    Ok(vec![Relation::new(&di * &d, NhElement::zero(a)), Relation::new(&d * &di, NhElement::zero(a))])
}

/// `D_a f D_a = D_a(f) D_a`.
pub fn longest_sandwich(a: usize, f: &Poly) -> Result<Relation, NhError> {
    let d = longest_dd(a);
    let lhs = &(&d * &NhElement::from_poly(f.clone())) * &d;
    let rhs = &NhElement::from_poly(d.apply(f)?) * &d;
    Ok(Relation::new(lhs, rhs))
}

/// `D_a e_a = D_a` and `e_a e_a = e_a`.
pub fn longest_absorbs_idempotent(a: usize) -> Vec<Relation> {
    let e = idempotent(a);
    vec![Relation::new(&longest_dd(a) * &e, longest_dd(a)), Relation::new(&e * &e, e.clone())]
}

/// `(D_a ⊗ D_b) X_{b,a} = D_{a+b}`, where the block crossing `X_{b,a}` takes
/// the `b` strands on the bottom left to the top right.
pub fn longest_factorizes(a: usize, b: usize) -> Relation {
    let lhs = &longest_dd(a).tensor(&longest_dd(b)) * &block_crossing(b, a);
    Relation::new(lhs, longest_dd(a + b))
}

/// A thick line absorbs a thinner idempotent attached to `a - k` of its
/// strands at the bottom: `e_a (1_k ⊗ e_{a-k}) = e_a` (right) and
/// `e_a (e_{a-k} ⊗ 1_k) = e_a` (left).
pub fn absorb_from_below(a: usize, k: usize, side: Side) -> Relation {
    let small = idempotent(a - k);
    let bottom = match side {
        Side::Left => small.tensor(&thin(k)),
        Side::Right => thin(k).tensor(&small),
    };
    Relation::new(&idempotent(a) * &bottom, idempotent(a))
}

/// The same absorption with the thinner idempotent on top:
/// `(e_{a-1} ⊗ 1) e_a = e_a` (left) and `(1 ⊗ e_{a-1}) e_a = e_a` (right).
pub fn absorb_from_above(a: usize, side: Side) -> Relation {
    let small = idempotent(a - 1);
    let top = match side {
        Side::Left => small.tensor(&thin(1)),
        Side::Right => thin(1).tensor(&small),
    };
    Relation::new(&top * &idempotent(a), idempotent(a))
}

/// A strand carrying `b ≤ a - 1` dots passes under the remaining `a - 1`
/// strands (which carry `e_{a-1}`) into a thick line `e_a`.
///
/// * left: `e_a x_1^b ∂_1 ⋯ ∂_{a-1} (1 ⊗ e_{a-1})`, equal to `e_a` when
///   `b = a - 1` and zero for smaller `b`;
/// * right: `e_a x_a^b ∂_{a-1} ⋯ ∂_1 (e_{a-1} ⊗ 1)`, equal to
///   `(-1)^{a-1} e_a` when `b = a - 1` and zero for smaller `b`.
pub fn undercrossing_into_thick(a: usize, b: u32, side: Side) -> Result<Relation, NhError> {
    let e = idempotent(a);
    let small = idempotent(a - 1);
    let (dots, crossing, bottom, sign) = match side {
        Side::Left => (dot_power(1, b, a), strand_right_to_left(a)?, thin(1).tensor(&small), BigInt::one()),
        Side::Right => (dot_power(a, b, a), strand_left_to_right(a)?, small.tensor(&thin(1)), sign_pow(a as i64 - 1)),
    };
    let lhs = &(&(&e * &dots) * &crossing) * &bottom;
    let rhs = if b as usize + 1 == a { e.scale(&sign) } else { NhElement::zero(a) };
    Ok(Relation::new(lhs, rhs))
}

/// An idempotent on one block at the bottom of a block crossing is absorbed
/// by the idempotent on the same block at the top:
/// `(1_b ⊗ e_a) X (e_a ⊗ 1_b) = (1_b ⊗ e_a) X` (left, the `a`-block moves
/// right) and `(e_b ⊗ 1_a) X (1_a ⊗ e_b) = (e_b ⊗ 1_a) X` (right), with `X`
/// the block crossing of `a` strands over `b` strands.
pub fn idempotent_through_crossing(a: usize, b: usize, side: Side) -> Relation {
    let x = block_crossing(a, b);
    let (top, bottom) = match side {
        Side::Left => (thin(b).tensor(&idempotent(a)), idempotent(a).tensor(&thin(b))),
        Side::Right => (idempotent(b).tensor(&thin(a)), thin(a).tensor(&idempotent(b))),
    };
    let rhs = &top * &x;
    Relation::new(&rhs * &bottom, rhs)
}

/// A strand with `b` dots leaving `D_a` at the right and crossing to the far
/// left equals an alternating sum of dotted `D_a`'s:
/// `∂_1 ⋯ ∂_{a-1} x_a^b D_a = (-1)^{a-1} Σ_{|ℓ| = b+1-a} x^ℓ D_a`.
pub fn dotted_strand_over_longest(a: usize, b: u32) -> Result<Relation, NhError> {
    let d = longest_dd(a);
    let lhs = &(&strand_right_to_left(a)? * &dot_power(a, b, a)) * &d;
    let mut rhs = NhElement::zero(a);
    if b as usize + 1 >= a {
        let total = b + 1 - a as u32;
        let h = crate::symfun::complete_on(total as i64, a, 0, a);
        rhs = (&NhElement::from_poly(h) * &d).scale(&sign_pow(a as i64 - 1));
    }
    Ok(Relation::new(lhs, rhs))
}

/// Three presentations of the splitter `a + b → (a, b)`:
/// `(δ_a ⊗ δ_b) D_{a+b} = (e_a ⊗ e_b)(δ_a ⊗ δ_b) D_{a+b} = (e_a ⊗ e_b) X_{b,a}`,
/// plus `split · e_{a+b} = split`.
pub fn splitter_presentations(a: usize, b: usize) -> Vec<Relation> {
    let s = split(a, b);
    let ee = idempotent(a).tensor(&idempotent(b));
    let dd = delta(a).tensor(&delta(b));
    vec![
        Relation::new(&(&ee * &dd) * &longest_dd(a + b), s.clone()),
        Relation::new(&ee * &block_crossing(b, a), s.clone()),
        Relation::new(&s * &idempotent(a + b), s),
    ]
}

/// Associativity of splitters and merges for three lines `a, b, c`.
pub fn splitter_associativity(a: usize, b: usize, c: usize) -> Vec<Relation> {
    let (ea, ec) = (idempotent(a), idempotent(c));
    let split_lhs = &split(a, b).tensor(&ec) * &split(a + b, c);
    let split_rhs = &ea.tensor(&split(b, c)) * &split(a, b + c);
    let merge_lhs = &merge(a + b, c) * &merge(a, b).tensor(&ec);
    let merge_rhs = &merge(a, b + c) * &ea.tensor(&merge(b, c));
    vec![Relation::new(split_lhs, split_rhs), Relation::new(merge_lhs, merge_rhs)]
}

/// The thick crossing `split(b, a) merge(a, b)` in its two other forms,
/// `(e_b ⊗ e_a) X_{a,b} (e_a ⊗ e_b)` and `(e_b ⊗ e_a) X_{a,b}`.
pub fn thick_crossing_presentations(a: usize, b: usize) -> Vec<Relation> {
    let t = thick_crossing(a, b);
    let top = idempotent(b).tensor(&idempotent(a));
    let bottom = idempotent(a).tensor(&idempotent(b));
    let half = &top * &block_crossing(a, b);
    vec![Relation::new(t.clone(), &half * &bottom), Relation::new(t, half)]
}

/// Splitting one line and crossing the outer piece over a neighbour equals
/// merging with the neighbour and splitting again.
///
/// * left, bottom `(c, a+b)`, top `(a, b+c)`:
///   `(e_a ⊗ merge(c,b))(T_{c,a} ⊗ e_b)(e_c ⊗ split(a,b)) = split(a, b+c) merge(c, a+b)`;
/// * right, bottom `(a+b, c)`, top `(b+c, a)`:
///   `(merge(b,c) ⊗ e_a)(e_b ⊗ T_{a,c})(split(b,a) ⊗ e_c) = split(b+c, a) merge(a+b, c)`.
pub fn split_crossing_merge(a: usize, b: usize, c: usize, side: Side) -> Relation {
    let e = idempotent;
    match side {
        Side::Left => {
            let lhs = &(&e(a).tensor(&merge(c, b)) * &thick_crossing(c, a).tensor(&e(b))) * &e(c).tensor(&split(a, b));
            Relation::new(lhs, &split(a, b + c) * &merge(c, a + b))
        }
        Side::Right => {
            let lhs = &(&merge(b, c).tensor(&e(a)) * &e(b).tensor(&thick_crossing(a, c))) * &split(b, a).tensor(&e(c));
            Relation::new(lhs, &split(b + c, a) * &merge(a + b, c))
        }
    }
}

/// The braid relation for thick crossings of lines `a, b, c`.
pub fn thick_braid(a: usize, b: usize, c: usize) -> Relation {
    let (t, e) = (thick_crossing, idempotent);
    let lhs = &(&t(b, c).tensor(&e(a)) * &e(b).tensor(&t(a, c))) * &t(a, b).tensor(&e(c));
    let rhs = &(&e(c).tensor(&t(a, b)) * &t(a, c).tensor(&e(b))) * &e(a).tensor(&t(b, c));
    Relation::new(lhs, rhs)
}

fn staircase_exponents(alpha: &Partition, a: usize) -> Vec<u32> {
    alpha.padded(a).iter().enumerate().map(|(i, &p)| p + (a - 1 - i) as u32).collect()
}

/// Exploding a Schur box on a thick line:
/// `π_α e_a = e_a x^{α + δ} D_a = e_a x^α δ_a D_a`.
pub fn schur_explosion(alpha: &Partition, a: usize) -> Relation {
    let boxed = &NhElement::from_poly(schur_on(alpha, a, 0, a)) * &idempotent(a);
    let dots = NhElement::from_poly(Poly::monomial(alpha.padded(a), BigInt::one()));
    let rhs = &(&(&idempotent(a) * &dots) * &delta(a)) * &longest_dd(a);
    Relation::new(boxed, rhs)
}

/// A Schur box slides off a thick line onto the thin strands it explodes
/// into, `D_a (π_α e_a) = π_α D_a`, and from the thin strands merging into a
/// thick line, `(π_α e_a) e_a = e_a π_α`.
pub fn schur_through_explosion(alpha: &Partition, a: usize) -> Vec<Relation> {
    let pi = NhElement::from_poly(schur_on(alpha, a, 0, a));
    let boxed = &pi * &idempotent(a);
    vec![
        Relation::new(&longest_dd(a) * &boxed, &pi * &longest_dd(a)),
        Relation::new(&boxed * &idempotent(a), &idempotent(a) * &pi),
    ]
}

/// A Schur box on a thick line slides through a splitter (below) or a merge
/// (above), expanding by Littlewood–Richardson coefficients:
/// `split(a,b) π_γ = Σ c^γ_{αβ} (π_α ⊗ π_β) split(a,b)` and
/// `π_γ merge(a,b) = Σ c^γ_{αβ} merge(a,b) (π_α ⊗ π_β)`.
pub fn schur_through_splitter(gamma: &Partition, a: usize, b: usize) -> Vec<Relation> {
    let n = a + b;
    let pi_gamma = NhElement::from_poly(schur_on(gamma, n, 0, n));
    let mut pieces = NhElement::zero(n);
    for ((alpha, beta), c) in two_alphabet_expand(gamma, a, b) {
        let p = &schur_on(&alpha, n, 0, a) * &schur_on(&beta, n, a, b);
        pieces = &pieces + &NhElement::from_poly(p.scale(&c));
    }
    vec![
        Relation::new(&split(a, b) * &pi_gamma, &pieces * &split(a, b)),
        Relation::new(&pi_gamma * &merge(a, b), &merge(a, b) * &pieces),
    ]
}

/// Two Schur boxes on one thick line multiply by Littlewood–Richardson
/// coefficients: `(π_α e_a)(π_β e_a) = Σ_{γ ∈ P(a)} c^γ_{αβ} π_γ e_a`.
pub fn schur_boxes_multiply(alpha: &Partition, beta: &Partition, a: usize) -> Relation {
    let boxed = |p: &Partition| &NhElement::from_poly(schur_on(p, a, 0, a)) * &idempotent(a);
    let lhs = &boxed(alpha) * &boxed(beta);
    let weight = alpha.weight() + beta.weight();
    let mut rhs = NhElement::zero(a);
    for gamma in partitions_up_to(weight, Some(a)).into_iter().filter(|g| g.weight() == weight) {
        let c = lr_coeff(alpha, beta, &gamma);
        if !c.is_zero() {
            rhs = &rhs + &boxed(&gamma).scale(&c);
        }
    }
    Relation::new(lhs, rhs)
}

/// `± π_γ e_{a+b}` (or zero) predicted by sorting the exploded dot counts of
/// `π_α` on a line of thickness `a` next to `π_β` on a line of thickness `b`.
fn sorted_schur_prediction(alpha: &Partition, a: usize, beta: &Partition, b: usize) -> Option<(BigInt, Partition)> {
    let mut exps = staircase_exponents(alpha, a);
    exps.extend(staircase_exponents(beta, b));
    match apply_da_to_exponents(&exps) {
        DaOutcome::Zero => None,
        DaOutcome::Schur { sign, partition } => Some((BigInt::from(sign), partition)),
    }
}

/// A split followed by a merge with boxes `π_α`, `π_β` in between collapses
/// to a single box: `merge(a,b)(π_α ⊗ π_β) split(a,b) = (-1)^{ℓ(w)} π_γ e_{a+b}`,
/// or zero when the sorted dot counts repeat.
pub fn bubble_between_splitters(a: usize, b: usize, alpha: &Partition, beta: &Partition) -> Relation {
    let n = a + b;
    let boxes = NhElement::from_poly(&schur_on(alpha, n, 0, a) * &schur_on(beta, n, a, b));
    let lhs = &(&merge(a, b) * &boxes) * &split(a, b);
    let rhs = match sorted_schur_prediction(alpha, a, beta, b) {
        None => NhElement::zero(n),
        Some((sign, gamma)) => (&NhElement::from_poly(schur_on(&gamma, n, 0, n)) * &idempotent(n)).scale(&sign),
    };
    Relation::new(lhs, rhs)
}

/// Two thick crossings around boxes reduce to a split-merge with one box:
/// `T_{b,a} (π_β ⊗ π_α) T_{a,b} = (-1)^{ℓ(w)} split(a,b) π_γ merge(a,b)`, the
/// sign and `γ` read off from the exploded dot counts of `(π_β, π_α)`.
pub fn boxes_between_thick_crossings(a: usize, b: usize, alpha: &Partition, beta: &Partition) -> Relation {
    let n = a + b;
    let boxes = NhElement::from_poly(&schur_on(beta, n, 0, b) * &schur_on(alpha, n, b, a));
    let lhs = &(&thick_crossing(b, a) * &boxes) * &thick_crossing(a, b);
    let rhs = match sorted_schur_prediction(beta, b, alpha, a) {
        None => NhElement::zero(n),
        Some((sign, gamma)) => {
            let pi = NhElement::from_poly(schur_on(&gamma, n, 0, n));
            (&(&split(a, b) * &pi) * &merge(a, b)).scale(&sign)
        }
    };
    Relation::new(lhs, rhs)
}

/// `e_a ⊗ 1 = Σ_{s=0}^{a} (-1)^s (ε_{a-s} ⊗ 1) split(a,1) merge(a,1) x_{a+1}^s`.
pub fn thick_and_thin_decomposition(a: usize) -> Relation {
    let n = a + 1;
    let oval = &split(a, 1) * &merge(a, 1);
    let terms: Vec<NhElement> = (0..=a)
        .map(|s| {
            let eps = NhElement::from_poly(elementary_on((a - s) as i64, n, 0, a));
            (&(&eps * &oval) * &dot_power(n, s as u32, n)).scale(&sign_pow(s as i64))
        })
        .collect();
    Relation::new(idempotent(a).tensor(&thin(1)), sum(n, &terms))
}

/// `e_a ⊗ e_b = Σ_{α ∈ P(a,b)} σ_α λ_α`.
pub fn two_line_decomposition(a: usize, b: usize) -> Result<Relation, NhError> {
    let pieces = enumerate_box(a, b as u32)
        .iter()
        .map(|alpha| e_alpha(a, b, alpha))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Relation::new(idempotent(a).tensor(&idempotent(b)), sum(a + b, &pieces)))
}

/// `λ_β σ_α = δ_{α,β} e_{a+b}` for `α, β ∈ P(a,b)`.
pub fn sigma_lambda_orthogonality(a: usize, b: usize, alpha: &Partition, beta: &Partition) -> Result<Relation, NhError> {
    let lhs = &lambda_alpha(a, b, beta)? * &sigma_alpha(a, b, alpha)?;
    let rhs = if alpha == beta { idempotent(a + b) } else { NhElement::zero(a + b) };
    Ok(Relation::new(lhs, rhs))
}

/// `Σ_{ℓ ∈ Sq(a)} e_ℓ = 1`.
pub fn unit_decomposition(a: usize) -> Result<Relation, NhError> {
    let pieces = super::thick::sq_sequences(a)
        .iter()
        .map(|l| e_l(a, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Relation::new(sum(a, &pieces), NhElement::one(a)))
}

/// `λ_{ℓ'} σ_ℓ = δ_{ℓ,ℓ'} e_a`.
pub fn sequence_orthogonality(a: usize, l: &[u32], l_prime: &[u32]) -> Result<Relation, NhError> {
    let lhs = &lambda_l(a, l_prime)? * &sigma_l(a, l)?;
    let rhs = if l == l_prime { idempotent(a) } else { NhElement::zero(a) };
    Ok(Relation::new(lhs, rhs))
}

/// Matrix units over the centre: with `E(ℓ, y, ℓ') = σ_ℓ y λ_{ℓ'}`,
/// `E(ℓ, y, m) E(m', z, ℓ'') = δ_{m,m'} E(ℓ, yz, ℓ'')` for symmetric `y, z`.
pub fn matrix_unit_product(
    a: usize,
    (l, m): (&[u32], &[u32]),
    (m_prime, l_end): (&[u32], &[u32]),
    y: &Poly,
    z: &Poly,
) -> Result<Relation, NhError> {
    let unit = |left: &[u32], p: &Poly, right: &[u32]| -> Result<NhElement, NhError> {
        Ok(&(&sigma_l(a, left)? * &NhElement::from_poly(p.clone())) * &lambda_l(a, right)?)
    };
    let lhs = &unit(l, y, m)? * &unit(m_prime, z, l_end)?;
    let rhs = if m == m_prime { unit(l, &(y * z), l_end)? } else { NhElement::zero(a) };
    Ok(Relation::new(lhs, rhs))
}

/// The elements whose degrees are prescribed, paired with that degree:
/// `σ_α` (`2|α| - 2ab`), `λ_α` (`2ab - 2|α|`), `e_α` (0), `split(a,b)` (`-2ab`),
/// `merge(a,b)` (0) and `D_a` (`-a(a-1)`).
pub fn graded_elements(a: usize, b: usize) -> Result<Vec<(String, NhElement, i64)>, NhError> {
    let ab = (a * b) as i64;
    let mut out = vec![
        (format!("split({a},{b})"), split(a, b), -2 * ab),
        (format!("merge({a},{b})"), merge(a, b), 0),
        (format!("D_{}", a + b), longest_dd(a + b), -(((a + b) * (a + b - 1)) as i64)),
    ];
    for alpha in enumerate_box(a, b as u32) {
        let w = alpha.weight() as i64;
        out.push((format!("sigma_{alpha}"), sigma_alpha(a, b, &alpha)?, 2 * w - 2 * ab));
        out.push((format!("lambda_{alpha}"), lambda_alpha(a, b, &alpha)?, 2 * ab - 2 * w));
        out.push((format!("e_{alpha}"), e_alpha(a, b, &alpha)?, 0));
    }
    Ok(out)
}

/// The idempotent written out on the staircase: `e_a = δ_a D_a` with
/// `D_a(δ_a) = 1`.
pub fn staircase_normalisation(a: usize) -> Result<bool, NhError> {
    Ok(longest_dd(a).apply(&delta_poly(a))?.is_one()
        && idempotent(a) == NhElement::term(delta_poly(a), Permutation::longest(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn assert_holds(r: &Relation, what: &str) {
        assert!(r.holds().unwrap(), "{what}: {}", r.witness());
    }

    #[test]
    fn thin_relations() {
        for a in 2..=4 {
            for i in 1..a {
                for r in dd_annihilates_longest(a, i).unwrap() {
                    assert_holds(&r, "dd kills D");
                }
            }
            for r in longest_absorbs_idempotent(a) {
                assert_holds(&r, "D e = D");
            }
            let f = Poly::monomial((0..a as u32).rev().collect(), BigInt::one());
            assert_holds(&longest_sandwich(a, &f).unwrap(), "sandwich");
        }
    }

    #[test]
    fn absorption_and_undercrossing() {
        for a in 1..=4 {
            for k in 0..=a {
                for side in Side::BOTH {
                    assert_holds(&absorb_from_below(a, k, side), "absorb below");
                }
            }
            for side in Side::BOTH {
                assert_holds(&absorb_from_above(a, side), "absorb above");
                for b in 0..a as u32 {
                    assert_holds(&undercrossing_into_thick(a, b, side).unwrap(), "undercross");
                }
            }
        }
    }

    #[test]
    fn dotted_strand() {
        for a in 1..=3 {
            for b in 0..=(a as u32 + 3) {
                assert_holds(&dotted_strand_over_longest(a, b).unwrap(), "slide up");
            }
        }
    }

    #[test]
    fn splitters_and_crossings() {
        for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            assert_holds(&longest_factorizes(a, b), "factorize");
            for r in splitter_presentations(a, b).iter().chain(&thick_crossing_presentations(a, b)) {
                assert_holds(r, "presentation");
            }
            for side in Side::BOTH {
                assert_holds(&idempotent_through_crossing(a, b, side), "two box");
            }
        }
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (1, 2, 1)] {
            for r in splitter_associativity(a, b, c) {
                assert_holds(&r, "assoc");
            }
            for side in Side::BOTH {
                assert_holds(&split_crossing_merge(a, b, c, side), "triangle");
            }
            assert_holds(&thick_braid(a, b, c), "braid");
        }
    }

    #[test]
    fn schur_boxes() {
        for a in 1..=3 {
            for alpha in enumerate_box(a, 2) {
                assert_holds(&schur_explosion(&alpha, a), "explode");
                for r in schur_through_explosion(&alpha, a) {
                    assert_holds(&r, "through D");
                }
            }
        }
        assert_holds(&schur_boxes_multiply(&p("1"), &p("1"), 2), "mult");
        assert_holds(&schur_boxes_multiply(&p("2,1"), &p("1"), 3), "mult");
        for r in schur_through_splitter(&p("2,1"), 2, 1) {
            assert_holds(&r, "fork slide");
        }
        for (a, b) in [(1, 1), (2, 1), (1, 2)] {
            for alpha in enumerate_box(a, 2) {
                for beta in enumerate_box(b, 2) {
                    assert_holds(&bubble_between_splitters(a, b, &alpha, &beta), "left right");
                    assert_holds(&boxes_between_thick_crossings(a, b, &alpha, &beta), "crossings");
                }
            }
        }
    }

    #[test]
    fn decompositions() {
        for a in 1..=3 {
            assert_holds(&thick_and_thin_decomposition(a), "e_a x 1");
            assert!(staircase_normalisation(a).unwrap());
        }
        assert_holds(&two_line_decomposition(2, 1).unwrap(), "e_a x e_b");
        for alpha in enumerate_box(2, 1) {
            for beta in enumerate_box(2, 1) {
                assert_holds(&sigma_lambda_orthogonality(2, 1, &alpha, &beta).unwrap(), "orth");
            }
        }
        assert_holds(&unit_decomposition(3).unwrap(), "unit");
        let seqs = super::super::thick::sq_sequences(3);
        let y = elementary_on(1, 3, 0, 3);
        let z = elementary_on(2, 3, 0, 3);
        for l in &seqs {
            for m in &seqs {
                assert_holds(&sequence_orthogonality(3, l, m).unwrap(), "seq orth");
            }
        }
        let r = matrix_unit_product(3, (&seqs[0], &seqs[1]), (&seqs[1], &seqs[2]), &y, &z).unwrap();
        assert_holds(&r, "matrix unit");
        let r = matrix_unit_product(3, (&seqs[0], &seqs[1]), (&seqs[2], &seqs[2]), &y, &z).unwrap();
        assert_holds(&r, "matrix unit mismatch");
        for (name, x, d) in graded_elements(2, 2).unwrap() {
            assert_eq!(x.degree(), Some(d), "{name}");
        }
    }
}
