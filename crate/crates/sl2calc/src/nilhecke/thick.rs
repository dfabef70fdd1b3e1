//! Thick calculus inside the nilHecke algebra.
//!
//! A thick line of thickness `a` is the idempotent `e_a = δ_a D_a`; splitters,
//! merges and thick crossings are concrete elements of `NH_{a+b}` built from
//! `D`, `δ` and `e`. All diagrams are read bottom to top, and the product
//! `u * v` places `u` above `v`.

use num_bigint::BigInt;
use num_traits::One;

use super::{NhElement, NhError, Permutation};
use crate::partitions::Partition;
use crate::symfun::{elementary_on, schur_on, sign_pow};
use crate::Poly;

/// `D_a = ∂_{w_0}`, the longest divided difference.
pub fn longest_dd(a: usize) -> NhElement {
    NhElement::dd_perm(Permutation::longest(a))
}

/// The staircase monomial `δ_a = x_1^{a-1} x_2^{a-2} ⋯ x_{a-1}`.
pub fn delta_poly(a: usize) -> Poly {
    Poly::monomial((0..a).map(|i| (a - 1 - i) as u32).collect(), BigInt::one())
}

/// Multiplication by `δ_a`.
pub fn delta(a: usize) -> NhElement {
    NhElement::from_poly(delta_poly(a))
}

/// The idempotent `e_a = δ_a D_a` (a thick line of thickness `a`).
pub fn idempotent(a: usize) -> NhElement {
    NhElement::term(delta_poly(a), Permutation::longest(a))
}

/// Horizontal juxtaposition of several elements, left to right.
pub fn tensor_all(items: &[NhElement]) -> NhElement {
    items.iter().fold(NhElement::one(0), |acc, x| acc.tensor(x))
}

/// The identity on `a` thin strands.
pub fn thin(a: usize) -> NhElement {
    NhElement::one(a)
}

/// Crossing of two bundles of thin strands: the `a` strands starting on the
/// bottom left end on the top right, passing the `b` strands that go from the
/// bottom right to the top left. This is `∂_w` for the minimal-length
/// shuffle `w`, a product of `ab` divided differences.
pub fn block_crossing(a: usize, b: usize) -> NhElement {
    let n = a + b;
    let mut out = NhElement::one(n);
    // Move each right-hand strand leftwards in turn, bottom to top.
    for j in 1..=b {
        for p in (j..a + j).rev() {
            out = &NhElement::dd(p, n).expect("swap index in range") * &out;
        }
    }
    out
}

/// Splitter from one line of thickness `a+b` (bottom) into lines of
/// thickness `a` and `b` (top): `(δ_a ⊗ δ_b) D_{a+b}`.
pub fn split(a: usize, b: usize) -> NhElement {
    split_multi(&[a, b])
}

/// Merge of lines of thickness `a` and `b` (bottom) into one of thickness
/// `a+b` (top): `e_{a+b} (e_a ⊗ e_b)`.
pub fn merge(a: usize, b: usize) -> NhElement {
    merge_multi(&[a, b])
}

/// Splitter of a line of thickness `Σ a_i` into lines `a_1, ..., a_k`.
pub fn split_multi(parts: &[usize]) -> NhElement {
    let n: usize = parts.iter().sum();
    let deltas: Vec<NhElement> = parts.iter().map(|&a| delta(a)).collect();
    &tensor_all(&deltas) * &longest_dd(n)
}

/// Merge of lines `a_1, ..., a_k` into one of thickness `Σ a_i`.
pub fn merge_multi(parts: &[usize]) -> NhElement {
    let n: usize = parts.iter().sum();
    let es: Vec<NhElement> = parts.iter().map(|&a| idempotent(a)).collect();
    &idempotent(n) * &tensor_all(&es)
}

/// Thick crossing: lines of thickness `a` (left) and `b` (right) at the bottom
/// exchange places, defined as merge followed by split.
pub fn thick_crossing(a: usize, b: usize) -> NhElement {
    &split(b, a) * &merge(a, b)
}

/// Multiplication by the polynomial `p` in variables `x_{offset+1}, ...` of
/// rank `total`.
pub fn poly_box(p: &Poly, offset: usize, total: usize) -> NhElement {
    NhElement::from_poly(p.embed(total, offset))
}

/// Multiplication by the Schur polynomial `π_α(x_1, ..., x_a)`; central in
/// `NH_a`.
pub fn schur_box(alpha: &Partition, a: usize) -> NhElement {
    NhElement::from_poly(schur_on(alpha, a, 0, a))
}

/// `σ_α = π_α(x_1..x_a) · split(a, b)` for `α ∈ P(a, b)`.
pub fn sigma_alpha(a: usize, b: usize, alpha: &Partition) -> Result<NhElement, NhError> {
    alpha.complement(a, b as u32)?;
    let n = a + b;
    Ok(&NhElement::from_poly(schur_on(alpha, n, 0, a)) * &split(a, b))
}

/// `λ_α = (-1)^{|α̂|} merge(a, b) · π_{α̂}(x_{a+1}..x_{a+b})` for `α ∈ P(a, b)`.
pub fn lambda_alpha(a: usize, b: usize, alpha: &Partition) -> Result<NhElement, NhError> {
    let hat = alpha.hat(a, b as u32)?;
    let n = a + b;
    let boxed = NhElement::from_poly(schur_on(&hat, n, a, b));
    Ok((&merge(a, b) * &boxed).scale(&sign_pow(hat.weight() as i64)))
}

/// `e_α = σ_α λ_α`.
pub fn e_alpha(a: usize, b: usize, alpha: &Partition) -> Result<NhElement, NhError> {
    Ok(&sigma_alpha(a, b, alpha)? * &lambda_alpha(a, b, alpha)?)
}

/// The `a!` elementary sequences `ℓ = (ℓ_1, ..., ℓ_{a-1})` with `0 ≤ ℓ_ν ≤ ν`.
pub fn sq_sequences(a: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for nu in 1..a as u32 {
        out = out
            .into_iter()
            .flat_map(|seq| {
                (0..=nu).map(move |l| {
                    let mut s = seq.clone();
                    s.push(l);
                    s
                })
            })
            .collect();
    }
    out
}

fn check_sequence(a: usize, seq: &[u32]) -> Result<(), NhError> {
    let ok = seq.len() + 1 == a.max(1) && seq.iter().enumerate().all(|(i, &l)| l as usize <= i + 1);
    if ok {
        Ok(())
    } else {
        Err(NhError::NotElementarySequence(seq.to_vec()))
    }
}

/// The standard elementary monomial `ε_ℓ = Π_ν ε_{ℓ_ν}(x_1, ..., x_ν)`.
pub fn std_elem_monomial(a: usize, seq: &[u32]) -> Result<Poly, NhError> {
    check_sequence(a, seq)?;
    let mut out = Poly::one(a);
    for (i, &l) in seq.iter().enumerate() {
        out = &out * &elementary_on(l as i64, a, 0, i + 1);
    }
    Ok(out)
}

/// `σ_ℓ = ε_ℓ D_a`.
pub fn sigma_l(a: usize, seq: &[u32]) -> Result<NhElement, NhError> {
    Ok(NhElement::term(std_elem_monomial(a, seq)?, Permutation::longest(a)))
}

/// `λ_ℓ = (-1)^{|ℓ̂|} e_a x_2^{ℓ̂_1} ⋯ x_a^{ℓ̂_{a-1}}` with `ℓ̂_j = j - ℓ_j`.
pub fn lambda_l(a: usize, seq: &[u32]) -> Result<NhElement, NhError> {
    check_sequence(a, seq)?;
    let mut exps = vec![0u32; a];
    let mut hat_weight = 0i64;
    for (i, &l) in seq.iter().enumerate() {
        let hat = i as u32 + 1 - l;
        exps[i + 1] = hat;
        hat_weight += hat as i64;
    }
    let dots = NhElement::from_poly(Poly::monomial(exps, BigInt::one()));
    Ok((&idempotent(a) * &dots).scale(&sign_pow(hat_weight)))
}

/// `e_ℓ = σ_ℓ λ_ℓ`.
pub fn e_l(a: usize, seq: &[u32]) -> Result<NhElement, NhError> {
    Ok(&sigma_l(a, seq)? * &lambda_l(a, seq)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_box;

    #[test]
    fn small_idempotents() {
        assert_eq!(idempotent(1), NhElement::one(1));
        let e2 = idempotent(2);
        let expected = &NhElement::x(1, 2).unwrap() * &NhElement::dd(1, 2).unwrap();
        assert_eq!(e2, expected);
        for a in 1..=4 {
            let e = idempotent(a);
            assert_eq!(&e * &e, e);
            assert_eq!(&longest_dd(a) * &e, longest_dd(a));
        }
    }

    #[test]
    fn block_crossing_completes_longest() {
        for a in 1..=3 {
            for b in 1..=3 {
                let top = longest_dd(a).tensor(&longest_dd(b));
                assert_eq!(&top * &block_crossing(b, a), longest_dd(a + b), "a={a} b={b}");
                assert_eq!(block_crossing(a, b).degree(), Some(-2 * (a * b) as i64));
            }
        }
    }

    #[test]
    fn split_degree_and_trivial_cases() {
        assert_eq!(split(2, 0), idempotent(2));
        assert_eq!(split(2, 3).degree(), Some(-12));
        assert_eq!(merge(2, 3).degree(), Some(0));
    }

    #[test]
    fn sequences() {
        assert_eq!(sq_sequences(1), vec![Vec::<u32>::new()]);
        assert_eq!(sq_sequences(2), vec![vec![0], vec![1]]);
        assert_eq!(sq_sequences(4).len(), 24);
        assert!(sigma_l(3, &[2, 0]).is_err());
        assert!(sigma_l(3, &[1]).is_err());
    }

    #[test]
    fn rank_two_decomposition() {
        let total = &e_l(2, &[0]).unwrap() + &e_l(2, &[1]).unwrap();
        assert_eq!(total, NhElement::one(2));
        let sum = enumerate_box(1, 1)
            .iter()
            .map(|alpha| e_alpha(1, 1, alpha).unwrap())
            .fold(NhElement::zero(2), |acc, e| &acc + &e);
        assert_eq!(sum, NhElement::one(2));
    }
}
