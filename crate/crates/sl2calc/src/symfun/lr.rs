//! Littlewood–Richardson coefficients and skew Schur functions.
//!
//! The primary route expands products of Schur functions in the monomial basis
//! and solves back against the Schur basis (a unitriangular system). The
//! classical tableau rule is implemented separately as an independent oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::MonomialSym;
use crate::exact_arith::determinant;
use crate::partitions::{partitions_of, Partition};

/// Schur expansion of `π_α π_β` in `num_vars` variables (`None`: in Λ).
pub fn schur_product(alpha: &Partition, beta: &Partition, num_vars: Option<usize>) -> BTreeMap<Partition, BigInt> {
    let product = &MonomialSym::schur(alpha, num_vars) * &MonomialSym::schur(beta, num_vars);
    product.to_schur()
}

/// `c_{α,β}^γ`, computed in `ℓ(α) + ℓ(β)` variables — the smallest count in
/// which every candidate `γ` survives.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigInt {
    lr_coeff_in(alpha, beta, gamma, Some(alpha.len() + beta.len()))
}

/// `c_{α,β}^γ` computed in a specified number of variables (`None`: in Λ).
pub fn lr_coeff_in(alpha: &Partition, beta: &Partition, gamma: &Partition, num_vars: Option<usize>) -> BigInt {
    if gamma.weight() != alpha.weight() + beta.weight() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return BigInt::zero();
    }
    schur_product(alpha, beta, num_vars).remove(gamma).unwrap_or_else(BigInt::zero)
}

/// `c_{α,β}^γ` by counting Littlewood–Richardson tableaux: fillings of the skew
/// shape `γ/α` with content `β`, rows weakly increasing, columns strictly
/// increasing, whose reverse reading word is a lattice word.
pub fn lr_tableau_count(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigInt {
    if gamma.weight() != alpha.weight() + beta.weight() || !gamma.contains(alpha) {
        return BigInt::zero();
    }
    // Cells in reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for r in 0..gamma.len() {
        for c in (alpha.part(r)..gamma.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let rows = gamma.len();
    let width = gamma.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut counts = vec![0u32; beta.len() + 1];
    let mut total = BigInt::zero();
    fill_lr(0, &cells, alpha, beta, &mut grid, &mut counts, &mut total);
    total
}

fn fill_lr(
    k: usize,
    cells: &[(usize, usize)],
    alpha: &Partition,
    beta: &Partition,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut BigInt,
) {
    let Some(&(r, c)) = cells.get(k) else {
        *total += BigInt::one();
        return;
    };
    for v in 1..=beta.len() as u32 {
        let vi = v as usize;
        if counts[vi] >= beta.part(vi - 1) {
            continue;
        }
        // Lattice condition on the reading word.
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        // Rows weakly increase: the cell to the right is already filled.
        if (c + 1) < grid[r].len() && grid[r][c + 1] != 0 && grid[r][c + 1] < v {
            continue;
        }
        // Columns strictly increase downwards.
        if r > 0 && (c as u32) >= alpha.part(r - 1) && grid[r - 1][c] >= v {
            continue;
        }
        grid[r][c] = v;
        counts[vi] += 1;
        fill_lr(k + 1, cells, alpha, beta, grid, counts, total);
        counts[vi] -= 1;
        grid[r][c] = 0;
    }
}

/// Iterated coefficient `c^β_{α_1, ..., α_k}`: the multiplicity of `π_β` in
/// `π_{α_1} ⋯ π_{α_k}`, computed as a sum over intermediate shapes of products
/// of ordinary coefficients.
pub fn lr_iterated(alphas: &[Partition], beta: &Partition) -> BigInt {
    let mut current: BTreeMap<Partition, BigInt> = BTreeMap::new();
    current.insert(Partition::empty(), BigInt::one());
    for alpha in alphas {
        let mut next = BTreeMap::new();
        for (shape, c) in &current {
            for (gamma, d) in schur_product(shape, alpha, None) {
                if beta.contains(&gamma) {
                    *next.entry(gamma).or_insert_with(BigInt::zero) += c * d;
                }
            }
        }
        current = next;
    }
    current.remove(beta).unwrap_or_else(BigInt::zero)
}

/// Skew Schur function `π_{β/μ}` from the Jacobi–Trudy determinant
/// `det(h_{β_s - μ_t + t - s})`, returned in the Schur basis.
pub fn skew_schur_det(beta: &Partition, mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let size = beta.len().max(mu.len());
    let matrix: Vec<Vec<MonomialSym>> = (0..size)
        .map(|s| {
            (0..size)
                .map(|t| {
                    let m = beta.part(s) as i64 - mu.part(t) as i64 + t as i64 - s as i64;
                    MonomialSym::complete(m, None)
                })
                .collect()
        })
        .collect();
    determinant(&matrix, &MonomialSym::one(None)).to_schur()
}

/// Skew Schur function `π_{β/μ} = Σ_χ c_{μ,χ}^β π_χ`, returned in the Schur basis.
pub fn skew_schur_lr(beta: &Partition, mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    if !beta.contains(mu) {
        return out;
    }
    for chi in partitions_of(beta.weight() - mu.weight(), None) {
        let c = lr_coeff(mu, &chi, beta);
        if !c.is_zero() {
            out.insert(chi, c);
        }
    }
    out
}

/// Expansion `π_γ(x, y) = Σ c_{α,β}^γ π_α(x) π_β(y)` over alphabets `x` of
/// size `a` and `y` of size `b`; keys are `(α, β)`.
pub fn two_alphabet_expand(gamma: &Partition, a: usize, b: usize) -> BTreeMap<(Partition, Partition), BigInt> {
    let mut out = BTreeMap::new();
    let n = gamma.weight();
    for k in 0..=n {
        for alpha in partitions_of(k, Some(a)) {
            for beta in partitions_of(n - k, Some(b)) {
                let c = lr_coeff(&alpha, &beta, gamma);
                if !c.is_zero() {
                    out.insert((alpha.clone(), beta), c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_box, partitions_up_to};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basic_coefficients() {
        assert_eq!(lr_coeff(&p("1"), &p("1"), &p("2")), BigInt::one());
        assert_eq!(lr_coeff(&p("1"), &p("1"), &p("1,1")), BigInt::one());
        assert_eq!(lr_coeff(&p("2,1"), &p("2,1"), &p("3,2,1")), BigInt::from(2));
        assert!(lr_coeff(&p("1"), &p("1"), &p("3")).is_zero());
    }

    #[test]
    fn tableau_rule_agrees_with_expansion() {
        let shapes = partitions_up_to(4, None);
        for alpha in &shapes {
            for beta in &shapes {
                for gamma in partitions_of(alpha.weight() + beta.weight(), None) {
                    assert_eq!(
                        lr_coeff(alpha, beta, &gamma),
                        lr_tableau_count(alpha, beta, &gamma),
                        "{alpha} {beta} {gamma}"
                    );
                }
            }
        }
    }

    #[test]
    fn unit_and_symmetry() {
        for alpha in partitions_up_to(4, None) {
            for gamma in partitions_up_to(4, None) {
                let expected = if alpha == gamma { BigInt::one() } else { BigInt::zero() };
                assert_eq!(lr_coeff(&alpha, &Partition::empty(), &gamma), expected);
            }
        }
        for alpha in partitions_up_to(3, None) {
            for beta in partitions_up_to(3, None) {
                for gamma in partitions_of(alpha.weight() + beta.weight(), None) {
                    let c = lr_coeff(&alpha, &beta, &gamma);
                    assert_eq!(c, lr_coeff(&beta, &alpha, &gamma));
                    assert_eq!(c, lr_coeff(&alpha.conjugate(), &beta.conjugate(), &gamma.conjugate()));
                }
            }
        }
    }

    #[test]
    fn rectangle_rule() {
        for a in 1..=3usize {
            for b in 1..=3u32 {
                let k = Partition::rectangle(a, b);
                for alpha in enumerate_box(a, b) {
                    for beta in enumerate_box(a, b) {
                        let expected = if alpha == beta.complement(a, b).unwrap() { 1 } else { 0 };
                        assert_eq!(lr_coeff(&alpha, &beta, &k), BigInt::from(expected));
                    }
                }
            }
        }
    }

    #[test]
    fn iterated_examples() {
        assert_eq!(lr_iterated(&[p("1"), p("1"), p("1")], &p("3")), BigInt::one());
        assert_eq!(lr_iterated(&[p("1"), p("1"), p("1")], &p("2,1")), BigInt::from(2));
        assert_eq!(lr_iterated(&[p("2,1"), Partition::empty()], &p("2,1")), BigInt::one());
    }

    #[test]
    fn skew_examples() {
        let one: BTreeMap<_, _> = [(p("1"), BigInt::one())].into_iter().collect();
        assert_eq!(skew_schur_det(&p("1"), &Partition::empty()), one);
        let expected: BTreeMap<_, _> = [(p("2"), BigInt::one()), (p("1,1"), BigInt::one())].into_iter().collect();
        assert_eq!(skew_schur_det(&p("2,1"), &p("1")), expected);
        assert_eq!(skew_schur_lr(&p("2,1"), &p("1")), expected);
        assert!(skew_schur_det(&p("2"), &p("1,1")).is_empty());
        assert!(skew_schur_lr(&p("2"), &p("1,1")).is_empty());
    }

    #[test]
    fn two_alphabet_examples() {
        let e = two_alphabet_expand(&p("2"), 1, 1);
        assert_eq!(e.len(), 3);
        assert!(e.values().all(|c| c.is_one()));
        let e = two_alphabet_expand(&p("1,1"), 1, 1);
        assert_eq!(e.len(), 1);
        assert!(e.contains_key(&(p("1"), p("1"))));
    }
}
