//! Symmetric polynomials: elementary and complete symmetric polynomials,
//! Schur polynomials by three independent formulas, Littlewood–Richardson
//! coefficients, and the classical identities built from them.
//!
//! Conventions (total functions, used throughout the crate):
//! * `ε_m` vanishes for `m < 0` and for `m` larger than the number of variables;
//! * `h_m` vanishes for `m < 0` (but not for large `m`);
//! * the Schur polynomial of a partition with more parts than variables is 0.

mod lr;
mod monomial;

pub use lr::{
    lr_coeff, lr_coeff_in, lr_iterated, lr_tableau_count, schur_product, skew_schur_det, skew_schur_lr,
    two_alphabet_expand,
};
pub use monomial::{kostka_row, MonomialSym};

use num_bigint::BigInt;
use num_traits::One;

use crate::exact_arith::{determinant, ArithError};
use crate::partitions::Partition;
use crate::Poly;

/// `ε_m` in the `count` variables `x_{offset+1}, ..., x_{offset+count}` of a
/// ring with `num_vars` variables.
pub fn elementary_on(m: i64, num_vars: usize, offset: usize, count: usize) -> Poly {
    if m < 0 || m as usize > count {
        return Poly::zero(num_vars);
    }
    let mut out = Poly::zero(num_vars);
    for subset in subsets(count, m as usize) {
        let mut exps = vec![0; num_vars];
        for i in subset {
            exps[offset + i] = 1;
        }
        out = &out + &Poly::monomial(exps, BigInt::one());
    }
    out
}

/// `h_m` in the `count` variables `x_{offset+1}, ..., x_{offset+count}` of a
/// ring with `num_vars` variables.
pub fn complete_on(m: i64, num_vars: usize, offset: usize, count: usize) -> Poly {
    if m < 0 {
        return Poly::zero(num_vars);
    }
    let mut out = Poly::zero(num_vars);
    for comp in compositions(m as u32, count) {
        let mut exps = vec![0; num_vars];
        exps[offset..offset + count].copy_from_slice(&comp);
        out = &out + &Poly::monomial(exps, BigInt::one());
    }
    out
}

/// `ε_m(x_1, ..., x_a)`.
pub fn elementary(m: i64, a: usize) -> Poly {
    elementary_on(m, a, 0, a)
}

/// `h_m(x_1, ..., x_a)`.
pub fn complete(m: i64, a: usize) -> Poly {
    complete_on(m, a, 0, a)
}

/// Schur polynomial as the ratio of alternants `det(x_i^{α_j + a - j}) / Δ`.
pub fn schur_bialternant(alpha: &Partition, a: usize) -> Result<Poly, ArithError> {
    if alpha.len() > a {
        return Ok(Poly::zero(a));
    }
    if a == 0 {
        return Ok(Poly::one(0));
    }
    let padded = alpha.padded(a);
    let matrix: Vec<Vec<Poly>> = (0..a)
        .map(|i| {
            (0..a)
                .map(|j| {
                    let mut exps = vec![0; a];
                    exps[i] = padded[j] + (a - 1 - j) as u32;
                    Poly::monomial(exps, BigInt::one())
                })
                .collect()
        })
        .collect();
    let numerator = determinant(&matrix, &Poly::one(a));
    numerator.div_exact(&vandermonde(a))
}

/// `Δ = Π_{r<s} (x_r - x_s)`.
pub fn vandermonde(a: usize) -> Poly {
    let mut out = Poly::one(a);
    for r in 1..=a {
        for s in r + 1..=a {
            let diff = &Poly::var(a, r).expect("in range") - &Poly::var(a, s).expect("in range");
            out = &out * &diff;
        }
    }
    out
}

/// Schur polynomial via the Jacobi–Trudy determinant `det(h_{α_i + j - i})`.
pub fn schur_jacobi_trudy(alpha: &Partition, a: usize) -> Poly {
    let l = alpha.len();
    let matrix: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| complete(alpha.part(i) as i64 + j as i64 - i as i64, a)).collect())
        .collect();
    determinant(&matrix, &Poly::one(a))
}

/// Schur polynomial via the dual determinant `det(ε_{ᾱ_i + j - i})` in the
/// parts of the conjugate partition.
pub fn schur_dual_giambelli(alpha: &Partition, a: usize) -> Poly {
    let conj = alpha.conjugate();
    let l = conj.len();
    let matrix: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| elementary(conj.part(i) as i64 + j as i64 - i as i64, a)).collect())
        .collect();
    determinant(&matrix, &Poly::one(a))
}

/// Schur polynomial in the variables `x_{offset+1}, ..., x_{offset+count}` of
/// a ring with `num_vars` variables (Jacobi–Trudy).
pub fn schur_on(alpha: &Partition, num_vars: usize, offset: usize, count: usize) -> Poly {
    if alpha.len() > count {
        return Poly::zero(num_vars);
    }
    schur_jacobi_trudy(alpha, count).embed(num_vars, offset)
}

/// Outcome of applying the longest divided difference `D_a` to a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DaOutcome {
    Zero,
    /// `sign * π_partition`.
    Schur { sign: i32, partition: Partition },
}

/// `D_a(x_1^{b_1} ... x_a^{b_a})`: sort the exponents decreasingly (tracking the
/// sign of the sorting permutation); equal exponents give zero; otherwise the
/// result is `± π_{b'' }` with `b''_i = b'_i - a + i`.
pub fn apply_da_to_exponents(exps: &[u32]) -> DaOutcome {
    let a = exps.len();
    let mut sorted = exps.to_vec();
    let mut sign = 1;
    // Insertion sort, counting transpositions.
    for i in 1..a {
        let mut j = i;
        while j > 0 && sorted[j - 1] < sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return DaOutcome::Zero;
    }
    let parts = sorted.iter().enumerate().map(|(i, b)| b - (a - 1 - i) as u32).collect();
    DaOutcome::Schur { sign, partition: Partition::new(parts).expect("strictly decreasing minus staircase") }
}

/// `Σ_{r=0}^{m} (-1)^r ε_r h_{m-r}` in `a` variables (zero for `m ≥ 1`).
pub fn eh_alternating_sum(m: i64, a: usize) -> Poly {
    let mut out = Poly::zero(a);
    for r in 0..=m {
        let term = &elementary(r, a) * &complete(m - r, a);
        out = if r % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// Both sides of the Schur-elementary bubble identity in `a` variables:
///
/// `Σ_{a≥p≥q≥0} (-1)^{p+q} (p-q+1) π_{(p,q)ᵀ}` versus
/// `Σ_{m=0}^{2a} (-1)^m Σ_{x+y=m, x,y≤a} ε_x ε_y`,
/// where `(p,q)ᵀ` is the conjugate of the two-row partition `(p,q)`.
pub fn bubble_slide_sides(a: usize) -> (Poly, Poly) {
    let mut lhs = Poly::zero(a);
    for p in 0..=a as u32 {
        for q in 0..=p {
            let shape = Partition::new(vec![p, q]).expect("p ≥ q").conjugate();
            let coeff = BigInt::from((p - q + 1) as i64 * if (p + q) % 2 == 0 { 1 } else { -1 });
            lhs = &lhs + &schur_jacobi_trudy(&shape, a).scale(&coeff);
        }
    }
    let mut rhs = Poly::zero(a);
    for x in 0..=a as i64 {
        for y in 0..=a as i64 {
            let term = &elementary(x, a) * &elementary(y, a);
            rhs = if (x + y) % 2 == 0 { &rhs + &term } else { &rhs - &term };
        }
    }
    (lhs, rhs)
}

/// Both sides of the degree-`m` complete-symmetric slide identity in `a`
/// variables: `Σ_{p+q=m, p≥q} (p-q+1) π_{(p,q)}` versus `Σ_{x+y=m} h_x h_y`.
pub fn two_row_slide_sides(m: u32, a: usize) -> (Poly, Poly) {
    let mut lhs = Poly::zero(a);
    for q in 0..=m / 2 {
        let p = m - q;
        let shape = Partition::new(vec![p, q]).expect("p ≥ q");
        lhs = &lhs + &schur_jacobi_trudy(&shape, a).scale(&BigInt::from(p - q + 1));
    }
    let mut rhs = Poly::zero(a);
    for x in 0..=m as i64 {
        rhs = &rhs + &(&complete(x, a) * &complete(m as i64 - x, a));
    }
    (lhs, rhs)
}

/// `ε_s(x, y) - Σ_l ε_{s-l}(x) ε_l(y)` for alphabets of sizes `a` and `b`
/// (identically zero).
pub fn elementary_coproduct_defect(s: i64, a: usize, b: usize) -> Poly {
    let n = a + b;
    let mut rhs = Poly::zero(n);
    for l in 0..=s {
        rhs = &rhs + &(&elementary_on(s - l, n, 0, a) * &elementary_on(l, n, a, b));
    }
    &elementary_on(s, n, 0, n) - &rhs
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `m` into `k` parts.
pub fn compositions(m: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(m: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == k {
            cur.push(m);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=m {
            cur.push(first);
            go(m - first, k, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    go(m, k, &mut Vec::new(), &mut out);
    out
}

/// Integer sign `(-1)^k`.
pub fn sign_pow(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_box;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i).unwrap()
    }

    #[test]
    fn elementary_and_complete_examples() {
        let e2 = &(&(&x(3, 1) * &x(3, 2)) + &(&x(3, 1) * &x(3, 3))) + &(&x(3, 2) * &x(3, 3));
        assert_eq!(elementary(2, 3), e2);
        assert!(elementary(4, 3).is_zero());
        assert!(elementary(-1, 3).is_zero());
        assert_eq!(elementary(0, 3), Poly::one(3));
        let h2 = &(&x(2, 1).pow(2) + &(&x(2, 1) * &x(2, 2))) + &x(2, 2).pow(2);
        assert_eq!(complete(2, 2), h2);
        // h_m does not vanish beyond the number of variables.
        assert_eq!(complete(3, 1), x(1, 1).pow(3));
    }

    #[test]
    fn schur_examples() {
        let a = schur_bialternant(&p("1"), 2).unwrap();
        assert_eq!(a, &x(2, 1) + &x(2, 2));
        assert!(schur_bialternant(&p("1,1,1"), 2).unwrap().is_zero());
        let expected = &(&x(2, 1).pow(2) * &x(2, 2)) + &(&x(2, 1) * &x(2, 2).pow(2));
        assert_eq!(schur_bialternant(&p("2,1"), 2).unwrap(), expected);
        assert_eq!(schur_jacobi_trudy(&p("2,1"), 2), expected);
        assert_eq!(schur_dual_giambelli(&p("2,1"), 2), expected);
        assert_eq!(schur_jacobi_trudy(&Partition::empty(), 3), Poly::one(3));
        for k in 0..=4 {
            assert_eq!(schur_jacobi_trudy(&Partition::column(k), 3), elementary(k as i64, 3));
        }
    }

    #[test]
    fn three_schur_formulas_agree() {
        for a in 2..=4 {
            for alpha in enumerate_box(4, 4) {
                let bi = schur_bialternant(&alpha, a).unwrap();
                assert_eq!(bi, schur_jacobi_trudy(&alpha, a), "JT {alpha} a={a}");
                assert_eq!(bi, schur_dual_giambelli(&alpha, a), "dual {alpha} a={a}");
            }
        }
    }

    #[test]
    fn da_on_exponents() {
        assert_eq!(apply_da_to_exponents(&[3, 2, 1, 0]), DaOutcome::Schur { sign: 1, partition: Partition::empty() });
        assert_eq!(apply_da_to_exponents(&[1, 1]), DaOutcome::Zero);
        assert_eq!(apply_da_to_exponents(&[0, 1]), DaOutcome::Schur { sign: -1, partition: Partition::empty() });
        assert_eq!(apply_da_to_exponents(&[0, 3]), DaOutcome::Schur { sign: -1, partition: p("2") });
    }

    #[test]
    fn eh_relation_vanishes() {
        for a in 1..=4 {
            for m in 1..=8 {
                assert!(eh_alternating_sum(m, a).is_zero());
            }
        }
        assert_eq!(eh_alternating_sum(0, 2), Poly::one(2));
    }

    #[test]
    fn bubble_slide_identity_small() {
        for a in 0..=4 {
            let (l, r) = bubble_slide_sides(a);
            assert_eq!(l, r, "a = {a}");
        }
        for a in 1..=3 {
            for m in 0..=6 {
                let (l, r) = two_row_slide_sides(m, a);
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn elementary_coproduct() {
        for s in 0..=5 {
            assert!(elementary_coproduct_defect(s, 2, 3).is_zero());
        }
    }
}
