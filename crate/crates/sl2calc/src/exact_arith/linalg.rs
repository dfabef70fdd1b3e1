use std::ops::{Add, Mul, Neg, Sub};

/// Determinant of a square matrix over any commutative ring, computed
/// division-free by Laplace expansion with memoised minors (`O(2^n n)` ring
/// operations).
///
/// `one` supplies the ring's unit (the determinant of the empty matrix); it is
/// needed because ring elements such as polynomials carry context (the number
/// of variables) that a bare `One::one()` cannot know.
pub fn determinant<T>(m: &[Vec<T>], one: &T) -> T
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Neg<Output = T>,
{
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    assert!(n < 24, "matrix too large for subset expansion");
    // minors[mask] = det of the block on the last popcount(mask) rows and the
    // columns in `mask`.
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(one.clone());
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|mask| mask.count_ones());
    for mask in masks {
        let row = n - mask.count_ones() as usize;
        let mut acc: Option<T> = None;
        for (position, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
            let minor = minors[mask & !(1 << col)].as_ref().expect("minor computed");
            let term = &m[row][col] * minor;
            acc = Some(match (acc, position % 2 == 0) {
                (None, true) => term,
                (None, false) => -&term,
                (Some(a), true) => &a + &term,
                (Some(a), false) => &a - &term,
            });
        }
        minors[mask] = acc;
    }
    minors[(1 << n) - 1].take().expect("full determinant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::MultiPoly;

    #[test]
    fn integer_determinants() {
        let m = vec![vec![2i64, 3], vec![5, 7]];
        assert_eq!(determinant(&m, &1), -1);
        let m = vec![vec![1i64, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        assert_eq!(determinant(&m, &1), -3);
        let empty: Vec<Vec<i64>> = vec![];
        assert_eq!(determinant(&empty, &1), 1);
    }

    #[test]
    fn vandermonde_matches_product() {
        type P = MultiPoly<i64>;
        let n = 3;
        let x: Vec<P> = (1..=n).map(|i| P::var(n, i).unwrap()).collect();
        let m: Vec<Vec<P>> = (0..n)
            .map(|i| (0..n).map(|j| x[i].pow((n - 1 - j) as u32)).collect())
            .collect();
        let det = determinant(&m, &P::one(n));
        let mut prod = P::one(n);
        for r in 0..n {
            for s in r + 1..n {
                prod = &prod * &(&x[r] - &x[s]);
            }
        }
        assert_eq!(det, prod);
    }
}
