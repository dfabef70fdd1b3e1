//! Symmetric functions in the monomial basis.
//!
//! A symmetric polynomial is determined by its coefficients on dominant
//! monomials `x^μ` (`μ` a partition), i.e. by its expansion in the monomial
//! symmetric functions `m_μ`. Products are computed directly on that data, so
//! no polynomial in many variables is ever expanded. With `max_len = None` the
//! element lives in the ring Λ of symmetric functions; with `Some(n)` it lives
//! in `n` variables (all `m_μ` with more than `n` parts are dropped, which is a
//! ring homomorphism).

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::{partitions_of, Partition};

/// Element of Λ (or of the symmetric polynomials in finitely many variables)
/// stored in the monomial symmetric basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSym {
    max_len: Option<usize>,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl MonomialSym {
    pub fn zero(max_len: Option<usize>) -> Self {
        MonomialSym { max_len, coeffs: BTreeMap::new() }
    }

    pub fn one(max_len: Option<usize>) -> Self {
        let mut out = Self::zero(max_len);
        out.add_term(Partition::empty(), BigInt::one());
        out
    }

    pub fn max_len(&self) -> Option<usize> {
        self.max_len
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: BigInt) {
        if c.is_zero() || self.max_len.is_some_and(|n| mu.len() > n) {
            return;
        }
        let entry = self.coeffs.entry(mu.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&mu);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.max_len);
        for (mu, d) in &self.coeffs {
            out.add_term(mu.clone(), d * c);
        }
        out
    }

    /// Complete homogeneous symmetric function `h_m` (zero for `m < 0`).
    pub fn complete(m: i64, max_len: Option<usize>) -> Self {
        let mut out = Self::zero(max_len);
        if m >= 0 {
            for mu in partitions_of(m as u32, max_len) {
                out.add_term(mu, BigInt::one());
            }
        }
        out
    }

    /// Elementary symmetric function `ε_m` (zero for `m < 0` and, in finitely
    /// many variables, for `m` above the variable count).
    pub fn elementary(m: i64, max_len: Option<usize>) -> Self {
        let mut out = Self::zero(max_len);
        if m >= 0 {
            out.add_term(Partition::column(m as usize), BigInt::one());
        }
        out
    }

    /// Schur function `s_λ`, from Kostka numbers.
    pub fn schur(lambda: &Partition, max_len: Option<usize>) -> Self {
        let mut out = Self::zero(max_len);
        for (mu, k) in kostka_row(lambda) {
            out.add_term(mu, k);
        }
        out
    }

    /// Same as [`MonomialSym::schur`] but through the Jacobi–Trudy or dual
    /// determinant (whichever is smaller); an independent route used for
    /// cross-checking the Kostka numbers.
    pub fn schur_by_determinant(lambda: &Partition, max_len: Option<usize>) -> Self {
        let conj = lambda.conjugate();
        let (rows, use_e) = if conj.len() < lambda.len() { (&conj, true) } else { (lambda, false) };
        let l = rows.len();
        let entry = |m: i64| if use_e { Self::elementary(m, max_len) } else { Self::complete(m, max_len) };
        let matrix: Vec<Vec<MonomialSym>> = (0..l)
            .map(|i| (0..l).map(|j| entry(rows.part(i) as i64 + j as i64 - i as i64)).collect())
            .collect();
        crate::exact_arith::determinant(&matrix, &Self::one(max_len))
    }

    /// Expansion in the Schur basis by peeling off the lexicographically
    /// largest monomial (the Kostka matrix is unitriangular).
    pub fn to_schur(&self) -> BTreeMap<Partition, BigInt> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((mu, c)) = rest.coeffs.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let s = Self::schur(&mu, rest.max_len);
            rest = &rest - &s.scale(&c);
            out.insert(mu, c);
        }
        out
    }

    /// Builds an element from a Schur-basis expansion.
    pub fn from_schur(expansion: &BTreeMap<Partition, BigInt>, max_len: Option<usize>) -> Self {
        let mut out = Self::zero(max_len);
        for (lambda, c) in expansion {
            out = &out + &Self::schur(lambda, max_len).scale(c);
        }
        out
    }

    fn by_weight(&self) -> BTreeMap<u32, Vec<(&Partition, &BigInt)>> {
        let mut map: BTreeMap<u32, Vec<_>> = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            map.entry(mu.weight()).or_default().push((mu, c));
        }
        map
    }
}

fn combine_len(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Add for &MonomialSym {
    type Output = MonomialSym;
    fn add(self, rhs: Self) -> MonomialSym {
        let mut out = MonomialSym::zero(combine_len(self.max_len, rhs.max_len));
        for (mu, c) in self.coeffs.iter().chain(&rhs.coeffs) {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MonomialSym {
    type Output = MonomialSym;
    fn sub(self, rhs: Self) -> MonomialSym {
        self + &(-rhs)
    }
}

impl Neg for &MonomialSym {
    type Output = MonomialSym;
    fn neg(self) -> MonomialSym {
        self.scale(&-BigInt::one())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &MonomialSym {
    type Output = MonomialSym;

    /// The coefficient of `x^μ` in `f g` is `Σ_ν f[sort ν] g[sort(μ - ν)]`
    /// over exponent vectors `0 ≤ ν ≤ μ`.
    fn mul(self, rhs: Self) -> MonomialSym {
        let max_len = combine_len(self.max_len, rhs.max_len);
        let mut out = MonomialSym::zero(max_len);
        let left = self.by_weight();
        let right = rhs.by_weight();
        for &wf in left.keys() {
            for &wg in right.keys() {
                for mu in partitions_of(wf + wg, max_len) {
                    let mut total = BigInt::zero();
                    let mut nu = vec![0u32; mu.len()];
                    for_each_sub_vector(mu.parts(), wf, 0, &mut nu, &mut |nu| {
                        let f = self.coeffs.get(&Partition::from_unsorted(nu.to_vec()));
                        if let Some(f) = f {
                            let rest: Vec<u32> = mu.parts().iter().zip(nu).map(|(m, n)| m - n).collect();
                            if let Some(g) = rhs.coeffs.get(&Partition::from_unsorted(rest)) {
                                total += f * g;
                            }
                        }
                    });
                    out.add_term(mu, total);
                }
            }
        }
        out
    }
}

/// Calls `f` on every vector `0 ≤ ν ≤ bound` (entrywise) with `|ν| = weight`.
fn for_each_sub_vector(bound: &[u32], weight: u32, pos: usize, nu: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if pos == bound.len() {
        if weight == 0 {
            f(nu);
        }
        return;
    }
    let remaining_capacity: u32 = bound[pos + 1..].iter().sum();
    let lo = weight.saturating_sub(remaining_capacity);
    for v in lo..=bound[pos].min(weight) {
        nu[pos] = v;
        for_each_sub_vector(bound, weight - v, pos + 1, nu, f);
    }
    nu[pos] = 0;
}

/// Kostka numbers `K_{λ,μ}` for all partitions `μ` of `|λ|`, i.e. the monomial
/// expansion of the Schur function `s_λ`. Computed by counting semistandard
/// tableaux via removal of horizontal strips.
pub fn kostka_row(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut memo: HashMap<(Partition, Vec<u32>), BigInt> = HashMap::new();
    let mut out = BTreeMap::new();
    for mu in partitions_of(lambda.weight(), None) {
        let k = kostka(lambda, mu.parts(), &mut memo);
        if !k.is_zero() {
            out.insert(mu, k);
        }
    }
    out
}

/// Number of semistandard tableaux of shape `lambda` with content `content`
/// (entry `i` used `content[i-1]` times).
fn kostka(lambda: &Partition, content: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), BigInt>) -> BigInt {
    let Some((&last, rest)) = content.split_last() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    if lambda.len() > content.len() {
        return BigInt::zero();
    }
    let key = (lambda.clone(), content.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // The cells holding the largest entry form a horizontal strip λ/ρ of size
    // `last`: λ_{i+1} ≤ ρ_i ≤ λ_i.
    let mut total = BigInt::zero();
    let n = lambda.len();
    let mut rho = vec![0u32; n];
    strips(lambda.parts(), last, 0, &mut rho, &mut |rho| {
        let inner = Partition::new(rho.to_vec()).expect("strip leaves a partition");
        total += kostka(&inner, rest, memo);
    });
    memo.insert(key, total.clone());
    total
}

fn strips(lambda: &[u32], remove: u32, pos: usize, rho: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if pos == lambda.len() {
        if remove == 0 {
            f(rho);
        }
        return;
    }
    let lower = lambda.get(pos + 1).copied().unwrap_or(0);
    let max_take = (lambda[pos] - lower).min(remove);
    for take in 0..=max_take {
        rho[pos] = lambda[pos] - take;
        strips(lambda, remove - take, pos + 1, rho, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kostka_small() {
        let row = kostka_row(&p("2,1"));
        assert_eq!(row.get(&p("2,1")), Some(&BigInt::from(1)));
        assert_eq!(row.get(&p("1,1,1")), Some(&BigInt::from(2)));
        assert_eq!(row.get(&p("3")), None);
        let row = kostka_row(&p("2,2"));
        assert_eq!(row.get(&p("1,1,1,1")), Some(&BigInt::from(2)));
    }

    #[test]
    fn kostka_matches_determinants() {
        for lambda in partitions_up_to(7, None) {
            assert_eq!(
                MonomialSym::schur(&lambda, None),
                MonomialSym::schur_by_determinant(&lambda, None),
                "{lambda}"
            );
            assert_eq!(
                MonomialSym::schur(&lambda, Some(3)),
                MonomialSym::schur_by_determinant(&lambda, Some(3)),
                "{lambda} in 3 variables"
            );
        }
    }

    #[test]
    fn h1_squared() {
        let h1 = MonomialSym::complete(1, None);
        let sq = &h1 * &h1;
        let schur = sq.to_schur();
        assert_eq!(schur.len(), 2);
        assert_eq!(schur[&p("2")], BigInt::from(1));
        assert_eq!(schur[&p("1,1")], BigInt::from(1));
        // In one variable only (2) survives.
        let h1 = MonomialSym::complete(1, Some(1));
        assert_eq!((&h1 * &h1).to_schur().len(), 1);
    }

    #[test]
    fn schur_round_trip() {
        let f = &MonomialSym::schur(&p("3,1"), None) + &MonomialSym::schur(&p("2,2"), None).scale(&BigInt::from(-4));
        let s = f.to_schur();
        assert_eq!(MonomialSym::from_schur(&s, None), f);
    }
}
