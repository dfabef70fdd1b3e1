//! Seeded random elements for the randomized checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sl2calc::{BigInt, Laurent, NhElement, Permutation, Poly};

/// A random polynomial in `num_vars` variables with up to `max_terms`
/// terms of total degree at most `max_degree` and coefficients in `[-9, 9]`.
pub fn poly(rng: &mut ChaCha8Rng, num_vars: usize, max_terms: usize, max_degree: u32) -> Poly {
    let terms = rng.gen_range(1..=max_terms);
    Poly::from_terms(
        num_vars,
        (0..terms).map(|_| {
            let mut budget = rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; num_vars];
            for e in exps.iter_mut() {
                let k = rng.gen_range(0..=budget);
                *e = k;
                budget -= k;
            }
            (exps, BigInt::from(rng.gen_range(-9i64..=9)))
        }),
    )
}

/// A nonzero random polynomial.
pub fn nonzero_poly(rng: &mut ChaCha8Rng, num_vars: usize, max_terms: usize, max_degree: u32) -> Poly {
    loop {
        let p = poly(rng, num_vars, max_terms, max_degree);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random Laurent polynomial with exponents in `[-span, span]`.
pub fn laurent(rng: &mut ChaCha8Rng, max_terms: usize, span: i64) -> Laurent {
    let terms = rng.gen_range(1..=max_terms);
    Laurent::from_terms((0..terms).map(|_| (rng.gen_range(-span..=span), BigInt::from(rng.gen_range(-9i64..=9)))))
}

/// A nonzero random Laurent polynomial.
pub fn nonzero_laurent(rng: &mut ChaCha8Rng, max_terms: usize, span: i64) -> Laurent {
    loop {
        let p = laurent(rng, max_terms, span);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random element `Σ f_w ∂_w` of `NH_rank`.
pub fn nh_element(rng: &mut ChaCha8Rng, rank: usize, max_terms: usize, max_degree: u32) -> NhElement {
    let perms = Permutation::all(rank);
    let terms = rng.gen_range(1..=max_terms);
    (0..terms).fold(NhElement::zero(rank), |acc, _| {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let f = poly(rng, rank, 3, max_degree);
        &acc + &NhElement::term(f, w)
    })
}
