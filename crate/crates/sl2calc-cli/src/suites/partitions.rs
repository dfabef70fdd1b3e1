//! Combinatorics of partitions in a box.

use sl2calc::partitions::{binomial, enumerate_box, partitions_up_to, q_cardinality};
use sl2calc::Partition;

use crate::check::{Check, Outcome};
use crate::config::SuiteConfig;
use crate::params;

const BOX_MAX: usize = 6;

pub fn checks(_cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for a in 0..=BOX_MAX {
        for b in 0..=BOX_MAX as u32 {
            out.push(Check::new("partitions.box_count", "|P(a,b)| = C(a+b,a)", params!("a" => a, "b" => b), move || {
                let count = enumerate_box(a, b).len();
                Outcome::expect_eq(&sl2calc::BigInt::from(count), &binomial((a + b as usize) as u64, a as u64))
            }));
            out.push(Check::new(
                "partitions.q_cardinality_symmetric",
                "Σ_{α∈P(a,b)} q^{2|α|-ab} is bar-invariant with nonnegative coefficients",
                params!("a" => a, "b" => b),
                move || {
                    let q = q_cardinality(a, b);
                    Outcome::require(q.is_bar_invariant() && q.is_nonnegative(), || format!("q_cardinality = {q}"))
                },
            ));
            out.push(Check::new(
                "partitions.box_involutions",
                "complement and hat∘hat are involutions on P(a,b)",
                params!("a" => a, "b" => b),
                move || box_involutions(a, b),
            ));
            out.push(Check::new(
                "partitions.enumeration_order",
                "P(a,b) is listed without repeats in lexicographic order",
                params!("a" => a, "b" => b),
                move || {
                    let list = enumerate_box(a, b);
                    let sorted = list.windows(2).all(|w| w[0].padded(a) < w[1].padded(a));
                    let inside = list.iter().all(|p| p.fits_in(a, b));
                    Outcome::require(sorted && inside, || format!("order: {}", super::show(&list)))
                },
            ));
        }
    }
    out.push(Check::new(
        "partitions.conjugate_involution",
        "conjugation is an involution and preserves weight",
        params!("max_weight" => 10),
        || {
            Outcome::all(partitions_up_to(10, None).into_iter().map(|p| {
                let c = p.conjugate();
                Outcome::require(c.conjugate() == p && c.weight() == p.weight(), || format!("{p} ↦ {c} ↦ {}", c.conjugate()))
            }))
        },
    ));
    out.push(Check::new("partitions.text_syntax", "\"2,1\", \"0\" and \"∅\" parse and print consistently", params!(), || {
        let cases = [("2,1", "(2,1)"), ("(2,1)", "(2,1)"), ("0", "∅"), ("∅", "∅"), ("3,3,1", "(3,3,1)")];
        Outcome::all(cases.iter().map(|&(input, expected)| match input.parse::<Partition>() {
            Ok(p) => Outcome::expect_eq(&p.to_string(), &expected.to_string()),
            Err(e) => Outcome::Fail(format!("{input}: {e}")),
        }))
    }));
    out
}

fn box_involutions(a: usize, b: u32) -> Outcome {
    Outcome::all(enumerate_box(a, b).into_iter().map(|alpha| {
        let round = alpha.complement(a, b).and_then(|c| c.complement(a, b));
        let hat = alpha.hat(a, b).and_then(|h| h.hat(b as usize, a as u32));
        match (round, hat) {
            (Ok(c), Ok(h)) => Outcome::require(c == alpha && h == alpha, || format!("{alpha}: complement² = {c}, hat² = {h}")),
            (Err(e), _) | (_, Err(e)) => Outcome::Fail(format!("{alpha}: {e}")),
        }
    }))
}
