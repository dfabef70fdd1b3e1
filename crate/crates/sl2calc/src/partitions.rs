//! Partitions and the box-bounded families `P(a, b)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::Laurent;

/// Errors from constructing or transforming partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    OutsideBox { partition: Partition, rows: usize, cols: u32 },

    #[error("cannot parse partition {0:?}: expected comma-separated parts, `0` or `∅`")]
    Parse(String),
}

/// A partition: weakly decreasing positive parts (trailing zeros are stripped).
///
/// The derived ordering is lexicographic on the parts, which coincides with
/// lexicographic order on zero-padded part vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Result of shifting all parts of a fixed-length partition by an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shifted {
    Partition(Partition),
    /// Some shifted part became negative.
    NotAPartition,
}

impl Partition {
    /// Builds a partition from parts, stripping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts).expect("sorted parts form a partition")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    /// The one-row partition `(m)`.
    pub fn row(m: u32) -> Self {
        Self::new(vec![m]).expect("single part")
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self::rectangle(m, 1)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|α|`, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `len` entries.
    ///
    /// # Panics
    /// If the partition has more than `len` parts.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(self.len() <= len, "partition {self} has more than {len} parts");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// Whether the Young diagram fits in `rows` rows and `cols` columns.
    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// The conjugate (transposed) partition `ᾱ`.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }

    /// Complement in the `rows x cols` box: `(cols - α_rows, ..., cols - α_1)`.
    pub fn complement(&self, rows: usize, cols: u32) -> Result<Self, PartitionError> {
        self.check_box(rows, cols)?;
        let parts = (0..rows).rev().map(|i| cols - self.part(i)).collect();
        Partition::new(parts)
    }

    /// `α̂`: the conjugate of the complement in the `rows x cols` box; it lies
    /// in the transposed box.
    pub fn hat(&self, rows: usize, cols: u32) -> Result<Self, PartitionError> {
        Ok(self.complement(rows, cols)?.conjugate())
    }

    /// Shifts every part of the length-`len` padded partition by `m`.
    pub fn shift(&self, m: i64, len: usize) -> Shifted {
        let shifted: Vec<i64> = self.padded(len).iter().map(|&p| p as i64 + m).collect();
        if shifted.iter().any(|&p| p < 0) {
            return Shifted::NotAPartition;
        }
        Shifted::Partition(Partition::new(shifted.iter().map(|&p| p as u32).collect()).expect("shift preserves order"))
    }

    /// Entrywise difference `self - other`, if it is again a partition.
    pub fn minus(&self, other: &Partition) -> Option<Partition> {
        if !self.contains(other) {
            return None;
        }
        let parts = (0..self.len()).map(|i| self.part(i) - other.part(i)).collect();
        Partition::new(parts).ok()
    }

    fn check_box(&self, rows: usize, cols: u32) -> Result<(), PartitionError> {
        if self.fits_in(rows, cols) {
            Ok(())
        } else {
            Err(PartitionError::OutsideBox { partition: self.clone(), rows, cols })
        }
    }
}

impl fmt::Display for Partition {
    /// `∅` for the empty partition, otherwise `(2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `2,1`, `(2,1)`, `0`, `∅` and the empty string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// All partitions in the `rows x cols` box, `P(rows, cols)`, in lexicographic
/// order. There are `binomial(rows + cols, rows)` of them.
pub fn enumerate_box(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    fill_box(rows, cols, &mut current, &mut out);
    out.sort();
    out
}

fn fill_box(rows: usize, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if current.len() == rows {
        out.push(Partition::new(current.clone()).expect("generated decreasing"));
        return;
    }
    for p in 0..=max_part {
        current.push(p);
        fill_box(rows, p, current, out);
        current.pop();
    }
}

/// All partitions of `n` with at most `max_len` parts, in lexicographic order.
pub fn partitions_of(n: u32, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_weight(n, n, max_len.unwrap_or(usize::MAX), &mut current, &mut out);
    out.sort();
    out
}

fn fill_weight(remaining: u32, max_part: u32, max_len: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_weight(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

/// All partitions with at most `max_len` parts and weight at most `max_weight`.
pub fn partitions_up_to(max_weight: u32, max_len: Option<usize>) -> Vec<Partition> {
    (0..=max_weight).flat_map(|n| partitions_of(n, max_len)).collect()
}

/// `Σ_{α ∈ P(a,b)} q^{2|α| - ab}`, the balanced q-binomial `[a+b choose a]`.
pub fn q_cardinality(a: usize, b: u32) -> Laurent {
    let offset = a as i64 * b as i64;
    let mut total = Laurent::zero();
    for alpha in enumerate_box(a, b) {
        total.add_term(2 * alpha.weight() as i64 - offset, BigInt::one());
    }
    total
}

/// Ordinary binomial coefficient with arbitrary precision.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn box_enumeration_examples() {
        assert_eq!(enumerate_box(1, 1), vec![p("∅"), p("1")]);
        assert_eq!(enumerate_box(0, 5), vec![Partition::empty()]);
        let expected: Vec<Partition> = ["∅", "1", "1,1", "2", "2,1", "2,2"].iter().map(|s| p(s)).collect();
        assert_eq!(enumerate_box(2, 2), expected);
    }

    #[test]
    fn box_counts_are_binomials() {
        for a in 0..=6usize {
            for b in 0..=6u32 {
                assert_eq!(BigInt::from(enumerate_box(a, b).len()), binomial(a as u64 + b as u64, a as u64));
            }
        }
    }

    #[test]
    fn q_cardinality_examples() {
        assert_eq!(q_cardinality(1, 1), &Laurent::q_pow(-1) + &Laurent::q_pow(1));
        assert_eq!(q_cardinality(0, 3), Laurent::one());
        let expected = Laurent::from_terms([(-2, BigInt::one()), (0, BigInt::one()), (2, BigInt::one())]);
        assert_eq!(q_cardinality(2, 1), expected);
    }

    #[test]
    fn conjugate_complement_hat() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().complement(2, 3).unwrap(), Partition::rectangle(2, 3));
        assert_eq!(p("1").complement(1, 2).unwrap(), p("1"));
        assert_eq!(p("1").hat(1, 2).unwrap(), p("1"));
        assert_eq!(p("2,1").complement(2, 3).unwrap(), p("2,1"));
        assert!(matches!(p("3").complement(1, 2), Err(PartitionError::OutsideBox { .. })));
        assert!(p("1,1").hat(1, 2).is_err());
    }

    #[test]
    fn involutions_on_small_boxes() {
        for a in 0..=4usize {
            for b in 0..=4u32 {
                for alpha in enumerate_box(a, b) {
                    assert_eq!(alpha.conjugate().conjugate(), alpha);
                    let c = alpha.complement(a, b).unwrap();
                    assert_eq!(c.complement(a, b).unwrap(), alpha);
                    let h = alpha.hat(a, b).unwrap();
                    assert!(h.fits_in(b as usize, a as u32));
                    assert_eq!(h.hat(b as usize, a as u32).unwrap(), alpha);
                    assert_eq!(h.weight() + alpha.weight(), a as u32 * b);
                }
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("2,1").shift(1, 2), Shifted::Partition(p("3,2")));
        assert_eq!(p("1").shift(-1, 2), Shifted::NotAPartition);
        assert_eq!(Partition::empty().shift(2, 2), Shifted::Partition(p("2,2")));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("(3,1,0)").parts(), &[3, 1]);
        assert_eq!(p("2,2,1").to_string(), "(2,2,1)");
        assert_eq!(Partition::empty().to_string(), "∅");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn partitions_of_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(5, Some(2)).len(), 3);
    }
}
