use std::fmt;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// `w` is identified with the product `s_{i_1} ⋯ s_{i_k}` of simple
/// transpositions acting on values: left multiplication by `s_i` exchanges the
/// values `i` and `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n as u8).collect() }
    }

    /// Builds a permutation from one-line notation (values `1..=n`).
    pub fn from_one_line(one_line: Vec<u8>) -> Option<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            let idx = (v as usize).checked_sub(1)?;
            if idx >= n || seen[idx] {
                return None;
            }
            seen[idx] = true;
        }
        Some(Permutation { one_line })
    }

    /// The longest element `w_0 = (n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n as u8).rev().collect() }
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    /// Size `n` of the permuted set.
    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    fn position(&self, value: usize) -> usize {
        self.one_line.iter().position(|&v| v as usize == value).expect("value present")
    }

    /// Whether `ℓ(s_i w) = ℓ(w) + 1`, i.e. value `i` appears before `i+1`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.position(i) < self.position(i + 1)
    }

    /// `s_i w`: exchanges the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let one_line = self
            .one_line
            .iter()
            .map(|&v| match v as usize {
                x if x == i => (i + 1) as u8,
                x if x == i + 1 => i as u8,
                _ => v,
            })
            .collect();
        Permutation { one_line }
    }

    /// Reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ⋯ s_{i_k}`, chosen by
    /// repeatedly splitting off the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.size()).find(|&i| !w.left_ascent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// The permutation `w × v` of `{1, ..., n+m}` acting as `w` on the first
    /// block and as `v` (shifted) on the second.
    pub fn tensor(&self, other: &Permutation) -> Self {
        let n = self.size() as u8;
        let mut one_line = self.one_line.clone();
        one_line.extend(other.one_line.iter().map(|&v| v + n));
        Permutation { one_line }
    }

    /// All permutations of `{1, ..., n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn go(n: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { one_line: cur.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u8 + 1);
                    go(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line.iter().map(u8::to_string).collect();
        write!(f, "[{}]", s.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_words() {
        for n in 0..=5 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                // Rebuild w from its word.
                let mut v = Permutation::identity(n);
                for &i in word.iter().rev() {
                    assert!(v.left_ascent(i));
                    v = v.left_mul_simple(i);
                }
                assert_eq!(v, w);
            }
        }
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(Permutation::longest(3).reduced_word(), vec![1, 2, 1]);
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(vec![2, 1, 3]).is_some());
        assert!(Permutation::from_one_line(vec![2, 2, 3]).is_none());
        assert!(Permutation::from_one_line(vec![0, 1]).is_none());
        assert!(Permutation::from_one_line(vec![1, 4]).is_none());
    }

    #[test]
    fn tensor_blocks() {
        let w = Permutation::from_one_line(vec![2, 1]).unwrap();
        let v = Permutation::from_one_line(vec![1, 3, 2]).unwrap();
        assert_eq!(w.tensor(&v).one_line(), &[2, 1, 3, 5, 4]);
        assert_eq!(w.tensor(&v).length(), 2);
    }
}
