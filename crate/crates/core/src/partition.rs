//! Integer partitions in canonical form (weakly decreasing, no trailing zeros).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition. Parts are weakly decreasing positive integers;
/// trailing zeros are stripped on construction, so two partitions that differ
/// only by zero parts compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Canonicalize a weakly decreasing sequence of nonnegative integers.
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {} < {}",
                    w[0], w[1]
                )));
            }
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition("negative part".into()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but panics on invalid input. Intended for
    /// literals in tests and internal code with already-validated data.
    pub fn from_parts(parts: &[i64]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts, usually written ℓ(μ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts |μ|.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// The i-th part (0-indexed), zero beyond the last nonzero part.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First (largest) part, zero for the empty partition.
    pub fn first(&self) -> i64 {
        self.part(0)
    }

    /// Transpose of the Ferrers diagram: μ′_j = #{i : μ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first() as usize);
        for j in 1..=self.first() {
            parts.push(self.parts.iter().filter(|&&p| p >= j).count() as i64);
        }
        Partition { parts }
    }

    /// Cellwise containment of Ferrers diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: i64) -> Vec<Partition> {
        fn rec(remaining: i64, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let top = remaining.min(max_part);
            for p in (1..=top).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n >= 0 {
            rec(n, n.max(1), &mut Vec::new(), &mut out);
        }
        out
    }

    /// All partitions of every size 0..=n.
    pub fn all_up_to(n: i64) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

/// Padded lexicographic order on parts. Iterating a sorted collection in
/// reverse yields the canonical display order for Schur expansions
/// (first differing part larger comes first), which refines dominance.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.len().max(other.len());
        for i in 0..n {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

/// Parse `"3,1,1"`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: i64 = piece
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {:?}", piece)))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}
