//! Strict partitions: finite strictly decreasing sequences of positive parts.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A strict partition `p_1 > p_2 > ... > p_l > 0`. The empty partition is a
/// first-class value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts are not strictly decreasing (or a part is zero).
    NotStrict { index: usize },
    /// A token failed to parse as a positive integer.
    BadToken { index: usize, token: String },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotStrict { index } => {
                write!(f, "parts must be strictly decreasing and positive (part {})", index + 1)
            }
            PartitionError::BadToken { index, token } => {
                write!(f, "bad partition token {:?} at position {}", token, index + 1)
            }
        }
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for i in 0..parts.len() {
            if parts[i] == 0 || (i + 1 < parts.len() && parts[i] <= parts[i + 1]) {
                return Err(PartitionError::NotStrict { index: i });
            }
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `lambda_k` for 1-based `k`, zero past the last part.
    pub fn part(&self, k: usize) -> u32 {
        if k >= 1 && k <= self.parts.len() {
            self.parts[k - 1]
        } else {
            0
        }
    }

    /// Componentwise containment after zero padding.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        (1..=other.len()).all(|k| other.part(k) <= self.part(k))
    }

    /// Parse the comma-separated CLI form, e.g. `"8,7,4"`; `""` and `"-"`
    /// denote the empty partition.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for (index, token) in text.split(',').enumerate() {
            let token = token.trim();
            match token.parse::<u32>() {
                Ok(v) if v > 0 => parts.push(v),
                _ => {
                    return Err(PartitionError::BadToken { index, token: String::from(token) });
                }
            }
        }
        Self::new(parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// All strict partitions of `n`, lexicographically descending.
pub fn strict_partitions_of(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, u32::MAX, &mut stack, &mut out);
    out
}

fn descend(remaining: u32, bound: u32, stack: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if remaining == 0 {
        out.push(StrictPartition { parts: stack.clone() });
        return;
    }
    let hi = remaining.min(bound.saturating_sub(1));
    for part in (1..=hi).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// All strict partitions of every size in `0..=n`, grouped by size.
pub fn strict_partitions_up_to(n: u32) -> Vec<Vec<StrictPartition>> {
    (0..=n).map(strict_partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_strict() {
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        assert!(StrictPartition::new(vec![2, 3]).is_err());
        assert!(StrictPartition::new(vec![3, 0]).is_err());
        assert!(StrictPartition::new(vec![]).is_ok());
    }

    #[test]
    fn partitions_of_small_n() {
        let names = |n| {
            strict_partitions_of(n)
                .iter()
                .map(|p| alloc::format!("{}", p))
                .collect::<Vec<_>>()
        };
        assert_eq!(names(4), ["4", "3,1"]);
        assert_eq!(names(0), ["-"]);
        assert_eq!(names(6), ["6", "5,1", "4,2", "3,2,1"]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(StrictPartition::parse("8,7,4").unwrap(), sp(&[8, 7, 4]));
        assert_eq!(StrictPartition::parse("").unwrap(), StrictPartition::empty());
        assert_eq!(StrictPartition::parse("-").unwrap(), StrictPartition::empty());
        assert_eq!(alloc::format!("{}", sp(&[8, 7, 4])), "8,7,4");
        let err = StrictPartition::parse("3,x,1").unwrap_err();
        assert_eq!(err, PartitionError::BadToken { index: 1, token: "x".into() });
    }

    #[test]
    fn containment_pads_with_zeros() {
        assert!(sp(&[11, 9, 5]).contains(&sp(&[4, 2])));
        assert!(sp(&[3, 1]).contains(&sp(&[2, 1])));
        assert!(!sp(&[2]).contains(&sp(&[2, 1])));
        assert!(sp(&[2]).contains(&StrictPartition::empty()));
    }
}
