//! The doubled alphabet `1' < 1 < 2' < 2 < 3' < ...`.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

/// A letter `v` or `v'` with `v >= 1`. Primed letters sort just below their
/// unprimed partners.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    value: u32,
    primed: bool,
}

impl Letter {
    pub fn unprimed(value: u32) -> Self {
        debug_assert!(value >= 1);
        Letter { value, primed: false }
    }

    pub fn primed(value: u32) -> Self {
        debug_assert!(value >= 1);
        Letter { value, primed: true }
    }

    pub fn new(value: u32, primed: bool) -> Self {
        debug_assert!(value >= 1);
        Letter { value, primed }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }

    pub fn with_prime(&self) -> Self {
        Letter { value: self.value, primed: true }
    }

    pub fn without_prime(&self) -> Self {
        Letter { value: self.value, primed: false }
    }

    /// Rank in the total order `1' < 1 < 2' < 2 < ...`, starting at 0 for `1'`.
    fn rank(&self) -> u64 {
        (self.value as u64) * 2 - if self.primed { 2 } else { 1 }
    }

    /// Parse `"12'"` (twelve-prime) or `"3"`; `position` is only used in the
    /// returned error.
    pub fn parse(token: &str, position: usize) -> Result<Self, LetterParseError> {
        let (digits, primed) = match token.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (token, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(Letter::new(v, primed)),
            _ => Err(LetterParseError { position, token: String::from(token) }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterParseError {
    pub position: usize,
    pub token: String,
}

impl fmt::Display for LetterParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed letter {:?} at token {}", self.token, self.position + 1)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_alphabet_order() {
        let seq = [
            Letter::primed(1),
            Letter::unprimed(1),
            Letter::primed(2),
            Letter::unprimed(2),
            Letter::primed(3),
            Letter::unprimed(3),
        ];
        for w in seq.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn parse_round_trip() {
        for tok in ["1", "12'", "3'", "7"] {
            let l = Letter::parse(tok, 0).unwrap();
            assert_eq!(alloc::format!("{}", l), tok);
        }
        assert_eq!(Letter::parse("12'", 0).unwrap(), Letter::primed(12));
        assert!(Letter::parse("0", 0).is_err());
        assert!(Letter::parse("'", 3).is_err());
        assert!(Letter::parse("x1", 0).is_err());
    }
}
