//! Words over the positive integers, biwords, and content vectors.

use crate::letter::Letter;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A finite word over `{1, 2, 3, ...}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&x| x >= 1));
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Parse the comma-separated CLI form `"3,1,2,1"`.
    pub fn parse(text: &str) -> Result<Self, WordParseError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for (index, token) in text.split(',').enumerate() {
            match token.trim().parse::<u32>() {
                Ok(v) if v >= 1 => letters.push(v),
                _ => return Err(WordParseError { index, token: String::from(token.trim()) }),
            }
        }
        Ok(Word { letters })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordParseError {
    pub index: usize,
    pub token: String,
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad word token {:?} at position {}", self.token, self.index + 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{}]", self)
    }
}

/// A biword: parallel sequences of (top, bottom) pairs. Bottoms are letters of
/// the doubled alphabet so that Sagan-Worley insertion can consume primed
/// input; mixed insertion requires unprimed bottoms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Biword {
    pairs: Vec<(u32, Letter)>,
}

impl Biword {
    pub fn new(pairs: Vec<(u32, Letter)>) -> Self {
        debug_assert!(pairs.iter().all(|&(t, _)| t >= 1));
        Biword { pairs }
    }

    /// Identify a word `w` with the biword `([n], w)`.
    pub fn from_word(w: &Word) -> Self {
        Biword {
            pairs: w
                .letters()
                .iter()
                .enumerate()
                .map(|(i, &x)| (i as u32 + 1, Letter::unprimed(x)))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(u32, Letter)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Sort lexicographically by the top coordinate (ties by bottom).
    pub fn sorted_by_top(&self) -> Biword {
        let mut pairs = self.pairs.clone();
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        Biword { pairs }
    }

    /// Sort lexicographically by the bottom coordinate (ties by top).
    pub fn sorted_by_bottom(&self) -> Biword {
        let mut pairs = self.pairs.clone();
        pairs.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        Biword { pairs }
    }

    /// The duality map: swap top and bottom rows. Only defined when every
    /// bottom letter is unprimed.
    pub fn flipped(&self) -> Option<Biword> {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for &(t, b) in &self.pairs {
            if b.is_primed() {
                return None;
            }
            pairs.push((b.value(), Letter::unprimed(t)));
        }
        Some(Biword { pairs })
    }
}

/// Content vector: `counts[i-1]` is the number of letters of value `i`
/// (primed or unprimed). Trailing zeros are normalized away.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentVector {
    counts: Vec<u32>,
}

impl ContentVector {
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        ContentVector { counts }
    }

    pub fn empty() -> Self {
        ContentVector { counts: Vec::new() }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Count of value `v` (1-based).
    pub fn count(&self, v: u32) -> u32 {
        self.counts.get(v as usize - 1).copied().unwrap_or(0)
    }

    pub fn max_value(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ct(w)`: counts per value.
pub fn word_content(w: &Word) -> ContentVector {
    let mut counts = Vec::new();
    for &x in w.letters() {
        if x as usize > counts.len() {
            counts.resize(x as usize, 0);
        }
        counts[x as usize - 1] += 1;
    }
    ContentVector::new(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_examples() {
        let w = Word::parse("2,1,4,3,2,1").unwrap();
        assert_eq!(word_content(&w).counts(), &[2, 2, 1, 1]);
        assert_eq!(word_content(&Word::empty()).counts(), &[] as &[u32]);
    }

    #[test]
    fn biword_sorting_matches_example() {
        // w = 31542 as ([5], w): bottom-sorted tops read 25143.
        let b = Biword::from_word(&Word::new(vec![3, 1, 5, 4, 2]));
        assert_eq!(b.sorted_by_top(), b);
        let by_bottom = b.sorted_by_bottom();
        let tops: Vec<u32> = by_bottom.pairs().iter().map(|&(t, _)| t).collect();
        assert_eq!(tops, vec![2, 5, 1, 4, 3]);
    }

    #[test]
    fn parse_rejects_zero() {
        assert!(Word::parse("1,0,2").is_err());
        assert_eq!(Word::parse("").unwrap(), Word::empty());
    }
}
