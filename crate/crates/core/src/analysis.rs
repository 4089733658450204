//! Word classifiers and decompositions: Yamanouchi and shifted-lattice
//! conditions, shrinking decompositions, interlacing, barely Yamanouchi
//! machinery, and hook-subword lengths.

use crate::insertion::mixed_insertion;
use crate::partition::StrictPartition;
use crate::tableau::ShiftedTableau;
use crate::word::{word_content, ContentVector, Word};
use alloc::vec::Vec;
use core::fmt;

/// Classical Yamanouchi (lattice) condition: every suffix has at least as
/// many `i` as `i+1`.
pub fn is_yamanouchi(w: &Word) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &x in w.letters().iter().rev() {
        if x as usize > counts.len() {
            counts.resize(x as usize, 0);
        }
        counts[x as usize - 1] += 1;
        if x >= 2 && counts[x as usize - 2] < counts[x as usize - 1] {
            return false;
        }
    }
    true
}

/// Shifted lattice condition: reading right to left, the count of `i` always
/// equals the count of `i+1` or exceeds it by exactly one.
pub fn is_shifted_lattice(w: &Word) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &x in w.letters().iter().rev() {
        let xi = x as usize;
        if xi + 1 > counts.len() {
            counts.resize(xi + 1, 0);
        }
        counts[xi - 1] += 1;
        // Only the pairs (x-1, x) and (x, x+1) can newly fail.
        if x >= 2 {
            let diff = counts[xi - 2] as i64 - counts[xi - 1] as i64;
            if diff != 0 && diff != 1 {
                return false;
            }
        }
        let diff = counts[xi - 1] as i64 - counts[xi] as i64;
        if diff != 0 && diff != 1 {
            return false;
        }
    }
    true
}

/// One run of a shrinking decomposition: letters decreasing by exactly 1 from
/// `top` down to `bottom`, at the recorded (0-based, increasing) positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkingRun {
    pub top: u32,
    pub bottom: u32,
    pub positions: Vec<usize>,
}

/// The canonical greedy decomposition of a word into decreasing runs,
/// extracted rightmost-maximum first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkingDecomposition {
    pub runs: Vec<ShrinkingRun>,
}

impl ShrinkingDecomposition {
    /// Interpret the runs as intervals `(mu_j, nu_j]`: `nu` from the tops and
    /// `mu` from the bottoms minus one. Returns `None` unless `nu` is strict
    /// and `mu` is a zero-padded strict partition with `mu_j < nu_j`.
    pub fn interval_partitions(&self) -> Option<(StrictPartition, StrictPartition)> {
        let tops: Vec<u32> = self.runs.iter().map(|r| r.top).collect();
        let bots: Vec<u32> = self.runs.iter().map(|r| r.bottom - 1).collect();
        let nu = StrictPartition::new(tops).ok()?;
        let positive = bots.iter().take_while(|&&b| b > 0).count();
        if bots[positive..].iter().any(|&b| b != 0) {
            return None;
        }
        let mu = StrictPartition::new(bots[..positive].to_vec()).ok()?;
        if !(1..=nu.len()).all(|j| mu.part(j) < nu.part(j)) {
            return None;
        }
        Some((mu, nu))
    }
}

/// Greedy extraction exactly as defined: take the rightmost maximum, then the
/// nearest matching value minus one to its right, repeatedly; remove the run
/// and recurse.
pub fn shrinking_decomposition(w: &Word) -> ShrinkingDecomposition {
    let letters = w.letters();
    let mut used = alloc::vec![false; letters.len()];
    let mut remaining = letters.len();
    let mut runs = Vec::new();
    while remaining > 0 {
        let mut max_pos = usize::MAX;
        let mut max_val = 0u32;
        for (i, &x) in letters.iter().enumerate() {
            if !used[i] && x >= max_val {
                max_val = x;
                max_pos = i;
            }
        }
        let mut positions = alloc::vec![max_pos];
        used[max_pos] = true;
        remaining -= 1;
        let mut want = max_val.wrapping_sub(1);
        let mut from = max_pos;
        while want >= 1 {
            let next = (from + 1..letters.len()).find(|&i| !used[i] && letters[i] == want);
            match next {
                Some(i) => {
                    positions.push(i);
                    used[i] = true;
                    remaining -= 1;
                    from = i;
                    want = want.wrapping_sub(1);
                }
                None => break,
            }
        }
        let bottom = want + 1;
        runs.push(ShrinkingRun { top: max_val, bottom, positions });
    }
    ShrinkingDecomposition { runs }
}

/// Interlacing words: equal letters are separated by both value-neighbors,
/// and the shrinking runs form the intervals of a difference of strict
/// partitions.
pub fn is_interlacing(w: &Word) -> bool {
    let letters = w.letters();
    for (i, &x) in letters.iter().enumerate() {
        // Find the next occurrence of x; between them there must be an
        // instance of x-1 (when x > 1) and one of x+1 (when x = 1, only x+1).
        if let Some(j) = (i + 1..letters.len()).find(|&j| letters[j] == x) {
            let between = &letters[i + 1..j];
            if !between.contains(&(x + 1)) {
                return false;
            }
            if x > 1 && !between.contains(&(x - 1)) {
                return false;
            }
        }
    }
    shrinking_decomposition(w).interval_partitions().is_some()
}

/// `seq(n, m) = n, n-1, ..., m`.
pub fn seq(n: u32, m: u32) -> Word {
    Word::new((m..=n).rev().collect())
}

/// The barely Yamanouchi sequence of `nu`:
/// `seq(nu_l) . seq(nu_{l-1}) . ... . seq(nu_1)`.
pub fn barely_yamanouchi_sequence(nu: &StrictPartition) -> Word {
    let mut letters = Vec::with_capacity(nu.size() as usize);
    for &part in nu.parts().iter().rev() {
        letters.extend((1..=part).rev());
    }
    Word::new(letters)
}

/// The barely Yamanouchi tableau `P_mix(y_nu)`; its shape is `nu`.
pub fn barely_yamanouchi_tableau(nu: &StrictPartition) -> ShiftedTableau {
    mixed_insertion(&barely_yamanouchi_sequence(nu)).p_tableau
}

/// Recover the strict partition `nu` with `ct(w) = ct(y_nu)`, if any: the
/// counts must be weakly decreasing with steps of at most one, and `nu` is
/// the conjugate.
pub fn recover_nu(content: &ContentVector) -> Option<StrictPartition> {
    let counts = content.counts();
    for i in 0..counts.len() {
        let next = counts.get(i + 1).copied().unwrap_or(0);
        if counts[i] < next || counts[i] - next > 1 {
            return None;
        }
        if counts[i] == 0 {
            return None;
        }
    }
    if counts.is_empty() {
        return Some(StrictPartition::empty());
    }
    let mut parts = Vec::new();
    for j in 1..=counts[0] {
        parts.push(counts.iter().filter(|&&c| c >= j).count() as u32);
    }
    StrictPartition::new(parts).ok()
}

/// Fast barely-Yamanouchi test: content of some `y_nu` plus shifted lattice.
pub fn is_barely_yamanouchi(w: &Word) -> bool {
    recover_nu(&word_content(w)).is_some() && is_shifted_lattice(w)
}

/// Certified slow path: mixed-insert and compare with the barely Yamanouchi
/// tableau of the recovered shape.
pub fn is_barely_yamanouchi_by_insertion(w: &Word) -> bool {
    match recover_nu(&word_content(w)) {
        None => false,
        Some(nu) => mixed_insertion(w).p_tableau == barely_yamanouchi_tableau(&nu),
    }
}

/// The profile `I_1 <= I_2 <= ...` of longest k-hook subword lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookProfile {
    pub lengths: Vec<u64>,
}

/// `I_k` via the insertion shape: `I_k = lambda_1 + ... + lambda_k + C(k,2)`
/// for `lambda` the shape of `P_mix(w)`.
pub fn hook_lengths_by_shape(w: &Word) -> HookProfile {
    let shape = mixed_insertion(w).p_tableau.partition().clone();
    let mut lengths = Vec::new();
    let mut sum = 0u64;
    for (k, &part) in shape.parts().iter().enumerate() {
        sum += part as u64;
        let k = (k + 1) as u64;
        lengths.push(sum + k * (k - 1) / 2);
    }
    HookProfile { lengths }
}

pub const HOOK_BRUTEFORCE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookCapExceeded {
    pub len: usize,
    pub cap: usize,
}

impl fmt::Display for HookCapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "word length {} exceeds the brute-force cap {}; use the shape formula instead", self.len, self.cap)
    }
}

/// Brute-force `I_k`: dynamic program over position-to-subword assignments.
/// Each position joins at most two of the `k` subwords, a pair of subwords
/// shares at most one position, every subword must stay a hook word
/// (strictly decreasing then weakly increasing), and shared positions count
/// once per subword.
pub fn hook_lengths_bruteforce(w: &Word, k: usize) -> Result<u64, HookCapExceeded> {
    hook_lengths_bruteforce_capped(w, k, HOOK_BRUTEFORCE_CAP)
}

pub fn hook_lengths_bruteforce_capped(w: &Word, k: usize, cap: usize) -> Result<u64, HookCapExceeded> {
    if w.len() > cap {
        return Err(HookCapExceeded { len: w.len(), cap });
    }
    if k == 0 || w.is_empty() {
        return Ok(0);
    }
    let max_val = w.letters().iter().copied().max().unwrap_or(0) as usize;
    // Per-subword states: 0 = empty, 1..=V descending on value v,
    // V+1..=2V ascending on value v.
    let states_per = 2 * max_val + 1;
    let pair_count = k * (k - 1) / 2;
    let total = states_per.pow(k as u32) << pair_count;
    let mut cur = alloc::vec![-1i32; total];
    let mut next = alloc::vec![-1i32; total];
    cur[0] = 0;

    let pair_bit = |a: usize, b: usize| -> usize {
        // a < b; index pairs (0,1),(0,2),...,(0,k-1),(1,2),...
        let mut idx = 0;
        for i in 0..k {
            for j in (i + 1)..k {
                if (i, j) == (a, b) {
                    return idx;
                }
                idx += 1;
            }
        }
        unreachable!()
    };
    // Precomputed strides for the mixed-radix subword states.
    let mut stride = alloc::vec![0usize; k];
    for (i, s) in stride.iter_mut().enumerate() {
        *s = states_per.pow(i as u32) << pair_count;
    }

    let step = |state: usize, x: usize| -> Option<usize> {
        // Transition of one subword state on letter x.
        if state == 0 {
            return Some(x); // start descending at x
        }
        if state <= max_val {
            let v = state;
            if x < v {
                Some(x) // continue descending
            } else {
                Some(max_val + x) // switch to ascending
            }
        } else {
            let v = state - max_val;
            if x >= v {
                Some(max_val + x)
            } else {
                None
            }
        }
    };

    for &letter in w.letters() {
        let x = letter as usize;
        next.copy_from_slice(&cur);
        for (state, &best) in cur.iter().enumerate() {
            if best < 0 {
                continue;
            }
            let mask = state & ((1 << pair_count) - 1);
            let sub = |i: usize| (state / stride[i]) % states_per;
            // Assign the position to a single subword.
            for i in 0..k {
                if let Some(ns) = step(sub(i), x) {
                    let nstate = state - sub(i) * stride[i] + ns * stride[i];
                    if next[nstate] < best + 1 {
                        next[nstate] = best + 1;
                    }
                }
            }
            // Assign the position to a pair of subwords (shared letter).
            for a in 0..k {
                for b in (a + 1)..k {
                    let bit = 1usize << pair_bit(a, b);
                    if mask & bit != 0 {
                        continue;
                    }
                    if let (Some(na), Some(nb)) = (step(sub(a), x), step(sub(b), x)) {
                        let nstate = state - sub(a) * stride[a] + na * stride[a]
                            - sub(b) * stride[b]
                            + nb * stride[b]
                            + bit;
                        if next[nstate] < best + 2 {
                            next[nstate] = best + 2;
                        }
                    }
                }
            }
        }
        core::mem::swap(&mut cur, &mut next);
    }
    Ok(cur.iter().copied().max().unwrap_or(0).max(0) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn yamanouchi_basics() {
        assert!(is_yamanouchi(&w("1,2,1")));
        assert!(is_yamanouchi(&w("2,1")));
        assert!(!is_yamanouchi(&w("2")));
        assert!(is_yamanouchi(&Word::empty()));
    }

    #[test]
    fn shifted_lattice_examples() {
        assert!(is_shifted_lattice(&w("2,1,4,3,2,1")));
        assert!(!is_shifted_lattice(&w("1,2,1,3,2,4")));
        assert!(is_shifted_lattice(&Word::empty()));
        // Two trailing 1s give count_1 - count_2 = 2.
        assert!(!is_shifted_lattice(&w("1,1")));
    }

    #[test]
    fn shrinking_decomposition_example_5_6() {
        let word = w("8,3,2,1,5,4,7,6,3,2,1,5,4,3,2,1");
        let d = shrinking_decomposition(&word);
        let tops: Vec<u32> = d.runs.iter().map(|r| r.top).collect();
        let bots: Vec<u32> = d.runs.iter().map(|r| r.bottom).collect();
        assert_eq!(tops, vec![8, 5, 3]);
        assert_eq!(bots, vec![1, 1, 1]);
        // Run lengths are full intervals d_8, d_5, d_3.
        let lens: Vec<usize> = d.runs.iter().map(|r| r.positions.len()).collect();
        assert_eq!(lens, vec![8, 5, 3]);
    }

    #[test]
    fn shrinking_decomposition_of_barely_yamanouchi_sequences() {
        let word = barely_yamanouchi_sequence(&sp(&[6, 4, 3]));
        assert_eq!(word, w("3,2,1,4,3,2,1,6,5,4,3,2,1"));
        let d = shrinking_decomposition(&word);
        let tops: Vec<u32> = d.runs.iter().map(|r| r.top).collect();
        assert_eq!(tops, vec![6, 4, 3]);
        assert!(d.runs.iter().all(|r| r.bottom == 1));
        assert_eq!(shrinking_decomposition(&w("1")).runs.len(), 1);
    }

    #[test]
    fn interlacing_examples() {
        assert!(is_interlacing(&w("2,1,4,3,2,1")));
        assert!(is_interlacing(&w("2,1")));
        assert!(!is_interlacing(&w("1,1")));
        assert!(is_interlacing(&Word::empty()));
    }

    #[test]
    fn barely_yamanouchi_words_and_tableaux() {
        assert!(is_barely_yamanouchi(&w("2,1,4,3,2,1")));
        assert!(!is_barely_yamanouchi(&w("1,2,1,3,2,4")));
        assert!(is_barely_yamanouchi_by_insertion(&w("2,1,4,3,2,1")));
        assert!(!is_barely_yamanouchi_by_insertion(&w("1,2,1,3,2,4")));
        assert_eq!(
            barely_yamanouchi_tableau(&sp(&[6, 3])).encode(),
            "1 1 2' 3' 5' 6' / 2 3' 4'"
        );
        assert_eq!(barely_yamanouchi_tableau(&sp(&[4, 2])).encode(), "1 1 2' 4' / 2 3'");
        assert_eq!(barely_yamanouchi_tableau(&sp(&[1])).encode(), "1");
        assert_eq!(recover_nu(&word_content(&w("2,1,4,3,2,1"))), Some(sp(&[4, 2])));
    }

    #[test]
    fn content_of_barely_yamanouchi_sequence() {
        let word = barely_yamanouchi_sequence(&sp(&[6, 4, 3]));
        assert_eq!(word_content(&word).counts(), &[3, 3, 3, 2, 1, 1]);
    }

    #[test]
    fn hook_profiles_from_the_examples() {
        let word = w("3,1,2,1,4,3,2,1,1,1");
        assert_eq!(hook_lengths_by_shape(&word).lengths, vec![6, 10, 13]);
        assert_eq!(hook_lengths_bruteforce(&word, 1).unwrap(), 6);
        assert_eq!(hook_lengths_bruteforce(&word, 2).unwrap(), 10);
        assert_eq!(hook_lengths_bruteforce(&word, 3).unwrap(), 13);

        let word = w("1,2,1,3,2,4");
        assert_eq!(hook_lengths_bruteforce(&word, 1).unwrap(), 4);
        assert_eq!(hook_lengths_bruteforce(&word, 2).unwrap(), 7);
        assert_eq!(hook_lengths_by_shape(&word).lengths, vec![4, 7]);

        assert_eq!(hook_lengths_by_shape(&w("2,1,4,3,2,1")).lengths, vec![4, 7]);

        // A strictly decreasing word is its own hook.
        assert_eq!(hook_lengths_bruteforce(&w("5,4,2,1"), 1).unwrap(), 4);
        assert_eq!(hook_lengths_by_shape(&w("7")).lengths, vec![1]);

        assert!(hook_lengths_bruteforce(&Word::new(alloc::vec![1; 13]), 1).is_err());
    }
}
