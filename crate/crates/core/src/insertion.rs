//! Mixed insertion and Sagan-Worley insertion with recording tableaux,
//! reading words, and insertion-based rectification.
//!
//! Mixed insertion routes bumped letters by their parity: replaced primed
//! letters move to the next column, a replaced unprimed letter on the main
//! diagonal re-enters the next column primed, and a replaced unprimed letter
//! off the diagonal re-enters the next row. Sagan-Worley insertion instead
//! keeps the direction of the insertion that displaced the letter, switching
//! from rows to columns only at the main diagonal.

use crate::letter::Letter;
use crate::tableau::{RecordingTableau, ShiftedTableau, StandardSkewFilling};
use crate::word::{Biword, Word};
use alloc::vec::Vec;
use core::fmt;

/// Result of inserting a whole word/biword with mixed insertion.
#[derive(Clone, Debug)]
pub struct InsertionResult {
    pub p_tableau: ShiftedTableau,
    pub q_tableau: RecordingTableau,
    pub trace: Option<Vec<LetterTrace>>,
}

/// Result of Sagan-Worley insertion. With primed bottom letters the insertion
/// tableau may carry primed entries on the diagonal, so both sides are typed
/// as relaxed tableaux.
#[derive(Clone, Debug)]
pub struct SwInsertionResult {
    pub p_tableau: RecordingTableau,
    pub q_tableau: RecordingTableau,
    pub trace: Option<Vec<LetterTrace>>,
}

impl SwInsertionResult {
    /// The insertion tableau as a proper shifted tableau; fails only when a
    /// primed entry sits on the diagonal (possible for primed input).
    pub fn strict_p(&self) -> Result<ShiftedTableau, alloc::vec::Vec<crate::tableau::Violation>> {
        ShiftedTableau::new(self.p_tableau.rows().to_vec())
    }
}

/// Bump log for one inserted letter: every replacement `(cell, displaced,
/// incoming)` in order, and the box the insertion finally created. Cells are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterTrace {
    pub bumps: Vec<((usize, usize), Letter, Letter)>,
    pub new_cell: (usize, usize),
    pub by_column: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimedBottom {
    pub index: usize,
}

impl fmt::Display for PrimedBottom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mixed insertion requires unprimed bottom letters (pair {})", self.index + 1)
    }
}

// Internal 0-based grid: row i holds columns i..i+len-1.
struct Grid {
    rows: Vec<Vec<Letter>>,
    trace: Option<Vec<((usize, usize), Letter, Letter)>>,
}

enum Found {
    NewBox { row: usize, col: usize },
    Replaced { row: usize, col: usize, old: Letter },
}

impl Grid {
    fn new(rows: Vec<Vec<Letter>>, traced: bool) -> Self {
        Grid { rows, trace: if traced { Some(Vec::new()) } else { None } }
    }

    fn record(&mut self, cell: (usize, usize), old: Letter, new: Letter) {
        if let Some(t) = &mut self.trace {
            t.push(((cell.0 + 1, cell.1 + 1), old, new));
        }
    }

    /// Place `x` in row `i`, bumping the leftmost entry strictly greater
    /// (`strict`) or greater-or-equal (`!strict`) than `x`.
    fn row_place(&mut self, i: usize, x: Letter, strict: bool) -> Found {
        if i == self.rows.len() {
            self.rows.push(alloc::vec![x]);
            return Found::NewBox { row: i, col: i };
        }
        let row = &mut self.rows[i];
        let pos = row.iter().position(|&y| if strict { y > x } else { y >= x });
        match pos {
            None => {
                row.push(x);
                Found::NewBox { row: i, col: i + row.len() - 1 }
            }
            Some(j) => {
                let old = row[j];
                row[j] = x;
                let col = i + j;
                self.record((i, col), old, x);
                Found::Replaced { row: i, col, old }
            }
        }
    }

    /// Place `x` in column `j`, bumping the topmost entry strictly greater
    /// (`strict`) or greater-or-equal (`!strict`) than `x`.
    fn column_place(&mut self, j: usize, x: Letter, strict: bool) -> Found {
        for r in 0..=j.min(self.rows.len().saturating_sub(1)) {
            if self.rows.is_empty() {
                break;
            }
            let Some(&y) = self.rows[r].get(j.wrapping_sub(r)) else { continue };
            if j < r {
                continue;
            }
            if (strict && y > x) || (!strict && y >= x) {
                self.rows[r][j - r] = x;
                self.record((r, j), y, x);
                return Found::Replaced { row: r, col: j, old: y };
            }
        }
        // New box at the bottom of column j.
        for r in 0..self.rows.len() {
            if j >= r && self.rows[r].len() == j - r {
                self.rows[r].push(x);
                return Found::NewBox { row: r, col: j };
            }
        }
        debug_assert_eq!(j, self.rows.len(), "column insertion must land on a valid frontier");
        self.rows.push(alloc::vec![x]);
        Found::NewBox { row: j, col: j }
    }
}

/// Mixed-insert a single unprimed letter; returns the grown tableau and the
/// 1-based cell that was added.
pub fn mixed_insert_letter(t: &ShiftedTableau, x: u32) -> (ShiftedTableau, (usize, usize)) {
    let mut grid = Grid::new(t.rows().to_vec(), false);
    let (cell, _) = mixed_bump(&mut grid, x);
    (ShiftedTableau::from_rows_unchecked(grid.rows), cell)
}

/// Run the mixed bumping chain for one letter; returns the new 1-based cell
/// and whether it was created by a column insertion.
fn mixed_bump(grid: &mut Grid, x: u32) -> ((usize, usize), bool) {
    let mut pending = Letter::unprimed(x);
    let mut row_mode = true;
    let mut index = 0usize; // row index or column index, 0-based
    loop {
        if row_mode {
            debug_assert!(!pending.is_primed());
            match grid.row_place(index, pending, true) {
                Found::NewBox { row, col } => return ((row + 1, col + 1), false),
                Found::Replaced { row, col, old } => {
                    if old.is_primed() {
                        pending = old;
                        row_mode = false;
                        index = col + 1;
                    } else if row == col {
                        pending = old.with_prime();
                        row_mode = false;
                        index = col + 1;
                    } else {
                        pending = old;
                        index = row + 1;
                    }
                }
            }
        } else {
            debug_assert!(pending.is_primed());
            match grid.column_place(index, pending, true) {
                Found::NewBox { row, col } => return ((row + 1, col + 1), true),
                Found::Replaced { row, col, old } => {
                    debug_assert!(row != col, "primed letter bumped onto the diagonal");
                    if old.is_primed() {
                        pending = old;
                        index = col + 1;
                    } else {
                        pending = old;
                        row_mode = true;
                        index = row + 1;
                    }
                }
            }
        }
    }
}

/// `P_mix` and `Q_mix` of a word, identified with the biword `([n], w)`.
pub fn mixed_insertion(w: &Word) -> InsertionResult {
    mixed_insertion_impl(w, None, false)
}

pub fn mixed_insertion_traced(w: &Word) -> InsertionResult {
    mixed_insertion_impl(w, None, true)
}

/// Mixed insertion of a biword sorted however the caller likes; bottoms must
/// be unprimed. Records the top letters.
pub fn mixed_insertion_biword(b: &Biword) -> Result<InsertionResult, PrimedBottom> {
    for (index, &(_, bottom)) in b.pairs().iter().enumerate() {
        if bottom.is_primed() {
            return Err(PrimedBottom { index });
        }
    }
    let w = Word::new(b.pairs().iter().map(|&(_, bottom)| bottom.value()).collect());
    let tops: Vec<u32> = b.pairs().iter().map(|&(t, _)| t).collect();
    Ok(mixed_insertion_impl(&w, Some(&tops), false))
}

fn mixed_insertion_impl(w: &Word, tops: Option<&[u32]>, traced: bool) -> InsertionResult {
    let mut grid = Grid::new(Vec::new(), traced);
    let mut q_rows: Vec<Vec<Letter>> = Vec::new();
    let mut traces = traced.then(Vec::new);
    for (k, &x) in w.letters().iter().enumerate() {
        if let Some(t) = &mut grid.trace {
            t.clear();
        }
        let ((r, c), by_column) = mixed_bump(&mut grid, x);
        let mark = tops.map_or(k as u32 + 1, |t| t[k]);
        record_mark(&mut q_rows, r, c, Letter::unprimed(mark));
        if let Some(ts) = &mut traces {
            ts.push(LetterTrace {
                bumps: grid.trace.clone().unwrap_or_default(),
                new_cell: (r, c),
                by_column,
            });
        }
    }
    InsertionResult {
        p_tableau: ShiftedTableau::from_rows_unchecked(grid.rows),
        q_tableau: RecordingTableau::from_rows_unchecked(q_rows),
        trace: traces,
    }
}

fn record_mark(q_rows: &mut Vec<Vec<Letter>>, r: usize, c: usize, mark: Letter) {
    if r > q_rows.len() {
        q_rows.push(Vec::new());
    }
    debug_assert_eq!(q_rows[r - 1].len(), c - r, "recording cell must be the row frontier");
    q_rows[r - 1].push(mark);
}

/// Insert every letter of `w` into `t` in turn; equals `P_mix(u.w)` for any
/// `u` with `P_mix(u) = t`.
pub fn mixed_insert_word_into(t: &ShiftedTableau, w: &Word) -> ShiftedTableau {
    let mut grid = Grid::new(t.rows().to_vec(), false);
    for &x in w.letters() {
        mixed_bump(&mut grid, x);
    }
    ShiftedTableau::from_rows_unchecked(grid.rows)
}

/// Run the Sagan-Worley bumping chain for one letter; returns the new 1-based
/// cell and whether it was created by a column insertion.
fn sw_bump(grid: &mut Grid, x: Letter) -> ((usize, usize), bool) {
    let mut pending = x;
    let mut row_mode = true;
    let mut index = 0usize;
    loop {
        if row_mode {
            // Unprimed letters bump the leftmost strictly greater entry,
            // primed letters the leftmost greater-or-equal entry, except that
            // a primed letter meeting its unprimed twin on the diagonal
            // leaves the diagonal unprimed.
            let strict = !pending.is_primed();
            if pending.is_primed() && index < grid.rows.len() && !grid.rows[index].is_empty() {
                let diag = grid.rows[index][0];
                if diag == pending.without_prime() {
                    // Leftmost entry >= pending is the diagonal itself only
                    // when nothing smaller precedes it; the diagonal is the
                    // first cell, so check it directly.
                    pending = pending.without_prime();
                    row_mode = false;
                    index += 1;
                    continue;
                }
            }
            match grid.row_place(index, pending, strict) {
                Found::NewBox { row, col } => return ((row + 1, col + 1), false),
                Found::Replaced { row, col, old } => {
                    if row == col {
                        pending = if old.is_primed() && old == pending { old.without_prime() } else { old };
                        row_mode = false;
                        index = col + 1;
                    } else {
                        pending = old;
                        index = row + 1;
                    }
                }
            }
        } else {
            let strict = pending.is_primed();
            match grid.column_place(index, pending, strict) {
                Found::NewBox { row, col } => return ((row + 1, col + 1), true),
                Found::Replaced { row, col, old } => {
                    if row == col && old.is_primed() && old == pending {
                        pending = old.without_prime();
                    } else {
                        pending = old;
                    }
                    index = col + 1;
                }
            }
        }
    }
}

/// `P_SW` and `Q_SW` of a biword; bottom letters may be primed.
pub fn sw_insertion(b: &Biword) -> SwInsertionResult {
    let mut grid = Grid::new(Vec::new(), false);
    let mut q_rows: Vec<Vec<Letter>> = Vec::new();
    for &(top, bottom) in b.pairs() {
        let ((r, c), by_column) = sw_bump(&mut grid, bottom);
        record_mark(&mut q_rows, r, c, Letter::new(top, by_column));
    }
    SwInsertionResult {
        p_tableau: RecordingTableau::from_rows_unchecked(grid.rows),
        q_tableau: RecordingTableau::from_rows_unchecked(q_rows),
        trace: None,
    }
}

/// Sagan-Worley insertion of a sequence of letters, identified with the
/// biword `([n], w)`.
pub fn sw_insertion_letters(letters: &[Letter]) -> SwInsertionResult {
    let b = Biword::new(letters.iter().enumerate().map(|(i, &l)| (i as u32 + 1, l)).collect());
    sw_insertion(&b)
}

/// The reading word: rows bottom to top, each left to right.
pub fn reading_word(t: &ShiftedTableau) -> Vec<Letter> {
    t.rows().iter().rev().flatten().copied().collect()
}

/// Reading word of a standard skew filling (unprimed by standardness).
pub fn skew_reading_word(u: &StandardSkewFilling) -> Word {
    let mut cells: Vec<(&(usize, usize), &u32)> = u.entries().iter().collect();
    cells.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
    Word::new(cells.into_iter().map(|(_, &v)| v).collect())
}

/// Rectification: the unique straight-shape tableau shifted-Knuth-equivalent
/// to `u`, computed as `P_SW` of the reading word.
pub fn rectify(u: &StandardSkewFilling) -> ShiftedTableau {
    let w = skew_reading_word(u);
    let letters: Vec<Letter> = w.letters().iter().map(|&v| Letter::unprimed(v)).collect();
    let result = sw_insertion_letters(&letters);
    result
        .strict_p()
        .expect("Sagan-Worley insertion of an unprimed word never primes an entry")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::StrictPartition;
    use crate::shape::SkewShape;
    use crate::tableau::enumerate_standard_skew;

    fn pmix(word: &str) -> ShiftedTableau {
        mixed_insertion(&Word::parse(word).unwrap()).p_tableau
    }

    #[test]
    fn single_box_and_diagonal_bump() {
        assert_eq!(pmix("5").encode(), "5");
        // Insert 1 into [2]: 2 is bumped from the diagonal and re-enters
        // column 2 primed.
        let (t, cell) = mixed_insert_letter(&ShiftedTableau::decode("2").unwrap(), 1);
        assert_eq!(t.encode(), "1 2'");
        assert_eq!(cell, (1, 2));
    }

    #[test]
    fn paper_insertion_tableaux() {
        assert_eq!(pmix("2,2,2,1,1,1").encode(), "1 1 1 2' / 2 2");
        assert_eq!(pmix("1,2,1,3,2,4").encode(), "1 1 2 4 / 2 3");
        assert_eq!(pmix("2,1,4,3,2,1").encode(), "1 1 2' 4' / 2 3'");
        assert_eq!(pmix("3,1,2,1,4,3,2,1,1,1").encode(), "1 1 1 1 1 3' / 2 2 4' / 3");
        // P_mix(111222111) is the shifted Yamanouchi tableau of shape (6,3).
        assert_eq!(pmix("1,1,1,2,2,2,1,1,1").encode(), "1 1 1 1 1 1 / 2 2 2");
    }

    #[test]
    fn q_mix_records_positions() {
        let res = mixed_insertion(&Word::parse("2,1").unwrap());
        assert_eq!(res.p_tableau.encode(), "1 2'");
        assert_eq!(res.q_tableau.encode(), "1 2");
        assert!(res.q_tableau.rows().iter().flatten().all(|l| !l.is_primed()));
    }

    #[test]
    fn sw_reconstructs_reading_words() {
        // rw(S) = 212'3 for S = [1 2' 3 / 2].
        let s = ShiftedTableau::decode("1 2' 3 / 2").unwrap();
        let rw = reading_word(&s);
        assert_eq!(
            rw,
            vec![Letter::unprimed(2), Letter::unprimed(1), Letter::primed(2), Letter::unprimed(3)]
        );
        let back = sw_insertion_letters(&rw);
        assert_eq!(back.strict_p().unwrap(), s);
    }

    #[test]
    fn sw_recording_marks_column_boxes() {
        // P_SW(21): the second box comes from a column insertion.
        let res = sw_insertion_letters(&[Letter::unprimed(2), Letter::unprimed(1)]);
        assert_eq!(res.p_tableau.encode(), "1 2");
        assert_eq!(res.q_tableau.encode(), "1 2'");
    }

    #[test]
    fn reading_word_of_barely_yamanouchi_tableau() {
        let t = ShiftedTableau::decode("1 1 2' 3' 5' 6' / 2 3' 4'").unwrap();
        let rw: Vec<String> = reading_word(&t).iter().map(|l| alloc::format!("{}", l)).collect();
        assert_eq!(rw.join(" "), "2 3' 4' 1 1 2' 3' 5' 6'");
    }

    #[test]
    fn insert_into_tableau_matches_full_insertion() {
        let u = Word::parse("3,1,2").unwrap();
        let w = Word::parse("2,1,1").unwrap();
        let t = mixed_insertion(&u).p_tableau;
        assert_eq!(mixed_insert_word_into(&t, &w), mixed_insertion(&u.concat(&w)).p_tableau);
        // (P_mix(2), 1) -> [1 2'].
        let t2 = mixed_insertion(&Word::new(vec![2])).p_tableau;
        assert_eq!(mixed_insert_word_into(&t2, &Word::new(vec![1])).encode(), "1 2'");
        // Empty prefix.
        assert_eq!(
            mixed_insert_word_into(&ShiftedTableau::empty(), &w),
            mixed_insertion(&w).p_tableau
        );
    }

    #[test]
    fn rectify_small_cases() {
        let sp = |p: &[u32]| StrictPartition::new(p.to_vec()).unwrap();
        // Straight-shape standard tableaux are fixed points.
        let t = ShiftedTableau::canonical_standard(&sp(&[3, 1]));
        let skew = SkewShape::new(sp(&[3, 1]), StrictPartition::empty()).unwrap();
        let fillings = enumerate_standard_skew(&skew);
        let as_filling = fillings
            .iter()
            .find(|f| {
                f.entries().iter().all(|(&(r, c), &v)| t.entry(r, c) == Some(Letter::unprimed(v)))
            })
            .unwrap();
        assert_eq!(rectify(as_filling), t);

        // (2)/(1) with the single cell filled by 1.
        let skew = SkewShape::new(sp(&[2]), sp(&[1])).unwrap();
        let fillings = enumerate_standard_skew(&skew);
        assert_eq!(fillings.len(), 1);
        assert_eq!(rectify(&fillings[0]).encode(), "1");

        // (3,1)/(2): both fillings rectify to straight standard tableaux of size 2.
        let skew = SkewShape::new(sp(&[3, 1]), sp(&[2])).unwrap();
        for f in enumerate_standard_skew(&skew) {
            let r = rectify(&f);
            assert!(r.is_standard());
            assert_eq!(r.partition().size(), 2);
        }
    }

    #[test]
    fn trace_reports_growth() {
        let res = mixed_insertion_traced(&Word::parse("2,1,4,3,2,1").unwrap());
        let trace = res.trace.unwrap();
        assert_eq!(trace.len(), 6);
        // Each letter adds exactly one box; shape after k letters has k cells.
        let cells: Vec<(usize, usize)> = trace.iter().map(|t| t.new_cell).collect();
        assert_eq!(cells.len(), 6);
        assert_eq!(trace[1].new_cell, (1, 2));
        assert!(trace[1].by_column);
    }
}
