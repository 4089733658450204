//! Shifted semistandard tableaux, recording tableaux, validation, enumeration,
//! and the text codec.
//!
//! Entries of row `r` are stored left to right; cell `(r, c)` (1-based, row 1
//! on top, row `r` starting at column `r`) lives at `rows[r-1][c-r]`.

use crate::letter::Letter;
use crate::partition::StrictPartition;
use crate::shape::{ShiftedShape, SkewShape};
use crate::word::ContentVector;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A shifted semistandard Young tableau: rows and columns nondecreasing, each
/// primed letter at most once per row, each unprimed letter at most once per
/// column, no primed letter on the main diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedTableau {
    partition: StrictPartition,
    rows: Vec<Vec<Letter>>,
}

/// Like [`ShiftedTableau`] but without the unprimed-diagonal restriction;
/// recording tableaux mark column-insertion boxes with primed entries that may
/// land on the diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RecordingTableau {
    partition: StrictPartition,
    rows: Vec<Vec<Letter>>,
}

/// One violated tableau constraint, with the offending cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Row lengths do not form a strict partition.
    ShapeNotStrict { row: usize },
    RowOrder { cell: (usize, usize) },
    ColumnOrder { cell: (usize, usize) },
    PrimedRepeatInRow { cell: (usize, usize) },
    UnprimedRepeatInColumn { cell: (usize, usize) },
    PrimedOnDiagonal { cell: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ShapeNotStrict { row } => write!(f, "row lengths not strictly decreasing at row {}", row),
            Violation::RowOrder { cell } => write!(f, "row decreases at {:?}", cell),
            Violation::ColumnOrder { cell } => write!(f, "column decreases at {:?}", cell),
            Violation::PrimedRepeatInRow { cell } => write!(f, "primed letter repeated in row at {:?}", cell),
            Violation::UnprimedRepeatInColumn { cell } => write!(f, "unprimed letter repeated in column at {:?}", cell),
            Violation::PrimedOnDiagonal { cell } => write!(f, "primed letter on the diagonal at {:?}", cell),
        }
    }
}

/// Check every constraint and report all violations. `diagonal_rule` is off
/// for recording tableaux.
fn check_rows(rows: &[Vec<Letter>], diagonal_rule: bool) -> Vec<Violation> {
    let mut violations = Vec::new();
    for r in 1..rows.len() {
        if rows[r].len() >= rows[r - 1].len() {
            violations.push(Violation::ShapeNotStrict { row: r + 1 });
        }
    }
    if rows.iter().any(|row| row.is_empty()) {
        violations.push(Violation::ShapeNotStrict { row: rows.len() });
        return violations;
    }
    if !violations.is_empty() {
        return violations;
    }
    for (i, row) in rows.iter().enumerate() {
        let r = i + 1;
        for (j, &x) in row.iter().enumerate() {
            let c = r + j;
            if j > 0 {
                let left = row[j - 1];
                if x < left {
                    violations.push(Violation::RowOrder { cell: (r, c) });
                }
                if x == left && x.is_primed() {
                    violations.push(Violation::PrimedRepeatInRow { cell: (r, c) });
                }
            }
            if i > 0 {
                // Cell above is (r-1, c) = rows[i-1][c - (r-1)] = rows[i-1][j+1].
                if let Some(&up) = rows[i - 1].get(j + 1) {
                    if x < up {
                        violations.push(Violation::ColumnOrder { cell: (r, c) });
                    }
                    if x == up && !x.is_primed() {
                        violations.push(Violation::UnprimedRepeatInColumn { cell: (r, c) });
                    }
                }
            }
            if diagonal_rule && c == r && x.is_primed() {
                violations.push(Violation::PrimedOnDiagonal { cell: (r, c) });
            }
        }
    }
    // Non-adjacent repeats in a row/column are impossible once the order
    // constraints hold, so adjacent checks cover the once-per rules; when an
    // order constraint already fails we still only report adjacent repeats.
    violations
}

fn partition_of_rows(rows: &[Vec<Letter>]) -> Option<StrictPartition> {
    StrictPartition::new(rows.iter().map(|r| r.len() as u32).collect()).ok()
}

impl ShiftedTableau {
    /// `validate_tableau`: returns the tableau iff every invariant holds,
    /// otherwise the list of violated constraints.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self, Vec<Violation>> {
        let violations = check_rows(&rows, true);
        if !violations.is_empty() {
            return Err(violations);
        }
        let partition = partition_of_rows(&rows).expect("checked strict");
        Ok(ShiftedTableau { partition, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        debug_assert!(check_rows(&rows, true).is_empty(), "invalid tableau: {:?}", check_rows(&rows, true));
        let partition = partition_of_rows(&rows).expect("strict");
        ShiftedTableau { partition, rows }
    }

    pub fn empty() -> Self {
        ShiftedTableau { partition: StrictPartition::empty(), rows: Vec::new() }
    }

    pub fn partition(&self) -> &StrictPartition {
        &self.partition
    }

    pub fn shape(&self) -> ShiftedShape {
        ShiftedShape::new(self.partition.clone())
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Entry at 1-based `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> Option<Letter> {
        self.rows.get(r - 1).and_then(|row| {
            if c >= r {
                row.get(c - r).copied()
            } else {
                None
            }
        })
    }

    /// Content vector: `counts[i]` cells holding `i` or `i'`.
    pub fn content(&self) -> ContentVector {
        content_of_rows(&self.rows)
    }

    /// True iff unprimed with values `1..=n` each exactly once.
    pub fn is_standard(&self) -> bool {
        let n = self.partition.size();
        let mut seen = alloc::vec![false; n as usize];
        for row in &self.rows {
            for &x in row {
                if x.is_primed() || x.value() as u64 > n || seen[x.value() as usize - 1] {
                    return false;
                }
                seen[x.value() as usize - 1] = true;
            }
        }
        true
    }

    /// The canonical standard tableau of this shape: row-by-row filling.
    pub fn canonical_standard(partition: &StrictPartition) -> ShiftedTableau {
        let mut next = 1u32;
        let mut rows = Vec::new();
        for k in 1..=partition.len() {
            let mut row = Vec::new();
            for _ in 0..partition.part(k) {
                row.push(Letter::unprimed(next));
                next += 1;
            }
            rows.push(row);
        }
        ShiftedTableau::from_rows_unchecked(rows)
    }

    pub fn encode(&self) -> String {
        encode_rows(&self.rows)
    }

    pub fn decode(text: &str) -> Result<Self, CodecError> {
        let rows = decode_rows(text)?;
        ShiftedTableau::new(rows).map_err(|violations| CodecError::Invalid { violations })
    }
}

impl RecordingTableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self, Vec<Violation>> {
        let violations = check_rows(&rows, false);
        if !violations.is_empty() {
            return Err(violations);
        }
        let partition = partition_of_rows(&rows).expect("checked strict");
        Ok(RecordingTableau { partition, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        debug_assert!(check_rows(&rows, false).is_empty());
        let partition = partition_of_rows(&rows).expect("strict");
        RecordingTableau { partition, rows }
    }

    pub fn empty() -> Self {
        RecordingTableau { partition: StrictPartition::empty(), rows: Vec::new() }
    }

    pub fn partition(&self) -> &StrictPartition {
        &self.partition
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<Letter> {
        self.rows.get(r - 1).and_then(|row| if c >= r { row.get(c - r).copied() } else { None })
    }

    pub fn content(&self) -> ContentVector {
        content_of_rows(&self.rows)
    }

    pub fn encode(&self) -> String {
        encode_rows(&self.rows)
    }

    pub fn decode(text: &str) -> Result<Self, CodecError> {
        let rows = decode_rows(text)?;
        RecordingTableau::new(rows).map_err(|violations| CodecError::Invalid { violations })
    }
}

impl From<ShiftedTableau> for RecordingTableau {
    fn from(t: ShiftedTableau) -> Self {
        RecordingTableau { partition: t.partition, rows: t.rows }
    }
}

fn content_of_rows(rows: &[Vec<Letter>]) -> ContentVector {
    let mut counts: Vec<u32> = Vec::new();
    for row in rows {
        for x in row {
            let v = x.value() as usize;
            if v > counts.len() {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
    }
    ContentVector::new(counts)
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.encode())
    }
}

impl fmt::Display for RecordingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for RecordingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.encode())
    }
}

// ---------------------------------------------------------------------------
// Text codec: entries space-separated, rows joined by " / ", primes rendered
// as an ASCII apostrophe after the digits ("12'" is twelve-prime).

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodecError {
    /// `token` is the 1-based index of the first malformed token.
    Malformed { token: usize, text: String },
    Invalid { violations: Vec<Violation> },
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodecError::Malformed { token, text } => {
                write!(f, "malformed token {:?} at position {}", text, token)
            }
            CodecError::Invalid { violations } => {
                write!(f, "decoded entries violate tableau constraints: ")?;
                for (i, v) in violations.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{}", v)?;
                }
                Ok(())
            }
        }
    }
}

fn encode_rows(rows: &[Vec<Letter>]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push_str(" / ");
        }
        for (j, x) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", x);
        }
    }
    out
}

fn decode_rows(text: &str) -> Result<Vec<Vec<Letter>>, CodecError> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let mut position = 0usize;
    for row_text in text.split('/') {
        let mut row = Vec::new();
        for token in row_text.split_whitespace() {
            position += 1;
            let letter = Letter::parse(token, position).map_err(|e| CodecError::Malformed {
                token: e.position,
                text: e.token,
            })?;
            row.push(letter);
        }
        rows.push(row);
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Enumeration of shifted tableaux.

/// Constraint for [`enumerate_tableaux`]: either all entries with value at
/// most `n`, or an exact content vector.
#[derive(Clone, Debug)]
pub enum FillConstraint {
    MaxValue(u32),
    ExactContent(ContentVector),
}

/// Every shifted tableau of shape `lambda` satisfying the constraint, in
/// row-major lexicographic order on entries. An infeasible exact content
/// yields an empty result.
pub fn enumerate_tableaux(lambda: &StrictPartition, constraint: &FillConstraint) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for_each_tableau(lambda, constraint, &mut |t| out.push(t.clone()));
    out
}

/// Visitor form of [`enumerate_tableaux`]; the polynomial oracle folds over
/// this without materializing the set.
pub fn for_each_tableau<F: FnMut(&ShiftedTableau)>(
    lambda: &StrictPartition,
    constraint: &FillConstraint,
    f: &mut F,
) {
    if let FillConstraint::ExactContent(c) = constraint {
        if c.total() != lambda.size() {
            return;
        }
    }
    let max_value = match constraint {
        FillConstraint::MaxValue(n) => *n,
        FillConstraint::ExactContent(c) => c.max_value(),
    };
    if lambda.is_empty() {
        f(&ShiftedTableau::empty());
        return;
    }
    if max_value == 0 {
        return;
    }
    let mut remaining: Vec<u32> = match constraint {
        FillConstraint::MaxValue(_) => Vec::new(),
        FillConstraint::ExactContent(c) => {
            let mut v = c.counts().to_vec();
            v.resize(max_value as usize, 0);
            v
        }
    };
    let exact = matches!(constraint, FillConstraint::ExactContent(_));
    let mut rows: Vec<Vec<Letter>> = lambda.parts().iter().map(|&p| Vec::with_capacity(p as usize)).collect();
    fill_cell(lambda, max_value, exact, &mut remaining, &mut rows, 0, f);
}

fn fill_cell<F: FnMut(&ShiftedTableau)>(
    lambda: &StrictPartition,
    max_value: u32,
    exact: bool,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<Letter>>,
    mut row: usize,
    f: &mut F,
) {
    // Advance to the next unfilled cell in row-major order.
    while row < rows.len() && rows[row].len() == lambda.part(row + 1) as usize {
        row += 1;
        if row < rows.len() && exact {
            // Entering a fresh row: every letter in it sits below row `row`,
            // whose minimum possible entry is bounded below by the entry
            // above its diagonal. Letters of smaller value can never be
            // placed again.
            let above = rows[row - 1][1]; // cell (row, row+1) sits below (row-1, row+1)
            for v in 1..=max_value {
                if remaining[v as usize - 1] > 0 && Letter::unprimed(v) < above {
                    return;
                }
            }
        }
    }
    if row == rows.len() {
        let t = ShiftedTableau::from_rows_unchecked(rows.clone());
        f(&t);
        return;
    }
    let j = rows[row].len();
    let r = row + 1;
    let c = r + j;
    let on_diagonal = j == 0;
    // Lower bounds from the left and upper neighbors.
    let left = if j > 0 { Some(rows[row][j - 1]) } else { None };
    let up = if row > 0 { rows[row - 1].get(j + 1).copied() } else { None };
    let _ = c;

    for value in 1..=max_value {
        if exact && remaining[value as usize - 1] == 0 {
            continue;
        }
        for primed in [true, false] {
            if primed && on_diagonal {
                continue;
            }
            let letter = Letter::new(value, primed);
            if let Some(l) = left {
                if letter < l || (letter == l && l.is_primed()) {
                    continue;
                }
            }
            if let Some(u) = up {
                if letter < u || (letter == u && !u.is_primed()) {
                    continue;
                }
            }
            rows[row].push(letter);
            if exact {
                remaining[value as usize - 1] -= 1;
            }
            fill_cell(lambda, max_value, exact, remaining, rows, row, f);
            if exact {
                remaining[value as usize - 1] += 1;
            }
            rows[row].pop();
        }
    }
}

// ---------------------------------------------------------------------------
// Standard fillings of skew shifted shapes.

/// A standard filling of a skew shifted shape: values `1..=n` each once,
/// unprimed, rows and columns strictly increasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardSkewFilling {
    shape: SkewShape,
    entries: BTreeMap<(usize, usize), u32>,
}

impl StandardSkewFilling {
    pub fn new(shape: SkewShape, entries: BTreeMap<(usize, usize), u32>) -> Result<Self, String> {
        let cells = shape.cells();
        if entries.len() != cells.len() {
            return Err(String::from("entry count does not match shape"));
        }
        let n = cells.len() as u32;
        let mut seen = alloc::vec![false; n as usize];
        for (&(r, c), &v) in &entries {
            if !shape.contains(r, c) {
                return Err(String::from("entry outside the shape"));
            }
            if v < 1 || v > n || seen[v as usize - 1] {
                return Err(String::from("values must be 1..=n, each once"));
            }
            seen[v as usize - 1] = true;
        }
        for (&(r, c), &v) in &entries {
            if let Some(&right) = entries.get(&(r, c + 1)) {
                if right <= v {
                    return Err(String::from("row not strictly increasing"));
                }
            }
            if let Some(&below) = entries.get(&(r + 1, c)) {
                if below <= v {
                    return Err(String::from("column not strictly increasing"));
                }
            }
        }
        Ok(StandardSkewFilling { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.entries
    }
}

/// All standard fillings of the skew shape, in deterministic order.
pub fn enumerate_standard_skew(shape: &SkewShape) -> Vec<StandardSkewFilling> {
    let mut out = Vec::new();
    for_each_standard_skew(shape, &mut |filling| {
        out.push(filling.clone());
        true
    });
    out
}

/// Visitor form of [`enumerate_standard_skew`]; returns false if the visitor
/// asked to stop early.
pub fn for_each_standard_skew<F: FnMut(&StandardSkewFilling) -> bool>(
    shape: &SkewShape,
    f: &mut F,
) -> bool {
    let cells = shape.cells();
    let mut entries: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    place_next(shape, &cells, &mut entries, 1, f)
}

fn place_next<F: FnMut(&StandardSkewFilling) -> bool>(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    entries: &mut BTreeMap<(usize, usize), u32>,
    next: u32,
    f: &mut F,
) -> bool {
    if entries.len() == cells.len() {
        let filling = StandardSkewFilling { shape: shape.clone(), entries: entries.clone() };
        return f(&filling);
    }
    for &(r, c) in cells {
        if entries.contains_key(&(r, c)) {
            continue;
        }
        let west_ready = !shape.contains(r, c - 1) || entries.contains_key(&(r, c - 1));
        let north_ready = r == 1 || !shape.contains(r - 1, c) || entries.contains_key(&(r - 1, c));
        if west_ready && north_ready {
            entries.insert((r, c), next);
            if !place_next(shape, cells, entries, next + 1, f) {
                entries.remove(&(r, c));
                return false;
            }
            entries.remove(&(r, c));
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validate_accepts_paper_tableau() {
        // S = [1, 2', 3 / 2] with reading word 212'3.
        let t = ShiftedTableau::decode("1 2' 3 / 2").unwrap();
        assert_eq!(t.partition(), &sp(&[3, 1]));
        assert_eq!(t.content().counts(), &[1, 2, 1]);
    }

    #[test]
    fn validate_rejects_unprimed_column_repeat() {
        let err = ShiftedTableau::decode("1 1 / 1").unwrap_err();
        match err {
            CodecError::Invalid { violations } => {
                assert!(violations.contains(&Violation::UnprimedRepeatInColumn { cell: (2, 2) }));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn validate_rejects_primed_diagonal() {
        let err = ShiftedTableau::decode("1 2' / 2'").unwrap_err();
        match err {
            CodecError::Invalid { violations } => {
                assert!(violations.contains(&Violation::PrimedOnDiagonal { cell: (2, 2) }));
            }
            other => panic!("unexpected {:?}", other),
        }
        // Recording tableaux accept the same rows.
        assert!(RecordingTableau::decode("1 2' / 2'").is_ok());
    }

    #[test]
    fn codec_reports_first_malformed_token() {
        let err = ShiftedTableau::decode("1 2x / 2").unwrap_err();
        assert_eq!(err, CodecError::Malformed { token: 2, text: "2x".into() });
    }

    #[test]
    fn codec_example_from_display() {
        let t = ShiftedTableau::decode("1 1 2' 3' 5' 6' / 2 3' 4'").unwrap();
        assert_eq!(t.encode(), "1 1 2' 3' 5' 6' / 2 3' 4'");
        assert_eq!(t.content().counts(), &[2, 2, 2, 1, 1, 1]);
        let single = ShiftedTableau::decode("1").unwrap();
        assert_eq!(single.partition(), &sp(&[1]));
    }

    #[test]
    fn enumerate_row_of_two_max_two() {
        let ts = enumerate_tableaux(&sp(&[2]), &FillConstraint::MaxValue(2));
        let texts: Vec<String> = ts.iter().map(|t| t.encode()).collect();
        assert_eq!(texts, ["1 1", "1 2'", "1 2", "2 2"]);
    }

    #[test]
    fn enumerate_exact_content_leading_monomial() {
        let ts = enumerate_tableaux(
            &sp(&[2, 1]),
            &FillConstraint::ExactContent(ContentVector::new(alloc::vec![2, 1])),
        );
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].encode(), "1 1 / 2");
    }

    #[test]
    fn enumerate_matches_bruteforce_filter() {
        // Cross-check the enumerator against a brute-force assignment filter.
        for parts in [&[3u32][..], &[2, 1], &[3, 1], &[4, 2]] {
            let lambda = sp(parts);
            for n in 1..=3u32 {
                let fast = enumerate_tableaux(&lambda, &FillConstraint::MaxValue(n));
                let slow = brute_force_tableaux(&lambda, n);
                assert_eq!(fast, slow, "lambda={:?} n={}", lambda, n);
            }
        }
    }

    fn brute_force_tableaux(lambda: &StrictPartition, n: u32) -> Vec<ShiftedTableau> {
        let cells: usize = lambda.size() as usize;
        let alphabet: Vec<Letter> = (1..=n)
            .flat_map(|v| [Letter::primed(v), Letter::unprimed(v)])
            .collect();
        let mut out = Vec::new();
        let mut assignment = alloc::vec![0usize; cells];
        loop {
            let mut rows: Vec<Vec<Letter>> = Vec::new();
            let mut idx = 0;
            for k in 1..=lambda.len() {
                let len = lambda.part(k) as usize;
                rows.push(assignment[idx..idx + len].iter().map(|&a| alphabet[a]).collect());
                idx += len;
            }
            if let Ok(t) = ShiftedTableau::new(rows) {
                out.push(t);
            }
            // Odometer.
            let mut i = cells;
            loop {
                if i == 0 {
                    return sorted(out);
                }
                i -= 1;
                assignment[i] += 1;
                if assignment[i] < alphabet.len() {
                    break;
                }
                assignment[i] = 0;
            }
        }
    }

    fn sorted(mut v: Vec<ShiftedTableau>) -> Vec<ShiftedTableau> {
        v.sort_by(|a, b| {
            let fa: Vec<Letter> = a.rows().iter().flatten().copied().collect();
            let fb: Vec<Letter> = b.rows().iter().flatten().copied().collect();
            fa.cmp(&fb)
        });
        v
    }

    #[test]
    fn standard_skew_counts() {
        let two = enumerate_standard_skew(&SkewShape::new(sp(&[3, 1]), sp(&[2])).unwrap());
        assert_eq!(two.len(), 2);
        let one = enumerate_standard_skew(&SkewShape::new(sp(&[2, 1]), sp(&[1])).unwrap());
        assert_eq!(one.len(), 1);
        let empty = enumerate_standard_skew(&SkewShape::new(sp(&[2, 1]), sp(&[2, 1])).unwrap());
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn canonical_standard_is_standard() {
        let t = ShiftedTableau::canonical_standard(&sp(&[4, 2, 1]));
        assert!(t.is_standard());
        assert_eq!(t.encode(), "1 2 3 4 / 5 6 / 7");
    }
}
