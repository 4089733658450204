//! Shifted and skew shifted diagrams. Cells are 1-indexed `(row, column)`
//! with row 1 on top; row `r` of a shifted diagram occupies columns
//! `r ..= lambda_r + r - 1`, so the main diagonal is exactly the cells `(r, r)`.

use crate::partition::StrictPartition;
use alloc::vec::Vec;
use core::fmt;

/// The shifted Young diagram of a strict partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftedShape {
    partition: StrictPartition,
}

/// `shifted_cells(lambda)`: the diagram with row `r` indented `r - 1`.
pub fn shifted_cells(partition: &StrictPartition) -> ShiftedShape {
    ShiftedShape { partition: partition.clone() }
}

impl ShiftedShape {
    pub fn new(partition: StrictPartition) -> Self {
        ShiftedShape { partition }
    }

    pub fn partition(&self) -> &StrictPartition {
        &self.partition
    }

    pub fn rows(&self) -> usize {
        self.partition.len()
    }

    pub fn cell_count(&self) -> u64 {
        self.partition.size()
    }

    /// Column range of row `r` (1-based), empty iff the row does not exist.
    pub fn row_cols(&self, r: usize) -> core::ops::RangeInclusive<usize> {
        let len = self.partition.part(r) as usize;
        if len == 0 {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        r..=(r + len - 1)
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= r && c <= r + (self.partition.part(r) as usize).wrapping_sub(1)
            && self.partition.part(r) > 0
    }

    pub fn is_diagonal(r: usize, c: usize) -> bool {
        r == c
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.cell_count() as usize);
        for r in 1..=self.rows() {
            for c in self.row_cols(r) {
                v.push((r, c));
            }
        }
        v
    }
}

/// A skew shifted shape `outer/inner`, with `inner` zero-padded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotContained;

impl fmt::Display for NotContained {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inner partition is not contained in the outer partition")
    }
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self, NotContained> {
        if !outer.contains(&inner) {
            return Err(NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn cell_count(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Cells of `outer` not in `inner`, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 1..=self.outer.len() {
            let lo = r + self.inner.part(r) as usize;
            let hi = r + self.outer.part(r) as usize - 1;
            for c in lo..=hi {
                v.push((r, c));
            }
        }
        v
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1
            && r <= self.outer.len()
            && c >= r + self.inner.part(r) as usize
            && c < r + self.outer.part(r) as usize
    }

    /// Rows with at least one cell.
    pub fn nonempty_rows(&self) -> usize {
        (1..=self.outer.len()).filter(|&r| self.outer.part(r) > self.inner.part(r)).count()
    }

    /// Columns holding more than one cell.
    pub fn multi_cell_columns(&self) -> usize {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for (_, c) in self.cells() {
            match counts.iter_mut().find(|(col, _)| *col == c) {
                Some((_, n)) => *n += 1,
                None => counts.push((c, 1)),
            }
        }
        counts.iter().filter(|(_, n)| *n > 1).count()
    }

    /// True iff the shape contains a 2x2 square of cells.
    pub fn has_2x2(&self) -> bool {
        for r in 1..self.outer.len() {
            for c in (r + 1)..(r + self.outer.part(r) as usize) {
                if self.contains(r, c)
                    && self.contains(r, c + 1)
                    && self.contains(r + 1, c)
                    && self.contains(r + 1, c + 1)
                {
                    return true;
                }
            }
        }
        false
    }

    /// A rim is a skew shifted shape with no 2x2 square of boxes.
    pub fn is_rim(&self) -> bool {
        !self.has_2x2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shifted_cells_examples() {
        let s = shifted_cells(&sp(&[3, 1]));
        assert_eq!(s.cells(), vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
        let s = shifted_cells(&sp(&[1]));
        assert_eq!(s.cells(), vec![(1, 1)]);
        // Row 2 of (6,3) occupies columns 2..=4.
        let s = shifted_cells(&sp(&[6, 3]));
        assert_eq!(s.row_cols(2), 2..=4);
    }

    #[test]
    fn cell_and_diagonal_counts() {
        for parts in [&[8u32, 7, 4][..], &[6, 3], &[1], &[]] {
            let p = sp(parts);
            let s = shifted_cells(&p);
            assert_eq!(s.cells().len() as u64, p.size());
            let diag = s.cells().iter().filter(|&&(r, c)| r == c).count();
            assert_eq!(diag, p.len());
        }
    }

    #[test]
    fn skew_cells_and_rim() {
        let sk = SkewShape::new(sp(&[3, 1]), sp(&[2])).unwrap();
        assert_eq!(sk.cells(), vec![(1, 3), (2, 2)]);
        assert!(sk.is_rim());
        assert_eq!(sk.nonempty_rows(), 2);
        assert_eq!(sk.multi_cell_columns(), 0);

        // (4,3)/(2,1) contains the square (1,3),(1,4),(2,3),(2,4).
        let sk = SkewShape::new(sp(&[4, 3]), sp(&[2, 1])).unwrap();
        assert!(sk.has_2x2());

        assert!(SkewShape::new(sp(&[2]), sp(&[2, 1])).is_err());

        let empty = SkewShape::new(sp(&[3, 1]), sp(&[3, 1])).unwrap();
        assert!(empty.cells().is_empty());
    }

    #[test]
    fn column_multiplicities() {
        // (3,2)/(1): cells (1,2),(1,3),(2,2),(2,3); columns 2 and 3 doubled.
        let sk = SkewShape::new(sp(&[3, 2]), sp(&[1])).unwrap();
        assert_eq!(sk.multi_cell_columns(), 2);
    }
}
