//! The shifted Littlewood-Richardson rule: Serrano-Pieri strips, the
//! constructed-tableau enumerator, coefficient and product queries, the Pieri
//! fast path, Q/Lagrangian scalings, and shifted standard-tableau counting.
//!
//! A tableau of shape `lambda` constructed from `mu < nu` is built strip by
//! strip, innermost interval first. For the strip of `(mu_k, nu_k]` a split
//! `m` is chosen; the values `mu_k+1 ..= m` enter as unprimed letters forming
//! a vertical strip (possibly displacing primed letters of earlier strips one
//! step east or south), and the values `m+1 ..= nu_k` enter as primed letters
//! forming a horizontal strip in fresh cells. Every intermediate state must
//! stay a valid partial shifted tableau inside `D_lambda`, and each placement
//! is vetted against the previous strip so that no strip extends another.

use crate::letter::Letter;
use crate::partition::{strict_partitions_of, StrictPartition};
use crate::shape::SkewShape;
use crate::tableau::ShiftedTableau;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;

/// The intervals `(mu_k, nu_k]` for `k = 1 ..= len(nu)` (k = 1 outermost),
/// with `mu` zero-padded. Empty intervals are kept but skipped by consumers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSystem {
    bounds: Vec<(u32, u32)>,
}

/// Signals a structurally-zero coefficient: `mu` is not contained in `nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroByContainment;

impl fmt::Display for ZeroByContainment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu is not contained in nu, so the coefficient is zero")
    }
}

pub fn interval_system(mu: &StrictPartition, nu: &StrictPartition) -> Result<IntervalSystem, ZeroByContainment> {
    if !nu.contains(mu) {
        return Err(ZeroByContainment);
    }
    let bounds = (1..=nu.len()).map(|k| (mu.part(k), nu.part(k))).collect();
    Ok(IntervalSystem { bounds })
}

impl IntervalSystem {
    /// `(mu_k, nu_k)` for 1-based `k`.
    pub fn bounds(&self, k: usize) -> (u32, u32) {
        self.bounds[k - 1]
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// Indices of nonempty intervals in placement order (innermost first).
    pub fn placement_order(&self) -> Vec<usize> {
        (1..=self.len()).rev().filter(|&k| self.bounds[k - 1].0 < self.bounds[k - 1].1).collect()
    }

    /// Total number of letters, which must equal `|lambda|`.
    pub fn letter_count(&self) -> u64 {
        self.bounds.iter().map(|&(lo, hi)| (hi - lo) as u64).sum()
    }

    /// Content vector of the union of intervals.
    pub fn content(&self) -> crate::word::ContentVector {
        let max = self.bounds.iter().map(|&(_, hi)| hi).max().unwrap_or(0);
        let mut counts = alloc::vec![0u32; max as usize];
        for &(lo, hi) in &self.bounds {
            for v in lo + 1..=hi {
                counts[v as usize - 1] += 1;
            }
        }
        crate::word::ContentVector::new(counts)
    }
}

/// One Serrano-Pieri strip of a labeled tableau: the unprimed vertical part
/// holds `(mu_k, split]`, the primed horizontal part `(split, nu_k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerranoPieriStrip {
    pub label: u32,
    pub split: u32,
    /// 1-based cells with their values, ascending by value.
    pub unprimed_cells: Vec<((usize, usize), u32)>,
    pub primed_cells: Vec<((usize, usize), u32)>,
}

/// A shifted tableau in which every cell carries the index `k` of the
/// interval `(mu_k, nu_k]` it was placed from (`k = 1` outermost).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledTableau {
    tableau: ShiftedTableau,
    labels: Vec<Vec<u32>>,
}

impl LabeledTableau {
    pub fn tableau(&self) -> &ShiftedTableau {
        &self.tableau
    }

    pub fn labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    pub fn label(&self, r: usize, c: usize) -> Option<u32> {
        self.labels.get(r - 1).and_then(|row| if c >= r { row.get(c - r).copied() } else { None })
    }

    /// Group the cells by label into Serrano-Pieri strips.
    pub fn strips(&self) -> Vec<SerranoPieriStrip> {
        let mut labels: Vec<u32> = self.labels.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let mut strips = Vec::new();
        for k in labels {
            let mut unprimed = Vec::new();
            let mut primed = Vec::new();
            for (i, row) in self.tableau.rows().iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if self.labels[i][j] == k {
                        let cell = (i + 1, i + 1 + j);
                        if x.is_primed() {
                            primed.push((cell, x.value()));
                        } else {
                            unprimed.push((cell, x.value()));
                        }
                    }
                }
            }
            unprimed.sort_by_key(|&(_, v)| v);
            primed.sort_by_key(|&(_, v)| v);
            let split = unprimed.last().map(|&(_, v)| v).unwrap_or_else(|| {
                primed.first().map(|&(_, v)| v - 1).unwrap_or(0)
            });
            strips.push(SerranoPieriStrip { label: k, split, unprimed_cells: unprimed, primed_cells: primed });
        }
        strips
    }

    /// Labeled text form: each entry as `value[k]` (with the prime inside),
    /// rows joined by " / ".
    pub fn encode_labeled(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (i, row) in self.tableau.rows().iter().enumerate() {
            if i > 0 {
                out.push_str(" / ");
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}[{}]", x, self.labels[i][j]);
            }
        }
        out
    }

    pub fn decode_labeled(text: &str) -> Result<Self, String> {
        let text = text.trim();
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        if !text.is_empty() && text != "-" {
            for row_text in text.split('/') {
                let mut row = Vec::new();
                let mut label_row = Vec::new();
                for token in row_text.split_whitespace() {
                    let open = token.find('[').ok_or_else(|| alloc::format!("missing label in {:?}", token))?;
                    let close = token.find(']').ok_or_else(|| alloc::format!("missing ] in {:?}", token))?;
                    let letter = Letter::parse(&token[..open], 0).map_err(|e| alloc::format!("{}", e))?;
                    let label: u32 =
                        token[open + 1..close].parse().map_err(|_| alloc::format!("bad label in {:?}", token))?;
                    row.push(letter);
                    label_row.push(label);
                }
                rows.push(row);
                labels.push(label_row);
            }
        }
        let tableau = ShiftedTableau::new(rows).map_err(|v| alloc::format!("invalid tableau: {:?}", v))?;
        Ok(LabeledTableau { tableau, labels })
    }
}

impl fmt::Debug for LabeledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.encode_labeled())
    }
}

/// Search statistics of one enumeration run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Search-tree nodes entered (split choices and letter placements).
    pub nodes: u64,
    /// States with no viable continuation.
    pub terminals: u64,
    /// Completed tableaux before deduplication.
    pub completed: u64,
}

pub struct EnumerationOutcome {
    pub tableaux: Vec<LabeledTableau>,
    pub stats: EnumStats,
}

/// All tableaux of shape `lambda` constructed from `mu < nu`, each exactly
/// once, ordered by split vector then placement choices. Infeasible inputs
/// yield an empty stream.
pub fn enumerate_constructed(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Vec<LabeledTableau> {
    enumerate_constructed_with_stats(lambda, mu, nu).tableaux
}

pub fn enumerate_constructed_with_stats(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> EnumerationOutcome {
    let mut outcome = EnumerationOutcome { tableaux: Vec::new(), stats: EnumStats::default() };
    if lambda.size() + mu.size() != nu.size() {
        return outcome;
    }
    let Ok(system) = interval_system(mu, nu) else { return outcome };
    debug_assert_eq!(system.letter_count(), lambda.size());
    let mut search = Search {
        lambda,
        system: &system,
        order: system.placement_order(),
        stats: EnumStats::default(),
        seen: BTreeSet::new(),
        out: Vec::new(),
    };
    search.place_strip(&Grid::default(), 0, None);
    outcome.stats = search.stats;
    outcome.tableaux = search.out;
    outcome
}

/// `b^nu_{lambda,mu}`: the number of tableaux of shape `lambda` constructed
/// from `mu < nu`. Zero when the sizes or containments fail.
pub fn coefficient(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(mu) || !nu.contains(lambda) {
        return 0;
    }
    enumerate_constructed(lambda, mu, nu).len() as u64
}

/// Expansion of `P_lambda P_mu`: every strict `nu` of size `|lambda|+|mu|`
/// with a nonzero coefficient, lexicographically descending.
pub fn expand_product(lambda: &StrictPartition, mu: &StrictPartition) -> Vec<(StrictPartition, u64)> {
    let total = (lambda.size() + mu.size()) as u32;
    strict_partitions_of(total)
        .into_iter()
        .filter_map(|nu| {
            let b = coefficient(lambda, mu, &nu);
            (b > 0).then_some((nu, b))
        })
        .collect()
}

/// Shifted Pieri rule: coefficients of `P_(p) P_mu`. For each strict
/// `nu ⊇ mu` with `|nu| = |mu| + p` the coefficient is `2^(R - c - 1)` when
/// `nu/mu` is a rim (no 2x2 square), where `R` counts nonempty rows of
/// `nu/mu` and `c` counts its columns with more than one cell; otherwise 0.
pub fn pieri(p: u32, mu: &StrictPartition) -> Vec<(StrictPartition, u64)> {
    let total = mu.size() as u32 + p;
    strict_partitions_of(total)
        .into_iter()
        .filter_map(|nu| {
            let b = pieri_coefficient(p, mu, &nu);
            (b > 0).then_some((nu, b))
        })
        .collect()
}

pub fn pieri_coefficient(p: u32, mu: &StrictPartition, nu: &StrictPartition) -> u64 {
    if nu.size() != mu.size() + p as u64 || !nu.contains(mu) {
        return 0;
    }
    let skew = SkewShape::new(nu.clone(), mu.clone()).expect("containment checked");
    if !skew.is_rim() {
        return 0;
    }
    let rows = skew.nonempty_rows() as u32;
    let cols = skew.multi_cell_columns() as u32;
    debug_assert!(rows >= cols + 1);
    1u64 << (rows - cols - 1)
}

/// Scale `b` to the Q-Schur structure constant `2^(l(lambda)+l(mu)-l(nu)) b`.
pub fn scale_to_q(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition, b: u64) -> u64 {
    if b == 0 {
        return 0;
    }
    let exponent = lambda.len() as i64 + mu.len() as i64 - nu.len() as i64;
    assert!(exponent >= 0, "a nonzero coefficient needs l(lambda)+l(mu) >= l(nu)");
    b << exponent
}

/// The Lagrangian Grassmannian structure constant; same 2-power scaling.
pub fn scale_to_lagrangian(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition, b: u64) -> u64 {
    scale_to_q(lambda, mu, nu, b)
}

/// `|shSYT(lambda)|` by the closed product form
/// `|lambda|! * prod_{i<j} (l_i - l_j)/(l_i + l_j) / prod_i l_i!`.
pub fn count_standard_shifted(lambda: &StrictPartition) -> BigUint {
    let parts = lambda.parts();
    let mut numerator = factorial(lambda.size());
    let mut denominator = BigUint::from(1u32);
    for &part in parts {
        denominator *= factorial(part as u64);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            numerator *= BigUint::from((parts[i] - parts[j]) as u64);
            denominator *= BigUint::from((parts[i] + parts[j]) as u64);
        }
    }
    debug_assert!((&numerator % &denominator) == BigUint::from(0u32));
    numerator / denominator
}

fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::from(1u32);
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

/// Instrumentation for one benchmark triple: the constructed-rule search
/// counters, the rectification oracle's explored-filling count, and the
/// hook-formula context bound `|shSYT(lambda)| * 2^(|lambda|-1)`.
#[derive(Clone, Debug)]
pub struct BenchCounters {
    pub coefficient: u64,
    pub stats: EnumStats,
    /// Standard skew fillings the rectification oracle walked; `None` when
    /// the leg was skipped.
    pub oracle_fillings: Option<u64>,
    /// The oracle's own coefficient; `None` if skipped or capped.
    pub oracle_coefficient: Option<u64>,
    /// True when the oracle leg was capped before finishing.
    pub oracle_capped: bool,
    pub hook_bound: BigUint,
}

/// Run both legs on one triple. `oracle_cap` bounds the number of fillings
/// the rectification leg may explore (`Some(0)` skips it entirely).
pub fn bench_counters(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    oracle_cap: Option<u64>,
) -> BenchCounters {
    let outcome = enumerate_constructed_with_stats(lambda, mu, nu);
    let coefficient = outcome.tableaux.len() as u64;
    let hook_bound = count_standard_shifted(lambda)
        * BigUint::from(2u32).pow(lambda.size().saturating_sub(1) as u32);
    let (oracle_fillings, oracle_coefficient, oracle_capped) = if oracle_cap == Some(0) {
        (None, None, false)
    } else {
        let target = ShiftedTableau::canonical_standard(lambda);
        let (matches, explored, complete) =
            crate::oracles::rectification_scan(&target, mu, nu, oracle_cap);
        (Some(explored), complete.then_some(matches), !complete)
    };
    BenchCounters {
        coefficient,
        stats: outcome.stats,
        oracle_fillings,
        oracle_coefficient,
        oracle_capped,
        hook_bound,
    }
}

/// The staircase benchmark family: `lambda = (k, k-1, ..., 1)`,
/// `mu = (s, s-1, ..., 1)` with `s = |lambda|`, and `nu = mu + (1, ..., 1)`.
pub fn staircase_shift_family(k: u32) -> (StrictPartition, StrictPartition, StrictPartition) {
    let staircase = |top: u32| StrictPartition::new((1..=top).rev().collect()).expect("staircase is strict");
    let lambda = staircase(k);
    let s = lambda.size() as u32;
    let mu = staircase(s);
    let nu = StrictPartition::new(mu.parts().iter().map(|&p| p + 1).collect()).expect("shifted staircase");
    (lambda, mu, nu)
}

// ---------------------------------------------------------------------------
// The strip-by-strip search.

/// Partial labeled grid, 0-based: row `i` starts at column `i`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
struct Grid {
    rows: Vec<Vec<(Letter, u32)>>,
}

impl Grid {
    fn len(&self, r: usize) -> usize {
        self.rows.get(r).map_or(0, |row| row.len())
    }

    fn get(&self, r: usize, c: usize) -> Option<(Letter, u32)> {
        self.rows.get(r).and_then(|row| if c >= r { row.get(c - r).copied() } else { None })
    }

    fn cell_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Locate the unique cell with this value and label; `(row, col)` 0-based.
    fn find(&self, value: u32, label: u32) -> Option<(usize, usize, Letter)> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &(x, l)) in row.iter().enumerate() {
                if l == label && x.value() == value {
                    return Some((i, i + j, x));
                }
            }
        }
        None
    }

    /// Valid partial shifted tableau properly contained in `D_lambda`: rows
    /// contiguous from the diagonal with strictly decreasing lengths bounded
    /// by `lambda`, all semistandard constraints on filled cells.
    fn is_valid_partial(&self, lambda: &StrictPartition) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return false;
            }
            if row.len() > lambda.part(i + 1) as usize {
                return false;
            }
            if i > 0 && self.rows[i - 1].len() <= row.len() {
                return false;
            }
            for (j, &(x, _)) in row.iter().enumerate() {
                if j == 0 && x.is_primed() {
                    return false; // diagonal
                }
                if j > 0 {
                    let (left, _) = row[j - 1];
                    if x < left || (x == left && x.is_primed()) {
                        return false;
                    }
                }
                if i > 0 {
                    if let Some(&(up, _)) = self.rows[i - 1].get(j + 1) {
                        if x < up || (x == up && !x.is_primed()) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

struct Search<'a> {
    lambda: &'a StrictPartition,
    system: &'a IntervalSystem,
    order: Vec<usize>,
    stats: EnumStats,
    seen: BTreeSet<(Vec<Vec<Letter>>, Vec<Vec<u32>>)>,
    out: Vec<LabeledTableau>,
}

impl<'a> Search<'a> {
    fn place_strip(&mut self, grid: &Grid, strip_pos: usize, prev_split: Option<u32>) {
        self.stats.nodes += 1;
        if strip_pos == self.order.len() {
            self.finish(grid);
            return;
        }
        let k = self.order[strip_pos];
        let (lo, hi) = self.system.bounds(k);
        let mut progressed = false;
        for m in lo..=hi {
            if prev_split.is_some_and(|p| m <= p) {
                continue;
            }
            progressed = true;
            self.place_value(grid, strip_pos, m, lo + 1);
        }
        if !progressed {
            self.stats.terminals += 1;
        }
    }

    fn place_value(&mut self, grid: &Grid, strip_pos: usize, m: u32, v: u32) {
        self.stats.nodes += 1;
        let k = self.order[strip_pos];
        let (lo, hi) = self.system.bounds(k);
        if v > hi {
            self.place_strip(grid, strip_pos + 1, Some(m));
            return;
        }
        let candidates = if v > m {
            self.primed_candidates(grid, k, m, v)
        } else {
            self.unprimed_candidates(grid, k, lo, v)
        };
        if candidates.is_empty() {
            self.stats.terminals += 1;
            return;
        }
        for g in candidates {
            self.place_value(&g, strip_pos, m, v + 1);
        }
    }

    fn finish(&mut self, grid: &Grid) {
        // Every letter placed; the shape must be exactly D_lambda.
        if grid.cell_count() as u64 != self.lambda.size() {
            self.stats.terminals += 1;
            return;
        }
        self.stats.completed += 1;
        let rows: Vec<Vec<Letter>> = grid.rows.iter().map(|r| r.iter().map(|&(x, _)| x).collect()).collect();
        let labels: Vec<Vec<u32>> = grid.rows.iter().map(|r| r.iter().map(|&(_, l)| l).collect()).collect();
        let key = (rows.clone(), labels.clone());
        if self.seen.contains(&key) {
            return;
        }
        let tableau = match ShiftedTableau::new(rows) {
            Ok(t) => t,
            Err(_) => return,
        };
        let labeled = LabeledTableau { tableau, labels };
        if !is_constructible(&labeled, self.system) {
            return;
        }
        self.seen.insert(key);
        self.out.push(labeled);
    }

    /// The reference entry `(v-1)_{k+1}` of the adjacent inner strip, if that
    /// interval holds the value.
    fn inner_neighbor(&self, grid: &Grid, k: usize, v: u32) -> Option<(usize, usize, Letter)> {
        if v == 0 || k + 1 > self.system.len() {
            return None;
        }
        let (lo, hi) = self.system.bounds(k + 1);
        if v - 1 <= lo || v - 1 > hi {
            return None;
        }
        let found = grid.find(v - 1, k as u32 + 1);
        debug_assert!(found.is_some(), "inner strip letters are placed before outer ones");
        found
    }

    fn unprimed_candidates(&mut self, grid: &Grid, k: usize, lo: u32, v: u32) -> Vec<Grid> {
        let letter = Letter::unprimed(v);
        // Row of the previous unprimed letter of this strip, in the current
        // grid (displacements move cells, so look it up fresh).
        let min_row = if v > lo + 1 {
            match grid.find(v - 1, k as u32) {
                Some((r, _, _)) => r + 1,
                None => return Vec::new(),
            }
        } else {
            0
        };
        let mut results: Vec<((usize, usize, u8), Grid)> = Vec::new();
        let rows_used = grid.rows.len();
        // Fresh cells at each row frontier.
        for r in min_row..=rows_used {
            let c = r + grid.len(r);
            let mut g = grid.clone();
            if r == g.rows.len() {
                g.rows.push(Vec::new());
            }
            g.rows[r].push((letter, k as u32));
            self.consider(&mut results, g, (r, c, 0), k, v, r, c);
        }
        // Displacements at primed-occupied cells.
        for r in min_row..rows_used {
            for j in 0..grid.rows[r].len() {
                let (x, _) = grid.rows[r][j];
                if !x.is_primed() {
                    continue;
                }
                let c = r + j;
                // Row mode: shift the suffix of row r one column east.
                let mut g = grid.clone();
                g.rows[r].insert(j, (letter, k as u32));
                self.consider(&mut results, g, (r, c, 1), k, v, r, c);
                // Column mode: shift the suffix of column c one row south.
                if let Some(g) = shift_column_south(grid, r, c, letter, k as u32) {
                    self.consider(&mut results, g, (r, c, 2), k, v, r, c);
                }
            }
        }
        results.sort_by(|a, b| a.0.cmp(&b.0));
        results.into_iter().map(|(_, g)| g).collect()
    }

    /// Validate one unprimed candidate and push it if it survives.
    fn consider(
        &mut self,
        results: &mut Vec<((usize, usize, u8), Grid)>,
        g: Grid,
        key: (usize, usize, u8),
        k: usize,
        v: u32,
        r: usize,
        c: usize,
    ) {
        if !g.is_valid_partial(self.lambda) {
            return;
        }
        // Interval precedence in the row: unprimed letters of earlier strips
        // (larger label) must lie strictly west of the new cell.
        for j in (c - r)..g.rows[r].len() {
            let (x, l) = g.rows[r][j];
            if !x.is_primed() && l > k as u32 && r + j > c {
                return;
            }
            let _ = x;
        }
        // Placement conditions against (v-1) of the adjacent inner strip.
        if let Some((ir, _ic, il)) = self.inner_neighbor(&g, k, v) {
            if !il.is_primed() {
                let ok_north = r <= ir;
                let ok_staircase = r + 1 == v as usize && ir + 1 == v as usize - 1;
                if !ok_north && !ok_staircase {
                    return;
                }
            }
        }
        results.push((key, g));
    }

    fn primed_candidates(&mut self, grid: &Grid, k: usize, m: u32, v: u32) -> Vec<Grid> {
        let letter = Letter::primed(v);
        // Column of the previous primed letter of this strip.
        let min_col = if v > m + 1 {
            match grid.find(v - 1, k as u32) {
                Some((_, c, x)) => {
                    debug_assert!(x.is_primed());
                    c + 1
                }
                None => return Vec::new(),
            }
        } else {
            0
        };
        // Weakly west of (v-1)' in the adjacent inner strip.
        let max_col = match self.inner_neighbor(grid, k, v) {
            Some((_, ic, il)) => {
                debug_assert!(il.is_primed(), "split ordering keeps inner splits below outer ones");
                ic
            }
            None => usize::MAX,
        };
        let mut results = Vec::new();
        for r in 0..=grid.rows.len() {
            let c = r + grid.len(r);
            if c < min_col || c > max_col {
                continue;
            }
            let mut g = grid.clone();
            if r == g.rows.len() {
                g.rows.push(Vec::new());
            }
            g.rows[r].push((letter, k as u32));
            if g.is_valid_partial(self.lambda) {
                results.push(((r, c), g));
            }
        }
        results.sort_by(|a, b| a.0.cmp(&b.0));
        results.into_iter().map(|(_, g)| g).collect()
    }
}

/// Shift the occupied suffix of column `c` starting at row `r0` one row
/// south; the vacated cell receives the new letter. Returns `None` when the
/// bottom entry cannot land on a row frontier.
fn shift_column_south(grid: &Grid, r0: usize, c: usize, letter: Letter, label: u32) -> Option<Grid> {
    let mut r1 = r0;
    while grid.get(r1 + 1, c).is_some() {
        r1 += 1;
    }
    // The displaced bottom entry must land exactly on the frontier of the
    // next row (or open a new diagonal row).
    let target_row = r1 + 1;
    if target_row > grid.rows.len() || c < target_row {
        return None;
    }
    if c != target_row + grid.len(target_row) {
        return None;
    }
    let mut g = grid.clone();
    if target_row == g.rows.len() {
        g.rows.push(Vec::new());
    }
    let bottom = g.rows[r1][c - r1];
    g.rows[target_row].push(bottom);
    let mut r = r1;
    while r > r0 {
        g.rows[r][c - r] = g.rows[r - 1][c - (r - 1)];
        r -= 1;
    }
    g.rows[r0][c - r0] = (letter, label);
    Some(g)
}

/// Full structural check of a finished labeled tableau: each strip is a
/// Serrano-Pieri strip filled from its interval, and strips respect the
/// row/column precedence of constructible tableaux.
fn is_constructible(labeled: &LabeledTableau, system: &IntervalSystem) -> bool {
    let strips = labeled.strips();
    for strip in &strips {
        let k = strip.label as usize;
        if k < 1 || k > system.len() {
            return false;
        }
        let (lo, hi) = system.bounds(k);
        let mut expected = lo + 1;
        for &(_, v) in &strip.unprimed_cells {
            if v != expected {
                return false;
            }
            expected += 1;
        }
        for &(_, v) in &strip.primed_cells {
            if v != expected {
                return false;
            }
            expected += 1;
        }
        if expected != hi + 1 {
            return false;
        }
        // Vertical strip: strictly descending rows with ascending values.
        for pair in strip.unprimed_cells.windows(2) {
            if pair[1].0 .0 <= pair[0].0 .0 {
                return false;
            }
        }
        // Horizontal strip: strictly eastward columns with ascending values.
        for pair in strip.primed_cells.windows(2) {
            if pair[1].0 .1 <= pair[0].0 .1 {
                return false;
            }
        }
    }
    // Row precedence: unprimed labels strictly decrease left to right.
    for (i, row) in labeled.tableau.rows().iter().enumerate() {
        let mut last: Option<u32> = None;
        for (j, &x) in row.iter().enumerate() {
            if x.is_primed() {
                continue;
            }
            let l = labeled.labels[i][j];
            if let Some(prev) = last {
                if l >= prev {
                    return false;
                }
            }
            last = Some(l);
        }
    }
    // Column precedence: primed labels strictly decrease top to bottom.
    let nrows = labeled.tableau.rows().len();
    let ncols = labeled.tableau.rows().first().map_or(0, |r| r.len());
    for c in 0..ncols {
        let mut last: Option<u32> = None;
        for i in 0..nrows {
            let r1 = i + 1;
            let c1 = c + 1;
            if c1 < r1 {
                continue;
            }
            let Some(x) = labeled.tableau.entry(r1, c1) else { continue };
            if !x.is_primed() {
                continue;
            }
            let l = labeled.label(r1, c1).unwrap();
            if let Some(prev) = last {
                if l >= prev {
                    return false;
                }
            }
            last = Some(l);
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
    fn interval_system_examples() {
        let sys = interval_system(&sp(&[4, 2]), &sp(&[11, 9, 5])).unwrap();
        assert_eq!(sys.bounds(1), (4, 11));
        assert_eq!(sys.bounds(2), (2, 9));
        assert_eq!(sys.bounds(3), (0, 5));
        assert_eq!(sys.placement_order(), vec![3, 2, 1]);

        let sys = interval_system(&StrictPartition::empty(), &sp(&[2, 1])).unwrap();
        assert_eq!(sys.bounds(1), (0, 2));
        assert_eq!(sys.bounds(2), (0, 1));

        // Second interval (1,1] is empty and skipped.
        let sys = interval_system(&sp(&[2, 1]), &sp(&[3, 1])).unwrap();
        assert_eq!(sys.bounds(2), (1, 1));
        assert_eq!(sys.placement_order(), vec![1]);

        assert!(interval_system(&sp(&[3]), &sp(&[2, 1])).is_err());
    }

    #[test]
    fn coefficient_identities() {
        // b^lambda_{lambda, empty} = 1 with the single tableau.
        for parts in [&[3u32, 1][..], &[4, 2], &[2], &[3, 2, 1]] {
            let lambda = sp(parts);
            let ts = enumerate_constructed(&lambda, &StrictPartition::empty(), &lambda);
            assert_eq!(ts.len(), 1, "lambda={:?}", lambda);
            assert_eq!(
                coefficient(&StrictPartition::empty(), &lambda, &lambda),
                1,
                "empty lambda side"
            );
        }
        assert_eq!(coefficient(&sp(&[1]), &sp(&[1]), &sp(&[2])), 1);
        assert_eq!(coefficient(&sp(&[1]), &sp(&[2, 1]), &sp(&[3, 1])), 1);
        // Size mismatch and containment failures are structural zeros.
        assert_eq!(coefficient(&sp(&[2]), &sp(&[1]), &sp(&[2])), 0);
        assert_eq!(coefficient(&sp(&[2, 1]), &sp(&[3]), &sp(&[6])), 0);
        // Agreement with the Pieri rule on a 2-power instance.
        assert_eq!(coefficient(&sp(&[3]), &sp(&[3]), &sp(&[4, 2])), 2);
    }

    #[test]
    fn unique_completion_is_barely_yamanouchi_tableau() {
        // The single tableau constructed from empty < nu matches Y_nu up to labels.
        for parts in [&[4u32, 2][..], &[3, 1], &[6, 3]] {
            let nu = sp(parts);
            let ts = enumerate_constructed(&nu, &StrictPartition::empty(), &nu);
            assert_eq!(ts.len(), 1);
            assert_eq!(ts[0].tableau(), &crate::analysis::barely_yamanouchi_tableau(&nu));
        }
    }

    #[test]
    fn golden_example_coefficient_is_three() {
        let lambda = sp(&[8, 7, 4]);
        let mu = sp(&[4, 2]);
        let nu = sp(&[11, 9, 5]);
        let ts = enumerate_constructed(&lambda, &mu, &nu);
        assert_eq!(ts.len(), 3);
        assert_eq!(coefficient(&lambda, &mu, &nu), 3);
    }

    #[test]
    fn pieri_examples() {
        // p=1, mu=(3): both targets from the rim rule.
        let got = pieri(1, &sp(&[3]));
        assert_eq!(got, vec![(sp(&[4]), 1), (sp(&[3, 1]), 1)]);
        // (4,3)/(2,1) contains a 2x2 square.
        assert_eq!(pieri_coefficient(4, &sp(&[2, 1]), &sp(&[4, 3])), 0);
        // p=1, mu=(2,1): nu=(3,1) has a single cell, R=1.
        let got = pieri(1, &sp(&[2, 1]));
        assert_eq!(got, vec![(sp(&[3, 1]), 1), (sp(&[2, 1]), 0)].into_iter().filter(|&(_, b)| b > 0).collect::<Vec<_>>());
        // An exponent >= 1 instance: (3,1)/(2), two nonempty rows, no doubled column.
        assert_eq!(pieri_coefficient(2, &sp(&[2]), &sp(&[3, 1])), 2);
    }

    #[test]
    fn scaling_examples() {
        assert_eq!(scale_to_q(&sp(&[1]), &sp(&[1]), &sp(&[2]), 1), 2);
        assert_eq!(scale_to_lagrangian(&sp(&[3, 1]), &StrictPartition::empty(), &sp(&[3, 1]), 1), 1);
        assert_eq!(scale_to_q(&sp(&[8, 7, 4]), &sp(&[4, 2]), &sp(&[11, 9, 5]), 3), 12);
        assert_eq!(scale_to_q(&sp(&[2]), &sp(&[1]), &sp(&[2]), 0), 0);
    }

    #[test]
    fn standard_shifted_counts() {
        assert_eq!(count_standard_shifted(&sp(&[7])), BigUint::from(1u32));
        assert_eq!(count_standard_shifted(&sp(&[2, 1])), BigUint::from(1u32));
        assert_eq!(count_standard_shifted(&sp(&[3, 1])), BigUint::from(2u32));
        assert_eq!(count_standard_shifted(&sp(&[3, 2])), BigUint::from(2u32));
        assert_eq!(count_standard_shifted(&StrictPartition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn labeled_codec_round_trip() {
        let ts = enumerate_constructed(&sp(&[8, 7, 4]), &sp(&[4, 2]), &sp(&[11, 9, 5]));
        for t in &ts {
            let text = t.encode_labeled();
            let back = LabeledTableau::decode_labeled(&text).unwrap();
            assert_eq!(&back, t);
        }
    }
}
