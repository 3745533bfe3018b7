//! Fillings of a `k × n` rectangle, patterns, and the consecutive-match
//! predicates.
//!
//! Cells are addressed as `(i, j)` with `i` the row counted from the bottom
//! (`1..=k`) and `j` the column counted from the left (`1..=n`). Storage is
//! column-major, so a column is a contiguous slice read bottom to top.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::combinatorics::BitIter;
use crate::{Error, Result};

/// A rectangular array of distinct positive integers whose columns strictly
/// increase from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl Filling {
    /// Builds a filling from its columns, each listed bottom to top.
    pub fn from_columns<C: AsRef<[u32]>>(columns: &[C]) -> Result<Self> {
        let cols = columns.len();
        if cols == 0 {
            return Err(Error::InvalidFilling("no columns".into()));
        }
        let rows = columns[0].as_ref().len();
        let mut cells = Vec::with_capacity(rows * cols);
        for (j, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            if c.len() != rows {
                return Err(Error::InvalidFilling(format!(
                    "column {} has {} cells, expected {}",
                    j + 1,
                    c.len(),
                    rows
                )));
            }
            cells.extend_from_slice(c);
        }
        Self::from_column_major(rows, cols, cells)
    }

    /// Builds a filling from rows listed bottom row first, each read left to
    /// right.
    pub fn from_rows<R: AsRef<[u32]>>(rows_bottom_up: &[R]) -> Result<Self> {
        let rows = rows_bottom_up.len();
        if rows == 0 {
            return Err(Error::InvalidFilling("no rows".into()));
        }
        let cols = rows_bottom_up[0].as_ref().len();
        if rows_bottom_up.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::InvalidFilling("ragged rows".into()));
        }
        let mut cells = Vec::with_capacity(rows * cols);
        for j in 0..cols {
            for r in rows_bottom_up {
                cells.push(r.as_ref()[j]);
            }
        }
        Self::from_column_major(rows, cols, cells)
    }

    pub fn from_column_major(rows: usize, cols: usize, cells: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidFilling("empty shape".into()));
        }
        if cells.len() != rows * cols {
            return Err(Error::InvalidFilling(format!(
                "{} cells for a {}x{} shape",
                cells.len(),
                rows,
                cols
            )));
        }
        if cells.contains(&0) {
            return Err(Error::InvalidFilling("entries must be positive".into()));
        }
        let mut seen = HashSet::with_capacity(cells.len());
        if let Some(dup) = cells.iter().find(|v| !seen.insert(**v)) {
            return Err(Error::InvalidFilling(format!("duplicate value {dup}")));
        }
        for (j, col) in cells.chunks(rows).enumerate() {
            if let Some(i) = col.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Error::InvalidFilling(format!(
                    "column {} not increasing at row {}",
                    j + 1,
                    i + 1
                )));
            }
        }
        Ok(Filling { rows, cols, cells })
    }

    /// Skips validation; callers guarantee the column invariant.
    pub(crate) fn from_column_major_unchecked(rows: usize, cols: usize, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), rows * cols);
        Filling { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry in row `i` (from the bottom) and column `j` (from the left),
    /// both 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.cells[(j - 1) * self.rows + (i - 1)]
    }

    /// Column `j` (1-based), bottom to top.
    pub fn column(&self, j: usize) -> &[u32] {
        assert!((1..=self.cols).contains(&j));
        &self.cells[(j - 1) * self.rows..j * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[u32]> {
        self.cells.chunks(self.rows)
    }

    /// Row `i` (1-based from the bottom), left to right.
    pub fn row(&self, i: usize) -> Vec<u32> {
        (1..=self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn column_major(&self) -> &[u32] {
        &self.cells
    }

    /// True when the entries are exactly `1..=rows*cols`.
    pub fn is_ground(&self) -> bool {
        let n = self.cells.len() as u32;
        self.cells.iter().all(|&v| v <= n)
    }

    /// True when rows also increase left to right.
    pub fn is_standard(&self) -> bool {
        (1..=self.rows).all(|i| self.row(i).windows(2).all(|w| w[0] < w[1]))
    }

    /// Replaces the `r`-th smallest entry by `r`.
    pub fn reduce(&self) -> Filling {
        let mut sorted = self.cells.clone();
        sorted.sort_unstable();
        let cells = self
            .cells
            .iter()
            .map(|v| sorted.binary_search(v).expect("value present") as u32 + 1)
            .collect();
        Filling::from_column_major_unchecked(self.rows, self.cols, cells)
    }

    /// The sub-filling made of columns `c₁ < c₂ < …` (1-based), not reduced.
    pub fn select_columns(&self, selection: &[usize]) -> Result<Filling> {
        if selection.is_empty() {
            return Err(Error::OutOfRange("empty column selection".into()));
        }
        if selection.iter().any(|&c| c == 0 || c > self.cols) {
            return Err(Error::OutOfRange(format!(
                "selection {selection:?} outside 1..={}",
                self.cols
            )));
        }
        if selection.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(format!(
                "selection {selection:?} is not strictly increasing"
            )));
        }
        let mut cells = Vec::with_capacity(selection.len() * self.rows);
        for &c in selection {
            cells.extend_from_slice(self.column(c));
        }
        Ok(Filling::from_column_major_unchecked(
            self.rows,
            selection.len(),
            cells,
        ))
    }

    /// `F^gc(i, j) = kn + 1 − F(k + 1 − i, n + 1 − j)`.
    pub fn generalized_complement(&self) -> Result<Filling> {
        if !self.is_ground() {
            return Err(Error::InvalidFilling(
                "generalized complement needs a ground filling".into(),
            ));
        }
        let total = (self.rows * self.cols) as u32;
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 1..=self.cols {
            for i in 1..=self.rows {
                cells.push(total + 1 - self.get(self.rows + 1 - i, self.cols + 1 - j));
            }
        }
        Ok(Filling::from_column_major_unchecked(
            self.rows, self.cols, cells,
        ))
    }

    /// Whether `pattern` occurs in `self` on some increasing column selection.
    pub fn occurs(&self, pattern: &Pattern) -> Result<bool> {
        let p = pattern.as_filling();
        if p.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "pattern has {} rows, filling has {}",
                p.rows, self.rows
            )));
        }
        if p.cols > self.cols {
            return Ok(false);
        }
        use itertools::Itertools;
        for sel in (1..=self.cols).combinations(p.cols) {
            if &self.select_columns(&sel)?.reduce() == p {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn avoids(&self, pattern: &Pattern) -> Result<bool> {
        self.occurs(pattern).map(|o| !o)
    }

    /// Whether columns `i, …, i+j−1` reduce to a member of `set`.
    pub fn match_at(&self, set: &PatternSet, i: usize) -> Result<bool> {
        self.check_dims(set)?;
        let j = set.cols();
        if i == 0 || i + j - 1 > self.cols {
            return Err(Error::OutOfRange(format!(
                "start {i} invalid for {} columns and patterns of width {j}",
                self.cols
            )));
        }
        Ok(self.match_unchecked(set, i))
    }

    fn check_dims(&self, set: &PatternSet) -> Result<()> {
        if set.rows() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "patterns have {} rows, filling has {}",
                set.rows(),
                self.rows
            )));
        }
        Ok(())
    }

    fn match_unchecked(&self, set: &PatternSet, i: usize) -> bool {
        if set.cols() == 2 {
            set.contains_mask(two_column_mask(self.column(i), self.column(i + 1)))
        } else {
            let sel: Vec<usize> = (i..i + set.cols()).collect();
            let sub = self.select_columns(&sel).expect("range checked");
            set.contains(&sub.reduce())
        }
    }

    /// All match starts plus the derived counts.
    pub fn match_profile(&self, set: &PatternSet) -> Result<MatchProfile> {
        self.check_dims(set)?;
        let j = set.cols();
        let starts: Vec<usize> = if self.cols < j {
            Vec::new()
        } else {
            (1..=self.cols + 1 - j)
                .filter(|&i| self.match_unchecked(set, i))
                .collect()
        };
        Ok(MatchProfile::from_starts(starts, j))
    }

    /// Matches at every odd start in `1..n` and at no even one.
    pub fn is_alternating(&self, set: &PatternSet) -> Result<bool> {
        if set.cols() != 2 {
            return Err(Error::Unsupported(
                "alternation is defined for two-column patterns".into(),
            ));
        }
        let profile = self.match_profile(set)?;
        let odd: BTreeSet<usize> = (1..self.cols).filter(|i| i % 2 == 1).collect();
        Ok(profile.match_set == odd)
    }
}

/// Relative order of two sorted columns of equal height: bit `r` is set when
/// the `(r+1)`-th smallest of the combined entries lies in the first column.
pub fn two_column_mask(first: &[u32], second: &[u32]) -> u64 {
    let (mut a, mut b, mut r, mut mask) = (0, 0, 0, 0u64);
    while a < first.len() || b < second.len() {
        if b == second.len() || (a < first.len() && first[a] < second[b]) {
            mask |= 1 << r;
            a += 1;
        } else {
            b += 1;
        }
        r += 1;
    }
    mask
}

/// Same as [`two_column_mask`] with each column given as a bitmask of values.
#[inline]
pub fn two_column_mask_from_bits(first: u64, second: u64) -> u64 {
    let mut mask = 0;
    for (r, low) in BitIter(first | second).enumerate() {
        if first & low != 0 {
            mask |= 1 << r;
        }
    }
    mask
}

impl fmt::Display for Filling {
    /// Top row first, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (1..=self.rows).rev() {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A ground filling with at least two columns, used as a consecutive pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Filling);

impl Pattern {
    pub fn new(filling: Filling) -> Result<Self> {
        if !filling.is_ground() {
            return Err(Error::InvalidPattern(
                "pattern entries must be 1..=kj".into(),
            ));
        }
        if filling.cols() < 2 {
            return Err(Error::InvalidPattern(
                "pattern needs at least two columns".into(),
            ));
        }
        Ok(Pattern(filling))
    }

    pub fn from_columns<C: AsRef<[u32]>>(columns: &[C]) -> Result<Self> {
        Self::new(Filling::from_columns(columns)?)
    }

    pub fn as_filling(&self) -> &Filling {
        &self.0
    }

    pub fn into_filling(self) -> Filling {
        self.0
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn is_standard(&self) -> bool {
        self.0.is_standard()
    }

    /// Mask of a two-column pattern, see [`two_column_mask`].
    pub fn mask(&self) -> Option<u64> {
        (self.cols() == 2).then(|| two_column_mask(self.0.column(1), self.0.column(2)))
    }

    pub fn generalized_complement(&self) -> Pattern {
        Pattern(
            self.0
                .generalized_complement()
                .expect("patterns are ground"),
        )
    }

    /// The pattern with `1..=k` in the first column and `k+1..=2k` in the
    /// second.
    pub fn column_block(k: usize) -> Pattern {
        let k32 = k as u32;
        let first: Vec<u32> = (1..=k32).collect();
        let second: Vec<u32> = (k32 + 1..=2 * k32).collect();
        Pattern::from_columns(&[first, second]).expect("valid")
    }

    /// Rebuilds a two-column pattern with `k` rows from its mask.
    pub fn from_mask(k: usize, mask: u64) -> Result<Pattern> {
        if mask.count_ones() as usize != k || (k < 64 && mask >> (2 * k) != 0) {
            return Err(Error::InvalidPattern(format!(
                "mask {mask:#b} is not a {k}-subset"
            )));
        }
        let (mut first, mut second) = (Vec::with_capacity(k), Vec::with_capacity(k));
        for r in 0..2 * k {
            if mask >> r & 1 == 1 {
                first.push(r as u32 + 1);
            } else {
                second.push(r as u32 + 1);
            }
        }
        Pattern::from_columns(&[first, second])
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All standard tableaux with two columns and `k` rows, ordered
/// lexicographically by the first column read bottom to top.
pub fn standard_two_column(k: usize) -> Vec<Pattern> {
    struct Walk {
        k: usize,
        total: u32,
        cols: [Vec<u32>; 2],
        out: Vec<Pattern>,
    }
    impl Walk {
        fn step(&mut self, v: u32) {
            if v > self.total {
                let p = Pattern::from_columns(&self.cols).expect("standard");
                self.out.push(p);
                return;
            }
            let (a, b) = (self.cols[0].len(), self.cols[1].len());
            if a < self.k {
                self.cols[0].push(v);
                self.step(v + 1);
                self.cols[0].pop();
            }
            if b < a {
                self.cols[1].push(v);
                self.step(v + 1);
                self.cols[1].pop();
            }
        }
    }
    if k == 0 {
        return Vec::new();
    }
    let mut w = Walk {
        k,
        total: 2 * k as u32,
        cols: [Vec::new(), Vec::new()],
        out: Vec::new(),
    };
    w.step(1);
    w.out
}

#[derive(Clone, Debug)]
enum MaskLookup {
    Dense(Vec<bool>),
    Sparse(HashSet<u64>),
}

/// A nonempty set of patterns sharing the same shape.
#[derive(Clone, Debug)]
pub struct PatternSet {
    rows: usize,
    cols: usize,
    patterns: BTreeSet<Pattern>,
    masks: Option<MaskLookup>,
}

impl PatternSet {
    /// Rejects empty input, mixed shapes and duplicates.
    pub fn new(patterns: Vec<Pattern>) -> Result<Self> {
        let first = patterns
            .first()
            .ok_or_else(|| Error::InvalidPattern("empty pattern set".into()))?;
        let (rows, cols) = (first.rows(), first.cols());
        let mut set = BTreeSet::new();
        for p in patterns {
            if p.rows() != rows || p.cols() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "pattern shapes {}x{} and {}x{} differ",
                    rows,
                    cols,
                    p.rows(),
                    p.cols()
                )));
            }
            if !set.insert(p) {
                return Err(Error::InvalidPattern("duplicate pattern in set".into()));
            }
        }
        let masks = (cols == 2).then(|| {
            if 2 * rows <= 22 {
                let mut dense = vec![false; 1 << (2 * rows)];
                for p in &set {
                    dense[p.mask().expect("two columns") as usize] = true;
                }
                MaskLookup::Dense(dense)
            } else {
                MaskLookup::Sparse(set.iter().map(|p| p.mask().expect("two columns")).collect())
            }
        });
        Ok(PatternSet {
            rows,
            cols,
            patterns: set,
            masks,
        })
    }

    pub fn single(p: Pattern) -> Self {
        Self::new(vec![p]).expect("one pattern")
    }

    /// Every standard tableau with two columns and `k` rows.
    pub fn standard(k: usize) -> Self {
        Self::new(standard_two_column(k)).expect("k >= 1")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter()
    }

    pub fn contains(&self, reduced: &Filling) -> bool {
        self.patterns.iter().any(|p| p.as_filling() == reduced)
    }

    /// Membership by two-column mask; false for wider patterns.
    #[inline]
    pub fn contains_mask(&self, mask: u64) -> bool {
        match &self.masks {
            Some(MaskLookup::Dense(d)) => d.get(mask as usize).copied().unwrap_or(false),
            Some(MaskLookup::Sparse(s)) => s.contains(&mask),
            None => false,
        }
    }

    pub fn require_two_columns(&self) -> Result<()> {
        if self.cols != 2 {
            return Err(Error::Unsupported(format!(
                "operation needs two-column patterns, got width {}",
                self.cols
            )));
        }
        Ok(())
    }
}

impl PartialEq for PatternSet {
    fn eq(&self, other: &Self) -> bool {
        self.patterns == other.patterns
    }
}

impl Eq for PatternSet {}

/// Where and how often a pattern set matches a filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchProfile {
    pub match_set: BTreeSet<usize>,
    pub mch: usize,
    pub nlap: usize,
    pub even_mch: usize,
}

impl MatchProfile {
    /// Builds the profile from sorted match starts for patterns of width
    /// `width`; non-overlapping matches are taken greedily left to right.
    pub fn from_starts(starts: Vec<usize>, width: usize) -> Self {
        let mut nlap = 0;
        let mut next_free = 0;
        for &i in &starts {
            if i >= next_free {
                nlap += 1;
                next_free = i + width;
            }
        }
        let even_mch = starts.iter().filter(|&&i| i % 2 == 0).count();
        MatchProfile {
            mch: starts.len(),
            nlap,
            even_mch,
            match_set: starts.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(c: &[&[u32]]) -> Filling {
        Filling::from_columns(c).unwrap()
    }

    fn p1() -> Pattern {
        Pattern::from_columns(&[[1, 2], [3, 4]]).unwrap()
    }

    fn p2() -> Pattern {
        Pattern::from_columns(&[[1, 3], [2, 4]]).unwrap()
    }

    #[test]
    fn validation_rejects_bad_grids() {
        assert!(Filling::from_columns(&[[2, 1]]).is_err());
        assert!(Filling::from_columns(&[[1, 2], [2, 3]]).is_err());
        assert!(Filling::from_columns(&[vec![1, 2], vec![3]]).is_err());
        assert!(Filling::from_columns(&[[0, 1]]).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            cols(&[&[3, 9], &[1, 5]]).reduce(),
            cols(&[&[2, 4], &[1, 3]])
        );
        assert_eq!(
            cols(&[&[2, 4, 8], &[6, 10, 12]]).reduce(),
            cols(&[&[1, 2, 4], &[3, 5, 6]])
        );
        let g = cols(&[&[1, 3], &[2, 4]]);
        assert_eq!(g.reduce(), g);
    }

    #[test]
    fn select_columns_examples() {
        let f = cols(&[&[1, 6], &[2, 7], &[3, 8], &[4, 9], &[5, 10]]);
        assert_eq!(f.select_columns(&[1, 2, 3, 4, 5]).unwrap(), f);
        assert_eq!(f.select_columns(&[2]).unwrap(), cols(&[&[2, 7]]));
        assert!(f.select_columns(&[2, 2]).is_err());
        assert!(f.select_columns(&[3, 1]).is_err());
        assert!(f.select_columns(&[6]).is_err());
        assert!(f.select_columns(&[0]).is_err());
    }

    #[test]
    fn match_at_examples() {
        let y = PatternSet::single(p1());
        assert!(cols(&[&[1, 2], &[3, 4]]).match_at(&y, 1).unwrap());
        assert!(!cols(&[&[1, 3], &[2, 4]]).match_at(&y, 1).unwrap());
        assert!(cols(&[&[1, 3], &[2, 4]]).match_at(&y, 2).is_err());
        let y3 = PatternSet::single(Pattern::from_columns(&[[1, 2, 3], [4, 5, 6]]).unwrap());
        assert!(cols(&[&[1, 2], &[3, 4]]).match_at(&y3, 1).is_err());
    }

    #[test]
    fn permutation_profile() {
        let y = PatternSet::single(Pattern::from_columns(&[[1], [2]]).unwrap());
        let f = cols(&[&[1], &[2], &[3]]);
        let prof = f.match_profile(&y).unwrap();
        assert_eq!(prof.match_set, BTreeSet::from([1, 2]));
        assert_eq!((prof.mch, prof.nlap, prof.even_mch), (2, 1, 1));
        let none = cols(&[&[3], &[2], &[1]]).match_profile(&y).unwrap();
        assert_eq!((none.mch, none.nlap), (0, 0));
        assert!(none.match_set.is_empty());
    }

    #[test]
    fn alternating_examples() {
        let y = PatternSet::single(Pattern::from_columns(&[[1], [2]]).unwrap());
        assert!(cols(&[&[1], &[3], &[2]]).is_alternating(&y).unwrap());
        assert!(!cols(&[&[1], &[2], &[3]]).is_alternating(&y).unwrap());
        assert!(cols(&[&[4]]).is_alternating(&y).unwrap());
        let yy = PatternSet::single(p2());
        assert!(p2().as_filling().is_alternating(&yy).unwrap());
    }

    #[test]
    fn occurrence_without_match() {
        // columns 1,2 and 2,3 reduce to P2, but 1,3 reduces to P1
        let f = cols(&[&[1, 3], &[2, 5], &[4, 6]]);
        let y1 = PatternSet::single(p1());
        assert_eq!(f.match_profile(&y1).unwrap().mch, 0);
        assert!(f.occurs(&p1()).unwrap());
        assert!(p1().as_filling().occurs(&p1()).unwrap());
        assert!(!cols(&[&[1, 2]]).occurs(&p1()).unwrap());
    }

    #[test]
    fn generalized_complement_examples() {
        let f = cols(&[&[1, 3, 4], &[2, 5, 6]]);
        assert_eq!(
            f.generalized_complement().unwrap(),
            cols(&[&[1, 2, 5], &[3, 4, 6]])
        );
        let s = cols(&[&[1, 3, 5], &[2, 4, 6]]);
        assert_eq!(s.generalized_complement().unwrap(), s);
        assert!(cols(&[&[2, 3]]).generalized_complement().is_err());
    }

    #[test]
    fn standard_two_column_lists() {
        let st2 = standard_two_column(2);
        assert_eq!(st2, vec![p1(), p2()]);
        assert_eq!(standard_two_column(3).len(), 5);
        assert_eq!(standard_two_column(5).len(), 42);
        assert!(standard_two_column(4).iter().all(Pattern::is_standard));
    }

    #[test]
    fn masks_round_trip() {
        for p in standard_two_column(4) {
            assert_eq!(Pattern::from_mask(4, p.mask().unwrap()).unwrap(), p);
        }
        assert_eq!(two_column_mask_from_bits(0b0101, 0b1010), 0b0101);
        assert_eq!(two_column_mask(&[1, 3], &[2, 4]), 0b0101);
    }

    #[test]
    fn pattern_set_rules() {
        assert!(PatternSet::new(vec![]).is_err());
        assert!(PatternSet::new(vec![p1(), p1()]).is_err());
        let p3 = Pattern::from_columns(&[[1], [2]]).unwrap();
        assert!(PatternSet::new(vec![p1(), p3]).is_err());
        assert!(Pattern::from_columns(&[[1, 2]]).is_err());
        assert!(Pattern::from_columns(&[[1, 5], [2, 6]]).is_err());
    }
}
