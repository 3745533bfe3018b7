//! Consecutive-value graphs of two-column patterns, their superimposition over
//! a `k × n` rectangle, transitive pruning, and linear-extension counting.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, catalan, factorial, falling_factorial};
use crate::enumeration::{full_bruteforce, Budget};
use crate::filling::{standard_two_column, Pattern, PatternSet};
use crate::{Error, Result};

/// Largest vertex count supported by the bitmask representations.
pub const MAX_CELLS: usize = 128;

/// A cell `(i, j)`: row `i` from the bottom, column `j` from the left, both
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Directed acyclic graph on the cells of a `rows × cols` rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderDag {
    rows: usize,
    cols: usize,
    succ: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl OrderDag {
    /// Builds the graph from cell pairs, deduplicating edges and rejecting
    /// cycles.
    pub fn from_edges(rows: usize, cols: usize, edges: &[(Cell, Cell)]) -> Result<Self> {
        let size = rows * cols;
        if size > MAX_CELLS {
            return Err(Error::Unsupported(format!(
                "{size} cells exceed the {MAX_CELLS}-cell limit"
            )));
        }
        let mut succ = vec![Vec::new(); size];
        for &(a, b) in edges {
            for c in [a, b] {
                if c.row == 0 || c.row > rows || c.col == 0 || c.col > cols {
                    return Err(Error::OutOfRange(format!(
                        "cell ({}, {}) outside {rows}x{cols}",
                        c.row, c.col
                    )));
                }
            }
            succ[Self::index_in(rows, a)].push(Self::index_in(rows, b));
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        let topo = topological_order(&succ).ok_or(Error::Cyclic)?;
        Ok(OrderDag {
            rows,
            cols,
            succ,
            topo,
        })
    }

    fn index_in(rows: usize, c: Cell) -> usize {
        (c.col - 1) * rows + (c.row - 1)
    }

    pub fn index(&self, c: Cell) -> usize {
        Self::index_in(self.rows, c)
    }

    pub fn cell(&self, v: usize) -> Cell {
        Cell::new(v % self.rows + 1, v / self.rows + 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex_count(&self) -> usize {
        self.succ.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn out_degree(&self, c: Cell) -> usize {
        self.succ[self.index(c)].len()
    }

    pub fn has_edge(&self, a: Cell, b: Cell) -> bool {
        self.succ[self.index(a)].contains(&self.index(b))
    }

    /// Edges as cell pairs, sorted by source then target index.
    pub fn edges(&self) -> Vec<(Cell, Cell)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
            .map(|(u, v)| (self.cell(u), self.cell(v)))
            .collect()
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Strict reachability: bit `v` of entry `u` is set iff a nonempty path
    /// leads from `u` to `v`.
    pub fn reachability(&self) -> Vec<u128> {
        let mut reach = vec![0u128; self.succ.len()];
        for &u in self.topo.iter().rev() {
            let mut r = 0u128;
            for &v in &self.succ[u] {
                r |= reach[v] | (1u128 << v);
            }
            reach[u] = r;
        }
        reach
    }

    fn reachable_avoiding(&self, from: usize, to: usize, skip: (usize, usize)) -> bool {
        let mut seen = vec![false; self.succ.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.succ[u] {
                if (u, v) == skip || seen[v] {
                    continue;
                }
                if v == to {
                    return true;
                }
                seen[v] = true;
                queue.push_back(v);
            }
        }
        false
    }

    /// Removes every edge `(u, v)` for which `v` stays reachable from `u`
    /// once that edge is deleted.
    pub fn prune(&self) -> OrderDag {
        let succ = self
            .succ
            .iter()
            .enumerate()
            .map(|(u, s)| {
                s.iter()
                    .copied()
                    .filter(|&v| !self.reachable_avoiding(u, v, (u, v)))
                    .collect()
            })
            .collect();
        OrderDag {
            rows: self.rows,
            cols: self.cols,
            succ,
            topo: self.topo.clone(),
        }
    }

    pub fn to_poset(&self) -> CellPoset {
        CellPoset::from_dag(self)
    }

    /// Edge list in DOT syntax; vertices are named `r{row}c{col}`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  r{}c{} -> r{}c{};", a.row, a.col, b.row, b.col);
        }
        out.push_str("}\n");
        out
    }
}

fn topological_order(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; succ.len()];
    for s in succ {
        for &v in s {
            indeg[v] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..succ.len()).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(succ.len());
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    (order.len() == succ.len()).then_some(order)
}

fn require_two_column(p: &Pattern) -> Result<()> {
    if p.cols() != 2 {
        return Err(Error::InvalidPattern(format!(
            "expected a 2-column pattern, got {} columns",
            p.cols()
        )));
    }
    Ok(())
}

fn value_cells(p: &Pattern) -> Vec<Cell> {
    let f = p.as_filling();
    let mut at = vec![Cell::new(0, 0); f.rows() * f.cols()];
    for j in 1..=f.cols() {
        for i in 1..=f.rows() {
            at[f.get(i, j) as usize - 1] = Cell::new(i, j);
        }
    }
    at
}

fn gp_edges(p: &Pattern, shift: usize) -> Vec<(Cell, Cell)> {
    value_cells(p)
        .windows(2)
        .map(|w| {
            (
                Cell::new(w[0].row, w[0].col + shift),
                Cell::new(w[1].row, w[1].col + shift),
            )
        })
        .collect()
}

/// `G_P`: an edge from the cell holding `v` to the cell holding `v + 1`.
pub fn build_gp(p: &Pattern) -> Result<OrderDag> {
    require_two_column(p)?;
    OrderDag::from_edges(p.rows(), 2, &gp_edges(p, 0))
}

/// `G_{P,n}`: the union of `G_P` placed on every adjacent column pair of a
/// `k × n` rectangle.
pub fn build_gpn(p: &Pattern, n: usize) -> Result<OrderDag> {
    require_two_column(p)?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("G_P,n needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n - 1).flat_map(|s| gp_edges(p, s)).collect();
    OrderDag::from_edges(p.rows(), n, &edges)
}

/// Reachability order of a DAG, stored as strict predecessor and successor
/// masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPoset {
    below: Vec<u128>,
    above: Vec<u128>,
}

impl CellPoset {
    pub fn from_dag(dag: &OrderDag) -> Self {
        let above = dag.reachability();
        let mut below = vec![0u128; above.len()];
        for (u, &r) in above.iter().enumerate() {
            for (v, b) in below.iter_mut().enumerate() {
                if r >> v & 1 == 1 {
                    *b |= 1u128 << u;
                }
            }
        }
        CellPoset { below, above }
    }

    /// Poset on `0..size` generated by the relations `a < b`.
    pub fn from_relations(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if size > MAX_CELLS {
            return Err(Error::Unsupported(format!(
                "{size} elements exceed the {MAX_CELLS}-element limit"
            )));
        }
        let mut succ = vec![Vec::new(); size];
        for &(a, b) in relations {
            if a >= size || b >= size {
                return Err(Error::OutOfRange(format!(
                    "relation ({a}, {b}) outside 0..{size}"
                )));
            }
            succ[a].push(b);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        let topo = topological_order(&succ).ok_or(Error::Cyclic)?;
        let dag = OrderDag {
            rows: size.max(1),
            cols: 1,
            succ,
            topo,
        };
        Ok(Self::from_dag(&dag))
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a] >> b & 1 == 1
    }

    /// Number of linear extensions, by dynamic programming over order ideals
    /// built one element at a time.
    pub fn linear_extension_count(&self, budget: &Budget) -> Result<BigUint> {
        let size = self.below.len();
        let mut layer: HashMap<u128, BigUint> = HashMap::from([(0u128, BigUint::one())]);
        for _ in 0..size {
            let mut next: HashMap<u128, BigUint> = HashMap::with_capacity(layer.len() * 2);
            for (ideal, count) in &layer {
                for v in 0..size {
                    let bit = 1u128 << v;
                    if ideal & bit == 0 && self.below[v] & !ideal == 0 {
                        *next.entry(ideal | bit).or_insert_with(BigUint::zero) += count;
                    }
                }
            }
            if next.len() > budget.max_states {
                return Err(Error::BudgetExceeded {
                    what: "order ideals",
                    required: format!("more than {}", budget.max_states),
                    limit: budget.max_states.to_string(),
                });
            }
            layer = next;
        }
        Ok(layer.into_values().next().unwrap_or_else(BigUint::one))
    }
}

/// `full_n^P` for a single two-column pattern, via linear extensions of the
/// reachability poset of `G_{P,n}`. A cyclic `G_{P,n}` means no filling
/// qualifies.
pub fn full_count(p: &Pattern, n: usize, budget: &Budget) -> Result<BigUint> {
    require_two_column(p)?;
    match n {
        0 => Err(Error::OutOfRange("full_n is defined for n >= 1".into())),
        1 => Ok(BigUint::one()),
        _ => match build_gpn(p, n) {
            Ok(g) => g.to_poset().linear_extension_count(budget),
            Err(Error::Cyclic) => Ok(BigUint::zero()),
            Err(e) => Err(e),
        },
    }
}

/// `full_n^Υ` for a pattern set: single patterns use the poset route, larger
/// sets the enumeration oracle.
pub fn full_count_set(set: &PatternSet, n: usize, budget: &Budget) -> Result<BigUint> {
    if set.len() == 1 {
        let p = set.iter().next().expect("nonempty");
        return full_count(p, n, budget);
    }
    full_bruteforce(set, n, budget)
}

fn require_standard_two_column(p: &Pattern) -> Result<()> {
    require_two_column(p)?;
    if !p.is_standard() {
        return Err(Error::InvalidPattern(format!(
            "{p} is not a standard tableau"
        )));
    }
    Ok(())
}

/// Every pair of consecutive rows has consecutive values in some column.
pub fn is_degenerate(p: &Pattern) -> Result<bool> {
    require_standard_two_column(p)?;
    let f = p.as_filling();
    Ok((1..f.rows())
        .all(|i| f.get(i, 1) + 1 == f.get(i + 1, 1) || f.get(i, 2) + 1 == f.get(i + 1, 2)))
}

/// Degenerate standard tableaux of shape `2^k`, in the order of
/// [`standard_two_column`].
pub fn degenerate_census(k: usize) -> Result<Vec<Pattern>> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be positive".into()));
    }
    let mut out = Vec::new();
    for p in standard_two_column(k) {
        if is_degenerate(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Whether `G_P` contains both `(i,1) → (i,2)` and `(i,2) → (i+1,2)` for some
/// row `i`.
pub fn has_case_x(p: &Pattern) -> Result<bool> {
    let g = build_gp(p)?;
    Ok((1..p.rows()).any(|i| {
        g.has_edge(Cell::new(i, 1), Cell::new(i, 2))
            && g.has_edge(Cell::new(i, 2), Cell::new(i + 1, 2))
    }))
}

/// Closed-form values used to cross-check the poset route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// Standard tableaux of the `k`-row, `n`-column rectangle, by the hook
    /// formula `(kn)! / Π hooks`.
    StHook { k: u64, n: u64 },
    /// `C_n`.
    Catalan { n: u64 },
    /// `C_{n−1}`.
    CatalanShifted { n: u64 },
    /// `binom(3m, m) / (2m + 1)` at `m = n − 1`.
    TernaryCatalanShifted { n: u64 },
    /// `binom(3n, n) / (2n + 1)` taken at `n` itself.
    TernaryCatalanPrinted { n: u64 },
}

impl ClosedForm {
    pub fn value(self) -> BigUint {
        match self {
            ClosedForm::StHook { k, n } => {
                // hook of cell (row r, column c) from the top-left is
                // (n − c) + (k − r) + 1; the product of row r's hooks is a
                // falling factorial
                let hooks = (1..=k).fold(BigUint::one(), |acc, r| {
                    acc * falling_factorial(n + k - r, n)
                });
                factorial(k * n) / hooks
            }
            ClosedForm::Catalan { n } => catalan(n),
            ClosedForm::CatalanShifted { n } => catalan(n.saturating_sub(1)),
            ClosedForm::TernaryCatalanShifted { n } => ternary(n.saturating_sub(1)),
            ClosedForm::TernaryCatalanPrinted { n } => ternary(n),
        }
    }
}

fn ternary(m: u64) -> BigUint {
    binomial(3 * m, m) / (2 * m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(c1: &[u32], c2: &[u32]) -> Pattern {
        Pattern::from_columns(&[c1, c2]).unwrap()
    }

    #[test]
    fn gp_paths() {
        let g = build_gp(&pat(&[1, 2], &[3, 4])).unwrap();
        let c = Cell::new;
        assert_eq!(g.edges().len(), 3);
        assert!(g.has_edge(c(1, 1), c(2, 1)));
        assert!(g.has_edge(c(2, 1), c(1, 2)));
        assert!(g.has_edge(c(1, 2), c(2, 2)));
        let q = build_gp(&pat(&[1, 3, 4], &[2, 5, 6])).unwrap();
        for (a, b) in [
            (c(1, 1), c(1, 2)),
            (c(1, 2), c(2, 1)),
            (c(2, 1), c(3, 1)),
            (c(3, 1), c(2, 2)),
            (c(2, 2), c(3, 2)),
        ] {
            assert!(q.has_edge(a, b));
        }
    }

    #[test]
    fn gpn_for_two_columns_is_gp() {
        let p = pat(&[1, 3], &[2, 4]);
        assert_eq!(build_gpn(&p, 2).unwrap(), build_gp(&p).unwrap());
        assert!(build_gpn(&p, 1).is_err());
    }

    #[test]
    fn prune_drops_shortcuts_only() {
        let c = |i| Cell::new(i, 1);
        let tri = OrderDag::from_edges(3, 1, &[(c(1), c(2)), (c(2), c(3)), (c(1), c(3))]).unwrap();
        let h = tri.prune();
        assert_eq!(h.edge_count(), 2);
        assert!(!h.has_edge(c(1), c(3)));
        assert_eq!(h.reachability(), tri.reachability());
        let path = OrderDag::from_edges(3, 1, &[(c(1), c(2)), (c(2), c(3))]).unwrap();
        assert_eq!(path.prune(), path);
    }

    #[test]
    fn cycles_rejected() {
        let c = |i| Cell::new(i, 1);
        assert!(matches!(
            OrderDag::from_edges(2, 1, &[(c(1), c(2)), (c(2), c(1))]),
            Err(Error::Cyclic)
        ));
    }

    #[test]
    fn linear_extensions_of_simple_posets() {
        let b = Budget::default();
        let chain = CellPoset::from_relations(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(chain.linear_extension_count(&b).unwrap(), BigUint::one());
        let anti = CellPoset::from_relations(5, &[]).unwrap();
        assert_eq!(
            anti.linear_extension_count(&b).unwrap(),
            BigUint::from(120u32)
        );
        let vee = CellPoset::from_relations(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(vee.linear_extension_count(&b).unwrap(), BigUint::from(2u32));
        assert!(vee.less(0, 2) && !vee.less(1, 2));
    }

    #[test]
    fn ideal_budget_enforced() {
        let anti = CellPoset::from_relations(20, &[]).unwrap();
        let tight = Budget {
            max_states: 100,
            ..Budget::default()
        };
        assert!(anti.linear_extension_count(&tight).unwrap_err().is_budget());
    }

    #[test]
    fn full_counts_for_two_row_patterns() {
        let b = Budget::default();
        let p2 = pat(&[1, 3], &[2, 4]);
        let got: Vec<u64> = (1..=6)
            .map(|n| full_count(&p2, n, &b).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42]);
        let p1 = pat(&[1, 2], &[3, 4]);
        assert!((1..=6).all(|n| full_count(&p1, n, &b).unwrap().is_one()));
    }

    #[test]
    fn degeneracy_definition() {
        assert!(is_degenerate(&pat(&[1, 2], &[3, 4])).unwrap());
        assert!(!is_degenerate(&pat(&[1, 3], &[2, 4])).unwrap());
        assert!(is_degenerate(&pat(&[1, 2, 4], &[3, 5, 6])).unwrap());
        assert!(is_degenerate(&pat(&[2, 3], &[1, 4])).is_err());
        let sizes: Vec<usize> = (1..=6)
            .map(|k| degenerate_census(k).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![1, 1, 2, 4, 9, 21]);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            ClosedForm::StHook { k: 2, n: 2 }.value(),
            BigUint::from(2u32)
        );
        assert_eq!(
            ClosedForm::StHook { k: 2, n: 3 }.value(),
            BigUint::from(5u32)
        );
        assert_eq!(
            ClosedForm::StHook { k: 3, n: 3 }.value(),
            BigUint::from(42u32)
        );
        assert_eq!(ClosedForm::Catalan { n: 4 }.value(), BigUint::from(14u32));
        assert_eq!(
            ClosedForm::CatalanShifted { n: 5 }.value(),
            BigUint::from(14u32)
        );
        assert_eq!(
            ClosedForm::TernaryCatalanShifted { n: 3 }.value(),
            BigUint::from(3u32)
        );
        assert_eq!(
            ClosedForm::TernaryCatalanPrinted { n: 2 }.value(),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn dot_export() {
        let dot = build_gp(&pat(&[1, 2], &[3, 4])).unwrap().to_dot("G");
        assert!(dot.starts_with("digraph G {"));
        assert!(dot.contains("r2c1 -> r1c2;"));
    }
}
