//! Exhaustive generation of all fillings and exact counting oracles.
//!
//! Two independent routes compute every census:
//!
//! * [`census_by_enumeration`] walks every filling produced by
//!   [`iter_fillings`] and inspects its [`MatchProfile`](crate::MatchProfile).
//! * [`census`] sweeps the columns left to right, merging all partial fillings
//!   that share the same set of used values and the same last column. A match
//!   between adjacent columns depends only on those two columns, so the merged
//!   states carry exactly the information needed, and prefixes that already
//!   violate a required match are dropped on the spot.
//!
//! The public counting functions use [`census`]; the test suites check it
//! against [`census_by_enumeration`] wherever the latter is affordable.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinatorics::{factorial, for_each_k_subset};
use crate::filling::{two_column_mask_from_bits, Filling, PatternSet};
use crate::{Error, Result};

/// Caps on how much work an exhaustive computation may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of fillings a literal enumeration may visit.
    pub max_fillings: u128,
    /// Largest number of merged states a column sweep or downset table may hold.
    pub max_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_fillings: 100_000_000,
            max_states: 1 << 24,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_fillings: u128::MAX,
            max_states: usize::MAX,
        }
    }
}

/// `|𝓕_{n,k}| = (kn)! / (k!)^n`.
pub fn count_fillings(k: usize, n: usize) -> BigUint {
    factorial((k * n) as u64) / factorial(k as u64).pow(n as u32)
}

/// Every ground filling of the `k × n` rectangle, once each, ordered
/// lexicographically by the sequence of column value sets.
pub fn iter_fillings(k: usize, n: usize, budget: &Budget) -> Result<FillingIter> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidFilling("k and n must be positive".into()));
    }
    let total = count_fillings(k, n);
    if total > BigUint::from(budget.max_fillings) {
        return Err(Error::BudgetExceeded {
            what: "filling enumeration",
            required: total.to_string(),
            limit: budget.max_fillings.to_string(),
        });
    }
    Ok(FillingIter::new(k, n))
}

struct Level {
    avail: Vec<u32>,
    idx: Vec<usize>,
}

pub struct FillingIter {
    k: usize,
    n: usize,
    levels: Vec<Level>,
    started: bool,
    done: bool,
}

impl FillingIter {
    fn new(k: usize, n: usize) -> Self {
        let mut it = FillingIter {
            k,
            n,
            levels: Vec::with_capacity(n),
            started: false,
            done: false,
        };
        let all: Vec<u32> = (1..=(k * n) as u32).collect();
        it.rebuild_from(0, all);
        it
    }

    /// Resets levels `from..n` to their first combination given the values
    /// still available at level `from`.
    fn rebuild_from(&mut self, from: usize, mut avail: Vec<u32>) {
        self.levels.truncate(from);
        for _ in from..self.n {
            let idx: Vec<usize> = (0..self.k).collect();
            let rest: Vec<u32> = avail[self.k..].to_vec();
            self.levels.push(Level { avail, idx });
            avail = rest;
        }
    }

    fn current(&self) -> Filling {
        let mut cells = Vec::with_capacity(self.k * self.n);
        for lvl in &self.levels {
            cells.extend(lvl.idx.iter().map(|&i| lvl.avail[i]));
        }
        Filling::from_column_major_unchecked(self.k, self.n, cells)
    }

    fn advance(&mut self) -> bool {
        let k = self.k;
        for c in (0..self.n).rev() {
            let lvl = &mut self.levels[c];
            let m = lvl.avail.len();
            let Some(pos) = (0..k).rev().find(|&p| lvl.idx[p] < m - k + p) else {
                continue;
            };
            lvl.idx[pos] += 1;
            for j in pos + 1..k {
                lvl.idx[j] = lvl.idx[j - 1] + 1;
            }
            let rest: Vec<u32> = lvl
                .avail
                .iter()
                .enumerate()
                .filter(|(i, _)| !lvl.idx.contains(i))
                .map(|(_, &v)| v)
                .collect();
            if c + 1 < self.n {
                self.rebuild_from(c + 1, rest);
            }
            return true;
        }
        false
    }
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current())
    }
}

/// Polynomial in the marker `x` with nonnegative integer coefficients; the
/// coefficient of `x^m` counts the fillings whose statistic equals `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DistPoly(Vec<BigUint>);

impl DistPoly {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DistPoly(coeffs)
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.0
    }

    pub fn coeff(&self, m: usize) -> BigUint {
        self.0.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Value at `x = 1`: the size of the population.
    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    fn add_shifted(&mut self, other: &[u128], shift: usize) {
        if self.0.len() < other.len() + shift {
            self.0.resize(other.len() + shift, BigUint::zero());
        }
        for (m, c) in other.iter().enumerate() {
            self.0[m + shift] += *c;
        }
    }
}

impl fmt::Display for DistPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| match m {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{m}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Which fillings to count and which marker exponent to record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Census {
    /// All fillings, marked by the number of matches.
    Mch,
    /// All fillings, marked by the maximum number of non-overlapping matches.
    Nlap,
    /// Fillings matching at every odd start, marked by matches at even starts.
    EvenGivenOdd,
    /// Fillings matching exactly at the odd starts.
    Alternating,
    /// Fillings matching at every start.
    Full,
    /// Fillings with no match.
    NoMatch,
    /// Fillings whose only match starts at the last position.
    EndMatch,
}

impl Census {
    /// One left-to-right step at start position `i` of `n` columns. `taken`
    /// records whether the greedy non-overlapping scan used position `i−1`.
    /// Returns `None` to discard the prefix, else the exponent increment and
    /// the new `taken` flag.
    #[inline]
    fn step(self, i: usize, n: usize, matched: bool, taken: bool) -> Option<(usize, bool)> {
        match self {
            Census::Mch => Some((matched as usize, false)),
            Census::Nlap => {
                if matched && !taken {
                    Some((1, true))
                } else {
                    Some((0, false))
                }
            }
            Census::EvenGivenOdd => match (i % 2 == 1, matched) {
                (true, false) => None,
                (true, true) => Some((0, false)),
                (false, m) => Some((m as usize, false)),
            },
            Census::Alternating => ((i % 2 == 1) == matched).then_some((0, false)),
            Census::Full => matched.then_some((0, false)),
            Census::NoMatch => (!matched).then_some((0, false)),
            Census::EndMatch => (matched == (i + 1 == n)).then_some((0, false)),
        }
    }

    /// Exponent for a filling with the given profile, or `None` if the
    /// filling is outside the population. Used by the literal route.
    fn weigh(self, n: usize, profile: &crate::MatchProfile) -> Option<usize> {
        let odd_ok = (1..n)
            .filter(|i| i % 2 == 1)
            .all(|i| profile.match_set.contains(&i));
        match self {
            Census::Mch => Some(profile.mch),
            Census::Nlap => Some(profile.nlap),
            Census::EvenGivenOdd => odd_ok.then_some(profile.even_mch),
            Census::Alternating => (odd_ok && profile.even_mch == 0).then_some(0),
            Census::Full => (profile.mch + 1 == n).then_some(0),
            Census::NoMatch => (profile.mch == 0).then_some(0),
            Census::EndMatch => {
                (n >= 2 && profile.mch == 1 && profile.match_set.contains(&(n - 1))).then_some(0)
            }
        }
    }
}

/// Literal census: visit every filling and weigh its match profile.
pub fn census_by_enumeration(
    k: usize,
    n: usize,
    set: &PatternSet,
    which: Census,
    budget: &Budget,
) -> Result<DistPoly> {
    check_set(k, set)?;
    let mut counts: Vec<u64> = Vec::new();
    for f in iter_fillings(k, n, budget)? {
        let profile = f.match_profile(set)?;
        if let Some(m) = which.weigh(n, &profile) {
            if counts.len() <= m {
                counts.resize(m + 1, 0);
            }
            counts[m] += 1;
        }
    }
    Ok(DistPoly::from_u64s(&counts))
}

fn check_set(k: usize, set: &PatternSet) -> Result<()> {
    set.require_two_columns()?;
    if set.rows() != k {
        return Err(Error::DimensionMismatch(format!(
            "patterns have {} rows, requested k = {k}",
            set.rows()
        )));
    }
    Ok(())
}

type StateKey = (u64, u64, bool);

/// Column-sweep census over all of `𝓕_{n,k}`.
pub fn census(
    k: usize,
    n: usize,
    set: &PatternSet,
    which: Census,
    budget: &Budget,
) -> Result<DistPoly> {
    check_set(k, set)?;
    if k == 0 || n == 0 {
        return Err(Error::InvalidFilling("k and n must be positive".into()));
    }
    if k * n > 64 {
        return Err(Error::Unsupported(format!(
            "column sweep supports at most 64 cells, got {}",
            k * n
        )));
    }
    if which == Census::EndMatch && n < 2 {
        // no start position exists, so nothing can match at the end
        return Ok(DistPoly::default());
    }
    let all: u64 = if k * n == 64 {
        u64::MAX
    } else {
        (1u64 << (k * n)) - 1
    };

    let mut layer: HashMap<StateKey, Vec<u128>> = HashMap::new();
    for_each_k_subset(all, k, |c| {
        layer.insert((c, c, false), vec![1]);
    });
    check_states(layer.len(), budget)?;

    for i in 1..n {
        let mut next: HashMap<StateKey, Vec<u128>> = HashMap::new();
        let mut overflow = false;
        let mut exceeded = false;
        // both layers are alive at once, so they share the state budget
        let room = budget.max_states.saturating_sub(layer.len());
        for (&(used, last, taken), poly) in &layer {
            for_each_k_subset(all & !used, k, |col| {
                if exceeded {
                    return;
                }
                let matched = set.contains_mask(two_column_mask_from_bits(last, col));
                let Some((inc, flag)) = which.step(i, n, matched, taken) else {
                    return;
                };
                let key = (used | col, col, flag);
                if next.len() >= room && !next.contains_key(&key) {
                    exceeded = true;
                    return;
                }
                let slot = next.entry(key).or_default();
                if slot.len() < poly.len() + inc {
                    slot.resize(poly.len() + inc, 0);
                }
                for (m, c) in poly.iter().enumerate() {
                    match slot[m + inc].checked_add(*c) {
                        Some(v) => slot[m + inc] = v,
                        None => overflow = true,
                    }
                }
            });
        }
        if exceeded {
            return Err(state_budget_error(layer.len() + next.len() + 1, budget));
        }
        if overflow {
            return Err(Error::Overflow);
        }
        layer = next;
    }

    let mut out = DistPoly::default();
    for poly in layer.values() {
        out.add_shifted(poly, 0);
    }
    Ok(DistPoly::new(out.0))
}

fn check_states(states: usize, budget: &Budget) -> Result<()> {
    if states > budget.max_states {
        return Err(state_budget_error(states, budget));
    }
    Ok(())
}

fn state_budget_error(states: usize, budget: &Budget) -> Error {
    Error::BudgetExceeded {
        what: "column sweep",
        required: format!("at least {states} states"),
        limit: budget.max_states.to_string(),
    }
}

/// Statistic selector for [`distribution`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    Mch,
    Nlap,
    /// Matches at even starts, over fillings matching at all odd starts.
    Even2,
}

impl From<Stat> for Census {
    fn from(s: Stat) -> Census {
        match s {
            Stat::Mch => Census::Mch,
            Stat::Nlap => Census::Nlap,
            Stat::Even2 => Census::EvenGivenOdd,
        }
    }
}

/// `Σ_{F ∈ 𝓕_{n,k}} x^{stat(F)}`.
pub fn distribution(
    k: usize,
    n: usize,
    set: &PatternSet,
    stat: Stat,
    budget: &Budget,
) -> Result<DistPoly> {
    census(k, n, set, stat.into(), budget)
}

/// Number of fillings with no match (`A_{n,k}`).
pub fn no_match_count(k: usize, n: usize, set: &PatternSet, budget: &Budget) -> Result<BigUint> {
    Ok(census(k, n, set, Census::NoMatch, budget)?.coeff(0))
}

/// Number of fillings whose unique match starts at `n − 1` (`E_{n,k}`);
/// zero when `n = 1`.
pub fn end_match_count(k: usize, n: usize, set: &PatternSet, budget: &Budget) -> Result<BigUint> {
    Ok(census(k, n, set, Census::EndMatch, budget)?.coeff(0))
}

/// Number of fillings matching at every start `1..n` (`full_n`), with
/// `full_1 = 1`.
pub fn full_bruteforce(set: &PatternSet, n: usize, budget: &Budget) -> Result<BigUint> {
    Ok(census(set.rows(), n, set, Census::Full, budget)?.coeff(0))
}

/// `full_1, …, full_len` for a pattern set.
pub fn full_sequence_bruteforce(
    set: &PatternSet,
    len: usize,
    budget: &Budget,
) -> Result<Vec<BigUint>> {
    (1..=len).map(|n| full_bruteforce(set, n, budget)).collect()
}

/// Number of alternating fillings (`Alt_n`).
pub fn alternating_count(k: usize, n: usize, set: &PatternSet, budget: &Budget) -> Result<BigUint> {
    Ok(census(k, n, set, Census::Alternating, budget)?.coeff(0))
}

/// Marker polynomial of even-start matches over fillings matching at every
/// odd start.
pub fn even_given_odd_distribution(
    k: usize,
    n: usize,
    set: &PatternSet,
    budget: &Budget,
) -> Result<DistPoly> {
    census(k, n, set, Census::EvenGivenOdd, budget)
}
