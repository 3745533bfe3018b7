//! Lattice paths and the two path bijections: `theta` from up/down paths to
//! two-row arrays, and `gamma_bij` from standard two-column tableaux to
//! two-colored Motzkin paths.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{binomial, catalan, motzkin_numbers};
use crate::enumeration::Budget;
use crate::filling::{Filling, Pattern};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H,
    /// The second horizontal color, written `h`.
    Ht,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
            Step::Ht => 'h',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            'H' => Ok(Step::H),
            'h' => Ok(Step::Ht),
            _ => Err(Error::InvalidPath(format!("unknown step {c:?}"))),
        }
    }

    fn height_change(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            _ => 0,
        }
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim().chars().map(Step::from_char).collect()
}

fn write_steps(steps: &[Step], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
}

fn balanced(steps: &[Step]) -> bool {
    steps.iter().map(|s| s.height_change()).sum::<i64>() == 0
}

fn never_below(steps: &[Step]) -> bool {
    let mut h = 0i64;
    steps.iter().all(|s| {
        h += s.height_change();
        h >= 0
    })
}

macro_rules! path_type {
    ($name:ident) => {
        impl $name {
            pub fn steps(&self) -> &[Step] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::new(parse_steps(s)?)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_steps(&self.0, f)
            }
        }
    };
}

/// Up/down path of length `2m` that never drops below its start and ends at
/// height 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.iter().any(|s| !matches!(s, Step::U | Step::D)) {
            return Err(Error::InvalidPath("Dyck paths use only U and D".into()));
        }
        if !balanced(&steps) || !never_below(&steps) {
            return Err(Error::InvalidPath(format!(
                "{} is not a Dyck path",
                steps.iter().map(|s| s.as_char()).collect::<String>()
            )));
        }
        Ok(DyckPath(steps))
    }

    pub fn to_epath(&self) -> Result<EPath> {
        EPath::new(self.0.clone())
    }
}

path_type!(DyckPath);

/// Up/down path of positive even length, starting with `U`, ending with `D`,
/// with as many ups as downs; it may dip below zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EPath(Vec<Step>);

impl EPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.iter().any(|s| !matches!(s, Step::U | Step::D)) {
            return Err(Error::InvalidPath("E-paths use only U and D".into()));
        }
        if steps.first() != Some(&Step::U) || steps.last() != Some(&Step::D) || !balanced(&steps) {
            return Err(Error::InvalidPath(format!(
                "{:?} must be nonempty, start with U, end with D and be balanced",
                steps.iter().map(|s| s.as_char()).collect::<String>()
            )));
        }
        Ok(EPath(steps))
    }

    pub fn is_dyck(&self) -> bool {
        never_below(&self.0)
    }
}

path_type!(EPath);

/// Motzkin path with horizontal steps in two colors `H` and `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Motzkin2Path(Vec<Step>);

impl Motzkin2Path {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !balanced(&steps) || !never_below(&steps) {
            return Err(Error::InvalidPath(format!(
                "{} is not a Motzkin path",
                steps.iter().map(|s| s.as_char()).collect::<String>()
            )));
        }
        Ok(Motzkin2Path(steps))
    }

    pub fn uses_second_color(&self) -> bool {
        self.0.contains(&Step::Ht)
    }
}

path_type!(Motzkin2Path);

fn check_path_budget(
    what: &'static str,
    count: num_bigint::BigUint,
    budget: &Budget,
) -> Result<()> {
    if count > budget.max_fillings.into() {
        return Err(Error::BudgetExceeded {
            what,
            required: count.to_string(),
            limit: budget.max_fillings.to_string(),
        });
    }
    Ok(())
}

/// Depth-first generation in lexicographic order of the step alphabet; `ok`
/// prunes partial words given (prefix length, current height).
fn generate(
    len: usize,
    alphabet: &[Step],
    ok: &dyn Fn(usize, i64, Step) -> bool,
    finish: &dyn Fn(&[Step]) -> bool,
) -> Vec<Vec<Step>> {
    fn go(
        len: usize,
        alphabet: &[Step],
        ok: &dyn Fn(usize, i64, Step) -> bool,
        finish: &dyn Fn(&[Step]) -> bool,
        cur: &mut Vec<Step>,
        height: i64,
        out: &mut Vec<Vec<Step>>,
    ) {
        if cur.len() == len {
            if finish(cur) {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = (len - cur.len()) as i64;
        for &s in alphabet {
            let h = height + s.height_change();
            if h.abs() > remaining - 1 {
                continue;
            }
            if !ok(cur.len(), h, s) {
                continue;
            }
            cur.push(s);
            go(len, alphabet, ok, finish, cur, h, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        len,
        alphabet,
        ok,
        finish,
        &mut Vec::with_capacity(len),
        0,
        &mut out,
    );
    out
}

/// Dyck paths of length `2m`.
pub fn enumerate_dyck(m: usize, budget: &Budget) -> Result<Vec<DyckPath>> {
    check_path_budget("Dyck paths", catalan(m as u64), budget)?;
    Ok(
        generate(2 * m, &[Step::U, Step::D], &|_, h, _| h >= 0, &balanced)
            .into_iter()
            .map(DyckPath)
            .collect(),
    )
}

/// E-paths of length `2m`, `m ≥ 1`.
pub fn enumerate_epaths(m: usize, budget: &Budget) -> Result<Vec<EPath>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    check_path_budget("E-paths", binomial(2 * m as u64 - 2, m as u64 - 1), budget)?;
    let len = 2 * m;
    Ok(generate(
        len,
        &[Step::U, Step::D],
        &|i, _, s| (i != 0 || s == Step::U) && (i != len - 1 || s == Step::D),
        &balanced,
    )
    .into_iter()
    .map(EPath)
    .collect())
}

/// Two-colored Motzkin paths of length `m`.
pub fn enumerate_motzkin2(m: usize, budget: &Budget) -> Result<Vec<Motzkin2Path>> {
    check_path_budget("2-colored Motzkin paths", catalan(m as u64 + 1), budget)?;
    Ok(generate(
        m,
        &[Step::U, Step::D, Step::H, Step::Ht],
        &|_, h, _| h >= 0,
        &balanced,
    )
    .into_iter()
    .map(Motzkin2Path)
    .collect())
}

/// Motzkin paths of length `m` (horizontal steps in the first color only).
pub fn enumerate_motzkin(m: usize, budget: &Budget) -> Result<Vec<Motzkin2Path>> {
    let count = motzkin_numbers(m + 1).pop().expect("len >= 1");
    check_path_budget("Motzkin paths", count, budget)?;
    Ok(generate(
        m,
        &[Step::U, Step::D, Step::H],
        &|_, h, _| h >= 0,
        &balanced,
    )
    .into_iter()
    .map(Motzkin2Path)
    .collect())
}

/// A `2 × n` array with increasing rows; columns need not increase, so this
/// is not always a [`Filling`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowArray {
    pub bottom: Vec<u32>,
    pub top: Vec<u32>,
}

impl RowArray {
    pub fn width(&self) -> usize {
        self.bottom.len()
    }

    pub fn to_filling(&self) -> Result<Filling> {
        Filling::from_rows(&[&self.bottom, &self.top])
    }

    pub fn from_filling(f: &Filling) -> Result<Self> {
        if f.rows() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "expected 2 rows, got {}",
                f.rows()
            )));
        }
        Ok(RowArray {
            bottom: f.row(1),
            top: f.row(2),
        })
    }

    /// Membership in the codomain of [`theta`]: rows increase, the bottom row
    /// starts `1, 2`, the top row ends `2n − 1, 2n`, values are `1..=2n`.
    pub fn check_theta_codomain(&self) -> Result<()> {
        let n = self.bottom.len();
        let bad = |why: &str| Err(Error::InvalidFilling(format!("not a theta image: {why}")));
        if n < 2 || self.top.len() != n {
            return bad("rows must have equal length >= 2");
        }
        let mut all: Vec<u32> = self.bottom.iter().chain(&self.top).copied().collect();
        all.sort_unstable();
        if all != (1..=2 * n as u32).collect::<Vec<_>>() {
            return bad("values must be 1..2n");
        }
        if !self.bottom.windows(2).all(|w| w[0] < w[1]) || !self.top.windows(2).all(|w| w[0] < w[1])
        {
            return bad("rows must increase");
        }
        if self.bottom[..2] != [1, 2] || self.top[n - 2..] != [2 * n as u32 - 1, 2 * n as u32] {
            return bad("corner values fixed");
        }
        Ok(())
    }
}

impl fmt::Display for RowArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "{}", join(&self.top))?;
        write!(f, "{}", join(&self.bottom))
    }
}

/// Places `1, 2` in the bottom row and `2n − 1, 2n` at the end of the top row;
/// each `i ∈ 3..=2n−2` goes to the next free bottom cell when step `i − 1`
/// is an up-step and to the next free top cell otherwise.
pub fn theta(path: &EPath) -> RowArray {
    let steps = path.steps();
    let n = steps.len() / 2 + 1;
    let mut bottom = vec![1, 2];
    let mut top = Vec::with_capacity(n);
    for i in 3..=(2 * n - 2) {
        match steps[i - 2] {
            Step::U => bottom.push(i as u32),
            _ => top.push(i as u32),
        }
    }
    top.extend([2 * n as u32 - 1, 2 * n as u32]);
    RowArray { bottom, top }
}

pub fn theta_inv(arr: &RowArray) -> Result<EPath> {
    arr.check_theta_codomain()?;
    let n = arr.width();
    let mut steps = vec![Step::U];
    for i in 3..=(2 * n as u32 - 2) {
        steps.push(if arr.bottom.contains(&i) {
            Step::U
        } else {
            Step::D
        });
    }
    steps.push(Step::D);
    EPath::new(steps)
}

/// Reads row `i < n` of a standard two-column tableau as a step according to
/// whether the successor of each of its cells stays in the same column:
/// both stay → `H`, only the first column's → `U`, only the second
/// column's → `D`, neither → `h`.
pub fn gamma_bij(p: &Pattern) -> Result<Motzkin2Path> {
    if p.cols() != 2 || !p.is_standard() {
        return Err(Error::InvalidPattern(format!(
            "{p} is not a standard 2-column tableau"
        )));
    }
    let f = p.as_filling();
    let rows = f.rows();
    let steps = (1..rows)
        .map(|i| {
            let stays1 = f.get(i + 1, 1) == f.get(i, 1) + 1;
            let stays2 = f.get(i + 1, 2) == f.get(i, 2) + 1;
            match (stays1, stays2) {
                (true, true) => Step::H,
                (true, false) => Step::U,
                (false, true) => Step::D,
                (false, false) => Step::Ht,
            }
        })
        .collect();
    Motzkin2Path::new(steps)
}

/// Rebuilds the tableau by walking values `1, 2, …` through the cells: the
/// step of the current row decides whether the next value stays in the
/// current column or moves to the other one, and the top cell of column 1
/// always hands over to column 2.
pub fn gamma_bij_inv(path: &Motzkin2Path) -> Result<Pattern> {
    let rows = path.len() + 1;
    let mut cols: [Vec<u32>; 2] = [Vec::with_capacity(rows), Vec::with_capacity(rows)];
    cols[0].push(1);
    let mut col = 0usize;
    for v in 2..=(2 * rows as u32) {
        let row = cols[col].len();
        let stay = if col == 0 && row == rows {
            false
        } else {
            match (col, path.steps().get(row - 1)) {
                (0, Some(Step::H | Step::U)) | (1, Some(Step::H | Step::D)) => true,
                (_, Some(_)) => false,
                (_, None) => col == 1,
            }
        };
        if !stay {
            col = 1 - col;
        }
        if cols[col].len() == rows {
            return Err(Error::InvalidPath(format!("{path} overfills a column")));
        }
        cols[col].push(v);
    }
    let p = Pattern::from_columns(&cols)
        .map_err(|_| Error::InvalidPath(format!("{path} gives no tableau")))?;
    if !p.is_standard() || gamma_bij(&p)? != *path {
        return Err(Error::InvalidPath(format!(
            "{path} gives no standard tableau"
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m: Motzkin2Path = "UhHD".parse().unwrap();
        assert_eq!(m.to_string(), "UhHD");
        assert!("DU".parse::<DyckPath>().is_err());
        assert!("DU".parse::<EPath>().is_err());
        assert!("UDDU".parse::<EPath>().is_err());
        assert!("UDDUUD".parse::<EPath>().unwrap().to_string() == "UDDUUD");
        assert!("UX".parse::<Motzkin2Path>().is_err());
        assert!("D".parse::<Motzkin2Path>().is_err());
    }

    #[test]
    fn path_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_dyck(3, &b).unwrap().len(), 5);
        assert_eq!(enumerate_motzkin2(2, &b).unwrap().len(), 5);
        assert_eq!(enumerate_motzkin(3, &b).unwrap().len(), 4);
        assert_eq!(enumerate_epaths(3, &b).unwrap().len(), 6);
        assert_eq!(enumerate_dyck(0, &b).unwrap().len(), 1);
        let tight = Budget {
            max_fillings: 3,
            ..Budget::default()
        };
        assert!(enumerate_dyck(3, &tight).unwrap_err().is_budget());
    }

    #[test]
    fn theta_small_cases() {
        let arr = theta(&"UD".parse().unwrap());
        assert_eq!(
            arr,
            RowArray {
                bottom: vec![1, 2],
                top: vec![3, 4]
            }
        );
        let arr = theta(&"UUDD".parse().unwrap());
        assert_eq!(
            arr,
            RowArray {
                bottom: vec![1, 2, 3],
                top: vec![4, 5, 6]
            }
        );
        // a non-Dyck path whose image has a column descent
        let arr = theta(&"UDDDUUUD".parse().unwrap());
        assert_eq!(arr.bottom, vec![1, 2, 6, 7, 8]);
        assert_eq!(arr.top, vec![3, 4, 5, 9, 10]);
        assert!(arr.to_filling().is_err());
    }

    #[test]
    fn theta_round_trip() {
        let b = Budget::default();
        for m in 1..=5 {
            for p in enumerate_epaths(m, &b).unwrap() {
                assert_eq!(theta_inv(&theta(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let hh = Pattern::from_columns(&[[1, 2, 3], [4, 5, 6]]).unwrap();
        assert_eq!(gamma_bij(&hh).unwrap().to_string(), "HH");
        let tt = Pattern::from_columns(&[[1, 3, 5], [2, 4, 6]]).unwrap();
        assert_eq!(gamma_bij(&tt).unwrap().to_string(), "hh");
        for p in [hh, tt] {
            assert_eq!(gamma_bij_inv(&gamma_bij(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn gamma_inverse_on_all_paths() {
        let b = Budget::default();
        for m in 0..=5 {
            for path in enumerate_motzkin2(m, &b).unwrap() {
                let p = gamma_bij_inv(&path).unwrap();
                assert_eq!(gamma_bij(&p).unwrap(), path);
            }
        }
    }
}
