//! Built-in pattern names and pattern-file loading.

use std::path::Path;

use fillings::filling::standard_two_column;
use fillings::io::parse_filling;
use fillings::{Error, Pattern, PatternSet, Result};

/// Names accepted wherever a pattern argument is expected, with a short
/// description for `--help` text and error messages.
pub const ALIASES: &[(&str, &str)] = &[
    ("P1_22", "col1 (1,2), col2 (3,4)"),
    ("P2_22", "col1 (1,3), col2 (2,4)"),
    ("ST_22", "both standard 2-row tableaux"),
    ("ST_222", "all five standard 3-row tableaux"),
    ("ST_2222", "all fourteen standard 4-row tableaux"),
    ("T3_123", "col1 (1,2,3), col2 (4,5,6)"),
    ("T3_124", "col1 (1,2,4), col2 (3,5,6)"),
    ("T3_125", "col1 (1,2,5), col2 (3,4,6)"),
    ("T3_134", "col1 (1,3,4), col2 (2,5,6)"),
    ("T3_135", "col1 (1,3,5), col2 (2,4,6)"),
    ("P1_222", "same as T3_124"),
    ("Q_222", "same as T3_134"),
];

fn two_col(first: &[u32], second: &[u32]) -> Vec<Pattern> {
    vec![Pattern::from_columns(&[first, second]).expect("built-in pattern")]
}

fn alias(name: &str) -> Option<Vec<Pattern>> {
    Some(match name {
        "P1_22" => two_col(&[1, 2], &[3, 4]),
        "P2_22" => two_col(&[1, 3], &[2, 4]),
        "ST_22" => standard_two_column(2),
        "ST_222" => standard_two_column(3),
        "ST_2222" => standard_two_column(4),
        "T3_123" => two_col(&[1, 2, 3], &[4, 5, 6]),
        "T3_124" | "P1_222" => two_col(&[1, 2, 4], &[3, 5, 6]),
        "T3_125" => two_col(&[1, 2, 5], &[3, 4, 6]),
        "T3_134" | "Q_222" => two_col(&[1, 3, 4], &[2, 5, 6]),
        "T3_135" => two_col(&[1, 3, 5], &[2, 4, 6]),
        _ => return None,
    })
}

/// Resolves one argument: a built-in name, or a path to a pattern file.
pub fn resolve(arg: &str) -> Result<Vec<Pattern>> {
    if let Some(ps) = alias(arg) {
        return Ok(ps);
    }
    let path = Path::new(arg);
    if !path.exists() {
        let names: Vec<&str> = ALIASES.iter().map(|(n, _)| *n).collect();
        return Err(Error::Parse(format!(
            "{arg:?} is neither a pattern file nor one of {}",
            names.join(", ")
        )));
    }
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {arg}: {e}")))?;
    Ok(vec![Pattern::new(parse_filling(&text)?)?])
}

pub fn resolve_set(args: &[String]) -> Result<PatternSet> {
    let mut all = Vec::new();
    for a in args {
        for p in resolve(a)? {
            if !all.contains(&p) {
                all.push(p);
            }
        }
    }
    PatternSet::new(all)
}

/// Compact one-line form, columns left to right, each bottom to top.
pub fn compact(p: &Pattern) -> String {
    p.as_filling()
        .columns()
        .map(|c| {
            let v: Vec<String> = c.iter().map(u32::to_string).collect();
            format!("({})", v.join(","))
        })
        .collect::<Vec<_>>()
        .join("/")
}

pub fn compact_set(set: &PatternSet) -> String {
    let parts: Vec<String> = set.iter().map(compact).collect();
    format!("{{{}}}", parts.join(", "))
}
