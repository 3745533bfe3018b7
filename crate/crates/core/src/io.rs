//! Text and JSON formats.
//!
//! Fillings: a header line `k n`, then `k` lines of `n` integers with the top
//! row first. Blank lines and lines starting with `#` are skipped.
//!
//! Distribution polynomials: a JSON array of decimal strings, lowest power of
//! `x` first.
//!
//! Series: a JSON array with one entry per power of `t`, each an array of
//! `"num/den"` strings, lowest power of `x` first.

use num_bigint::{BigInt, BigUint};
use serde_json::Value;

use crate::enumeration::DistPoly;
use crate::filling::Filling;
use crate::series::{Rat, TxSeries, XPoly};
use crate::{Error, Result};

pub fn parse_filling(text: &str) -> Result<Filling> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let dims = parse_numbers(header)?;
    let [k, n] = dims[..] else {
        return Err(Error::Parse(format!("header {header:?} must be \"k n\"")));
    };
    let (k, n) = (k as usize, n as usize);
    let mut rows_top_down = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {k} rows")))?;
        let row = parse_numbers(line)?;
        if row.len() != n {
            return Err(Error::Parse(format!("row {line:?} must have {n} entries")));
        }
        rows_top_down.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
    }
    rows_top_down.reverse();
    Filling::from_rows(&rows_top_down)
}

fn parse_numbers(line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("{t:?} is not a nonnegative integer")))
        })
        .collect()
}

pub fn format_filling(f: &Filling) -> String {
    let mut out = format!("{} {}\n", f.rows(), f.cols());
    for i in (1..=f.rows()).rev() {
        let row: Vec<String> = f.row(i).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn dist_to_json(d: &DistPoly) -> Value {
    Value::Array(
        d.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn dist_from_json(v: &Value) -> Result<DistPoly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("distribution must be a JSON array".into()))?;
    let coeffs = items
        .iter()
        .map(|c| {
            c.as_str()
                .and_then(|s| s.parse::<BigUint>().ok())
                .ok_or_else(|| Error::Parse(format!("{c} is not a decimal string")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DistPoly::new(coeffs))
}

pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_from_str(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("{s:?} is not \"num/den\""));
    let (n, d) = s.split_once('/').ok_or_else(bad)?;
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

pub fn xpoly_to_json(p: &XPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(rat_to_string(c)))
            .collect(),
    )
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be a JSON array".into()))?;
    let coeffs = items
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| Error::Parse(format!("{c} is not a string")))
                .and_then(rat_from_str)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(XPoly::new(coeffs))
}

pub fn series_to_json(s: &TxSeries) -> Value {
    Value::Array(s.coeffs().iter().map(xpoly_to_json).collect())
}

pub fn series_from_json(v: &Value) -> Result<TxSeries> {
    let items = v
        .as_array()
        .filter(|a| !a.is_empty())
        .ok_or_else(|| Error::Parse("series must be a nonempty JSON array".into()))?;
    let coeffs = items
        .iter()
        .map(xpoly_from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(TxSeries::new(coeffs.len() - 1, coeffs))
}
