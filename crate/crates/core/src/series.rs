//! Exact truncated power series in `t` whose coefficients are polynomials in
//! the marker `x` over the rationals, plus the generating-function builders.
//!
//! Every builder returns a series whose `t^n` coefficient, multiplied by the
//! appropriate factorial (see [`TxSeries::scaled_coeff`]), is a distribution
//! polynomial over fillings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::factorial;
use crate::enumeration::DistPoly;
use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_from_big(n: &BigUint) -> Rat {
    Rat::from_integer(BigInt::from(n.clone()))
}

fn fact_rat(n: usize) -> Rat {
    rat_from_big(&factorial(n as u64))
}

/// Polynomial in `x` with rational coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly(Vec<Rat>);

impl XPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly(coeffs)
    }

    pub fn zero() -> Self {
        XPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    /// `x − 1`.
    pub fn x_minus_one() -> Self {
        Self::new(vec![-Rat::one(), Rat::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, m: usize) -> Rat {
        self.0.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The constant coefficient when the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.0.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * at + c)
    }

    /// Integer coefficients, when every coefficient is a nonnegative integer.
    pub fn to_dist_poly(&self) -> Option<DistPoly> {
        let mut out = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            if !c.is_integer() || c.is_negative() {
                return None;
            }
            out.push(c.to_integer().to_biguint()?);
        }
        Some(DistPoly::new(out))
    }
}

impl From<&DistPoly> for XPoly {
    fn from(d: &DistPoly) -> Self {
        XPoly::new(d.coeffs().iter().map(rat_from_big).collect())
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let len = self.0.len().max(rhs.0.len());
        XPoly::new((0..len).map(|m| self.coeff(m) + rhs.coeff(m)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let len = self.0.len().max(rhs.0.len());
        XPoly::new((0..len).map(|m| self.coeff(m) - rhs.coeff(m)).collect())
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::new(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| match m {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{m}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `Σ_{n=0}^{N} c_n t^n` with `c_n ∈ Q[x]`; all arithmetic truncates at `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TxSeries {
    order: usize,
    coeffs: Vec<XPoly>,
}

impl TxSeries {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn new(order: usize, mut coeffs: Vec<XPoly>) -> Self {
        coeffs.resize(order + 1, XPoly::zero());
        TxSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![XPoly::one()])
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![XPoly::zero(), XPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&XPoly> {
        self.coeffs.get(n).ok_or_else(|| {
            Error::OutOfRange(format!(
                "coefficient {n} beyond truncation order {}",
                self.order
            ))
        })
    }

    /// `(kn)! · [t^n]`, which turns an exponential-type coefficient back into
    /// a distribution polynomial.
    pub fn scaled_coeff(&self, n: usize, k: usize) -> Result<XPoly> {
        Ok(self.coeff(n)?.scale(&fact_rat(k * n)))
    }

    fn check_order(&self, other: &TxSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch(format!(
                "series orders {} and {} differ",
                self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TxSeries) -> Result<TxSeries> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &TxSeries) -> Result<TxSeries> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn mul(&self, other: &TxSeries) -> Result<TxSeries> {
        self.check_order(other)?;
        let mut out = vec![XPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::new(self.order, out))
    }

    /// Multiplies every coefficient by a polynomial in `x`.
    pub fn scale(&self, p: &XPoly) -> TxSeries {
        Self::new(self.order, self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Multiplicative inverse; the `t^0` coefficient must be a nonzero
    /// constant.
    pub fn reciprocal(&self) -> Result<TxSeries> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| {
                Error::NotInvertible(format!(
                    "constant term {} is not a nonzero constant",
                    self.coeffs[0]
                ))
            })?;
        let inv0 = c0.recip();
        let mut out: Vec<XPoly> = Vec::with_capacity(self.order + 1);
        out.push(XPoly::constant(inv0.clone()));
        for n in 1..=self.order {
            let mut acc = XPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[n - i]);
                }
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(Self::new(self.order, out))
    }

    pub fn div(&self, denom: &TxSeries) -> Result<TxSeries> {
        self.mul(&denom.reciprocal()?)
    }

    /// Substitutes a rational value for `x`.
    pub fn eval_x(&self, at: &Rat) -> TxSeries {
        Self::new(
            self.order,
            self.coeffs
                .iter()
                .map(|c| XPoly::constant(c.eval(at)))
                .collect(),
        )
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> TxSeries {
        Self::new(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }
}

/// `full_1, full_2, …` of a pattern set; the first entry is `full_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullSeq(Vec<BigUint>);

impl FullSeq {
    pub fn new(values: Vec<BigUint>) -> Self {
        FullSeq(values)
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        FullSeq(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// The constant sequence `full_n = 1`.
    pub fn ones(len: usize) -> Self {
        FullSeq(vec![BigUint::one(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `full_n` for `n ≥ 1`.
    pub fn get(&self, n: usize) -> Result<&BigUint> {
        n.checked_sub(1)
            .and_then(|i| self.0.get(i))
            .ok_or_else(|| Error::OutOfRange(format!("full_{n} not supplied")))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.0
    }

    fn require(&self, upto: usize) -> Result<()> {
        if self.0.len() < upto {
            return Err(Error::OutOfRange(format!(
                "need full_1..full_{upto}, got {} values",
                self.0.len()
            )));
        }
        Ok(())
    }
}

/// `Σ_{n≥1} (x−1)^{n−1} full_n t^n / (kn)!`, truncated.
fn marked_full_sum(k: usize, full: &FullSeq, order: usize) -> Result<TxSeries> {
    full.require(order)?;
    let mut coeffs = vec![XPoly::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        let w = rat_from_big(full.get(n)?) / fact_rat(k * n);
        *c = XPoly::x_minus_one().pow(n - 1).scale(&w);
    }
    Ok(TxSeries::new(order, coeffs))
}

/// Distribution of matches:
/// `(1−x) / (1−x + Σ_{n≥1} ((x−1)t)^n full_n/(kn)!)`.
///
/// Numerator and denominator are both divided by `1 − x` first, giving
/// `1 / (1 − Σ (x−1)^{n−1} full_n t^n/(kn)!)`, whose constant term is 1.
pub fn build_d(k: usize, full: &FullSeq, order: usize) -> Result<TxSeries> {
    TxSeries::one(order)
        .sub(&marked_full_sum(k, full, order)?)?
        .reciprocal()
}

/// Fillings with no match: `1 / (1 + Σ_{n≥1} (−t)^n full_n/(kn)!)`.
pub fn build_a(k: usize, full: &FullSeq, order: usize) -> Result<TxSeries> {
    full.require(order)?;
    let mut coeffs = vec![XPoly::one(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
        *c = XPoly::constant(sign * rat_from_big(full.get(n)?) / fact_rat(k * n));
    }
    TxSeries::new(order, coeffs).reciprocal()
}

/// Fillings whose unique match is at the end: `B = 1 + (t/k! − 1) A`.
pub fn build_b(k: usize, a: &TxSeries) -> Result<TxSeries> {
    let order = a.order();
    let t_over = TxSeries::t(order).scale(&XPoly::constant(fact_rat(k).recip()));
    let factor = t_over.sub(&TxSeries::one(order))?;
    TxSeries::one(order).add(&factor.mul(a)?)
}

/// Distribution of non-overlapping matches: `A / (1 − x B)`.
pub fn build_n(k: usize, a: &TxSeries) -> Result<TxSeries> {
    let b = build_b(k, a)?;
    let denom = TxSeries::one(a.order()).sub(&b.scale(&XPoly::x()))?;
    a.div(&denom)
}

/// `Σ_{n≥1} (x−1)^{n−1} full_{2n} t^{2n} / (2kn)!`.
fn even_denominator_sum(k: usize, full: &FullSeq, order: usize) -> Result<TxSeries> {
    full.require(order - order % 2)?;
    let mut coeffs = vec![XPoly::zero(); order + 1];
    for n in 1..=order / 2 {
        let w = rat_from_big(full.get(2 * n)?) / fact_rat(2 * k * n);
        coeffs[2 * n] = XPoly::x_minus_one().pow(n - 1).scale(&w);
    }
    Ok(TxSeries::new(order, coeffs))
}

/// Even-start matches over fillings of even length that match at every odd
/// start: `1 / (1 − Σ_{n≥1} (x−1)^{n−1} t^{2n} full_{2n}/(2kn)!)`.
pub fn build_even(k: usize, full: &FullSeq, order: usize) -> Result<TxSeries> {
    TxSeries::one(order)
        .sub(&even_denominator_sum(k, full, order)?)?
        .reciprocal()
}

/// Odd-length counterpart:
/// `(Σ (x−1)^{n−1} t^{2n−1} full_{2n−1}/(k(2n−1))!) / (1 − Σ (x−1)^{n−1} t^{2n} full_{2n}/(2kn)!)`.
pub fn build_odd(k: usize, full: &FullSeq, order: usize) -> Result<TxSeries> {
    full.require(order)?;
    let mut num = vec![XPoly::zero(); order + 1];
    let mut n = 1;
    while 2 * n - 1 <= order {
        let w = rat_from_big(full.get(2 * n - 1)?) / fact_rat(k * (2 * n - 1));
        num[2 * n - 1] = XPoly::x_minus_one().pow(n - 1).scale(&w);
        n += 1;
    }
    let denom = TxSeries::one(order).sub(&even_denominator_sum(k, full, order)?)?;
    TxSeries::new(order, num).div(&denom)
}

/// Multiplies the `t^n` coefficient by `(kn)!`, yielding the sequence of
/// distribution polynomials encoded by an exponential-type series.
pub fn scaled_coeffs(s: &TxSeries, k: usize) -> Vec<XPoly> {
    (0..=s.order())
        .map(|n| s.scaled_coeff(n, k).expect("in range"))
        .collect()
}
