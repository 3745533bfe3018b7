//! Homomorphic images of elementary, homogeneous and `ν`-weighted power
//! symmetric functions. Only image sequences `γ_n = Γ(e_n)` are stored; the
//! ring of symmetric functions itself is never built.

use num_traits::{One, Zero};

use crate::combinatorics::{factorial, multinomial};
use crate::series::{rat_from_big, FullSeq, Rat, TxSeries, XPoly};
use crate::{Error, Result};

/// An ordered sequence of brick lengths `(b_1, …, b_ℓ)` tiling a row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrickComposition(Vec<usize>);

impl BrickComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::OutOfRange("brick lengths must be positive".into()));
        }
        Ok(BrickComposition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

/// All `2^{n−1}` compositions of `n`; bit `i` of the counter marks a cut
/// after cell `i + 1`.
pub fn compositions(n: usize) -> impl Iterator<Item = BrickComposition> {
    assert!(n < 64, "composition enumeration limited to n < 64");
    let cuts: u64 = if n == 0 { 0 } else { 1 << (n - 1) };
    (0..cuts.max(1)).filter(move |_| n > 0).map(move |mask| {
        let mut parts = Vec::new();
        let mut len = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        BrickComposition(parts)
    })
}

/// `B_{λ,(n)}`: compositions of `n` whose multiset of parts is `λ`.
pub fn brick_count(lambda: &[usize], n: usize) -> num_bigint::BigUint {
    if lambda.iter().sum::<usize>() != n || lambda.contains(&0) {
        return num_bigint::BigUint::zero();
    }
    let mut sorted = lambda.to_vec();
    sorted.sort_unstable();
    let mut mult = Vec::new();
    for chunk in sorted.chunk_by(|a, b| a == b) {
        mult.push(chunk.len() as u64);
    }
    multinomial(&mult)
}

/// Images `γ_0, …, γ_N` of `e_0, …, e_N`, with `γ_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomImage(Vec<XPoly>);

impl HomImage {
    pub fn new(images: Vec<XPoly>) -> Result<Self> {
        if images.first() != Some(&XPoly::one()) {
            return Err(Error::OutOfRange("the image of e_0 must be 1".into()));
        }
        Ok(HomImage(images))
    }

    /// The largest `n` with a stored image.
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, n: usize) -> &XPoly {
        &self.0[n]
    }

    pub fn images(&self) -> &[XPoly] {
        &self.0
    }

    fn require(&self, order: usize) -> Result<()> {
        if order > self.order() {
            return Err(Error::OutOfRange(format!(
                "images known through n = {}, asked for {order}",
                self.order()
            )));
        }
        Ok(())
    }
}

fn sign(e: usize) -> Rat {
    if e.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// `Γ(e_n) = (−1)^{n−1} (x−1)^{n−1} full_n / (kn)!`.
pub fn gamma_e(k: usize, full: &FullSeq, order: usize) -> Result<HomImage> {
    let mut images = vec![XPoly::one()];
    for n in 1..=order {
        let w = sign(n - 1) * rat_from_big(full.get(n)?) / rat_from_big(&factorial((k * n) as u64));
        images.push(XPoly::x_minus_one().pow(n - 1).scale(&w));
    }
    HomImage::new(images)
}

/// `Γ^(2)`: odd images vanish and `Γ^(2)(e_{2n}) = −(x−1)^{n−1} full_{2n} / (2kn)!`.
pub fn gamma2_e(k: usize, full: &FullSeq, order: usize) -> Result<HomImage> {
    let mut images = vec![XPoly::one()];
    for n in 1..=order {
        if n % 2 == 1 {
            images.push(XPoly::zero());
            continue;
        }
        let half = n / 2;
        let w = -rat_from_big(full.get(n)?) / rat_from_big(&factorial((k * n) as u64));
        images.push(XPoly::x_minus_one().pow(half - 1).scale(&w));
    }
    HomImage::new(images)
}

/// `Γ(h_0), …, Γ(h_N)` from `H(t) = 1 / E(−t)`.
pub fn h_images(e: &HomImage, order: usize) -> Result<Vec<XPoly>> {
    e.require(order)?;
    let e_neg = TxSeries::new(
        order,
        (0..=order).map(|n| e.get(n).scale(&sign(n))).collect(),
    );
    Ok(e_neg.reciprocal()?.coeffs().to_vec())
}

/// `Γ(h_n) = Σ_{(b_1..b_ℓ) ⊨ n} (−1)^{n−ℓ} Π γ_{b_j}` summed over brick
/// compositions.
pub fn h_images_brick(e: &HomImage, order: usize) -> Result<Vec<XPoly>> {
    p_nu_images_brick(e, &vec![Rat::one(); order + 1], order)
}

fn require_nu(nu: &[Rat], order: usize) -> Result<()> {
    if nu.len() <= order {
        return Err(Error::OutOfRange(format!(
            "ν needs entries 1..={order}, got {}",
            nu.len().saturating_sub(1)
        )));
    }
    Ok(())
}

/// `p_{n,ν}` images by the recurrence
/// `p_n = (−1)^{n−1} ν(n) γ_n + Σ_{i=1}^{n−1} (−1)^{i−1} γ_i p_{n−i}`.
///
/// `nu[n]` holds `ν(n)`; `nu[0]` is ignored.
pub fn p_nu_images(e: &HomImage, nu: &[Rat], order: usize) -> Result<Vec<XPoly>> {
    e.require(order)?;
    require_nu(nu, order)?;
    let mut p = vec![XPoly::one()];
    for n in 1..=order {
        let mut acc = e.get(n).scale(&(sign(n - 1) * &nu[n]));
        for i in 1..n {
            acc = &acc + &(e.get(i) * &p[n - i]).scale(&sign(i - 1));
        }
        p.push(acc);
    }
    Ok(p)
}

/// `p_{n,ν}` images by the weighted brick expansion
/// `Σ_{(b_1..b_ℓ) ⊨ n} (−1)^{n−ℓ} ν(b_ℓ) Π γ_{b_j}`.
pub fn p_nu_images_brick(e: &HomImage, nu: &[Rat], order: usize) -> Result<Vec<XPoly>> {
    e.require(order)?;
    require_nu(nu, order)?;
    let mut out = vec![XPoly::one()];
    for n in 1..=order {
        let mut acc = XPoly::zero();
        for comp in compositions(n) {
            let weight = sign(n - comp.len()) * &nu[comp.last().expect("n >= 1")];
            if weight.is_zero() {
                continue;
            }
            let prod = comp
                .parts()
                .iter()
                .fold(XPoly::constant(weight), |a, &b| &a * e.get(b));
            acc = &acc + &prod;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Weights for odd lengths: `ν(2n) = full_{2n−1} (2kn)! / (full_{2n} (k(2n−1))!)`
/// and `ν` of odd arguments is 0. Index 0 is unused.
pub fn nu_odd_weights(k: usize, full: &FullSeq, order: usize) -> Result<Vec<Rat>> {
    let mut nu = vec![Rat::zero(); order + 1];
    for m in (2..=order).step_by(2) {
        let top = full.get(m)?;
        if top.is_zero() {
            return Err(Error::NotInvertible(format!("full_{m} = 0")));
        }
        nu[m] = rat_from_big(full.get(m - 1)?) * rat_from_big(&factorial((k * m) as u64))
            / (rat_from_big(top) * rat_from_big(&factorial((k * (m - 1)) as u64)));
    }
    Ok(nu)
}
