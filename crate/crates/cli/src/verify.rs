//! `verify` suites: compare series-side values with the enumeration oracles
//! over every nonempty subset of the standard `k`-row tableaux.

use fillings::combinatorics::binomial;
use fillings::enumeration::{
    alternating_count, distribution, end_match_count, even_given_odd_distribution, no_match_count,
    Budget, DistPoly, Stat,
};
use fillings::filling::standard_two_column;
use fillings::poset::{full_count_set, ClosedForm};
use fillings::series::{
    build_a, build_b, build_d, build_even, build_n, build_odd, rat_from_big, FullSeq, Rat,
    TxSeries, XPoly,
};
use fillings::symfun::{gamma2_e, gamma_e, h_images, h_images_brick, nu_odd_weights, p_nu_images};
use fillings::{Error, PatternSet, Result};

use crate::patterns::compact_set;

pub enum Outcome {
    Pass(usize),
    Fail(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    #[value(name = "thmD")]
    ThmD,
    #[value(name = "thmN")]
    ThmN,
    #[value(name = "thmE")]
    ThmE,
    #[value(name = "thmO")]
    ThmO,
    #[value(name = "htoe")]
    Htoe,
    #[value(name = "lemma7")]
    Lemma7,
    #[value(name = "hook")]
    Hook,
}

struct Checker {
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

/// Every nonempty subset of the standard tableaux with `k` rows.
pub fn standard_subsets(k: usize) -> Result<Vec<PatternSet>> {
    let all = standard_two_column(k);
    if all.len() > 16 {
        return Err(Error::Unsupported(format!(
            "{} tableaux give too many subsets; use k <= 3",
            all.len()
        )));
    }
    (1u32..1 << all.len())
        .map(|mask| {
            let chosen = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p.clone())
                .collect();
            PatternSet::new(chosen)
        })
        .collect()
}

fn full_seq(set: &PatternSet, len: usize, budget: &Budget) -> Result<FullSeq> {
    let values = (1..=len)
        .map(|n| full_count_set(set, n, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(FullSeq::new(values))
}

fn scaled(s: &TxSeries, n: usize, k: usize) -> XPoly {
    s.scaled_coeff(n, k).expect("within order")
}

fn as_xpoly(d: &DistPoly) -> XPoly {
    XPoly::from(d)
}

fn fact(n: usize) -> Rat {
    rat_from_big(&fillings::combinatorics::factorial(n as u64))
}

pub fn run(suite: Suite, k: usize, nmax: usize, budget: &Budget) -> Result<Outcome> {
    if k == 0 || nmax == 0 {
        return Err(Error::OutOfRange("k and nmax must be positive".into()));
    }
    let mut c = Checker {
        checks: 0,
        failure: None,
    };
    match suite {
        Suite::Hook => {
            let set = PatternSet::standard(k);
            for n in 1..=nmax {
                let got = full_count_set(&set, n, budget)?;
                let want = ClosedForm::StHook {
                    k: k as u64,
                    n: n as u64,
                }
                .value();
                c.check(got == want, || {
                    format!("n={n}: full={got}, hook formula={want}")
                });
            }
        }
        _ => {
            for set in standard_subsets(k)? {
                run_for_set(suite, k, nmax, &set, budget, &mut c)?;
                if c.failed() {
                    break;
                }
            }
        }
    }
    Ok(match c.failure {
        None => Outcome::Pass(c.checks),
        Some(msg) => Outcome::Fail(msg),
    })
}

fn run_for_set(
    suite: Suite,
    k: usize,
    nmax: usize,
    set: &PatternSet,
    budget: &Budget,
    c: &mut Checker,
) -> Result<()> {
    let name = compact_set(set);
    match suite {
        Suite::ThmD => {
            let d = build_d(k, &full_seq(set, nmax, budget)?, nmax)?;
            for n in 1..=nmax {
                let want = as_xpoly(&distribution(k, n, set, Stat::Mch, budget)?);
                let got = scaled(&d, n, k);
                c.check(got == want, || {
                    format!("{name} n={n}: series {got} vs enumeration {want}")
                });
            }
        }
        Suite::ThmN => {
            let a = build_a(k, &full_seq(set, nmax, budget)?, nmax)?;
            let b = build_b(k, &a)?;
            let nn = build_n(k, &a)?;
            for n in 1..=nmax {
                let want = as_xpoly(&distribution(k, n, set, Stat::Nlap, budget)?);
                let got = scaled(&nn, n, k);
                c.check(got == want, || {
                    format!("{name} n={n}: N series {got} vs enumeration {want}")
                });
                let want = XPoly::constant(rat_from_big(&end_match_count(k, n, set, budget)?));
                let got = scaled(&b, n, k);
                c.check(got == want, || {
                    format!("{name} n={n}: B series {got} vs end matches {want}")
                });
                let want = XPoly::constant(rat_from_big(&no_match_count(k, n, set, budget)?));
                let got = scaled(&a, n, k);
                c.check(got == want, || {
                    format!("{name} n={n}: A series {got} vs no-match count {want}")
                });
            }
        }
        Suite::ThmE | Suite::ThmO => {
            let full = full_seq(set, nmax, budget)?;
            let (series, parity) = if suite == Suite::ThmE {
                (build_even(k, &full, nmax)?, 0)
            } else {
                (build_odd(k, &full, nmax)?, 1)
            };
            let at_zero = series.eval_x(&Rat::from_integer(0.into()));
            for n in (1..=nmax).filter(|n| n % 2 == parity) {
                let want = as_xpoly(&even_given_odd_distribution(k, n, set, budget)?);
                let got = scaled(&series, n, k);
                c.check(got == want, || {
                    format!("{name} length {n}: series {got} vs enumeration {want}")
                });
                let want = XPoly::constant(rat_from_big(&alternating_count(k, n, set, budget)?));
                let got = scaled(&at_zero, n, k);
                c.check(got == want, || {
                    format!("{name} length {n}: x=0 value {got} vs alternating {want}")
                });
            }
        }
        Suite::Htoe => {
            // one extra full value feeds the odd-length weighted images
            let full = full_seq(set, nmax + 1, budget)?;
            let e = gamma_e(k, &full, nmax)?;
            let h = h_images(&e, nmax)?;
            let hb = h_images_brick(&e, nmax)?;
            c.check(h == hb, || {
                format!("{name}: reciprocal and brick h-images differ")
            });
            for (n, hn) in h.iter().enumerate().skip(1) {
                let want = as_xpoly(&distribution(k, n, set, Stat::Mch, budget)?);
                let got = hn.scale(&fact(k * n));
                c.check(got == want, || {
                    format!("{name} n={n}: (kn)! h image {got} vs enumeration {want}")
                });
            }
            let e2 = gamma2_e(k, &full, nmax + 1)?;
            let h2 = h_images(&e2, nmax)?;
            let nu = nu_odd_weights(k, &full, nmax + 1)?;
            let p = p_nu_images(&e2, &nu, nmax + 1)?;
            for n in 1..=nmax {
                let want = as_xpoly(&even_given_odd_distribution(k, n, set, budget)?);
                let got = if n % 2 == 0 {
                    h2[n].scale(&fact(k * n))
                } else {
                    c.check(h2[n].is_zero(), || {
                        format!("{name} n={n}: odd h-image nonzero")
                    });
                    p[n + 1].scale(&fact(k * n))
                };
                c.check(got == want, || {
                    format!("{name} length {n}: image {got} vs enumeration {want}")
                });
            }
        }
        Suite::Lemma7 => {
            for n in 1..nmax {
                let lhs =
                    binomial((k * (n + 1)) as u64, k as u64) * no_match_count(k, n, set, budget)?;
                let rhs = no_match_count(k, n + 1, set, budget)?
                    + end_match_count(k, n + 1, set, budget)?;
                c.check(lhs == rhs, || format!("{name} n={n}: {lhs} != {rhs}"));
            }
        }
        Suite::Hook => unreachable!("handled without subsets"),
    }
    Ok(())
}
