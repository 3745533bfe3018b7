//! Consecutive pattern matching in fillings of a `k × n` rectangle whose
//! columns increase from bottom to top.
//!
//! The crate is organised bottom-up:
//!
//! * [`filling`]: fillings, patterns, reduction and the match/occurrence
//!   predicates.
//! * [`enumeration`]: exhaustive generation of all fillings and exact
//!   counting oracles for every statistic.
//! * [`series`]: exact truncated power series in `t` with coefficients in
//!   `Q[x]`, and the generating-function builders.
//! * [`poset`]: order graphs on rectangle cells, transitive reduction and
//!   linear-extension counting for fully matched fillings.
//! * [`symfun`]: homomorphic images of `h_n`, `e_n` and `p_{n,ν}`.
//! * [`paths`]: Dyck / Motzkin path bijections.
//!
//! All arithmetic is exact.

pub mod combinatorics;
pub mod enumeration;
mod error;
pub mod filling;
pub mod io;
pub mod paths;
pub mod poset;
pub mod series;
pub mod symfun;

pub use error::{Error, Result};
pub use filling::{Filling, MatchProfile, Pattern, PatternSet};
