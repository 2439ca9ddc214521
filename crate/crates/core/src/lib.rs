//! Exact invariants of Dehn surgeries on cable knots, and a decision
//! procedure for whether two surgeries `S³_K(m/n)` and `S³_K(m/n′)` can be
//! orientation-reversingly homeomorphic (a *chirally cosmetic* pair).
//!
//! All arithmetic is exact (`BigInt` / `BigRational`).
//!
//! | module | contents |
//! |---|---|
//! | [`arith`] | rationals, Bézout data, Dedekind sums |
//! | [`alexander`] | Laurent polynomials, Alexander polynomials, `a₂`, L-space form |
//! | [`topo`] | knot expressions, torus-knot types, Seifert pieces, JSJ graphs |
//! | [`surgery`] | slopes and the description of surgery on a cable |
//! | [`invariants`] | `|H₁|` and the Casson–Walker surgery formula |
//! | [`obstruction`] | the case engine and its reports |
//! | [`search`] | the `(2,r)`-torus family and candidate enumeration |
//! | [`cli`] | the `cosmetry` command line |
//!
//! ```
//! use cosmetry::obstruction::{check_theorem1, Verdict};
//! use cosmetry::topo::KnotExpr;
//!
//! let trefoil: KnotExpr = "torus(2,3)".parse().unwrap();
//! let report = check_theorem1(&trefoil, 3, 5).unwrap();
//! assert_eq!(report.verdict, Verdict::Obstructed);
//! assert_eq!(report.fired.as_deref(), Some("i"));
//! ```
//!
//! The `examples/` directory has one runnable program per area; start with
//! `cargo run --example theorem_checks`.

pub mod alexander;
pub mod arith;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod obstruction;
pub mod search;
pub mod surgery;
pub mod topo;

pub use error::{Error, Result};
