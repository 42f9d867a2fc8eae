//! Exact computation of Alexander polynomials of braid closures, and the
//! knot-surgery action they induce on Seiberg-Witten basic-class data.
//!
//! Everything is integer-exact: coefficients are arbitrary precision,
//! evaluation is rational, and there is no floating point anywhere in the
//! engine. The pieces:
//!
//! - [`braid`]: braid words, closures, mirror/reverse, connected sums.
//! - [`laurent`]: the Laurent polynomial ring the invariants live in.
//! - [`alexander`](mod@alexander): the reduced-Burau pipeline, an
//!   independent Fox-calculus oracle, and a bounded Fox-Milnor
//!   factorization search.
//! - [`swcalc`]: Seiberg-Witten invariants as lattice functions and the
//!   surgery, concordance, and twisted-surgery operations on them.
//! - [`cli`]: knot tables, the SW data file format, and the subcommands
//!   behind the `knotsurg` binary.

pub mod alexander;
pub mod braid;
pub mod cli;
mod error;
pub mod laurent;
pub mod swcalc;

pub use alexander::{
    alexander, alexander_oracle, fox_milnor, fox_milnor_check, AlexanderPolynomial, FoxMilnor,
};
pub use braid::{Braid, Letter, Sign};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use swcalc::{
    concordance_surgery, knot_surgery, surgery_composition_check, sw_equal,
    twisted_surgery_changes, Concordance, SWInvariant, TorusClass,
};
