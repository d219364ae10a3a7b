//! Exact arithmetic for the interpolation (Riordan) group of pairs of
//! formal power series, its Lie algebra, and the two-variable
//! exponential `Exp(a; b)`.
//!
//! Everything is computed over Q (or over Q\[s\], Q\[t\] for parameter
//! jets), so every identity in the crate is checked as a zero-tolerance
//! equality on truncated jets. The main pieces:
//!
//! - [`series`]: truncated formal (Laurent) power series: product,
//!   composition, reversion, log/exp/rational powers of unipotent
//!   series, primitives.
//! - [`group`]: the interpolation group of pairs `(A, alpha)` with the
//!   semidirect product law, its endomorphisms `phi`, and the
//!   interpolation families between series inverse and series reversion.
//! - [`riordan`]: the lower-triangular matrix representation, the Rogers
//!   A-sequence, and the Toeplitz determinant triangle.
//! - [`lie`]: the Lie algebra spanned by Toeplitz and column-weighted
//!   matrices, nilpotent matrix exp/log, both `Exp(a; b)` engines, and
//!   the differential/algebraic identity verifiers.
//! - [`solve`]: reciprocal functions — recover `a` from `Exp(a; b)` and
//!   `b` from `Exp(b; b)` by exact bootstrapping.
//! - [`comb`]: increasing trees, admissible functions, spin-model
//!   partition sums, Andre polynomials.
//! - [`polymat`]: the algebra of lower-triangular matrices with
//!   polynomial diagonals.
//! - [`cli`]: text/JSON parsing and the `rlie` command-line front end.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability.

pub mod cli;
pub mod coef;
pub mod comb;
pub mod error;
pub mod group;
pub mod lie;
pub mod poly;
pub mod polymat;
pub mod rat;
pub mod riordan;
pub mod series;
pub mod solve;

pub use coef::{Coef, Ring};
pub use error::{Error, Result};
pub use poly::{Param, Poly};
pub use rat::{rat, rati, Rat};
pub use series::Series;
