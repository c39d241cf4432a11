//! Exact arithmetic over the integers expanded with the golden-ratio Beatty
//! function `f(x) = ⌊φx⌋`, the Fibonacci floor `F` and its odd-index
//! companion `G`.
//!
//! Every decision about fractional parts `[φx] = φx − ⌊φx⌋` is made with
//! integer arithmetic only: differences of fractional parts are numbers of
//! the form `(p + q√5)/2`, whose sign is decided exactly by [`kernel::Surd`].
//!
//! Modules:
//! - [`kernel`]: `f`, `f̄`, their inverses, fractional-part order, Kronecker witnesses.
//! - [`fib`]: Fibonacci table (`F_0 = F_1 = 1`), `F`, `G`, Zeckendorf, the `F(m+n)` case law.
//! - [`extrema`]: argmin/argmax of fractional parts over integer intervals.
//! - [`formula`]: a small first-order language with bounded quantifiers.
//! - [`checker`]: exhaustive and randomized verification suites.
//! - [`plot`]: deterministic point emission for the fractional-part diagram.

pub mod checker;
pub mod error;
pub mod extrema;
pub mod fib;
pub mod formula;
pub mod int;
pub mod kernel;
pub mod plot;

pub use error::{Error, Result};
pub use extrema::{ExtremumKind, ExtremumResult, Interval, Method};
pub use fib::FibTable;
pub use formula::{Formula, Term};
pub use int::Int;
pub use kernel::Surd;
