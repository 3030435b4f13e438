//! # heckelab
//!
//! Numerical laboratory for the family of quadratic Hecke L-functions
//! `L(s, chi_{(1+i)^5 pi})` over the Gaussian field Q(i), indexed by primary
//! primes `pi = 1 mod (1+i)^3`. The pipeline:
//!
//! 1. [`gaussian`] — exact arithmetic in Z\[i\], primary normalization, and a
//!    sieve for primary Gaussian primes.
//! 2. [`quadchar`] — the quadratic residue symbol in Z\[i\] (reciprocity-based,
//!    with an Euler-criterion oracle), Hecke characters mod `(1+i)^5 pi`, and
//!    multiplicative coefficient tables over odd ideals.
//! 3. [`special`] — complex log-gamma, digamma, normalized incomplete gamma,
//!    Hurwitz/Riemann zeta, and the Dedekind zeta of Q(i).
//! 4. [`lfunc`] — approximate-functional-equation evaluation of `L(s, chi)`,
//!    the completed function Lambda, and a real Hardy-type function on the
//!    critical line.
//! 5. [`zeros`] — grid-scan + bisection location of critical-line zeros with
//!    count diagnostics.
//! 6. [`density`] — test/weight function families, the empirical 1-level
//!    density, and explicit-formula / asymptotic diagnostics.
//! 7. [`ratios`] — the ratios-conjecture prediction for the same statistic.
//! 8. [`pipeline`] + [`cli`] — family sweeps with caching and parallelism, and
//!    the command-line front end.

pub mod cli;
pub mod density;
pub mod error;
pub mod gaussian;
pub mod lfunc;
pub mod pipeline;
pub mod quadchar;
pub mod ratios;
pub mod special;
pub mod verify;
pub mod zeros;

pub use error::Error;

/// Bumped whenever an output file format or a numerical contract changes in a
/// way that invalidates caches.
pub const SCHEMA_VERSION: u32 = 1;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
