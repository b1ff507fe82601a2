//! Exact computation of Hilbert depth from Hilbert series.
//!
//! A finitely generated graded module `M` over a polynomial ring in `n`
//! variables has a Hilbert series `H_M(T) = Q_M(T) / (1 - T)^n` with
//! `Q_M` a Laurent polynomial over `Z`.  The Hilbert depth of `M` is
//!
//! ```text
//! hdepth M = max { p : (1 - T)^p * H_M(T) has nonnegative coefficients }
//!          = n - min { q : Q_M(T) / (1 - T)^q has nonnegative coefficients }
//! ```
//!
//! and every series of Hilbert depth `d` splits as a finite sum
//! `H_M = sum_e Q_e(T) / (1 - T)^e` over levels `d <= e <= n` with
//! nonnegative `Q_e`.  This crate decides coefficientwise nonnegativity of
//! `Q / (1 - T)^m` exactly (no truncation guess, no floating point),
//! computes the depth together with machine-checkable certificates,
//! constructs witness decompositions, and evaluates the closed-form series
//! catalog for powers of the maximal ideal and Koszul syzygies.
//!
//! The [`audit`] module complements the exact layer with floating-point
//! checks of the digamma-function inequalities that control the asymptotic
//! behaviour of these depth bounds.
//!
//! Polynomial arithmetic is generic over the integer scalar through
//! [`Coefficient`]; the crate-root aliases fix the default arbitrary
//! precision scalar.  Nothing in the library has overflow semantics: with
//! the default [`Int`] scalar every operation is exact.

pub mod audit;
mod catalog;
mod depth;
mod expansion;
mod poly;
mod positivity;
mod series;

pub use catalog::{
    power_ideal_coefficient, power_ideal_series, syzygy_hilbert_closed, syzygy_hilbert_left,
    syzygy_hilbert_right, syzygy_lemma_params, PowerIdealParams, SyzygyParams,
};
pub use depth::{
    decompose, hdepth_via_multiplication, hdepth_via_numerator, verify_decomposition,
    DecompositionPart, DepthError, DepthReport, HilbertDecomposition,
};
pub use expansion::{
    expanded_coefficient, expanded_coefficient_oracle, hdepth_power_closed_form, lemma4_lhs,
    lemma4_rhs8, lemma4_rhs9, upper_bound_coefficient, ExpansionParams,
};
pub use poly::{binomial, Coefficient, LaurentPoly, ParsePolyError};
pub use positivity::{check_positivity, PositivityCertificate};
pub use series::{RationalSeries, SeriesPrefix};

/// Default exact scalar: arbitrary-precision signed integer.
pub type Int = num::BigInt;

/// Laurent polynomial over the default scalar.
pub type LaurentPolynomial = poly::LaurentPoly<Int>;

/// Rational series `Q / (1 - T)^n` over the default scalar.
pub type Series = series::RationalSeries<Int>;

/// Expansion prefix over the default scalar.
pub type Prefix = series::SeriesPrefix<Int>;

/// Positivity certificate over the default scalar.
pub type Certificate = positivity::PositivityCertificate<Int>;
