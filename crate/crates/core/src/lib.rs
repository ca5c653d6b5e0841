//! Betti diagrams of 2-linear resolutions computed and inverted through graph
//! combinatorics: Fröberg's component-count formula, Boij–Söderberg
//! decomposition, threshold graphs, anti-lecture hall compositions and the
//! lattice simplices they form.
//!
//! All arithmetic is exact. The linear algebra in [`exact`] is generic over
//! [`exact::ExactScalar`]; [`Rational`] (checked 64-bit) is the default and
//! [`BigRational`] is available wherever intermediate values can grow.

pub mod alhc;
pub mod census;
pub mod diagram;
mod error;
pub mod exact;
pub mod graph;
pub mod lattice;
pub mod threshold;

pub use error::{Error, Result};

/// Checked 64-bit rational; overflow is reported, never wrapped.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rational.
pub type BigRational = num_rational::BigRational;
pub type RationalMatrix = exact::Matrix<Rational>;
pub type BigRationalMatrix = exact::Matrix<BigRational>;

pub use alhc::{alhc_to_omega, count_alhc, decompose_module, is_alhc, omega_to_alhc};
pub use diagram::{
    bs_decompose, chordality_certificate, pure_diagram, BettiDiagram, BsCoefficients, Certificate,
    DegreeSequence, ReducedBettiVector,
};
pub use graph::{froberg_vector, is_chordal, Graph, VertexSubset};
pub use threshold::{
    build_graph, omega_to_threshold, threshold_omega, threshold_representative, ThresholdSequence,
};
