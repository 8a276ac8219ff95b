//! Exact combinatorics and linear algebra for tensor products of
//! two-dimensional evaluation modules of quantum affine sl2.
//!
//! A word of even integers stands for such a tensor product; the central
//! statistic is the dimension `h(w)` of the space of trivial submodules.
//! The crate computes `h(w)` exactly (as a nullity over the field of
//! rational functions in `q`), together with the combinatorial data that
//! controls it:
//!
//! - [`word`]: words, their symmetries (shift, slide, reversal), gap
//!   factorization, conf-connectivity, and canonical forms for table keys;
//! - [`arc`]: arc configurations with the Catalan, irreducible, steady and
//!   standard classes, and intersection polynomials;
//! - [`qchar`]: q-characters, dominant monomials, composition-factor
//!   peeling, and the closed-form character bound;
//! - [`scalar`]: exact rational functions in `q` and fraction-free linear
//!   algebra;
//! - [`rep`]: generator actions, Catalan bases, R-matrices, singular
//!   vectors, exact `h(w)`, pivots, and fast rule-based evaluation;
//! - [`degeneracy`]: generic singular vectors, hyperplane restriction, and
//!   degeneracy graphs;
//! - [`table`]: reproduction of the classification tables and the
//!   conjecture-verification harness.
//!
//! All values are immutable after construction and all operations are pure,
//! so distinct words can be processed concurrently; results never depend on
//! scheduling.
//!
//! See the `examples/` directory for one runnable program per capability,
//! and the `arcword` binary for a command-line front end.

pub mod arc;
pub mod degeneracy;
pub mod qchar;
pub mod rep;
pub mod scalar;
pub mod signs;
pub mod table;
pub mod word;

use std::fmt;

pub use arc::{
    all_configs, arc_count_by_color, catalan_configs, intersection_polynomial,
    irreducible_configs, standard_config, steady_configs, ArcConfig, GeneralizedProduct,
};
pub use qchar::{
    dominant_factorize, h_char_closed, h_char_coeff, overpartition_class_count,
    peel_composition_factors, word_qchar, EllMonomial, QCharacter, StringSet,
};
pub use rep::{
    h_exact, h_report, h_rules, hom_dim, hom_space, pivots, sigma_vector, HomSpace,
    SingularVector,
};
pub use scalar::{qint, QMat, QRat};
pub use signs::SignSeq;
pub use word::{ConfPartition, Word};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text could not be parsed.
    Parse(String),
    /// Input violates a documented precondition.
    Domain(String),
    /// An internal consistency check failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
