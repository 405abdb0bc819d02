//! Exact-arithmetic engine for the Newton-graded geometry of convenient
//! nondegenerate Laurent polynomials.
//!
//! Starting from a full-dimensional lattice polytope with the origin in its
//! interior and a Laurent polynomial supported on it, the crate computes the
//! graded Jacobian ring with respect to the Newton filtration, the spectrum
//! at infinity, the nilpotent multiplication-by-f operator with its weight
//! filtration, and the Hodge-Tate diagnostics that compare dimension data
//! against the combinatorics of the polytope. All arithmetic is over
//! arbitrary-precision rationals; nothing is floated.

pub mod corpus;
pub mod error;
pub mod hodge;
pub mod jacobian;
pub mod laurent;
pub mod linalg;
pub mod polytope;

pub use error::{Error, Result};
pub use hodge::{
    hodge_tate_check, irregular_hodge_numbers, kkp_report, lefschetz_check, spectrum,
    weight_filtration, HodgeNumbers, HodgeTateCheck, KKPReport, LefschetzVerdict, Spectrum,
    WeightFiltrationData,
};
pub use jacobian::{
    build_graded_jacobian, graded_stratum, mult_f_operator, GradedJacobianRing, GradedPiece,
    NilpotentOperator,
};
pub use laurent::{
    certify_nondegenerate, unit_coefficients, vertex_polynomial, CertificateStatus,
    LaurentPolynomial, NondegeneracyCertificate,
};
pub use linalg::{Q, QMatrix, RowEchelon};
pub use polytope::{Facet, LatticePolytope};
