//! Error type shared by every module of the engine.

use thiserror::Error;

/// Engine-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Vertex list rejected by the `LatticePolytope` constructor.
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    /// An operation that needs the origin strictly inside the polytope
    /// (facet forms, Newton degrees) was called on a polytope where it is
    /// on the boundary or outside.
    #[error("origin is not strictly interior to the polytope")]
    OriginNotInterior,

    /// Dual polytope requested for a polytope with non-integral facet forms.
    #[error("polytope is not reflexive: {0}")]
    NotReflexive(String),

    /// h-vector or facet triangulation requested where simpliciality is
    /// required and absent.
    #[error("polytope is not simplicial: {0}")]
    NotSimplicial(String),

    /// Dilation factors must be nonnegative.
    #[error("dilation factor must be nonnegative, got {0}")]
    NegativeDilation(String),

    /// The zero polynomial has no Newton polytope or Newton degree.
    #[error("the zero polynomial has no Newton data")]
    ZeroPolynomial,

    /// Coefficient vector lacks an entry for the named vertex.
    #[error("missing coefficient for vertex {0}")]
    MissingCoefficient(usize),

    /// Coefficient vectors must be entrywise nonzero.
    #[error("coefficient for vertex {0} is zero")]
    ZeroCoefficient(usize),

    /// The origin is not interior to the Newton polytope of f.
    #[error("polynomial is not convenient: {0}")]
    NotConvenient(String),

    /// Newton polytope of f differs from the polytope the caller supplied.
    #[error("Newton polytope mismatch: {0}")]
    PolytopeMismatch(String),

    /// A rejected nondegeneracy certificate was passed to the graded build.
    #[error("nondegeneracy certificate was rejected: {0}")]
    CertificateRejected(String),

    /// The graded dimension count contradicts the normalized volume, so the
    /// input cannot be nondegenerate.
    #[error("degeneracy detected: {0}")]
    DegeneracyDetected(String),

    /// Graded dimensions fail the d <-> n-d symmetry.
    #[error("spectrum asymmetry: {0}")]
    SpectrumAsymmetry(String),

    /// Weight filtration requested for an operator that is not nilpotent.
    #[error("operator is not nilpotent: {0}")]
    NotNilpotent(String),

    /// Unreadable or syntactically invalid input data.
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable kebab-case tag used in structured failure reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPolytope(_) => "invalid-polytope",
            Error::OriginNotInterior => "origin-not-interior",
            Error::NotReflexive(_) => "not-reflexive",
            Error::NotSimplicial(_) => "not-simplicial",
            Error::NegativeDilation(_) => "negative-dilation",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::MissingCoefficient(_) => "missing-coefficient",
            Error::ZeroCoefficient(_) => "zero-coefficient",
            Error::NotConvenient(_) => "not-convenient",
            Error::PolytopeMismatch(_) => "polytope-mismatch",
            Error::CertificateRejected(_) => "certificate-rejected",
            Error::DegeneracyDetected(_) => "degeneracy-detected",
            Error::SpectrumAsymmetry(_) => "spectrum-asymmetry",
            Error::NotNilpotent(_) => "not-nilpotent",
            Error::Malformed(_) => "malformed-input",
        }
    }

    /// True for the two errors that indicate a mathematically inconsistent
    /// computation rather than unusable input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::DegeneracyDetected(_) | Error::SpectrumAsymmetry(_)
        )
    }
}
