//! Laurent polynomials with exact rational coefficients.
//!
//! Exponent vectors live in Z^n; coefficients are arbitrary-precision
//! rationals. Terms are kept in a BTreeMap keyed by exponent vector, so the
//! term order is lexicographic and every traversal is deterministic. Zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::polytope::LatticePolytope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    dim: usize,
    terms: BTreeMap<Vec<i64>, Q>,
}

impl LaurentPolynomial {
    pub fn zero(dim: usize) -> Self {
        LaurentPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c * x^m`; a zero coefficient yields the zero polynomial.
    pub fn monomial(dim: usize, m: Vec<i64>, c: Q) -> Self {
        assert_eq!(m.len(), dim, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPolynomial { dim, terms }
    }

    pub fn constant(dim: usize, c: Q) -> Self {
        Self::monomial(dim, vec![0; dim], c)
    }

    /// Collects terms, summing duplicates and dropping zero sums.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<i64>, Q)>) -> Self {
        let mut acc: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), dim, "exponent vector length");
            let slot = acc.entry(m).or_insert_with(Q::zero);
            *slot += c;
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPolynomial { dim, terms: acc }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[i64]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.dim, other.dim);
        LaurentPolynomial::from_terms(
            self.dim,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Q) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.dim,
            self.terms.iter().map(|(m, v)| (m.clone(), v * c)),
        )
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.dim, other.dim);
        let mut acc: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Vec<i64> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let slot = acc.entry(m).or_insert_with(Q::zero);
                *slot += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPolynomial {
            dim: self.dim,
            terms: acc,
        }
    }

    /// The logarithmic derivative along `axis` (0-based):
    /// `x_i d/dx_i` acts on a term `c x^m` as multiplication by `m_i`.
    pub fn log_derivative(&self, axis: usize) -> LaurentPolynomial {
        assert!(axis < self.dim, "axis out of range");
        LaurentPolynomial::from_terms(
            self.dim,
            self.terms.iter().map(|(m, c)| {
                (m.clone(), c * Q::from_integer(m[axis].into()))
            }),
        )
    }

    /// Convex hull of the support.
    pub fn newton_polytope(&self) -> Result<LatticePolytope> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        LatticePolytope::from_points(self.dim, self.support())
    }

    /// True iff the origin is strictly interior to the Newton polytope; a
    /// support that is not full-dimensional fails without error.
    pub fn is_convenient(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match self.newton_polytope() {
            Ok(p) => Ok(p.has_interior_origin()),
            Err(Error::InvalidPolytope(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Terms whose degree under the polytope's facet forms is exactly `d`.
    pub fn degree_part(&self, p: &LatticePolytope, d: &Q) -> Result<LaurentPolynomial> {
        let mut kept = BTreeMap::new();
        for (m, c) in &self.terms {
            if p.degree(m)? == *d {
                kept.insert(m.clone(), c.clone());
            }
        }
        Ok(LaurentPolynomial {
            dim: self.dim,
            terms: kept,
        })
    }

    /// Exact terms as sorted `[exponent, coefficient-string]` pairs.
    pub fn to_json_terms(&self) -> Vec<(Vec<i64>, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), format_rational(c)))
            .collect()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let names: Vec<String> = if self.dim <= 3 {
            ["x", "y", "z"][..self.dim]
                .iter()
                .map(|s| s.to_string())
                .collect()
        } else {
            (1..=self.dim).map(|i| format!("x{i}")).collect()
        };
        let mut first = true;
        for (m, c) in &self.terms {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (sign, mag) = if c < &Q::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(out, "-")?;
                }
                first = false;
            } else {
                write!(out, " {sign} ")?;
            }
            let one = Q::from_integer(1.into());
            if mono.is_empty() {
                write!(out, "{}", format_rational(&mag))?;
            } else if mag == one {
                write!(out, "{mono}")?;
            } else {
                write!(out, "{}*{mono}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Outcome of the syntactic nondegeneracy test. `CertifiedSmoothVertex`
/// is a proof; `Asserted` shifts responsibility to the caller, backed by the
/// downstream dimension gate; `Rejected` blocks the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateStatus {
    CertifiedSmoothVertex,
    Asserted,
    Rejected,
}

impl fmt::Display for CertificateStatus {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateStatus::CertifiedSmoothVertex => "certified-smooth-vertex",
            CertificateStatus::Asserted => "asserted",
            CertificateStatus::Rejected => "rejected",
        };
        write!(out, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NondegeneracyCertificate {
    pub status: CertificateStatus,
    pub detail: String,
}

impl NondegeneracyCertificate {
    pub fn asserted(detail: impl Into<String>) -> Self {
        NondegeneracyCertificate {
            status: CertificateStatus::Asserted,
            detail: detail.into(),
        }
    }

    pub fn rejected(detail: impl Into<String>) -> Self {
        NondegeneracyCertificate {
            status: CertificateStatus::Rejected,
            detail: detail.into(),
        }
    }

    pub fn is_rejected(&self) -> bool {
        self.status == CertificateStatus::Rejected
    }
}

/// `f = sum a_v x^v` over the vertices of `p`. Coefficients are keyed by
/// position in the vertex list and must all be present and nonzero.
pub fn vertex_polynomial(
    p: &LatticePolytope,
    a: &BTreeMap<usize, Q>,
) -> Result<LaurentPolynomial> {
    let nv = p.vertices().len();
    for (&i, c) in a {
        if i >= nv {
            return Err(Error::Malformed(format!(
                "coefficient index {i} out of range for {nv} vertices"
            )));
        }
        if c.is_zero() {
            return Err(Error::ZeroCoefficient(i));
        }
    }
    for i in 0..nv {
        if !a.contains_key(&i) {
            return Err(Error::MissingCoefficient(i));
        }
    }
    Ok(LaurentPolynomial::from_terms(
        p.dim(),
        p.vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), a[&i].clone())),
    ))
}

/// The all-ones coefficient vector for `p`.
pub fn unit_coefficients(p: &LatticePolytope) -> BTreeMap<usize, Q> {
    (0..p.vertices().len())
        .map(|i| (i, Q::from_integer(1.into())))
        .collect()
}

/// Degree of a single monomial under the facet forms of `p`.
pub fn newton_degree(m: &[i64], p: &LatticePolytope) -> Result<Q> {
    p.degree(m)
}

/// Degree of a nonzero polynomial: the maximum over its support.
pub fn newton_degree_poly(f: &LaurentPolynomial, p: &LatticePolytope) -> Result<Q> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut best: Option<Q> = None;
    for (m, _) in f.terms() {
        let d = p.degree(m)?;
        best = Some(match best {
            None => d,
            Some(b) => b.max(d),
        });
    }
    Ok(best.expect("nonzero polynomial has a term"))
}

/// Syntactic nondegeneracy certificate. A convenient `f` is certified when
/// its support is exactly the vertex set of its Newton polytope and every
/// facet vertex set is a lattice basis: each facet restriction is then a
/// coordinate sum up to a monomial change of variables and rescaling, and
/// such sums have no torus critical points. Anything else is reported as
/// `asserted` so that the downstream dimension gate carries the burden.
pub fn certify_nondegenerate(f: &LaurentPolynomial) -> Result<NondegeneracyCertificate> {
    if !f.is_convenient()? {
        return Err(Error::NotConvenient(
            "origin is not interior to the Newton polytope".into(),
        ));
    }
    let p = f.newton_polytope()?;
    let support = f.support();
    if support.len() != p.vertices().len() {
        return Ok(NondegeneracyCertificate::asserted(
            "support contains non-vertex monomials; nondegeneracy not decided syntactically",
        ));
    }
    if !p.is_smooth() {
        return Ok(NondegeneracyCertificate::asserted(
            "a facet vertex set is not a lattice basis; nondegeneracy not decided syntactically",
        ));
    }
    Ok(NondegeneracyCertificate {
        status: CertificateStatus::CertifiedSmoothVertex,
        detail: "support is the vertex set of a polytope with unimodular facets; \
                 every facet restriction is a coordinate sum up to rescaling"
            .into(),
    })
}

/// Parses "p" or "p/q" with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Malformed(format!("rational {s:?}: expected \"p\" or \"p/q\""));
    let mut split = s.splitn(2, '/');
    let num_s = split.next().ok_or_else(bad)?.trim();
    let num: num_bigint::BigInt = num_s.parse().map_err(|_| bad())?;
    match split.next() {
        None => Ok(Q::from_integer(num)),
        Some(den_s) => {
            let den: num_bigint::BigInt = den_s.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Malformed(format!("rational {s:?}: zero denominator")));
            }
            Ok(Q::new(num, den))
        }
    }
}

/// Renders a rational as "p" or "p/q" in lowest terms.
pub fn format_rational(q: &Q) -> String {
    q.to_string()
}

/// Parses a JSON object mapping vertex indices (as strings) to rational
/// strings, e.g. `{"0": "1", "1": "-2/3"}`.
pub fn parse_coefficient_map(json: &str) -> Result<BTreeMap<usize, Q>> {
    let raw: BTreeMap<String, String> = serde_json::from_str(json)
        .map_err(|e| Error::Malformed(format!("coefficient JSON: {e}")))?;
    let mut out = BTreeMap::new();
    for (k, v) in raw {
        let idx: usize = k
            .parse()
            .map_err(|_| Error::Malformed(format!("coefficient key {k:?} is not an index")))?;
        out.insert(idx, parse_rational(&v)?);
    }
    Ok(out)
}
