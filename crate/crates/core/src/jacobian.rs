//! The Newton-graded Jacobian ring of a convenient Laurent polynomial and
//! the nilpotent multiplication-by-f operator on it.
//!
//! For f with Newton polytope P the ring C[x,x^-1]/(x_1 df/dx_1, ...,
//! x_n df/dx_n) carries the decreasing Newton filtration by the degree
//! function of P. This module computes its associated graded: for each
//! attained degree d the piece A_d is the span of the degree-d monomials
//! modulo the degree-d leading parts of g_i * m over monomials m of degree
//! d - 1, where g_i = x_i df/dx_i. Products in the associated graded drop
//! all terms of lower degree.
//!
//! Nondegeneracy of f is what makes these graded dimensions equal to the
//! honest quotient dimensions. The module does not decide nondegeneracy;
//! it checks the Kouchnirenko volume count (total dimension = normalized
//! volume of P) and vanishing just above the top degree, and reports
//! `DegeneracyDetected` when either fails.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPolynomial, NondegeneracyCertificate};
use crate::linalg::{Q, QMatrix, RowEchelon};
use crate::polytope::LatticePolytope;

/// One graded piece A_d: degree-d monomials modulo relations from degree
/// d - 1.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: Q,
    /// All monomials of degree exactly d, in lexicographic order.
    pub ambient_basis: Vec<Vec<i64>>,
    /// Columns are the degree-d parts of g_i * m, m of degree d - 1.
    pub relation_matrix: QMatrix,
    /// Ambient monomials at the non-pivot columns of the reduced relations;
    /// their cosets form a basis of the quotient.
    pub quotient_basis: Vec<Vec<i64>>,
    reducer: RowEchelon,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.quotient_basis.len()
    }

    /// Coordinates in the quotient basis of the class of an ambient vector.
    pub fn reduce_ambient(&self, mut v: Vec<Q>) -> Vec<Q> {
        assert_eq!(v.len(), self.ambient_basis.len());
        self.reducer.reduce_vector(&mut v);
        self.reducer
            .non_pivots()
            .iter()
            .map(|&j| v[j].clone())
            .collect()
    }
}

/// The associated graded of the Jacobian quotient, all pieces at degrees in
/// [0, n], validated by the volume count.
#[derive(Clone, Debug)]
pub struct GradedJacobianRing {
    polytope: LatticePolytope,
    f: LaurentPolynomial,
    pieces: BTreeMap<Q, GradedPiece>,
    mu: usize,
}

impl GradedJacobianRing {
    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn polynomial(&self) -> &LaurentPolynomial {
        &self.f
    }

    /// Total dimension: the Milnor number.
    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn dimension(&self) -> usize {
        self.polytope.dim()
    }

    /// Degrees with a nonempty monomial stratum, ascending.
    pub fn attained_degrees(&self) -> Vec<Q> {
        self.pieces.keys().cloned().collect()
    }

    pub fn piece(&self, d: &Q) -> Option<&GradedPiece> {
        self.pieces.get(d)
    }

    pub fn pieces(&self) -> impl Iterator<Item = (&Q, &GradedPiece)> {
        self.pieces.iter()
    }

    /// Quotient dimension at each attained degree; this is the spectrum of
    /// f at infinity with multiplicities.
    pub fn graded_dims(&self) -> BTreeMap<Q, usize> {
        self.pieces
            .iter()
            .map(|(d, p)| (d.clone(), p.dim()))
            .collect()
    }

    pub fn dim_at(&self, d: &Q) -> usize {
        self.pieces.get(d).map_or(0, GradedPiece::dim)
    }

    /// Quotient coordinates at degree `d` of the degree-d part of `g`.
    /// Degrees without a piece carry the zero space: the result is empty.
    pub fn reduce_class(&self, d: &Q, g: &LaurentPolynomial) -> Result<Vec<Q>> {
        let Some(piece) = self.pieces.get(d) else {
            return Ok(Vec::new());
        };
        let index: BTreeMap<&Vec<i64>, usize> = piece
            .ambient_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut v = vec![Q::zero(); piece.ambient_basis.len()];
        for (m, c) in g.terms() {
            if self.polytope.degree(m)? == *d {
                let i = *index
                    .get(m)
                    .expect("degree-d monomial belongs to the degree-d stratum");
                v[i] += c;
            }
        }
        Ok(piece.reduce_ambient(v))
    }
}

/// Monomials of degree exactly `d`: the lattice points of d*P not lying in
/// any smaller dilate, in lexicographic order.
pub fn graded_stratum(p: &LatticePolytope, d: &Q) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for m in p.lattice_points(d)? {
        if p.degree(&m)? == *d {
            out.push(m);
        }
    }
    Ok(out)
}

/// Builds every graded piece and runs the consistency gates.
///
/// Gates: the dimensions over degrees in [0, n] must sum to the normalized
/// volume of P, and every piece at degree in (n, n+1] must vanish. A failure
/// means f is degenerate for its Newton polytope (or the asserted
/// certificate was wrong) and surfaces as `DegeneracyDetected`; silent
/// wrong dimensions are never produced.
pub fn build_graded_jacobian(
    f: &LaurentPolynomial,
    p: &LatticePolytope,
    cert: &NondegeneracyCertificate,
) -> Result<GradedJacobianRing> {
    if cert.is_rejected() {
        return Err(Error::CertificateRejected(cert.detail.clone()));
    }
    if !f.is_convenient()? {
        return Err(Error::NotConvenient(
            "origin is not interior to the Newton polytope".into(),
        ));
    }
    let newton = f.newton_polytope()?;
    if !newton.same_vertex_set(p) {
        return Err(Error::PolytopeMismatch(format!(
            "Newton polytope vertices {:?} differ from the supplied polytope",
            newton.vertices()
        )));
    }
    let n = p.dim();
    let top = Q::from_integer((n as i64).into());
    let band_top = Q::from_integer((n as i64 + 1).into());

    // One sweep over the (n+1)-dilate buckets every monomial of degree
    // <= n+1 into its stratum; lex order within each stratum is inherited.
    let mut strata: BTreeMap<Q, Vec<Vec<i64>>> = BTreeMap::new();
    for m in p.lattice_points(&band_top)? {
        let d = p.degree(&m)?;
        strata.entry(d).or_default().push(m);
    }

    let gens: Vec<LaurentPolynomial> = (0..n).map(|i| f.log_derivative(i)).collect();
    let one = Q::one();

    let mut pieces: BTreeMap<Q, GradedPiece> = BTreeMap::new();
    let mut band_mass = 0usize;
    for (d, ambient) in &strata {
        let index: BTreeMap<&Vec<i64>, usize> =
            ambient.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let prev = d - &one;
        let mut relation_rows: Vec<Vec<Q>> = Vec::new();
        if let Some(lower) = strata.get(&prev) {
            for g in &gens {
                for m in lower {
                    let mut row = vec![Q::zero(); ambient.len()];
                    let mut nonzero = false;
                    for (u, c) in g.terms() {
                        let w: Vec<i64> = u.iter().zip(m).map(|(a, b)| a + b).collect();
                        if p.degree(&w)? == *d {
                            let i = *index
                                .get(&w)
                                .expect("degree-d product term lies in the stratum");
                            row[i] += c;
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        relation_rows.push(row);
                    }
                }
            }
        }
        let relation_matrix = QMatrix::from_rows(relation_rows.clone()).transpose();
        let relation_matrix = if relation_rows.is_empty() {
            QMatrix::zeros(ambient.len(), 0)
        } else {
            relation_matrix
        };
        let reducer = RowEchelon::new(if relation_rows.is_empty() {
            QMatrix::zeros(0, ambient.len())
        } else {
            QMatrix::from_rows(relation_rows)
        });
        let quotient_basis: Vec<Vec<i64>> = reducer
            .non_pivots()
            .iter()
            .map(|&j| ambient[j].clone())
            .collect();
        let piece = GradedPiece {
            degree: d.clone(),
            ambient_basis: ambient.clone(),
            relation_matrix,
            quotient_basis,
            reducer,
        };
        if *d > top {
            band_mass += piece.dim();
            if piece.dim() > 0 {
                return Err(Error::DegeneracyDetected(format!(
                    "nonzero piece of dimension {} at degree {} above the top degree {}",
                    piece.dim(),
                    d,
                    n
                )));
            }
        } else {
            pieces.insert(d.clone(), piece);
        }
    }
    debug_assert_eq!(band_mass, 0);

    let mu: usize = pieces.values().map(GradedPiece::dim).sum();
    let vol = p.normalized_volume()?;
    if num_bigint::BigInt::from(mu) != vol {
        return Err(Error::DegeneracyDetected(format!(
            "graded dimensions sum to {mu} but the normalized volume is {vol}; \
             f is degenerate for its Newton polytope"
        )));
    }
    Ok(GradedJacobianRing {
        polytope: p.clone(),
        f: f.clone(),
        pieces,
        mu,
    })
}

/// The multiplication-by-f operator on the graded ring: block d maps A_d to
/// A_{d+1} by multiplying by f, keeping the degree-(d+1) part, and reducing.
/// The assembled matrix on the direct sum of all pieces is nilpotent.
#[derive(Clone, Debug)]
pub struct NilpotentOperator {
    /// (degree, quotient dimension) per attained degree, ascending.
    dims: Vec<(Q, usize)>,
    /// Source degree d -> matrix of shape dim A_{d+1} x dim A_d.
    blocks: BTreeMap<Q, QMatrix>,
    total_matrix: QMatrix,
}

impl NilpotentOperator {
    pub fn dims(&self) -> &[(Q, usize)] {
        &self.dims
    }

    pub fn dim_at(&self, d: &Q) -> usize {
        self.dims
            .iter()
            .find(|(deg, _)| deg == d)
            .map_or(0, |(_, k)| *k)
    }

    pub fn block(&self, d: &Q) -> Option<&QMatrix> {
        self.blocks.get(d)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&Q, &QMatrix)> {
        self.blocks.iter()
    }

    pub fn total_matrix(&self) -> &QMatrix {
        &self.total_matrix
    }

    /// Wraps a bare square matrix; used for synthetic operators in weight
    /// filtration computations.
    pub fn from_total_matrix(m: QMatrix) -> Self {
        assert_eq!(m.rows(), m.cols(), "operator matrix must be square");
        let dims = vec![(Q::zero(), m.rows())];
        NilpotentOperator {
            dims,
            blocks: BTreeMap::new(),
            total_matrix: m,
        }
    }

    /// Matrix of the `power`-fold application starting at degree `source`:
    /// the product of the intermediate blocks, with absent degrees carrying
    /// the zero space. Shape: dim A_{source+power} x dim A_{source}.
    pub fn power_block(&self, source: &Q, power: usize) -> QMatrix {
        let one = Q::one();
        let mut acc = QMatrix::identity(self.dim_at(source));
        let mut at = source.clone();
        for _ in 0..power {
            let next = &at + &one;
            let block = match self.blocks.get(&at) {
                Some(b) => b.clone(),
                None => QMatrix::zeros(self.dim_at(&next), self.dim_at(&at)),
            };
            acc = block.mul(&acc);
            at = next;
        }
        acc
    }
}

/// Assembles the multiplication operator of a validated ring.
pub fn mult_f_operator(ring: &GradedJacobianRing) -> Result<NilpotentOperator> {
    let f = ring.polynomial();
    let one = Q::one();
    let dims: Vec<(Q, usize)> = ring
        .pieces()
        .map(|(d, piece)| (d.clone(), piece.dim()))
        .collect();
    let mut offsets: BTreeMap<Q, usize> = BTreeMap::new();
    let mut total_dim = 0usize;
    for (d, k) in &dims {
        offsets.insert(d.clone(), total_dim);
        total_dim += k;
    }
    let mut blocks: BTreeMap<Q, QMatrix> = BTreeMap::new();
    let mut total = QMatrix::zeros(total_dim, total_dim);
    for (d, piece) in ring.pieces() {
        let target_degree = d + &one;
        let target_dim = ring.dim_at(&target_degree);
        let mut columns: Vec<Vec<Q>> = Vec::with_capacity(piece.dim());
        for b in &piece.quotient_basis {
            let shifted = LaurentPolynomial::from_terms(
                f.dim(),
                f.terms()
                    .map(|(u, c)| (u.iter().zip(b).map(|(a, e)| a + e).collect(), c.clone())),
            );
            columns.push(ring.reduce_class(&target_degree, &shifted)?);
        }
        let block = QMatrix::from_columns(target_dim, &columns);
        if target_dim > 0 && piece.dim() > 0 {
            let r0 = offsets[&target_degree];
            let c0 = offsets[d];
            for r in 0..target_dim {
                for c in 0..piece.dim() {
                    total.set(r0 + r, c0 + c, block.get(r, c).clone());
                }
            }
        }
        blocks.insert(d.clone(), block);
    }
    Ok(NilpotentOperator {
        dims,
        blocks,
        total_matrix: total,
    })
}
