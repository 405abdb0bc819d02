//! Full-dimensional lattice polytopes and the geometry the grading needs.
//!
//! Conventions. A polytope is given by its vertex list in Z^n and must be
//! full-dimensional. Facets are stored as primitive integral affine
//! inequalities `normal . x <= offset`, tight exactly on the facet. When the
//! origin is strictly interior every offset is positive and each facet
//! carries the unique rational linear form `L = normal / offset` with
//! `L(v) = 1` on the facet and `L(w) < 1` on every other vertex; those forms
//! induce the piecewise-linear degree used throughout the engine.
//!
//! Enumeration is exact and intended for desk scale (dimension <= 4, a few
//! dozen vertices): facet candidates are solved from n-subsets of the input
//! points, so costs grow binomially with the vertex count.

use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linalg::{Q, QMatrix, RowEchelon};

/// A facet of a polytope with interior origin: the unique linear form equal
/// to 1 on the facet and strictly below 1 on all other vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub supporting_form: Vec<Q>,
    /// Ascending indices into the polytope's vertex list.
    pub vertex_indices: Vec<usize>,
}

/// Primitive integral supporting inequality `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct AffineFacet {
    normal: Vec<BigInt>,
    offset: BigInt,
    point_indices: Vec<usize>,
}

/// A full-dimensional lattice polytope, validated on construction: the
/// vertex list is nonempty, deduplicated, affinely spanning, and every
/// listed point is a true vertex of the hull.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facet_data: Vec<AffineFacet>,
    /// `normal / offset` per facet, present iff all offsets are positive,
    /// i.e. iff the origin is strictly interior.
    interior_forms: Option<Vec<Vec<Q>>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}
impl Eq for LatticePolytope {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    /// Validates and stores a vertex list. Every listed point must be a
    /// vertex of the hull; use [`LatticePolytope::from_points`] to extract
    /// the hull of an arbitrary point set instead.
    pub fn new(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPolytope("dimension must be positive".into()));
        }
        if vertices.is_empty() {
            return Err(Error::InvalidPolytope("empty vertex list".into()));
        }
        if let Some(bad) = vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::InvalidPolytope(format!(
                "vertex {bad:?} has {} coordinates, expected {dim}",
                bad.len()
            )));
        }
        let distinct: BTreeSet<&Vec<i64>> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidPolytope("duplicate vertex".into()));
        }
        if affine_rank(&vertices) != dim {
            return Err(Error::InvalidPolytope(format!(
                "vertices span a proper affine subspace, not all of R^{dim}"
            )));
        }
        let facet_data = enumerate_affine_facets(dim, &vertices);
        for (i, v) in vertices.iter().enumerate() {
            if !is_hull_vertex(dim, i, &facet_data) {
                return Err(Error::InvalidPolytope(format!(
                    "listed point {v:?} is not a vertex of the hull"
                )));
            }
        }
        let interior_forms = interior_forms(&facet_data);
        Ok(LatticePolytope {
            dim,
            vertices,
            facet_data,
            interior_forms,
        })
    }

    /// Convex hull of an arbitrary finite point set: duplicates are merged
    /// and non-vertex points dropped. The vertex list is sorted
    /// lexicographically.
    pub fn from_points(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPolytope("dimension must be positive".into()));
        }
        if let Some(bad) = points.iter().find(|v| v.len() != dim) {
            return Err(Error::InvalidPolytope(format!(
                "point {bad:?} has {} coordinates, expected {dim}",
                bad.len()
            )));
        }
        let distinct: Vec<Vec<i64>> = points
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if distinct.is_empty() {
            return Err(Error::InvalidPolytope("empty point list".into()));
        }
        if affine_rank(&distinct) != dim {
            return Err(Error::InvalidPolytope(format!(
                "points span a proper affine subspace, not all of R^{dim}"
            )));
        }
        let facet_data = enumerate_affine_facets(dim, &distinct);
        let vertices: Vec<Vec<i64>> = distinct
            .iter()
            .enumerate()
            .filter(|(i, _)| is_hull_vertex(dim, *i, &facet_data))
            .map(|(_, v)| v.clone())
            .collect();
        Self::new(dim, vertices)
    }

    /// Reads `{"dim": n, "vertices": [[..], ..]}`; non-integral coordinate
    /// entries are rejected by the parser.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let pf: PolytopeFile = serde_json::from_str(s)
            .map_err(|e| Error::Malformed(format!("polytope JSON: {e}")))?;
        Self::new(pf.dim, pf.vertices)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// True iff the origin is strictly interior.
    pub fn has_interior_origin(&self) -> bool {
        self.interior_forms.is_some()
    }

    /// Vertex-set equality, ignoring listing order.
    pub fn same_vertex_set(&self, other: &LatticePolytope) -> bool {
        self.dim == other.dim
            && self.vertices.iter().collect::<BTreeSet<_>>()
                == other.vertices.iter().collect::<BTreeSet<_>>()
    }

    /// Facets normalized as `L = 1` supporting forms, sorted
    /// lexicographically by form. Requires the origin strictly interior.
    pub fn facets(&self) -> Result<Vec<Facet>> {
        let forms = self
            .interior_forms
            .as_ref()
            .ok_or(Error::OriginNotInterior)?;
        let mut out: Vec<Facet> = forms
            .iter()
            .zip(&self.facet_data)
            .map(|(form, af)| Facet {
                supporting_form: form.clone(),
                vertex_indices: af.point_indices.clone(),
            })
            .collect();
        out.sort_by(|a, b| a.supporting_form.cmp(&b.supporting_form));
        Ok(out)
    }

    /// The piecewise-linear degree `max_sigma L_sigma(m)`: 0 exactly at the
    /// origin, 1 on the boundary, linear on each cone over a facet.
    pub fn degree(&self, m: &[i64]) -> Result<Q> {
        let forms = self
            .interior_forms
            .as_ref()
            .ok_or(Error::OriginNotInterior)?;
        debug_assert_eq!(m.len(), self.dim);
        Ok(forms
            .iter()
            .map(|form| dot_form(form, m))
            .max()
            .expect("full-dimensional polytope has at least one facet"))
    }

    /// Reflexive: origin interior and every facet form integral.
    pub fn is_reflexive(&self) -> bool {
        match &self.interior_forms {
            None => false,
            Some(forms) => forms
                .iter()
                .all(|f| f.iter().all(|c| c.denom().is_one_value())),
        }
    }

    /// The polar dual, whose vertices are the negated facet forms.
    pub fn dual_polytope(&self) -> Result<LatticePolytope> {
        let forms = self
            .interior_forms
            .as_ref()
            .ok_or(Error::OriginNotInterior)?;
        let mut dual_vertices = Vec::with_capacity(forms.len());
        for form in forms {
            let mut v = Vec::with_capacity(self.dim);
            for c in form {
                if !c.denom().is_one_value() {
                    return Err(Error::NotReflexive(format!(
                        "facet form {} is not integral",
                        format_form(form)
                    )));
                }
                let n = -c.numer();
                v.push(i64::try_from(&n).map_err(|_| {
                    Error::Malformed("facet form coordinate out of range".into())
                })?);
            }
            dual_vertices.push(v);
        }
        dual_vertices.sort();
        LatticePolytope::new(self.dim, dual_vertices)
    }

    /// Every facet has exactly `dim` vertices.
    pub fn is_simplicial(&self) -> bool {
        self.facet_data
            .iter()
            .all(|f| f.point_indices.len() == self.dim)
    }

    /// Simplicial with every facet's vertex set a basis of the lattice
    /// (|det| = 1).
    pub fn is_smooth(&self) -> bool {
        self.facet_data.iter().all(|f| {
            f.point_indices.len() == self.dim
                && facet_vertex_det(&self.vertices, &f.point_indices).abs() == BigInt::from(1)
        })
    }

    /// Lattice points of the dilate `d * P` for rational `d >= 0`, in
    /// lexicographic order.
    pub fn lattice_points(&self, d: &Q) -> Result<Vec<Vec<i64>>> {
        if d.is_negative() {
            return Err(Error::NegativeDilation(d.to_string()));
        }
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let min = self.vertices.iter().map(|v| v[i]).min().unwrap();
            let max = self.vertices.iter().map(|v| v[i]).max().unwrap();
            lo.push(rational_ceil_i64(&(d * Q::from_integer(min.into())))?);
            hi.push(rational_floor_i64(&(d * Q::from_integer(max.into())))?);
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Ok(Vec::new());
        }
        let scaled_offsets: Vec<Q> = self
            .facet_data
            .iter()
            .map(|f| Q::from_integer(f.offset.clone()) * d)
            .collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'scan: loop {
            let inside = self
                .facet_data
                .iter()
                .zip(&scaled_offsets)
                .all(|(f, cap)| Q::from_integer(dot_int(&f.normal, &cur)) <= *cap);
            if inside {
                out.push(cur.clone());
            }
            let mut i = self.dim;
            loop {
                if i == 0 {
                    break 'scan;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] <= hi[i] {
                    break;
                }
                cur[i] = lo[i];
            }
        }
        Ok(out)
    }

    /// `n! * vol(P)` via the star expansion over the origin: each facet is
    /// triangulated, each simplex contributes |det| of its vertex matrix,
    /// signed by the side of the origin. With the origin interior all signs
    /// are +1 and this is the classical star triangulation.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for f in &self.facet_data {
            if f.offset.is_zero() {
                continue;
            }
            let pts: Vec<Vec<i64>> = f
                .point_indices
                .iter()
                .map(|&i| self.vertices[i].clone())
                .collect();
            let tri = if pts.len() == self.dim {
                vec![(0..self.dim).collect::<Vec<usize>>()]
            } else {
                triangulate_in_hyperplane(self.dim, &pts, &f.normal).map_err(|e| {
                    Error::NotSimplicial(format!("facet triangulation failed: {e}"))
                })?
            };
            let mut cone = BigInt::zero();
            for simplex in tri {
                let sel: Vec<usize> = simplex;
                let d = facet_vertex_det(&pts, &sel).abs();
                cone += d;
            }
            if f.offset.is_negative() {
                total -= cone;
            } else {
                total += cone;
            }
        }
        debug_assert!(total.is_positive(), "volume of a full-dimensional polytope");
        Ok(total)
    }

    /// h-vector of the boundary complex; simplicial polytopes only.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        if !self.is_simplicial() {
            let bad = self
                .facet_data
                .iter()
                .find(|f| f.point_indices.len() != self.dim)
                .expect("non-simplicial polytope has an offending facet");
            return Err(Error::NotSimplicial(format!(
                "facet with vertices {:?} has {} vertices in dimension {}",
                bad.point_indices,
                bad.point_indices.len(),
                self.dim
            )));
        }
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facet_data {
            let k = f.point_indices.len();
            for mask in 1u32..(1 << k) {
                let subset: Vec<usize> = (0..k)
                    .filter(|j| mask & (1 << j) != 0)
                    .map(|j| f.point_indices[j])
                    .collect();
                faces.insert(subset);
            }
        }
        // f[i] counts faces with i+1 vertices; the empty face contributes
        // f_{-1} = 1 inside the transform.
        let mut fvec = vec![0i64; self.dim];
        for face in &faces {
            fvec[face.len() - 1] += 1;
        }
        let n = self.dim as i64;
        let mut h = Vec::with_capacity(self.dim + 1);
        for k in 0..=n {
            let mut hk = 0i64;
            for i in 0..=k {
                let fi = if i == 0 { 1 } else { fvec[(i - 1) as usize] };
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                hk += sign * binomial(n - i, k - i) * fi;
            }
            h.push(hk);
        }
        Ok(h)
    }
}

/// Affine rank of a point set (dimension of the affine span).
fn affine_rank(points: &[Vec<i64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<Q>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(a, b)| Q::from_integer((a - b).into()))
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows).rank()
}

/// All supporting hyperplanes spanned by `dim`-subsets of the points, as
/// primitive oriented inequalities. The input must be full-dimensional.
fn enumerate_affine_facets(dim: usize, points: &[Vec<i64>]) -> Vec<AffineFacet> {
    let mut seen: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    for subset in Combinations::new(points.len(), dim) {
        let Some((normal, offset)) = hyperplane_through(dim, points, &subset) else {
            continue;
        };
        let mut any_less = false;
        let mut any_greater = false;
        for p in points {
            match dot_int(&normal, p).cmp(&offset) {
                std::cmp::Ordering::Less => any_less = true,
                std::cmp::Ordering::Greater => any_greater = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        if any_less && any_greater {
            continue;
        }
        let (normal, offset) = if any_greater {
            (normal.iter().map(|c| -c).collect(), -offset)
        } else {
            (normal, offset)
        };
        seen.insert((normal, offset));
    }
    seen.into_iter()
        .map(|(normal, offset)| {
            let point_indices = points
                .iter()
                .enumerate()
                .filter(|(_, p)| dot_int(&normal, p) == offset)
                .map(|(i, _)| i)
                .collect();
            AffineFacet {
                normal,
                offset,
                point_indices,
            }
        })
        .collect()
}

/// Solves for the affine hyperplane through the chosen points; `None` when
/// they do not span one. The result is primitive integral, unoriented.
fn hyperplane_through(
    dim: usize,
    points: &[Vec<i64>],
    subset: &[usize],
) -> Option<(Vec<BigInt>, BigInt)> {
    // Rows (p | -1); the kernel vector (c, beta) satisfies c.p = beta.
    let rows: Vec<Vec<Q>> = subset
        .iter()
        .map(|&i| {
            points[i]
                .iter()
                .map(|&x| Q::from_integer(x.into()))
                .chain(std::iter::once(-Q::from_integer(1.into())))
                .collect()
        })
        .collect();
    let ech = RowEchelon::new(QMatrix::from_rows(rows));
    if ech.rank() != dim {
        return None;
    }
    let free = ech.non_pivots()[0];
    let mut kernel = vec![Q::zero(); dim + 1];
    kernel[free] = Q::from_integer(1.into());
    for (i, &p) in ech.pivots().iter().enumerate() {
        kernel[p] = -ech.row(i)[free].clone();
    }
    let mut scale = BigInt::from(1);
    for k in &kernel {
        scale = scale.lcm(k.denom());
    }
    let ints: Vec<BigInt> = kernel
        .iter()
        .map(|k| (k * Q::from_integer(scale.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    debug_assert!(!g.is_zero());
    let ints: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
    let offset = ints[dim].clone();
    Some((ints[..dim].to_vec(), offset))
}

/// A point of the hull is a vertex iff its facet normals span full rank.
fn is_hull_vertex(dim: usize, index: usize, facets: &[AffineFacet]) -> bool {
    let rows: Vec<Vec<Q>> = facets
        .iter()
        .filter(|f| f.point_indices.contains(&index))
        .map(|f| {
            f.normal
                .iter()
                .map(|c| Q::from_integer(c.clone()))
                .collect()
        })
        .collect();
    if rows.len() < dim {
        return false;
    }
    QMatrix::from_rows(rows).rank() == dim
}

fn interior_forms(facets: &[AffineFacet]) -> Option<Vec<Vec<Q>>> {
    if facets.iter().any(|f| !f.offset.is_positive()) {
        return None;
    }
    Some(
        facets
            .iter()
            .map(|f| {
                f.normal
                    .iter()
                    .map(|c| Q::new(c.clone(), f.offset.clone()))
                    .collect()
            })
            .collect(),
    )
}

/// Triangulates a facet living on `normal . x = offset` by projecting out a
/// coordinate with nonzero normal entry (an affine isomorphism on the
/// hyperplane) and fanning the image from its lexicographically least point.
/// Returns index tuples into `pts`.
fn triangulate_in_hyperplane(
    dim: usize,
    pts: &[Vec<i64>],
    normal: &[BigInt],
) -> Result<Vec<Vec<usize>>> {
    if pts.len() == dim {
        return Ok(vec![(0..dim).collect()]);
    }
    let drop = normal
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Malformed("zero facet normal".into()))?;
    let projected: Vec<Vec<i64>> = pts
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    triangulate_full_dim(dim - 1, &projected)
}

/// Fan triangulation of a full-dimensional point configuration from its
/// lexicographically least point.
fn triangulate_full_dim(dim: usize, pts: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    if dim == 1 {
        let imin = (0..pts.len()).min_by_key(|&i| pts[i][0]).unwrap();
        let imax = (0..pts.len()).max_by_key(|&i| pts[i][0]).unwrap();
        if pts[imin][0] == pts[imax][0] {
            return Err(Error::Malformed("degenerate segment".into()));
        }
        return Ok(vec![vec![imin, imax]]);
    }
    if pts.len() == dim + 1 {
        return Ok(vec![(0..=dim).collect()]);
    }
    let base = (0..pts.len())
        .min_by_key(|&i| pts[i].clone())
        .expect("nonempty point set");
    let mut out = Vec::new();
    for f in enumerate_affine_facets(dim, pts) {
        if f.point_indices.contains(&base) {
            continue;
        }
        let sub_pts: Vec<Vec<i64>> = f.point_indices.iter().map(|&i| pts[i].clone()).collect();
        for local in triangulate_in_hyperplane(dim, &sub_pts, &f.normal)? {
            let mut simplex = vec![base];
            simplex.extend(local.iter().map(|&j| f.point_indices[j]));
            out.push(simplex);
        }
    }
    Ok(out)
}

/// |det| of the matrix whose rows are the selected points.
fn facet_vertex_det(points: &[Vec<i64>], selection: &[usize]) -> BigInt {
    let rows: Vec<Vec<Q>> = selection
        .iter()
        .map(|&i| {
            points[i]
                .iter()
                .map(|&x| Q::from_integer(x.into()))
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows).determinant().to_integer()
}

fn dot_int(c: &[BigInt], p: &[i64]) -> BigInt {
    c.iter().zip(p).map(|(a, &b)| a * BigInt::from(b)).sum()
}

fn dot_form(form: &[Q], p: &[i64]) -> Q {
    form.iter()
        .zip(p)
        .map(|(a, &b)| a * Q::from_integer(b.into()))
        .sum()
}

fn format_form(form: &[Q]) -> String {
    let coords: Vec<String> = form.iter().map(|c| c.to_string()).collect();
    format!("({})", coords.join(", "))
}

fn rational_ceil_i64(q: &Q) -> Result<i64> {
    i64::try_from(&q.ceil().to_integer())
        .map_err(|_| Error::Malformed("dilation bound out of range".into()))
}

fn rational_floor_i64(q: &Q) -> Result<i64> {
    i64::try_from(&q.floor().to_integer())
        .map_err(|_| Error::Malformed("dilation bound out of range".into()))
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Ascending k-subsets of 0..n.
struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Combinations { n, k, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.state.clone()?;
        let next = {
            let mut s = cur.clone();
            let mut i = self.k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if s[i] < self.n - (self.k - i) {
                    s[i] += 1;
                    for j in i + 1..self.k {
                        s[j] = s[j - 1] + 1;
                    }
                    break Some(s);
                }
            }
        };
        self.state = next;
        Some(cur)
    }
}

trait IsOneValue {
    fn is_one_value(&self) -> bool;
}

impl IsOneValue for BigInt {
    fn is_one_value(&self) -> bool {
        *self == BigInt::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn triangle_p2() -> LatticePolytope {
        LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap()
    }

    fn square() -> LatticePolytope {
        LatticePolytope::new(2, vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]).unwrap()
    }

    fn cube() -> LatticePolytope {
        let mut vs = Vec::new();
        for &x in &[-1i64, 1] {
            for &y in &[-1i64, 1] {
                for &z in &[-1i64, 1] {
                    vs.push(vec![x, y, z]);
                }
            }
        }
        LatticePolytope::new(3, vs).unwrap()
    }

    fn octahedron() -> LatticePolytope {
        LatticePolytope::new(
            3,
            vec![
                vec![1, 0, 0],
                vec![-1, 0, 0],
                vec![0, 1, 0],
                vec![0, -1, 0],
                vec![0, 0, 1],
                vec![0, 0, -1],
            ],
        )
        .unwrap()
    }

    fn hexagon_dp6() -> LatticePolytope {
        LatticePolytope::new(
            2,
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![-1, 1],
                vec![-1, 0],
                vec![0, -1],
                vec![1, -1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(matches!(
            LatticePolytope::new(2, vec![vec![0, 0], vec![1, 1]]),
            Err(Error::InvalidPolytope(_))
        ));
        assert!(matches!(
            LatticePolytope::new(2, vec![]),
            Err(Error::InvalidPolytope(_))
        ));
        assert!(matches!(
            LatticePolytope::new(2, vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![-1, -1]]),
            Err(Error::InvalidPolytope(_))
        ));
        // midpoint of an edge is not a vertex
        assert!(matches!(
            LatticePolytope::new(2, vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1], vec![1, 0]]),
            Err(Error::InvalidPolytope(_))
        ));
    }

    #[test]
    fn from_points_drops_non_vertices() {
        let p = LatticePolytope::from_points(
            2,
            vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1], vec![0, 0], vec![1, 0]],
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(p.same_vertex_set(&square()));
    }

    #[test]
    fn triangle_facet_forms() {
        let p = triangle_p2();
        let facets = p.facets().unwrap();
        let forms: BTreeSet<Vec<Q>> = facets.iter().map(|f| f.supporting_form.clone()).collect();
        let expect: BTreeSet<Vec<Q>> = [
            vec![q(1), q(1)],
            vec![q(-2), q(1)],
            vec![q(1), q(-2)],
        ]
        .into_iter()
        .collect();
        assert_eq!(forms, expect);
        for f in &facets {
            assert_eq!(f.vertex_indices.len(), 2);
            for &i in &f.vertex_indices {
                assert_eq!(dot_form(&f.supporting_form, &p.vertices()[i]), q(1));
            }
            for (j, v) in p.vertices().iter().enumerate() {
                if !f.vertex_indices.contains(&j) {
                    assert!(dot_form(&f.supporting_form, v) < q(1));
                }
            }
        }
    }

    #[test]
    fn degree_is_piecewise_linear_max() {
        let p = triangle_p2();
        assert_eq!(p.degree(&[0, 0]).unwrap(), q(0));
        assert_eq!(p.degree(&[1, 0]).unwrap(), q(1));
        assert_eq!(p.degree(&[-1, -1]).unwrap(), q(1));
        assert_eq!(p.degree(&[2, 0]).unwrap(), q(2));
        assert_eq!(p.degree(&[1, 1]).unwrap(), q(2));
        assert_eq!(p.degree(&[-1, 0]).unwrap(), q(2));
    }

    #[test]
    fn reflexivity_and_duality() {
        assert!(triangle_p2().is_reflexive());
        assert!(square().is_reflexive());
        assert!(cube().is_reflexive());
        assert!(octahedron().is_reflexive());
        assert!(hexagon_dp6().is_reflexive());
        // P(1,1,3) mirror: one facet form is (1, -2/3)
        let p113 = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -3]]).unwrap();
        assert!(!p113.is_reflexive());
        assert!(p113.has_interior_origin());

        let c = cube();
        let dual = c.dual_polytope().unwrap();
        assert!(dual.same_vertex_set(&octahedron()));
        assert!(dual.dual_polytope().unwrap().same_vertex_set(&c));
        let sq = square();
        let dual_sq = sq.dual_polytope().unwrap();
        let rotated = LatticePolytope::new(
            2,
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        )
        .unwrap();
        assert!(dual_sq.same_vertex_set(&rotated));
    }

    #[test]
    fn origin_must_be_interior_for_forms() {
        let shifted = LatticePolytope::new(2, vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        assert!(!shifted.has_interior_origin());
        assert!(matches!(shifted.facets(), Err(Error::OriginNotInterior)));
        assert!(matches!(shifted.degree(&[1, 1]), Err(Error::OriginNotInterior)));
        // volume still fine: 2 * area(right triangle with legs 2) = 4
        assert_eq!(shifted.normalized_volume().unwrap(), BigInt::from(4));
    }

    #[test]
    fn simpliciality_and_smoothness() {
        assert!(triangle_p2().is_simplicial());
        assert!(triangle_p2().is_smooth());
        assert!(square().is_simplicial());
        assert!(!square().is_smooth());
        assert!(octahedron().is_simplicial());
        assert!(octahedron().is_smooth());
        assert!(!cube().is_simplicial());
        assert!(!cube().is_smooth());
        assert!(hexagon_dp6().is_simplicial());
        assert!(hexagon_dp6().is_smooth());
    }

    #[test]
    fn normalized_volumes() {
        let seg = LatticePolytope::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(seg.normalized_volume().unwrap(), BigInt::from(2));
        assert_eq!(triangle_p2().normalized_volume().unwrap(), BigInt::from(3));
        assert_eq!(square().normalized_volume().unwrap(), BigInt::from(8));
        assert_eq!(hexagon_dp6().normalized_volume().unwrap(), BigInt::from(6));
        assert_eq!(octahedron().normalized_volume().unwrap(), BigInt::from(8));
        assert_eq!(cube().normalized_volume().unwrap(), BigInt::from(48));
        let p3 = LatticePolytope::new(
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1]],
        )
        .unwrap();
        assert_eq!(p3.normalized_volume().unwrap(), BigInt::from(4));
        let prism = LatticePolytope::new(
            3,
            vec![
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![-1, -1, 1],
                vec![1, 0, -1],
                vec![0, 1, -1],
                vec![-1, -1, -1],
            ],
        )
        .unwrap();
        assert!(!prism.is_simplicial());
        assert!(prism.is_reflexive());
        assert_eq!(prism.normalized_volume().unwrap(), BigInt::from(18));
    }

    #[test]
    fn volume_matches_lattice_point_differences() {
        // n! vol = n-th finite difference of d -> #(dP cap Z^n) at d = 0..n
        for p in [triangle_p2(), square(), hexagon_dp6()] {
            let counts: Vec<i64> = (0..=2)
                .map(|d| p.lattice_points(&q(d)).unwrap().len() as i64)
                .collect();
            let diff2 = counts[2] - 2 * counts[1] + counts[0];
            assert_eq!(BigInt::from(diff2), p.normalized_volume().unwrap());
        }
        for p in [octahedron(), cube()] {
            let counts: Vec<i64> = (0..=3)
                .map(|d| p.lattice_points(&q(d)).unwrap().len() as i64)
                .collect();
            let diff3 = counts[3] - 3 * counts[2] + 3 * counts[1] - counts[0];
            assert_eq!(BigInt::from(diff3), p.normalized_volume().unwrap());
        }
    }

    #[test]
    fn lattice_point_counts() {
        let p = triangle_p2();
        assert_eq!(p.lattice_points(&q(0)).unwrap(), vec![vec![0, 0]]);
        assert_eq!(p.lattice_points(&q(1)).unwrap().len(), 4);
        assert_eq!(p.lattice_points(&q(2)).unwrap().len(), 10);
        let pts = p.lattice_points(&q(1)).unwrap();
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        // fractional dilation: (1/2) * square has the 1 lattice point
        assert_eq!(square().lattice_points(&qr(1, 2)).unwrap().len(), 1);
        assert!(matches!(
            p.lattice_points(&q(-1)),
            Err(Error::NegativeDilation(_))
        ));
    }

    #[test]
    fn h_vectors() {
        let p1 = LatticePolytope::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(p1.h_vector().unwrap(), vec![1, 1]);
        assert_eq!(triangle_p2().h_vector().unwrap(), vec![1, 1, 1]);
        assert_eq!(square().h_vector().unwrap(), vec![1, 2, 1]);
        assert_eq!(hexagon_dp6().h_vector().unwrap(), vec![1, 4, 1]);
        let p3 = LatticePolytope::new(
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1]],
        )
        .unwrap();
        assert_eq!(p3.h_vector().unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(octahedron().h_vector().unwrap(), vec![1, 3, 3, 1]);
        assert!(matches!(cube().h_vector(), Err(Error::NotSimplicial(_))));
    }

    #[test]
    fn json_roundtrip_and_rejects() {
        let p = LatticePolytope::from_json_str(
            r#"{"dim": 2, "vertices": [[1,0],[0,1],[-1,-1]]}"#,
        )
        .unwrap();
        assert!(p.same_vertex_set(&triangle_p2()));
        assert!(matches!(
            LatticePolytope::from_json_str(r#"{"dim": 2, "vertices": [[1,0]], "extra": 1}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            LatticePolytope::from_json_str(r#"{"dim": 2, "vertices": [[0.5, 0], [0,1], [-1,-1]]}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            LatticePolytope::from_json_str(r#"not json"#),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        let all: Vec<Vec<usize>> = Combinations::new(5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[9], vec![2, 3, 4]);
        assert!(Combinations::new(2, 3).next().is_none());
        assert_eq!(Combinations::new(3, 3).count(), 1);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Applies a sequence of elementary integer shears, producing a
        /// determinant-one change of lattice coordinates.
        fn shear(points: &[Vec<i64>], ops: &[(bool, i64)]) -> Vec<Vec<i64>> {
            points
                .iter()
                .map(|p| {
                    let mut v = p.clone();
                    for &(upper, lambda) in ops {
                        if upper {
                            v[0] += lambda * v[1];
                        } else {
                            v[1] += lambda * v[0];
                        }
                    }
                    v
                })
                .collect()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn volume_and_point_counts_are_lattice_invariants(
                ops in prop::collection::vec((any::<bool>(), -2i64..=2), 0..5),
                which in 0usize..4,
            ) {
                let base = match which {
                    0 => triangle_p2(),
                    1 => square(),
                    2 => hexagon_dp6(),
                    _ => LatticePolytope::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap(),
                };
                let moved = LatticePolytope::from_points(2, shear(base.vertices(), &ops)).unwrap();
                prop_assert_eq!(
                    base.normalized_volume().unwrap(),
                    moved.normalized_volume().unwrap()
                );
                for d in 1..=2i64 {
                    let d = Q::from_integer(d.into());
                    prop_assert_eq!(
                        base.lattice_points(&d).unwrap().len(),
                        moved.lattice_points(&d).unwrap().len()
                    );
                }
                prop_assert_eq!(base.is_reflexive(), moved.is_reflexive());
            }

            #[test]
            fn hull_of_random_points_verifies_ehrhart_difference(
                pts in prop::collection::vec((-3i64..=3, -3i64..=3), 3..8),
            ) {
                let pts: Vec<Vec<i64>> = pts.into_iter().map(|(a, b)| vec![a, b]).collect();
                let Ok(p) = LatticePolytope::from_points(2, pts) else {
                    return Ok(()); // degenerate configuration, nothing to check
                };
                let counts: Vec<i64> = (0..=2i64)
                    .map(|d| p.lattice_points(&Q::from_integer(d.into())).unwrap().len() as i64)
                    .collect();
                let second_difference = counts[2] - 2 * counts[1] + counts[0];
                prop_assert_eq!(BigInt::from(second_difference), p.normalized_volume().unwrap());
            }

            #[test]
            fn dual_of_reflexive_is_reflexive_and_involutive(which in 0usize..4) {
                let p = match which {
                    0 => triangle_p2(),
                    1 => square(),
                    2 => hexagon_dp6(),
                    _ => cube(),
                };
                let dual = p.dual_polytope().unwrap();
                prop_assert!(dual.is_reflexive());
                prop_assert!(dual.dual_polytope().unwrap().same_vertex_set(&p));
            }
        }
    }
}
