//! Spectrum, weight filtration, Lefschetz-type checks, irregular Hodge
//! numbers, and the assembled Hodge-Tate report.
//!
//! Everything here consumes the graded dimensions and operator blocks of a
//! validated `GradedJacobianRing`. The cohomology splits into a unipotent
//! sector (integral degrees, weight center n) and twisted sectors (degrees
//! with fractional part alpha in (0,1), weight center n - 1); the checks
//! run per sector and are combined into one verdict.
//!
//! Sign convention: the monodromy logarithm is the negative of the
//! multiplication-by-f operator. Ranks, Jordan types, and hence every
//! number reported here are unchanged by that sign, so the computation uses
//! multiplication by f directly and the reports record the convention.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jacobian::{
    build_graded_jacobian, mult_f_operator, GradedJacobianRing, NilpotentOperator,
};
use crate::laurent::{certify_nondegenerate, format_rational, vertex_polynomial};
use crate::linalg::{Q, QMatrix};
use crate::polytope::LatticePolytope;

fn ser_q<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// The spectrum at infinity: attained degrees with their multiplicities,
/// validated to be symmetric about n/2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    n: usize,
    pairs: Vec<SpectrumEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    #[serde(serialize_with = "ser_q")]
    pub degree: Q,
    pub multiplicity: usize,
}

impl Spectrum {
    /// Validates symmetry of a dimension profile about n/2.
    pub fn from_dims(n: usize, dims: &BTreeMap<Q, usize>) -> Result<Spectrum> {
        let top = Q::from_integer((n as i64).into());
        let pairs: Vec<SpectrumEntry> = dims
            .iter()
            .filter(|(_, &k)| k > 0)
            .map(|(d, &k)| SpectrumEntry {
                degree: d.clone(),
                multiplicity: k,
            })
            .collect();
        for e in &pairs {
            let mirror = &top - &e.degree;
            let partner = dims.get(&mirror).copied().unwrap_or(0);
            if partner != e.multiplicity {
                return Err(Error::SpectrumAsymmetry(format!(
                    "multiplicity {} at degree {} but {} at the mirror degree {}",
                    e.multiplicity, e.degree, partner, mirror
                )));
            }
        }
        Ok(Spectrum { n, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[SpectrumEntry] {
        &self.pairs
    }

    pub fn mu(&self) -> usize {
        self.pairs.iter().map(|e| e.multiplicity).sum()
    }

    /// True when every attained degree is an integer: the monodromy of the
    /// associated one-parameter family is unipotent.
    pub fn is_integral(&self) -> bool {
        self.pairs.iter().all(|e| e.degree.denom().is_one())
    }
}

/// Spectrum of a validated ring.
pub fn spectrum(ring: &GradedJacobianRing) -> Result<Spectrum> {
    Spectrum::from_dims(ring.dimension(), &ring.graded_dims())
}

/// Graded dimensions of the monodromy weight filtration of a nilpotent
/// operator, centered at `center`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightFiltrationData {
    pub center: i64,
    /// weight w -> dim gr_w; zero dimensions are omitted.
    pub graded_dims: BTreeMap<i64, usize>,
}

impl WeightFiltrationData {
    pub fn dim_at(&self, w: i64) -> usize {
        self.graded_dims.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.graded_dims.values().sum()
    }
}

/// Multiplicity of each Jordan block size of a nilpotent matrix, from the
/// rank sequence of its powers: a size-s block appears
/// rank(N^{s-1}) - 2 rank(N^s) + rank(N^{s+1}) times.
pub fn jordan_block_sizes(m: &QMatrix) -> Result<BTreeMap<usize, usize>> {
    assert_eq!(m.rows(), m.cols(), "Jordan data needs a square matrix");
    let dim = m.rows();
    let mut ranks = vec![dim];
    let mut power = QMatrix::identity(dim);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > dim + 1 {
            return Err(Error::NotNilpotent(format!(
                "rank sequence fails to reach zero within dimension {dim}"
            )));
        }
        power = power.mul(m);
        ranks.push(power.rank());
    }
    let r = |l: usize| ranks.get(l).copied().unwrap_or(0);
    let mut blocks = BTreeMap::new();
    for s in 1..ranks.len() {
        let count = r(s - 1) + r(s + 1);
        let twice = 2 * r(s);
        debug_assert!(count >= twice, "rank sequence of a matrix is convex");
        if count > twice {
            blocks.insert(s, count - twice);
        }
    }
    debug_assert_eq!(blocks.iter().map(|(s, c)| s * c).sum::<usize>(), dim);
    Ok(blocks)
}

/// Weight filtration of a nilpotent operator: a Jordan block of size s
/// centered at `center` contributes one dimension to each weight
/// center - s + 1, center - s + 3, ..., center + s - 1.
pub fn weight_filtration(op: &NilpotentOperator, center: i64) -> Result<WeightFiltrationData> {
    weight_filtration_of_matrix(op.total_matrix(), center)
}

/// Same, for a bare matrix.
pub fn weight_filtration_of_matrix(m: &QMatrix, center: i64) -> Result<WeightFiltrationData> {
    let blocks = jordan_block_sizes(m)?;
    let mut graded_dims: BTreeMap<i64, usize> = BTreeMap::new();
    for (&s, &count) in &blocks {
        let s = s as i64;
        for j in 0..s {
            *graded_dims.entry(center - s + 1 + 2 * j).or_insert(0) += count;
        }
    }
    Ok(WeightFiltrationData {
        center,
        graded_dims,
    })
}

/// One Lefschetz-type isomorphism check: is the (power)-fold application of
/// the multiplication operator from degree alpha + k to degree
/// alpha + nu - k an isomorphism?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    #[serde(serialize_with = "ser_q")]
    pub alpha: Q,
    pub k: usize,
    pub power: usize,
    #[serde(serialize_with = "ser_q")]
    pub source_degree: Q,
    #[serde(serialize_with = "ser_q")]
    pub target_degree: Q,
    pub source_dim: usize,
    pub target_dim: usize,
    pub iso: bool,
}

fn fractional_part(d: &Q) -> Q {
    d - d.floor()
}

/// Fractional parts of the degrees carrying a nonzero piece, ascending.
fn sector_alphas(ring: &GradedJacobianRing) -> Vec<Q> {
    let mut set: BTreeSet<Q> = BTreeSet::new();
    for (d, k) in ring.graded_dims() {
        if k > 0 {
            set.insert(fractional_part(&d));
        }
    }
    set.into_iter().collect()
}

/// Runs every required isomorphism check. For the unipotent sector
/// (alpha = 0) the center is nu = n; for each twisted sector the center is
/// nu = n - 1. For each k with 0 <= k <= nu/2, the (nu - 2k)-th power of
/// the operator must map the degree-(alpha + k) piece isomorphically onto
/// the degree-(alpha + nu - k) piece.
pub fn lefschetz_check(
    ring: &GradedJacobianRing,
    op: &NilpotentOperator,
) -> Result<Vec<LefschetzVerdict>> {
    let n = ring.dimension() as i64;
    let mut out = Vec::new();
    for alpha in sector_alphas(ring) {
        let nu = if alpha.is_zero() { n } else { n - 1 };
        for k in 0..=(nu / 2) {
            let power = (nu - 2 * k) as usize;
            let source = &alpha + Q::from_integer(k.into());
            let target = &alpha + Q::from_integer((nu - k).into());
            let matrix = op.power_block(&source, power);
            let source_dim = ring.dim_at(&source);
            let target_dim = ring.dim_at(&target);
            debug_assert_eq!((matrix.rows(), matrix.cols()), (target_dim, source_dim));
            let iso = source_dim == target_dim && matrix.rank() == source_dim;
            out.push(LefschetzVerdict {
                alpha: alpha.clone(),
                k: k as usize,
                power,
                source_degree: source,
                target_degree: target,
                source_dim,
                target_dim,
                iso,
            });
        }
    }
    Ok(out)
}

/// Restriction of the assembled operator matrix to the pieces whose degree
/// has fractional part in `alphas`; the operator preserves fractional parts,
/// so this is a direct summand.
fn restricted_total(op: &NilpotentOperator, alphas: &BTreeSet<Q>) -> QMatrix {
    let selected: Vec<(Q, usize)> = op
        .dims()
        .iter()
        .filter(|(d, _)| alphas.contains(&fractional_part(d)))
        .cloned()
        .collect();
    let total: usize = selected.iter().map(|(_, k)| k).sum();
    let mut offsets: BTreeMap<Q, usize> = BTreeMap::new();
    let mut acc = 0usize;
    for (d, k) in &selected {
        offsets.insert(d.clone(), acc);
        acc += k;
    }
    let one = Q::one();
    let mut m = QMatrix::zeros(total, total);
    for (d, k) in &selected {
        let target = d + &one;
        let Some(&t0) = offsets.get(&target) else {
            continue;
        };
        let Some(block) = op.block(d) else { continue };
        let c0 = offsets[d];
        for r in 0..block.rows() {
            for c in 0..*k {
                m.set(t0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }
    m
}

/// Filtration dimensions of one sector: p -> dim of the degree-(shift - p)
/// piece aggregated over the sector's fractional parts, where shift = n for
/// the unipotent sector and n - 1 for the twisted ones.
fn sector_f_dims(ring: &GradedJacobianRing, alphas: &BTreeSet<Q>, shift: i64) -> BTreeMap<i64, usize> {
    let mut out: BTreeMap<i64, usize> = BTreeMap::new();
    for (d, k) in ring.graded_dims() {
        if k == 0 || !alphas.contains(&fractional_part(&d)) {
            continue;
        }
        let step = d.floor();
        let step = i64::try_from(&step.to_integer()).expect("degree fits in i64");
        *out.entry(shift - step).or_insert(0) += k;
    }
    out
}

/// Hodge-Tate comparison for one sector: every even weight 2p must carry
/// exactly the filtration dimension at p and every odd weight must vanish.
fn dims_match_weights(f_dims: &BTreeMap<i64, usize>, w: &WeightFiltrationData) -> bool {
    for (&weight, &dim) in &w.graded_dims {
        let expected = if weight.rem_euclid(2) == 1 {
            0
        } else {
            f_dims.get(&(weight / 2)).copied().unwrap_or(0)
        };
        if dim != expected {
            return false;
        }
    }
    for (&p, &dim) in f_dims {
        if w.dim_at(2 * p) != dim {
            return false;
        }
    }
    true
}

/// Both Hodge-Tate criteria plus the per-sector weight data they consumed.
#[derive(Clone, Debug, Serialize)]
pub struct HodgeTateCheck {
    pub via_lefschetz: bool,
    pub via_dims: bool,
    pub lefschetz: Vec<LefschetzVerdict>,
    /// Weight filtration of the unipotent sector, centered at n.
    pub weight_unipotent: WeightFiltrationData,
    /// Weight filtration of the twisted sectors combined, centered at
    /// n - 1; absent when the spectrum is integral.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_twisted: Option<WeightFiltrationData>,
}

/// Evaluates the two Hodge-Tate criteria on a validated ring.
///
/// `via_lefschetz` asks every sector's power maps to be isomorphisms;
/// `via_dims` asks the weight filtration of the operator to be concentrated
/// in even weights matching the filtration dimensions. The two agree on
/// every input; both are computed as a cross-check.
pub fn hodge_tate_check(
    ring: &GradedJacobianRing,
    op: &NilpotentOperator,
) -> Result<HodgeTateCheck> {
    let n = ring.dimension() as i64;
    let verdicts = lefschetz_check(ring, op)?;
    let via_lefschetz = verdicts.iter().all(|v| v.iso);

    let zero = Q::zero();
    let unipotent_alphas: BTreeSet<Q> = [zero.clone()].into_iter().collect();
    let twisted_alphas: BTreeSet<Q> = sector_alphas(ring)
        .into_iter()
        .filter(|a| !a.is_zero())
        .collect();

    let m1 = restricted_total(op, &unipotent_alphas);
    let weight_unipotent = weight_filtration_of_matrix(&m1, n)?;
    let f1 = sector_f_dims(ring, &unipotent_alphas, n);
    let mut via_dims = dims_match_weights(&f1, &weight_unipotent);

    let weight_twisted = if twisted_alphas.is_empty() {
        None
    } else {
        let mt = restricted_total(op, &twisted_alphas);
        let w = weight_filtration_of_matrix(&mt, n - 1)?;
        let ft = sector_f_dims(ring, &twisted_alphas, n - 1);
        via_dims = via_dims && dims_match_weights(&ft, &w);
        Some(w)
    };

    Ok(HodgeTateCheck {
        via_lefschetz,
        via_dims,
        lefschetz: verdicts,
        weight_unipotent,
        weight_twisted,
    })
}

/// Irregular Hodge numbers. With an integral spectrum they are the numbers
/// h^{p,q} with p + q = n; otherwise each is labeled by the fractional
/// part alpha of the grading and h^{p,q}_alpha = dim A_{n-p+alpha}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HodgeNumbers {
    Integral(Vec<HodgeEntry>),
    PerAlpha(Vec<AlphaHodgeEntry>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeEntry {
    pub p: i64,
    pub q: i64,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaHodgeEntry {
    #[serde(serialize_with = "ser_q")]
    pub alpha: Q,
    pub p: i64,
    pub q: i64,
    pub value: usize,
}

/// h^{p,q} = dim A_{n-p} on an integral spectrum, per-alpha otherwise. Only
/// the middle total degree p + q = n is nonzero; nothing else is listed.
pub fn irregular_hodge_numbers(ring: &GradedJacobianRing) -> Result<HodgeNumbers> {
    let n = ring.dimension() as i64;
    let spec = spectrum(ring)?;
    if spec.is_integral() {
        let mut entries = Vec::new();
        for e in spec.pairs() {
            let d = i64::try_from(&e.degree.to_integer()).expect("degree fits in i64");
            entries.push(HodgeEntry {
                p: n - d,
                q: d,
                value: e.multiplicity,
            });
        }
        entries.sort_by_key(|e| e.p);
        Ok(HodgeNumbers::Integral(entries))
    } else {
        let mut entries = Vec::new();
        for e in spec.pairs() {
            let alpha = fractional_part(&e.degree);
            let step = i64::try_from(&e.degree.floor().to_integer()).expect("fits in i64");
            entries.push(AlphaHodgeEntry {
                alpha,
                p: n - step,
                q: step,
                value: e.multiplicity,
            });
        }
        entries.sort_by(|a, b| (&a.alpha, a.p).cmp(&(&b.alpha, b.p)));
        Ok(HodgeNumbers::PerAlpha(entries))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolytopeSummary {
    pub id: String,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateSummary {
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeTateSummary {
    pub via_lefschetz: bool,
    pub via_dims: bool,
}

/// Empirical constancy of the graded dimensions across random coefficient
/// draws; filled in by callers that run trials.
#[derive(Clone, Debug, Serialize)]
pub struct ConstancySummary {
    pub trials: usize,
    pub seed: u64,
    pub all_match: bool,
}

/// The complete verdict for one polytope and coefficient vector.
#[derive(Clone, Debug, Serialize)]
pub struct KKPReport {
    pub polytope: PolytopeSummary,
    /// Vertex index -> coefficient, as exact rational strings.
    pub coefficients: BTreeMap<usize, String>,
    pub certificate: CertificateSummary,
    pub mu: usize,
    pub spectrum: Vec<SpectrumEntry>,
    /// Present iff the spectrum is integral.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge_numbers: Option<Vec<HodgeEntry>>,
    /// Present iff the spectrum has non-integral degrees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge_numbers_alpha: Option<Vec<AlphaHodgeEntry>>,
    /// p -> dim gr_{2p} of the unipotent-sector weight filtration.
    pub weight_graded: BTreeMap<i64, usize>,
    pub weight_filtration_unipotent: WeightFiltrationData,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_filtration_twisted: Option<WeightFiltrationData>,
    pub lefschetz: Vec<LefschetzVerdict>,
    pub hodge_tate: HodgeTateSummary,
    /// Present iff the spectrum is integral: whether the Hodge numbers
    /// equal the even weight dimensions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kkp_equality: Option<bool>,
    /// Present for smooth reflexive polytopes with all coefficients 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_vector_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient_constancy: Option<ConstancySummary>,
    pub operator_convention: String,
    pub warnings: Vec<String>,
}

/// Runs the full pipeline for one input: certificate, graded ring,
/// spectrum, operator, weight filtration, Hodge numbers, verdicts.
pub fn kkp_report(
    id: &str,
    p: &LatticePolytope,
    a: &BTreeMap<usize, Q>,
) -> Result<KKPReport> {
    let f = vertex_polynomial(p, a)?;
    let cert = certify_nondegenerate(&f)?;
    let mut warnings = Vec::new();
    if cert.status == crate::laurent::CertificateStatus::Asserted {
        warnings.push(format!(
            "nondegeneracy asserted, not certified: {}; the volume count is the only backstop",
            cert.detail
        ));
    }
    let ring = build_graded_jacobian(&f, p, &cert)?;
    let spec = spectrum(&ring)?;
    let op = mult_f_operator(&ring)?;
    let check = hodge_tate_check(&ring, &op)?;
    let numbers = irregular_hodge_numbers(&ring)?;

    let reflexive = p.is_reflexive();
    if !reflexive {
        warnings.push(
            "polytope is not reflexive: the spectrum has non-integral degrees and no \
             single equality verdict is emitted"
                .to_string(),
        );
    } else if !p.is_smooth() {
        warnings.push(
            "polytope is reflexive but a facet vertex set is not a lattice basis: \
             dimension constancy across coefficient choices is not guaranteed"
                .to_string(),
        );
    }

    let weight_graded: BTreeMap<i64, usize> = check
        .weight_unipotent
        .graded_dims
        .iter()
        .filter(|(w, _)| *w % 2 == 0)
        .map(|(w, k)| (w / 2, *k))
        .collect();

    let one = Q::one();
    let all_ones = a.values().all(|c| *c == one);
    let h_vector_match = if reflexive && p.is_smooth() && all_ones {
        let h = p.h_vector()?;
        let dims = ring.graded_dims();
        let n = ring.dimension() as i64;
        let matches = (0..=n).all(|d| {
            let key = Q::from_integer(d.into());
            dims.get(&key).copied().unwrap_or(0) == h[d as usize] as usize
        });
        Some(matches)
    } else {
        None
    };

    let (hodge_numbers, hodge_numbers_alpha) = match numbers {
        HodgeNumbers::Integral(v) => (Some(v), None),
        HodgeNumbers::PerAlpha(v) => (None, Some(v)),
    };

    let kkp_equality = if spec.is_integral() {
        Some(check.via_dims)
    } else {
        None
    };

    Ok(KKPReport {
        polytope: PolytopeSummary {
            id: id.to_string(),
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        },
        coefficients: a
            .iter()
            .map(|(i, c)| (*i, format_rational(c)))
            .collect(),
        certificate: CertificateSummary {
            status: cert.status.to_string(),
            detail: cert.detail.clone(),
        },
        mu: ring.mu(),
        spectrum: spec.pairs().to_vec(),
        hodge_numbers,
        hodge_numbers_alpha,
        weight_graded,
        weight_filtration_unipotent: check.weight_unipotent.clone(),
        weight_filtration_twisted: check.weight_twisted.clone(),
        lefschetz: check.lefschetz.clone(),
        hodge_tate: HodgeTateSummary {
            via_lefschetz: check.via_lefschetz,
            via_dims: check.via_dims,
        },
        kkp_equality,
        h_vector_match,
        coefficient_constancy: None,
        operator_convention:
            "weight data is computed from multiplication by f; the monodromy logarithm is \
             its negative, which changes no rank or Jordan block size"
                .to_string(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::laurent::unit_coefficients;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn ring_and_op(p: &LatticePolytope) -> (GradedJacobianRing, NilpotentOperator) {
        let f = vertex_polynomial(p, &unit_coefficients(p)).unwrap();
        let cert = certify_nondegenerate(&f).unwrap();
        let ring = build_graded_jacobian(&f, p, &cert).unwrap();
        let op = mult_f_operator(&ring).unwrap();
        (ring, op)
    }

    fn jordan_matrix(sizes: &[usize]) -> QMatrix {
        let dim: usize = sizes.iter().sum();
        let mut m = QMatrix::zeros(dim, dim);
        let mut off = 0;
        for &s in sizes {
            for j in 0..s.saturating_sub(1) {
                m.set(off + j, off + j + 1, Q::one());
            }
            off += s;
        }
        m
    }

    /// M <- E M E^{-1} with E = I + lambda e_{ij}, i != j.
    fn conjugate_elementary(m: &mut QMatrix, i: usize, j: usize, lambda: &Q) {
        for c in 0..m.cols() {
            let v = m.get(i, c).clone() + lambda * m.get(j, c);
            m.set(i, c, v);
        }
        for r in 0..m.rows() {
            let v = m.get(r, j).clone() - lambda * m.get(r, i);
            m.set(r, j, v);
        }
    }

    #[test]
    fn weight_filtration_single_block() {
        let m = jordan_matrix(&[3]);
        let w = weight_filtration_of_matrix(&m, 2).unwrap();
        let expect: BTreeMap<i64, usize> = [(0, 1), (2, 1), (4, 1)].into_iter().collect();
        assert_eq!(w.graded_dims, expect);
    }

    #[test]
    fn weight_filtration_zero_operator() {
        let m = QMatrix::zeros(2, 2);
        let w = weight_filtration_of_matrix(&m, 2).unwrap();
        let expect: BTreeMap<i64, usize> = [(2, 2)].into_iter().collect();
        assert_eq!(w.graded_dims, expect);
    }

    #[test]
    fn weight_filtration_is_additive_over_blocks() {
        let m = jordan_matrix(&[2, 1]);
        let w = weight_filtration_of_matrix(&m, 1).unwrap();
        let expect: BTreeMap<i64, usize> = [(0, 1), (1, 1), (2, 1)].into_iter().collect();
        assert_eq!(w.graded_dims, expect);
    }

    #[test]
    fn weight_filtration_survives_conjugation() {
        let mut m = jordan_matrix(&[3, 2, 2, 1]);
        conjugate_elementary(&mut m, 0, 4, &q(3));
        conjugate_elementary(&mut m, 5, 1, &Q::new(2.into(), 7.into()));
        conjugate_elementary(&mut m, 7, 2, &q(-1));
        conjugate_elementary(&mut m, 3, 6, &q(5));
        let w = weight_filtration_of_matrix(&m, 3).unwrap();
        let expect: BTreeMap<i64, usize> =
            [(1, 1), (2, 2), (3, 2), (4, 2), (5, 1)].into_iter().collect();
        assert_eq!(w.graded_dims, expect);
        let blocks = jordan_block_sizes(&m).unwrap();
        let expect_blocks: BTreeMap<usize, usize> = [(1, 1), (2, 2), (3, 1)].into_iter().collect();
        assert_eq!(blocks, expect_blocks);
    }

    #[test]
    fn non_nilpotent_is_rejected() {
        let m = QMatrix::identity(2);
        assert!(matches!(
            weight_filtration_of_matrix(&m, 1),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn spectra_of_the_corpus() {
        let (ring, _) = ring_and_op(&corpus::mirror_p2());
        let s = spectrum(&ring).unwrap();
        assert_eq!(s.mu(), 3);
        assert!(s.is_integral());
        let degrees: Vec<(Q, usize)> = s
            .pairs()
            .iter()
            .map(|e| (e.degree.clone(), e.multiplicity))
            .collect();
        assert_eq!(degrees, vec![(q(0), 1), (q(1), 1), (q(2), 1)]);

        let (ring, _) = ring_and_op(&corpus::mirror_p113());
        let s = spectrum(&ring).unwrap();
        assert!(!s.is_integral());
        assert_eq!(s.mu(), 5);
    }

    #[test]
    fn asymmetric_dims_are_rejected() {
        let dims: BTreeMap<Q, usize> = [(q(0), 1), (q(1), 2)].into_iter().collect();
        assert!(matches!(
            Spectrum::from_dims(2, &dims),
            Err(Error::SpectrumAsymmetry(_))
        ));
        let dims: BTreeMap<Q, usize> =
            [(q(0), 1), (q(1), 2), (q(2), 1)].into_iter().collect();
        assert!(Spectrum::from_dims(2, &dims).is_ok());
    }

    #[test]
    fn lefschetz_passes_on_smooth_corpus() {
        for (id, p) in corpus::all_smooth_mirrors() {
            let (ring, op) = ring_and_op(&p);
            let verdicts = lefschetz_check(&ring, &op).unwrap();
            assert!(verdicts.iter().all(|v| v.iso), "{id}: {verdicts:?}");
        }
    }

    #[test]
    fn lefschetz_details_on_the_triangle() {
        let (ring, op) = ring_and_op(&corpus::mirror_p2());
        let verdicts = lefschetz_check(&ring, &op).unwrap();
        assert_eq!(verdicts.len(), 2);
        assert_eq!(verdicts[0].k, 0);
        assert_eq!(verdicts[0].power, 2);
        assert!(verdicts[0].iso);
        assert_eq!(verdicts[1].k, 1);
        assert_eq!(verdicts[1].power, 0);
        assert!(verdicts[1].iso);
    }

    #[test]
    fn hodge_tate_on_corpus_and_square() {
        for (id, p) in corpus::all_smooth_mirrors() {
            let (ring, op) = ring_and_op(&p);
            let check = hodge_tate_check(&ring, &op).unwrap();
            assert!(check.via_lefschetz, "{id}");
            assert!(check.via_dims, "{id}");
            assert!(check.weight_twisted.is_none(), "{id}");
        }
        let (ring, op) = ring_and_op(&corpus::square());
        let check = hodge_tate_check(&ring, &op).unwrap();
        assert!(check.via_lefschetz && check.via_dims);
        let expect: BTreeMap<i64, usize> = [(0, 1), (2, 6), (4, 1)].into_iter().collect();
        assert_eq!(check.weight_unipotent.graded_dims, expect);
    }

    #[test]
    fn diamond_weight_dims() {
        let (ring, op) = ring_and_op(&corpus::mirror_p1p1());
        let check = hodge_tate_check(&ring, &op).unwrap();
        let expect: BTreeMap<i64, usize> = [(0, 1), (2, 2), (4, 1)].into_iter().collect();
        assert_eq!(check.weight_unipotent.graded_dims, expect);
        assert!(check.via_lefschetz && check.via_dims);
    }

    #[test]
    fn twisted_sectors_fail_both_criteria_together() {
        let (ring, op) = ring_and_op(&corpus::mirror_p113());
        let check = hodge_tate_check(&ring, &op).unwrap();
        assert!(!check.via_lefschetz);
        assert!(!check.via_dims);
        // the unipotent sector alone passes: one Jordan string of length 3
        let zero_alpha: BTreeSet<Q> = [q(0)].into_iter().collect();
        let m1 = restricted_total(&op, &zero_alpha);
        let w1 = weight_filtration_of_matrix(&m1, 2).unwrap();
        let expect: BTreeMap<i64, usize> = [(0, 1), (2, 1), (4, 1)].into_iter().collect();
        assert_eq!(w1.graded_dims, expect);
        // the twisted part carries the zero operator on two dimensions
        let twisted = check.weight_twisted.unwrap();
        let expect: BTreeMap<i64, usize> = [(1, 2)].into_iter().collect();
        assert_eq!(twisted.graded_dims, expect);
    }

    #[test]
    fn hodge_numbers_integral_and_per_alpha() {
        let (ring, _) = ring_and_op(&corpus::mirror_p2());
        let HodgeNumbers::Integral(entries) = irregular_hodge_numbers(&ring).unwrap() else {
            panic!("integral spectrum expected");
        };
        assert_eq!(
            entries,
            vec![
                HodgeEntry { p: 0, q: 2, value: 1 },
                HodgeEntry { p: 1, q: 1, value: 1 },
                HodgeEntry { p: 2, q: 0, value: 1 },
            ]
        );
        let total: usize = entries.iter().map(|e| e.value).sum();
        assert_eq!(total, ring.mu());

        let (ring, _) = ring_and_op(&corpus::mirror_p113());
        let HodgeNumbers::PerAlpha(entries) = irregular_hodge_numbers(&ring).unwrap() else {
            panic!("non-integral spectrum expected");
        };
        let total: usize = entries.iter().map(|e| e.value).sum();
        assert_eq!(total, 5);
        let third = Q::new(1.into(), 3.into());
        let twisted: Vec<&AlphaHodgeEntry> =
            entries.iter().filter(|e| e.alpha == third).collect();
        assert_eq!(twisted.len(), 1);
        assert_eq!((twisted[0].p, twisted[0].q, twisted[0].value), (1, 1, 1));
    }

    #[test]
    fn hodge_number_symmetry() {
        for (_, p) in corpus::all_smooth_mirrors() {
            let (ring, _) = ring_and_op(&p);
            let HodgeNumbers::Integral(entries) = irregular_hodge_numbers(&ring).unwrap() else {
                panic!("integral spectrum expected");
            };
            let map: BTreeMap<(i64, i64), usize> =
                entries.iter().map(|e| ((e.p, e.q), e.value)).collect();
            for ((p_, q_), v) in &map {
                assert_eq!(map.get(&(*q_, *p_)).copied().unwrap_or(0), *v);
            }
        }
    }

    #[test]
    fn reports_for_the_corpus() {
        for (id, p) in corpus::all_smooth_mirrors() {
            let report = kkp_report(id, &p, &unit_coefficients(&p)).unwrap();
            assert_eq!(report.kkp_equality, Some(true), "{id}");
            assert!(report.hodge_tate.via_lefschetz, "{id}");
            assert!(report.hodge_tate.via_dims, "{id}");
            assert_eq!(report.h_vector_match, Some(true), "{id}");
            assert!(report.warnings.is_empty(), "{id}: {:?}", report.warnings);
            assert!(report.hodge_numbers.is_some());
            // even weights read centrally reproduce the h-vector
            let h = p.h_vector().unwrap();
            let got: Vec<usize> = report.weight_graded.values().cloned().collect();
            let h_usize: Vec<usize> = h.iter().map(|&x| x as usize).collect();
            assert_eq!(got, h_usize, "{id}");
        }
    }

    #[test]
    fn report_on_the_square_warns_but_passes() {
        let p = corpus::square();
        let report = kkp_report("square", &p, &unit_coefficients(&p)).unwrap();
        assert_eq!(report.kkp_equality, Some(true));
        assert!(report.hodge_tate.via_lefschetz && report.hodge_tate.via_dims);
        assert_eq!(report.h_vector_match, None);
        assert_eq!(report.warnings.len(), 2);
        assert_eq!(report.mu, 8);
    }

    #[test]
    fn report_on_p113_has_no_equality_verdict() {
        let p = corpus::mirror_p113();
        let report = kkp_report("p113", &p, &unit_coefficients(&p)).unwrap();
        assert_eq!(report.kkp_equality, None);
        assert!(!report.hodge_tate.via_lefschetz);
        assert!(!report.hodge_tate.via_dims);
        assert!(report.hodge_numbers.is_none());
        assert!(report.hodge_numbers_alpha.is_some());
        assert!(report.weight_filtration_twisted.is_some());
        assert!(!report.warnings.is_empty());
    }

    #[test]
    fn report_serializes_deterministically() {
        let p = corpus::mirror_p2();
        let r1 = kkp_report("p2", &p, &unit_coefficients(&p)).unwrap();
        let r2 = kkp_report("p2", &p, &unit_coefficients(&p)).unwrap();
        let s1 = serde_json::to_string_pretty(&r1).unwrap();
        let s2 = serde_json::to_string_pretty(&r2).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.contains("\"kkp_equality\": true"));
        assert!(s1.contains("\"mu\": 3"));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn weight_dims_recover_the_jordan_type_after_conjugation(
                sizes in prop::collection::vec(1usize..=4, 1..4),
                ops in prop::collection::vec((0usize..8, 0usize..8, -3i64..=3), 0..6),
                center in -2i64..=4,
            ) {
                let mut m = jordan_matrix(&sizes);
                let dim = m.rows();
                for (i, j, lambda) in ops {
                    let (i, j) = (i % dim, j % dim);
                    if i != j {
                        conjugate_elementary(&mut m, i, j, &q(lambda));
                    }
                }
                let w = weight_filtration_of_matrix(&m, center).unwrap();
                // direct construction from the known block sizes
                let mut expect: BTreeMap<i64, usize> = BTreeMap::new();
                for &s in &sizes {
                    let s = s as i64;
                    for j in 0..s {
                        *expect.entry(center - s + 1 + 2 * j).or_insert(0) += 1;
                    }
                }
                prop_assert_eq!(&w.graded_dims, &expect);
                prop_assert_eq!(w.total(), dim);
                // symmetry about the center
                for (wt, k) in &w.graded_dims {
                    prop_assert_eq!(w.dim_at(2 * center - wt), *k);
                }
            }
        }
    }
}
