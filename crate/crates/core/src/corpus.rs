//! Named reflexive polytopes used across tests, benchmarks, and docs.
//!
//! Each constructor returns the mirror polytope (Newton polytope of the
//! Landau-Ginzburg superpotential) of the stated toric Fano: the convex hull
//! of the primitive ray generators of its fan.

use crate::error::Result;
use crate::polytope::LatticePolytope;

/// Segment [-1, 1]: mirror of P^1.
pub fn mirror_p1() -> LatticePolytope {
    LatticePolytope::new(1, vec![vec![1], vec![-1]]).expect("valid corpus polytope")
}

/// Triangle conv{(1,0), (0,1), (-1,-1)}: mirror of P^2.
pub fn mirror_p2() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]])
        .expect("valid corpus polytope")
}

/// Simplex conv{e_1, e_2, e_3, -e_1-e_2-e_3}: mirror of P^3.
pub fn mirror_p3() -> LatticePolytope {
    LatticePolytope::new(
        3,
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1]],
    )
    .expect("valid corpus polytope")
}

/// Diamond conv{(1,0), (-1,0), (0,1), (0,-1)}: mirror of P^1 x P^1.
pub fn mirror_p1p1() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])
        .expect("valid corpus polytope")
}

/// Octahedron conv{+-e_i}: mirror of P^1 x P^1 x P^1.
pub fn mirror_p1p1p1() -> LatticePolytope {
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
    .expect("valid corpus polytope")
}

/// Hexagon: mirror of the del Pezzo surface of degree 6.
pub fn mirror_dp6() -> LatticePolytope {
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
    .expect("valid corpus polytope")
}

/// Square conv{(+-1, +-1)}: reflexive and simplicial but not smooth; its
/// toric variety is P^1 x P^1 seen through an index-2 sublattice.
pub fn square() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]])
        .expect("valid corpus polytope")
}

/// Cube conv{(+-1, +-1, +-1)}: reflexive, not simplicial. The vertex
/// polynomial with all coefficients 1 fails nondegeneracy on the facet where
/// the four vertex monomials become linearly dependent.
pub fn cube() -> LatticePolytope {
    let mut vs = Vec::new();
    for &x in &[-1i64, 1] {
        for &y in &[-1i64, 1] {
            for &z in &[-1i64, 1] {
                vs.push(vec![x, y, z]);
            }
        }
    }
    LatticePolytope::new(3, vs).expect("valid corpus polytope")
}

/// Triangular prism conv{(1,0,+-1), (0,1,+-1), (-1,-1,+-1)}: reflexive, not
/// simplicial, and like the cube its all-ones vertex polynomial is
/// degenerate on the quadrilateral facets.
pub fn triangular_prism() -> LatticePolytope {
    LatticePolytope::new(
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
    .expect("valid corpus polytope")
}

/// Triangle conv{(1,0), (0,1), (-1,-3)}: mirror of the weighted projective
/// plane P(1,1,3). Interior origin but not reflexive; its spectrum has
/// non-integral points.
pub fn mirror_p113() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -3]])
        .expect("valid corpus polytope")
}

/// The smooth mirrors exercised by the verification suite, with short ids.
pub fn all_smooth_mirrors() -> Vec<(&'static str, LatticePolytope)> {
    vec![
        ("p1", mirror_p1()),
        ("p2", mirror_p2()),
        ("p3", mirror_p3()),
        ("p1xp1", mirror_p1p1()),
        ("p1xp1xp1", mirror_p1p1p1()),
        ("dp6", mirror_dp6()),
    ]
}

/// Fetch a corpus polytope by id, including the non-smooth extras.
pub fn by_id(id: &str) -> Result<LatticePolytope> {
    match id {
        "p1" => Ok(mirror_p1()),
        "p2" => Ok(mirror_p2()),
        "p3" => Ok(mirror_p3()),
        "p1xp1" => Ok(mirror_p1p1()),
        "p1xp1xp1" => Ok(mirror_p1p1p1()),
        "dp6" => Ok(mirror_dp6()),
        "square" => Ok(square()),
        "cube" => Ok(cube()),
        "prism" => Ok(triangular_prism()),
        "p113" => Ok(mirror_p113()),
        other => Err(crate::error::Error::Malformed(format!(
            "unknown corpus id {other:?}"
        ))),
    }
}
