//! Small dense linear algebra: orthonormal frames, projections, affine
//! rank, and minimal enclosing balls.
//!
//! Everything here works on unit-scale data in double precision. Rank
//! decisions use a relative tolerance of `1e-10` on singular values;
//! boundary membership uses an absolute `1e-9`.

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// Point or direction in Euclidean n-space.
pub type RealVec = DVector<f64>;

/// Relative tolerance for rank decisions (singular values, Gram-Schmidt).
pub const RANK_TOL: f64 = 1e-10;

/// Orthonormality tolerance for [`Frame`] invariants.
pub const ORTHO_TOL: f64 = 1e-12;

/// Absolute tolerance for boundary membership of enclosing balls.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Builds a vector from a slice; convenience for tests and callers.
pub fn vec_from(coords: &[f64]) -> RealVec {
    DVector::from_column_slice(coords)
}

/// An ordered set of pairwise-orthonormal directions, all of one dimension.
///
/// An empty frame is valid and spans the zero subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    vectors: Vec<RealVec>,
    dim: usize,
}

impl Frame {
    /// Frame with no vectors in ambient dimension `dim`.
    pub fn empty(dim: usize) -> Self {
        Frame { vectors: Vec::new(), dim }
    }

    /// Validates orthonormality (within `1e-12`) and wraps the vectors.
    pub fn new(vectors: Vec<RealVec>, dim: usize) -> Result<Self> {
        for v in &vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
        }
        for (a, va) in vectors.iter().enumerate() {
            for (b, vb) in vectors.iter().enumerate() {
                let g = va.dot(vb);
                let target = if a == b { 1.0 } else { 0.0 };
                if (g - target).abs() > ORTHO_TOL {
                    return Err(Error::DegenerateValues(format!(
                        "frame Gram entry ({a},{b}) = {g:.3e} off by more than {ORTHO_TOL:.0e}"
                    )));
                }
            }
        }
        Ok(Frame { vectors, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of axis vectors.
    pub fn count(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[RealVec] {
        &self.vectors
    }

    /// Projects `v` onto the orthogonal complement of the frame's span:
    /// `v - sum_k (v . s_k) s_k`.
    pub fn project_out(&self, v: &RealVec) -> RealVec {
        let mut w = v.clone();
        for s in &self.vectors {
            let c = s.dot(&w);
            w.axpy(-c, s, 1.0);
        }
        w
    }

    /// Component of `v` inside the span, as coefficients on the frame.
    pub fn coords_in_span(&self, v: &RealVec) -> Vec<f64> {
        self.vectors.iter().map(|s| s.dot(v)).collect()
    }
}

/// Gram-Schmidt with reorthogonalization.
///
/// Returns a frame spanning the same subspace as the inputs, in order.
/// Fails with [`Error::RankDeficient`] when a vector's residual after
/// projection falls below `RANK_TOL` relative to its original norm.
pub fn orthonormalize(vectors: &[RealVec]) -> Result<Frame> {
    let dim = match vectors.first() {
        Some(v) => v.len(),
        None => return Ok(Frame::empty(0)),
    };
    let mut basis: Vec<RealVec> = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
        }
        let scale = v.norm().max(1.0);
        let mut w = v.clone();
        // two passes keep the Gram matrix at the 1e-12 level
        for _ in 0..2 {
            for u in &basis {
                let c = u.dot(&w);
                w.axpy(-c, u, 1.0);
            }
        }
        let n = w.norm();
        if n <= RANK_TOL * scale {
            return Err(Error::RankDeficient { rank: basis.len(), expected: i + 1 });
        }
        basis.push(w / n);
    }
    Frame::new(basis, dim)
}

/// Affine rank of a point set: 1 + rank of the matrix of differences
/// from the first point. Rank via singular values at `RANK_TOL` relative
/// to the largest.
pub fn affine_rank(points: &[RealVec]) -> usize {
    assert!(!points.is_empty(), "affine_rank of empty point set");
    1 + difference_rank(points)
}

fn difference_matrix(points: &[RealVec]) -> Option<DMatrix<f64>> {
    if points.len() < 2 {
        return None;
    }
    let dim = points[0].len();
    let mut m = DMatrix::zeros(dim, points.len() - 1);
    for (c, p) in points[1..].iter().enumerate() {
        m.set_column(c, &(p - &points[0]));
    }
    Some(m)
}

fn difference_rank(points: &[RealVec]) -> usize {
    match difference_matrix(points) {
        Some(m) => {
            let sv = m.singular_values();
            let max = sv.max();
            if max <= 0.0 {
                return 0;
            }
            sv.iter().filter(|&&s| s > RANK_TOL * max).count()
        }
        None => 0,
    }
}

/// Orthonormal basis of the direction space of the affine hull, together
/// with the first point as origin.
///
/// The basis columns are left singular vectors of the difference matrix,
/// so the result is deterministic for a given input.
pub fn affine_hull_basis(points: &[RealVec]) -> (RealVec, Vec<RealVec>) {
    assert!(!points.is_empty());
    let origin = points[0].clone();
    let Some(m) = difference_matrix(points) else {
        return (origin, Vec::new());
    };
    let svd = m.svd(true, false);
    let u = svd.u.as_ref().expect("left singular vectors requested");
    let sv = &svd.singular_values;
    let max = sv.max();
    let mut basis = Vec::new();
    if max > 0.0 {
        for (i, &s) in sv.iter().enumerate() {
            if s > RANK_TOL * max {
                basis.push(u.column(i).into_owned());
            }
        }
    }
    (origin, basis)
}

/// Projects each point onto the orthogonal complement of the axis frame.
pub fn project_onto_complement(points: &[RealVec], axis: &Frame) -> Result<Vec<RealVec>> {
    for p in points {
        if !axis.is_empty() && p.len() != axis.dim() {
            return Err(Error::DimensionMismatch { expected: axis.dim(), got: p.len() });
        }
    }
    Ok(points.iter().map(|p| axis.project_out(p)).collect())
}

/// Finite vertex set, taken as given (no hull computation).
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    vertices: Vec<RealVec>,
    ambient_dim: usize,
    label: Option<String>,
}

impl Polytope {
    pub fn new(vertices: Vec<RealVec>, label: Option<String>) -> Result<Self> {
        let ambient_dim = match vertices.first() {
            Some(v) => v.len(),
            None => {
                return Err(Error::MalformedSolution("polytope needs at least one vertex".into()))
            }
        };
        for v in &vertices {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: v.len() });
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::MalformedSolution("non-finite vertex coordinate".into()));
            }
        }
        Ok(Polytope { vertices, ambient_dim, label })
    }

    pub fn from_rows(rows: &[Vec<f64>], label: Option<String>) -> Result<Self> {
        Self::new(rows.iter().map(|r| vec_from(r)).collect(), label)
    }

    pub fn vertices(&self) -> &[RealVec] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Intrinsic dimension: affine rank of the vertex set minus one.
    pub fn dim(&self) -> usize {
        affine_rank(&self.vertices) - 1
    }

    /// Sub-polytope on the given vertex indices.
    pub fn restrict(&self, indices: &[usize]) -> Result<Polytope> {
        let verts: Vec<RealVec> = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        Polytope::new(verts, self.label.clone())
    }

    /// Applies `x -> scale * x + shift` to every vertex.
    pub fn scaled(&self, scale: f64) -> Polytope {
        Polytope {
            vertices: self.vertices.iter().map(|v| v * scale).collect(),
            ambient_dim: self.ambient_dim,
            label: self.label.clone(),
        }
    }
}

/// Minimal enclosing ball with its support set.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: RealVec,
    pub radius: f64,
    /// Indices of input points that pin the ball (≤ dim + 1 of them).
    pub support: Vec<usize>,
}

impl Ball {
    /// True when `p` lies within `radius + tol` of the center.
    pub fn contains(&self, p: &RealVec, tol: f64) -> bool {
        (p - &self.center).norm() <= self.radius + tol
    }
}

/// Smallest enclosing ball of a nonempty point set.
///
/// Welzl-style move-to-front recursion. Affinely dependent support
/// candidates fall back to a least-squares circumcenter so the recursion
/// stays total. No randomization: the result is a pure function of the
/// input order, and radii agree across permutations to ~1e-12.
pub fn min_enclosing_ball(points: &[RealVec]) -> Ball {
    assert!(!points.is_empty(), "min_enclosing_ball of empty point set");
    let dim = points[0].len();
    let cap = dim + 1;
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut support: Vec<usize> = Vec::with_capacity(cap);
    let (center, radius) = mtf_ball(points, &mut order, points.len(), &mut support, cap);
    // the support snapshot of the final ball is recomputed at the top level
    let mut final_support: Vec<usize> = (0..points.len())
        .filter(|&i| ((&points[i] - &center).norm() - radius).abs() <= BOUNDARY_TOL)
        .collect();
    final_support.sort_unstable();
    final_support.truncate(cap);
    Ball { center, radius, support: final_support }
}

fn mtf_ball(
    points: &[RealVec],
    order: &mut Vec<usize>,
    active: usize,
    support: &mut Vec<usize>,
    cap: usize,
) -> (RealVec, f64) {
    let mut ball = circumball(points, support);
    if support.len() == cap {
        return ball;
    }
    let mut i = 0;
    while i < active {
        let idx = order[i];
        let dist = (&points[idx] - &ball.0).norm();
        if dist > ball.1 + 1e-12 * (1.0 + ball.1) {
            support.push(idx);
            ball = mtf_ball(points, order, i, support, cap);
            support.pop();
            order[..=i].rotate_right(1);
        }
        i += 1;
    }
    ball
}

/// Smallest ball with all `support` points on its boundary.
///
/// With an empty support this is a sentinel of negative radius so the
/// first point always triggers an insertion.
fn circumball(points: &[RealVec], support: &[usize]) -> (RealVec, f64) {
    match support.len() {
        0 => {
            let dim = points[0].len();
            (DVector::zeros(dim), -1.0)
        }
        1 => (points[support[0]].clone(), 0.0),
        k => {
            let q0 = &points[support[0]];
            let diffs: Vec<RealVec> = support[1..].iter().map(|&i| &points[i] - q0).collect();
            // solve 2 <d_i, c - q0> = |d_i|^2 for c - q0 in span{d_i}
            let mut gram = DMatrix::zeros(k - 1, k - 1);
            let mut rhs = DVector::zeros(k - 1);
            for (a, da) in diffs.iter().enumerate() {
                for (b, db) in diffs.iter().enumerate() {
                    gram[(a, b)] = 2.0 * da.dot(db);
                }
                rhs[a] = da.norm_squared();
            }
            let coeffs = match gram.clone().lu().solve(&rhs) {
                Some(x) if x.iter().all(|c| c.is_finite()) => x,
                _ => {
                    // affinely dependent support: least-squares circumcenter
                    gram.svd(true, true)
                        .solve(&rhs, RANK_TOL)
                        .unwrap_or_else(|_| DVector::zeros(k - 1))
                }
            };
            let mut center = q0.clone();
            for (c, d) in coeffs.iter().zip(&diffs) {
                center.axpy(*c, d, 1.0);
            }
            let radius = support
                .iter()
                .map(|&i| (&points[i] - &center).norm())
                .fold(0.0_f64, f64::max);
            (center, radius)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn orthonormalize_keeps_orthonormal_input() {
        let f = orthonormalize(&[vec_from(&[1.0, 0.0, 0.0]), vec_from(&[0.0, 1.0, 0.0])]).unwrap();
        assert_eq!(f.count(), 2);
        assert_relative_eq!(f.vectors()[0][0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(f.vectors()[1][1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn orthonormalize_normalizes() {
        let f = orthonormalize(&[vec_from(&[1.0, 1.0])]).unwrap();
        let r = 1.0 / 2.0_f64.sqrt();
        assert_relative_eq!(f.vectors()[0][0], r, epsilon = 1e-15);
        assert_relative_eq!(f.vectors()[0][1], r, epsilon = 1e-15);
    }

    #[test]
    fn orthonormalize_gram_schmidt_by_hand() {
        // {(1,0),(1,1)} -> {(1,0),(0,1)}
        let f = orthonormalize(&[vec_from(&[1.0, 0.0]), vec_from(&[1.0, 1.0])]).unwrap();
        assert_relative_eq!(f.vectors()[0][0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(f.vectors()[1][0], 0.0, epsilon = 1e-14);
        assert_relative_eq!(f.vectors()[1][1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn orthonormalize_rejects_dependent() {
        let err = orthonormalize(&[vec_from(&[1.0, 2.0]), vec_from(&[2.0, 4.0])]).unwrap_err();
        assert!(matches!(err, Error::RankDeficient { .. }));
    }

    #[test]
    fn affine_rank_collinear() {
        let pts = [
            vec_from(&[0.0, 0.0]),
            vec_from(&[1.0, 1.0]),
            vec_from(&[2.0, 2.0]),
        ];
        assert_eq!(affine_rank(&pts), 2);
    }

    #[test]
    fn affine_rank_single_point() {
        assert_eq!(affine_rank(&[vec_from(&[3.0, 4.0, 5.0])]), 1);
    }

    #[test]
    fn affine_rank_simplex_vertices() {
        // four unit vectors in E^4 are affinely independent
        let pts: Vec<RealVec> = (0..4)
            .map(|i| {
                let mut v = DVector::zeros(4);
                v[i] = 1.0;
                v
            })
            .collect();
        assert_eq!(affine_rank(&pts), 4);
    }

    #[test]
    fn projection_empty_axis_is_identity() {
        let pts = [vec_from(&[1.0, 2.0])];
        let out = project_onto_complement(&pts, &Frame::empty(2)).unwrap();
        assert_eq!(out[0], pts[0]);
    }

    #[test]
    fn projection_plane_case() {
        let axis = Frame::new(vec![vec_from(&[1.0, 0.0])], 2).unwrap();
        let out = project_onto_complement(&[vec_from(&[1.0, 1.0])], &axis).unwrap();
        assert_relative_eq!(out[0][0], 0.0, epsilon = 1e-15);
        assert_relative_eq!(out[0][1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn projection_matrix_by_hand() {
        // e1 in E^4, axis (1,-1,0,0)/sqrt(2) -> (1/2, 1/2, 0, 0)
        let s = 1.0 / 2.0_f64.sqrt();
        let axis = Frame::new(vec![vec_from(&[s, -s, 0.0, 0.0])], 4).unwrap();
        let out = project_onto_complement(&[vec_from(&[1.0, 0.0, 0.0, 0.0])], &axis).unwrap();
        assert_relative_eq!(out[0][0], 0.5, epsilon = 1e-14);
        assert_relative_eq!(out[0][1], 0.5, epsilon = 1e-14);
        assert_relative_eq!(out[0][2], 0.0, epsilon = 1e-14);
        assert_relative_eq!(out[0][3], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn projection_idempotent_and_pythagoras() {
        let axis = orthonormalize(&[
            vec_from(&[1.0, 2.0, 3.0, -1.0]),
            vec_from(&[0.0, 1.0, -1.0, 2.0]),
        ])
        .unwrap();
        let z = vec_from(&[0.3, -1.7, 2.2, 0.9]);
        let p1 = axis.project_out(&z);
        let p2 = axis.project_out(&p1);
        assert!((&p1 - &p2).norm() <= 1e-12);
        let along: f64 = axis.coords_in_span(&z).iter().map(|c| c * c).sum();
        assert_relative_eq!(z.norm_squared(), p1.norm_squared() + along, epsilon = 1e-10);
    }

    #[test]
    fn miniball_two_points() {
        let pts = [vec_from(&[0.0, 0.0]), vec_from(&[2.0, 0.0])];
        let b = min_enclosing_ball(&pts);
        assert_relative_eq!(b.radius, 1.0, epsilon = 1e-12);
        assert_relative_eq!(b.center[0], 1.0, epsilon = 1e-12);
        assert_eq!(b.support.len(), 2);
    }

    #[test]
    fn miniball_equilateral_triangle() {
        let h = 3.0_f64.sqrt() / 2.0;
        let pts = [
            vec_from(&[0.0, 0.0]),
            vec_from(&[1.0, 0.0]),
            vec_from(&[0.5, h]),
        ];
        let b = min_enclosing_ball(&pts);
        assert_relative_eq!(b.radius, 1.0 / 3.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn miniball_interior_point_not_in_support() {
        let pts = [
            vec_from(&[-1.0, 0.0]),
            vec_from(&[1.0, 0.0]),
            vec_from(&[0.0, 0.1]),
        ];
        let b = min_enclosing_ball(&pts);
        assert_relative_eq!(b.radius, 1.0, epsilon = 1e-12);
        assert_eq!(b.support, vec![0, 1]);
    }

    #[test]
    fn polytope_rejects_mixed_dims() {
        let err = Polytope::from_rows(&[vec![0.0, 1.0], vec![1.0]], None).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }
}
