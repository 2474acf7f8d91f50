//! Lattice polytopes in dimension 2 and 3, stored in both V- and
//! H-representation.

use std::fmt;

use thiserror::Error;

use crate::hull;
use crate::lattice::{
    det2_wide, det3_wide, primitive, Int, LatticeError, LatticeVector, Rat, RatVector, COORD_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("cannot build a polytope from an empty point list")]
    Empty,
    #[error("coordinate {0} exceeds the supported range ±{COORD_LIMIT}")]
    CoordinateOutOfRange(Int),
    #[error("polytope has dimension {dim} but ambient dimension {ambient} is required")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("dilation factor must be positive, got {0}")]
    InvalidDilation(Int),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T, E = PolytopeError> = std::result::Result<T, E>;

/// `{y : ⟨y, normal⟩ ≥ −offset}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: LatticeVector,
    pub offset: Int,
}

impl HalfSpace {
    /// `⟨y, normal⟩ + offset`; nonnegative exactly on the half-space.
    #[inline]
    pub fn slack(&self, y: &LatticeVector) -> Int {
        y.dot(&self.normal) + self.offset
    }

    pub fn contains(&self, y: &LatticeVector) -> bool {
        self.slack(y) >= 0
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<y,{}> >= {}", self.normal, -self.offset)
    }
}

/// A convex lattice polytope.
///
/// Vertices are lex-sorted extreme points. Facets are irredundant with
/// primitive normals, sorted by `(normal, offset)`; when the polytope is not
/// full-dimensional the list also carries its affine-hull equations as
/// opposite pairs of inequalities. Two polytopes are equal iff their vertex
/// lists are.
#[derive(Debug, Clone)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<LatticeVector>,
    facets: Vec<HalfSpace>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

/// Lattice direction `m` with `base ≤ ⟨m, y⟩ ≤ base + 1` on the polytope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WidthCertificate {
    pub direction: LatticeVector,
    pub base: Int,
}

impl WidthCertificate {
    pub fn certifies(&self, p: &Polytope) -> bool {
        p.vertices().iter().all(|y| {
            let v = y.dot(&self.direction);
            self.base <= v && v <= self.base + 1
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarDual {
    Lattice(Polytope),
    /// The dual has a non-integral vertex; one is given as witness.
    NotLattice {
        witness: RatVector,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotReflexive {
    NotFullDimensional,
    OriginNotInterior,
    FacetOffset { facet: HalfSpace },
}

impl NotReflexive {
    pub fn code(&self) -> &'static str {
        match self {
            Self::NotFullDimensional => "not-full-dimensional",
            Self::OriginNotInterior => "origin-not-interior",
            Self::FacetOffset { .. } => "facet-offset",
        }
    }
}

impl fmt::Display for NotReflexive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotFullDimensional => write!(f, "polytope is not full-dimensional"),
            Self::OriginNotInterior => write!(f, "origin is not an interior point"),
            Self::FacetOffset { facet } => write!(f, "facet {facet} is not at lattice distance 1"),
        }
    }
}

impl Polytope {
    /// Convex hull of a nonempty list of lattice points.
    pub fn hull(points: &[LatticeVector]) -> Result<Self> {
        let first = points.first().ok_or(PolytopeError::Empty)?;
        let ambient_dim = first.dim();
        for p in points {
            if p.dim() != ambient_dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: ambient_dim,
                    found: p.dim(),
                }
                .into());
            }
            if let Some(&c) = p.coords().iter().find(|c| c.abs() > COORD_LIMIT) {
                return Err(PolytopeError::CoordinateOutOfRange(c));
            }
        }
        let data = hull::compute(points);
        Ok(Self {
            ambient_dim,
            dim: data.dim,
            vertices: data.vertices,
            facets: data.facets,
        })
    }

    pub fn point(p: LatticeVector) -> Self {
        Self::hull(&[p]).expect("single point hull")
    }

    /// The polytope `{0}` in `Z^dim`.
    pub fn origin(dim: usize) -> Result<Self> {
        Self::hull(&[LatticeVector::zero(dim)?])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    fn check_dim(&self, v: &LatticeVector) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.dim(),
            }
            .into());
        }
        Ok(())
    }

    /// Membership by the facet inequalities.
    pub fn contains(&self, m: &LatticeVector) -> Result<bool> {
        self.check_dim(m)?;
        Ok(self.facets.iter().all(|h| h.contains(m)))
    }

    /// Componentwise minimum and maximum over the vertices.
    pub fn bounding_box(&self) -> (LatticeVector, LatticeVector) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices[1..] {
            let (l, h) = (lo.coords().to_vec(), hi.coords().to_vec());
            let lo_c: Vec<Int> = l.iter().zip(v.coords()).map(|(a, b)| *a.min(b)).collect();
            let hi_c: Vec<Int> = h.iter().zip(v.coords()).map(|(a, b)| *a.max(b)).collect();
            lo = LatticeVector::new(&lo_c).unwrap();
            hi = LatticeVector::new(&hi_c).unwrap();
        }
        (lo, hi)
    }

    /// All lattice points, lex-sorted.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let (lo, hi) = self.bounding_box();
        scan_lattice_points(&self.facets, &lo, &hi, 0)
    }

    /// Lattice points satisfying every facet inequality strictly. Empty for
    /// lower-dimensional polytopes.
    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        if !self.is_full_dimensional() {
            return Vec::new();
        }
        let (lo, hi) = self.bounding_box();
        scan_lattice_points(&self.facets, &lo, &hi, 1)
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if other.ambient_dim != self.ambient_dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            }
            .into());
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.checked_add(b)?);
            }
        }
        Polytope::hull(&sums)
    }

    /// `kP` for `k ≥ 1`.
    pub fn dilate(&self, k: Int) -> Result<Polytope> {
        if k < 1 {
            return Err(PolytopeError::InvalidDilation(k));
        }
        let scaled = self
            .vertices
            .iter()
            .map(|v| v.checked_scale(k))
            .collect::<Result<Vec<_>, _>>()?;
        Polytope::hull(&scaled)
    }

    pub fn translate(&self, t: &LatticeVector) -> Result<Polytope> {
        self.check_dim(t)?;
        let moved = self
            .vertices
            .iter()
            .map(|v| v.checked_add(t))
            .collect::<Result<Vec<_>, _>>()?;
        Polytope::hull(&moved)
    }

    /// The polar `{v : ⟨y, v⟩ ≥ −1 for all y ∈ P}`.
    pub fn polar_dual(&self) -> Result<PolarDual> {
        if !self.is_full_dimensional() {
            return Err(PolytopeError::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_dim,
            });
        }
        if self.facets.iter().any(|h| h.offset <= 0) {
            return Err(PolytopeError::OriginNotInterior);
        }
        // Facet ⟨y,n⟩ ≥ −c gives the dual vertex n/c; n is primitive, so it
        // is integral exactly when c = 1.
        if let Some(h) = self.facets.iter().find(|h| h.offset != 1) {
            let c = i128::from(h.offset);
            let witness = h
                .normal
                .coords()
                .iter()
                .map(|&x| Rat::new(i128::from(x), c))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(PolarDual::NotLattice {
                witness: RatVector(witness),
            });
        }
        let normals: Vec<LatticeVector> = self.facets.iter().map(|h| h.normal).collect();
        Ok(PolarDual::Lattice(Polytope::hull(&normals)?))
    }

    /// `Ok(())` when full-dimensional with the origin interior and every facet
    /// at lattice distance one from it.
    pub fn reflexivity(&self) -> Result<(), NotReflexive> {
        if !self.is_full_dimensional() {
            return Err(NotReflexive::NotFullDimensional);
        }
        if self.facets.iter().any(|h| h.offset <= 0) {
            return Err(NotReflexive::OriginNotInterior);
        }
        match self.facets.iter().find(|h| h.offset != 1) {
            Some(&facet) => Err(NotReflexive::FacetOffset { facet }),
            None => Ok(()),
        }
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexivity().is_ok()
    }

    /// Searches primitive directions `m` with `|m|_∞ ≤ bound` for which the
    /// polytope lies between the adjacent lattice planes `⟨m,·⟩ = a` and
    /// `⟨m,·⟩ = a + 1`, touching both. Directions are taken up to sign (first
    /// nonzero coordinate positive) and tried by increasing `ℓ¹` norm, ties
    /// broken lex-descending, so unit vectors come first in the order
    /// `e1, e2, e3`.
    pub fn width_certificate(&self, bound: Int) -> Option<WidthCertificate> {
        let d = self.ambient_dim;
        let mut candidates = Vec::new();
        let range = -bound..=bound;
        for x in range.clone() {
            for y in range.clone() {
                if d == 2 {
                    candidates.push(LatticeVector::new2(x, y));
                    continue;
                }
                for z in range.clone() {
                    candidates.push(LatticeVector::new3(x, y, z));
                }
            }
        }
        candidates
            .retain(|m| !m.is_zero() && m.sign_normalized() == *m && primitive(m).ok() == Some(*m));
        candidates.sort_unstable_by(|a, b| a.l1_norm().cmp(&b.l1_norm()).then(b.cmp(a)));
        candidates.into_iter().find_map(|m| {
            let values = self.vertices.iter().map(|y| y.dot(&m));
            let (lo, hi) = values.fold((Int::MAX, Int::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
            (hi - lo == 1).then_some(WidthCertificate {
                direction: m,
                base: lo,
            })
        })
    }

    /// Largest absolute facet-normal coordinate; the default search bound.
    pub fn default_width_bound(&self) -> Int {
        self.facets
            .iter()
            .map(|h| h.normal.max_norm())
            .max()
            .unwrap_or(1)
            .max(1)
    }

    /// Default policy: search up to [`Self::default_width_bound`], then once
    /// more with the bound doubled.
    pub fn width_certificate_default(&self) -> Option<WidthCertificate> {
        let b = self.default_width_bound();
        self.width_certificate(b)
            .or_else(|| self.width_certificate(2 * b))
    }

    /// `d!` times the Euclidean volume.
    pub fn normalized_volume(&self) -> Result<Int> {
        if !self.is_full_dimensional() {
            return Err(PolytopeError::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_dim,
            });
        }
        let apex = self.vertices[0];
        let mut total: i128 = 0;
        if self.ambient_dim == 2 {
            let ring = hull::cyclic_order(&self.vertices, None);
            for w in 1..ring.len() - 1 {
                total += det2_wide(&(ring[w] - ring[0]), &(ring[w + 1] - ring[0])).abs();
            }
        } else {
            for h in &self.facets {
                let on: Vec<LatticeVector> = self
                    .vertices
                    .iter()
                    .copied()
                    .filter(|v| h.slack(v) == 0)
                    .collect();
                if on.contains(&apex) {
                    continue;
                }
                let ring = hull::cyclic_order(&on, Some(h.normal));
                for w in 1..ring.len() - 1 {
                    total += det3_wide(&(ring[0] - apex), &(ring[w] - apex), &(ring[w + 1] - apex))
                        .abs();
                }
            }
        }
        Int::try_from(total).map_err(|_| LatticeError::Overflow.into())
    }
}

/// Lattice points of `{y : ⟨y, n⟩ ≥ −offset + shrink}` inside the box
/// `[lo, hi]`, lex-sorted. The last coordinate is solved as an interval per
/// row instead of being scanned.
pub(crate) fn scan_lattice_points(
    halfspaces: &[HalfSpace],
    lo: &LatticeVector,
    hi: &LatticeVector,
    shrink: Int,
) -> Vec<LatticeVector> {
    let d = lo.dim();
    let last = d - 1;
    let mut out = Vec::new();
    let emit_row = |prefix: &LatticeVector, out: &mut Vec<LatticeVector>| {
        let (mut zmin, mut zmax) = (lo.get(last), hi.get(last));
        for h in halfspaces {
            let nz = h.normal.get(last);
            let partial: Int = (0..last).map(|i| prefix.get(i) * h.normal.get(i)).sum();
            let rhs = -h.offset + shrink - partial;
            match nz.cmp(&0) {
                std::cmp::Ordering::Greater => zmin = zmin.max(div_ceil(rhs, nz)),
                std::cmp::Ordering::Less => zmax = zmax.min(div_floor(rhs, nz)),
                std::cmp::Ordering::Equal => {
                    if rhs > 0 {
                        return;
                    }
                }
            }
            if zmin > zmax {
                return;
            }
        }
        let mut c = prefix.coords().to_vec();
        for z in zmin..=zmax {
            c[last] = z;
            out.push(LatticeVector::new(&c).unwrap());
        }
    };
    if d == 2 {
        for x in lo.get(0)..=hi.get(0) {
            emit_row(&LatticeVector::new2(x, 0), &mut out);
        }
    } else {
        for x in lo.get(0)..=hi.get(0) {
            for y in lo.get(1)..=hi.get(1) {
                emit_row(&LatticeVector::new3(x, y, 0), &mut out);
            }
        }
    }
    out
}

fn div_floor(a: Int, b: Int) -> Int {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: Int, b: Int) -> Int {
    -div_floor(-a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v3(x: Int, y: Int, z: Int) -> LatticeVector {
        LatticeVector::new3(x, y, z)
    }

    fn v2(x: Int, y: Int) -> LatticeVector {
        LatticeVector::new2(x, y)
    }

    fn hs(n: LatticeVector, offset: Int) -> HalfSpace {
        HalfSpace { normal: n, offset }
    }

    fn reeve2() -> Polytope {
        Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 2)]).unwrap()
    }

    fn cube3() -> Polytope {
        let mut pts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    pts.push(v3(x, y, z));
                }
            }
        }
        Polytope::hull(&pts).unwrap()
    }

    fn octa() -> Polytope {
        Polytope::hull(&[
            v3(1, 0, 0),
            v3(-1, 0, 0),
            v3(0, 1, 0),
            v3(0, -1, 0),
            v3(0, 0, 1),
            v3(0, 0, -1),
        ])
        .unwrap()
    }

    fn reeve2_fano() -> Polytope {
        reeve2()
            .dilate(2)
            .unwrap()
            .translate(&v3(-1, -1, -1))
            .unwrap()
    }

    #[test]
    fn hull_of_reeve_simplex() {
        let p = reeve2();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.dim(), 3);
    }

    #[test]
    fn hull_drops_collinear_middle_point() {
        let p = Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(2, 0, 0)]).unwrap();
        assert_eq!(p.vertices(), &[v3(0, 0, 0), v3(2, 0, 0)]);
        assert_eq!(p.dim(), 1);
    }

    #[test]
    fn hull_of_cube() {
        let p = cube3();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
    }

    #[test]
    fn hull_errors() {
        assert_eq!(Polytope::hull(&[]), Err(PolytopeError::Empty));
        assert!(matches!(
            Polytope::hull(&[v3(0, 0, 0), v2(1, 1)]),
            Err(PolytopeError::Lattice(
                LatticeError::DimensionMismatch { .. }
            ))
        ));
        assert_eq!(
            Polytope::hull(&[v2(0, COORD_LIMIT + 1)]),
            Err(PolytopeError::CoordinateOutOfRange(COORD_LIMIT + 1))
        );
    }

    #[test]
    fn hull_drops_points_interior_to_faces() {
        // Cube with face centers, edge midpoints and the body center.
        let mut pts = Vec::new();
        for x in -1..=1 {
            for y in -1..=1 {
                for z in -1..=1 {
                    pts.push(v3(x, y, z));
                }
            }
        }
        assert_eq!(Polytope::hull(&pts).unwrap(), cube3());
        assert_eq!(Polytope::hull(&pts).unwrap().facets().len(), 6);
    }

    #[test]
    fn planar_polygon_in_space() {
        let p = Polytope::hull(&[
            v3(0, 0, 1),
            v3(2, 0, 1),
            v3(0, 2, 1),
            v3(1, 1, 1),
            v3(1, 0, 1),
        ])
        .unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertices(), &[v3(0, 0, 1), v3(0, 2, 1), v3(2, 0, 1)]);
        // Two equation half-spaces plus three edges.
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.lattice_points().len(), 6);
        assert!(p.contains(&v3(1, 1, 1)).unwrap());
        assert!(!p.contains(&v3(1, 1, 0)).unwrap());
        assert!(!p.contains(&v3(2, 1, 1)).unwrap());
    }

    #[test]
    fn reeve_facets() {
        let expected = vec![
            hs(v3(-2, -2, 1), 2),
            hs(v3(0, 0, 1), 0),
            hs(v3(0, 2, -1), 0),
            hs(v3(2, 0, -1), 0),
        ];
        assert_eq!(reeve2().facets(), expected.as_slice());
    }

    #[test]
    fn cube_facets() {
        let mut expected = Vec::new();
        for i in 0..3 {
            let e = LatticeVector::unit(3, i).unwrap();
            expected.push(hs(e, 1));
            expected.push(hs(-e, 1));
        }
        expected.sort();
        assert_eq!(cube3().facets(), expected.as_slice());
    }

    #[test]
    fn unit_segment_facets() {
        let s = Polytope::hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        let expected = vec![
            hs(v2(-1, 0), 1),
            hs(v2(0, -1), 0),
            hs(v2(0, 1), 0),
            hs(v2(1, 0), 0),
        ];
        assert_eq!(s.facets(), expected.as_slice());
    }

    #[test]
    fn lattice_point_examples() {
        assert_eq!(
            reeve2().lattice_points(),
            vec![v3(0, 0, 0), v3(0, 1, 0), v3(1, 0, 0), v3(1, 1, 2)]
        );
        assert_eq!(reeve2().dilate(2).unwrap().lattice_points().len(), 11);
        assert_eq!(cube3().lattice_points().len(), 27);
    }

    #[test]
    fn interior_point_examples() {
        assert_eq!(
            reeve2().dilate(2).unwrap().interior_lattice_points(),
            vec![v3(1, 1, 1)]
        );
        assert_eq!(cube3().interior_lattice_points(), vec![v3(0, 0, 0)]);
        assert!(reeve2().interior_lattice_points().is_empty());
        let square = Polytope::hull(&[v3(0, 0, 0), v3(2, 0, 0), v3(0, 2, 0), v3(2, 2, 0)]).unwrap();
        assert!(square.interior_lattice_points().is_empty());
    }

    #[test]
    fn minkowski_examples() {
        let p = reeve2();
        assert_eq!(p.minkowski_sum(&Polytope::origin(3).unwrap()).unwrap(), p);
        let sq = Polytope::hull(&[v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)]).unwrap();
        assert_eq!(sq.minkowski_sum(&sq).unwrap(), sq.dilate(2).unwrap());
        assert_eq!(cube3().minkowski_sum(&octa()).unwrap().vertices().len(), 24);
        assert!(p.minkowski_sum(&sq).is_err());
    }

    #[test]
    fn dilate_examples() {
        let p = reeve2();
        assert_eq!(p.dilate(1).unwrap(), p);
        let expected =
            Polytope::hull(&[v3(0, 0, 0), v3(2, 0, 0), v3(0, 2, 0), v3(2, 2, 4)]).unwrap();
        assert_eq!(p.dilate(2).unwrap(), expected);
        let seg = Polytope::hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        assert_eq!(seg.dilate(3).unwrap().vertices(), &[v2(0, 0), v2(3, 0)]);
        assert_eq!(p.dilate(0), Err(PolytopeError::InvalidDilation(0)));
    }

    #[test]
    fn polar_examples() {
        assert_eq!(cube3().polar_dual().unwrap(), PolarDual::Lattice(octa()));
        assert_eq!(octa().polar_dual().unwrap(), PolarDual::Lattice(cube3()));
        assert!(matches!(
            reeve2_fano().polar_dual().unwrap(),
            PolarDual::Lattice(_)
        ));
        assert_eq!(reeve2().polar_dual(), Err(PolytopeError::OriginNotInterior));
        let flat = Polytope::hull(&[v3(-1, -1, 0), v3(1, -1, 0), v3(0, 1, 0)]).unwrap();
        assert!(matches!(
            flat.polar_dual(),
            Err(PolytopeError::NotFullDimensional { .. })
        ));
        let big = cube3().dilate(2).unwrap();
        match big.polar_dual().unwrap() {
            PolarDual::NotLattice { witness } => assert!(!witness.is_integral()),
            other => panic!("expected non-lattice dual, got {other:?}"),
        }
    }

    #[test]
    fn reflexive_examples() {
        assert!(cube3().is_reflexive());
        assert_eq!(reeve2().reflexivity(), Err(NotReflexive::OriginNotInterior));
        assert!(reeve2_fano().is_reflexive());
        let flat = Polytope::hull(&[v3(-1, -1, 0), v3(1, -1, 0), v3(0, 1, 0)]).unwrap();
        assert_eq!(flat.reflexivity(), Err(NotReflexive::NotFullDimensional));
        assert!(matches!(
            cube3().dilate(2).unwrap().reflexivity(),
            Err(NotReflexive::FacetOffset { .. })
        ));
    }

    #[test]
    fn width_examples() {
        let cert = reeve2().width_certificate(4).unwrap();
        assert_eq!(
            cert,
            WidthCertificate {
                direction: v3(1, 0, 0),
                base: 0
            }
        );
        assert!(cert.certifies(&reeve2()));
        let seg = Polytope::hull(&[v3(0, 0, 0), v3(0, 0, 1)]).unwrap();
        assert_eq!(
            seg.width_certificate(1),
            Some(WidthCertificate {
                direction: v3(0, 0, 1),
                base: 0
            })
        );
        assert_eq!(cube3().width_certificate(4), None);
        assert_eq!(reeve2().default_width_bound(), 2);
    }

    #[test]
    fn volume_examples() {
        assert_eq!(reeve2().normalized_volume().unwrap(), 2);
        let simplex =
            Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)]).unwrap();
        assert_eq!(simplex.normalized_volume().unwrap(), 1);
        assert_eq!(cube3().normalized_volume().unwrap(), 48);
        assert_eq!(octa().normalized_volume().unwrap(), 8);
        let hexagon = Polytope::hull(&[
            v2(1, 0),
            v2(0, 1),
            v2(-1, 1),
            v2(-1, 0),
            v2(0, -1),
            v2(1, -1),
        ])
        .unwrap();
        assert_eq!(hexagon.normalized_volume().unwrap(), 6);
        let seg = Polytope::hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        assert!(seg.normalized_volume().is_err());
    }

    #[test]
    fn contains_examples() {
        assert!(!reeve2().contains(&v3(1, 1, 1)).unwrap());
        assert!(reeve2().dilate(2).unwrap().contains(&v3(1, 1, 1)).unwrap());
        assert!(reeve2().contains(&v2(0, 0)).is_err());
        let seg = Polytope::hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        assert_eq!(seg.dim(), 1);
    }

    #[test]
    fn translate_moves_vertices() {
        let t = reeve2_fano();
        assert_eq!(
            t.vertices(),
            &[v3(-1, -1, -1), v3(-1, 1, -1), v3(1, -1, -1), v3(1, 1, 3)]
        );
        assert_eq!(t.interior_lattice_points(), vec![v3(0, 0, 0)]);
    }
}
