//! Complete simplicial fans, torus-invariant divisors and their section
//! polytopes.

use std::collections::HashMap;
use std::time::Instant;

use thiserror::Error;

use crate::lattice::{
    det2_wide, det3_wide, primitive, solve_pairing_system, Int, LatticeError, LatticeVector, Rat,
    RatVector,
};
use crate::normality::CheckReport;
use crate::polytope::{scan_lattice_points, HalfSpace, Polytope, PolytopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("divisor has {found} coefficients but the fan has {expected} rays")]
    DivisorLength { expected: usize, found: usize },
    #[error("section polytope has the non-integral vertex {witness}")]
    NonIntegralVertices { witness: RatVector },
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("cone {0:?} is not simplicial")]
    NotSimplicial(Vec<usize>),
    #[error("cone {0:?} has linearly dependent rays")]
    SingularCone(Vec<usize>),
    #[error("no such cone: {0}")]
    NoSuchCone(usize),
    #[error("the linear system |D| is empty")]
    EmptyLinearSystem,
    #[error("polytope must be full-dimensional")]
    NotFullDimensional,
}

pub type Result<T, E = ToricError> = std::result::Result<T, E>;

/// A maximal cone, as sorted indices into the ray table of its fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    pub rays: Vec<usize>,
}

/// A complete fan in `N ≅ Z^2` or `Z^3`. Rays are primitive and lex-sorted;
/// cones are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Cone>,
}

/// `D = Σ a_i D_i`, coefficients parallel to the fan's rays.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TDivisor {
    pub coeffs: Vec<Int>,
}

impl TDivisor {
    pub fn new(coeffs: Vec<Int>) -> Self {
        Self { coeffs }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(ToricError::DivisorLength {
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(LatticeError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportPoint {
    Integral(LatticeVector),
    /// The cone's linear system has only a rational solution.
    NonIntegral(RatVector),
}

/// Why a base-point-freeness verification did not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkipReason {
    NotSurface,
    NotSmooth,
    EmptyLinearSystem,
    FixedComponents(Vec<Int>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BpfOutcome {
    Checked(CheckReport),
    Skipped(SkipReason),
}

fn det_of(rows: &[LatticeVector]) -> i128 {
    match rows.len() {
        2 => det2_wide(&rows[0], &rows[1]),
        3 => det3_wide(&rows[0], &rows[1], &rows[2]),
        _ => 0,
    }
}

// Generic directions for the covering-degree test; one of them avoids the
// boundary of every cone of any reasonable fan.
const PROBES: [[Int; 3]; 4] = [
    [1_000_003, 1_009, 17],
    [-7_919, 104_729, 3],
    [31_337, -271, 6_151],
    [-13, -65_537, 2_053],
];

impl Fan {
    /// Validates and canonicalizes a simplicial fan. Completeness is checked
    /// by requiring every codimension-one face to be shared by exactly two
    /// cones lying on opposite sides of it, and a generic direction to lie in
    /// exactly one cone.
    pub fn new(rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Self> {
        Ok(Self::canonical(rays, cones)?.0)
    }

    /// Builds a fan together with a divisor given in the input ray order.
    pub fn with_divisor(
        rays: Vec<LatticeVector>,
        cones: Vec<Vec<usize>>,
        coeffs: Vec<Int>,
    ) -> Result<(Self, TDivisor)> {
        if coeffs.len() != rays.len() {
            return Err(ToricError::DivisorLength {
                expected: rays.len(),
                found: coeffs.len(),
            });
        }
        let (fan, perm) = Self::canonical(rays, cones)?;
        let mut out = vec![0; coeffs.len()];
        for (old, &new) in perm.iter().enumerate() {
            out[new] = coeffs[old];
        }
        Ok((fan, TDivisor::new(out)))
    }

    /// A complete 2-dimensional fan from rays listed in cyclic order; cones
    /// join consecutive rays.
    pub fn from_cyclic_rays(rays: Vec<LatticeVector>) -> Result<Self> {
        let s = rays.len();
        let cones = (0..s).map(|i| vec![i, (i + 1) % s]).collect();
        Self::new(rays, cones)
    }

    /// Returns the fan and, for each input ray index, its canonical index.
    fn canonical(rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<(Self, Vec<usize>)> {
        let dim = rays
            .first()
            .map(|r| r.dim())
            .ok_or_else(|| ToricError::InvalidFan("no rays".into()))?;
        for r in &rays {
            if r.dim() != dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: dim,
                    found: r.dim(),
                }
                .into());
            }
            if r.is_zero() || primitive(r)? != *r {
                return Err(ToricError::InvalidFan(format!(
                    "ray {r} is not a primitive nonzero vector"
                )));
            }
        }
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by_key(|&i| rays[i]);
        let mut perm = vec![0; rays.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let sorted: Vec<LatticeVector> = order.iter().map(|&i| rays[i]).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(ToricError::InvalidFan("duplicate ray".into()));
        }
        let mut max_cones = Vec::with_capacity(cones.len());
        for c in cones {
            if c.iter().any(|&i| i >= rays.len()) {
                return Err(ToricError::InvalidFan(format!(
                    "cone {c:?} references a missing ray"
                )));
            }
            let mut idx: Vec<usize> = c.iter().map(|&i| perm[i]).collect();
            idx.sort_unstable();
            idx.dedup();
            if idx.len() != dim {
                return Err(ToricError::NotSimplicial(c));
            }
            max_cones.push(Cone { rays: idx });
        }
        max_cones.sort();
        let fan = Self {
            dim,
            rays: sorted,
            max_cones,
        };
        fan.validate()?;
        Ok((fan, perm))
    }

    fn validate(&self) -> Result<()> {
        if self.max_cones.windows(2).any(|w| w[0] == w[1]) {
            return Err(ToricError::InvalidFan("duplicate cone".into()));
        }
        let mut used = vec![false; self.rays.len()];
        for c in &self.max_cones {
            if det_of(&self.cone_rays(c)) == 0 {
                return Err(ToricError::SingularCone(c.rays.clone()));
            }
            for &i in &c.rays {
                used[i] = true;
            }
        }
        if used.iter().any(|u| !u) {
            return Err(ToricError::InvalidFan(
                "a ray lies in no maximal cone".into(),
            ));
        }

        // Each wall (codimension-one face) must separate exactly two cones.
        let mut walls: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for c in &self.max_cones {
            for skip in 0..self.dim {
                let wall: Vec<usize> = c
                    .rays
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &r)| r)
                    .collect();
                walls.entry(wall).or_default().push(c.rays[skip]);
            }
        }
        for (wall, opposite) in &walls {
            if opposite.len() != 2 {
                return Err(ToricError::InvalidFan(format!(
                    "wall {wall:?} lies in {} cones",
                    opposite.len()
                )));
            }
            let side = |x: &LatticeVector| -> i128 {
                let mut rows: Vec<LatticeVector> = wall.iter().map(|&i| self.rays[i]).collect();
                rows.push(*x);
                det_of(&rows).signum()
            };
            if side(&self.rays[opposite[0]]) * side(&self.rays[opposite[1]]) >= 0 {
                return Err(ToricError::InvalidFan(format!(
                    "cones on wall {wall:?} overlap"
                )));
            }
        }

        for probe in PROBES {
            let g = LatticeVector::new(&probe[..self.dim])?;
            let mut hits = 0;
            let mut degenerate = false;
            for c in &self.max_cones {
                let rows = self.cone_rays(c);
                let d = det_of(&rows).signum();
                let mut inside = true;
                for j in 0..self.dim {
                    let mut m = rows.clone();
                    m[j] = g;
                    let s = det_of(&m).signum();
                    if s == 0 {
                        degenerate = true;
                    }
                    if s != d {
                        inside = false;
                    }
                }
                if inside {
                    hits += 1;
                }
            }
            if degenerate {
                continue;
            }
            return if hits == 1 {
                Ok(())
            } else {
                Err(ToricError::InvalidFan(format!(
                    "cones cover a generic direction {hits} times"
                )))
            };
        }
        Err(ToricError::InvalidFan(
            "could not find a generic probe direction".into(),
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    pub fn cone_rays(&self, cone: &Cone) -> Vec<LatticeVector> {
        cone.rays.iter().map(|&i| self.rays[i]).collect()
    }

    pub fn is_simplicial(&self) -> bool {
        self.max_cones.iter().all(|c| c.rays.len() == self.dim)
    }

    /// Every maximal cone is generated by a basis of `N`.
    pub fn is_smooth(&self) -> bool {
        self.is_simplicial()
            && self
                .max_cones
                .iter()
                .all(|c| det_of(&self.cone_rays(c)).abs() == 1)
    }

    pub fn divisor(&self, coeffs: Vec<Int>) -> Result<TDivisor> {
        if coeffs.len() != self.rays.len() {
            return Err(ToricError::DivisorLength {
                expected: self.rays.len(),
                found: coeffs.len(),
            });
        }
        Ok(TDivisor::new(coeffs))
    }

    fn check_divisor(&self, d: &TDivisor) -> Result<()> {
        if d.coeffs.len() != self.rays.len() {
            return Err(ToricError::DivisorLength {
                expected: self.rays.len(),
                found: d.coeffs.len(),
            });
        }
        Ok(())
    }

    /// `−K = Σ D_i`.
    pub fn anticanonical(&self) -> TDivisor {
        TDivisor::new(vec![1; self.rays.len()])
    }

    fn halfspaces(&self, d: &TDivisor) -> Vec<HalfSpace> {
        self.rays
            .iter()
            .zip(&d.coeffs)
            .map(|(&normal, &offset)| HalfSpace { normal, offset })
            .collect()
    }

    /// Vertices of `P_D`, possibly rational.
    fn section_vertices(&self, d: &TDivisor) -> Result<Vec<RatVector>> {
        let s = self.rays.len();
        let mut out: Vec<RatVector> = Vec::new();
        let mut subset: Vec<usize> = (0..self.dim).collect();
        loop {
            let rows: Vec<LatticeVector> = subset.iter().map(|&i| self.rays[i]).collect();
            let rhs: Vec<Int> = subset.iter().map(|&i| -d.coeffs[i]).collect();
            if let Some(y) = solve_pairing_system(&rows, &rhs)? {
                let feasible = self.rays.iter().zip(&d.coeffs).all(|(v, &a)| {
                    rat_pair(&y, v)
                        .checked_add(&Rat::from_int(a))
                        .map(|x| x >= Rat::from_int(0))
                        .unwrap_or(false)
                });
                if feasible && !out.contains(&y) {
                    out.push(y);
                }
            }
            // Next combination in lex order.
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if subset[i] < s - self.dim + i {
                    break;
                }
            }
            subset[i] += 1;
            for j in i + 1..self.dim {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    /// `P_D = {y : ⟨y, v_i⟩ ≥ −a_i}`. `Ok(None)` when empty; an error when
    /// some vertex is not integral (dilate the divisor to clear denominators).
    pub fn polytope_of_divisor(&self, d: &TDivisor) -> Result<Option<Polytope>> {
        self.check_divisor(d)?;
        let verts = self.section_vertices(d)?;
        if verts.is_empty() {
            return Ok(None);
        }
        let mut lattice = Vec::with_capacity(verts.len());
        for v in verts {
            match v.to_lattice() {
                Some(p) => lattice.push(p),
                None => return Err(ToricError::NonIntegralVertices { witness: v }),
            }
        }
        Ok(Some(Polytope::hull(&lattice)?))
    }

    /// `P_D ∩ M`, also when `P_D` has rational vertices.
    pub fn section_lattice_points(&self, d: &TDivisor) -> Result<Vec<LatticeVector>> {
        self.check_divisor(d)?;
        let verts = self.section_vertices(d)?;
        if verts.is_empty() {
            return Ok(Vec::new());
        }
        let mut lo = vec![Int::MAX; self.dim];
        let mut hi = vec![Int::MIN; self.dim];
        for v in &verts {
            for i in 0..self.dim {
                let to_int = |x: i128| Int::try_from(x).map_err(|_| LatticeError::Overflow);
                lo[i] = lo[i].min(to_int(v.0[i].ceil())?);
                hi[i] = hi[i].max(to_int(v.0[i].floor())?);
            }
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Ok(Vec::new());
        }
        Ok(scan_lattice_points(
            &self.halfspaces(d),
            &LatticeVector::new(&lo)?,
            &LatticeVector::new(&hi)?,
            0,
        ))
    }

    /// The solution `u(σ)` of `⟨u, v_i⟩ = −a_i` for the rays of cone `cone`.
    pub fn cone_support_point(&self, d: &TDivisor, cone: usize) -> Result<SupportPoint> {
        self.check_divisor(d)?;
        let c = self
            .max_cones
            .get(cone)
            .ok_or(ToricError::NoSuchCone(cone))?;
        if c.rays.len() != self.dim {
            return Err(ToricError::NotSimplicial(c.rays.clone()));
        }
        let rhs: Vec<Int> = c.rays.iter().map(|&i| -d.coeffs[i]).collect();
        let u = solve_pairing_system(&self.cone_rays(c), &rhs)?
            .ok_or_else(|| ToricError::SingularCone(c.rays.clone()))?;
        Ok(match u.to_lattice() {
            Some(p) => SupportPoint::Integral(p),
            None => SupportPoint::NonIntegral(u),
        })
    }

    /// Index of the cone with exactly these (canonical) ray indices.
    pub fn find_cone(&self, rays: &[usize]) -> Option<usize> {
        let mut key = rays.to_vec();
        key.sort_unstable();
        self.max_cones.iter().position(|c| c.rays == key)
    }

    /// Support points that violate some inequality of `P_D`.
    fn outlying_support_points(&self, d: &TDivisor) -> Result<Vec<LatticeVector>> {
        let hs = self.halfspaces(d);
        let mut out = Vec::new();
        for i in 0..self.max_cones.len() {
            match self.cone_support_point(d, i)? {
                SupportPoint::Integral(u) => {
                    if !hs.iter().all(|h| h.contains(&u)) {
                        out.push(u);
                    }
                }
                SupportPoint::NonIntegral(_) => return Err(ToricError::NotSmooth),
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// On a smooth complete fan, `D` is nef iff every support point `u(σ)`
    /// lies in `P_D`.
    pub fn is_nef(&self, d: &TDivisor) -> Result<bool> {
        self.check_divisor(d)?;
        if !self.is_smooth() {
            return Err(ToricError::NotSmooth);
        }
        Ok(self.outlying_support_points(d)?.is_empty())
    }

    /// Multiplicities `c_i = min over P_D∩M of ⟨m, v_i⟩ + a_i` of the fixed
    /// components of `|D|`.
    pub fn fixed_components(&self, d: &TDivisor) -> Result<Vec<Int>> {
        let points = self.section_lattice_points(d)?;
        if points.is_empty() {
            return Err(ToricError::EmptyLinearSystem);
        }
        Ok(self
            .rays
            .iter()
            .zip(&d.coeffs)
            .map(|(v, &a)| points.iter().map(|m| m.dot(v) + a).min().unwrap())
            .collect())
    }

    /// `D − F` where `F` is the fixed part of `|D|`.
    pub fn remove_fixed_part(&self, d: &TDivisor) -> Result<TDivisor> {
        let c = self.fixed_components(d)?;
        Ok(TDivisor::new(
            d.coeffs.iter().zip(&c).map(|(a, c)| a - c).collect(),
        ))
    }

    /// On a smooth complete surface, a linear system without fixed
    /// components is base point free. Checks that `D` is nef whenever the
    /// hypotheses hold; otherwise reports why it was skipped.
    pub fn verify_surface_bpf(&self, d: &TDivisor) -> Result<BpfOutcome> {
        let started = Instant::now();
        self.check_divisor(d)?;
        if self.dim != 2 {
            return Ok(BpfOutcome::Skipped(SkipReason::NotSurface));
        }
        if !self.is_smooth() {
            return Ok(BpfOutcome::Skipped(SkipReason::NotSmooth));
        }
        let fixed = match self.fixed_components(d) {
            Ok(c) => c,
            Err(ToricError::EmptyLinearSystem) => {
                return Ok(BpfOutcome::Skipped(SkipReason::EmptyLinearSystem))
            }
            Err(e) => return Err(e),
        };
        if fixed.iter().any(|&c| c != 0) {
            return Ok(BpfOutcome::Skipped(SkipReason::FixedComponents(fixed)));
        }
        let outliers = self.outlying_support_points(d)?;
        let cones = self.max_cones.len();
        Ok(BpfOutcome::Checked(CheckReport {
            check_name: "surface-bpf".into(),
            holds: outliers.is_empty(),
            level: None,
            lhs_count: cones - outliers.len().min(cones),
            rhs_count: cones,
            gap_points: outliers,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }))
    }

    /// The fan of the projective plane: rays `e1, e2, −e1−e2`.
    pub fn projective_plane() -> Self {
        Self::from_cyclic_rays(vec![
            LatticeVector::new2(1, 0),
            LatticeVector::new2(0, 1),
            LatticeVector::new2(-1, -1),
        ])
        .expect("fan of the projective plane")
    }

    /// The Hirzebruch surface `F_a`: rays `(1,0), (0,1), (−1,a), (0,−1)`.
    pub fn hirzebruch(a: Int) -> Result<Self> {
        Self::from_cyclic_rays(vec![
            LatticeVector::new2(1, 0),
            LatticeVector::new2(0, 1),
            LatticeVector::new2(-1, a),
            LatticeVector::new2(0, -1),
        ])
    }
}

fn rat_pair(y: &RatVector, v: &LatticeVector) -> Rat {
    y.0.iter()
        .zip(v.coords())
        .fold(Rat::from_int(0), |acc, (c, &x)| {
            acc.checked_add(&c.checked_mul(&Rat::from_int(x)).unwrap())
                .unwrap()
        })
}

/// Normal fan of a full-dimensional polytope with the divisor of its facet
/// offsets, so that `polytope_of_divisor` recovers the polytope. Cones are
/// dual to vertices and need not be simplicial.
pub fn normal_fan(p: &Polytope) -> Result<(Fan, TDivisor)> {
    if !p.is_full_dimensional() {
        return Err(ToricError::NotFullDimensional);
    }
    // Facet normals of a full-dimensional polytope are distinct and sorted.
    let rays: Vec<LatticeVector> = p.facets().iter().map(|h| h.normal).collect();
    let coeffs: Vec<Int> = p.facets().iter().map(|h| h.offset).collect();
    let mut max_cones: Vec<Cone> = p
        .vertices()
        .iter()
        .map(|v| Cone {
            rays: p
                .facets()
                .iter()
                .enumerate()
                .filter(|(_, h)| h.slack(v) == 0)
                .map(|(i, _)| i)
                .collect(),
        })
        .collect();
    max_cones.sort();
    Ok((
        Fan {
            dim: p.ambient_dim(),
            rays,
            max_cones,
        },
        TDivisor::new(coeffs),
    ))
}

/// Hull of the interior lattice points: the section polytope of the movable
/// part of `D + K`. `None` when there are no interior points.
pub fn adjoint_polytope(p: &Polytope) -> Result<Option<Polytope>> {
    if !p.is_full_dimensional() {
        return Err(ToricError::NotFullDimensional);
    }
    let inner = p.interior_lattice_points();
    if inner.is_empty() {
        return Ok(None);
    }
    Ok(Some(Polytope::hull(&inner)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2(x: Int, y: Int) -> LatticeVector {
        LatticeVector::new2(x, y)
    }

    fn v3(x: Int, y: Int, z: Int) -> LatticeVector {
        LatticeVector::new3(x, y, z)
    }

    fn reeve2() -> Polytope {
        Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 2)]).unwrap()
    }

    fn cube3() -> Polytope {
        let pts: Vec<_> = (0..8)
            .map(|i| v3(2 * (i & 1) - 1, (i & 2) - 1, (i & 4) / 2 - 1))
            .collect();
        Polytope::hull(&pts).unwrap()
    }

    /// P² fan with a divisor given in the order `(1,0), (0,1), (−1,−1)`.
    fn p2(coeffs: [Int; 3]) -> (Fan, TDivisor) {
        Fan::with_divisor(
            vec![v2(1, 0), v2(0, 1), v2(-1, -1)],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            coeffs.to_vec(),
        )
        .unwrap()
    }

    /// F₂ fan with a divisor given in the order `(1,0), (0,1), (−1,2), (0,−1)`.
    fn f2(coeffs: [Int; 4]) -> (Fan, TDivisor) {
        Fan::with_divisor(
            vec![v2(1, 0), v2(0, 1), v2(-1, 2), v2(0, -1)],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            coeffs.to_vec(),
        )
        .unwrap()
    }

    fn ray_index(f: &Fan, r: LatticeVector) -> usize {
        f.rays().iter().position(|&x| x == r).unwrap()
    }

    #[test]
    fn fan_validation() {
        assert!(Fan::from_cyclic_rays(vec![v2(1, 0), v2(0, 1)]).is_err());
        // Rays in the wrong cyclic order wind around twice.
        assert!(
            Fan::from_cyclic_rays(vec![v2(1, 0), v2(-1, -1), v2(0, 1), v2(-1, 1), v2(1, -1)])
                .is_err()
        );
        assert!(Fan::new(
            vec![v2(2, 0), v2(0, 1), v2(-1, -1)],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]]
        )
        .is_err());
        // Missing cone: not complete.
        assert!(Fan::new(
            vec![v2(1, 0), v2(0, 1), v2(-1, -1)],
            vec![vec![0, 1], vec![1, 2]]
        )
        .is_err());
        let octants: Vec<Vec<usize>> = (0..8)
            .map(|i| vec![i & 1, 2 + ((i >> 1) & 1), 4 + ((i >> 2) & 1)])
            .collect();
        let rays = vec![
            v3(1, 0, 0),
            v3(-1, 0, 0),
            v3(0, 1, 0),
            v3(0, -1, 0),
            v3(0, 0, 1),
            v3(0, 0, -1),
        ];
        let f = Fan::new(rays, octants).unwrap();
        assert!(f.is_smooth());
        assert_eq!(f.max_cones().len(), 8);
    }

    #[test]
    fn normal_fan_examples() {
        let tri = Polytope::hull(&[v2(0, 0), v2(1, 0), v2(0, 1)]).unwrap();
        let (f, d) = normal_fan(&tri).unwrap();
        assert_eq!(f.rays(), &[v2(-1, -1), v2(0, 1), v2(1, 0)]);
        assert_eq!(d.coeffs, vec![1, 0, 0]);
        assert_eq!(f, Fan::projective_plane());

        let (f, d) = normal_fan(&cube3()).unwrap();
        assert_eq!(f.rays().len(), 6);
        assert_eq!(f.max_cones().len(), 8);
        assert_eq!(d.coeffs, vec![1; 6]);
        assert!(f.is_smooth());

        let (f, d) = normal_fan(&reeve2()).unwrap();
        assert_eq!(
            f.rays(),
            &[v3(-2, -2, 1), v3(0, 0, 1), v3(0, 2, -1), v3(2, 0, -1)]
        );
        assert_eq!(d.coeffs, vec![2, 0, 0, 0]);
        assert!(!f.is_smooth());
        assert_eq!(f.polytope_of_divisor(&d).unwrap(), Some(reeve2()));
    }

    #[test]
    fn smoothness() {
        assert!(Fan::projective_plane().is_smooth());
        assert!(Fan::hirzebruch(2).unwrap().is_smooth());
        let (f, _) = normal_fan(&reeve2()).unwrap();
        let dets: Vec<i128> = f
            .max_cones()
            .iter()
            .map(|c| det_of(&f.cone_rays(c)).abs())
            .collect();
        assert_eq!(dets, vec![4; 4]);
    }

    #[test]
    fn divisor_polytopes() {
        let (f, d) = p2([0, 0, 1]);
        let tri = Polytope::hull(&[v2(0, 0), v2(1, 0), v2(0, 1)]).unwrap();
        assert_eq!(f.polytope_of_divisor(&d).unwrap(), Some(tri));
        let (f, d) = p2([-1, -1, -1]);
        assert_eq!(f.polytope_of_divisor(&d).unwrap(), None);
        let (f, d) = normal_fan(&cube3()).unwrap();
        assert_eq!(f.polytope_of_divisor(&d).unwrap(), Some(cube3()));
        // y1 ≥ −1, −1 ≤ y2 ≤ 0, y1 ≤ 2·y2 has the vertex (−1, −1/2).
        let (f, d) = f2([1, 1, 0, 0]);
        match f.polytope_of_divisor(&d) {
            Err(ToricError::NonIntegralVertices { witness }) => assert!(!witness.is_integral()),
            other => panic!("expected a rational vertex, got {other:?}"),
        }
        assert!(f.polytope_of_divisor(&TDivisor::new(vec![0; 3])).is_err());
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(
            Fan::projective_plane().anticanonical().coeffs,
            vec![1, 1, 1]
        );
        assert_eq!(
            normal_fan(&cube3()).unwrap().0.anticanonical().coeffs,
            vec![1; 6]
        );
        assert_eq!(
            Fan::hirzebruch(2).unwrap().anticanonical().coeffs,
            vec![1; 4]
        );
    }

    #[test]
    fn support_point_examples() {
        let (f, d) = p2([0, 0, 1]);
        let (e1, e2, e3) = (
            ray_index(&f, v2(1, 0)),
            ray_index(&f, v2(0, 1)),
            ray_index(&f, v2(-1, -1)),
        );
        let c12 = f.find_cone(&[e1, e2]).unwrap();
        assert_eq!(
            f.cone_support_point(&d, c12).unwrap(),
            SupportPoint::Integral(v2(0, 0))
        );
        let c23 = f.find_cone(&[e2, e3]).unwrap();
        assert_eq!(
            f.cone_support_point(&d, c23).unwrap(),
            SupportPoint::Integral(v2(1, 0))
        );

        let (f, d) = f2([0, 0, 0, 1]);
        let c = f
            .find_cone(&[ray_index(&f, v2(-1, 2)), ray_index(&f, v2(0, -1))])
            .unwrap();
        assert_eq!(
            f.cone_support_point(&d, c).unwrap(),
            SupportPoint::Integral(v2(2, 1))
        );
        assert_eq!(
            f.cone_support_point(&d, 99),
            Err(ToricError::NoSuchCone(99))
        );
    }

    #[test]
    fn nef_examples() {
        let (f, d) = p2([0, 0, 1]);
        assert!(f.is_nef(&d).unwrap());
        let (f, d) = f2([0, 0, 0, 1]);
        assert!(f.is_nef(&d).unwrap());
        let (f, d) = p2([0, 0, -1]);
        assert!(!f.is_nef(&d).unwrap());
        let (g, e) = normal_fan(&reeve2()).unwrap();
        assert_eq!(g.is_nef(&e), Err(ToricError::NotSmooth));
    }

    #[test]
    fn fixed_component_examples() {
        let (f, d) = f2([0, 1, 0, 0]);
        let c = f.fixed_components(&d).unwrap();
        let mut expected = vec![0; 4];
        expected[ray_index(&f, v2(0, 1))] = 1;
        assert_eq!(c, expected);
        assert_eq!(f.section_lattice_points(&d).unwrap(), vec![v2(0, 0)]);

        let (f, d) = p2([0, 0, 1]);
        assert_eq!(f.fixed_components(&d).unwrap(), vec![0, 0, 0]);
        let (f, d) = f2([0, 0, 0, 0]);
        assert_eq!(f.fixed_components(&d).unwrap(), vec![0; 4]);
        let (f, d) = p2([-1, -1, -1]);
        assert_eq!(f.fixed_components(&d), Err(ToricError::EmptyLinearSystem));
    }

    #[test]
    fn fixed_part_removal_is_idempotent() {
        let (f, d) = f2([0, 1, 0, 0]);
        let reduced = f.remove_fixed_part(&d).unwrap();
        assert_eq!(f.fixed_components(&reduced).unwrap(), vec![0; 4]);
        assert_eq!(
            f.section_lattice_points(&reduced).unwrap(),
            f.section_lattice_points(&d).unwrap()
        );
    }

    #[test]
    fn bpf_examples() {
        for (f, d) in [f2([0, 0, 0, 1]), (p2([0, 0, 1]))] {
            match f.verify_surface_bpf(&d).unwrap() {
                BpfOutcome::Checked(r) => assert!(r.holds),
                other => panic!("unexpected {other:?}"),
            }
        }
        let (f, d) = f2([0, 1, 0, 0]);
        assert!(matches!(
            f.verify_surface_bpf(&d).unwrap(),
            BpfOutcome::Skipped(SkipReason::FixedComponents(_))
        ));
        let (f, d) = p2([-1, -1, -1]);
        assert_eq!(
            f.verify_surface_bpf(&d).unwrap(),
            BpfOutcome::Skipped(SkipReason::EmptyLinearSystem)
        );
    }

    #[test]
    fn adjoint_examples() {
        let a = adjoint_polytope(&reeve2().dilate(2).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(a.vertices(), &[v3(1, 1, 1)]);
        assert_eq!(
            adjoint_polytope(&cube3()).unwrap().unwrap().vertices(),
            &[v3(0, 0, 0)]
        );
        assert_eq!(adjoint_polytope(&reeve2()).unwrap(), None);
    }
}
