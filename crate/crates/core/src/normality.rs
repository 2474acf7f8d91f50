//! Minkowski-sum identities on lattice points.
//!
//! Every check compares a pointwise sum of lattice-point sets (the left-hand
//! side) with the lattice points of a Minkowski sum (the right-hand side).
//! The inclusion `LHS ⊆ RHS` always holds for lattice polytopes; it is
//! asserted on every run and a violation is reported as an error.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Int, LatticeError, LatticeVector};
use crate::polytope::{NotReflexive, Polytope, PolytopeError, WidthCertificate};
use crate::triangulation::placing_triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalityError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("point {point} of the pointwise sum lies outside the Minkowski sum")]
    InclusionViolated { point: LatticeVector },
    #[error("polytope has dimension {dim}, expected {expected}")]
    WrongDimension { dim: usize, expected: usize },
    #[error("ambient dimension {found} is not supported here (expected {expected})")]
    WrongAmbient { found: usize, expected: usize },
    #[error("first polytope is not reflexive: {0}")]
    NotReflexive(NotReflexive),
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(Int),
    #[error("no width-1 certificate found for empty simplex with vertices {vertices:?}")]
    CertificateNotFound { vertices: Vec<LatticeVector> },
    #[error("simplex with vertices {vertices:?} contains extra lattice points")]
    NonEmptySimplex { vertices: Vec<LatticeVector> },
}

impl From<LatticeError> for NormalityError {
    fn from(e: LatticeError) -> Self {
        Self::Polytope(e.into())
    }
}

pub type Result<T, E = NormalityError> = std::result::Result<T, E>;

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "check")]
    pub check_name: String,
    pub holds: bool,
    pub level: Option<Int>,
    /// Points of the right-hand side missing from the left-hand side.
    #[serde(rename = "gap")]
    pub gap_points: Vec<LatticeVector>,
    pub lhs_count: usize,
    pub rhs_count: usize,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn counts(&self) -> (usize, usize) {
        (self.lhs_count, self.rhs_count)
    }

    /// Compares `lhs ⊆ rhs`, both lex-sorted and deduplicated, by merging.
    pub fn compare(
        check: &str,
        level: Option<Int>,
        lhs: &[LatticeVector],
        rhs: &[LatticeVector],
        started: Instant,
    ) -> Result<Self> {
        let mut gap = Vec::new();
        let mut i = 0;
        for r in rhs {
            match lhs.get(i) {
                Some(l) if l < r => return Err(NormalityError::InclusionViolated { point: *l }),
                Some(l) if l == r => i += 1,
                _ => gap.push(*r),
            }
        }
        if let Some(l) = lhs.get(i) {
            return Err(NormalityError::InclusionViolated { point: *l });
        }
        Ok(Self {
            check_name: check.to_string(),
            holds: gap.is_empty(),
            level,
            gap_points: gap,
            lhs_count: lhs.len(),
            rhs_count: rhs.len(),
            elapsed_ms: started.elapsed().as_millis() as u64,
        })
    }

    /// A copy with the timing zeroed, for byte-stable output.
    pub fn stable(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

/// `{s + t}`, lex-sorted and deduplicated.
pub fn pointwise_sum(s: &[LatticeVector], t: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let mut out = Vec::with_capacity(s.len() * t.len());
    for a in s {
        for b in t {
            out.push(a.checked_add(b)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn same_ambient(p: &Polytope, q: &Polytope) -> Result<()> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(LatticeError::DimensionMismatch {
            expected: p.ambient_dim(),
            found: q.ambient_dim(),
        }
        .into());
    }
    Ok(())
}

fn sum_identity(
    check: &str,
    level: Option<Int>,
    left: &Polytope,
    right: &Polytope,
    started: Instant,
) -> Result<CheckReport> {
    let lhs = pointwise_sum(&left.lattice_points(), &right.lattice_points())?;
    let rhs = left.minkowski_sum(right)?.lattice_points();
    CheckReport::compare(check, level, &lhs, &rhs, started)
}

/// `P∩M + Q∩M = (P+Q)∩M`.
pub fn check_sum_equality(p: &Polytope, q: &Polytope) -> Result<CheckReport> {
    let started = Instant::now();
    same_ambient(p, q)?;
    sum_identity("sum-equality", None, p, q, started)
}

/// Integer decomposition property, checked at levels `k = 1..n−1`:
/// `P∩M + (kP)∩M = ((k+1)P)∩M`. Higher levels follow from these.
///
/// On failure the report carries the first failing level; on success, the
/// counts of the last level.
pub fn check_idp(p: &Polytope) -> Result<CheckReport> {
    let started = Instant::now();
    if !p.is_full_dimensional() {
        return Err(NormalityError::WrongDimension {
            dim: p.dim(),
            expected: p.ambient_dim(),
        });
    }
    let n = p.ambient_dim() as Int;
    let base = p.lattice_points();
    let mut report = None;
    for k in 1..n {
        let lhs = pointwise_sum(&base, &p.dilate(k)?.lattice_points())?;
        let rhs = p.dilate(k + 1)?.lattice_points();
        let r = CheckReport::compare("idp", Some(k), &lhs, &rhs, started)?;
        if !r.holds {
            return Ok(r);
        }
        report = Some(r);
    }
    let mut r = report.expect("ambient dimension is at least 2");
    r.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(r)
}

/// `(R + kQ)∩M + Q∩M = (R + (k+1)Q)∩M`.
pub fn check_pair_identity(r: &Polytope, q: &Polytope, k: Int) -> Result<CheckReport> {
    pair_identity("pair-identity", r, q, k, Instant::now())
}

fn pair_identity(
    check: &str,
    r: &Polytope,
    q: &Polytope,
    k: Int,
    started: Instant,
) -> Result<CheckReport> {
    same_ambient(r, q)?;
    if k < 1 {
        return Err(NormalityError::InvalidLevel(k));
    }
    let left = r.minkowski_sum(&q.dilate(k)?)?;
    sum_identity(check, Some(k), &left, q, started)
}

/// `(R+Q)∩M + Q∩M = (R+2Q)∩M` for a reflexive 3-polytope `R` and a lattice
/// 3-polytope `Q`. Both hypotheses are verified before checking.
pub fn check_fano_minkowski(r: &Polytope, q: &Polytope) -> Result<CheckReport> {
    let started = Instant::now();
    if r.ambient_dim() != 3 {
        return Err(NormalityError::WrongAmbient {
            found: r.ambient_dim(),
            expected: 3,
        });
    }
    r.reflexivity().map_err(NormalityError::NotReflexive)?;
    same_ambient(r, q)?;
    if q.dim() != 3 {
        return Err(NormalityError::WrongDimension {
            dim: q.dim(),
            expected: 3,
        });
    }
    pair_identity("fano-minkowski", r, q, 1, started)
}

/// `P_A∩M + (P_A+P_B)∩M = (2P_A+P_B)∩M` for lattice polygons, including
/// segments and points.
pub fn check_surface_multiplication(a: &Polytope, b: &Polytope) -> Result<CheckReport> {
    let started = Instant::now();
    for p in [a, b] {
        if p.ambient_dim() != 2 {
            return Err(NormalityError::WrongAmbient {
                found: p.ambient_dim(),
                expected: 2,
            });
        }
    }
    let ab = a.minkowski_sum(b)?;
    sum_identity("surface-multiplication", None, a, &ab, started)
}

/// A triangulation of a lattice 3-polytope into empty simplices, each with a
/// width-1 certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub pieces: Vec<Polytope>,
    pub certificates: Vec<WidthCertificate>,
}

impl Decomposition {
    pub fn total_volume(&self) -> Result<Int> {
        let mut total: Int = 0;
        for p in &self.pieces {
            total = total
                .checked_add(p.normalized_volume()?)
                .ok_or(LatticeError::Overflow)?;
        }
        Ok(total)
    }

    /// Re-verifies every property of the decomposition of `whole`: pieces are
    /// empty simplices, volumes add up, certificates are exact.
    pub fn verify(&self, whole: &Polytope) -> Result<bool> {
        let pieces_ok = self
            .pieces
            .iter()
            .all(|p| p.vertices().len() == 4 && p.lattice_points() == p.vertices());
        let certs_ok = self.pieces.len() == self.certificates.len()
            && self
                .pieces
                .iter()
                .zip(&self.certificates)
                .all(|(p, c)| c.certifies(p));
        Ok(pieces_ok && certs_ok && self.total_volume()? == whole.normalized_volume()?)
    }
}

/// Placing triangulation (lex order) of all lattice points of `q`; every
/// piece is checked to be empty and given a width certificate with the
/// default bound policy.
pub fn decompose_empty_simplices(q: &Polytope) -> Result<Decomposition> {
    if q.ambient_dim() != 3 || q.dim() != 3 {
        return Err(NormalityError::WrongDimension {
            dim: q.dim(),
            expected: 3,
        });
    }
    let tri = placing_triangulation(&q.lattice_points());
    let mut pieces = Vec::with_capacity(tri.simplices().len());
    let mut certificates = Vec::with_capacity(tri.simplices().len());
    for i in 0..tri.simplices().len() {
        let vertices = tri.simplex_vertices(i);
        let piece = Polytope::hull(&vertices)?;
        if piece.lattice_points().len() != 4 {
            return Err(NormalityError::NonEmptySimplex { vertices });
        }
        let cert = piece.width_certificate_default().ok_or_else(|| {
            NormalityError::CertificateNotFound {
                vertices: vertices.clone(),
            }
        })?;
        pieces.push(piece);
        certificates.push(cert);
    }
    Ok(Decomposition {
        pieces,
        certificates,
    })
}

/// Runs [`decompose_empty_simplices`] and reports it as a check: the counts
/// are the summed piece volume against the volume of `q`, and the gap lists
/// vertices of any piece failing verification.
pub fn check_decomposition(q: &Polytope) -> Result<CheckReport> {
    let started = Instant::now();
    let dec = decompose_empty_simplices(q)?;
    let mut gap: Vec<LatticeVector> = dec
        .pieces
        .iter()
        .zip(&dec.certificates)
        .filter(|(p, c)| !c.certifies(p) || p.lattice_points() != p.vertices())
        .flat_map(|(p, _)| p.vertices().to_vec())
        .collect();
    gap.sort_unstable();
    gap.dedup();
    let pieces_volume = dec.total_volume()? as usize;
    let whole_volume = q.normalized_volume()? as usize;
    Ok(CheckReport {
        check_name: "decompose-width".into(),
        holds: gap.is_empty() && pieces_volume == whole_volume,
        level: None,
        gap_points: gap,
        lhs_count: pieces_volume,
        rhs_count: whole_volume,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
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

    fn reeve2() -> Polytope {
        Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 2)]).unwrap()
    }

    fn cube3() -> Polytope {
        let pts: Vec<_> = (0..8)
            .map(|i| v3(2 * (i & 1) - 1, (i & 2) - 1, (i & 4) / 2 - 1))
            .collect();
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

    fn unit_simplex() -> Polytope {
        Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)]).unwrap()
    }

    fn origin3() -> Polytope {
        Polytope::origin(3).unwrap()
    }

    #[test]
    fn pointwise_sum_examples() {
        let t = reeve2().lattice_points();
        assert_eq!(pointwise_sum(&[v3(0, 0, 0)], &t).unwrap(), t);
        assert_eq!(pointwise_sum(&t, &t).unwrap().len(), 10);
        let s = [v2(0, 0), v2(1, 0)];
        assert_eq!(
            pointwise_sum(&s, &s).unwrap(),
            vec![v2(0, 0), v2(1, 0), v2(2, 0)]
        );
        assert!(pointwise_sum(&s, &[v3(0, 0, 0)]).is_err());
    }

    #[test]
    fn sum_equality_examples() {
        let r = check_sum_equality(&reeve2(), &reeve2()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.gap_points, vec![v3(1, 1, 1)]);
        assert_eq!(r.counts(), (10, 11));
        assert!(check_sum_equality(&cube3(), &cube3()).unwrap().holds);
        assert!(check_sum_equality(&reeve2(), &origin3()).unwrap().holds);
    }

    #[test]
    fn sum_equality_is_symmetric() {
        let a = reeve2();
        let b = reeve2().dilate(2).unwrap();
        let ab = check_sum_equality(&a, &b).unwrap();
        let ba = check_sum_equality(&b, &a).unwrap();
        assert_eq!(
            (ab.holds, &ab.gap_points, ab.counts()),
            (ba.holds, &ba.gap_points, ba.counts())
        );
    }

    #[test]
    fn inclusion_violation_is_an_error() {
        let lhs = [v2(5, 5)];
        let rhs = [v2(0, 0)];
        assert_eq!(
            CheckReport::compare("t", None, &lhs, &rhs, Instant::now()),
            Err(NormalityError::InclusionViolated { point: v2(5, 5) })
        );
    }

    #[test]
    fn idp_examples() {
        let r = check_idp(&reeve2()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.level, Some(1));
        assert_eq!(r.gap_points, vec![v3(1, 1, 1)]);
        let c = check_idp(&cube3()).unwrap();
        assert!(c.holds);
        assert_eq!(c.level, Some(2));
        let tri = Polytope::hull(&[v2(0, 0), v2(3, 1), v2(1, 4)]).unwrap();
        assert!(check_idp(&tri).unwrap().holds);
        let seg = Polytope::hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        assert!(matches!(
            check_idp(&seg),
            Err(NormalityError::WrongDimension { .. })
        ));
    }

    #[test]
    fn pair_identity_examples() {
        assert!(check_pair_identity(&origin3(), &reeve2(), 2).unwrap().holds);
        let k1 = check_pair_identity(&origin3(), &reeve2(), 1).unwrap();
        assert!(!k1.holds);
        assert_eq!(k1.gap_points, vec![v3(1, 1, 1)]);
        assert!(check_pair_identity(&cube3(), &reeve2(), 2).unwrap().holds);
        assert_eq!(
            check_pair_identity(&cube3(), &reeve2(), 0),
            Err(NormalityError::InvalidLevel(0))
        );
    }

    #[test]
    fn fano_minkowski_examples() {
        assert!(check_fano_minkowski(&cube3(), &reeve2()).unwrap().holds);
        assert!(
            check_fano_minkowski(&octa(), &unit_simplex())
                .unwrap()
                .holds
        );
        let fano = reeve2()
            .dilate(2)
            .unwrap()
            .translate(&v3(-1, -1, -1))
            .unwrap();
        assert!(check_fano_minkowski(&fano, &reeve2()).unwrap().holds);
        assert_eq!(
            check_fano_minkowski(&reeve2(), &cube3()),
            Err(NormalityError::NotReflexive(
                NotReflexive::OriginNotInterior
            ))
        );
        let flat = Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)]).unwrap();
        assert!(matches!(
            check_fano_minkowski(&cube3(), &flat),
            Err(NormalityError::WrongDimension { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_empty_simplices(&reeve2()).unwrap();
        assert_eq!(d.pieces, vec![reeve2()]);
        assert_eq!(
            d.certificates[0],
            WidthCertificate {
                direction: v3(1, 0, 0),
                base: 0
            }
        );

        let cube01: Vec<_> = (0..8)
            .map(|i| v3(i & 1, (i >> 1) & 1, (i >> 2) & 1))
            .collect();
        let cube01 = Polytope::hull(&cube01).unwrap();
        let d = decompose_empty_simplices(&cube01).unwrap();
        assert_eq!(d.pieces.len(), 6);
        assert_eq!(d.total_volume().unwrap(), 6);
        assert!(d.pieces.iter().all(|p| p.normalized_volume().unwrap() == 1));
        assert!(d.verify(&cube01).unwrap());

        let s2 = unit_simplex().dilate(2).unwrap();
        let d = decompose_empty_simplices(&s2).unwrap();
        assert_eq!(d.total_volume().unwrap(), 8);
        assert!(d.verify(&s2).unwrap());
        assert!(check_decomposition(&s2).unwrap().holds);
    }

    #[test]
    fn surface_multiplication_examples() {
        let sq = Polytope::hull(&[v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)]).unwrap();
        assert!(check_surface_multiplication(&sq, &sq).unwrap().holds);
        let a = Polytope::hull(&[v2(0, 0), v2(2, 1)]).unwrap();
        let b = Polytope::hull(&[v2(1, 1), v2(5, 3)]).unwrap();
        assert!(check_surface_multiplication(&a, &b).unwrap().holds);
        assert!(matches!(
            check_surface_multiplication(&reeve2(), &reeve2()),
            Err(NormalityError::WrongAmbient { .. })
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = check_sum_equality(&reeve2(), &reeve2()).unwrap().stable();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"check":"sum-equality","holds":false,"level":null,"gap":[[1,1,1]],"lhs_count":10,"rhs_count":11,"elapsed_ms":0}"#
        );
    }
}
