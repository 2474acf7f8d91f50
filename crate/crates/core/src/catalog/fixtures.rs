//! Named polytopes and fans.

use crate::lattice::{Int, LatticeVector};
use crate::polytope::Polytope;
use crate::toric::Fan;

use super::CatalogError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub polytope: Polytope,
    pub notes: String,
}

/// Names accepted by [`builtin`]. `REEVE<N>` (or `REEVEn(N)`) works for
/// every `N ≥ 1`; only `REEVE2` is listed.
pub const FIXTURE_NAMES: &[&str] = &[
    "REEVE2",
    "REEVE2-FANO",
    "CUBE3",
    "OCTA",
    "BIGSIMPLEX",
    "DUALSIMPLEX",
    "UNITCUBE",
    "UNITSIMPLEX",
];

/// The reflexive fixtures, in [`FIXTURE_NAMES`] order.
pub const REFLEXIVE_FIXTURES: &[&str] =
    &["REEVE2-FANO", "CUBE3", "OCTA", "BIGSIMPLEX", "DUALSIMPLEX"];

/// Names accepted by [`builtin_fan`]; `F<a>` works for every `a ≥ 0`.
pub const FAN_NAMES: &[&str] = &["P2", "P1xP1", "F1", "F2", "F3"];

fn v3(x: Int, y: Int, z: Int) -> LatticeVector {
    LatticeVector::new3(x, y, z)
}

fn hull(points: &[LatticeVector]) -> Polytope {
    Polytope::hull(points).expect("fixture vertices are valid")
}

fn cube(lo: Int, hi: Int) -> Polytope {
    let pts: Vec<_> = (0..8)
        .map(|i: Int| {
            let pick = |bit: Int| if i & bit != 0 { hi } else { lo };
            v3(pick(1), pick(2), pick(4))
        })
        .collect();
    hull(&pts)
}

/// `conv{0, e1, e2, (1, 1, n)}`: normalized volume `n`, no lattice points
/// besides its vertices.
pub fn reeve(n: Int) -> Result<Polytope, CatalogError> {
    if n < 1 {
        return Err(CatalogError::UnknownFixture(format!("REEVE{n}")));
    }
    Polytope::hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, n)]).map_err(Into::into)
}

fn reeve_parameter(name: &str) -> Option<Int> {
    let rest = name.strip_prefix("REEVE")?;
    let digits = rest
        .strip_prefix("n(")
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub fn builtin(name: &str) -> Result<Fixture, CatalogError> {
    let (polytope, notes) = match name {
        "REEVE2-FANO" => {
            let p = reeve(2)?.dilate(2)?.translate(&v3(-1, -1, -1))?;
            (
                p,
                "2·REEVE2 moved so that its unique interior point is the origin; reflexive",
            )
        }
        "CUBE3" => (cube(-1, 1), "[−1,1]^3; reflexive"),
        "OCTA" => (
            hull(&[
                v3(1, 0, 0),
                v3(-1, 0, 0),
                v3(0, 1, 0),
                v3(0, -1, 0),
                v3(0, 0, 1),
                v3(0, 0, -1),
            ]),
            "cross-polytope; reflexive",
        ),
        "BIGSIMPLEX" => (
            hull(&[v3(-1, -1, -1), v3(3, -1, -1), v3(-1, 3, -1), v3(-1, -1, 3)]),
            "reflexive simplex; polar dual of DUALSIMPLEX",
        ),
        "DUALSIMPLEX" => (
            hull(&[v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(-1, -1, -1)]),
            "reflexive simplex",
        ),
        "UNITCUBE" => (cube(0, 1), "[0,1]^3"),
        "UNITSIMPLEX" => (
            hull(&[v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)]),
            "unimodular simplex",
        ),
        _ => match reeve_parameter(name) {
            Some(n) => {
                let notes = if n == 2 {
                    "empty simplex whose integer decomposition property fails at level 1"
                } else {
                    "empty simplex conv{0, e1, e2, (1,1,N)}"
                };
                (reeve(n)?, notes)
            }
            None => return Err(CatalogError::UnknownFixture(name.to_string())),
        },
    };
    Ok(Fixture {
        name: name.to_string(),
        polytope,
        notes: notes.to_string(),
    })
}

pub fn builtin_fan(name: &str) -> Result<Fan, CatalogError> {
    match name {
        "P2" => Ok(Fan::projective_plane()),
        "P1xP1" => Ok(Fan::hirzebruch(0)?),
        _ => {
            let a = name
                .strip_prefix('F')
                .filter(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|r| r.parse::<Int>().ok())
                .ok_or_else(|| CatalogError::UnknownFixture(name.to_string()))?;
            Ok(Fan::hirzebruch(a)?)
        }
    }
}
