//! Placing triangulations of lattice point sets.
//!
//! Points are placed in lex order. A point outside the current affine hull
//! is coned over every simplex; a point inside it is coned over the
//! boundary facets it sees strictly. The lex-largest point of a set is always
//! extreme, so every point ends up as a vertex.

use std::collections::HashMap;

use crate::lattice::{cross, det2_wide, det3_wide, LatticeVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    points: Vec<LatticeVector>,
    simplices: Vec<Vec<usize>>,
    dim: usize,
}

impl Triangulation {
    /// The lex-sorted, deduplicated point set.
    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    /// Simplices as sorted index lists into [`Self::points`].
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplex_vertices(&self, i: usize) -> Vec<LatticeVector> {
        self.simplices[i].iter().map(|&j| self.points[j]).collect()
    }
}

/// Direction data for the affine hull of the points placed so far.
enum Span {
    Point,
    Line(LatticeVector),
    Plane(Option<LatticeVector>),
    Solid,
}

fn sign(x: i128) -> i8 {
    x.signum() as i8
}

pub fn placing_triangulation(points: &[LatticeVector]) -> Triangulation {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.is_empty() {
        return Triangulation {
            points: pts,
            simplices: Vec::new(),
            dim: 0,
        };
    }
    let ambient = pts[0].dim();
    let origin = pts[0];
    let mut span = Span::Point;
    let mut dim = 0;
    let mut simplices: Vec<Vec<usize>> = vec![vec![0]];

    for (idx, &p) in pts.iter().enumerate().skip(1) {
        let rel = p - origin;
        let escapes = match &span {
            Span::Point => Some(Span::Line(rel)),
            Span::Line(u) => {
                let independent = if ambient == 2 {
                    det2_wide(u, &rel) != 0
                } else {
                    !cross(u, &rel).unwrap().is_zero()
                };
                independent.then(|| Span::Plane((ambient == 3).then(|| cross(u, &rel).unwrap())))
            }
            Span::Plane(Some(w)) => (rel.dot(w) != 0).then_some(Span::Solid),
            Span::Plane(None) | Span::Solid => None,
        };
        if let Some(next) = escapes {
            for s in simplices.iter_mut() {
                s.push(idx);
            }
            span = next;
            dim += 1;
            continue;
        }

        // Boundary facets of the current triangulation with their opposite vertex.
        let mut facet_count: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for s in &simplices {
            for (skip, &opp) in s.iter().enumerate() {
                let f: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                facet_count
                    .entry(f)
                    .and_modify(|e| e.0 += 1)
                    .or_insert((1, opp));
            }
        }
        let side = |facet: &[usize], x: &LatticeVector| -> i8 {
            let a = pts[facet[0]];
            match &span {
                Span::Line(u) => sign(i128::from((*x - a).dot(u))),
                Span::Plane(None) => sign(det2_wide(&(pts[facet[1]] - a), &(*x - a))),
                Span::Plane(Some(w)) => sign(det3_wide(&(pts[facet[1]] - a), &(*x - a), w)),
                Span::Solid => sign(det3_wide(
                    &(pts[facet[1]] - a),
                    &(pts[facet[2]] - a),
                    &(*x - a),
                )),
                Span::Point => 0,
            }
        };
        let mut added = Vec::new();
        for (facet, &(count, opp)) in &facet_count {
            if count != 1 {
                continue;
            }
            let sp = side(facet, &p);
            if sp != 0 && sp == -side(facet, &pts[opp]) {
                let mut s = facet.clone();
                s.push(idx);
                added.push(s);
            }
        }
        debug_assert!(!added.is_empty(), "placed point {p} sees no boundary facet");
        simplices.extend(added);
    }

    for s in simplices.iter_mut() {
        s.sort_unstable();
    }
    simplices.sort_unstable();
    Triangulation {
        points: pts,
        simplices,
        dim,
    }
}
