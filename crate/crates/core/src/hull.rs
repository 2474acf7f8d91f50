//! Exact convex hulls in dimension ≤ 3.
//!
//! Degeneracies are resolved by affine dimension first (point, segment,
//! polygon, solid); polygons use a monotone chain, solids an incremental
//! beneath-beyond hull with `i128` orientation tests.

use std::collections::{HashMap, HashSet};

use crate::lattice::{cross, det2_wide, det3_wide, primitive, LatticeVector};
use crate::polytope::HalfSpace;

pub(crate) struct HullData {
    pub dim: usize,
    pub vertices: Vec<LatticeVector>,
    pub facets: Vec<HalfSpace>,
}

/// `points` must be nonempty, of one dimension, and inside the coordinate limit.
pub(crate) fn compute(points: &[LatticeVector]) -> HullData {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let ambient = pts[0].dim();
    let p0 = pts[0];

    let Some(&p1) = pts.get(1) else {
        return point_hull(p0);
    };
    let u = p1 - p0;
    let off_line = pts.iter().copied().find(|&q| !parallel(&u, &(q - p0)));
    let Some(p2) = off_line else {
        return segment_hull(p0, *pts.last().unwrap());
    };
    if ambient == 2 {
        return polygon_hull(cyclic_order(&pts, None), None);
    }
    let w = primitive(&cross(&u, &(p2 - p0)).unwrap()).unwrap();
    let off_plane = pts.iter().copied().find(|&q| (q - p0).dot(&w) != 0);
    match off_plane {
        None => polygon_hull(cyclic_order(&pts, Some(w)), Some(w)),
        Some(p3) => solid_hull(&pts, [p0, p1, p2, p3]),
    }
}

fn parallel(a: &LatticeVector, b: &LatticeVector) -> bool {
    if a.dim() == 2 {
        det2_wide(a, b) == 0
    } else {
        cross(a, b).unwrap().is_zero()
    }
}

pub(crate) fn supporting(normal: LatticeVector, vertices: &[LatticeVector]) -> HalfSpace {
    let min = vertices.iter().map(|v| v.dot(&normal)).min().unwrap();
    HalfSpace {
        normal,
        offset: -min,
    }
}

fn finish(dim: usize, mut vertices: Vec<LatticeVector>, normals: Vec<LatticeVector>) -> HullData {
    vertices.sort_unstable();
    vertices.dedup();
    let mut facets: Vec<HalfSpace> = normals
        .into_iter()
        .map(|n| supporting(n, &vertices))
        .collect();
    facets.sort_unstable();
    facets.dedup();
    HullData {
        dim,
        vertices,
        facets,
    }
}

/// Normals of a lattice basis complement: the equations cutting out a line
/// through the origin with direction `u`.
fn line_equations(u: &LatticeVector) -> Vec<LatticeVector> {
    if u.dim() == 2 {
        let n = primitive(&LatticeVector::new2(-u.get(1), u.get(0))).unwrap();
        return vec![n, -n];
    }
    let mut picked: Vec<LatticeVector> = Vec::new();
    for i in 0..3 {
        let c = cross(u, &LatticeVector::unit(3, i).unwrap()).unwrap();
        if c.is_zero() {
            continue;
        }
        let c = primitive(&c).unwrap();
        if picked.iter().all(|p| !parallel(p, &c)) {
            picked.push(c);
        }
        if picked.len() == 2 {
            break;
        }
    }
    picked.iter().flat_map(|&n| [n, -n]).collect()
}

fn point_hull(p: LatticeVector) -> HullData {
    let d = p.dim();
    let normals = (0..d)
        .flat_map(|i| {
            let e = LatticeVector::unit(d, i).unwrap();
            [e, -e]
        })
        .collect();
    finish(0, vec![p], normals)
}

fn segment_hull(a: LatticeVector, b: LatticeVector) -> HullData {
    let u = primitive(&(b - a)).unwrap();
    let mut normals = line_equations(&u);
    normals.push(u);
    normals.push(-u);
    finish(1, vec![a, b], normals)
}

/// Counter-clockwise hull of points in a plane, via a 2D projection.
/// Collinear boundary points are dropped.
fn monotone_chain(
    pts: &[LatticeVector],
    proj: impl Fn(&LatticeVector) -> [i64; 2],
) -> Vec<LatticeVector> {
    let mut order: Vec<(LatticeVector, [i64; 2])> = pts.iter().map(|p| (*p, proj(p))).collect();
    order.sort_unstable_by_key(|(_, q)| *q);
    let turn = |o: [i64; 2], a: [i64; 2], b: [i64; 2]| -> i128 {
        (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128
            - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
    };
    let mut chain: Vec<(LatticeVector, [i64; 2])> = Vec::with_capacity(order.len() * 2);
    for pass in 0..2 {
        let start = chain.len();
        let iter: Box<dyn Iterator<Item = &(LatticeVector, [i64; 2])>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &(p, q) in iter {
            while chain.len() >= start + 2
                && turn(chain[chain.len() - 2].1, chain[chain.len() - 1].1, q) <= 0
            {
                chain.pop();
            }
            chain.push((p, q));
        }
        chain.pop();
    }
    chain.into_iter().map(|(p, _)| p).collect()
}

/// `ring` is a cyclic list of polygon vertices. In 3-space `plane` carries
/// the primitive plane normal.
fn polygon_hull(ring: Vec<LatticeVector>, plane: Option<LatticeVector>) -> HullData {
    let k = ring.len();
    let mut normals = Vec::with_capacity(k + 2);
    if let Some(w) = plane {
        normals.push(w);
        normals.push(-w);
    }
    for i in 0..k {
        let (p, q) = (ring[i], ring[(i + 1) % k]);
        let e = q - p;
        let n = match plane {
            None => LatticeVector::new2(-e.get(1), e.get(0)),
            Some(w) => cross(&w, &e).unwrap(),
        };
        let mut n = primitive(&n).unwrap();
        let witness = ring[(i + 2) % k];
        if (witness - p).dot(&n) < 0 {
            n = -n;
        }
        normals.push(n);
    }
    finish(2, ring, normals)
}

fn orient(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector, p: &LatticeVector) -> i128 {
    det3_wide(&(*b - *a), &(*c - *a), &(*p - *a))
}

fn solid_hull(pts: &[LatticeVector], seed: [LatticeVector; 4]) -> HullData {
    let [mut a, mut b, c, d] = seed;
    if orient(&a, &b, &c, &d) < 0 {
        std::mem::swap(&mut a, &mut b);
    }
    // Outward-oriented triangles: orient(face, p) > 0 iff p is beyond it.
    let mut faces: Vec<[LatticeVector; 3]> = vec![[a, c, b], [a, b, d], [b, c, d], [a, d, c]];
    let seeds: HashSet<LatticeVector> = seed.into_iter().collect();

    for p in pts.iter().filter(|p| !seeds.contains(p)) {
        let visible: Vec<bool> = faces
            .iter()
            .map(|f| orient(&f[0], &f[1], &f[2], p) > 0)
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut edges: HashSet<(LatticeVector, LatticeVector)> = HashSet::new();
        for (f, _) in faces.iter().zip(&visible).filter(|(_, &v)| v) {
            for i in 0..3 {
                edges.insert((f[i], f[(i + 1) % 3]));
            }
        }
        let mut next: Vec<[LatticeVector; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        for &(u, v) in &edges {
            if !edges.contains(&(v, u)) {
                next.push([u, v, *p]);
            }
        }
        faces = next;
    }

    // Merge coplanar triangles into facets keyed by inward normal.
    let mut on_facet: HashMap<LatticeVector, Vec<LatticeVector>> = HashMap::new();
    for f in &faces {
        let outward = cross(&(f[1] - f[0]), &(f[2] - f[0])).unwrap();
        let inward = -primitive(&outward).unwrap();
        on_facet.entry(inward).or_default().extend_from_slice(f);
    }
    let normals: Vec<LatticeVector> = on_facet.keys().copied().collect();
    let mut candidates: Vec<LatticeVector> = on_facet.values().flatten().copied().collect();
    candidates.sort_unstable();
    candidates.dedup();

    let halfspaces: Vec<HalfSpace> = normals
        .iter()
        .map(|&n| supporting(n, &candidates))
        .collect();
    let vertices: Vec<LatticeVector> = candidates
        .into_iter()
        .filter(|v| {
            let tight: Vec<LatticeVector> = halfspaces
                .iter()
                .filter(|h| h.slack(v) == 0)
                .map(|h| h.normal)
                .collect();
            spans_three(&tight)
        })
        .collect();
    finish(3, vertices, normals)
}

fn spans_three(normals: &[LatticeVector]) -> bool {
    let n = normals.len();
    for i in 0..n {
        for j in i + 1..n {
            let c = cross(&normals[i], &normals[j]).unwrap();
            if c.is_zero() {
                continue;
            }
            if normals[j + 1..].iter().any(|k| c.dot(k) != 0) {
                return true;
            }
        }
    }
    false
}

/// Cyclic order of the extreme points of a planar point set. For points in
/// 3-space the `normal` of their common plane selects a coordinate
/// projection that is injective on the plane.
pub(crate) fn cyclic_order(
    points: &[LatticeVector],
    normal: Option<LatticeVector>,
) -> Vec<LatticeVector> {
    match normal {
        None => monotone_chain(points, |p| [p.get(0), p.get(1)]),
        Some(w) => {
            let k = (0..3).max_by_key(|&i| w.get(i).abs()).unwrap();
            let (i, j) = match k {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            monotone_chain(points, |p| [p.get(i), p.get(j)])
        }
    }
}
