//! Reference implementations that share no code with the library's hull,
//! enumeration or Minkowski routines.

#![allow(dead_code)]

use latfano::{Int, LatticeVector, Polytope};

pub fn v2(x: Int, y: Int) -> LatticeVector {
    LatticeVector::new2(x, y)
}

pub fn v3(x: Int, y: Int, z: Int) -> LatticeVector {
    LatticeVector::new3(x, y, z)
}

/// `(normal, c)` pairs with `⟨normal, p⟩ ≤ c` for every input point, one per
/// pair (2D) or triple (3D) of points spanning a supporting line or plane.
pub fn supporting_halfspaces(points: &[LatticeVector]) -> Vec<([i128; 3], i128)> {
    let p: Vec<[i128; 3]> = points
        .iter()
        .map(|v| {
            let c = v.coords();
            [
                c[0] as i128,
                c[1] as i128,
                if c.len() == 3 { c[2] as i128 } else { 0 },
            ]
        })
        .collect();
    let dot = |a: &[i128; 3], b: &[i128; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let sub = |a: &[i128; 3], b: &[i128; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let mut out = Vec::new();
    let mut consider = |n: [i128; 3], base: &[i128; 3]| {
        if n == [0, 0, 0] {
            return;
        }
        let c = dot(&n, base);
        if p.iter().all(|q| dot(&n, q) <= c) {
            out.push((n, c));
        } else if p.iter().all(|q| dot(&n, q) >= c) {
            out.push(([-n[0], -n[1], -n[2]], -c));
        }
    };
    let three = points[0].dim() == 3;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let u = sub(&p[j], &p[i]);
            if !three {
                consider([-u[1], u[0], 0], &p[i]);
                continue;
            }
            for k in j + 1..p.len() {
                let w = sub(&p[k], &p[i]);
                let n = [
                    u[1] * w[2] - u[2] * w[1],
                    u[2] * w[0] - u[0] * w[2],
                    u[0] * w[1] - u[1] * w[0],
                ];
                consider(n, &p[i]);
            }
        }
    }
    out
}

/// Lattice points of the hull of a full-dimensional point set, by scanning
/// the whole bounding box against every supporting line or plane.
pub fn naive_lattice_points(points: &[LatticeVector]) -> Vec<LatticeVector> {
    let d = points[0].dim();
    let hs = supporting_halfspaces(points);
    let lo: Vec<Int> = (0..d)
        .map(|i| points.iter().map(|p| p.get(i)).min().unwrap())
        .collect();
    let hi: Vec<Int> = (0..d)
        .map(|i| points.iter().map(|p| p.get(i)).max().unwrap())
        .collect();
    let zr = if d == 3 { lo[2]..=hi[2] } else { 0..=0 };
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in zr.clone() {
                let q = [x as i128, y as i128, z as i128];
                if hs
                    .iter()
                    .all(|(n, c)| n[0] * q[0] + n[1] * q[1] + n[2] * q[2] <= *c)
                {
                    out.push(if d == 3 { v3(x, y, z) } else { v2(x, y) });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Whether `m` is a sum `a + b` with `a` a lattice point of `conv(left)` and
/// `b` one of `right_points`, with membership decided by the naive oracle.
pub fn decomposes(
    m: &LatticeVector,
    left_points: &[LatticeVector],
    right_points: &[LatticeVector],
) -> bool {
    right_points
        .iter()
        .any(|b| left_points.binary_search(&(*m - *b)).is_ok())
}

/// Vertex sums `{a + b}` of two polytopes.
pub fn vertex_sums(p: &Polytope, q: &Polytope) -> Vec<LatticeVector> {
    let mut out: Vec<_> = p
        .vertices()
        .iter()
        .flat_map(|a| q.vertices().iter().map(move |b| *a + *b))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `|det|` of the edge vectors of a simplex given by `d + 1` points.
pub fn simplex_volume(vs: &[LatticeVector]) -> i128 {
    let e: Vec<[i128; 3]> = vs[1..]
        .iter()
        .map(|v| {
            let w = *v - vs[0];
            [
                w.get(0) as i128,
                w.get(1) as i128,
                if w.dim() == 3 { w.get(2) as i128 } else { 0 },
            ]
        })
        .collect();
    if vs[0].dim() == 2 {
        (e[0][0] * e[1][1] - e[0][1] * e[1][0]).abs()
    } else {
        (e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]))
            .abs()
    }
}
