//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 (`rand_chacha`), seeded with
//! `seed_from_u64(seed)`. Suite item `i` uses stream `i` of the same key, so
//! items are independent of evaluation order and thread count. Bounded
//! integers are drawn by rejection from the full 64-bit output, which keeps
//! the sequence identical on every platform.

use std::collections::BTreeSet;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::lattice::{det2_wide, Int, LatticeVector, UnimodularMap};
use crate::polytope::Polytope;
use crate::toric::{Fan, TDivisor};

use super::CatalogError;

/// Retries before [`gen_random_polytope`] gives up on full dimension.
pub const MAX_RETRIES: usize = 1000;

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Stream `item` of the generator keyed by `seed`.
    pub fn for_item(seed: u64, item: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(item);
        Self(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let zone = (u64::MAX / n) * n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: Int, hi: Int) -> Int {
        assert!(lo <= hi, "empty range");
        lo + self.below((hi - lo) as u64 + 1) as Int
    }
}

fn random_point(rng: &mut SeededRng, dim: usize, lo: Int, hi: Int) -> LatticeVector {
    let c: Vec<Int> = (0..dim).map(|_| rng.range(lo, hi)).collect();
    LatticeVector::new(&c).expect("dimension 2 or 3")
}

/// Hull of `npoints` uniform points of `[0, box]^dim`, redrawn until it is
/// full-dimensional.
pub fn random_polytope(
    rng: &mut SeededRng,
    dim: usize,
    box_size: Int,
    npoints: usize,
) -> Result<Polytope, CatalogError> {
    if !(2..=3).contains(&dim) {
        return Err(CatalogError::InvalidArgument(format!(
            "dimension must be 2 or 3, got {dim}"
        )));
    }
    if box_size < 1 {
        return Err(CatalogError::InvalidArgument(format!(
            "box must be at least 1, got {box_size}"
        )));
    }
    if npoints < dim + 1 {
        return Err(CatalogError::InvalidArgument(format!(
            "need at least {} points, got {npoints}",
            dim + 1
        )));
    }
    for _ in 0..MAX_RETRIES {
        let pts: Vec<_> = (0..npoints)
            .map(|_| random_point(rng, dim, 0, box_size))
            .collect();
        let p = Polytope::hull(&pts)?;
        if p.is_full_dimensional() {
            return Ok(p);
        }
    }
    Err(CatalogError::GenerationFailed {
        retries: MAX_RETRIES,
    })
}

pub fn gen_random_polytope(
    dim: usize,
    seed: u64,
    box_size: Int,
    npoints: usize,
) -> Result<Polytope, CatalogError> {
    random_polytope(&mut SeededRng::new(seed), dim, box_size, npoints)
}

/// Hull of `npoints` uniform points of `[0, box]^2`, possibly a segment or a
/// point.
pub fn random_polygon(rng: &mut SeededRng, box_size: Int, npoints: usize) -> Polytope {
    let pts: Vec<_> = (0..npoints.max(1))
        .map(|_| random_point(rng, 2, 0, box_size))
        .collect();
    Polytope::hull(&pts).expect("small coordinates")
}

/// A lattice segment in `[0, box]^2` with distinct endpoints.
pub fn random_segment(rng: &mut SeededRng, box_size: Int) -> Polytope {
    loop {
        let a = random_point(rng, 2, 0, box_size);
        let b = random_point(rng, 2, 0, box_size);
        if a != b {
            return Polytope::hull(&[a, b]).expect("small coordinates");
        }
    }
}

/// A smooth complete fan obtained from the fan of P¹×P¹ by `blowups` stellar
/// subdivisions, each inserting `v_i + v_{i+1}` between two adjacent rays.
pub fn random_smooth_fan(rng: &mut SeededRng, blowups: usize) -> Fan {
    let mut rays = vec![
        LatticeVector::new2(1, 0),
        LatticeVector::new2(0, 1),
        LatticeVector::new2(-1, 0),
        LatticeVector::new2(0, -1),
    ];
    for _ in 0..blowups {
        let i = rng.below(rays.len() as u64) as usize;
        let j = (i + 1) % rays.len();
        let new = rays[i] + rays[j];
        rays.insert(i + 1, new);
    }
    Fan::from_cyclic_rays(rays).expect("stellar subdivisions of a smooth complete fan")
}

/// A random divisor with a nonempty linear system: effective coefficients in
/// `0..=max_coeff` plus the principal divisor of a random character.
pub fn random_divisor(rng: &mut SeededRng, fan: &Fan, max_coeff: Int) -> TDivisor {
    let m = random_point(rng, fan.dim(), -2, 2);
    let coeffs = fan
        .rays()
        .iter()
        .map(|v| rng.range(0, max_coeff) + v.dot(&m))
        .collect();
    TDivisor::new(coeffs)
}

/// Canonical representative of a lattice polygon with the origin as its
/// only interior point, up to `GL(2, Z)`: the lex-least sorted vertex list
/// over the Hermite maps of all ordered pairs of independent vertices.
pub fn polygon_normal_form(p: &Polytope) -> Vec<LatticeVector> {
    let vs = p.vertices();
    let mut best: Option<Vec<LatticeVector>> = None;
    for a in vs {
        for b in vs {
            let Some(map) = UnimodularMap::hermite_pair_2d(a, b).expect("planar vertices") else {
                continue;
            };
            let mut image: Vec<_> = vs
                .iter()
                .map(|v| map.apply(v).expect("small coordinates"))
                .collect();
            image.sort_unstable();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.expect("polygon has two independent vertices")
}

/// All reflexive polygons with vertices in `[−3, 3]^2`, one per
/// `GL(2, Z)`-class, in lex order of their normal forms.
///
/// The search walks counter-clockwise vertex sequences starting at the
/// lex-least vertex. Each edge `(a, b)` of a reflexive polygon lies on a line
/// at lattice distance 1 from the origin, i.e. `det(a, b) = gcd(b − a)`.
pub fn gen_reflexive_polygons() -> Vec<Polytope> {
    const R: Int = 3;
    let grid: Vec<LatticeVector> = (-R..=R)
        .flat_map(|x| (-R..=R).map(move |y| LatticeVector::new2(x, y)))
        .filter(|v| !v.is_zero())
        .collect();
    let mut forms = BTreeSet::new();
    for &start in &grid {
        let mut path = vec![start];
        extend_cycle(&grid, &mut path, &mut forms);
    }
    forms
        .into_iter()
        .map(|vs: Vec<LatticeVector>| Polytope::hull(&vs).expect("small coordinates"))
        .collect()
}

fn reflexive_edge(a: &LatticeVector, b: &LatticeVector) -> bool {
    let e = *b - *a;
    let g = crate::lattice::gcd(e.get(0), e.get(1));
    g > 0 && det2_wide(a, b) == i128::from(g)
}

fn strictly_convex(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> bool {
    det2_wide(&(*b - *a), &(*c - *b)) > 0
}

fn extend_cycle(
    grid: &[LatticeVector],
    path: &mut Vec<LatticeVector>,
    forms: &mut BTreeSet<Vec<LatticeVector>>,
) {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() >= 3 {
        let prev = path[path.len() - 2];
        if reflexive_edge(&last, &start)
            && strictly_convex(&prev, &last, &start)
            && strictly_convex(&last, &start, &path[1])
        {
            let p = Polytope::hull(path).expect("small coordinates");
            if p.is_reflexive() && p.vertices().len() == path.len() {
                forms.insert(polygon_normal_form(&p));
            }
        }
    }
    for &next in grid {
        if next <= start || !reflexive_edge(&last, &next) {
            continue;
        }
        if path.len() >= 2 && !strictly_convex(&path[path.len() - 2], &last, &next) {
            continue;
        }
        // Angles around the origin increase strictly from the start, so the
        // path winds at most once.
        if !angle_less(&start, &last, &next) {
            continue;
        }
        path.push(next);
        extend_cycle(grid, path, forms);
        path.pop();
    }
}

/// Counter-clockwise angle of `v` from `start`, in `[0, 2π)`, as a
/// comparable key: half-turn index, then orientation within it.
fn angle_less(start: &LatticeVector, a: &LatticeVector, b: &LatticeVector) -> bool {
    let half = |v: &LatticeVector| {
        let d = det2_wide(start, v);
        if d > 0 || (d == 0 && start.dot(v) > 0) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha < hb;
    }
    det2_wide(a, b) > 0
}
