//! Exact integer kernel: lattice vectors, the pairing between `M` and `N`,
//! transient rationals and unimodular maps.
//!
//! Integers are `i64` with checked arithmetic on every public operation.
//! Polytopes reject coordinates above [`COORD_LIMIT`], which keeps every
//! internal product (facet normals, pairings, 3x3 determinants computed in
//! `i128`) inside range. The workspace also builds with `overflow-checks`
//! on, so nothing wraps silently.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Lattice integer.
pub type Int = i64;

/// Largest absolute coordinate accepted for polytope vertices.
pub const COORD_LIMIT: Int = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0} (only 2 and 3 are supported)")]
    UnsupportedDimension(usize),
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("integer overflow")]
    Overflow,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(i128),
}

pub type Result<T, E = LatticeError> = std::result::Result<T, E>;

/// A point of `M ≅ Z^d` (or of the dual lattice `N`), `d ∈ {2, 3}`.
///
/// Unused trailing slots are kept at zero so the derived ordering is the
/// lexicographic order on the first `dim` coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: [Int; 3],
    dim: u8,
}

impl LatticeVector {
    pub fn new(coords: &[Int]) -> Result<Self> {
        match coords.len() {
            2 => Ok(Self::new2(coords[0], coords[1])),
            3 => Ok(Self::new3(coords[0], coords[1], coords[2])),
            n => Err(LatticeError::UnsupportedDimension(n)),
        }
    }

    pub const fn new2(x: Int, y: Int) -> Self {
        Self {
            coords: [x, y, 0],
            dim: 2,
        }
    }

    pub const fn new3(x: Int, y: Int, z: Int) -> Self {
        Self {
            coords: [x, y, z],
            dim: 3,
        }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        match dim {
            2 | 3 => Ok(Self {
                coords: [0; 3],
                dim: dim as u8,
            }),
            n => Err(LatticeError::UnsupportedDimension(n)),
        }
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Result<Self> {
        let mut v = Self::zero(dim)?;
        if i >= dim {
            return Err(LatticeError::DimensionMismatch {
                expected: dim,
                found: i + 1,
            });
        }
        v.coords[i] = 1;
        Ok(v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn coords(&self) -> &[Int] {
        &self.coords[..self.dim()]
    }

    #[inline]
    pub fn get(&self, i: usize) -> Int {
        self.coords()[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    /// Largest absolute coordinate.
    pub fn max_norm(&self) -> Int {
        self.coords().iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn l1_norm(&self) -> Int {
        self.coords().iter().map(|c| c.abs()).sum()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Int, Int) -> Option<Int>) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = *self;
        for i in 0..self.dim() {
            out.coords[i] = f(self.coords[i], other.coords[i]).ok_or(LatticeError::Overflow)?;
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Int::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Int::checked_sub)
    }

    pub fn checked_scale(&self, k: Int) -> Result<Self> {
        let mut out = *self;
        for c in out.coords.iter_mut().take(self.dim()) {
            *c = c.checked_mul(k).ok_or(LatticeError::Overflow)?;
        }
        Ok(out)
    }

    /// Pairing with a vector of the same dimension. Panics on mismatch; use
    /// [`pair`] for the fallible form.
    #[inline]
    pub fn dot(&self, other: &Self) -> Int {
        pair(self, other).expect("lattice pairing")
    }

    /// The vector or its negation, whichever has a positive first nonzero
    /// coordinate.
    pub fn sign_normalized(&self) -> Self {
        match self.coords().iter().find(|&&c| c != 0) {
            Some(&c) if c < 0 => -*self,
            _ => *self,
        }
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim()))?;
        for c in self.coords() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("lattice vector addition")
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("lattice vector subtraction")
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> Self {
        self.checked_scale(-1).expect("lattice vector negation")
    }
}

impl Mul<Int> for LatticeVector {
    type Output = LatticeVector;
    fn mul(self, k: Int) -> Self {
        self.checked_scale(k).expect("lattice vector scaling")
    }
}

/// `⟨m, v⟩ = Σ m_i v_i`.
pub fn pair(m: &LatticeVector, v: &LatticeVector) -> Result<Int> {
    m.check_dim(v)?;
    m.coords()
        .iter()
        .zip(v.coords())
        .try_fold(0 as Int, |acc, (&a, &b)| {
            a.checked_mul(b).and_then(|p| acc.checked_add(p))
        })
        .ok_or(LatticeError::Overflow)
}

pub fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: returns `(g, s, t)` with `g = s·a + t·b ≥ 0`.
pub fn ext_gcd(a: Int, b: Int) -> (Int, Int, Int) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// The generator of the ray through `v`: `v / gcd(v)`.
pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    let g = v.coords().iter().fold(0, |g, &c| gcd(g, c));
    if g == 0 {
        return Err(LatticeError::ZeroVector);
    }
    let mut out = *v;
    for c in out.coords.iter_mut().take(v.dim()) {
        *c /= g;
    }
    Ok(out)
}

pub fn det2(a: &LatticeVector, b: &LatticeVector) -> Result<Int> {
    if a.dim() != 2 {
        return Err(LatticeError::DimensionMismatch {
            expected: 2,
            found: a.dim(),
        });
    }
    a.check_dim(b)?;
    let d = a.get(0) as i128 * b.get(1) as i128 - a.get(1) as i128 * b.get(0) as i128;
    Int::try_from(d).map_err(|_| LatticeError::Overflow)
}

/// Determinant of the 3x3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> Result<Int> {
    if a.dim() != 3 {
        return Err(LatticeError::DimensionMismatch {
            expected: 3,
            found: a.dim(),
        });
    }
    a.check_dim(b)?;
    a.check_dim(c)?;
    Int::try_from(det3_wide(a, b, c)).map_err(|_| LatticeError::Overflow)
}

pub(crate) fn det3_wide(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> i128 {
    let [a0, a1, a2] = a.coords.map(i128::from);
    let [b0, b1, b2] = b.coords.map(i128::from);
    let [c0, c1, c2] = c.coords.map(i128::from);
    a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0)
}

pub(crate) fn det2_wide(a: &LatticeVector, b: &LatticeVector) -> i128 {
    a.coords[0] as i128 * b.coords[1] as i128 - a.coords[1] as i128 * b.coords[0] as i128
}

pub fn cross(a: &LatticeVector, b: &LatticeVector) -> Result<LatticeVector> {
    if a.dim() != 3 || b.dim() != 3 {
        return Err(LatticeError::DimensionMismatch {
            expected: 3,
            found: a.dim().min(b.dim()),
        });
    }
    let [a0, a1, a2] = a.coords.map(i128::from);
    let [b0, b1, b2] = b.coords.map(i128::from);
    let to = |x: i128| Int::try_from(x).map_err(|_| LatticeError::Overflow);
    Ok(LatticeVector::new3(
        to(a1 * b2 - a2 * b1)?,
        to(a2 * b0 - a0 * b2)?,
        to(a0 * b1 - a1 * b0)?,
    ))
}

/// An exact rational number, always reduced with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rat {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(LatticeError::ZeroDenominator);
        }
        let g = gcd128(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(LatticeError::Overflow)?;
            den = den.checked_neg().ok_or(LatticeError::Overflow)?;
        }
        Ok(Self { num, den })
    }

    pub fn from_int(n: Int) -> Self {
        Self {
            num: n as i128,
            den: 1,
        }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_int(&self) -> Option<Int> {
        if self.den == 1 {
            Int::try_from(self.num).ok()
        } else {
            None
        }
    }

    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i128 {
        -(-self.num).div_euclid(self.den)
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let n = self
            .num
            .checked_mul(o.den)
            .and_then(|a| o.num.checked_mul(self.den).and_then(|b| a.checked_add(b)))
            .ok_or(LatticeError::Overflow)?;
        let d = self.den.checked_mul(o.den).ok_or(LatticeError::Overflow)?;
        Self::new(n, d)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&Self {
            num: -o.num,
            den: o.den,
        })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let n = self.num.checked_mul(o.num).ok_or(LatticeError::Overflow)?;
        let d = self.den.checked_mul(o.den).ok_or(LatticeError::Overflow)?;
        Self::new(n, d)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        let n = self.num.checked_mul(o.den).ok_or(LatticeError::Overflow)?;
        let d = self.den.checked_mul(o.num).ok_or(LatticeError::Overflow)?;
        Self::new(n, d)
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A point with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        let ints: Option<Vec<Int>> = self.0.iter().map(Rat::to_int).collect();
        LatticeVector::new(&ints?).ok()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rat::is_integer)
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Solves `⟨u, rows[i]⟩ = rhs[i]` for `u` by Cramer's rule. `None` when the
/// system is singular.
pub fn solve_pairing_system(rows: &[LatticeVector], rhs: &[Int]) -> Result<Option<RatVector>> {
    let d = rows.first().map(|r| r.dim()).unwrap_or(0);
    if rows.len() != d || rhs.len() != d {
        return Err(LatticeError::DimensionMismatch {
            expected: d,
            found: rows.len(),
        });
    }
    for r in rows {
        rows[0].check_dim(r)?;
    }
    let det_of = |m: &[LatticeVector]| -> i128 {
        if d == 2 {
            det2_wide(&m[0], &m[1])
        } else {
            det3_wide(&m[0], &m[1], &m[2])
        }
    };
    let det = det_of(rows);
    if det == 0 {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let mut m = rows.to_vec();
        for (i, row) in m.iter_mut().enumerate() {
            row.coords[j] = rhs[i];
        }
        out.push(Rat::new(det_of(&m), det)?);
    }
    Ok(Some(RatVector(out)))
}

/// An affine automorphism `y ↦ A·y + t` of `Z^d` with `|det A| = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnimodularMap {
    matrix: [[Int; 3]; 3],
    translation: LatticeVector,
}

impl UnimodularMap {
    pub fn identity(dim: usize) -> Result<Self> {
        let mut matrix = [[0; 3]; 3];
        for (i, row) in matrix.iter_mut().enumerate().take(dim) {
            row[i] = 1;
        }
        Ok(Self {
            matrix,
            translation: LatticeVector::zero(dim)?,
        })
    }

    /// Builds a map from the rows of a `d×d` matrix; rejects `|det| ≠ 1`.
    pub fn new(rows: &[LatticeVector], translation: LatticeVector) -> Result<Self> {
        let d = translation.dim();
        if rows.len() != d {
            return Err(LatticeError::DimensionMismatch {
                expected: d,
                found: rows.len(),
            });
        }
        for r in rows {
            translation.check_dim(r)?;
        }
        let det = if d == 2 {
            det2_wide(&rows[0], &rows[1])
        } else {
            det3_wide(&rows[0], &rows[1], &rows[2])
        };
        if det.abs() != 1 {
            return Err(LatticeError::NotUnimodular(det));
        }
        let mut matrix = [[0; 3]; 3];
        for (i, r) in rows.iter().enumerate() {
            matrix[i][..d].copy_from_slice(r.coords());
        }
        Ok(Self {
            matrix,
            translation,
        })
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn apply(&self, y: &LatticeVector) -> Result<LatticeVector> {
        let d = self.dim();
        y.check_dim(&self.translation)?;
        let mut out = self.translation;
        for i in 0..d {
            let row = LatticeVector::new(&self.matrix[i][..d])?;
            out.coords[i] = pair(&row, y)?
                .checked_add(self.translation.coords[i])
                .ok_or(LatticeError::Overflow)?;
        }
        Ok(out)
    }

    /// Linear map `y ↦ H` sending the ordered pair `(a, b)` of independent
    /// vectors of `Z²` to column Hermite normal form: `a ↦ (h11, 0)` and
    /// `b ↦ (h21, h22)` with `h11, h22 > 0` and `0 ≤ h21 < h22`. The map is
    /// unique for the pair, which makes it usable for canonical forms.
    pub fn hermite_pair_2d(a: &LatticeVector, b: &LatticeVector) -> Result<Option<Self>> {
        if a.dim() != 2 || b.dim() != 2 {
            return Err(LatticeError::UnsupportedDimension(a.dim()));
        }
        if det2_wide(a, b) == 0 {
            return Ok(None);
        }
        // Columns of U with (a·U) = (g, 0).
        let (g, s, t) = ext_gcd(a.get(0), a.get(1));
        let mut col1 = [s, t];
        let mut col2 = [-a.get(1) / g, a.get(0) / g];
        let y = b.get(0) * col2[0] + b.get(1) * col2[1];
        if y < 0 {
            col2 = [-col2[0], -col2[1]];
        }
        let y = y.abs();
        let x = b.get(0) * col1[0] + b.get(1) * col1[1];
        let q = x.div_euclid(y);
        col1 = [col1[0] - q * col2[0], col1[1] - q * col2[1]];
        // The map acts on column vectors, so its rows are the columns of U.
        let rows = [
            LatticeVector::new2(col1[0], col1[1]),
            LatticeVector::new2(col2[0], col2[1]),
        ];
        Self::new(&rows, LatticeVector::new2(0, 0)).map(Some)
    }
}
