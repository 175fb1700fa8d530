//! Primitive integer weight vectors and 2x2 unimodular lattice arithmetic.
//!
//! Every quantity in the orbit-space calculus is a 2x2 integer determinant of
//! two weights. Arithmetic is checked: an overflow is a bug in the caller's
//! bounds, and it panics instead of wrapping.

use core::fmt;

use num_integer::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeError {
    /// `(m, n)` is the zero vector or has `gcd(|m|, |n|) > 1`.
    NotPrimitive { m: i64, n: i64 },
    /// A matrix or a pair of vectors has determinant other than `±1`.
    NotUnimodular { det: i64 },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotPrimitive { m, n } => write!(f, "({m}, {n}) is not a primitive vector"),
            LatticeError::NotUnimodular { det } => {
                write!(f, "determinant {det} is not ±1")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

#[inline]
fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("lattice arithmetic overflow")
}

#[inline]
fn sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect("lattice arithmetic overflow")
}

#[inline]
fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("lattice arithmetic overflow")
}

/// Isotropy weight of a boundary edge: a primitive vector `(m, n)` in `Z^2`.
///
/// The circle subgroup it names is `{ (z1, z2) : m z1 + n z2 = 0 }`. Equality is
/// componentwise, so `(m, n)` and `(-m, -n)` are different values here even
/// though they name the same circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    m: i64,
    n: i64,
}

impl WeightVector {
    pub const E1: WeightVector = WeightVector { m: 1, n: 0 };
    pub const E2: WeightVector = WeightVector { m: 0, n: 1 };

    pub fn new(m: i64, n: i64) -> Result<Self, LatticeError> {
        if m.unsigned_abs().gcd(&n.unsigned_abs()) != 1 {
            return Err(LatticeError::NotPrimitive { m, n });
        }
        Ok(WeightVector { m, n })
    }

    #[inline]
    pub const fn m(&self) -> i64 {
        self.m
    }

    #[inline]
    pub const fn n(&self) -> i64 {
        self.n
    }

    #[inline]
    pub const fn as_pair(&self) -> (i64, i64) {
        (self.m, self.n)
    }

    /// The opposite vector; names the same circle subgroup.
    pub fn negated(&self) -> Self {
        WeightVector {
            m: self.m.checked_neg().expect("lattice arithmetic overflow"),
            n: self.n.checked_neg().expect("lattice arithmetic overflow"),
        }
    }

    /// Representative of `{self, -self}` whose first nonzero coordinate is positive.
    pub fn sign_normalized(&self) -> Self {
        if self.m < 0 || (self.m == 0 && self.n < 0) {
            self.negated()
        } else {
            *self
        }
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> u64 {
        self.m.unsigned_abs().max(self.n.unsigned_abs())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `det [u v]` with `u`, `v` as columns: `u.m * v.n - u.n * v.m`.
#[inline]
pub fn det2(u: WeightVector, v: WeightVector) -> i64 {
    sub(mul(u.m, v.n), mul(u.n, v.m))
}

/// An element of `GL(2, Z)`, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeTransform {
    rows: [[i64; 2]; 2],
}

impl LatticeTransform {
    pub const IDENTITY: LatticeTransform = LatticeTransform {
        rows: [[1, 0], [0, 1]],
    };

    pub fn new(rows: [[i64; 2]; 2]) -> Result<Self, LatticeError> {
        let det = sub(mul(rows[0][0], rows[1][1]), mul(rows[0][1], rows[1][0]));
        if det.abs() != 1 {
            return Err(LatticeError::NotUnimodular { det });
        }
        Ok(LatticeTransform { rows })
    }

    pub const fn rows(&self) -> [[i64; 2]; 2] {
        self.rows
    }

    /// Either `1` or `-1`.
    pub fn det(&self) -> i64 {
        let r = &self.rows;
        sub(mul(r[0][0], r[1][1]), mul(r[0][1], r[1][0]))
    }

    pub fn apply(&self, w: WeightVector) -> WeightVector {
        let r = &self.rows;
        // |det| = 1 keeps the image primitive.
        WeightVector {
            m: add(mul(r[0][0], w.m), mul(r[0][1], w.n)),
            n: add(mul(r[1][0], w.m), mul(r[1][1], w.n)),
        }
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &LatticeTransform) -> LatticeTransform {
        let a = &self.rows;
        let b = &rhs.rows;
        let mut rows = [[0i64; 2]; 2];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = add(mul(a[i][0], b[0][j]), mul(a[i][1], b[1][j]));
            }
        }
        LatticeTransform { rows }
    }
}

impl Default for LatticeTransform {
    fn default() -> Self {
        Self::IDENTITY
    }
}

pub fn apply_transform(t: &LatticeTransform, w: WeightVector) -> WeightVector {
    t.apply(w)
}

/// The unique `T` with `T u = (1, 0)` and `T v = (0, 1)`, i.e. the inverse of the
/// matrix with columns `u`, `v`.
pub fn pair_basis_transform(u: WeightVector, v: WeightVector) -> Result<LatticeTransform, LatticeError> {
    let det = det2(u, v);
    if det.abs() != 1 {
        return Err(LatticeError::NotUnimodular { det });
    }
    // det = ±1, so dividing by det is multiplying by it.
    let rows = [
        [mul(det, v.n), mul(det, v.m).checked_neg().expect("lattice arithmetic overflow")],
        [mul(det, u.n).checked_neg().expect("lattice arithmetic overflow"), mul(det, u.m)],
    ];
    Ok(LatticeTransform { rows })
}
