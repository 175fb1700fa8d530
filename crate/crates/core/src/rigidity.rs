//! Arithmetic behind the rigidity arguments for torus actions under positive
//! intermediate Ricci curvature.
//!
//! These are formula evaluators only. Whether a submanifold is totally
//! geodesic, whether a fixed point exists, or whether an inclusion is highly
//! connected is for the caller to establish.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_integer::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CalcError {
    /// Requires `n >= 2` and `1 <= k <= n - 1`.
    InvalidCurvatureIndex { n: u32, k: u32 },
    OrderViolation { d1: i64, d2: i64 },
    OddDimension { n: u32 },
    DimensionTooSmall { n: u32 },
    /// An empty set of fixed points was passed where a non-empty one is required.
    EmptyFixedSet,
    NonPositiveChi { chi: i64 },
    EmptyInput,
}

impl fmt::Display for CalcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalcError::InvalidCurvatureIndex { n, k } => {
                write!(f, "Ric_k needs n >= 2 and 1 <= k <= n - 1, got n = {n}, k = {k}")
            }
            CalcError::OrderViolation { d1, d2 } => write!(f, "codimensions must satisfy d1 <= d2, got {d1} > {d2}"),
            CalcError::OddDimension { n } => write!(f, "dimension {n} is odd"),
            CalcError::DimensionTooSmall { n } => write!(f, "dimension {n} is below 2"),
            CalcError::EmptyFixedSet => f.write_str("the fixed-point set must be non-empty"),
            CalcError::NonPositiveChi { chi } => write!(f, "Euler characteristic {chi} is not positive"),
            CalcError::EmptyInput => f.write_str("at least one value is required"),
        }
    }
}

impl CalcError {
    pub fn code(&self) -> &'static str {
        match self {
            CalcError::InvalidCurvatureIndex { .. } => "invalid_curvature_index",
            CalcError::OrderViolation { .. } => "order_violation",
            CalcError::OddDimension { .. } => "odd_dimension",
            CalcError::DimensionTooSmall { .. } => "dimension_too_small",
            CalcError::EmptyFixedSet => "empty_fixed_set",
            CalcError::NonPositiveChi { .. } => "non_positive_chi",
            CalcError::EmptyInput => "empty_input",
        }
    }
}

impl core::error::Error for CalcError {}

/// Dimension `n` and curvature index `k` of a manifold with `Ric_k > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurvatureSymmetry {
    n: u32,
    k: u32,
}

impl CurvatureSymmetry {
    pub fn new(n: u32, k: u32) -> Result<Self, CalcError> {
        if n < 2 || k < 1 || k > n - 1 {
            return Err(CalcError::InvalidCurvatureIndex { n, k });
        }
        Ok(CurvatureSymmetry { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Upper bound on the symmetry rank: `⌊(n+1)/2⌋` for `k <= 2`, and
/// `⌊(n+k)/2⌋ - 1` for `k >= 3`.
pub fn symmetry_rank_bound(cs: CurvatureSymmetry) -> u32 {
    if cs.k <= 2 {
        (cs.n + 1) / 2
    } else {
        (cs.n + cs.k) / 2 - 1
    }
}

/// A codimension-`d` submanifold of `M^n` under `Ric_k > 0`, fixed by a group
/// whose principal orbits have dimension `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusionSpec {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    pub delta: i64,
}

/// Connectivity of `N^{n-d} -> M^n`: `n - 2d + 2 - k + delta`.
pub fn connectedness_degree(s: InclusionSpec) -> i64 {
    s.n - 2 * s.d + 2 - s.k + s.delta
}

/// Connectivity of `N1 ∩ N2 -> N2` for codimensions `d1 <= d2`:
/// `n - d1 - d2 + 1 - k`.
pub fn intersection_connectedness(n: i64, d1: i64, d2: i64, k: i64) -> Result<i64, CalcError> {
    if d1 > d2 {
        return Err(CalcError::OrderViolation { d1, d2 });
    }
    Ok(n - d1 - d2 + 1 - k)
}

/// Degrees `i` where `x -> x ∪ e` is surjective and injective, for an
/// `(n-d-l)`-connected inclusion of codimension `d`. Both ranges are half-open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityRanges {
    /// `l <= i < n - d - l`.
    pub surjective: Range<i64>,
    /// `l < i <= n - d - l`.
    pub injective: Range<i64>,
}

impl PeriodicityRanges {
    /// Both ranges are empty exactly when `l >= n - d - l`.
    pub fn is_empty(&self) -> bool {
        self.surjective.is_empty()
    }
}

pub fn periodicity_ranges(n: i64, d: i64, l: i64) -> PeriodicityRanges {
    let top = n - d - l;
    PeriodicityRanges {
        surjective: l..top,
        injective: l + 1..top + 1,
    }
}

/// Betti numbers `b_0, …, b_n` of a closed manifold, or of a disjoint union
/// of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    pub fn new(b: Vec<u64>) -> Self {
        BettiVector(b)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Top degree; `None` for the empty vector.
    pub fn dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn even_sum(&self) -> u64 {
        self.0.iter().step_by(2).sum()
    }

    pub fn odd_sum(&self) -> u64 {
        self.0.iter().skip(1).step_by(2).sum()
    }

    pub fn satisfies_poincare_duality(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// `b_0 = b_n = 1`.
    pub fn is_connected_closed_orientable(&self) -> bool {
        matches!((self.0.first(), self.0.last()), (Some(1), Some(1)))
    }

    /// Componentwise sum, padding the shorter vector with zeros.
    pub fn disjoint_union(&self, other: &BettiVector) -> BettiVector {
        let len = self.0.len().max(other.0.len());
        BettiVector(
            (0..len)
                .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }
}

/// Which of the three periodic cohomology types a Betti vector realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodicType {
    Sphere,
    ProjectiveSpace,
    ConnectedSum,
}

impl PeriodicType {
    pub fn name(&self) -> &'static str {
        match self {
            PeriodicType::Sphere => "sphere",
            PeriodicType::ProjectiveSpace => "projective_space",
            PeriodicType::ConnectedSum => "connected_sum",
        }
    }
}

/// Cohomology of a simply connected `M^n` with degree-2 periodicity: that of
/// `S^n` (`b2 = 0`), `CP^{n/2}` (`b2 = 1`), or a `b2`-fold connected sum of
/// `CP^{n/2}`.
pub fn periodic_cohomology_trichotomy(n: u32, b2: u64) -> Result<(PeriodicType, BettiVector), CalcError> {
    if n % 2 == 1 {
        return Err(CalcError::OddDimension { n });
    }
    if n < 2 {
        return Err(CalcError::DimensionTooSmall { n });
    }
    let n = n as usize;
    let b = (0..=n)
        .map(|i| match i {
            0 => 1,
            i if i == n => 1,
            i if i % 2 == 0 => b2,
            _ => 0,
        })
        .collect();
    let kind = match b2 {
        0 => PeriodicType::Sphere,
        1 => PeriodicType::ProjectiveSpace,
        _ => PeriodicType::ConnectedSum,
    };
    Ok((kind, BettiVector(b)))
}

/// The three conditions relating a torus-manifold to its fixed-point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnerCheck {
    pub chi_equal: bool,
    pub odd_bounded: bool,
    pub even_bounded: bool,
}

impl ConnerCheck {
    pub fn holds(&self) -> bool {
        self.chi_equal && self.odd_bounded && self.even_bounded
    }
}

/// `χ(M) = χ(F)`, `Σ b_odd(F) <= Σ b_odd(M)`, `Σ b_even(F) <= Σ b_even(M)`.
/// A disconnected `F` is passed as the [disjoint union](BettiVector::disjoint_union)
/// of its components.
pub fn conner_check(ambient: &BettiVector, fixed: &BettiVector) -> ConnerCheck {
    ConnerCheck {
        chi_equal: ambient.euler_characteristic() == fixed.euler_characteristic(),
        odd_bounded: fixed.odd_sum() <= ambient.odd_sum(),
        even_bounded: fixed.even_sum() <= ambient.even_sum(),
    }
}

/// Inclusion-exclusion for three codimension-2 fixed components of a `T^3`
/// action on `M^6` with `b_2(M) = b`: `χ(M) = 2 + 2b`, `χ(N_i) = 2 + b`,
/// `χ(N_i ∩ N_j) = 2`, and `χ(M) >= χ(N_1 ∪ N_2 ∪ N_3)`. Returns whether the
/// inequality holds, equivalently `b <= 2 - chi_triple`.
pub fn dim6_b2_bound(b: u64, chi_triple: u64) -> Result<bool, CalcError> {
    if chi_triple == 0 {
        return Err(CalcError::EmptyFixedSet);
    }
    let (b, triple) = (b as i128, chi_triple as i128);
    let chi_m = 2 + 2 * b;
    let chi_union = 3 * (2 + b) - 3 * 2 + triple;
    Ok(chi_m >= chi_union)
}

/// Largest possible order of a group acting freely on each of the spaces: it
/// divides every Euler characteristic, so it is at most their gcd.
pub fn free_action_order_bound(chis: &[i64]) -> Result<u64, CalcError> {
    if chis.is_empty() {
        return Err(CalcError::EmptyInput);
    }
    if let Some(&chi) = chis.iter().find(|&&c| c <= 0) {
        return Err(CalcError::NonPositiveChi { chi });
    }
    Ok(chis.iter().fold(0u64, |g, &c| g.gcd(&(c as u64))))
}
