//! Equivariant diffeomorphism class of a legal weighted orbit space.
//!
//! Spaces with at most four vertices are looked up directly (the Orlik-Raymond
//! table). Larger spaces are cut along a curve joining two non-adjacent edges
//! whose weights have determinant `±1`; both pieces keep their inherited
//! weights, and the procedure recurses until every piece is an atom.
//!
//! "CP2" denotes the three-vertex class with `-ε₀ε₁ε₂ = +1` under the sequence
//! orientation of [`WeightedOrbitSpace`]. Reversing the sequence or
//! reparametrizing with a determinant `-1` matrix swaps CP2 and CP2bar.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::det2;
use crate::orbit_space::WeightedOrbitSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    S4,
    Cp2,
    Cp2Bar,
    S2xS2,
    Cp2SharpCp2Bar,
}

impl Atom {
    pub const ALL: [Atom; 5] = [Atom::S4, Atom::Cp2, Atom::Cp2Bar, Atom::S2xS2, Atom::Cp2SharpCp2Bar];

    pub fn name(&self) -> &'static str {
        match self {
            Atom::S4 => "S4",
            Atom::Cp2 => "CP2",
            Atom::Cp2Bar => "CP2bar",
            Atom::S2xS2 => "S2xS2",
            Atom::Cp2SharpCp2Bar => "CP2_connsum_CP2bar",
        }
    }

    pub fn from_name(name: &str) -> Option<Atom> {
        Atom::ALL.into_iter().find(|a| a.name() == name)
    }

    pub fn euler_characteristic(&self) -> i64 {
        match self {
            Atom::S4 => 2,
            Atom::Cp2 | Atom::Cp2Bar => 3,
            Atom::S2xS2 | Atom::Cp2SharpCp2Bar => 4,
        }
    }

    /// Image under orientation reversal.
    pub fn mirror(&self) -> Atom {
        match self {
            Atom::Cp2 => Atom::Cp2Bar,
            Atom::Cp2Bar => Atom::Cp2,
            other => *other,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A connected sum of atoms, kept as a multiset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ManifoldClass {
    counts: BTreeMap<Atom, usize>,
}

impl ManifoldClass {
    /// Builds a class from a non-empty atom list. `S4` may only appear alone.
    pub fn from_atoms(atoms: &[Atom]) -> Option<Self> {
        if atoms.is_empty() || (atoms.contains(&Atom::S4) && atoms.len() > 1) {
            return None;
        }
        let mut counts = BTreeMap::new();
        for &a in atoms {
            *counts.entry(a).or_insert(0) += 1;
        }
        Some(ManifoldClass { counts })
    }

    pub fn single(atom: Atom) -> Self {
        Self::from_atoms(&[atom]).expect("one atom")
    }

    fn repeated(atom: Atom, k: usize) -> Self {
        let mut counts = BTreeMap::new();
        counts.insert(atom, k);
        ManifoldClass { counts }
    }

    /// `(atom, multiplicity)` pairs in atom order.
    pub fn summands(&self) -> impl Iterator<Item = (Atom, usize)> + '_ {
        self.counts.iter().map(|(&a, &k)| (a, k))
    }

    pub fn count(&self, atom: Atom) -> usize {
        self.counts.get(&atom).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Multiset union: the connected sum of the two classes.
    pub fn connected_sum(&self, other: &ManifoldClass) -> ManifoldClass {
        let mut counts = self.counts.clone();
        for (&a, &k) in &other.counts {
            *counts.entry(a).or_insert(0) += k;
        }
        if counts.len() > 1 {
            // S4 is the unit of the connected sum.
            counts.remove(&Atom::S4);
        }
        ManifoldClass { counts }
    }

    pub fn mirror(&self) -> ManifoldClass {
        ManifoldClass {
            counts: self.counts.iter().map(|(a, &k)| (a.mirror(), k)).collect(),
        }
    }

    /// Diffeomorphism normal form. Once a summand with odd intersection form is
    /// present, `S2xS2` and `CP2_connsum_CP2bar` are each rewritten as
    /// `CP2 # CP2bar`; otherwise the class is returned unchanged.
    ///
    /// The raw atom multiset of a decomposition depends on where the cuts are
    /// made (`S2xS2 # CP2` and `CP2 # CP2 # CP2bar` both occur for one space);
    /// the normal form does not.
    pub fn normal_form(&self) -> ManifoldClass {
        let odd = self.count(Atom::Cp2) + self.count(Atom::Cp2Bar) + self.count(Atom::Cp2SharpCp2Bar) > 0;
        if !odd {
            return self.clone();
        }
        let mixed = self.count(Atom::S2xS2) + self.count(Atom::Cp2SharpCp2Bar);
        let mut counts = BTreeMap::new();
        for (atom, k) in [(Atom::Cp2, self.count(Atom::Cp2) + mixed), (Atom::Cp2Bar, self.count(Atom::Cp2Bar) + mixed)] {
            if k > 0 {
                counts.insert(atom, k);
            }
        }
        ManifoldClass { counts }
    }

    /// `S4`, or a connected sum of copies of a single projective plane with a
    /// fixed orientation.
    pub fn is_single_orientation_projective(&self) -> bool {
        self.counts.len() == 1 && matches!(self.counts.keys().next(), Some(Atom::S4 | Atom::Cp2 | Atom::Cp2Bar))
    }
}

impl fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, k) in self.summands() {
            for _ in 0..k {
                if !first {
                    f.write_str(" # ")?;
                }
                first = false;
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

/// Euler characteristic: `2 + Σ (χ(atom) - 2)`.
pub fn chi_of_class(c: &ManifoldClass) -> i64 {
    2 + c
        .summands()
        .map(|(a, k)| (a.euler_characteristic() - 2) * k as i64)
        .sum::<i64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitVariant {
    /// Cut from edge `i` to edge `j`, `|r_{i,j}| = 1`.
    Case1,
    /// Cut from edge `i - 1` to edge `j`, `|r_{i-1,j}| = 1`.
    Case2,
}

impl SplitVariant {
    pub fn name(&self) -> &'static str {
        match self {
            SplitVariant::Case1 => "case1",
            SplitVariant::Case2 => "case2",
        }
    }
}

/// A cut between two non-adjacent edges. Ordered by `(i, j, variant)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitChoice {
    pub i: usize,
    pub j: usize,
    pub variant: SplitVariant,
}

impl SplitChoice {
    /// The two edge indices joined by the cut.
    pub fn endpoints(&self, t: usize) -> (usize, usize) {
        match self.variant {
            SplitVariant::Case1 => (self.i % t, self.j % t),
            SplitVariant::Case2 => ((self.i + t - 1) % t, self.j % t),
        }
    }

    fn is_valid_for(&self, x: &WeightedOrbitSpace) -> bool {
        let t = x.t();
        if self.i >= t || self.j >= t {
            return false;
        }
        let (a, b) = self.endpoints(t);
        a != b && !x.are_adjacent(a, b) && x.r_pair(a, b).abs() == 1
    }
}

impl fmt::Display for SplitChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.i, self.j, self.variant.name())
    }
}

/// Error parsing a [`SplitChoice`] from `"i,j,case1"` or `"i,j,case2"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseSplitError;

impl fmt::Display for ParseSplitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected \"i,j,case1\" or \"i,j,case2\"")
    }
}

impl core::error::Error for ParseSplitError {}

impl core::str::FromStr for SplitChoice {
    type Err = ParseSplitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(',').map(str::trim);
        let i = parts.next().and_then(|p| p.parse().ok()).ok_or(ParseSplitError)?;
        let j = parts.next().and_then(|p| p.parse().ok()).ok_or(ParseSplitError)?;
        let variant = match parts.next() {
            Some("case1") => SplitVariant::Case1,
            Some("case2") => SplitVariant::Case2,
            _ => return Err(ParseSplitError),
        };
        if parts.next().is_some() {
            return Err(ParseSplitError);
        }
        Ok(SplitChoice { i, j, variant })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    /// `classify_small` only handles `t <= 4`.
    WrongSize { t: usize },
    /// A four-vertex space matched no row of the table.
    UnclassifiedT4 {
        epsilons: [i64; 4],
        r02: i64,
        r13: i64,
    },
    /// No admissible cut in a space that must have one.
    NoSplitAvailable { space: WeightedOrbitSpace },
    InvalidSplit { choice: SplitChoice, t: usize },
}

impl ClassifyError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ClassifyError::WrongSize { .. } => "wrong_size",
            ClassifyError::UnclassifiedT4 { .. } => "unclassified_t4",
            ClassifyError::NoSplitAvailable { .. } => "no_split_available",
            ClassifyError::InvalidSplit { .. } => "invalid_split",
        }
    }
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::WrongSize { t } => write!(f, "table lookup needs t <= 4, got t = {t}"),
            ClassifyError::UnclassifiedT4 { epsilons, r02, r13 } => write!(
                f,
                "no table row matches t = 4 with epsilons {epsilons:?}, r_02 = {r02}, r_13 = {r13}"
            ),
            ClassifyError::NoSplitAvailable { space } => {
                write!(f, "no connected-sum split exists for {space}")
            }
            ClassifyError::InvalidSplit { choice, t } => {
                write!(f, "split choice {choice} is not valid for this space (t = {t})")
            }
        }
    }
}

impl core::error::Error for ClassifyError {}

/// Table lookup for `t <= 4`.
pub fn classify_small(x: &WeightedOrbitSpace) -> Result<ManifoldClass, ClassifyError> {
    let eps = x.epsilons();
    let sign = -eps.iter().product::<i64>();
    match x.t() {
        2 => Ok(ManifoldClass::single(Atom::S4)),
        3 => Ok(ManifoldClass::single(if sign == 1 { Atom::Cp2 } else { Atom::Cp2Bar })),
        4 => {
            let e23 = eps[2] * eps[3];
            let r02 = x.r_pair(0, 2);
            let r13 = x.r_pair(1, 3);
            if sign == 1 && (r13 == e23 || r13 == 2 * e23) {
                Ok(ManifoldClass::repeated(Atom::Cp2, 2))
            } else if sign == 1 && (r13 == -e23 || r13 == -2 * e23) {
                Ok(ManifoldClass::repeated(Atom::Cp2Bar, 2))
            } else if sign == -1 && r02 % 2 == 0 && r13 % 2 == 0 && (r02 == 0 || r13 == 0) {
                Ok(ManifoldClass::single(Atom::S2xS2))
            } else if sign == -1 && ((r02 % 2 != 0 && r13 == 0) || (r13 % 2 != 0 && r02 == 0)) {
                Ok(ManifoldClass::single(Atom::Cp2SharpCp2Bar))
            } else {
                Err(ClassifyError::UnclassifiedT4 {
                    epsilons: [eps[0], eps[1], eps[2], eps[3]],
                    r02,
                    r13,
                })
            }
        }
        t => Err(ClassifyError::WrongSize { t }),
    }
}

/// Every valid cut, sorted by `(i, j, variant)`.
pub fn find_splits(x: &WeightedOrbitSpace) -> Vec<SplitChoice> {
    let t = x.t();
    let mut out = Vec::new();
    for i in 0..t {
        for j in 0..t {
            for variant in [SplitVariant::Case1, SplitVariant::Case2] {
                let c = SplitChoice { i, j, variant };
                if c.is_valid_for(x) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Cuts `x` along a curve from edge `a` to edge `b` (the endpoints of `c`).
///
/// The first piece runs `a, …, b` forward around the cycle and closes with a new
/// vertex between `b` and `a`; the second runs `b, …, a` and closes between `a`
/// and `b`. The new vertices carry `det(b, a)` and `det(a, b)` respectively.
pub fn split(
    x: &WeightedOrbitSpace,
    c: SplitChoice,
) -> Result<(WeightedOrbitSpace, WeightedOrbitSpace), ClassifyError> {
    let t = x.t();
    if !c.is_valid_for(x) {
        return Err(ClassifyError::InvalidSplit { choice: c, t });
    }
    let (a, b) = c.endpoints(t);
    let arc = |from: usize, to: usize| {
        let len = (to + t - from) % t + 1;
        (0..len).map(|k| x.edge(from + k)).collect::<Vec<_>>()
    };
    let first = WeightedOrbitSpace::new(arc(a, b)).expect("piece inherits legal vertices and a unimodular cut");
    let second = WeightedOrbitSpace::new(arc(b, a)).expect("piece inherits legal vertices and a unimodular cut");
    debug_assert_eq!(first.epsilon(0), det2(x.edge(b), x.edge(a)));
    debug_assert_eq!(second.epsilon(0), -first.epsilon(0));
    Ok((first, second))
}

/// Writes `x` as a connected sum of atoms, cutting at the first split, and
/// returns the [normal form](ManifoldClass::normal_form) of the result.
pub fn decompose(x: &WeightedOrbitSpace) -> Result<ManifoldClass, ClassifyError> {
    decompose_with(x, None)
}

/// As [`decompose`], but with an explicit cut at the root. Pieces below the
/// root use the default choice.
pub fn decompose_with(x: &WeightedOrbitSpace, root: Option<SplitChoice>) -> Result<ManifoldClass, ClassifyError> {
    Ok(decompose_raw_with(x, root)?.normal_form())
}

/// The atom multiset produced by the cuts themselves, before normalization.
pub fn decompose_raw(x: &WeightedOrbitSpace) -> Result<ManifoldClass, ClassifyError> {
    decompose_raw_with(x, None)
}

pub fn decompose_raw_with(x: &WeightedOrbitSpace, root: Option<SplitChoice>) -> Result<ManifoldClass, ClassifyError> {
    let choice = match root {
        Some(c) => c,
        None => {
            if x.t() <= 4 {
                let class = classify_small(x)?;
                let splittable = class.len() == 2 && (class.count(Atom::Cp2) == 2 || class.count(Atom::Cp2Bar) == 2);
                if !splittable {
                    return Ok(class);
                }
            }
            match find_splits(x).first() {
                Some(&c) => c,
                None => return Err(ClassifyError::NoSplitAvailable { space: x.clone() }),
            }
        }
    };
    let (first, second) = split(x, choice)?;
    Ok(decompose_raw(&first)?.connected_sum(&decompose_raw(&second)?))
}
