//! Bounded exhaustive enumeration of legal orbit spaces up to symmetry, and the
//! survey that runs every enumerated space through the classifier.
//!
//! Every class has a representative starting with `(1,0), (0,1)`. The search
//! fixes those two edges, extends depth-first with sign-normalized primitive
//! weights in the box `[-w_max, w_max]^2` whose determinant with the previous
//! edge is `±1`, and emits the canonical form of every closed cycle. A class is
//! reported when its canonical form fits in the box.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::classifier::{decompose, ClassifyError, ManifoldClass};
use crate::lattice::{det2, WeightVector};
use crate::orbit_space::WeightedOrbitSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsError {
    TMaxTooSmall { t_max: usize },
    WMaxTooSmall { w_max: u64 },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::TMaxTooSmall { t_max } => write!(f, "t_max must be at least 2, got {t_max}"),
            BoundsError::WMaxTooSmall { w_max } => write!(f, "w_max must be at least 1, got {w_max}"),
        }
    }
}

impl core::error::Error for BoundsError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumBounds {
    t_max: usize,
    w_max: u64,
}

impl EnumBounds {
    pub fn new(t_max: usize, w_max: u64) -> Result<Self, BoundsError> {
        if t_max < 2 {
            return Err(BoundsError::TMaxTooSmall { t_max });
        }
        if w_max < 1 {
            return Err(BoundsError::WMaxTooSmall { w_max });
        }
        // Keeps every determinant far from overflow.
        assert!(w_max <= 1 << 20, "w_max {w_max} is beyond desk scale");
        Ok(EnumBounds { t_max, w_max })
    }

    pub fn t_max(&self) -> usize {
        self.t_max
    }

    pub fn w_max(&self) -> u64 {
        self.w_max
    }
}

/// Sign-normalized primitive vectors in `[-w_max, w_max]^2`, sorted.
pub fn candidate_weights(w_max: u64) -> Vec<WeightVector> {
    let w = w_max as i64;
    let mut out: Vec<_> = (-w..=w)
        .flat_map(|m| (-w..=w).map(move |n| (m, n)))
        .filter_map(|(m, n)| WeightVector::new(m, n).ok())
        .filter(|v| v.sign_normalized() == *v)
        .collect();
    out.sort();
    out
}

/// Depth-first stream of canonical representatives, one per class.
///
/// The stream order is deterministic: extensions are tried in lexicographic
/// order of their weights, and a class is emitted the first time it is closed.
pub struct CanonicalEnumerator {
    bounds: EnumBounds,
    candidates: Vec<WeightVector>,
    /// `neighbors[k]`: indices of candidates unimodular against `candidates[k]`.
    neighbors: Vec<Vec<usize>>,
    path: Vec<usize>,
    /// Position in the parent's neighbor list for each edge above `floor`.
    cursors: Vec<usize>,
    floor: usize,
    fresh: bool,
    done: bool,
    seen: BTreeSet<WeightedOrbitSpace>,
}

impl CanonicalEnumerator {
    pub fn new(bounds: EnumBounds) -> Self {
        Self::with_prefix(bounds, &[])
    }

    /// Restricts the search to cycles whose third edge is `third`. Together
    /// with the two-edge cycle, the subtrees for every root in
    /// [`subtree_roots`] cover the whole search; classes may repeat across
    /// subtrees.
    pub fn subtree(bounds: EnumBounds, third: WeightVector) -> Self {
        Self::with_prefix(bounds, &[third])
    }

    fn with_prefix(bounds: EnumBounds, extra: &[WeightVector]) -> Self {
        let candidates = candidate_weights(bounds.w_max);
        let neighbors = candidates
            .iter()
            .map(|&u| {
                (0..candidates.len())
                    .filter(|&k| det2(u, candidates[k]).abs() == 1)
                    .collect()
            })
            .collect();
        let index = |w: WeightVector| candidates.binary_search(&w).ok();
        let mut path: Vec<usize> = [WeightVector::E1, WeightVector::E2]
            .iter()
            .map(|&w| index(w).expect("basis vectors are candidates"))
            .collect();
        let mut done = false;
        for &w in extra {
            let prev = candidates[*path.last().unwrap()];
            match index(w.sign_normalized()) {
                Some(k) if det2(prev, candidates[k]).abs() == 1 && path.len() < bounds.t_max => path.push(k),
                _ => done = true,
            }
        }
        let floor = path.len();
        CanonicalEnumerator {
            bounds,
            candidates,
            neighbors,
            path,
            cursors: Vec::new(),
            floor,
            fresh: !done,
            done,
            seen: BTreeSet::new(),
        }
    }

    fn advance(&mut self) -> bool {
        if self.path.len() < self.bounds.t_max {
            let last = *self.path.last().unwrap();
            if let Some(&next) = self.neighbors[last].first() {
                self.path.push(next);
                self.cursors.push(0);
                return true;
            }
        }
        while let Some(cursor) = self.cursors.pop() {
            self.path.pop();
            let last = *self.path.last().unwrap();
            if let Some(&next) = self.neighbors[last].get(cursor + 1) {
                self.path.push(next);
                self.cursors.push(cursor + 1);
                return true;
            }
        }
        debug_assert_eq!(self.path.len(), self.floor);
        false
    }

    fn closes(&self) -> bool {
        let first = self.candidates[self.path[0]];
        let last = self.candidates[*self.path.last().unwrap()];
        det2(last, first).abs() == 1
    }
}

impl Iterator for CanonicalEnumerator {
    type Item = WeightedOrbitSpace;

    fn next(&mut self) -> Option<WeightedOrbitSpace> {
        while !self.done {
            if core::mem::take(&mut self.fresh) && self.closes() {
                let edges = self.path.iter().map(|&k| self.candidates[k]).collect();
                let canonical = WeightedOrbitSpace::new(edges)
                    .expect("unimodular walk closed unimodularly")
                    .canonical_form();
                if canonical.max_abs_entry() <= self.bounds.w_max && self.seen.insert(canonical.clone()) {
                    return Some(canonical);
                }
            }
            if self.advance() {
                self.fresh = true;
            } else {
                self.done = true;
            }
        }
        None
    }
}

/// Stream of canonical representatives for `bounds`.
pub fn enumerate_canonical(bounds: EnumBounds) -> CanonicalEnumerator {
    CanonicalEnumerator::new(bounds)
}

/// Third-edge choices partitioning the search beyond the two-edge cycle.
pub fn subtree_roots(bounds: EnumBounds) -> Vec<WeightVector> {
    if bounds.t_max < 3 {
        return Vec::new();
    }
    candidate_weights(bounds.w_max)
        .into_iter()
        .filter(|&w| det2(WeightVector::E2, w).abs() == 1)
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassTally {
    pub count: usize,
    pub admissible_count: usize,
}

/// A classifier failure on an enumerated space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Incident {
    pub space: WeightedOrbitSpace,
    pub code: &'static str,
    pub detail: alloc::string::String,
}

/// Aggregated classification of a set of canonical spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub bounds: EnumBounds,
    pub total: usize,
    pub tallies: BTreeMap<(usize, ManifoldClass), ClassTally>,
    /// Failures of the classifier; expected empty.
    pub incidents: Vec<Incident>,
    /// Admissible spaces whose class is not a single-orientation sum of
    /// projective planes; expected empty.
    pub counterexamples: Vec<(WeightedOrbitSpace, ManifoldClass)>,
    /// Admissible spaces the classifier failed on.
    admissible_failures: usize,
}

impl SurveyReport {
    pub fn empty(bounds: EnumBounds) -> Self {
        SurveyReport {
            bounds,
            total: 0,
            tallies: BTreeMap::new(),
            incidents: Vec::new(),
            counterexamples: Vec::new(),
            admissible_failures: 0,
        }
    }

    /// Classifies one space and folds it into the report.
    pub fn record(&mut self, x: &WeightedOrbitSpace) {
        self.total += 1;
        let admissible = x.ric2_admissible().admissible;
        match decompose(x) {
            Ok(class) => {
                if admissible && !class.is_single_orientation_projective() {
                    self.counterexamples.push((x.clone(), class.clone()));
                }
                let tally = self.tallies.entry((x.t(), class)).or_default();
                tally.count += 1;
                if admissible {
                    tally.admissible_count += 1;
                }
            }
            Err(err) => {
                if admissible {
                    self.admissible_failures += 1;
                }
                self.incidents.push(incident(x, &err));
            }
        }
    }

    /// Associative merge; the result does not depend on merge order.
    pub fn merge(&mut self, other: SurveyReport) {
        self.total += other.total;
        for (key, tally) in other.tallies {
            let mine = self.tallies.entry(key).or_default();
            mine.count += tally.count;
            mine.admissible_count += tally.admissible_count;
        }
        self.incidents.extend(other.incidents);
        self.incidents.sort();
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.admissible_failures += other.admissible_failures;
    }

    /// Every admissible space decomposed, and each decomposition is `S4` or
    /// copies of one projective plane with one orientation.
    pub fn theorem_dim4_holds(&self) -> bool {
        self.counterexamples.is_empty() && self.admissible_failures == 0
    }

    pub fn count_incidents(&self, code: &str) -> usize {
        self.incidents.iter().filter(|i| i.code == code).count()
    }

    pub fn admissible_total(&self) -> usize {
        self.tallies.values().map(|t| t.admissible_count).sum()
    }
}

fn incident(x: &WeightedOrbitSpace, err: &ClassifyError) -> Incident {
    use alloc::string::ToString;
    Incident {
        space: x.clone(),
        code: err.code(),
        detail: err.to_string(),
    }
}

/// Classifies every space in `spaces` into one report.
pub fn survey_spaces<'a>(bounds: EnumBounds, spaces: impl IntoIterator<Item = &'a WeightedOrbitSpace>) -> SurveyReport {
    let mut report = SurveyReport::empty(bounds);
    for x in spaces {
        report.record(x);
    }
    report.incidents.sort();
    report.counterexamples.sort();
    report
}

/// Enumerates `bounds` and classifies every space.
pub fn survey(bounds: EnumBounds) -> SurveyReport {
    let spaces: Vec<_> = enumerate_canonical(bounds).collect();
    survey_spaces(bounds, &spaces)
}
