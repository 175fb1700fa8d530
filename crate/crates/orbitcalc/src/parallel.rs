//! Multi-threaded enumeration and survey.
//!
//! The search tree is partitioned by third edge. Workers take roots
//! round-robin, the canonical sets are unioned, and the sorted union is
//! classified in contiguous chunks whose reports are merged. The report is
//! identical for every job count.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::thread;

use orbitcalc_core::enumerator::{subtree_roots, survey_spaces, CanonicalEnumerator};
use orbitcalc_core::{EnumBounds, SurveyReport, WeightVector, WeightedOrbitSpace};

/// All canonical spaces within `bounds`, sorted.
pub fn enumerate(bounds: EnumBounds, jobs: NonZeroUsize) -> Vec<WeightedOrbitSpace> {
    let jobs = jobs.get();
    if jobs == 1 {
        let set: BTreeSet<_> = CanonicalEnumerator::new(bounds).collect();
        return set.into_iter().collect();
    }
    let roots = subtree_roots(bounds);
    let mut all = BTreeSet::new();
    all.insert(WeightedOrbitSpace::new(vec![WeightVector::E1, WeightVector::E2]).expect("the two-edge cycle is legal"));
    thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs)
            .map(|w| {
                let mine: Vec<WeightVector> = roots.iter().copied().skip(w).step_by(jobs).collect();
                scope.spawn(move || {
                    let mut set = BTreeSet::new();
                    for root in mine {
                        set.extend(CanonicalEnumerator::subtree(bounds, root));
                    }
                    set
                })
            })
            .collect();
        for worker in workers {
            all.extend(worker.join().expect("enumeration worker panicked"));
        }
    });
    all.into_iter().collect()
}

/// Enumerates and classifies every canonical space within `bounds`.
pub fn survey(bounds: EnumBounds, jobs: NonZeroUsize) -> SurveyReport {
    let spaces = enumerate(bounds, jobs);
    if jobs.get() == 1 || spaces.is_empty() {
        return survey_spaces(bounds, &spaces);
    }
    let chunk = spaces.len().div_ceil(jobs.get());
    let mut report = SurveyReport::empty(bounds);
    thread::scope(|scope| {
        let workers: Vec<_> = spaces
            .chunks(chunk)
            .map(|part| scope.spawn(move || survey_spaces(bounds, part)))
            .collect();
        for worker in workers {
            report.merge(worker.join().expect("survey worker panicked"));
        }
    });
    report
}
