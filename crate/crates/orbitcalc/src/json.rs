//! JSON documents emitted by the command-line tool.
//!
//! Field order is fixed by the struct definitions and every collection is
//! sorted before serialization, so equal inputs give byte-identical output.

use serde::Serialize;

use orbitcalc_core::enumerator::Incident;
use orbitcalc_core::{chi_of_class, AdmissibilityReport, ManifoldClass, SurveyReport, WeightedOrbitSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandJson {
    pub kind: &'static str,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub summands: Vec<SummandJson>,
    pub chi: i64,
}

impl From<&ManifoldClass> for ClassJson {
    fn from(c: &ManifoldClass) -> Self {
        ClassJson {
            summands: c.summands().map(|(a, count)| SummandJson { kind: a.name(), count }).collect(),
            chi: chi_of_class(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityJson {
    pub admissible: bool,
    pub witnesses: Vec<[usize; 2]>,
}

impl From<&AdmissibilityReport> for AdmissibilityJson {
    fn from(r: &AdmissibilityReport) -> Self {
        AdmissibilityJson {
            admissible: r.admissible,
            witnesses: r.witnesses.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

pub fn edges_json(x: &WeightedOrbitSpace) -> Vec<[i64; 2]> {
    x.to_pairs().into_iter().map(|(m, n)| [m, n]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsJson {
    pub t_max: usize,
    pub w_max: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRowJson {
    pub t: usize,
    pub class: ClassJson,
    pub count: usize,
    pub admissible_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidentJson {
    pub space: Vec<[i64; 2]>,
    pub code: &'static str,
    pub detail: String,
}

impl From<&Incident> for IncidentJson {
    fn from(i: &Incident) -> Self {
        IncidentJson { space: edges_json(&i.space), code: i.code, detail: i.detail.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleJson {
    pub space: Vec<[i64; 2]>,
    pub class: ClassJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyJson {
    pub bounds: BoundsJson,
    pub total: usize,
    pub classes: Vec<ClassRowJson>,
    pub incidents: Vec<IncidentJson>,
    pub counterexamples: Vec<CounterexampleJson>,
    pub theorem_dim4_holds: bool,
}

impl From<&SurveyReport> for SurveyJson {
    fn from(r: &SurveyReport) -> Self {
        SurveyJson {
            bounds: BoundsJson { t_max: r.bounds.t_max(), w_max: r.bounds.w_max() },
            total: r.total,
            classes: r
                .tallies
                .iter()
                .map(|((t, class), tally)| ClassRowJson {
                    t: *t,
                    class: class.into(),
                    count: tally.count,
                    admissible_count: tally.admissible_count,
                })
                .collect(),
            incidents: r.incidents.iter().map(IncidentJson::from).collect(),
            counterexamples: r
                .counterexamples
                .iter()
                .map(|(x, c)| CounterexampleJson { space: edges_json(x), class: c.into() })
                .collect(),
            theorem_dim4_holds: r.theorem_dim4_holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorJson {
    pub error: ErrorBody,
}

impl ErrorJson {
    pub fn new(code: impl Into<String>, detail: impl Into<String>) -> Self {
        ErrorJson { error: ErrorBody { code: code.into(), detail: detail.into() } }
    }
}

/// Compact single-line rendering used for every document on standard output.
pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("document types serialize infallibly")
}
