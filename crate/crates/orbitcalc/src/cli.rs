//! Argument parsing and command dispatch for the `orbitcalc` binary.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orbitcalc_core::rigidity::{
    conner_check, connectedness_degree, dim6_b2_bound, free_action_order_bound, intersection_connectedness,
    periodic_cohomology_trichotomy, periodicity_ranges, symmetry_rank_bound, BettiVector, CalcError,
    CurvatureSymmetry, InclusionSpec,
};
use orbitcalc_core::{
    decompose_raw_with, decompose_with, find_splits, ClassifyError, EnumBounds, SplitChoice, WeightedOrbitSpace,
};

use crate::format::{self, ParseError};
use crate::json::{edges_json, to_line, AdmissibilityJson, BoundsJson, ClassJson, ErrorJson, SurveyJson};
use crate::parallel;

/// Largest accepted `--w-max`.
const W_MAX_LIMIT: u64 = 1 << 20;

#[derive(Debug, Parser)]
#[command(name = "orbitcalc", version, about = "Weighted orbit spaces of T^2-actions on simply connected 4-manifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check legality and print ε and the Euler characteristic.
    Validate { file: PathBuf },
    /// Classify the 4-manifold of an orbit space.
    Classify { file: PathBuf },
    /// Run the Ric2 admissibility test.
    Admissible { file: PathBuf },
    /// Decompose into a connected sum, optionally forcing the first cut.
    Decompose {
        file: PathBuf,
        /// Root cut as "i,j,case1" or "i,j,case2".
        #[arg(long)]
        force_split: Option<SplitChoice>,
    },
    /// List canonical orbit spaces within the bounds.
    Enumerate(BoundArgs),
    /// Classify every canonical orbit space within the bounds.
    Survey(BoundArgs),
    /// Rigidity calculators.
    #[command(subcommand)]
    Calc(Calc),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BoundArgs {
    /// Maximum number of edges.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=1024))]
    pub t_max: u64,
    /// Maximum absolute weight entry of the canonical form.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=W_MAX_LIMIT))]
    pub w_max: u64,
    /// Worker threads.
    #[arg(long, default_value = "1")]
    pub jobs: NonZeroUsize,
}

impl BoundArgs {
    fn bounds(&self) -> EnumBounds {
        EnumBounds::new(self.t_max as usize, self.w_max).expect("clap enforces the ranges")
    }
}

#[derive(Debug, Subcommand)]
pub enum Calc {
    /// Upper bound on the symmetry rank of M^n with Ric_k > 0.
    Symrank {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Connectivity n - 2d + 2 - k + delta of a totally geodesic inclusion.
    Connectedness {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        delta: i64,
    },
    /// Connectivity of the intersection of two totally geodesic submanifolds.
    Intersection {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d1: i64,
        #[arg(long, allow_negative_numbers = true)]
        d2: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Degrees where cup product with the Euler class is onto and one-to-one.
    Periodicity {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
    },
    /// Betti numbers forced by degree-2 periodicity.
    Trichotomy {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        b2: u64,
    },
    /// Compare a torus manifold with its fixed-point set.
    Conner {
        /// Betti numbers of M, comma separated.
        #[arg(long, value_parser = parse_betti)]
        ambient: BettiVector,
        /// Betti numbers of one fixed component; repeat for each component.
        #[arg(long = "fixed", value_parser = parse_betti, required = true)]
        fixed: Vec<BettiVector>,
    },
    /// Euler characteristic count for three fixed components in dimension 6.
    B2bound {
        #[arg(long)]
        b: u64,
        #[arg(long)]
        chi_triple: u64,
    },
    /// Largest order of a group acting freely on spaces with these Euler characteristics.
    Orderbound {
        #[arg(required = true, allow_negative_numbers = true)]
        chis: Vec<i64>,
    },
}

fn parse_betti(s: &str) -> Result<BettiVector, String> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(BettiVector::new)
}

/// A domain failure, reported with exit status 1.
#[derive(Debug)]
pub struct DomainError {
    pub code: String,
    pub detail: String,
}

impl From<ParseError> for DomainError {
    fn from(e: ParseError) -> Self {
        DomainError { code: e.code().into(), detail: e.to_string() }
    }
}

impl From<ClassifyError> for DomainError {
    fn from(e: ClassifyError) -> Self {
        DomainError { code: e.code().into(), detail: e.to_string() }
    }
}

impl From<CalcError> for DomainError {
    fn from(e: CalcError) -> Self {
        DomainError { code: e.code().into(), detail: e.to_string() }
    }
}

/// A command's result in both renderings.
struct Report {
    json: String,
    text: String,
}

impl Report {
    fn new<T: Serialize>(doc: &T, text: String) -> Self {
        Report { json: to_line(doc), text }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out` and `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return status;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let body = match cli.format {
                OutputFormat::Json => report.json,
                OutputFormat::Text => report.text,
            };
            let _ = writeln!(out, "{}", body.trim_end());
            0
        }
        Err(e) => {
            match cli.format {
                OutputFormat::Json => {
                    let _ = writeln!(out, "{}", to_line(&ErrorJson::new(e.code, e.detail)));
                }
                OutputFormat::Text => {
                    let _ = writeln!(err, "error [{}]: {}", e.code, e.detail);
                }
            }
            1
        }
    }
}

fn load(path: &Path) -> Result<WeightedOrbitSpace, DomainError> {
    let text = std::fs::read_to_string(path).map_err(|e| DomainError {
        code: "io_error".into(),
        detail: format!("{}: {e}", path.display()),
    })?;
    Ok(format::parse(&text)?)
}

/// Joins `items` with `sep`, or gives `none` for an empty list.
fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(sep)
    }
}

fn execute(command: &Command) -> Result<Report, DomainError> {
    match command {
        Command::Validate { file } => {
            let x = load(file)?;
            #[derive(Serialize)]
            struct Doc {
                valid: bool,
                t: usize,
                euler_characteristic: usize,
                epsilons: Vec<i64>,
                edges: Vec<[i64; 2]>,
            }
            let doc = Doc {
                valid: true,
                t: x.t(),
                euler_characteristic: x.euler_characteristic(),
                epsilons: x.epsilons(),
                edges: edges_json(&x),
            };
            let text = format!(
                "valid: true\nt: {}\neuler_characteristic: {}\nepsilons: {}\nedges: {x}",
                doc.t,
                doc.euler_characteristic,
                join(&doc.epsilons, " ")
            );
            Ok(Report::new(&doc, text))
        }
        Command::Classify { file } => {
            let x = load(file)?;
            let class = decompose_with(&x, None)?;
            #[derive(Serialize)]
            struct Doc {
                class: ClassJson,
            }
            let doc = Doc { class: (&class).into() };
            let text = format!("class: {class}\nchi: {}", doc.class.chi);
            Ok(Report::new(&doc, text))
        }
        Command::Admissible { file } => {
            let x = load(file)?;
            let doc = AdmissibilityJson::from(&x.ric2_admissible());
            let witnesses = join(doc.witnesses.iter().map(|[i, j]| format!("{i},{j}")), " ");
            let text = format!("admissible: {}\nwitnesses: {witnesses}", doc.admissible);
            Ok(Report::new(&doc, text))
        }
        Command::Decompose { file, force_split } => {
            let x = load(file)?;
            let class = decompose_with(&x, *force_split)?;
            let raw = decompose_raw_with(&x, *force_split)?;
            #[derive(Serialize)]
            struct Doc {
                class: ClassJson,
                raw_class: ClassJson,
                root: Option<String>,
                splits: Vec<String>,
            }
            let doc = Doc {
                class: (&class).into(),
                raw_class: (&raw).into(),
                root: force_split.map(|c| c.to_string()),
                splits: find_splits(&x).iter().map(|c| c.to_string()).collect(),
            };
            let text = format!(
                "class: {class}\nchi: {}\nraw_class: {raw}\nroot: {}\nsplits: {}",
                doc.class.chi,
                doc.root.as_deref().unwrap_or("default"),
                join(&doc.splits, " ")
            );
            Ok(Report::new(&doc, text))
        }
        Command::Enumerate(args) => {
            let bounds = args.bounds();
            let spaces = parallel::enumerate(bounds, args.jobs);
            #[derive(Serialize)]
            struct Doc {
                bounds: BoundsJson,
                count: usize,
                spaces: Vec<Vec<[i64; 2]>>,
            }
            let doc = Doc {
                bounds: BoundsJson { t_max: bounds.t_max(), w_max: bounds.w_max() },
                count: spaces.len(),
                spaces: spaces.iter().map(edges_json).collect(),
            };
            let mut text = format!("count: {}\n", doc.count);
            for x in &spaces {
                let _ = writeln!(text, "{x}");
            }
            Ok(Report::new(&doc, text))
        }
        Command::Survey(args) => {
            let report = parallel::survey(args.bounds(), args.jobs);
            let doc = SurveyJson::from(&report);
            Ok(Report::new(&doc, survey_text(&doc)))
        }
        Command::Calc(calc) => calculate(calc),
    }
}

fn survey_text(doc: &SurveyJson) -> String {
    let mut text = format!("bounds: t_max = {}, w_max = {}\ntotal: {}\n", doc.bounds.t_max, doc.bounds.w_max, doc.total);
    let _ = writeln!(text, "{:>3}  {:>7}  {:>10}  class", "t", "count", "admissible");
    for row in &doc.classes {
        let class = join(row.class.summands.iter().flat_map(|s| std::iter::repeat(s.kind).take(s.count)), " # ");
        let _ = writeln!(text, "{:>3}  {:>7}  {:>10}  {class} (chi {})", row.t, row.count, row.admissible_count, row.class.chi);
    }
    for i in &doc.incidents {
        let _ = writeln!(text, "incident [{}]: {:?}: {}", i.code, i.space, i.detail);
    }
    for c in &doc.counterexamples {
        let _ = writeln!(text, "counterexample: {:?} (chi {})", c.space, c.class.chi);
    }
    let _ = writeln!(text, "incidents: {}", doc.incidents.len());
    let _ = writeln!(text, "theorem_dim4_holds: {}", doc.theorem_dim4_holds);
    text
}

fn calculate(calc: &Calc) -> Result<Report, DomainError> {
    #[derive(Serialize)]
    struct Bound {
        bound: u64,
    }
    #[derive(Serialize)]
    struct Degree {
        degree: i64,
    }
    #[derive(Serialize)]
    struct Holds {
        holds: bool,
    }
    match *calc {
        Calc::Symrank { n, k } => {
            let bound = symmetry_rank_bound(CurvatureSymmetry::new(n, k)?) as u64;
            Ok(Report::new(&Bound { bound }, format!("bound: {bound}")))
        }
        Calc::Connectedness { n, d, k, delta } => {
            let degree = connectedness_degree(InclusionSpec { n, d, k, delta });
            Ok(Report::new(&Degree { degree }, format!("degree: {degree}")))
        }
        Calc::Intersection { n, d1, d2, k } => {
            let degree = intersection_connectedness(n, d1, d2, k)?;
            Ok(Report::new(&Degree { degree }, format!("degree: {degree}")))
        }
        Calc::Periodicity { n, d, l } => {
            let r = periodicity_ranges(n, d, l);
            #[derive(Serialize)]
            struct Doc {
                surjective: Vec<i64>,
                injective: Vec<i64>,
            }
            let doc = Doc { surjective: r.surjective.collect(), injective: r.injective.collect() };
            let text = format!(
                "surjective: {}\ninjective: {}",
                join(&doc.surjective, " "),
                join(&doc.injective, " ")
            );
            Ok(Report::new(&doc, text))
        }
        Calc::Trichotomy { n, b2 } => {
            let (kind, betti) = periodic_cohomology_trichotomy(n, b2)?;
            #[derive(Serialize)]
            struct Doc<'a> {
                r#type: &'static str,
                betti: &'a [u64],
            }
            let doc = Doc { r#type: kind.name(), betti: betti.as_slice() };
            let text = format!("type: {}\nbetti: {}", doc.r#type, join(doc.betti, " "));
            Ok(Report::new(&doc, text))
        }
        Calc::Conner { ref ambient, ref fixed } => {
            let union = fixed[1..].iter().fold(fixed[0].clone(), |acc, f| acc.disjoint_union(f));
            let check = conner_check(ambient, &union);
            #[derive(Serialize)]
            struct Doc {
                holds: bool,
                chi_equal: bool,
                odd_bounded: bool,
                even_bounded: bool,
            }
            let doc = Doc {
                holds: check.holds(),
                chi_equal: check.chi_equal,
                odd_bounded: check.odd_bounded,
                even_bounded: check.even_bounded,
            };
            let text = format!(
                "holds: {}\nchi_equal: {}\nodd_bounded: {}\neven_bounded: {}",
                doc.holds, doc.chi_equal, doc.odd_bounded, doc.even_bounded
            );
            Ok(Report::new(&doc, text))
        }
        Calc::B2bound { b, chi_triple } => {
            let holds = dim6_b2_bound(b, chi_triple)?;
            Ok(Report::new(&Holds { holds }, format!("holds: {holds}")))
        }
        Calc::Orderbound { ref chis } => {
            let bound = free_action_order_bound(chis)?;
            Ok(Report::new(&Bound { bound }, format!("bound: {bound}")))
        }
    }
}
