//! Command-line front end.
//!
//! Every command produces a [`CommandResult`]; `--format json` prints it as
//! `{"status", "payload", "diagnostics"}`, text mode prints a summary.
//! Exit codes: 0 ok, 1 domain or input error, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::classical::EnumerationMode;
use crate::classical::{
    classical_truth_eval, energy_ellipse_indicator, indicator_and, indicator_not,
    universal_truth_functional, CoarseGraining, FinitePhaseSpace,
};
use crate::compat::{
    common_refinement, conjunction, single_framework_check, Connective, FrameworkCheck,
};
use crate::error::{Error, Result};
use crate::json::{
    self, compatibility_json, round_sig, trace_json, AssignmentJson, CollectionJson,
    DecompositionJson, MatrixJson, PairJson, PropertiesJson,
};
use crate::linalg::Tolerance;
use crate::mask::all_masks;
use crate::nogo::{
    build_mermin_square, score_assignment, search_sign_assignments, sign_label, square_frameworks,
    utf_search, verify_square_identities, weak_c_demo_on, FrameworkCollection, ProductRules,
    SignAssignment, UtfOutcome,
};
use crate::quantum;
use crate::random::random_indicator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_tol(s: &str) -> std::result::Result<Tolerance, String> {
    let eps: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Tolerance::new(eps).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "qtruth",
    version,
    about = "Truth functionals, frameworks and the magic square"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Numerical tolerance for projector and commutation tests.
    #[arg(long, global = true, value_parser = parse_tol, default_value = "1e-9")]
    pub tol: Tolerance,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Oscillator phase-space grid: energy ellipse, shells and the point functional.
    ClassicalDemo {
        #[arg(long, default_value_t = 20)]
        nx: usize,
        #[arg(long, default_value_t = 20)]
        np: usize,
        /// Ellipse threshold E0 (x² + p² < E0).
        #[arg(long, default_value_t = 25.0)]
        energy: f64,
        /// Random indicator pairs checked against the truth rules.
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Truth functionals of a decomposition of the identity.
    TruthFunctionals {
        #[arg(long)]
        input: PathBuf,
        /// Filter every candidate 0/1 map (at most 4 cells).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Common refinement of two decompositions.
    Refine {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Conjunction of two projectors.
    Conjunction {
        #[arg(long)]
        input: PathBuf,
    },
    /// Whether a set of projectors fits in a single framework.
    FrameworkCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// Magic-square commands (the square is built in).
    Mermin {
        #[command(subcommand)]
        action: MerminAction,
    },
    /// Universal truth functional search over a framework collection.
    UtfSearch {
        #[arg(long, required_unless_present = "mermin")]
        input: Option<PathBuf>,
        /// Use the six row/column frameworks of the magic square.
        #[arg(long, conflicts_with = "input")]
        mermin: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum MerminAction {
    /// Check the operator identities exactly.
    Verify,
    /// Refute all 512 sign assignments.
    Search,
    /// Constraints violated by an assignment (default: the near-miss example).
    Score {
        #[arg(long)]
        assignment: Option<PathBuf>,
    },
    /// Two truth functionals on incompatible row and column frameworks.
    WeakC,
    /// Print the six row/column frameworks as a collection.
    Frameworks,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub ok: bool,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    pub text: String,
}

impl CommandResult {
    fn ok(payload: Value, text: String) -> Self {
        Self {
            ok: true,
            payload,
            diagnostics: Vec::new(),
            text,
        }
    }

    fn error(err: &Error) -> Self {
        Self {
            ok: false,
            payload: json!({ "error": err.to_string() }),
            diagnostics: Vec::new(),
            text: format!("error: {err}"),
        }
    }

    fn with_diagnostic(mut self, d: impl Into<String>) -> Self {
        self.diagnostics.push(d.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": if self.ok { "ok" } else { "error" },
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        })
    }
}

/// Captured process output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Output {
                code,
                stdout,
                stderr,
            };
        }
    };
    let result = execute(&cli.command, cli.tol).unwrap_or_else(|e| CommandResult::error(&e));
    let code = if result.ok { 0 } else { 1 };
    match cli.format {
        Format::Json => Output {
            code,
            stdout: serde_json::to_string_pretty(&result.to_json()).expect("serializable") + "\n",
            stderr: String::new(),
        },
        Format::Text if result.ok => {
            let mut stdout = result.text.clone();
            for d in &result.diagnostics {
                stdout.push_str(&format!("\nnote: {d}"));
            }
            Output {
                code,
                stdout: stdout + "\n",
                stderr: String::new(),
            }
        }
        Format::Text => Output {
            code,
            stdout: String::new(),
            stderr: result.text + "\n",
        },
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    json::parse(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn execute(command: &Command, tol: Tolerance) -> Result<CommandResult> {
    match command {
        Command::ClassicalDemo {
            nx,
            np,
            energy,
            pairs,
            seed,
        } => classical_demo(*nx, *np, *energy, *pairs, *seed),
        Command::TruthFunctionals { input, exhaustive } => {
            let d = read_json::<DecompositionJson>(input)?.to_decomposition(tol)?;
            truth_functionals(&d, *exhaustive)
        }
        Command::Refine { a, b } => {
            let a = read_json::<DecompositionJson>(a)?.to_decomposition(tol)?;
            let b = read_json::<DecompositionJson>(b)?.to_decomposition(tol)?;
            let report = common_refinement(&a, &b, tol)?;
            let text = match (report.witness(), report.refinement()) {
                (Some((j, k)), _) => {
                    format!("incompatible: cell {j} of A does not commute with cell {k} of B")
                }
                (_, Some(r)) => format!("compatible: common refinement has {} cells", r.len()),
                _ => unreachable!(),
            };
            Ok(CommandResult::ok(compatibility_json(&report), text))
        }
        Command::Conjunction { input } => {
            let pair: PairJson = read_json(input)?;
            let (p, q) = (pair.p.to_matrix()?, pair.q.to_matrix()?);
            for (name, m) in [("p", &p), ("q", &q)] {
                if !m.is_projector(tol) {
                    return Err(Error::Format(format!("{name} is not a projector")));
                }
            }
            let outcome = conjunction(&p, &q, tol)?;
            let (payload, text) = match &outcome {
                Connective::Meaningless => (
                    json!({ "outcome": "MEANINGLESS", "commute": false, "projector": null, "rank": null }),
                    "MEANINGLESS: the projectors do not commute".to_string(),
                ),
                Connective::Projector(m) => (
                    json!({
                        "outcome": "PROJECTOR",
                        "commute": true,
                        "projector": MatrixJson::from(m),
                        "rank": m.projector_rank(),
                    }),
                    format!("PROJECTOR of rank {}", m.projector_rank()),
                ),
            };
            Ok(CommandResult::ok(payload, text))
        }
        Command::FrameworkCheck { input } => {
            let props: PropertiesJson = read_json(input)?;
            let mats = props
                .projectors
                .iter()
                .map(MatrixJson::to_matrix)
                .collect::<Result<Vec<_>>>()?;
            Ok(match single_framework_check(&mats, tol)? {
                FrameworkCheck::Pass { framework } => CommandResult::ok(
                    json!({ "result": "PASS", "pairs": [], "framework": DecompositionJson::from(&framework) }),
                    format!("PASS: joint framework with {} cells", framework.len()),
                ),
                FrameworkCheck::Violation { pairs } => {
                    let listed: Vec<String> =
                        pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
                    CommandResult::ok(
                        json!({ "result": "VIOLATION", "pairs": pairs.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(), "framework": null }),
                        format!("VIOLATION: noncommuting pairs {}", listed.join(" ")),
                    )
                }
            })
        }
        Command::Mermin { action } => mermin(action, tol),
        Command::UtfSearch { input, mermin } => {
            let frameworks = match (input, mermin) {
                (_, true) => square_frameworks(&build_mermin_square(), tol)?,
                (Some(path), false) => read_json::<CollectionJson>(path)?.to_frameworks(tol)?,
                (None, false) => unreachable!("clap requires --input or --mermin"),
            };
            let fc = FrameworkCollection::new(frameworks, tol)?;
            let outcome = utf_search(&fc);
            let trace = outcome.trace();
            let text = match &outcome {
                UtfOutcome::Sat { solutions, .. } => format!(
                    "SAT: {} solution(s), {} nodes visited",
                    solutions.len(),
                    trace.nodes
                ),
                UtfOutcome::Unsat { .. } => format!(
                    "UNSAT: {} nodes visited, {} conflicts",
                    trace.nodes,
                    trace.conflicts.len()
                ),
            };
            Ok(CommandResult::ok(
                json!({
                    "result": if outcome.is_sat() { "SAT" } else { "UNSAT" },
                    "frameworks": fc.frameworks().len(),
                    "shared_projectors": fc.shared().len(),
                    "solutions": outcome.solutions(),
                    "trace": trace_json(trace),
                }),
                text,
            ))
        }
    }
}

fn truth_functionals(
    d: &quantum::DecompositionOfIdentity,
    exhaustive: bool,
) -> Result<CommandResult> {
    let mode = if exhaustive {
        EnumerationMode::Exhaustive
    } else {
        EnumerationMode::Constructive
    };
    let show_tables = d.len() <= crate::boolean::MAX_TABLE_CELLS;
    let (candidates, functionals): (u64, Vec<Value>) = if exhaustive || show_tables {
        let census = quantum::enumerate_truth_functionals(d, mode)?;
        let mut rows: Vec<(usize, String)> = census
            .survivors
            .iter()
            .map(|v| {
                let cell = v.selected_cell().ok_or_else(|| {
                    Error::ConstructionFailure("truth functional selects no single cell".into())
                })?;
                Ok((cell, v.to_bit_string()))
            })
            .collect::<Result<_>>()?;
        rows.sort();
        (
            census.candidates_checked,
            rows.into_iter()
                .map(|(cell, table)| json!({ "cell": cell, "rank": d.cell(cell).projector_rank(), "valuation": table }))
                .collect(),
        )
    } else {
        (
            0,
            (0..d.len())
                .map(
                    |k| json!({ "cell": k, "rank": d.cell(k).projector_rank(), "valuation": null }),
                )
                .collect(),
        )
    };
    let mode_name = if exhaustive {
        "exhaustive"
    } else {
        "constructive"
    };
    let mut text = format!(
        "{} truth functional(s) on {} cells ({mode_name}",
        functionals.len(),
        d.len()
    );
    if exhaustive {
        text.push_str(&format!(", {candidates} candidate maps checked"));
    }
    text.push(')');
    for f in &functionals {
        text.push_str(&format!("\ntheta_{}: cell rank {}", f["cell"], f["rank"]));
        if let Some(bits) = f["valuation"].as_str() {
            text.push_str(&format!(", valuation {bits}"));
        }
    }
    Ok(CommandResult::ok(
        json!({
            "cells": d.len(),
            "mode": mode_name,
            "candidates_checked": candidates,
            "functionals": functionals,
        }),
        text,
    ))
}

fn mermin(action: &MerminAction, tol: Tolerance) -> Result<CommandResult> {
    let sq = build_mermin_square();
    match action {
        MerminAction::Verify => {
            let report = verify_square_identities(&sq);
            let labels = |s: &[Option<i8>; 3]| s.iter().map(|&x| sign_label(x)).collect::<Vec<_>>();
            let passed = report.checks.iter().filter(|c| c.passed).count();
            Ok(CommandResult::ok(
                json!({
                    "all_pass": report.all_pass(),
                    "arithmetic": "gaussian-integer",
                    "row_products": labels(&report.row_products),
                    "column_products": labels(&report.column_products),
                    "checks_passed": passed,
                    "checks_total": report.checks.len(),
                    "checks": report.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect::<Vec<_>>(),
                }),
                format!(
                    "{}\n{}",
                    if report.all_pass() {
                        "ALL PASS"
                    } else {
                        "FAILURES"
                    },
                    report
                ),
            ))
        }
        MerminAction::Search => {
            let s = search_sign_assignments(&ProductRules::mermin());
            let cert = s.certificate.ok_or_else(|| {
                Error::ConstructionFailure("line products have no common parity".into())
            })?;
            Ok(CommandResult::ok(
                json!({
                    "solutions": s.solutions.iter().map(|a| a.values().to_vec()).collect::<Vec<_>>(),
                    "solution_count": s.solutions.len(),
                    "checked": s.checked,
                    "min_violations": s.min_violations,
                    "parity_certificate": {
                        "required": cert.required,
                        "forced": cert.forced,
                        "refutes": cert.refutes(),
                    },
                }),
                format!(
                    "{} solutions / {} checked\nparity certificate: targets multiply to {:+}, line products always multiply to {:+}",
                    s.solutions.len(),
                    s.checked,
                    cert.required,
                    cert.forced
                ),
            ))
        }
        MerminAction::Score { assignment } => {
            let (a, note) = match assignment {
                Some(path) => (read_json::<AssignmentJson>(path)?.to_assignment()?, None),
                None => (
                    SignAssignment::near_miss(),
                    Some("no --assignment given; scored the built-in near-miss example"),
                ),
            };
            let violations: Vec<String> =
                score_assignment(&a).iter().map(|c| c.to_string()).collect();
            let text = if violations.is_empty() {
                "no violations".to_string()
            } else {
                format!(
                    "{} violation(s): {}",
                    violations.len(),
                    violations.join(", ")
                )
            };
            let result = CommandResult::ok(
                json!({ "assignment": a.values().to_vec(), "violations": violations, "count": violations.len() }),
                text,
            );
            Ok(match note {
                Some(n) => result.with_diagnostic(n),
                None => result,
            })
        }
        MerminAction::WeakC => {
            let r = weak_c_demo_on(&sq, tol)?;
            let line = |l: &crate::nogo::LineFunctional| json!({ "cell": l.cell, "values": l.values.map(round_sig) });
            let text = format!(
                "theta' (row 1, cell {}): values {:?}\ntheta'' (column 1, cell {}): values {:?}\n\
                 theta'(σa_x) = {:+}, theta''(σa_x) = {:+}\ntheta'(σb_x) = {:+}, theta''(σb_y) = {:+}\n\
                 frameworks compatible: {}",
                r.theta_prime.cell,
                r.theta_prime.values,
                r.theta_double_prime.cell,
                r.theta_double_prime.values,
                r.shared_values.0,
                r.shared_values.1,
                r.prime_bx,
                r.double_prime_by,
                r.frameworks_compatible()
            );
            Ok(CommandResult::ok(
                json!({
                    "theta_prime": line(&r.theta_prime),
                    "theta_double_prime": line(&r.theta_double_prime),
                    "theta_prime_ax": round_sig(r.shared_values.0),
                    "theta_double_prime_ax": round_sig(r.shared_values.1),
                    "theta_prime_bx": round_sig(r.prime_bx),
                    "theta_double_prime_by": round_sig(r.double_prime_by),
                    "compatible": r.frameworks_compatible(),
                    "witness": r.compatibility.witness().map(|(j, k)| vec![j, k]),
                }),
                text,
            ))
        }
        MerminAction::Frameworks => {
            let frameworks = square_frameworks(&sq, tol)?;
            let collection = CollectionJson::from_frameworks(&frameworks);
            Ok(CommandResult::ok(
                serde_json::to_value(&collection).expect("serializable"),
                serde_json::to_string(&collection).expect("serializable"),
            ))
        }
    }
}

fn classical_demo(
    nx: usize,
    np: usize,
    energy: f64,
    pairs: usize,
    seed: u64,
) -> Result<CommandResult> {
    let space = FinitePhaseSpace::grid(nx, np)?;
    let ellipse = energy_ellipse_indicator(&space, energy)?;
    // γ0: the lowest-energy grid point (first in grid order on ties).
    let gamma0_index = (0..space.len())
        .min_by(|&a, &b| {
            space.points()[a]
                .energy()
                .total_cmp(&space.points()[b].energy())
        })
        .expect("nonempty space");
    let gamma0 = space.points()[gamma0_index];
    let theta0 = universal_truth_functional(&space, gamma0)?;

    // Energy shells [k·E0, (k+1)·E0), capped at 8 cells.
    let labels: Vec<usize> = space
        .points()
        .iter()
        .map(|p| ((p.energy() / energy) as usize).min(7))
        .collect();
    let shells = CoarseGraining::from_labels(&space, &labels)?;
    let k = shells
        .cell_of(gamma0_index)
        .expect("coarse graining covers every point");
    let mut restriction_matches = true;
    for mask in all_masks(shells.len()) {
        let p = shells.algebra_element(&mask)?;
        restriction_matches &= theta0.eval(&p)? == classical_truth_eval(&shells, k, &p)?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0usize;
    let one = crate::classical::Indicator::ones(&space);
    if theta0.eval(&one)? != 1 {
        violations += 1;
    }
    for _ in 0..pairs {
        let p = random_indicator(&space, &mut rng);
        let q = random_indicator(&space, &mut rng);
        let (tp, tq) = (theta0.eval(&p)?, theta0.eval(&q)?);
        if theta0.eval(&indicator_not(&p))? != 1 - tp {
            violations += 1;
        }
        if theta0.eval(&indicator_and(&p, &q)?)? != tp * tq {
            violations += 1;
        }
    }

    let inside = ellipse.values().iter().filter(|&&v| v).count();
    let text = format!(
        "grid {nx}x{np} ({} points), ellipse x²+p² < {energy}: {inside} points inside\n\
         gamma0 = ({}, {}), theta0(ellipse) = {}\n\
         {} energy shells; gamma0 in shell {k}; theta0 restricted to the shell algebra equals theta_{k}: {restriction_matches}\n\
         {pairs} random indicator pairs: {violations} truth-rule violations",
        space.len(),
        gamma0.x,
        gamma0.p,
        theta0.eval(&ellipse)?,
        shells.len(),
    );
    Ok(CommandResult::ok(
        json!({
            "points": space.len(),
            "energy": round_sig(energy),
            "ellipse_points": inside,
            "gamma0": [round_sig(gamma0.x), round_sig(gamma0.p)],
            "theta0_ellipse": theta0.eval(&ellipse)?,
            "shells": shells.len(),
            "gamma0_shell": k,
            "restriction_matches": restriction_matches,
            "random_pairs": pairs,
            "rule_violations": violations,
        }),
        text,
    ))
}
