//! Command-line front end. [`run`] parses an argument vector and returns the
//! exit code, the human-readable report and, with `--json`, a JSON document.

use std::fmt::Write as _;
use std::io::Read as _;

use betti_core::alhc::{alhc_to_omega, decompose_module, is_alhc, omega_to_alhc};
use betti_core::census::census_table;
use betti_core::diagram::{parse_integer_list, Certificate};
use betti_core::graph::{from_graph6, parse_edge_list, to_edge_list};
use betti_core::lattice::{
    compare_xi, ehrhart_check, interior_point_check, normality_check, MAX_INTERIOR_SIZE,
};
use betti_core::threshold::{build_graph, invert_omega, threshold_representative};
use betti_core::{
    bs_decompose, chordality_certificate, froberg_vector, is_chordal, pure_diagram, BettiDiagram,
    BigRational, DegreeSequence, Error, Graph, Rational, ReducedBettiVector, ThresholdSequence,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub report: String,
    pub json: Option<Value>,
}

impl CommandResult {
    /// Text the binary prints on stdout: the JSON document when present.
    pub fn output(&self) -> String {
        match &self.json {
            Some(v) => {
                let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
                s.push('\n');
                s
            }
            None => self.report.clone(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "betti",
    version,
    about = "Betti diagrams of 2-linear resolutions"
)]
struct Cli {
    /// Emit a JSON document instead of the text report.
    #[arg(long, global = true)]
    json: bool,
    /// Read graphs in graph6 instead of the edge-list format.
    #[arg(long, global = true)]
    graph6: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Betti vector, diagram and chordality verdict of a graph.
    Betti {
        /// Graph file, or `-` for stdin.
        graph: String,
    },
    /// Boij–Söderberg coefficients of the diagram (m; ω).
    Decompose {
        #[arg(allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value_t = 1)]
        m: u64,
    },
    /// Threshold representative of a chordal graph.
    ThresholdRep { graph: String },
    /// Threshold graph realizing ω.
    FromOmega {
        #[arg(allow_hyphen_values = true)]
        omega: String,
    },
    /// Splits the module diagram (m; ω) into m threshold diagrams.
    ModuleDecompose {
        #[arg(allow_hyphen_values = true)]
        omega: String,
        m: u64,
    },
    /// ω ↦ λ = ωΨ⁻¹, or λ ↦ ω with `--inverse`.
    Alhc {
        #[arg(allow_hyphen_values = true)]
        values: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Pure diagram of a degree sequence.
    Pure { degrees: String },
    /// Chordal, false chordal and not chordal graphs per vertex number.
    Census {
        #[arg(long = "max", default_value_t = 7)]
        max: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Verification reports for the lattice simplex.
    #[command(subcommand)]
    Polytope(Polytope),
}

#[derive(Subcommand, Debug)]
enum Polytope {
    /// Lattice points of t·Qₙ against (t+1)ⁿ − tⁿ.
    Ehrhart { n: usize, t: i64 },
    /// Solved dual, closed-form comparison and interior point check.
    Reflexive {
        n: usize,
        #[arg(long)]
        matrices: bool,
    },
    /// Decomposes every lattice point of t·Qₙ into t points of Qₙ.
    Normal { n: usize, t: i64 },
}

struct Outcome {
    report: String,
    json: Value,
    /// A verdict that is reported in full but still exits 1.
    failed: bool,
}

impl Outcome {
    fn ok(report: String, json: Value) -> Self {
        Outcome {
            report,
            json,
            failed: false,
        }
    }
}

pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return CommandResult {
                exit_code: code,
                report: e.to_string(),
                json: None,
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => CommandResult {
            exit_code: if out.failed { EXIT_DOMAIN } else { EXIT_OK },
            report: out.report,
            json: cli.json.then_some(out.json),
        },
        Err(e) => {
            let code = if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_USAGE
            };
            CommandResult {
                exit_code: code,
                report: format!("error: {e}\n"),
                json: cli
                    .json
                    .then(|| json!({ "error": error_kind(&e), "message": e.to_string() })),
            }
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotRealizable(_) => "NotRealizable",
        Error::NotChordal => "NotChordal",
        Error::NotInCone(_) => "NotInCone",
        Error::Parse(_) => "Parse",
        Error::Range { .. } => "Range",
        Error::Overflow(_) => "Overflow",
        _ => "Invalid",
    }
}

fn dispatch(cli: &Cli) -> betti_core::Result<Outcome> {
    match &cli.command {
        Command::Betti { graph } => betti(&read_graph(graph, cli.graph6)?),
        Command::Decompose { omega, m } => decompose(&parse_integer_list(omega)?, *m),
        Command::ThresholdRep { graph } => threshold_rep(&read_graph(graph, cli.graph6)?),
        Command::FromOmega { omega } => from_omega(&parse_integer_list(omega)?),
        Command::ModuleDecompose { omega, m } => module(&parse_integer_list(omega)?, *m),
        Command::Alhc { values, inverse } => alhc(&parse_integer_list(values)?, *inverse),
        Command::Pure { degrees } => pure(degrees),
        Command::Census { max, csv } => census(*max, *csv),
        Command::Polytope(Polytope::Ehrhart { n, t }) => ehrhart(*n, *t),
        Command::Polytope(Polytope::Reflexive { n, matrices }) => reflexive(*n, *matrices),
        Command::Polytope(Polytope::Normal { n, t }) => normal(*n, *t),
    }
}

fn read_graph(path: &str, graph6: bool) -> betti_core::Result<Graph> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    };
    if graph6 {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::Parse("empty graph6 input".into()))?;
        from_graph6(line)
    } else {
        parse_edge_list(&text)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn rationals(c: &[Rational]) -> Vec<String> {
    c.iter().map(ToString::to_string).collect()
}

fn edges_json(g: &Graph) -> Value {
    json!(g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

fn betti(g: &Graph) -> betti_core::Result<Outcome> {
    let omega = froberg_vector(g)?;
    let chordal = is_chordal(g);
    let certificate = chordality_certificate(&omega)?;
    let c = if omega.is_empty() {
        Vec::new()
    } else {
        bs_decompose::<Rational>(&omega, 1)?.c
    };
    let diagram = BettiDiagram::new(1, omega.clone());
    let verdict = match (chordal, certificate.is_admissible()) {
        (true, _) => "chordal",
        (false, true) => "false chordal",
        (false, false) => "not chordal",
    };
    let report = format!(
        "omega: {omega}\n{diagram}c: [{}]\ncertificate: {certificate}\nverdict: {verdict}\n",
        join(&c)
    );
    let json = json!({
        "vertices": g.vertex_count(),
        "beta00": 1,
        "omega": omega.entries(),
        "c": rationals(&c),
        "chordal": chordal,
        "certificate": certificate_tag(certificate),
        "verdict": verdict,
    });
    Ok(Outcome::ok(report, json))
}

fn certificate_tag(c: Certificate) -> String {
    match c {
        Certificate::Admissible => "admissible".into(),
        Certificate::Inadmissible(r) => r.to_string(),
    }
}

fn decompose(omega: &[i64], m: u64) -> betti_core::Result<Outcome> {
    let bs = bs_decompose::<Rational>(omega, m)?;
    let lambda = omega_to_alhc(omega)?.lambda;
    let diagram = BettiDiagram::new(m, ReducedBettiVector::new(omega.to_vec())?);
    let report = format!(
        "{diagram}c: [{}]\nlambda: {}\nnonnegative: {}\nsums to m: {}\nadmissible: {}\n",
        join(&bs.c),
        join(&lambda),
        bs.nonneg,
        bs.sums_to_m,
        bs.is_admissible()
    );
    let json = json!({
        "beta00": m,
        "omega": omega,
        "c": rationals(&bs.c),
        "lambda": join(&lambda),
        "nonneg": bs.nonneg,
        "sums_to_m": bs.sums_to_m,
        "admissible": bs.is_admissible(),
    });
    Ok(Outcome {
        report,
        json,
        failed: !bs.is_admissible(),
    })
}

fn sequence_outcome(
    seq: &ThresholdSequence,
    extra: String,
    mut json: Value,
) -> betti_core::Result<Outcome> {
    let g = build_graph(seq)?;
    let report = format!("sequence: {seq}\n{extra}edges:\n{}", to_edge_list(&g));
    json["sequence"] = json!(seq.to_string());
    json["vertices"] = json!(g.vertex_count());
    json["edges"] = edges_json(&g);
    Ok(Outcome::ok(report, json))
}

fn threshold_rep(g: &Graph) -> betti_core::Result<Outcome> {
    let seq = threshold_representative(g)?;
    let omega = froberg_vector(g)?;
    sequence_outcome(
        &seq,
        format!("omega: {omega}\n"),
        json!({ "omega": omega.entries() }),
    )
}

fn from_omega(omega: &[i64]) -> betti_core::Result<Outcome> {
    let inv = invert_omega(omega)?;
    let mut chain = format!("chain: [{}]", join(omega));
    for step in &inv.steps {
        let _ = write!(
            chain,
            " -{}-> [{}]",
            step.op.symbol(),
            join(&step.remaining)
        );
    }
    chain.push('\n');
    let steps: Vec<Value> = inv
        .steps
        .iter()
        .map(|s| json!({ "op": s.op.symbol().to_string(), "omega": s.remaining }))
        .collect();
    sequence_outcome(
        &inv.sequence,
        chain,
        json!({ "omega": omega, "chain": steps }),
    )
}

fn module(omega: &[i64], m: u64) -> betti_core::Result<Outcome> {
    let d = decompose_module(omega, m)?;
    let lambda = omega_to_alhc(omega)?.lambda;
    let mut report = format!("lambda: {}\nsummands:\n", join(&lambda));
    for s in &d.summands {
        let _ = writeln!(
            report,
            "  {:<12} omega {}  lambda {}",
            s.sequence.to_string(),
            s.omega,
            join(&s.lambda)
        );
    }
    let _ = writeln!(report, "backtracks: {}", d.backtracks);
    let summands: Vec<Value> = d
        .summands
        .iter()
        .map(|s| json!({ "sequence": s.sequence.to_string(), "omega": s.omega.entries(), "lambda": join(&s.lambda) }))
        .collect();
    let json = json!({
        "beta00": m,
        "omega": omega,
        "lambda": join(&lambda),
        "summands": summands,
        "backtracks": d.backtracks,
    });
    Ok(Outcome::ok(report, json))
}

fn alhc(values: &[i64], inverse: bool) -> betti_core::Result<Outcome> {
    let (omega, lambda) = if inverse {
        (alhc_to_omega(values)?, values.to_vec())
    } else {
        (values.to_vec(), omega_to_alhc(values)?.lambda)
    };
    let bound = lambda.first().copied().unwrap_or(0);
    let valid = bound >= 0 && is_alhc(&lambda, bound);
    let lattice_point = bound == 1 && valid;
    let report = format!(
        "omega: [{}]\nlambda: {}\nanti-lecture hall: {valid}\nlattice point of Q_{}: {lattice_point}\n",
        join(&omega),
        join(&lambda),
        lambda.len()
    );
    let json = json!({
        "omega": omega,
        "lambda": join(&lambda),
        "alhc": valid,
        "lattice_point": lattice_point,
    });
    Ok(Outcome::ok(report, json))
}

fn pure(degrees: &str) -> betti_core::Result<Outcome> {
    let d: Vec<u64> = parse_integer_list(degrees)?
        .into_iter()
        .map(|x| u64::try_from(x).map_err(|_| Error::Parse(format!("negative degree {x}"))))
        .collect::<betti_core::Result<_>>()?;
    let table = pure_diagram::<Rational>(&DegreeSequence::new(d.clone())?)?;
    let mut report = format!("degrees: {}\n", join(&d));
    let mut entries = Vec::new();
    for (&(i, j), v) in table.entries() {
        let _ = writeln!(report, "beta_{i},{j} = {v}");
        entries.push(json!({ "i": i, "j": j, "value": v.to_string() }));
    }
    Ok(Outcome::ok(
        report,
        json!({ "degrees": d, "entries": entries }),
    ))
}

fn census(max: usize, csv: bool) -> betti_core::Result<Outcome> {
    let rows = census_table(max)?;
    let mut report = String::new();
    if csv {
        report.push_str("vertices,chordal,false_chordal,not_chordal\n");
        for r in &rows {
            let _ = writeln!(
                report,
                "{},{},{},{}",
                r.k, r.chordal, r.false_chordal, r.not_chordal
            );
        }
    } else {
        let _ = writeln!(
            report,
            "{:>8}  {:>7}  {:>13}  {:>11}",
            "vertices", "chordal", "false chordal", "not chordal"
        );
        for r in &rows {
            let _ = writeln!(
                report,
                "{:>8}  {:>7}  {:>13}  {:>11}",
                r.k, r.chordal, r.false_chordal, r.not_chordal
            );
        }
    }
    let json = json!({
        "rows": rows
            .iter()
            .map(|r| json!({
                "vertices": r.k,
                "chordal": r.chordal,
                "false_chordal": r.false_chordal,
                "not_chordal": r.not_chordal,
            }))
            .collect::<Vec<_>>()
    });
    Ok(Outcome::ok(report, json))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn ehrhart(n: usize, t: i64) -> betti_core::Result<Outcome> {
    let r = ehrhart_check(n, t)?;
    let report = format!(
        "{} ehrhart n={} t={}: {} lattice points, expected (t+1)^n - t^n = {}\n",
        verdict(r.pass),
        r.n,
        r.t,
        r.count,
        r.expected
    );
    let json =
        json!({ "n": r.n, "t": r.t, "count": r.count, "expected": r.expected, "pass": r.pass });
    Ok(Outcome {
        report,
        json,
        failed: !r.pass,
    })
}

fn normal(n: usize, t: i64) -> betti_core::Result<Outcome> {
    let r = normality_check(n, t)?;
    let report = format!(
        "{} normal n={} t={}: {}/{} points split into {} points of Q_{} ({} backtracks)\n",
        verdict(r.pass),
        r.n,
        r.t,
        r.decomposed,
        r.points,
        r.t,
        r.n,
        r.backtracks
    );
    let json = json!({
        "n": r.n, "t": r.t, "points": r.points, "decomposed": r.decomposed,
        "backtracks": r.backtracks, "pass": r.pass,
    });
    Ok(Outcome {
        report,
        json,
        failed: !r.pass,
    })
}

fn matrix_json(m: &betti_core::exact::Matrix<BigRational>) -> Value {
    json!(m
        .iter_rows()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn reflexive(n: usize, matrices: bool) -> betti_core::Result<Outcome> {
    let cmp = compare_xi::<BigRational>(n)?;
    let dual = &cmp.solved;
    let diagonal = dual.diagonal();
    let expected: Vec<i64> = (1..n as i64).map(|i| i * i + i - 1).collect();
    let diagonal_ok = diagonal[..n - 1]
        .iter()
        .zip(&expected)
        .all(|(d, e)| *d == Some(*e));
    let off_diagonal = dual.off_diagonal_all_minus_one();
    let interior = if n <= MAX_INTERIOR_SIZE {
        Some(interior_point_check(n)?)
    } else {
        None
    };
    let interior_ok = interior.as_ref().is_none_or(|r| r.pass);
    let pass = dual.integral && off_diagonal && diagonal_ok && interior_ok;

    let formula_corner = cmp.formula_product[(n - 1, n - 1)].to_string();
    let formula_last_column: Vec<String> = (0..n - 1)
        .map(|i| cmp.formula_product[(i, n - 1)].to_string())
        .collect();
    let diag_text: Vec<String> = diagonal
        .iter()
        .map(|d| d.map_or_else(|| "?".into(), |v| v.to_string()))
        .collect();

    let mut report = format!("{} reflexive n={n}\n", verdict(pass));
    let _ = writeln!(report, "  solved dual integral: {}", dual.integral);
    let _ = writeln!(report, "  product off-diagonal all -1: {off_diagonal}");
    let _ = writeln!(report, "  product diagonal: [{}]", diag_text.join(","));
    let _ = writeln!(
        report,
        "  expected i^2+i-1 for i<n: [{}] {}",
        join(&expected),
        verdict(diagonal_ok)
    );
    match &interior {
        Some(r) => {
            let _ = writeln!(
                report,
                "  interior lattice points: {:?} of {} ({})",
                r.interior,
                r.lattice_points,
                verdict(r.pass)
            );
        }
        None => {
            let _ = writeln!(
                report,
                "  interior scan skipped for n > {MAX_INTERIOR_SIZE}"
            );
        }
    }
    if cmp.differences.is_empty() {
        let _ = writeln!(report, "  closed-form dual agrees with the solved dual");
    } else {
        for ((i, j), s, f) in &cmp.differences {
            let _ = writeln!(
                report,
                "  DISCREPANCY closed-form dual at ({i},{j}): solved {s}, closed form {f}"
            );
        }
        let _ = writeln!(
            report,
            "  closed-form product: ({n},{n}) = {formula_corner}, last column above the diagonal [{}]",
            formula_last_column.join(",")
        );
    }
    if matrices {
        let _ = write!(report, "solved dual:\n{}", dual.xi);
        let _ = write!(report, "vertices x solved dual:\n{}", dual.product);
        let _ = write!(report, "closed-form dual:\n{}", cmp.formula);
        let _ = write!(
            report,
            "vertices x closed-form dual:\n{}",
            cmp.formula_product
        );
    }

    let mut json = json!({
        "n": n,
        "integral": dual.integral,
        "off_diagonal_minus_one": off_diagonal,
        "diagonal": diagonal,
        "expected_diagonal": expected,
        "diagonal_pass": diagonal_ok,
        "interior": interior.as_ref().map(|r| json!({
            "lattice_points": r.lattice_points,
            "interior_points": r.interior.iter().map(|p| join(p)).collect::<Vec<_>>(),
            "pass": r.pass,
        })),
        "discrepancies": cmp.differences.iter().map(|((i, j), s, f)| json!({
            "row": i, "column": j, "solved": s.to_string(), "closed_form": f.to_string(),
        })).collect::<Vec<_>>(),
        "closed_form_corner": formula_corner,
        "pass": pass,
    });
    if matrices {
        json["solved_dual"] = matrix_json(&dual.xi);
        json["product"] = matrix_json(&dual.product);
        json["closed_form_dual"] = matrix_json(&cmp.formula);
        json["closed_form_product"] = matrix_json(&cmp.formula_product);
    }
    Ok(Outcome {
        report,
        json,
        failed: !pass,
    })
}
