//! Command-line front end for the engine.
//!
//! Reads a lattice polytope (JSON `{"dim": n, "vertices": [[..], ..]}`) and
//! an optional coefficient file (JSON object mapping vertex index to a
//! rational string), runs the requested stage of the pipeline, and prints a
//! text or JSON report.
//!
//! Exit codes: 0 success (including a `false` equality verdict; that is a
//! successful computation), 2 when the engine detects a mathematically
//! inconsistent input (degeneracy, spectrum asymmetry), 3 for malformed or
//! unusable input. `BRIESKORN_THREADS` caps batch parallelism.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use brieskorn::hodge::{
    AlphaHodgeEntry, CertificateSummary, ConstancySummary, HodgeEntry, PolytopeSummary,
    SpectrumEntry,
};
use brieskorn::laurent::{format_rational, parse_coefficient_map};
use brieskorn::{
    build_graded_jacobian, certify_nondegenerate, kkp_report, lefschetz_check, mult_f_operator,
    spectrum, unit_coefficients, vertex_polynomial, Error, GradedJacobianRing, KKPReport,
    LatticePolytope, LefschetzVerdict, NilpotentOperator, Q, QMatrix, Result,
};

#[derive(Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Exact-arithmetic reports on Newton-graded Jacobian rings of vertex Laurent polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Coefficient file: JSON object mapping vertex index to a rational
    /// string, e.g. {"0": "1", "1": "-2/3"}. Default: every coefficient 1.
    #[arg(long, global = true, value_name = "FILE")]
    coefficients: Option<PathBuf>,

    /// Seed for the randomized coefficient trials.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Re-run the graded dimension count with this many random coefficient
    /// vectors (entries are nonzero integers in [-9, 9]) and report whether
    /// the dimensions stay constant. Used by `kkp` and `batch`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    trials: Option<u64>,

    /// Include full matrices (relations, operator blocks) in the output.
    #[arg(long, global = true)]
    full: bool,

    /// Accept an asserted nondegeneracy certificate without the warning.
    #[arg(long, global = true)]
    assume_nondegenerate: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polytope file and report its geometry and certificate.
    Check { polytope: PathBuf },
    /// Graded dimensions and quotient bases of the graded Jacobian ring.
    Jacobian { polytope: PathBuf },
    /// Spectrum at infinity with multiplicities.
    Spectrum { polytope: PathBuf },
    /// Hard Lefschetz checks for the multiplication operator.
    Lefschetz { polytope: PathBuf },
    /// Full report: spectrum, weight filtration, Hodge numbers, verdicts.
    Kkp { polytope: PathBuf },
    /// Full report for every .json polytope in a directory, summarized.
    Batch { dir: PathBuf },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };

    if let Err(e) = configure_threads() {
        emit_error(cli.format, &e);
        return ExitCode::from(3);
    }

    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            emit_error(cli.format, &e);
            ExitCode::from(if e.is_inconsistency() { 2 } else { 3 })
        }
    }
}

/// Applies the BRIESKORN_THREADS cap to the global worker pool.
fn configure_threads() -> Result<()> {
    let raw = match std::env::var("BRIESKORN_THREADS") {
        Ok(s) => s,
        Err(std::env::VarError::NotPresent) => return Ok(()),
        Err(e) => return Err(Error::Malformed(format!("BRIESKORN_THREADS: {e}"))),
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::Malformed(format!("BRIESKORN_THREADS must be a positive integer, got {raw:?}")))?;
    if n == 0 {
        return Err(Error::Malformed(
            "BRIESKORN_THREADS must be a positive integer, got \"0\"".to_string(),
        ));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Malformed(format!("thread pool setup failed: {e}")))
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Check { polytope } => cmd_check(cli, polytope),
        Command::Jacobian { polytope } => cmd_jacobian(cli, polytope),
        Command::Spectrum { polytope } => cmd_spectrum(cli, polytope),
        Command::Lefschetz { polytope } => cmd_lefschetz(cli, polytope),
        Command::Kkp { polytope } => cmd_kkp(cli, polytope),
        Command::Batch { dir } => cmd_batch(cli, dir),
    }
}

fn emit_error(format: Format, e: &Error) {
    match format {
        Format::Text => eprintln!("error[{}]: {e}", e.kind()),
        Format::Json => {
            let v = serde_json::json!({
                "error": { "kind": e.kind(), "message": e.to_string() }
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serialize"));
        }
    }
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_coefficients(cli: &Cli, p: &LatticePolytope) -> Result<BTreeMap<usize, Q>> {
    match &cli.coefficients {
        Some(path) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
            parse_coefficient_map(&s)
        }
        None => Ok(unit_coefficients(p)),
    }
}

/// Loads the polytope and coefficients and builds the graded ring.
fn build_ring(cli: &Cli, path: &Path) -> Result<(LatticePolytope, GradedJacobianRing)> {
    let p = LatticePolytope::load(path)?;
    let a = load_coefficients(cli, &p)?;
    let f = vertex_polynomial(&p, &a)?;
    let cert = certify_nondegenerate(&f)?;
    let ring = build_graded_jacobian(&f, &p, &cert)?;
    Ok((p, ring))
}

fn polytope_summary(id: &str, p: &LatticePolytope) -> PolytopeSummary {
    PolytopeSummary {
        id: id.to_string(),
        dim: p.dim(),
        vertices: p.vertices().to_vec(),
    }
}

// ---------------------------------------------------------------- check

#[derive(Serialize)]
struct CheckOut {
    polytope: PolytopeSummary,
    convenient: bool,
    reflexive: bool,
    simplicial: bool,
    smooth: bool,
    normalized_volume: String,
    certificate: CertificateSummary,
}

fn cmd_check(cli: &Cli, path: &Path) -> Result<ExitCode> {
    let p = LatticePolytope::load(path)?;
    // Facet forms exist only for an interior origin; everything downstream
    // needs them, so reject boundary/exterior origins here.
    p.facets()?;
    let a = load_coefficients(cli, &p)?;
    let f = vertex_polynomial(&p, &a)?;
    let cert = certify_nondegenerate(&f)?;
    let out = CheckOut {
        polytope: polytope_summary(&file_stem(path), &p),
        convenient: f.is_convenient()?,
        reflexive: p.is_reflexive(),
        simplicial: p.is_simplicial(),
        smooth: p.is_smooth(),
        normalized_volume: p.normalized_volume()?.to_string(),
        certificate: CertificateSummary {
            status: cert.status.to_string(),
            detail: cert.detail.clone(),
        },
    };
    match cli.format {
        Format::Json => print_json(&out),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "polytope {} (dim {}, {} vertices)",
                out.polytope.id,
                out.polytope.dim,
                out.polytope.vertices.len()
            );
            let _ = writeln!(s, "convenient: {}", out.convenient);
            let _ = writeln!(s, "reflexive: {}", out.reflexive);
            let _ = writeln!(s, "simplicial: {}", out.simplicial);
            let _ = writeln!(s, "smooth: {}", out.smooth);
            let _ = writeln!(s, "normalized volume: {}", out.normalized_volume);
            let _ = writeln!(
                s,
                "certificate: {} ({})",
                out.certificate.status, out.certificate.detail
            );
            print!("{s}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------- jacobian

#[derive(Serialize)]
struct JacobianOut {
    polytope: PolytopeSummary,
    mu: usize,
    pieces: Vec<PieceOut>,
}

#[derive(Serialize)]
struct PieceOut {
    degree: String,
    dim: usize,
    quotient_basis: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ambient_basis: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    relation_matrix: Option<Vec<Vec<String>>>,
}

fn cmd_jacobian(cli: &Cli, path: &Path) -> Result<ExitCode> {
    let (p, ring) = build_ring(cli, path)?;
    let pieces: Vec<PieceOut> = ring
        .pieces()
        .map(|(d, piece)| PieceOut {
            degree: format_rational(d),
            dim: piece.dim(),
            quotient_basis: piece.quotient_basis.clone(),
            ambient_basis: cli.full.then(|| piece.ambient_basis.clone()),
            relation_matrix: cli.full.then(|| matrix_rows(&piece.relation_matrix)),
        })
        .collect();
    let out = JacobianOut {
        polytope: polytope_summary(&file_stem(path), &p),
        mu: ring.mu(),
        pieces,
    };
    match cli.format {
        Format::Json => print_json(&out),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "polytope {} (dim {}, {} vertices)",
                out.polytope.id,
                out.polytope.dim,
                out.polytope.vertices.len()
            );
            let _ = writeln!(s, "mu: {}", out.mu);
            let _ = writeln!(s, "graded pieces:");
            for piece in &out.pieces {
                let basis = piece
                    .quotient_basis
                    .iter()
                    .map(|m| fmt_exponent(m))
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(
                    s,
                    "  degree {}: dim {}, basis {{{basis}}}",
                    piece.degree, piece.dim
                );
                if let (Some(ambient), Some(rel)) = (&piece.ambient_basis, &piece.relation_matrix)
                {
                    let amb = ambient
                        .iter()
                        .map(|m| fmt_exponent(m))
                        .collect::<Vec<_>>()
                        .join(", ");
                    let _ = writeln!(s, "    ambient {{{amb}}}");
                    let _ = writeln!(
                        s,
                        "    relations ({} x {}):",
                        rel.len(),
                        rel.first().map_or(0, Vec::len)
                    );
                    for row in rel {
                        let _ = writeln!(s, "      [{}]", row.join(", "));
                    }
                }
            }
            print!("{s}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------- spectrum

#[derive(Serialize)]
struct SpectrumOut {
    polytope: PolytopeSummary,
    mu: usize,
    n: usize,
    integral: bool,
    pairs: Vec<SpectrumEntry>,
}

fn cmd_spectrum(cli: &Cli, path: &Path) -> Result<ExitCode> {
    let (p, ring) = build_ring(cli, path)?;
    let spec = spectrum(&ring)?;
    let out = SpectrumOut {
        polytope: polytope_summary(&file_stem(path), &p),
        mu: spec.mu(),
        n: spec.n(),
        integral: spec.is_integral(),
        pairs: spec.pairs().to_vec(),
    };
    match cli.format {
        Format::Json => print_json(&out),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "polytope {} (dim {}, {} vertices)",
                out.polytope.id,
                out.polytope.dim,
                out.polytope.vertices.len()
            );
            let _ = writeln!(s, "mu: {}", out.mu);
            let _ = writeln!(s, "spectrum: {}", fmt_spectrum(&out.pairs));
            let _ = writeln!(s, "integral: {}", out.integral);
            print!("{s}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------ lefschetz

#[derive(Serialize)]
struct LefschetzOut {
    polytope: PolytopeSummary,
    checks: Vec<LefschetzVerdict>,
    all_isomorphisms: bool,
}

fn cmd_lefschetz(cli: &Cli, path: &Path) -> Result<ExitCode> {
    let (p, ring) = build_ring(cli, path)?;
    let op = mult_f_operator(&ring)?;
    let checks = lefschetz_check(&ring, &op)?;
    let all = checks.iter().all(|v| v.iso);
    let out = LefschetzOut {
        polytope: polytope_summary(&file_stem(path), &p),
        checks,
        all_isomorphisms: all,
    };
    match cli.format {
        Format::Json => print_json(&out),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "polytope {} (dim {}, {} vertices)",
                out.polytope.id,
                out.polytope.dim,
                out.polytope.vertices.len()
            );
            for v in &out.checks {
                let _ = writeln!(s, "{}", fmt_lefschetz_line(v));
            }
            let _ = writeln!(s, "all isomorphisms: {}", out.all_isomorphisms);
            print!("{s}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------------ kkp

#[derive(Serialize)]
struct FullKkpOut<'a> {
    #[serde(flatten)]
    report: &'a KKPReport,
    operator: OperatorOut,
}

#[derive(Serialize)]
struct OperatorOut {
    dims: Vec<(String, usize)>,
    blocks: Vec<BlockOut>,
    total_matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct BlockOut {
    source_degree: String,
    rows: Vec<Vec<String>>,
}

fn operator_out(op: &NilpotentOperator) -> OperatorOut {
    OperatorOut {
        dims: op
            .dims()
            .iter()
            .map(|(d, k)| (format_rational(d), *k))
            .collect(),
        blocks: op
            .blocks()
            .map(|(d, m)| BlockOut {
                source_degree: format_rational(d),
                rows: matrix_rows(m),
            })
            .collect(),
        total_matrix: matrix_rows(op.total_matrix()),
    }
}

/// Runs the full pipeline for one file, including the optional constancy
/// trials and the asserted-certificate warning suppression.
fn full_report(cli: &Cli, path: &Path) -> Result<KKPReport> {
    let p = LatticePolytope::load(path)?;
    let a = load_coefficients(cli, &p)?;
    let mut report = kkp_report(&file_stem(path), &p, &a)?;
    if cli.assume_nondegenerate {
        report
            .warnings
            .retain(|w| !w.starts_with("nondegeneracy asserted"));
    }
    if let Some(trials) = cli.trials {
        report.coefficient_constancy = Some(run_constancy(
            &p,
            &report.spectrum,
            trials as usize,
            cli.seed,
        )?);
    }
    Ok(report)
}

/// Rebuilds the ring with `trials` random coefficient vectors (nonzero
/// integers in [-9, 9] from a seeded generator) and compares the spectra.
fn run_constancy(
    p: &LatticePolytope,
    baseline: &[SpectrumEntry],
    trials: usize,
    seed: u64,
) -> Result<ConstancySummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_match = true;
    for _ in 0..trials {
        let a = random_coefficients(p, &mut rng);
        let f = vertex_polynomial(p, &a)?;
        let cert = certify_nondegenerate(&f)?;
        let ring = build_graded_jacobian(&f, p, &cert)?;
        let spec = spectrum(&ring)?;
        if spec.pairs() != baseline {
            all_match = false;
        }
    }
    Ok(ConstancySummary {
        trials,
        seed,
        all_match,
    })
}

fn random_coefficients(p: &LatticePolytope, rng: &mut ChaCha8Rng) -> BTreeMap<usize, Q> {
    (0..p.vertices().len())
        .map(|i| {
            let c = loop {
                let v: i64 = rng.random_range(-9..=9);
                if v != 0 {
                    break v;
                }
            };
            (i, Q::from_integer(c.into()))
        })
        .collect()
}

fn cmd_kkp(cli: &Cli, path: &Path) -> Result<ExitCode> {
    let report = full_report(cli, path)?;
    let operator = if cli.full {
        let (_, ring) = build_ring(cli, path)?;
        Some(operator_out(&mult_f_operator(&ring)?))
    } else {
        None
    };
    match cli.format {
        Format::Json => match operator {
            Some(operator) => print_json(&FullKkpOut {
                report: &report,
                operator,
            }),
            None => print_json(&report),
        },
        Format::Text => print!("{}", render_kkp_text(&report, operator.as_ref())),
    }
    Ok(ExitCode::SUCCESS)
}

fn render_kkp_text(r: &KKPReport, operator: Option<&OperatorOut>) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "polytope {} (dim {}, {} vertices)",
        r.polytope.id,
        r.polytope.dim,
        r.polytope.vertices.len()
    );
    let coeffs = r
        .coefficients
        .iter()
        .map(|(i, c)| format!("{i} -> {c}"))
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(s, "coefficients: {coeffs}");
    let _ = writeln!(s, "certificate: {} ({})", r.certificate.status, r.certificate.detail);
    let _ = writeln!(s, "mu: {}", r.mu);
    let _ = writeln!(s, "spectrum: {}", fmt_spectrum(&r.spectrum));
    if let Some(h) = &r.hodge_numbers {
        let _ = writeln!(s, "hodge numbers: {}", fmt_hodge_numbers(h));
    }
    if let Some(h) = &r.hodge_numbers_alpha {
        let _ = writeln!(s, "hodge numbers by sector: {}", fmt_alpha_hodge_numbers(h));
    }
    let _ = writeln!(s, "weight graded (p -> dim): {}", fmt_int_map(&r.weight_graded));
    let _ = writeln!(
        s,
        "weight filtration, unipotent sector (center {}): {}",
        r.weight_filtration_unipotent.center,
        fmt_int_map(&r.weight_filtration_unipotent.graded_dims)
    );
    if let Some(w) = &r.weight_filtration_twisted {
        let _ = writeln!(
            s,
            "weight filtration, twisted sectors (center {}): {}",
            w.center,
            fmt_int_map(&w.graded_dims)
        );
    }
    let _ = writeln!(s, "lefschetz checks:");
    for v in &r.lefschetz {
        let _ = writeln!(s, "  {}", fmt_lefschetz_line(v));
    }
    let _ = writeln!(
        s,
        "hodge-tate: via lefschetz = {}, via dims = {}",
        r.hodge_tate.via_lefschetz, r.hodge_tate.via_dims
    );
    match r.kkp_equality {
        Some(b) => {
            let _ = writeln!(s, "kkp equality: {b}");
        }
        None => {
            let _ = writeln!(s, "kkp equality: not applicable (non-integral spectrum)");
        }
    }
    if let Some(b) = r.h_vector_match {
        let _ = writeln!(s, "h-vector match: {b}");
    }
    if let Some(c) = &r.coefficient_constancy {
        let _ = writeln!(
            s,
            "coefficient constancy: {} trials, seed {}, dims {}",
            c.trials,
            c.seed,
            if c.all_match { "constant" } else { "VARY" }
        );
    }
    let _ = writeln!(s, "operator convention: {}", r.operator_convention);
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    if let Some(op) = operator {
        let _ = writeln!(s, "operator blocks:");
        for b in &op.blocks {
            let _ = writeln!(s, "  from degree {}:", b.source_degree);
            for row in &b.rows {
                let _ = writeln!(s, "    [{}]", row.join(", "));
            }
        }
        let _ = writeln!(s, "operator total matrix:");
        for row in &op.total_matrix {
            let _ = writeln!(s, "  [{}]", row.join(", "));
        }
    }
    s
}

// ---------------------------------------------------------------- batch

#[derive(Serialize)]
struct BatchEntryOut {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<KKPReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorOut>,
}

#[derive(Serialize)]
struct ErrorOut {
    kind: String,
    message: String,
}

fn cmd_batch(cli: &Cli, dir: &Path) -> Result<ExitCode> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Malformed(format!("cannot read directory {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();

    // Entries run in parallel; the collected vector keeps input order, so
    // the report stream is deterministic.
    let results: Vec<(String, Result<KKPReport>)> = files
        .par_iter()
        .map(|path| {
            let name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            (name, full_report(cli, path))
        })
        .collect();

    let mut worst = 0u8;
    for (_, r) in &results {
        match r {
            Ok(_) => {}
            Err(e) if e.is_inconsistency() => worst = worst.max(2),
            Err(_) => worst = worst.max(3),
        }
    }

    match cli.format {
        Format::Json => {
            let entries: Vec<BatchEntryOut> = results
                .into_iter()
                .map(|(file, r)| match r {
                    Ok(report) => BatchEntryOut {
                        file,
                        report: Some(report),
                        error: None,
                    },
                    Err(e) => BatchEntryOut {
                        file,
                        report: None,
                        error: Some(ErrorOut {
                            kind: e.kind().to_string(),
                            message: e.to_string(),
                        }),
                    },
                })
                .collect();
            print_json(&entries);
        }
        Format::Text => print!("{}", render_batch_table(&results, cli.trials.is_some())),
    }
    Ok(ExitCode::from(worst))
}

fn render_batch_table(results: &[(String, Result<KKPReport>)], with_constancy: bool) -> String {
    struct Row<'a> {
        name: &'a str,
        body: std::result::Result<[String; 4], String>,
    }
    let rows: Vec<Row> = results
        .iter()
        .map(|(name, r)| Row {
            name,
            body: match r {
                Ok(rep) => {
                    let kkp = match rep.kkp_equality {
                        Some(b) => b.to_string(),
                        None => "-".to_string(),
                    };
                    let constancy = match &rep.coefficient_constancy {
                        Some(c) if c.all_match => "constant".to_string(),
                        Some(_) => "VARY".to_string(),
                        None => "-".to_string(),
                    };
                    Ok([
                        rep.mu.to_string(),
                        fmt_spectrum(&rep.spectrum),
                        rep.hodge_tate.via_lefschetz.to_string(),
                        if with_constancy {
                            format!("{kkp}  {constancy}")
                        } else {
                            kkp
                        },
                    ])
                }
                Err(e) => Err(format!("error[{}]: {e}", e.kind())),
            },
        })
        .collect();

    let headers = ["polytope", "mu", "spectrum", "HL", "KKP"];
    let mut widths = [
        headers[0].len(),
        headers[1].len(),
        headers[2].len(),
        headers[3].len(),
    ];
    for row in &rows {
        widths[0] = widths[0].max(row.name.len());
        if let Ok(body) = &row.body {
            for (w, cell) in widths[1..].iter_mut().zip(body.iter()) {
                *w = (*w).max(cell.len());
            }
        }
    }

    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}",
        headers[0],
        headers[1],
        headers[2],
        headers[3],
        headers[4],
        w0 = widths[0],
        w1 = widths[1],
        w2 = widths[2],
        w3 = widths[3],
    );
    for row in &rows {
        match &row.body {
            Ok([mu, spec, hl, kkp]) => {
                let _ = writeln!(
                    s,
                    "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}",
                    row.name,
                    mu,
                    spec,
                    hl,
                    kkp,
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2],
                    w3 = widths[3],
                );
            }
            Err(msg) => {
                let _ = writeln!(s, "{:<w0$}  {msg}", row.name, w0 = widths[0]);
            }
        }
    }
    s
}

// ------------------------------------------------------------ rendering

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialize report")
    );
}

fn fmt_exponent(m: &[i64]) -> String {
    format!(
        "[{}]",
        m.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
    )
}

fn fmt_spectrum(pairs: &[SpectrumEntry]) -> String {
    format!(
        "{{{}}}",
        pairs
            .iter()
            .map(|e| format!("({}, {})", format_rational(&e.degree), e.multiplicity))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn fmt_hodge_numbers(entries: &[HodgeEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("h^({},{}) = {}", e.p, e.q, e.value))
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_alpha_hodge_numbers(entries: &[AlphaHodgeEntry]) -> String {
    entries
        .iter()
        .map(|e| {
            format!(
                "h^({},{})_{} = {}",
                e.p,
                e.q,
                format_rational(&e.alpha),
                e.value
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_int_map(m: &BTreeMap<i64, usize>) -> String {
    format!(
        "{{{}}}",
        m.iter()
            .map(|(k, v)| format!("{k} -> {v}"))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn fmt_lefschetz_line(v: &LefschetzVerdict) -> String {
    format!(
        "alpha {}, k {}: [f]^{} from degree {} to degree {} ({} -> {}): {}",
        format_rational(&v.alpha),
        v.k,
        v.power,
        format_rational(&v.source_degree),
        format_rational(&v.target_degree),
        v.source_dim,
        v.target_dim,
        if v.iso { "iso" } else { "NOT iso" }
    )
}

fn matrix_rows(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect())
        .collect()
}
