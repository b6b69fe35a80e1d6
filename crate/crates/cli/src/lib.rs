//! Command-line front end for `beauville-core`.
//!
//! Exit codes: `0` success, `1` a verification claim failed, `2` usage or
//! precondition error.

pub mod args;
pub mod output;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use beauville_core::{
    beauville5_report, canonical_cover_report, cohomology_table, cone_report, exhaustive_search,
    find_witness, search, three_cones_report, verify_certificate, Certificate, CmVerdict,
    ConeReport, Error, Modulus, SurfaceConfig,
};
use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command, SurfaceArgs};
use crate::output::{csv_table, text_table, CsvRow, Outcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Failure of a subcommand before any output is produced.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_FAILED,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NoWitness { .. } | Error::NonIntegralChi { .. } => {
                CliError::Failed(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, CliError>;

/// Parse `argv` (including the program name), run one subcommand and return
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };

    let outcome = pool.install(|| dispatch(&cli.command));
    match outcome {
        Ok(outcome) => {
            if let Err(e) = outcome.emit(cli.global.format, cli.global.out.as_deref()) {
                eprintln!("error: cannot write output: {e}");
                return EXIT_FAILED;
            }
            if outcome.verified {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Failed(msg) => eprintln!("error: {msg}"),
            }
            e.exit_code()
        }
    }
}

fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::VerifyTheorem { n, m } => verify_theorem(*n, *m),
        Command::Search { n, m, exhaustive } => search_cmd(*n, *m, *exhaustive),
        Command::Cohomology {
            surface,
            m_from,
            m_to,
        } => cohomology(surface, *m_from, *m_to),
        Command::Cone {
            surface,
            d,
            t,
            max_index,
            three_cones,
        } => cone(surface, *d, *t, *max_index, *three_cones),
        Command::Beauville5 => beauville5(),
        Command::CheckCert { path } => check_cert(path),
    }
}

fn modulus(n: u32) -> Result<Modulus, CliError> {
    Ok(Modulus::new(n)?)
}

fn surface(args: &SurfaceArgs) -> Result<SurfaceConfig, CliError> {
    let n = modulus(args.n)?;
    Ok(SurfaceConfig::diagonal(n, args.lambda, args.mu)?)
}

fn free_surface(args: &SurfaceArgs) -> Result<SurfaceConfig, CliError> {
    let cfg = surface(args)?;
    if !cfg.is_free() {
        return Err(CliError::Usage(format!(
            "phi = diag({}, {}) does not act freely mod {}",
            args.lambda, args.mu, args.n
        )));
    }
    Ok(cfg)
}

#[derive(Serialize)]
struct CertRow {
    n: u32,
    m: u32,
    lambda: u32,
    mu: u32,
    h1_claimed: u64,
    strategy: String,
    valid: bool,
}

impl CsvRow for CertRow {
    const HEADER: &'static [&'static str] =
        &["n", "m", "lambda", "mu", "h1_claimed", "strategy", "valid"];
}

fn certificate_outcome(certs: Vec<Certificate>) -> Outcome {
    let checked: Vec<_> = certs
        .into_iter()
        .map(|cert| {
            let verification = verify_certificate(&cert);
            (cert, verification)
        })
        .collect();
    let verified = checked.iter().all(|(_, v)| v.valid);

    let rows: Vec<CertRow> = checked
        .iter()
        .map(|(c, v)| CertRow {
            n: c.n,
            m: c.m,
            lambda: c.lambda,
            mu: c.mu,
            h1_claimed: c.h1_claimed,
            strategy: c.strategy.to_string(),
            valid: v.valid,
        })
        .collect();

    let mut text = String::new();
    for (c, v) in &checked {
        let _ = writeln!(
            text,
            "n={} m={}: phi = diag({}, {}), psi = {:?}",
            c.n, c.m, c.lambda, c.mu, c.psi_std
        );
        let _ = writeln!(
            text,
            "  witness {} / {} with {}",
            c.witness.deg_m, c.witness.deg_mprime, c.witness.direction
        );
        let _ = writeln!(
            text,
            "  h1(mL) = {} [{}] {}",
            c.h1_claimed,
            c.strategy,
            if v.valid { "verified" } else { "REJECTED" }
        );
        for reason in &v.reasons {
            let _ = writeln!(text, "    {reason}");
        }
    }

    let json = Value::Array(
        checked
            .iter()
            .map(|(c, v)| json!({ "certificate": c, "verification": v }))
            .collect(),
    );
    Outcome {
        json,
        text,
        csv: csv_table(&rows),
        verified,
    }
}

fn verify_theorem(n: u32, m: Option<u32>) -> CmdResult {
    let n = modulus(n)?;
    n.require_theorem()?;
    let degrees: Vec<u32> = match m {
        Some(m) => vec![m],
        None => (1..=n.get() - 4).collect(),
    };
    let certs = degrees
        .into_iter()
        .map(|m| find_witness(n, m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(certificate_outcome(certs))
}

#[derive(Serialize)]
struct HitRow {
    n: u32,
    m: u32,
    lambda: u32,
    mu: u32,
    h1: u64,
    free: bool,
}

impl CsvRow for HitRow {
    const HEADER: &'static [&'static str] = &["n", "m", "lambda", "mu", "h1", "free"];
}

fn search_cmd(n: u32, m: u32, exhaustive: bool) -> CmdResult {
    let n = modulus(n)?;
    let report = if exhaustive {
        exhaustive_search(n, m)?
    } else {
        search::recipe_search(n, m)?
    };
    let rows: Vec<HitRow> = report
        .found
        .iter()
        .map(|h| HitRow {
            n: report.n,
            m: report.m,
            lambda: h.lambda,
            mu: h.mu,
            h1: h.h1,
            free: h.free,
        })
        .collect();
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.lambda.to_string(),
                r.mu.to_string(),
                r.h1.to_string(),
                r.free.to_string(),
            ]
        })
        .collect();
    let nonzero = rows.iter().filter(|r| r.h1 > 0).count();
    let mut text = format!(
        "n={} m={} strategy={}: {} pair(s), {} with h1 > 0\n",
        report.n,
        report.m,
        report.strategy,
        rows.len(),
        nonzero
    );
    text.push_str(&text_table(&["lambda", "mu", "h1", "free"], &table));
    Ok(Outcome {
        json: serde_json::to_value(&report).expect("serializable"),
        text,
        csv: csv_table(&rows),
        verified: true,
    })
}

#[derive(Serialize)]
struct CohomCsv {
    m: u32,
    h0: u64,
    h1: u64,
    h2: u64,
    chi: i64,
}

impl CsvRow for CohomCsv {
    const HEADER: &'static [&'static str] = &["m", "h0", "h1", "h2", "chi"];
}

fn cohomology(args: &SurfaceArgs, m_from: u32, m_to: u32) -> CmdResult {
    if m_from > m_to {
        return Err(CliError::Usage(format!(
            "--m-from {m_from} exceeds --m-to {m_to}"
        )));
    }
    let cfg = free_surface(args)?;
    let rows = cohomology_table(&cfg, m_from..=m_to)?;
    let verified = rows.iter().all(|r| r.satisfies_riemann_roch());
    let csv_rows: Vec<CohomCsv> = rows
        .iter()
        .map(|r| CohomCsv {
            m: r.m,
            h0: r.h0,
            h1: r.h1,
            h2: r.h2,
            chi: r.chi,
        })
        .collect();
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.m.to_string(),
                r.h0.to_string(),
                r.h1.to_string(),
                r.h2.to_string(),
                r.chi.to_string(),
            ]
        })
        .collect();
    let mut text = format!(
        "n={} phi=diag({}, {}) r={} psi={}\n",
        cfg.n(),
        args.lambda,
        args.mu,
        cfg.r(),
        cfg.hom().psi_std()
    );
    text.push_str(&text_table(&["m", "h0", "h1", "h2", "chi"], &table));
    if !verified {
        text.push_str("Riemann-Roch check FAILED\n");
    }
    Ok(Outcome {
        json: json!({
            "n": cfg.n().get(),
            "lambda": args.lambda,
            "mu": args.mu,
            "r": cfg.r(),
            "rows": rows,
        }),
        text,
        csv: csv_table(&csv_rows),
        verified,
    })
}

#[derive(Serialize)]
struct ConeCsv {
    cone: String,
    d: u32,
    i: u32,
    h0: u64,
    cohen_macaulay: bool,
    dualizing_order: u32,
}

impl CsvRow for ConeCsv {
    const HEADER: &'static [&'static str] =
        &["cone", "d", "i", "h0", "cohen_macaulay", "dualizing_order"];
}

fn cone_rows(label: &str, report: &ConeReport) -> Vec<ConeCsv> {
    report
        .hilbert
        .iter()
        .enumerate()
        .map(|(i, &h0)| ConeCsv {
            cone: label.to_owned(),
            d: report.d,
            i: i as u32,
            h0,
            cohen_macaulay: report.cm.is_cohen_macaulay(),
            dualizing_order: report.dualizing_order,
        })
        .collect()
}

fn cone_text(label: &str, report: &ConeReport) -> String {
    let verdict = match &report.cm {
        CmVerdict::CohenMacaulay => "Cohen-Macaulay".to_owned(),
        CmVerdict::NotCm { offenders } => {
            let list: Vec<String> = offenders
                .iter()
                .map(|(m, h1)| format!("h1({m}L) = {h1}"))
                .collect();
            format!("not Cohen-Macaulay ({})", list.join(", "))
        }
    };
    let mut text = format!(
        "{label}: cone over {}L, {verdict}, dualizing order {}{}\n",
        report.d,
        report.dualizing_order,
        if report.gorenstein_hint && report.cm.is_cohen_macaulay() {
            ", Gorenstein"
        } else {
            ""
        }
    );
    let table: Vec<Vec<String>> = report
        .hilbert
        .iter()
        .enumerate()
        .map(|(i, h)| {
            vec![
                i.to_string(),
                (i as u32 * report.d).to_string(),
                h.to_string(),
            ]
        })
        .collect();
    text.push_str(&text_table(&["i", "degree", "h0"], &table));
    text
}

fn cone(
    args: &SurfaceArgs,
    d: Option<u32>,
    t: Option<u32>,
    max_index: u32,
    three_cones: bool,
) -> CmdResult {
    let cfg = free_surface(args)?;
    let r = cfg.r();

    if three_cones {
        let cones = three_cones_report(&cfg, max_index)?;
        let verified = cones.z.cm.is_cohen_macaulay() && cones.x.cm.is_cohen_macaulay();
        let mut text = String::new();
        let mut rows = Vec::new();
        for (label, report) in [("Y", &cones.y), ("Z", &cones.z), ("X", &cones.x)] {
            text.push_str(&cone_text(label, report));
            text.push('\n');
            rows.extend(cone_rows(label, report));
        }
        return Ok(Outcome {
            json: serde_json::to_value(&cones).expect("serializable"),
            text,
            csv: csv_table(&rows),
            verified,
        });
    }

    if let Some(t) = t {
        let report = canonical_cover_report(&cfg, t, max_index)?;
        let verified = !report.hypotheses_hold || report.cone.cm.is_cohen_macaulay();
        let mut text = format!(
            "t={} r={}: hypotheses (t > r, gcd(r, t) = 1) {}\n",
            report.t,
            report.r,
            if report.hypotheses_hold {
                "hold"
            } else {
                "do not hold"
            }
        );
        text.push_str(&cone_text("cone", &report.cone));
        text.push_str(&cone_text("canonical cover", &report.cover));
        let _ = writeln!(
            text,
            "Q-Gorenstein: {}",
            if report.q_gorenstein { "yes" } else { "no" }
        );
        let mut rows = cone_rows("cone", &report.cone);
        rows.extend(cone_rows("cover", &report.cover));
        return Ok(Outcome {
            json: serde_json::to_value(&report).expect("serializable"),
            text,
            csv: csv_table(&rows),
            verified,
        });
    }

    let Some(d) = d else {
        return Err(CliError::Usage(
            "one of --d, --t or --three-cones is required".into(),
        ));
    };
    let report = cone_report(&cfg, d, max_index)?;
    // no multiple of d >= r falls in [1, r - 1]
    let verified = d < r || report.cm.is_cohen_macaulay();
    Ok(Outcome {
        json: serde_json::to_value(&report).expect("serializable"),
        text: cone_text("cone", &report),
        csv: csv_table(&cone_rows("cone", &report)),
        verified,
    })
}

#[derive(Serialize)]
struct Beauville5Csv {
    psi00: u32,
    psi01: u32,
    psi10: u32,
    psi11: u32,
    invertible: bool,
    q: u64,
    p_g: u64,
    h0_l: u64,
    h1_l: u64,
    h2_l: u64,
    chi_l: i64,
}

impl CsvRow for Beauville5Csv {
    const HEADER: &'static [&'static str] = &[
        "psi00",
        "psi01",
        "psi10",
        "psi11",
        "invertible",
        "q",
        "p_g",
        "h0_l",
        "h1_l",
        "h2_l",
        "chi_l",
    ];
}

fn beauville5() -> CmdResult {
    let report = beauville5_report()?;
    let rows: Vec<Beauville5Csv> = report
        .rows
        .iter()
        .map(|r| {
            let [[a, b], [c, d]] = r.psi_std;
            Beauville5Csv {
                psi00: a,
                psi01: b,
                psi10: c,
                psi11: d,
                invertible: r.invertible,
                q: r.q,
                p_g: r.p_g,
                h0_l: r.h0_l,
                h1_l: r.h1_l,
                h2_l: r.h2_l,
                chi_l: r.chi_l,
            }
        })
        .collect();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "n=5: {} matrices, {} free ({} invertible), {} regular (q = 0)",
        report.matrices_checked,
        report.free_count,
        report.invertible_free_count,
        report.q_zero_count
    );
    let _ = writeln!(
        text,
        "diagonal phi: {} of {} unit pairs free",
        report.diagonal_free_count, report.diagonal_pairs_checked
    );
    let _ = writeln!(
        text,
        "L^2 = {}, K^2 = {}, chi(O_S) = {}",
        report.numerics.l_sq, report.numerics.k_sq, report.numerics.chi_o
    );
    let table: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                format!("{:?}", r.psi_std),
                r.q.to_string(),
                r.p_g.to_string(),
                r.h0_l.to_string(),
                r.h1_l.to_string(),
                r.h2_l.to_string(),
            ]
        })
        .collect();
    text.push_str(&text_table(
        &["psi", "q", "p_g", "h0(L)", "h1(L)", "h2(L)"],
        &table,
    ));
    let _ = writeln!(
        text,
        "h0(L) = h1(L) = 0 on every regular surface: {}",
        if report.claims_hold { "yes" } else { "NO" }
    );
    Ok(Outcome {
        json: serde_json::to_value(&report).expect("serializable"),
        text,
        csv: csv_table(&rows),
        verified: report.claims_hold,
    })
}

/// Certificates anywhere inside a JSON document: a bare certificate, an
/// array, or the `verify-theorem` output wrapper.
pub fn collect_certificates(value: &Value, out: &mut Vec<Certificate>) {
    match value {
        Value::Object(map) if map.contains_key("witness") => {
            if let Ok(cert) = serde_json::from_value(value.clone()) {
                out.push(cert);
            }
        }
        Value::Object(map) => map.values().for_each(|v| collect_certificates(v, out)),
        Value::Array(items) => items.iter().for_each(|v| collect_certificates(v, out)),
        _ => {}
    }
}

fn check_cert(path: &Path) -> CmdResult {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| CliError::Usage(format!("invalid JSON in {}: {e}", path.display())))?;
    let mut certs = Vec::new();
    collect_certificates(&value, &mut certs);
    if certs.is_empty() {
        return Err(CliError::Usage(format!(
            "no certificates found in {}",
            path.display()
        )));
    }
    Ok(certificate_outcome(certs))
}
