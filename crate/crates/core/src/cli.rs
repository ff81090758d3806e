//! Command-line front end. Every run produces a report of named verdicts;
//! the exit status is 0 when all of them pass, 1 when one fails and 2 on a
//! configuration error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chains::{random_complex, second_differential, Bicomplex};
use crate::diffhopf::{build_differential_hopf, check_differential_carrier, generator_comodule, GradedCarrier};
use crate::error::{Error, Result};
use crate::grading::{laurent_hopf, sign_coelement, Bicharacter};
use crate::laws::{check_bialgebra_laws, check_coelement, Braiding, LawReport};
use crate::linalg::Verdict;
use crate::pareigis::{chain_to_comodule, comodule_to_chain, identify_semidirect, pareigis_ring, ring_by_name};
use crate::semidirect::semidirect_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckAxioms,
    BuildSemidirect,
    VerifyPareigis,
    Roundtrip,
    CarrierCheck,
    BicomplexCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, Parser, Serialize)]
#[command(name = "hopfring", version, about = "Exact checks of Hopf rings over ℤ")]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub command: Command,
    /// pareigis, pareigis-plus, laurent or differential
    #[arg(long, default_value = "pareigis")]
    pub ring: String,
    /// Graded carrier JSON for carrier-check
    #[arg(long)]
    pub carrier_file: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    pub window: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    /// Degree of the differential generator
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub kappa: i64,
    /// Record wall time per result (makes reports nondeterministic)
    #[arg(long)]
    #[serde(skip)]
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub name: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub instances: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl ResultEntry {
    pub fn passed(&self) -> bool {
        self.verdict == "Equal" || self.verdict == "Accept"
    }

    fn from_verdict(name: impl Into<String>, v: &Verdict) -> ResultEntry {
        ResultEntry {
            name: name.into(),
            verdict: if v.is_equal() { "Equal" } else { "Differ" }.into(),
            counterexample: v.counterexample().map(|c| c.to_string()),
            instances: v.instances(),
            diagnostics: Vec::new(),
            millis: None,
        }
    }

    fn decision(name: impl Into<String>, accepted: bool, instances: usize, diagnostics: Vec<String>) -> ResultEntry {
        ResultEntry {
            name: name.into(),
            verdict: if accepted { "Accept" } else { "Reject" }.into(),
            counterexample: None,
            instances,
            diagnostics,
            millis: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub results: Vec<ResultEntry>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(ResultEntry::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Text => {
                let mut out = String::new();
                for r in &self.results {
                    out += &format!("{}: {} ({} instances)", r.name, r.verdict, r.instances);
                    if let Some(c) = &r.counterexample {
                        out += &format!("\n    counterexample {c}");
                    }
                    for d in &r.diagnostics {
                        out += &format!("\n    {d}");
                    }
                    if let Some(ms) = r.millis {
                        out += &format!(" [{ms} ms]");
                    }
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn from_report(report: &LawReport) -> Vec<ResultEntry> {
    report
        .results
        .iter()
        .map(|r| ResultEntry::from_verdict(&r.law, &r.verdict))
        .collect()
}

fn sign(name: &str, v: i64) -> Result<i64> {
    if v == 1 || v == -1 {
        Ok(v)
    } else {
        Err(Error::Config(format!("--{name} must be 1 or -1, got {v}")))
    }
}

/// A law violation raised while building becomes a failing entry.
fn violation_entry(e: Error) -> Result<Vec<ResultEntry>> {
    match e {
        Error::LawViolation { law, counterexample } => Ok(vec![ResultEntry {
            name: law,
            verdict: "Differ".into(),
            counterexample: Some(counterexample.to_string()),
            instances: 0,
            diagnostics: Vec::new(),
            millis: None,
        }]),
        Error::NotAdmissible(m) => Ok(vec![ResultEntry::decision("admissible", false, 1, vec![m])]),
        other => Err(other),
    }
}

fn check_axioms(cfg: &RunConfig) -> Result<Vec<ResultEntry>> {
    let k = cfg.window;
    match cfg.ring.as_str() {
        "pareigis" | "pareigis-plus" => {
            let p = pareigis_ring(ring_by_name(&cfg.ring)?)?;
            Ok(from_report(&check_bialgebra_laws(&p, &Braiding::symmetric(), k)?))
        }
        "laurent" => {
            let z = laurent_hopf(1);
            let mut r = check_bialgebra_laws(&z, &Braiding::symmetric(), k)?;
            let c = sign_coelement(&Bicharacter::single(sign("kappa", cfg.kappa)? as i8));
            r.extend(check_coelement(&c, k)?);
            Ok(from_report(&r))
        }
        "differential" => {
            let c = sign_coelement(&Bicharacter::single(sign("kappa", cfg.kappa)? as i8));
            match build_differential_hopf(&generator_comodule(&[cfg.s]), &c) {
                Ok(hb) => Ok(from_report(&hb.validate(k)?)),
                Err(e) => violation_entry(e),
            }
        }
        other => Err(Error::Config(format!(
            "unknown ring {other:?}; expected pareigis, pareigis-plus, laurent or differential"
        ))),
    }
}

fn build_semidirect(cfg: &RunConfig) -> Result<Vec<ResultEntry>> {
    let s = sign("s", cfg.s)?;
    let c = sign_coelement(&Bicharacter::single(sign("kappa", cfg.kappa)? as i8));
    let hb = match build_differential_hopf(&generator_comodule(&[s]), &c) {
        Ok(hb) => hb,
        Err(e) => return violation_entry(e),
    };
    let p = match semidirect_product(&hb, cfg.window) {
        Ok(p) => p,
        Err(e) => return violation_entry(e),
    };
    Ok(from_report(&check_bialgebra_laws(p.ring(), &Braiding::symmetric(), cfg.window)?))
}

fn roundtrip(cfg: &RunConfig) -> Result<Vec<ResultEntry>> {
    let s = sign("s", cfg.s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut forward = None;
    let mut backward = None;
    for t in 0..cfg.trials {
        let len = 1 + (t % 7);
        let x = random_complex(&mut rng, -s, -3, len, 4, 0);
        let b = chain_to_comodule(&x, s)?;
        let y = comodule_to_chain(&b)?;
        if forward.is_none() && y != x {
            forward = Some(format!("trial {t}"));
        }
        let b2 = chain_to_comodule(&y, s)?;
        if backward.is_none() {
            if let Some(l) = x.labels().find(|l| b2.coact(l) != b.coact(l)) {
                backward = Some(format!("trial {t} at {l}"));
            }
        }
    }
    let entry = |name: &str, ce: Option<String>| ResultEntry {
        name: name.into(),
        verdict: if ce.is_none() { "Equal" } else { "Differ" }.into(),
        counterexample: ce,
        instances: cfg.trials,
        diagnostics: Vec::new(),
        millis: None,
    };
    Ok(vec![
        entry("chain-comodule-chain", forward),
        entry("comodule-chain-comodule", backward),
    ])
}

fn carrier_check(cfg: &RunConfig) -> Result<Vec<ResultEntry>> {
    let path = cfg
        .carrier_file
        .as_ref()
        .ok_or_else(|| Error::Config("carrier-check needs --carrier-file".into()))?;
    let text = fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let carrier: GradedCarrier = serde_json::from_value(value.clone())?;
    let kappas: Vec<i8> = match value.get("kappas") {
        Some(k) => serde_json::from_value(k.clone())?,
        None => vec![sign("kappa", cfg.kappa)? as i8; carrier.rank()],
    };
    let verdict = check_differential_carrier(&carrier, &Bicharacter::new(kappas)?)?;
    Ok(vec![ResultEntry::decision(
        "carrier",
        verdict.accepted,
        carrier.summands().len(),
        verdict.diagnostics,
    )])
}

fn bicomplex_check(cfg: &RunConfig) -> Result<Vec<ResultEntry>> {
    let (kappa, s) = (sign("kappa", cfg.kappa)?, sign("s", cfg.s)?);
    let shift = if kappa == 1 { s } else { 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut accept, mut reject) = (Vec::new(), Vec::new());
    for t in 0..cfg.trials {
        let x = random_complex(&mut rng, -1, -1, 3, 2, 1);
        let y = random_complex(&mut rng, -1, 0, 3, 2, 1);
        let good = Bicomplex::product(&x, &y, shift, kappa == 1)?;
        if let Err(e) = second_differential(&good, kappa, s) {
            accept.push(format!("trial {t}: {e}"));
        }
        let bad = Bicomplex::product(&x, &y, shift, kappa != 1)?;
        match second_differential(&bad, kappa, s) {
            Err(Error::SquareViolation { .. }) => {}
            Err(e) => reject.push(format!("trial {t}: {e}")),
            Ok(_) => reject.push(format!("trial {t}: wrong square law accepted")),
        }
    }
    accept.truncate(3);
    reject.truncate(3);
    Ok(vec![
        ResultEntry::decision("square-law-accept", accept.is_empty(), cfg.trials, accept),
        ResultEntry::decision("square-law-reject", reject.is_empty(), cfg.trials, reject),
    ])
}

/// Runs the configured suite. Results are sorted by name.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    if cfg.window < 1 || cfg.trials < 1 {
        return Err(Error::Config("--window and --trials must be at least 1".into()));
    }
    let start = Instant::now();
    let mut results = match cfg.command {
        Command::CheckAxioms => check_axioms(cfg)?,
        Command::BuildSemidirect => build_semidirect(cfg)?,
        Command::VerifyPareigis => from_report(&identify_semidirect(sign("s", cfg.s)?, cfg.window)?),
        Command::Roundtrip => roundtrip(cfg)?,
        Command::CarrierCheck => carrier_check(cfg)?,
        Command::BicomplexCheck => bicomplex_check(cfg)?,
    };
    if cfg.timing {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut results {
            r.millis = Some(ms);
        }
    }
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").into(),
        config: cfg.clone(),
        results,
    })
}

/// Runs and writes the report; returns the exit status.
pub fn main_with(cfg: &RunConfig) -> i32 {
    let report = match run(cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = report.render(cfg.format);
    let written = match &cfg.output {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    for r in report.results.iter().filter(|r| !r.passed()) {
        for d in &r.diagnostics {
            eprintln!("{}: {d}", r.name);
        }
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}
