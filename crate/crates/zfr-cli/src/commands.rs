//! Command implementations. Each returns the full output of one CLI
//! invocation; the binary just prints and exits.
//!
//! Exit codes: 0 success, 1 usage/IO error, 2 hypothesis failure (a valid
//! mathematical outcome, distinguished from program error). `ZFR_MAX_N`
//! overrides the enumeration guards of `poly`, `eval`, and `roots`.

use std::env;
use std::fs;
use std::io::Read;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use zfr_core::certify::{
    certify_counterexample, compare_bounds, CertifyFailure, Mode,
};
use zfr_core::construct::{counterexample, find_prime_in, h_construction};
use zfr_core::hypergraph::Hypergraph;
use zfr_core::polynomial::{
    coeff_strings, eval_point_closed_form_exact_with_limit,
    eval_point_closed_form_float_with_limit, independence_poly_bruteforce_with_limit,
    z_sg_closed_form_with_limit, IntPolynomial, MAX_BRUTEFORCE_N, MAX_CLOSED_FORM_N,
    MAX_EXACT_EVAL_N, MAX_FLOAT_EVAL_N,
};
use zfr_core::roots::{complex_roots, isolate_real_root, RootBracket};

use crate::formats::{
    certificate_json, counterexample_meta_json, parse_hypergraph, parse_rational,
    pipeline_report_json, poly_json, rat_str, roots_json, serialize_hypergraph, sweep_csv,
    to_stdout_json,
};
use crate::selftest::run_selftest;

/// Generation guard for commands that materialize edge lists on stdout.
const CLI_EDGE_CAP: u64 = 50_000_000;

/// Everything one invocation prints, plus its exit code.
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput { stdout, stderr: None, code: 0 }
    }
}

/// Usage/IO failures; the binary maps these to exit code 1.
pub type UsageError = String;

fn read_input(path: &str) -> Result<String, UsageError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_hypergraph(path: &str) -> Result<Hypergraph, UsageError> {
    parse_hypergraph(&read_input(path)?).map_err(|e| e.to_string())
}

/// Enumeration guard: the per-op default unless `ZFR_MAX_N` overrides it.
fn enumeration_limit(default: u32) -> u32 {
    match env::var("ZFR_MAX_N") {
        Ok(v) => v.parse().unwrap_or(default),
        Err(_) => default,
    }
}

fn check_edge_cap(p: u32, delta: u32) -> Result<(), UsageError> {
    let edges = u64::from(p) * u64::from(delta);
    if edges > CLI_EDGE_CAP {
        return Err(format!(
            "instance would materialize {edges} edges (cap {CLI_EDGE_CAP}); use `certify --mode analytic` for bounds at this scale"
        ));
    }
    Ok(())
}

pub fn cmd_gen_h(k: u32, delta: u32) -> Result<CmdOutput, UsageError> {
    if k >= 2 && delta >= k {
        check_edge_cap(find_prime_in(delta), delta)?;
    }
    let (h, p) = h_construction(k, delta).map_err(|e| e.to_string())?;
    let meta = serde_json::json!({
        "k": k, "delta": delta, "p": p, "n": h.n(), "edges": h.edge_count(),
    });
    Ok(CmdOutput {
        stdout: serialize_hypergraph(&h) + "\n",
        stderr: Some(to_stdout_json(&meta)),
        code: 0,
    })
}

pub fn cmd_counterexample(k: u32, delta: u32) -> Result<CmdOutput, UsageError> {
    if k >= 3 && delta >= k - 1 {
        check_edge_cap(find_prime_in(delta), delta)?;
    }
    let (sg, meta) = counterexample(k, delta).map_err(|e| e.to_string())?;
    Ok(CmdOutput {
        stdout: serialize_hypergraph(&sg) + "\n",
        stderr: Some(to_stdout_json(&counterexample_meta_json(&meta))),
        code: 0,
    })
}

pub fn cmd_transform(input: &str) -> Result<CmdOutput, UsageError> {
    let g = load_hypergraph(input)?;
    let sg = zfr_core::construct::s_transform(&g);
    Ok(CmdOutput::ok(serialize_hypergraph(&sg) + "\n"))
}

/// Which polynomial `poly`/`eval` compute for an input `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyRoute {
    /// `Z_G` by backtracking enumeration.
    Bruteforce,
    /// `Z_{S_G}` by the subset-sum closed form (note: of the transform).
    ClosedForm,
}

pub fn cmd_poly(input: &str, route: PolyRoute) -> Result<CmdOutput, UsageError> {
    let g = load_hypergraph(input)?;
    let poly = match route {
        PolyRoute::Bruteforce => {
            independence_poly_bruteforce_with_limit(&g, enumeration_limit(MAX_BRUTEFORCE_N))
        }
        PolyRoute::ClosedForm => {
            z_sg_closed_form_with_limit(&g, enumeration_limit(MAX_CLOSED_FORM_N))
        }
    }
    .map_err(|e| e.to_string())?;
    Ok(CmdOutput::ok(to_stdout_json(&poly_json(&coeff_strings(&poly)))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    Exact,
    Float,
}

pub fn cmd_eval(
    input: &str,
    at: &str,
    closed_form: bool,
    mode: EvalMode,
) -> Result<CmdOutput, UsageError> {
    let g = load_hypergraph(input)?;
    let x = parse_rational(at).map_err(|e| e.to_string())?;
    match (closed_form, mode) {
        (true, EvalMode::Exact) => {
            let v = eval_point_closed_form_exact_with_limit(
                &g,
                &x,
                enumeration_limit(MAX_EXACT_EVAL_N),
            )
            .map_err(|e| e.to_string())?;
            Ok(CmdOutput::ok(rat_str(&v) + "\n"))
        }
        (true, EvalMode::Float) => {
            let xf = x.to_f64().ok_or_else(|| "point does not fit f64".to_string())?;
            let v = eval_point_closed_form_float_with_limit(
                &g,
                xf,
                enumeration_limit(MAX_FLOAT_EVAL_N),
            )
            .map_err(|e| e.to_string())?;
            let out = serde_json::json!({ "value": v.value, "rigorous": v.rigorous });
            Ok(CmdOutput::ok(to_stdout_json(&out)))
        }
        (false, EvalMode::Exact) => {
            let poly = independence_poly_bruteforce_with_limit(
                &g,
                enumeration_limit(MAX_BRUTEFORCE_N),
            )
            .map_err(|e| e.to_string())?;
            Ok(CmdOutput::ok(rat_str(&poly.evaluate_exact(&x)) + "\n"))
        }
        (false, EvalMode::Float) => {
            Err("--mode float requires --closed-form (the float path is the streaming evaluator)"
                .to_string())
        }
    }
}

pub fn cmd_roots(
    input: &str,
    real_interval: Option<(&str, &str)>,
    complex: bool,
    tol: Option<&str>,
) -> Result<CmdOutput, UsageError> {
    let g = load_hypergraph(input)?;
    let poly: IntPolynomial =
        independence_poly_bruteforce_with_limit(&g, enumeration_limit(MAX_BRUTEFORCE_N))
            .map_err(|e| e.to_string())?;

    let tol = match tol {
        Some(t) => parse_rational(t).map_err(|e| e.to_string())?,
        None => BigRational::new(1.into(), 1_000_000_000.into()),
    };
    if !tol.is_positive() {
        return Err("--tol must be > 0".to_string());
    }
    // Default window is [-1, 0]: certified intervals always live inside it.
    let (lo, hi) = match real_interval {
        Some((lo, hi)) => (
            parse_rational(lo).map_err(|e| e.to_string())?,
            parse_rational(hi).map_err(|e| e.to_string())?,
        ),
        None => (-BigRational::new(1.into(), 1.into()), BigRational::new(0.into(), 1.into())),
    };
    if lo >= hi {
        return Err("--real-interval needs LO < HI".to_string());
    }

    let brackets: Vec<RootBracket> =
        isolate_real_root(&poly, &lo, &hi, &tol).into_iter().collect();
    let numeric = if complex {
        Some(complex_roots(&poly, 1e-12).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(CmdOutput::ok(to_stdout_json(&roots_json(&brackets, numeric.as_ref()))))
}

pub fn cmd_certify(k: u32, delta: u32, mode: Mode) -> Result<CmdOutput, UsageError> {
    match certify_counterexample(k, delta, mode) {
        Ok(cert) => Ok(CmdOutput::ok(to_stdout_json(&certificate_json(&cert)))),
        Err(CertifyFailure::Usage(e)) => Err(e.to_string()),
        Err(CertifyFailure::Hypothesis(report)) => Ok(CmdOutput {
            stdout: to_stdout_json(&pipeline_report_json(&report)),
            stderr: None,
            code: 2,
        }),
    }
}

pub fn cmd_sweep(k: u32, deltas: &[u32], c: &str) -> Result<CmdOutput, UsageError> {
    let c = parse_rational(c).map_err(|e| e.to_string())?;
    if !c.is_positive() {
        return Err("--C must be > 0".to_string());
    }
    let mut rows = Vec::with_capacity(deltas.len());
    for &delta in deltas {
        match compare_bounds(k, delta, &c) {
            Ok(row) => rows.push(row),
            Err(CertifyFailure::Usage(e)) => return Err(e.to_string()),
            Err(CertifyFailure::Hypothesis(report)) => {
                return Ok(CmdOutput {
                    stdout: to_stdout_json(&pipeline_report_json(&report)),
                    stderr: None,
                    code: 2,
                })
            }
        }
    }
    Ok(CmdOutput::ok(sweep_csv(&rows)))
}

pub fn cmd_selftest() -> Result<CmdOutput, UsageError> {
    let report = run_selftest();
    let mut out = report.lines.join("\n");
    out.push('\n');
    out.push_str(if report.passed { "selftest: all checks passed\n" } else { "selftest: FAILURES\n" });
    Ok(CmdOutput { stdout: out, stderr: None, code: if report.passed { 0 } else { 1 } })
}
