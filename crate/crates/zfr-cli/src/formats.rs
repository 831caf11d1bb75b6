//! Wire formats: the JSON hypergraph interchange, certificate and
//! failure-report JSON, the sweep CSV, and rational-string parsing.
//!
//! The hypergraph format is `{"n": <int>, "edges": [[<int>,...],...]}`,
//! UTF-8, with edges canonically sorted lexicographically on output. Every
//! CLI command speaks this format. Rationals go over the wire as `NUM/DEN`
//! strings (bare integers for whole values) so nothing is lost to rounding.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use zfr_core::certify::{Check, PipelineReport, RootCertificate, SweepRow};
use zfr_core::construct::CounterexampleMeta;
use zfr_core::hypergraph::{Hypergraph, HypergraphError};
use zfr_core::rigor::{rational_from_decimal, Bounds};
use zfr_core::roots::{ComplexRoots, RootBracket};

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: u32,
    edges: Vec<Vec<u32>>,
}

/// Parse errors, each with its own distinct message.
#[derive(Debug)]
pub enum ParseError {
    MalformedJson(serde_json::Error),
    Invalid(HypergraphError),
    BadRational(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MalformedJson(e) => write!(f, "malformed JSON: {e}"),
            ParseError::Invalid(e) => write!(f, "invalid hypergraph: {e}"),
            ParseError::BadRational(s) => {
                write!(f, "cannot parse rational {s:?}: expected NUM, NUM/DEN, or a decimal")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses the JSON wire format into a validated hypergraph.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let raw: HypergraphJson = serde_json::from_str(text).map_err(ParseError::MalformedJson)?;
    Hypergraph::new(raw.n, raw.edges).map_err(ParseError::Invalid)
}

/// Canonical serialization: edges sorted lexicographically, compact JSON.
/// `serialize(parse(x))` is the canonical form of `x`.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut edges = h.edges().to_vec();
    edges.sort_unstable();
    serde_json::to_string(&HypergraphJson { n: h.n(), edges }).expect("plain data serializes")
}

/// Accepts `NUM`, `NUM/DEN`, or a plain decimal like `-0.25`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    if let Ok(r) = s.parse::<BigRational>() {
        return Ok(r);
    }
    rational_from_decimal(s).ok_or_else(|| ParseError::BadRational(s.to_string()))
}

pub fn rat_str(x: &BigRational) -> String {
    x.to_string()
}

fn bounds_json(b: &Bounds) -> Value {
    json!([rat_str(&b.lo), rat_str(&b.hi)])
}

fn check_json(c: &Check) -> Value {
    json!({
        "name": c.name,
        "pass": c.pass,
        "lhs": rat_str(&c.lhs),
        "relation": c.relation.as_str(),
        "rhs": rat_str(&c.rhs),
    })
}

/// Certificate record: every inequality is re-verifiable from this JSON
/// alone (the `ln` enclosures carried in `evidence` are the only
/// transcendental inputs, and a checker can re-derive them).
pub fn certificate_json(cert: &RootCertificate) -> Value {
    let theorem = cert.theorem.as_ref().map(|t| {
        json!({
            "k": t.k,
            "delta": t.delta,
            "p": t.p,
            "ln_delta": bounds_json(&t.ln_delta),
            "ln_2_delta_k": bounds_json(&t.ln_2dk),
            "chain_middle": bounds_json(&t.chain_middle),
            "delta_gt_100k_squared": t.delta_gt_100k_squared,
        })
    });
    json!({
        "mode": cert.mode.as_str(),
        "n": cert.n,
        "alpha": rat_str(&cert.alpha),
        "lambda0": rat_str(&cert.lambda0),
        "interval": [rat_str(&cert.interval.0), rat_str(&cert.interval.1)],
        "theorem_bound": cert.theorem_bound.as_ref().map(|b| rat_str(b)),
        "evidence": {
            "uniformity": cert.evidence.uniformity,
            "min_degree": cert.evidence.min_degree,
            "alpha_source": cert.evidence.alpha_source.as_str(),
            "ln_n": bounds_json(&cert.evidence.ln_n),
            "theorem": theorem,
        },
        "checks": cert.checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

/// Hypothesis-failure record (a valid mathematical outcome, exit code 2).
pub fn pipeline_report_json(report: &PipelineReport) -> Value {
    json!({
        "error": "hypothesis-failure",
        "mode": report.mode.as_str(),
        "k": report.k,
        "delta": report.delta,
        "p": report.p,
        "n": report.n,
        "alpha": rat_str(&report.alpha),
        "failed": report.failed,
        "checks": report.checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

pub fn counterexample_meta_json(meta: &CounterexampleMeta) -> Value {
    json!({
        "k": meta.k,
        "delta": meta.delta,
        "p": meta.p,
        "n_h": meta.n_h,
        "removed_vertex": meta.removed_vertex,
        "n_sg": meta.n_sg,
    })
}

pub fn poly_json(coeffs: &[String]) -> Value {
    json!({ "coeffs": coeffs })
}

pub fn bracket_json(b: &RootBracket) -> Value {
    match b {
        RootBracket::Exact { root } => json!({ "exact_root": rat_str(root) }),
        RootBracket::Bracket { lo, hi, sign_lo, sign_hi } => json!({
            "lo": rat_str(lo),
            "hi": rat_str(hi),
            "sign_lo": sign_lo,
            "sign_hi": sign_hi,
        }),
    }
}

pub fn roots_json(brackets: &[RootBracket], complex: Option<&ComplexRoots>) -> Value {
    let mut out = json!({
        "brackets": brackets.iter().map(bracket_json).collect::<Vec<_>>(),
    });
    if let Some(c) = complex {
        out["complex"] = c
            .roots
            .iter()
            .zip(&c.residuals)
            .map(|(z, res)| json!({ "re": z.re, "im": z.im, "residual": res }))
            .collect::<Vec<_>>()
            .into();
        out["converged"] = c.converged.into();
    }
    out
}

/// CSV columns in `SweepRow` field order; rationals as `NUM/DEN` strings.
pub const SWEEP_CSV_HEADER: &str =
    "k,delta,p,n,alpha,certified_bound,theorem_bound,conjectured_radius,gmpst_radius,shearer_radius,falsified";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.k,
            r.delta,
            r.p,
            r.n,
            rat_str(&r.alpha),
            rat_str(&r.certified_bound),
            rat_str(&r.theorem_bound),
            rat_str(&r.conjectured_radius),
            rat_str(&r.gmpst_radius),
            rat_str(&r.shearer_radius),
            r.falsified,
        ));
    }
    out
}

/// Pretty one-line JSON with a trailing newline, the CLI's output shape.
pub fn to_stdout_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("valid JSON value");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn hypergraph_round_trip_is_canonical() {
        let text = r#"{"n":3,"edges":[[1,2],[0,2],[0,1]]}"#;
        let h = parse_hypergraph(text).unwrap();
        let canon = serialize_hypergraph(&h);
        assert_eq!(canon, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
        // Canonical form is a fixed point.
        assert_eq!(serialize_hypergraph(&parse_hypergraph(&canon).unwrap()), canon);
    }

    #[test]
    fn parse_error_taxonomy() {
        assert!(matches!(parse_hypergraph("{"), Err(ParseError::MalformedJson(_))));
        let err = parse_hypergraph(r#"{"n":2,"edges":[[0,2]]}"#).unwrap_err();
        assert!(err.to_string().contains("vertex id out of range"), "{err}");
        let err = parse_hypergraph(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate edge"), "{err}");
        let err = parse_hypergraph(r#"{"n":3,"edges":[[]]}"#).unwrap_err();
        assert!(err.to_string().contains("empty edge"), "{err}");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("999/2").unwrap().to_string(), "999/2");
        assert_eq!(parse_rational("-3").unwrap().to_string(), "-3");
        assert_eq!(parse_rational("-0.25").unwrap().to_string(), "-1/4");
        assert!(parse_rational("one half").is_err());
        assert!(BigRational::one() == parse_rational("1").unwrap());
    }

    #[test]
    fn sweep_csv_shape() {
        assert!(sweep_csv(&[]).ends_with('\n'));
        assert_eq!(sweep_csv(&[]).trim_end(), SWEEP_CSV_HEADER);
    }
}
