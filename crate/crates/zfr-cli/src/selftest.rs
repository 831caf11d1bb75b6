//! Desk-scale self-checks behind `zfr selftest`: the oracle equivalences and
//! invariant suites, deterministic (fixed RNG seed) so two runs print
//! byte-identical reports.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zfr_core::certify::{certify_counterexample, verify_inequality_chain, Mode};
use zfr_core::construct::{counterexample_base, h_construction, s_transform};
use zfr_core::hypergraph::Hypergraph;
use zfr_core::polynomial::{
    eval_point_closed_form_exact, independence_poly_bruteforce, z_sg_closed_form, IntPolynomial,
};
use zfr_core::rigor::ceil_of_3ln;
use zfr_core::roots::{
    check_zfr_conformance, complex_roots, gmpst_radius_exact, isolate_real_root, RootBracket,
    RootObservation,
};

const SELFTEST_SEED: u64 = 0x5EED_0002_F00D;

pub struct SelftestReport {
    pub lines: Vec<String>,
    pub passed: bool,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random hypergraph with `1..=max_n` vertices and up to `max_edges`
/// distinct nonempty edges of size at most 4.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, max_n: u32, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let target = rng.gen_range(0..=max_edges);
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for _ in 0..4 * target {
        if edges.len() >= target {
            break;
        }
        let size = rng.gen_range(1..=4.min(n));
        let mut edge: BTreeSet<u32> = BTreeSet::new();
        while edge.len() < size as usize {
            edge.insert(rng.gen_range(0..n));
        }
        edges.insert(edge.into_iter().collect());
    }
    Hypergraph::new(n, edges.into_iter().collect()).expect("generated edges are valid")
}

/// Comparison point for the oracle-equivalence check, parameterized over the
/// closed-form route so tests can prove a corrupted closed form is caught.
pub fn oracle_equivalence_with<F>(closed_form: F) -> Result<(), String>
where
    F: Fn(&Hypergraph) -> IntPolynomial,
{
    let mut rng = ChaCha8Rng::seed_from_u64(SELFTEST_SEED);
    for case in 0..60 {
        let g = random_hypergraph(&mut rng, 7, 9);
        let closed = closed_form(&g);
        let brute = independence_poly_bruteforce(&s_transform(&g))
            .map_err(|e| format!("guard refused case {case}: {e}"))?;
        if closed != brute {
            return Err(format!(
                "oracle mismatch on case {case} (n={}, m={}): {:?} vs {:?}",
                g.n(),
                g.edge_count(),
                closed,
                brute
            ));
        }
    }
    Ok(())
}

fn figure_1_regression() -> Result<(), String> {
    let tri = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
    let closed = z_sg_closed_form(&tri).unwrap();
    let brute = independence_poly_bruteforce(&s_transform(&tri)).unwrap();
    let pinned = IntPolynomial::from_i64(&[1, 6, 15, 17, 6]);
    if closed != pinned || brute != pinned {
        return Err(format!("Z_S(triangle) drifted: closed {closed:?}, brute {brute:?}"));
    }
    let bracket = isolate_real_root(&closed, &rat(-1, 1), &rat(0, 1), &rat(1, 1 << 20))
        .ok_or("no root bracket in [-1,0]")?;
    if bracket != (RootBracket::Exact { root: rat(-1, 2) }) {
        return Err(format!("expected the exact root -1/2, got {bracket:?}"));
    }
    if rat(1, 2) < gmpst_radius_exact(2) {
        return Err("root magnitude 1/2 under the zero-free radius 4/27".to_string());
    }
    Ok(())
}

fn construction_invariants() -> Result<(), String> {
    for k in 3u32..=5 {
        for delta in (k - 1)..=12 {
            let (h, p) = h_construction(k - 1, delta).map_err(|e| e.to_string())?;
            let prof = h.degree_profile().map_err(|e| e.to_string())?;
            if h.uniformity() != Some(k - 1)
                || prof.max != delta
                || prof.min != delta
                || !h.is_linear()
                || h.n() != (k - 1) * p
            {
                return Err(format!("H_{{{},{delta}}} invariants broken", k - 1));
            }
            let (base, meta) = counterexample_base(k, delta).map_err(|e| e.to_string())?;
            let sg = s_transform(&base);
            let prof = base.degree_profile().map_err(|e| e.to_string())?;
            if meta.n_h % 2 != 1
                || sg.uniformity() != Some(k)
                || !sg.is_linear()
                || sg.degree_profile().map_err(|e| e.to_string())?.max != delta
                || prof.min + 1 < delta
            {
                return Err(format!("S_H invariants broken for k={k}, delta={delta}"));
            }
        }
    }
    Ok(())
}

fn inequality_chain_grid() -> Result<(), String> {
    for n in (3u64..=201).step_by(2) {
        for alpha in [
            BigRational::from_integer(BigInt::from(ceil_of_3ln(n))),
            BigRational::from_integer(BigInt::from(n)),
        ] {
            let r = verify_inequality_chain(n, &alpha);
            if !r.t_bar_lt_1 {
                return Err(format!("T-bar >= 1 at n={n}, alpha={alpha}"));
            }
        }
    }
    Ok(())
}

fn certificate_mode_agreement() -> Result<(), String> {
    let analytic = certify_counterexample(3, 1000, Mode::Analytic).map_err(|e| e.to_string())?;
    let explicit = certify_counterexample(3, 1000, Mode::Explicit).map_err(|e| e.to_string())?;
    if analytic.n != 2017 || analytic.alpha != rat(999, 2) {
        return Err(format!("unexpected analytic shape: n={}, alpha={}", analytic.n, analytic.alpha));
    }
    if analytic.n != explicit.n
        || analytic.alpha != explicit.alpha
        || analytic.lambda0 != explicit.lambda0
        || analytic.theorem_bound != explicit.theorem_bound
    {
        return Err("analytic and explicit certificates disagree".to_string());
    }
    // |lambda0| = 0.0457019011..., theorem bound 0.1243395950...
    let mag = analytic.lambda0_magnitude();
    if mag > rat(45702, 1_000_000) || mag < rat(45701, 1_000_000) {
        return Err(format!("lambda0 magnitude drifted: {mag}"));
    }
    Ok(())
}

fn eval_agreement() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SELFTEST_SEED ^ 0xA5A5);
    for case in 0..20 {
        let g = random_hypergraph(&mut rng, 6, 7);
        let z = z_sg_closed_form(&g).map_err(|e| e.to_string())?;
        let num = rng.gen_range(-30i64..30);
        let den = rng.gen_range(1i64..10);
        let x = rat(num, den);
        let streamed = eval_point_closed_form_exact(&g, &x).map_err(|e| e.to_string())?;
        if streamed != z.evaluate_exact(&x) {
            return Err(format!("eval mismatch on case {case} at {x}"));
        }
        if !z.evaluate_exact(&BigRational::zero()).is_one() {
            return Err(format!("Z(0) != 1 on case {case}"));
        }
    }
    Ok(())
}

fn zfr_conformance() -> Result<(), String> {
    let tri = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
    let z = z_sg_closed_form(&tri).unwrap();
    let mut obs = Vec::new();
    if let Some(b) = isolate_real_root(&z, &rat(-1, 1), &rat(0, 1), &rat(1, 1 << 20)) {
        obs.push(RootObservation::Bracket(b));
    }
    let numeric = complex_roots(&z, 1e-13).map_err(|e| e.to_string())?;
    for (root, residual) in numeric.roots.iter().zip(&numeric.residuals) {
        if *residual < 1e-8 {
            obs.push(RootObservation::Numeric { re: root.re, im: root.im, residual: *residual });
        }
    }
    let report = check_zfr_conformance(&obs, 2, false);
    if !report.pass {
        return Err(format!("zero-free-disk violations: {:?}", report.violations));
    }
    Ok(())
}

pub fn run_selftest() -> SelftestReport {
    let checks: Vec<(&str, Box<dyn Fn() -> Result<(), String>>)> = vec![
        ("figure-1-regression", Box::new(figure_1_regression)),
        (
            "oracle-equivalence",
            Box::new(|| oracle_equivalence_with(|g| z_sg_closed_form(g).expect("desk scale"))),
        ),
        ("construction-invariants", Box::new(construction_invariants)),
        ("inequality-chain-grid", Box::new(inequality_chain_grid)),
        ("certificate-mode-agreement", Box::new(certificate_mode_agreement)),
        ("eval-agreement", Box::new(eval_agreement)),
        ("zfr-conformance", Box::new(zfr_conformance)),
    ];
    let mut lines = Vec::with_capacity(checks.len());
    let mut passed = true;
    for (name, check) in checks {
        match check() {
            Ok(()) => lines.push(format!("selftest: {name}: PASS")),
            Err(why) => {
                passed = false;
                lines.push(format!("selftest: {name}: FAIL ({why})"));
            }
        }
    }
    SelftestReport { lines, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes_and_is_deterministic() {
        let a = run_selftest();
        assert!(a.passed, "{:?}", a.lines);
        let b = run_selftest();
        assert_eq!(a.lines, b.lines);
    }

    #[test]
    fn corrupted_closed_form_is_caught() {
        // Mutation check: a closed form that lies about one coefficient must
        // produce an oracle-mismatch report.
        let corrupted = |g: &Hypergraph| {
            let z = z_sg_closed_form(g).expect("desk scale");
            let mut coeffs = z.coeffs().to_vec();
            if coeffs.is_empty() {
                coeffs.push(BigInt::from(7));
            } else {
                coeffs[0] += 1;
            }
            IntPolynomial::new(coeffs)
        };
        let err = oracle_equivalence_with(corrupted).unwrap_err();
        assert!(err.contains("oracle mismatch"), "{err}");
    }

    #[test]
    fn random_hypergraphs_are_valid_and_varied() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut saw_edges = false;
        for _ in 0..50 {
            let g = random_hypergraph(&mut rng, 7, 9);
            assert!(g.n() >= 1 && g.n() <= 7);
            saw_edges |= g.edge_count() > 0;
        }
        assert!(saw_edges);
    }
}
