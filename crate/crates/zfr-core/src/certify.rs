//! Root certificates: machine-checkable records asserting that `Z_{S_H}` has
//! a real root in an interval `[λ₀, 0]`.
//!
//! The engine is the root-interval lemma: if `H` has an odd number of
//! vertices `n >= 3` and `e(S) >= α·|S|` holds for every vertex subset `S`
//! with `α >= 3 ln n`, then `Z_{S_H}` has a real root in
//! `[-3 ln(n)/α, 0]`. Every transcendental comparison is made against
//! directed-rounding enclosures from [`crate::rigor`], always rounding
//! adversarially: `ln n` up when checking `α >= 3 ln n`, `λ₀` down toward
//! `-∞`, final bounds up. The certified interval therefore contains the
//! lemma's interval, and a third party can re-verify every inequality from
//! the emitted record alone.
//!
//! [`certify_counterexample`] chains the lemma with the modular-lines
//! construction. Its analytic mode never materializes an edge list: it uses
//! only proven facts about the family (`n = (k-1)p` or `(k-1)p - 1`,
//! minimum degree `Δ` or `Δ-1`, `α = δ/(k-1)`), which is the only route
//! that works when `H` would have ~10^12 edges. Explicit mode builds the
//! hypergraph and measures degrees; the two modes agree wherever both run.
//!
//! The hypothesis `Δ > 100k²` is surfaced as a named check rather than an
//! input guard: small-Δ desk instances deliberately run below it and may
//! still certify when `α >= 3 ln n` happens to hold.
//!
//! `log` means the natural logarithm throughout; the lemma proof's
//! `1 + λ₀ <= e^{λ₀}` step forces that reading.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::construct::{counterexample_base, find_prime_in, is_prime, ConstructError};
use crate::hypergraph::Hypergraph;
use crate::polynomial::SizeGuardError;
use crate::rigor::{ln_u64_bounds, round_down, round_up, Bounds};
use crate::roots::{gmpst_radius_bounds, shearer_radius_bounds};

/// Working precision (bits) for directed-rounding comparisons.
pub const DEFAULT_PRECISION_BITS: u32 = 128;
/// Refinement ceiling for undecidable transcendental comparisons; never hit
/// in practice because the compared quantities are irrational.
const MAX_PRECISION_BITS: u32 = 4096;
/// Default edge cap for the explicit pipeline.
pub const DEFAULT_EXPLICIT_EDGE_CAP: u64 = 10_000_000;

fn rat_u64(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// How a certificate's quantities were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Hypergraph materialized, degrees measured (or, for a bare interval
    /// certificate, the caller asserted α for a concrete instance).
    Explicit,
    /// Only proven facts about the construction are used; nothing is built.
    Analytic,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Explicit => "explicit",
            Mode::Analytic => "analytic",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "==",
        }
    }

    fn holds(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

/// One re-verifiable comparison: asserts `lhs <relation> rhs` over exact
/// rationals; `pass` records whether it holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub lhs: BigRational,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Check {
    fn compare(name: &'static str, lhs: BigRational, relation: Relation, rhs: BigRational) -> Self {
        let pass = relation.holds(&lhs, &rhs);
        Check { name, pass, lhs, relation, rhs }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.name,
            self.lhs,
            self.relation.as_str(),
            self.rhs,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Where the certified `α` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaSource {
    /// `α = δ/u` from a degree scan (sound for every subset).
    DegreeBound,
    /// Caller-supplied; the caller owns the claim `e(S) >= α|S|`.
    Provided,
}

impl AlphaSource {
    pub fn as_str(self) -> &'static str {
        match self {
            AlphaSource::DegreeBound => "degree-bound",
            AlphaSource::Provided => "provided",
        }
    }
}

/// Evidence backing the lemma hypotheses.
#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisEvidence {
    pub uniformity: Option<u32>,
    pub min_degree: Option<u32>,
    pub alpha_source: AlphaSource,
    /// Rigorous enclosure of `ln n` used for the `α >= 3 ln n` comparison.
    pub ln_n: Bounds,
}

/// Evidence for the theorem-level chain
/// `3 ln(n)/α <= 3(k-1)·ln(2Δk)/(Δ-1) <= 6k·ln(Δ)/Δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremEvidence {
    pub k: u32,
    pub delta: u32,
    pub p: u32,
    pub ln_delta: Bounds,
    pub ln_2dk: Bounds,
    /// Enclosure of the middle chain term `3(k-1)·ln(2Δk)/(Δ-1)`.
    pub chain_middle: Bounds,
    /// The theorem's own hypothesis; informational, never gating.
    pub delta_gt_100k_squared: bool,
}

/// A certificate that `Z_{S_H}` has a real root in `[λ₀, 0]` for any
/// hypergraph `H` with `n` vertices satisfying `e(S) >= α|S|` for all `S`,
/// with `n` odd.
#[derive(Debug, Clone, PartialEq)]
pub struct RootCertificate {
    pub mode: Mode,
    /// Vertex count of `H` (odd, >= 3).
    pub n: u64,
    pub alpha: BigRational,
    /// Exact rational `<= -3 ln(n)/α`, inside `[-1, 0]`.
    pub lambda0: BigRational,
    /// The certified interval `[λ₀, 0]`.
    pub interval: (BigRational, BigRational),
    /// Upper bound `>= 6k ln(Δ)/Δ` when issued by the theorem pipeline.
    pub theorem_bound: Option<BigRational>,
    pub evidence: HypothesisEvidence,
    pub theorem: Option<TheoremEvidence>,
    pub checks: Vec<Check>,
}

impl RootCertificate {
    /// `|λ₀|`, an upper bound on the magnitude of the certified root.
    pub fn lambda0_magnitude(&self) -> BigRational {
        -self.lambda0.clone()
    }
}

/// A failed lemma hypothesis, named.
#[derive(Debug, Clone, PartialEq)]
pub enum HypothesisFailure {
    /// The lemma needs `n >= 3` (odd with at least two vertices).
    NTooSmall { n: u64 },
    EvenN { n: u64 },
    AlphaTooSmall { n: u64, alpha: BigRational, three_ln_n_lo: BigRational },
    Lambda0OutOfRange { lambda0: BigRational },
}

impl HypothesisFailure {
    pub fn name(&self) -> &'static str {
        match self {
            HypothesisFailure::NTooSmall { .. } => "n-too-small",
            HypothesisFailure::EvenN { .. } => "even-n",
            HypothesisFailure::AlphaTooSmall { .. } => "alpha-too-small",
            HypothesisFailure::Lambda0OutOfRange { .. } => "lambda0-out-of-range",
        }
    }
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisFailure::NTooSmall { n } => write!(f, "n must be >= 3, got {n}"),
            HypothesisFailure::EvenN { n } => write!(f, "n must be odd, got {n}"),
            HypothesisFailure::AlphaTooSmall { n, alpha, three_ln_n_lo } => write!(
                f,
                "alpha = {alpha} < 3 ln {n} (rigorous lower bound {three_ln_n_lo})"
            ),
            HypothesisFailure::Lambda0OutOfRange { lambda0 } => {
                write!(f, "lambda0 = {lambda0} outside [-1, 0]")
            }
        }
    }
}

/// Parameter/usage errors for the pipeline, distinct from hypothesis
/// failures (which are a valid mathematical outcome).
#[derive(Debug, Clone, PartialEq)]
pub enum CertifyError {
    /// The theorem pipeline needs `k >= 3`.
    UniformityTooSmall { k: u32 },
    /// The base construction needs `Δ >= k-1`.
    DegreeTooSmall { k: u32, delta: u32 },
    /// Explicit mode refused: the instance exceeds the configured edge cap.
    ExplicitTooLarge { edges: u64, cap: u64 },
    /// `alpha_from_degrees` needs a uniform hypergraph.
    NonUniform,
    /// The hypergraph has no vertices.
    NoVertices,
    /// `compare_bounds` needs `C > 0`.
    NonPositiveConstant,
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::UniformityTooSmall { k } => {
                write!(f, "theorem pipeline requires k >= 3, got {k}")
            }
            CertifyError::DegreeTooSmall { k, delta } => {
                write!(f, "pipeline requires delta >= k-1 = {}, got {delta}", k - 1)
            }
            CertifyError::ExplicitTooLarge { edges, cap } => write!(
                f,
                "explicit mode would materialize {edges} edges, over the cap {cap}; use analytic mode"
            ),
            CertifyError::NonUniform => {
                write!(f, "alpha_from_degrees requires a uniform hypergraph")
            }
            CertifyError::NoVertices => write!(f, "hypergraph has no vertices"),
            CertifyError::NonPositiveConstant => write!(f, "conjecture constant C must be > 0"),
        }
    }
}

/// Structured hypothesis-failure report from the pipeline: every check that
/// was evaluated, plus the names of the gating ones that failed.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineReport {
    pub mode: Mode,
    pub k: u32,
    pub delta: u32,
    pub p: u32,
    pub n: u64,
    pub alpha: BigRational,
    pub checks: Vec<Check>,
    pub failed: Vec<&'static str>,
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no certificate for k={}, delta={} ({} mode): failed hypotheses: {}",
            self.k,
            self.delta,
            self.mode,
            self.failed.join(", ")
        )
    }
}

/// Pipeline outcome when no certificate is issued.
#[derive(Debug, Clone, PartialEq)]
pub enum CertifyFailure {
    /// Bad parameters or resource preconditions; not a mathematical outcome.
    Usage(CertifyError),
    /// The lemma/theorem hypotheses genuinely fail for this instance.
    Hypothesis(Box<PipelineReport>),
}

impl fmt::Display for CertifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyFailure::Usage(e) => e.fmt(f),
            CertifyFailure::Hypothesis(r) => r.fmt(f),
        }
    }
}

impl From<ConstructError> for CertifyFailure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::UniformityTooSmall { k }
            | ConstructError::CounterexampleUniformityTooSmall { k } => {
                CertifyFailure::Usage(CertifyError::UniformityTooSmall { k })
            }
            ConstructError::DegreeTooSmall { k, delta } => {
                CertifyFailure::Usage(CertifyError::DegreeTooSmall { k: k + 1, delta })
            }
        }
    }
}

/// Tunables for the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    pub precision_bits: u32,
    pub explicit_edge_cap: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            precision_bits: DEFAULT_PRECISION_BITS,
            explicit_edge_cap: DEFAULT_EXPLICIT_EDGE_CAP,
        }
    }
}

/// Sound uniform lower bound on `e(S)/|S|` from degrees: `δ/u` for a
/// u-uniform hypergraph with minimum degree `δ`. Each covered edge is
/// counted at most `u` times in `Σ_{v∈S} deg(v)`, so `e(S) >= (δ/u)|S|`
/// for every `S`. Edge-free hypergraphs get `α = 0` (downstream hypothesis
/// checks then fail, as they should).
pub fn alpha_from_degrees(h: &Hypergraph) -> Result<BigRational, CertifyError> {
    let prof = h.degree_profile().map_err(|_| CertifyError::NoVertices)?;
    if h.edge_count() == 0 {
        return Ok(BigRational::zero());
    }
    let u = h.uniformity().ok_or(CertifyError::NonUniform)?;
    Ok(BigRational::new(BigInt::from(prof.min), BigInt::from(u)))
}

/// Default enumeration guard for [`exhaustive_alpha`].
pub const MAX_EXHAUSTIVE_ALPHA_N: u32 = 24;

/// The true `min_S e(S)/|S|` over all nonempty vertex subsets, by exhaustive
/// Gray-code enumeration — exponential, for desk-scale soundness checks
/// only. `None` for the edgeless-and-vertexless degenerate case `n = 0`.
pub fn exhaustive_alpha(h: &Hypergraph) -> Result<Option<BigRational>, SizeGuardError> {
    exhaustive_alpha_with_limit(h, MAX_EXHAUSTIVE_ALPHA_N)
}

/// As [`exhaustive_alpha`] with an explicit enumeration guard.
pub fn exhaustive_alpha_with_limit(
    h: &Hypergraph,
    limit: u32,
) -> Result<Option<BigRational>, SizeGuardError> {
    let n = h.n();
    if n > limit.min(crate::polynomial::MASK_BITS) {
        return Err(SizeGuardError {
            op: "exhaustive_alpha",
            n,
            limit: limit.min(crate::polynomial::MASK_BITS),
        });
    }
    if n == 0 {
        return Ok(None);
    }
    let mut scan = crate::polynomial::GrayScan::new(h);
    let mut best: Option<(u64, u64)> = None; // (e(S), |S|) minimizing e/s
    for i in 1u64..1 << n {
        scan.toggle(i.trailing_zeros());
        let e = scan.covered() as u64;
        let s = u64::from(scan.size());
        let better = match best {
            None => true,
            // e/s < be/bs  <=>  e*bs < be*s
            Some((be, bs)) => e * bs < be * s,
        };
        if better {
            best = Some((e, s));
        }
    }
    Ok(best.map(|(e, s)| BigRational::new(BigInt::from(e), BigInt::from(s))))
}

/// Internal result of evaluating the lemma hypotheses at a given precision.
struct IntervalAnalysis {
    checks: Vec<Check>,
    ln_n: Bounds,
    lambda0: Option<BigRational>,
    failure: Option<HypothesisFailure>,
}

fn analyze_interval(n: u64, alpha: &BigRational, bits: u32) -> IntervalAnalysis {
    let mut checks = Vec::new();
    let mut failure: Option<HypothesisFailure> = None;

    checks.push(Check::compare("n_ge_3", rat_u64(3), Relation::Le, rat_u64(n)));
    if n < 3 {
        failure = Some(HypothesisFailure::NTooSmall { n });
    }
    checks.push(Check::compare("n_odd", rat_u64(n % 2), Relation::Eq, rat_u64(1)));
    if failure.is_none() && n % 2 == 0 {
        failure = Some(HypothesisFailure::EvenN { n });
    }
    if n == 0 {
        return IntervalAnalysis {
            checks,
            ln_n: Bounds::point(BigRational::zero()),
            lambda0: None,
            failure,
        };
    }

    // Resolve alpha >= 3 ln n against a rigorous enclosure, refining the
    // precision if alpha lands inside it (it cannot land ON 3 ln n: that
    // value is irrational for n >= 2).
    let mut bits_now = bits;
    let (ln_n, alpha_pass) = loop {
        let ln_n = ln_u64_bounds(n, bits_now);
        let three = ln_n.mul_int(3);
        if *alpha >= three.hi {
            break (ln_n, true);
        }
        if *alpha < three.lo || bits_now >= MAX_PRECISION_BITS {
            break (ln_n, false);
        }
        bits_now *= 2;
    };
    let three = ln_n.mul_int(3);
    if alpha_pass {
        checks.push(Check::compare(
            "alpha_ge_3_ln_n",
            three.hi.clone(),
            Relation::Le,
            alpha.clone(),
        ));
    } else {
        // Record the rigorous direction of the failure: even the lower
        // enclosure endpoint exceeds alpha.
        checks.push(Check {
            name: "alpha_ge_3_ln_n",
            pass: false,
            lhs: three.lo.clone(),
            relation: Relation::Le,
            rhs: alpha.clone(),
        });
        if failure.is_none() {
            failure = Some(HypothesisFailure::AlphaTooSmall {
                n,
                alpha: alpha.clone(),
                three_ln_n_lo: three.lo.clone(),
            });
        }
    }

    if !alpha.is_positive() {
        return IntervalAnalysis { checks, ln_n, lambda0: None, failure };
    }

    // λ₀: adversarial rounding toward -∞ of -3 ln(n)/α. When the alpha
    // hypothesis holds the true value is already >= -1, so clamping to -1
    // only undoes the rounding slip and stays <= the true λ₀.
    let exact_upper = -(&three.hi / alpha);
    let mut lambda0 = round_down(&exact_upper, bits_now);
    if alpha_pass && lambda0 < -BigRational::one() {
        lambda0 = -BigRational::one();
    }
    checks.push(Check::compare(
        "lambda0_le_neg_3_ln_n_over_alpha",
        lambda0.clone(),
        Relation::Le,
        exact_upper,
    ));
    let in_range = Check::compare(
        "lambda0_magnitude_le_1",
        -lambda0.clone(),
        Relation::Le,
        BigRational::one(),
    );
    let in_range_pass = in_range.pass;
    checks.push(in_range);
    if failure.is_none() && !in_range_pass {
        failure = Some(HypothesisFailure::Lambda0OutOfRange { lambda0: lambda0.clone() });
    }

    IntervalAnalysis { checks, ln_n, lambda0: Some(lambda0), failure }
}

/// Issues a root certificate for ANY hypergraph `H` with `n` vertices
/// satisfying `e(S) >= α|S|` for all nonempty `S` — the caller owns that
/// claim (measure it exhaustively, or derive it via
/// [`alpha_from_degrees`]). Hypotheses checked here: `n >= 3`, `n` odd,
/// `α >= 3 ln n` (rigorous), and the resulting `λ₀ ∈ [-1, 0]`.
pub fn certify_root_interval(
    n: u64,
    alpha: &BigRational,
) -> Result<RootCertificate, HypothesisFailure> {
    certify_root_interval_with_precision(n, alpha, DEFAULT_PRECISION_BITS)
}

/// As [`certify_root_interval`] with explicit working precision.
pub fn certify_root_interval_with_precision(
    n: u64,
    alpha: &BigRational,
    bits: u32,
) -> Result<RootCertificate, HypothesisFailure> {
    let analysis = analyze_interval(n, alpha, bits);
    if let Some(failure) = analysis.failure {
        return Err(failure);
    }
    let lambda0 = analysis.lambda0.expect("no failure implies lambda0 computed");
    Ok(RootCertificate {
        mode: Mode::Explicit,
        n,
        alpha: alpha.clone(),
        interval: (lambda0.clone(), BigRational::zero()),
        lambda0,
        theorem_bound: None,
        evidence: HypothesisEvidence {
            uniformity: None,
            min_degree: None,
            alpha_source: AlphaSource::Provided,
            ln_n: analysis.ln_n,
        },
        theorem: None,
        checks: analysis.checks,
    })
}

/// Exact rational report of the lemma proof's majorant chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub n: u64,
    pub alpha: BigRational,
    /// `T̄ = Σ_{j=1}^{n} C(n,j) α^j n^(-3j)`, exactly — by the binomial
    /// theorem this equals `(1 + α/n³)^n - 1`.
    pub t_bar: BigRational,
    /// Exact verdict `T̄ < 1`; whenever `0 < α <= n` this must hold (the
    /// proof's engine).
    pub t_bar_lt_1: bool,
    /// The proof's next majorant `Σ_{j=1}^{n} (1/j!)(α/n²)^j`: exact when
    /// `second_majorant_exact`, otherwise an exact rational upper bound
    /// (64-term partial sum plus a geometric tail).
    pub second_majorant: BigRational,
    pub second_majorant_exact: bool,
    /// Exact verdict `T̄ <= second_majorant` (termwise `C(n,j) <= n^j/j!`).
    pub t_bar_le_second_majorant: bool,
}

/// Verifies the root-interval proof's inequality chain by exact rational
/// arithmetic: the `e^{λ₀·e(S)}` step is replaced by the algebraic majorant
/// `α^j·n^(-3j)`, making every quantity rational.
///
/// # Panics
/// If `n < 2`, `n` does not fit `u32`, or `alpha <= 0`.
pub fn verify_inequality_chain(n: u64, alpha: &BigRational) -> ChainReport {
    assert!(n >= 2, "chain verification needs n >= 2");
    assert!(alpha.is_positive(), "chain verification needs alpha > 0");
    let exp = u32::try_from(n).expect("n fits u32");

    // T̄ + 1 = ((b·n³ + a) / (b·n³))^n with α = a/b reduced.
    let n3 = BigInt::from(n).pow(3);
    let x = alpha.numer() + alpha.denom() * &n3;
    let y = alpha.denom() * &n3;
    let g = num_integer::Integer::gcd(&x, &y);
    let xp = (x / &g).pow(exp);
    let yp = (y / &g).pow(exp);
    let t_bar_lt_1 = xp < BigInt::from(2) * &yp;
    // gcd(x,y) = 1 implies gcd(x^n - y^n, y^n) = 1: new_raw stays canonical.
    let t_bar = BigRational::new_raw(&xp - &yp, yp);

    let (second_majorant, second_majorant_exact) = second_majorant(n, alpha);
    let t_bar_le_second_majorant = t_bar <= second_majorant;

    ChainReport {
        n,
        alpha: alpha.clone(),
        t_bar,
        t_bar_lt_1,
        second_majorant,
        second_majorant_exact,
        t_bar_le_second_majorant,
    }
}

/// `Σ_{j=1}^{n} x^j / j!` for `x = α/n²`: summed in full when the term
/// count is small (or `x >= 1` forces it), otherwise a 64-term partial sum
/// plus the geometric tail bound `term_64 · x/(65·(1-x))`.
fn second_majorant(n: u64, alpha: &BigRational) -> (BigRational, bool) {
    let n2 = BigInt::from(n).pow(2);
    let x = alpha / BigRational::from_integer(n2);
    let full = n <= 64 || x >= BigRational::one();
    let terms = if full { n } else { 64 };

    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for j in 1..=terms {
        term = term * &x / BigRational::from_integer(BigInt::from(j));
        sum += &term;
    }
    if full {
        (sum, true)
    } else {
        let tail = term * &x
            / (BigRational::from_integer(BigInt::from(terms + 1)) * (BigRational::one() - &x));
        (sum + tail, false)
    }
}

/// Runs the full counterexample pipeline and issues (or refuses) a theorem
/// certificate. See the module docs for the analytic/explicit split.
pub fn certify_counterexample(
    k: u32,
    delta: u32,
    mode: Mode,
) -> Result<RootCertificate, CertifyFailure> {
    certify_counterexample_with(k, delta, mode, &CertifyOptions::default())
}

/// As [`certify_counterexample`] with explicit options.
pub fn certify_counterexample_with(
    k: u32,
    delta: u32,
    mode: Mode,
    opts: &CertifyOptions,
) -> Result<RootCertificate, CertifyFailure> {
    if k < 3 {
        return Err(CertifyFailure::Usage(CertifyError::UniformityTooSmall { k }));
    }
    if delta < k - 1 {
        return Err(CertifyFailure::Usage(CertifyError::DegreeTooSmall { k, delta }));
    }
    let bits = opts.precision_bits;
    let p = find_prime_in(delta);
    let u = k - 1;

    let (n, min_degree, alpha) = match mode {
        Mode::Analytic => {
            let n0 = u64::from(u) * u64::from(p);
            let trimmed = n0 % 2 == 0;
            let n = n0 - u64::from(trimmed);
            let dmin = delta - u32::from(trimmed);
            (n, dmin, BigRational::new(BigInt::from(dmin), BigInt::from(u)))
        }
        Mode::Explicit => {
            let edges = u64::from(p) * u64::from(delta);
            if edges > opts.explicit_edge_cap {
                return Err(CertifyFailure::Usage(CertifyError::ExplicitTooLarge {
                    edges,
                    cap: opts.explicit_edge_cap,
                }));
            }
            let (h, meta) = counterexample_base(k, delta)?;
            let prof = h
                .degree_profile()
                .map_err(|_| CertifyFailure::Usage(CertifyError::NoVertices))?;
            debug_assert_eq!(prof.max, delta);
            debug_assert_eq!(h.uniformity(), Some(u));
            let alpha = BigRational::new(BigInt::from(prof.min), BigInt::from(u));
            (meta.n_h, prof.min, alpha)
        }
    };

    let analysis = analyze_interval(n, &alpha, bits);
    let mut checks = analysis.checks;

    // Theorem-level quantities, evaluated for certificates and failure
    // reports alike.
    let ln_delta = ln_u64_bounds(u64::from(delta), bits);
    let ln_2dk = ln_u64_bounds(2 * u64::from(delta) * u64::from(k), bits);
    let middle_factor =
        BigRational::new(BigInt::from(3 * u64::from(u)), BigInt::from(u64::from(delta) - 1));
    let chain_middle = ln_2dk.scale(&middle_factor);
    let final_factor = BigRational::new(BigInt::from(6 * u64::from(k)), BigInt::from(delta));
    let final_bounds = ln_delta.scale(&final_factor);
    let theorem_bound = round_up(&final_bounds.hi, bits);

    checks.push(Check::compare(
        "p_prime_in_bertrand_range",
        rat_u64(u64::from(p)),
        Relation::Le,
        rat_u64(2 * u64::from(delta)),
    ));
    debug_assert!(is_prime(u64::from(p)) && p >= delta);
    checks.push(Check::compare(
        "n_le_2_delta_k",
        rat_u64(n),
        Relation::Le,
        rat_u64(2 * u64::from(delta) * u64::from(k)),
    ));

    if let Some(lambda0) = &analysis.lambda0 {
        checks.push(Check::compare(
            "abs_lambda0_le_chain_middle",
            -lambda0.clone(),
            Relation::Le,
            chain_middle.lo.clone(),
        ));
        checks.push(Check::compare(
            "abs_lambda0_le_theorem_bound",
            -lambda0.clone(),
            Relation::Le,
            theorem_bound.clone(),
        ));
    }
    checks.push(Check::compare(
        "chain_middle_le_theorem_final",
        chain_middle.hi.clone(),
        Relation::Le,
        final_bounds.lo.clone(),
    ));
    let delta_gt = u64::from(delta) > 100 * u64::from(k) * u64::from(k);
    checks.push(Check::compare(
        "delta_gt_100k_squared",
        rat_u64(100 * u64::from(k) * u64::from(k)),
        Relation::Lt,
        rat_u64(u64::from(delta)),
    ));

    // Gate on everything except the informational delta-scale check.
    let failed: Vec<&'static str> = checks
        .iter()
        .filter(|c| !c.pass && c.name != "delta_gt_100k_squared")
        .map(|c| c.name)
        .collect();
    if !failed.is_empty() || analysis.failure.is_some() {
        return Err(CertifyFailure::Hypothesis(Box::new(PipelineReport {
            mode,
            k,
            delta,
            p,
            n,
            alpha,
            checks,
            failed,
        })));
    }

    let lambda0 = analysis.lambda0.expect("no failure implies lambda0");
    Ok(RootCertificate {
        mode,
        n,
        alpha,
        interval: (lambda0.clone(), BigRational::zero()),
        lambda0,
        theorem_bound: Some(theorem_bound),
        evidence: HypothesisEvidence {
            uniformity: Some(u),
            min_degree: Some(min_degree),
            alpha_source: AlphaSource::DegreeBound,
            ln_n: analysis.ln_n,
        },
        theorem: Some(TheoremEvidence {
            k,
            delta,
            p,
            ln_delta,
            ln_2dk,
            chain_middle,
            delta_gt_100k_squared: delta_gt,
        }),
        checks,
    })
}

/// One row of the conjecture-falsification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub k: u32,
    pub delta: u32,
    pub p: u32,
    pub n: u64,
    pub alpha: BigRational,
    /// Certified root-magnitude upper bound carried by the theorem
    /// certificate (`>= 6k ln(Δ)/Δ`, rigorously rounded up).
    pub certified_bound: BigRational,
    /// The same `6k ln(Δ)/Δ` quantity as recomputed by the certificate
    /// formula; `certified_bound <= theorem_bound` always.
    pub theorem_bound: BigRational,
    /// Rigorous lower bound on `C·Δ^(-1/(k-1))`.
    pub conjectured_radius: BigRational,
    /// Rigorous lower bound on `Δ^Δ/(Δ+1)^(Δ+1)`.
    pub gmpst_radius: BigRational,
    /// Rigorous lower bound on `(Δ-1)^(Δ-1)/Δ^Δ` (the graph bound, reported
    /// for reference).
    pub shearer_radius: BigRational,
    /// True iff `certified_bound < conjectured_radius` — both sides
    /// rigorously rounded toward each other, so `true` proves the
    /// conjectured disk contains a root.
    pub falsified: bool,
}

/// Compares the certified root bound against the conjectured zero-free
/// radius `C·Δ^(-1/(k-1))` and the known GMPST/Shearer radii. Certificate
/// failures propagate.
pub fn compare_bounds(k: u32, delta: u32, c: &BigRational) -> Result<SweepRow, CertifyFailure> {
    if !c.is_positive() {
        return Err(CertifyFailure::Usage(CertifyError::NonPositiveConstant));
    }
    if k < 3 {
        return Err(CertifyFailure::Usage(CertifyError::UniformityTooSmall { k }));
    }
    let bits = DEFAULT_PRECISION_BITS;
    let cert = certify_counterexample(k, delta, Mode::Analytic)?;
    let theorem = cert.theorem.as_ref().expect("pipeline certificate");
    let certified_bound = cert.theorem_bound.clone().expect("pipeline certificate");

    let inv_delta = BigRational::new(BigInt::one(), BigInt::from(delta));
    let conj = crate::rigor::root_bounds(&inv_delta, k - 1, bits).scale(c);
    let gmpst = gmpst_radius_bounds(delta, bits);
    let shearer = shearer_radius_bounds(delta, bits);
    let falsified = certified_bound < conj.lo;

    Ok(SweepRow {
        k,
        delta,
        p: theorem.p,
        n: cert.n,
        alpha: cert.alpha.clone(),
        theorem_bound: certified_bound.clone(),
        certified_bound,
        conjectured_radius: conj.lo,
        gmpst_radius: gmpst.lo,
        shearer_radius: shearer.lo,
        falsified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::h_construction;
    use crate::rigor::rational_from_decimal;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn dec(s: &str) -> BigRational {
        rational_from_decimal(s).unwrap()
    }

    #[test]
    fn alpha_from_degrees_examples() {
        // Delta-regular u-uniform: alpha = Delta/u.
        let (h, _) = h_construction(3, 5).unwrap();
        assert_eq!(alpha_from_degrees(&h).unwrap(), rat(5, 3));

        // Trimmed H_{2,1000}: min degree 999, uniformity 2.
        let (h, _) = counterexample_base(3, 1000).unwrap();
        assert_eq!(alpha_from_degrees(&h).unwrap(), rat(999, 2));

        // Edge-free: alpha = 0 (hypotheses fail downstream).
        assert_eq!(alpha_from_degrees(&Hypergraph::edgeless(5)).unwrap(), rat(0, 1));

        let mixed = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(alpha_from_degrees(&mixed), Err(CertifyError::NonUniform));
    }

    #[test]
    fn exhaustive_alpha_agrees_with_degree_bound() {
        let tri = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        // Minimum of e(S)/|S| over the triangle is at S = V: 3/3 = 1.
        assert_eq!(exhaustive_alpha(&tri).unwrap(), Some(rat(1, 1)));
        assert!(exhaustive_alpha(&tri).unwrap().unwrap() >= alpha_from_degrees(&tri).unwrap());

        let (h, _) = h_construction(2, 4).unwrap();
        let exact = exhaustive_alpha(&h).unwrap().unwrap();
        assert!(exact >= alpha_from_degrees(&h).unwrap());

        assert_eq!(exhaustive_alpha(&Hypergraph::edgeless(3)).unwrap(), Some(rat(0, 1)));
        assert!(exhaustive_alpha(&Hypergraph::edgeless(30)).is_err());
    }

    #[test]
    fn interval_certificate_theorem_scale() {
        let cert = certify_root_interval(2017, &rat(999, 2)).unwrap();
        // True value -0.04570190112885412475909..., rounded toward -inf by
        // less than 2^-128.
        assert!(cert.lambda0 <= dec("-0.045701901128854124759090768251016819"));
        assert!(cert.lambda0 >= dec("-0.045701901128854124759090768251016820"));
        assert_eq!(cert.interval.1, BigRational::zero());
        assert!(cert.checks.iter().all(|c| c.pass));
        assert_eq!(cert.evidence.alpha_source, AlphaSource::Provided);
    }

    #[test]
    fn interval_hypothesis_failures() {
        assert_eq!(
            certify_root_interval(4, &rat(10, 1)).unwrap_err(),
            HypothesisFailure::EvenN { n: 4 }
        );
        assert!(matches!(
            certify_root_interval(1, &rat(10, 1)).unwrap_err(),
            HypothesisFailure::NTooSmall { n: 1 }
        ));
        // 3 ln 7 = 5.8377... > 1.
        let err = certify_root_interval(7, &rat(1, 1)).unwrap_err();
        match err {
            HypothesisFailure::AlphaTooSmall { n, three_ln_n_lo, .. } => {
                assert_eq!(n, 7);
                assert!(three_ln_n_lo > dec("5.83") && three_ln_n_lo < dec("5.84"));
            }
            other => panic!("expected alpha failure, got {other:?}"),
        }
        // Zero alpha (edge-free instance) fails cleanly.
        assert!(matches!(
            certify_root_interval(5, &BigRational::zero()).unwrap_err(),
            HypothesisFailure::AlphaTooSmall { .. }
        ));
    }

    #[test]
    fn chain_report_exact_values() {
        // n=3, alpha=3: hand arithmetic 1/3 + 1/27 + 1/729 = 271/729.
        let r = verify_inequality_chain(3, &rat(3, 1));
        assert_eq!(r.t_bar, rat(271, 729));
        assert!(r.t_bar_lt_1);
        assert!(r.second_majorant_exact);
        assert!(r.t_bar_le_second_majorant);

        // n=7, alpha=6: (349/343)^7 - 1, leading term 42/343 ≈ 0.1224.
        let r = verify_inequality_chain(7, &rat(6, 1));
        assert_eq!(
            r.t_bar,
            BigRational::new(
                "72089017508520942".parse().unwrap(),
                "558545864083284007".parse().unwrap()
            )
        );
        assert!(r.t_bar_lt_1);
        assert!(r.t_bar > rat(42, 343));

        // The n=3 grid edge case alpha = ceil(3 ln 3) = 4 (> n).
        let r = verify_inequality_chain(3, &rat(4, 1));
        assert_eq!(r.t_bar, rat(10108, 19683));
        assert!(r.t_bar_lt_1);
    }

    #[test]
    fn chain_vanishes_with_alpha() {
        let r = verify_inequality_chain(11, &rat(1, 1_000_000));
        assert!(r.t_bar < rat(1, 100_000));
        assert!(r.t_bar_lt_1);
    }

    #[test]
    fn chain_grid_subsample() {
        for n in (3u64..=401).step_by(2) {
            for alpha in [rat_u64(crate::rigor::ceil_of_3ln(n)), rat_u64(n)] {
                let r = verify_inequality_chain(n, &alpha);
                assert!(r.t_bar_lt_1, "T-bar >= 1 at n={n}, alpha={alpha}");
                assert!(r.t_bar_le_second_majorant, "majorant order broken at n={n}");
            }
        }
    }

    #[test]
    fn chain_rational_alpha() {
        let r = verify_inequality_chain(2017, &rat(999, 2));
        assert!(r.t_bar_lt_1);
        assert!(!r.second_majorant_exact);
        assert!(r.t_bar_le_second_majorant);
    }

    #[test]
    fn counterexample_analytic_theorem_scale() {
        let cert = certify_counterexample(3, 1000, Mode::Analytic).unwrap();
        assert_eq!(cert.n, 2017);
        assert_eq!(cert.alpha, rat(999, 2));
        assert_eq!(cert.evidence.min_degree, Some(999));
        let bound = cert.theorem_bound.clone().unwrap();
        // 18 ln(1000)/1000 = 0.12433959502167846693..., rounded up.
        assert!(bound >= dec("0.124339595021678466"));
        assert!(bound <= dec("0.124339595021678468"));
        assert!(cert.lambda0_magnitude() <= bound);
        assert!(cert.checks.iter().all(|c| c.pass));
        let th = cert.theorem.unwrap();
        assert_eq!(th.p, 1009);
        assert!(th.delta_gt_100k_squared);
    }

    #[test]
    fn counterexample_modes_agree() {
        for (k, delta) in [(3u32, 26u32), (3, 40), (4, 50), (3, 1000)] {
            let a = certify_counterexample(k, delta, Mode::Analytic);
            let e = certify_counterexample(k, delta, Mode::Explicit);
            match (a, e) {
                (Ok(a), Ok(e)) => {
                    assert_eq!(a.n, e.n);
                    assert_eq!(a.alpha, e.alpha);
                    assert_eq!(a.lambda0, e.lambda0);
                    assert_eq!(a.theorem_bound, e.theorem_bound);
                    assert_eq!(a.evidence.min_degree, e.evidence.min_degree);
                }
                (a, e) => panic!("modes diverged for ({k},{delta}): {a:?} vs {e:?}"),
            }
        }
    }

    #[test]
    fn small_delta_desk_instance_still_certifies() {
        // delta=26 < 100k² = 900, but alpha = 25/2 >= 3 ln 57 = 12.129...
        let cert = certify_counterexample(3, 26, Mode::Analytic).unwrap();
        assert_eq!(cert.n, 57);
        assert_eq!(cert.alpha, rat(25, 2));
        let th = cert.theorem.unwrap();
        assert!(!th.delta_gt_100k_squared);
        let dcheck = cert.checks.iter().find(|c| c.name == "delta_gt_100k_squared").unwrap();
        assert!(!dcheck.pass);
    }

    #[test]
    fn counterexample_hypothesis_failure_small_delta() {
        // k=3, delta=10: p=11, n=21, alpha=9/2 < 3 ln 21 = 9.13...
        let err = certify_counterexample(3, 10, Mode::Analytic).unwrap_err();
        match err {
            CertifyFailure::Hypothesis(report) => {
                assert_eq!(report.n, 21);
                assert_eq!(report.p, 11);
                assert_eq!(report.alpha, rat(9, 2));
                assert!(report.failed.contains(&"alpha_ge_3_ln_n"));
                let dcheck =
                    report.checks.iter().find(|c| c.name == "delta_gt_100k_squared").unwrap();
                assert!(!dcheck.pass);
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }
    }

    #[test]
    fn counterexample_usage_errors() {
        assert!(matches!(
            certify_counterexample(2, 100, Mode::Analytic),
            Err(CertifyFailure::Usage(CertifyError::UniformityTooSmall { k: 2 }))
        ));
        assert!(matches!(
            certify_counterexample(4, 2, Mode::Analytic),
            Err(CertifyFailure::Usage(CertifyError::DegreeTooSmall { .. }))
        ));
        // Explicit mode refuses to materialize ~10^12 edges.
        assert!(matches!(
            certify_counterexample(3, 1_000_000, Mode::Explicit),
            Err(CertifyFailure::Usage(CertifyError::ExplicitTooLarge { .. }))
        ));
    }

    #[test]
    fn counterexample_analytic_million() {
        let cert = certify_counterexample(3, 1_000_000, Mode::Analytic).unwrap();
        assert_eq!(cert.n, 2_000_005);
        assert_eq!(cert.theorem.as_ref().unwrap().p, 1_000_003);
        // |lambda0| = 6 ln(2000005)/999999 = 8.7052048...e-5.
        let mag = cert.lambda0_magnitude();
        assert!(mag >= dec("0.0000870520") && mag <= dec("0.0000870521"));
        let bound = cert.theorem_bound.unwrap();
        assert!(bound >= dec("0.000248679190043356") && bound <= dec("0.000248679190043357"));
    }

    #[test]
    fn compare_bounds_examples() {
        let one = BigRational::one();
        // Delta = 10^4: theorem bound 0.016578... > conjectured 0.01.
        let row = compare_bounds(3, 10_000, &one).unwrap();
        assert!(!row.falsified);
        assert!(row.certified_bound > row.conjectured_radius);
        assert!((row.conjectured_radius.clone() - rat(1, 100)).abs() < rat(1, 1 << 30));

        // Delta = 10^6: theorem bound 2.4868e-4 < conjectured 1e-3.
        let row = compare_bounds(3, 1_000_000, &one).unwrap();
        assert!(row.falsified);
        assert!(row.certified_bound < row.conjectured_radius);
        assert!(row.certified_bound <= row.theorem_bound);

        // GMPST radius sanity at delta=2 (exact value 4/27).
        let gm = gmpst_radius_bounds(2, 128);
        assert!(gm.lo <= rat(4, 27) && rat(4, 27) <= gm.hi);

        assert!(matches!(
            compare_bounds(3, 100, &BigRational::zero()),
            Err(CertifyFailure::Usage(CertifyError::NonPositiveConstant))
        ));
        // Hypothesis failures propagate.
        assert!(matches!(compare_bounds(3, 10, &one), Err(CertifyFailure::Hypothesis(_))));
    }
}
