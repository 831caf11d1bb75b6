//! Root location for computed independence polynomials.
//!
//! * [`sign_at`] and [`isolate_real_root`] — exact-arithmetic sign
//!   evaluation and interval bisection with rational midpoints. Bisection
//!   proves its bracket: the returned endpoints carry strictly opposite
//!   exact signs (or the midpoint hit a root exactly).
//! * [`complex_roots`] — a fixed-seed Aberth–Ehrlich simultaneous solver in
//!   f64 for exploration; non-rigorous by design and flagged as such through
//!   residuals.
//! * [`check_zfr_conformance`] — asserts every located root lies outside the
//!   known zero-free disk `|λ| < Δ^Δ/(Δ+1)^(Δ+1)`; a violation means an
//!   implementation bug, since that bound is a theorem.
//!
//! Bisection only reports roots that change sign; even-multiplicity roots
//! are visible to it solely through the grid scan finding no flip. That is a
//! documented limitation — the certificates only ever need a sign-change
//! root.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, Zero};

use crate::polynomial::{rational_to_f64, IntPolynomial};
use crate::rigor::{pow_bounds, Bounds};

/// Grid resolution used by [`isolate_real_root`] when the endpoint signs
/// agree: the interval is sampled at this many equal steps and the leftmost
/// sign change wins.
pub const DEFAULT_GRID_POINTS: u32 = 1024;
/// Iteration cap for the Aberth solver.
pub const ABERTH_MAX_ITERATIONS: u32 = 500;
/// Absolute slack granted to float roots in zero-free-disk checks.
pub const NUMERIC_ZFR_SLACK: f64 = 1e-6;
/// Fixed seed for the deterministic Aberth start perturbation.
const ABERTH_SEED: u64 = 0x5EED_C0DE_5EED_C0DE;
/// Radii with `Δ` at most this are computed as exact rationals.
const EXACT_RADIUS_MAX_DELTA: u32 = 256;

/// Exact sign of `P(x)`: -1, 0, or +1.
pub fn sign_at(p: &IntPolynomial, x: &BigRational) -> i8 {
    match p.eval_scaled_numerator(x.numer(), x.denom()).sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// A located real root: either an exact rational zero of `P`, or a bracket
/// whose endpoints have strictly opposite exact signs.
#[derive(Debug, Clone, PartialEq)]
pub enum RootBracket {
    Exact { root: BigRational },
    Bracket { lo: BigRational, hi: BigRational, sign_lo: i8, sign_hi: i8 },
}

impl RootBracket {
    pub fn center(&self) -> BigRational {
        match self {
            RootBracket::Exact { root } => root.clone(),
            RootBracket::Bracket { lo, hi, .. } => (lo + hi) / BigRational::from_integer(2.into()),
        }
    }

    pub fn width(&self) -> BigRational {
        match self {
            RootBracket::Exact { .. } => BigRational::zero(),
            RootBracket::Bracket { lo, hi, .. } => hi - lo,
        }
    }

    /// Exact lower bound on `|root|` over the bracket: 0 if the bracket
    /// straddles the origin, otherwise the endpoint magnitude nearer zero.
    pub fn magnitude_lower_bound(&self) -> BigRational {
        match self {
            RootBracket::Exact { root } => root.abs(),
            RootBracket::Bracket { lo, hi, .. } => {
                if !lo.is_positive() && !hi.is_negative() {
                    BigRational::zero()
                } else {
                    lo.abs().min(hi.abs())
                }
            }
        }
    }
}

/// Bisects `[lo, hi]` (endpoint signs strictly opposite) until the width is
/// at most `tol` or a midpoint evaluates to exactly zero.
fn bisect(
    p: &IntPolynomial,
    mut lo: BigRational,
    sign_lo: i8,
    mut hi: BigRational,
    sign_hi: i8,
    tol: &BigRational,
) -> RootBracket {
    debug_assert!(sign_lo * sign_hi < 0);
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        match sign_at(p, &mid) {
            0 => return RootBracket::Exact { root: mid },
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
    RootBracket::Bracket { lo, hi, sign_lo, sign_hi }
}

/// Locates a real root of `P` in `[lo, hi]` to width `tol` by exact-sign
/// bisection. If the endpoint signs agree, a uniform grid
/// ([`DEFAULT_GRID_POINTS`] steps) is scanned for the leftmost sign change
/// first; `None` means no sign change was found anywhere.
///
/// # Panics
/// If `lo >= hi` or `tol <= 0`.
pub fn isolate_real_root(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
) -> Option<RootBracket> {
    isolate_real_root_with_grid(p, lo, hi, tol, DEFAULT_GRID_POINTS)
}

/// As [`isolate_real_root`] with an explicit grid resolution.
pub fn isolate_real_root_with_grid(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
    grid_points: u32,
) -> Option<RootBracket> {
    assert!(lo < hi, "isolate_real_root requires lo < hi");
    assert!(tol.is_positive(), "isolate_real_root requires tol > 0");
    let sign_lo = sign_at(p, lo);
    if sign_lo == 0 {
        return Some(RootBracket::Exact { root: lo.clone() });
    }
    let sign_hi = sign_at(p, hi);
    if sign_hi == 0 {
        return Some(RootBracket::Exact { root: hi.clone() });
    }
    if sign_lo * sign_hi < 0 {
        return Some(bisect(p, lo.clone(), sign_lo, hi.clone(), sign_hi, tol));
    }

    // Same-sign endpoints: scan the grid for the leftmost flip.
    let step = (hi - lo) / BigRational::from_integer(BigInt::from(grid_points));
    let mut prev_x = lo.clone();
    let mut prev_sign = sign_lo;
    for i in 1..=grid_points {
        let x = if i == grid_points { hi.clone() } else { lo + &step * BigRational::from_integer(BigInt::from(i)) };
        let s = sign_at(p, &x);
        if s == 0 {
            return Some(RootBracket::Exact { root: x });
        }
        if s * prev_sign < 0 {
            return Some(bisect(p, prev_x, prev_sign, x, s, tol));
        }
        prev_x = x;
        prev_sign = s;
    }
    None
}

/// Errors from the numeric solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootsError {
    /// The polynomial must have degree at least 1.
    DegreeTooSmall,
}

impl fmt::Display for RootsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsError::DegreeTooSmall => write!(f, "complex_roots requires degree >= 1"),
        }
    }
}

/// All roots found by the Aberth–Ehrlich iteration, sorted by real part then
/// imaginary part for deterministic output.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRoots {
    pub roots: Vec<Complex64>,
    /// `|P(z)| / ‖P‖₁` per root, on max-normalized coefficients.
    pub residuals: Vec<f64>,
    /// False when the iteration cap was hit; the result is then partial.
    pub converged: bool,
    pub iterations: u32,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Converts big-integer coefficients to max-normalized f64s, shifting out
/// excess bits first so nothing overflows.
fn normalized_f64_coeffs(coeffs: &[BigInt]) -> Vec<f64> {
    let max_bits = coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = max_bits.saturating_sub(900) as usize;
    let mut out: Vec<f64> = coeffs
        .iter()
        .map(|c| {
            let shifted = c >> shift;
            num_traits::ToPrimitive::to_f64(&shifted).unwrap_or(0.0)
        })
        .collect();
    let max_abs = out.iter().fold(0.0f64, |m, &c| m.max(Float::abs(c)));
    if max_abs > 0.0 {
        for c in &mut out {
            *c /= max_abs;
        }
    }
    out
}

fn horner_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Finds all `deg(P)` complex roots by simultaneous Aberth–Ehrlich
/// iteration from a deterministically perturbed circle of radius
/// `1 + max|cᵢ|/|c_deg|` (the Cauchy bound). Convergence is declared when
/// the largest correction drops below `tol`; hitting the iteration cap
/// returns the partial result flagged through `converged = false`.
pub fn complex_roots(p: &IntPolynomial, tol: f64) -> Result<ComplexRoots, RootsError> {
    let Some(degree) = p.degree() else {
        return Err(RootsError::DegreeTooSmall);
    };
    if degree < 1 {
        return Err(RootsError::DegreeTooSmall);
    }

    // Exact roots at the origin: factor out trailing zero coefficients.
    let zero_roots = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let coeffs = normalized_f64_coeffs(&p.coeffs()[zero_roots..]);
    let d = coeffs.len() - 1;

    let mut roots: Vec<Complex64> = (0..zero_roots).map(|_| Complex64::new(0.0, 0.0)).collect();
    let mut residuals: Vec<f64> = (0..zero_roots).map(|_| 0.0).collect();

    let mut converged = true;
    let mut iterations = 0;
    if d >= 1 {
        let deriv: Vec<f64> = coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (i + 1) as f64)
            .collect();
        let lead = Float::abs(coeffs[d]);
        let cauchy = 1.0
            + coeffs[..d].iter().fold(0.0f64, |m, &c| m.max(Float::abs(c))) / lead;

        let mut seed = ABERTH_SEED;
        let mut z: Vec<Complex64> = (0..d)
            .map(|j| {
                let jitter = (splitmix64(&mut seed) >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
                let theta = core::f64::consts::TAU * (j as f64 + 0.5) / d as f64 + 0.1 * jitter;
                Complex64::new(
                    cauchy * Float::cos(theta),
                    cauchy * Float::sin(theta),
                )
            })
            .collect();

        converged = false;
        while iterations < ABERTH_MAX_ITERATIONS {
            iterations += 1;
            let mut max_corr = 0.0f64;
            let mut max_mag = 0.0f64;
            for j in 0..d {
                let pv = horner_complex(&coeffs, z[j]);
                if pv.norm() == 0.0 {
                    continue;
                }
                let dv = horner_complex(&deriv, z[j]);
                if dv.norm() == 0.0 {
                    // Sitting on a critical point: nudge and retry next sweep.
                    z[j] *= 1.0 + 1e-6;
                    max_corr = f64::max(max_corr, 1.0);
                    continue;
                }
                let w = pv / dv;
                let mut s = Complex64::new(0.0, 0.0);
                for i in 0..d {
                    if i != j {
                        let diff = z[j] - z[i];
                        if diff.norm() > 0.0 {
                            s += diff.inv();
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - w * s;
                let corr = if denom.norm() == 0.0 { w } else { w / denom };
                z[j] -= corr;
                max_corr = f64::max(max_corr, corr.norm());
                max_mag = f64::max(max_mag, z[j].norm());
            }
            if max_corr <= tol * (1.0 + max_mag) {
                converged = true;
                break;
            }
        }

        let norm1: f64 = coeffs.iter().map(|c| Float::abs(*c)).sum();
        for zj in z {
            roots.push(zj);
            residuals.push(horner_complex(&coeffs, zj).norm() / norm1);
        }
    }

    // Deterministic output order.
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| {
        roots[a]
            .re
            .total_cmp(&roots[b].re)
            .then(roots[a].im.total_cmp(&roots[b].im))
    });
    let roots = order.iter().map(|&i| roots[i]).collect();
    let residuals = order.iter().map(|&i| residuals[i]).collect();

    Ok(ComplexRoots { roots, residuals, converged, iterations })
}

/// Exact GMPST zero-free-disk radius `Δ^Δ/(Δ+1)^(Δ+1)`.
pub fn gmpst_radius_exact(delta: u32) -> BigRational {
    let d = BigInt::from(delta);
    let d1: BigInt = &d + 1;
    BigRational::new(d.pow(delta), d1.pow(delta + 1))
}

/// Exact Shearer radius `(Δ-1)^(Δ-1)/Δ^Δ` for graphs of max degree `Δ >= 1`
/// (with the `0⁰ = 1` convention at `Δ = 1`).
pub fn shearer_radius_exact(delta: u32) -> BigRational {
    assert!(delta >= 1, "Shearer radius needs delta >= 1");
    let d = BigInt::from(delta);
    let dm1: BigInt = &d - 1;
    BigRational::new(dm1.pow(delta - 1), d.pow(delta))
}

/// GMPST radius as a rigorous enclosure; exact (point) for small `Δ`,
/// otherwise computed as `(Δ/(Δ+1))^Δ / (Δ+1)` with interval powering so
/// huge `Δ` stays cheap.
pub fn gmpst_radius_bounds(delta: u32, bits: u32) -> Bounds {
    if delta <= EXACT_RADIUS_MAX_DELTA {
        return Bounds::point(gmpst_radius_exact(delta));
    }
    let base = Bounds::point(BigRational::new(BigInt::from(delta), BigInt::from(delta) + 1));
    let inv = BigRational::new(BigInt::one(), BigInt::from(delta) + 1);
    pow_bounds(&base, u64::from(delta), bits).scale(&inv)
}

/// Shearer radius as a rigorous enclosure; see [`gmpst_radius_bounds`].
pub fn shearer_radius_bounds(delta: u32, bits: u32) -> Bounds {
    if delta <= EXACT_RADIUS_MAX_DELTA {
        return Bounds::point(shearer_radius_exact(delta));
    }
    let base = Bounds::point(BigRational::new(BigInt::from(delta) - 1, BigInt::from(delta)));
    let inv = BigRational::new(BigInt::one(), BigInt::from(delta));
    pow_bounds(&base, u64::from(delta) - 1, bits).scale(&inv)
}

/// One located root, as fed to the conformance check.
#[derive(Debug, Clone, PartialEq)]
pub enum RootObservation {
    /// Exact bracket from bisection.
    Bracket(RootBracket),
    /// Numeric root with its solver residual.
    Numeric { re: f64, im: f64, residual: f64 },
}

/// A root found inside the zero-free disk (which a theorem forbids; this
/// indicates a bug in whoever computed the root).
#[derive(Debug, Clone, PartialEq)]
pub struct ZfrViolation {
    pub index: usize,
    pub magnitude: BigRational,
    pub radius: BigRational,
}

/// Conformance report: every observed root magnitude against the zero-free
/// disk for max degree `Δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZfrReport {
    pub delta: u32,
    pub gmpst_radius: BigRational,
    /// Reported for 2-uniform (graph) inputs only.
    pub shearer_radius: Option<BigRational>,
    pub violations: Vec<ZfrViolation>,
    pub pass: bool,
}

/// Checks every observation against the GMPST disk radius for max degree
/// `Δ`: exact comparison for brackets, [`NUMERIC_ZFR_SLACK`] granted to
/// float roots. An empty list passes vacuously.
pub fn check_zfr_conformance(
    observations: &[RootObservation],
    delta: u32,
    is_graph: bool,
) -> ZfrReport {
    // Compared against the *upper* enclosure endpoint, so a pass is sound.
    let radius = gmpst_radius_bounds(delta, 128).hi;
    let radius_f = rational_to_f64(&radius);
    let mut violations = Vec::new();
    for (index, obs) in observations.iter().enumerate() {
        match obs {
            RootObservation::Bracket(b) => {
                let mag = b.magnitude_lower_bound();
                if mag < radius {
                    violations.push(ZfrViolation {
                        index,
                        magnitude: mag,
                        radius: radius.clone(),
                    });
                }
            }
            RootObservation::Numeric { re, im, .. } => {
                let mag = Float::sqrt(re * re + im * im);
                if mag < radius_f - NUMERIC_ZFR_SLACK {
                    let mag_rat = BigRational::new(
                        BigInt::from((mag * 1e15) as i64),
                        BigInt::from(1_000_000_000_000_000u64),
                    );
                    violations.push(ZfrViolation {
                        index,
                        magnitude: mag_rat,
                        radius: radius.clone(),
                    });
                }
            }
        }
    }
    ZfrReport {
        delta,
        gmpst_radius: radius,
        shearer_radius: (is_graph && delta >= 1).then(|| shearer_radius_exact(delta)),
        violations: violations.clone(),
        pass: violations.is_empty(),
    }
}
