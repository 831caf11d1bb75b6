//! Independence polynomials, exactly.
//!
//! `Z_G(λ) = Σ_I λ^|I|` summed over independent sets `I` of `G`. Two routes
//! are provided and kept deliberately independent of each other:
//!
//! * [`independence_poly_bruteforce`] — backtracking enumeration over
//!   vertices with early pruning on completed edges; the ground-truth oracle.
//! * [`z_sg_closed_form`] — computes `Z_{S_G}` for the edge-extension
//!   transform of `G` without building `S_G`, via
//!   `Z_{S_G}(λ) = Σ_{S ⊆ V} λ^(n-|S|) (1+λ)^(e(S))` where `e(S)` counts the
//!   edges of `G` meeting `S`. Subsets are walked in Gray-code order so each
//!   step updates per-edge hit counts in `O(degree)`.
//!
//! Both produce dense big-integer coefficient vectors. Point evaluation is
//! exact over rationals; a compensated-summation float path exists for
//! exploration and always reports itself non-rigorous.
//!
//! The `S = V` term of the closed form at `λ = 0` relies on the convention
//! `0⁰ = 1`, which matches `Z(0) = 1` and is what the power tables below
//! produce naturally.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::hypergraph::Hypergraph;

/// Default enumeration guard for the brute-force counter (2^n subsets).
pub const MAX_BRUTEFORCE_N: u32 = 30;
/// Default guard for the closed-form coefficient scan (2^n subsets of V).
pub const MAX_CLOSED_FORM_N: u32 = 26;
/// Default guard for exact closed-form point evaluation.
pub const MAX_EXACT_EVAL_N: u32 = 22;
/// Default guard for float closed-form point evaluation.
pub const MAX_FLOAT_EVAL_N: u32 = 30;

/// Hard cap for every subset-enumeration path: subsets are u64 bitmasks.
pub const MASK_BITS: u32 = 63;

/// An enumeration guard refused to run: `2^n` work would exceed the limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeGuardError {
    pub op: &'static str,
    pub n: u32,
    pub limit: u32,
}

impl fmt::Display for SizeGuardError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: n = {} exceeds the enumeration guard {} (override deliberately if you mean it)",
            self.op, self.n, self.limit
        )
    }
}

fn guard(op: &'static str, n: u32, limit: u32) -> Result<(), SizeGuardError> {
    let limit = limit.min(MASK_BITS);
    if n > limit {
        return Err(SizeGuardError { op, n, limit });
    }
    Ok(())
}

/// Dense univariate polynomial with `BigInt` coefficients, ascending order.
///
/// Canonical form: the coefficient vector is empty for the zero polynomial
/// and otherwise ends with a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial{:?}", self.coeffs)
    }
}

impl IntPolynomial {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Numerator of `P(a/b) * b^deg`, by integer Horner. With `b > 0` this
    /// carries the exact sign of `P(a/b)`.
    pub(crate) fn eval_scaled_numerator(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut iter = self.coeffs.iter().rev();
        let Some(lead) = iter.next() else {
            return BigInt::zero();
        };
        let mut acc = lead.clone();
        let mut bpow = BigInt::one();
        for c in iter {
            bpow *= b;
            acc = acc * a + c * &bpow;
        }
        acc
    }

    /// Exact value `P(x)` by Horner over a common power-of-denominator.
    pub fn evaluate_exact(&self, x: &BigRational) -> BigRational {
        if self.coeffs.is_empty() {
            return BigRational::zero();
        }
        let numer = self.eval_scaled_numerator(x.numer(), x.denom());
        let denom = x.denom().pow(self.coeffs.len() as u32 - 1);
        BigRational::new(numer, denom)
    }
}

/// Incremental subset scanner: walks subsets of `0..n-1` in binary-reflected
/// Gray-code order, maintaining per-edge hit counts, the number of covered
/// edges `e(S)`, and `|S|`, each update costing `O(degree of the toggled
/// vertex)`.
pub(crate) struct GrayScan {
    incident: Vec<Vec<u32>>,
    cnt: Vec<u32>,
    mask: u64,
    covered: usize,
    size: u32,
}

impl GrayScan {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        assert!(h.n() <= MASK_BITS, "Gray scan requires n <= {MASK_BITS}");
        let mut incident = vec![Vec::new(); h.n() as usize];
        for (j, edge) in h.edges().iter().enumerate() {
            for &v in edge {
                incident[v as usize].push(j as u32);
            }
        }
        GrayScan {
            incident,
            cnt: vec![0; h.edge_count()],
            mask: 0,
            covered: 0,
            size: 0,
        }
    }

    /// Flips membership of vertex `v`.
    pub(crate) fn toggle(&mut self, v: u32) {
        self.mask ^= 1 << v;
        let added = self.mask >> v & 1 == 1;
        if added {
            self.size += 1;
            for &e in &self.incident[v as usize] {
                self.cnt[e as usize] += 1;
                if self.cnt[e as usize] == 1 {
                    self.covered += 1;
                }
            }
        } else {
            self.size -= 1;
            for &e in &self.incident[v as usize] {
                self.cnt[e as usize] -= 1;
                if self.cnt[e as usize] == 0 {
                    self.covered -= 1;
                }
            }
        }
    }

    /// `e(S)` for the current subset.
    pub(crate) fn covered(&self) -> usize {
        self.covered
    }

    pub(crate) fn size(&self) -> u32 {
        self.size
    }

    #[cfg(test)]
    pub(crate) fn mask(&self) -> u64 {
        self.mask
    }

    #[cfg(test)]
    pub(crate) fn hit_counts(&self) -> &[u32] {
        &self.cnt
    }
}

/// Coefficient vector of `Z_H` by backtracking over vertices: coefficient of
/// `λ^m` is the number of independent sets of size `m`.
pub fn independence_poly_bruteforce(h: &Hypergraph) -> Result<IntPolynomial, SizeGuardError> {
    independence_poly_bruteforce_with_limit(h, MAX_BRUTEFORCE_N)
}

/// As [`independence_poly_bruteforce`] with an explicit enumeration guard
/// (hard-capped at [`MASK_BITS`]).
pub fn independence_poly_bruteforce_with_limit(
    h: &Hypergraph,
    limit: u32,
) -> Result<IntPolynomial, SizeGuardError> {
    guard("independence_poly_bruteforce", h.n(), limit)?;
    let n = h.n() as usize;
    let mut incident = vec![Vec::new(); n];
    let mut edge_len = Vec::with_capacity(h.edge_count());
    for (j, edge) in h.edges().iter().enumerate() {
        edge_len.push(edge.len() as u32);
        for &v in edge {
            incident[v as usize].push(j as u32);
        }
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut cnt = vec![0u32; h.edge_count()];

    fn rec(
        v: usize,
        n: usize,
        size: usize,
        incident: &[Vec<u32>],
        edge_len: &[u32],
        cnt: &mut [u32],
        coeffs: &mut [BigInt],
    ) {
        if v == n {
            coeffs[size] += 1;
            return;
        }
        // Exclude v.
        rec(v + 1, n, size, incident, edge_len, cnt, coeffs);
        // Include v unless that completes an edge.
        if incident[v]
            .iter()
            .any(|&e| cnt[e as usize] + 1 == edge_len[e as usize])
        {
            return;
        }
        for &e in &incident[v] {
            cnt[e as usize] += 1;
        }
        rec(v + 1, n, size + 1, incident, edge_len, cnt, coeffs);
        for &e in &incident[v] {
            cnt[e as usize] -= 1;
        }
    }

    rec(0, n, 0, &incident, &edge_len, &mut cnt, &mut coeffs);
    Ok(IntPolynomial::new(coeffs))
}

/// Lazily grown Pascal triangle for the `(1+λ)^j` binomial rows.
struct BinomialRows {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialRows {
    fn new() -> Self {
        BinomialRows { rows: vec![vec![BigInt::one()]] }
    }

    fn row(&mut self, j: usize) -> &[BigInt] {
        while self.rows.len() <= j {
            let prev = self.rows.last().expect("never empty");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigInt::one());
            for w in prev.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            self.rows.push(next);
        }
        &self.rows[j]
    }
}

/// Exact coefficient vector of `Z_{S_G}` from the subset-sum closed form,
/// without materializing `S_G`.
pub fn z_sg_closed_form(g: &Hypergraph) -> Result<IntPolynomial, SizeGuardError> {
    z_sg_closed_form_with_limit(g, MAX_CLOSED_FORM_N)
}

/// As [`z_sg_closed_form`] with an explicit enumeration guard.
pub fn z_sg_closed_form_with_limit(
    g: &Hypergraph,
    limit: u32,
) -> Result<IntPolynomial, SizeGuardError> {
    guard("z_sg_closed_form", g.n(), limit)?;
    let n = g.n();
    let m = g.edge_count();
    let mut coeffs = vec![BigInt::zero(); n as usize + m + 1];
    let mut rows = BinomialRows::new();
    let mut scan = GrayScan::new(g);

    // S = ∅ contributes λ^n.
    coeffs[n as usize] += 1;
    for i in 1u64..1 << n {
        scan.toggle(i.trailing_zeros());
        let offset = (n - scan.size()) as usize;
        for (t, c) in rows.row(scan.covered()).iter().enumerate() {
            coeffs[offset + t] += c;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Exact streaming evaluation of `Z_{S_G}(x)`: the closed-form sum at a
/// point, never storing coefficients. Agrees with
/// `z_sg_closed_form(g).evaluate_exact(x)` by construction of the formula,
/// and the test suite holds the two to that.
pub fn eval_point_closed_form_exact(
    g: &Hypergraph,
    x: &BigRational,
) -> Result<BigRational, SizeGuardError> {
    eval_point_closed_form_exact_with_limit(g, x, MAX_EXACT_EVAL_N)
}

/// As [`eval_point_closed_form_exact`] with an explicit enumeration guard.
pub fn eval_point_closed_form_exact_with_limit(
    g: &Hypergraph,
    x: &BigRational,
    limit: u32,
) -> Result<BigRational, SizeGuardError> {
    guard("eval_point_closed_form_exact", g.n(), limit)?;
    let n = g.n() as usize;
    let m = g.edge_count();
    let a = x.numer().clone();
    let b = x.denom().clone();
    let c = &a + &b; // numerator of 1 + x over denominator b

    // term(S) = a^(n-s) c^e b^(m+s-n-e) ... over common denominator b^(n+m):
    //   x^(n-s) (1+x)^e = a^(n-s) c^e / b^(n-s+e), multiplier b^(m+s-e).
    let apow = powers(&a, n);
    let cpow = powers(&c, m);
    let bpow = powers(&b, n + m);

    let mut scan = GrayScan::new(g);
    let mut acc = &apow[n] * &bpow[m]; // S = ∅
    for i in 1u64..1 << n {
        scan.toggle(i.trailing_zeros());
        let s = scan.size() as usize;
        let e = scan.covered();
        acc += &apow[n - s] * &cpow[e] * &bpow[m + s - e];
    }
    Ok(BigRational::new(acc, bpow[n + m].clone()))
}

fn powers(base: &BigInt, up_to: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(BigInt::one());
    for i in 1..=up_to {
        let next = &table[i - 1] * base;
        table.push(next);
    }
    table
}

/// Result of the non-rigorous float evaluation path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatEval {
    pub value: f64,
    /// Always false: float mode never feeds certificates.
    pub rigorous: bool,
}

/// Compensated-summation (Neumaier) float evaluation of `Z_{S_G}(x)`.
pub fn eval_point_closed_form_float(
    g: &Hypergraph,
    x: f64,
) -> Result<FloatEval, SizeGuardError> {
    eval_point_closed_form_float_with_limit(g, x, MAX_FLOAT_EVAL_N)
}

/// As [`eval_point_closed_form_float`] with an explicit enumeration guard.
pub fn eval_point_closed_form_float_with_limit(
    g: &Hypergraph,
    x: f64,
    limit: u32,
) -> Result<FloatEval, SizeGuardError> {
    guard("eval_point_closed_form_float", g.n(), limit)?;
    let n = g.n() as usize;
    let m = g.edge_count();
    let xpow: Vec<f64> = float_powers(x, n);
    let x1pow: Vec<f64> = float_powers(1.0 + x, m);

    let mut scan = GrayScan::new(g);
    let mut sum = xpow[n];
    let mut comp = 0.0f64;
    for i in 1u64..1 << n {
        scan.toggle(i.trailing_zeros());
        let term = xpow[n - scan.size() as usize] * x1pow[scan.covered()];
        let t = sum + term;
        if Float::abs(sum) >= Float::abs(term) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    Ok(FloatEval { value: sum + comp, rigorous: false })
}

/// `x^0 ..= x^up_to` with the 0⁰ = 1 convention baked into index 0.
fn float_powers(x: f64, up_to: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(1.0);
    for i in 1..=up_to {
        let next = table[i - 1] * x;
        table.push(next);
    }
    table
}

/// Decimal-string coefficients, ascending — the wire shape for `poly`.
pub fn coeff_strings(p: &IntPolynomial) -> Vec<alloc::string::String> {
    use alloc::string::ToString;
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Convert a rational to f64, saturating rather than panicking.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::neg_infinity()
        } else {
            f64::infinity()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::s_transform;
    use alloc::string::ToString;

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, alloc::vec![alloc::vec![0, 1], alloc::vec![0, 2], alloc::vec![1, 2]])
            .unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bruteforce_basics() {
        let single = Hypergraph::new(2, alloc::vec![alloc::vec![0, 1]]).unwrap();
        assert_eq!(independence_poly_bruteforce(&single).unwrap(), IntPolynomial::from_i64(&[1, 2]));

        let edgeless = Hypergraph::edgeless(3);
        assert_eq!(
            independence_poly_bruteforce(&edgeless).unwrap(),
            IntPolynomial::from_i64(&[1, 3, 3, 1])
        );
    }

    #[test]
    fn s_triangle_regression() {
        // Confirmed by this brute force before being pinned anywhere else.
        let z = independence_poly_bruteforce(&s_transform(&triangle())).unwrap();
        assert_eq!(z, IntPolynomial::from_i64(&[1, 6, 15, 17, 6]));
    }

    #[test]
    fn closed_form_matches_examples() {
        let z = z_sg_closed_form(&triangle()).unwrap();
        assert_eq!(z, IntPolynomial::from_i64(&[1, 6, 15, 17, 6]));

        // Edgeless G on n vertices: (1+λ)^n.
        let z = z_sg_closed_form(&Hypergraph::edgeless(4)).unwrap();
        assert_eq!(z, IntPolynomial::from_i64(&[1, 4, 6, 4, 1]));

        // Single-edge graph: λ² + 2λ(1+λ) + (1+λ) = 1 + 3λ + 3λ², matching
        // the brute force on the 3-vertex, 1-edge transform (the one 3-edge
        // forbids only the full set).
        let single = Hypergraph::new(2, alloc::vec![alloc::vec![0, 1]]).unwrap();
        let z = z_sg_closed_form(&single).unwrap();
        assert_eq!(z, IntPolynomial::from_i64(&[1, 3, 3]));
        let brute = independence_poly_bruteforce(&s_transform(&single)).unwrap();
        assert_eq!(z, brute);
    }

    #[test]
    fn evaluate_exact_examples() {
        let z = z_sg_closed_form(&triangle()).unwrap();
        assert_eq!(z.evaluate_exact(&rat(0, 1)), rat(1, 1));
        assert_eq!(z.evaluate_exact(&rat(-1, 2)), rat(0, 1));
        assert_eq!(z.evaluate_exact(&rat(1, 1)), rat(45, 1));
        assert_eq!(z.evaluate_exact(&rat(-1, 1)), rat(-1, 1));
    }

    #[test]
    fn streaming_eval_matches_coefficient_route() {
        let g = Hypergraph::new(
            5,
            alloc::vec![alloc::vec![0, 1, 2], alloc::vec![2, 3], alloc::vec![3, 4], alloc::vec![0, 4]],
        )
        .unwrap();
        let z = z_sg_closed_form(&g).unwrap();
        for (num, den) in [(0i64, 1i64), (-1, 2), (2, 3), (-7, 5), (13, 11), (-1, 1)] {
            let x = rat(num, den);
            assert_eq!(
                eval_point_closed_form_exact(&g, &x).unwrap(),
                z.evaluate_exact(&x),
                "mismatch at {num}/{den}"
            );
        }
    }

    #[test]
    fn eval_at_zero_is_one() {
        for g in [triangle(), Hypergraph::edgeless(5)] {
            assert_eq!(eval_point_closed_form_exact(&g, &rat(0, 1)).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn float_eval_tracks_exact() {
        let g = triangle();
        let x = rat(-1, 4);
        let exact = eval_point_closed_form_exact(&g, &x).unwrap();
        let float = eval_point_closed_form_float(&g, -0.25).unwrap();
        assert!(!float.rigorous);
        let exact_f = rational_to_f64(&exact);
        assert!((float.value - exact_f).abs() <= 1e-12 * exact_f.abs().max(1.0));
    }

    #[test]
    fn guards_respected() {
        let g = Hypergraph::edgeless(31);
        assert!(independence_poly_bruteforce_with_limit(&g, 30).is_err());
        assert!(z_sg_closed_form_with_limit(&g, 26).is_err());
        assert!(z_sg_closed_form_with_limit(&g, 32).is_ok());
        // The bitmask design caps every enumeration at 63 no matter the limit.
        let big = Hypergraph::edgeless(64);
        assert!(independence_poly_bruteforce_with_limit(&big, u32::MAX).is_err());
    }

    #[test]
    fn gray_scan_full_cycle_returns_to_zero() {
        let g = Hypergraph::new(
            4,
            alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2, 3], alloc::vec![0, 3]],
        )
        .unwrap();
        let mut scan = GrayScan::new(&g);
        for i in 1u64..1 << 4 {
            scan.toggle(i.trailing_zeros());
        }
        // The reflected code's last subset is the singleton {n-1}; the cyclic
        // closure toggles that bit once more.
        assert_eq!(scan.mask(), 1 << 3);
        scan.toggle(3);
        assert_eq!(scan.mask(), 0);
        assert!(scan.hit_counts().iter().all(|&c| c == 0));
        assert_eq!(scan.covered(), 0);
        assert_eq!(scan.size(), 0);
    }

    #[test]
    fn coeff_strings_shape() {
        let z = z_sg_closed_form(&triangle()).unwrap();
        let strs = coeff_strings(&z);
        assert_eq!(strs, ["1", "6", "15", "17", "6"].map(|s| s.to_string()));
    }
}
