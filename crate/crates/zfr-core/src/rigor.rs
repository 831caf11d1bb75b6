//! Directed-rounding rational enclosures for the handful of transcendental
//! quantities certificates compare against: natural logs, r-th roots, and
//! large powers of rationals.
//!
//! Every function returns (or consumes) a [`Bounds`] with the contract
//! `lo <= true value <= hi`, both exact rationals. Rounding is always
//! adversarial: callers pick the endpoint that makes their inequality harder
//! to satisfy, so a comparison that passes against the enclosure is a proof.
//!
//! Logs come from the atanh series `ln y = 2·atanh((y-1)/(y+1))` after
//! scaling the argument into `[1, 2)` by a power of two; the series tail is
//! bounded geometrically and added to the upper endpoint only. Roots come
//! from integer `nth_root` on a `2^bits`-scaled numerator. Powers keep
//! interval endpoints re-rounded to dyadics after every multiplication so
//! sizes stay flat for exponents in the millions.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A two-sided rational enclosure: `lo <= value <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Bounds {
    pub fn point(x: BigRational) -> Self {
        Bounds { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Scales by a positive rational.
    pub fn scale(&self, q: &BigRational) -> Bounds {
        debug_assert!(q.is_positive());
        Bounds { lo: &self.lo * q, hi: &self.hi * q }
    }

    /// Negation swaps the endpoints.
    pub fn neg(&self) -> Bounds {
        Bounds { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    /// Interval sum.
    pub fn add(&self, other: &Bounds) -> Bounds {
        Bounds { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    /// Multiplies by an integer of either sign.
    pub fn mul_int(&self, k: i64) -> Bounds {
        let q = BigRational::from_integer(BigInt::from(k));
        if k >= 0 {
            Bounds { lo: &self.lo * &q, hi: &self.hi * &q }
        } else {
            Bounds { lo: &self.hi * &q, hi: &self.lo * &q }
        }
    }

    /// Outward dyadic rounding at `bits`, compressing the representation.
    pub fn round_out(&self, bits: u32) -> Bounds {
        Bounds { lo: round_down(&self.lo, bits), hi: round_up(&self.hi, bits) }
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

/// Largest dyadic `m/2^bits <= x`.
pub fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.floor().to_integer(), pow2(bits))
}

/// Smallest dyadic `m/2^bits >= x`.
pub fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Compares `x` against `2^e` without constructing huge rationals.
fn cmp_pow2(x: &BigRational, e: i64) -> Ordering {
    if e >= 0 {
        x.numer().cmp(&(x.denom() << e as usize))
    } else {
        (x.numer() << (-e) as usize).cmp(x.denom())
    }
}

/// `ln 2` enclosure from `2·atanh(1/3)`.
fn ln2_bounds(bits: u32) -> Bounds {
    atanh_bounds(&BigRational::new(BigInt::one(), BigInt::from(3)), bits).mul_int(2)
}

/// Enclosure of `atanh(t)` for `0 <= t <= 1/3`, by the odd power series with
/// a geometric tail bound folded into the upper endpoint.
fn atanh_bounds(t: &BigRational, bits: u32) -> Bounds {
    debug_assert!(!t.is_negative());
    if t.is_zero() {
        return Bounds::point(BigRational::zero());
    }
    let t2 = t * t;
    let eps = BigRational::new(BigInt::one(), pow2(bits + 3));
    let one_minus_t2 = BigRational::one() - &t2;

    let mut sum = BigRational::zero();
    let mut tp = t.clone(); // t^(2j+1)
    let mut j = 0u32;
    loop {
        let odd = BigInt::from(2 * j + 1);
        sum += &tp / BigRational::from_integer(odd.clone());
        // Tail from exponent 2j+3 on: tp*t² / ((2j+3)(1-t²)).
        tp *= &t2;
        let tail = &tp / (BigRational::from_integer(BigInt::from(2 * j + 3)) * &one_minus_t2);
        if tail <= eps {
            return Bounds { lo: sum.clone(), hi: sum + tail };
        }
        j += 1;
    }
}

/// Rigorous enclosure of `ln x` for rational `x > 0`, outward-rounded to
/// dyadics with denominator `2^bits`.
///
/// # Panics
/// If `x <= 0`.
pub fn ln_bounds(x: &BigRational, bits: u32) -> Bounds {
    assert!(x.is_positive(), "ln_bounds requires x > 0");
    let work = bits + 8;

    // Scale into y = x / 2^e with 1 <= y < 2.
    let mut e = x.numer().bits() as i64 - x.denom().bits() as i64;
    while cmp_pow2(x, e) == Ordering::Less {
        e -= 1;
    }
    while cmp_pow2(x, e + 1) != Ordering::Less {
        e += 1;
    }
    let y = if e >= 0 {
        BigRational::new(x.numer().clone(), x.denom() << e as usize)
    } else {
        BigRational::new(x.numer() << (-e) as usize, x.denom().clone())
    };

    let ln_y = if y.is_one() {
        Bounds::point(BigRational::zero())
    } else {
        let t = (&y - BigRational::one()) / (&y + BigRational::one());
        atanh_bounds(&t, work).mul_int(2)
    };

    let combined = if e == 0 {
        ln_y
    } else {
        let extra = 64 - (e.unsigned_abs().leading_zeros().min(63));
        ln2_bounds(work + extra).mul_int(e).add(&ln_y)
    };
    combined.round_out(bits)
}

/// `ln n` for an integer argument.
pub fn ln_u64_bounds(n: u64, bits: u32) -> Bounds {
    ln_bounds(&BigRational::from_integer(BigInt::from(n)), bits)
}

/// Smallest integer `>= 3 ln n`; refines precision until the enclosure
/// settles on a single ceiling (which it always does: `3 ln n` is irrational
/// for integer `n >= 2`).
pub fn ceil_of_3ln(n: u64) -> u64 {
    if n <= 1 {
        return 0;
    }
    let mut bits = 64;
    loop {
        let b = ln_u64_bounds(n, bits).mul_int(3);
        let lo = b.lo.ceil().to_integer();
        let hi = b.hi.ceil().to_integer();
        if lo == hi {
            return lo.to_u64().expect("3 ln n fits u64 for u64 n");
        }
        bits *= 2;
    }
}

/// Rigorous enclosure of `x^(1/r)` for rational `x >= 0` and `r >= 1`,
/// tight to `2^-bits`.
///
/// # Panics
/// If `x < 0` or `r == 0`.
pub fn root_bounds(x: &BigRational, r: u32, bits: u32) -> Bounds {
    assert!(r >= 1, "root order must be >= 1");
    assert!(!x.is_negative(), "root_bounds requires x >= 0");
    if x.is_zero() {
        return Bounds::point(BigRational::zero());
    }
    // floor(x * 2^(r*bits)), then an integer r-th root.
    let scaled: BigInt = (x.numer() << (r as usize * bits as usize)) / x.denom();
    let s = scaled.nth_root(r);
    let denom = pow2(bits);
    Bounds {
        lo: BigRational::new(s.clone(), denom.clone()),
        hi: BigRational::new(s + 1, denom),
    }
}

/// Rigorous enclosure of `base^e` for an enclosed nonnegative base, with
/// endpoints re-rounded to dyadics after every step so sizes stay flat even
/// for exponents around `10^7`.
pub fn pow_bounds(base: &Bounds, e: u64, bits: u32) -> Bounds {
    debug_assert!(!base.lo.is_negative() && base.lo <= base.hi);
    let work = bits + 64;
    let mut lo_acc = BigRational::one();
    let mut hi_acc = BigRational::one();
    let mut lo_base = base.lo.clone();
    let mut hi_base = base.hi.clone();
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            lo_acc = round_down(&(&lo_acc * &lo_base), work);
            hi_acc = round_up(&(&hi_acc * &hi_base), work);
        }
        exp >>= 1;
        if exp > 0 {
            lo_base = round_down(&(&lo_base * &lo_base), work);
            hi_base = round_up(&(&hi_base * &hi_base), work);
        }
    }
    Bounds { lo: lo_acc, hi: hi_acc }.round_out(bits)
}

/// Truncated decimal rendering of a rational, for reports; exact values stay
/// in the `NUM/DEN` wire form.
pub fn to_decimal_string(x: &BigRational, digits: usize) -> alloc::string::String {
    use alloc::string::ToString;
    use core::fmt::Write;

    let neg = x.is_negative();
    let abs = if neg { -x.clone() } else { x.clone() };
    let int_part = abs.floor().to_integer();
    let mut frac = &abs - BigRational::from_integer(int_part.clone());
    let mut out = alloc::string::String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        out.push('.');
        for _ in 0..digits {
            frac *= BigRational::from_integer(BigInt::from(10));
            let d = frac.floor().to_integer();
            write!(out, "{d}").expect("digit");
            frac -= BigRational::from_integer(d);
        }
    }
    out
}

/// Parses a plain decimal string (optionally signed, optional fraction part)
/// into an exact rational. Used by tests to pin high-precision constants.
pub fn rational_from_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let mut digits = alloc::string::String::new();
    digits.push_str(int_part);
    digits.push_str(frac_part);
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let v = BigRational::new(numer, denom);
    Some(if neg { -v } else { v })
}

/// Power table `base^0 ..= base^n` (integer bases), shared by a few callers.
pub fn int_powers(base: &BigInt, up_to: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(BigInt::one());
    for i in 1..=up_to {
        let next = &table[i - 1] * base;
        table.push(next);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn dec(s: &str) -> BigRational {
        rational_from_decimal(s).unwrap()
    }

    fn assert_encloses(b: &Bounds, pin: &str, pin_err: &str) {
        // `pin` is a truncated decimal of the true value, accurate to
        // `pin_err`; the enclosure must be within pin_err of it on both sides
        // and properly ordered.
        let pin = dec(pin);
        let err = dec(pin_err);
        assert!(b.lo <= b.hi);
        assert!((&b.lo - &pin).abs() <= err, "lo too far from pin");
        assert!((&b.hi - &pin).abs() <= err, "hi too far from pin");
    }

    #[test]
    fn ln2_pinned() {
        let b = ln2_bounds(160);
        assert_encloses(&b, "0.693147180559945309417232121458176568", "0.000000000000000000000000000000000001");
    }

    #[test]
    fn ln_bounds_pinned_values() {
        let b = ln_u64_bounds(2017, 128);
        assert_encloses(&b, "7.60936653795421177238861291379430036", "0.0000000000000000000000000001");
        assert!(b.width() <= BigRational::new(BigInt::one(), BigInt::one() << 120));

        let b = ln_u64_bounds(1_000_000, 128);
        assert_encloses(&b, "13.8155105579642741041079487281062093", "0.0000000000000000000000000001");

        let b = ln_u64_bounds(1000, 128);
        assert_encloses(&b, "6.90775527898213705205397436405309262", "0.0000000000000000000000000001");

        // Exact powers of two stay exact on the ln y = 0 branch.
        let b = ln_u64_bounds(1, 128);
        assert_eq!(b, Bounds::point(BigRational::zero()));
        let b = ln_u64_bounds(1024, 128);
        assert_encloses(&b, "6.93147180559945309417232121458176568", "0.0000000000000000000000000001");
    }

    #[test]
    fn ln_bounds_rational_argument() {
        // ln(3/2) = 0.405465108108164381978013115464349137
        let b = ln_bounds(&BigRational::new(BigInt::from(3), BigInt::from(2)), 128);
        assert_encloses(&b, "0.405465108108164381978013115464349137", "0.0000000000000000000000000001");
        // Negative log for x < 1.
        let b = ln_bounds(&BigRational::new(BigInt::from(1), BigInt::from(3)), 128);
        assert_encloses(&b, "-1.09861228866810969139524523692252570", "0.0000000000000000000000000001");
    }

    #[test]
    fn ceil_of_3ln_values() {
        assert_eq!(ceil_of_3ln(1), 0);
        assert_eq!(ceil_of_3ln(2), 3); // 3 ln 2 = 2.079...
        assert_eq!(ceil_of_3ln(3), 4); // 3.295...
        assert_eq!(ceil_of_3ln(7), 6); // 5.837...
        assert_eq!(ceil_of_3ln(2017), 23); // 22.828...
    }

    #[test]
    fn root_bounds_values() {
        let two = BigRational::from_integer(BigInt::from(2));
        let b = root_bounds(&two, 2, 128);
        assert_encloses(&b, "1.41421356237309504880168872420969808", "0.0000000000000000000000000001");

        // Perfect square: lower endpoint is exact.
        let four = BigRational::from_integer(BigInt::from(4));
        let b = root_bounds(&four, 2, 64);
        assert_eq!(b.lo, two);

        // 1/sqrt(10^5) via root of the reciprocal.
        let b = root_bounds(&BigRational::new(BigInt::one(), BigInt::from(100_000)), 2, 128);
        assert_encloses(&b, "0.00316227766016837933199889354443271853", "0.0000000000000000000000000001");

        // Cube root.
        let b = root_bounds(&BigRational::from_integer(BigInt::from(10)), 3, 128);
        assert_encloses(&b, "2.15443469003188372175929356651935049", "0.0000000000000000000000000001");
    }

    #[test]
    fn pow_bounds_values() {
        // (2/3)^10 = 1024/59049 exactly.
        let base = Bounds::point(BigRational::new(BigInt::from(2), BigInt::from(3)));
        let b = pow_bounds(&base, 10, 128);
        let exact = BigRational::new(BigInt::from(1024), BigInt::from(59049));
        assert!(b.contains(&exact));
        assert!(b.width() <= BigRational::new(BigInt::one(), BigInt::one() << 120));

        // Million-th power stays flat-sized and positive.
        let base = Bounds::point(BigRational::new(BigInt::from(999_999), BigInt::from(1_000_000)));
        let b = pow_bounds(&base, 1_000_000, 128);
        assert!(b.lo.is_positive());
        // (1 - 1/10^6)^(10^6) = 0.36787925723164509428...
        assert_encloses(&b, "0.367879257231645094285798125270369659", "0.000000000000000000000000001");
    }

    #[test]
    fn rounding_is_directed() {
        let x = BigRational::new(BigInt::from(1), BigInt::from(3));
        for bits in [4, 16, 64] {
            let d = round_down(&x, bits);
            let u = round_up(&x, bits);
            assert!(d <= x && x <= u);
            assert!(&u - &d <= BigRational::new(BigInt::from(2), BigInt::one() << bits as usize));
        }
        // Dyadics are fixed points.
        let y = BigRational::new(BigInt::from(5), BigInt::from(8));
        assert_eq!(round_down(&y, 8), y);
        assert_eq!(round_up(&y, 8), y);
    }

    #[test]
    fn decimal_round_trip() {
        let x = BigRational::new(BigInt::from(-45665), BigInt::from(1_000_000));
        assert_eq!(to_decimal_string(&x, 6), "-0.045665");
        assert_eq!(rational_from_decimal("-0.045665").unwrap(), x);
        assert_eq!(format!("{}", to_decimal_string(&BigRational::from_integer(BigInt::from(3)), 0)), "3");
    }
}
