//! Upper bound on the number of combinatorial classes for the `2k`-gon.
//!
//! The number of edges of a decomposition is at most
//! `k(2k−3)² / (2 sin²(π/2k))`, which is relaxed to
//! `2k³(2k−3)² / ((2−√2)π²)`; `N` is the floor of the relaxed value and the
//! class count is at most `N·t_N` with `t_N = 6(4N+1)!/(N!(3N+3)!)` the
//! number of loopless rooted planar maps with `N` edges.
//!
//! Real quantities are closed intervals of binary fixed-point numbers with
//! outward rounding, so every floor is certified rather than guessed.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Closed interval `[lo, hi]·2^-bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn from_int(n: impl Into<BigInt>, bits: u32) -> Interval {
        let v = n.into() << bits;
        Interval { lo: v.clone(), hi: v, bits }
    }

    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Width of the interval in units of the last place.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, bits: self.bits }
    }

    /// Product of two intervals of any sign.
    pub fn mul(&self, o: &Interval) -> Interval {
        let s = self.one();
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        Interval { lo: div_floor(min, &s), hi: div_ceil(max, &s), bits: self.bits }
    }

    /// Quotient; the divisor must not contain zero.
    pub fn div(&self, o: &Interval) -> Result<Interval> {
        if o.lo.sign() != o.hi.sign() || o.lo.is_zero() || o.hi.is_zero() {
            return Err(Error::InvalidParameter("interval divisor contains zero".into()));
        }
        let s = self.one();
        let quotients = [
            (&self.lo * &s, &o.lo),
            (&self.lo * &s, &o.hi),
            (&self.hi * &s, &o.lo),
            (&self.hi * &s, &o.hi),
        ];
        let lo = quotients.iter().map(|(a, b)| div_floor(a, b)).min().expect("four quotients");
        let hi = quotients.iter().map(|(a, b)| div_ceil(a, b)).max().expect("four quotients");
        Ok(Interval { lo, hi, bits: self.bits })
    }

    pub fn scale(&self, n: i64) -> Interval {
        let (a, b) = (&self.lo * n, &self.hi * n);
        if n >= 0 {
            Interval { lo: a, hi: b, bits: self.bits }
        } else {
            Interval { lo: b, hi: a, bits: self.bits }
        }
    }

    /// `√n` for a nonnegative integer `n`.
    pub fn sqrt_int(n: u64, bits: u32) -> Interval {
        let scaled = BigUint::from(n) << (2 * bits);
        let root = BigInt::from(scaled.sqrt());
        let exact = &root * &root == BigInt::from(BigUint::from(n) << (2 * bits));
        let hi = if exact { root.clone() } else { &root + 1 };
        Interval { lo: root, hi, bits }
    }

    /// `π` by Machin's formula `16·atan(1/5) − 4·atan(1/239)`.
    pub fn pi(bits: u32) -> Interval {
        let a = atan_inv(5, bits);
        let b = atan_inv(239, bits);
        a.scale(16).sub(&b.scale(4))
    }

    /// `sin x` for an interval inside `[0, π/2]`, where sine is increasing.
    pub fn sin(&self) -> Result<Interval> {
        if self.lo.is_negative() || self.hi > (BigInt::from(3) << (self.bits - 1)) {
            return Err(Error::InvalidParameter("sine argument outside [0, 1.5]".into()));
        }
        let lo = sin_point(&self.lo, self.bits).lo;
        let hi = sin_point(&self.hi, self.bits).hi;
        Ok(Interval { lo, hi, bits: self.bits })
    }

    /// The common floor of every point of the interval, if there is one.
    pub fn certified_floor(&self) -> Option<BigInt> {
        let a = &self.lo >> self.bits;
        let b = &self.hi >> self.bits;
        (a == b).then_some(a)
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) >> 1;
        ratio_to_f64(&mid, self.bits)
    }

    /// Decimal expansion of the lower end truncated to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.lo.is_negative();
        let mag = self.lo.abs();
        let int = &mag >> self.bits;
        let frac = &mag - (&int << self.bits);
        let scaled = (frac * BigInt::from(10u32).pow(digits as u32)) >> self.bits;
        let frac_str = format!("{:0>width$}", scaled.to_str_radix(10), width = digits);
        format!("{}{}.{}", if neg { "-" } else { "" }, int, frac_str)
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        let lo = ratio_to_f64(&self.lo, self.bits);
        let hi = ratio_to_f64(&self.hi, self.bits);
        lo <= x && x <= hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(20))
    }
}

fn ratio_to_f64(v: &BigInt, bits: u32) -> f64 {
    let shift = bits.saturating_sub(60);
    let top = (v >> shift).to_f64().unwrap_or(f64::NAN);
    top * 2f64.powi(-((bits - shift) as i32))
}

/// `atan(1/x)` for an integer `x ≥ 2` as an interval.
fn atan_inv(x: u64, bits: u32) -> Interval {
    let s = BigInt::one() << (bits + 4);
    let x2 = BigInt::from(x) * BigInt::from(x);
    // Terms are computed with four guard bits and an exact power kept per step.
    let mut power = BigInt::from(x);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut j: u64 = 0;
    loop {
        let denom = &power * BigInt::from(2 * j + 1);
        let t_lo = div_floor(&s, &denom);
        let t_hi = div_ceil(&s, &denom);
        if t_hi <= BigInt::one() {
            // Remaining alternating tail is bounded by this term.
            lo -= &t_hi;
            hi += &t_hi;
            break;
        }
        if j.is_multiple_of(2) {
            lo += &t_lo;
            hi += &t_hi;
        } else {
            lo -= &t_hi;
            hi -= &t_lo;
        }
        power *= &x2;
        j += 1;
    }
    Interval { lo: div_floor(&lo, &BigInt::from(16)), hi: div_ceil(&hi, &BigInt::from(16)), bits }
}

/// `sin(v·2^-bits)` for `0 ≤ v·2^-bits ≤ 1.5` by its Taylor series.
fn sin_point(v: &BigInt, bits: u32) -> Interval {
    let s = BigInt::one() << bits;
    let v2 = v * v;
    let mut num = v.clone();
    // Term j is num / ((2j+1)! · 2^(2j·bits)) in scaled units.
    let mut den = BigInt::one();
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut j: u64 = 0;
    loop {
        let t_lo = div_floor(&num, &den);
        let t_hi = div_ceil(&num, &den);
        if t_hi <= BigInt::one() && j > 0 {
            lo -= &t_hi;
            hi += &t_hi;
            break;
        }
        if j.is_multiple_of(2) {
            lo += &t_lo;
            hi += &t_hi;
        } else {
            lo -= &t_hi;
            hi -= &t_lo;
        }
        num *= &v2;
        den *= &s * &s * BigInt::from((2 * j + 2) * (2 * j + 3));
        j += 1;
    }
    Interval { lo, hi, bits }
}

const START_BITS: u32 = 192;
const MAX_BITS: u32 = 1 << 16;

/// Bounds on the number of edges of a decomposition of the `2k`-gon.
#[derive(Debug, Clone)]
pub struct EdgeBounds {
    pub k: usize,
    /// `k(2k−3)² / (2 sin²(π/2k))`.
    pub exact: Interval,
    /// `2k³(2k−3)² / ((2−√2)π²)`.
    pub relaxed: Interval,
    /// Certified floor of `relaxed`.
    pub n: u64,
    /// `k < 4`, where the estimate is outside its stated hypothesis.
    pub below_hypothesis: bool,
}

fn edge_bounds_at(k: usize, bits: u32) -> Result<Option<EdgeBounds>> {
    let kk = k as i64;
    let c = (2 * kk - 3) * (2 * kk - 3);
    let pi = Interval::pi(bits);
    let sin = pi.div(&Interval::from_int(2 * kk, bits))?.sin()?;
    let exact = Interval::from_int(kk * c, bits).div(&sin.mul(&sin).scale(2))?;
    let denom = Interval::from_int(2, bits).sub(&Interval::sqrt_int(2, bits)).mul(&pi.mul(&pi));
    let relaxed = Interval::from_int(2 * kk * kk * kk * c, bits).div(&denom)?;
    Ok(relaxed.certified_floor().map(|n| EdgeBounds {
        k,
        exact,
        relaxed: relaxed.clone(),
        n: n.to_u64().expect("edge bound fits in u64"),
        below_hypothesis: k < 4,
    }))
}

/// Edge-count bounds with `N` certified; precision is raised until the
/// interval around the relaxed bound does not straddle an integer.
pub fn edge_bounds(k: usize) -> Result<EdgeBounds> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k} must be at least 2")));
    }
    if k > 100_000 {
        return Err(Error::InvalidParameter(format!("k = {k} is too large")));
    }
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        if let Some(b) = edge_bounds_at(k, bits)? {
            return Ok(b);
        }
        bits *= 2;
    }
    Err(Error::InvalidParameter(format!("could not certify the floor for k = {k}")))
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of loopless rooted planar maps with `n` edges,
/// `6(4n+1)! / (n!(3n+3)!)`.
pub fn loopless_map_count(n: u64) -> BigUint {
    loopless_map_count_exact(n).unwrap_or_else(|| panic!("t_{n} is not an integer"))
}

/// `t_n`, or `None` if the quotient leaves a remainder.
pub fn loopless_map_count_exact(n: u64) -> Option<BigUint> {
    // (4n+1)!/(3n+3)! is a plain product once 4n+1 >= 3n+3.
    let (num, den) = if n >= 2 {
        ((3 * n + 4..=4 * n + 1).fold(BigUint::from(6u32), |acc, i| acc * i), factorial(n))
    } else {
        (factorial(4 * n + 1) * 6u32, factorial(n) * factorial(3 * n + 3))
    };
    let (q, r) = num.div_rem(&den);
    r.is_zero().then_some(q)
}

/// `N·t_N` for the `2k`-gon.
pub fn theorem_bound(k: usize) -> Result<BigUint> {
    let n = edge_bounds(k)?.n;
    Ok(loopless_map_count(n) * n)
}

/// `log10` of a positive big integer.
pub fn log10_big(x: &BigUint) -> f64 {
    let digits = x.to_str_radix(10);
    let lead: f64 = digits[..digits.len().min(17)].parse().unwrap_or(0.0);
    lead.log10() + (digits.len() - digits.len().min(17)) as f64
}

/// `log10` of `(8/27)·√(6/π)·N^(−3/2)·(256/27)^N`, the growth rate of `N·t_N`.
pub fn asymptotic_estimate(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("asymptotic estimate needs N ≥ 1".into()));
    }
    let n = n as f64;
    Ok((8.0f64 / 27.0).log10() + 0.5 * (6.0 / std::f64::consts::PI).log10() - 1.5 * n.log10()
        + n * (256.0f64 / 27.0).log10())
}

/// All bound quantities for one `k`.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub edges: EdgeBounds,
    pub t_n: BigUint,
    pub theorem_bound: BigUint,
    pub log10_theorem_bound: f64,
    pub log10_asymptotic: f64,
}

impl BoundReport {
    pub fn k(&self) -> usize {
        self.edges.k
    }

    pub fn n(&self) -> u64 {
        self.edges.n
    }
}

pub fn bound_report(k: usize) -> Result<BoundReport> {
    let edges = edge_bounds(k)?;
    let t_n = loopless_map_count(edges.n);
    let theorem_bound = &t_n * edges.n;
    let log10_theorem_bound = log10_big(&theorem_bound);
    let log10_asymptotic = asymptotic_estimate(edges.n.max(1))?;
    Ok(BoundReport { edges, t_n, theorem_bound, log10_theorem_bound, log10_asymptotic })
}

/// Leading decimal digits and digit count of a big integer.
pub fn digit_summary(x: &BigUint, lead: usize) -> (String, usize) {
    let s = x.to_str_radix(10);
    (s[..s.len().min(lead)].to_string(), s.len())
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t_lead, t_digits) = digit_summary(&self.t_n, 20);
        let (b_lead, b_digits) = digit_summary(&self.theorem_bound, 20);
        writeln!(f, "k = {}", self.k())?;
        if self.edges.below_hypothesis {
            writeln!(f, "note: the edge estimate assumes k >= 4")?;
        }
        writeln!(f, "edge bound k(2k-3)^2/(2 sin^2(pi/2k)) = {}", self.edges.exact.to_decimal(30))?;
        writeln!(f, "relaxed edge bound = {}", self.edges.relaxed.to_decimal(30))?;
        writeln!(f, "N = {}", self.n())?;
        writeln!(f, "t_N: {t_digits} digits, leading {t_lead}")?;
        writeln!(f, "N*t_N: {b_digits} digits, leading {b_lead}")?;
        writeln!(f, "log10(N*t_N) = {:.6}", self.log10_theorem_bound)?;
        write!(f, "log10 asymptotic = {:.6}", self.log10_asymptotic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_and_sqrt_enclose_the_reference() {
        let pi = Interval::pi(128);
        assert!(pi.contains_f64(std::f64::consts::PI));
        assert!(pi.width_ulps() < BigInt::from(64));
        let r2 = Interval::sqrt_int(2, 128);
        assert!(r2.contains_f64(std::f64::consts::SQRT_2));
        assert_eq!(Interval::sqrt_int(9, 64).certified_floor(), Some(BigInt::from(3)));
    }

    #[test]
    fn sine_encloses_the_reference() {
        for x in [0.1f64, 0.5, 1.0, 1.4] {
            let n = (x * 1024.0) as i64;
            let v = Interval::from_int(n, 128).div(&Interval::from_int(1024, 128)).unwrap();
            let s = v.sin().unwrap();
            assert!((s.midpoint_f64() - (n as f64 / 1024.0).sin()).abs() < 1e-15, "{x}");
        }
    }

    #[test]
    fn decimal_rendering() {
        let third = Interval::from_int(1, 64).div(&Interval::from_int(3, 64)).unwrap();
        assert_eq!(third.to_decimal(5), "0.33333");
        assert_eq!(Interval::from_int(-2, 8).to_decimal(2), "-2.00");
    }

    #[test]
    fn sign_aware_product() {
        let a = Interval::from_int(-3, 16);
        let b = Interval::from_int(2, 16);
        assert_eq!(a.mul(&b).certified_floor(), Some(BigInt::from(-6)));
        assert!(a.div(&Interval::from_int(0, 16)).is_err());
    }

    #[test]
    fn log10_of_powers_of_ten() {
        let x = BigUint::from(10u32).pow(40);
        assert!((log10_big(&x) - 40.0).abs() < 1e-12);
        assert_eq!(digit_summary(&x, 3), ("100".to_string(), 41));
    }
}
