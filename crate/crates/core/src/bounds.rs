//! Closed-form upper bounds on the irregularity.
//!
//! Everything that feeds a comparison is exact: rationals for the bound
//! values, cross-multiplied integers for interval membership, and an integer
//! squaring argument for the one irrational cap. The Zhou–Luo reference bounds
//! are square roots and are only ever evaluated in `f64` for display.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("minimum degree {delta_min} must be below the maximum degree {delta_cap}")]
    DeltaMin { delta_min: usize, delta_cap: usize },
    #[error("d = {d} outside 0..={max}", max = .delta_cap - 1)]
    DIndex { d: usize, delta_cap: usize },
    #[error("average degree {} outside the admissible interval [{}, {}]", .0.average, .0.low, .0.high)]
    OutOfRange(Box<DegreeInterval>),
    #[error("negative radicand {0}")]
    Domain(Rational),
}

/// An average degree `2m/n` and the interval it was required to lie in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeInterval {
    pub average: Rational,
    pub low: Rational,
    pub high: Rational,
}

/// Order, size and degree bounds of a graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    pub n: u64,
    pub m: u64,
    pub delta_cap: usize,
    pub delta_min: Option<usize>,
}

impl BoundParams {
    pub fn new(n: u64, m: u64, delta_cap: usize) -> Result<Self, BoundsError> {
        check_feasible(n, m, delta_cap)?;
        Ok(BoundParams {
            n,
            m,
            delta_cap,
            delta_min: None,
        })
    }

    pub fn with_delta_min(mut self, delta_min: usize) -> Result<Self, BoundsError> {
        check_delta_min(self.delta_cap, delta_min)?;
        if (delta_min as u128) * (self.n as u128) > 2 * self.m as u128 {
            return Err(BoundsError::Infeasible(format!(
                "minimum degree {delta_min} needs 2m >= {}, got 2m = {}",
                delta_min as u128 * self.n as u128,
                2 * self.m
            )));
        }
        self.delta_min = Some(delta_min);
        Ok(self)
    }
}

/// `n >= 1`, `Δ >= 1` and `2m <= Δn`.
pub fn check_feasible(n: u64, m: u64, delta_cap: usize) -> Result<(), BoundsError> {
    if n == 0 {
        return Err(BoundsError::Infeasible("n must be at least 1".into()));
    }
    if delta_cap == 0 {
        return Err(BoundsError::Infeasible(
            "maximum degree must be at least 1".into(),
        ));
    }
    if 2 * m as u128 > delta_cap as u128 * n as u128 {
        return Err(BoundsError::Infeasible(format!(
            "m = {m} exceeds Δn/2 = {}/2 for n = {n}, Δ = {delta_cap}",
            delta_cap as u128 * n as u128
        )));
    }
    Ok(())
}

fn check_delta_min(delta_cap: usize, delta_min: usize) -> Result<(), BoundsError> {
    if delta_cap == 0 {
        return Err(BoundsError::Infeasible(
            "maximum degree must be at least 1".into(),
        ));
    }
    if delta_min >= delta_cap {
        return Err(BoundsError::DeltaMin {
            delta_min,
            delta_cap,
        });
    }
    Ok(())
}

fn big<T: Into<BigInt>>(v: T) -> BigInt {
    v.into()
}

fn ratio<T: Into<BigInt>, U: Into<BigInt>>(p: T, q: U) -> Rational {
    Rational::new(p.into(), q.into())
}

/// `min(⌊Δm / (Δn − m)⌋, Δ − 1)`.
pub fn d_index(n: u64, m: u64, delta_cap: usize) -> Result<usize, BoundsError> {
    check_feasible(n, m, delta_cap)?;
    let dn = delta_cap as u128 * n as u128;
    let raw = delta_cap as u128 * m as u128 / (dn - m as u128);
    Ok(raw.min(delta_cap as u128 - 1) as usize)
}

/// Whether `2m/n` lies in `[2Δd/(Δ+d), 2Δ(d+1)/(Δ+d+1)]`.
pub fn theorem1_interval_contains(n: u64, m: u64, delta_cap: usize, d: usize) -> bool {
    let (n, m, dc, d) = (n as u128, m as u128, delta_cap as u128, d as u128);
    dc * d * n <= m * (dc + d) && m * (dc + d + 1) <= dc * (d + 1) * n
}

/// Every `d in 0..Δ` whose interval contains `2m/n`; two entries exactly at
/// breakpoints.
pub fn theorem1_admissible_d(n: u64, m: u64, delta_cap: usize) -> Vec<usize> {
    (0..delta_cap)
        .filter(|&d| theorem1_interval_contains(n, m, delta_cap, d))
        .collect()
}

/// The affine piece `d(d+1)n + (Δ² − (2d+1)Δ − d² − d) m / Δ` for a given `d`.
pub fn theorem1_at(n: u64, m: u64, delta_cap: usize, d: usize) -> Rational {
    let (n, m, dc, d) = (big(n), big(m), big(delta_cap), big(d));
    let slope = &dc * &dc - (2 * &d + 1) * &dc - &d * &d - &d;
    Rational::from_integer(&d * (&d + 1) * n) + ratio(slope * m, dc)
}

pub fn theorem1_bound(n: u64, m: u64, delta_cap: usize) -> Result<Rational, BoundsError> {
    let d = d_index(n, m, delta_cap)?;
    Ok(theorem1_at(n, m, delta_cap, d))
}

/// `(Δn − 2m)Δm / (Δn − m)`.
pub fn corollary1_bound(n: u64, m: u64, delta_cap: usize) -> Result<Rational, BoundsError> {
    check_feasible(n, m, delta_cap)?;
    let dn = big(delta_cap) * big(n);
    let m = big(m);
    Ok(ratio((&dn - 2 * &m) * big(delta_cap) * &m, dn - m))
}

/// Whether `Δm / (Δn − m)` is an integer, i.e. `2m/n` is a breakpoint of the
/// piecewise bound.
pub fn is_breakpoint(n: u64, m: u64, delta_cap: usize) -> bool {
    let dn = delta_cap as u128 * n as u128;
    let num = delta_cap as u128 * m as u128;
    let den = dn - m as u128;
    den != 0 && num.is_multiple_of(den)
}

/// Decides `value < (3 − 2√2) · scale` exactly.
///
/// With `value = p/q`, `q > 0`: the claim is `2√2·kq < 3kq − p`, which holds
/// iff `a = 3kq − p > 0` and `2(2kq)² < a²`.
pub fn below_three_minus_two_sqrt2(value: &Rational, scale: &BigInt) -> bool {
    let (p, q) = (value.numer(), value.denom());
    let b: BigInt = 2 * scale * q;
    if !b.is_positive() {
        return value < &Rational::zero();
    }
    let a: BigInt = 3 * scale * q - p;
    a.is_positive() && 2 * &b * &b < &a * &a
}

pub const THREE_MINUS_TWO_SQRT2: f64 = 0.171_572_875_253_809_9;

#[derive(Debug, Clone, PartialEq)]
pub struct CapCheck {
    pub holds: bool,
    pub bound: Rational,
    /// `(3 − 2√2)Δ²n`, display only.
    pub cap: f64,
}

/// Exact check of `corollary1_bound < (3 − 2√2)Δ²n`.
pub fn corollary1_cap_holds(n: u64, m: u64, delta_cap: usize) -> Result<CapCheck, BoundsError> {
    let bound = corollary1_bound(n, m, delta_cap)?;
    let scale = big(delta_cap) * big(delta_cap) * big(n);
    let holds = below_three_minus_two_sqrt2(&bound, &scale);
    let cap = THREE_MINUS_TWO_SQRT2 * (delta_cap as f64).powi(2) * n as f64;
    Ok(CapCheck { holds, bound, cap })
}

/// Per-vertex value `Δ(Δ − i)i / (Δ + i)`.
pub fn prop1_profile_value(delta_cap: usize, i: usize) -> Rational {
    let (dc, i) = (big(delta_cap), big(i));
    ratio(&dc * (&dc - &i) * &i, &dc + &i)
}

/// `(⌊(√2 − 1)Δ⌋, ⌈(√2 − 1)Δ⌉)`, from `⌊√2·Δ⌋ = isqrt(2Δ²)`.
pub fn delta_star_candidates(delta_cap: usize) -> (usize, usize) {
    let dc = delta_cap as u128;
    let floor = (2 * dc * dc).sqrt() - dc;
    // (√2 − 1)Δ is irrational for Δ ≥ 1.
    let ceil = if dc == 0 { floor } else { floor + 1 };
    (floor as usize, ceil as usize)
}

/// Maximiser of `Δ(Δ − i)i / (Δ + i)` over `i in δ..=Δ`; ties go to the
/// smaller `i`.
pub fn delta_star(delta_cap: usize, delta_min: usize) -> Result<usize, BoundsError> {
    check_delta_min(delta_cap, delta_min)?;
    let dc = delta_cap as u128;
    // f(i) ∝ (Δ − i)i / (Δ + i); compare by cross-multiplication.
    let num = |i: u128| (dc - i) * i;
    let mut best = delta_min as u128;
    for i in best + 1..=dc {
        if num(i) * (dc + best) > num(best) * (dc + i) {
            best = i;
        }
    }
    Ok(best as usize)
}

/// `Δ(Δ − δ*)δ* / (Δ + δ*) · n`.
pub fn prop1_bound(n: u64, delta_cap: usize, delta_min: usize) -> Result<Rational, BoundsError> {
    if n == 0 {
        return Err(BoundsError::Infeasible("n must be at least 1".into()));
    }
    let star = delta_star(delta_cap, delta_min)?;
    Ok(prop1_profile_value(delta_cap, star) * Rational::from_integer(big(n)))
}

/// Whether `2m/n` lies in `[δ, 2Δδ/(Δ+δ)]`.
pub fn prop2_interval_contains(n: u64, m: u64, delta_cap: usize, delta_min: usize) -> bool {
    let (n, m, dc, dm) = (n as u128, m as u128, delta_cap as u128, delta_min as u128);
    dm * n <= 2 * m && m * (dc + dm) <= dc * dm * n
}

/// `2Δm − δΔn`, on `Δ > δ >= 1` and `2m/n in [δ, 2Δδ/(Δ+δ)]`.
pub fn prop2_bound(
    n: u64,
    m: u64,
    delta_cap: usize,
    delta_min: usize,
) -> Result<Rational, BoundsError> {
    check_delta_min(delta_cap, delta_min)?;
    if delta_min == 0 {
        return Err(BoundsError::Infeasible(
            "minimum degree must be at least 1".into(),
        ));
    }
    if n == 0 {
        return Err(BoundsError::Infeasible("n must be at least 1".into()));
    }
    if !prop2_interval_contains(n, m, delta_cap, delta_min) {
        return Err(BoundsError::OutOfRange(Box::new(DegreeInterval {
            average: ratio(2 * m, n),
            low: ratio(delta_min, 1u32),
            high: ratio(2 * delta_cap * delta_min, delta_cap + delta_min),
        })));
    }
    let value = 2 * big(delta_cap) * big(m) - big(delta_min) * big(delta_cap) * big(n);
    Ok(Rational::from_integer(value))
}

/// `4n³/27`.
pub fn albertson_cap(n: u64) -> Rational {
    ratio(4 * big(n).pow(3), 27u32)
}

fn sqrt_nonnegative(radicand: Rational) -> Result<f64, BoundsError> {
    if radicand.is_negative() {
        return Err(BoundsError::Domain(radicand));
    }
    Ok(rational::to_f64(&radicand).sqrt())
}

/// `m·√(2n(2m + (n−1)(Δ−δ)) / (n + Δ − δ) − 4m)`.
pub fn zhou_luo_1(n: u64, m: u64, delta_cap: usize, delta_min: usize) -> Result<f64, BoundsError> {
    if delta_min > delta_cap {
        return Err(BoundsError::DeltaMin {
            delta_min,
            delta_cap,
        });
    }
    let spread = big(delta_cap - delta_min);
    let (nb, mb) = (big(n), big(m));
    let den = &nb + &spread;
    if den.is_zero() {
        return Err(BoundsError::Infeasible("n + Δ − δ must be positive".into()));
    }
    let radicand =
        ratio(2 * &nb * (2 * &mb + (&nb - 1) * spread), den) - Rational::from_integer(4 * &mb);
    Ok(m as f64 * sqrt_nonnegative(radicand)?)
}

/// `√(m(2mn(Δ+δ) − n²Δδ − 4m²))`.
pub fn zhou_luo_2(n: u64, m: u64, delta_cap: usize, delta_min: usize) -> Result<f64, BoundsError> {
    let (nb, mb, dc, dm) = (big(n), big(m), big(delta_cap), big(delta_min));
    let inner = 2 * &mb * &nb * (&dc + &dm) - &nb * &nb * dc * dm - 4 * &mb * &mb;
    sqrt_nonnegative(Rational::from_integer(mb * inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn d_index_examples() {
        assert_eq!(d_index(14, 40, 10), Ok(4));
        assert!(theorem1_interval_contains(14, 40, 10, 4));
        assert_eq!(d_index(9, 0, 5), Ok(0));
        assert_eq!(d_index(4, 6, 3), Ok(2));
        assert!(theorem1_interval_contains(4, 6, 3, 2));
        assert!(!theorem1_interval_contains(4, 6, 3, 1));
        assert!(d_index(4, 7, 3).is_err());
        assert!(d_index(0, 0, 3).is_err());
        assert!(d_index(3, 0, 0).is_err());
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(theorem1_bound(14, 40, 10), Ok(int(240)));
        assert_eq!(theorem1_bound(11, 0, 4), Ok(int(0)));
        assert_eq!(theorem1_bound(5, 6, 3), Ok(int(6)));
    }

    #[test]
    fn corollary1_examples() {
        assert_eq!(corollary1_bound(14, 40, 10), Ok(int(240)));
        assert_eq!(corollary1_bound(4, 6, 3), Ok(int(0)));
        assert_eq!(corollary1_bound(60, 45, 3), Ok(int(90)));
        assert_eq!(theorem1_bound(60, 45, 3), Ok(int(90)));
        assert!(is_breakpoint(60, 45, 3));
        assert_eq!(theorem1_admissible_d(60, 45, 3), vec![0, 1]);
    }

    #[test]
    fn cap_examples() {
        let c = corollary1_cap_holds(14, 40, 10).unwrap();
        assert!(c.holds);
        assert!((c.cap - 240.2020).abs() < 1e-3);
        assert!(corollary1_cap_holds(60, 45, 3).unwrap().holds);
        assert!(corollary1_cap_holds(5, 0, 2).unwrap().holds);
    }

    #[test]
    fn sqrt2_comparison() {
        let s = BigInt::from(1);
        assert!(below_three_minus_two_sqrt2(&frac(171_572, 1_000_000), &s));
        assert!(!below_three_minus_two_sqrt2(&frac(171_573, 1_000_000), &s));
        assert!(!below_three_minus_two_sqrt2(&int(1), &s));
        assert!(below_three_minus_two_sqrt2(&int(-5), &s));
        assert!(!below_three_minus_two_sqrt2(&int(0), &BigInt::from(0)));
    }

    #[test]
    fn delta_star_examples() {
        assert_eq!(delta_star(10, 0), Ok(4));
        assert!(prop1_profile_value(10, 4) > prop1_profile_value(10, 5));
        assert_eq!(prop1_profile_value(10, 4), frac(120, 7));
        assert_eq!(prop1_profile_value(10, 5), frac(50, 3));
        assert_eq!(delta_star(3, 0), Ok(1));
        assert_eq!(delta_star(10, 7), Ok(7));
        assert_eq!(delta_star(1, 0), Ok(0));
        assert!(delta_star(3, 3).is_err());
        assert_eq!(delta_star_candidates(10), (4, 5));
        assert_eq!(delta_star_candidates(3), (1, 2));
    }

    #[test]
    fn prop1_examples() {
        assert_eq!(prop1_bound(14, 10, 0), Ok(int(240)));
        assert_eq!(prop1_bound(4, 3, 1), Ok(int(6)));
        assert_eq!(prop1_bound(3, 2, 1), Ok(int(2)));
        assert!(prop1_bound(3, 2, 2).is_err());
    }

    #[test]
    fn prop2_examples() {
        assert_eq!(prop2_bound(4, 3, 3, 1), Ok(int(6)));
        assert_eq!(prop2_bound(10, 15, 5, 3), Ok(int(0)));
        assert_eq!(prop2_bound(13, 30, 10, 4), Ok(int(80)));
        match prop2_bound(13, 45, 10, 4) {
            Err(BoundsError::OutOfRange(i)) => {
                assert_eq!(
                    (i.average, i.low, i.high),
                    (frac(90, 13), int(4), frac(40, 7))
                );
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(prop2_bound(4, 3, 3, 0).is_err());
        assert!(prop2_bound(4, 3, 3, 3).is_err());
    }

    #[test]
    fn albertson_examples() {
        assert_eq!(albertson_cap(60), int(32000));
        assert_eq!(albertson_cap(3), int(4));
        assert_eq!(albertson_cap(0), int(0));
    }

    #[test]
    fn zhou_luo_examples() {
        // Direct substitution: eb3 = √(100 · 80000), eb2 = 100·√(120·790/70 − 400).
        let eb3 = zhou_luo_2(60, 100, 10, 0).unwrap();
        assert!((eb3 - 8_000_000f64.sqrt()).abs() < 1e-9);
        assert!((eb3 - 2828.42712474619).abs() < 1e-6);
        let eb2 = zhou_luo_1(60, 100, 10, 0).unwrap();
        assert!((eb2 - 100.0 * (120.0f64 * 790.0 / 70.0 - 400.0).sqrt()).abs() < 1e-9);
        assert!((eb2 - 3089.151525).abs() < 1e-5);
        assert_eq!(zhou_luo_1(60, 0, 10, 0), Ok(0.0));
        assert_eq!(zhou_luo_2(60, 0, 10, 0), Ok(0.0));
        assert!(matches!(
            zhou_luo_2(10, 1, 5, 3),
            Err(BoundsError::Domain(_))
        ));
    }

    #[test]
    fn params_validation() {
        assert!(BoundParams::new(4, 6, 3).is_ok());
        assert!(BoundParams::new(4, 7, 3).is_err());
        assert!(BoundParams::new(4, 3, 3).unwrap().with_delta_min(1).is_ok());
        assert!(BoundParams::new(4, 3, 3)
            .unwrap()
            .with_delta_min(2)
            .is_err());
        assert!(BoundParams::new(4, 6, 3)
            .unwrap()
            .with_delta_min(3)
            .is_err());
    }
}
