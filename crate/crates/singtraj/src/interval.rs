//! Rational interval arithmetic.
//!
//! Intervals carry exact rational endpoints, so enclosure arithmetic is
//! itself exact (no outward rounding is ever needed). Enclosures of
//! irrational values (square roots, pi, sin/cos/atan) take a precision in
//! bits and can be recomputed arbitrarily tight.

use crate::error::{Error, Result};
use crate::poly::Rational;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from(BigInt::from(2))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certified sign: `None` while the interval straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.is_positive() {
            Some(1)
        } else if self.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: if self.lo <= other.lo {
                self.lo.clone()
            } else {
                other.lo.clone()
            },
            hi: if self.hi >= other.hi {
                self.hi.clone()
            } else {
                other.hi.clone()
            },
        }
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn scale(&self, k: &Rational) -> RatInterval {
        if k.is_negative() {
            RatInterval {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            RatInterval {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    pub fn shift(&self, k: &Rational) -> RatInterval {
        RatInterval {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }

    /// Division; fails if the divisor straddles zero.
    pub fn div(&self, other: &RatInterval) -> Result<RatInterval> {
        if other.contains_zero() {
            return Err(Error::RefinementStalled(
                "division by an interval containing zero".into(),
            ));
        }
        let inv = RatInterval {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        Ok(self.mul(&inv))
    }

    pub fn pow(&self, e: u32) -> RatInterval {
        if e == 0 {
            return RatInterval::point(Rational::one());
        }
        if e % 2 == 1 || self.is_positive() || self.is_negative() {
            let a = pow_rat(&self.lo, e);
            let b = pow_rat(&self.hi, e);
            if a <= b {
                RatInterval { lo: a, hi: b }
            } else {
                RatInterval { lo: b, hi: a }
            }
        } else {
            // even power of an interval straddling zero
            let a = pow_rat(&self.lo, e);
            let b = pow_rat(&self.hi, e);
            RatInterval {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        }
    }

    /// Enclosure of the square root. The interval must not be entirely
    /// negative; a slightly negative lower bound (from outer rounding of an
    /// enclosure known to be nonnegative) is clamped to zero.
    pub fn sqrt(&self, bits: u32) -> Result<RatInterval> {
        if self.hi.is_negative() {
            return Err(Error::RefinementStalled(
                "square root of a negative interval".into(),
            ));
        }
        let lo = if self.lo.is_negative() {
            Rational::zero()
        } else {
            sqrt_bounds(&self.lo, bits).0
        };
        let hi = sqrt_bounds(&self.hi, bits).1;
        Ok(RatInterval { lo, hi })
    }
}

fn pow_rat(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Rational bounds on `sqrt(q)` with `hi - lo <= 2^-bits * (denominator scale)`.
pub fn sqrt_bounds(q: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!q.is_negative(), "sqrt of negative rational");
    if q.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let n = q.numer();
    let d = q.denom();
    // sqrt(n/d) = sqrt(n*d)/d
    let m: BigInt = (n * d) << (2 * bits as usize);
    let s = m.sqrt();
    let scale = Rational::new(BigInt::one(), d * (BigInt::one() << bits as usize));
    let lo = Rational::from(s.clone()) * &scale;
    let hi = Rational::from(s + BigInt::one()) * &scale;
    (lo, hi)
}

fn two_pow_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

/// arctan via its alternating Taylor series; requires `|x| <= 1/2` so the
/// series converges geometrically.
fn atan_taylor(x: &Rational, bits: u32) -> RatInterval {
    debug_assert!(x.abs() <= Rational::new(BigInt::from(1), BigInt::from(2)));
    let eps = two_pow_neg(bits + 2);
    let x2 = x * x;
    let mut term = x.clone();
    let mut acc = Rational::zero();
    let mut k = 0u32;
    loop {
        let contrib = &term / Rational::from(BigInt::from(2 * k + 1));
        if contrib.abs() <= eps {
            // alternating with decreasing magnitude: error bounded by contrib
            let lo = &acc - contrib.abs();
            let hi = &acc + contrib.abs();
            return RatInterval { lo, hi };
        }
        if k % 2 == 0 {
            acc += &contrib;
        } else {
            acc -= &contrib;
        }
        term = &term * &x2;
        k += 1;
        debug_assert!(k < 100_000);
    }
}

/// Enclosure of pi via Machin's formula.
pub fn pi_interval(bits: u32) -> RatInterval {
    let a = atan_taylor(&Rational::new(BigInt::one(), BigInt::from(5)), bits + 6);
    let b = atan_taylor(&Rational::new(BigInt::one(), BigInt::from(239)), bits + 6);
    a.scale(&Rational::from(BigInt::from(16)))
        .sub(&b.scale(&Rational::from(BigInt::from(4))))
}

/// Enclosure of `atan(x)` for any rational `x`.
pub fn atan_interval(x: &Rational, bits: u32) -> RatInterval {
    if x.is_negative() {
        return atan_interval(&(-x.clone()), bits).neg();
    }
    let one = Rational::one();
    if *x > one {
        // atan(x) = pi/2 - atan(1/x)
        let half_pi = pi_interval(bits + 2).scale(&Rational::new(BigInt::one(), BigInt::from(2)));
        return half_pi.sub(&atan_interval(&x.recip(), bits + 2));
    }
    let third = Rational::new(BigInt::one(), BigInt::from(3));
    if *x > third {
        // atan(x) = atan(1/2) + atan((2x-1)/(x+2))
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let base = atan_taylor(&half, bits + 2);
        let two = Rational::from(BigInt::from(2));
        let y = (&(x * &two) - &one) / (x + &two);
        return base.add(&atan_taylor(&y, bits + 2));
    }
    atan_taylor(x, bits)
}

/// Enclosure of `atan(u)` over an interval (atan is increasing).
pub fn atan_over_interval(u: &RatInterval, bits: u32) -> RatInterval {
    let lo = atan_interval(&u.lo, bits);
    let hi = atan_interval(&u.hi, bits);
    RatInterval {
        lo: lo.lo,
        hi: hi.hi,
    }
}

/// Angle of the point `(c, s)` on the unit circle, in `(-pi, pi]`.
///
/// Needs a certified sign on at least one coordinate; returns `None` when
/// both straddle zero (caller should refine and retry).
pub fn atan2_interval(s: &RatInterval, c: &RatInterval, bits: u32) -> Option<RatInterval> {
    if c.is_positive() {
        let u = s.div(c).ok()?;
        return Some(atan_over_interval(&u, bits));
    }
    if s.is_positive() {
        // pi/2 - atan(c/s)
        let u = c.div(s).ok()?;
        let half_pi = pi_interval(bits + 2).scale(&Rational::new(BigInt::one(), BigInt::from(2)));
        return Some(half_pi.sub(&atan_over_interval(&u, bits)));
    }
    if s.is_negative() {
        let u = c.div(s).ok()?;
        let half_pi = pi_interval(bits + 2).scale(&Rational::new(BigInt::one(), BigInt::from(2)));
        return Some(half_pi.neg().sub(&atan_over_interval(&u, bits)));
    }
    // s straddles zero; c <= 0: near the branch point t = pi
    None
}

fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

/// Taylor enclosure of (sin r, cos r) for `|r| <= 1`.
fn sin_cos_reduced(r: &RatInterval, bits: u32) -> (RatInterval, RatInterval) {
    debug_assert!(r.lo.abs() <= Rational::from(BigInt::from(2)));
    let eps = two_pow_neg(bits + 2);
    // choose N so that max|r|^(N+1)/(N+1)! <= eps with |r| <= 1.1
    let mut n = 3u32;
    loop {
        let bound = pow_rat(&Rational::new(BigInt::from(11), BigInt::from(10)), n + 1)
            / Rational::from(factorial(n + 1));
        if bound <= eps {
            break;
        }
        n += 2;
        debug_assert!(n < 10_000);
    }
    let mut sin_acc = RatInterval::zero();
    let mut cos_acc = RatInterval::point(Rational::one());
    for k in 1..=n {
        let coeff = Rational::new(BigInt::one(), factorial(k));
        let term = r.pow(k).scale(&coeff);
        match k % 4 {
            1 => sin_acc = sin_acc.add(&term),
            2 => cos_acc = cos_acc.sub(&term),
            3 => sin_acc = sin_acc.sub(&term),
            _ => cos_acc = cos_acc.add(&term),
        }
    }
    let rem = {
        let b = pow_rat(
            &r.lo.abs().max(r.hi.abs()),
            n + 1,
        ) / Rational::from(factorial(n + 1));
        RatInterval {
            lo: -b.clone(),
            hi: b,
        }
    };
    (sin_acc.add(&rem), cos_acc.add(&rem))
}

/// Certified enclosure of `(sin t, cos t)` for rational `t`.
pub fn sin_cos_interval(t: &Rational, bits: u32) -> (RatInterval, RatInterval) {
    let pi = pi_interval(bits + 8);
    let half_pi = pi.scale(&Rational::new(BigInt::one(), BigInt::from(2)));
    // k = round(t / (pi/2))
    let approx = t / half_pi.mid();
    let k = round_to_int(&approx);
    let r = RatInterval::point(t.clone()).sub(&half_pi.scale(&Rational::from(k.clone())));
    let (s, c) = sin_cos_reduced(&r, bits);
    let quadrant = k.mod_floor(&BigInt::from(4)).to_i64().unwrap();
    let (sin_t, cos_t) = match quadrant {
        0 => (s, c),
        1 => (c, s.neg()),
        2 => (s.neg(), c.neg()),
        _ => (c.neg(), s),
    };
    (clamp_unit(sin_t), clamp_unit(cos_t))
}

/// Enclosure of `(sin, cos)` over a rational interval of angles.
pub fn sin_cos_over_interval(t: &RatInterval, bits: u32) -> (RatInterval, RatInterval) {
    let two_pi = pi_interval(bits + 8).scale(&Rational::from(BigInt::from(2)));
    if t.width() >= two_pi.lo {
        let full = RatInterval {
            lo: -Rational::one(),
            hi: Rational::one(),
        };
        return (full.clone(), full);
    }
    let (s_a, c_a) = sin_cos_interval(&t.lo, bits);
    let (s_b, c_b) = sin_cos_interval(&t.hi, bits);
    let mut sin_enc = s_a.hull(&s_b);
    let mut cos_enc = c_a.hull(&c_b);
    let pi = pi_interval(bits + 8);
    // include extrema of sin at pi/2 + 2k*pi and -pi/2 + 2k*pi, of cos at
    // 2k*pi and pi + 2k*pi, whenever such a point may lie in [lo, hi]
    let may_contain = |offset_num: i64, offset_den: i64| -> bool {
        // does exist integer k with offset*pi + 2k*pi in t (conservatively)?
        let off = pi.scale(&Rational::new(BigInt::from(offset_num), BigInt::from(offset_den)));
        // k in [ (lo - off.hi) / (2 pi.lo) , (hi - off.lo) / (2 pi.lo) ]
        let klo = (&t.lo - &off.hi) / &two_pi.hi;
        let khi = (&t.hi - &off.lo) / &two_pi.lo;
        floor_to_int(&khi) >= ceil_to_int(&klo)
    };
    if may_contain(1, 2) {
        sin_enc.hi = Rational::one();
    }
    if may_contain(-1, 2) || may_contain(3, 2) {
        sin_enc.lo = -Rational::one();
    }
    if may_contain(0, 1) {
        cos_enc.hi = Rational::one();
    }
    if may_contain(1, 1) || may_contain(-1, 1) {
        cos_enc.lo = -Rational::one();
    }
    (clamp_unit(sin_enc), clamp_unit(cos_enc))
}

fn clamp_unit(mut iv: RatInterval) -> RatInterval {
    let one = Rational::one();
    if iv.hi > one {
        iv.hi = one.clone();
    }
    if iv.lo < -one.clone() {
        iv.lo = -one;
    }
    iv
}

fn round_to_int(q: &Rational) -> BigInt {
    let two = BigInt::from(2);
    let shifted = q + Rational::new(BigInt::one(), two);
    shifted.floor().to_integer()
}

fn floor_to_int(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

fn ceil_to_int(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

/// How a rational is rendered to a fixed number of decimals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Round half away from zero.
    HalfUp,
    /// Truncate toward zero.
    TowardZero,
}

/// Render `q` with exactly `decimals` digits after the point.
pub fn decimal_string(q: &Rational, decimals: usize, mode: Rounding) -> String {
    let scale = num_traits::pow::pow(BigInt::from(10), decimals);
    let scaled = q * Rational::from(scale.clone());
    let num = scaled.numer().clone();
    let den = scaled.denom().clone();
    let (quot, rem) = num.div_rem(&den);
    let n = match mode {
        Rounding::TowardZero => quot,
        Rounding::HalfUp => {
            // |rem/den| >= 1/2 rounds away from zero
            if (&rem * BigInt::from(2)).abs() >= den {
                if num.is_negative() {
                    quot - BigInt::one()
                } else {
                    quot + BigInt::one()
                }
            } else {
                quot
            }
        }
    };
    let negative = n.is_negative();
    let digits = n.abs().to_string();
    let (ip, fp) = if digits.len() > decimals {
        let split = digits.len() - decimals;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        (
            "0".to_string(),
            format!("{:0>width$}", digits, width = decimals),
        )
    };
    let sign = if negative { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{fp}")
    }
}

/// Decimal rendering of an interval; `Some` only when both endpoints render
/// identically (the rendering is then a faithful rounding of the true value).
pub fn interval_decimal(iv: &RatInterval, decimals: usize, mode: Rounding) -> Option<String> {
    let a = decimal_string(&iv.lo, decimals, mode);
    let b = decimal_string(&iv.hi, decimals, mode);
    if a == b {
        Some(a)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, ratio};

    #[test]
    fn sqrt_two_bounds() {
        let (lo, hi) = sqrt_bounds(&int(2), 64);
        assert!(lo.clone() * lo.clone() <= int(2));
        assert!(hi.clone() * hi.clone() >= int(2));
        assert!((&hi - &lo) < ratio(1, 1_000_000_000));
    }

    #[test]
    fn pi_to_forty_bits() {
        let pi = pi_interval(40);
        // 3.14159265358979...
        assert!(pi.lo < ratio(3141592653590i64, 1_000_000_000_000i64));
        assert!(pi.hi > ratio(3141592653589i64, 1_000_000_000_000i64));
        assert!(pi.width() < two_pow_neg(38));
    }

    #[test]
    fn sin_cos_of_one() {
        let (s, c) = sin_cos_interval(&int(1), 50);
        // sin 1 = 0.8414709848..., cos 1 = 0.5403023058...
        assert!(s.lo > ratio(8414709847i64, 10_000_000_000i64));
        assert!(s.hi < ratio(8414709849i64, 10_000_000_000i64));
        assert!(c.lo > ratio(5403023057i64, 10_000_000_000i64));
        assert!(c.hi < ratio(5403023059i64, 10_000_000_000i64));
        assert!(s.width() < two_pow_neg(45));
    }

    #[test]
    fn sin_cos_identity_on_samples() {
        for k in [-7i64, -3, -1, 0, 1, 2, 5, 11, 19] {
            let t = ratio(k, 3);
            let (s, c) = sin_cos_interval(&t, 60);
            let sum = s.pow(2).add(&c.pow(2));
            assert!(sum.contains(&int(1)), "s^2+c^2 enclosure misses 1 at t={k}/3");
        }
    }

    #[test]
    fn atan2_quadrants() {
        let bits = 50;
        // t = 3pi/4: sin = +, cos = -
        let (s, c) = sin_cos_interval(&ratio(2356194490192345i64, 1_000_000_000_000_000i64), bits);
        let t = atan2_interval(&s, &c, bits).unwrap();
        assert!(t.lo > ratio(23, 10) && t.hi < ratio(24, 10));
        // atan2(+small, +1): atan(0.01) = 0.00999966668...
        let t0 = atan2_interval(
            &RatInterval::point(ratio(1, 100)),
            &RatInterval::point(int(1)),
            bits,
        )
        .unwrap();
        assert!(t0.lo > ratio(9999666i64, 1_000_000_000i64));
        assert!(t0.hi < ratio(9999668i64, 1_000_000_000i64));
    }

    #[test]
    fn sin_over_interval_catches_extremum() {
        // [1, 2.5] contains pi/2 where sin = 1
        let iv = RatInterval::new(int(1), ratio(5, 2));
        let (s, _) = sin_cos_over_interval(&iv, 40);
        assert_eq!(s.hi, int(1));
        assert!(s.lo < ratio(605, 1000));
    }

    #[test]
    fn decimal_rendering_modes() {
        assert_eq!(decimal_string(&ratio(977816937, 1_000_000_000), 2, Rounding::HalfUp), "0.98");
        assert_eq!(
            decimal_string(&ratio(977816937, 1_000_000_000), 2, Rounding::TowardZero),
            "0.97"
        );
        assert_eq!(decimal_string(&ratio(-26061, 10000), 2, Rounding::TowardZero), "-2.60");
        assert_eq!(decimal_string(&ratio(-26061, 10000), 2, Rounding::HalfUp), "-2.61");
        assert_eq!(decimal_string(&int(1), 2, Rounding::HalfUp), "1.00");
        assert_eq!(decimal_string(&ratio(5, 1000), 2, Rounding::HalfUp), "0.01");
        assert_eq!(decimal_string(&ratio(5, 1000), 2, Rounding::TowardZero), "0.00");
    }

    #[test]
    fn interval_ops_enclose() {
        let a = RatInterval::new(int(1), int(2));
        let b = RatInterval::new(int(-1), int(3));
        let p = a.mul(&b);
        assert_eq!(p.lo, int(-2));
        assert_eq!(p.hi, int(6));
        let sq = b.pow(2);
        assert_eq!(sq.lo, int(0));
        assert_eq!(sq.hi, int(9));
        assert!(a.div(&b).is_err());
    }
}
