//! Dense univariate polynomials over the integers (primitive form), the
//! workhorse behind square-free decomposition, Sturm chains, and certified
//! root counting.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Monomial, Rational, VarSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// `coeffs[i]` is the coefficient of `X^i`; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UniZ {
    pub coeffs: Vec<BigInt>,
}

impl UniZ {
    pub fn zero() -> Self {
        UniZ { coeffs: vec![] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniZ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Extract a univariate polynomial from a `MultiPoly` supported on a
    /// single variable; rational coefficients are cleared to a primitive
    /// integer polynomial (the root set is unchanged).
    pub fn from_multi(p: &MultiPoly, var: usize) -> Result<UniZ> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let deg = p.degree_in(var) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (m, c) in p.terms() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if i != var && e != 0 {
                    return Err(Error::NotUnivariate);
                }
            }
            let k = m.exponents()[var] as usize;
            coeffs[k] += c.numer() * (&den / c.denom());
        }
        let mut u = UniZ::from_coeffs(coeffs);
        u.make_primitive();
        Ok(u)
    }

    pub fn to_multi(&self, vars: &Arc<VarSet>, var: usize) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            self.coeffs.iter().enumerate().filter_map(|(i, c)| {
                if c.is_zero() {
                    None
                } else {
                    let mut e = vec![0u16; vars.len()];
                    e[var] = u16::try_from(i).expect("degree fits");
                    Some((Monomial(e), Rational::from(c.clone())))
                }
            }),
        )
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide by content and make the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.is_zero() {
            return;
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            for k in self.coeffs.iter_mut() {
                *k = &*k / &c;
            }
        }
    }

    pub fn primitive(mut self) -> Self {
        self.make_primitive();
        self
    }

    pub fn derivative(&self) -> UniZ {
        if self.coeffs.len() <= 1 {
            return UniZ::zero();
        }
        UniZ::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniZ {
        UniZ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniZ) -> UniZ {
        if self.is_zero() || other.is_zero() {
            return UniZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniZ::from_coeffs(out)
    }

    /// Pseudo-remainder: `prem = lc(g)^(deg f - deg g + 1) * f  mod  g`,
    /// together with the sign of that power of `lc(g)` so callers can recover
    /// the sign of the true remainder.
    pub fn pseudo_rem(&self, g: &UniZ) -> (UniZ, i8) {
        assert!(!g.is_zero());
        if self.degree() < g.degree() || self.is_zero() {
            return (self.clone(), 1);
        }
        let d = self.degree() - g.degree();
        let lc = g.leading().clone();
        let mut r = self.coeffs.clone();
        let mut steps = 0usize;
        while r.len() >= g.coeffs.len() && !r.iter().all(|c| c.is_zero()) {
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
            if r.len() < g.coeffs.len() {
                break;
            }
            let shift = r.len() - g.coeffs.len();
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c = &*c * &lc;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[shift + j] -= &top * gc;
            }
            steps += 1;
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        // pad the multiplier to exactly lc^(d+1) so the sign is predictable
        let missing = (d + 1).saturating_sub(steps);
        if missing > 0 {
            let extra = num_traits::pow::pow(lc.clone(), missing);
            for c in r.iter_mut() {
                *c = &*c * &extra;
            }
        }
        let sign = if lc.is_negative() && (d + 1) % 2 == 1 {
            -1
        } else {
            1
        };
        (UniZ::from_coeffs(r), sign)
    }

    /// Exact division (integer quotient); `None` if not exact.
    pub fn div_exact(&self, g: &UniZ) -> Option<UniZ> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UniZ::zero());
        }
        if self.degree() < g.degree() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - g.degree() + 1];
        let lc = g.leading();
        for k in (0..q.len()).rev() {
            let top = r[k + g.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            q[k] = qc.clone();
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[k + j] -= &qc * gc;
            }
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniZ::from_coeffs(q))
    }

    /// GCD via the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &UniZ) -> UniZ {
        let mut a = self.clone().primitive();
        let mut b = other.clone().primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.primitive();
            }
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
    }

    /// Yun's square-free decomposition: pairs `(factor, multiplicity)` with
    /// `prod factor^multiplicity = self` up to a rational scalar.
    pub fn squarefree_decomposition(&self) -> Vec<(UniZ, usize)> {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return vec![];
        }
        let p = self.clone().primitive();
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.is_constant() {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut c = p.div_exact(&g).expect("gcd divides").primitive();
        // d = p'/g - c'
        let mut d = {
            let t = dp.div_exact(&g).expect("gcd divides derivative");
            sub(&t, &c.derivative())
        };
        let mut mult = 1usize;
        loop {
            let a = c.gcd(&d).primitive();
            if a.degree() > 0 {
                out.push((a.clone(), mult));
            }
            let c_next = c.div_exact(&a).expect("factor divides").primitive();
            let t = d.div_exact(&a).expect("factor divides");
            let d_next = sub(&t, &c_next.derivative());
            c = c_next;
            d = d_next;
            mult += 1;
            if c.is_constant() {
                break;
            }
        }
        out
    }

    /// Square-free part (product of distinct irreducible factors).
    pub fn squarefree_part(&self) -> UniZ {
        let mut acc = UniZ::from_coeffs(vec![BigInt::one()]);
        for (f, _) in self.squarefree_decomposition() {
            acc = acc.mul(&f);
        }
        acc.primitive()
    }

    /// Sign of `p(a/b)` computed with integer arithmetic only
    /// (homogeneous Horner: `sum c_i a^i b^(n-i)`).
    pub fn sign_at(&self, value: &Rational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let num = value.numer();
        let den = value.denom();
        let n = self.degree();
        let mut den_pow = BigInt::one();
        let mut acc = self.coeffs[n].clone();
        for i in (0..n).rev() {
            den_pow = &den_pow * den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn eval_rational(&self, value: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * value + Rational::from(c.clone());
        }
        acc
    }

    /// Cauchy root bound: all real roots lie in `[-B, B]`.
    pub fn root_bound(&self) -> Rational {
        assert!(!self.is_zero());
        let lc = Rational::from(self.leading().abs());
        let mut maxq = Rational::zero();
        for c in &self.coeffs[..self.degree()] {
            let q = Rational::from(c.abs()) / &lc;
            if q > maxq {
                maxq = q;
            }
        }
        maxq + Rational::one()
    }
}

fn sub(a: &UniZ, b: &UniZ) -> UniZ {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        out[i] -= c;
    }
    UniZ::from_coeffs(out)
}

/// A Sturm chain for a square-free polynomial.
#[derive(Debug, Clone)]
pub(crate) struct SturmChain {
    pub chain: Vec<UniZ>,
}

impl SturmChain {
    /// Build the canonical chain for a square-free polynomial.
    pub fn new(p: &UniZ) -> SturmChain {
        let mut chain = vec![p.clone().primitive()];
        let dp = p.derivative();
        if dp.is_zero() {
            return SturmChain { chain };
        }
        chain.push(dp.primitive());
        loop {
            let n = chain.len();
            let (prem, sign) = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if prem.is_zero() {
                break;
            }
            // next element is minus the true remainder
            let mut next = if sign > 0 { prem.neg() } else { prem };
            // divide by positive content to keep numbers small; sign preserved
            let mut content = next.content();
            if content.is_negative() {
                content = -content;
            }
            if !content.is_one() && !content.is_zero() {
                for c in next.coeffs.iter_mut() {
                    *c = &*c / &content;
                }
            }
            chain.push(next);
        }
        SturmChain { chain }
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut last: i8 = 0;
        let mut v = 0usize;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        if a == b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn uz(c: &[i64]) -> UniZ {
        UniZ::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn pseudo_rem_matches_school_division() {
        // (x^2 - 2) mod (x - 1) = -1
        let f = uz(&[-2, 0, 1]);
        let g = uz(&[-1, 1]);
        let (r, sign) = f.pseudo_rem(&g);
        assert_eq!(sign, 1);
        assert_eq!(r, uz(&[-1]));
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = uz(&[-2, 1, 1]);
        let b = uz(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), uz(&[-1, 1]));
    }

    #[test]
    fn squarefree_of_perfect_square() {
        // (t-1)^2
        let p = uz(&[1, -2, 1]);
        let d = p.squarefree_decomposition();
        assert_eq!(d, vec![(uz(&[-1, 1]), 2)]);
    }

    #[test]
    fn squarefree_of_already_squarefree() {
        let p = uz(&[-2, 0, 1]); // t^2 - 2
        assert_eq!(p.squarefree_decomposition(), vec![(uz(&[-2, 0, 1]), 1)]);
        let q = uz(&[0, -1, 0, 1]); // t^3 - t
        assert_eq!(q.squarefree_decomposition(), vec![(uz(&[0, -1, 0, 1]), 1)]);
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // (x-1)^2 (x+1)^3 x
        let p = uz(&[-1, 1]);
        let q = uz(&[1, 1]);
        let x = uz(&[0, 1]);
        let f = p.mul(&p).mul(&q).mul(&q).mul(&q).mul(&x);
        let d = f.squarefree_decomposition();
        assert_eq!(d.len(), 3);
        assert_eq!(d[0], (x, 1));
        assert_eq!(d[1], (p, 2));
        assert_eq!(d[2], (q, 3));
    }

    #[test]
    fn sturm_counts_roots_of_quadratic() {
        let p = uz(&[-2, 0, 1]); // t^2 - 2
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_in(&int(-10), &int(10)), 2);
        assert_eq!(chain.count_in(&int(0), &int(10)), 1);
        assert_eq!(chain.count_in(&int(2), &int(10)), 0);
    }

    #[test]
    fn sturm_half_open_endpoints() {
        let p = uz(&[0, -1, 0, 1]); // x^3 - x, roots -1, 0, 1
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_in(&int(-1), &int(1)), 2); // (−1,1] holds 0 and 1
        assert_eq!(chain.count_in(&int(-2), &int(-1)), 1); // (−2,−1] holds −1
        assert_eq!(chain.count_in(&int(0), &int(1)), 1);
        assert_eq!(chain.count_in(&int(1), &int(2)), 0);
    }

    #[test]
    fn sign_at_rational_points() {
        let p = uz(&[-2, 0, 1]);
        assert_eq!(p.sign_at(&crate::poly::ratio(3, 2)), 1);
        assert_eq!(p.sign_at(&crate::poly::ratio(7, 5)), -1);
        let lin = uz(&[-1, 2]); // 2x - 1
        assert_eq!(lin.sign_at(&crate::poly::ratio(1, 2)), 0);
    }
}
