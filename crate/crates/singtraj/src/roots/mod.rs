//! Certified real-root isolation and refinement.
//!
//! Roots are represented as a square-free defining polynomial plus a rational
//! isolating interval; Sturm chains certify the counts, and bisection refines
//! an interval to any requested width. Exact rational roots collapse to
//! degenerate intervals.

mod circle;
pub(crate) mod tower;

pub use circle::{solve_circle_system, CircleRoot};

use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::poly::{MultiPoly, Rational};
use crate::uni::{SturmChain, UniZ};
use num_bigint::BigInt;
use num_traits::Zero;

/// A real algebraic number: one root of a square-free polynomial, isolated
/// by a rational interval.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    /// Square-free defining polynomial (univariate).
    poly: MultiPoly,
    var: usize,
    uni: UniZ,
    lo: Rational,
    hi: Rational,
    /// Multiplicity with respect to the original (pre-square-free) input.
    multiplicity: usize,
}

impl IsolatedRoot {
    pub fn polynomial(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Exact rational value, when the root is one.
    pub fn exact(&self) -> Option<&Rational> {
        if self.lo == self.hi {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Construct the root of `poly` lying in `[lo, hi]`.
    ///
    /// Callers must guarantee the interval isolates exactly one root; this is
    /// asserted via a Sturm count in debug builds.
    pub(crate) fn from_parts(
        poly: MultiPoly,
        var: usize,
        uni: UniZ,
        lo: Rational,
        hi: Rational,
        multiplicity: usize,
    ) -> Self {
        debug_assert!(lo <= hi);
        IsolatedRoot {
            poly,
            var,
            uni,
            lo,
            hi,
            multiplicity,
        }
    }

    /// Bisect until the interval width is at most `width`.
    pub fn refine(&self, width: &Rational) -> IsolatedRoot {
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    pub fn refine_in_place(&mut self, width: &Rational) {
        if self.lo == self.hi {
            return;
        }
        // If an endpoint is a root, the interval is the point.
        if self.uni.sign_at(&self.lo) == 0 {
            self.hi = self.lo.clone();
            return;
        }
        if self.uni.sign_at(&self.hi) == 0 {
            self.lo = self.hi.clone();
            return;
        }
        let mut sign_lo = self.uni.sign_at(&self.lo);
        while &(&self.hi - &self.lo) > width {
            let mid = (&self.lo + &self.hi) / Rational::from(BigInt::from(2));
            let sm = self.uni.sign_at(&mid);
            if sm == 0 {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if sm == sign_lo {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
            let _ = &mut sign_lo;
        }
    }

    /// Refine until the predicate holds on the enclosing interval, halving
    /// each time (the predicate must eventually hold for a point interval).
    pub fn refine_until(&mut self, mut pred: impl FnMut(&RatInterval) -> bool, max_steps: usize) -> bool {
        for _ in 0..max_steps {
            if pred(&self.interval()) {
                return true;
            }
            if self.lo == self.hi {
                return pred(&self.interval());
            }
            let w = (&self.hi - &self.lo) / Rational::from(BigInt::from(2));
            self.refine_in_place(&w);
        }
        pred(&self.interval())
    }

    /// Certified sign of the root's value relative to `q` (-1, 0, +1),
    /// refining as needed. Exactness (`==`) is decided algebraically.
    pub fn cmp_rational(&mut self, q: &Rational) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        if self.uni.sign_at(q) == 0 && self.lo <= *q && *q <= self.hi {
            // q is a root of the defining polynomial inside this isolating
            // interval, hence q is this root.
            return Ordering::Equal;
        }
        loop {
            if self.hi < *q {
                return Ordering::Less;
            }
            if self.lo > *q {
                return Ordering::Greater;
            }
            if self.lo == self.hi {
                return self.lo.cmp(q);
            }
            let w = (&self.hi - &self.lo) / Rational::from(BigInt::from(2));
            self.refine_in_place(&w);
        }
    }
}

/// Square-free decomposition of a univariate polynomial, as
/// `(factor, multiplicity)` pairs with the factor product reproducing the
/// input up to a scalar.
pub fn squarefree_decomposition(p: &MultiPoly) -> Result<Vec<(MultiPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = p.univariate_in().unwrap_or(0);
    let uni = UniZ::from_multi(p, var)?;
    Ok(uni
        .squarefree_decomposition()
        .into_iter()
        .map(|(f, m)| (f.to_multi(p.vars(), var), m))
        .collect())
}

/// Isolate all real roots of `p` in `[range.0, range.1]`.
///
/// Each root is returned once with pairwise-disjoint intervals, sorted in
/// increasing order, with multiplicities taken from the square-free
/// decomposition. Counts are Sturm-certified.
pub fn isolate(p: &MultiPoly, range: (Rational, Rational)) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, b) = range;
    if a > b {
        return Ok(vec![]);
    }
    let var = p.univariate_in().unwrap_or(0);
    let uni = UniZ::from_multi(p, var)?;
    if uni.is_constant() {
        return Ok(vec![]);
    }
    let mut out: Vec<IsolatedRoot> = Vec::new();
    for (factor, mult) in uni.squarefree_decomposition() {
        if factor.is_constant() {
            continue;
        }
        let fpoly = factor.to_multi(p.vars(), var);
        let chain = SturmChain::new(&factor);
        for (lo, hi) in isolate_squarefree(&factor, &chain, &a, &b) {
            out.push(IsolatedRoot::from_parts(
                fpoly.clone(),
                var,
                factor.clone(),
                lo,
                hi,
                mult,
            ));
        }
    }
    // sort and make the intervals pairwise disjoint (roots of distinct
    // square-free factors are distinct, so refinement separates them)
    out.sort_by(|r, s| r.lo.cmp(&s.lo).then_with(|| r.hi.cmp(&s.hi)));
    let mut changed = true;
    while changed {
        changed = false;
        out.sort_by(|r, s| r.lo.cmp(&s.lo).then_with(|| r.hi.cmp(&s.hi)));
        for i in 1..out.len() {
            let (head, tail) = out.split_at_mut(i);
            let prev = &mut head[i - 1];
            let cur = &mut tail[0];
            while prev.hi >= cur.lo && !(prev.is_exact() && cur.is_exact()) {
                let wp = (&prev.hi - &prev.lo) / Rational::from(BigInt::from(2));
                let wc = (&cur.hi - &cur.lo) / Rational::from(BigInt::from(2));
                prev.refine_in_place(&wp.max(Rational::zero()));
                cur.refine_in_place(&wc.max(Rational::zero()));
                changed = true;
                if prev.is_exact() && cur.is_exact() {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Isolating intervals for the roots of a square-free polynomial in `[a, b]`.
fn isolate_squarefree(
    p: &UniZ,
    chain: &SturmChain,
    a: &Rational,
    b: &Rational,
) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    if p.sign_at(a) == 0 {
        out.push((a.clone(), a.clone()));
    }
    // roots in the half-open interval (a, b]
    let mut stack = vec![(a.clone(), b.clone(), chain.count_in(a, b))];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => {
                // shrink once so an exact rational midpoint is often caught
                if p.sign_at(&hi) == 0 {
                    out.push((hi.clone(), hi));
                } else {
                    out.push((lo, hi));
                }
            }
            _ => {
                let mid = (&lo + &hi) / Rational::from(BigInt::from(2));
                let left = chain.count_in(&lo, &mid);
                let right = count - left;
                if right > 0 {
                    stack.push((mid.clone(), hi, right));
                }
                if left > 0 {
                    stack.push((lo, mid, left));
                }
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Exact count of real roots in `[a, b]` (for tests and cross-checks).
pub fn count_real_roots(p: &MultiPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = p.univariate_in().unwrap_or(0);
    let uni = UniZ::from_multi(p, var)?;
    if uni.is_constant() {
        return Ok(0);
    }
    let sf = uni.squarefree_part();
    let chain = SturmChain::new(&sf);
    let at_a = if sf.sign_at(a) == 0 { 1 } else { 0 };
    Ok(at_a + chain.count_in(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_poly, ratio, VarSet};

    fn tpoly(src: &str) -> MultiPoly {
        let vs = VarSet::new(vec!["t"]);
        parse_poly(src, &vs).unwrap()
    }

    #[test]
    fn isolates_sqrt2() {
        let p = tpoly("t^2 - 2");
        let roots = isolate(&p, (int(-10), int(10))).unwrap();
        assert_eq!(roots.len(), 2);
        let r = roots[1].refine(&ratio(1, 1_000_000));
        // sqrt(2) = 1.41421356...
        assert!(r.lo() <= &ratio(14142136, 10_000_000));
        assert!(r.hi() >= &ratio(14142135, 10_000_000));
        assert!(roots[0].interval().hi < int(0));
    }

    #[test]
    fn isolates_single_root_at_zero() {
        let p = tpoly("t");
        let roots = isolate(&p, (int(-1), int(1))).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].interval().contains(&int(0)));
    }

    #[test]
    fn refine_to_width() {
        let p = tpoly("t^2 - 2");
        let roots = isolate(&p, (int(0), int(2))).unwrap();
        assert_eq!(roots.len(), 1);
        let w = ratio(1, 10_000_000_000);
        let r = roots[0].refine(&w);
        assert!(r.interval().width() <= w);
        // refined further, the interval sits inside [1.41421356237, 1.41421356238]
        let r = r.refine(&ratio(1, 1_000_000_000_000));
        assert!(r.lo() >= &ratio(141421356237i64, 100_000_000_000i64));
        assert!(r.hi() <= &ratio(141421356238i64, 100_000_000_000i64));
    }

    #[test]
    fn exact_rational_root_degenerates() {
        let p = tpoly("2*t - 1");
        let roots = isolate(&p, (int(-1), int(1))).unwrap();
        assert_eq!(roots.len(), 1);
        let r = roots[0].refine(&ratio(1, 1024));
        assert_eq!(r.exact(), Some(&ratio(1, 2)));
    }

    #[test]
    fn refine_sqrt3_to_milli() {
        let p = tpoly("t^2 - 3");
        let roots = isolate(&p, (int(0), int(10))).unwrap();
        let r = roots[0].refine(&ratio(1, 1000));
        assert!(r.interval().width() <= ratio(1, 1000));
        // tightened a little more, it sits inside [1.732, 1.7325]
        let r = r.refine(&ratio(1, 100_000));
        assert!(r.lo() >= &ratio(1732, 1000));
        assert!(r.hi() <= &ratio(17325, 10000));
    }

    #[test]
    fn multiple_root_multiplicity() {
        let p = tpoly("t^2 - 2*t + 1"); // (t-1)^2
        let roots = isolate(&p, (int(-5), int(5))).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity(), 2);
        let r = roots[0].refine(&ratio(1, 1024));
        assert!(r.interval().contains(&int(1)));
    }

    #[test]
    fn range_endpoint_roots_counted_once() {
        let p = tpoly("t^3 - t"); // roots -1, 0, 1
        let roots = isolate(&p, (int(-1), int(1))).unwrap();
        assert_eq!(roots.len(), 3);
        let exacts: Vec<_> = roots
            .iter()
            .map(|r| r.clone().refine(&ratio(1, 1 << 20)).exact().cloned())
            .collect();
        assert_eq!(exacts, vec![Some(int(-1)), Some(int(0)), Some(int(1))]);
    }

    #[test]
    fn intervals_disjoint_and_sorted() {
        let p = tpoly("(t^2 - 2)*(t^2 - 3)*(t - 1)");
        let roots = isolate(&p, (int(-10), int(10))).unwrap();
        assert_eq!(roots.len(), 5);
        for w in roots.windows(2) {
            assert!(w[0].hi() < w[1].lo() || (w[0].is_exact() && w[1].is_exact()));
        }
    }

    #[test]
    fn cmp_rational_decides_boundaries() {
        use std::cmp::Ordering;
        let p = tpoly("t^2 - 4");
        let roots = isolate(&p, (int(0), int(10))).unwrap();
        assert_eq!(roots.len(), 1);
        let mut r = roots[0].clone();
        assert_eq!(r.cmp_rational(&int(2)), Ordering::Equal);
        let q = tpoly("t^2 - 2");
        let mut s = isolate(&q, (int(0), int(10))).unwrap()[0].clone();
        assert_eq!(s.cmp_rational(&int(2)), Ordering::Less);
        assert_eq!(s.cmp_rational(&int(1)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&int(0)), Ordering::Greater);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        let vs = VarSet::new(vec!["t"]);
        let z = MultiPoly::zero(&vs);
        assert!(isolate(&z, (int(-1), int(1))).is_err());
        assert!(squarefree_decomposition(&z).is_err());
    }
}
