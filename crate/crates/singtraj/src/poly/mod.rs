//! Sparse multivariate polynomials over the rationals.
//!
//! Coefficient arithmetic is exact: every coefficient is a reduced
//! `BigRational` and no floating point enters the kernel. Polynomials are
//! kept in canonical form (a sorted term map with no explicit zeros), so two
//! equal polynomials compare equal structurally.

mod groebner;
mod matrix;
mod order;
mod parse;
mod print;

pub use groebner::{eliminate, groebner_basis, GroebnerBasis, Limits};
pub use matrix::determinant;
pub use order::{BaseOrder, MonomialOrder};
pub use parse::parse_poly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// An ordered set of variable names shared by a family of polynomials.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable name `{n}`");
        }
        Arc::new(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn describe(&self) -> String {
        self.names.join(",")
    }
}

/// An exponent vector over some `VarSet`.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vector; it is the canonical storage order of term maps, not the algebraic
/// monomial order (see [`MonomialOrder`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub(crate) Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A sparse multivariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut p = Self::zero(vars);
        p.terms
            .insert(Monomial::var(vars.len(), idx), Rational::one());
        Ok(p)
    }

    pub fn from_terms(
        vars: &Arc<VarSet>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0[var] as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] != 0)
    }

    /// True when the support uses only variables in `allowed`.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.terms
            .keys()
            .all(|m| m.0.iter().enumerate().all(|(i, &e)| e == 0 || allowed[i]))
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let n = self.vars.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    /// If the polynomial involves exactly one variable, its index.
    pub fn univariate_in(&self) -> Option<usize> {
        let s = self.support();
        match s.len() {
            0 => None,
            1 => Some(s[0]),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch {
                left: self.vars.describe(),
                right: other.vars.describe(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * k;
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = Self::one(&self.vars);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same varset");
        }
        out
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<MultiPoly> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[idx] = e - 1;
            out.add_term(me, c * Rational::from(BigInt::from(e)));
        }
        Ok(out)
    }

    /// Substitute rational values for a subset of the variables.
    pub fn eval_partial(&self, assign: &[(usize, Rational)]) -> MultiPoly {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut me = m.clone();
            for (idx, val) in assign {
                let e = me.0[*idx];
                if e > 0 {
                    let mut p = Rational::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    coeff *= p;
                    me.0[*idx] = 0;
                }
            }
            out.add_term(me, coeff);
        }
        out
    }

    /// Evaluate at a full rational point (one value per variable).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute every variable by a polynomial over a target variable set.
    ///
    /// Powers of each image are cached, so repeated high-degree composition
    /// stays affordable.
    pub fn substitute_all(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .ok_or(Error::EmptyGenerators)?;
        for im in images {
            if im.vars != target {
                return Err(Error::VarSetMismatch {
                    left: target.describe(),
                    right: im.vars.describe(),
                });
            }
        }
        // power cache per variable
        let mut cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(&target), p.clone()])
            .collect();
        let mut power = |var: usize, e: usize, cache: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
            while cache[var].len() <= e {
                let last = cache[var].last().unwrap().clone();
                let next = last.checked_mul(&images[var]).unwrap();
                cache[var].push(next);
            }
            cache[var][e].clone()
        };
        let mut acc = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.checked_mul(&power(i, e as usize, &mut cache))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Map this polynomial onto another variable set by name.
    ///
    /// Every variable in the support must exist in `target`.
    pub fn rename_onto(&self, target: &Arc<VarSet>) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.involves(i) {
                        return Err(Error::UnknownVariable(name.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut me = vec![0u16; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    me[map[i].unwrap()] = e;
                }
            }
            out.add_term(Monomial(me), c.clone());
        }
        Ok(out)
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Clear denominators and divide by integer content; make the leading
    /// coefficient (under `order`) positive. Returns the zero polynomial
    /// unchanged.
    pub fn primitive_integer(&self, order: &MonomialOrder) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut nums: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        let mut content = BigInt::zero();
        for (_, n) in &nums {
            content = content.gcd(n);
        }
        let lead = self.leading_term(order).unwrap().0.clone();
        let lead_coeff = nums
            .iter()
            .find(|(m, _)| *m == lead)
            .map(|(_, n)| n.clone())
            .unwrap();
        if lead_coeff.is_negative() {
            content = -content;
        }
        for (_, n) in nums.iter_mut() {
            *n = &*n / &content;
        }
        MultiPoly::from_terms(
            &self.vars,
            nums.into_iter()
                .map(|(m, n)| (m, Rational::from(n))),
        )
    }

    /// Divide the leading coefficient out so the polynomial is monic under
    /// `order`.
    pub fn monic(&self, order: &MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact division: returns `self / divisor` when the division leaves no
    /// remainder, `None` otherwise.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let order = MonomialOrder::GrevLex;
        let (dm, dc) = divisor.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero(&self.vars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let mut qt = MultiPoly::zero(&self.vars);
            qt.add_term(qm, qc);
            rem = rem.checked_sub(&qt.checked_mul(divisor).unwrap()).unwrap();
            quo = quo.checked_add(&qt).unwrap();
        }
        Some(quo)
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("varset mismatch in +")
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("varset mismatch in -")
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("varset mismatch in *")
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Arc<VarSet> {
        VarSet::new(vec!["x", "y", "z", "rho1", "rho2", "rho3"])
    }

    fn p(src: &str, vars: &Arc<VarSet>) -> MultiPoly {
        parse_poly(src, vars).unwrap()
    }

    #[test]
    fn cancellation() {
        let vs = xyz();
        let a = p("x + y", &vs);
        let b = p("x - y", &vs);
        assert_eq!(&a + &b, p("2*x", &vs));
    }

    #[test]
    fn square_expansion() {
        let vs = xyz();
        let a = p("x - rho1", &vs);
        assert_eq!(&a * &a, p("x^2 - 2*rho1*x + rho1^2", &vs));
    }

    #[test]
    fn leg_constraint_expansion() {
        // (x - rho1)^2 + y^2 + z^2 - 4, expanded
        let vs = xyz();
        let leg = p("(x - rho1)^2 + y^2 + z^2 - 4", &vs);
        assert_eq!(leg, p("x^2 - 2*rho1*x + rho1^2 + y^2 + z^2 - 4", &vs));
    }

    #[test]
    fn partial_derivatives() {
        let vs = xyz();
        let leg = p("(x - rho1)^2 + y^2 + z^2 - 4", &vs);
        assert_eq!(leg.partial_derivative("x").unwrap(), p("2*x - 2*rho1", &vs));
        assert_eq!(
            leg.partial_derivative("rho1").unwrap(),
            p("-2*x + 2*rho1", &vs)
        );
        let leg3 = p("x^2 + y^2 + (z - rho3)^2 - 4", &vs);
        assert_eq!(leg3.partial_derivative("y").unwrap(), p("2*y", &vs));
        assert!(leg.partial_derivative("w").is_err());
    }

    #[test]
    fn varset_mismatch_is_an_error() {
        let a = MultiPoly::one(&VarSet::new(vec!["x"]));
        let b = MultiPoly::one(&VarSet::new(vec!["y"]));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn exact_division() {
        let vs = xyz();
        let a = p("x^2 - y^2", &vs);
        let b = p("x - y", &vs);
        assert_eq!(a.div_exact(&b).unwrap(), p("x + y", &vs));
        assert!(p("x^2 + y", &vs).div_exact(&b).is_none());
    }

    #[test]
    fn substitution_composes() {
        let vs = VarSet::new(vec!["x", "y"]);
        let target = VarSet::new(vec!["s", "c"]);
        let f = p("x^2 + y", &vs);
        let images = vec![
            parse_poly("s + c", &target).unwrap(),
            parse_poly("s*c", &target).unwrap(),
        ];
        let g = f.substitute_all(&images).unwrap();
        assert_eq!(g, parse_poly("s^2 + 2*s*c + c^2 + s*c", &target).unwrap());
    }
}
