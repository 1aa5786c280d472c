//! Buchberger's algorithm with the normal selection strategy, Gebauer-Möller
//! pair pruning, and fraction-free (integer, primitive) reduction.
//!
//! Elimination ideals are computed through a block order: leading block
//! compared first, graded reverse lex inside each block.

use super::{BaseOrder, MonomialOrder, Monomial, MultiPoly, Rational, VarSet};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

/// Resource ceilings for basis computations. Exceeding one aborts with an
/// explicit error; results are never silently truncated.
#[derive(Debug, Clone)]
pub struct Limits {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 5000,
            max_degree: 64,
        }
    }
}

/// A reduced Gröbner basis: monic generators, sorted by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    gens: Vec<MultiPoly>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True normal form over the rationals (no pseudo scaling); the remainder
    /// is zero exactly when `f` lies in the ideal.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let order = &self.order;
        let mut rem = MultiPoly::zero(f.vars());
        let mut work = f.clone();
        'outer: while !work.is_zero() {
            let (lm, lc) = {
                let (m, c) = work.leading_term(order).unwrap();
                (m.clone(), c.clone())
            };
            for g in &self.gens {
                let (gm, _) = g.leading_term(order).unwrap();
                if let Some(u) = lm.div(gm) {
                    // g is monic
                    let mut t = MultiPoly::zero(f.vars());
                    t.add_term(u, lc.clone());
                    work = work.checked_sub(&t.checked_mul(g).unwrap()).unwrap();
                    continue 'outer;
                }
            }
            let mut t = MultiPoly::zero(f.vars());
            t.add_term(lm.clone(), lc);
            rem = rem.checked_add(&t).unwrap();
            work = work.checked_sub(&t).unwrap();
        }
        rem
    }

    pub fn reduces_to_zero(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Zero-dimensionality test: for every variable some leading monomial is
    /// a pure power of it (or the ideal is the whole ring).
    pub fn is_zero_dimensional(&self) -> bool {
        if self
            .gens
            .iter()
            .any(|g| g.constant_value().map(|c| !c.is_zero()).unwrap_or(false))
        {
            return true; // unit ideal: empty variety
        }
        let nvars = match self.gens.first() {
            Some(g) => g.vars().len(),
            None => return false,
        };
        (0..nvars).all(|v| {
            self.gens.iter().any(|g| {
                let (lm, _) = g.leading_term(&self.order).unwrap();
                lm.exponents().iter().enumerate().all(|(i, &e)| {
                    if i == v {
                        e > 0
                    } else {
                        e == 0
                    }
                })
            })
        })
    }
}

// ---------------------------------------------------------------------------
// internal integer representation
// ---------------------------------------------------------------------------

/// Terms sorted descending under the active order; primitive integer
/// coefficients with a positive leading coefficient.
#[derive(Debug, Clone)]
struct GbPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl GbPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn from_multi(p: &MultiPoly, order: &MonomialOrder) -> Option<GbPoly> {
        if p.is_zero() {
            return None;
        }
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut g = GbPoly { terms };
        g.normalize();
        Some(g)
    }

    fn to_monic_multi(&self, vars: &Arc<VarSet>) -> MultiPoly {
        let lc = Rational::from(self.lc().clone());
        MultiPoly::from_terms(
            vars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from(c.clone()) / &lc)),
        )
    }

    fn to_primitive_multi(&self, vars: &Arc<VarSet>) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from(c.clone()))),
        )
    }

    /// Divide by integer content; flip the sign so the leading coefficient is
    /// positive.
    fn normalize(&mut self) {
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        if !content.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &content;
            }
        }
    }
}

/// `scale_a * f - scale_b * (u * g)`, both inputs sorted descending.
fn combine(
    f: &GbPoly,
    scale_a: &BigInt,
    g: &GbPoly,
    scale_b: &BigInt,
    u: &Monomial,
    order: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.terms.len() && j < g.terms.len() {
        let gm = g.terms[j].0.mul(u);
        match order.cmp(&f.terms[i].0, &gm) {
            Ordering::Greater => {
                out.push((f.terms[i].0.clone(), &f.terms[i].1 * scale_a));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(&g.terms[j].1 * scale_b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &f.terms[i].1 * scale_a - &g.terms[j].1 * scale_b;
                if !c.is_zero() {
                    out.push((gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < f.terms.len() {
        out.push((f.terms[i].0.clone(), &f.terms[i].1 * scale_a));
        i += 1;
    }
    while j < g.terms.len() {
        out.push((g.terms[j].0.mul(u), -(&g.terms[j].1 * scale_b)));
        j += 1;
    }
    out
}

/// Full normal form of `f` modulo `basis` (indices in `alive`), fraction-free.
/// Returns `None` when the remainder is zero.
fn normal_form_int(
    mut f: GbPoly,
    basis: &[GbPoly],
    alive: &[usize],
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<Option<GbPoly>> {
    let mut pos = 0usize;
    let mut steps = 0usize;
    while pos < f.terms.len() {
        let reducer = alive
            .iter()
            .copied()
            .find(|&k| f.terms[pos].0.div(basis[k].lm()).is_some());
        match reducer {
            None => pos += 1,
            Some(k) => {
                let g = &basis[k];
                let u = f.terms[pos].0.div(g.lm()).unwrap();
                let d = f.terms[pos].1.gcd(g.lc());
                let scale_a = g.lc() / &d; // positive
                let scale_b = &f.terms[pos].1 / &d;
                let head: Vec<(Monomial, BigInt)> = f.terms[..pos]
                    .iter()
                    .map(|(m, c)| (m.clone(), c * &scale_a))
                    .collect();
                let tail = GbPoly {
                    terms: f.terms[pos..].to_vec(),
                };
                let mut merged = head;
                merged.extend(combine(&tail, &scale_a, g, &scale_b, &u, order));
                f.terms = merged;
                if f.terms.is_empty() {
                    return Ok(None);
                }
                let deg = f.total_degree();
                if deg > limits.max_degree {
                    return Err(Error::DegreeCeiling {
                        degree: deg,
                        limit: limits.max_degree,
                    });
                }
                steps += 1;
                if steps % 16 == 0 {
                    f.normalize();
                }
            }
        }
    }
    if f.terms.is_empty() {
        Ok(None)
    } else {
        f.normalize();
        Ok(Some(f))
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Möller update: prune old pairs against the new element and build
/// the pruned set of new pairs.
fn update_pairs(
    pairs: &mut Vec<Pair>,
    basis: &[GbPoly],
    alive: &[usize],
    t: usize,
    order: &MonomialOrder,
) {
    let lm_t = basis[t].lm().clone();
    // prune old pairs via the chain criterion
    pairs.retain(|p| {
        if p.lcm.div(&lm_t).is_none() {
            return true;
        }
        let lcm_it = basis[p.i].lm().lcm(&lm_t);
        let lcm_jt = basis[p.j].lm().lcm(&lm_t);
        lcm_it == p.lcm || lcm_jt == p.lcm
    });

    // candidate new pairs
    let mut cand: Vec<Pair> = alive
        .iter()
        .copied()
        .filter(|&i| i != t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: basis[i].lm().lcm(&lm_t),
        })
        .collect();

    // keep only pairs with minimal lcm (divisibility-wise)
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].lcm != cand[a].lcm && cand[a].lcm.div(&cand[b].lcm).is_some() {
                keep[a] = false;
                break;
            }
        }
    }
    // among equal lcms keep a single representative, unless some pair in the
    // class has coprime leading monomials (then the whole class is dropped)
    let mut result: Vec<Pair> = Vec::new();
    let mut used: Vec<bool> = vec![false; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] || used[a] {
            continue;
        }
        let mut class = vec![a];
        for b in a + 1..cand.len() {
            if keep[b] && !used[b] && cand[b].lcm == cand[a].lcm {
                class.push(b);
                used[b] = true;
            }
        }
        let coprime = class
            .iter()
            .any(|&k| basis[cand[k].i].lm().is_coprime(&lm_t));
        if !coprime {
            result.push(cand[class[0]].clone());
        }
    }
    cand = result;
    pairs.append(&mut cand);
}

fn select_pair(pairs: &mut Vec<Pair>, order: &MonomialOrder) -> Pair {
    let mut best = 0;
    for k in 1..pairs.len() {
        let c = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
        let better = match c {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => (pairs[k].j, pairs[k].i) < (pairs[best].j, pairs[best].i),
        };
        if better {
            best = k;
        }
    }
    pairs.swap_remove(best)
}

/// Compute the reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(
    gens: &[MultiPoly],
    order: MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let vars = gens[0].vars().clone();
    for g in gens {
        if *g.vars() != vars {
            return Err(Error::VarSetMismatch {
                left: vars.names().join(","),
                right: g.vars().names().join(","),
            });
        }
        let deg = g.total_degree();
        if deg > limits.max_degree {
            return Err(Error::DegreeCeiling {
                degree: deg,
                limit: limits.max_degree,
            });
        }
    }

    let mut basis: Vec<GbPoly> = Vec::new();
    let mut alive: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut seed: Vec<GbPoly> = gens
        .iter()
        .filter_map(|g| GbPoly::from_multi(g, &order))
        .collect();
    if seed.is_empty() {
        // all generators were zero: the zero ideal
        return Ok(GroebnerBasis {
            gens: vec![],
            order,
            reduced: true,
        });
    }
    // deterministic seeding order: by leading monomial, then term count
    seed.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm())
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
            .then_with(|| a.terms.cmp(&b.terms))
    });

    for s in seed {
        if let Some(r) = normal_form_int(s, &basis, &alive, &order, limits)? {
            let t = basis.len();
            basis.push(r);
            update_pairs(&mut pairs, &basis, &alive, t, &order);
            alive.retain(|&i| basis[i].lm().div(basis[t].lm()).is_none());
            alive.push(t);
        }
    }

    while !pairs.is_empty() {
        let pair = select_pair(&mut pairs, &order);
        if pair.lcm.degree() > limits.max_degree {
            return Err(Error::DegreeCeiling {
                degree: pair.lcm.degree(),
                limit: limits.max_degree,
            });
        }
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        let uf = pair.lcm.div(f.lm()).unwrap();
        let ug = pair.lcm.div(g.lm()).unwrap();
        let d = f.lc().gcd(g.lc());
        let cf = g.lc() / &d;
        let cg = f.lc() / &d;
        // S-polynomial: cf * uf * f - cg * ug * g
        let shifted_f = GbPoly {
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&uf), c.clone()))
                .collect(),
        };
        let spoly_terms = combine(&shifted_f, &cf, g, &cg, &ug, &order);
        if spoly_terms.is_empty() {
            continue;
        }
        let spoly = GbPoly { terms: spoly_terms };
        if let Some(r) = normal_form_int(spoly, &basis, &alive, &order, limits)? {
            let t = basis.len();
            basis.push(r);
            if basis.len() > limits.max_basis {
                return Err(Error::BasisCeiling {
                    size: basis.len(),
                    limit: limits.max_basis,
                });
            }
            update_pairs(&mut pairs, &basis, &alive, t, &order);
            alive.retain(|&i| basis[i].lm().div(basis[t].lm()).is_none());
            alive.push(t);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another's
    let mut minimal: Vec<usize> = Vec::new();
    let mut by_lm: Vec<usize> = alive.clone();
    by_lm.sort_by(|&a, &b| order.cmp(basis[a].lm(), basis[b].lm()));
    for &k in &by_lm {
        if minimal
            .iter()
            .all(|&m| basis[k].lm().div(basis[m].lm()).is_none())
        {
            minimal.push(k);
        }
    }

    // tail-reduce each survivor against the others
    let mut reduced: Vec<GbPoly> = Vec::new();
    for (pos, &k) in minimal.iter().enumerate() {
        let others: Vec<usize> = minimal
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != pos)
            .map(|(_, &m)| m)
            .collect();
        let r = normal_form_int(basis[k].clone(), &basis, &others, &order, limits)?
            .expect("minimal generator cannot reduce to zero");
        reduced.push(r);
    }

    let mut out: Vec<MultiPoly> = reduced.iter().map(|g| g.to_monic_multi(&vars)).collect();
    out.sort_by(|a, b| {
        let (la, _) = a.leading_term(&order).unwrap();
        let (lb, _) = b.leading_term(&order).unwrap();
        order.cmp(la, lb)
    });
    Ok(GroebnerBasis {
        gens: out,
        order,
        reduced: true,
    })
}

/// Generators of the elimination ideal obtained by projecting away the named
/// variables.
///
/// Variables are eliminated one at a time (elimination ideals compose), each
/// step under a block order with the dropped variable leading; this is orders
/// of magnitude cheaper than a single multi-variable block elimination on the
/// systems that arise here.
///
/// Output polynomials are primitive (integer coefficients, content one,
/// positive leading coefficient) since an elimination ideal is only defined
/// up to units.
pub fn eliminate(gens: &[MultiPoly], drop: &[&str], limits: &Limits) -> Result<Vec<MultiPoly>> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let vars = gens[0].vars().clone();
    let mut drop_idx = Vec::new();
    for name in drop {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable((*name).to_string()))?;
        if !drop_idx.contains(&idx) {
            drop_idx.push(idx);
        }
    }
    drop_idx.sort_unstable();

    let mut current: Vec<MultiPoly> = gens.to_vec();
    for &idx in &drop_idx {
        current = eliminate_single(&current, idx, limits)?;
        if current.is_empty() {
            return Ok(current);
        }
    }
    current.sort_by(|a, b| {
        let la = a.leading_term(&MonomialOrder::GrevLex).unwrap().0.clone();
        let lb = b.leading_term(&MonomialOrder::GrevLex).unwrap().0.clone();
        MonomialOrder::GrevLex
            .cmp(&la, &lb)
            .then_with(|| a.num_terms().cmp(&b.num_terms()))
    });
    Ok(current)
}

/// One elimination step: project away the variable at `idx`.
fn eliminate_single(gens: &[MultiPoly], idx: usize, limits: &Limits) -> Result<Vec<MultiPoly>> {
    let vars = gens[0].vars().clone();
    let mut permuted_names: Vec<String> = vec![vars.name(idx).to_string()];
    for i in 0..vars.len() {
        if i != idx {
            permuted_names.push(vars.name(i).to_string());
        }
    }
    let evars = VarSet::new(permuted_names);
    let order = MonomialOrder::Block {
        split: 1,
        first: BaseOrder::GrevLex,
        second: BaseOrder::GrevLex,
    };

    let egens: Vec<MultiPoly> = gens
        .iter()
        .map(|g| g.rename_onto(&evars))
        .collect::<Result<_>>()?;
    let gb = groebner_basis(&egens, order, limits)?;

    let mut allowed = vec![true; evars.len()];
    allowed[0] = false;
    gb.generators()
        .iter()
        .filter(|g| g.supported_on(&allowed))
        .map(|g| {
            g.rename_onto(&vars)
                .map(|p| p.primitive_integer(&MonomialOrder::GrevLex))
        })
        .collect::<Result<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, ratio};

    fn vs2() -> Arc<VarSet> {
        VarSet::new(vec!["x", "y"])
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let v = vs2();
        let x = parse_poly("x", &v).unwrap();
        let gb = groebner_basis(&[x.clone()], MonomialOrder::Lex, &Limits::default()).unwrap();
        assert_eq!(gb.generators(), &[x]);
    }

    #[test]
    fn circle_and_line_under_lex() {
        let v = vs2();
        let f = parse_poly("x^2 + y^2 - 1", &v).unwrap();
        let g = parse_poly("x - y", &v).unwrap();
        let gb =
            groebner_basis(&[f.clone(), g.clone()], MonomialOrder::Lex, &Limits::default())
                .unwrap();
        // substituting x = y gives 2y^2 - 1 = 0, monic: y^2 - 1/2
        let half = MultiPoly::constant(&v, ratio(1, 2));
        let y2 = parse_poly("y^2", &v).unwrap();
        let expect_y = y2.checked_sub(&half).unwrap();
        assert_eq!(gb.generators().len(), 2);
        assert!(gb.generators().contains(&g));
        assert!(gb.generators().contains(&expect_y));
        // inputs are members
        assert!(gb.reduces_to_zero(&f));
        assert!(gb.reduces_to_zero(&g));
    }

    #[test]
    fn permuted_generators_give_identical_basis() {
        let v = VarSet::new(vec!["x", "y", "z"]);
        let gens = vec![
            parse_poly("x^2 + y^2 + z^2 - 4", &v).unwrap(),
            parse_poly("x*y - z", &v).unwrap(),
            parse_poly("x - y + z^2", &v).unwrap(),
        ];
        let a = groebner_basis(&gens, MonomialOrder::GrevLex, &Limits::default()).unwrap();
        let permuted = vec![gens[2].clone(), gens[0].clone(), gens[1].clone()];
        let b = groebner_basis(&permuted, MonomialOrder::GrevLex, &Limits::default()).unwrap();
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn eliminate_simple_substitution() {
        let v = VarSet::new(vec!["x", "y", "z", "rho1"]);
        let leg = parse_poly("(x - rho1)^2 + y^2 + z^2 - 4", &v).unwrap();
        let b0 = parse_poly("rho1", &v).unwrap();
        let out = eliminate(&[leg.clone(), b0], &["rho1"], &Limits::default()).unwrap();
        assert_eq!(out, vec![parse_poly("x^2 + y^2 + z^2 - 4", &v).unwrap()]);
        let b4 = parse_poly("rho1 - 4", &v).unwrap();
        let out4 = eliminate(&[leg, b4], &["rho1"], &Limits::default()).unwrap();
        assert_eq!(
            out4,
            vec![parse_poly("x^2 + y^2 + z^2 - 8*x + 12", &v).unwrap()]
        );
    }

    #[test]
    fn degree_ceiling_reports_blowup() {
        let v = vs2();
        let f = parse_poly("x^5 - y", &v).unwrap();
        let g = parse_poly("x*y^5 - 1", &v).unwrap();
        let tight = Limits {
            max_basis: 5000,
            max_degree: 4,
        };
        match groebner_basis(&[f, g], MonomialOrder::Lex, &tight) {
            Err(Error::DegreeCeiling { .. }) => {}
            other => panic!("expected degree ceiling, got {other:?}"),
        }
    }
}
