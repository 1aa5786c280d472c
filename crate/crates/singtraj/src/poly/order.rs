//! Monomial orders, including the block elimination order used for
//! projections.

use super::Monomial;
use std::cmp::Ordering;

/// Order used inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

impl BaseOrder {
    fn cmp_slice(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            BaseOrder::Lex => a.cmp(b),
            BaseOrder::GrevLex => {
                let da: u32 = a.iter().map(|&e| e as u32).sum();
                let db: u32 = b.iter().map(|&e| e as u32).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        // graded reverse lex: compare the reversed exponent
                        // difference; the last nonzero entry decides, with the
                        // smaller entry winning.
                        for (ea, eb) in a.iter().zip(b.iter()).rev() {
                            match ea.cmp(eb) {
                                Ordering::Equal => continue,
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
        }
    }
}

/// A total well-order on monomials.
///
/// `Block` compares the leading block first (so it is an elimination order
/// for the leading block), with an inner order per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        /// Number of variables in the leading (eliminated) block.
        split: usize,
        first: BaseOrder,
        second: BaseOrder,
    },
}

impl MonomialOrder {
    pub fn block(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: BaseOrder::GrevLex,
            second: BaseOrder::GrevLex,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::Lex => BaseOrder::Lex.cmp_slice(&a.0, &b.0),
            MonomialOrder::GrevLex => BaseOrder::GrevLex.cmp_slice(&a.0, &b.0),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let s = *split;
                match first.cmp_slice(&a.0[..s], &b.0[..s]) {
                    Ordering::Equal => second.cmp_slice(&a.0[s..], &b.0[s..]),
                    other => other,
                }
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn lex_orders_by_first_difference() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // same degree: x*z vs y^2 in (x,y,z): x*z = (1,0,1), y^2 = (0,2,0);
        // last nonzero of difference (1,-2,1) is positive => x*z smaller
        let o3 = MonomialOrder::GrevLex;
        assert_eq!(o3.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // x^2 > x*y > y^2 > x*z > y*z > z^2 for grevlex x>y>z
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o3.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        // any monomial containing a block-1 variable beats any free of them
        let o = MonomialOrder::block(2);
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3, 0]), &m(&[0, 1, 0, 0])), Ordering::Less);
    }

    #[test]
    fn orders_are_multiplicative() {
        let orders = [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::block(2)];
        let ms = [
            m(&[0, 1, 2, 0]),
            m(&[1, 0, 0, 3]),
            m(&[2, 2, 0, 0]),
            m(&[0, 0, 0, 1]),
        ];
        for o in &orders {
            for a in &ms {
                for b in &ms {
                    for w in &ms {
                        let ab = o.cmp(a, b);
                        let awbw = o.cmp(&a.mul(w), &b.mul(w));
                        assert_eq!(ab, awbw);
                    }
                }
            }
        }
    }
}
