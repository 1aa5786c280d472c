//! Canonical printer; round-trips exactly through `parse_poly`.

use super::{MonomialOrder, MultiPoly, Rational};
use num_traits::{One, Signed};
use std::fmt;

fn write_coeff_mono(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    mono_str: &str,
) -> fmt::Result {
    debug_assert!(coeff.is_positive());
    if mono_str.is_empty() {
        write!(f, "{coeff}")
    } else if coeff.is_one() {
        write!(f, "{mono_str}")
    } else {
        write!(f, "{coeff}*{mono_str}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::GrevLex;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mut mono = String::new();
            for (vi, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(self.vars.name(vi));
                if e > 1 {
                    mono.push('^');
                    mono.push_str(&e.to_string());
                }
            }
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_coeff_mono(f, &c.abs(), &mono)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::{parse_poly, VarSet};

    #[test]
    fn print_parse_round_trip() {
        let vs = VarSet::new(vec!["x", "y", "z", "rho1", "rho2", "rho3"]);
        for src in [
            "x^2 - 2*rho1*x + rho1^2 + y^2 + z^2 - 4",
            "-8*rho1*rho2*rho3 + 8*rho1*rho2*z + 8*rho1*rho3*y + 8*rho2*rho3*x",
            "13/14*x - 5/14*y - 1/10*z - 1/14",
            "0",
            "-x",
            "7",
            "-3/4",
        ] {
            let p = parse_poly(src, &vs).unwrap();
            let printed = p.to_string();
            let q = parse_poly(&printed, &vs).unwrap();
            assert_eq!(p, q, "round trip failed for {src} -> {printed}");
        }
    }
}
