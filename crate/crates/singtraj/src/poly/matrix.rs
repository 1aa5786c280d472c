//! Exact symbolic determinants of polynomial matrices.

use super::MultiPoly;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials.
///
/// Uses cofactor expansion for sizes up to 2 and fraction-free Bareiss
/// elimination from 3x3 upward; Bareiss keeps intermediate entries as exact
/// polynomial divisions, which stays far smaller than naive expansion.
pub fn determinant(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquareMatrix);
    }
    if n == 0 {
        return Err(Error::NonSquareMatrix);
    }
    let vars = m[0][0].vars().clone();
    for row in m {
        for e in row {
            if *e.vars() != vars {
                return Err(Error::VarSetMismatch {
                    left: vars.names().join(","),
                    right: e.vars().names().join(","),
                });
            }
        }
    }
    match n {
        1 => Ok(m[0][0].clone()),
        2 => Ok(&(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])),
        _ => bareiss(m),
    }
}

fn bareiss(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    let vars = m[0][0].vars().clone();
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut prev = MultiPoly::one(&vars);
    let mut sign_flip = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // pivot search below row k
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(MultiPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero(&vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MultiPoly, VarSet};

    #[test]
    fn identity_3x3() {
        let vs = VarSet::new(vec!["x", "y"]);
        let one = MultiPoly::one(&vs);
        let zero = MultiPoly::zero(&vs);
        let m = vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(determinant(&m).unwrap(), one);
    }

    #[test]
    fn symmetric_2x2() {
        let vs = VarSet::new(vec!["x", "y"]);
        let x = parse_poly("x", &vs).unwrap();
        let y = parse_poly("y", &vs).unwrap();
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        assert_eq!(
            determinant(&m).unwrap(),
            parse_poly("x^2 - y^2", &vs).unwrap()
        );
    }

    #[test]
    fn rejects_non_square() {
        let vs = VarSet::new(vec!["x"]);
        let one = MultiPoly::one(&vs);
        assert!(determinant(&[vec![one.clone()], vec![one.clone()]]).is_err());
    }

    #[test]
    fn zero_column_gives_zero() {
        let vs = VarSet::new(vec!["x"]);
        let x = parse_poly("x", &vs).unwrap();
        let zero = MultiPoly::zero(&vs);
        let m = vec![
            vec![zero.clone(), x.clone(), x.clone()],
            vec![zero.clone(), x.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), x.clone()],
        ];
        assert!(determinant(&m).unwrap().is_zero());
    }
}
