//! Subresultant polynomial remainder sequences and resultants.

use num_traits::Zero;

use super::multipoly::MultiPoly;
use super::scalar::{Field, Ring};
use super::unipoly::UniPoly;
use super::AlgebraError;

/// Subresultant PRS of `a` and `b` (Cohen, Alg. 3.3.1 without the content
/// steps). The first two entries are the inputs ordered by degree; every
/// later entry is a subresultant up to sign, ending at the last nonzero one.
pub fn subresultant_prs<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> Vec<UniPoly<R>> {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut chain = vec![a.clone(), b.clone()];
    if b.is_zero() {
        chain.pop();
        return chain;
    }
    let mut g = R::one();
    let mut h = R::one();
    while b.degree().is_some_and(|d| d > 0) {
        let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            break;
        }
        let denom = g.clone() * h.pow(delta);
        let next = r.map(|c| c.div_exact(&denom).expect("inexact subresultant step"));
        a = std::mem::replace(&mut b, next);
        g = a.leading_coeff().unwrap().clone();
        h = next_h(&g, &h, delta);
        chain.push(b.clone());
    }
    chain
}

fn next_h<R: Ring>(g: &R, h: &R, delta: u32) -> R {
    if delta == 0 {
        h.clone()
    } else {
        g.pow(delta)
            .div_exact(&h.pow(delta - 1))
            .expect("inexact subresultant scaling")
    }
}

/// Resultant with the Sylvester-determinant sign convention (Cohen, Alg. 3.3.7
/// without the content steps).
pub fn resultant_uni<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> R {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut s = R::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
            return R::zero();
        };
        if db == 0 {
            let lb = b.leading_coeff().unwrap().clone();
            if da == 0 {
                return R::one();
            }
            let num = lb.pow(da as u32);
            let out = num.div_exact(&h.pow(da as u32 - 1)).expect("inexact resultant scaling");
            return s * out;
        }
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        let denom = g.clone() * h.pow(delta);
        let next = r.map(|c| c.div_exact(&denom).expect("inexact subresultant step"));
        a = std::mem::replace(&mut b, next);
        g = a.leading_coeff().unwrap().clone();
        h = next_h(&g, &h, delta);
    }
}

/// `Res_var(p, q)` as a polynomial in the same variable list.
pub fn resultant<T: Field>(p: &MultiPoly<T>, q: &MultiPoly<T>, var: &str) -> Result<MultiPoly<T>, AlgebraError> {
    let (pu, qu) = univariate_pair(p, q, var)?;
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    let r = resultant_uni(&pu, &qu);
    let zero_in_var = MultiPoly::<T>::zero_in(&vars);
    Ok(&zero_in_var + &r)
}

/// The subresultant PRS of `p` and `q` viewed as polynomials in `var`,
/// each entry converted back to the common variable list.
pub fn prs_in<T: Field>(p: &MultiPoly<T>, q: &MultiPoly<T>, var: &str) -> Result<Vec<MultiPoly<T>>, AlgebraError> {
    let (pu, qu) = univariate_pair(p, q, var)?;
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    subresultant_prs(&pu, &qu)
        .iter()
        .map(|u| MultiPoly::from_univariate_in(&vars, var, u))
        .collect()
}

type UniPair<T> = (UniPoly<MultiPoly<T>>, UniPoly<MultiPoly<T>>);

fn univariate_pair<T: Field>(p: &MultiPoly<T>, q: &MultiPoly<T>, var: &str) -> Result<UniPair<T>, AlgebraError> {
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    for f in [p, q] {
        if f.degree_in(var)?.unwrap_or(0) == 0 {
            return Err(AlgebraError::ConstantIn(var.to_string()));
        }
    }
    Ok((p.to_univariate_in(var)?, q.to_univariate_in(var)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::q;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    fn ints(c: &[i64]) -> UniPoly<BigInt> {
        UniPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Sylvester determinant by cofactor-free Gaussian elimination over Q.
    fn sylvester(a: &[i64], b: &[i64]) -> BigRational {
        let m = a.len() - 1;
        let n = b.len() - 1;
        let size = m + n;
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for k in 0..n {
            let mut r = vec![q(0); size];
            for (i, &c) in a.iter().rev().enumerate() {
                r[k + i] = q(c);
            }
            rows.push(r);
        }
        for k in 0..m {
            let mut r = vec![q(0); size];
            for (i, &c) in b.iter().rev().enumerate() {
                r[k + i] = q(c);
            }
            rows.push(r);
        }
        let mut det = q(1);
        for c in 0..size {
            let Some(p) = (c..size).find(|&r| !rows[r][c].is_zero()) else {
                return q(0);
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            det *= rows[c][c].clone();
            let pivot = rows[c].clone();
            for row in rows.iter_mut().skip(c + 1) {
                let f = row[c].clone() / pivot[c].clone();
                for k in c..size {
                    row[k] -= pivot[k].clone() * f.clone();
                }
            }
        }
        det
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant_uni(&ints(&[-1, 1]), &ints(&[-2, 1])), BigInt::from(-1));
        assert_eq!(resultant_uni(&ints(&[-1, 0, 1]), &ints(&[-1, 1])), BigInt::from(0));
    }

    #[test]
    fn matches_sylvester_determinant() {
        let cases: [(&[i64], &[i64]); 5] = [
            (&[1, 2, 3], &[4, 5]),
            (&[3, 0, -1, 2], &[1, 1, 5]),
            (&[2, 1], &[7, 0, 0, 3]),
            (&[1, -2, 0, 4, 1], &[3, 1, -1, 2, 2]),
            (&[5, 0, 1, 0, 0, 2], &[-1, 3, 0, 1]),
        ];
        for (a, b) in cases {
            let r = resultant_uni(&ints(a), &ints(b));
            assert_eq!(BigRational::from_integer(r), sylvester(a, b), "{a:?} {b:?}");
        }
    }

    #[test]
    fn multivariate_resultant_and_errors() {
        let v = ["x", "y"];
        let x = P::var(&v, "x").unwrap();
        let y = P::var(&v, "y").unwrap();
        let one = P::constant_in(&v, q(1));
        // Res_x(x - y, x^2 + 1) = y^2 + 1
        let r = resultant(&(&x - &y), &(&(&x * &x) + &one), "x").unwrap();
        assert_eq!(r, &(&y * &y) + &one);
        assert_eq!(resultant(&y, &x, "x"), Err(AlgebraError::ConstantIn("x".into())));
        assert_eq!(resultant(&P::zero_in(&v), &x, "x"), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn prs_degrees_drop() {
        let chain = subresultant_prs(&ints(&[1, 0, 1, 0, 1]), &ints(&[-1, 2, 0, 1]));
        let degs: Vec<_> = chain.iter().map(|p| p.degree().unwrap()).collect();
        assert!(degs.windows(2).all(|w| w[0] >= w[1]));
        assert!(degs.len() >= 3);
    }
}
