//! Sparse multivariate polynomials over a ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Field, Ring};
use super::unipoly::UniPoly;
use super::AlgebraError;

/// Exponent vector ordered graded-lexicographically, earlier variables
/// larger (`x > y > z`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in named variables.
///
/// A polynomial with an empty variable list is a bare constant and combines
/// with any other polynomial; this is what `Zero::zero()` and `One::one()`
/// produce.
#[derive(Clone)]
pub struct MultiPoly<T> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Ring> MultiPoly<T> {
    pub fn zero_in(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &[&str], c: T) -> Self {
        Self::from_terms(vars, vec![(vec![0; vars.len()], c)])
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, AlgebraError> {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::from_terms(vars, vec![(e, T::one())]))
    }

    /// Builds from `(exponents, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(vars: &[&str], terms: Vec<(Vec<u32>, T)>) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: &str) -> Result<Option<u32>, AlgebraError> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[i]).max())
    }

    pub fn constant_value(&self) -> Option<T> {
        match self.terms.len() {
            0 => Some(T::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v = v * x.pow(e);
                }
            }
            acc = acc + v;
        }
        acc
    }

    /// Substitutes a polynomial for every variable. The images must share
    /// one variable list, which becomes the variable list of the result.
    pub fn compose(&self, images: &[MultiPoly<T>]) -> MultiPoly<T> {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target: Vec<String> = images
            .iter()
            .find(|p| !p.vars.is_empty())
            .map(|p| p.vars.clone())
            .unwrap_or_default();
        let target_refs: Vec<&str> = target.iter().map(String::as_str).collect();
        let max_deg: Vec<u32> = (0..self.vars.len())
            .map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<MultiPoly<T>>> = images
            .iter()
            .zip(&max_deg)
            .map(|(img, &d)| {
                let img = img.clone().with_vars(&target_refs);
                let mut pw = vec![MultiPoly::constant_in(&target_refs, T::one())];
                for k in 1..=d as usize {
                    let next = &pw[k - 1] * &img;
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = MultiPoly::zero_in(&target_refs);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant_in(&target_refs, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// `∂^order p / ∂var^order`.
    pub fn partial_derivative(&self, var: &str, order: u32) -> Result<Self, AlgebraError> {
        let i = self.var_index(var)?;
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e < order {
                continue;
            }
            let falling: i64 = (0..order).map(|k| (e - k) as i64).product();
            let mut m2 = m.clone();
            m2.0[i] = e - order;
            out.add_term(m2, c.clone() * T::from_i64(falling));
        }
        Ok(out)
    }

    /// Converts a polynomial involving at most the variable `var` into a
    /// dense univariate polynomial.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly<T>, AlgebraError> {
        let i = self.var_index(var)?;
        let mut coeffs: Vec<T> = Vec::new();
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return Err(AlgebraError::NotUnivariate(var.to_string()));
            }
            let k = m.0[i] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, T::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_unipoly(vars: &[&str], var: &str, u: &UniPoly<T>) -> Result<Self, AlgebraError> {
        let i = vars
            .iter()
            .position(|v| *v == var)
            .ok_or_else(|| AlgebraError::UnknownVariable(var.to_string()))?;
        let mut out = Self::zero_in(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Reinterprets a bare constant in the given variable list; a polynomial
    /// that already carries variables must carry exactly these.
    pub(crate) fn with_vars(self, vars: &[&str]) -> Self {
        if self.vars.is_empty() {
            let mut out = Self::zero_in(vars);
            for (_, c) in self.terms {
                out.add_term(Monomial(vec![0; vars.len()]), c);
            }
            out
        } else {
            assert!(
                self.vars.iter().map(String::as_str).eq(vars.iter().copied()),
                "variable lists differ: {:?} vs {:?}",
                self.vars,
                vars
            );
            self
        }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        match (a.vars.is_empty(), b.vars.is_empty()) {
            (true, false) => {
                let v: Vec<&str> = b.vars.iter().map(String::as_str).collect();
                (a.clone().with_vars(&v), b.clone())
            }
            (false, true) => {
                let v: Vec<&str> = a.vars.iter().map(String::as_str).collect();
                (a.clone(), b.clone().with_vars(&v))
            }
            _ => {
                assert_eq!(a.vars, b.vars, "variable lists differ");
                (a.clone(), b.clone())
            }
        }
    }
}

impl<T: Field> MultiPoly<T> {
    /// Views `self` as a univariate polynomial in `var` whose coefficients
    /// are polynomials in the same variable list (with `var` absent).
    pub fn to_univariate_in(&self, var: &str) -> Result<UniPoly<MultiPoly<T>>, AlgebraError> {
        let i = self.var_index(var)?;
        let d = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<MultiPoly<T>> = (0..=d)
            .map(|_| Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            })
            .collect();
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            coeffs[k].add_term(m2, c.clone());
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Inverse of [`Self::to_univariate_in`].
    pub fn from_univariate_in(vars: &[&str], var: &str, u: &UniPoly<MultiPoly<T>>) -> Result<Self, AlgebraError> {
        let i = vars
            .iter()
            .position(|v| *v == var)
            .ok_or_else(|| AlgebraError::UnknownVariable(var.to_string()))?;
        let mut out = Self::zero_in(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let c = c.clone().with_vars(vars);
            for (m, a) in c.terms {
                let mut m2 = m;
                m2.0[i] += k as u32;
                out.add_term(m2, a);
            }
        }
        Ok(out)
    }

    /// Exact quotient by `rhs` via leading-term division; `None` when `rhs`
    /// does not divide `self`.
    pub fn div_exact_poly(&self, rhs: &Self) -> Option<Self> {
        let (mut r, d) = Self::aligned(self, rhs);
        let (lm, lc) = {
            let (m, c) = d.leading_term()?;
            (m.clone(), c.clone())
        };
        let inv = lc.inv()?;
        let mut quot = Self {
            vars: r.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((m, c)) = r.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = Monomial(m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect());
            let qc = c.clone() * inv.clone();
            let mut step = Self {
                vars: r.vars.clone(),
                terms: BTreeMap::new(),
            };
            step.add_term(qm.clone(), qc.clone());
            r = &r - &(&step * &d);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

// A bare constant compares equal to the same constant in any variable list.
impl<T: Ring> PartialEq for MultiPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        if self.vars.is_empty() || other.vars.is_empty() {
            return match (self.constant_value(), other.constant_value()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            };
        }
        false
    }
}

impl<T: Ring> Zero for MultiPoly<T> {
    fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for MultiPoly<T> {
    fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![]), T::one());
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }
}

impl<'a, T: Ring> Add<&'a MultiPoly<T>> for &'a MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let (mut a, b) = MultiPoly::aligned(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl<'a, T: Ring> Sub<&'a MultiPoly<T>> for &'a MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let (mut a, b) = MultiPoly::aligned(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

impl<'a, T: Ring> Mul<&'a MultiPoly<T>> for &'a MultiPoly<T> {
    type Output = MultiPoly<T>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let (a, b) = MultiPoly::aligned(self, rhs);
        let mut out = MultiPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = Monomial(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for MultiPoly<T> {
            type Output = MultiPoly<T>;
            fn $m(self, rhs: MultiPoly<T>) -> MultiPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Ring> Neg for MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Field> Ring for MultiPoly<T> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact_poly(rhs)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiPoly")
            .field("vars", &self.vars)
            .field("terms", &self.terms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::q;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;
    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn poly(terms: &[(i64, [u32; 3])]) -> P {
        P::from_terms(&XYZ, terms.iter().map(|(c, e)| (e.to_vec(), q(*c))).collect())
    }

    fn h1() -> P {
        // (y - z)^2 z - x^3 - x^2 z
        poly(&[
            (1, [0, 2, 1]),
            (-2, [0, 1, 2]),
            (1, [0, 0, 3]),
            (-1, [3, 0, 0]),
            (-1, [2, 0, 1]),
        ])
    }

    #[test]
    fn derivative_examples() {
        let x3 = poly(&[(1, [3, 0, 0])]);
        assert_eq!(x3.partial_derivative("x", 1).unwrap(), poly(&[(3, [2, 0, 0])]));
        assert_eq!(h1().partial_derivative("y", 2).unwrap(), poly(&[(2, [0, 0, 1])]));
        let y2z = poly(&[(1, [0, 2, 1])]);
        assert!(y2z.partial_derivative("x", 1).unwrap().is_zero());
        assert_eq!(
            y2z.partial_derivative("w", 1),
            Err(AlgebraError::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn graded_lex_order() {
        let p = poly(&[(1, [0, 0, 2]), (1, [1, 0, 0]), (1, [0, 1, 1]), (1, [1, 1, 0])]);
        let order: Vec<Vec<u32>> = p.terms().map(|(m, _)| m.0.clone()).collect();
        assert_eq!(order, vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 2], vec![1, 0, 0]]);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = poly(&[(1, [1, 0, 0]), (-2, [0, 1, 0]), (3, [0, 0, 1])]);
        let prod = &a * &h1();
        assert_eq!(prod.div_exact_poly(&a).unwrap(), h1());
        assert!(h1().div_exact_poly(&a).is_none());
    }

    #[test]
    fn compose_dehomogenises() {
        let vars = ["x", "y"];
        let imgs = vec![
            P::var(&vars, "x").unwrap(),
            P::var(&vars, "y").unwrap(),
            P::constant_in(&vars, q(1)),
        ];
        let a = h1().compose(&imgs);
        assert_eq!(a.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(a.eval(&[q(2), q(3)]), h1().eval(&[q(2), q(3), q(1)]));
    }

    #[test]
    fn univariate_views_roundtrip() {
        let u = h1().to_univariate_in("x").unwrap();
        assert_eq!(u.degree(), Some(3));
        assert_eq!(P::from_univariate_in(&XYZ, "x", &u).unwrap(), h1());
    }
}
