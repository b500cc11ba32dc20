//! Dense univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Ring};
use super::AlgebraError;

/// Polynomial with coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `coeffs.last()` is the leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    /// Applies a ring map coefficientwise.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, computed without
    /// division so that it is defined over any ring.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            r = r.scale(&lb) - b.scale(&lr).shift(dr - db);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lb.pow(steps as u32));
        }
        r
    }
}

impl<T: Field> UniPoly<T> {
    /// Euclidean division `(quotient, remainder)`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self), AlgebraError> {
        let db = b.degree().ok_or(AlgebraError::DivisionByZero)?;
        let inv = b.leading_coeff().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let mut qc = vec![T::zero(); r.len().saturating_sub(db)];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let c = r.last().unwrap().clone() * inv.clone();
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - c.clone() * bc.clone();
            }
            qc[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((Self::new(qc), Self::new(r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self, AlgebraError> {
        Ok(self.div_rem(b)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - &qt * &s1;
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - &qt * &t1;
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coeff().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv().unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Inverse of `self` in `T[t]/(modulus)`.
    ///
    /// Fails with [`AlgebraError::ZeroDivisor`] when `self` shares a factor
    /// with the modulus.
    pub fn mod_inverse(&self, modulus: &Self) -> Result<Self, AlgebraError> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(AlgebraError::InvalidModulus);
        }
        let reduced = self.rem(modulus)?;
        let (g, s, _) = reduced.ext_gcd(modulus);
        if g.degree() != Some(0) {
            return Err(AlgebraError::ZeroDivisor);
        }
        s.rem(modulus)
    }

    /// `self * other mod modulus`.
    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    /// `f / gcd(f, f')`, made monic.
    pub fn squarefree_part_monic(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g)?.0.monic())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl UniPoly<BigRational> {
    /// Integer multiple with coprime coefficients and positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn primitive_integer(&self) -> UniPoly<BigInt> {
        if self.is_zero() {
            return UniPoly::new(vec![]);
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        UniPoly::new(ints.into_iter().map(|c| c / &content).collect())
    }

    /// Rational multiple normalised as by [`Self::primitive_integer`].
    pub fn primitive(&self) -> Self {
        self.primitive_integer().map(|c| BigRational::from_integer(c.clone()))
    }

    /// `f / gcd(f, f')` in primitive integer normalisation.
    pub fn squarefree_part(&self) -> Result<Self, AlgebraError> {
        Ok(self.squarefree_part_monic()?.primitive())
    }

    /// All distinct rational roots, in increasing order.
    ///
    /// With `a` the leading coefficient of the primitive squarefree part `f`,
    /// the roots of `f` are `r / a` for the integer roots `r` of the monic
    /// integer polynomial `a^(n-1) f(y / a)`. Those are located by Sturm
    /// bisection over integer intervals, so nothing needs to be factored.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.squarefree_part().expect("nonzero").primitive_integer();
        let n = f.degree().unwrap();
        let a = f.leading_coeff().unwrap().clone();
        let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..n {
            g.push(f.coeff(k) * num_traits::pow(a.clone(), n - 1 - k));
        }
        g.push(BigInt::one());
        let bound = g[..n].iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
        let gq = UniPoly::new(g.into_iter().map(BigRational::from_integer).collect());
        let chain = sturm_chain(&gq);
        let mut roots = Vec::new();
        integer_roots_in(&gq, &chain, -bound.clone(), bound, &mut roots);
        let mut out: Vec<BigRational> = roots.into_iter().map(|r| BigRational::new(r, a.clone())).collect();
        out.sort();
        out
    }
}

fn sturm_chain(g: &UniPoly<BigRational>) -> Vec<UniPoly<BigRational>> {
    let mut chain = vec![g.clone(), g.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn sign_changes(chain: &[UniPoly<BigRational>], at: &BigInt) -> usize {
    let x = BigRational::from_integer(at.clone());
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(&x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Collects the integer roots of `g` in `(lo, hi]`.
fn integer_roots_in(
    g: &UniPoly<BigRational>,
    chain: &[UniPoly<BigRational>],
    lo: BigInt,
    hi: BigInt,
    out: &mut Vec<BigInt>,
) {
    if sign_changes(chain, &lo) == sign_changes(chain, &hi) {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if g.eval(&BigRational::from_integer(hi.clone())).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid = (&lo + &hi).div_floor(&BigInt::from(2));
    integer_roots_in(g, chain, lo, mid.clone(), out);
    integer_roots_in(g, chain, mid, hi, out);
}

impl<T: Ring> Zero for UniPoly<T> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for UniPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<'a, T: Ring> Add<&'a UniPoly<T>> for &'a UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, T: Ring> Sub<&'a UniPoly<T>> for &'a UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, T: Ring> Mul<&'a UniPoly<T>> for &'a UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for UniPoly<T> {
            type Output = UniPoly<T>;
            fn $m(self, rhs: UniPoly<T>) -> UniPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Ring> Neg for UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Field> Ring for UniPoly<T> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs).ok()?;
        r.is_zero().then_some(q)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{q, qf};

    type Q = UniPoly<BigRational>;

    fn p(c: &[i64]) -> Q {
        Q::from_i64s(c)
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.squarefree_part().unwrap(), p(&[-2, 1, 1]));
        let g = p(&[1, 0, 1]);
        assert_eq!(g.squarefree_part().unwrap(), g);
        assert_eq!(Q::zero().squarefree_part(), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn mod_inverse_examples() {
        let f = p(&[-2, 0, 1]);
        let h = Q::var().mod_inverse(&f).unwrap();
        assert_eq!(h, Q::monomial(qf(1, 2), 1));
        assert_eq!(Q::one().mod_inverse(&f).unwrap(), Q::one());
        let g = p(&[-1, 1]);
        let f2 = p(&[-1, 0, 1]);
        assert_eq!(g.mod_inverse(&f2), Err(AlgebraError::ZeroDivisor));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 0, 1]); // t^3 - 1
        let b = p(&[-1, 1]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(qt, p(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[-1, 0, 1])), b);
        let (g, s, t) = a.ext_gcd(&p(&[1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &p(&[1, 1])), g);
    }

    #[test]
    fn pseudo_remainder_matches_field_remainder_up_to_scale() {
        let a = p(&[3, 1, 0, 2]);
        let b = p(&[1, 0, 3]);
        let pr = a.pseudo_rem(&b);
        let r = a.rem(&b).unwrap();
        // lc(b)^(3-2+1) = 9
        assert_eq!(pr, r.scale(&q(9)));
    }

    #[test]
    fn rational_roots_found() {
        // (2t - 3)(t + 1)(t^2 + 1) t
        let f = &(&p(&[-3, 2]) * &p(&[1, 1])) * &(&p(&[1, 0, 1]) * &p(&[0, 1]));
        assert_eq!(f.rational_roots(), vec![q(-1), q(0), qf(3, 2)]);
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
        // constant term is a product of two primes above 10^6
        let big = p(&[-1_000_003 * 1_000_033, 1]) * p(&[-1_000_033, 1_000_003]) * p(&[7, 0, 1]);
        assert_eq!(
            big.rational_roots(),
            vec![qf(1_000_033, 1_000_003), q(1_000_003 * 1_000_033)]
        );
    }

    #[test]
    fn derivative_and_eval() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.derivative(), p(&[2, 6]));
        assert_eq!(f.eval(&q(2)), q(17));
        assert_eq!(f.primitive_integer().coeffs(), &[1, 2, 3].map(BigInt::from));
    }
}
