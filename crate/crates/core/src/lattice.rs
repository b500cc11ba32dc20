//! Pic Y as Z^13 with the blowup intersection form, and the calculus of
//! classes glued across the two contracted (-4)-curves.
//!
//! Basis order: `H, E0, E1, ..., E9, B1, B2`. `H` is the pullback of a line,
//! `E1..E9` sit over the base points of the cubic pencil, `B1, B2` over the
//! two nodes and `E0` over one extra general point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

pub const RANK: usize = 13;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass(pub [i64; RANK]);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("class {class} does not glue: pairings with A1, A2 are {a1}, {a2}")]
    Parity { class: DivisorClass, a1: i64, a2: i64 },
    #[error("no integral witness: {0}")]
    NoWitness(String),
    #[error("index {0} out of range")]
    Index(usize),
}

const fn unit(i: usize) -> DivisorClass {
    let mut c = [0; RANK];
    c[i] = 1;
    DivisorClass(c)
}

pub const H: DivisorClass = unit(0);
pub const E0: DivisorClass = unit(1);
pub const B1: DivisorClass = unit(11);
pub const B2: DivisorClass = unit(12);

/// Index of `E_k` in the coordinate vector, `k` in `0..=9`.
pub const fn e_index(k: usize) -> usize {
    1 + k
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass([0; RANK]);

    pub fn new(coords: [i64; RANK]) -> Self {
        DivisorClass(coords)
    }

    pub fn coords(&self) -> &[i64; RANK] {
        &self.0
    }

    pub fn h(&self) -> i64 {
        self.0[0]
    }

    /// Coefficient of `E_k`.
    pub fn e(&self, k: usize) -> i64 {
        self.0[e_index(k)]
    }

    pub fn b(&self, i: usize) -> i64 {
        self.0[10 + i]
    }

    /// Exchanges the coefficients of `E_j` and `E_k`.
    pub fn swap_e(&self, j: usize, k: usize) -> Self {
        let mut c = self.0;
        c.swap(e_index(j), e_index(k));
        DivisorClass(c)
    }
}

pub fn e(k: usize) -> DivisorClass {
    assert!(k <= 9);
    unit(e_index(k))
}

/// `E1 + ... + E9`.
pub fn sum_e() -> DivisorClass {
    (1..=9).map(e).fold(DivisorClass::ZERO, |a, b| a + b)
}

/// The (-4)-curves `A_i = 3H - (E1+..+E9) - 2B_i`, `i` in `{1, 2}`.
pub fn a(i: usize) -> DivisorClass {
    let b = if i == 1 { B1 } else { B2 };
    H * 3 - sum_e() - b * 2
}

pub fn k_y() -> DivisorClass {
    H * -3 + E0 + sum_e() + B1 + B2
}

/// `Q = 2H`.
pub fn q_class() -> DivisorClass {
    H * 2
}

/// `l_i = H - E_i`.
pub fn ell(i: usize) -> DivisorClass {
    H - e(i)
}

/// The thirteen divisors `D_0, ..., D_12` of the collection.
pub fn d(i: usize) -> DivisorClass {
    match i {
        0 => DivisorClass::ZERO,
        1..=9 => -ell(i) + E0 + B1,
        10 => -B1 + E0,
        11 => -q_class() + E0 * 3 + B1 * 2,
        12 => d(11) * 2,
        _ => panic!("D index {i} out of range"),
    }
}

pub fn pairing(x: &DivisorClass, y: &DivisorClass) -> i64 {
    x.0[0] * y.0[0] - x.0[1..].iter().zip(&y.0[1..]).map(|(a, b)| a * b).sum::<i64>()
}

/// Euler characteristic on Y by Riemann-Roch.
pub fn chi_on_y(x: &DivisorClass) -> i64 {
    let t = pairing(x, x) - pairing(x, &k_y());
    assert!(t % 2 == 0, "D^2 - D.K odd for {x}");
    1 + t / 2
}

/// A class on Y whose pairings with both `A_i` are even, so that it extends
/// across the planes `W_i` as `O(d_i)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GluedClass {
    pub rep: DivisorClass,
    pub d1: i64,
    pub d2: i64,
}

pub fn glue(x: &DivisorClass) -> Result<GluedClass, LatticeError> {
    let p1 = pairing(x, &a(1));
    let p2 = pairing(x, &a(2));
    if p1 % 2 != 0 || p2 % 2 != 0 {
        return Err(LatticeError::Parity {
            class: *x,
            a1: p1,
            a2: p2,
        });
    }
    Ok(GluedClass {
        rep: *x,
        d1: p1 / 2,
        d2: p2 / 2,
    })
}

fn tri(d: i64) -> i64 {
    d * (d - 1) / 2
}

pub fn chi_glued(g: &GluedClass) -> i64 {
    chi_on_y(&g.rep) + tri(g.d1) + tri(g.d2)
}

/// `D.E0 - D.K_Y - d1 - d2`; identically zero because `E0 - K_Y = (A1 + A2)/2`.
pub fn linear_defect(g: &GluedClass) -> i64 {
    pairing(&g.rep, &E0) - pairing(&g.rep, &k_y()) - g.d1 - g.d2
}

pub fn glued_square(g: &GluedClass) -> i64 {
    let v = pairing(&g.rep, &E0) + 2 * chi_on_y(&g.rep) + 2 * tri(g.d1) + 2 * tri(g.d2) - 2;
    assert_eq!(
        v,
        glued_pair(g, g) + linear_defect(g),
        "square and polarization disagree"
    );
    v
}

/// Polarization `D.D' + d1 d1' + d2 d2'`.
pub fn glued_pair(g: &GluedClass, h: &GluedClass) -> i64 {
    pairing(&g.rep, &h.rep) + g.d1 * h.d1 + g.d2 * h.d2
}

/// Pairing with the canonical class of S, which is numerically `E0^g`.
pub fn glued_k_pairing(g: &GluedClass) -> i64 {
    pairing(&g.rep, &E0)
}

/// The probes used for numerical equivalence: `Q, l_1..l_9, E0, B1, B2`.
pub fn probes() -> Vec<GluedClass> {
    let mut v = vec![q_class()];
    v.extend((1..=9).map(ell));
    v.extend([E0, B1, B2]);
    v.iter().map(|c| glue(c).expect("probe glues")).collect()
}

/// True when `x^g` and `y^g` pair identically with every probe.
pub fn numerically_equal(x: &GluedClass, y: &GluedClass) -> bool {
    probes().iter().all(|p| glued_pair(x, p) == glued_pair(y, p))
}

/// Gram matrix of `D_1^g..D_11^g` and whether
/// `D_1^g + .. + D_10^g - 3 D_11^g` is numerically `E0^g`.
pub fn gram_and_ks_check() -> (Vec<Vec<i64>>, bool) {
    let gs: Vec<GluedClass> = (1..=11).map(|i| glue(&d(i)).unwrap()).collect();
    let gram = gs
        .iter()
        .map(|x| gs.iter().map(|y| glued_pair(x, y)).collect())
        .collect();
    let rel = (1..=10).map(d).fold(DivisorClass::ZERO, |s, x| s + x) - d(11) * 3;
    let ks = numerically_equal(&glue(&rel).unwrap(), &glue(&E0).unwrap());
    (gram, ks)
}

/// Euler characteristic of the glued class of `-D_i + D_j`.
pub fn chi_glued_difference(i: usize, j: usize) -> Result<i64, LatticeError> {
    for k in [i, j] {
        if k > 12 {
            return Err(LatticeError::Index(k));
        }
    }
    Ok(chi_glued(&glue(&(d(j) - d(i)))?))
}

/// Labelled table of glued pairings among `Q, l_i, l_j, B1, E0`.
pub fn component_table() -> (Vec<&'static str>, Vec<Vec<i64>>) {
    let labels = vec!["Q", "l_i", "l_j", "B1", "E0"];
    let cls = [q_class(), ell(1), ell(2), B1, E0];
    let gs: Vec<GluedClass> = cls.iter().map(|c| glue(c).unwrap()).collect();
    let vals = gs
        .iter()
        .map(|x| gs.iter().map(|y| glued_pair(x, y)).collect())
        .collect();
    (labels, vals)
}

/// Certifies `rep - target = a A1 + b A2 + t (B1 - B2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CongruenceWitness {
    pub a: i64,
    pub b: i64,
    pub t: i64,
}

impl CongruenceWitness {
    pub fn is_torsion_twist(&self) -> bool {
        self.t != 0
    }
}

/// Solves for a witness. Since `A1 - A2 = 2(B2 - B1)` the solution is only
/// unique up to `(a, b, t) -> (a + 1, b - 1, t + 2)`; the one with
/// `t in {0, 1}` is returned.
pub fn congruence_check(rep: &DivisorClass, target: &DivisorClass) -> Result<CongruenceWitness, LatticeError> {
    let diff = *rep - *target;
    let fail = |why: String| Err(LatticeError::NoWitness(why));
    if diff.h() % 3 != 0 {
        return fail(format!("H-coefficient {} is not a multiple of 3", diff.h()));
    }
    let s = diff.h() / 3;
    if diff.e(0) != 0 {
        return fail(format!("E0-coefficient {} is nonzero", diff.e(0)));
    }
    if let Some(k) = (1..=9).find(|&k| diff.e(k) != -s) {
        return fail(format!("E{k}-coefficient {} differs from {}", diff.e(k), -s));
    }
    let (c1, c2) = (diff.b(1), diff.b(2));
    if c1 + c2 != -2 * s {
        return fail(format!(
            "B-coefficients {c1}, {c2} force a + b = {}/2, but the H-coefficient forces {s}",
            -(c1 + c2)
        ));
    }
    let t = c1.rem_euclid(2);
    let a = (t - c1) / 2;
    let w = CongruenceWitness { a, b: s - a, t };
    debug_assert_eq!(*target + a_mul(w.a, 1) + a_mul(w.b, 2) + (B1 - B2) * w.t, *rep);
    Ok(w)
}

fn a_mul(k: i64, i: usize) -> DivisorClass {
    a(i) * k
}

impl Add for DivisorClass {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(o.0) {
            *x += y;
        }
        DivisorClass(c)
    }
}

impl Sub for DivisorClass {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for DivisorClass {
    type Output = Self;
    fn neg(self) -> Self {
        DivisorClass(self.0.map(|x| -x))
    }
}

impl Mul<i64> for DivisorClass {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        DivisorClass(self.0.map(|x| x * k))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, String)> = vec![(self.h(), "H".into()), (self.e(0), "E0".into())];
        let es: Vec<i64> = (1..=9).map(|k| self.e(k)).collect();
        if es.iter().all(|&c| c == es[0]) && es[0] != 0 {
            parts.push((es[0], "(E1+..+E9)".into()));
        } else {
            parts.extend(es.iter().enumerate().map(|(k, &c)| (c, format!("E{}", k + 1))));
        }
        parts.push((self.b(1), "B1".into()));
        parts.push((self.b(2), "B2".into()));
        let mut out = String::new();
        for (c, name) in parts.into_iter().filter(|(c, _)| *c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&name);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
