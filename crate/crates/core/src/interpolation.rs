//! Plane curves of fixed degree with prescribed multiplicities: building the
//! linear conditions on coefficients and computing `h^0` as a corank.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::modular::{modular_rank, ModularRank, PrimeSource};
use crate::lattice::DivisorClass;
use crate::pencil::{colinear_det, free_coords, power_table, ConjugateOrbit, PointConfig, ProjPointQ};
use crate::{QMatrix, QPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpError {
    #[error("coefficients of E1..E8 differ: {0:?}")]
    NonUniformOrbit(Vec<i64>),
    #[error("points are not pairwise distinct")]
    Coincident,
}

/// Curves of degree `degree` through the given points with multiplicity.
#[derive(Clone, Debug)]
pub struct FatPointSystem {
    pub degree: u32,
    /// `(point, multiplicity, label)`.
    pub rational: Vec<(ProjPointQ, u32, String)>,
    pub orbit: Option<(ConjugateOrbit, u32)>,
}

/// A linear system on Y pushed down to the plane. `Empty` stands for a
/// negative degree.
#[derive(Clone, Debug)]
pub enum LinearSystem {
    Empty,
    Points(FatPointSystem),
}

#[derive(Clone, Debug)]
pub struct ConditionMatrix {
    pub matrix: QMatrix,
    pub labels: Vec<String>,
}

/// `C(n, 2)`-style binomial used for monomial and condition counts.
pub fn binom2(n: u32) -> usize {
    (n as usize * n.saturating_sub(1) as usize) / 2
}

/// Monomials of degree `d` in `x > y > z` graded-lex order.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(binom2(d + 2));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Derivative orders `(a, b)` with `a + b < m`, by total order then `a`
/// descending.
fn derivative_orders(m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for o in 0..m {
        for a in (0..=o).rev() {
            out.push((a, o - a));
        }
    }
    out
}

fn falling(e: u32, k: u32) -> i64 {
    (0..k).map(|i| (e - i) as i64).product()
}

fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Maps a class on Y to the plane system it defines. Positive exceptional
/// coefficients are fixed components and impose nothing.
pub fn divisor_to_system(d: &DivisorClass, cfg: &PointConfig) -> Result<LinearSystem, InterpError> {
    if d.h() < 0 {
        return Ok(LinearSystem::Empty);
    }
    let orbit: Vec<i64> = (1..=8).map(|k| d.e(k)).collect();
    if orbit.iter().any(|&c| c != orbit[0]) {
        return Err(InterpError::NonUniformOrbit(orbit));
    }
    let mult = |c: i64| if c < 0 { (-c) as u32 } else { 0 };
    let rational = [
        (&cfg.e9, d.e(9), "E9"),
        (&cfg.e0, d.e(0), "E0"),
        (&cfg.node1, d.b(1), "B1"),
        (&cfg.node2, d.b(2), "B2"),
    ]
    .into_iter()
    .filter(|(_, c, _)| *c < 0)
    .map(|(p, c, l)| (p.clone(), mult(c), l.to_string()))
    .collect();
    let orbit = (orbit[0] < 0).then(|| (cfg.orbit.clone(), mult(orbit[0])));
    Ok(LinearSystem::Points(FatPointSystem {
        degree: d.h() as u32,
        rational,
        orbit,
    }))
}

/// Vanishing of all derivatives of order `< m` at `p`, in its canonical chart.
pub fn condition_rows_rational(p: &ProjPointQ, m: u32, d: u32) -> Vec<Vec<Rational>> {
    let chart = p.canonical_chart();
    let [fu, fv] = free_coords(chart);
    let [u0, v0] = p.affine(chart).unwrap();
    let mons = monomials(d);
    let pu: Vec<Rational> = (0..=d).map(|k| num_traits::pow(u0.clone(), k as usize)).collect();
    let pv: Vec<Rational> = (0..=d).map(|k| num_traits::pow(v0.clone(), k as usize)).collect();
    derivative_orders(m)
        .into_iter()
        .map(|(a, b)| {
            mons.iter()
                .map(|mon| {
                    let (eu, ev) = (mon[fu], mon[fv]);
                    if eu < a || ev < b {
                        return Rational::zero();
                    }
                    qi(falling(eu, a) * falling(ev, b)) * &pu[(eu - a) as usize] * &pv[(ev - b) as usize]
                })
                .collect()
        })
        .collect()
}

/// The same conditions at all points of the orbit at once: each derivative
/// of the form, evaluated at `(xi(t), eta(t))` and reduced modulo `f`,
/// contributes one row per coefficient of `1, t, .., t^(deg f - 1)`.
pub fn condition_rows_orbit(orb: &ConjugateOrbit, m: u32, d: u32) -> Vec<Vec<Rational>> {
    let f = &orb.minpoly;
    let n = orb.degree();
    let [fu, fv] = free_coords(orb.chart);
    let pu = power_table(&orb.xi, d as usize, f);
    let pv = power_table(&orb.eta, d as usize, f);
    let mut products: HashMap<(u32, u32), QPoly> = HashMap::new();
    let mons = monomials(d);
    let mut rows = Vec::new();
    for (a, b) in derivative_orders(m) {
        let cols: Vec<QPoly> = mons
            .iter()
            .map(|mon| {
                let (eu, ev) = (mon[fu], mon[fv]);
                if eu < a || ev < b {
                    return QPoly::zero();
                }
                let key = (eu - a, ev - b);
                let prod = products
                    .entry(key)
                    .or_insert_with(|| pu[key.0 as usize].mul_mod(&pv[key.1 as usize], f));
                prod.scale(&qi(falling(eu, a) * falling(ev, b)))
            })
            .collect();
        for k in 0..n {
            rows.push(cols.iter().map(|c| c.coeff(k)).collect());
        }
    }
    rows
}

impl FatPointSystem {
    pub fn columns(&self) -> usize {
        binom2(self.degree + 2)
    }

    /// Number of linear conditions imposed, counted with redundancy.
    pub fn condition_count(&self) -> usize {
        let r: usize = self.rational.iter().map(|(_, m, _)| binom2(m + 1)).sum();
        let o = self.orbit.as_ref().map_or(0, |(orb, m)| orb.degree() * binom2(m + 1));
        r + o
    }

    pub fn condition_matrix(&self) -> ConditionMatrix {
        let cols = self.columns();
        let mut matrix = QMatrix::zeros(0, cols);
        let mut labels = Vec::new();
        for (p, m, label) in &self.rational {
            let orders = derivative_orders(*m);
            for (row, (a, b)) in condition_rows_rational(p, *m, self.degree).into_iter().zip(orders) {
                matrix.push_row(row);
                labels.push(format!("{label} d({a},{b})"));
            }
        }
        if let Some((orb, m)) = &self.orbit {
            let orders = derivative_orders(*m);
            let rows = condition_rows_orbit(orb, *m, self.degree);
            for (i, row) in rows.into_iter().enumerate() {
                let (a, b) = orders[i / orb.degree()];
                matrix.push_row(row);
                labels.push(format!("E1..E8 d({a},{b}) t^{}", i % orb.degree()));
            }
        }
        ConditionMatrix { matrix, labels }
    }
}

impl LinearSystem {
    pub fn columns(&self) -> usize {
        match self {
            LinearSystem::Empty => 0,
            LinearSystem::Points(s) => s.columns(),
        }
    }
}

/// Dimension of the space of curves in the system.
pub fn h0(sys: &LinearSystem) -> usize {
    match sys {
        LinearSystem::Empty => 0,
        LinearSystem::Points(s) => s.columns() - s.condition_matrix().matrix.rank(),
    }
}

/// `h0` from the maximal rank modulo `primes` random primes. Never larger
/// than the exact value.
pub fn h0_modular_oracle(sys: &LinearSystem, primes: usize, source: &mut PrimeSource) -> (usize, Option<ModularRank>) {
    match sys {
        LinearSystem::Empty => (0, None),
        LinearSystem::Points(s) => {
            let r = modular_rank(&s.condition_matrix().matrix, primes, source);
            (s.columns() - r.rank, Some(r))
        }
    }
}

/// `h0` of a class whose degree is at most zero, where no matrix is needed and
/// the orbit coefficients may be arbitrary: constants survive exactly when
/// nothing is imposed.
pub fn h0_low_degree(d: &DivisorClass) -> Option<usize> {
    match d.h() {
        h if h < 0 => Some(0),
        0 => {
            let imposes = d.coords()[1..].iter().any(|&c| c < 0);
            Some(if imposes { 0 } else { 1 })
        }
        _ => None,
    }
}

pub fn colinear(p1: &ProjPointQ, p2: &ProjPointQ, p3: &ProjPointQ) -> Result<bool, InterpError> {
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(InterpError::Coincident);
    }
    Ok(colinear_det(p1, p2, p3).is_zero())
}

/// Summary of one evaluated system, for reports.
#[derive(Clone, Debug, Serialize)]
pub struct SystemSummary {
    pub degree: u32,
    pub columns: usize,
    pub conditions: usize,
    pub rank: usize,
    pub h0: usize,
}

pub fn evaluate(sys: &FatPointSystem) -> SystemSummary {
    let cm = sys.condition_matrix();
    let rank = cm.matrix.rank();
    SystemSummary {
        degree: sys.degree,
        columns: sys.columns(),
        conditions: cm.matrix.nrows(),
        rank,
        h0: sys.columns() - rank,
    }
}

/// A system of rational points only, labelled `P0, P1, ..`.
pub fn points_system(degree: u32, pts: &[(ProjPointQ, u32)]) -> LinearSystem {
    LinearSystem::Points(FatPointSystem {
        degree,
        rational: pts
            .iter()
            .enumerate()
            .map(|(i, (p, m))| (p.clone(), *m, format!("P{i}")))
            .collect(),
        orbit: None,
    })
}
