//! The cubic pencil: nodes, base locus, and the plane point configuration
//! whose blowup is Y.
//!
//! Nine base points map to `E1..E9`, the nodes of the two cubics to `B1, B2`
//! and one further point to `E0`. `E9` is a rational base point; the other
//! eight are handled as a single Galois-stable block given by a shape
//! representation `(f(t), xi(t), eta(t))`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{prs::prs_in, resultant, AlgebraError};
use crate::{QMultiPoly, QPoly, Rational};

pub const XYZ: [&str; 3] = ["x", "y", "z"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PencilError {
    #[error("not a nonzero homogeneous cubic")]
    NotCubic,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("singular locus of {0} is positive-dimensional")]
    PositiveDimensional(String),
    #[error("{0} is not a singular point of the cubic")]
    NotSingular(ProjPointQ),
    #[error("cubic h{cubic} has {count} rational singular points, expected exactly one node")]
    NodeCount { cubic: usize, count: usize },
    #[error("singular point {0} of h{1} is not a node")]
    NotNodal(ProjPointQ, usize),
    #[error("the cubics share a common component")]
    CommonComponent,
    #[error("base locus: {0}")]
    BaseLocus(String),
    #[error("no shape representation found: {0}")]
    Shape(String),
    #[error("{0} is not a rational base point of the pencil")]
    E9NotBasePoint(ProjPointQ),
    #[error("base point {0} is singular on h{1}")]
    E9Singular(ProjPointQ, usize),
    #[error("e0 {0} coincides with {1}")]
    E0Coincides(ProjPointQ, &'static str),
    #[error("e0 {0} lies on h{1}")]
    E0OnCubic(ProjPointQ, usize),
    #[error("node {0} of h{1} also lies on the other cubic")]
    NodeOnOtherCubic(ProjPointQ, usize),
    #[error("unknown node assignment `{0}`")]
    NodeAssignment(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A rational point of P^2 stored as a primitive integer vector whose first
/// nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjPointQ([BigInt; 3]);

impl ProjPointQ {
    pub fn new(coords: [Rational; 3]) -> Result<Self, PencilError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(PencilError::ZeroPoint);
        }
        let den = coords.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let ints: Vec<BigInt> = coords
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
            g = -g;
        }
        Ok(ProjPointQ([&ints[0] / &g, &ints[1] / &g, &ints[2] / &g]))
    }

    pub fn from_i64s(c: [i64; 3]) -> Result<Self, PencilError> {
        Self::new(c.map(|v| Rational::from_integer(v.into())))
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn rational_coords(&self) -> [Rational; 3] {
        self.0.clone().map(Rational::from_integer)
    }

    /// Index of the first nonzero coordinate.
    pub fn canonical_chart(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap()
    }

    /// The two free coordinates in chart `chart`, or `None` when the point
    /// lies on that chart's line at infinity.
    pub fn affine(&self, chart: usize) -> Option<[Rational; 2]> {
        if self.0[chart].is_zero() {
            return None;
        }
        let [u, v] = free_coords(chart);
        let c = Rational::from_integer(self.0[chart].clone());
        let r = self.rational_coords();
        Some([&r[u] / &c, &r[v] / &c])
    }

    pub fn eval(&self, p: &QMultiPoly) -> Rational {
        p.eval(&self.rational_coords())
    }
}

impl fmt::Display for ProjPointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for ProjPointQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.0 {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// The coordinates left free in a chart, in index order.
pub fn free_coords(chart: usize) -> [usize; 2] {
    match chart {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// Images of `x, y, z` that set coordinate `chart` to 1 and rename the free
/// coordinates to the variables of `vars` (in order).
fn dehomogenize(p: &QMultiPoly, chart: usize, vars: [&str; 2]) -> QMultiPoly {
    let [u, v] = free_coords(chart);
    let mut images = vec![QMultiPoly::constant_in(&vars, Rational::one()); 3];
    images[u] = QMultiPoly::var(&vars, vars[0]).unwrap();
    images[v] = QMultiPoly::var(&vars, vars[1]).unwrap();
    p.compose(&images)
}

#[derive(Clone, PartialEq, Debug)]
pub struct Cubic {
    form: QMultiPoly,
}

impl Cubic {
    pub fn new(form: QMultiPoly) -> Result<Self, PencilError> {
        let ok =
            form.vars().iter().map(String::as_str).eq(XYZ) && form.is_homogeneous() && form.total_degree() == Some(3);
        if ok {
            Ok(Cubic { form })
        } else {
            Err(PencilError::NotCubic)
        }
    }

    /// From `(coefficient, [ex, ey, ez])` pairs.
    pub fn from_terms(terms: &[(i64, [u32; 3])]) -> Result<Self, PencilError> {
        let t = terms
            .iter()
            .map(|(c, e)| (e.to_vec(), Rational::from_integer((*c).into())))
            .collect();
        Self::new(QMultiPoly::from_terms(&XYZ, t))
    }

    pub fn form(&self) -> &QMultiPoly {
        &self.form
    }

    pub fn gradient(&self) -> [QMultiPoly; 3] {
        XYZ.map(|v| self.form.partial_derivative(v, 1).unwrap())
    }

    /// `(coefficient, exponents)` in decreasing monomial order.
    pub fn terms(&self) -> Vec<(Rational, [u32; 3])> {
        self.form
            .terms()
            .map(|(m, c)| (c.clone(), [m.0[0], m.0[1], m.0[2]]))
            .collect()
    }

    /// `h(x + a z, y + b z, z)`.
    pub fn translate(&self, a: i64, b: i64) -> Self {
        let var = |n| QMultiPoly::var(&XYZ, n).unwrap();
        let k = |c: i64| QMultiPoly::constant_in(&XYZ, Rational::from_integer(c.into()));
        let images = vec![
            &var("x") + &(&k(a) * &var("z")),
            &var("y") + &(&k(b) * &var("z")),
            var("z"),
        ];
        Cubic {
            form: self.form.compose(&images),
        }
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

/// Rational common zeros in the affine plane of a list of polynomials in
/// two variables `(u, v)`.
fn affine_common_zeros(polys: &[QMultiPoly], what: &str) -> Result<Vec<[Rational; 2]>, PencilError> {
    let polys: Vec<&QMultiPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if polys.is_empty() {
        return Err(PencilError::PositiveDimensional(what.into()));
    }
    let (u, v) = (polys[0].vars()[0].clone(), polys[0].vars()[1].clone());
    let mut elim: Option<QPoly> = None;
    let mut push = |p: QPoly| {
        if !p.is_zero() {
            elim = Some(match elim.take() {
                None => p,
                Some(e) => e.gcd(&p),
            });
        }
    };
    let moving: Vec<&QMultiPoly> = polys
        .iter()
        .copied()
        .filter(|p| p.degree_in(&u).unwrap().unwrap_or(0) > 0)
        .collect();
    for p in polys.iter().filter(|p| p.degree_in(&u).unwrap().unwrap_or(0) == 0) {
        push(p.to_unipoly(&v)?);
    }
    for (i, p) in moving.iter().enumerate() {
        for q in &moving[i + 1..] {
            push(resultant(p, q, &u)?.to_unipoly(&v)?);
        }
    }
    let Some(elim) = elim else {
        return Err(PencilError::PositiveDimensional(what.into()));
    };
    if elim.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let vars = [u.as_str(), v.as_str()];
    let mut out = Vec::new();
    for v0 in elim.rational_roots() {
        let images = [
            QMultiPoly::var(&vars, &u).unwrap(),
            QMultiPoly::constant_in(&vars, v0.clone()),
        ];
        let mut g: Option<QPoly> = None;
        for p in &polys {
            let s = p.compose(&images).to_unipoly(&u)?;
            if !s.is_zero() {
                g = Some(match g {
                    None => s,
                    Some(h) => h.gcd(&s),
                });
            }
        }
        let Some(g) = g else {
            return Err(PencilError::PositiveDimensional(what.into()));
        };
        for u0 in g.rational_roots() {
            out.push([u0, v0.clone()]);
        }
    }
    Ok(out)
}

/// Rational common zeros in P^2 of homogeneous polynomials in `x, y, z`,
/// sorted.
pub fn rational_common_zeros(polys: &[QMultiPoly], what: &str) -> Result<Vec<ProjPointQ>, PencilError> {
    let mut pts = Vec::new();
    // z = 1
    let aff: Vec<QMultiPoly> = polys.iter().map(|p| dehomogenize(p, 2, ["x", "y"])).collect();
    for [x, y] in affine_common_zeros(&aff, what)? {
        pts.push(ProjPointQ::new([x, y, Rational::one()])?);
    }
    // z = 0, y = 1
    let zero = Rational::zero();
    let line: Vec<QPoly> = polys
        .iter()
        .map(|p| {
            let vars = ["x", "w"];
            let images = [
                QMultiPoly::var(&vars, "x").unwrap(),
                QMultiPoly::constant_in(&vars, Rational::one()),
                QMultiPoly::constant_in(&vars, zero.clone()),
            ];
            p.compose(&images).to_unipoly("x").unwrap()
        })
        .filter(|p| !p.is_zero())
        .collect();
    if line.is_empty() {
        return Err(PencilError::PositiveDimensional(what.into()));
    }
    let g = line[1..].iter().fold(line[0].clone(), |a, b| a.gcd(b));
    for x in g.rational_roots() {
        pts.push(ProjPointQ::new([x, Rational::one(), zero.clone()])?);
    }
    let p100 = ProjPointQ::from_i64s([1, 0, 0])?;
    if polys.iter().all(|p| p100.eval(p).is_zero()) {
        pts.push(p100);
    }
    pts.sort();
    Ok(pts)
}

pub fn singular_locus(c: &Cubic) -> Result<Vec<ProjPointQ>, PencilError> {
    let mut polys = vec![c.form.clone()];
    polys.extend(c.gradient());
    rational_common_zeros(&polys, "the cubic")
}

/// Determinant of the Hessian of the cubic dehomogenized in `chart`, at `p`.
pub fn hessian_det(c: &Cubic, p: &ProjPointQ, chart: usize) -> Option<Rational> {
    let [u0, v0] = p.affine(chart)?;
    let g = dehomogenize(&c.form, chart, ["u", "v"]);
    let at = |h: QMultiPoly| h.eval(&[u0.clone(), v0.clone()]);
    let d = |h: &QMultiPoly, v: &str| h.partial_derivative(v, 1).unwrap();
    let gu = d(&g, "u");
    let gv = d(&g, "v");
    let (guu, guv, gvv) = (at(d(&gu, "u")), at(d(&gu, "v")), at(d(&gv, "v")));
    Some(&guu * &gvv - &guv * &guv)
}

pub fn is_node(c: &Cubic, p: &ProjPointQ) -> Result<bool, PencilError> {
    let singular = p.eval(&c.form).is_zero() && c.gradient().iter().all(|g| p.eval(g).is_zero());
    if !singular {
        return Err(PencilError::NotSingular(p.clone()));
    }
    Ok(!hessian_det(c, p, p.canonical_chart()).unwrap().is_zero())
}

/// A Galois-stable set of `deg f` points `[.., xi(t), .., eta(t), ..]` with
/// 1 in coordinate `chart`; `xi` and `eta` fill the free coordinates in index
/// order. `t = eta + shear * xi`.
#[derive(Clone, PartialEq, Debug)]
pub struct ConjugateOrbit {
    pub minpoly: QPoly,
    pub xi: QPoly,
    pub eta: QPoly,
    pub chart: usize,
    pub shear: i64,
}

impl ConjugateOrbit {
    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    /// Homogeneous coordinates as residues modulo `minpoly`.
    pub fn coords(&self) -> [QPoly; 3] {
        let mut c = [QPoly::one(), QPoly::one(), QPoly::one()];
        let [u, v] = free_coords(self.chart);
        c[u] = self.xi.clone();
        c[v] = self.eta.clone();
        c
    }

    /// `p(coords) mod minpoly`.
    pub fn eval(&self, p: &QMultiPoly) -> QPoly {
        eval_mod(p, &self.coords(), &self.minpoly)
    }

    pub fn lies_on(&self, p: &QMultiPoly) -> bool {
        self.eval(p).is_zero()
    }
}

/// Evaluates a polynomial at polynomial arguments modulo `f`, caching powers.
pub fn eval_mod(p: &QMultiPoly, args: &[QPoly], f: &QPoly) -> QPoly {
    let n = args.len();
    let maxdeg: Vec<usize> = (0..n)
        .map(|i| p.terms().map(|(m, _)| m.0[i] as usize).max().unwrap_or(0))
        .collect();
    let pows: Vec<Vec<QPoly>> = (0..n).map(|i| power_table(&args[i], maxdeg[i], f)).collect();
    let mut acc = QPoly::zero();
    for (m, c) in p.terms() {
        let mut t = QPoly::constant(c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul_mod(&pows[i][e as usize], f);
            }
        }
        acc = &acc + &t;
    }
    acc.rem(f).unwrap()
}

/// `[1, a, a^2, .., a^n]` reduced modulo `f`.
pub fn power_table(a: &QPoly, n: usize, f: &QPoly) -> Vec<QPoly> {
    let base = a.rem(f).unwrap();
    let mut out = vec![QPoly::one().rem(f).unwrap()];
    for k in 1..=n {
        let next = out[k - 1].mul_mod(&base, f);
        out.push(next);
    }
    out
}

/// Shears tried in order when the plain coordinate does not separate.
pub const SHEARS: [i64; 11] = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5];

/// Shape representation in a fixed chart and shear of the base points other
/// than `excluded`.
pub fn shape_in_chart(
    h1: &Cubic,
    h2: &Cubic,
    excluded: &[ProjPointQ],
    chart: usize,
    shear: i64,
) -> Result<ConjugateOrbit, PencilError> {
    let expected = 9usize
        .checked_sub(excluded.len())
        .ok_or_else(|| PencilError::Shape("more than nine excluded points".into()))?;
    let vars = ["u", "t"];
    let lam = Rational::from_integer(shear.into());
    // v = t - lam * u
    let u = QMultiPoly::var(&vars, "u").unwrap();
    let t = QMultiPoly::var(&vars, "t").unwrap();
    let v = &t - &u.scale(&lam);
    let shear_map = |h: &Cubic| dehomogenize(&h.form, chart, ["u", "v"]).compose(&[u.clone(), v.clone()]);
    let (g1, g2) = (shear_map(h1), shear_map(h2));
    let r = match resultant(&g1, &g2, "u") {
        Ok(r) => r,
        Err(AlgebraError::ConstantIn(_)) => return Err(PencilError::Shape("cubic constant in u".into())),
        Err(e) => return Err(e.into()),
    };
    if r.is_zero() {
        return Err(PencilError::CommonComponent);
    }
    let mut f = r.to_unipoly("t")?.squarefree_part()?;
    for p in excluded {
        let Some([u0, v0]) = p.affine(chart) else { continue };
        let t0 = &v0 + &(&lam * &u0);
        let lin = QPoly::new(vec![-t0, Rational::one()]);
        let (quo, rem) = f.div_rem(&lin)?;
        if !rem.is_zero() {
            return Err(PencilError::Shape(format!("{p} does not project to a root")));
        }
        f = quo.primitive();
    }
    if f.degree() != Some(expected) {
        return Err(PencilError::Shape(format!(
            "chart {chart}, shear {shear}: {} separated points, expected {expected}",
            f.degree().unwrap_or(0)
        )));
    }
    if expected == 0 {
        return Ok(ConjugateOrbit {
            minpoly: f,
            xi: QPoly::zero(),
            eta: QPoly::zero(),
            chart,
            shear,
        });
    }
    let chain = prs_in(&g1, &g2, "u")?;
    let s1 = chain
        .iter()
        .rev()
        .find(|p| p.degree_in("u").unwrap() == Some(1))
        .ok_or_else(|| PencilError::Shape("no subresultant of degree one".into()))?;
    let su = s1.to_univariate_in("u")?;
    let c0 = su.coeff(0).to_unipoly("t")?;
    let c1 = su.coeff(1).to_unipoly("t")?;
    let inv = c1
        .rem(&f)?
        .mod_inverse(&f)
        .map_err(|e| PencilError::Shape(e.to_string()))?;
    let xi = (-c0).mul_mod(&inv, &f);
    let eta = (&QPoly::var() - &xi.scale(&lam)).rem(&f)?;
    let orbit = ConjugateOrbit {
        minpoly: f,
        xi,
        eta,
        chart,
        shear,
    };
    if !(orbit.lies_on(&h1.form) && orbit.lies_on(&h2.form)) {
        return Err(PencilError::Shape(format!(
            "chart {chart}, shear {shear}: parametrization off the cubics"
        )));
    }
    Ok(orbit)
}

/// Tries charts `z, y, x` and the shears in [`SHEARS`] in that order.
pub fn shape_representation(h1: &Cubic, h2: &Cubic, excluded: &[ProjPointQ]) -> Result<ConjugateOrbit, PencilError> {
    let mut last = None;
    for chart in [2, 1, 0] {
        for shear in SHEARS {
            match shape_in_chart(h1, h2, excluded, chart, shear) {
                Ok(o) => return Ok(o),
                Err(PencilError::Shape(m)) => last = Some(m),
                Err(e) => return Err(e),
            }
        }
    }
    Err(PencilError::Shape(last.unwrap_or_default()))
}

#[derive(Clone, Debug)]
pub struct BaseLocus {
    pub rational: Vec<ProjPointQ>,
    /// The non-rational base points, as one block. Its minimal polynomial is
    /// squarefree without rational roots but not certified irreducible.
    pub residual: Option<ConjugateOrbit>,
}

pub fn base_locus(h1: &Cubic, h2: &Cubic) -> Result<BaseLocus, PencilError> {
    let rational = match rational_common_zeros(&[h1.form.clone(), h2.form.clone()], "the pencil") {
        Ok(r) => r,
        Err(PencilError::PositiveDimensional(_)) => return Err(PencilError::CommonComponent),
        Err(e) => return Err(e),
    };
    if rational.len() > 9 {
        return Err(PencilError::CommonComponent);
    }
    let residual = if rational.len() == 9 {
        None
    } else {
        let o = shape_representation(h1, h2, &rational).map_err(|e| match e {
            PencilError::Shape(m) => {
                PencilError::BaseLocus(format!("fewer than nine distinct intersection points ({m})"))
            }
            e => e,
        })?;
        Some(o)
    };
    Ok(BaseLocus { rational, residual })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Default)]
pub enum NodeAssignment {
    /// The node of `h1` is blown up to `B1`.
    #[default]
    H1ToB1,
    H2ToB1,
}

impl std::str::FromStr for NodeAssignment {
    type Err = PencilError;
    fn from_str(s: &str) -> Result<Self, PencilError> {
        match s.replace(' ', "").as_str() {
            "h1->B1" => Ok(NodeAssignment::H1ToB1),
            "h2->B1" => Ok(NodeAssignment::H2ToB1),
            _ => Err(PencilError::NodeAssignment(s.into())),
        }
    }
}

/// The twelve blown-up points.
#[derive(Clone, Debug)]
pub struct PointConfig {
    pub cubics: (Cubic, Cubic),
    pub e9: ProjPointQ,
    pub e0: ProjPointQ,
    pub node1: ProjPointQ,
    pub node2: ProjPointQ,
    /// Images of `E1..E8`.
    pub orbit: ConjugateOrbit,
    pub rational_base_points: Vec<ProjPointQ>,
    pub node_assignment: NodeAssignment,
}

fn unique_node(c: &Cubic, which: usize) -> Result<ProjPointQ, PencilError> {
    let sing = singular_locus(c)?;
    if sing.len() != 1 {
        return Err(PencilError::NodeCount {
            cubic: which,
            count: sing.len(),
        });
    }
    let p = sing.into_iter().next().unwrap();
    if !is_node(c, &p)? {
        return Err(PencilError::NotNodal(p, which));
    }
    Ok(p)
}

/// Chooses `E9` when none is given: the only rational base point, or else the
/// first one on the line `z = 0`, or else the smallest.
pub fn default_e9(rational: &[ProjPointQ]) -> Option<ProjPointQ> {
    if rational.len() == 1 {
        return Some(rational[0].clone());
    }
    rational
        .iter()
        .find(|p| p.coords()[2].is_zero())
        .or_else(|| rational.first())
        .cloned()
}

pub fn build_config(
    h1: &Cubic,
    h2: &Cubic,
    e0: &ProjPointQ,
    e9: Option<&ProjPointQ>,
    assignment: NodeAssignment,
) -> Result<PointConfig, PencilError> {
    let n1 = unique_node(h1, 1)?;
    let n2 = unique_node(h2, 2)?;
    if n1.eval(&h2.form).is_zero() {
        return Err(PencilError::NodeOnOtherCubic(n1, 1));
    }
    if n2.eval(&h1.form).is_zero() {
        return Err(PencilError::NodeOnOtherCubic(n2, 2));
    }
    let locus = base_locus(h1, h2)?;
    let e9 = match e9 {
        Some(p) if locus.rational.contains(p) => p.clone(),
        Some(p) => return Err(PencilError::E9NotBasePoint(p.clone())),
        None => default_e9(&locus.rational).ok_or_else(|| PencilError::BaseLocus("no rational base point".into()))?,
    };
    for (i, h) in [h1, h2].into_iter().enumerate() {
        if h.gradient().iter().all(|g| e9.eval(g).is_zero()) {
            return Err(PencilError::E9Singular(e9.clone(), i + 1));
        }
    }
    let (node1, node2) = match assignment {
        NodeAssignment::H1ToB1 => (n1, n2),
        NodeAssignment::H2ToB1 => (n2, n1),
    };
    for (p, name) in [(&node1, "node1"), (&node2, "node2"), (&e9, "e9")] {
        if e0 == p {
            return Err(PencilError::E0Coincides(e0.clone(), name));
        }
    }
    for (i, h) in [h1, h2].into_iter().enumerate() {
        if e0.eval(&h.form).is_zero() {
            return Err(PencilError::E0OnCubic(e0.clone(), i + 1));
        }
    }
    let orbit = shape_representation(h1, h2, std::slice::from_ref(&e9))?;
    Ok(PointConfig {
        cubics: (h1.clone(), h2.clone()),
        e9,
        e0: e0.clone(),
        node1,
        node2,
        orbit,
        rational_base_points: locus.rational,
        node_assignment: assignment,
    })
}

/// The cubics of the construction.
pub fn reference_cubics() -> (Cubic, Cubic) {
    let h1 = Cubic::from_terms(&[
        (1, [0, 2, 1]),
        (-2, [0, 1, 2]),
        (1, [0, 0, 3]),
        (-1, [3, 0, 0]),
        (-1, [2, 0, 1]),
    ])
    .unwrap();
    let h2 = Cubic::from_terms(&[(1, [3, 0, 0]), (-2, [1, 2, 0]), (2, [1, 1, 1]), (1, [0, 2, 1])]).unwrap();
    (h1, h2)
}

/// Searches translates `h2(x + a z, y + b z, z)` with `a != 0`, ordered by
/// `|a| + |b|` then `(a, b)`, for a configuration whose only rational base
/// point is `E9` and in which neither `(e9, e0, node1)` nor
/// `(e9, node1, node2)` is colinear.
pub fn search_alternate(h1: &Cubic, h2: &Cubic, e0: &ProjPointQ, radius: i64) -> Option<(i64, i64, PointConfig)> {
    let mut cands: Vec<(i64, i64)> = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            if a != 0 && a.abs() + b.abs() <= radius {
                cands.push((a, b));
            }
        }
    }
    cands.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a, b));
    for (a, b) in cands {
        let h2t = h2.translate(a, b);
        let Ok(cfg) = build_config(h1, &h2t, e0, None, NodeAssignment::H1ToB1) else {
            continue;
        };
        if cfg.rational_base_points.len() != 1 || !cfg.orbit.minpoly.rational_roots().is_empty() {
            continue;
        }
        let col = |p: &ProjPointQ, q: &ProjPointQ, r: &ProjPointQ| colinear_det(p, q, r).is_zero();
        if col(&cfg.e9, &cfg.e0, &cfg.node1) || col(&cfg.e9, &cfg.node1, &cfg.node2) {
            continue;
        }
        return Some((a, b, cfg));
    }
    None
}

/// `det` of the 3x3 matrix of integer coordinates.
pub fn colinear_det(p: &ProjPointQ, q: &ProjPointQ, r: &ProjPointQ) -> BigInt {
    let (a, b, c) = (p.coords(), q.coords(), r.coords());
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::q;

    fn pt(c: [i64; 3]) -> ProjPointQ {
        ProjPointQ::from_i64s(c).unwrap()
    }

    #[test]
    fn points_normalise() {
        let p = ProjPointQ::new([q(0), q(-2), q(-4)]).unwrap();
        assert_eq!(p, pt([0, 1, 2]));
        assert_eq!(p.canonical_chart(), 1);
        assert_eq!(p.to_string(), "[0,1,2]");
        assert!(ProjPointQ::from_i64s([0, 0, 0]).is_err());
    }

    #[test]
    fn singular_loci() {
        let (h1, h2) = reference_cubics();
        assert_eq!(singular_locus(&h1).unwrap(), vec![pt([0, 1, 1])]);
        assert_eq!(singular_locus(&h2).unwrap(), vec![pt([0, 0, 1])]);
        let fermat = Cubic::from_terms(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]).unwrap();
        assert!(singular_locus(&fermat).unwrap().is_empty());
    }

    #[test]
    fn nodes_and_cusps() {
        let (h1, h2) = reference_cubics();
        assert!(is_node(&h1, &pt([0, 1, 1])).unwrap());
        assert_eq!(hessian_det(&h1, &pt([0, 1, 1]), 2), Some(q(-4)));
        assert!(is_node(&h2, &pt([0, 0, 1])).unwrap());
        assert_eq!(hessian_det(&h2, &pt([0, 0, 1]), 2), Some(q(-4)));
        let cusp = Cubic::from_terms(&[(1, [0, 2, 1]), (-1, [3, 0, 0])]).unwrap();
        assert!(!is_node(&cusp, &pt([0, 0, 1])).unwrap());
        assert!(is_node(&h1, &pt([1, 0, 0])).is_err());
    }

    #[test]
    fn rejects_non_cubics() {
        assert!(Cubic::from_terms(&[(1, [2, 0, 0])]).is_err());
        assert!(Cubic::from_terms(&[(1, [3, 0, 0]), (1, [0, 0, 1])]).is_err());
        assert!(Cubic::from_terms(&[]).is_err());
    }

    #[test]
    fn common_component_is_rejected() {
        let (h1, _) = reference_cubics();
        assert!(matches!(base_locus(&h1, &h1), Err(PencilError::CommonComponent)));
    }

    #[test]
    fn split_pencil_has_nine_rational_points() {
        // x(x - z)(x + z) and y(y - z)(y + z)
        let a = Cubic::from_terms(&[(1, [3, 0, 0]), (-1, [1, 0, 2])]).unwrap();
        let b = Cubic::from_terms(&[(1, [0, 3, 0]), (-1, [0, 1, 2])]).unwrap();
        let locus = base_locus(&a, &b).unwrap();
        assert_eq!(locus.rational.len(), 9);
        assert!(locus.residual.is_none());
    }

    #[test]
    fn colinearity_determinants() {
        assert_eq!(
            colinear_det(&pt([0, 1, 0]), &pt([4, 9, 6]), &pt([0, 1, 1])),
            BigInt::from(-4)
        );
        assert!(colinear_det(&pt([0, 1, 0]), &pt([0, 1, 1]), &pt([0, 0, 1])).is_zero());
    }
}
