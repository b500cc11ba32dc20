//! Resolves every vanishing `h^p(-D_i^g + D_j^g) = 0`, `j < i`, `p in {0, 2}`,
//! and assembles a certificate.
//!
//! `h^1` never appears as a task: every pair has `chi = 0`, so `h^0 = h^2 = 0`
//! closes it.

#![allow(clippy::result_large_err)]

pub mod config;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::modular::{ModularRank, PrimeSource};
use crate::interpolation::{divisor_to_system, h0_low_degree, h0_modular_oracle, InterpError, LinearSystem};
use crate::lattice::{
    self, chi_glued_difference, congruence_check, d, e, glue, glued_pair, k_y, numerically_equal, sum_e,
    CongruenceWitness, DivisorClass, LatticeError, B1, B2, E0, H,
};
use crate::pencil::PointConfig;

pub const VERSION: &str = concat!("enriques-verify ", env!("CARGO_PKG_VERSION"));

pub const ASSUME_NEF: &str = "B1g-nef";
pub const ASSUME_GENERIC: &str = "generic-pencil: all nine base points conjugate";
pub const ASSUME_PERTURB: &str = "perturbation-generic";
pub const ASSUME_NUMERICAL: &str = "representative numerically equivalent only";
pub const ASSUME_TORSION: &str = "torsion twist B1-B2 not certified";

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error("no representative known for {0}")]
    NoRepresentative(VanishingTask),
    #[error("no representative for {0} passes the congruence check")]
    NoValidRepresentative(VanishingTask),
    #[error("symmetry reduction does not apply to {0}")]
    NotReducible(VanishingTask),
}

/// `h^degree(-D_i^g + D_j^g) = 0` with `j < i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct VanishingTask {
    pub i: usize,
    pub j: usize,
    pub degree: u8,
}

impl VanishingTask {
    pub fn new(i: usize, j: usize, degree: u8) -> Self {
        assert!(j < i && i <= 12 && (degree == 0 || degree == 2));
        VanishingTask { i, j, degree }
    }

    /// The class whose `h^0` must vanish: `-D_i + D_j`, or by Serre duality
    /// `K_S + D_i - D_j` with `K_S` represented by `E0`.
    pub fn target(&self) -> DivisorClass {
        if self.degree == 0 {
            d(self.j) - d(self.i)
        } else {
            E0 + d(self.i) - d(self.j)
        }
    }

    /// Parses `h0_12_9` style keys.
    pub fn parse(key: &str) -> Option<Self> {
        let mut it = key.strip_prefix('h')?.split('_');
        let degree: u8 = it.next()?.parse().ok()?;
        let i: usize = it.next()?.parse().ok()?;
        let j: usize = it.next()?.parse().ok()?;
        if it.next().is_some() || j >= i || i > 12 || !(degree == 0 || degree == 2) {
            return None;
        }
        Some(VanishingTask { i, j, degree })
    }
}

impl fmt::Display for VanishingTask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}_{}_{}", self.degree, self.i, self.j)
    }
}

/// All 156 tasks, ordered by `(i, j, degree)`.
pub fn required_tasks() -> Vec<VanishingTask> {
    let mut out = Vec::with_capacity(156);
    for i in 1..=12 {
        for j in 0..i {
            for p in [0, 2] {
                out.push(VanishingTask::new(i, j, p));
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Method {
    ChiZero,
    NefCriterion,
    DegreeBoundOnY,
    SemicontinuityBound,
    SymmetryReduced(VanishingTask),
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ChiZero => "ChiZero",
            Method::NefCriterion => "NefCriterion",
            Method::DegreeBoundOnY => "DegreeBoundOnY",
            Method::SemicontinuityBound => "SemicontinuityBound",
            Method::SymmetryReduced(_) => "SymmetryReduced",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    Proven,
    BoundOnly(i64),
    Flagged(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Proven => "Proven",
            Verdict::BoundOnly(_) => "BoundOnly",
            Verdict::Flagged(_) => "Flagged",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntry {
    pub task: VanishingTask,
    pub method: Method,
    pub representative: Option<DivisorClass>,
    pub representative_text: Option<String>,
    pub congruence: Option<CongruenceWitness>,
    pub bound: i64,
    pub verdict: Verdict,
    pub assumptions: Vec<String>,
}

/// Where a representative comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RepSource {
    Printed,
    Corrected,
    Derived,
    Override,
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedRepresentative {
    pub source: RepSource,
    pub class: DivisorClass,
    pub text: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChosenRepresentative {
    pub source: RepSource,
    pub class: DivisorClass,
    pub witness: CongruenceWitness,
    pub rejected: Vec<RejectedRepresentative>,
}

fn sum_e_to_8() -> DivisorClass {
    sum_e() - e(9)
}

/// Built-in representatives for pairs among `{0, 9, 10, 11, 12}`, in the
/// order they are tried.
pub fn representative_candidates(task: &VanishingTask) -> Vec<(RepSource, DivisorClass)> {
    use RepSource::*;
    let eleven_zero = H * 5 - sum_e() - E0 * 3 - B1 * 2 - B2 * 2;
    match (task.degree, task.i, task.j) {
        (0, 9, 0) => vec![(Printed, H - e(9) - E0 - B1)],
        (2, 10, 9) => vec![(Printed, H - e(9) + E0 - B1 - B2)],
        (0, 10, 0) => vec![(Derived, B1 - E0)],
        (2, 10, 0) => vec![(Derived, E0 * 2 - B1)],
        (0, 11, 0) | (0, 12, 11) => vec![(Printed, eleven_zero)],
        (0, 11, 9) => vec![(Printed, H * 4 - sum_e_to_8() - E0 * 2 - B1 - B2 * 2)],
        (0, 11, 10) => vec![(Printed, H * 5 - sum_e() - E0 * 2 - B1 * 3 - B2 * 2)],
        (0, 12, 0) => vec![(Printed, H * 16 - sum_e() * 4 - E0 * 6 - B1 * 6 - B2 * 6)],
        (0, 12, 9) => {
            let base = H * 12 - sum_e_to_8() * 3 - e(9) * 2 - E0 * 5 - B2 * 4;
            vec![(Printed, base - B1 * 6), (Corrected, base - B1 * 5)]
        }
        (0, 12, 10) => {
            let tail = -(sum_e() * 3) - E0 * 5 - B1 * 5 - B2 * 6;
            vec![(Printed, H * 10 + tail), (Corrected, H * 13 + tail)]
        }
        _ => Vec::new(),
    }
}

/// The first candidate congruent to the target modulo `A1, A2, B1 - B2`;
/// candidates tried before it are returned as rejected.
pub fn representative_for(
    task: &VanishingTask,
    overrides: &BTreeMap<VanishingTask, DivisorClass>,
) -> Result<ChosenRepresentative, VerifyError> {
    let mut cands: Vec<(RepSource, DivisorClass)> = Vec::new();
    if let Some(c) = overrides.get(task) {
        cands.push((RepSource::Override, *c));
    }
    cands.extend(representative_candidates(task));
    if cands.is_empty() {
        return Err(VerifyError::NoRepresentative(*task));
    }
    let target = task.target();
    let mut rejected = Vec::new();
    for (source, class) in cands {
        match congruence_check(&class, &target) {
            Ok(witness) => {
                return Ok(ChosenRepresentative {
                    source,
                    class,
                    witness,
                    rejected,
                })
            }
            Err(e) => rejected.push(RejectedRepresentative {
                source,
                class,
                text: class.to_string(),
                reason: e.to_string(),
            }),
        }
    }
    Err(VerifyError::NoValidRepresentative(*task))
}

/// `h^0(O_W(d)) - h^0(O_A(2d))` on a plane `W` meeting Y along a conic `A`.
fn plane_excess(d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        (d + 1) * (d + 2) / 2 - (2 * d + 1)
    }
}

/// `h^0` of a class on Y through the plane model.
pub fn h0_on_y(rep: &DivisorClass, cfg: &PointConfig) -> Result<usize, VerifyError> {
    if let Some(v) = h0_low_degree(rep) {
        return Ok(v);
    }
    Ok(crate::interpolation::h0(&divisor_to_system(rep, cfg)?))
}

/// The upper bound for `h^0` of the deformed class given `h^0` on Y.
pub fn bound_from_h0(rep: &DivisorClass, h0: usize) -> Result<i64, VerifyError> {
    let g = glue(rep)?;
    Ok(h0 as i64 + plane_excess(g.d1) + plane_excess(g.d2))
}

pub fn semicontinuity_bound(rep: &DivisorClass, cfg: &PointConfig) -> Result<i64, VerifyError> {
    glue(rep)?;
    bound_from_h0(rep, h0_on_y(rep, cfg)?)
}

/// Vanishing from a negative pairing with the nef class `B1^g`.
pub fn nef_h_vanishing(task: &VanishingTask) -> Option<CertificateEntry> {
    let t = glue(&task.target()).ok()?;
    let b1 = glue(&B1).unwrap();
    (glued_pair(&t, &b1) < 0).then(|| CertificateEntry {
        task: *task,
        method: Method::NefCriterion,
        representative: Some(task.target()),
        representative_text: Some(task.target().to_string()),
        congruence: Some(CongruenceWitness { a: 0, b: 0, t: 0 }),
        bound: 0,
        verdict: Verdict::Proven,
        assumptions: vec![ASSUME_NEF.into()],
    })
}

/// `h^0(-E_i + E_j) = 0` and `h^0(K_Y + E_i - E_j) = 0` for `1 <= j < i <= 9`.
pub fn degree_bound_on_y(task: &VanishingTask) -> Option<CertificateEntry> {
    if !(1 <= task.j && task.i <= 9) {
        return None;
    }
    let diff = e(task.j) - e(task.i);
    let rep = if task.degree == 0 { diff } else { k_y() - diff };
    let h0 = h0_low_degree(&rep).expect("degree at most zero");
    let bound = bound_from_h0(&rep, h0).ok()?;
    let target = task.target();
    let (congruence, mut assumptions) = match congruence_check(&rep, &target) {
        Ok(w) if w.is_torsion_twist() => (Some(w), vec![ASSUME_TORSION.to_string()]),
        Ok(w) => (Some(w), Vec::new()),
        Err(_) => {
            assert!(numerically_equal(&glue(&rep).ok()?, &glue(&target).ok()?));
            (None, vec![ASSUME_NUMERICAL.to_string()])
        }
    };
    if task.degree == 2 {
        assumptions.push(ASSUME_PERTURB.into());
    }
    Some(CertificateEntry {
        task: *task,
        method: Method::DegreeBoundOnY,
        representative: Some(rep),
        representative_text: Some(rep.to_string()),
        congruence,
        bound,
        verdict: if bound == 0 {
            Verdict::Proven
        } else {
            Verdict::BoundOnly(bound)
        },
        assumptions,
    })
}

/// Replaces an index in `1..=8` by 9, using the conjugacy of the base points.
pub fn symmetry_reduce(task: &VanishingTask) -> Result<(VanishingTask, &'static str), VerifyError> {
    let orbit = |k: usize| (1..=8).contains(&k);
    let (i, j) = (task.i, task.j);
    let reduced = match (orbit(i), orbit(j)) {
        (true, false) if j == 0 => VanishingTask { i: 9, ..*task },
        (false, true) if i >= 10 => VanishingTask { j: 9, ..*task },
        _ => return Err(VerifyError::NotReducible(*task)),
    };
    Ok((reduced, ASSUME_GENERIC))
}

/// Normal form under [`symmetry_reduce`]; tasks it does not apply to are
/// returned unchanged.
pub fn symmetry_normal_form(task: &VanishingTask) -> VanishingTask {
    symmetry_reduce(task).map(|(t, _)| t).unwrap_or(*task)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum OracleMode {
    Modular,
    Off,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub oracle: OracleMode,
    pub overrides: BTreeMap<VanishingTask, DivisorClass>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            oracle: OracleMode::Modular,
            overrides: BTreeMap::new(),
            seed: 20_240_601,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemRecord {
    pub representative: DivisorClass,
    pub text: String,
    pub degree: i64,
    pub columns: usize,
    pub conditions: usize,
    pub h0: usize,
    pub modular: Option<ModularRank>,
    pub oracle_h0: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairClosure {
    pub i: usize,
    pub j: usize,
    pub chi: i64,
    pub h1_vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub tasks: usize,
    pub by_method: BTreeMap<String, usize>,
    pub by_verdict: BTreeMap<String, usize>,
    pub pairs_closed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: config::ConfigEcho,
    pub entries: Vec<CertificateEntry>,
    pub closures: Vec<PairClosure>,
    pub systems: Vec<SystemRecord>,
    pub summary: Summary,
    pub findings: Vec<Finding>,
    pub assumptions: Vec<String>,
}

impl Report {
    pub fn all_proven(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Proven)
    }

    /// 0 when everything is proven, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_proven() {
            0
        } else {
            3
        }
    }

    pub fn entry(&self, task: &VanishingTask) -> &CertificateEntry {
        self.entries
            .iter()
            .find(|e| e.task == *task)
            .expect("every task has an entry")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// How a task will be resolved, before any interpolation.
enum Plan {
    Done(CertificateEntry),
    Bound(ChosenRepresentative),
    Reduced(VanishingTask),
}

fn plan(task: &VanishingTask, opts: &VerifyOptions) -> Result<Plan, VerifyError> {
    if let Some(e) = nef_h_vanishing(task) {
        return Ok(Plan::Done(e));
    }
    if let Some(e) = degree_bound_on_y(task) {
        return Ok(Plan::Done(e));
    }
    if let Ok((t, _)) = symmetry_reduce(task) {
        return Ok(Plan::Reduced(t));
    }
    Ok(Plan::Bound(representative_for(task, &opts.overrides)?))
}

/// Runs every method in order and assembles the certificate.
pub fn verify_all(cfg: &PointConfig, opts: &VerifyOptions) -> Result<Report, VerifyError> {
    let tasks = required_tasks();
    let plans: Vec<(VanishingTask, Plan)> = tasks
        .iter()
        .map(|t| plan(t, opts).map(|p| (*t, p)))
        .collect::<Result<_, _>>()?;

    // Interpolation for each distinct representative, in parallel.
    let mut reps: BTreeSet<DivisorClass> = BTreeSet::new();
    for (_, p) in &plans {
        if let Plan::Bound(c) = p {
            reps.insert(c.class);
        }
    }
    let reps: Vec<DivisorClass> = reps.into_iter().collect();
    let systems: Vec<SystemRecord> = reps
        .par_iter()
        .enumerate()
        .map(|(k, rep)| evaluate_system(rep, cfg, opts, k as u64))
        .collect::<Result<_, _>>()?;
    let h0_of: HashMap<DivisorClass, usize> = systems.iter().map(|s| (s.representative, s.h0)).collect();

    let mut findings = Vec::new();
    let mut entries: BTreeMap<VanishingTask, CertificateEntry> = BTreeMap::new();
    for (task, p) in &plans {
        match p {
            Plan::Done(e) => {
                entries.insert(*task, e.clone());
            }
            Plan::Bound(c) => {
                let bound = bound_from_h0(&c.class, h0_of[&c.class])?;
                let mut assumptions = vec![ASSUME_PERTURB.to_string()];
                if c.witness.is_torsion_twist() {
                    assumptions.push(ASSUME_TORSION.into());
                    findings.push(Finding {
                        kind: "torsion-twist".into(),
                        message: format!(
                            "{task}: representative {} differs from the target by {} (B1 - B2), which is numerically trivial but not certified",
                            c.class, c.witness.t
                        ),
                    });
                }
                for r in &c.rejected {
                    findings.push(Finding {
                        kind: "representative-rejected".into(),
                        message: format!(
                            "{task}: {:?} representative {} rejected: {}",
                            r.source, r.text, r.reason
                        ),
                    });
                }
                if c.source == RepSource::Corrected {
                    findings.push(Finding {
                        kind: "representative-corrected".into(),
                        message: format!("{task}: certified with corrected representative {}", c.class),
                    });
                }
                let verdict = if bound == 0 {
                    Verdict::Proven
                } else {
                    Verdict::BoundOnly(bound)
                };
                entries.insert(
                    *task,
                    CertificateEntry {
                        task: *task,
                        method: Method::SemicontinuityBound,
                        representative: Some(c.class),
                        representative_text: Some(c.class.to_string()),
                        congruence: Some(c.witness),
                        bound,
                        verdict,
                        assumptions,
                    },
                );
            }
            Plan::Reduced(_) => {}
        }
    }
    for (task, p) in &plans {
        if let Plan::Reduced(to) = p {
            let target = entries[to].clone();
            let verdict = match &target.verdict {
                Verdict::Proven => Verdict::Proven,
                _ => Verdict::Flagged(format!("reduces to {to}, which is not proven")),
            };
            let mut assumptions = vec![ASSUME_GENERIC.to_string()];
            assumptions.extend(target.assumptions.iter().cloned());
            assumptions.dedup();
            entries.insert(
                *task,
                CertificateEntry {
                    task: *task,
                    method: Method::SymmetryReduced(*to),
                    representative: target.representative.map(|r| r.swap_e(to_orbit_index(task), 9)),
                    representative_text: None,
                    congruence: target.congruence,
                    bound: target.bound,
                    verdict,
                    assumptions,
                },
            );
        }
    }
    for en in entries.values_mut() {
        if en.representative_text.is_none() {
            en.representative_text = en.representative.map(|r| r.to_string());
        }
    }
    let entries: Vec<CertificateEntry> = entries.into_values().collect();

    let closures: Vec<PairClosure> = (1..=12)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .map(|(i, j)| {
            let chi = chi_glued_difference(i, j).expect("pairs glue");
            let proven = |p| {
                entries
                    .iter()
                    .any(|e| e.task == VanishingTask::new(i, j, p) && e.verdict == Verdict::Proven)
            };
            PairClosure {
                i,
                j,
                chi,
                h1_vanishes: chi == 0 && proven(0) && proven(2),
            }
        })
        .collect();

    findings.extend(configuration_findings(cfg));
    for s in &systems {
        if let (Some(m), Some(o)) = (&s.modular, s.oracle_h0) {
            if !m.agree || o != s.h0 {
                findings.push(Finding {
                    kind: "oracle-disagreement".into(),
                    message: format!(
                        "{}: exact h0 {}, modular h0 {} (ranks {:?} mod {:?})",
                        s.text, s.h0, o, m.ranks, m.primes
                    ),
                });
            }
        }
    }
    findings.extend(printed_row_outcomes(cfg, opts)?);

    let mut by_method = BTreeMap::new();
    let mut by_verdict = BTreeMap::new();
    for e in &entries {
        *by_method.entry(e.method.name().to_string()).or_insert(0) += 1;
        *by_verdict.entry(e.verdict.name().to_string()).or_insert(0) += 1;
    }
    by_method.insert(
        Method::ChiZero.name().to_string(),
        closures.iter().filter(|c| c.chi == 0).count(),
    );
    let summary = Summary {
        tasks: entries.len(),
        by_method,
        by_verdict,
        pairs_closed: closures.iter().filter(|c| c.h1_vanishes).count(),
    };
    Ok(Report {
        version: VERSION.into(),
        config: config::ConfigEcho::from_config(cfg),
        entries,
        closures,
        systems,
        summary,
        findings,
        assumptions: global_assumptions(),
    })
}

fn to_orbit_index(task: &VanishingTask) -> usize {
    if (1..=8).contains(&task.j) {
        task.j
    } else {
        task.i
    }
}

fn evaluate_system(
    rep: &DivisorClass,
    cfg: &PointConfig,
    opts: &VerifyOptions,
    k: u64,
) -> Result<SystemRecord, VerifyError> {
    let text = rep.to_string();
    if let Some(h0) = h0_low_degree(rep) {
        return Ok(SystemRecord {
            representative: *rep,
            text,
            degree: rep.h(),
            columns: usize::from(rep.h() == 0),
            conditions: 0,
            h0,
            modular: None,
            oracle_h0: None,
        });
    }
    let sys = divisor_to_system(rep, cfg)?;
    let LinearSystem::Points(fat) = &sys else {
        unreachable!("positive degree")
    };
    let h0 = crate::interpolation::h0(&sys);
    let (oracle_h0, modular) = match opts.oracle {
        OracleMode::Modular => {
            let mut src = PrimeSource::new(opts.seed.wrapping_add(k));
            let (h, r) = h0_modular_oracle(&sys, 3, &mut src);
            (Some(h), r)
        }
        OracleMode::Off => (None, None),
    };
    Ok(SystemRecord {
        representative: *rep,
        text,
        degree: rep.h(),
        columns: fat.columns(),
        conditions: fat.condition_count(),
        h0,
        modular,
        oracle_h0,
    })
}

/// Outcomes of printed rows that were not used, so both versions are on
/// record.
fn printed_row_outcomes(cfg: &PointConfig, opts: &VerifyOptions) -> Result<Vec<Finding>, VerifyError> {
    let mut out = Vec::new();
    for task in required_tasks() {
        let Ok(c) = representative_for(&task, &opts.overrides) else {
            continue;
        };
        for r in &c.rejected {
            let g = match glue(&r.class) {
                Ok(g) => format!("d = ({}, {})", g.d1, g.d2),
                Err(e) => e.to_string(),
            };
            let h0 = match h0_on_y(&r.class, cfg) {
                Ok(v) => format!("h0 on Y = {v}"),
                Err(e) => e.to_string(),
            };
            out.push(Finding {
                kind: "printed-row-outcome".into(),
                message: format!("{task}: {} gives {h0}; {g}", r.text),
            });
        }
    }
    Ok(out)
}

fn configuration_findings(cfg: &PointConfig) -> Vec<Finding> {
    let mut out = Vec::new();
    let det = |a, b, c| crate::pencil::colinear_det(a, b, c);
    for (names, pts) in [
        ("(e9, e0, node1)", [&cfg.e9, &cfg.e0, &cfg.node1]),
        ("(e9, node1, node2)", [&cfg.e9, &cfg.node1, &cfg.node2]),
    ] {
        let v = det(pts[0], pts[1], pts[2]);
        if num_traits::Zero::is_zero(&v) {
            out.push(Finding {
                kind: "colinear".into(),
                message: format!("{names} = ({}, {}, {}) are colinear", pts[0], pts[1], pts[2]),
            });
        }
    }
    let others: Vec<String> = cfg
        .rational_base_points
        .iter()
        .filter(|p| **p != cfg.e9)
        .map(|p| p.to_string())
        .collect();
    if !others.is_empty() {
        out.push(Finding {
            kind: "non-galois-block".into(),
            message: format!(
                "the E1..E8 block contains rational base point(s) {}; its points are not all conjugate",
                others.join(", ")
            ),
        });
    }
    out
}

pub fn global_assumptions() -> Vec<String> {
    vec![
        format!("{ASSUME_NEF}: B1^g is nef (asserted, not proved)"),
        format!("{ASSUME_GENERIC}: used by every SymmetryReduced entry"),
        format!("{ASSUME_PERTURB}: h0 at a special pencil bounds h0 at a general one"),
        "K_S is represented by E0 up to numerical equivalence; torsion is not certified".into(),
        "each O_S(D_i^g) is exceptional because h1(O_S) = h2(O_S) = 0; not computed".into(),
    ]
}

/// Glued pairing of a class with `B1^g`.
pub fn pairing_with_b1(c: &DivisorClass) -> Option<i64> {
    Some(glued_pair(&glue(c).ok()?, &lattice::glue(&B1).ok()?))
}
