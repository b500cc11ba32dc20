//! Acceptance criteria, one PASS/FAIL line each.
//!
//! A criterion listed in `KNOWN_FAILURES` still prints FAIL; the run only
//! errors if a criterion fails with a different detail or starts passing.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use enriques_core::algebra::modular::{modular_rank, PrimeSource};
use enriques_core::interpolation::{self, divisor_to_system, points_system, LinearSystem};
use enriques_core::lattice::{
    self, a, chi_glued_difference, component_table, e, glue, glued_pair, glued_square, gram_and_ks_check,
    numerically_equal, probes, CongruenceWitness, DivisorClass, B1, B2, E0, H, RANK,
};
use enriques_core::pencil::{
    base_locus, build_config, colinear_det, reference_cubics, search_alternate, shape_in_chart, NodeAssignment,
    PointConfig, ProjPointQ,
};
use enriques_core::verifier::config::ConfigFile;
use enriques_core::verifier::{
    self, h0_on_y, representative_candidates, representative_for, Method, RepSource, VanishingTask, Verdict,
    VerifyOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion number and the exact detail it is expected to fail with.
const KNOWN_FAILURES: &[(u32, &str)] = &[(1, "Q.l_i = 8, table 10; Q.l_j = 8, table 10")];

const SEED: u64 = 0x5eed_0013;

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn check(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn configs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn reference_config() -> PointConfig {
    let (h1, h2) = reference_cubics();
    build_config(&h1, &h2, &pt([4, 9, 6]), None, NodeAssignment::H1ToB1).unwrap()
}

fn pt(c: [i64; 3]) -> ProjPointQ {
    ProjPointQ::from_i64s(c).unwrap()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_enriques-verify"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_1() -> Outcome {
    // Printed values; rows and columns are Q, l_i, l_j, B1, E0.
    let table: [[i64; 5]; 5] = [
        [22, 10, 10, 3, 0],
        [10, 2, 3, 1, 0],
        [10, 3, 2, 1, 0],
        [3, 1, 1, 0, 0],
        [0, 0, 0, 0, -1],
    ];
    let (labels, got) = component_table();
    let mut bad = Vec::new();
    for r in 0..5 {
        for c in r..5 {
            if got[r][c] != table[r][c] {
                bad.push(format!(
                    "{}.{} = {}, table {}",
                    labels[r], labels[c], got[r][c], table[r][c]
                ));
            }
        }
    }
    let (code, out) = run_cli(&["lattice"]);
    let cli_ok = code == 0 && out.contains("   Q   22    8    8    3    0");
    Outcome::check(
        bad.is_empty() && cli_ok,
        if bad.is_empty() {
            "table matches".into()
        } else {
            bad.join("; ")
        },
    )
}

fn criterion_2() -> Outcome {
    let (gram, ks) = gram_and_ks_check();
    let diag = (0..11).all(|r| {
        (0..11).all(|c| {
            gram[r][c]
                == if r != c {
                    0
                } else if r < 10 {
                    -1
                } else {
                    1
                }
        })
    });
    Outcome::check(diag && ks, format!("diag(-1 x 10, +1): {diag}, K_S relation: {ks}"))
}

fn criterion_3() -> Outcome {
    let pairs: Vec<(usize, usize)> = (1..=12).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let nonzero: Vec<_> = pairs
        .iter()
        .filter(|(i, j)| chi_glued_difference(*i, *j) != Ok(0))
        .collect();
    Outcome::check(
        pairs.len() == 78 && nonzero.is_empty(),
        format!("{} pairs, {} with chi != 0", pairs.len(), nonzero.len()),
    )
}

fn criterion_4() -> Outcome {
    let (h1, h2) = reference_cubics();
    let cfg = match build_config(&h1, &h2, &pt([4, 9, 6]), None, NodeAssignment::H1ToB1) {
        Ok(c) => c,
        Err(e) => return Outcome::check(false, e.to_string()),
    };
    let f = &cfg.orbit.minpoly;
    let squarefree = f.squarefree_part().map(|s| s.degree() == f.degree()).unwrap_or(false);
    let locus = base_locus(&h1, &h2).unwrap();
    let ok = cfg.node1 == pt([0, 1, 1])
        && cfg.node2 == pt([0, 0, 1])
        && cfg.e9 == pt([0, 1, 0])
        && locus.rational.contains(&pt([0, 1, 0]))
        && cfg.orbit.degree() == 8
        && squarefree
        && cfg.orbit.lies_on(h1.form())
        && cfg.orbit.lies_on(h2.form());
    let extra: Vec<String> = locus
        .rational
        .iter()
        .filter(|p| **p != cfg.e9)
        .map(|p| p.to_string())
        .collect();
    Outcome::check(
        ok,
        format!(
            "nodes {} {}, e9 {}, orbit degree {}, squarefree {squarefree}, other rational base points [{}]",
            cfg.node1,
            cfg.node2,
            cfg.e9,
            cfg.orbit.degree(),
            extra.join(" ")
        ),
    )
}

fn random_point(rng: &mut ChaCha8Rng, r: i64) -> ProjPointQ {
    loop {
        let c = [rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(1..=r)];
        if let Ok(p) = ProjPointQ::from_i64s(c) {
            return p;
        }
    }
}

fn criterion_5() -> Outcome {
    let mut fails = Vec::new();
    let line = points_system(1, &[(pt([1, 0, 0]), 1), (pt([0, 1, 0]), 1), (pt([0, 0, 1]), 1)]);
    if interpolation::h0(&line) != 0 {
        fails.push("line through 3 points".to_string());
    }
    let five = [[1, 0, 1], [0, 1, 1], [1, 1, 1], [2, 3, 1], [-1, 4, 1]].map(|c| (pt(c), 1));
    if interpolation::h0(&points_system(2, &five)) != 1 {
        fails.push("conic through 5 points".into());
    }
    let zero = DivisorClass::ZERO - E0;
    if interpolation::h0_low_degree(&zero) != Some(0) || interpolation::h0_low_degree(&DivisorClass::ZERO) != Some(1) {
        fails.push("degree 0".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut src = PrimeSource::new(SEED);
    let systems = 24;
    for k in 0..systems {
        let degree = rng.gen_range(1..=7);
        let n = rng.gen_range(1..=8);
        let mut pts: Vec<(ProjPointQ, u32)> = Vec::new();
        while pts.len() < n {
            let p = random_point(&mut rng, 6);
            if !pts.iter().any(|(q, _)| *q == p) {
                pts.push((p, rng.gen_range(1..=3)));
            }
        }
        let LinearSystem::Points(s) = points_system(degree, &pts) else {
            unreachable!()
        };
        let m = s.condition_matrix().matrix;
        let exact = m.rank();
        let modular = modular_rank(&m, 3, &mut src);
        if !modular.agree || modular.rank != exact {
            fails.push(format!("system {k}: exact {exact}, modular {:?}", modular.ranks));
        }
    }
    Outcome::check(
        fails.is_empty(),
        if fails.is_empty() {
            format!("{systems} random systems agree")
        } else {
            fails.join("; ")
        },
    )
}

fn criterion_6() -> Outcome {
    let cfg = reference_config();
    let mut fails = Vec::new();
    let mut seen = Vec::new();
    let rows = [(11, 0), (11, 9), (11, 10), (12, 0), (12, 11), (12, 9), (12, 10)];
    for (i, j) in rows {
        let task = VanishingTask::new(i, j, 0);
        let chosen = representative_for(&task, &Default::default()).unwrap();
        if (i, j) == (12, 9) || (i, j) == (12, 10) {
            assert_eq!(chosen.source, RepSource::Corrected);
        }
        let h0 = h0_on_y(&chosen.class, &cfg).unwrap();
        seen.push(format!("{task}={h0}"));
        if h0 != 0 {
            fails.push(task.to_string());
        }
    }
    let d16 = representative_candidates(&VanishingTask::new(12, 0, 0))[0].1;
    let LinearSystem::Points(s) = divisor_to_system(&d16, &cfg).unwrap() else {
        unreachable!()
    };
    let shape = (s.columns(), s.condition_count());
    Outcome::check(
        fails.is_empty() && shape == (153, 153),
        format!("{}; degree 16 system {}x{}", seen.join(" "), shape.1, shape.0),
    )
}

fn criterion_7() -> Outcome {
    let none = Default::default();
    let c9 = representative_for(&VanishingTask::new(12, 9, 0), &none).unwrap();
    let c10 = representative_for(&VanishingTask::new(12, 10, 0), &none).unwrap();
    let printed_flagged = [&c9, &c10]
        .iter()
        .all(|c| c.rejected.len() == 1 && c.rejected[0].source == RepSource::Printed);
    let ok = printed_flagged
        && c9.witness == CongruenceWitness { a: 1, b: 2, t: 0 }
        && c10.witness == CongruenceWitness { a: 0, b: 3, t: 0 };
    Outcome::check(
        ok,
        format!(
            "printed rows rejected: {printed_flagged}; corrected witnesses ({},{},{}), ({},{},{})",
            c9.witness.a, c9.witness.b, c9.witness.t, c10.witness.a, c10.witness.b, c10.witness.t
        ),
    )
}

fn criterion_8() -> Outcome {
    let cfg = reference_config();
    let det1 = colinear_det(&cfg.e9, &cfg.e0, &cfg.node1);
    let det2 = colinear_det(&cfg.e9, &cfg.node1, &cfg.node2);
    let report = verifier::verify_all(&cfg, &VerifyOptions::default()).unwrap();
    let bound_only: Vec<_> = report
        .entries
        .iter()
        .filter(|e| matches!(e.verdict, Verdict::BoundOnly(_)))
        .map(|e| (e.task, e.bound))
        .collect();
    let reference = configs_dir().join("reference.json");
    let (code, _) = run_cli(&["verify", reference.to_str().unwrap(), "--oracle", "off"]);
    let ok = det1 == (-4).into()
        && det2 == 0.into()
        && report.exit_code() == 3
        && code == 3
        && bound_only == vec![(VanishingTask::new(10, 9, 2), 1)];
    let listed: Vec<String> = bound_only.iter().map(|(t, b)| format!("{t} bound {b}")).collect();
    Outcome::check(
        ok,
        format!("det {det1}, {det2}; exit {code}; BoundOnly [{}]", listed.join(", ")),
    )
}

fn criterion_9() -> Outcome {
    let (h1, h2) = reference_cubics();
    let e0 = pt([4, 9, 6]);
    let Some((a, b, cfg)) = search_alternate(&h1, &h2, &e0, 3) else {
        return Outcome::check(false, "no alternate configuration within radius 3");
    };
    let file = ConfigFile::load(&configs_dir().join("alternate.json")).unwrap();
    let stored = file.point_config().unwrap();
    let same = stored.cubics.1.form() == cfg.cubics.1.form() && stored.e9 == cfg.e9;
    let report = verifier::verify_all(&cfg, &VerifyOptions::default()).unwrap();
    let all = report.entries.len() == 156 && report.all_proven();
    let core = [0, 9, 10, 11, 12];
    let nef_core: BTreeSet<String> = report
        .entries
        .iter()
        .filter(|e| core.contains(&e.task.i) && core.contains(&e.task.j) && e.method == Method::NefCriterion)
        .map(|e| e.task.to_string())
        .collect();
    let nef_want: BTreeSet<String> = [
        "h2_9_0", "h0_10_9", "h2_11_0", "h2_11_9", "h2_11_10", "h2_12_0", "h2_12_9", "h2_12_10", "h2_12_11",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    let degree_ok = report
        .entries
        .iter()
        .all(|e| (e.task.i <= 9 && e.task.j >= 1) == (e.method == Method::DegreeBoundOnY));
    let rest_ok = report.entries.iter().all(|e| {
        matches!(
            e.method,
            Method::NefCriterion | Method::DegreeBoundOnY | Method::SemicontinuityBound | Method::SymmetryReduced(_)
        )
    });
    let chi_ok = report.closures.len() == 78 && report.closures.iter().all(|c| c.chi == 0 && c.h1_vanishes);
    let alt = configs_dir().join("alternate.json");
    let (code, _) = run_cli(&["verify", alt.to_str().unwrap()]);
    let ok = same && all && nef_core == nef_want && degree_ok && rest_ok && chi_ok && code == 0;
    Outcome::check(
        ok,
        format!(
            "translate ({a},{b}) matches config: {same}; all proven: {all}; nef on core pairs: {}; exit {code}; {:?}",
            nef_core == nef_want,
            report.summary.by_method
        ),
    )
}

fn random_class(rng: &mut ChaCha8Rng) -> DivisorClass {
    let mut c = [0i64; RANK];
    for v in c.iter_mut() {
        *v = rng.gen_range(-6..=6);
    }
    DivisorClass(c)
}

fn criterion_10() -> Outcome {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);

    let zero = glue(&DivisorClass::ZERO).unwrap();
    for (name, cls) in [("A1", a(1)), ("A2", a(2)), ("B1 - B2", B1 - B2)] {
        if !numerically_equal(&glue(&cls).unwrap(), &zero) {
            fails.push(format!("{name} not numerically trivial"));
        }
    }
    let mut glued = 0;
    while glued < 1000 {
        let x = random_class(&mut rng);
        let Ok(g) = glue(&x) else { continue };
        glued += 1;
        for shift in [a(1), a(2), a(1) * 2 - a(2), (B1 - B2) * 3] {
            let y = glue(&(x + shift)).unwrap();
            if glued_square(&y) != glued_square(&g) || probes().iter().any(|p| glued_pair(&y, p) != glued_pair(&g, p)) {
                fails.push(format!("{x} changes under adding {shift}"));
            }
        }
    }

    // Perturbation: the reference configuration has node2 on the line through e9
    // and node1; moving node2 off it can only lower h0.
    let cfg = reference_config();
    let classes = [
        H - e(9) - B1 - B2,
        H * 2 - e(9) - E0 - B1 - B2,
        H * 3 - lattice::sum_e() - B1 - B2,
        H * 2 - e(9) * 2 - B1 - B2,
    ];
    let special: Vec<usize> = classes.iter().map(|c| h0_on_y(c, &cfg).unwrap()).collect();
    for _ in 0..6 {
        let mut moved = cfg.clone();
        moved.node2 = random_point(&mut rng, 9);
        if [&moved.e9, &moved.e0, &moved.node1].contains(&&moved.node2) {
            continue;
        }
        for (c, s) in classes.iter().zip(&special) {
            let g = h0_on_y(c, &moved).unwrap();
            if g > *s {
                fails.push(format!("{c}: h0 {g} at node2 = {} exceeds {s}", moved.node2));
            }
        }
    }
    if special[0] != 1 {
        fails.push(format!("line through e9, node1, node2 gives h0 {}", special[0]));
    }

    // Chart and shear invariance of the orbit conditions.
    let (h1, h2) = reference_cubics();
    let mut shapes = Vec::new();
    for chart in [2, 1, 0] {
        for shear in [0, 1, -2, 3] {
            if let Ok(o) = shape_in_chart(&h1, &h2, std::slice::from_ref(&cfg.e9), chart, shear) {
                shapes.push(o);
            }
        }
    }
    let inv_classes = [
        H * 3 - lattice::sum_e() - E0,
        H * 4 - lattice::sum_e() - e(9) - E0 * 2 - B1,
        representative_candidates(&VanishingTask::new(11, 9, 0))[0].1,
        representative_candidates(&VanishingTask::new(11, 0, 0))[0].1,
    ];
    let base: Vec<usize> = inv_classes.iter().map(|c| h0_on_y(c, &cfg).unwrap()).collect();
    for o in &shapes {
        let mut alt = cfg.clone();
        alt.orbit = o.clone();
        let got: Vec<usize> = inv_classes.iter().map(|c| h0_on_y(c, &alt).unwrap()).collect();
        if got != base {
            fails.push(format!("chart {} shear {}: {got:?} vs {base:?}", o.chart, o.shear));
        }
    }
    if shapes.len() < 3 {
        fails.push(format!("only {} orbit representations", shapes.len()));
    }
    Outcome::check(
        fails.is_empty(),
        if fails.is_empty() {
            format!(
                "{glued} glued classes, {} orbit representations, h0 {base:?}",
                shapes.len()
            )
        } else {
            fails.join("; ")
        },
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "lattice table", Duration::from_secs(1), criterion_1),
        (2, "Gram matrix and K_S relation", Duration::from_secs(1), criterion_2),
        (3, "chi closure", Duration::from_secs(1), criterion_3),
        (4, "pencil analysis", Duration::from_secs(5), criterion_4),
        (5, "interpolation corpus", Duration::from_secs(30), criterion_5),
        (6, "table rows vanish", Duration::from_secs(600), criterion_6),
        (7, "congruence audit", Duration::from_secs(1), criterion_7),
        (8, "colinearity and exit code 3", Duration::from_secs(600), criterion_8),
        (9, "full certificate", Duration::from_secs(900), criterion_9),
        (10, "property suites", Duration::from_secs(300), criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= limit;
        println!(
            "{} criterion {n:>2} {name}: {} ({:.2?}, limit {:?})",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            limit
        );
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        match (pass, known) {
            (true, None) => {}
            (false, Some((_, detail))) if out.detail == *detail && elapsed <= limit => {
                println!("     known failure, see decisions ledger");
            }
            _ => unexpected.push(n),
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
