use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use enriques_core::interpolation::{colinear, divisor_to_system, h0_low_degree, LinearSystem};
use enriques_core::lattice::{self, component_table, glue, gram_and_ks_check, DivisorClass};
use enriques_core::pencil::{base_locus, PointConfig};
use enriques_core::verifier::config::{ConfigError, ConfigFile};
use enriques_core::verifier::{self, OracleMode, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "enriques-verify",
    version,
    about = "Checks the exceptional collection on the smoothed Enriques surface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report on the cubic pencil of a config.
    Analyze { config: PathBuf },
    /// Print the glued pairing table, the Gram matrix and the K_S relation.
    Lattice {
        #[arg(long)]
        json: bool,
    },
    /// h0 of a class on Y, given as 13 integers in the basis H, E0, E1..E9, B1, B2.
    H0 {
        config: PathBuf,
        #[arg(num_args = 13, allow_negative_numbers = true, required = true)]
        divisor: Vec<i64>,
    },
    /// Resolve all 156 vanishing tasks and print the certificate.
    Verify {
        config: PathBuf,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Modular)]
        oracle: Oracle,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Modular,
    Off,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Analyze { config } => analyze(&config),
        Command::Lattice { json } => print_lattice(json),
        Command::H0 { config, divisor } => h0(&config, &divisor),
        Command::Verify { config, json, oracle } => verify(&config, json.as_deref(), oracle),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> Result<(ConfigFile, PointConfig), Failure> {
    let file = ConfigFile::load(path)?;
    let cfg = file.point_config()?;
    Ok((file, cfg))
}

fn analyze(path: &Path) -> Result<u8, Failure> {
    let (_, cfg) = load(path)?;
    let (h1, h2) = &cfg.cubics;
    println!("h1 = {h1}");
    println!("h2 = {h2}");
    println!("node1 (B1) = {}", cfg.node1);
    println!("node2 (B2) = {}", cfg.node2);
    let locus = base_locus(h1, h2).map_err(|e| Failure::Internal(e.to_string()))?;
    let pts: Vec<String> = locus.rational.iter().map(|p| p.to_string()).collect();
    println!("rational base points: {}", pts.join(" "));
    println!("e9 = {}", cfg.e9);
    println!("e0 = {}", cfg.e0);
    let o = &cfg.orbit;
    let names = ["x", "y", "z"];
    println!("orbit E1..E8: chart {} = 1, shear {}", names[o.chart], o.shear);
    println!("  f(t) = {}", o.minpoly);
    println!("  xi(t) = {}", o.xi);
    println!("  eta(t) = {}", o.eta);
    let roots = o.minpoly.rational_roots();
    if !roots.is_empty() {
        let r: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        println!(
            "  f has rational roots {}: the block is not one Galois orbit",
            r.join(", ")
        );
    }
    for (name, [a, b, c]) in [
        ("(e9, e0, node1)", [&cfg.e9, &cfg.e0, &cfg.node1]),
        ("(e9, node1, node2)", [&cfg.e9, &cfg.node1, &cfg.node2]),
    ] {
        let col = colinear(a, b, c).map_err(|e| Failure::Input(e.to_string()))?;
        println!("colinear{name} = {col}");
    }
    Ok(0)
}

fn print_lattice(as_json: bool) -> Result<u8, Failure> {
    let (labels, table) = component_table();
    let (gram, ks) = gram_and_ks_check();
    let k = glue(&lattice::k_y()).map_err(|e| Failure::Internal(e.to_string()))?;
    if as_json {
        let v = json!({
            "labels": labels,
            "table": table,
            "gram": gram,
            "ks_relation_holds": ks,
            "k_y_glue": [k.d1, k.d2],
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&v).map_err(|e| Failure::Internal(e.to_string()))?
        );
        return Ok(0);
    }
    println!("glued pairings (i != j):");
    print!("{:>5}", "");
    for l in &labels {
        print!("{l:>5}");
    }
    println!();
    for (l, row) in labels.iter().zip(&table) {
        print!("{l:>5}");
        for v in row {
            print!("{v:>5}");
        }
        println!();
    }
    println!("Gram matrix of D1^g..D11^g:");
    for row in &gram {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        println!("{}", cells.join(""));
    }
    println!("D1^g + .. + D10^g - 3 D11^g == E0^g numerically: {ks}");
    Ok(0)
}

fn h0(path: &Path, coords: &[i64]) -> Result<u8, Failure> {
    let (_, cfg) = load(path)?;
    let arr: [i64; 13] = coords
        .try_into()
        .map_err(|_| Failure::Input(format!("expected 13 integers, got {}", coords.len())))?;
    let d = DivisorClass(arr);
    println!("D = {d}");
    match glue(&d) {
        Ok(g) => println!("d = ({}, {})", g.d1, g.d2),
        Err(e) => println!("does not glue: {e}"),
    }
    let value = match h0_low_degree(&d) {
        Some(v) => v,
        None => {
            let sys = divisor_to_system(&d, &cfg).map_err(|e| Failure::Input(e.to_string()))?;
            if let LinearSystem::Points(s) = &sys {
                println!(
                    "degree {} system: {} monomials, {} conditions",
                    s.degree,
                    s.columns(),
                    s.condition_count()
                );
            }
            enriques_core::interpolation::h0(&sys)
        }
    };
    println!("h0 = {value}");
    if let Ok(b) = verifier::semicontinuity_bound(&d, &cfg) {
        println!("bound = {b}");
    }
    Ok(0)
}

fn verify(path: &Path, out: Option<&Path>, oracle: Oracle) -> Result<u8, Failure> {
    let (file, cfg) = load(path)?;
    let opts = VerifyOptions {
        oracle: match oracle {
            Oracle::Modular => OracleMode::Modular,
            Oracle::Off => OracleMode::Off,
        },
        overrides: file.representative_overrides()?,
        ..VerifyOptions::default()
    };
    let report = verifier::verify_all(&cfg, &opts).map_err(|e| Failure::Input(e.to_string()))?;
    for e in &report.entries {
        let method = match e.method {
            verifier::Method::SymmetryReduced(t) => format!("SymmetryReduced({t})"),
            m => m.name().to_string(),
        };
        let verdict = match &e.verdict {
            verifier::Verdict::BoundOnly(b) => format!("BoundOnly({b})"),
            verifier::Verdict::Flagged(r) => format!("Flagged({r})"),
            v => v.name().to_string(),
        };
        println!(
            "{:<9} {:<26} bound {:<2} {:<10} {}",
            e.task.to_string(),
            method,
            e.bound,
            verdict,
            e.representative_text.as_deref().unwrap_or("")
        );
    }
    println!(
        "summary: {}",
        serde_json::to_string(&report.summary).map_err(|e| Failure::Internal(e.to_string()))?
    );
    for f in &report.findings {
        println!("finding [{}] {}", f.kind, f.message);
    }
    if let Some(p) = out {
        std::fs::write(p, report.to_json())
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(report.exit_code() as u8)
}
