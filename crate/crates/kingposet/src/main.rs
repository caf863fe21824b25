use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kingposet::analysis::AnalysisReport;
use kingposet::kings::{self, KingClass};
use kingposet::perm::Permutation;
use kingposet::poset;
use kingposet::prolific::{self, PermClass};

/// Caps the exhaustive verification suites.
const MAX_N_ENV: &str = "KINGPOSET_MAX_N";
const DEFAULT_MAX_N: usize = 8;

#[derive(Parser)]
#[command(
    name = "kingposet",
    version,
    about = "Analyze king and cylindrical-king permutations"
)]
struct Cli {
    /// Worker threads for parallel enumeration and verification.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    King,
    Ck,
}

impl From<ClassArg> for KingClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::King => KingClass::King,
            ClassArg::Ck => KingClass::Cylindrical,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProlificClassArg {
    Plain,
    King,
    Ck,
}

impl From<ProlificClassArg> for PermClass {
    fn from(c: ProlificClassArg) -> Self {
        match c {
            ProlificClassArg::Plain => PermClass::Plain,
            ProlificClassArg::King => PermClass::King,
            ProlificClassArg::Ck => PermClass::Cylindrical,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Count,
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Gap,
    Blocks,
    DeletionObs,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural and metric report for one permutation.
    Analyze {
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// List the members of K_n or CK_n in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Downset of a cylindrical king permutation within CK, with cover edges.
    Downset {
        perm: String,
        /// Write DOT to this file, or "-" for stdout.
        #[arg(long)]
        dot: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// k-prolific verdict, by definitional oracle or by breadth criterion.
    Prolific {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        class: ProlificClassArg,
        /// Skip the subset oracle and report only the breadth criterion.
        #[arg(long)]
        criterion_only: bool,
    },
    /// Exhaustive theorem suites; exits nonzero iff a violation is found.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// The cyclic-rotation equivalence class of a permutation.
    Orbit {
        perm: String,
        #[arg(long)]
        json: bool,
    },
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn suite_cap() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn metric_line(name: &str, report: &kingposet::MetricReport) -> String {
    match (report.value, report.witness) {
        (Some(v), Some((i, j))) => format!("{name}: {v} (witness positions {i},{j})"),
        _ => format!("{name}: unbounded"),
    }
}

fn cmd_analyze(perm: &str, json: bool) -> Result<i32, String> {
    let sigma = parse_perm(perm)?;
    let report = AnalysisReport::new(&sigma);
    if json {
        println!("{}", serde_json::to_string(&report).unwrap());
        return Ok(0);
    }
    println!("permutation: {}", report.permutation);
    println!("n: {}", report.n);
    println!("king: {}", report.is_king);
    println!("cylindrical king: {}", report.is_cylindrical_king);
    println!("{}", metric_line("breadth", &report.breadth));
    println!("{}", metric_line("cyclic breadth", &report.cyclic_breadth));
    println!("bonds: {}", serde_json::to_string(&report.bonds).unwrap());
    println!(
        "separators: {}",
        serde_json::to_string(&report.separators).unwrap()
    );
    let children: Vec<String> = report.ck_children.iter().map(|p| p.to_string()).collect();
    println!("ck children: [{}]", children.join(", "));
    Ok(0)
}

fn cmd_enumerate(n: usize, class: KingClass, format: Format) -> Result<i32, String> {
    match format {
        Format::Count => println!("{}", kings::count(n, class)),
        Format::Lines => {
            for p in kings::enumerate(n, class) {
                println!("{p}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(&kings::enumerate(n, class)).unwrap()
            );
        }
    }
    Ok(0)
}

fn cmd_downset(perm: &str, dot: Option<&str>, json: bool) -> Result<i32, String> {
    let sigma = parse_perm(perm)?;
    let graph = poset::downset(&sigma).map_err(|e| format!("{e}"))?;
    if let Some(target) = dot {
        let text = graph.to_dot();
        if target == "-" {
            print!("{text}");
        } else {
            std::fs::File::create(target)
                .and_then(|mut f| f.write_all(text.as_bytes()))
                .map_err(|e| format!("cannot write {target}: {e}"))?;
        }
        return Ok(0);
    }
    if json {
        println!("{}", serde_json::to_string(&graph).unwrap());
        return Ok(0);
    }
    println!("nodes ({}):", graph.nodes.len());
    for n in &graph.nodes {
        println!("  {n}");
    }
    println!("edges ({}):", graph.edges.len());
    for (u, l) in &graph.edges {
        println!("  {u} -> {l}");
    }
    Ok(0)
}

fn cmd_prolific(
    perm: &str,
    k: usize,
    class: PermClass,
    criterion_only: bool,
) -> Result<i32, String> {
    let sigma = parse_perm(perm)?;
    if criterion_only {
        let verdict =
            prolific::prolific_criterion(&sigma, k, class).map_err(|e| format!("{e}"))?;
        println!("{verdict}");
        return Ok(0);
    }
    let report = prolific::is_k_prolific(&sigma, k, class).map_err(|e| format!("{e}"))?;
    println!("{}", serde_json::to_string(&report).unwrap());
    Ok(0)
}

fn cmd_verify(suite: Suite, max_n: Option<usize>) -> Result<i32, String> {
    let cap = suite_cap();
    let mut max_n = max_n.unwrap_or(cap);
    if max_n > cap {
        eprintln!("max-n {max_n} exceeds {MAX_N_ENV} cap {cap}; clamping");
        max_n = cap;
    }
    let (ranks, violation_lines, ok): (Vec<poset::RankSummary>, Vec<String>, bool) = match suite {
        Suite::Gap => {
            let r = poset::verify_gap_theorem(max_n).map_err(|e| format!("{e}"))?;
            let lines = r
                .violations
                .iter()
                .map(|v| serde_json::to_string(v).unwrap())
                .collect();
            (r.ranks.clone(), lines, !r.has_violations())
        }
        Suite::Blocks => {
            let r = poset::verify_building_blocks(max_n).map_err(|e| format!("{e}"))?;
            let lines = r
                .violations
                .iter()
                .map(|v| serde_json::to_string(v).unwrap())
                .collect();
            (r.ranks.clone(), lines, !r.has_violations())
        }
        Suite::DeletionObs => {
            let r = poset::verify_deletion_observation(max_n).map_err(|e| format!("{e}"))?;
            let lines = r
                .violations
                .iter()
                .map(|v| serde_json::to_string(v).unwrap())
                .collect();
            (r.ranks.clone(), lines, !r.has_violations())
        }
    };
    // Append-only JSON lines: one record per rank, then per violation.
    for rank in &ranks {
        println!("{}", serde_json::to_string(rank).unwrap());
    }
    for line in &violation_lines {
        println!("{line}");
    }
    println!(
        "{}",
        serde_json::json!({
            "suite": match suite { Suite::Gap => "gap", Suite::Blocks => "blocks", Suite::DeletionObs => "deletion-obs" },
            "max_n": max_n,
            "violations": violation_lines.len(),
            "verified": ok,
        })
    );
    Ok(if ok { 0 } else { 1 })
}

fn cmd_orbit(perm: &str, json: bool) -> Result<i32, String> {
    let sigma = parse_perm(perm)?;
    let orbit = sigma.orbit();
    if json {
        println!("{}", serde_json::to_string(&orbit).unwrap());
        return Ok(0);
    }
    println!("representative: {}", orbit.representative);
    for m in &orbit.members {
        println!("{m}");
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32, String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| format!("{e}"))?;
    }
    match cli.command {
        Command::Analyze { perm, json } => cmd_analyze(&perm, json),
        Command::Enumerate { n, class, format } => cmd_enumerate(n, class.into(), format),
        Command::Downset { perm, dot, json } => cmd_downset(&perm, dot.as_deref(), json),
        Command::Prolific {
            perm,
            k,
            class,
            criterion_only,
        } => cmd_prolific(&perm, k, class.into(), criterion_only),
        Command::Verify { suite, max_n } => cmd_verify(suite, max_n),
        Command::Orbit { perm, json } => cmd_orbit(&perm, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
