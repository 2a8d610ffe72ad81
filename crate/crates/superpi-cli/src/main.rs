//! Command-line front end: algebra validation, codimension and cocharacter
//! tables, hook reports, identity checks from files or inline text, standard
//! and Amitsur-style identity verification, and reproduction of the shipped
//! reference fixtures.
//!
//! Exit codes: 0 for success, 1 for a mathematically negative answer (an
//! identity fails, a validation check fails, a fixture mismatches), 2 for
//! usage and resource errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use superpi::algebras::{from_json, from_spec, SuperAlgebra};
use superpi::combinat::{multidegrees_of_total, QuadHookSpec};
use superpi::engine::{
    cocharacter, codimension, is_identity_general, tideal_span, Budget, CocharacterReport,
    EngineError,
};
use superpi::freealg::{parse, FrameSlot, Mode, SuperPolynomial};
use superpi::theorems::{amitsur_check, check_standard_powers, hook_report, HookReport};

const SCHEMA: &str = "superpi/1";

#[derive(Parser)]
#[command(
    name = "superpi",
    version,
    about = "Exact invariants of finite-dimensional superalgebras with superinvolution or graded involution"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    output: OutputFormat,
    /// Resource budget in matrix entries (default from SUPERPI_BUDGET or 100000000).
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Worker threads for frame evaluation; does not affect results.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Superinvolution,
    Graded,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Superinvolution => Mode::Superinvolution,
            ModeArg::Graded => Mode::GradedInvolution,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the structure constants against the superalgebra axioms.
    Validate {
        /// Gallery name like grassmann2 or matrix_super(1), or a JSON file path.
        #[arg(long)]
        algebra: String,
    },
    /// Codimension of one multidegree.
    Codim {
        #[arg(long)]
        algebra: String,
        /// Multidegree n1,n2,n3,n4.
        #[arg(long)]
        multidegree: String,
    },
    /// Codimensions of every multidegree with total degree up to a bound.
    CodimTable {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Cocharacter multiplicities of one multidegree.
    Cocharacter {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        multidegree: String,
    },
    /// Cocharacters up to a degree bound and the minimal containing hooks.
    Hook {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Test whether polynomials are identities of an algebra.
    Check {
        #[arg(long)]
        algebra: String,
        /// A polynomial, or a file with one polynomial per line.
        #[arg(long)]
        poly: String,
    },
    /// Test the powers of the standard polynomials, one pair per variable family.
    Standard {
        #[arg(long)]
        algebra: String,
        /// Four colon pairs k1:m1,k2:m2,k3:m3,k4:m4.
        #[arg(long)]
        pairs: String,
    },
    /// Test the alternating identities of a hook quadruple.
    Amitsur {
        #[arg(long)]
        algebra: String,
        /// Four colon pairs d1:l1,d2:l2,d3:l3,d4:l4.
        #[arg(long)]
        rank: String,
    },
    /// Span of the multilinear consequences of generating identities.
    Tideal {
        /// File with one generator polynomial per line.
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        multidegree: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Superinvolution)]
        mode: ModeArg,
    },
    /// Recompute a shipped fixture and diff every entry.
    Reproduce {
        /// example-6-1, example-6-2, or mkk-1.
        name: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| format!("cannot configure {jobs} worker threads: {e}"))?;
    }
    let budget = resolve_budget(cli)?;
    let out = cli.output;
    match &cli.cmd {
        Cmd::Validate { algebra } => cmd_validate(algebra, out),
        Cmd::Codim { algebra, multidegree } => cmd_codim(algebra, multidegree, &budget, out),
        Cmd::CodimTable { algebra, max } => cmd_codim_table(algebra, *max, &budget, out),
        Cmd::Cocharacter { algebra, multidegree } => {
            cmd_cocharacter(algebra, multidegree, &budget, out)
        }
        Cmd::Hook { algebra, max } => cmd_hook(algebra, *max, &budget, out),
        Cmd::Check { algebra, poly } => cmd_check(algebra, poly, out),
        Cmd::Standard { algebra, pairs } => cmd_standard(algebra, pairs, &budget, out),
        Cmd::Amitsur { algebra, rank } => cmd_amitsur(algebra, rank, &budget, out),
        Cmd::Tideal { gens, multidegree, mode } => {
            cmd_tideal(gens, multidegree, (*mode).into(), &budget, out)
        }
        Cmd::Reproduce { name } => cmd_reproduce(name, &budget, out),
    }
}

fn resolve_budget(cli: &Cli) -> Result<Budget, String> {
    if let Some(max_entries) = cli.budget {
        return Ok(Budget { max_entries });
    }
    if let Ok(v) = std::env::var("SUPERPI_BUDGET") {
        let max_entries =
            v.trim().parse().map_err(|_| format!("SUPERPI_BUDGET must be an integer, got {v:?}"))?;
        return Ok(Budget { max_entries });
    }
    Ok(Budget::default())
}

fn load_algebra(spec: &str) -> Result<SuperAlgebra, String> {
    from_spec(spec).map_err(|e| e.to_string())
}

fn engine_msg(e: EngineError) -> String {
    match &e {
        EngineError::Resource { .. } => {
            format!("refusing: {e}; raise --budget or set SUPERPI_BUDGET")
        }
        _ => e.to_string(),
    }
}

fn parse_multidegree(s: &str) -> Result<[usize; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("multidegree needs four comma-separated entries, got {s:?}"));
    }
    let mut nd = [0usize; 4];
    for (i, p) in parts.iter().enumerate() {
        nd[i] = p.parse().map_err(|_| format!("bad multidegree entry {p:?}"))?;
    }
    Ok(nd)
}

fn parse_colon_pairs(s: &str, what: &str) -> Result<[(u32, u32); 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("{what} needs four comma-separated colon pairs, got {s:?}"));
    }
    let mut out = [(0u32, 0u32); 4];
    for (i, p) in parts.iter().enumerate() {
        let (a, b) = p
            .split_once(':')
            .ok_or_else(|| format!("bad {what} entry {p:?}, expected a:b"))?;
        out[i] = (
            a.trim().parse().map_err(|_| format!("bad {what} entry {p:?}"))?,
            b.trim().parse().map_err(|_| format!("bad {what} entry {p:?}"))?,
        );
    }
    Ok(out)
}

fn nd_str(nd: [usize; 4]) -> String {
    format!("({},{},{},{})", nd[0], nd[1], nd[2], nd[3])
}

fn hooks_str(q: &QuadHookSpec) -> String {
    let f = q.flat();
    format!("({},{}; {},{}; {},{}; {},{})", f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7])
}

fn frame_tokens(frame: &[FrameSlot]) -> Vec<String> {
    frame
        .iter()
        .map(|s| match s {
            FrameSlot::Omit => "1".to_string(),
            FrameSlot::Fresh(t) => t.token().to_string(),
        })
        .collect()
}

fn json_compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn print_json<T: Serialize>(command: &'static str, algebra: Option<&str>, body: &T) {
    #[derive(Serialize)]
    struct Envelope<'a, T: Serialize> {
        schema: &'static str,
        command: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        algebra: Option<&'a str>,
        #[serde(flatten)]
        body: &'a T,
    }
    let env = Envelope { schema: SCHEMA, command, algebra, body };
    println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
}

fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let fmt_row = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 == cols {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{:<w$}", cell, w = widths[i]));
            }
        }
        line.truncate(line.trim_end().len());
        line
    };
    let header: Vec<String> = headers.iter().map(|s| s.to_string()).collect();
    println!("{}", fmt_row(&header));
    for row in rows {
        println!("{}", fmt_row(row));
    }
}

fn cmd_validate(algebra: &str, out: OutputFormat) -> Result<u8, String> {
    let s = algebra.trim();
    let a = if s.contains('/') || s.ends_with(".json") {
        let text = std::fs::read_to_string(s).map_err(|e| format!("cannot read {s}: {e}"))?;
        from_json(&text).map_err(|e| e.to_string())?
    } else {
        load_algebra(s)?
    };
    let report = a.validate();
    #[derive(Serialize)]
    struct CheckOut {
        name: String,
        passed: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<String>,
    }
    #[derive(Serialize)]
    struct Body {
        checks: Vec<CheckOut>,
        all_passed: bool,
    }
    let body = Body {
        checks: report
            .checks
            .iter()
            .map(|c| CheckOut {
                name: c.name.to_string(),
                passed: c.passed,
                counterexample: c.counterexample.clone(),
            })
            .collect(),
        all_passed: report.all_passed(),
    };
    match out {
        OutputFormat::Json => print_json("validate", Some(algebra), &body),
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = body
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        if c.passed { "ok".into() } else { "FAILED".into() },
                        c.counterexample.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            print_table(&["check", "status", "counterexample"], &rows);
            println!("{}", if body.all_passed { "algebra is valid" } else { "algebra is INVALID" });
        }
    }
    Ok(if body.all_passed { 0 } else { 1 })
}

fn cmd_codim(
    algebra: &str,
    multidegree: &str,
    budget: &Budget,
    out: OutputFormat,
) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let nd = parse_multidegree(multidegree)?;
    let c = codimension(&a, nd, budget).map_err(engine_msg)?;
    match out {
        OutputFormat::Table => println!("{c}"),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Body {
                multidegree: [usize; 4],
                codim: usize,
            }
            print_json("codim", Some(algebra), &Body { multidegree: nd, codim: c });
        }
    }
    Ok(0)
}

fn cmd_codim_table(
    algebra: &str,
    max: usize,
    budget: &Budget,
    out: OutputFormat,
) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let mut entries = Vec::new();
    for n in 1..=max {
        for nd in multidegrees_of_total(n) {
            let c = codimension(&a, nd, budget).map_err(engine_msg)?;
            entries.push((nd, c));
        }
    }
    match out {
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|(nd, c)| {
                    vec![
                        nd[0].to_string(),
                        nd[1].to_string(),
                        nd[2].to_string(),
                        nd[3].to_string(),
                        c.to_string(),
                    ]
                })
                .collect();
            print_table(&["n1", "n2", "n3", "n4", "codim"], &rows);
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Entry {
                multidegree: [usize; 4],
                codim: usize,
            }
            #[derive(Serialize)]
            struct Body {
                max_degree: usize,
                entries: Vec<Entry>,
            }
            let body = Body {
                max_degree: max,
                entries: entries
                    .iter()
                    .map(|&(multidegree, codim)| Entry { multidegree, codim })
                    .collect(),
            };
            print_json("codim-table", Some(algebra), &body);
        }
    }
    Ok(0)
}

fn cocharacter_rows(rep: &CocharacterReport) -> Vec<Vec<String>> {
    rep.mults
        .iter()
        .map(|e| vec![json_compact(&e.lambda), e.m.to_string()])
        .collect()
}

fn cmd_cocharacter(
    algebra: &str,
    multidegree: &str,
    budget: &Budget,
    out: OutputFormat,
) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let nd = parse_multidegree(multidegree)?;
    let rep = cocharacter(&a, nd, budget).map_err(engine_msg)?;
    match out {
        OutputFormat::Table => {
            println!("multidegree {}: codim {}", nd_str(nd), rep.codim);
            print_table(&["lambda", "m"], &cocharacter_rows(&rep));
        }
        OutputFormat::Json => print_json("cocharacter", Some(algebra), &rep),
    }
    Ok(0)
}

fn cmd_hook(algebra: &str, max: usize, budget: &Budget, out: OutputFormat) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let rep: HookReport = hook_report(&a, max, budget).map_err(engine_msg)?;
    match out {
        OutputFormat::Table => {
            println!("total degree up to {max}");
            let rows: Vec<Vec<String>> = rep
                .reports
                .iter()
                .map(|r| {
                    let mults: Vec<String> = r
                        .mults
                        .iter()
                        .map(|e| format!("{}:{}", json_compact(&e.lambda), e.m))
                        .collect();
                    vec![nd_str(r.multidegree), r.codim.to_string(), mults.join(" ")]
                })
                .collect();
            print_table(&["multidegree", "codim", "mults"], &rows);
            println!("minimal hooks:");
            for q in &rep.minimal_hooks {
                println!("  {}", hooks_str(q));
            }
            println!("canonical: {}", hooks_str(&rep.canonical));
        }
        OutputFormat::Json => print_json("hook", Some(algebra), &rep),
    }
    Ok(0)
}

fn read_poly_lines(arg: &str) -> Result<Vec<String>, String> {
    let p = std::path::Path::new(arg);
    if p.is_file() {
        let text =
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
        Ok(text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect())
    } else {
        Ok(vec![arg.to_string()])
    }
}

fn cmd_check(algebra: &str, poly: &str, out: OutputFormat) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let lines = read_poly_lines(poly)?;
    if lines.is_empty() {
        return Err("no polynomials to check".into());
    }
    let mut parsed: Vec<SuperPolynomial> = Vec::new();
    for line in &lines {
        parsed.push(parse(line, a.mode()).map_err(|e| format!("{line:?}: {e}"))?);
    }
    let mut results = Vec::new();
    for f in &parsed {
        results.push(is_identity_general(&a, f).map_err(engine_msg)?);
    }
    let all = results.iter().all(|&b| b);
    match out {
        OutputFormat::Table => {
            for (f, ok) in parsed.iter().zip(&results) {
                println!("identity: {ok}  {f}");
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Entry {
                poly: String,
                identity: bool,
            }
            #[derive(Serialize)]
            struct Body {
                results: Vec<Entry>,
                all: bool,
            }
            let body = Body {
                results: parsed
                    .iter()
                    .zip(&results)
                    .map(|(f, &identity)| Entry { poly: f.to_string(), identity })
                    .collect(),
                all,
            };
            print_json("check", Some(algebra), &body);
        }
    }
    Ok(if all { 0 } else { 1 })
}

fn cmd_standard(
    algebra: &str,
    pairs: &str,
    budget: &Budget,
    out: OutputFormat,
) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let km = parse_colon_pairs(pairs, "pairs")?;
    for &(k, m) in &km {
        if k == 0 || m == 0 {
            return Err(format!("standard pairs must be positive, got {k}:{m}"));
        }
    }
    let pairs_usize: [(usize, usize); 4] =
        std::array::from_fn(|i| (km[i].0 as usize, km[i].1 as usize));
    let identities = check_standard_powers(&a, pairs_usize, budget).map_err(engine_msg)?;
    let all = identities.iter().all(|&b| b);
    match out {
        OutputFormat::Table => {
            let families = ["y0", "z0", "y1", "z1"];
            let rows: Vec<Vec<String>> = (0..4)
                .map(|i| {
                    vec![
                        families[i].to_string(),
                        pairs_usize[i].0.to_string(),
                        pairs_usize[i].1.to_string(),
                        identities[i].to_string(),
                    ]
                })
                .collect();
            print_table(&["family", "k", "m", "identity"], &rows);
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Body {
                pairs: [(usize, usize); 4],
                identities: [bool; 4],
                all: bool,
            }
            print_json("standard", Some(algebra), &Body { pairs: pairs_usize, identities, all });
        }
    }
    Ok(if all { 0 } else { 1 })
}

fn cmd_amitsur(
    algebra: &str,
    rank: &str,
    budget: &Budget,
    out: OutputFormat,
) -> Result<u8, String> {
    let a = load_algebra(algebra)?;
    let dl = parse_colon_pairs(rank, "rank")?;
    let hooks = QuadHookSpec::from_flat([
        dl[0].0, dl[0].1, dl[1].0, dl[1].1, dl[2].0, dl[2].1, dl[3].0, dl[3].1,
    ]);
    let witness = amitsur_check(&a, &hooks, budget).map_err(engine_msg)?;
    let satisfied = witness.is_none();
    match out {
        OutputFormat::Table => {
            println!("satisfied: {satisfied}");
            if let Some(w) = &witness {
                let families = ["y0", "z0", "y1", "z1"];
                println!("witness family: {} ({})", w.family, families[w.family - 1]);
                println!("witness frame: [{}]", frame_tokens(&w.frame).join(", "));
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct WitnessOut {
                family: usize,
                frame: Vec<String>,
            }
            #[derive(Serialize)]
            struct Body {
                rank: QuadHookSpec,
                satisfied: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness: Option<WitnessOut>,
            }
            let body = Body {
                rank: hooks,
                satisfied,
                witness: witness
                    .as_ref()
                    .map(|w| WitnessOut { family: w.family, frame: frame_tokens(&w.frame) }),
            };
            print_json("amitsur", Some(algebra), &body);
        }
    }
    Ok(if satisfied { 0 } else { 1 })
}

fn cmd_tideal(
    gens: &PathBuf,
    multidegree: &str,
    mode: Mode,
    budget: &Budget,
    out: OutputFormat,
) -> Result<u8, String> {
    let nd = parse_multidegree(multidegree)?;
    let text = std::fs::read_to_string(gens)
        .map_err(|e| format!("cannot read {}: {e}", gens.display()))?;
    let mut parsed = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        parsed.push(parse(line, mode).map_err(|e| format!("{line:?}: {e}"))?);
    }
    if parsed.is_empty() {
        return Err(format!("no generators in {}", gens.display()));
    }
    let span = tideal_span(&parsed, nd, budget).map_err(engine_msg)?;
    match out {
        OutputFormat::Table => {
            println!("dim {}", span.dim);
            for f in &span.basis {
                println!("{f}");
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Body {
                multidegree: [usize; 4],
                mode: String,
                dim: usize,
                basis: Vec<String>,
            }
            let body = Body {
                multidegree: nd,
                mode: match mode {
                    Mode::Superinvolution => "superinvolution".into(),
                    Mode::GradedInvolution => "graded".into(),
                },
                dim: span.dim,
                basis: span.basis.iter().map(|f| f.to_string()).collect(),
            };
            print_json("tideal", None, &body);
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct DiffRow {
    check: String,
    expected: String,
    computed: String,
    ok: bool,
}

fn diff_row(check: String, expected: String, computed: String) -> DiffRow {
    let ok = expected == computed;
    DiffRow { check, expected, computed, ok }
}

fn finish_reproduce(
    name: &str,
    algebra: &str,
    rows: Vec<DiffRow>,
    out: OutputFormat,
) -> Result<u8, String> {
    let all = rows.iter().all(|r| r.ok);
    match out {
        OutputFormat::Table => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.check.clone(),
                        r.expected.clone(),
                        r.computed.clone(),
                        if r.ok { "ok".into() } else { "MISMATCH".into() },
                    ]
                })
                .collect();
            print_table(&["check", "expected", "computed", "status"], &table);
            println!(
                "{name}: {} checks, {}",
                rows.len(),
                if all { "all ok".to_string() } else { "MISMATCHES FOUND".to_string() }
            );
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Body {
                fixture: String,
                algebra: String,
                checks: Vec<DiffRow>,
                all: bool,
            }
            let body = Body {
                fixture: name.to_string(),
                algebra: algebra.to_string(),
                checks: rows,
                all,
            };
            print_json("reproduce", None, &body);
        }
    }
    Ok(if all { 0 } else { 1 })
}

#[derive(Deserialize)]
struct CodimFixtureEntry {
    multidegree: [usize; 4],
    codim: usize,
}

#[derive(Deserialize)]
struct MultFixtureEntry {
    lambda: [Vec<u32>; 4],
    m: u64,
}

#[derive(Deserialize)]
struct CocharFixtureEntry {
    multidegree: [usize; 4],
    mults: Vec<MultFixtureEntry>,
}

fn mults_json(mults: &[MultFixtureEntry]) -> String {
    let vals: Vec<serde_json::Value> = mults
        .iter()
        .map(|e| serde_json::json!({"lambda": e.lambda, "m": e.m}))
        .collect();
    serde_json::to_string(&vals).expect("serializable")
}

fn computed_mults_json(rep: &CocharacterReport) -> String {
    let vals: Vec<serde_json::Value> = rep
        .mults
        .iter()
        .map(|e| {
            serde_json::json!({
                "lambda": serde_json::to_value(&e.lambda).expect("serializable"),
                "m": e.m,
            })
        })
        .collect();
    serde_json::to_string(&vals).expect("serializable")
}

fn cmd_reproduce(name: &str, budget: &Budget, out: OutputFormat) -> Result<u8, String> {
    match name {
        "example-6-1" => reproduce_example_6_1(budget, out),
        "example-6-2" => reproduce_example_6_2(budget, out),
        "mkk-1" => reproduce_mkk_1(budget, out),
        other => Err(format!(
            "unknown fixture {other:?}; available: example-6-1, example-6-2, mkk-1"
        )),
    }
}

fn reproduce_example_6_1(budget: &Budget, out: OutputFormat) -> Result<u8, String> {
    #[derive(Deserialize)]
    struct Fixture {
        algebra: String,
        codim: Vec<CodimFixtureEntry>,
        cocharacter: Vec<CocharFixtureEntry>,
        minimal_hooks_max_degree: usize,
        minimal_hooks_contain: Vec<[u32; 8]>,
    }
    let fx: Fixture = serde_json::from_str(include_str!("../fixtures/example-6-1.json"))
        .map_err(|e| format!("fixture example-6-1 is malformed: {e}"))?;
    let a = load_algebra(&fx.algebra)?;
    let mut rows = Vec::new();
    for e in &fx.codim {
        let c = codimension(&a, e.multidegree, budget).map_err(engine_msg)?;
        rows.push(diff_row(
            format!("c_{}", nd_str(e.multidegree)),
            e.codim.to_string(),
            c.to_string(),
        ));
    }
    for e in &fx.cocharacter {
        let rep = cocharacter(&a, e.multidegree, budget).map_err(engine_msg)?;
        rows.push(diff_row(
            format!("chi_{}", nd_str(e.multidegree)),
            mults_json(&e.mults),
            computed_mults_json(&rep),
        ));
    }
    let hooks = hook_report(&a, fx.minimal_hooks_max_degree, budget).map_err(engine_msg)?;
    for h in &fx.minimal_hooks_contain {
        let q = QuadHookSpec::from_flat(*h);
        let present = hooks.minimal_hooks.contains(&q);
        rows.push(diff_row(
            format!("minimal hook {}", hooks_str(&q)),
            "present".into(),
            if present { "present".into() } else { "absent".into() },
        ));
    }
    finish_reproduce("example-6-1", &fx.algebra, rows, out)
}

fn reproduce_example_6_2(budget: &Budget, out: OutputFormat) -> Result<u8, String> {
    #[derive(Deserialize)]
    struct Entry {
        multidegree: [usize; 4],
        codim: usize,
        mults: Vec<MultFixtureEntry>,
    }
    #[derive(Deserialize)]
    struct Fixture {
        algebra: String,
        max_degree: usize,
        entries: Vec<Entry>,
    }
    let fx: Fixture = serde_json::from_str(include_str!("../fixtures/example-6-2.json"))
        .map_err(|e| format!("fixture example-6-2 is malformed: {e}"))?;
    let a = load_algebra(&fx.algebra)?;
    let mut expected_nds: Vec<[usize; 4]> = Vec::new();
    for n in 1..=fx.max_degree {
        expected_nds.extend(multidegrees_of_total(n));
    }
    if expected_nds != fx.entries.iter().map(|e| e.multidegree).collect::<Vec<_>>() {
        return Err("fixture example-6-2 does not list every multidegree in order".into());
    }
    let mut rows = Vec::new();
    for e in &fx.entries {
        let rep = cocharacter(&a, e.multidegree, budget).map_err(engine_msg)?;
        rows.push(diff_row(
            format!("c_{}", nd_str(e.multidegree)),
            e.codim.to_string(),
            rep.codim.to_string(),
        ));
        rows.push(diff_row(
            format!("chi_{}", nd_str(e.multidegree)),
            mults_json(&e.mults),
            computed_mults_json(&rep),
        ));
    }
    finish_reproduce("example-6-2", &fx.algebra, rows, out)
}

fn reproduce_mkk_1(budget: &Budget, out: OutputFormat) -> Result<u8, String> {
    #[derive(Deserialize)]
    struct Block {
        k: usize,
        m: usize,
        expect: [bool; 4],
    }
    #[derive(Deserialize)]
    struct Fixture {
        algebra: String,
        standard: Vec<Block>,
    }
    let fx: Fixture = serde_json::from_str(include_str!("../fixtures/mkk-1.json"))
        .map_err(|e| format!("fixture mkk-1 is malformed: {e}"))?;
    let a = load_algebra(&fx.algebra)?;
    let families = ["y0", "z0", "y1", "z1"];
    let mut rows = Vec::new();
    for block in &fx.standard {
        let got =
            check_standard_powers(&a, [(block.k, block.m); 4], budget).map_err(engine_msg)?;
        for i in 0..4 {
            rows.push(diff_row(
                format!("St_{}^{}({})", block.k, block.m, families[i]),
                block.expect[i].to_string(),
                got[i].to_string(),
            ));
        }
    }
    finish_reproduce("mkk-1", &fx.algebra, rows, out)
}
