//! `bscale`: command-line front end to the `bscale` library.

mod selfcheck;

use std::collections::BTreeMap;
use std::fmt::Display;
use std::process::ExitCode;

use bscale::coset::{
    census_of, default_scan_bound, enumerate_ball, export_dot, orbit_order_bruteforce, DEFAULT_VERTEX_BUDGET,
};
use bscale::graph::{shortest_path_len, subgraph, trace};
use bscale::group::{
    bs1n_matrix, britton_reduce, element_normal_form, equal_elements, parse_word, GroupParams, Sign, Word,
};
use bscale::invariants::{
    flat_rank, modular, moller_sequence, orbit_order, orbit_shape, pi_kernel, scale, scale_value_set,
    structure_report, vplus_scale_part,
};
use bscale::Error;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "bscale", version, about = "Scale computations in Baumslag-Solitar groups BS(m,n)")]
struct Cli {
    /// Group parameters as `m,n` (nonzero, signs allowed).
    #[arg(long, value_name = "M,N", value_parser = parse_group, allow_hyphen_values = true)]
    group: (i64, i64),

    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Vertex budget for coset balls.
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
    budget: usize,

    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Freely reduce and remove all pinches.
    Reduce { word: String },
    /// Canonical normal form of the element.
    Nf { word: String },
    /// t-exponent sum.
    Rho { word: String },
    /// Whether two words represent the same element.
    Equal { left: String, right: String },
    /// Scale of the element.
    Scale { word: String },
    /// Modular function value.
    Modular { word: String },
    FlatRank,
    /// Kernel exponent of the action on cosets of <a> (0: trivial kernel).
    Kernel,
    /// Index sequence of a cyclically normalized conjugate.
    Moller {
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        word: String,
    },
    /// Follow the t-letters of a reduced word through the intersection graph.
    Trace {
        #[arg(long, default_value = "1")]
        start: BigUint,
        #[arg(long, default_value = "1")]
        h: BigUint,
        word: String,
    },
    /// Nodes and edges of the intersection graph up to a level.
    OmegaEdges {
        #[arg(long)]
        levels: u64,
    },
    /// Shortest path length between two nodes.
    OmegaDist { from: BigUint, to: BigUint },
    /// Size of the <a>-orbit of the coset w<a>.
    Orbit { word: String },
    /// Orbit size by exhaustive scan.
    OrbitBrute {
        #[arg(long)]
        dmax: Option<BigUint>,
        word: String,
    },
    /// Enumerate a ball of the Bass-Serre tree.
    Ball {
        #[arg(long)]
        radius: usize,
        /// Also write the ball as a DOT graph.
        #[arg(long, value_name = "PATH")]
        dot: Option<std::path::PathBuf>,
    },
    /// Histogram of orbit sizes over a ball.
    Census {
        #[arg(long)]
        radius: usize,
    },
    /// Local structure of the completion, optionally relative to a word.
    Structure { word: Option<String> },
    /// Matrix image (|m| = 1 only).
    Matrix { word: String },
    /// All scale values with |rho| <= P.
    ScaleSet {
        #[arg(long, value_name = "P")]
        rho_max: u64,
    },
    /// Run the randomized cross-checks.
    Selfcheck {
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_group(s: &str) -> Result<(i64, i64), String> {
    let (m, n) = s.split_once(',').ok_or("expected M,N")?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(m)?, num(n)?))
}

/// Failure modes, each with its exit code.
enum Failure {
    Lib(Error),
    Domain(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(), Failure>;

fn word(s: &str) -> Result<Word, Failure> {
    Ok(parse_word(s)?)
}

fn compact(w: &Word) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_compact()
    }
}

struct Out {
    mode: Output,
}

impl Out {
    fn emit(&self, text: impl Display, value: Value) {
        match self.mode {
            Output::Text => println!("{text}"),
            Output::Json => println!("{value}"),
        }
    }
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn run(cli: Cli) -> CmdResult {
    let (m, n) = cli.group;
    let p = GroupParams::new(m, n)?;
    if cli.budget == 0 {
        return Err(Failure::Domain("--budget must be at least 1".into()));
    }
    if cli.output == Output::Text {
        if p.is_discrete() {
            eprintln!("note: {p} has |m| = |n|; the completion is discrete and every scale is 1");
        } else if p.divisor_case() {
            let h = p.abs_m().min(p.abs_n());
            eprintln!("note: {p} is in the divisor case; scales follow the subgroup <a^{h}>");
        }
    }
    let out = Out { mode: cli.output };

    match cli.command {
        Command::Reduce { word: w } => {
            let r = britton_reduce(&p, &word(&w)?);
            out.emit(compact(&r), json!({ "reduced": r.to_compact(), "length": r.len() }));
        }
        Command::Nf { word: w } => {
            let nf = element_normal_form(&p, &word(&w)?);
            let syl: Vec<Value> = nf.syllables.iter().map(|&(c, e)| json!([c, e.as_i64()])).collect();
            out.emit(&nf, json!({ "syllables": syl, "tail": nf.tail.to_string() }));
        }
        Command::Rho { word: w } => {
            let rho = word(&w)?.t_exponent();
            out.emit(rho, json!({ "rho": rho }));
        }
        Command::Equal { left, right } => {
            let eq = equal_elements(&p, &word(&left)?, &word(&right)?);
            out.emit(eq, json!({ "equal": eq }));
        }
        Command::Scale { word: w } => {
            let s = scale(&p, &word(&w)?);
            out.emit(&s, serde_json::to_value(&s).expect("serializable"));
        }
        Command::Modular { word: w } => {
            let d = modular(&p, &word(&w)?);
            out.emit(&d, serde_json::to_value(&d).expect("serializable"));
        }
        Command::FlatRank => {
            let r = flat_rank(&p);
            out.emit(r, json!({ "flat_rank": r }));
        }
        Command::Kernel => {
            let k = pi_kernel(&p);
            out.emit(k, json!({ "kernel_exponent": k }));
        }
        Command::Moller { kmax, word: w } => {
            if kmax == 0 {
                return Err(Failure::Domain("--kmax must be at least 1".into()));
            }
            let report = moller_sequence(&p, &word(&w)?, kmax)?;
            let ok = report.ratios_match();
            let ratio = if kmax >= 2 {
                report.ratio(kmax - 1).map_or("-".to_string(), |r| r.to_string())
            } else {
                "-".to_string()
            };
            let text = format!(
                "{} | ratio {} | scale {} {}",
                strings(&report.indices).join(" "),
                ratio,
                report.scale,
                if ok { "OK" } else { "MISMATCH" }
            );
            out.emit(
                text,
                json!({
                    "normalized": report.normalized.to_compact(),
                    "conjugator": report.conjugator.to_compact(),
                    "indices": strings(&report.indices),
                    "scale": report.scale,
                    "stable_from": report.stable_from,
                    "observed_stable_from": report.observed_stable_from,
                    "ok": ok,
                }),
            );
            if !ok {
                return Err(Failure::Check);
            }
        }
        Command::Trace { start, h, word: w } => {
            let y = trace(&p, &word(&w)?, &start, &h)?;
            out.emit(&y, json!({ "end": y.to_string() }));
        }
        Command::OmegaEdges { levels } => {
            let sub = subgraph(&p, levels)?;
            let label = |e: Sign| if e == Sign::Pos { "t" } else { "t^-1" };
            let text = sub
                .edges
                .iter()
                .map(|(x, e, y)| format!("{x} {} {y}", label(*e)))
                .collect::<Vec<_>>()
                .join("\n");
            let nodes: Vec<Value> = sub
                .nodes
                .iter()
                .map(|node| {
                    json!({
                        "value": node.value.to_string(),
                        "shape": node.shape.to_string(),
                        "level": node.level,
                        "dist_left": node.dist_left,
                    })
                })
                .collect();
            let edges: Vec<Value> = sub
                .edges
                .iter()
                .map(|(x, e, y)| json!([x.to_string(), e.as_i64(), y.to_string()]))
                .collect();
            out.emit(text, json!({ "nodes": nodes, "edges": edges }));
        }
        Command::OmegaDist { from, to } => {
            let d = shortest_path_len(&p, &from, &to)?;
            out.emit(d, json!({ "distance": d }));
        }
        Command::Orbit { word: w } => {
            let d = orbit_order(&p, &word(&w)?);
            let shape = orbit_shape(&p, &d).map(|(g, r, s)| json!({ "g": g, "r": r, "s": s }));
            out.emit(&d, json!({ "order": d.to_string(), "shape": shape }));
        }
        Command::OrbitBrute { dmax, word: w } => {
            let w = word(&w)?;
            let bound = dmax.unwrap_or_else(|| default_scan_bound(&p, &britton_reduce(&p, &w)));
            let d = orbit_order_bruteforce(&p, &w, &bound)
                .ok_or_else(|| Failure::Domain(format!("no orbit size up to {bound}")))?;
            out.emit(&d, json!({ "order": d.to_string() }));
        }
        Command::Ball { radius, dot } => {
            let table = enumerate_ball(&p, radius, cli.budget)?;
            if let Some(path) = dot {
                std::fs::write(&path, export_dot(&table))
                    .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
            }
            let mut text = Vec::new();
            for (i, v) in table.vertices.iter().enumerate() {
                text.push(format!("{i} {}", compact(&v.representative())));
            }
            for &(from, to, e) in &table.edges {
                text.push(format!("{from} -> {to} {}", if e == Sign::Pos { "t" } else { "t^-1" }));
            }
            out.emit(text.join("\n"), table.to_json());
        }
        Command::Census { radius } => {
            let table = enumerate_ball(&p, radius, cli.budget)?;
            let mut histogram: BTreeMap<BigUint, usize> = BTreeMap::new();
            for d in census_of(&p, &table) {
                *histogram.entry(d).or_default() += 1;
            }
            let text = histogram
                .iter()
                .map(|(d, c)| format!("{d} {c}"))
                .collect::<Vec<_>>()
                .join("\n");
            let hist: Vec<Value> = histogram
                .iter()
                .map(|(d, c)| json!({ "order": d.to_string(), "count": c }))
                .collect();
            out.emit(text, json!({ "radius": radius, "vertices": table.len(), "histogram": hist }));
        }
        Command::Structure { word: w } => {
            let w = w.as_deref().map(word).transpose()?;
            let report = structure_report(&p, w.as_ref());
            let set = |s: &std::collections::BTreeSet<u64>| strings(s).join(" ");
            let mut text = vec![
                format!("V+ primes: {}", set(&report.primes_vplus)),
                format!("V- primes: {}", set(&report.primes_vminus)),
                format!("quotient order bound: {}", report.quotient_order_bound),
                format!("flat rank: {}", report.flat_rank),
                format!("kernel exponent: {}", report.kernel_exponent),
                format!("quasi-centre: {}", report.quasi_centre),
                format!("swap applied: {}", report.swap_applied),
            ];
            let mut value = serde_json::to_value(&report).expect("serializable");
            if let Some(w) = &w {
                let part = vplus_scale_part(&report, &scale(&p, w));
                text.push(format!("V+ part of scale: {part}"));
                value["vplus_scale_part"] = json!(part.to_string());
            }
            out.emit(text.join("\n"), value);
        }
        Command::Matrix { word: w } => {
            let mat = bs1n_matrix(&p, &word(&w)?)?;
            let entries: Vec<Vec<String>> = mat.entries().iter().map(strings).collect();
            out.emit(&mat, json!({ "entries": entries }));
        }
        Command::ScaleSet { rho_max } => {
            let set = scale_value_set(&p, rho_max);
            out.emit(strings(&set).join(" "), json!({ "values": strings(&set) }));
        }
        Command::Selfcheck { seed } => {
            let results = selfcheck::run(&p, seed.unwrap_or(cli.seed), cli.budget);
            let text = results
                .iter()
                .map(|r| format!("{} {}: {}", if r.ok { "PASS" } else { "FAIL" }, r.name, r.detail))
                .collect::<Vec<_>>()
                .join("\n");
            let value: Vec<Value> = results
                .iter()
                .map(|r| json!({ "check": r.name, "ok": r.ok, "detail": r.detail }))
                .collect();
            out.emit(text, json!({ "checks": value }));
            if results.iter().any(|r| !r.ok) {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e @ Error::Parse { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Check) => {
            eprintln!("error: check failed");
            ExitCode::from(4)
        }
    }
}
