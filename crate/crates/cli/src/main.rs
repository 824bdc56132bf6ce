//! `posetdim`: generate, verify, solve, convert, refute and summarize posets
//! and their certificates.
//!
//! Exit codes: 0 success or true, 1 false or refutation found, 2 usage or
//! input error, 3 timeout.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use posetdim::fixtures::{random_acyclic_digraph, random_local3, random_poset, random_two_dimensional, rng};
use posetdim::generators::{incidence_poset, standard_example};
use posetdim::io;
use posetdim::realizer::local_width;
use posetdim::thm6::{theorem6_construct, theorem6_sizes, DEFAULT_MAX_EDGES};
use posetdim::transforms::{classify_boolean_certificate, ramsey_cycle_witness, RefutationOutcome, Refuter};
use posetdim::{
    boolean_to_realizer, decide_boolean_dimension_small, decide_dimension, decide_local_dimension_low,
    exact_chromatic_number, local2_to_realizer, local3_to_boolean, stats, verify_boolean_realizer,
    verify_local_realizer, verify_realizer, Budget, Decision, Error, Poset,
};

#[derive(Parser, Debug)]
#[command(name = "posetdim", version, about = "Realizers, boolean realizers and local realizers of finite posets")]
struct Cli {
    /// Print one JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Wall-clock budget for exact searches.
    #[arg(long, global = true, default_value_t = 60.0)]
    timeout_s: f64,
    /// Seed for random fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a poset with its certificates.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Check a certificate against a poset.
    Verify { kind: CertKind, poset: PathBuf, certificate: PathBuf },
    /// Exact searches.
    Solve {
        #[command(subcommand)]
        what: Solve,
    },
    /// Turn one certificate kind into another.
    Convert {
        how: Conversion,
        poset: PathBuf,
        certificate: PathBuf,
        /// Output file; stdout when absent.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Look for a contradiction in a candidate certificate.
    Refute {
        #[command(subcommand)]
        what: Refute,
    },
    /// Size, width, height and related counts.
    Stats { poset: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Generate {
    /// S_k with a realizer and, where they apply, width-3 local and 4-order boolean certificates.
    StandardExample {
        k: usize,
        /// Output prefix; files get `.poset`, `.rlz`, `.lrlz`, `.brlz`.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Incidence poset of K_n with its 4-order boolean certificate.
    Incidence {
        n: usize,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Shift-graph construction at level k: poset, width-4 local realizer, digraph.
    Thm6 {
        k: usize,
        /// Only print the predicted sizes for levels 1..=k.
        #[arg(long)]
        dry_run_sizes: bool,
        /// Refuse levels with more elements than this.
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: u64,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Seeded random instance.
    Random {
        family: RandomFamily,
        n: usize,
        /// Arc probability for `poset` and `digraph`.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RandomFamily {
    /// Random poset with a width-3 local realizer.
    Local3,
    /// Intersection of two random orders, with those orders.
    TwoDim,
    /// Closure of a random forward DAG.
    Poset,
    /// Random acyclic digraph.
    Digraph,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CertKind {
    Realizer,
    Boolean,
    Local,
}

#[derive(Subcommand, Debug)]
enum Solve {
    /// Least realizer size up to `--max-d`.
    Dimension {
        poset: PathBuf,
        #[arg(long)]
        max_d: usize,
        /// Write the realizer found here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact chromatic number of a digraph file (arcs taken as edges).
    Chromatic { graph: PathBuf },
    /// Least boolean realizer size, n <= 6 and d <= 2.
    BdimSmall {
        poset: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_d: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Local dimension when it is 1 or 2.
    LdimLow {
        poset: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_d: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Conversion {
    /// boolean realizer of size <= 3 -> realizer of no larger size
    Thm1,
    /// width-2 local realizer -> realizer of size <= 2
    Thm2,
    /// width-3 local realizer -> boolean realizer
    Thm5,
}

#[derive(Subcommand, Debug)]
enum Refute {
    /// Check a boolean realizer candidate for the level-k shift-graph poset.
    Thm6 { k: usize, candidate: PathBuf },
    /// Search a family of partial orders on P_n for a monochromatic quadruple.
    Ramsey { n: usize, family: PathBuf },
}

/// What a command reports: exit code, text lines and the JSON record.
struct Outcome {
    code: u8,
    lines: Vec<String>,
    record: Value,
}

impl Outcome {
    fn new(code: u8, lines: Vec<String>, record: Value) -> Self {
        Outcome { code, lines, record }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse<T>(path: &Path, f: fn(&str) -> posetdim::Result<T>) -> anyhow::Result<T> {
    f(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Writes each `(extension, text)` next to `prefix`, returns the paths.
fn write_set(prefix: &Path, files: &[(&str, String)]) -> anyhow::Result<Vec<String>> {
    files
        .iter()
        .map(|(ext, text)| {
            let path = with_ext(prefix, ext);
            write(&path, text)?;
            Ok(path.display().to_string())
        })
        .collect()
}

fn generate(cli: &Cli, what: &Generate) -> anyhow::Result<Outcome> {
    let (prefix, files, record) = match what {
        Generate::StandardExample { k, out } => {
            let s = standard_example(*k)?;
            let mut files = vec![("poset", io::write_poset(&s.poset)), ("rlz", io::write_realizer(&s.realizer))];
            if let Some(lr) = &s.local {
                files.push(("lrlz", io::write_local_realizer(lr)));
            }
            if let Some(br) = &s.boolean {
                files.push(("brlz", io::write_boolean_realizer(br)));
            }
            let prefix = out.clone().unwrap_or_else(|| PathBuf::from(format!("s{k}")));
            (prefix, files, json!({ "k": k, "n": s.poset.n() }))
        }
        Generate::Incidence { n, out } => {
            let inc = incidence_poset(*n)?;
            let files =
                vec![("poset", io::write_poset(&inc.poset)), ("brlz", io::write_boolean_realizer(&inc.boolean))];
            let prefix = out.clone().unwrap_or_else(|| PathBuf::from(format!("p{n}")));
            (prefix, files, json!({ "n": n, "elements": inc.poset.n() }))
        }
        Generate::Thm6 { k, dry_run_sizes, max_edges, out } => {
            if *dry_run_sizes {
                let rows = theorem6_sizes(*k);
                let mut lines = vec![format!("{:>3} {:>24} {:>24}", "k", "vertices", "edges")];
                lines.extend(
                    rows.iter()
                        .map(|r| format!("{:>3} {:>24} {:>24}", r.k, r.vertices.to_string(), r.edges.to_string())),
                );
                let record = json!({
                    "command": "generate thm6",
                    "sizes": rows.iter().map(|r| json!({
                        "k": r.k, "vertices": r.vertices.to_string(), "edges": r.edges.to_string()
                    })).collect::<Vec<_>>(),
                });
                return Ok(Outcome::new(0, lines, record));
            }
            let inst = theorem6_construct(*k, *max_edges)?;
            let lr = inst.local_realizer();
            let files = vec![
                ("poset", io::write_poset(&inst.p)),
                ("lrlz", io::write_local_realizer(&lr)),
                ("graph", io::write_digraph(&inst.g)),
            ];
            let prefix = out.clone().unwrap_or_else(|| PathBuf::from(format!("thm6-k{k}")));
            let record = json!({
                "k": k, "vertices": inst.g.nv(), "elements": inst.edges.len(), "local_width": local_width(&lr)
            });
            (prefix, files, record)
        }
        Generate::Random { family, n, density, out } => {
            if !(0.0..=1.0).contains(density) {
                bail!(Error::BadParameter(format!("density {density} outside [0, 1]")));
            }
            let mut r = rng(cli.seed);
            let (files, tag) = match family {
                RandomFamily::Local3 => {
                    let (p, lr) = random_local3(*n, &mut r);
                    (vec![("poset", io::write_poset(&p)), ("lrlz", io::write_local_realizer(&lr))], "local3")
                }
                RandomFamily::TwoDim => {
                    let (p, real) = random_two_dimensional(*n, &mut r);
                    (vec![("poset", io::write_poset(&p)), ("rlz", io::write_realizer(&real))], "two-dim")
                }
                RandomFamily::Poset => (vec![("poset", io::write_poset(&random_poset(*n, *density, &mut r)))], "poset"),
                RandomFamily::Digraph => {
                    (vec![("graph", io::write_digraph(&random_acyclic_digraph(*n, *density, &mut r)))], "digraph")
                }
            };
            let prefix = out.clone().unwrap_or_else(|| PathBuf::from(format!("{tag}-n{n}-s{}", cli.seed)));
            (prefix, files, json!({ "family": tag, "n": n, "seed": cli.seed }))
        }
    };
    let paths = write_set(&prefix, &files)?;
    let mut record = record;
    record["command"] = json!("generate");
    record["files"] = json!(paths);
    Ok(Outcome::new(0, paths.iter().map(|p| format!("wrote {p}")).collect(), record))
}

fn verify(kind: CertKind, poset: &Path, cert: &Path) -> anyhow::Result<Outcome> {
    let p = parse(poset, io::parse_poset)?;
    let (ok, detail) = match kind {
        CertKind::Realizer => {
            let r = parse(cert, io::parse_realizer)?;
            (verify_realizer(&p, &r)?, format!("size {}", r.size()))
        }
        CertKind::Boolean => {
            let br = parse(cert, io::parse_boolean_realizer)?;
            (verify_boolean_realizer(&p, &br)?, format!("size {}", br.size()))
        }
        CertKind::Local => {
            let lr = parse(cert, io::parse_local_realizer)?;
            match verify_local_realizer(&p, &lr) {
                Ok(ok) => (ok, format!("width {}", local_width(&lr))),
                Err(e @ Error::NotAnExtension { .. }) => (false, e.to_string()),
                Err(e) => return Err(e.into()),
            }
        }
    };
    let verdict = if ok { "valid" } else { "invalid" };
    Ok(Outcome::new(
        u8::from(!ok),
        vec![format!("{verdict} ({detail})")],
        json!({ "command": "verify", "valid": ok, "detail": detail }),
    ))
}

fn timeout_outcome(command: &str, progress: String) -> Outcome {
    Outcome::new(
        3,
        vec![format!("timed out; {progress}")],
        json!({ "command": command, "timeout": true, "progress": progress }),
    )
}

fn solve(what: &Solve, budget: &Budget) -> anyhow::Result<Outcome> {
    match what {
        Solve::Dimension { poset, max_d, witness } => {
            let p = parse(poset, io::parse_poset)?;
            let mut established = 0;
            for d in 0..=*max_d {
                match decide_dimension(&p, d, budget) {
                    Ok(Decision::Yes(r)) => {
                        if let Some(path) = witness {
                            write(path, &io::write_realizer(&r))?;
                        }
                        return Ok(Outcome::new(
                            0,
                            vec![format!("dimension {d}")],
                            json!({ "command": "solve dimension", "dimension": d }),
                        ));
                    }
                    Ok(Decision::No) => established = d + 1,
                    Err(Error::Timeout(_)) => {
                        return Ok(timeout_outcome("solve dimension", format!("dimension >= {established}")));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Outcome::new(
                1,
                vec![format!("dimension > {max_d}")],
                json!({ "command": "solve dimension", "dimension_exceeds": max_d }),
            ))
        }
        Solve::Chromatic { graph } => {
            let g = parse(graph, io::parse_digraph)?;
            match exact_chromatic_number(&g, budget) {
                Ok(chi) => Ok(Outcome::new(
                    0,
                    vec![format!("chromatic number {chi}")],
                    json!({ "command": "solve chromatic", "chromatic_number": chi }),
                )),
                Err(Error::Timeout(_)) => Ok(timeout_outcome("solve chromatic", "no bound recorded".into())),
                Err(e) => Err(e.into()),
            }
        }
        Solve::BdimSmall { poset, max_d, witness } => {
            let p = parse(poset, io::parse_poset)?;
            let mut established = 1;
            for d in 1..=*max_d {
                match decide_boolean_dimension_small(&p, d, budget) {
                    Ok(Decision::Yes(br)) => {
                        if let Some(path) = witness {
                            write(path, &io::write_boolean_realizer(&br))?;
                        }
                        return Ok(Outcome::new(
                            0,
                            vec![format!("boolean dimension {d}")],
                            json!({ "command": "solve bdim-small", "boolean_dimension": d }),
                        ));
                    }
                    Ok(Decision::No) => established = d + 1,
                    Err(Error::Timeout(_)) => {
                        return Ok(timeout_outcome("solve bdim-small", format!("boolean dimension >= {established}")));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Outcome::new(
                1,
                vec![format!("boolean dimension > {max_d}")],
                json!({ "command": "solve bdim-small", "boolean_dimension_exceeds": max_d }),
            ))
        }
        Solve::LdimLow { poset, max_d, witness } => {
            let p = parse(poset, io::parse_poset)?;
            if !(1..=2).contains(max_d) {
                bail!(Error::BadParameter(format!("--max-d must be 1 or 2, got {max_d}")));
            }
            for d in 1..=*max_d {
                match decide_local_dimension_low(&p, d, budget) {
                    Ok(Decision::Yes(lr)) => {
                        if let Some(path) = witness {
                            write(path, &io::write_local_realizer(&lr))?;
                        }
                        return Ok(Outcome::new(
                            0,
                            vec![format!("local dimension {d}")],
                            json!({ "command": "solve ldim-low", "local_dimension": d }),
                        ));
                    }
                    Ok(Decision::No) => {}
                    Err(Error::Timeout(_)) => {
                        return Ok(timeout_outcome("solve ldim-low", format!("local dimension >= {d}")));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Outcome::new(
                1,
                vec![format!("local dimension > {max_d}")],
                json!({ "command": "solve ldim-low", "local_dimension_exceeds": max_d }),
            ))
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str, lines: &mut Vec<String>) -> anyhow::Result<Value> {
    match out {
        Some(path) => {
            write(path, text)?;
            lines.push(format!("wrote {}", path.display()));
            Ok(json!(path.display().to_string()))
        }
        None => {
            lines.push(text.trim_end().to_string());
            Ok(json!(text))
        }
    }
}

fn convert(how: Conversion, poset: &Path, cert: &Path, out: &Option<PathBuf>) -> anyhow::Result<Outcome> {
    let p = parse(poset, io::parse_poset)?;
    let mut lines = Vec::new();
    let record = match how {
        Conversion::Thm1 => {
            let br = parse(cert, io::parse_boolean_realizer)?;
            let case = classify_boolean_certificate(&p, &br)?;
            let r = boolean_to_realizer(&p, &br)?;
            lines.push(format!("case {case:?}, realizer of size {}", r.size()));
            let output = emit(out, &io::write_realizer(&r), &mut lines)?;
            json!({ "command": "convert thm1", "case": format!("{case:?}"), "size": r.size(), "output": output })
        }
        Conversion::Thm2 => {
            let lr = parse(cert, io::parse_local_realizer)?;
            let r = local2_to_realizer(&p, &lr)?;
            lines.push(format!("realizer of size {}", r.size()));
            let output = emit(out, &io::write_realizer(&r), &mut lines)?;
            json!({ "command": "convert thm2", "size": r.size(), "output": output })
        }
        Conversion::Thm5 => {
            let lr = parse(cert, io::parse_local_realizer)?;
            let conv = local3_to_boolean(&p, &lr)?;
            let size = conv.boolean.size();
            lines.push(format!(
                "boolean realizer of size {size}: {} colors, {} partitions",
                conv.colors,
                conv.scheme.partitions.len()
            ));
            let output = emit(out, &io::write_boolean_realizer(&conv.boolean), &mut lines)?;
            json!({
                "command": "convert thm5", "size": size, "colors": conv.colors,
                "partitions": conv.scheme.partitions.len(), "output": output
            })
        }
    };
    Ok(Outcome::new(0, lines, record))
}

fn refute(what: &Refute, budget: &Budget) -> anyhow::Result<Outcome> {
    match what {
        Refute::Thm6 { k, candidate } => {
            let br = parse(candidate, io::parse_boolean_realizer)?;
            let inst = theorem6_construct(*k, DEFAULT_MAX_EDGES)?;
            let refuter = match Refuter::new(&inst, budget) {
                Ok(r) => r,
                Err(Error::Timeout(_)) => {
                    return Ok(timeout_outcome("refute thm6", "chromatic number of G'' unknown".into()))
                }
                Err(e) => return Err(e.into()),
            };
            let outcome = refuter.refute(&br)?;
            let text = match &outcome {
                RefutationOutcome::PairViolation { path, uv, vw, alpha } => {
                    format!(
                        "pair violation on path {path:?}: phi({}) = 1 but element {uv} is not below {vw}",
                        bits(alpha)
                    )
                }
                RefutationOutcome::QuadrupleViolation { path, uv, wx, alpha } => format!(
                    "quadruple violation on path {path:?}: phi({}) = 0 but element {uv} is below {wx}",
                    bits(alpha)
                ),
                RefutationOutcome::ColoringBound { d, chi } => {
                    format!("{d} orders give at most {} colors, G'' needs {chi}", 1u128 << d)
                }
                RefutationOutcome::Consistent { chi } => format!("consistent (chromatic number of G'' is {chi})"),
            };
            Ok(Outcome::new(
                u8::from(outcome.is_refutation()),
                vec![text.clone()],
                json!({ "command": "refute thm6", "refuted": outcome.is_refutation(), "detail": text, "chi": refuter.chi() }),
            ))
        }
        Refute::Ramsey { n, family } => {
            let fam = parse(family, io::parse_ple_list)?;
            match ramsey_cycle_witness(*n, &fam)? {
                Some(w) => {
                    let text = format!(
                        "quadruple {:?} has color {:?}; member {} lists {} before {} although {} < {}",
                        w.quadruple, w.color, w.ple, w.violated.1, w.violated.0, w.violated.0, w.violated.1
                    );
                    Ok(Outcome::new(
                        1,
                        vec![text],
                        json!({
                            "command": "refute ramsey", "refuted": true, "quadruple": w.quadruple,
                            "color": [w.color.0, w.color.1], "ple": w.ple, "cycle": w.cycle,
                            "violated": [w.violated.0, w.violated.1]
                        }),
                    ))
                }
                None => Ok(Outcome::new(
                    0,
                    vec!["no monochromatic quadruple".into()],
                    json!({ "command": "refute ramsey", "refuted": false }),
                )),
            }
        }
    }
}

fn bits(alpha: &[bool]) -> String {
    alpha.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn stats_cmd(poset: &Path) -> anyhow::Result<Outcome> {
    let p: Poset = parse(poset, io::parse_poset)?;
    let s = stats(&p);
    Ok(Outcome::new(
        0,
        s.to_string().lines().map(str::to_string).collect(),
        json!({
            "command": "stats", "n": s.n, "comparable_pairs": s.comparable_pairs, "width": s.width,
            "height": s.height, "critical_pairs": s.critical_pairs, "components": s.components
        }),
    ))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if !(cli.timeout_s.is_finite() && cli.timeout_s > 0.0) {
        bail!(Error::BadParameter(format!("--timeout-s must be positive, got {}", cli.timeout_s)));
    }
    let budget = Budget::new(Duration::from_secs_f64(cli.timeout_s));
    match &cli.command {
        Command::Generate { what } => generate(cli, what),
        Command::Verify { kind, poset, certificate } => verify(*kind, poset, certificate),
        Command::Solve { what } => solve(what, &budget),
        Command::Convert { how, poset, certificate, out } => convert(*how, poset, certificate, out),
        Command::Refute { what } => refute(what, &budget),
        Command::Stats { poset } => stats_cmd(poset),
    }
}

fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Timeout(_)) => 3,
        Some(Error::NotARealizer | Error::NotALocalRealizer | Error::NotAnExtension { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            let code = error_code(&e);
            let msg = format!("{e:#}");
            if cli.json {
                println!("{}", json!({ "error": msg, "exit_code": code }));
            } else {
                eprintln!("error: {msg}");
            }
            return ExitCode::from(code);
        }
    };
    if cli.json {
        let mut record = outcome.record;
        record["exit_code"] = json!(outcome.code);
        println!("{record}");
    } else {
        for line in &outcome.lines {
            println!("{line}");
        }
    }
    ExitCode::from(outcome.code)
}
