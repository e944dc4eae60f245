//! The `gfree` command line, as a library so tests can drive it without a subprocess.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use gfree::extremal::{extremal_set, lemma1_audit};
use gfree::graph::{enumerate_connected_graphs, make_named, parse_graph, write_graph6};
use gfree::partition::{
    catlin_lai_partition, chi_free, lovasz_partition, theorem1_partition, CatlinLaiOutcome,
};
use gfree::verify::{corpus, run_suite_on};
use gfree::{
    Error, Graph, NamedGraph, Pattern, PatternSpecList, Suite, Theorem1Outcome, VerifyConfig,
    VerifyReport,
};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_THEOREM_VIOLATION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gfree",
    version,
    about = "Pattern-free vertex partitions of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Graph: a file (graph6 or edge list), `-` for stdin, `g6:<string>`, a name such as
    /// `petersen`, `K7`, `C9`, `P4`, `K3,3,3`, or a bare graph6 string.
    #[arg(short, long)]
    input: String,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Extremal maximum pattern-free set.
    Maxset {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long)]
        pattern: String,
    },
    /// Partition into pattern-free classes, one of maximum size.
    Partition {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated patterns, one per class.
        #[arg(long, required_unless_present = "arboricity")]
        specs: Option<String>,
        /// Acyclic classes: `mindeg>=2` specs plus `K2` when the maximum degree is odd.
        #[arg(long, conflicts_with = "specs")]
        arboricity: bool,
    },
    /// Pattern-free chromatic number.
    Chi {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long)]
        pattern: String,
    },
    /// Classes with maximum degree below the given bounds.
    Lovasz {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
    },
    /// Extremal set with the per-vertex checks of its structure lemma.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long)]
        pattern: String,
    },
    /// Run verification suites over all connected graphs up to `--nmax` vertices.
    Verify {
        /// `all` or one of theorem1, lemma1, bounds, lovasz, catlin_brooks, degenerate.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        /// Most classes per spec list.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Worker threads; 0 for one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Write `<suite>.json` reports here.
        #[arg(long)]
        report_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print graph6 lines for the connected graphs on exactly `--nmax` vertices.
    Gen {
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run with `args` (including the program name) and the process's stdin.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(args, &mut std::io::stdin())
}

pub fn run_with_stdin<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut out = Output::default();
    match execute(cli.command, stdin, &mut out) {
        Ok(code) => out.code = code,
        Err(e) => {
            out.code = match e {
                Error::TheoremViolation(_) => EXIT_THEOREM_VIOLATION,
                _ => EXIT_USAGE,
            };
            let _ = writeln!(out.stderr, "error: {e}");
        }
    }
    out
}

fn read_graph(spec: &str, stdin: &mut dyn Read) -> Result<Graph, Error> {
    let io_err = |e: std::io::Error| Error::InvalidGraph(format!("cannot read {spec}: {e}"));
    if spec == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(io_err)?;
        return parse_graph(&text);
    }
    if let Some(g6) = spec.strip_prefix("g6:") {
        return parse_graph(g6);
    }
    if Path::new(spec).is_file() {
        return parse_graph(&fs::read_to_string(spec).map_err(io_err)?);
    }
    if let Ok(named) = spec.parse::<NamedGraph>() {
        return make_named(&named);
    }
    parse_graph(spec)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut Output) -> Result<i32, Error> {
    let o = &mut out.stdout;
    match command {
        Command::Maxset { input, pattern } => {
            let h = read_graph(&input.input, stdin)?;
            let p: Pattern = pattern.parse()?;
            let e = extremal_set(&h, &p)?;
            if input.json {
                o.push_str(&to_json(&e));
            } else {
                let _ = writeln!(o, "maximum {p}-free set: {} (size {})", e.set, e.size);
                let _ = writeln!(o, "regular components left: {}", e.regular_component_count);
                let _ = writeln!(o, "components inside: {}", e.hs_component_count);
            }
        }
        Command::Partition {
            input,
            specs,
            arboricity,
        } => {
            let h = read_graph(&input.input, stdin)?;
            if arboricity {
                match catlin_lai_partition(&h)? {
                    CatlinLaiOutcome::Partition(p) if input.json => o.push_str(&to_json(&p)),
                    CatlinLaiOutcome::Partition(p) => {
                        write_classes(o, &p.certificate.classes);
                        if let (Some(a), Some(b)) = (p.option_a, p.option_b) {
                            let _ = writeln!(o, "option a: {a}\noption b: {b}");
                        }
                    }
                    CatlinLaiOutcome::Exception(case) => {
                        write_exception(o, &h, "arboricity", &case.to_string(), input.json)?
                    }
                }
            } else {
                let specs: PatternSpecList = specs.unwrap_or_default().parse()?;
                match theorem1_partition(&h, &specs)? {
                    Theorem1Outcome::Certificate(c) if input.json => o.push_str(&to_json(&c)),
                    Theorem1Outcome::Certificate(c) => {
                        write_classes(o, &c.classes);
                        let _ = writeln!(
                            o,
                            "class {} has maximum size {} ({})",
                            c.designated_max_class + 1,
                            c.audit.max_class_size,
                            c.method_tag
                        );
                    }
                    Theorem1Outcome::Exception(case) => {
                        write_exception(o, &h, &specs.to_string(), &case.to_string(), input.json)?
                    }
                }
            }
        }
        Command::Chi { input, pattern } => {
            let h = read_graph(&input.input, stdin)?;
            let p: Pattern = pattern.parse()?;
            let (chi, classes) = chi_free(&h, &p)?;
            if input.json {
                o.push_str(&to_json(
                    &json!({ "pattern": p, "chi": chi, "classes": classes }),
                ));
            } else {
                let _ = writeln!(o, "{chi}");
                write_classes(o, &classes);
            }
        }
        Command::Lovasz { input, degrees } => {
            let h = read_graph(&input.input, stdin)?;
            let l = lovasz_partition(&h, &degrees)?;
            if input.json {
                o.push_str(&to_json(&l));
            } else {
                write_classes(o, &l.classes);
                let _ = writeln!(o, "moves: {}", l.moves);
            }
        }
        Command::Audit { input, pattern } => {
            let h = read_graph(&input.input, stdin)?;
            let p: Pattern = pattern.parse()?;
            let e = extremal_set(&h, &p)?;
            let a = lemma1_audit(&h, &p, &e)?;
            if input.json {
                o.push_str(&to_json(&a));
            } else {
                let _ = writeln!(o, "extremal set {} (size {})", a.s, e.size);
                let _ = writeln!(o, "regular components: {}", a.regular_components.len());
                let _ = writeln!(o, "degree bound: {}", a.degree_bound);
                let _ = writeln!(o, "part a: {}", a.part_a.iter().all(|c| c.holds));
                let _ = writeln!(o, "part b: {}", a.part_b.iter().all(|c| c.holds));
                if let Some(case) = a.part_c_case {
                    let _ = writeln!(o, "part c: {}", to_json(&case).trim().trim_matches('"'));
                }
                let _ = writeln!(o, "{}", if a.passed { "PASS" } else { "FAIL" });
            }
            if !a.passed {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Verify {
            suite,
            nmax,
            k,
            workers,
            report_dir,
            json,
        } => {
            let suites: Vec<Suite> = if suite.trim() == "all" {
                Suite::ALL.to_vec()
            } else {
                suite.split(',').map(str::parse).collect::<Result<_, _>>()?
            };
            let config = VerifyConfig {
                n_max: nmax,
                k_max: k,
                workers,
                ..VerifyConfig::default()
            };
            let graphs = corpus(nmax)?;
            let mut reports = Vec::new();
            for s in suites {
                let r = run_suite_on(s, &config, &graphs)?;
                if let Some(dir) = &report_dir {
                    let write = |e: std::io::Error| Error::Precondition(format!("report dir: {e}"));
                    fs::create_dir_all(dir).map_err(write)?;
                    fs::write(dir.join(format!("{s}.json")), to_json(&r)).map_err(write)?;
                }
                reports.push(r);
            }
            if json {
                o.push_str(&to_json(&reports));
            } else {
                write_summary(o, &reports);
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Gen { nmax } => {
            for g in enumerate_connected_graphs(nmax)? {
                let _ = writeln!(o, "{}", write_graph6(&g)?);
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_classes(o: &mut String, classes: &[gfree::VertexSet]) {
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(o, "V{}: {c}", i + 1);
    }
}

fn write_exception(
    o: &mut String,
    h: &Graph,
    specs: &str,
    case: &str,
    json: bool,
) -> Result<(), Error> {
    if json {
        o.push_str(&to_json(&json!({
            "graph_g6": write_graph6(h)?,
            "specs": specs,
            "exception": case,
        })));
    } else {
        let _ = writeln!(o, "excluded input: {case}");
    }
    Ok(())
}

fn write_summary(o: &mut String, reports: &[VerifyReport]) {
    let _ = writeln!(
        o,
        "{:<14} {:>7} {:>10} {:>10} {:>9}  {:<6} {:>9}",
        "suite", "graphs", "instances", "exceptions", "failures", "status", "time"
    );
    for r in reports {
        let _ = writeln!(
            o,
            "{:<14} {:>7} {:>10} {:>10} {:>9}  {:<6} {:>8.2}s",
            r.suite.name(),
            r.graphs,
            r.instances,
            r.exceptions.len(),
            r.failures.len(),
            if r.passed { "PASS" } else { "FAIL" },
            r.wall_time.as_secs_f64()
        );
    }
    for r in reports {
        for f in r.failures.iter().take(10) {
            let _ = writeln!(
                o,
                "{} {} [{}]: {}\n  replay: {}",
                r.suite, f.graph_g6, f.stage, f.witness, f.replay
            );
        }
    }
}
