//! Argument parsing and the subcommands of `swb`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use swb_core::acceptance::{run_all, run_selected, Report};
use swb_core::category::{Comparison, Morphism};
use swb_core::chord::{caravan_normalize, enumerate, surface_type, Slide, SurfaceType, Tcd};
use swb_core::swb::{hs_equivalent, Equivalence, SearchLimits};

use crate::doc::{self, compact, Document, Envelope};
use crate::error::{CliError, Result};
use crate::render::{render_swb, render_tcd, Format};

#[derive(Debug, Parser)]
#[command(name = "swb", version, about = "Chord diagrams and squares with bands")]
pub struct Cli {
    /// Print results, and errors on stderr, as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Move budget for equivalence searches.
    #[arg(long, global = true, default_value_t = 8)]
    pub budget: usize,
    /// Seed for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format of `render`.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Svg)]
    pub format: FormatArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Svg,
    Tikz,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the chord diagrams of a given rank.
    Enumerate {
        #[arg(long)]
        rank: usize,
        /// Untwisted diagrams only.
        #[arg(long)]
        orientable: bool,
        #[arg(long)]
        count_only: bool,
        /// Print K diagrams drawn at random (see --seed) instead of all.
        #[arg(long, value_name = "K")]
        sample: Option<usize>,
        /// Largest rank accepted.
        #[arg(long, default_value_t = 5)]
        cap: usize,
    },
    /// Surface type of a tcd, frame or swb document.
    Classify { file: PathBuf },
    /// Caravan normal form of a tcd; reduced morphism of an swb datum.
    Normalize { file: PathBuf },
    /// `outer ∘ inner`.
    Compose { outer: PathBuf, inner: PathBuf },
    /// `left ⊗ right`.
    Tensor { left: PathBuf, right: PathBuf },
    /// Decide equivalence of two documents of the same kind. Chord diagrams
    /// and frames compare by surface type.
    Equal { lhs: PathBuf, rhs: PathBuf },
    /// Draw a tcd or swb document.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Comma-separated criterion ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

/// What a command prints, in both modes, and its exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, code: 0 }
    }
}

fn load(path: &Path) -> Result<Envelope> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    doc::parse(&text)
}

fn surface_json(ty: SurfaceType) -> Value {
    json!({ "b": ty.b, "g": ty.g, "t": ty.t })
}

fn slides_json(moves: &[Slide]) -> Value {
    Value::Array(moves.iter().map(|m| json!([m.site, m.dir])).collect())
}

fn slides_text(moves: &[Slide]) -> String {
    moves.iter().map(|m| format!("({},{:+})", m.site, m.dir)).collect::<Vec<_>>().join(" ")
}

fn tcd_of(doc: &Document, op: &'static str) -> Result<Tcd> {
    match doc {
        Document::Tcd(t) => Ok(t.clone()),
        Document::Frame(f) => Ok(f.tcd().clone()),
        Document::Swb(th) => Ok(th.frame().tcd().clone()),
        Document::Morphism(_) => Err(CliError::UnsupportedKind { op, kind: "morphism" }),
    }
}

fn morphism_of(doc: Document, op: &'static str, limits: SearchLimits) -> Result<Morphism> {
    match doc {
        Document::Swb(th) => Ok(Morphism::from_datum(&th).with_limits(limits)),
        Document::Morphism(m) => Ok(m.with_limits(limits)),
        other => Err(CliError::UnsupportedKind { op, kind: other.kind() }),
    }
}

fn morphism_output(m: Morphism) -> Output {
    let doc = Document::Morphism(m);
    let json = json!({ "version": doc::VERSION, "kind": "morphism", "payload": doc.payload() });
    Output::ok(doc::emit(&Envelope::new(doc)), json)
}

fn cmd_enumerate(
    cli: &Cli,
    rank: usize,
    orientable: bool,
    count_only: bool,
    sample: Option<usize>,
    cap: usize,
) -> Result<Output> {
    if rank > cap {
        return Err(CliError::CapExceeded { rank, cap });
    }
    let mut all = enumerate(rank, orientable);
    if count_only {
        return Ok(Output::ok(format!("{}\n", all.len()), json!({ "rank": rank, "count": all.len() })));
    }
    if let Some(k) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        all = all.choose_multiple(&mut rng, k).cloned().collect();
    }
    let docs: Vec<Document> = all.into_iter().map(Document::Tcd).collect();
    let text: String = docs.iter().map(|d| compact(d) + "\n").collect();
    let json = json!({ "rank": rank, "count": docs.len(), "diagrams": docs.iter().map(Document::payload).collect::<Vec<_>>() });
    Ok(Output::ok(text, json))
}

fn cmd_classify(file: &Path) -> Result<Output> {
    let env = load(file)?;
    let ty = surface_type(&tcd_of(&env.doc, "classify")?);
    let json = surface_json(ty);
    Ok(Output::ok(format!("{json}\n"), json))
}

fn cmd_normalize(cli: &Cli, file: &Path) -> Result<Output> {
    let env = load(file)?;
    match env.doc {
        Document::Tcd(t) => {
            let (ty, trace) = caravan_normalize(&t)?;
            let car = Document::Tcd(swb_core::chord::caravan(ty));
            let json = json!({ "type": surface_json(ty), "caravan": car.payload(), "trace": slides_json(&trace) });
            let text = format!("type {}\ncaravan {}\ntrace {}\n", surface_json(ty), compact(&car), slides_text(&trace));
            Ok(Output::ok(text, json))
        }
        other => Ok(morphism_output(morphism_of(other, "normalize", SearchLimits::new(cli.budget))?)),
    }
}

fn cmd_binary(cli: &Cli, a: &Path, b: &Path, tensor: bool) -> Result<Output> {
    let op = if tensor { "tensor" } else { "compose" };
    let limits = SearchLimits::new(cli.budget);
    let f = morphism_of(load(a)?.doc, op, limits)?;
    let g = morphism_of(load(b)?.doc, op, limits)?;
    let m = if tensor { f.tensor(&g) } else { f.compose(&g)? };
    Ok(morphism_output(m))
}

fn verdict(word: &str, json: Value) -> Output {
    Output::ok(format!("{word}\n"), json)
}

fn cmd_equal(cli: &Cli, lhs: &Path, rhs: &Path) -> Result<Output> {
    let (a, b) = (load(lhs)?.doc, load(rhs)?.doc);
    let limits = SearchLimits::new(cli.budget);
    match (a, b) {
        (a @ (Document::Tcd(_) | Document::Frame(_)), b) if a.kind() == b.kind() => {
            let (s, t) = (surface_type(&tcd_of(&a, "compare")?), surface_type(&tcd_of(&b, "compare")?));
            let ends = |d: &Document| match d {
                Document::Frame(f) => (f.south(), f.north()),
                _ => (0, 0),
            };
            let word = if s == t && ends(&a) == ends(&b) { "EQUIVALENT" } else { "DIFFERENT" };
            Ok(verdict(word, json!({ "verdict": word, "left": surface_json(s), "right": surface_json(t) })))
        }
        (Document::Swb(a), Document::Swb(b)) if (a.south(), a.north()) != (b.south(), b.north()) => {
            let reason = format!("types ({}, {}) and ({}, {}) differ", a.south(), a.north(), b.south(), b.north());
            Ok(verdict("DIFFERENT", json!({ "verdict": "DIFFERENT", "reason": reason })))
        }
        // closed loops become scalars, which the morphism comparison handles
        (Document::Swb(a), Document::Swb(b)) if !a.has_internal_components() && !b.has_internal_components() => {
            Ok(match hs_equivalent(&a, &b, limits)? {
                Equivalence::Equivalent { left, right } => verdict(
                    "EQUIVALENT",
                    json!({ "verdict": "EQUIVALENT", "left": slides_json(&left), "right": slides_json(&right) }),
                ),
                Equivalence::Distinct { reason } => {
                    verdict("DIFFERENT", json!({ "verdict": "DIFFERENT", "reason": reason }))
                }
                Equivalence::Undecided { explored, depth } => verdict(
                    "UNDECIDED",
                    json!({ "verdict": "UNDECIDED", "explored": explored, "depth": depth, "budget": cli.budget }),
                ),
            })
        }
        (a, b)
            if a.kind() == b.kind()
                || matches!(
                    (&a, &b),
                    (Document::Swb(_) | Document::Morphism(_), Document::Swb(_) | Document::Morphism(_))
                ) =>
        {
            let f = morphism_of(a, "compare", limits)?;
            let g = morphism_of(b, "compare", limits)?;
            let word = match f.equals(&g)? {
                Comparison::Equal => "EQUIVALENT",
                Comparison::Different => "DIFFERENT",
                Comparison::Undecided => "UNDECIDED",
            };
            Ok(verdict(word, json!({ "verdict": word })))
        }
        (a, b) => Err(CliError::Usage(format!("cannot compare a {} document with a {} document", a.kind(), b.kind()))),
    }
}

fn cmd_render(cli: &Cli, file: &Path, output: Option<&Path>) -> Result<Output> {
    let format = match cli.format {
        FormatArg::Svg => Format::Svg,
        FormatArg::Tikz => Format::Tikz,
    };
    let drawing = match load(file)?.doc {
        Document::Tcd(t) => render_tcd(&t, format),
        Document::Swb(th) => render_swb(&th, format),
        other => return Err(CliError::UnsupportedKind { op: "render", kind: other.kind() }),
    };
    match output {
        Some(path) => {
            std::fs::write(path, &drawing).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
            Ok(Output::ok("", json!({ "written": path.display().to_string() })))
        }
        None => Ok(Output::ok(
            drawing.clone(),
            json!({ "format": format!("{format:?}").to_lowercase(), "output": drawing }),
        )),
    }
}

fn report_json(r: &Report) -> Value {
    json!({
        "id": r.id,
        "name": r.name,
        "passed": r.passed,
        "detail": r.detail,
        "seconds": r.elapsed.as_secs_f64(),
    })
}

fn cmd_selftest(only: &[u8]) -> Result<Output> {
    let reports = if only.is_empty() { run_all() } else { run_selected(only) };
    if reports.is_empty() {
        return Err(CliError::Usage(format!("no criterion among {only:?}")));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text.push_str(&format!("{} passed, {failed} failed\n", reports.len() - failed));
    let json = json!({ "passed": reports.len() - failed, "failed": failed, "criteria": reports.iter().map(report_json).collect::<Vec<_>>() });
    Ok(Output { text, json, code: i32::from(failed > 0) })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Enumerate { rank, orientable, count_only, sample, cap } => {
            cmd_enumerate(cli, *rank, *orientable, *count_only, *sample, *cap)
        }
        Command::Classify { file } => cmd_classify(file),
        Command::Normalize { file } => cmd_normalize(cli, file),
        Command::Compose { outer, inner } => cmd_binary(cli, outer, inner, false),
        Command::Tensor { left, right } => cmd_binary(cli, left, right, true),
        Command::Equal { lhs, rhs } => cmd_equal(cli, lhs, rhs),
        Command::Render { file, output } => cmd_render(cli, file, output.as_deref()),
        Command::Selftest { only } => cmd_selftest(only),
    }
}

/// Runs `swb` with `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let e2 = CliError::Usage(msg.strip_prefix("error: ").unwrap_or(&msg).trim_end().to_string());
            report(&e2, json_mode, err);
            return e2.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json { writeln!(out, "{}", o.json) } else { write!(out, "{}", o.text) };
            o.code
        }
        Err(e) => {
            report(&e, cli.json, err);
            e.exit_code()
        }
    }
}

fn report(e: &CliError, json_mode: bool, err: &mut dyn Write) {
    let _ = if json_mode { writeln!(err, "{}", e.to_json()) } else { writeln!(err, "error: {e}") };
}
