//! Command-line front end: PCS files in, reports out.
//!
//! Exit codes: 0 success, 1 analysis mismatch, 2 input error.

mod format;
mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use format::{emit_pcs, parse_pcs, Diagnostic, ParseError, HEADER};
pub use report::{GroupEntry, HomologyReport};

use crate::branch::{branching_complex, Side};
use crate::dipath::{no_germs_table, ExactScalar};
use crate::homology::{branching_homology, graded_iso, vertex_homology, GradedAbelianGroup, HomologyError};
use crate::pcs::{boundary_cube, standard_cube, PrecubicalSet};
use crate::subdivision::subdivide;
use crate::{PcsError, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pcs", version, about = "Precubical sets, branching homology and subdivision")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a PCS file
    Validate { file: PathBuf },
    /// Cube counts and initial/final states
    Info { file: PathBuf },
    /// Branching (or merging) complexes at vertices
    Complex {
        file: PathBuf,
        /// Only this vertex (default: every vertex)
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        merging: bool,
    },
    /// Branching (or merging) homology
    Homology {
        file: PathBuf,
        #[arg(long)]
        merging: bool,
        #[arg(long)]
        json: bool,
    },
    /// Emit the p-fold cubical subdivision
    Subdivide {
        file: PathBuf,
        #[arg(short)]
        p: usize,
        /// Write to this file instead of stdout
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Check that subdivision preserves branching and merging homology
    CheckSub {
        file: PathBuf,
        #[arg(short)]
        p: usize,
    },
    /// Emit the standard n-cube
    StdCube { n: usize },
    /// Emit the boundary of the standard n-cube
    Boundary { n: usize },
    /// Emit the time-reversed set
    Reverse { file: PathBuf },
    /// Convergence table of the paths γ_{1/m} towards the diagonal
    DemoNoGerms {
        #[arg(long, default_value = "1/2")]
        epsilon: String,
        #[arg(long, default_value_t = 64)]
        steps: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Io(String, io::Error),
    Parse(String, ParseError),
    Pcs(PcsError),
    Usage(String),
}

impl From<PcsError> for CliError {
    fn from(e: PcsError) -> Self {
        CliError::Pcs(e)
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::Pcs(e) => CliError::Pcs(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io("output".into(), e)
    }
}

impl CliError {
    fn render(&self) -> String {
        match self {
            CliError::Io(path, e) => format!("error: {path}: {e}\n"),
            CliError::Parse(path, e) => e.diagnostics.iter().map(|d| format!("{path}:{d}\n")).collect(),
            CliError::Pcs(PcsError::Invalid(vs)) => vs.iter().map(|v| format!("error: {v}\n")).collect(),
            CliError::Pcs(e) => format!("error: {e}\n"),
            CliError::Usage(m) => format!("error: {m}\n"),
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = err.write_all(e.render().as_bytes());
            EXIT_INPUT
        }
    }
}

fn read_pcs(path: &Path) -> Result<PrecubicalSet, CliError> {
    let label = path.display().to_string();
    let text = if label == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(label.clone(), e))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(label.clone(), e))?
    };
    parse_pcs(&text).map_err(|e| CliError::Parse(label, e))
}

fn side(merging: bool) -> Side {
    if merging {
        Side::Merging
    } else {
        Side::Branching
    }
}

fn names(k: &PrecubicalSet, ids: &[crate::pcs::CubeId]) -> String {
    if ids.is_empty() {
        return "-".into();
    }
    ids.iter().map(|&c| k.name(c)).collect::<Vec<_>>().join(" ")
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Validate { file } => {
            let k = read_pcs(&file)?;
            writeln!(out, "valid: {} cubes, counts {:?}", k.len(), k.counts())?;
        }
        Command::Info { file } => {
            let k = read_pcs(&file)?;
            let dim = k.dim().map_or("empty".to_string(), |d| d.to_string());
            let mut text = String::new();
            writeln!(text, "cubes: {}", k.len()).unwrap();
            writeln!(text, "dimension: {dim}").unwrap();
            for (d, c) in k.counts().iter().enumerate() {
                writeln!(text, "  dim {d}: {c}").unwrap();
            }
            writeln!(text, "initial states: {}", names(&k, &k.initial_states())).unwrap();
            writeln!(text, "final states: {}", names(&k, &k.final_states())).unwrap();
            out.write_all(text.as_bytes())?;
        }
        Command::Complex { file, vertex, merging } => {
            let k = read_pcs(&file)?;
            let vertices = match vertex {
                Some(v) => vec![k.get(&v)?],
                None => k.vertices().collect(),
            };
            for v in vertices {
                let b = branching_complex(&k, v, side(merging))?;
                let h = vertex_homology(&k, v, side(merging))?;
                write!(out, "{}", b.export())?;
                writeln!(out, "# homology {h}")?;
            }
        }
        Command::Homology { file, merging, json } => {
            let k = read_pcs(&file)?;
            let r = HomologyReport::new(side(merging), &branching_homology(&k, side(merging))?);
            if json {
                writeln!(out, "{}", r.to_json())?;
            } else {
                write!(out, "{}", r.to_text())?;
            }
        }
        Command::Subdivide { file, p, o } => {
            let k = read_pcs(&file)?;
            let text = emit_pcs(subdivide(&k, p)?.complex());
            match o {
                Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io(path.display().to_string(), e))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::CheckSub { file, p } => {
            let k = read_pcs(&file)?;
            let (text, ok) = check_sub(&k, p)?;
            out.write_all(text.as_bytes())?;
            return Ok(if ok { EXIT_OK } else { EXIT_MISMATCH });
        }
        Command::StdCube { n } => out.write_all(emit_pcs(&standard_cube(n)).as_bytes())?,
        Command::Boundary { n } => out.write_all(emit_pcs(&boundary_cube(n)).as_bytes())?,
        Command::Reverse { file } => out.write_all(emit_pcs(&read_pcs(&file)?.time_reverse()).as_bytes())?,
        Command::DemoNoGerms { epsilon, steps } => {
            let eps: Rational =
                epsilon.parse().map_err(|_| CliError::Usage(format!("invalid rational {epsilon:?}")))?;
            let (text, ok) = no_germs_report(eps, steps)?;
            out.write_all(text.as_bytes())?;
            return Ok(if ok { EXIT_OK } else { EXIT_MISMATCH });
        }
    }
    Ok(EXIT_OK)
}

fn check_sub(k: &PrecubicalSet, p: usize) -> Result<(String, bool), CliError> {
    let sub = subdivide(k, p)?;
    let mut text = String::new();
    let mut ok = true;
    for s in [Side::Branching, Side::Merging] {
        let a = branching_homology(k, s)?;
        let b = branching_homology(sub.complex(), s)?;
        let same = graded_iso(&a, &b);
        ok &= same;
        writeln!(text, "{s} K: {a}").unwrap();
        writeln!(text, "{s} Sub_{p}(K): {b}").unwrap();
        writeln!(text, "{s} isomorphic: {same}").unwrap();
    }
    let mut disagree = Vec::new();
    for v in k.vertices() {
        let image = sub.complex().get(k.name(v))?;
        for s in [Side::Branching, Side::Merging] {
            let a: GradedAbelianGroup = vertex_homology(k, v, s)?;
            let b = vertex_homology(sub.complex(), image, s)?;
            if !graded_iso(&a, &b) {
                disagree.push(format!("{} ({s})", k.name(v)));
            }
        }
    }
    writeln!(text, "vertexwise: {} of {} vertices agree", k.count(0) - disagree.len().min(k.count(0)), k.count(0))
        .unwrap();
    for d in &disagree {
        writeln!(text, "  mismatch at {d}").unwrap();
    }
    ok &= disagree.is_empty();
    writeln!(text, "result: {}", if ok { "ok" } else { "MISMATCH" }).unwrap();
    Ok((text, ok))
}

fn no_germs_report<S: ExactScalar>(eps: S, steps: usize) -> Result<(String, bool), CliError> {
    let rows = no_germs_table(eps.clone(), steps).map_err(|e| CliError::Usage(e.to_string()))?;
    let two = S::from_usize(2).expect("2 is representable");
    let mut text = format!("epsilon = {eps}\nm\th\tsup_distance\th/2\tboundary_germ\tlimit_off_boundary\n");
    let mut ok = true;
    for r in &rows {
        let half = r.h.clone() / two.clone();
        ok &= r.distance == half && r.boundary_germ && r.limit_off_boundary;
        writeln!(text, "{}\t{}\t{}\t{}\t{}\t{}", r.m, r.h, r.distance, half, r.boundary_germ, r.limit_off_boundary)
            .unwrap();
    }
    writeln!(text, "rows: {}, all exact: {ok}", rows.len()).unwrap();
    Ok((text, ok))
}
