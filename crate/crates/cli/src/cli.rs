//! Command dispatch behind the `gamesym` binary.
//!
//! Exit codes: 0 on success, 1 for malformed input (unreadable or invalid files, bad
//! arguments), 2 when the input is well formed but violates a constraint of the library
//! (fewer than two players or strategies, size guards).

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use gamesym_core::basis::{build_d, build_e, enum_weak, BasisMatrix};
use gamesym_core::decompose::Decomposer;
use gamesym_core::symmetry::{verdict, Symmetry};
use gamesym_core::{Dimensions, GameSpec, Matrix};
use serde_json::{json, Value};

use crate::io::{self, FileError};
use crate::render::{self, Cells, DEFAULT_PRECISION};

#[derive(Debug, Parser)]
#[command(
    name = "gamesym",
    version,
    about = "Symmetry checks and symmetric/skew-symmetric/asymmetric decomposition of finite games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether a game is symmetric, skew-symmetric, asymmetric and zero-sum.
    Verify {
        file: PathBuf,
        /// Print the first violating permutation, player and profile for each failed check.
        #[arg(long)]
        witness: bool,
    },
    /// Print the skew-symmetric basis D and symmetric basis E with Gram diagnostics.
    Basis {
        #[command(flatten)]
        shape: Shape,
        /// Also write both bases as exact JSON to this file.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
    /// Print subspace dimensions.
    Dims {
        #[command(flatten)]
        shape: Shape,
    },
    /// Split a game into symmetric, skew-symmetric and asymmetric components.
    Decompose {
        file: PathBuf,
        /// Directory for the three component files (default: next to the input).
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        precision: Precision,
    },
    /// Print a game as a payoff table.
    Render {
        file: PathBuf,
        #[command(flatten)]
        precision: Precision,
    },
}

#[derive(Debug, Args)]
pub struct Shape {
    /// Number of players.
    #[arg(long)]
    pub n: usize,
    /// Strategies per player.
    #[arg(long)]
    pub kappa: usize,
}

#[derive(Debug, Args)]
pub struct Precision {
    /// Fractional digits in tables (1..=12).
    #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
    pub precision: usize,
    /// Print exact fractions instead of decimals.
    #[arg(long, conflicts_with = "precision")]
    pub exact: bool,
}

impl Precision {
    fn cells(&self) -> Cells {
        if self.exact {
            Cells::Exact
        } else {
            Cells::Decimal(self.precision)
        }
    }
}

fn parse_precision(s: &str) -> Result<usize, String> {
    let p: usize = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (1..=12).contains(&p) {
        Ok(p)
    } else {
        Err(format!("precision must be in 1..=12, got {p}"))
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Malformed(String),
    Constraint(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Malformed(_) => 1,
            Failure::Constraint(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Malformed(m) => write!(f, "{m}"),
            Failure::Constraint(m) => write!(f, "constraint violated: {m}"),
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        if e.is_constraint_violation() {
            Failure::Constraint(e.to_string())
        } else {
            Failure::Malformed(e.to_string())
        }
    }
}

impl From<gamesym_core::Error> for Failure {
    fn from(e: gamesym_core::Error) -> Self {
        FileError::from(e).into()
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Malformed(format!("output error: {e}"))
    }
}

/// Parse `args` (including the program name) and run the command, writing to `out` and
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Verify { file, witness } => verify(file, *witness, out),
        Command::Basis { shape, dump } => basis(shape, dump.as_deref(), out),
        Command::Dims { shape } => dims(shape, out),
        Command::Decompose {
            file,
            out_dir,
            precision,
        } => decompose(file, out_dir.as_deref(), precision.cells(), out),
        Command::Render { file, precision } => {
            let g = io::read_game(file)?;
            write_title(out, g.name(), file)?;
            out.write_all(render::payoff_table(&g, precision.cells()).as_bytes())?;
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_title(out: &mut dyn Write, name: Option<&str>, file: &Path) -> std::io::Result<()> {
    match name {
        Some(name) => writeln!(out, "game: {name}"),
        None => writeln!(out, "game: {}", file.display()),
    }
}

fn verify(file: &Path, witness: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let g = io::read_game(file)?;
    let v = verdict(&g)?;
    write_title(out, g.name(), file)?;
    writeln!(out, "shape: n={} kappa={}", g.spec().n(), g.spec().kappa())?;
    writeln!(out, "symmetric: {}", yes_no(v.is_symmetric))?;
    writeln!(out, "skew: {}", yes_no(v.is_skew))?;
    writeln!(out, "asymmetric: {}", yes_no(v.is_asymmetric))?;
    writeln!(out, "zero-sum: {}", yes_no(v.is_zero_sum))?;
    if witness {
        for (kind, w) in &v.witnesses {
            let kind = match kind {
                Symmetry::Symmetric => "symmetric",
                Symmetry::Skew => "skew",
            };
            writeln!(
                out,
                "witness ({kind}): sigma={} player={} profile={}",
                w.sigma,
                w.player + 1,
                g.spec().profile_label(&w.profile)
            )?;
        }
    }
    Ok(())
}

fn dims_line(d: &Dimensions) -> String {
    format!(
        "ℓ={} β={} p={} α={} dimE={}",
        d.ell, d.beta, d.p, d.alpha, d.dim_asymmetric
    )
}

fn dims(shape: &Shape, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = GameSpec::new(shape.n, shape.kappa)?;
    let d = Dimensions::of(&spec);
    writeln!(out, "{}", dims_line(&d))?;
    let q: Vec<String> = d.orbit_sizes.iter().map(|q| q.to_string()).collect();
    writeln!(out, "q_i: {}", q.join(" "))?;
    Ok(())
}

fn tuple_label(values: &[usize]) -> String {
    let v: Vec<String> = values.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", v.join(","))
}

fn basis_labels(b: &BasisMatrix, tuples: &[Vec<usize>], prefix: &str) -> Vec<String> {
    b.labels
        .iter()
        .map(|&(t, j)| format!("{prefix}{} j={}", tuple_label(&tuples[t]), j + 1))
        .collect()
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.row_iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

fn gram_report(name: &str, m: &Matrix, out: &mut dyn Write) -> std::io::Result<()> {
    if m.is_diagonal() {
        let diag: Vec<String> = m.diagonal().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{name}: diagonal [{}]", diag.join(" "))
    } else {
        writeln!(out, "{name}: NOT diagonal")
    }
}

fn basis(shape: &Shape, dump: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = GameSpec::new(shape.n, shape.kappa)?;
    let dims = Dimensions::of(&spec);
    let d = build_d(&spec)?;
    let e = build_e(&spec)?;
    let strict = gamesym_core::basis::enum_strict(&spec);
    let weak: Vec<Vec<usize>> = enum_weak(&spec).into_iter().map(|t| t.values).collect();

    writeln!(out, "{}", dims_line(&dims))?;
    writeln!(out, "D: {} x {}", d.matrix.rows(), d.matrix.cols())?;
    if !d.is_empty() {
        let labels = basis_labels(&d, &strict, "");
        out.write_all(render::labelled_matrix(&d.matrix, &labels, Cells::Exact).as_bytes())?;
    }
    writeln!(out, "E: {} x {}", e.matrix.rows(), e.matrix.cols())?;
    let labels = basis_labels(&e, &weak, "");
    out.write_all(render::labelled_matrix(&e.matrix, &labels, Cells::Exact).as_bytes())?;

    gram_report("DDᵀ", &d.gram(), out)?;
    gram_report("EEᵀ", &e.gram(), out)?;
    let cross = d.matrix.mul(&e.matrix.transpose())?;
    writeln!(
        out,
        "DEᵀ: {}",
        if cross.is_zero() { "zero" } else { "NOT zero" }
    )?;

    if let Some(path) = dump {
        let doc = json!({
            "n": spec.n(),
            "kappa": spec.kappa(),
            "D": matrix_json(&d.matrix),
            "E": matrix_json(&e.matrix),
        });
        let text = serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n";
        std::fs::write(path, text).map_err(|source| FileError::Write {
            path: path.to_path_buf(),
            source,
        })?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(())
}

fn decompose(
    file: &Path,
    out_dir: Option<&Path>,
    cells: Cells,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let g = io::read_game(file)?;
    let decomposition = Decomposer::new(*g.spec())?.decompose(&g)?;
    let stem = io::file_stem(file);
    let dir = match out_dir {
        Some(d) => d.to_path_buf(),
        None => file.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    std::fs::create_dir_all(&dir).map_err(|source| FileError::Write {
        path: dir.clone(),
        source,
    })?;

    write_title(out, g.name(), file)?;
    writeln!(
        out,
        "X1 = {}",
        render::exact_vector(&decomposition.skew_coords)
    )?;
    writeln!(
        out,
        "X2 = {}",
        render::exact_vector(&decomposition.symmetric_coords)
    )?;
    let base = g.name().map(str::to_string).unwrap_or_else(|| stem.clone());
    let parts = [
        ("symmetric", &decomposition.symmetric),
        ("skew", &decomposition.skew),
        ("asymmetric", &decomposition.asymmetric),
    ];
    for (label, part) in parts {
        let part = part.clone().with_name(format!("{base} ({label} part)"));
        let path = dir.join(format!("{stem}.{label}.game.json"));
        io::write_game(&path, &part)?;
        writeln!(out)?;
        writeln!(out, "{label} component -> {}", path.display())?;
        out.write_all(render::payoff_table(&part, cells).as_bytes())?;
    }
    Ok(())
}
