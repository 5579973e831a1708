//! Command-line front end: text formats, the builtin catalog and the `tckit`
//! subcommands.

pub mod catalog;
pub mod format;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use tckit_core::braid::{build_delta, build_theta, garside_delta, is_equal, BraidWord};
use tckit_core::chart::{analyze, recognize_syntactic, validate_chart_graph, validate_movie, TorusCoveringChart};
use tckit_core::compile::{compile, verify_theorem_steps};
use tckit_core::invariants::{braid_index_report, classify, Kind, DEFAULT_SEARCH_BOUND};
use tckit_core::ParseError;

pub const SEARCH_BOUND_VAR: &str = "TCKIT_SEARCH_BOUND";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tckit", version, about = "Compile torus-covering-charts into surface-link chart movies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Braid word utilities.
    Braid {
        #[command(subcommand)]
        command: BraidCommand,
    },
    /// Compile a `.tc` chart into a `.tcm` movie of twice the degree.
    Compile {
        chart: PathBuf,
        /// Output file; standard output when omitted or `-`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every event of a `.tcm` movie.
    Validate { movie: PathBuf },
    /// Degree, black vertices, Euler characteristic, components and genera of a movie.
    Invariants { movie: PathBuf },
    /// Recognise the spun families.
    Classify { chart: PathBuf },
    /// Braid index bounds of the compiled surface link.
    BraidIndex { chart: PathBuf },
    /// Certify the isotopy identities behind the handle construction.
    VerifySteps {
        #[arg(long)]
        m: usize,
        /// Comma-separated signed generators of a braid in `B_m`; empty or `e` for the identity.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        b: String,
    },
    /// Check a planar chart graph and recognise unknotted or ribbon forms.
    Graph { graph: PathBuf },
    /// Builtin example charts.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum BraidCommand {
    /// Prints `true` when the two braid files hold equal braids.
    Eq { a: PathBuf, b: PathBuf },
    /// Prints a builder word.
    Build {
        kind: BuildKind,
        #[arg(long)]
        m: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BuildKind {
    Delta,
    DeltaPrime,
    Theta,
    Garside,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
    Show {
        name: String,
        /// β for `symmetry-spun-beta`, as a braid record (`degree=3; word=1,2`).
        #[arg(long)]
        beta: Option<String>,
        /// p for `torus-2p`.
        #[arg(long, allow_hyphen_values = true, default_value_t = catalog::DEFAULT_TORUS_P)]
        p: i64,
    },
}

/// A failure that ends the command, with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_FAILURE,
            message: message.into(),
        }
    }

    fn parse(source: &str, e: ParseError) -> Failure {
        Failure {
            code: EXIT_PARSE,
            message: format!("{source}:{e}"),
        }
    }
}

impl From<tckit_core::Error> for Failure {
    fn from(e: tckit_core::Error) -> Failure {
        match e {
            tckit_core::Error::Parse(p) => Failure::parse("<input>", p),
            other => Failure::domain(other.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::domain(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::domain(format!("cannot read {}: {e}", path.display())))
}

fn parsed<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, ParseError>) -> Result<T, Failure> {
    let text = read_input(path)?;
    parse(&text).map_err(|e| Failure::parse(&path.display().to_string(), e))
}

fn load_chart(path: &Path) -> Result<TorusCoveringChart, Failure> {
    let (a, b) = parsed(path, format::parse_chart)?;
    Ok(TorusCoveringChart::new(a, b)?)
}

fn search_bound() -> Result<u32, Failure> {
    match std::env::var(SEARCH_BOUND_VAR) {
        Err(_) => Ok(DEFAULT_SEARCH_BOUND),
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: EXIT_PARSE,
            message: format!("{SEARCH_BOUND_VAR}: expected a non-negative integer, found `{v}`"),
        }),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::domain(format!("write failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    macro_rules! say {
        ($($arg:tt)*) => { write!(out, $($arg)*).map_err(io_failure)? };
    }
    match command {
        Command::Braid {
            command: BraidCommand::Eq { a, b },
        } => {
            let u = parsed(&a, format::parse_braid)?;
            let v = parsed(&b, format::parse_braid)?;
            say!("{}\n", is_equal(&u, &v)?);
        }
        Command::Braid {
            command: BraidCommand::Build { kind, m },
        } => {
            if m == 0 {
                return Err(tckit_core::Error::ZeroDegree.into());
            }
            let w: BraidWord = match kind {
                BuildKind::Delta => build_delta(m, false),
                BuildKind::DeltaPrime => build_delta(m, true),
                BuildKind::Theta => build_theta(m),
                BuildKind::Garside => garside_delta(m),
            };
            say!("{}", format::emit_braid(&w));
        }
        Command::Compile { chart, output } => {
            let compiled = compile(&load_chart(&chart)?)?;
            let text = format::emit_movie(&compiled.movie, &compiled.blocks);
            match output {
                Some(path) if path != Path::new("-") => fs::write(&path, text)
                    .map_err(|e| Failure::domain(format!("cannot write {}: {e}", path.display())))?,
                _ => say!("{text}"),
            }
        }
        Command::Validate { movie } => {
            let file = parsed(&movie, format::parse_movie)?;
            let report = validate_movie(&file.movie);
            say!("{report}");
            if !report.ok() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Invariants { movie } => {
            let file = parsed(&movie, format::parse_movie)?;
            let s = analyze(&file.movie)?;
            let genus: Vec<String> = s.genus_list().iter().map(|g| g.to_string()).collect();
            say!("degree={}\n", s.degree);
            say!("blacks={}\n", s.black_vertices);
            say!("chi={}\n", s.euler_characteristic);
            say!("components={}\n", s.components.len());
            say!("genus=[{}]\n", genus.join(","));
            for c in &s.components {
                let sheets: Vec<String> = c.sheets.iter().map(|x| x.to_string()).collect();
                say!("component={} chi={} genus={}\n", sheets.join(","), c.chi, c.genus);
            }
        }
        Command::Classify { chart } => {
            let t = load_chart(&chart)?;
            let c = classify(&t, search_bound()?);
            say!("{c}");
            if c.kind == Kind::Unknown {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::BraidIndex { chart } => {
            say!("{}", braid_index_report(&load_chart(&chart)?));
        }
        Command::VerifySteps { m, b } => {
            if m == 0 {
                return Err(tckit_core::Error::ZeroDegree.into());
            }
            let b = format::parse_word_list(m, &b).map_err(|e| Failure::parse("--b", e))?;
            let report = verify_theorem_steps(&b, m);
            say!("{report}");
            if !report.ok() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Graph { graph } => {
            let g = parsed(&graph, format::parse_graph)?;
            let report = validate_chart_graph(&g);
            say!("{report}");
            say!("kind={:?}\n", recognize_syntactic(&g));
            if !report.ok() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Catalog {
            command: CatalogCommand::List,
        } => {
            for e in catalog::all(&catalog::Params::default()) {
                say!("{}\tdegree={}\t{}\n", e.name, e.chart.degree(), e.provenance);
            }
        }
        Command::Catalog {
            command: CatalogCommand::Show { name, beta, p },
        } => {
            let beta = beta
                .map(|text| format::parse_braid(&text).map_err(|e| Failure::parse("--beta", e)))
                .transpose()?;
            let params = catalog::Params { beta, p };
            let entry = catalog::entry(&name, &params).ok_or_else(|| {
                Failure::domain(format!("unknown catalog entry `{name}` (known: {})", catalog::NAMES.join(", ")))
            })??;
            say!("{}", format::emit_chart(&entry.chart));
        }
    }
    Ok(EXIT_OK)
}

/// Runs `tckit` with `args` (including the program name) and returns the
/// exit code: 0 on success, 1 on failed checks and domain errors, 2 on
/// malformed input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
