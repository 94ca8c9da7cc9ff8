use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use ncseries::hilbert::{
    oracle_module_hilbert_function, orbit_of, series_of_module, Backend, ModuleSpec, SeriesResult,
};
use ncseries::orbit::{OrbitReport, DEFAULT_MAX_STATES};
use ncseries::render::{format_growth, format_rational, rational_json};
use ncseries::specfile::parse_spec;
use ncseries::{Error, RationalFunction};

#[derive(Parser)]
#[command(
    name = "ncseries",
    version,
    about = "Hilbert series of monomial right modules over free associative algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Spec file describing the ideal or module.
    file: PathBuf,
    /// Abort when an orbit grows beyond this many states.
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    max_states: usize,
    /// Orbit state representation.
    #[arg(long, default_value = "auto", value_parser = parse_backend)]
    backend: Backend,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print HS, HS_a, orbit size and growth.
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Hilbert function and its partial sums up to a degree.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10)]
        degree: usize,
    },
    /// Print the orbit: states, transitions, adjacency matrix and constants.
    Orbit {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export the orbit automaton in Graphviz DOT format.
    Dfa {
        #[command(flatten)]
        common: Common,
        /// Output path; stdout when omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Module component to export (1-based).
        #[arg(long, default_value_t = 1)]
        component: usize,
    },
    /// Compare the series expansion against brute-force word counts.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Solve an orbit previously written by `orbit --format json`.
    Solve {
        /// Orbit JSON file.
        file: PathBuf,
    },
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse()
}

/// Orbit JSON document: one entry per module component.
#[derive(Serialize, Deserialize)]
struct OrbitDocument {
    components: Vec<ComponentOrbit>,
}

#[derive(Serialize, Deserialize)]
struct ComponentOrbit {
    backend: String,
    #[serde(flatten)]
    orbit: OrbitReport,
}

enum Failure {
    Lib(Error),
    Other(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))
}

fn load(common: &Common) -> Result<ModuleSpec, Failure> {
    Ok(parse_spec(&read(&common.file)?)?.into_module())
}

fn compute(common: &Common) -> Result<(ModuleSpec, SeriesResult), Failure> {
    let spec = load(common)?;
    let result = series_of_module(&spec, common.backend, common.max_states)?;
    Ok((spec, result))
}

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn series_text(result: &SeriesResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "HS = {}", format_rational(&result.series));
    let _ = writeln!(out, "HS_a = {}", format_rational(&result.affine));
    if result.orbit_sizes.len() == 1 {
        let _ = writeln!(out, "orbit = {}", result.orbit_sizes[0]);
    } else {
        let parts: Vec<String> = result.orbit_sizes.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "orbit = {} ({})", result.char_poly_degree(), parts.join(" + "));
    }
    let _ = writeln!(out, "backend = {}", list(&result.backends));
    let _ = writeln!(out, "growth = {}", format_growth(&result.growth));
    out
}

fn cmd_series(common: &Common, format: Format) -> Result<String, Failure> {
    let (_, result) = compute(common)?;
    Ok(match format {
        Format::Text => series_text(&result),
        Format::Json => {
            let value = json!({
                "series": rational_json(&result.series),
                "affine": rational_json(&result.affine),
                "orbit_sizes": result.orbit_sizes,
                "backends": result.backends,
                "growth": result.growth,
                "minimal": result.minimal,
            });
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
    })
}

fn expansion_table(series: &RationalFunction, degree: usize) -> Result<String, Failure> {
    let hf = series.expand(degree)?;
    let mut out = String::from("d\tHF(d)\tHF_a(d)\n");
    let mut total = BigInt::from(0);
    for (d, c) in hf.iter().enumerate() {
        total += c;
        let _ = writeln!(out, "{d}\t{c}\t{total}");
    }
    Ok(out)
}

fn cmd_expand(common: &Common, degree: usize) -> Result<String, Failure> {
    let (_, result) = compute(common)?;
    expansion_table(&result.series, degree)
}

fn orbit_document(spec: &ModuleSpec, common: &Common) -> Result<OrbitDocument, Failure> {
    let components = spec
        .components
        .iter()
        .map(|c| {
            let computed = orbit_of(c, common.backend, common.max_states)?;
            let labels = computed.orbit.states().to_vec();
            Ok(ComponentOrbit {
                backend: computed.backend.to_string(),
                orbit: computed.orbit.report(&c.alphabet, labels),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(OrbitDocument { components })
}

fn orbit_text(doc: &OrbitDocument) -> String {
    let mut out = String::new();
    for (i, c) in doc.components.iter().enumerate() {
        let r = &c.orbit;
        if doc.components.len() > 1 {
            let _ = writeln!(out, "component {}", i + 1);
        }
        let _ = writeln!(out, "orbit = {} (backend {})", r.states.len(), c.backend);
        let _ = writeln!(out, "states:");
        for (k, label) in r.states.iter().enumerate() {
            let moves: Vec<String> = r
                .alphabet
                .iter()
                .zip(&r.transitions[k])
                .map(|(x, l)| format!("{x}->{l}"))
                .collect();
            let _ = writeln!(out, "  {k}: {label}  [{}]", moves.join(" "));
        }
        let _ = writeln!(out, "adjacency:");
        for row in &r.adjacency {
            let _ = writeln!(out, "  {}", list(row));
        }
        let _ = writeln!(out, "constants = ({})", list(&r.constants));
        match r.unit_index {
            Some(u) => {
                let _ = writeln!(out, "unit = {u}");
            }
            None => {
                let _ = writeln!(out, "unit = none");
            }
        }
    }
    out
}

fn cmd_orbit(common: &Common, format: Format) -> Result<String, Failure> {
    let spec = load(common)?;
    let doc = orbit_document(&spec, common)?;
    Ok(match format {
        Format::Text => orbit_text(&doc),
        Format::Json => serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
    })
}

fn cmd_dfa(common: &Common, dot: Option<&Path>, component: usize) -> Result<String, Failure> {
    let spec = load(common)?;
    let Some(c) = component.checked_sub(1).and_then(|i| spec.components.get(i)) else {
        return Err(Failure::Other(format!(
            "component {component} out of range (rank {})",
            spec.rank()
        )));
    };
    let computed = orbit_of(c, common.backend, common.max_states)?;
    let text = computed.orbit.to_dfa().to_dot(&c.alphabet);
    match dot {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_check(common: &Common, degree: usize) -> Result<String, Failure> {
    let (spec, result) = compute(common)?;
    let oracle = oracle_module_hilbert_function(&spec, degree)?;
    let series = result.series.expand(degree)?;
    let mut out = String::new();
    let mut matched = 0;
    for (d, (s, o)) in series.iter().zip(&oracle).enumerate() {
        if *s == BigInt::from(*o) {
            matched += 1;
        } else {
            let _ = writeln!(out, "degree {d}: series {s}, brute force {o}");
        }
    }
    let total = degree + 1;
    if matched == total {
        let _ = writeln!(out, "OK: {matched}/{total} degrees match");
        Ok(out)
    } else {
        let _ = writeln!(out, "MISMATCH: {matched}/{total} degrees match");
        Err(Failure::Mismatch(out))
    }
}

fn cmd_solve(path: &Path) -> Result<String, Failure> {
    let doc: OrbitDocument = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
    if doc.components.is_empty() {
        return Err(Failure::Other("orbit document has no components".into()));
    }
    let mut series = RationalFunction::zero();
    let mut growth = None;
    let mut sizes = Vec::new();
    let mut backends = Vec::new();
    let mut minimal = true;
    for c in &doc.components {
        let orbit = c.orbit.to_orbit()?;
        series = &series + &orbit.series();
        growth = Some(match growth {
            None => orbit.growth(),
            Some(g) => orbit.growth().max(g),
        });
        sizes.push(orbit.len());
        minimal &= orbit.verify_minimality();
        backends.push(c.backend.parse().map_err(Failure::Other)?);
    }
    let result = SeriesResult {
        affine: series.affine(),
        series,
        orbit_sizes: sizes,
        backends,
        growth: growth.expect("at least one component"),
        minimal,
    };
    Ok(series_text(&result))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Series { common, format } => cmd_series(common, *format),
        Command::Expand { common, degree } => cmd_expand(common, *degree),
        Command::Orbit { common, format } => cmd_orbit(common, *format),
        Command::Dfa {
            common,
            dot,
            component,
        } => cmd_dfa(common, dot.as_deref(), *component),
        Command::Check { common, degree } => cmd_check(common, *degree),
        Command::Solve { file } => cmd_solve(file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e @ Error::OrbitBudgetExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Other(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
