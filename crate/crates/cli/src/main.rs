use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use octolie::albert::{f4_actions, trace_zero_action, trace_zero_label, Language, TRACE_ZERO_DIM};
use octolie::algebra::{build_table, Algebra, AlgebraSpec};
use octolie::export::{from_json, to_csv, to_json};
use octolie::octonion::{make_table, AlgebraKind, Alphabet};
use octolie::so8::so8_label;
use octolie::table::StructureConstants;
use octolie::verify::{ad_matrices, killing, run_checks, Check, ProbeOptions};

const THREADS_VAR: &str = "OCTOLIE_THREADS";

#[derive(Parser)]
#[command(name = "octolie", version, about = "Exact octonionic constructions of so(8), so(9), so(16), f4 and e8")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Compact,
    Split,
}

impl From<Kind> for AlgebraKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Compact => AlgebraKind::Compact,
            Kind::Split => AlgebraKind::Split,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    So8,
    So9,
    So16,
    F4,
    E8,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::So8 => Algebra::So8,
            AlgebraArg::So9 => Algebra::So9,
            AlgebraArg::So16 => Algebra::So16,
            AlgebraArg::F4 => Algebra::F4,
            AlgebraArg::E8 => Algebra::E8,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rep {
    Albert,
}

#[derive(clap::Args)]
struct AlgebraArgs {
    #[arg(long, value_enum)]
    algebra: AlgebraArg,
    /// Kind of the first (or only) octonion factor.
    #[arg(long, value_enum)]
    k: Kind,
    /// Kind of the second factor (so16 and e8 only).
    #[arg(long, value_enum)]
    l: Option<Kind>,
}

impl AlgebraArgs {
    fn spec(&self) -> Result<AlgebraSpec, Failure> {
        AlgebraSpec::new(self.algebra.into(), self.k.into(), self.l.map(Into::into)).map_err(Failure::usage)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the octonion multiplication table as text and JSON.
    Table {
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Print the E- and F-language so(8) elements in the D language.
    Triality {
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Build a structure-constant table.
    Build {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Emit the traceless Albert action matrices instead (f4 only).
        #[arg(long, value_enum)]
        rep: Option<Rep>,
    },
    /// Print one bracket as exact rationals.
    Bracket {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Verify a table file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated list of antisym, jacobi, triples, killing, invariance, rank.
        #[arg(long, value_delimiter = ',', default_value = "antisym,jacobi,killing,invariance,rank")]
        checks: Vec<String>,
        /// Add the explicit triple-loop Jacobi check.
        #[arg(long)]
        triples: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Print the Killing form inertia and real-form name of a table file.
    Killing {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also print the Killing matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Re-serialize a table file.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error message paired with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure { code: 2, message: e.to_string() }
    }

    fn verification(message: String) -> Self {
        Failure { code: 1, message }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(Failure::usage)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(Failure::usage),
    }
}

fn load(path: &Path) -> Result<StructureConstants, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn table_text(kind: AlgebraKind) -> String {
    let t = make_table(kind);
    let names: Vec<String> = (0..8).map(|a| format!("{:?}", Alphabet::K.name(a))).collect();
    let rows: Vec<String> = t
        .signed_indices()
        .iter()
        .map(|r| format!("[{}]", r.map(|x| x.to_string()).join(",")))
        .collect();
    format!(
        "{}{{\"kind\":\"{}\",\"units\":[{}],\"products\":[{}]}}\n",
        t.render(Alphabet::K),
        kind,
        names.join(","),
        rows.join(",")
    )
}

fn triality_text(kind: AlgebraKind) -> Result<String, Failure> {
    let spec = AlgebraSpec::new(Algebra::F4, kind, None).map_err(Failure::usage)?;
    let labels = spec.labels();
    let mut out = String::new();
    for lang in [Language::E, Language::F] {
        for i in 0..octolie::so8::SO8_DIM {
            let name = format!("{}:{}", lang.letter(), so8_label(i, Alphabet::K));
            let v = spec.parse_element(&name).map_err(Failure::usage)?;
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| format!("{c} {}", labels[j]))
                .collect();
            out.push_str(&format!("{name} = {}\n", terms.join(" + ")));
        }
    }
    Ok(out)
}

fn albert_text(kind: AlgebraKind, labels: &[String]) -> String {
    let coords: Vec<String> = (0..TRACE_ZERO_DIM).map(|i| format!("{:?}", trace_zero_label(i))).collect();
    let mut out = format!(
        "{{\"kind\":\"{kind}\",\"dim\":{TRACE_ZERO_DIM},\"coordinates\":[{}],\"actions\":[",
        coords.join(",")
    );
    for (n, (m, label)) in f4_actions(kind).into_iter().zip(labels).enumerate() {
        let a = trace_zero_action(m, kind);
        let mut entries = Vec::new();
        for r in 0..TRACE_ZERO_DIM {
            for c in 0..TRACE_ZERO_DIM {
                let v = a.get(r, c);
                if !v.is_zero() {
                    entries.push(format!("[{r},{c},{},{}]", v.numer(), v.denom()));
                }
            }
        }
        if n > 0 {
            out.push(',');
        }
        out.push_str(&format!("\n{{\"label\":{label:?},\"entries\":[{}]}}", entries.join(",")));
    }
    out.push_str("\n]}\n");
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table { kind } => emit(None, &table_text(kind.into())),
        Command::Triality { kind } => emit(None, &triality_text(kind.into())?),
        Command::Build {
            algebra,
            out,
            format,
            rep,
        } => {
            let spec = algebra.spec()?;
            if rep.is_some() {
                if spec.algebra != Algebra::F4 {
                    return Err(Failure::usage("--rep albert requires --algebra f4"));
                }
                return emit(out.as_deref(), &albert_text(spec.k, &spec.labels()));
            }
            let start = Instant::now();
            let t = build_table(&spec).map_err(|e| Failure::verification(e.to_string()))?;
            eprintln!("built {} ({} elements) in {:.3}s", spec.algebra, t.dim(), start.elapsed().as_secs_f64());
            let text = match format {
                Format::Json => to_json(&t),
                Format::Csv => to_csv(&t),
            };
            emit(out.as_deref(), &text)
        }
        Command::Bracket { algebra, x, y } => {
            let spec = algebra.spec()?;
            let (vx, vy) = (
                spec.parse_element(&x).map_err(Failure::usage)?,
                spec.parse_element(&y).map_err(Failure::usage)?,
            );
            let r = spec.bracket(&vx, &vy).map_err(|e| Failure::verification(e.to_string()))?;
            let labels = spec.labels();
            let terms: Vec<String> = r
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| format!("{c} {}", labels[j]))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            emit(None, &format!("[{x}, {y}] = {rhs}\n"))
        }
        Command::Verify {
            input,
            checks,
            triples,
            seed,
            samples,
        } => {
            let t = load(&input)?;
            let mut list: Vec<Check> = checks
                .iter()
                .map(|c| c.trim().parse::<Check>().map_err(Failure::usage))
                .collect::<Result<_, _>>()?;
            if triples && !list.contains(&Check::Triples) {
                list.push(Check::Triples);
            }
            let report = run_checks(&t, &list, ProbeOptions { samples, seed });
            eprint!("{}", report.timings());
            emit(None, &format!("{report}\n"))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::verification("verification failed".into()))
            }
        }
        Command::Killing { input, matrix } => {
            let t = load(&input)?;
            let k = killing(&t, &ad_matrices(&t));
            let mut text = format!(
                "inertia {} signature {} form {}\n",
                k.inertia,
                k.inertia.signature(),
                k.form_name.unwrap_or("unknown")
            );
            if matrix {
                for r in 0..t.dim() {
                    let row: Vec<String> = k.matrix.row(r).iter().map(ToString::to_string).collect();
                    text.push_str(&row.join(" "));
                    text.push('\n');
                }
            }
            emit(None, &text)?;
            if k.inertia.zero != 0 {
                return Err(Failure::verification("not semisimple".into()));
            }
            Ok(())
        }
        Command::Export { input, format, out } => {
            let t = load(&input)?;
            let text = match format {
                Format::Json => to_json(&t),
                Format::Csv => to_csv(&t),
            };
            emit(out.as_deref(), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
