use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use liecoh::catalog;
use liecoh::cechain::{ce_chain_complex, ce_cochain_complex, ChainComplex};
use liecoh::io::{parse_algebra_file, parse_module, AlgebraFile};
use liecoh::leibniz::{
    leibniz_chain_complex, leibniz_cochain_complex, LeibnizComplexSpec, DEFAULT_MAX_DEGREE, DEFAULT_RESOURCE_CAP,
};
use liecoh::verify::{self, CheckOptions, CheckResult, HuntConfig, HuntReport, Verdict};
use liecoh::{Error, LieAlgebra, Representation};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "liecoh", version, about = "Exact Lie algebra and Leibniz (co)homology")]
struct Cli {
    /// Emit machine-readable JSON (schema 1) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the Jacobi identity.
    Validate { file: String },
    /// Structural report: solvable, nilpotent, semisimple, radicals, ...
    Report { file: String },
    /// Chevalley-Eilenberg Betti numbers.
    Cohomology {
        file: String,
        /// trivial, adjoint, or a module file.
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long)]
        homology: bool,
    },
    /// Leibniz Betti numbers up to a maximal degree.
    Leibniz {
        file: String,
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long)]
        homology: bool,
        /// Largest differential (rows x cols) allowed.
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        cap: u128,
    },
    /// Run one check by id, or `all`.
    Check {
        id: String,
        file: String,
        #[arg(long, default_value_t = 3)]
        pmax: usize,
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        cap: u128,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Run checks over a seeded family of random algebras.
    Hunt {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',', required = true)]
        check: Vec<String>,
        #[arg(long, default_value_t = 3)]
        pmax: usize,
        #[arg(long, default_value_t = DEFAULT_RESOURCE_CAP)]
        cap: u128,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show { name: String },
    Export { name: String },
}

enum CliError {
    Engine(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Engine(Error::CapExceeded { .. }) => "cap_exceeded",
            CliError::Engine(Error::Parse { .. } | Error::Rational(_)) => "parse",
            CliError::Engine(Error::Jacobi(_)) => "jacobi",
            CliError::Engine(Error::NotRepresentation(_)) => "not_representation",
            CliError::Engine(_) => "invalid_input",
            CliError::Input(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Engine(e) => e.to_string(),
            CliError::Input(m) => m.clone(),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

struct Loaded {
    algebra: LieAlgebra,
    metadata: Vec<String>,
}

fn load(file: &str) -> Result<Loaded, CliError> {
    if let Some(name) = file.strip_prefix("catalog:") {
        let entry = catalog::make_named(name)?;
        return Ok(Loaded {
            algebra: entry.algebra,
            metadata: entry.metadata,
        });
    }
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Input(format!("{file}: {e}")))?;
    let parsed: AlgebraFile = parse_algebra_file(&text)?;
    Ok(Loaded {
        algebra: parsed.to_algebra()?,
        metadata: parsed.metadata,
    })
}

fn load_module(spec: &str, g: &LieAlgebra) -> Result<Representation, CliError> {
    match spec {
        "trivial" => Ok(Representation::trivial(g, 1)),
        "adjoint" => Ok(Representation::adjoint(g)),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            Ok(parse_module(&text, g)?)
        }
    }
}

fn betti_table(title: &str, complex: &ChainComplex, betti: &[usize], truncated_top: bool) -> String {
    let mut s = format!("{title}\n  {:>3}  {:>10}  {:>6}\n", "p", "dim", "betti");
    for (p, (d, b)) in complex.dims().iter().zip(betti).enumerate() {
        let mark = if truncated_top && p + 1 == betti.len() { "  (upper bound: truncated)" } else { "" };
        let _ = writeln!(s, "  {p:>3}  {d:>10}  {b:>6}{mark}");
    }
    let _ = write!(s, "euler characteristic: {}", complex.euler_characteristic());
    s
}

fn complex_json(command: &str, g: &LieAlgebra, module: &str, homology: bool, complex: &ChainComplex) -> Value {
    let result = complex.cohomology(false);
    json!({
        "schema": SCHEMA,
        "command": command,
        "algebra": g.name(),
        "dim": g.dim(),
        "module": module,
        "kind": if homology { "homology" } else { "cohomology" },
        "complex_dims": complex.dims(),
        "betti": result.betti,
        "truncated_top": result.truncated_top,
        "euler_characteristic": complex.euler_characteristic(),
    })
}

fn result_line(r: &CheckResult) -> String {
    let verdict = match r.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Informational => "INFO",
    };
    let module = r.module.as_deref().map(|m| format!(" [{m}]")).unwrap_or_default();
    let mut s = format!("{verdict:<5} {}{module}", r.check_id);
    if !r.lhs_dims.is_empty() || !r.rhs_dims.is_empty() {
        let _ = write!(s, "  lhs {:?}  rhs {:?}", r.lhs_dims, r.rhs_dims);
    }
    for n in &r.notes {
        let _ = write!(s, "\n        {n}");
    }
    s
}

fn hunt_text(report: &HuntReport) -> String {
    let mut s = format!(
        "hunt {} seed {} count {} checks {}\n  pass {}  informational {}  fail {}",
        report.family,
        report.seed,
        report.count,
        report.checks.join(","),
        report.passes,
        report.informational,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = write!(s, "\n  instance {}: {}", f.index, result_line(&f.result));
        let _ = write!(s, "\n    {}", serde_json::to_string(&f.algebra).expect("serializable"));
    }
    s
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Validate { file } => {
            let l = load(&file)?;
            let g = &l.algebra;
            Ok(Output::ok(
                format!("valid: {} (dimension {})", g.name(), g.dim()),
                json!({"schema": SCHEMA, "command": "validate", "algebra": g.name(), "dim": g.dim(), "valid": true}),
            ))
        }
        Command::Report { file } => {
            let l = load(&file)?;
            let g = &l.algebra;
            let report = g.structure_report();
            let value = serde_json::to_value(&report).expect("serializable");
            let mut text = format!("{} (dimension {})", g.name(), g.dim());
            if let Value::Object(fields) = &value {
                for (k, v) in fields {
                    let _ = write!(text, "\n  {k:<16} {v}");
                }
            }
            if !l.metadata.is_empty() {
                let _ = write!(text, "\n  metadata         {}", l.metadata.join(", "));
            }
            Ok(Output::ok(
                text,
                json!({"schema": SCHEMA, "command": "report", "algebra": g.name(), "report": value, "metadata": l.metadata}),
            ))
        }
        Command::Cohomology { file, module, homology } => {
            let l = load(&file)?;
            let g = &l.algebra;
            let m = load_module(&module, g)?;
            let complex = if homology { ce_chain_complex(g, &m)? } else { ce_cochain_complex(g, &m)? };
            let betti = complex.betti();
            let title = format!("{}({}, {module})", if homology { "H_p" } else { "H^p" }, g.name());
            Ok(Output::ok(
                betti_table(&title, &complex, &betti, false),
                complex_json("cohomology", g, &module, homology, &complex),
            ))
        }
        Command::Leibniz { file, module, max_degree, homology, cap } => {
            let l = load(&file)?;
            let g = &l.algebra;
            let m = load_module(&module, g)?;
            let spec = LeibnizComplexSpec::new(g, &m).with_max_degree(max_degree).with_cap(cap);
            let complex = if homology { leibniz_chain_complex(&spec)? } else { leibniz_cochain_complex(&spec)? };
            let result = complex.cohomology(false);
            let title = format!("{}({}, {module})", if homology { "HL_p" } else { "HL^p" }, g.name());
            let mut value = complex_json("leibniz", g, &module, homology, &complex);
            value["max_degree"] = json!(max_degree);
            Ok(Output::ok(betti_table(&title, &complex, &result.betti, result.truncated_top), value))
        }
        Command::Check { id, file, pmax, cap } => {
            let l = load(&file)?;
            let g = &l.algebra;
            let options = CheckOptions {
                pmax,
                cap,
                ..CheckOptions::from_metadata(&l.metadata)
            };
            let results = if id.eq_ignore_ascii_case("all") {
                verify::run_all(g, &options)?
            } else {
                verify::run_check_lenient(&id, g, &options)?
            };
            let failed = results.iter().filter(|r| r.verdict == Verdict::Fail).count();
            let mut text = format!("{} (dimension {})", g.name(), g.dim());
            for r in &results {
                let _ = write!(text, "\n{}", result_line(r));
            }
            let _ = write!(text, "\n{} checks, {failed} failed", results.len());
            Ok(Output {
                text,
                json: json!({"schema": SCHEMA, "command": "check", "algebra": g.name(), "results": results}),
                code: u8::from(failed > 0),
            })
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => {
                let names = catalog::list();
                Ok(Output::ok(names.join("\n"), json!({"schema": SCHEMA, "command": "catalog list", "names": names})))
            }
            CatalogCommand::Show { name } => {
                let entry = catalog::make_named(&name)?;
                let g = &entry.algebra;
                let mut file = AlgebraFile::from_algebra(g);
                file.metadata = entry.metadata.clone();
                let mut text = format!("{} (dimension {})\n  basis: {}", entry.name, g.dim(), g.basis_names().join(", "));
                for ((i, j), terms) in g.sparse_brackets() {
                    let rhs: Vec<String> = terms
                        .iter()
                        .map(|(k, c)| format!("{c}·{}", g.basis_names()[*k]))
                        .collect();
                    let _ = write!(text, "\n  [{}, {}] = {}", g.basis_names()[i], g.basis_names()[j], rhs.join(" + "));
                }
                if !entry.metadata.is_empty() {
                    let _ = write!(text, "\n  metadata: {}", entry.metadata.join(", "));
                }
                Ok(Output::ok(
                    text,
                    json!({"schema": SCHEMA, "command": "catalog show", "name": entry.name, "algebra": file}),
                ))
            }
            CatalogCommand::Export { name } => {
                let text = catalog::export(&name)?;
                let value: Value = serde_json::from_str(&text).expect("export is valid JSON");
                Ok(Output::ok(text, value))
            }
        },
        Command::Hunt { family, count, seed, check, pmax, cap } => {
            let config = HuntConfig {
                family,
                count,
                seed,
                checks: check,
                options: CheckOptions {
                    pmax,
                    cap,
                    ..CheckOptions::default()
                },
            };
            let report = verify::hunt(&config)?;
            let mut value = serde_json::to_value(&report).expect("serializable");
            value["schema"] = json!(SCHEMA);
            value["command"] = json!("hunt");
            Ok(Output {
                text: hunt_text(&report),
                json: value,
                code: u8::from(!report.failures.is_empty()),
            })
        }
    }
}

/// Writes to stdout, ignoring a closed pipe (e.g. `liecoh catalog list | head`).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli.command) {
        Ok(out) => {
            if as_json {
                emit(&serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if as_json {
                let value = json!({"schema": SCHEMA, "error": {"kind": e.kind(), "message": e.message()}});
                emit(&serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                eprintln!("error: {}", e.message());
            }
            ExitCode::from(e.exit_code())
        }
    }
}
