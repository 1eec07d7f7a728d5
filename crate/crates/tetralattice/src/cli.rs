//! Command-line interface: `verify`, `compute` and `tasep`.
//!
//! Exit codes: 0 success / all identities hold, 1 an identity failed,
//! 2 usage or input error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{Rational, VarId, DEFAULT_CAP};
use crate::harness::{self, RunOptions};
use crate::pfunc::{
    plain_trace, vacuum_expectation, weighted_trace, OperatorWord, TraceKind, TraceWeights,
};
use crate::schubert::{schubert_poly, Permutation};
use crate::symfun::{kostka, schur_bialternant, Partition};
use crate::tasep::{
    closed_form_config, steady_closed_form, steady_state_trace, steady_state_vector, write_csv,
    TasepConfig, TasepSector,
};
use crate::vertexmodel::Model;

/// Exit code: success.
pub const EXIT_OK: i32 = 0;
/// Exit code: an identity failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code: usage or input error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tetra",
    version,
    about = "Exact operator-valued vertex models: identity verification, partition functions, TASEP"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run registry entries and report pass/fail per identity.
    Verify {
        /// `all`, a tag (q0, q0-only, generic, schubert, schubert-suite, tasep, symfun, conjectures), an entry name, or a comma list.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Sampling seed for point evaluations and random inputs.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON report to this file (`-` for stdout).
        #[arg(long)]
        json: Option<String>,
        /// Flip the sign of the generic model's `-q k` vertex (mutation test).
        #[arg(long)]
        mutate: bool,
        /// Include per-entry runtimes (makes the report run-dependent).
        #[arg(long)]
        timings: bool,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// List the registry instead of running it.
        #[arg(long)]
        list: bool,
    },
    /// Compute a single quantity.
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Exact stationary distribution of the multispecies TASEP.
    Tasep {
        /// Number of species classes `n` (particles labelled 0..=n).
        #[arg(long)]
        species: usize,
        /// Number of sites `L`.
        #[arg(long)]
        sites: usize,
        /// Multiplicities `m_0,…,m_n`.
        #[arg(long, value_delimiter = ',')]
        sector: Vec<usize>,
        /// Solver.
        #[arg(long, value_enum, default_value_t = TasepMethod::Kernel)]
        method: TasepMethod,
        /// A single configuration, as digits (`30021`) or a comma list.
        #[arg(long)]
        config: Option<String>,
        /// Write the whole sector vector as CSV to this file (`-` for stdout).
        #[arg(long)]
        csv: Option<String>,
        /// Largest occupation cutoff for the trace method.
        #[arg(long, default_value_t = 8)]
        m_max: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ComputeCmd {
    /// Vacuum expectation `<vac| word |vac>`.
    Vev(WordArgs),
    /// Plain trace of a q=0 word with stabilization detection.
    Trace {
        #[command(flatten)]
        word: WordArgs,
        /// First cutoff at which stabilization is tested.
        #[arg(long, default_value_t = 1)]
        m_start: u32,
        /// Largest cutoff tried.
        #[arg(long, default_value_t = 8)]
        m_max: u32,
    },
    /// Weighted trace as a truncated series in per-site weights.
    Wtrace {
        /// Operator word, e.g. `X(n=3,i=3,z=z1) X(n=3,i=1,z=w1)`.
        #[arg(long)]
        word: String,
        /// Vertex model for X factors.
        #[arg(long, value_enum, default_value_t = ModelArg::Generic)]
        model: ModelArg,
        /// Trace type.
        #[arg(long, value_enum, default_value_t = Kind::A)]
        kind: Kind,
        /// Degree cap per site in its (t, Q) group.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: i32,
    },
    /// Schur polynomial by the bialternant formula.
    Schur {
        /// Partition, e.g. `2,1`.
        #[arg(long, value_delimiter = ',')]
        shape: Vec<u32>,
        /// Number of variables.
        #[arg(long)]
        vars: usize,
    },
    /// (Modified) Schubert polynomial.
    Schubert {
        /// One-line permutation, e.g. `2,3,1`.
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
        /// Use the modified divided differences.
        #[arg(long)]
        modified: bool,
    },
    /// Kostka number by tableau counting.
    Kostka {
        /// Partition `λ`.
        #[arg(long, value_delimiter = ',')]
        shape: Vec<u32>,
        /// Content `α`.
        #[arg(long, value_delimiter = ',')]
        content: Vec<u32>,
    },
}

#[derive(clap::Args, Debug)]
struct WordArgs {
    /// Operator word, e.g. `X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)`.
    #[arg(long)]
    word: String,
    /// Vertex model for X factors.
    #[arg(long, value_enum, default_value_t = ModelArg::Q0)]
    model: ModelArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModelArg {
    Q0,
    Generic,
    GenericMutated,
}

impl ModelArg {
    fn model(self) -> Model {
        match self {
            ModelArg::Q0 => Model::q0(),
            ModelArg::Generic => Model::generic(),
            ModelArg::GenericMutated => Model::generic_mutated(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModelArg::Q0 => "q0",
            ModelArg::Generic => "generic",
            ModelArg::GenericMutated => "generic-mutated",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    A,
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TasepMethod {
    Kernel,
    Trace,
    Closed,
}

impl TasepMethod {
    fn name(self) -> &'static str {
        match self {
            TasepMethod::Kernel => "kernel",
            TasepMethod::Trace => "trace",
            TasepMethod::Closed => "closed",
        }
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut stdout = std::io::stdout().lock();
    match execute(cli.command, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Parse(format!("write failed: {e}")))
}

fn write_target(path: &str, text: &str, out: &mut dyn Write) -> Result<()> {
    if path == "-" {
        emit(out, text)
    } else {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    harness::prime_variables();
    match cmd {
        Command::Verify {
            suite,
            seed,
            json,
            mutate,
            timings,
            threads,
            list,
        } => {
            if list {
                for e in harness::select(&suite)? {
                    emit(
                        out,
                        &format!(
                            "{:<16} [{}] {:?}/{:?}  {}  — grid: {}",
                            e.name,
                            e.tags.join(","),
                            e.class,
                            e.mode,
                            e.statement,
                            e.grid
                        ),
                    )?;
                }
                return Ok(EXIT_OK);
            }
            let report = harness::run_suite(
                &suite,
                &RunOptions {
                    seed,
                    mutated: mutate,
                    threads,
                },
            )?;
            let text = report.render_text(timings);
            match json.as_deref() {
                Some("-") => emit(
                    out,
                    &(if timings {
                        report.with_timings()
                    } else {
                        report.clone()
                    })
                    .to_json(),
                )?,
                Some(path) => {
                    write_target(
                        path,
                        &(if timings {
                            report.with_timings()
                        } else {
                            report.clone()
                        })
                        .to_json(),
                        out,
                    )?;
                    emit(out, text.trim_end())?;
                }
                None => emit(out, text.trim_end())?,
            }
            Ok(if report.ok() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Compute { what } => {
            emit(out, &pretty(&compute(what)?))?;
            Ok(EXIT_OK)
        }
        Command::Tasep {
            species,
            sites,
            sector,
            method,
            config,
            csv,
            m_max,
        } => {
            let sector = TasepSector::new(sector)?;
            if sector.species() != species || sector.sites() != sites {
                return Err(Error::Incompatible(format!(
                    "sector {:?} has {} species and {} sites, expected {species} and {sites}",
                    sector.multiplicities(),
                    sector.species(),
                    sector.sites()
                )));
            }
            let config = config
                .map(|c| TasepConfig::parse(&c, species))
                .transpose()?;
            if let Some(path) = csv {
                let v = sector_vector(&sector, method, m_max)?;
                let mut buf = Vec::new();
                write_csv(&v, &mut buf)?;
                let text = String::from_utf8(buf).expect("csv is utf-8");
                write_target(&path, text.trim_end(), out)?;
                if path == "-" {
                    return Ok(EXIT_OK);
                }
            }
            match config {
                Some(c) => {
                    let value = single_value(&sector, method, &c, m_max)?;
                    emit(
                        out,
                        &pretty(
                            &json!({"config": c.to_string(), "value": value.to_string(), "method": method.name()}),
                        ),
                    )?;
                }
                None => {
                    let v = sector_vector(&sector, method, m_max)?;
                    let rows: Vec<serde_json::Value> = v
                        .iter()
                        .map(|(c, x)| json!({"config": c.to_string(), "value": x.to_string()}))
                        .collect();
                    emit(
                        out,
                        &pretty(
                            &json!({"sector": sector.multiplicities(), "method": method.name(), "values": rows}),
                        ),
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn compute(what: ComputeCmd) -> Result<serde_json::Value> {
    Ok(match what {
        ComputeCmd::Vev(w) => {
            let word = OperatorWord::parse(&w.word, w.model.model())?;
            let v = vacuum_expectation(&word)?;
            json!({"word": word.to_string(), "model": w.model.name(), "value": v.to_canonical(), "cutoff": crate::pfunc::auto_cutoff(word.factors.len())})
        }
        ComputeCmd::Trace {
            word: w,
            m_start,
            m_max,
        } => {
            let word = OperatorWord::parse(&w.word, w.model.model())?;
            let t = plain_trace(&word, m_start, m_max)?;
            json!({"word": word.to_string(), "model": w.model.name(), "value": t.value.to_canonical(), "cutoff": m_max, "stabilized_at": t.stabilized_at})
        }
        ComputeCmd::Wtrace {
            word,
            model,
            kind,
            cap,
        } => {
            let word = OperatorWord::parse(&word, model.model())?;
            let n = word_rank(&word)?;
            let weights = TraceWeights::standard(
                n,
                if kind == Kind::A {
                    TraceKind::A
                } else {
                    TraceKind::B
                },
            );
            let s = weighted_trace(&word, &weights, cap)?;
            json!({"word": word.to_string(), "model": model.name(), "kind": format!("{kind:?}"), "value": s.poly().to_canonical(), "cutoff": cap})
        }
        ComputeCmd::Schur { shape, vars } => {
            let lambda = Partition::new(shape)?;
            let ids: Vec<VarId> = (1..=vars).map(|k| VarId::indexed("z", k)).collect();
            json!({"shape": lambda.parts(), "vars": vars, "value": schur_bialternant(&lambda, &ids)?.to_canonical()})
        }
        ComputeCmd::Schubert { perm, modified } => {
            let w = Permutation::new(perm)?;
            json!({"perm": w.one_line(), "modified": modified, "value": schubert_poly(&w, modified).to_canonical()})
        }
        ComputeCmd::Kostka { shape, content } => {
            let lambda = Partition::new(shape)?;
            json!({"shape": lambda.parts(), "content": content, "value": kostka(&lambda, &content)})
        }
    })
}

fn word_rank(word: &OperatorWord) -> Result<usize> {
    use crate::pfunc::OpSpec;
    match word.factors.first() {
        Some(OpSpec::X { n, .. }) | Some(OpSpec::Xij { n, .. }) => Ok(*n),
        _ => Err(Error::Incompatible("weighted traces need X factors".into())),
    }
}

fn sector_vector(
    sector: &TasepSector,
    method: TasepMethod,
    m_max: u32,
) -> Result<BTreeMap<TasepConfig, Rational>> {
    match method {
        TasepMethod::Kernel => steady_state_vector(sector),
        TasepMethod::Trace => sector
            .configurations()
            .into_iter()
            .map(|c| {
                Ok((
                    c.clone(),
                    steady_state_trace(sector.species(), sector.sites(), sector, &c, m_max)?,
                ))
            })
            .collect(),
        TasepMethod::Closed => Err(Error::Incompatible(
            "the closed form covers single block configurations; pass --config".into(),
        )),
    }
}

fn single_value(
    sector: &TasepSector,
    method: TasepMethod,
    config: &TasepConfig,
    m_max: u32,
) -> Result<Rational> {
    let n = sector.species();
    match method {
        TasepMethod::Kernel => steady_state_vector(sector)?
            .get(config)
            .cloned()
            .ok_or_else(|| Error::Incompatible(format!("{config} is not in the sector"))),
        TasepMethod::Trace => steady_state_trace(n, sector.sites(), sector, config, m_max),
        TasepMethod::Closed => {
            for k in 0..=n {
                for j in 0..=k {
                    if closed_form_config(n, j, k, sector.multiplicities())? == *config {
                        return steady_closed_form(n, j, k, sector.multiplicities());
                    }
                }
            }
            Err(Error::Incompatible(format!(
                "{config} is not a block configuration covered by the closed form"
            )))
        }
    }
}
