//! Command-line front end for `stanley-core`.
//!
//! Exit codes: 0 success, 1 mathematical negative, 2 usage or parse error,
//! 3 resource cap.

pub mod corpus;
pub mod json;
pub mod parse;

use std::io::Write;

use clap::{ArgAction, Args, Parser, Subcommand};
use stanley_core::multicomplex::irreducible_decomposition;
use stanley_core::{
    depth_report, facets, hilbert_series, maximal_faces, nice_partition, polarize_ideal, solve_sdepth, transfer,
    verify, Field, MonomialIdeal, SolverOptions,
};
use thiserror::Error;

use crate::corpus::{generate, report_entry, CorpusParams};
use crate::json::*;

pub use parse::parse_ideal;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Core(#[from] stanley_core::Error),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use stanley_core::Error as E;
        match self {
            CliError::Core(e) if e.is_cap() => 3,
            CliError::Core(E::Precondition(_) | E::VerificationFailed(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "stanley", about = "Multicomplexes, depth, Stanley decompositions and polarization of monomial ideals")]
pub struct Cli {
    /// Coefficient field for homology: `q` or `fp:<prime>`
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Comma-separated variable order for inline ideals
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Inline ideal such as "x1^2, x1*x2" or a path ending in .json
    pub ideal: String,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SolverArgs {
    /// Search nodes per target depth
    #[arg(long, default_value_t = stanley_core::sdepth::DEFAULT_NODE_CAP)]
    pub cap_nodes: u64,
    /// Retry with a larger poset bound when a lift fails to verify
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    pub g_bump: bool,
}

impl SolverArgs {
    fn options(self) -> SolverOptions {
        SolverOptions { node_cap: self.cap_nodes, g_bump: self.g_bump }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irredundant irreducible decomposition
    Decompose(IdealArg),
    /// Facets of the multicomplex
    Facets(IdealArg),
    /// Depth, projective dimension, Krull dimension
    Depth(IdealArg),
    /// Stanley depth by exhaustive search, with a certificate
    Sdepth {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Hilbert series of S/I
    Hilbert(IdealArg),
    /// Polarization of the ideal
    Polarize(IdealArg),
    /// A nice partition, if the search finds one
    Partition {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Verify a partition document
    Verify {
        #[arg(long)]
        partition: String,
        /// Depth used for niceness (default: depth of S/I)
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Nice partition of I carried to a nice partition of its polarization
    Transfer {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Seeded random ideals
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: u32,
        #[arg(long, default_value_t = 6)]
        max_gens: usize,
        /// Add sdepth and depth per ideal
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

pub fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("fp:")
        .ok_or_else(|| format!("expected q or fp:<prime>, got {s}"))?
        .parse::<u64>()
        .map_err(|e| e.to_string())?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
}

pub fn load_ideal(src: &str, vars: Option<&[String]>) -> Result<MonomialIdeal, CliError> {
    if src.ends_with(".json") {
        from_json::<IdealJson>(&read_file(src)?)?.to_ideal()
    } else {
        parse_ideal(src, vars)
    }
}

/// Runs one command line (`args[0]` is the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let vars = cli.vars.as_deref();
    let field = cli.field;
    let mut text = String::new();
    let code = match &cli.command {
        Command::Decompose(a) => {
            let ideal = load_ideal(&a.ideal, vars)?;
            let comps = irreducible_decomposition(&ideal)?;
            if cli.json {
                let doc = DecompositionJson {
                    vars: ideal.ring().names().to_vec(),
                    components: comps
                        .iter()
                        .map(|c| c.to_ideal(ideal.ring()).gens().iter().map(|g| g.exponents().to_vec()).collect())
                        .collect(),
                };
                text = to_string(&doc);
            } else {
                for c in &comps {
                    text += &format!("({})\n", c.to_ideal(ideal.ring()));
                }
            }
            0
        }
        Command::Facets(a) => {
            let ideal = load_ideal(&a.ideal, vars)?;
            let fs = facets(&ideal)?;
            if cli.json {
                let doc = FacetsJson {
                    vars: ideal.ring().names().to_vec(),
                    maximal_faces: maximal_faces(&ideal)?.iter().map(face_json).collect(),
                    facets: fs.iter().map(face_json).collect(),
                };
                text = to_string(&doc);
            } else {
                for f in &fs {
                    text += &format!("{f}\n");
                }
            }
            0
        }
        Command::Depth(a) => {
            let ideal = load_ideal(&a.ideal, vars)?;
            let r = depth_report(&ideal, field)?;
            if cli.json {
                text = to_string(&DepthJson::from(&r));
            } else {
                text = format!(
                    "depth {}\nprojective_dimension {}\ndim {}\ncohen_macaulay {}\nfield {field}\n",
                    r.depth, r.projective_dimension, r.dim, r.cohen_macaulay
                );
            }
            0
        }
        Command::Sdepth { ideal, solver } => {
            let ideal = load_ideal(&ideal.ideal, vars)?;
            let depth = depth_report(&ideal, field)?.depth;
            let r = solve_sdepth(&ideal, &solver.options())?;
            let verified = verify(&r.lifted, r.sdepth).all_ok();
            if cli.json {
                text = to_string(&SolverCertificate {
                    sdepth: r.sdepth,
                    depth,
                    partition: (&r.lifted).into(),
                    verified,
                    field_char: field.characteristic(),
                });
            } else {
                let note = if r.exact { "" } else { " (node cap reached; larger values not excluded)" };
                text = format!("sdepth {}{note}\ndepth {depth}\nverified {verified}\n", r.sdepth);
                for iv in &r.lifted.intervals {
                    text += &format!("{iv}\n");
                }
            }
            if r.exact {
                0
            } else {
                3
            }
        }
        Command::Hilbert(a) => {
            let ideal = load_ideal(&a.ideal, vars)?;
            let h = hilbert_series(&ideal)?;
            text = if cli.json { to_string(&SeriesJson::from(&h)) } else { format!("{h}\n") };
            0
        }
        Command::Polarize(a) => {
            let ideal = load_ideal(&a.ideal, vars)?;
            let (pol, map) = polarize_ideal(&ideal)?;
            if cli.json {
                text = to_string(&PolarizeJson { source: (&ideal).into(), ideal: (&pol).into(), n1: map.n1() });
            } else {
                text = format!("{pol}\nn1 {}\n", map.n1());
            }
            0
        }
        Command::Partition { ideal, solver } => {
            let ideal = load_ideal(&ideal.ideal, vars)?;
            let o = nice_partition(&ideal, field, &solver.options())?;
            if cli.json {
                text = to_string(&NiceJson {
                    partition: o.partition.as_ref().map(Into::into),
                    sdepth: o.sdepth,
                    depth: o.depth,
                    exact: o.exact,
                    finding: o.finding.clone(),
                    field_char: o.field_char,
                });
            } else {
                text = format!("sdepth {}\ndepth {}\n", o.sdepth, o.depth);
                match (&o.partition, &o.finding) {
                    (Some(p), _) => p.intervals.iter().for_each(|iv| text += &format!("{iv}\n")),
                    (None, Some(f)) => text += &format!("finding: {f}\n"),
                    (None, None) => {}
                }
            }
            match (&o.partition, o.exact) {
                (Some(_), _) => 0,
                (None, true) => 1,
                (None, false) => 3,
            }
        }
        Command::Verify { partition, depth } => {
            let p = from_json::<PartitionJson>(&read_file(partition)?)?.to_partition()?;
            if let Some(bad) = p.intervals.iter().find(|iv| iv.lo.len() != p.ideal.n() || iv.hi.len() != p.ideal.n()) {
                return Err(stanley_core::Error::DimensionMismatch {
                    expected: p.ideal.n(),
                    found: bad.lo.len().max(bad.hi.len()),
                }
                .into());
            }
            let d = match depth {
                Some(d) => *d,
                None => depth_report(&p.ideal, field)?.depth,
            };
            let r = verify(&p, d);
            if cli.json {
                text = to_string(&VerifyJson::from(&r));
            } else {
                text = format!(
                    "contained {}\ndisjoint {}\ncovers {}\nnice {} (min |infpt| {}, depth {})\n",
                    r.contained, r.disjoint, r.covers, r.nice, r.min_inf, d
                );
                for f in &r.failures {
                    text += &format!("failure: {f}\n");
                }
            }
            if r.all_ok() {
                0
            } else {
                1
            }
        }
        Command::Transfer { ideal, solver } => {
            let ideal = load_ideal(&ideal.ideal, vars)?;
            let t = transfer(&ideal, field, &solver.options())?;
            let pp = &t.polarized;
            let verified = pp.report.all_ok();
            if cli.json {
                text = to_string(&TransferCertificate {
                    ideal: (&t.ideal).into(),
                    polarized_ideal: (&pp.partition.ideal).into(),
                    n1: t.n1(),
                    input_partition: (&t.input_partition).into(),
                    output_partition: (&pp.partition).into(),
                    input_depth: pp.input_depth,
                    output_depth: pp.output_depth,
                    verified,
                    field_char: field.characteristic(),
                });
            } else {
                text = format!(
                    "ideal {}\npolarized {}\nn1 {}\ninput depth {}\noutput depth {}\nverified {verified}\n",
                    t.ideal,
                    pp.partition.ideal,
                    t.n1(),
                    pp.input_depth,
                    pp.output_depth
                );
                for iv in &pp.partition.intervals {
                    text += &format!("{iv}\n");
                }
            }
            if verified {
                0
            } else {
                1
            }
        }
        Command::Corpus { seed, count, max_n, max_exp, max_gens, report, solver } => {
            if *max_n == 0 || *max_exp == 0 || *max_gens == 0 {
                return Err(CliError::Usage("--max-n, --max-exp and --max-gens must be positive".into()));
            }
            let params = CorpusParams { seed: *seed, count: *count, max_n: *max_n, max_exp: *max_exp, max_gens: *max_gens };
            let ideals = generate(&params);
            let entries = if *report {
                let opts = solver.options();
                Some(ideals.iter().map(|i| report_entry(i, field, &opts)).collect::<Result<Vec<_>, _>>()?)
            } else {
                None
            };
            if cli.json {
                text = to_string(&CorpusJson {
                    seed: *seed,
                    ideals: ideals.iter().map(Into::into).collect(),
                    report: entries,
                });
            } else if let Some(entries) = entries {
                for (i, e) in ideals.iter().zip(&entries) {
                    text += &format!(
                        "{i}\tsdepth {}\tdepth {}\t{}\n",
                        e.sdepth,
                        e.depth,
                        if e.sdepth_at_least_depth { "sdepth>=depth" } else { "sdepth<depth" }
                    );
                }
            } else {
                for i in &ideals {
                    text += &format!("{i}\n");
                }
            }
            0
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(code)
}
