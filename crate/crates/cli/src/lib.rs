//! Command-line front end for `linkpat`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use linkpat::meanders::{
    build_meander, classify_meander, intersect_capped, one_segments, reducible_by_segments,
};
use linkpat::order::{closure_capped, cover_c, CoverSet};
use linkpat::patterns::{dim_via_pattern, dim_via_q, enumerate_involutions_capped, pattern_stats};
use linkpat::tableaux::{closure_tableaux, enumerate_tableaux, sigma_of_tableau};
use linkpat::verify::{self, VerifyOptions, VerifyReport};
use linkpat::{Involution, IntersectionReport, Meander, MeanderClass, TwoColumnTableau, DEFAULT_CAP};

pub mod cache;
pub mod input;

pub use input::ParseError;

/// Environment variable naming the poset cache directory.
pub const CACHE_DIR_ENV: &str = "LINKPAT_CACHE_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] linkpat::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "linkpat", version, about = "Borel orbits of square-zero matrices as link patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Number of points
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Number of arcs, or the second-column length of a tableau
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Directory for cached posets
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Largest n allowed for exhaustive enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length, crossings, covered fixed points and dimension
    Dim { involution: String },
    /// List the involutions on --n points (with --k arcs)
    Enum,
    /// Orbits in the closure of an orbit
    Closure { involution: String },
    /// Codimension-one orbits in the boundary, with the moves producing them
    Cover { involution: String },
    /// Hasse diagram of the orbits on --n points
    Poset,
    /// Standard tableaux of shape (n-k, k)*
    Tableaux,
    /// The maximal orbit of a tableau
    SigmaT { tableau: String },
    /// Codimension-one tableaux in the closure of a tableau
    ClosureT { tableau: String },
    /// Meander of two involutions, the first drawn on top
    Meander { top: String, bottom: String },
    /// Components of the intersection of two orbit closures
    Intersect { a: String, b: String },
    /// Exhaustive consistency checks for n up to --n
    Verify {
        /// Smallest n to check
        #[arg(long, default_value_t = 1)]
        from: usize,
    },
}

/// Everything a command needs besides its positional arguments.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub cap: usize,
}

impl From<&Cli> for RunConfig {
    fn from(cli: &Cli) -> Self {
        RunConfig {
            n: cli.n,
            k: cli.k,
            format: cli.format,
            cache_dir: cli.cache_dir.clone(),
            cap: cli.cap,
        }
    }
}

impl RunConfig {
    fn require_n(&self) -> Result<usize, CliError> {
        let n = self.n.ok_or_else(|| CliError::Usage("this command needs --n".into()))?;
        if n == 0 {
            return Err(linkpat::Error::NoPoints.into());
        }
        if n > self.cap {
            return Err(linkpat::Error::ResourceCap { n, cap: self.cap }.into());
        }
        Ok(n)
    }
}

/// Text produced by a command and whether it counts as success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub involution: Involution,
    pub length: usize,
    pub crossings: usize,
    pub fixed_under: usize,
    pub dim_pattern: usize,
    pub dim_q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionList {
    pub n: usize,
    pub k: Option<usize>,
    pub involutions: Vec<Involution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub involution: Involution,
    pub members: Vec<Involution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub involution: Involution,
    pub cover: CoverSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauList {
    pub n: usize,
    pub k: usize,
    pub tableaux: Vec<TwoColumnTableau>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaTReport {
    pub tableau: TwoColumnTableau,
    pub involution: Involution,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTReport {
    pub tableau: TwoColumnTableau,
    pub closure: Vec<TwoColumnTableau>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanderReport {
    pub meander: Meander,
    pub class: MeanderClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectReport {
    pub a: Involution,
    pub b: Involution,
    pub k: Option<usize>,
    pub intersection: IntersectionReport,
    pub meander: MeanderClass,
    /// Loop count when the meander is even.
    pub tl_exponent: Option<usize>,
    pub one_segments: Vec<(usize, usize)>,
    pub reducible_by_segments: bool,
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn no_dot(config: &RunConfig, command: &str) -> Result<(), CliError> {
    if config.format == Format::Dot {
        return Err(CliError::Usage(format!(
            "--format dot is only available for poset and meander, not {command}"
        )));
    }
    Ok(())
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

pub fn run(command: &Command, config: &RunConfig) -> Result<Output, CliError> {
    let cap = config.cap;
    match command {
        Command::Dim { involution } => {
            no_dot(config, "dim")?;
            let sigma = input::parse_involution(involution, config.n)?;
            let stats = pattern_stats(&sigma);
            let report = DimReport {
                length: stats.length,
                crossings: stats.crossings,
                fixed_under: stats.fixed_under,
                dim_pattern: dim_via_pattern(&sigma),
                dim_q: dim_via_q(&sigma),
                involution: sigma,
            };
            if report.dim_pattern != report.dim_q {
                return Err(CliError::Internal(format!(
                    "dimension formulas disagree on {}: {} vs {}",
                    report.involution, report.dim_pattern, report.dim_q
                )));
            }
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => format!(
                    "involution  {}\nlength      {}\ncrossings   {}\nfixed under {}\ndim         {} (pattern) = {} (q)\n",
                    report.involution,
                    report.length,
                    report.crossings,
                    report.fixed_under,
                    report.dim_pattern,
                    report.dim_q
                ),
            };
            Ok(Output::ok(text))
        }
        Command::Enum => {
            no_dot(config, "enum")?;
            let n = config.require_n()?;
            let list = InvolutionList {
                n,
                k: config.k,
                involutions: enumerate_involutions_capped(n, config.k, cap)?,
            };
            let text = match config.format {
                Format::Json => json(&list)?,
                _ => {
                    let mut out = String::new();
                    for sigma in &list.involutions {
                        let _ = writeln!(out, "{:<24} d={}", sigma.to_string(), linkpat::patterns::dim(sigma));
                    }
                    let _ = writeln!(out, "{} involutions", list.involutions.len());
                    out
                }
            };
            Ok(Output::ok(text))
        }
        Command::Closure { involution } => {
            no_dot(config, "closure")?;
            let sigma = input::parse_involution(involution, config.n)?;
            let report = ClosureReport {
                members: closure_capped(&sigma, cap)?,
                involution: sigma,
            };
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => format!("{}{} orbits\n", lines(&report.members), report.members.len()),
            };
            Ok(Output::ok(text))
        }
        Command::Cover { involution } => {
            no_dot(config, "cover")?;
            let sigma = input::parse_involution(involution, config.n)?;
            let report = CoverReport {
                cover: cover_c(&sigma),
                involution: sigma,
            };
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => {
                    let mut out = String::new();
                    for tau in &report.cover.n_moves {
                        let _ = writeln!(out, "{:<24} delete external arc", tau.to_string());
                    }
                    for m in &report.cover.d_moves {
                        let tags: Vec<String> = m
                            .provenance
                            .iter()
                            .map(|t| match t.partner {
                                Some(p) => format!("{:?} {:?} with {:?}", t.kind, t.arc, p),
                                None => format!("{:?} {:?}", t.kind, t.arc),
                            })
                            .collect();
                        let _ = writeln!(out, "{:<24} {}", m.result.to_string(), tags.join("; "));
                    }
                    out
                }
            };
            Ok(Output::ok(text))
        }
        Command::Poset => {
            let n = config.require_n()?;
            let (poset, _) = cache::poset(config.cache_dir.as_deref(), n, config.k, cap)?;
            let text = match config.format {
                Format::Json => poset.to_json() + "\n",
                Format::Dot => poset.to_dot(),
                Format::Table => {
                    let mut out = String::new();
                    for (at, node) in poset.nodes.iter().enumerate() {
                        let children: Vec<String> =
                            poset.children(at).map(|c| poset.nodes[c].involution.to_string()).collect();
                        let _ = writeln!(
                            out,
                            "{:<24} d={:<3} covers {}",
                            node.involution.to_string(),
                            node.dim,
                            children.join(" ")
                        );
                    }
                    let _ = writeln!(out, "{} orbits, {} edges", poset.nodes.len(), poset.edges.len());
                    out
                }
            };
            Ok(Output::ok(text))
        }
        Command::Tableaux => {
            no_dot(config, "tableaux")?;
            let n = config.require_n()?;
            let k = config.k.ok_or_else(|| CliError::Usage("tableaux needs --k".into()))?;
            let list = TableauList {
                n,
                k,
                tableaux: enumerate_tableaux(n, k)?,
            };
            let text = match config.format {
                Format::Json => json(&list)?,
                _ => {
                    let mut out = String::new();
                    for t in &list.tableaux {
                        let _ = writeln!(out, "{:?} / {:?}", t.col1(), t.col2());
                    }
                    let _ = writeln!(out, "{} tableaux", list.tableaux.len());
                    out
                }
            };
            Ok(Output::ok(text))
        }
        Command::SigmaT { tableau } => {
            no_dot(config, "sigma-t")?;
            let t = input::parse_tableau(tableau, config.n)?;
            let sigma = sigma_of_tableau(&t);
            let report = SigmaTReport {
                dim: linkpat::patterns::dim(&sigma),
                involution: sigma,
                tableau: t,
            };
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => format!("{}{}  d={}\n", report.tableau, report.involution, report.dim),
            };
            Ok(Output::ok(text))
        }
        Command::ClosureT { tableau } => {
            no_dot(config, "closure-t")?;
            let t = input::parse_tableau(tableau, config.n)?;
            let report = ClosureTReport {
                closure: closure_tableaux(&t)?,
                tableau: t,
            };
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => {
                    let mut out = String::new();
                    for u in &report.closure {
                        let _ = writeln!(out, "{:?} / {:?}  {}", u.col1(), u.col2(), sigma_of_tableau(u));
                    }
                    out
                }
            };
            Ok(Output::ok(text))
        }
        Command::Meander { top, bottom } => {
            let top = input::parse_involution(top, config.n)?;
            let bottom = input::parse_involution(bottom, config.n)?;
            let meander = build_meander(&top, &bottom)?;
            let report = MeanderReport {
                class: classify_meander(&meander),
                meander,
            };
            let text = match config.format {
                Format::Json => json(&report)?,
                Format::Dot => report.meander.to_dot(),
                Format::Table => format!("{}{}\n", report.meander, describe_class(&report.class)),
            };
            Ok(Output::ok(text))
        }
        Command::Intersect { a, b } => {
            no_dot(config, "intersect")?;
            let a = input::parse_involution(a, config.n)?;
            let b = input::parse_involution(b, config.n)?;
            let intersection = intersect_capped(&a, &b, config.k, cap)?;
            let class = classify_meander(&build_meander(&a, &b)?);
            let report = IntersectReport {
                one_segments: one_segments(&a, &b)?,
                reducible_by_segments: reducible_by_segments(&a, &b)?,
                tl_exponent: class.even.then_some(class.loops),
                meander: class,
                intersection,
                k: config.k,
                a,
                b,
            };
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => describe_intersection(&report),
            };
            Ok(Output::ok(text))
        }
        Command::Verify { from } => {
            no_dot(config, "verify")?;
            let n_max = config.n.unwrap_or(7);
            if n_max > cap {
                return Err(linkpat::Error::ResourceCap { n: n_max, cap }.into());
            }
            let report: VerifyReport = verify::run(&VerifyOptions {
                n_min: *from,
                n_max,
                cap,
                ..VerifyOptions::default()
            })?;
            let text = match config.format {
                Format::Json => json(&report)?,
                _ => report.to_string(),
            };
            Ok(Output {
                text,
                success: report.passed(),
            })
        }
    }
}

fn describe_class(class: &MeanderClass) -> String {
    format!(
        "{} meander: {} loops, {} even intervals, {} odd intervals",
        if class.even { "even" } else { "odd" },
        class.loops,
        class.even_intervals,
        class.odd_intervals
    )
}

fn describe_intersection(report: &IntersectReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "min rank matrix:");
    out.push_str(&report.intersection.min_matrix.to_string());
    let _ = writeln!(
        out,
        "in the image of rank matrices: {}",
        report.intersection.min_matrix_in_r2
    );
    for c in &report.intersection.components {
        let _ = writeln!(
            out,
            "component {:<20} d={} codim {} in a, {} in b",
            c.involution.to_string(),
            c.dim,
            c.codim_in_a,
            c.codim_in_b
        );
    }
    let _ = writeln!(
        out,
        "{}",
        if report.intersection.irreducible { "irreducible" } else { "reducible" }
    );
    let _ = writeln!(out, "{}", describe_class(&report.meander));
    match report.tl_exponent {
        Some(r) => {
            let _ = writeln!(out, "TL pairing: delta^{r}");
        }
        None => {
            let _ = writeln!(out, "TL pairing: 0");
        }
    }
    let segments: Vec<String> = report.one_segments.iter().map(|(p, q)| format!("[{p},{q}]")).collect();
    let _ = writeln!(out, "1-segments: {}", segments.join(" "));
    let _ = writeln!(out, "reducible by 1-segments: {}", report.reducible_by_segments);
    out
}
