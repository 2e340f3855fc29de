//! Command-line front end. [`run`] takes the argument list and the output
//! streams.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{linear_extensions, Forest, SignMode, SignedLabeling};
use crate::poly::BiPoly;
use crate::stats::{self, StatId};
use crate::verify::{self, CheckReport, TheoremId, DEFAULT_DEGREE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    /// JSON, polynomials as `[t, q, coeff]` triples.
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "hookforest", version, about = "q-hook length formulas for signed labeled forests")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distribution of a forest statistic over all labelings.
    Dist {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        stat: String,
        #[arg(long, default_value = "signed")]
        mode: String,
        /// Statistic recorded in the exponent of t.
        #[arg(long)]
        aux: Option<String>,
    },
    /// Closed-form side of an identity.
    Rhs {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        theorem: String,
    },
    /// Checks one identity on one forest.
    Check {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
    },
    /// Checks one identity on every forest up to a size.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        theorem: String,
        #[arg(long, env = "HOOKFOREST_JOBS")]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
        #[arg(long)]
        fail_fast: bool,
    },
    /// Linear extensions of a labeled forest with their maj_B values.
    Linext {
        #[arg(long)]
        forest: String,
        #[arg(long, allow_hyphen_values = true)]
        labeling: String,
    },
    /// Type-B partition series of a labeled forest.
    Partitions {
        #[arg(long)]
        forest: String,
        #[arg(long, allow_hyphen_values = true)]
        labeling: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
    },
    /// Exhaustive checks of psi and the mirror map.
    Bijections {
        #[arg(long)]
        max_n: usize,
        #[arg(long, env = "HOOKFOREST_JOBS")]
        jobs: Option<usize>,
    },
    /// First forest on which two statistics are not equidistributed.
    Counterexample {
        #[arg(long)]
        stat: String,
        #[arg(long)]
        vs: String,
        #[arg(long, default_value = "signed")]
        mode: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, env = "HOOKFOREST_JOBS")]
        jobs: Option<usize>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn records<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).expect("serializable");
    writeln!(out, "{text}").map_err(io)
}

fn labeling_for(forest: &Forest, text: &str) -> Result<SignedLabeling> {
    SignedLabeling::for_forest(forest, SignedLabeling::parse(text)?.into_vec(), SignMode::Signed)
}

fn report(out: &mut dyn Write, format: Format, r: &CheckReport) -> Result<()> {
    match format {
        Format::Human => writeln!(out, "{r}").map_err(io),
        Format::Records => records(out, r),
    }
}

fn poly(out: &mut dyn Write, format: Format, p: &BiPoly) -> Result<()> {
    match format {
        Format::Human => writeln!(out, "{p}").map_err(io),
        Format::Records => records(out, p),
    }
}

fn code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let format = cli.format;
    match &cli.command {
        Command::Dist { forest, stat, mode, aux } => {
            let forest: Forest = forest.parse()?;
            let stat: StatId = stat.parse()?;
            let mode: SignMode = mode.parse()?;
            let aux = aux.as_deref().map(str::parse::<StatId>).transpose()?;
            poly(out, format, &verify::distribution(&forest, stat, mode, aux)?)?;
            Ok(0)
        }
        Command::Rhs { forest, theorem } => {
            let forest: Forest = forest.parse()?;
            let theorem: TheoremId = theorem.parse()?;
            let p = theorem.closed_form(&forest).ok_or_else(|| {
                Error::InvalidArgument(format!("{theorem} has no labeling-free closed form"))
            })?;
            poly(out, format, &p)?;
            Ok(0)
        }
        Command::Check { forest, theorem, degree } => {
            let forest: Forest = forest.parse()?;
            let theorem: TheoremId = theorem.parse()?;
            let r = verify::check_theorem_with(&forest, theorem, *degree)?;
            report(out, format, &r)?;
            Ok(code(r.pass))
        }
        Command::Sweep { max_n, theorem, jobs, degree, fail_fast } => {
            let theorem: TheoremId = theorem.parse()?;
            let reports = verify::sweep(*max_n, theorem, *jobs, *degree)?;
            let shown = match (fail_fast, reports.iter().position(|r| !r.pass)) {
                (true, Some(i)) => &reports[..=i],
                _ => &reports[..],
            };
            for r in shown {
                match format {
                    Format::Human if r.pass => {
                        let name = if r.forest.is_empty() { "(empty)" } else { &r.forest };
                        writeln!(out, "PASS {} on {name}", r.theorem).map_err(io)?
                    }
                    _ => report(out, format, r)?,
                }
            }
            let failed = verify::failures(shown);
            if format == Format::Human {
                writeln!(out, "{} forests, {failed} failed", shown.len()).map_err(io)?;
            }
            Ok(code(failed == 0))
        }
        Command::Linext { forest, labeling } => {
            let forest: Forest = forest.parse()?;
            let w = labeling_for(&forest, labeling)?;
            let r = verify::check_linext_labeling(&forest, &w);
            let extensions: Vec<(Vec<i32>, u32)> = linear_extensions(&forest, &w)
                .into_iter()
                .map(|s| {
                    let m = stats::maj_b(&s);
                    (s, m)
                })
                .collect();
            match format {
                Format::Human => {
                    for (s, m) in &extensions {
                        let word: Vec<String> = s.iter().map(i32::to_string).collect();
                        writeln!(out, "({})  maj_B = {m}", word.join(",")).map_err(io)?;
                    }
                    writeln!(out, "{r}").map_err(io)?;
                }
                Format::Records => {
                    #[derive(Serialize)]
                    struct Linext<'a> {
                        extensions: &'a [(Vec<i32>, u32)],
                        report: &'a CheckReport,
                    }
                    records(out, &Linext { extensions: &extensions, report: &r })?;
                }
            }
            Ok(code(r.pass))
        }
        Command::Partitions { forest, labeling, degree } => {
            let forest: Forest = forest.parse()?;
            let w = labeling_for(&forest, labeling)?;
            let series = verify::partition_lhs_series(&forest, &w, *degree);
            let gf = verify::check_partition_gf(&forest, &w, *degree);
            let dec1 = verify::check_decomposition_dec1(&forest, &w, *degree);
            match format {
                Format::Human => {
                    writeln!(out, "series: {series}").map_err(io)?;
                    writeln!(out, "{gf}").map_err(io)?;
                    writeln!(out, "{dec1}").map_err(io)?;
                }
                Format::Records => {
                    records(out, series.poly())?;
                    records(out, &gf)?;
                    records(out, &dec1)?;
                }
            }
            Ok(code(gf.pass && dec1.pass))
        }
        Command::Bijections { max_n, jobs } => {
            let mut reports = Vec::new();
            for n in 0..=*max_n {
                reports.push(verify::check_psi(&Forest::antichain(n)));
            }
            reports.extend(verify::sweep(*max_n, TheoremId::Mirror, *jobs, DEFAULT_DEGREE)?);
            for r in &reports {
                match format {
                    Format::Human => {
                        let name = if r.forest.is_empty() { "(empty)" } else { &r.forest };
                        let status = if r.pass { "PASS" } else { "FAIL" };
                        writeln!(out, "{status} {} on {name}", r.theorem).map_err(io)?;
                        if let Some(w) = &r.witness {
                            writeln!(out, "  witness: {w}").map_err(io)?;
                        }
                    }
                    Format::Records => records(out, r)?,
                }
            }
            let failed = verify::failures(&reports);
            if format == Format::Human {
                writeln!(out, "{} checks, {failed} failed", reports.len()).map_err(io)?;
            }
            Ok(code(failed == 0))
        }
        Command::Counterexample { stat, vs, mode, max_n, jobs } => {
            let a: StatId = stat.parse()?;
            let b: StatId = vs.parse()?;
            let mode: SignMode = mode.parse()?;
            let found = verify::counterexample_search(a, b, mode, *max_n, *jobs)?;
            match (format, &found) {
                (Format::Records, _) => records(out, &found)?,
                (Format::Human, None) => writeln!(out, "none").map_err(io)?,
                (Format::Human, Some(c)) => {
                    writeln!(out, "forest: {}", c.forest).map_err(io)?;
                    writeln!(out, "{a}: {}", c.first).map_err(io)?;
                    writeln!(out, "{b}: {}", c.second).map_err(io)?;
                }
            }
            Ok(0)
        }
    }
}
