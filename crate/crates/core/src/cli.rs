//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::construct::{ConstructionName, ConstructionSpec};
use crate::counting::{
    bipartite_distinct_any, count_pairs_at_any, distinct_count_any, write_histogram_csv,
    AnyDistance,
};
use crate::error::{Error, Result};
use crate::experiment::{
    fit_exponent, run_experiment, write_rows_csv, ExperimentConfig, Statistic,
};
use crate::incidence::{dyadic_classify, rich_lines, st_diagnostic, write_dyadic_csv, StQuery};
use crate::io::{read_pointset_file, serialize_pointset};
use crate::rational::Rational;
use crate::transform::{TransformKind, TransformSpec};

#[derive(Parser, Debug)]
#[command(
    name = "hypercount",
    version,
    about = "Exact distance and incidence counting in the dual and double planes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a named construction and write it as a point-set file.
    Generate {
        name: ConstructionName,
        /// Integer parameter; repeat for constructions taking several.
        #[arg(long = "param", allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Real-plane input set; repeat for constructions taking several.
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the multiplicity report of a point set.
    Analyze { file: PathBuf },
    /// Count pairs at a distance, or distinct distances when `--at` is absent.
    Count {
        file: PathBuf,
        /// Target distance as `d1,d2` (or a single value for the real plane).
        #[arg(long)]
        at: Option<String>,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        include_zero: bool,
        /// Print the full distance histogram as CSV instead.
        #[arg(long)]
        histogram: bool,
        /// Count distinct distances between this set and `file` instead.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Print the dyadic classification of unit-distance pairs as CSV.
    Classify { file: PathBuf },
    /// List the r-rich lines of a real-plane set.
    Richlines {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        /// Print incidence-bound ratios instead of the lines.
        #[arg(long)]
        diagnostic: bool,
    },
    /// Apply a distance-equivalence transform.
    Transform {
        kind: TransformKind,
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        param: Rational,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep a construction over a parameter schedule.
    Experiment {
        #[arg(long)]
        construction: ConstructionName,
        /// Comma-separated parameter tuple; repeat once per row.
        #[arg(long = "param", required = true)]
        schedule: Vec<String>,
        /// unit-count, repeated-count, distinct-count, multiplicity or dyadic-table.
        #[arg(long)]
        statistic: String,
        /// Distance for repeated-count.
        #[arg(long)]
        at: Option<String>,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        include_zero: bool,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also print the log-log slope of value against n.
        #[arg(long)]
        fit: bool,
    },
}

fn emit(text: &str, output: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_tuple(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidParameter(format!("bad parameter tuple `{text}`")))
        })
        .collect()
}

fn parse_statistic(
    name: &str,
    at: Option<&str>,
    include_zero: bool,
    plane: crate::point::Plane,
) -> Result<Statistic> {
    Ok(match name {
        "unit-count" => Statistic::UnitCount,
        "repeated-count" => {
            let at =
                at.ok_or_else(|| Error::InvalidParameter("repeated-count needs --at".into()))?;
            Statistic::RepeatedCount(AnyDistance::parse(plane, at)?)
        }
        "distinct-count" => Statistic::DistinctCount { include_zero },
        "multiplicity" => Statistic::Multiplicity,
        "dyadic-table" => Statistic::DyadicTable,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown statistic `{other}`"
            )))
        }
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Generate {
            name,
            params,
            inputs,
            output,
        } => {
            let inputs = inputs
                .iter()
                .map(|p| read_pointset_file(p)?.as_real().cloned())
                .collect::<Result<Vec<_>>>()?;
            let set = ConstructionSpec::new(name, params)
                .with_inputs(inputs)
                .generate()?;
            emit(&serialize_pointset(&set), output.as_ref(), out)
        }
        Command::Analyze { file } => {
            let report = read_pointset_file(&file)?.analyze()?;
            writeln!(out, "{report}")?;
            Ok(())
        }
        Command::Count {
            file,
            at,
            include_zero,
            histogram,
            against,
        } => {
            let set = read_pointset_file(&file)?;
            if histogram {
                return write_histogram_csv(&set, out);
            }
            let value = match (at, against) {
                (Some(at), _) => count_pairs_at_any(&set, &AnyDistance::parse(set.plane(), &at)?)?,
                (None, Some(other)) => {
                    bipartite_distinct_any(&set, &read_pointset_file(other)?)? as u64
                }
                (None, None) => distinct_count_any(&set, include_zero)? as u64,
            };
            writeln!(out, "{value}")?;
            Ok(())
        }
        Command::Classify { file } => {
            let set = read_pointset_file(&file)?;
            write_dyadic_csv(&dyadic_classify(set.as_dual()?), out)
        }
        Command::Richlines {
            file,
            r,
            diagnostic,
        } => {
            let set = read_pointset_file(&file)?;
            let points = set.as_real()?;
            if diagnostic {
                writeln!(out, "{}", st_diagnostic(points, StQuery::Richness(r))?)?;
            } else {
                for line in rich_lines(points, r)? {
                    writeln!(out, "{line}")?;
                }
            }
            Ok(())
        }
        Command::Transform {
            kind,
            file,
            param,
            output,
        } => {
            let spec = TransformSpec::new(kind, param)?;
            let image = spec.apply(&read_pointset_file(&file)?)?;
            emit(&serialize_pointset(&image), output.as_ref(), out)
        }
        Command::Experiment {
            construction,
            schedule,
            statistic,
            at,
            include_zero,
            output,
            fit,
        } => {
            let statistic = parse_statistic(
                &statistic,
                at.as_deref(),
                include_zero,
                construction.plane(),
            )?;
            let schedule = schedule
                .iter()
                .map(|t| parse_tuple(t))
                .collect::<Result<Vec<_>>>()?;
            let to_stdout = output.is_none();
            let cfg = ExperimentConfig {
                construction,
                schedule,
                statistic,
                output,
            };
            let rows = run_experiment(&cfg)?;
            if to_stdout {
                write_rows_csv(&rows, &mut *out)?;
            }
            if fit {
                writeln!(out, "slope={:.6}", fit_exponent(&rows)?)?;
            }
            Ok(())
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hypercount").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn unknown_subcommand_fails_with_usage() {
        let (code, _, err) = call(&["frobnicate"]);
        assert_ne!(code, 0);
        assert!(err.contains("Usage"), "{err}");
    }

    #[test]
    fn missing_file_is_a_diagnostic() {
        let (code, _, err) = call(&["analyze", "/nonexistent/set.txt"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"), "{err}");
    }

    #[test]
    fn experiment_to_stdout_with_fit() {
        let (code, out, err) = call(&[
            "experiment",
            "--construction",
            "lenz",
            "--param",
            "1,1",
            "--param",
            "2,2",
            "--param",
            "4,4",
            "--statistic",
            "repeated-count",
            "--at",
            "1,1",
            "--fit",
        ]);
        assert_eq!(code, 0, "{err}");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,value,seconds");
        assert!(lines[1].starts_with("2,1,"));
        assert!(lines[3].starts_with("8,16,"));
        assert!(lines[4].starts_with("slope=2.0000"), "{out}");
    }

    #[test]
    fn bad_statistic_for_plane() {
        let (code, _, err) = call(&[
            "experiment",
            "--construction",
            "lenz",
            "--param",
            "2,2",
            "--statistic",
            "dyadic-table",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("dyadic-table"), "{err}");
    }
}
