//! Command-line surface of the `roman` binary.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use roman_core::gamma4::classify_critical4;
use roman_core::roman::roman_number_oracle;
use roman_core::{emit_graph6, parse_graph6, roman_number, Family, Graph};

use crate::claims::ClaimId;
use crate::error::HarnessError;
use crate::report::criticality_report;
use crate::verify::{verify_claim, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FOUND: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "roman", version, about = "Roman domination: solver, criticality checks and claim verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print gamma_R and a minimum Roman partition for each graph6 line.
    Gamma {
        /// Input file; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// Print a JSON criticality report for each graph6 line.
    Report { input: Option<PathBuf> },
    /// Print the classification of each graph6 line.
    Classify { input: Option<PathBuf> },
    /// Emit one member of a named family as graph6.
    Gen {
        /// Empty, Complete, Path, Cycle, Xn, Dn, Elem1, Elem2 or Elem3.
        family: String,
        /// Order; not needed for the four-vertex graphs Elem1..Elem3.
        n: Option<usize>,
    },
    /// Check a claim on a source of graphs and print a JSON report.
    Verify {
        claim: String,
        /// Every labeled graph on N vertices.
        #[arg(long, value_name = "N", group = "source")]
        enumerate: Option<usize>,
        /// graph6 file, one graph per line.
        #[arg(long, value_name = "FILE", group = "source")]
        input: Option<PathBuf>,
        /// Comma-separated family members, e.g. Dn6,Dn8,Cycle5.
        #[arg(long, value_name = "LIST", group = "source", value_delimiter = ',')]
        families: Option<Vec<String>>,
        /// Lift the enumeration guard above seven vertices.
        #[arg(long)]
        allow_large: bool,
        /// CSV with columns claim,graph6,diagnostic instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Leave wall_time_ms out so reports can be compared byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare the solver with the brute-force labeling oracle on each line.
    Oracle { input: Option<PathBuf> },
    /// List the claim ids.
    Claims,
}

fn read_graphs(
    input: &Option<PathBuf>,
    stdin: &mut dyn BufRead,
) -> Result<Vec<(String, Graph)>, HarnessError> {
    let mut file;
    let reader: &mut dyn BufRead = match input {
        Some(p) => {
            file = BufReader::new(File::open(p).map_err(|source| HarnessError::Io {
                path: p.clone(),
                source,
            })?);
            &mut file
        }
        None => stdin,
    };
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(|source| HarnessError::Io {
            path: input.clone().unwrap_or_else(|| "<stdin>".into()),
            source,
        })?;
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        out.push((line.to_string(), parse_graph6(line)?));
    }
    Ok(out)
}

fn parse_family(spec: &str) -> Result<Family, HarnessError> {
    Ok(spec.trim().parse::<Family>()?)
}

fn io_err(source: io::Error) -> HarnessError {
    HarnessError::Io {
        path: "<stdout>".into(),
        source,
    }
}

/// Runs one parsed command, reading graph6 lines from `stdin` when no file
/// is given and writing results to `out`; returns the exit code.
pub fn execute(
    cmd: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, HarnessError> {
    match cmd {
        Command::Gamma { input } => {
            for (_, g) in read_graphs(&input, stdin)? {
                let r = roman_number(&g);
                writeln!(out, "{} {}", r.gamma, r.witness).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Report { input } => {
            for (_, g) in read_graphs(&input, stdin)? {
                let line = serde_json::to_string(&criticality_report(&g)?)?;
                writeln!(out, "{line}").map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify { input } => {
            for (line, g) in read_graphs(&input, stdin)? {
                writeln!(out, "{line} {}", classify_critical4(&g)).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Gen { family, n } => {
            let f = Family::from_name(&family, n.unwrap_or(4))?;
            writeln!(out, "{}", emit_graph6(&f.generate()?)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            claim,
            enumerate,
            input,
            families,
            allow_large,
            csv,
            no_timing,
        } => {
            let id: ClaimId = claim.parse()?;
            let source = match (enumerate, input, families) {
                (Some(n), _, _) => Source::Enumerate { n, allow_large },
                (_, Some(path), _) => Source::Input { path },
                (_, _, Some(list)) => Source::Families {
                    members: list.iter().map(|s| parse_family(s)).collect::<Result<_, _>>()?,
                },
                _ => return Err(HarnessError::Usage("verify needs --enumerate, --input or --families".into())),
            };
            let mut report = verify_claim(id, &source)?;
            if no_timing {
                report.wall_time_ms = None;
            }
            if csv {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["claim", "graph6", "diagnostic"])?;
                for c in &report.counterexamples {
                    w.write_record([id.as_str(), &c.graph6, &c.diagnostic])?;
                }
                w.flush().map_err(io_err)?;
            } else {
                let json = serde_json::to_string_pretty(&report)?;
                writeln!(out, "{json}").map_err(io_err)?;
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_FOUND })
        }
        Command::Oracle { input } => {
            let mut code = EXIT_OK;
            for (line, g) in read_graphs(&input, stdin)? {
                let fast = roman_number(&g).gamma;
                let slow = roman_number_oracle(&g)?;
                let verdict = if fast == slow { "ok" } else { "MISMATCH" };
                if fast != slow {
                    code = EXIT_FOUND;
                }
                writeln!(out, "{line} {fast} {slow} {verdict}").map_err(io_err)?;
            }
            Ok(code)
        }
        Command::Claims => {
            for &c in ClaimId::ALL {
                writeln!(out, "{c}\t{}", c.summary()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command against
/// the given streams.
pub fn run_cli_with<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "roman: {e}");
            EXIT_USAGE
        }
    }
}

/// [`run_cli_with`] on the process streams.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let code = run_cli_with(
        args,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    let _ = io::stdout().flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use roman_core::parse_graph6;
    use serde_json::{json, Value};

    struct Run {
        code: i32,
        out: String,
        err: String,
    }

    fn roman(args: &[&str], stdin: &str) -> Run {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("roman").chain(args.iter().copied());
        let code = run_cli_with(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        Run {
            code,
            out: String::from_utf8(out).unwrap(),
            err: String::from_utf8(err).unwrap(),
        }
    }

    fn json(r: &Run) -> Value {
        serde_json::from_str(&r.out).unwrap()
    }

    #[test]
    fn gen_dn6_degrees() {
        let r = roman(&["gen", "Dn", "6"], "");
        assert_eq!(r.code, EXIT_OK);
        assert_eq!(r.out.lines().count(), 1);
        let mut degs = parse_graph6(r.out.trim()).unwrap().degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 3, 3, 3, 3, 3]);
        assert_eq!(roman(&["gen", "Elem2"], "").code, EXIT_OK);
    }

    #[test]
    fn gamma_of_c5() {
        let r = roman(&["gamma"], "Dhc\n");
        assert_eq!(r.code, EXIT_OK);
        let (value, witness) = r.out.trim().split_once(' ').unwrap();
        assert_eq!(value, "4");
        assert!(witness.contains("V2="));
    }

    #[test]
    fn verify_classification_six() {
        let r = roman(&["verify", "classification-theorem", "--enumerate", "6"], "");
        assert_eq!(r.code, EXIT_OK);
        let v = json(&r);
        assert_eq!(v["graphs_scanned"], 32768);
        assert_eq!(v["counterexamples"], json!([]));
        assert!(v["wall_time_ms"].is_u64());
    }

    #[test]
    fn half_bound_six_is_clean() {
        let r = roman(&["verify", "half-bound", "--enumerate", "6"], "");
        assert_eq!(r.code, EXIT_OK);
        assert_eq!(json(&r)["counterexamples"], json!([]));
    }

    #[test]
    fn counterexamples_exit_two_and_csv() {
        let r = roman(&["verify", "gamma-le-3-degree", "--enumerate", "3", "--csv"], "");
        assert_eq!(r.code, EXIT_FOUND);
        let mut lines = r.out.lines();
        assert_eq!(lines.next(), Some("claim,graph6,diagnostic"));
        assert!(lines.next().unwrap().starts_with("gamma-le-3-degree,B?,"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn families_and_input_sources() {
        let r = roman(&["verify", "dn-properties", "--families", "Dn6,Dn8,Dn10,Dn12"], "");
        assert_eq!(r.code, EXIT_OK);
        let v = json(&r);
        assert_eq!(v["graphs_in_hypothesis"], 4);
        assert_eq!(v["source"]["families"]["members"][3], "Dn12");

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("in.g6");
        std::fs::write(&path, ">>graph6<<\nDhc\nE}KG\n").unwrap();
        let p = path.to_str().unwrap();
        let r = roman(&["verify", "classification-theorem", "--input", p, "--no-timing"], "");
        assert_eq!(r.code, EXIT_OK);
        let v = json(&r);
        assert_eq!((v["graphs_scanned"].as_u64(), v["graphs_in_hypothesis"].as_u64()), (Some(2), Some(2)));
        assert!(v.get("wall_time_ms").is_none());
        assert_eq!(roman(&["classify", p], "").out, "Dhc IsC5\nE}KG IsDn(6)\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        for args in [
            vec!["verify", "no-such-claim", "--enumerate", "3"],
            vec!["verify", "half-bound", "--enumerate", "8"],
            vec!["verify", "half-bound"],
            vec!["verify", "half-bound", "--enumerate", "3", "--input", "x"],
            vec!["verify", "half-bound", "--input", "/nonexistent/file.g6"],
            vec!["gen", "Dn", "7"],
            vec!["gen", "Blob", "7"],
            vec!["frobnicate"],
        ] {
            let r = roman(&args, "");
            assert_eq!(r.code, EXIT_USAGE, "{args:?}");
            assert!(!r.err.is_empty(), "{args:?}");
        }
        assert_eq!(roman(&["gamma"], "not-graph6\n").code, EXIT_USAGE);
        assert_eq!(roman(&["--help"], "").code, EXIT_OK);
    }

    #[test]
    fn report_and_classify() {
        let r = roman(&["report"], "Dhc\nC~\n");
        assert_eq!(r.code, EXIT_OK);
        let reports: Vec<Value> = r.out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(reports[0]["gamma"], 4);
        assert_eq!(reports[0]["e_critical"], true);
        assert_eq!(reports[1]["gamma"], 2);
        assert_eq!(reports[1]["classification"], "NotCritical");
        assert_eq!(roman(&["classify"], "Dhc\nE}KG\n").out, "Dhc IsC5\nE}KG IsDn(6)\n");
    }

    #[test]
    fn oracle_and_claims() {
        let r = roman(&["oracle"], "Dhc\nE}KG\nC~\n");
        assert_eq!(r.code, EXIT_OK);
        assert!(r.out.lines().all(|l| l.ends_with(" ok")));
        assert_eq!(roman(&["claims"], "").out.lines().count(), 19);
    }
}
