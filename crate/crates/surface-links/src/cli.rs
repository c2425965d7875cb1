//! Command-line front end. All verbs print to the supplied writer and
//! classify failures as usage errors (exit 2) or analysis errors (exit 1).

use crate::census::census_scan;
use crate::correspond::{devirtualize, find_lasso, gauss_of, surface_to_virtual, VirtualDiagram};
use crate::diagram::CombMap;
use crate::gauss::{connect_sum, gauss_to_surface, parse_gauss, GaussCode};
use crate::gl::{alternating_by_definiteness, classical_goeritz, goeritz, sigma_invariant, spine, Color};
use crate::json::{diagram_from_json, diagram_to_json};
use crate::linalg::{det, inertia};
use crate::moves::{flype_equivalent, flype_orbit, FlypeEquiv};
use crate::report::analyze;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

#[derive(Parser, Debug)]
#[command(
    name = "surface-links",
    version,
    about = "Link diagrams on closed orientable surfaces and virtual link diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Gauss,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColorArg {
    B,
    W,
}

/// One diagram, inline as a Gauss code or from a JSON file.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+"
    #[arg(long)]
    pub gauss: Option<String>,
    /// Path to a diagram JSON file
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report genus, alternation, Goeritz data, identities and structure
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Report rendering
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        /// Show only this checkerboard form
        #[arg(long, value_enum)]
        color: Option<ColorArg>,
    },
    /// List the flype orbit of a diagram as Gauss codes
    Orbit {
        #[command(flatten)]
        input: Input,
        /// Orbit size cap; truncation is reported
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Decide bounded flype equivalence of two diagrams
    Equiv {
        /// First diagram: a file holding a Gauss code or diagram JSON
        a: PathBuf,
        /// Second diagram, same formats
        b: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Project a surface diagram to a virtual diagram on the sphere
    Virtualize {
        #[command(flatten)]
        input: Input,
        /// json: diagram, virtual ids, code and lasso; gauss: code only
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Rebuild the cellular surface diagram of classical crossing data
    Devirtualize {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Splice two Gauss codes into a connected sum
    ConnectSum {
        /// Gauss code of the first summand
        a: String,
        /// Gauss code of the second summand
        b: String,
        /// Splice site in the first code, as component:position
        #[arg(long, default_value = "0:0")]
        at_a: String,
        /// Splice site in the second code
        #[arg(long, default_value = "0:0")]
        at_b: String,
    },
    /// Enumerate all diagrams of 0..=n crossings and run the identity suites
    Census {
        n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
}

enum CliError {
    Usage(String),
    Analysis(String),
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Analysis(e.to_string()),
        }
    }
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Usage(format!("cannot read {}: {e}", path.display()))
}

impl Input {
    fn load_map(&self) -> Result<CombMap, CliError> {
        match (&self.gauss, &self.json) {
            (Some(text), _) => {
                if text.trim().is_empty() {
                    return Err(CliError::Usage("empty Gauss code".into()));
                }
                Ok(gauss_to_surface(&parse_gauss(text)?)?)
            }
            (None, Some(path)) => {
                Ok(diagram_from_json(&std::fs::read_to_string(path).map_err(|e| io_err(path, e))?)?)
            }
            (None, None) => unreachable!("clap enforces the input group"),
        }
    }
}

fn load_diagram_file(path: &PathBuf) -> Result<CombMap, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    if text.trim_start().starts_with('{') {
        Ok(diagram_from_json(&text)?)
    } else {
        Ok(gauss_to_surface(&parse_gauss(&text)?)?)
    }
}

fn parse_site(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("site '{s}' is not component:position"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let mut out = std::io::stdout();
    run(std::env::args_os(), &mut out)
}

/// Parse `argv` and execute; output goes to `out`, diagnostics to stderr.
/// Returns the process exit code: 0 success, 1 analysis error, 2 usage.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            eprint!("{e}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            2
        }
        Err(CliError::Analysis(m)) => {
            eprintln!("analysis error: {m}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let fail = |e: std::io::Error| CliError::Analysis(format!("write failed: {e}"));
    match cmd {
        Command::Analyze { input, report, color } => {
            let map = input.load_map()?;
            if let Some(c) = color {
                let color = match c {
                    ColorArg::B => Color::Black,
                    ColorArg::W => Color::White,
                };
                let form = goeritz(&map, color)?;
                let si = sigma_invariant(&map, color)?;
                let def = crate::gl::is_definite(&form);
                match report {
                    ReportFormat::Json => {
                        let v = serde_json::json!({
                            "color": format!("{c:?}"),
                            "beta1": form.beta1,
                            "sigma": form.sigma,
                            "slope": form.slope,
                            "definite": format!("{def:?}").to_lowercase(),
                            "sigma_invariant": si.to_string(),
                        });
                        writeln!(out, "{v}").map_err(fail)?;
                    }
                    ReportFormat::Text => {
                        writeln!(
                            out,
                            "color {c:?}: beta1 {}  sigma {}  slope {}  {:?}  sigma invariant {}",
                            form.beta1, form.sigma, form.slope, def, si
                        )
                        .map_err(fail)?;
                    }
                }
                return Ok(());
            }
            let r = analyze(&map)?;
            match report {
                ReportFormat::Json => writeln!(out, "{}", serde_json::to_string(&r).unwrap()).map_err(fail)?,
                ReportFormat::Text => write!(out, "{}", r.to_text()).map_err(fail)?,
            }
            Ok(())
        }
        Command::Orbit { input, bound, report } => {
            let map = input.load_map()?;
            let orbit = flype_orbit(&map, bound)?;
            let codes: Vec<String> = orbit
                .members
                .iter()
                .map(|m| GaussCode::of_map(m).map(|c| c.to_string()))
                .collect::<crate::Result<_>>()?;
            match report {
                ReportFormat::Json => {
                    let v = serde_json::json!({
                        "size": codes.len(),
                        "truncated": orbit.truncated,
                        "members": codes,
                    });
                    writeln!(out, "{v}").map_err(fail)?;
                }
                ReportFormat::Text => {
                    writeln!(out, "orbit size {} truncated {}", codes.len(), orbit.truncated).map_err(fail)?;
                    for c in codes {
                        writeln!(out, "{c}").map_err(fail)?;
                    }
                }
            }
            Ok(())
        }
        Command::Equiv { a, b, bound } => {
            let (ma, mb) = (load_diagram_file(&a)?, load_diagram_file(&b)?);
            match flype_equivalent(&ma, &mb, bound)? {
                FlypeEquiv::Equivalent(path) => {
                    writeln!(out, "equivalent in {} flypes", path.len()).map_err(fail)?;
                    writeln!(out, "{}", serde_json::to_string(&path).unwrap()).map_err(fail)?;
                }
                FlypeEquiv::Distinct => writeln!(out, "distinct").map_err(fail)?,
                FlypeEquiv::Unknown { explored } => {
                    writeln!(out, "unknown: bound {bound} hit after exploring {explored} diagrams")
                        .map_err(fail)?;
                }
            }
            Ok(())
        }
        Command::Virtualize { input, format } => {
            let map = input.load_map()?;
            let v = surface_to_virtual(&map)?;
            let code = gauss_of(&v)?;
            match format {
                DataFormat::Gauss => writeln!(out, "{code}").map_err(fail)?,
                DataFormat::Json => {
                    let diagram: serde_json::Value =
                        serde_json::from_str(&diagram_to_json(&v.map)).unwrap();
                    let doc = serde_json::json!({
                        "diagram": diagram,
                        "virtualIds": v.virtual_ids.iter().collect::<Vec<_>>(),
                        "gauss": code.to_string(),
                        "lasso": find_lasso(&v),
                    });
                    writeln!(out, "{doc}").map_err(fail)?;
                }
            }
            Ok(())
        }
        Command::Devirtualize { input, format } => {
            let map = match (&input.gauss, &input.json) {
                (Some(_), _) => input.load_map()?,
                (None, Some(path)) => {
                    // accept plain diagram JSON or virtualize output with ids
                    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
                    let value: serde_json::Value = serde_json::from_str(&text)
                        .map_err(|e| CliError::Usage(format!("bad JSON: {e}")))?;
                    let (dtext, ids) = match value.get("virtualIds") {
                        Some(ids) => (
                            value["diagram"].to_string(),
                            ids.as_array()
                                .map(|v| v.iter().filter_map(|x| x.as_u64()).map(|x| x as usize).collect())
                                .unwrap_or_default(),
                        ),
                        None => (text, BTreeSet::new()),
                    };
                    let inner = diagram_from_json(&dtext)?;
                    devirtualize(&VirtualDiagram::new(inner, ids)?)?
                }
                (None, None) => unreachable!("clap enforces the input group"),
            };
            match format {
                DataFormat::Gauss => writeln!(out, "{}", GaussCode::of_map(&map)?).map_err(fail)?,
                DataFormat::Json => writeln!(out, "{}", diagram_to_json(&map)).map_err(fail)?,
            }
            Ok(())
        }
        Command::ConnectSum { a, b, at_a, at_b } => {
            for s in [&a, &b] {
                if s.trim().is_empty() {
                    return Err(CliError::Usage("empty Gauss code".into()));
                }
            }
            let (ca, cb) = (parse_gauss(&a)?, parse_gauss(&b)?);
            let sum = connect_sum(&ca, &cb, parse_site(&at_a)?, parse_site(&at_b)?)?;
            writeln!(out, "{sum}").map_err(fail)?;
            Ok(())
        }
        Command::Census { n, report } => census_suite(n, report, out),
    }
}

/// Per crossing count: class totals plus the identity suite — alternating
/// iff definite of opposite signs, the signature-genus and slope identities
/// on fully alternating maps, and the classical Goeritz oracle at genus 0.
fn census_suite(max: usize, report: ReportFormat, out: &mut dyn Write) -> Result<(), CliError> {
    let fail = |e: std::io::Error| CliError::Analysis(format!("write failed: {e}"));
    let mut total_violations = 0usize;
    let mut rows = Vec::new();
    for n in 0..=max {
        let (classes, colorable, alternating, violations) = (
            AtomicUsize::new(0),
            AtomicUsize::new(0),
            AtomicUsize::new(0),
            AtomicUsize::new(0),
        );
        census_scan(n, |m| {
            classes.fetch_add(1, Ordering::Relaxed);
            if m.checkerboard_coloring().is_err() {
                return;
            }
            colorable.fetch_add(1, Ordering::Relaxed);
            let mut bad = false;
            let alt = m.is_alternating();
            bad |= alternating_by_definiteness(m).map(|d| d != alt).unwrap_or(true);
            let forms = (goeritz(m, Color::Black), goeritz(m, Color::White));
            let (Ok(fb), Ok(fw)) = forms else {
                violations.fetch_add(1, Ordering::Relaxed);
                return;
            };
            let genus = m.genus().unwrap_or(usize::MAX);
            if alt {
                alternating.fetch_add(1, Ordering::Relaxed);
                let (sb, sw) = (
                    sigma_invariant(m, Color::Black).unwrap(),
                    sigma_invariant(m, Color::White).unwrap(),
                );
                bad |= &sb - &sw != BigRational::from_integer((2 * genus as i64).into());
                let connected = spine(m, Color::Black).map(|s| s.components == 1).unwrap_or(false)
                    && spine(m, Color::White).map(|s| s.components == 1).unwrap_or(false);
                if connected {
                    bad |= fb.slope - fw.slope
                        != 2 * (fb.beta1 as i64 + fw.beta1 as i64 - 2 * genus as i64);
                }
            }
            if genus == 0 {
                // the classical matrix over one color class represents the
                // opposite surface's form
                for (color, form) in [(Color::White, &fb), (Color::Black, &fw)] {
                    let classic = classical_goeritz(m, color).unwrap();
                    bad |= classic.len() != form.beta1
                        || det(&classic) != det(&form.matrix)
                        || inertia(&classic).signature() != form.sigma;
                }
            }
            if bad {
                violations.fetch_add(1, Ordering::Relaxed);
            }
        });
        let row = (
            n,
            classes.into_inner(),
            colorable.into_inner(),
            alternating.into_inner(),
            violations.into_inner(),
        );
        total_violations += row.4;
        if report == ReportFormat::Text {
            writeln!(
                out,
                "n={} classes={} colorable={} alternating={} violations={}",
                row.0, row.1, row.2, row.3, row.4
            )
            .map_err(fail)?;
        }
        rows.push(row);
    }
    if report == ReportFormat::Json {
        let v: Vec<_> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.0, "classes": r.1, "colorable": r.2,
                    "alternating": r.3, "violations": r.4,
                })
            })
            .collect();
        writeln!(out, "{}", serde_json::Value::Array(v)).map_err(fail)?;
    }
    if total_violations > 0 {
        return Err(CliError::Analysis(format!("{total_violations} identity violations")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";

    fn run_cli(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("surface-links").chain(args.iter().copied());
        let code = run(argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn analyze_text_and_json() {
        let (code, text) = run_cli(&["analyze", "--gauss", TREFOIL]);
        assert_eq!(code, 0);
        assert!(text.contains("genus") && text.contains("alternating"));
        let (code, text) = run_cli(&["analyze", "--gauss", TREFOIL, "--report", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["genus"], 0);
        assert_eq!(v["alternating"], true);
        assert_eq!(v["colors"]["B"]["definite"], "positive");
        assert_eq!(v["colors"]["W"]["definite"], "negative");
    }

    #[test]
    fn analyze_single_color() {
        let (code, text) = run_cli(&["analyze", "--gauss", TREFOIL, "--color", "w", "--report", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["beta1"], 2);
        assert_eq!(v["sigma"], -2);
        assert_eq!(v["definite"], "negative");
    }

    #[test]
    fn empty_gauss_is_usage_error() {
        let (code, _) = run_cli(&["analyze", "--gauss", ""]);
        assert_eq!(code, 2);
        let (code, _) = run_cli(&["analyze", "--gauss", "   "]);
        assert_eq!(code, 2);
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        let (code, _) = run_cli(&["analyze"]);
        assert_eq!(code, 2);
        let (code, _) = run_cli(&["analyze", "--gauss", "O1+ U1"]);
        assert_eq!(code, 2);
        let (code, _) = run_cli(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, text) = run_cli(&["--help"]);
        assert_eq!(code, 0);
        assert!(text.contains("analyze"));
    }

    #[test]
    fn orbit_of_trefoil_is_singleton() {
        let (code, text) = run_cli(&["orbit", "--gauss", TREFOIL, "--report", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["size"], 1);
        assert_eq!(v["truncated"], false);
    }

    #[test]
    fn equiv_of_identical_files() {
        let dir = std::env::temp_dir();
        let pa = dir.join("surface-links-cli-a.txt");
        let pb = dir.join("surface-links-cli-b.json");
        std::fs::write(&pa, TREFOIL).unwrap();
        let map = gauss_to_surface(&parse_gauss(TREFOIL).unwrap()).unwrap();
        std::fs::write(&pb, diagram_to_json(&map)).unwrap();
        let (code, text) =
            run_cli(&["equiv", pa.to_str().unwrap(), pb.to_str().unwrap(), "--bound", "100"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("equivalent in 0 flypes"), "{text}");
    }

    #[test]
    fn virtualize_devirtualize_round_trip() {
        let vt = "O1+ O2+ U1+ U2+";
        let (code, text) = run_cli(&["virtualize", "--gauss", vt]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["virtualIds"], serde_json::json!([2]));
        assert_eq!(v["gauss"], vt);
        assert!(v["lasso"]["faces"].is_array());

        let dir = std::env::temp_dir();
        let pv = dir.join("surface-links-cli-virtual.json");
        std::fs::write(&pv, &text).unwrap();
        let (code, text) =
            run_cli(&["devirtualize", "--json", pv.to_str().unwrap(), "--format", "gauss"]);
        assert_eq!(code, 0);
        assert_eq!(text.trim(), vt);

        let (code, text) = run_cli(&["devirtualize", "--gauss", vt, "--format", "json"]);
        assert_eq!(code, 0);
        let m = diagram_from_json(text.trim()).unwrap();
        assert_eq!(m.genus().unwrap(), 1);
    }

    #[test]
    fn connect_sum_verb() {
        let (code, text) = run_cli(&["connect-sum", TREFOIL, TREFOIL, "--at-a", "0:2", "--at-b", "0:0"]);
        assert_eq!(code, 0);
        let sum = parse_gauss(text.trim()).unwrap();
        assert_eq!(sum.n_crossings(), 6);
        let (code, _) = run_cli(&["connect-sum", TREFOIL, TREFOIL, "--at-a", "9:9"]);
        assert_eq!(code, 1);
        let (code, _) = run_cli(&["connect-sum", TREFOIL, TREFOIL, "--at-a", "nonsense"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn census_suite_runs_clean() {
        let (code, text) = run_cli(&["census", "3"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("n=3 classes=238 colorable=62 alternating=20 violations=0"), "{text}");
    }
}
