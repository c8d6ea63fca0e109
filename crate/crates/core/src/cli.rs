//! Command-line front end. [`run`] is pure: it returns the exit code and the
//! two output streams instead of touching the process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::Family;
use crate::cones::HalfOpenCone;
use crate::error::{Error, Result};
use crate::paths::{self, path_stats, KVector};
use crate::polynomial::LaurentPoly;
use crate::verify::{self, Subject};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        CommandOutcome { exit_code: if holds { EXIT_OK } else { EXIT_FAILS }, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let exit_code = match e {
            Error::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        CommandOutcome { exit_code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "qtcatalan", version, about = "Refined q,t-Catalan polynomials of k-Dyck paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SubjectArgs {
    /// Composition k1,...,km.
    #[arg(long = "k", value_name = "PARTS")]
    k: Option<String>,
    /// Partition, summed over its distinct rearrangements.
    #[arg(long = "lambda", value_name = "PARTS")]
    lambda: Option<String>,
}

impl SubjectArgs {
    fn subject(&self) -> Result<Subject> {
        match (&self.k, &self.lambda) {
            (Some(k), _) => Ok(Subject::Composition(KVector::parse(k)?)),
            (_, Some(l)) => {
                let parts = paths::parse_u32_list(l)?;
                verify::validate_partition(&parts)?;
                Ok(Subject::Partition(parts))
            }
            _ => unreachable!("clap enforces one of --k/--lambda"),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridFormat {
    Table,
    Tsv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Three,
    K4,
    Kaaa,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Three => Family::Three,
            FamilyArg::K4 => Family::K4,
            FamilyArg::Kaaa => Family::Kaaa,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every path: ranks, east runs, area, bounce.
    Paths {
        #[arg(long = "k", value_name = "PARTS")]
        k: String,
    },
    /// Print the polynomial in canonical order.
    Catalan {
        #[command(flatten)]
        subject: SubjectArgs,
    },
    /// Check q,t-symmetry; exit 1 with a witness if asymmetric.
    Symmetric {
        #[command(flatten)]
        subject: SubjectArgs,
    },
    /// Coefficient grid: row j, column i holds the coefficient of q^i t^j.
    Grid {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: GridFormat,
    },
    /// Query a cone file.
    #[command(group(clap::ArgGroup::new("query").required(true)))]
    Cone {
        file: std::path::PathBuf,
        #[arg(long, group = "query")]
        transform: bool,
        #[arg(long, group = "query")]
        pi: bool,
        #[arg(long, group = "query")]
        index: bool,
    },
    /// Cross-check a theorem: assembly, series against brute force, symmetry.
    Verify {
        #[arg(long, value_enum)]
        theorem: FamilyArg,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// Symmetry scan table.
    Scan {
        /// `kaaa`: (k,a,...,a); `k4`: (k,k,k,k); `three`: all (k1,k2,k3).
        #[arg(long, value_enum, conflicts_with = "all_length", required_unless_present = "all_length")]
        family: Option<FamilyArg>,
        /// Every composition of this length.
        #[arg(long, value_name = "L")]
        all_length: Option<usize>,
        /// Length of the (k,a,...,a) family.
        #[arg(long, default_value_t = 4, requires = "family")]
        length: usize,
        #[arg(long)]
        max: u32,
    },
    /// Check that replacing the last part m by l leaves the polynomial unchanged.
    Lastparam {
        #[arg(long, value_name = "PARTS")]
        prefix: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        l: u32,
    },
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome { exit_code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CommandOutcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome::error(&e),
    }
}

fn dispatch(cmd: Command) -> Result<CommandOutcome> {
    match cmd {
        Command::Paths { k } => paths_cmd(&KVector::parse(&k)?),
        Command::Catalan { subject } => Ok(CommandOutcome::ok(format!("{}\n", subject.subject()?.polynomial()?))),
        Command::Symmetric { subject } => {
            let r = verify::symmetry_report(subject.subject()?)?;
            let mut out = format!("{}\t{}\n", r.subject, if r.symmetric { "symmetric" } else { "asymmetric" });
            if let Some(w) = &r.witness {
                writeln!(out, "{w}").unwrap();
            }
            Ok(CommandOutcome::verdict(r.symmetric, out))
        }
        Command::Grid { subject, format } => {
            let poly = subject.subject()?.polynomial()?;
            Ok(CommandOutcome::ok(match format {
                GridFormat::Tsv => grid_tsv(&poly)?,
                GridFormat::Table => grid_table(&poly)?,
            }))
        }
        Command::Cone { file, transform: _, pi, index } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", file.display())))?;
            let cone = HalfOpenCone::parse(&text)?;
            let out = if pi {
                cone.parallelepiped_points().iter().map(|p| format!("({})\n", paths::join(p))).collect()
            } else if index {
                format!("{}\n", cone.lattice_index())
            } else {
                let ctx = crate::cones::default_context(cone.dim())?;
                format!("{}\n", cone.integer_point_transform(&ctx)?)
            };
            Ok(CommandOutcome::ok(out))
        }
        Command::Verify { theorem, bound } => {
            let r = verify::verify_theorem(theorem.into(), bound)?;
            Ok(CommandOutcome::verdict(r.all_hold(), format!("{r}\n")))
        }
        Command::Scan { family, all_length, length, max } => {
            let members: Vec<Subject> = match (family, all_length) {
                (_, Some(l)) => {
                    if l == 0 {
                        return Err(Error::Usage("--all-length must be positive".into()));
                    }
                    verify::compositions(l, max).into_iter().map(Subject::Composition).collect()
                }
                (Some(FamilyArg::Kaaa), None) => {
                    if length < 2 {
                        return Err(Error::Usage("--length must be at least 2".into()));
                    }
                    verify::head_tail_family(length, max)
                }
                (Some(f), None) => Family::from(f)
                    .kvectors(max)
                    .into_iter()
                    .map(Subject::Composition)
                    .collect(),
                (None, None) => unreachable!("clap requires --family or --all-length"),
            };
            if max == 0 {
                return Err(Error::Usage("--max must be positive".into()));
            }
            let reports = verify::symmetry_scan(members)?;
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{r}").unwrap();
            }
            let sym = reports.iter().filter(|r| r.symmetric).count();
            writeln!(out, "symmetric {sym}/{}", reports.len()).unwrap();
            Ok(CommandOutcome::verdict(sym == reports.len(), out))
        }
        Command::Lastparam { prefix, m, l } => {
            let prefix = KVector::parse(&prefix)?;
            let holds = verify::check_last_param(&prefix, m, l)?;
            let a = prefix.concat(m)?;
            let b = prefix.concat(l)?;
            let rel = if holds { "==" } else { "!=" };
            Ok(CommandOutcome::verdict(holds, format!("C_{a} {rel} C_{b}\n")))
        }
    }
}

fn paths_cmd(kvec: &KVector) -> Result<CommandOutcome> {
    let mut out = String::from("ranks\teast_runs\tarea\tbounce\n");
    for p in paths::enumerate_paths(kvec) {
        let s = path_stats(&p)?;
        writeln!(out, "{}\t{}\t{}\t{}", paths::join(p.ranks()), paths::join(&p.east_runs()), s.area, s.bounce).unwrap();
    }
    Ok(CommandOutcome::ok(out))
}

/// `grid[j][i]` = coefficient of `q^i t^j`, padded to a rectangle.
fn rows(poly: &LaurentPoly) -> Result<Vec<Vec<String>>> {
    let g = poly.coefficient_grid()?;
    let width = g.len();
    let height = g.iter().map(|r| r.len()).max().unwrap_or(0);
    Ok((0..height)
        .map(|j| (0..width).map(|i| g[i].get(j).map_or("0".to_string(), |c| c.to_string())).collect())
        .collect())
}

/// Header `t\q` then q-exponents; one row per t-exponent, ascending.
pub fn grid_tsv(poly: &LaurentPoly) -> Result<String> {
    let rows = rows(poly)?;
    let width = rows.first().map_or(0, |r| r.len());
    let mut out = String::from("t\\q");
    for i in 0..width {
        write!(out, "\t{i}").unwrap();
    }
    out.push('\n');
    for (j, row) in rows.iter().enumerate() {
        write!(out, "{j}").unwrap();
        for c in row {
            write!(out, "\t{c}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

/// Inverse of [`grid_tsv`].
pub fn parse_grid_tsv(text: &str) -> Result<LaurentPoly> {
    let bad = |m: &str| Error::Parse(format!("grid: {m}"));
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty input"))?;
    let width = header.split('\t').count() - 1;
    let mut grid: Vec<Vec<num_bigint::BigInt>> = vec![Vec::new(); width];
    for (j, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split('\t').collect();
        if cells.len() != width + 1 || cells[0] != j.to_string() {
            return Err(bad(&format!("malformed row {line:?}")));
        }
        for (i, c) in cells[1..].iter().enumerate() {
            grid[i].push(c.parse().map_err(|_| bad(&format!("bad coefficient {c:?}")))?);
        }
    }
    LaurentPoly::from_grid(&verify::qt_context(), &grid)
}

/// Right-aligned table, highest t-exponent on top as in a lattice picture.
pub fn grid_table(poly: &LaurentPoly) -> Result<String> {
    let rows = rows(poly)?;
    let w = rows.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
    let mut out = String::new();
    for (j, row) in rows.iter().enumerate().rev() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
        writeln!(out, "t^{j:<3}| {}", cells.join(" ")).unwrap();
    }
    let width = rows.first().map_or(0, |r| r.len());
    let labels: Vec<String> = (0..width).map(|i| format!("{i:>w$}")).collect();
    writeln!(out, "q^   | {}", labels.join(" ")).unwrap();
    Ok(out)
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = run(argv);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandOutcome {
        run(std::iter::once("qtcatalan").chain(args.iter().copied()))
    }

    #[test]
    fn catalan_canonical_order() {
        let o = run_args(&["catalan", "--k", "1,1,1"]);
        assert_eq!(o.exit_code, 0);
        assert_eq!(o.stdout, "q*t + t^3 + q*t^2 + q^2*t + q^3\n");
        let ctx = verify::qt_context();
        let printed = LaurentPoly::parse(&ctx, "q^3 + q^2*t + q*t + q*t^2 + t^3").unwrap();
        assert_eq!(o.stdout.trim(), printed.to_string());
    }

    #[test]
    fn symmetric_witness_line() {
        let o = run_args(&["symmetric", "--k", "1,1,3,1"]);
        assert_eq!(o.exit_code, 1);
        assert_eq!(o.stdout.lines().nth(1), Some("q^4*t^2=2 vs q^2*t^4=1"));
        assert_eq!(run_args(&["symmetric", "--lambda", "2,1,1,1"]).exit_code, 0);
    }

    #[test]
    fn lastparam_exit() {
        assert_eq!(run_args(&["lastparam", "--prefix", "1,1,1", "--m", "2", "--l", "3"]).exit_code, 0);
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [
            &["frobnicate"][..],
            &["catalan"],
            &["catalan", "--k", "1,2", "--lambda", "2,1"],
            &["catalan", "--k", "1,x"],
            &["catalan", "--lambda", "1,2"],
            &["paths", "--k", "1", "--bogus"],
            &["cone", "/nonexistent/cone.txt", "--pi"],
            &["cone", "/nonexistent/cone.txt"],
            &["scan", "--max", "2"],
        ] {
            let o = run_args(args);
            assert_eq!(o.exit_code, 2, "{args:?}: {o:?}");
            assert!(!o.stderr.is_empty());
            assert!(o.stdout.is_empty());
        }
    }

    #[test]
    fn help_goes_to_stdout() {
        let o = run_args(&["--help"]);
        assert_eq!(o.exit_code, 0);
        assert!(o.stdout.contains("catalan"));
    }

    #[test]
    fn grid_round_trip() {
        let k = KVector::parse("1,1,3,1").unwrap();
        let poly = verify::refined_catalan(&k).unwrap();
        let tsv = grid_tsv(&poly).unwrap();
        assert_eq!(parse_grid_tsv(&tsv).unwrap(), poly);
        let small = grid_tsv(&verify::refined_catalan(&KVector::parse("1,2").unwrap()).unwrap()).unwrap();
        assert_eq!(small, "t\\q\t0\t1\n0\t0\t1\n1\t1\t0\n");
    }

    #[test]
    fn paths_listing() {
        let o = run_args(&["paths", "--k", "1,1,1"]);
        let lines: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(lines[0], "ranks\teast_runs\tarea\tbounce");
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[1], "0,1,2\t0,0,3\t3\t0");
    }
}
