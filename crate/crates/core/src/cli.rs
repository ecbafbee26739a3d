//! Command-line front end. [`run`] takes the argument list and output streams and returns
//! the exit status: 0 on success, 1 when a requested check fails, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::axioms::{run_check, structure_constants, CheckName, CheckReport};
use crate::error::{Error, Result};
use crate::families::{
    build_basis, dimension_profile, profile_discrepancies, AlgebraFamily, FamilyKind, FamilyParams, GradedBasis,
};
use crate::graded::{GradedMatrix, SignRule};
use crate::json::{basis_from_json, matrix_from_json, to_canonical_json};
use crate::parafermions;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "z2lie",
    version,
    about = "Exact Z2 x Z2-graded matrix Lie algebras and their identities"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Build a homogeneous basis and write it as JSON.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        io: OutArgs,
    },
    /// Print measured and printed dimensions of the graded components.
    Dims {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        io: OutArgs,
    },
    /// Run verification checks and write their reports.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated checks: axioms, jacobi, closure, symmetry, generation, cartan, permutation, identities.
        #[arg(long, value_delimiter = ',', default_value = "axioms")]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = RuleArg::Gla)]
        sign_rule: RuleArg,
        /// Load the basis from a JSON file instead of building it.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        io: OutArgs,
    },
    /// Export the structure constants of a basis.
    Structconst {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = RuleArg::Gla)]
        sign_rule: RuleArg,
        /// Load the basis from a JSON file instead of building it.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        io: OutArgs,
    },
    /// Check the parafermion triple relations in so_q(2n+1).
    Parafermion {
        /// Number of generators of each sign.
        #[arg(long)]
        n: usize,
        /// Generators in the first sort (0 to n).
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        io: OutArgs,
    },
    /// Apply one matrix operation to JSON inputs.
    Eval {
        #[arg(value_enum)]
        op: EvalOp,
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RuleArg::Gla)]
        sign_rule: RuleArg,
        #[command(flatten)]
        io: OutArgs,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// gl, sl, so-graded, sp, so-even or so-odd.
    family: Option<String>,
    /// Rank parameter of sp, so-even and so-odd.
    #[arg(long)]
    n: Option<usize>,
    /// Size of the first block of sp, so-even and so-odd (0 to n).
    #[arg(long)]
    p: Option<usize>,
    /// Block sizes p,q,r,s of the graded families.
    #[arg(long, value_delimiter = ',')]
    sig: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Write JSON to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print a per-check summary to stderr.
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    Gla,
    Glsa,
}

impl From<RuleArg> for SignRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Gla => SignRule::Gla,
            RuleArg::Glsa => SignRule::Glsa,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EvalOp {
    Bracket,
    Transpose,
    Product,
}

impl FamilyArgs {
    fn is_empty(&self) -> bool {
        self.family.is_none() && self.n.is_none() && self.p.is_none() && self.sig.is_none()
    }

    fn resolve(&self) -> Result<AlgebraFamily> {
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| Error::InvalidParameters("missing family name".into()))?;
        let kind: FamilyKind = name.parse()?;
        let params = if kind.is_classical() {
            if self.sig.is_some() {
                return Err(Error::InvalidParameters(format!("{name} takes --n and --p, not --sig")));
            }
            match (self.n, self.p) {
                (Some(n), Some(p)) => FamilyParams::Classical { n, p },
                _ => return Err(Error::InvalidParameters(format!("{name} needs --n and --p"))),
            }
        } else {
            if self.n.is_some() || self.p.is_some() {
                return Err(Error::InvalidParameters(format!("{name} takes --sig, not --n/--p")));
            }
            match self.sig.as_deref() {
                Some(&[p, q, r, s]) => FamilyParams::Graded { p, q, r, s },
                _ => return Err(Error::InvalidParameters(format!("{name} needs --sig p,q,r,s"))),
            }
        };
        AlgebraFamily::new(kind, params)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_or_build(family: &FamilyArgs, input: Option<&Path>) -> Result<GradedBasis> {
    match input {
        Some(path) => {
            let basis = basis_from_json(&read(path)?)?;
            if !family.is_empty() && family.resolve()? != *basis.family() {
                return Err(Error::InvalidParameters(format!(
                    "{} holds a basis of {}, not of the requested family",
                    path.display(),
                    basis.family()
                )));
            }
            Ok(basis)
        }
        None => build_basis(&family.resolve()?),
    }
}

fn emit<T: Serialize>(value: &T, io: &OutArgs, stdout: &mut dyn Write) -> Result<()> {
    let mut text = to_canonical_json(value)?;
    text.push('\n');
    match &io.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn report_table(reports: &[CheckReport]) -> String {
    let mut out = format!(
        "{:<28} {:>9} {:>7}  {:<5} {:>10}\n",
        "check", "cases", "failed", "pass", "seconds"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<28} {:>9} {:>7}  {:<5} {:>10.3}",
            r.check,
            r.cases_run,
            r.failed_cases,
            r.pass,
            r.elapsed.as_secs_f64()
        );
    }
    out
}

/// Report JSON shared by `verify` and the library round trip.
#[derive(Serialize)]
pub struct VerifyOutput {
    pub family: AlgebraFamily,
    pub rule: SignRule,
    pub pass: bool,
    pub reports: Vec<CheckReport>,
}

/// Runs the named checks on `basis` in order.
pub fn verify_basis(basis: &GradedBasis, checks: &[CheckName], rule: SignRule) -> Result<VerifyOutput> {
    let reports = checks
        .iter()
        .map(|&c| run_check(c, basis, rule))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyOutput {
        family: *basis.family(),
        rule,
        pass: reports.iter().all(CheckReport::passed),
        reports,
    })
}

fn dims_table(
    f: &AlgebraFamily,
    basis: &GradedBasis,
    err: &mut dyn Write,
    out: &mut dyn Write,
) -> Result<serde_json::Value> {
    let formula = dimension_profile(f);
    let measured = basis.profile();
    let discrepancies = profile_discrepancies(&formula, &measured);
    writeln!(out, "{f}")?;
    writeln!(out, "{:<8} {:>9} {:>9}", "degree", "measured", "formula")?;
    for d in crate::graded::Degree::ALL {
        writeln!(out, "{:<8} {:>9} {:>9}", d.to_string(), measured.get(d), formula.get(d))?;
    }
    writeln!(out, "{:<8} {:>9} {:>9}", "total", measured.total(), formula.total())?;
    for d in &discrepancies {
        writeln!(
            err,
            "WARN {f}: printed formula for degree {} evaluates to {}, measured {}",
            d.degree, d.formula, d.measured
        )?;
    }
    Ok(json!({
        "family": f,
        "measured": measured,
        "formula": formula,
        "discrepancies": discrepancies,
    }))
}

fn eval(op: EvalOp, a: &Path, b: Option<&Path>, rule: SignRule) -> Result<GradedMatrix> {
    let x = matrix_from_json(&read(a)?)?;
    let second = || -> Result<GradedMatrix> {
        let path = b.ok_or_else(|| Error::InvalidParameters("this operation needs two matrices".into()))?;
        matrix_from_json(&read(path)?)
    };
    match op {
        EvalOp::Transpose => {
            if b.is_some() {
                return Err(Error::InvalidParameters("transpose takes one matrix".into()));
            }
            Ok(x.graded_transpose())
        }
        EvalOp::Bracket => x.bracket(&second()?, rule),
        EvalOp::Product => x.product(&second()?),
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.verb {
        Verb::Build { family, io } => {
            let basis = build_basis(&family.resolve()?)?;
            if io.verbose {
                writeln!(
                    stderr,
                    "{}: {} elements, profile {:?}",
                    basis.family(),
                    basis.len(),
                    basis.profile().as_array()
                )?;
            }
            emit(&basis, &io, stdout)?;
            Ok(EXIT_OK)
        }
        Verb::Dims { family, io } => {
            let f = family.resolve()?;
            let basis = build_basis(&f)?;
            let mut table = Vec::new();
            let value = dims_table(&f, &basis, stderr, &mut table)?;
            stdout.write_all(&table)?;
            if io.out.is_some() {
                emit(&value, &io, stdout)?;
            }
            Ok(EXIT_OK)
        }
        Verb::Verify {
            family,
            checks,
            sign_rule,
            input,
            io,
        } => {
            let checks = checks
                .iter()
                .map(|c| c.trim().parse())
                .collect::<Result<Vec<CheckName>>>()?;
            let basis = load_or_build(&family, input.as_deref())?;
            let output = verify_basis(&basis, &checks, sign_rule.into())?;
            if io.verbose {
                stderr.write_all(report_table(&output.reports).as_bytes())?;
            }
            emit(&output, &io, stdout)?;
            Ok(if output.pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Verb::Structconst {
            family,
            sign_rule,
            input,
            io,
        } => {
            let basis = load_or_build(&family, input.as_deref())?;
            let sc = structure_constants(&basis, sign_rule.into())?;
            if io.verbose {
                writeln!(stderr, "{}: {} nonzero constants", basis.family(), sc.entries.len())?;
            }
            emit(&sc, &io, stdout)?;
            Ok(EXIT_OK)
        }
        Verb::Parafermion { n, q, io } => {
            let (summary, reports) = parafermions::run_all(n, q)?;
            if io.verbose {
                stderr.write_all(report_table(&reports).as_bytes())?;
            }
            emit(&summary, &io, stdout)?;
            Ok(if summary.pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Verb::Eval {
            op,
            a,
            b,
            sign_rule,
            io,
        } => {
            let m = eval(op, &a, b.as_deref(), sign_rule.into())?;
            emit(&m, &io, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the verb.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("z2lie").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn build_sp_has_ten_elements() {
        let (code, out, _) = call(&["build", "sp", "--n", "2", "--p", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), 10);
    }

    #[test]
    fn dims_warns_on_printed_formula() {
        let (code, out, err) = call(&["dims", "so-odd", "--n", "3", "--p", "1"]);
        assert_eq!(code, 0);
        let row: Vec<&str> = out
            .lines()
            .find(|l| l.starts_with("(0,0)"))
            .unwrap()
            .split_whitespace()
            .collect();
        assert_eq!(row, ["(0,0)", "7", "-1"]);
        assert!(err.starts_with("WARN"), "{err}");
        assert!(err.contains("-1"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["build", "sp", "--n", "2"]).0, 2);
        assert_eq!(call(&["build", "sl", "--n", "2", "--p", "1"]).0, 2);
        assert_eq!(call(&["build", "nope", "--n", "2", "--p", "1"]).0, 2);
        assert_eq!(
            call(&["verify", "sp", "--n", "2", "--p", "1", "--checks", "bogus"]).0,
            2
        );
        assert_eq!(call(&["build", "sp", "--n", "2", "--p", "1", "--frobnicate"]).0, 2);
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn failing_check_exits_one() {
        let (code, out, _) = call(&[
            "verify",
            "sl",
            "--sig",
            "1,1,0,0",
            "--checks",
            "closure",
            "--sign-rule",
            "glsa",
        ]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], false);
    }
}
