//! Command-line front end.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use concave_fs_core::fekete_szego::{phi_closed, phi_oracle, scan_thresholds, thresholds};
use concave_fs_core::regions::{
    cardioid_boundary, f_zeta_series, hankel2_extremal, lambda1_extremal, omega_boundary, unit_circle, wp_sample,
    RegionSample,
};
use concave_fs_core::{PoleParam, C64};

use crate::format::{fixed9, sig9, write_region_csv, write_svg, write_thresholds_csv};
use crate::verify::{run_suite, Suite};

pub const GRAMMAR: &str = "\
usage:
  concave-fs thresholds (--P <f> | --p <f>)
  concave-fs phi (--P <f> | --p <f>) --mu <f> [--oracle [--grid <n>]]
  concave-fs scan-thresholds --P-min <f> --P-max <f> --step <f> --out <path>
  concave-fs region --p <f> --set omega|wp|cardioid|circle [--samples <n>] --out <path> [--svg <path>]
  concave-fs extremal --p <f> --zeta <re>,<im> --order <n>
  concave-fs verify --suite quadmax|phi|rep|bodies|regions|all --samples <n> --seed <u64>
";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "concave-fs",
    version,
    about = "Fekete-Szego bounds for concave functions with a pole"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Pole {
    /// P = p + 1/p, must exceed 2
    #[arg(long = "P", value_name = "f")]
    big_p: Option<f64>,
    /// pole in (0, 1)
    #[arg(long = "p", value_name = "f")]
    p: Option<f64>,
}

impl Pole {
    fn resolve(&self) -> Result<PoleParam, Usage> {
        let pp = match (self.big_p, self.p) {
            (Some(big_p), None) => PoleParam::from_big_p(big_p),
            (None, Some(p)) => PoleParam::from_p(p),
            _ => return Err(Usage("exactly one of --P and --p is required".into())),
        };
        pp.map_err(|e| Usage(format!("invalid pole: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetName {
    Omega,
    Wp,
    Cardioid,
    Circle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the threshold values of μ.
    Thresholds(Pole),
    /// Evaluate the sharp bound Φ(P, μ).
    Phi {
        #[command(flatten)]
        pole: Pole,
        #[arg(long, value_name = "f", allow_negative_numbers = true)]
        mu: f64,
        /// Also maximize over a polar grid of the disk.
        #[arg(long)]
        oracle: bool,
        /// Radial grid size for --oracle; the angular size is 4(n - 1).
        #[arg(long, value_name = "n", requires = "oracle", default_value_t = 401)]
        grid: usize,
    },
    /// Write the thresholds over a range of P as CSV.
    ScanThresholds {
        #[arg(long = "P-min", value_name = "f")]
        p_min: f64,
        #[arg(long = "P-max", value_name = "f")]
        p_max: f64,
        #[arg(long, value_name = "f")]
        step: f64,
        #[arg(long, value_name = "path")]
        out: PathBuf,
    },
    /// Write a region sample as CSV (and optionally SVG).
    Region {
        #[arg(long = "p", value_name = "f")]
        p: f64,
        #[arg(long, value_enum)]
        set: SetName,
        #[arg(long, value_name = "n")]
        samples: Option<usize>,
        #[arg(long, value_name = "path")]
        out: PathBuf,
        #[arg(long, value_name = "path")]
        svg: Option<PathBuf>,
    },
    /// Coefficients of the extremal function f_ζ.
    Extremal {
        #[arg(long = "p", value_name = "f")]
        p: f64,
        #[arg(long, value_name = "re,im", allow_hyphen_values = true)]
        zeta: String,
        #[arg(long, value_name = "n")]
        order: usize,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_name = "n")]
        samples: usize,
        #[arg(long, value_name = "u64")]
        seed: u64,
    },
}

/// A rejected flag value.
#[derive(Debug)]
struct Usage(String);

enum Failure {
    Usage(Usage),
    Verify,
    Io(anyhow::Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs the command line `argv` (including the program name). Returns the
/// exit code: 0 on success, 1 on a failed verification or IO error, 2 on a
/// usage error.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", first_line(&e.to_string()));
            let _ = write!(err, "{GRAMMAR}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(Usage(msg))) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = write!(err, "{GRAMMAR}");
            EXIT_USAGE
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "verification failed");
            EXIT_FAILED
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_FAILED
        }
    }
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("").trim_start_matches("error: ")
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Thresholds(pole) => print_thresholds(pole.resolve()?, out)?,
        Command::Phi { pole, mu, oracle, grid } => {
            let pp = pole.resolve()?;
            if !mu.is_finite() {
                return Err(Usage("--mu must be finite".into()).into());
            }
            let (value, branch) = phi_closed(pp, mu).map_err(|e| Failure::Io(anyhow::anyhow!("{e}")))?;
            writeln!(out, "{} {}", fixed9(value), branch.name())?;
            if oracle {
                if grid < 101 {
                    return Err(Usage("--grid must be at least 101".into()).into());
                }
                let n_angular = 4 * (grid - 1);
                writeln!(
                    out,
                    "{} oracle {grid}x{n_angular}",
                    fixed9(phi_oracle(pp, mu, grid, n_angular))
                )?;
            }
        }
        Command::ScanThresholds {
            p_min,
            p_max,
            step,
            out: path,
        } => {
            let rows = scan_thresholds(p_min, p_max, step).map_err(|e| Usage(format!("invalid range: {e}")))?;
            write_thresholds_csv(&rows, create(&path)?)?;
            writeln!(out, "wrote {} rows to {}", rows.len(), path.display())?;
        }
        Command::Region {
            p,
            set,
            samples,
            out: path,
            svg,
        } => {
            let pp = PoleParam::from_p(p).map_err(|e| Usage(format!("invalid pole: {e}")))?;
            let sample = region_sample(pp, set, samples)?;
            write_region_csv(std::slice::from_ref(&sample), create(&path)?)?;
            if let Some(svg) = svg {
                write_svg(std::slice::from_ref(&sample), create(&svg)?)?;
            }
            writeln!(
                out,
                "wrote {} {} points to {}",
                sample.points.len(),
                sample.tag.name(),
                path.display()
            )?;
        }
        Command::Extremal { p, zeta, order } => {
            let pp = PoleParam::from_p(p).map_err(|e| Usage(format!("invalid pole: {e}")))?;
            let zeta = parse_complex(&zeta)?;
            if zeta.norm().is_nan() || zeta.norm() > 1.0 + concave_fs_core::numeric::DISK_TOL {
                return Err(Usage("--zeta must lie in the closed unit disk".into()).into());
            }
            if order < 3 {
                return Err(Usage("--order must be at least 3".into()).into());
            }
            print_extremal(pp, zeta, order, out)?;
        }
        Command::Verify { suite, samples, seed } => {
            if samples == 0 {
                return Err(Usage("--samples must be positive".into()).into());
            }
            let reports = run_suite(suite, samples, seed);
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
    ))
}

fn parse_complex(s: &str) -> Result<C64, Usage> {
    let bad = || Usage(format!("expected <re>,<im>, got {s:?}"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(C64::new(re, im))
}

const CURVE_POINTS: usize = 720;
const WP_POINTS: usize = 100_000;

/// `wp` uses a `n_r × 128 × 16` grid with `n_r = max(32, ⌈n/2048⌉)`.
fn region_sample(pp: PoleParam, set: SetName, samples: Option<usize>) -> Result<RegionSample, Usage> {
    let m = samples.unwrap_or(if set == SetName::Wp { WP_POINTS } else { CURVE_POINTS });
    if set != SetName::Wp && m < 16 {
        return Err(Usage("--samples must be at least 16".into()));
    }
    Ok(match set {
        SetName::Omega => omega_boundary(pp, m),
        SetName::Wp => wp_sample(pp, m.div_ceil(2048).max(32), 128, 16),
        SetName::Cardioid => cardioid_boundary(m),
        SetName::Circle => unit_circle(m),
    })
}

fn print_thresholds(pp: PoleParam, out: &mut dyn Write) -> anyhow::Result<()> {
    let th = thresholds(pp);
    let opt = |x: Option<f64>| x.map(sig9).unwrap_or_else(|| "none".into());
    let rows: [(&str, String); 15] = [
        ("P", sig9(th.big_p)),
        ("p", sig9(pp.p())),
        ("mu1", sig9(th.mu1)),
        ("mu1_prime", sig9(th.mu1_prime)),
        ("mu0_minus", sig9(th.mu0_minus)),
        ("mu0_plus", sig9(th.mu0_plus)),
        ("mu2", sig9(th.mu2)),
        ("mu3_minus", opt(th.mu3_minus)),
        ("mu3_plus", opt(th.mu3_plus)),
        ("mu4_minus", sig9(th.mu4_minus)),
        ("mu4", sig9(th.mu4())),
        ("mu_a", sig9(th.mu_a)),
        ("mu_b", sig9(th.mu_b)),
        ("P_star", sig9(th.big_p_star)),
        ("P_two", sig9(th.big_p_two)),
    ];
    for (k, v) in rows {
        writeln!(out, "{k} {v}")?;
    }
    Ok(())
}

/// `n,re,im` rows for `a₁ … a_order` of `f_ζ`, then `Λ₁` and `A₂A₄ - A₃²`.
fn print_extremal(pp: PoleParam, zeta: C64, order: usize, out: &mut dyn Write) -> anyhow::Result<()> {
    let to_anyhow = |e: concave_fs_core::Error| anyhow::anyhow!("{e}");
    let f = f_zeta_series(pp, zeta, order + 1).map_err(to_anyhow)?;
    writeln!(out, "n,re,im")?;
    for n in 1..=order {
        let a = f.coeff(n);
        writeln!(out, "{n},{},{}", sig9(a.re), sig9(a.im))?;
    }
    let l = lambda1_extremal(pp, zeta);
    writeln!(out, "lambda1,{},{}", sig9(l.re), sig9(l.im))?;
    if order >= 4 {
        let h = hankel2_extremal(pp, zeta).map_err(to_anyhow)?;
        writeln!(out, "hankel2,{},{}", sig9(h.re), sig9(h.im))?;
    }
    Ok(())
}
