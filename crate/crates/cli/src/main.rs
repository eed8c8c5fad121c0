use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use faddeeva::bench::{
    accuracy_table, emit, error_sweep, parse_methods, timing_run, Format, GridSpec, Method,
    MethodSpec, Precision, SweepRecord,
};
use faddeeva::bounds::{abs_bound, component_bounds, constants, rel_bound};
use faddeeva::{select_branch, Complex64, EvalParams, FaddeevaError, DEFAULT_ORDER};

const EXIT_PARAMETER: u8 = 2;
const EXIT_CHECK: u8 = 3;

#[derive(Parser)]
#[command(
    name = "faddeeva",
    version,
    about = "Faddeeva function w(z): evaluation, error sweeps and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodName {
    Trap,
    Weideman,
    Cf,
    Zaghloul,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridName {
    Polar,
    Cartesian,
}

#[derive(Clone, Copy, ValueEnum)]
enum PrecisionName {
    /// binary64
    D,
    /// double-double
    X,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate w(z) at one point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, allow_hyphen_values = true)]
        im: f64,
        /// Order: N for trap and weideman, n for cf.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "trap")]
        method: MethodName,
    },
    /// Maximum errors of w_N against the double-double reference over a grid.
    Sweep {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "polar")]
        grid: GridName,
        #[arg(long, value_enum, default_value = "d")]
        precision: PrecisionName,
        /// Keep every k-th grid point. Defaults to 1 for binary64 and 16 for double-double.
        #[arg(long)]
        stride: Option<usize>,
        /// Output file; `.json` selects JSON, anything else CSV.
        #[arg(long)]
        out: PathBuf,
        /// Exit with status 3 if any error exceeds its bound plus the rounding floor.
        #[arg(long)]
        check: bool,
    },
    /// Accuracy of several methods over a grid.
    Table {
        /// Comma-separated list, e.g. "trap(11),weideman(40),cf(9),zaghloul(1/2,38)".
        #[arg(long)]
        methods: String,
        #[arg(long, value_enum, default_value = "polar")]
        grid: GridName,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Single-threaded timings over a grid.
    Bench {
        #[arg(long, default_value_t = 25)]
        reps: usize,
        #[arg(long, default_value = "trap(11),weideman(40),cf(9),zaghloul(1/2,38)")]
        methods: String,
        #[arg(long, value_enum, default_value = "polar")]
        grid: GridName,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the bound constants and the bounds for N = 0..=n.
    Bounds {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n: u32,
    },
}

enum Failure {
    Lib(FaddeevaError),
    Check(String),
}

impl From<FaddeevaError> for Failure {
    fn from(e: FaddeevaError) -> Self {
        Self::Lib(e)
    }
}

fn grid_of(name: GridName, stride: usize) -> Result<GridSpec, FaddeevaError> {
    match name {
        GridName::Polar => GridSpec::default_polar(),
        GridName::Cartesian => GridSpec::default_cartesian(),
    }
    .with_stride(stride)
}

fn eval(re: f64, im: f64, n: Option<u32>, method: MethodName) -> Result<(), Failure> {
    let z = Complex64::new(re, im);
    let spec = match method {
        MethodName::Trap => MethodSpec::Trap(n.unwrap_or(DEFAULT_ORDER)),
        MethodName::Weideman => MethodSpec::Weideman(n.unwrap_or(40) as usize),
        MethodName::Cf => MethodSpec::Cf(n.unwrap_or(9)),
        MethodName::Zaghloul => MethodSpec::Zaghloul {
            a: 0.5,
            terms: n.unwrap_or(38),
        },
    };
    let m = Method::prepare(spec)?;
    let w = m.eval(z)?;
    println!("method  {spec}");
    println!("z       {:.17e} {:+.17e}i", z.re, z.im);
    println!("w(z)    {:.17e} {:+.17e}i", w.re, w.im);
    if let MethodSpec::Trap(n) = spec {
        let p = EvalParams::new(n)?;
        let q = Complex64::new(z.re.abs(), z.im.abs());
        println!("branch  {} (at {q} after symmetry)", select_branch(q, &p));
        println!("bound   abs {:.3e}", abs_bound(n));
        if z.im >= 0.0 {
            println!("        rel {:.3e}", rel_bound(n));
        }
    }
    Ok(())
}

fn sweep_check(records: &[SweepRecord], floor: f64) -> Result<(), Failure> {
    let bad: Vec<String> = records
        .iter()
        .filter(|r| !(r.max_abs_err <= r.bound_abs + floor && r.max_rel_err <= r.bound_rel + floor))
        .map(|r| {
            format!(
                "N={} abs {:e} (bound {:e}) rel {:e} (bound {:e})",
                r.n, r.max_abs_err, r.bound_abs, r.max_rel_err, r.bound_rel
            )
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(bad.join("\n")))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Eval { re, im, n, method } => eval(re, im, n, method),
        Cmd::Sweep {
            n_min,
            n_max,
            grid,
            precision,
            stride,
            out,
            check,
        } => {
            if n_min > n_max {
                return Err(FaddeevaError::Parameter(format!(
                    "--n-min {n_min} exceeds --n-max {n_max}"
                ))
                .into());
            }
            let (prec, default_stride, floor) = match precision {
                PrecisionName::D => (Precision::Binary64, 1, 4e-15),
                PrecisionName::X => (Precision::Xprec, 16, 1e-26),
            };
            let g = grid_of(grid, stride.unwrap_or(default_stride))?;
            let ns: Vec<u32> = (n_min..=n_max).collect();
            let records = error_sweep(&ns, &g, prec)?;
            for r in &records {
                eprintln!(
                    "N={:2} max abs {:.3e} (bound {:.3e})  max rel {:.3e} (bound {:.3e})",
                    r.n, r.max_abs_err, r.bound_abs, r.max_rel_err, r.bound_rel
                );
            }
            if let Some(r) = records.first() {
                if r.excluded > 0 || r.rel_excluded > 0 {
                    eprintln!("excluded {} points (reference not finite), {} from relative error (|w| = 0)", r.excluded, r.rel_excluded);
                }
            }
            emit(&records, Format::from_path(&out), &out)?;
            if check {
                sweep_check(&records, floor)?;
            }
            Ok(())
        }
        Cmd::Table {
            methods,
            grid,
            stride,
            out,
        } => {
            let specs = parse_methods(&methods)?;
            let rows = accuracy_table(&specs, &grid_of(grid, stride)?)?;
            for r in &rows {
                eprintln!(
                    "{:20} abs {:.3e}  rel {:.3e}  ({} points)",
                    r.method, r.max_abs, r.max_rel, r.points
                );
            }
            emit(&rows, Format::from_path(&out), &out)?;
            Ok(())
        }
        Cmd::Bench {
            reps,
            methods,
            grid,
            stride,
            out,
        } => {
            let g = grid_of(grid, stride)?;
            let mut records = Vec::new();
            for spec in parse_methods(&methods)? {
                let m = Method::prepare(spec)?;
                let t = timing_run(&m, &g, reps)?;
                eprintln!(
                    "{:20} {:.4e} s +- {:.1e} s ({} reps, {} points)",
                    t.method, t.mean_seconds, t.sd_seconds, t.reps, t.points
                );
                records.push(t);
            }
            emit(&records, Format::from_path(&out), &out)?;
            Ok(())
        }
        Cmd::Bounds { n } => {
            let k = constants();
            println!("c_a = {:.6}", k.c_a);
            println!("c_r = {:.6}", k.c_r);
            println!("c*  = {:.6}", k.c_star);
            println!("C1  = {:.6}", k.big_c1);
            println!("C2  = {:.6}", k.big_c2);
            println!(
                "{:>3} {:>12} {:>12} {:>12} {:>12}",
                "N", "abs_bound", "rel_bound", "discret.", "truncation"
            );
            for m in 0..=n {
                let (trap, trunc) = component_bounds(m);
                println!(
                    "{m:>3} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}",
                    abs_bound(m),
                    rel_bound(m),
                    trap,
                    trunc
                );
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed:\n{msg}");
            ExitCode::from(EXIT_CHECK)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_parameter_error() {
                ExitCode::from(EXIT_PARAMETER)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
