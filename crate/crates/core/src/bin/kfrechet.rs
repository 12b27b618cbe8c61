//! Command-line front end.
//!
//! Every subcommand prints one JSON object on stdout with an `answer` field
//! and exits 0 when it is true, 1 when it is false. Errors go to stderr with
//! exit status 2.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kfrechet::approx::approximate_k;
use kfrechet::boxes::{build_box_instance, normalize_formula, parse_dimacs, solve_box_bruteforce, BoxInstance};
use kfrechet::config::tolerance_from_env;
use kfrechet::search::{minimize_epsilon_with, minimize_k, Method};
use kfrechet::selection::{
    decide_bruteforce, decide_fpt, decide_hausdorff, decide_strong_frechet, weak_frechet_witness, Selection,
};
use kfrechet::svg::render_svg;
use kfrechet::{parse_curve, FreeSpaceDiagram, PolyCurve};

#[derive(Parser)]
#[command(name = "kfrechet", version, about = "k-Fréchet distance and free space diagram tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most k components cover both parameter spaces
    Decide {
        #[command(flatten)]
        curves: CurveArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Algo::Fpt)]
        algo: Algo,
    },
    /// Smallest number of covering components at a fixed distance
    MinimizeK {
        #[command(flatten)]
        curves: CurveArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
    },
    /// Smallest distance at which k components suffice
    MinimizeEps {
        #[command(flatten)]
        curves: CurveArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Render the free space diagram as SVG
    FreespaceSvg {
        #[command(flatten)]
        curves: CurveArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated component ids to outline
        #[arg(long, value_delimiter = ',')]
        select: Vec<usize>,
    },
    /// Build a box problem instance from a DIMACS CNF formula
    Boxgen {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve a box problem instance exhaustively
    Boxsolve {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(clap::Args)]
struct CurveArgs {
    /// Curve P: one `x y` vertex per line, or JSON {"vertices": [[x, y], ...]}
    #[arg(long)]
    p: PathBuf,
    /// Curve Q, same format as P
    #[arg(long)]
    q: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Brute,
    Fpt,
    /// Greedy; answers yes only when its selection fits in k, so it can miss
    Approx,
    Weak,
    Hausdorff,
    /// Classic (strong) Fréchet distance
    Frechet,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Approx,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            println!("{report}");
            if report["answer"] == Value::Bool(true) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_curves(args: &CurveArgs) -> Result<(PolyCurve, PolyCurve), String> {
    let load = |path: &Path| parse_curve(&read(path)?).map_err(|e| format!("{}: {e}", path.display()));
    Ok((load(&args.p)?, load(&args.q)?))
}

fn diagram(args: &CurveArgs, eps: f64) -> Result<(PolyCurve, PolyCurve, FreeSpaceDiagram), String> {
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(format!("--eps must be a non-negative number, got {eps}"));
    }
    let tol = tolerance_from_env()?;
    let (p, q) = load_curves(args)?;
    let d = FreeSpaceDiagram::with_tolerance(&p, &q, eps, tol);
    Ok((p, q, d))
}

fn ids(s: Option<Selection>) -> Value {
    s.map_or(Value::Null, |s| json!(s.ids()))
}

fn run(command: Command) -> Result<Value, String> {
    match command {
        Command::Decide { curves, eps, k, algo } => {
            let (_, _, d) = diagram(&curves, eps)?;
            let (answer, selection) = match algo {
                Algo::Brute => {
                    let s = decide_bruteforce(&d, k);
                    (s.is_some(), ids(s))
                }
                Algo::Fpt => {
                    let s = decide_fpt(&d, k);
                    (s.is_some(), ids(s))
                }
                Algo::Approx => {
                    let s = approximate_k(&d).map(|a| a.selection).filter(|s| s.len() <= k);
                    (s.is_some(), ids(s))
                }
                Algo::Weak => {
                    let s = weak_frechet_witness(&d).map(|id| Selection::new(vec![id]));
                    (s.is_some(), ids(s))
                }
                Algo::Hausdorff => {
                    let yes = decide_hausdorff(&d);
                    let all = yes.then(|| (0..d.component_count()).collect());
                    (yes, ids(all))
                }
                Algo::Frechet => (decide_strong_frechet(&d), Value::Null),
            };
            Ok(json!({
                "answer": answer,
                "components": d.component_count(),
                "selection": selection,
                "z": d.z(),
            }))
        }
        Command::MinimizeK { curves, eps, method } => {
            let (_, _, d) = diagram(&curves, eps)?;
            let method = match method {
                MethodArg::Exact => Method::Exact,
                MethodArg::Approx => Method::Approx,
            };
            let best = minimize_k(&d, method);
            Ok(json!({
                "answer": best.is_some(),
                "components": d.component_count(),
                "k": best.as_ref().map(|b| b.k),
                "selection": ids(best.map(|b| b.selection)),
                "z": d.z(),
            }))
        }
        Command::MinimizeEps { curves, k, tol } => {
            let cmp_tol = tolerance_from_env()?;
            let (p, q) = load_curves(&curves)?;
            let eps = minimize_epsilon_with(&p, &q, k, tol, cmp_tol).map_err(|e| e.to_string())?;
            Ok(json!({ "answer": true, "epsilon": eps, "k": k, "tol": tol }))
        }
        Command::FreespaceSvg { curves, eps, out, select } => {
            let (p, q, d) = diagram(&curves, eps)?;
            let svg = render_svg(&d, &p, &q, &select).map_err(|e| e.to_string())?;
            fs::write(&out, svg).map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(json!({
                "answer": true,
                "components": d.component_count(),
                "out": out.display().to_string(),
            }))
        }
        Command::Boxgen { cnf, out } => {
            let f = parse_dimacs(&read(&cnf)?).map_err(|e| format!("{}: {e}", cnf.display()))?;
            let f = normalize_formula(&f).map_err(|e| e.to_string())?;
            let inst = build_box_instance(&f).map_err(|e| e.to_string())?;
            fs::write(&out, inst.to_json() + "\n").map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(json!({
                "answer": true,
                "bound": inst.bound,
                "boxes": inst.boxes.len(),
                "k": inst.k,
                "out": out.display().to_string(),
            }))
        }
        Command::Boxsolve { input } => {
            let inst = BoxInstance::from_json(&read(&input)?).map_err(|e| format!("{}: {e}", input.display()))?;
            let sel = solve_box_bruteforce(&inst);
            Ok(json!({
                "answer": sel.is_some(),
                "boxes": inst.boxes.len(),
                "k": inst.k,
                "selection": sel,
            }))
        }
    }
}
