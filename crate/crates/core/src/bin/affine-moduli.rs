use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use affine_moduli::action::{Group, OrbitDecider, ORBIT_TOL};
use affine_moduli::io::{self, ConnectionDocument, OrbitReport};
use affine_moduli::moduli_map::{self, Bounds, Branch, CURVE_TOL, T_WINDOW};
use affine_moduli::verify::{self, Suite};

const SEED_ENV: &str = "AFFINE_MODULI_SEED";

const EXIT_PROPERTY_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "affine-moduli", version, about = "Invariants and moduli of Type-A affine surface connections")]
struct Cli {
    /// Relative tolerance for witness residuals and torsion checks.
    #[arg(long, global = true, default_value_t = ORBIT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report torsion, Ricci tensors, signature, invariants, region and isotropy.
    Classify {
        /// Connection document (JSON).
        file: PathBuf,
    },
    /// Decide whether two connections lie in the same orbit.
    OrbitCheck {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = GroupArg::Glplus)]
        group: GroupArg,
        /// Skip the invariant shortcut and always search for a witness.
        #[arg(long)]
        no_invariant_screen: bool,
    },
    /// Write sigma_plus.csv, sigma_minus.csv and regions.csv.
    Figure {
        /// xmin,xmax,ymin,ymax
        #[arg(long, default_value = "-10,10,0,10", allow_hyphen_values = true)]
        bounds: String,
        /// Grid intervals per axis.
        #[arg(long, default_value_t = 200)]
        resolution: usize,
        /// Output directory, or a file-name prefix.
        #[arg(long, default_value = "")]
        out_prefix: String,
        /// Samples per curve.
        #[arg(long, default_value_t = 2001)]
        curve_samples: usize,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Overridden by AFFINE_MODULI_SEED when set.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Glplus,
    Gl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_document(path: &Path) -> Result<ConnectionDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ConnectionDocument::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(format!("--tol must be positive, got {}", cli.tol));
    }
    match cli.command {
        Command::Classify { file } => {
            let doc = read_document(&file)?;
            let gamma = doc.christoffel().map_err(|e| e.to_string())?;
            let report = io::classify(&gamma, doc.label.clone(), cli.tol).map_err(|e| e.to_string())?;
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::OrbitCheck {
            a,
            b,
            group,
            no_invariant_screen,
        } => {
            let ga = read_document(&a)?.christoffel().map_err(|e| e.to_string())?;
            let gb = read_document(&b)?.christoffel().map_err(|e| e.to_string())?;
            let group = match group {
                GroupArg::Glplus => Group::GlPlus,
                GroupArg::Gl => Group::Gl,
            };
            let mut decider = OrbitDecider::new(group, cli.tol);
            if no_invariant_screen {
                decider = decider.without_invariant_screen();
            }
            let verdict = decider.decide(&ga, &gb).map_err(|e| e.to_string())?;
            let report = OrbitReport::from(verdict);
            println!("{}", report.to_json());
            Ok(match report.equivalent {
                None => ExitCode::from(EXIT_INCONCLUSIVE),
                Some(_) => ExitCode::SUCCESS,
            })
        }
        Command::Figure {
            bounds,
            resolution,
            out_prefix,
            curve_samples,
        } => {
            let bounds: Bounds = bounds.parse().map_err(|e: affine_moduli::Error| e.to_string())?;
            let plus = moduli_map::sample_curve(Branch::Plus, T_WINDOW, curve_samples).map_err(|e| e.to_string())?;
            let minus = moduli_map::sample_curve(Branch::Minus, T_WINDOW, curve_samples).map_err(|e| e.to_string())?;
            let grid = moduli_map::region_grid(bounds, resolution, CURVE_TOL).map_err(|e| e.to_string())?;
            for (name, body) in [
                ("sigma_plus.csv", io::curve_csv(&plus)),
                ("sigma_minus.csv", io::curve_csv(&minus)),
                ("regions.csv", io::grid_csv(&grid)),
            ] {
                let path = output_path(&out_prefix, name);
                fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
                eprintln!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, samples, seed } => {
            let suite: Suite = suite.parse().map_err(|e: affine_moduli::Error| e.to_string())?;
            let seed = match std::env::var(SEED_ENV) {
                Ok(v) => v
                    .trim()
                    .parse::<u64>()
                    .map_err(|e| format!("{SEED_ENV}={v:?}: {e}"))?,
                Err(_) => seed,
            };
            if samples == 0 {
                eprintln!("warning: --samples=0, sampled properties check nothing");
            }
            let report = verify::run(suite, samples, seed);
            print!("{}", report.table());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_PROPERTY_FAILURE)
            })
        }
    }
}

/// A directory prefix gets the file name joined; anything else is prepended verbatim.
fn output_path(prefix: &str, name: &str) -> PathBuf {
    if prefix.is_empty() {
        return PathBuf::from(name);
    }
    let p = Path::new(prefix);
    if p.is_dir() || prefix.ends_with(std::path::MAIN_SEPARATOR) {
        p.join(name)
    } else {
        PathBuf::from(format!("{prefix}{name}"))
    }
}
