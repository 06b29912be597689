use std::path::PathBuf;

use anyhow::{bail, Context as _};
use clap::{Parser, Subcommand, ValueEnum};
use latticelab_core::lattice::{cusp_l2, dirichlet_partial_sum, f_cubes, f_integral};
use latticelab_core::mahler::{mahler_g, mahler_m, mahler_n, Route};
use latticelab_core::numeric::Context;
use latticelab_core::registry::{f17, f30, Kind};
use latticelab_core::series::{lacunarity_scan, EtaExpression};

use crate::config::{Config, Layer};
use crate::parse::{parse_eta_expression, parse_lattice_spec, parse_recipe};
use crate::report::{emit, Format};
use crate::runner::{run, select};
use crate::series_json::{density_csv, DensityJson, SeriesJson};

#[derive(Debug, Parser)]
#[command(name = "latticelab", version, about = "Eta-product identities, lattice sums and Mahler measures")]
pub struct Cli {
    /// TOML file with any of: precision, guard_digits, parallelism, timeout_secs.
    #[arg(long, global = true, env = "LATTICELAB_CONFIG")]
    pub config: Option<PathBuf>,
    /// Working precision in decimal digits.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    #[arg(long, global = true)]
    pub guard_digits: Option<u32>,
    #[arg(long, global = true)]
    pub parallelism: Option<usize>,
    #[arg(long, global = true)]
    pub timeout_secs: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    M,
    N,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Auto,
    Hyper,
    Jensen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact q-expansion of an eta expression, as JSON.
    Expand {
        expr: String,
        #[arg(long, default_value_t = 50)]
        terms: usize,
    },
    /// Run registry records (`all` or ids) and print a report; exits nonzero
    /// iff a non-conjecture record does not pass.
    Verify {
        #[arg(default_value = "all")]
        ids: Vec<String>,
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long)]
        tolerance: Option<u32>,
        #[arg(long, default_value = "human")]
        format: String,
        /// Only records of this kind (coefficient-exact, numeric-theorem, conjecture).
        #[arg(long)]
        kind: Option<String>,
        /// List the selected records instead of running them.
        #[arg(long)]
        list: bool,
    },
    /// Lattice sum `F a b c d` or `F b c` via the eta-product integral.
    Sum {
        #[arg(num_args = 1..)]
        spec: Vec<String>,
        /// Also print the summation-by-cubes partial sum of this radius.
        #[arg(long)]
        cubes: Option<u32>,
    },
    /// Mahler measure m, n or g at a radical recipe such as `(1+sqrt(17))^2/4`.
    Mahler {
        family: Family,
        recipe: String,
        #[arg(long, value_enum, default_value = "auto")]
        route: RouteArg,
    },
    /// L(f,2) of a catalogued cusp form (f30, f17).
    Lseries {
        form: String,
        /// Also print the Dirichlet partial sum over this many coefficients.
        #[arg(long)]
        partial: Option<usize>,
    },
    /// Nonzero-coefficient density per window.
    ScanLacunarity {
        expr: String,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        window: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: ProfileFormat,
    },
}

/// Text to print and the process exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn cusp_form(id: &str) -> Option<EtaExpression> {
    match id {
        "f30" => Some(f30()),
        "f17" => Some(f17()),
        _ => None,
    }
}

pub fn execute(cli: Cli) -> anyhow::Result<Output> {
    let flags = Layer {
        precision: cli.precision,
        guard_digits: cli.guard_digits,
        parallelism: cli.parallelism,
        timeout_secs: cli.timeout_secs,
    };
    let config = Config::load(cli.config.as_deref(), &flags)?;
    let ctx = Context::with_guard(config.precision, config.guard_digits);
    let target = config.precision.saturating_sub(5).max(10);
    let digits = config.precision as usize;
    match cli.command {
        Command::Expand { expr, terms } => {
            let x = parse_eta_expression(&expr)?;
            let mut e = x.expand(terms)?;
            // report from the expression's own lead even if low terms cancel
            if let Some(lead) = x.min_lead24() {
                if let Ok(s) = e.series.rebase(lead) {
                    e.series = s;
                }
            }
            Ok(Output::ok(serde_json::to_string(&SeriesJson::from(&e))?))
        }
        Command::Verify { ids, terms, tolerance, format, kind, list } => {
            let format: Format = format.parse()?;
            let mut records = select(&ids)?;
            if let Some(k) = kind {
                let k = Kind::from_name(&k).with_context(|| format!("unknown kind `{k}`"))?;
                records.retain(|r| r.kind == k);
            }
            if list {
                let text = records.iter().map(|r| format!("{:<24} {:<20} {}", r.id, r.kind.name(), r.summary)).collect::<Vec<_>>();
                return Ok(Output::ok(text.join("\n")));
            }
            let report = run(&records, &config, terms, tolerance);
            Ok(Output { text: emit(&report, format), code: report.exit_code() })
        }
        Command::Sum { spec, cubes } => {
            let spec = parse_lattice_spec(&spec)?;
            let v = f_integral(&ctx, &spec, target)?;
            let mut text = format!("{spec} = {}\nerror estimate {}", v.value.to_decimal(digits), v.error_estimate.to_decimal(3));
            if let Some(r) = cubes {
                text.push_str(&format!("\ncubes(R={r}) = {:.12}", f_cubes(&spec, r)));
            }
            Ok(Output::ok(text))
        }
        Command::Mahler { family, recipe, route } => {
            let arg = parse_recipe(&recipe)?;
            let a = arg.value(&ctx)?;
            let route = match route {
                RouteArg::Auto => Route::Auto,
                RouteArg::Hyper => Route::Hyper,
                RouteArg::Jensen => Route::Jensen,
            };
            let (name, v) = match family {
                Family::M => ("m", mahler_m(&ctx, &a, route)?),
                Family::N => ("n", mahler_n(&ctx, &a, route)?),
                Family::G => ("g", mahler_g(&ctx, &a, route)?),
            };
            Ok(Output::ok(format!("{name}({}) = {}", arg.label, v.to_decimal(digits))))
        }
        Command::Lseries { form, partial } => {
            let Some(x) = cusp_form(&form) else { bail!("unknown cusp form `{form}` (expected f30 or f17)") };
            let l = cusp_l2(&ctx, &x, target)?;
            let mut text = format!(
                "L({form},2) = {}\nerror estimate {}, cancellation {:.1} digits",
                l.value.to_decimal(digits),
                l.error_estimate.to_decimal(3),
                l.lost_digits
            );
            if let Some(n) = partial {
                let p = dirichlet_partial_sum(&ctx, &x, n)?;
                text.push_str(&format!(
                    "\npartial sum over {} terms = {} (tail estimate {})",
                    p.terms,
                    p.value.to_decimal(12),
                    p.tail_estimate.to_decimal(3)
                ));
            }
            Ok(Output::ok(text))
        }
        Command::ScanLacunarity { expr, terms, window, format } => {
            let x = parse_eta_expression(&expr)?;
            let p = lacunarity_scan(&x, terms, window)?;
            Ok(Output::ok(match format {
                ProfileFormat::Csv => density_csv(&p),
                ProfileFormat::Json => serde_json::to_string(&DensityJson::from(&p))?,
            }))
        }
    }
}
