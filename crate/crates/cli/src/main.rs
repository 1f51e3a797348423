//! Command-line front end for the cluster algebra engine.
//!
//! Exit codes: 0 success, 1 input error, 2 budget exceeded (partial results
//! are still emitted), 3 verification failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cluster_core::builtins::{builtin, BUILTIN_NAMES};
use cluster_core::io::{
    cartan_from_json, exchange_from_json, orientation_from_json, EnumerationReport, OrbitReport,
};
use cluster_core::verify;
use cluster_core::{
    bipartite_factors, coxeter_order, enumerate, orbit, Budgets, CartanMatrix, CoxeterAuto,
    CoxeterSigma, Definiteness, ExchangeMatrix, OrderResult, RootSystem, Seed, ValuedQuiver,
};

#[derive(Parser)]
#[command(
    name = "cluster",
    version,
    about = "Exact cluster algebra engine: mutation, enumeration, Coxeter orbits",
    after_help = "Budgets may also be set through the environment: \
CLUSTER_MAX_DEPTH, CLUSTER_MAX_SEEDS, CLUSTER_MAX_VARS, CLUSTER_MAX_TERMS, \
CLUSTER_MAX_POWER. Flags take precedence."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Named builtin (A1..A4, B2..B4, C3, C4, D4, E6..E8, F4, G2, AFF2, AFF3).
    #[arg(long = "type")]
    builtin: Option<String>,
    /// Exchange matrix as JSON: [[..]] or {"n": int, "b": [[..]]}.
    #[arg(long)]
    matrix: Option<String>,
    /// Cartan matrix as JSON: [[..]] or {"n": int, "a": [[..]]}.
    #[arg(long)]
    cartan: Option<String>,
    /// Path to a JSON file holding {"n", "b"} or {"n", "a"}.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Orientation: "default", "bipartite", "bipartite-op", "3,2,1-path",
    /// or {"edges": [[from,to]]} with 1-based vertices.
    #[arg(long)]
    orientation: Option<String>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Maximum mutation depth explored.
    #[arg(long)]
    max_depth: Option<usize>,
    /// Maximum number of distinct cluster variables collected.
    #[arg(long)]
    max_vars: Option<usize>,
    /// Maximum total term count over collected variables.
    #[arg(long)]
    max_terms: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize the type of a matrix: finite (with Dynkin label), affine or
    /// indefinite.
    Classify(InputArgs),
    /// Mutate the initial seed along a sequence of directions.
    Mutate {
        #[command(flatten)]
        input: InputArgs,
        /// Mutation directions, 1-based, comma separated (e.g. 1,2,1).
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
    /// Enumerate cluster variables and clusters by breadth-first mutation.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Compute the Coxeter orbit values T^m(u_k) over a power range.
    Orbit {
        #[command(flatten)]
        input: InputArgs,
        /// Smallest power (must be <= 0).
        #[arg(long, default_value_t = 0)]
        mmin: i64,
        /// Largest power (must be >= 0).
        #[arg(long)]
        mmax: i64,
        /// Power budget for the order search reported alongside the orbit.
        #[arg(long)]
        max_power: Option<u64>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Compute the order of the Coxeter automorphism.
    Order {
        #[command(flatten)]
        input: InputArgs,
        /// Power budget for the symbolic search.
        #[arg(long)]
        max_power: Option<u64>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Run a named cross-checking suite ("all" runs every one).
    Verify {
        /// Suite name; one of all, thm4.2, thm4.7, cor4.11, thm4.13,
        /// prop3.6, prop4.14, thm4.15, cor4.16, cor4.17.
        suite: String,
        /// Largest irreducible rank exercised.
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
    },
    /// Print the small worked cases: both rank-3 orientations, the rank-2
    /// orbit table and the order table.
    Examples,
}

struct Job {
    cartan: CartanMatrix,
    quiver: Option<ValuedQuiver>,
}

impl Job {
    fn quiver(&self) -> Result<&ValuedQuiver, String> {
        self.quiver
            .as_ref()
            .ok_or_else(|| "this command needs an orientation or an exchange matrix".to_string())
    }

    fn exchange(&self) -> Result<ExchangeMatrix, String> {
        Ok(self.quiver()?.exchange_matrix())
    }

    fn coxeter(&self) -> Result<CoxeterAuto, String> {
        CoxeterAuto::from_quiver(self.quiver()?).ok_or_else(|| {
            "the orientation has an oriented cycle; no admissible sink sequence exists".to_string()
        })
    }
}

fn parse_orientation(cartan: &CartanMatrix, spec: &str) -> Result<ValuedQuiver, String> {
    let s = spec.trim();
    if s == "default" {
        return Ok(ValuedQuiver::default_orientation(cartan));
    }
    if s == "bipartite" || s == "bipartite-op" {
        let factors = bipartite_factors(cartan).map_err(|e| e.to_string())?;
        return Ok(if s == "bipartite" {
            factors.orientation()
        } else {
            factors.opposite_orientation()
        });
    }
    if s.starts_with('{') {
        return orientation_from_json(cartan, s).map_err(|e| e.to_string());
    }
    if let Some(list) = s.strip_suffix("-path") {
        let vertices: Result<Vec<usize>, _> =
            list.split(',').map(|v| v.trim().parse::<usize>()).collect();
        let vertices = vertices.map_err(|_| format!("bad path orientation {s:?}"))?;
        if vertices.iter().any(|&v| v == 0 || v > cartan.n()) {
            return Err(format!("path orientation {s:?} has out-of-range vertices"));
        }
        let arrows: Vec<(usize, usize)> = vertices
            .windows(2)
            .map(|w| (w[0] - 1, w[1] - 1))
            .collect();
        return ValuedQuiver::new(cartan.clone(), arrows).map_err(|e| e.to_string());
    }
    Err(format!(
        "unrecognized orientation {s:?}; use default, bipartite, bipartite-op, a \
\"v1,v2,...-path\" or an {{\"edges\": ...}} object"
    ))
}

fn resolve_input(args: &InputArgs) -> Result<Job, String> {
    let sources = [
        args.builtin.is_some(),
        args.matrix.is_some(),
        args.cartan.is_some(),
        args.input.is_some(),
    ]
    .iter()
    .filter(|&&x| x)
    .count();
    if sources != 1 {
        return Err(
            "exactly one input source is required: --type, --matrix, --cartan or --input"
                .to_string(),
        );
    }

    if let Some(text) = &args.matrix {
        if args.orientation.is_some() {
            return Err(
                "--orientation cannot be combined with --matrix; the exchange matrix already \
fixes an orientation"
                    .to_string(),
            );
        }
        let b = exchange_from_json(text).map_err(|e| e.to_string())?;
        return Ok(Job {
            cartan: b.cartan_counterpart(),
            quiver: Some(ValuedQuiver::from_exchange(&b)),
        });
    }

    let (cartan, default_quiver) = if let Some(name) = &args.builtin {
        let (cartan, quiver) = builtin(name).ok_or_else(|| {
            format!(
                "unknown builtin {name:?}; expected one of {}",
                BUILTIN_NAMES.join(", ")
            )
        })?;
        (cartan, Some(quiver))
    } else if let Some(text) = &args.cartan {
        let cartan = cartan_from_json(text).map_err(|e| e.to_string())?;
        let quiver = ValuedQuiver::default_orientation(&cartan);
        (cartan, Some(quiver))
    } else {
        let path = args.input.as_ref().expect("checked above");
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        if text.contains("\"b\"") {
            if args.orientation.is_some() {
                return Err(
                    "--orientation cannot be combined with an exchange-matrix file".to_string(),
                );
            }
            let b = exchange_from_json(&text).map_err(|e| e.to_string())?;
            return Ok(Job {
                cartan: b.cartan_counterpart(),
                quiver: Some(ValuedQuiver::from_exchange(&b)),
            });
        }
        let cartan = cartan_from_json(&text).map_err(|e| e.to_string())?;
        let quiver = ValuedQuiver::default_orientation(&cartan);
        (cartan, Some(quiver))
    };

    let quiver = match &args.orientation {
        Some(spec) => Some(parse_orientation(&cartan, spec)?),
        None => default_quiver,
    };
    Ok(Job { cartan, quiver })
}

fn env_budget(name: &str) -> Result<Option<usize>, String> {
    match std::env::var(name) {
        Ok(v) => v
            .parse::<usize>()
            .map(Some)
            .map_err(|_| format!("environment variable {name} is not a positive integer: {v:?}")),
        Err(_) => Ok(None),
    }
}

fn resolve_budgets(args: &BudgetArgs) -> Result<Budgets, String> {
    let mut b = Budgets::default();
    if let Some(v) = env_budget("CLUSTER_MAX_DEPTH")? {
        b.max_depth = v;
    }
    if let Some(v) = env_budget("CLUSTER_MAX_SEEDS")? {
        b.max_seeds = v;
    }
    if let Some(v) = env_budget("CLUSTER_MAX_VARS")? {
        b.max_vars = v;
    }
    if let Some(v) = env_budget("CLUSTER_MAX_TERMS")? {
        b.max_terms = v;
    }
    if let Some(v) = args.max_depth {
        b.max_depth = v;
    }
    if let Some(v) = args.max_vars {
        b.max_vars = v;
    }
    if let Some(v) = args.max_terms {
        b.max_terms = v;
    }
    if b.max_depth == 0 || b.max_vars == 0 || b.max_terms == 0 {
        return Err("budgets must be positive".to_string());
    }
    Ok(b)
}

fn resolve_max_power(flag: Option<u64>) -> Result<u64, String> {
    let mut v = 64u64;
    if let Some(env) = env_budget("CLUSTER_MAX_POWER")? {
        v = env as u64;
    }
    if let Some(flag) = flag {
        v = flag;
    }
    if v == 0 {
        return Err("--max-power must be positive".to_string());
    }
    Ok(v)
}

fn emit(format: Format, value: &serde_json::Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Format::Text => println!("{}", text()),
    }
}

fn classify(job: &Job, format: Format) -> u8 {
    let cartan = &job.cartan;
    let definiteness = cartan.definiteness();
    let dynkin = cartan.dynkin_type();
    let label = dynkin.as_ref().map(|t| t.to_string());
    let headline = match definiteness {
        Definiteness::PositiveDefinite => {
            format!("finite type ({})", label.as_deref().unwrap_or("?"))
        }
        Definiteness::PositiveSemidefinite => "infinite type (affine)".to_string(),
        Definiteness::Indefinite => "infinite type (indefinite)".to_string(),
    };
    let value = json!({
        "finite": definiteness == Definiteness::PositiveDefinite,
        "classification": match definiteness {
            Definiteness::PositiveDefinite => "finite",
            Definiteness::PositiveSemidefinite => "affine",
            Definiteness::Indefinite => "indefinite",
        },
        "type": label,
        "components": dynkin.as_ref().map(|t| t
            .components()
            .iter()
            .map(|c| json!({
                "label": c.label,
                "vertices": c.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>()),
        "symmetrizer": cartan.symmetrizer().entries(),
    });
    emit(format, &value, || {
        format!(
            "{headline}\nsymmetrizer: {:?}",
            cartan.symmetrizer().entries()
        )
    });
    0
}

fn mutate(job: &Job, directions: &[usize], format: Format) -> Result<u8, String> {
    let b = job.exchange()?;
    let mut seed = Seed::initial(&b);
    for &k in directions {
        if k == 0 || k > seed.rank() {
            return Err(format!(
                "mutation direction {k} out of range 1..={}",
                seed.rank()
            ));
        }
        seed = seed.mutate(k - 1);
    }
    let value = json!({
        "k": directions,
        "matrix": seed.matrix().rows(),
        "variables": seed.cluster().iter().map(|x| x.canonical_string()).collect::<Vec<_>>(),
        "fractions": seed.cluster().iter().map(|x| x.fraction_string()).collect::<Vec<_>>(),
    });
    emit(format, &value, || {
        let mut out = format!("seed after mutations {directions:?}\n");
        for (i, x) in seed.cluster().iter().enumerate() {
            out.push_str(&format!(
                "  x{} = {}  =  {}\n",
                i + 1,
                x.fraction_string(),
                x.canonical_string()
            ));
        }
        out.push_str(&format!("matrix: {:?}", seed.matrix().rows()));
        out
    });
    Ok(0)
}

fn enumerate_cmd(job: &Job, budgets: &Budgets, format: Format) -> Result<u8, String> {
    let b = job.exchange()?;
    let e = enumerate(&b, budgets);
    let report = EnumerationReport::from(&e);
    let value = serde_json::to_value(&report).expect("serializable");
    emit(format, &value, || {
        let mut out = format!(
            "{} cluster variables in {} clusters ({})\n",
            report.variables.len(),
            report.clusters.len(),
            if report.complete {
                "complete"
            } else {
                "budget exceeded; partial"
            }
        );
        for v in e.variables() {
            out.push_str(&format!(
                "  {}  =  {}\n",
                v.fraction_string(),
                v.canonical_string()
            ));
        }
        out.pop();
        out
    });
    Ok(if report.complete { 0 } else { 2 })
}

fn orbit_cmd(
    job: &Job,
    mmin: i64,
    mmax: i64,
    max_power: u64,
    budgets: &Budgets,
    format: Format,
) -> Result<u8, String> {
    if mmin > 0 || mmax < 0 {
        return Err("the power range must satisfy mmin <= 0 <= mmax".to_string());
    }
    let t = job.coxeter()?;
    let o = orbit(&t, mmin, mmax, budgets);
    let order = match coxeter_order(&t, max_power, budgets) {
        OrderResult::Finite(m) => Some(m),
        OrderResult::Unbounded { .. } => None,
    };
    let report = OrbitReport::new(&o, order);
    let value = serde_json::to_value(&report).expect("serializable");
    emit(format, &value, || {
        let mut out = match order {
            Some(m) => format!("order {m}\n"),
            None => format!("no finite order within {max_power} powers\n"),
        };
        for entry in &report.entries {
            out.push_str(&format!(
                "  T^{}(u{}) = {}\n",
                entry.m, entry.k, entry.value
            ));
        }
        out.pop();
        out
    });
    Ok(if o.truncated() { 2 } else { 0 })
}

fn order_cmd(job: &Job, max_power: u64, budgets: &Budgets, format: Format) -> Result<u8, String> {
    let t = job.coxeter()?;
    let symbolic = coxeter_order(&t, max_power, budgets);
    let finite_data = if job.cartan.is_finite_type() {
        let rs = RootSystem::generate(&job.cartan).expect("finite type");
        let sigma = CoxeterSigma::new(&rs, job.quiver()?).expect("acyclic");
        Some((
            sigma.order(),
            rs.coxeter_numbers(),
            verify::formula_order(&job.cartan),
        ))
    } else {
        None
    };
    let (order, searched) = match symbolic {
        OrderResult::Finite(m) => (Some(m), None),
        OrderResult::Unbounded { searched } => (None, Some(searched)),
    };
    let value = json!({
        "order": order,
        "searched": searched,
        "sigma_order": finite_data.as_ref().map(|d| d.0),
        "coxeter_numbers": finite_data.as_ref().map(|d| d.1
            .iter()
            .map(|(comp, h)| json!({
                "vertices": comp.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "h": h,
            }))
            .collect::<Vec<_>>()),
        "formula_order": finite_data.as_ref().map(|d| d.2),
    });
    emit(format, &value, || match (&order, &finite_data) {
        (Some(m), Some((sigma, numbers, formula))) => format!(
            "order {m} (symbolic); sigma order {sigma}; formula order {formula}; \
coxeter numbers {:?}",
            numbers.iter().map(|(_, h)| *h).collect::<Vec<_>>()
        ),
        (Some(m), None) => format!("order {m} (symbolic)"),
        (None, _) => format!(
            "no finite order within {} powers",
            searched.unwrap_or(max_power)
        ),
    });
    Ok(if order.is_none() { 2 } else { 0 })
}

fn verify_cmd(suite: &str, max_rank: usize, format: Format) -> Result<u8, String> {
    if max_rank == 0 {
        return Err("--max-rank must be positive".to_string());
    }
    let checks = verify::run(suite, max_rank).ok_or_else(|| {
        format!(
            "unknown suite {suite:?}; expected \"all\" or one of {}",
            verify::SUITE_NAMES.join(", ")
        )
    })?;
    let all_pass = verify::all_passed(&checks);
    match format {
        Format::Json => {
            let value: Vec<serde_json::Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite,
                        "name": c.name,
                        "pass": c.pass,
                        "detail": c.detail,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "pass": all_pass,
                    "checks": value,
                }))
                .expect("serializable")
            );
        }
        Format::Text => {
            for c in &checks {
                let detail = if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", c.detail)
                };
                println!(
                    "[{}] {} :: {}{detail}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.suite,
                    c.name
                );
            }
            println!(
                "{}: {} checks",
                if all_pass { "all passed" } else { "FAILURES" },
                checks.len()
            );
        }
    }
    Ok(if all_pass { 0 } else { 3 })
}

fn examples_cmd(format: Format) -> u8 {
    let budgets = Budgets::default();
    let (_, path) = builtin("A3").expect("builtin");
    let reflected = path.reflect(0);
    let e_path = enumerate(&path.exchange_matrix(), &budgets);
    let e_reflected = enumerate(&reflected.exchange_matrix(), &budgets);

    let (_, b2) = builtin("B2").expect("builtin");
    let t = CoxeterAuto::from_quiver(&b2).expect("acyclic");
    let o = orbit(&t, 0, 3, &budgets);
    let order = match coxeter_order(&t, 16, &budgets) {
        OrderResult::Finite(m) => Some(m),
        _ => None,
    };

    let orders: Vec<(String, u64)> = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2",
    ]
    .iter()
    .map(|label| {
        let (cartan, _) = builtin(label).expect("builtin");
        (label.to_string(), verify::formula_order(&cartan))
    })
    .collect();

    let value = json!({
        "a3_path": EnumerationReport::from(&e_path),
        "a3_reflected": EnumerationReport::from(&e_reflected),
        "b2_orbit": OrbitReport::new(&o, order),
        "orders": orders.iter().map(|(l, m)| json!({"type": l, "order": m})).collect::<Vec<_>>(),
    });
    emit(format, &value, || {
        let mut out = String::new();
        out.push_str("rank-3 path orientation (3 -> 2 -> 1): cluster variables\n");
        for v in e_path.variables() {
            out.push_str(&format!("  {}\n", v.fraction_string()));
        }
        out.push_str("after reflecting at vertex 1 (3 -> 2 <- 1):\n");
        for v in e_reflected.variables() {
            out.push_str(&format!("  {}\n", v.fraction_string()));
        }
        out.push_str("rank-2 valued orbit (2 -(1,2)-> 1):\n");
        for (&(m, k), v) in o.entries() {
            out.push_str(&format!("  T^{m}(u{}) = {}\n", k + 1, v.fraction_string()));
        }
        if let Some(m) = order {
            out.push_str(&format!("order of T: {m}\n"));
        }
        out.push_str("orders by type: ");
        out.push_str(
            &orders
                .iter()
                .map(|(l, m)| format!("{l}={m}"))
                .collect::<Vec<_>>()
                .join(", "),
        );
        out
    });
    0
}

fn run(cli: Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Classify(input) => {
            let job = resolve_input(input)?;
            Ok(classify(&job, cli.format))
        }
        Command::Mutate { input, k } => {
            let job = resolve_input(input)?;
            mutate(&job, k, cli.format)
        }
        Command::Enumerate { input, budgets } => {
            let job = resolve_input(input)?;
            let budgets = resolve_budgets(budgets)?;
            enumerate_cmd(&job, &budgets, cli.format)
        }
        Command::Orbit {
            input,
            mmin,
            mmax,
            max_power,
            budgets,
        } => {
            let job = resolve_input(input)?;
            let b = resolve_budgets(budgets)?;
            let max_power = resolve_max_power(*max_power)?;
            orbit_cmd(&job, *mmin, *mmax, max_power, &b, cli.format)
        }
        Command::Order {
            input,
            max_power,
            budgets,
        } => {
            let job = resolve_input(input)?;
            let b = resolve_budgets(budgets)?;
            let max_power = resolve_max_power(*max_power)?;
            order_cmd(&job, max_power, &b, cli.format)
        }
        Command::Verify { suite, max_rank } => verify_cmd(suite, *max_rank, cli.format),
        Command::Examples => Ok(examples_cmd(cli.format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
