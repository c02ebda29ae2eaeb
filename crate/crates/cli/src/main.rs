//! `maxcurve`: JSON reports on maximal curves over finite fields.
//!
//! Exit status 0 when the command succeeds and every check it makes holds,
//! 1 when a mathematical check fails, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use maxcurve_core::classify::{
    check_star_star, classify_rational_points, normalize_linearized, quadratic_field, quarter_genus_pipeline,
};
use maxcurve_core::curve::{CurveModel, CurveSpec, Family, PlacePoint};
use maxcurve_core::gf::set_field_budget;
use maxcurve_core::linsys::{
    hyperelliptic_example_report, sample_points, sv_divisors, verify_frobenius_equivalence, LinearSystem, NuChoice,
};
use maxcurve_core::semigroup::NumericalSemigroup;
use maxcurve_core::zeta::{
    bounds_report, certify_by_power_sums, certify_maximal, lpoly_of_curve, ree_genus_report, scholium_predicate,
};
use maxcurve_core::{Error, Fe, Gf};

#[derive(Parser, Debug)]
#[command(name = "maxcurve", version, about = "Computations with maximal curves over F_{q^2}")]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct CurveArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    s: Option<u32>,
    /// JSON curve spec file; overrides the other curve flags.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "snake_case")]
enum FamilyArg {
    ArtinSchreier,
    Hermitian,
    HyperellipticExample,
    Suzuki,
    Ree,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum SemigroupCheck {
    Symmetric,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of points over an extension of the base field.
    CountPoints {
        #[command(flatten)]
        curve: CurveArgs,
        /// Extension degree (default: the extension that is F_{q^2}).
        #[arg(long)]
        ext: Option<u32>,
    },
    /// Compares the count over F_{q^2} with q^2 + 1 + 2gq.
    CertifyMaximal {
        #[command(flatten)]
        curve: CurveArgs,
        /// Predict the count from the L-polynomial over the base field.
        #[arg(long)]
        power_sums: bool,
    },
    /// L-polynomial over the base field from point counts.
    Lpoly {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Genus bounds for a maximal curve over F_{q^2}.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m1: Option<u64>,
        #[arg(long)]
        count: Option<u64>,
    },
    /// Gaps, genus and Frobenius number of a numerical semigroup.
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long, value_enum)]
        check: Option<SemigroupCheck>,
    },
    /// Orders of |d P0| at a point, or the generic orders.
    Orders {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        d: u64,
        /// Affine point as field indices `x,y`.
        #[arg(long, value_delimiter = ',', num_args = 2, conflicts_with = "infinity")]
        point: Option<Vec<u32>>,
        #[arg(long)]
        infinity: bool,
        /// Extension degree of the field the point lies in.
        #[arg(long, default_value_t = 1)]
        ext: u32,
    },
    /// Degrees of the ramification and Frobenius divisors of |d P0|.
    SvDivisors {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        d: u64,
        /// Index of the generic order dropped for the Frobenius orders.
        #[arg(long)]
        nu_index: Option<usize>,
        #[arg(long, default_value_t = 2)]
        search_degree: u32,
    },
    /// Checks Fr(P) + qP ~ (q+1)P0 at sampled points.
    VerifyCor12 {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 8)]
        per_degree: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Type 1 / Type 2 classification of the rational points of y^q + y = x^m.
    ClassifyPoints {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Normal form of v^m = a1 y + aq y^q over F_{q^2}.
    NormalForm {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u64,
        /// Field index of a1.
        #[arg(long)]
        a1: u32,
        /// Field index of aq.
        #[arg(long)]
        aq: u32,
    },
    /// Checks for maximal curves of genus (q-1)^2/4.
    Theorem31 {
        #[arg(long)]
        q: u64,
    },
    /// The hyperelliptic example x^2 + y^5 = 1 over F_81 with |10 P0|.
    Example16,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Results of a command and whether every check in it holds.
struct Outcome {
    curve: Option<CurveSpec>,
    results: Value,
    holds: bool,
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn field_json(f: &Gf) -> Value {
    json!({ "p": f.p(), "k": f.degree(), "size": f.order() })
}

fn load_curve(a: &CurveArgs) -> Result<CurveModel, Failure> {
    let spec = if let Some(path) = &a.spec {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        serde_json::from_str::<CurveSpec>(&text).map_err(|e| Failure::Usage(format!("bad curve spec: {e}")))?
    } else {
        let family = a.family.ok_or_else(|| Failure::Usage("--family or --spec is required".into()))?;
        CurveSpec {
            family: Some(match family {
                FamilyArg::ArtinSchreier => Family::ArtinSchreier,
                FamilyArg::Hermitian => Family::Hermitian,
                FamilyArg::HyperellipticExample => Family::HyperellipticExample,
                FamilyArg::Suzuki => Family::Suzuki,
                FamilyArg::Ree => Family::Ree,
            }),
            q: a.q,
            m: a.m,
            s: a.s,
            ..Default::default()
        }
    };
    Ok(CurveModel::from_spec(&spec)?)
}

fn run(cmd: &Command) -> Result<Outcome, Failure> {
    let plain = |results: Value, holds: bool| Outcome { curve: None, results, holds };
    match cmd {
        Command::CountPoints { curve, ext } => {
            let c = load_curve(curve)?;
            let ext = ext.or(c.maximal_extension()).unwrap_or(1);
            let f = c.extension_field(ext)?;
            let count = c.count_points(ext)?;
            Ok(Outcome {
                curve: Some(c.spec()),
                results: json!({ "ext": ext, "field": field_json(f), "count": count }),
                holds: true,
            })
        }
        Command::CertifyMaximal { curve, power_sums } => {
            let c = load_curve(curve)?;
            if c.family() == Family::Ree {
                let r = ree_genus_report(c.s().unwrap_or(0))?;
                let holds = r.implied_genus.is_some();
                return Ok(Outcome { curve: Some(c.spec()), results: to_value(&r), holds });
            }
            let (results, holds) = if *power_sums {
                let cert = certify_by_power_sums(&c)?;
                (to_value(&cert), cert.maximal)
            } else {
                let cert = certify_maximal(&c)?;
                (to_value(&cert), cert.maximal)
            };
            Ok(Outcome { curve: Some(c.spec()), results, holds })
        }
        Command::Lpoly { curve } => {
            let c = load_curve(curve)?;
            let l = lpoly_of_curve(&c)?;
            Ok(Outcome { curve: Some(c.spec()), results: to_value(&l), holds: true })
        }
        Command::Bounds { q, genus, n, m1, count } => {
            let mut r = bounds_report(*q, *genus, *n, *m1)?;
            if let Some(count) = count {
                r = r.with_count(*count);
            }
            let holds = r.all_hold();
            let scholium = scholium_predicate(*q, *genus);
            Ok(plain(json!({ "bounds": r, "scholium": scholium, "all_hold": holds }), holds))
        }
        Command::Semigroup { gens, check } => {
            let h = NumericalSemigroup::from_generators(gens)?;
            let symmetric = h.is_symmetric();
            let holds = *check != Some(SemigroupCheck::Symmetric) || symmetric;
            Ok(plain(
                json!({
                    "generators": h.generators,
                    "gaps": h.gaps,
                    "genus": h.genus,
                    "frobenius": h.frobenius,
                    "conductor": h.conductor(),
                    "symmetric": symmetric,
                }),
                holds,
            ))
        }
        Command::Orders { curve, d, point, infinity, ext } => {
            let c = load_curve(curve)?;
            let ls = LinearSystem::new(&c, *d)?;
            let results = match (point, infinity) {
                (None, false) => {
                    let g = ls.generic_orders()?;
                    json!({ "basis": ls.basis(), "generic": g })
                }
                _ => {
                    let f = c.extension_field(*ext)?;
                    let p = match point {
                        Some(v) => PlacePoint::affine(Fe(v[0]), Fe(v[1])),
                        None => PlacePoint::Infinity { index: 0 },
                    };
                    if !c.contains(f, &p)? {
                        return Err(Failure::Usage(format!("{p:?} is not on the curve over the given field")));
                    }
                    let eps = ls.generic_orders()?.orders;
                    let data = ls.orders_at(f, &p)?;
                    let (_, v_r) = ls.ramification_at(f, &p, &eps)?;
                    json!({
                        "basis": ls.basis(),
                        "field": field_json(f),
                        "generic": eps,
                        "at_point": data,
                        "v_r": v_r,
                    })
                }
            };
            Ok(Outcome { curve: Some(c.spec()), results, holds: true })
        }
        Command::SvDivisors { curve, d, nu_index, search_degree } => {
            let c = load_curve(curve)?;
            let choice = nu_index.map_or(NuChoice::RankDrop, NuChoice::Index);
            let r = sv_divisors(&c, *d, choice, *search_degree)?;
            let holds = r.deg_r_agree && r.pointwise_bounds_hold && r.s_rational_lower_bound <= r.deg_s_formula;
            Ok(Outcome { curve: Some(c.spec()), results: to_value(&r), holds })
        }
        Command::VerifyCor12 { curve, per_degree, max_degree } => {
            let c = load_curve(curve)?;
            let mut pts = sample_points(&c, 1..=*max_degree, *per_degree)?;
            pts.push((c.base_field(), PlacePoint::Infinity { index: 0 }));
            let mut checks = Vec::new();
            for (f, p) in &pts {
                let r = verify_frobenius_equivalence(&c, f, p)?;
                checks.push(json!({ "field": field_json(f), "check": r }));
            }
            let verified = checks.iter().filter(|v| v["check"]["holds"] == json!(true)).count();
            let holds = verified == checks.len();
            Ok(Outcome {
                curve: Some(c.spec()),
                results: json!({ "points": checks.len(), "verified": verified, "holds": holds, "checks": checks }),
                holds,
            })
        }
        Command::ClassifyPoints { curve } => {
            let c = load_curve(curve)?;
            let t = classify_rational_points(&c)?;
            let star = check_star_star(&c, &PlacePoint::Infinity { index: 0 })?;
            let holds = t.all_hold();
            Ok(Outcome { curve: Some(c.spec()), results: json!({ "types": t, "star_star": star }), holds })
        }
        Command::NormalForm { q, m, a1, aq } => {
            let gf = quadratic_field(*q)?;
            let w = normalize_linearized(gf, gf.element(*a1 as u64)?, gf.element(*aq as u64)?, *m, *q)?;
            let holds = w.trace_identity && w.substitution_identity;
            Ok(plain(json!({ "field": field_json(gf), "witness": w }), holds))
        }
        Command::Theorem31 { q } => {
            let r = quarter_genus_pipeline(*q)?;
            Ok(plain(to_value(&r), r.holds))
        }
        Command::Example16 => {
            let r = hyperelliptic_example_report()?;
            let c = CurveModel::hyperelliptic_example()?;
            Ok(Outcome { curve: Some(c.spec()), holds: r.holds, results: to_value(&r) })
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::CountPoints { .. } => "count-points",
        Command::CertifyMaximal { .. } => "certify-maximal",
        Command::Lpoly { .. } => "lpoly",
        Command::Bounds { .. } => "bounds",
        Command::Semigroup { .. } => "semigroup",
        Command::Orders { .. } => "orders",
        Command::SvDivisors { .. } => "sv-divisors",
        Command::VerifyCor12 { .. } => "verify-cor12",
        Command::ClassifyPoints { .. } => "classify-points",
        Command::NormalForm { .. } => "normal-form",
        Command::Theorem31 { .. } => "theorem31",
        Command::Example16 => "example16",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("MAXCURVE_FIELD_BUDGET") {
        match v.parse::<u64>() {
            Ok(b) => set_field_budget(b),
            Err(_) => {
                eprintln!("error: MAXCURVE_FIELD_BUDGET must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(&cli.command) {
        Ok(out) => {
            let report = json!({
                "command": command_name(&cli.command),
                "curve": out.curve,
                "results": out.results,
                "timing": { "seconds": start.elapsed().as_secs_f64() },
                "version": env!("CARGO_PKG_VERSION"),
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            if out.holds {
                ExitCode::SUCCESS
            } else {
                eprintln!("check failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
