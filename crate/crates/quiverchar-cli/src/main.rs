//! Command-line front door: parse quiver/module files, print characters and
//! Grassmannian counts, run the verification suites, emit JSON reports.
//!
//! Exit codes: 0 all checks pass, 1 an identity failed, 2 usage/parse error.

use clap::{Parser, Subcommand, ValueEnum};
use quiverchar::character::ClusterObject;
use quiverchar::grassmann::{count_gr, counting_polynomial, IntRep};
use quiverchar::quiver::{parse_quiver, IMatrix, Quiver};
use quiverchar::rep::translate::{injective, projective, simple};
use quiverchar::rep::{interval_module, parse_rep, Rep};
use quiverchar::verify::interp::interp_motivic;
use quiverchar::verify::{
    calibrate, cdz_sides, random_rep, seeded_rng, verify_bilinear, verify_cdz,
    verify_dim1_refined, verify_fiber_law, verify_initial, verify_split_product,
    verify_strata_counts, Convention, Ctx, Side, VerificationReport,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quiverchar", version, about = "quantum cluster characters over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Cdz,
    Initial,
    Fibers,
    Strata,
    Bilinear,
    Split,
    Dim1,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliSide {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Print the quantum cluster character of a module (or shifted injective)
    Char {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        module: String,
        /// Shift the (injective) module into the I[-1] part
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i32>,
        #[arg(long)]
        prime: u32,
        /// Print the tilde character (P[1] presentation) instead
        #[arg(long)]
        tilde: bool,
    },
    /// Count points of a quiver Grassmannian Gr_e(M) over F_p
    GrCount {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        module: String,
        #[arg(long, value_delimiter = ',')]
        e: Vec<usize>,
        #[arg(long)]
        prime: u32,
    },
    /// Resolve the sign and prefactor conventions against the A2 probes
    Calibrate {
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u32>,
        /// Quiver whose side the convention dotfile is cached next to
        #[arg(long)]
        quiver: Option<String>,
    },
    /// Run a named verification suite and write JSON reports
    Verify {
        #[arg(value_enum)]
        suite: SuiteName,
        #[arg(long)]
        quiver: String,
        #[arg(long = "M", alias = "m")]
        m: Option<String>,
        #[arg(long = "N", alias = "n")]
        n: Option<String>,
        /// Injective multiplicities for the initial suite, e.g. 1,0
        #[arg(long = "I", alias = "i", value_delimiter = ',')]
        i: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        side: Option<CliSide>,
        #[arg(long, default_value_t = 0)]
        eps_index: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u32>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Expert override of the calibrated sign sigma (+1 or -1)
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interpolate an identity (or a Grassmannian count) across primes
    Interp {
        #[arg(long)]
        quiver: String,
        #[arg(long = "M", alias = "m")]
        m: Option<String>,
        #[arg(long = "N", alias = "n")]
        n: Option<String>,
        /// Interpolate |Gr_e| of --module instead of the cdz identity
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_delimiter = ',')]
        e: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7,11")]
        primes: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn fail(msg: impl AsRef<str>) -> ExitCode {
    eprintln!("error: {}", msg.as_ref());
    ExitCode::from(2)
}

fn load_quiver(spec: &str) -> Result<(String, Quiver), String> {
    if let Some(q) = Quiver::preset(spec) {
        return Ok((spec.to_string(), q));
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {spec}: {e}"))?;
    let q = parse_quiver(&text).map_err(|e| format!("{spec}: {e}"))?;
    let name = path.file_stem().map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into());
    Ok((name, q))
}

/// Module specs: "S i", "P i", "I i", "[a,b]" (interval of a linear A_n),
/// or a path to a module file.
fn load_module(q: &Quiver, p: u32, spec: &str) -> Result<Rep, String> {
    let toks: Vec<&str> = spec.split_whitespace().collect();
    if toks.len() == 2 {
        let i: usize = toks[1]
            .parse()
            .map_err(|_| format!("bad vertex in module spec '{spec}'"))?;
        if i == 0 || i > q.vertex_count() {
            return Err(format!("vertex {i} out of range in '{spec}'"));
        }
        return match toks[0] {
            "S" => Ok(simple(q, p, i - 1)),
            "P" => Ok(projective(q, p, i - 1)),
            "I" => Ok(injective(q, p, i - 1)),
            other => Err(format!("unknown module shorthand '{other}'")),
        };
    }
    if spec.starts_with('[') && spec.ends_with(']') {
        let inner = &spec[1..spec.len() - 1];
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() == 2 {
            let a: usize = parts[0].trim().parse().map_err(|_| "bad interval".to_string())?;
            let b: usize = parts[1].trim().parse().map_err(|_| "bad interval".to_string())?;
            if a == 0 || b < a || b > q.vertex_count() {
                return Err(format!("interval [{a},{b}] out of range"));
            }
            return Ok(interval_module(q, p, a - 1, b - 1));
        }
    }
    let text =
        std::fs::read_to_string(spec).map_err(|e| format!("cannot read module {spec}: {e}"))?;
    parse_rep(q, p, &text).map_err(|e| format!("{spec}: {e}"))
}

fn convention_cache_path(quiver_spec: &str) -> PathBuf {
    let p = Path::new(quiver_spec);
    if p.exists() {
        p.with_extension("convention.json")
    } else {
        PathBuf::from(format!(".{quiver_spec}.convention.json"))
    }
}

fn load_or_calibrate(quiver_spec: &str, primes: &[u32], sigma: Option<i64>) -> Result<Convention, String> {
    if let Some(s) = sigma {
        if s != 1 && s != -1 {
            return Err("sigma override must be +1 or -1".into());
        }
        return Ok(Convention { sigma: s, doubled_prefactor: true });
    }
    let cache = convention_cache_path(quiver_spec);
    if let Ok(text) = std::fs::read_to_string(&cache) {
        if let Ok(v) = serde_json::from_str::<serde_json::Value>(&text) {
            if let (Some(s), Some(d)) = (v["sigma"].as_i64(), v["doubled_prefactor"].as_bool()) {
                return Ok(Convention { sigma: s, doubled_prefactor: d });
            }
        }
    }
    let (conv, _) = calibrate(primes).map_err(|e| e.to_string())?;
    let _ = std::fs::write(
        &cache,
        format!(
            "{{\n  \"sigma\": {},\n  \"doubled_prefactor\": {}\n}}\n",
            conv.sigma, conv.doubled_prefactor
        ),
    );
    Ok(conv)
}

fn print_summary(reports: &[VerificationReport]) {
    for r in reports {
        let status = if r.equal { "pass" } else { "FAIL" };
        let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{:<14} {:<10} p={:<8} {} ({})",
            r.identity,
            r.quiver,
            r.primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
            status,
            inputs.join(" ")
        );
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Char { quiver, module, shift, prime, tilde } => {
            let (name, q) = load_quiver(&quiver)?;
            let conv = load_or_calibrate(&quiver, &[2, 3, 5], None)?;
            let ctx = Ctx::new(&name, q, conv.sigma).map_err(|e| e.to_string())?;
            let obj = match shift {
                Some(-1) => {
                    // the module must be a shorthand injective: record it as shift
                    let toks: Vec<&str> = module.split_whitespace().collect();
                    if toks.len() != 2 || toks[0] != "I" {
                        return Err("--shift -1 requires a module of the form \"I j\"".into());
                    }
                    let j: usize = toks[1].parse().map_err(|_| "bad vertex".to_string())?;
                    if j == 0 || j > ctx.quiver.vertex_count() {
                        return Err(format!("vertex {j} out of range"));
                    }
                    let mut mult = vec![0; ctx.quiver.vertex_count()];
                    mult[j - 1] = 1;
                    ClusterObject::shifted(Rep::zero(&ctx.quiver, prime), mult)
                }
                Some(other) => return Err(format!("unsupported shift {other}; only -1")),
                None => ClusterObject::module_only(load_module(&ctx.quiver, prime, &module)?),
            };
            let x = if tilde { ctx.tilde_char(&obj) } else { ctx.q_char(&obj) };
            println!("{x}");
            Ok(ExitCode::SUCCESS)
        }
        Command::GrCount { quiver, module, e, prime } => {
            let (name, q) = load_quiver(&quiver)?;
            let m = load_module(&q, prime, &module)?;
            if e.len() != q.vertex_count() {
                return Err(format!(
                    "dimension vector {e:?} has wrong length for quiver {name}"
                ));
            }
            println!("{}", count_gr(&q, &m, &e));
            Ok(ExitCode::SUCCESS)
        }
        Command::Calibrate { primes, quiver } => {
            let (conv, outcomes) = calibrate(&primes).map_err(|e| e.to_string())?;
            println!(
                "calibrated: sigma = {} ({}), prefactor = {}",
                conv.sigma,
                if conv.sigma == 1 { "Lambda B = I" } else { "-Lambda B = I" },
                if conv.doubled_prefactor { "q^[M,I] - 1" } else { "t^[M,I] - 1" }
            );
            for o in &outcomes {
                println!(
                    "  sigma={:+} prefactor={} cdz={} initial={}",
                    o.sigma,
                    if o.doubled_prefactor { "doubled" } else { "literal" },
                    o.cdz_pass,
                    o.initial_pass
                );
            }
            let cache = convention_cache_path(quiver.as_deref().unwrap_or("default"));
            std::fs::write(
                &cache,
                format!(
                    "{{\n  \"sigma\": {},\n  \"doubled_prefactor\": {}\n}}\n",
                    conv.sigma, conv.doubled_prefactor
                ),
            )
            .map_err(|e| format!("cannot write {}: {e}", cache.display()))?;
            println!("cached to {}", cache.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            quiver,
            m,
            n,
            i,
            side,
            eps_index,
            primes,
            samples,
            seed,
            sigma,
            out,
        } => {
            let (name, q) = load_quiver(&quiver)?;
            let conv = load_or_calibrate(&quiver, &[2, 3, 5], sigma)?;
            let ctx = Ctx::new(&name, q, conv.sigma).map_err(|e| e.to_string())?;
            let mut reports = Vec::new();
            run_suites(
                &ctx, conv, suite, &m, &n, &i, side, eps_index, &primes, samples, seed,
                &mut reports,
            )?;
            print_summary(&reports);
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&reports)
                    .expect("report serialization cannot fail");
                std::fs::write(&path, json).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let all_pass = reports.iter().all(|r| r.equal);
            if !all_pass {
                if let Some(first) = reports.iter().find(|r| !r.equal) {
                    eprintln!("first failure: {}", first.to_json());
                }
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Interp { quiver, m, n, module, e, primes, out } => {
            let (name, q) = load_quiver(&quiver)?;
            if let (Some(module), Some(e)) = (&module, &e) {
                // counting polynomial of a Gaussian/Grassmannian count
                let probe = load_module(&q, primes[0], module)?;
                let blueprint = IntRep {
                    dim: probe.dim().to_vec(),
                    maps: (0..q.arrows().len())
                        .map(|a| {
                            let blk = probe.map(a);
                            let mut im = IMatrix::zeros(blk.rows(), blk.cols());
                            for r in 0..blk.rows() {
                                for c in 0..blk.cols() {
                                    *im.at_mut(r, c) = blk.get(r, c) as i64;
                                }
                            }
                            im
                        })
                        .collect(),
                };
                let poly = counting_polynomial(&q, &q.euler_matrix(), &blueprint, e, &primes)
                    .map_err(|err| err.to_string())?;
                println!("|Gr_{e:?}| = {poly}");
                return Ok(ExitCode::SUCCESS);
            }
            let (m, n) = match (&m, &n) {
                (Some(m), Some(n)) => (m.clone(), n.clone()),
                _ => return Err("interp needs --m and --n (or --module with --e)".into()),
            };
            let conv = load_or_calibrate(&quiver, &[2, 3, 5], None)?;
            let ctx = Ctx::new(&name, q, conv.sigma).map_err(|e2| e2.to_string())?;
            let report = interp_motivic("cdz", &primes, |p| {
                let mm = load_module(&ctx.quiver, p, &m)
                    .map_err(quiverchar::verify::VerifyError::Precondition)?;
                let nn = load_module(&ctx.quiver, p, &n)
                    .map_err(quiverchar::verify::VerifyError::Precondition)?;
                let sides = cdz_sides(&ctx, &mm, &nn, p)?;
                Ok((sides.lhs, sides.rhs))
            })
            .map_err(|e2| e2.to_string())?;
            println!(
                "interp {} over primes {:?}: consistent = {}",
                report.identity, report.primes, report.consistent
            );
            for s in &report.slots {
                println!(
                    "  X^{:?} s^{}: lhs {} rhs {} {}",
                    s.alpha,
                    s.s_exp,
                    s.lhs_poly.as_deref().unwrap_or("-"),
                    s.rhs_poly.as_deref().unwrap_or("-"),
                    if s.ok { "ok" } else { "INCONSISTENT" }
                );
            }
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&report).expect("serializable");
                std::fs::write(&path, json).map_err(|e2| format!("cannot write: {e2}"))?;
            }
            if report.consistent {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_suites(
    ctx: &Ctx,
    conv: Convention,
    suite: SuiteName,
    m: &Option<String>,
    n: &Option<String>,
    i: &Option<Vec<usize>>,
    side: Option<CliSide>,
    eps_index: usize,
    primes: &[u32],
    samples: usize,
    seed: u64,
    reports: &mut Vec<VerificationReport>,
) -> Result<(), String> {
    let pair = |p: u32| -> Result<(Rep, Rep), String> {
        let (Some(m), Some(n)) = (m, n) else {
            return Err("this suite needs --m and --n".into());
        };
        Ok((load_module(&ctx.quiver, p, m)?, load_module(&ctx.quiver, p, n)?))
    };
    let push = |reports: &mut Vec<VerificationReport>,
                r: Result<VerificationReport, quiverchar::verify::VerifyError>|
     -> Result<(), String> {
        reports.push(r.map_err(|e| e.to_string())?);
        Ok(())
    };
    match suite {
        SuiteName::Cdz => {
            for &p in primes {
                let (mm, nn) = pair(p)?;
                push(reports, verify_cdz(ctx, &mm, &nn, p))?;
            }
        }
        SuiteName::Initial => {
            let i = i.clone().ok_or("initial suite needs --i multiplicities")?;
            if i.len() != ctx.quiver.vertex_count() {
                return Err("--i has wrong length".into());
            }
            let sides: Vec<Side> = match side {
                Some(CliSide::Left) => vec![Side::Left],
                Some(CliSide::Right) => vec![Side::Right],
                None => vec![Side::Left, Side::Right],
            };
            for &p in primes {
                let Some(m) = m else { return Err("initial suite needs --m".into()) };
                let mm = load_module(&ctx.quiver, p, m)?;
                for &s in &sides {
                    push(reports, verify_initial(ctx, &mm, &i, p, s, conv))?;
                }
            }
        }
        SuiteName::Fibers => {
            for &p in primes {
                let (mm, nn) = pair(p)?;
                push(reports, verify_fiber_law(ctx, &mm, &nn, p))?;
            }
        }
        SuiteName::Strata => {
            for &p in primes {
                let (mm, nn) = pair(p)?;
                push(reports, verify_strata_counts(ctx, &mm, &nn, p))?;
            }
        }
        SuiteName::Bilinear => {
            reports.push(verify_bilinear(ctx, samples, seed));
        }
        SuiteName::Split => {
            for &p in primes {
                let (mm, nn) = pair(p)?;
                push(reports, verify_split_product(ctx, &mm, &nn, p))?;
            }
        }
        SuiteName::Dim1 => {
            for &p in primes {
                let (mm, nn) = pair(p)?;
                push(reports, verify_dim1_refined(ctx, &mm, &nn, eps_index, p))?;
            }
        }
        SuiteName::All => {
            if m.is_some() && n.is_some() {
                for &p in primes {
                    let (mm, nn) = pair(p)?;
                    push(reports, verify_fiber_law(ctx, &mm, &nn, p))?;
                    push(reports, verify_strata_counts(ctx, &mm, &nn, p))?;
                    push(reports, verify_split_product(ctx, &mm, &nn, p))?;
                    if quiverchar::rep::ext_dim(&ctx.quiver, &ctx.euler, &mm, &nn) >= 1 {
                        push(reports, verify_cdz(ctx, &mm, &nn, p))?;
                        push(reports, verify_dim1_refined(ctx, &mm, &nn, 0, p))?;
                    }
                }
                reports.push(verify_bilinear(ctx, samples, seed));
            } else {
                run_preset_batch(ctx, conv, primes, samples, seed, reports)?;
            }
        }
    }
    Ok(())
}

/// Curated batch per built-in quiver: the same instances the acceptance
/// criteria exercise.
fn run_preset_batch(
    ctx: &Ctx,
    conv: Convention,
    primes: &[u32],
    samples: usize,
    seed: u64,
    reports: &mut Vec<VerificationReport>,
) -> Result<(), String> {
    let push = |reports: &mut Vec<VerificationReport>,
                r: Result<VerificationReport, quiverchar::verify::VerifyError>|
     -> Result<(), String> {
        reports.push(r.map_err(|e| e.to_string())?);
        Ok(())
    };
    match ctx.name.as_str() {
        "a2" => {
            for &p in primes {
                let s1 = simple(&ctx.quiver, p, 0);
                let s2 = simple(&ctx.quiver, p, 1);
                let p1 = projective(&ctx.quiver, p, 0);
                push(reports, verify_cdz(ctx, &s1, &s2, p))?;
                push(reports, verify_initial(ctx, &p1, &[1, 0], p, Side::Left, conv))?;
                push(reports, verify_initial(ctx, &p1, &[1, 0], p, Side::Right, conv))?;
                push(reports, verify_fiber_law(ctx, &s1, &s2, p))?;
                push(reports, verify_strata_counts(ctx, &s1, &s2, p))?;
                push(reports, verify_split_product(ctx, &s1, &s2, p))?;
                push(reports, verify_split_product(ctx, &p1, &s2, p))?;
                push(reports, verify_dim1_refined(ctx, &s1, &s2, 0, p))?;
            }
            reports.push(verify_bilinear(ctx, samples, seed));
        }
        "kronecker" => {
            for &p in primes {
                let s1 = simple(&ctx.quiver, p, 0);
                let s2 = simple(&ctx.quiver, p, 1);
                push(reports, verify_cdz(ctx, &s1, &s2, p))?;
                push(reports, verify_strata_counts(ctx, &s1, &s2, p))?;
                push(reports, verify_split_product(ctx, &s1, &s2, p))?;
                push(reports, verify_dim1_refined(ctx, &s1, &s2, 0, p))?;
            }
            reports.push(verify_bilinear(ctx, samples, seed));
        }
        "a4" => {
            for &p in primes {
                for b in 0..3usize {
                    for a in 0..=b {
                        for d in b + 1..4 {
                            let mm = interval_module(&ctx.quiver, p, a, b);
                            let nn = interval_module(&ctx.quiver, p, b + 1, d);
                            push(reports, verify_cdz(ctx, &mm, &nn, p))?;
                        }
                    }
                }
                let mm = interval_module(&ctx.quiver, p, 0, 1);
                let nn = interval_module(&ctx.quiver, p, 2, 3);
                push(reports, verify_split_product(ctx, &mm, &nn, p))?;
            }
            // a couple of random fiber-law pairs
            let mut rng = seeded_rng(seed);
            for _ in 0..2 {
                let mm = random_rep(&ctx.quiver, 2, 2, &mut rng);
                let nn = random_rep(&ctx.quiver, 2, 2, &mut rng);
                push(reports, verify_fiber_law(ctx, &mm, &nn, 2))?;
            }
            reports.push(verify_bilinear(ctx, samples, seed));
        }
        other => {
            return Err(format!(
                "'verify all' without --m/--n is only curated for presets (a2, a4, kronecker), not '{other}'"
            ))
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}
