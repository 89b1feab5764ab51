//! `weylrep` — algebra specs in, structured reports out.
//!
//! Subcommands: `census`, `fraction`, `algebra {info|weyl|report|search}`,
//! `hilbert`, `norm`, `verify`. Every report is deterministic: identical
//! invocations produce byte-identical output.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification suite ran to completion and found a failing check.

mod spec;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use weylrep_core::brauer::{
    hilbert_symbol, invariant_checks, quaternion_invariants, relevant_places,
    root_of_unity_report, Place,
};
use weylrep_core::cyclicalg::{is_division, CyclicAlgebra};
use weylrep_core::numberfield::{is_galois_norm, NormTest};
use weylrep_core::permcycle::{
    big_cycle_fraction_exact, big_cycle_fraction_f64, census, census_breakdown, Predicate,
};
use weylrep_core::rational::{decimal_string, exact_string, parse_rational};
use weylrep_core::verify::{run_all, run_suite, SuiteReport};
use weylrep_core::weyl::{
    affine_summary, coset_report, stabilizer_search, weyl_subgroup_dx, weyl_subgroup_sl1,
    GroupKind,
};
use weylrep_core::DEFAULT_HEIGHT_BOUND;

#[derive(Parser)]
#[command(
    name = "weylrep",
    version,
    about = "Weyl-group cosets realized by unit groups of cyclic algebras over Q",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count permutations whose cycle type satisfies an exclusion predicate.
    Census {
        /// Degree of the symmetric group.
        #[arg(long)]
        d: usize,
        /// One of: lonely, big, unique-smallest, any.
        #[arg(long)]
        predicate: String,
    },
    /// Closed-form fraction of permutations containing a big cycle.
    Fraction {
        /// Degree of the symmetric group.
        #[arg(long)]
        d: usize,
    },
    /// Load an algebra spec file and run an action on it.
    Algebra {
        /// Path to a TOML spec file with [field] and [algebra] tables.
        #[arg(long)]
        spec: PathBuf,
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Hilbert symbol of a pair of nonzero rationals.
    Hilbert {
        /// First argument, as "num" or "num/den".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second argument, as "num" or "num/den".
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// A prime, or "infinity"; omit to list every relevant place.
        #[arg(long)]
        place: Option<String>,
    },
    /// Test whether a rational is a Galois norm from a field.
    Norm {
        /// Path to a TOML spec file; only its [field] table is used.
        #[arg(long)]
        field: PathBuf,
        /// The norm target, as "num" or "num/den".
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Height bound for the witness search.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
    /// Run self-verification suites against independent oracles.
    Verify {
        /// One of: norms, charpoly, census, hilbert, roots, weyl, all.
        #[arg(long)]
        suite: String,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AlgebraAction {
    /// Degree, parameter, division status, and local data.
    Info {
        /// Height bound for the division test's norm searches.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
    /// Weyl subgroups realized by the unit group and the norm-one subgroup.
    Weyl {
        /// Height bound for the norm-equation searches.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
    /// Verdict for every cycle type of the degree, for both groups.
    Report {
        /// Height bound for the norm-equation searches.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
    /// Enumerate elements with monomial representation up to a height.
    Search {
        /// Height bound for the element coordinates.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error and must exit 1 (not clap's default 2).
            let requested = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            std::process::exit(if requested { 0 } else { 1 });
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Census { d, predicate } => cmd_census(d, &predicate),
        Command::Fraction { d } => cmd_fraction(d),
        Command::Algebra { spec, action } => cmd_algebra(&spec, &action),
        Command::Hilbert { a, b, place } => cmd_hilbert(&a, &b, place.as_deref()),
        Command::Norm { field, c, height } => cmd_norm(&field, &c, height),
        Command::Verify { suite, seed } => cmd_verify(&suite, seed),
    }
}

fn cmd_census(d: usize, predicate: &str) -> Result<i32, String> {
    let pred = Predicate::parse(predicate).ok_or_else(|| {
        format!("unknown predicate '{predicate}' (expected lonely, big, unique-smallest, or any)")
    })?;
    let result = census(d, pred).map_err(|e| e.to_string())?;
    let breakdown = census_breakdown(d, pred).map_err(|e| e.to_string())?;
    println!("census: degree {d}, predicate {pred}");
    println!("  matching cycle types and their permutation counts:");
    if breakdown.is_empty() {
        println!("    (none)");
    }
    for (ct, count) in &breakdown {
        println!("    {ct}: {count}");
    }
    println!(
        "  total: {} of {} permutations, fraction {} ~ {}",
        result.count,
        result.total,
        exact_string(&result.fraction),
        decimal_string(&result.fraction)
    );
    Ok(0)
}

fn cmd_fraction(d: usize) -> Result<i32, String> {
    // Exact harmonic sums stay cheap into the thousands; beyond that the
    // denominators explode, so fall back to floating point (display only).
    const EXACT_LIMIT: usize = 10_000;
    const FLOAT_LIMIT: usize = 100_000_000;
    println!("big-cycle fraction: degree {d}");
    if d <= EXACT_LIMIT {
        let f = big_cycle_fraction_exact(d);
        println!("  exactly {} ~ {}", exact_string(&f), decimal_string(&f));
    } else if d <= FLOAT_LIMIT {
        let f = big_cycle_fraction_f64(d);
        println!("  approximately {f:.10} (exact rendering skipped at this size)");
    } else {
        return Err(format!("degree {d} is too large (limit {FLOAT_LIMIT})"));
    }
    println!("  limiting value as the degree grows: ln 2 ~ 0.6931471805");
    Ok(0)
}

fn cmd_algebra(path: &PathBuf, action: &AlgebraAction) -> Result<i32, String> {
    let file = spec::load_spec(path)?;
    let alg = spec::build_algebra(&file)?;
    match *action {
        AlgebraAction::Info { height } => algebra_info(&alg, height),
        AlgebraAction::Weyl { height } => algebra_weyl(&alg, height),
        AlgebraAction::Report { height } => algebra_report(&alg, height),
        AlgebraAction::Search { height } => algebra_search(&alg, height),
    }
}

fn algebra_info(alg: &Arc<CyclicAlgebra>, height: u32) -> Result<i32, String> {
    println!("algebra: {}", alg.describe());
    println!("  degree: {}", alg.degree());
    println!("  parameter a = {}", exact_string(alg.parameter()));
    let division = is_division(alg, height).map_err(|e| e.to_string())?;
    println!("  division test (height bound {height}): {division}");
    if alg.degree() == 2 {
        let inv = quaternion_invariants(alg).map_err(|e| e.to_string())?;
        let checks = invariant_checks(&inv);
        println!("  local invariants: {inv}");
        println!("  invariant order: {}", checks.order);
        println!("  invariant sum integral: {}", checks.sum_is_integral);
    }
    if alg.degree() >= 3 {
        let report =
            root_of_unity_report(alg.degree() as u64, 10_000).map_err(|e| e.to_string())?;
        println!("  root-of-unity data for the norm-one d-cycle question:");
        for line in report.to_string().lines() {
            println!("    {line}");
        }
    }
    Ok(0)
}

fn algebra_weyl(alg: &Arc<CyclicAlgebra>, height: u32) -> Result<i32, String> {
    let dx = weyl_subgroup_dx(alg, height).map_err(|e| e.to_string())?;
    let sl1 = weyl_subgroup_sl1(alg, height).map_err(|e| e.to_string())?;
    print!("{dx}");
    println!();
    print!("{sl1}");
    println!();
    println!("affine action: {}", affine_summary(alg, height).map_err(|e| e.to_string())?);
    Ok(0)
}

fn algebra_report(alg: &Arc<CyclicAlgebra>, height: u32) -> Result<i32, String> {
    for (i, group) in [GroupKind::UnitGroup, GroupKind::NormOne].into_iter().enumerate() {
        if i > 0 {
            println!();
        }
        let report =
            coset_report(alg.degree(), group, Some(alg), height).map_err(|e| e.to_string())?;
        print!("{report}");
    }
    Ok(0)
}

fn algebra_search(alg: &Arc<CyclicAlgebra>, height: u32) -> Result<i32, String> {
    let search = stabilizer_search(alg, height).map_err(|e| e.to_string())?;
    print!("{search}");
    Ok(0)
}

fn cmd_hilbert(a: &str, b: &str, place: Option<&str>) -> Result<i32, String> {
    let a = parse_rational(a).map_err(|e| e.to_string())?;
    let b = parse_rational(b).map_err(|e| e.to_string())?;
    match place {
        Some(text) => {
            let v: Place = text.parse().map_err(|e| format!("{e}"))?;
            let s = hilbert_symbol(&a, &b, &v).map_err(|e| e.to_string())?;
            println!(
                "hilbert symbol ({}, {}) at {v}: {s}",
                exact_string(&a),
                exact_string(&b)
            );
        }
        None => {
            println!("hilbert symbols of ({}, {}):", exact_string(&a), exact_string(&b));
            let mut product = 1i32;
            for v in relevant_places(&a, &b).map_err(|e| e.to_string())? {
                let s = hilbert_symbol(&a, &b, &v).map_err(|e| e.to_string())?;
                product *= s;
                println!("  at {v}: {s}");
            }
            println!("  product over all places: {product}");
        }
    }
    Ok(0)
}

fn cmd_norm(field_path: &PathBuf, c: &str, height: u32) -> Result<i32, String> {
    let file = spec::load_spec(field_path)?;
    let field = spec::build_field(&file.field)?;
    let c = parse_rational(c).map_err(|e| e.to_string())?;
    println!(
        "norm test: is {} a Galois norm from the {}?",
        exact_string(&c),
        field.describe()
    );
    match is_galois_norm(&field, &c, height).map_err(|e| e.to_string())? {
        NormTest::Yes(w) => println!("  yes: the element {w} has norm {}", exact_string(&c)),
        NormTest::No => println!("  no: refuted exactly by the local criterion"),
        NormTest::Unknown => println!(
            "  unknown: no witness of height at most {height} (bounded search, not a refutation)"
        ),
    }
    Ok(0)
}

fn cmd_verify(suite: &str, seed: u64) -> Result<i32, String> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(seed).map_err(|e| e.to_string())?
    } else {
        vec![run_suite(suite, seed).map_err(|e| e.to_string())?]
    };
    let mut all_passed = true;
    for (i, report) in reports.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("{report}");
        all_passed &= report.passed();
    }
    if all_passed {
        Ok(0)
    } else {
        Ok(2)
    }
}
