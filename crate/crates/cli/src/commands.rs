//! One handler per subcommand; each returns the process exit code.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use serde::Serialize;
use serde_json::Value;

use galdim_core::classify::{av_verdict, tame_admissible_dims, LocalFieldParams};
use galdim_core::germain::sg_report;
use galdim_core::ntheory::{cyclotomic_poly, euler_phi, inverse_totient, ramanujan_sum};
use galdim_core::tamerep::{build_tame_rep, RepError, TameRepModel};
use galdim_core::Rational;

use crate::output::print_json;
use crate::Command;

pub fn run(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::TameDims { p, f, max_dim, json } => tame_dims(p, f, max_dim, json),
        Command::CheckAv { p, f, d, json } => check_av(p, f, d, json),
        Command::BuildRep { m, q, verify, json, out } => build_rep(m, q, verify, json, out),
        Command::InverseTotient { d, json } => inverse_totient_cmd(d, json),
        Command::Sg { x, prime_bound, json, csv } => sg(x, prime_bound, json, csv),
    }
}

fn field_params(p: u64, f: u32) -> anyhow::Result<LocalFieldParams> {
    LocalFieldParams::new(p, f).map_err(|e| anyhow::anyhow!(e))
}

// ---------- tame-dims ----------

#[derive(Serialize)]
struct TameDimsParams {
    p: u64,
    f: u32,
    max_dim: u64,
}

#[derive(Serialize)]
struct DimRow {
    d: u64,
    witnesses: Vec<u64>,
}

#[derive(Serialize)]
struct TameDimsResult {
    field: LocalFieldParams,
    dims: Vec<DimRow>,
}

fn tame_dims(p: u64, f: u32, max_dim: u64, json: bool) -> anyhow::Result<i32> {
    if max_dim < 1 {
        bail!("--max-dim must be at least 1");
    }
    let field = field_params(p, f)?;
    let dims: Vec<DimRow> = tame_admissible_dims(&field, max_dim)
        .into_iter()
        .map(|(d, witnesses)| DimRow { d, witnesses })
        .collect();
    if json {
        print_json(
            "tame-dims",
            TameDimsParams { p, f, max_dim },
            TameDimsResult { field, dims },
        )?;
    } else {
        println!("field: {field}");
        println!("admissible tame dimensions d <= {max_dim}:");
        for row in &dims {
            let ms: Vec<String> = row.witnesses.iter().map(|m| m.to_string()).collect();
            println!("  d = {}: m = {}", row.d, ms.join(", "));
        }
    }
    Ok(0)
}

// ---------- check-av ----------

#[derive(Serialize)]
struct CheckAvParams {
    p: u64,
    f: u32,
    d: u64,
}

fn check_av(p: u64, f: u32, d: u64, json: bool) -> anyhow::Result<i32> {
    if d < 1 {
        bail!("--d must be at least 1");
    }
    let field = field_params(p, f)?;
    let verdict = av_verdict(&field, d);
    if json {
        print_json("check-av", CheckAvParams { p, f, d }, &verdict)?;
    } else {
        println!("field: {field}");
        println!(
            "abelian variety dimension d = {} (representation dimension {})",
            verdict.d, verdict.rep_dim
        );
        println!("conclusion: {:?}", verdict.conclusion);
        for reason in &verdict.reasons {
            println!("  - {reason}");
        }
    }
    Ok(0)
}

// ---------- build-rep ----------

#[derive(Serialize)]
struct BuildRepParams {
    m: u64,
    q: u64,
    verify: bool,
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct CheckOutcome {
    check: &'static str,
    status: &'static str, // "pass" | "fail" | "skipped"
    detail: String,
}

#[derive(Serialize)]
struct Verification {
    performed: bool,
    all_passed: Option<bool>,
    irreducible: Option<bool>,
    commutant_dim: Option<usize>,
    checks: Vec<CheckOutcome>,
}

#[derive(Serialize)]
struct BuildRepResult {
    model: Value,
    verification: Verification,
    output_file: Option<PathBuf>,
}

fn build_rep(
    m: u64,
    q: u64,
    verify: bool,
    json: bool,
    out: Option<PathBuf>,
) -> anyhow::Result<i32> {
    if m < 1 {
        bail!("--m must be at least 1");
    }
    let rep = match build_tame_rep(m, q) {
        Ok(rep) => rep,
        Err(e @ (RepError::NotCoprime { .. } | RepError::ResidueSizeTooSmall { .. })) => {
            bail!("{e}");
        }
        Err(e) => bail!("cannot build the model: {e}"),
    };
    let verification = if verify {
        run_verification(&rep)
    } else {
        Verification {
            performed: false,
            all_passed: None,
            irreducible: None,
            commutant_dim: None,
            checks: Vec::new(),
        }
    };
    let model = rep.to_json();
    if let Some(path) = &out {
        fs::write(path, serde_json::to_string(&model)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let failed = verification
        .checks
        .iter()
        .any(|c| c.status == "fail");
    if json {
        print_json(
            "build-rep",
            BuildRepParams { m, q, verify, out: out.clone() },
            BuildRepResult {
                model,
                verification,
                output_file: out,
            },
        )?;
    } else {
        println!(
            "tame model m = {}, q = {}: dimension {} over Q(zeta_{})",
            rep.m(),
            rep.q(),
            rep.dim(),
            rep.m()
        );
        println!("basis (units mod {}): {:?}", rep.m(), rep.basis_index());
        if let Some(path) = &out {
            println!("model written to {}", path.display());
        }
        if verification.performed {
            println!("verification:");
            for c in &verification.checks {
                println!("  [{}] {}: {}", c.status, c.check, c.detail);
            }
            if verification.all_passed == Some(true) {
                println!("all checks passed");
            } else {
                println!("VERIFICATION FAILED");
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn run_verification(rep: &TameRepModel) -> Verification {
    let mut checks = Vec::new();
    let m = rep.m();

    let frobenius_ok = rep.verify_frobenius_relation();
    checks.push(CheckOutcome {
        check: "frobenius_relation",
        status: if frobenius_ok { "pass" } else { "fail" },
        detail: format!("phi^-1 tau phi = tau^{} checked entry-exactly", rep.q()),
    });

    match rep.charpoly_tau() {
        Ok(coeffs) => {
            let ok = coeffs == cyclotomic_poly(m).coeffs();
            checks.push(CheckOutcome {
                check: "charpoly_is_cyclotomic",
                status: if ok { "pass" } else { "fail" },
                detail: format!("det(X I - tau) compared with Phi_{m}"),
            });
        }
        Err(RepError::Cyclo(e)) => checks.push(CheckOutcome {
            check: "charpoly_is_cyclotomic",
            status: "skipped",
            detail: e.to_string(),
        }),
        Err(e) => checks.push(CheckOutcome {
            check: "charpoly_is_cyclotomic",
            status: "fail",
            detail: e.to_string(),
        }),
    }

    if euler_phi(m) <= 64 {
        let mut bad = None;
        for k in 0..m as i64 {
            match rep.inertia_trace(k) {
                Ok(t) if t == Rational::from_integer(ramanujan_sum(m, k).into()) => {}
                Ok(t) => {
                    bad = Some(format!("trace(tau^{k}) = {t} != c_{m}({k})"));
                    break;
                }
                Err(e) => {
                    bad = Some(e.to_string());
                    break;
                }
            }
        }
        checks.push(match bad {
            None => CheckOutcome {
                check: "inertia_traces_are_ramanujan_sums",
                status: "pass",
                detail: format!("{m} exponents checked, zero tolerance"),
            },
            Some(detail) => CheckOutcome {
                check: "inertia_traces_are_ramanujan_sums",
                status: "fail",
                detail,
            },
        });
    } else {
        checks.push(CheckOutcome {
            check: "inertia_traces_are_ramanujan_sums",
            status: "skipped",
            detail: format!("dimension {} above the trace-suite bound 64", rep.dim()),
        });
    }

    let mut irreducible = None;
    let mut commutant_dim = None;
    match rep.commutant_report() {
        Ok(report) => {
            let ord_ok = report.commutant_dim as u64 == euler_phi(m) / report.q_order
                && report.commutant_dim == report.orbit_count;
            irreducible = Some(report.is_abs_irreducible);
            commutant_dim = Some(report.commutant_dim);
            checks.push(CheckOutcome {
                check: "commutant_schur_consistency",
                status: if ord_ok { "pass" } else { "fail" },
                detail: format!(
                    "commutant_dim = {} = phi(m)/ord = orbit count; irreducible = {}",
                    report.commutant_dim, report.is_abs_irreducible
                ),
            });
        }
        Err(RepError::DimensionBound { dim, bound }) => checks.push(CheckOutcome {
            check: "commutant_schur_consistency",
            status: "skipped",
            detail: format!("dimension {dim} above the commutant bound {bound}"),
        }),
        Err(e) => checks.push(CheckOutcome {
            check: "commutant_schur_consistency",
            status: "fail",
            detail: e.to_string(),
        }),
    }

    let all_passed = checks.iter().all(|c| c.status != "fail");
    Verification {
        performed: true,
        all_passed: Some(all_passed),
        irreducible,
        commutant_dim,
        checks,
    }
}

// ---------- inverse-totient ----------

#[derive(Serialize)]
struct InverseTotientParams {
    d: u64,
}

#[derive(Serialize)]
struct InverseTotientResult {
    d: u64,
    preimages: Vec<u64>,
    is_totient: bool,
}

fn inverse_totient_cmd(d: u64, json: bool) -> anyhow::Result<i32> {
    if d < 1 {
        bail!("--d must be at least 1");
    }
    let preimages = inverse_totient(d);
    let is_totient = !preimages.is_empty();
    if json {
        print_json(
            "inverse-totient",
            InverseTotientParams { d },
            InverseTotientResult { d, preimages, is_totient },
        )?;
    } else if is_totient {
        let ms: Vec<String> = preimages.iter().map(|m| m.to_string()).collect();
        println!("phi(m) = {d} for m = {}", ms.join(", "));
    } else {
        println!("phi(m) = {d} has no solutions ({d} is a non-totient)");
    }
    Ok(0)
}

// ---------- sg ----------

#[derive(Serialize)]
struct SgParams {
    x: u64,
    prime_bound: u64,
}

fn sg(x: u64, prime_bound: u64, json: bool, csv: bool) -> anyhow::Result<i32> {
    let report = sg_report(x, prime_bound).map_err(|e| anyhow::anyhow!(e))?;
    if json {
        print_json("sg", SgParams { x, prime_bound }, &report)?;
    } else if csv {
        println!("{}", galdim_core::germain::SgReport::csv_header());
        println!("{}", report.csv_row());
    } else {
        println!(
            "Sophie Germain census up to x = {x} (Euler product over primes <= {prime_bound})"
        );
        println!(
            "  C = {:.6} (truncation error <= {:.2e})",
            report.constant_used, report.constant_truncation_error
        );
        println!("  actual count:               {}", report.actual);
        println!(
            "  pi(x):                      {}  (Sophie Germain fraction {:.4})",
            report.pi_x, report.sg_fraction
        );
        println!(
            "  prediction C x/(ln x)^2:    {:.1}  (ratio {:.4})",
            report.predicted_simple, report.ratio_simple
        );
        println!(
            "  prediction sum form:        {:.1}  (ratio {:.4})",
            report.predicted_sum, report.ratio_sum
        );
    }
    Ok(0)
}
