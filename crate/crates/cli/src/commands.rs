//! Subcommand implementations. Each returns the process exit code: 0 when
//! every check passes or the output was produced, 1 when a verification
//! check or count diagnostic fails.

use num_integer::Integer;
use rayon::prelude::*;

use hermitian_zeta::characters::sigma_functional_check;
use hermitian_zeta::counting::{closed_form_counts, r_count, FastCounter, QuadraticIntegerRing};
use hermitian_zeta::discriminants::chi_factorization_check;
use hermitian_zeta::eisenstein::{
    dual_constant_term, eisenstein_expansion, fricke_check, verify_identity, z_special_value,
    z_star_side,
};
use hermitian_zeta::euler::theta0_charsum_check;
use hermitian_zeta::{FundamentalDiscriminant, QuadraticCharacter};

use crate::config::{
    validate_discs, validate_j, validate_k, validate_modulus_range, validate_truncation, CountArgs,
    EisensteinArgs, InclusiveRange, OracleArgs, TableArgs, VerifyArgs,
};
use crate::output::{
    write_counts, write_eisenstein, write_report, write_table, CheckRecord, CheckReport, CountRow,
    EisensteinRow, TableRow,
};

pub fn table(args: TableArgs) -> Result<i32, String> {
    let discs = validate_discs(&args.disc)?;
    let ks = validate_k(args.k)?;
    let js = validate_j(&args.j)?;
    if args.delta.start < 1 {
        return Err(format!(
            "table shifts must be positive, got {}",
            args.delta.start
        ));
    }
    let mut grid = Vec::new();
    for &d in &discs {
        for &k in &ks {
            for &j in &js {
                for delta in args.delta.iter() {
                    grid.push((d, k, j, delta));
                }
            }
        }
    }
    let rows = grid
        .par_iter()
        .map(|&(d, k, j, delta)| {
            let value = z_special_value(delta, j, d, k).map_err(|e| e.to_string())?;
            Ok(TableRow {
                d: d.value(),
                k,
                j,
                delta,
                num: value.rational_part().numer().to_string(),
                den: value.rational_part().denom().to_string(),
                pi_exp: value.pi_exponent(),
                sqrt_d_exp: value.sqrt_abs_d_exponent(),
                float_approx: value.to_f64(),
                paper_eq: "z-special-value",
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    write_table(&rows, args.output.format, &args.output.out)?;
    Ok(0)
}

pub fn count(args: CountArgs) -> Result<i32, String> {
    let discs = validate_discs(&args.disc)?;
    let n_range = validate_modulus_range(args.n)?;
    let per_disc: Vec<Result<Vec<CountRow>, String>> = discs
        .par_iter()
        .map(|&d| {
            let ring = QuadraticIntegerRing::new(d).map_err(|e| e.to_string())?;
            let mut counter = FastCounter::new(ring);
            let mut rows = Vec::new();
            for delta in args.delta.iter() {
                for n in n_range.iter() {
                    let n = n as u64;
                    let r = counter.r_count(delta, n);
                    let r_star = counter.r_star_count(delta, n).map_err(|e| e.to_string())?;
                    rows.push(CountRow {
                        d: d.value(),
                        delta,
                        n,
                        r,
                        r_star,
                        paper_eq: "representation-counts",
                    });
                }
            }
            Ok(rows)
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_disc {
        match r {
            Ok(mut batch) => rows.append(&mut batch),
            Err(e) => {
                eprintln!("count diagnostic failed: {e}");
                return Ok(1);
            }
        }
    }
    write_counts(&rows, args.output.format, &args.output.out)?;
    Ok(0)
}

pub fn eisenstein(args: EisensteinArgs) -> Result<i32, String> {
    let discs = validate_discs(&args.disc)?;
    let ks = validate_k(args.k)?;
    let truncation = validate_truncation(args.truncation)?;
    let grid: Vec<(FundamentalDiscriminant, u32)> = discs
        .iter()
        .flat_map(|&d| ks.iter().map(move |&k| (d, k)))
        .collect();
    let rows = grid
        .par_iter()
        .map(|&(d, k)| {
            let series = eisenstein_expansion(
                &d.character(),
                &QuadraticCharacter::trivial(),
                2 * k as i64 + 1,
                truncation,
            )
            .map_err(|e| e.to_string())?;
            Ok((0..=truncation)
                .map(|index| EisensteinRow {
                    d: d.value(),
                    k,
                    index,
                    num: series.coefficient(index).numer().to_string(),
                    den: series.coefficient(index).denom().to_string(),
                    paper_eq: "eisenstein-coefficient",
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>, String>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    write_eisenstein(&rows, args.output.format, &args.output.out)?;
    Ok(0)
}

fn oracle_check(
    d: FundamentalDiscriminant,
    delta_range: InclusiveRange,
    n_range: InclusiveRange,
) -> Result<CheckRecord, String> {
    let ring = QuadraticIntegerRing::new(d).map_err(|e| e.to_string())?;
    let len = n_range.end as usize;
    let mut mismatches = Vec::new();
    for delta in delta_range.iter() {
        let closed = closed_form_counts(delta, d, len).map_err(|e| e.to_string())?;
        for n in n_range.iter() {
            let counted = r_count(delta, n as u64, &ring);
            if closed[n as usize - 1] != counted.into() {
                mismatches.push(format!(
                    "delta={delta} n={n}: closed {} vs counted {counted}",
                    closed[n as usize - 1]
                ));
            }
        }
    }
    Ok(CheckRecord {
        check: "closed-form-oracle",
        d: d.value(),
        k: None,
        j: None,
        passed: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("delta {delta_range}, n {n_range}")
        } else {
            mismatches.truncate(3);
            mismatches.join("; ")
        },
        paper_eq: "closed-form-counts",
    })
}

pub fn oracle(args: OracleArgs) -> Result<i32, String> {
    let discs = validate_discs(&args.disc)?;
    let n_range = validate_modulus_range(args.n)?;
    let checks = discs
        .par_iter()
        .map(|&d| oracle_check(d, args.delta, n_range))
        .collect::<Result<Vec<_>, String>>()?;
    let report = CheckReport::new(checks);
    let passed = report.all_passed();
    write_report(&report, args.output.format, &args.output.out)?;
    Ok(if passed { 0 } else { 1 })
}

pub fn verify(args: VerifyArgs) -> Result<i32, String> {
    let discs = validate_discs(&args.disc)?;
    let ks = validate_k(args.k)?;
    let js = validate_j(&args.j)?;
    let truncation = validate_truncation(args.truncation)?;
    let n_range = validate_modulus_range(args.n)?;

    let mut cells: Vec<(FundamentalDiscriminant, u32, u8)> = Vec::new();
    for &d in &discs {
        for &k in &ks {
            for &j in &js {
                cells.push((d, k, j));
            }
        }
    }

    // the heavy per-cell identity and involution checks, in parallel
    let cell_checks = cells
        .par_iter()
        .map(|&(d, k, j)| -> Result<Vec<CheckRecord>, String> {
            let mut out = Vec::new();
            let report = verify_identity(k, d, j, truncation).map_err(|e| e.to_string())?;
            out.push(CheckRecord {
                check: "identity",
                d: d.value(),
                k: Some(k),
                j: Some(j),
                passed: report.is_verified(),
                detail: if report.is_verified() {
                    format!("coefficients 0..={truncation}")
                } else {
                    let first = &report.mismatches[0];
                    format!(
                        "{} mismatches, first at q^{}: {} vs {}",
                        report.mismatches.len(),
                        first.index,
                        first.theta_side,
                        first.eisenstein_side
                    )
                },
                paper_eq: "theta-eisenstein-identity",
            });

            let fricke_ok = fricke_check(k, d, j, truncation).map_err(|e| e.to_string())?;
            let constant = dual_constant_term(k, d, j);
            let dual = z_star_side(k, d, j, 1).map_err(|e| e.to_string())?;
            let constant_ok = constant.pi_exponent() == 0
                && constant.sqrt_abs_d_exponent() == 0
                && dual.coefficient(0) == constant.rational_part();
            out.push(CheckRecord {
                check: "fricke",
                d: d.value(),
                k: Some(k),
                j: Some(j),
                passed: fricke_ok && constant_ok,
                detail: format!(
                    "transport {} constant term {}",
                    if fricke_ok { "ok" } else { "mismatch" },
                    if constant_ok { "ok" } else { "mismatch" }
                ),
                paper_eq: "fricke-dual-identity",
            });

            let mut charsum_failures = Vec::new();
            let mut checked = 0usize;
            for delta in args.delta.iter() {
                if delta <= 0 || delta.gcd(&(2 * d.value())) != 1 {
                    continue;
                }
                checked += 1;
                if !theta0_charsum_check(delta, d, k, j).map_err(|e| e.to_string())? {
                    charsum_failures.push(delta);
                }
            }
            out.push(CheckRecord {
                check: "character-sum",
                d: d.value(),
                k: Some(k),
                j: Some(j),
                passed: charsum_failures.is_empty(),
                detail: if charsum_failures.is_empty() {
                    format!("{checked} coprime shifts in {}", args.delta)
                } else {
                    format!("failing shifts {charsum_failures:?}")
                },
                paper_eq: "theta0-character-sum",
            });
            Ok(out)
        })
        .collect::<Result<Vec<_>, String>>()?;

    let disc_checks = discs
        .par_iter()
        .map(|&d| -> Result<Vec<CheckRecord>, String> {
            let mut out = Vec::new();

            let bad_n = (-10_000i64..=10_000).find(|&n| !chi_factorization_check(d, n));
            out.push(CheckRecord {
                check: "character-factorization",
                d: d.value(),
                k: None,
                j: None,
                passed: bad_n.is_none(),
                detail: bad_n.map_or("|n| <= 10000".to_string(), |n| format!("fails at n={n}")),
                paper_eq: "character-factorization",
            });

            let chi = d.character();
            let mut funceq_failures = Vec::new();
            for s in 1..=6u32 {
                for delta in args.delta.iter() {
                    if delta == 0 || delta.gcd(&d.abs()) != 1 {
                        continue;
                    }
                    if !sigma_functional_check(&chi, s, delta).map_err(|e| e.to_string())? {
                        funceq_failures.push((s, delta));
                    }
                }
            }
            out.push(CheckRecord {
                check: "functional-equation",
                d: d.value(),
                k: None,
                j: None,
                passed: funceq_failures.is_empty(),
                detail: if funceq_failures.is_empty() {
                    format!("s 1..6, coprime shifts in {}", args.delta)
                } else {
                    format!("failing (s, delta) {funceq_failures:?}")
                },
                paper_eq: "divisor-sum-functional-equation",
            });

            out.push(oracle_check(d, args.delta, n_range)?);
            Ok(out)
        })
        .collect::<Result<Vec<_>, String>>()?;

    let mut checks: Vec<CheckRecord> = cell_checks.into_iter().flatten().collect();
    checks.extend(disc_checks.into_iter().flatten());
    let report = CheckReport::new(checks);
    let passed = report.all_passed();
    write_report(&report, args.output.format, &args.output.out)?;
    Ok(if passed { 0 } else { 1 })
}
