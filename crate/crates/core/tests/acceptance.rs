//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them).
//!
//! Criteria A1-A4 and A7-A8 are exact rational identities over fixed grids;
//! A5 and A6 are numeric cross-checks of truncated Dirichlet tails against
//! exact symbolic values, at relative tolerance 1e-3.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;

use hermitian_zeta::arith::l_nonpositive;
use hermitian_zeta::counting::{
    closed_form_counts, r_count, r_star_count, truncated_z, truncated_z_star, QuadraticIntegerRing,
};
use hermitian_zeta::discriminants::{splitting_pairs, two_star};
use hermitian_zeta::eisenstein::{
    dual_constant_term, eisenstein_side, fricke_check, scaling_constant_forms, theta_side,
    z_special_value, z_star_side, z_star_special_value,
};
use hermitian_zeta::euler::{
    euler_factor, ramified_factor_closed_form, theta0_charsum_check, theta1, theta1_divisor_sum,
};
use hermitian_zeta::{characters, discriminants, FundamentalDiscriminant};

const DISCRIMINANTS: [i64; 12] = [-3, -4, -7, -8, -11, -15, -20, -23, -24, -35, -40, -47];
const TRUNCATION: usize = 200;
const NUMERIC_TOLERANCE: f64 = 1e-3;

fn disc(d: i64) -> FundamentalDiscriminant {
    FundamentalDiscriminant::new(d).unwrap()
}

fn full_grid() -> Vec<(i64, u32, u8)> {
    let mut grid = Vec::new();
    for d in DISCRIMINANTS {
        for k in 1..=3u32 {
            for j in 0..=1u8 {
                grid.push((d, k, j));
            }
        }
    }
    grid
}

fn conclude(name: &str, detail: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{name}: PASS ({detail})");
    } else {
        println!("{name}: FAIL ({detail}; {} failing cases)", failures.len());
        for f in failures.iter().take(8) {
            println!("  {f}");
        }
        panic!(
            "{name} failed with {} cases, first: {}",
            failures.len(),
            failures[0]
        );
    }
}

#[test]
fn a1_generating_series_is_eisenstein_combination() {
    let failures: Vec<String> = full_grid()
        .par_iter()
        .flat_map(|&(dv, k, j)| {
            let lhs = theta_side(k, disc(dv), j, TRUNCATION).unwrap();
            let rhs = eisenstein_side(k, disc(dv), j, TRUNCATION).unwrap();
            (0..=TRUNCATION)
                .filter(|&i| lhs.coefficient(i) != rhs.coefficient(i))
                .map(|i| {
                    format!(
                        "D={dv} k={k} j={j} q^{i}: {} vs {}",
                        lhs.coefficient(i),
                        rhs.coefficient(i)
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    conclude(
        "A1 exact identity, all coefficients",
        "12 discriminants x k=1..3 x j=0,1, coefficients 0..=200",
        failures,
    );
}

#[test]
fn a2_coprime_index_subcase() {
    // the sub-grid of indices coprime to 2D, labeled separately so a failure
    // localizes to the extension beyond the coprime reduction
    let failures: Vec<String> = full_grid()
        .par_iter()
        .flat_map(|&(dv, k, j)| {
            let lhs = theta_side(k, disc(dv), j, TRUNCATION).unwrap();
            let rhs = eisenstein_side(k, disc(dv), j, TRUNCATION).unwrap();
            (1..=TRUNCATION)
                .filter(|&i| (i as i64).gcd(&(2 * dv)) == 1)
                .filter(|&i| lhs.coefficient(i) != rhs.coefficient(i))
                .map(|i| format!("D={dv} k={k} j={j} q^{i}"))
                .collect::<Vec<_>>()
        })
        .collect();
    conclude(
        "A2 exact identity, indices coprime to 2D",
        "same grid, gcd(index, 2D) = 1",
        failures,
    );
}

#[test]
fn a3_closed_form_equals_enumeration() {
    let cases: Vec<(i64, i64)> = DISCRIMINANTS
        .iter()
        .flat_map(|&d| (-30i64..=30).map(move |delta| (d, delta)))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .flat_map(|&(dv, delta)| {
            let d = disc(dv);
            let ring = QuadraticIntegerRing::new(d).unwrap();
            let closed = closed_form_counts(delta, d, 60).unwrap();
            (1..=60u64)
                .filter(|&n| closed[n as usize - 1] != BigInt::from(r_count(delta, n, &ring)))
                .map(|n| {
                    format!(
                        "D={dv} delta={delta} n={n}: closed {} vs counted {}",
                        closed[n as usize - 1],
                        r_count(delta, n, &ring)
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    conclude(
        "A3 closed-form counts equal enumeration",
        "12 discriminants x delta=-30..30 (0 included) x n=1..60",
        failures,
    );
}

#[test]
fn a4_fricke_consistency_and_dual_constant() {
    let mut failures: Vec<String> = full_grid()
        .par_iter()
        .filter(|&&(dv, k, j)| !fricke_check(k, disc(dv), j, TRUNCATION).unwrap())
        .map(|&(dv, k, j)| format!("fricke transport mismatch at D={dv} k={k} j={j}"))
        .collect();
    // the dual-side constant term through the symbolic route, sign included
    for (dv, k, j) in full_grid() {
        let d = disc(dv);
        let symbolic = dual_constant_term(k, d, j);
        if symbolic.pi_exponent() != 0 || symbolic.sqrt_abs_d_exponent() != 0 {
            failures.push(format!("dual constant not rational at D={dv} k={k} j={j}"));
            continue;
        }
        let direct = z_star_side(k, d, j, 1).unwrap();
        if direct.coefficient(0) != symbolic.rational_part() {
            failures.push(format!(
                "dual constant mismatch at D={dv} k={k} j={j}: {} vs {}",
                direct.coefficient(0),
                symbolic.rational_part()
            ));
        }
        // and the closed sign pattern itself
        let sign = if j % 2 == 0 { -1 } else { 1 };
        let expected = BigRational::from_integer(BigInt::from(sign))
            * l_nonpositive(&d.character(), -(2 * k as i64))
            / BigRational::from_integer(BigInt::from(2));
        if symbolic.rational_part() != &expected {
            failures.push(format!("dual constant sign at D={dv} k={k} j={j}"));
        }
    }
    conclude(
        "A4 Fricke transport and dual constant term",
        "full grid, exact",
        failures,
    );
}

/// The dual-series numeric criterion, stated as: the truncated sum of
/// `r*((-1)^(j-1) delta, n) / n^(2k+1)` over n <= 2000 agrees with the
/// exact dual special value to 1e-3 relative.
///
/// The divisibility-by-|D| invariant of the raw counts is checked
/// exhaustively first and holds. The series comparison itself is expected
/// to fail, and the failure is genuine rather than a tolerance artifact:
/// the dual closed form `z_star_special_value` takes negative values (for
/// D=-4, k=2, j=0, delta=1 it is -(256 + 1/1024)/(75 pi)), while a series
/// of lattice counts is nonnegative term by term — for that same case the
/// count series is identically zero because no norm is ≡ 3 (mod 4). Where
/// the two sides are both positive (delta coprime to D, matching sign) the
/// measured ratio is 2.000 with further corrections at ramified indices, so
/// no rescaled counting convention can close the gap either: the Dirichlet
/// coefficients forced by the (verified) Fricke transport go negative, e.g.
/// coefficient -48 at n = 16 for D = -4, so they are not counts of
/// anything. The criterion is kept as stated and reports the measured
/// table.
#[test]
fn a5_dual_series_vs_dual_closed_form() {
    let mut failures = Vec::new();

    // divisibility invariant, exhaustive at small moduli
    for dv in [-3i64, -4, -8, -15] {
        let ring = QuadraticIntegerRing::new(disc(dv)).unwrap();
        for delta in -20i64..=20 {
            for n in 1..=20u64 {
                if let Err(e) = r_star_count(delta, n, &ring) {
                    failures.push(format!("divisibility: D={dv} delta={delta} n={n}: {e}"));
                }
            }
        }
    }
    if failures.is_empty() {
        println!("A5a raw-count divisibility by |D|: PASS (D in {{-3,-4,-8,-15}}, |delta| <= 20, n <= 20)");
    }

    let grid: Vec<(i64, u8, i64)> = [-3i64, -4, -8, -15]
        .iter()
        .flat_map(|&d| (0..=1u8).flat_map(move |j| (1i64..=10).map(move |delta| (d, j, delta))))
        .collect();
    let series_failures: Vec<String> = grid
        .par_iter()
        .filter_map(|&(dv, j, delta)| {
            let d = disc(dv);
            let shifted = if j % 2 == 1 { delta } else { -delta };
            let series = truncated_z_star(shifted, d, 2, 2000).unwrap();
            let exact = z_star_special_value(delta, j, d, 2).unwrap().to_f64();
            let rel = (series.sum - exact).abs() / exact.abs().max(f64::MIN_POSITIVE);
            (rel > NUMERIC_TOLERANCE).then(|| {
                format!(
                    "D={dv} k=2 j={j} delta={delta}: series {:.6} vs closed form {:.6} (rel {:.2e})",
                    series.sum, exact, rel
                )
            })
        })
        .collect();
    failures.extend(series_failures);

    conclude(
        "A5 dual series vs dual closed form",
        "D in {-3,-4,-8,-15}, k=2, j=0,1, delta=1..10, n <= 2000, rel 1e-3",
        failures,
    );
}

#[test]
fn a6_special_values_match_truncated_series() {
    let grid: Vec<(i64, u8, i64)> = [-3i64, -4, -7]
        .iter()
        .flat_map(|&d| (0..=1u8).flat_map(move |j| (1i64..=10).map(move |delta| (d, j, delta))))
        .collect();
    let failures: Vec<String> = grid
        .par_iter()
        .filter_map(|&(dv, j, delta)| {
            let d = disc(dv);
            let shifted = if j % 2 == 1 { delta } else { -delta };
            let series = truncated_z(shifted, d, 2, 5000).unwrap();
            let exact = z_special_value(delta, j, d, 2).unwrap().to_f64();
            let rel = (series.sum - exact).abs() / exact.abs();
            (rel > NUMERIC_TOLERANCE).then(|| {
                format!(
                    "D={dv} k=2 j={j} delta={delta}: series {:.8} vs exact {:.8} (rel {:.2e})",
                    series.sum, exact, rel
                )
            })
        })
        .collect();
    conclude(
        "A6 special values vs truncated series",
        "D in {-3,-4,-7}, k=2, j=0,1, delta=1..10, n <= 5000, rel 1e-3",
        failures,
    );
}

#[test]
fn a7_scaling_constant_two_forms() {
    let mut failures = Vec::new();
    for dv in DISCRIMINANTS {
        for k in 1..=4u32 {
            let (direct, via_odd_l_value) = scaling_constant_forms(k, disc(dv));
            if direct != via_odd_l_value {
                failures.push(format!("D={dv} k={k}: {direct} vs {via_odd_l_value}"));
            }
        }
    }
    conclude(
        "A7 scaling constant, both printed forms",
        "12 discriminants x k=1..4, exact symbolic equality",
        failures,
    );
}

#[test]
fn a8_lemma_suites() {
    let mut failures = Vec::new();

    // character factorization over prime discriminants, |n| <= 10^4
    let chi_fact_failures: Vec<String> = DISCRIMINANTS
        .par_iter()
        .flat_map(|&dv| {
            let d = disc(dv);
            (-10_000i64..=10_000)
                .filter(|&n| !discriminants::chi_factorization_check(d, n))
                .map(|n| format!("chi factorization: D={dv} n={n}"))
                .collect::<Vec<_>>()
        })
        .collect();
    failures.extend(chi_fact_failures);

    // splitting-pair invariants and the even-part heredity
    for dv in DISCRIMINANTS {
        let d = disc(dv);
        let pairs = splitting_pairs(d).unwrap();
        if pairs.len() != 1 << d.primes().len() {
            failures.push(format!("splitting count: D={dv}"));
        }
        for pair in pairs {
            if pair.d1.value() * pair.d2.value() != dv || pair.d1.value().gcd(&pair.d2.value()) != 1
            {
                failures.push(format!("splitting product/gcd: D={dv}"));
            }
            for half in [pair.d1, pair.d2] {
                if half.value() % 2 == 0 && two_star(half) != two_star(d) {
                    failures.push(format!("even-part heredity: D={dv} half={}", half));
                }
            }
        }
    }

    // ramified local factors collapse to the closed form for (delta, 2D) = 1,
    // covering all three even sub-cases (D/4 ≡ 2, 6, 3/7 mod 8)
    let ramified_failures: Vec<String> = DISCRIMINANTS
        .par_iter()
        .flat_map(|&dv| {
            let d = disc(dv);
            let mut local = Vec::new();
            for delta in -500i64..=500 {
                if delta == 0 || delta.gcd(&(2 * dv)) != 1 {
                    continue;
                }
                for p in d.primes() {
                    for s in [2i64, 4, 6] {
                        let direct = euler_factor(delta, p, d).unwrap().evaluate_at(s);
                        if direct != ramified_factor_closed_form(delta, p, d, s) {
                            local
                                .push(format!("ramified factor: D={dv} p={p} delta={delta} s={s}"));
                        }
                    }
                }
            }
            local
        })
        .collect();
    failures.extend(ramified_failures);

    // the divisor part of theta is the twisted divisor sum
    for dv in DISCRIMINANTS {
        let d = disc(dv);
        for delta in 1..=200i64 {
            if delta.gcd(&dv) != 1 {
                continue;
            }
            for s in [1i64, 2, 4, 6] {
                if theta1(delta, d, s).unwrap() != theta1_divisor_sum(delta, d, s).unwrap() {
                    failures.push(format!("theta1 divisor sum: D={dv} delta={delta} s={s}"));
                }
            }
        }
    }

    // divisor-sum functional equation, s = 1..6, |delta| <= 500 coprime
    let funceq_failures: Vec<String> = DISCRIMINANTS
        .par_iter()
        .flat_map(|&dv| {
            let chi = disc(dv).character();
            let mut local = Vec::new();
            for s in 1..=6u32 {
                for delta in -500i64..=500 {
                    if delta == 0 || delta.gcd(&dv.abs()) != 1 {
                        continue;
                    }
                    if !characters::sigma_functional_check(&chi, s, delta).unwrap() {
                        local.push(format!("functional equation: D={dv} s={s} delta={delta}"));
                    }
                }
            }
            local
        })
        .collect();
    failures.extend(funceq_failures);

    // ramified product vs splitting-pair character sum
    let charsum_failures: Vec<String> = DISCRIMINANTS
        .par_iter()
        .flat_map(|&dv| {
            let d = disc(dv);
            let mut local = Vec::new();
            for k in 1..=3u32 {
                for j in 0..=1u8 {
                    for delta in 1..=500i64 {
                        if delta.gcd(&(2 * dv)) != 1 {
                            continue;
                        }
                        if !theta0_charsum_check(delta, d, k, j).unwrap() {
                            local.push(format!("charsum: D={dv} k={k} j={j} delta={delta}"));
                        }
                    }
                }
            }
            local
        })
        .collect();
    failures.extend(charsum_failures);

    conclude(
        "A8 lemma suites",
        "character factorization |n|<=1e4, splitting invariants, ramified closed form, divisor part, functional equation, character sum",
        failures,
    );
}
