//! Fundamental discriminants, prime discriminants `p*`, and the coprime
//! splittings `D = D1 * D2` that index the Eisenstein combinations.
//!
//! The unit discriminant 1 is admitted throughout: every splitting list
//! contains the pairs `(D, 1)` and `(1, D)`, and 1 carries the trivial
//! character of modulus 1.

use std::fmt;

use crate::arith::{factorize, is_prime, kronecker_i64, FACTOR_LIMIT};
use crate::characters::QuadraticCharacter;
use crate::error::{Error, Result};

fn squarefree(m: i64) -> bool {
    factorize(m).map(|f| f.is_squarefree()).unwrap_or(false)
}

/// Whether `d` is a fundamental discriminant: 1, a squarefree integer
/// `≡ 1 (mod 4)`, or `4m` with `m ≡ 2, 3 (mod 4)` squarefree.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    assert!(
        d.unsigned_abs() <= FACTOR_LIMIT as u64,
        "discriminant {d} is outside the supported range"
    );
    if d == 1 {
        return true;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
        }
        _ => false,
    }
}

/// A validated fundamental discriminant.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d != 0 && d.unsigned_abs() > FACTOR_LIMIT as u64 {
            return Err(Error::InputTooLarge(d));
        }
        if !is_fundamental(d) {
            return Err(Error::NotFundamental(d));
        }
        Ok(Self(d))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> i64 {
        self.0.abs()
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// The real character `chi_D = (D/.)`.
    pub fn character(self) -> QuadraticCharacter {
        QuadraticCharacter::new(self)
    }

    /// Distinct primes dividing `D`, ascending; empty for `D = 1`.
    pub fn primes(self) -> Vec<i64> {
        factorize(self.0)
            .expect("fundamental discriminants are nonzero and in range")
            .primes()
            .collect()
    }
}

impl fmt::Display for FundamentalDiscriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A prime together with the prime fundamental discriminant attached to it.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimeDiscriminant {
    pub prime: i64,
    pub star: i64,
}

/// `p* = (-1/p) p` for an odd prime: `p` if `p ≡ 1 (mod 4)`, else `-p`.
pub fn odd_prime_star(p: i64) -> Result<PrimeDiscriminant> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let star = if p % 4 == 1 { p } else { -p };
    Ok(PrimeDiscriminant { prime: p, star })
}

/// The even prime discriminant `2*_D` attached to `D`: one of 1, -4, 8, -8.
///
/// Computed from the residue of `D/4` modulo 8 and cross-checked against the
/// defining quotient `D / prod(p*)` over the odd primes dividing `D`.
pub fn two_star(d: FundamentalDiscriminant) -> i64 {
    let v = d.value();
    let star = if v % 2 != 0 {
        1
    } else {
        match (v / 4).rem_euclid(8) {
            3 | 7 => -4,
            2 => 8,
            6 => -8,
            r => unreachable!("fundamental discriminant {v} with quarter ≡ {r} (mod 8)"),
        }
    };
    let odd_product: i64 = d
        .primes()
        .into_iter()
        .filter(|&p| p != 2)
        .map(|p| odd_prime_star(p).unwrap().star)
        .product();
    assert_eq!(
        star * odd_product,
        v,
        "prime discriminants of {v} do not multiply back"
    );
    star
}

/// `p*` for any prime dividing `D`, using `2*_D` at the prime 2.
pub fn prime_star(p: i64, d: FundamentalDiscriminant) -> i64 {
    if p == 2 {
        two_star(d)
    } else {
        odd_prime_star(p).expect("odd prime divisor").star
    }
}

/// One coprime splitting `D = d1 * d2` into fundamental discriminants.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SplittingPair {
    pub d1: FundamentalDiscriminant,
    pub d2: FundamentalDiscriminant,
}

/// All coprime splittings of a negative fundamental discriminant, one for
/// each subset of its prime divisors.
///
/// Subsets are walked by bitmask over the ascending primes, so the output
/// order is reproducible: `d2` is the product of `p*` over the chosen subset
/// and `d1` the complementary product.
pub fn splitting_pairs(d: FundamentalDiscriminant) -> Result<Vec<SplittingPair>> {
    if !d.is_negative() {
        return Err(Error::NotNegativeDiscriminant(d.value()));
    }
    let stars: Vec<i64> = d.primes().into_iter().map(|p| prime_star(p, d)).collect();
    let mut out = Vec::with_capacity(1 << stars.len());
    for mask in 0u32..(1 << stars.len()) {
        let d2: i64 = stars
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .product();
        let d1 = d.value() / d2;
        out.push(SplittingPair {
            d1: FundamentalDiscriminant::new(d1).expect("splitting factor is fundamental"),
            d2: FundamentalDiscriminant::new(d2).expect("splitting factor is fundamental"),
        });
    }
    Ok(out)
}

/// Whether `chi_D(n)` agrees with the product of `chi_{p*}(n)` over the
/// primes dividing `D`.
pub fn chi_factorization_check(d: FundamentalDiscriminant, n: i64) -> bool {
    let direct = kronecker_i64(d.value(), n);
    let product: i32 = d
        .primes()
        .into_iter()
        .map(|p| kronecker_i64(prime_star(p, d), n))
        .product();
    direct == product
}
