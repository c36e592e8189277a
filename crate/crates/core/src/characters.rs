//! Real quadratic Dirichlet characters and twisted divisor sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{big, factorize, kronecker_i64, rational_power};
use crate::discriminants::FundamentalDiscriminant;
use crate::error::{Error, Result};

/// The real character `chi_D(n) = (D/n)` for a fundamental discriminant `D`,
/// including the trivial character of modulus 1.
///
/// The modulus-1 character evaluates to 1 at every integer, zero and
/// negatives included; that convention is forced by the constant terms of
/// the Eisenstein expansions and by divisor sums whose cofactor shares a
/// factor with `D`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticCharacter {
    disc: i64,
    modulus: i64,
}

impl QuadraticCharacter {
    /// The trivial character of modulus 1.
    pub fn trivial() -> Self {
        Self {
            disc: 1,
            modulus: 1,
        }
    }

    pub fn new(d: FundamentalDiscriminant) -> Self {
        Self {
            disc: d.value(),
            modulus: d.abs(),
        }
    }

    pub fn from_discriminant(d: i64) -> Result<Self> {
        FundamentalDiscriminant::new(d).map(Self::new)
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn is_trivial(&self) -> bool {
        self.modulus == 1
    }

    pub fn eval(&self, n: i64) -> i32 {
        kronecker_i64(self.disc, n)
    }
}

/// Twisted divisor sum `sigma_t(chi1, chi2; n) = sum_{d|n, d>0} chi1(d)
/// chi2(n/d) d^t`.
///
/// Divisors run over the positive divisors of `|n|`; for negative `n` the
/// cofactor `n/d` is negative and `chi2` sees its sign.
pub fn sigma(
    chi1: &QuadraticCharacter,
    chi2: &QuadraticCharacter,
    t: u32,
    n: i64,
) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut acc = BigInt::zero();
    for d in factorize(n)?.divisors() {
        let c1 = chi1.eval(d);
        if c1 == 0 {
            continue;
        }
        let c2 = chi2.eval(n / d);
        if c2 == 0 {
            continue;
        }
        acc += big((c1 * c2) as i64) * big(d).pow(t);
    }
    Ok(acc)
}

/// [`sigma`] with an arbitrary integer exponent, negative exponents giving
/// exact rationals.
pub fn sigma_rational(
    chi1: &QuadraticCharacter,
    chi2: &QuadraticCharacter,
    t: i64,
    n: i64,
) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut acc = BigRational::zero();
    for d in factorize(n)?.divisors() {
        let c1 = chi1.eval(d);
        if c1 == 0 {
            continue;
        }
        let c2 = chi2.eval(n / d);
        if c2 == 0 {
            continue;
        }
        acc += crate::arith::rat((c1 * c2) as i64) * rational_power(d, t);
    }
    Ok(acc)
}

/// Whether `|delta|^s sigma_{-s}(chi; delta) = chi(|delta|) sigma_s(chi;
/// delta)` holds exactly.
///
/// This is the divisor-sum functional equation; it requires the modulus of
/// `chi` to be coprime to `delta` (a real character is its own inverse).
pub fn sigma_functional_check(chi: &QuadraticCharacter, s: u32, delta: i64) -> Result<bool> {
    if delta == 0 {
        return Err(Error::ZeroArgument);
    }
    if chi.modulus().gcd(&delta) != 1 {
        return Err(Error::NotCoprime {
            a: chi.modulus(),
            b: delta,
        });
    }
    assert!(s >= 1);
    let trivial = QuadraticCharacter::trivial();
    let lhs =
        rational_power(delta.abs(), s as i64) * sigma_rational(chi, &trivial, -(s as i64), delta)?;
    let rhs = crate::arith::rat(chi.eval(delta.abs()) as i64)
        * sigma_rational(chi, &trivial, s as i64, delta)?;
    Ok(lhs == rhs)
}
