//! Local factors `R_p(delta, X)` and the finite Euler products `theta`,
//! `theta0`, `theta1` built from them.
//!
//! `theta(delta, s)` is the ramified-and-divisor part of the Dirichlet
//! series counting norm-form representations: a product of integer
//! polynomials in `X = p^(-1-s)` over the primes dividing `D * delta`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{big, factorize, is_prime, kronecker, kronecker_i64, rat, valuation};
use crate::characters::{sigma_rational, QuadraticCharacter};
use crate::discriminants::{splitting_pairs, FundamentalDiscriminant};
use crate::error::{Error, Result};

/// The local factor `R_p(delta, X)` as an integer polynomial in `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactorPolynomial {
    prime: i64,
    coefficients: Vec<BigInt>,
}

impl EulerFactorPolynomial {
    pub fn prime(&self) -> i64 {
        self.prime
    }

    /// Coefficient of `X^i` at index `i`; the constant coefficient is 1.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Value at `X = p^(-1-s)`.
    pub fn evaluate_at(&self, s: i64) -> BigRational {
        assert!(s >= 0);
        let x = BigRational::new(BigInt::one(), big(self.prime).pow(1 + s as u32));
        self.evaluate(&x)
    }
}

/// The local factor at `p` of the norm-form counting series for a nonzero
/// shift `delta`, with `t` the exact power of `p` in `delta`.
///
/// For `p` not dividing `D` this is the geometric sum of length `t + 1` in
/// `chi_D(p) p X`; for `p | D` it is a binomial whose Kronecker symbol and
/// degree depend on the ramification, with the three even cases keyed on the
/// residue of `D/4` modulo 8.
pub fn euler_factor(
    delta: i64,
    p: i64,
    d: FundamentalDiscriminant,
) -> Result<EulerFactorPolynomial> {
    if delta == 0 {
        return Err(Error::ZeroArgument);
    }
    if !d.is_negative() {
        return Err(Error::NotNegativeDiscriminant(d.value()));
    }
    debug_assert!(is_prime(p));
    let dv = d.value();
    let (t, delta0) = valuation(delta, p)?;
    let t_usize = t as usize;

    let coefficients = if dv % p != 0 {
        let chi_p = kronecker_i64(dv, p) as i64;
        let mut coeffs = Vec::with_capacity(t_usize + 1);
        coeffs.push(BigInt::one());
        for i in 1..=t_usize {
            let prev = coeffs[i - 1].clone();
            coeffs.push(prev * big(chi_p * p));
        }
        coeffs
    } else if p != 2 {
        let d0 = dv / p;
        let arg = -big(d0.abs()).pow(t) * big(delta0);
        let sym = kronecker(&arg, &big(p)) as i64;
        let mut coeffs = vec![BigInt::zero(); t_usize + 2];
        coeffs[0] = BigInt::one();
        coeffs[t_usize + 1] = big(sym) * big(p).pow(t + 1);
        coeffs
    } else {
        // p = 2 and 4 | D; `half_disc` is D/4 and `odd_complement` its odd
        // companion in the symbol argument
        let half_disc = dv / 4;
        let (sign, top, extra): (i64, i64, u32) = match half_disc.rem_euclid(8) {
            2 => (1, 8, 3),
            6 => (-1, -8, 3),
            3 | 7 => (-1, -4, 2),
            r => unreachable!("fundamental discriminant {dv} with D/4 ≡ {r} (mod 8)"),
        };
        let odd_complement = if half_disc.rem_euclid(4) == 2 {
            -half_disc / 2
        } else {
            (1 - half_disc) / 2
        };
        let arg = big(delta0) * big(odd_complement).pow(t);
        let sym = kronecker(&big(top), &arg) as i64;
        let deg = t_usize + extra as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[0] = BigInt::one();
        coeffs[deg] = big(sign * sym) * big(2).pow(deg as u32);
        coeffs
    };

    Ok(EulerFactorPolynomial {
        prime: p,
        coefficients,
    })
}

fn support_primes(delta: i64, d: FundamentalDiscriminant) -> Result<Vec<i64>> {
    let mut primes = d.primes();
    for p in factorize(delta)?.primes() {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes.sort_unstable();
    Ok(primes)
}

/// `theta(delta, s)`: the product of `R_p(delta, p^(-1-s))` over the primes
/// dividing `D * delta`, as an exact rational.
pub fn theta(delta: i64, d: FundamentalDiscriminant, s: i64) -> Result<BigRational> {
    if delta == 0 {
        return Err(Error::ZeroArgument);
    }
    assert!(s >= 1);
    let mut acc = BigRational::one();
    for p in support_primes(delta, d)? {
        acc *= euler_factor(delta, p, d)?.evaluate_at(s);
    }
    Ok(acc)
}

fn require_coprime_to_disc(delta: i64, d: FundamentalDiscriminant) -> Result<()> {
    if delta == 0 {
        return Err(Error::ZeroArgument);
    }
    if delta.gcd(&d.value()) != 1 {
        return Err(Error::NotCoprime {
            a: delta,
            b: d.value(),
        });
    }
    Ok(())
}

/// The ramified part of [`theta`]: the product over primes dividing `D`.
/// Requires `delta` coprime to `D`.
pub fn theta0(delta: i64, d: FundamentalDiscriminant, s: i64) -> Result<BigRational> {
    require_coprime_to_disc(delta, d)?;
    let mut acc = BigRational::one();
    for p in d.primes() {
        acc *= euler_factor(delta, p, d)?.evaluate_at(s);
    }
    Ok(acc)
}

/// The divisor part of [`theta`]: the product over primes dividing `delta`.
/// Requires `delta` coprime to `D`; equals the twisted divisor sum
/// `sigma_{-s}(chi_D; delta)`.
pub fn theta1(delta: i64, d: FundamentalDiscriminant, s: i64) -> Result<BigRational> {
    require_coprime_to_disc(delta, d)?;
    let mut acc = BigRational::one();
    for p in factorize(delta)?.primes() {
        acc *= euler_factor(delta, p, d)?.evaluate_at(s);
    }
    Ok(acc)
}

/// Whether the ramified product collapses to the splitting-pair character
/// sum:
/// `chi_D(delta) (-1)^(j-1) |D|^(2k) theta0((-1)^j delta, 2k)
///  = sum over (d1, d2) of chi_{d2}((-1)^(j-1) delta) |d2|^(2k)`,
/// exactly, for positive `delta` coprime to `2D`.
pub fn theta0_charsum_check(delta: i64, d: FundamentalDiscriminant, k: u32, j: u8) -> Result<bool> {
    if delta <= 0 {
        return Err(Error::NotPositive(delta));
    }
    if delta.gcd(&(2 * d.value())) != 1 {
        return Err(Error::NotCoprime {
            a: delta,
            b: 2 * d.value(),
        });
    }
    assert!(k >= 1);
    let sign_jm1: i64 = if j % 2 == 1 { 1 } else { -1 }; // (-1)^(j-1)
    let sign_j = -sign_jm1;
    let s = 2 * k as i64;
    let chi_d = d.character();

    let lhs = rat(chi_d.eval(delta) as i64 * sign_jm1)
        * BigRational::from_integer(big(d.abs()).pow(2 * k))
        * theta0(sign_j * delta, d, s)?;

    let mut rhs = BigRational::zero();
    for pair in splitting_pairs(d)? {
        let chi2 = pair.d2.character();
        let c = chi2.eval(sign_jm1 * delta) as i64;
        rhs += rat(c) * BigRational::from_integer(big(pair.d2.abs()).pow(2 * k));
    }
    Ok(lhs == rhs)
}

/// The closed form of the ramified local factor for `delta` coprime to `2D`:
/// `R_p(delta, p^(-1-s)) = 1 + sgn(p*) chi_{p*}(delta) |p*|^(-s)`.
///
/// Exposed for the property suites; `prime_star` supplies `p*`.
pub fn ramified_factor_closed_form(
    delta: i64,
    p: i64,
    d: FundamentalDiscriminant,
    s: i64,
) -> BigRational {
    let star = crate::discriminants::prime_star(p, d);
    let sgn = if star > 0 { 1 } else { -1 };
    let chi = kronecker_i64(star, delta) as i64;
    rat(1) + rat(sgn * chi) * crate::arith::rational_power(star.abs(), -s)
}

/// `theta1` restated as a twisted divisor sum; used as an exactness check.
pub fn theta1_divisor_sum(delta: i64, d: FundamentalDiscriminant, s: i64) -> Result<BigRational> {
    sigma_rational(&d.character(), &QuadraticCharacter::trivial(), -s, delta)
}
