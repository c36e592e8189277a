//! Arbitrary-precision scalar kernel: Kronecker symbols, factorization,
//! valuations, Bernoulli numbers, and Dirichlet L-values at non-positive
//! integers.
//!
//! Bernoulli numbers follow the first-kind convention `B_1 = -1/2`; the
//! generalized Bernoulli numbers and every L-value below are stated in that
//! convention.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::QuadraticCharacter;
use crate::error::{Error, Result};

/// Largest `|n|` accepted by [`factorize`].
///
/// Trial division by every candidate up to 10^6 followed by a deterministic
/// Miller-Rabin check is exact below this bound.
pub const FACTOR_LIMIT: i64 = 1_000_000_000_000;

pub(crate) fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(big(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(big(n), big(d))
}

/// `d^t` as an exact rational, for any integer exponent.
pub(crate) fn rational_power(d: i64, t: i64) -> BigRational {
    let p = big(d).pow(t.unsigned_abs() as u32);
    if t >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn mod_floor_small(x: &BigInt, m: i64) -> i64 {
    x.mod_floor(&big(m)).to_i64().unwrap()
}

/// Kronecker symbol `(a/n)`, total on all integer pairs.
///
/// Extends the Jacobi symbol by the supplementary rules
/// `(a/2) = 0, 1, -1` for `a ≡ 0, ±1, ±3 (mod 8)`,
/// `(a/-1) = -1` exactly when `a < 0`, and `(a/0) = 1` exactly when
/// `a = ±1`. Completely multiplicative in the top argument.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    if n.is_zero() {
        return i32::from(a.abs().is_one());
    }
    if a.is_even() && n.is_even() {
        return 0;
    }
    let mut acc = 1i32;
    let mut n = n.clone();
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            acc = -acc;
        }
    }
    let twos = n.trailing_zeros().unwrap_or(0);
    if twos > 0 {
        n >>= twos;
        // a is odd here, so (a/2)^twos is decided by a mod 8
        if twos % 2 == 1 {
            let r = mod_floor_small(a, 8);
            if r == 3 || r == 5 {
                acc = -acc;
            }
        }
    }
    // Jacobi symbol loop over odd positive n
    let mut a = a.mod_floor(&n);
    while !a.is_zero() {
        let s = a.trailing_zeros().unwrap_or(0);
        if s > 0 {
            a >>= s;
            if s % 2 == 1 {
                let r = mod_floor_small(&n, 8);
                if r == 3 || r == 5 {
                    acc = -acc;
                }
            }
        }
        if mod_floor_small(&a, 4) == 3 && mod_floor_small(&n, 4) == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        acc
    } else {
        0
    }
}

/// [`kronecker`] for machine integers.
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&big(a), &big(n))
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn miller_rabin(n: u64) -> bool {
    // deterministic below 3.3 * 10^14 with these bases
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'outer: for &b in &[2u64, 3, 5, 7, 11, 13, 17] {
        if b % n == 0 {
            continue;
        }
        let mut x = powmod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality test for `n` within the factorization range.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    miller_rabin(n)
}

/// Prime factorization of `|n|`, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(i64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(i64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = i64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Product of `p^e` over all factors; equals `|n|` for the factored value.
    pub fn reassemble(&self) -> i64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product::<i64>()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Moebius function of `|n|`.
    pub fn moebius(&self) -> i32 {
        if !self.is_squarefree() {
            0
        } else if self.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Positive divisors of `|n|`, ascending.
    pub fn divisors(&self) -> Vec<i64> {
        let mut out = vec![1i64];
        for &(p, e) in &self.factors {
            let len = out.len();
            let mut pk = 1i64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Exact factorization of `|n|` by trial division, then one Miller-Rabin
/// certified prime cofactor.
///
/// Inputs beyond [`FACTOR_LIMIT`] are rejected; everything in this crate
/// operates at desk scale and never needs more.
pub fn factorize(n: i64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n.unsigned_abs() > FACTOR_LIMIT as u64 {
        return Err(Error::InputTooLarge(n));
    }
    let mut m = n.unsigned_abs();
    let mut factors = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0u32;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p as i64, e));
        }
    };
    push(2, &mut m);
    let mut p = 3u64;
    while p * p <= m {
        push(p, &mut m);
        p += 2;
    }
    if m > 1 {
        assert!(miller_rabin(m), "cofactor {m} of {n} is not prime");
        factors.push((m as i64, 1));
    }
    Ok(Factorization { factors })
}

/// `(t, n0)` with `n = p^t * n0` and `p` not dividing `n0`.
pub fn valuation(n: i64, p: i64) -> Result<(u32, i64)> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    debug_assert!(is_prime(p), "valuation requires a prime, got {p}");
    let mut t = 0u32;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        t += 1;
    }
    Ok((t, m))
}

fn bernoulli_sequence(m: u32) -> Vec<BigRational> {
    let mut seq = Vec::with_capacity(m as usize + 1);
    seq.push(BigRational::one());
    for r in 1..=m as u64 {
        let mut sum = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, b) in seq.iter().enumerate().take(r as usize) {
            sum += BigRational::from_integer(binom.clone()) * b;
            let j = j as u64;
            binom = binom * (r + 1 - j) / (j + 1);
        }
        seq.push(-sum / rat(r as i64 + 1));
    }
    seq
}

/// First-kind Bernoulli number `B_m`, with `B_1 = -1/2`.
pub fn bernoulli(m: u32) -> BigRational {
    bernoulli_sequence(m).pop().unwrap()
}

/// Bernoulli polynomial `B_m(x) = sum C(m,i) B_i x^(m-i)`.
pub fn bernoulli_polynomial(m: u32, x: &BigRational) -> BigRational {
    let b = bernoulli_sequence(m);
    let mut powers = Vec::with_capacity(m as usize + 1);
    powers.push(BigRational::one());
    for _ in 0..m {
        powers.push(powers.last().unwrap() * x);
    }
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for i in 0..=m as u64 {
        acc += BigRational::from_integer(binom.clone())
            * &b[i as usize]
            * &powers[(m as u64 - i) as usize];
        binom = binom * (m as u64 - i) / (i + 1);
    }
    acc
}

/// Generalized Bernoulli number `B_{m,chi}` via the Bernoulli-polynomial
/// formula `f^(m-1) sum_{a=1..f} chi(a) B_m(a/f)` with `f` the modulus.
///
/// For the modulus-1 character this returns the plain `B_m`.
pub fn generalized_bernoulli(chi: &QuadraticCharacter, m: u32) -> BigRational {
    assert!(m >= 1, "generalized Bernoulli numbers need m >= 1");
    let f = chi.modulus();
    if f == 1 {
        return bernoulli(m);
    }
    let mut sum = BigRational::zero();
    for a in 1..=f {
        let c = chi.eval(a);
        if c != 0 {
            sum += rat(c as i64) * bernoulli_polynomial(m, &ratio(a, f));
        }
    }
    rational_power(f, m as i64 - 1) * sum
}

/// Exact `L(chi, s)` at an integer `s <= 0`, as `-B_{m,chi}/m` with
/// `m = 1 - s`; the modulus-1 character yields `-B_m/m`.
pub fn l_nonpositive(chi: &QuadraticCharacter, s: i64) -> BigRational {
    assert!(s <= 0, "this evaluation only covers s <= 0, got {s}");
    let m = (1 - s) as u32;
    -generalized_bernoulli(chi, m) / rat(m as i64)
}
