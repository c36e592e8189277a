//! Eisenstein series q-expansions, the exact constants tying them to the
//! special-value generating series, and the end-to-end identity checks.
//!
//! All q-expansions here are the normalized rational-coefficient objects:
//! the transcendental prefactors are carried separately as
//! [`SymbolicConstant`] values of the shape `rational * pi^a * |D|^(b/2)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::arith::{bernoulli, big, l_nonpositive, rat, ratio, rational_power};
use crate::characters::{sigma, QuadraticCharacter};
use crate::discriminants::{splitting_pairs, FundamentalDiscriminant};
use crate::error::{Error, Result};
use crate::euler::theta;

/// A truncated q-series with exact rational coefficients, tagged with the
/// weight, level and character discriminant it lives at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    weight: i64,
    level: i64,
    character_disc: i64,
    coeffs: Vec<BigRational>,
}

impl QExpansion {
    fn zeros(weight: i64, level: i64, character_disc: i64, truncation: usize) -> Self {
        Self {
            weight,
            level,
            character_disc,
            coeffs: vec![BigRational::zero(); truncation + 1],
        }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn character_discriminant(&self) -> i64 {
        self.character_disc
    }

    /// Index of the last stored coefficient.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn add_scaled(&mut self, other: &QExpansion, factor: &BigRational) {
        assert_eq!(self.truncation(), other.truncation());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b * factor;
            }
        }
    }
}

/// The normalized Eisenstein series `E_k(chi1, chi2)` truncated at `q^N`:
/// constant term `L(chi1, 1-k)/2` when `chi2` has modulus 1 (zero
/// otherwise) and `sigma_{k-1}(chi1, chi2; n)` at `q^n`.
///
/// `chi1` must be primitive, which every character here is: fundamental
/// discriminants give exactly the primitive real characters.
pub fn eisenstein_expansion(
    chi1: &QuadraticCharacter,
    chi2: &QuadraticCharacter,
    weight: i64,
    truncation: usize,
) -> Result<QExpansion> {
    if weight < 3 {
        return Err(Error::WeightTooSmall(weight));
    }
    let mut coeffs = Vec::with_capacity(truncation + 1);
    coeffs.push(if chi2.is_trivial() {
        l_nonpositive(chi1, 1 - weight) / rat(2)
    } else {
        BigRational::zero()
    });
    for n in 1..=truncation {
        coeffs.push(BigRational::from_integer(sigma(
            chi1,
            chi2,
            (weight - 1) as u32,
            n as i64,
        )?));
    }
    Ok(QExpansion {
        weight,
        level: chi1.modulus() * chi2.modulus(),
        character_disc: chi1.discriminant() * chi2.discriminant(),
        coeffs,
    })
}

/// An exact constant `rational * pi^pi_exponent * |D|^(sqrt_abs_d_exponent/2)`.
///
/// Values are kept canonical: whole powers of `|D|` are folded into the
/// rational part so the square-root exponent is 0 or 1, making equality
/// structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicConstant {
    rational: BigRational,
    pi_exponent: i64,
    sqrt_abs_d_exponent: i64,
    abs_d: i64,
}

impl SymbolicConstant {
    pub fn new(
        rational: BigRational,
        pi_exponent: i64,
        sqrt_abs_d_exponent: i64,
        abs_d: i64,
    ) -> Self {
        assert!(abs_d >= 1);
        let mut value = Self {
            rational,
            pi_exponent,
            sqrt_abs_d_exponent,
            abs_d,
        };
        value.normalize();
        value
    }

    fn normalize(&mut self) {
        if self.rational.is_zero() {
            self.pi_exponent = 0;
            self.sqrt_abs_d_exponent = 0;
            return;
        }
        let whole = self.sqrt_abs_d_exponent.div_euclid(2);
        if whole != 0 {
            self.rational *= rational_power(self.abs_d, whole);
            self.sqrt_abs_d_exponent = self.sqrt_abs_d_exponent.rem_euclid(2);
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn pi_exponent(&self) -> i64 {
        self.pi_exponent
    }

    pub fn sqrt_abs_d_exponent(&self) -> i64 {
        self.sqrt_abs_d_exponent
    }

    pub fn abs_d(&self) -> i64 {
        self.abs_d
    }

    pub fn mul_rational(&self, factor: &BigRational) -> Self {
        Self::new(
            &self.rational * factor,
            self.pi_exponent,
            self.sqrt_abs_d_exponent,
            self.abs_d,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.abs_d, other.abs_d);
        Self::new(
            &self.rational * &other.rational,
            self.pi_exponent + other.pi_exponent,
            self.sqrt_abs_d_exponent + other.sqrt_abs_d_exponent,
            self.abs_d,
        )
    }

    pub fn div(&self, other: &Self) -> Self {
        assert_eq!(self.abs_d, other.abs_d);
        assert!(!other.rational.is_zero());
        Self::new(
            &self.rational / &other.rational,
            self.pi_exponent - other.pi_exponent,
            self.sqrt_abs_d_exponent - other.sqrt_abs_d_exponent,
            self.abs_d,
        )
    }

    /// Pi to fifty decimal digits, enough that the double conversion below
    /// is limited by the target precision and not by the constant.
    pub(crate) fn pi_rational() -> BigRational {
        let digits = "314159265358979323846264338327950288419716939937510";
        BigRational::new(digits.parse::<BigInt>().unwrap(), big(10).pow(50u32))
    }

    /// Double-precision value of the constant.
    pub fn to_f64(&self) -> f64 {
        let exact = &self.rational * Self::pi_rational().pow(self.pi_exponent as i32);
        let base = exact.to_f64().unwrap();
        if self.sqrt_abs_d_exponent == 0 {
            base
        } else {
            base * (self.abs_d as f64)
                .sqrt()
                .powi(self.sqrt_abs_d_exponent as i32)
        }
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        if self.pi_exponent != 0 {
            write!(f, " * pi^{}", self.pi_exponent)?;
        }
        if self.sqrt_abs_d_exponent != 0 {
            write!(f, " * sqrt({})", self.abs_d)?;
        }
        Ok(())
    }
}

fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for i in 2..=n as i64 {
        acc *= big(i);
    }
    BigRational::from_integer(acc)
}

/// `zeta(2k)` as a symbolic constant over `|D|`.
fn zeta_even(k: u32, abs_d: i64) -> SymbolicConstant {
    let two_k = 2 * k;
    let sign = if k.is_multiple_of(2) { -1 } else { 1 }; // (-1)^(k+1)
    let rational =
        rat(sign) * bernoulli(two_k) * rational_power(2, two_k as i64 - 1) / factorial(two_k);
    SymbolicConstant::new(rational, two_k as i64, 0, abs_d)
}

/// `L(chi_D, 2k+1)` expressed through the functional equation: the Gauss sum
/// of an odd real character is `i sqrt(|D|)`, so the odd value is a rational
/// multiple of `pi^(2k+1) sqrt(|D|) L(chi_D, -2k)`.
fn l_odd_positive(k: u32, d: FundamentalDiscriminant) -> SymbolicConstant {
    let abs_d = d.abs();
    let two_k = 2 * k;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 }; // (-1)^k
    let l_neg = l_nonpositive(&d.character(), -(two_k as i64));
    let rational = rat(sign) * ratio(1, 2) * rational_power(2, two_k as i64 + 1) / factorial(two_k)
        * l_neg
        * rational_power(abs_d, -(two_k as i64 + 1));
    SymbolicConstant::new(rational, two_k as i64 + 1, 1, abs_d)
}

/// Both printed forms of the proportionality constant between the
/// generating series and its Eisenstein combination.
///
/// The first comes straight from the even zeta value and the L-value at
/// `-2k`; the second routes through the odd L-value at `2k+1` via the
/// functional equation. They must agree exactly.
pub fn scaling_constant_forms(
    k: u32,
    d: FundamentalDiscriminant,
) -> (SymbolicConstant, SymbolicConstant) {
    assert!(k >= 1);
    assert!(d.is_negative(), "odd real characters need D < 0");
    let abs_d = d.abs();
    let two_k = 2 * k;
    let l_neg = l_nonpositive(&d.character(), -(two_k as i64));
    assert!(!l_neg.is_zero(), "L(chi, -2k) vanished unexpectedly");

    let sign_k1 = if k.is_multiple_of(2) { -1 } else { 1 };
    let zeta_2k = zeta_even(k, abs_d);
    let sqrt_abs_d = SymbolicConstant::new(BigRational::one(), 0, 1, abs_d);
    let two_pi_pow = SymbolicConstant::new(
        rational_power(2, two_k as i64 + 1),
        two_k as i64 + 1,
        0,
        abs_d,
    );
    let form1 = sqrt_abs_d
        .mul(&zeta_2k)
        .mul_rational(&(rat(2 * sign_k1) * factorial(two_k) / &l_neg))
        .div(&two_pi_pow);

    let form2 = zeta_2k
        .mul_rational(&-rational_power(abs_d, -(two_k as i64)))
        .div(&l_odd_positive(k, d));

    (form1, form2)
}

/// The proportionality constant, with the two printed forms asserted equal.
pub fn scaling_constant(k: u32, d: FundamentalDiscriminant) -> SymbolicConstant {
    let (form1, form2) = scaling_constant_forms(k, d);
    assert_eq!(form1, form2, "the two routes to the constant disagree");
    form1
}

fn j_signs(j: u8) -> (i64, i64) {
    // ((-1)^(j-1), (-1)^j); only j mod 2 matters anywhere
    if j % 2 == 1 {
        (1, -1)
    } else {
        (-1, 1)
    }
}

/// The theta side of the identity: the normalized generating series whose
/// `q^delta` coefficient is `(-1)^j delta^(2k) theta((-1)^j delta, 2k)` and
/// whose constant term is `-L(chi_D, -2k) / (2 |D|^(2k))`.
pub fn theta_side(
    k: u32,
    d: FundamentalDiscriminant,
    j: u8,
    truncation: usize,
) -> Result<QExpansion> {
    assert!(k >= 1);
    if !d.is_negative() {
        return Err(Error::NotNegativeDiscriminant(d.value()));
    }
    let s = 2 * k as i64;
    let (_, sign_j) = j_signs(j);
    let mut out = QExpansion::zeros(s + 1, d.abs(), d.value(), truncation);
    out.coeffs[0] = -l_nonpositive(&d.character(), -s) / (rat(2) * rational_power(d.abs(), s));
    for delta in 1..=truncation as i64 {
        let value = rat(sign_j) * rational_power(delta, s) * theta(sign_j * delta, d, s)?;
        out.coeffs[delta as usize] = value;
    }
    Ok(out)
}

/// The Eisenstein side of the identity:
/// `-|D|^(-2k) sum over (d1, d2) of |d2|^(2k) chi_{d2}((-1)^(j-1))
/// E_{2k+1}(chi_{d1}, chi_{d2})`.
pub fn eisenstein_side(
    k: u32,
    d: FundamentalDiscriminant,
    j: u8,
    truncation: usize,
) -> Result<QExpansion> {
    assert!(k >= 1);
    let s = 2 * k as i64;
    let (eps, _) = j_signs(j);
    let global = -rational_power(d.abs(), -s);
    let mut out = QExpansion::zeros(s + 1, d.abs(), d.value(), truncation);
    for pair in splitting_pairs(d)? {
        let chi1 = pair.d1.character();
        let chi2 = pair.d2.character();
        let series = eisenstein_expansion(&chi1, &chi2, s + 1, truncation)?;
        let factor = rat(chi2.eval(eps) as i64) * rational_power(pair.d2.abs(), s) * &global;
        out.add_scaled(&series, &factor);
    }
    Ok(out)
}

/// The dual-side combination, normalized the same way:
/// `-|D|^(-2k) sum |d2|^(2k) chi_{d2}((-1)^j) |d1|^(-(2k+1))
/// E_{2k+1}(chi_{d2}, chi_{d1})`.
pub fn z_star_side(
    k: u32,
    d: FundamentalDiscriminant,
    j: u8,
    truncation: usize,
) -> Result<QExpansion> {
    assert!(k >= 1);
    let s = 2 * k as i64;
    let (_, sign_j) = j_signs(j);
    let global = -rational_power(d.abs(), -s);
    let mut out = QExpansion::zeros(s + 1, d.abs(), d.value(), truncation);
    for pair in splitting_pairs(d)? {
        let chi1 = pair.d1.character();
        let chi2 = pair.d2.character();
        let series = eisenstein_expansion(&chi2, &chi1, s + 1, truncation)?;
        let factor = rat(chi2.eval(sign_j) as i64)
            * rational_power(pair.d2.abs(), s)
            * rational_power(pair.d1.abs(), -(s + 1))
            * &global;
        out.add_scaled(&series, &factor);
    }
    Ok(out)
}

/// The Fricke image of [`eisenstein_side`], term by term: each
/// `E_{2k+1}(chi1, chi2)` maps to `chi2(-1) (N2/N1)^((2k+1)/2)
/// E_{2k+1}(chi2, chi1)` and the whole sum picks up `|D|^(-(2k+1)/2)`, which
/// collapses to the rational factor `chi2(-1) |d1|^(-(2k+1))` per term.
pub fn fricke_transport(
    k: u32,
    d: FundamentalDiscriminant,
    j: u8,
    truncation: usize,
) -> Result<QExpansion> {
    assert!(k >= 1);
    let s = 2 * k as i64;
    let (eps, _) = j_signs(j);
    let global = -rational_power(d.abs(), -s);
    let mut out = QExpansion::zeros(s + 1, d.abs(), d.value(), truncation);
    for pair in splitting_pairs(d)? {
        let chi1 = pair.d1.character();
        let chi2 = pair.d2.character();
        let series = eisenstein_expansion(&chi2, &chi1, s + 1, truncation)?;
        let factor = rat((chi2.eval(eps) * chi2.eval(-1)) as i64)
            * rational_power(pair.d2.abs(), s)
            * rational_power(pair.d1.abs(), -(s + 1))
            * &global;
        out.add_scaled(&series, &factor);
    }
    Ok(out)
}

/// Whether the direct dual-side construction and the Fricke transport of
/// the Eisenstein side agree coefficient by coefficient.
pub fn fricke_check(k: u32, d: FundamentalDiscriminant, j: u8, truncation: usize) -> Result<bool> {
    Ok(fricke_transport(k, d, j, truncation)? == z_star_side(k, d, j, truncation)?)
}

/// Constant term of the dual side computed through the symbolic route: the
/// sign `(-1)^(j+k+1)` times `|D|^(1/2+2k) zeta(2k) (2k)! / (2 pi)^(2k+1)`,
/// renormalized by `L(chi_D, 2k+1)/zeta(2k)`.
///
/// The result must be a plain rational, `(-1)^(j+1) L(chi_D, -2k) / 2`.
pub fn dual_constant_term(k: u32, d: FundamentalDiscriminant, j: u8) -> SymbolicConstant {
    assert!(k >= 1);
    let abs_d = d.abs();
    let two_k = 2 * k;
    let sign = if (j as u32 + k + 1).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let two_pi_pow = SymbolicConstant::new(
        rational_power(2, two_k as i64 + 1),
        two_k as i64 + 1,
        0,
        abs_d,
    );
    SymbolicConstant::new(
        rat(sign) * rational_power(abs_d, two_k as i64) * factorial(two_k),
        0,
        1,
        abs_d,
    )
    .mul(&l_odd_positive(k, d))
    .div(&two_pi_pow)
}

/// Exact special value `Z((-1)^(j-1) delta, 2k)` as a symbolic constant:
/// the scaling constant times the splitting-pair divisor sums.
pub fn z_special_value(
    delta: i64,
    j: u8,
    d: FundamentalDiscriminant,
    k: u32,
) -> Result<SymbolicConstant> {
    if delta < 1 {
        return Err(Error::NotPositive(delta));
    }
    assert!(k >= 1);
    let s = 2 * k;
    let (eps, sign_j) = j_signs(j);
    let mut sum = BigRational::zero();
    for pair in splitting_pairs(d)? {
        let chi1 = pair.d1.character();
        let chi2 = pair.d2.character();
        let weight = chi2.eval(eps) as i64;
        if weight != 0 {
            sum += rat(weight)
                * rational_power(pair.d2.abs(), s as i64)
                * BigRational::from_integer(sigma(&chi1, &chi2, s, delta)?);
        }
    }
    let value = scaling_constant(k, d)
        .mul_rational(&(rat(sign_j) * sum * rational_power(delta, -(s as i64))));
    assert!(!value.rational_part().is_zero());
    assert_eq!(value.pi_exponent(), -1);
    assert_eq!(value.sqrt_abs_d_exponent(), 1);
    Ok(value)
}

/// Exact dual special value `Z*((-1)^(j-1) delta, 2k)` from the printed
/// dual divisor-sum formula.
pub fn z_star_special_value(
    delta: i64,
    j: u8,
    d: FundamentalDiscriminant,
    k: u32,
) -> Result<SymbolicConstant> {
    if delta < 1 {
        return Err(Error::NotPositive(delta));
    }
    assert!(k >= 1);
    let s = 2 * k;
    let (_, sign_j) = j_signs(j);
    let mut sum = BigRational::zero();
    for pair in splitting_pairs(d)? {
        let chi1 = pair.d1.character();
        let chi2 = pair.d2.character();
        let weight = chi2.eval(sign_j) as i64;
        if weight != 0 {
            sum += rat(weight)
                * rational_power(pair.d2.abs(), s as i64)
                * rational_power(pair.d1.abs(), -(s as i64 + 1))
                * BigRational::from_integer(sigma(&chi2, &chi1, s, delta)?);
        }
    }
    let value = scaling_constant(k, d).mul_rational(&(sum * rational_power(delta, -(s as i64))));
    assert_eq!(value.pi_exponent(), -1);
    assert_eq!(value.sqrt_abs_d_exponent(), 1);
    Ok(value)
}

/// One coefficient index where the two sides differ.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientMismatch {
    pub index: usize,
    pub theta_side: BigRational,
    pub eisenstein_side: BigRational,
}

/// Outcome of a coefficientwise comparison of the two sides.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub truncation: usize,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl IdentityReport {
    pub fn is_verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Coefficientwise comparison of [`theta_side`] and [`eisenstein_side`] for
/// indices `0..=truncation`; mismatching indices are report content, not
/// errors.
pub fn verify_identity(
    k: u32,
    d: FundamentalDiscriminant,
    j: u8,
    truncation: usize,
) -> Result<IdentityReport> {
    let lhs = theta_side(k, d, j, truncation)?;
    let rhs = eisenstein_side(k, d, j, truncation)?;
    let mismatches = lhs
        .coefficients()
        .iter()
        .zip(rhs.coefficients())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(index, (a, b))| CoefficientMismatch {
            index,
            theta_side: a.clone(),
            eisenstein_side: b.clone(),
        })
        .collect();
    Ok(IdentityReport {
        truncation,
        mismatches,
    })
}
