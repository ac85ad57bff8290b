//! Exact scalar arithmetic for the symbolic layer.
//!
//! Everything symbolic in this crate is linear over [`ExactQ`]: Laurent
//! polynomials in the deformation parameter `q` whose coefficients are
//! Gaussian rationals `a + b i` with `a, b` exact rationals. This is enough
//! to express `q`, `q^{-1}`, `(q^{-1} - q)`, the phase `i`, and every
//! coefficient that shows up in the defining relations and their
//! consequences, so identity checks can demand a residual that is exactly
//! the zero polynomial.
//!
//! Evaluation at a fixed `0 < q0 < 1` hands values to the numeric layer.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use num_complex::Complex64;

use crate::error::CoreError;

/// A Gaussian rational `re + im * i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        GaussRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        GaussRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn neg(&self) -> Self {
        GaussRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // Exact conversion would overflow for huge numerators; scale first.
    let numer = r.numer();
    let denom = r.denom();
    let nf = bigint_to_f64(numer);
    let df = bigint_to_f64(denom);
    nf / df
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    // BigInt -> f64 via string is exact enough for our value ranges; the
    // num crate provides a direct conversion.
    use num::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

/// A Laurent polynomial in `q` with [`GaussRational`] coefficients.
///
/// Stored canonically: no zero coefficient is ever kept, so `ExactQ` values
/// compare by structural equality. Exponents are arbitrary-precision
/// integers; the central elements carry factors like `q^{2Nk}` whose
/// exponents grow with the matrix size.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExactQ {
    terms: BTreeMap<BigInt, GaussRational>,
}

impl ExactQ {
    pub fn zero() -> Self {
        ExactQ {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ExactQ::q_pow(0)
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        ExactQ::monomial(BigInt::from(e), GaussRational::from_int(1))
    }

    pub fn monomial(exp: BigInt, coeff: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        ExactQ { terms }
    }

    pub fn from_int(n: i64) -> Self {
        ExactQ::monomial(BigInt::zero(), GaussRational::from_int(n))
    }

    /// `q^{-1} - q`, the coefficient of the lower-triangular correction in
    /// the braid operator.
    pub fn q_inv_minus_q() -> Self {
        ExactQ::q_pow(-1).sub(&ExactQ::q_pow(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &ExactQ::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &GaussRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(cur) => {
                    let sum = cur.add(c);
                    if sum.is_zero() {
                        terms.remove(e);
                    } else {
                        *cur = sum;
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        ExactQ { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ExactQ {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<BigInt, GaussRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let c = c1.mul(c2);
                match terms.get_mut(&e) {
                    Some(cur) => {
                        let sum = cur.add(&c);
                        if sum.is_zero() {
                            terms.remove(&e);
                        } else {
                            *cur = sum;
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            terms.insert(e, c);
                        }
                    }
                }
            }
        }
        ExactQ { terms }
    }

    /// Multiply by the monomial `q^e`.
    pub fn mul_q_pow(&self, e: i64) -> Self {
        let shift = BigInt::from(e);
        ExactQ {
            terms: self
                .terms
                .iter()
                .map(|(exp, c)| (exp + &shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return ExactQ::zero();
        }
        ExactQ {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// `(-q)^e` for a signed exponent.
    pub fn neg_q_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        ExactQ::monomial(BigInt::from(e), GaussRational::from_int(sign))
    }

    /// Complex conjugation of coefficients; `q` itself is a real parameter
    /// so exponents are untouched. An involution.
    pub fn star(&self) -> Self {
        ExactQ {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.conj()))
                .collect(),
        }
    }

    /// True when the polynomial is a single monomial with unit-like
    /// coefficient, in which case its exact inverse exists in the Laurent
    /// ring and is returned.
    pub fn invert_monomial(&self) -> Option<ExactQ> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        // Gaussian rational inverse: 1/(a+bi) = (a-bi)/(a^2+b^2).
        let norm = &c.re * &c.re + &c.im * &c.im;
        if norm.is_zero() {
            return None;
        }
        let inv = GaussRational {
            re: &c.re / &norm,
            im: -(&c.im / &norm),
        };
        Some(ExactQ::monomial(-e.clone(), inv))
    }

    /// Evaluate at a numeric `0 < q0 < 1`.
    pub fn eval(&self, q0: f64) -> Result<Complex64, CoreError> {
        if !(q0 > 0.0 && q0 < 1.0) {
            return Err(CoreError::InvalidQ(q0));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let ef = bigint_to_f64(e);
            acc += c.to_complex() * q0.powf(ef);
        }
        if !acc.re.is_finite() || !acc.im.is_finite() {
            return Err(CoreError::NonFinite);
        }
        Ok(acc)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for ExactQ {
    /// Canonical text form: terms sorted by ascending exponent, separated
    /// by " + ", each `coeff*q^e` with coeff `a/b` or `a/b+c/d*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im.is_zero() {
                write!(f, "{}*q^{}", fmt_rational(&c.re), e)?;
            } else {
                let sign = if c.im.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{}{}{}*i*q^{}",
                    fmt_rational(&c.re),
                    sign,
                    fmt_rational(&c.im.abs()),
                    e
                )?;
            }
        }
        Ok(())
    }
}

impl FromStr for ExactQ {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(ExactQ::zero());
        }
        let mut out = ExactQ::zero();
        for term in s.split(" + ") {
            out = out.add(&parse_term(term)?);
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<ExactQ, CoreError> {
    let bad = || CoreError::Parse(format!("bad ExactQ term: {term:?}"));
    let (coeff_str, exp_str) = term.rsplit_once("*q^").ok_or_else(bad)?;
    let exp = BigInt::from_str(exp_str).map_err(|_| bad())?;
    // Coefficient grammar: "a/b" or "a/b+c/d*i" or "a/b-c/d*i".
    let (re_str, im_part) = match coeff_str.strip_suffix("*i") {
        None => (coeff_str, None),
        Some(rest) => {
            // Split at the last +/- that is not a leading sign.
            let bytes = rest.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/')
                .ok_or_else(bad)?;
            (&rest[..split], Some(rest[split..].to_string()))
        }
    };
    let re = BigRational::from_str(re_str).map_err(|_| bad())?;
    let im = match im_part {
        None => BigRational::zero(),
        Some(p) => {
            let p = p.strip_prefix('+').unwrap_or(&p);
            BigRational::from_str(p).map_err(|_| bad())?
        }
    };
    Ok(ExactQ::monomial(exp, GaussRational::new(re, im)))
}

/// Numeric scalar of the representation layer. Kept as a plain alias; all
/// accepted results are checked finite at the boundaries where they are
/// produced.
pub type FloatC = Complex64;

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ExactQ {
        ExactQ::q_pow(1)
    }

    #[test]
    fn exponents_cancel() {
        assert_eq!(ExactQ::q_pow(1).mul(&ExactQ::q_pow(-1)), ExactQ::one());
    }

    #[test]
    fn distributivity_example() {
        // (q^{-1} - q) * q = 1 - q^2
        let lhs = ExactQ::q_inv_minus_q().mul(&q());
        let rhs = ExactQ::one().sub(&ExactQ::q_pow(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity() {
        let x = ExactQ::q_pow(3).add(&ExactQ::from_int(-7));
        assert_eq!(x.add(&ExactQ::zero()), x);
    }

    #[test]
    fn star_conjugates() {
        let iq = ExactQ::monomial(BigInt::from(1), GaussRational::i());
        assert_eq!(iq.star(), iq.neg());
        let real = ExactQ::q_inv_minus_q();
        assert_eq!(real.star(), real);
    }

    #[test]
    fn star_involution() {
        let x = ExactQ::monomial(
            BigInt::from(-4),
            GaussRational::new(
                BigRational::new(BigInt::from(3), BigInt::from(7)),
                BigRational::new(BigInt::from(-2), BigInt::from(5)),
            ),
        )
        .add(&ExactQ::q_pow(2));
        assert_eq!(x.star().star(), x);
    }

    #[test]
    fn eval_examples() {
        let v = ExactQ::q_pow(2).eval(0.5).unwrap();
        assert!((v.re - 0.25).abs() < 1e-15 && v.im == 0.0);
        let v = ExactQ::q_inv_minus_q().eval(0.5).unwrap();
        assert!((v.re - 1.5).abs() < 1e-15);
        assert!(ExactQ::one().eval(1.2).is_err());
        assert!(ExactQ::one().eval(0.0).is_err());
    }

    #[test]
    fn eval_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q0 in [0.3f64, 0.5, 0.9] {
            for _ in 0..1000 {
                let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let mut p = ExactQ::zero();
                    for _ in 0..rng.gen_range(0..4) {
                        let e = rng.gen_range(-6i64..7);
                        let num = rng.gen_range(-9i64..10);
                        let den = rng.gen_range(1i64..5);
                        let im = rng.gen_range(-3i64..4);
                        p = p.add(&ExactQ::monomial(
                            BigInt::from(e),
                            GaussRational::new(
                                BigRational::new(BigInt::from(num), BigInt::from(den)),
                                BigRational::from_integer(BigInt::from(im)),
                            ),
                        ));
                    }
                    p
                };
                let a = rand_poly(&mut rng);
                let b = rand_poly(&mut rng);
                // Relative to the accumulated term magnitude, which is the
                // scale double rounding actually works at.
                let mass = |p: &ExactQ| -> f64 {
                    p.terms()
                        .map(|(e, c)| {
                            let ef: f64 = e.to_string().parse().unwrap();
                            c.conj().mul(c).to_complex().re.sqrt() * q0.powf(ef)
                        })
                        .sum::<f64>()
                };
                let scale = (mass(&a) * mass(&b)).max(1.0);
                let lhs = a.mul(&b).eval(q0).unwrap();
                let rhs = a.eval(q0).unwrap() * b.eval(q0).unwrap();
                assert!((lhs - rhs).norm() / scale < 1e-14);
                let lhs = a.add(&b).eval(q0).unwrap();
                let rhs = a.eval(q0).unwrap() + b.eval(q0).unwrap();
                let scale = (mass(&a) + mass(&b)).max(1.0);
                assert!((lhs - rhs).norm() / scale < 1e-14);
            }
        }
    }

    #[test]
    fn display_parse_round_trip() {
        let x = ExactQ::monomial(
            BigInt::from(-3),
            GaussRational::new(
                BigRational::new(BigInt::from(-5), BigInt::from(2)),
                BigRational::new(BigInt::from(1), BigInt::from(3)),
            ),
        )
        .add(&ExactQ::q_pow(4).neg());
        let s = x.to_string();
        let y: ExactQ = s.parse().unwrap();
        assert_eq!(x, y);
        assert_eq!("0".parse::<ExactQ>().unwrap(), ExactQ::zero());
    }

    #[test]
    fn invert_monomial() {
        let m = ExactQ::monomial(BigInt::from(3), GaussRational::from_int(-2));
        let inv = m.invert_monomial().unwrap();
        assert_eq!(m.mul(&inv), ExactQ::one());
        assert!(ExactQ::q_inv_minus_q().invert_monomial().is_none());
    }
}
