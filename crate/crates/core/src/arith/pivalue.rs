use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{pow, One, Signed, ToPrimitive, Zero};

use super::pi::{pi_approximation, DEFAULT_PI_DIGITS};
use super::Rational;
use crate::Error;

/// Finite sum `Σ_j c_j·π^{2j}` with rational `c_j`.
///
/// Keys are half-degrees `j`, so odd powers of `π` cannot be represented.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PiValue {
    coeffs: BTreeMap<u32, Rational>,
}

impl PiValue {
    pub fn zero() -> Self {
        PiValue::default()
    }

    pub fn one() -> Self {
        PiValue::rational(Rational::one())
    }

    pub fn rational(c: Rational) -> Self {
        PiValue::monomial(c, 0)
    }

    /// `c·π^{2j}`.
    pub fn monomial(c: Rational, j: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(j, c);
        }
        PiValue { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `π^{2j}`.
    pub fn coeff(&self, j: u32) -> Rational {
        self.coeffs.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&j, c)| (j, c))
    }

    /// The unique `(j, c)` when the value is a single nonzero term.
    pub fn single_term(&self) -> Option<(u32, &Rational)> {
        if self.coeffs.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> PiValue {
        if c.is_zero() {
            return PiValue::zero();
        }
        PiValue {
            coeffs: self.coeffs.iter().map(|(&j, v)| (j, v * c)).collect(),
        }
    }

    fn add_term(&mut self, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(j).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    /// Exact value with `π` replaced by its rational approximation for
    /// `digits` significant digits.
    pub fn approximate(&self, digits: usize) -> Rational {
        let pi2 = {
            let p = pi_approximation(digits);
            &p * &p
        };
        self.coeffs.iter().fold(Rational::zero(), |acc, (&j, c)| {
            acc + c * pow(pi2.clone(), j as usize)
        })
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_decimal(&self.approximate(digits), digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.approximate(DEFAULT_PI_DIGITS)
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Round `value` to `digits` significant decimal digits.
///
/// Positional notation for exponents in `-6..21`, scientific otherwise.
pub fn format_decimal(value: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return "0".to_string();
    }
    let ten = BigInt::from(10);
    let a = value.abs();
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        let p = pow(ten.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(BigInt::one(), p)
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let scaled = &a * pow10(digits as i64 - 1 - e) + Rational::new(BigInt::one(), BigInt::from(2));
    let mut mantissa = scaled.numer().div_floor(scaled.denom());
    if mantissa == pow(ten.clone(), digits) {
        mantissa /= &ten;
        e += 1;
    }
    let ms = mantissa.to_string();
    let sign = if value.is_negative() { "-" } else { "" };
    let body = if (-6..21).contains(&e) {
        if e >= 0 {
            let int_len = e as usize + 1;
            if int_len >= ms.len() {
                format!("{ms}{}", "0".repeat(int_len - ms.len()))
            } else {
                format!("{}.{}", &ms[..int_len], &ms[int_len..])
            }
        } else {
            format!("0.{}{ms}", "0".repeat((-e - 1) as usize))
        }
    } else if ms.len() > 1 {
        format!("{}.{}e{e}", &ms[..1], &ms[1..])
    } else {
        format!("{ms}e{e}")
    };
    format!("{sign}{body}")
}

impl Add<&PiValue> for &PiValue {
    type Output = PiValue;
    fn add(self, rhs: &PiValue) -> PiValue {
        let mut out = self.clone();
        for (&j, c) in &rhs.coeffs {
            out.add_term(j, c.clone());
        }
        out
    }
}

impl Add for PiValue {
    type Output = PiValue;
    fn add(self, rhs: PiValue) -> PiValue {
        &self + &rhs
    }
}

impl Sub<&PiValue> for &PiValue {
    type Output = PiValue;
    fn sub(self, rhs: &PiValue) -> PiValue {
        let mut out = self.clone();
        for (&j, c) in &rhs.coeffs {
            out.add_term(j, -c.clone());
        }
        out
    }
}

impl Sub for PiValue {
    type Output = PiValue;
    fn sub(self, rhs: PiValue) -> PiValue {
        &self - &rhs
    }
}

impl Mul<&PiValue> for &PiValue {
    type Output = PiValue;
    fn mul(self, rhs: &PiValue) -> PiValue {
        let mut out = PiValue::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for PiValue {
    type Output = PiValue;
    fn mul(self, rhs: PiValue) -> PiValue {
        &self * &rhs
    }
}

impl Neg for PiValue {
    type Output = PiValue;
    fn neg(self) -> PiValue {
        PiValue {
            coeffs: self.coeffs.into_iter().map(|(j, c)| (j, -c)).collect(),
        }
    }
}

impl std::iter::Sum for PiValue {
    fn sum<I: Iterator<Item = PiValue>>(iter: I) -> PiValue {
        iter.fold(PiValue::zero(), |acc, x| &acc + &x)
    }
}

/// Renders terms in ascending powers, e.g. `1/6*pi^2 - 1/90*pi^4`.
impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&j, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{magnitude}")?;
            if j > 0 {
                write!(f, "*pi^{}", 2 * j)?;
            }
        }
        Ok(())
    }
}

impl FromStr for PiValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        for (idx, ch) in compact.char_indices() {
            if ch == '+' || ch == '-' {
                if idx == 0 {
                    negative = ch == '-';
                    continue;
                }
                if current.is_empty() {
                    return Err(err("dangling sign"));
                }
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((negative, current));

        let mut value = PiValue::zero();
        for (neg, term) in terms {
            let (coeff, power) = match term.split_once('*') {
                Some((c, p)) => (c, Some(p)),
                None if term.starts_with("pi") => ("1", Some(term.as_str())),
                None => (term.as_str(), None),
            };
            let c: Rational = coeff.parse().map_err(|_| err("bad coefficient"))?;
            let j = match power {
                None => 0,
                Some(p) => {
                    let exp: u32 = match p.strip_prefix("pi^") {
                        Some(e) => e.parse().map_err(|_| err("bad exponent"))?,
                        None if p == "pi" => 1,
                        None => return Err(err("expected pi^m")),
                    };
                    if !exp.is_multiple_of(2) {
                        return Err(err("odd power of pi"));
                    }
                    exp / 2
                }
            };
            value.add_term(j, if neg { -c } else { c });
        }
        Ok(value)
    }
}
