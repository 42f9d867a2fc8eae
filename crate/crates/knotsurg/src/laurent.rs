//! Exact integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use crate::error::{Error, Result};

/// A finitely supported map from integer exponents to nonzero integer
/// coefficients. Zero coefficients are never stored, so equality is plain
/// map equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The single term `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable `t`.
    pub fn variable() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (exp, c) in iter {
            *terms.entry(exp).or_insert_with(BigInt::zero) += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by the unit `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True iff `coeff(k) = coeff(-k)` for all `k`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, c)| self.coeff(-e) == *c)
    }

    /// Exact quotient `q` with `q * d = self`. Fails with
    /// [`Error::InexactDivision`] when no such integer Laurent polynomial
    /// exists, and with [`Error::DivisionByZero`] when `d = 0`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both operands to ordinary polynomials with nonzero constant
        // term; units t^k are invertible, so only the offset matters.
        let p_min = self.min_exp().unwrap();
        let d_min = d.min_exp().unwrap();
        let p_deg = (self.max_exp().unwrap() - p_min) as usize;
        let d_deg = (d.max_exp().unwrap() - d_min) as usize;
        if p_deg < d_deg {
            return Err(Error::InexactDivision);
        }

        let mut rem: Vec<BigInt> = vec![BigInt::zero(); p_deg + 1];
        for (e, c) in self.terms() {
            rem[(e - p_min) as usize] = c.clone();
        }
        let mut den: Vec<BigInt> = vec![BigInt::zero(); d_deg + 1];
        for (e, c) in d.terms() {
            den[(e - d_min) as usize] = c.clone();
        }

        let mut quo = vec![BigInt::zero(); p_deg - d_deg + 1];
        for k in (0..=p_deg - d_deg).rev() {
            let lead = rem[k + d_deg].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(&den[d_deg]);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, dc) in den.iter().enumerate() {
                let prod = &q * dc;
                rem[k + j] -= prod;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }

        let offset = p_min - d_min;
        Ok(LaurentPoly::from_terms(
            quo.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + offset, c)),
        ))
    }

    /// Exact rational value at a nonzero integer.
    pub fn evaluate(&self, x: i64) -> Result<BigRational> {
        if x == 0 {
            return Err(Error::EvaluateAtZero);
        }
        let xb = BigInt::from(x);
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let p: BigInt = Pow::pow(&xb, e.unsigned_abs());
            if e >= 0 {
                acc += BigRational::from_integer(c * p);
            } else {
                acc += BigRational::new(c.clone(), p);
            }
        }
        Ok(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms() {
            *terms.entry(e).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms() {
            *terms.entry(e).or_insert_with(BigInt::zero) -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                *terms.entry(e1 + e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Renders in decreasing exponent order, `t^k` notation:
/// `t^2 - 2t^1 + 3 - 2t^-1 + t^-2`. The zero polynomial renders as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != BigInt::from(1) {
                    write!(f, "{mag}")?;
                }
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses the rendering produced by [`fmt::Display`].
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::Syntax("empty polynomial".into()));
        }
        if text == "0" {
            return Ok(LaurentPoly::zero());
        }

        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut negative = false;

        if bytes[pos] == b'-' {
            negative = true;
            pos += 1;
        } else if bytes[pos] == b'+' {
            pos += 1;
        }

        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let (exp, coeff, next) = parse_term(text, pos, negative)?;
            terms.push((exp, coeff));
            pos = next;
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            negative = match bytes[pos] {
                b'+' => false,
                b'-' => true,
                other => {
                    return Err(Error::Syntax(format!(
                        "expected '+' or '-' in polynomial, found '{}'",
                        other as char
                    )))
                }
            };
            pos += 1;
        }

        Ok(LaurentPoly::from_terms(terms))
    }
}

/// Parses one `[coeff][t^exp]` term starting at `pos`; returns
/// `(exponent, signed coefficient, next position)`.
fn parse_term(text: &str, mut pos: usize, negative: bool) -> Result<(i64, BigInt, usize)> {
    let bytes = text.as_bytes();
    let digits_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    let digits = &text[digits_start..pos];

    let mut coeff = if digits.is_empty() {
        BigInt::from(1)
    } else {
        digits
            .parse::<BigInt>()
            .map_err(|_| Error::Syntax(format!("bad coefficient '{digits}'")))?
    };
    if negative {
        coeff = -coeff;
    }

    let exp = if pos < bytes.len() && bytes[pos] == b't' {
        pos += 1;
        if pos >= bytes.len() || bytes[pos] != b'^' {
            return Err(Error::Syntax("expected '^' after 't'".into()));
        }
        pos += 1;
        let exp_start = pos;
        if pos < bytes.len() && bytes[pos] == b'-' {
            pos += 1;
        }
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        text[exp_start..pos]
            .parse::<i64>()
            .map_err(|_| Error::Syntax(format!("bad exponent in '{}'", &text[exp_start..pos])))?
    } else {
        if digits.is_empty() {
            return Err(Error::Syntax(format!(
                "expected a term at position {digits_start} in '{text}'"
            )));
        }
        0
    };

    Ok((exp, coeff, pos))
}
