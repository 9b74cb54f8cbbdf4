//! Univariate polynomials in the vertex count `n` with exact rational
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Coefficient `i` multiplies `n^i`. Trailing zeros are always trimmed, so
/// the zero polynomial has no coefficients and derived equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPoly::constant(Rational::one())
    }

    /// The indeterminate `n`.
    pub fn n() -> Self {
        RationalPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        RationalPoly::from_coeffs(vec![c])
    }

    pub fn from_integer(c: i64) -> Self {
        RationalPoly::constant(integer(c))
    }

    /// `n - a`.
    pub fn linear_shift(a: i64) -> Self {
        RationalPoly::from_coeffs(vec![integer(-a), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        RationalPoly::from_coeffs(coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalPoly::zero();
        }
        RationalPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RationalPoly::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, n: i64) -> Rational {
        self.eval_rational(&integer(n))
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `n(n-1)...(n-m+1)`; the constant 1 for `m = 0`.
    pub fn falling_factorial(m: usize) -> Self {
        RationalPoly::shifted_falling(0, m)
    }

    /// `(n-a)(n-a-1)...(n-a-m+1)`.
    pub fn shifted_falling(a: i64, m: usize) -> Self {
        (0..m as i64).fold(RationalPoly::one(), |acc, i| &acc * &RationalPoly::linear_shift(a + i))
    }

    /// Substitutes `inner` for `n`.
    pub fn compose(&self, inner: &RationalPoly) -> Self {
        self.coeffs.iter().rev().fold(RationalPoly::zero(), |acc, c| {
            &(&acc * inner) + &RationalPoly::constant(c.clone())
        })
    }

    /// Coefficients over the falling factorial basis `n^{_0}, n^{_1}, ...`.
    pub fn to_falling_basis(&self) -> Vec<Rational> {
        let d = self.coeffs.len();
        let mut out = vec![Rational::zero(); d];
        // stirling[k] = S(power, k), second kind, updated row by row
        let mut stirling: Vec<BigInt> = vec![BigInt::one()];
        for (power, c) in self.coeffs.iter().enumerate() {
            if power > 0 {
                let mut next = vec![BigInt::zero(); power + 1];
                for k in 1..=power {
                    let carry = if k < stirling.len() { &stirling[k] * BigInt::from(k) } else { BigInt::zero() };
                    next[k] = carry + &stirling[k - 1];
                }
                stirling = next;
            }
            if !c.is_zero() {
                for (k, s) in stirling.iter().enumerate() {
                    out[k] += c * Rational::from_integer(s.clone());
                }
            }
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    pub fn from_falling_basis(coeffs: &[Rational]) -> Self {
        coeffs.iter().enumerate().fold(RationalPoly::zero(), |acc, (k, c)| {
            &acc + &RationalPoly::falling_factorial(k).scale(c)
        })
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Rendering over the falling factorial basis, e.g. `(1/2)·n^{_2} - 3·n + 1`.
    pub fn display_falling(&self) -> String {
        let terms: Vec<(Rational, String)> = self
            .to_falling_basis()
            .into_iter()
            .enumerate()
            .rev()
            .map(|(k, c)| {
                let basis = match k {
                    0 => String::new(),
                    1 => "n".to_string(),
                    _ => format!("n^{{_{k}}}"),
                };
                (c, basis)
            })
            .collect();
        render_sum(&terms, "·")
    }
}

/// Joins `coefficient·basis` terms with signs; an empty basis marks a constant.
pub(crate) fn render_sum(terms: &[(Rational, String)], times: &str) -> String {
    let mut out = String::new();
    for (c, basis) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = c.abs();
        let coefficient = if magnitude.is_integer() {
            magnitude.to_string()
        } else {
            format!("({magnitude})")
        };
        if basis.is_empty() {
            out.push_str(&coefficient);
        } else if magnitude.is_one() {
            out.push_str(basis);
        } else {
            out.push_str(&coefficient);
            out.push_str(times);
            out.push_str(basis);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RationalPoly {
    /// Monomial basis, highest power first: `3n^2 - 3n - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| {
                let basis = match k {
                    0 => String::new(),
                    1 => "n".to_string(),
                    _ => format!("n^{k}"),
                };
                (c.clone(), basis)
            })
            .collect();
        f.write_str(&render_sum(&terms, ""))
    }
}

impl Add<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl AddAssign<&RationalPoly> for RationalPoly {
    fn add_assign(&mut self, rhs: &RationalPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Serialize for RationalPoly {
    /// A list of `"p/q"` strings, lowest power first.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<Rational>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RationalPoly::from_coeffs(coeffs))
    }
}

impl FromStr for RationalPoly {
    type Err = Error;

    /// Parses expressions in `n` such as `2(n-2)(3n-1)`, `n^2+n-2`,
    /// `(n-2)^{_3}` (falling power), `n^{\underline 2}` or `(n^2+n)/2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = PolyParser {
            input: s,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            depth: 0,
        };
        let poly = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(poly)
    }
}

const MAX_PARSE_DEPTH: usize = 32;
const MAX_PARSE_EXPONENT: usize = 32;

struct PolyParser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
    depth: usize,
}

impl PolyParser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Polynomial {
            input: self.input.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let len = s.chars().count();
        if self.chars.len() >= self.pos + len && self.chars[self.pos..self.pos + len].iter().copied().eq(s.chars()) {
            self.pos += len;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalPoly> {
        self.depth += 1;
        if self.depth > MAX_PARSE_DEPTH {
            return Err(self.error("nesting too deep"));
        }
        let mut negate = self.eat('-');
        if !negate {
            self.eat('+');
        }
        let mut acc = RationalPoly::zero();
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') || self.eat('−') {
                negate = true;
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.eat('·') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                let c = d
                    .as_constant()
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| self.error("divisor must be a nonzero constant"))?;
                acc = acc.scale(&c.recip());
            } else if matches!(self.peek(), Some('(' | 'n') | Some('0'..='9')) {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalPoly> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        if self.eat('{') {
            let falling = self.eat('_') || self.eat_str("\\underline");
            let e = self.exponent()?;
            if !self.eat('}') {
                return Err(self.error("expected '}'"));
            }
            if falling {
                return Ok((0..e as i64).fold(RationalPoly::one(), |acc, i| {
                    &acc * &(&base - &RationalPoly::from_integer(i))
                }));
            }
            Ok(base.pow(e as u32))
        } else {
            Ok(base.pow(self.exponent()? as u32))
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        let e = self.integer()?;
        e.to_usize()
            .filter(|&e| e <= MAX_PARSE_EXPONENT)
            .ok_or_else(|| self.error("exponent too large"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.chars[start..self.pos].iter().collect::<String>().parse().expect("digits"))
    }

    fn primary(&mut self) -> Result<RationalPoly> {
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            Ok(inner)
        } else if self.eat('n') {
            Ok(RationalPoly::n())
        } else if self.eat('{') {
            let inner = self.expr()?;
            if !self.eat('}') {
                return Err(self.error("expected '}'"));
            }
            Ok(inner)
        } else {
            Ok(RationalPoly::constant(Rational::from_integer(self.integer()?)))
        }
    }
}
