//! Exact Laurent polynomials in one variable with arbitrary-precision
//! integer coefficients.
//!
//! The variable letter is a const generic tag, so bracket polynomials in
//! `A` and Jones polynomials in `q` are distinct types and cannot be mixed
//! by accident.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// Laurent polynomial `sum c_e * V^e` with `e` ranging over integers.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<const V: char> {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Kauffman bracket polynomials live in `A`.
pub type BracketPoly = LaurentPoly<'A'>;
/// Jones-type polynomials live in `q`.
pub type JonesPoly = LaurentPoly<'q'>;

impl<const V: char> LaurentPoly<V> {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; zero for monomials, `None` for the zero polynomial.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Multiply by `V^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `V -> V^k` (`k` may be negative, e.g. mirroring with -1).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Reinterpret the exponents under `V = W^k`, i.e. divide all exponents
    /// by `k`. Errors unless every exponent is divisible by `k`.
    pub fn change_variable<const W: char>(&self, k: i64) -> Result<LaurentPoly<W>, PolyError> {
        assert!(k != 0);
        let mut coeffs = BTreeMap::new();
        for (e, c) in &self.coeffs {
            if e % k != 0 {
                return Err(PolyError::ExponentNotDivisible { exp: *e, by: k });
            }
            coeffs.insert(e / k, c.clone());
        }
        Ok(LaurentPoly { coeffs })
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division, returning `None` when `self` is not a multiple of
    /// `divisor`.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dmax = divisor.max_exp().unwrap();
        let dlead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rmax = rem.max_exp().unwrap();
            let rlead = rem.coeff(rmax);
            if (&rlead % &dlead) != BigInt::zero() {
                return None;
            }
            let q = &rlead / &dlead;
            let e = rmax - dmax;
            // Guard against non-terminating division on ragged tails.
            if let (Some(rmin), Some(dmin)) = (rem.min_exp(), divisor.min_exp()) {
                if rmin - dmin > e {
                    return None;
                }
            }
            let term = Self::monomial(e, q);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Canonical text form: ascending exponents, explicit signs, e.g.
    /// `-1*q^-9 + 3*q^-8 - 5*q^-7 + 1*q^0`.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&format!("{}*{}^{}", c.abs(), V, e));
        }
        out
    }

    /// JSON-friendly form: ascending `[exponent, coefficient]` pairs with
    /// string coefficients (coefficients may exceed machine integers).
    pub fn exponent_pairs(&self) -> Vec<(i64, String)> {
        self.terms().map(|(e, c)| (e, c.to_string())).collect()
    }
}

impl<const V: char> fmt::Display for LaurentPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl<const V: char> fmt::Debug for LaurentPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<const V: char> FromStr for LaurentPoly<V> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        // Split into signed terms of the form `c*V^e`.
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, rest.strip_prefix('+').unwrap_or(rest)),
            };
            let end = body
                .char_indices()
                .skip(1)
                .find(|(i, c)| (*c == '+' || *c == '-') && !body[..*i].ends_with('^'))
                .map(|(i, _)| i)
                .unwrap_or(body.len());
            let term = &body[..end];
            let (cs, es) = term
                .split_once(&format!("*{}^", V))
                .ok_or_else(|| PolyError::Malformed(term.to_string()))?;
            let c: BigInt = cs.parse().map_err(|_| PolyError::Malformed(term.to_string()))?;
            let e: i64 = es.parse().map_err(|_| PolyError::Malformed(term.to_string()))?;
            p.add_term(e, c * sign);
            rest = &body[end..];
        }
        Ok(p)
    }
}

impl<const V: char> Add for &LaurentPoly<V> {
    type Output = LaurentPoly<V>;
    fn add(self, rhs: Self) -> LaurentPoly<V> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<const V: char> AddAssign<&LaurentPoly<V>> for LaurentPoly<V> {
    fn add_assign(&mut self, rhs: &LaurentPoly<V>) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl<const V: char> Sub for &LaurentPoly<V> {
    type Output = LaurentPoly<V>;
    fn sub(self, rhs: Self) -> LaurentPoly<V> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<const V: char> Neg for &LaurentPoly<V> {
    type Output = LaurentPoly<V>;
    fn neg(self) -> LaurentPoly<V> {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<const V: char> Mul for &LaurentPoly<V> {
    type Output = LaurentPoly<V>;
    fn mul(self, rhs: Self) -> LaurentPoly<V> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<const V: char> MulAssign<&LaurentPoly<V>> for LaurentPoly<V> {
    fn mul_assign(&mut self, rhs: &LaurentPoly<V>) {
        *self = &*self * rhs;
    }
}
