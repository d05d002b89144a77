//! Sparse polynomials with arbitrary-precision integer coefficients in the
//! seven trace coordinates `x1, x2, x3, x12, x13, x23, x123`.
//!
//! Terms are kept in a `BTreeMap` under the graded lexicographic order with
//! `x1 < x2 < x3 < x12 < x13 < x23 < x123`, so iteration, printing and JSON
//! output are deterministic. Text and JSON list terms from the largest
//! monomial down.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const NVARS: usize = 7;

/// One of the seven trace coordinates, in ring order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X1,
    X2,
    X3,
    X12,
    X13,
    X23,
    X123,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X1,
        Var::X2,
        Var::X3,
        Var::X12,
        Var::X13,
        Var::X23,
        Var::X123,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::X12 => "x12",
            Var::X13 => "x13",
            Var::X23 => "x23",
            Var::X123 => "x123",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    /// The coordinate for a set of generator indices given as a bitmask
    /// (bit 0 = g1, bit 1 = g2, bit 2 = g3).
    pub fn from_index_mask(mask: u8) -> Option<Var> {
        match mask {
            0b001 => Some(Var::X1),
            0b010 => Some(Var::X2),
            0b100 => Some(Var::X3),
            0b011 => Some(Var::X12),
            0b101 => Some(Var::X13),
            0b110 => Some(Var::X23),
            0b111 => Some(Var::X123),
            _ => None,
        }
    }

    pub fn index_mask(self) -> u8 {
        match self {
            Var::X1 => 0b001,
            Var::X2 => 0b010,
            Var::X3 => 0b100,
            Var::X12 => 0b011,
            Var::X13 => 0b101,
            Var::X23 => 0b110,
            Var::X123 => 0b111,
        }
    }

    /// Trace coordinate of a single generator `g_i`.
    pub fn generator(i: u8) -> Var {
        assert!((1..=3).contains(&i), "generator index must be 1, 2 or 3");
        Var::from_index_mask(1 << (i - 1)).unwrap()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed in [`Var`] order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(exponents: [u32; NVARS]) -> Self {
        Monomial(exponents)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    fn with_exponent(mut self, v: Var, e: u32) -> Self {
        self.0[v.index()] = e;
        self
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Monomial(e)
    }
}

/// Graded lexicographic: total degree first, then the exponent of the
/// largest variable (`x123`) downwards.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `Z[x1, x2, x3, x12, x13, x23, x123]`. No stored
/// coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (*n * m, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a point given in [`Var`] order.
    pub fn evaluate(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut powers: HashMap<(usize, u32), BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = BigRational::from_integer(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| num_traits::pow(point[i].clone(), e as usize));
                value *= &*pw;
            }
            total += value;
        }
        total
    }

    /// Relabels variables by a permutation of the seven coordinates.
    pub fn substitute(&self, map: &VarPerm) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = [0; NVARS];
                    for v in Var::ALL {
                        e[map.image(v).index()] = m.exponent(v);
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Writes `self` as `sum_k c_k * x123^k` with `c_k` free of `x123`.
    fn split_by_x123(&self) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.degree_in(Var::X123) as usize + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(Var::X123) as usize;
            out[k]
                .terms
                .insert(m.with_exponent(Var::X123, 0), c.clone());
        }
        out
    }

    fn join_by_x123(parts: Vec<Polynomial>) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (k, part) in parts.into_iter().enumerate() {
            for (m, c) in part.terms {
                terms.insert(m.with_exponent(Var::X123, k as u32), c);
            }
        }
        Polynomial { terms }
    }

    /// Long division by the Fricke polynomial `K`, viewed as a monic
    /// quadratic in `x123`. Returns `(quotient, remainder)` with
    /// `self = quotient * K + remainder` and `deg_x123(remainder) <= 1`.
    pub fn div_rem_fricke(&self) -> (Polynomial, Polynomial) {
        let (linear, constant) = fricke_parts();
        let mut coeffs = self.split_by_x123();
        if coeffs.len() <= 2 {
            return (Polynomial::zero(), self.clone());
        }
        let mut quotient = vec![Polynomial::zero(); coeffs.len() - 2];
        // K = x123^2 - linear * x123 + constant
        for n in (2..coeffs.len()).rev() {
            let lead = std::mem::take(&mut coeffs[n]);
            if lead.is_zero() {
                continue;
            }
            coeffs[n - 1] += &(&lead * linear);
            coeffs[n - 2] -= &(&lead * constant);
            quotient[n - 2] = lead;
        }
        coeffs.truncate(2);
        (
            Polynomial::join_by_x123(quotient),
            Polynomial::join_by_x123(coeffs),
        )
    }

    /// Normal form modulo `<K>`: the remainder of [`Self::div_rem_fricke`].
    pub fn rem_mod_fricke(&self) -> Polynomial {
        self.div_rem_fricke().1
    }

    /// Whether `self` lies in the principal ideal generated by `K`.
    pub fn in_fricke_ideal(&self) -> bool {
        self.rem_mod_fricke().is_zero()
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m.0,
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        for t in terms {
            let c = t
                .coeff
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient `{}`", t.coeff)))?;
            p.add_term(Monomial(t.exps), c);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("polynomial serializes")
    }

    pub fn from_json(text: &str) -> Result<Polynomial> {
        let terms: Vec<JsonTerm> =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Polynomial::from_json_terms(&terms)
    }
}

/// One term of the JSON polynomial encoding. Coefficients are decimal
/// strings so arbitrary precision survives any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: [u32; NVARS],
}

/// A bijection of the seven coordinates, applied as a ring endomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarPerm([Var; NVARS]);

impl VarPerm {
    pub fn identity() -> Self {
        VarPerm(Var::ALL)
    }

    /// `images[i]` is the image of `Var::ALL[i]`.
    pub fn new(images: [Var; NVARS]) -> Result<Self> {
        let mut seen = [false; NVARS];
        for v in images {
            if std::mem::replace(&mut seen[v.index()], true) {
                return Err(Error::InvalidArgument(format!(
                    "variable map is not a bijection ({v} hit twice)"
                )));
            }
        }
        Ok(VarPerm(images))
    }

    /// Map induced by a permutation of generator indices: `x_S -> x_{pi(S)}`,
    /// keeping `x123` fixed. `perm[i-1]` is the image of index `i`.
    pub fn from_index_perm(perm: [u8; 3]) -> Result<Self> {
        let mut sorted = perm;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 1, 2, 3"
            )));
        }
        let images = Var::ALL.map(|v| {
            let mask = v.index_mask();
            let image = (0..3)
                .filter(|b| mask & (1 << b) != 0)
                .fold(0u8, |acc, b| acc | 1 << (perm[b] - 1));
            Var::from_index_mask(image).unwrap()
        });
        VarPerm::new(images)
    }

    /// Exchange of the indices 2 and 3 (`x23`, `x123` fixed).
    pub fn swap23() -> Self {
        VarPerm::from_index_perm([1, 3, 2]).unwrap()
    }

    pub fn image(&self, v: Var) -> Var {
        self.0[v.index()]
    }

    pub fn compose(&self, then: &VarPerm) -> VarPerm {
        VarPerm(self.0.map(|v| then.image(v)))
    }
}

const FRICKE_TEXT: &str = "x123^2 - (x12*x3 + x13*x2 + x23*x1 - x1*x2*x3)*x123 \
    + x1^2 + x2^2 + x3^2 + x12^2 + x23^2 + x13^2 \
    - x1*x2*x12 - x1*x3*x13 - x2*x3*x23 + x12*x13*x23 - 4";

/// The Fricke polynomial `K`, generator of the kernel of the trace map for
/// the free group of rank three.
pub fn fricke_k() -> &'static Polynomial {
    static K: OnceLock<Polynomial> = OnceLock::new();
    K.get_or_init(|| FRICKE_TEXT.parse().expect("Fricke polynomial parses"))
}

// (linear, constant) with K = x123^2 - linear*x123 + constant.
fn fricke_parts() -> &'static (Polynomial, Polynomial) {
    static PARTS: OnceLock<(Polynomial, Polynomial)> = OnceLock::new();
    PARTS.get_or_init(|| {
        let parts = fricke_k().split_by_x123();
        (-&parts[1], parts[0].clone())
    })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

/// Parses sums of products of integers, variables and parenthesised
/// subexpressions, with `^` for nonnegative powers. `*` between factors is
/// optional.
pub fn parse_poly(text: &str) -> Result<Polynomial> {
    let mut parser = PolyParser {
        bytes: text.as_bytes(),
        text,
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(Error::syntax(parser.pos + 1, "unexpected trailing input"));
    }
    Ok(p)
}

struct PolyParser<'a> {
    bytes: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    // expr := ["+"|"-"] product (("+"|"-") product)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.product()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // product := power (["*"] power)*
    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'x' | b'(' | b'0'..=b'9') => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    // power := atom ("^" digits)?
    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(Error::syntax(
                    start + 1,
                    "expected nonnegative integer power",
                ));
            }
            let n: u32 = digits
                .parse()
                .map_err(|_| Error::syntax(start + 1, "power too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::syntax(self.pos + 1, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                let name_end = self.pos
                    + self.text[self.pos..]
                        .bytes()
                        .take_while(u8::is_ascii_digit)
                        .count();
                self.pos = name_end;
                let name = &self.text[start..name_end];
                Var::from_name(name)
                    .map(Polynomial::var)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))
            }
            Some(b'0'..=b'9') => {
                let digits = self.digits();
                Ok(Polynomial::constant(
                    digits.parse::<BigInt>().expect("digits"),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let end = start
                    + self.text[start..]
                        .bytes()
                        .take_while(u8::is_ascii_alphanumeric)
                        .count();
                Err(Error::UnknownVariable(self.text[start..end].to_string()))
            }
            Some(_) => Err(Error::syntax(self.pos + 1, "expected a term")),
            None => Err(Error::syntax(self.pos + 1, "unexpected end of input")),
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(*ma * *mb).or_default() += ca * cb;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn two_point() -> [BigRational; NVARS] {
        std::array::from_fn(|_| q(2, 1))
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x1 + x2") * &p("x1 - x2"), p("x1^2 - x2^2"));
        let a = p("3*x12*x3 - x123 + 7");
        assert!((&a + &(-&a)).is_zero());
        let sq = &Polynomial::var(Var::X123) * &Polynomial::var(Var::X123);
        assert_eq!(sq.num_terms(), 1);
        assert_eq!(
            sq.coefficient(&Monomial::new([0, 0, 0, 0, 0, 0, 2])),
            BigInt::one()
        );
        assert_eq!(
            a.scalar_mul(&BigInt::from(-2)),
            p("-6 x12 x3 + 2 x123 - 14")
        );
    }

    #[test]
    fn fricke_constant_values() {
        let k = fricke_k();
        assert_eq!(k.num_terms(), 16);
        assert_eq!(
            k.coefficient(&Monomial::new([0, 0, 0, 0, 0, 0, 2])),
            BigInt::one()
        );
        assert_eq!(k.constant_term(), BigInt::from(-4));
        assert!(k.evaluate(&two_point()).is_zero());
    }

    #[test]
    fn division_examples() {
        let k = fricke_k();
        assert!(k.rem_mod_fricke().is_zero());
        let plain = p("x1*x23");
        assert_eq!(plain.rem_mod_fricke(), plain);

        let expected = p("(x12 x3 + x13 x2 + x23 x1 - x1 x2 x3) x123 \
            - (x1^2 + x2^2 + x3^2 + x12^2 + x23^2 + x13^2 - x1 x2 x12 - x1 x3 x13 - x2 x3 x23 + x12 x13 x23 - 4)");
        let x123sq = p("x123^2");
        let (quot, rem) = x123sq.div_rem_fricke();
        assert_eq!(rem, expected);
        assert_eq!(quot, Polynomial::one());
        // re-multiply
        assert_eq!(&(&quot * k) + &rem, x123sq);
    }

    #[test]
    fn ideal_membership_examples() {
        let k = fricke_k();
        assert!(k.in_fricke_ideal());
        assert!(!p("x1").in_fricke_ideal());
        assert!((&p("x1 + x123") * k).in_fricke_ideal());
    }

    #[test]
    fn evaluate_examples() {
        let point = [
            q(5, 2),
            q(2, 1),
            q(2, 1),
            q(5, 2),
            q(5, 2),
            q(2, 1),
            q(5, 2),
        ];
        assert_eq!(p("x1*x23").evaluate(&point), q(5, 1));
        assert_eq!(Polynomial::zero().evaluate(&point), q(0, 1));
    }

    #[test]
    fn swap23_examples() {
        let s = VarPerm::swap23();
        assert_eq!(p("x2*x13").substitute(&s), p("x3*x12"));
        assert_eq!(p("x23 + x123").substitute(&s), p("x23 + x123"));
        let a = p("x1^2 x2 x123 - 5 x13 + x23^3");
        assert_eq!(a.substitute(&VarPerm::identity()), a);
        assert_eq!(s.compose(&s), VarPerm::identity());
    }

    #[test]
    fn var_perm_validation() {
        assert!(VarPerm::new([Var::X1; NVARS]).is_err());
        assert!(VarPerm::from_index_perm([1, 1, 2]).is_err());
        let s12 = VarPerm::from_index_perm([2, 1, 3]).unwrap();
        assert_eq!(s12.image(Var::X13), Var::X23);
        assert_eq!(s12.image(Var::X12), Var::X12);
    }

    #[test]
    fn formatting() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("x123^2 - 4").to_string(), "x123^2 - 4");
        assert_eq!(p("-4 + x123 x123").to_string(), "x123^2 - 4");
        assert_eq!(p("2 x1 - x2 x3 - 1").to_string(), "-x2*x3 + 2*x1 - 1");
        assert_eq!(
            p("x1 + x2 + x3 + x12 + x13 + x23 + x123").to_string(),
            "x123 + x23 + x13 + x12 + x3 + x2 + x1"
        );
        let k = fricke_k();
        assert_eq!(k.to_string().parse::<Polynomial>().unwrap(), *k);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_poly("x4 + 1"),
            Err(Error::UnknownVariable("x4".into()))
        );
        assert_eq!(parse_poly("y"), Err(Error::UnknownVariable("y".into())));
        assert!(matches!(parse_poly("x1 +"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("(x1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x1^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x1 )"), Err(Error::Syntax { .. })));
        assert_eq!(parse_poly("2x1x2").unwrap(), p("2*x1*x2"));
    }

    #[test]
    fn json_encoding() {
        let a = p("x123^2 - 4");
        assert_eq!(
            a.to_json(),
            r#"[{"coeff":"1","exps":[0,0,0,0,0,0,2]},{"coeff":"-4","exps":[0,0,0,0,0,0,0]}]"#
        );
        let big = p("123456789012345678901234567890 x1 - x2");
        assert_eq!(Polynomial::from_json(&big.to_json()).unwrap(), big);
        assert_eq!(Polynomial::zero().to_json(), "[]");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::array::uniform7(0u32..3), -5i64..=5), 0..6).prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(e, c)| (Monomial::new(e), BigInt::from(c))),
            )
        })
    }

    fn arb_point() -> impl Strategy<Value = [BigRational; NVARS]> {
        prop::array::uniform7((-7i64..=7, 1i64..=4)).prop_map(|a| a.map(|(n, d)| q(n, d)))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn remainder_ignores_multiples_of_k(a in arb_poly(), b in arb_poly()) {
            let shifted = &(&a * fricke_k()) + &b;
            prop_assert_eq!(shifted.rem_mod_fricke(), b.rem_mod_fricke());
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            let n = &a * &b;
            let (quot, rem) = n.div_rem_fricke();
            prop_assert!(rem.degree_in(Var::X123) <= 1);
            prop_assert_eq!(&(&quot * fricke_k()) + &rem, n);
            prop_assert_eq!(rem.rem_mod_fricke(), rem);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), pt in arb_point()) {
            prop_assert_eq!((&a * &b).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
            prop_assert_eq!((&a + &b).evaluate(&pt), a.evaluate(&pt) + b.evaluate(&pt));
        }

        #[test]
        fn swap23_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
            let s = VarPerm::swap23();
            prop_assert_eq!((&a + &b).substitute(&s), &a.substitute(&s) + &b.substitute(&s));
            prop_assert_eq!((&a * &b).substitute(&s), &a.substitute(&s) * &b.substitute(&s));
            prop_assert_eq!(a.substitute(&s).substitute(&s), a);
        }

        #[test]
        fn text_and_json_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<Polynomial>().unwrap(), a.clone());
            prop_assert_eq!(Polynomial::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
