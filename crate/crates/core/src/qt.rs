//! Laurent polynomials in `q` and `t` with exact rational coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by `(q exponent, t exponent)`, so
//! iteration order is ascending q-exponent, then ascending t-exponent. Zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_big(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"num/den"` with the denominator always present.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    /// `c q^i t^j`
    pub fn monomial(i: i32, j: i32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        QtPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^i t^j`.
    pub fn coeff(&self, i: i32, j: i32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// The `q^i t^j` component as a constant polynomial.
    pub fn component(&self, i: i32, j: i32) -> QtPoly {
        QtPoly::constant(self.coeff(i, j))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &Rational) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// `self += other * c`
    pub fn add_scaled(&mut self, other: &QtPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (&(i, j), v) in &other.terms {
            self.add_term(i, j, &(v * c));
        }
    }

    pub fn pow(&self, e: u32) -> QtPoly {
        let mut acc = QtPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at rational `q`, `t`. Negative exponents need nonzero arguments.
    pub fn evaluate(&self, q: &Rational, t: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * rpow(q, i)? * rpow(t, j)?;
        }
        Ok(acc)
    }

    /// Substitutes `q = t = 1`.
    pub fn at_one(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    /// Sets `t = 1`, keeping the q-grading.
    pub fn t_to_one(&self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(i, _), c) in &self.terms {
            out.add_term(i, 0, c);
        }
        out
    }

    /// Swaps the roles of `q` and `t`.
    pub fn swap_qt(&self) -> QtPoly {
        QtPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn max_q_degree(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn max_t_degree(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// `[[i, j, "num/den"], ...]`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn rpow(x: &Rational, e: i32) -> Result<Rational> {
    if e < 0 {
        if x.is_zero() {
            return Err(Error::Parse("negative power of zero".into()));
        }
        Ok(num_traits::pow(x.recip(), (-e) as usize))
    } else {
        Ok(num_traits::pow(x.clone(), e as usize))
    }
}

impl From<Rational> for QtPoly {
    fn from(c: Rational) -> Self {
        QtPoly::constant(c)
    }
}

impl From<i64> for QtPoly {
    fn from(n: i64) -> Self {
        QtPoly::integer(n)
    }
}

impl Add<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c);
        }
    }
}

impl SubAssign<&QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &QtPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, &-c);
        }
    }
}

impl Sub<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QtPoly {
    type Output = QtPoly;
    fn sub(mut self, rhs: QtPoly) -> QtPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl Mul<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term(a + x, b + y, &(c * d));
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(i32, i32, String)> = self.terms.iter().map(|(&(i, j), c)| (i, j, format_rational(c))).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<(i32, i32, String)>::deserialize(d)?;
        let mut out = QtPoly::zero();
        for (i, j, c) in v {
            let c = parse_rational(&c).map_err(D::Error::custom)?;
            out.add_term(i, j, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for QtPoly {
    /// `1 + 2*q - 3/2*q^2*t^-1`; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !a.is_one() || (i == 0 && j == 0) {
                factors.push(a.to_string());
            }
            for (name, e) in [("q", i), ("t", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QtPoly {
    type Err = Error;

    /// Parses the output of `Display`: a signed sum of `c*q^i*t^j` terms.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = QtPoly::zero();
        let mut chunks = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for k in 1..bytes.len() {
            // a sign starts a new term unless it follows '^'
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
                chunks.push(&s[start..k]);
                start = k;
            }
        }
        chunks.push(&s[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes()[0] {
                b'+' => (1, &chunk[1..]),
                b'-' => (-1, &chunk[1..]),
                _ => (1, chunk),
            };
            let mut c = rat(sign);
            let (mut i, mut j) = (0i32, 0i32);
            for factor in body.split('*') {
                let bad = || Error::Parse(format!("bad factor {factor:?} in {s:?}"));
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                match base {
                    "q" => i += exp,
                    "t" => j += exp,
                    _ if factor.contains('^') => return Err(bad()),
                    _ => c *= parse_rational(base)?,
                }
            }
            out.add_term(i, j, &c);
        }
        Ok(out)
    }
}

// ---- q-analogues ----

/// Univariate polynomial in `q` with nonnegative integer coefficients.
type QSeries = Vec<BigUint>;

fn series_mul(a: &QSeries, b: &QSeries) -> QSeries {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_to_poly(s: &QSeries) -> QtPoly {
    let mut out = QtPoly::zero();
    for (i, c) in s.iter().enumerate() {
        out.add_term(i as i32, 0, &rat_big(c.clone()));
    }
    out
}

fn q_binomial_series(n: usize, k: usize) -> QSeries {
    if k > n {
        return Vec::new();
    }
    // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    let mut row: Vec<QSeries> = vec![vec![BigUint::one()]];
    for m in 1..=n {
        let mut next: Vec<QSeries> = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut s: QSeries = if j == 0 { Vec::new() } else { row[j - 1].clone() };
            if j < m {
                if let Some(prev) = row.get(j) {
                    if s.len() < prev.len() + j {
                        s.resize(prev.len() + j, BigUint::zero());
                    }
                    for (e, c) in prev.iter().enumerate() {
                        s[e + j] += c;
                    }
                }
            }
            next.push(s);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `[n]_q = 1 + q + ... + q^{n-1}`
pub fn q_integer(n: usize) -> QtPoly {
    series_to_poly(&vec![BigUint::one(); n])
}

pub fn q_factorial(n: usize) -> QtPoly {
    let mut acc: QSeries = vec![BigUint::one()];
    for k in 1..=n {
        acc = series_mul(&acc, &vec![BigUint::one(); k]);
    }
    series_to_poly(&acc)
}

pub fn q_binomial(n: usize, k: usize) -> QtPoly {
    series_to_poly(&q_binomial_series(n, k))
}

/// `[n; a_1, ..., a_k]_q` for `n = Σ a_i`: the inversion generating function
/// over words with content `a`.
pub fn q_multinomial(parts: &[usize]) -> QtPoly {
    let mut acc: QSeries = vec![BigUint::one()];
    let mut total = 0;
    for &a in parts {
        total += a;
        acc = series_mul(&acc, &q_binomial_series(total, a));
    }
    series_to_poly(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // inversion count over all distinct words with the given content
    fn oracle_multinomial(content: &[usize]) -> QtPoly {
        let mut word: Vec<usize> = Vec::new();
        for (letter, &m) in content.iter().enumerate() {
            word.extend(std::iter::repeat_n(letter, m));
        }
        let mut out = QtPoly::zero();
        fn go(rem: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut QtPoly) {
            if rem.iter().all(|&m| m == 0) {
                let mut inv = 0;
                for a in 0..cur.len() {
                    for b in a + 1..cur.len() {
                        if cur[a] > cur[b] {
                            inv += 1;
                        }
                    }
                }
                out.add_term(inv, 0, &rat(1));
                return;
            }
            for l in 0..rem.len() {
                if rem[l] > 0 {
                    rem[l] -= 1;
                    cur.push(l);
                    go(rem, cur, out);
                    cur.pop();
                    rem[l] += 1;
                }
            }
        }
        let mut rem = content.to_vec();
        go(&mut rem, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn ring_basics() {
        let q = QtPoly::q();
        let t = QtPoly::t();
        let one = QtPoly::one();
        let a = &(&one + &q) * &(&one - &q);
        assert_eq!(a, &one - &(&q * &q));
        assert_eq!((&q * &t).coeff(1, 1), rat(1));
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn q_multinomial_examples() {
        let expected = "1 + q + 2*q^2 + q^3 + q^4".parse::<QtPoly>().unwrap();
        assert_eq!(q_multinomial(&[2, 2]), expected);
        assert_eq!(q_multinomial(&[4]), QtPoly::one());
        assert_eq!(q_multinomial(&[1, 1, 1]), q_factorial(3));
        assert_eq!(q_binomial(4, 2), expected);
        assert_eq!(q_binomial(5, 0), QtPoly::one());
        assert_eq!(q_integer(3), "1 + q + q^2".parse().unwrap());
    }

    #[test]
    fn multinomial_matches_word_inversions() {
        for content in [vec![1, 2], vec![2, 1, 1], vec![3, 2], vec![1, 1, 1, 1], vec![2, 2, 1], vec![0, 3, 1]] {
            assert_eq!(q_multinomial(&content), oracle_multinomial(&content), "{content:?}");
        }
    }

    #[test]
    fn json_order_and_round_trip() {
        let p: QtPoly = "3*q*t - 1/2*t^2 + 2 + q^-1".parse().unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"[[-1,0,"1/1"],[0,0,"2/1"],[0,2,"-1/2"],[1,1,"3/1"]]"#);
        let back: QtPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["0", "1", "-q", "2 - 7/3*t^3 + q^2*t", "q^-2*t^-1"] {
            let p: QtPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn evaluate_at_one() {
        let p = q_multinomial(&[2, 1, 1]);
        assert_eq!(p.at_one(), rat(12));
        assert_eq!(p.evaluate(&rat(1), &rat(1)).unwrap(), rat(12));
        let inv: QtPoly = "q^-1".parse().unwrap();
        assert!(inv.evaluate(&rat(0), &rat(1)).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec((-2i32..3, -2i32..3, -5i64..6, 1i64..4), 0..5).prop_map(|v| {
            let mut p = QtPoly::zero();
            for (i, j, n, d) in v {
                p.add_term(i, j, &rat_frac(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let js = serde_json::to_value(&a).unwrap();
            let back: QtPoly = serde_json::from_value(js).unwrap();
            prop_assert_eq!(back, a.clone());
            let text: QtPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(text, a);
        }

        #[test]
        fn multinomial_symmetric_and_palindromic(parts in proptest::collection::vec(0usize..4, 1..4)) {
            let mut rev = parts.clone();
            rev.reverse();
            let a = q_multinomial(&parts);
            prop_assert_eq!(&a, &q_multinomial(&rev));
            let n: usize = parts.iter().sum();
            let top = (n * n - parts.iter().map(|x| x * x).sum::<usize>()) / 2;
            for (i, _, c) in a.terms() {
                prop_assert_eq!(c.clone(), a.coeff(top as i32 - i, 0));
            }
        }
    }
}
