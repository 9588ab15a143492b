//! Integer polynomials in `t`, truncated power series, rational series with
//! denominators `∏(1 - t^k)`, and cyclotomic integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }
    pub fn monomial(e: u64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }
    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u64) -> Self {
        Self::one() - Self::monomial(k, 1)
    }
    /// `[n]_t = 1 + t + ... + t^(n-1)`, zero when `n <= 0`.
    pub fn t_integer(n: i64) -> Self {
        let mut p = Self::zero();
        for e in 0..n.max(0) as u64 {
            p.add_term(e, BigInt::one());
        }
        p
    }
    /// Coefficient list, index = degree.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(c: &[T]) -> Self {
        let mut p = Self::zero();
        for (e, x) in c.iter().enumerate() {
            p.add_term(e as u64, x.clone().into());
        }
        p
    }
    pub fn from_dense(c: Vec<BigInt>) -> Self {
        let mut p = Self::zero();
        for (e, x) in c.into_iter().enumerate() {
            p.add_term(e as u64, x);
        }
        p
    }
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => {
                let mut v = vec![BigInt::zero(); d as usize + 1];
                for (&e, c) in &self.terms {
                    v[e as usize] = c.clone();
                }
                v
            }
        }
    }
    pub fn add_term(&mut self, e: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }
    pub fn low_degree(&self) -> Option<u64> {
        self.terms.keys().next().copied()
    }
    pub fn coeff(&self, e: u64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }
    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (&e, x) in &self.terms {
            p.add_term(e, x * c);
        }
        p
    }
    /// Multiplies by `t^k`.
    pub fn shift(&self, k: u64) -> Self {
        TPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }
    /// `f(t^e)`.
    pub fn substitute_power(&self, e: u64) -> Self {
        TPoly {
            terms: self.terms.iter().map(|(&d, c)| (d * e, c.clone())).collect(),
        }
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
    pub fn truncate(&self, n: u64) -> Self {
        TPoly {
            terms: self.terms.range(..n).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    /// Long division over `Z`. Fails when some step is not divisible by the
    /// leading coefficient of `d`.
    pub fn div_rem(&self, d: &TPoly) -> Result<(TPoly, TPoly)> {
        let dd = d.to_dense();
        if dd.is_empty() {
            return Err(Error::DivisionByZeroSeries);
        }
        let mut a = self.to_dense();
        let dl = dd.len() - 1;
        let lead = &dd[dl];
        if a.len() <= dl {
            return Ok((TPoly::zero(), self.clone()));
        }
        let mut quo = vec![BigInt::zero(); a.len() - dl];
        for i in (dl..a.len()).rev() {
            if a[i].is_zero() {
                continue;
            }
            if !(&a[i] % lead).is_zero() {
                return Err(Error::DivisionNotExact(format!(
                    "leading coefficient {lead} does not divide {}",
                    a[i]
                )));
            }
            let c = &a[i] / lead;
            for (j, x) in dd.iter().enumerate() {
                if !x.is_zero() {
                    a[i - dl + j] -= &c * x;
                }
            }
            quo[i - dl] = c;
        }
        Ok((TPoly::from_dense(quo), TPoly::from_dense(a)))
    }

    /// Exact quotient or `DivisionNotExact`.
    pub fn div_exact(&self, d: &TPoly) -> Result<TPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DivisionNotExact(format!("remainder {r}")))
        }
    }

    /// Splits off the largest power of `(t - 1)`: returns `(s, g)` with `self = (t-1)^s g`.
    pub fn split_root_one(&self) -> (u32, TPoly) {
        assert!(!self.is_zero());
        let mut s = 0;
        let mut cur = self.to_dense();
        loop {
            let val: BigInt = cur.iter().sum();
            if !val.is_zero() {
                return (s, TPoly::from_dense(cur));
            }
            // synthetic division by (t - 1)
            let n = cur.len();
            let mut out = vec![BigInt::zero(); n - 1];
            let mut carry = BigInt::zero();
            for i in (1..n).rev() {
                carry += &cur[i];
                out[i - 1] = carry.clone();
            }
            cur = out;
            s += 1;
        }
    }

    pub fn to_pairs(&self) -> Vec<(u64, String)> {
        self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect()
    }
    pub fn from_pairs(pairs: &[(u64, String)]) -> Result<Self> {
        let mut p = Self::zero();
        for (e, c) in pairs {
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::CacheCorrupt(format!("bad coefficient {c}")))?;
            p.add_term(*e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                _ => write!(f, "{a}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(u64, String)>::deserialize(d)?;
        TPoly::from_pairs(&pairs).map_err(serde::de::Error::custom)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, o: &TPoly) -> TPoly {
        let mut p = self.clone();
        for (&e, c) in &o.terms {
            p.add_term(e, c.clone());
        }
        p
    }
}
impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, o: &TPoly) -> TPoly {
        let mut p = self.clone();
        for (&e, c) in &o.terms {
            p.add_term(e, -c);
        }
        p
    }
}
impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, o: &TPoly) -> TPoly {
        let (Some(da), Some(db)) = (self.degree(), o.degree()) else {
            return TPoly::zero();
        };
        // Dense convolution when both are fairly full.
        if self.terms.len() * o.terms.len() > 64
            && (da + db) < 4 * (self.terms.len() * o.terms.len()) as u64
        {
            let mut out = vec![BigInt::zero(); (da + db) as usize + 1];
            for (&e1, c1) in &self.terms {
                for (&e2, c2) in &o.terms {
                    out[(e1 + e2) as usize] += c1 * c2;
                }
            }
            return TPoly::from_dense(out);
        }
        let mut p = TPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &o.terms {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}
impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
    };
}
owned_ops!(TPoly);

pub fn substitute_power(f: &TPoly, e: u64) -> TPoly {
    f.substitute_power(e)
}

/// Coefficient of `t^e` in the result is the coefficient of `t^(d0-e)` in `f`.
pub fn reciprocal_transform(f: &TPoly, d0: u64) -> Result<TPoly> {
    if let Some(d) = f.degree() {
        if d > d0 {
            return Err(Error::DegreeExceedsD0 { degree: d, d0 });
        }
    }
    Ok(TPoly {
        terms: f.terms.iter().map(|(&e, c)| (d0 - e, c.clone())).collect(),
    })
}

/// Serde helper writing integers as decimal strings.
pub mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A power series known modulo `t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        TruncSeries { coeffs }
    }
    pub fn from_poly(f: &TPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in f.terms() {
            if (e as usize) < order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        s
    }
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }
    pub fn coeff(&self, e: usize) -> &BigInt {
        assert!(e < self.order(), "coefficient {e} beyond truncation order");
        &self.coeffs[e]
    }
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
    pub fn to_poly(&self) -> TPoly {
        TPoly::from_dense(self.coeffs.clone())
    }
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
    /// First degree where the two series differ, over their common order.
    pub fn first_difference(&self, o: &TruncSeries) -> Option<usize> {
        let n = self.order().min(o.order());
        (0..n).find(|&i| self.coeffs[i] != o.coeffs[i])
    }
    pub fn mul(&self, o: &TruncSeries) -> TruncSeries {
        let n = self.order().min(o.order());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }
    pub fn add(&self, o: &TruncSeries) -> TruncSeries {
        let n = self.order().min(o.order());
        TruncSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect(),
        }
    }
    pub fn sub(&self, o: &TruncSeries) -> TruncSeries {
        let n = self.order().min(o.order());
        TruncSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect(),
        }
    }
    /// `f(t^e)` keeping the same order.
    pub fn substitute_power(&self, e: usize) -> TruncSeries {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * e < self.order() {
                out.coeffs[i * e] = c.clone();
            }
        }
        out
    }
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut out = Self::zero(self.order());
        for i in k..self.order() {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.to_poly(), self.order())
    }
}

/// Anything that can be expanded to a truncated series of a given order.
pub trait Expand {
    fn expand_to(&self, order: usize) -> TruncSeries;
}

impl Expand for TPoly {
    fn expand_to(&self, order: usize) -> TruncSeries {
        TruncSeries::from_poly(self, order)
    }
}

impl Expand for TruncSeries {
    fn expand_to(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order(), "series known only to order {}", self.order());
        self.truncate(order)
    }
}

impl Expand for RationalSeries {
    fn expand_to(&self, order: usize) -> TruncSeries {
        expand(self, order)
    }
}

pub fn series_congruent(a: &dyn Expand, b: &dyn Expand, order: usize) -> bool {
    a.expand_to(order) == b.expand_to(order)
}

/// `numerator / ∏(1 - t^k)` over the multiset of denominator exponents.
#[derive(Clone, Serialize, Deserialize)]
pub struct RationalSeries {
    numerator: TPoly,
    denom: Vec<u64>,
}

impl RationalSeries {
    pub fn new(numerator: TPoly, mut denom: Vec<u64>) -> Self {
        assert!(denom.iter().all(|&k| k > 0), "denominator exponents are positive");
        denom.sort_unstable();
        RationalSeries { numerator, denom }
    }
    pub fn from_poly(p: TPoly) -> Self {
        Self::new(p, Vec::new())
    }
    pub fn numerator(&self) -> &TPoly {
        &self.numerator
    }
    pub fn denom(&self) -> &[u64] {
        &self.denom
    }
    pub fn denom_poly(&self) -> TPoly {
        self.denom
            .iter()
            .fold(TPoly::one(), |acc, &k| &acc * &TPoly::one_minus_t_pow(k))
    }
    pub fn shift(&self, k: u64) -> Self {
        Self::new(self.numerator.shift(k), self.denom.clone())
    }
    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.numerator.scale(c), self.denom.clone())
    }
    pub fn expand(&self, order: usize) -> TruncSeries {
        expand(self, order)
    }
    pub fn mul(&self, o: &RationalSeries) -> RationalSeries {
        let mut d = self.denom.clone();
        d.extend_from_slice(&o.denom);
        Self::new(&self.numerator * &o.numerator, d)
    }
    pub fn add(&self, o: &RationalSeries) -> RationalSeries {
        let (common, extra_a, extra_b) = merge_denoms(&self.denom, &o.denom);
        let na = extra_a.iter().fold(self.numerator.clone(), |acc, &k| {
            &acc * &TPoly::one_minus_t_pow(k)
        });
        let nb = extra_b.iter().fold(o.numerator.clone(), |acc, &k| {
            &acc * &TPoly::one_minus_t_pow(k)
        });
        Self::new(&na + &nb, common)
    }
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RationalSeries>) -> RationalSeries {
        items
            .into_iter()
            .fold(RationalSeries::from_poly(TPoly::zero()), |acc, x| acc.add(x))
    }
    /// Exact equality by cross-multiplying after cancelling shared factors.
    pub fn equals(&self, o: &RationalSeries) -> bool {
        let (ra, rb) = cancel_common(&self.denom, &o.denom);
        let lhs = rb.iter().fold(self.numerator.clone(), |acc, &k| {
            &acc * &TPoly::one_minus_t_pow(k)
        });
        let rhs = ra.iter().fold(o.numerator.clone(), |acc, &k| {
            &acc * &TPoly::one_minus_t_pow(k)
        });
        lhs == rhs
    }
    /// Value at `t = 1`, cancelling `(1 - t)` factors symbolically.
    pub fn limit_at_one(&self) -> Result<BigRational> {
        ratio_limit_at_one(self, &RationalSeries::from_poly(TPoly::one()))
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / (", self.numerator)?;
        for &k in &self.denom {
            if k == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{k})")?;
            }
        }
        write!(f, ")")
    }
}

/// Sorted multisets `a`, `b` -> (max-union, what `a` lacks, what `b` lacks).
fn merge_denoms(a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut i, mut j) = (0, 0);
    let (mut common, mut ea, mut eb) = (Vec::new(), Vec::new(), Vec::new());
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            common.push(a[i]);
            eb.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            common.push(b[j]);
            ea.push(b[j]);
            j += 1;
        } else {
            common.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    (common, ea, eb)
}

/// Removes the shared part of two sorted multisets.
fn cancel_common(a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let (_, only_b, only_a) = merge_denoms(a, b);
    (only_a, only_b)
}

/// Limit of `a / b` at `t = 1`.
pub fn ratio_limit_at_one(a: &RationalSeries, b: &RationalSeries) -> Result<BigRational> {
    if b.numerator.is_zero() {
        return Err(Error::DivisionByZeroSeries);
    }
    if a.numerator.is_zero() {
        return Ok(BigRational::zero());
    }
    // a/b = a.num * ∏_{b.den}(1-t^k) / (b.num * ∏_{a.den}(1-t^k)); each (1-t^k) = (1-t)[k]_t.
    let (sa, ga) = a.numerator.split_root_one();
    let (sb, gb) = b.numerator.split_root_one();
    // (t-1)^s = (-1)^s (1-t)^s
    let order = sa as i64 + b.denom.len() as i64 - sb as i64 - a.denom.len() as i64;
    if order < 0 {
        return Err(Error::LimitNotFinite);
    }
    if order > 0 {
        return Ok(BigRational::zero());
    }
    let sign = if (sa + sb) % 2 == 0 { 1 } else { -1 };
    let mut num = ga.eval_one() * BigInt::from(sign);
    let mut den = gb.eval_one();
    for &k in &b.denom {
        num *= BigInt::from(k);
    }
    for &k in &a.denom {
        den *= BigInt::from(k);
    }
    Ok(BigRational::new(num, den))
}

pub fn expand(rs: &RationalSeries, order: usize) -> TruncSeries {
    let mut c = TruncSeries::from_poly(&rs.numerator, order).coeffs;
    for &k in &rs.denom {
        let k = k as usize;
        for i in k..order {
            let prev = c[i - k].clone();
            c[i] += prev;
        }
    }
    TruncSeries { coeffs: c }
}

/// Result of dividing two rational series.
#[derive(Debug, Clone, PartialEq)]
pub enum Quotient {
    Polynomial(TPoly),
    NotPolynomial { remainder: TPoly },
}

pub fn exact_quotient(a: &RationalSeries, b: &RationalSeries) -> Result<Quotient> {
    if b.numerator.is_zero() {
        return Err(Error::DivisionByZeroSeries);
    }
    let (ra, rb) = cancel_common(&a.denom, &b.denom);
    let num = rb.iter().fold(a.numerator.clone(), |acc, &k| {
        &acc * &TPoly::one_minus_t_pow(k)
    });
    let den = ra.iter().fold(b.numerator.clone(), |acc, &k| {
        &acc * &TPoly::one_minus_t_pow(k)
    });
    // Strip common powers of t so the division is by a polynomial with nonzero constant term.
    let s = num.low_degree().unwrap_or(0).min(den.low_degree().unwrap_or(0));
    let shift_down = |p: &TPoly| TPoly {
        terms: p.terms.iter().map(|(&e, c)| (e - s, c.clone())).collect(),
    };
    let (num, den) = (shift_down(&num), shift_down(&den));
    match num.div_rem(&den) {
        Ok((q, r)) if r.is_zero() => Ok(Quotient::Polynomial(q)),
        Ok((_, r)) => Ok(Quotient::NotPolynomial { remainder: r }),
        Err(Error::DivisionNotExact(_)) => Ok(Quotient::NotPolynomial { remainder: num }),
        Err(e) => Err(e),
    }
}

pub fn cyclotomic_poly(r: u64) -> TPoly {
    assert!(r >= 1);
    let divisors: Vec<u64> = (1..=r).filter(|d| r.is_multiple_of(*d)).collect();
    let mut phis: BTreeMap<u64, TPoly> = BTreeMap::new();
    for &d in &divisors {
        let mut num = TPoly::monomial(d, 1) - TPoly::one();
        for (&e, phi) in &phis {
            if d % e == 0 {
                num = num.div_exact(phi).expect("cyclotomic division is exact");
            }
        }
        phis.insert(d, num);
    }
    phis.remove(&r).unwrap()
}

/// An element of `Z[t]/Φ_r(t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycInt {
    r: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn from_int(r: u64, n: impl Into<BigInt>) -> Self {
        let phi = cyclotomic_poly(r);
        let d = phi.degree().unwrap() as usize;
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs[0] = n.into();
        CycInt { r, coeffs }
    }
    /// Reduces `f` modulo `Φ_r`.
    pub fn from_poly(r: u64, f: &TPoly) -> Self {
        let phi = cyclotomic_poly(r);
        let d = phi.degree().unwrap() as usize;
        let (_, rem) = f.div_rem(&phi).expect("cyclotomic polynomials are monic");
        let mut coeffs = rem.to_dense();
        coeffs.resize(d, BigInt::zero());
        CycInt { r, coeffs }
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
    /// `Some(n)` when this is the image of the integer `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0].clone())
    }
}

/// Image of `f(ζ^d)` in `Z[t]/Φ_r`, where `ζ` is the class of `t`.
pub fn eval_at_root(f: &TPoly, r: u64, d: u64) -> CycInt {
    assert!(r >= 1);
    let mut folded = TPoly::zero();
    for (e, c) in f.terms() {
        let k = ((e as u128 * d as u128) % r as u128) as u64;
        folded.add_term(k, c.clone());
    }
    CycInt::from_poly(r, &folded)
}
