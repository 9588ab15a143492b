//! Finite fields `F_q = F_p[x]/(f)` with a deterministic modulus and generator.
//!
//! Elements are stored as `u32` indices `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`
//! where `c_i` is the coefficient of `x^i`. The lexicographic order used to
//! pick the modulus and the generator compares `c_0` first.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_FIELD_SIZE: u64 = 1 << 20;

/// Precomputed tables are kept for fields up to this size.
const TABLE_LIMIT: u32 = 256;

pub struct FieldSpec {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, r)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut r = 0;
    let mut x = q;
    while x > 1 {
        x /= p;
        r += 1;
    }
    Some((p, r))
}

// Dense polynomial helpers over F_p, low-degree first.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    trim(&mut a);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let da = a.len() - 1;
        let c = (a[da] as u64 * lead_inv as u64 % p as u64) as u32;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = da - dm + i;
                a[idx] = ((a[idx] as u64 + (p - c) as u64 * mi as u64) % p as u64) as u32;
            }
        }
        trim(&mut a);
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// The `k`-th coefficient vector of length `len` in lexicographic order, `c_0` most significant.
fn lex_coeffs(k: u64, len: u32, p: u32) -> Vec<u32> {
    let mut c = vec![0u32; len as usize];
    let mut x = k;
    for i in (0..len as usize).rev() {
        c[i] = (x % p as u64) as u32;
        x /= p as u64;
    }
    c
}

fn coeffs_to_index(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0u32, |acc, &x| acc * p + x)
}

fn index_to_coeffs(v: u32, r: u32, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(r as usize);
    let mut x = v;
    for _ in 0..r {
        c.push(x % p);
        x /= p;
    }
    c
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut g = lex_coeffs(k, d as u32, p);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, r: u32) -> Vec<u32> {
    let count = (p as u64).pow(r);
    for k in 0..count {
        let mut f = lex_coeffs(k, r, p);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn slow_mul(a: u32, b: u32, modulus: &[u32], p: u32, r: u32) -> u32 {
    let ac = index_to_coeffs(a, r, p);
    let bc = index_to_coeffs(b, r, p);
    let mut prod = vec![0u64; (2 * r) as usize];
    for (i, &x) in ac.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in bc.iter().enumerate() {
            prod[i + j] += x as u64 * y as u64;
        }
    }
    let prod: Vec<u32> = prod.iter().map(|&c| (c % p as u64) as u32).collect();
    let rem = poly_rem(&prod, modulus, p);
    coeffs_to_index(&rem, p)
}

fn slow_pow(a: u32, mut e: u64, modulus: &[u32], p: u32, r: u32) -> u32 {
    let mut acc = 1u32;
    let mut b = a;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(acc, b, modulus, p, r);
        }
        b = slow_mul(b, b, modulus, p, r);
        e >>= 1;
    }
    acc
}

pub fn make_field(p: u64, r: u32) -> Result<Arc<FieldSpec>> {
    make_field_bounded(p, r, DEFAULT_MAX_FIELD_SIZE)
}

/// The field with `q` elements, `q` a prime power.
pub fn field_of_order(q: u64) -> Result<Arc<FieldSpec>> {
    let (p, r) = prime_power(q).ok_or_else(|| Error::ConfigInvalid(format!("{q} is not a prime power")))?;
    make_field(p, r)
}

pub fn make_field_bounded(p: u64, r: u32, max: u64) -> Result<Arc<FieldSpec>> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if r == 0 {
        return Err(Error::ConfigInvalid("field degree r must be positive".into()));
    }
    let q = p.checked_pow(r).filter(|&q| q <= max && q <= u32::MAX as u64);
    let q = q.ok_or(Error::FieldTooLarge { p, r, max })? as u32;
    let p = p as u32;
    let modulus = smallest_irreducible(p, r);

    let factors = prime_factors(q as u64 - 1);
    let generator = (0..q as u64)
        .map(|k| coeffs_to_index(&lex_coeffs(k, r, p), p))
        .find(|&g| {
            g != 0
                && slow_pow(g, q as u64 - 1, &modulus, p, r) == 1
                && factors
                    .iter()
                    .all(|&l| slow_pow(g, (q as u64 - 1) / l, &modulus, p, r) != 1)
        })
        .expect("the multiplicative group is cyclic");

    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for k in 0..q - 1 {
        exp.push(x);
        log[x as usize] = k;
        x = slow_mul(x, generator, &modulus, p, r);
    }
    let neg = (0..q)
        .map(|v| {
            let c: Vec<u32> = index_to_coeffs(v, r, p).iter().map(|&c| (p - c) % p).collect();
            coeffs_to_index(&c, p)
        })
        .collect();

    let mut spec = FieldSpec {
        p,
        r,
        q,
        modulus,
        generator,
        exp,
        log,
        neg,
        add_table: None,
        mul_table: None,
    };
    if q <= TABLE_LIMIT {
        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..q {
            for b in 0..q {
                add[a as usize * qs + b as usize] = spec.add_slow(a, b);
                mul[a as usize * qs + b as usize] = spec.mul_log(a, b);
            }
        }
        spec.add_table = Some(add);
        spec.mul_table = Some(mul);
    }
    Ok(Arc::new(spec))
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Monic modulus, low-degree coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn generator(&self) -> u32 {
        self.generator
    }
    pub fn coeffs(&self, v: u32) -> Vec<u32> {
        index_to_coeffs(v, self.r, self.p)
    }
    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        assert!(c.len() <= self.r as usize && c.iter().all(|&x| x < self.p));
        coeffs_to_index(c, self.p)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn mul_log(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.r == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        match &self.add_table {
            Some(t) => t[a as usize * self.q as usize + b as usize],
            None => self.add_slow(a, b),
        }
    }
    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.q as usize + b as usize],
            None => self.mul_log(a, b),
        }
    }
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[a as usize];
        Some(self.exp[((n - l) % n) as usize])
    }
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % n)) % n) as usize]
    }
    /// `generator^k`.
    pub fn gen_pow(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }
    /// Discrete log base the generator.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }
    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    pub fn order_of(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64;
        Ok(if l == 0 { 1 } else { n / num_integer::gcd(n, l) })
    }

    pub fn element(self: &Arc<Self>, value: u32) -> FieldElem {
        assert!(value < self.q, "element index out of range");
        FieldElem {
            field: Arc::clone(self),
            value,
        }
    }
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(move |v| self.element(v))
    }
}

#[derive(Clone)]
pub struct FieldElem {
    field: Arc<FieldSpec>,
    value: u32,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@F{}", self.value, self.field.q)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
            && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}
impl Eq for FieldElem {}

impl FieldElem {
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
    pub fn value(&self) -> u32 {
        self.value
    }
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn same(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &o.field) || *self.field == *o.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
    fn with(&self, value: u32) -> Self {
        FieldElem {
            field: Arc::clone(&self.field),
            value,
        }
    }
    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(self.with(self.field.add(self.value, o.value)))
    }
    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(self.with(self.field.sub(self.value, o.value)))
    }
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(self.with(self.field.mul(self.value, o.value)))
    }
    pub fn inv(&self) -> Result<Self> {
        self.field
            .inv(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::ZeroElement)
    }
    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl std::ops::$tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                self.$try(&o).expect("field mismatch")
            }
        }
        impl<'a> std::ops::$tr<&'a FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                self.$try(o).expect("field mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let v = self.field.neg(self.value);
        self.with(v)
    }
}

pub fn element_order(x: &FieldElem) -> Result<u64> {
    x.field.order_of(x.value)
}

/// A ring embedding `F_q -> F_{q^m}` stored as a lookup table.
#[derive(Debug, Clone)]
pub struct Embedding {
    sub: Arc<FieldSpec>,
    sup: Arc<FieldSpec>,
    table: Vec<u32>,
}

impl Embedding {
    pub fn sub(&self) -> &Arc<FieldSpec> {
        &self.sub
    }
    pub fn sup(&self) -> &Arc<FieldSpec> {
        &self.sup
    }
    pub fn map(&self, v: u32) -> u32 {
        self.table[v as usize]
    }
    pub fn apply(&self, x: &FieldElem) -> Result<FieldElem> {
        if *x.field != *self.sub {
            return Err(Error::FieldMismatch);
        }
        Ok(self.sup.element(self.map(x.value)))
    }
    pub fn table(&self) -> &[u32] {
        &self.table
    }
}

/// Sends the sub-field variable `x` to a root of the sub modulus inside the
/// subgroup generated by `h = G^((q^m-1)/(q-1))`, taking `h^k` with the least
/// `k` (so `k = 1` whenever the moduli are compatible).
pub fn embed_subfield(sub: &Arc<FieldSpec>, sup: &Arc<FieldSpec>) -> Result<Embedding> {
    let err = Error::NotASubfield {
        sub: sub.q as u64,
        sup: sup.q as u64,
    };
    if sub.p != sup.p || !sup.r.is_multiple_of(sub.r) {
        return Err(err);
    }
    let qs = sub.q as u64;
    let h = sup.gen_pow((sup.q as u64 - 1) / (qs - 1));
    let eval_modulus = |z: u32| {
        let mut acc = 0u32;
        for &c in sub.modulus.iter().rev() {
            acc = sup.add(sup.mul(acc, z), c);
        }
        acc
    };
    let root = std::iter::once(0u32)
        .chain((1..qs).map(|k| sup.pow(h, k)))
        .find(|&z| eval_modulus(z) == 0)
        .ok_or(err)?;
    let table = (0..sub.q)
        .map(|v| {
            let mut acc = 0u32;
            for &c in sub.coeffs(v).iter().rev() {
                acc = sup.add(sup.mul(acc, root), c);
            }
            acc
        })
        .collect();
    Ok(Embedding {
        sub: Arc::clone(sub),
        sup: Arc::clone(sup),
        table,
    })
}
