//! Sparse multivariate polynomials over `F_q`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::gf::FieldSpec;

/// How exponents are treated after multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentRule {
    /// Ordinary polynomial ring `S`.
    Free,
    /// `S / (x_i^b)`: monomials with an exponent `>= b` vanish.
    Truncate(u32),
    /// `S / (x_i^b - x_i)`: exponents `e >= b` become `((e-1) mod (b-1)) + 1`.
    Wrap(u32),
}

impl ExponentRule {
    /// Applies the rule in place; `false` means the monomial vanishes.
    pub fn apply(self, e: &mut [u32]) -> bool {
        match self {
            ExponentRule::Free => true,
            ExponentRule::Truncate(b) => e.iter().all(|&x| x < b),
            ExponentRule::Wrap(b) => {
                for x in e.iter_mut() {
                    if *x >= b {
                        *x = (*x - 1) % (b - 1) + 1;
                    }
                }
                true
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    field: Arc<FieldSpec>,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u32>,
}

impl MPoly {
    pub fn zero(field: &Arc<FieldSpec>, nvars: usize) -> Self {
        MPoly {
            field: Arc::clone(field),
            nvars,
            terms: BTreeMap::new(),
        }
    }
    pub fn constant(field: &Arc<FieldSpec>, nvars: usize, c: u32) -> Self {
        Self::monomial(field, vec![0; nvars], c)
    }
    pub fn one(field: &Arc<FieldSpec>, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }
    pub fn monomial(field: &Arc<FieldSpec>, exps: Vec<u32>, c: u32) -> Self {
        let mut p = Self::zero(field, exps.len());
        p.add_term(exps, c);
        p
    }
    pub fn var(field: &Arc<FieldSpec>, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, 1)
    }
    /// `Σ_j coeffs[j] x_j`.
    pub fn linear_form(field: &Arc<FieldSpec>, coeffs: &[u32]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (j, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = 1;
            p.add_term(e, c);
        }
        p
    }
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, u32)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn coeff(&self, e: &[u32]) -> u32 {
        self.terms.get(e).copied().unwrap_or(0)
    }
    pub fn add_term(&mut self, e: Vec<u32>, c: u32) {
        debug_assert_eq!(e.len(), self.nvars);
        if c == 0 {
            return;
        }
        let f = &self.field;
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = f.add(*x, c);
                if *x == 0 {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }
    pub fn scale(&self, c: u32) -> Self {
        let mut p = Self::zero(&self.field, self.nvars);
        for (e, &x) in &self.terms {
            p.add_term(e.clone(), self.field.mul(x, c));
        }
        p
    }
    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, &c) in &o.terms {
            p.add_term(e.clone(), c);
        }
        p
    }
    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, &c) in &o.terms {
            p.add_term(e.clone(), self.field.neg(c));
        }
        p
    }
    pub fn mul(&self, o: &MPoly) -> MPoly {
        self.mul_with(o, ExponentRule::Free)
    }
    pub fn mul_with(&self, o: &MPoly, rule: ExponentRule) -> MPoly {
        let f = &*self.field;
        let mut p = Self::zero(&self.field, self.nvars);
        let mut e = vec![0u32; self.nvars];
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &o.terms {
                for k in 0..self.nvars {
                    e[k] = e1[k] + e2[k];
                }
                if rule.apply(&mut e) {
                    p.add_term(e.clone(), f.mul(c1, c2));
                }
            }
        }
        p
    }
    pub fn reduce(&self, rule: ExponentRule) -> MPoly {
        let mut p = Self::zero(&self.field, self.nvars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            if rule.apply(&mut e) {
                p.add_term(e, c);
            }
        }
        p
    }
    /// `f^p`, using additivity of Frobenius.
    pub fn frobenius(&self) -> MPoly {
        let p = self.field.p();
        let mut out = Self::zero(&self.field, self.nvars);
        for (e, &c) in &self.terms {
            out.add_term(e.iter().map(|x| x * p).collect(), self.field.pow(c, p as u64));
        }
        out
    }
    /// `f^k`, splitting `k` into base-`p` digits.
    pub fn pow_with(&self, mut k: u64, rule: ExponentRule) -> MPoly {
        let p = self.field.p() as u64;
        let mut acc = Self::one(&self.field, self.nvars);
        let mut base = self.reduce(rule);
        while k > 0 {
            let digit = k % p;
            for _ in 0..digit {
                acc = acc.mul_with(&base, rule);
            }
            k /= p;
            if k > 0 {
                base = base.frobenius().reduce(rule);
            }
        }
        acc
    }
    pub fn pow(&self, k: u64) -> MPoly {
        self.pow_with(k, ExponentRule::Free)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{x}", i + 1) })
                    .collect();
                format!("{c}*{}", if mono.is_empty() { "1".into() } else { mono.join("*") })
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn pow_matches_repeated_multiplication() {
        for (p, r) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let f = make_field(p, r).unwrap();
            let l = MPoly::linear_form(&f, &[1, f.generator(), 1]);
            let mut acc = MPoly::one(&f, 3);
            for k in 0..12u64 {
                assert_eq!(l.pow(k), acc, "p={p} r={r} k={k}");
                acc = acc.mul(&l);
            }
        }
    }

    #[test]
    fn truncated_and_wrapped_powers() {
        let f = make_field(3, 1).unwrap();
        let l = MPoly::linear_form(&f, &[1, 1]);
        for rule in [ExponentRule::Truncate(3), ExponentRule::Wrap(3)] {
            for k in 0..10 {
                assert_eq!(l.pow_with(k, rule), l.pow(k).reduce(rule));
            }
        }
        let mut e = vec![3, 5, 2];
        assert!(ExponentRule::Wrap(3).apply(&mut e));
        assert_eq!(e, vec![1, 1, 2]);
    }
}
