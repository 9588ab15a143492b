//! `P_α`-orbits on `F_{q^m}^n`, indexed by flags of `F_q`-subspaces of `F_{q^m}`.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::Outcome;
use crate::error::{Error, Result};
use crate::gf::{embed_subfield, field_of_order, Embedding, FieldSpec};
use crate::linalg::Echelon;
use crate::qtcomb::{orbit_count_formula, parabolic_C, pw, Composition, WeakComposition};
use crate::series::{eval_at_root, CycInt};

/// `F_{q^m}` together with `F_q`-coordinates in the basis `1, G, ..., G^{m-1}`,
/// `G` the chosen generator of `F_{q^m}`.
pub struct Tower {
    small: Arc<FieldSpec>,
    big: Arc<FieldSpec>,
    m: u32,
    embedding: Embedding,
    coords: Vec<Vec<u32>>,
}

impl Tower {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ConfigInvalid("m must be positive for a field tower".into()));
        }
        let small = field_of_order(q)?;
        let big = field_of_order(pw(q, m))?;
        let embedding = embed_subfield(&small, &big)?;
        let size = big.q() as usize;
        let mut coords = vec![Vec::new(); size];
        let basis: Vec<u32> = (0..m as u64).map(|i| big.gen_pow(i)).collect();
        for k in 0..size {
            let mut c = vec![0u32; m as usize];
            let mut x = k;
            for ci in c.iter_mut() {
                *ci = (x % q as usize) as u32;
                x /= q as usize;
            }
            let v = c
                .iter()
                .zip(&basis)
                .fold(0, |acc, (&ci, &b)| big.add(acc, big.mul(embedding.map(ci), b)));
            coords[v as usize] = c;
        }
        debug_assert!(coords.iter().all(|c| c.len() == m as usize));
        Ok(Tower {
            small,
            big,
            m,
            embedding,
            coords,
        })
    }
    pub fn small(&self) -> &Arc<FieldSpec> {
        &self.small
    }
    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }
    pub fn coords(&self, x: u32) -> &[u32] {
        &self.coords[x as usize]
    }
    pub fn from_coords(&self, c: &[u32]) -> u32 {
        c.iter().enumerate().fold(0, |acc, (i, &ci)| {
            self.big.add(acc, self.big.mul(self.embedding.map(ci), self.big.gen_pow(i as u64)))
        })
    }
}

/// The flag `V_{A_1} ⊆ ... ⊆ V_{A_ℓ}` of a vector, each space in reduced
/// echelon form over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagSignature {
    pub beta: WeakComposition,
    pub spaces: Vec<Vec<Vec<u32>>>,
}

pub fn flag_of_vector(tower: &Tower, v: &[u32], alpha: &Composition) -> FlagSignature {
    assert_eq!(v.len(), alpha.n() as usize);
    let mut ech = Echelon::new(Arc::clone(&tower.small), tower.m as usize);
    let mut spaces = Vec::with_capacity(alpha.len());
    let mut beta = Vec::with_capacity(alpha.len());
    let mut start = 0usize;
    for &a in alpha.parts() {
        let before = ech.rank();
        for &x in &v[start..start + a as usize] {
            ech.insert(tower.coords(x).to_vec());
        }
        start += a as usize;
        beta.push((ech.rank() - before) as u32);
        spaces.push(ech.rref());
    }
    FlagSignature {
        beta: WeakComposition::new(beta),
        spaces,
    }
}

fn check_enum(q: u64, n: u32, m: u32, bound: u64) -> Result<()> {
    let count = (q as u128).checked_pow(m * n).unwrap_or(u128::MAX);
    if count > bound as u128 {
        return Err(Error::TooManyVectors {
            count: count.min(u64::MAX as u128) as u64,
            bound,
        });
    }
    Ok(())
}

/// Every distinct flag signature, by enumerating `F_{q^m}^n`.
pub fn enumerate_signatures(tower: &Tower, alpha: &Composition) -> Vec<FlagSignature> {
    let n = alpha.n() as usize;
    let size = tower.big.q() as u64;
    let rest: u64 = size.pow(n as u32 - 1);
    let sets: Vec<HashSet<FlagSignature>> = (0..size)
        .into_par_iter()
        .map(|lead| {
            let mut seen = HashSet::new();
            let mut v = vec![0u32; n];
            v[0] = lead as u32;
            for k in 0..rest {
                let mut x = k;
                for c in v[1..].iter_mut() {
                    *c = (x % size) as u32;
                    x /= size;
                }
                seen.insert(flag_of_vector(tower, &v, alpha));
            }
            seen
        })
        .collect();
    let mut all: HashSet<FlagSignature> = HashSet::new();
    for s in sets {
        all.extend(s);
    }
    let mut out: Vec<FlagSignature> = all.into_iter().collect();
    out.sort_by(|a, b| (a.beta.parts(), &a.spaces).cmp(&(b.beta.parts(), &b.spaces)));
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitCount {
    #[serde(with = "crate::series::bigint_str")]
    pub enumerated: BigInt,
    #[serde(with = "crate::series::bigint_str")]
    pub formula: BigInt,
    #[serde(with = "crate::series::bigint_str")]
    pub c_at_one: BigInt,
}

impl OrbitCount {
    pub fn outcome(&self) -> Outcome {
        let mut o = Outcome::pass();
        o.require(
            self.enumerated == self.formula,
            format!("enumeration gives {} but the multinomial sum gives {}", self.enumerated, self.formula),
        );
        o.require(
            self.formula == self.c_at_one,
            format!("multinomial sum {} differs from C(1) = {}", self.formula, self.c_at_one),
        );
        o
    }
}

pub fn orbit_count(q: u64, n: u32, m: u32, alpha: &Composition, enum_bound: u64) -> Result<OrbitCount> {
    check_enum(q, n, m, enum_bound)?;
    let enumerated = if m == 0 {
        // F_{q^0}^n has the zero vector only.
        BigInt::from(1)
    } else {
        let tower = Tower::new(q, m)?;
        BigInt::from(enumerate_signatures(&tower, alpha).len())
    };
    Ok(OrbitCount {
        enumerated,
        formula: orbit_count_formula(q, m, alpha),
        c_at_one: parabolic_C(q, m, alpha).eval_one(),
    })
}

/// Whether every space of the flag is stable under multiplication by `c`.
pub fn flag_stable_under(tower: &Tower, sig: &FlagSignature, c: u32) -> bool {
    sig.spaces.iter().all(|basis| {
        let mut ech = Echelon::new(Arc::clone(&tower.small), tower.m as usize);
        for row in basis {
            ech.insert(row.clone());
        }
        basis.iter().all(|row| {
            let x = tower.big.mul(tower.from_coords(row), c);
            ech.contains(tower.coords(x))
        })
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CspRow {
    pub d: u64,
    pub fixed: u64,
    /// Coefficients of `C(ζ^d)` in `Z[t]/Φ_r`.
    pub evaluation: Vec<String>,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CspReport {
    pub r: u64,
    pub rows: Vec<CspRow>,
    pub outcome: Outcome,
}

pub fn csp_check(q: u64, n: u32, m: u32, alpha: &Composition, enum_bound: u64) -> Result<CspReport> {
    check_enum(q, n, m, enum_bound)?;
    let c = parabolic_C(q, m, alpha);
    let r = pw(q, m).saturating_sub(1).max(1);
    let mut rows = Vec::new();
    let mut outcome = Outcome::pass();
    let push = |d: u64, fixed: u64, rows: &mut Vec<CspRow>, outcome: &mut Outcome| {
        let ev = eval_at_root(&c, r, d);
        let matches = ev == CycInt::from_int(r, fixed);
        outcome.require(matches, format!("d = {d}: {fixed} fixed flags but C(ζ^d) = {:?}", ev.coeffs()));
        rows.push(CspRow {
            d,
            fixed,
            evaluation: ev.coeffs().iter().map(|x| x.to_string()).collect(),
            matches,
        });
    };
    if m == 0 {
        push(0, 1, &mut rows, &mut outcome);
    } else {
        let tower = Tower::new(q, m)?;
        let sigs = enumerate_signatures(&tower, alpha);
        for d in 0..r {
            let g = tower.big.gen_pow(d);
            let fixed = sigs.par_iter().filter(|s| flag_stable_under(&tower, s, g)).count() as u64;
            push(d, fixed, &mut rows, &mut outcome);
        }
    }
    Ok(CspReport { r, rows, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{group_closure, parabolic_generators};

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }
    const B: u64 = 1 << 24;

    #[test]
    fn coordinates_are_a_bijection() {
        for (q, m) in [(2u64, 3u32), (3, 2), (4, 2), (2, 1)] {
            let t = Tower::new(q, m).unwrap();
            let mut seen = HashSet::new();
            for x in 0..t.big().q() {
                assert_eq!(t.from_coords(t.coords(x)), x);
                seen.insert(t.coords(x).to_vec());
            }
            assert_eq!(seen.len() as u64, pw(q, m));
        }
    }

    #[test]
    fn signature_examples() {
        let t = Tower::new(3, 1).unwrap();
        let s = flag_of_vector(&t, &[0, 0], &comp(&[2]));
        assert_eq!(s.beta.parts(), &[0]);
        assert!(s.spaces[0].is_empty());
        assert_eq!(flag_of_vector(&t, &[1, 2], &comp(&[2])).beta.parts(), &[1]);
        let t = Tower::new(2, 2).unwrap();
        let g = t.big().generator();
        assert_eq!(flag_of_vector(&t, &[g, 1], &comp(&[1, 1])).beta.parts(), &[1, 1]);
    }

    #[test]
    fn count_examples() {
        let c = orbit_count(3, 2, 1, &comp(&[2]), B).unwrap();
        assert_eq!(c.enumerated, BigInt::from(2));
        let c = orbit_count(2, 2, 2, &comp(&[2]), B).unwrap();
        assert_eq!(c.enumerated, BigInt::from(5));
        let c = orbit_count(3, 2, 1, &comp(&[1, 1]), B).unwrap();
        assert_eq!(c.enumerated, BigInt::from(3));
        assert!(c.outcome().passed);
        assert!(matches!(orbit_count(4, 3, 5, &comp(&[3]), B), Err(Error::TooManyVectors { .. })));
    }

    #[test]
    fn counts_agree_small_grid() {
        for q in [2u64, 3, 4] {
            for n in 1..=3 {
                for m in 0..=2 {
                    if (q as u128).pow(m * n) > 1 << 16 {
                        continue;
                    }
                    for a in Composition::all(n) {
                        let c = orbit_count(q, n, m, &a, B).unwrap();
                        assert!(c.outcome().passed, "q={q} n={n} m={m} {a}: {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn csp_examples() {
        let r = csp_check(3, 2, 1, &comp(&[2]), B).unwrap();
        assert_eq!(r.rows.iter().map(|x| x.fixed).collect::<Vec<_>>(), vec![2, 2]);
        assert!(r.outcome.passed);
        let r = csp_check(2, 1, 2, &comp(&[1]), B).unwrap();
        assert_eq!(r.r, 3);
        // Zero plus three F_2-lines; order-3 scaling fixes only zero.
        assert_eq!(r.rows.iter().map(|x| x.fixed).collect::<Vec<_>>(), vec![4, 1, 1]);
        assert!(r.outcome.passed);
        for (q, n, m, a) in [(2u64, 2u32, 2u32, comp(&[1, 1])), (3, 2, 2, comp(&[2])), (2, 3, 2, comp(&[2, 1]))] {
            let r = csp_check(q, n, m, &a, B).unwrap();
            assert!(r.outcome.passed, "{q} {n} {m} {a}");
            assert_eq!(BigInt::from(r.rows[0].fixed), orbit_count(q, n, m, &a, B).unwrap().enumerated);
        }
    }

    /// Orbits by breadth-first search under the closure, compared with signatures.
    #[test]
    fn signatures_are_complete_invariants() {
        for (q, m, a) in [(2u64, 2u32, comp(&[2])), (2, 2, comp(&[1, 1])), (3, 1, comp(&[1, 1])), (2, 3, comp(&[1, 1]))] {
            let t = Tower::new(q, m).unwrap();
            let n = a.n() as usize;
            let gens = parabolic_generators(t.small(), n, &a, false).unwrap();
            let group = group_closure(&gens, 10_000).unwrap();
            let size = t.big().q() as usize;
            let total = size.pow(n as u32);
            let decode = |k: usize| -> Vec<u32> { (0..n).map(|i| ((k / size.pow(i as u32)) % size) as u32).collect() };
            let encode = |v: &[u32]| -> usize { v.iter().rev().fold(0, |acc, &x| acc * size + x as usize) };
            let mut orbit_id = vec![usize::MAX; total];
            let mut orbits = 0;
            for k in 0..total {
                if orbit_id[k] != usize::MAX {
                    continue;
                }
                let v = decode(k);
                let sig = flag_of_vector(&t, &v, &a);
                for g in &group {
                    let w = g.act_on_vector(t.big(), t.embedding().table(), &v);
                    assert_eq!(flag_of_vector(&t, &w, &a), sig);
                    orbit_id[encode(&w)] = orbits;
                }
                orbits += 1;
            }
            assert_eq!(orbits, enumerate_signatures(&t, &a).len(), "q={q} m={m} {a}");
        }
    }
}
