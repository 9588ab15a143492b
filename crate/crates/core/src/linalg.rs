//! Dense row reduction over `F_q`, with a packed-bit path for `q = 2`.

use std::sync::Arc;

use crate::gf::FieldSpec;

/// Rows kept in echelon form, inserted one at a time.
///
/// Each stored row has a pivot normalised to 1 and vanishes at the pivots of
/// every earlier row, so reducing against rows in insertion order clears all
/// pivot columns.
#[derive(Clone)]
pub struct Echelon {
    field: Arc<FieldSpec>,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Arc<FieldSpec>, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, v: &mut [u32]) {
        let f = &*self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let nc = f.neg(c);
            for (x, &r) in v.iter_mut().zip(row).skip(p) {
                if r != 0 {
                    *x = f.add(*x, f.mul(nc, r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[p]).expect("nonzero pivot");
        if inv != 1 {
            for x in v.iter_mut().skip(p) {
                *x = self.field.mul(*x, inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn insert_sparse(&mut self, v: &[(usize, u32)]) -> bool {
        let mut d = vec![0u32; self.ncols];
        for &(i, c) in v {
            d[i] = self.field.add(d[i], c);
        }
        self.insert(d)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Reduced row echelon basis, sorted by pivot column.
    pub fn rref(&self) -> Vec<Vec<u32>> {
        let f = &*self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vec<u32>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let c = row[p];
                if c == 0 {
                    continue;
                }
                let nc = f.neg(c);
                for (x, &r) in row.iter_mut().zip(pivot_row).skip(p) {
                    if r != 0 {
                        *x = f.add(*x, f.mul(nc, r));
                    }
                }
            }
        }
        rows
    }

    /// Basis of `{x : row · x = 0 for every stored row}`.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let f = &*self.field;
        let rref = self.rref();
        let mut is_pivot = vec![None; self.ncols];
        for (i, row) in rref.iter().enumerate() {
            let p = row.iter().position(|&x| x != 0).unwrap();
            is_pivot[p] = Some(i);
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![0u32; self.ncols];
            v[free] = 1;
            for (c, pi) in is_pivot.iter().enumerate() {
                if let Some(i) = pi {
                    v[c] = f.neg(rref[*i][free]);
                }
            }
            out.push(v);
        }
        out
    }
}

/// `q = 2` echelon on packed 64-bit words.
#[derive(Clone)]
pub struct BitEchelon {
    ncols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl BitEchelon {
    pub fn new(ncols: usize) -> Self {
        BitEchelon {
            ncols,
            words: ncols.div_ceil(64),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn pack(&self, v: &[u32]) -> Vec<u64> {
        let mut w = vec![0u64; self.words];
        for (i, &x) in v.iter().enumerate() {
            if x & 1 == 1 {
                w[i / 64] |= 1 << (i % 64);
            }
        }
        w
    }
    fn reduce(&self, v: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (x, r) in v.iter_mut().zip(row).skip(p / 64) {
                    *x ^= r;
                }
            }
        }
    }
    pub fn insert_packed(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(wi) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = wi * 64 + v[wi].trailing_zeros() as usize;
        debug_assert!(p < self.ncols);
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let p = self.pack(v);
        self.insert_packed(p)
    }
    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = self.pack(v);
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

/// Rank of a span, choosing the packed path when `q = 2`.
#[derive(Clone)]
pub enum Span {
    Generic(Echelon),
    Binary(BitEchelon),
}

impl Span {
    pub fn new(field: &Arc<FieldSpec>, ncols: usize) -> Self {
        if field.q() == 2 {
            Span::Binary(BitEchelon::new(ncols))
        } else {
            Span::Generic(Echelon::new(Arc::clone(field), ncols))
        }
    }
    pub fn generic(field: &Arc<FieldSpec>, ncols: usize) -> Self {
        Span::Generic(Echelon::new(Arc::clone(field), ncols))
    }
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        match self {
            Span::Generic(e) => e.insert(v),
            Span::Binary(b) => b.insert(&v),
        }
    }
    pub fn contains(&self, v: &[u32]) -> bool {
        match self {
            Span::Generic(e) => e.contains(v),
            Span::Binary(b) => b.contains(v),
        }
    }
    pub fn rank(&self) -> usize {
        match self {
            Span::Generic(e) => e.rank(),
            Span::Binary(b) => b.rank(),
        }
    }
    pub fn ncols(&self) -> usize {
        match self {
            Span::Generic(e) => e.ncols(),
            Span::Binary(b) => b.ncols,
        }
    }
    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols()
    }
}

pub fn rank(field: &Arc<FieldSpec>, rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut s = Span::new(field, ncols);
    for r in rows {
        s.insert(r.clone());
        if s.is_full() {
            break;
        }
    }
    s.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use proptest::prelude::*;

    /// Rank via determinant-free brute force: the number of distinct vectors in the span is q^rank.
    fn brute_rank(field: &Arc<FieldSpec>, rows: &[Vec<u32>], ncols: usize) -> usize {
        let q = field.q() as usize;
        let mut span = std::collections::HashSet::new();
        span.insert(vec![0u32; ncols]);
        for r in rows {
            let mut next = std::collections::HashSet::new();
            for v in &span {
                for c in 0..q as u32 {
                    let w: Vec<u32> = v
                        .iter()
                        .zip(r)
                        .map(|(&a, &b)| field.add(a, field.mul(c, b)))
                        .collect();
                    next.insert(w);
                }
            }
            span = next;
        }
        let mut k = 0;
        let mut size = 1;
        while size < span.len() {
            size *= q;
            k += 1;
        }
        k
    }

    fn arb_rows(q: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0..q, 5), 0..5)
    }

    proptest! {
        #[test]
        fn rank_matches_span_size_f3(rows in arb_rows(3)) {
            let f = make_field(3, 1).unwrap();
            prop_assert_eq!(rank(&f, &rows, 5), brute_rank(&f, &rows, 5));
        }

        #[test]
        fn rank_matches_span_size_f4(rows in arb_rows(4)) {
            let f = make_field(2, 2).unwrap();
            prop_assert_eq!(rank(&f, &rows, 5), brute_rank(&f, &rows, 5));
        }

        #[test]
        fn binary_path_is_identical(rows in prop::collection::vec(prop::collection::vec(0u32..2, 70), 0..40), probe in prop::collection::vec(0u32..2, 70)) {
            let f = make_field(2, 1).unwrap();
            let mut g = Span::generic(&f, 70);
            let mut b = Span::new(&f, 70);
            for r in &rows {
                prop_assert_eq!(g.insert(r.clone()), b.insert(r.clone()));
            }
            prop_assert_eq!(g.rank(), b.rank());
            prop_assert_eq!(g.contains(&probe), b.contains(&probe));
        }

        #[test]
        fn nullspace_is_kernel(rows in arb_rows(5)) {
            let f = make_field(5, 1).unwrap();
            let mut e = Echelon::new(f.clone(), 5);
            for r in &rows { e.insert(r.clone()); }
            let ns = e.nullspace();
            prop_assert_eq!(ns.len() + e.rank(), 5);
            for v in &ns {
                for r in &rows {
                    let dot = r.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                    prop_assert_eq!(dot, 0);
                }
            }
        }

        #[test]
        fn rref_is_canonical(rows in arb_rows(3), perm_seed in 0u64..1000) {
            use rand::{seq::SliceRandom, SeedableRng};
            let f = make_field(3, 1).unwrap();
            let mut a = Echelon::new(f.clone(), 5);
            for r in &rows { a.insert(r.clone()); }
            let mut shuffled = rows.clone();
            shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(perm_seed));
            let mut b = Echelon::new(f.clone(), 5);
            for r in &shuffled { b.insert(r.clone()); }
            prop_assert_eq!(a.rref(), b.rref());
        }
    }
}
