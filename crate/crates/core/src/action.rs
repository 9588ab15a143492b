//! Matrices over `F_q`, generators of parabolic subgroups, and the action by
//! linear substitution on graded pieces of `S = F_q[x_1..x_n]` and its quotients.
//!
//! A matrix `g` sends `x_i` to `Σ_j g[j][i] x_j`, the form read off column `i`.
//! With this convention `ρ(g)ρ(h) = ρ(gh)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::mpoly::{ExponentRule, MPoly};
use crate::qtcomb::Composition;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = self.entries.chunks(self.n.max(1)).collect();
        write!(f, "{rows:?}")
    }
}

impl GfMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        GfMatrix { n, entries }
    }
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        GfMatrix {
            n,
            entries: rows.concat(),
        }
    }
    /// `I + c E_ij`.
    pub fn transvection(n: usize, i: usize, j: usize, c: u32) -> Self {
        let mut m = Self::identity(n);
        m.entries[i * n + j] = c;
        m
    }
    pub fn diagonal(diag: &[u32]) -> Self {
        let n = diag.len();
        let mut m = Self::identity(n);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
    /// Column `i`, the coefficients of the image of `x_i`.
    pub fn column(&self, i: usize) -> Vec<u32> {
        (0..self.n).map(|j| self.get(j, i)).collect()
    }
    pub fn mul(&self, f: &FieldSpec, o: &GfMatrix) -> GfMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = f.add(*e, f.mul(a, o.get(k, j)));
                }
            }
        }
        GfMatrix { n, entries }
    }
    /// Gauss-Jordan inverse, `None` when singular.
    pub fn inverse(&self, f: &FieldSpec) -> Option<GfMatrix> {
        let n = self.n;
        let mut a: Vec<Vec<u32>> = self.entries.chunks(n.max(1)).map(|r| r.to_vec()).collect();
        let mut inv: Vec<Vec<u32>> = GfMatrix::identity(n)
            .entries
            .chunks(n.max(1))
            .map(|r| r.to_vec())
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let s = f.inv(a[col][col]).unwrap();
            for j in 0..n {
                a[col][j] = f.mul(a[col][j], s);
                inv[col][j] = f.mul(inv[col][j], s);
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let c = f.neg(a[r][col]);
                    for j in 0..n {
                        a[r][j] = f.add(a[r][j], f.mul(c, a[col][j]));
                        inv[r][j] = f.add(inv[r][j], f.mul(c, inv[col][j]));
                    }
                }
            }
        }
        Some(GfMatrix::from_rows(&inv))
    }
    pub fn is_invertible(&self, f: &FieldSpec) -> bool {
        self.inverse(f).is_some()
    }
    /// Block upper triangular with respect to `α`.
    pub fn in_parabolic(&self, alpha: &Composition) -> bool {
        let blocks = alpha.blocks();
        (0..self.n).all(|i| (0..self.n).all(|j| blocks[i] <= blocks[j] || self.get(i, j) == 0))
    }
    /// `(g·v)_i = Σ_j g[j][i] v_j` on vectors over an extension field, given
    /// the embedding table of `F_q`.
    pub fn act_on_vector(&self, big: &FieldSpec, embed: &[u32], v: &[u32]) -> Vec<u32> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(0, |acc, j| big.add(acc, big.mul(embed[self.get(j, i) as usize], v[j])))
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    field: Arc<FieldSpec>,
    alpha: Composition,
    gens: Vec<GfMatrix>,
    inverses: Vec<GfMatrix>,
    include_inverses: bool,
}

impl GeneratorSet {
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.alpha.n() as usize
    }
    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }
    pub fn gens(&self) -> &[GfMatrix] {
        &self.gens
    }
    pub fn includes_inverses(&self) -> bool {
        self.include_inverses
    }
    /// Generators followed by their inverses when the flag is set.
    pub fn all(&self) -> Vec<GfMatrix> {
        let mut out = self.gens.clone();
        if self.include_inverses {
            out.extend(self.inverses.iter().cloned());
        }
        out
    }
    pub fn with_inverses(mut self, flag: bool) -> Self {
        self.include_inverses = flag;
        self
    }
    /// An arbitrary generating list, for cross-checks against other choices.
    pub fn custom(field: &Arc<FieldSpec>, alpha: Composition, gens: Vec<GfMatrix>) -> Self {
        let inverses = gens
            .iter()
            .map(|g| g.inverse(field).expect("generators are invertible"))
            .collect();
        GeneratorSet {
            field: Arc::clone(field),
            alpha,
            gens,
            inverses,
            include_inverses: true,
        }
    }
}

/// Transvections `I + E_ij` for `block(i) <= block(j)`, `i != j`, and one
/// torus element `diag(.., γ, ..)` at the first coordinate of each block.
/// The torus elements are omitted over `F_2`, where `γ = 1`.
pub fn parabolic_generators(
    field: &Arc<FieldSpec>,
    n: usize,
    alpha: &Composition,
    include_inverses: bool,
) -> Result<GeneratorSet> {
    if alpha.n() as usize != n {
        return Err(Error::BadComposition(format!("{alpha} is not a composition of {n}")));
    }
    let blocks = alpha.blocks();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && blocks[i] <= blocks[j] {
                gens.push(GfMatrix::transvection(n, i, j, 1));
            }
        }
    }
    let gamma = field.generator();
    if gamma != 1 {
        for a in &alpha.partials()[..alpha.len()] {
            let mut d = vec![1; n];
            d[*a as usize] = gamma;
            gens.push(GfMatrix::diagonal(&d));
        }
    }
    Ok(GeneratorSet::custom(field, alpha.clone(), gens).with_inverses(include_inverses))
}

/// `|P_α| = q^{Σ_{i<j} α_i α_j} ∏ |GL_{α_i}(F_q)|`.
pub fn parabolic_order(q: u64, alpha: &Composition) -> u128 {
    let p = alpha.parts();
    let mut order: u128 = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            order *= (q as u128).pow(p[i] * p[j]);
        }
        let a = p[i];
        for k in 0..a {
            order *= (q as u128).pow(a) - (q as u128).pow(k);
        }
    }
    order
}

pub fn group_closure(gens: &GeneratorSet, bound: usize) -> Result<Vec<GfMatrix>> {
    let f = &*gens.field;
    let id = GfMatrix::identity(gens.n());
    let mut seen: HashSet<GfMatrix> = HashSet::new();
    let mut order = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens.gens {
            let h = g.mul(f, s);
            if seen.insert(h.clone()) {
                if seen.len() > bound {
                    return Err(Error::TooLarge { bound });
                }
                order.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(order)
}

/// Monomial basis of a homogeneous piece of `S`, `S/(x_i^b)` or `S/(x_i^b - x_i)`.
///
/// Monomials are listed in decreasing lexicographic order of exponent vectors
/// (so `x_1^d` first).
#[derive(Clone, Debug)]
pub struct GradedSlice {
    n: usize,
    d: u32,
    bound: Option<u32>,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl GradedSlice {
    /// `S_d`.
    pub fn polynomial(n: usize, d: u32) -> Self {
        Self::build(n, d, None)
    }
    /// Degree `d` piece of `S / (x_1^b, ..., x_n^b)`.
    pub fn truncated(n: usize, b: u32, d: u32) -> Self {
        Self::build(n, d, Some(b))
    }
    fn build(n: usize, d: u32, bound: Option<u32>) -> Self {
        let cap = bound.map_or(d, |b| b.saturating_sub(1).min(d));
        let mut monomials = Vec::new();
        fn rec(i: usize, n: usize, rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == n - 1 {
                if rest <= cap {
                    cur.push(rest);
                    out.push(cur.clone());
                    cur.pop();
                }
                return;
            }
            for a in (0..=rest.min(cap)).rev() {
                cur.push(a);
                rec(i + 1, n, rest - a, cap, cur, out);
                cur.pop();
            }
        }
        if n == 0 {
            if d == 0 {
                monomials.push(Vec::new());
            }
        } else {
            rec(0, n, d, cap, &mut Vec::new(), &mut monomials);
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        GradedSlice {
            n,
            d,
            bound,
            monomials,
            index,
        }
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn degree(&self) -> u32 {
        self.d
    }
    pub fn bound(&self) -> Option<u32> {
        self.bound
    }
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }
    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
    pub fn rule(&self) -> ExponentRule {
        self.bound.map_or(ExponentRule::Free, ExponentRule::Truncate)
    }
    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn coordinates(&self, f: &MPoly) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        for (e, c) in f.terms() {
            if let Some(i) = self.index_of(e) {
                v[i] = c;
            } else {
                assert!(!self.rule().apply(&mut e.clone()) || e.iter().sum::<u32>() != self.d);
            }
        }
        v
    }
}

/// Images `ℓ_i^a` of powers of the variables under one matrix, cached by exponent.
pub struct Substitution {
    field: Arc<FieldSpec>,
    forms: Vec<MPoly>,
    rule: ExponentRule,
    cache: Vec<HashMap<u32, MPoly>>,
}

impl Substitution {
    pub fn new(field: &Arc<FieldSpec>, g: &GfMatrix, rule: ExponentRule) -> Self {
        let forms = (0..g.n()).map(|i| MPoly::linear_form(field, &g.column(i))).collect();
        Substitution {
            field: Arc::clone(field),
            forms,
            rule,
            cache: vec![HashMap::new(); g.n()],
        }
    }
    fn power(&mut self, i: usize, a: u32) -> MPoly {
        if let Some(p) = self.cache[i].get(&a) {
            return p.clone();
        }
        let p = self.forms[i].pow_with(a as u64, self.rule);
        self.cache[i].insert(a, p.clone());
        p
    }
    /// `g(x^a)`, reduced by the rule.
    pub fn image(&mut self, a: &[u32]) -> MPoly {
        let n = a.len();
        let mut acc = MPoly::one(&self.field, n);
        for (i, &ai) in a.iter().enumerate() {
            if ai > 0 {
                let p = self.power(i, ai);
                acc = acc.mul_with(&p, self.rule);
                if acc.is_zero() {
                    break;
                }
            }
        }
        acc
    }
}

/// `g(x^a)` for the monomial at `column` of the slice, as a sparse vector.
pub fn apply_substitution(
    field: &Arc<FieldSpec>,
    g: &GfMatrix,
    slice: &GradedSlice,
    column: usize,
) -> Vec<(usize, u32)> {
    let mut sub = Substitution::new(field, g, slice.rule());
    image_in_slice(&mut sub, slice, column)
}

pub fn image_in_slice(sub: &mut Substitution, slice: &GradedSlice, column: usize) -> Vec<(usize, u32)> {
    let img = sub.image(&slice.monomials()[column]);
    let mut out: Vec<(usize, u32)> = img
        .terms()
        .map(|(e, c)| (slice.index_of(e).expect("image stays in the slice"), c))
        .collect();
    out.sort_unstable();
    out
}

/// Columns `ρ(g)(x^a)` for every basis monomial of the slice.
pub fn substitution_matrix(field: &Arc<FieldSpec>, g: &GfMatrix, slice: &GradedSlice) -> Vec<Vec<(usize, u32)>> {
    let mut sub = Substitution::new(field, g, slice.rule());
    (0..slice.dim()).map(|c| image_in_slice(&mut sub, slice, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use proptest::prelude::*;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generator_examples() {
        let f3 = make_field(3, 1).unwrap();
        let g = parabolic_generators(&f3, 1, &comp(&[1]), false).unwrap();
        assert_eq!(g.gens(), &[GfMatrix::diagonal(&[2])]);
        let f2 = make_field(2, 1).unwrap();
        let g = parabolic_generators(&f2, 2, &comp(&[2]), false).unwrap();
        assert_eq!(g.gens(), &[GfMatrix::transvection(2, 0, 1, 1), GfMatrix::transvection(2, 1, 0, 1)]);
        assert_eq!(group_closure(&g, 100).unwrap().len(), 6);
        let g = parabolic_generators(&f3, 2, &comp(&[1, 1]), false).unwrap();
        assert!(g.gens().contains(&GfMatrix::transvection(2, 0, 1, 1)));
        assert!(!g.gens().contains(&GfMatrix::transvection(2, 1, 0, 1)));
        assert_eq!(group_closure(&g, 100).unwrap().len(), 12);
        assert!(parabolic_generators(&f3, 3, &comp(&[1, 1]), false).is_err());
    }

    #[test]
    fn closure_orders_match_formula() {
        for (p, r) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = make_field(p, r).unwrap();
            let q = f.q() as u64;
            for n in 1..=3u32 {
                for a in Composition::all(n) {
                    let expected = parabolic_order(q, &a);
                    if expected > 20_000 {
                        continue;
                    }
                    let g = parabolic_generators(&f, n as usize, &a, false).unwrap();
                    for m in g.gens() {
                        assert!(m.is_invertible(&f) && m.in_parabolic(&a));
                    }
                    assert_eq!(group_closure(&g, 1 << 20).unwrap().len() as u128, expected, "q={q} {a}");
                }
            }
        }
        let f3 = make_field(3, 1).unwrap();
        let g = parabolic_generators(&f3, 2, &comp(&[2]), false).unwrap();
        assert_eq!(group_closure(&g, 1000).unwrap().len(), 48);
        assert!(matches!(group_closure(&g, 10), Err(Error::TooLarge { bound: 10 })));
    }

    #[test]
    fn slices() {
        let s = GradedSlice::polynomial(3, 2);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.monomials()[0], vec![2, 0, 0]);
        let q = GradedSlice::truncated(2, 4, 6);
        assert_eq!(q.monomials(), &[vec![3, 3]]);
        assert_eq!(GradedSlice::truncated(2, 4, 7).dim(), 0);
    }

    #[test]
    fn substitution_examples() {
        let f3 = make_field(3, 1).unwrap();
        let s = GradedSlice::truncated(1, 3, 2);
        assert_eq!(apply_substitution(&f3, &GfMatrix::diagonal(&[2]), &s, 0), vec![(0, 1)]);
        let s = GradedSlice::truncated(1, 3, 1);
        assert_eq!(apply_substitution(&f3, &GfMatrix::diagonal(&[2]), &s, 0), vec![(0, 2)]);
        let f2 = make_field(2, 1).unwrap();
        let top = GradedSlice::truncated(2, 4, 6);
        let u = GfMatrix::transvection(2, 0, 1, 1);
        assert_eq!(apply_substitution(&f2, &u, &top, 0), vec![(0, 1)]);
        // u sends x_2 to x_1 + x_2 (column 2 of I + E_12).
        let s1 = GradedSlice::polynomial(2, 1);
        assert_eq!(apply_substitution(&f2, &u, &s1, 1), vec![(0, 1), (1, 1)]);
        for i in 0..s1.dim() {
            assert_eq!(apply_substitution(&f2, &GfMatrix::identity(2), &s1, i), vec![(i, 1)]);
        }
    }

    #[test]
    fn socle_is_fixed() {
        for (p, r) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = make_field(p, r).unwrap();
            let q = f.q();
            for n in 1..=3usize {
                for m in 1..=2u32 {
                    let b = q.pow(m);
                    if (b as u64).pow(n as u32) > 1 << 12 {
                        continue;
                    }
                    let top = GradedSlice::truncated(n, b, n as u32 * (b - 1));
                    let gens = parabolic_generators(&f, n, &Composition::single(n as u32), true).unwrap();
                    for g in gens.all() {
                        assert_eq!(apply_substitution(&f, &g, &top, 0), vec![(0, 1)]);
                    }
                }
            }
        }
    }

    fn compose(f: &Arc<FieldSpec>, g: &GfMatrix, v: &[(usize, u32)], slice: &GradedSlice) -> Vec<u32> {
        let mut out = vec![0u32; slice.dim()];
        let m = substitution_matrix(f, g, slice);
        for &(i, c) in v {
            for &(j, d) in &m[i] {
                out[j] = f.add(out[j], f.mul(c, d));
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn action_is_homomorphism(
            seed_g in prop::collection::vec(0u32..4, 9),
            seed_h in prop::collection::vec(0u32..4, 9),
            d in 0u32..7,
            truncate in any::<bool>(),
        ) {
            let f = make_field(2, 2).unwrap();
            let g = GfMatrix::from_rows(&seed_g.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>());
            let h = GfMatrix::from_rows(&seed_h.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>());
            let slice = if truncate { GradedSlice::truncated(3, 4, d) } else { GradedSlice::polynomial(3, d) };
            let gh = g.mul(&f, &h);
            for col in 0..slice.dim() {
                let direct: Vec<u32> = {
                    let mut v = vec![0; slice.dim()];
                    for (i, c) in apply_substitution(&f, &gh, &slice, col) { v[i] = c; }
                    v
                };
                let hv = apply_substitution(&f, &h, &slice, col);
                prop_assert_eq!(direct, compose(&f, &g, &hv, &slice));
            }
        }

        #[test]
        fn inverse_is_inverse(seed in prop::collection::vec(0u32..5, 9)) {
            let f = make_field(5, 1).unwrap();
            let g = GfMatrix::from_rows(&seed.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>());
            if let Some(gi) = g.inverse(&f) {
                prop_assert_eq!(g.mul(&f, &gi), GfMatrix::identity(3));
            }
        }
    }
}
