//! Brute-force side of the identities: fixed and cofixed dimensions by exact
//! elimination, Dickson polynomials, the `m = 1` bases and the filtration of
//! `S / (x_i^{q^m} - x_i)`.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{parabolic_generators, substitution_matrix, GeneratorSet, GfMatrix, GradedSlice, Substitution};
use crate::check::{compare_polys, compare_series, Outcome};
use crate::error::{Error, Result};
use crate::gf::{field_of_order, FieldSpec};
use crate::linalg::{Echelon, Span};
use crate::mpoly::{ExponentRule, MPoly};
use crate::qtcomb::{conj2_rhs, orbit_count_formula, pw, Composition};
use crate::series::{reciprocal_transform, TPoly, TruncSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Maximum `(q^m)^n`, the total number of monomials in `Q`.
    pub basis_bound: u64,
    /// Maximum `q^{mn}`, the number of vectors enumerated for orbits.
    pub enum_bound: u64,
    /// Maximum `q^n`, the number of linear forms multiplied for Dickson polynomials.
    pub dickson_bound: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            basis_bound: 1 << 16,
            enum_bound: 1 << 24,
            dickson_bound: 256,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HilbKind {
    FixedQ,
    CofixedSTruncated,
    FixedRFiltration,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbResult {
    pub q: u64,
    pub n: u32,
    pub m: Option<u32>,
    pub alpha: Composition,
    pub kind: HilbKind,
    pub series: TPoly,
    pub per_degree: Vec<(u64, u64)>,
}

impl HilbResult {
    fn from_dims(q: u64, m: Option<u32>, alpha: &Composition, kind: HilbKind, dims: Vec<usize>) -> Self {
        let per_degree: Vec<(u64, u64)> = dims.iter().enumerate().map(|(d, &x)| (d as u64, x as u64)).collect();
        let series = TPoly::from_coeffs(&dims.iter().map(|&x| x as u64).collect::<Vec<_>>());
        HilbResult {
            q,
            n: alpha.n(),
            m,
            alpha: alpha.clone(),
            kind,
            series,
            per_degree,
        }
    }
    pub fn dims(&self) -> Vec<u64> {
        self.per_degree.iter().map(|&(_, x)| x).collect()
    }
}

fn dense_difference_rows(cols: &[Vec<(usize, u32)>], f: &FieldSpec) -> Vec<Vec<u32>> {
    let dim = cols.len();
    let mut rows = vec![vec![0u32; dim]; dim];
    for (c, col) in cols.iter().enumerate() {
        for &(r, x) in col {
            rows[r][c] = x;
        }
        rows[c][c] = f.sub(rows[c][c], 1);
    }
    rows
}

fn difference_columns(cols: &[Vec<(usize, u32)>], f: &FieldSpec) -> Vec<Vec<u32>> {
    let dim = cols.len();
    cols.iter()
        .enumerate()
        .map(|(c, col)| {
            let mut v = vec![0u32; dim];
            for &(r, x) in col {
                v[r] = x;
            }
            v[c] = f.sub(v[c], 1);
            v
        })
        .collect()
}

/// Dimension of the common kernel of `ρ(g) - I` over the generators.
pub fn fixed_dim(gens: &GeneratorSet, slice: &GradedSlice) -> usize {
    fixed_dim_for(gens.field(), &gens.all(), slice)
}

fn fixed_dim_for(field: &Arc<FieldSpec>, mats: &[GfMatrix], slice: &GradedSlice) -> usize {
    let dim = slice.dim();
    if dim == 0 {
        return 0;
    }
    let mut span = Span::new(field, dim);
    'outer: for g in mats {
        let cols = substitution_matrix(field, g, slice);
        for row in dense_difference_rows(&cols, field) {
            span.insert(row);
            if span.is_full() {
                break 'outer;
            }
        }
    }
    dim - span.rank()
}

/// The span of `{g(x^a) - x^a}` in a slice of `S`.
pub fn relation_span(gens: &GeneratorSet, slice: &GradedSlice) -> Result<Span> {
    if !gens.includes_inverses() {
        return Err(Error::InversesMissing);
    }
    let field = gens.field();
    let mut span = Span::new(field, slice.dim());
    for g in gens.all() {
        if span.is_full() {
            break;
        }
        let cols = substitution_matrix(field, &g, slice);
        for v in difference_columns(&cols, field) {
            span.insert(v);
            if span.is_full() {
                break;
            }
        }
    }
    Ok(span)
}

pub fn cofixed_dim(gens: &GeneratorSet, slice: &GradedSlice) -> Result<usize> {
    Ok(slice.dim() - relation_span(gens, slice)?.rank())
}

fn check_q_bound(q: u64, n: u32, m: u32, bounds: &Bounds) -> Result<()> {
    let total = (q as u128).checked_pow(m * n).unwrap_or(u128::MAX);
    if total > bounds.basis_bound as u128 {
        return Err(Error::ProblemTooLarge(format!(
            "(q^m)^n = {total} exceeds basis bound {}",
            bounds.basis_bound
        )));
    }
    Ok(())
}

#[allow(non_snake_case)]
pub fn hilb_fixed_Q(q: u64, n: u32, m: u32, alpha: &Composition, bounds: &Bounds) -> Result<HilbResult> {
    check_q_bound(q, n, m, bounds)?;
    let field = field_of_order(q)?;
    let gens = parabolic_generators(&field, n as usize, alpha, false)?;
    Ok(hilb_fixed_Q_with(&gens, q, m))
}

/// Fixed-space Hilbert series of `Q` for an explicit generating list.
#[allow(non_snake_case)]
pub fn hilb_fixed_Q_with(gens: &GeneratorSet, q: u64, m: u32) -> HilbResult {
    let n = gens.n() as u32;
    let b = pw(q, m) as u32;
    let d0 = n * (b - 1);
    let mats = gens.all();
    let dims: Vec<usize> = (0..=d0)
        .into_par_iter()
        .map(|d| fixed_dim_for(gens.field(), &mats, &GradedSlice::truncated(n as usize, b, d)))
        .collect();
    HilbResult::from_dims(q, Some(m), gens.alpha(), HilbKind::FixedQ, dims)
}

#[allow(non_snake_case)]
pub fn hilb_cofixed_S(q: u64, n: u32, alpha: &Composition, max_degree: u32, bounds: &Bounds) -> Result<HilbResult> {
    let size = GradedSlice::polynomial(n as usize, max_degree).dim() as u64;
    if size > bounds.basis_bound {
        return Err(Error::ProblemTooLarge(format!(
            "dim S_{max_degree} = {size} exceeds basis bound {}",
            bounds.basis_bound
        )));
    }
    let field = field_of_order(q)?;
    let gens = parabolic_generators(&field, n as usize, alpha, true)?;
    let dims: Result<Vec<usize>> = (0..=max_degree)
        .into_par_iter()
        .map(|d| cofixed_dim(&gens, &GradedSlice::polynomial(n as usize, d)))
        .collect();
    Ok(HilbResult::from_dims(q, None, alpha, HilbKind::CofixedSTruncated, dims?))
}

/// Cofixed dimensions of `S` against the predicted series, for `d <= max_degree`.
pub fn check_cofixed(q: u64, alpha: &Composition, max_degree: u32, bounds: &Bounds) -> Result<Outcome> {
    let got = hilb_cofixed_S(q, alpha.n(), alpha, max_degree, bounds)?;
    let order = max_degree as usize + 1;
    let expected = conj2_rhs(q, alpha).expand(order);
    Ok(Outcome::from_mismatch(compare_series(
        &TruncSeries::from_poly(&got.series, order),
        &expected,
    )))
}

/// Cofixed dims of `S` in degrees `< q^m` equal the reciprocal of the fixed series of `Q`.
pub fn check_duality(q: u64, m: u32, alpha: &Composition, bounds: &Bounds) -> Result<Outcome> {
    let n = alpha.n();
    let fixed = hilb_fixed_Q(q, n, m, alpha, bounds)?;
    let d0 = n as u64 * (pw(q, m) - 1);
    let rec = reciprocal_transform(&fixed.series, d0)?;
    let top = pw(q, m) - 1;
    let cof = hilb_cofixed_S(q, n, alpha, top as u32, bounds)?;
    let order = top as usize + 1;
    Ok(Outcome::from_mismatch(compare_series(
        &TruncSeries::from_poly(&cof.series, order),
        &TruncSeries::from_poly(&rec, order),
    )))
}

#[derive(Debug, Clone)]
pub struct DicksonSet {
    pub q: u64,
    pub n: u32,
    /// `D_{n,0}, ..., D_{n,n-1}` in the variables `x_1..x_n`.
    pub polys: Vec<MPoly>,
    pub outcome: Outcome,
}

/// Reads `D_{n,i}` off `∏_ℓ (t + ℓ(x)) = Σ_i D_{n,i} t^{q^i}` over all linear forms `ℓ`.
pub fn dickson_polys(q: u64, n: u32, bounds: &Bounds) -> Result<DicksonSet> {
    let forms = pw(q, n);
    if forms > bounds.dickson_bound {
        return Err(Error::ProblemTooLarge(format!(
            "q^n = {forms} linear forms exceed bound {}",
            bounds.dickson_bound
        )));
    }
    let field = field_of_order(q)?;
    let nv = n as usize + 1;
    let mut prod = MPoly::one(&field, nv);
    for k in 0..forms {
        let mut coeffs = vec![0u32; nv];
        let mut x = k;
        for c in coeffs.iter_mut().take(n as usize) {
            *c = (x % q) as u32;
            x /= q;
        }
        coeffs[n as usize] = 1;
        prod = prod.mul(&MPoly::linear_form(&field, &coeffs));
    }
    let mut by_t: Vec<MPoly> = vec![MPoly::zero(&field, n as usize); forms as usize + 1];
    for (e, c) in prod.terms() {
        by_t[e[n as usize] as usize].add_term(e[..n as usize].to_vec(), c);
    }
    let mut outcome = Outcome::pass();
    let powers: Vec<u64> = (0..=n).map(|i| pw(q, i)).collect();
    for (k, poly) in by_t.iter().enumerate() {
        if !powers.contains(&(k as u64)) {
            outcome.require(poly.is_zero(), format!("coefficient of t^{k} is nonzero"));
        }
    }
    outcome.require(by_t[forms as usize] == MPoly::one(&field, n as usize), "leading coefficient is not 1");
    let polys: Vec<MPoly> = (0..n).map(|i| by_t[pw(q, i) as usize].clone()).collect();
    for (i, p) in polys.iter().enumerate() {
        let deg = (forms - pw(q, i as u32)) as u32;
        outcome.require(
            !p.is_zero() && p.is_homogeneous_of(deg),
            format!("D_{{{n},{i}}} is not homogeneous of degree {deg}"),
        );
    }
    Ok(DicksonSet { q, n, polys, outcome })
}

/// Whether each generator fixes `f` in `S`.
pub fn is_invariant(gens: &GeneratorSet, f: &MPoly) -> bool {
    gens.all().iter().all(|g| {
        let mut sub = Substitution::new(gens.field(), g, ExponentRule::Free);
        let mut img = MPoly::zero(gens.field(), f.nvars());
        for (e, c) in f.terms() {
            img = img.add(&sub.image(e).scale(c));
        }
        img == *f
    })
}

pub fn check_dickson(q: u64, n: u32, bounds: &Bounds) -> Result<Outcome> {
    let set = dickson_polys(q, n, bounds)?;
    let field = field_of_order(q)?;
    let gens = parabolic_generators(&field, n as usize, &Composition::single(n), true)?;
    let mut out = set.outcome.clone();
    for (i, p) in set.polys.iter().enumerate() {
        out.require(is_invariant(&gens, p), format!("D_{{{n},{i}}} is not invariant"));
    }
    Ok(out)
}

/// At `m = 1` the fixed space of `Q` is spanned by `(x_1 ... x_{A_k})^{q-1}`.
pub fn verify_m1_basis(q: u64, alpha: &Composition, bounds: &Bounds) -> Result<Outcome> {
    let n = alpha.n();
    let fixed = hilb_fixed_Q(q, n, 1, alpha, bounds)?;
    let expected = alpha
        .partials()
        .iter()
        .fold(TPoly::zero(), |acc, &a| &acc + &TPoly::monomial(a as u64 * (q - 1), 1));
    let mut out = Outcome::from_mismatch(compare_polys(&fixed.series, &expected));
    let field = field_of_order(q)?;
    let gens = parabolic_generators(&field, n as usize, alpha, true)?;
    let b = q as u32;
    for &a in &alpha.partials() {
        let mut e = vec![0u32; n as usize];
        e[..a as usize].fill(b - 1);
        let slice = GradedSlice::truncated(n as usize, b, a * (b - 1));
        let col = slice.index_of(&e).expect("monomial lies in its slice");
        for g in gens.all() {
            let img = crate::action::apply_substitution(&field, &g, &slice, col);
            out.require(img == vec![(col, 1)], format!("(x_1..x_{a})^(q-1) is not fixed"));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KuhnReport {
    pub q: u64,
    pub n: u32,
    pub m: u32,
    /// `dim(F_i ∩ R^G) - dim(F_{i-1} ∩ R^G)`.
    pub jumps: Vec<u64>,
    /// Per-degree fixed dimensions of `Q`.
    pub fixed_q: Vec<u64>,
    pub dim_fixed_r: u64,
    #[serde(with = "crate::series::bigint_str")]
    pub orbit_count: BigInt,
    pub outcome: Outcome,
}

/// Compares the graded pieces of the degree filtration on `R^G`,
/// `R = S/(x_i^{q^m} - x_i)`, with the fixed series of `Q`.
pub fn kuhn_filtration_check(q: u64, n: u32, m: u32, bounds: &Bounds) -> Result<KuhnReport> {
    check_q_bound(q, n, m, bounds)?;
    let field = field_of_order(q)?;
    let alpha = Composition::single(n);
    let gens = parabolic_generators(&field, n as usize, &alpha, false)?;
    let b = pw(q, m) as u32;
    let d0 = n * (b - 1);

    // Basis of R: all exponent vectors below b, grouped by degree.
    let slices: Vec<GradedSlice> = (0..=d0).map(|d| GradedSlice::truncated(n as usize, b, d)).collect();
    let mut offsets = vec![0usize];
    for s in &slices {
        offsets.push(offsets.last().unwrap() + s.dim());
    }
    let dim = *offsets.last().unwrap();
    let index = |e: &[u32]| {
        let d = e.iter().sum::<u32>() as usize;
        offsets[d] + slices[d].index_of(e).expect("reduced monomial")
    };

    let rule = if m == 0 { ExponentRule::Truncate(1) } else { ExponentRule::Wrap(b) };
    let mut rows = Echelon::new(Arc::clone(&field), dim);
    for g in gens.all() {
        let mut sub = Substitution::new(&field, &g, rule);
        let mut mat = vec![vec![0u32; dim]; dim];
        for (d, s) in slices.iter().enumerate() {
            for (c, e) in s.monomials().iter().enumerate() {
                let col = offsets[d] + c;
                let img = if m == 0 { MPoly::one(&field, n as usize) } else { sub.image(e) };
                for (e2, x) in img.terms() {
                    mat[index(e2)][col] = x;
                }
                mat[col][col] = field.sub(mat[col][col], 1);
            }
        }
        for r in mat {
            rows.insert(r);
        }
    }
    let fixed_basis = rows.nullspace();
    let total = fixed_basis.len();

    let mut cumulative = Vec::with_capacity(d0 as usize + 1);
    for i in 0..=d0 as usize {
        let start = offsets[i + 1];
        let mut proj = Echelon::new(Arc::clone(&field), dim - start);
        for v in &fixed_basis {
            proj.insert(v[start..].to_vec());
        }
        cumulative.push(total - proj.rank());
    }
    let jumps: Vec<u64> = (0..cumulative.len())
        .map(|i| (cumulative[i] - if i == 0 { 0 } else { cumulative[i - 1] }) as u64)
        .collect();
    let fixed_q = hilb_fixed_Q(q, n, m, &alpha, bounds)?.dims();
    let orbit_count = orbit_count_formula(q, m, &alpha);
    let mut outcome = Outcome::from_mismatch(compare_polys(
        &TPoly::from_coeffs(&jumps),
        &TPoly::from_coeffs(&fixed_q),
    ));
    outcome.require(
        BigInt::from(total) == orbit_count,
        format!("dim R^G = {total} differs from orbit count {orbit_count}"),
    );
    Ok(KuhnReport {
        q,
        n,
        m,
        jumps,
        fixed_q,
        dim_fixed_r: total as u64,
        orbit_count,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::group_closure;
    use crate::qtcomb::{catalan_C, parabolic_C};

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }
    fn mono_sum(exps: &[u64]) -> TPoly {
        exps.iter().fold(TPoly::zero(), |a, &e| &a + &TPoly::monomial(e, 1))
    }
    fn b() -> Bounds {
        Bounds::default()
    }

    /// Fixed vectors by brute force: enumerate every vector of the slice.
    fn brute_fixed_dim(field: &Arc<FieldSpec>, mats: &[GfMatrix], slice: &GradedSlice) -> usize {
        let dim = slice.dim();
        let q = field.q() as usize;
        let cols: Vec<_> = mats.iter().map(|g| substitution_matrix(field, g, slice)).collect();
        let mut count = 0usize;
        let total = q.pow(dim as u32);
        for k in 0..total {
            let mut v = vec![0u32; dim];
            let mut x = k;
            for c in v.iter_mut() {
                *c = (x % q) as u32;
                x /= q;
            }
            let fixed = cols.iter().all(|m| {
                let mut w = vec![0u32; dim];
                for (c, col) in m.iter().enumerate() {
                    for &(r, a) in col {
                        w[r] = field.add(w[r], field.mul(a, v[c]));
                    }
                }
                w == v
            });
            count += fixed as usize;
        }
        let mut d = 0;
        let mut s = 1;
        while s < count {
            s *= q;
            d += 1;
        }
        d
    }

    #[test]
    fn worked_example() {
        let r = hilb_fixed_Q(3, 2, 2, &comp(&[2]), &b()).unwrap();
        assert_eq!(r.series, mono_sum(&[0, 6, 8, 10, 12, 16]));
        assert_eq!(reciprocal_transform(&r.series, 16).unwrap(), mono_sum(&[0, 4, 6, 8, 10, 16]));
        let c = hilb_cofixed_S(3, 2, &comp(&[2]), 8, &b()).unwrap();
        assert_eq!(c.series, mono_sum(&[0, 4, 6, 8]));
    }

    #[test]
    fn small_examples() {
        assert_eq!(hilb_fixed_Q(3, 1, 1, &comp(&[1]), &b()).unwrap().series, mono_sum(&[0, 2]));
        assert_eq!(hilb_fixed_Q(2, 2, 1, &comp(&[1, 1]), &b()).unwrap().series, mono_sum(&[0, 1, 2]));
        for q in [2u64, 3, 4] {
            assert_eq!(hilb_fixed_Q(q, 2, 0, &comp(&[1, 1]), &b()).unwrap().series, TPoly::one());
            let c = hilb_cofixed_S(q, 1, &comp(&[1]), 12, &b()).unwrap();
            for (d, x) in c.per_degree {
                assert_eq!(x, u64::from(d % (q - 1) == 0));
            }
        }
        assert!(matches!(
            hilb_fixed_Q(4, 3, 3, &comp(&[3]), &b()),
            Err(Error::ProblemTooLarge(_))
        ));
    }

    #[test]
    fn cofixed_needs_inverses() {
        let f = field_of_order(3).unwrap();
        let g = parabolic_generators(&f, 2, &comp(&[2]), false).unwrap();
        assert_eq!(cofixed_dim(&g, &GradedSlice::polynomial(2, 4)), Err(Error::InversesMissing));
        let g = g.with_inverses(true);
        assert_eq!(cofixed_dim(&g, &GradedSlice::polynomial(2, 4)), Ok(1));
        assert_eq!(cofixed_dim(&g, &GradedSlice::polynomial(2, 0)), Ok(1));
    }

    #[test]
    fn cofixed_matches_prediction_small() {
        assert!(check_cofixed(2, &comp(&[1, 1]), 6, &b()).unwrap().passed);
        assert!(check_cofixed(3, &comp(&[2]), 10, &b()).unwrap().passed);
        assert!(check_duality(3, 2, &comp(&[2]), &b()).unwrap().passed);
    }

    #[test]
    fn fixed_dims_match_brute_force() {
        let f = field_of_order(2).unwrap();
        for a in [comp(&[2]), comp(&[1, 1])] {
            let gens = parabolic_generators(&f, 2, &a, false).unwrap();
            for d in 0..=6 {
                let s = GradedSlice::truncated(2, 4, d);
                assert_eq!(fixed_dim(&gens, &s), brute_fixed_dim(&f, gens.gens(), &s), "{a} d={d}");
            }
        }
        let f = field_of_order(3).unwrap();
        let gens = parabolic_generators(&f, 2, &comp(&[2]), false).unwrap();
        for d in 0..=4 {
            let s = GradedSlice::truncated(2, 9, d);
            assert_eq!(fixed_dim(&gens, &s), brute_fixed_dim(&f, gens.gens(), &s));
        }
    }

    #[test]
    fn generator_choice_does_not_matter() {
        for (q, a) in [(2u64, comp(&[2])), (3, comp(&[1, 1])), (3, comp(&[2])), (2, comp(&[1, 2]))] {
            let f = field_of_order(q).unwrap();
            let n = a.n();
            let gens = parabolic_generators(&f, n as usize, &a, false).unwrap();
            let all = group_closure(&gens, 5000).unwrap();
            let full = GeneratorSet::custom(&f, a.clone(), all).with_inverses(false);
            for m in 1..=2 {
                assert_eq!(hilb_fixed_Q_with(&gens, q, m).series, hilb_fixed_Q_with(&full, q, m).series);
            }
        }
    }

    #[test]
    fn fixed_matches_closed_form_small_grid() {
        for q in [2u64, 3] {
            for n in 1..=2 {
                for m in 0..=2 {
                    for a in Composition::all(n) {
                        let r = hilb_fixed_Q(q, n, m, &a, &b()).unwrap();
                        assert_eq!(r.series, parabolic_C(q, m, &a), "q={q} m={m} {a}");
                    }
                }
            }
        }
        assert_eq!(hilb_fixed_Q(2, 3, 1, &comp(&[3]), &b()).unwrap().series, catalan_C(2, 3, 1));
    }

    #[test]
    fn dickson_examples() {
        let f = field_of_order(2).unwrap();
        let d = dickson_polys(2, 2, &b()).unwrap();
        assert!(d.outcome.passed);
        let m = |e: Vec<u32>| MPoly::monomial(&f, e, 1);
        assert_eq!(d.polys[1], m(vec![2, 0]).add(&m(vec![1, 1])).add(&m(vec![0, 2])));
        assert_eq!(d.polys[0], m(vec![2, 1]).add(&m(vec![1, 2])));
        let f3 = field_of_order(3).unwrap();
        let d = dickson_polys(3, 1, &b()).unwrap();
        assert_eq!(d.polys[0], MPoly::monomial(&f3, vec![2], 2));
        for (q, n) in [(2u64, 3u32), (3, 2), (4, 2), (5, 2), (2, 4)] {
            assert!(check_dickson(q, n, &b()).unwrap().passed, "q={q} n={n}");
        }
        assert!(matches!(dickson_polys(17, 2, &b()), Err(Error::ProblemTooLarge(_))));
    }

    #[test]
    fn m1_examples() {
        assert!(verify_m1_basis(3, &comp(&[1, 1]), &b()).unwrap().passed);
        assert!(verify_m1_basis(2, &comp(&[2]), &b()).unwrap().passed);
        let r = hilb_fixed_Q(3, 2, 1, &comp(&[1, 1]), &b()).unwrap();
        assert_eq!(r.series, mono_sum(&[0, 2, 4]));
    }

    #[test]
    fn kuhn_examples() {
        let r = kuhn_filtration_check(3, 1, 1, &b()).unwrap();
        assert_eq!(r.jumps, vec![1, 0, 1]);
        assert!(r.outcome.passed);
        let r = kuhn_filtration_check(2, 2, 1, &b()).unwrap();
        assert!(r.outcome.passed, "{r:?}");
        assert_eq!(r.dim_fixed_r, 2);
        assert!(kuhn_filtration_check(2, 2, 2, &b()).unwrap().outcome.passed);
        assert!(kuhn_filtration_check(3, 2, 1, &b()).unwrap().outcome.passed);
    }
}
