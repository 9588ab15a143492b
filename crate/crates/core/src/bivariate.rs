//! Two variables: the invariant rings of `B` and `GL_2`, the functionals `μ`
//! and `ν`, monomial relations in the cofixed quotients and their Stanley
//! decompositions.
//!
//! Throughout, `X = x^{q-1}` and `Y = y^{q-1}`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{parabolic_generators, GfMatrix, GradedSlice, Substitution};
use crate::check::{compare_series, Outcome};
use crate::engine::{dickson_polys, relation_span, Bounds};
use crate::error::Result;
use crate::gf::{field_of_order, FieldElem, FieldSpec};
use crate::linalg::Span;
use crate::mpoly::{ExponentRule, MPoly};
use crate::qtcomb::{conj2_rhs, Composition};
use crate::series::{RationalSeries, TPoly, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Borel,
    General,
}

impl Group {
    pub fn alpha(self) -> Composition {
        match self {
            Group::Borel => Composition::new(vec![1, 1]).unwrap(),
            Group::General => Composition::single(2),
        }
    }
}

/// `X^i Y^j`.
pub fn xy(field: &Arc<FieldSpec>, i: u32, j: u32) -> MPoly {
    let k = field.q() - 1;
    MPoly::monomial(field, vec![i * k, j * k], 1)
}

/// `Y^q + X Y^{q-1} + ... + X^q`.
pub fn d21_explicit(field: &Arc<FieldSpec>) -> MPoly {
    let q = field.q();
    (0..=q).fold(MPoly::zero(field, 2), |acc, k| acc.add(&xy(field, k, q - k)))
}

/// `X Y^q + X^2 Y^{q-1} + ... + X^q Y`.
pub fn d20_explicit(field: &Arc<FieldSpec>) -> MPoly {
    let q = field.q();
    (1..=q).fold(MPoly::zero(field, 2), |acc, k| acc.add(&xy(field, k, q + 1 - k)))
}

/// `(μ(f), ν(f))`.
pub fn functionals_mu_nu(f: &MPoly) -> (FieldElem, FieldElem) {
    let field = f.field();
    let k = field.q() - 1;
    let (mut mu, mut nu) = (0u32, 0u32);
    for (e, c) in f.terms() {
        if e[0] % k != 0 || e[1] % k != 0 {
            continue;
        }
        if e[0] == 0 {
            nu = field.add(nu, c);
        } else if e[1] > 0 {
            mu = field.add(mu, c);
        }
    }
    (field.element(mu), field.element(nu))
}

fn image(field: &Arc<FieldSpec>, g: &GfMatrix, e: &[u32]) -> MPoly {
    Substitution::new(field, g, ExponentRule::Free).image(e)
}

/// `μ` and `ν` vanish on `g(m) - m` for the Borel generators, and `μ` also
/// for the swap, over every monomial of degree at most `max_degree`.
pub fn check_descent(q: u64, max_degree: u32) -> Result<Outcome> {
    let field = field_of_order(q)?;
    let f = &field;
    let u = GfMatrix::transvection(2, 0, 1, 1);
    let sigma = GfMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
    let torus = [
        GfMatrix::diagonal(&[f.generator(), 1]),
        GfMatrix::diagonal(&[1, f.generator()]),
    ];
    let mut out = Outcome::pass();
    for d in 0..=max_degree {
        for i in 0..=d {
            let e = [i, d - i];
            let m = MPoly::monomial(f, e.to_vec(), 1);
            for g in torus.iter().chain(std::iter::once(&u)) {
                let (mu, nu) = functionals_mu_nu(&image(f, g, &e).sub(&m));
                out.require(mu.is_zero() && nu.is_zero(), format!("descent fails on x^{}y^{} for {g:?}", e[0], e[1]));
            }
            let (mu, _) = functionals_mu_nu(&image(f, &sigma, &e).sub(&m));
            out.require(mu.is_zero(), format!("mu does not descend on x^{}y^{} under the swap", e[0], e[1]));
        }
    }
    Ok(out)
}

/// Relation spans of `S_B` and `S_G` in every degree up to `D`.
pub struct BivariateCtx {
    q: u64,
    field: Arc<FieldSpec>,
    max_degree: u32,
    pub d21: MPoly,
    pub d20: MPoly,
    borel: Vec<Span>,
    general: Vec<Span>,
}

impl BivariateCtx {
    pub fn new(q: u64, max_degree: u32) -> Result<Self> {
        let field = field_of_order(q)?;
        let spans = |g: Group| -> Result<Vec<Span>> {
            let gens = parabolic_generators(&field, 2, &g.alpha(), true)?;
            (0..=max_degree)
                .into_par_iter()
                .map(|d| relation_span(&gens, &GradedSlice::polynomial(2, d)))
                .collect()
        };
        Ok(BivariateCtx {
            q,
            d21: d21_explicit(&field),
            d20: d20_explicit(&field),
            borel: spans(Group::Borel)?,
            general: spans(Group::General)?,
            field,
            max_degree,
        })
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }
    fn spans(&self, g: Group) -> &[Span] {
        match g {
            Group::Borel => &self.borel,
            Group::General => &self.general,
        }
    }
    /// `dim (S_H)_d`.
    pub fn cofixed_dim(&self, g: Group, d: u32) -> usize {
        let s = &self.spans(g)[d as usize];
        s.ncols() - s.rank()
    }
    fn coords(&self, f: &MPoly, d: u32) -> Vec<u32> {
        debug_assert!(f.is_homogeneous_of(d));
        GradedSlice::polynomial(2, d).coordinates(f)
    }
    /// Whether the image of `f` in `S_H` vanishes; `f` homogeneous of degree `≤ D`.
    pub fn vanishes(&self, g: Group, f: &MPoly) -> bool {
        match f.total_degree() {
            None => true,
            Some(d) => self.spans(g)[d as usize].contains(&self.coords(f, d)),
        }
    }
    /// Whether the images of homogeneous `fs` of degree `d` are linearly
    /// independent in `S_H`.
    pub fn independent(&self, g: Group, d: u32, fs: &[MPoly]) -> bool {
        let mut span = self.spans(g)[d as usize].clone();
        fs.iter().all(|f| span.insert(self.coords(f, d)))
    }

    pub fn relation_suite(&self) -> Outcome {
        let q = self.q as u32;
        let k = q - 1;
        let dmax = self.max_degree;
        let f = &self.field;
        let mut out = Outcome::pass();
        // Monomials outside {X^i Y^j} already vanish in S_T, hence in S_B.
        for d in 0..=dmax {
            for i in 0..=d {
                if i % k != 0 || (d - i) % k != 0 {
                    let m = MPoly::monomial(f, vec![i, d - i], 1);
                    out.require(self.vanishes(Group::Borel, &m), format!("x^{i}y^{} survives in S_B", d - i));
                }
            }
        }
        let top = dmax / k;
        for i in 1..=top {
            out.require(self.vanishes(Group::Borel, &xy(f, i, 0)), format!("X^{i} survives in S_B"));
            out.require(self.vanishes(Group::General, &xy(f, 0, i)), format!("Y^{i} survives in S_G"));
        }
        for s in 2..=top {
            for (i, j) in (1..s).map(|i| (i, s - i)) {
                for (i2, j2) in (1..s).map(|i| (i, s - i)) {
                    if (i, j) >= (i2, j2) {
                        continue;
                    }
                    let diff = xy(f, i, j).sub(&xy(f, i2, j2));
                    if j <= q && j2 <= q {
                        out.require(
                            self.vanishes(Group::Borel, &diff),
                            format!("X^{i}Y^{j} and X^{i2}Y^{j2} differ in S_B"),
                        );
                    }
                    if s <= 2 * q {
                        out.require(
                            self.vanishes(Group::General, &diff),
                            format!("X^{i}Y^{j} and X^{i2}Y^{j2} differ in S_G"),
                        );
                    }
                }
            }
        }
        out
    }

    /// Basis of `(S_B)_d` predicted by the decomposition: `D_{2,1}^a X^b Y`
    /// and `D_{2,1}^a` times `1, Y^j - X^{j-1} Y` for `2 <= j <= q-1`.
    pub fn borel_basis(&self, d: u32) -> Vec<MPoly> {
        let f = &self.field;
        let q = self.q as u32;
        let (k, dd) = (q - 1, q * q - q);
        let mut free = Vec::new();
        let mut torsion = vec![MPoly::one(f, 2)];
        for j in 2..q {
            torsion.push(xy(f, 0, j).sub(&xy(f, j - 1, 1)));
        }
        let mut a = 0;
        while a * dd <= d {
            let p = self.d21.pow(a as u64);
            let rest = d - a * dd;
            if rest.is_multiple_of(k) && rest >= k {
                free.push(p.mul(&xy(f, rest / k - 1, 1)));
            }
            for t in &torsion {
                if t.total_degree() == Some(rest) {
                    free.push(p.mul(t));
                }
            }
            a += 1;
        }
        free
    }

    /// Basis of `(S_G)_d` predicted by the decomposition: `D_{2,0}^a D_{2,1}^b X^q Y`
    /// and `D_{2,1}^b` times `1, XY, ..., X^{q-2} Y`.
    pub fn general_basis(&self, d: u32) -> Vec<MPoly> {
        let f = &self.field;
        let q = self.q as u32;
        let (d0, d1) = (q * q - 1, q * q - q);
        let free_gen = xy(f, q, 1);
        let mut torsion = vec![MPoly::one(f, 2)];
        for i in 1..=q.saturating_sub(2) {
            torsion.push(xy(f, i, 1));
        }
        let mut out = Vec::new();
        let mut b = 0;
        while b * d1 <= d {
            let p = self.d21.pow(b as u64);
            let rest = d - b * d1;
            for t in &torsion {
                if t.total_degree() == Some(rest) {
                    out.push(p.mul(t));
                }
            }
            let mut a = 0;
            let g = free_gen.total_degree().unwrap();
            while a * d0 + g <= rest {
                if a * d0 + g == rest {
                    out.push(p.mul(&self.d20.pow(a as u64)).mul(&free_gen));
                }
                a += 1;
            }
            b += 1;
        }
        out
    }

    pub fn stanley_checks(&self) -> StanleyReport {
        let q = self.q;
        let order = self.max_degree as usize + 1;
        let f = &self.field;
        let dims_b: Vec<u64> = (0..=self.max_degree).map(|d| self.cofixed_dim(Group::Borel, d) as u64).collect();
        let dims_g: Vec<u64> = (0..=self.max_degree).map(|d| self.cofixed_dim(Group::General, d) as u64).collect();

        let series_b = hilb_sb_closed(q);
        let series_g = hilb_sg_closed(q);
        let mut rational = Outcome::pass();
        rational.require(series_b.equals(&conj2_rhs(q, &Group::Borel.alpha()).sum()), "S_B closed form differs from the prediction");
        rational.require(series_b.equals(&hilb_sb_prediction_display(q)), "S_B closed form differs from its four-term form");
        rational.require(series_g.equals(&conj2_rhs(q, &Group::General.alpha()).sum()), "S_G closed form differs from the prediction");
        rational.require(series_g.equals(&hilb_sg_prediction_display(q)), "S_G closed form differs from its three-term form");

        let mut torsion = Outcome::pass();
        let qq = q as u32;
        let mut ms = vec![MPoly::one(f, 2)];
        ms.extend((1..=qq.saturating_sub(2)).map(|i| xy(f, i, 1)));
        let d1 = qq * qq - qq;
        for m in &ms {
            let dm = m.total_degree().unwrap();
            if dm + qq * qq - 1 <= self.max_degree {
                torsion.require(
                    self.vanishes(Group::General, &self.d20.mul(m)),
                    format!("D_20 does not annihilate {m:?} in S_G"),
                );
            }
            let mut j = 0;
            while j * d1 + dm <= self.max_degree {
                torsion.require(
                    !self.vanishes(Group::General, &self.d21.pow(j as u64).mul(m)),
                    format!("D_21^{j} annihilates {m:?} in S_G"),
                );
                j += 1;
            }
        }

        let mut dims = Outcome::from_mismatch(compare_series(
            &TruncSeries::from_coeffs(dims_b.iter().map(|&x| x.into()).collect()),
            &series_b.expand(order),
        ));
        dims = dims.and(Outcome::from_mismatch(compare_series(
            &TruncSeries::from_coeffs(dims_g.iter().map(|&x| x.into()).collect()),
            &series_g.expand(order),
        )));
        for d in 0..=self.max_degree {
            let bb = self.borel_basis(d);
            dims.require(
                bb.len() == dims_b[d as usize] as usize && self.independent(Group::Borel, d, &bb),
                format!("predicted basis of (S_B)_{d} fails"),
            );
            let gb = self.general_basis(d);
            dims.require(
                gb.len() == dims_g[d as usize] as usize && self.independent(Group::General, d, &gb),
                format!("predicted basis of (S_G)_{d} fails"),
            );
        }
        let outcome = rational.clone().and(torsion.clone()).and(dims.clone());
        StanleyReport {
            dims_b,
            dims_g,
            rational,
            torsion,
            dims,
            outcome,
        }
    }

    /// `S_{d+q^2-q} = D_{2,1} S_d ⊕ Ŝ_{d+q^2-q}`, with `Ŝ` spanned by `x^i y^j`, `j < q^2 - q`.
    pub fn ks_splitting(&self) -> Outcome {
        let q = self.q as u32;
        let shift = q * q - q;
        let f = &self.field;
        let mut out = Outcome::pass();
        let mut d = 0;
        while d + shift <= self.max_degree {
            let e = d + shift;
            let slice = GradedSlice::polynomial(2, e);
            let mut span = Span::new(f, slice.dim());
            let mut count = 0;
            for i in 0..=d {
                span.insert(slice.coordinates(&self.d21.mul(&MPoly::monomial(f, vec![i, d - i], 1))));
                count += 1;
            }
            for j in 0..shift.min(e + 1) {
                span.insert(slice.coordinates(&MPoly::monomial(f, vec![e - j, j], 1)));
                count += 1;
            }
            out.require(
                span.rank() == count && count == slice.dim(),
                format!("splitting fails in degree {e}"),
            );
            d += 1;
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StanleyReport {
    pub dims_b: Vec<u64>,
    pub dims_g: Vec<u64>,
    pub rational: Outcome,
    pub torsion: Outcome,
    pub dims: Outcome,
    pub outcome: Outcome,
}

fn second_term(q: u64) -> RationalSeries {
    let mut num = TPoly::one();
    for k in 2..q {
        num = &num + &TPoly::monomial(k * (q - 1), 1);
    }
    RationalSeries::new(num, vec![q * q - q])
}

/// `t^{q-1}/((1-t^{q-1})(1-t^{q^2-q})) + (1 + Σ_{k=2}^{q-1} t^{k(q-1)})/(1-t^{q^2-q})`.
pub fn hilb_sb_closed(q: u64) -> RationalSeries {
    RationalSeries::new(TPoly::monomial(q - 1, 1), vec![q - 1, q * q - q]).add(&second_term(q))
}

/// `t^{q^2-1}/((1-t^{q^2-1})(1-t^{q^2-q})) + (1 + Σ_{k=2}^{q-1} t^{k(q-1)})/(1-t^{q^2-q})`.
pub fn hilb_sg_closed(q: u64) -> RationalSeries {
    RationalSeries::new(TPoly::monomial(q * q - 1, 1), vec![q * q - 1, q * q - q]).add(&second_term(q))
}

fn hilb_sb_prediction_display(q: u64) -> RationalSeries {
    RationalSeries::sum(&[
        RationalSeries::from_poly(TPoly::one()),
        RationalSeries::new(TPoly::monomial(q - 1, 1), vec![q - 1]),
        RationalSeries::new(TPoly::monomial(2 * (q - 1), 1), vec![q - 1]),
        RationalSeries::new(TPoly::monomial(q * q + q - 2, 1), vec![q - 1, q * q - q]),
    ])
}

fn hilb_sg_prediction_display(q: u64) -> RationalSeries {
    RationalSeries::sum(&[
        RationalSeries::from_poly(TPoly::one()),
        RationalSeries::new(TPoly::monomial(2 * (q - 1), 1), vec![q - 1]),
        RationalSeries::new(TPoly::monomial(2 * (q * q - 1), 1), vec![q * q - 1, q * q - q]),
    ])
}

/// Explicit `D_{2,0}`, `D_{2,1}` against the defining product, the relation
/// `D_{2,0} = X D_{2,1} - X^{q+1}` and the determinant quotients.
pub fn dickson_identities(q: u64) -> Result<Outcome> {
    let field = field_of_order(q)?;
    let f = &field;
    let q32 = q as u32;
    let d21 = d21_explicit(f);
    let d20 = d20_explicit(f);
    let mut out = Outcome::pass();
    out.require(
        d20 == xy(f, 1, 0).mul(&d21).sub(&xy(f, q32 + 1, 0)),
        "D_20 differs from X D_21 - X^(q+1)",
    );
    let m = |a: u32, b: u32| MPoly::monomial(f, vec![a, b], 1);
    let qq = q32 * q32;
    let denom = m(1, q32).sub(&m(q32, 1));
    out.require(d21.mul(&denom) == m(1, qq).sub(&m(qq, 1)), "D_21 is not the determinant quotient");
    out.require(d20.mul(&denom) == m(q32, qq).sub(&m(qq, q32)), "D_20 is not the determinant quotient");
    let bounds = Bounds {
        dickson_bound: q * q,
        ..Bounds::default()
    };
    let set = dickson_polys(q, 2, &bounds)?;
    out = out.and(set.outcome.clone());
    // The product gives `t^{q^2} - c_1 t^q + c_0 t` with `c_i` the determinant
    // quotients, so its `t^q` coefficient is `-D_{2,1}`.
    out.require(set.polys[1] == d21.scale(f.neg(1)), "product expansion disagrees with the explicit D_21");
    out.require(set.polys[0] == d20, "product expansion disagrees with the explicit D_20");
    Ok(out)
}

pub fn relation_suite(q: u64, max_degree: u32) -> Result<Outcome> {
    Ok(BivariateCtx::new(q, max_degree)?.relation_suite())
}

pub fn stanley_checks(q: u64, max_degree: u32) -> Result<StanleyReport> {
    Ok(BivariateCtx::new(q, max_degree)?.stanley_checks())
}

/// Everything above at the default working degree `3q^2`.
pub fn full_check(q: u64) -> Result<Outcome> {
    let d = (3 * q * q) as u32;
    let ctx = BivariateCtx::new(q, d)?;
    Ok(ctx
        .relation_suite()
        .and(ctx.stanley_checks().outcome)
        .and(ctx.ks_splitting())
        .and(check_descent(q, d)?)
        .and(dickson_identities(q)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functional_examples() {
        let f = field_of_order(3).unwrap();
        let v = |p: &MPoly| {
            let (a, b) = functionals_mu_nu(p);
            (a.value(), b.value())
        };
        assert_eq!(v(&MPoly::one(&f, 2)), (0, 1));
        assert_eq!(v(&xy(&f, 1, 1)), (1, 0));
        assert_eq!(v(&MPoly::var(&f, 2, 0)), (0, 0));
        assert_eq!(v(&xy(&f, 0, 3).add(&xy(&f, 2, 1))), (1, 1));
        // y -> x + y turns x y^2 into x(x+y)^2; the difference has mu = 0.
        let u = GfMatrix::transvection(2, 0, 1, 1);
        let m = MPoly::monomial(&f, vec![1, 2], 1);
        assert!(functionals_mu_nu(&image(&f, &u, &[1, 2]).sub(&m)).0.is_zero());
    }

    #[test]
    fn descent_holds() {
        for q in [2u64, 3, 4, 5] {
            assert!(check_descent(q, 20).unwrap().passed, "q={q}");
        }
    }

    #[test]
    fn dickson_forms() {
        for q in [2u64, 3, 4, 5] {
            let o = dickson_identities(q).unwrap();
            assert!(o.passed, "q={q}: {:?}", o.notes);
        }
    }

    #[test]
    fn relation_examples() {
        let ctx = BivariateCtx::new(3, 12).unwrap();
        let f = ctx.field().clone();
        assert!(ctx.vanishes(Group::Borel, &xy(&f, 1, 0)));
        assert!(ctx.vanishes(Group::Borel, &xy(&f, 1, 2).sub(&xy(&f, 2, 1))));
        assert!(!ctx.vanishes(Group::Borel, &xy(&f, 1, 1)));
        assert!(ctx.vanishes(Group::General, &ctx.d20));
        assert_eq!(ctx.cofixed_dim(Group::General, 4), 1);
        let ctx = BivariateCtx::new(2, 4).unwrap();
        assert!(ctx.vanishes(Group::General, &xy(ctx.field(), 0, 1)));
    }

    #[test]
    fn closed_form_expansion_q2() {
        let s = hilb_sb_closed(2).expand(10);
        let c: Vec<i64> = s.coeffs().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(&c[..3], &[1, 1, 2]);
        assert_eq!(s, conj2_rhs(2, &Group::Borel.alpha()).expand(10));
    }

    #[test]
    fn full_suite_small_q() {
        for q in [2u64, 3] {
            let o = full_check(q).unwrap();
            assert!(o.passed, "q={q}: {:?}", o.notes);
        }
    }
}
