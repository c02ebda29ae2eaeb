//! Riemann-Roch spaces `L(d P0)` at a single rational place at infinity,
//! local expansions, `(D, P)`-orders, and the Stohr-Voloch divisors.
//!
//! Functions in `L(d P0)` are spanned by monomials `x^i y^j` whose pole
//! order `i a + j b` at `P0` is at most `d`, where `a`, `b` are the pole
//! orders of `x` and `y`. Orders at a point are read off the column rank
//! profile of the local expansions of a basis.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    det_valuation, expand_affine, hensel_lift, nullspace, pivot_orders, rank, roots, FunctionField, LocalParameter,
    Poly, Series,
};
use crate::arith::gcd;
use crate::curve::{CurveModel, InfinitePlace, PlacePoint};
use crate::error::{invalid, Error, Result};
use crate::field::Field;
use crate::gf::{Fe, Gf};
use crate::semigroup::NumericalSemigroup;

const RETRIES: u32 = 5;

/// Monomial basis of `L(d P0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    pub d: u64,
    pub pole_x: u32,
    pub pole_y: u32,
    /// Exponents `(i, j)` of `x^i y^j` with `i < pole_y`, sorted by pole order.
    pub monomials: Vec<(u32, u32)>,
    pub pole_orders: Vec<u64>,
    pub dimension: usize,
}

/// The single rational place at infinity, checked to support a monomial basis.
fn one_point_place(c: &CurveModel) -> Result<InfinitePlace> {
    if c.model_incomplete() {
        return Err(Error::Unsupported("the curve model is incomplete".into()));
    }
    let inf = c.infinity();
    if inf.len() != 1 || inf[0].degree != 1 {
        return Err(Error::Unsupported("needs exactly one rational place at infinity".into()));
    }
    let place = inf[0];
    let (a, b) = (place.pole_x as u64, place.pole_y as u64);
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        return Err(Error::Unsupported(format!("pole orders {a} and {b} are not coprime")));
    }
    let eq = c.equation();
    let top = a * b;
    let weights_ok = eq.terms().all(|(i, j, _)| i as u64 * a + j as u64 * b <= top);
    if !weights_ok || eq.coeff(place.pole_y, 0) == Fe::ZERO || eq.coeff(0, place.pole_x) == Fe::ZERO {
        return Err(Error::Unsupported("equation does not match the pole orders at infinity".into()));
    }
    Ok(place)
}

pub fn riemann_roch_basis(c: &CurveModel, d: u64) -> Result<MonomialBasis> {
    let place = one_point_place(c)?;
    let (a, b) = (place.pole_x as u64, place.pole_y as u64);
    let mut mons: Vec<(u64, (u32, u32))> = Vec::new();
    for i in 0..b {
        let mut j = 0u64;
        while i * a + j * b <= d {
            mons.push((i * a + j * b, (i as u32, j as u32)));
            j += 1;
        }
    }
    mons.sort();
    Ok(MonomialBasis {
        d,
        pole_x: place.pole_x,
        pole_y: place.pole_y,
        dimension: mons.len(),
        pole_orders: mons.iter().map(|m| m.0).collect(),
        monomials: mons.into_iter().map(|m| m.1).collect(),
    })
}

/// Which function serves as local parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Uniformizer {
    /// `x - x(P)`
    X,
    /// `y - y(P)`
    Y,
    /// `tau` at the place at infinity, with the coordinate of pole order
    /// prime to `p` equal to `tau^(-pole)`.
    Infinity,
}

/// `x` and `y` as Laurent series in a local parameter at a point.
#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub x: Series<Fe>,
    pub y: Series<Fe>,
    pub uniformizer: Uniformizer,
}

fn terms_over(c: &CurveModel, f: &'static Gf) -> Result<Vec<(u32, u32, Fe)>> {
    Ok(c.equation_over(f)?.term_list())
}

/// Local expansion of the coordinates at `p`, whose coordinates lie in `f`.
pub fn local_expansion(c: &CurveModel, f: &'static Gf, p: &PlacePoint, prec: i64) -> Result<LocalExpansion> {
    expansion_with_terms(c, f, &terms_over(c, f)?, p, prec)
}

fn expansion_with_terms(
    c: &CurveModel,
    f: &'static Gf,
    terms: &[(u32, u32, Fe)],
    p: &PlacePoint,
    prec: i64,
) -> Result<LocalExpansion> {
    match *p {
        PlacePoint::Affine { x, y, z: None } => {
            let (xs, ys, par) = expand_affine(f, terms, &x, &y, prec)?;
            let uniformizer = if par == LocalParameter::X { Uniformizer::X } else { Uniformizer::Y };
            Ok(LocalExpansion { x: xs, y: ys, uniformizer })
        }
        PlacePoint::Affine { .. } => Err(Error::Unsupported("expansions on space-curve models".into())),
        PlacePoint::Infinity { .. } => expand_infinity(f, terms, &one_point_place(c)?, prec),
    }
}

/// Weighted substitution `u = tau^(-a_u)`, `w = tau^(-a_w) W`, followed by
/// Hensel lifting of `W` from a simple root of the leading form.
fn expand_infinity(f: &Gf, terms: &[(u32, u32, Fe)], place: &InfinitePlace, prec: i64) -> Result<LocalExpansion> {
    let p = f.p() as i64;
    let (ax, ay) = (place.pole_x as i64, place.pole_y as i64);
    let u_is_y = match (ax % p != 0, ay % p != 0) {
        (_, true) if ay <= ax || ax % p == 0 => true,
        (true, _) => false,
        (false, true) => true,
        (false, false) => return Err(Error::Unsupported("both pole orders divisible by p".into())),
    };
    let (au, aw) = if u_is_y { (ay, ax) } else { (ax, ay) };
    let top = ax * ay;
    let deg_w = terms.iter().map(|&(i, j, _)| if u_is_y { i } else { j }).max().unwrap_or(0) as usize;
    let mut g: Vec<Vec<Fe>> = vec![Vec::new(); deg_w + 1];
    for &(i, j, c) in terms {
        let wt = i as i64 * ax + j as i64 * ay;
        let shift = (top - wt) as usize;
        let e = if u_is_y { i } else { j } as usize;
        if g[e].len() <= shift {
            g[e].resize(shift + 1, Fe::ZERO);
        }
        g[e][shift] = f.add(g[e][shift], c);
    }
    let lead = Poly::new(f, g.iter().map(|v| v.first().copied().unwrap_or(Fe::ZERO)).collect());
    let dlead = lead.derivative(f);
    let w0 = roots(f, &lead)
        .into_iter()
        .find(|r| dlead.eval(f, r) != Fe::ZERO)
        .ok_or_else(|| Error::Unsupported("leading form at infinity has no simple root in the field".into()))?;
    let gs: Vec<Series<Fe>> = g.into_iter().map(|v| Series::from_coeffs(f, 0, v, prec)).collect();
    let w = hensel_lift(f, &gs, w0, prec)?;
    let u = Series::monomial(f, Fe::ONE, -au, prec - au);
    let w = w.shift(-aw);
    let (x, y) = if u_is_y { (w, u) } else { (u, w) };
    Ok(LocalExpansion { x, y, uniformizer: Uniformizer::Infinity })
}

/// Expansion of `sum c x^i y^j` (coefficients in `f`) at `p`.
pub fn expand_at(
    c: &CurveModel,
    f: &'static Gf,
    func: &[(u32, u32, Fe)],
    p: &PlacePoint,
    prec: i64,
) -> Result<Series<Fe>> {
    let le = local_expansion(c, f, p, prec)?;
    let mut acc: Option<Series<Fe>> = None;
    for &(i, j, coef) in func {
        let term = le.x.pow(f, i as u64).mul(f, &le.y.pow(f, j as u64)).scale(f, &coef);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(f, &term),
        });
    }
    Ok(acc.unwrap_or_else(|| Series::zero(prec)))
}

/// What an order sequence describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderRole {
    Pointwise,
    Generic,
    Frobenius,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderData {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<PlacePoint>,
    /// Degree of the point over the base field.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub orders: Vec<u64>,
    pub role: OrderRole,
    /// Index of the generic order removed to obtain the Frobenius orders.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius_index: Option<usize>,
}

/// The complete linear system `|d P0|` on a curve with one place at infinity.
#[derive(Clone, Debug)]
pub struct LinearSystem<'c> {
    curve: &'c CurveModel,
    basis: MonomialBasis,
}

/// Equation terms over a fixed field, shared across many points.
struct FieldTerms {
    f: &'static Gf,
    terms: Vec<(u32, u32, Fe)>,
}

impl<'c> LinearSystem<'c> {
    pub fn new(curve: &'c CurveModel, d: u64) -> Result<Self> {
        Ok(LinearSystem { curve, basis: riemann_roch_basis(curve, d)? })
    }

    pub fn curve(&self) -> &'c CurveModel {
        self.curve
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn d(&self) -> u64 {
        self.basis.d
    }

    /// Projective dimension `r`.
    pub fn dimension(&self) -> usize {
        self.basis.dimension - 1
    }

    fn field_terms(&self, f: &'static Gf) -> Result<FieldTerms> {
        Ok(FieldTerms { f, terms: terms_over(self.curve, f)? })
    }

    /// Basis functions at `p`, multiplied by a local equation of `d P0` so
    /// that all are regular.
    fn rows(&self, ft: &FieldTerms, p: &PlacePoint, prec: i64) -> Result<(Vec<Series<Fe>>, Uniformizer)> {
        let f = ft.f;
        let le = expansion_with_terms(self.curve, f, &ft.terms, p, prec)?;
        let shift = if le.uniformizer == Uniformizer::Infinity { self.basis.d as i64 } else { 0 };
        Ok((monomial_rows(f, &le.x, &le.y, &self.basis.monomials, shift), le.uniformizer))
    }

    fn orders_with(&self, ft: &FieldTerms, p: &PlacePoint) -> Result<(Vec<u64>, Vec<Series<Fe>>)> {
        let d = self.basis.d as usize;
        let mut prec = d as i64 + 8;
        for _ in 0..RETRIES {
            let (rows, _) = self.rows(ft, p, prec)?;
            match pivot_orders(ft.f, &rows, d) {
                Ok(profile) => return Ok((profile.pivots.iter().map(|&c| c as u64).collect(), rows)),
                Err(Error::InsufficientPrecision { .. }) => prec *= 2,
                Err(e) => return Err(e),
            }
        }
        Err(Error::InsufficientPrecision { needed: 2 * prec, available: prec })
    }

    /// `(D, P)`-orders at a point with coordinates in `f`.
    pub fn orders_at(&self, f: &'static Gf, p: &PlacePoint) -> Result<OrderData> {
        let ft = self.field_terms(f)?;
        self.order_data(&ft, p)
    }

    fn order_data(&self, ft: &FieldTerms, p: &PlacePoint) -> Result<OrderData> {
        let (orders, _) = self.orders_with(ft, p)?;
        Ok(OrderData {
            point: Some(*p),
            degree: Some(self.curve.point_degree(ft.f, p)),
            orders,
            role: OrderRole::Pointwise,
            frobenius_index: None,
        })
    }

    /// `v_P(R)`: the order of vanishing of the Wronskian `det(D^(eps_k) phi_j)`
    /// at `p`, with the orders at `p`.
    pub fn ramification_at(&self, f: &'static Gf, p: &PlacePoint, eps: &[u64]) -> Result<(Vec<u64>, i64)> {
        let ft = self.field_terms(f)?;
        self.ramification_with(&ft, p, eps)
    }

    fn ramification_with(&self, ft: &FieldTerms, p: &PlacePoint, eps: &[u64]) -> Result<(Vec<u64>, i64)> {
        let (orders, _) = self.orders_with(ft, p)?;
        if orders == eps {
            return Ok((orders, 0));
        }
        let f = ft.f;
        let mut prec = 2 * self.basis.d as i64 + 8;
        for _ in 0..RETRIES {
            let (rows, _) = self.rows(ft, p, prec)?;
            let m: Vec<Vec<Series<Fe>>> =
                eps.iter().map(|&e| rows.iter().map(|r| r.hasse_derivative(f, e)).collect()).collect();
            match det_valuation(f, &m) {
                Ok(v) => return Ok((orders, v)),
                Err(Error::InsufficientPrecision { .. }) => prec *= 2,
                Err(e) => return Err(e),
            }
        }
        Err(Error::InsufficientPrecision { needed: 2 * prec, available: prec })
    }

    /// Generic orders from the Wronskian over the function field `K(x, y)`,
    /// expanding at the generic point.
    pub fn symbolic_generic_orders(&self) -> Result<(Vec<u64>, Uniformizer)> {
        let base = self.curve.base_field();
        let ff = FunctionField::from_terms(base, &self.curve.equation().term_list())
            .ok_or_else(|| invalid("equation does not involve y"))?;
        let terms: Vec<_> = self.curve.equation().terms().map(|(i, j, c)| (i, j, ff.embed(c))).collect();
        let d = self.basis.d as usize;
        let mut prec = d as i64 + 1;
        for _ in 0..RETRIES {
            let (xs, ys, par) = match expand_affine(&ff, &terms, &ff.x(), &ff.y(), prec) {
                Err(Error::SingularPoint) => return Err(Error::NotSeparable),
                r => r?,
            };
            let rows = monomial_rows(&ff, &xs, &ys, &self.basis.monomials, 0);
            match pivot_orders(&ff, &rows, d) {
                Ok(profile) => {
                    let u = if par == LocalParameter::X { Uniformizer::X } else { Uniformizer::Y };
                    return Ok((profile.pivots.iter().map(|&c| c as u64).collect(), u));
                }
                Err(Error::InsufficientPrecision { .. }) => prec *= 2,
                Err(e) => return Err(e),
            }
        }
        Err(Error::InsufficientPrecision { needed: 2 * prec, available: prec })
    }

    /// Elementwise minimum of the orders at the sample points.
    pub fn sampled_generic_orders(&self, samples: &[(&'static Gf, PlacePoint)]) -> Result<Vec<u64>> {
        let all: Vec<Vec<u64>> =
            samples.par_iter().map(|(f, p)| self.orders_at(f, p).map(|o| o.orders)).collect::<Result<_>>()?;
        let mut min = all.first().cloned().ok_or_else(|| invalid("no sample points"))?;
        for o in &all[1..] {
            for (m, v) in min.iter_mut().zip(o) {
                *m = (*m).min(*v);
            }
        }
        Ok(min)
    }

    /// Generic orders by both methods; disagreement is an error.
    pub fn generic_orders(&self) -> Result<GenericOrders> {
        let (symbolic, separating) = self.symbolic_generic_orders()?;
        let samples = sample_points(self.curve, 1..=3, 8)?;
        let sampled = self.sampled_generic_orders(&samples)?;
        if symbolic != sampled {
            return Err(Error::CheckFailed(format!(
                "generic orders disagree: symbolic {symbolic:?}, sampled {sampled:?}"
            )));
        }
        Ok(GenericOrders { orders: symbolic, sampled, sample_size: samples.len(), separating })
    }

    /// Smallest `I` with the Frobenius row in the span of the rows
    /// `D^(eps_0) .. D^(eps_I)`, maximized over sample points.
    pub fn frobenius_index(&self, eps: &[u64], samples: &[(&'static Gf, PlacePoint)]) -> Result<usize> {
        let big_q = self.frobenius_field_size()?;
        let per_point: Vec<Option<usize>> =
            samples.par_iter().map(|(f, p)| self.frobenius_index_at(f, p, eps, big_q)).collect::<Result<_>>()?;
        per_point
            .into_iter()
            .flatten()
            .max()
            .ok_or_else(|| invalid("no sample point suitable for the Frobenius rank test"))
    }

    fn frobenius_field_size(&self) -> Result<u64> {
        let q = self.curve.q().ok_or_else(|| Error::Unsupported("no maximality field recorded".into()))?;
        Ok(q * q)
    }

    fn frobenius_index_at(&self, f: &'static Gf, p: &PlacePoint, eps: &[u64], big_q: u64) -> Result<Option<usize>> {
        let Some((x, y)) = p.xy() else { return Ok(None) };
        let fr = (f.pow(x, big_q), f.pow(y, big_q));
        if fr == (x, y) {
            return Ok(None);
        }
        let ft = self.field_terms(f)?;
        let (orders, rows) = self.orders_with(&ft, p)?;
        if orders != eps {
            return Ok(None);
        }
        let deriv: Vec<Vec<Fe>> =
            eps.iter().map(|&e| rows.iter().map(|r| r.coeff(f, e as i64).unwrap()).collect()).collect();
        let fr_row: Vec<Fe> =
            self.basis.monomials.iter().map(|&(i, j)| f.mul(f.pow(fr.0, i as u64), f.pow(fr.1, j as u64))).collect();
        for big_i in 0..eps.len() {
            let mut m: Vec<Vec<Fe>> = deriv[..=big_i].to_vec();
            m.push(fr_row.clone());
            if rank(f, &m) == big_i + 1 {
                return Ok(Some(big_i));
            }
        }
        Ok(None)
    }
}

fn monomial_rows<F: Field>(
    f: &F,
    x: &Series<F::Elem>,
    y: &Series<F::Elem>,
    monomials: &[(u32, u32)],
    shift: i64,
) -> Vec<Series<F::Elem>> {
    let max_i = monomials.iter().map(|m| m.0).max().unwrap_or(0) as usize;
    let max_j = monomials.iter().map(|m| m.1).max().unwrap_or(0) as usize;
    let powers = |s: &Series<F::Elem>, n: usize| {
        let mut v = vec![Series::one(f, s.relative_precision().max(1) as i64)];
        for k in 1..=n {
            let next = v[k - 1].mul(f, s);
            v.push(next);
        }
        v
    };
    let xp = powers(x, max_i);
    let yp = powers(y, max_j);
    monomials.iter().map(|&(i, j)| xp[i as usize].mul(f, &yp[j as usize]).shift(shift)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericOrders {
    pub orders: Vec<u64>,
    /// Elementwise minimum over the sample points.
    pub sampled: Vec<u64>,
    pub sample_size: usize,
    /// Separating variable used by the symbolic computation.
    pub separating: Uniformizer,
}

/// Deterministic sample of affine points of each degree in `degrees` over
/// the base field, `per_degree` of each.
pub fn sample_points(
    c: &CurveModel,
    degrees: std::ops::RangeInclusive<u32>,
    per_degree: usize,
) -> Result<Vec<(&'static Gf, PlacePoint)>> {
    let mut out = Vec::new();
    for ext in degrees {
        let f = c.extension_field(ext)?;
        let eq = c.equation_over(f)?;
        let n = f.order();
        // a stride coprime to the field size spreads the sample over the field
        let stride = (1..n).rev().find(|s| gcd(*s, n) == 1 && *s <= n / 3 + 1).unwrap_or(1);
        let mut found = 0;
        for k in 0..n {
            if found >= per_degree {
                break;
            }
            let x = Fe(((k * stride + 1) % n) as u32);
            for y in roots(f, &eq.specialize_x(f, x)) {
                let p = PlacePoint::affine(x, y);
                if c.point_degree(f, &p) == ext && found < per_degree {
                    out.push((f, p));
                    found += 1;
                }
            }
        }
    }
    Ok(out)
}

/// How to obtain the Frobenius orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuChoice {
    /// Rank test of the Frobenius row at sample points.
    RankDrop,
    /// Remove the given index from the generic orders.
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRamification {
    pub point: PlacePoint,
    pub degree: u32,
    pub orders: Vec<u64>,
    pub v_r: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SVDivisorReport {
    pub d: u64,
    /// Projective dimension.
    pub r: usize,
    pub genus: u64,
    pub epsilon: Vec<u64>,
    pub deg_r_formula: i64,
    pub deg_r_pointwise: i64,
    pub deg_r_agree: bool,
    /// Points are searched over the degree-`search_degree` extension of the base field.
    pub search_degree: u32,
    pub field_p: u64,
    pub field_degree: u32,
    /// Points with `v_P(R) > 0`, coordinates in the search field.
    pub weierstrass_points: Vec<PointRamification>,
    /// Every computed point satisfies `v_P(R) >= sum (j_i - eps_i)` and `eps_i <= j_i`.
    pub pointwise_bounds_hold: bool,
    pub frobenius_index: usize,
    pub nu: Vec<u64>,
    pub deg_s_formula: i64,
    /// `sum over rational P of sum_i (j_i(P) - nu_(i-1))`, a lower bound for `deg S`.
    pub s_rational_lower_bound: i64,
}

pub fn sv_divisors(c: &CurveModel, d: u64, nu_choice: NuChoice, search_degree: u32) -> Result<SVDivisorReport> {
    let ls = LinearSystem::new(c, d)?;
    let g = c.genus().ok_or_else(|| Error::Unsupported("genus unknown".into()))? as i64;
    let eps = ls.generic_orders()?.orders;
    let r = ls.dimension();
    let sum_eps: i64 = eps.iter().map(|&e| e as i64).sum();
    let deg_r_formula = sum_eps * (2 * g - 2) + (r as i64 + 1) * d as i64;

    let set = c.enumerate_points(search_degree)?;
    let ft = ls.field_terms(set.field)?;
    let per_point: Vec<(PlacePoint, u32, Vec<u64>, i64)> = set
        .points
        .par_iter()
        .map(|p| {
            let (orders, v) = ls.ramification_with(&ft, p, &eps)?;
            Ok((*p, c.point_degree(set.field, p), orders, v))
        })
        .collect::<Result<_>>()?;
    let deg_r_pointwise: i64 = per_point.iter().map(|t| t.3).sum();
    let pointwise_bounds_hold = per_point.iter().all(|(_, _, j, v)| {
        let excess: i64 = j.iter().zip(&eps).map(|(a, b)| *a as i64 - *b as i64).sum();
        j.iter().zip(&eps).all(|(a, b)| b <= a) && *v >= excess
    });

    let big_q = ls.frobenius_field_size()?;
    let frobenius_index = match nu_choice {
        NuChoice::Index(i) => i,
        NuChoice::RankDrop => {
            let samples = sample_points(c, 3..=3, 12)?;
            ls.frobenius_index(&eps, &samples)?
        }
    };
    if frobenius_index > r {
        return Err(invalid(format!("index {frobenius_index} exceeds the dimension {r}")));
    }
    let nu: Vec<u64> = eps.iter().enumerate().filter(|(i, _)| *i != frobenius_index).map(|(_, &e)| e).collect();
    let sum_nu: i64 = nu.iter().skip(1).map(|&v| v as i64).sum();
    let deg_s_formula = sum_nu * (2 * g - 2) + (big_q as i64 + r as i64) * d as i64;

    let k_ext = c.maximal_extension().unwrap_or(1);
    let s_rational_lower_bound = per_point
        .iter()
        .filter(|t| k_ext.is_multiple_of(t.1) && rational_over(c, set.field, &t.0, big_q))
        .map(|(_, _, j, _)| (1..j.len()).map(|i| j[i] as i64 - nu[i - 1] as i64).sum::<i64>())
        .sum();

    let weierstrass_points = per_point
        .into_iter()
        .filter(|t| t.3 > 0)
        .map(|(point, degree, orders, v_r)| PointRamification { point, degree, orders, v_r })
        .collect();
    Ok(SVDivisorReport {
        d,
        r,
        genus: g as u64,
        deg_r_agree: deg_r_formula == deg_r_pointwise,
        epsilon: eps,
        deg_r_formula,
        deg_r_pointwise,
        search_degree,
        field_p: set.field.p(),
        field_degree: set.field.degree(),
        weierstrass_points,
        pointwise_bounds_hold,
        frobenius_index,
        nu,
        deg_s_formula,
        s_rational_lower_bound,
    })
}

/// Whether `p` is fixed by the `big_q`-power Frobenius.
pub fn rational_over(c: &CurveModel, f: &Gf, p: &PlacePoint, big_q: u64) -> bool {
    let _ = c;
    match p.xy() {
        None => true,
        Some((x, y)) => f.pow(x, big_q) == x && f.pow(y, big_q) == y,
    }
}

/// Result of searching `L((q+1) P0)` for a function with divisor
/// `q P + Fr(P) - (q+1) P0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusEquivalence {
    pub point: PlacePoint,
    pub degree: u32,
    pub frobenius_point: PlacePoint,
    pub rational: bool,
    /// Dimension of the space of solutions.
    pub solutions: usize,
    pub holds: bool,
}

/// Checks `Fr(P) + q P ~ (q+1) P0` by exact linear algebra.
pub fn verify_frobenius_equivalence(c: &CurveModel, f: &'static Gf, p: &PlacePoint) -> Result<FrobeniusEquivalence> {
    let q = c.q().ok_or_else(|| Error::Unsupported("no maximality field recorded".into()))?;
    let ls = LinearSystem::new(c, q + 1)?;
    let big_q = q * q;
    let degree = c.point_degree(f, p);
    let Some((x, y)) = p.xy() else {
        // P = P0: the statement reduces to q + 1 being a pole order at P0
        let holds = ls.basis.pole_orders.contains(&(q + 1));
        return Ok(FrobeniusEquivalence {
            point: *p,
            degree,
            frobenius_point: *p,
            rational: true,
            solutions: holds as usize,
            holds,
        });
    };
    let fr = PlacePoint::affine(f.pow(x, big_q), f.pow(y, big_q));
    let rational = fr == *p;
    let vanish = if rational { q + 1 } else { q };
    let ft = ls.field_terms(f)?;
    let (rows, _) = ls.rows(&ft, p, vanish as i64 + 8)?;
    let mut conditions: Vec<Vec<Fe>> =
        (0..vanish as i64).map(|k| rows.iter().map(|r| r.coeff(f, k).unwrap()).collect()).collect();
    if !rational {
        let (fx, fy) = fr.xy().unwrap();
        conditions
            .push(ls.basis.monomials.iter().map(|&(i, j)| f.mul(f.pow(fx, i as u64), f.pow(fy, j as u64))).collect());
    }
    let solutions = nullspace(f, &conditions, ls.basis.dimension).len();
    Ok(FrobeniusEquivalence { point: *p, degree, frobenius_point: fr, rational, solutions, holds: solutions > 0 })
}

/// Gaps at `p` from the canonical orders: `(2g - 2) P0` is canonical when the
/// semigroup of pole orders at `P0` has the curve's genus.
pub fn gaps_at(c: &CurveModel, f: &'static Gf, p: &PlacePoint) -> Result<Vec<u64>> {
    let g = c.genus().ok_or_else(|| Error::Unsupported("genus unknown".into()))?;
    let place = one_point_place(c)?;
    let h = NumericalSemigroup::from_generators(&[place.pole_x as u64, place.pole_y as u64])?;
    if h.genus != g {
        return Err(Error::Unsupported("pole-order semigroup does not have the curve's genus".into()));
    }
    if g == 0 {
        return Ok(Vec::new());
    }
    let ls = LinearSystem::new(c, 2 * g - 2)?;
    Ok(ls.orders_at(f, p)?.orders.iter().map(|j| j + 1).collect())
}

/// The Weierstrass semigroup at `p`, as a sieved semigroup.
pub fn semigroup_at(c: &CurveModel, f: &'static Gf, p: &PlacePoint) -> Result<NumericalSemigroup> {
    let gaps = gaps_at(c, f, p)?;
    let top = gaps.last().copied().unwrap_or(0);
    // the non-gaps up to twice the largest gap generate the semigroup
    let gens: Vec<u64> = (1..=2 * top + 2).filter(|n| gaps.binary_search(n).is_err()).collect();
    let h = NumericalSemigroup::from_generators(&gens)?;
    if h.gaps != gaps {
        return Err(Error::CheckFailed(format!("gap set {gaps:?} is not closed under addition")));
    }
    Ok(h)
}

/// Order types among a set of points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderType {
    pub orders: Vec<u64>,
    pub count: usize,
    pub v_r: i64,
}

/// The hyperelliptic example `x^2 + y^5 = 1` over `F_81` with `D = |10 P0|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperellipticExampleReport {
    pub count: u64,
    pub dimension: usize,
    pub generic: GenericOrders,
    pub rational_types: Vec<OrderType>,
    pub non_rational_types: Vec<OrderType>,
    pub deg_r: i64,
    pub deg_r_pointwise: i64,
    /// `sum count * v_R` per type, in the order rational, non-rational.
    pub deg_r_breakdown: Vec<(usize, i64)>,
    pub nonrational_dw_points: usize,
    pub sigma_frobenius_fixed_nonrational: usize,
    pub dw_points_are_sigma_frobenius_fixed: bool,
    pub holds: bool,
}

pub fn hyperelliptic_example_report() -> Result<HyperellipticExampleReport> {
    let c = CurveModel::hyperelliptic_example()?;
    let count = c.count_points(1)?;
    let ls = LinearSystem::new(&c, 10)?;
    let generic = ls.generic_orders()?;
    let eps = generic.orders.clone();
    let set = c.enumerate_points(2)?;
    let f = set.field;
    let ft = ls.field_terms(f)?;
    let per_point: Vec<(PlacePoint, bool, Vec<u64>, i64)> = set
        .points
        .par_iter()
        .map(|p| {
            let (orders, v) = ls.ramification_with(&ft, p, &eps)?;
            Ok((*p, c.point_degree(f, p) == 1, orders, v))
        })
        .collect::<Result<_>>()?;
    let types = |rational: bool| {
        let mut v: Vec<OrderType> = Vec::new();
        for (_, r, o, val) in per_point.iter().filter(|t| t.1 == rational) {
            match v.iter_mut().find(|t| &t.orders == o && t.v_r == *val) {
                Some(t) => t.count += 1,
                None => v.push(OrderType { orders: o.clone(), count: 1, v_r: *val }),
            }
            let _ = r;
        }
        v.sort_by(|a, b| b.count.cmp(&a.count).then(a.orders.cmp(&b.orders)));
        v
    };
    let rational_types = types(true);
    let non_rational_types = types(false);
    let deg_r_pointwise = per_point.iter().map(|t| t.3).sum();
    let sum_eps: i64 = eps.iter().map(|&e| e as i64).sum();
    let deg_r = sum_eps * 2 + 9 * 10;
    let deg_r_breakdown =
        rational_types.iter().chain(&non_rational_types).filter(|t| t.v_r > 0).map(|t| (t.count, t.v_r)).collect();

    let sigma_fr = |p: &PlacePoint| -> Result<PlacePoint> {
        let fr = c.frobenius_point(f, p, c.base_field())?;
        c.involution(f, &fr)
    };
    let dw: Vec<PlacePoint> = per_point.iter().filter(|t| !t.1 && t.3 > 0).map(|t| t.0).collect();
    let mut fixed = Vec::new();
    for (p, rational, _, _) in &per_point {
        if !rational && sigma_fr(p)? == *p {
            fixed.push(*p);
        }
    }
    let dw_points_are_sigma_frobenius_fixed = dw == fixed;
    let expected_rational = vec![
        OrderType { orders: vec![0, 1, 2, 3, 4, 5, 6, 7, 10], count: 112, v_r: 1 },
        OrderType { orders: vec![0, 1, 2, 3, 4, 5, 6, 8, 10], count: 6, v_r: 2 },
    ];
    let dw_orders_ok =
        non_rational_types.iter().filter(|t| t.v_r > 0).all(|t| t.orders == [0, 1, 2, 3, 4, 5, 6, 8, 9] && t.v_r == 1);
    let holds = count == 118
        && ls.basis.dimension == 9
        && eps == [0, 1, 2, 3, 4, 5, 6, 7, 9]
        && rational_types == expected_rational
        && deg_r == 164
        && deg_r_pointwise == 164
        && dw.len() == 40
        && dw_orders_ok
        && dw_points_are_sigma_frobenius_fixed;
    Ok(HyperellipticExampleReport {
        count,
        dimension: ls.basis.dimension,
        generic,
        rational_types,
        non_rational_types: non_rational_types.into_iter().filter(|t| t.v_r > 0).collect(),
        deg_r,
        deg_r_pointwise,
        deg_r_breakdown,
        nonrational_dw_points: dw.len(),
        sigma_frobenius_fixed_nonrational: fixed.len(),
        dw_points_are_sigma_frobenius_fixed,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_dimensions() {
        let h = CurveModel::hyperelliptic_example().unwrap();
        let b = riemann_roch_basis(&h, 10).unwrap();
        assert_eq!(b.dimension, 9);
        assert!(b.monomials.iter().all(|&(i, _)| i <= 1));
        let a = CurveModel::artin_schreier(5, 3).unwrap();
        let b = riemann_roch_basis(&a, 6).unwrap();
        assert_eq!(b.monomials, vec![(0, 0), (0, 1), (1, 0), (0, 2)]);
        assert_eq!(b.pole_orders, vec![0, 3, 5, 6]);
        assert_eq!(riemann_roch_basis(&a, 0).unwrap().dimension, 1);
    }

    #[test]
    fn basis_dimension_matches_semigroup_and_riemann_roch() {
        for c in [
            CurveModel::hyperelliptic_example().unwrap(),
            CurveModel::artin_schreier(5, 3).unwrap(),
            CurveModel::hermitian(4).unwrap(),
            CurveModel::suzuki(0).unwrap(),
        ] {
            let inf = c.infinity()[0];
            let h = NumericalSemigroup::from_generators(&[inf.pole_x as u64, inf.pole_y as u64]).unwrap();
            let g = c.genus().unwrap();
            assert_eq!(h.genus, g);
            for d in 0..=(2 * g + 6) {
                let b = riemann_roch_basis(&c, d).unwrap();
                assert_eq!(b.dimension, h.non_gaps_up_to(d).len());
                if d + 1 >= 2 * g {
                    assert_eq!(b.dimension as u64, d - g + 1);
                }
            }
        }
    }

    #[test]
    fn suzuki_beyond_smallest_is_unsupported() {
        let c = CurveModel::suzuki(1).unwrap();
        assert!(matches!(riemann_roch_basis(&c, 10), Err(Error::Unsupported(_))));
    }

    #[test]
    fn expansions_respect_pole_orders_and_equation() {
        let c = CurveModel::artin_schreier(5, 3).unwrap();
        let f = c.base_field();
        let inf = PlacePoint::Infinity { index: 0 };
        let x = expand_at(&c, f, &[(1, 0, Fe::ONE)], &inf, 12).unwrap();
        assert_eq!(x.valuation(), Some(-5));
        let y = expand_at(&c, f, &[(0, 1, Fe::ONE)], &inf, 12).unwrap();
        assert_eq!(y.valuation(), Some(-3));
        let eq = c.equation().term_list();
        assert!(expand_at(&c, f, &eq, &inf, 12).unwrap().is_zero());
        let p = PlacePoint::affine(Fe(0), Fe(0));
        let yl = expand_at(&c, f, &[(0, 1, Fe::ONE)], &p, 12).unwrap();
        assert_eq!(yl.valuation(), Some(3));
        assert!(expand_at(&c, f, &eq, &p, 12).unwrap().is_zero());
        let xl = expand_at(&c, f, &[(1, 0, Fe::ONE)], &p, 12).unwrap();
        assert_eq!(xl.valuation(), Some(1));
    }

    #[test]
    fn hyperelliptic_orders_at_named_points() {
        let c = CurveModel::hyperelliptic_example().unwrap();
        let ls = LinearSystem::new(&c, 10).unwrap();
        let f = c.base_field();
        let inf = ls.orders_at(f, &PlacePoint::Infinity { index: 0 }).unwrap();
        assert_eq!(inf.orders, vec![0, 1, 2, 3, 4, 5, 6, 8, 10]);
        // (0, 1) is fixed by the involution, hence Weierstrass
        let w = ls.orders_at(f, &PlacePoint::affine(Fe(0), Fe(1))).unwrap();
        assert_eq!(w.orders, vec![0, 1, 2, 3, 4, 5, 6, 8, 10]);
        // (1, 0) uses y as parameter
        let p = PlacePoint::affine(Fe(1), Fe(0));
        assert_eq!(local_expansion(&c, f, &p, 8).unwrap().uniformizer, Uniformizer::Y);
        assert_eq!(ls.orders_at(f, &p).unwrap().orders, vec![0, 1, 2, 3, 4, 5, 6, 7, 10]);
    }

    #[test]
    fn generic_orders_small_instances() {
        let c = CurveModel::artin_schreier(5, 3).unwrap();
        let g = LinearSystem::new(&c, 6).unwrap().generic_orders().unwrap();
        assert_eq!(g.orders, vec![0, 1, 2, 5]);
        assert!(g.sample_size >= 20);
        let c = CurveModel::hermitian(2).unwrap();
        let g = LinearSystem::new(&c, 3).unwrap().generic_orders().unwrap();
        assert_eq!(g.orders, vec![0, 1, 2]);
    }

    #[test]
    fn conic_has_no_weierstrass_points() {
        // y = x^2 over F_25, one place at infinity with poles 1 and 2
        let c = CurveModel::generic_plane(
            5,
            2,
            &[(0, 1, 1), (2, 0, 4)],
            Some(0),
            vec![InfinitePlace { pole_x: 1, pole_y: 2, degree: 1 }],
        )
        .unwrap();
        let rep = sv_divisors(&c, 2, NuChoice::Index(1), 1).unwrap();
        assert_eq!(rep.epsilon, vec![0, 1, 2]);
        assert_eq!(rep.deg_r_formula, 0);
        assert_eq!(rep.deg_r_pointwise, 0);
        assert!(rep.weierstrass_points.is_empty());
    }

    #[test]
    fn artin_schreier_divisors() {
        let c = CurveModel::artin_schreier(5, 3).unwrap();
        let rep = sv_divisors(&c, 6, NuChoice::RankDrop, 2).unwrap();
        assert_eq!(rep.deg_r_formula, 72);
        assert_eq!(rep.deg_r_pointwise, 72);
        assert!(rep.pointwise_bounds_hold);
        assert_eq!(rep.weierstrass_points.len(), 66);
        assert_eq!(rep.nu, vec![0, 1, 5]);
        assert!(rep.s_rational_lower_bound <= rep.deg_s_formula);
    }

    #[test]
    fn frobenius_equivalence_on_small_points() {
        let c = CurveModel::artin_schreier(5, 3).unwrap();
        let f1 = c.base_field();
        let inf = PlacePoint::Infinity { index: 0 };
        assert!(verify_frobenius_equivalence(&c, f1, &inf).unwrap().holds);
        let r = verify_frobenius_equivalence(&c, f1, &PlacePoint::affine(Fe(0), Fe(0))).unwrap();
        assert!(r.holds && r.rational);
        assert_eq!(r.solutions, 1);
        let samples = sample_points(&c, 2..=2, 3).unwrap();
        for (f, p) in samples {
            let r = verify_frobenius_equivalence(&c, f, &p).unwrap();
            assert!(r.holds && !r.rational && r.frobenius_point != p);
            assert_eq!(r.solutions, 1);
        }
    }

    #[test]
    fn semigroups_at_points() {
        let c = CurveModel::hyperelliptic_example().unwrap();
        let f = c.base_field();
        let h = semigroup_at(&c, f, &PlacePoint::Infinity { index: 0 }).unwrap();
        assert_eq!(h.gaps, vec![1, 3]);
        let h = semigroup_at(&c, f, &PlacePoint::affine(Fe(1), Fe(0))).unwrap();
        assert_eq!(h.gaps, vec![1, 2]);
    }
}
