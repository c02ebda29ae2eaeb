//! Newton lifting of simple roots and local expansions of plane curves.

use crate::error::{invalid, Error, Result};
use crate::field::Field;

use super::poly::Poly;
use super::series::Series;

/// Lifts a simple root `w0` of `G(0, W)` to a root `W(t)` of
/// `G(t, W) = sum_j g[j](t) W^j`, to absolute precision `prec`.
///
/// Each `g[j]` must have nonnegative valuation and precision at least `prec`.
pub fn hensel_lift<F: Field>(f: &F, g: &[Series<F::Elem>], w0: F::Elem, prec: i64) -> Result<Series<F::Elem>> {
    if prec < 1 {
        return Err(invalid("lifting precision must be positive"));
    }
    for gj in g {
        if gj.valuation().is_some_and(|v| v < 0) {
            return Err(invalid("lifting coefficients must be regular"));
        }
        if gj.precision() < prec {
            return Err(Error::InsufficientPrecision { needed: prec, available: gj.precision() });
        }
    }
    let at0: Vec<F::Elem> = g.iter().map(|s| s.coeff(f, 0).unwrap()).collect();
    let at0 = Poly::new(f, at0);
    if !f.is_zero(&at0.eval(f, &w0)) {
        return Err(Error::CheckFailed("starting value is not a root".into()));
    }
    if f.is_zero(&at0.derivative(f).eval(f, &w0)) {
        return Err(Error::SingularPoint);
    }

    let mut w = Series::constant(f, w0, 1);
    let mut cur = 1i64;
    while cur < prec {
        cur = (2 * cur).min(prec);
        // the current approximation is an exact polynomial in t
        let wc = w.pad(f, cur);
        let (val, der) = eval_with_derivative(f, g, &wc, cur);
        let step = val.div(f, &der)?;
        w = wc.sub(f, &step).truncate(f, cur);
        if w.precision() < cur {
            return Err(Error::InsufficientPrecision { needed: cur, available: w.precision() });
        }
    }
    Ok(w)
}

/// `(G(w), dG/dW(w))` truncated at `prec`.
fn eval_with_derivative<F: Field>(
    f: &F,
    g: &[Series<F::Elem>],
    w: &Series<F::Elem>,
    prec: i64,
) -> (Series<F::Elem>, Series<F::Elem>) {
    let mut val = Series::zero(prec);
    let mut der = Series::zero(prec);
    for gj in g.iter().rev() {
        der = der.mul(f, w).add(f, &val).truncate(f, prec);
        val = val.mul(f, w).add(f, &gj.truncate(f, prec)).truncate(f, prec);
    }
    (val, der)
}

impl<E: Clone + PartialEq> Series<E> {
    /// Treats the known coefficients as exact and extends the precision to `prec`.
    pub fn pad<F: Field<Elem = E>>(&self, f: &F, prec: i64) -> Self {
        if prec <= self.precision() {
            return self.truncate(f, prec);
        }
        let start = self.valuation().unwrap_or(0).min(prec);
        let coeffs = (start..self.precision()).map(|n| self.coeff(f, n).unwrap()).collect();
        Series::from_coeffs(f, start, coeffs, prec)
    }
}

/// Which coordinate serves as the local parameter at an affine point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum LocalParameter {
    /// `t = x - x(P)`
    X,
    /// `t = y - y(P)`
    Y,
}

/// Evaluates `sum c x^i y^j` at a point.
pub fn eval_terms<F: Field>(f: &F, terms: &[(u32, u32, F::Elem)], x: &F::Elem, y: &F::Elem) -> F::Elem {
    terms
        .iter()
        .fold(f.zero(), |acc, (i, j, c)| f.add(&acc, &f.mul(c, &f.mul(&f.pow(x, *i as u64), &f.pow(y, *j as u64)))))
}

fn partial<F: Field>(f: &F, terms: &[(u32, u32, F::Elem)], wrt_y: bool) -> Vec<(u32, u32, F::Elem)> {
    terms
        .iter()
        .filter_map(|(i, j, c)| {
            let (e, rest) = if wrt_y { (*j, (*i, j.wrapping_sub(1))) } else { (*i, (i.wrapping_sub(1), *j)) };
            if e == 0 {
                return None;
            }
            let c = f.mul(c, &f.from_u64(e as u64));
            (!f.is_zero(&c)).then_some((rest.0, rest.1, c))
        })
        .collect()
}

/// Local expansion `(X(t), Y(t))` of the plane curve `sum c x^i y^j = 0` at
/// the nonsingular point `(x0, y0)`.
pub fn expand_affine<F: Field>(
    f: &F,
    terms: &[(u32, u32, F::Elem)],
    x0: &F::Elem,
    y0: &F::Elem,
    prec: i64,
) -> Result<(Series<F::Elem>, Series<F::Elem>, LocalParameter)> {
    if !f.is_zero(&eval_terms(f, terms, x0, y0)) {
        return Err(invalid("point is not on the curve"));
    }
    let fy = eval_terms(f, &partial(f, terms, true), x0, y0);
    let fx = eval_terms(f, &partial(f, terms, false), x0, y0);
    let (param, swapped) = if !f.is_zero(&fy) {
        (LocalParameter::X, false)
    } else if !f.is_zero(&fx) {
        (LocalParameter::Y, true)
    } else {
        return Err(Error::SingularPoint);
    };
    let (a0, b0) = if swapped { (y0, x0) } else { (x0, y0) };
    // G(t, W) = F(a0 + t, W) with the roles of x and y swapped if needed
    let deg_w = terms.iter().map(|(i, j, _)| if swapped { *i } else { *j }).max().unwrap_or(0);
    let mut g: Vec<Poly<F::Elem>> = vec![Poly::zero(); deg_w as usize + 1];
    let shifted = Poly::new(f, vec![a0.clone(), f.one()]);
    let mut shifted_pows: Vec<Poly<F::Elem>> = vec![Poly::one(f)];
    for (i, j, c) in terms {
        let (e_t, e_w) = if swapped { (*j, *i) } else { (*i, *j) };
        while shifted_pows.len() <= e_t as usize {
            let next = shifted_pows.last().unwrap().mul(f, &shifted);
            shifted_pows.push(next);
        }
        let term = shifted_pows[e_t as usize].scale(f, c);
        g[e_w as usize] = g[e_w as usize].add(f, &term);
    }
    let g: Vec<Series<F::Elem>> = g.iter().map(|p| Series::from_poly(f, p, prec)).collect();
    let w = hensel_lift(f, &g, b0.clone(), prec)?;
    let t = Series::from_coeffs(f, 0, vec![a0.clone(), f.one()], prec);
    Ok(if swapped { (w, t, param) } else { (t, w, param) })
}
