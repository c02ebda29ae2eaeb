//! Sparse bivariate polynomials over a finite field.

use std::collections::BTreeMap;

use crate::arith::binom_mod_p;
use crate::gf::{Embedding, Fe, Gf};

use super::poly::Poly;

/// `sum c_(i,j) x^i y^j`, zero coefficients never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Fe>,
}

/// Which variable an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(gf: &Gf, terms: impl IntoIterator<Item = (u32, u32, Fe)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(gf, i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, gf: &Gf, i: u32, j: u32, c: Fe) {
        let e = self.terms.entry((i, j)).or_insert(Fe::ZERO);
        *e = gf.add(*e, c);
        if *e == Fe::ZERO {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, Fe)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn term_list(&self) -> Vec<(u32, u32, Fe)> {
        self.terms().collect()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Fe {
        self.terms.get(&(i, j)).copied().unwrap_or(Fe::ZERO)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms().map(|(i, j, _)| if v == Var::X { i } else { j }).max().unwrap_or(0)
    }

    pub fn eval(&self, gf: &Gf, x: Fe, y: Fe) -> Fe {
        self.terms()
            .fold(Fe::ZERO, |acc, (i, j, c)| gf.add(acc, gf.mul(c, gf.mul(gf.pow(x, i as u64), gf.pow(y, j as u64)))))
    }

    /// Hasse derivative `D^k` with respect to one variable.
    pub fn hasse_derivative(&self, gf: &Gf, k: u32, v: Var) -> BiPoly {
        let p = gf.p();
        let mut out = BiPoly::zero();
        for (i, j, c) in self.terms() {
            let e = if v == Var::X { i } else { j };
            if e < k {
                continue;
            }
            let b = binom_mod_p(e as u64, k as u64, p);
            if b == 0 {
                continue;
            }
            let (ni, nj) = if v == Var::X { (i - k, j) } else { (i, j - k) };
            out.add_term(gf, ni, nj, gf.mul(c, Fe(b as u32)));
        }
        out
    }

    pub fn partial(&self, gf: &Gf, v: Var) -> BiPoly {
        self.hasse_derivative(gf, 1, v)
    }

    /// Coefficients mapped into a larger field.
    pub fn map_coeffs(&self, emb: &Embedding) -> BiPoly {
        let gf = emb.target();
        BiPoly::from_terms(gf, self.terms().map(|(i, j, c)| (i, j, emb.map(c))))
    }

    /// `F(x0, y)` as a polynomial in `y`.
    pub fn specialize_x(&self, gf: &Gf, x0: Fe) -> Poly<Fe> {
        let mut v = vec![Fe::ZERO; self.degree_in(Var::Y) as usize + 1];
        for (i, j, c) in self.terms() {
            v[j as usize] = gf.add(v[j as usize], gf.mul(c, gf.pow(x0, i as u64)));
        }
        Poly::new(gf, v)
    }

    /// `F(x, y0)` as a polynomial in `x`.
    pub fn specialize_y(&self, gf: &Gf, y0: Fe) -> Poly<Fe> {
        let mut v = vec![Fe::ZERO; self.degree_in(Var::X) as usize + 1];
        for (i, j, c) in self.terms() {
            v[i as usize] = gf.add(v[i as usize], gf.mul(c, gf.pow(y0, j as u64)));
        }
        Poly::new(gf, v)
    }

    /// Splits `F = A(x) + B(y)` when there are no mixed terms; the constant goes to `A`.
    pub fn separated(&self, gf: &Gf) -> Option<(Poly<Fe>, Poly<Fe>)> {
        if self.terms().any(|(i, j, _)| i > 0 && j > 0) {
            return None;
        }
        let mut a = vec![Fe::ZERO; self.degree_in(Var::X) as usize + 1];
        let mut b = vec![Fe::ZERO; self.degree_in(Var::Y) as usize + 1];
        for (i, j, c) in self.terms() {
            if j == 0 {
                a[i as usize] = c;
            } else {
                b[j as usize] = c;
            }
        }
        Some((Poly::new(gf, a), Poly::new(gf, b)))
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), &c)| ((j, i), c)).collect() }
    }
}
