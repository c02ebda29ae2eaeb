//! Dense univariate polynomials over any [`Field`].

use crate::arith::binom_mod_p;
use crate::field::Field;
use crate::gf::{Fe, Gf};

/// Dense polynomial, little-endian, with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn new<F: Field<Elem = E>>(f: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn one<F: Field<Elem = E>>(f: &F) -> Self {
        Poly { coeffs: vec![f.one()] }
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, c: E) -> Self {
        Self::new(f, vec![c])
    }

    /// `c * x^n`.
    pub fn monomial<F: Field<Elem = E>>(f: &F, c: E, n: usize) -> Self {
        if f.is_zero(&c) {
            return Self::zero();
        }
        let mut v = vec![f.zero(); n + 1];
        v[n] = c;
        Poly { coeffs: v }
    }

    pub fn x<F: Field<Elem = E>>(f: &F) -> Self {
        Self::monomial(f, f.one(), 1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, f: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn is_one<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.coeffs.len() == 1 && f.is_one(&self.coeffs[0])
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| f.add(&self.coeff(f, i), &o.coeff(f, i))).collect();
        Self::new(f, v)
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| f.sub(&self.coeff(f, i), &o.coeff(f, i))).collect();
        Self::new(f, v)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![f.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = f.add(&v[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, v)
    }

    /// `x^k * self`.
    pub fn shift<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![f.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Option<(Self, Self)> {
        let dl = d.lead()?;
        let inv = f.inv(dl)?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(&r[i + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = f.sub(&r[i + j], &f.mul(&c, dc));
            }
            q[i] = c;
        }
        r.truncate(dd);
        Some((Self::new(f, q), Self::new(f, r)))
    }

    pub fn rem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Self {
        self.divrem(f, d).expect("division by zero polynomial").1
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(f, &f.inv(l).expect("nonzero lead")),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd<F: Field<Elem = E>>(f: &F, a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd<F: Field<Elem = E>>(f: &F, a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1).unwrap();
            let s = s0.sub(f, &q.mul(f, &s1));
            let t = t0.sub(f, &q.mul(f, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(&l).unwrap();
                (r0.scale(f, &inv), s0.scale(f, &inv), t0.scale(f, &inv))
            }
        }
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: &E) -> E {
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.hasse_derivative(f, 1)
    }

    /// `D^k`: sends `x^n` to `binom(n, k) x^(n-k)`, binomials reduced mod p.
    pub fn hasse_derivative<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let p = f.characteristic();
        let v = (k..self.coeffs.len())
            .map(|n| {
                let b = binom_mod_p(n as u64, k as u64, p);
                f.mul(&f.from_u64(b), &self.coeffs[n])
            })
            .collect();
        Self::new(f, v)
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, mut e: u64) -> Self {
        let mut acc = Self::one(f);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(f, &b);
            }
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod<F: Field<Elem = E>>(&self, f: &F, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::one(f).rem(f, m);
        let mut b = self.rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &b).rem(f, m);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(f, &b).rem(f, m);
            }
        }
        acc
    }

    /// `self(g)`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| acc.mul(f, g).add(f, &Self::constant(f, c.clone())))
    }

    /// `self(x + a)`.
    pub fn translate<F: Field<Elem = E>>(&self, f: &F, a: &E) -> Self {
        self.compose(f, &Self::new(f, vec![a.clone(), f.one()]))
    }

    pub fn map<G: Field>(&self, g: &G, mut m: impl FnMut(&E) -> G::Elem) -> Poly<G::Elem> {
        Poly::new(g, self.coeffs.iter().map(&mut m).collect())
    }
}

/// Reduces `f(y)` modulo `y^big_q - y`, using `y^e = y^((e-1) mod (big_q-1) + 1)` for `e >= 1`.
pub fn poly_mod_reduce(gf: &Gf, f: &Poly<Fe>, big_q: u64) -> Poly<Fe> {
    let bound = big_q as usize;
    if f.coeffs().len() <= bound {
        return f.clone();
    }
    let mut v = vec![Fe::ZERO; bound];
    for (e, &c) in f.coeffs().iter().enumerate() {
        let r = if e == 0 { 0 } else { (e - 1) % (bound - 1) + 1 };
        v[r] = gf.add(v[r], c);
    }
    Poly::new(gf, v)
}

/// Distinct roots of `f` lying in `gf`, in increasing index order.
pub fn roots(gf: &Gf, f: &Poly<Fe>) -> Vec<Fe> {
    let Some(deg) = f.degree() else {
        return gf.elements().collect();
    };
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        let c = f.coeffs();
        return vec![gf.neg(gf.div(c[0], c[1]).unwrap())];
    }
    let y = Poly::x(gf);
    let yq = y.powmod(gf, gf.order(), f);
    let split = Poly::gcd(gf, f, &yq.sub(gf, &y));
    let mut out = Vec::new();
    split_linear(gf, &split, &mut out);
    out.sort();
    out
}

/// Splits a squarefree product of distinct linear factors.
fn split_linear(gf: &Gf, g: &Poly<Fe>, out: &mut Vec<Fe>) {
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            let c = g.coeffs();
            out.push(gf.neg(gf.div(c[0], c[1]).unwrap()));
            return;
        }
        _ => {}
    }
    let y = Poly::x(gf);
    // Deterministic sequence of splitting attempts.
    for i in 0..gf.order() {
        let h = if gf.p() == 2 {
            // absolute trace of a*y
            let a = gf.exp(i);
            let mut acc = Poly::zero();
            let mut term = y.scale(gf, &a).rem(gf, g);
            for _ in 0..gf.degree() {
                acc = acc.add(gf, &term);
                term = term.mul(gf, &term).rem(gf, g);
            }
            acc
        } else {
            let shifted = Poly::new(gf, vec![Fe(i as u32), Fe::ONE]);
            shifted.powmod(gf, (gf.order() - 1) / 2, g).sub(gf, &Poly::one(gf))
        };
        let d = Poly::gcd(gf, g, &h);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && dd < g.degree().unwrap() {
            split_linear(gf, &d, out);
            split_linear(gf, &g.divrem(gf, &d).unwrap().0, out);
            return;
        }
    }
    unreachable!("deterministic splitting exhausted all shifts");
}
