//! The rational function field `k(x)` and algebraic extensions
//! `k(x)[y]/(F)`, used to evaluate Wronskians at the generic point.

use crate::field::Field;
use crate::gf::{Fe, Gf};

use super::poly::Poly;

/// `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn {
    num: Poly<Fe>,
    den: Poly<Fe>,
}

impl RatFn {
    pub fn num(&self) -> &Poly<Fe> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Fe> {
        &self.den
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RatFnField {
    base: &'static Gf,
}

impl RatFnField {
    pub fn new(base: &'static Gf) -> Self {
        RatFnField { base }
    }

    pub fn base(&self) -> &'static Gf {
        self.base
    }

    pub fn from_poly(&self, p: Poly<Fe>) -> RatFn {
        RatFn { num: p, den: Poly::one(self.base) }
    }

    pub fn constant(&self, c: Fe) -> RatFn {
        self.from_poly(Poly::constant(self.base, c))
    }

    pub fn x(&self) -> RatFn {
        self.from_poly(Poly::x(self.base))
    }

    pub fn make(&self, num: Poly<Fe>, den: Poly<Fe>) -> Option<RatFn> {
        let k = self.base;
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(self.zero());
        }
        let g = Poly::gcd(k, &num, &den);
        let (num, den) =
            if g.is_one(k) { (num, den) } else { (num.divrem(k, &g).unwrap().0, den.divrem(k, &g).unwrap().0) };
        let l = k.inv(*den.lead().unwrap()).unwrap();
        Some(RatFn { num: num.scale(k, &l), den: den.scale(k, &l) })
    }

    /// Value at `x = a`, or `None` at a pole.
    pub fn eval(&self, r: &RatFn, a: Fe) -> Option<Fe> {
        let k = self.base;
        k.div(r.num.eval(k, &a), r.den.eval(k, &a))
    }
}

impl Field for RatFnField {
    type Elem = RatFn;

    fn zero(&self) -> RatFn {
        RatFn { num: Poly::zero(), den: Poly::one(self.base) }
    }
    fn one(&self) -> RatFn {
        RatFn { num: Poly::one(self.base), den: Poly::one(self.base) }
    }
    fn is_zero(&self, a: &RatFn) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let k = self.base;
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            return self.make(a.num.add(k, &b.num), a.den.clone()).unwrap();
        }
        let num = a.num.mul(k, &b.den).add(k, &b.num.mul(k, &a.den));
        self.make(num, a.den.mul(k, &b.den)).unwrap()
    }
    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &RatFn) -> RatFn {
        RatFn { num: a.num.neg(self.base), den: a.den.clone() }
    }
    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let k = self.base;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = Poly::gcd(k, &a.num, &b.den);
        let g2 = Poly::gcd(k, &b.num, &a.den);
        let an = a.num.divrem(k, &g1).unwrap().0;
        let bd = b.den.divrem(k, &g1).unwrap().0;
        let bn = b.num.divrem(k, &g2).unwrap().0;
        let ad = a.den.divrem(k, &g2).unwrap().0;
        let num = an.mul(k, &bn);
        let den = ad.mul(k, &bd);
        let l = k.inv(*den.lead().unwrap()).unwrap();
        RatFn { num: num.scale(k, &l), den: den.scale(k, &l) }
    }
    fn inv(&self, a: &RatFn) -> Option<RatFn> {
        if a.num.is_zero() {
            return None;
        }
        self.make(a.den.clone(), a.num.clone())
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    fn from_u64(&self, n: u64) -> RatFn {
        self.constant(Field::from_u64(self.base, n))
    }
}

/// `k(x)[y] / (modulus)` with `modulus` monic in `y` and assumed irreducible.
#[derive(Clone, Debug)]
pub struct FunctionField {
    rf: RatFnField,
    modulus: Poly<RatFn>,
}

impl FunctionField {
    /// Builds the extension from the terms of `F(x, y)`; the leading
    /// coefficient in `y` is divided out.
    pub fn from_terms(base: &'static Gf, terms: &[(u32, u32, Fe)]) -> Option<Self> {
        let rf = RatFnField::new(base);
        let deg_y = terms.iter().map(|t| t.1).max()? as usize;
        let mut coeffs: Vec<Poly<Fe>> = vec![Poly::zero(); deg_y + 1];
        for &(i, j, c) in terms {
            coeffs[j as usize] = coeffs[j as usize].add(base, &Poly::monomial(base, c, i as usize));
        }
        if deg_y == 0 || coeffs[deg_y].is_zero() {
            return None;
        }
        let lead = rf.from_poly(coeffs[deg_y].clone());
        let lead_inv = rf.inv(&lead)?;
        let modulus = Poly::new(&rf, coeffs.into_iter().map(|p| rf.mul(&rf.from_poly(p), &lead_inv)).collect());
        Some(FunctionField { rf, modulus })
    }

    pub fn rational_field(&self) -> &RatFnField {
        &self.rf
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn x(&self) -> Poly<RatFn> {
        Poly::constant(&self.rf, self.rf.x())
    }

    pub fn y(&self) -> Poly<RatFn> {
        Poly::x(&self.rf).rem(&self.rf, &self.modulus)
    }

    pub fn embed(&self, c: Fe) -> Poly<RatFn> {
        Poly::constant(&self.rf, self.rf.constant(c))
    }
}

impl Field for FunctionField {
    type Elem = Poly<RatFn>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        Poly::one(&self.rf)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(&self.rf, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(&self.rf, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(&self.rf)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(&self.rf, b).rem(&self.rf, &self.modulus)
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = Poly::ext_gcd(&self.rf, a, &self.modulus);
        g.is_one(&self.rf).then_some(s.rem(&self.rf, &self.modulus))
    }
    fn characteristic(&self) -> u64 {
        self.rf.characteristic()
    }
    fn from_u64(&self, n: u64) -> Self::Elem {
        Poly::constant(&self.rf, self.rf.from_u64(n))
    }
}
