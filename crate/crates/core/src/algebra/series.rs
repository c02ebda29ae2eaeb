//! Truncated Laurent series `t^val * (c_0 + c_1 t + ...) + O(t^prec)`.

use crate::arith::binom_mod_p_signed;
use crate::error::{Error, Result};
use crate::field::Field;

use super::poly::Poly;

/// A series known modulo `t^prec`, where `prec = val + coeffs.len()`.
///
/// When nonzero to the known precision, `coeffs[0]` is nonzero. A series
/// that vanishes to its precision has empty `coeffs` and `val == prec`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<E> {
    val: i64,
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Series<E> {
    /// `O(t^prec)`.
    pub fn zero(prec: i64) -> Self {
        Series { val: prec, coeffs: Vec::new() }
    }

    /// Coefficients of `t^start, t^(start+1), ...`, truncated at `prec`.
    pub fn from_coeffs<F: Field<Elem = E>>(f: &F, start: i64, coeffs: Vec<E>, prec: i64) -> Self {
        let mut s = Series { val: start, coeffs };
        let keep = (prec - start).max(0) as usize;
        s.coeffs.truncate(keep);
        if s.val + (s.coeffs.len() as i64) < prec {
            let pad = (prec - s.val - s.coeffs.len() as i64) as usize;
            s.coeffs.extend(std::iter::repeat_n(f.zero(), pad));
        }
        s.normalize(f);
        if s.coeffs.is_empty() {
            s.val = prec;
        }
        s
    }

    pub fn from_poly<F: Field<Elem = E>>(f: &F, p: &Poly<E>, prec: i64) -> Self {
        Self::from_coeffs(f, 0, p.coeffs().to_vec(), prec)
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, c: E, prec: i64) -> Self {
        Self::from_coeffs(f, 0, vec![c], prec)
    }

    pub fn one<F: Field<Elem = E>>(f: &F, prec: i64) -> Self {
        Self::constant(f, f.one(), prec)
    }

    /// `c t^n + O(t^prec)`.
    pub fn monomial<F: Field<Elem = E>>(f: &F, c: E, n: i64, prec: i64) -> Self {
        Self::from_coeffs(f, n, vec![c], prec)
    }

    fn normalize<F: Field<Elem = E>>(&mut self, f: &F) {
        let lead = self.coeffs.iter().take_while(|c| f.is_zero(c)).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
    }

    pub fn precision(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    /// `None` when the series vanishes to its known precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^n`; `None` when `n` is at or beyond the precision.
    pub fn coeff<F: Field<Elem = E>>(&self, f: &F, n: i64) -> Option<E> {
        if n >= self.precision() {
            None
        } else if n < self.val {
            Some(f.zero())
        } else {
            Some(self.coeffs[(n - self.val) as usize].clone())
        }
    }

    /// Leading coefficient when nonzero.
    pub fn lead(&self) -> Option<&E> {
        self.coeffs.first()
    }

    pub fn truncate<F: Field<Elem = E>>(&self, f: &F, prec: i64) -> Self {
        if prec >= self.precision() {
            return self.clone();
        }
        Self::from_coeffs(f, self.val, self.coeffs.clone(), prec)
    }

    /// `t^k * self`.
    pub fn shift(&self, k: i64) -> Self {
        Series { val: self.val + k, coeffs: self.coeffs.clone() }
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Series { val: self.val, coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        if f.is_zero(c) {
            return Self::zero(self.precision());
        }
        Series { val: self.val, coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect() }
    }

    fn combine<F: Field<Elem = E>>(&self, f: &F, o: &Self, op: impl Fn(&E, &E) -> E) -> Self {
        let prec = self.precision().min(o.precision());
        let start = self.val.min(o.val).min(prec);
        let v = (start..prec).map(|n| op(&self.coeff(f, n).unwrap(), &o.coeff(f, n).unwrap())).collect();
        Self::from_coeffs(f, start, v, prec)
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        self.combine(f, o, |a, b| f.add(a, b))
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        self.combine(f, o, |a, b| f.sub(a, b))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return Self::zero(self.val + o.val),
            (true, false) => return Self::zero(self.val + o.val),
            (false, true) => return Self::zero(self.val + o.val),
            _ => {}
        }
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut v = vec![f.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                v[i + j] = f.add(&v[i + j], &f.mul(a, b));
            }
        }
        Series { val: self.val + o.val, coeffs: v }
    }

    /// Multiplicative inverse; fails when the series vanishes to its precision.
    pub fn inv<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        let Some(c0) = self.coeffs.first() else {
            return Err(Error::InsufficientPrecision { needed: self.val + 1, available: self.val });
        };
        let c0i = f.inv(c0).ok_or_else(|| Error::CheckFailed("non-invertible lead".into()))?;
        let n = self.coeffs.len();
        let mut out: Vec<E> = Vec::with_capacity(n);
        out.push(c0i.clone());
        for k in 1..n {
            let mut acc = f.zero();
            for i in 1..=k {
                acc = f.add(&acc, &f.mul(&self.coeffs[i], &out[k - i]));
            }
            out.push(f.neg(&f.mul(&acc, &c0i)));
        }
        Ok(Series { val: -self.val, coeffs: out })
    }

    pub fn div<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Result<Self> {
        Ok(self.mul(f, &o.inv(f)?))
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, mut e: u64) -> Self {
        let mut acc = Self::one(f, self.relative_precision() as i64);
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

    /// Number of known coefficients past the valuation.
    pub fn relative_precision(&self) -> usize {
        self.coeffs.len()
    }

    /// `D^k` in `t`: sends `t^n` to `binom(n, k) t^(n-k)` (generalized binomial for `n < 0`).
    pub fn hasse_derivative<F: Field<Elem = E>>(&self, f: &F, k: u64) -> Self {
        let p = f.characteristic();
        let prec = self.precision() - k as i64;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let n = self.val + i as i64;
                f.mul(&f.from_u64(binom_mod_p_signed(n, k, p)), c)
            })
            .collect();
        Self::from_coeffs(f, self.val - k as i64, v, prec)
    }

    /// Substitutes this series into a polynomial; expects nonnegative valuation.
    pub fn compose_into<F: Field<Elem = E>>(&self, f: &F, p: &Poly<E>) -> Self {
        let prec = self.precision().max(0);
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(prec), |acc, c| acc.mul(f, self).add(f, &Self::constant(f, c.clone(), prec)))
    }

    /// Applies a coefficient map (e.g. an embedding).
    pub fn map<G: Field>(&self, g: &G, m: impl Fn(&E) -> G::Elem) -> Series<G::Elem> {
        let prec = self.precision();
        Series::from_coeffs(g, self.val, self.coeffs.iter().map(m).collect(), prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{make_field, Fe};
    use proptest::prelude::*;

    fn ser(c: &[u32], prec: i64) -> Series<Fe> {
        let gf = make_field(5, 2).unwrap();
        Series::from_coeffs(gf, 0, c.iter().map(|&i| Fe(i)).collect(), prec)
    }

    #[test]
    fn inverse_of_one_minus_t() {
        let gf = make_field(5, 1).unwrap();
        let s = Series::from_coeffs(gf, 0, vec![Fe(1), Fe(4)], 6);
        let inv = s.inv(gf).unwrap();
        assert_eq!(inv, Series::from_coeffs(gf, 0, vec![Fe(1); 6], 6));
        let laurent = s.shift(2).inv(gf).unwrap();
        assert_eq!(laurent.valuation(), Some(-2));
        assert_eq!(laurent.precision(), 4);
    }

    #[test]
    fn precision_tracking() {
        let gf = make_field(5, 2).unwrap();
        let a = ser(&[0, 0, 1], 3); // t^2 + O(t^3)
        assert_eq!(a.valuation(), Some(2));
        let b = ser(&[1, 2, 3, 4], 10);
        assert_eq!(a.mul(gf, &b).precision(), 3);
        assert_eq!(a.add(gf, &b).precision(), 3);
        let z = Series::<Fe>::zero(4);
        assert_eq!(z.mul(gf, &a).precision(), 6);
        assert!(a.sub(gf, &a).is_zero());
        assert_eq!(a.hasse_derivative(gf, 2).coeff(gf, 0), Some(Fe(1)));
    }

    #[test]
    fn hasse_of_laurent_term() {
        // D^1 t^-1 = -t^-2
        let gf = make_field(7, 1).unwrap();
        let s = Series::monomial(gf, Fe(1), -1, 5);
        let d = s.hasse_derivative(gf, 1);
        assert_eq!(d.valuation(), Some(-2));
        assert_eq!(d.lead(), Some(&Fe(6)));
        assert_eq!(d.precision(), 4);
    }

    proptest! {
        #[test]
        fn product_matches_polynomial_product(
            a in proptest::collection::vec(0u32..25, 1..10),
            b in proptest::collection::vec(0u32..25, 1..10),
            prec in 1i64..12,
        ) {
            let gf = make_field(5, 2).unwrap();
            let pa = Poly::new(gf, a.iter().map(|&i| Fe(i)).collect());
            let pb = Poly::new(gf, b.iter().map(|&i| Fe(i)).collect());
            let prod = Series::from_poly(gf, &pa, prec).mul(gf, &Series::from_poly(gf, &pb, prec));
            let direct = Series::from_poly(gf, &pa.mul(gf, &pb), prec);
            // the product is at least as precise as requested and agrees on the overlap
            for n in 0..prod.precision().min(prec) {
                prop_assert_eq!(prod.coeff(gf, n), direct.coeff(gf, n));
            }
            if !pa.is_zero() && !pb.is_zero() && pa.coeff(gf, 0) != Fe(0) && pb.coeff(gf, 0) != Fe(0) {
                prop_assert_eq!(prod.precision(), prec);
            }
        }

        #[test]
        fn inverse_times_self_is_one(a in proptest::collection::vec(1u32..25, 1..10), prec in 1i64..12) {
            let gf = make_field(5, 2).unwrap();
            let s = ser(&a, prec);
            let one = s.mul(gf, &s.inv(gf).unwrap());
            prop_assert_eq!(one.precision(), prec);
            prop_assert_eq!(one, Series::one(gf, prec));
        }
    }
}
