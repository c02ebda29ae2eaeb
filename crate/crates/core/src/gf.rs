//! Finite fields `F_{p^k}` in polynomial-basis representation.
//!
//! An element is stored as its integer index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_0 + c_1 x + ...` is its residue modulo the field's defining
//! polynomial. Multiplication goes through discrete-log tables built from the
//! smallest primitive element; addition in odd characteristic uses a Zech
//! logarithm table, and in characteristic two is a plain XOR of indices.
//!
//! Fields are interned: [`make_field`] returns the same `&'static Gf` for
//! equal `(p, k)`, so element indices are stable across the process.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use crate::arith::{is_prime, mod_pow, prime_divisors};
use crate::error::{invalid, Error, Result};
use crate::field::Field;

/// Default cap on `p^k`.
pub const DEFAULT_FIELD_BUDGET: u64 = 1 << 20;

static FIELD_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_FIELD_BUDGET);

pub fn field_budget() -> u64 {
    FIELD_BUDGET.load(Ordering::Relaxed)
}

/// Overrides the maximum field size accepted by [`make_field`].
pub fn set_field_budget(budget: u64) {
    FIELD_BUDGET.store(budget.min(u32::MAX as u64), Ordering::Relaxed);
}

const NONE: u32 = u32::MAX;

/// Element of some [`Gf`], identified by its integer index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Field descriptor plus arithmetic tables.
pub struct Gf {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    primitive: Fe,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg_one_log: u32,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} (modulus {:?})", self.p, self.k, self.modulus)
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for Gf {}

fn registry() -> &'static Mutex<HashMap<(u32, u32), &'static Gf>> {
    static REG: OnceLock<Mutex<HashMap<(u32, u32), &'static Gf>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

/// Returns the interned field `F_{p^k}`.
pub fn make_field(p: u64, k: u32) -> Result<&'static Gf> {
    make_field_with_budget(p, k, field_budget())
}

pub fn make_field_with_budget(p: u64, k: u32, budget: u64) -> Result<&'static Gf> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(invalid("extension degree must be positive"));
    }
    let size = p.checked_pow(k).filter(|&s| s <= budget && s <= u32::MAX as u64 / 2).ok_or(Error::BudgetExceeded {
        p,
        k,
        budget,
    })?;
    let key = (p as u32, k);
    if let Some(f) = registry().lock().unwrap().get(&key) {
        return Ok(f);
    }
    // Built outside the lock; a concurrent builder produces an identical
    // value and the first insert wins.
    let built = Gf::build(p as u32, k, size as u32);
    let mut reg = registry().lock().unwrap();
    Ok(*reg.entry(key).or_insert_with(|| Box::leak(Box::new(built))))
}

// ---- arithmetic on coefficient vectors over Z/p, used only while building ----

fn zp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a * b mod f` with `f` monic.
fn zp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    zp_rem(prod, f, p)
}

fn zp_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let k = f.len() - 1;
    zp_trim(&mut a);
    while a.len() > k {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - k;
        for (i, &c) in f.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - lead * c % p) % p;
        }
        zp_trim(&mut a);
    }
    a
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    zp_trim(&mut a);
    zp_trim(&mut b);
    while !b.is_empty() {
        let inv = mod_pow(*b.last().unwrap(), p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        let r = zp_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

fn zp_pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = zp_rem(base.to_vec(), f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = zp_mulmod(&acc, &b, f, p);
        }
        e >>= 1;
        if e > 0 {
            b = zp_mulmod(&b, &b, f, p);
        }
    }
    acc
}

/// `x^(p^j) - x mod f`.
fn zp_frob_minus_x(f: &[u64], p: u64, j: u32) -> Vec<u64> {
    let mut h = zp_rem(vec![0, 1], f, p);
    for _ in 0..j {
        h = zp_pow_mod(&h, p, f, p);
    }
    h.resize(h.len().max(2), 0);
    h[1] = (h[1] + p - 1) % p;
    zp_trim(&mut h);
    h
}

/// Rabin's irreducibility test.
fn zp_is_irreducible(f: &[u64], p: u64) -> bool {
    let k = (f.len() - 1) as u32;
    if k == 1 {
        return true;
    }
    if !zp_frob_minus_x(f, p, k).is_empty() {
        return false;
    }
    prime_divisors(k as u64).into_iter().all(|l| {
        let h = zp_frob_minus_x(f, p, k / l as u32);
        zp_gcd(&h, f, p).len() == 1
    })
}

/// Lexicographically smallest monic irreducible of degree `k`, ordered by the
/// integer encoding of its lower coefficients.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    for tail in 0..count {
        let mut f = digits_of(tail, p, k as usize);
        f.push(1);
        if zp_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn digits_of(mut n: u64, p: u64, k: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(k);
    for _ in 0..k {
        d.push(n % p);
        n /= p;
    }
    d
}

fn index_of(d: &[u64], p: u64) -> u32 {
    d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

impl Gf {
    fn build(p: u32, k: u32, order: u32) -> Gf {
        let (p64, ku) = (p as u64, k as usize);
        let modulus = smallest_irreducible(p64, k);
        let n = (order - 1) as u64;

        let is_one = |v: &[u64]| {
            let mut v = v.to_vec();
            zp_trim(&mut v);
            v == [1]
        };
        let cofactors: Vec<u64> = prime_divisors(n).into_iter().map(|l| n / l).collect();
        let primitive = (1..order as u64)
            .find(|&idx| {
                let g = digits_of(idx, p64, ku);
                cofactors.iter().all(|&c| !is_one(&zp_pow_mod(&g, c, &modulus, p64)))
            })
            .expect("multiplicative group is cyclic");
        let g = digits_of(primitive, p64, ku);

        // Multiplication by the primitive element as a k x k matrix over Z/p.
        let cols: Vec<Vec<u64>> = (0..ku)
            .map(|j| {
                let mut xj = vec![0u64; j + 1];
                xj[j] = 1;
                let mut c = zp_mulmod(&xj, &g, &modulus, p64);
                c.resize(ku, 0);
                c
            })
            .collect();
        let masks: Vec<u32> = cols.iter().map(|c| index_of(c, 2)).collect();

        let mut exp = vec![0u32; n as usize];
        let mut log = vec![NONE; order as usize];
        let mut cur = vec![0u64; ku];
        cur[0] = 1;
        let mut cur_bits = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            let idx = if p == 2 { cur_bits } else { index_of(&cur, p64) };
            *slot = idx;
            log[idx as usize] = i as u32;
            if p == 2 {
                let mut next = 0u32;
                let mut bits = cur_bits;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    next ^= masks[j];
                    bits &= bits - 1;
                }
                cur_bits = next;
            } else {
                let mut next = vec![0u64; ku];
                for (j, &a) in cur.iter().enumerate() {
                    if a != 0 {
                        for (o, &c) in next.iter_mut().zip(&cols[j]) {
                            *o = (*o + a * c) % p64;
                        }
                    }
                }
                cur = next;
            }
        }

        let zech = if p == 2 {
            Vec::new()
        } else {
            exp.iter()
                .map(|&v| {
                    let c0 = v % p;
                    let w = v - c0 + (c0 + 1) % p;
                    if w == 0 {
                        NONE
                    } else {
                        log[w as usize]
                    }
                })
                .collect()
        };
        let neg_one_log = if p == 2 { 0 } else { (n / 2) as u32 };

        Gf {
            p,
            k,
            order,
            modulus: modulus.into_iter().map(|c| c as u32).collect(),
            primitive: Fe(primitive as u32),
            exp,
            log,
            zech,
            neg_one_log,
        }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Monic defining polynomial, little-endian coefficients over `F_p`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Smallest-index generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    pub fn element(&self, index: u64) -> Result<Fe> {
        if index < self.order as u64 {
            Ok(Fe(index as u32))
        } else {
            Err(invalid(format!("index {index} outside F_{}", self.order)))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.order).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.order).map(Fe)
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        digits_of(a.0 as u64, self.p as u64, self.k as usize).into_iter().map(|d| d as u32).collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> Fe {
        let p = self.p as u64;
        Fe(d.iter().rev().fold(0u64, |acc, &c| acc * p + (c as u64 % p)) as u32)
    }

    fn n(&self) -> u64 {
        (self.order - 1) as u64
    }

    /// Discrete log to base [`Gf::primitive_element`]; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u64> {
        (a.0 != 0).then(|| self.log[a.0 as usize] as u64)
    }

    /// `xi^e` for the primitive element `xi`.
    pub fn exp(&self, e: u64) -> Fe {
        Fe(self.exp[(e % self.n()) as usize])
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.order - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NONE {
            return Fe(0);
        }
        let s = la as u64 + z as u64;
        Fe(self.exp[(s % n as u64) as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        let s = self.log[a.0 as usize] as u64 + self.neg_one_log as u64;
        Fe(self.exp[(s % self.n()) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        let s = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        let n = self.n();
        Fe(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    #[inline]
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let n = self.n();
        Some(Fe(self.exp[((n - self.log[a.0 as usize] as u64) % n) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe(1);
        }
        if a.0 == 0 {
            return Fe(0);
        }
        let n = self.n();
        let l = self.log[a.0 as usize] as u128 * (e % n) as u128;
        Fe(self.exp[(l % n as u128) as usize])
    }

    /// Signed exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, a: Fe, e: i64) -> Fe {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            let n = self.n() as i64;
            self.pow(a, e.rem_euclid(n) as u64)
        }
    }

    /// `a^(p^e)`.
    pub fn frobenius(&self, a: Fe, e: u64) -> Fe {
        if a.0 == 0 {
            return a;
        }
        self.pow(a, mod_pow(self.p as u64, e, self.n()))
    }

    /// `a^(q^e)` for a power `q` of the characteristic.
    pub fn pow_q(&self, a: Fe, q: u64, e: u64) -> Fe {
        if a.0 == 0 {
            return a;
        }
        self.pow(a, mod_pow(q, e, self.n()))
    }

    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Fe) -> Option<u64> {
        let l = self.log(a)?;
        let n = self.n();
        Some(n / crate::arith::gcd(l, n))
    }

    /// True when `a` lies in the subfield of degree `d` (requires `d | k`).
    pub fn in_subfield(&self, a: Fe, d: u32) -> bool {
        self.frobenius(a, d as u64) == a
    }

    /// Smallest `d` with `a^(p^d) = a`.
    pub fn element_degree(&self, a: Fe) -> u32 {
        (1..=self.k).find(|d| self.k.is_multiple_of(*d) && self.in_subfield(a, *d)).unwrap_or(self.k)
    }

    pub fn is_subfield_of(&self, other: &Gf) -> bool {
        self.p == other.p && other.k.is_multiple_of(self.k)
    }

    /// Trace of `a` down to `sub`, returned in `sub`'s own encoding.
    pub fn trace_to(&'static self, a: Fe, sub: &'static Gf) -> Result<Fe> {
        let t = self.relative_trace(a, sub.degree())?;
        embedding(sub, self)?.preimage(t).ok_or_else(|| Error::CheckFailed("trace left the subfield".into()))
    }

    /// Trace to the degree-`d` subfield, kept in this field's encoding.
    pub fn relative_trace(&self, a: Fe, d: u32) -> Result<Fe> {
        if d == 0 || !self.k.is_multiple_of(d) {
            return Err(Error::NotSubfield { p: self.p as u64, sub: d, sup: self.k });
        }
        let sub_size = (self.p as u64).pow(d);
        let mut acc = Fe(0);
        for i in 0..(self.k / d) as u64 {
            acc = self.add(acc, self.pow_q(a, sub_size, i));
        }
        Ok(acc)
    }

    /// Norm to the degree-`d` subfield, kept in this field's encoding.
    pub fn relative_norm(&self, a: Fe, d: u32) -> Result<Fe> {
        if d == 0 || !self.k.is_multiple_of(d) {
            return Err(Error::NotSubfield { p: self.p as u64, sub: d, sup: self.k });
        }
        let sub_size = (self.p as u64).pow(d);
        let mut acc = Fe(1);
        for i in 0..(self.k / d) as u64 {
            acc = self.mul(acc, self.pow_q(a, sub_size, i));
        }
        Ok(acc)
    }
}

impl Field for Gf {
    type Elem = Fe;

    fn zero(&self) -> Fe {
        Fe(0)
    }
    fn one(&self) -> Fe {
        Fe(1)
    }
    fn is_zero(&self, a: &Fe) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &Fe, b: &Fe) -> Fe {
        Gf::add(self, *a, *b)
    }
    fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        Gf::sub(self, *a, *b)
    }
    fn neg(&self, a: &Fe) -> Fe {
        Gf::neg(self, *a)
    }
    fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        Gf::mul(self, *a, *b)
    }
    fn inv(&self, a: &Fe) -> Option<Fe> {
        Gf::inv(self, *a)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn from_u64(&self, n: u64) -> Fe {
        Fe((n % self.p as u64) as u32)
    }
    fn pow(&self, a: &Fe, e: u64) -> Fe {
        Gf::pow(self, *a, e)
    }
}

/// Ring embedding of a subfield, fixed by the image of the source generator.
pub struct Embedding {
    source: &'static Gf,
    target: &'static Gf,
    generator_image: Fe,
    table: Vec<Fe>,
    reverse: HashMap<Fe, Fe>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({:?} -> {:?}, x -> {})", self.source, self.target, self.generator_image)
    }
}

fn embedding_cache() -> &'static Mutex<HashMap<(u32, u32, u32), &'static Embedding>> {
    static C: OnceLock<Mutex<HashMap<(u32, u32, u32), &'static Embedding>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Cached embedding `source -> target`, sending the source generator to the
/// smallest-index root of the source modulus.
pub fn embedding(source: &'static Gf, target: &'static Gf) -> Result<&'static Embedding> {
    if !source.is_subfield_of(target) {
        return Err(Error::NotSubfield { p: source.p(), sub: source.k, sup: target.k });
    }
    let key = (source.p, source.k, target.k);
    if let Some(e) = embedding_cache().lock().unwrap().get(&key) {
        return Ok(e);
    }
    let built = Embedding::build(source, target);
    let mut cache = embedding_cache().lock().unwrap();
    Ok(*cache.entry(key).or_insert_with(|| Box::leak(Box::new(built))))
}

impl Embedding {
    fn build(source: &'static Gf, target: &'static Gf) -> Embedding {
        let eval = |z: Fe| source.modulus.iter().rev().fold(Fe(0), |acc, &c| target.add(target.mul(acc, z), Fe(c)));
        let generator_image = if source.k == target.k {
            // identity: the generator x maps to x itself
            if source.k == 1 {
                Fe(0)
            } else {
                Fe(source.p)
            }
        } else {
            target.elements().find(|&z| eval(z) == Fe(0)).expect("subfield modulus splits")
        };
        let powers: Vec<Fe> = (0..source.k as u64).map(|i| target.pow(generator_image, i)).collect();
        let table: Vec<Fe> = source
            .elements()
            .map(|a| {
                source.digits(a).iter().zip(&powers).fold(Fe(0), |acc, (&c, &g)| target.add(acc, target.mul(Fe(c), g)))
            })
            .collect();
        let reverse = table.iter().enumerate().map(|(i, &t)| (t, Fe(i as u32))).collect();
        Embedding { source, target, generator_image, table, reverse }
    }

    pub fn source(&self) -> &'static Gf {
        self.source
    }

    pub fn target(&self) -> &'static Gf {
        self.target
    }

    pub fn generator_image(&self) -> Fe {
        self.generator_image
    }

    #[inline]
    pub fn map(&self, a: Fe) -> Fe {
        self.table[a.0 as usize]
    }

    pub fn preimage(&self, b: Fe) -> Option<Fe> {
        self.reverse.get(&b).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<&'static Gf> {
        let mut v = Vec::new();
        for p in [2u64, 3, 5, 7, 11, 13] {
            for k in 1..=8 {
                if p.pow(k) <= 256 {
                    v.push(make_field(p, k).unwrap());
                }
            }
        }
        v
    }

    /// Schoolbook multiplication of digit vectors, independent of the tables.
    fn slow_mul(f: &Gf, a: Fe, b: Fe) -> Fe {
        let p = f.p();
        let m: Vec<u64> = f.modulus().iter().map(|&c| c as u64).collect();
        let da: Vec<u64> = f.digits(a).into_iter().map(u64::from).collect();
        let db: Vec<u64> = f.digits(b).into_iter().map(u64::from).collect();
        let mut r = zp_mulmod(&da, &db, &m, p);
        r.resize(f.degree() as usize, 0);
        Fe(index_of(&r, p))
    }

    fn slow_add(f: &Gf, a: Fe, b: Fe) -> Fe {
        let p = f.p() as u32;
        let d: Vec<u32> = f.digits(a).iter().zip(f.digits(b)).map(|(x, y)| (x + y) % p).collect();
        f.from_digits(&d)
    }

    #[test]
    fn construction_contract() {
        let f81 = make_field(3, 4).unwrap();
        assert_eq!(f81.order(), 81);
        assert_eq!(f81.modulus().len(), 5);
        let m: Vec<u64> = f81.modulus().iter().map(|&c| c as u64).collect();
        assert!(zp_is_irreducible(&m, 3));
        assert!(std::ptr::eq(f81, make_field(3, 4).unwrap()));

        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        assert_eq!(make_field(4, 1), Err(Error::NotPrime(4)));
        assert!(matches!(make_field(2, 30), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn modulus_is_smallest_irreducible() {
        // x^2 + 1 is reducible over F_5 (2^2 = -1), x^2 + 2 is the first
        // irreducible tail.
        assert_eq!(make_field(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(make_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn fermat_in_f25() {
        let f = make_field(5, 2).unwrap();
        for a in f.elements() {
            let mut x = a;
            for _ in 0..25 - 1 {
                x = slow_mul(f, x, a);
            }
            assert_eq!(x, a);
        }
    }

    #[test]
    fn tables_agree_with_schoolbook() {
        for f in small_fields() {
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), slow_mul(f, a, b), "{f:?}");
                    assert_eq!(f.add(a, b), slow_add(f, a, b), "{f:?}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let els: Vec<Fe> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                if a != Fe::ZERO {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in els.iter().step_by(3) {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(make_field(2, 1).unwrap().primitive_element(), Fe(1));
        assert_eq!(make_field(5, 1).unwrap().primitive_element(), Fe(2));
        let f9 = make_field(3, 2).unwrap();
        let xi = f9.primitive_element();
        // brute-force order
        let mut x = xi;
        let mut ord = 1;
        while x != Fe::ONE {
            x = slow_mul(f9, x, xi);
            ord += 1;
        }
        assert_eq!(ord, 8);
        assert_eq!(f9.pow(xi, 4), f9.neg(Fe::ONE));
        for f in small_fields() {
            let xi = f.primitive_element();
            assert_eq!(f.multiplicative_order(xi), Some(f.order() - 1));
            // smallest such element
            for a in 1..xi.0 {
                assert!(f.multiplicative_order(Fe(a)).unwrap() < f.order() - 1);
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f25 = make_field(5, 2).unwrap();
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f25.trace_to(Fe::ONE, f5).unwrap(), Fe(2));
        assert_eq!(f25.trace_to(Fe::ZERO, f5).unwrap(), Fe(0));
        let mut fibers = [0usize; 5];
        for a in f25.elements() {
            fibers[f25.trace_to(a, f5).unwrap().0 as usize] += 1;
        }
        assert_eq!(fibers, [5; 5]);
        let f4 = make_field(2, 2).unwrap();
        assert!(f25.trace_to(Fe::ONE, f4).is_err());
    }

    #[test]
    fn trace_fibers_equal_and_linear() {
        for (p, k, d) in [(2u64, 4u32, 2u32), (2, 6, 3), (3, 4, 2), (2, 8, 4), (3, 2, 1)] {
            let f = make_field(p, k).unwrap();
            let sub = make_field(p, d).unwrap();
            let mut fibers = vec![0usize; sub.order() as usize];
            for a in f.elements() {
                fibers[f.trace_to(a, sub).unwrap().0 as usize] += 1;
            }
            assert!(fibers.iter().all(|&c| c as u64 == f.order() / sub.order()));
        }
    }

    #[test]
    fn frobenius_fixed_fields() {
        for f in small_fields() {
            for e in 1..=(2 * f.degree()) {
                let fixed = f.elements().filter(|&a| f.frobenius(a, e as u64) == a).count();
                let g = crate::arith::gcd(e as u64, f.degree() as u64) as u32;
                assert_eq!(fixed as u64, f.p().pow(g));
            }
            for a in f.elements().step_by(5) {
                for b in f.elements().step_by(7) {
                    assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                    assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
                }
            }
        }
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        for (p, ks, kt) in [(2u64, 2u32, 4u32), (3, 2, 4), (5, 2, 4), (2, 3, 6), (3, 1, 4)] {
            let s = make_field(p, ks).unwrap();
            let t = make_field(p, kt).unwrap();
            let e = embedding(s, t).unwrap();
            for a in s.elements() {
                for b in s.elements() {
                    assert_eq!(e.map(s.add(a, b)), t.add(e.map(a), e.map(b)));
                    assert_eq!(e.map(s.mul(a, b)), t.mul(e.map(a), e.map(b)));
                }
                assert_eq!(e.preimage(e.map(a)), Some(a));
                assert!(t.in_subfield(e.map(a), ks));
            }
            // prime field elements keep their index
            for c in 0..p as u32 {
                assert_eq!(e.map(Fe(c)), Fe(c));
            }
            assert!(std::ptr::eq(e, embedding(s, t).unwrap()));
        }
        assert!(embedding(make_field(2, 3).unwrap(), make_field(2, 4).unwrap()).is_err());
    }
}
