//! L-polynomials from point counts, maximality certificates, and genus
//! bounds for maximal curves.
//!
//! `L(t) = prod (1 - a_i t)` where the `a_i` are the Frobenius eigenvalues,
//! so that `N_j = l^j + 1 - sum a_i^j`. The reciprocal form
//! `h(t) = t^(2g) L(1/t)` is the characteristic polynomial of Frobenius and
//! equals `(t + q)^(2g)` exactly for curves maximal over `F_{q^2}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{is_power_of, prime_power};
use crate::curve::CurveModel;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    coeffs: Vec<BigInt>,
    ell: u64,
    genus: usize,
}

fn big_pow(b: u64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(b), e)
}

/// Newton's identities for `prod (1 - a_i t)`: `j c_j = -sum_{i=1..j} c_{j-i} s_i`.
fn coeff_from_power_sums(c: &[BigInt], s: &[BigInt], j: usize) -> Option<BigInt> {
    let mut acc = BigInt::zero();
    for i in 1..=j {
        acc -= &c[j - i] * &s[i];
    }
    let (q, r) = acc.div_rem(&BigInt::from(j));
    r.is_zero().then_some(q)
}

/// `|N - l^i - 1| <= 2 g l^(i/2)`, compared after squaring.
fn within_weil(n: &BigInt, ell: u64, g: usize, i: usize) -> bool {
    let dev = n - big_pow(ell, i) - 1;
    let lhs = &dev * &dev;
    let rhs = BigInt::from(4 * (g as u64) * (g as u64)) * big_pow(ell, i);
    lhs <= rhs
}

impl LPolynomial {
    /// Builds `L` from ascending coefficients; `L(0)` must be 1.
    pub fn new(coeffs: Vec<BigInt>, ell: u64) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.first() != Some(&BigInt::one()) {
            return Err(invalid("L(0) must be 1"));
        }
        if coeffs.len().is_multiple_of(2) {
            return Err(invalid("L-polynomial must have even degree"));
        }
        let genus = (coeffs.len() - 1) / 2;
        let l = LPolynomial { coeffs, ell, genus };
        if !l.satisfies_functional_equation() {
            return Err(invalid("coefficients violate the functional equation"));
        }
        Ok(l)
    }

    /// `(1 + q t)^(2g)` over `F_{q^2}`.
    pub fn maximal(q: u64, genus: usize) -> Self {
        let n = 2 * genus;
        let coeffs = (0..=n).map(|k| binomial(n, k) * big_pow(q, k)).collect();
        LPolynomial { coeffs, ell: q * q, genus }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn satisfies_functional_equation(&self) -> bool {
        let g = self.genus;
        (0..g).all(|i| self.coeffs[2 * g - i] == big_pow(self.ell, g - i) * &self.coeffs[i])
    }

    /// `sum a_k^j` over the reciprocal roots.
    pub fn power_sum(&self, j: usize) -> BigInt {
        self.power_sums(j).pop().unwrap_or_default()
    }

    /// Power sums `p_1..p_n`; index 0 holds `2g`.
    fn power_sums(&self, n: usize) -> Vec<BigInt> {
        let mut p = vec![BigInt::from(2 * self.genus)];
        for j in 1..=n {
            let mut v = -BigInt::from(j) * self.coeff(j);
            for i in 1..j {
                v -= self.coeff(j - i) * &p[i];
            }
            p.push(v);
        }
        p
    }

    /// Number of points over the degree-`j` extension of `F_l`.
    pub fn count_over(&self, j: usize) -> BigInt {
        big_pow(self.ell, j) + 1 - self.power_sum(j)
    }

    /// `L` of the same curve over `F_{l^i}`.
    pub fn base_change(&self, i: usize) -> LPolynomial {
        let g = self.genus;
        let all = self.power_sums(2 * g * i);
        let s: Vec<BigInt> = (0..=2 * g).map(|j| all[i * j].clone()).collect();
        let mut c = vec![BigInt::one()];
        for j in 1..=2 * g {
            // the eigenvalues of the base change are integral, so this divides
            c.push(coeff_from_power_sums(&c, &s, j).expect("integral power sums"));
        }
        LPolynomial { coeffs: c, ell: self.ell.pow(i as u32), genus: g }
    }

    /// `h(t) = t^(2g) L(1/t)`, ascending coefficients.
    pub fn h_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Inverse of [`LPolynomial::h_coeffs`].
    pub fn from_h_coeffs(h: Vec<BigInt>, ell: u64) -> Result<Self> {
        LPolynomial::new(h.into_iter().rev().collect(), ell)
    }

    /// Whether `L = (1 + sqrt(l) t)^(2g)`.
    pub fn is_maximal_shape(&self) -> bool {
        let Some(q) = crate::arith::exact_sqrt(self.ell) else {
            return false;
        };
        *self == LPolynomial::maximal(q, self.genus)
    }

    /// Coefficients as decimal strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

struct BigList<'a>(&'a [BigInt]);

impl Serialize for BigList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&BigElem(v))?;
        }
        seq.end()
    }
}

struct BigElem<'a>(&'a BigInt);

impl Serialize for BigElem<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_big(self.0, s)
    }
}

impl Serialize for LPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LPolynomial", 5)?;
        st.serialize_field("ell", &self.ell)?;
        st.serialize_field("genus", &self.genus)?;
        st.serialize_field("coeffs", &BigList(&self.coeffs))?;
        st.serialize_field("h_coeffs", &BigList(&self.h_coeffs()))?;
        st.serialize_field("maximal_shape", &self.is_maximal_shape())?;
        st.end()
    }
}

/// Reconstructs `L` from `N_1..N_g`, the counts over `F_{l^i}`.
pub fn lpoly_from_counts(counts: &[u64], ell: u64, genus: usize) -> Result<LPolynomial> {
    if counts.len() != genus {
        return Err(invalid(format!("expected {genus} counts, got {}", counts.len())));
    }
    if ell < 2 {
        return Err(invalid("field size must be at least 2"));
    }
    let mut s = vec![BigInt::from(2 * genus)];
    for (i, &n) in counts.iter().enumerate() {
        let n = BigInt::from(n);
        if !within_weil(&n, ell, genus, i + 1) {
            return Err(Error::InconsistentCounts(format!("N_{} = {n} violates the Weil bound", i + 1)));
        }
        s.push(big_pow(ell, i + 1) + 1 - n);
    }
    let mut c = vec![BigInt::one()];
    for j in 1..=genus {
        let cj = coeff_from_power_sums(&c, &s, j)
            .ok_or_else(|| Error::InconsistentCounts(format!("coefficient {j} is not integral")))?;
        c.push(cj);
    }
    for j in genus + 1..=2 * genus {
        let mirror = big_pow(ell, j - genus) * &c[2 * genus - j];
        c.push(mirror);
    }
    if genus > 0 && c[2 * genus] != big_pow(ell, genus) {
        return Err(Error::InconsistentCounts("leading coefficient is not l^g".into()));
    }
    let l = LPolynomial { coeffs: c, ell, genus };
    for (i, &n) in counts.iter().enumerate() {
        if l.count_over(i + 1) != BigInt::from(n) {
            return Err(Error::InconsistentCounts(format!("N_{} is not reproduced", i + 1)));
        }
    }
    Ok(l)
}

/// `sum a_k^i` over the reciprocal roots of `L`.
pub fn base_change_power_sums(l: &LPolynomial, i: usize) -> BigInt {
    l.power_sum(i)
}

/// Counts the curve over the first `g` extensions of its base field and
/// reconstructs its L-polynomial.
pub fn lpoly_of_curve(c: &CurveModel) -> Result<LPolynomial> {
    let g = c.genus().ok_or_else(|| Error::Unsupported("genus unknown".into()))? as usize;
    let counts = (1..=g as u32).map(|e| c.count_points(e)).collect::<Result<Vec<_>>>()?;
    lpoly_from_counts(&counts, c.base_field().order(), g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalityCertificate {
    /// Size of the field `F_{q^2}` the count is taken over.
    pub field_size: u64,
    pub q: u64,
    pub genus: u64,
    pub count: u64,
    pub expected: u64,
    pub maximal: bool,
}

/// Counts points over `F_{q^2}` and compares with `q^2 + 1 + 2 g q`.
pub fn certify_maximal(c: &CurveModel) -> Result<MaximalityCertificate> {
    let g = c.genus().ok_or_else(|| Error::Unsupported("genus unknown".into()))?;
    let q = c.q().ok_or_else(|| Error::Unsupported("no maximality field recorded".into()))?;
    let ext = c
        .maximal_extension()
        .ok_or_else(|| Error::Unsupported("F_{q^2} is not an extension of the base field".into()))?;
    let count = c.count_points(ext)?;
    let expected = q * q + 1 + 2 * g * q;
    Ok(MaximalityCertificate { field_size: q * q, q, genus: g, count, expected, maximal: count == expected })
}

/// Maximality over `F_{q^2}` predicted from counts over the small base field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerSumCertificate {
    pub lpoly: LPolynomial,
    pub extension: u32,
    #[serde(serialize_with = "ser_big")]
    pub power_sum: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub predicted_count: BigInt,
    pub expected: u64,
    pub maximal: bool,
}

/// Builds `L` over the base field and base-changes it to `F_{q^2}`.
pub fn certify_by_power_sums(c: &CurveModel) -> Result<PowerSumCertificate> {
    let l = lpoly_of_curve(c)?;
    let q = c.q().ok_or_else(|| Error::Unsupported("no maximality field recorded".into()))?;
    let ext = c
        .maximal_extension()
        .ok_or_else(|| Error::Unsupported("F_{q^2} is not an extension of the base field".into()))?;
    let power_sum = l.power_sum(ext as usize);
    let predicted_count = l.count_over(ext as usize);
    let g = l.genus() as u64;
    let expected = q * q + 1 + 2 * g * q;
    let maximal = predicted_count == BigInt::from(expected) && l.base_change(ext as usize).is_maximal_shape();
    Ok(PowerSumCertificate { lpoly: l, extension: ext, power_sum, predicted_count, expected, maximal })
}

/// Which closed form the maximality-implied genus agrees with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusMatch {
    Stated,
    Common,
    Neither,
}

/// Genus of the Ree model implied by its count over `F_{r^6}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReeGenusReport {
    pub s: u32,
    pub r: u64,
    pub r0: u64,
    pub field_size: u64,
    pub count: u64,
    /// `(N - r^6 - 1) / (2 r^3)` when integral.
    pub implied_genus: Option<u64>,
    /// `3 r0 (r - 1)(r + r0 + 1)`
    pub stated_formula: u64,
    /// `3 r0 (r - 1)(r + r0 + 1) / 2`
    pub common_formula: u64,
    pub matches: GenusMatch,
    pub model_incomplete: bool,
}

pub fn ree_genus_report(s: u32) -> Result<ReeGenusReport> {
    let c = CurveModel::ree(s)?;
    let r = 3u64.pow(2 * s + 1);
    let r0 = 3u64.pow(s);
    let count = c.count_points(6)?;
    let field_size = r.pow(6);
    let r3 = r.pow(3);
    let excess = count as i128 - field_size as i128 - 1;
    let implied_genus = (excess >= 0 && excess % (2 * r3 as i128) == 0).then(|| (excess / (2 * r3 as i128)) as u64);
    let stated_formula = 3 * r0 * (r - 1) * (r + r0 + 1);
    let common_formula = stated_formula / 2;
    let matches = match implied_genus {
        Some(g) if g == stated_formula => GenusMatch::Stated,
        Some(g) if g == common_formula => GenusMatch::Common,
        _ => GenusMatch::Neither,
    };
    Ok(ReeGenusReport {
        s,
        r,
        r0,
        field_size,
        count,
        implied_genus,
        stated_formula,
        common_formula,
        matches,
        model_incomplete: c.model_incomplete(),
    })
}

/// An exact rational number `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    fn new(num: i64, den: i64) -> Self {
        let g = num.gcd(&den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    /// `a <= self`
    pub fn ge_int(&self, a: i64) -> bool {
        a * self.den <= self.num
    }
}

/// One inequality on a curve instance. `slack = limit - value`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub value: i64,
    pub limit: i64,
    pub slack: i64,
    pub holds: bool,
}

impl BoundCheck {
    fn upper(value: i64, limit: i64) -> Self {
        BoundCheck { value, limit, slack: limit - value, holds: value <= limit }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CastelnuovoBound {
    /// Integer part of `q / n`.
    pub quotient: i64,
    /// `q - quotient * n`
    pub remainder: i64,
    /// `2g <= quotient * (q - n + remainder)`
    pub twice_genus: BoundCheck,
    /// `(2q-n)^2 / 4n` for even `n`, `((2q-n)^2 - 1) / 4n` for odd `n`.
    pub closed_form: Ratio,
    /// The exact bound never exceeds the closed form.
    pub closed_form_dominates: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DichotomyCheck {
    /// `floor((q-1)^2 / 4)`
    pub small_limit: i64,
    /// `q (q-1) / 2`
    pub hermitian_genus: i64,
    pub holds: bool,
}

/// Non-classicality of the canonical morphism forced by `g > q - n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonClassicalCheck {
    pub applies: bool,
    pub forced_non_classical: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub q: u64,
    pub genus: u64,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m1: Option<u64>,
    /// Point count against `q^2 + 1 + 2gq`, when a count is supplied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weil: Option<BoundCheck>,
    /// `g <= q(q-1)/2`
    pub ihara: BoundCheck,
    pub ft_dichotomy: DichotomyCheck,
    pub castelnuovo: CastelnuovoBound,
    /// `2g <= (m1 - 1) q`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lewittes: Option<BoundCheck>,
    /// `g >= q - n`
    pub lower_q_minus_n: BoundCheck,
    pub non_classical: NonClassicalCheck,
}

impl BoundReport {
    /// Adds the Weil check for a point count over `F_{q^2}`.
    pub fn with_count(mut self, count: u64) -> Self {
        let q = self.q as i64;
        let g = self.genus as i64;
        self.weil = Some(BoundCheck::upper(count as i64, q * q + 1 + 2 * g * q));
        self
    }

    pub fn all_hold(&self) -> bool {
        self.weil.as_ref().is_none_or(|b| b.holds)
            && self.ihara.holds
            && self.ft_dichotomy.holds
            && self.castelnuovo.twice_genus.holds
            && self.lewittes.as_ref().is_none_or(|b| b.holds)
            && self.lower_q_minus_n.holds
    }
}

/// The exact Castelnuovo bound for a morphism of degree `q + 1` to `P^(n+1)`.
pub fn castelnuovo(q: u64, n: u64, genus: u64) -> Result<CastelnuovoBound> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let (q, n) = (q as i64, n as i64);
    let quotient = q / n;
    let remainder = q - quotient * n;
    let limit = quotient * (q - n + remainder);
    let sq = (2 * q - n) * (2 * q - n);
    let closed_form = if n % 2 == 0 { Ratio::new(sq, 4 * n) } else { Ratio::new(sq - 1, 4 * n) };
    Ok(CastelnuovoBound {
        quotient,
        remainder,
        twice_genus: BoundCheck::upper(2 * genus as i64, limit),
        closed_form_dominates: closed_form.ge_int(limit),
        closed_form,
    })
}

pub fn bounds_report(q: u64, genus: u64, n: u64, m1: Option<u64>) -> Result<BoundReport> {
    if prime_power(q).is_none() {
        return Err(invalid(format!("{q} is not a prime power")));
    }
    let (qi, g) = (q as i64, genus as i64);
    let small_limit = (qi - 1) * (qi - 1) / 4;
    let hermitian_genus = qi * (qi - 1) / 2;
    let lewittes = m1.map(|m| BoundCheck::upper(2 * g, (m as i64 - 1) * qi));
    let lower = qi - n as i64;
    Ok(BoundReport {
        q,
        genus,
        n,
        m1,
        weil: None,
        ihara: BoundCheck::upper(g, hermitian_genus),
        ft_dichotomy: DichotomyCheck {
            small_limit,
            hermitian_genus,
            holds: 4 * g <= (qi - 1) * (qi - 1) || g == hermitian_genus,
        },
        castelnuovo: castelnuovo(q, n, genus)?,
        lewittes,
        lower_q_minus_n: BoundCheck { value: g, limit: lower, slack: g - lower, holds: g >= lower },
        non_classical: NonClassicalCheck { applies: g >= 2, forced_non_classical: g >= 2 && g > lower },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScholiumVerdict {
    /// Hypotheses on `q` or `g` fail; nothing is asserted.
    NotApplicable,
    /// Hypotheses hold and `g = (q-1)^2/4`.
    Holds,
    /// Hypotheses hold but `g != (q-1)^2/4`.
    Fails,
}

/// The genus-window statement evaluated under both parses of its condition on `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScholiumReport {
    pub q: u64,
    pub genus: u64,
    pub q_odd: bool,
    pub power_of_three: bool,
    /// `(q^2 - 3q + 2)/4 < g <= (q-1)^2/4`
    pub in_window: bool,
    /// "not a power of 3 and not (q not congruent to 3 mod 4)", i.e. `q = 3 mod 4`.
    pub literal: ScholiumVerdict,
    /// "not a power of 3 and q not congruent to 3 mod 4", i.e. `q = 1 mod 4`.
    pub alternative: ScholiumVerdict,
}

pub fn scholium_predicate(q: u64, genus: u64) -> ScholiumReport {
    let q_odd = q % 2 == 1;
    let power_of_three = is_power_of(q, 3);
    let (qi, g) = (q as i64, genus as i64);
    let in_window = qi * qi - 3 * qi + 2 < 4 * g && 4 * g <= (qi - 1) * (qi - 1);
    let conclusion = 4 * g == (qi - 1) * (qi - 1);
    let verdict = |cond: bool| {
        if q_odd && !power_of_three && cond && in_window {
            if conclusion {
                ScholiumVerdict::Holds
            } else {
                ScholiumVerdict::Fails
            }
        } else {
            ScholiumVerdict::NotApplicable
        }
    };
    ScholiumReport {
        q,
        genus,
        q_odd,
        power_of_three,
        in_window,
        literal: verdict(q % 4 == 3),
        alternative: verdict(q % 4 == 1),
    }
}

/// The point counts of `c` over extensions `1..=n` of its base field.
pub fn counts(c: &CurveModel, n: u32) -> Result<Vec<u64>> {
    (1..=n).map(|e| c.count_points(e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hermitian_q2_from_one_count() {
        let l = lpoly_from_counts(&[9], 4, 1).unwrap();
        assert_eq!(l.coeffs(), big(&[1, 4, 4]).as_slice());
        assert_eq!(l.h_coeffs(), big(&[4, 4, 1]));
        assert!(l.is_maximal_shape());
        assert_eq!(base_change_power_sums(&l, 2), BigInt::from(8));
    }

    #[test]
    fn rational_curve_has_trivial_l() {
        let l = lpoly_from_counts(&[], 7, 0).unwrap();
        assert_eq!(l.coeffs(), big(&[1]).as_slice());
        assert_eq!(l.count_over(3), BigInt::from(344));
    }

    #[test]
    fn suzuki_smallest_power_sums() {
        let l = lpoly_from_counts(&[5], 2, 1).unwrap();
        assert_eq!(l.coeffs(), big(&[1, 2, 2]).as_slice());
        assert_eq!(base_change_power_sums(&l, 4), BigInt::from(-8));
        assert_eq!(l.count_over(4), BigInt::from(25));
        assert!(l.base_change(4).is_maximal_shape());
        assert!(!l.is_maximal_shape());
    }

    #[test]
    fn ree_factor_sixth_power_sum() {
        let l = LPolynomial::new(big(&[1, 3, 3]), 3).unwrap();
        assert_eq!(base_change_power_sums(&l, 6), BigInt::from(-54));
        assert_eq!(l.base_change(6), LPolynomial::maximal(27, 1));
    }

    #[test]
    fn h_form_round_trip() {
        let l = LPolynomial::maximal(5, 4);
        let h = l.h_coeffs();
        // h(t) = (t + 5)^8
        assert_eq!(h[0], BigInt::from(390625));
        assert_eq!(h[8], BigInt::one());
        assert_eq!(LPolynomial::from_h_coeffs(h, 25).unwrap(), l);
    }

    #[test]
    fn inconsistent_counts_rejected() {
        // 100 points on a genus-1 curve over F_4 is beyond the Weil bound
        assert!(matches!(lpoly_from_counts(&[100], 4, 1), Err(Error::InconsistentCounts(_))));
        // s_1 = 3, s_2 = 2 gives 2 c_2 = -(c_1 s_1 + s_2) = 9 - 2 = 7, odd
        assert!(matches!(lpoly_from_counts(&[2, 15], 4, 2), Err(Error::InconsistentCounts(_))));
        assert!(lpoly_from_counts(&[9], 4, 2).is_err());
    }

    #[test]
    fn functional_equation_enforced() {
        assert!(LPolynomial::new(big(&[1, 2, 3]), 2).is_err());
        assert!(LPolynomial::new(big(&[2, 2, 2]), 2).is_err());
    }

    #[test]
    fn certificates_for_small_maximal_curves() {
        let c = certify_maximal(&CurveModel::hermitian(3).unwrap()).unwrap();
        assert_eq!((c.count, c.expected, c.maximal), (28, 28, true));
        let c = certify_maximal(&CurveModel::artin_schreier(5, 3).unwrap()).unwrap();
        assert_eq!((c.count, c.expected, c.maximal), (66, 66, true));
        assert!(CurveModel::artin_schreier(5, 4).is_err());
    }

    #[test]
    fn suzuki_power_sum_certificate() {
        let cert = certify_by_power_sums(&CurveModel::suzuki(0).unwrap()).unwrap();
        assert_eq!(cert.extension, 4);
        assert_eq!(cert.power_sum, BigInt::from(-8));
        assert_eq!(cert.predicted_count, BigInt::from(25));
        assert!(cert.maximal);
    }

    #[test]
    fn ree_implied_genus() {
        let r = ree_genus_report(0).unwrap();
        assert_eq!(r.field_size, 729);
        assert_eq!(r.count, 1540);
        assert_eq!(r.implied_genus, Some(15));
        assert_eq!((r.stated_formula, r.common_formula), (30, 15));
        assert_eq!(r.matches, GenusMatch::Common);
        assert!(r.model_incomplete);
    }

    #[test]
    fn castelnuovo_instances() {
        let b = castelnuovo(5, 2, 4).unwrap();
        assert_eq!((b.quotient, b.remainder, b.twice_genus.limit), (2, 1, 8));
        assert_eq!(b.closed_form, Ratio { num: 8, den: 1 });
        assert!(b.twice_genus.holds);
        let b = castelnuovo(3, 2, 1).unwrap();
        assert_eq!(b.twice_genus.limit, 2);
        assert!(b.twice_genus.holds);
        assert!(!castelnuovo(3, 2, 2).unwrap().twice_genus.holds);
    }

    #[test]
    fn ihara_and_dichotomy() {
        let r = bounds_report(4, 6, 1, None).unwrap();
        assert_eq!(r.ihara.limit, 6);
        assert!(r.ihara.holds && r.ft_dichotomy.holds);
        // genus 3 over F_16 sits strictly between the two allowed ranges
        assert!(!bounds_report(4, 3, 1, None).unwrap().ft_dichotomy.holds);
        let r = bounds_report(5, 4, 2, Some(3)).unwrap().with_count(66);
        assert_eq!(r.weil.as_ref().unwrap().slack, 0);
        assert_eq!(r.lewittes.as_ref().unwrap().limit, 10);
        assert!(r.all_hold());
        assert!(bounds_report(6, 1, 1, None).is_err());
    }

    #[test]
    fn scholium_examples() {
        let r = scholium_predicate(5, 4);
        assert!(r.in_window);
        assert_eq!(r.alternative, ScholiumVerdict::Holds);
        assert_eq!(r.literal, ScholiumVerdict::NotApplicable);
        let r = scholium_predicate(5, 3);
        assert!(!r.in_window);
        assert_eq!(r.alternative, ScholiumVerdict::NotApplicable);
        let r = scholium_predicate(9, 16);
        assert!(r.power_of_three);
        assert_eq!((r.literal, r.alternative), (ScholiumVerdict::NotApplicable, ScholiumVerdict::NotApplicable));
        let r = scholium_predicate(7, 9);
        assert_eq!(r.literal, ScholiumVerdict::Holds);
    }

    #[test]
    fn example_2_4_inequality_on_suzuki_data() {
        // Suzuki s=0: q = 4, g = 1, so q >= 2g + 2; n = q - g and m1 >= 2
        let (q, g) = (4u64, 1u64);
        let n = q - g;
        let m1 = 2;
        assert!(q >= 2 * g + 2);
        assert!(m1 * n >= q + 2);
    }

    proptest! {
        #[test]
        fn counts_round_trip(q in 2u64..8, g in 0usize..5) {
            prop_assume!(prime_power(q).is_some());
            // beyond the Ihara bound the "counts" go negative
            prop_assume!(g as u64 <= q * (q - 1) / 2);
            let l = LPolynomial::maximal(q, g);
            let counts: Vec<u64> = (1..=g).map(|i| l.count_over(i).to_u64().unwrap()).collect();
            let back = lpoly_from_counts(&counts, q * q, g).unwrap();
            prop_assert_eq!(&back, &l);
            for i in 1..=2 * g + 2 {
                prop_assert_eq!(back.count_over(i), l.count_over(i));
            }
        }

        #[test]
        fn base_change_consistent(a in -4i64..=4, ell in 2u64..10, i in 1usize..5, j in 1usize..4) {
            // elliptic L = 1 + a t + l t^2 with |a| <= 2 sqrt(l)
            prop_assume!((a * a) as u64 <= 4 * ell);
            let l = LPolynomial::new(big(&[1, a, ell as i64]), ell).unwrap();
            let bc = l.base_change(i);
            prop_assert_eq!(bc.count_over(j), l.count_over(i * j));
        }
    }
}
