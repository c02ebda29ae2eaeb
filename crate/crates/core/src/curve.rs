//! Explicit curve families, point enumeration over extensions, and the
//! Frobenius action on points.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{rank, roots, BiPoly, Poly, Var};
use crate::arith::{gcd, is_prime, prime_power};
use crate::error::{invalid, Error, Result};
use crate::gf::{make_field, Fe, Gf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    ArtinSchreier,
    Hermitian,
    HyperellipticExample,
    Suzuki,
    Ree,
    GenericPlane,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::ArtinSchreier => "artin_schreier",
            Family::Hermitian => "hermitian",
            Family::HyperellipticExample => "hyperelliptic_example",
            Family::Suzuki => "suzuki",
            Family::Ree => "ree",
            Family::GenericPlane => "generic_plane",
        };
        f.write_str(s)
    }
}

/// A place at infinity with the pole orders of `x` and `y` there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinitePlace {
    pub pole_x: u32,
    pub pole_y: u32,
    /// Degree over the base field.
    #[serde(default = "one")]
    pub degree: u32,
}

fn one() -> u32 {
    1
}

/// JSON-compatible description of a curve.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    /// Terms `[i, j, coefficient index]` of `sum c x^i y^j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<[u64; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinity: Option<Vec<InfinitePlace>>,
}

/// A curve instance together with the metadata the algorithms rely on.
#[derive(Clone, Debug)]
pub struct CurveModel {
    family: Family,
    field: &'static Gf,
    /// The curve is expected to be maximal over `F_{q^2}`.
    q: Option<u64>,
    m: Option<u64>,
    s: Option<u32>,
    equation: BiPoly,
    /// Second equation `z^r - z = x^(2 r0) (x^r - x)` for the Ree model, in `(x, z)`.
    second: Option<BiPoly>,
    genus: Option<u64>,
    infinity: Vec<InfinitePlace>,
    model_incomplete: bool,
}

/// A point of the curve over some extension of its base field.
///
/// Affine coordinates are indices in the field the point was enumerated
/// over; `z` is only present for the Ree model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacePoint {
    Affine {
        x: Fe,
        y: Fe,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        z: Option<Fe>,
    },
    Infinity {
        index: u32,
    },
}

impl PlacePoint {
    pub fn affine(x: Fe, y: Fe) -> Self {
        PlacePoint::Affine { x, y, z: None }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PlacePoint::Infinity { .. })
    }

    pub fn xy(&self) -> Option<(Fe, Fe)> {
        match *self {
            PlacePoint::Affine { x, y, .. } => Some((x, y)),
            PlacePoint::Infinity { .. } => None,
        }
    }
}

/// Points over the degree-`ext` extension of the base field.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub field: &'static Gf,
    pub ext: u32,
    pub count: u64,
    pub points: Vec<PlacePoint>,
}

fn neg_one(gf: &Gf) -> Fe {
    gf.neg(Fe::ONE)
}

fn check_prime_power(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or_else(|| invalid(format!("{q} is not a prime power")))
}

impl CurveModel {
    /// `y^q + y = x^m` over `F_{q^2}`, requiring `m | q + 1`.
    pub fn artin_schreier(q: u64, m: u64) -> Result<Self> {
        let (p, e) = check_prime_power(q)?;
        if m == 0 || !(q + 1).is_multiple_of(m) {
            return Err(invalid(format!("m = {m} must divide q + 1 = {}", q + 1)));
        }
        let field = make_field(p, 2 * e)?;
        let equation =
            BiPoly::from_terms(field, [(0, q as u32, Fe::ONE), (0, 1, Fe::ONE), (m as u32, 0, neg_one(field))]);
        Ok(CurveModel {
            family: if m == q + 1 { Family::Hermitian } else { Family::ArtinSchreier },
            field,
            q: Some(q),
            m: Some(m),
            s: None,
            equation,
            second: None,
            genus: Some((q - 1) * (m - 1) / 2),
            infinity: vec![InfinitePlace { pole_x: q as u32, pole_y: m as u32, degree: 1 }],
            model_incomplete: false,
        })
    }

    /// `y^q + y = x^(q+1)` over `F_{q^2}`.
    pub fn hermitian(q: u64) -> Result<Self> {
        Self::artin_schreier(q, q + 1)
    }

    /// `x^2 + y^5 = 1` over `F_81`.
    pub fn hyperelliptic_example() -> Result<Self> {
        let field = make_field(3, 4)?;
        let equation = BiPoly::from_terms(field, [(2, 0, Fe::ONE), (0, 5, Fe::ONE), (0, 0, neg_one(field))]);
        Ok(CurveModel {
            family: Family::HyperellipticExample,
            field,
            q: Some(9),
            m: None,
            s: None,
            equation,
            second: None,
            genus: Some(2),
            infinity: vec![InfinitePlace { pole_x: 5, pole_y: 2, degree: 1 }],
            model_incomplete: false,
        })
    }

    /// `y^r - y = x^r0 (x^r - x)` over `F_r`, `r = 2^(2s+1)`, `r0 = 2^s`.
    pub fn suzuki(s: u32) -> Result<Self> {
        let r = 2u64.pow(2 * s + 1);
        let r0 = 2u64.pow(s);
        let field = make_field(2, 2 * s + 1)?;
        let equation = BiPoly::from_terms(
            field,
            [
                (0, r as u32, Fe::ONE),
                (0, 1, neg_one(field)),
                ((r0 + r) as u32, 0, neg_one(field)),
                ((r0 + 1) as u32, 0, Fe::ONE),
            ],
        );
        Ok(CurveModel {
            family: Family::Suzuki,
            field,
            q: Some(r * r),
            m: None,
            s: Some(s),
            equation,
            second: None,
            genus: Some(r0 * (r - 1)),
            infinity: vec![InfinitePlace { pole_x: r as u32, pole_y: (r + r0) as u32, degree: 1 }],
            model_incomplete: false,
        })
    }

    /// `y^r - y = x^r0 (x^r - x)`, `z^r - z = x^(2 r0) (x^r - x)` over `F_r`,
    /// `r = 3^(2s+1)`, `r0 = 3^s`. Supported for counting only; the genus
    /// is left open and estimated from point counts.
    pub fn ree(s: u32) -> Result<Self> {
        let r = 3u64.pow(2 * s + 1);
        let r0 = 3u64.pow(s);
        let field = make_field(3, 2 * s + 1)?;
        let as_eq = |k: u64| {
            BiPoly::from_terms(
                field,
                [
                    (0, r as u32, Fe::ONE),
                    (0, 1, neg_one(field)),
                    ((k + r) as u32, 0, neg_one(field)),
                    ((k + 1) as u32, 0, Fe::ONE),
                ],
            )
        };
        Ok(CurveModel {
            family: Family::Ree,
            field,
            q: Some(r * r * r),
            m: None,
            s: Some(s),
            equation: as_eq(r0),
            second: Some(as_eq(2 * r0)),
            genus: None,
            infinity: vec![InfinitePlace { pole_x: r as u32, pole_y: (r + r0) as u32, degree: 1 }],
            model_incomplete: true,
        })
    }

    /// Plane curve `sum c x^i y^j = 0` over `F_{p^k}` with optional metadata.
    pub fn generic_plane(
        p: u64,
        k: u32,
        terms: &[(u32, u32, u64)],
        genus: Option<u64>,
        infinity: Vec<InfinitePlace>,
    ) -> Result<Self> {
        let field = make_field(p, k)?;
        let mut equation = BiPoly::zero();
        for &(i, j, c) in terms {
            equation.add_term(field, i, j, field.element(c)?);
        }
        if equation.is_zero() {
            return Err(invalid("zero defining polynomial"));
        }
        let q = k.is_multiple_of(2).then(|| p.pow(k / 2));
        Ok(CurveModel {
            family: Family::GenericPlane,
            field,
            q,
            m: None,
            s: None,
            equation,
            second: None,
            genus,
            infinity,
            model_incomplete: false,
        })
    }

    pub fn from_spec(spec: &CurveSpec) -> Result<Self> {
        let family = spec.family.ok_or_else(|| invalid("curve spec needs a family"))?;
        let need = |v: Option<u64>, name: &str| v.ok_or_else(|| invalid(format!("missing {name}")));
        let c = match family {
            Family::ArtinSchreier => Self::artin_schreier(need(spec.q, "q")?, need(spec.m, "m")?)?,
            Family::Hermitian => Self::hermitian(need(spec.q, "q")?)?,
            Family::HyperellipticExample => Self::hyperelliptic_example()?,
            Family::Suzuki => Self::suzuki(spec.s.unwrap_or(0))?,
            Family::Ree => Self::ree(spec.s.unwrap_or(0))?,
            Family::GenericPlane => {
                let p = need(spec.p, "p")?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                let terms: Vec<(u32, u32, u64)> = spec
                    .poly
                    .as_ref()
                    .ok_or_else(|| invalid("missing poly"))?
                    .iter()
                    .map(|t| (t[0] as u32, t[1] as u32, t[2]))
                    .collect();
                Self::generic_plane(
                    p,
                    spec.k.unwrap_or(1),
                    &terms,
                    spec.genus,
                    spec.infinity.clone().unwrap_or_default(),
                )?
            }
        };
        if let (Some(p), true) = (spec.p, family != Family::GenericPlane) {
            if p != c.field.p() {
                return Err(invalid(format!("p = {p} does not match the family's characteristic")));
            }
        }
        Ok(c)
    }

    pub fn spec(&self) -> CurveSpec {
        let mut s = CurveSpec { family: Some(self.family), p: Some(self.field.p()), ..Default::default() };
        match self.family {
            Family::ArtinSchreier | Family::Hermitian => {
                s.q = self.q;
                s.m = self.m;
            }
            Family::Suzuki | Family::Ree => s.s = self.s,
            Family::HyperellipticExample => {}
            Family::GenericPlane => {
                s.k = Some(self.field.degree());
                s.poly = Some(self.equation.terms().map(|(i, j, c)| [i as u64, j as u64, c.0 as u64]).collect());
                s.genus = self.genus;
                if !self.infinity.is_empty() {
                    s.infinity = Some(self.infinity.clone());
                }
            }
        }
        s
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn base_field(&self) -> &'static Gf {
        self.field
    }

    /// `q` with the curve expected maximal over `F_{q^2}`.
    pub fn q(&self) -> Option<u64> {
        self.q
    }

    pub fn m(&self) -> Option<u64> {
        self.m
    }

    pub fn s(&self) -> Option<u32> {
        self.s
    }

    pub fn equation(&self) -> &BiPoly {
        &self.equation
    }

    pub fn genus(&self) -> Option<u64> {
        self.genus
    }

    pub fn infinity(&self) -> &[InfinitePlace] {
        &self.infinity
    }

    pub fn model_incomplete(&self) -> bool {
        self.model_incomplete
    }

    /// Extension degree of `F_{q^2}` over the base field.
    pub fn maximal_extension(&self) -> Option<u32> {
        let q = self.q?;
        let (_, e) = prime_power(q)?;
        let kb = self.field.degree();
        (2 * e % kb == 0).then_some(2 * e / kb)
    }

    /// Field of degree `ext` over the base field.
    pub fn extension_field(&self, ext: u32) -> Result<&'static Gf> {
        if ext == 0 {
            return Err(invalid("extension degree must be positive"));
        }
        make_field(self.field.p(), self.field.degree() * ext)
    }

    /// Number of points over the degree-`ext` extension.
    pub fn count_points(&self, ext: u32) -> Result<u64> {
        let f = self.extension_field(ext)?;
        let affine = match self.family {
            Family::ArtinSchreier | Family::Hermitian => self.count_trace_hermitian_like(f)?,
            Family::Suzuki => self.count_trace_suzuki_like(f, false)?,
            Family::Ree => self.count_trace_suzuki_like(f, true)?,
            _ => self.count_by_table(f)?,
        };
        Ok(affine + self.infinite_count(ext))
    }

    fn infinite_count(&self, ext: u32) -> u64 {
        self.infinity.iter().filter(|p| ext.is_multiple_of(p.degree)).count() as u64
    }

    /// `y^q + y = c` is solvable iff `Tr_{F/F_q}(c / lambda) = 0` with `lambda^(q-1) = -1`.
    fn count_trace_hermitian_like(&self, f: &'static Gf) -> Result<u64> {
        let q = self.q.unwrap();
        let m = self.m.unwrap();
        let (_, e) = check_prime_power(q)?;
        let lambda_inv = f.inv(hermitian_kernel_generator(f, q)).unwrap();
        let good = f
            .elements()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&x| {
                let c = f.mul(f.pow(x, m), lambda_inv);
                u64::from(f.relative_trace(c, e).unwrap() == Fe::ZERO)
            })
            .sum::<u64>();
        Ok(good * q)
    }

    /// `y^r - y = c` is solvable iff `Tr_{F/F_r}(c) = 0`.
    fn count_trace_suzuki_like(&self, f: &'static Gf, two_equations: bool) -> Result<u64> {
        let base_deg = self.field.degree();
        let r = self.field.order();
        let s = self.s.unwrap();
        let r0 = self.field.p().pow(s);
        let good = f
            .elements()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&x| {
                let base = f.sub(f.pow(x, r), x);
                let c1 = f.mul(f.pow(x, r0), base);
                let ok1 = f.relative_trace(c1, base_deg).unwrap() == Fe::ZERO;
                let ok2 = !two_equations || {
                    let c2 = f.mul(f.pow(x, 2 * r0), base);
                    f.relative_trace(c2, base_deg).unwrap() == Fe::ZERO
                };
                u64::from(ok1 && ok2)
            })
            .sum::<u64>();
        Ok(good * if two_equations { r * r } else { r })
    }

    fn count_by_table(&self, f: &'static Gf) -> Result<u64> {
        let eq = self.equation_over(f)?;
        if let Some((a, b)) = eq.separated(f) {
            let mut counts = vec![0u32; f.order() as usize];
            for y in f.elements() {
                counts[b.eval(f, &y).0 as usize] += 1;
            }
            let total = f
                .elements()
                .collect::<Vec<_>>()
                .par_iter()
                .map(|x| counts[f.neg(a.eval(f, x)).0 as usize] as u64)
                .sum();
            return Ok(total);
        }
        let xs: Vec<Fe> = f.elements().collect();
        Ok(xs.par_iter().map(|&x| fiber(f, &eq, x).len() as u64).sum())
    }

    /// Defining polynomial with coefficients embedded into `f`.
    pub fn equation_over(&self, f: &'static Gf) -> Result<BiPoly> {
        let e = crate::gf::embedding(self.field, f)?;
        Ok(self.equation.map_coeffs(e))
    }

    fn second_over(&self, f: &'static Gf) -> Result<Option<BiPoly>> {
        let e = crate::gf::embedding(self.field, f)?;
        Ok(self.second.as_ref().map(|s| s.map_coeffs(e)))
    }

    /// All points over the degree-`ext` extension, affine points ordered by
    /// `(x, y)` index and infinite places last.
    pub fn enumerate_points(&self, ext: u32) -> Result<PointSet> {
        let f = self.extension_field(ext)?;
        let eq = self.equation_over(f)?;
        let second = self.second_over(f)?;
        let xs: Vec<Fe> = f.elements().collect();
        let per_x: Vec<Vec<PlacePoint>> = if let Some((a, b)) = eq.separated(f) {
            let table = FiberTable::new(f, &b);
            let second_parts = second.as_ref().map(|s| {
                let (a2, b2) = s.separated(f).expect("second equation is separated");
                (a2, FiberTable::new(f, &b2))
            });
            xs.par_iter()
                .map(|&x| {
                    let ys = table.solutions(f.neg(a.eval(f, &x)));
                    match &second_parts {
                        None => ys.iter().map(|&y| PlacePoint::affine(x, Fe(y))).collect(),
                        Some((a2, t2)) => {
                            let zs = t2.solutions(f.neg(a2.eval(f, &x)));
                            let mut v = Vec::with_capacity(ys.len() * zs.len());
                            for &y in ys {
                                for &z in zs {
                                    v.push(PlacePoint::Affine { x, y: Fe(y), z: Some(Fe(z)) });
                                }
                            }
                            v
                        }
                    }
                })
                .collect()
        } else {
            xs.par_iter().map(|&x| fiber(f, &eq, x).into_iter().map(|y| PlacePoint::affine(x, y)).collect()).collect()
        };
        let mut points: Vec<PlacePoint> = per_x.into_iter().flatten().collect();
        points.sort();
        for (i, p) in self.infinity.iter().enumerate() {
            if ext.is_multiple_of(p.degree) {
                points.push(PlacePoint::Infinity { index: i as u32 });
            }
        }
        Ok(PointSet { field: f, ext, count: points.len() as u64, points })
    }

    /// All-pairs count, used as an independent check on small fields.
    pub fn count_points_naive(&self, ext: u32) -> Result<u64> {
        let f = self.extension_field(ext)?;
        let eq = self.equation_over(f)?;
        let second = self.second_over(f)?;
        let mut n = 0u64;
        for x in f.elements() {
            for y in f.elements() {
                if eq.eval(f, x, y) != Fe::ZERO {
                    continue;
                }
                match &second {
                    None => n += 1,
                    Some(s) => n += f.elements().filter(|&z| s.eval(f, x, z) == Fe::ZERO).count() as u64,
                }
            }
        }
        Ok(n + self.infinite_count(ext))
    }

    /// Checks that a point (with coordinates in `f`) lies on the curve.
    pub fn contains(&self, f: &'static Gf, p: &PlacePoint) -> Result<bool> {
        match *p {
            PlacePoint::Infinity { index } => Ok((index as usize) < self.infinity.len()),
            PlacePoint::Affine { x, y, z } => {
                let on_first = self.equation_over(f)?.eval(f, x, y) == Fe::ZERO;
                let on_second = match (self.second_over(f)?, z) {
                    (Some(s), Some(z)) => s.eval(f, x, z) == Fe::ZERO,
                    (None, None) => true,
                    _ => false,
                };
                Ok(on_first && on_second)
            }
        }
    }

    /// Degree of a point over the base field.
    pub fn point_degree(&self, f: &Gf, p: &PlacePoint) -> u32 {
        match *p {
            PlacePoint::Infinity { index } => self.infinity[index as usize].degree,
            PlacePoint::Affine { x, y, z } => {
                let kb = self.field.degree();
                let dx = f.element_degree(x);
                let dy = f.element_degree(y);
                let dz = z.map_or(1, |z| f.element_degree(z));
                let d = lcm(lcm(dx, dy), dz);
                // degree over the base field
                let l = lcm(d, kb);
                l / kb
            }
        }
    }

    /// The `|relative_to|`-power Frobenius applied coordinatewise.
    pub fn frobenius_point(&self, f: &Gf, p: &PlacePoint, relative_to: &Gf) -> Result<PlacePoint> {
        if !relative_to.is_subfield_of(f) {
            return Err(Error::NotSubfield { p: f.p(), sub: relative_to.degree(), sup: f.degree() });
        }
        let e = relative_to.degree() as u64;
        Ok(match *p {
            PlacePoint::Infinity { .. } => *p,
            PlacePoint::Affine { x, y, z } => {
                PlacePoint::Affine { x: f.frobenius(x, e), y: f.frobenius(y, e), z: z.map(|z| f.frobenius(z, e)) }
            }
        })
    }

    /// Frobenius orbits (relative to the base field) of the points over `ext`.
    pub fn frobenius_orbits(&self, ext: u32) -> Result<Vec<Vec<PlacePoint>>> {
        let set = self.enumerate_points(ext)?;
        let mut seen = std::collections::HashSet::new();
        let mut orbits = Vec::new();
        for p in &set.points {
            if seen.contains(p) {
                continue;
            }
            let mut orbit = vec![*p];
            seen.insert(*p);
            let mut cur = self.frobenius_point(set.field, p, self.field)?;
            while cur != *p {
                seen.insert(cur);
                orbit.push(cur);
                cur = self.frobenius_point(set.field, &cur, self.field)?;
            }
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// `(x, y) -> (-x, y)` on the hyperelliptic example.
    pub fn involution(&self, f: &Gf, p: &PlacePoint) -> Result<PlacePoint> {
        if self.family != Family::HyperellipticExample {
            return Err(Error::Unsupported(format!("no hyperelliptic involution on {}", self.family)));
        }
        Ok(match *p {
            PlacePoint::Affine { x, y, z } => PlacePoint::Affine { x: f.neg(x), y, z },
            inf => inf,
        })
    }

    /// Affine points over `ext` at which the Jacobian criterion fails.
    pub fn smoothness_check(&self, ext: u32) -> Result<Vec<PlacePoint>> {
        let set = self.enumerate_points(ext)?;
        let f = set.field;
        let eq = self.equation_over(f)?;
        let fx = eq.partial(f, Var::X);
        let fy = eq.partial(f, Var::Y);
        let second = self.second_over(f)?;
        let (gx, gz) = match &second {
            Some(s) => (Some(s.partial(f, Var::X)), Some(s.partial(f, Var::Y))),
            None => (None, None),
        };
        Ok(set
            .points
            .iter()
            .filter(|p| match **p {
                PlacePoint::Infinity { .. } => false,
                PlacePoint::Affine { x, y, z } => {
                    let row1 = vec![fx.eval(f, x, y), fy.eval(f, x, y), Fe::ZERO];
                    match (&gx, &gz, z) {
                        (Some(gx), Some(gz), Some(z)) => {
                            let row2 = vec![gx.eval(f, x, z), Fe::ZERO, gz.eval(f, x, z)];
                            rank(f, &[row1, row2]) < 2
                        }
                        _ => rank(f, &[row1]) < 1,
                    }
                }
            })
            .copied()
            .collect())
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a as u64, b as u64) as u32 * b
}

/// Element `lambda` with `lambda^(q-1) = -1`, so `{y : y^q + y = 0} = lambda F_q`.
pub fn hermitian_kernel_generator(f: &Gf, q: u64) -> Fe {
    if f.p() == 2 {
        return Fe::ONE;
    }
    let n = f.order() - 1;
    f.exp(n / (2 * (q - 1)))
}

/// Roots `y` of `F(x0, y)`.
fn fiber(f: &Gf, eq: &BiPoly, x0: Fe) -> Vec<Fe> {
    let py: Poly<Fe> = eq.specialize_x(f, x0);
    if py.is_zero() {
        return f.elements().collect();
    }
    roots(f, &py)
}

/// Preimages of a polynomial map `y -> B(y)` on a finite field, grouped by value.
struct FiberTable {
    start: Vec<u32>,
    ys: Vec<u32>,
}

impl FiberTable {
    fn new(f: &Gf, b: &Poly<Fe>) -> Self {
        let n = f.order() as usize;
        let vals: Vec<u32> = f.elements().map(|y| b.eval(f, &y).0).collect();
        let mut start = vec![0u32; n + 1];
        for &v in &vals {
            start[v as usize + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut ys = vec![0u32; n];
        for (y, &v) in vals.iter().enumerate() {
            ys[fill[v as usize] as usize] = y as u32;
            fill[v as usize] += 1;
        }
        FiberTable { start, ys }
    }

    fn solutions(&self, v: Fe) -> &[u32] {
        let i = v.0 as usize;
        &self.ys[self.start[i] as usize..self.start[i + 1] as usize]
    }
}
