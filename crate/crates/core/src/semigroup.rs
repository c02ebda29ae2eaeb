//! Numerical semigroups: gap sieves, symmetry, and the gap-set
//! combinatorics used to pin down genus `(q-1)^2/4` curves.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// A cofinite additive submonoid of the natural numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    pub generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub genus: u64,
    /// Largest gap, or -1 when there are none.
    pub frobenius: i64,
}

impl NumericalSemigroup {
    /// Sieves the semigroup generated by `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut generators: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() {
            return Err(invalid("at least one positive generator is required"));
        }
        let g = generators.iter().fold(0, |a, &b| crate::arith::gcd(a, b));
        if g != 1 {
            return Err(Error::NonCoprimeGenerators(g));
        }
        let least = generators[0] as usize;
        let mut member = vec![true];
        let mut run = 1usize;
        // a run of `least` consecutive members means every larger integer is a member
        while run < least {
            let n = member.len();
            let is = generators.iter().any(|&d| d as usize <= n && member[n - d as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        let gaps: Vec<u64> = member.iter().enumerate().filter(|(_, &m)| !m).map(|(i, _)| i as u64).collect();
        Ok(NumericalSemigroup {
            genus: gaps.len() as u64,
            frobenius: gaps.last().map_or(-1, |&f| f as i64),
            generators,
            gaps,
        })
    }

    pub fn contains(&self, n: u64) -> bool {
        n as i64 > self.frobenius || self.gaps.binary_search(&n).is_err()
    }

    /// Smallest integer from which on everything is a member.
    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// The `i`-th non-gap, with `m_0 = 0`.
    pub fn non_gap(&self, i: usize) -> u64 {
        let mut seen = 0;
        let mut n = 0u64;
        loop {
            if self.contains(n) {
                if seen == i {
                    return n;
                }
                seen += 1;
            }
            n += 1;
        }
    }

    pub fn non_gaps_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|n| self.contains(n as u64) != self.contains((f - n) as u64))
    }

    /// Closure under addition, checked on all pairs up to `2 frobenius + 2`.
    pub fn is_closed(&self) -> bool {
        let bound = (2 * self.frobenius + 2).max(0) as u64;
        let members = self.non_gaps_up_to(bound);
        members.iter().all(|&a| members.iter().take_while(|&&b| a + b <= bound).all(|&b| self.contains(a + b)))
    }
}

/// `(r-1)(s-1)/2`, cross-checked against the sieve.
pub fn two_generator_genus(r: u64, s: u64) -> Result<u64> {
    if r == 0 || s == 0 {
        return Err(invalid("generators must be positive"));
    }
    let g = crate::arith::gcd(r, s);
    if g != 1 {
        return Err(Error::NonCoprimeGenerators(g));
    }
    let closed = (r - 1) * (s - 1) / 2;
    let sieved = NumericalSemigroup::from_generators(&[r, s])?.genus;
    if closed != sieved {
        return Err(Error::CheckFailed(format!("<{r},{s}>: formula {closed}, sieve {sieved}")));
    }
    Ok(closed)
}

/// Whether `N \ gaps` is closed under addition, testing sums up to `bound`.
pub fn complement_is_semigroup(gaps: &BTreeSet<u64>, bound: u64) -> bool {
    if gaps.contains(&0) {
        return false;
    }
    let members: Vec<u64> = (0..=bound).filter(|n| !gaps.contains(n)).collect();
    members.iter().all(|&a| members.iter().take_while(|&&b| a + b <= bound).all(|&b| !gaps.contains(&(a + b))))
}

/// The set `S(j) = {a + b j + c q : a + b + c <= (q-3)/2}` and the candidate
/// semigroup `H(j) = N \ (1 + S(j))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapStructure {
    pub q: u64,
    pub j: u64,
    pub s_set: Vec<u64>,
    pub cardinality: usize,
    /// `(q-1)^2 / 4`
    pub expected_cardinality: u64,
    /// `1 + S(j)`
    pub h_gaps: Vec<u64>,
    pub closure_bound: u64,
    pub h_is_semigroup: bool,
}

fn check_odd_q(q: u64, j: u64) -> Result<()> {
    if q.is_multiple_of(2) || q < 5 {
        return Err(invalid(format!("q = {q} must be odd and at least 5")));
    }
    if j < 2 || j > q - 1 {
        return Err(invalid(format!("j = {j} must lie in [2, q-1]")));
    }
    Ok(())
}

pub fn gap_candidate_set(q: u64, j: u64) -> Result<GapStructure> {
    check_odd_q(q, j)?;
    let top = (q - 3) / 2;
    let mut s = BTreeSet::new();
    for a in 0..=top {
        for b in 0..=top - a {
            for c in 0..=top - a - b {
                s.insert(a + b * j + c * q);
            }
        }
    }
    let h_gaps: BTreeSet<u64> = s.iter().map(|x| x + 1).collect();
    let closure_bound = 2 * h_gaps.iter().max().copied().unwrap_or(1);
    Ok(GapStructure {
        q,
        j,
        cardinality: s.len(),
        expected_cardinality: (q - 1) * (q - 1) / 4,
        h_is_semigroup: complement_is_semigroup(&h_gaps, closure_bound),
        h_gaps: h_gaps.into_iter().collect(),
        s_set: s.into_iter().collect(),
        closure_bound,
    })
}

/// The orders `{0,1,2,j,j+1,2j,q,q+1,q+j,2q}` of twice the linear system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TenPointSet {
    pub q: u64,
    pub j: u64,
    pub set: Vec<u64>,
    pub cardinality: usize,
    /// More than 9 distinct orders rules `j` out.
    pub eliminated: bool,
}

pub fn ten_order_set(q: u64, j: u64) -> Result<TenPointSet> {
    check_odd_q(q, j)?;
    let set: BTreeSet<u64> = [0, 1, 2, j, j + 1, 2 * j, q, q + 1, q + j, 2 * q].into_iter().collect();
    Ok(TenPointSet { q, j, cardinality: set.len(), eliminated: set.len() > 9, set: set.into_iter().collect() })
}

/// The two possible Weierstrass semigroups at a rational point of a maximal
/// curve of genus `(q-1)^2/4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupDichotomy {
    pub q: u64,
    pub expected_genus: u64,
    /// `<q-1, q, q+1>`
    pub h1: NumericalSemigroup,
    /// `<(q+1)/2, q>`
    pub h2: NumericalSemigroup,
    pub h1_non_gaps_to_2q2: usize,
    pub h2_non_gaps_to_2q2: usize,
    pub holds: bool,
}

pub fn quarter_genus_semigroups(q: u64) -> Result<SemigroupDichotomy> {
    if q.is_multiple_of(2) || q < 5 {
        return Err(invalid(format!("q = {q} must be odd and at least 5")));
    }
    let h1 = NumericalSemigroup::from_generators(&[q - 1, q, q + 1])?;
    let h2 = NumericalSemigroup::from_generators(&[q.div_ceil(2), q])?;
    let expected_genus = (q - 1) * (q - 1) / 4;
    let h1_non_gaps_to_2q2 = h1.non_gaps_up_to(2 * q + 2).len();
    let h2_non_gaps_to_2q2 = h2.non_gaps_up_to(2 * q + 2).len();
    let holds = [&h1, &h2].iter().all(|h| h.is_symmetric() && h.genus == expected_genus)
        && h1_non_gaps_to_2q2 == 9
        && h2_non_gaps_to_2q2 == 9;
    Ok(SemigroupDichotomy { q, expected_genus, h1, h2, h1_non_gaps_to_2q2, h2_non_gaps_to_2q2, holds })
}
