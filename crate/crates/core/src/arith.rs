//! Integer helpers: primality, factorization, binomials mod p.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// If `n = p^e` for a prime `p` returns `(p, e)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c * c == n)
}

pub fn is_power_of(mut n: u64, base: u64) -> bool {
    if n == 0 || base < 2 {
        return false;
    }
    while n.is_multiple_of(base) {
        n /= base;
    }
    n == 1
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binom_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * mod_pow(den, p - 2, p) % p
}

/// Generalized `binom(n, k) mod p` for any integer `n`, using
/// `binom(-m, k) = (-1)^k binom(m + k - 1, k)`.
pub fn binom_mod_p_signed(n: i64, k: u64, p: u64) -> u64 {
    if n >= 0 {
        return binom_mod_p(n as u64, k, p);
    }
    let m = (-n) as u64;
    let b = binom_mod_p(m + k - 1, k, p);
    if k % 2 == 1 {
        (p - b) % p
    } else {
        b
    }
}

/// Extended gcd over the integers: returns `(g, u, v)` with `u a + v b = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, u, v) = ext_gcd(b, a.rem_euclid(b));
        (g, v, u - (a.div_euclid(b)) * v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lucas_matches_direct() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..30 {
                for k in 0..=n {
                    assert_eq!(binom_mod_p(n, k, p), binom(n, k) % p, "n={n} k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn signed_binomial() {
        // binom(-1, k) = (-1)^k
        assert_eq!(binom_mod_p_signed(-1, 3, 5), 4);
        assert_eq!(binom_mod_p_signed(-1, 2, 5), 1);
        // binom(-2, 2) = 3
        assert_eq!(binom_mod_p_signed(-2, 2, 7), 3);
    }

    #[test]
    fn factor_and_powers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(exact_sqrt(6561), Some(81));
        assert_eq!(exact_sqrt(80), None);
        assert!(is_power_of(27, 3) && !is_power_of(15, 3));
        let (g, u, v) = ext_gcd(5, 2);
        assert_eq!((g, 5 * u + 2 * v), (1, 1));
    }
}
