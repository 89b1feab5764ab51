//! Integer utilities: modular arithmetic, deterministic primality testing,
//! complete factorization of machine-sized integers, Legendre symbols,
//! Euler's phi, and multiplicative orders.
//!
//! Factorization is complete for any `u64` (trial division plus Brent's rho
//! with deterministic parameters). Larger inputs are rejected with an error
//! rather than silently mis-factored.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Rational;

/// Error raised by integer routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Zero cannot be factored or has no valuation data.
    ZeroValue,
    /// The integer exceeds the complete-factorization range (`u64`).
    TooLargeToFactor(String),
    /// A prime was required (for example as a finite place).
    NotPrime(u64),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::ZeroValue => write!(f, "zero has no factorization"),
            ArithError::TooLargeToFactor(v) => {
                write!(f, "{v} is too large to factor exactly (limit is 64 bits)")
            }
            ArithError::NotPrime(n) => write!(f, "{n} is not a prime number"),
        }
    }
}

impl std::error::Error for ArithError {}

/// `(a * b) mod m` without overflow.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` by binary exponentiation. `m` must be nonzero.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // This base set is known to be exact below 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard's rho. Returns a nontrivial factor of an odd
/// composite `n`. Deterministic: the polynomial offset is stepped through
/// fixed values until a factor appears.
fn brent_rho(n: u64) -> u64 {
    debug_assert!(n > 3 && n % 2 == 1 && !is_prime(n));
    for c in 1..n {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num_integer::gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("every odd composite has a rho factor for some offset");
}

/// Complete prime factorization of `n >= 1`, as sorted `(prime, exponent)`
/// pairs. `factor(1)` is empty. Panics on zero.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "zero has no factorization");
    let mut primes = Vec::new();
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
    }
    // Trial division by 6k±1 up to 2^10 clears small factors cheaply.
    let mut k = 7u64;
    while k <= 1024 && k * k <= n {
        for p in [k, k + 4] {
            while n % p == 0 {
                primes.push(p);
                n /= p;
            }
        }
        k += 6;
    }
    // Whatever is left splits recursively via rho.
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            primes.push(m);
        } else {
            let d = brent_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Factors `|n|` for a nonzero big integer, failing if it exceeds `u64`.
pub fn factor_bigint(n: &BigInt) -> Result<Vec<(u64, u32)>, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroValue);
    }
    let mag = n
        .abs()
        .to_u64()
        .ok_or_else(|| ArithError::TooLargeToFactor(n.to_string()))?;
    Ok(factor(mag))
}

/// True when `|n|` is squarefree. Fails on zero or oversized input.
pub fn is_squarefree_int(n: &BigInt) -> Result<bool, ArithError> {
    Ok(factor_bigint(n)?.iter().all(|&(_, e)| e == 1))
}

/// The set of primes dividing the numerator or denominator of a nonzero
/// rational.
pub fn prime_support(r: &Rational) -> Result<BTreeSet<u64>, ArithError> {
    if r.is_zero() {
        return Err(ArithError::ZeroValue);
    }
    let mut out = BTreeSet::new();
    for (p, _) in factor_bigint(r.numer())? {
        out.insert(p);
    }
    for (p, _) in factor_bigint(r.denom())? {
        out.insert(p);
    }
    Ok(out)
}

/// Legendre symbol `(a|p)` for an odd prime `p`: `1` for nonzero squares,
/// `-1` for non-squares, `0` when `p | a`.
pub fn legendre(a: &BigInt, p: u64) -> i32 {
    debug_assert!(p > 2 && is_prime(p));
    let r = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    if r == 0 {
        return 0;
    }
    match powmod(r, (p - 1) / 2, p) {
        1 => 1,
        x => {
            debug_assert_eq!(x, p - 1);
            -1
        }
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut out = n;
    for (p, _) in factor(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Multiplicative order of `a` modulo `n` (requires `gcd(a, n) = 1`,
/// `n >= 1`). Computed by shrinking divisors of `phi(n)`.
pub fn ord_mod(a: u64, n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let a = a % n;
    assert_eq!(num_integer::gcd(a, n), 1, "order requires gcd(a, n) = 1");
    let mut ord = euler_phi(n);
    for (p, _) in factor(ord) {
        while ord % p == 0 && powmod(a, ord / p, n) == 1 {
            ord /= p;
        }
    }
    ord
}

/// Smallest primitive root modulo an odd prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    debug_assert!(p > 2 && is_prime(p));
    let phi_factors = factor(p - 1);
    'cand: for g in 2..p {
        for &(q, _) in &phi_factors {
            if powmod(g, (p - 1) / q, p) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root");
}

/// All primes up to and including `n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Splits a nonzero rational as `p^v * u` with `u` a `p`-adic unit
/// (numerator and denominator both prime to `p`). Returns `(v, u)`.
pub fn p_part(r: &Rational, p: u64) -> (i64, Rational) {
    assert!(!r.is_zero(), "zero has no p-adic valuation");
    let pb = BigInt::from(p);
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut v: i64 = 0;
    while (&num % &pb).is_zero() {
        num /= &pb;
        v += 1;
    }
    while (&den % &pb).is_zero() {
        den /= &pb;
        v -= 1;
    }
    (v, Rational::new(num, den))
}

/// Residue modulo 8 of a rational that is a 2-adic unit. For odd `d`,
/// `1/d = d (mod 8)`, so the residue is `n * d mod 8`.
pub fn unit_mod8(u: &Rational) -> u64 {
    let eight = BigInt::from(8);
    let n = u.numer().mod_floor(&eight).to_u64().unwrap();
    let d = u.denom().mod_floor(&eight).to_u64().unwrap();
    debug_assert!(n % 2 == 1 && d % 2 == 1, "not a 2-adic unit");
    (n * d) % 8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality_matches_trial_division_small() {
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..2000 {
            assert_eq!(is_prime(n), naive(n), "n = {n}");
        }
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn factorization_reconstructs_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n: u64 = rng.gen_range(1..=1_000_000_000_000);
            let fs = factor(n);
            let mut prod = 1u64;
            for &(p, e) in &fs {
                assert!(is_prime(p));
                prod *= p.pow(e);
            }
            assert_eq!(prod, n);
            for w in fs.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
        }
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        // Semiprime with two large factors exercises the rho path.
        assert_eq!(factor(2_147_483_647 * 65_537), vec![(65_537, 1), (2_147_483_647, 1)]);
    }

    #[test]
    fn legendre_symbol_counts_squares() {
        for p in [3u64, 5, 7, 11, 13, 10007] {
            let squares: BTreeSet<u64> = (1..p).map(|a| mulmod(a, a, p)).collect();
            for a in 1..p.min(200) {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre(&BigInt::from(a), p), expected, "({a}|{p})");
            }
            assert_eq!(legendre(&BigInt::from(p), p), 0);
        }
        // (-1|p) = 1 iff p = 1 mod 4.
        assert_eq!(legendre(&BigInt::from(-1), 5), 1);
        assert_eq!(legendre(&BigInt::from(-1), 3), -1);
        assert_eq!(legendre(&BigInt::from(-1), 7), -1);
    }

    #[test]
    fn phi_and_orders() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(16), 8);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(euler_phi(12), 4);
        // Orders divide phi and reproduce by brute force.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let n: u64 = rng.gen_range(2..300);
            let a: u64 = rng.gen_range(1..n);
            if num_integer::gcd(a, n) != 1 {
                continue;
            }
            let ord = ord_mod(a, n);
            assert_eq!(euler_phi(n) % ord, 0);
            let mut x = 1u64;
            for k in 1..=ord {
                x = mulmod(x, a, n);
                if k < ord {
                    assert_ne!(x, 1, "a={a} n={n}");
                }
            }
            assert_eq!(x, 1);
        }
        assert_eq!(ord_mod(3, 8), 2);
        assert_eq!(ord_mod(2, 5), 4);
        assert_eq!(ord_mod(7, 16), 2);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(11), 2);
        assert_eq!(primitive_root(13), 2);
        for p in [5u64, 7, 11, 13, 101] {
            assert_eq!(ord_mod(primitive_root(p), p), p - 1);
        }
    }

    #[test]
    fn sieve_matches_primality() {
        let ps = primes_up_to(1000);
        assert_eq!(ps.len(), 168);
        for &p in &ps {
            assert!(is_prime(p));
        }
        for n in 2..=1000u64 {
            assert_eq!(ps.binary_search(&n).is_ok(), is_prime(n));
        }
    }

    #[test]
    fn p_adic_split() {
        let (v, u) = p_part(&rat(12, 5), 2);
        assert_eq!(v, 2);
        assert_eq!(u, rat(3, 5));
        let (v, u) = p_part(&rat(5, 8), 2);
        assert_eq!(v, -3);
        assert_eq!(u, rat(5, 1));
        let (v, u) = p_part(&rat(-9, 7), 3);
        assert_eq!(v, 2);
        assert_eq!(u, rat(-1, 7));
        assert_eq!(unit_mod8(&rat(3, 5)), 7); // 3 * 5 = 15 = 7 mod 8
        assert_eq!(unit_mod8(&rat(-1, 1)), 7);
        assert_eq!(unit_mod8(&rat(1, 7)), 7);
    }

    #[test]
    fn rational_prime_support() {
        let s = prime_support(&rat(12, 35)).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
        assert!(prime_support(&rat(0, 1)).is_err());
    }
}
