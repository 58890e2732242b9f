//! Primality testing and integer factorization for map coefficients.
//!
//! Only the coefficients of the searched maps are ever factored (orbit
//! iterates are not), so deterministic Miller-Rabin on `u64` plus
//! Pollard-Brent rho covers everything the pipeline needs.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Deterministic Miller-Rabin for `u64`.
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
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This base set decides primality for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Factors a positive `u64` into `(prime, exponent)` pairs, ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factor_u64 needs a positive integer");
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    let mut found = Vec::new();
    while let Some(m) = stack.pop() {
        if is_prime(m) {
            found.push(m);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    found.sort_unstable();
    for p in found {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// Pollard-Brent rho; `n` must be composite, odd-ish, and > 1.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Factors a positive big integer; errors if a prime factor does not fit in
/// `u64` (map coefficients never get close at the scales this tool targets).
pub fn factor_big(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    if n.is_one() {
        return Ok(Vec::new());
    }
    match n.to_u64() {
        Some(small) => Ok(factor_u64(small)),
        None => {
            // Peel small primes, then insist the cofactor fits in u64.
            let mut m = n.clone();
            let mut out = Vec::new();
            for p in 2u64..100_000 {
                if !is_prime(p) {
                    continue;
                }
                let pb = BigUint::from(p);
                let mut e = 0u32;
                loop {
                    let (q, r) = num_integer::Integer::div_rem(&m, &pb);
                    if !r.is_zero() {
                        break;
                    }
                    m = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((p, e));
                }
                if m.is_one() {
                    return Ok(out);
                }
                if let Some(small) = m.to_u64() {
                    for pe in factor_u64(small) {
                        out.push(pe);
                    }
                    out.sort_unstable();
                    return Ok(out);
                }
            }
            Err(Error::Domain(
                "coefficient has a prime factor beyond the supported range".into(),
            ))
        }
    }
}

/// Squarefree kernel of a positive integer: the product of primes dividing
/// it to an odd power.
pub fn squarefree_kernel(n: &BigUint) -> Result<BigUint> {
    let mut k = BigUint::one();
    for (p, e) in factor_big(n)? {
        if e % 2 == 1 {
            k *= BigUint::from(p);
        }
    }
    Ok(k)
}

/// Smallest-prime-factor sieve up to `n` (inclusive); index i holds spf(i).
pub fn spf_sieve(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Squarefree kernel of a small integer via a precomputed SPF sieve.
pub fn kernel_sieved(mut n: u64, spf: &[u32]) -> u64 {
    debug_assert!(n >= 1 && (n as usize) < spf.len());
    let mut k = 1u64;
    while n > 1 {
        let p = spf[n as usize] as u64;
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e % 2 == 1 {
            k *= p;
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(151));
        assert!(!is_prime(289)); // 17^2
        assert!(is_prime(4_294_967_291)); // largest 32-bit prime
        assert!(is_prime(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(!is_prime(18_446_744_073_709_551_555));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_u64(2560), vec![(2, 9), (5, 1)]);
        assert_eq!(factor_u64(600), vec![(2, 3), (3, 1), (5, 2)]);
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
    }

    #[test]
    fn factor_big_matches_u64_path() {
        let n = BigUint::from(240u32) * BigUint::from(10u32).pow(25);
        let fs = factor_big(&n).unwrap();
        let mut rebuilt = BigUint::one();
        for (p, e) in fs {
            rebuilt *= BigUint::from(p).pow(e);
        }
        assert_eq!(rebuilt, n);
    }

    #[test]
    fn kernels() {
        assert_eq!(squarefree_kernel(&BigUint::from(120u32)).unwrap(), BigUint::from(30u32));
        assert_eq!(squarefree_kernel(&BigUint::from(600u32)).unwrap(), BigUint::from(6u32));
        let spf = spf_sieve(1000);
        assert_eq!(kernel_sieved(120, &spf), 30);
        assert_eq!(kernel_sieved(36, &spf), 1);
        assert_eq!(kernel_sieved(1, &spf), 1);
    }
}
