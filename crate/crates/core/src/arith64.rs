//! Modular arithmetic on `u64` operands, used by the number-theoretic
//! transform and the finite-field oracle.

/// `(a + b) mod m`, assuming `a, b < m < 2^63`.
#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// `(a - b) mod m`, assuming `a, b < m`.
#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

/// `(a * b) mod m` through a 128-bit intermediate.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `(a ^ e) mod m` by square and multiply.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// `a^{-1} mod m` for `gcd(a, m) = 1`, by the extended Euclidean algorithm.
pub fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m as i128) as u64
}

/// Deterministic Miller-Rabin primality test, valid for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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
    // This base set decides primality for every n < 2^64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
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

/// Ascending iterator over primes in `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&n| is_prime_u64(n))
}

/// Residue of a signed big integer in `[0, m)`.
pub fn bigint_mod_u64(x: &num_bigint::BigInt, m: u64) -> u64 {
    // Horner over the 64-bit magnitude digits, most significant first.
    let base = (u64::MAX % m) + 1; // 2^64 mod m, with m < 2^63
    let digits: Vec<u64> = x.iter_u64_digits().collect();
    let mut r = 0u64;
    for &d in digits.iter().rev() {
        r = mul_mod(r, base % m, m);
        r = add_mod(r, d % m, m);
    }
    if x.sign() == num_bigint::Sign::Minus && r != 0 {
        m - r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let got: Vec<u64> = primes_in(2, 30).collect();
        assert_eq!(got, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn known_composites_and_primes() {
        assert!(is_prime_u64(1_000_003));
        assert!(is_prime_u64(65_537));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(6_700_417 * 3));
        assert!(is_prime_u64((1 << 61) - 1));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = 1_000_003;
        for a in [2u64, 17, 999_999, 123_456] {
            assert_eq!(mul_mod(a, inv_mod(a, m), m), 1);
        }
    }

    #[test]
    fn bigint_residues() {
        use num_bigint::BigInt;
        let m = 1_000_003u64;
        let x = BigInt::from(10).pow(50) + 7;
        let expect = {
            use num_traits::ToPrimitive;
            let r: BigInt = &x % BigInt::from(m);
            r.to_u64().unwrap()
        };
        assert_eq!(bigint_mod_u64(&x, m), expect);
        assert_eq!(bigint_mod_u64(&-&x, m), m - expect);
        assert_eq!(bigint_mod_u64(&BigInt::from(0), m), 0);
        assert_eq!(bigint_mod_u64(&BigInt::from(-5), m), m - 5);
    }
}
