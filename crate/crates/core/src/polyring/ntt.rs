//! Multiplication of integer polynomials by number-theoretic transforms.
//!
//! Coefficients are reduced modulo several 62-bit primes of the form
//! `c * 2^24 + 1`, multiplied pointwise in the transform domain, and
//! recombined by the Chinese remainder theorem into a symmetric residue
//! range, which recovers signed integer coefficients exactly as long as
//! twice the largest product coefficient stays below the prime product.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith64::{add_mod, bigint_mod_u64, inv_mod, is_prime_u64, mul_mod, pow_mod, sub_mod};
use super::poly::IntPoly;

/// log2 of the largest supported transform size.
pub const MAX_LOG2: u32 = 24;

/// How many transform primes are generated; bounds the usable coefficient
/// size to roughly `61 * NUM_PRIMES` bits. Oversized products fall back to
/// Karatsuba splitting in the dispatcher.
pub const NUM_PRIMES: usize = 32;

/// Montgomery arithmetic with R = 2^64 for one odd modulus below 2^62.
#[derive(Clone, Copy)]
struct Mont {
    p: u64,
    p_neg_inv: u64, // -p^{-1} mod 2^64
    r2: u64,        // 2^128 mod p
}

impl Mont {
    fn new(p: u64) -> Mont {
        // Newton iteration doubles the number of correct low bits each step.
        let mut inv = p;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        debug_assert_eq!(p.wrapping_mul(inv), 1);
        let r1 = ((u64::MAX % p) + 1) % p; // 2^64 mod p
        Mont {
            p,
            p_neg_inv: inv.wrapping_neg(),
            r2: mul_mod(r1, r1, p),
        }
    }

    #[inline(always)]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.p_neg_inv);
        let s = ((t.wrapping_add(m as u128 * self.p as u128)) >> 64) as u64;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline(always)]
    fn to_mont(&self, a: u64) -> u64 {
        self.mul(a, self.r2)
    }

    #[inline(always)]
    fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }
}

struct NttPrime {
    p: u64,
    mont: Mont,
    /// Element of multiplicative order exactly 2^24.
    root: u64,
}

impl NttPrime {
    fn new(p: u64) -> NttPrime {
        let c = (p - 1) >> MAX_LOG2;
        let root = (2u64..)
            .map(|g| pow_mod(g, c, p))
            .find(|&x| pow_mod(x, 1 << (MAX_LOG2 - 1), p) != 1)
            .unwrap();
        NttPrime {
            p,
            mont: Mont::new(p),
            root,
        }
    }
}

fn transform_primes() -> &'static [NttPrime] {
    static PRIMES: OnceLock<Vec<NttPrime>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(NUM_PRIMES);
        // Scan c downward so every prime sits just under 2^62.
        let mut c = (1u64 << 38) - 1;
        while out.len() < NUM_PRIMES {
            let p = (c << MAX_LOG2) + 1;
            if is_prime_u64(p) {
                out.push(NttPrime::new(p));
            }
            c -= 1;
        }
        out
    })
}

/// In-place transform of length `a.len()` (a power of two), values and
/// twiddles in Montgomery form.
fn ntt_in_place(a: &mut [u64], pr: &NttPrime, invert: bool) {
    let n = a.len();
    debug_assert!(n.is_power_of_two() && n <= 1 << MAX_LOG2);
    if n == 1 {
        return;
    }
    let mont = &pr.mont;
    let p = pr.p;

    // Bit-reversal permutation.
    let shift = n.leading_zeros() + 1;
    for i in 0..n {
        let j = i.reverse_bits() >> shift;
        if i < j {
            a.swap(i, j);
        }
    }

    let base_root = if invert {
        inv_mod(pr.root, p)
    } else {
        pr.root
    };
    let mut len = 2;
    while len <= n {
        let wlen = mont.to_mont(pow_mod(base_root, 1 << (MAX_LOG2 as usize - len.trailing_zeros() as usize), p));
        for block in a.chunks_exact_mut(len) {
            let (lo, hi) = block.split_at_mut(len / 2);
            let mut w = mont.to_mont(1);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let u = *x;
                let v = mont.mul(*y, w);
                *x = add_mod(u, v, p);
                *y = sub_mod(u, v, p);
                w = mont.mul(w, wlen);
            }
        }
        len <<= 1;
    }

    if invert {
        let n_inv = mont.to_mont(inv_mod(n as u64, p));
        for x in a.iter_mut() {
            *x = mont.mul(*x, n_inv);
        }
    }
}

/// How many transform primes a product of these two polynomials needs.
pub fn primes_needed(a: &IntPoly, b: &IntPoly) -> usize {
    // Each product coefficient is a sum of at most min(#terms) pairwise
    // products, so |c| < max|a| * max|b| * min_terms; one extra bit keeps
    // the symmetric range unambiguous.
    let terms = a.nonzero_terms().min(b.nonzero_terms()).max(1) as u64;
    let bound_bits = a.max_coeff_bits() + b.max_coeff_bits() + 64 - (terms - 1).leading_zeros() as u64 + 1;
    (bound_bits as usize).div_ceil(61).max(1)
}

/// Whether `mul_ntt` can multiply this pair exactly.
pub fn ntt_applicable(a: &IntPoly, b: &IntPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return true;
    }
    let result_len = a.coeffs().len() + b.coeffs().len() - 1;
    result_len <= 1 << MAX_LOG2 && primes_needed(a, b) <= NUM_PRIMES
}

/// Exact product by multi-prime NTT; the pair must satisfy `ntt_applicable`.
pub fn mul_ntt(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let result_len = a.coeffs().len() + b.coeffs().len() - 1;
    let size = result_len.next_power_of_two();
    assert!(size <= 1 << MAX_LOG2, "transform size {} too large", size);
    let t = primes_needed(a, b);
    let primes = transform_primes();
    assert!(t <= primes.len(), "coefficients too large for {} transform primes", primes.len());
    let primes = &primes[..t];

    let mut residues: Vec<Vec<u64>> = Vec::with_capacity(t);
    for pr in primes {
        let mont = &pr.mont;
        let mut fa = vec![0u64; size];
        for (i, c) in a.coeffs().iter().enumerate() {
            if !c.is_zero() {
                fa[i] = mont.to_mont(bigint_mod_u64(c, pr.p));
            }
        }
        let mut fb = vec![0u64; size];
        for (i, c) in b.coeffs().iter().enumerate() {
            if !c.is_zero() {
                fb[i] = mont.to_mont(bigint_mod_u64(c, pr.p));
            }
        }
        ntt_in_place(&mut fa, pr, false);
        ntt_in_place(&mut fb, pr, false);
        for (x, y) in fa.iter_mut().zip(fb.iter()) {
            *x = mont.mul(*x, *y);
        }
        ntt_in_place(&mut fa, pr, true);
        for x in fa.iter_mut() {
            *x = mont.from_mont(*x);
        }
        fa.truncate(result_len);
        residues.push(fa);
    }

    // Chinese remainder reconstruction into the symmetric range.
    let product: BigInt = primes.iter().map(|pr| BigInt::from(pr.p)).product();
    let half = &product / 2;
    let basis: Vec<BigInt> = primes
        .iter()
        .map(|pr| {
            let m_i = &product / pr.p;
            let y_i = inv_mod(bigint_mod_u64(&m_i, pr.p), pr.p);
            m_i * BigInt::from(y_i)
        })
        .collect();

    let mut coeffs = vec![BigInt::zero(); result_len];
    for (k, out) in coeffs.iter_mut().enumerate() {
        let mut acc = BigInt::zero();
        for (res, b_i) in residues.iter().zip(basis.iter()) {
            if res[k] != 0 {
                acc += b_i * BigInt::from(res[k]);
            }
        }
        acc %= &product;
        if acc > half {
            acc -= &product;
        }
        *out = acc;
    }
    IntPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::mul::mul_schoolbook;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn transform_primes_have_order() {
        for pr in transform_primes() {
            assert!(is_prime_u64(pr.p));
            assert!(pr.p > 1 << 61 && pr.p < 1 << 62);
            assert_eq!((pr.p - 1) % (1 << MAX_LOG2), 0);
            assert_eq!(pow_mod(pr.root, 1 << MAX_LOG2, pr.p), 1);
            assert_ne!(pow_mod(pr.root, 1 << (MAX_LOG2 - 1), pr.p), 1);
        }
    }

    #[test]
    fn montgomery_roundtrip() {
        let pr = &transform_primes()[0];
        let m = &pr.mont;
        for a in [0u64, 1, 2, 12345, pr.p - 1] {
            assert_eq!(m.from_mont(m.to_mont(a)), a);
        }
        assert_eq!(m.from_mont(m.mul(m.to_mont(3), m.to_mont(5))), 15);
    }

    fn random_poly(rng: &mut ChaCha8Rng, len: usize, bits: u64) -> IntPoly {
        let coeffs = (0..len)
            .map(|_| {
                let bytes: Vec<u8> = (0..bits.div_ceil(8)).map(|_| rng.gen()).collect();
                let mag = num_bigint::BigUint::from_bytes_le(&bytes);
                let v = BigInt::from(mag);
                if rng.gen() {
                    -v
                } else {
                    v
                }
            })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    #[test]
    fn agrees_with_schoolbook() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (la, lb, bits) in [(1, 1, 8), (5, 3, 16), (64, 64, 64), (100, 257, 200), (33, 500, 500)] {
            let a = random_poly(&mut rng, la, bits);
            let b = random_poly(&mut rng, lb, bits);
            assert!(ntt_applicable(&a, &b));
            assert_eq!(mul_ntt(&a, &b), mul_schoolbook(&a, &b), "size {}x{} bits {}", la, lb, bits);
        }
    }

    #[test]
    fn zero_and_identity() {
        let a = IntPoly::from_i64_coeffs(&[3, 0, -7, 1]);
        assert!(mul_ntt(&a, &IntPoly::zero()).is_zero());
        assert_eq!(mul_ntt(&a, &IntPoly::one()), a);
    }
}
