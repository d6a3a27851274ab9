//! Polynomials with coefficients in a prime field `F_m`, `m < 2^62`.
//!
//! This is the arithmetic the modular cross-check runs on. Multiplication
//! deliberately avoids the crate's own transform code: coefficients are
//! packed into one big integer per operand (Kronecker substitution, 16
//! bytes per slot) and multiplied by `num-bigint`, so a defect in the exact
//! polynomial multiplier cannot cancel against itself when the two results
//! are compared.

use num_bigint::BigUint;

use crate::arith64::{add_mod, bigint_mod_u64, mul_mod, sub_mod};
use super::poly::IntPoly;

/// Bytes per coefficient slot; 2^128 headroom per convolution entry.
const SLOT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    m: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(m: u64, mut coeffs: Vec<u64>) -> ModPoly {
        assert!(m > 1 && m < 1 << 62);
        for c in &mut coeffs {
            *c %= m;
        }
        let mut p = ModPoly { m, coeffs };
        p.trim();
        p
    }

    pub fn zero(m: u64) -> ModPoly {
        ModPoly::new(m, Vec::new())
    }

    /// Image of an integer polynomial in `F_m[q]`.
    pub fn from_int_poly(p: &IntPoly, m: u64) -> ModPoly {
        ModPoly::new(m, p.coeffs().iter().map(|c| bigint_mod_u64(c, m)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, rhs: &ModPoly) -> ModPoly {
        assert_eq!(self.m, rhs.m);
        let mut coeffs = vec![0u64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, out) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *out = add_mod(a, b, self.m);
        }
        let mut p = ModPoly { m: self.m, coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, rhs: &ModPoly) -> ModPoly {
        assert_eq!(self.m, rhs.m);
        let mut coeffs = vec![0u64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, out) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *out = sub_mod(a, b, self.m);
        }
        let mut p = ModPoly { m: self.m, coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, rhs: &ModPoly) -> ModPoly {
        assert_eq!(self.m, rhs.m);
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::zero(self.m);
        }
        // Each convolution entry is a sum of at most min(len) products of
        // values below m, so it fits the 128-bit slot whenever
        // 2*bits(m) + log2(min len) stays within 128.
        let min_len = self.coeffs.len().min(rhs.coeffs.len()) as u32;
        let bits = 64 - (self.m - 1).leading_zeros();
        assert!(
            2 * bits + (32 - min_len.leading_zeros()) <= 128,
            "modulus too wide for packed multiplication at this length"
        );
        let pack = |p: &ModPoly| {
            let mut bytes = vec![0u8; p.coeffs.len() * SLOT];
            for (i, &c) in p.coeffs.iter().enumerate() {
                bytes[i * SLOT..i * SLOT + 8].copy_from_slice(&c.to_le_bytes());
            }
            BigUint::from_bytes_le(&bytes)
        };
        let product = pack(self) * pack(rhs);
        let bytes = product.to_bytes_le();
        let out_len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut coeffs = vec![0u64; out_len];
        for (i, out) in coeffs.iter_mut().enumerate() {
            let mut slot = [0u8; SLOT];
            let start = i * SLOT;
            if start >= bytes.len() {
                break;
            }
            let end = (start + SLOT).min(bytes.len());
            slot[..end - start].copy_from_slice(&bytes[start..end]);
            *out = (u128::from_le_bytes(slot) % self.m as u128) as u64;
        }
        let mut p = ModPoly { m: self.m, coeffs };
        p.trim();
        p
    }

    /// Quotient and remainder by a divisor whose leading coefficient is 1.
    pub fn divrem_monic(&self, divisor: &ModPoly) -> Option<(ModPoly, ModPoly)> {
        assert_eq!(self.m, divisor.m);
        if divisor.leading() != Some(1) {
            return None;
        }
        let m = self.m;
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Some((ModPoly::zero(m), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len() - db];
        for i in (db..self.coeffs.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            rem[i] = 0;
            for (j, &b) in divisor.coeffs[..db].iter().enumerate() {
                if b != 0 {
                    rem[i - db + j] = sub_mod(rem[i - db + j], mul_mod(c, b, m), m);
                }
            }
            quot[i - db] = c;
        }
        rem.truncate(db);
        Some((ModPoly::new(m, quot), ModPoly::new(m, rem)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mul_direct(a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_zero() || b.is_zero() {
            return ModPoly::zero(a.m);
        }
        let mut coeffs = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = add_mod(coeffs[i + j], mul_mod(x, y, a.m), a.m);
            }
        }
        ModPoly::new(a.m, coeffs)
    }

    #[test]
    fn packed_mul_matches_direct() {
        let m = 35_184_372_088_777u64; // 45-bit prime
        assert!(crate::arith64::is_prime_u64(m));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (la, lb) in [(1, 1), (4, 9), (33, 70), (200, 150)] {
            let a = ModPoly::new(m, (0..la).map(|_| rng.gen::<u64>() % m).collect());
            let b = ModPoly::new(m, (0..lb).map(|_| rng.gen::<u64>() % m).collect());
            assert_eq!(a.mul(&b), mul_direct(&a, &b));
        }
    }

    #[test]
    fn reduction_of_int_poly() {
        let m = 97u64;
        let p = IntPoly::from_i64_coeffs(&[-1, 98, 0, 194]);
        let r = ModPoly::from_int_poly(&p, m);
        assert_eq!(r.coeffs(), &[96, 1]);
        assert_eq!(r.degree(), Some(1));
    }

    #[test]
    fn divrem_roundtrip() {
        let m = 1_000_003u64;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut d_coeffs: Vec<u64> = (0..6).map(|_| rng.gen::<u64>() % m).collect();
        d_coeffs.push(1); // monic
        let d = ModPoly::new(m, d_coeffs);
        let a = ModPoly::new(m, (0..40).map(|_| rng.gen::<u64>() % m).collect());
        let (q, r) = a.divrem_monic(&d).unwrap();
        assert!(r.degree() < d.degree());
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(a.divrem_monic(&ModPoly::new(m, vec![1, 2])).is_none());
    }
}
