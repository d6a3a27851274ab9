//! Polynomial multiplication routes and the dispatcher that picks one.
//!
//! Three exact routes with identical results:
//!
//! * schoolbook with zero-coefficient skipping, unbeatable when one factor
//!   is sparse (multiplying a long running product by `1 - q^j` touches
//!   two diagonals only);
//! * Karatsuba for dense mid-size operands and as the splitting fallback
//!   when a product is too large for the transform;
//! * multi-prime NTT for large dense operands.
//!
//! The dispatcher compares rough cost estimates. Every route is public so
//! tests can pin them against each other and benchmarks can race them.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ntt;
use super::poly::IntPoly;

/// Dense operands shorter than this always go through schoolbook.
const KARATSUBA_MIN: usize = 48;

pub fn mul_schoolbook(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    // Iterate over the sparser factor's nonzero terms.
    let (outer, inner) = if a.nonzero_terms() <= b.nonzero_terms() {
        (a, b)
    } else {
        (b, a)
    };
    let mut acc = vec![BigInt::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, c) in outer.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, d) in inner.coeffs().iter().enumerate() {
            if !d.is_zero() {
                acc[i + j] += c * d;
            }
        }
    }
    IntPoly::from_coeffs(acc)
}

pub fn mul_karatsuba(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let (la, lb) = (a.coeffs().len(), b.coeffs().len());
    if la.min(lb) < KARATSUBA_MIN {
        return mul_schoolbook(a, b);
    }
    let m = la.max(lb) / 2;
    let split = |p: &IntPoly| {
        let c = p.coeffs();
        if c.len() <= m {
            (p.clone(), IntPoly::zero())
        } else {
            (
                IntPoly::from_coeffs(c[..m].to_vec()),
                IntPoly::from_coeffs(c[m..].to_vec()),
            )
        }
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let z0 = mul(&a0, &b0);
    let z2 = mul(&a1, &b1);
    let z1 = &mul(&(&a0 + &a1), &(&b0 + &b1)) - &(&z0 + &z2);
    let mut acc = vec![BigInt::zero(); la + lb - 1];
    for (dst, part) in [(0, &z0), (m, &z1), (2 * m, &z2)] {
        for (i, c) in part.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc[dst + i] += c;
            }
        }
    }
    IntPoly::from_coeffs(acc)
}

pub use super::ntt::mul_ntt;

/// Chooses a multiplication route from operand shape.
pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let (na, nb) = (a.nonzero_terms(), b.nonzero_terms());
    let (la, lb) = (a.coeffs().len(), b.coeffs().len());
    if na.min(nb) <= 4 || la.min(lb) < KARATSUBA_MIN {
        return mul_schoolbook(a, b);
    }

    // Schoolbook does na*nb big-integer multiply-adds; weight them by
    // operand word counts. The transform does 3 forward/inverse passes of
    // size S per prime at roughly one machine multiply per point.
    let words = (a.max_coeff_bits().div_ceil(64) * b.max_coeff_bits().div_ceil(64)).max(1);
    let school_cost = na as u128 * nb as u128 * (2 + words as u128);
    let ntt_cost = {
        let size = (la + lb - 1).next_power_of_two();
        let t = ntt::primes_needed(a, b) as u128;
        t * 3 * size as u128 * (size.trailing_zeros() as u128 + 1)
    };
    if ntt::ntt_applicable(a, b) && ntt_cost < school_cost {
        mul_ntt(a, b)
    } else if school_cost < 1 << 24 {
        mul_schoolbook(a, b)
    } else {
        // Karatsuba recurses back into this dispatcher, so oversized
        // products are split until a transform or schoolbook fits.
        mul_karatsuba(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(rng: &mut ChaCha8Rng, len: usize, bits: u64, sparsity: f64) -> IntPoly {
        let coeffs = (0..len)
            .map(|_| {
                if rng.gen::<f64>() < sparsity {
                    return BigInt::zero();
                }
                let bytes: Vec<u8> = (0..bits.div_ceil(8)).map(|_| rng.gen()).collect();
                let v = BigInt::from(num_bigint::BigUint::from_bytes_le(&bytes));
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
    fn routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (la, lb, bits, sp) in [
            (3, 200, 30, 0.0),
            (60, 60, 100, 0.0),
            (150, 90, 10, 0.5),
            (300, 300, 8, 0.9),
            (512, 100, 256, 0.2),
        ] {
            let a = random_poly(&mut rng, la, bits, sp);
            let b = random_poly(&mut rng, lb, bits, sp);
            let expect = mul_schoolbook(&a, &b);
            assert_eq!(mul_karatsuba(&a, &b), expect);
            assert_eq!(mul_ntt(&a, &b), expect);
            assert_eq!(mul(&a, &b), expect);
        }
    }

    #[test]
    fn karatsuba_handles_unbalanced_lengths() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_poly(&mut rng, 50, 40, 0.0);
        let b = random_poly(&mut rng, 400, 40, 0.0);
        assert_eq!(mul_karatsuba(&a, &b), mul_schoolbook(&a, &b));
    }
}
