//! Congruence checking modulo powers of `[p]_q`, plus the independent
//! cross-checks: a finite-field oracle and evaluation at q = 1.
//!
//! `A ≡ B (mod [p]_q^k)` is defined as: after cancelling every factor of
//! `[p]_q` shared by numerator and denominator on each side, both
//! denominators are coprime to `[p]_q` and the cross-multiplied numerator
//! of `A - B` is divisible by `[p]_q^k`. Since `[p]_q` is irreducible over
//! the rationals for prime p, divisibility is decided exactly by one monic
//! polynomial division with remainder zero.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::arith64::{bigint_mod_u64, is_prime_u64};
use crate::error::{Error, Result};
use crate::polyring::{IntPoly, ModPoly, RatFunc, Rational};
use crate::qkit::QModulus;

/// Outcome of an exact check. A holding congruence carries the quotient
/// `(A - B) / [p]_q^k` as a reusable witness; a violated one carries the
/// nonzero polynomial remainder.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Holds { witness: RatFunc },
    Violated { remainder: IntPoly },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }
}

/// Splits `f` as `phi^v * g` with `phi` not dividing `g`.
fn strip_factor(f: &IntPoly, phi: &IntPoly) -> (IntPoly, u32) {
    let mut current = f.clone();
    let mut v = 0;
    if current.is_zero() {
        return (current, 0);
    }
    loop {
        let (quot, rem) = current.monic_divrem(phi).expect("modulus is monic");
        if rem.is_zero() {
            current = quot;
            v += 1;
        } else {
            return (current, v);
        }
    }
}

/// Cancels matched powers of `[p]_q` between numerator and denominator.
///
/// # Errors
///
/// `DenominatorNotCoprime` when the denominator retains a factor of
/// `[p]_q` after cancellation, i.e. the side has a genuine pole at the
/// p-th roots of unity and no congruence statement is meaningful for it.
pub fn phi_reduce(f: &RatFunc, modulus: &QModulus) -> Result<RatFunc> {
    let phi = modulus.phi();
    let (den, v_den) = strip_factor(f.den(), phi);
    if v_den == 0 {
        return Ok(f.clone());
    }
    let mut num = f.num().clone();
    for _ in 0..v_den {
        if num.is_zero() {
            break;
        }
        let (quot, rem) = num.monic_divrem(phi).expect("modulus is monic");
        if !rem.is_zero() {
            return Err(Error::DenominatorNotCoprime);
        }
        num = quot;
    }
    RatFunc::new(num, den)
}

/// Exact congruence check for sides already put through `phi_reduce`.
/// Callers that also run the modular oracle reduce once and reuse the
/// sides here and there.
pub fn check_congruence_reduced(
    lhs: &RatFunc,
    rhs: &RatFunc,
    modulus: &QModulus,
) -> Result<Verdict> {
    let num = &(lhs.num() * rhs.den()) - &(rhs.num() * lhs.den());
    let (quot, rem) = num.monic_divrem(modulus.poly())?;
    if rem.is_zero() {
        let witness = RatFunc::new(quot, lhs.den() * rhs.den())?;
        Ok(Verdict::Holds { witness })
    } else {
        Ok(Verdict::Violated { remainder: rem })
    }
}

/// Decides `lhs ≡ rhs (mod [p]_q^k)` exactly.
pub fn check_congruence(lhs: &RatFunc, rhs: &RatFunc, modulus: &QModulus) -> Result<Verdict> {
    let l = phi_reduce(lhs, modulus)?;
    let r = phi_reduce(rhs, modulus)?;
    check_congruence_reduced(&l, &r, modulus)
}

/// Decides exact equality of two rational functions.
pub fn check_identity(lhs: &RatFunc, rhs: &RatFunc) -> Verdict {
    let diff = &(lhs.num() * rhs.den()) - &(rhs.num() * lhs.den());
    if diff.is_zero() {
        Verdict::Holds { witness: RatFunc::zero() }
    } else {
        Verdict::Violated { remainder: diff }
    }
}

/// Decides `lhs ≡ rhs (mod p^k)` for exact rationals.
///
/// # Errors
///
/// `DenominatorDivisibleByP` when the reduced difference has p in its
/// denominator.
pub fn classical_check(lhs: &Rational, rhs: &Rational, p: u64, k: u32) -> Result<bool> {
    let diff = lhs - rhs;
    let p_big = BigInt::from(p);
    if (diff.denom() % &p_big).is_zero() {
        return Err(Error::DenominatorDivisibleByP(p));
    }
    let modulus = p_big.pow(k);
    Ok((diff.numer() % modulus).is_zero())
}

/// Confirms that both sides evaluate at q = 1 to the expected classical
/// values, taking limits through removable singularities.
pub fn q_limit_check(
    lhs: &RatFunc,
    rhs: &RatFunc,
    expected: &(Rational, Rational),
) -> Result<bool> {
    let one = Rational::from_integer(1.into());
    let lv = lhs.evaluate(&one)?;
    let rv = rhs.evaluate(&one)?;
    Ok(lv == expected.0 && rv == expected.1)
}

/// Replays a congruence check in the prime field `F_ell` and reports
/// whether the replay reaches the same divisibility verdict as the exact
/// engine. The sides must already be phi-reduced; their images are
/// recombined with `ModPoly` arithmetic, whose multiplication goes through
/// `num-bigint` rather than this crate's transform code.
///
/// # Errors
///
/// `BadOraclePrime` when `ell` is inadmissible for this instance: a
/// denominator leading coefficient vanishes mod `ell`, or the denominator
/// product collapses onto a multiple of the modulus image. The caller is
/// expected to retry with a fresh prime.
pub fn modular_oracle(
    lhs: &RatFunc,
    rhs: &RatFunc,
    modulus: &QModulus,
    exact_holds: bool,
    ell: u64,
) -> Result<bool> {
    let lc_ok = |p: &IntPoly| match p.leading() {
        Some(c) => bigint_mod_u64(c, ell) != 0,
        None => false,
    };
    if !lc_ok(lhs.den()) || !lc_ok(rhs.den()) {
        return Err(Error::BadOraclePrime);
    }
    let ln = ModPoly::from_int_poly(lhs.num(), ell);
    let ld = ModPoly::from_int_poly(lhs.den(), ell);
    let rn = ModPoly::from_int_poly(rhs.num(), ell);
    let rd = ModPoly::from_int_poly(rhs.den(), ell);
    let phi_image = ModPoly::from_int_poly(modulus.phi(), ell);

    let den_product = ld.mul(&rd);
    let (_, den_rem) = den_product
        .divrem_monic(&phi_image)
        .expect("modulus image stays monic");
    if den_rem.is_zero() {
        return Err(Error::BadOraclePrime);
    }

    let num = ln.mul(&rd).sub(&rn.mul(&ld));
    let modulus_image = ModPoly::from_int_poly(modulus.poly(), ell);
    let (_, rem) = num
        .divrem_monic(&modulus_image)
        .expect("modulus image stays monic");
    Ok(rem.is_zero() == exact_holds)
}

/// Deterministic stream of 45-bit primes for the modular oracle, seeded by
/// a run seed and a per-instance tag.
pub struct OraclePrimes {
    rng: ChaCha12Rng,
}

impl OraclePrimes {
    pub fn new(seed: u64, tag: &str) -> OraclePrimes {
        // FNV-1a over the tag, folded into the run seed.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in tag.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        OraclePrimes {
            rng: ChaCha12Rng::seed_from_u64(seed ^ h),
        }
    }
}

impl Iterator for OraclePrimes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let candidate = self.rng.gen_range((1u64 << 44)..(1u64 << 45)) | 1;
            if is_prime_u64(candidate) {
                return Some(candidate);
            }
        }
    }
}
