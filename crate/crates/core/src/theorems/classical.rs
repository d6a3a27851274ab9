//! Classical congruence sides as exact rationals: the q = 1 shadows of the
//! catalogued q-statements, checked modulo prime powers in their own right.

use num_bigint::BigInt;
use num_traits::One;

use crate::polyring::Rational;

fn rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `sum_{j=1}^{n} 1/j^d`.
pub fn harmonic_power(n: u64, d: u32) -> Rational {
    (1..=n)
        .map(|j| Rational::new(BigInt::one(), BigInt::from(j).pow(d)))
        .sum()
}

/// The Fermat quotient `(m^(p-1) - 1) / p`, an integer for p prime, p ∤ m.
pub fn fermat_quotient(p: u64, m: u64) -> Rational {
    let num = BigInt::from(m).pow((p - 1) as u32) - 1;
    Rational::new(num, p.into())
}

/// Harmonic half sum against the base-2 Fermat quotient, modulo p^2:
/// `sum_{j=1}^{(p-1)/2} 1/j  ≡  -2 Q + Q^2 p`.
pub fn lehmer_sides(p: u64) -> (Rational, Rational) {
    let q = fermat_quotient(p, 2);
    let lhs = harmonic_power((p - 1) / 2, 1);
    let rhs = &(&q * &q) * &rat(p.into()) - &q * &rat(2.into());
    (lhs, rhs)
}

/// Wolstenholme: the full harmonic sum vanishes modulo p^2 for p >= 5.
pub fn wolstenholme_sides(p: u64) -> (Rational, Rational) {
    (harmonic_power(p - 1, 1), Rational::from_integer(0.into()))
}

/// Morley: `(-1)^((p-1)/2) binom(p-1, (p-1)/2) ≡ 4^(p-1) (mod p^3)`.
pub fn morley_sides(p: u64) -> (Rational, Rational) {
    let h = (p - 1) / 2;
    let mut lhs = num_integer::binomial(BigInt::from(p - 1), BigInt::from(h));
    if h % 2 == 1 {
        lhs = -lhs;
    }
    (rat(lhs), rat(BigInt::from(4).pow((p - 1) as u32)))
}

/// Granville's product form:
/// `(-1)^((p-1)(m-1)/2) prod_k binom(p-1, floor(kp/m)) ≡ m^p - m + 1 (mod p^2)`.
pub fn granville_sides(p: u64, m: u64) -> (Rational, Rational) {
    let mut prod = BigInt::one();
    for k in 1..m {
        prod *= num_integer::binomial(BigInt::from(p - 1), BigInt::from(k * p / m));
    }
    if ((p - 1) * (m - 1) / 2) % 2 == 1 {
        prod = -prod;
    }
    let rhs = BigInt::from(m).pow(p as u32) - m + 1u32;
    (rat(prod), rat(rhs))
}

/// Lerch: `(m^p - m)/p ≡ sum_{j=1}^{p-1} floor(jm/p)/j (mod p)`.
pub fn lerch_sides(p: u64, m: u64) -> (Rational, Rational) {
    let lhs = Rational::new(BigInt::from(m).pow(p as u32) - m, p.into());
    let rhs = (1..p)
        .map(|j| Rational::new((j * m / p).into(), j.into()))
        .sum();
    (lhs, rhs)
}

/// Skula's form: `Q^2 ≡ -sum_{j=1}^{p-1} 2^j / j^2 (mod p)` for the base-2
/// Fermat quotient Q.
pub fn skula_sides(p: u64) -> (Rational, Rational) {
    let q = fermat_quotient(p, 2);
    let sum: Rational = (1..p)
        .map(|j| Rational::new(BigInt::from(2).pow(j as u32), BigInt::from(j).pow(2)))
        .sum();
    (&q * &q, -sum)
}

/// Glaisher's form: `Q ≡ -sum_{j=1}^{p-1} 2^(j-1) / j (mod p)`.
pub fn glaisher_sides(p: u64) -> (Rational, Rational) {
    let sum: Rational = (1..p)
        .map(|j| Rational::new(BigInt::from(2).pow((j - 1) as u32), j.into()))
        .sum();
    (fermat_quotient(p, 2), -sum)
}
