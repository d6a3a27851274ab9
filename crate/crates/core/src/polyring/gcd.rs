//! Polynomial gcd over the integers by the primitive polynomial remainder
//! sequence: pseudo-divide, strip content, repeat. Coefficient growth stays
//! tame because every remainder is reduced to its primitive part.

use num_integer::Integer;
use num_traits::Zero;

use super::poly::IntPoly;

/// Pseudo-remainder of `a` by nonzero `b`: the remainder of
/// `lc(b)^(deg a - deg b + 1) * a` under ordinary division by `b`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lead = r.leading().unwrap().clone();
        r = &r.scale(&lb) - &b.scale(&lead).shifted(dr - db);
    }
    r
}

/// Greatest common divisor in `Z[q]`, sign-normalized to a positive leading
/// coefficient; integer content is included. `poly_gcd(0, 0) = 0`.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return sign_normal(b);
    }
    if b.is_zero() {
        return sign_normal(a);
    }
    let content = a.content().gcd(&b.content());
    let mut u = a.primitive_part();
    let mut v = b.primitive_part();
    if u.degree() < v.degree() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_zero() {
        let r = pseudo_rem(&u, &v).primitive_part();
        u = std::mem::replace(&mut v, r);
    }
    u.scale(&content)
}

fn sign_normal(p: &IntPoly) -> IntPoly {
    match p.leading() {
        Some(c) if c < &num_bigint::BigInt::zero() => -p,
        _ => p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn cyclotomic_style_gcd() {
        // gcd(1 - q^6, 1 - q^4) = 1 - q^2, normalized to q^2 - 1.
        let a = p(&[1, 0, 0, 0, 0, 0, -1]);
        let b = p(&[1, 0, 0, 0, -1]);
        assert_eq!(poly_gcd(&a, &b), p(&[-1, 0, 1]));
    }

    #[test]
    fn common_factor_recovered() {
        let g = p(&[1, 1, 1]);
        let a = &p(&[1, -1]) * &g;
        let b = &p(&[1, 1]) * &g;
        assert_eq!(poly_gcd(&a, &b), g);
    }

    #[test]
    fn contents_contribute() {
        let a = p(&[2, 2]);
        let b = p(&[4, 4]);
        assert_eq!(poly_gcd(&a, &b), p(&[2, 2]));
        assert_eq!(poly_gcd(&a, &IntPoly::zero()), a);
        assert!(poly_gcd(&IntPoly::zero(), &IntPoly::zero()).is_zero());
    }

    #[test]
    fn coprime_inputs_give_constant() {
        let g = poly_gcd(&p(&[1, -1]), &p(&[1, 1]));
        assert_eq!(g.degree(), Some(0));
    }
}
