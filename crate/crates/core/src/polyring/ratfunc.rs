//! Rational functions in one variable over the integers.
//!
//! A value is a pair `num / den` of integer polynomials with `den` nonzero
//! and its leading coefficient positive. The pair is *not* kept reduced:
//! common factors accumulate during arithmetic and are only divided out by
//! an explicit `normalized` call, because a gcd on the operand sizes this
//! crate works with routinely costs more than every other operation on the
//! value combined. Equality is by cross-multiplication, so two
//! representations of the same function compare equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use super::gcd::poly_gcd;
use super::poly::IntPoly;

/// Exact rational scalars.
pub type Rational = BigRational;

#[derive(Clone)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// # Errors
    ///
    /// `DivisionByZeroFunction` when `den` is the zero polynomial.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
        match den.leading() {
            None => Err(Error::DivisionByZeroFunction),
            Some(c) if c.is_negative() => Ok(RatFunc { num: -&num, den: -&den }),
            Some(_) => Ok(RatFunc { num, den }),
        }
    }

    pub fn from_poly(num: IntPoly) -> RatFunc {
        RatFunc { num, den: IntPoly::one() }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(IntPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(IntPoly::one())
    }

    pub fn from_rational(x: &Rational) -> RatFunc {
        RatFunc {
            num: IntPoly::constant(x.numer().clone()),
            den: IntPoly::constant(x.denom().clone()),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Multiplies by an exact rational scalar.
    pub fn scale_rat(&self, x: &Rational) -> RatFunc {
        if x.is_zero() {
            return RatFunc::zero();
        }
        // BigRational keeps its denominator positive, so the sign invariant
        // on `den` survives.
        RatFunc {
            num: self.num.scale(x.numer()),
            den: self.den.scale(x.denom()),
        }
    }

    /// Divides out the polynomial gcd of numerator and denominator.
    pub fn normalized(&self) -> RatFunc {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() {
            return self.clone();
        }
        let g = poly_gcd(&self.num, &self.den);
        if g.is_one() {
            return self.clone();
        }
        let num = self.num.div_exact(&g).expect("gcd divides numerator");
        let den = self.den.div_exact(&g).expect("gcd divides denominator");
        RatFunc::new(num, den).expect("denominator stays nonzero")
    }

    /// Value at a rational point, taking the limit through any removable
    /// singularity.
    ///
    /// # Errors
    ///
    /// `PoleAtPoint` when the denominator vanishes to higher order than the
    /// numerator.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        fn eval(p: &IntPoly, x: &Rational) -> Rational {
            if x.is_one() {
                Rational::from_integer(p.eval_one())
            } else {
                p.evaluate(x)
            }
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        // b*q - a is primitive for a reduced a/b, so by Gauss's lemma it
        // divides over the integers whenever it divides over the rationals.
        let root = IntPoly::from_coeffs(vec![-x.numer().clone(), x.denom().clone()]);
        loop {
            let dv = eval(&den, x);
            if !dv.is_zero() {
                return Ok(eval(&num, x) / dv);
            }
            if !eval(&num, x).is_zero() {
                return Err(Error::PoleAtPoint);
            }
            num = num.div_exact(&root).expect("shared root divides numerator");
            den = den.div_exact(&root).expect("shared root divides denominator");
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

/// Equality of values, not of representations.
impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

fn add_impl(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.num.is_zero() {
        return b.clone();
    }
    if b.num.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        return RatFunc::new(&a.num + &b.num, a.den.clone()).unwrap();
    }
    if a.den.is_one() {
        return RatFunc { num: &a.num * &b.den + &b.num, den: b.den.clone() };
    }
    if b.den.is_one() {
        return RatFunc { num: &b.num * &a.den + &a.num, den: a.den.clone() };
    }
    RatFunc {
        num: &a.num * &b.den + &b.num * &a.den,
        den: &a.den * &b.den,
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, &-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl RatFunc {
    /// # Errors
    ///
    /// `DivisionByZeroFunction` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

/// Sums by pairing neighbors until one value is left, which keeps the
/// intermediate numerators balanced in size. Linear folding would make the
/// running denominator quadratic work; here every coefficient participates
/// in O(log n) products.
pub fn sum_tree(mut terms: Vec<RatFunc>) -> RatFunc {
    if terms.is_empty() {
        return RatFunc::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc::new(p(&[1]), IntPoly::zero()),
            Err(Error::DivisionByZeroFunction)
        ));
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let f = rf(&[1], &[0, -1]);
        assert_eq!(f.num(), &p(&[-1]));
        assert_eq!(f.den(), &p(&[0, 1]));
    }

    #[test]
    fn value_equality() {
        // (1 - q^2)/(1 - q) equals (1 + q) as a function.
        assert_eq!(rf(&[1, 0, -1], &[1, -1]), rf(&[1, 1], &[1]));
        assert_ne!(rf(&[1], &[1, 1]), rf(&[1], &[1, -1]));
    }

    #[test]
    fn harmonic_pair() {
        // 1/[1] + 1/[2] = 1 + 1/(1+q) = (2+q)/(1+q)
        let s = &RatFunc::one() + &rf(&[1], &[1, 1]);
        assert_eq!(s, rf(&[2, 1], &[1, 1]));
    }

    #[test]
    fn arithmetic_matches_rationals_at_a_point() {
        let a = rf(&[1, 2], &[1, 0, 3]);
        let b = rf(&[-4, 0, 1], &[2, 1]);
        let x = Rational::new(3.into(), 7.into());
        let av = a.evaluate(&x).unwrap();
        let bv = b.evaluate(&x).unwrap();
        assert_eq!((&a + &b).evaluate(&x).unwrap(), &av + &bv);
        assert_eq!((&a - &b).evaluate(&x).unwrap(), &av - &bv);
        assert_eq!((&a * &b).evaluate(&x).unwrap(), &av * &bv);
        assert_eq!(
            a.checked_div(&b).unwrap().evaluate(&x).unwrap(),
            &av / &bv
        );
    }

    #[test]
    fn removable_singularity_is_stripped() {
        // (1 - q^2)/(1 - q) -> 2 at q = 1.
        let f = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(f.evaluate(&Rational::one()).unwrap(), Rational::from_integer(2.into()));
        // (1 - q^4)/(1 - q^2)^2 has a genuine pole at 1.
        let g = RatFunc::new(p(&[1, 0, 0, 0, -1]), &p(&[1, 0, -1]) * &p(&[1, 0, -1])).unwrap();
        assert!(matches!(g.evaluate(&Rational::one()), Err(Error::PoleAtPoint)));
    }

    #[test]
    fn pole_at_rational_point() {
        // 1/(2q - 1) at 1/2.
        let f = rf(&[1], &[-1, 2]);
        let half = Rational::new(1.into(), 2.into());
        assert!(matches!(f.evaluate(&half), Err(Error::PoleAtPoint)));
        // (2q - 1)(q + 1)/(2q - 1) -> 3/2 at 1/2 after stripping.
        let g = RatFunc::new(&p(&[-1, 2]) * &p(&[1, 1]), p(&[-1, 2])).unwrap();
        assert_eq!(g.evaluate(&half).unwrap(), Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn normalized_reduces_and_is_idempotent() {
        let f = RatFunc::new(&p(&[0, 2]) * &p(&[1, 1]), &p(&[2, 2]) * &p(&[1, 1])).unwrap();
        let n = f.normalized();
        assert_eq!(n.num(), &p(&[0, 1]));
        assert_eq!(n.den(), &p(&[1, 1]));
        assert_eq!(n, f);
        assert_eq!(n.normalized(), n);
    }

    #[test]
    fn tree_sum_matches_linear_fold() {
        let terms: Vec<RatFunc> = (1..=9)
            .map(|j| {
                let mut den = vec![0i64; j + 1];
                den[0] = 1;
                den[j] = -1;
                rf(&[1], &den) // 1/(1 - q^j)
            })
            .collect();
        let linear = terms.iter().fold(RatFunc::zero(), |acc, t| &acc + t);
        assert_eq!(sum_tree(terms), linear);
        assert!(sum_tree(Vec::new()).is_zero());
    }

    #[test]
    fn scaling_by_rationals() {
        let f = rf(&[1, 1], &[1]);
        let s = f.scale_rat(&Rational::new((-3).into(), 4.into()));
        assert_eq!(s, rf(&[-3, -3], &[4]));
    }
}
