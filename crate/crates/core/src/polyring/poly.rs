//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order of exponent: `coeffs[i]` is
//! the coefficient of `q^i`. The zero polynomial is the empty vector, and a
//! stored trailing coefficient is never zero. The degree of the zero
//! polynomial is `None`, which compares below every `Some(n)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            IntPoly::zero()
        } else {
            IntPoly { coeffs: vec![c] }
        }
    }

    pub fn constant_i64(c: i64) -> Self {
        IntPoly::constant(BigInt::from(c))
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    /// `1 - q^e` for `e >= 1`, the building block of q-Pochhammer factors.
    pub fn one_minus_q_pow(e: usize) -> Self {
        assert!(e >= 1);
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[0] = BigInt::one();
        coeffs[e] = -BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when the leading coefficient is exactly 1.
    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Number of nonzero coefficients.
    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Largest coefficient magnitude in bits.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.magnitude().bits()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `q^e`.
    pub fn shifted(&self, e: usize) -> IntPoly {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Substitution `q -> q^s` for `s >= 1`.
    pub fn dilate(&self, s: usize) -> IntPoly {
        assert!(s >= 1);
        if s == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * s] = c.clone();
            }
        }
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplication by `1 - q^d` in one linear pass.
    pub fn mul_by_one_minus_q_pow(&self, d: usize) -> IntPoly {
        assert!(d >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n + d);
        for i in 0..n + d {
            let mut c = if i < n { self.coeffs[i].clone() } else { BigInt::zero() };
            if i >= d {
                c -= &self.coeffs[i - d];
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Multiplication by `1 + q^d` in one linear pass.
    pub fn mul_by_one_plus_q_pow(&self, d: usize) -> IntPoly {
        assert!(d >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n + d);
        for i in 0..n + d {
            let mut c = if i < n { self.coeffs[i].clone() } else { BigInt::zero() };
            if i >= d {
                c += &self.coeffs[i - d];
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Exact division by `1 - q^d` as a strided prefix sum, or `None` when
    /// the division leaves a remainder.
    pub fn div_by_one_minus_q_pow(&self, d: usize) -> Option<IntPoly> {
        assert!(d >= 1);
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.coeffs.len();
        if n <= d {
            return None;
        }
        let mut quot: Vec<BigInt> = Vec::with_capacity(n - d);
        for i in 0..n - d {
            let mut c = self.coeffs[i].clone();
            if i >= d {
                c += &quot[i - d];
            }
            quot.push(c);
        }
        for i in n - d..n {
            let expected = if i >= d { -&quot[i - d] } else { BigInt::zero() };
            if self.coeffs[i] != expected {
                return None;
            }
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// `self += other * q^shift` without an intermediate allocation.
    pub fn add_shifted_assign(&mut self, other: &IntPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += c;
        }
        self.trim();
    }

    /// `self -= other * q^shift` without an intermediate allocation.
    pub fn sub_shifted_assign(&mut self, other: &IntPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] -= c;
        }
        self.trim();
    }

    /// Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sum of coefficients, the value at q = 1.
    pub fn eval_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Quotient and remainder by a monic divisor.
    ///
    /// Since the divisor is monic both results have integer coefficients and
    /// the pair is unique with `deg(rem) < deg(divisor)`.
    ///
    /// # Errors
    ///
    /// `NonMonicDivisor` when the divisor is zero or its leading coefficient
    /// is not exactly 1.
    pub fn monic_divrem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - db];
        for i in (db..self.coeffs.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            for (j, b) in divisor.coeffs[..db].iter().enumerate() {
                if !b.is_zero() {
                    rem[i - db + j] -= &c * b;
                }
            }
            quot[i - db] = c;
        }
        rem.truncate(db);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Exact division by an arbitrary nonzero divisor.
    ///
    /// Returns `None` when the divisor does not divide `self` exactly over
    /// the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - db];
        for i in (db..self.coeffs.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (c, r) = num_integer::Integer::div_rem(&rem[i], lead);
            if !r.is_zero() {
                return None;
            }
            rem[i] = BigInt::zero();
            for (j, b) in divisor.coeffs[..db].iter().enumerate() {
                if !b.is_zero() {
                    rem[i - db + j] -= &c * b;
                }
            }
            quot[i - db] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Divides by `q - r` when `r` is an integer root, else returns `None`.
    pub fn div_by_linear_root(&self, r: &BigInt) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // Ruffini scheme from the top coefficient down.
        let n = self.coeffs.len();
        let mut quot = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                quot[i - 1] = v.clone();
                carry = v;
            }
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Greatest common divisor of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

/// Renders in the conventional `1 + q + 2q^2` form; the zero polynomial is `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant_i64(c)
    }
}

fn add_impl(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
    let mut coeffs = long.coeffs.clone();
    for (i, c) in short.coeffs.iter().enumerate() {
        coeffs[i] += c;
    }
    IntPoly::from_coeffs(coeffs)
}

fn sub_impl(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut coeffs = a.coeffs.clone();
    if b.coeffs.len() > coeffs.len() {
        coeffs.resize(b.coeffs.len(), BigInt::zero());
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        coeffs[i] -= c;
    }
    IntPoly::from_coeffs(coeffs)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_impl(self, rhs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        sub_impl(self, rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        super::mul::mul(self, rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        self.trim();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] -= c;
        }
        self.trim();
    }
}
