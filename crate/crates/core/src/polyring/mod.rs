//! Exact polynomial and rational-function arithmetic over the integers.

pub mod gcd;
pub mod modpoly;
pub mod mul;
pub mod ntt;
pub mod poly;
pub mod ratfunc;

pub use gcd::poly_gcd;
pub use modpoly::ModPoly;
pub use mul::{mul_karatsuba, mul_ntt, mul_schoolbook};
pub use poly::IntPoly;
pub use ratfunc::{sum_tree, RatFunc, Rational};
