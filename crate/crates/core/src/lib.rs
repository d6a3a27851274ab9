//! Exact verification of q-analogues of classical congruences.
//!
//! The objects here are univariate polynomials and rational functions over
//! the integers. A q-congruence `A ≡ B (mod [p]_q^k)` means the numerator
//! of `A - B`, written over a denominator coprime to the cyclotomic
//! polynomial `[p]_q = 1 + q + ... + q^(p-1)`, is divisible by `[p]_q^k`;
//! for prime p that polynomial is irreducible, so the check is a single
//! exact division with remainder zero. Each catalogued congruence is built
//! from its q-ingredients (q-integers, q-Pochhammer symbols, Gaussian
//! binomials, q-Fermat quotients), checked exactly, cross-checked in a
//! random prime field, and compared against its classical counterpart at
//! q = 1.

pub mod arith64;
pub mod congruence;
pub mod error;
pub mod polyring;
pub mod qkit;
pub mod theorems;

pub use congruence::Verdict;
pub use error::{Error, Result};
pub use polyring::{IntPoly, ModPoly, RatFunc, Rational};
pub use qkit::{PochSpec, QModulus, SumRange, SumSpec, SumWeight};
pub use theorems::{InstanceRecord, Report, RunConfig, Statement, StatementId, StatementKind};
