//! Exact computer algebra over the finite ring `S = F_p + vF_p + v^2F_p`
//! with `v^3 = v` and `p` an odd prime.
//!
//! * [`ring`]: element arithmetic, zero-divisor classification, inversion.
//! * [`automorphisms`]: the six automorphisms of `S` and a brute-force
//!   enumerator that finds them independently.
//! * [`skew_poly`]: the skew polynomial ring `S[x; theta]`.
//! * [`skew_cyclic`]: skew cyclic codes generated by right divisors of `x^n - 1`.
//! * [`cli`]: the `skewring` command-line front end.

pub mod automorphisms;
pub mod cli;
pub mod error;
pub mod ring;
pub mod skew_cyclic;
pub mod skew_poly;

pub use automorphisms::{AutomorphismId, EndomorphismCandidate, GroupTable};
pub use error::{Error, Result};
pub use ring::{fp_inv, Classification, CrtTriple, PrimeModulus, RingElement};
pub use skew_cyclic::{theta_shift, Codeword, SkewCyclicCode};
pub use skew_poly::{theta_order, SkewPolynomial};
