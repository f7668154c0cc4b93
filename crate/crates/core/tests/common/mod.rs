#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewring::{AutomorphismId, PrimeModulus, RingElement, SkewPolynomial};

pub const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

pub fn prime(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn id(n: u64) -> AutomorphismId {
    AutomorphismId::new(n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn el(a: u64, b: u64, c: u64, p: u64) -> RingElement {
    RingElement::new(a, b, c, prime(p)).unwrap()
}

pub fn random_element<R: Rng>(rng: &mut R, p: PrimeModulus) -> RingElement {
    let m = p.get();
    RingElement::new(
        rng.gen_range(0..m),
        rng.gen_range(0..m),
        rng.gen_range(0..m),
        p,
    )
    .unwrap()
}

/// Random polynomial with degree at most `max_degree` (possibly lower or zero).
pub fn random_poly<R: Rng>(
    rng: &mut R,
    max_degree: usize,
    theta: AutomorphismId,
    p: PrimeModulus,
) -> SkewPolynomial {
    let len = rng.gen_range(0..=max_degree + 1);
    let coeffs = (0..len).map(|_| random_element(rng, p)).collect();
    SkewPolynomial::new(coeffs, theta, p).unwrap()
}

/// Random monic polynomial of degree exactly `degree`.
pub fn random_monic<R: Rng>(
    rng: &mut R,
    degree: usize,
    theta: AutomorphismId,
    p: PrimeModulus,
) -> SkewPolynomial {
    let mut coeffs: Vec<_> = (0..degree).map(|_| random_element(rng, p)).collect();
    coeffs.push(RingElement::one(p));
    SkewPolynomial::new(coeffs, theta, p).unwrap()
}

/// Exhaustive annihilator search: some nonzero `w` with `z * w = 0`.
pub fn has_nonzero_annihilator(z: &RingElement) -> bool {
    RingElement::all(z.modulus()).any(|w| !w.is_zero() && (*z * w).is_zero())
}

/// The cube-constraint system on the coefficients of `t = x + yv + zv^2`,
/// written out in plain residue arithmetic:
/// `x = x^3`, `y = 3yz^2 + 6xyz + y^3 + 3x^2y`,
/// `z = z^3 + 3xz^2 + 3y^2z + 3x^2z + 3xy^2`.
pub fn cube_system_holds(t: &RingElement) -> bool {
    let m = t.modulus().get() as u128;
    let [x, y, z] = t.coefficients().map(|c| c as u128);
    let eq_x = (x * x % m * x) % m == x;
    let rhs_y =
        (3 * y % m * z % m * z + 6 * x % m * y % m * z + y * y % m * y + 3 * x % m * x % m * y) % m;
    let rhs_z = (z * z % m * z
        + 3 * x % m * z % m * z
        + 3 * y % m * y % m * z
        + 3 * x % m * x % m * z
        + 3 * x % m * y % m * y)
        % m;
    eq_x && rhs_y == y && rhs_z == z
}

/// Ordinary (untwisted) polynomial product over `S`, by direct convolution.
pub fn commutative_product(
    f: &[RingElement],
    g: &[RingElement],
    p: PrimeModulus,
) -> Vec<RingElement> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RingElement::zero(p); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j] + *a * *b;
        }
    }
    while out.last().is_some_and(RingElement::is_zero) {
        out.pop();
    }
    out
}
