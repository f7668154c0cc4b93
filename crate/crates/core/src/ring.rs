//! Arithmetic in `S = F_p[v]/(v^3 - v)`.
//!
//! Elements are triples `(a, b, c)` standing for `a + bv + cv^2`, always held
//! as canonical residues in `[0, p)`. Products are computed by expanding to
//! degree four and folding `v^3 -> v`, `v^4 -> v^2`.
//!
//! The ring splits as `F_p x F_p x F_p` by evaluating at `v = 0, 1, -1`
//! ([`CrtTriple`]). Unit inversion goes through that splitting.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// An odd prime `p` no larger than [`PrimeModulus::MAX`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// Largest accepted modulus. Keeps `p^3` and residue products inside `u64`.
    pub const MAX: u64 = 1 << 20;

    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidModulus {
                p,
                reason: "characteristic 2 collapses theta_2 to the identity and 2 has no inverse",
            });
        }
        if p < 3 {
            return Err(Error::InvalidModulus {
                p,
                reason: "not a prime",
            });
        }
        if p > Self::MAX {
            return Err(Error::InvalidModulus {
                p,
                reason: "larger than the supported bound 2^20",
            });
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus {
                p,
                reason: "not a prime",
            });
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// The inverse of 2, `(p + 1) / 2`.
    #[inline]
    pub fn half(self) -> u64 {
        self.0.div_ceil(2)
    }

    /// Number of elements of `S`, i.e. `p^3`.
    pub fn ring_size(self) -> u64 {
        self.0 * self.0 * self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    #[inline]
    pub fn reduce_signed(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub(crate) fn add(self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, x: u64, y: u64) -> u64 {
        if x >= y {
            x - y
        } else {
            x + self.0 - y
        }
    }

    #[inline]
    pub(crate) fn neg(self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.0 - x
        }
    }

    #[inline]
    pub(crate) fn mul(self, x: u64, y: u64) -> u64 {
        (x * y) % self.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `x` in `F_p` by the extended Euclidean algorithm.
pub fn fp_inv(x: u64, p: PrimeModulus) -> Result<u64> {
    let x = p.reduce(x);
    if x == 0 {
        return Err(Error::ResidueNotInvertible {
            value: 0,
            p: p.get(),
        });
    }
    let (mut r0, mut r1) = (p.get() as i64, x as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(p.reduce_signed(t0))
}

/// Which of the three zero-divisor conditions an element satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ZeroDivisorConditions {
    /// `a = 0`
    pub a_zero: bool,
    /// `a - b + c = 0`
    pub alternating_sum_zero: bool,
    /// `a + b + c = 0`
    pub sum_zero: bool,
}

impl ZeroDivisorConditions {
    pub fn any(self) -> bool {
        self.a_zero || self.alternating_sum_zero || self.sum_zero
    }

    /// Names of the conditions that hold, in the order `a=0`, `a-b+c=0`, `a+b+c=0`.
    pub fn labels(self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.a_zero {
            out.push("a=0");
        }
        if self.alternating_sum_zero {
            out.push("a-b+c=0");
        }
        if self.sum_zero {
            out.push("a+b+c=0");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    Unit,
    ZeroDivisor(ZeroDivisorConditions),
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::Zero => "zero",
            Classification::Unit => "unit",
            Classification::ZeroDivisor(_) => "zero divisor",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::ZeroDivisor(cond) => {
                write!(f, "zero divisor ({})", cond.labels().join(", "))
            }
            other => f.write_str(other.label()),
        }
    }
}

/// The element `a + bv + cv^2` of `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RingElement {
    a: u64,
    b: u64,
    c: u64,
    #[serde(skip)]
    p: PrimeModulus,
}

impl RingElement {
    /// Builds an element from canonical residues; anything `>= p` is rejected.
    pub fn new(a: u64, b: u64, c: u64, p: PrimeModulus) -> Result<Self> {
        for value in [a, b, c] {
            if value >= p.get() {
                return Err(Error::NonCanonicalResidue { value, p: p.get() });
            }
        }
        Ok(RingElement { a, b, c, p })
    }

    /// Builds an element from arbitrary signed coefficients, reducing mod `p`.
    pub fn from_signed(a: i64, b: i64, c: i64, p: PrimeModulus) -> Self {
        RingElement {
            a: p.reduce_signed(a),
            b: p.reduce_signed(b),
            c: p.reduce_signed(c),
            p,
        }
    }

    #[inline]
    pub(crate) fn from_residues(a: u64, b: u64, c: u64, p: PrimeModulus) -> Self {
        debug_assert!(a < p.get() && b < p.get() && c < p.get());
        RingElement { a, b, c, p }
    }

    pub fn zero(p: PrimeModulus) -> Self {
        Self::from_residues(0, 0, 0, p)
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::from_residues(1, 0, 0, p)
    }

    /// The generator `v`.
    pub fn v(p: PrimeModulus) -> Self {
        Self::from_residues(0, 1, 0, p)
    }

    pub fn scalar(a: u64, p: PrimeModulus) -> Self {
        Self::from_residues(p.reduce(a), 0, 0, p)
    }

    #[inline]
    pub fn a(&self) -> u64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> u64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> u64 {
        self.c
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn coefficients(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0 && self.c == 0
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_modulus(rhs)?;
        let p = self.p;
        Ok(Self::from_residues(
            p.add(self.a, rhs.a),
            p.add(self.b, rhs.b),
            p.add(self.c, rhs.c),
            p,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_modulus(rhs)?;
        let p = self.p;
        Ok(Self::from_residues(
            p.sub(self.a, rhs.a),
            p.sub(self.b, rhs.b),
            p.sub(self.c, rhs.c),
            p,
        ))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_modulus(rhs)?;
        let p = self.p;
        let m = p.get();
        let (x0, x1, x2) = (self.a, self.b, self.c);
        let (y0, y1, y2) = (rhs.a, rhs.b, rhs.c);
        // degree-4 product; each sum of three terms is below 3 * 2^40
        let d0 = x0 * y0;
        let d1 = x0 * y1 + x1 * y0;
        let d2 = x0 * y2 + x1 * y1 + x2 * y0;
        let d3 = x1 * y2 + x2 * y1;
        let d4 = x2 * y2;
        // v^3 = v, v^4 = v^2
        Ok(Self::from_residues(
            d0 % m,
            (d1 % m + d3 % m) % m,
            (d2 % m + d4 % m) % m,
            p,
        ))
    }

    /// Multiplication by a scalar of `F_p`.
    pub fn scale(&self, k: u64) -> Self {
        let p = self.p;
        let k = p.reduce(k);
        Self::from_residues(p.mul(self.a, k), p.mul(self.b, k), p.mul(self.c, k), p)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn zero_divisor_conditions(&self) -> ZeroDivisorConditions {
        let p = self.p;
        let alt = p.add(p.sub(self.a, self.b), self.c);
        let sum = p.add(p.add(self.a, self.b), self.c);
        ZeroDivisorConditions {
            a_zero: self.a == 0,
            alternating_sum_zero: alt == 0,
            sum_zero: sum == 0,
        }
    }

    /// Zero, unit, or proper zero divisor (with the conditions that fired).
    pub fn classify(&self) -> Classification {
        if self.is_zero() {
            return Classification::Zero;
        }
        let cond = self.zero_divisor_conditions();
        if cond.any() {
            Classification::ZeroDivisor(cond)
        } else {
            Classification::Unit
        }
    }

    /// True when some nonzero `w` has `self * w = 0`. This includes zero itself.
    pub fn is_zero_divisor(&self) -> bool {
        self.zero_divisor_conditions().any()
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero_divisor()
    }

    pub fn inv(&self) -> Result<Self> {
        let class = self.classify();
        if class != Classification::Unit {
            return Err(Error::NotInvertible {
                element: self.to_string(),
                classification: class.to_string(),
            });
        }
        Ok(self.to_crt().inv()?.to_element())
    }

    pub fn to_crt(&self) -> CrtTriple {
        let p = self.p;
        CrtTriple {
            s0: self.a,
            s1: p.add(p.add(self.a, self.b), self.c),
            s2: p.add(p.sub(self.a, self.b), self.c),
            p,
        }
    }

    pub fn from_crt(t: &CrtTriple) -> Self {
        t.to_element()
    }

    /// Position of the element in lexicographic `(a, b, c)` order.
    pub fn index(&self) -> usize {
        let m = self.p.get();
        ((self.a * m + self.b) * m + self.c) as usize
    }

    pub fn from_index(index: usize, p: PrimeModulus) -> Self {
        let m = p.get();
        let i = index as u64;
        Self::from_residues(i / (m * m) % m, i / m % m, i % m, p)
    }

    /// Every element of `S`, in lexicographic `(a, b, c)` order.
    pub fn all(p: PrimeModulus) -> impl Iterator<Item = RingElement> + Clone {
        (0..p.ring_size() as usize).map(move |i| RingElement::from_index(i, p))
    }

    /// Parses the literal `a,b,c`.
    pub fn parse(s: &str, p: PrimeModulus) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse {
                what: "element",
                detail: format!("expected `a,b,c`, got `{}`", s.trim()),
            });
        }
        let mut vals = [0u64; 3];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| Error::Parse {
                what: "element",
                detail: format!("`{part}` is not a non-negative integer"),
            })?;
        }
        Self::new(vals[0], vals[1], vals[2], p)
    }

    /// The literal form `a,b,c`.
    pub fn literal(&self) -> String {
        format!("{},{},{}", self.a, self.b, self.c)
    }

    /// Number of nonzero coefficients among `a, b, c`.
    pub(crate) fn term_count(&self) -> usize {
        self.coefficients().iter().filter(|&&x| x != 0).count()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::with_capacity(3);
        if self.a != 0 {
            terms.push(self.a.to_string());
        }
        for (coef, var) in [(self.b, "v"), (self.c, "v^2")] {
            match coef {
                0 => {}
                1 => terms.push(var.to_string()),
                k => terms.push(format!("{k}{var}")),
            }
        }
        f.write_str(&terms.join(" + "))
    }
}

impl Add for RingElement {
    type Output = RingElement;

    /// Panics on mismatched moduli; see [`RingElement::checked_add`].
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .expect("ring elements over different moduli")
    }
}

impl Sub for RingElement {
    type Output = RingElement;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs)
            .expect("ring elements over different moduli")
    }
}

impl Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("ring elements over different moduli")
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> Self {
        let p = self.p;
        Self::from_residues(p.neg(self.a), p.neg(self.b), p.neg(self.c), p)
    }
}

/// Values of an element at `v = 0`, `v = 1` and `v = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrtTriple {
    pub s0: u64,
    pub s1: u64,
    pub s2: u64,
    p: PrimeModulus,
}

impl CrtTriple {
    pub fn new(s0: u64, s1: u64, s2: u64, p: PrimeModulus) -> Result<Self> {
        for value in [s0, s1, s2] {
            if value >= p.get() {
                return Err(Error::NonCanonicalResidue { value, p: p.get() });
            }
        }
        Ok(CrtTriple { s0, s1, s2, p })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn components(&self) -> [u64; 3] {
        [self.s0, self.s1, self.s2]
    }

    /// `a = s0`, `b = (s1 - s2)/2`, `c = (s1 + s2)/2 - s0`.
    pub fn to_element(&self) -> RingElement {
        let p = self.p;
        let h = p.half();
        let b = p.mul(p.sub(self.s1, self.s2), h);
        let c = p.sub(p.mul(p.add(self.s1, self.s2), h), self.s0);
        RingElement::from_residues(self.s0, b, c, p)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: rhs.p.get(),
            });
        }
        let p = self.p;
        Ok(CrtTriple {
            s0: p.mul(self.s0, rhs.s0),
            s1: p.mul(self.s1, rhs.s1),
            s2: p.mul(self.s2, rhs.s2),
            p,
        })
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(CrtTriple {
            s0: fp_inv(self.s0, self.p)?,
            s1: fp_inv(self.s1, self.p)?,
            s2: fp_inv(self.s2, self.p)?,
            p: self.p,
        })
    }
}
