//! Skew cyclic codes over `S`.
//!
//! A code of length `n` is the set of left multiples `m * g` of a monic right
//! divisor `g` of `x^n - 1`, read as coefficient vectors of length `n`. When
//! the order of `theta` divides `n`, the code is closed under
//! [`theta_shift`].

use rayon::prelude::*;

use crate::automorphisms::AutomorphismId;
use crate::error::{Error, Result};
use crate::ring::{PrimeModulus, RingElement};
use crate::skew_poly::SkewPolynomial;

/// Default cap on the number of codewords enumerated for the minimum distance.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    entries: Vec<RingElement>,
}

impl Codeword {
    pub fn new(entries: Vec<RingElement>) -> Result<Self> {
        if let Some(first) = entries.first() {
            if let Some(bad) = entries.iter().find(|e| e.modulus() != first.modulus()) {
                return Err(Error::ModulusMismatch {
                    left: first.modulus().get(),
                    right: bad.modulus().get(),
                });
            }
        }
        Ok(Codeword { entries })
    }

    pub fn zero(n: usize, p: PrimeModulus) -> Self {
        Codeword {
            entries: vec![RingElement::zero(p); n],
        }
    }

    /// Parses `n` element triples separated by `;`.
    pub fn parse(s: &str, p: PrimeModulus) -> Result<Self> {
        let entries = s
            .split(';')
            .map(|part| RingElement::parse(part, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Codeword { entries })
    }

    pub fn literal(&self) -> String {
        self.entries
            .iter()
            .map(RingElement::literal)
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Codeword { entries })
    }

    /// Entrywise left scaling by a ring element.
    pub fn scale(&self, c: &RingElement) -> Self {
        Codeword {
            entries: self.entries.iter().map(|e| *c * *e).collect(),
        }
    }

    pub fn to_polynomial(&self, theta: AutomorphismId, p: PrimeModulus) -> Result<SkewPolynomial> {
        SkewPolynomial::new(self.entries.clone(), theta, p)
    }
}

/// `(c_0, ..., c_{n-1}) -> (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))`.
pub fn theta_shift(c: &Codeword, theta: AutomorphismId) -> Codeword {
    let mut entries: Vec<RingElement> = c.entries.iter().map(|e| theta.apply(e)).collect();
    if !entries.is_empty() {
        entries.rotate_right(1);
    }
    Codeword { entries }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCyclicCode {
    n: usize,
    theta: AutomorphismId,
    generator: SkewPolynomial,
}

impl SkewCyclicCode {
    /// Validates `g` and builds the code it generates.
    ///
    /// `g` must be monic, of degree below `n`, and a right divisor of
    /// `x^n - 1`; the order of `theta` must divide `n`.
    pub fn build(
        p: PrimeModulus,
        theta: AutomorphismId,
        n: usize,
        g: SkewPolynomial,
    ) -> Result<Self> {
        if g.modulus() != p || g.theta() != theta {
            return Err(Error::ContextMismatch(format!(
                "generator lives in S[x; theta_{}] over p = {}, code asks for theta_{theta} over p = {p}",
                g.theta(),
                g.modulus()
            )));
        }
        if !g.is_monic() {
            return Err(Error::NonMonicGenerator);
        }
        let degree = g.degree().unwrap_or(0);
        if degree >= n {
            return Err(Error::GeneratorDegree { degree, n });
        }
        let order = theta.order();
        if !n.is_multiple_of(order) {
            return Err(Error::OrderMismatch { order, n });
        }
        let code = SkewCyclicCode {
            n,
            theta,
            generator: g,
        };
        let remainder = code.divisibility_remainder()?;
        if !remainder.is_zero() {
            return Err(Error::NotRightDivisor {
                n,
                remainder: remainder.to_string(),
            });
        }
        Ok(code)
    }

    /// Remainder of `x^n - 1` under right division by the generator.
    pub fn divisibility_remainder(&self) -> Result<SkewPolynomial> {
        let modulus = SkewPolynomial::x_pow_minus_one(self.n, self.theta, self.modulus());
        Ok(modulus.right_divmod(&self.generator)?.1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank `n - deg g`.
    pub fn k(&self) -> usize {
        self.n - self.generator.degree().unwrap_or(0)
    }

    pub fn theta(&self) -> AutomorphismId {
        self.theta
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.generator.modulus()
    }

    pub fn generator(&self) -> &SkewPolynomial {
        &self.generator
    }

    /// The code has `p^(3k)` codewords; this is the exponent `3k`.
    pub fn cardinality_exponent(&self) -> usize {
        3 * self.k()
    }

    /// `p^(3k)`, or `None` if it overflows `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        let exp = u32::try_from(self.cardinality_exponent()).ok()?;
        (self.modulus().get() as u128).checked_pow(exp)
    }

    /// Coefficients of `m * g`, padded to length `n`.
    pub fn encode(&self, m: &SkewPolynomial) -> Result<Codeword> {
        if let Some(degree) = m.degree() {
            if degree >= self.k() {
                return Err(Error::MessageTooLong {
                    degree,
                    k: self.k(),
                });
            }
        }
        let product = m.checked_mul(&self.generator)?;
        Ok(Codeword {
            entries: product.padded(self.n),
        })
    }

    /// True when the word, read as a polynomial, is a left multiple of `g`.
    pub fn is_member(&self, c: &Codeword) -> Result<bool> {
        if c.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: c.len(),
            });
        }
        let poly = c.to_polynomial(self.theta, self.modulus())?;
        Ok(poly.right_divmod(&self.generator)?.1.is_zero())
    }

    /// The message polynomial with base-`p` digit expansion `index`, the
    /// lowest digits filling `a, b, c` of the constant term first.
    pub fn message(&self, index: u128) -> SkewPolynomial {
        let p = self.modulus();
        let m = p.get() as u128;
        let mut rest = index;
        let mut digit = || {
            let d = (rest % m) as u64;
            rest /= m;
            d
        };
        let coeffs = (0..self.k())
            .map(|_| {
                let (a, b, c) = (digit(), digit(), digit());
                RingElement::new(a, b, c, p).expect("digits are residues")
            })
            .collect();
        SkewPolynomial::new(coeffs, self.theta, p).expect("single modulus")
    }

    /// Every codeword, in message-index order. Intended for small codes.
    pub fn codewords(&self) -> Option<impl Iterator<Item = Codeword> + '_> {
        let count = self.cardinality()?;
        Some((0..count).map(move |i| self.encode(&self.message(i)).expect("deg m < k")))
    }

    /// Minimum Hamming weight over the nonzero codewords, by exhaustive
    /// enumeration of all `p^(3k)` messages.
    pub fn min_hamming_distance(&self, budget: u128) -> Result<usize> {
        let exceeded = Error::BudgetExceeded {
            p: self.modulus().get(),
            exponent: self.cardinality_exponent(),
            budget,
        };
        let count = match self.cardinality() {
            Some(c) if c <= budget => c,
            _ => return Err(exceeded),
        };
        let count = u64::try_from(count).map_err(|_| exceeded)?;
        let best = (1..count)
            .into_par_iter()
            .map(|i| {
                self.encode(&self.message(i as u128))
                    .map(|c| c.weight())
                    .unwrap_or(usize::MAX)
            })
            .min()
            .unwrap_or(usize::MAX);
        if best == usize::MAX || best == 0 {
            return Err(Error::InternalMismatch(
                "no nonzero codeword found during enumeration".into(),
            ));
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    fn id(n: u64) -> AutomorphismId {
        AutomorphismId::new(n).unwrap()
    }

    fn poly(s: &str, theta: u64, m: u64) -> SkewPolynomial {
        SkewPolynomial::parse(s, id(theta), p(m)).unwrap()
    }

    fn x2_plus_1() -> SkewCyclicCode {
        SkewCyclicCode::build(p(3), id(2), 4, poly("1,0,0;0,0,0;1,0,0", 2, 3)).unwrap()
    }

    #[test]
    fn shift_examples() {
        let m = p(5);
        let c = Codeword::parse("1,0,0;0,1,0;0,0,1;0,0,0", m).unwrap();
        assert_eq!(
            theta_shift(&c, id(1)),
            Codeword::parse("0,0,0;1,0,0;0,1,0;0,0,1", m).unwrap()
        );
        let c = Codeword::parse("1,0,0;0,0,0;1,0,0;0,0,0", p(3)).unwrap();
        assert_eq!(
            theta_shift(&c, id(2)),
            Codeword::parse("0,0,0;1,0,0;0,0,0;1,0,0", p(3)).unwrap()
        );
    }

    #[test]
    fn shift_returns_after_n_times_order() {
        let m = p(7);
        let c = Codeword::parse("1,2,3;4,5,6;0,1,0;3,3,3;2,0,5;6,6,1", m).unwrap();
        for theta in AutomorphismId::ALL {
            let reps = c.len() * theta.order();
            let mut shifted = c.clone();
            for _ in 0..reps {
                shifted = theta_shift(&shifted, theta);
            }
            assert_eq!(shifted, c, "theta_{theta}");
        }
    }

    #[test]
    fn build_examples() {
        for n in 2..=6 {
            let code = SkewCyclicCode::build(p(3), id(1), n, poly("2,0,0;1,0,0", 1, 3)).unwrap();
            assert_eq!(code.k(), n - 1);
        }
        let code = x2_plus_1();
        assert_eq!(code.k(), 2);
        assert_eq!(code.cardinality(), Some(729));
        assert_eq!(code.cardinality_exponent(), 6);
    }

    #[test]
    fn build_rejections() {
        let g = poly("0,1,0;0,0,0;1,0,0", 2, 3);
        assert!(matches!(
            SkewCyclicCode::build(p(3), id(2), 4, g),
            Err(Error::NotRightDivisor { n: 4, .. })
        ));
        let g = poly("1,0,0;0,0,0;2,0,0", 2, 3);
        assert_eq!(
            SkewCyclicCode::build(p(3), id(2), 4, g),
            Err(Error::NonMonicGenerator)
        );
        let g = poly("1,0,0;0,0,0;1,0,0", 2, 3);
        assert_eq!(
            SkewCyclicCode::build(p(3), id(2), 5, g),
            Err(Error::OrderMismatch { order: 2, n: 5 })
        );
        let g = poly("2,0,0;0,0,0;0,0,0;0,0,0;1,0,0", 2, 3);
        assert_eq!(
            SkewCyclicCode::build(p(3), id(2), 4, g),
            Err(Error::GeneratorDegree { degree: 4, n: 4 })
        );
        let g = poly("1,0,0;0,0,0;1,0,0", 3, 3);
        assert!(matches!(
            SkewCyclicCode::build(p(3), id(2), 4, g),
            Err(Error::ContextMismatch(_))
        ));
    }

    #[test]
    fn encode_examples() {
        let code = x2_plus_1();
        let zero = SkewPolynomial::zero(id(2), p(3));
        assert_eq!(code.encode(&zero).unwrap(), Codeword::zero(4, p(3)));
        let one = SkewPolynomial::one(id(2), p(3));
        assert_eq!(
            code.encode(&one).unwrap().literal(),
            "1,0,0;0,0,0;1,0,0;0,0,0"
        );
        let x = poly("0,0,0;1,0,0", 2, 3);
        assert_eq!(
            code.encode(&x).unwrap().literal(),
            "0,0,0;1,0,0;0,0,0;1,0,0"
        );
        let x2 = poly("0,0,0;0,0,0;1,0,0", 2, 3);
        assert_eq!(
            code.encode(&x2),
            Err(Error::MessageTooLong { degree: 2, k: 2 })
        );
    }

    #[test]
    fn membership_examples() {
        let code = x2_plus_1();
        let c = Codeword::parse("1,0,0;0,0,0;0,0,0;0,0,0", p(3)).unwrap();
        assert!(!code.is_member(&c).unwrap());
        let short = Codeword::parse("1,0,0", p(3)).unwrap();
        assert!(matches!(
            code.is_member(&short),
            Err(Error::LengthMismatch {
                expected: 4,
                actual: 1
            })
        ));
        for c in code.codewords().unwrap() {
            assert!(code.is_member(&c).unwrap());
            assert!(code.is_member(&theta_shift(&c, id(2))).unwrap());
        }
    }

    #[test]
    fn full_rank_distance_is_one() {
        let code = SkewCyclicCode::build(p(3), id(2), 2, SkewPolynomial::one(id(2), p(3))).unwrap();
        assert_eq!(code.k(), 2);
        assert_eq!(code.min_hamming_distance(DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn budget_exceeded() {
        // k = 4 over p = 5 needs 5^12 > 2^24 codewords
        let g = poly("4,0,0;1,0,0", 1, 5);
        let code = SkewCyclicCode::build(p(5), id(1), 5, g).unwrap();
        assert_eq!(code.k(), 4);
        assert_eq!(
            code.min_hamming_distance(DEFAULT_BUDGET),
            Err(Error::BudgetExceeded {
                p: 5,
                exponent: 12,
                budget: DEFAULT_BUDGET
            })
        );
    }

    #[test]
    fn messages_are_distinct() {
        let code = x2_plus_1();
        let mut seen: Vec<_> = (0..729).map(|i| code.message(i).literal()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 729);
    }
}
