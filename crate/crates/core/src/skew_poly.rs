//! Skew polynomials `S[x; theta]` with `a x^i * b x^j = a theta^i(b) x^(i+j)`.

use std::fmt;

use crate::automorphisms::AutomorphismId;
use crate::error::{Error, Result};
use crate::ring::{PrimeModulus, RingElement};

/// Dense skew polynomial, coefficients in ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPolynomial {
    coeffs: Vec<RingElement>,
    theta: AutomorphismId,
    modulus: PrimeModulus,
}

impl SkewPolynomial {
    pub fn new(
        coeffs: Vec<RingElement>,
        theta: AutomorphismId,
        modulus: PrimeModulus,
    ) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.modulus() != modulus) {
            return Err(Error::ModulusMismatch {
                left: modulus.get(),
                right: c.modulus().get(),
            });
        }
        Ok(Self::from_parts(coeffs, theta, modulus))
    }

    fn from_parts(
        mut coeffs: Vec<RingElement>,
        theta: AutomorphismId,
        modulus: PrimeModulus,
    ) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        SkewPolynomial {
            coeffs,
            theta,
            modulus,
        }
    }

    pub fn zero(theta: AutomorphismId, modulus: PrimeModulus) -> Self {
        Self::from_parts(Vec::new(), theta, modulus)
    }

    pub fn one(theta: AutomorphismId, modulus: PrimeModulus) -> Self {
        Self::constant(RingElement::one(modulus), theta)
    }

    pub fn constant(c: RingElement, theta: AutomorphismId) -> Self {
        Self::from_parts(vec![c], theta, c.modulus())
    }

    /// `c x^k`.
    pub fn monomial(c: RingElement, k: usize, theta: AutomorphismId) -> Self {
        let p = c.modulus();
        let mut coeffs = vec![RingElement::zero(p); k + 1];
        coeffs[k] = c;
        Self::from_parts(coeffs, theta, p)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize, theta: AutomorphismId, modulus: PrimeModulus) -> Self {
        let mut coeffs = vec![RingElement::zero(modulus); n + 1];
        coeffs[n] = coeffs[n] + RingElement::one(modulus);
        coeffs[0] = coeffs[0] - RingElement::one(modulus);
        Self::from_parts(coeffs, theta, modulus)
    }

    /// Parses `;`-separated coefficient triples in ascending degree, e.g.
    /// `1,0,0;0,0,0;1,0,0` for `1 + x^2`. An empty string is the zero polynomial.
    pub fn parse(s: &str, theta: AutomorphismId, modulus: PrimeModulus) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::zero(theta, modulus));
        }
        let coeffs = s
            .split(';')
            .map(|part| RingElement::parse(part, modulus))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(coeffs, theta, modulus))
    }

    pub fn literal(&self) -> String {
        self.coeffs
            .iter()
            .map(RingElement::literal)
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| RingElement::zero(self.modulus))
    }

    pub fn theta(&self) -> AutomorphismId {
        self.theta
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<RingElement> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<RingElement> {
        let mut out = self.coeffs.clone();
        out.resize(n.max(out.len()), RingElement::zero(self.modulus));
        out
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ContextMismatch(format!(
                "p = {} vs p = {}",
                self.modulus, other.modulus
            )));
        }
        if self.theta != other.theta {
            return Err(Error::ContextMismatch(format!(
                "theta_{} vs theta_{}",
                self.theta, other.theta
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_parts(coeffs, self.theta, self.modulus))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_parts(
            self.coeffs.iter().map(|&c| -c).collect(),
            self.theta,
            self.modulus,
        )
    }

    /// Left multiplication by a ring element: `c * f`.
    pub fn scale_left(&self, c: &RingElement) -> Self {
        Self::from_parts(
            self.coeffs.iter().map(|&a| *c * a).collect(),
            self.theta,
            self.modulus,
        )
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.theta, self.modulus));
        }
        let order = self.theta.order();
        // twisted[k][j] = theta^k(g_j)
        let mut twisted = Vec::with_capacity(order);
        twisted.push(other.coeffs.clone());
        for k in 1..order {
            let next = twisted[k - 1].iter().map(|c| self.theta.apply(c)).collect();
            twisted.push(next);
        }
        let mut out =
            vec![RingElement::zero(self.modulus); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in twisted[i % order].iter().enumerate() {
                out[i + j] = out[i + j] + *a * *b;
            }
        }
        Ok(Self::from_parts(out, self.theta, self.modulus))
    }

    /// Right division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// The divisor's leading coefficient must be a unit of `S`.
    pub fn right_divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_context(divisor)?;
        let (dg, lead) = match (divisor.degree(), divisor.leading_coefficient()) {
            (Some(d), Some(l)) => (d, l),
            _ => return Err(Error::NotDivisible("divisor is the zero polynomial".into())),
        };
        let lead_inv = lead.inv().map_err(|_| {
            Error::NotDivisible(format!(
                "leading coefficient {lead} of the divisor is not a unit ({})",
                lead.classify()
            ))
        })?;
        let (theta, p) = (self.theta, self.modulus);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RingElement::zero(p); rem.len().saturating_sub(dg)];
        while rem.len() > dg {
            let top = rem.len() - 1;
            let k = top - dg;
            let lc = rem[top];
            if !lc.is_zero() {
                // theta^k(lead)^-1 = theta^k(lead^-1)
                let c = lc * theta.apply_pow(k, &lead_inv);
                quot[k] = c;
                for (j, g) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j] - c * theta.apply_pow(k, g);
                }
                debug_assert!(rem[top].is_zero());
            }
            rem.pop();
        }
        Ok((
            Self::from_parts(quot, theta, p),
            Self::from_parts(rem, theta, p),
        ))
    }
}

pub fn skew_add(f: &SkewPolynomial, g: &SkewPolynomial) -> Result<SkewPolynomial> {
    f.checked_add(g)
}

pub fn skew_mul(f: &SkewPolynomial, g: &SkewPolynomial) -> Result<SkewPolynomial> {
    f.checked_mul(g)
}

pub fn skew_right_divmod(
    f: &SkewPolynomial,
    g: &SkewPolynomial,
) -> Result<(SkewPolynomial, SkewPolynomial)> {
    f.right_divmod(g)
}

/// Smallest `k >= 1` with `theta^k` the identity.
pub fn theta_order(id: AutomorphismId) -> usize {
    id.order()
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                var
            } else if c.term_count() == 1 {
                format!("{c}{var}")
            } else {
                format!("({c}){var}")
            };
            terms.push(term);
        }
        f.write_str(&terms.join(" + "))
    }
}
