//! Polynomials in `t` with integer coefficients, and the `q`-analogues
//! (with `q = t²`) that give Poincaré polynomials of flag varieties.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial `Σ c_k t^k`. Stored densely without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    coeffs: Vec<BigInt>,
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from dense coefficients `c_0, c_1, …`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero terms as `(degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coefficient(k) + other.coefficient(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coefficient(k) - other.coefficient(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &HilbertSeries) -> Result<HilbertSeries> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Internal("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::Internal(format!("inexact division of {self} by {divisor}")))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Internal(format!("inexact division of {self} by {divisor}")));
            }
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal(format!("inexact division of {self} by {divisor}")));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        let lo = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
        let hi = c.len();
        (lo..hi).all(|i| c[i] == c[hi - 1 - (i - lo)])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_even_supported(&self) -> bool {
        self.terms().all(|(k, _)| k % 2 == 0)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag} t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag} t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertSeries({self})")
    }
}

/// `[i] = 1 + t² + … + t^{2i−2}`; `[0] = 0`.
pub fn q_int(i: usize) -> HilbertSeries {
    let mut coeffs = vec![BigInt::zero(); (2 * i).saturating_sub(1)];
    for k in 0..i {
        coeffs[2 * k] = BigInt::one();
    }
    HilbertSeries::from_coeffs(coeffs)
}

/// `[i]! = [i][i−1]⋯[1]`, with `[0]! = 1`.
pub fn q_factorial(i: usize) -> HilbertSeries {
    (1..=i).fold(HilbertSeries::one(), |acc, k| acc.mul(&q_int(k)))
}

/// `[n]! / ([d_1]! ⋯ [d_r]!)` with `n = Σ d_i`.
pub fn flag_poincare(dvec: &[usize]) -> Result<HilbertSeries> {
    let n: usize = dvec.iter().sum();
    let den = dvec.iter().fold(HilbertSeries::one(), |acc, &d| acc.mul(&q_factorial(d)));
    q_factorial(n).div_exact(&den)
}

/// `t^{2i} − 1`.
fn t2_minus_one(i: usize) -> HilbertSeries {
    let mut coeffs = vec![BigInt::zero(); 2 * i + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[2 * i] += BigInt::one();
    HilbertSeries::from_coeffs(coeffs)
}

/// Poincaré polynomial of `Gr_q(C^n)` as the product
/// `∏_{i=q+1}^{n} (t^{2i} − 1) / ∏_{i=1}^{n−q} (t^{2i} − 1)`.
pub fn gaussian_binomial(n: usize, q: usize) -> Result<HilbertSeries> {
    if q > n {
        return Err(Error::InvalidRanks(format!("q = {q} exceeds n = {n}")));
    }
    let num = (q + 1..=n).fold(HilbertSeries::one(), |acc, i| acc.mul(&t2_minus_one(i)));
    let den = (1..=n - q).fold(HilbertSeries::one(), |acc, i| acc.mul(&t2_minus_one(i)));
    num.div_exact(&den)
}

/// Multinomial `n! / (d_1! ⋯ d_r!)`.
pub fn fact_ring_rank(dvec: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &d in dvec {
        // running product of binomials C(total + d, d)
        for j in 1..=d as u64 {
            total += 1;
            acc = acc * BigUint::from(total) / BigUint::from(j);
        }
    }
    acc
}

/// Codimension `a1·a2 + c1·a2 + a1·c2`, valid when `a1 + a2 + max(c1, c2) <= b`.
pub fn ci_codim(a1: usize, a2: usize, b: usize, c1: usize, c2: usize) -> Result<usize> {
    let lhs = a1 + a2 + c1.max(c2);
    if lhs > b {
        return Err(Error::NotCompleteIntersectionRegime { lhs, b });
    }
    Ok(a1 * a2 + c1 * a2 + a1 * c2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> HilbertSeries {
        HilbertSeries::from_i64(c)
    }

    #[test]
    fn q_ints_and_factorials() {
        assert_eq!(q_int(1), s(&[1]));
        assert_eq!(q_int(3), s(&[1, 0, 1, 0, 1]));
        assert_eq!(q_int(0), HilbertSeries::zero());
        assert_eq!(q_factorial(0), s(&[1]));
        assert_eq!(q_factorial(2), s(&[1, 0, 1]));
    }

    #[test]
    fn flag_poincare_examples() {
        assert_eq!(flag_poincare(&[4]).unwrap(), s(&[1]));
        assert_eq!(flag_poincare(&[1, 1]).unwrap(), s(&[1, 0, 1]));
        assert_eq!(flag_poincare(&[1, 2]).unwrap(), s(&[1, 0, 1, 0, 1]));
        assert_eq!(flag_poincare(&[0, 3, 0]).unwrap(), s(&[1]));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 0).unwrap(), s(&[1]));
        assert_eq!(gaussian_binomial(2, 2).unwrap(), s(&[1]));
        assert_eq!(gaussian_binomial(2, 1).unwrap(), s(&[1, 0, 1]));
        assert_eq!(gaussian_binomial(3, 1).unwrap(), s(&[1, 0, 1, 0, 1]));
        assert!(gaussian_binomial(1, 2).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(fact_ring_rank(&[5]), BigUint::from(1u32));
        assert_eq!(fact_ring_rank(&[1, 1]), BigUint::from(2u32));
        assert_eq!(fact_ring_rank(&[2, 1]), BigUint::from(3u32));
        assert_eq!(fact_ring_rank(&[2, 2, 2]), BigUint::from(90u32));
    }

    #[test]
    fn codim_examples() {
        assert_eq!(ci_codim(0, 0, 3, 1, 2).unwrap(), 0);
        assert_eq!(ci_codim(1, 1, 2, 0, 0).unwrap(), 1);
        assert_eq!(ci_codim(1, 1, 4, 1, 1).unwrap(), 3);
        assert_eq!(
            ci_codim(2, 2, 4, 1, 0),
            Err(Error::NotCompleteIntersectionRegime { lhs: 5, b: 4 })
        );
    }

    #[test]
    fn inexact_division_is_reported() {
        assert!(s(&[1, 0, 1]).div_exact(&s(&[1, 1])).is_err());
        assert_eq!(s(&[1, 0, -1]).div_exact(&s(&[1, 1])).unwrap(), s(&[1, -1]));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 0, 1, 0, 2]).to_string(), "1 + t^2 + 2 t^4");
        assert_eq!(s(&[0, -1, 3]).to_string(), "-t + 3 t^2");
        assert_eq!(HilbertSeries::zero().to_string(), "0");
    }
}
