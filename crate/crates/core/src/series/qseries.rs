use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

/// Truncated series `Σ_{i<order} c_i q^{lead/24 + i}` with integer coefficients.
///
/// The stored coefficients are exactly the valid ones: `order` is the number
/// of coefficients, and nothing past `lead/24 + order` is known.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalQSeries {
    lead24: i64,
    coeffs: Vec<BigInt>,
}

impl FormalQSeries {
    /// Builds a series and normalizes away leading zeros.
    pub fn new(lead24: i64, coeffs: Vec<BigInt>) -> Self {
        let mut s = FormalQSeries { lead24, coeffs };
        s.normalize();
        s
    }

    /// The zero series known through `order` coefficients past `lead24/24`.
    pub fn zero(lead24: i64, order: usize) -> Self {
        FormalQSeries { lead24, coeffs: vec![BigInt::zero(); order] }
    }

    /// `q^{lead24/24}` known to `order` terms.
    pub fn monomial(lead24: i64, order: usize) -> Self {
        let mut s = Self::zero(lead24, order);
        if order > 0 {
            s.coeffs[0] = BigInt::one();
        }
        s
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    fn normalize(&mut self) {
        let Some(first) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            return;
        };
        if first > 0 {
            self.coeffs.drain(..first);
            self.lead24 += 24 * first as i64;
        }
    }

    /// Leading exponent as a multiple of 1/24.
    pub fn lead24(&self) -> i64 {
        self.lead24
    }

    /// Leading exponent in lowest terms.
    pub fn lead_exponent(&self) -> Ratio<i64> {
        Ratio::new(self.lead24, 24)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Number of valid coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// First exponent (in 1/24 units) beyond the valid range.
    pub fn end24(&self) -> i64 {
        self.lead24 + 24 * self.coeffs.len() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient of `q^{e24/24}`, `None` outside the valid range or when the
    /// exponent is not congruent to the lead.
    pub fn coeff_at24(&self, e24: i64) -> Option<&BigInt> {
        let off = e24 - self.lead24;
        if off < 0 || off % 24 != 0 {
            return None;
        }
        self.coeffs.get((off / 24) as usize)
    }

    /// Keeps at most `order` coefficients.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    /// Re-expresses the series from a lower lead, padding with zeros.
    pub fn rebase(&self, lead24: i64) -> Result<Self, SeriesError> {
        let shift = self.lead24 - lead24;
        if shift < 0 || shift % 24 != 0 {
            return Err(SeriesError::IncongruentLeads { a: self.lead24, b: lead24 });
        }
        let pad = (shift / 24) as usize;
        let mut coeffs = vec![BigInt::zero(); pad];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(FormalQSeries { lead24, coeffs })
    }

    /// Both operands on the common lead, truncated to the common valid range.
    fn aligned(&self, other: &Self) -> Result<(Self, Self), SeriesError> {
        if (self.lead24 - other.lead24) % 24 != 0 {
            return Err(SeriesError::IncongruentLeads { a: self.lead24, b: other.lead24 });
        }
        let lead = self.lead24.min(other.lead24);
        let end = self.end24().min(other.end24());
        let order = ((end - lead).max(0) / 24) as usize;
        Ok((self.rebase(lead)?.truncate(order), other.rebase(lead)?.truncate(order)))
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let (mut a, b) = self.aligned(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a.normalize();
        Ok(a)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let (mut a, b) = self.aligned(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a.normalize();
        Ok(a)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        FormalQSeries::new(self.lead24, coeffs)
    }

    pub fn neg(&self) -> Self {
        FormalQSeries { lead24: self.lead24, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Cauchy product, truncated to the shorter operand's order. Zero
    /// coefficients of either side are skipped, which makes products of eta
    /// series cheap.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order];
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, a) in sparse.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            let unit = a.magnitude().is_one();
            let neg = a.is_negative();
            for (j, b) in dense.coeffs[..order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if unit {
                    if neg {
                        out[i + j] -= b;
                    } else {
                        out[i + j] += b;
                    }
                } else {
                    out[i + j] += a * b;
                }
            }
        }
        FormalQSeries::new(self.lead24 + other.lead24, out)
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `self / divisor` to at most `n_terms` coefficients. The divisor's
    /// leading coefficient must be `±1` so the quotient stays integral.
    pub fn div(&self, divisor: &Self, n_terms: usize) -> Result<Self, SeriesError> {
        if divisor.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        let b0 = &divisor.coeffs[0];
        if !b0.magnitude().is_one() {
            return Err(SeriesError::NonUnitLeading(b0.clone()));
        }
        let order = self.order().min(divisor.order()).min(n_terms);
        let mut out: Vec<BigInt> = Vec::with_capacity(order);
        let b_nz: Vec<(usize, &BigInt)> = divisor.coeffs.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
        let b0_neg = b0.is_negative();
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for &(j, b) in &b_nz {
                if j > n {
                    break;
                }
                let prev = &out[n - j];
                if !prev.is_zero() {
                    acc -= b * prev;
                }
            }
            out.push(if b0_neg { -acc } else { acc });
        }
        Ok(FormalQSeries::new(self.lead24 - divisor.lead24, out))
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = FormalQSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Greatest common divisor of all coefficients (zero for the zero series).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Debug for FormalQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({})·[", self.lead_exponent())?;
        for (i, c) in self.coeffs.iter().take(12).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        if self.coeffs.len() > 12 {
            write!(f, ", … ({} terms)", self.coeffs.len())?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lead24: i64, c: &[i64]) -> FormalQSeries {
        FormalQSeries::new(lead24, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn monomial_product_adds_leads() {
        let p = s(1, &[1]).mul(&s(2, &[1]));
        assert_eq!(p.lead24(), 3);
        assert_eq!(p.coeffs(), &[BigInt::one()]);
    }

    #[test]
    fn truncation_never_extends() {
        let p = s(0, &[1, 1, 1, 1]).mul(&s(0, &[1, -1]));
        assert_eq!(p.order(), 2);
        let q = s(0, &[1, 2, 3]).add(&s(24, &[5, 5, 5, 5])).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.coeffs(), &[1, 7, 8].map(BigInt::from));
    }

    #[test]
    fn normalizes_leading_zeros() {
        let d = s(6, &[1, 2, 3]).sub(&s(6, &[1, 0, 3])).unwrap();
        assert_eq!(d.lead24(), 30);
        assert_eq!(d.coeffs(), &[BigInt::from(2), BigInt::zero()]);
    }

    #[test]
    fn incongruent_leads_rejected() {
        assert!(matches!(s(1, &[1]).add(&s(2, &[1])), Err(SeriesError::IncongruentLeads { .. })));
    }

    #[test]
    fn division_roundtrip_and_errors() {
        let a = s(0, &[1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(a.div(&a, 8).unwrap(), FormalQSeries::one(8));
        let b = s(0, &[-1, 3, 0, 2]);
        let q = s(0, &[4, 1, 7, -2]).div(&b, 10).unwrap();
        assert_eq!(q.mul(&b), s(0, &[4, 1, 7, -2]));
        assert!(matches!(a.div(&s(0, &[2, 1]), 5), Err(SeriesError::NonUnitLeading(_))));
        assert!(matches!(a.div(&FormalQSeries::zero(0, 3), 5), Err(SeriesError::ZeroDivisor)));
    }

    #[test]
    fn power_matches_repeated_product() {
        let a = s(1, &[1, -1, -1, 0, 0, 1]);
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert_eq!(a.pow(0), FormalQSeries::one(6));
    }
}
