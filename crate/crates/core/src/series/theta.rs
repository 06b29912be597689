//! Exact theta series: `φ`, `ψ` and two-dimensional families
//! `Σ sign · w(n) · q^{(c₁(m₁n+s₁)² + c₂(m₂k+s₂)²)/D}`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::qseries::FormalQSeries;
use super::SeriesError;

/// `φ(q) = Σ_{n∈ℤ} q^{n²}` to `n_terms` coefficients.
pub fn theta_series_phi(n_terms: usize) -> FormalQSeries {
    let mut c = vec![BigInt::zero(); n_terms];
    let mut n = 0usize;
    while n * n < n_terms {
        c[n * n] += if n == 0 { 1 } else { 2 };
        n += 1;
    }
    FormalQSeries::new(0, c)
}

/// `ψ(q) = Σ_{n≥0} q^{n(n+1)/2}` to `n_terms` coefficients.
pub fn theta_series_psi(n_terms: usize) -> FormalQSeries {
    let mut c = vec![BigInt::zero(); n_terms];
    let mut n = 0usize;
    while n * (n + 1) / 2 < n_terms {
        c[n * (n + 1) / 2] += 1;
        n += 1;
    }
    FormalQSeries::new(0, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    None,
    /// `(-1)^n` on the first index.
    First,
    /// `(-1)^{n+k}`.
    Both,
}

/// Linear weight `w(n)` applied to the first index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearWeight {
    One,
    TwoNPlusOne,
    SixNPlusOne,
    ThreeNPlusOne,
}

impl LinearWeight {
    fn at(self, n: i64) -> i64 {
        match self {
            LinearWeight::One => 1,
            LinearWeight::TwoNPlusOne => 2 * n + 1,
            LinearWeight::SixNPlusOne => 6 * n + 1,
            LinearWeight::ThreeNPlusOne => 3 * n + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexRange {
    NonNegative,
    All,
}

/// `c · (m·n + s)²` over an index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareForm {
    pub coeff: i64,
    pub mul: i64,
    pub shift: i64,
    pub range: IndexRange,
}

impl SquareForm {
    pub fn new(coeff: i64, mul: i64, shift: i64, range: IndexRange) -> Self {
        SquareForm { coeff, mul, shift, range }
    }

    fn value(&self, n: i64) -> i64 {
        let v = self.mul * n + self.shift;
        self.coeff * v * v
    }

    /// Indices with `coeff·(mul·n+shift)² ≤ bound`.
    fn indices(&self, bound: i64) -> Vec<i64> {
        // |mul·n + shift| ≤ r
        let r = libm::sqrt(bound as f64 / self.coeff as f64) as i64 + 1;
        let m = self.mul.abs();
        let lo = (-r - self.shift.abs()) / m - 1;
        let hi = (r + self.shift.abs()) / m + 1;
        let lo = if self.range == IndexRange::NonNegative { lo.max(0) } else { lo };
        (lo..=hi).filter(|&n| self.value(n) <= bound).collect()
    }
}

/// `coeff · Σ sign(n,k) · w(n) · q^{(first(n) + second(k))/divisor}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theta2DFamily {
    pub coeff: i64,
    pub sign: SignPattern,
    pub weight: LinearWeight,
    pub first: SquareForm,
    pub second: SquareForm,
    pub divisor: i64,
}

impl Theta2DFamily {
    fn check(&self) -> Result<(), SeriesError> {
        let ok = |f: &SquareForm| f.coeff > 0 && f.mul != 0;
        if !ok(&self.first) || !ok(&self.second) || self.divisor <= 0 {
            return Err(SeriesError::Indefinite);
        }
        Ok(())
    }

    /// Exponents in 1/24 units, with the sign·weight contribution of each
    /// lattice point whose exponent lies in `[0, end24)`.
    fn points(&self, end24: i64) -> Result<Vec<(i64, i64)>, SeriesError> {
        self.check()?;
        // Q/D < end24/24  ⇔  24·Q < end24·D
        let bound = (end24 * self.divisor) / 24 + 1;
        let ks = self.second.indices(bound);
        let mut out = Vec::new();
        for n in self.first.indices(bound) {
            let a = self.first.value(n);
            for &k in &ks {
                let q = a + self.second.value(k);
                let num = 24 * q;
                if num % self.divisor != 0 {
                    return Err(SeriesError::NonIntegralExponent { numerator: q, divisor: self.divisor });
                }
                let e24 = num / self.divisor;
                if e24 >= end24 {
                    continue;
                }
                let sign = match self.sign {
                    SignPattern::None => 1,
                    SignPattern::First => 1 - 2 * n.rem_euclid(2),
                    SignPattern::Both => 1 - 2 * (n + k).rem_euclid(2),
                };
                out.push((e24, self.coeff * sign * self.weight.at(n)));
            }
        }
        Ok(out)
    }
}

/// Sum of families as an exact series of `n_terms` coefficients starting at
/// the smallest exponent any family reaches. All exponents must differ by
/// integers.
pub fn expand_theta2d(families: &[Theta2DFamily], n_terms: usize) -> Result<FormalQSeries, SeriesError> {
    if families.is_empty() {
        return Ok(FormalQSeries::zero(0, n_terms));
    }
    // smallest exponent, found by doubling a probe window
    let mut lead = i64::MAX;
    for f in families {
        let mut window = 24;
        loop {
            let pts = f.points(window)?;
            if let Some(e) = pts.iter().map(|p| p.0).min() {
                lead = lead.min(e);
                break;
            }
            window *= 2;
        }
    }
    // cancellation can push the true lead up; re-expand from there so the
    // result always carries n_terms coefficients
    loop {
        let s = expand_from(families, lead, n_terms)?;
        if s.is_zero() || s.lead24() == lead || n_terms == 0 {
            return Ok(s);
        }
        lead = s.lead24();
    }
}

fn expand_from(families: &[Theta2DFamily], lead: i64, n_terms: usize) -> Result<FormalQSeries, SeriesError> {
    let end24 = lead + 24 * n_terms as i64;
    let mut coeffs = vec![BigInt::zero(); n_terms];
    for f in families {
        for (e24, c) in f.points(end24)? {
            if e24 < lead {
                continue;
            }
            let off = e24 - lead;
            if off % 24 != 0 {
                return Err(SeriesError::IncongruentLeads { a: e24, b: lead });
            }
            coeffs[(off / 24) as usize] += c;
        }
    }
    if coeffs.iter().all(|c| c.is_zero()) {
        return Ok(FormalQSeries::zero(lead, n_terms));
    }
    Ok(FormalQSeries::new(lead, coeffs))
}
