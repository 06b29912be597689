use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use super::eta::EtaExpression;
use super::qseries::FormalQSeries;
use super::SeriesError;

/// First exponent where two expansions differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Exponent times 24.
    pub exponent24: i64,
    pub lhs: Ratio<BigInt>,
    pub rhs: Ratio<BigInt>,
}

impl Mismatch {
    pub fn exponent(&self) -> Ratio<i64> {
        Ratio::new(self.exponent24, 24)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass { checked: usize },
    Fail(Mismatch),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }
}

/// Compares `a/da` with `b/db` on `n_terms` integer steps from `lead24`.
/// Coefficients below a series' own lead count as zero.
pub fn compare_scaled(
    a: &FormalQSeries,
    da: &BigInt,
    b: &FormalQSeries,
    db: &BigInt,
    lead24: i64,
    n_terms: usize,
) -> Result<Verdict, SeriesError> {
    let end = lead24 + 24 * n_terms as i64;
    for s in [a, b] {
        if s.end24() < end {
            return Err(SeriesError::Truncated { needed: end, available: s.end24() });
        }
    }
    let zero = BigInt::zero();
    let coeff = |s: &FormalQSeries, e24: i64| -> Result<BigInt, SeriesError> {
        if e24 < s.lead24() {
            return Ok(zero.clone());
        }
        s.coeff_at24(e24)
            .cloned()
            .ok_or(SeriesError::IncongruentLeads { a: s.lead24(), b: lead24 })
    };
    for i in 0..n_terms as i64 {
        let e = lead24 + 24 * i;
        let x = coeff(a, e)?;
        let y = coeff(b, e)?;
        if &x * db != &y * da {
            return Ok(Verdict::Fail(Mismatch {
                exponent24: e,
                lhs: Ratio::new(x, da.clone()),
                rhs: Ratio::new(y, db.clone()),
            }));
        }
    }
    Ok(Verdict::Pass { checked: n_terms })
}

/// Compares two integer series on their common window.
pub fn compare_series(a: &FormalQSeries, b: &FormalQSeries, n_terms: usize) -> Result<Verdict, SeriesError> {
    let lead = a.lead24().min(b.lead24());
    let one = BigInt::from(1);
    compare_scaled(a, &one, b, &one, lead, n_terms)
}

/// Checks that `lhs - rhs` vanishes through `n_terms` coefficients past the
/// smallest leading exponent on either side.
pub fn verify_coefficient_identity(lhs: &EtaExpression, rhs: &EtaExpression, n_terms: usize) -> Result<Verdict, SeriesError> {
    let lead = match (lhs.min_lead24(), rhs.min_lead24()) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return Ok(Verdict::Pass { checked: n_terms }),
    };
    let expand = |x: &EtaExpression| -> Result<(FormalQSeries, BigInt), SeriesError> {
        let Some(own) = x.min_lead24() else {
            return Ok((FormalQSeries::zero(lead, n_terms), BigInt::from(1)));
        };
        // own window starts later, so it needs fewer terms to reach the end
        let skip = ((own - lead) / 24) as usize;
        let e = x.expand(n_terms.saturating_sub(skip).max(1))?;
        Ok((e.series, e.denominator))
    };
    let (a, da) = expand(lhs)?;
    let (b, db) = expand(rhs)?;
    compare_scaled(&a, &da, &b, &db, lead, n_terms)
}

/// `⌊weight·[SL₂(ℤ):Γ₀(N)]/12⌋ + 1` with the index `N·Π_{p|N}(1+1/p)`.
pub fn sturm_bound(level: u64, weight: u64) -> u64 {
    let mut n = level;
    let mut index = level;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            index = index / p * (p + 1);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        index = index / n * (n + 1);
    }
    weight * index / 12 + 1
}

/// Fraction of nonzero coefficients in consecutive windows.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile {
    pub window: usize,
    pub nonzero: Vec<usize>,
    pub densities: Vec<f64>,
}

impl DensityProfile {
    pub fn first(&self) -> f64 {
        self.densities.first().copied().unwrap_or(0.0)
    }

    pub fn last(&self) -> f64 {
        self.densities.last().copied().unwrap_or(0.0)
    }
}

/// Nonzero-coefficient density per window over the first `n_terms`
/// coefficients of a series.
pub fn density_profile(s: &FormalQSeries, n_terms: usize, window: usize) -> Result<DensityProfile, SeriesError> {
    if window == 0 || !n_terms.is_multiple_of(window) {
        return Err(SeriesError::InvalidArgument("window must divide the number of terms".into()));
    }
    let c = s.coeffs();
    let mut nonzero = Vec::with_capacity(n_terms / window);
    for w in 0..n_terms / window {
        let lo = (w * window).min(c.len());
        let hi = ((w + 1) * window).min(c.len());
        nonzero.push(c[lo..hi].iter().filter(|x| !x.is_zero()).count());
    }
    let densities = nonzero.iter().map(|&k| k as f64 / window as f64).collect();
    Ok(DensityProfile { window, nonzero, densities })
}

/// Expands `x` to `n_terms` and profiles the nonzero density per window.
pub fn lacunarity_scan(x: &EtaExpression, n_terms: usize, window: usize) -> Result<DensityProfile, SeriesError> {
    if window == 0 || !n_terms.is_multiple_of(window) {
        return Err(SeriesError::InvalidArgument("window must divide the number of terms".into()));
    }
    let e = x.expand(n_terms)?;
    let lead = x.min_lead24().unwrap_or(0);
    let s = e.series.rebase(lead).unwrap_or(e.series);
    density_profile(&s, n_terms, window)
}
