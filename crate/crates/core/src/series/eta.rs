use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::qseries::FormalQSeries;
use super::SeriesError;

/// `η(q^j)` to `n_terms` coefficients: `q^{j/24} Σ (-1)^n q^{j·n(3n-1)/2}`.
pub fn eta_series(j: u32, n_terms: usize) -> FormalQSeries {
    let j = j as i64;
    if n_terms == 0 {
        return FormalQSeries::zero(j, 0);
    }
    let mut coeffs = vec![BigInt::zero(); n_terms];
    let limit = n_terms as i64;
    coeffs[0] = BigInt::one();
    let mut n: i64 = 1;
    // offsets j·m(3m-1)/2 for m = n and m = -n; the latter is the larger
    while j * n * (3 * n - 1) / 2 < limit {
        let c = if n.is_even() { BigInt::one() } else { -BigInt::one() };
        coeffs[(j * n * (3 * n - 1) / 2) as usize] = c.clone();
        let far = j * n * (3 * n + 1) / 2;
        if far < limit {
            coeffs[far as usize] = c;
        }
        n += 1;
    }
    FormalQSeries::new(j, coeffs)
}

/// `Π η(q^j)^e` over `(j, e)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaMonomial {
    factors: Vec<(u32, i32)>,
}

impl EtaMonomial {
    /// Merges repeated scales and drops zero powers; factors are kept sorted.
    pub fn new(factors: impl IntoIterator<Item = (u32, i32)>) -> Result<Self, SeriesError> {
        let mut merged: Vec<(u32, i32)> = Vec::new();
        for (j, e) in factors {
            if j == 0 {
                return Err(SeriesError::InvalidArgument("eta scale must be positive".into()));
            }
            match merged.iter_mut().find(|(k, _)| *k == j) {
                Some(slot) => slot.1 += e,
                None => merged.push((j, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        merged.sort_unstable();
        Ok(EtaMonomial { factors: merged })
    }

    /// Product `e_{j1} e_{j2} …` of first powers.
    pub fn product(scales: &[u32]) -> Result<Self, SeriesError> {
        Self::new(scales.iter().map(|&j| (j, 1)))
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    /// Weight `Σe/2`.
    pub fn weight(&self) -> Ratio<i64> {
        Ratio::new(self.factors.iter().map(|&(_, e)| e as i64).sum(), 2)
    }

    /// Leading exponent times 24, `Σ j·e`.
    pub fn lead24(&self) -> i64 {
        self.factors.iter().map(|&(j, e)| j as i64 * e as i64).sum()
    }

    /// True when every power is positive.
    pub fn is_product(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e > 0)
    }

    /// Scales of a pure product with multiplicity, e.g. `e_7^2 → [7, 7]`.
    pub fn scales_with_multiplicity(&self) -> Option<Vec<u32>> {
        if !self.is_product() {
            return None;
        }
        Some(self.factors.iter().flat_map(|&(j, e)| core::iter::repeat_n(j, e as usize)).collect())
    }

    /// Least common multiple of the scales.
    pub fn level(&self) -> u64 {
        self.factors.iter().fold(1u64, |l, &(j, _)| l.lcm(&(j as u64)))
    }

    /// Exact expansion to `n_terms` coefficients.
    pub fn expand(&self, n_terms: usize) -> Result<FormalQSeries, SeriesError> {
        let mut num = FormalQSeries::one(n_terms);
        let mut den = FormalQSeries::one(n_terms);
        for &(j, e) in &self.factors {
            let base = eta_series(j, n_terms);
            let p = base.pow(e.unsigned_abs());
            if e > 0 {
                num = num.mul(&p);
            } else {
                den = den.mul(&p);
            }
        }
        num.div(&den, n_terms)
    }
}

impl fmt::Display for EtaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(j, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "e{j}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Rational linear combination of eta monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EtaExpression {
    terms: Vec<(Ratio<i64>, EtaMonomial)>,
}

/// Expansion of an [`EtaExpression`]: `series / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub series: FormalQSeries,
    pub denominator: BigInt,
}

impl EtaExpression {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Ratio<i64>, EtaMonomial)>) -> Self {
        let mut x = Self::new();
        for (c, m) in terms {
            x.push(c, m);
        }
        x
    }

    /// Adds `coeff · monomial`, merging with an existing equal monomial.
    pub fn push(&mut self, coeff: Ratio<i64>, monomial: EtaMonomial) {
        if let Some(slot) = self.terms.iter_mut().find(|(_, m)| *m == monomial) {
            slot.0 += coeff;
        } else {
            self.terms.push((coeff, monomial));
        }
        self.terms.retain(|(c, _)| !c.is_zero());
    }

    pub fn with(mut self, coeff: i64, monomial: EtaMonomial) -> Self {
        self.push(Ratio::from_integer(coeff), monomial);
        self
    }

    pub fn terms(&self) -> &[(Ratio<i64>, EtaMonomial)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self - other`.
    pub fn minus(&self, other: &EtaExpression) -> EtaExpression {
        let mut out = self.clone();
        for (c, m) in &other.terms {
            out.push(-*c, m.clone());
        }
        out
    }

    /// Copy with one term's coefficient replaced (used to build mutated
    /// identities).
    pub fn with_coefficient(&self, index: usize, coeff: Ratio<i64>) -> EtaExpression {
        let mut out = self.clone();
        if let Some(t) = out.terms.get_mut(index) {
            t.0 = coeff;
        }
        out.terms.retain(|(c, _)| !c.is_zero());
        out
    }

    /// Least common multiple of all scales, used as the level.
    pub fn level(&self) -> u64 {
        self.terms.iter().fold(1u64, |l, (_, m)| l.lcm(&m.level()))
    }

    /// Largest monomial weight (all weights agree for the identities in use).
    pub fn weight(&self) -> Ratio<i64> {
        self.terms.iter().map(|(_, m)| m.weight()).max().unwrap_or_else(Ratio::zero)
    }

    /// Smallest leading exponent over the monomials, times 24.
    pub fn min_lead24(&self) -> Option<i64> {
        self.terms.iter().map(|(_, m)| m.lead24()).min()
    }

    /// Exact expansion valid through `min_lead + n_terms`. Each monomial is
    /// expanded only as far as that window needs; rational coefficients are
    /// cleared to a common denominator.
    pub fn expand(&self, n_terms: usize) -> Result<Expansion, SeriesError> {
        let Some(lead) = self.min_lead24() else {
            return Ok(Expansion { series: FormalQSeries::zero(0, n_terms), denominator: BigInt::one() });
        };
        let denom = self.terms.iter().fold(1i64, |d, (c, _)| d.lcm(c.denom()));
        let mut total = FormalQSeries::zero(lead, n_terms);
        for (c, m) in &self.terms {
            let shift = m.lead24() - lead;
            if shift % 24 != 0 {
                return Err(SeriesError::IncongruentLeads { a: m.lead24(), b: lead });
            }
            let needed = n_terms.saturating_sub((shift / 24) as usize);
            if needed == 0 {
                continue;
            }
            let scaled = *c * denom;
            let part = m.expand(needed)?.scale(&BigInt::from(scaled.to_integer()));
            total = total.add(&part)?;
        }
        Ok(Expansion { series: total, denominator: BigInt::from(denom) })
    }
}

impl fmt::Display for EtaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
