//! JSON and CSV forms of expansions and density profiles.

use latticelab_core::series::{DensityProfile, Expansion};
use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// `q^{lead} Σ coeffs[n] qⁿ`, coefficients as decimal strings (`p/q` when
/// the expression has rational coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub lead_num: i64,
    pub lead_den: i64,
    pub coeffs: Vec<String>,
}

impl From<&Expansion> for SeriesJson {
    fn from(e: &Expansion) -> Self {
        let lead = e.series.lead_exponent();
        let coeffs = e.series.coeffs().iter().map(|c| Ratio::new(c.clone(), e.denominator.clone()).to_string()).collect();
        SeriesJson { lead_num: *lead.numer(), lead_den: *lead.denom(), coeffs }
    }
}

impl SeriesJson {
    /// Coefficients back as exact rationals.
    pub fn rationals(&self) -> Result<Vec<Ratio<BigInt>>, String> {
        self.coeffs
            .iter()
            .map(|s| {
                let (n, d) = s.split_once('/').unwrap_or((s, "1"));
                let n: BigInt = n.parse().map_err(|_| format!("bad coefficient `{s}`"))?;
                let d: BigInt = d.parse().map_err(|_| format!("bad coefficient `{s}`"))?;
                Ok(Ratio::new(n, d))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityJson {
    pub window: usize,
    pub nonzero: Vec<usize>,
    pub densities: Vec<f64>,
}

impl From<&DensityProfile> for DensityJson {
    fn from(p: &DensityProfile) -> Self {
        DensityJson { window: p.window, nonzero: p.nonzero.clone(), densities: p.densities.clone() }
    }
}

/// One row per window: `window_start, window_end, nonzero, density`.
pub fn density_csv(p: &DensityProfile) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["window_start", "window_end", "nonzero", "density"]).expect("in-memory write");
    for (i, (k, d)) in p.nonzero.iter().zip(&p.densities).enumerate() {
        let lo = i * p.window;
        w.write_record([lo.to_string(), (lo + p.window).to_string(), k.to_string(), d.to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
