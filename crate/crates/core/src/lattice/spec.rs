use core::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::LatticeError;

/// Entries `(a, b, c, d)` of `F(a,b,c,d)`, positive rationals in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeSpec {
    entries: [Ratio<i64>; 4],
}

impl LatticeSpec {
    pub fn new(entries: [Ratio<i64>; 4]) -> Result<Self, LatticeError> {
        if entries.iter().any(|e| *e <= Ratio::zero()) {
            return Err(LatticeError::NonPositiveEntry);
        }
        // Ratio keeps itself reduced
        Ok(LatticeSpec { entries })
    }

    pub fn ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self, LatticeError> {
        Self::new([a, b, c, d].map(Ratio::from_integer))
    }

    /// `F(b,c) = F(1, b, c, bc)`.
    pub fn shorthand(b: Ratio<i64>, c: Ratio<i64>) -> Result<Self, LatticeError> {
        Self::new([Ratio::one(), b, c, b * c])
    }

    pub fn entries(&self) -> &[Ratio<i64>; 4] {
        &self.entries
    }

    /// `a + b + c + d`.
    pub fn sum(&self) -> Ratio<i64> {
        self.entries.iter().sum()
    }

    /// The normalization `(a+b+c+d)²`.
    pub fn norm(&self) -> Ratio<i64> {
        let s = self.sum();
        s * s
    }

    /// Same entries times `λ`.
    pub fn scaled(&self, lambda: Ratio<i64>) -> Result<Self, LatticeError> {
        Self::new(self.entries.map(|e| e * lambda))
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "F({a},{b},{c},{d})")
    }
}
