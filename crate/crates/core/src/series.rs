//! Poincaré polynomials in `t` with nonnegative integer coefficients.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poincare {
    /// `coeffs[k]` is the coefficient of `t^k`; no trailing zeros.
    coeffs: Vec<u64>,
}

impl Poincare {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poincare { coeffs }
    }

    /// `Σ dims[k] t^{2k}`: the cohomological doubling of a Chow-graded series.
    pub fn from_even_dims(dims: &[usize]) -> Self {
        let mut coeffs = vec![0; dims.len() * 2];
        for (k, &d) in dims.iter().enumerate() {
            coeffs[2 * k] = d as u64;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn add_monomial(&mut self, power: usize, c: u64) {
        if self.coeffs.len() <= power {
            self.coeffs.resize(power + 1, 0);
        }
        self.coeffs[power] += c;
        *self = Self::from_coeffs(std::mem::take(&mut self.coeffs));
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> u64 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for Poincare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
