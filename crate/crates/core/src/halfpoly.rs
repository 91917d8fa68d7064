//! Polynomials in `t = √x`.
//!
//! Expressions mixing integer and half-integer powers of `x` become
//! ordinary polynomials in `t`: `x^k ↦ t^{2k}` and `x^{k+1/2} ↦ t^{2k+1}`.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct HalfPoly {
    /// `coeffs[i]` multiplies `t^i`.
    coeffs: Vec<f64>,
    /// The `α` the polynomial was built for, if any.
    alpha: Option<f64>,
}

impl HalfPoly {
    pub fn new(mut coeffs: Vec<f64>, alpha: Option<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        HalfPoly { coeffs, alpha }
    }

    /// `Σ c x^p` over `(p, c)` pairs, with `p` a non-negative multiple of 1/2
    /// given as twice its value.
    pub fn from_half_powers<I>(terms: I, alpha: Option<f64>) -> Self
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let mut coeffs = Vec::new();
        for (twice_power, c) in terms {
            if coeffs.len() <= twice_power {
                coeffs.resize(twice_power + 1, 0.0);
            }
            coeffs[twice_power] += c;
        }
        HalfPoly::new(coeffs, alpha)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// Degree in `t`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval_t(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// Evaluates at `x = t²`, `x ≥ 0`.
    pub fn eval_x(&self, x: f64) -> f64 {
        self.eval_t(x.sqrt())
    }

    /// `d/dt`.
    pub fn derivative(&self) -> HalfPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| i as f64 * c)
            .collect();
        HalfPoly::new(coeffs, self.alpha)
    }

    /// Coefficients of `p(t0 + d)` as a polynomial in `d`.
    pub fn taylor_shift(&self, t0: f64) -> HalfPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] += t0 * c[j + 1];
            }
        }
        HalfPoly::new(c, self.alpha)
    }

    pub fn scale(&self, factor: f64) -> HalfPoly {
        HalfPoly::new(self.coeffs.iter().map(|c| c * factor).collect(), self.alpha)
    }

    pub fn add(&self, other: &HalfPoly) -> HalfPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0.0)
                    + other.coeffs.get(i).copied().unwrap_or(0.0)
            })
            .collect();
        HalfPoly::new(coeffs, self.alpha.or(other.alpha))
    }

    pub fn sub(&self, other: &HalfPoly) -> HalfPoly {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &HalfPoly) -> HalfPoly {
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HalfPoly::new(coeffs, self.alpha.or(other.alpha))
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> HalfPoly {
        let mut coeffs = vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        HalfPoly::new(coeffs, self.alpha)
    }

    /// `t^{deg} p(1/t)`.
    pub fn reversed(&self) -> HalfPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        HalfPoly::new(coeffs, self.alpha)
    }
}

impl fmt::Display for HalfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 && !(first && i == 0) {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag == 1.0) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x^(1/2)")?,
                _ if i % 2 == 0 => write!(f, "x^{}", i / 2)?,
                _ => write!(f, "x^({}/2)", i)?,
            }
        }
        Ok(())
    }
}
