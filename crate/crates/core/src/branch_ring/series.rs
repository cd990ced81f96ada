//! Power series in one variable with exact rational coefficients, known up
//! to a precision: the coefficients of `t^k` for `k ≥ precision` are unknown.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, known below `precision`
    /// (missing coefficients are zero, extra ones are dropped).
    pub fn new(mut coeffs: Vec<BigRational>, precision: usize) -> Self {
        coeffs.resize(precision, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(vec![], precision)
    }

    pub fn constant(c: BigRational, precision: usize) -> Self {
        Self::new(vec![c], precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(BigRational::one(), precision)
    }

    pub fn monomial(c: BigRational, exponent: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if exponent < precision {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^k`, `None` when unknown.
    pub fn coeff(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Order of vanishing, `None` if every known coefficient is zero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Order of vanishing, or the precision as a lower bound.
    fn order_bound(&self) -> usize {
        self.order().unwrap_or(self.precision())
    }

    pub fn is_known_zero(&self) -> bool {
        self.order().is_none()
    }

    pub fn constant_term(&self) -> Option<&BigRational> {
        self.coeff(0)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let p = precision.min(self.precision());
        TruncatedSeries {
            coeffs: self.coeffs[..p].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        TruncatedSeries {
            coeffs: (0..p).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        TruncatedSeries {
            coeffs: (0..p).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Product; known below `min(p + ord g, q + ord f)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_capped(other, usize::MAX)
    }

    /// Product known (at most) below `cap`.
    pub fn mul_capped(&self, other: &Self, cap: usize) -> Self {
        let (p, q) = (self.precision(), other.precision());
        let prec = (p + other.order_bound()).min(q + self.order_bound()).min(cap);
        let mut coeffs = vec![BigRational::zero(); prec];
        let fo = self.order_bound();
        let go = other.order_bound();
        for i in fo..p.min(prec) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for k in (i + go)..prec {
                let j = k - i;
                if j >= q {
                    break;
                }
                if !other.coeffs[j].is_zero() {
                    coeffs[k] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = match self.constant_term() {
            Some(c) if !c.is_zero() => c.clone(),
            _ => return Err(Error::Domain("series is not a unit".into())),
        };
        let p = self.precision();
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(p);
        out.push(inv0.clone());
        for k in 1..p {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `t^{-m} f`, requiring the known coefficients below `m` to vanish.
    pub fn shift_down(&self, m: usize) -> Result<Self> {
        if self.precision() < m {
            return Err(Error::Truncation(format!(
                "a series known below order {} cannot be divided by t^{m}",
                self.precision()
            )));
        }
        if self.coeffs[..m].iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!("series is not divisible by t^{m}")));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// `self / x` for `x` of known order `m ≤ ord(self)`.
    pub fn div(&self, x: &Self) -> Result<Self> {
        let m = x
            .order()
            .ok_or_else(|| Error::Truncation("division by a series that is zero up to its precision".into()))?;
        let num = self.shift_down(m)?;
        let unit = x.shift_down(m)?.inverse()?;
        Ok(num.mul(&unit))
    }

    pub fn format_with(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            match k {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&format!("{a}*"));
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" + O({var}^{})", self.precision()));
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("t"))
    }
}

pub(crate) fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
