use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense univariate integer polynomial in `t`; `coeffs[i]` is the
/// coefficient of `t^i`. The last stored coefficient is never zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<i64>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `c * t^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeff(i)
                    .checked_add(other.coeff(i))
                    .ok_or(Error::Overflow("t-polynomial addition"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow("t-polynomial multiplication"))?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(prod)
                    .ok_or(Error::Overflow("t-polynomial multiplication"))?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; d];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i128 {
        self.coeffs.iter().map(|&c| c as i128).sum()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{mag}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}*t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TPolyRepr {
    coeffs: Vec<i64>,
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TPolyRepr { coeffs: self.coeffs.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        TPolyRepr::deserialize(deserializer).map(|r| TPoly::from_coeffs(r.coeffs))
    }
}

/// Gaussian binomial `(a choose n)_t`, normalized to have constant term 1.
///
/// Built from `C(a, n) = C(a-1, n-1) + t^n C(a-1, n)` with `C(a, 0) = 1`;
/// zero when `n > a`.
pub fn gauss_binom_t(a: u32, n: u32) -> Result<TPoly> {
    if n > a {
        return Ok(TPoly::zero());
    }
    let n = n as usize;
    // row[j] = C(i, j)_t for the current i
    let mut row: Vec<TPoly> = vec![TPoly::zero(); n + 1];
    row[0] = TPoly::one();
    for _ in 1..=a {
        for j in (1..=n).rev() {
            row[j] = row[j - 1].checked_add(&row[j].shift(j))?;
        }
    }
    Ok(row.swap_remove(n))
}

/// Ordinary binomial coefficient with overflow detection; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}
