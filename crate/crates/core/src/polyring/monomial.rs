use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer `k` standing for the spectral parameter `a * q^(2k)` over a fixed
/// formal base `a`.
pub type Spectral = i64;

/// A monomial `prod_k Y_k^{e_k}` in the spectral variables.
///
/// Stored as `(k, e_k)` pairs sorted by `k` with every `e_k != 0`, so the
/// derived ordering is the lexicographic order on `(spectral exponent, power)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Spectral, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// `Y_k`.
    pub fn var(k: Spectral) -> Self {
        Self(vec![(k, 1)])
    }

    /// `Y_k^e`.
    pub fn var_pow(k: Spectral, e: i64) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Self(vec![(k, e)])
        }
    }

    /// `A_{k+1/2} = Y_k Y_{k+1}`.
    pub fn a_var(pos: HalfPos) -> Self {
        let k = pos.floor();
        Self(vec![(k, 1), (k + 1, 1)])
    }

    /// Builds a monomial from possibly repeated `(k, e)` factors.
    pub fn from_factors<I>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Spectral, i64)>,
    {
        let mut acc: BTreeMap<Spectral, i64> = BTreeMap::new();
        for (k, e) in factors {
            let slot = acc.entry(k).or_insert(0);
            *slot = slot.checked_add(e).ok_or(Error::Overflow("monomial exponent"))?;
        }
        Ok(Self(acc.into_iter().filter(|&(_, e)| e != 0).collect()))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// All exponents are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&(_, e)| e >= 0)
    }

    pub fn exponent(&self, k: Spectral) -> i64 {
        self.0
            .binary_search_by_key(&k, |&(kk, _)| kk)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Spectral, i64)] {
        &self.0
    }

    /// Smallest and largest spectral index carrying a nonzero exponent.
    pub fn support_bounds(&self) -> Option<(Spectral, Spectral)> {
        Some((self.0.first()?.0, self.0.last()?.0))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i]
                        .1
                        .checked_add(b[j].1)
                        .ok_or(Error::Overflow("monomial exponent"))?;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Self(out))
    }

    pub fn checked_inv(&self) -> Result<Self> {
        self.0
            .iter()
            .map(|&(k, e)| {
                e.checked_neg()
                    .map(|e| (k, e))
                    .ok_or(Error::Overflow("monomial exponent"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn checked_pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one());
        }
        self.0
            .iter()
            .map(|&(k, x)| {
                x.checked_mul(e)
                    .map(|x| (k, x))
                    .ok_or(Error::Overflow("monomial exponent"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Translates every spectral index by `shift`.
    pub fn shifted(&self, shift: Spectral) -> Self {
        Self(self.0.iter().map(|&(k, e)| (k + shift, e)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, &(k, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "Y[{k}]")?;
            } else {
                write!(f, "Y[{k}]^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, e) in &self.0 {
            map.serialize_entry(&k.to_string(), e)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct MonomialVisitor;

        impl<'de> Visitor<'de> for MonomialVisitor {
            type Value = Monomial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from spectral index strings to integer exponents")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Monomial, A::Error> {
                let mut factors = Vec::new();
                while let Some((key, e)) = access.next_entry::<String, i64>()? {
                    let k: Spectral = key
                        .trim()
                        .parse()
                        .map_err(|_| serde::de::Error::custom(format!("bad spectral index {key:?}")))?;
                    factors.push((k, e));
                }
                Monomial::from_factors(factors).map_err(serde::de::Error::custom)
            }
        }

        deserializer.deserialize_map(MonomialVisitor)
    }
}

/// Position `k + 1/2` of an `A`-variable, stored doubled as `2k + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPos(i64);

impl HalfPos {
    /// The position `k + 1/2`.
    pub fn above(k: Spectral) -> Self {
        Self(2 * k + 1)
    }

    /// The integer `k` with this position equal to `k + 1/2`.
    pub fn floor(self) -> Spectral {
        self.0.div_euclid(2)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }
}

impl fmt::Display for HalfPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+1/2", self.floor())
    }
}

impl fmt::Debug for HalfPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{self}]")
    }
}

/// Writes `m1 / m2` as `prod_j A_j^{-c_j}` with all `c_j >= 0`, if possible.
///
/// `Some(c)` means `m1 <= m2` in the `A^{-1}` order; zero entries are omitted,
/// so `m1 == m2` yields an empty map. `None` means the two monomials are not
/// comparable in this direction.
pub fn a_inverse_factorization(m1: &Monomial, m2: &Monomial) -> Option<BTreeMap<HalfPos, u64>> {
    // Exponent overflow here can only arise from absurd inputs; treat it as
    // "not comparable" rather than guessing.
    let delta = m1.checked_div(m2).ok()?;
    let (lo, hi) = match delta.support_bounds() {
        None => return Some(BTreeMap::new()),
        Some(b) => b,
    };
    let mut out = BTreeMap::new();
    // c holds the exponent of A^{-1} at position k - 1/2 while visiting k.
    let mut c: i64 = 0;
    for k in lo..=hi {
        let next = delta.exponent(k).checked_neg()?.checked_sub(c)?;
        if next < 0 {
            return None;
        }
        if next > 0 {
            out.insert(HalfPos::above(k), next as u64);
        }
        c = next;
    }
    // Y_{hi+1} must receive no contribution from A_{hi+1/2}.
    (c == 0).then_some(out)
}

/// `m1 <= m2` in the `A^{-1}` order.
pub fn a_leq(m1: &Monomial, m2: &Monomial) -> bool {
    a_inverse_factorization(m1, m2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(f: &[(i64, i64)]) -> Monomial {
        Monomial::from_factors(f.iter().copied()).unwrap()
    }

    #[test]
    fn from_factors_merges_and_drops_zeros() {
        let m = mono(&[(1, 2), (0, 1), (1, -2)]);
        assert_eq!(m, Monomial::var(0));
        assert!(mono(&[(3, 1), (3, -1)]).is_one());
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let big = Monomial::var_pow(0, i64::MAX);
        assert_eq!(big.checked_mul(&Monomial::var(0)), Err(Error::Overflow("monomial exponent")));
    }

    #[test]
    fn dominance() {
        assert!(Monomial::one().is_dominant());
        assert!(mono(&[(0, 1), (1, 3)]).is_dominant());
        assert!(!mono(&[(0, 1), (1, -1)]).is_dominant());
    }

    #[test]
    fn factorization_examples() {
        let one = Monomial::one();
        let y0y1 = mono(&[(0, 1), (1, 1)]);
        let got = a_inverse_factorization(&one, &y0y1).unwrap();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(HalfPos::above(0), 1)]);

        assert_eq!(a_inverse_factorization(&y0y1, &y0y1), Some(BTreeMap::new()));
        assert_eq!(a_inverse_factorization(&Monomial::var(0), &Monomial::var(1)), None);
    }

    #[test]
    fn factorization_reads_back() {
        // Y_0 A_{1/2}^{-2} A_{3/2}^{-1} / Y_0
        let m2 = mono(&[(0, 3), (4, 1)]);
        let mut m1 = m2.clone();
        for (pos, c) in [(HalfPos::above(0), 2), (HalfPos::above(1), 1)] {
            m1 = m1.checked_div(&Monomial::a_var(pos).checked_pow(c).unwrap()).unwrap();
        }
        let got = a_inverse_factorization(&m1, &m2).unwrap();
        assert_eq!(got.get(&HalfPos::above(0)), Some(&2));
        assert_eq!(got.get(&HalfPos::above(1)), Some(&1));
        assert_eq!(got.len(), 2);
        assert_eq!(a_inverse_factorization(&m2, &m1), None);
    }

    #[test]
    fn half_positions() {
        assert_eq!(HalfPos::above(0).to_string(), "0+1/2");
        assert_eq!(HalfPos::above(-1).to_string(), "-1+1/2");
        assert_eq!(HalfPos::above(-1).doubled(), -1);
        assert_eq!(HalfPos::above(-3).floor(), -3);
    }

    #[test]
    fn display_and_json() {
        let m = mono(&[(-1, 2), (0, 1), (10, -1)]);
        assert_eq!(m.to_string(), "Y[-1]^2*Y[0]*Y[10]^-1");
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"-1":2,"0":1,"10":-1}"#);
        let back: Monomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
