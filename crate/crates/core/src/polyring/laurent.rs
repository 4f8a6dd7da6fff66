use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial with `i64` coefficients in the variables `Y_k`.
///
/// Terms are kept in canonical form: no zero coefficients, one entry per
/// monomial, iterated in monomial order. All arithmetic is checked; the
/// `checked_*` methods report overflow and the operator impls panic on it.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Sums possibly repeated terms into canonical form.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(Error::Overflow("coefficient addition"))?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                c.checked_neg()
                    .map(|c| (m.clone(), c))
                    .ok_or(Error::Overflow("coefficient negation"))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    /// Multiplies every coefficient by `c`.
    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        if c == 0 {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, &x)| {
                x.checked_mul(c)
                    .map(|x| (m.clone(), x))
                    .ok_or(Error::Overflow("coefficient scaling"))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("coefficient multiplication"))?;
                out.add_term(m1.checked_mul(m2)?, c)?;
            }
        }
        Ok(out)
    }

    /// `self^e` by repeated squaring; `p^0 = 1`.
    pub fn checked_pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplies every monomial by `m`.
    pub fn checked_mul_monomial(&self, m: &Monomial) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(x, &c)| Ok((x.checked_mul(m)?, c)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    /// Value at `Y_k = 1` for all `k`; for a q-character this is the
    /// dimension of the module.
    pub fn dimension(&self) -> i128 {
        self.terms.values().map(|&c| c as i128).sum()
    }

    /// Terms whose monomial has only nonnegative exponents, in canonical order.
    pub fn dominant_monomials(&self) -> Vec<(Monomial, i64)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_dominant())
            .map(|(m, &c)| (m.clone(), c))
            .collect()
    }

    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, &c)| (m.shifted(shift), c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (idx, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    monomial: Monomial,
    coeff: i64,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(m, &c)| TermRepr {
            monomial: m.clone(),
            coeff: c,
        }))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        LaurentPoly::from_terms(terms.into_iter().map(|t| (t.monomial, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("LaurentPoly arithmetic overflow")
            }
        }

        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.checked_neg().expect("LaurentPoly arithmetic overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(k: i64, e: i64) -> LaurentPoly {
        LaurentPoly::from_monomial(Monomial::var_pow(k, e))
    }

    fn mono(f: &[(i64, i64)]) -> Monomial {
        Monomial::from_factors(f.iter().copied()).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = y(0, 1);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        let p = &y(0, 1) + &y(1, -1);
        let sum = &p + &y(1, -1);
        assert_eq!(sum.coeff(&Monomial::var(0)), 1);
        assert_eq!(sum.coeff(&Monomial::var_pow(1, -1)), 2);
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn product_of_two_fundamentals() {
        let p = &y(0, 1) + &y(1, -1);
        let q = &y(1, 1) + &y(2, -1);
        let expected = LaurentPoly::from_terms([
            (mono(&[(0, 1), (1, 1)]), 1),
            (Monomial::one(), 1),
            (mono(&[(0, 1), (2, -1)]), 1),
            (mono(&[(1, -1), (2, -1)]), 1),
        ])
        .unwrap();
        assert_eq!(&p * &q, expected);
        assert_eq!(expected.dimension(), 4);
        assert_eq!(
            expected.dominant_monomials(),
            vec![(Monomial::one(), 1), (mono(&[(0, 1), (1, 1)]), 1)]
        );
    }

    #[test]
    fn powers() {
        assert_eq!(y(0, 1).checked_pow(3).unwrap(), y(0, 3));
        let p = &y(0, 1) + &y(1, -1);
        let sq = LaurentPoly::from_terms([
            (Monomial::var_pow(0, 2), 1),
            (mono(&[(0, 1), (1, -1)]), 2),
            (Monomial::var_pow(1, -2), 1),
        ])
        .unwrap();
        assert_eq!(p.checked_pow(2).unwrap(), sq);
        assert_eq!(p.checked_pow(0).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn dimension_of_zero_and_dominants() {
        assert_eq!(LaurentPoly::zero().dimension(), 0);
        assert!(y(1, -2).dominant_monomials().is_empty());
        let p = &y(0, 1) + &y(1, -1);
        assert_eq!(p.dominant_monomials(), vec![(Monomial::var(0), 1)]);
    }

    #[test]
    fn overflow_is_detected() {
        let big = LaurentPoly::term(Monomial::one(), i64::MAX);
        assert!(matches!(big.checked_add(&LaurentPoly::one()), Err(Error::Overflow(_))));
        assert!(matches!(big.checked_mul(&LaurentPoly::term(Monomial::one(), 2)), Err(Error::Overflow(_))));
        let two = LaurentPoly::term(Monomial::one(), 2);
        assert!(matches!(two.checked_pow(63), Err(Error::Overflow(_))));
        assert!(LaurentPoly::term(Monomial::one(), i64::MIN).checked_neg().is_err());
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([
            (Monomial::one(), -1),
            (mono(&[(0, 1), (2, -1)]), 3),
            (Monomial::var(0), 1),
        ])
        .unwrap();
        assert_eq!(p.to_string(), "-1 + Y[0] + 3*Y[0]*Y[2]^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let p = &y(0, 1) + &LaurentPoly::term(Monomial::var_pow(1, -1), 2);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"monomial":{"0":1},"coeff":1},{"monomial":{"1":-1},"coeff":2}]"#
        );
    }
}
