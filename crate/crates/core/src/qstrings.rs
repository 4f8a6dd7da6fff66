//! q-strings, Drinfeld data, and the decomposition of a multiset of spectral
//! exponents into strings that are pairwise in general position.
//!
//! Everything lives on a single `q^2`-coset: the exponent `k` stands for the
//! point `a q^{2k}`, so a string `S(n, k)` is the integer interval
//! `{k, ..., k + n - 1}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Spectral};

/// Default bound on the total multiplicity accepted by the exhaustive
/// decomposition search.
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 10;

/// Finite multiset of spectral exponents: the zeros of a Drinfeld polynomial
/// `prod_k (1 - a q^{2k} u)^{mult(k)}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DrinfeldData {
    mult: BTreeMap<Spectral, u64>,
}

impl DrinfeldData {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sums repeated exponents; rejects zero multiplicities.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Spectral, u64)>,
    {
        let mut dd = Self::new();
        for (k, m) in pairs {
            if m == 0 {
                return Err(Error::InvalidArgument(format!("zero multiplicity at exponent {k}")));
            }
            dd.insert(k, m)?;
        }
        Ok(dd)
    }

    /// Drinfeld data whose window starts at `base` and reads `d` left to right.
    pub fn from_window(base: Spectral, d: &[u64]) -> Self {
        Self {
            mult: d
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, &m)| (base + i as Spectral, m))
                .collect(),
        }
    }

    /// Reads a dominant monomial `prod Y_k^{e_k}` as the multiset `{k: e_k}`.
    pub fn from_monomial(m: &Monomial) -> Result<Self> {
        if !m.is_dominant() {
            return Err(Error::InvalidArgument(format!("monomial {m} is not dominant")));
        }
        Ok(Self {
            mult: m.factors().iter().map(|&(k, e)| (k, e as u64)).collect(),
        })
    }

    pub fn insert(&mut self, k: Spectral, m: u64) -> Result<()> {
        if m == 0 {
            return Ok(());
        }
        let slot = self.mult.entry(k).or_insert(0);
        *slot = slot.checked_add(m).ok_or(Error::Overflow("multiplicity"))?;
        Ok(())
    }

    pub fn mult(&self, k: Spectral) -> u64 {
        self.mult.get(&k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Degree of the Drinfeld polynomial.
    pub fn total(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Spectral, u64)> + '_ {
        self.mult.iter().map(|(&k, &m)| (k, m))
    }

    /// Smallest and largest exponent with nonzero multiplicity.
    pub fn window(&self) -> Option<(Spectral, Spectral)> {
        Some((*self.mult.keys().next()?, *self.mult.keys().next_back()?))
    }

    pub fn window_len(&self) -> usize {
        self.window().map_or(0, |(lo, hi)| (hi - lo + 1) as usize)
    }

    /// Multiplicities over the support window, left to right.
    pub fn dimension_vector(&self) -> Vec<u64> {
        match self.window() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..=hi).map(|k| self.mult(k)).collect(),
        }
    }

    pub fn shifted(&self, shift: Spectral) -> Self {
        Self {
            mult: self.mult.iter().map(|(&k, &m)| (k + shift, m)).collect(),
        }
    }
}

impl fmt::Display for DrinfeldData {
    /// Same syntax `parse_drinfeld` accepts; the empty multiset prints as `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return f.write_str("{}");
        }
        for (idx, (k, m)) in self.mult.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}:{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DrinfeldData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Drinfeld({self})")
    }
}

struct ZerosRepr<'a>(&'a BTreeMap<Spectral, u64>);

impl Serialize for ZerosRepr<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, m) in self.0 {
            map.serialize_entry(&k.to_string(), m)?;
        }
        map.end()
    }
}

impl Serialize for DrinfeldData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("zeros", &ZerosRepr(&self.mult))?;
        map.end()
    }
}

struct ZerosOwned(Vec<(Spectral, u64)>);

impl<'de> Deserialize<'de> for ZerosOwned {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ZerosOwned;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to positive multiplicities")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<ZerosOwned, A::Error> {
                let mut out = Vec::new();
                while let Some((key, m)) = access.next_entry::<String, u64>()? {
                    let k = key
                        .trim()
                        .parse()
                        .map_err(|_| serde::de::Error::custom(format!("bad exponent {key:?}")))?;
                    out.push((k, m));
                }
                Ok(ZerosOwned(out))
            }
        }
        deserializer.deserialize_map(V)
    }
}

#[derive(Deserialize)]
struct DrinfeldRepr {
    zeros: ZerosOwned,
}

impl<'de> Deserialize<'de> for DrinfeldData {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DrinfeldRepr::deserialize(deserializer)?;
        DrinfeldData::from_pairs(repr.zeros.0).map_err(serde::de::Error::custom)
    }
}

/// The q-string `S(len, base) = {base, base + 1, ..., base + len - 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QString {
    pub base: Spectral,
    pub len: u32,
}

impl QString {
    pub fn new(len: u32, base: Spectral) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidArgument("q-string length must be positive".into()));
        }
        Ok(Self { base, len })
    }

    /// Last exponent of the string.
    pub fn last(&self) -> Spectral {
        self.base + self.len as Spectral - 1
    }

    pub fn contains(&self, other: &QString) -> bool {
        self.base <= other.base && other.last() <= self.last()
    }

    pub fn exponents(&self) -> impl Iterator<Item = Spectral> {
        self.base..=self.last()
    }

    pub fn shifted(&self, shift: Spectral) -> Self {
        Self { base: self.base + shift, len: self.len }
    }
}

impl fmt::Debug for QString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({}, {})", self.len, self.base)
    }
}

/// Two strings are in special position when neither contains the other and
/// their union is again a string; otherwise they are in general position.
pub fn in_general_position(s: &QString, t: &QString) -> bool {
    if s.contains(t) || t.contains(s) {
        return true;
    }
    let union_is_interval = s.base.max(t.base) <= s.last().min(t.last()) + 1;
    !union_is_interval
}

/// Special-position test through the ratio of the base points: `S(n, x)` and
/// `S(m, y)` are special iff `y - x` lies in
/// `{n - p + 1} ∪ {-(m - p + 1)}` for `1 <= p <= min(m, n)`.
pub fn special_position_by_ratio(s: &QString, t: &QString) -> bool {
    let (n, m) = (s.len as i64, t.len as i64);
    let diff = t.base - s.base;
    (1..=n.min(m)).any(|p| diff == n - p + 1 || diff == -(m - p + 1))
}

/// Piecewise-linear multiplicities `k_ij` (`1 <= i <= j <= n`) of the
/// intervals in the rigid decomposition of the dimension vector `d`, with
/// `d_0 = d_{n+1} = 0`.
pub fn kij_multiplicities(d: &[u64]) -> BTreeMap<(usize, usize), u64> {
    let n = d.len();
    let at = |k: usize| -> i128 {
        if k == 0 || k > n {
            0
        } else {
            d[k - 1] as i128
        }
    };
    let mut out = BTreeMap::new();
    for i in 1..=n {
        let mut inner_min = i128::MAX;
        for j in i..=n {
            inner_min = inner_min.min(at(j));
            let k = (inner_min - at(i - 1).max(at(j + 1))).max(0);
            out.insert((i, j), k as u64);
        }
    }
    out
}

/// Multiset of q-strings, kept sorted by `(base, len)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct StringDecomposition {
    parts: Vec<QString>,
}

impl StringDecomposition {
    pub fn from_parts(mut parts: Vec<QString>) -> Self {
        parts.sort();
        Self { parts }
    }

    pub fn parts(&self) -> &[QString] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(string, count)` pairs in canonical order.
    pub fn grouped(&self) -> Vec<(QString, u64)> {
        let mut out: Vec<(QString, u64)> = Vec::new();
        for &s in &self.parts {
            match out.last_mut() {
                Some((last, c)) if *last == s => *c += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self) -> DrinfeldData {
        let mut dd = DrinfeldData::new();
        for s in &self.parts {
            for k in s.exponents() {
                // cannot overflow: bounded by the number of parts
                dd.insert(k, 1).expect("multiplicity overflow");
            }
        }
        dd
    }

    pub fn is_pairwise_general(&self) -> bool {
        let p = &self.parts;
        (0..p.len()).all(|a| (a + 1..p.len()).all(|b| in_general_position(&p[a], &p[b])))
    }

    pub fn shifted(&self, shift: Spectral) -> Self {
        Self::from_parts(self.parts.iter().map(|s| s.shifted(shift)).collect())
    }
}

impl fmt::Debug for StringDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.parts.iter()).finish()
    }
}

impl fmt::Display for StringDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("(empty)");
        }
        for (idx, (s, c)) in self.grouped().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if c > 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "S({}, {})", s.len, s.base)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    base: Spectral,
    len: u32,
    count: u64,
}

impl Serialize for StringDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.grouped().into_iter().map(|(s, count)| GroupRepr {
            base: s.base,
            len: s.len,
            count,
        }))
    }
}

impl<'de> Deserialize<'de> for StringDecomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let groups = Vec::<GroupRepr>::deserialize(deserializer)?;
        let mut parts = Vec::new();
        for g in groups {
            let s = QString::new(g.len, g.base).map_err(serde::de::Error::custom)?;
            parts.extend(std::iter::repeat_n(s, g.count as usize));
        }
        Ok(Self::from_parts(parts))
    }
}

/// Decomposes `dd` into pairwise-general strings via [`kij_multiplicities`]
/// on its support window.
pub fn decompose(dd: &DrinfeldData) -> StringDecomposition {
    let Some((lo, _)) = dd.window() else {
        return StringDecomposition::default();
    };
    let d = dd.dimension_vector();
    let mut parts = Vec::new();
    for ((i, j), k) in kij_multiplicities(&d) {
        let s = QString {
            base: lo + i as Spectral - 1,
            len: (j - i + 1) as u32,
        };
        parts.extend(std::iter::repeat_n(s, k as usize));
    }
    StringDecomposition::from_parts(parts)
}

/// Exhaustive search over all ways of writing `dd` as a union of strings,
/// keeping those whose parts are pairwise in general position.
///
/// Fails unless exactly one such decomposition exists.
pub fn decompose_bruteforce(dd: &DrinfeldData, cap: u64) -> Result<StringDecomposition> {
    let total = dd.total();
    if total > cap {
        return Err(Error::CapExceeded { total, cap });
    }
    let mut remaining: BTreeMap<Spectral, u64> = dd.iter().collect();
    let mut stack = Vec::new();
    let mut found = Vec::new();
    enumerate_partitions(&mut remaining, None, &mut stack, &mut found);
    let valid: Vec<StringDecomposition> = found
        .into_iter()
        .map(StringDecomposition::from_parts)
        .filter(StringDecomposition::is_pairwise_general)
        .collect();
    match valid.len() {
        1 => Ok(valid.into_iter().next().expect("one element")),
        0 => Err(Error::Consistency(format!("no pairwise-general string decomposition of {dd}"))),
        n => Err(Error::Consistency(format!(
            "{n} pairwise-general string decompositions of {dd}: {:?}",
            valid
        ))),
    }
}

/// Each partition is produced exactly once: the string containing the
/// smallest remaining exponent is extracted first, and strings sharing a base
/// are extracted in non-increasing length.
fn enumerate_partitions(
    remaining: &mut BTreeMap<Spectral, u64>,
    last: Option<QString>,
    stack: &mut Vec<QString>,
    found: &mut Vec<Vec<QString>>,
) {
    let Some(&x) = remaining.keys().next() else {
        found.push(stack.clone());
        return;
    };
    let mut max_len = 0u32;
    while remaining.contains_key(&(x + max_len as Spectral)) {
        max_len += 1;
    }
    if let Some(prev) = last.filter(|p| p.base == x) {
        max_len = max_len.min(prev.len);
    }
    for len in 1..=max_len {
        let s = QString { base: x, len };
        for k in s.exponents() {
            let m = remaining.get_mut(&k).expect("present");
            *m -= 1;
            if *m == 0 {
                remaining.remove(&k);
            }
        }
        stack.push(s);
        enumerate_partitions(remaining, Some(s), stack, found);
        stack.pop();
        for k in s.exponents() {
            *remaining.entry(k).or_insert(0) += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(len: u32, base: i64) -> QString {
        QString::new(len, base).unwrap()
    }

    fn dd(pairs: &[(i64, u64)]) -> DrinfeldData {
        DrinfeldData::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn position_examples() {
        assert!(!in_general_position(&s(2, 0), &s(2, 1)));
        assert!(in_general_position(&s(1, 0), &s(1, 0)));
        assert!(in_general_position(&s(1, 0), &s(1, 5)));
        // adjacent singletons form a string
        assert!(!in_general_position(&s(1, 0), &s(1, 1)));
        assert!(special_position_by_ratio(&s(2, 0), &s(2, 1)));
        assert!(!special_position_by_ratio(&s(1, 0), &s(1, 0)));
    }

    #[test]
    fn ratio_matches_set_check_exhaustively() {
        for n in 1..=6 {
            for m in 1..=6 {
                for off in -8..=8 {
                    let (a, b) = (s(n, 0), s(m, off));
                    assert_eq!(
                        special_position_by_ratio(&a, &b),
                        !in_general_position(&a, &b),
                        "{a:?} {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn kij_examples() {
        let k = kij_multiplicities(&[1, 1]);
        assert_eq!(k[&(1, 2)], 1);
        assert_eq!(k[&(1, 1)] + k[&(2, 2)], 0);

        let k = kij_multiplicities(&[2, 1]);
        assert_eq!((k[&(1, 1)], k[&(1, 2)], k[&(2, 2)]), (1, 1, 0));

        assert!(kij_multiplicities(&[0, 0, 0]).values().all(|&v| v == 0));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&dd(&[(0, 1), (1, 1)])).parts(), &[s(2, 0)]);
        assert_eq!(decompose(&dd(&[(0, 2), (1, 1)])).parts(), &[s(1, 0), s(2, 0)]);
        assert!(decompose(&DrinfeldData::new()).is_empty());
        // gap inside the window
        assert_eq!(decompose(&dd(&[(3, 1), (5, 1)])).parts(), &[s(1, 3), s(1, 5)]);
    }

    #[test]
    fn bruteforce_examples() {
        let cap = DEFAULT_BRUTEFORCE_CAP;
        assert_eq!(decompose_bruteforce(&dd(&[(0, 1), (1, 1)]), cap).unwrap().parts(), &[s(2, 0)]);
        assert_eq!(decompose_bruteforce(&dd(&[(0, 2)]), cap).unwrap().parts(), &[s(1, 0), s(1, 0)]);
        assert!(decompose_bruteforce(&DrinfeldData::new(), cap).unwrap().is_empty());
        assert!(matches!(
            decompose_bruteforce(&dd(&[(0, 11)]), cap),
            Err(Error::CapExceeded { total: 11, cap: 10 })
        ));
    }

    #[test]
    fn partition_enumeration_has_no_duplicates() {
        let mut remaining: BTreeMap<i64, u64> = [(0, 2), (1, 1)].into_iter().collect();
        let mut found = Vec::new();
        enumerate_partitions(&mut remaining, None, &mut Vec::new(), &mut found);
        // {0}{0}{1}, {0}{0,1}
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn drinfeld_basics() {
        let d = dd(&[(1, 3), (0, 1), (1, 1)]);
        assert_eq!(d.to_string(), "0:1,1:4");
        assert_eq!(d.total(), 5);
        assert_eq!(d.dimension_vector(), vec![1, 4]);
        assert!(DrinfeldData::from_pairs([(0, 0)]).is_err());
        assert_eq!(DrinfeldData::new().to_string(), "{}");
        assert_eq!(DrinfeldData::from_window(-1, &[2, 0, 1]), dd(&[(-1, 2), (1, 1)]));
    }

    #[test]
    fn json_shapes() {
        let d = dd(&[(-2, 1), (10, 2), (3, 1)]);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"zeros":{"-2":1,"3":1,"10":2}}"#);
        assert_eq!(serde_json::from_str::<DrinfeldData>(&json).unwrap(), d);
        assert!(serde_json::from_str::<DrinfeldData>(r#"{"zeros":{"0":0}}"#).is_err());

        let sd = StringDecomposition::from_parts(vec![s(1, 0), s(2, 0), s(1, 0)]);
        let json = serde_json::to_string(&sd).unwrap();
        assert_eq!(json, r#"[{"base":0,"len":1,"count":2},{"base":0,"len":2,"count":1}]"#);
        assert_eq!(serde_json::from_str::<StringDecomposition>(&json).unwrap(), sd);
    }
}
