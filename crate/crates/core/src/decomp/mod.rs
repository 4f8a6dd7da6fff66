//! Decomposition numbers `[M(pi) : V(pitilde)]` of standard modules.
//!
//! Three routes are provided: the closed binomial formula for sparse rank
//! data ([`multiplicity_closed`]), the intersection-cohomology stalk
//! polynomials it comes from ([`ic_stalk_poly`]), and an independent oracle
//! that peels simple characters off the standard character
//! ([`multiplicity_oracle`], [`decomposition_row`]).

mod closed;
mod oracle;
mod stalk;

pub use closed::multiplicity_closed;
pub use oracle::{
    decomposition_row, decomposition_row_with, multiplicity_oracle, multiplicity_oracle_with, OracleOptions, TieBreak,
    DEFAULT_ORACLE_CAP,
};
pub use stalk::{ic_stalk_poly, StalkQuery};

use crate::qstrings::DrinfeldData;
use crate::quiver::{stratum, ComplexStratum};

/// A pair (standard `pi`, simple `pitilde`) read over the support window of
/// `pi`, translated so that it starts at exponent 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityQuery {
    pub pi: DrinfeldData,
    pub pitilde: DrinfeldData,
}

impl MultiplicityQuery {
    pub fn new(pi: DrinfeldData, pitilde: DrinfeldData) -> Self {
        Self { pi, pitilde }
    }

    /// `(w, h)`: multiplicities of `pi` and `pitilde` over the window of `pi`.
    /// `None` when `pitilde` has a zero outside that window.
    pub fn aligned(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        let w = self.pi.dimension_vector();
        let Some((lo, hi)) = self.pi.window() else {
            return self.pitilde.is_empty().then(|| (Vec::new(), Vec::new()));
        };
        if self.pitilde.iter().any(|(k, _)| k < lo || k > hi) {
            return None;
        }
        let h = (lo..=hi).map(|k| self.pitilde.mult(k)).collect();
        Some((w, h))
    }

    /// The stratum `O(r)` attached to the query, when the rank tuple exists.
    pub fn stratum(&self) -> Option<ComplexStratum> {
        let (w, _) = self.aligned()?;
        let r = rank_tuple(self)?;
        stratum(&w, &r).ok()
    }
}

/// `r_i = sum_{j<=i} (-1)^{i+j} (w_j - h_j)` for `i = 0..n-2`.
///
/// Returns `None` (multiplicity zero) unless every `r_i >= 0`, the last entry
/// closes up as `r_{n-2} = w_{n-1} - h_{n-1}`, and `w, r` form a stratum
/// whose Betti numbers are exactly `h`.
pub fn rank_tuple(q: &MultiplicityQuery) -> Option<Vec<u64>> {
    let (w, h) = q.aligned()?;
    let n = w.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut r: Vec<i128> = Vec::with_capacity(n - 1);
    let mut prev: i128 = 0;
    for i in 0..n - 1 {
        // r_i = (w_i - h_i) - r_{i-1}
        let ri = (w[i] as i128 - h[i] as i128) - prev;
        r.push(ri);
        prev = ri;
    }
    if r.iter().any(|&x| x < 0) {
        return None;
    }
    let last = r.last().copied().unwrap_or(0);
    if last != w[n - 1] as i128 - h[n - 1] as i128 {
        return None;
    }
    let r: Vec<u64> = r.into_iter().map(|x| x as u64).collect();
    let s = stratum(&w, &r).ok()?;
    (s.h() == h.as_slice()).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(pairs: &[(i64, u64)]) -> DrinfeldData {
        DrinfeldData::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn rank_tuple_examples() {
        let q = MultiplicityQuery::new(dd(&[(0, 1), (1, 3)]), dd(&[(1, 2)]));
        assert_eq!(rank_tuple(&q), Some(vec![1]));

        let pi = dd(&[(0, 2), (1, 1), (3, 1)]);
        let q = MultiplicityQuery::new(pi.clone(), pi);
        assert_eq!(rank_tuple(&q), Some(vec![0, 0, 0]));

        let q = MultiplicityQuery::new(dd(&[(0, 1), (1, 1)]), dd(&[(0, 1), (1, 1)]));
        assert_eq!(rank_tuple(&q), Some(vec![0]));
    }

    #[test]
    fn rank_tuple_rejections() {
        // negative entry
        let q = MultiplicityQuery::new(dd(&[(0, 1), (1, 2), (2, 1)]), dd(&[(1, 2)]));
        assert_eq!(rank_tuple(&q), None);
        // closing condition fails
        let q = MultiplicityQuery::new(dd(&[(0, 1), (1, 2), (2, 1)]), dd(&[(1, 1)]));
        assert_eq!(rank_tuple(&q), None);
        // pitilde outside the window of pi
        let q = MultiplicityQuery::new(dd(&[(0, 1), (1, 1)]), dd(&[(2, 1)]));
        assert_eq!(rank_tuple(&q), None);
        // single vertex: only pitilde = pi survives
        let q = MultiplicityQuery::new(dd(&[(4, 2)]), dd(&[(4, 1)]));
        assert_eq!(rank_tuple(&q), None);
        let q = MultiplicityQuery::new(dd(&[(4, 2)]), dd(&[(4, 2)]));
        assert_eq!(rank_tuple(&q), Some(vec![]));
    }

    #[test]
    fn trivial_query() {
        let q = MultiplicityQuery::new(DrinfeldData::new(), DrinfeldData::new());
        assert_eq!(rank_tuple(&q), Some(vec![]));
        let q = MultiplicityQuery::new(DrinfeldData::new(), dd(&[(0, 1)]));
        assert_eq!(rank_tuple(&q), None);
    }

    #[test]
    fn window_translation_is_irrelevant() {
        let q = MultiplicityQuery::new(dd(&[(5, 1), (6, 3)]), dd(&[(6, 2)]));
        assert_eq!(rank_tuple(&q), Some(vec![1]));
    }
}
