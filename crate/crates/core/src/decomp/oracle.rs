use std::collections::BTreeMap;

use super::MultiplicityQuery;
use crate::characters::{simple_character, standard_character};
use crate::error::{Error, Result};
use crate::polyring::{a_leq, Monomial};
use crate::qstrings::DrinfeldData;

/// Default bound on `deg pi` for the elimination oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 10;

/// Which maximal dominant monomial to eliminate first when several are
/// incomparable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    Lexicographic,
    ReverseLexicographic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub cap: u64,
    pub tie_break: TieBreak,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_ORACLE_CAP, tie_break: TieBreak::default() }
    }
}

/// All simple constituents of `M(pi)` with their multiplicities.
pub fn decomposition_row(pi: &DrinfeldData) -> Result<BTreeMap<DrinfeldData, u64>> {
    decomposition_row_with(pi, &OracleOptions::default())
}

/// Peels simple characters off `chi_q(M(pi))`.
///
/// Each round takes a dominant monomial that is maximal among the dominant
/// monomials still present, records its coefficient `c` as the multiplicity
/// of the corresponding simple module and subtracts `c * chi_q(V)`. Every
/// simple character has a unique maximal monomial with coefficient one, so
/// the recorded numbers are the composition multiplicities.
pub fn decomposition_row_with(pi: &DrinfeldData, opts: &OracleOptions) -> Result<BTreeMap<DrinfeldData, u64>> {
    let total = pi.total();
    if total > opts.cap {
        return Err(Error::CapExceeded { total, cap: opts.cap });
    }
    let mut chi = standard_character(pi)?;
    let budget = chi.dominant_monomials().len();
    let mut row = BTreeMap::new();
    let mut rounds = 0usize;
    while !chi.is_zero() {
        let dominant: Vec<(Monomial, i64)> = chi.dominant_monomials();
        if dominant.is_empty() {
            return Err(Error::Consistency(format!(
                "remainder {chi} of M({pi}) has no dominant monomial"
            )));
        }
        rounds += 1;
        if rounds > budget {
            return Err(Error::Consistency(format!(
                "elimination for M({pi}) exceeded {budget} rounds"
            )));
        }
        let mut maximal = dominant.iter().filter(|(m, _)| {
            !dominant.iter().any(|(other, _)| other != m && a_leq(m, other))
        });
        let (top, c) = match opts.tie_break {
            TieBreak::Lexicographic => maximal.next(),
            TieBreak::ReverseLexicographic => maximal.next_back(),
        }
        .cloned()
        .expect("a finite poset has a maximal element");
        if c <= 0 {
            return Err(Error::Consistency(format!(
                "leading coefficient {c} at {top} while decomposing M({pi})"
            )));
        }
        let simple = DrinfeldData::from_monomial(&top)?;
        chi = chi.checked_sub(&simple_character(&simple)?.checked_scale(c)?)?;
        if row.insert(simple, c as u64).is_some() {
            return Err(Error::Consistency(format!("monomial {top} eliminated twice in M({pi})")));
        }
    }
    Ok(row)
}

/// `[M(pi) : V(pitilde)]` read off the full elimination.
pub fn multiplicity_oracle(q: &MultiplicityQuery) -> Result<u64> {
    multiplicity_oracle_with(q, &OracleOptions::default())
}

pub fn multiplicity_oracle_with(q: &MultiplicityQuery, opts: &OracleOptions) -> Result<u64> {
    let row = decomposition_row_with(&q.pi, opts)?;
    Ok(row.get(&q.pitilde).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(pairs: &[(i64, u64)]) -> DrinfeldData {
        DrinfeldData::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn oracle(pi: &[(i64, u64)], pt: &[(i64, u64)]) -> u64 {
        multiplicity_oracle(&MultiplicityQuery::new(dd(pi), dd(pt))).unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(oracle(&[(0, 1), (1, 3)], &[(1, 2)]), 1);
    }

    #[test]
    fn head_and_trivial_constituent() {
        assert_eq!(oracle(&[(0, 1), (1, 1)], &[(0, 1), (1, 1)]), 1);
        assert_eq!(oracle(&[(0, 1), (1, 1)], &[]), 1);
        assert_eq!(oracle(&[(0, 1), (1, 1)], &[(5, 1)]), 0);
    }

    #[test]
    fn rows() {
        let row = decomposition_row(&dd(&[(0, 1), (1, 1)])).unwrap();
        let expected: BTreeMap<_, _> = [(dd(&[(0, 1), (1, 1)]), 1), (DrinfeldData::new(), 1)].into_iter().collect();
        assert_eq!(row, expected);

        let row = decomposition_row(&dd(&[(0, 1), (5, 1)])).unwrap();
        assert_eq!(row.into_iter().collect::<Vec<_>>(), vec![(dd(&[(0, 1), (5, 1)]), 1)]);

        let row = decomposition_row(&DrinfeldData::new()).unwrap();
        assert_eq!(row.into_iter().collect::<Vec<_>>(), vec![(DrinfeldData::new(), 1)]);
    }

    #[test]
    fn square_of_a_two_string() {
        // (chi(W_2) + 1)^2 = chi(W_2 (x) W_2) + 2 chi(W_2) + 1
        let row = decomposition_row(&dd(&[(0, 2), (1, 2)])).unwrap();
        assert_eq!(row.get(&dd(&[(0, 2), (1, 2)])), Some(&1));
        assert_eq!(row.get(&dd(&[(0, 1), (1, 1)])), Some(&2));
        assert_eq!(row.get(&DrinfeldData::new()), Some(&1));
        assert_eq!(row.len(), 3);
    }

    #[test]
    fn tie_break_does_not_matter() {
        let pi = dd(&[(0, 2), (1, 1), (2, 2), (3, 1)]);
        let fwd = decomposition_row(&pi).unwrap();
        let rev = decomposition_row_with(
            &pi,
            &OracleOptions { tie_break: TieBreak::ReverseLexicographic, ..Default::default() },
        )
        .unwrap();
        assert_eq!(fwd, rev);
    }

    #[test]
    fn cap_is_enforced() {
        let pi = dd(&[(0, 3)]);
        let opts = OracleOptions { cap: 2, ..Default::default() };
        assert!(matches!(decomposition_row_with(&pi, &opts), Err(Error::CapExceeded { total: 3, cap: 2 })));
    }
}
