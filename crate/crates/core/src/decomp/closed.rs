use super::{rank_tuple, MultiplicityQuery};
use crate::error::{Error, Result};
use crate::polyring::binomial;
use crate::quiver::{is_sparse, stratum};

/// Closed formula for `[M(pi) : V(pitilde)]`.
///
/// * `Some(0)` when the rank tuple does not exist;
/// * `Some(m)` with
///   `m = sum_{0 <= a_i <= min(r_{i-1}, r_i), i in Omega} prod_{i in Omega} C(r_i, r_i - a_i) C(r_{i-1}, a_i) * prod_{i not in Omega} C(r_{i-1} + r_i, r_i)`
///   when `Omega(r)` is sparse;
/// * `None` when `Omega(r)` is not sparse and the formula does not apply.
pub fn multiplicity_closed(q: &MultiplicityQuery) -> Result<Option<u64>> {
    let Some(r) = rank_tuple(q) else {
        return Ok(Some(0));
    };
    let (w, _) = q.aligned().expect("rank tuple implies alignment");
    let s = stratum(&w, &r)?;
    if !is_sparse(&s) {
        return Ok(None);
    }
    let n = s.n();
    let rank = |i: usize| s.rank(i as isize);
    let below = |i: usize| s.rank(i as isize - 1);

    let mut outside: u64 = 1;
    for i in (0..n).filter(|&i| !s.in_omega(i)) {
        outside = checked(outside.checked_mul(binomial(below(i) + rank(i), rank(i))?))?;
    }

    let omega = s.omega();
    let bounds: Vec<u64> = omega.iter().map(|&i| below(i).min(rank(i))).collect();
    let mut a = vec![0u64; omega.len()];
    let mut total: u64 = 0;
    loop {
        let mut term = outside;
        for (slot, &i) in omega.iter().enumerate() {
            let ai = a[slot];
            term = checked(term.checked_mul(binomial(rank(i), rank(i) - ai)?))?;
            term = checked(term.checked_mul(binomial(below(i), ai)?))?;
        }
        total = checked(total.checked_add(term))?;
        if !advance(&mut a, &bounds) {
            break;
        }
    }
    Ok(Some(total))
}

fn checked(x: Option<u64>) -> Result<u64> {
    x.ok_or(Error::Overflow("multiplicity formula"))
}

/// Odometer step over `0 <= a[i] <= bounds[i]`; false once exhausted.
pub(super) fn advance(a: &mut [u64], bounds: &[u64]) -> bool {
    for (x, &b) in a.iter_mut().zip(bounds) {
        if *x < b {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstrings::DrinfeldData;

    fn dd(pairs: &[(i64, u64)]) -> DrinfeldData {
        DrinfeldData::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn closed(pi: &[(i64, u64)], pt: &[(i64, u64)]) -> Option<u64> {
        multiplicity_closed(&MultiplicityQuery::new(dd(pi), dd(pt))).unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(closed(&[(0, 1), (1, 3)], &[(1, 2)]), Some(1));
    }

    #[test]
    fn trivial_constituent_of_a_two_string() {
        assert_eq!(closed(&[(0, 1), (1, 1)], &[]), Some(1));
    }

    #[test]
    fn head_has_multiplicity_one() {
        assert_eq!(closed(&[(0, 2), (2, 1), (4, 3)], &[(0, 2), (2, 1), (4, 3)]), Some(1));
    }

    #[test]
    fn absent_rank_tuple_gives_zero() {
        assert_eq!(closed(&[(0, 1), (1, 2), (2, 1)], &[(1, 2)]), Some(0));
        assert_eq!(closed(&[(0, 1)], &[(3, 1)]), Some(0));
    }

    #[test]
    fn non_sparse_is_not_applicable() {
        // w = (2, 2), h = (1, 1): r = (1), Omega = {0, 1}
        assert_eq!(closed(&[(0, 2), (1, 2)], &[(0, 1), (1, 1)]), None);
    }

    #[test]
    fn middle_binomial() {
        // w = (1, 2, 1), h = 0: r = (1, 1), Omega empty, C(2, 1) = 2
        assert_eq!(closed(&[(0, 1), (1, 2), (2, 1)], &[]), Some(2));
    }

    #[test]
    fn odometer() {
        let mut a = vec![0, 0];
        let mut seen = 1;
        while advance(&mut a, &[1, 2]) {
            seen += 1;
        }
        assert_eq!(seen, 6);
        assert_eq!(a, vec![0, 0]);
        assert!(!advance(&mut [], &[]));
    }
}
