use serde::Serialize;

use super::closed::advance;
use crate::error::{Error, Result};
use crate::polyring::{gauss_binom_t, TPoly};
use crate::quiver::{is_sparse, stratum, ComplexStratum};

/// A point of the stratum `O(r - k)` inside the orbit closure of `O(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StalkQuery {
    stratum: ComplexStratum,
    k: Vec<u64>,
}

impl StalkQuery {
    pub fn new(stratum: ComplexStratum, k: Vec<u64>) -> Result<Self> {
        if k.len() != stratum.r().len() {
            return Err(Error::InvalidStalkPoint(format!(
                "k has {} entries, r has {}",
                k.len(),
                stratum.r().len()
            )));
        }
        if let Some(i) = (0..k.len()).find(|&i| k[i] > stratum.r()[i]) {
            return Err(Error::InvalidStalkPoint(format!(
                "k_{i} = {} exceeds r_{i} = {}",
                k[i],
                stratum.r()[i]
            )));
        }
        Ok(Self { stratum, k })
    }

    pub fn stratum(&self) -> &ComplexStratum {
        &self.stratum
    }

    pub fn k(&self) -> &[u64] {
        &self.k
    }

    /// The stratum `O(r - k)` containing the point.
    pub fn point_stratum(&self) -> Result<ComplexStratum> {
        let r: Vec<u64> = self.stratum.r().iter().zip(&self.k).map(|(r, k)| r - k).collect();
        stratum(self.stratum.w(), &r)
    }

    fn k_at(&self, i: isize) -> u64 {
        if i < 0 {
            0
        } else {
            self.k.get(i as usize).copied().unwrap_or(0)
        }
    }
}

/// Poincaré polynomial (in `t` = degree/2) of the stalk of the IC complex
/// of the closure of `O(r)` at a point of `O(r - k)`, for sparse `Omega(r)`:
///
/// `sum_{0 <= a_i <= min(k_{i-1}, k_i), i in Omega} t^{sum (h_i + a_i) a_i}
///   prod_{i in Omega} (k_i choose k_i - a_i)_t (k_{i-1} choose a_i)_t
///   prod_{i not in Omega} (k_{i-1} + k_i choose k_i)_t`.
pub fn ic_stalk_poly(q: &StalkQuery) -> Result<TPoly> {
    let s = q.stratum();
    if !is_sparse(s) {
        return Err(Error::NotSparse(s.omega().to_vec()));
    }
    let n = s.n();
    let k = |i: usize| q.k_at(i as isize);
    let below = |i: usize| q.k_at(i as isize - 1);
    let gb = |a: u64, b: u64| gauss_binom_t(to_u32(a)?, to_u32(b)?);

    let mut outside = TPoly::one();
    for i in (0..n).filter(|&i| !s.in_omega(i)) {
        outside = outside.checked_mul(&gb(below(i) + k(i), k(i))?)?;
    }

    let omega = s.omega();
    let bounds: Vec<u64> = omega.iter().map(|&i| below(i).min(k(i))).collect();
    let mut a = vec![0u64; omega.len()];
    let mut total = TPoly::zero();
    loop {
        let mut term = outside.clone();
        let mut power: u64 = 0;
        for (slot, &i) in omega.iter().enumerate() {
            let ai = a[slot];
            power += (s.h()[i] + ai) * ai;
            term = term.checked_mul(&gb(k(i), k(i) - ai)?)?;
            term = term.checked_mul(&gb(below(i), ai)?)?;
        }
        let power = usize::try_from(power).map_err(|_| Error::Overflow("stalk degree"))?;
        total = total.checked_add(&term.shift(power))?;
        if !advance(&mut a, &bounds) {
            break;
        }
    }
    Ok(total)
}

fn to_u32(x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Overflow("Gaussian binomial argument"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn query(w: &[u64], r: &[u64], k: &[u64]) -> StalkQuery {
        StalkQuery::new(stratum(w, r).unwrap(), k.to_vec()).unwrap()
    }

    #[test]
    fn open_stratum_is_one() {
        assert_eq!(ic_stalk_poly(&query(&[1, 2, 1], &[1, 1], &[0, 0])).unwrap(), TPoly::one());
        assert_eq!(ic_stalk_poly(&query(&[2, 3, 1], &[2, 1], &[0, 0])).unwrap(), TPoly::one());
    }

    #[test]
    fn small_resolution_fiber() {
        let p = ic_stalk_poly(&query(&[1, 2, 1], &[1, 1], &[1, 1])).unwrap();
        assert_eq!(p.coeffs(), &[1, 1]);
    }

    #[test]
    fn worked_example_stalk() {
        let p = ic_stalk_poly(&query(&[1, 3], &[1], &[1])).unwrap();
        assert_eq!(p, TPoly::one());
    }

    #[test]
    fn errors() {
        let s = stratum(&[2, 2], &[1]).unwrap();
        assert!(matches!(
            ic_stalk_poly(&StalkQuery::new(s, vec![1]).unwrap()),
            Err(Error::NotSparse(_))
        ));
        let s = stratum(&[1, 2, 1], &[1, 1]).unwrap();
        assert!(matches!(StalkQuery::new(s.clone(), vec![2, 0]), Err(Error::InvalidStalkPoint(_))));
        assert!(matches!(StalkQuery::new(s, vec![1]), Err(Error::InvalidStalkPoint(_))));
    }

    #[test]
    fn point_stratum() {
        let q = query(&[1, 2, 1], &[1, 1], &[1, 0]);
        assert_eq!(q.point_stratum().unwrap().r(), &[0, 1]);
    }
}
