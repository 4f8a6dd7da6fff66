//! Equioriented `A_n` quiver `1 -> 2 -> ... -> n`: interval modules, their
//! Hom/Ext dimensions, rigid decompositions, and orbit data of varieties of
//! complexes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qstrings::kij_multiplicities;

/// Indecomposable `U[i, j]` with dimension vector `e_i + ... + e_j`
/// (1-based vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub i: usize,
    pub j: usize,
}

impl Interval {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j {
            return Err(Error::InvalidInterval { i, j });
        }
        Ok(Self { i, j })
    }

    /// Dimension vector over `n` vertices.
    pub fn dim_vector(&self, n: usize) -> Vec<i64> {
        (1..=n).map(|v| i64::from(self.i <= v && v <= self.j)).collect()
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "U[{},{}]", self.i, self.j)
    }
}

/// `<d, e> = sum_i d_i e_i - sum_i d_i e_{i+1}`.
pub fn euler_form(d: &[i64], e: &[i64]) -> Result<i64> {
    if d.len() != e.len() {
        return Err(Error::LengthMismatch { expected: d.len(), got: e.len() });
    }
    let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    let arrows: i64 = d.iter().zip(e.iter().skip(1)).map(|(a, b)| a * b).sum();
    Ok(diag - arrows)
}

/// `dim Ext^1(U[i,j], U[r,s])`: one exactly when `i+1 <= r <= j+1 <= s`.
pub fn ext_dim(u: &Interval, v: &Interval) -> u64 {
    u64::from(u.i < v.i && v.i <= u.j + 1 && u.j < v.j)
}

/// `dim Hom(u, v)`, recovered as Euler form plus Ext.
pub fn hom_dim(u: &Interval, v: &Interval) -> Result<u64> {
    let n = u.j.max(v.j);
    let value = euler_form(&u.dim_vector(n), &v.dim_vector(n))? + ext_dim(u, v) as i64;
    match value {
        0 | 1 => Ok(value as u64),
        _ => Err(Error::Consistency(format!("dim Hom({u}, {v}) = {value} is not 0 or 1"))),
    }
}

/// The rigid representation of dimension vector `d`, as a sorted multiset of
/// intervals. The Ext-vanishing between all summands is verified.
pub fn rigid_decomposition(d: &[u64]) -> Result<Vec<Interval>> {
    let mut out = Vec::new();
    for ((i, j), k) in kij_multiplicities(d) {
        for _ in 0..k {
            out.push(Interval { i, j });
        }
    }
    let mut dim = vec![0u64; d.len()];
    for u in &out {
        for x in &mut dim[u.i - 1..u.j] {
            *x += 1;
        }
    }
    if dim != d {
        return Err(Error::Consistency(format!("summands have dimension {dim:?}, expected {d:?}")));
    }
    let mut types = out.clone();
    types.dedup();
    for u in &types {
        for v in &types {
            if ext_dim(u, v) != 0 {
                return Err(Error::Consistency(format!("Ext^1({u}, {v}) != 0 in rigid decomposition of {d:?}")));
            }
        }
    }
    Ok(out)
}

/// A stratum `O(r)` of the variety of complexes with dimension vector `w`,
/// with its Betti numbers `h_i = w_i - r_{i-1} - r_i` and their support
/// `omega` (indices are 0-based, `r_{-1} = r_{n-1} = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StratumRepr")]
pub struct ComplexStratum {
    w: Vec<u64>,
    r: Vec<u64>,
    h: Vec<u64>,
    omega: Vec<usize>,
}

#[derive(Deserialize)]
struct StratumRepr {
    w: Vec<u64>,
    r: Vec<u64>,
    #[serde(default)]
    h: Option<Vec<u64>>,
    #[serde(default)]
    omega: Option<Vec<usize>>,
}

impl TryFrom<StratumRepr> for ComplexStratum {
    type Error = Error;

    fn try_from(repr: StratumRepr) -> Result<Self> {
        let s = stratum(&repr.w, &repr.r)?;
        if repr.h.as_ref().is_some_and(|h| *h != s.h) || repr.omega.as_ref().is_some_and(|o| *o != s.omega) {
            return Err(Error::InvalidArgument("stored h/omega disagree with w and r".into()));
        }
        Ok(s)
    }
}

/// Rank tuple entry with the boundary conventions.
fn padded(r: &[u64], i: isize) -> u64 {
    if i < 0 {
        0
    } else {
        r.get(i as usize).copied().unwrap_or(0)
    }
}

/// Builds the stratum for dimension vector `w` and rank tuple `r`
/// (`r.len() == w.len() - 1`).
pub fn stratum(w: &[u64], r: &[u64]) -> Result<ComplexStratum> {
    let expected = w.len().saturating_sub(1);
    if r.len() != expected {
        return Err(Error::LengthMismatch { expected, got: r.len() });
    }
    let mut h = Vec::with_capacity(w.len());
    for (i, &wi) in w.iter().enumerate() {
        let used = padded(r, i as isize - 1) + padded(r, i as isize);
        if used > wi {
            return Err(Error::NotRankTuple(format!(
                "r_{} + r_{} = {used} > w_{i} = {wi}",
                i as isize - 1,
                i
            )));
        }
        h.push(wi - used);
    }
    let omega = h.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect();
    Ok(ComplexStratum { w: w.to_vec(), r: r.to_vec(), h, omega })
}

impl ComplexStratum {
    pub fn w(&self) -> &[u64] {
        &self.w
    }

    pub fn r(&self) -> &[u64] {
        &self.r
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }

    pub fn omega(&self) -> &[usize] {
        &self.omega
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    /// `r_i` with `r_{-1} = r_{n-1} = 0`.
    pub fn rank(&self, i: isize) -> u64 {
        padded(&self.r, i)
    }

    pub fn in_omega(&self, i: usize) -> bool {
        self.omega.binary_search(&i).is_ok()
    }
}

/// No two consecutive indices in `omega`; equivalently the orbit closure is
/// an irreducible component.
pub fn is_sparse(s: &ComplexStratum) -> bool {
    s.omega.windows(2).all(|p| p[1] != p[0] + 1)
}

/// `O(r1)` lies in the closure of `O(r2)`.
pub fn degeneration_leq(r1: &[u64], r2: &[u64]) -> Result<bool> {
    if r1.len() != r2.len() {
        return Err(Error::LengthMismatch { expected: r1.len(), got: r2.len() });
    }
    Ok(r1.iter().zip(r2).all(|(a, b)| a <= b))
}

/// `dim O(r) = dim G - dim End(M)` for the complex
/// `M = ⊕ U[i+1,i+2]^{r_i} ⊕ ⊕ U[i+1,i+1]^{h_i}`.
pub fn orbit_dim(s: &ComplexStratum) -> Result<u64> {
    let mut summands: BTreeMap<Interval, u64> = BTreeMap::new();
    for (i, &ri) in s.r.iter().enumerate() {
        if ri > 0 {
            summands.insert(Interval { i: i + 1, j: i + 2 }, ri);
        }
    }
    for (i, &hi) in s.h.iter().enumerate() {
        if hi > 0 {
            summands.insert(Interval { i: i + 1, j: i + 1 }, hi);
        }
    }
    let group: u64 = s.w.iter().map(|x| x * x).sum();
    let mut end = 0u64;
    for (u, mu) in &summands {
        for (v, mv) in &summands {
            end += mu * mv * hom_dim(u, v)?;
        }
    }
    group
        .checked_sub(end)
        .ok_or_else(|| Error::Consistency(format!("dim End = {end} exceeds dim G = {group}")))
}
