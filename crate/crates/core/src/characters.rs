//! q-characters of Kirillov–Reshetikhin, simple and standard modules.

use crate::error::Result;
use crate::polyring::{binomial, LaurentPoly, Monomial, Spectral};
use crate::qstrings::{decompose, DrinfeldData};

/// `chi_q(W_{n,k}) = sum_{i=0}^{n} prod_{j=1}^{n-i} Y_{k+j-1} prod_{j=1}^{i} Y_{k+n-i+j}^{-1}`.
///
/// `n = 0` gives the trivial character `1`.
pub fn kr_character(n: u32, k: Spectral) -> Result<LaurentPoly> {
    let n = n as Spectral;
    let terms = (0..=n).map(|i| {
        let ups = (1..=n - i).map(|j| (k + j - 1, 1));
        let downs = (1..=i).map(|j| (k + n - i + j, -1));
        Monomial::from_factors(ups.chain(downs)).map(|m| (m, 1))
    });
    LaurentPoly::from_terms(terms.collect::<Result<Vec<_>>>()?)
}

/// Checks `chi(W_{n,k}) chi(W_{n,k+1}) = chi(W_{n+1,k}) chi(W_{n-1,k+1}) + 1`.
pub fn t_system_holds(n: u32, k: Spectral) -> Result<bool> {
    let lhs = kr_character(n, k)?.checked_mul(&kr_character(n, k + 1)?)?;
    let rhs = kr_character(n + 1, k)?
        .checked_mul(&kr_character(n.saturating_sub(1), k + 1)?)?
        .checked_add(&LaurentPoly::one())?;
    Ok(lhs == rhs)
}

/// Character of the simple module: the product of KR characters over the
/// string decomposition of `dd`.
pub fn simple_character(dd: &DrinfeldData) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for (s, count) in decompose(dd).grouped() {
        let kr = kr_character(s.len, s.base)?;
        acc = acc.checked_mul(&kr.checked_pow(count as u32)?)?;
    }
    Ok(acc)
}

/// Character of the standard module: the product of fundamental characters
/// `Y_k + Y_{k+1}^{-1}` over the zeros of `dd`.
pub fn standard_character(dd: &DrinfeldData) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for (k, m) in dd.iter() {
        acc = acc.checked_mul(&kr_character(1, k)?.checked_pow(m as u32)?)?;
    }
    Ok(acc)
}

/// Standard character as a sum over the cells `(v_k)` of the fiber over the
/// origin, a product of Grassmannians `Gr(v_k, w_k)`:
///
/// `sum_v prod_k C(w_k, v_k) * Y^w * prod_k (Y_k Y_{k+1})^{-v_k}`.
pub fn standard_character_geometric(dd: &DrinfeldData) -> Result<LaurentPoly> {
    let Some((lo, _)) = dd.window() else {
        return Ok(LaurentPoly::one());
    };
    let w = dd.dimension_vector();
    let top = highest_monomial(dd);
    // (monomial, weight) for every choice of v over the window
    let mut partial: Vec<(Monomial, i64)> = vec![(top, 1)];
    for (slot, &wk) in w.iter().enumerate() {
        let k = lo + slot as Spectral;
        let mut next = Vec::with_capacity(partial.len() * (wk as usize + 1));
        for (m, c) in &partial {
            for v in 0..=wk {
                let chi = i64::try_from(binomial(wk, v)?)
                    .map_err(|_| crate::Error::Overflow("Grassmannian Euler characteristic"))?;
                let weight = c.checked_mul(chi).ok_or(crate::Error::Overflow("cell weight"))?;
                let shift = Monomial::from_factors([(k, -(v as i64)), (k + 1, -(v as i64))])?;
                next.push((m.checked_mul(&shift)?, weight));
            }
        }
        partial = next;
    }
    LaurentPoly::from_terms(partial)
}

/// Zeros listed with multiplicity in non-increasing exponent order, so that
/// no later zero is a positive `q`-power multiple of an earlier one.
pub fn standard_ordering(dd: &DrinfeldData) -> Vec<Spectral> {
    dd.iter()
        .rev()
        .flat_map(|(k, m)| std::iter::repeat_n(k, m as usize))
        .collect()
}

/// `prod_k Y_k^{mult(k)}`.
pub fn highest_monomial(dd: &DrinfeldData) -> Monomial {
    Monomial::from_factors(dd.iter().map(|(k, m)| (k, m as i64))).expect("multiplicities fit in i64")
}
