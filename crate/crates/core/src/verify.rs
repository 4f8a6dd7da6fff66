//! Exhaustive cross-checks over finite grids.
//!
//! Every check pairs two independent routes to the same quantity (closed
//! formula against elimination, recurrence against product form, KR
//! piecewise-linear decomposition against exhaustive search, ...) and
//! collects every disagreement instead of stopping at the first one.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::characters::{
    highest_monomial, kr_character, simple_character, standard_character, standard_character_geometric,
    t_system_holds,
};
use crate::decomp::{
    decomposition_row_with, ic_stalk_poly, multiplicity_closed, rank_tuple, MultiplicityQuery, OracleOptions,
    StalkQuery, TieBreak, DEFAULT_ORACLE_CAP,
};
use crate::error::{Error, Result};
use crate::polyring::{a_leq, binomial, gauss_binom_t, TPoly};
use crate::qstrings::{
    decompose, decompose_bruteforce, in_general_position, special_position_by_ratio, DrinfeldData, QString,
    DEFAULT_BRUTEFORCE_CAP,
};
use crate::quiver::{
    degeneration_leq, euler_form, ext_dim, hom_dim, is_sparse, orbit_dim, rigid_decomposition, stratum, Interval,
};

/// Environment variable overriding the multiplicity caps of the exhaustive
/// routes.
pub const SWEEP_CAP_ENV: &str = "QCHAR_SWEEP_CAP";

/// Grid sizes for all sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub tsystem_nmax: u32,
    pub tsystem_kmin: i64,
    pub tsystem_kmax: i64,
    /// Window length and total multiplicity for the decomposition sweep.
    pub decomp_window: usize,
    pub decomp_total: u64,
    /// Window length and total multiplicity for the character comparison.
    pub char_window: usize,
    pub char_total: u64,
    /// Vertex count and total dimension for the string/rigid sweep.
    pub strings_n: usize,
    pub strings_total: u64,
    /// Vertex count and per-vertex bound for the IC stalk sweep.
    pub stalk_n: usize,
    pub stalk_wmax: u64,
    pub gauss_amax: u32,
    /// Vertex bound for the Hom/Ext/Euler consistency sweep.
    pub quiver_n: usize,
    pub oracle_cap: u64,
    pub bruteforce_cap: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            tsystem_nmax: 5,
            tsystem_kmin: -4,
            tsystem_kmax: 4,
            decomp_window: 4,
            decomp_total: 6,
            char_window: 4,
            char_total: 8,
            strings_n: 5,
            strings_total: 8,
            stalk_n: 4,
            stalk_wmax: 3,
            gauss_amax: 8,
            quiver_n: 6,
            oracle_cap: DEFAULT_ORACLE_CAP,
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
        }
    }
}

impl SweepConfig {
    /// Defaults, with both caps replaced by `QCHAR_SWEEP_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Some(cap) = cap_from_env()? {
            cfg.oracle_cap = cap;
            cfg.bruteforce_cap = cap;
        }
        Ok(cfg)
    }
}

/// Value of `QCHAR_SWEEP_CAP`, if set.
pub fn cap_from_env() -> Result<Option<u64>> {
    match std::env::var(SWEEP_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("{SWEEP_CAP_ENV}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}

/// Outcome of one sweep.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
    /// Free-form counters, e.g. how many closed-formula queries applied.
    pub notes: Vec<(String, u64)>,
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        Self { name, checked: 0, failures: Vec::new(), notes: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn absorb<T>(&mut self, what: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        for (k, v) in other.notes {
            self.note(&k, v);
        }
    }

    fn note(&mut self, key: &str, by: u64) {
        match self.notes.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v += by,
            None => self.notes.push((key.to_string(), by)),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checks, {} failures, {:.3}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checked,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for (k, v) in &self.notes {
            write!(f, ", {k}={v}")?;
        }
        Ok(())
    }
}

fn timed(name: &'static str, body: impl FnOnce(&mut CheckReport)) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(name);
    body(&mut report);
    report.elapsed = start.elapsed();
    report
}

/// All multisets with minimal exponent 0, window length at most `window`
/// and total multiplicity at most `total`, plus the empty multiset.
pub fn drinfeld_grid(window: usize, total: u64) -> Vec<DrinfeldData> {
    let mut out = vec![DrinfeldData::new()];
    for len in 1..=window {
        for d in vectors(len, total) {
            if d[0] > 0 && d[len - 1] > 0 {
                out.push(DrinfeldData::from_window(0, &d));
            }
        }
    }
    out
}

/// All vectors of the given length with nonnegative entries summing to at
/// most `total`.
pub fn vectors(len: usize, total: u64) -> Vec<Vec<u64>> {
    fn go(len: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(len, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, total, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All vectors of the given length with entries in `0..=max`.
fn boxes(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every tuple `k` with `0 <= k_i <= bound_i`.
fn below(bound: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// KR T-system identities for `1 <= n <= nmax`, `kmin <= k <= kmax`.
pub fn check_t_system(cfg: &SweepConfig) -> CheckReport {
    timed("t-system", |rep| {
        for n in 1..=cfg.tsystem_nmax {
            for k in cfg.tsystem_kmin..=cfg.tsystem_kmax {
                if let Some(ok) = rep.absorb(|| format!("T-system n={n} k={k}"), t_system_holds(n, k)) {
                    rep.check(ok, || format!("T-system fails at n={n}, k={k}"));
                }
            }
        }
    })
}

/// Closed formula against elimination, plus the row sanity checks.
pub fn check_decomposition(cfg: &SweepConfig) -> CheckReport {
    timed("closed-vs-oracle", |rep| {
        let grid = drinfeld_grid(cfg.decomp_window, cfg.decomp_total);
        let parts: Vec<CheckReport> = grid.par_iter().map(|pi| decomposition_point(pi, cfg)).collect();
        for p in parts {
            rep.merge(p);
        }
        rep.note("standard modules", grid.len() as u64);
    })
}

fn decomposition_point(pi: &DrinfeldData, cfg: &SweepConfig) -> CheckReport {
    let mut rep = CheckReport::new("closed-vs-oracle");
    let fwd_opts = OracleOptions { cap: cfg.oracle_cap, tie_break: TieBreak::Lexicographic };
    let rev_opts = OracleOptions { cap: cfg.oracle_cap, tie_break: TieBreak::ReverseLexicographic };
    let Some(row) = rep.absorb(|| format!("oracle M({pi})"), decomposition_row_with(pi, &fwd_opts)) else {
        return rep;
    };
    if let Some(rev) = rep.absorb(|| format!("reversed oracle M({pi})"), decomposition_row_with(pi, &rev_opts)) {
        rep.check(rev == row, || format!("row of M({pi}) depends on tie-breaking"));
    }
    rep.check(row.get(pi) == Some(&1), || format!("[M({pi}) : V({pi})] = {:?}", row.get(pi)));

    let top = highest_monomial(pi);
    let mut dim_sum: i128 = 0;
    for (simple, &mult) in &row {
        rep.check(a_leq(&highest_monomial(simple), &top), || {
            format!("constituent {simple} of M({pi}) is not below the highest monomial")
        });
        if let Some(ch) = rep.absorb(|| format!("simple character {simple}"), simple_character(simple)) {
            dim_sum += mult as i128 * ch.dimension();
        }
    }
    let expected_dim = 1i128 << pi.total();
    rep.check(dim_sum == expected_dim, || {
        format!("sum of mult * dim over row of M({pi}) is {dim_sum}, expected {expected_dim}")
    });

    // every pitilde with h <= w over the window, plus one target outside it
    let w = pi.dimension_vector();
    let lo = pi.window().map_or(0, |(lo, _)| lo);
    let mut targets: Vec<DrinfeldData> = below(&w).iter().map(|h| DrinfeldData::from_window(lo, h)).collect();
    targets.push(DrinfeldData::from_window(lo + w.len() as i64, &[1]));
    for pt in targets {
        let q = MultiplicityQuery::new(pi.clone(), pt.clone());
        let oracle = row.get(&pt).copied().unwrap_or(0);
        let Some(closed) = rep.absorb(|| format!("closed [M({pi}) : V({pt})]"), multiplicity_closed(&q)) else {
            continue;
        };
        if rank_tuple(&q).is_none() {
            rep.note("rank tuple absent", 1);
            rep.check(oracle == 0, || format!("[M({pi}) : V({pt})]: no rank tuple but oracle gives {oracle}"));
            rep.check(closed == Some(0), || format!("[M({pi}) : V({pt})]: no rank tuple but closed gives {closed:?}"));
        } else if let Some(c) = closed {
            rep.note("sparse comparisons", 1);
            rep.check(c == oracle, || format!("[M({pi}) : V({pt})]: closed {c} != oracle {oracle}"));
        } else {
            rep.note("not applicable", 1);
        }
    }
    rep
}

/// Product-of-fundamentals against the Grassmannian cell sum.
pub fn check_standard_characters(cfg: &SweepConfig) -> CheckReport {
    timed("standard-characters", |rep| {
        let grid = drinfeld_grid(cfg.char_window, cfg.char_total);
        let parts: Vec<CheckReport> = grid
            .par_iter()
            .map(|pi| {
                let mut rep = CheckReport::new("standard-characters");
                let a = rep.absorb(|| format!("standard character {pi}"), standard_character(pi));
                let b = rep.absorb(|| format!("geometric character {pi}"), standard_character_geometric(pi));
                if let (Some(a), Some(b)) = (a, b) {
                    rep.check(a == b, || format!("standard characters of {pi} differ"));
                    let expected = 1i128 << pi.total();
                    rep.check(a.dimension() == expected, || {
                        format!("dim M({pi}) = {}, expected {expected}", a.dimension())
                    });
                }
                rep
            })
            .collect();
        for p in parts {
            rep.merge(p);
        }
    })
}

/// String decompositions against exhaustive search and the rigid
/// representation of the equioriented quiver.
pub fn check_strings_and_rigid(cfg: &SweepConfig) -> CheckReport {
    timed("strings-vs-rigid", |rep| {
        for n in 1..=cfg.strings_n {
            // Ext vanishing in both directions <=> general position
            for u in intervals(n) {
                for v in intervals(n) {
                    let no_ext = ext_dim(&u, &v) == 0 && ext_dim(&v, &u) == 0;
                    let general = in_general_position(&interval_string(&u, 1), &interval_string(&v, 1));
                    rep.check(no_ext == general, || format!("Ext/general-position mismatch for {u}, {v}"));
                }
            }
            let dims: Vec<Vec<u64>> = vectors(n, cfg.strings_total);
            let parts: Vec<CheckReport> = dims.par_iter().map(|d| strings_point(d, cfg)).collect();
            for p in parts {
                rep.merge(p);
            }
        }
    })
}

fn intervals(n: usize) -> Vec<Interval> {
    (1..=n).flat_map(|i| (i..=n).map(move |j| Interval { i, j })).collect()
}

/// `U[i, j]` corresponds to the string on vertices `i..=j`, with vertex 1
/// placed at exponent `base`.
fn interval_string(u: &Interval, base: i64) -> QString {
    QString { base: base + u.i as i64 - 1, len: (u.j - u.i + 1) as u32 }
}

fn strings_point(d: &[u64], cfg: &SweepConfig) -> CheckReport {
    let mut rep = CheckReport::new("strings-vs-rigid");
    let dd = DrinfeldData::from_window(1, d);
    let fast = decompose(&dd);
    rep.check(fast.union() == dd, || format!("decompose({d:?}) does not cover the multiset"));
    rep.check(fast.is_pairwise_general(), || format!("decompose({d:?}) has parts in special position"));
    if let Some(slow) = rep.absorb(|| format!("bruteforce {d:?}"), decompose_bruteforce(&dd, cfg.bruteforce_cap)) {
        rep.check(slow == fast, || format!("decompose({d:?}) = {fast} but exhaustive search gives {slow}"));
    }
    if let Some(rigid) = rep.absorb(|| format!("rigid decomposition {d:?}"), rigid_decomposition(d)) {
        let mut as_strings: Vec<QString> = rigid.iter().map(|u| interval_string(u, 1)).collect();
        as_strings.sort();
        rep.check(as_strings == fast.parts(), || format!("rigid summands of {d:?} do not match the strings {fast}"));
        for u in &rigid {
            for v in &rigid {
                rep.check(ext_dim(u, v) == 0, || format!("Ext^1({u}, {v}) != 0 for d = {d:?}"));
            }
        }
    }
    let shifted = decompose(&dd.shifted(-7));
    rep.check(shifted == fast.shifted(-7), || format!("decompose({d:?}) is not translation invariant"));
    rep
}

/// IC stalk polynomials on all sparse strata of the grid.
pub fn check_ic_stalks(cfg: &SweepConfig) -> CheckReport {
    timed("ic-stalks", |rep| {
        let pinned = stratum(&[1, 2, 1], &[1, 1])
            .and_then(|s| StalkQuery::new(s, vec![1, 1]))
            .and_then(|q| ic_stalk_poly(&q));
        if let Some(p) = rep.absorb(|| "stalk at w=(1,2,1), r=(1,1), k=(1,1)".into(), pinned) {
            rep.check(p == TPoly::from_coeffs(vec![1, 1]), || format!("stalk at w=(1,2,1), r=(1,1), k=(1,1) is {p}"));
        }
        for n in 1..=cfg.stalk_n {
            let ws = boxes(n, cfg.stalk_wmax);
            let parts: Vec<CheckReport> = ws.par_iter().map(|w| stalk_point(w)).collect();
            for p in parts {
                rep.merge(p);
            }
        }
    })
}

fn stalk_point(w: &[u64]) -> CheckReport {
    let mut rep = CheckReport::new("ic-stalks");
    let n = w.len();
    let rank_bounds: Vec<u64> = (0..n.saturating_sub(1)).map(|i| w[i].min(w[i + 1])).collect();
    for r in below(&rank_bounds) {
        let Ok(s) = stratum(w, &r) else { continue };
        if !is_sparse(&s) {
            continue;
        }
        rep.note("sparse strata", 1);
        let Some(top_dim) = rep.absorb(|| format!("orbit_dim w={w:?} r={r:?}"), orbit_dim(&s)) else {
            continue;
        };
        for k in below(&r) {
            let point = StalkQuery::new(s.clone(), k.clone());
            let Some(q) = rep.absorb(|| format!("stalk query w={w:?} r={r:?} k={k:?}"), point) else {
                continue;
            };
            let Some(p) = rep.absorb(|| format!("stalk w={w:?} r={r:?} k={k:?}"), ic_stalk_poly(&q)) else {
                continue;
            };
            let tag = || format!("w={w:?} r={r:?} k={k:?}");
            rep.check(p.coeffs().iter().all(|&c| c >= 0), || format!("negative stalk coefficient at {}: {p}", tag()));
            rep.check(p.coeff(0) == 1, || format!("stalk constant term is not 1 at {}: {p}", tag()));
            if k.iter().any(|&x| x > 0) {
                let low_dim = q.point_stratum().and_then(|ps| orbit_dim(&ps));
                if let Some(low_dim) = rep.absorb(|| format!("orbit_dim of point stratum {}", tag()), low_dim) {
                    rep.check(low_dim < top_dim, || format!("orbit dimension not strictly monotone at {}", tag()));
                    let codim = top_dim.saturating_sub(low_dim);
                    let deg = p.degree().unwrap_or(0) as u64;
                    rep.check(2 * deg < codim, || format!("2 deg {p} >= codim {codim} at {}", tag()));
                }
            }
            if k == r {
                let q = MultiplicityQuery::new(DrinfeldData::from_window(0, w), DrinfeldData::from_window(0, s.h()));
                if let Some(closed) = rep.absorb(|| format!("closed formula at {}", tag()), multiplicity_closed(&q)) {
                    let at_one = p.eval_one();
                    rep.check(closed.map(i128::from) == Some(at_one), || {
                        format!("stalk at 1 is {at_one} but closed formula gives {closed:?} at {}", tag())
                    });
                }
            }
        }
    }
    rep
}

/// `(a choose n)_t` as `prod_{i=1}^{n} (1 - t^{a-i+1}) / (1 - t^i)`, by
/// exact division.
pub fn gauss_binom_product_form(a: u32, n: u32) -> Result<TPoly> {
    if n > a {
        return Ok(TPoly::zero());
    }
    let mut num = TPoly::one();
    for i in 1..=n {
        let factor = TPoly::one().checked_add(&TPoly::monomial(-1, (a - i + 1) as usize))?;
        num = num.checked_mul(&factor)?;
    }
    for i in 1..=n {
        num = divide_one_minus_power(&num, i as usize)?;
    }
    Ok(num)
}

/// `p / (1 - t^d)`, failing unless the division is exact.
fn divide_one_minus_power(p: &TPoly, d: usize) -> Result<TPoly> {
    let c = p.coeffs();
    if c.is_empty() {
        return Ok(TPoly::zero());
    }
    if c.len() <= d {
        return Err(Error::Consistency(format!("{p} is not divisible by 1 - t^{d}")));
    }
    let mut q = vec![0i64; c.len() - d];
    for j in 0..q.len() {
        let carry = if j >= d { q[j - d] } else { 0 };
        q[j] = c[j].checked_add(carry).ok_or(Error::Overflow("exact division"))?;
    }
    let back = TPoly::from_coeffs(q.clone()).checked_mul(&TPoly::one().checked_add(&TPoly::monomial(-1, d))?)?;
    if back != *p {
        return Err(Error::Consistency(format!("{p} is not divisible by 1 - t^{d}")));
    }
    Ok(TPoly::from_coeffs(q))
}

/// Recurrence against product form, symmetry, positivity, and `t = 1`.
pub fn check_gaussian_binomials(cfg: &SweepConfig) -> CheckReport {
    timed("gaussian-binomials", |rep| {
        for a in 0..=cfg.gauss_amax {
            for n in 0..=a {
                let tag = || format!("({a} choose {n})_t");
                let Some(rec) = rep.absorb(tag, gauss_binom_t(a, n)) else { continue };
                if let Some(prod) = rep.absorb(tag, gauss_binom_product_form(a, n)) {
                    rep.check(rec == prod, || format!("{}: recurrence {rec} != product form {prod}", tag()));
                }
                if let Some(mirror) = rep.absorb(tag, gauss_binom_t(a, a - n)) {
                    rep.check(rec == mirror, || format!("{} is not symmetric", tag()));
                }
                rep.check(rec.coeffs().iter().all(|&c| c >= 0), || format!("{} has a negative coefficient", tag()));
                if let Some(b) = rep.absorb(tag, binomial(a as u64, n as u64)) {
                    rep.check(rec.eval_one() == b as i128, || format!("{} at t=1 is {}", tag(), rec.eval_one()));
                }
            }
        }
    })
}

/// Hom/Ext/Euler consistency and orbit-dimension monotonicity.
pub fn check_quiver(cfg: &SweepConfig) -> CheckReport {
    timed("quiver", |rep| {
        let n = cfg.quiver_n;
        for u in intervals(n) {
            for v in intervals(n) {
                let euler = euler_form(&u.dim_vector(n), &v.dim_vector(n));
                let hom = hom_dim(&u, &v);
                if let (Some(e), Some(h)) = (rep.absorb(|| "euler".into(), euler), rep.absorb(|| format!("hom {u} {v}"), hom)) {
                    rep.check(h as i64 - ext_dim(&u, &v) as i64 == e, || format!("hom - ext != euler for {u}, {v}"));
                }
            }
        }
        for len in 1..=3 {
            for w in boxes(len, 2) {
                let bounds: Vec<u64> = (0..len - 1).map(|i| w[i].min(w[i + 1])).collect();
                let strata: Vec<_> = below(&bounds).into_iter().filter_map(|r| stratum(&w, &r).ok()).collect();
                for a in &strata {
                    for b in &strata {
                        if a.r() != b.r() && degeneration_leq(a.r(), b.r()).unwrap_or(false) {
                            let (da, db) = (orbit_dim(a), orbit_dim(b));
                            if let (Some(da), Some(db)) = (rep.absorb(|| "orbit_dim".into(), da), rep.absorb(|| "orbit_dim".into(), db)) {
                                rep.check(da < db, || format!("orbit_dim not monotone: w={w:?} {:?} -> {:?}", a.r(), b.r()));
                            }
                        }
                    }
                }
            }
        }
    })
}

/// Ratio criterion against the set criterion, and KR character shape.
pub fn check_strings_and_kr(cfg: &SweepConfig) -> CheckReport {
    timed("positions-and-kr", |rep| {
        for n in 1..=6u32 {
            for m in 1..=6u32 {
                for off in -8..=8i64 {
                    let (s, t) = (QString { base: 0, len: n }, QString { base: off, len: m });
                    rep.check(special_position_by_ratio(&s, &t) == !in_general_position(&s, &t), || {
                        format!("ratio and set criteria disagree on {s:?}, {t:?}")
                    });
                    rep.check(in_general_position(&s, &t) == in_general_position(&t, &s), || {
                        format!("general position is not symmetric on {s:?}, {t:?}")
                    });
                }
            }
        }
        for n in 1..=cfg.tsystem_nmax + 1 {
            for k in cfg.tsystem_kmin..=cfg.tsystem_kmax {
                let Some(ch) = rep.absorb(|| format!("kr_character({n}, {k})"), kr_character(n, k)) else {
                    continue;
                };
                rep.check(ch.len() == n as usize + 1 && ch.dimension() == n as i128 + 1, || {
                    format!("W({n}, {k}) has {} terms, dimension {}", ch.len(), ch.dimension())
                });
                let top = highest_monomial(&DrinfeldData::from_window(k, &vec![1; n as usize]));
                rep.check(ch.coeff(&top) == 1, || format!("W({n}, {k}) misses its highest monomial"));
                rep.check(ch.terms().all(|(m, _)| a_leq(m, &top)), || {
                    format!("W({n}, {k}) has a monomial not below the highest one")
                });
            }
        }
    })
}

/// Runs every sweep in a fixed order.
pub fn run_all(cfg: &SweepConfig) -> Vec<CheckReport> {
    vec![
        check_t_system(cfg),
        check_decomposition(cfg),
        check_standard_characters(cfg),
        check_strings_and_rigid(cfg),
        check_ic_stalks(cfg),
        check_gaussian_binomials(cfg),
        check_quiver(cfg),
        check_strings_and_kr(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(vectors(2, 2).len(), 6);
        // empty + {0:1} + {0:2}
        assert_eq!(drinfeld_grid(1, 2).len(), 3);
        assert!(drinfeld_grid(3, 4).iter().all(|d| d.window().is_none_or(|(lo, _)| lo == 0)));
        assert_eq!(below(&[1, 2]).len(), 6);
        assert_eq!(boxes(2, 3).len(), 16);
    }

    #[test]
    fn product_form_small() {
        assert_eq!(gauss_binom_product_form(4, 2).unwrap().coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(gauss_binom_product_form(3, 0).unwrap(), TPoly::one());
        assert!(gauss_binom_product_form(1, 2).unwrap().is_zero());
        assert!(divide_one_minus_power(&TPoly::from_coeffs(vec![1, 1]), 1).is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = SweepConfig {
            decomp_window: 2,
            decomp_total: 3,
            char_window: 2,
            char_total: 3,
            strings_n: 3,
            strings_total: 4,
            stalk_n: 3,
            stalk_wmax: 2,
            gauss_amax: 5,
            quiver_n: 4,
            ..SweepConfig::default()
        };
        for rep in run_all(&cfg) {
            assert!(rep.passed(), "{rep}: {:?}", rep.failures);
        }
    }
}
