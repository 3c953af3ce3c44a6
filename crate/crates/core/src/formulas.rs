//! Closed-form Turán numbers and bounds, in exact integer and rational
//! arithmetic. Binomials follow the convention `C(a, b) = 0` for `a < b`.

use std::fmt;

use num_rational::Ratio;

use crate::constructions::{gnks_parts, turan_parts};
use crate::error::{Error, Result};
use crate::hypergraph::ExtendedCount;
use crate::search;

/// How a formula value relates to the true Turán number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaKind {
    /// Equal to the Turán number for every `n` in the stated regime.
    Exact,
    /// Equal to the Turán number only for `n` large enough.
    LargeN,
    /// The leading term `c * n` of an asymptotic formula, evaluated at `n`.
    LeadingTerm,
    /// An upper bound, not necessarily attained.
    UpperBound,
}

impl FormulaKind {
    pub fn is_asymptotic(self) -> bool {
        matches!(self, FormulaKind::LargeN | FormulaKind::LeadingTerm)
    }
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaKind::Exact => "exact",
            FormulaKind::LargeN => "asymptotic",
            FormulaKind::LeadingTerm => "leading-term",
            FormulaKind::UpperBound => "upper-bound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Count(ExtendedCount),
    Rational(Ratio<u128>),
}

impl FormulaValue {
    /// The finite integer value, if there is one.
    pub fn as_count(&self) -> Option<u64> {
        match self {
            FormulaValue::Count(c) => c.finite(),
            FormulaValue::Rational(q) if q.is_integer() => u64::try_from(q.to_integer()).ok(),
            FormulaValue::Rational(_) => None,
        }
    }
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaValue::Count(c) => write!(f, "{c}"),
            FormulaValue::Rational(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: FormulaValue,
    /// Which case of the formula fired, e.g. `r<=s+1`.
    pub branch: String,
    pub kind: FormulaKind,
    /// Regime conditions checked on the inputs.
    pub assumptions: Vec<String>,
    /// For leading-term results, the coefficient `c` of `c * n`.
    pub coefficient: Option<u64>,
}

impl FormulaResult {
    fn count(value: u128, branch: &str, kind: FormulaKind, assumptions: &[&str]) -> Result<Self> {
        Ok(FormulaResult {
            value: FormulaValue::Count(ExtendedCount::Finite(fit(value)?)),
            branch: branch.to_string(),
            kind,
            assumptions: assumptions.iter().map(|a| a.to_string()).collect(),
            coefficient: None,
        })
    }

    fn leading(coefficient: u128, n: usize, branch: &str, assumptions: &[&str]) -> Result<Self> {
        let mut res = Self::count(coefficient * n as u128, branch, FormulaKind::LeadingTerm, assumptions)?;
        res.coefficient = Some(fit(coefficient)?);
        Ok(res)
    }

    /// The integer value; panics on rational results that are not integers.
    pub fn expect_count(&self) -> u64 {
        self.value.as_count().expect("integer formula value")
    }

    /// `value<TAB>branch<TAB>kind`.
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.value, self.branch, self.kind)
    }
}

fn fit(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::params("formula value overflows u64"))
}

/// `C(a, b)`, zero when `a < b`.
pub fn binom(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn star_count(n: usize, r: usize, s: usize) -> u128 {
    binom(s, r - 1) * n.saturating_sub(s) as u128 + binom(s, r)
}

/// `ex_r(n, BM_{s+1})` for every `n`.
pub fn ex_berge_matching(n: usize, r: usize, s: usize) -> Result<FormulaResult> {
    if s == 0 || r < 2 {
        return Err(Error::params(format!("need s >= 1 and r >= 2, got r={r} s={s}")));
    }
    use FormulaKind::Exact;
    if n <= 2 * s + 1 {
        return FormulaResult::count(binom(n, r), "n<=2s+1", Exact, &["n<=2s+1"]);
    }
    let regime = ["n>=2s+2"];
    if r <= s + 1 {
        let value = binom(2 * s + 1, r).max(star_count(n, r, s));
        FormulaResult::count(value, "r<=s+1", Exact, &regime)
    } else if r <= 2 * s {
        FormulaResult::count(binom(2 * s + 1, r), "s+2<=r<=2s", Exact, &regime)
    } else {
        // Fewer than s edges exist when r is close to n.
        FormulaResult::count(binom(n, r).min(s as u128), "r>=2s+1", Exact, &regime)
    }
}

/// The earlier exact result for `n >= 2s+2`, `r >= 3`, covering only
/// `r <= s-1` and `r >= 2s+2`.
pub fn ex_kang_ni_shan(n: usize, r: usize, s: usize) -> Result<FormulaResult> {
    if s == 0 || r < 3 || n < 2 * s + 2 {
        return Err(Error::params(format!("need s >= 1, r >= 3, n >= 2s+2, got n={n} r={r} s={s}")));
    }
    let regime = ["n>=2s+2", "r>=3"];
    if r + 1 <= s {
        let value = binom(2 * s + 1, r).max(star_count(n, r, s));
        FormulaResult::count(value, "r<=s-1", FormulaKind::Exact, &regime)
    } else if r >= 2 * s + 2 {
        FormulaResult::count(binom(n, r).min(s as u128), "r>=2s+2", FormulaKind::Exact, &regime)
    } else {
        Err(Error::NoBranch(format!("s <= r <= 2s+1 is not covered (r={r}, s={s})")))
    }
}

/// The large-`n` formula for `ex_r(n, BM_{s+1})`.
pub fn ex_khormali_palmer(n: usize, r: usize, s: usize) -> Result<FormulaResult> {
    if s == 0 || r < 2 {
        return Err(Error::params(format!("need s >= 1 and r >= 2, got r={r} s={s}")));
    }
    let large = FormulaKind::LargeN;
    let regime = ["n large"];
    if r >= 2 * s + 1 {
        FormulaResult::count(s as u128, "r>=2s+1", large, &regime)
    } else if r > s + 1 {
        FormulaResult::count(binom(2 * s + 1, r), "s+1<r<2s+1", large, &regime)
    } else if r == s + 1 {
        FormulaResult::count(n.saturating_sub(s) as u128, "r=s+1", large, &regime)
    } else {
        FormulaResult::count(star_count(n, r, s), "r<=s", large, &regime)
    }
}

/// `ex(n, {M_{s+1}, K_{k+1}}) = max{e(T(2s+1, k)), e(G(n, k, s))}`.
pub fn ex_graph_matching_clique(n: usize, s: usize, k: usize) -> Result<FormulaResult> {
    if s == 0 || k < 2 || n < 2 * s + 1 {
        return Err(Error::params(format!("need n >= 2s+1, s >= 1, k >= 2, got n={n} s={s} k={k}")));
    }
    let t = multipartite_cliques(&turan_parts(2 * s + 1, k), 2);
    let g = multipartite_cliques(&gnks_parts(n, k, s), 2);
    let branch = if t >= g { "T(2s+1,k)" } else { "G(n,k,s)" };
    FormulaResult::count(t.max(g), branch, FormulaKind::Exact, &["n>=2s+1", "k>=2"])
}

/// `ex(n, K_r, {M_{s+1}, K_{k+1}}) = max{N(K_r, T(2s+1, k)), N(K_r, G(n, k, s))}`.
pub fn ex_graph_clique_count(n: usize, s: usize, k: usize, r: usize) -> Result<FormulaResult> {
    if s == 0 || r < 3 || k < r || n < 2 * s + 1 {
        return Err(Error::params(format!(
            "need n >= 2s+1, s >= 1, k >= r >= 3, got n={n} s={s} k={k} r={r}"
        )));
    }
    let t = multipartite_cliques(&turan_parts(2 * s + 1, k), r);
    let g = multipartite_cliques(&gnks_parts(n, k, s), r);
    let branch = if t >= g { "T(2s+1,k)" } else { "G(n,k,s)" };
    FormulaResult::count(t.max(g), branch, FormulaKind::Exact, &["n>=2s+1", "k>=r>=3"])
}

/// `N(K_t, G)` for the complete multipartite graph `G` with the given part
/// sizes: the `t`-th elementary symmetric polynomial of the sizes.
pub fn multipartite_cliques(parts: &[usize], t: usize) -> u128 {
    let mut e = vec![0u128; t + 1];
    e[0] = 1;
    for &size in parts {
        for j in (1..=t).rev() {
            e[j] += e[j - 1] * size as u128;
        }
    }
    e[t]
}

/// `ex_small + C(s, r-1)(n - s)`, where `ex_small = ex_r(s, D(F))`.
pub fn ex_thm22_rhs(n: usize, r: usize, s: usize, ex_small: u64) -> u128 {
    ex_small as u128 + binom(s, r - 1) * n.saturating_sub(s) as u128
}

/// Bounds on `ex_r(n, BM_{s+1} ∪ BK_{p,q})`; `p` and `q` are swapped if
/// `p > q`, so `p` is the smaller side and equals `p(K_{p,q})`.
///
/// Cases specific to `K_{p,q}` are tried before the general bipartite cases;
/// at `p = r <= s` both apply and give different leading terms.
pub fn bounds_bipartite(n: usize, r: usize, s: usize, p: usize, q: usize) -> Result<FormulaResult> {
    if n == 0 || r < 2 || s == 0 || p == 0 || q == 0 {
        return Err(Error::params(format!("need positive parameters with r >= 2, got n={n} r={r} s={s} p={p} q={q}")));
    }
    let (p, q) = (p.min(q), p.max(q));
    let exact_bound = || s as u128 + binom(2 * s, r) + binom(2 * s, r - 1) * (p * q - 1) as u128;
    if r == s + 1 {
        if p == r {
            let mut res = ex_berge_matching(n, r, s)?;
            res.branch = "p=r=s+1".into();
            res.kind = FormulaKind::LargeN;
            res.assumptions = vec!["n large".into()];
            return Ok(res);
        }
        if p < r && r <= p + q {
            return FormulaResult::leading(1, n, "p<r=s+1<=p+q", &["n large"]);
        }
        if p + q < r {
            return FormulaResult::count(exact_bound(), "p+q<r=s+1", FormulaKind::UpperBound, &["n large"]);
        }
    }
    if p <= r && r <= s && r < p + q {
        return FormulaResult::leading((p - 1) as u128, n, "p<=r<=min{s,p+q-1}", &["n large"]);
    }
    if r == p + q && r <= s {
        let g = search::extremal_shadow_free(s, r, p, q)?.optimum;
        let coefficient = ((p - 1) as u64).min(g) as u128;
        return FormulaResult::leading(coefficient, n, "r=p+q<=s", &["n large", "s<=8"]);
    }
    if p + q < r && r <= s {
        return FormulaResult::count(exact_bound(), "p+q<r<=s", FormulaKind::UpperBound, &["n large"]);
    }
    if r <= p && p <= s {
        return FormulaResult::leading(binom(p - 1, r - 1), n, "r<=p<=s", &["n large"]);
    }
    if p <= s && s + 1 < r {
        let bound = (s as u128).max(binom(2 * s + 1, r));
        return FormulaResult::count(bound, "p<=s<r-1", FormulaKind::UpperBound, &["n large"]);
    }
    if p > s {
        let mut res = ex_berge_matching(n, r, s)?;
        res.branch = "p>s".into();
        res.kind = FormulaKind::LargeN;
        res.assumptions = vec!["n large".into()];
        return Ok(res);
    }
    Err(Error::NoBranch(format!("n={n} r={r} s={s} p={p} q={q}")))
}

/// `max{2 N(K_{r-1}, T(2s-1, k-1)) / (rn), 2 N(K_{r-1}, G(n, k-1, s-1)) / (rn), 1}`.
pub fn z_factor(n: usize, r: usize, s: usize, k: usize) -> Result<Ratio<u128>> {
    if s < 2 || r < 3 || k < r || n < 2 * s + 1 {
        return Err(Error::params(format!(
            "need n >= 2s+1, s >= 2, k >= r >= 3, got n={n} r={r} s={s} k={k}"
        )));
    }
    let t = multipartite_cliques(&turan_parts(2 * s - 1, k - 1), r - 1);
    let g = multipartite_cliques(&gnks_parts(n, k - 1, s - 1), r - 1);
    let denom = (r * n) as u128;
    let candidates = [Ratio::new(2 * t, denom), Ratio::new(2 * g, denom), Ratio::from_integer(1)];
    Ok(candidates.into_iter().max().expect("non-empty"))
}

/// `max{2f/r, 1} * ex_f`. The caller certifies `ex(n, K_{r-1}, F^-) <= f n`
/// over the range it cares about.
pub fn thm210_bound(ex_f: u64, f: Ratio<u128>, r: usize) -> Ratio<u128> {
    let factor = (f * 2 / r as u128).max(Ratio::from_integer(1));
    factor * ex_f as u128
}
