//! Cycle sweep: formula, construction size and (optionally) exact `N(C_n,k)`
//! over a grid of `(n, k)`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{solve_exact, SolveOptions};
use crate::bounds::{conjecture_constant, cycle_formula};
use crate::combinatorics::{binomial, binomial_signed};
use crate::error::{Error, Result};
use crate::family::build_cycle_extremal;
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

pub const SWEEP_CSV_HEADER: [&str; 8] = [
    "n",
    "k",
    "formula",
    "construction",
    "exact",
    "ratio",
    "k_over_n",
    "status",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exact,
    BoundsOnly,
}

/// One `(n, k)` cell. `status` is one of `bounds_only`, `agree`, `differ`,
/// `capacity_exceeded`, or `error: <message>`.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub n: u64,
    pub k: u64,
    #[serde(serialize_with = "ser_opt")]
    pub formula: Option<BigUint>,
    #[serde(serialize_with = "ser_opt")]
    pub construction: Option<BigUint>,
    #[serde(serialize_with = "ser_opt")]
    pub exact: Option<usize>,
    pub ratio: Option<f64>,
    pub k_over_n: f64,
    pub status: String,
    pub conjecture_c: f64,
}

fn ser_opt<T: ToString, S: serde::Serializer>(v: &Option<T>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn opt_text<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

impl SweepRow {
    /// Fields in [`SWEEP_CSV_HEADER`] order; missing values are empty.
    pub fn csv_record(&self) -> [String; 8] {
        [
            self.n.to_string(),
            self.k.to_string(),
            opt_text(&self.formula),
            opt_text(&self.construction),
            opt_text(&self.exact),
            self.ratio.map(|r| format!("{r:.12}")).unwrap_or_default(),
            format!("{:.6}", self.k_over_n),
            self.status.clone(),
        ]
    }
}

fn ratio(value: &BigUint, total: &BigUint) -> Option<f64> {
    let total = total.to_f64()?;
    (total > 0.0).then(|| value.to_f64().unwrap_or(f64::INFINITY) / total)
}

/// Size of the cycle construction. Built and counted when it fits in the
/// budget, otherwise counted by inclusion-exclusion over the clique `{1,2}`.
fn construction_size(n: u64, k: u64, budget: usize) -> Result<BigUint> {
    let total = binomial(n, k);
    if n as usize <= MAX_VERTICES && total <= BigUint::from(budget) {
        return Ok(BigUint::from(build_cycle_extremal(n as usize, k as usize)?.len()));
    }
    let (n_, k_) = (n as i64, k as i64);
    // |contains 1| + |contains 2| - |contains both| + |contains {0,3}, avoids {1,2}|
    Ok(binomial_signed(n_ - 1, k_ - 1) * 2u32 - binomial_signed(n_ - 2, k_ - 2)
        + binomial_signed(n_ - 4, k_ - 2))
}

fn cell(n: u64, k: u64, mode: SweepMode, opts: &SolveOptions, c: f64) -> SweepRow {
    let mut row = SweepRow {
        n,
        k,
        formula: None,
        construction: None,
        exact: None,
        ratio: None,
        k_over_n: k as f64 / n as f64,
        status: String::new(),
        conjecture_c: c,
    };
    let formula = match cycle_formula(n, k) {
        Ok(f) if k <= n => f,
        Ok(_) => {
            row.status = format!("error: k = {k} exceeds n = {n}");
            return row;
        }
        Err(e) => {
            row.status = format!("error: {e}");
            return row;
        }
    };
    let total = binomial(n, k);
    row.construction = match construction_size(n, k, opts.budget) {
        Ok(size) => Some(size),
        Err(e) => {
            row.status = format!("error: {e}");
            return row;
        }
    };
    row.ratio = ratio(&formula, &total);
    row.status = "bounds_only".into();
    if mode == SweepMode::Exact {
        let solved = Graph::cycle(n as usize).and_then(|g| solve_exact(&g, k as usize, opts));
        match solved {
            Ok(r) => {
                row.ratio = ratio(&BigUint::from(r.value), &total);
                row.status = if BigUint::from(r.value) == formula { "agree" } else { "differ" }.into();
                row.exact = Some(r.value);
            }
            Err(Error::Capacity { .. }) => row.status = "capacity_exceeded".into(),
            Err(e) => row.status = format!("error: {e}"),
        }
    }
    row.formula = Some(formula);
    row
}

/// Evaluates every cell of `[n_lo, n_hi] x [k_lo, k_hi]` in row-major order,
/// handing each row to `emit` as soon as it is ready. Per-cell failures are
/// recorded in the row's status; only empty ranges and `emit` errors abort.
pub fn sweep_cycle<F>(
    n_range: (u64, u64),
    k_range: (u64, u64),
    mode: SweepMode,
    opts: &SolveOptions,
    mut emit: F,
) -> Result<()>
where
    F: FnMut(&SweepRow) -> Result<()>,
{
    let (n_lo, n_hi) = n_range;
    let (k_lo, k_hi) = k_range;
    if n_lo > n_hi || k_lo > k_hi {
        return Err(Error::invalid(format!(
            "empty sweep range: n in {n_lo}..={n_hi}, k in {k_lo}..={k_hi}"
        )));
    }
    let c = conjecture_constant(2);
    for n in n_lo..=n_hi {
        for k in k_lo..=k_hi {
            emit(&cell(n, k, mode, opts, c))?;
        }
    }
    Ok(())
}
