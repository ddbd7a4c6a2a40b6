//! Closed-form bounds and thresholds, evaluated exactly.
//!
//! Every threshold of the form `k < sqrt(a / b)` is decided as `b * k^2 < a`
//! over big integers. The only floating point value in this module is
//! [`conjecture_constant`], which is used for exploration and never to decide
//! a threshold.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

use crate::combinatorics::{binomial, binomial_signed};
use crate::error::{Error, Result};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Erdős–Ko–Rado star size `C(n-1, k-1)`.
pub fn ekr_bound(n: u64, k: u64) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("EKR bound needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(binomial(n - 1, k - 1))
}

/// `C(n,k) - C(n-omega,k) + C(omega*(delta-omega+1), 2) * C(n-omega-2, k-2)`.
pub fn theorem2_bound(n: u64, k: u64, delta: u64, omega: u64) -> Result<BigUint> {
    if omega == 0 || omega > n {
        return Err(Error::invalid(format!("need 1 <= omega <= n, got omega = {omega}, n = {n}")));
    }
    if delta + 1 < omega {
        return Err(Error::invalid(format!(
            "need delta >= omega - 1, got delta = {delta}, omega = {omega}"
        )));
    }
    if k < 2 {
        return Err(Error::invalid(format!("need k >= 2, got {k}")));
    }
    Ok(theorem2_value(n, k, delta, omega))
}

// Same formula without the k >= 2 restriction; at k = 1 it collapses to omega.
fn theorem2_value(n: u64, k: u64, delta: u64, omega: u64) -> BigUint {
    let (n_, k_, w) = (n as i64, k as i64, omega as i64);
    let clique_part = binomial(n, k) - binomial_signed(n_ - w, k_);
    let outer_pairs = binomial_signed(w * (delta as i64 - w + 1), 2);
    clique_part + outer_pairs * binomial_signed(n_ - w - 2, k_ - 2)
}

/// Size of the cycle construction, `C(n,k) - C(n-2,k) + C(n-4,k-2)`.
pub fn cycle_formula(n: u64, k: u64) -> Result<BigUint> {
    if n < 6 || k < 2 {
        return Err(Error::invalid(format!(
            "cycle formula needs n >= 6 and k >= 2, got n = {n}, k = {k}"
        )));
    }
    let (n_, k_) = (n as i64, k as i64);
    Ok(binomial(n, k) - binomial_signed(n_ - 2, k_) + binomial_signed(n_ - 4, k_ - 2))
}

/// `k < sqrt(omega*n / (2*(delta+1)^2))`, decided as `2*(delta+1)^2*k^2 < omega*n`.
pub fn lemma1_threshold(n: u64, delta: u64, omega: u64, k: u64) -> bool {
    let d1 = big(delta + 1);
    let kk = big(k);
    big(2) * &d1 * &d1 * &kk * &kk < big(omega) * big(n)
}

/// `k <= sqrt(n / (delta*(delta+1)))`, decided as `delta*(delta+1)*k^2 <= n`.
pub fn lemma2_threshold(n: u64, delta: u64, k: u64) -> Result<bool> {
    if delta == 0 {
        return Err(Error::invalid("lemma 2 threshold needs delta >= 1"));
    }
    let kk = big(k);
    Ok(big(delta) * big(delta + 1) * &kk * &kk <= big(n))
}

/// `n > (delta+2)*k`: every vertex of full degree in a maximum family lies in a clique.
pub fn clique_separation(n: u64, delta: u64, k: u64) -> bool {
    big(n) > big(delta + 2) * big(k)
}

/// `tau * (delta+1)^tau * k^(tau-1) * C(n-tau, k-tau)` for `2 <= tau <= k`.
pub fn tau_expression(n: u64, k: u64, delta: u64, tau: u64) -> Result<BigUint> {
    if tau < 2 || tau > k {
        return Err(Error::invalid(format!("need 2 <= tau <= k, got tau = {tau}, k = {k}")));
    }
    let exp = u32::try_from(tau).map_err(|_| Error::invalid("tau too large"))?;
    Ok(big(tau)
        * big(delta + 1).pow(exp)
        * big(k).pow(exp - 1)
        * binomial_signed(n as i64 - tau as i64, (k - tau) as i64))
}

/// `delta*(delta+1)*k*C(n-2,k-2) < C(n-|K|-1, k-1)`.
pub fn eq_six_holds(n: u64, k: u64, delta: u64, clique_size: u64) -> Result<bool> {
    if k < 2 {
        return Err(Error::invalid(format!("need k >= 2, got {k}")));
    }
    let (n_, k_, c) = (n as i64, k as i64, clique_size as i64);
    let lhs = big(delta) * big(delta + 1) * big(k) * binomial_signed(n_ - 2, k_ - 2);
    let rhs = binomial_signed(n_ - c - 1, k_ - 1);
    Ok(lhs < rhs)
}

/// Both sides of the clique-growth inequality, evaluated in full:
/// `C(n,k) - C(n-|K|,k) + C(|K|(delta-|K|+1), 2) C(n-|K|-2, k-2)`
/// against `C(n,k) - C(n-|K|-1, k)`.
pub fn eq_bound_sides(n: u64, k: u64, delta: u64, clique_size: u64) -> Result<(BigInt, BigInt)> {
    if k < 2 {
        return Err(Error::invalid(format!("need k >= 2, got {k}")));
    }
    let (n_, k_, c) = (n as i64, k as i64, clique_size as i64);
    let all = BigInt::from(binomial(n, k));
    let lhs = &all - BigInt::from(binomial_signed(n_ - c, k_))
        + BigInt::from(binomial_signed(c * (delta as i64 - c + 1), 2) * binomial_signed(n_ - c - 2, k_ - 2));
    let rhs = all - BigInt::from(binomial_signed(n_ - c - 1, k_));
    Ok((lhs, rhs))
}

pub fn eq_bound_holds(n: u64, k: u64, delta: u64, clique_size: u64) -> Result<bool> {
    let (lhs, rhs) = eq_bound_sides(n, k, delta, clique_size)?;
    Ok(lhs < rhs)
}

/// Root in `(0,1)` of `c - (1-c)^(delta+1)`, by bisection down to width `1e-9`.
pub fn conjecture_constant(delta: u32) -> f64 {
    let f = |c: f64| c - (1.0 - c).powi(delta as i32 + 1);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// A non-negative decimal such as `0.25` or `3`, held exactly as `num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    text: String,
    num: BigUint,
    den: BigUint,
}

impl Decimal {
    /// Whether `k < self * sqrt(n)`, decided as `k^2 * den^2 < num^2 * n`.
    pub fn k_below_sqrt_n(&self, n: u64, k: u64) -> bool {
        let kk = big(k);
        &kk * &kk * &self.den * &self.den < &self.num * &self.num * big(n)
    }
}

impl FromStr for Decimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("{s:?} is not a non-negative decimal"));
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let num = BigUint::from_str(&digits).map_err(|_| bad())?;
        let den = BigUint::from(10u32).pow(frac.len() as u32);
        Ok(Decimal {
            text: s.to_string(),
            num,
            den,
        })
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Which lemma hypothesis is the stricter restriction on `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BindingThreshold {
    Lemma1,
    Lemma2,
    Equal,
}

impl fmt::Display for BindingThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BindingThreshold::Lemma1 => "lemma1",
            BindingThreshold::Lemma2 => "lemma2",
            BindingThreshold::Equal => "equal",
        })
    }
}

/// Compares `omega / (2 (delta+1)^2)` with `1 / (delta (delta+1))`; the
/// smaller coefficient of `n` is the binding one.
pub fn binding_threshold(delta: u64, omega: u64) -> BindingThreshold {
    if delta == 0 {
        return BindingThreshold::Lemma1;
    }
    match (omega * delta).cmp(&(2 * (delta + 1))) {
        Ordering::Less => BindingThreshold::Lemma1,
        Ordering::Greater => BindingThreshold::Lemma2,
        Ordering::Equal => BindingThreshold::Equal,
    }
}

pub(crate) fn ser_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_opt_big<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_tau<S: Serializer>(v: &[(u64, BigUint)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(v.len()))?;
    for (tau, value) in v {
        map.serialize_entry(&tau.to_string(), &value.to_string())?;
    }
    map.end()
}

fn ser_opt_display<T: fmt::Display, S: Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// Every bound and threshold for one `(n, k, delta, omega)` instance.
///
/// Serializes to a flat JSON object; big integers become decimal strings and
/// `tau_expression` becomes an object keyed by `tau`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub delta: u64,
    pub omega: u64,
    #[serde(serialize_with = "ser_big")]
    pub ekr: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub theorem2: BigUint,
    #[serde(serialize_with = "ser_opt_big")]
    pub cycle_formula: Option<BigUint>,
    pub lemma1_ok: bool,
    /// False when `delta = 0`, where the lemma does not apply.
    pub lemma2_ok: bool,
    pub clique_sep_ok: bool,
    #[serde(serialize_with = "ser_tau")]
    pub tau_expression: Vec<(u64, BigUint)>,
    pub binding_threshold: BindingThreshold,
    /// Both lemma hypotheses hold, which is the default reading of `k < C sqrt(n)`.
    pub theorem_regime: bool,
    #[serde(serialize_with = "ser_opt_display")]
    pub constant_c: Option<Decimal>,
    pub below_c_sqrt_n: Option<bool>,
}

impl BoundReport {
    /// Evaluates everything for the instance. `cycle` requests the cycle
    /// formula (only meaningful when the graph is `C_n`, `n >= 6`, `k >= 2`).
    pub fn evaluate(
        n: u64,
        k: u64,
        delta: u64,
        omega: u64,
        cycle: bool,
        constant_c: Option<Decimal>,
    ) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::invalid(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
        }
        if omega == 0 || omega > n || delta + 1 < omega {
            return Err(Error::invalid(format!(
                "inconsistent graph statistics: n = {n}, delta = {delta}, omega = {omega}"
            )));
        }
        let lemma1_ok = lemma1_threshold(n, delta, omega, k);
        let lemma2_ok = lemma2_threshold(n, delta, k).unwrap_or(false);
        let below_c_sqrt_n = constant_c.as_ref().map(|c| c.k_below_sqrt_n(n, k));
        Ok(BoundReport {
            n,
            k,
            delta,
            omega,
            ekr: ekr_bound(n, k)?,
            theorem2: theorem2_value(n, k, delta, omega),
            cycle_formula: if cycle { cycle_formula(n, k).ok() } else { None },
            lemma1_ok,
            lemma2_ok,
            clique_sep_ok: clique_separation(n, delta, k),
            tau_expression: (2..=k)
                .map(|t| (t, tau_expression(n, k, delta, t).expect("2 <= tau <= k")))
                .collect(),
            binding_threshold: binding_threshold(delta, omega),
            theorem_regime: lemma1_ok && lemma2_ok,
            constant_c,
            below_c_sqrt_n,
        })
    }

    /// Aligned two-column text table.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("n".into(), self.n.to_string()),
            ("k".into(), self.k.to_string()),
            ("delta".into(), self.delta.to_string()),
            ("omega".into(), self.omega.to_string()),
            ("ekr".into(), self.ekr.to_string()),
            ("theorem2".into(), self.theorem2.to_string()),
            (
                "cycle_formula".into(),
                self.cycle_formula
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |v| v.to_string()),
            ),
            ("lemma1_ok".into(), self.lemma1_ok.to_string()),
            ("lemma2_ok".into(), self.lemma2_ok.to_string()),
            ("clique_sep_ok".into(), self.clique_sep_ok.to_string()),
            ("binding_threshold".into(), self.binding_threshold.to_string()),
            ("theorem_regime".into(), self.theorem_regime.to_string()),
        ];
        if let Some(c) = &self.constant_c {
            rows.push(("constant_c".into(), c.to_string()));
            rows.push((
                "below_c_sqrt_n".into(),
                self.below_c_sqrt_n.unwrap_or(false).to_string(),
            ));
        }
        for (tau, value) in &self.tau_expression {
            rows.push((format!("tau_expression[{tau}]"), value.to_string()));
        }
        render_table(&rows)
    }
}

pub(crate) fn render_table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}
