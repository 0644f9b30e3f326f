//! Entropy, Singleton and GV-type bounds, list-decoding rates of random
//! codes, and the Zyablov-type trade-off of the concatenated construction.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::math::{self, big_pow, log_base};
use crate::optimize::{bisect_decreasing, maximize, minimize, DEFAULT_GRID};
use crate::word::{Alphabet, Word};

/// `H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x)`, with
/// `H_q(0) = H_q(1) = 0`.
pub fn entropy_q(q: u64, x: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain("entropy argument outside [0, 1]"));
    }
    Ok(entropy_unchecked(q as f64, x))
}

fn entropy_unchecked(q: f64, x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    let ln_q = math::ln(q);
    (x * math::ln(q - 1.0) - x * math::ln(x) - (1.0 - x) * math::ln(1.0 - x)) / ln_q
}

#[inline]
fn h2(x: f64) -> f64 {
    entropy_unchecked(2.0, x)
}

/// How the list size of a rate statement scales with `1/ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ListSizeClass {
    /// `O(1/ε)`
    Constant,
    /// `exp(O(1/ε))`
    Exponential,
    /// `N^{O(1/ε)}`
    Polynomial,
    /// The curve is not a list-decoding statement.
    NotApplicable,
}

impl ListSizeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ListSizeClass::Constant => "constant",
            ListSizeClass::Exponential => "exponential",
            ListSizeClass::Polynomial => "polynomial",
            ListSizeClass::NotApplicable => "none",
        }
    }
}

/// A point on a rate curve. `raw` is the formula value, `rate` the same
/// clamped to `[0, 1]`. `note` carries a regime warning when the formula is
/// evaluated outside the range its derivation covers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatePoint {
    pub x: f64,
    pub raw: f64,
    pub rate: f64,
    pub list_size: ListSizeClass,
    pub note: Option<&'static str>,
}

impl RatePoint {
    fn new(x: f64, raw: f64, list_size: ListSizeClass) -> Self {
        RatePoint {
            x,
            raw,
            rate: raw.clamp(0.0, 1.0),
            list_size,
            note: None,
        }
    }
}

/// Insertion and deletion fractions of a channel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelSpec {
    q: u32,
    gamma: f64,
    kappa: f64,
}

impl ChannelSpec {
    /// Requires `0 <= γ < q-1` and `0 <= κ < (q-1)/q`.
    pub fn new(q: u32, gamma: f64, kappa: f64) -> Result<Self> {
        Alphabet::new(q)?;
        let qf = q as f64;
        if !(0.0..qf - 1.0).contains(&gamma) {
            return Err(Error::Domain("insertion fraction outside [0, q-1)"));
        }
        if !(0.0..(qf - 1.0) / qf).contains(&kappa) {
            return Err(Error::Domain("deletion fraction outside [0, (q-1)/q)"));
        }
        Ok(ChannelSpec { q, gamma, kappa })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn tau(&self) -> f64 {
        self.gamma + self.kappa
    }
}

/// `⌊q^{n-d/2+1}⌋`, clamped to `q^n`. For odd `d` this is the integer square
/// root of `q^{2n-d+2}`.
pub fn singleton_max_size(n: u64, d: u64, q: u64) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    if d > 2 * n {
        return Err(Error::Domain("distance exceeds 2n"));
    }
    let cap = big_pow(q, n);
    let value = if d % 2 == 0 {
        big_pow(q, n + 1 - d / 2)
    } else {
        big_pow(q, 2 * n + 2 - d).sqrt()
    };
    Ok(value.min(cap))
}

/// Raw GV-type exponent `1 - (1+δ)H_q(δ/(1+δ)) + δ log_q(q-1) - H_q(δ)`.
pub fn gv_raw(q: u64, delta: f64) -> f64 {
    let qf = q as f64;
    1.0 - (1.0 + delta) * entropy_unchecked(qf, delta / (1.0 + delta))
        + delta * log_base(qf - 1.0, qf)
        - entropy_unchecked(qf, delta)
}

/// Rate guaranteed by the GV-type argument at relative distance `δ`.
/// Beyond `(q-1)/q` only the `q` repetition-like words survive, so the rate
/// is 0.
pub fn gv_lower_rate(q: u64, delta: f64) -> Result<RatePoint> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::Domain("relative distance outside [0, 1)"));
    }
    let qf = q as f64;
    let mut p = if delta > (qf - 1.0) / qf {
        RatePoint::new(delta, 0.0, ListSizeClass::NotApplicable)
    } else {
        RatePoint::new(delta, gv_raw(q, delta), ListSizeClass::NotApplicable)
    };
    p.rate = p.rate.max(0.0);
    Ok(p)
}

/// Singleton rate `1 - δ` at relative distance `δ = d/(2n)`.
pub fn singleton_rate(delta: f64) -> Result<RatePoint> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::Domain("relative distance outside [0, 1]"));
    }
    Ok(RatePoint::new(delta, 1.0 - delta, ListSizeClass::NotApplicable))
}

fn q_ary_raw(qf: f64, gamma: f64, kappa: f64) -> f64 {
    let span = 2.0 * gamma - kappa + 1.0;
    1.0 - span * entropy_unchecked(qf, gamma / span) + gamma * log_base(qf - 1.0, qf)
        - entropy_unchecked(qf, kappa)
}

fn check_q3(q: u64, gamma: f64, kappa: f64) -> Result<()> {
    if q == 2 {
        return Err(Error::Domain("binary alphabet: use the binary rate formula"));
    }
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    let qf = q as f64;
    if !(0.0..qf - 1.0).contains(&gamma) {
        return Err(Error::Domain("insertion fraction outside [0, q-1)"));
    }
    if !(0.0..(qf - 1.0) / qf).contains(&kappa) {
        return Err(Error::Domain("deletion fraction outside [0, (q-1)/q)"));
    }
    Ok(())
}

fn check_eps(epsilon: f64) -> Result<()> {
    if !(0.0..1.0).contains(&epsilon) {
        return Err(Error::Domain("epsilon outside [0, 1)"));
    }
    Ok(())
}

/// List-decoding rate of a random `q`-ary code (`q >= 3`) against `γn`
/// insertions and `κn` deletions:
/// `1 - (2γ-κ+1)H_q(γ/(2γ-κ+1)) + γ log_q(q-1) - H_q(κ) - ε`.
pub fn random_rate_q3(q: u64, gamma: f64, kappa: f64, epsilon: f64) -> Result<RatePoint> {
    check_q3(q, gamma, kappa)?;
    check_eps(epsilon)?;
    let raw = q_ary_raw(q as f64, gamma, kappa) - epsilon;
    Ok(RatePoint::new(gamma + kappa, raw, ListSizeClass::Constant))
}

/// The worst split of a total error fraction, with the rate it gives.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TauRate {
    pub point: RatePoint,
    pub gamma: f64,
    pub kappa: f64,
}

/// Grid resolution for the one-dimensional searches in this module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Search {
    pub grid: usize,
}

impl Default for Search {
    fn default() -> Self {
        Search { grid: DEFAULT_GRID }
    }
}

/// `κ` range of the segment `γ + κ = τ` inside the channel domain (closed at
/// the open ends, where the formulas extend continuously).
fn kappa_segment(q: f64, tau: f64) -> Result<(f64, f64)> {
    if tau < 0.0 || tau.is_nan() {
        return Err(Error::Domain("negative error fraction"));
    }
    let gamma_max = if q == 2.0 { 1.0 } else { q - 1.0 };
    let lo = (tau - gamma_max).max(0.0);
    let hi = tau.min((q - 1.0) / q);
    if lo > hi {
        return Err(Error::Domain("no split of tau lies in the channel domain"));
    }
    Ok((lo, hi))
}

/// Minimum of [`random_rate_q3`] over all splits `γ + κ = τ`.
pub fn random_rate_tau_q3(q: u64, tau: f64, epsilon: f64) -> Result<TauRate> {
    random_rate_tau_q3_with(q, tau, epsilon, Search::default())
}

pub fn random_rate_tau_q3_with(q: u64, tau: f64, epsilon: f64, search: Search) -> Result<TauRate> {
    if q < 3 {
        return Err(Error::Domain("q-ary formula needs q >= 3"));
    }
    check_eps(epsilon)?;
    let qf = q as f64;
    let (lo, hi) = kappa_segment(qf, tau)?;
    let (kappa, raw) = minimize(|k| Some(q_ary_raw(qf, tau - k, k)), lo, hi, search.grid)
        .ok_or(Error::Infeasible("empty split segment"))?;
    Ok(TauRate {
        point: RatePoint::new(tau, raw - epsilon, ListSizeClass::Constant),
        gamma: tau - kappa,
        kappa,
    })
}

/// `θ(γ,κ) = (1+2γ-κ)/8 + sqrt((1+γ-κ)^2 + 10γ(1+γ-κ) + γ^2)/8`.
pub fn theta_binary(gamma: f64, kappa: f64) -> f64 {
    let a = 1.0 + gamma - kappa;
    (1.0 + 2.0 * gamma - kappa) / 8.0 + math::sqrt(a * a + 10.0 * gamma * a + gamma * gamma) / 8.0
}

/// Binary formula without the `ε` term, or `None` when `2θ/(1+γ-κ) > 1`.
fn binary_raw(gamma: f64, kappa: f64) -> Option<f64> {
    let theta = theta_binary(gamma, kappa);
    let a = 1.0 + gamma - kappa;
    let ratio = 2.0 * theta / a;
    if ratio > 1.0 + 1e-12 {
        return None;
    }
    let span = 2.0 * theta + gamma;
    Some(1.0 - span * h2(gamma / span) - h2(kappa) + a - a * h2(ratio.min(1.0)))
}

fn check_binary(gamma: f64, kappa: f64) -> Result<()> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::Domain("insertion fraction outside [0, 1)"));
    }
    if !(0.0..0.5).contains(&kappa) {
        return Err(Error::Domain("deletion fraction outside [0, 1/2)"));
    }
    Ok(())
}

/// List-decoding rate of a random binary code against `γn` insertions and
/// `κn` deletions.
pub fn random_rate_binary(gamma: f64, kappa: f64, epsilon: f64) -> Result<RatePoint> {
    check_binary(gamma, kappa)?;
    check_eps(epsilon)?;
    let raw = binary_raw(gamma, kappa)
        .ok_or(Error::OutOfRegime("2θ/(1+γ-κ) exceeds 1"))?;
    Ok(RatePoint::new(gamma + kappa, raw - epsilon, ListSizeClass::Constant))
}

/// Minimum of [`random_rate_binary`] over all splits `γ + κ = τ` where the
/// formula is defined.
pub fn random_rate_tau_binary(tau: f64, epsilon: f64) -> Result<TauRate> {
    random_rate_tau_binary_with(tau, epsilon, Search::default())
}

pub fn random_rate_tau_binary_with(tau: f64, epsilon: f64, search: Search) -> Result<TauRate> {
    check_eps(epsilon)?;
    let (lo, hi) = kappa_segment(2.0, tau)?;
    let (kappa, raw) = minimize(|k| binary_raw(tau - k, k), lo, hi, search.grid)
        .ok_or(Error::OutOfRegime("no split of tau is in the binary formula's regime"))?;
    Ok(TauRate {
        point: RatePoint::new(tau, raw - epsilon, ListSizeClass::Constant),
        gamma: tau - kappa,
        kappa,
    })
}

/// Rate for insertions only (`κ = 0`).
pub fn rate_insertion_only(q: u64, gamma: f64, epsilon: f64) -> Result<RatePoint> {
    if q == 2 {
        random_rate_binary(gamma, 0.0, epsilon)
    } else {
        random_rate_q3(q, gamma, 0.0, epsilon)
    }
}

/// Rate for deletions only: `1 - H_q(κ) - ε`, defined for `0 <= κ < 1`.
/// Points with `κ >= (q-1)/q` carry a regime note.
pub fn rate_deletion_only(q: u64, kappa: f64, epsilon: f64) -> Result<RatePoint> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::Domain("deletion fraction outside [0, 1)"));
    }
    check_eps(epsilon)?;
    let qf = q as f64;
    let mut p = RatePoint::new(
        kappa,
        1.0 - entropy_unchecked(qf, kappa) - epsilon,
        ListSizeClass::Constant,
    );
    if kappa >= (qf - 1.0) / qf {
        p.note = Some("deletion fraction at least (q-1)/q");
    }
    Ok(p)
}

/// Rates of random linear codes: the same formulas as the unstructured
/// case, with list size `exp(O(1/ε))`.
pub fn linear_rate_variants(q: u64, gamma: f64, kappa: f64, epsilon: f64) -> Result<RatePoint> {
    let mut p = if q == 2 {
        random_rate_binary(gamma, kappa, epsilon)?
    } else {
        random_rate_q3(q, gamma, kappa, epsilon)?
    };
    p.list_size = ListSizeClass::Exponential;
    Ok(p)
}

/// `1 - κ - ε`, valid once `q = 2^{Ω(1/ε)}`.
pub fn large_q_rate(kappa: f64, epsilon: f64) -> Result<RatePoint> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::Domain("deletion fraction outside [0, 1)"));
    }
    check_eps(epsilon)?;
    Ok(RatePoint::new(kappa, 1.0 - kappa - epsilon, ListSizeClass::Constant))
}

/// Inner rate `f(τ)` at `ε = 0`, and its worst split.
pub fn inner_rate(q: u64, tau: f64, search: Search) -> Result<TauRate> {
    if q == 2 {
        random_rate_tau_binary_with(tau, 0.0, search)
    } else {
        random_rate_tau_q3_with(q, tau, 0.0, search)
    }
}

fn tau_limit(q: u64) -> f64 {
    let qf = q as f64;
    if q == 2 {
        1.5
    } else {
        qf - 1.0 + (qf - 1.0) / qf
    }
}

/// Inverse of the inner-rate map `f` on its initial decreasing segment.
#[derive(Clone, Debug)]
pub struct InnerRateInverse {
    q: u64,
    search: Search,
    taus: Vec<f64>,
    rates: Vec<f64>,
}

impl InnerRateInverse {
    /// Tabulates `f` and keeps the prefix on which it is non-increasing.
    pub fn new(q: u64, search: Search) -> Result<Self> {
        Alphabet::new(q as u32)?;
        let steps = 512;
        // the q-ary curve reaches zero long before its domain ends
        let top = if q == 2 { tau_limit(2) } else { tau_limit(q).min(2.0) };
        let mut taus = Vec::with_capacity(steps + 1);
        let mut rates = Vec::with_capacity(steps + 1);
        for k in 0..=steps {
            let t = top * k as f64 / steps as f64;
            let Ok(r) = inner_rate(q, t, search) else { break };
            if let Some(&prev) = rates.last() {
                if r.point.raw > prev {
                    break;
                }
            }
            taus.push(t);
            rates.push(r.point.raw);
            if r.point.raw < 0.0 {
                break;
            }
        }
        if taus.len() < 2 {
            return Err(Error::Infeasible("inner rate map has no decreasing segment"));
        }
        Ok(InnerRateInverse { q, search, taus, rates })
    }

    pub fn f(&self, tau: f64) -> f64 {
        inner_rate(self.q, tau, self.search).map_or(f64::NEG_INFINITY, |r| r.point.raw)
    }

    /// Largest `τ` on the segment with `f(τ) >= r`; `None` if `r > 1`.
    pub fn invert(&self, r: f64) -> Option<f64> {
        if r > self.rates[0] {
            return None;
        }
        let last = self.rates.len() - 1;
        if r <= self.rates[last] {
            // below the monotone segment: grid inversion
            return Some(self.taus[last]);
        }
        let k = self.rates.partition_point(|&v| v >= r);
        let (lo, hi) = (self.taus[k - 1], self.taus[k]);
        Some(bisect_decreasing(|t| self.f(t), lo, hi, r))
    }

    /// Table-interpolated inverse, cheap enough for dense grids.
    pub fn invert_interpolated(&self, r: f64) -> Option<f64> {
        if r > self.rates[0] {
            return None;
        }
        let last = self.rates.len() - 1;
        if r <= self.rates[last] {
            return Some(self.taus[last]);
        }
        let k = self.rates.partition_point(|&v| v >= r);
        let (t0, t1) = (self.taus[k - 1], self.taus[k]);
        let (r0, r1) = (self.rates[k - 1], self.rates[k]);
        if r0 == r1 {
            return Some(t0);
        }
        Some(t0 + (t1 - t0) * (r0 - r) / (r0 - r1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZyablovQuery {
    pub q: u64,
    pub rate: f64,
    pub epsilon: f64,
    pub grid: usize,
}

impl ZyablovQuery {
    pub fn new(q: u64, rate: f64, epsilon: f64) -> Self {
        ZyablovQuery { q, rate, epsilon, grid: DEFAULT_GRID }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZyablovPoint {
    pub tau: f64,
    pub r_out: f64,
    pub r_in: f64,
    pub tau_in: f64,
}

/// `τ = max (1-R_out) f^{-1}(R_in) - ε` over `R_out R_in = R`.
pub fn zyablov_tau(query: &ZyablovQuery) -> Result<ZyablovPoint> {
    let inv = InnerRateInverse::new(query.q, Search::default())?;
    zyablov_tau_with(query, &inv)
}

/// As [`zyablov_tau`], reusing a tabulated inverse across queries.
pub fn zyablov_tau_with(query: &ZyablovQuery, inv: &InnerRateInverse) -> Result<ZyablovPoint> {
    let r = query.rate;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain("rate outside (0, 1)"));
    }
    check_eps(query.epsilon)?;
    // coarse pass on the interpolated inverse, then exact refinement
    let coarse = |r_out: f64| {
        let t = inv.invert_interpolated(r / r_out)?;
        Some((1.0 - r_out) * t)
    };
    let (x0, _) = maximize(coarse, r, 1.0, query.grid).ok_or(Error::Infeasible("no admissible outer rate"))?;
    let step = (1.0 - r) / query.grid.max(1) as f64;
    let exact = |r_out: f64| {
        let t = inv.invert(r / r_out)?;
        Some((1.0 - r_out) * t)
    };
    let lo = (x0 - 2.0 * step).max(r);
    let hi = (x0 + 2.0 * step).min(1.0);
    let (r_out, value) = maximize(exact, lo, hi, 8).ok_or(Error::Infeasible("no admissible outer rate"))?;
    let r_in = r / r_out;
    let tau_in = inv.invert(r_in).unwrap_or(0.0);
    Ok(ZyablovPoint {
        tau: value - query.epsilon,
        r_out,
        r_in,
        tau_in,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZyablovSplit {
    pub gamma: f64,
    pub kappa: f64,
    pub point: ZyablovPoint,
    pub gamma_in: f64,
    pub kappa_in: f64,
}

/// Insertion and deletion fractions reached by the construction at rate
/// `R`: the outer rate maximising `(1-R_out) τ_in`, and the worst split
/// `(γ_in, κ_in)` of `τ_in`, give `γ = (1-R_out)γ_in - ε` and
/// `κ = (1-R_out)κ_in - ε`, floored at 0.
pub fn zyablov_gamma_kappa(q: u64, rate: f64, epsilon: f64) -> Result<ZyablovSplit> {
    let inv = InnerRateInverse::new(q, Search::default())?;
    zyablov_gamma_kappa_with(q, rate, epsilon, &inv)
}

pub fn zyablov_gamma_kappa_with(
    q: u64,
    rate: f64,
    epsilon: f64,
    inv: &InnerRateInverse,
) -> Result<ZyablovSplit> {
    let point = zyablov_tau_with(&ZyablovQuery::new(q, rate, epsilon), inv)?;
    let split = inner_rate(q, point.tau_in, Search::default())?;
    let scale = 1.0 - point.r_out;
    Ok(ZyablovSplit {
        gamma: (scale * split.gamma - epsilon).max(0.0),
        kappa: (scale * split.kappa - epsilon).max(0.0),
        point,
        gamma_in: split.gamma,
        kappa_in: split.kappa,
    })
}

/// The `q`-word code `{0^{n-k} α^k}` with `k = ⌊δn⌋`, of minimum distance
/// `2k`. The flag reports whether `δn` had to be rounded down.
pub fn sparse_gv_code(q: u32, n: usize, delta: f64) -> Result<(Code, bool)> {
    let alphabet = Alphabet::new(q)?;
    let qf = q as f64;
    if !(delta > (qf - 1.0) / qf && delta < 1.0) {
        return Err(Error::Domain("sparse regime needs (q-1)/q < δ < 1"));
    }
    let exact = delta * n as f64;
    let k = math::floor_tol(exact).max(0) as usize;
    let rounded = math::as_integer(exact).is_none();
    if k == 0 {
        return Err(Error::InvalidParams("δn rounds down to zero"));
    }
    let words = (0..q)
        .map(|a| {
            let mut s = alloc::vec![0; n - k];
            s.extend(core::iter::repeat(a).take(k));
            Word::from_trusted(alphabet, s)
        })
        .collect();
    Ok((Code::new(alphabet, n, words)?, rounded))
}
