//! Brute-force list decoding and certification, and a Reed-Solomon outer
//! code with brute-force list recovery.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{random_rate_binary, random_rate_q3};
use crate::codes::{is_prime, sample_random_code, Code};
use crate::error::{Error, Result};
use crate::math::{self, INT_TOL};
use crate::rng::{Seed, SplitMix64};
use crate::space::for_each_word;
use crate::word::{distance_symbols, Alphabet, Symbol, Word};

/// Largest number of centers an exhaustive certification will visit.
pub const CERTIFY_LIMIT: u128 = 10_000_000;

/// Largest outer code a brute-force list recovery will enumerate.
pub const RECOVER_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub candidates: Vec<Word>,
    pub radius: usize,
}

/// Codewords within `radius` of `r`, in lexicographic order.
pub fn brute_force_list_decode(c: &Code, r: &Word, radius: usize) -> Result<DecodeResult> {
    if r.alphabet() != c.alphabet() {
        return Err(Error::AlphabetMismatch { left: c.q(), right: r.q() });
    }
    let candidates = c
        .words()
        .iter()
        .filter(|x| distance_symbols(x.symbols(), r.symbols()) <= radius)
        .cloned()
        .collect();
    Ok(DecodeResult { candidates, radius })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertifyMode {
    /// Every center of every admissible length.
    Exhaustive,
    /// `k` centers drawn uniformly from the union of admissible lengths, so
    /// length `m` is picked with weight `q^m`.
    Sampled { centers: u64, seed: Seed },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub ok: bool,
    /// The first center found with more than `L` codewords in its ball.
    pub witness: Option<Word>,
    pub centers_checked: u128,
}

fn admissible_lengths(n: usize, tau_n: usize) -> core::ops::RangeInclusive<usize> {
    n.saturating_sub(tau_n)..=n + tau_n
}

fn exceeds(c: &Code, center: &[Symbol], tau_n: usize, l: usize) -> bool {
    let mut count = 0;
    for x in c.words() {
        if distance_symbols(x.symbols(), center) <= tau_n {
            count += 1;
            if count > l {
                return true;
            }
        }
    }
    false
}

/// Checks that every ball of radius `tau_n` around a center of length
/// `m ∈ [max(0, n - tau_n), n + tau_n]` holds at most `l` codewords.
///
/// Exhaustive mode visits lengths in increasing order and centers
/// lexicographically, so the witness is the first violation in that order.
pub fn certify_list_decodable(c: &Code, tau_n: usize, l: usize, mode: CertifyMode) -> Result<Certificate> {
    let alphabet = c.alphabet();
    let n = c.n();
    let mut total: u128 = 0;
    for m in admissible_lengths(n, tau_n) {
        let k = alphabet.count_words(m).unwrap_or(u128::MAX);
        total = total.saturating_add(k);
    }
    match mode {
        CertifyMode::Exhaustive => {
            if total > CERTIFY_LIMIT {
                return Err(Error::Capacity { needed: total, limit: CERTIFY_LIMIT });
            }
            let mut checked = 0u128;
            for m in admissible_lengths(n, tau_n) {
                let mut witness = None;
                for_each_word(alphabet, m, |r| {
                    if witness.is_some() {
                        return;
                    }
                    checked += 1;
                    if exceeds(c, r, tau_n, l) {
                        witness = Some(Word::from_trusted(alphabet, r.to_vec()));
                    }
                });
                if witness.is_some() {
                    return Ok(Certificate { ok: false, witness, centers_checked: checked });
                }
            }
            Ok(Certificate { ok: true, witness: None, centers_checked: checked })
        }
        CertifyMode::Sampled { centers, seed } => {
            let mut rng = SplitMix64::new(seed);
            for i in 0..centers {
                let r = sample_center(alphabet, n, tau_n, total, &mut rng);
                if exceeds(c, r.symbols(), tau_n, l) {
                    return Ok(Certificate {
                        ok: false,
                        witness: Some(r),
                        centers_checked: i as u128 + 1,
                    });
                }
            }
            Ok(Certificate { ok: true, witness: None, centers_checked: centers as u128 })
        }
    }
}

fn sample_center(alphabet: Alphabet, n: usize, tau_n: usize, total: u128, rng: &mut SplitMix64) -> Word {
    let mut idx = rng.below_u128(total);
    for m in admissible_lengths(n, tau_n) {
        let k = alphabet.count_words(m).unwrap_or(u128::MAX);
        if idx < k {
            return Word::from_index(alphabet, m, idx);
        }
        idx -= k;
    }
    unreachable!("index below the union size")
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExperimentParams {
    pub q: u32,
    pub n: usize,
    pub gamma: f64,
    pub kappa: f64,
    pub epsilon: f64,
    pub trials: usize,
    /// Centers sampled per trial.
    pub centers: u64,
    pub seed: Seed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub params: ExperimentParams,
    pub rate: f64,
    pub code_size: usize,
    pub tau_n: usize,
    pub list_size: usize,
    pub failures: usize,
    pub witnesses: Vec<Word>,
}

impl ExperimentReport {
    pub fn failure_fraction(&self) -> f64 {
        if self.params.trials == 0 {
            0.0
        } else {
            self.failures as f64 / self.params.trials as f64
        }
    }
}

/// Samples codes at the rate the formulas promise and checks list
/// decodability on sampled centers with `L = ⌈(1+τ)/ε⌉ - 1`.
///
/// The code size is `⌊q^{Rn}⌋` clipped to `[1, q^n]` and the radius is
/// `⌊(γ+κ)n⌋`. Trial `t` samples its code from `seed.derive(2t)` and its
/// centers from `seed.derive(2t+1)`.
pub fn monte_carlo_rate_experiment(p: &ExperimentParams) -> Result<ExperimentReport> {
    let alphabet = Alphabet::new(p.q)?;
    if !(p.epsilon > 0.0 && p.epsilon < 1.0) {
        return Err(Error::Domain("epsilon outside (0, 1)"));
    }
    let rate = if p.q == 2 {
        random_rate_binary(p.gamma, p.kappa, p.epsilon)?.rate
    } else {
        random_rate_q3(p.q as u64, p.gamma, p.kappa, p.epsilon)?.rate
    };
    let space = alphabet.count_words(p.n).unwrap_or(u128::MAX);
    let want = math::floor(libm::exp(rate * p.n as f64 * math::ln(p.q as f64)) + INT_TOL);
    let code_size = (want.max(1.0) as u128).min(space).min(usize::MAX as u128) as usize;
    let tau = p.gamma + p.kappa;
    let tau_n = math::floor_tol(tau * p.n as f64).max(0) as usize;
    let list_size = (math::ceil_tol((1.0 + tau) / p.epsilon) - 1).max(0) as usize;
    let mut failures = 0;
    let mut witnesses = Vec::new();
    for t in 0..p.trials as u64 {
        let code = sample_random_code(p.q, p.n, code_size, p.seed.derive(2 * t))?;
        let mode = CertifyMode::Sampled { centers: p.centers, seed: p.seed.derive(2 * t + 1) };
        let cert = certify_list_decodable(&code, tau_n, list_size, mode)?;
        if !cert.ok {
            failures += 1;
            witnesses.extend(cert.witness);
        }
    }
    Ok(ExperimentReport { params: *p, rate, code_size, tau_n, list_size, failures, witnesses })
}

/// Reed-Solomon code over the prime field `F_p`: messages are coefficient
/// vectors of polynomials of degree `< k`, evaluated at `points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSCode {
    p: u64,
    k: usize,
    points: Vec<u64>,
}

impl RSCode {
    pub fn new(p: u64, k: usize, points: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::UnsupportedField(p));
        }
        if k == 0 || k > points.len() {
            return Err(Error::InvalidParams("need 1 <= K <= N"));
        }
        if points.iter().any(|&x| x >= p) || points.iter().collect::<BTreeSet<_>>().len() != points.len() {
            return Err(Error::InvalidParams("evaluation points must be distinct field elements"));
        }
        Ok(RSCode { p, k, points })
    }

    /// Evaluation at `0, 1, .., n-1`.
    pub fn with_standard_points(p: u64, n: usize, k: usize) -> Result<Self> {
        RSCode::new(p, k, (0..n as u64).collect())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Code length `N`.
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }

    /// `p^K`, the number of codewords, if it fits.
    pub fn size(&self) -> Option<u128> {
        crate::math::checked_pow(self.p, self.k as u64)
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n() as f64
    }

    /// Whether `v` is the encoding of some message.
    pub fn is_codeword(&self, v: &[u64]) -> bool {
        if v.len() != self.n() || v.iter().any(|&x| x >= self.p) {
            return false;
        }
        // interpolate through the first K points and compare the rest
        let msg = self.interpolate(&v[..self.k]);
        rs_encode_unchecked(self, &msg) == v
    }

    /// Coefficients of the polynomial of degree `< K` through
    /// `(points[i], values[i])`, `i < K`.
    fn interpolate(&self, values: &[u64]) -> Vec<u64> {
        let p = self.p;
        let xs = &self.points[..self.k];
        let mut coeffs = vec![0u64; self.k];
        for (i, (&xi, &yi)) in xs.iter().zip(values).enumerate() {
            // Lagrange basis polynomial for xi
            let mut basis = vec![1u64];
            let mut denom = 1u64;
            for (j, &xj) in xs.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![0u64; basis.len() + 1];
                for (d, &b) in basis.iter().enumerate() {
                    next[d + 1] = (next[d + 1] + b) % p;
                    next[d] = (next[d] + b * ((p - xj) % p)) % p;
                }
                basis = next;
                denom = denom * ((xi + p - xj) % p) % p;
            }
            let scale = yi * crate::codes::inv_mod(denom, p) % p;
            for (c, b) in coeffs.iter_mut().zip(&basis) {
                *c = (*c + scale * b) % p;
            }
        }
        coeffs
    }
}

fn rs_encode_unchecked(code: &RSCode, message: &[u64]) -> Vec<u64> {
    let p = code.p;
    code.points
        .iter()
        .map(|&x| message.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p))
        .collect()
}

/// Evaluations of `Σ message[i] x^i` at the code's points.
pub fn rs_encode(code: &RSCode, message: &[u64]) -> Result<Vec<u64>> {
    if message.len() != code.k {
        return Err(Error::LengthMismatch { expected: code.k, found: message.len() });
    }
    if let Some(&bad) = message.iter().find(|&&c| c >= code.p) {
        return Err(Error::SymbolOutOfRange { symbol: bad as u32, q: code.p as u32 });
    }
    Ok(rs_encode_unchecked(code, message))
}

/// Candidate symbol sets `A_1, .., A_N`, one per outer position.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositionLists {
    pub lists: Vec<BTreeSet<u64>>,
}

impl PositionLists {
    pub fn new(n: usize) -> Self {
        PositionLists { lists: vec![BTreeSet::new(); n] }
    }

    /// `Σ |A_i|`.
    pub fn total(&self) -> usize {
        self.lists.iter().map(BTreeSet::len).sum()
    }

    /// Number of positions `i` with `v_i ∈ A_i`.
    pub fn agreement(&self, v: &[u64]) -> usize {
        self.lists.iter().zip(v).filter(|(a, x)| a.contains(x)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    /// Messages of the recovered codewords, lexicographic.
    pub messages: Vec<Vec<u64>>,
    pub codewords: Vec<Vec<u64>>,
    /// `Σ |A_i|` of the input lists.
    pub total_list_size: usize,
}

/// All codewords agreeing with the lists on at least `α N` positions, by
/// enumeration of the `p^K` messages.
pub fn brute_force_list_recover(code: &RSCode, lists: &PositionLists, alpha: f64) -> Result<Recovery> {
    if lists.lists.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), found: lists.lists.len() });
    }
    if lists.lists.iter().flatten().any(|&s| s >= code.p) {
        return Err(Error::InvalidParams("list symbol outside the outer alphabet"));
    }
    let size = code.size().unwrap_or(u128::MAX);
    if size > RECOVER_LIMIT {
        return Err(Error::Capacity { needed: size, limit: RECOVER_LIMIT });
    }
    let need = alpha * code.n() as f64 - INT_TOL;
    let mut messages = Vec::new();
    let mut codewords = Vec::new();
    let mut msg = vec![0u64; code.k];
    loop {
        let cw = rs_encode_unchecked(code, &msg);
        if lists.agreement(&cw) as f64 >= need {
            messages.push(msg.clone());
            codewords.push(cw);
        }
        // odometer over messages, last coefficient fastest
        let mut i = code.k;
        loop {
            if i == 0 {
                return Ok(Recovery { messages, codewords, total_list_size: lists.total() });
            }
            i -= 1;
            msg[i] += 1;
            if msg[i] < code.p {
                break;
            }
            msg[i] = 0;
        }
    }
}
