//! Concatenated code with indexed inner blocks and its windowed list
//! decoder.
//!
//! An outer Reed-Solomon codeword `(c_1, .., c_N)` over `F_p` is encoded
//! block by block: block `i` carries `φ_in(index(i), c_i)` where
//! `index(i) = ((i-1) mod P) + 1` and `P = ε_cont·N`. The inner encoder is a
//! table of `P·p` distinct words of length `n`.
//!
//! The decoder scans a grid of windows of the received word whose start and
//! length are multiples of `h = τ̂n` (`τ̂ = τ_in - τ*`), list decodes each
//! window against the inner table, and files each surviving symbol into the
//! outer positions `j = 1 + (index-1) + j_N·P` that the window could
//! correspond to. The position lists then go to outer list recovery.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::codes::sample_distinct_words;
use crate::decode::{brute_force_list_recover, rs_encode, PositionLists, RSCode};
use crate::error::{Error, Result};
use crate::math::{self, INT_TOL};
use crate::rng::{Seed, SplitMix64};
use crate::word::{distance_symbols, Alphabet, Word};

/// Scalar parameters of the construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConcatParams {
    /// Outer length `N`.
    pub big_n: usize,
    /// Inner length `n`.
    pub n: usize,
    pub q: u32,
    /// Outer field order.
    pub p: u64,
    /// Outer dimension `K`.
    pub k: usize,
    pub eps_cont: f64,
    pub tau_in: f64,
    pub tau_star: f64,
    pub alpha_out: f64,
    pub eps_conc: f64,
}

impl ConcatParams {
    /// Number of distinct block indices, `ε_cont·N`.
    pub fn period(&self) -> Result<usize> {
        match math::as_integer(self.eps_cont * self.big_n as f64) {
            Some(p) if p >= 1 && p as usize <= self.big_n => Ok(p as usize),
            _ => Err(Error::InvalidParams("ε_cont·N must be an integer in [1, N]")),
        }
    }

    pub fn tau_hat(&self) -> f64 {
        self.tau_in - self.tau_star
    }

    /// Window grid step `τ̂n`.
    pub fn grid_step(&self) -> Result<usize> {
        match math::as_integer(self.tau_hat() * self.n as f64) {
            Some(h) if h >= 1 => Ok(h as usize),
            _ => Err(Error::InvalidParams("τ̂n must be a positive integer")),
        }
    }

    /// Guaranteed decoding fraction `τ = (1-α_out)τ_in - ε_conc`.
    pub fn tau(&self) -> f64 {
        (1.0 - self.alpha_out) * self.tau_in - self.eps_conc
    }

    /// `⌊τnN⌋`, the number of edits the decoder is guaranteed to survive.
    pub fn budget(&self) -> usize {
        math::floor_tol(self.tau() * (self.n * self.big_n) as f64).max(0) as usize
    }

    pub fn validate(&self) -> Result<()> {
        Alphabet::new(self.q)?;
        if self.big_n == 0 || self.n == 0 {
            return Err(Error::InvalidParams("lengths must be positive"));
        }
        if self.k == 0 || self.k > self.big_n || self.big_n as u64 > self.p {
            return Err(Error::InvalidParams("need 1 <= K <= N <= p"));
        }
        if !(0.0 < self.tau_star && self.tau_star < self.tau_in) {
            return Err(Error::InvalidParams("need 0 < τ* < τ_in"));
        }
        if !(0.0 < self.alpha_out && self.alpha_out <= 1.0) {
            return Err(Error::InvalidParams("α_out must lie in (0, 1]"));
        }
        if self.eps_conc < 0.0 {
            return Err(Error::InvalidParams("ε_conc must be nonnegative"));
        }
        if self.tau() < 0.0 {
            return Err(Error::InvalidParams("(1-α_out)τ_in - ε_conc is negative"));
        }
        self.period()?;
        self.grid_step()?;
        Ok(())
    }
}

/// Where the inner table comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerSource {
    /// `P·p` distinct words sampled with [`sample_distinct_words`].
    Seeded(Seed),
    /// Explicit table, slot `(index-1)·p + α`.
    Words(Vec<Word>),
}

/// The inner encoder `φ_in : [P] × F_p → Σ_q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerCode {
    p: u64,
    period: usize,
    table: Vec<Word>,
}

impl InnerCode {
    pub fn encode(&self, index: usize, symbol: u64) -> Result<&Word> {
        if index == 0 || index > self.period || symbol >= self.p {
            return Err(Error::InvalidParams("inner encoder domain miss"));
        }
        Ok(&self.table[(index - 1) * self.p as usize + symbol as usize])
    }

    pub fn table(&self) -> &[Word] {
        &self.table
    }

    /// `(index, symbol, word)` over the whole domain.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, &Word)> + '_ {
        let p = self.p as usize;
        self.table.iter().enumerate().map(move |(k, w)| (k / p + 1, (k % p) as u64, w))
    }
}

/// A validated instance: parameters, outer code and inner table.
#[derive(Clone, Debug)]
pub struct ConcatCode {
    params: ConcatParams,
    outer: RSCode,
    inner: InnerCode,
    period: usize,
    step: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Window {
    /// Start offset `Φ`; the window is `r[Φ+1 ..= Φ+Λ]`.
    pub phi: usize,
    /// Length `Λ`, truncated at the end of the received word.
    pub len: usize,
}

impl ConcatCode {
    pub fn new(params: ConcatParams, inner: InnerSource) -> Result<Self> {
        params.validate()?;
        let alphabet = Alphabet::new(params.q)?;
        let period = params.period()?;
        let step = params.grid_step()?;
        let outer = RSCode::with_standard_points(params.p, params.big_n, params.k)?;
        let size = period * params.p as usize;
        let table = match inner {
            InnerSource::Seeded(seed) => sample_distinct_words(alphabet, params.n, size, seed)?,
            InnerSource::Words(words) => {
                if words.len() != size {
                    return Err(Error::LengthMismatch { expected: size, found: words.len() });
                }
                for w in &words {
                    if w.alphabet() != alphabet {
                        return Err(Error::AlphabetMismatch { left: params.q, right: w.q() });
                    }
                    if w.len() != params.n {
                        return Err(Error::LengthMismatch { expected: params.n, found: w.len() });
                    }
                }
                if words.iter().collect::<BTreeSet<_>>().len() != words.len() {
                    return Err(Error::InvalidParams("inner encoder must be injective"));
                }
                words
            }
        };
        Ok(ConcatCode {
            params,
            outer,
            inner: InnerCode { p: params.p, period, table },
            period,
            step,
        })
    }

    pub fn params(&self) -> &ConcatParams {
        &self.params
    }

    pub fn outer(&self) -> &RSCode {
        &self.outer
    }

    pub fn inner(&self) -> &InnerCode {
        &self.inner
    }

    /// `P = ε_cont·N`.
    pub fn period(&self) -> usize {
        self.period
    }

    /// `h = τ̂n`.
    pub fn grid_step(&self) -> usize {
        self.step
    }

    /// `nN`.
    pub fn length(&self) -> usize {
        self.params.n * self.params.big_n
    }

    /// `((i-1) mod P) + 1` for the 1-based block `i`.
    pub fn block_index(&self, i: usize) -> usize {
        (i - 1) % self.period + 1
    }

    fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.params.q).expect("validated")
    }

    /// Concatenation of `φ_in(index(i), c_i)`.
    pub fn encode(&self, outer_codeword: &[u64]) -> Result<Word> {
        if outer_codeword.len() != self.params.big_n {
            return Err(Error::LengthMismatch { expected: self.params.big_n, found: outer_codeword.len() });
        }
        if !self.outer.is_codeword(outer_codeword) {
            return Err(Error::NotACodeword);
        }
        let mut out = Word::empty(self.alphabet());
        for (i, &c) in outer_codeword.iter().enumerate() {
            out.extend_from(self.inner.encode(self.block_index(i + 1), c)?)?;
        }
        Ok(out)
    }

    pub fn encode_message(&self, message: &[u64]) -> Result<Word> {
        self.encode(&rs_encode(&self.outer, message)?)
    }

    /// Admissible received lengths `[max(0, (1-τ)nN), (1+τ)nN]`.
    pub fn received_length_range(&self) -> (usize, usize) {
        let nn = self.length() as f64;
        let tau = self.params.tau();
        let lo = math::ceil_tol(((1.0 - tau) * nn).max(0.0)).max(0) as usize;
        let hi = math::floor_tol((1.0 + tau) * nn).max(0) as usize;
        (lo, hi)
    }

    /// The grid `S` of windows for a received word of length `m`:
    /// `Φ = λh`, `Λ = μh` with
    /// `0 <= λ <= 1 + (m/n - max(0, 1-τ*))/τ̂` and
    /// `max(0, (1-τ*)/τ̂) <= μ <= 1 + (1+τ*)/τ̂`.
    /// Windows starting past the end are dropped and those running past it
    /// are truncated; duplicates after truncation are merged.
    pub fn build_windows(&self, m: usize) -> Vec<Window> {
        let p = &self.params;
        let th = p.tau_hat();
        let h = self.step;
        let lam_max = math::floor_tol(1.0 + (m as f64 / p.n as f64 - (1.0 - p.tau_star).max(0.0)) / th);
        let mu_min = math::ceil_tol(((1.0 - p.tau_star) / th).max(0.0)).max(0) as usize;
        let mu_max = math::floor_tol(1.0 + (1.0 + p.tau_star) / th);
        let mut out = BTreeSet::new();
        if lam_max < 0 || mu_max < mu_min as i64 {
            return Vec::new();
        }
        for lambda in 0..=lam_max as usize {
            let phi = lambda * h;
            if phi > m {
                break;
            }
            for mu in mu_min..=mu_max as usize {
                out.insert(Window { phi, len: (mu * h).min(m - phi) });
            }
        }
        out.into_iter().collect()
    }

    /// Block-position offsets `j_N` such that a window at `(sp, len)` of a
    /// length-`m` received word decoding to inner index `index` can stand
    /// for block `j = 1 + (index-1) + j_N·P`.
    ///
    /// With `x = sp - (j-1)n`, `y = len - n`, `Δ = m - nN` and `T = τnN`, the
    /// requirements on `(sp, len)` reduce to `|y| <= τ_in n`,
    /// `sp + len <= m` and `|x| + |y| + |Δ - x - y| <= T`. The last one holds
    /// iff `|Δ - y| + |y| <= T` and
    /// `(Δ-T)/2 + max(-y, 0) <= x <= (Δ+T)/2 + min(-y, 0)`, which is the
    /// interval for `j_N` below.
    pub fn feasible_jn(&self, index: usize, sp: usize, len: usize, m: usize) -> Vec<usize> {
        let p = &self.params;
        let n = p.n as f64;
        let y = len as f64 - n;
        if y.abs() > p.tau_in * n + INT_TOL || sp + len > m {
            return Vec::new();
        }
        let t = p.tau() * (p.n * p.big_n) as f64;
        let delta = m as f64 - (p.n * p.big_n) as f64;
        if (delta - y).abs() + y.abs() > t + INT_TOL {
            return Vec::new();
        }
        let low_x = (delta - t) / 2.0 + (-y).max(0.0);
        let high_x = (delta + t) / 2.0 + (-y).min(0.0);
        let i_prime = (index - 1) as f64;
        let unit = (self.period * p.n) as f64;
        let base = sp as f64 - i_prime * n;
        let lo = math::ceil_tol((base - high_x) / unit).max(0);
        let hi = math::floor_tol((base - low_x) / unit);
        let mut out = Vec::new();
        let mut jn = lo;
        while jn <= hi {
            let j = 1 + (index - 1) + jn as usize * self.period;
            if j > p.big_n {
                break;
            }
            out.push(jn as usize);
            jn += 1;
        }
        out
    }

    /// Block position for `(index, j_N)`.
    pub fn position(&self, index: usize, jn: usize) -> usize {
        1 + (index - 1) + jn * self.period
    }

    /// Runs the windowed list decoder on `r`.
    pub fn list_decode(&self, r: &Word) -> Result<ConcatDecoding> {
        let p = &self.params;
        if r.alphabet() != self.alphabet() {
            return Err(Error::AlphabetMismatch { left: p.q, right: r.q() });
        }
        let m = r.len();
        let (lo, hi) = self.received_length_range();
        if m < lo || m > hi {
            return Err(Error::LengthMismatch { expected: self.length(), found: m });
        }
        let windows = self.build_windows(m);
        let radius = math::floor_tol(p.tau_in * p.n as f64).max(0) as usize;
        let mut lists = PositionLists::new(p.big_n);
        let mut max_inner_list = 0;
        for w in &windows {
            let s = &r.symbols()[w.phi..w.phi + w.len];
            let mut hits = 0;
            for (index, symbol, cw) in self.inner.entries() {
                if distance_symbols(cw.symbols(), s) > radius {
                    continue;
                }
                hits += 1;
                for jn in self.feasible_jn(index, w.phi, w.len, m) {
                    lists.lists[self.position(index, jn) - 1].insert(symbol);
                }
            }
            max_inner_list = max_inner_list.max(hits);
        }
        let positions_per_hit = math::floor_tol(p.tau() / p.eps_cont).max(0) as usize + 1;
        let list_budget = windows.len() * max_inner_list * positions_per_hit;
        debug_assert!(lists.total() <= list_budget);
        let recovery = brute_force_list_recover(&self.outer, &lists, p.alpha_out)?;
        let codewords = recovery
            .codewords
            .iter()
            .map(|cw| self.encode(cw))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConcatDecoding {
            codewords,
            outer: recovery.codewords,
            messages: recovery.messages,
            windows: windows.len(),
            max_inner_list,
            total_list_size: lists.total(),
            list_budget,
            lists,
        })
    }

    /// Blocks `i` with `d(v_i, w_i) <= τ*n`, where `w_i` are the consecutive
    /// segments of `r` with the given lengths.
    pub fn good_index_count(&self, c: &Word, r: &Word, block_lengths: &[usize]) -> Result<usize> {
        let p = &self.params;
        if c.len() != self.length() || block_lengths.len() != p.big_n {
            return Err(Error::LengthMismatch { expected: self.length(), found: c.len() });
        }
        let total: usize = block_lengths.iter().sum();
        if total != r.len() {
            return Err(Error::LengthMismatch { expected: total, found: r.len() });
        }
        let limit = p.tau_star * p.n as f64 + INT_TOL;
        let mut start = 0;
        let mut good = 0;
        for (i, &len) in block_lengths.iter().enumerate() {
            let v = &c.symbols()[i * p.n..(i + 1) * p.n];
            let w = &r.symbols()[start..start + len];
            if distance_symbols(v, w) as f64 <= limit {
                good += 1;
            }
            start += len;
        }
        Ok(good)
    }

    /// Rate accounting for the instance.
    pub fn rates(&self) -> ConcatRates {
        let p = &self.params;
        let q = p.q as f64;
        let n = p.n as f64;
        let big_n = p.big_n as f64;
        let r_out = p.k as f64 / big_n;
        let r_in = math::log_base((self.period as u64 * p.p) as f64, q) / n;
        let r_conc = p.k as f64 * math::log_base(p.p as f64, q) / (n * big_n);
        // p = N^{2m} and P = ε_cont·N
        let m = math::ln(p.p as f64) / (2.0 * math::ln(big_n));
        let r_conc_alt = if big_n > 1.0 {
            r_out / (1.0 + 1.0 / (2.0 * m)) * (r_in - math::log_base(p.eps_cont, q) / n)
        } else {
            r_conc
        };
        ConcatRates { r_out, r_in, r_conc, r_conc_alt, m, epsilon: r_out * r_in - r_conc }
    }
}

/// Output of [`ConcatCode::list_decode`].
#[derive(Clone, Debug)]
pub struct ConcatDecoding {
    /// Concatenated codewords, ordered by outer message.
    pub codewords: Vec<Word>,
    pub outer: Vec<Vec<u64>>,
    pub messages: Vec<Vec<u64>>,
    /// `|S|`.
    pub windows: usize,
    /// Largest number of inner codewords matched by a single window.
    pub max_inner_list: usize,
    /// `Σ |A_i|`.
    pub total_list_size: usize,
    /// `|S| · max_inner_list · (⌊τ/ε_cont⌋ + 1)`.
    pub list_budget: usize,
    pub lists: PositionLists,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConcatRates {
    pub r_out: f64,
    pub r_in: f64,
    /// `K log_q p / (nN)`.
    pub r_conc: f64,
    /// `R_out / (1 + 1/(2m)) · (R_in - log_q(ε_cont)/n)`.
    pub r_conc_alt: f64,
    /// `m` with `p = N^{2m}`.
    pub m: f64,
    /// `R_out R_in - R_conc`.
    pub epsilon: f64,
}

/// Grid window from the alignment argument: writing `sp = a·h + s` and
/// `len = b·h + l` with `0 <= s, l < h`, the window is `(a·h, (b+1)·h)` when
/// `s + l < h` and `((a+1)·h, b·h)` otherwise; aligned inputs map to
/// themselves.
pub fn align_window(sp: usize, len: usize, h: usize) -> Window {
    assert!(h > 0, "grid step must be positive");
    let (a, s) = (sp / h, sp % h);
    let (b, l) = (len / h, len % h);
    if s == 0 && l == 0 {
        Window { phi: sp, len }
    } else if s + l < h {
        Window { phi: a * h, len: (b + 1) * h }
    } else {
        Window { phi: (a + 1) * h, len: b * h }
    }
}

/// Distributes `total` edits over `blocks` blocks one unit at a time, each
/// to a uniform block that still has room under `2·block_len`.
pub fn spread_budget(total: usize, blocks: usize, block_len: usize, seed: Seed) -> Result<Vec<usize>> {
    if total > 2 * block_len * blocks {
        return Err(Error::InvalidParams("budget exceeds channel capacity"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut out = alloc::vec![0usize; blocks];
    for _ in 0..total {
        loop {
            let b = rng.below(blocks as u64) as usize;
            if out[b] < 2 * block_len {
                out[b] += 1;
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn desk() -> ConcatParams {
        ConcatParams {
            big_n: 6,
            n: 8,
            q: 2,
            p: 7,
            k: 2,
            eps_cont: 0.5,
            tau_in: 0.5,
            tau_star: 0.375,
            alpha_out: 0.5,
            eps_conc: 0.125,
        }
    }

    #[test]
    fn indices() {
        let c = ConcatCode::new(desk(), InnerSource::Seeded(Seed(1))).unwrap();
        assert_eq!(c.period(), 3);
        assert_eq!(c.block_index(4), 1);
        assert_eq!(c.block_index(1), c.block_index(1 + 3));
        assert!((c.params().tau() - 0.125).abs() < 1e-12);
    }

    #[test]
    fn single_block_encoding() {
        let mut p = desk();
        p.big_n = 1;
        p.k = 1;
        p.eps_cont = 1.0;
        let c = ConcatCode::new(p, InnerSource::Seeded(Seed(2))).unwrap();
        let w = c.encode(&[5]).unwrap();
        assert_eq!(&w, c.inner().encode(1, 5).unwrap());
    }

    #[test]
    fn rejects_bad_params() {
        let mut p = desk();
        p.eps_cont = 0.3;
        assert!(ConcatCode::new(p, InnerSource::Seeded(Seed(0))).is_err());
        let mut p = desk();
        p.tau_star = 0.4;
        assert!(ConcatCode::new(p, InnerSource::Seeded(Seed(0))).is_err());
        let c = ConcatCode::new(desk(), InnerSource::Seeded(Seed(0))).unwrap();
        assert_eq!(c.encode(&[1, 2, 3, 4, 5, 0]), Err(Error::NotACodeword));
    }

    #[test]
    fn window_grid_example() {
        let p = ConcatParams {
            big_n: 4,
            n: 4,
            q: 2,
            p: 5,
            k: 1,
            eps_cont: 0.25,
            tau_in: 0.5,
            tau_star: 0.25,
            alpha_out: 0.5,
            eps_conc: 0.0,
        };
        let c = ConcatCode::new(p, InnerSource::Seeded(Seed(0))).unwrap();
        let ws = c.build_windows(10);
        assert!(ws.iter().all(|w| w.phi <= 8 && w.phi + w.len <= 10));
        assert!(ws.contains(&Window { phi: 0, len: 3 }));
        assert!(ws.contains(&Window { phi: 0, len: 6 }));
        assert!(ws.contains(&Window { phi: 8, len: 2 }));
        assert!(!ws.contains(&Window { phi: 0, len: 2 }));
        assert!(!ws.contains(&Window { phi: 0, len: 7 }));
    }

    #[test]
    fn alignment_cases() {
        assert_eq!(align_window(4, 6, 2), Window { phi: 4, len: 6 });
        assert_eq!(align_window(1, 3, 2), Window { phi: 2, len: 2 });
        assert_eq!(align_window(1, 2, 2), Window { phi: 0, len: 4 });
    }

    #[test]
    fn jn_examples() {
        let c = ConcatCode::new(desk(), InnerSource::Seeded(Seed(0))).unwrap();
        // inner index 2, window over block 2 of an error-free word
        assert_eq!(c.feasible_jn(2, 8, 8, 48), vec![0]);
        for j in 1..=6 {
            let idx = c.block_index(j);
            let jns = c.feasible_jn(idx, (j - 1) * 8, 8, 48);
            assert_eq!(jns.iter().map(|&x| c.position(idx, x)).collect::<Vec<_>>(), vec![j]);
        }
        assert!(c.feasible_jn(1, 0, 20, 48).is_empty());
    }

    #[test]
    fn zero_error_roundtrip() {
        let c = ConcatCode::new(desk(), InnerSource::Seeded(Seed(4))).unwrap();
        let msg = [3, 6];
        let w = c.encode_message(&msg).unwrap();
        let out = c.list_decode(&w).unwrap();
        assert!(out.codewords.contains(&w));
        assert!(out.total_list_size <= out.list_budget);
        let lens = vec![8; 6];
        assert_eq!(c.good_index_count(&w, &w, &lens).unwrap(), 6);
    }

    #[test]
    fn rate_forms_agree() {
        let c = ConcatCode::new(desk(), InnerSource::Seeded(Seed(0))).unwrap();
        let r = c.rates();
        assert!((r.r_conc - r.r_conc_alt).abs() < 1e-12);
        assert!(r.epsilon >= 0.0);
    }

    #[test]
    fn spread_budget_totals() {
        let b = spread_budget(7, 4, 2, Seed(3)).unwrap();
        assert_eq!(b.iter().sum::<usize>(), 7);
        assert!(b.iter().all(|&x| x <= 4));
        assert!(spread_budget(17, 4, 2, Seed(3)).is_err());
    }
}
