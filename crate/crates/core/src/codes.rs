//! Codes, their statistics, and seeded samplers.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::log_base;
use crate::rng::{Seed, SplitMix64};
use crate::space::for_each_word;
use crate::word::{distance_symbols, Alphabet, Symbol, Word};

/// Largest space a greedy scan or span enumeration will walk.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

/// A set of distinct words of a common length, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Code {
    alphabet: Alphabet,
    n: usize,
    words: Vec<Word>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CodeStats {
    pub rate: f64,
    pub min_dist: usize,
    pub rel_dist: f64,
}

impl Code {
    /// Sorts and deduplicates `words`; every word must have length `n` over
    /// `alphabet`.
    pub fn new(alphabet: Alphabet, n: usize, mut words: Vec<Word>) -> Result<Self> {
        for w in &words {
            if w.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch { left: alphabet.size(), right: w.q() });
            }
            if w.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: w.len() });
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(Code { alphabet, n, words })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u32 {
        self.alphabet.size()
    }

    /// Codeword length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Smallest pairwise insdel distance.
    pub fn min_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedMinDistance);
        }
        let mut best = usize::MAX;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                best = best.min(distance_symbols(a.symbols(), b.symbols()));
            }
        }
        Ok(best)
    }

    /// `R = log_q M / n`, `d`, and `δ = d / 2n`.
    pub fn stats(&self) -> Result<CodeStats> {
        let min_dist = self.min_distance()?;
        let n = self.n as f64;
        let rate = if self.n == 0 {
            0.0
        } else {
            log_base(self.words.len() as f64, self.q() as f64) / n
        };
        let rel_dist = if self.n == 0 { 0.0 } else { min_dist as f64 / (2.0 * n) };
        Ok(CodeStats { rate, min_dist, rel_dist })
    }
}

pub fn code_stats(c: &Code) -> Result<CodeStats> {
    c.stats()
}

fn space_size(alphabet: Alphabet, n: usize) -> u128 {
    alphabet.count_words(n).unwrap_or(u128::MAX)
}

/// `m` distinct words of length `n`, in the order they were drawn.
///
/// Each draw is a uniform index in `0..q^n` (see [`SplitMix64::below_u128`])
/// mapped to the word with that base-`q` expansion; repeats are discarded.
pub fn sample_distinct_words(alphabet: Alphabet, n: usize, m: usize, seed: Seed) -> Result<Vec<Word>> {
    let total = space_size(alphabet, n);
    if m as u128 > total {
        return Err(Error::Capacity { needed: m as u128, limit: total });
    }
    let mut rng = SplitMix64::new(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let idx = rng.below_u128(total);
        if seen.insert(idx) {
            out.push(Word::from_index(alphabet, n, idx));
        }
    }
    Ok(out)
}

/// A code of `m` distinct uniformly drawn words.
pub fn sample_random_code(q: u32, n: usize, m: usize, seed: Seed) -> Result<Code> {
    let alphabet = Alphabet::new(q)?;
    let words = sample_distinct_words(alphabet, n, m, seed)?;
    Code::new(alphabet, n, words)
}

/// A linear code over a prime field: its span and the generators used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    pub code: Code,
    pub generators: Vec<Word>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Row-echelon basis mod `p` with insertion of new rows.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    /// Adds `v` if it is independent of the stored rows.
    fn try_add(&mut self, v: &[Symbol]) -> bool {
        let p = self.p;
        let mut v: Vec<u64> = v.iter().map(|&s| s as u64).collect();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + p - c * r % p) % p;
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pivot], p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = (*x + p - c * r % p) % p;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// `k` independent generators drawn uniformly with rejection, and their span.
pub fn sample_random_linear_code(q: u32, n: usize, k: usize, seed: Seed) -> Result<LinearCode> {
    let alphabet = Alphabet::new(q)?;
    if !is_prime(q as u64) {
        return Err(Error::UnsupportedField(q as u64));
    }
    if k > n {
        return Err(Error::InvalidParams("dimension exceeds length"));
    }
    let size = space_size(alphabet, k);
    if size > ENUMERATION_LIMIT {
        return Err(Error::Capacity { needed: size, limit: ENUMERATION_LIMIT });
    }
    let mut rng = SplitMix64::new(seed);
    let mut basis = Echelon { p: q as u64, rows: Vec::new() };
    let mut generators = Vec::with_capacity(k);
    while generators.len() < k {
        let v: Vec<Symbol> = (0..n).map(|_| rng.below(q as u64) as Symbol).collect();
        if basis.try_add(&v) {
            generators.push(Word::from_trusted(alphabet, v));
        }
    }
    let mut words = Vec::with_capacity(size as usize);
    for_each_word(alphabet, k, |coeffs| {
        let mut acc = vec![0u64; n];
        for (c, g) in coeffs.iter().zip(&generators) {
            for (a, &s) in acc.iter_mut().zip(g.symbols()) {
                *a = (*a + *c as u64 * s as u64) % q as u64;
            }
        }
        words.push(Word::from_trusted(alphabet, acc.into_iter().map(|x| x as Symbol).collect()));
    });
    Ok(LinearCode { code: Code::new(alphabet, n, words)?, generators })
}

/// Greedy code with minimum distance at least `d`: the `q` repetition
/// words first, then every word of `Σ_q^n` in lexicographic order that is at
/// distance `>= d` from all words kept so far.
pub fn greedy_gv_code(q: u32, n: usize, d: usize) -> Result<Code> {
    let alphabet = Alphabet::new(q)?;
    if d == 0 || d > 2 * n {
        return Err(Error::Domain("distance must lie in (0, 2n]"));
    }
    let total = space_size(alphabet, n);
    if total > ENUMERATION_LIMIT {
        return Err(Error::Capacity { needed: total, limit: ENUMERATION_LIMIT });
    }
    let mut kept: Vec<Vec<Symbol>> = (0..q).map(|a| vec![a; n]).collect();
    let seeds = kept.len();
    for_each_word(alphabet, n, |x| {
        if x.windows(2).all(|p| p[0] == p[1]) {
            return;
        }
        if kept.iter().all(|c| distance_symbols(c, x) >= d) {
            kept.push(x.to_vec());
        }
    });
    debug_assert!(kept.len() >= seeds);
    Code::new(
        alphabet,
        n,
        kept.into_iter().map(|s| Word::from_trusted(alphabet, s)).collect(),
    )
}
