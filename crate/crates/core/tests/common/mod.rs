#![allow(dead_code)]

use insdel_core::space::Words;
use insdel_core::{Alphabet, Word};

pub fn alpha(q: u32) -> Alphabet {
    Alphabet::new(q).unwrap()
}

pub fn word(q: u32, s: &[u32]) -> Word {
    Word::new(alpha(q), s.to_vec()).unwrap()
}

/// Every word of length at most `max_len`.
pub fn words_upto(q: u32, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| Words::new(alpha(q), n)).collect()
}

/// `true` iff `small` is a subsequence of `big` (greedy scan).
pub fn is_subsequence(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}

/// LCS length by trying every subsequence of the shorter word.
pub fn lcs_by_subsets(a: &[u32], b: &[u32]) -> usize {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut best = 0;
    for mask in 0u32..(1 << short.len()) {
        let sub: Vec<u32> = (0..short.len()).filter(|i| mask >> i & 1 == 1).map(|i| short[i]).collect();
        if sub.len() > best && is_subsequence(&sub, long) {
            best = sub.len();
        }
    }
    best
}
