//! Enumeration of `Σ_q^n` in lexicographic order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// Odometer over all words of a fixed length, lexicographic order.
#[derive(Clone, Debug)]
pub struct Words {
    alphabet: Alphabet,
    current: Vec<Symbol>,
    done: bool,
}

impl Words {
    pub fn new(alphabet: Alphabet, len: usize) -> Self {
        Words {
            alphabet,
            current: vec![0; len],
            done: false,
        }
    }

    fn advance(&mut self) {
        let q = self.alphabet.size();
        for slot in self.current.iter_mut().rev() {
            *slot += 1;
            if *slot < q {
                return;
            }
            *slot = 0;
        }
        self.done = true;
    }
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word::from_trusted(self.alphabet, self.current.clone());
        self.advance();
        Some(out)
    }
}

/// Calls `f` on every word of `Σ_q^len` without allocating per word.
pub fn for_each_word<F: FnMut(&[Symbol])>(alphabet: Alphabet, len: usize, mut f: F) {
    let q = alphabet.size();
    let mut cur = vec![0 as Symbol; len];
    loop {
        f(&cur);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < q {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// All words of length `len`, refusing spaces larger than `limit`.
pub fn all_words(alphabet: Alphabet, len: usize, limit: u128) -> Result<Words> {
    let needed = alphabet.count_words(len).unwrap_or(u128::MAX);
    if needed > limit {
        return Err(Error::Capacity { needed, limit });
    }
    Ok(Words::new(alphabet, len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let ws: Vec<Word> = Words::new(Alphabet::TERNARY, 2).collect();
        assert_eq!(ws.len(), 9);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(Words::new(Alphabet::BINARY, 0).count(), 1);
        let mut n = 0;
        for_each_word(Alphabet::BINARY, 5, |_| n += 1);
        assert_eq!(n, 32);
        let mut m = 0;
        for_each_word(Alphabet::BINARY, 0, |w| {
            assert!(w.is_empty());
            m += 1
        });
        assert_eq!(m, 1);
    }

    #[test]
    fn capacity_guard() {
        assert!(all_words(Alphabet::BINARY, 10, 1000).is_err());
        assert!(all_words(Alphabet::BINARY, 9, 1000).is_ok());
    }
}
