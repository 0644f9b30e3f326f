//! Alphabets, words, insdel distance and run structure.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Symbol = u32;

/// The alphabet `{0, .., q-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u32);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);
    pub const TERNARY: Alphabet = Alphabet(3);

    pub fn new(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet(q))
    }

    #[inline]
    pub fn size(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, s: Symbol) -> bool {
        s < self.0
    }

    /// Number of words of length `len`, if it fits in a `u128`.
    pub fn count_words(self, len: usize) -> Option<u128> {
        crate::math::checked_pow(self.0 as u64, len as u64)
    }
}

/// A finite sequence over an alphabet. The empty word is allowed.
///
/// Words order by alphabet first, then lexicographically by symbols, so a
/// `BTreeSet<Word>` of same-alphabet words iterates in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad,
                q: alphabet.size(),
            });
        }
        Ok(Word { alphabet, symbols })
    }

    /// Reads the text form used by [`Display`](fmt::Display): one digit per
    /// symbol when `q <= 10`, comma-separated integers otherwise. The empty
    /// string is the empty word.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut symbols = Vec::new();
        if alphabet.size() <= 10 {
            for (i, ch) in text.chars().enumerate() {
                let d = ch.to_digit(10).ok_or(Error::Parse { position: i })?;
                symbols.push(d);
            }
        } else if !text.is_empty() {
            let mut pos = 0;
            for part in text.split(',') {
                let s = part.trim().parse::<Symbol>().map_err(|_| Error::Parse { position: pos })?;
                symbols.push(s);
                pos += part.len() + 1;
            }
        }
        Word::new(alphabet, symbols)
    }

    /// Builds a word from symbols already known to be in range.
    pub(crate) fn from_trusted(alphabet: Alphabet, symbols: Vec<Symbol>) -> Self {
        debug_assert!(symbols.iter().all(|&s| alphabet.contains(s)));
        Word { alphabet, symbols }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            symbols: Vec::new(),
        }
    }

    /// The repetition word `(symbol)^len`.
    pub fn repetition(alphabet: Alphabet, symbol: Symbol, len: usize) -> Result<Self> {
        Word::new(alphabet, vec![symbol; len])
    }

    /// The `index`-th word of `Σ_q^len` in lexicographic order (base-`q`
    /// digits, most significant first).
    pub fn from_index(alphabet: Alphabet, len: usize, mut index: u128) -> Self {
        let q = alphabet.size() as u128;
        let mut symbols = vec![0; len];
        for slot in symbols.iter_mut().rev() {
            *slot = (index % q) as Symbol;
            index /= q;
        }
        Word { alphabet, symbols }
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.alphabet.size()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// The subword `self[start..end]` (0-based, half open).
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            alphabet: self.alphabet,
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    /// Appends `other` in place.
    pub fn extend_from(&mut self, other: &Word) -> Result<()> {
        same_alphabet(self, other)?;
        self.symbols.extend_from_slice(&other.symbols);
        Ok(())
    }

    pub fn concat<'a, I>(alphabet: Alphabet, parts: I) -> Result<Word>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut out = Word::empty(alphabet);
        for p in parts {
            out.extend_from(p)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(q={}, ", self.alphabet.size())?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

/// Digit string for `q <= 10`, comma separated integers otherwise. The
/// empty word renders as the empty string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.size() <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// Hamming weight, `t` (zero-length zero blocks) and run count of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RunProfile {
    pub w: usize,
    pub t: usize,
    pub phi: usize,
}

impl RunProfile {
    /// Run-count bounds implied by `(w, t)` for words with `0 < w < len`.
    ///
    /// For every `q`: `2(w-t)+1 <= phi <= 2w-t+1`. For `q = 2` and `t >= 2`
    /// the upper bound tightens to `2(w-t)+3`.
    pub fn run_bounds(&self, q: u32) -> (usize, usize) {
        let lower = 2 * (self.w - self.t) + 1;
        let mut upper = 2 * self.w - self.t + 1;
        if q == 2 && self.t >= 2 {
            upper = upper.min(2 * (self.w - self.t) + 3);
        }
        (lower, upper)
    }
}

fn same_alphabet(a: &Word, b: &Word) -> Result<()> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch {
            left: a.q(),
            right: b.q(),
        });
    }
    Ok(())
}

/// LCS length of two symbol slices, `O(|a||b|)` time and `O(min)` space.
pub fn lcs_symbols(a: &[Symbol], b: &[Symbol]) -> usize {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return 0;
    }
    let mut row = vec![0usize; short.len() + 1];
    for &x in long {
        let mut diag = 0;
        for (j, &y) in short.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[short.len()]
}

/// Insdel distance of two symbol slices: `|a| + |b| - 2 LCS(a, b)`.
#[inline]
pub fn distance_symbols(a: &[Symbol], b: &[Symbol]) -> usize {
    a.len() + b.len() - 2 * lcs_symbols(a, b)
}

pub fn lcs_length(a: &Word, b: &Word) -> Result<usize> {
    same_alphabet(a, b)?;
    Ok(lcs_symbols(&a.symbols, &b.symbols))
}

/// Minimum number of single-symbol insertions and deletions turning `a`
/// into `b`.
pub fn insdel_distance(a: &Word, b: &Word) -> Result<usize> {
    same_alphabet(a, b)?;
    Ok(distance_symbols(&a.symbols, &b.symbols))
}

pub(crate) fn runs_of(symbols: &[Symbol]) -> usize {
    if symbols.is_empty() {
        return 0;
    }
    1 + symbols.windows(2).filter(|p| p[0] != p[1]).count()
}

/// Number of maximal blocks of equal consecutive symbols.
pub fn count_runs(r: &Word) -> usize {
    runs_of(&r.symbols)
}

/// `true` iff all symbols are equal; the empty word counts as a repetition.
pub fn is_repetition(r: &Word) -> bool {
    r.symbols.windows(2).all(|p| p[0] == p[1])
}

pub fn hamming_weight(r: &Word) -> usize {
    r.symbols.iter().filter(|&&s| s != 0).count()
}

/// Decomposes `r = (0)^{a_1} x_1 (0)^{a_2} ... x_w (0)^{a_{w+1}}` and
/// reports `w`, `t = #{i : a_i = 0}` and the run count.
///
/// For words with no zero at all every `a_i` vanishes, giving `w + 1`
/// empty blocks; `t` is capped at `w` in that case so that `t <= w` always
/// holds. Such words (and repetition words) fall outside `0 < w < len`, where
/// the run bounds are stated.
pub fn run_profile(r: &Word) -> RunProfile {
    let w = hamming_weight(r);
    let mut t = 0;
    let mut block = 0usize;
    for &s in &r.symbols {
        if s == 0 {
            block += 1;
        } else {
            if block == 0 {
                t += 1;
            }
            block = 0;
        }
    }
    if block == 0 {
        t += 1;
    }
    RunProfile {
        w,
        t: t.min(w),
        phi: count_runs(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bw(s: &[u32]) -> Word {
        Word::new(Alphabet::BINARY, s.to_vec()).unwrap()
    }

    fn tw(s: &[u32]) -> Word {
        Word::new(Alphabet::TERNARY, s.to_vec()).unwrap()
    }

    #[test]
    fn text_form_roundtrips() {
        let w = Word::parse(Alphabet::TERNARY, "0120").unwrap();
        assert_eq!(w.symbols(), &[0, 1, 2, 0]);
        assert_eq!(w.to_string(), "0120");
        assert!(Word::parse(Alphabet::BINARY, "").unwrap().is_empty());
        assert_eq!(Word::parse(Alphabet::BINARY, "012"), Err(Error::SymbolOutOfRange { symbol: 2, q: 2 }));
        assert_eq!(Word::parse(Alphabet::BINARY, "0x"), Err(Error::Parse { position: 1 }));
        let big = Alphabet::new(17).unwrap();
        let w = Word::parse(big, "3,16,0").unwrap();
        assert_eq!(w.symbols(), &[3, 16, 0]);
        assert_eq!(Word::parse(big, &w.to_string()).unwrap(), w);
        assert!(Word::parse(big, "3,,1").is_err());
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs_length(&bw(&[0, 1, 1, 0]), &bw(&[0, 1, 0, 1])).unwrap(), 3);
        let x = bw(&[1, 0, 0, 1, 1]);
        assert_eq!(lcs_length(&x, &x).unwrap(), 5);
        assert_eq!(lcs_length(&Word::empty(Alphabet::BINARY), &bw(&[0, 1])).unwrap(), 0);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(insdel_distance(&bw(&[0, 1, 1, 0]), &bw(&[0, 1, 0, 1])).unwrap(), 2);
        let x = tw(&[2, 0, 1]);
        assert_eq!(insdel_distance(&x, &x).unwrap(), 0);
        assert_eq!(insdel_distance(&Word::empty(Alphabet::BINARY), &bw(&[0, 1])).unwrap(), 2);
    }

    #[test]
    fn mismatched_alphabets_are_rejected() {
        let err = insdel_distance(&bw(&[0]), &tw(&[0])).unwrap_err();
        assert_eq!(err, Error::AlphabetMismatch { left: 2, right: 3 });
        assert!(lcs_length(&bw(&[0]), &tw(&[0])).is_err());
    }

    #[test]
    fn symbols_are_range_checked() {
        assert!(Word::new(Alphabet::BINARY, vec![0, 2]).is_err());
        assert!(Alphabet::new(1).is_err());
    }

    #[test]
    fn runs() {
        assert_eq!(count_runs(&bw(&[0, 1, 1, 0])), 3);
        assert_eq!(count_runs(&bw(&[0, 1, 0, 1])), 4);
        assert_eq!(count_runs(&bw(&[0, 0, 0, 0, 0])), 1);
        assert_eq!(count_runs(&Word::empty(Alphabet::BINARY)), 0);
    }

    #[test]
    fn profiles() {
        assert_eq!(run_profile(&tw(&[0, 0, 1, 2, 0])), RunProfile { w: 2, t: 1, phi: 4 });
        assert_eq!(run_profile(&bw(&[0, 1, 1, 0])), RunProfile { w: 2, t: 1, phi: 3 });
        // all-nonzero word: four empty zero blocks, capped at w = 3
        assert_eq!(run_profile(&bw(&[1, 1, 1])), RunProfile { w: 3, t: 3, phi: 1 });
        assert_eq!(run_profile(&bw(&[0, 0])), RunProfile { w: 0, t: 0, phi: 1 });
        assert_eq!(run_profile(&Word::empty(Alphabet::BINARY)), RunProfile { w: 0, t: 0, phi: 0 });
    }

    #[test]
    fn repetition_and_weight() {
        assert!(is_repetition(&bw(&[0, 0, 0])));
        assert!(!is_repetition(&bw(&[0, 1, 0])));
        assert!(is_repetition(&tw(&[2, 2])));
        assert!(is_repetition(&Word::empty(Alphabet::BINARY)));
        assert_eq!(hamming_weight(&bw(&[0, 1, 1, 0])), 2);
        assert_eq!(hamming_weight(&bw(&[0, 0])), 0);
        assert_eq!(hamming_weight(&tw(&[1, 2, 1])), 3);
    }

    #[test]
    fn index_roundtrip_is_lexicographic() {
        let a = Word::from_index(Alphabet::TERNARY, 3, 5);
        assert_eq!(a.symbols(), &[0, 1, 2]);
        let b = Word::from_index(Alphabet::TERNARY, 3, 6);
        assert!(a < b);
    }

    #[test]
    fn display_switches_at_ten() {
        assert_eq!(alloc::format!("{}", tw(&[0, 1, 2])), "012");
        let w = Word::new(Alphabet::new(12).unwrap(), vec![11, 0, 3]).unwrap();
        assert_eq!(alloc::format!("{w}"), "11,0,3");
    }
}
