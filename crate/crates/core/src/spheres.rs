//! Insertion and deletion spheres, and fixed-length insdel balls.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bounds::entropy_q;
use crate::error::{Error, Result};
use crate::math::{big_pow, binomial, log_base};
use crate::space::for_each_word;
use crate::word::{distance_symbols, Alphabet, RunProfile, Symbol, Word};

/// Largest space `enumerate_ball_fixed_length` will scan in oracle mode.
pub const BALL_SCAN_LIMIT: u128 = 1 << 24;

/// Default multiplier of the `log_q n` slack term in [`ball_size_upper_bound`].
pub const DEFAULT_SLACK: f64 = 2.0;

/// `Σ_{i=0}^{n2} C(n1+n2, i) (q-1)^i`, the size of every insertion sphere of
/// radius `n2` around a length-`n1` word.
pub fn insertion_sphere_size(n1: u64, n2: u64, q: u64) -> BigUint {
    (0..=n2)
        .map(|i| binomial((n1 + n2) as i64, i as i64) * big_pow(q - 1, i))
        .sum()
}

/// All words reachable from `s` by exactly `n2` insertions.
pub fn enumerate_insertion_sphere(s: &Word, n2: usize) -> BTreeSet<Word> {
    let alphabet = s.alphabet();
    let mut layer: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    layer.insert(s.symbols().to_vec());
    for _ in 0..n2 {
        let mut next = BTreeSet::new();
        for w in &layer {
            for pos in 0..=w.len() {
                for a in 0..alphabet.size() {
                    let mut v = Vec::with_capacity(w.len() + 1);
                    v.extend_from_slice(&w[..pos]);
                    v.push(a);
                    v.extend_from_slice(&w[pos..]);
                    next.insert(v);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().map(|v| Word::from_trusted(alphabet, v)).collect()
}

/// All distinct subsequences of `s` of length `|s| - n2`.
pub fn enumerate_deletion_sphere(s: &Word, n2: usize) -> Result<BTreeSet<Word>> {
    if n2 > s.len() {
        return Err(Error::InvalidRadius { radius: n2, len: s.len() });
    }
    Ok(deletion_layer(s.symbols(), n2)
        .into_iter()
        .map(|v| Word::from_trusted(s.alphabet(), v))
        .collect())
}

fn deletion_layer(s: &[Symbol], n2: usize) -> BTreeSet<Vec<Symbol>> {
    let mut layer: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    layer.insert(s.to_vec());
    for _ in 0..n2 {
        let mut next = BTreeSet::new();
        for w in &layer {
            for pos in 0..w.len() {
                // deleting any symbol of a run gives the same word
                if pos > 0 && w[pos - 1] == w[pos] {
                    continue;
                }
                let mut v = w.clone();
                v.remove(pos);
                next.insert(v);
            }
        }
        layer = next;
    }
    layer
}

/// Bounds on a deletion sphere in terms of the run count of its center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionBounds {
    pub lower: BigUint,
    pub upper: BigUint,
}

/// `lower = Σ_{i=0}^{n2} C(φ-n2, i)` and `upper = C(φ+n2-1, n2)`, with
/// `C(a, b) = 0` for `b > a` or `a < 0`.
pub fn deletion_sphere_bounds(phi: u64, n2: u64) -> DeletionBounds {
    let a = phi as i64 - n2 as i64;
    let lower = (0..=n2).map(|i| binomial(a, i as i64)).sum();
    let upper = binomial(phi as i64 + n2 as i64 - 1, n2 as i64);
    DeletionBounds { lower, upper }
}

/// The words of length `target_len` within insdel distance `radius` of
/// `center`.
#[derive(Clone, Debug)]
pub struct BallQuery {
    pub center: Word,
    pub radius: usize,
    pub target_len: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BallMode {
    /// Scan all of `Σ_q^n` and filter by distance.
    Oracle,
    /// Union over `d` of insertion spheres around the `d`-deletion sphere.
    Fast,
}

pub fn enumerate_ball_fixed_length(qy: &BallQuery, mode: BallMode) -> Result<BTreeSet<Word>> {
    let alphabet = qy.center.alphabet();
    let m = qy.center.len();
    let n = qy.target_len;
    let z = qy.radius;
    let mut out = BTreeSet::new();
    if z < m.abs_diff(n) {
        return Ok(out);
    }
    match mode {
        BallMode::Oracle => {
            let needed = alphabet.count_words(n).unwrap_or(u128::MAX);
            if needed > BALL_SCAN_LIMIT {
                return Err(Error::Capacity { needed, limit: BALL_SCAN_LIMIT });
            }
            let c = qy.center.symbols();
            for_each_word(alphabet, n, |x| {
                if distance_symbols(c, x) <= z {
                    out.insert(Word::from_trusted(alphabet, x.to_vec()));
                }
            });
        }
        BallMode::Fast => {
            // d deletions and n - m + d insertions, with n - m + 2d <= z
            let d_min = m.saturating_sub(n);
            let d_max = ((z + m - n) / 2).min(m);
            for d in d_min..=d_max {
                let ins = n + d - m;
                for mid in deletion_layer(qy.center.symbols(), d) {
                    let mid = Word::from_trusted(alphabet, mid);
                    out.extend(enumerate_insertion_sphere(&mid, ins));
                }
            }
        }
    }
    Ok(out)
}

/// Exact number of length-`n` words within distance `z` of a length-`m`
/// repetition word: `Σ_{w=0}^{⌊(z+n-m)/2⌋} C(n, w) (q-1)^w`, or 0 when
/// `z < |n - m|`.
pub fn repetition_ball_exact(m: u64, n: u64, z: u64, q: u64) -> BigUint {
    if z < m.abs_diff(n) {
        return BigUint::zero();
    }
    let top = ((z + n - m) / 2).min(n);
    (0..=top)
        .map(|w| binomial(n as i64, w as i64) * big_pow(q - 1, w))
        .sum()
}

/// The `log_q` exponent of the upper bound on the number of length-`n`
/// words within distance `z` of a non-repetition length-`m` center with
/// run profile `profile`.
///
/// With `g = (z-n+m)/2` and `k = (z+n-m)/(2n)` the exponent is
/// `(2w-t+g) H_q(g/(2w-t+g)) - g log_q(q-1) + n H_q(k) + slack·log_q n` for
/// `q >= 3`; for `q = 2` the factor `2w-t` becomes `2(w-t)+2`. The radius is
/// first reduced to the parity of `m+n`, which leaves the ball unchanged.
pub fn ball_size_upper_bound(
    profile: &RunProfile,
    m: usize,
    n: usize,
    z: usize,
    q: u32,
    slack: f64,
) -> Result<f64> {
    Alphabet::new(q)?;
    if z < m.abs_diff(n) {
        return Err(Error::InvalidRadius { radius: z, len: m });
    }
    let z = z - ((z + m + n) % 2);
    let g = ((z + m - n) / 2) as f64;
    let kn = ((z + n - m) / 2) as f64;
    let qf = q as f64;
    let kappa = if n == 0 { 0.0 } else { kn / n as f64 };
    if kappa >= (qf - 1.0) / qf {
        return Err(Error::OutOfRegime("deletion fraction at least (q-1)/q"));
    }
    let (w, t) = (profile.w as f64, profile.t as f64);
    let base = if q == 2 { 2.0 * (w - t) + 2.0 } else { 2.0 * w - t };
    let span = base + g;
    let mut e = 0.0;
    if span > 0.0 {
        e += span * entropy_q(q as u64, g / span)?;
    }
    if q > 2 {
        e -= g * log_base(qf - 1.0, qf);
    }
    e += n as f64 * entropy_q(q as u64, kappa)?;
    if n > 1 {
        e += slack * log_base(n as f64, qf);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bw(s: &[u32]) -> Word {
        Word::new(Alphabet::BINARY, s.to_vec()).unwrap()
    }

    #[test]
    fn insertion_sizes() {
        assert_eq!(insertion_sphere_size(2, 1, 2), BigUint::from(4u32));
        assert_eq!(insertion_sphere_size(5, 0, 3), BigUint::from(1u32));
        assert_eq!(insertion_sphere_size(2, 2, 2), BigUint::from(11u32));
        assert_eq!(enumerate_insertion_sphere(&bw(&[0, 1]), 2).len(), 11);
    }

    #[test]
    fn insertion_examples() {
        let got = enumerate_insertion_sphere(&bw(&[0, 0]), 1);
        let want: BTreeSet<Word> =
            [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]].iter().map(|s| bw(s)).collect();
        assert_eq!(got, want);
        let s = bw(&[1, 0]);
        assert_eq!(enumerate_insertion_sphere(&s, 0), [s.clone()].into_iter().collect());
        assert_eq!(enumerate_insertion_sphere(&Word::empty(Alphabet::BINARY), 2).len(), 4);
    }

    #[test]
    fn deletion_examples() {
        let got = enumerate_deletion_sphere(&bw(&[0, 1, 0]), 1).unwrap();
        let want: BTreeSet<Word> = [[1, 0], [0, 0], [0, 1]].iter().map(|s| bw(s)).collect();
        assert_eq!(got, want);
        let rep = enumerate_deletion_sphere(&bw(&[0; 5]), 2).unwrap();
        assert_eq!(rep.into_iter().collect::<Vec<_>>(), vec![bw(&[0; 3])]);
        let all = enumerate_deletion_sphere(&bw(&[0, 1]), 2).unwrap();
        assert_eq!(all.into_iter().collect::<Vec<_>>(), vec![Word::empty(Alphabet::BINARY)]);
        assert_eq!(
            enumerate_deletion_sphere(&bw(&[0]), 2),
            Err(Error::InvalidRadius { radius: 2, len: 1 })
        );
    }

    #[test]
    fn deletion_bound_examples() {
        let b = deletion_sphere_bounds(3, 1);
        assert_eq!((b.lower, b.upper), (BigUint::from(3u32), BigUint::from(3u32)));
        let b = deletion_sphere_bounds(1, 1);
        assert_eq!((b.lower, b.upper), (BigUint::from(1u32), BigUint::from(1u32)));
        // C(a, b) = 0 for a < 0 empties the lower sum once n2 > φ
        let b = deletion_sphere_bounds(1, 4);
        assert_eq!((b.lower, b.upper), (BigUint::zero(), BigUint::from(1u32)));
        let b = deletion_sphere_bounds(4, 2);
        assert_eq!((b.lower, b.upper), (BigUint::from(4u32), BigUint::from(10u32)));
        // only four binary words of length 2 exist
        assert_eq!(enumerate_deletion_sphere(&bw(&[0, 1, 0, 1]), 2).unwrap().len(), 4);
    }

    #[test]
    fn ball_examples() {
        for mode in [BallMode::Oracle, BallMode::Fast] {
            let q = BallQuery { center: bw(&[0, 0]), radius: 2, target_len: 2 };
            let got = enumerate_ball_fixed_length(&q, mode).unwrap();
            let want: BTreeSet<Word> = [[0, 0], [0, 1], [1, 0]].iter().map(|s| bw(s)).collect();
            assert_eq!(got, want);
            let x = bw(&[1, 0, 1]);
            let q = BallQuery { center: x.clone(), radius: 0, target_len: 3 };
            assert_eq!(enumerate_ball_fixed_length(&q, mode).unwrap().into_iter().collect::<Vec<_>>(), vec![x]);
            let q = BallQuery { center: bw(&[0, 1]), radius: 4, target_len: 2 };
            assert_eq!(enumerate_ball_fixed_length(&q, mode).unwrap().len(), 4);
            let q = BallQuery { center: bw(&[0, 1]), radius: 0, target_len: 3 };
            assert!(enumerate_ball_fixed_length(&q, mode).unwrap().is_empty());
        }
    }

    #[test]
    fn repetition_counts() {
        assert_eq!(repetition_ball_exact(3, 3, 2, 2), BigUint::from(4u32));
        assert_eq!(repetition_ball_exact(4, 4, 0, 5), BigUint::from(1u32));
        assert_eq!(repetition_ball_exact(2, 3, 3, 3), BigUint::from(19u32));
        assert_eq!(repetition_ball_exact(2, 5, 2, 3), BigUint::zero());
    }

    #[test]
    fn ball_bound_regime() {
        let p = RunProfile { w: 1, t: 1, phi: 2 };
        assert!(matches!(
            ball_size_upper_bound(&p, 2, 2, 2, 2, 0.0),
            Err(Error::OutOfRegime(_))
        ));
        // radius 0 with no slack: both entropy terms vanish
        let e = ball_size_upper_bound(&p, 4, 4, 0, 3, 0.0).unwrap();
        assert!(e.abs() < 1e-12);
    }
}
