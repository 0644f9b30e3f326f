mod common;

use common::*;
use insdel_core::codes::*;
use insdel_core::decode::*;
use insdel_core::space::Words;
use insdel_core::spheres::{enumerate_ball_fixed_length, BallMode, BallQuery};
use insdel_core::{insdel_distance, is_repetition, Seed, Word};
use std::collections::BTreeSet;

fn dist(a: &Word, b: &Word) -> usize {
    insdel_distance(a, b).unwrap()
}

fn code_of(q: u32, n: usize, ws: &[&[u32]]) -> Code {
    Code::new(alpha(q), n, ws.iter().map(|s| word(q, s)).collect()).unwrap()
}

#[test]
fn stats_examples() {
    let all: Vec<Word> = Words::new(alpha(2), 2).collect();
    let s = Code::new(alpha(2), 2, all).unwrap().stats().unwrap();
    assert!((s.rate - 1.0).abs() < 1e-12);
    assert_eq!((s.min_dist, s.rel_dist), (2, 0.5));
    for n in 1..=5 {
        let c = Code::new(alpha(2), n, vec![Word::repetition(alpha(2), 0, n).unwrap(), Word::repetition(alpha(2), 1, n).unwrap()]).unwrap();
        let s = code_stats(&c).unwrap();
        assert_eq!((s.min_dist, s.rel_dist), (2 * n, 1.0));
    }
    let single = code_of(2, 2, &[&[0, 1]]);
    assert!(single.min_distance().is_err());
}

#[test]
fn random_samplers() {
    let full = sample_random_code(2, 4, 16, Seed(9)).unwrap();
    assert_eq!(full.words(), Words::new(alpha(2), 4).collect::<Vec<_>>().as_slice());
    assert_eq!(sample_random_code(2, 8, 16, Seed(5)).unwrap(), sample_random_code(2, 8, 16, Seed(5)).unwrap());
    assert_ne!(sample_random_code(2, 8, 16, Seed(5)).unwrap(), sample_random_code(2, 8, 16, Seed(6)).unwrap());
    let c = sample_random_code(3, 5, 10, Seed(1)).unwrap();
    assert_eq!(c.len(), 10);
    assert!(c.words().iter().all(|w| w.len() == 5 && w.q() == 3));
    assert!(sample_random_code(2, 3, 9, Seed(1)).is_err());
}

#[test]
fn linear_codes_are_closed() {
    let full = sample_random_linear_code(2, 3, 3, Seed(2)).unwrap();
    assert_eq!(full.code.len(), 8);
    let one = sample_random_linear_code(2, 4, 1, Seed(2)).unwrap();
    assert_eq!(one.code.len(), 2);
    assert!(one.code.contains(&Word::repetition(alpha(2), 0, 4).unwrap()));
    assert!(one.code.contains(&one.generators[0]));
    for (q, n, k, seed) in [(3u32, 4usize, 2usize, 7u64), (2, 6, 3, 1), (5, 3, 2, 4)] {
        let lc = sample_random_linear_code(q, n, k, Seed(seed)).unwrap();
        assert_eq!(lc.code.len(), (q as usize).pow(k as u32));
        assert!(lc.code.contains(&Word::repetition(alpha(q), 0, n).unwrap()));
        for a in lc.code.words() {
            for b in lc.code.words() {
                let s: Vec<u32> = a.symbols().iter().zip(b.symbols()).map(|(x, y)| (x + y) % q).collect();
                assert!(lc.code.contains(&word(q, &s)));
            }
        }
    }
    assert!(sample_random_linear_code(4, 3, 1, Seed(0)).is_err());
}

/// Largest number of words of `Σ_q^n` within `d - 1` of a single word.
fn max_ball_count(q: u32, n: usize, d: usize) -> usize {
    let all: Vec<Word> = Words::new(alpha(q), n).collect();
    all.iter().map(|r| all.iter().filter(|x| dist(r, x) < d).count()).max().unwrap()
}

#[test]
fn greedy_code_bounds() {
    let c = greedy_gv_code(2, 2, 2).unwrap();
    assert_eq!(c.len(), 4);
    for q in [2u32, 3] {
        for n in 1..=6 {
            let c = greedy_gv_code(q, n, 2 * n).unwrap();
            assert_eq!(c.len(), q as usize);
            assert!(c.words().iter().all(is_repetition));
        }
    }
    for (q, max_n) in [(2u32, 8usize), (3, 5)] {
        for n in 1..=max_n {
            for d in (2..=2 * n).step_by(2) {
                let c = greedy_gv_code(q, n, d).unwrap();
                assert!(c.len() >= q as usize);
                if c.len() >= 2 {
                    assert!(c.min_distance().unwrap() >= d);
                }
                let bound = (q as usize).pow(n as u32) as f64 / max_ball_count(q, n, d) as f64;
                assert!(c.len() as f64 >= bound, "q={q} n={n} d={d}");
                let singleton = insdel_core::bounds::singleton_max_size(n as u64, d as u64, q as u64).unwrap();
                assert!(insdel_core::BigUint::from(c.len()) <= singleton);
            }
        }
    }
}

#[test]
fn decode_examples_and_ball_agreement() {
    let c = code_of(2, 2, &[&[0, 0], &[1, 1]]);
    assert_eq!(brute_force_list_decode(&c, &word(2, &[0]), 1).unwrap().candidates, vec![word(2, &[0, 0])]);
    assert!(brute_force_list_decode(&c, &word(2, &[0, 1]), 1).unwrap().candidates.is_empty());
    for seed in 0..8 {
        let n = 4 + seed as usize % 4;
        let c = sample_random_code(2, n, 12, Seed(seed)).unwrap();
        for r in words_upto(2, n + 1).into_iter().filter(|r| r.len() + 1 >= n) {
            for radius in 0..=3 {
                let got: BTreeSet<Word> =
                    brute_force_list_decode(&c, &r, radius).unwrap().candidates.into_iter().collect();
                let ball = enumerate_ball_fixed_length(
                    &BallQuery { center: r.clone(), radius, target_len: n },
                    BallMode::Fast,
                )
                .unwrap();
                let expect: BTreeSet<Word> = ball.into_iter().filter(|x| c.contains(x)).collect();
                assert_eq!(got, expect);
            }
            let everything = brute_force_list_decode(&c, &r, 2 * n + r.len()).unwrap();
            assert_eq!(everything.candidates.len(), c.len());
        }
    }
}

/// Double loop over all admissible centers.
fn certify_oracle(c: &Code, tau_n: usize, l: usize) -> bool {
    let n = c.n();
    (n.saturating_sub(tau_n)..=n + tau_n).all(|m| {
        Words::new(c.alphabet(), m).all(|r| c.words().iter().filter(|x| dist(x, &r) <= tau_n).count() <= l)
    })
}

#[test]
fn certification_matches_double_loop() {
    let c = code_of(2, 2, &[&[0, 0], &[1, 1]]);
    assert!(certify_list_decodable(&c, 1, 1, CertifyMode::Exhaustive).unwrap().ok);
    let all = Code::new(alpha(2), 2, Words::new(alpha(2), 2).collect()).unwrap();
    let cert = certify_list_decodable(&all, 2, 3, CertifyMode::Exhaustive).unwrap();
    assert!(!cert.ok);
    let w = cert.witness.unwrap();
    assert!(brute_force_list_decode(&all, &w, 2).unwrap().candidates.len() > 3);
    for seed in 0..20u64 {
        let n = 2 + seed as usize % 4;
        let m = 2 + seed as usize % 5;
        let c = sample_random_code(2, n, m.min(1 << n), Seed(seed)).unwrap();
        assert!(certify_list_decodable(&c, 0, 1, CertifyMode::Exhaustive).unwrap().ok);
        for tau_n in 1..=2 {
            for l in 1..=3 {
                let cert = certify_list_decodable(&c, tau_n, l, CertifyMode::Exhaustive).unwrap();
                assert_eq!(cert.ok, certify_oracle(&c, tau_n, l), "seed={seed} tau_n={tau_n} l={l}");
                if let Some(w) = cert.witness {
                    assert!(brute_force_list_decode(&c, &w, tau_n).unwrap().candidates.len() > l);
                }
                let sampled = CertifyMode::Sampled { centers: 200, seed: Seed(seed) };
                let s = certify_list_decodable(&c, tau_n, l, sampled).unwrap();
                if cert.ok {
                    assert!(s.ok);
                }
                if let Some(w) = s.witness {
                    assert!(brute_force_list_decode(&c, &w, tau_n).unwrap().candidates.len() > l);
                }
            }
        }
    }
    let big = sample_random_code(2, 20, 4, Seed(0)).unwrap();
    assert!(certify_list_decodable(&big, 4, 1, CertifyMode::Exhaustive).is_err());
}

#[test]
fn experiment_is_deterministic() {
    let p = ExperimentParams {
        q: 3,
        n: 6,
        gamma: 0.0,
        kappa: 0.0,
        epsilon: 0.5,
        trials: 20,
        centers: 100,
        seed: Seed(11),
    };
    let r = monte_carlo_rate_experiment(&p).unwrap();
    assert_eq!(r.failures, 0);
    assert_eq!(r, monte_carlo_rate_experiment(&p).unwrap());
    let p = ExperimentParams { q: 2, n: 10, gamma: 0.1, kappa: 0.1, epsilon: 0.3, ..p };
    let a = monte_carlo_rate_experiment(&p).unwrap();
    assert_eq!(a, monte_carlo_rate_experiment(&p).unwrap());
    assert!(a.failure_fraction() <= 1.0);
    assert_eq!(a.list_size, 3);
}

#[test]
fn rs_encoding() {
    let rs = RSCode::new(5, 2, vec![0, 1, 2, 3]).unwrap();
    assert_eq!(rs_encode(&rs, &[1, 1]).unwrap(), vec![1, 2, 3, 4]);
    assert_eq!(rs_encode(&rs, &[3, 0]).unwrap(), vec![3; 4]);
    assert!(rs_encode(&rs, &[1]).is_err());
    assert!(rs_encode(&rs, &[5, 0]).is_err());
    let rs7 = RSCode::with_standard_points(7, 5, 3).unwrap();
    for a in 0..7u64 {
        for b in 0..7u64 {
            let m1 = [a, b, (a * b) % 7];
            let m2 = [b, 3, a];
            let sum: Vec<u64> = m1.iter().zip(&m2).map(|(x, y)| (x + y) % 7).collect();
            let lhs = rs_encode(&rs7, &sum).unwrap();
            let rhs: Vec<u64> = rs_encode(&rs7, &m1)
                .unwrap()
                .iter()
                .zip(rs_encode(&rs7, &m2).unwrap())
                .map(|(x, y)| (x + y) % 7)
                .collect();
            assert_eq!(lhs, rhs);
            assert!(rs7.is_codeword(&lhs));
        }
    }
    // K = N: encoding is a bijection
    let square = RSCode::with_standard_points(3, 3, 3).unwrap();
    let mut seen = BTreeSet::new();
    for i in 0..27u64 {
        let m = [i % 3, i / 3 % 3, i / 9];
        assert!(seen.insert(rs_encode(&square, &m).unwrap()));
    }
    assert!(!rs.is_codeword(&[1, 2, 3, 0]));
}

fn recover_oracle(code: &RSCode, lists: &PositionLists, alpha: f64) -> Vec<Vec<u64>> {
    let p = code.p();
    let k = code.k();
    let mut out = Vec::new();
    for idx in 0..p.pow(k as u32) {
        let msg: Vec<u64> = (0..k).rev().map(|j| idx / p.pow(j as u32) % p).collect();
        let cw = rs_encode(code, &msg).unwrap();
        let agree = (0..cw.len()).filter(|&i| lists.lists[i].contains(&cw[i])).count();
        if agree as f64 >= alpha * cw.len() as f64 - 1e-9 {
            out.push(cw);
        }
    }
    out.sort();
    out
}

#[test]
fn list_recovery_matches_oracle() {
    let rs = RSCode::new(5, 2, vec![0, 1, 2, 3]).unwrap();
    let lists = PositionLists {
        lists: vec![[1].into(), [2].into(), BTreeSet::new(), [0].into()],
    };
    let got = brute_force_list_recover(&rs, &lists, 0.5).unwrap();
    let mut cws = got.codewords.clone();
    cws.sort();
    assert_eq!(cws, recover_oracle(&rs, &lists, 0.5));
    assert!(got.codewords.contains(&vec![1, 2, 3, 4]));
    assert_eq!(got.total_list_size, 3);
    for (m, cw) in got.messages.iter().zip(&got.codewords) {
        assert_eq!(&rs_encode(&rs, m).unwrap(), cw);
    }
    assert!(brute_force_list_recover(&rs, &PositionLists::new(4), 0.25).unwrap().codewords.is_empty());
    let c = rs_encode(&rs, &[2, 4]).unwrap();
    let exact = PositionLists { lists: c.iter().map(|&s| [s].into()).collect() };
    assert!(brute_force_list_recover(&rs, &exact, 1.0).unwrap().codewords.contains(&c));
    // random lists against the oracle
    let rs = RSCode::with_standard_points(7, 6, 2).unwrap();
    let mut rng = insdel_core::SplitMix64::new(Seed(77));
    for _ in 0..50 {
        let lists = PositionLists {
            lists: (0..6).map(|_| (0..rng.below(4)).map(|_| rng.below(7)).collect()).collect(),
        };
        for alpha in [0.3, 0.5, 0.7] {
            let mut got = brute_force_list_recover(&rs, &lists, alpha).unwrap().codewords;
            got.sort();
            assert_eq!(got, recover_oracle(&rs, &lists, alpha));
        }
    }
    let huge = RSCode::with_standard_points(101, 4, 4).unwrap();
    assert!(brute_force_list_recover(&huge, &PositionLists::new(4), 0.5).is_err());
}
