//! Implementations of the subcommands. Each returns the full text of its
//! output.

use std::fmt::Write as _;

use insdel_core::bounds::{
    gv_lower_rate, large_q_rate, random_rate_tau_binary, random_rate_tau_q3, rate_deletion_only,
    rate_insertion_only, singleton_rate, zyablov_tau_with, InnerRateInverse, ListSizeClass, RatePoint,
    Search, ZyablovQuery,
};
use insdel_core::channel::{adversarial_block_channel, apply_script, random_channel};
use insdel_core::codes::{greedy_gv_code, sample_random_code, sample_random_linear_code};
use insdel_core::concat::{spread_budget, ConcatCode};
use insdel_core::decode::{certify_list_decodable, monte_carlo_rate_experiment, CertifyMode, ExperimentParams};
use insdel_core::math::big_log;
use insdel_core::spheres::{
    ball_size_upper_bound, deletion_sphere_bounds, enumerate_ball_fixed_length, enumerate_deletion_sphere,
    enumerate_insertion_sphere, insertion_sphere_size, repetition_ball_exact, BallMode, BallQuery,
    BALL_SCAN_LIMIT, DEFAULT_SLACK,
};
use insdel_core::{insdel_distance, is_repetition, run_profile, BigUint, Error, Seed, SplitMix64, Word};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::format::{
    code_digest, curve_row, parse_word, read_json, script_from_file, script_to_file, to_json, CodeFile, OpFile,
    ParamsFile, CURVE_HEADER,
};
use crate::{BallModeArg, Cli, Command, CurveKind, Pattern, SphereKind};

fn seed_of(cli: &Cli) -> CliResult<Seed> {
    cli.seed
        .map(Seed)
        .ok_or_else(|| CliError::Usage("this command needs an explicit --seed".into()))
}

fn lines<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> String {
    words.into_iter().fold(String::new(), |mut s, w| {
        writeln!(s, "{w}").expect("writing to a String");
        s
    })
}

pub fn dispatch(cli: &Cli) -> CliResult<String> {
    let q = cli.q;
    match &cli.command {
        Command::Distance { a, b } => {
            let d = insdel_distance(&parse_word(q, a)?, &parse_word(q, b)?)?;
            Ok(format!("{d}\n"))
        }
        Command::Runs { word } => {
            let p = run_profile(&parse_word(q, word)?);
            Ok(format!("phi={} w={} t={}\n", p.phi, p.w, p.t))
        }
        Command::Sphere { word, kind, n2, list } => sphere(&parse_word(q, word)?, *kind, *n2, *list),
        Command::Ball { word, radius, len, mode, list } => {
            let center = parse_word(q, word)?;
            let target_len = len.unwrap_or(center.len());
            ball(center, *radius, target_len, *mode, *list)
        }
        Command::Curve { kind, epsilon, start, stop, steps } => curve(*kind, q, *epsilon, *start, *stop, *steps),
        Command::GvGreedy { n, d } => Ok(to_json(&CodeFile::from_code(&greedy_gv_code(q, *n, *d)?))),
        Command::Sample { n, size, linear, digest } => {
            let seed = seed_of(cli)?;
            let code = match (linear, size) {
                (Some(k), _) => sample_random_linear_code(q, *n, *k, seed)?.code,
                (None, Some(m)) => sample_random_code(q, *n, *m, seed)?,
                (None, None) => return Err(CliError::Usage("give --size or --linear".into())),
            };
            Ok(if *digest {
                format!("{}\n", code_digest(&code))
            } else {
                to_json(&CodeFile::from_code(&code))
            })
        }
        Command::Digest { code } => {
            let file: CodeFile = read_json(code)?;
            Ok(format!("{}\n", code_digest(&file.to_code()?)))
        }
        Command::Stats { code } => {
            let file: CodeFile = read_json(code)?;
            let s = file.to_code()?.stats()?;
            Ok(to_json(&StatsReport { size: file.words.len(), rate: s.rate, min_dist: s.min_dist, rel_dist: s.rel_dist }))
        }
        Command::Certify { code, tau_n, list_size, sampled } => {
            let file: CodeFile = read_json(code)?;
            let mode = match sampled {
                Some(k) => CertifyMode::Sampled { centers: *k, seed: seed_of(cli)? },
                None => CertifyMode::Exhaustive,
            };
            let cert = certify_list_decodable(&file.to_code()?, *tau_n, *list_size, mode)?;
            Ok(to_json(&CertifyReport {
                ok: cert.ok,
                witness: cert.witness.as_ref().map(Word::to_string),
                centers_checked: cert.centers_checked as u64,
            }))
        }
        Command::Channel { word, ins, del, script } => {
            let w = parse_word(q, word)?;
            let (out, script) = match script {
                Some(path) => {
                    let ops: Vec<OpFile> = read_json(path)?;
                    let s = script_from_file(&ops);
                    (apply_script(&w, &s)?, s)
                }
                None => random_channel(&w, *ins, *del, seed_of(cli)?)?,
            };
            Ok(to_json(&ChannelReport {
                input: w.to_string(),
                output: out.to_string(),
                distance: insdel_distance(&w, &out)?,
                script: script_to_file(&script),
            }))
        }
        Command::ConcatEncode { params, message } => {
            let code = load_concat(params)?;
            let msg = parse_symbols(message)?;
            Ok(format!("{}\n", code.encode_message(&msg)?))
        }
        Command::ConcatDecode { params, word } => {
            let code = load_concat(params)?;
            let r = parse_word(code.params().q, word)?;
            let d = code.list_decode(&r)?;
            Ok(to_json(&DecodeReport {
                codewords: d.codewords.iter().map(Word::to_string).collect(),
                messages: d.messages,
                windows: d.windows,
                max_inner_list: d.max_inner_list,
                total_list_size: d.total_list_size,
                list_budget: d.list_budget,
            }))
        }
        Command::ConcatRoundtrip { params, budget, pattern } => {
            let code = load_concat(params)?;
            let budget = budget.unwrap_or(code.params().budget());
            Ok(to_json(&concat_roundtrip(&code, seed_of(cli)?, budget, *pattern)?))
        }
        Command::Experiment { n, gamma, kappa, epsilon, trials, centers } => {
            let seed = seed_of(cli)?;
            let p = ExperimentParams {
                q,
                n: *n,
                gamma: *gamma,
                kappa: *kappa,
                epsilon: *epsilon,
                trials: *trials,
                centers: *centers,
                seed,
            };
            let r = monte_carlo_rate_experiment(&p)?;
            Ok(to_json(&ExperimentFile {
                params: ExperimentParamsFile { q, n: *n, gamma: *gamma, kappa: *kappa, epsilon: *epsilon, centers: *centers },
                trials: *trials,
                failures: r.failures,
                witnesses: r.witnesses.iter().map(Word::to_string).collect(),
                seed: seed.0,
                rate: r.rate,
                code_size: r.code_size,
                tau_n: r.tau_n,
                list_size: r.list_size,
                failure_fraction: r.failure_fraction(),
            }))
        }
    }
}

fn parse_symbols(text: &str) -> CliResult<Vec<u64>> {
    text.split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad message symbol {s:?}"))))
        .collect()
}

pub fn load_concat(path: &std::path::Path) -> CliResult<ConcatCode> {
    let file: ParamsFile = read_json(path)?;
    Ok(ConcatCode::new(file.params(), file.inner()?)?)
}

fn sphere(s: &Word, kind: SphereKind, n2: usize, list: bool) -> CliResult<String> {
    match kind {
        SphereKind::Insertion => {
            let size = insertion_sphere_size(s.len() as u64, n2 as u64, s.q() as u64);
            if !list {
                return Ok(format!("size {size}\n"));
            }
            if size > BigUint::from(BALL_SCAN_LIMIT) {
                return Err(Error::Capacity { needed: u128::MAX, limit: BALL_SCAN_LIMIT }.into());
            }
            Ok(lines(&enumerate_insertion_sphere(s, n2)))
        }
        SphereKind::Deletion => {
            let set = enumerate_deletion_sphere(s, n2)?;
            if list {
                return Ok(lines(&set));
            }
            let b = deletion_sphere_bounds(run_profile(s).phi as u64, n2 as u64);
            Ok(format!("size {}\nlower {}\nupper {}\n", set.len(), b.lower, b.upper))
        }
    }
}

fn ball(center: Word, radius: usize, target_len: usize, mode: BallModeArg, list: bool) -> CliResult<String> {
    let m = center.len();
    let q = center.q();
    let profile = run_profile(&center);
    let repetition = is_repetition(&center) && m > 0;
    let mode = match mode {
        BallModeArg::Oracle => BallMode::Oracle,
        BallModeArg::Fast => BallMode::Fast,
    };
    let set = enumerate_ball_fixed_length(&BallQuery { center, radius, target_len }, mode)?;
    if list {
        return Ok(lines(&set));
    }
    let mut out = format!("size {}\n", set.len());
    if !set.is_empty() {
        let log = big_log(&BigUint::from(set.len()), q as u64);
        writeln!(out, "log_size {log:.6}").expect("writing to a String");
    }
    if profile.w > 0 && profile.w < m {
        let e = ball_size_upper_bound(&profile, m, target_len, radius, q, DEFAULT_SLACK)?;
        writeln!(out, "bound_exponent {e:.6}").expect("writing to a String");
    }
    if repetition {
        let exact = repetition_ball_exact(m as u64, target_len as u64, radius as u64, q as u64);
        writeln!(out, "repetition_exact {exact}").expect("writing to a String");
    }
    Ok(out)
}

fn flag_of(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) | Error::InvalidAlphabet(_) => "domain",
        Error::OutOfRegime(_) => "out_of_regime",
        Error::Infeasible(_) => "infeasible",
        _ => "error",
    }
}

fn curve(kind: CurveKind, q: u32, eps: f64, start: f64, stop: f64, steps: usize) -> CliResult<String> {
    if steps < 2 {
        return Err(CliError::Usage("a sweep needs at least 2 steps".into()));
    }
    let qq = q as u64;
    let inverse = match kind {
        CurveKind::Zyablov => Some(InnerRateInverse::new(qq, Search::default())?),
        _ => None,
    };
    let mut out = String::from(CURVE_HEADER);
    out.push('\n');
    for k in 0..steps {
        let x = if k + 1 == steps { stop } else { start + (stop - start) * k as f64 / (steps - 1) as f64 };
        let point = match kind {
            CurveKind::Singleton => singleton_rate(x),
            CurveKind::Gv => gv_lower_rate(qq, x),
            CurveKind::RandomQ3 => random_rate_tau_q3(qq, x, eps).map(|t| t.point),
            CurveKind::RandomBinary => random_rate_tau_binary(x, eps).map(|t| t.point),
            CurveKind::InsertionOnly => rate_insertion_only(qq, x, eps),
            CurveKind::DeletionOnly => rate_deletion_only(qq, x, eps),
            CurveKind::LargeQ => large_q_rate(x, eps),
            CurveKind::Zyablov => {
                let inv = inverse.as_ref().expect("built above");
                zyablov_tau_with(&ZyablovQuery::new(qq, x, eps), inv).map(|z| RatePoint {
                    x,
                    raw: z.tau,
                    rate: z.tau.clamp(0.0, 1.0),
                    list_size: ListSizeClass::Polynomial,
                    note: None,
                })
            }
        };
        curve_row(&mut out, x, point.as_ref().map(|p| *p).map_err(flag_of));
    }
    Ok(out)
}

#[derive(Serialize)]
struct StatsReport {
    size: usize,
    rate: f64,
    min_dist: usize,
    rel_dist: f64,
}

#[derive(Serialize)]
struct CertifyReport {
    ok: bool,
    witness: Option<String>,
    centers_checked: u64,
}

#[derive(Serialize)]
struct ChannelReport {
    input: String,
    output: String,
    distance: usize,
    script: Vec<OpFile>,
}

#[derive(Serialize)]
struct DecodeReport {
    codewords: Vec<String>,
    messages: Vec<Vec<u64>>,
    windows: usize,
    max_inner_list: usize,
    total_list_size: usize,
    list_budget: usize,
}

#[derive(Serialize)]
struct ExperimentParamsFile {
    q: u32,
    n: usize,
    gamma: f64,
    kappa: f64,
    epsilon: f64,
    centers: u64,
}

#[derive(Serialize)]
struct ExperimentFile {
    params: ExperimentParamsFile,
    trials: usize,
    failures: usize,
    witnesses: Vec<String>,
    seed: u64,
    rate: f64,
    code_size: usize,
    tau_n: usize,
    list_size: usize,
    failure_fraction: f64,
}

/// Outcome of one encode, corrupt, decode cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub seed: u64,
    pub message: Vec<u64>,
    pub sent: String,
    pub received: String,
    pub budget: usize,
    pub guaranteed_budget: usize,
    pub block_budgets: Vec<usize>,
    pub distance: usize,
    pub good_indices: usize,
    pub contained: bool,
    pub list_size: usize,
    pub windows: usize,
    pub total_list_size: usize,
    pub list_budget: usize,
}

/// Per-block edit counts: `Spread` adds edits one at a time to random
/// blocks, `Concentrated` fills consecutive blocks from a random start.
pub fn block_budgets(total: usize, blocks: usize, block_len: usize, pattern: Pattern, seed: Seed) -> CliResult<Vec<usize>> {
    match pattern {
        Pattern::Spread => Ok(spread_budget(total, blocks, block_len, seed)?),
        Pattern::Concentrated => {
            let cap = 2 * block_len;
            if total > cap * blocks {
                return Err(Error::InvalidParams("budget exceeds channel capacity").into());
            }
            let mut rng = SplitMix64::new(seed);
            let mut b = rng.below(blocks as u64) as usize;
            let mut left = total;
            let mut out = vec![0; blocks];
            while left > 0 {
                let take = left.min(cap);
                out[b] = take;
                left -= take;
                b = (b + 1) % blocks;
            }
            Ok(out)
        }
    }
}

/// Draws a message from `seed.derive(0)`, the block budgets from
/// `seed.derive(1)` and the channel from `seed.derive(2)`.
pub fn concat_roundtrip(code: &ConcatCode, seed: Seed, budget: usize, pattern: Pattern) -> CliResult<RoundtripReport> {
    let p = *code.params();
    let mut rng = SplitMix64::new(seed.derive(0));
    let message: Vec<u64> = (0..p.k).map(|_| rng.below(p.p)).collect();
    let sent = code.encode_message(&message)?;
    let budgets = block_budgets(budget, p.big_n, p.n, pattern, seed.derive(1))?;
    let out = adversarial_block_channel(&sent, p.n, &budgets, seed.derive(2))?;
    let good = code.good_index_count(&sent, &out.word, &out.block_lengths)?;
    let (lo, hi) = code.received_length_range();
    let (contained, list_size, windows, total, list_budget) = if (lo..=hi).contains(&out.word.len()) {
        let d = code.list_decode(&out.word)?;
        (d.codewords.contains(&sent), d.codewords.len(), d.windows, d.total_list_size, d.list_budget)
    } else {
        // the decoder only accepts lengths its guarantee covers
        (false, 0, 0, 0, 0)
    };
    Ok(RoundtripReport {
        seed: seed.0,
        message,
        sent: sent.to_string(),
        received: out.word.to_string(),
        budget,
        guaranteed_budget: p.budget(),
        block_budgets: budgets,
        distance: insdel_distance(&sent, &out.word)?,
        good_indices: good,
        contained,
        list_size,
        windows,
        total_list_size: total,
        list_budget,
    })
}
