//! File formats: code JSON and its digest, concatenated-code parameter
//! files, edit scripts, and rate-curve CSV.

use std::fmt::Write as _;
use std::path::Path;

use insdel_core::bounds::RatePoint;
use insdel_core::channel::{EditOp, EditScript};
use insdel_core::codes::Code;
use insdel_core::concat::{ConcatParams, InnerSource};
use insdel_core::{Alphabet, Seed, Word};
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub fn parse_word(q: u32, text: &str) -> CliResult<Word> {
    Ok(Word::parse(Alphabet::new(q)?, text)?)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// `{q, n, words}` with words in their text form, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    pub n: usize,
    pub words: Vec<String>,
}

impl CodeFile {
    pub fn from_code(code: &Code) -> Self {
        CodeFile {
            q: code.q(),
            n: code.n(),
            words: code.words().iter().map(Word::to_string).collect(),
        }
    }

    pub fn to_code(&self) -> CliResult<Code> {
        let alphabet = Alphabet::new(self.q)?;
        let words = self
            .words
            .iter()
            .map(|w| Word::parse(alphabet, w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Code::new(alphabet, self.n, words)?)
    }
}

/// SHA-256 of the compact JSON of the canonical (sorted, deduplicated)
/// code, in lowercase hex.
pub fn code_digest(code: &Code) -> String {
    let bytes = serde_json::to_vec(&CodeFile::from_code(code)).expect("plain data serializes");
    hex::encode(Sha256::digest(&bytes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerFile {
    Seed(u64),
    Words(Vec<String>),
}

/// Parameter file of a concatenated code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsFile {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub q: u32,
    pub p: u64,
    #[serde(rename = "K")]
    pub k: usize,
    pub eps_cont: f64,
    pub tau_in: f64,
    pub tau_star: f64,
    pub alpha_out: f64,
    pub eps_conc: f64,
    pub inner: InnerFile,
}

impl ParamsFile {
    pub fn params(&self) -> ConcatParams {
        ConcatParams {
            big_n: self.big_n,
            n: self.n,
            q: self.q,
            p: self.p,
            k: self.k,
            eps_cont: self.eps_cont,
            tau_in: self.tau_in,
            tau_star: self.tau_star,
            alpha_out: self.alpha_out,
            eps_conc: self.eps_conc,
        }
    }

    pub fn inner(&self) -> CliResult<InnerSource> {
        Ok(match &self.inner {
            InnerFile::Seed(s) => InnerSource::Seeded(Seed(*s)),
            InnerFile::Words(ws) => InnerSource::Words(
                ws.iter().map(|w| parse_word(self.q, w)).collect::<CliResult<Vec<_>>>()?,
            ),
        })
    }
}

/// One edit; positions are 1-based in the word as it is when applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum OpFile {
    Delete { pos: usize },
    Insert { pos: usize, symbol: u32 },
}

pub fn script_to_file(script: &EditScript) -> Vec<OpFile> {
    script
        .0
        .iter()
        .map(|op| match *op {
            EditOp::Delete { pos } => OpFile::Delete { pos },
            EditOp::Insert { pos, symbol } => OpFile::Insert { pos, symbol },
        })
        .collect()
}

pub fn script_from_file(ops: &[OpFile]) -> EditScript {
    EditScript(
        ops.iter()
            .map(|op| match *op {
                OpFile::Delete { pos } => EditOp::Delete { pos },
                OpFile::Insert { pos, symbol } => EditOp::Insert { pos, symbol },
            })
            .collect(),
    )
}

pub const CURVE_HEADER: &str = "x,rate_raw,rate_clamped,list_size_class,flag";

/// A CSV row; `Err` leaves the rate columns empty and puts the reason in
/// the flag column.
pub fn curve_row(out: &mut String, x: f64, point: Result<RatePoint, &str>) {
    match point {
        Ok(p) => {
            let flag = p.note.map_or("", |_| "regime");
            writeln!(out, "{:.6},{:.6},{:.6},{},{}", x, p.raw, p.rate, p.list_size.as_str(), flag)
        }
        Err(flag) => writeln!(out, "{x:.6},,,,{flag}"),
    }
    .expect("writing to a String");
}
