//! Insertion/deletion channels driven by explicit edit scripts.
//!
//! Positions are 1-based and refer to the word as it is when the operation
//! is applied. `Delete { pos }` removes the symbol at `pos`;
//! `Insert { pos, symbol }` places `symbol` before position `pos`, with
//! `pos = len + 1` appending.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rng::{Seed, SplitMix64};
use crate::word::{Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EditOp {
    Delete { pos: usize },
    Insert { pos: usize, symbol: Symbol },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EditScript(pub Vec<EditOp>);

impl EditScript {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insertions(&self) -> usize {
        self.0.iter().filter(|op| matches!(op, EditOp::Insert { .. })).count()
    }

    pub fn deletions(&self) -> usize {
        self.len() - self.insertions()
    }
}

fn apply_ops(symbols: &mut Vec<Symbol>, ops: &[EditOp], q: u32) -> Result<()> {
    for op in ops {
        match *op {
            EditOp::Delete { pos } => {
                if pos == 0 || pos > symbols.len() {
                    return Err(Error::Script { position: pos, len: symbols.len() });
                }
                symbols.remove(pos - 1);
            }
            EditOp::Insert { pos, symbol } => {
                if pos == 0 || pos > symbols.len() + 1 {
                    return Err(Error::Script { position: pos, len: symbols.len() });
                }
                if symbol >= q {
                    return Err(Error::SymbolOutOfRange { symbol, q });
                }
                symbols.insert(pos - 1, symbol);
            }
        }
    }
    Ok(())
}

pub fn apply_script(w: &Word, script: &EditScript) -> Result<Word> {
    let mut symbols = w.symbols().to_vec();
    apply_ops(&mut symbols, &script.0, w.q())?;
    Ok(Word::from_trusted(w.alphabet(), symbols))
}

fn random_ops(len: usize, q: u32, n_ins: usize, n_del: usize, rng: &mut SplitMix64) -> Vec<EditOp> {
    let mut ops = Vec::with_capacity(n_ins + n_del);
    let mut cur = len;
    for _ in 0..n_del {
        ops.push(EditOp::Delete { pos: rng.range_inclusive(1, cur as u64) as usize });
        cur -= 1;
    }
    for _ in 0..n_ins {
        let pos = rng.range_inclusive(1, cur as u64 + 1) as usize;
        let symbol = rng.below(q as u64) as Symbol;
        ops.push(EditOp::Insert { pos, symbol });
        cur += 1;
    }
    ops
}

/// `n_del` uniformly placed deletions followed by `n_ins` uniformly placed
/// insertions of uniform symbols.
pub fn random_channel(w: &Word, n_ins: usize, n_del: usize, seed: Seed) -> Result<(Word, EditScript)> {
    if n_del > w.len() {
        return Err(Error::InvalidParams("more deletions than symbols"));
    }
    let mut rng = SplitMix64::new(seed);
    let script = EditScript(random_ops(w.len(), w.q(), n_ins, n_del, &mut rng));
    let out = apply_script(w, &script)?;
    Ok((out, script))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockChannelOutput {
    pub word: Word,
    /// The whole edit in the coordinates of the full word.
    pub script: EditScript,
    /// Length of the received segment produced by each block.
    pub block_lengths: Vec<usize>,
}

/// Splits `c` into blocks of `block_len` and applies exactly `budgets[b]`
/// edits to block `b`. The number of deletions in a block is uniform in
/// `0..=min(budget, block_len)`; the rest are insertions. Block `b` draws
/// from `seed.derive(b)`.
pub fn adversarial_block_channel(
    c: &Word,
    block_len: usize,
    budgets: &[usize],
    seed: Seed,
) -> Result<BlockChannelOutput> {
    if block_len == 0 || c.len() != block_len * budgets.len() {
        return Err(Error::LengthMismatch {
            expected: block_len * budgets.len(),
            found: c.len(),
        });
    }
    if budgets.iter().any(|&b| b > 2 * block_len) {
        return Err(Error::InvalidParams("block budget exceeds twice the block length"));
    }
    let mut symbols = Vec::with_capacity(c.len());
    let mut ops = Vec::new();
    let mut block_lengths = Vec::with_capacity(budgets.len());
    for (b, (&budget, block)) in budgets.iter().zip(c.symbols().chunks(block_len)).enumerate() {
        let mut rng = SplitMix64::new(seed.derive(b as u64));
        let n_del = rng.below(budget.min(block_len) as u64 + 1) as usize;
        let local = random_ops(block_len, c.q(), budget - n_del, n_del, &mut rng);
        let mut seg = block.to_vec();
        apply_ops(&mut seg, &local, c.q())?;
        let offset = symbols.len();
        ops.extend(local.into_iter().map(|op| match op {
            EditOp::Delete { pos } => EditOp::Delete { pos: pos + offset },
            EditOp::Insert { pos, symbol } => EditOp::Insert { pos: pos + offset, symbol },
        }));
        block_lengths.push(seg.len());
        symbols.extend(seg);
    }
    Ok(BlockChannelOutput {
        word: Word::from_trusted(c.alphabet(), symbols),
        script: EditScript(ops),
        block_lengths,
    })
}
