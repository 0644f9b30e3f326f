//! Combinatorics, rate bounds and a concatenated list-decodable code for
//! channels with insertions and deletions.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure
//! function of its inputs; randomized routines take an explicit [`Seed`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod channel;
pub mod codes;
pub mod concat;
pub mod decode;
mod error;
pub mod math;
mod optimize;
pub mod rng;
pub mod space;
pub mod spheres;
pub mod word;

pub use error::{Error, Result};
pub use rng::{Seed, SplitMix64};
pub use word::{
    count_runs, hamming_weight, insdel_distance, is_repetition, lcs_length, run_profile,
    Alphabet, RunProfile, Symbol, Word,
};

pub use num_bigint::BigUint;
