//! Compositions, packed words, permutations and their statistics.

mod composition;
mod patterns;
mod permutation;
mod words;

pub use composition::{compositions_of, st, st_prime, Composition, StValue, WeakComposition};
pub(crate) use composition::coarsening_masks;
pub use patterns::{crossings, pattern_21_1, pattern_2_31, pattern_31_2, totg};
pub use permutation::{permutations, Permutation, Permutations};
pub use words::{dc, pack, packed_words, parse_word, sinv, std, wc, PackedWord};
