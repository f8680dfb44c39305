//! Alphabets, words, block patterns and finite dictionary slices.

mod alphabet;
mod dictionary;
mod pattern;
mod periodic;

pub use alphabet::Alphabet;
pub use dictionary::{ComplexityTable, DictionarySlice, Proximity, Shape, Side, Violation};
pub use pattern::{BoxIndices, Letter, Pattern, Word};
pub use periodic::PeriodicConfiguration;

pub(crate) use pattern::{offset, volume};
