use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::symbolic::Letter;

/// A function of the configuration that only depends on the letters in the
/// window `[m - radius, m + radius]` around the evaluation site `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalFunction<T> {
    radius: usize,
    table: BTreeMap<Vec<Letter>, T>,
    default: T,
}

impl<T: Copy> LocalFunction<T> {
    /// Windows not listed in `table` take the value `default`.
    pub fn new(radius: usize, table: BTreeMap<Vec<Letter>, T>, default: T) -> Result<Self> {
        if table.keys().any(|k| k.len() != 2 * radius + 1) {
            return Err(invalid("table keys must be windows of length 2 * radius + 1"));
        }
        Ok(Self { radius, table, default })
    }

    pub fn constant(value: T) -> Self {
        Self { radius: 0, table: BTreeMap::new(), default: value }
    }

    /// `on` where the letter at the site is `letter`, `off` elsewhere.
    pub fn indicator(letter: Letter, on: T, off: T) -> Self {
        let mut table = BTreeMap::new();
        table.insert(alloc::vec![letter], on);
        Self { radius: 0, table, default: off }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn value(&self, window: &[Letter]) -> T {
        debug_assert_eq!(window.len(), 2 * self.radius + 1);
        self.table.get(window).copied().unwrap_or(self.default)
    }
}
