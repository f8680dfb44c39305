use alloc::vec::Vec;

use super::pattern::{volume, BoxIndices};
use super::{Alphabet, DictionarySlice, Letter, Pattern, Word};
use crate::error::{invalid, Result};

/// A configuration on `Z^d` repeating a fundamental tile along every axis.
///
/// The tile cell at index `i` is the value at every lattice point congruent
/// to `i` modulo the tile extents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicConfiguration {
    alphabet: Alphabet,
    tile: Pattern,
}

impl PeriodicConfiguration {
    pub fn new(alphabet: Alphabet, tile: Pattern) -> Result<Self> {
        if tile.is_empty() {
            return Err(invalid("periodic tile must be nonempty"));
        }
        if tile.cells().iter().any(|&l| !alphabet.contains(l)) {
            return Err(invalid("tile uses letters outside the alphabet"));
        }
        Ok(Self { alphabet, tile })
    }

    /// The bi-infinite repetition `… w w w …` with `w` starting at 0.
    pub fn from_word(alphabet: Alphabet, w: &Word) -> Result<Self> {
        Self::new(alphabet, Pattern::from_word(w))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn tile(&self) -> &Pattern {
        &self.tile
    }

    pub fn dim(&self) -> usize {
        self.tile.dim()
    }

    /// Period along each axis.
    pub fn periods(&self) -> &[usize] {
        self.tile.dims()
    }

    pub fn letter_at(&self, point: &[i64]) -> Letter {
        let idx: Vec<usize> = point
            .iter()
            .zip(self.tile.dims())
            .map(|(&x, &n)| x.rem_euclid(n as i64) as usize)
            .collect();
        self.tile.get(&idx)
    }

    /// The block with lower corner `origin` and extents `shape`.
    pub fn window(&self, origin: &[i64], shape: &[usize]) -> Pattern {
        let mut cells = Vec::with_capacity(volume(shape));
        let mut p: Vec<i64> = origin.to_vec();
        for idx in BoxIndices::new(shape) {
            for j in 0..p.len() {
                p[j] = origin[j] + idx[j] as i64;
            }
            cells.push(self.letter_at(&p));
        }
        Pattern::new(shape.to_vec(), cells).expect("window extents match")
    }

    /// The translate `x ↦ ξ(x + shift)`, again given by a fundamental tile.
    pub fn shifted(&self, shift: &[i64]) -> Self {
        Self { alphabet: self.alphabet.clone(), tile: self.window(shift, self.tile.dims()) }
    }

    /// Dictionary slice of the periodic orbit up to `cap`.
    ///
    /// Scans one period of window origins over a tile enlarged by `cap - 1`
    /// along every axis, which meets every block of the orbit.
    pub fn dictionary(&self, cap: usize) -> Result<DictionarySlice> {
        if cap == 0 {
            return Err(invalid("slice cap must be positive"));
        }
        let origin = alloc::vec![0i64; self.dim()];
        let ext: Vec<usize> = self.tile.dims().iter().map(|&n| n + cap - 1).collect();
        let big = self.window(&origin, &ext);
        DictionarySlice::from_sources(self.alphabet.clone(), self.dim(), cap, [&big])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Proximity;

    #[test]
    fn word_orbit_dictionary() {
        let a = Alphabet::from_chars("ab").unwrap();
        let c = PeriodicConfiguration::from_word(a.clone(), &a.parse_word("aab").unwrap()).unwrap();
        let d = c.dictionary(4).unwrap();
        assert_eq!(d.complexity().by_length(), alloc::vec![2, 3, 3, 3]);
        assert!(d.validate().is_empty());
    }

    #[test]
    fn shift_leaves_dictionary_unchanged() {
        let a = Alphabet::from_chars("abc").unwrap();
        let tile = Pattern::new(alloc::vec![2, 3], a.parse_word("abcbca").unwrap().into_letters()).unwrap();
        let c = PeriodicConfiguration::new(a, tile).unwrap();
        let d0 = c.dictionary(3).unwrap();
        let d1 = c.shifted(&[1, -2]).dictionary(3).unwrap();
        assert_eq!(d0.proximity_index(&d1).unwrap(), Proximity::Full);
        assert_eq!(c.letter_at(&[-1, -1]), c.tile().get(&[1, 2]));
    }
}
