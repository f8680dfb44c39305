use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::pattern::{volume, BoxIndices};
use super::{Alphabet, Letter, Pattern, Word};
use crate::error::{invalid, Error, Result};

/// Block extents of a pattern, one entry per lattice axis.
pub type Shape = Vec<usize>;

/// All admissible block patterns of a subshift whose extents are at most
/// `cap` along every axis, stored modulo translation.
///
/// Every shape in `[1, cap]^d` has an entry, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionarySlice {
    alphabet: Alphabet,
    dim: usize,
    cap: usize,
    entries: BTreeMap<Shape, BTreeSet<Vec<Letter>>>,
}

/// Which side of a pattern lacks an admissible one-step extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    /// Towards smaller coordinates (left in 1D).
    Lower,
    /// Towards larger coordinates (right in 1D).
    Upper,
}

/// A failure of finite heredity (D1) or finite extensibility (D2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Heredity { pattern: Pattern, missing: Pattern },
    Extensibility { pattern: Pattern, axis: usize, side: Side },
}

/// Agreement level of two slices in the local pattern topology.
///
/// `Level(n)` means the slices agree on every shape with extents at most
/// `n` and differ at some shape with extent `n + 1`. `Full` means they agree
/// up to the common cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Proximity {
    Level(usize),
    Full,
}

impl Proximity {
    /// True when the agreement level is at least `n`.
    pub fn at_least(self, n: usize) -> bool {
        match self {
            Proximity::Full => true,
            Proximity::Level(l) => l >= n,
        }
    }
}

impl core::fmt::Display for Proximity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Proximity::Level(n) => write!(f, "{n}"),
            Proximity::Full => f.write_str("inf"),
        }
    }
}

/// Pattern counts per block shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityTable {
    pub counts: Vec<(Shape, usize)>,
}

impl ComplexityTable {
    pub fn get(&self, shape: &[usize]) -> Option<usize> {
        self.counts.iter().find(|(s, _)| s.as_slice() == shape).map(|&(_, c)| c)
    }

    /// One-dimensional table `comp(1), …, comp(L)`.
    pub fn by_length(&self) -> Vec<usize> {
        self.counts.iter().filter(|(s, _)| s.len() == 1).map(|&(_, c)| c).collect()
    }
}

impl DictionarySlice {
    pub fn empty(alphabet: Alphabet, dim: usize, cap: usize) -> Result<Self> {
        if dim == 0 || cap == 0 {
            return Err(invalid("slice dimension and cap must be positive"));
        }
        let entries = BoxIndices::new(&vec![cap; dim])
            .map(|idx| (idx.iter().map(|i| i + 1).collect::<Shape>(), BTreeSet::new()))
            .collect();
        Ok(Self { alphabet, dim, cap, entries })
    }

    /// A slice holding exactly the given patterns, with no closure applied.
    pub fn from_entries<I>(alphabet: Alphabet, dim: usize, cap: usize, patterns: I) -> Result<Self>
    where
        I: IntoIterator<Item = Pattern>,
    {
        let mut s = Self::empty(alphabet, dim, cap)?;
        for p in patterns {
            s.check_pattern(&p)?;
            s.entries.get_mut(p.dims()).expect("shape within cap").insert(p.cells().to_vec());
        }
        Ok(s)
    }

    /// All sub-blocks (up to `cap`) of the given finite patterns.
    pub fn from_sources<'a, I>(alphabet: Alphabet, dim: usize, cap: usize, sources: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Pattern>,
    {
        let mut s = Self::empty(alphabet, dim, cap)?;
        for p in sources {
            if p.dim() != dim {
                return Err(invalid("source pattern has the wrong dimension"));
            }
            if p.cells().iter().any(|&l| !s.alphabet.contains(l)) {
                return Err(invalid("source pattern uses letters outside the alphabet"));
            }
            s.absorb(p);
        }
        Ok(s)
    }

    /// Every pattern over the alphabet: the dictionary of the full shift.
    pub fn full_shift(alphabet: Alphabet, dim: usize, cap: usize) -> Result<Self> {
        let mut s = Self::empty(alphabet, dim, cap)?;
        let n = s.alphabet.len();
        let biggest = volume(&vec![cap; dim]);
        if (biggest as f64) * libm::log2(n as f64) > 24.0 {
            return Err(invalid("full shift slice too large to enumerate"));
        }
        for (shape, set) in s.entries.iter_mut() {
            let vol = volume(shape);
            for idx in BoxIndices::new(&vec![n; vol]) {
                set.insert(idx.into_iter().map(|i| Letter(i as u8)).collect());
            }
        }
        Ok(s)
    }

    /// Factors of the two-sided word `… l l l m r r r …`.
    pub fn eventually_periodic(
        alphabet: Alphabet,
        left: &Word,
        middle: &Word,
        right: &Word,
        cap: usize,
    ) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(invalid("periodic tails must be nonempty"));
        }
        let mut cells = Vec::new();
        for _ in 0..cap / left.len() + 2 {
            cells.extend_from_slice(left.letters());
        }
        cells.extend_from_slice(middle.letters());
        for _ in 0..cap / right.len() + 2 {
            cells.extend_from_slice(right.letters());
        }
        let source = Pattern::from_word(&Word::new(cells));
        Self::from_sources(alphabet, 1, cap, [&source])
    }

    fn check_pattern(&self, p: &Pattern) -> Result<()> {
        if p.dim() != self.dim {
            return Err(invalid("pattern dimension does not match the slice"));
        }
        if p.dims().iter().any(|&n| n == 0 || n > self.cap) {
            return Err(invalid("pattern shape outside the slice cap"));
        }
        if p.cells().iter().any(|&l| !self.alphabet.contains(l)) {
            return Err(invalid("pattern uses letters outside the alphabet"));
        }
        Ok(())
    }

    /// Inserts all sub-blocks of `source`. Returns true if anything was new.
    ///
    /// Only windows of the largest admissible shape are scanned; the smaller
    /// shapes are generated from those, which relies on every stored pattern
    /// having all of its sub-blocks stored as well.
    pub(crate) fn absorb(&mut self, source: &Pattern) -> bool {
        if source.is_empty() {
            return false;
        }
        let top: Shape = source.dims().iter().map(|&n| n.min(self.cap)).collect();
        let origins: Vec<usize> = source.dims().iter().zip(&top).map(|(n, m)| n - m + 1).collect();
        let mut fresh: Vec<Vec<Letter>> = Vec::new();
        let mut buf = Vec::with_capacity(volume(&top));
        {
            let set = self.entries.get(&top).expect("top shape within cap");
            let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
            for o in BoxIndices::new(&origins) {
                source.extract_into(&o, &top, &mut buf);
                if !set.contains(buf.as_slice()) && !seen.contains(buf.as_slice()) {
                    seen.insert(buf.clone());
                }
            }
            fresh.extend(seen);
        }
        let changed = !fresh.is_empty();
        for cells in fresh {
            let p = Pattern::new(top.clone(), cells).expect("consistent extents");
            self.insert_with_sub_blocks(&p, &mut buf);
        }
        changed
    }

    fn insert_with_sub_blocks(&mut self, p: &Pattern, buf: &mut Vec<Letter>) {
        for s in BoxIndices::new(p.dims()) {
            let shape: Shape = s.iter().map(|i| i + 1).collect();
            let origins: Vec<usize> = p.dims().iter().zip(&shape).map(|(n, m)| n - m + 1).collect();
            let set = self.entries.get_mut(&shape).expect("shape within cap");
            for o in BoxIndices::new(&origins) {
                p.extract_into(&o, &shape, buf);
                if !set.contains(buf.as_slice()) {
                    set.insert(buf.clone());
                }
            }
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn shapes(&self) -> impl Iterator<Item = &Shape> {
        self.entries.keys()
    }

    /// Raw cell vectors of one shape, sorted.
    pub fn cells_of(&self, shape: &[usize]) -> Option<&BTreeSet<Vec<Letter>>> {
        self.entries.get(shape)
    }

    pub fn patterns(&self, shape: &[usize]) -> impl Iterator<Item = Pattern> + '_ {
        let shape = shape.to_vec();
        self.entries
            .get(shape.as_slice())
            .into_iter()
            .flatten()
            .map(move |c| Pattern::new(shape.clone(), c.clone()).expect("stored with its shape"))
    }

    /// Words of length `k` in lexicographic order (1D slices).
    pub fn words(&self, k: usize) -> Vec<Word> {
        self.entries
            .get([k].as_slice())
            .map(|set| set.iter().map(|c| Word::new(c.clone())).collect())
            .unwrap_or_default()
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.entries.get(p.dims()).is_some_and(|s| s.contains(p.cells()))
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        self.entries.get([w.len()].as_slice()).is_some_and(|s| s.contains(w.letters()))
    }

    /// Total number of stored patterns.
    pub fn len(&self) -> usize {
        self.entries.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The same slice truncated to a smaller cap.
    pub fn truncated(&self, cap: usize) -> Result<Self> {
        if cap == 0 || cap > self.cap {
            return Err(invalid("truncation cap must lie in 1..=cap"));
        }
        let entries = self
            .entries
            .iter()
            .filter(|(s, _)| s.iter().all(|&n| n <= cap))
            .map(|(s, v)| (s.clone(), v.clone()))
            .collect();
        Ok(Self { alphabet: self.alphabet.clone(), dim: self.dim, cap, entries })
    }

    /// Lists every finite heredity (D1) and extensibility (D2) violation.
    /// An empty list means the slice is a valid truncation of a dictionary.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut buf = Vec::new();
        for (shape, set) in &self.entries {
            for axis in 0..self.dim {
                if shape[axis] < 2 {
                    continue;
                }
                let mut smaller = shape.clone();
                smaller[axis] -= 1;
                let target = &self.entries[&smaller];
                for cells in set {
                    let p = Pattern::new(shape.clone(), cells.clone()).expect("stored with its shape");
                    for shift in 0..2 {
                        let mut origin = vec![0; self.dim];
                        origin[axis] = shift;
                        p.extract_into(&origin, &smaller, &mut buf);
                        if !target.contains(buf.as_slice()) {
                            out.push(Violation::Heredity {
                                pattern: p.clone(),
                                missing: Pattern::new(smaller.clone(), buf.clone()).expect("sub-block"),
                            });
                        }
                    }
                }
            }
        }
        for (shape, set) in &self.entries {
            for axis in 0..self.dim {
                if shape[axis] >= self.cap {
                    continue;
                }
                let mut bigger = shape.clone();
                bigger[axis] += 1;
                let mut extends_upper: BTreeSet<Vec<Letter>> = BTreeSet::new();
                let mut extends_lower: BTreeSet<Vec<Letter>> = BTreeSet::new();
                for cells in &self.entries[&bigger] {
                    let w = Pattern::new(bigger.clone(), cells.clone()).expect("stored with its shape");
                    let mut origin = vec![0; self.dim];
                    w.extract_into(&origin, shape, &mut buf);
                    extends_upper.insert(buf.clone());
                    origin[axis] = 1;
                    w.extract_into(&origin, shape, &mut buf);
                    extends_lower.insert(buf.clone());
                }
                for cells in set {
                    for (side, ok) in [(Side::Lower, &extends_lower), (Side::Upper, &extends_upper)] {
                        if !ok.contains(cells) {
                            out.push(Violation::Extensibility {
                                pattern: Pattern::new(shape.clone(), cells.clone()).expect("stored"),
                                axis,
                                side,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn complexity(&self) -> ComplexityTable {
        ComplexityTable { counts: self.entries.iter().map(|(s, v)| (s.clone(), v.len())).collect() }
    }

    fn comparable(&self, other: &Self) -> Result<usize> {
        if self.alphabet != other.alphabet {
            return Err(invalid("slices are over different alphabets"));
        }
        if self.dim != other.dim {
            return Err(Error::UnsupportedDimension {
                found: other.dim,
                context: "slices of different dimension",
            });
        }
        Ok(self.cap.min(other.cap))
    }

    fn level_where<F>(&self, other: &Self, holds: F) -> Result<Proximity>
    where
        F: Fn(&BTreeSet<Vec<Letter>>, &BTreeSet<Vec<Letter>>) -> bool,
    {
        let cap = self.comparable(other)?;
        for n in 1..=cap {
            let bad = self.entries.iter().any(|(shape, mine)| {
                let max = shape.iter().copied().max().unwrap_or(0);
                max == n && !holds(mine, &other.entries[shape])
            });
            if bad {
                return Ok(Proximity::Level(n - 1));
            }
        }
        Ok(Proximity::Full)
    }

    /// Largest `n` such that both slices agree on every shape with extents
    /// at most `n`.
    pub fn proximity_index(&self, other: &Self) -> Result<Proximity> {
        self.level_where(other, |a, b| a == b)
    }

    /// Largest `n` such that every pattern of this slice with extents at
    /// most `n` also lies in `other`.
    pub fn containment_level(&self, other: &Self) -> Result<Proximity> {
        self.level_where(other, |a, b| a.is_subset(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    fn words(a: &Alphabet, ws: &[&str]) -> Vec<Pattern> {
        ws.iter().map(|w| Pattern::from_word(&a.parse_word(w).unwrap())).collect()
    }

    #[test]
    fn missing_right_extension_is_reported() {
        let a = ab();
        let s = DictionarySlice::from_entries(a.clone(), 1, 2, words(&a, &["a", "b", "ab"])).unwrap();
        let v = s.validate();
        let b = Pattern::from_word(&a.parse_word("b").unwrap());
        assert!(v.contains(&Violation::Extensibility { pattern: b, axis: 0, side: Side::Upper }));
    }

    #[test]
    fn missing_letter_is_a_heredity_violation() {
        let a = ab();
        let s = DictionarySlice::from_entries(a.clone(), 1, 2, words(&a, &["a", "ab"])).unwrap();
        let v = s.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::Heredity { missing, .. }
            if missing.cells() == [Letter(1)])));
    }

    #[test]
    fn one_defect_complexity() {
        let a = ab();
        let s = DictionarySlice::eventually_periodic(
            a.clone(),
            &a.parse_word("a").unwrap(),
            &a.parse_word("b").unwrap(),
            &a.parse_word("a").unwrap(),
            4,
        )
        .unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.complexity().by_length(), vec![2, 3, 4, 5]);
        let three: Vec<_> = s.words(3).iter().map(|w| a.render(w.letters())).collect();
        assert_eq!(three, ["aaa", "aab", "aba", "baa"]);
    }

    #[test]
    fn full_shift_counts() {
        let s = DictionarySlice::full_shift(ab(), 1, 4).unwrap();
        assert_eq!(s.complexity().by_length(), vec![2, 4, 8, 16]);
        assert!(s.validate().is_empty());
        let s2 = DictionarySlice::full_shift(ab(), 2, 2).unwrap();
        assert_eq!(s2.complexity().get(&[2, 2]), Some(16));
        assert!(s2.validate().is_empty());
    }

    #[test]
    fn proximity_identical_is_full() {
        let s = DictionarySlice::full_shift(ab(), 1, 5).unwrap();
        assert_eq!(s.proximity_index(&s).unwrap(), Proximity::Full);
    }

    #[test]
    fn proximity_rejects_alphabet_mismatch() {
        let s = DictionarySlice::full_shift(ab(), 1, 3).unwrap();
        let t = DictionarySlice::full_shift(Alphabet::from_chars("xy").unwrap(), 1, 3).unwrap();
        assert!(matches!(s.proximity_index(&t), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn proximity_ordering() {
        assert!(Proximity::Level(7) < Proximity::Full);
        assert!(Proximity::Level(2) < Proximity::Level(3));
        assert!(Proximity::Full.at_least(100));
        assert!(!Proximity::Level(1).at_least(2));
    }

    #[test]
    fn truncation_keeps_small_shapes() {
        let s = DictionarySlice::full_shift(ab(), 1, 4).unwrap();
        let t = s.truncated(2).unwrap();
        assert_eq!(t.complexity().by_length(), vec![2, 4]);
        assert_eq!(s.proximity_index(&t).unwrap(), Proximity::Full);
    }
}
