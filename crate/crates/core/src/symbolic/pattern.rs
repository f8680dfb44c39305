use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};

/// Index of a letter inside its [`Alphabet`](super::Alphabet).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite word `a_0 a_1 … a_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All distinct factors of length `k`; empty when `k` exceeds the length.
    pub fn subwords(&self, k: usize) -> Result<BTreeSet<Word>> {
        if k == 0 {
            return Err(invalid("subword length must be positive"));
        }
        Ok(self.0.windows(k).map(|w| Word(w.to_vec())).collect())
    }

    /// The smallest `p` such that the periodic extension of this word has
    /// period `p`.
    pub fn minimal_period(&self) -> usize {
        let n = self.0.len();
        (1..=n)
            .filter(|p| n % p == 0)
            .find(|&p| (0..n).all(|i| self.0[i] == self.0[(i + p) % n]))
            .unwrap_or(n)
    }

    pub fn rotated(&self, shift: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(shift % self.0.len());
        Word(v)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

/// A rectangular block pattern on `∏ {0, …, n_j - 1}`.
///
/// Axis `j` is the lattice coordinate `i_{j+1}`; cells are stored row-major
/// with the last axis varying fastest. In two dimensions axis 0 runs left to
/// right and axis 1 runs bottom to top, so the printed matrix of a pattern
/// lists its rows from the top (largest second coordinate) down.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    dims: Vec<usize>,
    cells: Vec<Letter>,
}

impl Pattern {
    pub fn new(dims: Vec<usize>, cells: Vec<Letter>) -> Result<Self> {
        if dims.is_empty() {
            return Err(invalid("patterns need at least one axis"));
        }
        if volume(&dims) != cells.len() {
            return Err(invalid("cell count does not match the block extents"));
        }
        Ok(Self { dims, cells })
    }

    pub fn filled(dims: Vec<usize>, letter: Letter) -> Self {
        let n = volume(&dims);
        Self { dims, cells: vec![letter; n] }
    }

    pub fn from_word(w: &Word) -> Self {
        Self { dims: vec![w.len()], cells: w.0.clone() }
    }

    pub fn letter(l: Letter, dim: usize) -> Self {
        Self { dims: vec![1; dim], cells: vec![l] }
    }

    /// Builds a 2D pattern from its printed rows, top row first.
    pub fn from_rows(rows: &[Vec<Letter>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(invalid("rows must be nonempty and of equal length"));
        }
        let mut cells = vec![Letter(0); width * height];
        for (r, row) in rows.iter().enumerate() {
            let y = height - 1 - r;
            for (x, &l) in row.iter().enumerate() {
                cells[x * height + y] = l;
            }
        }
        Ok(Self { dims: vec![width, height], cells })
    }

    /// Printed rows of a 2D pattern, top row first.
    pub fn to_rows(&self) -> Vec<Vec<Letter>> {
        assert_eq!(self.dims.len(), 2, "to_rows needs a 2D pattern");
        let (w, h) = (self.dims[0], self.dims[1]);
        (0..h)
            .map(|r| {
                let y = h - 1 - r;
                (0..w).map(|x| self.cells[x * h + y]).collect()
            })
            .collect()
    }

    pub fn to_word(&self) -> Option<Word> {
        (self.dims.len() == 1).then(|| Word(self.cells.clone()))
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn offset_of(&self, idx: &[usize]) -> usize {
        offset(&self.dims, idx)
    }

    pub fn get(&self, idx: &[usize]) -> Letter {
        self.cells[offset(&self.dims, idx)]
    }

    pub fn set(&mut self, idx: &[usize], l: Letter) {
        let o = offset(&self.dims, idx);
        self.cells[o] = l;
    }

    /// Copies the cells of the sub-block at `origin` with extents `shape`
    /// into `buf` (cleared first), in row-major order.
    pub fn extract_into(&self, origin: &[usize], shape: &[usize], buf: &mut Vec<Letter>) {
        buf.clear();
        extract_cells(&self.dims, &self.cells, origin, shape, buf);
    }

    pub fn sub_block(&self, origin: &[usize], shape: &[usize]) -> Pattern {
        let mut buf = Vec::with_capacity(volume(shape));
        self.extract_into(origin, shape, &mut buf);
        Pattern { dims: shape.to_vec(), cells: buf }
    }

    /// Reverses the order along one axis.
    pub fn reflected(&self, axis: usize) -> Pattern {
        let mut out = self.clone();
        for idx in BoxIndices::new(&self.dims) {
            let mut src = idx.clone();
            src[axis] = self.dims[axis] - 1 - idx[axis];
            out.set(&idx, self.get(&src));
        }
        out
    }
}

pub(crate) fn volume(dims: &[usize]) -> usize {
    dims.iter().product()
}

pub(crate) fn offset(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &n)| {
        debug_assert!(i < n);
        acc * n + i
    })
}

/// Row-major copy of a sub-box; runs along the last axis are contiguous.
pub(crate) fn extract_cells<T: Copy>(
    dims: &[usize],
    cells: &[T],
    origin: &[usize],
    shape: &[usize],
    out: &mut Vec<T>,
) {
    let d = dims.len();
    let run = shape[d - 1];
    if d == 1 {
        out.extend_from_slice(&cells[origin[0]..origin[0] + run]);
        return;
    }
    if d == 2 {
        let h = dims[1];
        for x in origin[0]..origin[0] + shape[0] {
            let start = x * h + origin[1];
            out.extend_from_slice(&cells[start..start + run]);
        }
        return;
    }
    let outer = &shape[..d - 1];
    let mut pos: Vec<usize> = vec![0; d];
    for idx in BoxIndices::new(outer) {
        for j in 0..d - 1 {
            pos[j] = origin[j] + idx[j];
        }
        pos[d - 1] = origin[d - 1];
        let start = offset(dims, &pos);
        out.extend_from_slice(&cells[start..start + run]);
    }
}

/// Iterates the multi-indices of a box in row-major order.
#[derive(Debug, Clone)]
pub struct BoxIndices {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl BoxIndices {
    pub fn new(dims: &[usize]) -> Self {
        let next = (!dims.contains(&0)).then(|| vec![0; dims.len()]);
        Self { dims: dims.to_vec(), next }
    }
}

impl Iterator for BoxIndices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut n = cur.clone();
        let mut j = n.len();
        while j > 0 {
            j -= 1;
            n[j] += 1;
            if n[j] < self.dims[j] {
                self.next = Some(n);
                return Some(cur);
            }
            n[j] = 0;
        }
        Some(cur)
    }
}
