//! One-dimensional substitutions and d-dimensional block substitutions.
//!
//! A block substitution sends every letter to a block of one common shape
//! `n_1 × … × n_d`. Applied to a pattern, the image of the cell at `i` is
//! placed at `i · n` (componentwise, 0-based). In one dimension the images
//! may have different lengths and are simply concatenated.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::symbolic::{
    offset, volume, Alphabet, BoxIndices, DictionarySlice, Letter, PeriodicConfiguration, Pattern, Proximity, Word,
};

/// Largest number of cells an iterate may have before generation gives up.
const CELL_BUDGET: usize = 1 << 25;
/// Largest exponent tried while generating a substitution dictionary.
const EXPONENT_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    dim: usize,
    images: Vec<Pattern>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimitivityReport {
    pub primitive: bool,
    /// Smallest `l` such that every letter occurs in every `S^l(a)`.
    pub l0: Option<usize>,
}

/// Result of the corner-seed search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSearch {
    /// Admissible pattern on the cells `{-1, 0}^d`, stored with index 0
    /// along an axis meaning coordinate −1.
    pub seed: Pattern,
    /// Smallest exponent with `S^k(seed)` restricted to the corner equal
    /// to the seed.
    pub k: usize,
    /// Further seeds with the same exponent, in search order.
    pub alternatives: Vec<Pattern>,
    /// Number of (candidate, exponent) pairs examined.
    pub tried: usize,
}

/// One row of [`Substitution::convergence_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub tile_dims: Vec<usize>,
    /// Level up to which the approximant's patterns lie in the dictionary.
    pub containment: Proximity,
    /// Level up to which both pattern sets coincide.
    pub agreement: Proximity,
}

impl Substitution {
    /// A one-dimensional substitution `a ↦ images[a]`.
    pub fn one_dim(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        Self::block(alphabet, images.iter().map(Pattern::from_word).collect())
    }

    /// A substitution from letter images given as patterns. In dimension
    /// two and higher all images must share one shape with every extent at
    /// least 2.
    pub fn block(alphabet: Alphabet, images: Vec<Pattern>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(invalid("one image per letter is required"));
        }
        let dim = images[0].dim();
        for img in &images {
            if img.dim() != dim {
                return Err(invalid("letter images have different dimensions"));
            }
            if img.is_empty() {
                return Err(invalid("letter images must be nonempty"));
            }
            if img.cells().iter().any(|&l| !alphabet.contains(l)) {
                return Err(invalid("letter image uses letters outside the alphabet"));
            }
        }
        if dim >= 2 {
            let shape = images[0].dims();
            if images.iter().any(|p| p.dims() != shape) {
                return Err(Error::Unsupported("block substitution images must share one shape".into()));
            }
            if shape.iter().any(|&n| n < 2) {
                return Err(Error::Unsupported(format!(
                    "block extents must be at least 2 in every direction, got {shape:?}"
                )));
            }
        }
        Ok(Self { alphabet, dim, images })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, l: Letter) -> &Pattern {
        &self.images[l.index()]
    }

    /// Common block shape, if all images share one.
    pub fn block_shape(&self) -> Option<&[usize]> {
        let s = self.images[0].dims();
        self.images.iter().all(|p| p.dims() == s).then_some(s)
    }

    /// Distinct letters have distinct images.
    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<&Pattern> = self.images.iter().collect();
        set.len() == self.images.len()
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word> {
        if self.dim != 1 {
            return Err(Error::UnsupportedDimension { found: self.dim, context: "words need a 1D substitution" });
        }
        let mut out = Vec::new();
        for &l in w.letters() {
            if !self.alphabet.contains(l) {
                return Err(invalid("word uses letters outside the alphabet"));
            }
            out.extend_from_slice(self.images[l.index()].cells());
        }
        Ok(Word::new(out))
    }

    pub fn apply(&self, p: &Pattern) -> Result<Pattern> {
        if p.dim() != self.dim {
            return Err(invalid("pattern dimension does not match the substitution"));
        }
        if p.cells().iter().any(|&l| !self.alphabet.contains(l)) {
            return Err(invalid("pattern uses letters outside the alphabet"));
        }
        if self.dim == 1 {
            let w = self.apply_word(&p.to_word().expect("1D"))?;
            return Ok(Pattern::from_word(&w));
        }
        let n = self.images[0].dims().to_vec();
        let dims: Vec<usize> = p.dims().iter().zip(&n).map(|(a, b)| a * b).collect();
        let d = self.dim;
        let run = n[d - 1];
        let mut cells = vec![Letter(0); volume(&dims)];
        let mut pos = vec![0usize; d];
        for idx in BoxIndices::new(p.dims()) {
            let img = &self.images[p.get(&idx).index()];
            let mut src = 0;
            for inner in BoxIndices::new(&n[..d - 1]) {
                for j in 0..d - 1 {
                    pos[j] = idx[j] * n[j] + inner[j];
                }
                pos[d - 1] = idx[d - 1] * run;
                let start = offset(&dims, &pos);
                cells[start..start + run].copy_from_slice(&img.cells()[src..src + run]);
                src += run;
            }
        }
        Pattern::new(dims, cells)
    }

    /// `S^n(p)`, refusing to build iterates above the cell budget.
    pub fn iterate(&self, p: &Pattern, n: usize) -> Result<Pattern> {
        let mut cur = p.clone();
        for _ in 0..n {
            cur = self.apply_checked(&cur)?;
        }
        Ok(cur)
    }

    fn apply_checked(&self, p: &Pattern) -> Result<Pattern> {
        let grown: usize = p.cells().iter().map(|l| self.images[l.index()].len()).sum();
        if grown > CELL_BUDGET {
            return Err(Error::IterationCap(format!("iterate would exceed {CELL_BUDGET} cells")));
        }
        self.apply(p)
    }

    /// Primitivity via powers of the boolean incidence matrix.
    pub fn primitivity(&self, kmax: usize) -> PrimitivityReport {
        let n = self.alphabet.len();
        let step: Vec<Vec<bool>> = self
            .images
            .iter()
            .map(|img| {
                let mut row = vec![false; n];
                for l in img.cells() {
                    row[l.index()] = true;
                }
                row
            })
            .collect();
        let mut cur = step.clone();
        let mut seen: Vec<Vec<Vec<bool>>> = Vec::new();
        for m in 1..=kmax {
            if cur.iter().all(|r| r.iter().all(|&b| b)) {
                return PrimitivityReport { primitive: true, l0: Some(m) };
            }
            if seen.contains(&cur) {
                break;
            }
            seen.push(cur.clone());
            cur = cur
                .iter()
                .map(|row| {
                    let mut next = vec![false; n];
                    for (b, _) in row.iter().enumerate().filter(|(_, &x)| x) {
                        for (c, &y) in step[b].iter().enumerate() {
                            next[c] |= y;
                        }
                    }
                    next
                })
                .collect();
        }
        PrimitivityReport { primitive: false, l0: None }
    }

    fn default_primitivity(&self) -> PrimitivityReport {
        let n = self.alphabet.len();
        self.primitivity(n * n + 1)
    }

    /// Cumulative sub-blocks of `S^m(a)` over all letters, until the set is
    /// stable. Returns the slice and the stopping exponent.
    fn generate(&self, cap: usize, prim: PrimitivityReport) -> Result<(DictionarySlice, usize)> {
        let mut slice = DictionarySlice::empty(self.alphabet.clone(), self.dim, cap)?;
        let mut iterates: Vec<Pattern> = self.alphabet.letters().map(|l| Pattern::letter(l, self.dim)).collect();
        let threshold = match prim.l0 {
            Some(l0) => l0,
            None => cap,
        };
        let mut quiet = 0;
        for m in 1..=EXPONENT_BUDGET {
            let mut changed = false;
            for it in iterates.iter_mut() {
                *it = self.apply_checked(it)?;
                changed |= slice.absorb(it);
            }
            quiet = if changed { 0 } else { quiet + 1 };
            let grown = iterates.iter().all(|p| p.dims().iter().all(|&n| n >= cap));
            if quiet >= 2 && m >= threshold && grown {
                return Ok((slice, m));
            }
            if m > threshold + 2 && !grown && iterates.iter().any(|p| p.dims().iter().any(|&n| n == 1)) {
                return Err(Error::Unsupported("some letter image does not grow under iteration".into()));
            }
        }
        Err(Error::IterationCap(format!("pattern set not stable after {EXPONENT_BUDGET} exponents")))
    }

    /// The slice of the dictionary associated with the substitution.
    ///
    /// Generated as a cumulative union and checked against the sub-blocks of
    /// a large iterate of corner seeds. Non-primitive substitutions are
    /// accepted only when the result satisfies heredity and extensibility.
    pub fn dictionary(&self, cap: usize) -> Result<DictionarySlice> {
        let prim = self.default_primitivity();
        let inner_cap = cap.max(2);
        let (slice, stop) = self.generate(inner_cap, prim)?;
        let oracle = self.oracle_slice(&slice, stop, prim)?;
        if oracle != slice {
            let (a, b) = (slice.len(), oracle.len());
            return Err(Error::OracleMismatch(format!("{a} patterns generated, {b} from the fixed-point iterate")));
        }
        if !prim.primitive {
            let violations = slice.validate();
            if !violations.is_empty() {
                return Err(Error::NotADictionary(violations));
            }
        }
        if inner_cap == cap {
            Ok(slice)
        } else {
            slice.truncated(cap)
        }
    }

    fn oracle_slice(&self, slice: &DictionarySlice, stop: usize, prim: PrimitivityReport) -> Result<DictionarySlice> {
        let found = self.seed_search(slice, self.default_seed_kmax())?;
        let (seeds, depth) = match prim.l0 {
            Some(l0) => (vec![found.seed.clone()], stop + l0),
            None => {
                // cover every letter with the fewest seeds, taken in search order
                let mut chosen = Vec::new();
                let mut covered = BTreeSet::new();
                for s in core::iter::once(&found.seed).chain(&found.alternatives) {
                    if s.cells().iter().any(|l| !covered.contains(l)) {
                        covered.extend(s.cells().iter().copied());
                        chosen.push(s.clone());
                    }
                }
                (chosen, stop + 1)
            }
        };
        let power = depth.div_ceil(found.k) * found.k;
        let mut sources = Vec::with_capacity(seeds.len());
        for s in &seeds {
            sources.push(self.iterate(s, power)?);
        }
        DictionarySlice::from_sources(self.alphabet.clone(), self.dim, slice.cap(), sources.iter())
    }

    fn default_seed_kmax(&self) -> usize {
        let corners = 1u32 << self.dim;
        self.alphabet.len().saturating_pow(corners).min(1 << 16)
    }

    /// Searches the admissible corner patterns for one that is invariant
    /// under `S^k` with `k` as small as possible. `kmax` defaults to
    /// `(♯A)^(2^d)`.
    pub fn fixed_seed(&self, kmax: Option<usize>) -> Result<SeedSearch> {
        let slice = self.dictionary(2)?;
        self.seed_search(&slice, kmax.unwrap_or_else(|| self.default_seed_kmax()))
    }

    /// For each corner cell, the letter map `l ↦` the cell of `S(l)` that
    /// lands on that corner again.
    fn corner_maps(&self) -> Vec<Vec<Letter>> {
        BoxIndices::new(&vec![2usize; self.dim])
            .map(|c| {
                self.images
                    .iter()
                    .map(|img| {
                        let at: Vec<usize> =
                            c.iter().zip(img.dims()).map(|(&cj, &n)| if cj == 0 { n - 1 } else { 0 }).collect();
                        img.get(&at)
                    })
                    .collect()
            })
            .collect()
    }

    fn is_invariant(maps: &[Vec<Letter>], u: &Pattern, k: usize) -> bool {
        u.cells().iter().zip(maps).all(|(&l, f)| {
            let mut x = l;
            for _ in 0..k {
                x = f[x.index()];
            }
            x == l
        })
    }

    fn seed_search(&self, slice: &DictionarySlice, kmax: usize) -> Result<SeedSearch> {
        let candidates: Vec<Pattern> = slice.patterns(&vec![2usize; self.dim]).collect();
        let maps = self.corner_maps();
        let mut tried = 0;
        for k in 1..=kmax {
            tried += candidates.len();
            let mut hits = candidates.iter().filter(|u| Self::is_invariant(&maps, u, k)).cloned();
            if let Some(seed) = hits.next() {
                return Ok(SeedSearch { seed, k, alternatives: hits.collect(), tried });
            }
        }
        Err(Error::SearchExhausted { kmax, tried })
    }

    /// All admissible corner patterns invariant under `S^k`, in search order.
    pub fn seeds_with_exponent(&self, k: usize) -> Result<Vec<Pattern>> {
        let slice = self.dictionary(2)?;
        let maps = self.corner_maps();
        Ok(slice.patterns(&vec![2usize; self.dim]).filter(|u| Self::is_invariant(&maps, u, k)).collect())
    }

    fn check_seed(&self, seed: &Pattern, k: usize) -> Result<()> {
        if seed.dims().len() != self.dim || seed.dims().iter().any(|&n| n != 2) {
            return Err(invalid("seeds are patterns on the 2^d corner cells"));
        }
        if k == 0 {
            return Err(invalid("seed exponent must be positive"));
        }
        let image = self.iterate(seed, k)?;
        let origin = self.origin_of(seed, k)?;
        let fixed = BoxIndices::new(seed.dims()).all(|c| {
            let at: Vec<usize> = c.iter().zip(&origin).map(|(&cj, &o)| o + cj - 1).collect();
            image.get(&at) == seed.get(&c)
        });
        if fixed {
            Ok(())
        } else {
            Err(invalid("seed is not invariant under S^k"))
        }
    }

    /// Index of coordinate 0 inside `S^n(seed)`: the extents of the image of
    /// the seed's lower corner cell.
    fn origin_of(&self, seed: &Pattern, n: usize) -> Result<Vec<usize>> {
        let left = self.iterate(&Pattern::letter(seed.cells()[0], self.dim), n)?;
        Ok(if self.dim == 1 { vec![left.len()] } else { left.dims().to_vec() })
    }

    /// The window `[-R, R]^d` of the `k`-periodic point grown from `seed`.
    pub fn fixed_point_window(&self, seed: &Pattern, k: usize, radius: usize) -> Result<Pattern> {
        self.check_seed(seed, k)?;
        let mut cur = seed.clone();
        let mut left = Pattern::letter(seed.cells()[0], self.dim);
        for _ in 0..EXPONENT_BUDGET {
            // the seed's lower corner sits at −1, so the origin is the
            // extent of its image along every axis
            let origin: Vec<usize> = if self.dim == 1 { vec![left.len()] } else { left.dims().to_vec() };
            let fits = origin.iter().zip(cur.dims()).all(|(&o, &n)| o >= radius && n - o > radius);
            if fits {
                let lo: Vec<usize> = origin.iter().map(|o| o - radius).collect();
                return Ok(cur.sub_block(&lo, &vec![2 * radius + 1; self.dim]));
            }
            cur = self.iterate(&cur, k)?;
            left = self.iterate(&left, k)?;
        }
        Err(Error::IterationCap(format!("window of radius {radius} not reached")))
    }

    /// 2×2 patterns `v` whose orbit under swapping rows, columns or both
    /// lies in the slice. Each such `v` generates a periodic configuration
    /// whose 2×2 patterns are admissible.
    pub fn symmetry_2x2_search(slice: &DictionarySlice) -> Result<Vec<Pattern>> {
        if slice.dim() != 2 {
            return Err(Error::UnsupportedDimension { found: slice.dim(), context: "the 2x2 search is planar" });
        }
        if slice.cap() < 2 {
            return Err(invalid("slice cap must be at least 2"));
        }
        Ok(slice
            .patterns(&[2, 2])
            .filter(|v| {
                let rows = v.reflected(1);
                let cols = v.reflected(0);
                let both = rows.reflected(0);
                slice.contains(&rows) && slice.contains(&cols) && slice.contains(&both)
            })
            .collect())
    }

    /// The strongly periodic configuration `S^n(v^∞) = (S^n(v))^∞`.
    pub fn periodic_approximant(&self, v: &Pattern, n: usize) -> Result<PeriodicConfiguration> {
        PeriodicConfiguration::new(self.alphabet.clone(), self.iterate(v, n)?)
    }

    /// Containment and agreement levels of the approximants `S^n(v^∞)`
    /// against the substitution dictionary, for `n` in `ns`.
    pub fn convergence_table(&self, v: &Pattern, ns: impl IntoIterator<Item = usize>, cap: usize) -> Result<Vec<ConvergenceRow>> {
        let reference = self.dictionary(cap)?;
        let mut out = Vec::new();
        for n in ns {
            let cfg = self.periodic_approximant(v, n)?;
            let slice = cfg.dictionary(cap)?;
            out.push(ConvergenceRow {
                n,
                tile_dims: cfg.periods().to_vec(),
                containment: slice.containment_level(&reference)?,
                agreement: slice.proximity_index(&reference)?,
            });
        }
        Ok(out)
    }
}
