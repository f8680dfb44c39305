//! Built-in example subshifts.

use alloc::vec::Vec;

use crate::debruijn::DeBruijnGraph;
use crate::error::{invalid, Result};
use crate::subst::Substitution;
use crate::symbolic::{Alphabet, DictionarySlice, Letter, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Builtin {
    /// `a ↦ ab, b ↦ a`
    Fibonacci,
    /// `a ↦ aab, b ↦ a`
    SilverMean,
    /// `a ↦ ab, b ↦ ba`
    ThueMorse,
    /// `a ↦ ab, b ↦ aa`
    PeriodDoubling,
    /// `A ↦ AB, B ↦ AC, C ↦ DB, D ↦ DC`
    RudinShapiro,
    /// `… a a a b a a a …`
    OneDefect,
    /// Every word over `{a, b}`.
    FullShift,
    /// `… a a a b b b …`, with a de Bruijn graph of order 1 that is
    /// connected but not strongly connected.
    TwoTails,
    /// `… a a a b a b b b …`, strongly connected at order 1 only.
    TwoTailsShifted,
    /// The planar table substitution on `{a, b, c, d}` with 2×2 blocks.
    Table,
    /// The planar Sierpinski carpet substitution on `{a, b}` with 3×3 blocks.
    Sierpinski,
}

impl Builtin {
    pub const ALL: [Builtin; 11] = [
        Builtin::Fibonacci,
        Builtin::SilverMean,
        Builtin::ThueMorse,
        Builtin::PeriodDoubling,
        Builtin::RudinShapiro,
        Builtin::OneDefect,
        Builtin::FullShift,
        Builtin::TwoTails,
        Builtin::TwoTailsShifted,
        Builtin::Table,
        Builtin::Sierpinski,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Fibonacci => "fibonacci",
            Builtin::SilverMean => "silver-mean",
            Builtin::ThueMorse => "thue-morse",
            Builtin::PeriodDoubling => "period-doubling",
            Builtin::RudinShapiro => "rudin-shapiro",
            Builtin::OneDefect => "one-defect",
            Builtin::FullShift => "full-shift",
            Builtin::TwoTails => "two-tails",
            Builtin::TwoTailsShifted => "two-tails-shifted",
            Builtin::Table => "table",
            Builtin::Sierpinski => "sierpinski",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn dim(self) -> usize {
        match self {
            Builtin::Table | Builtin::Sierpinski => 2,
            _ => 1,
        }
    }

    pub fn alphabet(self) -> Alphabet {
        let letters = match self {
            Builtin::RudinShapiro => "ABCD",
            Builtin::Table => "abcd",
            _ => "ab",
        };
        Alphabet::from_chars(letters).expect("distinct letters")
    }

    pub fn substitution(self) -> Option<Substitution> {
        let a = self.alphabet();
        let words = |ws: &[&str]| -> Substitution {
            let images = ws.iter().map(|w| a.parse_word(w).expect("builtin word")).collect();
            Substitution::one_dim(a.clone(), images).expect("builtin rule")
        };
        let blocks = |bs: &[&[&str]]| -> Substitution {
            let images = bs.iter().map(|rows| rows_pattern(&a, rows)).collect();
            Substitution::block(a.clone(), images).expect("builtin rule")
        };
        Some(match self {
            Builtin::Fibonacci => words(&["ab", "a"]),
            Builtin::SilverMean => words(&["aab", "a"]),
            Builtin::ThueMorse => words(&["ab", "ba"]),
            Builtin::PeriodDoubling => words(&["ab", "aa"]),
            Builtin::RudinShapiro => words(&["AB", "AC", "DB", "DC"]),
            Builtin::Table => blocks(&[&["ba", "da"], &["ac", "bb"], &["cb", "cd"], &["dd", "ac"]]),
            Builtin::Sierpinski => blocks(&[&["aaa", "aaa", "aaa"], &["bbb", "bab", "bbb"]]),
            Builtin::OneDefect | Builtin::FullShift | Builtin::TwoTails | Builtin::TwoTailsShifted => return None,
        })
    }

    /// The dictionary slice up to `cap` along every axis.
    pub fn slice(self, cap: usize) -> Result<DictionarySlice> {
        let a = self.alphabet();
        let w = |s: &str| a.parse_word(s).expect("builtin word");
        match self {
            Builtin::OneDefect => DictionarySlice::eventually_periodic(a.clone(), &w("a"), &w("b"), &w("a"), cap),
            Builtin::TwoTails => DictionarySlice::eventually_periodic(a.clone(), &w("a"), &w(""), &w("b"), cap),
            Builtin::TwoTailsShifted => {
                DictionarySlice::eventually_periodic(a.clone(), &w("a"), &w("ba"), &w("b"), cap)
            }
            Builtin::FullShift => DictionarySlice::full_shift(a, 1, cap),
            _ => self.substitution().expect("substitution builtin").dictionary(cap),
        }
    }

    /// Fundamental tile used for the periodic approximants `S^n(v^∞)`.
    pub fn approximant_seed(self) -> Option<Result<Pattern>> {
        let a = self.alphabet();
        match self {
            Builtin::Table => Some(Ok(rows_pattern(&a, &["bd", "db"]))),
            Builtin::Sierpinski => Some(Ok(rows_pattern(&a, &["ba", "bb"]))),
            _ => self.substitution().map(|s| default_seed(&s)),
        }
    }
}

fn rows_pattern(a: &Alphabet, rows: &[&str]) -> Pattern {
    let rows: Vec<Vec<Letter>> = rows.iter().map(|r| a.parse_word(r).expect("builtin row").into_letters()).collect();
    Pattern::from_rows(&rows).expect("rectangular rows")
}

/// Default tile for the approximants of a substitution.
///
/// In one dimension this is the associated word of a closed path in the de
/// Bruijn graph of order 1: a single letter when the graph has a loop,
/// otherwise the shortest cycle through the first vertex. In two dimensions
/// it is the first 2×2 pattern with an admissible symmetry orbit.
pub fn default_seed(s: &Substitution) -> Result<Pattern> {
    match s.dim() {
        1 => {
            let g = DeBruijnGraph::build(&s.dictionary(2)?, 1)?;
            if let Some(e) = g.edges().iter().find(|e| e.letters()[0] == e.letters()[1]) {
                return Ok(Pattern::letter(e.letters()[0], 1));
            }
            let cycle = g
                .shortest_cycle_through(0)
                .ok_or_else(|| invalid("de Bruijn graph of order 1 has no cycle"))?;
            Ok(Pattern::from_word(&cycle.periodic_word()))
        }
        2 => Substitution::symmetry_2x2_search(&s.dictionary(2)?)?
            .into_iter()
            .next()
            .ok_or_else(|| invalid("no 2x2 pattern with an admissible symmetry orbit")),
        d => Err(crate::Error::UnsupportedDimension { found: d, context: "default seeds exist for d <= 2" }),
    }
}
