use perapprox_core::corpus::Builtin;
use perapprox_core::debruijn::{check_period_growth, ClosedPath, CoverMode, DeBruijnGraph};
use perapprox_core::symbolic::{Alphabet, Letter, PeriodicConfiguration, Word};
use perapprox_core::Error;
use proptest::prelude::*;

const LINEAR: [Builtin; 9] = [
    Builtin::Fibonacci,
    Builtin::SilverMean,
    Builtin::ThueMorse,
    Builtin::PeriodDoubling,
    Builtin::RudinShapiro,
    Builtin::OneDefect,
    Builtin::FullShift,
    Builtin::TwoTails,
    Builtin::TwoTailsShifted,
];

#[test]
fn one_defect_order_two() {
    let g = DeBruijnGraph::build(&Builtin::OneDefect.slice(3).unwrap(), 2).unwrap();
    assert_eq!(g.vertices().len(), 3);
    assert_eq!(g.edges().len(), 4);
    assert!(g.is_strongly_connected());
}

#[test]
fn strong_connectivity_is_hereditary() {
    for b in LINEAR {
        let s = b.slice(9).unwrap();
        let connected: Vec<bool> =
            (1..=8).map(|k| DeBruijnGraph::build(&s, k).unwrap().is_strongly_connected()).collect();
        for k in 1..connected.len() {
            assert!(!connected[k] || connected[k - 1], "{} order {}", b.name(), k + 1);
        }
    }
}

#[test]
fn vertex_cover_words_are_exact() {
    for b in LINEAR.into_iter().filter(|b| !matches!(b, Builtin::TwoTails | Builtin::TwoTailsShifted)) {
        let s = b.slice(7).unwrap();
        for k in 1..=6 {
            let path = DeBruijnGraph::build(&s, k).unwrap().global_closed_path(CoverMode::Vertices).unwrap();
            let eta = path.periodic_word();
            let d = PeriodicConfiguration::from_word(s.alphabet().clone(), &eta).unwrap().dictionary(k).unwrap();
            assert_eq!(d.words(k), s.words(k), "{} k = {k}", b.name());
        }
    }
}

#[test]
fn periods_grow_with_complexity() {
    let s = Builtin::Fibonacci.slice(8).unwrap();
    let paths: Vec<(usize, ClosedPath)> = (1..=7)
        .map(|k| (k, DeBruijnGraph::build(&s, k).unwrap().global_closed_path(CoverMode::Edges).unwrap()))
        .collect();
    assert!(check_period_growth(&s, &paths).is_empty());
}

#[test]
fn disconnected_graph_has_no_global_path() {
    let g = DeBruijnGraph::build(&Builtin::TwoTails.slice(3).unwrap(), 1).unwrap();
    assert!(matches!(g.global_closed_path(CoverMode::Edges), Err(Error::NoGlobalPath { .. })));
}

#[test]
fn full_shift_edge_cover_is_de_bruijn_sequence() {
    let s = Builtin::FullShift.slice(5).unwrap();
    for k in 1..=4 {
        let eta = DeBruijnGraph::build(&s, k).unwrap().global_closed_path(CoverMode::Edges).unwrap().periodic_word();
        assert_eq!(eta.len(), 1 << (k + 1), "k = {k}");
    }
}

#[test]
fn closed_path_rejects_broken_chain() {
    let a = Alphabet::from_chars("ab").unwrap();
    let edges = vec![a.parse_word("ab").unwrap(), a.parse_word("ab").unwrap()];
    assert!(ClosedPath::new(edges).is_err());
}

#[test]
fn planar_slices_are_rejected() {
    let s = Builtin::Table.slice(2).unwrap();
    assert!(matches!(DeBruijnGraph::build(&s, 1), Err(Error::UnsupportedDimension { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn periodic_graphs_are_strongly_connected(cells in prop::collection::vec(0u8..3, 1..10), k in 1usize..5) {
        let a = Alphabet::from_chars("abc").unwrap();
        let w = Word::new(cells.into_iter().map(Letter).collect());
        let s = PeriodicConfiguration::from_word(a, &w).unwrap().dictionary(k + 1).unwrap();
        let g = DeBruijnGraph::build(&s, k).unwrap();
        prop_assert!(g.is_strongly_connected());
        let eta = g.global_closed_path(CoverMode::Edges).unwrap().periodic_word();
        let back = PeriodicConfiguration::from_word(s.alphabet().clone(), &eta).unwrap().dictionary(k + 1).unwrap();
        prop_assert_eq!(back.words(k + 1), s.words(k + 1));
    }
}
