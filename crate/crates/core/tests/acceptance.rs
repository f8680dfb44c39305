//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances and time limits are fixed below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use perapprox_core::corpus::Builtin;
use perapprox_core::debruijn::{CoverMode, DeBruijnGraph};
use perapprox_core::probes::{p2_norm, presence_probe, unitary_probe, FiniteSelfAdjoint, FiniteUnitary};
use perapprox_core::spectra::{band_set, bloch_spectrum, substitution_convergence, JacobiSpec, PeriodicJacobi};
use perapprox_core::subst::Substitution;
use perapprox_core::symbolic::{Alphabet, Letter, Pattern, PeriodicConfiguration, Proximity, Word};
use perapprox_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

const ONE_DIM: [Builtin; 7] = [
    Builtin::Fibonacci,
    Builtin::SilverMean,
    Builtin::ThueMorse,
    Builtin::PeriodDoubling,
    Builtin::RudinShapiro,
    Builtin::OneDefect,
    Builtin::FullShift,
];

fn complexity_goldens() -> Outcome {
    let fib = Builtin::Fibonacci.slice(12).map_err(e)?.complexity().by_length();
    let want: Vec<usize> = (1..=12).map(|k| k + 1).collect();
    check(fib == want, format!("fibonacci complexity {fib:?}"))?;
    let full = Builtin::FullShift.slice(8).map_err(e)?.complexity().by_length();
    let want: Vec<usize> = (1..=8).map(|k| 1 << k).collect();
    check(full == want, format!("full shift complexity {full:?}"))?;
    Ok("fibonacci k+1 for k<=12, full shift 2^k for k<=8".into())
}

fn connectivity() -> Outcome {
    for b in [Builtin::Fibonacci, Builtin::ThueMorse, Builtin::PeriodDoubling, Builtin::RudinShapiro, Builtin::SilverMean] {
        let s = b.slice(9).map_err(e)?;
        for k in 1..=8 {
            let g = DeBruijnGraph::build(&s, k).map_err(e)?;
            check(g.is_strongly_connected(), format!("{} G_{k} not strongly connected", b.name()))?;
        }
    }
    let tails = Builtin::TwoTails.slice(3).map_err(e)?;
    check(!DeBruijnGraph::build(&tails, 1).map_err(e)?.is_strongly_connected(), "two-tails G_1")?;
    let shifted = Builtin::TwoTailsShifted.slice(3).map_err(e)?;
    check(DeBruijnGraph::build(&shifted, 1).map_err(e)?.is_strongly_connected(), "two-tails-shifted G_1")?;
    check(!DeBruijnGraph::build(&shifted, 2).map_err(e)?.is_strongly_connected(), "two-tails-shifted G_2")?;
    Ok("5 substitutions strongly connected for k<=8; tail examples as expected".into())
}

fn branching_bounds() -> Outcome {
    let mut checked = 0;
    for b in ONE_DIM.into_iter().chain([Builtin::TwoTails, Builtin::TwoTailsShifted]) {
        let s = b.slice(9).map_err(e)?;
        let comp = s.complexity().by_length();
        let letters = s.alphabet().len();
        for k in 1..=8 {
            let nub = DeBruijnGraph::build(&s, k).map_err(e)?.branching_count();
            let growth = comp[k] - comp[k - 1];
            let lower = growth.div_ceil(letters - 1);
            check(
                lower <= nub && nub <= 2 * growth,
                format!("{} k={k}: growth {growth}, Nub {nub}", b.name()),
            )?;
            checked += 1;
        }
    }
    let fib = Builtin::Fibonacci.slice(4).map_err(e)?;
    let nub2 = DeBruijnGraph::build(&fib, 2).map_err(e)?.branching_count();
    let nub3 = DeBruijnGraph::build(&fib, 3).map_err(e)?.branching_count();
    check((nub2, nub3) == (2, 1), format!("fibonacci Nub(2), Nub(3) = {nub2}, {nub3}"))?;
    Ok(format!("{checked} (slice, order) pairs; fibonacci Nub(2)=2, Nub(3)=1"))
}

fn approximation_exactness() -> Outcome {
    let mut checked = 0;
    for b in ONE_DIM {
        let s = b.slice(7).map_err(e)?;
        for k in 1..=6 {
            let g = DeBruijnGraph::build(&s, k).map_err(e)?;
            let path = g.global_closed_path(CoverMode::Edges).map_err(e)?;
            let eta = path.periodic_word();
            let cfg = PeriodicConfiguration::from_word(s.alphabet().clone(), &eta).map_err(e)?;
            let approx = cfg.dictionary(k + 1).map_err(e)?;
            check(
                approx.words(k + 1) == s.words(k + 1),
                format!("{} k={k}: length-{} factor sets differ", b.name(), k + 1),
            )?;
            let comp = s.words(k).len();
            check(eta.minimal_period() >= comp, format!("{} k={k}: period below comp(k)", b.name()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} edge-cover words exact at length k+1 with period >= comp(k)"))
}

fn render_rows(a: &Alphabet, p: &Pattern) -> Vec<String> {
    p.to_rows().iter().map(|r| a.render(r)).collect()
}

fn substitution_fixed_points() -> Outcome {
    // Fibonacci two-sided word on [-17, 16]
    let (left, right) = ("babaabaababaabaab", "abaababaabaababaa");
    let fib = Builtin::Fibonacci.substitution().unwrap();
    let a = fib.alphabet().clone();
    let found = fib.fixed_seed(None).map_err(e)?;
    check(a.render(found.seed.cells()) == "aa" && found.k == 2, format!("fibonacci seed {:?}", found))?;
    let w = fib.fixed_point_window(&found.seed, 2, 17).map_err(e)?;
    let got = a.render(w.cells());
    check(got[17..34] == *right, format!("right half from (a|a): {}", &got[17..]))?;
    let ba = Pattern::from_word(&a.parse_word("ba").unwrap());
    check(found.alternatives.contains(&ba), "(b|a) is not among the k = 2 seeds")?;
    let w = fib.fixed_point_window(&ba, 2, 17).map_err(e)?;
    let got = a.render(w.cells());
    check(got[..34] == format!("{left}{right}"), format!("window from (b|a): {got}"))?;

    // table substitution
    let table = Builtin::Table.substitution().unwrap();
    let t = table.alphabet().clone();
    let rows = |rs: &[&str]| {
        Pattern::from_rows(&rs.iter().map(|r| t.parse_word(r).unwrap().into_letters()).collect::<Vec<_>>()).unwrap()
    };
    let u = rows(&["ac", "bb"]);
    let seeds = table.seeds_with_exponent(2).map_err(e)?;
    check(seeds.contains(&u), "u is not an S^2-invariant admissible seed")?;
    check(!table.seeds_with_exponent(1).map_err(e)?.contains(&u), "u is already S-invariant")?;
    let spade = [
        "acbacbac", "bbdacdbb", "ddbacbdd", "acdacdac", "bacbbacb", "dacddacd", "acacacac", "bbbbbbbb",
    ];
    let b = Pattern::letter(t.letter("b").unwrap(), 2);
    let s3b = table.iterate(&b, 3).map_err(e)?;
    check(render_rows(&t, &s3b) == spade, "S^3(b) differs from the display")?;
    let s2u = table.iterate(&u, 2).map_err(e)?;
    check(s2u == s3b, "S^2(u) differs from S^3(b)")?;
    // the 7x7 window of the 2-periodic point sits inside the display
    let w = table.fixed_point_window(&u, 2, 3).map_err(e)?;
    check(w == s3b.sub_block(&[1, 1], &[7, 7]), "window of the 2-periodic point")?;
    Ok("fibonacci (a|a) k=2, display from (b|a); table u k=2 matches S^3(b)".into())
}

fn two_dim_convergence() -> Outcome {
    let mut details = Vec::new();
    let cases: [(Builtin, &[&str], std::ops::RangeInclusive<usize>); 3] = [
        (Builtin::Table, &["bd", "db"], 4..=7),
        (Builtin::Table, &["ac", "ca"], 4..=7),
        (Builtin::Sierpinski, &["ba", "bb"], 4..=6),
    ];
    for (b, v, ns) in cases {
        let s = b.substitution().unwrap();
        let a = s.alphabet().clone();
        let v = Pattern::from_rows(&v.iter().map(|r| a.parse_word(r).unwrap().into_letters()).collect::<Vec<_>>())
            .unwrap();
        let sym = Substitution::symmetry_2x2_search(&s.dictionary(2).map_err(e)?).map_err(e)?;
        check(sym.contains(&v), format!("{}: seed fails the symmetry gate", b.name()))?;
        let rows = s.convergence_table(&v, ns, 4).map_err(e)?;
        for r in &rows {
            if r.n >= 4 {
                check(r.containment == Proximity::Full, format!("{} n={}: containment {}", b.name(), r.n, r.containment))?;
            }
            if r.n >= 5 {
                check(r.agreement.at_least(2), format!("{} n={}: agreement {}", b.name(), r.n, r.agreement))?;
            }
        }
        let levels: Vec<String> = rows.iter().map(|r| format!("{}:{}", r.n, r.agreement)).collect();
        details.push(format!("{} [{}]", b.name(), levels.join(" ")));
    }
    Ok(format!("4x4 containment n>=4, 2x2 agreement n>=5; agreement levels {}", details.join(", ")))
}

fn corpus_operators() -> Vec<(String, PeriodicJacobi)> {
    let mut out = Vec::new();
    for b in [Builtin::Fibonacci, Builtin::SilverMean, Builtin::ThueMorse, Builtin::PeriodDoubling, Builtin::RudinShapiro] {
        let s = b.substitution().unwrap();
        let seed = b.approximant_seed().unwrap().unwrap();
        let jacobi = JacobiSpec::letter_potential(Letter(0), 1.0);
        for n in 0.. {
            let cfg = s.periodic_approximant(&seed, n).unwrap();
            if cfg.periods()[0] > 64 {
                break;
            }
            out.push((format!("{} n={n}", b.name()), jacobi.sample(&cfg).unwrap()));
        }
    }
    let a = Alphabet::from_chars("ab").unwrap();
    for n in 1..=63 {
        let mut w = vec![Letter(1)];
        w.extend(std::iter::repeat(Letter(0)).take(n));
        let cfg = PeriodicConfiguration::from_word(a.clone(), &Word::new(w)).unwrap();
        let jacobi = JacobiSpec::letter_potential(Letter(1), 1.0);
        out.push((format!("one-defect n={n}"), jacobi.sample(&cfg).unwrap()));
    }
    out
}

fn spectral_baselines() -> Outcome {
    let free = PeriodicJacobi::real(vec![1.0], vec![0.0]).map_err(e)?;
    let bands = band_set(&free, 1e-8).map_err(e)?.bands;
    let (l, r) = bands.intervals()[0];
    check(bands.len() == 1 && (l + 2.0).abs() <= 1e-8 && (r - 2.0).abs() <= 1e-8, format!("free band {bands:?}"))?;

    let imp = PeriodicJacobi::real(vec![1.0, 1.0], vec![2.0, 0.0]).map_err(e)?;
    let bands = band_set(&imp, 1e-8).map_err(e)?.bands;
    let s5 = 5f64.sqrt();
    let want = [(1.0 - s5, 0.0), (2.0, 1.0 + s5)];
    check(bands.len() == 2, format!("impurity bands {bands:?}"))?;
    for (got, want) in bands.intervals().iter().zip(want) {
        check((got.0 - want.0).abs() <= 1e-8 && (got.1 - want.1).abs() <= 1e-8, format!("impurity {got:?}"))?;
    }

    let ops = corpus_operators();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let results: Vec<Result<f64, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let ops = &ops;
                scope.spawn(move || {
                    ops.iter().skip(t).step_by(threads).map(|(name, j)| bloch_agreement(name, j)).collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut worst: f64 = 0.0;
    for r in results {
        worst = worst.max(r?);
    }
    Ok(format!("free and impurity edges to 1e-8; {} corpus operators, max d_H {worst:.1e}", ops.len()))
}

/// Hausdorff distance between the discriminant bands and the Bloch ranges.
fn bloch_agreement(name: &str, j: &PeriodicJacobi) -> Result<f64, String> {
    let disc = band_set(j, 1e-8).map_err(e)?;
    check(disc.raw_bands.len() == j.period(), format!("{name}: {} raw bands", disc.raw_bands.len()))?;
    let bloch = bloch_spectrum(j, 2048).map_err(e)?.band_ranges().map_err(e)?;
    let d = disc.bands.hausdorff(&bloch);
    check(d <= 1e-3, format!("{name}: discriminant vs Bloch d_H = {d:e}"))?;
    Ok(d)
}

fn spectral_convergence() -> Outcome {
    let mut details = Vec::new();
    for b in [Builtin::Fibonacci, Builtin::PeriodDoubling] {
        let s = b.substitution().unwrap();
        let seed = b.approximant_seed().unwrap().unwrap();
        let jacobi = JacobiSpec::letter_potential(Letter(0), 1.0);
        let rows = substitution_convergence(&s, &seed, 1..=8, &jacobi, 8, 1e-10).map_err(e)?;
        for r in rows.iter().filter(|r| r.n >= 4) {
            check(r.hausdorff_to_ref < 0.5, format!("{} n={}: d_H {}", b.name(), r.n, r.hausdorff_to_ref))?;
        }
        for w in rows.windows(2) {
            check(w[0].proximity <= w[1].proximity, format!("{}: proximity decreases at n={}", b.name(), w[1].n))?;
        }
        let tail: Vec<f64> = (0..rows.len())
            .map(|i| rows[i..].iter().map(|r| r.hausdorff_to_ref).fold(0.0, f64::max))
            .collect();
        check(tail.windows(2).all(|w| w[1] <= w[0]), format!("{}: tail maxima {tail:?}", b.name()))?;
        let step = |n: usize| rows[n - 1].bands.hausdorff(&rows[n].bands);
        let base = step(2);
        for n in 5..=7 {
            check(step(n) < base, format!("{} d_H(s_{n}, s_{}) = {} >= {base}", b.name(), n + 1, step(n)))?;
        }
        let col: Vec<String> = rows.iter().map(|r| format!("{:.3}", r.hausdorff_to_ref)).collect();
        details.push(format!("{} d_H [{}]", b.name(), col.join(" ")));
    }
    Ok(details.join("; "))
}

fn negative_control() -> Outcome {
    let rs = Builtin::RudinShapiro;
    let a = rs.alphabet();
    let w = |s: &str| a.parse_word(s).unwrap();
    let slice = rs.slice(5).map_err(e)?;
    let edges = ["DCA", "CAB", "ABA", "BAC", "ACD", "CDB", "DBD", "BDC"].map(w).to_vec();
    let path = perapprox_core::debruijn::ClosedPath::new(edges).map_err(e)?;
    let eta = path.periodic_word();
    check(a.render(eta.letters()) == "DCABACDB", "associated word")?;
    let cfg = PeriodicConfiguration::from_word(a.clone(), &eta).map_err(e)?;
    let approx = cfg.dictionary(5).map_err(e)?;
    check(approx.words(3).iter().all(|x| slice.contains_word(x)), "a length-3 factor is not admissible")?;
    check(approx.contains_word(&w("DCABA")), "DCABA not a factor")?;
    check(!slice.contains_word(&w("DCABA")), "DCABA is admissible")?;
    Ok("length-3 factors admissible, DCABA is not".into())
}

fn probe_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..500 {
        let n = rng.gen_range(1..=8);
        let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let x = rng.gen_range(-3.0..3.0);
        let r = rng.gen_range(0.0..2.0);
        let spread = diag.iter().map(|d: &f64| (d - x).abs()).fold(0.0, f64::max);
        let m = spread.max(r) + rng.gen_range(0.01..1.0);
        let a = FiniteSelfAdjoint::diagonal(&diag).map_err(e)?;
        let truth = diag.iter().any(|d| (d - x).abs() < r);
        let probe = presence_probe(&a, x, m, r).map_err(e)?;
        check(probe == truth, format!("presence trial {trial}: probe {probe}, truth {truth}"))?;
    }
    for trial in 0..500 {
        let n = rng.gen_range(1..=8);
        let phases: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        let diag: Vec<Complex64> = phases.iter().map(|t| Complex64::new(t.cos(), t.sin())).collect();
        let t = rng.gen_range(0.0..std::f64::consts::TAU);
        let centre = Complex64::new(t.cos(), t.sin());
        let r = rng.gen_range(0.0..2.0);
        let u = FiniteUnitary::diagonal(&diag).map_err(e)?;
        let truth = diag.iter().any(|z| { let d = z - centre; d.re.hypot(d.im) < r });
        let probe = unitary_probe(&u, centre, r).map_err(e)?;
        check(probe == truth, format!("unitary trial {trial}: probe {probe}, truth {truth}"))?;
    }
    let an = FiniteSelfAdjoint::diagonal(&[-1.0, 0.0, 1.0]).map_err(e)?;
    let ainf = FiniteSelfAdjoint::diagonal(&[-1.0, 0.5, 1.0]).map_err(e)?;
    let sep = p2_norm(&an, 1.0, 0.0, -1.0).map_err(e)? - p2_norm(&ainf, 1.0, 0.0, -1.0).map_err(e)?;
    check(sep == 0.25, format!("separation {sep}"))?;
    Ok("500 + 500 random diagonal instances agree; separation exactly 1/4".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 10] = [
        (1, "complexity goldens", Duration::from_secs(1), complexity_goldens),
        (2, "connectivity corpus", Duration::from_secs(1), connectivity),
        (3, "branching bounds", Duration::from_secs(1), branching_bounds),
        (4, "approximation exactness", Duration::from_secs(5), approximation_exactness),
        (5, "substitution fixed points", Duration::from_secs(1), substitution_fixed_points),
        (6, "2D convergence", Duration::from_secs(30), two_dim_convergence),
        (7, "spectral baselines", Duration::from_secs(60), spectral_baselines),
        (8, "spectral convergence", Duration::from_secs(120), spectral_convergence),
        (9, "negative control", Duration::from_secs(1), negative_control),
        (10, "probe equivalence", Duration::from_secs(5), probe_equivalence),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > limit => Err(format!("{d}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} ({took:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} ({took:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
