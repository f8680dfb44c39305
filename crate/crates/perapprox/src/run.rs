//! Job execution: source loading and the six tasks.

use std::fs;
use std::path::Path;

use perapprox_core::corpus::{default_seed, Builtin};
use perapprox_core::debruijn::{CoverMode, DeBruijnGraph};
use perapprox_core::probes::{p2_norm, presence_probe, unitary_probe, FiniteSelfAdjoint, FiniteUnitary};
use perapprox_core::spectra::{
    band_set, bloch_spectrum, convergence_experiment, substitution_convergence, JacobiSpec,
};
use perapprox_core::subst::Substitution;
use perapprox_core::symbolic::{Alphabet, DictionarySlice, Letter, Pattern, PeriodicConfiguration};
use perapprox_core::Complex64;

use crate::config::{Cover, JobConfig, ProbeJob, Source, Task};
use crate::error::{Failure, Result};
use crate::formats::{dot, slice_text, tables, SubstitutionFile};

const DEFAULT_TOL: f64 = 1e-10;
/// Largest discriminant-vs-Bloch distance accepted by the cross-check.
const BLOCH_GATE: f64 = 1e-3;

/// The loaded source of a job.
enum Input {
    Builtin(Builtin),
    Substitution(Substitution),
    Slice(DictionarySlice),
    Periodic(PeriodicConfiguration),
}

impl Input {
    fn load(source: &Source, alphabet: Option<&[String]>) -> Result<Self> {
        Ok(match source {
            Source::Builtin(name) => Input::Builtin(
                Builtin::from_name(name).ok_or_else(|| Failure::config(format!("unknown builtin {name:?}")))?,
            ),
            Source::Substitution(path) => {
                Input::Substitution(SubstitutionFile::parse(&read(path)?)?.to_substitution()?)
            }
            Source::Slice(path) => Input::Slice(slice_text::parse(&read(path)?)?),
            Source::Tile(text) => {
                let alphabet = match alphabet {
                    Some(names) => Alphabet::new(names.iter().cloned())?,
                    None => {
                        let mut chars: Vec<char> = text.chars().filter(|&c| c != '/').collect();
                        chars.sort_unstable();
                        chars.dedup();
                        Alphabet::from_chars(&chars.into_iter().collect::<String>())?
                    }
                };
                let tile = parse_rows(&alphabet, text)?;
                Input::Periodic(PeriodicConfiguration::new(alphabet, tile)?)
            }
        })
    }

    fn alphabet(&self) -> Alphabet {
        match self {
            Input::Builtin(b) => b.alphabet(),
            Input::Substitution(s) => s.alphabet().clone(),
            Input::Slice(s) => s.alphabet().clone(),
            Input::Periodic(p) => p.alphabet().clone(),
        }
    }

    fn dim(&self) -> usize {
        match self {
            Input::Builtin(b) => b.dim(),
            Input::Substitution(s) => s.dim(),
            Input::Slice(s) => s.dim(),
            Input::Periodic(p) => p.dim(),
        }
    }

    fn substitution(&self) -> Option<Substitution> {
        match self {
            Input::Builtin(b) => b.substitution(),
            Input::Substitution(s) => Some(s.clone()),
            _ => None,
        }
    }

    fn slice(&self, cap: usize) -> Result<DictionarySlice> {
        Ok(match self {
            Input::Builtin(b) => b.slice(cap)?,
            Input::Substitution(s) => s.dictionary(cap)?,
            Input::Periodic(p) => p.dictionary(cap)?,
            Input::Slice(s) if cap <= s.cap() => s.truncated(cap)?,
            Input::Slice(s) => {
                return Err(Failure::config(format!("slice file only reaches cap {}, {cap} requested", s.cap())))
            }
        })
    }

    /// Start pattern `v` of the approximants `S^n(v^∞)`.
    fn start(&self, s: &Substitution, text: Option<&str>) -> Result<Pattern> {
        if let Some(text) = text {
            return parse_rows(s.alphabet(), text);
        }
        Ok(match self {
            Input::Builtin(b) => b.approximant_seed().expect("substitution builtin")?,
            _ => default_seed(s)?,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Failure::read(path, e))
}

/// Printed rows of a pattern joined by `/`, top row first.
fn parse_rows(a: &Alphabet, text: &str) -> Result<Pattern> {
    let rows = text.split('/').map(|r| Ok(a.parse_word(r)?.into_letters())).collect::<Result<Vec<_>>>()?;
    if rows.len() == 1 {
        return Ok(Pattern::new(vec![rows[0].len()], rows.into_iter().next().unwrap())?);
    }
    Ok(Pattern::from_rows(&rows)?)
}

fn render_rows(a: &Alphabet, p: &Pattern) -> String {
    if p.dim() == 1 {
        return a.render(p.cells()) + "\n";
    }
    p.to_rows().iter().map(|r| a.render(r)).collect::<Vec<_>>().join("\n") + "\n"
}

/// Writes `text` to `path` and returns a one-line note, or returns `text`
/// itself for standard output.
fn emit(path: Option<&Path>, text: String, what: &str) -> Result<String> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::write(p, e))?;
            Ok(format!("wrote {what} to {}\n", p.display()))
        }
        None => Ok(text),
    }
}

/// Runs a job and returns what goes to standard output.
pub fn run(cfg: &JobConfig) -> Result<String> {
    cfg.check()?;
    if cfg.task == Task::Probe {
        return probe(cfg.probe.as_ref().expect("checked"));
    }
    let input = Input::load(cfg.source.as_ref().expect("checked"), cfg.alphabet.as_deref())?;
    match cfg.task {
        Task::Dict => dict(cfg, &input),
        Task::Graph => graph(cfg, &input),
        Task::Approx => approx(cfg, &input),
        Task::Spectrum => spectrum(cfg, &input),
        Task::Converge => converge(cfg, &input),
        Task::Probe => unreachable!(),
    }
}

fn dict(cfg: &JobConfig, input: &Input) -> Result<String> {
    let cap = match input {
        Input::Slice(s) => cfg.cap.unwrap_or(s.cap()),
        _ => cfg.cap.unwrap_or(4),
    };
    let slice = input.slice(cap)?;
    let violations = slice.validate();
    if !violations.is_empty() {
        return Err(Failure::Gate(format!("slice is not a dictionary: {} violations, first {:?}", violations.len(), violations[0])));
    }
    emit(cfg.output.as_deref(), slice_text::write(&slice)?, &format!("{} patterns", slice.len()))
}

fn cover_mode(cfg: &JobConfig) -> CoverMode {
    match cfg.cover.unwrap_or(Cover::Edges) {
        Cover::Edges => CoverMode::Edges,
        Cover::Vertices => CoverMode::Vertices,
    }
}

fn graph(cfg: &JobConfig, input: &Input) -> Result<String> {
    let k = cfg.order.unwrap_or(1);
    let slice = input.slice(k + 1)?;
    let g = DeBruijnGraph::build(&slice, k)?;
    let path = if cfg.highlight_path { Some(g.global_closed_path(cover_mode(cfg))?) } else { None };
    let text = dot::write(&g, slice.alphabet(), path.as_ref());
    let mut out = emit(cfg.dot.as_deref().or(cfg.output.as_deref()), text, "graph")?;
    if cfg.dot.is_some() || cfg.output.is_some() {
        out += &format!(
            "order {k}: {} vertices, {} edges, strongly connected: {}, branching vertices: {}\n",
            g.vertices().len(),
            g.edges().len(),
            g.is_strongly_connected(),
            g.branching_count()
        );
    }
    Ok(out)
}

/// The periodic word of a global closed path in the graph of order `k`,
/// checked against the slice it was built from.
fn de_bruijn_approximant(input: &Input, k: usize, mode: CoverMode) -> Result<PeriodicConfiguration> {
    let slice = input.slice(k + 1)?;
    let path = DeBruijnGraph::build(&slice, k)?.global_closed_path(mode)?;
    let cfg = PeriodicConfiguration::from_word(slice.alphabet().clone(), &path.periodic_word())?;
    let len = if mode == CoverMode::Edges { k + 1 } else { k };
    if cfg.dictionary(len)?.words(len) != slice.words(len) {
        return Err(Failure::Gate(format!("approximant of order {k} does not reproduce the words of length {len}")));
    }
    Ok(cfg)
}

/// The approximant a job asks for: `S^n(v^∞)` for substitutions unless an
/// order is given, otherwise a de Bruijn path word.
fn approximant(cfg: &JobConfig, input: &Input) -> Result<(usize, PeriodicConfiguration)> {
    if let Input::Periodic(p) = input {
        return Ok((0, p.clone()));
    }
    match (input.substitution(), cfg.order) {
        (Some(s), None) => {
            let n = cfg.n.unwrap_or(3);
            let v = input.start(&s, cfg.start.as_deref())?;
            Ok((n, s.periodic_approximant(&v, n)?))
        }
        (_, order) => {
            let k = order.unwrap_or(3);
            Ok((k, de_bruijn_approximant(input, k, cover_mode(cfg))?))
        }
    }
}

fn approx(cfg: &JobConfig, input: &Input) -> Result<String> {
    let (_, p) = approximant(cfg, input)?;
    emit(cfg.output.as_deref(), render_rows(p.alphabet(), p.tile()), "tile")
}

fn jacobi_spec(cfg: &JobConfig, alphabet: &Alphabet) -> Result<JacobiSpec> {
    let letter = match &cfg.letter {
        Some(name) => alphabet.letter(name).ok_or_else(|| Failure::config(format!("unknown letter {name:?}")))?,
        None => Letter(0),
    };
    Ok(JacobiSpec::letter_potential(letter, cfg.lambda.unwrap_or(1.0)))
}

fn one_dim(input: &Input, task: &str) -> Result<()> {
    match input.dim() {
        1 => Ok(()),
        d => Err(Failure::config(format!("{task} needs a one-dimensional source, got dimension {d}"))),
    }
}

fn spectrum(cfg: &JobConfig, input: &Input) -> Result<String> {
    one_dim(input, "spectrum")?;
    let (n, p) = approximant(cfg, input)?;
    let j = jacobi_spec(cfg, p.alphabet())?.sample(&p)?;
    let bands = band_set(&j, cfg.tol.unwrap_or(DEFAULT_TOL))?;
    if let Some(phases) = cfg.phases {
        let bloch = bloch_spectrum(&j, phases)?.band_ranges()?;
        let d = bands.bands.hausdorff(&bloch);
        if d > BLOCH_GATE {
            return Err(Failure::Gate(format!("bands and Bloch grid differ by {d:e}")));
        }
    }
    emit(cfg.output.as_deref(), tables::bands(&[(n, j.period(), &bands.bands)])?, "band table")
}

fn converge(cfg: &JobConfig, input: &Input) -> Result<String> {
    let n_min = cfg.n_min.unwrap_or(1);
    let n_max = cfg.n_max.unwrap_or(8);
    let tol = cfg.tol.unwrap_or(DEFAULT_TOL);
    let rows = match (input.substitution(), input.dim()) {
        (Some(s), 2) => {
            let v = input.start(&s, cfg.start.as_deref())?;
            let rows = s.convergence_table(&v, n_min..=n_max, cfg.cap.unwrap_or(4))?;
            return emit(cfg.output.as_deref(), tables::pattern_convergence(&rows)?, "convergence table");
        }
        (Some(s), _) => {
            let v = input.start(&s, cfg.start.as_deref())?;
            substitution_convergence(&s, &v, n_min..=n_max, &jacobi_spec(cfg, s.alphabet())?, cfg.cap.unwrap_or(8), tol)?
        }
        (None, 1) => {
            if let Input::Periodic(_) = input {
                return Err(Failure::config("converge needs a subshift source, not a single tile"));
            }
            let approximants = (n_min..=n_max)
                .map(|k| Ok((k, de_bruijn_approximant(input, k, cover_mode(cfg))?)))
                .collect::<Result<Vec<_>>>()?;
            let reference = input.slice(cfg.cap.unwrap_or(n_max + 1))?;
            convergence_experiment(&approximants, &jacobi_spec(cfg, &input.alphabet())?, &reference, tol)?
        }
        (None, d) => return Err(Failure::config(format!("converge has no approximants for this source in dimension {d}"))),
    };
    let mut out = emit(cfg.output.as_deref(), tables::convergence(&rows)?, "convergence table")?;
    if let Some(path) = &cfg.bands {
        let bands: Vec<_> = rows.iter().map(|r| (r.n, r.period, &r.bands)).collect();
        out += &emit(Some(path), tables::bands(&bands)?, "band table")?;
    }
    Ok(out)
}

fn unit(t: f64) -> Complex64 {
    Complex64::new(t.cos(), t.sin())
}

fn probe(job: &ProbeJob) -> Result<String> {
    Ok(match job {
        ProbeJob::Presence { values, x, m, r } => {
            format!("{}\n", presence_probe(&FiniteSelfAdjoint::diagonal(values)?, *x, *m, *r)?)
        }
        ProbeJob::Unitary { phases, centre, r } => {
            let u = FiniteUnitary::diagonal(&phases.iter().map(|&t| unit(t)).collect::<Vec<_>>())?;
            format!("{}\n", unitary_probe(&u, unit(*centre), *r)?)
        }
        ProbeJob::P2 { values, coeffs } => {
            let [p0, p1, p2] = *coeffs;
            format!("{:.16e}\n", p2_norm(&FiniteSelfAdjoint::diagonal(values)?, p0, p1, p2)?)
        }
    })
}
