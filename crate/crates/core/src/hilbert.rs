//! Hilbert series of monomial cyclic modules `F/I` and of finitely generated
//! monomial right modules `F^r / ⊕ e_i I_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::automata::{DfaIdealState, RegexExpr};
use crate::error::{Error, Result};
use crate::ideal::{FgRightState, IdealState, TwoSidedState};
use crate::orbit::Orbit;
use crate::ratfun::{GrowthClass, IntPolynomial, RationalFunction};
use crate::words::{Alphabet, Word};

/// How generators are closed into an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Right ideal generated by the generator languages: `G X*`.
    Right,
    /// Two-sided ideal: `X* G X*`.
    TwoSided,
    /// The generators already denote the monomials of a right ideal.
    Language,
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "right" => Ok(Side::Right),
            "two-sided" => Ok(Side::TwoSided),
            "language" => Ok(Side::Language),
            other => Err(format!("unknown side `{other}` (expected right, two-sided or language)")),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::TwoSided => "two-sided",
            Side::Language => "language",
        })
    }
}

/// Orbit state representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Pick `fg` for finitely generated right ideals, `ts` for finitely
    /// generated two-sided ideals and `dfa` otherwise.
    #[default]
    Auto,
    /// Finite right basis.
    Fg,
    /// Finite two-sided basis plus a reduced right part.
    Ts,
    /// Minimal automaton of the ideal language.
    Dfa,
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Backend::Auto),
            "fg" => Ok(Backend::Fg),
            "ts" => Ok(Backend::Ts),
            "dfa" => Ok(Backend::Dfa),
            other => Err(format!("unknown backend `{other}` (expected fg, ts, dfa or auto)")),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Auto => "auto",
            Backend::Fg => "fg",
            Backend::Ts => "ts",
            Backend::Dfa => "dfa",
        })
    }
}

/// A monomial right ideal given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub alphabet: Alphabet,
    pub side: Side,
    pub generators: Vec<RegexExpr>,
}

impl IdealSpec {
    pub fn new(alphabet: Alphabet, side: Side, generators: Vec<RegexExpr>) -> Result<Self> {
        let n = alphabet.len();
        if let Some(bad) = generators.iter().filter_map(RegexExpr::max_letter).find(|&l| l >= n) {
            return Err(Error::UnknownLetter(format!("#{bad}")));
        }
        Ok(Self {
            alphabet,
            side,
            generators,
        })
    }

    /// Ideal generated by finitely many words.
    pub fn from_words(alphabet: Alphabet, side: Side, words: &[Word]) -> Result<Self> {
        for w in words {
            alphabet.check(w)?;
        }
        Self::new(alphabet, side, words.iter().map(RegexExpr::word).collect())
    }

    /// Generators as plain words, if every generator is a single word.
    pub fn generator_words(&self) -> Option<Vec<Word>> {
        self.generators.iter().map(RegexExpr::as_word).collect()
    }

    /// Regular expressions for the monomial language `I ∩ W`.
    pub fn closed_language(&self) -> Vec<RegexExpr> {
        let n = self.alphabet.len();
        self.generators
            .iter()
            .map(|g| match self.side {
                Side::Right => g.close_right(n),
                Side::TwoSided => g.close_two_sided(n),
                Side::Language => g.clone(),
            })
            .collect()
    }

    /// Resolves `Auto` and rejects backends that cannot represent the ideal.
    pub fn resolve_backend(&self, requested: Backend) -> Result<Backend> {
        let finite = self.generator_words().is_some();
        let unsupported = |reason: &str| Error::UnsupportedBackend {
            backend: requested.to_string(),
            reason: reason.to_string(),
        };
        match requested {
            Backend::Auto => Ok(match (self.side, finite) {
                (Side::Right, true) => Backend::Fg,
                (Side::TwoSided, true) => Backend::Ts,
                _ => Backend::Dfa,
            }),
            Backend::Fg if self.side != Side::Right => Err(unsupported("requires side = right")),
            Backend::Ts if self.side != Side::TwoSided => Err(unsupported("requires side = two-sided")),
            Backend::Fg | Backend::Ts if !finite => {
                Err(unsupported("every generator must be a single word"))
            }
            other => Ok(other),
        }
    }

    /// Membership decided directly from the generators, without automata.
    pub fn contains(&self, w: &Word) -> bool {
        self.generators.iter().any(|g| match (self.side, g.as_word()) {
            (Side::Right, Some(gw)) => gw.is_prefix_of(w),
            (Side::TwoSided, Some(gw)) => gw.is_factor_of(w),
            (Side::Right, None) => g.matches_prefix(w),
            (Side::TwoSided, None) => g.matches_factor(w),
            (Side::Language, _) => g.matches(w),
        })
    }
}

/// Orbit of an ideal, with states replaced by their canonical descriptions.
#[derive(Debug, Clone)]
pub struct ComputedOrbit {
    pub backend: Backend,
    pub orbit: Orbit<String>,
}

/// Computes the orbit of the ideal described by `spec`.
pub fn orbit_of(spec: &IdealSpec, backend: Backend, max_states: usize) -> Result<ComputedOrbit> {
    let backend = spec.resolve_backend(backend)?;
    let n = spec.alphabet.len();
    let alphabet = &spec.alphabet;
    let orbit = match backend {
        Backend::Fg => {
            let words = spec.generator_words().expect("checked by resolve_backend");
            labelled(FgRightState::new(n, words), alphabet, max_states)?
        }
        Backend::Ts => {
            let words = spec.generator_words().expect("checked by resolve_backend");
            labelled(TwoSidedState::new(n, words), alphabet, max_states)?
        }
        Backend::Dfa => {
            let state = match spec.side {
                Side::Language => DfaIdealState::from_language(&spec.generators, n)?,
                Side::Right | Side::TwoSided => {
                    DfaIdealState::from_right_generators(&spec.closed_language(), n)?
                }
            };
            labelled(state, alphabet, max_states)?
        }
        Backend::Auto => unreachable!("resolved above"),
    };
    Ok(ComputedOrbit { backend, orbit })
}

fn labelled<S: IdealState>(initial: S, alphabet: &Alphabet, max_states: usize) -> Result<Orbit<String>> {
    Ok(Orbit::compute(initial, max_states)?.labelled(alphabet))
}

/// Hilbert series together with orbit statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    /// `HS(N)`.
    pub series: RationalFunction,
    /// `HS_a(N) = HS(N) / (1 - t)`.
    pub affine: RationalFunction,
    /// Orbit size of each cyclic component.
    pub orbit_sizes: Vec<usize>,
    pub backends: Vec<Backend>,
    pub growth: GrowthClass,
    /// Every component orbit is the minimal automaton of its ideal language.
    pub minimal: bool,
}

impl SeriesResult {
    /// Degree of `det(Id - t A)` before reduction, summed over components:
    /// the total orbit size.
    pub fn char_poly_degree(&self) -> usize {
        self.orbit_sizes.iter().sum()
    }

    pub fn expand(&self, degree: usize) -> Result<Vec<BigInt>> {
        self.series.expand(degree)
    }
}

/// `HS(F/I)` for a cyclic module.
pub fn series_of_cyclic(spec: &IdealSpec, backend: Backend, max_states: usize) -> Result<SeriesResult> {
    let computed = orbit_of(spec, backend, max_states)?;
    Ok(series_of_orbit(&computed))
}

pub fn series_of_orbit(computed: &ComputedOrbit) -> SeriesResult {
    let orbit = &computed.orbit;
    let series = orbit.series();
    SeriesResult {
        affine: series.affine(),
        series,
        orbit_sizes: vec![orbit.len()],
        backends: vec![computed.backend],
        growth: orbit.growth(),
        minimal: orbit.verify_minimality(),
    }
}

/// A monomial right submodule `M = ⊕ e_i I_i ⊂ F^r`; the module is `F^r / M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub alphabet: Alphabet,
    pub components: Vec<IdealSpec>,
}

impl ModuleSpec {
    pub fn new(alphabet: Alphabet, components: Vec<IdealSpec>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Dimension("module rank must be at least 1".into()));
        }
        if components.iter().any(|c| c.alphabet != alphabet) {
            return Err(Error::InvalidAlphabet(
                "all components must share the module alphabet".into(),
            ));
        }
        Ok(Self { alphabet, components })
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }
}

/// `HS(F^r / ⊕ e_i I_i) = Σ HS(F / I_i)`.
pub fn series_of_module(spec: &ModuleSpec, backend: Backend, max_states: usize) -> Result<SeriesResult> {
    let parts = spec
        .components
        .iter()
        .map(|c| series_of_cyclic(c, backend, max_states))
        .collect::<Result<Vec<_>>>()?;
    let series: RationalFunction = parts.iter().map(|p| p.series.clone()).sum();
    let growth = parts
        .iter()
        .map(|p| p.growth)
        .reduce(GrowthClass::max)
        .expect("rank >= 1");
    Ok(SeriesResult {
        affine: series.affine(),
        series,
        orbit_sizes: parts.iter().flat_map(|p| p.orbit_sizes.clone()).collect(),
        backends: parts.iter().flat_map(|p| p.backends.clone()).collect(),
        growth,
        minimal: parts.iter().all(|p| p.minimal),
    })
}

/// `(1 - Σ_k t^{d_k}) / (1 - n t)`: the series of `F/I` for a right ideal
/// with a finite prefix-free basis of degrees `d_k`.
pub fn fgform_closed_form(degrees: &[usize], n: usize) -> RationalFunction {
    let mut num = IntPolynomial::one();
    for &d in degrees {
        num = &num - &IntPolynomial::monomial(BigInt::from(1), d);
    }
    RationalFunction::new(num, IntPolynomial::new(vec![BigInt::from(1), -BigInt::from(n)]))
}

pub const MAX_ORACLE_DEGREE: usize = 12;

/// Brute-force Hilbert function: the number of words of each degree
/// `0..=max_degree` outside the ideal.
pub fn oracle_hilbert_function(spec: &IdealSpec, max_degree: usize) -> Result<Vec<u64>> {
    if max_degree > MAX_ORACLE_DEGREE {
        return Err(Error::DegreeTooLarge(max_degree));
    }
    Ok((0..=max_degree)
        .map(|d| {
            spec.alphabet
                .words_of_degree(d)
                .filter(|w| !spec.contains(w))
                .count() as u64
        })
        .collect())
}

/// Brute-force Hilbert function of a module: sum over components.
pub fn oracle_module_hilbert_function(spec: &ModuleSpec, max_degree: usize) -> Result<Vec<u64>> {
    let mut total = vec![0u64; max_degree + 1];
    for c in &spec.components {
        for (t, v) in total.iter_mut().zip(oracle_hilbert_function(c, max_degree)?) {
            *t += v;
        }
    }
    Ok(total)
}
