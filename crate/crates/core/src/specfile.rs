//! Line-oriented spec files.
//!
//! ```text
//! # Artin group example
//! alphabet = x y z
//! object = ideal            # or: module
//! side = two-sided          # right | two-sided | language
//! gen = y z
//! gen = x z x
//! gen = x z z z* x z
//! ```
//!
//! Module files declare `rank = r` and use `gen[i] = <regex>` with a 1-based
//! component index; `side[i] = ...` overrides the side of one component.

use crate::automata::{parse_regex, RegexExpr};
use crate::error::{Error, Result};
use crate::hilbert::{IdealSpec, ModuleSpec, Side};
use crate::words::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecFile {
    Ideal(IdealSpec),
    Module(ModuleSpec),
}

impl SpecFile {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            SpecFile::Ideal(s) => &s.alphabet,
            SpecFile::Module(m) => &m.alphabet,
        }
    }

    /// Components as a module (an ideal file is a rank-1 module).
    pub fn into_module(self) -> ModuleSpec {
        match self {
            SpecFile::Ideal(s) => ModuleSpec {
                alphabet: s.alphabet.clone(),
                components: vec![s],
            },
            SpecFile::Module(m) => m,
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::SpecFile {
        line,
        message: message.into(),
    }
}

/// `key` or `key[i]`.
fn split_index(key: &str, line: usize) -> Result<(&str, Option<usize>)> {
    let Some(open) = key.find('[') else {
        return Ok((key, None));
    };
    let Some(inner) = key[open + 1..].strip_suffix(']') else {
        return Err(err(line, format!("malformed key `{key}`")));
    };
    let idx: usize = inner
        .trim()
        .parse()
        .map_err(|_| err(line, format!("invalid component index `{inner}`")))?;
    if idx == 0 {
        return Err(err(line, "component indices start at 1"));
    }
    Ok((key[..open].trim(), Some(idx)))
}

pub fn parse_spec(text: &str) -> Result<SpecFile> {
    let mut alphabet: Option<Alphabet> = None;
    let mut is_module: Option<bool> = None;
    let mut side: Option<Side> = None;
    let mut rank: Option<(usize, usize)> = None;
    let mut component_sides: Vec<(usize, usize, Side)> = Vec::new();
    let mut gens: Vec<(usize, Option<usize>, RegexExpr)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(err(line, "expected `key = value`"));
        };
        let (key, index) = split_index(key.trim(), line)?;
        let value = value.trim();
        match (key, index) {
            ("alphabet", None) => {
                if alphabet.is_some() {
                    return Err(err(line, "alphabet declared twice"));
                }
                let a = Alphabet::new(value.split_whitespace()).map_err(|e| err(line, e.to_string()))?;
                alphabet = Some(a);
            }
            ("object", None) => {
                let m = match value {
                    "ideal" => false,
                    "module" => true,
                    other => return Err(err(line, format!("unknown object `{other}`"))),
                };
                if is_module.replace(m).is_some() {
                    return Err(err(line, "object declared twice"));
                }
            }
            ("side", None) => {
                let s: Side = value.parse().map_err(|e: String| err(line, e))?;
                if side.replace(s).is_some() {
                    return Err(err(line, "side declared twice"));
                }
            }
            ("side", Some(c)) => {
                let s: Side = value.parse().map_err(|e: String| err(line, e))?;
                component_sides.push((line, c, s));
            }
            ("rank", None) => {
                let r: usize = value
                    .parse()
                    .map_err(|_| err(line, format!("invalid rank `{value}`")))?;
                if r == 0 {
                    return Err(err(line, "rank must be at least 1"));
                }
                if rank.replace((line, r)).is_some() {
                    return Err(err(line, "rank declared twice"));
                }
            }
            ("gen", index) => {
                let Some(a) = &alphabet else {
                    return Err(err(line, "alphabet must be declared before generators"));
                };
                let e = parse_regex(value, a).map_err(|e| err(line, e.to_string()))?;
                gens.push((line, index, e));
            }
            _ => return Err(err(line, format!("unknown key `{}`", content.split('=').next().unwrap().trim()))),
        }
    }

    let alphabet = alphabet.ok_or_else(|| err(0, "missing `alphabet`"))?;
    let side = side.unwrap_or(Side::Right);
    let is_module = is_module.unwrap_or(false);

    if !is_module {
        if let Some((line, _)) = rank {
            return Err(err(line, "`rank` is only valid for modules"));
        }
        if let Some((line, _, _)) = component_sides.first() {
            return Err(err(*line, "`side[i]` is only valid for modules"));
        }
        let mut generators = Vec::new();
        for (line, index, e) in gens {
            if index.is_some() {
                return Err(err(line, "`gen[i]` is only valid for modules"));
            }
            generators.push(e);
        }
        return IdealSpec::new(alphabet, side, generators).map(SpecFile::Ideal);
    }

    let (_, rank) = rank.ok_or_else(|| err(0, "module files must declare `rank`"))?;
    let mut sides = vec![side; rank];
    for (line, c, s) in component_sides {
        if c > rank {
            return Err(err(line, format!("component {c} exceeds rank {rank}")));
        }
        sides[c - 1] = s;
    }
    let mut generators: Vec<Vec<RegexExpr>> = vec![Vec::new(); rank];
    for (line, index, e) in gens {
        let Some(c) = index else {
            return Err(err(line, "module generators must be written `gen[i] = ...`"));
        };
        if c > rank {
            return Err(err(line, format!("component {c} exceeds rank {rank}")));
        }
        generators[c - 1].push(e);
    }
    let components = sides
        .into_iter()
        .zip(generators)
        .map(|(s, g)| IdealSpec::new(alphabet.clone(), s, g))
        .collect::<Result<Vec<_>>>()?;
    ModuleSpec::new(alphabet, components).map(SpecFile::Module)
}
