#![allow(dead_code)]

use std::path::PathBuf;

use ncseries::automata::RegexExpr;
use ncseries::hilbert::{IdealSpec, ModuleSpec, Side};
use ncseries::specfile::{parse_spec, SpecFile};
use ncseries::{Alphabet, Word};
use rand::Rng;

pub const FIXTURES: [&str; 8] = [
    "artin.spec",
    "free2.spec",
    "free3.spec",
    "hecke_a.spec",
    "hecke_a_prime.spec",
    "kleene.spec",
    "module.spec",
    "unit.spec",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture(name: &str) -> SpecFile {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_spec(&text).unwrap()
}

pub fn fixture_ideal(name: &str) -> IdealSpec {
    match fixture(name) {
        SpecFile::Ideal(s) => s,
        SpecFile::Module(_) => panic!("{name} is a module"),
    }
}

pub fn alphabet(n: usize) -> Alphabet {
    Alphabet::new(["x", "y", "z", "v"].into_iter().take(n)).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, min_degree: usize, max_degree: usize) -> Word {
    let d = rng.gen_range(min_degree..=max_degree);
    Word::new((0..d).map(|_| rng.gen_range(0..n)).collect())
}

pub fn random_words<R: Rng>(rng: &mut R, n: usize, count: usize, max_degree: usize) -> Vec<Word> {
    (0..count).map(|_| random_word(rng, n, 1, max_degree)).collect()
}

/// Finitely generated ideal over 2 or 3 letters with generators of degree at most 4.
pub fn random_ideal<R: Rng>(rng: &mut R, side: Side) -> IdealSpec {
    let n = rng.gen_range(2..=3);
    let count = rng.gen_range(1..=4);
    let words = random_words(rng, n, count, 4);
    IdealSpec::from_words(alphabet(n), side, &words).unwrap()
}

/// Random regular expression over `n` letters.
pub fn random_regex<R: Rng>(rng: &mut R, n: usize, depth: usize) -> RegexExpr {
    if depth == 0 {
        return match rng.gen_range(0..6) {
            0 => RegexExpr::EmptyWord,
            _ => RegexExpr::Letter(rng.gen_range(0..n)),
        };
    }
    match rng.gen_range(0..4) {
        0 => RegexExpr::Letter(rng.gen_range(0..n)),
        1 => RegexExpr::concat((0..rng.gen_range(2..=3)).map(|_| random_regex(rng, n, depth - 1)).collect()),
        2 => RegexExpr::union((0..2).map(|_| random_regex(rng, n, depth - 1)).collect()),
        _ => RegexExpr::star(random_regex(rng, n, depth - 1)),
    }
}

pub fn random_module<R: Rng>(rng: &mut R) -> ModuleSpec {
    let n = rng.gen_range(2..=3);
    let rank = rng.gen_range(1..=3);
    let components = (0..rank)
        .map(|_| {
            let side = if rng.gen_bool(0.5) { Side::Right } else { Side::TwoSided };
            let count = rng.gen_range(0..=3);
            let words = random_words(rng, n, count, 4);
            IdealSpec::from_words(alphabet(n), side, &words).unwrap()
        })
        .collect();
    ModuleSpec::new(alphabet(n), components).unwrap()
}
