//! The three orbit backends agree wherever more than one applies.

mod common;

use ncseries::hilbert::{orbit_of, series_of_cyclic, Backend, IdealSpec, Side};
use ncseries::orbit::DEFAULT_MAX_STATES;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{fixture_ideal, random_ideal};

fn agree(spec: &IdealSpec, a: Backend, b: Backend) {
    let ra = series_of_cyclic(spec, a, DEFAULT_MAX_STATES).unwrap();
    let rb = series_of_cyclic(spec, b, DEFAULT_MAX_STATES).unwrap();
    assert_eq!(ra.orbit_sizes, rb.orbit_sizes, "{spec:?}");
    assert_eq!(ra.series, rb.series, "{spec:?}");
    assert_eq!(ra.growth.is_polynomial(), rb.growth.is_polynomial());
    assert!(ra.minimal && rb.minimal);
    // same BFS order, so identical transition tables
    let oa = orbit_of(spec, a, DEFAULT_MAX_STATES).unwrap().orbit;
    let ob = orbit_of(spec, b, DEFAULT_MAX_STATES).unwrap().orbit;
    assert_eq!(oa.transitions(), ob.transitions());
}

#[test]
fn right_ideals_fg_vs_dfa() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        agree(&random_ideal(&mut rng, Side::Right), Backend::Fg, Backend::Dfa);
    }
}

#[test]
fn two_sided_ts_vs_dfa() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..60 {
        agree(&random_ideal(&mut rng, Side::TwoSided), Backend::Ts, Backend::Dfa);
    }
}

#[test]
fn hecke_fixtures_ts_vs_dfa() {
    for name in ["hecke_a.spec", "hecke_a_prime.spec"] {
        agree(&fixture_ideal(name), Backend::Ts, Backend::Dfa);
    }
}
