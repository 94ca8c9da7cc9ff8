use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

const RATE_TOLERANCE: f64 = 1e-9;
const MAX_ITERATIONS: usize = 1_000_000;

/// Asymptotic behaviour of the Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GrowthClass {
    /// `HF(d) ∈ Θ(d^(k-1))`; `k = 0` means the module is finite dimensional.
    Polynomial { k: usize },
    /// `limsup HF(d)^(1/d) = rate > 1`, with `rate` accurate to `tolerance`.
    Exponential { rate: f64, tolerance: f64 },
}

impl GrowthClass {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, GrowthClass::Polynomial { .. })
    }

    /// The faster of two growth classes (growth of a direct sum).
    pub fn max(self, other: GrowthClass) -> GrowthClass {
        use GrowthClass::*;
        match (self, other) {
            (Polynomial { k: a }, Polynomial { k: b }) => Polynomial { k: a.max(b) },
            (e @ Exponential { .. }, Polynomial { .. }) | (Polynomial { .. }, e @ Exponential { .. }) => e,
            (Exponential { rate: a, tolerance: ta }, Exponential { rate: b, tolerance: tb }) => {
                if a >= b {
                    Exponential { rate: a, tolerance: ta }
                } else {
                    Exponential { rate: b, tolerance: tb }
                }
            }
        }
    }
}

/// Classifies growth from the orbit transition multigraph.
///
/// Only non-unit states reachable from state 0 through non-unit states are
/// kept. Growth is polynomial iff no strongly connected component carries
/// more internal edges (with multiplicity) than vertices, i.e. no vertex
/// lies on two distinct cycles; then `k` is the largest number of cyclic
/// components met along a path. Otherwise the rate is the largest spectral
/// radius among the components.
pub fn classify_growth(adjacency: &[Vec<u64>], unit_index: Option<usize>) -> GrowthClass {
    let r = adjacency.len();
    let is_unit = |s: usize| Some(s) == unit_index;
    let mut keep = vec![false; r];
    if r > 0 && !is_unit(0) {
        let mut stack = vec![0];
        keep[0] = true;
        while let Some(s) = stack.pop() {
            for (t, &a) in adjacency[s].iter().enumerate() {
                if a > 0 && !is_unit(t) && !keep[t] {
                    keep[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..r).filter(|&s| keep[s]).collect();
    if vertices.is_empty() {
        return GrowthClass::Polynomial { k: 0 };
    }

    let mut graph = DiGraph::<usize, ()>::new();
    let mut node = vec![None; r];
    for &s in &vertices {
        node[s] = Some(graph.add_node(s));
    }
    for &s in &vertices {
        for &t in &vertices {
            if adjacency[s][t] > 0 {
                graph.add_edge(node[s].unwrap(), node[t].unwrap(), ());
            }
        }
    }

    // reverse topological order: successors of a component come first
    let sccs = tarjan_scc(&graph);
    let mut comp_of = vec![usize::MAX; r];
    for (c, members) in sccs.iter().enumerate() {
        for &n in members {
            comp_of[graph[n]] = c;
        }
    }

    let mut exponential = false;
    let mut cyclic = vec![false; sccs.len()];
    for (c, members) in sccs.iter().enumerate() {
        let states: Vec<usize> = members.iter().map(|&n| graph[n]).collect();
        let internal: u64 = states
            .iter()
            .flat_map(|&s| states.iter().map(move |&t| adjacency[s][t]))
            .sum();
        cyclic[c] = internal > 0;
        if internal > states.len() as u64 {
            exponential = true;
        }
    }

    if exponential {
        let rate = sccs
            .iter()
            .map(|members| {
                let states: Vec<usize> = members.iter().map(|&n| graph[n]).collect();
                spectral_radius(adjacency, &states)
            })
            .fold(0.0_f64, f64::max);
        return GrowthClass::Exponential {
            rate,
            tolerance: RATE_TOLERANCE,
        };
    }

    let mut best = vec![0usize; sccs.len()];
    for c in 0..sccs.len() {
        let mut succ = 0;
        for &n in &sccs[c] {
            let s = graph[n];
            for &t in &vertices {
                if adjacency[s][t] > 0 && comp_of[t] != c {
                    succ = succ.max(best[comp_of[t]]);
                }
            }
        }
        best[c] = succ + usize::from(cyclic[c]);
    }
    GrowthClass::Polynomial { k: best[comp_of[0]] }
}

/// Perron root of the submatrix on `states` (strongly connected), by power
/// iteration on `A + Id` with Collatz–Wielandt bounds.
fn spectral_radius(adjacency: &[Vec<u64>], states: &[usize]) -> f64 {
    let m = states.len();
    let sub: Vec<Vec<f64>> = states
        .iter()
        .map(|&s| states.iter().map(|&t| adjacency[s][t] as f64).collect())
        .collect();
    let internal: f64 = sub.iter().flatten().sum();
    if internal == 0.0 {
        return 0.0;
    }
    let mut x = vec![1.0_f64; m];
    let mut estimate = 0.0;
    for _ in 0..MAX_ITERATIONS {
        let y: Vec<f64> = (0..m)
            .map(|i| x[i] + (0..m).map(|j| sub[i][j] * x[j]).sum::<f64>())
            .collect();
        let ratios = (0..m).map(|i| y[i] / x[i]);
        let (lo, hi) = ratios.fold((f64::INFINITY, 0.0_f64), |(lo, hi), q| (lo.min(q), hi.max(q)));
        estimate = 0.5 * (lo + hi) - 1.0;
        if hi - lo < RATE_TOLERANCE * 1e-3 {
            break;
        }
        let norm = y.iter().cloned().fold(0.0_f64, f64::max);
        x = y.into_iter().map(|v| v / norm).collect();
    }
    estimate
}
