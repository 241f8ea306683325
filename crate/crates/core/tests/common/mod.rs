#![allow(dead_code)]

use moore_complex::generators::{complete, near_regular, random_uniform, NamedGraph};
use moore_complex::Complex;

pub struct Entry {
    pub label: String,
    pub complex: Complex,
}

fn entry(label: impl Into<String>, complex: Complex) -> Entry {
    Entry { label: label.into(), complex }
}

pub fn complete_family(max_n: usize, max_d: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in 1..=max_d.min(n - 1) {
            out.push(entry(format!("complete({n},{d})"), complete(n, d).unwrap()));
        }
    }
    out
}

pub fn random_family() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 4..=8 {
        for d in 1..=3.min(n - 1) {
            for (i, p) in [0.25, 0.5, 0.8].into_iter().enumerate() {
                let seed = (n * 100 + d * 10 + i) as u64;
                out.push(entry(
                    format!("random({n},{d},{p},seed={seed})"),
                    random_uniform(n, d, p, seed).unwrap(),
                ));
            }
        }
    }
    out
}

pub fn named_family() -> Vec<Entry> {
    let mut graphs = vec![NamedGraph::Petersen];
    for m in 3..=9 {
        graphs.push(NamedGraph::Cycle(m));
        graphs.push(NamedGraph::CircularLadder(m));
    }
    for m in 2..=7 {
        graphs.push(NamedGraph::CompleteGraph(m));
    }
    graphs.push(NamedGraph::CircularLadder(16));
    graphs.into_iter().map(|g| entry(g.to_string(), g.build().unwrap())).collect()
}

pub fn near_regular_family() -> Vec<Entry> {
    let mut out = Vec::new();
    for (n, d, r) in [(8, 1, 3), (10, 1, 3), (12, 1, 4), (6, 2, 2), (7, 2, 3), (6, 3, 2)] {
        for seed in 0..3 {
            let got = near_regular(n, d, r, seed, 2000).unwrap();
            out.push(entry(format!("near_regular({n},{d},{r},seed={seed})"), got.complex));
        }
    }
    out
}

/// Everything above; complete complexes limited to n <= 9, d <= 4.
pub fn corpus() -> Vec<Entry> {
    let mut all = complete_family(9, 4);
    all.extend(random_family());
    all.extend(named_family());
    all.extend(near_regular_family());
    all
}
