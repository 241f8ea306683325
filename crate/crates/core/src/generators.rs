//! Test and experiment complexes.
//!
//! Randomness comes from ChaCha8 seeded with a `u64` (`rand_chacha`), so a
//! given [`GenSpec`] always produces the same facet set.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Colex, Simplex};
use crate::complex::{Complex, DegreeProfile};
use crate::error::{Error, Result};

/// Every facet over `1..=n`.
pub fn complete(n: usize, d: usize) -> Result<Complex> {
    let empty = Complex::empty(n, d)?;
    Complex::from_facet_ranks(n, d, 0..empty.facet_space())
}

/// Each possible facet independently with probability `p`, visited in colex order.
pub fn random_uniform(n: usize, d: usize, p: f64, seed: u64) -> Result<Complex> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("probability {p} outside [0, 1]")));
    }
    let space = Complex::empty(n, d)?.facet_space();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<usize> = (0..space).filter(|_| rng.gen_bool(p)).collect();
    Complex::from_facet_ranks(n, d, chosen)
}

/// A simple graph as a 1-dimensional complex: edges are facets and vertices
/// are the metric elements.
pub fn graph_import(edges: &[(usize, usize)], n: usize) -> Result<Complex> {
    let facets = edges
        .iter()
        .map(|&(a, b)| {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidEdge(a, b, n));
            }
            Simplex::new(vec![a, b])
        })
        .collect::<Result<Vec<_>>>()?;
    Complex::new(n, 1, facets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", content = "m", rename_all = "snake_case")]
pub enum NamedGraph {
    Cycle(usize),
    /// Two m-cycles joined by rungs (the prism graph).
    CircularLadder(usize),
    Petersen,
    CompleteGraph(usize),
}

impl NamedGraph {
    pub fn vertex_count(&self) -> usize {
        match *self {
            NamedGraph::Cycle(m) | NamedGraph::CompleteGraph(m) => m,
            NamedGraph::CircularLadder(m) => 2 * m,
            NamedGraph::Petersen => 10,
        }
    }

    pub fn edges(&self) -> Result<Vec<(usize, usize)>> {
        let ring = |m: usize, offset: usize| (1..=m).map(move |i| (offset + i, offset + i % m + 1));
        match *self {
            NamedGraph::Cycle(m) => {
                if m < 3 {
                    return Err(Error::Parameter(format!("cycle needs m >= 3, got {m}")));
                }
                Ok(ring(m, 0).collect())
            }
            NamedGraph::CircularLadder(m) => {
                if m < 3 {
                    return Err(Error::Parameter(format!("circular ladder needs m >= 3, got {m}")));
                }
                Ok(ring(m, 0).chain(ring(m, m)).chain((1..=m).map(|i| (i, m + i))).collect())
            }
            NamedGraph::Petersen => Ok(ring(5, 0)
                .chain((1..=5).map(|i| (i, i + 5)))
                .chain([(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)])
                .collect()),
            NamedGraph::CompleteGraph(m) => {
                if m < 2 {
                    return Err(Error::Parameter(format!("complete graph needs m >= 2, got {m}")));
                }
                Ok((1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).collect())
            }
        }
    }

    pub fn build(&self) -> Result<Complex> {
        graph_import(&self.edges()?, self.vertex_count())
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Cycle(m) => write!(f, "cycle({m})"),
            NamedGraph::CircularLadder(m) => write!(f, "circular_ladder({m})"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::CompleteGraph(m) => write!(f, "complete_graph({m})"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `petersen`, `cycle(6)`, `circular_ladder(16)`, `complete_graph(4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parameter(format!("unbalanced graph name {s:?}")))?;
                let m = inner
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parameter(format!("bad size in {s:?}: {e}")))?;
                (name.trim(), Some(m))
            }
            None => (s, None),
        };
        let need = |arg: Option<usize>| {
            arg.ok_or_else(|| Error::Parameter(format!("graph {name:?} needs a size, e.g. {name}(6)")))
        };
        match name {
            "cycle" => Ok(NamedGraph::Cycle(need(arg)?)),
            "circular_ladder" | "prism" => Ok(NamedGraph::CircularLadder(need(arg)?)),
            "complete_graph" => Ok(NamedGraph::CompleteGraph(need(arg)?)),
            "petersen" if arg.is_none() => Ok(NamedGraph::Petersen),
            _ => Err(Error::Parameter(format!("unknown graph {s:?}"))),
        }
    }
}

/// Result of [`near_regular`].
#[derive(Debug, Clone)]
pub struct NearRegular {
    pub complex: Complex,
    pub profile: DegreeProfile,
    pub iterations: usize,
    pub accepted_swaps: usize,
    /// Sum of |degree - r| initially and after every accepted swap.
    pub deviation_trace: Vec<usize>,
}

/// Best-effort r-regular complex by greedy facet swaps from a random start
/// with `ceil(r * C(n, d) / (d + 1))` facets. The result may be irregular;
/// inspect `profile.regular_r`.
pub fn near_regular(n: usize, d: usize, r: usize, seed: u64, max_iters: usize) -> Result<NearRegular> {
    if r < 1 {
        return Err(Error::Parameter("target degree r must be at least 1".into()));
    }
    let base = Complex::empty(n, d)?;
    let space = base.facet_space();
    let ridges = base.num_ridges();
    let target = (r * ridges).div_ceil(d + 1).min(space);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = SwapState::new(n, d, r, ridges, space)?;
    for f in index::sample(&mut rng, space, target) {
        state.insert(f);
    }

    let mut deviation = state.deviation();
    let mut trace = vec![deviation];
    let mut iterations = 0;
    let mut accepted = 0;
    while iterations < max_iters && deviation > 0 {
        iterations += 1;
        let Some((out_facet, in_facet)) = state.propose(&mut rng) else {
            break;
        };
        state.remove(out_facet);
        state.insert(in_facet);
        let next = state.deviation();
        if next <= deviation {
            deviation = next;
            accepted += 1;
            trace.push(deviation);
        } else {
            state.remove(in_facet);
            state.insert(out_facet);
        }
    }

    let complex = Complex::from_facet_ranks(n, d, state.present.iter().copied())?;
    let profile = complex.degree_profile();
    debug_assert_eq!(profile.deviation_from(r), deviation);
    Ok(NearRegular { complex, profile, iterations, accepted_swaps: accepted, deviation_trace: trace })
}

struct SwapState {
    n: usize,
    r: usize,
    facet_index: Colex,
    ridge_index: Colex,
    degrees: Vec<usize>,
    member: Vec<bool>,
    present: Vec<usize>,
    slot: Vec<usize>,
    deviation: usize,
}

impl SwapState {
    fn new(n: usize, d: usize, r: usize, ridges: usize, space: usize) -> Result<Self> {
        Ok(SwapState {
            n,
            r,
            facet_index: Colex::new(n, d + 1)?,
            ridge_index: Colex::new(n, d)?,
            degrees: vec![0; ridges],
            member: vec![false; space],
            present: Vec::new(),
            slot: vec![usize::MAX; space],
            deviation: r * ridges,
        })
    }

    fn deviation(&self) -> usize {
        self.deviation
    }

    fn face_ranks(&self, facet: usize) -> Vec<usize> {
        let mut tau = vec![0; self.facet_index.size()];
        self.facet_index.unrank_into(facet, &mut tau);
        (0..tau.len())
            .map(|skip| {
                let face: Vec<usize> =
                    tau.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                self.ridge_index.rank_sorted(&face)
            })
            .collect()
    }

    fn bump(&mut self, ridge: usize, up: bool) {
        let before = self.degrees[ridge].abs_diff(self.r);
        if up {
            self.degrees[ridge] += 1;
        } else {
            self.degrees[ridge] -= 1;
        }
        let after = self.degrees[ridge].abs_diff(self.r);
        self.deviation = self.deviation + after - before;
    }

    fn insert(&mut self, facet: usize) {
        debug_assert!(!self.member[facet]);
        self.member[facet] = true;
        self.slot[facet] = self.present.len();
        self.present.push(facet);
        for f in self.face_ranks(facet) {
            self.bump(f, true);
        }
    }

    fn remove(&mut self, facet: usize) {
        debug_assert!(self.member[facet]);
        self.member[facet] = false;
        let at = self.slot[facet];
        self.present.swap_remove(at);
        if at < self.present.len() {
            self.slot[self.present[at]] = at;
        }
        self.slot[facet] = usize::MAX;
        for f in self.face_ranks(facet) {
            self.bump(f, false);
        }
    }

    /// Facets `ridge + {v}`, split into (present, absent).
    fn cofaces(&self, ridge: usize) -> (Vec<usize>, Vec<usize>) {
        let mut sigma = vec![0; self.ridge_index.size()];
        self.ridge_index.unrank_into(ridge, &mut sigma);
        let (mut present, mut absent) = (Vec::new(), Vec::new());
        for v in 1..=self.n {
            if sigma.binary_search(&v).is_ok() {
                continue;
            }
            let mut tau = sigma.clone();
            let at = tau.partition_point(|&u| u < v);
            tau.insert(at, v);
            let f = self.facet_index.rank_sorted(&tau);
            if self.member[f] {
                present.push(f);
            } else {
                absent.push(f);
            }
        }
        (present, absent)
    }

    /// Change in deviation from toggling `facet` alone.
    fn toggle_delta(&self, facet: usize, adding: bool) -> isize {
        self.face_ranks(facet)
            .into_iter()
            .map(|f| {
                let g = self.degrees[f];
                let next = if adding { g + 1 } else { g - 1 };
                next.abs_diff(self.r) as isize - g.abs_diff(self.r) as isize
            })
            .sum()
    }

    fn pick_best(&self, candidates: &[usize], adding: bool, rng: &mut ChaCha8Rng) -> Option<usize> {
        let best = candidates.iter().map(|&f| self.toggle_delta(f, adding)).min()?;
        let ties: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&f| self.toggle_delta(f, adding) == best)
            .collect();
        Some(ties[rng.gen_range(0..ties.len())])
    }

    /// One facet to drop (touching an over-degree ridge when there is one) and
    /// one to add (touching an under-degree ridge when there is one).
    fn propose(&self, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
        if self.present.is_empty() || self.present.len() == self.member.len() {
            return None;
        }
        let over: Vec<usize> = (0..self.degrees.len()).filter(|&i| self.degrees[i] > self.r).collect();
        let under: Vec<usize> = (0..self.degrees.len()).filter(|&i| self.degrees[i] < self.r).collect();

        let out_facet = if over.is_empty() {
            self.present[rng.gen_range(0..self.present.len())]
        } else {
            let ridge = over[rng.gen_range(0..over.len())];
            self.pick_best(&self.cofaces(ridge).0, false, rng)?
        };
        let in_facet = if under.is_empty() {
            let absent: Vec<usize> = (0..self.member.len()).filter(|&f| !self.member[f]).collect();
            absent[rng.gen_range(0..absent.len())]
        } else {
            let ridge = under[rng.gen_range(0..under.len())];
            self.pick_best(&self.cofaces(ridge).1, true, rng)?
        };
        Some((out_facet, in_facet))
    }
}

/// Parameters that fully determine a generated complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenSpec {
    Complete { n: usize, d: usize },
    RandomUniform { n: usize, d: usize, p: f64, seed: u64 },
    GraphImport { n: usize, edges: Vec<(usize, usize)> },
    Named { graph: NamedGraph },
    NearRegular { n: usize, d: usize, r: usize, seed: u64, max_iters: usize },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Complex> {
        match self {
            GenSpec::Complete { n, d } => complete(*n, *d),
            GenSpec::RandomUniform { n, d, p, seed } => random_uniform(*n, *d, *p, *seed),
            GenSpec::GraphImport { n, edges } => graph_import(edges, *n),
            GenSpec::Named { graph } => graph.build(),
            GenSpec::NearRegular { n, d, r, seed, max_iters } => {
                Ok(near_regular(*n, *d, *r, *seed, *max_iters)?.complex)
            }
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            GenSpec::RandomUniform { seed, .. } | GenSpec::NearRegular { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}
