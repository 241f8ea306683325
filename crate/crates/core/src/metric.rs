//! Facet-path metric on (d-1)-simplices.
//!
//! Two ridges are adjacent when some facet contains both. Single-source
//! distances come from breadth-first layering with neighbors generated on the
//! fly from facet membership. [`all_pairs_oracle`] computes the same metric
//! through an explicit adjacency matrix and Floyd-Warshall relaxation, for
//! cross-checking.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{faces, Rank, Simplex};
use crate::complex::Complex;
use crate::error::{Error, Result};

/// Sentinel for "no path".
pub const UNREACHABLE: u32 = u32::MAX;

/// Default largest N accepted by [`all_pairs_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    pub source: Rank,
    dist: Vec<u32>,
}

impl DistanceMap {
    pub fn get(&self, target: Rank) -> Option<u32> {
        match self.dist[target.0] {
            UNREACHABLE => None,
            v => Some(v),
        }
    }

    /// Raw distances by rank; [`UNREACHABLE`] marks missing paths.
    pub fn raw(&self) -> &[u32] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Largest finite distance (eccentricity within the source's component).
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().copied().filter(|&v| v != UNREACHABLE).max().unwrap_or(0)
    }

    /// Eccentricity, or `None` if some ridge is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        if self.dist.contains(&UNREACHABLE) {
            None
        } else {
            Some(self.max_finite())
        }
    }

    /// Number of ridges at each exact distance 0, 1, ..., max_finite.
    pub fn layers(&self) -> Vec<usize> {
        let mut layers = vec![0usize; self.max_finite() as usize + 1];
        for &v in &self.dist {
            if v != UNREACHABLE {
                layers[v as usize] += 1;
            }
        }
        layers
    }
}

/// BFS distances from the ridge with rank `source`.
pub fn bfs_from_rank(x: &Complex, source: usize) -> DistanceMap {
    let mut dist = vec![UNREACHABLE; x.num_ridges()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        x.for_each_neighbor(u, |w| {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        });
    }
    DistanceMap { source: Rank(source), dist }
}

pub fn bfs_distances(x: &Complex, source: &Simplex) -> Result<DistanceMap> {
    let Rank(r) = x.ridge_rank(source)?;
    Ok(bfs_from_rank(x, r))
}

/// Distance between two ridges, `None` when unreachable.
pub fn distance(x: &Complex, from: &Simplex, to: &Simplex) -> Result<Option<u32>> {
    let target = x.ridge_rank(to)?;
    Ok(bfs_distances(x, from)?.get(target))
}

pub fn eccentricity(x: &Complex, sigma: &Simplex) -> Result<Option<u32>> {
    Ok(bfs_distances(x, sigma)?.eccentricity())
}

pub fn ball_growth(x: &Complex, sigma: &Simplex) -> Result<Vec<usize>> {
    Ok(bfs_distances(x, sigma)?.layers())
}

/// Diameter, or `None` when the facet-adjacency graph is disconnected.
pub fn diameter(x: &Complex) -> Option<u32> {
    MetricReport::compute(x).diameter
}

/// Eccentricities and ball growth for every source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricReport {
    pub num_ridges: usize,
    /// `None` where some ridge is unreachable from the source.
    pub eccentricities: Vec<Option<u32>>,
    /// Eccentricity of each source within its own component.
    pub component_eccentricities: Vec<u32>,
    pub diameter: Option<u32>,
    /// Layer counts by exact distance, one list per source rank.
    pub layer_profiles: Vec<Vec<usize>>,
}

impl MetricReport {
    /// Runs one BFS per source in parallel. Output order is by source rank.
    pub fn compute(x: &Complex) -> Self {
        let per_source: Vec<(Option<u32>, u32, Vec<usize>)> = (0..x.num_ridges())
            .into_par_iter()
            .map(|r| {
                let map = bfs_from_rank(x, r);
                (map.eccentricity(), map.max_finite(), map.layers())
            })
            .collect();
        let mut eccentricities = Vec::with_capacity(per_source.len());
        let mut component_eccentricities = Vec::with_capacity(per_source.len());
        let mut layer_profiles = Vec::with_capacity(per_source.len());
        for (ecc, local, layers) in per_source {
            eccentricities.push(ecc);
            component_eccentricities.push(local);
            layer_profiles.push(layers);
        }
        let diameter = eccentricities
            .iter()
            .copied()
            .collect::<Option<Vec<u32>>>()
            .and_then(|all| all.into_iter().max());
        MetricReport {
            num_ridges: x.num_ridges(),
            eccentricities,
            component_eccentricities,
            diameter,
            layer_profiles,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.diameter.is_some()
    }

    /// Largest eccentricity inside each component, indexed like `members`.
    pub fn component_diameters(&self, members: &[Vec<usize>]) -> Vec<u32> {
        members
            .iter()
            .map(|m| m.iter().map(|&r| self.component_eccentricities[r]).max().unwrap_or(0))
            .collect()
    }

    pub fn min_eccentricity(&self) -> Option<u32> {
        self.eccentricities.iter().copied().collect::<Option<Vec<_>>>()?.into_iter().min()
    }
}

/// Dense all-pairs distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    size: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize) -> Option<u32> {
        match self.dist[a * self.size + b] {
            UNREACHABLE => None,
            v => Some(v),
        }
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.dist[a * self.size..(a + 1) * self.size]
    }
}

/// All-pairs distances via an explicit adjacency matrix and Floyd-Warshall.
pub fn all_pairs_oracle(x: &Complex, cap: usize) -> Result<DistanceMatrix> {
    let size = x.num_ridges();
    if size > cap {
        return Err(Error::Capacity {
            what: "oracle metric elements N",
            value: size.to_string(),
            cap: cap.to_string(),
        });
    }
    let mut dist = vec![UNREACHABLE; size * size];
    for i in 0..size {
        dist[i * size + i] = 0;
    }
    for facet in x.facets() {
        let ranks: Vec<usize> = faces(&facet)
            .iter()
            .map(|f| x.ridge_rank(f).map(|r| r.0))
            .collect::<Result<_>>()?;
        for &a in &ranks {
            for &b in &ranks {
                if a != b {
                    dist[a * size + b] = 1;
                }
            }
        }
    }
    for k in 0..size {
        for i in 0..size {
            let ik = dist[i * size + k];
            if ik == UNREACHABLE {
                continue;
            }
            for j in 0..size {
                let kj = dist[k * size + j];
                if kj != UNREACHABLE && ik + kj < dist[i * size + j] {
                    dist[i * size + j] = ik + kj;
                }
            }
        }
    }
    Ok(DistanceMatrix { size, dist })
}
