//! Simplicial complexes with a complete (d-1)-skeleton.
//!
//! The metric space is the set of all `C(n, d)` ridges ((d-1)-simplices),
//! indexed by colex rank. Facets (d-simplices) are stored as a membership
//! bitset over the `C(n, d+1)` colex ranks of (d+1)-subsets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::combinatorics::{Colex, Rank, Simplex};
use crate::error::{Error, Result};

/// Largest facet space (number of possible facets) we are willing to allocate.
pub const MAX_FACET_SPACE: usize = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexWarning {
    DuplicateFacet(Simplex),
}

impl fmt::Display for ComplexWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexWarning::DuplicateFacet(s) => write!(f, "duplicate facet {s} dropped"),
        }
    }
}

#[derive(Clone)]
pub struct Complex {
    n: usize,
    d: usize,
    facet_index: Colex,
    ridge_index: Colex,
    membership: FixedBitSet,
    facets: Vec<usize>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("n", &self.n)
            .field("d", &self.d)
            .field("facets", &self.facets().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl Complex {
    /// Builds a complex, silently dropping duplicate facets.
    pub fn new(n: usize, d: usize, facets: Vec<Simplex>) -> Result<Self> {
        Self::with_warnings(n, d, facets).map(|(c, _)| c)
    }

    /// Builds a complex and reports the facets that were deduplicated.
    pub fn with_warnings(
        n: usize,
        d: usize,
        facets: Vec<Simplex>,
    ) -> Result<(Self, Vec<ComplexWarning>)> {
        let mut complex = Self::empty(n, d)?;
        let mut warnings = Vec::new();
        for facet in facets {
            if facet.len() != d + 1 {
                return Err(Error::invalid_simplex(
                    facet.vertices(),
                    format!("a facet of a {d}-complex needs {} vertices", d + 1),
                ));
            }
            let Rank(r) = complex.facet_index.rank(&facet)?;
            if complex.membership.put(r) {
                warnings.push(ComplexWarning::DuplicateFacet(facet));
            } else {
                complex.facets.push(r);
            }
        }
        complex.facets.sort_unstable();
        Ok((complex, warnings))
    }

    /// Complex with no facets: every ridge is an isolated point.
    pub fn empty(n: usize, d: usize) -> Result<Self> {
        if d < 1 || d + 1 > n {
            return Err(Error::Dimension { n, d });
        }
        let facet_index = Colex::new(n, d + 1)?;
        if facet_index.count() > MAX_FACET_SPACE {
            return Err(Error::Capacity {
                what: "facet space C(n, d+1)",
                value: facet_index.count().to_string(),
                cap: MAX_FACET_SPACE.to_string(),
            });
        }
        let ridge_index = Colex::new(n, d)?;
        let membership = FixedBitSet::with_capacity(facet_index.count());
        Ok(Complex { n, d, facet_index, ridge_index, membership, facets: Vec::new() })
    }

    /// Builds a complex from facet colex ranks. Duplicates are dropped.
    pub fn from_facet_ranks(
        n: usize,
        d: usize,
        ranks: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut complex = Self::empty(n, d)?;
        let count = complex.facet_index.count();
        for r in ranks {
            if r >= count {
                return Err(Error::Range { rank: r, count });
            }
            if !complex.membership.put(r) {
                complex.facets.push(r);
            }
        }
        complex.facets.sort_unstable();
        Ok(complex)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// N = C(n, d), the number of (d-1)-simplices.
    pub fn num_ridges(&self) -> usize {
        self.ridge_index.count()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Number of possible facets, C(n, d+1).
    pub fn facet_space(&self) -> usize {
        self.facet_index.count()
    }

    pub fn facet_ranks(&self) -> &[usize] {
        &self.facets
    }

    pub fn has_facet_rank(&self, r: usize) -> bool {
        self.membership.contains(r)
    }

    pub fn contains_facet(&self, facet: &Simplex) -> bool {
        match self.facet_index.rank(facet) {
            Ok(Rank(r)) => self.membership.contains(r),
            Err(_) => false,
        }
    }

    /// Facets in colex order.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.facets.iter().map(|&r| self.facet_index.unrank(Rank(r)).expect("stored rank"))
    }

    pub fn facet_indexer(&self) -> &Colex {
        &self.facet_index
    }

    pub fn ridge_indexer(&self) -> &Colex {
        &self.ridge_index
    }

    /// Validates a (d-1)-simplex and returns its rank.
    pub fn ridge_rank(&self, sigma: &Simplex) -> Result<Rank> {
        if sigma.len() != self.d {
            return Err(Error::invalid_simplex(
                sigma.vertices(),
                format!("expected a ({})-simplex with {} vertices", self.d - 1, self.d),
            ));
        }
        self.ridge_index.rank(sigma)
    }

    pub fn ridge(&self, rank: Rank) -> Result<Simplex> {
        self.ridge_index.unrank(rank)
    }

    /// Number of facets containing `sigma`.
    pub fn degree(&self, sigma: &Simplex) -> Result<usize> {
        let Rank(r) = self.ridge_rank(sigma)?;
        Ok(self.degree_of(r))
    }

    pub(crate) fn degree_of(&self, ridge: usize) -> usize {
        let mut count = 0;
        self.for_each_coface(ridge, |_, _| count += 1);
        count
    }

    /// Calls `f(tau, v)` for each facet `tau = sigma + {v}` containing the
    /// ridge with the given rank. `tau` is sorted.
    #[inline]
    pub(crate) fn for_each_coface(&self, ridge: usize, mut f: impl FnMut(&[usize], usize)) {
        let d = self.d;
        let mut sigma = [0usize; 32];
        let mut tau = [0usize; 33];
        if d > 32 {
            // Fallback for unusually high dimensions.
            let mut sigma = vec![0; d];
            let mut tau = vec![0; d + 1];
            self.ridge_index.unrank_into(ridge, &mut sigma);
            self.scan_cofaces(&sigma, &mut tau, &mut f);
            return;
        }
        self.ridge_index.unrank_into(ridge, &mut sigma[..d]);
        self.scan_cofaces(&sigma[..d], &mut tau[..d + 1], &mut f);
    }

    #[inline]
    fn scan_cofaces(&self, sigma: &[usize], tau: &mut [usize], f: &mut impl FnMut(&[usize], usize)) {
        let d = self.d;
        // pos = number of sigma vertices below v
        let mut pos = 0;
        for v in 1..=self.n {
            if pos < d && sigma[pos] == v {
                pos += 1;
                continue;
            }
            tau[..pos].copy_from_slice(&sigma[..pos]);
            tau[pos] = v;
            tau[pos + 1..].copy_from_slice(&sigma[pos..]);
            let r = self.facet_index.rank_sorted(tau);
            if self.membership.contains(r) {
                f(tau, v);
            }
        }
    }

    /// Ranks of the faces of the sorted (d+1)-subset `tau`, skipping the face
    /// that omits `keep`.
    #[inline]
    pub(crate) fn faces_keeping(&self, tau: &[usize], keep: usize, mut f: impl FnMut(usize)) {
        let d = self.d;
        // Removing position j: entries before j sit at 1-based position p+1,
        // entries after j at position p.
        let mut suffix = [0usize; 34];
        let mut suffix_vec;
        let suffix: &mut [usize] = if d + 2 <= suffix.len() {
            &mut suffix[..d + 2]
        } else {
            suffix_vec = vec![0; d + 2];
            &mut suffix_vec
        };
        for p in (0..=d).rev() {
            suffix[p] = suffix[p + 1] + self.ridge_index.choose(tau[p] - 1, p);
        }
        let mut prefix = 0;
        for j in 0..=d {
            if tau[j] != keep {
                f(prefix + suffix[j + 1]);
            }
            if j < d {
                prefix += self.ridge_index.choose(tau[j] - 1, j + 1);
            }
        }
    }

    /// Calls `f` with the rank of every ridge co-facial with `ridge`. Each
    /// neighbor is produced exactly once.
    #[inline]
    pub fn for_each_neighbor(&self, ridge: usize, mut f: impl FnMut(usize)) {
        self.for_each_coface(ridge, |tau, v| self.faces_keeping(tau, v, &mut f));
    }

    /// Ridges sharing a facet with `sigma`.
    pub fn facet_neighbors(&self, sigma: &Simplex) -> Result<BTreeSet<Simplex>> {
        let Rank(r) = self.ridge_rank(sigma)?;
        let mut out = BTreeSet::new();
        self.for_each_neighbor(r, |nb| {
            out.insert(self.ridge_index.unrank(Rank(nb)).expect("neighbor rank"));
        });
        Ok(out)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.num_ridges()];
        let mut tau = vec![0usize; self.d + 1];
        for &f in &self.facets {
            self.facet_index.unrank_into(f, &mut tau);
            // keep = 0 never matches a vertex, so every face is visited.
            self.faces_keeping(&tau, 0, |r| degrees[r] += 1);
        }
        DegreeProfile::from_degrees(degrees)
    }

    /// Partition of the ridges into facet-connected classes, via union-find
    /// over facets.
    pub fn connected_components(&self) -> Components {
        let n = self.num_ridges();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut tau = vec![0usize; self.d + 1];
        let mut face_ranks = Vec::with_capacity(self.d + 1);
        for &f in &self.facets {
            self.facet_index.unrank_into(f, &mut tau);
            face_ranks.clear();
            self.faces_keeping(&tau, 0, |r| face_ranks.push(r));
            let mut root = find(&mut parent, face_ranks[0]);
            for &r in &face_ranks[1..] {
                let other = find(&mut parent, r);
                if other != root {
                    let (lo, hi) = if other < root { (other, root) } else { (root, other) };
                    parent[hi] = lo;
                    root = lo;
                }
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut root_label = BTreeMap::new();
        for (r, slot) in label.iter_mut().enumerate() {
            let root = find(&mut parent, r);
            let next = members.len();
            let l = *root_label.entry(root).or_insert(next);
            if l == next {
                members.push(Vec::new());
            }
            members[l].push(r);
            *slot = l;
        }
        Components { label, members }
    }
}

/// Degrees of all (d-1)-simplices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub regular_r: Option<usize>,
}

impl DegreeProfile {
    pub fn from_degrees(degrees: Vec<usize>) -> Self {
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        let mut histogram = BTreeMap::new();
        for &g in &degrees {
            *histogram.entry(g).or_insert(0) += 1;
        }
        let regular_r = (min == max).then_some(min);
        DegreeProfile { degrees, min, max, histogram, regular_r }
    }

    /// Sum over ridges of |degree - r|.
    pub fn deviation_from(&self, r: usize) -> usize {
        self.degrees.iter().map(|&g| g.abs_diff(r)).sum()
    }
}

/// Connected components; `members[label[r]]` contains ridge rank `r`.
/// Components are numbered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub label: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.members.len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::colex_unrank;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn complete(n: usize, d: usize) -> Complex {
        let count = Colex::new(n, d + 1).unwrap().count();
        Complex::from_facet_ranks(n, d, 0..count).unwrap()
    }

    fn single() -> Complex {
        Complex::new(4, 2, vec![s(&[1, 2, 3])]).unwrap()
    }

    #[test]
    fn construction_examples() {
        let x = single();
        assert_eq!(x.num_facets(), 1);
        assert_eq!(x.num_ridges(), 6);

        let all: Vec<Simplex> =
            (0..10).map(|r| colex_unrank(Rank(r), 2, 5).unwrap()).collect();
        let x = Complex::new(5, 2, all).unwrap();
        assert_eq!(x.num_facets(), 10);
        assert_eq!(x.num_ridges(), 10);

        assert_eq!(Complex::new(3, 3, vec![]), Err(Error::Dimension { n: 3, d: 3 }));
        assert!(matches!(Complex::new(4, 0, vec![]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn construction_rejects_bad_facets() {
        assert!(matches!(
            Complex::new(4, 2, vec![s(&[1, 2, 5])]),
            Err(Error::InvalidSimplex { .. })
        ));
        assert!(matches!(
            Complex::new(4, 2, vec![s(&[1, 2])]),
            Err(Error::InvalidSimplex { .. })
        ));
    }

    #[test]
    fn duplicate_facets_warn() {
        let (x, warnings) =
            Complex::with_warnings(4, 2, vec![s(&[1, 2, 3]), s(&[3, 2, 1])]).unwrap();
        assert_eq!(x.num_facets(), 1);
        assert_eq!(warnings, vec![ComplexWarning::DuplicateFacet(s(&[1, 2, 3]))]);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(complete(5, 2).degree(&s(&[1, 2])).unwrap(), 3);
        assert_eq!(Complex::empty(5, 2).unwrap().degree(&s(&[4, 5])).unwrap(), 0);
        assert_eq!(single().degree(&s(&[1, 4])).unwrap(), 0);
        assert!(single().degree(&s(&[1, 2, 3])).is_err());
        assert!(single().degree(&s(&[1, 9])).is_err());
    }

    #[test]
    fn degree_profile_examples() {
        let p = complete(5, 2).degree_profile();
        assert_eq!((p.regular_r, p.min), (Some(3), 3));

        let p = single().degree_profile();
        // ranks: 12, 13, 23, 14, 24, 34
        assert_eq!(p.degrees, vec![1, 1, 1, 0, 0, 0]);
        assert_eq!(p.min, 0);
        assert_eq!(p.regular_r, None);

        let p = Complex::empty(4, 2).unwrap().degree_profile();
        assert_eq!(p.degrees, vec![0; 6]);
        assert_eq!(p.regular_r, Some(0));
    }

    #[test]
    fn neighbor_examples() {
        let nb = complete(4, 2).facet_neighbors(&s(&[1, 2])).unwrap();
        let expected: BTreeSet<_> =
            [s(&[1, 3]), s(&[2, 3]), s(&[1, 4]), s(&[2, 4])].into_iter().collect();
        assert_eq!(nb, expected);

        let nb = single().facet_neighbors(&s(&[1, 2])).unwrap();
        assert_eq!(nb, [s(&[1, 3]), s(&[2, 3])].into_iter().collect());

        assert!(single().facet_neighbors(&s(&[3, 4])).unwrap().is_empty());
    }

    #[test]
    fn component_examples() {
        let c = complete(5, 2).connected_components();
        assert_eq!(c.sizes(), vec![10]);

        let c = single().connected_components();
        assert_eq!(c.members, vec![vec![0, 1, 2], vec![3], vec![4], vec![5]]);

        let c = Complex::empty(4, 2).unwrap().connected_components();
        assert_eq!(c.count(), 6);
    }

    #[test]
    fn complete_complex_is_johnson_graph() {
        for n in 2..=8 {
            for d in 1..=3.min(n - 1) {
                let x = complete(n, d);
                for a in 0..x.num_ridges() {
                    let sa = x.ridge(Rank(a)).unwrap();
                    let mut adjacent = BTreeSet::new();
                    x.for_each_neighbor(a, |b| {
                        adjacent.insert(b);
                    });
                    for b in 0..x.num_ridges() {
                        let sb = x.ridge(Rank(b)).unwrap();
                        let johnson = a != b && sa.intersection_size(&sb) == d - 1;
                        assert_eq!(adjacent.contains(&b), johnson, "n={n} d={d} {sa} {sb}");
                    }
                }
            }
        }
    }
}
