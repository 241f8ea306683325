//! Subset combinatorics: exact binomials, canonical simplices, colex ranking.
//!
//! Vertices are 1-based. The colex rank of a sorted subset `s_1 < ... < s_m`
//! is `sum_i C(s_i - 1, i)`, which does not depend on the ambient `n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact binomial coefficient. Returns 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient as a machine word, or a capacity error if it does not fit.
pub fn binomial_usize(n: usize, k: usize) -> Result<usize> {
    let value = binomial(n as u64, k as u64);
    value.to_usize().ok_or_else(|| Error::Capacity {
        what: "binomial coefficient",
        value: value.to_string(),
        cap: usize::MAX.to_string(),
    })
}

/// A k-simplex: a strictly increasing, non-empty list of 1-based vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Rejects empty input,
    /// vertex 0 and repeated vertices.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid_simplex(&vertices, "empty vertex list"));
        }
        vertices.sort_unstable();
        if vertices[0] == 0 {
            return Err(Error::invalid_simplex(&vertices, "vertices are 1-based"));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid_simplex(&vertices, "repeated vertex"));
        }
        Ok(Simplex(vertices))
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Checks every vertex lies in `1..=n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&max) if max > n => Err(Error::invalid_simplex(
                &self.0,
                format!("vertex {max} outside 1..={n}"),
            )),
            _ => Ok(()),
        }
    }

    pub fn intersection_size(&self, other: &Simplex) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Parses a comma-separated vertex list such as `"3,1,2"`.
    pub fn parse_list(text: &str) -> Result<Self> {
        let vertices = text
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parameter(format!("bad vertex {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(vertices)
    }
}

impl TryFrom<Vec<usize>> for Simplex {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Colex index of a subset, relative to a fixed subset size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rank(pub usize);

/// Precomputed binomials for ranking `size`-subsets of `1..=n` in machine words.
#[derive(Debug, Clone)]
pub struct Colex {
    n: usize,
    size: usize,
    count: usize,
    // table[m * (size + 1) + j] = C(m, j), saturating; exact for every entry
    // that can appear in a valid rank.
    table: Vec<usize>,
}

impl Colex {
    pub fn new(n: usize, size: usize) -> Result<Self> {
        let count = binomial_usize(n, size)?;
        let width = size + 1;
        let mut table = vec![0usize; (n + 1) * width];
        for m in 0..=n {
            table[m * width] = 1;
            for j in 1..=size.min(m) {
                let above = table[(m - 1) * width + j];
                let diag = table[(m - 1) * width + j - 1];
                table[m * width + j] = above.saturating_add(diag);
            }
        }
        Ok(Colex { n, size, count, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of `size`-subsets of `1..=n`.
    pub fn count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn choose(&self, m: usize, j: usize) -> usize {
        if j > m {
            0
        } else {
            self.table[m * (self.size + 1) + j]
        }
    }

    /// Rank of a sorted, in-range vertex slice of length `size`. No validation.
    #[inline]
    pub fn rank_sorted(&self, vertices: &[usize]) -> usize {
        debug_assert_eq!(vertices.len(), self.size);
        vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| self.choose(v - 1, i + 1))
            .sum()
    }

    pub fn rank(&self, s: &Simplex) -> Result<Rank> {
        if s.len() != self.size {
            return Err(Error::invalid_simplex(
                s.vertices(),
                format!("expected {} vertices, got {}", self.size, s.len()),
            ));
        }
        s.check_within(self.n)?;
        Ok(Rank(self.rank_sorted(s.vertices())))
    }

    /// Writes the subset with the given rank into `out` (length `size`), ascending.
    pub fn unrank_into(&self, mut rank: usize, out: &mut [usize]) {
        debug_assert!(rank < self.count);
        let mut hi = self.n;
        for i in (1..=self.size).rev() {
            // Largest m < hi with C(m, i) <= rank.
            let mut m = hi - 1;
            while self.choose(m, i) > rank {
                m -= 1;
            }
            out[i - 1] = m + 1;
            rank -= self.choose(m, i);
            hi = m;
        }
    }

    pub fn unrank(&self, rank: Rank) -> Result<Simplex> {
        if rank.0 >= self.count {
            return Err(Error::Range { rank: rank.0, count: self.count });
        }
        let mut out = vec![0; self.size];
        self.unrank_into(rank.0, &mut out);
        Ok(Simplex::from_sorted_unchecked(out))
    }
}

/// Colex rank of `s` among subsets of its size over `1..=n`.
pub fn colex_rank(s: &Simplex, n: usize) -> Result<Rank> {
    Colex::new(n, s.len())?.rank(s)
}

/// The `k`-simplex over `1..=n` with the given colex rank.
pub fn colex_unrank(rank: Rank, k: usize, n: usize) -> Result<Simplex> {
    Colex::new(n, k + 1)?.unrank(rank)
}

/// Codimension-one faces, in lexicographic order. A vertex has none.
pub fn faces(s: &Simplex) -> Vec<Simplex> {
    if s.len() < 2 {
        return Vec::new();
    }
    (0..s.len())
        .rev()
        .map(|skip| {
            let v = s
                .vertices()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            Simplex::from_sorted_unchecked(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    /// All `size`-subsets of 1..=n in colex order, by sorting on the reversed tuple.
    fn colex_enumeration(n: usize, size: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for v in start..=n {
                cur.push(v);
                rec(v + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, size, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        out
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(4, 0), BigUint::from(1u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(3, 5), BigUint::default());
    }

    #[test]
    fn binomial_is_exact_beyond_u64() {
        // C(100, 50) = 100891344545564193334812497256
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
        assert!(binomial_usize(100, 50).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(colex_rank(&s(&[1, 2]), 4).unwrap(), Rank(0));
        assert_eq!(colex_rank(&s(&[2, 3]), 4).unwrap(), Rank(2));
        assert_eq!(colex_rank(&s(&[1, 2, 3]), 4).unwrap(), Rank(0));
        let order = colex_enumeration(4, 2);
        assert_eq!(order[2], vec![2, 3]);
        assert_eq!(order[3], vec![1, 4]);
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(colex_unrank(Rank(0), 1, 4).unwrap(), s(&[1, 2]));
        assert_eq!(colex_unrank(Rank(2), 1, 4).unwrap(), s(&[2, 3]));
        assert_eq!(colex_unrank(Rank(3), 1, 4).unwrap(), s(&[1, 4]));
    }

    #[test]
    fn rank_rejects_out_of_range_vertex() {
        assert!(matches!(colex_rank(&s(&[1, 5]), 4), Err(Error::InvalidSimplex { .. })));
    }

    #[test]
    fn unrank_rejects_large_rank() {
        assert!(matches!(colex_unrank(Rank(6), 1, 4), Err(Error::Range { rank: 6, count: 6 })));
    }

    #[test]
    fn simplex_validation() {
        assert!(Simplex::new(vec![]).is_err());
        assert!(Simplex::new(vec![0, 1]).is_err());
        assert!(Simplex::new(vec![2, 2]).is_err());
        assert_eq!(Simplex::new(vec![3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
        assert_eq!(Simplex::parse_list(" 4, 2 ").unwrap(), s(&[2, 4]));
    }

    #[test]
    fn face_examples() {
        assert_eq!(faces(&s(&[1, 2, 3])), vec![s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]);
        assert_eq!(faces(&s(&[1, 2])), vec![s(&[1]), s(&[2])]);
        assert_eq!(faces(&s(&[4, 7])), vec![s(&[4]), s(&[7])]);
        assert!(faces(&s(&[3])).is_empty());
    }

    #[test]
    fn roundtrip_exhaustive() {
        for n in 1..=12 {
            for k in 0..=4usize {
                if k + 1 > n {
                    continue;
                }
                let colex = Colex::new(n, k + 1).unwrap();
                for r in 0..colex.count() {
                    let simplex = colex.unrank(Rank(r)).unwrap();
                    assert_eq!(colex.rank(&simplex).unwrap(), Rank(r));
                }
            }
        }
    }

    #[test]
    fn rank_order_matches_colex_enumeration() {
        for n in 1..=10 {
            for size in 1..=n {
                let colex = Colex::new(n, size).unwrap();
                for (i, subset) in colex_enumeration(n, size).iter().enumerate() {
                    assert_eq!(colex.rank_sorted(subset), i, "n={n} subset={subset:?}");
                }
            }
        }
    }

    #[test]
    fn faces_are_distinct_and_valid() {
        for r in 0..binomial_usize(8, 4).unwrap() {
            let simplex = colex_unrank(Rank(r), 3, 8).unwrap();
            let fs = faces(&simplex);
            assert_eq!(fs.len(), simplex.dim() + 1);
            let mut dedup = fs.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), fs.len());
            for f in &fs {
                assert_eq!(f.dim() + 1, simplex.dim());
                assert!(f.vertices().iter().all(|v| simplex.contains(*v)));
            }
        }
    }
}
