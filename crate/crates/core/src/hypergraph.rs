//! Labelled 3-uniform hypergraphs and ordinary 2-graphs.
//!
//! Vertices are dense 0-based integers. Triples are stored twice: as a
//! lexicographically sorted list (the canonical order for text output) and as
//! a bitset indexed by the colexicographic triple rank, so membership tests
//! cost one bit probe. Both types are immutable after construction and cheap
//! to share between threads.

use serde::{Deserialize, Serialize};

use crate::bitset::BitVec;
use crate::error::{Error, Result};

pub type Triple = [usize; 3];
pub type Pair = [usize; 2];

/// Colexicographic rank of the pair {a, b} with a < b.
#[inline]
pub fn pair_rank(a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    b * (b - 1) / 2 + a
}

/// Colexicographic rank of the triple {a, b, c} with a < b < c.
#[inline]
pub fn triple_rank(a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < c);
    c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a
}

pub fn pair_count(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    n * (n - 1) / 2
}

pub fn triple_count(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    n * (n - 1) * (n - 2) / 6
}

/// All pairs over {0..n-1} in colex order (rank order).
pub fn all_pairs(n: usize) -> impl Iterator<Item = Pair> {
    (1..n).flat_map(move |b| (0..b).map(move |a| [a, b]))
}

/// All triples over {0..n-1} in colex order (rank order).
pub fn all_triples(n: usize) -> impl Iterator<Item = Triple> {
    (2..n).flat_map(move |c| (1..c).flat_map(move |b| (0..b).map(move |a| [a, b, c])))
}

fn normalize_triple(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

/// A 3-uniform hypergraph on vertices 0..n-1.
#[derive(Clone, PartialEq, Eq)]
pub struct TriSystem {
    n: usize,
    triples: Vec<Triple>,
    bits: BitVec,
}

impl std::fmt::Debug for TriSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TriSystem(n={}, m={})", self.n, self.triples.len())
    }
}

impl TriSystem {
    /// Builds a system from an arbitrary collection of triples. Vertex order
    /// inside a triple does not matter; repeated vertices, out-of-range
    /// vertices and duplicate triples are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut triples: Vec<Triple> = Vec::new();
        for raw in edges {
            let t = normalize_triple(raw);
            if t[0] == t[1] || t[1] == t[2] || t[2] >= n {
                return Err(Error::InvalidTriple(raw, n));
            }
            triples.push(t);
        }
        triples.sort_unstable();
        if let Some(w) = triples.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateTriple(w[0]));
        }
        let mut bits = BitVec::zeros(triple_count(n));
        for t in &triples {
            bits.set(triple_rank(t[0], t[1], t[2]));
        }
        Ok(TriSystem { n, triples, bits })
    }

    pub fn empty(n: usize) -> Self {
        TriSystem {
            n,
            triples: Vec::new(),
            bits: BitVec::zeros(triple_count(n)),
        }
    }

    /// The complete 3-graph on n vertices (edgeless for n < 3).
    pub fn complete(n: usize) -> Self {
        TriSystem::new(n, all_triples(n)).expect("complete systems are always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.triples.len()
    }

    /// Edges in lexicographic order, each sorted ascending.
    pub fn edges(&self) -> &[Triple] {
        &self.triples
    }

    /// Membership test; tolerant of unsorted input, false for malformed triples.
    pub fn has_edge(&self, t: Triple) -> bool {
        let t = normalize_triple(t);
        if t[0] == t[1] || t[1] == t[2] || t[2] >= self.n {
            return false;
        }
        self.bits.get(triple_rank(t[0], t[1], t[2]))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        Ok(())
    }

    /// Number of edges containing both x and y.
    pub fn codegree(&self, x: usize, y: usize) -> Result<usize> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::invalid("codegree requires two distinct vertices"));
        }
        let (a, b) = (x.min(y), x.max(y));
        let mut count = 0;
        for z in 0..self.n {
            if z == a || z == b {
                continue;
            }
            let t = normalize_triple([a, b, z]);
            if self.bits.get(triple_rank(t[0], t[1], t[2])) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Codegree of every pair, indexed by `pair_rank`.
    pub fn codegree_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; pair_count(self.n)];
        for t in &self.triples {
            counts[pair_rank(t[0], t[1])] += 1;
            counts[pair_rank(t[0], t[2])] += 1;
            counts[pair_rank(t[1], t[2])] += 1;
        }
        counts
    }

    pub fn min_codegree(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(Error::invalid(
                "minimum codegree needs at least two vertices",
            ));
        }
        Ok(self
            .codegree_counts()
            .into_iter()
            .min()
            .expect("n >= 2 gives at least one pair"))
    }

    /// Number of edges containing the vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.triples.iter().filter(|t| t.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for t in &self.triples {
            for &v in t {
                deg[v] += 1;
            }
        }
        deg
    }

    /// The link of x: pairs {v, v'} with {x, v, v'} an edge, relabelled onto
    /// 0..n-2 preserving vertex order.
    pub fn link_graph(&self, x: usize) -> Result<PairGraph> {
        self.check_vertex(x)?;
        let relabel = |v: usize| if v < x { v } else { v - 1 };
        let mut pairs = Vec::new();
        for t in &self.triples {
            if t.contains(&x) {
                let rest: Vec<usize> = t.iter().copied().filter(|&v| v != x).collect();
                pairs.push([relabel(rest[0]), relabel(rest[1])]);
            }
        }
        PairGraph::new(self.n - 1, pairs)
    }

    /// Vertices z with {x, y, z} an edge, ascending.
    pub fn joint_neighbourhood(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::invalid(
                "joint neighbourhood requires two distinct vertices",
            ));
        }
        Ok((0..self.n)
            .filter(|&z| z != x && z != y && self.has_edge([x, y, z]))
            .collect())
    }

    /// Induced sub-3-graph on the given vertex set, relabelled onto
    /// 0..k-1 preserving order.
    pub fn induced(&self, vertices: &[usize]) -> Result<TriSystem> {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != vertices.len() {
            return Err(Error::invalid("induced vertex set has repeats"));
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        let index_of = |v: usize| verts.binary_search(&v).ok();
        let mut edges = Vec::new();
        for t in &self.triples {
            if let (Some(a), Some(b), Some(c)) = (index_of(t[0]), index_of(t[1]), index_of(t[2])) {
                edges.push([a, b, c]);
            }
        }
        TriSystem::new(verts.len(), edges)
    }

    /// One bitset per pair rank holding the third vertices completing an edge.
    pub(crate) fn pair_rows(&self) -> Vec<BitVec> {
        let mut rows = vec![BitVec::zeros(self.n); pair_count(self.n)];
        for t in &self.triples {
            rows[pair_rank(t[0], t[1])].set(t[2]);
            rows[pair_rank(t[0], t[2])].set(t[1]);
            rows[pair_rank(t[1], t[2])].set(t[0]);
        }
        rows
    }

    /// True iff this is the complete 3-graph on its vertex set.
    pub fn is_complete(&self) -> bool {
        self.triples.len() == triple_count(self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTriSystem {
    n: usize,
    edges: Vec<Triple>,
}

impl Serialize for TriSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawTriSystem {
            n: self.n,
            edges: self.triples.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTriSystem::deserialize(deserializer)?;
        TriSystem::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

/// An ordinary graph on vertices 0..n-1.
#[derive(Clone, PartialEq, Eq)]
pub struct PairGraph {
    n: usize,
    pairs: Vec<Pair>,
    bits: BitVec,
}

impl std::fmt::Debug for PairGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PairGraph(n={}, m={})", self.n, self.pairs.len())
    }
}

impl PairGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Pair>) -> Result<Self> {
        let mut pairs: Vec<Pair> = Vec::new();
        for raw in edges {
            let p = [raw[0].min(raw[1]), raw[0].max(raw[1])];
            if p[0] == p[1] || p[1] >= n {
                return Err(Error::InvalidPair(raw, n));
            }
            pairs.push(p);
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePair(w[0]));
        }
        let mut bits = BitVec::zeros(pair_count(n));
        for p in &pairs {
            bits.set(pair_rank(p[0], p[1]));
        }
        Ok(PairGraph { n, pairs, bits })
    }

    pub fn empty(n: usize) -> Self {
        PairGraph {
            n,
            pairs: Vec::new(),
            bits: BitVec::zeros(pair_count(n)),
        }
    }

    pub fn complete(n: usize) -> Self {
        PairGraph::new(n, all_pairs(n)).expect("complete graphs are always valid")
    }

    pub fn triangle() -> Self {
        PairGraph::complete(3)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn edges(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn has_edge(&self, p: Pair) -> bool {
        let (a, b) = (p[0].min(p[1]), p[0].max(p[1]));
        if a == b || b >= self.n {
            return false;
        }
        self.bits.get(pair_rank(a, b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.pairs.iter().filter(|p| p.contains(&v)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn ranks_are_dense_and_ordered() {
        let got: Vec<usize> = all_triples(5)
            .map(|t| triple_rank(t[0], t[1], t[2]))
            .collect();
        assert_eq!(got, (0..10).collect::<Vec<_>>());
        let got: Vec<usize> = all_pairs(6).map(|p| pair_rank(p[0], p[1])).collect();
        assert_eq!(got, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn construction_rejects_bad_triples() {
        assert!(TriSystem::new(4, [[0, 1, 1]]).is_err());
        assert!(TriSystem::new(4, [[0, 1, 4]]).is_err());
        assert!(TriSystem::new(4, [[0, 1, 2], [2, 1, 0]]).is_err());
    }

    #[test]
    fn codegree_examples() {
        let complete4 = TriSystem::complete(4);
        assert_eq!(complete4.codegree(0, 1).unwrap(), 2);

        let single = TriSystem::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(single.codegree(0, 1).unwrap(), 1);

        // Complete balanced bipartite on 6: parts {0,1,2} and {3,4,5}.
        let bip = constructions::bipartite(6);
        assert_eq!(bip.codegree(0, 1).unwrap(), 3);
        assert_eq!(bip.codegree(0, 3).unwrap(), 4);

        assert!(complete4.codegree(0, 0).is_err());
        assert!(complete4.codegree(0, 9).is_err());
    }

    #[test]
    fn min_codegree_examples() {
        assert_eq!(TriSystem::empty(5).min_codegree().unwrap(), 0);
        assert_eq!(TriSystem::complete(6).min_codegree().unwrap(), 4);
        assert_eq!(constructions::bipartite(6).min_codegree().unwrap(), 3);
        assert!(TriSystem::empty(1).min_codegree().is_err());
    }

    #[test]
    fn link_graph_examples() {
        let complete5 = TriSystem::complete(5);
        let link = complete5.link_graph(2).unwrap();
        assert_eq!(link, PairGraph::complete(4));

        let single = TriSystem::new(4, [[0, 1, 2]]).unwrap();
        let link = single.link_graph(3).unwrap();
        assert_eq!(link.n(), 3);
        assert_eq!(link.edge_count(), 0);

        assert!(single.link_graph(7).is_err());
    }

    #[test]
    fn link_graph_relabels_preserving_order() {
        // Edges through vertex 2 of {0,1,2},{2,3,4}: links {0,1} and {3,4}
        // relabel to {0,1} and {2,3}.
        let g = TriSystem::new(5, [[0, 1, 2], [2, 3, 4], [0, 1, 3]]).unwrap();
        let link = g.link_graph(2).unwrap();
        assert_eq!(link.edges(), &[[0, 1], [2, 3]]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = TriSystem::new(6, [[1, 3, 5], [0, 1, 3], [1, 2, 4]]).unwrap();
        let sub = g.induced(&[1, 3, 5]).unwrap();
        assert_eq!(sub.edges(), &[[0, 1, 2]]);
        assert!(g.induced(&[1, 1, 3]).is_err());
    }

    #[test]
    fn codegree_sum_is_three_times_edges() {
        let g = constructions::bipartite(7);
        let total: usize = g.codegree_counts().iter().sum();
        assert_eq!(total, 3 * g.edge_count());
    }
}
