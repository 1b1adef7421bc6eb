//! Generators for the lower-bound configurations: colouring and tournament
//! based 3-graphs, Steiner blow-ups, the Ramsey and rainbow variants, the
//! iterated Steiner complement, suspensions, co-spans and the winding
//! tripartite graph.

use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{all_triples, pair_count, pair_rank, PairGraph, TriSystem};
use crate::steiner::SteinerSystem;

/// Total colouring of the unordered pairs over {0..n-1} with colours 1..=s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairColouring {
    n: usize,
    s: usize,
    colours: Vec<u16>,
}

impl PairColouring {
    pub fn new(n: usize, s: usize, colours: Vec<u16>) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("a colouring needs at least one colour"));
        }
        if colours.len() != pair_count(n) {
            return Err(Error::invalid(format!(
                "expected {} pair colours for n={n}, got {}",
                pair_count(n),
                colours.len()
            )));
        }
        if let Some(&c) = colours.iter().find(|&&c| c == 0 || c as usize > s) {
            return Err(Error::invalid(format!(
                "colour {c} out of range 1..={s}"
            )));
        }
        Ok(PairColouring { n, s, colours })
    }

    pub fn constant(n: usize, s: usize, colour: u16) -> Result<Self> {
        PairColouring::new(n, s, vec![colour; pair_count(n)])
    }

    pub fn random(n: usize, s: usize, rng: &mut impl Rng) -> Self {
        let colours = (0..pair_count(n))
            .map(|_| rng.random_range(1..=s as u16))
            .collect();
        PairColouring {
            n,
            s,
            colours,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.s
    }

    pub fn get(&self, x: usize, y: usize) -> u16 {
        let (a, b) = (x.min(y), x.max(y));
        self.colours[pair_rank(a, b)]
    }

    /// Colours in pair-rank order; used by the text format.
    pub fn colours(&self) -> &[u16] {
        &self.colours
    }
}

/// An orientation of every pair over {0..n-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    // For the sorted pair (a, b): true iff oriented from a to b.
    forward: Vec<bool>,
}

impl Tournament {
    pub fn new(n: usize, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != pair_count(n) {
            return Err(Error::invalid(format!(
                "expected {} orientations for n={n}, got {}",
                pair_count(n),
                forward.len()
            )));
        }
        Ok(Tournament { n, forward })
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let forward = (0..pair_count(n)).map(|_| rng.random::<bool>()).collect();
        Tournament { n, forward }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff the pair is oriented from its smaller to its larger vertex.
    pub fn forward(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < b);
        self.forward[pair_rank(a, b)]
    }

    /// The induced 2-colouring: colour 1 for low-to-high pairs, 2 otherwise.
    pub fn as_colouring(&self) -> PairColouring {
        let colours = self.forward.iter().map(|&f| if f { 1 } else { 2 }).collect();
        PairColouring {
            n: self.n,
            s: 2,
            colours,
        }
    }
}

/// Partition of {0..n-1} into k contiguous blocks with sizes differing by at
/// most one; the first n mod k blocks take the extra vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedPartition {
    n: usize,
    k: usize,
    assignment: Vec<usize>,
}

impl BalancedPartition {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("partition needs at least one part"));
        }
        let base = n / k;
        let extra = n % k;
        let mut assignment = Vec::with_capacity(n);
        for part in 0..k {
            let size = base + usize::from(part < extra);
            assignment.extend(std::iter::repeat_n(part, size));
        }
        Ok(BalancedPartition { n, k, assignment })
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn part_count(&self) -> usize {
        self.k
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &p in &self.assignment {
            sizes[p] += 1;
        }
        sizes
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.k];
        for (v, &p) in self.assignment.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }
}

/// Triple {i,j,k} with i<j<k becomes an edge iff the two pairs at the
/// smallest vertex receive different colours.
pub fn from_colouring(c: &PairColouring) -> TriSystem {
    let edges = all_triples(c.n()).filter(|t| c.get(t[0], t[1]) != c.get(t[0], t[2]));
    TriSystem::new(c.n(), edges).expect("generated triples are valid")
}

/// Triple {i,j,k} with i<j<k becomes an edge iff (i,j) and (i,k) receive
/// opposite orientations. Equals `from_colouring` of the induced 2-colouring.
pub fn from_tournament(t: &Tournament) -> TriSystem {
    let edges = all_triples(t.n()).filter(|tr| t.forward(tr[0], tr[1]) != t.forward(tr[0], tr[2]));
    TriSystem::new(t.n(), edges).expect("generated triples are valid")
}

/// With two colours: edges are the triples whose three pairs are not
/// monochromatic. K6-free since R(3,3) = 6.
pub fn ramsey_construction(c: &PairColouring) -> Result<TriSystem> {
    if c.colour_count() != 2 {
        return Err(Error::invalid(
            "the Ramsey construction needs exactly 2 colours",
        ));
    }
    let edges = all_triples(c.n()).filter(|t| {
        let (x, y, z) = (c.get(t[0], t[1]), c.get(t[0], t[2]), c.get(t[1], t[2]));
        !(x == y && y == z)
    });
    Ok(TriSystem::new(c.n(), edges).expect("generated triples are valid"))
}

/// Edges are the rainbow triangles: triples whose three pairs receive three
/// different colours. With s-1 colours the result has no suspension of a
/// complete graph on s vertices.
pub fn rainbow_construction(c: &PairColouring) -> Result<TriSystem> {
    if c.colour_count() < 2 {
        return Err(Error::invalid(
            "the rainbow construction needs at least 2 colours",
        ));
    }
    let edges = all_triples(c.n()).filter(|t| {
        let (x, y, z) = (c.get(t[0], t[1]), c.get(t[0], t[2]), c.get(t[1], t[2]));
        x != y && y != z && x != z
    });
    Ok(TriSystem::new(c.n(), edges).expect("generated triples are valid"))
}

/// Blow-up of a Steiner triple system on s-2 vertices to a K_s-free 3-graph
/// on n vertices: a balanced (s-2)-partition carries every triple with two
/// vertices in one part and one in another, plus every transversal triple
/// whose part indices do not form a system triple.
pub fn steiner_blowup(system: &SteinerSystem, n: usize) -> Result<TriSystem> {
    let s = system.n() + 2;
    if !(s >= 5 && (s % 6 == 3 || s % 6 == 5)) {
        return Err(Error::invalid(format!(
            "blow-up parameter s={s} must be >= 5 and congruent to 3 or 5 mod 6"
        )));
    }
    if n < s - 2 {
        return Err(Error::invalid(format!(
            "need n >= {} vertices for a blow-up over {} parts",
            s - 2,
            s - 2
        )));
    }
    let partition = BalancedPartition::new(n, s - 2)?;
    let edges = all_triples(n).filter(|t| {
        let (pa, pb, pc) = (
            partition.part_of(t[0]),
            partition.part_of(t[1]),
            partition.part_of(t[2]),
        );
        if pa == pb && pb == pc {
            false
        } else if pa == pb || pb == pc || pa == pc {
            true
        } else {
            !system.as_tri().has_edge([pa, pb, pc])
        }
    });
    Ok(TriSystem::new(n, edges).expect("generated triples are valid"))
}

/// Iterated blow-up of the complement of a Steiner triple system on 2s-1
/// vertices: transversal triples off the system at every level, recursing
/// into each part; parts smaller than 2s-1 stay internally empty.
pub fn iterated_steiner(system: &SteinerSystem, n: usize) -> Result<TriSystem> {
    let parts = system.n();
    let s = parts.div_ceil(2);
    if parts.is_multiple_of(2) || s < 2 || s.is_multiple_of(3) {
        return Err(Error::invalid(format!(
            "iterated construction needs a system on 2s-1 vertices with s congruent to 1 or 2 mod 3, got {parts}"
        )));
    }
    let mut edges = Vec::new();
    fill_iterated(system, 0, n, &mut edges);
    TriSystem::new(n, edges)
}

fn fill_iterated(system: &SteinerSystem, offset: usize, len: usize, edges: &mut Vec<[usize; 3]>) {
    let k = system.n();
    if len < k {
        return;
    }
    let partition = BalancedPartition::new(len, k).expect("k >= 1");
    let parts = partition.parts();
    for c in 2..k {
        for b in 1..c {
            for a in 0..b {
                if system.as_tri().has_edge([a, b, c]) {
                    continue;
                }
                for &u in &parts[a] {
                    for &v in &parts[b] {
                        for &w in &parts[c] {
                            edges.push([offset + u, offset + v, offset + w]);
                        }
                    }
                }
            }
        }
    }
    for part in &parts {
        // Contiguous blocks, so each part is a range starting at its minimum.
        fill_iterated(system, offset + part[0], part.len(), edges);
    }
}

/// Adds an apex (the new highest vertex) joined to every edge of the graph.
pub fn suspension(h: &PairGraph) -> TriSystem {
    let apex = h.n();
    let edges = h.edges().iter().map(|p| [p[0], p[1], apex]);
    TriSystem::new(h.n() + 1, edges).expect("generated triples are valid")
}

/// Adds two vertices (the two new highest) whose joint neighbourhood is the
/// whole original vertex set, keeping the original edges.
pub fn cospan(h: &TriSystem) -> TriSystem {
    let x = h.n();
    let y = h.n() + 1;
    let edges = h
        .edges()
        .iter()
        .copied()
        .chain((0..h.n()).map(|v| [v, x, y]));
    TriSystem::new(h.n() + 2, edges).expect("generated triples are valid")
}

/// Balanced tripartition with every triple of two vertices in one part and a
/// third in the next part round, winding modulo 3.
pub fn winding_tripartite(n: usize) -> Result<TriSystem> {
    if n < 3 {
        return Err(Error::invalid("winding construction needs n >= 3"));
    }
    let partition = BalancedPartition::new(n, 3)?;
    let edges = all_triples(n).filter(|t| {
        let (pa, pb, pc) = (
            partition.part_of(t[0]),
            partition.part_of(t[1]),
            partition.part_of(t[2]),
        );
        (pa == pb && pc == (pa + 1) % 3)
            || (pb == pc && pa == (pb + 1) % 3)
            || (pa == pc && pb == (pa + 1) % 3)
    });
    Ok(TriSystem::new(n, edges).expect("generated triples are valid"))
}

/// Complete balanced bipartite 3-graph: all triples meeting both parts.
pub fn bipartite(n: usize) -> TriSystem {
    let partition = BalancedPartition::new(n, 2).expect("two parts");
    let edges = all_triples(n).filter(|t| {
        let (pa, pb, pc) = (
            partition.part_of(t[0]),
            partition.part_of(t[1]),
            partition.part_of(t[2]),
        );
        !(pa == pb && pb == pc)
    });
    TriSystem::new(n, edges).expect("generated triples are valid")
}

/// Induced restriction of the host to the joint neighbourhood of x and y,
/// relabelled order-preservingly.
pub fn joint_restriction(g: &TriSystem, x: usize, y: usize) -> Result<TriSystem> {
    let neighbourhood = g.joint_neighbourhood(x, y)?;
    g.induced(&neighbourhood)
}
