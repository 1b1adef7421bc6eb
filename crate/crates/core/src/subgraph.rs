//! Subgraph containment (not-necessarily-induced) and a fast clique path.
//!
//! Containment asks for an injective vertex map sending every pattern edge
//! onto a host edge. The backtracking places pattern vertices most-constrained
//! first and prunes on host degree, fully-mapped edges, and pair codegrees.

use crate::bitset::BitVec;
use crate::error::{Error, Result};
use crate::family::ForbiddenFamily;
use crate::hypergraph::{pair_rank, triple_count, TriSystem};

/// Witness embedding: position i holds the host image of pattern vertex i.
pub type Embedding = Vec<usize>;

/// Looks for an injective map V(pattern) -> V(host) sending edges to edges.
pub fn contains(host: &TriSystem, pattern: &TriSystem) -> Option<Embedding> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if pattern.edge_count() == 0 {
        // Any injective map works; take the identity.
        return Some((0..pattern.n()).collect());
    }
    Matcher::new(host, pattern).search()
}

struct Matcher<'a> {
    host: &'a TriSystem,
    pattern: &'a TriSystem,
    order: Vec<usize>,
    host_rows: Vec<BitVec>,
    host_codegrees: Vec<usize>,
    // Per step: (earlier step, required codegree) prunes, and forward
    // propagations (earlier pattern vertex, unplaced pattern vertex) fired
    // when this step completes the second vertex of a pattern edge.
    codegree_checks: Vec<Vec<(usize, usize)>>,
    propagations: Vec<Vec<(usize, usize)>>,
    image: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    // Candidate hosts per pattern vertex, narrowed as edges half-complete.
    domains: Vec<BitVec>,
    trail: Vec<(usize, BitVec)>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a TriSystem, pattern: &'a TriSystem) -> Self {
        let order = placement_order(pattern);
        let pattern_codegrees = pattern.codegree_counts();
        let pattern_degrees = pattern.degrees();
        let host_degrees = host.degrees();

        let mut placed_at = vec![usize::MAX; pattern.n()];
        for (step, &u) in order.iter().enumerate() {
            placed_at[u] = step;
        }
        let mut codegree_checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); pattern.n()];
        for (step, &u) in order.iter().enumerate() {
            for (earlier, &w) in order.iter().enumerate().take(step) {
                let (a, b) = (u.min(w), u.max(w));
                let need = pattern_codegrees[pair_rank(a, b)];
                if need > 0 {
                    codegree_checks[step].push((earlier, need));
                }
            }
        }
        // An edge binds its last vertex to the row of its first two images;
        // fire that restriction as soon as the second vertex is placed.
        let mut propagations: Vec<Vec<(usize, usize)>> = vec![Vec::new(); pattern.n()];
        for t in pattern.edges() {
            let mut by_step = [t[0], t[1], t[2]];
            by_step.sort_unstable_by_key(|&v| placed_at[v]);
            propagations[placed_at[by_step[1]]].push((by_step[0], by_step[2]));
        }

        let domains = (0..pattern.n())
            .map(|u| {
                let mut domain = BitVec::zeros(host.n());
                for (g, &degree) in host_degrees.iter().enumerate() {
                    if degree >= pattern_degrees[u] {
                        domain.set(g);
                    }
                }
                domain
            })
            .collect();

        Matcher {
            host,
            pattern,
            host_rows: host.pair_rows(),
            host_codegrees: host.codegree_counts(),
            codegree_checks,
            propagations,
            image: vec![usize::MAX; pattern.n()],
            used: vec![false; host.n()],
            assigned: vec![usize::MAX; order.len()],
            domains,
            trail: Vec::new(),
            order,
        }
    }

    fn search(mut self) -> Option<Embedding> {
        if self.place(0) {
            Some(self.image)
        } else {
            None
        }
    }

    fn place(&mut self, step: usize) -> bool {
        if step == self.order.len() {
            // Propagation guarantees this, but the witness is re-verified
            // wholesale before being handed out.
            return verify_embedding(self.host, self.pattern, &self.image);
        }
        let u = self.order[step];
        let candidates: Vec<usize> = self.domains[u].ones().collect();
        'candidates: for g in candidates {
            if self.used[g] {
                continue;
            }
            for &(earlier, need) in &self.codegree_checks[step] {
                let other = self.assigned[earlier];
                let (a, b) = (g.min(other), g.max(other));
                if self.host_codegrees[pair_rank(a, b)] < need {
                    continue 'candidates;
                }
            }
            self.image[u] = g;
            self.used[g] = true;
            self.assigned[step] = g;
            let mark = self.trail.len();
            if self.propagate(step, g) && self.place(step + 1) {
                return true;
            }
            self.unwind(mark);
            self.used[g] = false;
            self.image[u] = usize::MAX;
        }
        false
    }

    /// Narrows the domain of every pattern vertex whose edge just gained its
    /// second image; false as soon as a domain empties.
    fn propagate(&mut self, step: usize, g: usize) -> bool {
        for i in 0..self.propagations[step].len() {
            let (earlier, target) = self.propagations[step][i];
            let other = self.image[earlier];
            let (a, b) = (g.min(other), g.max(other));
            let row = &self.host_rows[pair_rank(a, b)];
            self.trail.push((target, self.domains[target].clone()));
            self.domains[target].intersect_with(row);
            if self.domains[target].count_ones() == 0 {
                return false;
            }
        }
        true
    }

    fn unwind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (vertex, domain) = self.trail.pop().expect("trail is non-empty");
            self.domains[vertex] = domain;
        }
    }
}

/// Pattern vertices ordered most-constrained first: start at maximum degree,
/// then repeatedly take the vertex with most edges into the placed set.
fn placement_order(pattern: &TriSystem) -> Vec<usize> {
    let n = pattern.n();
    let deg = pattern.degrees();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| !placed[v]) {
            let attach = pattern
                .edges()
                .iter()
                .filter(|t| t.contains(&v) && t.iter().filter(|&&w| placed[w]).count() == 2)
                .count();
            let key = (attach, deg[v], n - v);
            if best.is_none_or(|(a, d, i)| key > (a, d, i)) {
                best = Some(key);
            }
        }
        let (_, _, inv) = best.unwrap();
        let v = n - inv;
        placed[v] = true;
        order.push(v);
    }
    order
}

/// Checks the embedding a witness claims: injective, edges land on edges.
pub fn verify_embedding(host: &TriSystem, pattern: &TriSystem, map: &[usize]) -> bool {
    if map.len() != pattern.n() {
        return false;
    }
    let mut seen = vec![false; host.n()];
    for &g in map {
        if g >= host.n() || seen[g] {
            return false;
        }
        seen[g] = true;
    }
    pattern
        .edges()
        .iter()
        .all(|t| host.has_edge([map[t[0]], map[t[1]], map[t[2]]]))
}

/// Grows `members` into a set of size s in which every pair plus any third
/// member forms an edge, taking extension vertices in ascending order from
/// `cand`. Rows map each pair rank to the bitset of completing third vertices.
pub(crate) fn extend_clique(
    rows: &[BitVec],
    members: &mut Vec<usize>,
    cand: &BitVec,
    s: usize,
) -> Option<Vec<usize>> {
    if members.len() == s {
        return Some(members.clone());
    }
    if members.len() + cand.count_ones() < s {
        return None;
    }
    let vs: Vec<usize> = cand.ones().collect();
    for v in vs {
        let mut next = cand.clone();
        next.clear_through(v);
        for &u in members.iter() {
            let (a, b) = (u.min(v), u.max(v));
            next.intersect_with(&rows[pair_rank(a, b)]);
        }
        members.push(v);
        if let Some(found) = extend_clique(rows, members, &next, s) {
            return Some(found);
        }
        members.pop();
    }
    None
}

/// Searches for s vertices spanning all C(s,3) triples; returns them if found.
pub fn clique_witness(g: &TriSystem, s: usize) -> Result<Option<Vec<usize>>> {
    if s < 3 {
        return Err(Error::invalid("clique size must be at least 3"));
    }
    if s > g.n() || g.edge_count() < triple_count(s) {
        return Ok(None);
    }
    let rows = g.pair_rows();
    let n = g.n();
    let mut members = Vec::with_capacity(s);
    let mut cand = BitVec::zeros(n);
    for v in 0..n {
        cand.set(v);
    }
    Ok(extend_clique(&rows, &mut members, &cand, s))
}

/// True iff some s-set of vertices spans a complete 3-graph. Agrees with
/// `contains(g, TriSystem::complete(s))`.
pub fn clique_number_at_least(g: &TriSystem, s: usize) -> Result<bool> {
    Ok(clique_witness(g, s)?.is_some())
}

/// First family member found in the host, with its witness embedding.
/// Complete members go through the clique path.
pub fn contains_any(host: &TriSystem, family: &ForbiddenFamily) -> Option<(usize, Embedding)> {
    for (idx, member) in family.members().iter().enumerate() {
        if member.is_complete() && member.n() >= 3 {
            if let Some(verts) = clique_witness(host, member.n()).expect("n >= 3 here") {
                return Some((idx, verts));
            }
        } else if let Some(map) = contains(host, member) {
            return Some((idx, map));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{self, suspension};
    use crate::family::{builtin, ForbiddenFamily};
    use crate::hypergraph::PairGraph;
    use crate::steiner::SteinerSystem;

    #[test]
    fn complete_contains_itself() {
        let g = TriSystem::complete(4);
        let w = contains(&g, &g).unwrap();
        assert!(verify_embedding(&g, &g, &w));
    }

    #[test]
    fn bipartite_is_fano_free() {
        let g = constructions::bipartite(10);
        assert!(contains(&g, &builtin("F7").unwrap()).is_none());
    }

    #[test]
    fn steiner_blowup_has_no_k5() {
        let s = SteinerSystem::new(TriSystem::new(3, [[0, 1, 2]]).unwrap()).unwrap();
        let g = constructions::steiner_blowup(&s, 9).unwrap();
        assert!(contains(&g, &TriSystem::complete(5)).is_none());
        assert!(!clique_number_at_least(&g, 5).unwrap());

        // Independent oracle: walk all C(9,5) = 126 five-sets directly.
        let mut spanning = 0;
        for a in 0..9usize {
            for b in a + 1..9 {
                for c in b + 1..9 {
                    for d in c + 1..9 {
                        for e in d + 1..9 {
                            let set = [a, b, c, d, e];
                            let mut complete = true;
                            for i in 0..5 {
                                for j in i + 1..5 {
                                    for k in j + 1..5 {
                                        complete &= g.has_edge([set[i], set[j], set[k]]);
                                    }
                                }
                            }
                            spanning += usize::from(complete);
                        }
                    }
                }
            }
        }
        assert_eq!(spanning, 0);
    }

    #[test]
    fn contains_any_examples() {
        let family = ForbiddenFamily::from_spec("K3").unwrap();
        assert!(contains_any(&TriSystem::empty(5), &family).is_none());

        let k4 = ForbiddenFamily::from_spec("K4").unwrap();
        let hit = contains_any(&TriSystem::complete(6), &k4).unwrap();
        assert_eq!(hit.1.len(), 4);
    }

    #[test]
    fn clique_examples() {
        assert!(clique_number_at_least(&TriSystem::complete(6), 6).unwrap());
        assert!(!clique_number_at_least(&TriSystem::empty(8), 3).unwrap());
        assert!(clique_number_at_least(&TriSystem::empty(8), 2).is_err());
    }

    #[test]
    fn suspension_link_recovers_pattern() {
        let tri = suspension(&PairGraph::triangle());
        // K4 minus one edge: contains the suspension of a triangle, not K4.
        assert!(contains(&tri, &builtin("K4-").unwrap()).is_some());
        assert!(contains(&tri, &TriSystem::complete(4)).is_none());
    }

    #[test]
    fn embedding_maps_isolated_vertices_injectively() {
        // Pattern: one edge plus an isolated vertex. Needs 4 host vertices.
        let pattern = TriSystem::new(4, [[0, 1, 2]]).unwrap();
        let host3 = TriSystem::new(3, [[0, 1, 2]]).unwrap();
        assert!(contains(&host3, &pattern).is_none());
        let host4 = TriSystem::new(4, [[0, 1, 2]]).unwrap();
        let w = contains(&host4, &pattern).unwrap();
        assert!(verify_embedding(&host4, &pattern, &w));
    }
}
