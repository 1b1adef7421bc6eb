//! Exact codegree thresholds and Turán numbers on small vertex counts.
//!
//! The main route is a DFS over triples in colex order deciding present or
//! absent, with two prunes: a pair whose decided codegree plus undecided
//! potential cannot reach the target dies immediately, and every added triple
//! is checked incrementally against the forbidden family anchored on the new
//! triple. The naive route enumerates all 2^C(n,3) edge sets against
//! precomputed embedding masks and serves as the independent oracle.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::BitVec;
use crate::error::{Error, Result};
use crate::family::ForbiddenFamily;
use crate::hypergraph::{
    all_triples, pair_count, pair_rank, triple_count, triple_rank, TriSystem, Triple,
};
use crate::subgraph::extend_clique;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Exact,
    Incomplete,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchResult {
    pub value: usize,
    pub witness: TriSystem,
    pub nodes_explored: u64,
    pub status: SearchStatus,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub enum Feasibility {
    Witness(TriSystem),
    Infeasible,
    BudgetExceeded,
}

/// Hard cap: beyond this the triple count makes exhaustive reasoning absurd.
const MAX_N: usize = 12;
/// Without an explicit budget only this range is guaranteed to finish.
const UNBUDGETED_N: usize = 6;

fn check_n(n: usize, budget: Option<Duration>) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("search needs n >= 2"));
    }
    if n > MAX_N {
        return Err(Error::invalid(format!(
            "n={n} is beyond desk scale (max {MAX_N})"
        )));
    }
    if n > UNBUDGETED_N && budget.is_none() {
        return Err(Error::invalid(format!(
            "n={n} > {UNBUDGETED_N} requires an explicit time budget"
        )));
    }
    Ok(())
}

/// Largest d such that some family-free 3-graph on n vertices has minimum
/// codegree at least d. On budget exhaustion the result is an explicit lower
/// bound, never a silent wrong answer.
pub fn coex_exact(
    n: usize,
    family: &ForbiddenFamily,
    budget: Option<Duration>,
) -> Result<SearchResult> {
    check_n(n, budget)?;
    let start = Instant::now();
    let deadline = budget.map(|b| start + b);
    let mut nodes = 0u64;
    let mut best_value = 0usize;
    let mut best_witness = TriSystem::empty(n);
    for d in 1..=n.saturating_sub(2) {
        match feasibility_search(n, d, family, deadline, &mut nodes) {
            Feasibility::Witness(w) => {
                best_value = d;
                best_witness = w;
            }
            Feasibility::Infeasible => {
                return Ok(SearchResult {
                    value: best_value,
                    witness: best_witness,
                    nodes_explored: nodes,
                    status: SearchStatus::Exact,
                    elapsed: start.elapsed(),
                });
            }
            Feasibility::BudgetExceeded => {
                return Ok(SearchResult {
                    value: best_value,
                    witness: best_witness,
                    nodes_explored: nodes,
                    status: SearchStatus::Incomplete,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    Ok(SearchResult {
        value: best_value,
        witness: best_witness,
        nodes_explored: nodes,
        status: SearchStatus::Exact,
        elapsed: start.elapsed(),
    })
}

/// Decision form: a family-free witness with minimum codegree >= d, or
/// definitive infeasibility.
pub fn is_feasible(
    n: usize,
    d: usize,
    family: &ForbiddenFamily,
    budget: Option<Duration>,
) -> Result<Feasibility> {
    check_n(n, budget)?;
    if d + 2 > n {
        return Err(Error::invalid(format!(
            "target codegree {d} out of range 0..={}",
            n - 2
        )));
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let mut nodes = 0u64;
    Ok(feasibility_search(n, d, family, deadline, &mut nodes))
}

enum Outcome {
    Found(Vec<Triple>),
    Exhausted,
    Budget,
}

struct FeasibleSearch<'a> {
    n: usize,
    d: usize,
    family: &'a ForbiddenFamily,
    triples: Vec<Triple>,
    triple_pairs: Vec<[usize; 3]>,
    cur: Vec<usize>,
    pot: Vec<usize>,
    satisfied: usize,
    included: Vec<Triple>,
    bits: BitVec,
    rows: Vec<BitVec>,
    nodes: u64,
    deadline: Option<Instant>,
}

fn feasibility_search(
    n: usize,
    d: usize,
    family: &ForbiddenFamily,
    deadline: Option<Instant>,
    nodes: &mut u64,
) -> Feasibility {
    if deadline.is_some_and(|dl| Instant::now() >= dl) {
        return Feasibility::BudgetExceeded;
    }
    let triples: Vec<Triple> = all_triples(n).collect();
    let triple_pairs = triples
        .iter()
        .map(|t| {
            [
                pair_rank(t[0], t[1]),
                pair_rank(t[0], t[2]),
                pair_rank(t[1], t[2]),
            ]
        })
        .collect();
    let npairs = pair_count(n);
    let mut search = FeasibleSearch {
        n,
        d,
        family,
        triple_pairs,
        cur: vec![0; npairs],
        pot: vec![n - 2; npairs],
        satisfied: if d == 0 { npairs } else { 0 },
        included: Vec::new(),
        bits: BitVec::zeros(triple_count(n)),
        rows: vec![BitVec::zeros(n); npairs],
        nodes: 0,
        deadline,
        triples,
    };
    let out = search.dfs(0);
    *nodes += search.nodes;
    match out {
        Outcome::Found(edges) => {
            Feasibility::Witness(TriSystem::new(n, edges).expect("search emits valid triples"))
        }
        Outcome::Exhausted => Feasibility::Infeasible,
        Outcome::Budget => Feasibility::BudgetExceeded,
    }
}

impl FeasibleSearch<'_> {
    fn dfs(&mut self, idx: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Outcome::Budget;
                }
            }
        }
        if self.satisfied == self.cur.len() {
            // Every pair reached the target; the undecided tail stays absent.
            return Outcome::Found(self.included.clone());
        }
        if idx == self.triples.len() {
            return Outcome::Exhausted;
        }

        self.apply_include(idx);
        if self.creates_member(self.triples[idx]) {
            self.revert_include(idx);
        } else {
            let out = self.dfs(idx + 1);
            self.revert_include(idx);
            if !matches!(out, Outcome::Exhausted) {
                return out;
            }
        }

        // Symmetry break: with d >= 1 some witness contains a triple through
        // the pair {0,1}; relabelling puts {0,1,2} into the edge set, so the
        // root never branches on exclusion.
        if idx == 0 && self.d >= 1 {
            return Outcome::Exhausted;
        }

        let viable = self.apply_exclude(idx);
        let out = if viable { self.dfs(idx + 1) } else { Outcome::Exhausted };
        self.revert_exclude(idx);
        out
    }

    fn apply_include(&mut self, idx: usize) {
        let t = self.triples[idx];
        self.included.push(t);
        self.bits.set(triple_rank(t[0], t[1], t[2]));
        self.rows[pair_rank(t[0], t[1])].set(t[2]);
        self.rows[pair_rank(t[0], t[2])].set(t[1]);
        self.rows[pair_rank(t[1], t[2])].set(t[0]);
        for &p in &self.triple_pairs[idx] {
            self.pot[p] -= 1;
            self.cur[p] += 1;
            if self.d > 0 && self.cur[p] == self.d {
                self.satisfied += 1;
            }
        }
    }

    fn revert_include(&mut self, idx: usize) {
        let t = self.triples[idx];
        self.included.pop();
        self.bits.clear(triple_rank(t[0], t[1], t[2]));
        self.rows[pair_rank(t[0], t[1])].clear(t[2]);
        self.rows[pair_rank(t[0], t[2])].clear(t[1]);
        self.rows[pair_rank(t[1], t[2])].clear(t[0]);
        for &p in &self.triple_pairs[idx] {
            self.pot[p] += 1;
            if self.d > 0 && self.cur[p] == self.d {
                self.satisfied -= 1;
            }
            self.cur[p] -= 1;
        }
    }

    /// Marks the triple absent; false if some pair can no longer reach d.
    fn apply_exclude(&mut self, idx: usize) -> bool {
        let mut viable = true;
        for &p in &self.triple_pairs[idx] {
            self.pot[p] -= 1;
            viable &= self.cur[p] + self.pot[p] >= self.d;
        }
        viable
    }

    fn revert_exclude(&mut self, idx: usize) {
        for &p in &self.triple_pairs[idx] {
            self.pot[p] += 1;
        }
    }

    /// The graph including the fresh triple t: does it now contain a family
    /// member? Any new embedding must use t, so the check anchors there.
    fn creates_member(&self, t: Triple) -> bool {
        for member in self.family.members() {
            if member.is_complete() && member.n() >= 3 {
                if self.clique_through(t, member.n()) {
                    return true;
                }
            } else if self.embeds_anchored(member, t) {
                return true;
            }
        }
        false
    }

    fn clique_through(&self, t: Triple, s: usize) -> bool {
        if s == 3 {
            return true;
        }
        let mut cand = self.rows[pair_rank(t[0], t[1])].clone();
        cand.intersect_with(&self.rows[pair_rank(t[0], t[2])]);
        cand.intersect_with(&self.rows[pair_rank(t[1], t[2])]);
        for &v in &t {
            if cand.get(v) {
                cand.clear(v);
            }
        }
        let mut members = t.to_vec();
        extend_clique(&self.rows, &mut members, &cand, s).is_some()
    }

    /// Tries every way of sending one pattern edge onto t, extending the rest
    /// of the pattern by brute backtracking over the current edge set.
    fn embeds_anchored(&self, pattern: &TriSystem, t: Triple) -> bool {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut image = vec![usize::MAX; pattern.n()];
        let mut used = vec![false; self.n];
        for edge in pattern.edges() {
            for perm in &perms {
                for (k, &slot) in perm.iter().enumerate() {
                    image[edge[k]] = t[slot];
                }
                for &v in &t {
                    used[v] = true;
                }
                if self.extend_pattern(pattern, &mut image, &mut used, 0) {
                    return true;
                }
                for &v in &t {
                    used[v] = false;
                }
                for &u in edge {
                    image[u] = usize::MAX;
                }
            }
        }
        false
    }

    fn extend_pattern(
        &self,
        pattern: &TriSystem,
        image: &mut [usize],
        used: &mut [bool],
        from: usize,
    ) -> bool {
        let next = (from..pattern.n()).find(|&u| image[u] == usize::MAX);
        let Some(u) = next else {
            return pattern.edges().iter().all(|e| {
                let mut im = [image[e[0]], image[e[1]], image[e[2]]];
                im.sort_unstable();
                self.bits.get(triple_rank(im[0], im[1], im[2]))
            });
        };
        for g in 0..self.n {
            if used[g] {
                continue;
            }
            image[u] = g;
            used[g] = true;
            // Check pattern edges that are fully mapped now.
            let ok = pattern.edges().iter().all(|e| {
                if !e.contains(&u) || e.iter().any(|&w| image[w] == usize::MAX) {
                    return true;
                }
                let mut im = [image[e[0]], image[e[1]], image[e[2]]];
                im.sort_unstable();
                self.bits.get(triple_rank(im[0], im[1], im[2]))
            });
            if ok && self.extend_pattern(pattern, image, used, u + 1) {
                return true;
            }
            used[g] = false;
            image[u] = usize::MAX;
        }
        false
    }
}

/// Largest edge count of a family-free 3-graph on n vertices.
pub fn ex_exact(
    n: usize,
    family: &ForbiddenFamily,
    budget: Option<Duration>,
) -> Result<SearchResult> {
    check_n(n, budget)?;
    let start = Instant::now();

    // If even a single triple is forbidden, the empty graph is the optimum.
    let single = TriSystem::new(n.max(3), [[0, 1, 2]]).expect("valid");
    let single_banned = n >= 3
        && crate::subgraph::contains_any(&single, family).is_some();
    if n < 3 || single_banned {
        return Ok(SearchResult {
            value: 0,
            witness: TriSystem::empty(n),
            nodes_explored: 1,
            status: SearchStatus::Exact,
            elapsed: start.elapsed(),
        });
    }

    let deadline = budget.map(|b| start + b);
    let mut search = MaxEdgeSearch::new(n, family, deadline);
    let budget_hit = if deadline.is_some_and(|dl| Instant::now() >= dl) {
        true
    } else {
        search.dfs(0)
    };
    Ok(SearchResult {
        value: search.best,
        witness: TriSystem::new(n, search.best_edges.clone()).expect("valid"),
        nodes_explored: search.inner.nodes,
        status: if budget_hit {
            SearchStatus::Incomplete
        } else {
            SearchStatus::Exact
        },
        elapsed: start.elapsed(),
    })
}

struct MaxEdgeSearch<'a> {
    inner: FeasibleSearch<'a>,
    best: usize,
    best_edges: Vec<Triple>,
}

impl<'a> MaxEdgeSearch<'a> {
    fn new(n: usize, family: &'a ForbiddenFamily, deadline: Option<Instant>) -> Self {
        let triples: Vec<Triple> = all_triples(n).collect();
        let triple_pairs = triples
            .iter()
            .map(|t| {
                [
                    pair_rank(t[0], t[1]),
                    pair_rank(t[0], t[2]),
                    pair_rank(t[1], t[2]),
                ]
            })
            .collect();
        let npairs = pair_count(n);
        MaxEdgeSearch {
            inner: FeasibleSearch {
                n,
                d: 0,
                family,
                triple_pairs,
                cur: vec![0; npairs],
                pot: vec![n - 2; npairs],
                satisfied: 0,
                included: Vec::new(),
                bits: BitVec::zeros(triple_count(n)),
                rows: vec![BitVec::zeros(n); npairs],
                nodes: 0,
                deadline,
                triples,
            },
            best: 0,
            best_edges: Vec::new(),
        }
    }

    /// Branch and bound; returns true if the budget ran out somewhere below.
    fn dfs(&mut self, idx: usize) -> bool {
        self.inner.nodes += 1;
        if self.inner.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.inner.deadline {
                if Instant::now() >= deadline {
                    return true;
                }
            }
        }
        if self.inner.included.len() > self.best {
            self.best = self.inner.included.len();
            self.best_edges = self.inner.included.clone();
        }
        if idx == self.inner.triples.len() {
            return false;
        }
        if self.inner.included.len() + (self.inner.triples.len() - idx) <= self.best {
            return false;
        }
        let mut budget_hit = false;
        self.inner.apply_include(idx);
        if self.inner.creates_member(self.inner.triples[idx]) {
            self.inner.revert_include(idx);
        } else {
            budget_hit |= self.dfs(idx + 1);
            self.inner.revert_include(idx);
        }
        // A maximum witness with any edge at all can be relabelled to use
        // {0,1,2}; the single-triple case was handled before the search.
        if idx == 0 {
            return budget_hit;
        }
        if !budget_hit {
            budget_hit |= self.dfs(idx + 1);
        }
        budget_hit
    }
}

/// Exhaustive enumeration oracle for the codegree threshold, n <= 6.
pub fn coex_naive(n: usize, family: &ForbiddenFamily) -> Result<SearchResult> {
    naive_search(n, family, true)
}

/// Exhaustive enumeration oracle for the Turán number, n <= 6.
pub fn ex_naive(n: usize, family: &ForbiddenFamily) -> Result<SearchResult> {
    naive_search(n, family, false)
}

fn naive_search(n: usize, family: &ForbiddenFamily, codegree: bool) -> Result<SearchResult> {
    if n < 2 {
        return Err(Error::invalid("search needs n >= 2"));
    }
    if n > 6 {
        return Err(Error::invalid(
            "the naive enumeration is refused beyond n = 6",
        ));
    }
    let start = Instant::now();
    let nt = triple_count(n);
    let triples: Vec<Triple> = all_triples(n).collect();

    // Every injective placement of every member, as a required-triples mask.
    let mut member_masks: Vec<u32> = Vec::new();
    for member in family.members() {
        collect_embedding_masks(n, member, &mut member_masks);
    }
    member_masks.sort_unstable();
    member_masks.dedup();

    let mut pair_masks = vec![0u32; pair_count(n)];
    for (i, t) in triples.iter().enumerate() {
        pair_masks[pair_rank(t[0], t[1])] |= 1 << i;
        pair_masks[pair_rank(t[0], t[2])] |= 1 << i;
        pair_masks[pair_rank(t[1], t[2])] |= 1 << i;
    }

    let mut best: Option<(usize, u32)> = None;
    for mask in 0u32..1 << nt {
        let score = if codegree {
            pair_masks
                .iter()
                .map(|pm| (mask & pm).count_ones() as usize)
                .min()
                .unwrap_or(0)
        } else {
            mask.count_ones() as usize
        };
        if best.is_some_and(|(b, _)| score <= b) {
            continue;
        }
        let free = member_masks.iter().all(|&m| mask & m != m);
        if free {
            best = Some((score, mask));
        }
    }
    let (value, witness_mask) = best.expect("the empty graph is always family-free");
    let edges = triples
        .iter()
        .enumerate()
        .filter(|(i, _)| witness_mask >> i & 1 == 1)
        .map(|(_, t)| *t);
    Ok(SearchResult {
        value,
        witness: TriSystem::new(n, edges)?,
        nodes_explored: 1u64 << nt,
        status: SearchStatus::Exact,
        elapsed: start.elapsed(),
    })
}

/// All masks of triples forced by injective maps of the pattern into [n].
fn collect_embedding_masks(n: usize, pattern: &TriSystem, out: &mut Vec<u32>) {
    if pattern.n() > n {
        return;
    }
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        pattern: &TriSystem,
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<u32>,
    ) {
        if depth == pattern.n() {
            let mut mask = 0u32;
            for e in pattern.edges() {
                let mut im = [image[e[0]], image[e[1]], image[e[2]]];
                im.sort_unstable();
                mask |= 1 << triple_rank(im[0], im[1], im[2]);
            }
            out.push(mask);
            return;
        }
        for g in 0..n {
            if !used[g] {
                image[depth] = g;
                used[g] = true;
                rec(n, pattern, depth + 1, image, used, out);
                used[g] = false;
            }
        }
    }
    rec(n, pattern, 0, &mut image, &mut used, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{from_tournament, Tournament};
    use crate::subgraph::contains_any;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn family(spec: &str) -> ForbiddenFamily {
        ForbiddenFamily::from_spec(spec).unwrap()
    }

    fn check_witness(result: &SearchResult, fam: &ForbiddenFamily, min_value: usize) {
        assert!(contains_any(&result.witness, fam).is_none());
        if result.witness.n() >= 2 {
            assert!(result.witness.min_codegree().unwrap() >= min_value);
        }
    }

    #[test]
    fn single_edge_family_pins_threshold_to_zero() {
        for n in 3..=5 {
            let r = coex_exact(n, &family("K3"), None).unwrap();
            assert_eq!(r.value, 0);
            assert_eq!(r.witness.edge_count(), 0);
        }
    }

    #[test]
    fn coex_k4_small_values() {
        let f = family("K4");
        assert_eq!(coex_naive(3, &f).unwrap().value, 1);
        assert_eq!(coex_naive(4, &f).unwrap().value, 1);
        let exact = coex_exact(4, &f, None).unwrap();
        assert_eq!(exact.value, 1);
        check_witness(&exact, &f, 1);
    }

    #[test]
    fn exact_matches_naive_on_small_graphs() {
        for spec in ["K4", "K4-", "F32", "F7", "K3"] {
            let f = family(spec);
            for n in 2..=5 {
                let naive = coex_naive(n, &f).unwrap();
                let exact = coex_exact(n, &f, None).unwrap();
                assert_eq!(exact.value, naive.value, "coex {spec} n={n}");
                check_witness(&exact, &f, exact.value);
                check_witness(&naive, &f, naive.value);

                let naive = ex_naive(n, &f).unwrap();
                let exact = ex_exact(n, &f, None).unwrap();
                assert_eq!(exact.value, naive.value, "ex {spec} n={n}");
                assert_eq!(exact.witness.edge_count(), exact.value);
            }
        }
    }

    #[test]
    fn f32_threshold_on_five_is_not_beaten_by_winding() {
        let f = family("F32");
        let naive = coex_naive(5, &f).unwrap();
        let winding = crate::constructions::winding_tripartite(5).unwrap();
        assert!(naive.value >= winding.min_codegree().unwrap());
        check_witness(&naive, &f, naive.value);
    }

    #[test]
    fn is_feasible_examples() {
        match is_feasible(5, 0, &family("K9"), None).unwrap() {
            Feasibility::Witness(w) => assert_eq!(w.edge_count(), 0),
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(matches!(
            is_feasible(5, 3, &family("K4"), None).unwrap(),
            Feasibility::Infeasible
        ));
        match is_feasible(4, 1, &family("K4"), None).unwrap() {
            Feasibility::Witness(w) => {
                assert!(w.min_codegree().unwrap() >= 1);
                assert!(contains_any(&w, &family("K4")).is_none());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(is_feasible(5, 4, &family("K4"), None).is_err());
    }

    #[test]
    fn turan_numbers_small() {
        assert_eq!(ex_exact(5, &family("K3"), None).unwrap().value, 0);
        assert_eq!(ex_exact(4, &family("K4"), None).unwrap().value, 3);
    }

    #[test]
    fn containment_matches_the_embedding_mask_oracle() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..300 {
            let host_n = rng.random_range(3..=6usize);
            let pattern_n = rng.random_range(3..=4usize);
            let host = random_system(host_n, &mut rng);
            let pattern = random_system(pattern_n, &mut rng);
            if pattern.edge_count() == 0 {
                continue;
            }
            let fast = crate::subgraph::contains(&host, &pattern).is_some();

            let mut masks = Vec::new();
            collect_embedding_masks(host_n, &pattern, &mut masks);
            let mut host_mask = 0u32;
            for (i, t) in all_triples(host_n).enumerate() {
                if host.has_edge(t) {
                    host_mask |= 1 << i;
                }
            }
            let slow = masks.iter().any(|&m| host_mask & m == m);
            assert_eq!(fast, slow, "host {host:?} pattern {pattern:?}");
        }
    }

    fn random_system(n: usize, rng: &mut ChaCha8Rng) -> TriSystem {
        use rand::Rng;
        let edges = all_triples(n).filter(|_| rng.random::<bool>());
        TriSystem::new(n, edges).expect("valid")
    }

    #[test]
    fn union_families_match_the_oracle() {
        for spec in ["K4,F32", "K4-,F32", "K4,K4-,K3"] {
            let f = family(spec);
            for n in 3..=5 {
                assert_eq!(
                    coex_exact(n, &f, None).unwrap().value,
                    coex_naive(n, &f).unwrap().value,
                    "coex {spec} n={n}"
                );
                assert_eq!(
                    ex_exact(n, &f, None).unwrap().value,
                    ex_naive(n, &f).unwrap().value,
                    "ex {spec} n={n}"
                );
            }
        }
    }

    #[test]
    fn family_union_is_no_easier() {
        let k4 = family("K4");
        let f32 = family("F32");
        let both = family("K4,F32");
        for n in 3..=5 {
            let u = coex_exact(n, &both, None).unwrap().value;
            let a = coex_exact(n, &k4, None).unwrap().value;
            let b = coex_exact(n, &f32, None).unwrap().value;
            assert!(u <= a.min(b), "n={n}");
            let u = ex_exact(n, &both, None).unwrap().value;
            let a = ex_exact(n, &k4, None).unwrap().value;
            let b = ex_exact(n, &f32, None).unwrap().value;
            assert!(u <= a.min(b), "n={n}");
        }
    }

    #[test]
    fn thresholds_dominate_random_tournament_constructions() {
        let f = family("K4");
        for n in [4, 5, 6] {
            let coex = coex_exact(n, &f, None).unwrap().value;
            let mut best = 0;
            for seed in 0..50 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = from_tournament(&Tournament::random(n, &mut rng));
                best = best.max(g.min_codegree().unwrap());
            }
            assert!(coex >= best, "n={n}: coex={coex} < tournament {best}");
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let f = family("K4");
        let r = coex_exact(6, &f, Some(Duration::ZERO)).unwrap();
        assert_eq!(r.status, SearchStatus::Incomplete);
        // The reported value stays a valid lower bound.
        check_witness(&r, &f, r.value);
    }

    #[test]
    fn out_of_range_inputs_are_rejected() {
        let f = family("K4");
        assert!(coex_exact(1, &f, None).is_err());
        assert!(coex_exact(7, &f, None).is_err());
        assert!(coex_exact(7, &f, Some(Duration::from_secs(1))).is_ok());
        assert!(coex_naive(7, &f).is_err());
        assert!(coex_exact(40, &f, Some(Duration::from_secs(1))).is_err());
    }
}
