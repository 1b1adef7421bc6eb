//! Steiner triple systems: certification, generation and the spanning /
//! matching facts the blow-up constructions rely on.
//!
//! Generation uses the classical quasigroup constructions: Bose for orders
//! congruent to 3 mod 6 and Skolem for orders congruent to 1 mod 6. Systems
//! from other sources (files) are accepted through the same certificate.

use crate::error::{Error, Result};
use crate::hypergraph::TriSystem;

/// A 3-graph certified to cover every vertex pair exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    system: TriSystem,
}

impl SteinerSystem {
    pub fn new(system: TriSystem) -> Result<Self> {
        if !is_steiner(&system) {
            return Err(Error::invalid(
                "not a Steiner triple system: some pair is not covered exactly once",
            ));
        }
        Ok(SteinerSystem { system })
    }

    pub fn n(&self) -> usize {
        self.system.n()
    }

    pub fn as_tri(&self) -> &TriSystem {
        &self.system
    }

    pub fn into_tri(self) -> TriSystem {
        self.system
    }

    /// True iff every t-subset of the vertices contains at least one triple
    /// of the system. Checked by exhausting the t-subsets.
    pub fn spans_all_subsets(&self, t: usize) -> Result<bool> {
        let v = self.n();
        if t == 0 || t > v {
            return Err(Error::invalid(format!(
                "subset size {t} out of range 1..={v}"
            )));
        }
        if t < 3 {
            return Ok(false);
        }
        let mut subset: Vec<usize> = (0..t).collect();
        loop {
            if !self.spans_triple(&subset) {
                return Ok(false);
            }
            if !next_combination(&mut subset, v) {
                return Ok(true);
            }
        }
    }

    fn spans_triple(&self, subset: &[usize]) -> bool {
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate().skip(i + 1) {
                for &c in subset.iter().skip(j + 1) {
                    if self.system.has_edge([a, b, c]) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Advances a strictly increasing t-subset of {0..v-1} to its lexicographic
/// successor; false once the last combination is reached.
fn next_combination(subset: &mut [usize], v: usize) -> bool {
    let t = subset.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if subset[i] < v - t + i {
            subset[i] += 1;
            for j in i + 1..t {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// True iff every pair of vertices lies in exactly one triple.
pub fn is_steiner(g: &TriSystem) -> bool {
    if g.n() < 2 {
        return true;
    }
    g.codegree_counts().iter().all(|&c| c == 1)
}

/// Deterministic Steiner triple system on v vertices. Exists exactly for
/// v congruent to 1 or 3 mod 6.
pub fn generate_sts(v: usize) -> Result<SteinerSystem> {
    if v < 3 || (v % 6 != 1 && v % 6 != 3) {
        return Err(Error::invalid(format!(
            "no Steiner triple system on {v} vertices: the order must be congruent to 1 or 3 mod 6 (and at least 3)"
        )));
    }
    let system = if v % 6 == 3 { bose(v) } else { skolem(v) };
    debug_assert_eq!(system.edge_count(), v * (v - 1) / 6);
    SteinerSystem::new(system)
}

/// Bose construction for v = 6t + 3 over Z_{2t+1} x {0,1,2} with the
/// idempotent commutative quasigroup x*y = (x+y)(t+1) mod 2t+1.
fn bose(v: usize) -> TriSystem {
    let t = (v - 3) / 6;
    let m = 2 * t + 1;
    let label = |x: usize, k: usize| 3 * x + k;
    let half = |z: usize| z * (t + 1) % m;
    let mut triples = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..m {
        triples.push([label(x, 0), label(x, 1), label(x, 2)]);
    }
    for x in 0..m {
        for y in x + 1..m {
            for k in 0..3 {
                triples.push([label(x, k), label(y, k), label(half(x + y), (k + 1) % 3)]);
            }
        }
    }
    TriSystem::new(v, triples).expect("Bose construction yields distinct triples")
}

/// Skolem construction for v = 6t + 1 over (Z_{2t} x {0,1,2}) plus a point at
/// infinity, using the half-idempotent commutative quasigroup that sends even
/// sums 2k to k and odd sums 2k+1 to t+k.
fn skolem(v: usize) -> TriSystem {
    let t = (v - 1) / 6;
    let m = 2 * t;
    let infinity = v - 1;
    let label = |x: usize, k: usize| 3 * x + k;
    let h = |z: usize| if z.is_multiple_of(2) { z / 2 } else { t + (z - 1) / 2 };
    let star = |x: usize, y: usize| h((x + y) % m);
    let mut triples = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..t {
        triples.push([label(x, 0), label(x, 1), label(x, 2)]);
    }
    for x in 0..t {
        for k in 0..3 {
            triples.push([infinity, label(t + x, k), label(x, (k + 1) % 3)]);
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            for k in 0..3 {
                triples.push([label(x, k), label(y, k), label(star(x, y), (k + 1) % 3)]);
            }
        }
    }
    TriSystem::new(v, triples).expect("Skolem construction yields distinct triples")
}
