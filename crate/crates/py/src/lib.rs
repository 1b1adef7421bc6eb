//! Python bindings: the main types and operations of the codegree toolkit.
//!
//! Build with `cargo build -p codegree-py --release`, then rename the
//! produced `libcodegree_py.so` to `codegree_py.so` somewhere on the Python
//! path (python/smoke_test.py does this automatically).

use std::time::Duration;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use codegree::constructions::{self, PairColouring, Tournament};
use codegree::experiments::{self, K5RateMode, RandomConstruction};
use codegree::hypergraph::PairGraph;
use codegree::search;
use codegree::steiner;
use codegree::{Error, ForbiddenFamily};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn seeded(seed: u64, stream: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A 3-uniform hypergraph on vertices 0..n-1.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct TriSystem {
    inner: codegree::TriSystem,
}

#[pymethods]
impl TriSystem {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize, usize)>) -> PyResult<Self> {
        let triples = edges.into_iter().map(|(a, b, c)| [a, b, c]);
        Ok(TriSystem {
            inner: codegree::TriSystem::new(n, triples).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        TriSystem {
            inner: codegree::TriSystem::complete(n),
        }
    }

    #[staticmethod]
    fn empty(n: usize) -> Self {
        TriSystem {
            inner: codegree::TriSystem::empty(n),
        }
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let parsed =
            codegree::io::parse_tri_string(text, std::path::Path::new("<text>")).map_err(err)?;
        Ok(TriSystem { inner: parsed })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner.edges().iter().map(|t| (t[0], t[1], t[2])).collect()
    }

    fn has_edge(&self, a: usize, b: usize, c: usize) -> bool {
        self.inner.has_edge([a, b, c])
    }

    fn codegree(&self, x: usize, y: usize) -> PyResult<usize> {
        self.inner.codegree(x, y).map_err(err)
    }

    fn min_codegree(&self) -> PyResult<usize> {
        self.inner.min_codegree().map_err(err)
    }

    /// Witness embedding of `pattern` into this graph, or None.
    fn contains(&self, pattern: &TriSystem) -> Option<Vec<usize>> {
        codegree::subgraph::contains(&self.inner, &pattern.inner)
    }

    /// True iff some member of the named family embeds. Families are
    /// comma-separated built-in names (K3..K9, K4-, F32, F7, SKs:<s>, FKs:<s>).
    fn contains_any(&self, family: &str) -> PyResult<bool> {
        let family = ForbiddenFamily::from_spec(family).map_err(err)?;
        Ok(codegree::subgraph::contains_any(&self.inner, &family).is_some())
    }

    fn clique_number_at_least(&self, s: usize) -> PyResult<bool> {
        codegree::subgraph::clique_number_at_least(&self.inner, s).map_err(err)
    }

    /// Link graph of x as an edge list on the remaining, relabelled vertices.
    fn link_graph(&self, x: usize) -> PyResult<Vec<(usize, usize)>> {
        let link = self.inner.link_graph(x).map_err(err)?;
        Ok(link.edges().iter().map(|p| (p[0], p[1])).collect())
    }

    fn joint_restriction(&self, x: usize, y: usize) -> PyResult<TriSystem> {
        Ok(TriSystem {
            inner: constructions::joint_restriction(&self.inner, x, y).map_err(err)?,
        })
    }

    fn is_steiner(&self) -> bool {
        steiner::is_steiner(&self.inner)
    }

    fn to_text(&self) -> String {
        codegree::io::write_tri_string(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("TriSystem(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &TriSystem) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn construct_colouring(n: usize, s: usize, seed: u64) -> PyResult<TriSystem> {
    if s == 0 {
        return Err(PyValueError::new_err("a colouring needs at least one colour"));
    }
    let c = PairColouring::random(n, s, &mut seeded(seed, 0));
    Ok(TriSystem {
        inner: constructions::from_colouring(&c),
    })
}

#[pyfunction]
fn construct_tournament(n: usize, seed: u64) -> TriSystem {
    let t = Tournament::random(n, &mut seeded(seed, 0));
    TriSystem {
        inner: constructions::from_tournament(&t),
    }
}

#[pyfunction]
fn construct_ramsey(n: usize, seed: u64) -> PyResult<TriSystem> {
    let c = PairColouring::random(n, 2, &mut seeded(seed, 0));
    Ok(TriSystem {
        inner: constructions::ramsey_construction(&c).map_err(err)?,
    })
}

/// Rainbow construction with s - 1 colours.
#[pyfunction]
fn construct_rainbow(n: usize, s: usize, seed: u64) -> PyResult<TriSystem> {
    if s < 3 {
        return Err(PyValueError::new_err("rainbow needs s >= 3"));
    }
    let c = PairColouring::random(n, s - 1, &mut seeded(seed, 0));
    Ok(TriSystem {
        inner: constructions::rainbow_construction(&c).map_err(err)?,
    })
}

#[pyfunction]
fn steiner_blowup(s: usize, n: usize) -> PyResult<TriSystem> {
    let v = s
        .checked_sub(2)
        .ok_or_else(|| PyValueError::new_err("s must be at least 5"))?;
    let system = steiner::generate_sts(v).map_err(err)?;
    Ok(TriSystem {
        inner: constructions::steiner_blowup(&system, n).map_err(err)?,
    })
}

#[pyfunction]
fn iterated_steiner(s: usize, n: usize) -> PyResult<TriSystem> {
    let points = s
        .checked_mul(2)
        .and_then(|x| x.checked_sub(1))
        .ok_or_else(|| PyValueError::new_err("bad s"))?;
    let system = steiner::generate_sts(points).map_err(err)?;
    Ok(TriSystem {
        inner: constructions::iterated_steiner(&system, n).map_err(err)?,
    })
}

/// Suspension of the 2-graph given as an edge list on n vertices.
#[pyfunction]
fn suspension(n: usize, edges: Vec<(usize, usize)>) -> PyResult<TriSystem> {
    let pairs = edges.into_iter().map(|(a, b)| [a, b]);
    let h = PairGraph::new(n, pairs).map_err(err)?;
    Ok(TriSystem {
        inner: constructions::suspension(&h),
    })
}

#[pyfunction]
fn cospan(h: &TriSystem) -> TriSystem {
    TriSystem {
        inner: constructions::cospan(&h.inner),
    }
}

#[pyfunction]
fn winding_tripartite(n: usize) -> PyResult<TriSystem> {
    Ok(TriSystem {
        inner: constructions::winding_tripartite(n).map_err(err)?,
    })
}

#[pyfunction]
fn bipartite(n: usize) -> TriSystem {
    TriSystem {
        inner: constructions::bipartite(n),
    }
}

#[pyfunction]
fn generate_sts(v: usize) -> PyResult<TriSystem> {
    Ok(TriSystem {
        inner: steiner::generate_sts(v).map_err(err)?.into_tri(),
    })
}

#[pyfunction]
fn large_sets_span(system: &TriSystem, t: usize) -> PyResult<bool> {
    let s = codegree::SteinerSystem::new(system.inner.clone()).map_err(err)?;
    s.spans_all_subsets(t).map_err(err)
}

/// Named built-in pattern as a TriSystem.
#[pyfunction]
fn builtin(name: &str) -> PyResult<TriSystem> {
    Ok(TriSystem {
        inner: codegree::family::builtin(name).map_err(err)?,
    })
}

fn search_dict(py: Python<'_>, result: &search::SearchResult) -> PyResult<Py<PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("value", result.value)?;
    dict.set_item(
        "witness",
        TriSystem {
            inner: result.witness.clone(),
        },
    )?;
    dict.set_item("nodes_explored", result.nodes_explored)?;
    dict.set_item(
        "status",
        match result.status {
            search::SearchStatus::Exact => "exact",
            search::SearchStatus::Incomplete => "incomplete",
        },
    )?;
    Ok(dict.into())
}

/// Exact codegree threshold as {"value", "witness", "nodes_explored", "status"}.
#[pyfunction]
#[pyo3(signature = (n, forbid, budget_secs=60, naive=false))]
fn coex(py: Python<'_>, n: usize, forbid: &str, budget_secs: u64, naive: bool) -> PyResult<Py<PyDict>> {
    let family = ForbiddenFamily::from_spec(forbid).map_err(err)?;
    let result = if naive {
        search::coex_naive(n, &family).map_err(err)?
    } else {
        search::coex_exact(n, &family, Some(Duration::from_secs(budget_secs))).map_err(err)?
    };
    search_dict(py, &result)
}

/// Exact Turán number, same shape as `coex`.
#[pyfunction]
#[pyo3(signature = (n, forbid, budget_secs=60, naive=false))]
fn turan_number(
    py: Python<'_>,
    n: usize,
    forbid: &str,
    budget_secs: u64,
    naive: bool,
) -> PyResult<Py<PyDict>> {
    let family = ForbiddenFamily::from_spec(forbid).map_err(err)?;
    let result = if naive {
        search::ex_naive(n, &family).map_err(err)?
    } else {
        search::ex_exact(n, &family, Some(Duration::from_secs(budget_secs))).map_err(err)?
    };
    search_dict(py, &result)
}

/// Exact K5 frequency as a (numerator, denominator) pair.
#[pyfunction]
fn k5_rate(mode: &str) -> PyResult<(i64, i64)> {
    let report = experiments::k5_rate_exact(K5RateMode::parse(mode).map_err(err)?);
    let rate = report.exact("k5_rate").expect("always present");
    Ok((*rate.numer(), *rate.denom()))
}

/// Exact per-third-vertex edge probability as (numerator, denominator).
#[pyfunction]
fn expected_codegree(construction: &str, s: usize) -> PyResult<(i64, i64)> {
    let c = RandomConstruction::parse(construction).map_err(err)?;
    let p = experiments::expected_codegree_exact(c, s).map_err(err)?;
    Ok((*p.numer(), *p.denom()))
}

/// Concentration experiment; returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (construction, n, s=2, eps="1/10", trials=100, seed=0))]
fn concentration(
    construction: &str,
    n: usize,
    s: usize,
    eps: &str,
    trials: u64,
    seed: u64,
) -> PyResult<String> {
    let c = RandomConstruction::parse(construction).map_err(err)?;
    let eps = experiments::parse_ratio(eps).map_err(err)?;
    let (report, _) =
        experiments::codegree_concentration(c, n, s, eps, trials, seed).map_err(err)?;
    Ok(report.to_json())
}

/// Independence check report as a JSON string.
#[pyfunction]
fn indicator_independence(n: usize, s: usize) -> PyResult<String> {
    let report = experiments::indicator_independence_check(n, s).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn codegree_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<TriSystem>()?;
    m.add_function(wrap_pyfunction!(construct_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(construct_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(construct_ramsey, m)?)?;
    m.add_function(wrap_pyfunction!(construct_rainbow, m)?)?;
    m.add_function(wrap_pyfunction!(steiner_blowup, m)?)?;
    m.add_function(wrap_pyfunction!(iterated_steiner, m)?)?;
    m.add_function(wrap_pyfunction!(suspension, m)?)?;
    m.add_function(wrap_pyfunction!(cospan, m)?)?;
    m.add_function(wrap_pyfunction!(winding_tripartite, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(generate_sts, m)?)?;
    m.add_function(wrap_pyfunction!(large_sets_span, m)?)?;
    m.add_function(wrap_pyfunction!(builtin, m)?)?;
    m.add_function(wrap_pyfunction!(coex, m)?)?;
    m.add_function(wrap_pyfunction!(turan_number, m)?)?;
    m.add_function(wrap_pyfunction!(k5_rate, m)?)?;
    m.add_function(wrap_pyfunction!(expected_codegree, m)?)?;
    m.add_function(wrap_pyfunction!(concentration, m)?)?;
    m.add_function(wrap_pyfunction!(indicator_independence, m)?)?;
    Ok(())
}
