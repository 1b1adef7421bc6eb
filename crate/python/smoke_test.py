#!/usr/bin/env python3
"""Smoke test for the codegree_py extension module.

Builds nothing itself: run `cargo build -p codegree-py --release` first.
The script stages the produced cdylib as an importable module, then walks
the main types and operations.
"""

import json
import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def stage_module() -> None:
    candidates = [
        ROOT / "target" / "release" / "libcodegree_py.so",
        ROOT / "target" / "debug" / "libcodegree_py.so",
        ROOT / "target" / "release" / "libcodegree_py.dylib",
        ROOT / "target" / "debug" / "libcodegree_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "libcodegree_py not found; run `cargo build -p codegree-py --release` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="codegree-py-"))
    shutil.copy2(built, stage / "codegree_py.so")
    sys.path.insert(0, str(stage))


stage_module()

import codegree_py as cg  # noqa: E402


def check(name: str, cond: bool) -> None:
    status = "ok" if cond else "FAILED"
    print(f"  {name}: {status}")
    if not cond:
        sys.exit(1)


print("codegree_py smoke test")

# Core hypergraph queries.
complete4 = cg.TriSystem.complete(4)
check("complete(4) codegree", complete4.codegree(0, 1) == 2)
check("complete(4) min codegree", complete4.min_codegree() == 2)
check("complete(4) contains itself", complete4.contains(complete4) is not None)

single = cg.TriSystem(3, [(0, 1, 2)])
check("single edge codegree", single.codegree(0, 1) == 1)
check("single edge is a Steiner system", single.is_steiner())

bip = cg.bipartite(10)
check("bipartite(10) min codegree", bip.min_codegree() == 5)
check("bipartite(10) is Fano-free", not bip.contains_any("F7"))

# Constructions.
blowup = cg.steiner_blowup(5, 6)
check("blow-up edge count", blowup.edge_count == 12)
check("blow-up min codegree", blowup.min_codegree() == 2)
check("blow-up has no K5", not blowup.clique_number_at_least(5))

winding = cg.winding_tripartite(6)
check(
    "winding(6) edges",
    winding.edges()
    == [(0, 1, 2), (0, 1, 3), (0, 4, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5)],
)
check("winding(9) is F32-free", not cg.winding_tripartite(9).contains_any("F32"))

k4_minus = cg.suspension(3, [(0, 1), (0, 2), (1, 2)])
check("suspension of the triangle", k4_minus == cg.builtin("K4-"))
check("link graph at the apex", k4_minus.link_graph(3) == [(0, 1), (0, 2), (1, 2)])

f32 = cg.cospan(cg.TriSystem.complete(3))
check("cospan of K3 is F32", f32 == cg.builtin("F32"))

ramsey = cg.construct_ramsey(12, 7)
check("ramsey(12) is K6-free", not ramsey.clique_number_at_least(6))

tournament = cg.construct_tournament(10, 3)
check("tournament(10) is K4-free", not tournament.clique_number_at_least(4))

# Steiner systems.
sts9 = cg.generate_sts(9)
check("generate_sts(9) certifies", sts9.is_steiner())
check("generate_sts(9) triple count", sts9.edge_count == 12)
fano = cg.builtin("F7")
check("Fano spans all 5-sets", cg.large_sets_span(fano, 5))
check("Fano has independent triples", not cg.large_sets_span(fano, 3))

# Search.
result = cg.coex(4, "K4")
check("coex(4, K4) value", result["value"] == 1)
check("coex(4, K4) status", result["status"] == "exact")
naive = cg.coex(4, "K4", naive=True)
check("naive oracle agrees", naive["value"] == result["value"])
turan = cg.turan_number(4, "K4")
check("ex(4, K4) value", turan["value"] == 3)

# Experiments.
num, den = cg.k5_rate("colouring4")
check("k5 rate colouring4", Fraction(num, den) == Fraction(27, 1024))
num, den = cg.expected_codegree("rainbow", 4)
check("rainbow expected codegree", Fraction(num, den) == Fraction(2, 9))
num, den = cg.expected_codegree("ramsey", 2)
check("ramsey expected codegree", Fraction(num, den) == Fraction(3, 4))

report = json.loads(cg.concentration("colouring", 20, s=2, eps="1/10", trials=5, seed=1))
check("concentration report shape", report["kind"] == "concentration")
check("concentration trials", report["empirical"][0]["failure_count"] <= 5)
again = json.loads(cg.concentration("colouring", 20, s=2, eps="1/10", trials=5, seed=1))
check("concentration determinism", report == again)

independence = json.loads(cg.indicator_independence(4, 2))
marginals = {
    e["label"]: Fraction(e["numerator"], e["denominator"])
    for e in independence["exact_rationals"]
}
check("independence marginal", marginals["marginal_third_2"] == Fraction(1, 2))
check("independence joint", marginals["joint_11"] == Fraction(1, 4))

# Text round trip.
text = blowup.to_text()
check("text round trip", cg.TriSystem.from_text(text) == blowup)

print("smoke test passed")
