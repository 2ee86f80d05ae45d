"""Acceptance criteria, each run at its stated tolerance and time target.

The summary at the end of the pytest run prints one PASS/FAIL line per
criterion (see conftest.py). Criteria 3 and 4 are checked literally and
also through a companion check; see the decisions ledger for why the
literal forms fail.
"""

import time
from itertools import combinations

import networkx as nx
import pytest

from ngrings.edge_ring import (
    MultipartiteType,
    classify_gorenstein,
    classify_nearly_gorenstein,
    default_bound,
    heavy_components,
    min_part_slack,
    multipartite_types,
    omega_gcd,
    omega_points,
    oracle_verdict,
    slack_witness,
    trace_degree_one,
)
from ngrings.graphs import Graph, is_perfect
from ngrings.hibi import bipartite_poset, hibi_nearly_gorenstein
from ngrings.stable_set import a_invariant, classify_stab, omega_min_degree, trace_oracle_stab
from oracles import is_perfect_by_definition, maximal_cliques_brute

criterion = pytest.mark.criterion


def labeled_graphs(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_bitmask(n, mask)


def zero_based(g):
    return g.n, [(i - 1, j - 1) for i, j in g.edges]


def expected_gorenstein(r):
    if len(r) == 2:
        return r[0] == 1 or r[0] == r[1]
    if len(r) == 3:
        return r[2] <= 2
    return r == (1, 1, 1, 1)


# --- 1 -------------------------------------------------------------------------


@criterion("1", "Gorenstein table, 2 <= n <= 5, d <= 10")
def test_gorenstein_table():
    start = time.perf_counter()
    types = list(multipartite_types(10, min_n=2, max_n=5))
    wrong = [t.parts for t in types if classify_gorenstein(t) != expected_gorenstein(t.parts)]
    elapsed = time.perf_counter() - start
    assert len(types) > 100
    assert wrong == []
    assert elapsed < 1.0


# --- 2 -------------------------------------------------------------------------


@criterion("2", "bipartite nearly Gorenstein rule, r2 <= 8, vs two-chain poset")
def test_bipartite_rule():
    start = time.perf_counter()
    for r2 in range(1, 9):
        for r1 in range(1, r2 + 1):
            t = MultipartiteType((r1, r2))
            rule = r1 == 1 or r2 in (r1, r1 + 1)
            assert classify_nearly_gorenstein(t).nearly_gorenstein == rule, t
            assert hibi_nearly_gorenstein(bipartite_poset(r1, r2)) == rule, t
    assert time.perf_counter() - start < 1.0


# --- 3 and 5 -------------------------------------------------------------------


@pytest.fixture(scope="module")
def edge_sweep():
    start = time.perf_counter()
    rows = {}
    for t in multipartite_types(7, min_n=3):
        rows[t] = trace_degree_one(t, default_bound(t))
    return rows, time.perf_counter() - start


@criterion("3", "trace_degree_one.empty <=> not nearly Gorenstein, n >= 3, d <= 7 (literal)")
def test_trace_empty_iff_not_ng(edge_sweep):
    rows, elapsed = edge_sweep
    assert all(tr.frontier_stable and tr.bound == 2 * t.d + 4 for t, tr in rows.items())
    mismatched = [t.label() for t, tr in rows.items() if tr.empty != (not classify_nearly_gorenstein(t).nearly_gorenstein)]
    assert elapsed < 300
    assert mismatched == [], f"edge monomials lie in the trace for {mismatched}"


@criterion("3b", "all edges in trace <=> nearly Gorenstein, n >= 3, d <= 7 (companion)")
def test_trace_contains_m_iff_ng(edge_sweep):
    rows, elapsed = edge_sweep
    assert all(tr.frontier_stable for tr in rows.values())
    for t, tr in rows.items():
        closed = classify_nearly_gorenstein(t)
        assert tr.contains_m == closed.nearly_gorenstein, t
        assert (len(tr.generators) == 1) == closed.gorenstein, t
    assert elapsed < 300


@criterion("5", "minimal canonical generators have degree >= 2 r_n + 2")
def test_generator_degree_bound(edge_sweep):
    rows, _ = edge_sweep
    for t, tr in rows.items():
        assert tr.generators
        assert min(sum(g) for g in tr.generators) >= 2 * t.parts[-1] + 2, t


# --- 4 -------------------------------------------------------------------------


def structure_failures(t):
    """(a) at most two heavy parts, (b) gcd all-ones, (c) 2 r_i + 2 <= d below the top part, (d) part slack 2."""
    out = []
    if any(len(heavy_components(t, u)) > 2 for u in omega_points(t)):
        out.append("a")
    if omega_gcd(t) != (1,) * t.d:
        out.append("b")
    if any(2 * r + 2 > t.d for r in t.parts[:-1]):
        out.append("c")
    for k in range(1, t.n + 1):
        v = slack_witness(t, k)
        if min_part_slack(t, k) != 2 or sum(v) - 2 * sum(v[i] for i in t.part_coords(k)) != 2:
            out.append(f"d{k}")
    return out


def _structure_over(types):
    start = time.perf_counter()
    failures = {t.label(): f for t in types if (f := structure_failures(t))}
    return failures, time.perf_counter() - start


NON_GORENSTEIN = [t for t in multipartite_types(7, min_n=3) if not classify_gorenstein(t)]


@criterion("4", "canonical module structure (a)-(d), non-Gorenstein n >= 3, d <= 7 (literal)")
def test_structure_literal():
    failures, elapsed = _structure_over(NON_GORENSTEIN)
    assert elapsed < 120
    assert failures == {}, failures


@criterion("4b", "canonical module structure (a)-(d), n = 3 with r_1 >= 2 or n >= 4 (companion)")
def test_structure_restricted_scope():
    scoped = [t for t in NON_GORENSTEIN if t.n >= 4 or t.parts[0] >= 2]
    assert scoped
    failures, elapsed = _structure_over(scoped)
    assert elapsed < 120
    assert failures == {}, failures


# --- 6 -------------------------------------------------------------------------


def ng_from_definitions(g):
    """Pure components with clique numbers within one, from the brute-force clique lists."""
    n, edges = zero_based(g)
    comp_graph = nx.Graph()
    comp_graph.add_nodes_from(range(n))
    comp_graph.add_edges_from(edges)
    deltas = []
    for comp in nx.connected_components(comp_graph):
        idx = sorted(comp)
        pos = {v: i for i, v in enumerate(idx)}
        sub = [(pos[a], pos[b]) for a, b in edges if a in comp]
        sizes = {len(c) for c in maximal_cliques_brute(len(idx), sub)}
        if len(sizes) != 1:
            return False
        deltas.append(sizes.pop())
    return not deltas or max(deltas) - min(deltas) <= 1


@criterion("6", "stable set ring closed form and trace oracle, labeled perfect graphs n <= 5")
def test_stable_set_closed_form_and_oracle():
    start = time.perf_counter()
    checked = 0
    for n in range(1, 6):
        for g in labeled_graphs(n):
            if not is_perfect(g):
                continue
            checked += 1
            verdict = classify_stab(g)
            assert verdict.nearly_gorenstein == ng_from_definitions(g), g
            res = trace_oracle_stab(g)
            assert res.frontier_stable, g
            assert res.contains_m == verdict.nearly_gorenstein, g
    assert checked == 1087  # 1099 labeled graphs minus the 12 labeled 5-cycles
    assert time.perf_counter() - start < 600


# --- 7 -------------------------------------------------------------------------


@criterion("7", "a-invariant = -(least canonical degree) = -(delta + 1), perfect graphs n <= 6")
def test_a_invariant():
    start = time.perf_counter()
    for n in range(1, 7):
        for g in labeled_graphs(n):
            if not is_perfect(g):
                continue
            n0, edges = zero_based(g)
            delta = max(len(c) for c in maximal_cliques_brute(n0, edges))
            assert a_invariant(g) == -omega_min_degree(g) == -(delta + 1), g
    assert time.perf_counter() - start < 120


# --- 8 -------------------------------------------------------------------------

TRIANGLE = [(1, 2), (2, 3), (1, 3)]


@criterion("8", "spot verdicts")
def test_spot_verdicts():
    start = time.perf_counter()
    for parts, ng, gor in [((2, 3), True, False), ((2, 4), False, False), ((2, 2, 3), False, False)]:
        t = MultipartiteType(parts)
        for v in (classify_nearly_gorenstein(t), oracle_verdict(t)):
            assert (v.nearly_gorenstein, v.gorenstein) == (ng, gor), parts
    for g, ng, gor in [
        (Graph.on(5, TRIANGLE + [(4, 5)]), True, False),
        (Graph.on(4, TRIANGLE), False, False),
        (Graph.on(4, TRIANGLE + [(3, 4)]), False, False),
    ]:
        v = classify_stab(g)
        assert (v.nearly_gorenstein, v.gorenstein) == (ng, gor), g
        assert trace_oracle_stab(g).contains_m == ng
    assert time.perf_counter() - start < 2.0


# --- 9 -------------------------------------------------------------------------


@criterion("9", "is_perfect vs chromatic = clique number on every induced subgraph, n <= 7")
def test_perfectness_oracle():
    start = time.perf_counter()
    cases = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= 7:
            cases.append((h.number_of_nodes(), list(h.edges())))
    assert len(cases) == 1252
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            cases.append((n, [p for b, p in enumerate(pairs) if mask >> b & 1]))
    for n, edges in cases:
        g = Graph.on(n, [(i + 1, j + 1) for i, j in edges])
        assert is_perfect(g) == is_perfect_by_definition(n, edges), (n, edges)
    assert time.perf_counter() - start < 300
