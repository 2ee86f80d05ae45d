"""Stable set rings Stab_K(G) of perfect graphs.

A monomial x^a t^q is stored as the lattice vector (a_1, ..., a_n, q), with
coordinates in the order of ``g.vertices``. For perfect G the ring is
spanned by the x^a t^q with a >= 0 and every maximal clique summing to at
most q; the canonical module by those with a >= 1 and every clique sum
strictly below q. The ring is graded by q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import InputError, PreconditionError, ResourceError
from .graphs import Graph, connected_components, is_perfect, maximal_cliques, stable_sets
from .lattice import (
    ConstraintSystem,
    ExponentVector,
    PointSet,
    add,
    enumerate_points,
    frontier_stable,
    minimal_points,
    satisfies,
    sub,
)

FRONTIER_WINDOW = 2
#: the trace oracle enumerates the canonical module, exponential in n
ORACLE_CAP = 6


@dataclass(frozen=True)
class StabMonomial:
    a: tuple[int, ...]
    q: int

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> StabMonomial:
        return cls(tuple(v[:-1]), v[-1])

    def vector(self) -> ExponentVector:
        return self.a + (self.q,)

    @property
    def degree(self) -> int:
        return self.q


def _clique_rows(g: Graph) -> list[list[int]]:
    """Coefficients of ``q - sum_{i in C} a_i`` for every maximal clique C."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    rows = []
    for c in maximal_cliques(g).maximal_cliques:
        row = [0] * (g.n + 1)
        for v in c:
            row[pos[v]] = -1
        row[-1] = 1
        rows.append(row)
    return rows


def _unit(dim: int, i: int) -> list[int]:
    return [int(j == i) for j in range(dim)]


@lru_cache(maxsize=4096)
def stab_system(g: Graph) -> ConstraintSystem:
    dim = g.n + 1
    ge = [(_unit(dim, i), 0) for i in range(dim)] + [(row, 0) for row in _clique_rows(g)]
    return ConstraintSystem.build(dim, ge=ge, name="stable set ring")


@lru_cache(maxsize=4096)
def omega_stab_system(g: Graph) -> ConstraintSystem:
    dim = g.n + 1
    ge = [(_unit(dim, i), 1) for i in range(g.n)] + [(row, 1) for row in _clique_rows(g)]
    return ConstraintSystem.build(dim, ge=ge, name="stable set canonical module")


def _check(g: Graph, m: StabMonomial) -> None:
    if len(m.a) != g.n:
        raise InputError(f"monomial has {len(m.a)} x-exponents, graph has {g.n} vertices")


def stab_member(g: Graph, m: StabMonomial) -> bool:
    """x^a t^q lies in Stab_K(G). Assumes G perfect (normality)."""
    _check(g, m)
    return satisfies(stab_system(g), m.vector())


def omega_stab_member(g: Graph, m: StabMonomial) -> bool:
    _check(g, m)
    return satisfies(omega_stab_system(g), m.vector())


def omega_min_monomial(g: Graph) -> StabMonomial:
    """x_1 ... x_n t^(delta + 1), which lies in the canonical module and divides all of it."""
    return StabMonomial((1,) * g.n, maximal_cliques(g).delta + 1)


def a_invariant(g: Graph) -> int:
    return -(maximal_cliques(g).delta + 1)


def degree_one_generators(g: Graph) -> list[ExponentVector]:
    """x^W t for every stable W, including W empty (the element t)."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    out = []
    for w in stable_sets(g):
        a = [0] * g.n
        for v in w:
            a[pos[v]] = 1
        out.append(tuple(a) + (1,))
    return out


def default_q_bound(g: Graph) -> int:
    return 2 * maximal_cliques(g).delta + 4


@lru_cache(maxsize=256)
def omega_stab_points(g: Graph, q_bound: int) -> PointSet:
    """Canonical-module exponents with t-degree at most q_bound."""
    if g.n < 1:
        raise InputError("the stable set ring needs at least one vertex")
    grading = (0,) * g.n + (1,)
    if q_bound < 2:
        return PointSet((), q_bound, omega_stab_system(g), grading)
    lower = [1] * g.n + [0]
    upper = [q_bound - 1] * g.n + [q_bound]
    pts = enumerate_points(omega_stab_system(g), sum(upper), lower, upper, order=[g.n, *range(g.n)])
    return PointSet(pts.points, q_bound, pts.system, grading)


def omega_min_degree(g: Graph, q_bound: int | None = None) -> int:
    """Least t-degree of a canonical-module monomial, found by enumeration."""
    qb = default_q_bound(g) if q_bound is None else q_bound
    for q in range(qb + 1):
        if len(omega_stab_points(g, q)):
            return min(omega_stab_points(g, q).degrees())
    raise ResourceError(f"no canonical-module monomial up to t-degree {qb}")


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    delta: int
    pure: bool


@dataclass
class StabVerdict:
    perfect: bool | str
    components: list[ComponentReport]
    gorenstein: bool
    nearly_gorenstein: bool
    witness: dict | None = None
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {
            "perfect": self.perfect,
            "components": [
                {"vertices": list(c.vertices), "delta": c.delta, "pure": c.pure} for c in self.components
            ],
            "gorenstein": self.gorenstein,
            "nearly_gorenstein": self.nearly_gorenstein,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def _perfect_flag(g: Graph, assume_perfect: bool) -> bool | str:
    if assume_perfect:
        return "assumed"
    if not is_perfect(g):
        raise PreconditionError(
            "graph is not perfect; the ring descriptions used here require perfectness "
            "(pass assume_perfect only if the graph is known to be perfect)"
        )
    return True


def non_pure_witness(comp: Graph) -> dict:
    """Evidence that a connected component is not pure.

    Prefer an edge {i0, j0} with i0 in a maximum clique and j0 in none. Such
    an edge can fail to exist (two triangles joined by an edge), in which
    case a smaller maximal clique is reported instead.
    """
    rep = maximal_cliques(comp)
    in_max = set().union(*(c for c in rep.maximal_cliques if len(c) == rep.delta))
    for i, j in sorted(comp.edges):
        for i0, j0 in ((i, j), (j, i)):
            if i0 in in_max and j0 not in in_max:
                return {"kind": "non-pure-edge", "edge": [i0, j0], "delta": rep.delta}
    small = next(c for c in rep.maximal_cliques if len(c) < rep.delta)
    return {"kind": "small-maximal-clique", "clique": sorted(small), "delta": rep.delta}


def classify_stab(g: Graph, assume_perfect: bool = False) -> StabVerdict:
    perfect = _perfect_flag(g, assume_perfect)
    reports = []
    witness = None
    for comp in connected_components(g):
        rep = maximal_cliques(comp)
        reports.append(ComponentReport(comp.vertices, rep.delta, rep.pure))
        if not rep.pure and witness is None:
            witness = non_pure_witness(comp) | {"component": list(comp.vertices)}
    gorenstein = maximal_cliques(g).pure
    all_pure = all(r.pure for r in reports)
    deltas = [r.delta for r in reports]
    gap_ok = not deltas or max(deltas) - min(deltas) <= 1
    if all_pure and not gap_ok:
        lo = min(reports, key=lambda r: r.delta)
        hi = max(reports, key=lambda r: r.delta)
        witness = {
            "kind": "delta-gap",
            "components": [list(lo.vertices), list(hi.vertices)],
            "deltas": [lo.delta, hi.delta],
        }
    return StabVerdict(perfect, reports, gorenstein, all_pure and gap_ok, witness)


@dataclass
class StabTraceResult:
    bound: int
    frontier_stable: bool
    generators: tuple[ExponentVector, ...]
    covered: dict[ExponentVector, tuple[ExponentVector, ExponentVector]] = field(default_factory=dict)
    uncovered: dict[ExponentVector, list[tuple[ExponentVector, ExponentVector]]] = field(default_factory=dict)

    @property
    def contains_m(self) -> bool:
        return not self.uncovered

    @property
    def confidence(self) -> str:
        return "frontier-stable" if self.frontier_stable else "bounded-confidence"

    def cofactors(self) -> list[ExponentVector]:
        return [f for _, f in self.covered.values()]

    def certificate(self) -> dict:
        return {
            "q_bound": self.bound,
            "frontier_stable": self.frontier_stable,
            "confidence": self.confidence,
            "omega_generators": [list(g) for g in self.generators],
            "covered": [
                {"generator": list(s), "omega": list(w), "cofactor": list(f)}
                for s, (w, f) in sorted(self.covered.items())
            ],
            "uncovered": [
                {
                    "generator": list(s),
                    "refutations": [{"omega": list(w), "fails_on": list(h)} for w, h in fails],
                }
                for s, fails in sorted(self.uncovered.items())
            ],
        }


def omega_stab_generators(g: Graph, q_bound: int | None = None) -> tuple[PointSet, bool]:
    qb = default_q_bound(g) if q_bound is None else q_bound
    pts = omega_stab_points(g, qb)
    mins = minimal_points(pts, degree_one_generators(g))
    return mins, frontier_stable(mins, FRONTIER_WINDOW)


def trace_oracle_stab(g: Graph, q_bound: int | None = None, cap: int = ORACLE_CAP) -> StabTraceResult:
    """Decide whether every x^W t lies in omega * omega^{-1} by brute force.

    Same scheme as the edge-ring oracle: x^W t is in the trace iff
    x^W t / w is anti-canonical for some minimal canonical generator w, and a
    Laurent monomial is anti-canonical iff it multiplies every minimal
    generator into the ring.
    """
    if g.n > cap:
        raise ResourceError(f"the stable-set trace oracle is capped at {cap} vertices", cap=cap)
    mins, stable = omega_stab_generators(g, q_bound)
    ring = stab_system(g)
    result = StabTraceResult(mins.enumeration_bound, stable, mins.points)
    for s in degree_one_generators(g):
        fails = []
        for w in mins:
            f = sub(s, w)
            bad = next((h for h in mins if not satisfies(ring, add(f, h))), None)
            if bad is None:
                result.covered[s] = (w, f)
                break
            fails.append((w, bad))
        else:
            result.uncovered[s] = fails
    return result
