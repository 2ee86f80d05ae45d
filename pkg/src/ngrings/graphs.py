"""Simple graphs: components, maximal cliques, stable sets, perfectness.

Vertices are positive integer labels (``1..n`` for graphs read from files);
components keep the labels of the graph they came from.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .errors import InputError, ResourceError

#: perfectness is decided by exhaustive odd hole / antihole search up to this size
PERFECT_CAP = 12
#: stable-set listing is exponential; refuse beyond this many vertices
STABLE_SET_CAP = 20


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        for i, j in self.edges:
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if i > j:
                raise InputError(f"edge ({i}, {j}) is not normalized")
            if i not in vs or j not in vs:
                raise InputError(f"edge ({i}, {j}) uses a vertex outside the graph")

    @classmethod
    def on(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
        """Graph on ``1..n``; duplicate edges are merged, loops rejected."""
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        norm = set()
        for e in edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge ({i}, {j}) out of range 1..{n}")
            norm.add((min(i, j), max(i, j)))
        return cls(tuple(range(1, n + 1)), frozenset(norm))

    @classmethod
    def from_bitmask(cls, n: int, mask: int) -> Graph:
        """Graph on ``1..n`` whose edges are the set bits of ``mask`` over ``combinations(1..n, 2)``."""
        pairs = list(combinations(range(1, n + 1), 2))
        return cls.on(n, [p for b, p in enumerate(pairs) if mask >> b & 1])

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = tuple(sorted(set(vertices)))
        ks = set(keep)
        return Graph(keep, frozenset(e for e in self.edges if e[0] in ks and e[1] in ks))

    def complement(self) -> Graph:
        all_pairs = set(combinations(self.vertices, 2))
        return Graph(self.vertices, frozenset(all_pairs - self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": list(self.vertices), "edges": sorted(list(e) for e in self.edges)}


@dataclass(frozen=True)
class CliqueReport:
    maximal_cliques: tuple[frozenset[int], ...]
    delta: int
    pure: bool


def connected_components(g: Graph) -> list[Graph]:
    adj = g.neighbors()
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(g.induced(comp))
    return comps


@lru_cache(maxsize=8192)
def maximal_cliques(g: Graph) -> CliqueReport:
    """All maximal cliques by Bron-Kerbosch with pivoting.

    The pivot is the vertex of P | X with most neighbours in P, ties broken by
    the smallest label; the output is sorted by (size descending, labels).
    """
    adj = g.neighbors()
    found: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = min(p | x, key=lambda u: (-len(p & adj[u]), u))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if g.vertices:
        expand(set(), set(g.vertices), set())
    cliques = tuple(sorted(found, key=lambda c: (-len(c), sorted(c))))
    delta = max((len(c) for c in cliques), default=0)
    return CliqueReport(cliques, delta, all(len(c) == delta for c in cliques))


def stable_sets(g: Graph) -> list[frozenset[int]]:
    """Every stable subset of the vertex set, the empty set first."""
    if g.n > STABLE_SET_CAP:
        raise ResourceError(f"stable set listing is capped at {STABLE_SET_CAP} vertices", cap=STABLE_SET_CAP)
    adj = g.neighbors()
    verts = list(g.vertices)
    out: list[frozenset[int]] = []

    def grow(start: int, current: list[int], blocked: set[int]) -> None:
        out.append(frozenset(current))
        for idx in range(start, len(verts)):
            v = verts[idx]
            if v not in blocked:
                current.append(v)
                grow(idx + 1, current, blocked | adj[v])
                current.pop()

    grow(0, [], set())
    return sorted(out, key=lambda w: (len(w), sorted(w)))


def find_odd_hole(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of odd length >= 5, or None.

    Induced paths are grown from their smallest vertex; a path closes into a
    hole when the new vertex sees the start and nothing else on the path.
    """
    adj = g.neighbors()
    for s in g.vertices:
        path = [s]
        on_path = {s}

        def extend() -> tuple[int, ...] | None:
            last = path[-1]
            for v in sorted(adj[last]):
                if v <= s or v in on_path:
                    continue
                # v may only touch `last` and possibly the start among path vertices
                if any(v in adj[p] for p in path[1:-1]):
                    continue
                if len(path) >= 2 and v in adj[s]:
                    if len(path) + 1 >= 5 and (len(path) + 1) % 2 == 1:
                        return tuple(path) + (v,)
                    continue
                path.append(v)
                on_path.add(v)
                hit = extend()
                path.pop()
                on_path.discard(v)
                if hit:
                    return hit
            return None

        hit = extend()
        if hit:
            return hit
    return None


def is_perfect(g: Graph, cap: int = PERFECT_CAP) -> bool:
    """Perfectness via the strong perfect graph theorem: no odd hole in the graph or its complement."""
    if g.n > cap:
        raise ResourceError(
            f"perfectness test is capped at {cap} vertices; pass assume_perfect to skip it", cap=cap
        )
    return find_odd_hole(g) is None and find_odd_hole(g.complement()) is None


def parse_graph(text: str) -> Graph:
    """Read the edge-list text format (first line ``n``, then ``i j`` lines) or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid graph JSON at line {exc.lineno}: {exc.msg}") from exc
        if not isinstance(data, dict) or "n" not in data:
            raise InputError('graph JSON needs an "n" field')
        try:
            return Graph.on(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed graph JSON: {exc}") from exc

    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise InputError("empty graph file")
    no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise InputError(f"line {no}: expected the vertex count, got {first!r}") from None
    edges = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"line {no}: expected two vertex labels, got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {no}: vertex labels must be integers, got {ln!r}") from None
        if i == j:
            raise InputError(f"line {no}: loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"line {no}: edge ({i}, {j}) out of range 1..{n}")
        edges.append((i, j))
    return Graph.on(n, edges)


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())
