"""Finite posets and the poset-level nearly Gorenstein criterion for Hibi rings.

The Hibi ring of the distributive lattice of order ideals of P is nearly
Gorenstein exactly when P splits into pure connected components whose ranks
differ pairwise by at most one; it is Gorenstein exactly when P is pure.
Ranks count cover steps, so a one-element component has rank 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import InputError, PreconditionError


@dataclass(frozen=True)
class Poset:
    """Strict order ``less`` (transitively closed) on the labels ``elements``."""

    elements: tuple[int, ...]
    less: frozenset[tuple[int, int]]

    @classmethod
    def from_relations(cls, size: int, relations: Iterable[Iterable[int]], labels: Iterable[int] | None = None) -> Poset:
        elems = tuple(range(1, size + 1)) if labels is None else tuple(labels)
        es = set(elems)
        closure: set[tuple[int, int]] = set()
        for rel in relations:
            a, b = (int(x) for x in rel)
            if a not in es or b not in es:
                raise InputError(f"relation ({a}, {b}) uses an element outside the poset")
            if a != b:
                closure.add((a, b))
        # Warshall closure; cycles show up as a < a
        for k in elems:
            below = [a for a in elems if (a, k) in closure]
            above = [b for b in elems if (k, b) in closure]
            for a in below:
                for b in above:
                    closure.add((a, b))
        if any((a, a) in closure for a in elems):
            raise InputError("relations contain a cycle; not a partial order")
        return cls(elems, frozenset(closure))

    @classmethod
    def chains(cls, *lengths: int) -> Poset:
        """Disjoint union of chains with the given numbers of elements."""
        rels, labels, nxt = [], [], 1
        for m in lengths:
            block = list(range(nxt, nxt + m))
            labels += block
            rels += list(zip(block, block[1:]))
            nxt += m
        return cls.from_relations(len(labels), rels, labels)

    @property
    def size(self) -> int:
        return len(self.elements)

    def covers(self) -> set[tuple[int, int]]:
        return {
            (a, b)
            for a, b in self.less
            if not any((a, c) in self.less and (c, b) in self.less for c in self.elements)
        }

    def restrict(self, subset: Iterable[int]) -> Poset:
        keep = tuple(sorted(set(subset)))
        ks = set(keep)
        return Poset(keep, frozenset((a, b) for a, b in self.less if a in ks and b in ks))


def components(p: Poset) -> list[Poset]:
    """Connected components of the comparability graph."""
    adj = {x: set() for x in p.elements}
    for a, b in p.less:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    out = []
    for x in p.elements:
        if x in seen:
            continue
        comp, stack = [], [x]
        seen.add(x)
        while stack:
            y = stack.pop()
            comp.append(y)
            for z in adj[y] - seen:
                seen.add(z)
                stack.append(z)
        out.append(p.restrict(comp))
    return out


def maximal_chain_lengths(p: Poset) -> set[int]:
    """Lengths (in cover steps) of all maximal chains."""
    up: dict[int, list[int]] = {x: [] for x in p.elements}
    for a, b in p.covers():
        up[a].append(b)
    minimal = [x for x in p.elements if not any((y, x) in p.less for y in p.elements)]
    lengths: set[int] = set()

    def walk(x: int, steps: int) -> None:
        if not up[x]:
            lengths.add(steps)
        for y in up[x]:
            walk(y, steps + 1)

    for x in minimal:
        walk(x, 0)
    return lengths


def is_pure_component(p: Poset) -> tuple[bool, int]:
    if p.size and len(components(p)) != 1:
        raise PreconditionError("is_pure_component expects a connected poset")
    lengths = maximal_chain_lengths(p)
    if not lengths:
        return True, 0
    return len(lengths) == 1, max(lengths)


def hibi_gorenstein(p: Poset) -> bool:
    """P pure: all maximal chains of P have the same length."""
    return len(maximal_chain_lengths(p)) <= 1


def hibi_nearly_gorenstein(p: Poset) -> bool:
    ranks = []
    for c in components(p):
        pure, rank = is_pure_component(c)
        if not pure:
            return False
        ranks.append(rank)
    return not ranks or max(ranks) - min(ranks) <= 1


def bipartite_poset(r1: int, r2: int) -> Poset:
    """Two disjoint chains with r1 - 1 and r2 - 1 elements (the poset behind K_{r1,r2})."""
    if not 1 <= r1 <= r2:
        raise InputError(f"expected 1 <= r1 <= r2, got ({r1}, {r2})")
    return Poset.chains(r1 - 1, r2 - 1)


def parse_poset(text: str) -> Poset:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid poset JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "size" not in data:
        raise InputError('poset JSON needs a "size" field')
    try:
        size = int(data["size"])
        rels = [tuple(int(x) for x in r) for r in data.get("relations", [])]
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed poset JSON: {exc}") from exc
    if size < 0:
        raise InputError("poset size must be nonnegative")
    bad = [r for r in rels if len(r) != 2]
    if bad:
        raise InputError(f"relations must be pairs, got {list(bad[0])}")
    return Poset.from_relations(size, rels)


def load_poset(path: str | Path) -> Poset:
    return parse_poset(Path(path).read_text())
