"""Exact lattice points of linear + parity constraint systems.

Monomials are handled throughout as exponent vectors, plain tuples of ints.
A :class:`ConstraintSystem` describes a monoid or module of lattice points by
homogeneous-style linear inequalities/equalities together with mod-2 parity
conditions; :func:`enumerate_points` lists every solution inside a box and
under a total-degree bound, and :func:`minimal_points` extracts the
module-minimal ones relative to a set of monoid generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, ResourceError

ExponentVector = tuple[int, ...]

#: default cap on the number of box points under the degree bound
DEFAULT_SEARCH_CAP = 20_000_000

GE = ">="
EQ = "="


def degree(u: Sequence[int]) -> int:
    return sum(u)


def add(u: Sequence[int], v: Sequence[int]) -> ExponentVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> ExponentVector:
    return tuple(a - b for a, b in zip(u, v))


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: ExponentVector
    rhs: int
    relation: str = GE

    def holds(self, u: Sequence[int]) -> bool:
        lhs = sum(c * x for c, x in zip(self.coeffs, u))
        return lhs >= self.rhs if self.relation == GE else lhs == self.rhs


@dataclass(frozen=True)
class ParityConstraint:
    coeffs: ExponentVector
    residue: int

    def holds(self, u: Sequence[int]) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, u)) % 2 == self.residue


@dataclass(frozen=True)
class ConstraintSystem:
    """Conjunction of linear constraints ``c.u >= rhs`` / ``c.u == rhs`` and
    parity constraints ``c.u = residue (mod 2)`` in a fixed dimension."""

    dimension: int
    linear: tuple[LinearConstraint, ...] = ()
    parity: tuple[ParityConstraint, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.dimension < 1:
            raise InputError(f"dimension must be positive, got {self.dimension}")
        for c in self.linear:
            if len(c.coeffs) != self.dimension:
                raise InputError(
                    f"constraint has {len(c.coeffs)} coefficients, expected {self.dimension}"
                )
            if c.relation not in (GE, EQ):
                raise InputError(f"unknown relation {c.relation!r}")
        for p in self.parity:
            if len(p.coeffs) != self.dimension:
                raise InputError(
                    f"parity constraint has {len(p.coeffs)} coefficients, expected {self.dimension}"
                )
            if p.residue not in (0, 1):
                raise InputError(f"parity residue must be 0 or 1, got {p.residue}")

    @classmethod
    def build(
        cls,
        dimension: int,
        ge: Iterable[tuple[Sequence[int], int]] = (),
        eq: Iterable[tuple[Sequence[int], int]] = (),
        parity: Iterable[tuple[Sequence[int], int]] = (),
        name: str = "",
    ) -> ConstraintSystem:
        linear = [LinearConstraint(tuple(c), int(r), GE) for c, r in ge]
        linear += [LinearConstraint(tuple(c), int(r), EQ) for c, r in eq]
        par = tuple(ParityConstraint(tuple(c), int(r) % 2) for c, r in parity)
        return cls(dimension, tuple(linear), par, name)

    def extended(
        self,
        ge: Iterable[tuple[Sequence[int], int]] = (),
        eq: Iterable[tuple[Sequence[int], int]] = (),
    ) -> ConstraintSystem:
        extra = [LinearConstraint(tuple(c), int(r), GE) for c, r in ge]
        extra += [LinearConstraint(tuple(c), int(r), EQ) for c, r in eq]
        return ConstraintSystem(self.dimension, self.linear + tuple(extra), self.parity, self.name)

    def as_inequalities(self) -> list[tuple[ExponentVector, int]]:
        """All linear constraints rewritten as ``c.u >= rhs`` (equalities split in two)."""
        out = []
        for c in self.linear:
            out.append((c.coeffs, c.rhs))
            if c.relation == EQ:
                out.append((tuple(-x for x in c.coeffs), -c.rhs))
        return out


def satisfies(system: ConstraintSystem, u: Sequence[int]) -> bool:
    if len(u) != system.dimension:
        raise InputError(f"vector of length {len(u)} used with a system of dimension {system.dimension}")
    return all(c.holds(u) for c in system.linear) and all(p.holds(u) for p in system.parity)


@dataclass(frozen=True)
class PointSet:
    """Lattice points, sorted lexicographically, complete up to ``enumeration_bound``."""

    points: tuple[ExponentVector, ...]
    enumeration_bound: int
    system: ConstraintSystem | None = None
    #: weights defining the degree; None means the coordinate sum
    grading: ExponentVector | None = None
    _index: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        if not self._index:
            object.__setattr__(self, "_index", frozenset(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, u) -> bool:
        return tuple(u) in self._index

    def degree_of(self, u: Sequence[int]) -> int:
        if self.grading is None:
            return degree(u)
        return sum(w * x for w, x in zip(self.grading, u))

    def degrees(self) -> list[int]:
        return [self.degree_of(p) for p in self.points]


def count_box_points(lower: Sequence[int], upper: Sequence[int], degree_bound: int) -> int:
    """Number of integer points of the box with coordinate sum <= degree_bound."""
    budget = degree_bound - sum(lower)
    if budget < 0:
        return 0
    ways = [1] + [0] * budget  # ways[s]: points using s units above the lower corner
    for lo, hi in zip(lower, upper):
        width = hi - lo
        new = [0] * (budget + 1)
        run = 0
        for s in range(budget + 1):
            run += ways[s]
            if s - width - 1 >= 0:
                run -= ways[s - width - 1]
            new[s] = run
        ways = new
    return sum(ways)


def enumerate_points(
    system: ConstraintSystem,
    degree_bound: int,
    lower_box: Sequence[int],
    upper_box: Sequence[int],
    cap: int = DEFAULT_SEARCH_CAP,
    order: Sequence[int] | None = None,
) -> PointSet:
    """Every point u with ``lower_box <= u <= upper_box``, ``sum(u) <= degree_bound``
    and ``satisfies(system, u)``, in lexicographic order.

    Depth-first over coordinates. At each node every inequality is tested
    against the best value the unassigned coordinates could still contribute
    under the remaining degree budget (a fractional-knapsack bound), so
    infeasible subtrees are cut early. ``order`` is the coordinate order of
    the search (a permutation); it changes speed, never the result.
    """
    if order is not None:
        order = list(order)
        if sorted(order) != list(range(system.dimension)):
            raise InputError(f"order must be a permutation of 0..{system.dimension - 1}")
        perm_sys = ConstraintSystem(
            system.dimension,
            tuple(LinearConstraint(tuple(c.coeffs[i] for i in order), c.rhs, c.relation) for c in system.linear),
            tuple(ParityConstraint(tuple(p.coeffs[i] for i in order), p.residue) for p in system.parity),
            system.name,
        )
        inner = enumerate_points(
            perm_sys, degree_bound, [lower_box[i] for i in order], [upper_box[i] for i in order], cap
        )
        back = [0] * len(order)
        for pos, i in enumerate(order):
            back[i] = pos
        pts = sorted(tuple(p[back[i]] for i in range(len(order))) for p in inner)
        return PointSet(tuple(pts), degree_bound, system)
    d = system.dimension
    lower = [int(x) for x in lower_box]
    upper = [int(x) for x in upper_box]
    if len(lower) != d or len(upper) != d:
        raise InputError("box dimensions do not match the system")
    if degree_bound < 0:
        raise InputError(f"degree_bound must be >= 0, got {degree_bound}")
    if any(lo > hi for lo, hi in zip(lower, upper)):
        raise InputError("lower_box must be <= upper_box componentwise")
    # coordinates above the degree budget are unreachable anyway
    slack = degree_bound - sum(lower)
    if slack < 0:
        return PointSet((), degree_bound, system)
    upper = [min(hi, lo + slack) for lo, hi in zip(lower, upper)]
    size = count_box_points(lower, upper, degree_bound)
    if size > cap:
        raise ResourceError(
            f"search space of {size} box points exceeds the cap of {cap}; lower the bound",
            cap=cap,
        )

    ineqs = system.as_inequalities()
    # per constraint and depth: constant part from lower corners, and the
    # positive coefficients of the tail sorted for the greedy bound
    tails = []
    for coeffs, _ in ineqs:
        per_depth = []
        for i in range(d + 1):
            base = sum(coeffs[j] * lower[j] for j in range(i, d))
            pos = sorted(
                ((coeffs[j], upper[j] - lower[j]) for j in range(i, d) if coeffs[j] > 0),
                reverse=True,
            )
            per_depth.append((base, pos))
        tails.append(per_depth)
    lower_tail = [sum(lower[i:]) for i in range(d + 1)]

    def best_tail(ci: int, depth: int, budget: int) -> int:
        base, pos = tails[ci][depth]
        for c, width in pos:
            if budget <= 0:
                break
            take = width if width < budget else budget
            base += c * take
            budget -= take
        return base

    parities = system.parity
    out: list[ExponentVector] = []
    u = [0] * d
    partial = [0] * len(ineqs)

    def dfs(i: int, deg: int) -> None:
        if i == d:
            if all(p.holds(u) for p in parities):
                out.append(tuple(u))
            return
        lo = lower[i]
        hi = min(upper[i], lo + degree_bound - deg - lower_tail[i])
        for x in range(lo, hi + 1):
            budget = degree_bound - deg - x - lower_tail[i + 1]
            ok = True
            stop = False
            for ci, (coeffs, rhs) in enumerate(ineqs):
                val = partial[ci] + coeffs[i] * x
                if val + best_tail(ci, i + 1, budget) < rhs:
                    ok = False
                    if coeffs[i] <= 0:
                        stop = True  # increasing x can only make this worse
                        break
            if stop:
                break
            if not ok:
                continue
            u[i] = x
            for ci, (coeffs, _) in enumerate(ineqs):
                partial[ci] += coeffs[i] * x
            dfs(i + 1, deg + x)
            for ci, (coeffs, _) in enumerate(ineqs):
                partial[ci] -= coeffs[i] * x
        u[i] = 0

    dfs(0, 0)
    return PointSet(tuple(out), degree_bound, system)


def minimal_points(points: PointSet, monoid_generators: Sequence[Sequence[int]]) -> PointSet:
    """Points p of the set such that p - g lies outside the set for every generator g.

    For a module enumerated completely up to its bound these are exactly the
    minimal module generators of degree <= bound: any p - g of smaller degree
    that belonged to the module would have been enumerated.
    """
    gens = [tuple(g) for g in monoid_generators]
    if not gens:
        raise InputError("monoid_generators must be nonempty")
    if any(min(g) < 0 or not any(g) for g in gens):
        raise InputError("monoid generators must be nonnegative and nonzero")
    if any(min(p) < 0 for p in points):
        raise InputError("minimal_points expects nonnegative points")
    keep = tuple(p for p in points if all(sub(p, g) not in points for g in gens))
    return PointSet(keep, points.enumeration_bound, points.system, points.grading)


def frontier_stable(points_by_degree: PointSet, window: int) -> bool:
    """True iff no point of the (minimal) set sits in the top ``window`` degrees of its bound."""
    bound = points_by_degree.enumeration_bound
    if window < 1 or window >= bound:
        raise InputError(f"window must satisfy 1 <= window < bound ({bound}), got {window}")
    return all(points_by_degree.degree_of(p) <= bound - window for p in points_by_degree)
