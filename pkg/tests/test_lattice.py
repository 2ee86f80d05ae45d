from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ngrings.edge_ring import MultipartiteType, edge_vectors, omega_system, ring_system
from ngrings.errors import InputError, ResourceError
from ngrings.lattice import (
    ConstraintSystem,
    PointSet,
    count_box_points,
    enumerate_points,
    frontier_stable,
    minimal_points,
    satisfies,
    sub,
)
from oracles import box_scan


def nonneg_even(d):
    return ConstraintSystem.build(d, ge=[([int(i == j) for j in range(d)], 0) for i in range(d)], parity=[([1] * d, 0)])


def test_satisfies_direct():
    sys2 = nonneg_even(2)
    assert satisfies(sys2, (1, 1))
    assert not satisfies(sys2, (1, 0))


def test_satisfies_dimension_mismatch():
    with pytest.raises(InputError):
        satisfies(nonneg_even(2), (1, 1, 0))


def test_ring_inequalities_k12():
    # 2 * (u_2 + u_3) = 4 exceeds the total 2
    assert not satisfies(ring_system(MultipartiteType((1, 2))), (0, 1, 1))


def test_bad_systems_rejected():
    with pytest.raises(InputError):
        ConstraintSystem.build(2, ge=[([1, 0, 0], 0)])
    with pytest.raises(InputError):
        ConstraintSystem.build(0)


def test_enumerate_k12_ring():
    pts = enumerate_points(ring_system(MultipartiteType((1, 2))), 2, [0, 0, 0], [2, 2, 2])
    assert pts.points == ((0, 0, 0), (1, 0, 1), (1, 1, 0))


def test_enumerate_matches_exhaustive_scan_k12():
    rs = ring_system(MultipartiteType((1, 2)))
    expected = box_scan(lambda u: satisfies(rs, u), [0] * 3, [2] * 3, 2)
    assert list(enumerate_points(rs, 2, [0] * 3, [2] * 3).points) == expected


def test_enumerate_origin_only():
    rs = ring_system(MultipartiteType((2, 2, 3)))
    assert enumerate_points(rs, 0, [0] * 7, [0] * 7).points == ((0,) * 7,)
    om = omega_system(MultipartiteType((2, 2, 3)))
    assert enumerate_points(om, 0, [0] * 7, [0] * 7).points == ()


def test_enumerate_contains_k223_omega_point():
    t = MultipartiteType((2, 2, 3))
    pts = enumerate_points(omega_system(t), 8, [1] * 7, [8] * 7)
    assert (1, 1, 1, 2, 1, 1, 1) in pts


def test_enumerate_cap():
    with pytest.raises(ResourceError) as info:
        enumerate_points(nonneg_even(6), 60, [0] * 6, [60] * 6, cap=1000)
    assert info.value.cap == 1000


def test_enumerate_argument_checks():
    s = nonneg_even(2)
    with pytest.raises(InputError):
        enumerate_points(s, -1, [0, 0], [1, 1])
    with pytest.raises(InputError):
        enumerate_points(s, 2, [2, 0], [1, 1])
    with pytest.raises(InputError):
        enumerate_points(s, 2, [0, 0], [1, 1], order=[0, 0])


def test_count_box_points():
    assert count_box_points([0, 0], [2, 2], 2) == 6
    assert count_box_points([1, 1, 1], [9, 9, 9], 3) == 1
    assert count_box_points([1], [5], 0) == 0


def test_minimal_points_additive():
    ps = PointSet(((0, 2), (2, 0), (2, 2)), 4)
    assert minimal_points(ps, [(2, 0), (0, 2)]).points == ((0, 2), (2, 0))


def test_minimal_points_singleton():
    ps = PointSet(((3, 1),), 4)
    assert minimal_points(ps, [(1, 1)]).points == ((3, 1),)


def test_minimal_points_k111_omega():
    # K_{1,1,1}: R = K[x1x2, x1x3, x2x3] is a polynomial ring, so the canonical
    # module is principal, generated by the product of the three generators
    t = MultipartiteType((1, 1, 1))
    pts = enumerate_points(omega_system(t), 10, [1] * 3, [10] * 3)
    assert minimal_points(pts, edge_vectors(t)).points == ((2, 2, 2),)


def test_minimal_points_require_generators():
    with pytest.raises(InputError):
        minimal_points(PointSet(((1,),), 1), [])
    with pytest.raises(InputError):
        minimal_points(PointSet(((1,),), 1), [(0,)])


def test_frontier():
    mins = PointSet(((1, 1), (2, 2)), 8)
    assert frontier_stable(mins, 2)
    assert not frontier_stable(PointSet(((4, 4),), 8), 2)
    with pytest.raises(InputError):
        frontier_stable(mins, 8)


def test_frontier_k23_ring_monoid():
    t = MultipartiteType((2, 3))
    ring = enumerate_points(ring_system(t), 6, [0] * 5, [6] * 5)
    nonzero = PointSet(tuple(p for p in ring if any(p)), 6, ring.system)
    mins = minimal_points(nonzero, edge_vectors(t))
    assert set(mins.points) == set(edge_vectors(t))
    assert frontier_stable(mins, 2)


# --- properties ---------------------------------------------------------------

small_system = st.integers(1, 3).flatmap(
    lambda d: st.tuples(
        st.just(d),
        st.lists(st.tuples(st.lists(st.integers(-2, 2), min_size=d, max_size=d), st.integers(-3, 3)), max_size=3),
        st.lists(st.tuples(st.lists(st.integers(0, 1), min_size=d, max_size=d), st.integers(0, 1)), max_size=1),
        st.integers(0, 6),
    )
)


@settings(max_examples=150, deadline=None)
@given(small_system)
def test_enumerate_equals_box_scan(case):
    d, ge, par, bound = case
    system = ConstraintSystem.build(d, ge=ge, parity=par)
    lower, upper = [-1] * d, [3] * d
    got = enumerate_points(system, bound, lower, upper)
    assert list(got.points) == box_scan(lambda u: satisfies(system, u), lower, upper, bound)
    assert all(satisfies(system, p) for p in got)


@settings(max_examples=60, deadline=None)
@given(small_system, st.integers(0, 3))
def test_enumerate_monotone_in_bound(case, extra):
    d, ge, par, bound = case
    system = ConstraintSystem.build(d, ge=ge, parity=par)
    small = enumerate_points(system, bound, [0] * d, [4] * d)
    big = enumerate_points(system, bound + extra, [0] * d, [4] * d)
    assert set(small.points) <= set(big.points)


@settings(max_examples=60, deadline=None)
@given(small_system, st.permutations([0, 1, 2]))
def test_search_order_does_not_change_result(case, perm):
    d, ge, par, bound = case
    system = ConstraintSystem.build(d, ge=ge, parity=par)
    order = [i for i in perm if i < d]
    assert enumerate_points(system, bound, [0] * d, [4] * d, order=order) == enumerate_points(
        system, bound, [0] * d, [4] * d
    )


@pytest.mark.parametrize("parts", [(1, 1, 2), (1, 2, 2), (2, 2, 3)])
def test_every_point_decomposes_into_minimal_plus_generators(parts):
    t = MultipartiteType(parts)
    pts = enumerate_points(omega_system(t), 2 * t.d, [1] * t.d, [2 * t.d] * t.d)
    gens = edge_vectors(t)
    mins = set(minimal_points(pts, gens).points)
    # walk downwards by generators while staying inside the set; some minimal point must be reached
    for p in pts:
        seen, queue, hit = {p}, deque([p]), False
        while queue and not hit:
            q = queue.popleft()
            if q in mins:
                hit = True
                break
            for g in gens:
                r = sub(q, g)
                if r in pts and r not in seen:
                    seen.add(r)
                    queue.append(r)
        assert hit, p
