import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalpq.errors import (
    BadShape,
    BoundViolation,
    GenusTooSmall,
    InvalidContext,
    NotASemigroup,
    NotClosed,
    NotDownClosed,
    PTooSmall,
    WrongContext,
)
from nodalpq.semigroup import (
    LatticeSet,
    NumericalSemigroup,
    PQPair,
    brute_force_is_semigroup,
    buchweitz_family,
    buchweitz_test,
    close_check,
    delta_band_member,
    delta_points,
    down_closure,
    enumerate_down_closed,
    gaps_pq,
    hl_union,
    lattice_of_semigroup,
    lminus_region,
    rectangle_points,
    region_lattice,
    semigroup_from_lattice,
    sg_stats,
)


def pairs(limit):
    return [PQPair(p, q) for p in range(2, limit + 1) for q in range(p + 1, limit + 1) if math.gcd(p, q) == 1]


def delta1(ctx):
    return frozenset(pt for _, pt in gaps_pq(ctx))


def test_context_validation():
    assert PQPair(3, 5).conductor == 8 and PQPair(3, 5).gap_count == 4
    for bad in ((4, 6), (5, 3), (1, 2)):
        with pytest.raises(InvalidContext):
            PQPair(*bad)


def test_gaps_pq_examples():
    assert gaps_pq(PQPair(3, 5)) == [(1, (2, 0)), (2, (0, 1)), (4, (1, 0)), (7, (0, 0))]
    assert gaps_pq(PQPair(2, 3)) == [(1, (0, 0))]
    assert [g for g, _ in gaps_pq(PQPair(4, 7))] == [1, 2, 3, 5, 6, 9, 10, 13, 17]


@pytest.mark.parametrize("ctx", pairs(20), ids=str)
def test_gap_bijection(ctx):
    gaps = gaps_pq(ctx)
    assert len(gaps) == ctx.gap_count
    assert len({pt for _, pt in gaps}) == len(gaps)
    H = NumericalSemigroup.from_generators([ctx.p, ctx.q])
    assert [g for g, _ in gaps] == list(H.gaps)
    for g, pt in gaps:
        assert ctx.point_of(g) == pt and ctx.gap_of(pt) == g


def test_lattice_set_validation():
    ctx = PQPair(3, 5)
    with pytest.raises(NotDownClosed):
        LatticeSet(ctx, {(1, 0)})
    with pytest.raises(BoundViolation):
        LatticeSet(ctx, {(0, 0), (0, 1), (1, 1)})
    L = LatticeSet.from_corners(PQPair(5, 7), [(2, 0), (0, 1)])
    assert L.maximal == [(0, 1), (2, 0)]
    assert L.corners == [(0, 1), (2, 0)]
    assert LatticeSet.from_json(L.to_json()) == L


def test_close_check_examples():
    ctx = PQPair(3, 5)
    assert close_check(LatticeSet(ctx, rectangle_points(1, 0)))[0]
    assert close_check(LatticeSet(ctx, delta1(ctx)))[0]
    # corner on the line pX + qY = c - 2 with both coordinates nonzero
    ctx = PQPair(5, 7)
    assert ctx.gap_of((3, 1)) == 1
    ok, bad = close_check(LatticeSet(ctx, rectangle_points(3, 1)))
    assert not ok and bad is not None


def test_semigroup_from_lattice_examples():
    ctx = PQPair(3, 5)
    assert semigroup_from_lattice(LatticeSet(ctx, {(0, 0)})).gaps == (1, 2, 4)
    H = semigroup_from_lattice(LatticeSet(ctx, rectangle_points(1, 0)))
    assert H.gaps == (1, 2) and H.min_generators() == [3, 4, 5]
    assert semigroup_from_lattice(LatticeSet(ctx)) == NumericalSemigroup.from_generators([3, 5])
    with pytest.raises(NotClosed) as info:
        semigroup_from_lattice(LatticeSet(ctx, rectangle_points(0, 1)))
    assert info.value.violation is not None


@pytest.mark.parametrize("ctx", pairs(8), ids=str)
def test_close_check_matches_oracle_exhaustively(ctx):
    for L in enumerate_down_closed(ctx, delta1(ctx)):
        corner = close_check(L)[0]
        assert corner == close_check(L, corners_only=False)[0]
        assert corner == brute_force_is_semigroup(ctx, L.points)
        if corner:
            assert semigroup_from_lattice(L).genus == ctx.gap_count - len(L)


def random_down_closed(rng, ctx):
    pts = sorted(delta1(ctx))
    chosen = rng.sample(pts, rng.randint(0, min(len(pts), 4)))
    return LatticeSet(ctx, down_closure(chosen))


def test_close_check_matches_oracle_random():
    rng = random.Random(20240513)
    ctxs = pairs(13)
    for _ in range(500):
        ctx = rng.choice(ctxs)
        L = random_down_closed(rng, ctx)
        assert close_check(L)[0] == brute_force_is_semigroup(ctx, L.points)


def test_region_lattice_examples():
    ctx = PQPair(3, 5)
    assert region_lattice(ctx, "rectangle", 1, 0).points == {(0, 0), (1, 0)}
    with pytest.raises(BoundViolation):
        region_lattice(ctx, "rectangle", 2, 0)
    tri = region_lattice(PQPair(5, 6), "corner_triangle", 2)
    assert tri.points == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    assert brute_force_is_semigroup(PQPair(5, 6), tri.points)
    with pytest.raises(WrongContext):
        region_lattice(PQPair(5, 7), "delta_prime", 1, 1)


def region_instances(ctx):
    for a in range(ctx.q):
        for b in range(ctx.p):
            if 2 * a < ctx.q - 1 and 2 * b < ctx.p - 1:
                yield region_lattice(ctx, "rectangle", a, b)
    for i in range(1, ctx.conductor):
        yield region_lattice(ctx, "delta", i)
    for r in range(ctx.p - 1):
        pts = frozenset((a, b) for a in range(r + 1) for b in range(r + 1 - a))
        if all(ctx.in_delta1(pt) for pt in pts):
            yield region_lattice(ctx, "corner_triangle", r)
    if ctx.q == ctx.p + 1:
        for i in range(ctx.p - 1):
            for k in range(i, min(2 * i, ctx.p - 2) + 1):
                yield region_lattice(ctx, "delta_prime", k, i)


@pytest.mark.parametrize("ctx", pairs(11), ids=str)
def test_every_region_is_closed(ctx):
    for L in region_instances(ctx):
        assert close_check(L)[0], sorted(L.points)
        assert brute_force_is_semigroup(ctx, L.points)


def test_delta_band_members():
    ctx = PQPair(5, 7)
    inner, outer = delta_points(ctx, 6), delta_points(ctx, 3)
    L = delta_band_member(ctx, 6, 3, inner | {pt for pt in outer if pt[1] == 0})
    assert close_check(L)[0]
    with pytest.raises(BoundViolation):
        delta_band_member(ctx, 6, 3, frozenset())


def test_stats_and_buchweitz():
    H = NumericalSemigroup.from_generators([3, 5])
    assert sg_stats(H) == {"genus": 4, "conductor": 8, "min_generators": [3, 5], "l2": 9}
    assert sg_stats(NumericalSemigroup([])) == {"genus": 0, "conductor": 0, "min_generators": [1], "l2": 0}
    assert buchweitz_test(H) == {"l2": 9, "bound": 9, "violated": False}
    A, B = buchweitz_family(13, "A"), buchweitz_family(13, "B")
    assert A.gaps == tuple(range(1, 13)) + (19, 21, 24, 25)
    assert B.gaps == tuple(range(1, 13)) + (19, 20, 23, 25)
    for fam in (A, B):
        assert fam.genus == 16 and fam.l2() == 46 and buchweitz_test(fam)["violated"]
    nine = buchweitz_family(9, "A")
    assert nine.gaps == tuple(range(1, 9)) + (11, 13, 16, 17) and nine.genus == 12
    with pytest.raises(PTooSmall):
        buchweitz_family(8, "A")
    with pytest.raises(GenusTooSmall):
        buchweitz_test(NumericalSemigroup([1]))


def test_semigroup_validation():
    with pytest.raises(NotASemigroup):
        NumericalSemigroup([2])  # 1 + 1 = 2
    assert NumericalSemigroup([1, 2, 4]).min_generators() == [3, 5, 7]


def test_enumerate_examples():
    assert [sorted(L.points) for L in enumerate_down_closed(PQPair(3, 5), rectangle_points(1, 0))] == [
        [],
        [(0, 0)],
        [(0, 0), (1, 0)],
    ]
    assert len(list(enumerate_down_closed(PQPair(5, 7), rectangle_points(2, 1)))) == 10
    assert [len(L) for L in enumerate_down_closed(PQPair(5, 7), frozenset())] == [0]


def test_hl_union_examples():
    H = hl_union(LatticeSet(PQPair(5, 7), rectangle_points(2, 1)))
    assert H.gaps == (1, 2, 3, 4, 8, 9) and H.min_generators() == [5, 6, 7]
    assert hl_union(LatticeSet(PQPair(3, 5), {(0, 0)})).min_generators() == [3, 5, 7]
    assert hl_union(LatticeSet(PQPair(4, 7))) == NumericalSemigroup.from_generators([4, 7])
    with pytest.raises(BoundViolation):
        hl_union(LatticeSet.from_corners(PQPair(5, 7), [(0, 2), (1, 0)]))
    with pytest.raises(NotClosed):
        hl_union(LatticeSet(PQPair(5, 7), rectangle_points(3, 0)))


@pytest.mark.parametrize("ctx", [PQPair(5, 7), PQPair(5, 9), PQPair(7, 9), PQPair(6, 11)], ids=str)
def test_hl_union_agrees_and_is_monotone(ctx):
    box = rectangle_points(ctx.q // 2 - 1, ctx.p // 2 - 1)
    closed = [L for L in enumerate_down_closed(ctx, box) if close_check(L)[0]]
    sgs = {L.points: hl_union(L) for L in closed}
    for L in closed:
        assert sgs[L.points] == semigroup_from_lattice(L)
        assert lattice_of_semigroup(ctx, sgs[L.points]) == L
    for L in closed:
        for M in closed:
            if L.points <= M.points:
                assert sgs[L.points].issubset(sgs[M.points])


def test_lminus_regions():
    # (5,7) with a 3 x 2 grid: the half region is the whole rectangle
    assert lminus_region(PQPair(5, 7), 3, 2) == rectangle_points(2, 1)
    assert lminus_region(PQPair(5, 7), 3, 2, "equals") == rectangle_points(2, 1)
    ctx = PQPair(7, 9)
    L = {(a, b) for a in range(4) for b in range(2)} | {(0, 2), (1, 2)}
    assert lminus_region(ctx, 4, 3) == frozenset(L - {(1, 2)})
    assert lminus_region(ctx, 4, 3, "equals") == frozenset(L - {(2, 1), (3, 1)})
    with pytest.raises(BadShape):
        lminus_region(ctx, 5, 3)


def test_lminus_large_example():
    ctx = PQPair(43, 55)
    region = lminus_region(ctx, 18, 15)
    assert any(a == 17 for a, _ in region)
    assert all(2 * (a * 43 + b * 55) < 43 * 55 for a, b in region)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(pairs(13)), st.data())
def test_gap_count_identity(ctx, data):
    L = random_down_closed(random.Random(data.draw(st.integers(0, 10**6))), ctx)
    if close_check(L)[0]:
        assert semigroup_from_lattice(L).genus == ctx.gap_count - len(L)
