"""Numerical semigroups containing p and q, and their lattice-point pictures.

The gaps of <p, q> are in bijection with the lattice points (a, b) with
a*p + b*q <= c - 2, where c = (p-1)(q-1): the gap belonging to (a, b) is
c - 1 - (a*p + b*q).  A semigroup H containing p and q is described by the
down-closed set L of points whose gaps are closed in H.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    BoundViolation,
    GenusTooSmall,
    InvalidContext,
    NotASemigroup,
    NotClosed,
    NotDownClosed,
    PTooSmall,
    WrongContext,
)

Point = tuple[int, int]


@dataclass(frozen=True)
class PQPair:
    p: int
    q: int

    def __post_init__(self):
        if not (1 < self.p < self.q) or math.gcd(self.p, self.q) != 1:
            raise InvalidContext(f"need coprime 1 < p < q, got p={self.p}, q={self.q}")

    @property
    def conductor(self) -> int:
        return (self.p - 1) * (self.q - 1)

    c = conductor

    @property
    def gap_count(self) -> int:
        return self.conductor // 2

    d = gap_count

    @property
    def frobenius(self) -> int:
        return self.p * self.q - self.p - self.q

    def gap_of(self, point: Point) -> int:
        a, b = point
        return self.conductor - 1 - (a * self.p + b * self.q)

    def point_of(self, gap: int) -> Point:
        """The unique (a, b) with gap = c - 1 - (a p + b q)."""
        n = self.conductor - 1 - gap
        if gap < 1 or n < 0:
            raise ValueError(f"{gap} is not a gap of <{self.p},{self.q}>")
        for b in range(self.p):
            rest = n - b * self.q
            if rest < 0:
                break
            if rest % self.p == 0:
                return (rest // self.p, b)
        raise ValueError(f"{gap} is not a gap of <{self.p},{self.q}>")

    def in_delta1(self, point: Point) -> bool:
        a, b = point
        return a >= 0 and b >= 0 and a * self.p + b * self.q <= self.conductor - 2


def gaps_pq(ctx: PQPair) -> list[tuple[int, Point]]:
    """Gaps of <p, q> in increasing order, each with its lattice point."""
    out = []
    top = ctx.conductor - 2
    for b in range(ctx.p - 1):
        for a in range(ctx.q - 1):
            if a * ctx.p + b * ctx.q > top:
                break
            out.append((ctx.gap_of((a, b)), (a, b)))
    out.sort()
    return out


def down_closure(points: Iterable[Point]) -> frozenset:
    out = set()
    for a, b in points:
        for i in range(a + 1):
            for j in range(b + 1):
                out.add((i, j))
    return frozenset(out)


def maximal_points(points: Iterable[Point]) -> list[Point]:
    pts = set(points)
    return sorted(
        (a, b) for a, b in pts if (a + 1, b) not in pts and (a, b + 1) not in pts
    )


@dataclass(frozen=True)
class LatticeSet:
    """Down-closed set of lattice points inside Delta_1 for a given (p, q)."""

    ctx: PQPair
    points: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pts = frozenset((int(a), int(b)) for a, b in self.points)
        object.__setattr__(self, "points", pts)
        for a, b in pts:
            if not self.ctx.in_delta1((a, b)):
                raise BoundViolation(f"point {(a, b)} lies outside Delta_1 for {self.ctx}")
            if (a > 0 and (a - 1, b) not in pts) or (b > 0 and (a, b - 1) not in pts):
                raise NotDownClosed(f"point {(a, b)} present but its rectangle is not")

    @classmethod
    def from_corners(cls, ctx: PQPair, corners: Iterable[Point]) -> "LatticeSet":
        return cls(ctx, down_closure(corners))

    @property
    def maximal(self) -> list[Point]:
        """Maximal points, increasing in a (hence decreasing in b)."""
        return maximal_points(self.points)

    @property
    def corners(self) -> list[Point]:
        """The staircase (P_0, ..., P_m): axis endpoints plus maximal points."""
        if not self.points:
            return []
        maxi = self.maximal
        top = max(b for a, b in self.points if a == 0)
        right = max(a for a, b in self.points if b == 0)
        out = [(0, top)] + maxi + [(right, 0)]
        dedup = []
        for pt in out:
            if pt not in dedup:
                dedup.append(pt)
        return sorted(dedup, key=lambda pt: (pt[0], -pt[1]))

    def gaps_closed(self) -> list[int]:
        return sorted(self.ctx.gap_of(pt) for pt in self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, pt):
        return tuple(pt) in self.points

    def to_json(self) -> dict:
        return {"p": self.ctx.p, "q": self.ctx.q, "corners": [list(pt) for pt in self.maximal]}

    @classmethod
    def from_json(cls, data) -> "LatticeSet":
        return cls.from_corners(PQPair(data["p"], data["q"]), [tuple(c) for c in data["corners"]])


class NumericalSemigroup:
    """A numerical semigroup stored through its finite gap set."""

    __slots__ = ("gaps", "_gapset")

    def __init__(self, gaps: Iterable[int], verify: bool = True):
        gs = sorted(set(int(g) for g in gaps))
        if gs and gs[0] <= 0:
            raise NotASemigroup("gaps must be positive integers")
        self.gaps = tuple(gs)
        self._gapset = frozenset(gs)
        if verify:
            bad = additive_closure_violation(self._gapset)
            if bad is not None:
                raise NotASemigroup(f"{bad[0]} + {bad[1]} = {bad[0] + bad[1]} is a gap")

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens if g > 0))
        if not gens or math.gcd(*gens) != 1:
            raise NotASemigroup("generators must be positive with gcd 1")
        # reachable values up to a safe bound (the Frobenius number is below g0*gmax)
        bound = gens[0] * gens[-1] + 1
        member = [False] * (bound + 1)
        member[0] = True
        for n in range(1, bound + 1):
            member[n] = any(n >= g and member[n - g] for g in gens)
        return cls([n for n in range(bound + 1) if not member[n]], verify=False)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gapset

    def elements(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n not in self._gapset]

    def min_generators(self) -> list[int]:
        if not self.gaps:
            return [1]
        m = min(n for n in range(1, self.conductor + 2) if n in self)
        gens = []
        for n in range(1, self.conductor + m):
            if n not in self:
                continue
            if not any(n - s in self and n - s > 0 for s in range(1, n) if s in self):
                gens.append(n)
        return gens

    def l2(self) -> int:
        return len({a + b for a in self.gaps for b in self.gaps})

    def issubset(self, other: "NumericalSemigroup") -> bool:
        return other._gapset <= self._gapset

    def intersection(self, other: "NumericalSemigroup") -> "NumericalSemigroup":
        return NumericalSemigroup(self._gapset | other._gapset)

    def union(self, other: "NumericalSemigroup") -> "NumericalSemigroup":
        """Elementwise union; the caller vouches that it is a semigroup."""
        return NumericalSemigroup(self._gapset & other._gapset)

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __repr__(self):
        return f"NumericalSemigroup(<{','.join(map(str, self.min_generators()))}>, gaps={list(self.gaps)})"

    def to_json(self, ctx: PQPair | None = None) -> dict:
        out = {}
        if ctx is not None:
            out.update(p=ctx.p, q=ctx.q)
        out.update(
            gaps=list(self.gaps),
            generators=self.min_generators(),
            genus=self.genus,
            conductor=self.conductor,
        )
        return out

    @classmethod
    def from_json(cls, data) -> "NumericalSemigroup":
        return cls(data["gaps"])


def additive_closure_violation(gaps: frozenset) -> tuple[int, int] | None:
    """First pair of non-gaps whose sum is a gap, or None."""
    if not gaps:
        return None
    top = max(gaps)
    members = [n for n in range(1, top + 1) if n not in gaps]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b > top:
                break
            if a + b in gaps:
                return (a, b)
    return None


def semigroup_from_closed_gaps(ctx: PQPair, closed: Iterable[int]) -> NumericalSemigroup:
    all_gaps = {g for g, _ in gaps_pq(ctx)}
    return NumericalSemigroup(all_gaps - set(closed))


def brute_force_is_semigroup(ctx: PQPair, points: Iterable[Point]) -> bool:
    """Independent oracle: is N minus the remaining gaps closed under addition?"""
    closed = {ctx.gap_of(pt) for pt in points}
    remaining = {g for g, _ in gaps_pq(ctx)} - closed
    limit = 2 * ctx.conductor
    members = [n for n in range(1, limit + 1) if n not in remaining]
    member_set = set(members)
    for a in members:
        for b in members:
            if a + b > limit:
                break
            if a + b not in member_set:
                return False
    return True


def _images(ctx: PQPair, u: Point, v: Point) -> list[Point]:
    (a, b), (a2, b2) = u, v
    out = []
    if a + a2 >= ctx.q - 1:
        out.append((a + a2 + 1 - ctx.q, b + b2 + 1))
    if b + b2 >= ctx.p - 1:
        out.append((a + a2 + 1, b + b2 + 1 - ctx.p))
    return out


def close_check(L: LatticeSet, corners_only: bool = True) -> tuple[bool, tuple | None]:
    """Closure test on point pairs; returns (ok, (u, v, missing image))."""
    pts = L.maximal if corners_only else sorted(L.points)
    for u, v in itertools.combinations_with_replacement(pts, 2):
        for img in _images(L.ctx, u, v):
            if img not in L.points:
                return False, (u, v, img)
    return True, None


def semigroup_from_lattice(L: LatticeSet) -> NumericalSemigroup:
    ok, bad = close_check(L)
    if not ok:
        raise NotClosed(f"{bad[0]} and {bad[1]} require {bad[2]}", violation=bad)
    return semigroup_from_closed_gaps(L.ctx, L.gaps_closed())


def rectangle_points(a: int, b: int) -> frozenset:
    return frozenset((i, j) for i in range(a + 1) for j in range(b + 1))


def delta_points(ctx: PQPair, i: int) -> frozenset:
    """Lattice points on or below pX + qY = c - 1 - i."""
    bound = ctx.conductor - 1 - i
    return frozenset(
        (a, b)
        for b in range(ctx.p)
        for a in range(ctx.q)
        if a * ctx.p + b * ctx.q <= bound
    )


def region_lattice(ctx: PQPair, kind: str, *params: int) -> LatticeSet:
    """Named regions whose lattice sets are known to define semigroups.

    kinds: rectangle(a, b), delta(i), delta_band(k, i), corner_triangle(r),
    delta_prime(k, i) (only for q = p + 1).
    """
    if kind == "rectangle":
        a, b = params
        if a < 0 or b < 0 or 2 * a >= ctx.q - 1 or 2 * b >= ctx.p - 1:
            raise BoundViolation(f"rectangle({a},{b}) needs a < (q-1)/2 and b < (p-1)/2")
        return LatticeSet(ctx, rectangle_points(a, b))
    if kind == "delta":
        (i,) = params
        if i < 1:
            raise BoundViolation("delta(i) needs i >= 1")
        return LatticeSet(ctx, delta_points(ctx, i))
    if kind == "delta_band":
        k, i = params
        if i < 1 or 2 * i < k or k < i:
            raise BoundViolation("delta_band(k, i) needs i >= 1 and i <= k <= 2i")
        return LatticeSet(ctx, delta_points(ctx, i))
    if kind == "corner_triangle":
        (r,) = params
        if r < 0 or r > ctx.p - 2:
            raise BoundViolation("corner_triangle(r) needs 0 <= r <= p-2")
        return LatticeSet(ctx, frozenset((a, b) for a in range(r + 1) for b in range(r + 1 - a)))
    if kind == "delta_prime":
        if ctx.q != ctx.p + 1:
            raise WrongContext("delta_prime needs q = p + 1")
        k, i = params
        if i < 0 or k < i or 2 * i < k or k > ctx.p - 2:
            raise BoundViolation("delta_prime(k, i) needs 0 <= i <= k <= min(2i, p-2)")
        n = ctx.p - 2 - i
        return LatticeSet(ctx, frozenset((a, b) for a in range(n + 1) for b in range(n + 1 - a)))
    raise ValueError(f"unknown region kind {kind!r}")


def delta_band_member(ctx: PQPair, k: int, i: int, points: Iterable[Point]) -> LatticeSet:
    """Validate an explicit L with Delta_k inside L inside Delta_i (2i >= k, i >= 1)."""
    if i < 1 or 2 * i < k:
        raise BoundViolation("need i >= 1 and 2i >= k")
    pts = frozenset(points)
    if not delta_points(ctx, k) <= pts <= delta_points(ctx, i):
        raise BoundViolation("L must satisfy Delta_k <= L <= Delta_i")
    return LatticeSet(ctx, pts)


def sg_stats(H: NumericalSemigroup) -> dict:
    return {
        "genus": H.genus,
        "conductor": H.conductor,
        "min_generators": H.min_generators(),
        "l2": H.l2(),
    }


def buchweitz_test(H: NumericalSemigroup) -> dict:
    g = H.genus
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2")
    l2 = H.l2()
    return {"l2": l2, "bound": 3 * g - 3, "violated": l2 > 3 * g - 3}


def buchweitz_family(p: int, variant: str) -> NumericalSemigroup:
    """Gaps 1..p-1 plus four gaps between 2p-7 and 2p-1 (variants A and B)."""
    if p < 9:
        raise PTooSmall(f"p = {p} < 9")
    extra = {
        "A": (2 * p - 7, 2 * p - 5, 2 * p - 2, 2 * p - 1),
        "B": (2 * p - 7, 2 * p - 6, 2 * p - 3, 2 * p - 1),
    }[variant]
    return NumericalSemigroup(list(range(1, p)) + list(extra))


def rectangle_semigroup(ctx: PQPair, a: int, b: int) -> NumericalSemigroup:
    """<p, q, c - 1 - (a p + b q)>, built from generators."""
    return NumericalSemigroup.from_generators([ctx.p, ctx.q, ctx.gap_of((a, b))])


def hl_union(L: LatticeSet) -> NumericalSemigroup:
    """Union of the corner-rectangle semigroups; cross-checked against L."""
    ctx = L.ctx
    ok, bad = close_check(L)
    if not ok:
        raise NotClosed(f"{bad[0]} and {bad[1]} require {bad[2]}", violation=bad)
    amax, bmax = ctx.q // 2 - 1, ctx.p // 2 - 1
    for a, b in L.maximal:
        if a > amax or b > bmax:
            raise BoundViolation(f"corner {(a, b)} outside R_({amax},{bmax})")
    gaps = {g for g, _ in gaps_pq(ctx)}
    for a, b in L.maximal:
        gaps &= set(rectangle_semigroup(ctx, a, b).gaps)
    H = NumericalSemigroup(gaps)
    direct = semigroup_from_lattice(L)
    if H != direct:
        raise AssertionError(f"union formula {H} disagrees with direct closure {direct}")
    return H


def lattice_of_semigroup(ctx: PQPair, H: NumericalSemigroup) -> LatticeSet:
    """The down-closed set of points whose <p,q>-gaps are closed in H."""
    if ctx.p not in H or ctx.q not in H:
        raise WrongContext(f"semigroup does not contain {ctx.p} and {ctx.q}")
    return LatticeSet(ctx, frozenset(pt for g, pt in gaps_pq(ctx) if g in H))


def _column_heights(bounding: frozenset) -> list[int]:
    if not bounding:
        return []
    width = max(a for a, _ in bounding) + 1
    return [max((b + 1 for a, b in bounding if a == col), default=0) for col in range(width)]


def enumerate_down_closed(ctx: PQPair, bounding) -> Iterator[LatticeSet]:
    """Every down-closed subset of ``bounding`` (itself down-closed).

    Order: by size, then lexicographically by the maximal-point tuple.
    """
    if isinstance(bounding, LatticeSet):
        bounding = bounding.points
    bounding = frozenset(bounding)
    if down_closure(bounding) != bounding:
        raise NotDownClosed("bounding region must be down-closed")
    caps = _column_heights(bounding)
    found = []

    def rec(col: int, limit: int, heights: list[int]):
        if col == len(caps) or limit == 0:
            found.append(list(heights))
            return
        for h in range(min(limit, caps[col]), -1, -1):
            heights.append(h)
            rec(col + 1, h, heights)
            heights.pop()

    rec(0, max(caps, default=0), [])
    sets = []
    for heights in found:
        pts = frozenset((a, b) for a, h in enumerate(heights) for b in range(h))
        sets.append(LatticeSet(ctx, pts))
    sets.sort(key=lambda L: (len(L), L.maximal))
    yield from sets


def lminus_region(ctx: PQPair, l1: int, l2: int, variant: str = "minus") -> frozenset:
    """Points of R_(l1-1, l2-1) strictly below pX + qY = pq/2, minus the E (or E') edge."""
    from .errors import BadShape

    if not (1 <= l1 and 2 * l1 <= ctx.q and 1 <= l2 and 2 * l2 <= ctx.p):
        raise BadShape(f"need 1 <= l1 <= q/2 and 1 <= l2 <= p/2, got l1={l1}, l2={l2}")
    L = half_region(ctx, l1, l2)
    if variant == "minus":
        E = {(a, b) for a, b in L if a < l1 - 1 and (a + 1, b) not in L}
    elif variant == "equals":
        E = {(a, b) for a, b in L if b < l2 - 1 and (a, b + 1) not in L}
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return frozenset(L - E)


def half_region(ctx: PQPair, l1: int, l2: int) -> frozenset:
    return frozenset(
        (a, b)
        for a in range(l1)
        for b in range(l2)
        if 2 * (a * ctx.p + b * ctx.q) < ctx.p * ctx.q
    )
