"""Weierstrass semigroup at the place at infinity of a certified nodal curve.

The holomorphic differentials are x^a y^b / F_Y dx for adjoint polynomials.
For the i-th gap gamma_i of <p,q> with monomial X^a_i Y^b_i, gamma_i stays a
gap of the curve exactly when some

    Phi_i = X^a_i Y^b_i + sum_{j > i} u_j X^a_j Y^b_j

vanishes at every node.  Each such system is solved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .curves import (
    NodalCurve,
    canonical_nodes,
    curve_with_node_set,
    default_extra_coords,
    eliminate_nodes,
    grid_curve,
    intersect_node_sets,
    node_key,
)
from .errors import (
    ContextMismatch,
    GapCountMismatch,
    NotClosed,
    NotRealizable,
    Uncertified,
)
from .exact import QQ, Matrix, kronecker, mat_rank, mat_solve_affine, vandermonde
from .semigroup import (
    LatticeSet,
    NumericalSemigroup,
    PQPair,
    additive_closure_violation,
    close_check,
    gaps_pq,
    hl_union,
    lattice_of_semigroup,
    lminus_region,
    rectangle_points,
    semigroup_from_lattice,
)


@dataclass(frozen=True)
class AdjointBasis:
    ctx: PQPair
    entries: tuple  # (gamma, a, b), gamma increasing

    def __len__(self):
        return len(self.entries)

    def monomials(self) -> list[tuple[int, int]]:
        return [(a, b) for _, a, b in self.entries]


def omega_basis(ctx: PQPair) -> AdjointBasis:
    return AdjointBasis(ctx, tuple((g, a, b) for g, (a, b) in gaps_pq(ctx)))


@dataclass(frozen=True)
class GapReport:
    index: int
    gap_value: int
    is_gap: bool
    witness: tuple  # (u_{i+1}, ..., u_d) or (rank A, rank A|b)

    def to_json(self) -> dict:
        if self.is_gap:
            w = [u.to_json() for u in self.witness]
        else:
            w = {"rank_A": self.witness[0], "rank_Ab": self.witness[1]}
        return {"index": self.index, "gap": self.gap_value, "is_gap": self.is_gap, "witness": w}


def _require_certified(curve: NodalCurve):
    if curve.certificate is None:
        raise Uncertified("the curve carries no certificate")


def _monomial_matrix(field, nodes, monomials) -> Matrix:
    return Matrix(field, tuple(tuple(x**a * y**b for a, b in monomials) for x, y in nodes))


def gap_system(curve: NodalCurve, i: int, basis: AdjointBasis | None = None):
    """(A, b) for the i-th gap (1-based)."""
    basis = basis or omega_basis(curve.ctx)
    fld = curve.field
    _, ai, bi = basis.entries[i - 1]
    cols = basis.monomials()[i:]
    A = _monomial_matrix(fld, curve.nodes, cols)
    rhs = [-(x**ai * y**bi) for x, y in curve.nodes]
    return A, rhs


def is_gap(curve: NodalCurve, i: int, basis: AdjointBasis | None = None) -> GapReport:
    _require_certified(curve)
    basis = basis or omega_basis(curve.ctx)
    if not 1 <= i <= len(basis):
        raise IndexError(f"gap index {i} outside 1..{len(basis)}")
    A, rhs = gap_system(curve, i, basis)
    sol = mat_solve_affine(A, rhs)
    gamma = basis.entries[i - 1][0]
    if sol is not None:
        return GapReport(i, gamma, True, sol.particular)
    aug = Matrix(A.field, tuple(row + (v,) for row, v in zip(A.entries, rhs)))
    return GapReport(i, gamma, False, (mat_rank(A), mat_rank(aug)))


def gap_reports(curve: NodalCurve) -> list[GapReport]:
    basis = omega_basis(curve.ctx)
    return [is_gap(curve, i, basis) for i in range(1, len(basis) + 1)]


def weierstrass_semigroup(curve: NodalCurve) -> NumericalSemigroup:
    _require_certified(curve)
    gaps = [r.gap_value for r in gap_reports(curve) if r.is_gap]
    ctx = curve.ctx
    expected = ctx.gap_count - len(curve.nodes)
    if len(gaps) != expected:
        raise GapCountMismatch(f"{len(gaps)} gaps found, genus is {expected}")
    bad = additive_closure_violation(frozenset(gaps))
    if bad is not None:
        raise GapCountMismatch(f"gap set not closed: {bad[0]} + {bad[1]} is a gap")
    H = NumericalSemigroup(gaps, verify=False)
    assert ctx.p in H and ctx.q in H
    return H


def closed_lattice(curve: NodalCurve, H: NumericalSemigroup | None = None) -> LatticeSet:
    """The down-closed set of <p,q>-gaps that the nodes close."""
    H = H or weierstrass_semigroup(curve)
    return lattice_of_semigroup(curve.ctx, H)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    curve: NodalCurve | None = None
    semigroup: NumericalSemigroup | None = None
    checks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return ok

    def to_json(self) -> dict:
        ctx = self.curve.ctx if self.curve else None
        return {
            "curve": self.curve.to_json() if self.curve else None,
            "gaps": list(self.semigroup.gaps) if self.semigroup else None,
            "semigroup": self.semigroup.to_json(ctx) if self.semigroup else None,
            "checks": [c.to_json() for c in self.checks],
            **self.extra,
        }


def semigroup_report(curve: NodalCurve) -> Report:
    H = weierstrass_semigroup(curve)
    rep = Report(curve, H)
    rep.check("gap_count", H.genus == curve.genus, f"{H.genus} gaps, genus {curve.genus}")
    rep.check("closed", additive_closure_violation(frozenset(H.gaps)) is None)
    rep.extra["lattice"] = closed_lattice(curve, H).to_json()
    return rep


def _gens(H: NumericalSemigroup) -> str:
    return "<" + ",".join(map(str, H.min_generators())) + ">"


def check_rectangle_theorem(ctx: PQPair, l1: int, l2: int, xs=None, ys=None, **kw) -> Report:
    """Grid of l1 x l2 nodes gives <p, q, pq - (l1 p + l2 q)>, or cannot exist."""
    xs = list(range(l1)) if xs is None else list(xs)
    ys = list(range(l2)) if ys is None else list(ys)
    if 2 * l1 <= ctx.q and 2 * l2 <= ctx.p:
        C = grid_curve(ctx, xs, ys, **kw)
        H = weierstrass_semigroup(C)
        formula = NumericalSemigroup.from_generators([ctx.p, ctx.q, ctx.p * ctx.q - (l1 * ctx.p + l2 * ctx.q)])
        lattice = semigroup_from_lattice(LatticeSet(ctx, rectangle_points(l1 - 1, l2 - 1)))
        rep = Report(C, H)
        rep.check("formula", H == formula, f"computed {_gens(H)}, formula {_gens(formula)}")
        rep.check("lattice", H == lattice, f"closure of the rectangle gives {_gens(lattice)}")
        rep.check("genus", H.genus == C.genus, f"genus {C.genus}")
        return rep
    rep = Report()
    pts = rectangle_points(l1 - 1, l2 - 1)
    if not all(ctx.in_delta1(pt) for pt in pts):
        rep.check("rectangle_not_semigroup", True, "rectangle leaves Delta_1")
        return rep
    ok, bad = close_check(LatticeSet(ctx, pts))
    rep.check("rectangle_not_semigroup", not ok, f"violation {bad}")
    return rep


def realizing_variant(ctx: PQPair, L: LatticeSet, l1: int, l2: int) -> str:
    for variant in ("minus", "equals"):
        if L.points <= lminus_region(ctx, l1, l2, variant):
            return variant
    raise NotRealizable(f"{sorted(L.points)} lies in neither L- nor L= for a {l1}x{l2} grid")


def default_grid(ctx: PQPair) -> tuple[list[int], list[int]]:
    return list(range(ctx.q // 2)), list(range(ctx.p // 2))


def check_HL_theorem(ctx: PQPair, L: LatticeSet, xs=None, ys=None, budget: int = 64) -> Report:
    """Build C_L on the grid and compare its semigroup with H_L."""
    if L.ctx != ctx:
        raise ContextMismatch("lattice set belongs to another type")
    dx, dy = default_grid(ctx)
    xs = dx if xs is None else list(xs)
    ys = dy if ys is None else list(ys)
    ok, bad = close_check(L)
    if not ok:
        raise NotClosed(f"{bad[0]} and {bad[1]} require {bad[2]}", violation=bad)
    variant = realizing_variant(ctx, L, len(xs), len(ys))
    C = curve_with_node_set(ctx, xs, ys, sorted(L.points), variant, budget=budget)
    H = weierstrass_semigroup(C)
    HL = hl_union(L)
    rep = Report(C, H, extra={"variant": variant, "lattice": L.to_json()})
    rep.check("union_formula", H == HL, f"computed {_gens(H)}, union {_gens(HL)}")
    rep.check("lattice_closure", H == semigroup_from_lattice(L))
    rep.check("node_count", len(C.nodes) == len(L), f"{len(C.nodes)} nodes")
    return rep


def lift_series(
    L: LatticeSet,
    ctx2: PQPair,
    curve: NodalCurve,
    xs: Sequence,
    ys: Sequence,
    budget: int = 64,
) -> Report:
    """Realize L for the larger type (p', q') using the given curve as eliminator.

    ``curve`` has its nodes at (xs[a], ys[b]) for (a, b) in L.  The grid is
    widened to floor(q'/2) x floor(p'/2) and every node outside L is removed
    by adding a multiple of the old defining polynomial.
    """
    ctx = L.ctx
    if not (ctx.p < ctx2.p < ctx2.q and ctx.q < ctx2.q):
        raise ContextMismatch(f"cannot lift from {ctx.p},{ctx.q} to {ctx2.p},{ctx2.q}")
    fld = curve.field
    expect_nodes = canonical_nodes((fld(xs[a]), fld(ys[b])) for a, b in L.points)
    if [node_key(n) for n in expect_nodes] != [node_key(n) for n in curve.nodes]:
        raise ContextMismatch("curve nodes do not match L on the given grid")
    n1, n2 = ctx2.q // 2, ctx2.p // 2
    xs2 = list(xs) + default_extra_coords(fld, xs, n1 - len(xs))
    ys2 = list(ys) + default_extra_coords(fld, ys, n2 - len(ys))
    grid = grid_curve(ctx2, xs2, ys2, budget=budget, field=fld)
    lifted = eliminate_nodes(grid, curve.F, curve.nodes, budget=budget) if len(L) < len(grid.nodes) else grid
    H = weierstrass_semigroup(lifted)
    L2 = LatticeSet(ctx2, L.points)
    expected = semigroup_from_lattice(L2)
    rep = Report(lifted, H, extra={"closed": L2.gaps_closed()})
    rep.check("lifted_semigroup", H == expected, f"computed gaps {list(H.gaps)}")
    rep.check("same_nodes", len(lifted.nodes) == len(curve.nodes))
    return rep


def intersect_semigroups_via_curves(C1: NodalCurve, C2: NodalCurve, budget: int = 64) -> Report:
    """Curve with the common nodes; its semigroup is H(C1) intersected with H(C2)."""
    H1 = weierstrass_semigroup(C1)
    H2 = weierstrass_semigroup(C2)
    C = intersect_node_sets(C1, C2, budget=budget)
    H = weierstrass_semigroup(C)
    rep = Report(C, H)
    rep.check("intersection", H == H1.intersection(H2), f"computed {_gens(H)}")
    common = {node_key(n) for n in C1.nodes} & {node_key(n) for n in C2.nodes}
    rep.check("common_nodes", {node_key(n) for n in C.nodes} == common)
    return rep


def grid_rank_facts(ctx: PQPair, xs: Sequence, ys: Sequence) -> dict:
    """Ranks of the Kronecker matrix and of the corner gap system on a grid."""
    fld = QQ
    for v in list(xs) + list(ys):
        if hasattr(v, "field"):
            fld = v.field
            break
    xs = [fld(x) for x in xs]
    ys = [fld(y) for y in ys]
    l1, l2 = len(xs), len(ys)
    delta = kronecker(vandermonde(fld, ys, l2), vandermonde(fld, xs, l1))
    corner = (l1 - 1, l2 - 1)
    weight = corner[0] * ctx.p + corner[1] * ctx.q
    T = [pt for _, pt in gaps_pq(ctx) if pt[0] * ctx.p + pt[1] * ctx.q < weight]
    nodes = [(x, y) for y in ys for x in xs]
    G = _monomial_matrix(fld, nodes, T)
    return {"l": l1 * l2, "rank_delta": mat_rank(delta), "rank_G": mat_rank(G)}
