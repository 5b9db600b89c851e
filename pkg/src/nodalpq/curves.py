"""Nodal curves of type p,q: construction and exact certification.

A curve of type p,q is F = Y^p + a X^q + (terms with i*p + j*q < pq) = 0.
Certification is global: every claimed node must be a singular point with
nonzero Hessian, and the dimension of K[X,Y]/(F, F_X, F_Y) must equal the
number of claimed nodes.  Since each node contributes exactly one to that
dimension and every other singular point contributes at least one, equality
rules out any further singularity, including ones with coordinates outside
the working field.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .bipoly import (
    INFINITE,
    BiPoly,
    bp_filtration_degree,
    bp_hessian_det,
    bp_is_weierstrass_form,
    chebyshev,
    jacobian_quotient_dim,
)
from .errors import (
    AdjointNotSingular,
    BadShape,
    ContextMismatch,
    ExtraSingularities,
    FiltrationTooBig,
    Infeasible,
    KeepNotSubset,
    NodalPQError,
    NonIsolatedSingularLocus,
    NotANode,
    NotSingularAtClaim,
    NotWeierstrass,
    SearchExhausted,
    Uncertified,
)
from .exact import (
    QQ,
    FieldElement,
    Matrix,
    UniPoly,
    element_from_json,
    field_from_json,
    mat_solve_affine,
    quadratic_field,
    to_float,
)
from .semigroup import PQPair, half_region, lminus_region

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 64

Node = tuple  # (FieldElement, FieldElement)


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class NodeCheck:
    node: Node
    vanishes: bool
    hessian: FieldElement

    def to_json(self) -> dict:
        return {
            "node": [self.node[0].to_json(), self.node[1].to_json()],
            "F": self.vanishes,
            "F_X": self.vanishes,
            "F_Y": self.vanishes,
            "hessian": self.hessian.to_json(),
        }


@dataclass(frozen=True)
class CurveCertificate:
    tjurina_total: int
    node_checks: tuple
    genus: int
    delta_infinity: int

    def to_json(self) -> dict:
        return {
            "tjurina_total": self.tjurina_total,
            "genus": self.genus,
            "delta_infinity": self.delta_infinity,
            "node_checks": [c.to_json() for c in self.node_checks],
        }


def node_key(node: Node):
    return (node[0].coords, node[1].coords)


def canonical_nodes(nodes: Iterable[Node]) -> tuple:
    return tuple(sorted(nodes, key=node_key))


@dataclass(frozen=True)
class NodalCurve:
    ctx: PQPair
    field: object
    F: BiPoly
    nodes: tuple
    certificate: CurveCertificate | None = None
    elimination_scalar: FieldElement | None = None
    notes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", canonical_nodes(self.nodes))
        if len(set(node_key(n) for n in self.nodes)) != len(self.nodes):
            raise BadShape("node list contains duplicates")
        if len(self.nodes) > self.ctx.gap_count:
            raise BadShape(f"{len(self.nodes)} nodes exceed (p-1)(q-1)/2 = {self.ctx.gap_count}")

    @property
    def genus(self) -> int:
        return self.ctx.gap_count - len(self.nodes)

    def to_json(self) -> dict:
        out = {
            "p": self.ctx.p,
            "q": self.ctx.q,
            "field": self.field.to_json(),
            "F": self.F.to_json(),
            "nodes": [[x.to_json(), y.to_json()] for x, y in self.nodes],
            "certificate": self.certificate.to_json() if self.certificate else None,
        }
        if self.elimination_scalar is not None:
            out["elimination_scalar"] = self.elimination_scalar.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    @classmethod
    def from_json(cls, data, recertify: bool = False) -> "NodalCurve":
        ctx = PQPair(data["p"], data["q"])
        fld = field_from_json(data["field"])
        F = BiPoly.from_json(data["F"], field=fld)
        nodes = tuple((element_from_json(fld, x), element_from_json(fld, y)) for x, y in data["nodes"])
        cert = None
        if data.get("certificate") is not None or recertify:
            cert = certify_nodal(ctx, F, nodes)
        scalar = data.get("elimination_scalar")
        return cls(
            ctx,
            fld,
            F,
            nodes,
            cert,
            element_from_json(fld, scalar) if scalar is not None else None,
            tuple(data.get("notes", ())),
        )


# ---------------------------------------------------------------------------
# certification


def _rational_image(F: BiPoly) -> BiPoly:
    """F over Q when all its coefficients are rational (field-independent dimension)."""
    if F.field != QQ and all(c.is_rational() for c in F.terms.values()):
        return BiPoly(QQ, {m: c.coords[0] for m, c in F.terms.items()})
    return F


def singular_at(F: BiPoly, node: Node) -> bool:
    x, y = node
    return not F(x, y) and not F.partial("X")(x, y) and not F.partial("Y")(x, y)


def certify_nodal(ctx: PQPair, F: BiPoly, claimed_nodes: Sequence[Node]) -> CurveCertificate:
    ok, problems = bp_is_weierstrass_form(F, ctx)
    if not ok:
        raise NotWeierstrass("; ".join(problems))
    nodes = canonical_nodes(tuple((F.field(x), F.field(y)) for x, y in claimed_nodes))
    if len(set(node_key(n) for n in nodes)) != len(nodes):
        raise BadShape("claimed nodes are not distinct")
    Fx, Fy = F.partial("X"), F.partial("Y")
    hess = bp_hessian_det(F)
    checks = []
    for node in nodes:
        x, y = node
        if F(x, y) or Fx(x, y) or Fy(x, y):
            raise NotSingularAtClaim(f"F is not singular at ({x}, {y})", point=node)
        h = hess(x, y)
        if not h:
            raise NotANode(f"Hessian vanishes at ({x}, {y})", point=node)
        checks.append(NodeCheck(node, True, h))
    dim = jacobian_quotient_dim(_rational_image(F))
    if dim == INFINITE:
        raise NonIsolatedSingularLocus("K[X,Y]/(F, F_X, F_Y) is infinite-dimensional")
    if dim != len(nodes):
        raise ExtraSingularities(f"Tjurina total {dim} exceeds the {len(nodes)} claimed nodes")
    return CurveCertificate(
        tjurina_total=int(dim),
        node_checks=tuple(checks),
        genus=ctx.gap_count - len(nodes),
        delta_infinity=(ctx.q - ctx.p - 1) * (ctx.q - 1) // 2,
    )


def certified(ctx: PQPair, F: BiPoly, nodes: Sequence[Node], **extra) -> NodalCurve:
    cert = certify_nodal(ctx, F, nodes)
    return NodalCurve(ctx, F.field, F, tuple(nodes), cert, **extra)


# ---------------------------------------------------------------------------
# scalar search


def scalar_candidates(budget: int = DEFAULT_BUDGET) -> Iterator[Fraction]:
    """1, -1, 2, -2, ... then halves 1/2, -1/2, 3/2, ...; ``budget`` values in all."""
    half = budget // 2
    count = 0
    k = 1
    while count < half:
        for v in (Fraction(k), Fraction(-k)):
            if count < half:
                yield v
                count += 1
        k += 1
    k = 1
    while count < budget:
        for v in (Fraction(k, 2), Fraction(-k, 2)):
            if count < budget:
                yield v
                count += 1
        k += 2


# ---------------------------------------------------------------------------
# Lissajous curves

# cos(k*pi/n) = a + b*sqrt(D), listed as (a, b, D); D = 1 marks a rational value
_COS = {
    2: {1: (0, 0, 1)},
    3: {1: (Fraction(1, 2), 0, 1), 2: (Fraction(-1, 2), 0, 1)},
    4: {1: (0, Fraction(1, 2), 2), 2: (0, 0, 1), 3: (0, Fraction(-1, 2), 2)},
    5: {
        1: (Fraction(1, 4), Fraction(1, 4), 5),
        2: (Fraction(-1, 4), Fraction(1, 4), 5),
        3: (Fraction(1, 4), Fraction(-1, 4), 5),
        4: (Fraction(-1, 4), Fraction(-1, 4), 5),
    },
    6: {
        1: (0, Fraction(1, 2), 3),
        2: (Fraction(1, 2), 0, 1),
        3: (0, 0, 1),
        4: (Fraction(-1, 2), 0, 1),
        5: (0, Fraction(-1, 2), 3),
    },
}


def exact_cosine_field(ctx: PQPair):
    """Q or Q(sqrt D) containing every cos(k pi/q), cos(l pi/p); None if unsupported."""
    if ctx.p not in _COS or ctx.q not in _COS:
        return None
    radicands = {v[2] for n in (ctx.p, ctx.q) for v in _COS[n].values() if v[1]}
    if not radicands:
        return QQ
    if len(radicands) > 1:
        return None
    return quadratic_field(radicands.pop())


def exact_cosine(field, n: int, k: int) -> FieldElement:
    a, b, D = _COS[n][k]
    if not b:
        return field(a)
    return field([a, b])


@dataclass(frozen=True)
class LissajousResult:
    ctx: PQPair
    F: BiPoly
    descriptors: tuple
    float_nodes: tuple
    exact_field: object = None
    exact_nodes: tuple | None = None


def lissajous_polynomial(ctx: PQPair) -> BiPoly:
    """T_p(Y) - T_q(X), unnormalized."""
    return BiPoly.from_uni(chebyshev("T", ctx.p), "Y") - BiPoly.from_uni(chebyshev("T", ctx.q), "X")


def lissajous(ctx: PQPair) -> LissajousResult:
    import math

    F = lissajous_polynomial(ctx).scale(Fraction(1, 2 ** (ctx.p - 1)))
    descriptors = tuple(
        (k, l) for k in range(1, ctx.q) for l in range(1, ctx.p) if (k - l) % 2 == 0
    )
    float_nodes = tuple((math.cos(k * math.pi / ctx.q), math.cos(l * math.pi / ctx.p)) for k, l in descriptors)
    fld = exact_cosine_field(ctx)
    exact = None
    if fld is not None:
        exact = tuple((exact_cosine(fld, ctx.q, k), exact_cosine(fld, ctx.p, l)) for k, l in descriptors)
    return LissajousResult(ctx, F, descriptors, float_nodes, fld, exact)


def lissajous_curve(ctx: PQPair) -> NodalCurve:
    """The Lissajous curve as a certified nodal curve (needs exact cosines)."""
    res = lissajous(ctx)
    if res.exact_nodes is None:
        raise BadShape(f"no exact node coordinates available for type {ctx.p},{ctx.q}")
    F = res.F.embed(res.exact_field)
    return certified(ctx, F, res.exact_nodes)


# ---------------------------------------------------------------------------
# product curves


def _infer_field(values, default=QQ):
    for v in values:
        if isinstance(v, FieldElement):
            return v.field
    return default


def _distinct(values) -> bool:
    return len(set(values)) == len(values)


def product_polys(field, xs, ys, l1: int, l2: int) -> tuple[BiPoly, BiPoly]:
    """(G(Y), H(X)): first l2 (resp. l1) roots doubled, the rest simple."""
    Hx = UniPoly.from_roots(field, xs, [2] * l1 + [1] * (len(xs) - l1))
    Gy = UniPoly.from_roots(field, ys, [2] * l2 + [1] * (len(ys) - l2))
    return BiPoly.from_uni(Gy, "Y"), BiPoly.from_uni(Hx, "X")


def _check_grid_shape(ctx: PQPair, l1: int, l2: int):
    if not (1 <= l1 and 2 * l1 <= ctx.q):
        raise BadShape(f"need 1 <= l1 <= q/2, got l1={l1} for q={ctx.q}")
    if not (1 <= l2 and 2 * l2 <= ctx.p):
        raise BadShape(f"need 1 <= l2 <= p/2, got l2={l2} for p={ctx.p}")


def product_curve(
    ctx: PQPair,
    xs: Sequence,
    ys: Sequence,
    l1: int,
    l2: int,
    scalar=None,
    budget: int = DEFAULT_BUDGET,
    field=None,
) -> NodalCurve:
    """G(Y) + d*H(X) with nodes at the l1 x l2 grid of doubled roots."""
    _check_grid_shape(ctx, l1, l2)
    if len(xs) != ctx.q - l1:
        raise BadShape(f"need q - l1 = {ctx.q - l1} x-values, got {len(xs)}")
    if len(ys) != ctx.p - l2:
        raise BadShape(f"need p - l2 = {ctx.p - l2} y-values, got {len(ys)}")
    fld = field or _infer_field(list(xs) + list(ys))
    xs = [fld(x) for x in xs]
    ys = [fld(y) for y in ys]
    if not _distinct(xs) or not _distinct(ys):
        raise BadShape("coordinate lists must be pairwise distinct")
    G, H = product_polys(fld, xs, ys, l1, l2)
    nodes = [(xs[i], ys[j]) for i in range(l1) for j in range(l2)]
    candidates = [Fraction(scalar)] if scalar is not None else scalar_candidates(budget)
    failures = []
    for d in candidates:
        d = fld(d)
        F = G + H.scale(d)
        try:
            cert = certify_nodal(ctx, F, nodes)
        except NodalPQError as exc:
            failures.append(f"d={d}: {type(exc).__name__}")
            continue
        return NodalCurve(ctx, fld, F, tuple(nodes), cert, d)
    raise SearchExhausted("no scalar certified the product curve: " + ", ".join(failures[:8]))


def default_extra_coords(field, taken: Sequence, count: int) -> list:
    """Smallest integers 0, 1, -1, 2, -2, ... not already used."""
    used = {field(v) for v in taken}
    out = []
    k = 0
    while len(out) < count:
        for v in ((k,) if k == 0 else (k, -k)):
            fv = field(v)
            if fv not in used and len(out) < count:
                out.append(fv)
                used.add(fv)
        k += 1
    return out


def grid_curve(ctx: PQPair, xs: Sequence, ys: Sequence, extra_xs=None, extra_ys=None, **kw) -> NodalCurve:
    """Product curve with nodes exactly at xs x ys; extra simple roots auto-chosen."""
    fld = kw.pop("field", None) or _infer_field(list(xs) + list(ys))
    l1, l2 = len(xs), len(ys)
    _check_grid_shape(ctx, l1, l2)
    if extra_xs is None:
        extra_xs = default_extra_coords(fld, xs, ctx.q - 2 * l1)
    if extra_ys is None:
        extra_ys = default_extra_coords(fld, ys, ctx.p - 2 * l2)
    return product_curve(ctx, list(xs) + list(extra_xs), list(ys) + list(extra_ys), l1, l2, field=fld, **kw)


# ---------------------------------------------------------------------------
# elimination of nodes


def eliminate_nodes(
    C: NodalCurve,
    H: BiPoly,
    keep: Sequence[Node],
    budget: int = DEFAULT_BUDGET,
    allow_top_degree: bool = False,
    scalars: Iterable | None = None,
) -> NodalCurve:
    """Search d so that F + d*H is nodal with exactly the nodes ``keep``.

    With ``allow_top_degree`` H may reach filtration degree pq; each sum is
    then validated for Weierstrass form on its own.
    """
    ctx = C.ctx
    fld = C.field
    if H.field != fld:
        H = H.embed(fld) if H.field == QQ else H
    if H.is_zero():
        raise FiltrationTooBig("eliminating polynomial must be nonzero")
    deg = bp_filtration_degree(H, ctx)
    if deg > ctx.p * ctx.q or (deg == ctx.p * ctx.q and not allow_top_degree):
        raise FiltrationTooBig(f"filtration degree of H is {deg}, need < {ctx.p * ctx.q}")
    keep = canonical_nodes(tuple((fld(x), fld(y)) for x, y in keep))
    known = {node_key(n) for n in C.nodes}
    for n in keep:
        if node_key(n) not in known:
            raise KeepNotSubset(f"({n[0]}, {n[1]}) is not a node of the input curve")
        if not singular_at(H, n):
            raise AdjointNotSingular(f"H does not vanish doubly at ({n[0]}, {n[1]})")
    failures = []
    for d in scalars if scalars is not None else scalar_candidates(budget):
        d = fld(d)
        if not d:
            continue
        F = C.F + H.scale(d)
        ok, _ = bp_is_weierstrass_form(F, ctx)
        if not ok:
            failures.append(f"d={d}: not of type {ctx.p},{ctx.q}")
            continue
        # kept nodes are singular for every d; a failure here is a bug
        for n in keep:
            assert singular_at(F, n), "kept node lost singularity"
        try:
            cert = certify_nodal(ctx, F, keep)
        except NodalPQError as exc:
            failures.append(f"d={d}: {type(exc).__name__}")
            log.debug("elimination scalar %s rejected: %s", d, exc)
            continue
        return NodalCurve(ctx, fld, F, keep, cert, d)
    raise SearchExhausted("no elimination scalar certified: " + ", ".join(failures[:8]))


def squared_line_adjoint(ctx: PQPair, lines=(), verticals=(), field=None) -> BiPoly:
    """L^2 for L = prod (Y - m X + a) * prod (X - b)."""
    fld = field or _infer_field([v for pair in lines for v in pair] + list(verticals))
    X, Y = BiPoly.X(fld), BiPoly.Y(fld)
    L = BiPoly.constant(fld, 1)
    for m, a in lines:
        L = L * (Y - X.scale(fld(m)) + fld(a))
    for b in verticals:
        L = L * (X - fld(b))
    deg = bp_filtration_degree(L, ctx)
    if 2 * deg >= ctx.p * ctx.q:
        raise FiltrationTooBig(f"2 * deg_F(L) = {2 * deg} is not < pq = {ctx.p * ctx.q}")
    return L * L


# ---------------------------------------------------------------------------
# selector polynomials


def support_order(points) -> list:
    """(0,0), (1,0), ..., (0,1), (1,1), ...: row by row in the Y exponent."""
    return sorted(points, key=lambda pt: (pt[1], pt[0]))


def _monomial_row(x, y, support) -> tuple:
    return tuple(x**i * y**j for i, j in support)


def _coefficient_vectors(k: int, max_radius: int) -> Iterator[tuple]:
    """Nonzero integer vectors by growing radius, then sparsity."""
    for r in range(1, max_radius + 1):
        values = [v for s in range(1, r + 1) for v in (s, -s)]
        for s in range(1, k + 1):
            for pos in itertools.combinations(range(k), s):
                for vals in itertools.product(values, repeat=s):
                    if max(abs(v) for v in vals) != r:
                        continue
                    vec = [0] * k
                    for p_, v in zip(pos, vals):
                        vec[p_] = v
                    yield tuple(vec)


def selector_polynomial(
    ctx: PQPair,
    xs: Sequence,
    ys: Sequence,
    lam: Iterable,
    variant: str = "minus",
    max_tries: int = 200000,
) -> BiPoly:
    """H supported on the half-region L, zero exactly at the grid points of lam."""
    fld = _infer_field(list(xs) + list(ys))
    xs = [fld(x) for x in xs]
    ys = [fld(y) for y in ys]
    l1, l2 = len(xs), len(ys)
    region = lminus_region(ctx, l1, l2, variant)
    lam = sorted(set(tuple(pt) for pt in lam), key=lambda pt: (pt[1], pt[0]))
    for pt in lam:
        if pt not in region:
            raise BadShape(f"{pt} is not in L{'-' if variant == 'minus' else '='}")
    if not lam:
        return BiPoly.constant(fld, 1)
    support = support_order(half_region(ctx, l1, l2))
    A = Matrix(fld, tuple(_monomial_row(xs[m], ys[n], support) for m, n in lam))
    sol = mat_solve_affine(A, [fld.zero()] * len(lam))
    basis = sol.nullspace_basis
    lam_set = set(lam)
    others = [(m, n) for n in range(l2) for m in range(l1) if (m, n) not in lam_set]
    if not others:
        # every grid point must vanish; the zero polynomial is the only candidate
        return BiPoly(fld)
    if not basis:
        raise Infeasible("kernel of the vanishing system is trivial")
    rows = [_monomial_row(xs[m], ys[n], support) for m, n in others]
    # values of each basis vector at the other grid points
    vals = [[sum((a * b for a, b in zip(row, v)), fld.zero()) for row in rows] for v in basis]
    tries = 0
    for coeffs in _coefficient_vectors(len(basis), max_radius=4):
        tries += 1
        if tries > max_tries:
            break
        good = True
        for idx in range(len(rows)):
            acc = fld.zero()
            for c, col in zip(coeffs, vals):
                if c:
                    acc = acc + col[idx] * c
            if not acc:
                good = False
                break
        if good:
            u = [sum((v[i] * c for c, v in zip(coeffs, basis) if c), fld.zero()) for i in range(len(support))]
            return BiPoly(fld, {mon: c for mon, c in zip(support, u)})
    raise Infeasible("no combination of kernel vectors avoids every other grid point")


def grid_nodes(xs, ys, points) -> list:
    return [(xs[m], ys[n]) for m, n in points]


def curve_with_node_set(
    ctx: PQPair,
    xs: Sequence,
    ys: Sequence,
    lam: Iterable,
    variant: str = "minus",
    extra_xs=None,
    extra_ys=None,
    budget: int = DEFAULT_BUDGET,
) -> NodalCurve:
    """Nodal curve whose nodes are exactly (xs[m], ys[n]) for (m, n) in lam."""
    fld = _infer_field(list(xs) + list(ys))
    xs = [fld(x) for x in xs]
    ys = [fld(y) for y in ys]
    lam = sorted(set(tuple(pt) for pt in lam))
    grid = grid_curve(ctx, xs, ys, extra_xs, extra_ys, budget=budget, field=fld)
    S = selector_polynomial(ctx, xs, ys, lam, variant)
    keep = grid_nodes(xs, ys, lam)
    if len(keep) == len(grid.nodes):
        return grid
    return eliminate_nodes(grid, S * S, keep, budget=budget)


def intersect_node_sets(C1: NodalCurve, C2: NodalCurve, budget: int = DEFAULT_BUDGET) -> NodalCurve:
    """A curve whose node set is the intersection of the two node sets."""
    if C1.ctx != C2.ctx or C1.field != C2.field:
        raise ContextMismatch("curves must share type and field")
    if C1.certificate is None or C2.certificate is None:
        raise Uncertified("both curves must be certified")
    H = C2.F - C1.F
    if H.is_zero():
        return C1
    k2 = {node_key(n) for n in C2.nodes}
    keep = [n for n in C1.nodes if node_key(n) in k2]
    return eliminate_nodes(C1, H, keep, budget=budget, allow_top_degree=True)


def with_note(C: NodalCurve, note: str) -> NodalCurve:
    return replace(C, notes=C.notes + (note,))


def node_floats(C: NodalCurve) -> list[tuple[float, float]]:
    return [(to_float(x), to_float(y)) for x, y in C.nodes]
