import json
import math
from fractions import Fraction

import pytest

from conftest import lissajous_35_nodes
from nodalpq.bipoly import BiPoly, bp_filtration_degree, parse_bipoly
from nodalpq.curves import (
    NodalCurve,
    certify_nodal,
    curve_with_node_set,
    default_extra_coords,
    eliminate_nodes,
    grid_curve,
    intersect_node_sets,
    lissajous,
    lissajous_curve,
    node_key,
    product_curve,
    scalar_candidates,
    selector_polynomial,
    squared_line_adjoint,
)
from nodalpq.errors import (
    AdjointNotSingular,
    BadShape,
    ExtraSingularities,
    FiltrationTooBig,
    KeepNotSubset,
    NotANode,
    NotSingularAtClaim,
    NotWeierstrass,
    SearchExhausted,
)
from nodalpq.exact import QQ, quadratic_field
from nodalpq.semigroup import PQPair, half_region

X, Y = BiPoly.X(), BiPoly.Y()


def test_scalar_candidates():
    seq = list(scalar_candidates(64))
    assert len(seq) == 64 and len(set(seq)) == 64
    assert seq[:4] == [1, -1, 2, -2]
    assert seq[31] == -16 and seq[32] == Fraction(1, 2) and seq[-1] == Fraction(-31, 2)
    assert Fraction(0) not in seq


def test_certify_simple_node():
    F = Y**2 - X**2 - X**3
    cert = certify_nodal(PQPair(2, 3), F, [(0, 0)])
    assert cert.tjurina_total == 1 and cert.genus == 0 and cert.delta_infinity == 0


def test_certify_failures():
    ctx = PQPair(2, 3)
    with pytest.raises(NotWeierstrass):
        certify_nodal(ctx, Y**2 * 2 - X**3, [])
    with pytest.raises(NotSingularAtClaim) as info:
        certify_nodal(ctx, Y**2 - X**3 - X**2, [(1, 0)])
    assert info.value.point[0] == 1
    with pytest.raises(NotANode):
        certify_nodal(ctx, Y**2 - X**3, [(0, 0)])
    with pytest.raises(ExtraSingularities):
        certify_nodal(ctx, Y**2 - X**3 - X**2, [])
    # a tacnode-like point: Tjurina number 3 but no node claimed
    with pytest.raises(ExtraSingularities):
        certify_nodal(PQPair(2, 5), (Y - X**2) ** 2 - X**5 + X**4, [])


def test_lissajous_35(L35):
    assert L35.F == parse_bipoly("Y^3 - (3/4)Y - 4X^5 + 5X^3 - (5/4)X").embed(L35.field)
    nodes = lissajous_35_nodes(L35.field)
    assert {node_key(n) for n in L35.nodes} == {node_key(n) for n in nodes.values()}
    assert L35.certificate.tjurina_total == 4 and L35.genus == 0
    assert L35.certificate.delta_infinity == 2


def test_lissajous_descriptors():
    res = lissajous(PQPair(3, 5))
    assert res.descriptors == ((1, 1), (2, 2), (3, 1), (4, 2))
    assert len(res.float_nodes) == 4
    for (x, y), (k, l) in zip(res.float_nodes, res.descriptors):
        assert math.isclose(x, math.cos(k * math.pi / 5)) and math.isclose(y, math.cos(l * math.pi / 3))
    big = lissajous(PQPair(7, 9))
    assert big.exact_nodes is None and len(big.descriptors) == 24


@pytest.mark.parametrize("pq", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_lissajous_certifies(pq):
    C = lissajous_curve(PQPair(*pq))
    assert C.genus == 0 and C.certificate.tjurina_total == C.ctx.gap_count


def test_lissajous_needs_one_quadratic_field():
    # cos(pi/4) and cos(pi/5) live in different quadratic fields
    with pytest.raises(BadShape):
        lissajous_curve(PQPair(4, 5))


def test_product_curve_59():
    C = product_curve(PQPair(5, 9), [0, 1, 2, 3, 4], [0, 1, 2, 3], 4, 1, scalar=-1)
    assert [(n[0].rational(), n[1].rational()) for n in C.nodes] == [(0, 0), (1, 0), (2, 0), (3, 0)]
    assert C.genus == 12 and C.elimination_scalar == -1
    expected = parse_bipoly("Y^2") * (Y - 1) * (Y - 2) * (Y - 3) - X**2 * (X - 1) ** 2 * (X - 2) ** 2 * (X - 3) ** 2 * (X - 4)
    assert C.F == expected


def test_product_curve_shapes():
    ctx = PQPair(5, 7)
    with pytest.raises(BadShape):
        product_curve(ctx, [0, 1, 2, 3, 4], [0, 1, 2], 4, 2)
    with pytest.raises(BadShape):
        product_curve(ctx, [0, 1, 1, 3], [0, 1, 2], 3, 2)
    with pytest.raises(BadShape):
        product_curve(ctx, [0, 1, 2], [0, 1, 2], 3, 2)


def test_default_extra_coords():
    assert default_extra_coords(QQ, [0, 1], 3) == [QQ(-1), QQ(2), QQ(-2)]
    assert default_extra_coords(QQ, [5], 2) == [QQ(0), QQ(1)]


def test_grid_curve_over_number_field():
    K = quadratic_field(2)
    t = K.gen()
    C = grid_curve(PQPair(3, 5), [t, -t], [Fraction(1, 3)])
    assert C.field == K and len(C.nodes) == 2


def test_family_node_counts(family35):
    assert [len(family35[i].nodes) for i in (1, 2, 3, 4)] == [3, 2, 1, 0]
    for C in family35.values():
        assert C.certificate.tjurina_total == len(C.nodes)


def test_g1_is_too_big(L35):
    K = L35.field
    s5 = K([0, 1])
    G1 = ((X.embed(K) - (1 - s5) / 4) ** 2 * (Y.embed(K) + Fraction(1, 2)) ** 2).scale(Fraction(1, 200))
    assert bp_filtration_degree(G1, L35.ctx) == 16
    n = lissajous_35_nodes(K)
    with pytest.raises(FiltrationTooBig):
        eliminate_nodes(L35, G1, [n[3], n[2], n[4]])


def test_eliminate_preconditions(L35):
    K = L35.field
    n = lissajous_35_nodes(K)
    G = (Y.embed(K) + Fraction(1, 2)) ** 2
    with pytest.raises(KeepNotSubset):
        eliminate_nodes(L35, G, [(0, 0)])
    with pytest.raises(AdjointNotSingular):
        eliminate_nodes(L35, G, [n[1]])
    with pytest.raises(FiltrationTooBig):
        eliminate_nodes(L35, BiPoly(K), [])
    with pytest.raises(SearchExhausted):
        eliminate_nodes(L35, G, [n[2], n[4]], scalars=[])


def test_eliminate_keeps_nodes_for_every_scalar(L35):
    K = L35.field
    n = lissajous_35_nodes(K)
    G = (Y.embed(K) + Fraction(1, 2)) ** 2
    for d in list(scalar_candidates(8)):
        F = L35.F + G.scale(K(d))
        for node in (n[2], n[4]):
            x, y = node
            assert not F(x, y) and not F.partial("X")(x, y) and not F.partial("Y")(x, y)


def test_squared_line_adjoint():
    ctx = PQPair(5, 7)
    H = squared_line_adjoint(ctx, lines=[(0, 0)])
    assert H == Y**2
    with pytest.raises(FiltrationTooBig):
        squared_line_adjoint(ctx, lines=[(0, 0)], verticals=[1, 2, 3])
    H = squared_line_adjoint(ctx, verticals=[1, 2])
    assert bp_filtration_degree(H, ctx) == 20


def test_selector_polynomial_vanishing_pattern():
    ctx = PQPair(7, 9)
    xs, ys = [0, 1, 2, 3], [0, 1, 2]
    lam = [(0, 0), (1, 0), (0, 1)]
    H = selector_polynomial(ctx, xs, ys, lam)
    assert set(H.terms) <= half_region(ctx, 4, 3)
    for m in range(4):
        for n in range(3):
            value = H(xs[m], ys[n])
            assert (not value) == ((m, n) in lam)
    assert selector_polynomial(ctx, xs, ys, []) == BiPoly.constant(QQ, 1)
    with pytest.raises(BadShape):
        selector_polynomial(ctx, xs, ys, [(2, 2)])


def test_curve_with_node_set():
    ctx = PQPair(5, 7)
    C = curve_with_node_set(ctx, [0, 1, 2], [0, 1], [(0, 0), (1, 0), (0, 1)])
    assert sorted((n[0].rational(), n[1].rational()) for n in C.nodes) == [(0, 0), (0, 1), (1, 0)]
    assert C.genus == 9


def test_intersect_node_sets():
    ctx = PQPair(5, 7)
    C1 = curve_with_node_set(ctx, [0, 1, 2], [0, 1], [(0, 0), (1, 0)])
    C2 = curve_with_node_set(ctx, [0, 1, 2], [0, 1], [(0, 0), (0, 1)])
    C = intersect_node_sets(C1, C2)
    assert [(n[0].rational(), n[1].rational()) for n in C.nodes] == [(0, 0)]
    assert intersect_node_sets(C1, C1) is C1


def test_json_roundtrip(L35, tmp_path):
    text = json.dumps(L35.to_json(), sort_keys=True)
    back = NodalCurve.from_json(json.loads(text), recertify=True)
    assert back.F == L35.F and back.nodes == L35.nodes
    assert json.dumps(back.to_json(), sort_keys=True) == text


def test_node_order_is_canonical(L35):
    keys = [node_key(n) for n in L35.nodes]
    assert keys == sorted(keys)
    with pytest.raises(BadShape):
        NodalCurve(L35.ctx, L35.field, L35.F, L35.nodes + L35.nodes[:1])
