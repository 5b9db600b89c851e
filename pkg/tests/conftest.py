from fractions import Fraction

import pytest

from nodalpq.bipoly import BiPoly
from nodalpq.curves import eliminate_nodes, lissajous_curve
from nodalpq.exact import UniPoly
from nodalpq.semigroup import PQPair


def lissajous_35_nodes(K):
    """The four nodes of the (3,5) Lissajous curve, labelled by k in cos(k pi/5)."""
    s5 = K([0, 1])
    half = K(Fraction(1, 2))
    return {
        1: ((1 + s5) / 4, half),
        2: ((s5 - 1) / 4, -half),
        3: ((1 - s5) / 4, half),
        4: (-(1 + s5) / 4, -half),
    }


def interpolating_parabola(K, pts):
    f = UniPoly(K, [])
    for i, (xi, yi) in enumerate(pts):
        term = UniPoly(K, [yi])
        for j, (xj, _) in enumerate(pts):
            if j != i:
                term = term * UniPoly(K, [-xj, K(1)]) * (1 / (xi - xj))
        f = f + term
    return f


def elimination_family(C):
    """Curves C1..C4 obtained from the (3,5) Lissajous curve by adding adjoints.

    C2..C4 add G/4 for the polynomials G = (Y+1/2)^2/50, (X-(sqrt5-1)/4)^2/50
    and 1/50.  C1 uses the square of the parabola through the nodes k = 2, 3, 4.
    """
    K = C.field
    X, Y = BiPoly.X(K), BiPoly.Y(K)
    n = lissajous_35_nodes(K)
    s5 = K([0, 1])
    half = K(Fraction(1, 2))
    q = K(Fraction(1, 200))
    G2 = ((Y + half) ** 2).scale(q)
    G3 = ((X + (1 - s5) / 4) ** 2).scale(q)
    G4 = BiPoly.constant(K, q)
    keep1 = [n[3], n[2], n[4]]
    phi = Y - BiPoly.from_uni(interpolating_parabola(K, keep1), "X")
    return {
        1: eliminate_nodes(C, phi * phi, keep1),
        2: eliminate_nodes(C, G2, [n[2], n[4]], scalars=[1]),
        3: eliminate_nodes(C, G3, [n[2]], scalars=[1]),
        4: eliminate_nodes(C, G4, [], scalars=[1]),
    }


@pytest.fixture(scope="session")
def ctx35():
    return PQPair(3, 5)


@pytest.fixture(scope="session")
def L35(ctx35):
    return lissajous_curve(ctx35)


@pytest.fixture(scope="session")
def family35(L35):
    return elimination_family(L35)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
