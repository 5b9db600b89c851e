"""Buchberger's algorithm in K[X, Y] with graded lexicographic order, X > Y.

Only what the certification needs: a Groebner basis of a small ideal and the
size of the standard-monomial staircase.  Coefficients over Q are handled as
bare Fractions for speed; number-field coefficients stay FieldElements.
"""

from __future__ import annotations

import math

from .exact import QQ


def _key(m):
    return (m[0] + m[1], m[0])


def _lead(f: dict):
    return max(f, key=_key)


def _monic(f: dict) -> dict:
    lm = _lead(f)
    inv = 1 / f[lm]
    return {m: c * inv for m, c in f.items()}


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _reduce(f: dict, basis: list, leads: list) -> dict:
    """Full normal form of f modulo the monic polynomials in ``basis``."""
    f = dict(f)
    rem = {}
    while f:
        m = _lead(f)
        c = f.pop(m)
        for g, lm in zip(basis, leads):
            if lm[0] <= m[0] and lm[1] <= m[1]:
                sx, sy = m[0] - lm[0], m[1] - lm[1]
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    t = (gm[0] + sx, gm[1] + sy)
                    v = f.get(t)
                    v = -c * gc if v is None else v - c * gc
                    if v:
                        f[t] = v
                    else:
                        del f[t]
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: dict, g: dict, lf, lg) -> dict:
    lcm_ = (max(lf[0], lg[0]), max(lf[1], lg[1]))
    out = {}
    for poly, lead, sign in ((f, lf, 1), (g, lg, -1)):
        sx, sy = lcm_[0] - lead[0], lcm_[1] - lead[1]
        for m, c in poly.items():
            t = (m[0] + sx, m[1] + sy)
            v = out.get(t)
            v = sign * c if v is None else v + sign * c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def groebner_basis(polys) -> list[dict]:
    """Monic Groebner basis (not reduced) of the ideal generated by ``polys``.

    ``polys`` are BiPoly instances over a common field.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    rational = polys[0].field == QQ
    gens = []
    for p in polys:
        if rational:
            gens.append({m: c.coords[0] for m, c in p.terms.items()})
        else:
            gens.append(dict(p.terms))
    basis: list[dict] = []
    leads: list = []
    for g in gens:
        r = _reduce(g, basis, leads)
        if r:
            r = _monic(r)
            if _lead(r) == (0, 0):
                return [r]
            basis.append(r)
            leads.append(_lead(r))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        # normal strategy: smallest lcm first
        pairs.sort(key=lambda ij: _key((max(leads[ij[0]][0], leads[ij[1]][0]), max(leads[ij[0]][1], leads[ij[1]][1]))))
        i, j = pairs.pop(0)
        li, lj = leads[i], leads[j]
        # product criterion
        if min(li[0], lj[0]) == 0 and min(li[1], lj[1]) == 0:
            continue
        s = _spoly(basis[i], basis[j], li, lj)
        r = _reduce(s, basis, leads)
        if not r:
            continue
        r = _monic(r)
        lr = _lead(r)
        if lr == (0, 0):
            return [r]
        k = len(basis)
        basis.append(r)
        leads.append(lr)
        pairs.extend((a, k) for a in range(k))
    return basis


def staircase(leads) -> list | None:
    """Standard monomials for the given leading monomials, or None if infinite."""
    leads = list(leads)
    if (0, 0) in leads:
        return []
    xs = [m[0] for m in leads if m[1] == 0]
    ys = [m[1] for m in leads if m[0] == 0]
    if not xs or not ys:
        return None
    ax, by = min(xs), min(ys)
    return [
        (i, j)
        for i in range(ax)
        for j in range(by)
        if not any(_divides(lm, (i, j)) for lm in leads)
    ]


def quotient_dimension(polys):
    basis = groebner_basis(polys)
    if not basis:
        return math.inf
    stairs = staircase(_lead(g) for g in basis)
    return math.inf if stairs is None else len(stairs)
