"""Sparse bivariate polynomials over Q or a number field.

Terms are stored as ``{(i, j): coefficient}`` with ``i`` the exponent of X and
``j`` that of Y.  Zero coefficients are never stored.  Iteration and
serialization are sorted by ``(i, j)`` so output is canonical.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, InvalidContext
from .exact import QQ, FieldElement, UniPoly, element_from_json, field_from_json, parse_rational

NEG_INF = -math.inf


@dataclass(frozen=True)
class FiltrationWeights:
    """deg X = p, deg Y = q for coprime 1 < p < q."""

    p: int
    q: int

    def __post_init__(self):
        if not (1 < self.p < self.q) or math.gcd(self.p, self.q) != 1:
            raise InvalidContext(f"need coprime 1 < p < q, got p={self.p}, q={self.q}")


class BiPoly:
    __slots__ = ("field", "terms")

    def __init__(self, field=QQ, terms=None):
        self.field = field
        clean = {}
        if terms:
            for mon, c in terms.items():
                if not isinstance(c, FieldElement) or c.field != field:
                    c = field(c)
                if c:
                    clean[(int(mon[0]), int(mon[1]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, terms: dict) -> "BiPoly":
        out = cls.__new__(cls)
        out.field = field
        out.terms = terms
        return out

    # constructors
    @classmethod
    def X(cls, field=QQ) -> "BiPoly":
        return cls._raw(field, {(1, 0): field.one()})

    @classmethod
    def Y(cls, field=QQ) -> "BiPoly":
        return cls._raw(field, {(0, 1): field.one()})

    @classmethod
    def constant(cls, field, value) -> "BiPoly":
        return cls(field, {(0, 0): value})

    @classmethod
    def monomial(cls, field, i: int, j: int, coeff=1) -> "BiPoly":
        return cls(field, {(i, j): coeff})

    @classmethod
    def from_uni(cls, f: UniPoly, var: str = "X") -> "BiPoly":
        if var == "X":
            return cls(f.field, {(k, 0): c for k, c in enumerate(f.coeffs)})
        if var == "Y":
            return cls(f.field, {(0, k): c for k, c in enumerate(f.coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> FieldElement:
        return self.terms.get((i, j), self.field.zero())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: str) -> int:
        k = 0 if var == "X" else 1
        return max((m[k] for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = BiPoly.constant(self.field, other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.sorted_terms()))

    # arithmetic
    def _lift(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.field == self.field:
                return other
            if other.field == QQ:
                return other.embed(self.field)
            raise FieldMismatch("polynomials over different fields")
        return BiPoly.constant(self.field, self.field(other))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return BiPoly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "BiPoly":
        c = self.field(c) if not isinstance(c, FieldElement) else c
        if not c:
            return BiPoly._raw(self.field, {})
        return BiPoly._raw(self.field, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        other = self._lift(other)
        out = {}
        for (a, b), c in self.terms.items():
            for (e, f), d in other.terms.items():
                m = (a + e, b + f)
                v = out.get(m)
                out[m] = c * d if v is None else v + c * d
        return BiPoly._raw(self.field, {m: v for m, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = BiPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, var: str) -> "BiPoly":
        out = {}
        if var == "X":
            for (i, j), c in self.terms.items():
                if i:
                    out[(i - 1, j)] = c * i
        elif var == "Y":
            for (i, j), c in self.terms.items():
                if j:
                    out[(i, j - 1)] = c * j
        else:
            raise ValueError(f"unknown variable {var!r}")
        return BiPoly._raw(self.field, out)

    def __call__(self, x, y) -> FieldElement:
        x = self.field(x)
        y = self.field(y)
        xp = {}
        yp = {}
        acc = self.field.zero()
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x**i
            if j not in yp:
                yp[j] = y**j
            acc = acc + c * xp[i] * yp[j]
        return acc

    def eval_float(self, x: float, y: float) -> float:
        return sum(float(c) * x**i * y**j for (i, j), c in self.terms.items())

    def embed(self, field) -> "BiPoly":
        if field == self.field:
            return self
        return BiPoly._raw(field, {m: field(c) for m, c in self.terms.items()})

    def substitute_translate(self, cx, cy) -> "BiPoly":
        """f(X + cx, Y + cy)."""
        X = BiPoly.X(self.field) + self.field(cx)
        Y = BiPoly.Y(self.field) + self.field(cy)
        out = BiPoly(self.field)
        xs = {}
        ys = {}
        for (i, j), c in self.terms.items():
            if i not in xs:
                xs[i] = X**i
            if j not in ys:
                ys[j] = Y**j
            out = out + (xs[i] * ys[j]).scale(c)
        return out

    # serialization
    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "terms": [[i, j, c.to_json()] for (i, j), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data, field=None) -> "BiPoly":
        if field is None:
            field = field_from_json(data.get("field", "QQ"))
        return cls(field, {(i, j): element_from_json(field, c) for i, j, c in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("X" if i == 1 else f"X^{i}"),
                    "" if j == 0 else ("Y" if j == 1 else f"Y^{j}"),
                ) if s
            )
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"BiPoly({self})"


_TERM_RE = re.compile(
    r"""^(?P<coef>\(?[0-9]+(?:/[0-9]+)?\)?)?\*?
        (?P<mons>(?:[XY](?:\^[0-9]+)?\*?)*)$""",
    re.VERBOSE,
)


def parse_bipoly(text: str, field=QQ) -> BiPoly:
    """Parse sums like ``8Y^4-8Y^2+1-64X^7`` or ``(3/2)*X^2*Y``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    out = BiPoly(field)
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        m = _TERM_RE.match(body)
        if not m or not body:
            raise ValueError(f"cannot parse term {piece!r}")
        coef = m.group("coef")
        c = parse_rational(coef.strip("()")) if coef else Fraction(1)
        i = j = 0
        for var, exp in re.findall(r"([XY])(?:\^([0-9]+))?", m.group("mons") or ""):
            e = int(exp) if exp else 1
            if var == "X":
                i += e
            else:
                j += e
        out = out + BiPoly.monomial(field, i, j, c * sign)
    return out


def bp_arith(op: str, f: BiPoly, g) -> BiPoly:
    if isinstance(g, BiPoly) and g.field != f.field:
        raise FieldMismatch("polynomials over different fields")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def bp_partial(f: BiPoly, var: str) -> BiPoly:
    return f.partial(var)


def bp_hessian_det(f: BiPoly) -> BiPoly:
    fx = f.partial("X")
    fy = f.partial("Y")
    fxx = fx.partial("X")
    fyy = fy.partial("Y")
    fxy = fx.partial("Y")
    return fxx * fyy - fxy * fxy


def _weights(w) -> tuple[int, int]:
    if isinstance(w, tuple):
        return w
    return w.p, w.q


def bp_filtration_degree(f: BiPoly, w) -> float:
    """max(i*p + j*q) over the terms; -inf for the zero polynomial."""
    p, q = _weights(w)
    return max((i * p + j * q for i, j in f.terms), default=NEG_INF)


def bp_is_weierstrass_form(f: BiPoly, w) -> tuple[bool, list[str]]:
    p, q = _weights(w)
    problems = []
    if f.coeff(0, p) != 1:
        problems.append(f"coefficient of Y^{p} is {f.coeff(0, p)}, expected 1")
    if not f.coeff(q, 0):
        problems.append(f"coefficient of X^{q} is zero")
    for (i, j), c in f.sorted_terms():
        if (i, j) in ((0, p), (q, 0)):
            continue
        if i * p + j * q >= p * q:
            problems.append(f"term {c}*X^{i}*Y^{j} has filtration degree {i * p + j * q} >= {p * q}")
    return not problems, problems


def chebyshev(kind: str, n: int) -> UniPoly:
    """T_n (first kind) or U_n (second kind) over Q."""
    if n < 0:
        raise ValueError("Chebyshev index must be >= 0")
    X = UniPoly.x(QQ)
    prev = UniPoly(QQ, [1])
    if kind == "T":
        cur = X
    elif kind == "U":
        cur = X * 2
    else:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, X * cur * 2 - prev
    return cur


def uni_compose(f: UniPoly, g: UniPoly) -> UniPoly:
    """f(g(X)) by Horner."""
    acc = UniPoly(f.field)
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


def jacobian_quotient_dim(f: BiPoly):
    """dim K[X,Y]/(f, f_X, f_Y), or :data:`INFINITE` if not zero-dimensional."""
    from .groebner import quotient_dimension

    return quotient_dimension([f, f.partial("X"), f.partial("Y")])


INFINITE = math.inf
