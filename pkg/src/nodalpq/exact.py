"""Exact arithmetic over Q and small number fields Q[t]/(m(t)).

Rationals are :class:`fractions.Fraction`.  Every scalar the rest of the
package touches is a :class:`FieldElement`, which carries a reference to its
field and a tuple of power-basis coordinates (lowest degree first).

Linear algebra is fraction-free: over Q, rows are cleared to primitive
integer rows and eliminated with Bareiss' exact-division scheme; over a number
field the same scheme runs with field division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotMonic,
    NotSquarefree,
    ZeroDivisor,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# raw polynomial helpers over Q (ascending lists of Fractions)


def _qtrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(f: list, g: list) -> tuple[list, list]:
    f = _qtrim(list(f))
    g = _qtrim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO] * max(len(f) - len(g) + 1, 0)
    lc = g[-1]
    while len(f) >= len(g):
        k = len(f) - len(g)
        factor = f[-1] / lc
        quot[k] = factor
        for i, gi in enumerate(g):
            f[i + k] -= factor * gi
        f.pop()
        _qtrim(f)
    return _qtrim(quot), f


def _qxgcd(f: list, g: list) -> tuple[list, list]:
    """Return (monic gcd, s) with s*f = gcd mod g."""
    r0, r1 = _qtrim(list(f)), _qtrim(list(g))
    s0, s1 = [ONE], []
    while r1:
        q, r = _qdivmod(r0, r1)
        qs = _qmul(q, s1)
        s_next = _qtrim([a - b for a, b in _zip_pad(s0, qs)])
        r0, r1 = r1, r
        s0, s1 = s1, s_next
    lc = r0[-1]
    return [c / lc for c in r0], [c / lc for c in s0]


def _qmul(f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _zip_pad(f: list, g: list):
    n = max(len(f), len(g))
    for i in range(n):
        yield (f[i] if i < len(f) else ZERO), (g[i] if i < len(g) else ZERO)


# ---------------------------------------------------------------------------
# fields


class RationalField:
    """The field Q.  Use the module-level singleton :data:`QQ`."""

    degree = 1
    modulus = None
    real_root_hint = None

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"cannot coerce {value!r} into Q")
            return value
        return FieldElement(self, (parse_rational(value),))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (ZERO,))

    def one(self) -> "FieldElement":
        return FieldElement(self, (ONE,))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return "QQ"


QQ = RationalField()


class NumberField:
    """Q[t]/(m(t)) for a monic squarefree modulus m.

    Irreducibility is not checked; an element sharing a factor with the
    modulus raises :class:`ZeroDivisor` on inversion.
    """

    def __init__(self, modulus, real_root_hint: float | None = None, name: str = "t"):
        if isinstance(modulus, UniPoly):
            if modulus.field != QQ:
                raise FieldMismatch("modulus must have rational coefficients")
            coeffs = [c.coords[0] for c in modulus.coeffs]
        else:
            coeffs = [parse_rational(c) for c in modulus]
        coeffs = _qtrim(coeffs)
        if len(coeffs) < 2:
            raise NotMonic("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise NotMonic(f"modulus leading coefficient is {coeffs[-1]}, not 1")
        deriv = [i * c for i, c in enumerate(coeffs)][1:]
        g, _ = _qxgcd(coeffs, deriv)
        if len(g) > 1:
            raise NotSquarefree("modulus shares a factor with its derivative")
        self.modulus = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.real_root_hint = real_root_hint
        self.name = name
        n = self.degree
        # t^k reduced for k = n .. 2n-2
        table = []
        cur = [-c for c in coeffs[:-1]]
        for _ in range(max(n - 1, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [ZERO] + cur[:-1]
            if top:
                cur = [a - top * m for a, m in zip(cur, coeffs[:-1])]
        self._reduction = table

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if value.field == QQ:
                return FieldElement(self, (value.coords[0],) + (ZERO,) * (self.degree - 1))
            raise FieldMismatch("cannot coerce between distinct number fields")
        if isinstance(value, (list, tuple)):
            coords = [parse_rational(v) for v in value]
            if len(coords) > self.degree:
                raise DimensionMismatch("too many power-basis coordinates")
            coords += [ZERO] * (self.degree - len(coords))
            return FieldElement(self, tuple(coords))
        return FieldElement(self, (parse_rational(value),) + (ZERO,) * (self.degree - 1))

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self([-self.modulus[0]])
        return self([0, 1])

    def zero(self) -> "FieldElement":
        return FieldElement(self, (ZERO,) * self.degree)

    def one(self) -> "FieldElement":
        return self(1)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({format_uni(self.modulus, self.name)})"

    def to_json(self):
        out = {"modulus": [format_rational(c) for c in self.modulus]}
        if self.real_root_hint is not None:
            out["real_root_hint"] = self.real_root_hint
        return out

    # raw coordinate arithmetic
    def _mul(self, a: tuple, b: tuple) -> tuple:
        n = self.degree
        prod = [ZERO] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                row = self._reduction[k - n]
                for i in range(n):
                    out[i] += c * row[i]
        return tuple(out)

    def _inv(self, a: tuple) -> tuple:
        g, s = _qxgcd(list(a), list(self.modulus))
        if len(g) > 1:
            raise ZeroDivisor(
                f"element shares the factor {format_uni(g, self.name)} with the modulus",
                factor=tuple(g),
            )
        s = s + [ZERO] * (self.degree - len(s))
        return tuple(s[: self.degree])


def field_make(modulus, real_root_hint: float | None = None) -> NumberField:
    return NumberField(modulus, real_root_hint)


def field_from_json(data):
    if data == "QQ" or data is None:
        return QQ
    return NumberField(data["modulus"], data.get("real_root_hint"))


def quadratic_field(D: int) -> NumberField:
    """Q(sqrt D) with generator t, t^2 = D."""
    return NumberField([-D, 0, 1], real_root_hint=float(D) ** 0.5)


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords: tuple):
        self.field = field
        self.coords = coords

    def _pair(self, other):
        """Both operands in a common field, or (None, None) for foreign types."""
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return self, other
            if other.field == QQ:
                return self, self.field(other)
            if self.field == QQ:
                return other.field(self), other
            raise FieldMismatch("operands live in different fields")
        if isinstance(other, (int, Fraction)):
            return self, self.field(other)
        return None, None

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        self, other = self._pair(other)
        if self is None:
            return NotImplemented
        if self.field.degree == 1:
            return FieldElement(self.field, (self.coords[0] + other.coords[0],))
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        self, other = self._pair(other)
        if self is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        self, other = self._pair(other)
        if self is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        self, other = self._pair(other)
        if self is None:
            return NotImplemented
        if self.field.degree == 1:
            return FieldElement(self.field, (self.coords[0] * other.coords[0],))
        if not any(other.coords[1:]):
            c = other.coords[0]
            return FieldElement(self.field, tuple(a * c for a in self.coords))
        if not any(self.coords[1:]):
            c = self.coords[0]
            return FieldElement(self.field, tuple(c * a for a in other.coords))
        return FieldElement(self.field, self.field._mul(self.coords, other.coords))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        if not any(self.coords[1:]):
            c = 1 / self.coords[0]
            return FieldElement(self.field, (c,) + (ZERO,) * (self.field.degree - 1))
        return FieldElement(self.field, self.field._inv(self.coords))

    def __truediv__(self, other):
        self, other = self._pair(other)
        if self is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero")
        if not any(other.coords[1:]):
            c = other.coords[0]
            return FieldElement(self.field, tuple(a / c for a in self.coords))
        return self * other.inv()

    def __rtruediv__(self, other):
        self, other = self._pair(other)
        if self is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coords[0] == other and not any(self.coords[1:])
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            if other.field == QQ or self.field == QQ:
                return self.coords[0] == other.coords[0] and not any(self.coords[1:]) and not any(other.coords[1:])
            return False
        return self.coords == other.coords

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if any(self.coords[1:]):
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def to_json(self):
        if self.field.degree == 1 and self.field == QQ:
            return format_rational(self.coords[0])
        return [format_rational(c) for c in self.coords]

    def __float__(self):
        return to_float(self)

    def __str__(self):
        if self.field == QQ:
            return format_rational(self.coords[0])
        return format_uni(self.coords, getattr(self.field, "name", "t"))

    def __repr__(self):
        return f"FieldElement({self})"


def element_from_json(field, data) -> FieldElement:
    if isinstance(data, list):
        return field(data)
    return field(parse_rational(data))


def format_uni(coeffs: Sequence[Fraction], var: str = "X") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            term = mono
        elif mono and c == -1:
            term = "-" + mono
        else:
            term = format_rational(c) + ("*" + mono if mono else "")
        parts.append(term)
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def field_arith(op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    """Dispatch by name: add, sub, mul, div, inv."""
    if op == "inv":
        return a.inv()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.field != b.field:
        raise FieldMismatch("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def real_root(field) -> float:
    """The real root of the modulus used to embed ``field`` into R.

    numpy locates candidates; the chosen one is polished by bisection on the
    exact modulus.  The root nearest ``real_root_hint`` wins, else the largest.
    """
    if field == QQ:
        return 0.0
    cached = getattr(field, "_real_root", None)
    if cached is not None:
        return cached
    import numpy as np

    coeffs = [float(c) for c in field.modulus]
    candidates = [r.real for r in np.roots(coeffs[::-1]) if abs(r.imag) < 1e-7]
    if not candidates:
        raise ValueError(f"{field!r} has no real root")
    hint = field.real_root_hint
    root = min(candidates, key=lambda r: abs(r - hint)) if hint is not None else max(candidates)

    def m(x: Fraction) -> Fraction:
        acc = ZERO
        for c in reversed(field.modulus):
            acc = acc * x + c
        return acc

    lo = Fraction(root) - Fraction(1, 10**6)
    hi = Fraction(root) + Fraction(1, 10**6)
    if m(lo) * m(hi) < 0:
        for _ in range(60):
            mid = (lo + hi) / 2
            if m(lo) * m(mid) <= 0:
                hi = mid
            else:
                lo = mid
        root = float((lo + hi) / 2)
    field._real_root = root
    return root


def to_float(x: FieldElement) -> float:
    if x.field.degree == 1 and x.field == QQ:
        return float(x.coords[0])
    t = real_root(x.field)
    acc = 0.0
    for c in reversed(x.coords):
        acc = acc * t + float(c)
    return acc


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial, ascending coefficients, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable = ()):
        cs = [c if isinstance(c, FieldElement) and c.field == field else field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field=QQ) -> "UniPoly":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field, value) -> "UniPoly":
        return cls(field, [value])

    @classmethod
    def from_roots(cls, field, roots: Iterable, multiplicities: Iterable[int] | None = None) -> "UniPoly":
        out = cls(field, [1])
        roots = list(roots)
        mults = list(multiplicities) if multiplicities is not None else [1] * len(roots)
        for r, m in zip(roots, mults):
            factor = cls(field, [-field(r), 1])
            for _ in range(m):
                out = out * factor
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch("polynomials over different fields")
            return other
        return UniPoly(self.field, [other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        return UniPoly(
            self.field,
            [
                (self.coeffs[i] if i < len(self.coeffs) else z) + (other.coeffs[i] if i < len(other.coeffs) else z)
                for i in range(n)
            ],
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return UniPoly(self.field, [c * other for c in self.coeffs])
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly(self.field, [1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [self.field.zero()] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lc = other.lc().inv()
        while len(rem) >= len(other.coeffs) and rem:
            k = len(rem) - len(other.coeffs)
            factor = rem[-1] * inv_lc
            quot[k] = factor
            for i, g in enumerate(other.coeffs):
                rem[i + k] = rem[i + k] - factor * g
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(self.field, quot), UniPoly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * self.lc().inv()

    def derivative(self) -> "UniPoly":
        return UniPoly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def embed(self, field) -> "UniPoly":
        return UniPoly(field, [field(c) for c in self.coeffs])

    def __str__(self):
        if self.field == QQ:
            return format_uni([c.coords[0] for c in self.coeffs])
        return " + ".join(f"({c})*X^{i}" for i, c in enumerate(self.coeffs) if c) or "0"

    def __repr__(self):
        return f"UniPoly({self})"


def uni_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    field: object
    entries: tuple

    @classmethod
    def from_rows(cls, field, rows) -> "Matrix":
        rows = [tuple(field(v) for v in row) for row in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        return cls(field, tuple(rows))

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, tuple((z,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def apply(self, v: Sequence[FieldElement]) -> list[FieldElement]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != {self.cols} columns")
        out = []
        for row in self.entries:
            acc = self.field.zero()
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    rows = []
    for ra in A.entries:
        for rb in B.entries:
            rows.append(tuple(a * b for a in ra for b in rb))
    return Matrix(A.field, tuple(rows))


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [x.coords[0] for x in row]
        den = 1
        for v in fr:
            den = lcm(den, v.denominator)
        ints = [int(v * den) for v in fr]
        content = 0
        for v in ints:
            content = gcd(content, v)
        if content > 1:
            ints = [v // content for v in ints]
        out.append(ints)
    return out


def _bareiss(rows: list[list], ncols: int, exact_div, one) -> tuple[list[list], list[int]]:
    """Fraction-free row echelon form; returns (rows, pivot columns)."""
    m = len(rows)
    prev = one
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pc = pr[c]
        for i in range(r + 1, m):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = exact_div(pc * ri[j] - f * pr[j], prev)
            ri[c] = 0 * pc
        prev = pc
        pivots.append(c)
        r += 1
    return rows, pivots


def _int_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    assert rem == 0, "Bareiss division must be exact"
    return q


def _echelon(field, rows, ncols) -> tuple[list[list], list[int], bool]:
    """Echelon form; the boolean says whether rows are plain integers."""
    if field == QQ:
        ints = _integer_rows(rows)
        return (*_bareiss(ints, ncols, _int_div, 1), True)
    work = [list(r) for r in rows]
    return (*_bareiss(work, ncols, lambda a, b: a / b, field.one()), False)


def mat_rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    _, pivots, _ = _echelon(M.field, M.entries, M.cols)
    return len(pivots)


@dataclass(frozen=True)
class AffineSolution:
    particular: tuple
    nullspace_basis: tuple


def mat_solve_affine(A: Matrix, b: Sequence) -> AffineSolution | None:
    """Solve A x = b exactly.

    Returns ``None`` when the system is inconsistent, otherwise one particular
    solution (free variables set to zero) and a basis of the kernel of A.
    """
    field = A.field
    n = A.cols
    if len(b) != A.rows:
        raise DimensionMismatch(f"right-hand side has {len(b)} entries, matrix has {A.rows} rows")
    b = [field(v) for v in b]
    if A.rows == 0:
        basis = tuple(tuple(field.one() if i == j else field.zero() for i in range(n)) for j in range(n))
        return AffineSolution(tuple(field.zero() for _ in range(n)), basis)
    aug = [tuple(row) + (bv,) for row, bv in zip(A.entries, b)]
    ech, pivots, is_int = _echelon(field, aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    rank = len(pivots)
    if is_int:
        rows = [[field(v) for v in row] for row in ech[:rank]]
    else:
        rows = [list(row) for row in ech[:rank]]
    # back substitution to reduced echelon form
    for k in range(rank - 1, -1, -1):
        c = pivots[k]
        inv = rows[k][c].inv()
        rows[k] = [v * inv for v in rows[k]]
        for i in range(k):
            f = rows[i][c]
            if f:
                rows[i] = [vi - f * vk for vi, vk in zip(rows[i], rows[k])]
    zero = field.zero()
    particular = [zero] * n
    for k, c in enumerate(pivots):
        particular[c] = rows[k][n]
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = field.one()
        for k, c in enumerate(pivots):
            v[c] = -rows[k][f]
        basis.append(tuple(v))
    return AffineSolution(tuple(particular), tuple(basis))


def vandermonde(field, nodes: Sequence, ncols: int | None = None) -> Matrix:
    nodes = [field(x) for x in nodes]
    ncols = len(nodes) if ncols is None else ncols
    return Matrix(field, tuple(tuple(x**k for k in range(ncols)) for x in nodes))
