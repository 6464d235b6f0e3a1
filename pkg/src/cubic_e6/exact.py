"""Exact arithmetic over the rationals.

Multivariate polynomials with :class:`fractions.Fraction` coefficients,
binary forms (homogeneous polynomials in two variables) with their Sylvester
resultant and gcd, exact linear algebra, and Hilbert functions of
homogeneous ideals computed degree by degree.

Nothing in this module touches floating point.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import isqrt
from types import MappingProxyType
from typing import Union

from .errors import InputError

Rational = Fraction
Number = Union[int, Fraction]
Exponent = tuple[int, ...]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    raise InputError(f"not a rational number: {value!r}")


# ---------------------------------------------------------------------------
# dense and sparse linear algebra over Q
# ---------------------------------------------------------------------------

def _to_matrix(rows) -> list[list[Fraction]]:
    return [[as_rational(x) for x in row] for row in rows]


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _to_matrix(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel ``{v : A v = 0}``, one vector per free column."""
    m = _to_matrix(rows)
    if ncols is None:
        if not m:
            raise InputError("nullspace of an empty matrix needs ncols")
        ncols = len(m[0])
    if not m:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(rows) -> Fraction:
    m = _to_matrix(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise InputError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def inverse(rows) -> list[list[Fraction]]:
    m = _to_matrix(rows)
    n = len(m)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise InputError("matrix is not invertible")
    return [row[n:] for row in red]


def mat_mul(a, b) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


class SparseEchelon:
    """Rows added one at a time and kept in echelon form.

    Each stored row is a ``{column: value}`` dict whose smallest column is its
    pivot, normalized to 1.  Only the rank is tracked, which is all the
    Hilbert function and jet computations need.
    """

    def __init__(self) -> None:
        self._pivots: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert ``row``; return True when it raised the rank."""
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = self._pivots.get(c)
            if prow is None:
                inv = 1 / row[c]
                self._pivots[c] = {k: v * inv for k, v in row.items()}
                return True
            f = row[c]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return False


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------

def monomials(nvars: int, degree: int) -> list[Exponent]:
    """Exponent vectors of total ``degree`` in ``nvars`` variables, in
    descending lexicographic order (``x0^d`` first)."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def _format_coeff_monomial(coeff: Fraction, mono: str) -> str:
    if not mono:
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    if coeff.denominator == 1:
        return f"{coeff}*{mono}"
    return f"({coeff})*{mono}"


class QPoly:
    """Polynomial with rational coefficients over a fixed, ordered list of
    variable names.

    Instances are treated as immutable.  Two polynomials interact only when
    their variable lists agree; plain ints and Fractions act as constants.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms=()) -> None:
        self.variables = tuple(variables)
        n = len(self.variables)
        acc: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise InputError(f"bad exponent {exp} for variables {self.variables}")
            c = as_rational(coeff)
            if c:
                acc[exp] = acc.get(exp, Fraction(0)) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list[QPoly]:
        n = len(variables)
        return [cls(variables, {tuple(int(i == j) for j in range(n)): 1}) for i in range(n)]

    @classmethod
    def constant(cls, variables: Sequence[str], value: Number) -> QPoly:
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def linear(cls, variables: Sequence[str], coeffs: Sequence) -> QPoly:
        n = len(variables)
        return cls(variables, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical order: by descending total degree, then
        descending lexicographic exponent."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def lowest_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def homogeneous_part(self, degree: int) -> QPoly:
        return QPoly(self.variables, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def monic(self) -> QPoly:
        lc = self.leading_coefficient()
        if lc == 0:
            return self
        return self * (1 / lc)

    def uses_variable(self, i: int) -> bool:
        return any(e[i] for e in self._terms)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> QPoly:
        if isinstance(other, QPoly):
            if other.variables != self.variables:
                raise InputError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return QPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return QPoly(self.variables, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if not isinstance(k, int) or k < 0:
            raise InputError("only non-negative integer powers are supported")
        result = QPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == QPoly.constant(self.variables, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and evaluation -------------------------------------------

    def _index(self, var: int | str) -> int:
        if isinstance(var, str):
            return self.variables.index(var)
        return var

    def diff(self, var: int | str) -> QPoly:
        i = self._index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return QPoly(self.variables, out)

    def gradient(self) -> list[QPoly]:
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [as_rational(x) for x in point]
        if len(pt) != self.nvars:
            raise InputError("point has the wrong number of coordinates")
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    __call__ = evaluate

    def compose(self, images: Sequence[QPoly]) -> QPoly:
        """Substitute ``images[i]`` for the i-th variable.  All images must
        share one variable list, which becomes the result's."""
        if len(images) != self.nvars:
            raise InputError("need one image per variable")
        if not images:
            return self
        target = images[0].variables
        if any(im.variables != target for im in images):
            raise InputError("images must share their variables")
        powers: list[dict[int, QPoly]] = [{0: QPoly.constant(target, 1)} for _ in images]

        def power(i: int, k: int) -> QPoly:
            cache = powers[i]
            if k not in cache:
                j = max(cache)
                while j < k:
                    cache[j + 1] = cache[j] * images[i]
                    j += 1
            return cache[k]

        result = QPoly(target)
        for e, c in self._terms.items():
            term = QPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # -- text and JSON ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            parts.append(_format_coeff_monomial(c, mono))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r}, vars={list(self.variables)})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> QPoly:
        try:
            variables = [str(v) for v in data["vars"]]
            terms = [(t["exp"], as_rational(t["coeff"])) for t in data["terms"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed polynomial data: {exc}") from exc
        return cls(variables, terms)


def substitute_linear(f: QPoly, matrix: Sequence[Sequence]) -> QPoly:
    """Return ``g(y) = f(M y)``: the i-th variable is replaced by
    ``sum_j M[i][j] * y_j`` over the same variable names."""
    m = _to_matrix(matrix)
    n = f.nvars
    if len(m) != n or any(len(row) != n for row in m):
        raise InputError(f"coordinate change must be {n}x{n}")
    if det(m) == 0:
        raise InputError("non-invertible coordinate change")
    images = [QPoly.linear(f.variables, row) for row in m]
    return f.compose(images)


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _ustrip(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _udivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _ustrip(a), _ustrip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r = _ustrip(r)
    return q, r


def _ugcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _ustrip(a), _ustrip(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    if not a:
        return a
    lc = a[-1]
    return [c / lc for c in a]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _urational_roots(p: list[Fraction]) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicity of a nonzero univariate polynomial."""
    p = _ustrip(p)
    roots: list[tuple[Fraction, int]] = []
    zero_mult = 0
    while p and p[0] == 0:
        p = p[1:]
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(p) <= 1:
        return roots
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    candidates = set()
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for r in sorted(candidates):
        mult = 0
        while len(p) > 1:
            q, rem = _udivmod(p, [-r, Fraction(1)])
            if rem:
                break
            p = q
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form ``sum_i c_i x0^(d-i) x1^i`` of formal degree ``d``.

    The formal degree is kept even when leading coefficients vanish, so a
    form like ``x0*x1`` is stored as ``(0, 1, 0)``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InputError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> BinaryForm:
        return cls((Fraction(0),) * (degree + 1))

    @classmethod
    def from_qpoly(cls, f: QPoly, degree: int | None = None) -> BinaryForm:
        if f.nvars != 2:
            raise InputError("binary forms have exactly two variables")
        if not f.is_homogeneous():
            raise InputError("not homogeneous")
        d = f.degree() if degree is None else degree
        if d < 0:
            d = 0
        if not f.is_zero() and f.degree() != d:
            raise InputError("degree mismatch")
        return cls(tuple(f.coefficient((d - i, i)) for i in range(d + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x0, x1) -> Fraction:
        x0, x1 = as_rational(x0), as_rational(x1)
        d = self.degree
        return sum((c * x0 ** (d - i) * x1**i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __mul__(self, other: BinaryForm) -> BinaryForm:
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BinaryForm(tuple(out))

    def scale(self, c) -> BinaryForm:
        c = as_rational(c)
        return BinaryForm(tuple(c * x for x in self.coeffs))

    def monic(self) -> BinaryForm:
        """Scale so the first nonzero coefficient (in ``x0``-descending order) is 1."""
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            return self
        return self.scale(1 / lead)

    def diff_x0(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            return BinaryForm((Fraction(0),))
        return BinaryForm(tuple(c * (d - i) for i, c in enumerate(self.coeffs[:-1])))

    def diff_x1(self) -> BinaryForm:
        if self.degree == 0:
            return BinaryForm((Fraction(0),))
        return BinaryForm(tuple(c * i for i, c in enumerate(self.coeffs) if i > 0))

    def x1_valuation(self) -> int:
        """Largest ``v`` with ``x1^v`` dividing the form (degree+1 for zero)."""
        v = 0
        for c in self.coeffs:
            if c:
                return v
            v += 1
        return v

    def _dehomogenized(self) -> list[Fraction]:
        # strip the x1^v factor; the rest as a polynomial in t = x0/x1,
        # lowest degree first
        v = self.x1_valuation()
        rest = self.coeffs[v:]
        return list(reversed(rest))

    def rational_roots(self) -> list[tuple[tuple[Fraction, Fraction], int]]:
        """Rational projective roots ``[x0, x1]`` with multiplicity.

        Points are normalized with first nonzero coordinate 1.
        """
        if self.is_zero():
            raise InputError("the zero form vanishes everywhere")
        out = []
        v = self.x1_valuation()
        if v:
            out.append(((Fraction(1), Fraction(0)), v))
        for t, mult in _urational_roots(self._dehomogenized()):
            pt = (Fraction(1), 1 / t) if t else (Fraction(0), Fraction(1))
            out.append((pt, mult))
        return out

    def to_qpoly(self, variables: Sequence[str] = ("x0", "x1")) -> QPoly:
        d = self.degree
        return QPoly(variables, {(d - i, i): c for i, c in enumerate(self.coeffs)})

    def __str__(self) -> str:
        return str(self.to_qpoly())


def resultant_binary(p: BinaryForm, q: BinaryForm) -> Fraction:
    """Sylvester resultant of two binary forms of their formal degrees.

    Rows are ordered with the ``p`` block first.  Vanishes exactly when the
    forms share a projective root over the algebraic closure.
    """
    if p.is_zero() or q.is_zero():
        raise InputError("resultant of zero form")
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(p.coeffs) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(q.coeffs) + [Fraction(0)] * (size - n - 1 - i))
    return det(rows)


def gcd_binary(p: BinaryForm, q: BinaryForm) -> BinaryForm:
    """Monic greatest common divisor; a zero argument acts as identity."""
    if p.is_zero() and q.is_zero():
        raise InputError("gcd of two zero forms is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    v = min(p.x1_valuation(), q.x1_valuation())
    g = _ugcd(p._dehomogenized(), q._dehomogenized())
    # g(t) lowest-first -> homogeneous in (x0, x1) with t = x0/x1
    k = len(g) - 1
    coeffs = [Fraction(0)] * v + [g[k - i] for i in range(k + 1)]
    return BinaryForm(tuple(coeffs)).monic()


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------

def hilbert_function(generators: Iterable[QPoly], degree: int, nvars: int | None = None) -> int:
    """Dimension of the degree-``degree`` part of ``Q[x]/I``.

    The degree slice of ``I`` is spanned by monomial multiples of the
    generators; its rank is found by exact elimination.
    """
    gens = [g for g in generators if not g.is_zero()]
    if nvars is None:
        if gens:
            nvars = gens[0].nvars
        else:
            nvars = 4
    for g in gens:
        if g.nvars != nvars:
            raise InputError("generators must share one ring")
        if not g.is_homogeneous():
            raise InputError(f"inhomogeneous generator: {g}")
    if degree < 0:
        raise InputError("degree must be non-negative")
    cols = monomials(nvars, degree)
    index = {e: i for i, e in enumerate(cols)}
    ech = SparseEchelon()
    for g in gens:
        d = g.degree()
        for m in monomials(nvars, degree - d):
            row = {}
            for e, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(e, m))]] = c
            ech.add(row)
            if len(ech) == len(cols):
                return 0
    return len(cols) - len(ech)
