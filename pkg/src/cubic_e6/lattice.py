"""The lattice I(1,6), its 72 roots and 27 line classes.

Vectors are written in the basis e0, ..., e6 with intersection pairing
diag(1, -1, -1, -1, -1, -1, -1).  The hyperplane class is
h = 3e0 - e1 - ... - e6.  A root satisfies a.a = -2 and a.h = 0; a line class
satisfies b.b = -1 and b.h = 1.

All enumerations are returned in canonical order: ascending lexicographic
order on the coordinate tuple.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import InputError

RANK = 7
SIGNATURE = (1, -1, -1, -1, -1, -1, -1)


@dataclass(frozen=True, order=True)
class LatticeVector:
    """Integer vector in I(1,6), coefficients of e0..e6."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != RANK:
            raise InputError(f"lattice vectors have {RANK} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def parse(cls, text: str) -> LatticeVector:
        """Parse comma-separated e-basis integers such as ``"2,-1,-1,-1,-1,-1,-1"``."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise InputError(f"cannot parse lattice vector {text!r}") from exc

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> LatticeVector:
        return LatticeVector(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: LatticeVector) -> int:
        return pairing(self, other)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{mag}e{i}"))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def csv(self) -> str:
        return ",".join(str(c) for c in self.coords)


def basis_vector(i: int) -> LatticeVector:
    return LatticeVector(tuple(int(i == j) for j in range(RANK)))


E = tuple(basis_vector(i) for i in range(RANK))
H = LatticeVector((3, -1, -1, -1, -1, -1, -1))
DELTA = LatticeVector((2, -1, -1, -1, -1, -1, -1))


def pairing(u: LatticeVector, v: LatticeVector) -> int:
    return sum(s * a * b for s, a, b in zip(SIGNATURE, u.coords, v.coords))


def gram_matrix() -> list[list[int]]:
    return [[pairing(a, b) for b in E] for a in E]


def is_root(v: LatticeVector) -> bool:
    return pairing(v, v) == -2 and pairing(v, H) == 0


def is_line_class(v: LatticeVector) -> bool:
    return pairing(v, v) == -1 and pairing(v, H) == 1


def require_root(v: LatticeVector, message: str = "not a root") -> LatticeVector:
    if not is_root(v):
        raise InputError(f"{message}: {v.csv()}")
    return v


def _solutions(self_pairing: int, degree: int, a0_range: Iterable[int]) -> tuple[LatticeVector, ...]:
    # Cauchy-Schwarz on (a1..a6) against (1,..,1) bounds a0 by the given range
    # and every |ai| by 2, so this box search is exhaustive.
    found = []
    for a0 in a0_range:
        for tail in product(range(-2, 3), repeat=6):
            v = LatticeVector((a0, *tail))
            if pairing(v, H) == degree and pairing(v, v) == self_pairing:
                found.append(v)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def enumerate_roots() -> tuple[LatticeVector, ...]:
    """The 72 roots, canonically ordered."""
    return _solutions(-2, 0, range(-2, 3))


@lru_cache(maxsize=None)
def enumerate_lines() -> tuple[LatticeVector, ...]:
    """The 27 line classes, canonically ordered."""
    return _solutions(-1, 1, range(0, 3))


@lru_cache(maxsize=None)
def root_index() -> dict[LatticeVector, int]:
    return {r: i for i, r in enumerate(enumerate_roots())}


@lru_cache(maxsize=None)
def line_index() -> dict[LatticeVector, int]:
    return {b: i for i, b in enumerate(enumerate_lines())}


def reflect(alpha: LatticeVector, beta: LatticeVector) -> LatticeVector:
    """Picard-Lefschetz reflection ``s_a(b) = b + <a, b> a``."""
    require_root(alpha, "reflection axis must be a root")
    return beta + alpha * pairing(alpha, beta)


def reflection_matrix(alpha: LatticeVector) -> tuple[tuple[int, ...], ...]:
    """Matrix of ``reflect(alpha, .)`` acting on column coordinate vectors."""
    require_root(alpha, "reflection axis must be a root")
    g_alpha = [s * a for s, a in zip(SIGNATURE, alpha.coords)]
    return tuple(
        tuple(int(i == j) + alpha.coords[i] * g_alpha[j] for j in range(RANK))
        for i in range(RANK)
    )


def sextuple(alpha: LatticeVector) -> frozenset[LatticeVector]:
    """The six line classes ``b`` with ``b.a = -1``; they are mutually skew."""
    require_root(alpha)
    return frozenset(b for b in enumerate_lines() if pairing(b, alpha) == -1)


def sextuples() -> list[frozenset[LatticeVector]]:
    """One sextuple per root, in root order."""
    return [sextuple(a) for a in enumerate_roots()]


@dataclass(frozen=True)
class DoubleSix:
    """Pair of disjoint sextuples attached to the opposite roots ``+-root``.

    ``first`` is ``sextuple(root)`` and ``second`` is ``sextuple(-root)``,
    where ``root`` is the lexicographically larger of the two.
    """

    root: LatticeVector
    first: tuple[LatticeVector, ...]
    second: tuple[LatticeVector, ...]


def double_sixes() -> list[DoubleSix]:
    out = []
    for a in enumerate_roots():
        if a > -a:
            out.append(DoubleSix(a, tuple(sorted(sextuple(a))), tuple(sorted(sextuple(-a)))))
    return out


def tritangent_trios() -> list[tuple[LatticeVector, LatticeVector, LatticeVector]]:
    """Unordered triples of mutually incident line classes summing to h."""
    lines = enumerate_lines()
    return [
        (a, b, c)
        for a, b, c in combinations(lines, 3)
        if a + b + c == H and pairing(a, b) == pairing(b, c) == pairing(a, c) == 1
    ]


def six_ways(alpha: LatticeVector) -> list[tuple[LatticeVector, LatticeVector]]:
    """Ordered pairs of skew line classes ``(b1, b2)`` with ``b1 - b2 = alpha``."""
    require_root(alpha)
    lines = set(enumerate_lines())
    out = []
    for b1 in enumerate_lines():
        b2 = b1 - alpha
        if b2 in lines and pairing(b1, b2) == 0:
            out.append((b1, b2))
    return out


def skew_partners(beta: LatticeVector) -> list[LatticeVector]:
    return [b for b in enumerate_lines() if b != beta and pairing(b, beta) == 0]


def skew_pair_counts() -> tuple[int, int]:
    """Numbers of ordered and unordered pairs of skew line classes."""
    lines = enumerate_lines()
    ordered = sum(1 for a in lines for b in lines if a != b and pairing(a, b) == 0)
    return ordered, ordered // 2
