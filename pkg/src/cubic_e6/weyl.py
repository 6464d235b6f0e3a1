"""The Weyl group W(E6) acting on I(1,6), orbits, and embeddings of ADE
sub-root systems into the 72 roots.

Group elements carry both a 7x7 integer matrix and the permutation they
induce on the canonical root list; elements are identified by the
permutation.  Whole groups are stored as numpy arrays so that the closure
of the 51840 elements takes well under a second.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .configs import SingularityConfig, dynkin_edges
from .errors import ConfigError, InputError, InvariantViolation
from .lattice import (
    DELTA,
    H,
    RANK,
    SIGNATURE,
    LatticeVector,
    enumerate_lines,
    enumerate_roots,
    pairing,
    reflection_matrix,
    require_root,
    root_index,
)

_GRAM = np.diag(np.array(SIGNATURE, dtype=np.int64))


def _encode(coords: np.ndarray) -> np.ndarray:
    # coordinates of roots and lines lie in [-3, 3]; encode a vector along the
    # first axis as one integer for table lookup
    shifted = coords.astype(np.int64) + 4
    weights = 8 ** np.arange(RANK, dtype=np.int64)
    return np.tensordot(weights, shifted, axes=(0, 0))


@lru_cache(maxsize=None)
def _lookup(kind: str) -> tuple[np.ndarray, np.ndarray]:
    vectors = enumerate_roots() if kind == "roots" else enumerate_lines()
    cols = np.array([v.coords for v in vectors], dtype=np.int64).T
    return cols, _encode(cols)


def _perm_from_matrices(mats: np.ndarray, kind: str) -> np.ndarray:
    """Index permutations induced on roots or lines by a stack of matrices."""
    cols, codes = _lookup(kind)
    images = mats @ cols  # (N, 7, n)
    img_codes = _encode(np.moveaxis(images, 1, 0))  # (N, n)
    order = np.argsort(codes)
    pos = np.searchsorted(codes[order], img_codes)
    pos = np.clip(pos, 0, len(codes) - 1)
    perm = order[pos]
    if not np.array_equal(codes[perm], img_codes):
        raise InvariantViolation(f"matrix does not preserve the set of {kind}")
    return perm


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Pairing-preserving automorphism of I(1,6) fixing h.

    ``root_perm[i]`` is the index of the image of ``enumerate_roots()[i]``.
    Composition ``g * k`` applies ``k`` first.
    """

    matrix: tuple[tuple[int, ...], ...]
    root_perm: tuple[int, ...]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> GroupElement:
        m = np.array(matrix, dtype=np.int64)
        if m.shape != (RANK, RANK):
            raise InputError("group elements are 7x7 matrices")
        if not np.array_equal(m.T @ _GRAM @ m, _GRAM):
            raise InputError("matrix does not preserve the pairing")
        if not np.array_equal(m @ np.array(H.coords), np.array(H.coords)):
            raise InputError("matrix does not fix h")
        perm = _perm_from_matrices(m[None], "roots")[0]
        return cls(tuple(tuple(int(x) for x in row) for row in m), tuple(int(i) for i in perm))

    @classmethod
    def identity(cls) -> GroupElement:
        return cls.from_matrix(np.eye(RANK, dtype=np.int64))

    @classmethod
    def reflection(cls, alpha: LatticeVector) -> GroupElement:
        return cls.from_matrix(reflection_matrix(alpha))

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and self.root_perm == other.root_perm

    def __hash__(self) -> int:
        return hash(self.root_perm)

    def __mul__(self, other: GroupElement) -> GroupElement:
        m = np.array(self.matrix) @ np.array(other.matrix)
        perm = tuple(self.root_perm[i] for i in other.root_perm)
        return GroupElement(tuple(tuple(int(x) for x in row) for row in m), perm)

    def apply(self, v: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(int(x) for x in np.array(self.matrix) @ np.array(v.coords)))

    def line_perm(self) -> tuple[int, ...]:
        perm = _perm_from_matrices(np.array(self.matrix)[None], "lines")[0]
        return tuple(int(i) for i in perm)

    def is_consistent(self) -> bool:
        """Check that the stored permutation is the one the matrix induces."""
        perm = _perm_from_matrices(np.array(self.matrix)[None], "roots")[0]
        return tuple(int(i) for i in perm) == self.root_perm


class WeylGroup:
    """A finite group of lattice automorphisms held as array stacks.

    ``perms`` has shape ``(N, 72)`` and ``mats`` shape ``(N, 7, 7)``; row 0 is
    the identity.
    """

    def __init__(self, perms: np.ndarray, mats: np.ndarray) -> None:
        self.perms = perms
        self.mats = mats

    def __len__(self) -> int:
        return len(self.perms)

    def order(self) -> int:
        return len(self.perms)

    def element(self, i: int) -> GroupElement:
        return GroupElement(
            tuple(tuple(int(x) for x in row) for row in self.mats[i]),
            tuple(int(x) for x in self.perms[i]),
        )

    def __iter__(self) -> Iterator[GroupElement]:
        return (self.element(i) for i in range(len(self)))

    def __contains__(self, g: GroupElement) -> bool:
        key = np.array(g.root_perm, dtype=np.uint8).tobytes()
        return key in self._keys()

    def _keys(self) -> set[bytes]:
        if not hasattr(self, "_keyset"):
            self._keyset = {row.tobytes() for row in self.perms}
        return self._keyset

    def line_perms(self) -> np.ndarray:
        return _perm_from_matrices(self.mats, "lines")

    def check(self) -> None:
        """Verify every element preserves the pairing, fixes h, and that the
        matrix and permutation representations agree."""
        gram_ok = np.all(np.transpose(self.mats, (0, 2, 1)) @ _GRAM @ self.mats == _GRAM)
        h = np.array(H.coords, dtype=np.int64)
        h_ok = np.all(self.mats @ h == h)
        perms_ok = np.array_equal(_perm_from_matrices(self.mats, "roots"), self.perms)
        if not (gram_ok and h_ok and perms_ok):
            raise InvariantViolation("group element representations disagree")

    def root_orbits(self) -> list[list[int]]:
        """Orbits of the group on root indices, each sorted, ordered by least member."""
        return _orbits_from_perms(self.perms, 72)

    def line_orbits(self) -> list[list[int]]:
        return _orbits_from_perms(self.line_perms(), 27)


def _orbits_from_perms(perms: np.ndarray, n: int) -> list[list[int]]:
    seen = [False] * n
    orbits = []
    for i in range(n):
        if not seen[i]:
            members = sorted({int(x) for x in perms[:, i]})
            for j in members:
                seen[j] = True
            orbits.append(members)
    return orbits


def closure(generators: Sequence[GroupElement]) -> WeylGroup:
    """Group generated by ``generators``, by breadth-first closure."""
    ident = GroupElement.identity()
    gen_perms = np.array([g.root_perm for g in generators], dtype=np.uint8).reshape(-1, 72)
    gen_mats = np.array([g.matrix for g in generators], dtype=np.int64).reshape(-1, RANK, RANK)
    perms = [np.array([ident.root_perm], dtype=np.uint8)]
    mats = [np.array([ident.matrix], dtype=np.int64)]
    seen = {perms[0][0].tobytes()}
    frontier_p, frontier_m = perms[0], mats[0]
    while len(frontier_p):
        new_p, new_m = [], []
        for gp, gm in zip(gen_perms, gen_mats):
            cand_p = gp[frontier_p]  # (g o p)[i] = g[p[i]]
            cand_m = gm @ frontier_m
            for k in range(len(cand_p)):
                key = cand_p[k].tobytes()
                if key not in seen:
                    seen.add(key)
                    new_p.append(cand_p[k])
                    new_m.append(cand_m[k])
        if not new_p:
            break
        frontier_p = np.array(new_p, dtype=np.uint8)
        frontier_m = np.array(new_m, dtype=np.int64)
        perms.append(frontier_p)
        mats.append(frontier_m)
    return WeylGroup(np.concatenate(perms), np.concatenate(mats))


def subgroup_order(generators: Sequence[GroupElement]) -> int:
    return len(closure(generators))


def simple_roots_e6() -> tuple[LatticeVector, ...]:
    """Simple roots e1-e2, ..., e5-e6 (a chain) and e0-e1-e2-e3, which is
    attached to e3-e4."""
    return (
        LatticeVector((0, 1, -1, 0, 0, 0, 0)),
        LatticeVector((0, 0, 1, -1, 0, 0, 0)),
        LatticeVector((0, 0, 0, 1, -1, 0, 0)),
        LatticeVector((0, 0, 0, 0, 1, -1, 0)),
        LatticeVector((0, 0, 0, 0, 0, 1, -1)),
        LatticeVector((1, -1, -1, -1, 0, 0, 0)),
    )


def simple_reflections() -> list[GroupElement]:
    return [GroupElement.reflection(a) for a in simple_roots_e6()]


@lru_cache(maxsize=None)
def generate_weyl() -> WeylGroup:
    """W(E6), generated by the six simple reflections."""
    return closure(simple_reflections())


@lru_cache(maxsize=None)
def reflection_perms() -> np.ndarray:
    """Row ``i`` is the root permutation of the reflection in root ``i``."""
    mats = np.array([reflection_matrix(r) for r in enumerate_roots()], dtype=np.int64)
    return _perm_from_matrices(mats, "roots")


def orbit(seed, generators: Iterable[GroupElement]) -> set:
    """Smallest generator-stable set containing ``seed``.

    ``seed`` is a LatticeVector or a tuple of them; tuples are acted on
    coordinatewise.
    """
    gens = list(generators)
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g.apply(v) for v in x) if isinstance(x, tuple) else g.apply(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def set_stabilizer_order(group: WeylGroup, line_indices: Iterable[int]) -> int:
    """Number of group elements mapping a set of line classes to itself."""
    idx = np.array(sorted(line_indices))
    images = np.sort(group.line_perms()[:, idx], axis=1)
    return int(np.sum(np.all(images == idx, axis=1)))


# ---------------------------------------------------------------------------
# sub-root systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubsystemEmbedding:
    """Simple roots realizing each summand of ``config`` inside the 72 roots.

    Within a summand, adjacent nodes pair to 1 and others to 0; roots in
    different summands are orthogonal.
    """

    config: SingularityConfig
    simple_roots: tuple[tuple[LatticeVector, ...], ...]

    def all_simple_roots(self) -> list[LatticeVector]:
        return [r for block in self.simple_roots for r in block]

    def reflections(self) -> list[GroupElement]:
        return [GroupElement.reflection(r) for r in self.all_simple_roots()]

    def root_set(self) -> frozenset[int]:
        """Indices of the roots of the generated sub-root system."""
        idx = root_index()
        return _span_closure([idx[r] for r in self.all_simple_roots()])

    def conjugate(self, g: GroupElement) -> SubsystemEmbedding:
        return SubsystemEmbedding(
            self.config, tuple(tuple(g.apply(r) for r in block) for block in self.simple_roots)
        )

    def validate(self) -> None:
        nodes = self.all_simple_roots()
        expected = _diagram_gram(self.config)
        actual = [[pairing(a, b) for b in nodes] for a in nodes]
        if actual != expected:
            raise InvariantViolation(f"embedding does not realize {self.config.label}")


def _span_closure(simple: Sequence[int]) -> frozenset[int]:
    refl = reflection_perms()
    found = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for s in simple:
            img = int(refl[s][r])
            if img not in found:
                found.add(img)
                queue.append(img)
    return frozenset(found)


def _diagram_gram(config: SingularityConfig) -> list[list[int]]:
    n = config.rank
    gram = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    offset = 0
    for letter, rank in config.summands:
        for a, b in dynkin_edges(letter, rank):
            gram[offset + a][offset + b] = gram[offset + b][offset + a] = 1
        offset += rank
    return gram


@dataclass(frozen=True)
class EmbeddingClass:
    """One W(E6)-conjugacy class of embeddings of a configuration.

    ``orbit_size`` counts the distinct sub-root systems in the class and
    ``embeddings_found`` counts the ordered simple systems starting at the
    fixed first root that fell into it.
    """

    representative: SubsystemEmbedding
    root_set: frozenset[int]
    orbit_size: int
    embeddings_found: int


def _set_orbit(start: frozenset[int]) -> set[frozenset[int]]:
    gens = [np.array(g.root_perm) for g in simple_reflections()]
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        arr = np.fromiter(s, dtype=np.int64)
        for g in gens:
            t = frozenset(int(x) for x in g[arr])
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def _search(config: SingularityConfig) -> Iterator[tuple[int, ...]]:
    """Ordered simple systems realizing the diagram of ``config`` whose first
    node is the root 2e0-e1-...-e6.  Since W(E6) is transitive on roots, every
    conjugacy class of sub-root systems meets this set."""
    roots = enumerate_roots()
    n = len(roots)
    gram = np.array([[pairing(a, b) for b in roots] for a in roots], dtype=np.int64)
    target = _diagram_gram(config)
    first = root_index()[DELTA]
    choice: list[int] = [first]

    def extend(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(target):
            yield tuple(choice)
            return
        row = target[k]
        mask = np.ones(n, dtype=bool)
        for j in range(k):
            mask &= gram[choice[j]] == row[j]
        for r in np.flatnonzero(mask):
            choice.append(int(r))
            yield from extend(k + 1)
            choice.pop()

    if not target:
        yield ()
        return
    yield from extend(1)


def embed_subsystems(config: SingularityConfig) -> list[EmbeddingClass]:
    """All conjugacy classes of embeddings of ``config``, each with a
    deterministic representative (the first one found in canonical root
    order)."""
    if config.rank > 6:
        raise ConfigError("configuration not embeddable in E6")
    roots = enumerate_roots()
    if config.is_smooth():
        empty = SubsystemEmbedding(config, ())
        return [EmbeddingClass(empty, frozenset(), 1, 1)]
    classes: list[dict] = []
    set_to_class: dict[frozenset[int], int] = {}
    for choice in _search(config):
        span = _span_closure(choice)
        cls = set_to_class.get(span)
        if cls is None:
            blocks, offset = [], 0
            for _, rank in config.summands:
                blocks.append(tuple(roots[i] for i in choice[offset : offset + rank]))
                offset += rank
            emb = SubsystemEmbedding(config, tuple(blocks))
            orbit_sets = _set_orbit(span)
            cls = len(classes)
            classes.append({"rep": emb, "span": span, "orbit": len(orbit_sets), "found": 0})
            for s in orbit_sets:
                set_to_class[s] = cls
        classes[cls]["found"] += 1
    if not classes:
        raise ConfigError("configuration not embeddable in E6")
    out = []
    for c in classes:
        c["rep"].validate()
        out.append(EmbeddingClass(c["rep"], c["span"], c["orbit"], c["found"]))
    return out


def positive_roots(simple: Sequence[LatticeVector]) -> dict[LatticeVector, tuple[int, ...]]:
    """Positive roots of the (irreducible or not) system with the given simple
    roots, mapped to their coefficient vectors in the simple roots."""
    for r in simple:
        require_root(r)
    roots = set(enumerate_roots())
    found: dict[LatticeVector, tuple[int, ...]] = {}
    queue = deque()
    for i, r in enumerate(simple):
        coeffs = tuple(int(i == j) for j in range(len(simple)))
        found[r] = coeffs
        queue.append(r)
    while queue:
        b = queue.popleft()
        for j, s in enumerate(simple):
            c = b + s
            if c in roots and c not in found:
                coeffs = list(found[b])
                coeffs[j] += 1
                found[c] = tuple(coeffs)
                queue.append(c)
    return found


def maximal_root(simple: Sequence[LatticeVector]) -> LatticeVector:
    """The positive root of greatest height; it dominates every other
    positive root coefficientwise when the system is irreducible."""
    pos = positive_roots(simple)
    top = max(pos, key=lambda r: (sum(pos[r]), r))
    if any(any(a < b for a, b in zip(pos[top], c)) for c in pos.values()):
        raise InvariantViolation("maximal root does not dominate all positive roots")
    return top
