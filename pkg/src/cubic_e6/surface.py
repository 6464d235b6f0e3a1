"""Lattice model of a cubic surface with ADE singularities.

A configuration is embedded as a sub-root system R_e of the 72 roots; its
Weyl group W(R_e) acts on the roots and on the 27 line classes.  Root orbits
reproduce the census of Table 1, line orbits are the lines counted with
multiplicity, and skew-line Hilbert scheme points are counted by type.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations

from .configs import (
    TABLE1_REFERENCE,
    SingularityConfig,
    parse_config,
    reference_row,
)
from .errors import InputError, InvariantViolation
from .lattice import LatticeVector, enumerate_lines, enumerate_roots, pairing
from .weyl import (
    EmbeddingClass,
    SubsystemEmbedding,
    WeylGroup,
    closure,
    embed_subsystems,
    maximal_root,
    positive_roots,
)

FIRST = "first"
SECOND = "second"
INFINITE_SYM2E = "infinite_sym2E"


@dataclass
class SurfaceModel:
    """A configuration together with one embedding of its root system."""

    config: SingularityConfig
    embedding: SubsystemEmbedding
    embedding_class: EmbeddingClass | None = None
    geometric: bool = True

    @cached_property
    def positive_effective_roots(self) -> tuple[frozenset[LatticeVector], ...]:
        return tuple(frozenset(positive_roots(block)) for block in self.embedding.simple_roots)

    @cached_property
    def maximal_roots(self) -> tuple[LatticeVector, ...]:
        return tuple(maximal_root(block) for block in self.embedding.simple_roots)

    @cached_property
    def summand_roots(self) -> tuple[frozenset[LatticeVector], ...]:
        return tuple(pos | {-r for r in pos} for pos in self.positive_effective_roots)

    @cached_property
    def group(self) -> WeylGroup:
        return closure(self.embedding.reflections())


def build_model(config: SingularityConfig | str, class_index: int | None = None) -> SurfaceModel:
    """Model for ``config``.  Without ``class_index`` the conjugacy class whose
    root census matches the reference table is used (the first class when the
    configuration is not in the table)."""
    if isinstance(config, str):
        config = parse_config(config)
    classes = embed_subsystems(config)
    if class_index is not None:
        if not 0 <= class_index < len(classes):
            raise InputError(f"{config.label} has {len(classes)} embedding classes")
        chosen = classes[class_index]
        model = SurfaceModel(config, chosen.representative, chosen)
        model.geometric = _matches_reference(model)
        return model
    for cls in classes:
        model = SurfaceModel(config, cls.representative, cls)
        if _matches_reference(model):
            return model
    model = SurfaceModel(config, classes[0].representative, classes[0])
    model.geometric = reference_row(config) is None
    return model


def _matches_reference(model: SurfaceModel) -> bool:
    row = reference_row(model.config)
    return row is None or len(model.group.root_orbits()) == row.count


@lru_cache(maxsize=None)
def model_for(label: str) -> SurfaceModel:
    return build_model(parse_config(label))


# ---------------------------------------------------------------------------
# root census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootOrbit:
    members: tuple[LatticeVector, ...]
    contained_in_re: bool
    summand: int | None = None
    maximal_root: LatticeVector | None = None

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[RootOrbit, ...]
    subgroup_order: int

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]


def root_census(model: SurfaceModel) -> OrbitDecomposition:
    """Orbits of the 72 roots under W(R_e).

    Orbits inside R_e correspond one-to-one with the summands; each records
    the maximal root of its summand.  Every other orbit misses R_e.
    """
    roots = enumerate_roots()
    summand_of = {}
    for i, rs in enumerate(model.summand_roots):
        for r in rs:
            summand_of[r] = i
    orbits = []
    seen_summands = []
    for idx in model.group.root_orbits():
        members = tuple(roots[i] for i in idx)
        tags = {summand_of.get(r) for r in members}
        if tags == {None}:
            orbits.append(RootOrbit(members, False))
        elif len(tags) == 1:
            (s,) = tags
            if set(members) != model.summand_roots[s]:
                raise InvariantViolation("orbit inside R_e is not a whole summand")
            seen_summands.append(s)
            orbits.append(RootOrbit(members, True, s, model.maximal_roots[s]))
        else:
            raise InvariantViolation("orbit meets R_e and its complement")
    if sorted(seen_summands) != list(range(len(model.config.summands))):
        raise InvariantViolation("orbits inside R_e do not match the summands")
    if sum(o.size for o in orbits) != len(roots):
        raise InvariantViolation("orbits do not partition the roots")
    order = len(model.group)
    if any(order % o.size for o in orbits):
        raise InvariantViolation("orbit size does not divide group order")
    return OrbitDecomposition(tuple(orbits), order)


@dataclass(frozen=True)
class Table1Entry:
    config: SingularityConfig
    roman: str
    count: int
    reference: int


def table1_rows() -> list[Table1Entry]:
    """Computed root-orbit counts for all 21 configurations, in table order."""
    out = []
    for row in TABLE1_REFERENCE:
        model = model_for(row.config.label)
        out.append(Table1Entry(row.config, row.roman, root_census(model).orbit_count, row.count))
    return out


def table1() -> dict[SingularityConfig, int]:
    return {e.config: e.count for e in table1_rows()}


def monodromy_group_order(model: SurfaceModel) -> int:
    return len(model.group)


# ---------------------------------------------------------------------------
# lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LineOrbit:
    index: int
    members: tuple[LatticeVector, ...]
    representative: LatticeVector
    through: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)


def line_orbits(model: SurfaceModel) -> list[LineOrbit]:
    """Orbits of the 27 line classes under W(R_e), ordered by least member.

    The representative is the unique member pairing non-negatively with
    every positive effective root.  The line passes through singularity ``i``
    when its representative pairs positively with some positive root of the
    i-th summand.
    """
    lines = enumerate_lines()
    positive = model.positive_effective_roots
    all_positive = [r for pos in positive for r in pos]
    out = []
    for k, idx in enumerate(model.group.line_orbits()):
        members = tuple(lines[i] for i in idx)
        reps = [b for b in members if all(pairing(b, r) >= 0 for r in all_positive)]
        if len(reps) != 1:
            raise InvariantViolation(
                f"line orbit {k} has {len(reps)} non-negative representatives"
            )
        rep = reps[0]
        through = tuple(
            i for i, pos in enumerate(positive) if any(pairing(rep, r) > 0 for r in pos)
        )
        out.append(LineOrbit(k, members, rep, through))
    if sum(o.multiplicity for o in out) != len(lines):
        raise InvariantViolation("line multiplicities do not sum to 27")
    return out


SKEW = "skew"
SMOOTH_POINT = "incident_at_smooth_point"
AT_SINGULARITY = "incident_at_singularity"


@dataclass(frozen=True)
class Incidence:
    kind: str
    singularity: int | None = None

    def __str__(self) -> str:
        if self.kind == AT_SINGULARITY:
            return f"{self.kind}({self.singularity})"
        return self.kind


def incidence(model: SurfaceModel, l1: LineOrbit, l2: LineOrbit) -> Incidence:
    if l1.index == l2.index:
        raise InputError("incidence needs two distinct lines")
    shared = sorted(set(l1.through) & set(l2.through))
    if shared:
        return Incidence(AT_SINGULARITY, shared[0])
    if pairing(l1.representative, l2.representative) > 0:
        return Incidence(SMOOTH_POINT)
    return Incidence(SKEW)


@dataclass(frozen=True)
class SkewCountReport:
    """Points of the reduced Hilbert scheme of skew lines, by type."""

    type_i: int | str
    type_ii: int | str
    type_iii: int | str
    type_iv: int | str
    total: int | str = field(default=0)

    @classmethod
    def finite(cls, i: int, ii: int, iii: int, iv: int) -> SkewCountReport:
        return cls(i, ii, iii, iv, i + ii + iii + iv)

    @classmethod
    def elliptic_cone(cls) -> SkewCountReport:
        """Cone over a smooth plane cubic E: the scheme is Sym^2 E, not finite."""
        return cls(INFINITE_SYM2E, INFINITE_SYM2E, INFINITE_SYM2E, INFINITE_SYM2E, INFINITE_SYM2E)

    def is_finite(self) -> bool:
        return self.total != INFINITE_SYM2E

    def to_json(self) -> dict:
        return {
            "type_i": self.type_i,
            "type_ii": self.type_ii,
            "type_iii": self.type_iii,
            "type_iv": self.type_iv,
            "total": self.total,
        }


def uniform_line_types(model: SurfaceModel, kind: str) -> dict[int, str]:
    """Assign ``kind`` to every line orbit through a singularity."""
    if kind not in (FIRST, SECOND):
        raise InputError(f"line type must be {FIRST!r} or {SECOND!r}, got {kind!r}")
    return {o.index: kind for o in line_orbits(model) if o.through}


def skew_hilbert_count(model: SurfaceModel, line_types: Mapping) -> SkewCountReport:
    """Count skew-line schemes of types I-IV.

    I: pairs of skew lines.  II: one per first-type line.  III: one per pair
    of lines meeting at a singular point.  IV: one per singular point on
    each second-type line.  Lines through no singularity are rigid and must
    not be typed.
    """
    orbits = line_orbits(model)
    types: dict[int, str] = {}
    for key, kind in line_types.items():
        index = key.index if isinstance(key, LineOrbit) else int(key)
        if not 0 <= index < len(orbits):
            raise InputError(f"no line orbit with index {index}")
        if kind not in (FIRST, SECOND):
            raise InputError(f"line type must be {FIRST!r} or {SECOND!r}, got {kind!r}")
        if not orbits[index].through:
            raise InputError(f"line orbit {index} passes through no singularity and has no type")
        types[index] = kind
    missing = [o.index for o in orbits if o.through and o.index not in types]
    if missing:
        raise InputError("missing line types for orbits " + ", ".join(map(str, missing)))
    type_i = type_iii = 0
    for a, b in combinations(orbits, 2):
        kind = incidence(model, a, b).kind
        if kind == SKEW:
            type_i += 1
        elif kind == AT_SINGULARITY:
            type_iii += 1
    type_ii = sum(1 for t in types.values() if t == FIRST)
    type_iv = sum(len(orbits[i].through) for i, t in types.items() if t == SECOND)
    return SkewCountReport.finite(type_i, type_ii, type_iii, type_iv)


def census_report(model: SurfaceModel, line_types: Mapping | None = None) -> dict:
    """JSON-ready summary of a model."""
    census = root_census(model)
    orbits = line_orbits(model)
    report = {
        "config": model.config.label,
        "orbit_count": census.orbit_count,
        "orbit_sizes": census.sizes(),
        "line_orbits": [
            {"rep": list(o.representative.coords), "multiplicity": o.multiplicity, "through": list(o.through)}
            for o in orbits
        ],
        "skew_counts": None,
    }
    if line_types is not None or not any(o.through for o in orbits):
        report["skew_counts"] = skew_hilbert_count(model, line_types or {}).to_json()
    return report
