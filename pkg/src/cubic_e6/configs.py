"""ADE singularity configurations such as ``"2A1+A2"`` and the reference
census of root orbits on singular cubic surfaces."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

from .errors import ConfigError

EMPTY_LABEL = "∅"
_EMPTY_SPELLINGS = {"", EMPTY_LABEL, "smooth", "none"}
_LETTER_ORDER = {"A": 0, "D": 1, "E": 2}
_TERM = re.compile(r"^(\d*)([A-Za-z])(\d+)$")

Summand = tuple[str, int]


def weyl_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if letter == "E" and rank == 6:
        return 51840
    raise ConfigError(f"no Weyl order for {letter}{rank}")


def dynkin_edges(letter: str, rank: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram on nodes ``0..rank-1``.

    D_n is the path ``0..n-2`` with node ``n-1`` attached to ``n-3``; E6 is the
    path ``0..4`` with node 5 attached to node 2.
    """
    if letter == "A":
        return [(i, i + 1) for i in range(rank - 1)]
    if letter == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if letter == "E" and rank == 6:
        return [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
    raise ConfigError(f"unsupported Dynkin type {letter}{rank}")


@dataclass(frozen=True)
class SingularityConfig:
    """A sum of irreducible ADE types, stored sorted by (letter, rank)."""

    summands: tuple[Summand, ...]

    def __post_init__(self) -> None:
        for letter, rank in self.summands:
            _check_summand(letter, rank)
        ordered = tuple(sorted(self.summands, key=lambda s: (_LETTER_ORDER[s[0]], s[1])))
        object.__setattr__(self, "summands", ordered)
        if self.rank > 6:
            raise ConfigError(f"total rank {self.rank} exceeds 6")

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.summands)

    @property
    def label(self) -> str:
        if not self.summands:
            return EMPTY_LABEL
        parts: list[str] = []
        i = 0
        while i < len(self.summands):
            j = i
            while j < len(self.summands) and self.summands[j] == self.summands[i]:
                j += 1
            letter, rank = self.summands[i]
            count = j - i
            parts.append(f"{count if count > 1 else ''}{letter}{rank}")
            i = j
        return "+".join(parts)

    def __str__(self) -> str:
        return self.label

    def weyl_order(self) -> int:
        total = 1
        for letter, rank in self.summands:
            total *= weyl_order(letter, rank)
        return total

    def is_smooth(self) -> bool:
        return not self.summands


def _check_summand(letter: str, rank: int) -> None:
    if letter not in _LETTER_ORDER:
        raise ConfigError(f"unknown Dynkin letter {letter!r}")
    if rank < 1:
        raise ConfigError(f"rank must be positive in {letter}{rank}")
    if letter == "D" and rank < 4:
        raise ConfigError(f"D{rank} is not a valid type; D needs rank at least 4")
    if letter == "E" and rank not in (6, 7, 8):
        raise ConfigError(f"E{rank} is not a valid type")
    if rank > 6:
        raise ConfigError(f"{letter}{rank} has rank exceeding 6")


def parse_config(text: str) -> SingularityConfig:
    """Parse labels like ``"A1+2A2"``; the empty string means a smooth surface."""
    stripped = text.replace(" ", "")
    if stripped in _EMPTY_SPELLINGS:
        return SingularityConfig(())
    summands: list[Summand] = []
    for term in stripped.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ConfigError(f"cannot parse configuration term {term!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if count < 1:
            raise ConfigError(f"multiplicity must be positive in {term!r}")
        letter, rank = m.group(2), int(m.group(3))
        _check_summand(letter, rank)
        summands.extend([(letter, rank)] * count)
        if sum(r for _, r in summands) > 6:
            raise ConfigError(f"total rank exceeds 6 in {text!r}")
    return SingularityConfig(tuple(summands))


@dataclass(frozen=True)
class Table1Row:
    config: SingularityConfig
    roman: str
    count: int


_TABLE1 = [
    ("", "I", 72),
    ("A1", "II", 51),
    ("2A1", "IV", 36),
    ("A2", "III", 31),
    ("3A1", "VIII", 25),
    ("A1+A2", "VI", 22),
    ("A3", "V", 17),
    ("4A1", "XVI", 17),
    ("2A1+A2", "XIII", 15),
    ("A1+A3", "X", 12),
    ("2A2", "IX", 14),
    ("A4", "VII", 9),
    ("D4", "XII", 7),
    ("A1+2A2", "XVII", 9),
    ("A1+A4", "XIV", 6),
    ("A5", "XI", 5),
    ("D5", "XV", 3),
    ("2A1+A3", "XVIII", 8),
    ("A1+A5", "XIX", 3),
    ("3A2", "XXI", 5),
    ("E6", "XX", 1),
]

#: Published root-orbit counts for the 21 ADE configurations on cubic surfaces.
TABLE1_REFERENCE: tuple[Table1Row, ...] = tuple(
    Table1Row(parse_config(label), roman, count) for label, roman, count in _TABLE1
)


def table1_configs() -> list[SingularityConfig]:
    return [row.config for row in TABLE1_REFERENCE]


def reference_row(config: SingularityConfig) -> Table1Row | None:
    for row in TABLE1_REFERENCE:
        if row.config == config:
            return row
    return None
