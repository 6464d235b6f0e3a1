from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from cubic_e6.errors import InputError
from cubic_e6.lattice import (
    DELTA,
    E,
    H,
    LatticeVector,
    double_sixes,
    enumerate_lines,
    enumerate_roots,
    gram_matrix,
    pairing,
    reflect,
    reflection_matrix,
    sextuple,
    sextuples,
    six_ways,
    skew_pair_counts,
    skew_partners,
    tritangent_trios,
)


def _box_search(self_pairing: int, degree: int) -> set[tuple[int, ...]]:
    # independent oracle: every vector in [-3, 3]^7, filtered with numpy
    axes = np.meshgrid(*([np.arange(-3, 4)] * 7), indexing="ij")
    pts = np.stack([a.ravel() for a in axes], axis=1)
    sq = pts[:, 0] ** 2 - np.sum(pts[:, 1:] ** 2, axis=1)
    dh = 3 * pts[:, 0] + np.sum(pts[:, 1:], axis=1)
    hits = pts[(sq == self_pairing) & (dh == degree)]
    return {tuple(int(x) for x in row) for row in hits}


def vec(*coords):
    return LatticeVector(coords)


def test_pairing_examples():
    assert pairing(E[0], E[0]) == 1
    assert pairing(E[1], E[1]) == -1
    assert pairing(H, H) == 3


def test_gram_matrix_is_diagonal_signature_one_six():
    assert gram_matrix() == [[(1 if i == 0 else -1) if i == j else 0 for j in range(7)] for i in range(7)]


def test_roots_match_box_search():
    roots = enumerate_roots()
    assert len(roots) == 72
    assert {r.coords for r in roots} == _box_search(-2, 0)
    assert list(roots) == sorted(roots)
    assert DELTA in roots
    assert vec(0, 1, -1, 0, 0, 0, 0) in roots
    assert all(-r in roots for r in roots)


def test_lines_match_box_search():
    lines = enumerate_lines()
    assert len(lines) == 27
    assert {b.coords for b in lines} == _box_search(-1, 1)
    assert E[1] in lines
    # the class of the line through two blown-up points, written h - e1 - e2
    # when h denotes the pulled-back line class e0
    assert E[0] - E[1] - E[2] in lines
    assert H - E[1] - E[2] not in lines
    for a, b in combinations(lines, 2):
        assert pairing(a, b) in (0, 1, 2)


def test_roots_split_into_the_three_classes_relative_to_delta():
    # +-delta (2), +-(e0 - ei - ej - ek) (40), ei - ej (30)
    roots = set(enumerate_roots())
    singles = {DELTA, -DELTA}
    triples = {s * (E[0] - E[i] - E[j] - E[k]) for s in (1, -1) for i, j, k in combinations(range(1, 7), 3)}
    diffs = {E[i] - E[j] for i in range(1, 7) for j in range(1, 7) if i != j}
    assert (len(singles), len(triples), len(diffs)) == (2, 40, 30)
    assert singles | triples | diffs == roots
    assert all(pairing(r, DELTA) == 0 for r in diffs)
    assert all(pairing(r, DELTA) != 0 for r in triples)


def test_reflect_examples():
    a = vec(0, 1, -1, 0, 0, 0, 0)
    assert reflect(a, a) == -a
    assert reflect(DELTA, E[1]) == vec(2, 0, -1, -1, -1, -1, -1)
    assert reflect(a, E[1]) == E[2]


def test_reflect_rejects_non_roots():
    with pytest.raises(InputError, match="reflection axis must be a root"):
        reflect(E[1], E[2])


def test_reflections_exhaustive_properties():
    roots = enumerate_roots()
    root_set = set(roots)
    probes = list(E) + list(enumerate_lines())
    for a in roots:
        assert reflect(a, H) == H
        assert {reflect(a, r) for r in roots} == root_set
        for v in probes:
            w = reflect(a, v)
            assert reflect(a, w) == v
            for u in probes[:8]:
                assert pairing(reflect(a, u), w) == pairing(u, v)


def test_reflection_matrix_agrees_with_formula():
    for a in enumerate_roots()[:10]:
        m = np.array(reflection_matrix(a))
        for b in enumerate_lines():
            assert tuple(m @ np.array(b.coords)) == reflect(a, b).coords


def test_sextuples_and_double_sixes():
    sx = sextuples()
    assert len(sx) == 72
    assert len(set(sx)) == 72
    for s in sx:
        assert len(s) == 6
        assert all(pairing(a, b) == 0 for a, b in combinations(s, 2))
    assert frozenset(E[1:]) in sx
    ds = double_sixes()
    assert len(ds) == 36
    for d in ds:
        assert not set(d.first) & set(d.second)
        assert set(d.first) == sextuple(d.root)
        assert set(d.second) == sextuple(-d.root)


def test_tritangent_trios():
    trios = tritangent_trios()
    assert len(trios) == 45
    # L_1 + M_2 + L_12 with M_2 = 2e0 - e1 - e3 - ... - e6
    trio = (E[1], DELTA + E[2], E[0] - E[1] - E[2])
    assert trio[0] + trio[1] + trio[2] == H
    assert tuple(sorted(trio)) in {tuple(sorted(t)) for t in trios}
    # e1 and e2 are skew, so no trio contains both
    assert not any(E[1] in t and E[2] in t for t in trios)
    for t in trios:
        assert t[0] + t[1] + t[2] == H
        assert all(pairing(a, b) == 1 for a, b in combinations(t, 2))


def test_tritangent_count_matches_brute_force_over_ordered_triples():
    lines = enumerate_lines()
    ordered = sum(
        1 for a in lines for b in lines for c in lines if a != b and b != c and a != c and a + b + c == H
    )
    assert ordered == 45 * 6


def test_six_ways_examples():
    pairs = six_ways(DELTA)
    assert sorted(pairs) == sorted((DELTA + E[i], E[i]) for i in range(1, 7))
    a = vec(0, 1, -1, 0, 0, 0, 0)
    assert (E[1], E[2]) in six_ways(a)


def test_six_ways_for_every_root_matches_brute_force():
    lines = enumerate_lines()
    for a in enumerate_roots():
        brute = [(b1, b2) for b1 in lines for b2 in lines if b1 - b2 == a and pairing(b1, b2) == 0]
        assert sorted(six_ways(a)) == sorted(brute)
        assert len(brute) == 6


def test_six_ways_rejects_non_roots():
    with pytest.raises(InputError):
        six_ways(E[1])


def test_skew_pair_counts():
    assert skew_pair_counts() == (432, 216)
    assert all(len(skew_partners(b)) == 16 for b in enumerate_lines())


def test_vector_parse_and_format():
    assert LatticeVector.parse("2,-1,-1,-1,-1,-1,-1") == DELTA
    assert str(DELTA) == "2e0-e1-e2-e3-e4-e5-e6"
    with pytest.raises(InputError):
        LatticeVector.parse("1,2")
    with pytest.raises(InputError):
        LatticeVector.parse("a,b")
