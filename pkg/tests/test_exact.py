from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cubic_e6.errors import InputError
from cubic_e6.exact import (
    BinaryForm,
    QPoly,
    as_rational,
    det,
    gcd_binary,
    hilbert_function,
    inverse,
    monomials,
    nullspace,
    rank,
    resultant_binary,
    substitute_linear,
)

V4 = ("x0", "x1", "x2", "x3")
x0, x1, x2, x3 = QPoly.gens(V4)


def bf(*coeffs):
    return BinaryForm(tuple(coeffs))


def test_as_rational_accepts_ratio_strings_and_rejects_floats():
    assert as_rational("-3/4") == Fraction(-3, 4)
    assert as_rational(5) == 5
    with pytest.raises(InputError):
        as_rational(0.5)
    with pytest.raises(InputError):
        as_rational("one")


def test_qpoly_drops_zero_coefficients_and_compares_by_terms():
    f = QPoly(V4, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 0})
    assert dict(f.terms) == {(1, 0, 0, 0): Fraction(1)}
    assert (x0 + x1) - x1 == x0
    assert (x0 * x1) * 0 == 0
    assert (x0 + 1) ** 2 == x0 * x0 + 2 * x0 + 1


def test_qpoly_rejects_mismatched_exponents():
    with pytest.raises(InputError):
        QPoly(V4, {(1, 0): 1})


def test_qpoly_json_round_trip():
    f = x0 * x1 * x2 - x3**3 + Fraction(1, 2) * x0**3
    assert QPoly.from_json(f.to_json()) == f
    assert f.to_json()["terms"][0] == {"exp": [3, 0, 0, 0], "coeff": "1/2"}


def test_diff_and_evaluate():
    f = x0**2 * x1 + 3 * x3
    assert f.diff(0) == 2 * x0 * x1
    assert f.diff("x3") == 3
    assert f.evaluate([1, 2, 0, Fraction(1, 3)]) == 3


def test_substitute_linear_identity_and_swap():
    v = ("x0", "x1")
    a, b = QPoly.gens(v)
    assert substitute_linear(a * b, [[1, 0], [0, 1]]) == a * b
    assert substitute_linear(a**2, [[0, 1], [1, 0]]) == b**2


def test_substitute_linear_moves_a_line_of_the_three_a2_surface():
    # columns send the {x2=x3=0} frame to the {x0=x3=0} frame: y0 -> e1,
    # y1 -> e2, y2 -> e0, y3 -> e3
    f = x0 * x1 * x2 - x3**3
    m = [[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    g = substitute_linear(f, m)
    assert g == x2 * x0 * x1 - x3**3
    # coefficient of y2 restricted to the line: y0*y1
    assert g.coefficient((1, 1, 1, 0)) == 1


def test_substitute_linear_errors():
    with pytest.raises(InputError, match="non-invertible"):
        substitute_linear(x0 * x1, [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(InputError):
        substitute_linear(x0 * x1, [[1, 0], [0, 1]])


small = st.integers(-3, 3)


@st.composite
def invertible_4x4(draw):
    while True:
        m = [[draw(small) for _ in range(4)] for _ in range(4)]
        if det(m) != 0:
            return m


@st.composite
def cubic4(draw):
    terms = {e: draw(small) for e in draw(st.lists(st.sampled_from(monomials(4, 3)), max_size=6))}
    return QPoly(V4, terms)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.large_base_example])
@given(cubic4(), invertible_4x4())
def test_substitute_linear_inverse_round_trip(f, m):
    assert substitute_linear(substitute_linear(f, m), inverse(m)) == f


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.large_base_example])
@given(cubic4(), cubic4(), invertible_4x4())
def test_substitute_linear_is_a_ring_homomorphism(f, g, m):
    assert substitute_linear(f * g + f, m) == substitute_linear(f, m) * substitute_linear(g, m) + substitute_linear(f, m)


def test_resultant_sign_follows_sylvester_row_order():
    # x0 + x1 against x0^3: expanding the 4x4 Sylvester matrix along the q row
    # gives -1
    assert resultant_binary(bf(1, 1), bf(1, 0, 0, 0)) == -1


def test_resultant_examples():
    assert resultant_binary(bf(0, 1, 0), bf(0, 0, 1)) == 0
    assert resultant_binary(bf(1, 0, 0), bf(0, 0, 1)) == 1
    # Sylvester determinant of x0^2 - x1^2 and x0^2, computed independently
    assert resultant_binary(bf(1, 0, -1), bf(1, 0, 0)) == 1
    with pytest.raises(InputError, match="resultant of zero form"):
        resultant_binary(bf(0, 0, 0), bf(1, 0))


def test_gcd_examples():
    assert gcd_binary(bf(0, 1, 0), bf(0, 0, 1)) == bf(0, 1)
    assert gcd_binary(bf(1, 0, 0), bf(0, 0, 1)) == bf(1)
    assert gcd_binary(bf(1, 0, -1), bf(1, -1, 0)) == bf(1, -1)
    with pytest.raises(InputError):
        gcd_binary(bf(0, 0), bf(0, 0, 0))


def _sympy_form(form: BinaryForm):
    a, b = sp.symbols("a b")
    d = form.degree
    return sum(sp.Rational(c.numerator, c.denominator) * a ** (d - i) * b**i for i, c in enumerate(form.coeffs)), a, b


forms = st.integers(1, 3).flatmap(
    lambda d: st.lists(st.integers(-3, 3), min_size=d + 1, max_size=d + 1)
).filter(any).map(lambda cs: BinaryForm(tuple(cs)))


@settings(max_examples=80, deadline=None)
@given(forms, forms, forms)
def test_resultant_vanishes_iff_gcd_nontrivial(p, q, common):
    # multiply by a shared factor half of the time to hit the zero case often
    if sum(common.coeffs) % 2 == 0:
        p, q = p * common, q * common
    res = resultant_binary(p, q)
    g = gcd_binary(p, q)
    assert (res == 0) == (g.degree >= 1)


@settings(max_examples=60, deadline=None)
@given(forms, forms)
def test_gcd_matches_sympy(p, q):
    ep, a, b = _sympy_form(p)
    eq, _, _ = _sympy_form(q)
    expected = sp.Poly(sp.gcd(ep, eq), a, b)
    got, _, _ = _sympy_form(gcd_binary(p, q))
    got = sp.Poly(got, a, b)
    assert got.total_degree() == expected.total_degree()
    # equal up to a constant factor
    assert sp.Poly(got.as_expr() * expected.LC() - expected.as_expr() * got.LC(), a, b).is_zero


@settings(max_examples=60, deadline=None)
@given(forms, forms)
def test_resultant_matches_sympy_at_full_degree(p, q):
    # sympy's univariate resultant agrees up to sign with the Sylvester
    # determinant when the x0^d coefficients are nonzero
    if p.coeffs[0] == 0 or q.coeffs[0] == 0:
        return
    ep, a, b = _sympy_form(p)
    eq, _, _ = _sympy_form(q)
    expected = sp.resultant(ep.subs(b, 1), eq.subs(b, 1), a)
    assert abs(resultant_binary(p, q)) == abs(Fraction(int(sp.numer(expected)), int(sp.denom(expected))))


def test_rational_roots_include_point_at_infinity_and_multiplicity():
    roots = bf(0, 1, 0).rational_roots()
    assert ((Fraction(1), Fraction(0)), 1) in roots
    assert ((Fraction(0), Fraction(1)), 1) in roots
    # (x0 - 2 x1)^2 (x0 + x1)
    f = bf(1, -2) * bf(1, -2) * bf(1, 1)
    assert sorted(f.rational_roots()) == sorted([((Fraction(1), Fraction(1, 2)), 2), ((Fraction(1), Fraction(-1)), 1)])


def test_linear_algebra_helpers():
    assert rank([[1, 2], [2, 4]]) == 1
    assert det([[2, 1], [1, 1]]) == 1
    ns = nullspace([[1, 1, 0]])
    assert len(ns) == 2
    assert all(v[0] + v[1] == 0 for v in ns)
    assert inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]


def test_hilbert_function_examples():
    assert hilbert_function([x0 * x2, x0 * x3, x1 * x2, x1 * x3], 3) == 8
    assert hilbert_function([], 1, nvars=4) == 4
    assert hilbert_function([x0**2, x0 * x1, x1**2, x0 * x2 + x1 * x3], 2) == 6


def test_hilbert_function_rejects_inhomogeneous_generators():
    with pytest.raises(InputError):
        hilbert_function([x0 + x1 * x2], 2)


def test_hilbert_function_of_complete_intersection_matches_oracle():
    # two generic quadrics in P^3 cut a quartic curve: h(n) = 4n for n >= 1
    gens = [x0 * x1 - x2 * x3, x0**2 + x1**2 + x2**2 - x3**2]
    assert [hilbert_function(gens, n) for n in range(1, 6)] == [4, 8, 12, 16, 20]
