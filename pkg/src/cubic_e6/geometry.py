"""Exact geometry of explicit cubic forms.

Surfaces are cubic forms in 4 variables, threefolds cubic forms in 5.
Along a line L on the hypersurface, write the form in coordinates where L
is ``{y2 = ... = 0}``; the coefficients of the normal variables are binary
quadrics ``Q_k`` in the line coordinates.  They give the dual (Gauss) map
along L, and everything about how the hypersurface sits along L is read off
from them.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    BinaryForm,
    QPoly,
    SparseEchelon,
    as_rational,
    gcd_binary,
    hilbert_function,
    monomials,
    nullspace,
    rank,
    resultant_binary,
    substitute_linear,
)
from .errors import InputError, InvariantViolation

DEFAULT_JET_BOUND = 12
LINE_PARAMS = ("s", "t")


# ---------------------------------------------------------------------------
# points, lines and cubic forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjPoint:
    """Point of projective space, scaled so its first nonzero coordinate is 1."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = tuple(as_rational(c) for c in self.coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise InputError("a projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", tuple(c / lead for c in coords))

    @classmethod
    def parse(cls, text: str) -> ProjPoint:
        return cls(tuple(as_rational(part) for part in text.split(",")))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


@dataclass(frozen=True)
class ProjLine:
    """Line spanned by two distinct points."""

    p: ProjPoint
    q: ProjPoint

    def __post_init__(self) -> None:
        if self.p.dim != self.q.dim:
            raise InputError("points of a line must live in the same space")
        if rank([self.p.coords, self.q.coords]) != 2:
            raise InputError("points spanning a line must be distinct")

    @classmethod
    def through(cls, p: Sequence, q: Sequence) -> ProjLine:
        return cls(ProjPoint(tuple(p)), ProjPoint(tuple(q)))

    @classmethod
    def coordinate(cls, nvars: int, zero: Sequence[int]) -> ProjLine:
        """The line where the coordinates listed in ``zero`` vanish."""
        free = [i for i in range(nvars) if i not in set(zero)]
        if len(free) != 2:
            raise InputError("a coordinate line leaves exactly two coordinates free")
        pts = [tuple(int(i == f) for i in range(nvars)) for f in free]
        return cls.through(*pts)

    @property
    def dim(self) -> int:
        return self.p.dim

    def point_at(self, lam, mu) -> ProjPoint:
        lam, mu = as_rational(lam), as_rational(mu)
        return ProjPoint(tuple(lam * a + mu * b for a, b in zip(self.p.coords, self.q.coords)))

    def to_json(self) -> dict:
        return {"points": [self.p.to_json(), self.q.to_json()]}


def check_cubic(f: QPoly, nvars: Sequence[int] = (4, 5)) -> QPoly:
    if f.is_zero() or not f.is_homogeneous(3):
        raise InputError("expected a nonzero homogeneous cubic form")
    if f.nvars not in nvars:
        raise InputError(f"expected a cubic in {' or '.join(map(str, nvars))} variables")
    return f


def _check_point(f: QPoly, p: ProjPoint) -> None:
    if p.dim != f.nvars:
        raise InputError("point and form live in different spaces")


def _check_line(f: QPoly, line: ProjLine) -> None:
    if line.dim != f.nvars:
        raise InputError("line and form live in different spaces")


def standard_variables(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def restrict_to_line(f: QPoly, line: ProjLine) -> QPoly:
    """``f(s p + t q)`` as a polynomial in the line parameters ``s, t``."""
    _check_line(f, line)
    s, t = QPoly.gens(LINE_PARAMS)
    images = [s * a + t * b for a, b in zip(line.p.coords, line.q.coords)]
    return f.compose(images)


def line_on_surface(f: QPoly, line: ProjLine) -> bool:
    return restrict_to_line(f, line).is_zero()


def _greedy_frame(columns: Sequence[Sequence[Fraction]], n: int) -> list[list[Fraction]]:
    """Square matrix whose first columns are ``columns``, completed by the
    first standard basis vectors that keep the columns independent."""
    cols = [list(map(as_rational, c)) for c in columns]
    if rank(cols) != len(cols):
        raise InputError("frame vectors are dependent")
    for i in range(n):
        if len(cols) == n:
            break
        e = [Fraction(int(i == j)) for j in range(n)]
        if rank(cols + [e]) == len(cols) + 1:
            cols.append(e)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# dual map along a line
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DualMapData:
    """Binary quadrics ``Q_k`` in the line coordinates, one per normal
    direction, and the coordinate frame they were read off in."""

    forms: tuple[BinaryForm, ...]
    frame: tuple[tuple[Fraction, ...], ...]

    @property
    def q0(self) -> BinaryForm:
        return self.forms[0]

    @property
    def q1(self) -> BinaryForm:
        return self.forms[1]

    def span_rank(self) -> int:
        return rank([f.coeffs for f in self.forms])

    def nonzero_forms(self) -> list[BinaryForm]:
        return [f for f in self.forms if not f.is_zero()]

    def to_json(self) -> dict:
        return {"forms": [str(f) for f in self.forms], "coeffs": [[str(c) for c in f.coeffs] for f in self.forms]}


def dual_map_data(f: QPoly, line: ProjLine, frame: Sequence[Sequence] | None = None) -> DualMapData:
    """Coefficients of the normal variables after moving L to ``{y2=...=0}``.

    ``frame`` overrides the coordinate change; its first two columns must
    span L.  By default L's two points are completed greedily with standard
    basis vectors.
    """
    check_cubic(f)
    _check_line(f, line)
    if not line_on_surface(f, line):
        raise InputError("line does not lie on the hypersurface")
    n = f.nvars
    if frame is None:
        m = _greedy_frame([line.p.coords, line.q.coords], n)
    else:
        m = [[as_rational(x) for x in row] for row in frame]
        first_two = [[row[0] for row in m], [row[1] for row in m]]
        if rank([line.p.coords, line.q.coords] + first_two) != 2:
            raise InputError("frame does not start with a basis of the line")
    g = substitute_linear(f, m)
    forms = []
    for k in range(2, n):
        coeffs = []
        for i in range(3):
            exp = [0] * n
            exp[0], exp[1], exp[k] = 2 - i, i, 1
            coeffs.append(g.coefficient(exp))
        forms.append(BinaryForm(tuple(coeffs)))
    # map the line coordinates back so (s, t) means s*p + t*q
    back = _line_coordinate_change(line, m)
    forms = [_change_binary(q, back) for q in forms]
    return DualMapData(tuple(forms), tuple(tuple(row) for row in m))


def _line_coordinate_change(line: ProjLine, m: list[list[Fraction]]) -> list[list[Fraction]]:
    # columns 0 and 1 of the frame span L; express them through (p, q) and
    # return the 2x2 matrix sending (s, t) on p, q to frame coordinates
    c0 = [row[0] for row in m]
    c1 = [row[1] for row in m]
    # solve c0 = a p + b q, c1 = c p + d q
    basis = [list(line.p.coords), list(line.q.coords)]
    coeffs = []
    for c in (c0, c1):
        sol = nullspace([[basis[0][i], basis[1][i], -c[i]] for i in range(len(c))], 3)
        if len(sol) != 1 or sol[0][2] == 0:
            raise InvariantViolation("frame columns do not span the line")
        v = sol[0]
        coeffs.append((v[0] / v[2], v[1] / v[2]))
    (a, b), (c, d) = coeffs
    # frame coords (y0, y1) give point y0*c0 + y1*c1 = (a y0 + c y1) p + (b y0 + d y1) q
    # invert to express (y0, y1) in terms of (s, t)
    det = a * d - b * c
    return [[d / det, -c / det], [-b / det, a / det]]


def _change_binary(q: BinaryForm, m: list[list[Fraction]]) -> BinaryForm:
    s, t = QPoly.gens(LINE_PARAMS)
    images = [s * m[0][0] + t * m[0][1], s * m[1][0] + t * m[1][1]]
    return BinaryForm.from_qpoly(q.to_qpoly(LINE_PARAMS).compose(images), q.degree)


FIRST = "first"
SECOND = "second"
SMOOTH_ALONG = "smooth_along"


def classify_line(f: QPoly, line: ProjLine, frame: Sequence[Sequence] | None = None) -> str:
    """``first``, ``second`` or (surfaces only) ``smooth_along``.

    On a surface: second when Q0, Q1 are proportional, first when they are
    independent with a common root, smooth_along when coprime.  On a
    threefold: first when the Q_k span a 3-dimensional space (the dual map
    is a conic), second when they span 2 dimensions.
    """
    data = dual_map_data(f, line, frame)
    if not data.nonzero_forms():
        raise InputError("surface singular along line (non-normal)")
    r = data.span_rank()
    if f.nvars == 4:
        if r == 1:
            return SECOND
        if resultant_binary(data.q0, data.q1) == 0:
            return FIRST
        return SMOOTH_ALONG
    if r == 3:
        return FIRST
    if r == 2:
        return SECOND
    raise InputError("threefold singular along line (dual map constant)")


@dataclass(frozen=True)
class SingularLocus:
    """gcd of the dual-map forms; its roots are the singular points on L."""

    gcd: BinaryForm
    points: tuple[tuple[ProjPoint, int], ...]

    @property
    def degree(self) -> int:
        return self.gcd.degree


def singular_points_on_line(f: QPoly, line: ProjLine) -> SingularLocus:
    data = dual_map_data(f, line)
    forms = data.nonzero_forms()
    if not forms:
        raise InputError("surface singular along line (non-normal)")
    g = forms[0]
    for q in forms[1:]:
        g = gcd_binary(g, q)
    g = g.monic()
    points = []
    if g.degree > 0:
        for (lam, mu), mult in g.rational_roots():
            points.append((line.point_at(lam, mu), mult))
    return SingularLocus(g, tuple(points))


# ---------------------------------------------------------------------------
# singular points
# ---------------------------------------------------------------------------

def gradient_at(f: QPoly, p: ProjPoint) -> list[Fraction]:
    return [d.evaluate(p.coords) for d in f.gradient()]


def local_expansion(f: QPoly, p: ProjPoint) -> QPoly:
    """Dehomogenize at ``p`` (chart of its first nonzero coordinate) and
    translate ``p`` to the origin."""
    _check_point(f, p)
    j = next(i for i, c in enumerate(p.coords) if c)
    names = tuple(v for i, v in enumerate(f.variables) if i != j)
    local = QPoly.gens(names)
    images, k = [], 0
    for i, c in enumerate(p.coords):
        if i == j:
            images.append(QPoly.constant(names, 1))
        else:
            images.append(local[k] + c)
            k += 1
    return f.compose(images)


def hessian_matrix(quadratic: QPoly) -> list[list[Fraction]]:
    n = quadratic.nvars
    return [[quadratic.diff(i).diff(k).evaluate([0] * n) for k in range(n)] for i in range(n)]


def milnor_number(f: QPoly, jet_bound: int = DEFAULT_JET_BOUND) -> int:
    """Dimension of the local algebra modulo the Jacobian ideal at the origin.

    ``d_k = dim O / (J + m^k)`` is computed from the span of ``x^a * df/dx_i``
    truncated below degree k.  Once ``d_k == d_{k+1}`` Nakayama's lemma puts
    ``m^k`` inside J, so ``d_k`` is the answer.
    """
    if f.evaluate([0] * f.nvars) != 0:
        raise InputError("milnor_number expects a function vanishing at the origin")
    partials = f.gradient()
    previous = _jet_codimension(partials, 1)
    for k in range(1, jet_bound):
        current = _jet_codimension(partials, k + 1)
        if current == previous:
            return previous
        previous = current
    raise InputError("increase jet bound or singularity non-isolated")


def _jet_codimension(partials: Sequence[QPoly], k: int) -> int:
    n = partials[0].nvars if partials else 0
    cols = [e for d in range(k) for e in monomials(n, d)]
    index = {e: i for i, e in enumerate(cols)}
    ech = SparseEchelon()
    for d in range(k):
        for a in monomials(n, d):
            for g in partials:
                row = {}
                for e, c in g.terms.items():
                    total = tuple(x + y for x, y in zip(a, e))
                    if sum(total) < k:
                        row[index[total]] = c
                if row:
                    ech.add(row)
            if len(ech) == len(cols):
                return 0
    return len(cols) - len(ech)


DISTINCT3 = "distinct3"
DOUBLE_LINE = "double_line"
TRIPLE_LINE = "triple_line"
NOT_APPLICABLE = "n/a"
CONE_VERTEX = "cone vertex candidate"


@dataclass(frozen=True)
class SingularityReport:
    multiplicity: int
    hessian_corank: int
    milnor_number: int | None
    cubic_part_pattern: str
    ade_label: str | None
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "hessian_corank": self.hessian_corank,
            "milnor_number": self.milnor_number,
            "cubic_part_pattern": self.cubic_part_pattern,
            "ade_label": self.ade_label,
            "note": self.note,
        }


def _cubic_pattern(cubic: QPoly, kernel: list[list[Fraction]]) -> str:
    """Root pattern of the cubic part restricted to a 2-dimensional kernel."""
    s, t = QPoly.gens(LINE_PARAMS)
    images = [s * kernel[0][i] + t * kernel[1][i] for i in range(cubic.nvars)]
    restricted = BinaryForm.from_qpoly(cubic.compose(images), 3)
    if restricted.is_zero():
        return NOT_APPLICABLE
    g = gcd_binary(restricted.diff_x0(), restricted.diff_x1())
    return {0: DISTINCT3, 1: DOUBLE_LINE, 2: TRIPLE_LINE}[g.degree]


def ade_lookup(corank: int, pattern: str, mu: int | None) -> str | None:
    if corank == 0:
        return "A1"
    if mu is None:
        return None
    if corank == 1:
        return f"A{mu}"
    if corank == 2:
        if pattern == DISTINCT3:
            return "D4"
        if pattern == DOUBLE_LINE and mu >= 5:
            return f"D{mu}"
        if pattern == TRIPLE_LINE and mu in (6, 7, 8):
            return f"E{mu}"
    return None


def classify_singular_point(f: QPoly, p: ProjPoint, jet_bound: int = DEFAULT_JET_BOUND) -> SingularityReport:
    check_cubic(f)
    _check_point(f, p)
    if f.evaluate(p.coords) != 0 or any(gradient_at(f, p)):
        raise InputError("not a singular point")
    local = local_expansion(f, p)
    n = local.nvars
    mult = local.lowest_degree()
    quadratic = local.homogeneous_part(2)
    hess = hessian_matrix(quadratic)
    corank = n - rank(hess)
    try:
        mu = milnor_number(local, jet_bound)
    except InputError:
        mu = None
    if mult >= 3:
        return SingularityReport(mult, corank, mu, NOT_APPLICABLE, None, CONE_VERTEX)
    pattern = NOT_APPLICABLE
    if corank == 2:
        pattern = _cubic_pattern(local.homogeneous_part(3), nullspace(hess))
    label = ade_lookup(corank, pattern, mu)
    if corank >= 1 and mu is None:
        raise InputError("increase jet bound or singularity non-isolated")
    return SingularityReport(mult, corank, mu, pattern, label)


# ---------------------------------------------------------------------------
# cones and Eckardt points
# ---------------------------------------------------------------------------

NOT_CONE = "not_cone"
CONE_SMOOTH = "cone_over_smooth_cubic"
CONE_SINGULAR = "cone_over_singular_cubic"


def detect_cone(f: QPoly, vertex: ProjPoint) -> str:
    """Decide whether ``{f=0}`` is a cone with the given vertex, and if so
    whether the base cubic is smooth.

    A cubic is a cone with vertex v exactly when all second partials vanish
    at v.  The base cubic C in m variables is smooth exactly when its partials
    have no common zero, which for m quadrics is equivalent to the vanishing
    of the Hilbert function of the ideal they generate in degree m + 1.
    """
    check_cubic(f, (3, 4, 5))
    _check_point(f, vertex)
    second = [f.diff(i).diff(k).evaluate(vertex.coords) for i in range(f.nvars) for k in range(f.nvars)]
    if any(second):
        return NOT_CONE
    n = f.nvars
    cols = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    frame_cols = [list(vertex.coords)]
    for c in cols:
        if len(frame_cols) == n:
            break
        if rank(frame_cols + [c]) == len(frame_cols) + 1:
            frame_cols.append(c)
    ordered = frame_cols[1:] + frame_cols[:1]
    m = [[ordered[j][i] for j in range(n)] for i in range(n)]
    g = substitute_linear(f, m)
    if g.uses_variable(n - 1):
        raise InvariantViolation("cone form still depends on the vertex direction")
    base_vars = f.variables[: n - 1]
    base = QPoly(base_vars, {e[: n - 1]: c for e, c in g.terms.items()})
    partials = base.gradient()
    if hilbert_function(partials, n, nvars=n - 1) == 0:
        return CONE_SMOOTH
    return CONE_SINGULAR


def tangent_hyperplane(f: QPoly, p: ProjPoint) -> list[Fraction]:
    return gradient_at(f, p)


def eckardt_check(y: QPoly, p: ProjPoint) -> bool:
    """True when the tangent hyperplane section of the threefold at ``p`` is
    a cone over a smooth plane cubic with vertex ``p``."""
    check_cubic(y, (5,))
    _check_point(y, p)
    if y.evaluate(p.coords) != 0:
        raise InputError("point does not lie on the threefold")
    grad = gradient_at(y, p)
    if not any(grad):
        raise InputError("threefold is singular at the point")
    n = y.nvars
    basis = [list(p.coords)]
    for v in nullspace([grad], n):
        if rank(basis + [v]) == len(basis) + 1:
            basis.append(v)
    if len(basis) != n - 1:
        raise InvariantViolation("tangent hyperplane basis has the wrong size")
    names = standard_variables(n - 1, "z")
    z = QPoly.gens(names)
    images = [sum((z[j] * basis[j][i] for j in range(n - 1)), QPoly(names)) for i in range(n)]
    section = y.compose(images)
    if section.is_zero():
        raise InvariantViolation("tangent hyperplane is contained in the threefold")
    vertex = ProjPoint(tuple(int(j == 0) for j in range(n - 1)))
    return detect_cone(section, vertex) == CONE_SMOOTH


# ---------------------------------------------------------------------------
# threefold normal form along a line, tangent quadrics, conjugate points
# ---------------------------------------------------------------------------

THREEFOLD_VARS = standard_variables(5)


def threefold_normal_form(t=1) -> QPoly:
    """``x2*x0^2 + t*x3*x0*x1 + x4*x1^2``; it contains ``{x2=x3=x4=0}``."""
    x0, x1, x2, x3, x4 = QPoly.gens(THREEFOLD_VARS)
    return x2 * x0**2 + x3 * x0 * x1 * as_rational(t) + x4 * x1**2


def normal_form_line() -> ProjLine:
    return ProjLine.coordinate(5, (2, 3, 4))


def tangent_quadric(a, b) -> tuple[QPoly, QPoly]:
    """Hyperplane ``H`` and quadric ``Q`` (taken inside ``H``) tangent to the
    normal form along its line, for the direction ``(a, b)``.

    The lines ``(l, m, -s*a*m, s*(a*l + b*m), -s*b*l)`` sweep the quadric as
    ``s`` varies.  ``Q`` is the unique quadric in the variables other than
    the pivot of ``H`` that vanishes on all of them, scaled so its leading
    term has coefficient 1.
    """
    a, b = as_rational(a), as_rational(b)
    if a == 0 and b == 0:
        raise InputError("(a, b) must not be (0, 0)")
    x = QPoly.gens(THREEFOLD_VARS)
    h = x[4] * a**2 + x[2] * b**2 + x[3] * a * b
    pivot = 4 if a != 0 else 2
    lam, mu, s = QPoly.gens(("l", "m", "s"))
    sweep = [lam, mu, -(s * a * mu), s * (lam * a + mu * b), -(s * b * lam)]
    unknowns = [e for e in monomials(5, 2) if e[pivot] == 0]
    images = [QPoly(THREEFOLD_VARS, {e: 1}).compose(sweep) for e in unknowns]
    keys = sorted({k for im in images for k in im.terms})
    matrix = [[im.coefficient(k) for im in images] for k in keys]
    kernel = nullspace(matrix, len(unknowns))
    if len(kernel) != 1:
        raise InvariantViolation(f"sweep determines {len(kernel)} quadrics instead of one")
    q = QPoly(THREEFOLD_VARS, dict(zip(unknowns, kernel[0])))
    return h, q.monic()


def _det3(m: list[list[QPoly]]) -> QPoly:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def verify_tangent(f: QPoly, g: QPoly, h: QPoly, line: ProjLine) -> bool:
    """True when ``grad f, grad g, grad h`` have rank at most 2 at every
    point of the line, i.e. all 3x3 minors vanish identically on it."""
    for form in (f, g, h):
        if form.variables != f.variables:
            raise InputError("forms must share their variables")
        if not line_on_surface(form, line):
            raise InputError("line does not lie on all three hypersurfaces")
    rows = [[restrict_to_line(d, line) for d in form.gradient()] for form in (f, g, h)]
    n = f.nvars
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                minor = _det3([[row[i], row[j], row[k]] for row in rows])
                if not minor.is_zero():
                    return False
    return True


def _divide_binary(p: BinaryForm, d: BinaryForm) -> BinaryForm:
    """Exact quotient of binary forms (``d`` must divide ``p``)."""
    s, t = LINE_PARAMS
    pq, dq = p.to_qpoly((s, t)), d.to_qpoly((s, t))
    if dq.is_zero():
        raise ZeroDivisionError("division by the zero form")
    deg = p.degree - d.degree
    unknowns = monomials(2, deg)
    products = [QPoly((s, t), {e: 1}) * dq for e in unknowns]
    keys = monomials(2, p.degree)
    matrix = [[prod.coefficient(k) for prod in products] + [-pq.coefficient(k)] for k in keys]
    sol = nullspace(matrix, len(unknowns) + 1)
    sol = [v for v in sol if v[-1] != 0]
    if not sol:
        raise InvariantViolation("binary form division is not exact")
    v = sol[0]
    return BinaryForm(tuple(v[i] / v[-1] for i in range(len(unknowns))))


def conjugate_point(f: QPoly, line: ProjLine, p: ProjPoint) -> ProjPoint:
    """The other point of L with the same dual-map image as ``p``.

    Returns ``p`` when the dual map is injective along L, and at its
    ramification points.
    """
    _check_line(f, line)
    _check_point(f, p)
    if rank([line.p.coords, line.q.coords, p.coords]) != 2:
        raise InputError("point does not lie on the line")
    data = dual_map_data(f, line)
    forms = data.nonzero_forms()
    if not forms:
        raise InputError("dual-map data degenerate")
    g = forms[0]
    for q in forms[1:]:
        g = gcd_binary(g, q)
    reduced = [_divide_binary(q, g) if not q.is_zero() else BinaryForm.zero(2 - g.degree) for q in data.forms]
    degree = 2 - g.degree
    if degree == 0:
        raise InputError("dual-map data degenerate")
    span = rank([r.coeffs for r in reduced])
    if degree == 1 or span == 3:
        return p
    if span != 2:
        raise InvariantViolation("dual map has unexpected rank")
    basis = [r for r in reduced if not r.is_zero()]
    ra = basis[0]
    rb = next(r for r in basis[1:] if rank([ra.coeffs, r.coeffs]) == 2)
    lam, mu = _line_coordinates(line, p)
    phi = BinaryForm(tuple(ra(lam, mu) * y - rb(lam, mu) * x for x, y in zip(ra.coeffs, rb.coeffs)))
    if phi.is_zero():
        raise InvariantViolation("point is a base point of the dual map")
    linear = BinaryForm((mu, -lam))  # vanishes at [lam, mu]
    other = _divide_binary(phi, linear)
    (root, _), = other.rational_roots()
    return line.point_at(*root)


def _line_coordinates(line: ProjLine, p: ProjPoint) -> tuple[Fraction, Fraction]:
    n = line.dim
    sol = nullspace([[line.p.coords[i], line.q.coords[i], -p.coords[i]] for i in range(n)], 3)
    v = sol[0]
    return v[0] / v[2], v[1] / v[2]


def type_iii_exists(f: QPoly, l1: ProjLine, l2: ProjLine) -> bool:
    """Whether two incident lines on the surface meet at a singular point."""
    check_cubic(f)
    for line in (l1, l2):
        _check_line(f, line)
        if not line_on_surface(f, line):
            raise InputError("line does not lie on the surface")
    meet = meeting_point(l1, l2)
    return not any(gradient_at(f, meet))


def meeting_point(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    vecs = [l1.p.coords, l1.q.coords, l2.p.coords, l2.q.coords]
    if rank(vecs) != 3:
        raise InputError("lines must be incident")
    n = l1.dim
    v = nullspace([[l1.p.coords[i], l1.q.coords[i], -l2.p.coords[i], -l2.q.coords[i]] for i in range(n)], 4)[0]
    return l1.point_at(v[0], v[1])


def cone_vertex(f: QPoly) -> ProjPoint | None:
    """The unique point where every second partial of ``f`` vanishes, if any.

    Such a point is the vertex of ``{f=0}`` as a cone.  None when there is no
    such point or when the vertex locus is larger than a point.
    """
    check_cubic(f, (3, 4, 5))
    n = f.nvars
    rows = []
    for i in range(n):
        for j in range(i, n):
            second = f.diff(i).diff(j)
            rows.append([second.coefficient(tuple(int(k == m) for m in range(n))) for k in range(n)])
    kernel = nullspace(rows, n)
    if len(kernel) != 1:
        return None
    return ProjPoint(tuple(kernel[0]))
