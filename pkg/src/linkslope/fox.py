"""Slope, nullity and Alexander orders by free differential calculus.

The central object is the matrix of free derivatives of a presentation's
relators, with generators mapped to monomials in the color variables.
Specializing the knot variable to 1 and the color variables at a unitary
character turns it into a matrix over a field; the slope falls out of the
unique way (when there is one) of writing the longitude gradient as a
combination of relator gradients and the meridian gradient.

Characters with a coordinate equal to 1 are handled by deleting the
corresponding colored components from the diagram and recursing; this
needs an actual diagram, so presentation-only input is rejected there.

``alexander_order`` returns the greatest common divisor of the minors of
a fixed size of the full derivative matrix, which is invariant (up to
units, fixed by the normal form) under the simplification moves used
here.  ``conway_slope`` is an independent route to the slope through
one-variable derivatives of potential functions supplied in square-root
variables, used to cross-check the derivative-matrix route.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from itertools import combinations

from .algebra import (
    CyclotomicElement,
    LaurentPoly,
    RationalFunction,
    bareiss_det,
    exact_divide,
    matrix_rank,
    multivariate_gcd,
    root_of_unity,
    solve_system,
)
from .characters import NUMERIC_TOL, Character, is_admissible
from .diagram import ColoredDiagram, Presentation
from .errors import InconclusiveError, PreconditionError

__all__ = [
    "SlopeValue",
    "fox_derivative",
    "fox_gradient",
    "fox_matrix",
    "check_fox_identity",
    "slope_at",
    "slope_symbolic",
    "nullity_at",
    "alexander_order",
    "conway_slope",
]


# -- slope values --------------------------------------------------------------


class SlopeValue:
    """Finite value, infinity, or undefined with the degeneracy dimension."""

    __slots__ = ("kind", "value", "kernel_dim")

    def __init__(self, kind, value=None, kernel_dim=None):
        if kind not in ("finite", "infinity", "undefined"):
            raise ValueError(f"bad slope kind {kind!r}")
        self.kind = kind
        self.value = value
        self.kernel_dim = kernel_dim

    @classmethod
    def finite(cls, value) -> "SlopeValue":
        return cls("finite", value=value)

    @classmethod
    def infinity(cls) -> "SlopeValue":
        return cls("infinity")

    @classmethod
    def undefined(cls, kernel_dim: int) -> "SlopeValue":
        return cls("undefined", kernel_dim=kernel_dim)

    @property
    def is_finite(self):
        return self.kind == "finite"

    @property
    def is_infinite(self):
        return self.kind == "infinity"

    @property
    def is_undefined(self):
        return self.kind == "undefined"

    def __eq__(self, other):
        if not isinstance(other, SlopeValue):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "finite":
            return self.value == other.value
        if self.kind == "undefined":
            return self.kernel_dim == other.kernel_dim
        return True

    def __hash__(self):
        return hash((self.kind, str(self.value), self.kernel_dim))

    def close_to(self, other, tol: float = NUMERIC_TOL) -> bool:
        """Equality with a numeric tolerance on finite values."""
        if not isinstance(other, SlopeValue) or self.kind != other.kind:
            return False
        if self.kind == "finite":
            return abs(_as_complex(self.value) - _as_complex(other.value)) <= tol
        if self.kind == "undefined":
            return self.kernel_dim == other.kernel_dim
        return True

    def as_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "finite":
            v = self.value
            out["value"] = str(v)
            try:
                c = _as_complex(v)
            except (TypeError, ValueError):
                c = None
            if c is not None:
                out["approx"] = [c.real, c.imag]
        elif self.kind == "undefined":
            out["kernel_dim"] = self.kernel_dim
        return out

    def __repr__(self):
        if self.kind == "finite":
            return f"SlopeValue.finite({self.value})"
        if self.kind == "infinity":
            return "SlopeValue.infinity()"
        return f"SlopeValue.undefined({self.kernel_dim})"


def _as_complex(v) -> complex:
    if isinstance(v, CyclotomicElement):
        return v.to_complex()
    if isinstance(v, (int, float, complex, Fraction)):
        return complex(v)
    raise TypeError(f"no numeric value for {type(v).__name__}")


# -- free derivatives ------------------------------------------------------------


def fox_derivative(pres: Presentation, word, gen: str) -> LaurentPoly:
    """Free derivative of a word by one generator, abelianized."""
    variables = pres.variables()
    acc = LaurentPoly.zero(variables)
    prefix = LaurentPoly.one(variables)
    for g, e in word:
        p = pres.phi(g)
        if e > 0:
            if g == gen:
                acc = acc + prefix
            prefix = prefix * p
        else:
            prefix = prefix * p ** -1
            if g == gen:
                acc = acc - prefix
    return acc


def fox_gradient(pres: Presentation, word) -> list:
    """All free derivatives of a word at once, in generator order."""
    variables = pres.variables()
    grads = {g: LaurentPoly.zero(variables) for g in pres.generators}
    prefix = LaurentPoly.one(variables)
    for g, e in word:
        p = pres.phi(g)
        if e > 0:
            grads[g] = grads[g] + prefix
            prefix = prefix * p
        else:
            prefix = prefix * p ** -1
            grads[g] = grads[g] - prefix
    return [grads[g] for g in pres.generators]


def fox_matrix(pres: Presentation) -> list:
    """Derivative matrix: one row per relator, one column per generator."""
    return [fox_gradient(pres, r) for r in pres.relators]


def check_fox_identity(pres: Presentation, word) -> bool:
    """sum_j (dw/dg_j)(phi(g_j) - 1) must equal phi(w) - 1."""
    variables = pres.variables()
    total = LaurentPoly.zero(variables)
    one = LaurentPoly.one(variables)
    for g, d in zip(pres.generators, fox_gradient(pres, word)):
        total = total + d * (pres.phi(g) - one)
    return total == pres.phi_word(word) - one


# -- specialization helpers --------------------------------------------------------


def _prepare(source, simplify: bool) -> Presentation:
    if isinstance(source, ColoredDiagram):
        return source.wirtinger(simplify=simplify)
    if isinstance(source, Presentation):
        return source.tietze_simplify() if simplify else source
    raise TypeError(f"expected a diagram or presentation, got {type(source).__name__}")


def _trivial_coordinates(omega: Character, tol: float) -> list:
    out = []
    for i in range(omega.mu):
        if omega.coordinate_is_one(i, tol):
            out.append(i)
    return out


def _point_for(omega: Character):
    """Field values of a character's coordinates, plus the field zero."""
    if omega.kind == "exact":
        vals = list(omega.values())
        zero = vals[0].zero_like() if vals else Fraction(0)
        return vals, zero
    if omega.kind == "numeric":
        return list(omega.values_complex()), 0j
    raise PreconditionError("symbolic characters go through slope_symbolic")


def _specialize_rows(pres: Presentation, words, point):
    """Evaluate word gradients with the knot variable pinned to 1."""
    variables = pres.variables()
    has_t = "t" in variables
    rows = []
    for w in words:
        row = []
        for d in fox_gradient(pres, w):
            if has_t:
                d = d.restrict("t", 1)
            row.append(d.evaluate(point))
        rows.append(row)
    return rows


def _numeric_rank(rows, tol: float) -> int:
    import numpy

    if not rows:
        return 0
    a = numpy.array(rows, dtype=complex)
    if a.size == 0:
        return 0
    return int(numpy.linalg.matrix_rank(a, tol=tol))


def _numeric_last_coord(columns, rhs):
    import numpy

    a = numpy.array(columns, dtype=complex).T
    b = numpy.array(rhs, dtype=complex)
    x, *_ = numpy.linalg.lstsq(a, b, rcond=None)
    return complex(x[-1])


def _exact_last_coord(columns, rhs):
    p = len(rhs)
    matrix = [[col[i] for col in columns] for i in range(p)]
    x = solve_system(matrix, rhs)
    if x is None:
        raise AssertionError("rank bookkeeping promised a solution")
    return x[-1]


def _slope_from_rows(rows, dm, dl, zero, rank_fn, last_coord_fn) -> SlopeValue:
    r0 = rank_fn(rows)
    rm = rank_fn(rows + [dm])
    rl = rank_fn(rows + [dl])
    rml = rank_fn(rows + [dm, dl])
    if rml == r0:
        return SlopeValue.undefined(2)
    if rml == r0 + 2:
        return SlopeValue.undefined(0)
    if rm == r0:
        # meridian gradient is dependent, longitude is not
        return SlopeValue.infinity()
    if rl == r0:
        return SlopeValue.finite(zero)
    return SlopeValue.finite(last_coord_fn(rows + [dm], dl))


# -- slope -------------------------------------------------------------------------


def slope_at(source, omega: Character, *, simplify: bool = True,
             tol: float = NUMERIC_TOL) -> SlopeValue:
    """Slope of the knot against the colored part at a unitary character.

    The character has one coordinate per color 1..mu and must be
    admissible: the product of its values raised to the linking numbers
    of the knot with the color classes must be 1.
    """
    if omega.kind == "symbolic":
        return slope_symbolic(source, simplify=simplify)
    if isinstance(source, ColoredDiagram):
        if source.knot_component is None:
            raise PreconditionError("slope needs a component colored 0")
        if omega.mu != source.mu:
            raise PreconditionError(
                f"character has {omega.mu} coordinates, diagram has {source.mu} colors")
        trivial = _trivial_coordinates(omega, tol)
        if trivial:
            i = trivial[0]
            return slope_at(source.delete_color(i + 1), omega.drop(i),
                            simplify=simplify, tol=tol)
        pres = source.wirtinger(simplify=simplify)
    else:
        pres = _prepare(source, simplify)
        if not pres.has_knot:
            raise PreconditionError("slope needs a generator colored 0")
        if omega.mu != pres.mu:
            raise PreconditionError(
                f"character has {omega.mu} coordinates, presentation has {pres.mu} colors")
        if _trivial_coordinates(omega, tol):
            raise PreconditionError(
                "character is 1 on a color; deletion needs diagram input")
    if pres.meridian is None or pres.longitude is None:
        raise PreconditionError("slope needs distinguished meridian and longitude")
    lam = pres.linking_vector()
    if not is_admissible(lam, omega, tol):
        raise PreconditionError(
            f"character is not admissible for linking vector {lam}")
    point, zero = _point_for(omega)
    rows = _specialize_rows(pres, pres.relators, point)
    dm, dl = _specialize_rows(pres, [pres.meridian, pres.longitude], point)
    if omega.kind == "numeric":
        return _slope_from_rows(rows, dm, dl, zero,
                                lambda rs: _numeric_rank(rs, tol),
                                _numeric_last_coord)
    return _slope_from_rows(rows, dm, dl, zero, matrix_rank, _exact_last_coord)


def slope_symbolic(source, *, simplify: bool = True) -> SlopeValue:
    """Slope as a rational function on the full character torus.

    Only makes sense when every linking number of the knot with the
    colors vanishes, so that the whole torus is admissible.
    """
    pres = _prepare(source, simplify)
    if not pres.has_knot:
        raise PreconditionError("slope needs the knot color 0")
    if pres.meridian is None or pres.longitude is None:
        raise PreconditionError("slope needs distinguished meridian and longitude")
    lam = pres.linking_vector()
    if any(lam):
        raise PreconditionError(
            f"symbolic slope needs zero linking vector, got {lam}")
    names = tuple(n for n in pres.variables() if n != "t")
    point = [RationalFunction(LaurentPoly.variable(names, n)) for n in names]
    zero = RationalFunction(LaurentPoly.zero(names))
    rows = _specialize_rows(pres, pres.relators, point)
    dm, dl = _specialize_rows(pres, [pres.meridian, pres.longitude], point)
    return _slope_from_rows(rows, dm, dl, zero, matrix_rank, _exact_last_coord)


# -- nullity ---------------------------------------------------------------------


def nullity_at(source, omega: Character, *, simplify: bool = True,
               tol: float = NUMERIC_TOL) -> int:
    """Twisted nullity at a character on all colors, knot included.

    The character carries one coordinate per variable of the source, in
    variable order (knot variable first when present).
    """
    if omega.kind == "symbolic":
        raise PreconditionError("nullity needs an exact or numeric character")
    if isinstance(source, ColoredDiagram):
        colors = sorted({c for c in source.coloring.values()})
        if omega.mu != len(colors):
            raise PreconditionError(
                f"character has {omega.mu} coordinates, diagram has {len(colors)} colors")
        trivial = _trivial_coordinates(omega, tol)
        if trivial:
            i = trivial[0]
            return nullity_at(source.delete_color(colors[i]), omega.drop(i),
                              simplify=simplify, tol=tol)
        pres = source.wirtinger(simplify=simplify)
    else:
        pres = _prepare(source, simplify)
        if omega.mu != len(pres.variables()):
            raise PreconditionError(
                f"character has {omega.mu} coordinates, presentation has "
                f"{len(pres.variables())} variables")
        if _trivial_coordinates(omega, tol):
            raise PreconditionError(
                "character is 1 on a color; deletion needs diagram input")
    p = len(pres.generators)
    if p == 0:
        return 0
    point, _ = _point_for(omega)
    rows = []
    for w in pres.relators:
        rows.append([d.evaluate(point) for d in fox_gradient(pres, w)])
    if omega.kind == "numeric":
        rank = _numeric_rank(rows, tol)
    else:
        rank = matrix_rank(rows)
    correction = 1 if pres.variables() else 0
    return p - correction - rank


# -- Alexander orders ---------------------------------------------------------------


def alexander_order(source, r: int = 0, *, simplify: bool = True) -> LaurentPoly:
    """gcd of the (p - r - 1)-minors of the full derivative matrix.

    Returns a Laurent polynomial in the color variables, normalized so
    that it is a unit-free representative (content 1, no monomial factor,
    sign fixed).  r = 0 gives the order of the whole torsion module; each
    increment of r strikes one more row and column worth of minors.
    """
    pres = _prepare(source, simplify)
    variables = pres.variables()
    p = len(pres.generators)
    q = len(pres.relators)
    k = p - r - 1
    if k <= 0:
        return LaurentPoly.one(variables)
    if k > q:
        return LaurentPoly.zero(variables)
    matrix = fox_matrix(pres)
    shifted = []
    for row in matrix:
        mins = None
        for entry in row:
            if not entry:
                continue
            m = entry.min_exponents()
            mins = m if mins is None else tuple(min(a, b) for a, b in zip(mins, m))
        if mins is None:
            shifted.append(row)
            continue
        delta = tuple(-x for x in mins)
        shifted.append([e.shifted(delta) if e else e for e in row])

    def divide(a, b):
        out = exact_divide(a, b)
        if out is None:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return out

    minors = []
    for rows_idx in combinations(range(q), k):
        for cols_idx in combinations(range(p), k):
            sub = [[shifted[i][j] for j in cols_idx] for i in rows_idx]
            det = bareiss_det(sub, divide=divide)
            if det:
                minors.append(det)
    if not minors:
        return LaurentPoly.zero(variables)
    return multivariate_gcd(minors).normal()


# -- potential-function route --------------------------------------------------------


def _check_even(poly: LaurentPoly, what: str):
    for exps in poly.terms:
        if any(e % 2 for e in exps):
            raise PreconditionError(
                f"{what} must have even exponents in the square-root variables")


def _halve_exponents(poly: LaurentPoly) -> LaurentPoly:
    """Rewrite an even-exponent polynomial in the squares of its variables."""
    return LaurentPoly(
        poly.vars, {tuple(e // 2 for e in exps): c for exps, c in poly.terms.items()})


def _sqrt_values(omega: Character, signs):
    if signs is None:
        signs = (1,) * omega.mu
    if len(signs) != omega.mu:
        raise PreconditionError("one sign per character coordinate required")
    out = []
    if omega.kind == "exact":
        for i in range(omega.mu):
            log = omega.log_exact(i)
            sigma = root_of_unity(2 * log.denominator, log.numerator)
            out.append(sigma if signs[i] > 0 else -sigma)
        zero = out[0].zero_like() if out else Fraction(0)
        return out, zero
    if omega.kind == "numeric":
        for i, v in enumerate(omega.values_complex()):
            sigma = cmath.sqrt(v)
            out.append(sigma if signs[i] > 0 else -sigma)
        return out, 0j
    raise PreconditionError("potential route needs an exact or numeric character")


def conway_slope(nabla_link, nabla_sublink, omega: Character, *, signs=None,
                 tol: float = NUMERIC_TOL) -> SlopeValue:
    """Slope from potential functions of the link and its colored part.

    Both potentials are given in square-root variables: ``s`` for the
    knot and ``s1``..``smu`` for the colors, every exponent even (the
    honest variables are the squares).  The slope is minus the ratio of
    the knot-derivative of the link potential, halved and specialized to
    knot variable 1, against twice the sublink potential, both evaluated
    at chosen square roots of the character; the result does not depend
    on the choice, which the ``signs`` knob exposes for testing.
    """
    if isinstance(nabla_link, RationalFunction):
        if not nabla_link.is_polynomial():
            raise PreconditionError("link potential must be polynomial")
        nabla_link = nabla_link.as_laurent()
    if "s" not in nabla_link.vars:
        raise PreconditionError("link potential must use the knot variable s")
    _check_even(nabla_link, "link potential")
    if isinstance(nabla_sublink, RationalFunction):
        _check_even(nabla_sublink.num, "sublink potential")
        _check_even(nabla_sublink.den, "sublink potential")
    else:
        _check_even(nabla_sublink, "sublink potential")
    expected = tuple(f"s{i}" for i in range(1, omega.mu + 1))
    sub_vars = tuple(nabla_sublink.vars)
    if sub_vars != expected:
        raise PreconditionError(
            f"sublink potential variables {sub_vars} should be {expected}")
    link_vars = tuple(nabla_link.vars)
    if tuple(sorted(link_vars)) != tuple(sorted(("s",) + expected)):
        raise PreconditionError(
            f"link potential variables {link_vars} should be s plus {expected}")

    num = nabla_link.derivative("s")
    num = num.shifted(tuple(-1 if v == "s" else 0 for v in num.vars)) * Fraction(1, 2)
    _check_even(num, "derivative of the link potential")
    num = _halve_exponents(num.restrict("s", 1))
    point, zero = _sqrt_values(omega, signs)
    by_name = dict(zip(expected, point))
    n_val = num.evaluate([by_name[v] for v in num.vars])
    def vanishes(x):
        return abs(x) <= tol if isinstance(x, complex) else not x

    if isinstance(nabla_sublink, RationalFunction):
        d_den = _halve_exponents(nabla_sublink.den).evaluate(point)
        d_num = _halve_exponents(nabla_sublink.num).evaluate(point)
        if vanishes(d_den):
            if vanishes(d_num):
                raise InconclusiveError(
                    "sublink potential is indeterminate at the character")
            return SlopeValue.finite(zero)
        d_val = d_num / d_den
    else:
        d_val = _halve_exponents(nabla_sublink).evaluate(point)
    n_zero = vanishes(n_val)
    d_zero = vanishes(d_val)
    if n_zero and d_zero:
        raise InconclusiveError(
            "both potentials vanish at the character; no ratio to take")
    if d_zero:
        return SlopeValue.infinity()
    return SlopeValue.finite(-n_val / (2 * d_val))
