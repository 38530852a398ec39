"""Scratch verification for the splice assembler."""

from fractions import Fraction
import itertools

from linkslope.algebra import root_of_unity
from linkslope.characters import Character, defect
from linkslope.errors import ParseError, PreconditionError
from linkslope.fox import SlopeValue
from linkslope.splice import (
    ExtendedReal, delta_sigma, hyperbola_region, parse_extended, reciprocal,
    sg, splice_sigma_admissible, splice_sigma_generic,
)

F = Fraction
fin = ExtendedReal.finite
PROJ = ExtendedReal.projective()
PINF = ExtendedReal.plus_infinity()
MINF = ExtendedReal.minus_infinity()

# -- sg ------------------------------------------------------------------------
assert sg(fin(0)) == 0
assert sg(PROJ) == 0
assert sg(F(-3, 2)) == -1
assert sg(7) == 1
assert sg(PINF) == 1
assert sg(MINF) == -1
assert sg(fin(-0.25)) == -1
assert sg(fin(0.0)) == 0

# -- reciprocal ----------------------------------------------------------------
assert reciprocal(0) == PROJ
assert reciprocal(PROJ) == fin(0)
assert reciprocal(PINF) == fin(0)
assert reciprocal(MINF) == fin(0)
assert reciprocal(F(2, 3)) == F(3, 2)
assert reciprocal(fin(-4.0)) == fin(-0.25)

# -- delta_sigma frozen oracles ------------------------------------------------
assert delta_sigma(0, 0) == 0
assert delta_sigma(PROJ, PROJ) == 1
assert delta_sigma(1, 1) == 1

# constant zero on {0} x finite
for x in [F(p, q) for p in range(-12, 13) for q in (1, 2, 3)]:
    assert delta_sigma(0, x) == 0

# range over ~10^4 extended pairs including every infinity flavor
grid = [fin(F(p, q)) for p in range(-10, 11) for q in (1, 2, 3, 4)]
grid += [PROJ, PINF, MINF]
seen = set()
for a, b in itertools.product(grid, repeat=2):
    v = delta_sigma(a, b)
    assert v in (-2, -1, 0, 1, 2), (a, b, v)
    seen.add(v)
assert seen == {-2, -1, 0, 1, 2}

# mirror anti-symmetry on finite pairs (projective infinity is the
# degenerate set: the subtraction convention orients it)
for a, b in itertools.product([fin(F(p, 3)) for p in range(-9, 10)], repeat=2):
    assert delta_sigma(-a, -b) == -delta_sigma(a, b), (a, b)

# a couple of spot values computed by hand
assert delta_sigma(1, PROJ) == 2      # 1 - sg(1 - inf) = 1 - (-1)
assert delta_sigma(-1, PROJ) == 0     # -1 - sg(-1 - inf) = -1 + 1
assert delta_sigma(2, F(1, 2)) == 1   # 1 - sg(0)
assert delta_sigma(F(1, 2), 3) == 2   # 1 - sg(-1)
assert delta_sigma(-2, -3) == -2      # -1 - sg(-1/2 + 3) = -1 - 1

# -- hyperbola regions ----------------------------------------------------------
assert hyperbola_region(1, 1) == "on"
assert hyperbola_region(2, F(1, 2)) == "on"
assert hyperbola_region(-1, -1) == "on"
assert hyperbola_region(0, 0) == "less"
assert hyperbola_region(2, -3) == "less"
assert hyperbola_region(2, 3) == "greater"
assert hyperbola_region(PROJ, 5) == "indeterminate"
assert hyperbola_region(0, PROJ) == "indeterminate"
assert hyperbola_region(PINF, 5) == "greater"
assert hyperbola_region(PINF, -5) == "less"
assert hyperbola_region(MINF, MINF) == "greater"
assert hyperbola_region(PINF, fin(0)) == "indeterminate"

# -- conversions ----------------------------------------------------------------
assert ExtendedReal.from_slope(SlopeValue.finite(F(5, 3))) == F(5, 3)
assert ExtendedReal.from_slope(SlopeValue.infinity()) == PROJ
z3 = root_of_unity(3)
real_cyc = 2 - z3 - z3 ** 2        # equals 3
assert ExtendedReal.from_slope(SlopeValue.finite(real_cyc)) == F(3)
try:
    ExtendedReal.from_slope(SlopeValue.finite(z3))
    raise AssertionError("nonreal slope accepted")
except PreconditionError:
    pass
try:
    ExtendedReal.from_slope(SlopeValue.undefined(2))
    raise AssertionError("undefined slope accepted")
except PreconditionError:
    pass
assert parse_extended("2/3") == F(2, 3)
assert parse_extended("-1.5") == fin(-1.5)
assert parse_extended("inf") == PROJ
assert parse_extended("+inf") == PINF
assert parse_extended("-inf") == MINF
try:
    parse_extended("banana")
    raise AssertionError("junk parsed")
except ParseError:
    pass
assert str(fin(F(2, 3))) == "2/3"
assert str(PROJ) == "inf"
assert fin(F(2, 3)).as_json() == "2/3"

# -- generic splice assembler ----------------------------------------------------
w_plus = Character.exact(3, (2, 2))    # defect via (1,1): +1
w_minus = Character.exact(3, (1, 1))   # defect via (1,1): -1
lam = (1, 1)
assert defect(lam, w_plus) == 1
assert defect(lam, w_minus) == -1
sigma, nullity = splice_sigma_generic(2, -1, 0, 3, lam, lam, w_plus, w_minus)
assert sigma == 0            # 2 - 1 + (1)(-1)
assert nullity == 3

# one vanishing defect makes the correction vanish
w_zero = Character.exact(5, (1, 4))    # omega^lambda = 1, defect 0
assert defect(lam, w_zero) == 0
sigma, nullity = splice_sigma_generic(4, 1, 2, 0, lam, lam, w_zero, w_minus)
assert sigma == 5 and nullity == 2

# both admissible: wrong theorem
try:
    splice_sigma_generic(0, 0, 0, 0, (0,), (0,), Character.exact(3, (1,)),
                         Character.exact(3, (2,)))
    raise AssertionError("doubly admissible pair accepted")
except PreconditionError as exc:
    assert "splice_sigma_admissible" in str(exc)
try:
    splice_sigma_generic(0, 0, 0, 0, lam, lam, w_zero, w_zero)
    raise AssertionError("doubly admissible pair accepted")
except PreconditionError:
    pass

# -- admissible splice assembler ---------------------------------------------------
sigma, report = splice_sigma_admissible(1, 1, 0, 1, 2, -1, 0, 0)
assert sigma == 0            # 1 + 1 - 2 + delta_sigma(0,0)
assert report["status"] == "pending"
assert report["region"] == "less"
assert report["delta_sigma"] == 0
assert report["nullity_bounds"] == [-1, 3]
assert not any(isinstance(v, int) and k == "delta_n" for k, v in report.items())

sigma, report = splice_sigma_admissible(0, 0, 0, 0, 0, 0, 1, 1)
assert sigma == 1 and report["region"] == "on"

sigma, report = splice_sigma_admissible(3, -2, 1, 1, 1, 1, PROJ, PROJ)
assert sigma == 3 - 2 + 1 + 1 and report["region"] == "indeterminate"

print("smoke_splice: all checks passed")
