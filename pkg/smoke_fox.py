"""Smoke checks for the fox module."""
from fractions import Fraction

from linkslope.algebra import (
    LaurentPoly, RationalFunction, parse_poly, parse_rational, root_of_unity,
)
from linkslope.characters import Character
from linkslope.diagram import ColoredDiagram, Presentation
from linkslope.errors import InconclusiveError, PreconditionError
from linkslope.fox import (
    SlopeValue, alexander_order, check_fox_identity, conway_slope,
    fox_matrix, nullity_at, slope_at, slope_symbolic,
)


def braid_pd(word, strands, coloring=None):
    cur = list(range(1, strands + 1))
    nxt = strands + 1
    crossings = []
    for s in word:
        k = abs(s)
        u1, u2 = cur[k - 1], cur[k]
        v1, v2 = nxt, nxt + 1
        nxt += 2
        crossings.append((u2, v2, v1, u1) if s > 0 else (u1, u2, v2, v1))
        cur[k - 1], cur[k] = v1, v2
    final = {cur[i]: i + 1 for i in range(strands)}
    crossings = [tuple(final.get(x, x) for x in cr) for cr in crossings]
    used = {x for cr in crossings for x in cr}
    loops = [i + 1 for i in range(strands) if i + 1 not in used]
    return ColoredDiagram(crossings, coloring=coloring, free_loops=loops)


hopf = braid_pd([1, 1], 2, coloring={0: 0, 1: 1})
tref = braid_pd([1, 1, 1], 2, coloring={0: 0})
wh = braid_pd([-1, 2, -1, 2, -1], 3)

# -- whitehead candidate sanity
assert len(wh.components) == 2, wh.components
wh = braid_pd([-1, 2, -1, 2, -1], 3, coloring={0: 0, 1: 1})
assert wh.linking_vector() == (0,), wh.linking_vector()

# -- fox identity on all wirtinger relators
for d in (hopf, tref, wh):
    pres = d.wirtinger()
    for r in pres.relators:
        assert check_fox_identity(pres, r)
    assert check_fox_identity(pres, pres.meridian)
    assert check_fox_identity(pres, pres.longitude)

# -- alexander orders
one_t = LaurentPoly.one(("t",))
assert alexander_order(tref).unit_equal(parse_poly("1 - t + t^2", ("t",)))
unknot = braid_pd([], 1, coloring={0: 0})
assert alexander_order(unknot) == LaurentPoly.one(("t",))
assert alexander_order(hopf).unit_equal(LaurentPoly.one(("t", "t1")))
whp = alexander_order(wh)
assert whp.unit_equal(parse_poly("(t - 1)*(t1 - 1)", ("t", "t1"))), whp

unlink2 = braid_pd([], 2, coloring={0: 1, 1: 2})
assert alexander_order(unlink2) == LaurentPoly.zero(("t1", "t2"))
assert alexander_order(unlink2, 1) == LaurentPoly.one(("t1", "t2"))

# -- nullity
hopf12 = braid_pd([1, 1], 2, coloring={0: 1, 1: 2})
assert nullity_at(hopf12, Character.exact(2, [1, 1])) == 0
assert nullity_at(unlink2, Character.exact(2, [1, 1])) == 1
assert nullity_at(unknot, Character.exact(2, [1])) == 0
# patching: trivial on one color of the 2-unlink leaves an unknot
assert nullity_at(unlink2, Character.exact(2, [0, 1])) == 0
# numeric route agrees
assert nullity_at(hopf12, Character.numeric([-1.0, -1.0])) == 0

# -- slope: whitehead symbolic
sv = slope_symbolic(wh)
assert sv.is_finite
target = parse_rational("(1 - t1)*(1 - t1^-1)", ("t1",))
assert sv.value == target, (str(sv.value), str(target))

# slope at exact characters, both tietze settings
w3 = Character.exact(3, [1])
s3 = slope_at(wh, w3)
assert s3.is_finite and s3.value == Fraction(3), s3
s3_raw = slope_at(wh, w3, simplify=False)
assert s3_raw == s3
w5 = Character.exact(5, [2])
z = root_of_unity(5, 2)
expect = (z.one_like() - z) * (z.one_like() - z ** -1)
s5 = slope_at(wh, w5)
assert s5.is_finite and s5.value == expect, (s5, expect)

# numeric agreement
import cmath
wnum = Character.numeric([cmath.exp(2j * cmath.pi / 5) ** 2])
snum = slope_at(wh, wnum)
assert snum.is_finite and abs(snum.value - expect.to_complex()) < 1e-9

# hopf: only admissible exact characters are trivial ones; patching gives unknot
assert slope_at(hopf, Character.exact(1, [0])) == SlopeValue.finite(Fraction(0))
try:
    slope_at(hopf, Character.exact(3, [1]))
    bad = False
except PreconditionError:
    bad = True
assert bad

# unknot with a meridian: slope of the unknot alone is 0
assert slope_at(unknot, Character.exact(1, [])) == SlopeValue.finite(Fraction(0))

# presentation-only input refuses patching
pres_hopf = hopf.wirtinger()
try:
    slope_at(pres_hopf, Character.exact(1, [0]))
    bad = False
except PreconditionError:
    bad = True
assert bad

# -- conway route on the whitehead data
nabla_wh = parse_poly("(s^2 - s^-2)*(s1^2 - s1^-2)", ("s", "s1"))
nabla_unknot = parse_rational("1 / (s1^2 - s1^-2)", ("s1",))
c3 = conway_slope(nabla_wh, nabla_unknot, w3)
assert c3.is_finite and c3.value == Fraction(3), c3
c5 = conway_slope(nabla_wh, nabla_unknot, w5)
assert c5.is_finite and c5.value == expect, (c5.value, expect)
for signs in [(1,), (-1,)]:
    cs = conway_slope(nabla_wh, nabla_unknot, w5, signs=signs)
    assert cs.value == expect
cnum = conway_slope(nabla_wh, nabla_unknot, wnum)
assert abs(cnum.value - expect.to_complex()) < 1e-9

# inconclusive when both potentials vanish identically at the character
zero_link = LaurentPoly.zero(("s", "s1"))
zero_sub = LaurentPoly.zero(("s1",))
try:
    conway_slope(zero_link, zero_sub, w3)
    bad = False
except InconclusiveError:
    bad = True
assert bad

# odd exponents rejected
try:
    conway_slope(parse_poly("s*s1", ("s", "s1")), zero_sub, w3)
    bad = False
except PreconditionError:
    bad = True
assert bad

# -- mirror flips the slope sign
whm = wh.mirror()
svm = slope_symbolic(whm)
assert svm.value == -sv.value, (str(svm.value), str(sv.value))

# reversing the colored component inverts the character coordinate; for the
# symmetric whitehead value nothing changes
whr = wh.reverse_component(1)
assert slope_symbolic(whr).value == sv.value

# -- SlopeValue json
j = slope_at(wh, w3).as_json()
assert j["kind"] == "finite" and j["value"] == "3"
assert SlopeValue.undefined(2).as_json() == {"kind": "undefined", "kernel_dim": 2}

print("fox smoke: all checks passed")
