"""Smoke checks for the clasp-surface module."""
import cmath
from fractions import Fraction

from linkslope.algebra import parse_rational, root_of_unity
from linkslope.characters import Character
from linkslope.errors import PreconditionError
from linkslope.fox import SlopeValue
from linkslope.seifert import (
    CComplexData, a_matrix, e_matrix, signature_nullity,
    slope_c_complex, slope_seifert, validate_realizability,
)

W = ("w",)


def rf(text):
    return parse_rational(text, W)


# A(omega) on a zero matrix is zero
d0 = CComplexData.from_seifert([[0]])
a0 = a_matrix(d0, Character.symbolic(W))
assert all(not x for row in a0 for x in row)

# A(omega) for the n=2 family datum, symbolically
d2 = CComplexData.from_seifert([[1, 0], [1, -1]], kappa=[1, 0])
a2 = a_matrix(d2, Character.symbolic(W))
assert a2[0][0] == rf("1 - w") and a2[0][1] == rf("-w")
assert a2[1][0] == rf("1") and a2[1][1] == rf("w - 1")

# E = A / (1 - omega) for one color
e2 = e_matrix(d2, Character.symbolic(W))
assert e2[0][1] == rf("-w / (1 - w)")

# Hopf band data: positive clasp has E identically [[-1]]
hopf_pos = CComplexData.from_seifert([[-1]])
hopf_neg = CComplexData.from_seifert([[1]])
assert e_matrix(hopf_pos, Character.symbolic(W))[0][0] == rf("-1")
assert signature_nullity(hopf_pos, Character.minus_ones(1)) == (-1, 0)
assert signature_nullity(hopf_neg, Character.minus_ones(1)) == (1, 0)
assert signature_nullity(hopf_pos, Character.numeric([-1.0])) == (-1, 0)

# trefoil Seifert matrix: signature -2 at the primitive cube root
tref = CComplexData.from_seifert([[-1, 1], [0, -1]])
zeta3 = Character.exact(3, [1])
assert signature_nullity(tref, zeta3) == (-2, 0)
w3 = cmath.exp(2j * cmath.pi / 3)
assert signature_nullity(tref, Character.numeric([w3])) == (-2, 0)
# and it is zero near 1: at a 12th root outside the Alexander roots
assert signature_nullity(tref, Character.exact(12, [1]))[0] == 0

# unknot with a disk: empty matrices, zero signature and nullity
disk = CComplexData(1, 0, {"+": []})
assert signature_nullity(disk, Character.minus_ones(1)) == (0, 0)
assert slope_c_complex(disk, Character.minus_ones(1)) == SlopeValue.finite(Fraction(0))

# two-component unlink as two colors: two disks, b0 = 2
unlink = CComplexData(2, 0, {"++": [], "+-": [], "-+": [], "--": []}, b0=2)
assert signature_nullity(unlink, Character.minus_ones(2)) == (0, 1)

# the family theta_n: slope -(w-1)^2 / (a w^2 - b w + a)
def family_theta(n):
    k = n // 2
    if n % 2 == 0:
        return [[k, 0], [1, -1]]
    return [[k + 1, 0], [1, 1]]


for n in range(2, 7):
    a, b = (n + 1) // 2, 2 * (n // 2) + 1
    expected = rf(f"-(w - 1)^2 / ({a}*w^2 - {b}*w + {a})")
    got = slope_seifert(family_theta(n), [1, 0], Character.symbolic(W))
    assert got.is_finite and got.value == expected, (n, got)

# the two slope routes agree on the wrapped datum, exactly and numerically
for n in (2, 3, 5):
    theta = family_theta(n)
    wrapped = CComplexData.from_seifert(theta, kappa=[1, 0])
    for conductor, k in ((3, 1), (5, 2), (7, 3), (8, 1), (12, 5)):
        ch = Character.exact(conductor, [k])
        via_a = slope_seifert(theta, [1, 0], ch)
        via_e = slope_c_complex(wrapped, ch)
        assert via_a == via_e, (n, conductor, k)
        num = slope_c_complex(wrapped, Character.numeric(
            [cmath.exp(2j * cmath.pi * k / conductor)]))
        assert num.close_to(via_a, 1e-9)

# values of the family slope at a point match the symbolic formula
z = root_of_unity(5, 1)
sym = slope_seifert(family_theta(4), [1, 0], Character.symbolic(W))
point_value = sym.value.evaluate([z])
direct = slope_seifert(family_theta(4), [1, 0], Character.exact(5, [1]))
assert direct.value == point_value

# E(omega) is exactly Hermitian at unitary characters
e5 = e_matrix(d2, Character.exact(5, [1]))
for i in range(2):
    for j in range(2):
        assert e5[i][j].conjugate() == e5[j][i]

# mirror datum negates the slope
m2 = d2.mirror()
sv = slope_c_complex(d2, Character.symbolic(W))
svm = slope_c_complex(m2, Character.symbolic(W))
assert svm.value == -sv.value

# two-variable datum padded with a split disk color reproduces one variable
pad = CComplexData(2, 2, {
    "++": [[1, 0], [1, -1]], "+-": [[1, 0], [1, -1]],
    "-+": [[1, 1], [0, -1]], "--": [[1, 1], [0, -1]],
}, kappa=[1, 0], b0=2)
for conductor, ks in ((5, (1, 2)), (7, (2, 3)), (12, (1, 7))):
    ch2 = Character.exact(conductor, list(ks))
    ch1 = Character.exact(conductor, [ks[0]])
    em2 = e_matrix(pad, ch2)
    em1 = e_matrix(d2, ch1)
    assert all(em2[i][j] == em1[i][j] for i in range(2) for j in range(2))
    assert slope_c_complex(pad, ch2) == slope_c_complex(d2, ch1)
    s2, n2 = signature_nullity(pad, ch2)
    s1, n1 = signature_nullity(d2, ch1)
    assert s2 == s1 and n2 == n1 + 1

# l'Hopital failure family: theta = [[0,b],[b+1,c]]
def hopital(b, c):
    return [[0, b], [b + 1, c]]


theta45 = hopital(2, 1)
# generic formula at b=2, c=1, kappa=(1,0)
got = slope_seifert(theta45, [1, 0], Character.symbolic(W))
assert got.value == rf("(w - 1)^2 / ((2*w - 3)*(3*w - 2))")
# kappa = (0,1) kills the numerator
assert slope_seifert(theta45, [0, 1], Character.symbolic(W)) == SlopeValue.finite(
    rf("0"))
wp, wm = Fraction(3, 2), Fraction(2, 3)
kp, km = [5, 1], [0, 1]
# special covectors: slope vanishes away from the two critical points
assert slope_seifert(theta45, kp, [Fraction(7, 5)]) == SlopeValue.finite(Fraction(0))
assert slope_seifert(theta45, km, [Fraction(7, 5)]) == SlopeValue.finite(Fraction(0))
# ... and has no value at them
assert slope_seifert(theta45, kp, [wp]) == SlopeValue.undefined(2)
assert slope_seifert(theta45, kp, [wm]) == SlopeValue.undefined(0)
assert slope_seifert(theta45, km, [wp]) == SlopeValue.undefined(0)
assert slope_seifert(theta45, km, [wm]) == SlopeValue.undefined(2)
# generic covectors blow up at the critical points
assert slope_seifert(theta45, [1, 1], [wp]) == SlopeValue.infinity()
assert slope_seifert(theta45, [1, 1], [wm]) == SlopeValue.infinity()
# zero covector stays finite everywhere, even at the critical points
assert slope_seifert(theta45, [0, 0], [wp]) == SlopeValue.finite(Fraction(0))

# direct sum: zero away from the critical points, infinity exactly at them
double = [[0, 2, 0, 0], [3, 1, 0, 0], [0, 0, 0, 2], [0, 0, 3, 1]]
ksum = [5, 1, 0, 1]
assert slope_seifert(double, ksum, [Fraction(7, 5)]) == SlopeValue.finite(Fraction(0))
assert slope_seifert(double, ksum, [Fraction(-1)]) == SlopeValue.finite(Fraction(0))
assert slope_seifert(double, ksum, [wp]) == SlopeValue.infinity()
assert slope_seifert(double, ksum, [wm]) == SlopeValue.infinity()

# solution choice does not matter when the kernel is paired to zero
block = [[1, 1, 0], [0, 1, 0], [0, 0, 0]]
got = slope_seifert(block, [1, 0, 0], [Fraction(2)])
assert got == SlopeValue.finite(Fraction(-1, 3))

# realizability reports
ok = validate_realizability([[0, 1], [0, 0]])
assert ok["ok"] and ok["r"] == 1 and ok["component_bound"] == 1
bad = validate_realizability([[0, 2], [0, 0]])
assert not bad["ok"] and bad["invariant_factors"] == [2, 2]
for b in (-3, -2, 1, 2, 5):
    assert validate_realizability(hopital(b, 1))["ok"]
try:
    slope_seifert([[0, 2], [0, 0]], [1, 0], [Fraction(2)])
    raised = False
except PreconditionError:
    raised = True
assert raised

# JSON round trip
j = d2.to_json()
assert j == {"mu": 1, "rank": 2, "thetas": {"+": [[1, 0], [1, -1]]},
             "kappa": [1, 0], "b0": 1}
d2b = CComplexData.from_json(j)
assert d2b.thetas == d2.thetas and d2b.kappa == d2.kappa
jp = pad.to_json()
padb = CComplexData.from_json(jp)
assert padb.thetas == pad.thetas and padb.b0 == 2

# malformed data is rejected
for thetas in (
    {"+": [[0, 1], [0, 0]], "-": [[0, 1], [0, 0]]},  # not the transpose
    {"-": [[0, 0], [1, 0]]},                          # missing "+"
):
    try:
        CComplexData(1, 2, thetas)
        raised = False
    except PreconditionError:
        raised = True
    assert raised, thetas

# characters touching 1 or 0 are rejected, as are non-unitary signatures
for ch in (Character.exact(1, [0]), Character.numeric([1.0]), [Fraction(1)]):
    try:
        slope_c_complex(d2, ch)
        raised = False
    except PreconditionError:
        raised = True
    assert raised, ch
try:
    signature_nullity(d2, [Fraction(3, 2)])
    raised = False
except PreconditionError:
    raised = True
assert raised
try:
    signature_nullity(d2, Character.symbolic(W))
    raised = False
except PreconditionError:
    raised = True
assert raised

# cross-route: the Whitehead link via its genus-one surface datum
from linkslope.fox import slope_symbolic, slope_at
from linkslope.diagram import ColoredDiagram


def braid_pd(word, strands, coloring=None):
    cur = list(range(1, strands + 1))
    nxt = strands + 1
    crossings = []
    for s in word:
        k = abs(s)
        u1, u2 = cur[k - 1], cur[k]
        v1, v2 = nxt, nxt + 1
        nxt += 2
        if s > 0:
            crossings.append((u2, v2, v1, u1))
        else:
            crossings.append((u1, u2, v2, v1))
        cur[k - 1], cur[k] = v1, v2
    final = {cur[i]: i + 1 for i in range(strands)}
    crossings = [tuple(final.get(x, x) for x in cr) for cr in crossings]
    used = {x for cr in crossings for x in cr}
    loops = [i + 1 for i in range(strands) if i + 1 not in used]
    return ColoredDiagram(crossings, coloring=coloring, free_loops=loops)


wh = braid_pd([-1, 2, -1, 2, -1], 3, coloring={0: 0, 1: 1})
theta_wh = [[0, 1], [0, 0]]
kappa_wh = [1, -1]
sym_fox = slope_symbolic(wh)
sym_seifert = slope_seifert(theta_wh, kappa_wh, Character.symbolic(("t1",)))
assert sym_fox.value == sym_seifert.value
for ch in (Character.exact(3, [1]), Character.exact(5, [2]), Character.minus_ones(1)):
    assert slope_at(wh, ch) == slope_seifert(theta_wh, kappa_wh, ch), ch

print("seifert smoke: all checks passed")
