"""Smoke checks for the diagram module."""
from fractions import Fraction

from linkslope.diagram import (
    ColoredDiagram, Presentation, parse_pd, parse_word, format_word,
    free_reduce, word_inverse, longitude,
)
from linkslope.errors import ParseError, PreconditionError


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


# words
w = parse_word("a b A")
assert w == (("a", 1), ("b", 1), ("a", -1))
assert format_word(w) == "abA"
assert free_reduce(w + word_inverse(w)) == ()
assert parse_word("abA") == w

# positive Hopf link, knot = component 0
hopf = braid_pd([1, 1], 2, coloring={0: 0, 1: 1})
assert hopf.signs == [1, 1]
assert len(hopf.components) == 2
assert hopf.linking_number(0, 1) == 1
assert hopf.linking_vector() == (1,)
assert hopf.mu == 1

pres = hopf.wirtinger()
assert sorted(pres.generators) == ["x1", "x2"]
assert pres.colors == {"x1": 0, "x2": 1}
assert pres.meridian == (("x1", 1),)
assert pres.longitude == (("x2", 1),)
assert [format_word(r) for r in pres.relators] == ["X1 x2 x1 X2", "X2 x1 x2 X1"]
assert pres.linking_vector() == (1,)
assert pres.variables() == ("t", "t1")
assert pres.phi_exponents("x1") == (1, 0)
assert pres.phi_exponents("x2") == (0, 1)

# trefoil from sigma_1^3
tref = braid_pd([1, 1, 1], 2, coloring={0: 0})
assert len(tref.components) == 1
assert tref.signs == [1, 1, 1]
assert tref.self_writhe(0) == 3
tp = tref.wirtinger()
assert len(tp.generators) == 3
lon = tp.phi_word(tp.longitude)
(exps, coeff), = lon.terms.items()
assert exps == (0,) and coeff == 1, (exps, coeff)
tps = tp.tietze_simplify()
assert len(tps.generators) == 2 and len(tps.relators) == 1
lon2 = tps.phi_word(tps.longitude)
assert list(lon2.terms) == [(0,)]
assert tps.meridian is not None

# parse_pd text round trip
text = "PD[X(2,4,3,1), X(4,2,1,3)] colors{K: 1; 1: 2}"
h2 = parse_pd(text)
assert h2.coloring == {0: 0, 1: 1}
assert h2.linking_vector() == (1,)
j = h2.to_json()
h3 = parse_pd(__import__("json").dumps(j))
assert h3.coloring == h2.coloring and h3.crossings == h2.crossings

# free loop parsing
d = parse_pd("PD[X(2,4,3,1), X(4,2,1,3), O(9)] colors{K: 1; 1: 2, 3}")
assert d.free_loops == [9]
assert d.mu == 1 and len(d.components_of_color(1)) == 2

# mirror flips all signs and the linking number
hm = hopf.mirror()
assert hm.signs == [-1, -1]
assert hm.linking_vector() == (-1,)

# component reversal flips linking too
hr = hopf.reverse_component(1)
assert hr.linking_vector() == (-1,)
hrr = hr.reverse_component(1)
assert hrr.linking_vector() == (1,)

# deletion leaves a crossingless unknot
du = hopf.delete_color(1)
assert du.crossings == [] and len(du.free_loops) == 1
assert du.coloring == {0: 0} and du.mu == 0

# deleting the knot from the trefoil-with-meridian style diagram
wh = braid_pd([1, -1, 1, -1], 2, coloring={0: 0, 1: 1})  # 2-braid commutator: unlink-ish
assert wh.linking_vector() == (0,)

# L4a1 = closure of sigma_1^4, lk = 2
l4a1 = braid_pd([1, 1, 1, 1], 2, coloring={0: 0, 1: 1})
assert len(l4a1.components) == 2
assert l4a1.linking_vector() == (2,)
p4 = l4a1.wirtinger(simplify=True)
assert len(p4.generators) == 2
assert p4.linking_vector() == (2,)

# longitude helper matches the wirtinger longitude
assert longitude(hopf, 0) == hopf.wirtinger().longitude

# unresolved-over fallback: an unknot lying entirely over a free loop cannot
# happen, but a split over-only circle can via deletion artifacts; instead
# check contradiction detection
try:
    ColoredDiagram([(1, 2, 1, 2)], coloring={0: 0})
    bad = False
except ParseError:
    bad = True
except PreconditionError:
    bad = True
assert bad

# presentation JSON round trip with abelianization solving
pj = Presentation.from_json({
    "generators": ["a", "b", "c"],
    "relators": ["a b A B", "c B"],
    "colors": {"a": 0, "b": 1},
    "meridian": "a",
    "longitude": "b",
})
assert pj.phi_exponents("c") == (0, 1)
assert pj.linking_vector() == (1,)
pjs = pj.tietze_simplify()
assert "c" not in pjs.generators

# underdetermined abelianization must fail loudly
try:
    Presentation(["a", "b"], ["a b A B"], {"a": 0}).phi("b")
    bad = False
except PreconditionError:
    bad = True
assert bad

print("diagram smoke: all checks passed")
