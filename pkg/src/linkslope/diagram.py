"""Colored link diagrams and group presentations.

A diagram is ingested as a PD code: each crossing is a 4-tuple of arc
labels listed counterclockwise starting from the incoming under-strand.
Orientations are not part of the input; they are inferred by constraint
propagation (every arc must flow in at one end and out at the other, and
the two over-slots of a crossing are one-in one-out).  Crossing signs are
then stored explicitly: a crossing is positive when its over-strand runs
from the fourth slot to the second.

On top of diagrams sit Wirtinger presentations, the distinguished
meridian/longitude pair of the knot component, pairwise linking numbers,
and the component surgeries (mirror image, component reversal, component
deletion) needed by the symmetry properties and by character patching.

Presentations also stand alone: generators, relators as words (strings
such as ``"a b A"``, a capitalized token being an inverse), a color per
meridian generator, and optional meridian/longitude words.  Uncolored
generators get their abelianized images solved from the relators.
"""

from __future__ import annotations

import json
import re
from collections import deque
from fractions import Fraction

from .algebra import LaurentPoly, matrix_rank, solve_system
from .errors import ParseError, PreconditionError

__all__ = [
    "Word",
    "parse_word",
    "format_word",
    "word_inverse",
    "free_reduce",
    "Presentation",
    "ColoredDiagram",
    "parse_pd",
    "wirtinger",
    "longitude",
    "linking_number",
]

Word = tuple  # tuple[tuple[str, int], ...]


# -- words -----------------------------------------------------------------


def parse_word(text: str) -> Word:
    """Parse ``"a b A"`` or compact ``"abA"``; capitals are inverses."""
    text = text.strip()
    if not text:
        return ()
    tokens = text.split() if any(ch.isspace() for ch in text) else list(text)
    out = []
    for tok in tokens:
        if not (tok[0].isalpha()):
            raise ParseError(f"bad word token {tok!r}")
        if tok[0].isupper():
            out.append((tok[0].lower() + tok[1:], -1))
        else:
            out.append((tok, 1))
    return tuple(out)


def format_word(w: Word) -> str:
    if not w:
        return ""
    toks = [(g[0].upper() + g[1:]) if e < 0 else g for g, e in w]
    if all(len(t) == 1 for t in toks):
        return "".join(toks)
    return " ".join(toks)


def word_inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def free_reduce(w: Word) -> Word:
    out: list = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = free_reduce(w[1:-1])
    return w


def substitute_word(w: Word, g: str, replacement: Word) -> Word:
    rep_inv = word_inverse(replacement)
    out: list = []
    for gen, e in w:
        if gen == g:
            out.extend(replacement if e > 0 else rep_inv)
        else:
            out.append((gen, e))
    return free_reduce(tuple(out))


def _word_letters(w: Word):
    return {g for g, _ in w}


def _cyclic_canonical(w: Word) -> Word:
    """Least rotation of a cyclic word or its inverse; relator identity key."""
    w = cyclic_reduce(w)
    if not w:
        return ()
    best = None
    for cand in (w, word_inverse(w)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best


# -- presentations ----------------------------------------------------------


class Presentation:
    """A finite presentation of a colored link group.

    colors maps a generator to its color (0 marks the distinguished knot);
    generators without a color get their abelianized image solved from the
    relators.  meridian/longitude, when present, are words based at a
    common point on the knot's boundary torus.
    """

    def __init__(self, generators, relators, colors, meridian=None, longitude=None):
        self.generators = tuple(generators)
        self.relators = tuple(self._as_word(r) for r in relators)
        self.colors = dict(colors)
        self.meridian = self._as_word(meridian) if meridian is not None else None
        self.longitude = self._as_word(longitude) if longitude is not None else None
        self._validate_basic()
        self._phi = None

    @staticmethod
    def _as_word(w) -> Word:
        if isinstance(w, str):
            return parse_word(w)
        return tuple((g, int(e)) for g, e in w)

    def _validate_basic(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ParseError("duplicate generator names")
        for g in self.colors:
            if g not in gens:
                raise ParseError(f"colored generator {g!r} is not a generator")
        words = list(self.relators)
        if self.meridian is not None:
            words.append(self.meridian)
        if self.longitude is not None:
            words.append(self.longitude)
        for w in words:
            for g, e in w:
                if g not in gens:
                    raise ParseError(f"unknown generator {g!r} in word")
                if e not in (1, -1):
                    raise ParseError("word letters must have exponent +-1")
        colors = set(self.colors.values())
        if colors and colors != {0}:
            expected = set(range(1, max(colors) + 1)) | ({0} if 0 in colors else set())
            if colors != expected:
                raise ParseError(f"colors {sorted(colors)} are not contiguous")

    # -- color bookkeeping ---------------------------------------------------

    @property
    def color_list(self) -> list:
        return sorted(set(self.colors.values()))

    @property
    def mu(self) -> int:
        return len([c for c in self.color_list if c != 0])

    @property
    def has_knot(self) -> bool:
        return 0 in self.colors.values()

    def variables(self) -> tuple:
        names = []
        for c in self.color_list:
            names.append("t" if c == 0 else f"t{c}")
        return tuple(names)

    # -- abelianization --------------------------------------------------------

    def phi(self, gen: str) -> LaurentPoly:
        """The image of a generator in the group ring of the color lattice."""
        if self._phi is None:
            self._phi = self._solve_abelianization()
        return self._phi[gen]

    def phi_word(self, w: Word) -> LaurentPoly:
        value = LaurentPoly.one(self.variables())
        for g, e in w:
            p = self.phi(g)
            value = value * (p if e > 0 else p ** -1)
        return value

    def phi_exponents(self, gen: str) -> tuple:
        """Exponent vector of phi(gen) over variables()."""
        p = self.phi(gen)
        (exps, _), = p.terms.items()
        return exps

    def _solve_abelianization(self) -> dict:
        variables = self.variables()
        color_list = self.color_list
        if not variables:
            raise PreconditionError("presentation has no colored generator")
        dim = len(variables)
        col_index = {c: i for i, c in enumerate(color_list)}
        known: dict = {}
        for g, c in self.colors.items():
            v = [0] * dim
            v[col_index[c]] = 1
            known[g] = tuple(v)
        unknown = [g for g in self.generators if g not in known]
        if unknown:
            rows = []
            rhs_cols = [[] for _ in range(dim)]
            for r in self.relators:
                counts = {}
                for g, e in r:
                    counts[g] = counts.get(g, 0) + e
                if not any(counts.get(g) for g in unknown):
                    continue
                rows.append([Fraction(counts.get(g, 0)) for g in unknown])
                base = [0] * dim
                for g, c in counts.items():
                    if g in known and c:
                        for i, v in enumerate(known[g]):
                            base[i] += c * v
                for i in range(dim):
                    rhs_cols[i].append(Fraction(-base[i]))
            if not rows:
                raise PreconditionError(
                    f"generators {unknown} have no color and no relator pins them")
            if matrix_rank(rows) < len(unknown):
                raise PreconditionError(
                    f"abelianized images of {unknown} are underdetermined; color them")
            vecs = {g: [0] * dim for g in unknown}
            for i in range(dim):
                sol = solve_system(rows, rhs_cols[i])
                if sol is None:
                    raise PreconditionError("inconsistent abelianized relators")
                for j, g in enumerate(unknown):
                    if sol[j].denominator != 1:
                        raise PreconditionError(
                            f"abelianized image of {g!r} is not integral")
                    vecs[g][i] = int(sol[j])
            for g, v in vecs.items():
                known[g] = tuple(v)
        out = {}
        for g in self.generators:
            out[g] = LaurentPoly.monomial(variables, known[g], 1)
        # with everything pinned, every relator must abelianize to zero
        for r in self.relators:
            total = [0] * dim
            for g, e in r:
                (exps, _), = out[g].terms.items()
                for i, v in enumerate(exps):
                    total[i] += e * v
            if any(total):
                raise PreconditionError(
                    f"relator {format_word(r)!r} does not abelianize to zero")
        return out

    def linking_vector(self) -> tuple:
        """lambda_i = lk(K, color i), read off the longitude's image.

        Needs the distinguished longitude; its K-exponent must vanish
        (Seifert longitude) and is checked.
        """
        if self.longitude is None:
            raise PreconditionError("presentation has no distinguished longitude")
        variables = self.variables()
        p = self.phi_word(self.longitude)
        (exps, _), = p.terms.items()
        lam = []
        for name, e in zip(variables, exps):
            if name == "t":
                if e:
                    raise PreconditionError(
                        "longitude has nonzero self-linking exponent; not a Seifert longitude")
            else:
                lam.append(e)
        return tuple(lam)

    # -- Tietze cleanup ----------------------------------------------------------

    def tietze_simplify(self, max_passes: int = 200) -> "Presentation":
        """Eliminate generators that some relator expresses in the others.

        Each pass finds a relator containing a generator exactly once and
        substitutes it away, rewriting the other relators and the
        meridian/longitude words.  The last generator of each color is kept
        so the coloring stays surjective.
        """
        gens = list(self.generators)
        relators = [cyclic_reduce(r) for r in self.relators]
        colors = dict(self.colors)
        meridian = self.meridian
        longitude = self.longitude
        for _ in range(max_passes):
            relators = [cyclic_reduce(r) for r in relators if cyclic_reduce(r)]
            seen = set()
            deduped = []
            for r in relators:
                key = _cyclic_canonical(r)
                if key not in seen:
                    seen.add(key)
                    deduped.append(r)
            relators = deduped
            target = None
            for ri, r in enumerate(relators):
                counts = {}
                for g, _ in r:
                    counts[g] = counts.get(g, 0) + 1
                for pos, (g, e) in enumerate(r):
                    if counts[g] != 1:
                        continue
                    if g in colors and sum(1 for h in gens if colors.get(h) == colors[g]) == 1:
                        continue
                    target = (ri, pos, g, e)
                    break
                if target:
                    break
            if not target:
                break
            ri, pos, g, e = target
            r = relators[ri]
            before, after = r[:pos], r[pos + 1:]
            # 1 = before g^e after  =>  g^e = before^-1 after^-1
            rep = free_reduce(word_inverse(before) + word_inverse(after))
            if e < 0:
                rep = word_inverse(rep)
            relators = [substitute_word(w, g, rep) for i, w in enumerate(relators) if i != ri]
            if meridian is not None:
                meridian = substitute_word(meridian, g, rep)
            if longitude is not None:
                longitude = substitute_word(longitude, g, rep)
            gens.remove(g)
            colors.pop(g, None)
        out = Presentation(gens, relators, colors, meridian, longitude)
        return out

    # -- serialization -------------------------------------------------------------

    @classmethod
    def from_json(cls, obj) -> "Presentation":
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as err:
                raise ParseError(f"bad presentation JSON: {err}") from None
        try:
            gens = list(obj["generators"])
            relators = list(obj["relators"])
        except (KeyError, TypeError) as err:
            raise ParseError(f"presentation JSON needs generators/relators: {err}") from None
        colors = {g: int(c) for g, c in obj.get("colors", {}).items()}
        return cls(gens, relators, colors, obj.get("meridian"), obj.get("longitude"))

    def to_json(self) -> dict:
        out = {
            "generators": list(self.generators),
            "relators": [format_word(r) for r in self.relators],
            "colors": dict(self.colors),
        }
        if self.meridian is not None:
            out["meridian"] = format_word(self.meridian)
        if self.longitude is not None:
            out["longitude"] = format_word(self.longitude)
        return out

    def __repr__(self):
        rel = "; ".join(format_word(r) for r in self.relators)
        return f"Presentation<{', '.join(self.generators)} | {rel}>"


# -- diagrams ----------------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[x] = p
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx


class ColoredDiagram:
    """A PD-coded diagram with resolved orientations and coloring.

    crossings: list of (a, b, c, d) arc-label tuples; free_loops: labels of
    crossingless circles; coloring: component index (0-based, components
    ordered by least arc label) -> color, with 0 marking the knot K.
    """

    def __init__(self, crossings, coloring=None, free_loops=()):
        self.crossings = [tuple(int(x) for x in cr) for cr in crossings]
        self.free_loops = sorted(int(x) for x in free_loops)
        for cr in self.crossings:
            if len(cr) != 4:
                raise ParseError(f"crossing {cr} does not have 4 arc labels")
        self._resolve()
        ncomp = len(self.components)
        if coloring is None:
            coloring = {i: i + 1 for i in range(ncomp)}
        self.coloring = {int(k): int(v) for k, v in coloring.items()}
        self._validate_coloring()

    # -- construction internals ------------------------------------------------

    def _resolve(self):
        occurrences: dict = {}
        for ci, cr in enumerate(self.crossings):
            for slot, e in enumerate(cr):
                occurrences.setdefault(e, []).append((ci, slot))
        for e, occ in occurrences.items():
            if len(occ) != 2:
                raise ParseError(f"arc {e} appears {len(occ)} times; expected 2")
        for l in self.free_loops:
            if l in occurrences:
                raise ParseError(f"free loop label {l} collides with an arc")
        direction: dict = {}
        queue: deque = deque()

        def set_dir(ci, slot, val):
            key = (ci, slot)
            if key in direction:
                if direction[key] != val:
                    raise ParseError(
                        f"inconsistent strand orientation at crossing {ci}")
                return
            direction[key] = val
            queue.append(key)

        for ci in range(len(self.crossings)):
            set_dir(ci, 0, "in")
            set_dir(ci, 2, "out")

        def flip(v):
            return "out" if v == "in" else "in"

        def propagate():
            while queue:
                ci, slot = queue.popleft()
                val = direction[(ci, slot)]
                e = self.crossings[ci][slot]
                for other in occurrences[e]:
                    if other != (ci, slot):
                        set_dir(*other, flip(val))
                if slot == 1:
                    set_dir(ci, 3, flip(val))
                elif slot == 3:
                    set_dir(ci, 1, flip(val))

        propagate()
        for ci in range(len(self.crossings)):
            if (ci, 3) not in direction:
                # over-only strand with no anchor: orient its over-pass d -> b
                set_dir(ci, 3, "in")
                propagate()
        self._direction = direction
        self.signs = [1 if direction[(ci, 3)] == "in" else -1
                      for ci in range(len(self.crossings))]
        uf = _UnionFind()
        for a, b, c, d in self.crossings:
            uf.union(a, c)
            uf.union(b, d)
        for l in self.free_loops:
            uf.find(l)
        groups: dict = {}
        for e in list(uf.parent):
            groups.setdefault(uf.find(e), []).append(e)
        self.components = [sorted(groups[r]) for r in sorted(groups)]
        self._comp_of = {}
        for i, comp in enumerate(self.components):
            for e in comp:
                self._comp_of[e] = i

    def _validate_coloring(self):
        ncomp = len(self.components)
        if set(self.coloring) != set(range(ncomp)):
            raise ParseError(
                f"coloring must assign each of the {ncomp} components a color")
        values = set(self.coloring.values())
        expected = set(range(1, max([v for v in values if v != 0], default=0) + 1))
        if 0 in values:
            if sum(1 for v in self.coloring.values() if v == 0) > 1:
                raise ParseError("at most one component may carry the knot color 0")
            expected.add(0)
        if values != expected:
            raise ParseError(f"colors {sorted(values)} are not contiguous")

    # -- views -----------------------------------------------------------------

    @property
    def mu(self) -> int:
        return len([c for c in set(self.coloring.values()) if c != 0])

    @property
    def knot_component(self):
        for comp, color in self.coloring.items():
            if color == 0:
                return comp
        return None

    def component_of_arc(self, arc: int) -> int:
        return self._comp_of[arc]

    def components_of_color(self, color: int) -> list:
        return [i for i, c in sorted(self.coloring.items()) if c == color]

    def comp_of_crossing(self, ci: int):
        a, b, c, d = self.crossings[ci]
        return self._comp_of[a], self._comp_of[b]

    # -- numerical invariants ----------------------------------------------------

    def linking_number(self, c1: int, c2: int) -> int:
        """lk of two components: half the signed inter-component crossing count."""
        if c1 == c2:
            raise PreconditionError("linking number needs two distinct components")
        total = 0
        for ci in range(len(self.crossings)):
            uc, oc = self.comp_of_crossing(ci)
            if {uc, oc} == {c1, c2}:
                total += self.signs[ci]
        if total % 2:
            raise PreconditionError("odd inter-component crossing sum; broken diagram")
        return total // 2

    def self_writhe(self, comp: int) -> int:
        total = 0
        for ci in range(len(self.crossings)):
            uc, oc = self.comp_of_crossing(ci)
            if uc == comp and oc == comp:
                total += self.signs[ci]
        return total

    def linking_vector(self) -> tuple:
        """lk(K, color i) for i = 1..mu; needs the knot component."""
        k = self.knot_component
        if k is None:
            raise PreconditionError("diagram has no component colored 0")
        out = []
        for color in range(1, self.mu + 1):
            total = 0
            for comp in self.components_of_color(color):
                total += self.linking_number(k, comp)
            out.append(total)
        return tuple(out)

    # -- Wirtinger machinery -------------------------------------------------------

    def _overclasses(self):
        uf = _UnionFind()
        for a, b, c, d in self.crossings:
            uf.union(b, d)
        for a, b, c, d in self.crossings:
            uf.find(a), uf.find(c)
        for l in self.free_loops:
            uf.find(l)
        return uf

    def _gen_name(self, uf, arc):
        return f"x{uf.find(arc)}"

    def wirtinger(self, simplify: bool = False) -> Presentation:
        """One generator per over-arc, one conjugation relator per crossing."""
        uf = self._overclasses()
        reps = sorted({uf.find(e) for comp in self.components for e in comp})
        gens = [f"x{r}" for r in reps]
        colors = {f"x{r}": self.coloring[self._comp_of[r]] for r in reps}
        relators = []
        for ci, (a, b, c, d) in enumerate(self.crossings):
            s = self.signs[ci]
            o = self._gen_name(uf, b)
            u = self._gen_name(uf, a)
            v = self._gen_name(uf, c)
            # outgoing under-arc = over-meridian conjugate of the incoming one
            relators.append(free_reduce(((o, -s), (u, 1), (o, s), (v, -1))))
        meridian = longitude = None
        k = self.knot_component
        if k is not None:
            m_arc = min(self.components[k])
            meridian = ((self._gen_name(uf, m_arc), 1),)
            longitude = self._longitude_word(k, uf, m_arc)
        pres = Presentation(gens, relators, colors, meridian, longitude)
        if simplify:
            pres = pres.tietze_simplify()
        return pres

    def _walk(self, comp: int, start: int):
        """Yield (crossing, kind) events along a component from a start arc."""
        heads = {}
        for ci, cr in enumerate(self.crossings):
            for slot, e in enumerate(cr):
                if self._direction[(ci, slot)] == "in":
                    heads.setdefault(e, []).append((ci, slot))
        edge = start
        while True:
            ends = heads.get(edge, [])
            if not ends:
                return  # crossingless circle
            ci, slot = ends[0]
            if slot == 0:
                yield ci, "under"
                edge = self.crossings[ci][2]
            elif slot == 1:
                edge = self.crossings[ci][3]
            else:
                edge = self.crossings[ci][1]
            if edge == start:
                return

    def _longitude_word(self, comp: int, uf, start_arc: int) -> Word:
        letters = []
        for ci, kind in self._walk(comp, start_arc):
            if kind != "under":
                continue
            b = self.crossings[ci][1]
            letters.append((self._gen_name(uf, b), self.signs[ci]))
        w = self.self_writhe(comp)
        m = self._gen_name(uf, uf.find(start_arc))
        letters.extend((m, -1 if w > 0 else 1) for _ in range(abs(w)))
        return free_reduce(tuple(letters))

    # -- surgeries --------------------------------------------------------------

    def _coloring_by_arcs(self):
        return {min(comp): self.coloring[i] for i, comp in enumerate(self.components)}

    def _rebuild(self, crossings, free_loops, arc_colors):
        probe = ColoredDiagram.__new__(ColoredDiagram)
        probe.crossings = [tuple(cr) for cr in crossings]
        probe.free_loops = sorted(free_loops)
        probe._resolve()
        coloring = {}
        for i, comp in enumerate(probe.components):
            colors = {arc_colors[e] for e in comp if e in arc_colors}
            if len(colors) != 1:
                raise PreconditionError("component color became ambiguous")
            coloring[i] = colors.pop()
        used = sorted({c for c in coloring.values()})
        remap = {}
        nxt = 1
        for c in used:
            if c == 0:
                remap[c] = 0
            else:
                remap[c] = nxt
                nxt += 1
        probe.coloring = {i: remap[c] for i, c in coloring.items()}
        probe._validate_coloring()
        return probe

    def mirror(self) -> "ColoredDiagram":
        """Reverse every crossing; signs all flip."""
        flipped = []
        for ci, (a, b, c, d) in enumerate(self.crossings):
            if self.signs[ci] > 0:
                flipped.append((d, a, b, c))
            else:
                flipped.append((b, c, d, a))
        arc_colors = {e: self.coloring[self._comp_of[e]] for e in self._comp_of}
        return self._rebuild(flipped, self.free_loops, arc_colors)

    def reverse_component(self, comp: int) -> "ColoredDiagram":
        """Reverse one component's orientation."""
        has_under = any(self._comp_of[cr[0]] == comp for cr in self.crossings)
        involved = any(self._comp_of[e] == comp
                       for cr in self.crossings for e in cr)
        if involved and not has_under:
            raise PreconditionError(
                "cannot reverse a component that never passes under; "
                "its orientation is conventional")
        rotated = []
        for ci, (a, b, c, d) in enumerate(self.crossings):
            if self._comp_of[a] == comp:
                rotated.append((c, d, a, b))
            else:
                rotated.append((a, b, c, d))
        arc_colors = {e: self.coloring[self._comp_of[e]] for e in self._comp_of}
        return self._rebuild(rotated, self.free_loops, arc_colors)

    def delete_components(self, comps) -> "ColoredDiagram":
        """Remove the given components, gluing the arcs they crossed."""
        comps = set(comps)
        keep = []
        uf = _UnionFind()
        for e in self._comp_of:
            if self._comp_of[e] not in comps:
                uf.find(e)
        for ci, (a, b, c, d) in enumerate(self.crossings):
            uc, oc = self.comp_of_crossing(ci)
            if uc in comps and oc in comps:
                continue
            if oc in comps:
                uf.union(a, c)
                continue
            if uc in comps:
                uf.union(b, d)
                continue
            keep.append((a, b, c, d))
        relabeled = [tuple(uf.find(e) for e in cr) for cr in keep]
        used = {e for cr in relabeled for e in cr}
        old_loops = set(self.free_loops)
        loops = [l for l in self.free_loops if self._comp_of[l] not in comps]
        survivors = [i for i in range(len(self.components)) if i not in comps]
        for i in survivors:
            if set(self.components[i]) & old_loops:
                continue
            classes = {uf.find(e) for e in self.components[i] if e in uf.parent}
            if classes and not (classes & used):
                loops.append(min(classes))
        arc_colors = {}
        for e in uf.parent:
            arc_colors[uf.find(e)] = self.coloring[self._comp_of[e]]
        return self._rebuild(relabeled, loops, arc_colors)

    def delete_color(self, color: int) -> "ColoredDiagram":
        comps = self.components_of_color(color)
        if not comps:
            raise PreconditionError(f"no component has color {color}")
        return self.delete_components(comps)

    def swap_roles(self) -> "ColoredDiagram":
        """Exchange the knot color 0 with color 1 (two-component use)."""
        if self.knot_component is None or self.mu != 1:
            raise PreconditionError("role swap needs exactly colors 0 and 1")
        if len(self.components_of_color(1)) != 1:
            raise PreconditionError("role swap needs color 1 to be a single component")
        coloring = {i: (1 - c) for i, c in self.coloring.items()}
        out = ColoredDiagram.__new__(ColoredDiagram)
        out.crossings = list(self.crossings)
        out.free_loops = list(self.free_loops)
        out._direction = self._direction
        out.signs = list(self.signs)
        out.components = [list(c) for c in self.components]
        out._comp_of = dict(self._comp_of)
        out.coloring = coloring
        out._validate_coloring()
        return out

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        out = {"crossings": [list(cr) for cr in self.crossings],
               "coloring": {str(k + 1): v for k, v in self.coloring.items()}}
        if self.free_loops:
            out["free_loops"] = list(self.free_loops)
        return out

    def __repr__(self):
        return (f"ColoredDiagram({len(self.crossings)} crossings, "
                f"{len(self.components)} components, mu={self.mu})")


# -- PD text and JSON parsing ----------------------------------------------------


_PD_RE = re.compile(r"PD\s*\[(?P<body>[^\]]*)\]", re.IGNORECASE)
_CROSSING_RE = re.compile(r"([XO])\s*\(\s*([-\d\s,]*?)\s*\)", re.IGNORECASE)
_COLORS_RE = re.compile(r"colors\s*\{(?P<body>[^}]*)\}", re.IGNORECASE)


def parse_pd(text: str) -> ColoredDiagram:
    """Parse PD text like ``PD[X(1,4,2,3), X(3,6,4,5)] colors{K: 1; 1: 2}``.

    ``O(k)`` inside the bracket is a crossingless circle.  The colors block
    assigns 1-based component numbers to ``K`` and to each color; without
    it every component gets its own color.  JSON input (an object with
    "crossings", optional "free_loops" and "coloring") is also accepted.
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            return diagram_from_json(json.loads(text))
        except json.JSONDecodeError as err:
            raise ParseError(f"bad diagram JSON: {err}") from None
    m = _PD_RE.search(text)
    if not m:
        raise ParseError("no PD[...] block found")
    crossings = []
    free_loops = []
    for kind, body in _CROSSING_RE.findall(m.group("body")):
        labels = [int(x) for x in body.replace(",", " ").split()]
        if kind.upper() == "X":
            if len(labels) != 4:
                raise ParseError(f"crossing needs 4 labels, got {labels}")
            crossings.append(tuple(labels))
        else:
            if len(labels) != 1:
                raise ParseError(f"free loop needs 1 label, got {labels}")
            free_loops.append(labels[0])
    leftovers = _CROSSING_RE.sub("", m.group("body")).replace(",", "").strip()
    if leftovers:
        raise ParseError(f"unrecognized PD content: {leftovers!r}")
    coloring = None
    cm = _COLORS_RE.search(text)
    if cm:
        coloring = _parse_colors_block(cm.group("body"))
    probe = ColoredDiagram(crossings, coloring=None, free_loops=free_loops)
    if coloring is not None:
        mapped = {}
        for color, comps in coloring.items():
            for comp1 in comps:
                if not 1 <= comp1 <= len(probe.components):
                    raise ParseError(f"component {comp1} out of range")
                mapped[comp1 - 1] = color
        probe = ColoredDiagram(crossings, coloring=mapped, free_loops=free_loops)
    return probe


def _parse_colors_block(body: str) -> dict:
    out: dict = {}
    for chunk in body.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ParseError(f"bad colors entry {chunk!r}")
        key, _, rest = chunk.partition(":")
        key = key.strip()
        color = 0 if key.upper() == "K" else int(key)
        comps = [int(x) for x in rest.replace(",", " ").split()]
        if not comps:
            raise ParseError(f"colors entry {chunk!r} lists no components")
        out[color] = comps
    return out


def diagram_from_json(obj) -> ColoredDiagram:
    try:
        crossings = [tuple(cr) for cr in obj["crossings"]]
    except (KeyError, TypeError) as err:
        raise ParseError(f"diagram JSON needs a crossings list: {err}") from None
    free_loops = obj.get("free_loops", [])
    coloring = obj.get("coloring")
    if coloring is not None:
        coloring = {int(k) - 1: int(v) for k, v in coloring.items()}
    return ColoredDiagram(crossings, coloring=coloring, free_loops=free_loops)


# -- spec-facing wrappers ----------------------------------------------------------


def wirtinger(d: ColoredDiagram, simplify: bool = False) -> Presentation:
    return d.wirtinger(simplify=simplify)


def longitude(d: ColoredDiagram, comp: int) -> Word:
    """The Seifert-longitude word of a component (usually the knot K)."""
    uf = d._overclasses()
    start = min(d.components[comp])
    return d._longitude_word(comp, uf, start)


def linking_number(d: ColoredDiagram, c1: int, c2: int) -> int:
    return d.linking_number(c1, c2)
