"""Scratch: find braid words for the named catalog links by invariant matching."""

import itertools
import sys
from fractions import Fraction

from linkslope.characters import Character
from linkslope.diagram import ColoredDiagram
from linkslope.errors import PreconditionError
from linkslope.fox import slope_at, slope_symbolic, alexander_order

MINUS_ONE = Character.exact(2, (1,))
PAIR_C3 = Character.exact(3, (1, 2))
PAIR_C5A = Character.exact(5, (1, 2))
PAIR_C5B = Character.exact(5, (2, 1))


def as_rational(v):
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if v.is_rational():
        return v.rational_value()
    return None


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


def word_permutation(word, strands):
    perm = list(range(strands))
    for s in word:
        k = abs(s) - 1
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    return perm


def perm_cycles(perm):
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


def linking_matrix(word, strands, cycles):
    """lk(c1, c2) for closure components, from signed mixed crossings."""
    comp_of = {}
    for ci, cyc in enumerate(cycles):
        for s in cyc:
            comp_of[s] = ci
    cur = list(range(strands))      # strand id at each position
    counts = {}
    for s in word:
        k = abs(s) - 1
        a, b = cur[k], cur[k + 1]
        ca, cb = comp_of[a], comp_of[b]
        if ca != cb:
            key = (min(ca, cb), max(ca, cb))
            counts[key] = counts.get(key, 0) + (1 if s > 0 else -1)
        cur[k], cur[k + 1] = cur[k + 1], cur[k]
    return {k: Fraction(v, 2) for k, v in counts.items()}


def canonical_rotation(word):
    n = len(word)
    best = None
    for i in range(n):
        rot = tuple(word[i:] + word[:i])
        if best is None or rot < best:
            best = rot
    return best


def two_component_words(strands, length, gens=None):
    """Canonical braid words whose closure has exactly 2 components."""
    if gens is None:
        gens = [g for k in range(1, strands) for g in (k, -k)]
    seen = set()
    for word in itertools.product(gens, repeat=length):
        canon = canonical_rotation(list(word))
        if canon in seen:
            continue
        seen.add(canon)
        perm = word_permutation(word, strands)
        cycles = perm_cycles(perm)
        if len(cycles) == 2:
            yield list(word), cycles


def slopes_at_minus_one(word, strands):
    out = []
    for role in ((0, 1), (1, 0)):
        d = braid_pd(word, strands, coloring={role[0]: 0, role[1]: 1})
        try:
            s = slope_at(d, MINUS_ONE)
        except PreconditionError:
            return None
        out.append(s)
    return out


def check_l4a1():
    word = [1, 1, 1, 1]
    d = braid_pd(word, 2, coloring={0: 0, 1: 1})
    print("L4a1 candidate sigma_1^4: lk =", d.linking_number(0, 1))
    for role in ((0, 1), (1, 0)):
        dd = braid_pd(word, 2, coloring={role[0]: 0, role[1]: 1})
        print("  role", role, "slope(-1) =", slope_at(dd, MINUS_ONE))


def search_l7n1(lengths=(7,), strands=3):
    targets = {Fraction(2, 3), Fraction(6)}
    hits = []
    for length in lengths:
        n_checked = 0
        for word, cycles in two_component_words(strands, length):
            lkm = linking_matrix(word, strands, cycles)
            lk = lkm.get((0, 1), Fraction(0))
            if lk != 2:
                continue
            n_checked += 1
            slopes = slopes_at_minus_one(word, strands)
            if slopes is None or not all(s.is_finite for s in slopes):
                continue
            vals = {as_rational(s.value) for s in slopes}
            if vals == targets:
                hits.append((word, [str(s.value) for s in slopes]))
                print("L7n1 HIT:", word, [str(s.value) for s in slopes])
        print(f"  length {length}: {n_checked} slope evals, {len(hits)} hits")
        if hits:
            break
    return hits


def has_cyclic_cancellation(word):
    n = len(word)
    return any(word[i] == -word[(i + 1) % n] for i in range(n))


def slope_value_at(word, strands, role, omega):
    d = braid_pd(word, strands, coloring={role[0]: 0, role[1]: 1})
    try:
        s = slope_at(d, omega)
    except PreconditionError:
        return None
    if not s.is_finite:
        return None
    return as_rational(s.value)


def search_l10n2(length=10, strands=3):
    target = Fraction(-16, 13)
    hits = []
    gens = [g for k in range(1, strands) for g in (k, -k)]
    seen = set()
    n_words = n_canon = n_filtered = 0
    for word in itertools.product(gens, repeat=length):
        n_words += 1
        if n_words % 200000 == 0:
            print(f"  ... {n_words} words, {n_canon} canon, "
                  f"{n_filtered} slope evals, {len(hits)} hits", flush=True)
        if has_cyclic_cancellation(word):
            continue
        canon = canonical_rotation(list(word))
        if canon in seen:
            continue
        seen.add(canon)
        n_canon += 1
        perm = word_permutation(word, strands)
        cycles = perm_cycles(perm)
        if len(cycles) != 2:
            continue
        lkm = linking_matrix(word, strands, cycles)
        if lkm.get((0, 1), Fraction(0)) != 0:
            continue
        n_filtered += 1
        a = slope_value_at(list(word), strands, (0, 1), MINUS_ONE)
        if a == 0:
            b = slope_value_at(list(word), strands, (1, 0), MINUS_ONE)
            if b == target:
                hits.append((list(word), "KL=0 first"))
                print("L10n2 HIT:", list(word), "(K/L role = comp0)", flush=True)
        elif a == target:
            b = slope_value_at(list(word), strands, (1, 0), MINUS_ONE)
            if b == 0:
                hits.append((list(word), "LK first"))
                print("L10n2 HIT:", list(word), "(K/L role = comp1)", flush=True)
    print(f"done: {n_words} words, {n_canon} canonical, "
          f"{n_filtered} slope evals, {len(hits)} hits")
    return hits


MINUS_ONE_PAIR = Character.exact(2, (1, 1))

# reduced Burau at t = -1 for 3-strand subwords (calibrated: |det(M-1)| = |Delta(-1)|)
_BURAU = {
    1: ((1, 1), (0, 1)),
    -1: ((1, -1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    -2: ((1, 0), (1, 1)),
}


def _mul2(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def burau_det(word):
    m = ((1, 0), (0, 1))
    for g in word:
        m = _mul2(m, _BURAU[g])
    return abs((m[0][0] - 1) * (m[1][1] - 1) - m[0][1] * m[1][0])


def dfs_l10n2(length=10, strands=4, target_det=13):
    """Search B4 words: one strand clasping a det-13 knot on the other three."""
    target = Fraction(-16, 13)
    gens = [g for k in range(1, strands) for g in (k, -k)]
    hits = []
    seen = set()
    stats = {"leaves": 0, "det_pass": 0, "slope_evals": 0}
    word = []
    asub = []

    def leaf(cur, mutual, posb):
        stats["leaves"] += 1
        if burau_det(asub) != target_det:
            return
        stats["det_pass"] += 1
        canon = canonical_rotation(word)
        if canon in seen:
            return
        seen.add(canon)
        stats["slope_evals"] += 1
        a = slope_value_at(list(word), strands, (0, 1), MINUS_ONE)
        b = None
        if a == 0:
            b = slope_value_at(list(word), strands, (1, 0), MINUS_ONE)
            if b == target:
                hits.append(list(word))
                print("L10n2 HIT:", list(word), "(knot role = comp0)", flush=True)
        elif a == target:
            b = slope_value_at(list(word), strands, (1, 0), MINUS_ONE)
            if b == 0:
                hits.append(list(word))
                print("L10n2 HIT:", list(word), "(knot role = comp1)", flush=True)

    def rec(cur, mutual, signsum, posb):
        depth = len(word)
        if depth == length:
            if mutual < 2 or signsum != 0:
                return
            if word[0] == -word[-1]:
                return
            b_strand = cur[posb]
            if posb != b_strand:
                return          # B must close to itself alone
            # remaining three strands must form one cycle
            nxt = {cur[q]: q for q in range(strands)}
            start = next(s for s in range(strands) if s != b_strand)
            c, j = 0, start
            while True:
                j = nxt[j]
                c += 1
                if j == start:
                    break
            if c != 3:
                return
            leaf(cur, mutual, posb)
            return
        for g in gens:
            if word and g == -word[-1]:
                continue
            k = abs(g) - 1
            isb = posb == k or posb == k + 1
            nm = mutual + (1 if isb else 0)
            if nm > 4:
                continue
            ns = signsum + ((1 if g > 0 else -1) if isb else 0)
            if abs(ns) > 4 - nm:
                continue
            ncur = list(cur)
            ncur[k], ncur[k + 1] = ncur[k + 1], ncur[k]
            if isb:
                nposb = k + 1 if posb == k else k
                word.append(g)
                rec(ncur, nm, ns, nposb)
                word.pop()
            else:
                ak = k - (1 if posb < k else 0)
                sub = ak + 1 if g > 0 else -(ak + 1)
                word.append(g)
                asub.append(sub)
                rec(ncur, nm, ns, posb)
                asub.pop()
                word.pop()

    for b0 in range(strands):
        rec(list(range(strands)), 0, 0, b0)
        print(f"  b0={b0} done: {stats}", flush=True)
    print("dfs done:", stats, len(hits), "hits")
    return hits


def search_l11(length=11, strands=3):
    """3-component candidates for the equal-orders pair (slopes 4 / -4 at (-1,-1))."""
    gens = [g for k in range(1, strands) for g in (k, -k)]
    seen = set()
    hits = []
    n_words = n_evals = 0
    for word in itertools.product(gens, repeat=length):
        n_words += 1
        if n_words % 500000 == 0:
            print(f"  ... {n_words} words, {n_evals} slope evals, "
                  f"{len(hits)} hits", flush=True)
        if has_cyclic_cancellation(word):
            continue
        perm = word_permutation(word, strands)
        if perm != [0, 1, 2]:
            continue
        canon = canonical_rotation(list(word))
        if canon in seen:
            continue
        seen.add(canon)
        cycles = [[0], [1], [2]]
        lkm = linking_matrix(word, strands, cycles)
        for k in range(3):
            others = [o for o in range(3) if o != k]
            if any(lkm.get(tuple(sorted((k, o))), Fraction(0)) for o in others):
                continue
            coloring = {k: 0, others[0]: 1, others[1]: 2}
            d = braid_pd(list(word), strands, coloring=coloring)
            n_evals += 1
            try:
                s = slope_at(d, MINUS_ONE_PAIR)
            except PreconditionError:
                continue
            if not s.is_finite:
                continue
            v = as_rational(s.value)
            if v == 4 or v == -4:
                hits.append((list(word), k, str(v)))
                print("L11 HIT:", list(word), "K strand", k, "slope", v,
                      flush=True)
    print(f"done: {n_words} words, {n_evals} slope evals, {len(hits)} hits")
    return hits


def dfs_l11_pair(length=11, strands=4):
    """B4 search for the equal-orders pair: K on two strands, L1, L2 single.

    All pairwise linking numbers vanish; slope at (-1,-1) must be 4 or -4.
    """
    gens = [g for k in range(1, strands) for g in (k, -k)]
    hits = []
    seen = set()
    stats = {"leaves": 0, "slope_evals": 0}
    word = []

    def leaf(ka, kb, singles):
        stats["leaves"] += 1
        canon = canonical_rotation(word)
        if canon in seen:
            return
        seen.add(canon)
        w = list(word)
        c, d2 = singles
        # try each component in the distinguished role
        roles = [({ka: 0, kb: 0, c: 1, d2: 2}, "K2"),
                 ({c: 0, ka: 1, kb: 1, d2: 2}, "Kc"),
                 ({d2: 0, ka: 1, kb: 1, c: 2}, "Kd")]
        for strand_color, tag in roles:
            stats["slope_evals"] += 1
            try:
                col = coloring_by_strands(w, strands, strand_color)
                dia = braid_pd(w, strands, coloring=col)
                if len(dia.components) != 3:
                    return
                s = slope_at(dia, MINUS_ONE_PAIR)
            except PreconditionError:
                continue
            if not s.is_finite:
                continue
            v = as_rational(s.value)
            if v != 4 and v != -4:
                continue
            # second test point: omega = (zeta3, zeta3^2), color-symmetric
            try:
                s2 = slope_at(dia, PAIR_C3)
            except PreconditionError:
                continue
            if not s2.is_finite:
                continue
            v2 = as_rational(s2.value)
            ok = (v == 4 and v2 == 6) or (v == -4 and v2 == -3)
            if not ok:
                continue
            # third test point at conductor 5, either color order
            want = 5 if v == 4 else 0
            ok3 = False
            for ch in (PAIR_C5A, PAIR_C5B):
                try:
                    s3 = slope_at(dia, ch)
                except PreconditionError:
                    continue
                if s3.is_finite and as_rational(s3.value) == want:
                    ok3 = True
                    break
            if ok3:
                hits.append((w, (ka, kb), tag, v, v2))
                print("L11 PAIR HIT:", w, "K strands", (ka, kb), "role", tag,
                      "slopes", v, v2, flush=True)

    def run(ka, kb):
        singles = [s for s in range(strands) if s not in (ka, kb)]
        c, dd = singles
        # state: (cur tuple, depth, ss_kc, ss_kd, ss_cd, mut_c, mut_d, mut_k)
        tgt = {c: c, dd: dd, ka: kb, kb: ka}

        def rec2(cur, depth, ss_kc, ss_kd, ss_cd, mut_c, mut_d, mut_k):
            remaining = length - depth
            if abs(ss_kc) + abs(ss_kd) + abs(ss_cd) > remaining:
                return
            need = max(4 - mut_c, 4 - mut_d, 4 - mut_k, 0)
            if need > remaining:
                return
            disp = 0
            for p in range(strands):
                disp += abs(p - tgt[cur[p]])
            if disp > 2 * remaining:
                return
            if depth == length:
                if ss_kc or ss_kd or ss_cd:
                    return
                if word[0] == -word[-1]:
                    return
                # closure permutation: next(s) = position of s
                if cur[c] != c or cur[dd] != dd:
                    return
                if cur[ka] != kb or cur[kb] != ka:
                    return
                leaf(ka, kb, singles)
                return
            for g in gens:
                if word and g == -word[-1]:
                    continue
                k = abs(g) - 1
                s1, s2 = cur[k], cur[k + 1]
                sgn = 1 if g > 0 else -1
                in_k1 = s1 in (ka, kb)
                in_k2 = s2 in (ka, kb)
                nkc, nkd, ncd = ss_kc, ss_kd, ss_cd
                nmc, nmd, nmk = mut_c, mut_d, mut_k
                if in_k1 and in_k2:
                    pass
                elif in_k1 or in_k2:
                    other = s2 if in_k1 else s1
                    nmk += 1
                    if other == c:
                        nkc += sgn
                        nmc += 1
                    else:
                        nkd += sgn
                        nmd += 1
                else:
                    ncd += sgn
                    nmc += 1
                    nmd += 1
                ncur = list(cur)
                ncur[k], ncur[k + 1] = ncur[k + 1], ncur[k]
                word.append(g)
                rec2(tuple(ncur), depth + 1, nkc, nkd, ncd, nmc, nmd, nmk)
                word.pop()

        rec2(tuple(range(strands)), 0, 0, 0, 0, 0, 0, 0)
        print(f"  K=({ka},{kb}) done: {stats}", flush=True)

    # (2,3) and (1,3) are strand-flips of (0,1) and (0,2): same closures
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2)] if strands == 4 else [
        (a, b) for a in range(strands) for b in range(a + 1, strands)]
    for ka, kb in pairs:
        run(ka, kb)
    print("dfs_l11_pair done:", stats, len(hits), "hits")
    return hits


def coloring_by_strands(word, strands, strand_color):
    """Map braid-closure component indices to colors via strand membership."""
    d = braid_pd(word, strands, coloring=None)
    # arcs 1..strands are the initial top arcs of the respective strands
    col = {}
    for ci, comp in enumerate(d.components):
        arcs = set(comp)
        for s in range(strands):
            if s + 1 in arcs:
                col[ci] = strand_color[s]
                break
        else:
            raise PreconditionError("component without an initial arc")
    return col


if __name__ == "__main__":
    which = sys.argv[1] if len(sys.argv) > 1 else "l4a1"
    if which == "l4a1":
        check_l4a1()
    elif which == "l7n1":
        search_l7n1()
    elif which == "l10n2":
        length = int(sys.argv[2]) if len(sys.argv) > 2 else 11
        strands = int(sys.argv[3]) if len(sys.argv) > 3 else 3
        search_l10n2(length, strands)
    elif which == "l11":
        length = int(sys.argv[2]) if len(sys.argv) > 2 else 12
        strands = int(sys.argv[3]) if len(sys.argv) > 3 else 3
        search_l11(length, strands)
    elif which == "l10n2dfs":
        dfs_l10n2()
    elif which == "l11pair":
        length = int(sys.argv[2]) if len(sys.argv) > 2 else 11
        dfs_l11_pair(length=length)
