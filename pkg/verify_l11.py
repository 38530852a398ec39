"""Scratch: full symbolic verification of candidate words for the equal-orders pair."""

import sys

from linkslope.algebra import parse_poly, parse_rational
from linkslope.diagram import ColoredDiagram
from linkslope.errors import PreconditionError
from linkslope.fox import slope_symbolic, alexander_order

from search_catalog import braid_pd, coloring_by_strands

T353 = parse_rational("-(t1*t2^2 + t1^2 - 4*t1*t2 + t2^2 + t1) / (t1*t2)",
                      ("t1", "t2"))
T384 = parse_rational("-(t1 - 1)*(t1*t2^2 - 1) / (t1*t2)", ("t1", "t2"))
DELTA_FULL = parse_poly("(t2 - 1)*(t - 1)^3*(t1 - 1)", ("t", "t1", "t2"))
ONE = parse_poly("1", ("t", "t1", "t2"))


def verify(word, strands, strand_color, verbose=True):
    """Check a colored braid closure against the target invariants.

    Returns "353", "384", or None. strand_color maps strand index -> color,
    color 0 is the distinguished component.
    """
    col = coloring_by_strands(word, strands, strand_color)
    out = {}
    for order in (1, 2):
        if order == 1:
            cc = col
        else:
            swap = {0: 0, 1: 2, 2: 1}
            cc = {k: swap[v] for k, v in col.items()}
        d = braid_pd(word, strands, coloring=cc)
        try:
            s = slope_symbolic(d)
        except PreconditionError as e:
            if verbose:
                print("  order", order, "slope failed:", e)
            out[order] = None
            continue
        if s.is_finite and s.value == T353:
            out[order] = "353"
        elif s.is_finite and s.value == T384:
            out[order] = "384"
        else:
            out[order] = None
        if verbose:
            print("  order", order, "slope:", s, "->", out[order])
    match = out.get(1) or out.get(2)
    if not match:
        return None

    # Alexander data
    d = braid_pd(word, strands, coloring=col)
    pres = d.wirtinger()
    delta = alexander_order(pres)
    ok_full = delta.unit_equal(DELTA_FULL)
    sub = d.delete_color(0)
    sub_pres = sub.wirtinger()
    dl = alexander_order(sub_pres)
    ok_l = dl.is_zero()
    dl1 = alexander_order(sub_pres, r=1)
    ok_l1 = dl1.unit_equal(parse_poly("1", ("t1", "t2")))
    if verbose:
        print("  delta_full:", delta, "ok:", ok_full)
        print("  delta_L:", dl, "ok:", ok_l)
        print("  delta_L1:", dl1, "ok:", ok_l1)
    if ok_full and ok_l and ok_l1:
        return match
    return None


if __name__ == "__main__":
    word = [-3, 2, 1, 1, -3, -1, -1, 2, -3]
    strands = 4
    strand_color = {3: 0, 1: 1, 2: 1, 0: 2}
    print(verify(word, strands, strand_color))
