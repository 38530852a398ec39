"""Shared helpers for the test suite."""

from linkslope.diagram import ColoredDiagram


def braid_pd(word, strands, coloring=None):
    """Colored diagram of the closure of a braid word on the given strands.

    Letters are nonzero integers: +k crosses strand k over strand k+1,
    -k crosses it under.  Strands that never cross close into free loops.
    """
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


def braid_pd_by_strand_colors(word, strands, strand_color):
    """Braid closure colored by assigning each starting strand a color."""
    plain = braid_pd(word, strands)
    coloring = {}
    for s, color in strand_color.items():
        arc = s + 1
        for idx, comp in enumerate(plain.components):
            if arc in comp:
                coloring[idx] = color
                break
        else:
            raise ValueError(f"strand {s} not found in any component")
    return braid_pd(word, strands, coloring=coloring)
