"""Exhaustive search for the smallest bipartite graph outside the class.

Bipartite graphs are enumerated in increasing order n, then by part split
(a, b) with a <= b and a ascending, then by ascending edge bitmask over the
a*b cross pairs in lex (u, w) order.  Masks are deduplicated by the full
symmetry group (permutations within each side, plus the side swap when
a == b); ascending iteration makes each orbit's minimum the canonical
representative.  The first representative the recognizer rejects is the
smallest negative instance under this order.
"""
from __future__ import annotations

from itertools import permutations

from carc.graph import RPartiteGraph
from carc.recognize import recognize


def bipartite_from_mask(a: int, b: int, mask: int) -> RPartiteGraph:
    """Vertices 1..a in part 1 and a+1..a+b in part 2; bit (u-1)*b + (w-a-1)
    encodes the pair (u, w)."""
    part = (1,) * a + (2,) * b
    edges = []
    for u in range(1, a + 1):
        for j in range(b):
            if mask >> ((u - 1) * b + j) & 1:
                edges.append((u, a + 1 + j))
    return RPartiteGraph.build(part, edges, r=2)


def _pair_tables(a: int, b: int) -> list[list[int]]:
    """Bit-index permutation tables for the symmetry group of the (a, b) split."""
    tables = []
    for sigma in permutations(range(a)):
        for tau in permutations(range(b)):
            tables.append([sigma[u] * b + tau[j] for u in range(a) for j in range(b)])
            if a == b:
                # side swap: pair (u, j) maps to (tau[j], sigma[u])
                tables.append(
                    [tau[j] * b + sigma[u] for u in range(a) for j in range(b)]
                )
    return tables


def _apply(table: list[int], mask: int, nbits: int) -> int:
    out = 0
    for idx in range(nbits):
        if mask >> idx & 1:
            out |= 1 << table[idx]
    return out


def canonical_masks(a: int, b: int):
    """Ascending orbit minima over all edge bitmasks of the (a, b) split."""
    nbits = a * b
    tables = _pair_tables(a, b)
    seen = bytearray(1 << nbits)
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        for table in tables:
            seen[_apply(table, mask, nbits)] = 1
        yield mask


def find_smallest_negative_bigraph(max_n: int = 9) -> tuple[RPartiteGraph, int, int, int] | None:
    """First bipartite graph the recognizer rejects, or None if all pass.

    Returns (graph, a, b, mask) for the documented enumeration order.
    """
    for n in range(2, max_n + 1):
        for a in range(1, n // 2 + 1):
            b = n - a
            for mask in canonical_masks(a, b):
                g = bipartite_from_mask(a, b, mask)
                if recognize(g).answer == "no":
                    return g, a, b, mask
    return None


if __name__ == "__main__":
    import json
    import sys

    from carc.graph import serialize_graph

    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    hit = find_smallest_negative_bigraph(max_n=limit)
    if hit is None:
        print(json.dumps({"found": False, "max_n": limit}))
    else:
        g, a, b, mask = hit
        print(json.dumps({"found": True, "split": [a, b], "mask": mask}))
        print(serialize_graph(g))
