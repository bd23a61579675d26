"""Shared test helpers: independent oracles and small-graph corpora.

The oracles here are deliberately naive (sets and explicit enumeration) and
never call the code paths they check.
"""
from __future__ import annotations

from itertools import combinations, permutations

from carc.graph import RPartiteGraph


def naive_gtc_pass(g: RPartiteGraph, order) -> bool:
    """Set-based transcription of the per-edge two-sided condition."""
    n = g.n
    seq = order.seq
    for u, w in g.edges:
        p, q = sorted((order.position_of(u), order.position_of(w)))
        vp, vq = seq[p - 1], seq[q - 1]
        inside_ok = all(
            g.adjacent(seq[b - 1], vq)
            for b in range(p + 1, q)
            if g.part_of(seq[b - 1]) != g.part_of(vq)
        )
        wrap = list(range(q + 1, n + 1)) + list(range(1, p))
        outside_ok = all(
            g.adjacent(seq[d - 1], vp)
            for d in wrap
            if g.part_of(seq[d - 1]) != g.part_of(vp)
        )
        if not (inside_ok or outside_ok):
            return False
    return True


def arc_cover_set(start: int, end: int, n: int) -> set[int]:
    """Walk the clock one marker at a time from start until end, inclusively."""
    out = {start}
    p = start
    while p != end:
        p = p % n + 1
        out.add(p)
    return out


def _vertex_perms_for_blocks(sizes: list[int]):
    """All part-preserving vertex permutations for block-assigned parts,
    including permutations of equal-size blocks (part relabeling)."""
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s
    blocks = list(range(len(sizes)))

    def block_orders():
        by_size: dict[int, list[int]] = {}
        for b in blocks:
            by_size.setdefault(sizes[b], []).append(b)
        groups = sorted(by_size.values())

        def rec(idx, current):
            if idx == len(groups):
                yield dict(current)
                return
            for perm in permutations(groups[idx]):
                mapping = dict(zip(groups[idx], perm))
                yield from rec(idx + 1, {**current, **mapping})

        yield from rec(0, {})

    for block_map in block_orders():
        inner_choices = [list(permutations(range(sizes[b]))) for b in blocks]

        def rec(idx, table):
            if idx == len(blocks):
                yield tuple(table)
                return
            b = idx
            target = block_map[b]
            for inner in inner_choices[b]:
                for i in range(sizes[b]):
                    table[offsets[b] + i] = offsets[target] + inner[i]
                yield from rec(idx + 1, table)

        yield from rec(0, [0] * total)


def canonical_small_graphs(max_n: int, max_r: int = 3):
    """Every r-partite graph with n <= max_n and r <= max_r parts, one
    representative per orbit of part-preserving relabeling (including
    relabeling equal-size parts).

    Parts are assigned by blocks with sizes sorted descending; empty parts are
    skipped since they cannot affect any verdict.
    """
    for n in range(0, max_n + 1):
        for r in range(1, min(max_r, max(n, 1)) + 1):
            for sizes in _partitions(n, r):
                part = []
                for pid, s in enumerate(sizes, start=1):
                    part.extend([pid] * s)
                part = tuple(part)
                pairs = [
                    (u, w)
                    for u, w in combinations(range(1, n + 1), 2)
                    if part[u - 1] != part[w - 1]
                ]
                nbits = len(pairs)
                pair_index = {pr: i for i, pr in enumerate(pairs)}
                tables = []
                for table in _vertex_perms_for_blocks(list(sizes)):
                    mapped = []
                    for u, w in pairs:
                        a, b = table[u - 1] + 1, table[w - 1] + 1
                        mapped.append(pair_index[(min(a, b), max(a, b))])
                    tables.append(mapped)
                seen = bytearray(1 << nbits)
                for mask in range(1 << nbits):
                    if seen[mask]:
                        continue
                    for tbl in tables:
                        img = 0
                        for idx in range(nbits):
                            if mask >> idx & 1:
                                img |= 1 << tbl[idx]
                        seen[img] = 1
                    edges = frozenset(pairs[i] for i in range(nbits) if mask >> i & 1)
                    yield RPartiteGraph.build(part, edges, r=r)


def _partitions(n: int, r: int):
    """Size tuples of length r, positive, sorted descending, summing to n."""
    if r == 1:
        if n >= 1:
            yield (n,)
        elif n == 0:
            yield (0,)
        return

    def rec(remaining, parts_left, cap):
        if parts_left == 1:
            if 1 <= remaining <= cap:
                yield (remaining,)
            return
        for first in range(min(cap, remaining - parts_left + 1), 0, -1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(n, r, n)


def random_rpartite_instance(rng, n: int, r: int, density: float | None = None) -> RPartiteGraph:
    """Seeded random graph over a random surjective-ish part assignment."""
    part = tuple(rng.randint(1, r) for _ in range(n))
    d = rng.random() if density is None else density
    pairs = [
        (u, w)
        for u, w in combinations(range(1, n + 1), 2)
        if part[u - 1] != part[w - 1]
    ]
    edges = frozenset(p for p in pairs if rng.random() < d)
    return RPartiteGraph.build(part, edges, r=r)


def all_orderings(n: int):
    yield from permutations(range(1, n + 1))
