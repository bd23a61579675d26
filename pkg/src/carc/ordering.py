"""Clock orderings, the total-circular ordering verifier, and the pattern scanner.

The verifier checks, for every edge placed at clock positions p < q, the
two-sided condition: either every position strictly between p and q holding a
vertex outside the part of the vertex at q is adjacent to it, or every
position in the wrap range (q..n] + [1..p) holding a vertex outside the part
of the vertex at p is adjacent to it.  A witness records a simultaneous
failure of both sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from carc.graph import RPartiteGraph


class OrderingError(ValueError):
    """Raised when a sequence is not a valid clock arrangement."""


@dataclass(frozen=True)
class CircularOrdering:
    """A bijection between vertices 1..n and clock positions 1..n.

    ``seq[p-1]`` is the vertex at position p.  The arrangement is linear on
    the clock: position 1 follows position n only through explicit wrap
    ranges, never implicitly.
    """

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(self.seq))
        if sorted(self.seq) != list(range(1, len(self.seq) + 1)):
            raise OrderingError(f"not a permutation of 1..{len(self.seq)}: {self.seq}")

    @classmethod
    def identity(cls, n: int) -> "CircularOrdering":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.seq)

    def vertex_at(self, p: int) -> int:
        if not 1 <= p <= self.n:
            raise OrderingError(f"position out of range: {p}")
        return self.seq[p - 1]

    @cached_property
    def position(self) -> dict[int, int]:
        """Inverse map vertex id -> clock position."""
        return {v: p for p, v in enumerate(self.seq, start=1)}

    def position_of(self, v: int) -> int:
        try:
            return self.position[v]
        except KeyError:
            raise OrderingError(f"vertex {v} not in ordering") from None

    def rotated(self, shift: int) -> "CircularOrdering":
        """Same cyclic sequence with the cut moved by ``shift`` positions."""
        n = self.n
        if n == 0:
            return self
        s = shift % n
        return CircularOrdering(self.seq[s:] + self.seq[:s])


@dataclass(frozen=True)
class ViolationWitness:
    """A quadruple certifying that an ordering fails the two-sided condition.

    ``base_edge`` is the failing edge at positions (p, q) with p < q; ``inner``
    is a position strictly between them blocking the inside condition;
    ``outer`` is a position in the wrap range blocking the outside condition.
    ``template`` is "A" when the outer blocker follows q and "B" when it
    precedes p (i.e. which slot of the sorted quadruple carries the edge).
    """

    base_edge: tuple[int, int]
    inner: int
    outer: int
    template: str

    def quadruple(self) -> tuple[int, int, int, int]:
        """Positions sorted ascending, the scanner's (i, j, k, l)."""
        p, q = self.base_edge
        quad = sorted((p, q, self.inner, self.outer))
        return (quad[0], quad[1], quad[2], quad[3])

    def to_dict(self) -> dict:
        return {
            "base_edge": list(self.base_edge),
            "inner": self.inner,
            "outer": self.outer,
            "template": self.template,
        }


def edge_positions(g: RPartiteGraph, order: CircularOrdering) -> list[tuple[int, int]]:
    pos = order.position
    out = []
    for u, w in g.edges:
        p, q = pos[u], pos[w]
        out.append((p, q) if p < q else (q, p))
    out.sort()
    return out


def _check_order(g: RPartiteGraph, order: CircularOrdering) -> None:
    if order.n != g.n:
        raise OrderingError(f"ordering covers {order.n} vertices, graph has {g.n}")


def verify_gtc(g: RPartiteGraph, order: CircularOrdering) -> ViolationWitness | None:
    """Check the total-circular ordering condition.

    Returns None on pass, otherwise the witness with the lexicographically
    smallest (p, q, inner, outer).
    """
    _check_order(g, order)
    n = g.n
    seq = order.seq
    part = g.part
    adj = g.adj
    for p, q in edge_positions(g, order):
        vq = seq[q - 1]
        part_q = part[vq - 1]
        adj_q = adj[vq]
        inner = 0
        for b in range(p + 1, q):
            x = seq[b - 1]
            if part[x - 1] != part_q and not adj_q >> x & 1:
                inner = b
                break
        if not inner:
            continue
        vp = seq[p - 1]
        part_p = part[vp - 1]
        adj_p = adj[vp]
        outer = 0
        for d in range(1, p):
            x = seq[d - 1]
            if part[x - 1] != part_p and not adj_p >> x & 1:
                outer = d
                break
        if not outer:
            for d in range(q + 1, n + 1):
                x = seq[d - 1]
                if part[x - 1] != part_p and not adj_p >> x & 1:
                    outer = d
                    break
        if not outer:
            continue
        template = "A" if outer > q else "B"
        return ViolationWitness(base_edge=(p, q), inner=inner, outer=outer, template=template)
    return None


def _blockers(g, seq, positions, target_vertex) -> list[int]:
    """Positions whose vertex is outside target's part and non-adjacent to it."""
    part = g.part
    tpart = part[target_vertex - 1]
    tadj = g.adj[target_vertex]
    out = []
    for p in positions:
        x = seq[p - 1]
        if part[x - 1] != tpart and not tadj >> x & 1:
            out.append(p)
    return out


def scan_violations(g: RPartiteGraph, order: CircularOrdering) -> list[ViolationWitness]:
    """All quadruples i<j<k<l matching a forbidden template, in lex order.

    Template A places the edge at (i, k) with j blocking the vertex at k and
    l blocking the vertex at i; template B places the edge at (j, l) with k
    blocking the vertex at l and i blocking the vertex at j.  A quadruple
    matching both yields two witnesses.
    """
    _check_order(g, order)
    n = g.n
    seq = order.seq
    found: list[tuple[tuple[int, int, int, int], str, ViolationWitness]] = []
    for a, b in edge_positions(g, order):
        va, vb = seq[a - 1], seq[b - 1]
        between = range(a + 1, b)
        inner_blockers = _blockers(g, seq, between, vb)
        if inner_blockers:
            # template A: (i, k) = (a, b), l beyond b
            for l in _blockers(g, seq, range(b + 1, n + 1), va):
                for j in inner_blockers:
                    w = ViolationWitness(base_edge=(a, b), inner=j, outer=l, template="A")
                    found.append(((a, j, b, l), "A", w))
            # template B: (j, l) = (a, b), i before a
            for i in _blockers(g, seq, range(1, a), va):
                for k in inner_blockers:
                    w = ViolationWitness(base_edge=(a, b), inner=k, outer=i, template="B")
                    found.append(((i, a, k, b), "B", w))
    found.sort(key=lambda item: (item[0], item[1]))
    return [w for _, _, w in found]


def has_violation(g: RPartiteGraph, order: CircularOrdering) -> bool:
    """Early-exit existence form of scan_violations."""
    _check_order(g, order)
    n = g.n
    seq = order.seq
    for a, b in edge_positions(g, order):
        va, vb = seq[a - 1], seq[b - 1]
        if not _blockers(g, seq, range(a + 1, b), vb):
            continue
        if _blockers(g, seq, range(b + 1, n + 1), va):
            return True
        if _blockers(g, seq, range(1, a), va):
            return True
    return False
