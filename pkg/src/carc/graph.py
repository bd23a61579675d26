"""r-partite graphs with host-graph constraints: data model, JSON I/O, generators.

Vertices are 1..n and parts are 1..r throughout; clock positions used by the
ordering machinery share the same 1-based convention.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from carc.ordering import CircularOrdering


class GraphError(ValueError):
    """Raised for malformed graph documents or invariant violations."""


def complete_host(r: int) -> frozenset[tuple[int, int]]:
    """All unordered part pairs of K_r."""
    return frozenset((a, b) for a, b in combinations(range(1, r + 1), 2))


@dataclass(frozen=True)
class RPartiteGraph:
    """An r-partite graph whose cross-part adjacency is filtered by a host graph.

    ``part[v-1]`` is the part of vertex ``v``; ``edges`` holds unordered vertex
    pairs ``(u, w)`` with ``u < w``; ``host_edges`` holds unordered part pairs.
    Parts may be empty.  Instances are immutable and safe to share.
    """

    n: int
    r: int
    part: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    host_edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"bad vertex count n={self.n}")
        if self.r < 1:
            raise GraphError(f"bad part count r={self.r}")
        if len(self.part) != self.n:
            raise GraphError(f"part map has {len(self.part)} entries, expected n={self.n}")
        for v, p in enumerate(self.part, start=1):
            if not 1 <= p <= self.r:
                raise GraphError(f"part-id out of range for vertex {v}: {p}")
        for a, b in self.host_edges:
            if not (1 <= a < b <= self.r):
                raise GraphError(f"bad host edge ({a}, {b})")
        for e in self.edges:
            u, w = e
            if not (1 <= u <= self.n and 1 <= w <= self.n):
                raise GraphError(f"vertex id out of range in edge {list(e)}")
            if u >= w:
                raise GraphError(f"edge not in (u, w) u<w form: {list(e)}")
            pu, pw = self.part[u - 1], self.part[w - 1]
            if pu == pw:
                raise GraphError(f"intra-part edge {list(e)} (both in part {pu})")
            if (min(pu, pw), max(pu, pw)) not in self.host_edges:
                raise GraphError(f"edge {list(e)} joins parts ({pu}, {pw}) absent from host graph")

    @classmethod
    def build(
        cls,
        part: tuple[int, ...] | list[int],
        edges,
        r: int | None = None,
        host_edges=None,
    ) -> "RPartiteGraph":
        """Construct from a part map and an edge iterable, normalizing pair order."""
        part = tuple(part)
        if r is None:
            r = max(part, default=1)
        host = complete_host(r) if host_edges is None else frozenset(
            (min(a, b), max(a, b)) for a, b in host_edges
        )
        norm = frozenset((min(u, w), max(u, w)) for u, w in edges)
        return cls(n=len(part), r=r, part=part, edges=norm, host_edges=host)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def part_of(self, v: int) -> int:
        return self.part[v - 1]

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbor bitmasks indexed by vertex id (bit w set in adj[v])."""
        masks = [0] * (self.n + 1)
        for u, w in self.edges:
            masks[u] |= 1 << w
            masks[w] |= 1 << u
        return tuple(masks)

    def adjacent(self, u: int, w: int) -> bool:
        return bool(self.adj[u] >> w & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def host_allows(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.host_edges

    @property
    def host_is_complete(self) -> bool:
        return self.host_edges == complete_host(self.r)

    def allowed_pairs(self):
        """Cross-part, host-allowed vertex pairs (u, w) with u < w, in lex order."""
        for u in range(1, self.n + 1):
            pu = self.part[u - 1]
            for w in range(u + 1, self.n + 1):
                pw = self.part[w - 1]
                if pu != pw and self.host_allows(pu, pw):
                    yield u, w

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        doc: dict = {
            "n": self.n,
            "r": self.r,
            "part": list(self.part),
            "edges": [list(e) for e in self.sorted_edges()],
        }
        if not self.host_is_complete:
            doc["host_edges"] = [list(h) for h in sorted(self.host_edges)]
        return doc


def parse_graph(text: str) -> RPartiteGraph:
    """Parse the JSON graph format, reporting the offending element on error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    try:
        n = doc["n"]
        r = doc["r"]
        part = doc["part"]
        edges = doc["edges"]
    except KeyError as exc:
        raise GraphError(f"missing key {exc.args[0]!r}") from exc
    if not isinstance(n, int) or not isinstance(r, int):
        raise GraphError("'n' and 'r' must be integers")
    if not isinstance(part, list) or not all(isinstance(p, int) for p in part):
        raise GraphError("'part' must be an array of integers")
    if not isinstance(edges, list):
        raise GraphError("'edges' must be an array")
    seen: set[tuple[int, int]] = set()
    norm = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphError(f"bad edge entry {e!r}")
        u, w = e
        if u == w:
            raise GraphError(f"self-loop {e}")
        key = (min(u, w), max(u, w))
        if key in seen:
            raise GraphError(f"duplicate edge {list(key)}")
        seen.add(key)
        norm.append(key)
    host = doc.get("host_edges")
    if host is not None:
        if not isinstance(host, list):
            raise GraphError("'host_edges' must be an array")
        pairs = set()
        for h in host:
            if not (isinstance(h, list) and len(h) == 2 and all(isinstance(x, int) for x in h)):
                raise GraphError(f"bad host edge entry {h!r}")
            a, b = h
            if a == b:
                raise GraphError(f"host self-loop {h}")
            pairs.add((min(a, b), max(a, b)))
        host = frozenset(pairs)
    else:
        host = complete_host(r)
    return RPartiteGraph(n=n, r=r, part=tuple(part), edges=frozenset(norm), host_edges=host)


def serialize_graph(g: RPartiteGraph) -> str:
    """Emit the JSON graph format: fixed key order, edges sorted lexicographically."""
    return json.dumps(g.to_dict())


_FIG1_PARTS = {1: 1, 4: 1, 6: 1, 8: 1, 2: 2, 3: 2, 5: 2, 7: 2}
_FIG1_EDGES = [(1, 2), (1, 3), (2, 4), (3, 4), (3, 8), (4, 5), (5, 6), (6, 7), (7, 8)]

# Edge (6, 7) is required for the published arc list of this example to be a
# valid model (arcs [4,6] and [6,7] meet at position 6 across parts).
_FIG2_PARTS = {2: 1, 3: 1, 6: 1, 9: 1, 1: 2, 4: 2, 5: 2, 7: 2, 8: 2, 10: 2}
_FIG2_EDGES = [
    (1, 2), (1, 3), (1, 9), (2, 4), (3, 4), (3, 5), (3, 10),
    (4, 6), (5, 6), (6, 7), (6, 8), (6, 10), (7, 9), (8, 9), (9, 10),
]


def builtin_example(name: str) -> RPartiteGraph:
    """Built-in worked examples: an 8-vertex and a 10-vertex circular-arc bigraph."""
    if name == "fig1":
        part = tuple(_FIG1_PARTS[v] for v in range(1, 9))
        return RPartiteGraph.build(part, _FIG1_EDGES, r=2)
    if name == "fig2":
        part = tuple(_FIG2_PARTS[v] for v in range(1, 11))
        return RPartiteGraph.build(part, _FIG2_EDGES, r=2)
    raise GraphError(f"unknown example {name!r} (expected 'fig1' or 'fig2')")


def _splitmix64(seed: int):
    """SplitMix64 stream; one draw per visited pair keeps corpora reproducible
    across languages."""
    state = seed & 0xFFFFFFFFFFFFFFFF
    mask = 0xFFFFFFFFFFFFFFFF
    while True:
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        yield z ^ (z >> 31)


def random_rpartite(
    r: int,
    sizes,
    density: float,
    seed: int,
    host_edges=None,
) -> RPartiteGraph:
    """Seeded Gilbert-style generator over the host-allowed cross-part pairs.

    Pairs are visited in lexicographic (u, w) order, consuming exactly one
    SplitMix64 draw each; a pair becomes an edge iff draw / 2**64 < density.
    """
    sizes = list(sizes)
    if r < 1:
        raise GraphError(f"bad part count r={r}")
    if len(sizes) != r or any(s < 0 for s in sizes):
        raise GraphError(f"sizes must have {r} non-negative entries, got {sizes}")
    if not 0.0 <= density <= 1.0:
        raise GraphError(f"density outside [0,1]: {density}")
    part: list[int] = []
    for pid, s in enumerate(sizes, start=1):
        part.extend([pid] * s)
    host = complete_host(r) if host_edges is None else frozenset(
        (min(a, b), max(a, b)) for a, b in host_edges
    )
    skeleton = RPartiteGraph(n=len(part), r=r, part=tuple(part), edges=frozenset(), host_edges=host)
    stream = _splitmix64(seed)
    threshold = density * 2.0**64
    edges = [pair for pair in skeleton.allowed_pairs() if next(stream) < threshold]
    return RPartiteGraph(
        n=skeleton.n, r=r, part=skeleton.part, edges=frozenset(edges), host_edges=host
    )


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric 0/1 matrix indexed by clock position (1-based accessor)."""

    order: CircularOrdering
    bits: tuple[tuple[int, ...], ...]

    def at(self, p: int, q: int) -> int:
        return self.bits[p - 1][q - 1]


def adjacency_matrix(g: RPartiteGraph, order: CircularOrdering) -> AdjacencyMatrix:
    """Matrix with bits[p][q] = 1 iff the vertices at positions p, q are adjacent."""
    if order.n != g.n:
        raise GraphError(f"ordering covers {order.n} vertices, graph has {g.n}")
    seq = order.seq
    rows = tuple(
        tuple(1 if p != q and g.adjacent(seq[p], seq[q]) else 0 for q in range(g.n))
        for p in range(g.n)
    )
    return AdjacencyMatrix(order=order, bits=rows)
