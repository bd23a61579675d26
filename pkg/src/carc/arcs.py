"""Discrete circular arcs on an n-hour clock and the constructive model builder.

Arcs are closed sets of clock positions {start, start+1, ..., end} advancing
clockwise with wraparound; start == end is a single point and start == end+1
(mod n) covers the whole clock.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING

from carc.ordering import CircularOrdering

if TYPE_CHECKING:
    from carc.graph import RPartiteGraph


class ArcModelError(ValueError):
    """Raised for malformed models or failed preconditions."""


class NormalizationError(ArcModelError):
    """Raised if endpoint normalization would change the intersection relation."""


@dataclass(frozen=True)
class ClockArc:
    start: int
    end: int

    def span(self, n: int) -> int:
        """Number of clockwise steps from start to end (0 for a point)."""
        return (self.end - self.start) % n

    def to_list(self) -> list[int]:
        return [self.start, self.end]


@dataclass(frozen=True)
class ArcModel:
    """One closed arc per vertex on a clock of ``n_positions`` markers."""

    n_positions: int
    arcs: dict[int, ClockArc]

    def __post_init__(self) -> None:
        if self.n_positions < 0:
            raise ArcModelError(f"bad clock size {self.n_positions}")
        for v, a in self.arcs.items():
            if not (1 <= a.start <= self.n_positions and 1 <= a.end <= self.n_positions):
                raise ArcModelError(f"arc for vertex {v} out of range: {a.to_list()}")

    def sorted_items(self) -> list[tuple[int, ClockArc]]:
        return sorted(self.arcs.items())

    def to_dict(self) -> dict:
        return {
            "n_positions": self.n_positions,
            "arcs": [{"v": v, "start": a.start, "end": a.end} for v, a in self.sorted_items()],
        }


def model_to_json(m: ArcModel) -> str:
    return json.dumps(m.to_dict())


def model_from_json(text: str) -> ArcModel:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArcModelError(f"malformed JSON: {exc}") from exc
    try:
        n = doc["n_positions"]
        entries = doc["arcs"]
    except (TypeError, KeyError) as exc:
        raise ArcModelError(f"missing key in model document: {exc}") from exc
    arcs = {}
    for entry in entries:
        v = entry["v"]
        if v in arcs:
            raise ArcModelError(f"duplicate arc for vertex {v}")
        arcs[v] = ClockArc(entry["start"], entry["end"])
    return ArcModel(n_positions=n, arcs=arcs)


def arc_contains(a: ClockArc, p: int, n: int) -> bool:
    """True iff position p lies in a's covered set."""
    if not 1 <= p <= n:
        raise ArcModelError(f"position out of range: {p} (clock size {n})")
    return (p - a.start) % n <= a.span(n)


def arcs_intersect(a: ClockArc, b: ClockArc, n: int) -> bool:
    """Closed discrete arcs meet iff either contains the other's clockwise end."""
    return arc_contains(a, b.end, n) or arc_contains(b, a.end, n)


def covered_positions(a: ClockArc, n: int) -> set[int]:
    """The covered set, materialized."""
    return {(a.start - 1 + s) % n + 1 for s in range(a.span(n) + 1)}


def scan_anchor(g: RPartiteGraph, order: CircularOrdering, i: int) -> int:
    """Anticlockwise endpoint m_i of the arc built for the vertex at position i.

    Walk i-1, i-2, ... wrapping; same-part positions are skipped; the walk
    passes an out-of-part vertex only if it is adjacent.  Returns the last
    adjacent out-of-part position, i itself when the first out-of-part vertex
    is non-adjacent (or none exists, or n == 1), and i+1 (mod n) when the walk
    wraps completely so the arc covers the whole clock.
    """
    if not 1 <= i <= g.n:
        raise ArcModelError(f"position out of range: {i} (n={g.n})")
    if order.n != g.n:
        raise ArcModelError(f"ordering covers {order.n} vertices, graph has {g.n}")
    n = g.n
    v = order.seq[i - 1]
    my_part = g.part[v - 1]
    adj_v = g.adj[v]
    part = g.part
    seq = order.seq
    m = 0
    for step in range(1, n):
        p = (i - 1 - step) % n + 1
        x = seq[p - 1]
        if part[x - 1] == my_part:
            continue
        if adj_v >> x & 1:
            m = p
        else:
            return m if m else i
    if m:
        return i % n + 1
    return i


def build_model(g: RPartiteGraph, order: CircularOrdering) -> ArcModel:
    """Arc [m_i, i] for the vertex at each position i.

    Runs on any valid ordering; the result is a correct model exactly when the
    ordering passes the total-circular verifier.
    """
    arcs = {
        order.seq[i - 1]: ClockArc(scan_anchor(g, order, i), i) for i in range(1, g.n + 1)
    }
    return ArcModel(n_positions=g.n, arcs=arcs)


def validate_model(g: RPartiteGraph, m: ArcModel) -> tuple[int, int] | None:
    """Check edge <=> intersection over cross-part, host-allowed pairs.

    Same-part pairs and pairs whose parts the host graph omits are
    unconstrained.  Returns None on pass, else the lexicographically first
    offending vertex pair.
    """
    if set(m.arcs) != set(g.vertices):
        raise ArcModelError(
            f"model covers vertices {sorted(m.arcs)}, graph has 1..{g.n}"
        )
    if g.n > 0 and m.n_positions < 1:
        raise ArcModelError("empty clock for a non-empty graph")
    n = m.n_positions
    for u, w in g.allowed_pairs():
        has_edge = g.adjacent(u, w)
        meets = arcs_intersect(m.arcs[u], m.arcs[w], n)
        if has_edge != meets:
            return (u, w)
    return None


def extract_ordering(m: ArcModel) -> CircularOrdering:
    """Vertices by ascending clockwise endpoint; requires distinct endpoints."""
    seen: dict[int, int] = {}
    for v, a in m.sorted_items():
        if a.end in seen:
            raise ArcModelError(
                f"duplicate clockwise endpoint {a.end} (vertices {seen[a.end]} and {v})"
            )
        seen[a.end] = v
    ranked = sorted(m.arcs, key=lambda v: m.arcs[v].end)
    return CircularOrdering(tuple(ranked))


def normalize_model(m: ArcModel) -> ArcModel:
    """Re-draw the model on an enlarged clock so clockwise endpoints are distinct.

    Every original position expands to a block laid out clockwise as
    [start slots][point-arc zone][end slots]; arcs passing through a block
    cover all of it, point arcs widen from the zone's first slot to their own
    slot, and slots within a group are assigned by ascending vertex id.  The
    intersection relation is re-checked pair by pair before returning.
    """
    n = m.n_positions
    if n == 0 or not m.arcs:
        return ArcModel(n_positions=n, arcs=dict(m.arcs))
    starts: dict[int, list[int]] = {p: [] for p in range(1, n + 1)}
    points: dict[int, list[int]] = {p: [] for p in range(1, n + 1)}
    ends: dict[int, list[int]] = {p: [] for p in range(1, n + 1)}
    for v, a in m.sorted_items():
        if a.start == a.end:
            points[a.start].append(v)
        else:
            starts[a.start].append(v)
            ends[a.end].append(v)
    base: dict[int, int] = {}
    total = 0
    for p in range(1, n + 1):
        base[p] = total + 1
        total += max(1, len(starts[p]) + len(points[p]) + len(ends[p]))
    new_start: dict[int, int] = {}
    new_end: dict[int, int] = {}
    for p in range(1, n + 1):
        zone_first = base[p] + len(starts[p])
        for idx, v in enumerate(starts[p]):
            new_start[v] = base[p] + idx
        for idx, v in enumerate(points[p]):
            new_start[v] = zone_first
            new_end[v] = zone_first + idx
        end_first = zone_first + len(points[p])
        for idx, v in enumerate(ends[p]):
            new_end[v] = end_first + idx
    new_arcs = {v: ClockArc(new_start[v], new_end[v]) for v in m.arcs}
    result = ArcModel(n_positions=total, arcs=new_arcs)
    verts = sorted(m.arcs)
    for a_idx, u in enumerate(verts):
        for w in verts[a_idx + 1:]:
            before = arcs_intersect(m.arcs[u], m.arcs[w], n)
            after = arcs_intersect(new_arcs[u], new_arcs[w], total)
            if before != after:
                raise NormalizationError(
                    f"normalization failed: pair ({u}, {w}) changed from "
                    f"{'meeting' if before else 'disjoint'}"
                )
    return result
