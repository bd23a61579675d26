"""Exact membership decision with re-verifiable certificates.

The recognizer backtracks over partial clock assignments.  For every edge
already placed at positions p < q it tracks two monotone failure flags: the
inside condition is fixed once q is placed (everything between is placed),
and the outside condition can only lose ground as later positions fill in.
A branch dies as soon as some placed edge has both flags set: that prefix
already contains a blocking quadruple no completion can repair.  Position 1
is restricted to the smallest vertex of each twin class (same part, same
neighborhood), which preserves at least one relabeling of every passing
ordering.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import TYPE_CHECKING

from carc.arcs import (
    ArcModel,
    ArcModelError,
    build_model,
    extract_ordering,
    validate_model,
)
from carc.ordering import CircularOrdering, has_violation, verify_gtc
from carc.rcircular import verify_r_circular

if TYPE_CHECKING:
    from carc.graph import RPartiteGraph

BRUTEFORCE_MAX_N = 9
DEFAULT_LIMIT = 12
HARNESS_MAX_N = 8


class RecognitionError(ValueError):
    """Raised for out-of-scope inputs (size guards, non-complete host)."""


@dataclass(frozen=True)
class Decision:
    """Yes answers carry a re-verifiable ordering + model; no answers report
    how much of the search space was covered."""

    answer: str
    ordering: CircularOrdering | None
    model: ArcModel | None
    orderings_searched: int
    mode: str

    def to_dict(self) -> dict:
        doc: dict = {"answer": self.answer}
        if self.ordering is not None:
            doc["ordering"] = list(self.ordering.seq)
        if self.model is not None:
            doc["model"] = self.model.to_dict()
        doc["orderings_searched"] = self.orderings_searched
        doc["mode"] = self.mode
        return doc


def _certify(g: RPartiteGraph, order: CircularOrdering) -> ArcModel:
    """Build the model for a found ordering and insist both checks pass."""
    if verify_gtc(g, order) is not None:
        raise AssertionError("search returned an ordering that fails verification")
    model = build_model(g, order)
    if validate_model(g, model) is not None:
        raise AssertionError("constructed model fails validation")
    return model


def recognize_bruteforce(g: RPartiteGraph) -> Decision:
    """Try every permutation in lex order; first passing ordering wins."""
    if g.n > BRUTEFORCE_MAX_N:
        raise RecognitionError(f"n={g.n} exceeds brute-force guard {BRUTEFORCE_MAX_N}")
    count = 0
    for perm in permutations(range(1, g.n + 1)):
        count += 1
        order = CircularOrdering(perm)
        if verify_gtc(g, order) is None:
            return Decision(
                answer="yes",
                ordering=order,
                model=_certify(g, order),
                orderings_searched=count,
                mode="seq",
            )
    return Decision(answer="no", ordering=None, model=None, orderings_searched=count, mode="seq")


def twin_classes(g: RPartiteGraph) -> list[list[int]]:
    """Vertices grouped by (part, neighborhood); swapping twins is an automorphism."""
    groups: dict[tuple[int, int], list[int]] = {}
    for v in g.vertices:
        groups.setdefault((g.part_of(v), g.adj[v]), []).append(v)
    return sorted(groups.values())


class _Search:
    """Depth-first placement with per-edge monotone failure flags."""

    def __init__(self, g: RPartiteGraph):
        self.g = g
        self.n = g.n
        self.assigned: list[int] = [0] * (g.n + 1)  # position -> vertex
        self.used = 0
        # parallel lists: edge endpoints by position, inside-fail, outside-fail
        self.edge_p: list[int] = []
        self.edge_q: list[int] = []
        self.d1: list[bool] = []
        self.d2: list[bool] = []
        self.nodes = 0

    def place(self, t: int, v: int) -> tuple[int, list[int]] | None:
        """Extend the prefix with v at position t; None when pruned.

        Returns an undo token: (number of new edges, indices of flipped
        outside flags).
        """
        g = self.g
        part = g.part
        adj = g.adj
        assigned = self.assigned
        part_v = part[v - 1]
        adj_v = adj[v]
        flipped: list[int] = []
        added = 0
        dead = False
        # existing edges: t always falls in their wrap range
        for idx in range(len(self.edge_p)):
            if self.d2[idx]:
                continue
            u = assigned[self.edge_p[idx]]
            if part_v != part[u - 1] and not adj_v >> u & 1:
                self.d2[idx] = True
                flipped.append(idx)
                if self.d1[idx]:
                    dead = True
        # new edges (p, t): inside is final, outside seeded from [1..p)
        if not dead:
            for p in range(1, t):
                u = assigned[p]
                if not adj_v >> u & 1:
                    continue
                d1 = False
                for b in range(p + 1, t):
                    x = assigned[b]
                    if part[x - 1] != part_v and not adj_v >> x & 1:
                        d1 = True
                        break
                part_u = part[u - 1]
                adj_u = adj[u]
                d2 = False
                for d in range(1, p):
                    x = assigned[d]
                    if part[x - 1] != part_u and not adj_u >> x & 1:
                        d2 = True
                        break
                self.edge_p.append(p)
                self.edge_q.append(t)
                self.d1.append(d1)
                self.d2.append(d2)
                added += 1
                if d1 and d2:
                    dead = True
                    break
        self.assigned[t] = v
        self.used |= 1 << v
        token = (added, flipped)
        if dead:
            self.unplace(t, v, token)
            return None
        return token

    def unplace(self, t: int, v: int, token: tuple[int, list[int]]) -> None:
        added, flipped = token
        for _ in range(added):
            self.edge_p.pop()
            self.edge_q.pop()
            self.d1.pop()
            self.d2.pop()
        for idx in flipped:
            self.d2[idx] = False
        self.assigned[t] = 0
        self.used &= ~(1 << v)

    def run(self, first_candidates: list[int], order_key) -> tuple[int, ...] | None:
        n = self.n
        if n == 0:
            return ()
        rest = sorted(range(1, n + 1), key=order_key)

        def extend(t: int) -> tuple[int, ...] | None:
            self.nodes += 1
            if t > n:
                return tuple(self.assigned[1:])
            candidates = first_candidates if t == 1 else rest
            for v in candidates:
                if self.used >> v & 1:
                    continue
                token = self.place(t, v)
                if token is None:
                    continue
                found = extend(t + 1)
                if found is not None:
                    return found
                self.unplace(t, v, token)
            return None

        return extend(1)


def _search_orderings(
    g: RPartiteGraph, first_candidates: list[int], degree_order: bool
) -> tuple[tuple[int, ...] | None, int]:
    key = (lambda v: (-g.degree(v), v)) if degree_order else (lambda v: v)
    search = _Search(g)
    found = search.run(sorted(first_candidates, key=key), key)
    return found, search.nodes


def _parallel_worker(args: tuple[str, int]) -> tuple[tuple[int, ...] | None, int]:
    from carc.graph import parse_graph

    text, first = args
    g = parse_graph(text)
    return _search_orderings(g, [first], degree_order=True)


def recognize(
    g: RPartiteGraph, limit: int = DEFAULT_LIMIT, parallel: bool = False
) -> Decision:
    """Decide membership by pruned exhaustive search over clock assignments.

    Sequential mode explores vertices in ascending id, so a yes answer carries
    the lexicographically first passing ordering.  Parallel mode splits the
    position-1 branches across processes in descending-degree order; the
    answer is deterministic but the certificate may be any passing ordering.
    """
    if not g.host_is_complete:
        raise RecognitionError("recognition requires a complete host graph")
    if g.n > limit:
        raise RecognitionError(f"n={g.n} exceeds limit {limit}")
    firsts = sorted(cls[0] for cls in twin_classes(g))
    if g.n == 0:
        order = CircularOrdering(())
        return Decision("yes", order, ArcModel(0, {}), 1, "par" if parallel else "seq")
    if parallel:
        from carc.graph import serialize_graph

        text = serialize_graph(g)
        firsts.sort(key=lambda v: (-g.degree(v), v))
        total = 0
        winner: tuple[int, ...] | None = None
        with ProcessPoolExecutor() as pool:
            for found, nodes in pool.map(_parallel_worker, [(text, f) for f in firsts]):
                total += nodes
                if found is not None and winner is None:
                    winner = found
        if winner is None:
            return Decision("no", None, None, total, "par")
        order = CircularOrdering(winner)
        return Decision("yes", order, _certify(g, order), total, "par")
    found, nodes = _search_orderings(g, firsts, degree_order=False)
    if found is None:
        return Decision("no", None, None, nodes, "seq")
    order = CircularOrdering(found)
    return Decision("yes", order, _certify(g, order), nodes, "seq")


@dataclass(frozen=True)
class HarnessReport:
    """Cross-characterization agreement over every ordering of one graph."""

    agree: bool
    gtc_exists: bool
    r_circular_exists: bool
    pattern_free_exists: bool
    orderings_checked: int
    passing: int
    disagreement: dict | None

    def to_dict(self) -> dict:
        return {
            "agree": self.agree,
            "gtc_exists": self.gtc_exists,
            "r_circular_exists": self.r_circular_exists,
            "pattern_free_exists": self.pattern_free_exists,
            "orderings_checked": self.orderings_checked,
            "passing": self.passing,
            "disagreement": self.disagreement,
        }


def equivalence_harness(
    g: RPartiteGraph, limit: int = HARNESS_MAX_N, exhaustive: bool = False
) -> HarnessReport:
    """Run all three per-ordering checks over orderings in lex order, plus the
    full constructive round trip on each passing one.

    Stops at the first disagreement (minimal in lex order).  Once all three
    existence answers are settled positively the scan stops early, unless
    ``exhaustive`` forces a pass over every ordering; proving non-existence
    always scans all of them, hence the size guard.
    """
    if g.n > limit:
        raise RecognitionError(f"n={g.n} exceeds harness guard {limit}")
    gtc_seen = rc_seen = pat_seen = False
    checked = passing = 0

    def report(dis: dict | None) -> HarnessReport:
        return HarnessReport(
            agree=dis is None,
            gtc_exists=gtc_seen,
            r_circular_exists=rc_seen,
            pattern_free_exists=pat_seen,
            orderings_checked=checked,
            passing=passing,
            disagreement=dis,
        )

    for perm in permutations(range(1, g.n + 1)):
        checked += 1
        order = CircularOrdering(perm)
        gtc = verify_gtc(g, order) is None
        rc = verify_r_circular(g, order) is None
        pat = not has_violation(g, order)
        gtc_seen |= gtc
        rc_seen |= rc
        pat_seen |= pat
        if not gtc == rc == pat:
            return report(
                {
                    "kind": "verdict-mismatch",
                    "ordering": list(perm),
                    "gtc": gtc,
                    "r_circular": rc,
                    "pattern_free": pat,
                }
            )
        if not gtc:
            continue
        passing += 1
        model = build_model(g, order)
        bad_pair = validate_model(g, model)
        if bad_pair is not None:
            return report(
                {"kind": "model-invalid", "ordering": list(perm), "pair": list(bad_pair)}
            )
        back = _extract_or_none(model)
        if back is None or back.seq != order.seq or verify_gtc(g, back) is not None:
            return report({"kind": "round-trip", "ordering": list(perm)})
        if not exhaustive and gtc_seen and rc_seen and pat_seen:
            break
    return report(None)


def _extract_or_none(model: ArcModel) -> CircularOrdering | None:
    try:
        return extract_ordering(model)
    except ArcModelError:
        return None
