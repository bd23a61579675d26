from __future__ import annotations

import random
from itertools import permutations

import pytest

from carc.arcs import build_model, scan_anchor
from carc.graph import RPartiteGraph, adjacency_matrix
from carc.ordering import CircularOrdering, OrderingError, verify_gtc
from carc.rcircular import ScanResult, all_scans, row_scan, scan_dump, verify_r_circular

from support import random_rpartite_instance

# frozen from an exhaustive lex scan of the 10-vertex example's orderings
FIG2_FIRST_FAILING = (1, 2, 3, 4, 5, 7, 8, 9, 6, 10)
FIG2_FIRST_UNCOVERED = (1, 8)


def test_row_scan_fig2_position_10(fig2):
    s = row_scan(fig2, CircularOrdering.identity(10), 10)
    assert s == ScanResult(owner=10, anchor=9, reached=(9, 6, 3), terminal=3)


def test_row_scan_fig1_position_1_empty(fig1):
    s = row_scan(fig1, CircularOrdering.identity(8), 1)
    assert s.anchor == 7 and s.reached == () and s.terminal is None


def test_row_scan_edgeless():
    g = RPartiteGraph.build((1, 2, 1, 2), [])
    for i in range(1, 5):
        assert row_scan(g, CircularOrdering.identity(4), i).reached == ()


def test_row_scan_single_vertex():
    g = RPartiteGraph.build((1,), [])
    s = row_scan(g, CircularOrdering.identity(1), 1)
    assert s.anchor is None and s.reached == () and s.terminal is None


def test_row_scan_no_out_of_part_vertex():
    g = RPartiteGraph.build((1, 1, 1), [], r=2)
    s = row_scan(g, CircularOrdering.identity(3), 2)
    assert s.anchor is None and s.reached == ()


def test_row_scan_full_wrap_terminal_is_next_position():
    g = RPartiteGraph.build((1, 2, 1, 2), [(1, 2), (1, 4), (2, 3), (3, 4)])
    s = row_scan(g, CircularOrdering.identity(4), 1)
    assert set(s.reached) == {2, 4}
    assert s.terminal == 2 == scan_anchor(g, CircularOrdering.identity(4), 1)


def test_row_scan_position_check(fig1):
    with pytest.raises(OrderingError):
        row_scan(fig1, CircularOrdering.identity(8), 9)


def test_verify_r_circular_fig2_passes(fig2):
    assert verify_r_circular(fig2, CircularOrdering.identity(10)) is None


def test_verify_r_circular_edgeless():
    g = RPartiteGraph.build((1, 2, 2), [])
    for perm in permutations(range(1, 4)):
        assert verify_r_circular(g, CircularOrdering(perm)) is None


def test_verify_r_circular_fig2_first_failing_ordering(fig2):
    # everything lexicographically below the pinned ordering passes
    for perm in permutations(range(1, 11)):
        if perm < FIG2_FIRST_FAILING:
            assert verify_r_circular(fig2, CircularOrdering(perm)) is None
            continue
        assert perm == FIG2_FIRST_FAILING
        assert verify_r_circular(fig2, CircularOrdering(perm)) == FIG2_FIRST_UNCOVERED
        break


def test_terminal_matches_arc_builder_random():
    rng = random.Random(71)
    for _ in range(300):
        g = random_rpartite_instance(rng, rng.randint(1, 7), rng.randint(1, 3))
        seq = list(g.vertices)
        rng.shuffle(seq)
        order = CircularOrdering(tuple(seq))
        model = build_model(g, order)
        for s in all_scans(g, order):
            m_i = scan_anchor(g, order, s.owner)
            arc = model.arcs[order.vertex_at(s.owner)]
            assert arc.start == m_i and arc.end == s.owner
            if s.reached:
                assert s.terminal == m_i
            else:
                assert (arc.start, arc.end) == (s.owner, s.owner)


def _column_scan_via_matrix(g, order, j):
    """Transpose-side oracle: scan column j of the explicit matrix upward."""
    mat = adjacency_matrix(g, order)
    n = g.n
    seq = order.seq
    my_part = g.part_of(seq[j - 1])
    anchor = None
    reached = []
    wrapped = True
    for step in range(1, n):
        p = (j - 1 - step) % n + 1
        if g.part_of(seq[p - 1]) == my_part:
            continue
        if anchor is None:
            anchor = p
            if mat.at(p, j) == 0:
                return ScanResult(owner=j, anchor=anchor, reached=(), terminal=None)
        if mat.at(p, j) == 1:
            reached.append(p)
        else:
            wrapped = False
            break
    if not reached:
        return ScanResult(owner=j, anchor=anchor, reached=(), terminal=None)
    terminal = j % n + 1 if wrapped else reached[-1]
    return ScanResult(owner=j, anchor=anchor, reached=tuple(reached), terminal=terminal)


def test_column_scan_equals_row_scan_random():
    rng = random.Random(83)
    for _ in range(120):
        g = random_rpartite_instance(rng, rng.randint(1, 6), rng.randint(1, 3))
        seq = list(g.vertices)
        rng.shuffle(seq)
        order = CircularOrdering(tuple(seq))
        for j in range(1, g.n + 1):
            assert _column_scan_via_matrix(g, order, j) == row_scan(g, order, j)


def test_scan_result_structure_random():
    """Reached positions hold out-of-part neighbors; every position the walk
    skipped between consecutive harvested ones shares the owner's part."""
    rng = random.Random(101)
    nonempty = 0
    for _ in range(250):
        g = random_rpartite_instance(rng, rng.randint(1, 7), rng.randint(1, 3))
        seq = list(g.vertices)
        rng.shuffle(seq)
        order = CircularOrdering(tuple(seq))
        for s in all_scans(g, order):
            owner_v = order.vertex_at(s.owner)
            if s.anchor is not None:
                anchored = order.vertex_at(s.anchor)
                assert g.part_of(anchored) != g.part_of(owner_v)
                assert bool(s.reached) == g.adjacent(owner_v, anchored)
            else:
                assert s.reached == ()
            for p in s.reached:
                x = order.vertex_at(p)
                assert g.part_of(x) != g.part_of(owner_v)
                assert g.adjacent(owner_v, x)
            walk = [s.owner]
            for p in s.reached:
                prev = walk[-1]
                q = (prev - 2) % g.n + 1
                while q != p:
                    assert g.part_of(order.vertex_at(q)) == g.part_of(owner_v)
                    q = (q - 2) % g.n + 1
                walk.append(p)
            nonempty += bool(s.reached)
    assert nonempty > 200


def test_coverage_equivalent_to_gtc_random():
    rng = random.Random(97)
    for _ in range(500):
        g = random_rpartite_instance(rng, rng.randint(1, 7), rng.randint(1, 4))
        seq = list(g.vertices)
        rng.shuffle(seq)
        order = CircularOrdering(tuple(seq))
        assert (verify_r_circular(g, order) is None) == (verify_gtc(g, order) is None)


def test_scan_dump_format(fig2):
    lines = scan_dump(fig2, CircularOrdering.identity(10)).splitlines()
    assert len(lines) == 10
    assert lines[9] == "10: anchor=9 reached=[9,6,3] terminal=3"
    assert lines[0] == "1: anchor=9 reached=[9] terminal=9"
