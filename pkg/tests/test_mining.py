from __future__ import annotations

import json

from carc.graph import parse_graph
from carc.mining import bipartite_from_mask, canonical_masks, find_smallest_negative_bigraph


def test_all_bipartite_graphs_up_to_seven_vertices_are_members():
    assert find_smallest_negative_bigraph(max_n=7) is None


def test_mining_reproduces_the_pinned_fixture(negative_fixture):
    g, a, b, mask = find_smallest_negative_bigraph(max_n=8)
    assert [a, b] == negative_fixture["split"]
    assert mask == negative_fixture["mask"]
    assert g == parse_graph(json.dumps(negative_fixture["graph"]))


def test_canonical_masks_are_orbit_minima():
    masks = list(canonical_masks(2, 2))
    assert masks[0] == 0
    # 2x2 bipartite graphs up to symmetry: 0, 1, or 2 edges (matching or path)
    # and 3 or 4 edges
    assert len(masks) == 6
    seen_edge_counts = sorted(bin(m).count("1") for m in masks)
    assert seen_edge_counts == [0, 1, 2, 2, 3, 4]


def test_bipartite_from_mask_layout():
    g = bipartite_from_mask(2, 3, 0b000011)
    assert g.part == (1, 1, 2, 2, 2)
    assert sorted(g.edges) == [(1, 3), (1, 4)]
