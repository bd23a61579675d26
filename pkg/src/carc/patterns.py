"""Generative catalog of forbidden 4-vertex configurations and witness lookup.

A configuration assigns abstract part labels to the four ordered roles
(i, j, k, l) and splits the six role pairs into present and absent edges.
Two templates generate everything: template A requires the edge ik with jk
and il absent (j outside k's part, l outside i's part); template B is its
mirror with the edge jl and kl, ij absent.  Same-label pairs are always
absent; every unconstrained cross-label pair is enumerated both ways.  Labels
are canonical by first occurrence, so no configuration uses more than four
and the catalog stabilizes at four colors.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING

from carc.ordering import CircularOrdering, ViolationWitness

if TYPE_CHECKING:
    from carc.graph import RPartiteGraph

ROLES = ("i", "j", "k", "l")
ALL_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

_IJ, _IK, _IL, _JK, _JL, _KL = ALL_PAIRS


class CatalogError(ValueError):
    """Raised for bad catalog queries or non-witness classification input."""


@dataclass(frozen=True)
class _Template:
    name: str
    base: tuple[int, int]
    required_absent: tuple[tuple[int, int], ...]
    # free pairs in drawing order; subsets enumerate by size then position
    optional_order: tuple[tuple[int, int], ...]


_TEMPLATE_A = _Template("A", base=_IK, required_absent=(_JK, _IL), optional_order=(_IJ, _KL, _JL))
_TEMPLATE_B = _Template("B", base=_JL, required_absent=(_KL, _IJ), optional_order=(_JK, _IL, _IK))
_TEMPLATES = (_TEMPLATE_A, _TEMPLATE_B)


@dataclass(frozen=True)
class PatternConfig:
    """One catalog entry: a coloring of the four roles plus its present edges."""

    colors: tuple[int, int, int, int]
    present: frozenset[tuple[int, int]]
    templates: tuple[str, ...]
    figure: str
    index: int

    @property
    def absent(self) -> frozenset[tuple[int, int]]:
        return frozenset(ALL_PAIRS) - self.present

    @property
    def pattern_id(self) -> str:
        return f"{self.figure}.{self.index}"

    def present_names(self) -> list[tuple[str, str]]:
        return [(ROLES[a], ROLES[b]) for a, b in sorted(self.present)]

    def to_dict(self) -> dict:
        return {
            "colors": list(self.colors),
            "edges": [[a, b] for a, b in self.present_names()],
            "figure": self.figure,
        }


def _matches_template(colors, present, template: _Template) -> bool:
    if template.base not in present:
        return False
    if any(pair in present for pair in template.required_absent):
        return False
    for a, b in template.required_absent + (template.base,):
        if colors[a] == colors[b]:
            return False
    return all(colors[a] != colors[b] for a, b in present)


def _canonical_colorings(max_labels: int) -> list[tuple[int, ...]]:
    """First-occurrence-canonical label tuples for the four roles, lex order."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], used: int) -> None:
        if len(prefix) == 4:
            out.append(prefix)
            return
        for label in range(1, min(used + 1, max_labels) + 1):
            extend(prefix + (label,), max(used, label))

    extend((1,), 1)
    return out


def _subsets_in_drawing_order(items: tuple[tuple[int, int], ...]):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def enumerate_catalog(c: int) -> list[PatternConfig]:
    """Every canonical configuration over at most c colors, deterministically.

    Entries are grouped by color count (2, 3, then 4), template A before B,
    colorings in lex order, and optional-edge subsets by size then position.
    A configuration matched by both templates appears once, under A.  Counts
    are 4, 28, and 43 for c = 2, 3, and >= 4.
    """
    if c < 2:
        raise CatalogError(f"need at least 2 colors, got {c}")
    cap = min(c, 4)
    entries: list[PatternConfig] = []
    figure_counters = {"6": 0, "7": 0, "14": 0}
    for color_count in range(2, cap + 1):
        figure = {2: "6", 3: "7", 4: "14"}[color_count]
        colorings = [col for col in _canonical_colorings(color_count) if len(set(col)) == color_count]
        for template in _TEMPLATES:
            for colors in colorings:
                if any(colors[a] == colors[b] for a, b in template.required_absent + (template.base,)):
                    continue
                free = tuple(
                    pair for pair in template.optional_order if colors[pair[0]] != colors[pair[1]]
                )
                for subset in _subsets_in_drawing_order(free):
                    present = frozenset(subset) | {template.base}
                    matched = tuple(
                        t.name for t in _TEMPLATES if _matches_template(colors, present, t)
                    )
                    if template.name == "B" and "A" in matched:
                        continue  # already emitted under A
                    figure_counters[figure] += 1
                    entries.append(
                        PatternConfig(
                            colors=colors,
                            present=present,
                            templates=matched,
                            figure=figure,
                            index=figure_counters[figure],
                        )
                    )
    return entries


@lru_cache(maxsize=1)
def _full_catalog_index() -> dict[tuple[tuple[int, ...], frozenset], PatternConfig]:
    return {(cfg.colors, cfg.present): cfg for cfg in enumerate_catalog(4)}


def canonicalize_quadruple(
    g: RPartiteGraph, order: CircularOrdering, quad: tuple[int, int, int, int]
) -> tuple[tuple[int, ...], frozenset]:
    """Colors (first-occurrence labels) and present role pairs of a quadruple."""
    verts = [order.vertex_at(p) for p in quad]
    labels: dict[int, int] = {}
    colors = []
    for v in verts:
        p = g.part_of(v)
        labels.setdefault(p, len(labels) + 1)
        colors.append(labels[p])
    present = frozenset(
        (a, b) for a, b in ALL_PAIRS if g.adjacent(verts[a], verts[b])
    )
    return tuple(colors), present


def _recheck_witness(g: RPartiteGraph, order: CircularOrdering, w: ViolationWitness) -> None:
    p, q = w.base_edge
    n = g.n
    side_ok = w.outer > q if w.template == "A" else w.outer < p
    ok = (
        w.template in ("A", "B")
        and 1 <= p < q <= n
        and p < w.inner < q
        and 1 <= w.outer <= n
        and side_ok
    )
    if ok:
        vp, vq = order.vertex_at(p), order.vertex_at(q)
        vi, vo = order.vertex_at(w.inner), order.vertex_at(w.outer)
        ok = (
            g.adjacent(vp, vq)
            and g.part_of(vi) != g.part_of(vq)
            and not g.adjacent(vi, vq)
            and g.part_of(vo) != g.part_of(vp)
            and not g.adjacent(vo, vp)
        )
    if not ok:
        raise CatalogError(f"not a witness for this graph and ordering: {w.to_dict()}")


def classify_witness(
    g: RPartiteGraph, order: CircularOrdering, w: ViolationWitness
) -> PatternConfig:
    """Map a genuine witness's induced colored configuration to its catalog entry."""
    _recheck_witness(g, order, w)
    key = canonicalize_quadruple(g, order, w.quadruple())
    try:
        return _full_catalog_index()[key]
    except KeyError:  # unreachable for genuine witnesses; guards catalog drift
        raise CatalogError(f"configuration not in catalog: {key}") from None
