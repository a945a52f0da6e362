"""Canonical forms, isomorphism testing, and small connected-graph enumeration.

The canonical form is computed by equitable partition refinement with
individualization on the first non-singleton cell. Cell-homogeneous
partitions (every cell a clique or independent set, every cell pair joined
completely or not at all) short-circuit the search, which keeps highly
symmetric graphs such as complete multipartite graphs cheap.

Enumeration of connected graphs proceeds by vertex augmentation: every
connected graph on n+1 vertices arises from a connected graph on n vertices
by attaching a new vertex to a non-empty neighborhood, so augmenting class
representatives and deduplicating by canonical form yields exactly one
representative per isomorphism class.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .errors import CapacityError
from .graphs import Graph, _two_coloring, to_graph6

ENUM_MAX_N = 9


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation placing g in canonical form: position i holds an original vertex."""
    if g.n == 0:
        return ()
    best: list[Optional[tuple]] = [None, None]  # code, ordering

    def code_for(order: list[int]) -> tuple:
        pos = [0] * g.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = [0] * g.n
        for v in range(g.n):
            m = g.adj[v]
            acc = 0
            while m:
                low = m & -m
                acc |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows[pos[v]] = acc
        return tuple(rows)

    def search(cells: list[list[int]]):
        cells = _refine(g, cells)
        if all(len(c) == 1 for c in cells) or _homogeneous(g, cells):
            order = [v for cell in cells for v in cell]
            code = code_for(order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        target = next(i for i, c in enumerate(cells) if len(c) > 1)
        for v in cells[target]:
            branched = (cells[:target]
                        + [[v], [u for u in cells[target] if u != v]]
                        + cells[target + 1:])
            search(branched)

    degs = g.degrees()
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(degs[v], []).append(v)
    initial = [by_degree[d] for d in sorted(by_degree)]
    search(initial)
    return tuple(best[1])


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into every cell."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple, list[int]] = {}
            for v in cell:
                key = tuple((g.adj[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        cells = new_cells
        if not changed:
            return cells


def _homogeneous(g: Graph, cells: list[list[int]]) -> bool:
    """True if any within-cell ordering yields the same adjacency code.

    Assumes an equitable partition (as produced by _refine), so per-cell
    neighbor counts are uniform and checking one value per vertex suffices.
    """
    masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        masks.append(m)
    for i, cell in enumerate(cells):
        size = len(cell)
        if size > 1:
            inner = size - 1
            for v in cell:
                d = (g.adj[v] & masks[i]).bit_count()
                if d != 0 and d != inner:
                    return False
        for j in range(i + 1, len(cells)):
            other = len(cells[j])
            for v in cell:
                d = (g.adj[v] & masks[j]).bit_count()
                if d != 0 and d != other:
                    return False
    return True


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> str:
    """Canonical code: the graph6 string of the canonically relabeled graph."""
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return to_graph6(g.relabel(perm))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


# -- enumeration ----------------------------------------------------------------

_connected_cache: dict[int, tuple[Graph, ...]] = {}


def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n in _connected_cache:
        return _connected_cache[n]
    if n == 1:
        result: tuple[Graph, ...] = (Graph(1, [0]),)
    else:
        prev = _connected_classes(n - 1)
        seen: dict[str, Graph] = {}
        for base in prev:
            base_edges = base.edges()
            for nbhd in range(1, 1 << (n - 1)):
                edges = list(base_edges)
                m = nbhd
                while m:
                    low = m & -m
                    edges.append((low.bit_length() - 1, n - 1))
                    m ^= low
                cand = Graph.from_edges(n, edges)
                code = canonical_form(cand)
                if code not in seen:
                    seen[code] = cand
        result = tuple(seen[c] for c in sorted(seen))
    _connected_cache[n] = result
    return result


def enumerate_connected(n: int, min_degree: Optional[int] = None,
                        bipartite: Optional[bool] = None) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    `bipartite=True` keeps only bipartite graphs, `False` only non-bipartite;
    deterministic order (sorted by canonical code).
    """
    if not (1 <= n <= ENUM_MAX_N):
        raise CapacityError(f"enumeration supports 1 <= n <= {ENUM_MAX_N}, got {n}")
    for g in _connected_classes(n):
        if min_degree is not None and (g.n == 0 or min(g.degrees()) < min_degree):
            continue
        if bipartite is not None:
            is_bip = _two_coloring(g) is not None
            if is_bip != bipartite:
                continue
        yield g
