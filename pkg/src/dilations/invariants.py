"""Exact domination, matching, and transversal numbers with certificates.

All three invariants are computed by deterministic branch and bound over
bitmask state, followed by a second pass that extracts the lexicographically
smallest optimal witness, so certificates are reproducible across runs.
An exhaustive mode (plain subset enumeration) is available as a slow
reference path.

Domination uses co-occurrence adjacency: two hypergraph vertices are
adjacent when some hyperedge contains both. A vertex lying in no hyperedge
can only be dominated by itself and is therefore forced into every
dominating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Union

from .errors import SearchBudgetExceeded
from .graphs import Graph, _mask_to_list
from .hypergraphs import Hypergraph

DEFAULT_NODE_CAP = 10**8

Instance = Union[Graph, Hypergraph]


@dataclass(frozen=True)
class Certificate:
    """An invariant value plus an optimal witness.

    witness holds vertex indices for gamma/tau and edge indices for nu; it is
    the lexicographically smallest optimal witness under that order.
    """

    parameter: str  # "gamma" | "nu" | "tau"
    value: int
    witness: tuple[int, ...]
    mode: str  # "exhaustive" | "branch_and_bound"
    node_count: int

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter,
            "value": self.value,
            "witness": list(self.witness),
            "mode": self.mode,
            "node_count": self.node_count,
        }


def _as_hypergraph(x: Instance) -> Hypergraph:
    return Hypergraph.from_graph(x) if isinstance(x, Graph) else x


class _Budget:
    __slots__ = ("cap", "nodes")

    def __init__(self, cap: int):
        self.cap = cap
        self.nodes = 0

    def tick(self, best=None):
        self.nodes += 1
        if self.nodes > self.cap:
            raise SearchBudgetExceeded(
                f"search exceeded node cap {self.cap}",
                best_bound=best, node_count=self.nodes)


# -- generic minimum set cover (serves gamma and tau) ------------------------

def _greedy_cover(cover_masks: list[int], universe: int) -> list[int]:
    chosen = []
    covered = 0
    while covered != universe:
        best_s, best_gain = -1, 0
        for s, mask in enumerate(cover_masks):
            gain = (mask & ~covered).bit_count()
            if gain > best_gain:
                best_s, best_gain = s, gain
        if best_s == -1:  # uncoverable element: caller guarantees this cannot happen
            raise ValueError("universe not coverable")
        chosen.append(best_s)
        covered |= cover_masks[best_s]
    return chosen


def _packing_bound(union_masks: list[int], uncovered: int) -> int:
    """Greedy count of uncovered elements no two of which share a coverer."""
    count = 0
    blocked = 0
    m = uncovered
    while m:
        low = m & -m
        e = low.bit_length() - 1
        m ^= low
        if blocked >> e & 1:
            continue
        count += 1
        blocked |= union_masks[e]
    return count


def _coverage_infeasible(cover_masks: list[int], uncovered: int, budget_sets: int,
                         start: int = 0) -> bool:
    """True when even the `budget_sets` best remaining sets cannot cover everything."""
    if budget_sets <= 0:
        return uncovered != 0
    need = uncovered.bit_count()
    gains = sorted((m & uncovered).bit_count() for m in cover_masks[start:])[-budget_sets:]
    return sum(gains) < need


def _min_cover(cover_masks: list[int], elem_coverers: list[list[int]],
               universe: int,
               choose: Callable[[int], tuple[int, list[int]]],
               budget: _Budget) -> tuple[int, tuple[int, ...]]:
    """Minimum number of cover sets whose union is the universe, plus the
    lexicographically smallest witness of that size."""
    if universe == 0:
        return 0, ()
    union_masks = [0] * (universe.bit_length())
    for e in range(universe.bit_length()):
        if universe >> e & 1:
            acc = 0
            for s in elem_coverers[e]:
                acc |= cover_masks[s]
            union_masks[e] = acc
    greedy = _greedy_cover(cover_masks, universe)
    best_value = len(greedy)

    def descend(covered: int, forbidden: int, depth: int):
        # solution space of this node: covers extending the current choices and
        # avoiding `forbidden`; branching on the i-th candidate forbids the
        # earlier ones, so the branches partition the space (no permutation
        # of the same cover is ever explored twice)
        nonlocal best_value
        budget.tick(best_value)
        uncovered = universe & ~covered
        if not uncovered:
            best_value = min(best_value, depth)
            return
        lb = _packing_bound(union_masks, uncovered)
        if depth + lb >= best_value:
            return
        if _coverage_infeasible(cover_masks, uncovered, best_value - depth - 1):
            return
        _, candidates = choose(uncovered)
        usable = [s for s in candidates if not (forbidden >> s & 1)]
        seen = 0
        for s in usable:
            descend(covered | cover_masks[s], forbidden | seen, depth + 1)
            seen |= 1 << s

    descend(0, 0, 0)

    # lexicographic reconstruction: first witness of optimal size in subset order
    n_sets = len(cover_masks)
    target = best_value
    witness: Optional[tuple[int, ...]] = None

    def lex(start: int, covered: int, chosen: list[int]):
        nonlocal witness
        if witness is not None:
            return
        budget.tick(best_value)
        uncovered = universe & ~covered
        if not uncovered:
            # a complete cover here always has exactly `target` sets: anything
            # smaller would contradict optimality of the value phase
            witness = tuple(chosen)
            return
        remaining = target - len(chosen)
        if _packing_bound(union_masks, uncovered) > remaining:
            return
        if _coverage_infeasible(cover_masks, uncovered, remaining, start):
            return
        for s in range(start, n_sets):
            if n_sets - s < remaining:
                break
            if cover_masks[s] & uncovered == 0:
                continue
            chosen.append(s)
            lex(s + 1, covered | cover_masks[s], chosen)
            chosen.pop()
            if witness is not None:
                return

    lex(0, 0, [])
    if witness is None:
        raise RuntimeError("internal error: optimal cover vanished during reconstruction")
    return best_value, witness


def _min_cover_exhaustive(cover_masks: list[int], universe: int,
                          budget: _Budget) -> tuple[int, tuple[int, ...]]:
    n_sets = len(cover_masks)
    for size in range(n_sets + 1):
        for combo in combinations(range(n_sets), size):
            budget.tick()
            acc = 0
            for s in combo:
                acc |= cover_masks[s]
            if acc & universe == universe:
                return size, combo
    raise ValueError("universe not coverable")


# -- gamma ------------------------------------------------------------------

def domination_number(x: Instance, mode: str = "branch_and_bound",
                      node_cap: int = DEFAULT_NODE_CAP) -> Certificate:
    """Minimum set of vertices such that every vertex is chosen or adjacent
    to a chosen one (adjacency = co-occurrence in a hyperedge)."""
    h = _as_hypergraph(x)
    nbhd = h.closed_neighborhoods()
    universe = (1 << h.m) - 1
    budget = _Budget(node_cap)
    if mode == "exhaustive":
        value, witness = _min_cover_exhaustive(nbhd, universe, budget)
        return Certificate("gamma", value, witness, mode, budget.nodes)

    coverers = [
        _mask_to_list(nbhd[v]) for v in range(h.m)
    ]  # u dominates v iff u in N[v], and co-occurrence is symmetric

    def choose(uncovered: int) -> tuple[int, list[int]]:
        best_v, best_deg = -1, None
        m = uncovered
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = nbhd[v].bit_count()
            if best_deg is None or d < best_deg:
                best_v, best_deg = v, d
        cands = sorted(coverers[best_v],
                       key=lambda s: (-(nbhd[s] & uncovered).bit_count(), s))
        return best_v, cands

    value, witness = _min_cover(nbhd, coverers, universe, choose, budget)
    return Certificate("gamma", value, witness, "branch_and_bound", budget.nodes)


# -- tau ----------------------------------------------------------------------

def transversal_number(x: Instance, mode: str = "branch_and_bound",
                       node_cap: int = DEFAULT_NODE_CAP) -> Certificate:
    """Minimum set of vertices meeting every hyperedge."""
    h = _as_hypergraph(x)
    n_edges = h.edge_count
    universe = (1 << n_edges) - 1
    incidence = [0] * h.m
    for i, e in enumerate(h.edge_masks):
        for v in _mask_to_list(e):
            incidence[v] |= 1 << i
    budget = _Budget(node_cap)
    if mode == "exhaustive":
        value, witness = _min_cover_exhaustive(incidence, universe, budget)
        return Certificate("tau", value, witness, mode, budget.nodes)

    edge_vertices = [h.edge_vertices(i) for i in range(n_edges)]

    def choose(uncovered: int) -> tuple[int, list[int]]:
        # max-degree uncovered edge: largest total uncovered-incidence of its vertices
        best_i, best_score = -1, -1
        m = uncovered
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            score = sum((incidence[v] & uncovered).bit_count() for v in edge_vertices[i])
            if score > best_score:
                best_i, best_score = i, score
        cands = sorted(edge_vertices[best_i],
                       key=lambda v: (-(incidence[v] & uncovered).bit_count(), v))
        return best_i, cands

    value, witness = _min_cover(incidence, edge_vertices, universe, choose, budget)
    return Certificate("tau", value, witness, "branch_and_bound", budget.nodes)


# -- nu -------------------------------------------------------------------------

def matching_number(x: Instance, mode: str = "branch_and_bound",
                    node_cap: int = DEFAULT_NODE_CAP) -> Certificate:
    """Maximum number of pairwise disjoint hyperedges; witness is a set of
    edge indices."""
    h = _as_hypergraph(x)
    masks = h.edge_masks
    n_edges = len(masks)
    budget = _Budget(node_cap)

    if mode == "exhaustive":
        for size in range(n_edges, -1, -1):
            for combo in combinations(range(n_edges), size):
                budget.tick()
                acc = 0
                ok = True
                for i in combo:
                    if acc & masks[i]:
                        ok = False
                        break
                    acc |= masks[i]
                if ok:
                    return Certificate("nu", size, combo, mode, budget.nodes)
        return Certificate("nu", 0, (), mode, budget.nodes)

    # greedy initial packing
    best_value = 0
    acc = 0
    for i in range(n_edges):
        if not (acc & masks[i]):
            best_value += 1
            acc |= masks[i]

    def descend(candidates: list[int], count: int):
        nonlocal best_value
        budget.tick(best_value)
        if not candidates:
            best_value = max(best_value, count)
            return
        # pairwise-disjoint edges have distinct lowest vertices, so the number
        # of distinct minima among the candidates bounds what can still be added
        ub = 0
        seen_min = 0
        for j in candidates:
            low = masks[j] & -masks[j]
            if not (seen_min & low):
                ub += 1
                seen_min |= low
        if count + ub <= best_value:
            return
        first = candidates[0]
        descend([j for j in candidates[1:] if not (masks[j] & masks[first])], count + 1)
        descend(candidates[1:], count)

    descend(list(range(n_edges)), 0)

    target = best_value
    witness: Optional[tuple[int, ...]] = None

    def lex(start: int, used: int, chosen: list[int]):
        nonlocal witness
        if witness is not None:
            return
        budget.tick(best_value)
        if len(chosen) == target:
            witness = tuple(chosen)
            return
        for i in range(start, n_edges):
            if n_edges - i < target - len(chosen):
                break
            if used & masks[i]:
                continue
            chosen.append(i)
            lex(i + 1, used | masks[i], chosen)
            chosen.pop()
            if witness is not None:
                return

    lex(0, 0, [])
    if witness is None:
        raise RuntimeError("internal error: optimal packing vanished during reconstruction")
    return Certificate("nu", target, witness, "branch_and_bound", budget.nodes)


# -- certificate checking and KEG ------------------------------------------------

def check_certificate(x: Instance, cert: Certificate) -> bool:
    """Re-verify that the witness has the claimed size and defining property
    (not optimality: that is what the value search established)."""
    h = _as_hypergraph(x)
    if cert.parameter == "nu":
        if len(cert.witness) != cert.value:
            return False
        acc = 0
        for i in cert.witness:
            if not (0 <= i < h.edge_count) or acc & h.edge_masks[i]:
                return False
            acc |= h.edge_masks[i]
        return True
    if len(cert.witness) != cert.value:
        return False
    chosen = 0
    for v in cert.witness:
        if not (0 <= v < h.m):
            return False
        chosen |= 1 << v
    if cert.parameter == "tau":
        return all(e & chosen for e in h.edge_masks)
    if cert.parameter == "gamma":
        covered = chosen
        for e in h.edge_masks:
            if e & chosen:
                covered |= e
        return covered == (1 << h.m) - 1
    return False


@dataclass(frozen=True)
class KegVerdict:
    """Whether tau equals nu, with both certificates."""

    keg: bool
    tau: Certificate
    nu: Certificate

    def to_json(self) -> dict:
        return {"keg": self.keg, "tau": self.tau.to_json(), "nu": self.nu.to_json()}


def is_keg(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> KegVerdict:
    """König-Egerváry test: transversal number equals matching number."""
    tau = transversal_number(g, node_cap=node_cap)
    nu = matching_number(g, node_cap=node_cap)
    return KegVerdict(tau.value == nu.value, tau, nu)
