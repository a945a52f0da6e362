from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from dilations.errors import SearchBudgetExceeded
from dilations.graphs import (Graph, complete, complete_minus_clique,
                              cp_vee_cq, cycle, g_nr, ghat_nr, star)
from dilations.dilation import generalized_power
from dilations.hypergraphs import Hypergraph, builtin_hypergraph
from dilations.invariants import (Certificate, check_certificate,
                                  domination_number, is_keg, matching_number,
                                  transversal_number)
from dilations.isomorphism import enumerate_connected
from oracles import brute_gamma, brute_nu, brute_tau


@st.composite
def hypergraphs(draw, max_m=9, max_edges=7):
    m = draw(st.integers(min_value=1, max_value=max_m))
    n_edges = draw(st.integers(min_value=0, max_value=max_edges))
    edges = []
    for _ in range(n_edges):
        size = draw(st.integers(min_value=1, max_value=min(4, m)))
        edges.append(draw(st.sets(st.integers(min_value=0, max_value=m - 1),
                                  min_size=size, max_size=size)))
    return Hypergraph.from_edge_sets(m, edges)


class TestAgainstOracles:
    @settings(max_examples=150, deadline=None)
    @given(h=hypergraphs())
    def test_values_match_bruteforce(self, h):
        assert domination_number(h).value == brute_gamma(h)
        assert matching_number(h).value == brute_nu(h)
        assert transversal_number(h).value == brute_tau(h)

    @settings(max_examples=60, deadline=None)
    @given(h=hypergraphs(max_m=7, max_edges=6))
    def test_modes_agree_including_witness(self, h):
        for fn in (domination_number, matching_number, transversal_number):
            bb = fn(h)
            ex = fn(h, mode="exhaustive")
            assert bb.value == ex.value
            assert bb.witness == ex.witness
            assert bb.mode == "branch_and_bound" and ex.mode == "exhaustive"

    @settings(max_examples=100, deadline=None)
    @given(h=hypergraphs())
    def test_general_inequalities(self, h):
        # gamma <= tau needs every vertex to lie in some edge: an isolated
        # vertex is forced into every dominating set but no transversal
        covered = 0
        for e in h.edge_masks:
            covered |= e
        gamma = domination_number(h).value
        nu = matching_number(h).value
        tau = transversal_number(h).value
        assert nu <= tau
        if covered == (1 << h.m) - 1:
            assert gamma <= tau
        else:
            isolated = h.m - covered.bit_count()
            assert gamma <= tau + isolated


class TestWitnesses:
    @settings(max_examples=60, deadline=None)
    @given(h=hypergraphs(max_m=7, max_edges=6))
    def test_certificates_recheck(self, h):
        for fn in (domination_number, matching_number, transversal_number):
            cert = fn(h)
            assert check_certificate(h, cert)
            assert len(cert.witness) == cert.value

    @settings(max_examples=40, deadline=None)
    @given(h=hypergraphs(max_m=6, max_edges=5))
    def test_witness_is_lex_smallest(self, h):
        gamma = domination_number(h)
        assert gamma.witness == _lex_min_cover_witness(h, "gamma", gamma.value)
        tau = transversal_number(h)
        assert tau.witness == _lex_min_cover_witness(h, "tau", tau.value)
        nu = matching_number(h)
        assert nu.witness == _lex_min_packing_witness(h, nu.value)

    def test_tampered_certificate_rejected(self):
        h = Hypergraph.from_graph(cycle(5))
        cert = transversal_number(h)
        bad = Certificate("tau", cert.value, cert.witness[:-1] + (0,),
                          cert.mode, cert.node_count)
        assert not check_certificate(h, bad)


def _lex_min_cover_witness(h, parameter, value):
    check = (lambda c: _dominates(h, c)) if parameter == "gamma" else (
        lambda c: all(e & _mask(c) for e in h.edge_masks))
    for combo in combinations(range(h.m), value):
        if check(combo):
            return combo
    raise AssertionError("no witness of the claimed size")


def _mask(combo):
    out = 0
    for v in combo:
        out |= 1 << v
    return out


def _dominates(h, combo):
    chosen = _mask(combo)
    covered = chosen
    for e in h.edge_masks:
        if e & chosen:
            covered |= e
    return covered == (1 << h.m) - 1


def _lex_min_packing_witness(h, value):
    for combo in combinations(range(h.edge_count), value):
        acc = 0
        ok = True
        for i in combo:
            if acc & h.edge_masks[i]:
                ok = False
                break
            acc |= h.edge_masks[i]
        if ok:
            return combo
    raise AssertionError("no packing of the claimed size")


class TestFrozenValues:
    def test_matching_examples(self):
        assert matching_number(cp_vee_cq(5, 3)).value == 3
        assert matching_number(complete(2)).value == 1
        assert matching_number(g_nr(4, 1)).value == 4
        assert matching_number(builtin_hypergraph("fano")).value == 1

    def test_transversal_examples(self):
        assert transversal_number(cp_vee_cq(4, 3)).value == 3
        assert transversal_number(complete_minus_clique(3, 2)).value == 4
        assert transversal_number(Hypergraph(4, [])).value == 0

    def test_domination_examples(self):
        assert domination_number(g_nr(3, 1)).value == 3
        assert domination_number(ghat_nr(3, 1)).value == 2
        assert domination_number(star(7)).value == 1
        h1, _ = generalized_power(cycle(5), 4, 1)
        assert domination_number(h1).value == 3
        h0, _ = generalized_power(cycle(5), 4, 2)
        assert domination_number(h0).value == 2

    def test_isolated_vertices_forced(self):
        # three isolated vertices forced, plus one endpoint of the edge
        h = Hypergraph.from_edge_sets(5, [[0, 1]])
        cert = domination_number(h)
        assert cert.value == 4
        assert set(cert.witness) >= {2, 3, 4}
        assert cert.witness == (0, 2, 3, 4)  # lexicographically smallest

    def test_empty_hypergraph(self):
        h = Hypergraph(0, [])
        assert domination_number(h).value == 0
        assert matching_number(h).value == 0
        assert transversal_number(h).value == 0


class TestKeg:
    def test_examples(self):
        assert is_keg(cycle(4)).keg
        v = is_keg(cp_vee_cq(4, 3))
        assert v.keg and v.tau.value == 3 and v.nu.value == 3
        v = is_keg(cp_vee_cq(3, 3))
        assert not v.keg and v.tau.value == 3 and v.nu.value == 2
        v = is_keg(complete(5))
        assert not v.keg and v.tau.value == 4 and v.nu.value == 2

    def test_koenig_on_connected_bipartite(self):
        # every connected bipartite graph satisfies tau = nu
        for n in range(2, 9):
            for g in enumerate_connected(n, bipartite=True):
                assert is_keg(g).keg, g.edges()


class TestHereditarySamples:
    def test_200_sampled_dilation_pairs(self):
        import random
        import warnings
        from dilations.dilation import RankDeficitWarning, random_dilation
        rng = random.Random(314)
        pairs = 0
        while pairs < 200:
            n = rng.randint(2, 8)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < 0.45]
            if not edges:
                continue
            g = Graph.from_edges(n, edges)
            if min(g.degrees()) == 0:
                continue  # the identities presuppose every vertex has an edge
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RankDeficitWarning)
                h, _ = random_dilation(g, 4 + pairs % 3, seed=pairs)
            assert matching_number(h).value == matching_number(g).value
            assert transversal_number(h).value == transversal_number(g).value
            gamma_g = domination_number(g).value
            gamma_h = domination_number(h).value
            assert gamma_g <= gamma_h <= transversal_number(g).value
            pairs += 1


class TestBudget:
    def test_node_cap_raises(self):
        h, _ = generalized_power(complete(8), 4, 1)
        with pytest.raises(SearchBudgetExceeded) as info:
            domination_number(h, node_cap=10)
        assert info.value.node_count > 10

    def test_node_count_reported(self):
        cert = domination_number(cycle(6))
        assert cert.node_count > 0
