import random
from itertools import product

import pytest

from permpat.bigraphs import (BipartiteGraph, ContractionPlan, Power,
                              adjacency, bounds, census_avoiding_graphs,
                              contract, fiber_size, graph_of_word,
                              ordered_contains, ordered_contains_bruteforce,
                              pattern_graph)
from permpat.counting import count_avoiders, count_multiset_avoiders
from permpat.errors import BudgetExceeded, ParseError
from permpat.matrices import matrix_contains
from permpat.words import MultisetSpec, Word, contains

W = Word.parse

G1212 = graph_of_word(W("1212"), MultisetSpec.regular(2, 2))
G111 = graph_of_word(W("111"), MultisetSpec((3,)))
PLAN22 = ContractionPlan(MultisetSpec.regular(2, 2))
PLAN3 = ContractionPlan(MultisetSpec((3,)))


def graphs_on(a, b):
    for mask in range(1 << (a * b)):
        yield BipartiteGraph.from_mask(a, b, mask)


def random_graph(rng, a, b):
    return BipartiteGraph.from_mask(a, b, rng.getrandbits(a * b))


class TestBipartiteGraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            BipartiteGraph(0, 1, frozenset())
        with pytest.raises(ValueError):
            BipartiteGraph(2, 2, frozenset({(3, 1)}))

    def test_mask_roundtrip(self):
        for mask in range(1 << 6):
            g = BipartiteGraph.from_mask(3, 2, mask)
            assert g.to_mask() == mask

    def test_text_roundtrip(self):
        text = G1212.to_text()
        assert text.splitlines()[0] == "4 2"
        assert BipartiteGraph.parse(text) == G1212

    def test_parse_rejects_garbage(self):
        with pytest.raises(ParseError):
            BipartiteGraph.parse("")
        with pytest.raises(ParseError):
            BipartiteGraph.parse("2 2\n1 x\n")

    def test_as_dict_mirrors_text(self):
        blob = G1212.as_dict()
        assert blob == {"left_size": 4, "right_size": 2,
                        "edges": [[1, 1], [2, 2], [3, 1], [4, 2]]}


class TestGraphOfWord:
    def test_multiset_word(self):
        assert G1212.left_size == 4 and G1212.right_size == 2
        assert G1212.edges == {(1, 1), (2, 2), (3, 1), (4, 2)}

    def test_repeated_letter_word(self):
        assert G111.left_size == 3 and G111.right_size == 1
        assert G111.edges == {(1, 1), (2, 1), (3, 1)}

    def test_singleton(self):
        g = graph_of_word(W("1"), MultisetSpec((1,)))
        assert g.edges == {(1, 1)}

    def test_one_edge_per_position(self):
        g = pattern_graph(W("23718465"))
        assert len(g.edges) == 8
        assert sorted(i for i, _ in g.edges) == list(range(1, 9))

    def test_rejects_mismatched_spec(self):
        with pytest.raises(ValueError):
            graph_of_word(W("1212"), MultisetSpec((2, 1)))


class TestOrderedContains:
    def test_counterexample_pair_avoids(self):
        # right-vertex degree in G1212 never reaches three
        assert not ordered_contains(G1212, G111)

    def test_empty_pattern_graph_fits(self):
        P = random_graph(random.Random(1), 4, 3)
        Q = BipartiteGraph(2, 2, frozenset())
        assert ordered_contains(P, Q)

    def test_oversized_pattern(self):
        assert not ordered_contains(G111, G1212)

    def test_word_consequence(self):
        assert ordered_contains(pattern_graph(W("23718465")),
                                pattern_graph(W("312")))

    def test_agrees_with_bruteforce(self):
        rng = random.Random(7)
        for _ in range(400):
            a, b = rng.randint(1, 4), rng.randint(1, 4)
            P = random_graph(rng, a, b)
            Q = random_graph(rng, rng.randint(1, a), rng.randint(1, b))
            assert ordered_contains(P, Q) == ordered_contains_bruteforce(P, Q)

    def test_agrees_with_adjacency_route(self):
        rng = random.Random(11)
        for _ in range(300):
            a, b = rng.randint(1, 5), rng.randint(1, 5)
            P = random_graph(rng, a, b)
            Q = random_graph(rng, rng.randint(1, a), rng.randint(1, b))
            assert (ordered_contains(P, Q)
                    == matrix_contains(adjacency(P), adjacency(Q)))

    def test_encoding_equivalence_exhaustive(self):
        patterns = [W(p) for p in ("1", "12", "21", "123", "132", "213",
                                   "231", "312", "321")]
        graphs = {q: pattern_graph(q) for q in patterns}
        for length in range(1, 5):
            for raw in product(range(1, length + 1), repeat=length):
                if len(set(raw)) != max(raw):
                    continue
                w = Word(raw)
                gw = pattern_graph(w)
                for q in patterns:
                    assert contains(w, q) == ordered_contains(gw, graphs[q])


class TestAdjacency:
    def test_identity_pairing(self):
        assert adjacency(pattern_graph(W("12"))).cells == ((1, 0), (0, 1))

    def test_word_1212(self):
        assert adjacency(G1212).row_strings() == ["10", "01", "10", "01"]

    def test_empty_graph(self):
        zero = adjacency(BipartiteGraph(2, 2, frozenset()))
        assert zero.ones == 0 and zero.rows == zero.cols == 2


class TestContract:
    def test_blocks(self):
        assert PLAN22.blocks == ((1, 2), (3, 4))
        assert ContractionPlan(MultisetSpec((2, 1, 3))).blocks == (
            (1, 2), (3,), (4, 5, 6))

    def test_contracts_to_complete(self):
        c = contract(G1212, PLAN22)
        assert c.left_size == c.right_size == 2
        assert c.edges == {(1, 1), (1, 2), (2, 1), (2, 2)}

    def test_contracts_to_single_edge(self):
        c = contract(G111, PLAN3)
        assert c.left_size == c.right_size == 1
        assert c.edges == {(1, 1)}

    def test_empty_graph_stays_empty(self):
        g = BipartiteGraph(4, 2, frozenset())
        assert contract(g, PLAN22).edges == frozenset()

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            contract(G111, PLAN22)

    def test_counterexample_flips_after_contraction(self):
        assert not ordered_contains(G1212, G111)
        assert ordered_contains(contract(G1212, PLAN22), contract(G111, PLAN3))

    def test_irregular_blocks_contract(self):
        # merge the first 2 positions, then 1, then 3
        spec = MultisetSpec((2, 1, 3))
        w = W("121333")
        g = graph_of_word(w, spec)
        c = contract(g, ContractionPlan(spec))
        assert c.edges == {(1, 1), (1, 2), (2, 1), (3, 3)}


class TestFibers:
    def test_single_edge_block_of_two(self):
        g = BipartiteGraph(1, 1, frozenset({(1, 1)}))
        assert fiber_size(g, ContractionPlan(MultisetSpec((2,)))) == 3

    def test_empty_graph_unique_preimage(self):
        g = BipartiteGraph(2, 2, frozenset())
        assert fiber_size(g, PLAN22) == 1

    def test_complete_graph_81(self):
        k22 = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
        assert fiber_size(k22, PLAN22) == 81
        # exhaustive inversion over all 256 graphs on ([4],[2])
        assert sum(1 for g in graphs_on(4, 2) if contract(g, PLAN22) == k22) == 81

    def test_irregular_blocks(self):
        spec = MultisetSpec((2, 3))
        g = BipartiteGraph(2, 2, frozenset({(1, 1), (2, 2)}))
        assert fiber_size(g, ContractionPlan(spec)) == 3 * 7

    def test_fibers_partition_everything(self):
        for n, m in ((1, 1), (1, 3), (2, 2)):
            plan = ContractionPlan(MultisetSpec.regular(n, m))
            total = sum(fiber_size(g, plan) for g in graphs_on(n, n))
            assert total == 2 ** (m * n * n)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            fiber_size(G1212, PLAN22)


class TestCensus:
    def test_trivial_one_vertex(self):
        assert census_avoiding_graphs(1, 1, W("12")) == 2

    def test_frozen_small_values(self):
        # frozen from an independent adjacency-matrix enumeration
        assert census_avoiding_graphs(2, 1, W("12")) == 12
        assert census_avoiding_graphs(2, 2, W("12")) == 80
        assert census_avoiding_graphs(3, 1, W("12")) == 104

    def test_independent_matrix_route(self):
        for n, m, pat in ((2, 1, "12"), (2, 2, "12"), (2, 2, "21")):
            gq = adjacency(pattern_graph(W(pat)))
            slow = sum(1 for g in graphs_on(n * m, n)
                       if not matrix_contains(adjacency(g), gq))
            assert census_avoiding_graphs(n, m, W(pat)) == slow

    def test_dominates_word_count(self):
        assert census_avoiding_graphs(2, 1, W("12")) >= count_avoiders(
            2, W("12")).count
        assert census_avoiding_graphs(2, 2, W("12")) >= count_multiset_avoiders(
            MultisetSpec.regular(2, 2), W("12")).count

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded):
            census_avoiding_graphs(3, 3, W("12"))

    def test_rejects_multiset_pattern(self):
        with pytest.raises(ValueError):
            census_avoiding_graphs(2, 1, W("212"))

    def test_workers_match_serial(self):
        assert (census_avoiding_graphs(2, 2, W("12"), workers=2)
                == census_avoiding_graphs(2, 2, W("12")))


class TestInheritance:
    def test_no_violations_small(self):
        for n, m in ((2, 1), (2, 2)):
            plan = ContractionPlan(MultisetSpec.regular(n, m))
            for pat in ("12", "21"):
                gq = pattern_graph(W(pat))
                for g in graphs_on(n * m, n):
                    if not ordered_contains(g, gq):
                        assert not ordered_contains(contract(g, plan), gq)


class TestBounds:
    def test_fixed_values(self):
        assert bounds(1, 1, 1).klazar_bound.value == 225
        assert bounds(1, 2, 1).multiset_bound.value == 675
        assert bounds(1, 1, 1).e_q.value == 450
        rec = bounds(3, 2, 0)
        assert (rec.klazar_bound.value == rec.multiset_bound.value
                == rec.e_q.value == 1)

    def test_fractional_slope(self):
        rec = bounds(5, 2, "9/5")
        # 2*d*n = 18 and d*n = 9 are integral, d itself is not
        assert rec.klazar_bound.value == 15 ** 18
        assert rec.multiset_bound.value == 675 ** 9
        assert rec.e_q.value is None
        assert str(rec.e_q) == "450^(9/5)"

    def test_multiset_dominates_balanced(self):
        for n in range(1, 4):
            for m in range(1, 4):
                rec = bounds(n, m, 1)
                assert float(rec.multiset_bound) >= float(rec.klazar_bound)

    def test_rejects_negative_slope(self):
        with pytest.raises(ValueError):
            bounds(1, 1, -1)

    def test_power_float(self):
        p = Power(4, "1/2")
        assert float(p) == 2.0
        assert not p.is_exact
