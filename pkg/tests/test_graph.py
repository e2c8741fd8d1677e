import random

import pytest

from trifree.constructions import twisted_tesseract, w13
from trifree.graph import (
    Graph,
    classify,
    edge_slack,
    find_induced_k24,
    independence_number,
    is_triangle_free,
    reduced_graph,
    second_degree,
)

from helpers import (
    brute_alpha,
    complete,
    complete_bipartite,
    cycle,
    double_c5,
    petersen,
    random_graph,
    random_triangle_free,
)


class TestGraphBasics:
    def test_empty_graph(self):
        g = Graph(0)
        assert g.n == 0
        assert g.edge_count() == 0
        assert g.edges() == []

    def test_edge_bookkeeping(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.edge_count() == 3
        assert g.degree(1) == 2
        assert list(g.degrees()) == [1, 2, 2, 1]
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert g.neighbors(2) == (1, 3)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(-1)
        with pytest.raises(ValueError):
            Graph(129)
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_from_adj(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert Graph.from_adj(list(g.adj)) == g
        with pytest.raises(ValueError):
            Graph.from_adj([1, 0])  # asymmetric
        with pytest.raises(ValueError):
            Graph.from_adj([2, 0])  # bit out of range on vertex 0
        with pytest.raises(ValueError):
            Graph.from_adj([1, 3])  # self-loop on vertex 1

    def test_induced(self):
        g = cycle(5)
        h = g.induced([0, 1, 2])
        assert h.n == 3
        assert h.edges() == [(0, 1), (1, 2)]
        # order of the vertex list does not matter
        assert g.induced([2, 0, 1]) == h

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1)])
        b = Graph(3, [(1, 0)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 2)])
        assert a != Graph(4, [(0, 1)])


class TestTriangleFree:
    def test_known(self):
        assert is_triangle_free(cycle(5))
        assert is_triangle_free(petersen())
        assert is_triangle_free(complete_bipartite(3, 3))
        assert not is_triangle_free(complete(3))
        assert not is_triangle_free(complete(4))
        assert is_triangle_free(Graph(0))

    def test_against_brute(self):
        rng = random.Random(101)
        for _ in range(200):
            g = random_graph(rng, rng.randrange(1, 9))
            brute = any(
                g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
                for a in range(g.n)
                for b in range(a + 1, g.n)
                for c in range(b + 1, g.n)
            )
            assert is_triangle_free(g) == (not brute)


class TestIndependenceNumber:
    def test_known(self):
        assert independence_number(Graph(0)) == 0
        assert independence_number(Graph(6)) == 6
        assert independence_number(complete(7)) == 1
        assert independence_number(cycle(5)) == 2
        assert independence_number(cycle(7)) == 3
        assert independence_number(petersen()) == 4
        assert independence_number(double_c5()) == 4
        assert independence_number(w13()) == 4
        assert independence_number(twisted_tesseract()) == 5
        assert independence_number(complete_bipartite(2, 4)) == 4

    def test_against_brute(self):
        rng = random.Random(202)
        for _ in range(250):
            n = rng.randrange(1, 11)
            g = random_graph(rng, n, p=rng.choice([0.1, 0.3, 0.6, 0.9]))
            assert independence_number(g) == brute_alpha(g)

    def test_sparse_reduction_paths(self):
        # graphs full of degree-0 and degree-1 vertices drive the reduction rules
        rng = random.Random(303)
        for _ in range(150):
            n = rng.randrange(1, 13)
            g = random_graph(rng, n, p=0.08)
            assert independence_number(g) == brute_alpha(g)


class TestSecondDegree:
    def test_values(self):
        g = cycle(5)
        assert [second_degree(g, v) for v in range(5)] == [4] * 5
        star = Graph(5, [(0, i) for i in range(1, 5)])
        assert second_degree(star, 0) == 4
        assert second_degree(star, 1) == 4
        w = w13()
        assert all(second_degree(w, v) == 16 for v in range(13))

    def test_range_check(self):
        with pytest.raises(ValueError):
            second_degree(cycle(5), 5)
        with pytest.raises(ValueError):
            second_degree(cycle(5), -1)


class TestReducedGraph:
    def test_c5(self):
        h = reduced_graph(cycle(5), 0)
        assert h.n == 2
        assert h.edge_count() == 1

    def test_edge_drop_matches_second_degree(self):
        rng = random.Random(404)
        graphs = [w13(), twisted_tesseract(), petersen()]
        graphs += [random_triangle_free(rng, rng.randrange(1, 15)) for _ in range(120)]
        for g in graphs:
            for v in range(g.n):
                h = reduced_graph(g, v)
                assert h.edge_count() == g.edge_count() - second_degree(g, v)
                assert h.n == g.n - 1 - g.degree(v)


class TestEdgeSlack:
    def test_values(self):
        assert edge_slack(cycle(5)) == 1
        assert edge_slack(w13()) == 0
        assert edge_slack(twisted_tesseract()) == 1
        assert edge_slack(petersen()) == 7

    def test_requires_triangle_free(self):
        with pytest.raises(AssertionError):
            edge_slack(complete(3))


class TestClassify:
    def test_witnesses(self):
        c = classify(w13())
        assert (c.triangle_free, c.alpha, c.n, c.e) == (True, 4, 13, 26)
        c = classify(twisted_tesseract())
        assert (c.triangle_free, c.alpha, c.n, c.e) == (True, 5, 16, 32)

    def test_matches(self):
        c = classify(w13())
        assert c.matches(5, 13, 26)
        assert not c.matches(4, 13, 26)  # alpha 4 is not below 4
        assert not c.matches(5, 13, 25)
        assert not classify(complete(3)).matches(2, 3, 3)


class TestInducedK24:
    def test_positive(self):
        g = complete_bipartite(2, 4)
        hit = find_induced_k24(g)
        assert hit is not None
        (a1, a2), bs = hit
        assert not g.has_edge(a1, a2)
        assert len(set(bs)) == 4
        for b in bs:
            assert g.has_edge(a1, b) and g.has_edge(a2, b)
        for i in range(4):
            for j in range(i + 1, 4):
                assert not g.has_edge(bs[i], bs[j])

    def test_embedded(self):
        # K2,4 plus a pendant path hanging off one side
        g = Graph(8, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (5, 6), (6, 7)])
        assert find_induced_k24(g) is not None

    def test_negative(self):
        assert find_induced_k24(cycle(5)) is None
        assert find_induced_k24(w13()) is None
        assert find_induced_k24(complete_bipartite(2, 3)) is None
        # adding the edge between the two high-degree vertices kills inducedness
        g = Graph(6, [(0, 1)] + [(0, 2 + j) for j in range(4)] + [(1, 2 + j) for j in range(4)])
        assert find_induced_k24(g) is None
