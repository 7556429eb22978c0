import random

import pytest

from walkmat import (
    Graph6Error,
    RootedProductSpec,
    complement,
    delete_vertex,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    parse_edge_list,
    path_graph,
    rooted_product_path,
)
from walkmat.graphs import are_isomorphic, format_edge_list
from walkmat.matrix import ExactMatrix, adjacency_matrix, kronecker


def reference_graph6(g):
    """Independent encoder written straight from the published format:
    N(n) then the upper triangle x_{ij} (i<j) in column order, 6 bits per
    byte, each byte offset by 63."""
    n = g.n
    assert n <= 62
    bits = ""
    for j in range(n):
        for i in range(j):
            bits += str(g.adj[i][j])
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(
        chr(int(bits[k : k + 6], 2) + 63) for k in range(0, len(bits), 6)
    )


class TestConstruction:
    def test_single_edge(self):
        g = graph_from_edges(2, [(1, 2)])
        assert g.adj == ((0, 1), (1, 0))

    def test_c4_degrees(self):
        g = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
        assert [g.degree(v) for v in range(1, 5)] == [2, 2, 2, 2]

    def test_duplicate_edges_collapse(self):
        g = graph_from_edges(3, [(1, 2), (1, 2)])
        assert g.edge_count == 1

    def test_rejects_loop_and_out_of_range(self):
        with pytest.raises(ValueError):
            graph_from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            graph_from_edges(3, [(1, 4)])

    def test_path(self):
        assert path_graph(1).edge_count == 0
        assert path_graph(2).adj == ((0, 1), (1, 0))
        assert [path_graph(4).degree(v) for v in range(1, 5)] == [1, 2, 2, 1]
        with pytest.raises(ValueError):
            path_graph(0)

    def test_complement(self):
        k4 = graph_from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
        assert complement(k4).edge_count == 0
        c4 = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
        cc = complement(c4)
        assert cc.edge_count == 2  # two disjoint edges
        assert complement(cc) == c4

    def test_delete_vertex(self):
        p4 = path_graph(4)
        assert delete_vertex(p4, 2).edge_count == 1


class TestGraph6:
    def test_k4_frozen(self):
        g = graph6_decode("C~")
        assert g.n == 4 and g.edge_count == 6
        k4 = graph_from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
        assert reference_graph6(k4) == "C~" == graph6_encode(k4)

    def test_p4_frozen(self):
        p4 = path_graph(4)
        assert reference_graph6(p4) == "Ch" == graph6_encode(p4)

    def test_roundtrip_random(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 8)
            edges = [
                (i, j)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
                if rng.random() < 0.5
            ]
            g = graph_from_edges(n, edges)
            assert graph6_decode(graph6_encode(g)) == g
            assert graph6_encode(g) == reference_graph6(g)

    def test_header_accepted(self):
        assert graph6_decode(">>graph6<<Ch") == path_graph(4)

    def test_long_form_size(self):
        g = path_graph(70)
        s = graph6_encode(g)
        assert s[0] == chr(126)
        assert graph6_decode(s) == g

    def test_malformed_reports_offset(self):
        with pytest.raises(Graph6Error):
            graph6_decode("C")  # truncated data
        with pytest.raises(Graph6Error) as exc:
            graph6_decode("C\x1f\x1f")
        assert exc.value.offset is not None

    def test_eight_byte_size_rejected(self):
        with pytest.raises(Graph6Error):
            graph6_decode(chr(126) + chr(126) + "??????")


class TestEdgeList:
    def test_roundtrip(self):
        g = graph_from_edges(4, [(1, 2), (2, 3)])
        assert parse_edge_list(format_edge_list(g)) == g

    def test_k2(self):
        assert parse_edge_list("2\n1 2\n") == path_graph(2)


class TestRootedProduct:
    def test_c4_p3_root2(self):
        c4 = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
        prod = rooted_product_path(c4, 3, 2)
        assert prod.n == 12
        assert prod.edge_count == 4 + 4 * 2
        # root layer vertices keep their cycle edges plus two path rungs
        assert [prod.degree(v) for v in range(5, 9)] == [4, 4, 4, 4]

    def test_k2_p2_is_p4(self):
        prod = rooted_product_path(path_graph(2), 2, 1)
        assert are_isomorphic(prod, path_graph(4))

    def test_trivial_path(self):
        c4 = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
        assert rooted_product_path(c4, 1, 1) == c4

    @pytest.mark.parametrize("m,ell", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 3)])
    def test_kronecker_identity(self, m, ell):
        # adjacency literally equals A(P_m) (x) I_n + D_ell (x) A(G)
        for g in list(enumerate_graphs(3))[::7]:
            prod = rooted_product_path(g, m, ell)
            ap = adjacency_matrix(path_graph(m))
            dl = ExactMatrix.from_rows(
                [[1 if i == j == ell - 1 else 0 for j in range(m)] for i in range(m)]
            )
            expected = [
                a + b
                for a, b in zip(
                    kronecker(ap, ExactMatrix.identity(g.n)).entries,
                    kronecker(dl, adjacency_matrix(g)).entries,
                )
            ]
            assert list(adjacency_matrix(prod).entries) == expected

    def test_edge_count_formula(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(1, 5)
            edges = [
                (i, j)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
                if rng.random() < 0.5
            ]
            g = graph_from_edges(n, edges)
            m = rng.randint(1, 5)
            ell = rng.randint(1, m)
            prod = rooted_product_path(g, m, ell)
            assert prod.edge_count == g.edge_count + n * (m - 1)

    def test_path_symmetry_isomorphism(self):
        g = path_graph(2)
        for m in (3, 4, 5):
            for ell in range(1, m + 1):
                a = rooted_product_path(g, m, ell)
                b = rooted_product_path(g, m, m + 1 - ell)
                assert a == b  # ell normalization makes them identical

    def test_spec_normalization(self):
        assert RootedProductSpec(5, 4).normalized() == (5, 2)
        with pytest.raises(ValueError):
            RootedProductSpec(3, 4)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(2, 2), (4, 64), (6, 32768)])
    def test_counts(self, n, count):
        seen = set()
        total = 0
        for g in enumerate_graphs(n):
            seen.add(g.adj)
            total += 1
        assert total == count == len(seen)

    def test_rejects_large(self):
        with pytest.raises(ValueError):
            next(enumerate_graphs(7))
