"""Graph data model, constructions, and the two serialization formats."""

import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracrank import (
    Graph,
    GraphFormatError,
    clique_sum,
    complement,
    connected_components,
    cut_vertex_components,
    disjoint_union,
    generate,
    graph_to_json,
    induced_subgraph,
    parse_graph,
    parse_graph6,
    parse_graph_json,
    to_graph6,
    union,
)


def p4():
    return generate("path", 4)


def c5():
    return generate("cycle", 5)


class TestParsing:
    def test_graph6_hand_decoded_star(self):
        # 'D' encodes n=5; '?{' decode to bits 000000 111100, i.e. the pairs
        # (0,4), (1,4), (2,4), (3,4): a star centered at vertex 4
        g = parse_graph6("D?{")
        assert g.vertices == ("0", "1", "2", "3", "4")
        assert set(g.edges) == {("0", "4"), ("1", "4"), ("2", "4"), ("3", "4")}

    def test_graph6_header_accepted(self):
        assert parse_graph6(">>graph6<<D?{").n == 5

    def test_graph6_bad_byte_position(self):
        with pytest.raises(GraphFormatError, match="position"):
            parse_graph6("D?\x01")

    def test_graph6_truncated(self):
        with pytest.raises(GraphFormatError, match="truncated"):
            parse_graph6("D?")

    def test_graph6_trailing(self):
        with pytest.raises(GraphFormatError, match="trailing"):
            parse_graph6("D?{{")

    def test_edge_list_json_k1(self):
        g = parse_graph('{"vertices":["a"],"edges":[]}', "edge-list-json")
        assert g.vertices == ("a",) and not g.edges

    def test_edge_list_json_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="loop"):
            parse_graph('{"vertices":["a"],"edges":[["a","a"]]}', "edge-list-json")

    def test_edge_list_json_duplicate_vertex(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph('{"vertices":["a","a"],"edges":[]}', "edge-list-json")

    def test_edge_list_json_unknown_endpoint(self):
        with pytest.raises(GraphFormatError, match="edge #0"):
            parse_graph('{"vertices":["a"],"edges":[["a","b"]]}', "edge-list-json")

    def test_edge_list_json_syntax(self):
        with pytest.raises(GraphFormatError, match="JSON"):
            parse_graph("{oops", "edge-list-json")

    def test_json_round_trip_preserves_order(self):
        g = Graph.build(["z", "a", "m"], [["z", "m"]])
        doc = graph_to_json(g)
        back = parse_graph_json(json.dumps(doc))
        assert back == g

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 14), st.random_module())
    def test_graph6_round_trip_matches_networkx(self, n, rnd):
        import random

        edges = [(str(i), str(j)) for i in range(n) for j in range(i + 1, n)
                 if random.random() < 0.4]
        g = Graph.build([str(i) for i in range(n)], edges)
        enc = to_graph6(g)
        assert parse_graph6(enc) == g
        nxg = nx.from_graph6_bytes(enc.encode())
        assert {frozenset(map(str, e)) for e in nxg.edges} == \
               {frozenset(e) for e in g.edges}
        assert nxg.number_of_nodes() == g.n


class TestConstructions:
    def test_complement_k4(self):
        assert complement(generate("complete", 4)).edges == frozenset()

    def test_complement_p4_hand_enumerated(self):
        # non-edges of 1-2-3-4 are exactly 13, 14, 24: the path 3-1-4-2
        comp = complement(p4())
        assert set(comp.edges) == {("1", "3"), ("1", "4"), ("2", "4")}

    def test_complement_involution(self):
        g = c5()
        assert complement(complement(g)) == g

    def test_induced_c5_gives_p3(self):
        sub = induced_subgraph(c5(), ["1", "2", "3"])
        assert set(sub.edges) == {("1", "2"), ("2", "3")}

    def test_induced_full_and_empty(self):
        g = p4()
        assert induced_subgraph(g, g.vertices) == g
        assert induced_subgraph(g, []).n == 0

    def test_induced_unknown_vertex(self):
        with pytest.raises(GraphFormatError):
            induced_subgraph(p4(), ["7"])

    def test_disjoint_union_counts(self):
        g = disjoint_union([generate("path", 2), generate("path", 2)])
        assert g.n == 4 and len(g.edges) == 2

    def test_disjoint_union_namespaces_collisions(self):
        g = disjoint_union([generate("path", 2), generate("path", 2)])
        assert g.vertices == ("0:1", "0:2", "1:1", "1:2")

    def test_disjoint_union_empty_list(self):
        assert disjoint_union([]).n == 0

    def test_union_builds_c5(self):
        g1 = Graph.build(["1", "2", "3", "4"], [["1", "2"], ["2", "3"], ["3", "4"]])
        g2 = Graph.build(["4", "5", "1"], [["4", "5"], ["5", "1"]])
        u = union(g1, g2)
        assert u.n == 5 and len(u.edges) == 5
        assert all(u.degree(v) == 2 for v in u.vertices)

    def test_union_idempotent(self):
        g = c5()
        assert union(g, g) == g

    def test_union_shared_labels(self):
        g = union(Graph.build(["a", "b"], [["a", "b"]]),
                  Graph.build(["b", "c"], [["b", "c"]]))
        assert g.n == 3 and len(g.edges) == 2

    def test_clique_sum_triangles(self):
        t1 = Graph.build(["1", "2", "3"], [["1", "2"], ["2", "3"], ["1", "3"]])
        t2 = Graph.build(["1", "2", "4"], [["1", "2"], ["2", "4"], ["1", "4"]])
        glued, shared = clique_sum(t1, t2, 2)
        assert shared == ("1", "2")
        assert glued.n == 4 and len(glued.edges) == 5  # K4 minus the edge 34

    def test_clique_sum_t0_is_disjoint(self):
        g1 = Graph.build(["a"], [])
        g2 = Graph.build(["b"], [])
        glued, shared = clique_sum(g1, g2, 0)
        assert shared == () and glued.n == 2

    def test_clique_sum_nonadjacent_pair_rejected(self):
        t1 = Graph.build(["1", "2", "3"], [["1", "2"], ["2", "3"], ["1", "3"]])
        bad = Graph.build(["1", "2", "4"], [["2", "4"], ["1", "4"]])
        with pytest.raises(GraphFormatError, match="not an edge"):
            clique_sum(t1, bad, 2)

    def test_generate_path4(self):
        assert set(p4().edges) == {("1", "2"), ("2", "3"), ("3", "4")}

    def test_generate_k1(self):
        g = generate("complete", 1)
        assert g.n == 1 and not g.edges

    def test_generate_c5(self):
        assert set(c5().edges) == \
            {("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5")}

    def test_generate_guards(self):
        with pytest.raises(GraphFormatError):
            generate("cycle", 2)
        with pytest.raises(GraphFormatError):
            generate("path", 0)


class TestCutVertices:
    def test_p4_at_inner_vertex(self):
        pieces = cut_vertex_components(p4(), "2")
        assert sorted(p.vertices for p in pieces) == [("1", "2"), ("2", "3", "4")]

    def test_star_splits_into_edges(self):
        star = parse_graph6("D?{")
        pieces = cut_vertex_components(star, "4")
        assert len(pieces) == 4 and all(p.n == 2 for p in pieces)

    def test_leaf_is_not_cut_vertex(self):
        with pytest.raises(GraphFormatError, match="not a cut-vertex"):
            cut_vertex_components(p4(), "1")

    def test_connected_components(self):
        g = disjoint_union([generate("path", 3), generate("complete", 2)])
        comps = connected_components(g)
        assert [c.n for c in comps] == [3, 2]
