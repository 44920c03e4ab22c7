"""Graph construction, spanning trees, cycles, and subgraph operations."""
import pytest

from gensplines import build_graph, integers, spanning_tree, tree_path
from gensplines.graphs import (
    DisconnectedGraphError,
    GraphError,
    disjoint_union,
    erase_unit_edges,
    fundamental_cycles,
    induced_subgraph,
    restrict,
    spanning_subgraph,
    tree_from_edges,
)
from gensplines.rings import Ideal, RingMismatchError, integers_mod

from conftest import make_graph, triangle_z

Z = integers()


class TestConstruction:
    def test_duplicate_vertex(self):
        with pytest.raises(GraphError, match="duplicate vertex"):
            make_graph(Z, ["a", "a"], [])

    def test_self_loop(self):
        with pytest.raises(GraphError, match="self-loop"):
            make_graph(Z, ["a", "b"], [("a", "a", 2)])

    def test_duplicate_edge(self):
        with pytest.raises(GraphError, match="duplicate edge"):
            make_graph(Z, ["a", "b"], [("a", "b", 2), ("b", "a", 3)])

    def test_unknown_endpoint(self):
        with pytest.raises(GraphError, match="not a declared vertex"):
            make_graph(Z, ["a", "b"], [("a", "c", 2)])

    def test_ring_mismatch(self):
        bad = Ideal([integers_mod(5).element(2)])
        with pytest.raises(RingMismatchError):
            build_graph(Z, ["a", "b"], [("a", "b", bad)])

    def test_edge_normalized_to_declaration_order(self):
        g = make_graph(Z, ["a", "b"], [("b", "a", 2)])
        assert g.edges == (("a", "b"),)
        assert g.edge_key("b", "a") == ("a", "b")

    def test_missing_edge_key(self):
        g = triangle_z()
        with pytest.raises(GraphError, match="no edge"):
            g.edge_key("v1", "v1")

    def test_neighbors_in_declaration_order(self):
        g = make_graph(Z, ["c", "a", "b"],
                       [("c", "b", 1), ("c", "a", 1)])
        assert g.neighbors("c") == ("a", "b")

    def test_label_lookup(self):
        g = triangle_z()
        assert g.label("v3", "v1").canonical == Z.element(5)


class TestConnectivity:
    def test_components(self):
        g = make_graph(Z, ["a", "b", "c", "d"], [("a", "b", 2), ("c", "d", 3)])
        assert g.components() == [["a", "b"], ["c", "d"]]
        assert not g.is_connected

    def test_spanning_tree_disconnected(self):
        g = make_graph(Z, ["a", "b", "c"], [("a", "b", 2)])
        with pytest.raises(DisconnectedGraphError) as info:
            spanning_tree(g)
        assert info.value.components == [["a", "b"], ["c"]]


class TestSpanningTree:
    def test_bfs_determinism_on_k4(self, k4_graph):
        t = spanning_tree(k4_graph)
        assert t.root == "v1"
        assert t.tree_edges == (("v1", "v2"), ("v1", "v3"), ("v1", "v4"))
        assert t.depth == {"v1": 0, "v2": 1, "v3": 1, "v4": 1}

    def test_explicit_root(self, k4_graph):
        t = spanning_tree(k4_graph, root="v3")
        assert t.root == "v3"
        assert t.depth["v3"] == 0
        with pytest.raises(GraphError):
            spanning_tree(k4_graph, root="nope")

    def test_tree_from_edges_star(self, k4_graph):
        t = tree_from_edges(
            k4_graph, [("v1", "v4"), ("v2", "v4"), ("v3", "v4")], root="v4")
        assert t.root == "v4"
        assert set(t.tree_edges) == {("v1", "v4"), ("v2", "v4"), ("v3", "v4")}
        assert all(t.depth[v] == 1 for v in ("v1", "v2", "v3"))

    def test_tree_from_edges_rejects_nonspanning(self, k4_graph):
        with pytest.raises(GraphError):
            tree_from_edges(k4_graph, [("v1", "v2"), ("v1", "v3")])
        with pytest.raises(GraphError, match="does not span"):
            tree_from_edges(
                k4_graph, [("v1", "v2"), ("v1", "v3"), ("v2", "v3")])

    def test_tree_path(self, k4_graph):
        t = spanning_tree(k4_graph)
        assert tree_path(t, "v2", "v3") == ["v2", "v1", "v3"]
        assert tree_path(t, "v2", "v2") == ["v2"]
        assert tree_path(t, "v1", "v4") == ["v1", "v4"]


class TestFundamentalCycles:
    def test_k4_bfs_cycles(self, k4_graph):
        t = spanning_tree(k4_graph)
        cycles = fundamental_cycles(k4_graph, t)
        chords = [c.chord for c in cycles]
        assert chords == [("v2", "v3"), ("v2", "v4"), ("v3", "v4")]
        first = cycles[0]
        assert first.vertex_sequence == ("v2", "v3", "v1", "v2")
        assert first.steps() == [("v2", "v3"), ("v3", "v1"), ("v1", "v2")]

    def test_tree_has_no_cycles(self):
        g = make_graph(Z, ["a", "b", "c"], [("a", "b", 2), ("b", "c", 3)])
        assert fundamental_cycles(g, spanning_tree(g)) == []


class TestSubgraphs:
    def test_restrict(self, k4_graph):
        sub = restrict(k4_graph, ["v1", "v2", "v3"],
                       [("v1", "v2"), ("v2", "v3")])
        assert sub.vertices == ("v1", "v2", "v3")
        assert sub.edges == (("v1", "v2"), ("v2", "v3"))
        assert sub.label("v1", "v2") == k4_graph.label("v1", "v2")
        assert sub.is_subgraph_of(k4_graph)

    def test_restrict_rejects_outside_edge(self, k4_graph):
        with pytest.raises(GraphError, match="outside the vertex subset"):
            restrict(k4_graph, ["v1", "v2"], [("v1", "v3")])
        with pytest.raises(GraphError, match="unknown vertices"):
            restrict(k4_graph, ["v1", "zz"], [])

    def test_induced(self, k4_graph):
        sub = induced_subgraph(k4_graph, ["v1", "v2", "v3"])
        assert set(sub.edges) == {("v1", "v2"), ("v1", "v3"), ("v2", "v3")}

    def test_spanning_subgraph(self, k4_graph):
        sub = spanning_subgraph(k4_graph, [("v1", "v2")])
        assert sub.vertices == k4_graph.vertices
        assert sub.edges == (("v1", "v2"),)

    def test_erase_unit_edges(self):
        g = make_graph(Z, ["a", "b", "c"], [("a", "b", 1), ("b", "c", 4)])
        out = erase_unit_edges(g)
        assert out.edges == (("b", "c"),)
        assert out.vertices == ("a", "b", "c")

    def test_is_subgraph_label_sensitivity(self):
        g = make_graph(Z, ["a", "b"], [("a", "b", 2)])
        h = make_graph(Z, ["a", "b"], [("a", "b", 3)])
        assert not h.is_subgraph_of(g)


class TestDisjointUnion:
    def test_no_collision(self):
        g1 = make_graph(Z, ["a", "b"], [("a", "b", 2)])
        g2 = make_graph(Z, ["c", "d"], [("c", "d", 3)])
        u = disjoint_union(g1, g2)
        assert u.vertices == ("a", "b", "c", "d")
        assert len(u.edges) == 2
        assert not u.is_connected

    def test_collision_prefixes(self):
        g1 = make_graph(Z, ["a", "b"], [("a", "b", 2)])
        u = disjoint_union(g1, g1)
        assert u.vertices == ("0:a", "0:b", "1:a", "1:b")

    def test_ring_mismatch(self):
        g1 = make_graph(Z, ["a"], [])
        g2 = make_graph(integers_mod(3), ["b"], [])
        with pytest.raises(RingMismatchError):
            disjoint_union(g1, g2)
