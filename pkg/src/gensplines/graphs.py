"""Edge-labeled graphs and their combinatorial infrastructure.

Vertex declaration order is semantic throughout: it fixes the BFS
spanning tree, the flow-up vertex order, matrix column order, and the
default edge orientation (earlier vertex -> later vertex).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .rings import Ideal, RingMismatchError, RingSpec


class GraphError(ValueError):
    """Raised on malformed graph input."""


class DisconnectedGraphError(GraphError):
    def __init__(self, components):
        self.components = components
        parts = "; ".join("{" + ", ".join(c) + "}" for c in components)
        super().__init__(f"graph is disconnected: components {parts}")


class EdgeLabeledGraph:
    """A finite simple graph with an ideal attached to every edge."""

    __slots__ = ("ring", "vertices", "edges", "labels", "_index", "_adj")

    def __init__(self, ring: RingSpec, vertices, labeled_edges):
        vertices = tuple(vertices)
        index = {}
        for v in vertices:
            if v in index:
                raise GraphError(f"duplicate vertex id {v!r}")
            index[v] = len(index)
        edges = []
        labels = {}
        for u, v, ideal in labeled_edges:
            if u not in index or v not in index:
                missing = u if u not in index else v
                raise GraphError(f"edge endpoint {missing!r} is not a declared vertex")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if index[u] > index[v]:
                u, v = v, u
            if (u, v) in labels:
                raise GraphError(f"duplicate edge {u!r}-{v!r}")
            if not isinstance(ideal, Ideal):
                ideal = Ideal(ideal)
            if ideal.ring != ring:
                raise RingMismatchError(
                    f"edge {u!r}-{v!r} labeled over {ideal.ring}, graph over {ring}"
                )
            edges.append((u, v))
            labels[(u, v)] = ideal
        adj = {v: [] for v in vertices}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort(key=index.__getitem__)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("EdgeLabeledGraph is immutable")

    def index(self, v) -> int:
        return self._index[v]

    def edge_key(self, u, v) -> tuple:
        if self._index[u] > self._index[v]:
            u, v = v, u
        if (u, v) not in self.labels:
            raise GraphError(f"no edge {u!r}-{v!r}")
        return (u, v)

    def label(self, u, v) -> Ideal:
        return self.labels[self.edge_key(u, v)]

    def neighbors(self, v):
        return tuple(self._adj[v])

    def components(self) -> list[list]:
        seen = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            out.append(comp)
        return out

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_subgraph_of(self, other: "EdgeLabeledGraph") -> bool:
        if self.ring != other.ring:
            return False
        if any(v not in other._index for v in self.vertices):
            return False
        for e in self.edges:
            try:
                if other.label(*e) != self.labels[e]:
                    return False
            except GraphError:
                return False
        return True


def build_graph(ring: RingSpec, vertices, edges_with_generators) -> EdgeLabeledGraph:
    """Build a graph, canonicalizing each edge's generator list to an Ideal."""
    return EdgeLabeledGraph(ring, vertices, edges_with_generators)


@dataclass(frozen=True)
class TreeSkeleton:
    """A rooted spanning tree of a host graph."""

    host: EdgeLabeledGraph
    root: object
    parent: dict
    tree_edges: tuple
    depth: dict

    @property
    def vertices(self):
        return self.host.vertices


def spanning_tree(graph: EdgeLabeledGraph, root=None) -> TreeSkeleton:
    """Breadth-first spanning tree, rooted at the first declared vertex.

    Neighbor visiting order follows vertex declaration order, so the
    tree is deterministic given the input.
    """
    if not graph.vertices:
        raise GraphError("empty graph has no spanning tree")
    comps = graph.components()
    if len(comps) > 1:
        raise DisconnectedGraphError(comps)
    if root is None:
        root = graph.vertices[0]
    elif root not in graph._index:
        raise GraphError(f"root {root!r} is not a vertex")
    parent = {}
    depth = {root: 0}
    tree_edges = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in graph.neighbors(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                tree_edges.append(graph.edge_key(v, w))
                queue.append(w)
    return TreeSkeleton(graph, root, parent, tuple(tree_edges), depth)


def tree_from_edges(graph: EdgeLabeledGraph, edges, root=None) -> TreeSkeleton:
    """Build a TreeSkeleton from an explicit spanning-edge set."""
    edges = [graph.edge_key(u, v) for u, v in edges]
    if len(edges) != len(graph.vertices) - 1:
        raise GraphError("edge set has the wrong size for a spanning tree")
    adj = {v: [] for v in graph.vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if root is None:
        root = graph.vertices[0]
    parent = {}
    depth = {root: 0}
    order = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v], key=graph.index):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                order.append(graph.edge_key(v, w))
                queue.append(w)
    if len(depth) != len(graph.vertices):
        raise GraphError("edge set does not span the graph")
    return TreeSkeleton(graph, root, parent, tuple(order), depth)


def tree_path(tree: TreeSkeleton, u, v) -> list:
    """The unique u -> v path in the tree; tree_path(u, u) = [u]."""
    for x in (u, v):
        if x not in tree.depth:
            raise GraphError(f"vertex {x!r} is not in the tree")
    up_u, up_v = [u], [v]
    a, b = u, v
    while tree.depth[a] > tree.depth[b]:
        a = tree.parent[a]
        up_u.append(a)
    while tree.depth[b] > tree.depth[a]:
        b = tree.parent[b]
        up_v.append(b)
    while a != b:
        a = tree.parent[a]
        b = tree.parent[b]
        up_u.append(a)
        up_v.append(b)
    return up_u + up_v[-2::-1]


@dataclass(frozen=True)
class CycleDescriptor:
    """The fundamental cycle of a chord: chord first, then tree edges.

    vertex_sequence starts at the chord's tail, crosses the chord, and
    walks back to the tail through the tree.
    """

    chord: tuple
    vertex_sequence: tuple

    def steps(self):
        """Consecutive (a, b) traversal steps around the cycle."""
        seq = self.vertex_sequence
        return [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


def fundamental_cycles(graph: EdgeLabeledGraph, tree: TreeSkeleton) -> list[CycleDescriptor]:
    if tree.host is not graph and set(tree.depth) != set(graph.vertices):
        raise GraphError("tree does not span the graph")
    tree_set = set(tree.tree_edges)
    out = []
    for e in graph.edges:
        if e in tree_set:
            continue
        u, v = e
        seq = (u,) + tuple(tree_path(tree, v, u))
        out.append(CycleDescriptor(e, seq))
    return out


def restrict(graph: EdgeLabeledGraph, vertex_subset, edge_subset) -> EdgeLabeledGraph:
    """Subgraph on the given vertices and edges, labels restricted."""
    keep = [v for v in graph.vertices if v in set(vertex_subset)]
    if len(keep) != len(set(vertex_subset)):
        missing = set(vertex_subset) - set(graph.vertices)
        raise GraphError(f"unknown vertices {sorted(map(str, missing))}")
    keep_set = set(keep)
    labeled = []
    for u, v in edge_subset:
        key = graph.edge_key(u, v)
        if key[0] not in keep_set or key[1] not in keep_set:
            raise GraphError(f"edge {key} has an endpoint outside the vertex subset")
        labeled.append((key[0], key[1], graph.labels[key]))
    return EdgeLabeledGraph(graph.ring, keep, labeled)


def induced_subgraph(graph: EdgeLabeledGraph, vertex_subset) -> EdgeLabeledGraph:
    keep = set(vertex_subset)
    edges = [e for e in graph.edges if e[0] in keep and e[1] in keep]
    return restrict(graph, vertex_subset, edges)


def spanning_subgraph(graph: EdgeLabeledGraph, edge_subset) -> EdgeLabeledGraph:
    """Subgraph keeping every vertex and the given edges."""
    return restrict(graph, graph.vertices, edge_subset)


def erase_unit_edges(graph: EdgeLabeledGraph) -> EdgeLabeledGraph:
    keep = [e for e in graph.edges if not graph.labels[e].is_unit]
    return restrict(graph, graph.vertices, keep)


def disjoint_union(g1: EdgeLabeledGraph, g2: EdgeLabeledGraph) -> EdgeLabeledGraph:
    """Disjoint union; colliding vertex ids get component prefixes."""
    if g1.ring != g2.ring:
        raise RingMismatchError(f"{g1.ring} vs {g2.ring}")
    collide = set(g1.vertices) & set(g2.vertices)
    ren1 = {v: (f"0:{v}" if v in collide else v) for v in g1.vertices}
    ren2 = {v: (f"1:{v}" if v in collide else v) for v in g2.vertices}
    vertices = [ren1[v] for v in g1.vertices] + [ren2[v] for v in g2.vertices]
    labeled = [(ren1[u], ren1[v], g1.labels[(u, v)]) for u, v in g1.edges]
    labeled += [(ren2[u], ren2[v], g2.labels[(u, v)]) for u, v in g2.edges]
    return EdgeLabeledGraph(g1.ring, vertices, labeled)
