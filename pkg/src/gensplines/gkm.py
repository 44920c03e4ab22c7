"""The GKM matrix: signed incidence rows plus a symbolic last column.

Each row of the matrix encodes one edge condition p_tail - p_head = q_e
with q_e ranging over the edge's ideal.  The symbolic last column is
kept as a list of signed (coefficient slot, edge) terms so that
row reduction stays exact and reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import EdgeLabeledGraph, GraphError, TreeSkeleton, fundamental_cycles
from .rings import RingElement
from .splines import Spline


@dataclass(frozen=True)
class GkmMatrix:
    graph: EdgeLabeledGraph
    rows: tuple  # directed edges (tail, head), one per graph edge

    def coeff_row(self, i: int) -> tuple:
        tail, head = self.rows[i]
        out = [0] * len(self.graph.vertices)
        out[self.graph.index(tail)] = 1
        out[self.graph.index(head)] = -1
        return tuple(out)

    def row_edge(self, i: int) -> tuple:
        return self.graph.edge_key(*self.rows[i])


def build_gkm_matrix(graph: EdgeLabeledGraph, orientation: dict | None = None) -> GkmMatrix:
    """Rows in edge declaration order; default orientation is earlier
    declared vertex -> later declared vertex.  Re-orienting an edge only
    negates its row, which never changes the solution set."""
    rows = []
    for u, v in graph.edges:
        tail, head = u, v
        if orientation and (u, v) in orientation:
            tail, head = orientation[(u, v)]
            if {tail, head} != {u, v}:
                raise GraphError(f"orientation for edge {(u, v)} must use its endpoints")
        rows.append((tail, head))
    return GkmMatrix(graph, tuple(rows))


def solves(matrix: GkmMatrix, p: Spline, q: dict) -> bool:
    """True iff M*p = q row by row; each q_e must lie in its edge ideal."""
    graph = matrix.graph
    for edge in graph.edges:
        if edge not in q:
            raise ValueError(f"missing q entry for edge {edge}")
        if not graph.labels[edge].contains(q[edge]):
            raise ValueError(f"q entry {q[edge]} is outside the ideal of edge {edge}")
    for tail, head in matrix.rows:
        edge = graph.edge_key(tail, head)
        if p[tail] - p[head] != q[edge]:
            return False
    return True


@dataclass(frozen=True)
class SystemRow:
    """One row of a (reduced) extended system.

    rhs is a sum of symbolic slots: (sign, edge) stands for
    sign * q_edge with q_edge ranging over the ideal of that edge.
    """

    edge: tuple
    coeffs: tuple
    rhs: tuple

    def rhs_text(self, graph: EdgeLabeledGraph) -> str:
        parts = []
        for sign, edge in self.rhs:
            gen = graph.labels[edge].canonical
            token = "q_{%s,%s}*(%s)" % (edge[0], edge[1], gen)
            if not parts:
                parts.append(("-" if sign < 0 else "") + token)
            else:
                parts.append(("- " if sign < 0 else "+ ") + token)
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ReducedSystem:
    graph: EdgeLabeledGraph
    tree_rows: tuple
    cycle_rows: tuple
    transform_log: tuple


def reduce_via_tree(matrix: GkmMatrix, tree: TreeSkeleton) -> ReducedSystem:
    """Eliminate the vertex columns of every chord row by adding signed
    tree rows around its fundamental cycle.  Tree rows are listed first
    (in tree-construction order) and left untouched; every operation is
    a row reorder or an addition of a +-1 multiple, hence invertible."""
    graph = matrix.graph
    if set(tree.depth) != set(graph.vertices):
        raise GraphError("tree does not span the matrix's graph")
    orient = {graph.edge_key(t, h): (t, h) for t, h in matrix.rows}
    n = len(graph.vertices)

    def unit_row(edge):
        tail, head = orient[edge]
        out = [0] * n
        out[graph.index(tail)] = 1
        out[graph.index(head)] = -1
        return out

    log = [("reorder", tuple(tree.tree_edges))]
    tree_rows = tuple(
        SystemRow(e, tuple(unit_row(e)), ((1, e),)) for e in tree.tree_edges
    )
    cycle_rows = []
    for cycle in fundamental_cycles(graph, tree):
        chord = cycle.chord
        steps = cycle.steps()
        chord_step_sign = 1 if orient[chord] == steps[0] else -1
        coeffs = unit_row(chord)
        rhs = [(1, chord)]
        for a, b in steps[1:]:
            edge = graph.edge_key(a, b)
            step_sign = 1 if orient[edge] == (a, b) else -1
            c = chord_step_sign * step_sign
            row = unit_row(edge)
            for i in range(n):
                coeffs[i] += c * row[i]
            rhs.append((c, edge))
            log.append(("add", c, edge, chord))
        if any(coeffs):
            raise AssertionError("cycle elimination failed to clear vertex columns")
        cycle_rows.append(SystemRow(chord, tuple(coeffs), tuple(rhs)))
    return ReducedSystem(graph, tree_rows, tuple(cycle_rows), tuple(log))


def syzygy_check(graph: EdgeLabeledGraph, tree: TreeSkeleton, q: dict) -> bool:
    """True iff the signed sum of the q's vanishes around every
    fundamental cycle, i.e. the extended system with this q is
    homogeneous in the cycle rows."""
    for edge in graph.edges:
        if edge not in q:
            raise ValueError(f"missing q entry for edge {edge}")
        if not graph.labels[edge].contains(q[edge]):
            raise ValueError(f"q entry {q[edge]} is outside the ideal of edge {edge}")
    for cycle in fundamental_cycles(graph, tree):
        total = graph.ring.zero
        for a, b in cycle.steps():
            edge = graph.edge_key(a, b)
            sign = 1 if edge == (a, b) else -1
            total = total + (q[edge] if sign > 0 else -q[edge])
        if not total.is_zero:
            return False
    return True


def _path_order(graph: EdgeLabeledGraph) -> list:
    n = len(graph.vertices)
    if len(graph.edges) != n - 1 or not graph.is_connected:
        raise GraphError("graph is not a path")
    if n == 1:
        return list(graph.vertices)
    degrees = {v: len(graph.neighbors(v)) for v in graph.vertices}
    ends = [v for v in graph.vertices if degrees[v] == 1]
    if len(ends) != 2 or any(degrees[v] != 2 for v in graph.vertices if v not in ends):
        raise GraphError("graph is not a path")
    start = min(ends, key=graph.index)
    order = [start]
    prev = None
    while len(order) < n:
        nxt = [w for w in graph.neighbors(order[-1]) if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def path_reduced_form(matrix: GkmMatrix) -> ReducedSystem:
    """The cumulative suffix-sum form of a path's system: row i relates
    p_{v_i} and p_{v_n} through the sum of the edge slots between them."""
    graph = matrix.graph
    order = _path_order(graph)
    n = len(order)
    orient = {graph.edge_key(t, h): (t, h) for t, h in matrix.rows}
    rows = []
    for i in range(n - 1):
        coeffs = [0] * n
        coeffs[graph.index(order[i])] = 1
        coeffs[graph.index(order[-1])] = -1
        rhs = []
        for k in range(n - 2, i - 1, -1):
            edge = graph.edge_key(order[k], order[k + 1])
            sign = 1 if orient[edge] == (order[k], order[k + 1]) else -1
            rhs.append((sign, edge))
        rows.append(SystemRow(graph.edge_key(order[i], order[i + 1]),
                              tuple(coeffs), tuple(rhs)))
    log = tuple(("add-suffix", row.edge) for row in rows)
    return ReducedSystem(graph, tuple(rows), (), log)
