"""Splines on edge-labeled graphs: verification and ring/module structure.

A Spline is a candidate vertex labeling; membership in the spline ring
is checked by verify(), never assumed.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graphs import (
    DisconnectedGraphError,
    EdgeLabeledGraph,
    GraphError,
    disjoint_union,
)
from .rings import RingElement, RingMismatchError


class Spline:
    """A total map from the host graph's vertices to ring elements."""

    __slots__ = ("graph", "values")

    def __init__(self, graph: EdgeLabeledGraph, values):
        values = dict(values)
        if set(values) != set(graph.vertices):
            missing = set(graph.vertices) - set(values)
            extra = set(values) - set(graph.vertices)
            raise GraphError(
                f"spline does not match vertex set (missing {sorted(map(str, missing))}, "
                f"extra {sorted(map(str, extra))})"
            )
        for v, x in values.items():
            if not isinstance(x, RingElement) or x.ring != graph.ring:
                raise RingMismatchError(f"value at {v!r} is not over {graph.ring}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("Spline is immutable")

    def __getitem__(self, v) -> RingElement:
        return self.values[v]

    def as_tuple(self) -> tuple:
        return tuple(self.values[v] for v in self.graph.vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Spline)
            and self.graph.vertices == other.graph.vertices
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}: {x}" for v, x in
                          ((v, self.values[v]) for v in self.graph.vertices))
        return f"Spline({inner})"

    def _check_same_host(self, other: "Spline") -> None:
        if self.graph.vertices != other.graph.vertices or self.graph.ring != other.graph.ring:
            raise GraphError("splines live on different graphs")


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple  # of (edge, difference)


def verify(graph: EdgeLabeledGraph, spline: Spline) -> VerificationReport:
    """Check the per-edge membership condition; report every violated edge."""
    if set(spline.values) != set(graph.vertices):
        raise GraphError("spline is not defined on this graph's vertices")
    violations = []
    for u, v in graph.edges:
        diff = spline[u] - spline[v]
        if not graph.labels[(u, v)].contains(diff):
            violations.append(((u, v), diff))
    return VerificationReport(not violations, tuple(violations))


def spline_add(p: Spline, q: Spline) -> Spline:
    p._check_same_host(q)
    return Spline(p.graph, {v: p[v] + q[v] for v in p.graph.vertices})


def spline_mul(p: Spline, q: Spline) -> Spline:
    p._check_same_host(q)
    return Spline(p.graph, {v: p[v] * q[v] for v in p.graph.vertices})


def spline_neg(p: Spline) -> Spline:
    return Spline(p.graph, {v: -p[v] for v in p.graph.vertices})


def scalar_mul(r: RingElement, p: Spline) -> Spline:
    return Spline(p.graph, {v: r * p[v] for v in p.graph.vertices})


def restrict_spline(p: Spline, subgraph: EdgeLabeledGraph) -> Spline:
    if not subgraph.is_subgraph_of(p.graph):
        raise GraphError("target is not a subgraph of the spline's host")
    return Spline(subgraph, {v: p[v] for v in subgraph.vertices})


def decompose_at_vertex(graph: EdgeLabeledGraph, p: Spline, v):
    """Split p = r*1 + p_v_part with p_v_part vanishing at v (connected G)."""
    if v not in set(graph.vertices):
        raise GraphError(f"{v!r} is not a vertex")
    if not graph.is_connected:
        raise DisconnectedGraphError(graph.components())
    report = verify(graph, p)
    if not report.ok:
        raise ValueError(f"not a generalized spline; {len(report.violations)} edge(s) violated")
    r = p[v]
    part = Spline(graph, {w: p[w] - r for w in graph.vertices})
    return r, part


def transport(p: Spline, target: EdgeLabeledGraph, vertex_map: dict) -> Spline:
    """Move p along an edge- and label-preserving vertex bijection."""
    source = p.graph
    if set(vertex_map) != set(source.vertices):
        raise GraphError("map is not defined on every source vertex")
    images = set(vertex_map.values())
    if len(images) != len(vertex_map) or images != set(target.vertices):
        raise GraphError("map is not a bijection onto the target's vertices")
    if len(source.edges) != len(target.edges):
        raise GraphError("map does not preserve edges")
    for u, v in source.edges:
        try:
            image_label = target.label(vertex_map[u], vertex_map[v])
        except GraphError:
            raise GraphError(f"image of edge {u!r}-{v!r} is not an edge") from None
        if image_label != source.labels[(u, v)]:
            raise GraphError(f"label mismatch on image of edge {u!r}-{v!r}")
    return Spline(target, {vertex_map[v]: p[v] for v in source.vertices})


def direct_sum_spline(p1: Spline, p2: Spline) -> Spline:
    """Concatenate splines across a disjoint union of their hosts."""
    union = disjoint_union(p1.graph, p2.graph)
    n1 = len(p1.graph.vertices)
    values = {}
    for i, v in enumerate(union.vertices):
        if i < n1:
            values[v] = p1[p1.graph.vertices[i]]
        else:
            values[v] = p2[p2.graph.vertices[i - n1]]
    return Spline(union, values)


def scaled_labeling(graph: EdgeLabeledGraph, r: RingElement) -> EdgeLabeledGraph:
    """Replace every edge label I by r*I."""
    if r.is_zero:
        warnings.warn(
            "scaling labels by zero collapses every ideal; only constant "
            "splines verify on a connected graph",
            stacklevel=2,
        )
    labeled = [(u, v, graph.labels[(u, v)].scaled(r)) for u, v in graph.edges]
    return EdgeLabeledGraph(graph.ring, graph.vertices, labeled)


def is_nontrivial(p: Spline) -> bool:
    """True iff p is not a constant multiple of the unit spline."""
    values = list(p.values.values())
    return any(x != values[0] for x in values[1:])
