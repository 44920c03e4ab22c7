"""Explicit spline constructions: paths, cycles, trees, extension by
zero, and flow-up families.

Every constructor returns splines that verify on their host graph;
"arbitrary" ideal elements default to the canonical generators so that
outputs are deterministic.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graphs import (
    EdgeLabeledGraph,
    GraphError,
    restrict,
    spanning_tree,
    tree_path,
)
from .rings import (
    INTEGERS_MOD,
    RingElement,
    UnsupportedRingError,
    ext_gcd,
    lcm,
)
from .splines import Spline, verify


@dataclass(frozen=True)
class GeneratingFamily:
    """An ordered family of verified splines, triangular under vertex_order.

    The matrix with (j, i) entry members[i](vertex_order[j]) is
    upper-triangular; over an integral domain a nonzero diagonal
    certifies linear independence (free rank-n submodule).
    """

    graph: EdgeLabeledGraph
    members: tuple
    vertex_order: tuple
    scaling_factors: tuple


def trivial_spline(graph: EdgeLabeledGraph, r: RingElement) -> Spline:
    return Spline(graph, {v: r for v in graph.vertices})


def _cycle_order(graph: EdgeLabeledGraph) -> list:
    """Require the declared vertex order v1..vn to trace the cycle."""
    order = list(graph.vertices)
    n = len(order)
    if n < 3 or len(graph.edges) != n:
        raise GraphError("graph is not a cycle")
    try:
        for i in range(n - 1):
            graph.edge_key(order[i], order[i + 1])
        graph.edge_key(order[0], order[-1])
    except GraphError:
        raise GraphError("graph is not a cycle in vertex declaration order") from None
    return order


def _checked_choice(graph, edge, choice):
    if not graph.labels[edge].contains(choice):
        raise ValueError(f"choice {choice} is outside the ideal of edge {edge}")
    return choice


def cycle_spline(graph: EdgeLabeledGraph, base: RingElement,
                 chord_choice: RingElement, step_choices) -> Spline:
    """The cycle construction: vertex k gets
    base + chord_choice * (step_1 + ... + step_{k-1})."""
    order = _cycle_order(graph)
    n = len(order)
    step_choices = list(step_choices)
    if len(step_choices) != n - 1:
        raise ValueError(f"expected {n - 1} step choices, got {len(step_choices)}")
    _checked_choice(graph, graph.edge_key(order[0], order[-1]), chord_choice)
    for i, c in enumerate(step_choices):
        _checked_choice(graph, graph.edge_key(order[i], order[i + 1]), c)
    values = {order[0]: base}
    acc = graph.ring.zero
    for i in range(1, n):
        acc = acc + step_choices[i - 1]
        values[order[i]] = base + chord_choice * acc
    return Spline(graph, values)


def cycle_generating_family(graph: EdgeLabeledGraph,
                            chord_choice: RingElement | None = None,
                            step_choices=None) -> GeneratingFamily:
    """The n independent cycle splines: chord*step_i supported on the
    vertices after step i, plus the unit spline.  Members are ordered by
    increasing support so the family is upper-triangular under the
    reversed vertex order."""
    order = _cycle_order(graph)
    n = len(order)
    ring = graph.ring
    if chord_choice is None:
        chord_choice = graph.labels[graph.edge_key(order[0], order[-1])].canonical
    if step_choices is None:
        step_choices = [graph.labels[graph.edge_key(order[i], order[i + 1])].canonical
                        for i in range(n - 1)]
    else:
        step_choices = list(step_choices)
    _checked_choice(graph, graph.edge_key(order[0], order[-1]), chord_choice)
    for i, c in enumerate(step_choices):
        _checked_choice(graph, graph.edge_key(order[i], order[i + 1]), c)
    if ring.is_integral_domain and (
        chord_choice.is_zero or any(c.is_zero for c in step_choices)
    ):
        raise ValueError("zero choices cannot give a nontrivial independent family")
    members = []
    factors = []
    for t in range(n - 1, 0, -1):
        factor = chord_choice * step_choices[t - 1]
        values = {order[j]: (factor if j >= t else ring.zero) for j in range(n)}
        members.append(Spline(graph, values))
        factors.append(factor)
    members.append(trivial_spline(graph, ring.one))
    factors.append(ring.one)
    return GeneratingFamily(graph, tuple(members), tuple(reversed(order)), tuple(factors))


def path_generating_family(graph: EdgeLabeledGraph, choices=None) -> GeneratingFamily:
    """The n generators of a path's splines: for each edge the vector
    supported on the vertices before it, plus the unit spline.  When the
    choices are the canonical generators these generate every path
    spline."""
    from .gkm import _path_order

    order = _path_order(graph)
    n = len(order)
    ring = graph.ring
    if choices is None:
        choices = [graph.labels[graph.edge_key(order[i], order[i + 1])].canonical
                   for i in range(n - 1)]
    else:
        choices = list(choices)
    for i, c in enumerate(choices):
        _checked_choice(graph, graph.edge_key(order[i], order[i + 1]), c)
    members = []
    factors = []
    for i in range(n - 1):
        values = {order[j]: (choices[i] if j <= i else ring.zero) for j in range(n)}
        members.append(Spline(graph, values))
        factors.append(choices[i])
    members.append(trivial_spline(graph, ring.one))
    factors.append(ring.one)
    return GeneratingFamily(graph, tuple(members), tuple(order), tuple(factors))


@dataclass(frozen=True)
class TreeMembershipReport:
    ok: bool
    witnesses: dict  # (u, v) -> {edge: summand}
    failures: tuple  # vertex pairs with no decomposition


def _bezout_chain(elements):
    """gcd d of a list plus cofactors x_i with sum(x_i * g_i) = d."""
    d = elements[0]
    coeffs = [d.ring.one]
    for g in elements[1:]:
        d2, a, b = ext_gcd(d, g)
        coeffs = [a * c for c in coeffs] + [b]
        d = d2
    return d, coeffs


def tree_membership(graph: EdgeLabeledGraph, p: Spline) -> TreeMembershipReport:
    """Decide spline membership on a tree through pairwise path sums.

    For each vertex pair the difference must split as a sum of elements
    of the path's edge ideals; witnesses record one such splitting."""
    if len(graph.edges) != len(graph.vertices) - 1 or not graph.is_connected:
        raise GraphError("graph is not a tree")
    skeleton = spanning_tree(graph)
    ring = graph.ring
    witnesses = {}
    failures = []
    verts = graph.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            u, v = verts[i], verts[j]
            diff = p[v] - p[u]
            path = tree_path(skeleton, u, v)
            edges = [graph.edge_key(path[k], path[k + 1]) for k in range(len(path) - 1)]
            if not edges:
                continue
            witness = _path_sum_witness(graph, edges, diff)
            if witness is None:
                failures.append((u, v))
            else:
                witnesses[(u, v)] = witness
    return TreeMembershipReport(not failures, witnesses, tuple(failures))


def _path_sum_witness(graph, edges, diff):
    """Split diff as a sum of per-edge ideal members, or None."""
    ring = graph.ring
    gens = [graph.labels[e].canonical for e in edges]
    if ring.kind == INTEGERS_MOD:
        return _path_sum_witness_mod(graph, edges, diff)
    if all(g.is_zero for g in gens):
        if diff.is_zero:
            return {e: ring.zero for e in edges}
        return None
    d, coeffs = _bezout_chain(gens)
    if not d.divides(diff):
        return None
    scale = diff.exact_div(d)
    return {e: coeffs[i] * gens[i] * scale for i, e in enumerate(edges)}


def _path_sum_witness_mod(graph, edges, diff):
    # Lift to Z, run the Bezout chain with the modulus as an extra
    # generator, and reduce the summands back.
    from . import rings

    ring = graph.ring
    m = ring.modulus
    z = rings.integers()
    gens = [z.element(graph.labels[e].canonical.payload) for e in edges]
    d, coeffs = _bezout_chain(gens + [z.element(m)])
    lifted = z.element(diff.payload)
    if not d.divides(lifted):
        return None
    scale = lifted.exact_div(d)
    return {
        e: ring.element((coeffs[i] * gens[i] * scale).payload)
        for i, e in enumerate(edges)
    }


def excluded_edges(graph: EdgeLabeledGraph, subgraph: EdgeLabeledGraph) -> list:
    inner = {frozenset(e) for e in subgraph.edges}
    return [e for e in graph.edges if frozenset(e) not in inner]


def extend_by_zero(graph: EdgeLabeledGraph, subgraph: EdgeLabeledGraph,
                   p: Spline, element_choices: dict | None = None) -> Spline:
    """Scale p by a product over the excluded edges and pad with zeros.

    The scaling factor is the product of one chosen element per edge of
    the host outside the subgraph (canonical generators by default), so
    every mixed edge's difference lands in its ideal."""
    spline, _ = extend_by_zero_with_factor(graph, subgraph, p, element_choices)
    return spline


def extend_by_zero_with_factor(graph, subgraph, p, element_choices=None):
    if not subgraph.is_subgraph_of(graph):
        raise GraphError("not a subgraph of the host")
    report = verify(subgraph, p)
    if not report.ok:
        raise ValueError("input spline fails verification on the subgraph")
    ring = graph.ring
    factor = ring.one
    for edge in excluded_edges(graph, subgraph):
        if element_choices and edge in element_choices:
            choice = _checked_choice(graph, edge, element_choices[edge])
        else:
            choice = graph.labels[edge].canonical
        if choice.is_zero:
            warnings.warn(
                f"edge {edge} contributes a zero factor; the extension is "
                "the zero spline off its support",
                stacklevel=2,
            )
        factor = factor * choice
    inside = set(subgraph.vertices)
    values = {v: (factor * p[v] if v in inside else ring.zero) for v in graph.vertices}
    return Spline(graph, values), factor


def lcm_scaling_factor(graph: EdgeLabeledGraph, subgraph: EdgeLabeledGraph) -> RingElement:
    """lcm of the excluded edges' canonical generators (1 for none)."""
    ring = graph.ring
    if ring.kind == INTEGERS_MOD:
        raise UnsupportedRingError("lcm scaling needs a UFD (Z or Q[x])")
    acc = ring.one
    for edge in excluded_edges(graph, subgraph):
        acc = lcm(acc, graph.labels[edge].canonical)
    return acc


def flow_up_family(graph: EdgeLabeledGraph, root=None) -> GeneratingFamily:
    """Flow-up splines along a BFS tree: member i is the unit on the
    root-to-v_i tree path, extended by zero.  Vertices are ordered by
    nondecreasing tree distance (ties by declaration order), which makes
    the family upper-triangular with diagonal entries N_i."""
    skeleton = spanning_tree(graph, root)
    order = sorted(graph.vertices,
                   key=lambda v: (skeleton.depth[v], graph.index(v)))
    members = []
    factors = []
    for v in order:
        path = tree_path(skeleton, skeleton.root, v)
        path_edges = [graph.edge_key(path[k], path[k + 1]) for k in range(len(path) - 1)]
        sub = restrict(graph, path, path_edges)
        unit = trivial_spline(sub, graph.ring.one)
        member, factor = extend_by_zero_with_factor(graph, sub, unit)
        members.append(member)
        factors.append(factor)
    return GeneratingFamily(graph, tuple(members), tuple(order), tuple(factors))


def is_nontrivial_exists(graph: EdgeLabeledGraph):
    """Decide whether any nontrivial spline exists; return (flag, witness).

    Zero-labeled edges force equal endpoints, so we work on the
    components of the zero-labeled subgraph: if they connect every
    vertex the splines are all constant; otherwise the component of the
    first vertex supports an extension-by-zero witness."""
    if not graph.ring.is_integral_domain:
        raise UnsupportedRingError("existence argument needs an integral domain")
    if len(graph.vertices) < 2:
        return False, None
    parent = {v: v for v in graph.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in graph.edges:
        if graph.labels[(u, v)].is_zero:
            parent[find(u)] = find(v)
    anchor = find(graph.vertices[0])
    support = [v for v in graph.vertices if find(v) == anchor]
    if len(support) == len(graph.vertices):
        return False, None
    ring = graph.ring
    factor = ring.one
    for u, v in graph.edges:
        inside = (find(u) == anchor) + (find(v) == anchor)
        if inside == 1:
            factor = factor * graph.labels[(u, v)].canonical
    inside_set = set(support)
    witness = Spline(graph, {v: (factor if v in inside_set else ring.zero)
                             for v in graph.vertices})
    assert verify(graph, witness).ok
    return True, witness
