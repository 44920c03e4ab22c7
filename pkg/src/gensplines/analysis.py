"""Exhaustive enumeration over finite rings and theorem-checking engines.

Over Z/m the ring of splines is a finite set, so the decomposition
theorems can be certified by brute force.  Over infinite rings the
checks fall back to seeded sampling of constructed splines.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .construct import GeneratingFamily, flow_up_family
from .gkm import GkmMatrix, ReducedSystem
from .graphs import (
    DisconnectedGraphError,
    EdgeLabeledGraph,
    GraphError,
    TreeSkeleton,
    fundamental_cycles,
    induced_subgraph,
    spanning_subgraph,
    spanning_tree,
)
from .rings import INTEGERS, INTEGERS_MOD, UnsupportedRingError
from .splines import Spline, verify

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(ValueError):
    pass


@dataclass(frozen=True)
class SplineSet:
    """All splines of a graph over Z/m, as residue tuples in vertex
    declaration order, lexicographically sorted."""

    graph: EdgeLabeledGraph
    members: tuple

    def __len__(self) -> int:
        return len(self.members)

    def as_splines(self):
        ring = self.graph.ring
        for tup in self.members:
            yield Spline(self.graph, {
                v: ring.element(x) for v, x in zip(self.graph.vertices, tup)
            })


def _edge_divisors(graph: EdgeLabeledGraph):
    """Per-edge divisor d: a residue is in the ideal iff d divides it."""
    m = graph.ring.modulus
    out = {}
    for edge, ideal in graph.labels.items():
        out[edge] = math.gcd(ideal.canonical.payload, m)
    return out


def enumerate_splines(graph: EdgeLabeledGraph,
                      budget: int = DEFAULT_BUDGET) -> SplineSet:
    """Depth-first enumeration of all verified residue tuples,
    pruning as soon as an edge condition fails."""
    ring = graph.ring
    if ring.kind != INTEGERS_MOD:
        raise UnsupportedRingError("exhaustive enumeration needs a finite ring (Z/m)")
    m = ring.modulus
    n = len(graph.vertices)
    if m ** n > budget:
        raise BudgetExceededError(f"{m}^{n} tuples exceed the budget of {budget}")
    divisors = _edge_divisors(graph)
    index = {v: i for i, v in enumerate(graph.vertices)}
    constraints = [[] for _ in range(n)]
    for (u, v), d in divisors.items():
        i, j = index[u], index[v]
        lo, hi = min(i, j), max(i, j)
        constraints[hi].append((lo, d))
    members = []
    stack = [0] * n

    def fill(i: int):
        if i == n:
            members.append(tuple(stack))
            return
        for val in range(m):
            ok = True
            for j, d in constraints[i]:
                if (val - stack[j]) % d:
                    ok = False
                    break
            if ok:
                stack[i] = val
                fill(i + 1)
    fill(0)
    return SplineSet(graph, tuple(members))


@dataclass(frozen=True)
class DecompositionReport:
    claim: str
    subgraphs: tuple  # edge sets, for reference
    verdict: bool
    counterexample: object = None
    mode: str = "exhaustive"
    seed: int | None = None


def _check_cover(graph: EdgeLabeledGraph, subgraphs):
    union = set()
    for sub in subgraphs:
        if set(sub.vertices) != set(graph.vertices):
            raise GraphError("decomposition subgraphs must keep every vertex")
        union.update(frozenset(e) for e in sub.edges)
    if union != {frozenset(e) for e in graph.edges}:
        raise GraphError("subgraph edges do not cover the graph")


def random_member(graph: EdgeLabeledGraph, rng: random.Random) -> Spline:
    """A random verified spline: per component, a random module
    combination of the flow-up family plus a random constant."""
    ring = graph.ring
    values = {}
    for comp in graph.components():
        sub = induced_subgraph(graph, comp)
        family = flow_up_family(sub)
        acc = {v: ring.zero for v in comp}
        for member in family.members:
            c = _random_element(ring, rng)
            for v in comp:
                acc[v] = acc[v] + c * member[v]
        values.update(acc)
    return Spline(graph, values)


def _random_element(ring, rng: random.Random):
    if ring.kind == INTEGERS_MOD:
        return ring.element(rng.randrange(ring.modulus))
    if ring.kind == INTEGERS:
        return ring.element(rng.randint(-5, 5))
    degree = rng.randint(0, 2)
    return ring.element([rng.randint(-3, 3) for _ in range(degree + 1)])


def check_union_decomposition(graph: EdgeLabeledGraph, subgraphs, *,
                              claim: str = "union",
                              budget: int = DEFAULT_BUDGET,
                              seed: int = 0,
                              samples: int = 20) -> DecompositionReport:
    """Certify R_G = intersection of the R_{G_i}: exhaustively over Z/m,
    by seeded sampling of both inclusions otherwise."""
    subgraphs = list(subgraphs)
    _check_cover(graph, subgraphs)
    edge_sets = tuple(tuple(sub.edges) for sub in subgraphs)
    if graph.ring.kind == INTEGERS_MOD:
        whole = set(enumerate_splines(graph, budget).members)
        inter = None
        for sub in subgraphs:
            aligned = spanning_subgraph(graph, sub.edges)
            part = set(enumerate_splines(aligned, budget).members)
            inter = part if inter is None else inter & part
        if whole == inter:
            return DecompositionReport(claim, edge_sets, True)
        bad = min(whole.symmetric_difference(inter))
        return DecompositionReport(claim, edge_sets, False, counterexample=bad)
    rng = random.Random(seed)
    # splines of G restrict into every R_{G_i}
    for _ in range(samples):
        p = random_member(graph, rng)
        for sub in subgraphs:
            aligned = spanning_subgraph(graph, sub.edges)
            if not verify(aligned, p).ok:
                return DecompositionReport(claim, edge_sets, False,
                                           counterexample=p,
                                           mode="sampled", seed=seed)
    # members of the intersection verify on G
    for sub in subgraphs:
        aligned = spanning_subgraph(graph, sub.edges)
        for _ in range(samples):
            p = random_member(aligned, rng)
            others = [spanning_subgraph(graph, s.edges) for s in subgraphs]
            if all(verify(o, p).ok for o in others) and not verify(graph, p).ok:
                return DecompositionReport(claim, edge_sets, False,
                                           counterexample=p,
                                           mode="sampled", seed=seed)
    return DecompositionReport(claim, edge_sets, True, mode="sampled", seed=seed)


def spanning_tree_cover(graph: EdgeLabeledGraph) -> list[EdgeLabeledGraph]:
    """A BFS tree plus one chord-swapped tree per remaining edge; the
    union of their edge sets is the whole edge set."""
    base = spanning_tree(graph)
    trees = [spanning_subgraph(graph, base.tree_edges)]
    for cycle in fundamental_cycles(graph, base):
        a, b = cycle.steps()[1]
        swap_out = graph.edge_key(a, b)
        edges = [e for e in base.tree_edges if e != swap_out] + [cycle.chord]
        trees.append(spanning_subgraph(graph, edges))
    return trees


def check_cycle_decomposition(graph: EdgeLabeledGraph, tree: TreeSkeleton, *,
                              budget: int = DEFAULT_BUDGET,
                              seed: int = 0,
                              samples: int = 20) -> DecompositionReport:
    """R_G = R_T intersected with the fundamental-cycle subgraphs
    (each cycle padded with the remaining isolated vertices)."""
    if set(tree.depth) != set(graph.vertices):
        raise GraphError("tree does not span the graph")
    parts = [spanning_subgraph(graph, tree.tree_edges)]
    for cycle in fundamental_cycles(graph, tree):
        edges = [graph.edge_key(a, b) for a, b in cycle.steps()]
        parts.append(spanning_subgraph(graph, edges))
    return check_union_decomposition(graph, parts, claim="tree-plus-cycles",
                                     budget=budget, seed=seed, samples=samples)


def check_triangular_family(family: GeneratingFamily) -> bool:
    """Upper-triangularity with nonzero diagonal of the evaluation
    matrix, per the linear-independence lemma."""
    members = family.members
    order = family.vertex_order
    if len(members) != len(order):
        return False
    for j, v in enumerate(order):
        for i, member in enumerate(members):
            entry = member[v]
            if j > i and not entry.is_zero:
                return False
            if j == i and entry.is_zero:
                return False
    return True


def count_direct_sum(graph: EdgeLabeledGraph, v, *,
                     budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(|R_G|, number of splines vanishing at v); the direct-sum theorem
    forces total = m * anchored on connected graphs."""
    if not graph.is_connected:
        raise DisconnectedGraphError(graph.components())
    if v not in set(graph.vertices):
        raise GraphError(f"{v!r} is not a vertex")
    spline_set = enumerate_splines(graph, budget)
    i = graph.index(v)
    total = len(spline_set)
    anchored = sum(1 for tup in spline_set.members if tup[i] == 0)
    if total != graph.ring.modulus * anchored:
        raise AssertionError(
            f"direct-sum count identity failed: {total} != "
            f"{graph.ring.modulus} * {anchored}"
        )
    return total, anchored


def matrix_solution_set(matrix: GkmMatrix,
                        budget: int = DEFAULT_BUDGET) -> set:
    """All residue tuples solving the extended system for some valid
    last column.  Row orientation cannot matter: membership of the
    difference is sign-invariant."""
    graph = matrix.graph
    if graph.ring.kind != INTEGERS_MOD:
        raise UnsupportedRingError("solution-set enumeration needs Z/m")
    m = graph.ring.modulus
    n = len(graph.vertices)
    if m ** n > budget:
        raise BudgetExceededError(f"{m}^{n} tuples exceed the budget of {budget}")
    divisors = _edge_divisors(graph)
    out = set()
    index = {v: i for i, v in enumerate(graph.vertices)}
    rows = [(index[t], index[h], divisors[graph.edge_key(t, h)])
            for t, h in matrix.rows]
    from itertools import product

    for tup in product(range(m), repeat=n):
        if all((tup[t] - tup[h]) % d == 0 for t, h, d in rows):
            out.add(tup)
    return out


def reduced_solution_set(system: ReducedSystem,
                         budget: int = DEFAULT_BUDGET) -> set:
    """Honest evaluation of the reduced rows over Z/m: tree rows fix the
    tree slots, cycle rows force the chord slot to the signed tree sum
    and demand membership in the chord's ideal."""
    graph = system.graph
    if graph.ring.kind != INTEGERS_MOD:
        raise UnsupportedRingError("solution-set enumeration needs Z/m")
    m = graph.ring.modulus
    n = len(graph.vertices)
    if m ** n > budget:
        raise BudgetExceededError(f"{m}^{n} tuples exceed the budget of {budget}")
    divisors = _edge_divisors(graph)
    index = {v: i for i, v in enumerate(graph.vertices)}
    out = set()
    from itertools import product

    for tup in product(range(m), repeat=n):
        slots = {}
        ok = True
        for row in system.tree_rows:
            value = sum(c * tup[i] for i, c in enumerate(row.coeffs)) % m
            if value % divisors[row.edge]:
                ok = False
                break
            slots[row.edge] = value
        if not ok:
            continue
        for row in system.cycle_rows:
            # 0 = q_chord + sum of signed tree slots
            signed = 0
            for sign, edge in row.rhs:
                if edge == row.edge:
                    continue
                signed += sign * slots[edge]
            chord_slot = (-signed) % m
            if chord_slot % divisors[row.edge]:
                ok = False
                break
        if ok:
            out.add(tup)
    return out
