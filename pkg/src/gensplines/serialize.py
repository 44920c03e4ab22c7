"""JSON encoding of elements, graphs, splines, reports, and families.

Element text encoding: integers as optional-sign decimal strings;
residues as decimal strings in [0, m); polynomials as arrays of
coefficient strings "p/q" (or "p") in ascending degree.  Canonical graph
serialization sorts edges by endpoints in vertex declaration order.
"""
from __future__ import annotations

from fractions import Fraction

from .construct import GeneratingFamily
from .graphs import EdgeLabeledGraph, GraphError
from .rings import (
    INTEGERS,
    INTEGERS_MOD,
    POLY_RATIONAL,
    Ideal,
    RingElement,
    RingSpec,
)
from .splines import Spline, VerificationReport


class SchemaError(ValueError):
    """Raised when a JSON document does not match the expected shape."""


def ring_to_json(ring: RingSpec) -> dict:
    out = {"kind": ring.kind}
    if ring.modulus is not None:
        out["modulus"] = ring.modulus
    return out


def ring_from_json(data) -> RingSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise SchemaError("ring: expected an object with a 'kind' field")
    kind = data["kind"]
    modulus = data.get("modulus")
    try:
        return RingSpec(kind, modulus)
    except ValueError as exc:
        raise SchemaError(f"ring: {exc}") from exc


def element_to_json(x: RingElement):
    if x.ring.kind == POLY_RATIONAL:
        return [str(c) for c in x.payload]
    return str(x.payload)


def element_from_json(ring: RingSpec, data, where: str = "element") -> RingElement:
    try:
        if ring.kind == POLY_RATIONAL:
            if isinstance(data, (str, int)):
                data = [data]
            if not isinstance(data, list):
                raise SchemaError(
                    f"{where}: polynomial must be an array of coefficients"
                )
            return ring.element([Fraction(str(c)) for c in data])
        if isinstance(data, str):
            data = int(data, 10)
        if not isinstance(data, int) or isinstance(data, bool):
            raise SchemaError(f"{where}: expected a decimal string")
        if ring.kind == INTEGERS_MOD and not 0 <= data < ring.modulus:
            raise SchemaError(
                f"{where}: residue {data} outside [0, {ring.modulus})"
            )
        return ring.element(data)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"{where}: {exc}") from exc


def graph_to_json(graph: EdgeLabeledGraph) -> dict:
    edges = sorted(graph.edges, key=lambda e: (graph.index(e[0]), graph.index(e[1])))
    return {
        "ring": ring_to_json(graph.ring),
        "vertices": list(graph.vertices),
        "edges": [
            {
                "u": u,
                "v": v,
                "ideal": [element_to_json(g) for g in graph.labels[(u, v)].generators],
            }
            for u, v in edges
        ],
    }


def graph_from_json(data) -> EdgeLabeledGraph:
    if not isinstance(data, dict):
        raise SchemaError("graph: expected an object")
    for field in ("ring", "vertices", "edges"):
        if field not in data:
            raise SchemaError(f"graph: missing field '{field}'")
    ring = ring_from_json(data["ring"])
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise SchemaError("graph.vertices: expected an array of id strings")
    labeled = []
    for k, entry in enumerate(data["edges"]):
        where = f"graph.edges[{k}]"
        if not isinstance(entry, dict) or not {"u", "v", "ideal"} <= set(entry):
            raise SchemaError(f"{where}: expected an object with u, v, ideal")
        gens = entry["ideal"]
        if not isinstance(gens, list) or not gens:
            raise SchemaError(f"{where}.ideal: expected a nonempty array")
        elements = [
            element_from_json(ring, g, f"{where}.ideal[{i}]")
            for i, g in enumerate(gens)
        ]
        labeled.append((entry["u"], entry["v"], Ideal(elements)))
    try:
        return EdgeLabeledGraph(ring, vertices, labeled)
    except (GraphError, ValueError) as exc:
        raise SchemaError(f"graph: {exc}") from exc


def spline_to_json(spline: Spline) -> dict:
    return {
        "values": {v: element_to_json(spline[v]) for v in spline.graph.vertices}
    }


def spline_from_json(graph: EdgeLabeledGraph, data) -> Spline:
    if not isinstance(data, dict) or "values" not in data:
        raise SchemaError("spline: expected an object with a 'values' field")
    values = data["values"]
    if not isinstance(values, dict):
        raise SchemaError("spline.values: expected an object keyed by vertex id")
    parsed = {
        v: element_from_json(graph.ring, x, f"spline.values[{v}]")
        for v, x in values.items()
    }
    try:
        return Spline(graph, parsed)
    except (GraphError, ValueError) as exc:
        raise SchemaError(f"spline: {exc}") from exc


def report_to_json(report: VerificationReport) -> dict:
    return {
        "ok": report.ok,
        "violations": [
            {"edge": [u, v], "difference": element_to_json(diff)}
            for (u, v), diff in report.violations
        ],
    }


def family_to_json(family: GeneratingFamily) -> dict:
    return {
        "vertex_order": list(family.vertex_order),
        "members": [spline_to_json(p) for p in family.members],
        "scaling_factors": [element_to_json(x) for x in family.scaling_factors],
    }
