"""JSON shapes for check reports and run reports.

Vertex sets serialize as label arrays in vertex order; matchings as sorted
label pairs.  Every serialized check row is self-contained (the enclosing
graph row carries the graph6 string and the label table), so
:func:`revalidate_check_row` can re-check a witness from the JSON alone.
"""

from __future__ import annotations

import json
from typing import Any

from corecorona.graphs import Graph, VertexSet, parse_graph6
from corecorona.independence import MisFamily
from corecorona.lemmas import CheckReport
from corecorona.matching import Matching


def vertex_labels(vs: VertexSet, g: Graph) -> list[str]:
    return [g.label(v) for v in vs]


def witness_json(witness: Any, g: Graph) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, Matching):
        return {
            "type": "matching",
            "edges": sorted([g.label(u), g.label(v)] for u, v in witness.edges),
            "saturates": None
            if witness.saturates is None
            else vertex_labels(witness.saturates, g),
        }
    if isinstance(witness, VertexSet):
        return {"type": "vertex_set", "vertices": vertex_labels(witness, g)}
    if isinstance(witness, MisFamily):
        return {
            "type": "family",
            "kind": witness.kind,
            "members": [vertex_labels(m, g) for m in witness],
        }
    raise TypeError(f"unknown witness type {type(witness)!r}")


def check_json(report: CheckReport, g: Graph) -> dict:
    return {
        "statement": report.statement.value,
        "mode": report.mode,
        "passed": report.passed,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "witness": witness_json(report.witness, g),
        "inputs": report.inputs_digest,
        "extra": report.extra,
    }


def revalidate_check_row(graph6: str, labels: list[str], check: dict) -> bool:
    """Re-check a serialized witness against its serialized graph."""
    g = parse_graph6(graph6)
    if len(labels) != g.n:
        return False
    index = {lab: i for i, lab in enumerate(labels)}
    witness = check.get("witness")
    if witness is None:
        return True
    if witness["type"] == "matching":
        seen = 0
        for la, lb in witness["edges"]:
            u, v = index[la], index[lb]
            if not g.has_edge(u, v):
                return False
            mask = (1 << u) | (1 << v)
            if seen & mask:
                return False
            seen |= mask
        saturates = witness.get("saturates")
        if saturates is not None:
            for lab in saturates:
                if not (seen >> index[lab]) & 1:
                    return False
        return True
    if witness["type"] == "vertex_set":
        if check["statement"].startswith("ML_"):
            # a violator must be smaller than its neighbourhood deficit claims
            a = VertexSet.from_vertices(g.n, (index[lab] for lab in witness["vertices"]))
            side_b = check.get("extra", {}).get("side_b")
            if side_b is None:
                return True
            b = VertexSet.from_vertices(g.n, (index[lab] for lab in side_b))
            return len(g.neighborhood(a) & b) < len(a)
        return all(lab in index for lab in witness["vertices"])
    if witness["type"] == "family":
        return all(all(lab in index for lab in member) for member in witness["members"])
    return False


def report_bytes(obj: dict) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()


def write_report(obj: dict, path: str | None) -> bytes:
    data = report_bytes(obj)
    if path is not None:
        with open(path, "wb") as fh:
            fh.write(data)
    return data
