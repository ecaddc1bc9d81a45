"""Desk-scale explorers for the two open questions.

Problem 1: which graphs attain 2*alpha = |core| + |corona|?  The scanner
only collects evidence (the known sufficient conditions ride along as
flags).  Problem 2: the largest subfamily of maximum independent sets whose
union and intersection sizes sum to 2*alpha.  The subset objective is not
monotone, so the search is exhaustive-or-error, never heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from corecorona.graphs import Graph, serialize_graph6
from corecorona.independence import (
    DEFAULT_CAP,
    KIND_MAX_INDEPENDENT,
    MisFamily,
    core_corona,
    enumerate_omega,
    is_very_well_covered,
)
from corecorona.matching import is_koenig_egervary

DEFAULT_SUBSET_CAP = 20


@dataclass(frozen=True)
class EqualityClassification:
    graph_id: str
    is_equality: bool
    is_ke: bool
    is_vwc: bool
    has_unique_mis: bool
    alpha: int
    core_size: int
    corona_size: int


@dataclass(frozen=True)
class EqualityCollectionResult:
    max_size: int
    witness: MisFamily
    omega_size: int
    exhaustive: bool


@dataclass(frozen=True)
class ScanRow:
    """One scanner line: either a classification or a recorded error."""

    graph_id: str
    classification: EqualityClassification | None = None
    error: str | None = None


def classify_equality(
    g: Graph, graph_id: str | None = None, cap: int = DEFAULT_CAP
) -> EqualityClassification:
    cc = core_corona(g, cap)
    return EqualityClassification(
        graph_id=serialize_graph6(g) if graph_id is None else graph_id,
        is_equality=2 * cc.alpha == len(cc.core) + len(cc.corona),
        is_ke=is_koenig_egervary(g),
        is_vwc=is_very_well_covered(g),
        has_unique_mis=cc.omega_count == 1,
        alpha=cc.alpha,
        core_size=len(cc.core),
        corona_size=len(cc.corona),
    )


def scan_equality(
    graphs: Iterable[tuple[str, Graph]], cap: int = DEFAULT_CAP
) -> Iterator[ScanRow]:
    """Classify a stream of (id, graph); per-graph failures become error rows
    and the scan keeps going.  Output order is input order."""
    for graph_id, g in graphs:
        try:
            yield ScanRow(graph_id, classification=classify_equality(g, graph_id, cap))
        except Exception as exc:  # recorded, not fatal: the stream continues
            yield ScanRow(graph_id, error=str(exc))


def summarize_scan(rows: Iterable[ScanRow]) -> dict:
    counts = {
        "total": 0,
        "errors": 0,
        "equality": 0,
        "non_equality": 0,
        "ke": 0,
        "vwc": 0,
        "unique_mis": 0,
    }
    combos: dict[str, int] = {}
    for row in rows:
        counts["total"] += 1
        if row.classification is None:
            counts["errors"] += 1
            continue
        c = row.classification
        counts["equality" if c.is_equality else "non_equality"] += 1
        counts["ke"] += c.is_ke
        counts["vwc"] += c.is_vwc
        counts["unique_mis"] += c.has_unique_mis
        key = (
            f"equality={int(c.is_equality)},ke={int(c.is_ke)},"
            f"vwc={int(c.is_vwc)},unique_mis={int(c.has_unique_mis)}"
        )
        combos[key] = combos.get(key, 0) + 1
    counts["combinations"] = dict(sorted(combos.items()))
    return counts


def largest_equality_collection(
    g: Graph, subset_cap: int = DEFAULT_SUBSET_CAP, cap: int = DEFAULT_CAP
) -> EqualityCollectionResult:
    """Largest nonempty subfamily of the maximum independent sets whose union
    plus intersection sizes equal 2*alpha.

    Exhaustive over all 2^|family| - 1 nonempty subsets; refuses (with an
    error) when the family exceeds ``subset_cap``.  Singletons always attain
    the equality, so the result is at least 1.  Ties break to the first
    witness in ascending index-list order.
    """
    omega = enumerate_omega(g, cap)
    m = len(omega)
    if m > subset_cap:
        raise ValueError(
            f"{m} maximum independent sets exceed subset_cap={subset_cap}; "
            f"exhaustive subset search refused"
        )
    target = 2 * (len(omega[0]) if m else 0)
    masks = [member.bits for member in omega]
    full = (1 << g.n) - 1
    best_size = 0
    best_indices: tuple[int, ...] = ()

    def dfs(i: int, chosen: tuple[int, ...], union: int, inter: int) -> None:
        nonlocal best_size, best_indices
        if chosen and union.bit_count() + inter.bit_count() == target:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_indices = chosen
        for j in range(i, m):
            dfs(j + 1, chosen + (j,), union | masks[j], inter & masks[j])

    dfs(0, (), 0, full)
    witness = MisFamily(g.n, tuple(omega[j] for j in best_indices), KIND_MAX_INDEPENDENT)
    return EqualityCollectionResult(
        max_size=best_size,
        witness=witness,
        omega_size=m,
        exhaustive=True,
    )
