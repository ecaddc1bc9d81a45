"""Drivers behind the CLI: single-graph verification runs and seeded random
campaigns over the full statement suite.

A campaign is reproducible byte for byte: every graph and every random
family choice derives from the campaign seed through SHA-256, never from
process state.  Campaign rows aggregate passing checks into per-statement
counters and keep full JSON only for failures, skips, and errors; verify
rows keep everything (single graphs stay small).
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from corecorona import __version__
from corecorona.graphs import PRNG_NAME, Graph, VertexSet, erdos_renyi, serialize_graph6
from corecorona.independence import (
    DEFAULT_CAP,
    CapExceededError,
    MisFamily,
    enumerate_max_cliques,
    enumerate_omega,
)
from corecorona.lemmas import (
    ALL_STATEMENTS,
    CheckReport,
    Statement,
    check_berge,
    check_collection_bound,
    check_core_corona_bounds,
    check_core_matching,
    check_gitval,
    check_hajnal,
    check_ke_equality,
    check_matching_lemma,
    check_set_collection,
)
from corecorona.reports import check_json


def derive_seed(*parts: object) -> int:
    """Stable 64-bit seed from arbitrary parts (composition via SHA-256)."""
    h = hashlib.sha256(":".join(map(str, parts)).encode()).digest()
    return int.from_bytes(h[:8], "big")


@dataclass(frozen=True)
class CampaignSpec:
    n_values: tuple[int, ...]
    p_values: tuple[float, ...]
    count_per_cell: int
    seed: int
    omega_cap: int = DEFAULT_CAP
    subset_cap: int = 20  # echoed for downstream subset searches
    statements: tuple[str, ...] = ALL_STATEMENTS

    def __post_init__(self) -> None:
        if self.count_per_cell < 1:
            raise ValueError("count_per_cell must be at least 1")
        unknown = set(self.statements) - set(ALL_STATEMENTS)
        if unknown:
            raise ValueError(f"unknown statements: {sorted(unknown)}")

    def to_json(self) -> dict:
        return {
            "n_values": list(self.n_values),
            "p_values": list(self.p_values),
            "count_per_cell": self.count_per_cell,
            "seed": self.seed,
            "omega_cap": self.omega_cap,
            "subset_cap": self.subset_cap,
            "statements": list(self.statements),
        }


@dataclass
class SuitePolicy:
    """Which S sets, families, and Berge pivots a suite run ranges over."""

    s_choices: list[VertexSet]
    lam_choices: list[MisFamily]
    gamma_choices: list[MisFamily]
    berge_xs: list[VertexSet]
    omega: MisFamily
    x_index: int = 0


def _dedupe_families(families: Iterable[MisFamily]) -> list[MisFamily]:
    seen = set()
    out = []
    for fam in families:
        key = tuple(sorted(m.bits for m in fam))
        if key not in seen:
            seen.add(key)
            out.append(fam)
    return out


def default_policy(
    g: Graph,
    omega_cap: int = DEFAULT_CAP,
    *,
    rng: random.Random | None = None,
    exhaustive: bool = False,
) -> SuitePolicy:
    """Verify policy: families fixed to the full family; S over the maximum
    independent sets plus the empty set (or every independent set when
    ``exhaustive``).  With an ``rng``, campaign policy: families range over
    a singleton, the full family, and one random nonempty subfamily, and the
    Berge pivots shrink to the first member plus the empty set."""
    omega = enumerate_omega(g, omega_cap)
    empty = g.empty_set()
    if exhaustive:
        s_choices = [
            VertexSet(g.n, bits)
            for bits in range(1 << g.n)
            if g.is_independent(VertexSet(g.n, bits))
        ]
    else:
        s_choices = list(omega) + [empty]

    def subfamilies(full: MisFamily) -> list[MisFamily]:
        first = MisFamily(g.n, (full[0],), full.kind)
        choices = [first, full]
        if rng is not None and len(full) > 1:
            members = tuple(m for m in full if rng.random() < 0.5)
            if not members:
                members = (full[rng.randrange(len(full))],)
            choices.append(MisFamily(g.n, members, full.kind))
        return _dedupe_families(choices)

    lam_choices = subfamilies(omega) if rng is not None else [omega]
    gamma_full = enumerate_max_cliques(g, omega_cap)
    gamma_choices = subfamilies(gamma_full) if rng is not None else [gamma_full]
    if rng is not None:
        berge_xs = [omega[0], empty] if len(omega) else [empty]
    else:
        berge_xs = s_choices
    return SuitePolicy(
        s_choices=s_choices,
        lam_choices=lam_choices,
        gamma_choices=gamma_choices,
        berge_xs=berge_xs,
        omega=omega,
    )


def suite_reports(
    g: Graph,
    policy: SuitePolicy,
    statements: tuple[str, ...] = ALL_STATEMENTS,
    omega_cap: int = DEFAULT_CAP,
) -> Iterator[CheckReport]:
    """Run the selected statement checkers under ``policy``, yielding reports."""
    want = set(statements)
    ml_parts = want & {Statement.ML_I.value, Statement.ML_II.value, Statement.ML_III.value}
    for s in policy.s_choices:
        for lam in policy.lam_choices:
            if ml_parts:
                for report in check_matching_lemma(g, s, lam, policy.x_index):
                    if report.statement.value in ml_parts:
                        yield report
            if Statement.SCL.value in want:
                yield check_set_collection(g, s, lam)
    if Statement.COR3.value in want:
        for lam in policy.lam_choices:
            yield check_collection_bound(g, lam)
    if Statement.COR2.value in want or Statement.PROP2.value in want:
        lower, upper = check_core_corona_bounds(g, omega_cap)
        if Statement.COR2.value in want:
            yield lower
        if Statement.PROP2.value in want:
            yield upper
    if Statement.PROP1_KE.value in want:
        yield check_ke_equality(g, omega_cap)
    if Statement.GITVAL.value in want:
        yield check_gitval(g, omega_cap)
    if Statement.COR1.value in want:
        for s_index in range(len(policy.omega)):
            yield check_core_matching(g, s_index, omega_cap)
    if Statement.HAJNAL.value in want:
        for gamma in policy.gamma_choices:
            yield check_hajnal(g, gamma)
    if Statement.BERGE.value in want:
        for x in policy.berge_xs:
            yield check_berge(g, x, omega_cap)


@dataclass
class Tally:
    run: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0
    by_statement: dict = field(default_factory=dict)

    def add(self, report: CheckReport) -> None:
        self.run += 1
        stmt = self.by_statement.setdefault(
            report.statement.value, {"run": 0, "passed": 0, "failed": 0, "skipped": 0}
        )
        stmt["run"] += 1
        if report.mode == "skipped" or report.passed is None:
            self.skipped += 1
            stmt["skipped"] += 1
        elif report.passed:
            self.passed += 1
            stmt["passed"] += 1
        else:
            self.failed += 1
            stmt["failed"] += 1

    def to_json(self) -> dict:
        return {
            "checks_run": self.run,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "errors": self.errors,
            "by_statement": {k: dict(v) for k, v in sorted(self.by_statement.items())},
        }


def _base_report(kind: str, spec_echo: dict, reproducible: bool) -> dict:
    report = {
        "version": __version__,
        "kind": kind,
        "prng": PRNG_NAME,
        "spec": spec_echo,
        "reproducible": reproducible,
    }
    return report


def run_verify(
    items: list[tuple[str, Graph]],
    statements: tuple[str, ...] = ALL_STATEMENTS,
    omega_cap: int = DEFAULT_CAP,
    exhaustive: bool = False,
    reproducible: bool = False,
) -> tuple[dict, int]:
    """Full statement suite on explicit graphs; returns (report, exit_code)."""
    started = time.perf_counter()
    tally = Tally()
    rows = []
    for graph_id, g in items:
        row: dict = {
            "id": graph_id,
            "graph": serialize_graph6(g),
            "labels": list(g.labels),
            "checks": [],
            "errors": [],
        }
        try:
            policy = default_policy(g, omega_cap, exhaustive=exhaustive)
            for report in suite_reports(g, policy, statements, omega_cap):
                tally.add(report)
                row["checks"].append(check_json(report, g))
        except CapExceededError as exc:
            tally.errors += 1
            row["errors"].append(str(exc))
        rows.append(row)
    report = _base_report(
        "verify",
        {
            "statements": list(statements),
            "omega_cap": omega_cap,
            "exhaustive": exhaustive,
            "inputs": [graph_id for graph_id, _ in items],
        },
        reproducible,
    )
    report["results"] = rows
    report["summary"] = tally.to_json()
    if not reproducible:
        report["wall_time_s"] = round(time.perf_counter() - started, 3)
    exit_code = 0 if tally.failed == 0 and tally.errors == 0 else 1
    return report, exit_code


def campaign_graphs(spec: CampaignSpec) -> Iterator[tuple[int, float, int, int, Graph]]:
    for n in spec.n_values:
        for p in spec.p_values:
            for i in range(spec.count_per_cell):
                seed_i = derive_seed(spec.seed, n, p, i)
                yield n, p, i, seed_i, erdos_renyi(n, p, seed_i)


def run_campaign(spec: CampaignSpec, reproducible: bool = False) -> tuple[dict, int]:
    """Theorem-suite campaign over seeded random graphs.

    Each row aggregates its graph's checks; failures and errors are kept in
    full so a red run is replayable.  Cap overflows count as errors on the
    summary but never as failures.
    """
    started = time.perf_counter()
    tally = Tally()
    rows = []
    for n, p, i, seed_i, g in campaign_graphs(spec):
        row: dict = {"n": n, "p": p, "index": i, "seed": seed_i, "graph": serialize_graph6(g)}
        rng = random.Random(derive_seed(spec.seed, "family-choice", n, p, i))
        failures = []
        errors = []
        checks = 0
        try:
            policy = default_policy(g, spec.omega_cap, rng=rng)
            for report in suite_reports(g, policy, spec.statements, spec.omega_cap):
                tally.add(report)
                checks += 1
                if report.passed is False:
                    failures.append(check_json(report, g))
        except CapExceededError as exc:
            tally.errors += 1
            errors.append(str(exc))
        row["checks_run"] = checks
        if failures:
            row["failures"] = failures
            row["labels"] = list(g.labels)
        if errors:
            row["errors"] = errors
        rows.append(row)
    report = _base_report("campaign", spec.to_json(), reproducible)
    report["results"] = rows
    report["summary"] = tally.to_json()
    report["summary"]["graphs"] = len(rows)
    if not reproducible:
        report["wall_time_s"] = round(time.perf_counter() - started, 3)
    exit_code = 0 if tally.failed == 0 else 1
    return report, exit_code
