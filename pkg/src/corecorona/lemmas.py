"""One witness-producing checker per verified statement.

Every checker returns a :class:`CheckReport`.  For statements that are
theorems over their hypotheses, ``passed=False`` never means "the statement
is wrong": it means a solver bug, and the report carries the counterexample
witness so the bug can be replayed.  Hypothesis breaches (a dependent S, a
family that is not made of maximum independent sets) raise
:class:`PreconditionError` instead of producing a failed check; the
``demonstrate_necessity`` mode evaluates the raw relation anyway and records
its truth value without a verdict.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum

from corecorona.graphs import Graph, VertexSet, serialize_graph6
from corecorona.independence import (
    DEFAULT_CAP,
    KIND_MAX_CLIQUE,
    KIND_MAX_INDEPENDENT,
    MisFamily,
    core_corona,
    enumerate_omega,
    independence_number,
    maximal_independent_within,
)
from corecorona.matching import Matching, saturating_matching, is_koenig_egervary


class Statement(str, Enum):
    """Wire identifiers for the twelve checked statements."""

    ML_I = "ML_i"
    ML_II = "ML_ii"
    ML_III = "ML_iii"
    SCL = "SCL"
    COR3 = "COR3"
    COR2 = "COR2_core_corona"
    PROP2 = "PROP2"
    PROP1_KE = "PROP1_KE"
    GITVAL = "GITVAL"
    COR1 = "COR1_core_matching"
    HAJNAL = "HAJNAL"
    BERGE = "BERGE"


ALL_STATEMENTS = tuple(s.value for s in Statement)

MODE_VERDICT = "verdict"
MODE_RAW = "raw"
MODE_SKIPPED = "skipped"


class PreconditionError(ValueError):
    """A checker hypothesis is not met; distinct from a failed check."""


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named statement check.

    ``passed`` is None in raw and skipped modes.  ``lhs``/``rhs`` are the two
    sides of the checked relation (for matching statements: the sizes of the
    set to saturate and of the target).  ``extra`` carries statement-specific
    bits such as the Koenig-Egervary equality flag.
    """

    statement: Statement
    passed: bool | None
    lhs: int
    rhs: int
    witness: Matching | MisFamily | VertexSet | None
    inputs_digest: str
    mode: str = MODE_VERDICT
    extra: dict = field(default_factory=dict)


def _digest(g: Graph, *parts: object) -> str:
    h = hashlib.sha256()
    h.update(serialize_graph6(g).encode())
    for part in parts:
        h.update(b";")
        h.update(repr(part).encode())
    return h.hexdigest()


def _family_digest_part(lam: MisFamily) -> tuple[int, ...]:
    return tuple(m.bits for m in lam)


def _require_bound(g: Graph, s: VertexSet, what: str = "S") -> None:
    if s.n != g.n:
        raise PreconditionError(f"{what} is bound to a different graph")


def _require_independent(g: Graph, s: VertexSet, what: str = "S") -> None:
    _require_bound(g, s, what)
    if not g.is_independent(s):
        raise PreconditionError(f"{what} is not independent")


def _require_max_independent_family(g: Graph, lam: MisFamily) -> int:
    """Every member must be a maximum independent set; returns alpha."""
    if lam.graph_n != g.n:
        raise PreconditionError("family bound to a different graph")
    if len(lam) == 0:
        raise PreconditionError("family is empty")
    alpha = independence_number(g)
    for m in lam:
        if len(m) != alpha or not g.is_independent(m):
            raise PreconditionError(
                f"family member {sorted(g.label(v) for v in m)} is not a "
                f"maximum independent set (the family is not within the "
                f"maximum-independent-set family of the graph)"
            )
    return alpha


def _require_max_clique_family(g: Graph, gamma: MisFamily) -> int:
    """Every member must be a maximum clique; returns omega."""
    if gamma.graph_n != g.n:
        raise PreconditionError("family bound to a different graph")
    if len(gamma) == 0:
        raise PreconditionError("family is empty")
    comp = g.complement()
    omega = independence_number(comp)
    for m in gamma:
        if len(m) != omega or not comp.is_independent(m):
            raise PreconditionError(
                f"family member {sorted(g.label(v) for v in m)} is not a maximum clique"
            )
    return omega


def _matching_part(
    g: Graph,
    statement: Statement,
    a: VertexSet,
    b: VertexSet,
    digest: str,
    mode: str = MODE_VERDICT,
) -> CheckReport:
    cert = saturating_matching(g, a, b)
    extra = {
        "side_a": [g.label(v) for v in a],
        "side_b": [g.label(v) for v in b],
    }
    if mode == MODE_RAW:
        extra["matching_exists"] = cert.saturated
    return CheckReport(
        statement=statement,
        passed=None if mode == MODE_RAW else cert.saturated,
        lhs=len(a),
        rhs=len(b),
        witness=cert.matching if cert.saturated else cert.violator,
        inputs_digest=digest,
        mode=mode,
        extra=extra,
    )


def check_matching_lemma(
    g: Graph,
    s: VertexSet,
    lam: MisFamily,
    x_index: int = 0,
    *,
    demonstrate_necessity: bool = False,
) -> tuple[CheckReport, CheckReport, CheckReport]:
    """Three saturation claims for an independent S against a family of
    maximum independent sets, with X the ``x_index``-th member:

    (i)   S - (intersection of the family)  into  (union of the family) - S
    (ii)  S - X                             into  X - S
    (iii) (S and X) - intersection          into  union - (X or S)
    """
    _require_independent(g, s)
    if not 0 <= x_index < len(lam):
        raise PreconditionError(f"x_index {x_index} outside family of size {len(lam)}")
    mode = MODE_VERDICT
    if demonstrate_necessity:
        if lam.graph_n != g.n or len(lam) == 0:
            raise PreconditionError("family is empty")
        mode = MODE_RAW
    else:
        _require_max_independent_family(g, lam)
    inter = lam.intersection()
    union = lam.union()
    x = lam[x_index]
    digest = _digest(g, s.bits, _family_digest_part(lam), x_index)
    return (
        _matching_part(g, Statement.ML_I, s - inter, union - s, digest, mode),
        _matching_part(g, Statement.ML_II, s - x, x - s, digest, mode),
        _matching_part(g, Statement.ML_III, (s & x) - inter, union - (x | s), digest, mode),
    )


def check_set_collection(
    g: Graph,
    s: VertexSet,
    lam: MisFamily,
    *,
    demonstrate_necessity: bool = False,
) -> CheckReport:
    """|S| + alpha <= |intersection and S| + |union or S| for independent S
    and a nonempty family of maximum independent sets.

    In necessity mode the family hypothesis is not enforced and the raw
    relation 2|S| <= |intersection and S| + |union or S| is reported without
    a verdict (with a genuine maximum S and a valid family this is the tight
    collection form; with a bogus family it can fail).
    """
    _require_independent(g, s)
    digest = _digest(g, s.bits, _family_digest_part(lam))
    inter = lam.intersection() if len(lam) else None
    if demonstrate_necessity:
        if inter is None:
            raise PreconditionError("family is empty")
        lhs = 2 * len(s)
        rhs = len(inter & s) + len(lam.union() | s)
        return CheckReport(
            statement=Statement.SCL,
            passed=None,
            lhs=lhs,
            rhs=rhs,
            witness=None,
            inputs_digest=digest,
            mode=MODE_RAW,
            extra={"relation_holds": lhs <= rhs},
        )
    alpha = _require_max_independent_family(g, lam)
    lhs = len(s) + alpha
    rhs = len(lam.intersection() & s) + len(lam.union() | s)
    return CheckReport(
        statement=Statement.SCL,
        passed=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        witness=None,
        inputs_digest=digest,
    )


def check_collection_bound(g: Graph, lam: MisFamily) -> CheckReport:
    """2*alpha <= |intersection| + |union| over a nonempty family of maximum
    independent sets."""
    alpha = _require_max_independent_family(g, lam)
    lhs = 2 * alpha
    rhs = len(lam.intersection()) + len(lam.union())
    return CheckReport(
        statement=Statement.COR3,
        passed=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        witness=None,
        inputs_digest=_digest(g, _family_digest_part(lam)),
    )


def check_core_corona_bounds(g: Graph, cap: int = DEFAULT_CAP) -> tuple[CheckReport, CheckReport]:
    """Two bounds on |core| + |corona|: at least 2*alpha, and (for graphs
    with at least one edge) at most alpha + n - 1.  The upper-bound report is
    marked skipped on edgeless graphs, where its hypothesis fails."""
    cc = core_corona(g, cap)
    digest = _digest(g)
    total = len(cc.core) + len(cc.corona)
    lower = CheckReport(
        statement=Statement.COR2,
        passed=2 * cc.alpha <= total,
        lhs=2 * cc.alpha,
        rhs=total,
        witness=None,
        inputs_digest=digest,
    )
    if g.edge_count() == 0:
        upper = CheckReport(
            statement=Statement.PROP2,
            passed=None,
            lhs=total,
            rhs=cc.alpha + g.n - 1,
            witness=None,
            inputs_digest=digest,
            mode=MODE_SKIPPED,
            extra={"reason": "edgeless graph"},
        )
    else:
        upper = CheckReport(
            statement=Statement.PROP2,
            passed=total <= cc.alpha + g.n - 1,
            lhs=total,
            rhs=cc.alpha + g.n - 1,
            witness=None,
            inputs_digest=digest,
        )
    return lower, upper


def check_ke_equality(g: Graph, cap: int = DEFAULT_CAP) -> CheckReport:
    """Koenig-Egervary graphs must satisfy 2*alpha = |core| + |corona|.

    Non-KE graphs pass vacuously; the equality flag is still recorded since
    the converse fails (some non-KE graphs attain the equality too) and the
    equality scanner wants that statistic."""
    cc = core_corona(g, cap)
    ke = is_koenig_egervary(g)
    lhs = 2 * cc.alpha
    rhs = len(cc.core) + len(cc.corona)
    equality = lhs == rhs
    return CheckReport(
        statement=Statement.PROP1_KE,
        passed=equality if ke else True,
        lhs=lhs,
        rhs=rhs,
        witness=None,
        inputs_digest=_digest(g),
        extra={"is_ke": ke, "equality": equality},
    )


def check_gitval(g: Graph, cap: int = DEFAULT_CAP) -> CheckReport:
    """alpha - |core| <= tau - |intersection of the complements of all
    maximum independent sets|, with tau = n - alpha and the right-hand
    intersection equal to n - |corona|."""
    cc = core_corona(g, cap)
    tau = g.n - cc.alpha
    inter_complements = g.n - len(cc.corona)
    lhs = cc.alpha - len(cc.core)
    rhs = tau - inter_complements
    return CheckReport(
        statement=Statement.GITVAL,
        passed=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        witness=None,
        inputs_digest=_digest(g),
    )


def check_core_matching(g: Graph, s_index: int, cap: int = DEFAULT_CAP) -> CheckReport:
    """For the ``s_index``-th maximum independent set S (canonical order),
    S - core must match into corona - S."""
    omega = enumerate_omega(g, cap)
    if not 0 <= s_index < len(omega):
        raise PreconditionError(f"s_index {s_index} outside family of size {len(omega)}")
    s = omega[s_index]
    cc = core_corona(g, cap)
    return _matching_part(
        g,
        Statement.COR1,
        s - cc.core,
        cc.corona - s,
        _digest(g, s_index),
    )


def check_hajnal(g: Graph, gamma: MisFamily) -> CheckReport:
    """|intersection| >= 2*omega - |union| over a nonempty family of maximum
    cliques; evaluated both directly and as the collection bound on the
    complement, which must agree."""
    omega_number = _require_max_clique_family(g, gamma)
    lhs = 2 * omega_number
    rhs = len(gamma.intersection()) + len(gamma.union())
    dual = check_collection_bound(
        g.complement(),
        MisFamily(gamma.graph_n, gamma.members, KIND_MAX_INDEPENDENT),
    )
    if (dual.lhs, dual.rhs) != (lhs, rhs):
        raise AssertionError(
            f"clique/independence duality mismatch: {(lhs, rhs)} vs {(dual.lhs, dual.rhs)}"
        )
    return CheckReport(
        statement=Statement.HAJNAL,
        passed=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        witness=None,
        inputs_digest=_digest(g, _family_digest_part(gamma)),
    )


def check_berge(g: Graph, x: VertexSet, cap: int = DEFAULT_CAP) -> CheckReport:
    """An independent X is maximum iff every independent set disjoint from X
    can be matched into X.

    The right-hand condition is decided on maximal independent sets of the
    graph minus X only: a matching saturating a maximal S restricts to a
    matching saturating any subset, so saturability is downward monotone.
    """
    _require_independent(g, x, "X")
    alpha = independence_number(g)
    condition = True
    failing: VertexSet | None = None
    rest = maximal_independent_within(g, x.complement(), cap)
    for s in rest:
        cert = saturating_matching(g, s, x)
        if not cert.saturated:
            condition = False
            failing = s
            break
    is_maximum = len(x) == alpha
    return CheckReport(
        statement=Statement.BERGE,
        passed=condition == is_maximum,
        lhs=len(x),
        rhs=alpha,
        witness=failing,
        inputs_digest=_digest(g, x.bits),
        extra={"condition": condition},
    )
