from __future__ import annotations

import sys
from pathlib import Path

import hypothesis.strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from corecorona.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << m) - 1)) if m else 0
    edges = []
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (mask >> k) & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def sample_graphs(count: int, max_n: int = 9, seed: int = 20260809):
    """Deterministic random-graph battery shared by oracle-style tests."""
    from corecorona.graphs import erdos_renyi
    from corecorona.harness import derive_seed

    p_cycle = (0.15, 0.3, 0.5, 0.7, 0.85)
    out = []
    for i in range(count):
        n = 1 + i % max_n
        p = p_cycle[i % len(p_cycle)]
        out.append(erdos_renyi(n, p, derive_seed(seed, n, p, i)))
    return out
