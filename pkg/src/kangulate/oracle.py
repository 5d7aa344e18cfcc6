"""Exhaustive search for k-angulations on small point sets.

Plain backtracking over crossing-free edge subsets with sound pruning only
(degree lower bounds and the exact edge counts Euler's formula permits), so
a NotFound answer really is a proof of non-existence at this n.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .geom import PointSet
from .plane_graph import PlaneGraph, make_plane_graph
from .verify import verify_kangulation

FOUND = "found"
NOT_FOUND = "not-found"
EXHAUSTED = "exhausted"


@dataclass
class SearchBudget:
    max_points: int = 8
    max_nodes: int = 20_000_000
    time_limit: float = 120.0


@dataclass
class OracleResult:
    status: str
    graph: Optional[PlaneGraph] = None
    nodes_expanded: int = 0
    elapsed: float = 0.0


def _proper_crossing(xy, e1, e2) -> bool:
    a, b = xy[e1[0]], xy[e1[1]]
    c, d = xy[e2[0]], xy[e2[1]]

    def orient(p, q, r):
        v = (int(q[0]) - int(p[0])) * (int(r[1]) - int(p[1])) \
            - (int(q[1]) - int(p[1])) * (int(r[0]) - int(p[0]))
        return (v > 0) - (v < 0)

    d1, d2 = orient(a, b, c), orient(a, b, d)
    d3, d4 = orient(c, d, a), orient(c, d, b)
    return d1 * d2 < 0 and d3 * d4 < 0


def _edge_budgets(ps: PointSet, k: int) -> list[int]:
    """Edge counts compatible with Euler's formula: 2e = k(f-1) + r with
    f = e - n + 2 and the outer cycle through at least the hull vertices."""
    n = ps.n
    h = len(ps.hull)
    out = []
    for r in range(h, n + 1):
        num = k * (n - 1) - r
        if num % (k - 2) == 0:
            e = num // (k - 2)
            if n <= e <= 3 * n - 6:
                out.append(e)
    return sorted(set(out))


def brute_force_kangulation(ps: PointSet, k: int,
                            budget: SearchBudget | None = None) -> OracleResult:
    budget = budget or SearchBudget()
    n = ps.n
    t0 = time.perf_counter()
    if n < k or n < 3:
        return OracleResult(NOT_FOUND, elapsed=time.perf_counter() - t0)
    if n > budget.max_points:
        return OracleResult(EXHAUSTED, elapsed=time.perf_counter() - t0)

    cand = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(cand)
    xy = ps.xy
    conflict = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            e1, e2 = cand[a], cand[b]
            if e1[0] in e2 or e1[1] in e2:
                continue
            if _proper_crossing(xy, e1, e2):
                conflict[a] |= 1 << b
                conflict[b] |= 1 << a

    e_set = _edge_budgets(ps, k)
    if not e_set:
        return OracleResult(NOT_FOUND, elapsed=time.perf_counter() - t0)
    e_min, e_max = e_set[0], e_set[-1]
    e_valid = set(e_set)

    # suffix incidence counts: how many candidates at index >= i touch v
    suffix = [[0] * (m + 1) for _ in range(n)]
    for i in range(m - 1, -1, -1):
        u, v = cand[i]
        for w in range(n):
            suffix[w][i] = suffix[w][i + 1] + (1 if w in (u, v) else 0)

    deg = [0] * n
    chosen: list[int] = []
    nodes = 0
    deadline = t0 + budget.time_limit

    def attempt() -> Optional[PlaneGraph]:
        edges = [cand[i] for i in chosen]
        if any(d < 2 for d in deg):
            return None
        g = make_plane_graph(ps, edges, validate=False)
        if verify_kangulation(ps, edges, k).overall:
            return g
        return None

    def dfs(idx: int, used_mask: int, banned_mask: int) -> Optional[PlaneGraph]:
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes or time.perf_counter() > deadline:
            raise TimeoutError
        count = len(chosen)
        if count in e_valid:
            g = attempt()
            if g is not None:
                return g
        if count >= e_max or idx >= m:
            return None
        if count + (m - idx) < e_min:
            return None
        # taking cand[idx]
        u, v = cand[idx]
        if not (banned_mask >> idx) & 1:
            chosen.append(idx)
            deg[u] += 1
            deg[v] += 1
            g = dfs(idx + 1, used_mask | (1 << idx), banned_mask | conflict[idx])
            deg[u] -= 1
            deg[v] -= 1
            chosen.pop()
            if g is not None:
                return g
        # skipping cand[idx]: both endpoints must still be able to reach degree 2
        if deg[u] + suffix[u][idx + 1] >= 2 and deg[v] + suffix[v][idx + 1] >= 2:
            return dfs(idx + 1, used_mask, banned_mask)
        return None

    try:
        g = dfs(0, 0, 0)
    except TimeoutError:
        return OracleResult(EXHAUSTED, nodes_expanded=nodes,
                            elapsed=time.perf_counter() - t0)
    status = FOUND if g is not None else NOT_FOUND
    return OracleResult(status, graph=g, nodes_expanded=nodes,
                        elapsed=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# conjecture scan
# ---------------------------------------------------------------------------

@dataclass
class ScanRow:
    n: int
    seed: int
    interior: int
    j: int
    predicted: bool
    oracle_status: str
    agrees: bool


@dataclass
class ScanReport:
    k: int
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def discrepancies(self) -> list[ScanRow]:
        return [r for r in self.rows if not r.agrees]

    def to_text(self) -> str:
        lines = [f"conjecture scan, k = {self.k}",
                 f"{'n':>4} {'seed':>5} {'interior':>8} {'j':>3} "
                 f"{'predicted':>9} {'oracle':>10} {'ok':>3}"]
        for r in self.rows:
            lines.append(f"{r.n:>4} {r.seed:>5} {r.interior:>8} {r.j:>3} "
                         f"{str(r.predicted):>9} {r.oracle_status:>10} "
                         f"{'yes' if r.agrees else 'NO':>3}")
        lines.append(f"rows: {len(self.rows)}, discrepancies: {len(self.discrepancies)}")
        return "\n".join(lines)


def _scan_one(args) -> ScanRow:
    k, n, seed, budget = args
    from .gen import random_point_set
    from .partition import required_j

    ps = random_point_set(n, seed, span=max(32, 4 * n * n))
    j = required_j(n, k)
    predicted = ps.interior_count >= j
    res = brute_force_kangulation(ps, k, budget)
    agrees = (res.status == FOUND) == predicted if res.status != EXHAUSTED else True
    return ScanRow(n=n, seed=seed, interior=ps.interior_count, j=j,
                   predicted=predicted, oracle_status=res.status, agrees=agrees)


def conjecture_scan(k: int, n_range, sample_count: int,
                    budget: SearchBudget | None = None,
                    workers: int = 1) -> ScanReport:
    """Tabulate interior-count feasibility against exhaustive existence."""
    budget = budget or SearchBudget()
    jobs = [(k, n, seed, budget)
            for n in n_range for seed in range(sample_count)]
    report = ScanReport(k=k)
    if workers > 1:
        import multiprocessing as mp
        with mp.Pool(workers) as pool:
            for row in pool.imap(_scan_one, jobs):
                report.rows.append(row)
    else:
        for job in jobs:
            report.rows.append(_scan_one(job))
    return report
