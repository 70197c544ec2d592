"""Exact set-coloring Ramsey numbers by exhaustive backtracking.

Edges of K_n are colored in canonical order, so after each step the colored
part is a clique K_t plus a prefix of the next vertex's edges. A new edge
can only create copies that use it, which keeps the pruning test local.

Two symmetry reductions are applied, both compatible with choosing the
lexicographically smallest coloring in each orbit (masks compared as
integers, edges in canonical order):

* the first edge takes the smallest mask among those obtained by permuting
  elements inside groups of identical targets;
* for every pair of consecutive vertices v-1, v the row of masks from v to
  the earlier vertices 0..v-2 is lexicographically >= the row of v-1.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .coloring import Certificate, SetColoring, mask_of
from .detect import VALID_AND_FREE, contains_target_through, verify_certificate
from .graph import CapacityError, TargetSpec, format_targets, num_pairs, pair_table

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9

GOOD = "good"
FORCED = "forced"
UNKNOWN = "unknown"

__all__ = [
    "DEFAULT_BUDGET",
    "GOOD",
    "FORCED",
    "UNKNOWN",
    "SearchStats",
    "HostDecision",
    "SearchResult",
    "all_masks",
    "first_edge_masks",
    "decide",
    "ramsey_number",
]


@dataclass
class SearchStats:
    nodes: int = 0
    mono_prunes: int = 0
    symmetry_prunes: int = 0
    branches: int = 1
    wall_time: float = 0.0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.mono_prunes += other.mono_prunes
        self.symmetry_prunes += other.symmetry_prunes

    def to_json(self) -> dict:
        return {
            "nodes": self.nodes,
            "mono_prunes": self.mono_prunes,
            "symmetry_prunes": self.symmetry_prunes,
            "branches": self.branches,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass
class HostDecision:
    """Outcome of :func:`decide` on one host K_n."""

    n: int
    outcome: str
    certificate: Certificate | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    def to_json(self) -> dict:
        out = {"n": self.n, "outcome": self.outcome, "stats": self.stats.to_json()}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def all_masks(r: int, s: int) -> list[int]:
    """Every s-subset of {1..r} as a mask, in increasing integer order."""
    return sorted(mask_of(c) for c in combinations(range(1, r + 1), s))


def _target_groups(targets: Sequence[TargetSpec]) -> list[int]:
    """Element masks of the maximal groups of identical targets."""
    groups: dict[TargetSpec, int] = {}
    for i, t in enumerate(targets):
        groups[t] = groups.get(t, 0) | 1 << i
    return list(groups.values())


def first_edge_masks(r: int, s: int, targets: Sequence[TargetSpec]) -> list[int]:
    """One representative per orbit of color sets under in-group permutations.

    A representative uses the lowest elements of each group, which makes it
    the smallest mask of its orbit.
    """
    groups = _target_groups(targets)
    reps = set()
    for m in all_masks(r, s):
        rep = 0
        for g in groups:
            k = (m & g).bit_count()
            low = g
            for _ in range(g.bit_count() - k):
                low &= ~(1 << (low.bit_length() - 1))
            rep |= low
        reps.add(rep)
    return sorted(reps)


class _Budget(Exception):
    pass


class _Searcher:
    def __init__(
        self, n: int, r: int, s: int, targets: Sequence[TargetSpec], budget: int, symmetry: bool = True
    ):
        self.n, self.r, self.s = n, r, s
        self.symmetry = symmetry
        self.targets = tuple(targets)
        self.pairs = pair_table(n)
        self.masks = all_masks(r, s)
        self.first = first_edge_masks(r, s, targets) if symmetry else self.masks
        self.budget = budget
        self.stats = SearchStats()
        self.assign = [0] * len(self.pairs)
        self.adj = [[0] * n for _ in range(r)]
        self.tie = [True] * n
        # element bits for each mask, computed once
        self.elements = {m: [b for b in range(r) if m >> b & 1] for m in self.masks}
        # a target larger than the host can never appear
        self.live = [t.order <= n for t in self.targets]

    def _candidates(self, idx: int) -> list[int]:
        return self.first if idx == 0 else self.masks

    def _place(self, idx: int, m: int) -> bool:
        """Color edge ``idx`` with ``m``; False (and nothing changed) if it must be pruned."""
        u, v = self.pairs[idx]
        tie_before = self.tie[v] and self.symmetry
        if u < v - 1 and tie_before:
            prev = self.assign[idx - (v - 1)]  # edge (u, v-1)
            if m < prev:
                self.stats.symmetry_prunes += 1
                return False
        self.assign[idx] = m
        bu, bv = 1 << u, 1 << v
        for i in self.elements[m]:
            a = self.adj[i]
            a[u] |= bv
            a[v] |= bu
        for i in self.elements[m]:
            if self.live[i] and contains_target_through(self.adj[i], self.targets[i], u, v):
                self._unplace(idx, m)
                self.stats.mono_prunes += 1
                return False
        if u < v - 1 and tie_before and m != self.assign[idx - (v - 1)]:
            self.tie[v] = False
        return True

    def _unplace(self, idx: int, m: int) -> None:
        u, v = self.pairs[idx]
        bu, bv = 1 << u, 1 << v
        for i in self.elements[m]:
            a = self.adj[i]
            a[u] &= ~bv
            a[v] &= ~bu
        self.assign[idx] = 0

    def _enter(self, idx: int) -> None:
        if self.pairs[idx][0] == 0:
            self.tie[self.pairs[idx][1]] = True

    def run(self, prefix: Sequence[int] = ()) -> bool:
        """Search completions of ``prefix``; True when a free coloring is found."""
        for idx, m in enumerate(prefix):
            self._enter(idx)
            if not self._place(idx, m):
                return False
        return self._dfs(len(prefix))

    def _dfs(self, idx: int) -> bool:
        if idx == len(self.pairs):
            return True
        self._enter(idx)
        v = self.pairs[idx][1]
        tie_before = self.tie[v]
        for m in self._candidates(idx):
            self.stats.nodes += 1
            if self.stats.nodes > self.budget:
                raise _Budget
            if not self._place(idx, m):
                continue
            if self._dfs(idx + 1):
                return True
            self._unplace(idx, m)
            self.tie[v] = tie_before
        return False

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All prefixes of length ``depth`` surviving pruning, in search order."""
        out: list[tuple[int, ...]] = []

        def rec(idx: int, acc: list[int]) -> None:
            if idx == depth:
                out.append(tuple(acc))
                return
            self._enter(idx)
            v = self.pairs[idx][1]
            tie_before = self.tie[v]
            for m in self._candidates(idx):
                if not self._place(idx, m):
                    continue
                acc.append(m)
                rec(idx + 1, acc)
                acc.pop()
                self._unplace(idx, m)
                self.tie[v] = tie_before

        rec(0, [])
        return out

    def certificate(self) -> Certificate:
        c = SetColoring(self.n, self.r, self.s, tuple(self.assign))
        return Certificate(c, self.targets)


def _check_instance(n: int, r: int, s: int, targets: Sequence[TargetSpec]) -> None:
    if n < 1:
        raise ValueError("host needs at least one vertex")
    if not r > s >= 1:
        raise ValueError(f"need r > s >= 1, got r={r}, s={s}")
    if len(targets) != r:
        raise ValueError(f"need {r} targets, got {len(targets)}")
    if r > 64:
        raise CapacityError(f"palette size r={r} exceeds 64")
    if n > 64:
        raise CapacityError(f"host K_{n} exceeds the 64-vertex limit")


def _run_branch(args) -> tuple[str, tuple[int, ...] | None, SearchStats]:
    n, r, s, targets, budget, symmetry, prefix = args
    srch = _Searcher(n, r, s, targets, budget, symmetry)
    try:
        found = srch.run(prefix)
    except _Budget:
        return UNKNOWN, None, srch.stats
    return (GOOD, tuple(srch.assign), srch.stats) if found else (FORCED, None, srch.stats)


def _verified(n: int, r: int, s: int, targets, assign) -> Certificate:
    cert = Certificate(SetColoring(n, r, s, tuple(assign)), tuple(targets))
    if verify_certificate(cert).status != VALID_AND_FREE:
        raise AssertionError("search produced a coloring that fails verification")
    return cert


def decide(
    n: int,
    r: int,
    s: int,
    targets: Sequence[TargetSpec],
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    prefix_depth: int = 3,
    symmetry: bool = True,
) -> HostDecision:
    """Is there an (r,s)-coloring of K_n with no G_i inside class i?

    Returns ``good`` with a verified certificate, ``forced`` when the search
    space (modulo the symmetry reductions) is exhausted, or ``unknown`` when
    more than ``budget`` nodes would be needed. With ``threads > 1`` the
    search is split into the surviving prefixes of the first
    ``prefix_depth`` edges; each branch gets the full budget, and the good
    branch of lowest index is reported. ``symmetry=False`` disables both
    reductions, which is only useful for cross-checking.
    """
    targets = tuple(targets)
    _check_instance(n, r, s, targets)
    start = time.perf_counter()
    if threads <= 1 or num_pairs(n) <= prefix_depth:
        srch = _Searcher(n, r, s, targets, budget, symmetry)
        try:
            found = srch.run()
            outcome = GOOD if found else FORCED
        except _Budget:
            outcome = UNKNOWN
        stats = srch.stats
        cert = _verified(n, r, s, targets, srch.assign) if outcome == GOOD else None
    else:
        prefixes = _Searcher(n, r, s, targets, budget, symmetry).prefixes(prefix_depth)
        stats = SearchStats(branches=len(prefixes))
        outcome, cert = FORCED, None
        jobs = [(n, r, s, targets, budget, symmetry, p) for p in prefixes]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_branch, j) for j in jobs]
            for k, fut in enumerate(futures):
                status, assign, st = fut.result()
                stats.add(st)
                if status == GOOD:
                    outcome = GOOD
                    cert = _verified(n, r, s, targets, assign)
                    for rest in futures[k + 1:]:
                        rest.cancel()
                    break
                if status == UNKNOWN:
                    outcome = UNKNOWN
    stats.wall_time = time.perf_counter() - start
    log.debug("decide n=%d: %s after %d nodes", n, outcome, stats.nodes)
    return HostDecision(n, outcome, cert, stats)


@dataclass
class SearchResult:
    """Result of :func:`ramsey_number`.

    ``status`` is ``exact`` (then ``lo == hi == value``) or ``interval``.
    ``certificate`` colors K_{lo-1} whenever a good host was established.
    """

    r: int
    s: int
    targets: tuple[TargetSpec, ...]
    status: str
    lo: int
    hi: int | None
    certificate: Certificate | None
    decisions: list[HostDecision]
    stats: SearchStats

    @property
    def value(self) -> int | None:
        return self.lo if self.status == "exact" else None

    def to_json(self) -> dict:
        out = {
            "instance": {"r": self.r, "s": self.s, "targets": format_targets(self.targets)},
            "status": self.status,
            "exact": self.value,
            "interval": [self.lo, self.hi],
            "decisions": [{"n": d.n, "outcome": d.outcome, "nodes": d.stats.nodes} for d in self.decisions],
            "stats": self.stats.to_json(),
            "certificate": self.certificate.to_json() if self.certificate else None,
        }
        return out


def ramsey_number(
    r: int,
    s: int,
    targets: Sequence[TargetSpec],
    n_cap: int,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> SearchResult:
    """Smallest n such that every (r,s)-coloring of K_n is forced, searched up to ``n_cap``.

    The scan starts one below the best known lower bound, walks down until a
    good host is confirmed, then walks up until a forced host appears. An
    exact answer always rests on a verified certificate at value-1 and an
    exhaustive forced decision at value; nothing from the bounds database
    is taken on trust. Proven upper bounds (Turán scan, star degree count)
    cap the interval when the search stops early.
    """
    from .bounds import aggregate_bounds

    targets = tuple(targets)
    _check_instance(1, r, s, targets)
    report = aggregate_bounds(r, s, targets)
    seed_lo = report.interval[0]
    # database values only choose where to start; the reported upper end
    # must come from a proof (a calculator) or from the search itself
    proven = [e for e in report.entries if e.usable and e.name not in ("known_value", "monotone")]
    bound_lo = max((e.value for e in proven if e.side == "lower"), default=1)
    bound_hi = min((e.value for e in proven if e.side == "upper"), default=None)
    start = time.perf_counter()
    stats = SearchStats()
    decisions: list[HostDecision] = []

    def run(n: int) -> HostDecision:
        d = decide(n, r, s, targets, budget=budget, threads=threads)
        decisions.append(d)
        stats.add(d.stats)
        return d

    def finish(status: str, lo: int, hi: int | None, cert: Certificate | None) -> SearchResult:
        stats.wall_time = time.perf_counter() - start
        stats.branches = max((d.stats.branches for d in decisions), default=1)
        return SearchResult(r, s, targets, status, lo, hi, cert, decisions, stats)

    lo_proven = bound_lo
    hi_proven: int | None = bound_hi
    forced_min: int | None = None
    cert: Certificate | None = None
    n = max(1, min(seed_lo - 1, n_cap))
    while n >= 1:
        d = run(n)
        if d.outcome == GOOD:
            lo_proven, cert = max(lo_proven, n + 1), d.certificate
            break
        if d.outcome == UNKNOWN:
            return finish("interval", lo_proven, hi_proven, cert)
        forced_min = n
        n -= 1
    if forced_min == lo_proven:
        return finish("exact", lo_proven, lo_proven, cert)

    n = lo_proven
    while n <= n_cap:
        d = run(n)
        if d.outcome == FORCED:
            return finish("exact", n, n, cert)
        if d.outcome == UNKNOWN:
            break
        lo_proven, cert = n + 1, d.certificate
        n += 1
    if hi_proven is not None and hi_proven < lo_proven:
        hi_proven = None
    return finish("interval", lo_proven, hi_proven, cert)
