"""Edge decompositions of complete graphs.

* ``one_factorization(2n)``: 2n-1 perfect matchings (round-robin rotation).
* ``hamilton_decomposition(2n+1)``: n Hamilton cycles, the classical zig-zag
  family ``v_{2n+1} v_i v_{i-1} v_{i+1} v_{i-2} ... v_{i+n-1} v_{i-n}``.
* ``maximal_matching_decomposition(2n+1)``: 2n+1 matchings of size n, each
  missing exactly one vertex, obtained by cutting one edge out of every
  Hamilton cycle and splitting the resulting paths alternately.

Vertex ``v_j`` of the 1-based formulas is vertex ``j - 1`` here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import num_pairs

__all__ = [
    "ParityError",
    "MatchingList",
    "CycleList",
    "DecompositionReport",
    "one_factorization",
    "hamilton_decomposition",
    "maximal_matching_decomposition",
    "maximal_matching_decomposition_rotation",
    "check_decomposition",
    "special_matching",
]


class ParityError(ValueError):
    pass


Edge = tuple[int, int]


def _norm(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class MatchingList:
    host_n: int
    matchings: tuple[tuple[Edge, ...], ...]
    uncovered: tuple[int | None, ...] = ()

    def to_json(self, kind: str) -> dict:
        return {
            "n": self.host_n,
            "kind": kind,
            "parts": [[list(e) for e in m] for m in self.matchings],
            "uncovered": list(self.uncovered),
        }


@dataclass(frozen=True)
class CycleList:
    host_n: int
    cycles: tuple[tuple[int, ...], ...]

    def cycle_edges(self, i: int) -> list[Edge]:
        c = self.cycles[i]
        return [_norm(c[j], c[(j + 1) % len(c)]) for j in range(len(c))]

    def to_json(self, kind: str = "ham") -> dict:
        return {
            "n": self.host_n,
            "kind": kind,
            "parts": [[list(e) for e in self.cycle_edges(i)] for i in range(len(self.cycles))],
            "uncovered": [],
            "cycles": [list(c) for c in self.cycles],
        }


def one_factorization(n_even: int) -> MatchingList:
    """Round-robin 1-factorization of K_n: vertex n-1 fixed, 0..n-2 rotate."""
    if n_even < 2 or n_even % 2:
        raise ParityError(f"one_factorization needs an even n >= 2, got {n_even}")
    m = n_even - 1
    rounds = []
    for k in range(m):
        match = [_norm(n_even - 1, k)]
        for j in range(1, n_even // 2):
            match.append(_norm((k - j) % m, (k + j) % m))
        rounds.append(tuple(match))
    return MatchingList(n_even, tuple(rounds), (None,) * m)


def _check_odd(n_odd: int, what: str) -> int:
    if n_odd < 3 or n_odd % 2 == 0:
        raise ParityError(f"{what} needs an odd n >= 3, got {n_odd}")
    return (n_odd - 1) // 2


def _vertex(n: int, j: int) -> int:
    """0-based label of v_j, subscripts other than 2n+1 read mod 2n in 1..2n."""
    return (j - 1) % (2 * n)


def hamilton_decomposition(n_odd: int) -> CycleList:
    n = _check_odd(n_odd, "hamilton_decomposition")
    hub = 2 * n
    cycles = []
    for i in range(1, n + 1):
        seq = [hub, _vertex(n, i)]
        for k in range(1, n):
            seq.append(_vertex(n, i - k))
            seq.append(_vertex(n, i + k))
        seq.append(_vertex(n, i - n))
        cycles.append(tuple(seq))
    return CycleList(n_odd, tuple(cycles))


def special_matching(n: int) -> dict[int, Edge]:
    """The matching that takes one edge from each Hamilton cycle of K_{2n+1}.

    Returns ``{i: (a, b)}`` where ``(a, b)`` is a consecutive pair of cycle
    ``C_i`` in traversal order: ``v_{2n+1} v_1`` for i = 1, ``v_{i+n-1} v_{i-n}``
    for even i and ``v_i v_{i-1}`` for odd i > 1.
    """
    picked = {1: (2 * n, _vertex(n, 1))}
    for i in range(2, n + 1):
        if i % 2 == 0:
            picked[i] = (_vertex(n, i + n - 1), _vertex(n, i - n))
        else:
            picked[i] = (_vertex(n, i), _vertex(n, i - 1))
    return picked


def maximal_matching_decomposition(n_odd: int) -> MatchingList:
    """2n+1 edge-disjoint matchings of K_{2n+1}, each missing one vertex.

    For each cycle C_i the picked edge (a, b) is removed; the remaining
    Hamilton path b ... a is split alternately into a matching missing ``a``
    and one missing ``b``. The picked edges form the last matching.
    Order: M^1_1, M^2_1, ..., M^1_n, M^2_n, M_{2n+1}.

    Raises ``AssertionError`` if the picked edges fail to form a matching.
    """
    n = _check_odd(n_odd, "maximal_matching_decomposition")
    ham = hamilton_decomposition(n_odd)
    picked = special_matching(n)
    matchings: list[tuple[Edge, ...]] = []
    uncovered: list[int | None] = []
    for i in range(1, n + 1):
        cyc = ham.cycles[i - 1]
        a, b = picked[i]
        pos = cyc.index(b)
        if cyc[pos - 1] != a:
            raise AssertionError(f"picked edge {a}-{b} is not consecutive on C_{i}")
        path = cyc[pos:] + cyc[:pos]  # b ... a
        steps = [_norm(path[t], path[t + 1]) for t in range(len(path) - 1)]
        matchings.append(tuple(steps[0::2]))
        uncovered.append(a)
        matchings.append(tuple(steps[1::2]))
        uncovered.append(b)
    last = [_norm(*picked[i]) for i in range(1, n + 1)]
    covered = set()
    for e in last:
        if e[0] in covered or e[1] in covered:
            raise AssertionError(f"picked edges do not form a matching for n={n_odd}")
        covered.update(e)
    missing = [v for v in range(n_odd) if v not in covered]
    matchings.append(tuple(last))
    uncovered.append(missing[0])
    return MatchingList(n_odd, tuple(matchings), tuple(uncovered))


def maximal_matching_decomposition_rotation(n_odd: int) -> MatchingList:
    """Independent construction: round robin with a bye.

    Round k pairs ``(k - j, k + j) mod n`` for j = 1..(n-1)/2 and leaves
    vertex k out.
    """
    _check_odd(n_odd, "maximal_matching_decomposition_rotation")
    rounds = []
    for k in range(n_odd):
        rounds.append(tuple(_norm((k - j) % n_odd, (k + j) % n_odd) for j in range(1, (n_odd + 1) // 2)))
    return MatchingList(n_odd, tuple(rounds), tuple(range(n_odd)))


@dataclass
class DecompositionReport:
    checks: dict[str, bool] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def fail(self, check: str, msg: str) -> None:
        self.checks[check] = False
        self.problems.append(msg)


def check_decomposition(d: MatchingList | CycleList) -> DecompositionReport:
    """Check disjointness, coverage and the per-part structure of ``d``.

    Everything is recomputed from the raw parts; the input is not modified.
    """
    rep = DecompositionReport()
    n = d.host_n
    for name in ("range", "disjoint", "coverage", "structure"):
        rep.checks[name] = True

    if isinstance(d, CycleList):
        parts = []
        for idx, cyc in enumerate(d.cycles):
            if sorted(cyc) != list(range(n)):
                rep.fail("structure", f"cycle {idx} does not visit every vertex exactly once")
            parts.append([(cyc[j], cyc[(j + 1) % len(cyc)]) for j in range(len(cyc))])
    else:
        parts = [list(m) for m in d.matchings]
        rep.checks["uncovered"] = True
        if d.uncovered and len(d.uncovered) != len(parts):
            rep.fail("uncovered", "uncovered list length differs from number of matchings")
        for idx, m in enumerate(parts):
            touched = [0] * n
            for a, b in m:
                if 0 <= a < n and 0 <= b < n:
                    touched[a] += 1
                    touched[b] += 1
            if any(t > 1 for t in touched):
                rep.fail("structure", f"matching {idx} has a vertex of degree > 1")
            spot = d.uncovered[idx] if idx < len(d.uncovered) else None
            if spot is None and n % 2 == 0 and any(t != 1 for t in touched):
                rep.fail("structure", f"matching {idx} is not perfect")
            if spot is not None:
                if touched[spot] != 0:
                    rep.fail("uncovered", f"matching {idx} covers its listed uncovered vertex {spot}")
                if any(touched[v] != 1 for v in range(n) if v != spot):
                    rep.fail("uncovered", f"matching {idx} leaves a second vertex uncovered")
        spots = [u for u in d.uncovered if u is not None]
        if n % 2 and len(spots) == len(parts) and sorted(spots) != list(range(n)):
            rep.fail("uncovered", "uncovered vertices are not each vertex exactly once")

    seen: dict[Edge, int] = {}
    for idx, part in enumerate(parts):
        for a, b in part:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                rep.fail("range", f"part {idx} has invalid edge {a}-{b}")
                continue
            e = _norm(a, b)
            if e in seen:
                rep.fail("disjoint", f"edge {e} appears in parts {seen[e]} and {idx}")
            else:
                seen[e] = idx
    if len(seen) != num_pairs(n):
        absent = [(u, v) for v in range(n) for u in range(v) if (u, v) not in seen]
        rep.fail("coverage", f"{len(absent)} edges of K_{n} not covered, e.g. {absent[:3]}")
    return rep
