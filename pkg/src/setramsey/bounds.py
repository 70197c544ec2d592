"""Closed-form bounds for set-coloring Ramsey numbers and their aggregation.

Every calculator returns plain numbers; :func:`aggregate_bounds` wraps them
in :class:`BoundEntry` records, merges in the known-values database through
the monotonicity rules, and reports the best interval. Two path formulas
are kept exactly as printed ("as stated") even though they contradict
classical values; they are displayed but never used to tighten anything.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import comb
from typing import Iterable, Sequence

from .graph import TargetSpec, format_targets, parse_target, realize_target

SCAN_CAP = 10**6

__all__ = [
    "SCAN_CAP",
    "UnsupportedTargetError",
    "BoundEntry",
    "BoundsReport",
    "LLLConstants",
    "LLLResult",
    "TuranParams",
    "turan_path",
    "turan_star",
    "turan_number",
    "ex_upper_bound",
    "path_upper_closed_form",
    "path_equal_closed_form",
    "path_lower_bound",
    "star_bounds",
    "clique_lower_le",
    "lll_lower",
    "random_lower",
    "uniform_lower",
    "monotone_propagate",
    "Propagation",
    "load_known_values",
    "known_value",
    "aggregate_bounds",
]


class UnsupportedTargetError(ValueError):
    pass


# --------------------------------------------------------------------------
# Turán numbers


@dataclass(frozen=True)
class TuranParams:
    N: int
    k: int

    @property
    def p(self) -> int:
        return self.N % (self.k - 1)


def turan_path(N: int, k: int) -> int:
    """ex(N, P_k): most edges in an N-vertex graph with no path on k vertices.

    Extremal graphs are disjoint copies of K_{k-1} plus a K_p, p = N mod (k-1).
    """
    if N < 1 or k < 2:
        raise ValueError(f"need N >= 1 and k >= 2, got N={N}, k={k}")
    p = TuranParams(N, k).p
    twice = (k - 2) * N - p * (k - 1 - p)
    return twice // 2


def turan_star(N: int, t: int) -> int:
    """ex(N, K_{1,t}): most edges with maximum degree at most t-1."""
    if N < 1 or t < 1:
        raise ValueError(f"need N >= 1 and t >= 1, got N={N}, t={t}")
    return min(N * (t - 1) // 2, comb(N, 2))


def turan_number(N: int, target: TargetSpec) -> int:
    if target.kind == "path":
        return turan_path(N, target.param)
    if target.kind == "star":
        return turan_star(N, target.param)
    raise UnsupportedTargetError(f"no Turán number available for {target}")


def ex_upper_bound(r: int, s: int, targets: Sequence[TargetSpec], scan_cap: int = SCAN_CAP) -> int | None:
    """Smallest N >= max order with sum_i ex(N, G_i) < s * C(N, 2), or None.

    Each color class of an (r,s)-coloring of K_N that avoids G_i has at most
    ex(N, G_i) edges, while the classes hold s * C(N, 2) edge slots in total;
    so once the inequality holds, every coloring of K_N has a monochromatic
    copy and R_{r,s} <= N.
    """
    if len(targets) != r:
        raise ValueError(f"need {r} targets, got {len(targets)}")
    for t in targets:
        if t.kind not in ("path", "star"):
            raise UnsupportedTargetError(f"no Turán number available for {t}")
    start = max(t.order for t in targets)
    for N in range(start, scan_cap + 1):
        if sum(turan_number(N, t) for t in targets) < s * comb(N, 2):
            return N
    return None


# --------------------------------------------------------------------------
# paths and stars


def path_upper_closed_form(r: int, s: int, orders: Sequence[int]) -> Fraction:
    """sum_i (n_i - 2) / (2s) + 1/2, evaluated exactly as printed (as stated)."""
    if len(orders) != r:
        raise ValueError(f"need {r} path orders, got {len(orders)}")
    if any(n < 2 for n in orders):
        raise ValueError("path orders must be >= 2")
    return sum((Fraction(n - 2, 2 * s) for n in orders), Fraction(0)) + Fraction(1, 2)


def path_equal_closed_form(r: int, s: int, n: int) -> Fraction:
    """r(n-2)/(2s), the claimed exact value for s | r and even n (as stated)."""
    if r % s or n < 2 or n % 2:
        raise ValueError("defined only for s | r and even n >= 2")
    return Fraction(r * (n - 2), 2 * s)


def path_lower_bound(r: int, s: int, n1: int) -> int:
    """floor((n1-1)/2) * floor(r/s) + 1, witnessed by the blow-up coloring."""
    if not r > s >= 1 or n1 < 2:
        raise ValueError(f"need r > s >= 1 and n1 >= 2, got r={r}, s={s}, n1={n1}")
    return (n1 - 1) // 2 * (r // s) + 1


@dataclass
class BoundEntry:
    name: str
    side: str
    value: int | str | None
    hypotheses_ok: bool
    provenance: str
    as_stated: bool = False
    raw: float | Fraction | None = None
    certificate: str | None = None
    note: str | None = None

    @property
    def usable(self) -> bool:
        return self.hypotheses_ok and not self.as_stated and isinstance(self.value, int)

    def to_json(self) -> dict:
        value = self.value
        if isinstance(value, Fraction):
            value = str(value)
        raw = self.raw
        if isinstance(raw, Fraction):
            raw = str(raw)
        elif isinstance(raw, float) and not math.isfinite(raw):
            raw = str(raw)
        return {
            "name": self.name,
            "side": self.side,
            "value": value,
            "ok": self.hypotheses_ok,
            "provenance": self.provenance,
            "certificate": self.certificate,
            "raw": raw,
            "note": self.note,
        }


def star_bounds(r: int, s: int, params: Sequence[int]) -> tuple[BoundEntry, BoundEntry]:
    """Lower and upper bounds for stars K_{1,n_1}, ..., K_{1,n_r} (n_i ascending).

    Upper: a vertex of K_N with N = ceil((sum n_i - r + 1)/s) + 1 sees more
    element slots than the classes can absorb without a degree of n_i.
    Lower: floor((r n_1 - r)/s) + 1, claimed when n_1 >= 3 and
    floor((r n_1 - r)/s) <= C(r, s); the matching coloring certifies it.
    """
    if len(params) != r:
        raise ValueError(f"need {r} star parameters, got {len(params)}")
    if list(params) != sorted(params):
        raise ValueError("star parameters must be in ascending order")
    if not r > s >= 1 or params[0] < 1:
        raise ValueError("need r > s >= 1 and leaf counts >= 1")
    n1 = params[0]
    M = (r * n1 - r) // s
    ok = n1 >= 3 and M <= comb(r, s)
    note = None
    if n1 < 3:
        note = "lower bound claimed only for n_1 >= 3"
    elif M > comb(r, s):
        note = f"needs floor((r n_1 - r)/s) = {M} <= C(r,s) = {comb(r, s)}"
    lower = BoundEntry(
        "star_lower",
        "lower",
        M + 1 if ok else None,
        ok,
        "star-matrix-construction",
        certificate="construct star" if ok and M >= 2 else None,
        note=note,
    )
    upper_value = -(-(sum(params) - r + 1) // s) + 1
    upper = BoundEntry("star_upper", "upper", upper_value, True, "star-degree-count")
    return lower, upper


def uniform_lower(r: int, s: int, targets: Sequence[TargetSpec]) -> int:
    """Best bound from a single color set used on every edge.

    Giving every edge of K_N the s elements whose targets have the most
    vertices avoids all copies as long as N is below each of those orders
    (the other classes are empty). So R >= the s-th largest target order.
    """
    orders = sorted((t.order for t in targets), reverse=True)
    return orders[s - 1]


# --------------------------------------------------------------------------
# probabilistic bounds


def clique_lower_le(r: int, s: int, k: int) -> int:
    """floor((k/e) r^(-1/k) (r/s)^((k-1)/2)); R_{r,s}(K_k) exceeds this value."""
    if not r > s >= 1 or k < 3:
        raise ValueError(f"need r > s >= 1 and k >= 3, got r={r}, s={s}, k={k}")
    return math.floor(k / math.e * r ** (-1 / k) * (r / s) ** ((k - 1) / 2))


@dataclass(frozen=True)
class LLLConstants:
    c1: float
    c2: float
    c3: float


@dataclass(frozen=True)
class LLLResult:
    feasible: bool
    value: float | None = None
    log_value: float | None = None
    constants: LLLConstants | None = None
    violated: str | None = None


_REL = 1e-12


def _lll_violation(r: int, s: int, n: int, m: int, c: LLLConstants) -> str | None:
    if min(c.c1, c.c2, c.c3) <= 0:
        return "c1, c2, c3 > 0"
    if c.c1 > (r - s) / r * (1 + _REL):
        return "c1 <= (r-s)/r"
    if not c.c3 - c.c1 * c.c2 + 3 * n < 0:
        return "c3 - c1*c2 + 3n < 0"
    if not (m - 1) / c.c2 > 1:
        return "(m-1)/c2 > 1"
    return None


def _lll_log_value(r: int, s: int, m: int, c2: float) -> float:
    x = (m - 1) / c2
    return s * r * (math.log(m - 1) - math.log(c2 * s * r * math.log(x)))


def lll_lower(
    r: int,
    s: int,
    n: int,
    m: int,
    constants: LLLConstants | str = "auto",
    grid: int = 40,
) -> LLLResult:
    """((m-1) / (c2 s r ln((m-1)/c2)))^(sr) for a connected G with n vertices, m edges.

    Requires C(n-1, 2) <= m <= C(n, 2), c1 <= (r-s)/r and c3 - c1 c2 + 3n < 0.
    With ``constants="auto"`` a fixed grid over c1 in {(r-s)/r * j/10},
    c2 log-spaced in (3n/c1, m-1) and c3 = 1e-3 is searched for the largest
    feasible value. The expression grows without bound as c2 approaches
    m - 1, so auto values reflect the grid as much as the graph.
    """
    if not r > s >= 1:
        raise ValueError(f"need r > s >= 1, got r={r}, s={s}")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not comb(n - 1, 2) <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside [C(n-1,2), C(n,2)] = [{comb(n - 1, 2)}, {comb(n, 2)}]")

    def result(c: LLLConstants) -> LLLResult:
        lv = _lll_log_value(r, s, m, c.c2)
        value = math.exp(lv) if lv < 700 else math.inf
        return LLLResult(True, value, lv, c)

    if not isinstance(constants, str):
        bad = _lll_violation(r, s, n, m, constants)
        if bad:
            return LLLResult(False, constants=constants, violated=bad)
        return result(constants)
    if constants != "auto":
        raise ValueError("constants must be an LLLConstants or 'auto'")

    best: LLLResult | None = None
    c3 = 1e-3
    for j in range(1, 11):
        c1 = (r - s) / r * j / 10
        lo, hi = 3 * n / c1, m - 1
        if lo >= hi:
            continue
        for t in range(1, grid + 1):
            c2 = lo * (hi / lo) ** (t / (grid + 1))
            c = LLLConstants(c1, c2, c3)
            if _lll_violation(r, s, n, m, c):
                continue
            res = result(c)
            if best is None or res.log_value > best.log_value:
                best = res
    if best is None:
        return LLLResult(False, violated="no grid point satisfies c1*c2 > 3n + c3 with c2 < m - 1")
    return best


def random_lower(r: int, s: int, graphs: Sequence[tuple[int, int]]) -> float:
    """(n^(n/n')/e) * ((r/s)^m (2m)^m / sum_i (e n_i^2)^(m_i))^(1/n').

    ``graphs`` lists (vertices, edges) per target; n, n', m are the minimum
    order, maximum order and minimum size. Evaluated in log space.
    """
    if not r > s >= 1:
        raise ValueError(f"need r > s >= 1, got r={r}, s={s}")
    if len(graphs) != r:
        raise ValueError(f"need {r} graphs, got {len(graphs)}")
    if any(ni < 1 or mi < 1 for ni, mi in graphs):
        raise ValueError("every graph needs at least one vertex and one edge")
    n = min(g[0] for g in graphs)
    n_max = max(g[0] for g in graphs)
    m = min(g[1] for g in graphs)
    terms = [mi * (1 + 2 * math.log(ni)) for ni, mi in graphs]
    top = max(terms)
    log_sum = top + math.log(sum(math.exp(t - top) for t in terms))
    inner = m * math.log(r / s) + m * math.log(2 * m) - log_sum
    return math.exp(n / n_max * math.log(n) - 1 + inner / n_max)


def _real_lower_entry(name: str, raw: float, provenance: str, note: str | None = None) -> BoundEntry:
    if not raw > 1:
        return BoundEntry(name, "lower", "vacuous", True, provenance, raw=raw, note=note)
    value = max(1, math.ceil(raw)) if math.isfinite(raw) else "vacuous"
    return BoundEntry(name, "lower", value, True, provenance, raw=raw, note=note)


# --------------------------------------------------------------------------
# monotonicity

Key = tuple[int, int, str]
INF = math.inf


@dataclass
class Propagation:
    """Intervals after propagation, keyed by (r, s, target); hi may be inf."""

    bounds: dict[Key, tuple[int, float]]
    reasons: dict[tuple[Key, str], tuple[Key, str] | None] = field(default_factory=dict)
    inconsistencies: list[str] = field(default_factory=list)

    def chain(self, key: Key, side: str) -> list[str]:
        out = []
        cur: tuple[Key, str] | None = (key, side)
        while cur is not None:
            k, rule = cur[0], self.reasons.get(cur)
            label = f"R_{{{k[0]},{k[1]}}}({k[2]})"
            out.append(label if rule is None else f"{label} via {rule[1]}")
            cur = (rule[0], side) if rule is not None else None
        return out


def monotone_propagate(
    db: dict[Key, tuple[int, float | int | None]],
    queries: Iterable[Key] = (),
) -> Propagation:
    """Tighten intervals using R_{r,s} <= R_{r+1,s}, R_{r,s} <= R_{r-1,s-1}
    and R_{r,s} <= R_{r,s-1} (the last two for s >= 2), all for one target G.

    Intermediate (r, s) pairs inside the bounding box of the keys are used
    as stepping stones, so chains like R_{3,2} <= R_{4,2} <= R_{5,2} are
    followed. Intervals only shrink; the loop runs to a fixed point.
    """
    keys = set(db) | set(queries)
    bounds: dict[Key, list] = {}
    reasons: dict[tuple[Key, str], tuple[Key, str] | None] = {}
    for g in {k[2] for k in keys}:
        mine = [k for k in keys if k[2] == g]
        r_max = max(k[0] for k in mine)
        s_max = max(k[1] for k in mine)
        for s in range(1, s_max + 1):
            for r in range(s, r_max + 1):
                bounds[(r, s, g)] = [1, INF]
    for k, (lo, hi) in db.items():
        bounds[k] = [max(bounds[k][0], lo), min(bounds[k][1], INF if hi is None else hi)]
        reasons[(k, "lo")] = reasons[(k, "hi")] = None

    def edges():
        # (small, big, rule) with R(small) <= R(big)
        for (r, s, g) in bounds:
            if (r + 1, s, g) in bounds:
                yield (r, s, g), (r + 1, s, g), "R_{r,s} <= R_{r+1,s}"
            if s >= 2 and (r - 1, s - 1, g) in bounds:
                yield (r, s, g), (r - 1, s - 1, g), "R_{r,s} <= R_{r-1,s-1}"
            if s >= 2 and (r, s - 1, g) in bounds:
                yield (r, s, g), (r, s - 1, g), "R_{r,s} <= R_{r,s-1}"

    links = list(edges())
    changed = True
    while changed:
        changed = False
        for small, big, rule in links:
            if bounds[small][0] > bounds[big][0]:
                bounds[big][0] = bounds[small][0]
                reasons[(big, "lo")] = (small, rule)
                changed = True
            if bounds[big][1] < bounds[small][1]:
                bounds[small][1] = bounds[big][1]
                reasons[(small, "hi")] = (big, rule)
                changed = True
    prop = Propagation({k: (v[0], v[1]) for k, v in bounds.items()}, reasons)
    for k, (lo, hi) in prop.bounds.items():
        if lo > hi:
            prop.inconsistencies.append(
                f"R_{{{k[0]},{k[1]}}}({k[2]}): lower {lo} from "
                + " <- ".join(prop.chain(k, "lo"))
                + f" exceeds upper {hi} from "
                + " <- ".join(prop.chain(k, "hi"))
            )
    return prop


# --------------------------------------------------------------------------
# known values


@dataclass(frozen=True)
class KnownValue:
    r: int
    s: int
    targets: tuple[str, ...]
    value: int
    provenance: str


def load_known_values(path: str | None = None, n_max: int = 64) -> list[KnownValue]:
    """Read the known-values file (built-in one by default), expanding families."""
    if path is None:
        text = resources.files("setramsey").joinpath("data/known_values.json").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    out = []
    for v in data.get("values", []):
        tg = tuple(str(parse_target(t)) for t in v["targets"])
        out.append(KnownValue(v["r"], v["s"], tg, v["value"], v["provenance"]))
    for fam in data.get("families", []):
        lo, hi = fam["n_range"]
        for n in range(lo, min(hi, n_max) + 1):
            try:
                tg = tuple(str(parse_target(t.replace("{n}", str(n)))) for t in fam["targets"])
            except ValueError:
                continue
            value = fam["value"]["n"] * n + fam["value"]["plus"]
            out.append(KnownValue(fam["r"], fam["s"], tg, value, fam["provenance"]))
    return out


def known_value(r: int, s: int, targets: Sequence[TargetSpec], db: list[KnownValue] | None = None) -> KnownValue | None:
    db = load_known_values() if db is None else db
    key = tuple(format_targets(targets))
    for kv in db:
        if (kv.r, kv.s, kv.targets) == (r, s, key):
            return kv
    return None


# --------------------------------------------------------------------------
# aggregation


@dataclass
class BoundsReport:
    r: int
    s: int
    targets: tuple[TargetSpec, ...]
    entries: list[BoundEntry]
    interval: tuple[int, int | None]
    inconsistencies: list[str] = field(default_factory=list)

    @property
    def as_stated(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.as_stated]

    def discrepancies(self, exact: int | None = None) -> list[BoundEntry]:
        """As-stated entries that disagree with ``exact`` (or with the interval)."""
        lo, hi = self.interval
        out = []
        for e in self.as_stated:
            v = e.raw
            if v is None:
                continue
            if exact is not None:
                bad = v != exact if e.side == "exact" else (v < exact if e.side == "upper" else v > exact)
            else:
                bad = v < lo if e.side in ("upper", "exact") else (hi is not None and v > hi)
                if e.side == "exact" and hi is not None and v > hi:
                    bad = True
            if bad:
                out.append(e)
        return out

    def to_json(self) -> dict:
        flagged = {id(e) for e in self.discrepancies()}
        return {
            "instance": {"r": self.r, "s": self.s, "targets": format_targets(self.targets)},
            "entries": [e.to_json() for e in self.entries if not e.as_stated],
            "interval": [self.interval[0], self.interval[1]],
            "as_stated": [dict(e.to_json(), consistent=id(e) not in flagged) for e in self.as_stated],
            "inconsistencies": self.inconsistencies,
        }


def aggregate_bounds(
    r: int,
    s: int,
    targets: Sequence[TargetSpec],
    db: list[KnownValue] | None = None,
) -> BoundsReport:
    """Run every applicable calculator and combine them into one interval."""
    targets = tuple(targets)
    if len(targets) != r:
        raise ValueError(f"need {r} targets, got {len(targets)}")
    if not r > s >= 1:
        raise ValueError(f"need r > s >= 1, got r={r}, s={s}")
    db = load_known_values() if db is None else db
    kinds = {t.kind for t in targets}
    same = len(set(targets)) == 1
    entries: list[BoundEntry] = []

    entries.append(
        BoundEntry(
            "uniform_lower",
            "lower",
            uniform_lower(r, s, targets),
            True,
            "uniform-coloring",
            certificate="construct uniform",
        )
    )

    if kinds <= {"path", "star"}:
        up = ex_upper_bound(r, s, targets)
        entries.append(
            BoundEntry("ex_upper_bound", "upper", up if up is not None else "vacuous", up is not None, "turan-counting")
        )

    if kinds == {"path"}:
        orders = [t.param for t in targets]
        n1 = min(orders)
        lb = path_lower_bound(r, s, n1)
        cert = "construct path" if (n1 - 1) // 2 >= 1 else None
        entries.append(BoundEntry("path_lower_bound", "lower", lb, True, "path-blowup-construction", certificate=cert))
        closed = path_upper_closed_form(r, s, orders)
        entries.append(
            BoundEntry(
                "path_upper_closed_form",
                "upper",
                closed,
                True,
                "quadratic-root-closed-form",
                as_stated=True,
                raw=closed,
                note="printed closed form; contradicts classical values such as R(P_4, P_4) = 5",
            )
        )
        if same and r % s == 0 and orders[0] % 2 == 0:
            eq = path_equal_closed_form(r, s, orders[0])
            entries.append(
                BoundEntry(
                    "path_equal_closed_form",
                    "exact",
                    eq,
                    True,
                    "claimed-equal-closed-form",
                    as_stated=True,
                    raw=eq,
                    note="claimed exact value; lies below the blow-up lower bound",
                )
            )

    if kinds == {"star"}:
        lower, upper = star_bounds(r, s, sorted(t.param for t in targets))
        entries += [lower, upper]

    if same and targets[0].kind == "clique" and targets[0].param >= 3:
        v = clique_lower_le(r, s, targets[0].param)
        entries.append(BoundEntry("clique_lower_le", "lower", v + 1, True, "random-clique-coloring", raw=float(v)))

    if all(t.size >= 1 for t in targets):
        raw = random_lower(r, s, [(t.order, t.size) for t in targets])
        entries.append(_real_lower_entry("random_lower", raw, "random-coloring-union-bound"))

    if same:
        g = realize_target(targets[0])
        n, m = g.n, g.num_edges
        if n >= 4 and g.is_connected() and comb(n - 1, 2) <= m <= comb(n, 2):
            res = lll_lower(r, s, n, m)
            if res.feasible:
                c = res.constants
                entries.append(
                    _real_lower_entry(
                        "lll_lower",
                        res.value,
                        "local-lemma",
                        note=f"c1={c.c1:.6g}, c2={c.c2:.6g}, c3={c.c3:.6g}",
                    )
                )
            else:
                entries.append(BoundEntry("lll_lower", "lower", "infeasible", False, "local-lemma", note=res.violated))

    kv = known_value(r, s, targets, db)
    if kv is not None:
        entries.append(BoundEntry("known_value", "lower", kv.value, True, kv.provenance))
        entries.append(BoundEntry("known_value", "upper", kv.value, True, kv.provenance))

    inconsistencies: list[str] = []
    if same:
        g = str(targets[0])
        table: dict[Key, tuple[int, float | None]] = {}
        for other in db:
            if len(set(other.targets)) == 1 and other.targets[0] == g:
                table[(other.r, other.s, g)] = (other.value, other.value)
        if table:
            prop = monotone_propagate(table, [(r, s, g)])
            lo, hi = prop.bounds[(r, s, g)]
            inconsistencies = prop.inconsistencies
            if (r, s, g) not in table:
                if lo > 1:
                    entries.append(
                        BoundEntry("monotone", "lower", lo, True, "monotonicity: " + " <- ".join(prop.chain((r, s, g), "lo")))
                    )
                if hi != INF:
                    entries.append(
                        BoundEntry("monotone", "upper", int(hi), True, "monotonicity: " + " <- ".join(prop.chain((r, s, g), "hi")))
                    )

    lows = [e.value for e in entries if e.usable and e.side == "lower"]
    highs = [e.value for e in entries if e.usable and e.side == "upper"]
    lo = max(lows, default=1)
    hi = min(highs, default=None)
    if hi is not None and lo > hi:
        inconsistencies.append(f"lower bound {lo} exceeds upper bound {hi}")
    return BoundsReport(r, s, targets, entries, (lo, hi), inconsistencies)
