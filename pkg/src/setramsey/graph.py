"""Small simple graphs as bitmask rows, canonical edge indexing, target families."""

from __future__ import annotations

import math
import re
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, Sequence

WIDTH = 64

__all__ = [
    "WIDTH",
    "CapacityError",
    "InvalidTargetError",
    "Graph",
    "TargetSpec",
    "complete_graph",
    "realize_target",
    "edge_index",
    "edge_pair",
    "num_pairs",
    "pair_table",
    "parse_target",
    "parse_targets",
    "format_targets",
    "popcount",
    "bits",
]


class CapacityError(ValueError):
    """Raised when an instance exceeds a fixed implementation limit."""


class InvalidTargetError(ValueError):
    pass


def popcount(x: int) -> int:
    return x.bit_count()


def bits(x: int):
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, u: int, v: int) -> int:
    """Colex index of the pair ``u < v`` among the pairs of ``range(n)``."""
    if not (0 <= u < v < n):
        raise IndexError(f"need 0 <= u < v < n, got u={u}, v={v}, n={n}")
    return v * (v - 1) // 2 + u


def edge_pair(n: int, index: int) -> tuple[int, int]:
    if not (0 <= index < num_pairs(n)):
        raise IndexError(f"edge index {index} out of range for n={n}")
    v = (1 + math.isqrt(1 + 8 * index)) // 2
    if v * (v - 1) // 2 > index:
        v -= 1
    return index - v * (v - 1) // 2, v


@lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs of ``range(n)`` in canonical order."""
    return tuple((u, v) for v in range(n) for u in range(v))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitmask of ``v``; ``edges`` lists each edge
    once as ``(u, v)`` with ``u < v``, in canonical (colex) order.
    """

    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = field(compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= WIDTH:
            raise CapacityError(f"graphs are limited to {WIDTH} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        count = 0
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
            count += popcount(row)
        if count != 2 * len(self.edges):
            raise ValueError("edge list and adjacency disagree")
        for u, v in self.edges:
            if not (u < v and self.adj[u] >> v & 1):
                raise ValueError(f"edge ({u}, {v}) not in adjacency")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if not 0 <= n <= WIDTH:
            raise CapacityError(f"graphs are limited to {WIDTH} vertices, got {n}")
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if adj[a] >> b & 1:
                raise ValueError(f"duplicate edge ({a}, {b})")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls.from_adjacency(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        edges = tuple((u, v) for v in range(n) for u in bits(adj[v] & ((1 << v) - 1)))
        return cls(n, tuple(adj), edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def components(self) -> list[int]:
        """Vertex bitmasks of the connected components, ordered by lowest vertex."""
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def complete_graph(n: int) -> Graph:
    if n > WIDTH:
        raise CapacityError(f"K_{n} exceeds the {WIDTH}-vertex limit")
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    full = (1 << n) - 1
    return Graph.from_adjacency([full & ~(1 << v) for v in range(n)])


_KINDS = {"P": "path", "C": "cycle", "S": "star", "K": "clique", "M": "matching"}
_MIN_PARAM = {"path": 2, "cycle": 3, "star": 1, "clique": 2, "matching": 1}


@dataclass(frozen=True)
class TargetSpec:
    """A target graph family member: path, cycle, star, clique, matching or custom.

    ``param`` is the vertex count for paths and cycles, the leaf count for
    stars, the clique order for cliques and the number of edges for matchings.
    """

    kind: str
    param: int = 0
    custom_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind == "custom":
            if not self.custom_edges:
                raise InvalidTargetError("custom target needs at least one edge")
            norm = set()
            for a, b in self.custom_edges:
                if a == b or a < 0 or b < 0:
                    raise InvalidTargetError(f"bad custom edge {a}-{b}")
                key = (min(a, b), max(a, b))
                if key in norm:
                    raise InvalidTargetError(f"duplicate custom edge {a}-{b}")
                norm.add(key)
            object.__setattr__(self, "custom_edges", tuple(sorted(norm, key=lambda e: (e[1], e[0]))))
        elif self.kind in _MIN_PARAM:
            if self.param < _MIN_PARAM[self.kind]:
                raise InvalidTargetError(
                    f"{self.kind} needs parameter >= {_MIN_PARAM[self.kind]}, got {self.param}"
                )
        else:
            raise InvalidTargetError(f"unknown target kind {self.kind!r}")

    @property
    def order(self) -> int:
        """Number of vertices of the realized graph."""
        if self.kind in ("path", "cycle", "clique"):
            return self.param
        if self.kind == "star":
            return self.param + 1
        if self.kind == "matching":
            return 2 * self.param
        return 1 + max(max(e) for e in self.custom_edges)

    @property
    def size(self) -> int:
        """Number of edges of the realized graph."""
        k = self.kind
        if k == "path":
            return self.param - 1
        if k in ("cycle", "star", "matching"):
            return self.param
        if k == "clique":
            return num_pairs(self.param)
        return len(self.custom_edges)

    def __str__(self) -> str:
        if self.kind == "custom":
            return "custom:" + ",".join(f"{a}-{b}" for a, b in self.custom_edges)
        letter = next(k for k, v in _KINDS.items() if v == self.kind)
        return f"{letter}{self.param}"


@lru_cache(maxsize=256)
def realize_target(spec: TargetSpec) -> Graph:
    k, p = spec.kind, spec.param
    if k == "path":
        edges = [(i, i + 1) for i in range(p - 1)]
    elif k == "cycle":
        edges = [(i, i + 1) for i in range(p - 1)] + [(0, p - 1)]
    elif k == "star":
        edges = [(0, i) for i in range(1, p + 1)]
    elif k == "clique":
        edges = [(u, v) for v in range(p) for u in range(v)]
    elif k == "matching":
        edges = [(2 * i, 2 * i + 1) for i in range(p)]
    else:
        edges = list(spec.custom_edges)
    return Graph.from_edges(spec.order, edges)


_SIMPLE = re.compile(r"^([PCSKM])(\d+)$")
_PAIR = re.compile(r"^(\d+)-(\d+)$")


def parse_target(text: str) -> TargetSpec:
    """Parse ``P<n>``, ``C<n>``, ``S<t>``, ``K<k>``, ``M<k>`` or ``custom:<u>-<v>,...``."""
    text = text.strip()
    m = _SIMPLE.match(text)
    if m:
        return TargetSpec(_KINDS[m.group(1)], int(m.group(2)))
    if text.startswith("custom:"):
        edges = []
        for tok in text[len("custom:"):].split(","):
            pm = _PAIR.match(tok.strip())
            if not pm:
                raise InvalidTargetError(f"bad custom edge token {tok!r}")
            edges.append((int(pm.group(1)), int(pm.group(2))))
        return TargetSpec("custom", 0, tuple(edges))
    raise InvalidTargetError(f"cannot parse target {text!r}")


def parse_targets(text: str | Sequence[str]) -> list[TargetSpec]:
    """Parse a comma-separated target list.

    Edge tokens ``u-v`` following a ``custom:`` entry belong to it, so
    ``"C4,custom:0-1,1-2,P3"`` is three targets.
    """
    if not isinstance(text, str):
        return [parse_target(t) for t in text]
    groups: list[str] = []
    for tok in text.split(","):
        tok = tok.strip()
        if _PAIR.match(tok) and groups and groups[-1].startswith("custom:"):
            groups[-1] += "," + tok
        else:
            groups.append(tok)
    return [parse_target(g) for g in groups]


def format_targets(targets: Sequence[TargetSpec]) -> list[str]:
    return [str(t) for t in targets]
