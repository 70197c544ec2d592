"""Monochromatic subgraph detection for set colorings.

The color class of element ``i`` is the spanning subgraph of K_n made of
the edges whose color set contains ``i``; a coloring contains a
monochromatic copy of ``G_i`` exactly when that class contains ``G_i`` as
an ordinary (not necessarily induced) subgraph.

Detectors work on raw adjacency rows (lists of int bitmasks) so that the
exhaustive search can call them on partially built classes; the
:class:`~setramsey.graph.Graph` wrappers are thin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coloring import Certificate, MalformedError, SetColoring
from .graph import CapacityError, Graph, TargetSpec, bits, pair_table, popcount, realize_target

DP_CAP = 24

VALID_AND_FREE = "VALID-AND-FREE"
VALID_BUT_CONTAINS = "VALID-BUT-CONTAINS"
MALFORMED = "MALFORMED"

__all__ = [
    "DP_CAP",
    "VALID_AND_FREE",
    "VALID_BUT_CONTAINS",
    "MALFORMED",
    "MonoWitness",
    "VerificationReport",
    "class_adjacency",
    "color_class",
    "longest_path_order",
    "max_matching",
    "find_clique",
    "find_embedding",
    "find_target",
    "contains_target",
    "contains_target_through",
    "find_monochromatic",
    "verify_certificate",
]


@dataclass(frozen=True)
class MonoWitness:
    """A copy of ``targets[target_index]`` in the class of ``element``.

    ``vertices[j]`` is the host image of vertex ``j`` of the realized target,
    ``edges`` the images of its edges.
    """

    element: int
    target_index: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "target_index": self.target_index,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }


# --------------------------------------------------------------------------
# color classes

def class_adjacency(c: SetColoring, i: int) -> list[int]:
    if not 1 <= i <= c.r:
        raise ValueError(f"color element {i} outside palette 1..{c.r}")
    bit = 1 << (i - 1)
    adj = [0] * c.n
    for (u, v), m in zip(pair_table(c.n), c.assign):
        if m & bit:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def color_class(c: SetColoring, i: int) -> Graph:
    return Graph.from_adjacency(class_adjacency(c, i))


def _components(adj: Sequence[int], within: int | None = None) -> list[int]:
    n = len(adj)
    todo = ((1 << n) - 1) if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        comp = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


# --------------------------------------------------------------------------
# paths

def _longest_in_component(adj: Sequence[int], comp: int, stop_at: int | None) -> int:
    size = popcount(comp)
    if size <= 2:
        return size
    degs = [popcount(adj[v] & comp) for v in bits(comp)]
    if 2 * min(degs) >= size:
        # Dirac: Hamiltonian cycle, hence a Hamiltonian path
        return size
    goal = size if stop_at is None else min(size, stop_at)
    if goal > DP_CAP:
        raise CapacityError(f"path DP cap is {DP_CAP} vertices, component has {size}")
    # layer[mask] = bitmask of endpoints of paths visiting exactly ``mask``
    layer = {1 << v: 1 << v for v in bits(comp)}
    length = 1
    while length < goal:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            for v in bits(ends):
                for w in bits(adj[v] & ~mask):
                    m2 = mask | (1 << w)
                    nxt[m2] = nxt.get(m2, 0) | (1 << w)
        if not nxt:
            break
        layer = nxt
        length += 1
    return length


def _longest_path_adj(adj: Sequence[int], stop_at: int | None = None) -> int:
    best = 1 if adj else 0
    comps = sorted(_components(adj), key=popcount, reverse=True)
    for comp in comps:
        if popcount(comp) <= best or (stop_at is not None and best >= stop_at):
            break
        best = max(best, _longest_in_component(adj, comp, stop_at))
    return best


def longest_path_order(g: Graph, stop_at: int | None = None) -> int:
    """Maximum number of vertices on a simple path of ``g``.

    Exact, by subset dynamic programming over each connected component
    (state: vertex set x endpoint). Components with more than ``DP_CAP``
    vertices raise :class:`CapacityError` unless Dirac's condition settles
    them. With ``stop_at`` the search stops once a path of that order is
    known, so the return value is only exact below ``stop_at``.
    """
    if g.n < 1:
        raise ValueError("longest_path_order needs at least one vertex")
    return _longest_path_adj(g.adj, stop_at)


def _find_path(adj: Sequence[int], k: int) -> list[int] | None:
    """First simple path on ``k`` vertices in DFS order, or None."""

    def extend(path: list[int], used: int) -> list[int] | None:
        if len(path) == k:
            return path
        for w in bits(adj[path[-1]] & ~used):
            found = extend(path + [w], used | (1 << w))
            if found:
                return found
        return None

    for comp in _components(adj):
        if popcount(comp) < k:
            continue
        for start in bits(comp):
            found = extend([start], 1 << start)
            if found:
                return found
    return None


def _reach(adj: Sequence[int], v: int, used: int, need: int) -> bool:
    """Is there a simple path from ``v`` avoiding ``used`` with ``need`` more vertices?"""
    if need <= 0:
        return True
    for w in bits(adj[v] & ~used):
        if _reach(adj, w, used | (1 << w), need - 1):
            return True
    return False


def _path_through(adj: Sequence[int], k: int, u: int, v: int) -> bool:
    """Does some path on ``k`` vertices use the edge ``uv``?"""
    comp = _components(adj, None)
    for c in comp:
        if c >> u & 1:
            if popcount(c) < k:
                return False
            break
    # the part hanging off u (u included) has ``a`` vertices, the part off v has k - a
    start = (1 << u) | (1 << v)

    def left(x: int, used: int, count: int) -> bool:
        if _reach(adj, v, used, k - count - 1):
            return True
        if count + 1 >= k:
            return False
        for w in bits(adj[x] & ~used):
            if left(w, used | (1 << w), count + 1):
                return True
        return False

    return left(u, start, 1)


# --------------------------------------------------------------------------
# cliques

def _clique_in(adj: Sequence[int], cand: int, k: int) -> list[int] | None:
    if k == 0:
        return []
    while cand and popcount(cand) >= k:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        rest = _clique_in(adj, cand & adj[v], k - 1)
        if rest is not None:
            return [v] + rest
    return None


def find_clique(adj: Sequence[int], k: int, within: int | None = None) -> list[int] | None:
    """Lexicographically first k-clique (sorted vertex list) among ``within``."""
    n = len(adj)
    cand = ((1 << n) - 1) if within is None else within
    if k <= 1:
        return [(cand & -cand).bit_length() - 1][:k] if cand else None
    # a vertex of a k-clique has at least k-1 neighbours
    pruned = 0
    for v in bits(cand):
        if popcount(adj[v] & cand) >= k - 1:
            pruned |= 1 << v
    return _clique_in(adj, pruned, k)


# --------------------------------------------------------------------------
# matchings (Edmonds' blossom algorithm)

def max_matching(adj: Sequence[int]) -> list[tuple[int, int]]:
    """A maximum matching of a general graph, as sorted ``(u, v)`` pairs."""
    n = len(adj)
    match = [-1] * n

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in bits(adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for v in range(n):
        if match[v] == -1:
            u, parent = find_augmenting(v)
            while u != -1:
                pv = parent[u]
                nxt = match[pv]
                match[u], match[pv] = pv, u
                u = nxt
    return [(v, match[v]) for v in range(n) if v < match[v]]


# --------------------------------------------------------------------------
# generic embedding

def _embedding_order(pattern: Graph, fixed: Sequence[int]) -> list[int]:
    order = list(fixed)
    placed = 0
    for p in order:
        placed |= 1 << p
    degs = pattern.degrees()
    while len(order) < pattern.n:
        best = max(
            (p for p in range(pattern.n) if not placed >> p & 1),
            key=lambda p: (popcount(pattern.adj[p] & placed), degs[p], -p),
        )
        order.append(best)
        placed |= 1 << best
    return order


def find_embedding(
    adj: Sequence[int],
    pattern: Graph,
    through: tuple[int, int] | None = None,
) -> list[int] | None:
    """Map pattern vertices to host vertices so that pattern edges land on host edges.

    Returns ``image`` with ``image[p]`` the host vertex of pattern vertex ``p``.
    With ``through=(u, v)`` only embeddings using the host edge ``uv`` are
    considered. Candidates are tried in increasing vertex order, so the
    result is deterministic.
    """
    n = len(adj)
    if pattern.n > n:
        return None
    host_deg = [popcount(row) for row in adj]
    pdeg = pattern.degrees()
    # host vertices able to host pattern vertex p
    able = []
    for p in range(pattern.n):
        m = 0
        for h in range(n):
            if host_deg[h] >= pdeg[p]:
                m |= 1 << h
        able.append(m)

    def solve(order: list[int], image: list[int], used: int, pos: int) -> bool:
        if pos == len(order):
            return True
        p = order[pos]
        cand = able[p] & ~used
        for q in bits(pattern.adj[p]):
            if image[q] >= 0:
                cand &= adj[image[q]]
        for h in bits(cand):
            image[p] = h
            if solve(order, image, used | (1 << h), pos + 1):
                return True
        image[p] = -1
        return False

    if through is None:
        order = _embedding_order(pattern, [])
        image = [-1] * pattern.n
        return image if solve(order, image, 0, 0) else None

    u, v = through
    if not adj[u] >> v & 1:
        return None
    for a, b in pattern.edges:
        for x, y in ((a, b), (b, a)):
            if not (able[x] >> u & 1 and able[y] >> v & 1):
                continue
            image = [-1] * pattern.n
            image[x], image[y] = u, v
            order = _embedding_order(pattern, [x, y])
            if solve(order, image, (1 << u) | (1 << v), 2):
                return image
    return None


# --------------------------------------------------------------------------
# dispatch

def _find_c4(adj: Sequence[int]) -> list[int] | None:
    """A 4-cycle as ``[u, x, v, y]``: two vertices with two common neighbours."""
    for v in range(len(adj)):
        for u in range(v):
            common = adj[u] & adj[v]
            if popcount(common) >= 2:
                x, y = list(bits(common))[:2]
                return [u, x, v, y]
    return None


def _contains_adj(adj: Sequence[int], t: TargetSpec) -> bool:
    k = t.kind
    if t.order > len(adj):
        return False
    if k == "path":
        return _longest_path_adj(adj, t.param) >= t.param
    if k == "star":
        return max((popcount(row) for row in adj), default=0) >= t.param
    if k == "clique":
        return find_clique(adj, t.param) is not None
    if k == "matching":
        return len(max_matching(adj)) >= t.param
    if k == "cycle" and t.param == 3:
        return find_clique(adj, 3) is not None
    if k == "cycle" and t.param == 4:
        return _find_c4(adj) is not None
    return find_embedding(adj, realize_target(t)) is not None


def contains_target(g: Graph, t: TargetSpec) -> bool:
    """Does ``g`` contain a (not necessarily induced) copy of the target?"""
    return _contains_adj(g.adj, t)


def _witness_adj(adj: Sequence[int], t: TargetSpec) -> list[int] | None:
    """Image list of a copy of ``realize_target(t)`` in ``adj``, or None."""
    k = t.kind
    if t.order > len(adj):
        return None
    if k == "path":
        if _longest_path_adj(adj, t.param) < t.param:
            return None
        return _find_path(adj, t.param)
    if k == "star":
        for v, row in enumerate(adj):
            if popcount(row) >= t.param:
                return [v] + list(bits(row))[: t.param]
        return None
    if k == "clique":
        return find_clique(adj, t.param)
    if k == "matching":
        m = max_matching(adj)
        if len(m) < t.param:
            return None
        return [x for e in m[: t.param] for x in e]
    if k == "cycle" and t.param == 4:
        return _find_c4(adj)
    if k == "cycle" and t.param == 3:
        return find_clique(adj, 3)
    return find_embedding(adj, realize_target(t))


def find_target(g: Graph, t: TargetSpec) -> list[int] | None:
    """Vertex images of a copy of the target in ``g`` (pattern-vertex order), or None."""
    return _witness_adj(g.adj, t)


def contains_target_through(adj: Sequence[int], t: TargetSpec, u: int, v: int) -> bool:
    """Does ``adj`` contain a copy of the target that uses the edge ``uv``?

    The search assumes the class was target-free before ``uv`` was added,
    so any new copy must use it; for matchings the global test is exact
    under that assumption and is used directly.
    """
    k = t.kind
    if t.order > len(adj):
        return False
    if k == "star":
        return popcount(adj[u]) >= t.param or popcount(adj[v]) >= t.param
    if k == "clique" or (k == "cycle" and t.param == 3):
        size = t.param if k == "clique" else 3
        common = adj[u] & adj[v]
        return popcount(common) >= size - 2 and find_clique(adj, size - 2, common) is not None
    if k == "path":
        return _path_through(adj, t.param, u, v)
    if k == "matching":
        return len(max_matching(adj)) >= t.param
    if k == "cycle" and t.param == 4:
        nu = adj[u] & ~(1 << v)
        for x in bits(nu):
            if adj[x] & adj[v] & ~(1 << u) & ~(1 << x):
                return True
        return False
    return find_embedding(adj, realize_target(t), (u, v)) is not None


# --------------------------------------------------------------------------
# colorings

def find_monochromatic(c: SetColoring, targets: Sequence[TargetSpec]) -> MonoWitness | None:
    """Witness for the smallest element ``i`` whose class contains ``targets[i-1]``."""
    if len(targets) != c.r:
        raise ValueError(f"need exactly r={c.r} targets, got {len(targets)}")
    for i in range(1, c.r + 1):
        t = targets[i - 1]
        adj = class_adjacency(c, i)
        image = _witness_adj(adj, t)
        if image is None:
            continue
        pattern = realize_target(t)
        edges = tuple(tuple(sorted((image[a], image[b]))) for a, b in pattern.edges)
        return MonoWitness(i, i - 1, tuple(image), edges)
    return None


@dataclass
class VerificationReport:
    status: str
    reason: str | None = None
    witness: MonoWitness | None = None
    unused_elements: list[int] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {VALID_AND_FREE: 0, VALID_BUT_CONTAINS: 1, MALFORMED: 2}[self.status]

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "reason": self.reason,
            "witness": self.witness.to_json() if self.witness else None,
            "unused_elements": self.unused_elements,
        }


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Check well-formedness, then look for a monochromatic target copy."""
    c = cert.coloring
    try:
        c.validate()
        if len(cert.targets) != c.r:
            raise MalformedError(f"expected {c.r} targets, got {len(cert.targets)}")
    except (MalformedError, CapacityError) as exc:
        return VerificationReport(MALFORMED, str(exc))
    unused = sorted(set(range(1, c.r + 1)) - set(c.used_elements()))
    w = find_monochromatic(c, cert.targets)
    if w is None:
        return VerificationReport(VALID_AND_FREE, unused_elements=unused)
    reason = f"element {w.element} contains {cert.targets[w.target_index]}"
    return VerificationReport(VALID_BUT_CONTAINS, reason, w, unused)
