"""Explicit lower-bound colorings and randomized certificate search."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .coloring import Certificate, ColorSet, SetColoring, mask_of
from .decompose import maximal_matching_decomposition, one_factorization
from .detect import VALID_AND_FREE, find_monochromatic, verify_certificate
from .graph import TargetSpec, edge_index, num_pairs

log = logging.getLogger(__name__)

__all__ = [
    "DegenerateConstructionError",
    "PathConstructionParams",
    "StarConstructionParams",
    "uniform_coloring",
    "path_lower_coloring",
    "path_lower_certificate",
    "star_color_multiset",
    "star_lower_coloring",
    "star_lower_certificate",
    "unrank_subset",
    "random_coloring",
    "repair_search",
]


class DegenerateConstructionError(ValueError):
    pass


def uniform_coloring(n: int, cs: ColorSet) -> SetColoring:
    """Every edge of K_n gets the same color set."""
    if n < 1:
        raise ValueError("host needs at least one vertex")
    return SetColoring.uniform(n, cs)


# --------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class PathConstructionParams:
    r: int
    s: int
    n1: int

    def __post_init__(self):
        if not self.r > self.s >= 1:
            raise ValueError(f"need r > s >= 1, got r={self.r}, s={self.s}")
        if self.n1 < 2:
            raise ValueError(f"need n1 >= 2, got {self.n1}")

    @property
    def blocks(self) -> int:
        return self.r // self.s

    @property
    def block_size(self) -> int:
        return (self.n1 - 1) // 2

    @property
    def N(self) -> int:
        return self.blocks * self.block_size


def _block_sets(r: int, s: int) -> list[int]:
    """Masks of the disjoint blocks {(i-1)s+1, ..., is}, i = 1..r//s."""
    return [mask_of(range((i - 1) * s + 1, i * s + 1)) for i in range(1, r // s + 1)]


def path_lower_coloring(p: PathConstructionParams) -> SetColoring:
    """Blow-up coloring of K_N with no monochromatic path on n1 vertices.

    K_N is split into ``blocks`` groups of ``block_size`` vertices. Edges
    between groups x and y take the block set of the quotient matching that
    contains xy; edges inside a group take a block set that does not appear
    at that group in the quotient. Every class is then a disjoint union of
    complete bipartite graphs K_{b,b} and cliques K_b with b = block_size, so
    its paths have at most 2b < n1 vertices.

    With a single block (r < 2s) the whole host is one group colored by the
    first block set.
    """
    b, size = p.blocks, p.block_size
    if size == 0:
        raise DegenerateConstructionError(f"n1={p.n1} gives empty blocks; the bound is vacuous")
    sets = _block_sets(p.r, p.s)
    quotient: dict[tuple[int, int], int] = {}
    if b == 1:
        inner = [sets[0]]
    elif b % 2 == 0:
        for k, match in enumerate(one_factorization(b).matchings):
            for e in match:
                quotient[e] = sets[k]
        inner = [sets[b - 1]] * b
    else:
        dec = maximal_matching_decomposition(b)
        for k, match in enumerate(dec.matchings):
            for e in match:
                quotient[e] = sets[k]
        inner = []
        for x in range(b):
            seen = {quotient[(min(x, y), max(x, y))] for y in range(b) if y != x}
            inner.append(next(m for m in sets if m not in seen))
    N = p.N
    assign = [0] * num_pairs(N)
    for v in range(N):
        bv = v // size
        for u in range(v):
            bu = u // size
            m = inner[bu] if bu == bv else quotient[(bu, bv)]
            assign[edge_index(N, u, v)] = m
    return SetColoring(N, p.r, p.s, tuple(assign))


def path_lower_certificate(r: int, s: int, n1: int) -> Certificate:
    p = PathConstructionParams(r, s, n1)
    return Certificate(path_lower_coloring(p), (TargetSpec("path", n1),) * r)


# --------------------------------------------------------------------------
# stars


@dataclass(frozen=True)
class StarConstructionParams:
    r: int
    s: int
    n1: int

    def __post_init__(self):
        if not self.r > self.s >= 1:
            raise ValueError(f"need r > s >= 1, got r={self.r}, s={self.s}")
        if self.n1 < 3:
            raise ValueError(f"need n1 >= 3, got {self.n1}")

    @property
    def M(self) -> int:
        return (self.r * self.n1 - self.r) // self.s

    @property
    def p(self) -> int:
        return self.r * self.n1 - self.r - self.s * self.M

    @property
    def hypothesis_ok(self) -> bool:
        """Whether M <= C(r, s), the condition under which the lower bound is claimed."""
        return self.M <= comb(self.r, self.s)


def star_color_multiset(p: StarConstructionParams) -> list[ColorSet]:
    """M color sets in which element i occurs n1-1 times (i <= r-p) or n1-2 times.

    Fill an r x (n1-1) table whose row i repeats i (the last p rows leave the
    final column empty), read it column by column and cut the stream into
    consecutive s-tuples. Repeated sets are possible and allowed.
    """
    r, s, n1, pad = p.r, p.s, p.n1, p.p
    stream = []
    for col in range(n1 - 1):
        last = col == n1 - 2
        for row in range(1, r + 1):
            if last and row > r - pad:
                continue
            stream.append(row)
    return [ColorSet.of(stream[k * s:(k + 1) * s], r, s) for k in range(p.M)]


def star_lower_coloring(p: StarConstructionParams) -> SetColoring:
    """Color matching i of a K_M decomposition with the i-th multiset entry.

    Each vertex meets each matching at most once, so an element occurs on at
    most n1-1 of its edges and no element class has a vertex of degree n1.
    """
    M = p.M
    if M < 2:
        raise DegenerateConstructionError(f"M={M} < 2; nothing to construct")
    sets = star_color_multiset(p)
    dec = one_factorization(M) if M % 2 == 0 else maximal_matching_decomposition(M)
    assign = [0] * num_pairs(M)
    for k, match in enumerate(dec.matchings):
        for u, v in match:
            assign[edge_index(M, u, v)] = sets[k].mask
    return SetColoring(M, p.r, p.s, tuple(assign))


def star_lower_certificate(r: int, s: int, n1: int) -> Certificate:
    p = StarConstructionParams(r, s, n1)
    return Certificate(star_lower_coloring(p), (TargetSpec("star", n1),) * r)


# --------------------------------------------------------------------------
# random colorings


def unrank_subset(rank: int, r: int, s: int) -> int:
    """Mask of the ``rank``-th s-subset of {1..r} in colex order."""
    if not 0 <= rank < comb(r, s):
        raise ValueError(f"rank {rank} out of range for C({r},{s})")
    mask = 0
    c = r
    for j in range(s, 0, -1):
        c -= 1
        while comb(c, j) > rank:
            c -= 1
        rank -= comb(c, j)
        mask |= 1 << c
    return mask


def _random_mask(rng: random.Random, r: int, s: int, total: int) -> int:
    return unrank_subset(rng.randrange(total), r, s)


def random_coloring(n: int, r: int, s: int, seed: int | random.Random) -> SetColoring:
    """Each edge gets a uniform s-subset, independently.

    ``seed`` is an int (fresh :class:`random.Random`, Mersenne Twister) or
    an existing generator, which is advanced.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    total = comb(r, s)
    return SetColoring(n, r, s, tuple(_random_mask(rng, r, s, total) for _ in range(num_pairs(n))))


def repair_search(
    n: int,
    r: int,
    s: int,
    targets: Sequence[TargetSpec],
    budget: int,
    seed: int,
) -> Certificate | None:
    """Random coloring followed by single-edge repairs.

    While a monochromatic witness exists, one of its edges (chosen uniformly)
    gets a fresh random color set. Returns a verified certificate, or None
    when ``budget`` repairs did not suffice.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    targets = tuple(targets)
    rng = random.Random(seed)
    total = comb(r, s)
    assign = list(random_coloring(n, r, s, rng).assign)
    for step in range(budget + 1):
        c = SetColoring(n, r, s, tuple(assign))
        w = find_monochromatic(c, targets)
        if w is None:
            cert = Certificate(c, targets)
            if verify_certificate(cert).status != VALID_AND_FREE:
                raise AssertionError("repair search produced a coloring that fails verification")
            log.debug("repair search succeeded after %d repairs", step)
            return cert
        if step == budget:
            break
        u, v = w.edges[rng.randrange(len(w.edges))]
        assign[edge_index(n, u, v)] = _random_mask(rng, r, s, total)
    return None
