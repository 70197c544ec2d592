"""(r, s)-colorings of K_n and their JSON certificate form.

A color set is an ``s``-subset of ``{1..r}`` stored as a bitmask with
element ``i`` at bit ``i - 1``. A coloring stores one mask per edge of
K_n, indexed by the canonical edge order of :mod:`setramsey.graph`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    CapacityError,
    InvalidTargetError,
    TargetSpec,
    bits,
    edge_index,
    edge_pair,
    format_targets,
    num_pairs,
    parse_target,
    popcount,
)

MAX_PALETTE = 64

__all__ = [
    "MAX_PALETTE",
    "MalformedError",
    "ColorSet",
    "SetColoring",
    "Certificate",
    "mask_of",
    "elements_of",
]


class MalformedError(ValueError):
    pass


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << (i - 1)
    return m


def elements_of(mask: int) -> list[int]:
    return [b + 1 for b in bits(mask)]


def _check_palette(r: int, s: int) -> None:
    if r > MAX_PALETTE:
        raise CapacityError(f"palette size r={r} exceeds {MAX_PALETTE}")
    if not 1 <= s < r:
        raise MalformedError(f"need 1 <= s < r, got r={r}, s={s}")


@dataclass(frozen=True)
class ColorSet:
    mask: int
    r: int
    s: int

    def __post_init__(self):
        _check_palette(self.r, self.s)
        if self.mask >> self.r or popcount(self.mask) != self.s:
            raise MalformedError(
                f"color set {elements_of(self.mask)} is not a {self.s}-subset of 1..{self.r}"
            )

    @classmethod
    def of(cls, elements: Iterable[int], r: int, s: int) -> "ColorSet":
        elements = list(elements)
        if len(set(elements)) != len(elements) or any(not 1 <= i <= r for i in elements):
            raise MalformedError(f"bad color elements {elements} for r={r}")
        return cls(mask_of(elements), r, s)

    @property
    def elements(self) -> list[int]:
        return elements_of(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> (i - 1) & 1)


@dataclass(frozen=True)
class SetColoring:
    """χ : E(K_n) → (s-subsets of [r]), one mask per canonical edge index."""

    n: int
    r: int
    s: int
    assign: tuple[int, ...]

    def validate(self) -> None:
        """Raise :class:`MalformedError` unless every entry is an s-subset of [r]."""
        _check_palette(self.r, self.s)
        if self.n < 1:
            raise MalformedError("host must have at least one vertex")
        if len(self.assign) != num_pairs(self.n):
            raise MalformedError(
                f"expected {num_pairs(self.n)} edge colors for K_{self.n}, got {len(self.assign)}"
            )
        for idx, m in enumerate(self.assign):
            if m < 0 or m >> self.r or popcount(m) != self.s:
                u, v = edge_pair(self.n, idx)
                raise MalformedError(
                    f"edge {u}-{v} has colors {elements_of(m)}, need {self.s} distinct elements of 1..{self.r}"
                )

    def colors(self, u: int, v: int) -> ColorSet:
        if u > v:
            u, v = v, u
        return ColorSet(self.assign[edge_index(self.n, u, v)], self.r, self.s)

    def mask(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.assign[edge_index(self.n, u, v)]

    def used_elements(self) -> list[int]:
        union = 0
        for m in self.assign:
            union |= m
        return elements_of(union)

    def relabel(self, perm: Sequence[int]) -> "SetColoring":
        """Coloring with vertex ``v`` renamed to ``perm[v]``."""
        out = [0] * len(self.assign)
        for idx, m in enumerate(self.assign):
            u, v = edge_pair(self.n, idx)
            a, b = sorted((perm[u], perm[v]))
            out[edge_index(self.n, a, b)] = m
        return SetColoring(self.n, self.r, self.s, tuple(out))

    def permute_elements(self, sigma: dict[int, int]) -> "SetColoring":
        """Apply the element map ``i -> sigma.get(i, i)`` to every color set."""
        out = []
        for m in self.assign:
            out.append(mask_of(sigma.get(i, i) for i in elements_of(m)))
        return SetColoring(self.n, self.r, self.s, tuple(out))

    @classmethod
    def uniform(cls, n: int, cs: ColorSet) -> "SetColoring":
        return cls(n, cs.r, cs.s, (cs.mask,) * num_pairs(n))


@dataclass(frozen=True)
class Certificate:
    """A coloring together with the instance it claims to avoid."""

    coloring: SetColoring
    targets: tuple[TargetSpec, ...]

    @property
    def n(self) -> int:
        return self.coloring.n

    def to_json(self) -> dict:
        c = self.coloring
        edges = []
        for idx, m in enumerate(c.assign):
            u, v = edge_pair(c.n, idx)
            edges.append({"u": u, "v": v, "colors": elements_of(m)})
        return {
            "n": c.n,
            "r": c.r,
            "s": c.s,
            "targets": format_targets(self.targets),
            "edges": edges,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        """Parse the certificate dict, raising :class:`MalformedError` on any schema problem.

        The color-set contents are not validated here; :meth:`SetColoring.validate` does that.
        """
        try:
            n, r, s = data["n"], data["r"], data["s"]
            raw_targets = data["targets"]
            raw_edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise MalformedError(f"missing field {exc}") from None
        for name, val in (("n", n), ("r", r), ("s", s)):
            if not isinstance(val, int) or isinstance(val, bool):
                raise MalformedError(f"field {name!r} must be an integer")
        if not isinstance(raw_targets, list) or not isinstance(raw_edges, list):
            raise MalformedError("targets and edges must be lists")
        if n < 1:
            raise MalformedError("n must be at least 1")
        if n > 64:
            raise CapacityError(f"n={n} exceeds the 64-vertex limit")
        if len(raw_targets) != r:
            raise MalformedError(f"expected {r} targets, got {len(raw_targets)}")
        try:
            targets = tuple(parse_target(t) for t in raw_targets)
        except (InvalidTargetError, AttributeError) as exc:
            raise MalformedError(f"bad target: {exc}") from None
        if len(raw_edges) != num_pairs(n):
            raise MalformedError(f"expected {num_pairs(n)} edges for K_{n}, got {len(raw_edges)}")
        assign = []
        for idx, e in enumerate(raw_edges):
            try:
                u, v, cols = e["u"], e["v"], e["colors"]
            except (KeyError, TypeError):
                raise MalformedError(f"edge entry {idx} lacks u/v/colors") from None
            if (u, v) != edge_pair(n, idx):
                raise MalformedError(f"edge entry {idx} is {u}-{v}, expected {edge_pair(n, idx)} in canonical order")
            if not isinstance(cols, list) or any(not isinstance(i, int) for i in cols):
                raise MalformedError(f"edge {u}-{v}: colors must be a list of integers")
            if cols != sorted(set(cols)):
                raise MalformedError(f"edge {u}-{v}: colors must be distinct and ascending")
            if any(not 1 <= i <= min(r, MAX_PALETTE) for i in cols):
                raise MalformedError(f"edge {u}-{v}: color outside 1..{r}")
            assign.append(mask_of(cols))
        return cls(SetColoring(n, r, s, tuple(assign)), targets)

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedError(f"invalid JSON: {exc}") from None
        return cls.from_json(data)
