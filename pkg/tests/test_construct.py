from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from setramsey.coloring import ColorSet
from setramsey.construct import (
    DegenerateConstructionError,
    PathConstructionParams,
    StarConstructionParams,
    path_lower_certificate,
    path_lower_coloring,
    random_coloring,
    repair_search,
    star_color_multiset,
    star_lower_certificate,
    uniform_coloring,
    unrank_subset,
)
from setramsey.detect import VALID_AND_FREE, class_adjacency, longest_path_order, verify_certificate
from setramsey.graph import Graph, parse_targets
from setramsey.coloring import Certificate


@pytest.mark.parametrize(
    "r, s, n1, expected",
    [
        (3, 2, 3, [[1, 2], [1, 3], [2, 3]]),
        (4, 2, 3, [[1, 2], [3, 4], [1, 2], [3, 4]]),
        (3, 2, 4, [[1, 2], [1, 3], [2, 3], [1, 2]]),
    ],
)
def test_star_multiset_examples(r, s, n1, expected):
    assert [c.elements for c in star_color_multiset(StarConstructionParams(r, s, n1))] == expected


pairs_rs = st.integers(2, 7).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, r - 1)))


@given(pairs_rs, st.integers(3, 9))
def test_star_multiset_element_counts(rs, n1):
    r, s = rs
    p = StarConstructionParams(r, s, n1)
    counts = Counter(i for c in star_color_multiset(p) for i in c.elements)
    assert len(star_color_multiset(p)) == p.M
    for i in range(1, r + 1):
        assert counts[i] <= n1 - 1
    assert sum(counts.values()) == s * p.M


@settings(max_examples=40, deadline=None)
@given(pairs_rs, st.integers(3, 8))
def test_star_coloring_free_when_hypothesis_holds(rs, n1):
    r, s = rs
    p = StarConstructionParams(r, s, n1)
    if not p.hypothesis_ok or p.M < 2:
        return
    cert = star_lower_certificate(r, s, n1)
    assert cert.n == p.M
    assert verify_certificate(cert).status == VALID_AND_FREE


@settings(max_examples=40, deadline=None)
@given(pairs_rs, st.integers(3, 11))
def test_path_coloring_class_structure(rs, n1):
    r, s = rs
    p = PathConstructionParams(r, s, n1)
    c = path_lower_coloring(p)
    c.validate()
    assert c.n == p.blocks * p.block_size
    for i in range(1, r + 1):
        g = Graph.from_adjacency(class_adjacency(c, i))
        assert longest_path_order(g) <= 2 * p.block_size < n1
    assert verify_certificate(path_lower_certificate(r, s, n1)).status == VALID_AND_FREE


def test_path_construction_sizes():
    assert PathConstructionParams(4, 2, 10).N == 8
    assert PathConstructionParams(3, 2, 7).N == 3
    with pytest.raises(DegenerateConstructionError):
        path_lower_coloring(PathConstructionParams(4, 2, 2))
    with pytest.raises(ValueError):
        PathConstructionParams(2, 2, 5)


def test_star_degenerate():
    with pytest.raises(ValueError):
        StarConstructionParams(3, 2, 2)


def test_uniform_coloring():
    c = uniform_coloring(5, ColorSet.of([2, 3], 3, 2))
    cert = Certificate(c, tuple(parse_targets("P3,P6,P6")))
    assert verify_certificate(cert).status == VALID_AND_FREE


@given(pairs_rs)
def test_unrank_is_a_bijection(rs):
    r, s = rs
    masks = [unrank_subset(k, r, s) for k in range(comb(r, s))]
    assert len(set(masks)) == comb(r, s)
    assert all(m.bit_count() == s and m >> r == 0 for m in masks)
    assert masks == sorted(masks)


def test_unrank_range():
    assert [unrank_subset(k, 3, 2) for k in range(3)] == [0b011, 0b101, 0b110]
    with pytest.raises(ValueError):
        unrank_subset(3, 3, 2)


def test_random_coloring_is_seeded():
    a = random_coloring(7, 5, 2, 42)
    a.validate()
    assert a == random_coloring(7, 5, 2, 42)
    assert a != random_coloring(7, 5, 2, 43)


def test_repair_search():
    ts = parse_targets("C4,C4,C4")
    cert = repair_search(4, 3, 2, ts, 1000, 7)
    assert cert is not None and verify_certificate(cert).status == VALID_AND_FREE
    assert cert == repair_search(4, 3, 2, ts, 1000, 7)
    assert repair_search(5, 3, 2, ts, 500, 7) is None
    with pytest.raises(ValueError):
        repair_search(4, 3, 2, ts, 0, 7)
