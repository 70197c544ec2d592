from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from setramsey.decompose import (
    CycleList,
    MatchingList,
    ParityError,
    check_decomposition,
    hamilton_decomposition,
    maximal_matching_decomposition,
    maximal_matching_decomposition_rotation,
    one_factorization,
)

even = st.integers(1, 32).map(lambda k: 2 * k)
odd = st.integers(1, 31).map(lambda k: 2 * k + 1)


def _norm(e):
    return tuple(sorted(e))


def independent_cover_check(n, parts):
    """Recount from scratch: every pair of K_n appears in exactly one part."""
    seen = [_norm(e) for part in parts for e in part]
    return sorted(seen) == sorted(combinations(range(n), 2))


@given(even)
def test_one_factorization(n):
    d = one_factorization(n)
    assert check_decomposition(d).ok
    assert len(d.matchings) == n - 1
    assert all(len(m) == n // 2 for m in d.matchings)
    assert independent_cover_check(n, d.matchings)


def test_one_factorization_first_round():
    assert one_factorization(6).matchings[0] == ((0, 5), (1, 4), (2, 3))
    assert one_factorization(2).matchings == (((0, 1),),)


@given(odd)
def test_hamilton_decomposition(n):
    d = hamilton_decomposition(n)
    assert check_decomposition(d).ok
    assert len(d.cycles) == (n - 1) // 2
    for i, cyc in enumerate(d.cycles):
        assert sorted(cyc) == list(range(n))
        assert len(d.cycle_edges(i)) == n
    assert independent_cover_check(n, [d.cycle_edges(i) for i in range(len(d.cycles))])


@given(odd)
def test_maximal_matching_decomposition(n):
    d = maximal_matching_decomposition(n)
    assert check_decomposition(d).ok
    assert len(d.matchings) == n
    assert sorted(d.uncovered) == list(range(n))
    for m, spot in zip(d.matchings, d.uncovered):
        touched = sorted(v for e in m for v in e)
        assert touched == [v for v in range(n) if v != spot]
    assert independent_cover_check(n, d.matchings)


@given(odd)
def test_rotation_variant(n):
    d = maximal_matching_decomposition_rotation(n)
    assert check_decomposition(d).ok
    assert sorted(d.uncovered) == list(range(n))


def test_k5_matches_hand_computation():
    d = maximal_matching_decomposition(5)
    one_based = [sorted(tuple(sorted((a + 1, b + 1))) for a, b in m) for m in d.matchings]
    assert one_based == [[(1, 4), (2, 3)], [(2, 4), (3, 5)], [(1, 2), (4, 5)], [(1, 3), (2, 5)], [(1, 5), (3, 4)]]
    assert [u + 1 for u in d.uncovered] == [5, 1, 3, 4, 2]


@pytest.mark.parametrize("fn, n", [(one_factorization, 5), (hamilton_decomposition, 4), (maximal_matching_decomposition, 6),
                                   (one_factorization, 0), (maximal_matching_decomposition, 1)])
def test_parity_errors(fn, n):
    with pytest.raises(ParityError):
        fn(n)


def test_checker_catches_damage():
    d = one_factorization(6)
    broken = MatchingList(6, (d.matchings[0], d.matchings[0]) + d.matchings[2:], d.uncovered)
    rep = check_decomposition(broken)
    assert not rep.ok and not rep.checks["disjoint"]

    m = maximal_matching_decomposition(7)
    shifted = MatchingList(7, m.matchings, m.uncovered[1:] + m.uncovered[:1])
    assert not check_decomposition(shifted).ok

    missing = MatchingList(7, m.matchings[:-1], m.uncovered[:-1])
    assert not check_decomposition(missing).checks["coverage"]

    h = hamilton_decomposition(7)
    bad = CycleList(7, (h.cycles[0], h.cycles[0], h.cycles[2]))
    assert not check_decomposition(bad).ok


def test_json_shape():
    js = maximal_matching_decomposition(5).to_json("maxmatch")
    assert list(js) == ["n", "kind", "parts", "uncovered"]
    assert js["n"] == 5 and len(js["parts"]) == 5
    js = one_factorization(4).to_json("1f")
    assert js["uncovered"] == [None, None, None]
