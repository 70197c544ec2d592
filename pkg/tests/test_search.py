from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from setramsey.coloring import Certificate, SetColoring
from setramsey.detect import VALID_AND_FREE, find_monochromatic, verify_certificate
from setramsey.graph import CapacityError, num_pairs, parse_targets
from setramsey.search import FORCED, GOOD, UNKNOWN, all_masks, decide, first_edge_masks, ramsey_number


def brute_force(n, r, s, targets):
    """Plain enumeration of every coloring, no pruning and no symmetry."""
    for assign in product(all_masks(r, s), repeat=num_pairs(n)):
        if find_monochromatic(SetColoring(n, r, s, assign), targets) is None:
            return GOOD
    return FORCED


TINY = [
    (3, 2, "C4,C4,C4"),
    (3, 2, "P3,P4,P4"),
    (3, 2, "K3,P4,P4"),
    (3, 2, "S2,S3,S3"),
    (3, 2, "P3,P3,P3"),
    (3, 2, "M2,K3,S2"),
    (3, 1, "P3,P3,C3"),
    (4, 3, "P3,P3,P3,P3"),
    (4, 1, "K3,S2,P3,P3"),
]


@pytest.mark.parametrize("r, s, targets", TINY)
def test_forced_status_matches_brute_force(r, s, targets):
    ts = parse_targets(targets)
    for n in range(2, 5):
        assert decide(n, r, s, ts).outcome == brute_force(n, r, s, ts), n


@pytest.mark.parametrize(
    "n, targets, outcome",
    [(4, "C4,C4,C4", GOOD), (5, "C4,C4,C4", FORCED), (3, "P3,P4,P4", GOOD), (4, "P3,P5,P5", GOOD), (5, "P3,P6,P6", GOOD)],
)
def test_decide_examples(n, targets, outcome):
    d = decide(n, 3, 2, parse_targets(targets))
    assert d.outcome == outcome
    if outcome == GOOD:
        assert verify_certificate(d.certificate).status == VALID_AND_FREE
        assert d.certificate.n == n


target_names = st.sampled_from(["P3", "P4", "P5", "C4", "C3", "S2", "S3", "K3", "M2", "custom:0-1,1-2,1-3"])


@settings(max_examples=25, deadline=None)
@given(st.lists(target_names, min_size=3, max_size=3), st.integers(3, 5))
def test_symmetry_reduction_keeps_the_decision(names, n):
    ts = parse_targets(names)
    a = decide(n, 3, 2, ts)
    b = decide(n, 3, 2, ts, symmetry=False)
    assert a.outcome == b.outcome
    assert a.stats.nodes <= b.stats.nodes


@settings(max_examples=15, deadline=None)
@given(st.lists(target_names, min_size=3, max_size=3))
def test_forced_is_monotone_in_host_size(names):
    ts = parse_targets(names)
    outcomes = [decide(n, 3, 2, ts).outcome for n in range(2, 7)]
    first = outcomes.index(FORCED) if FORCED in outcomes else len(outcomes)
    assert all(o == FORCED for o in outcomes[first:])


def test_first_edge_representatives():
    assert first_edge_masks(3, 2, parse_targets("C4,C4,C4")) == [0b011]
    assert first_edge_masks(3, 2, parse_targets("P3,C4,C4")) == [0b011, 0b110]
    assert first_edge_masks(3, 2, parse_targets("P3,C4,K3")) == all_masks(3, 2)
    assert len(first_edge_masks(6, 3, parse_targets("P3,P3,P3,C4,C4,C4"))) == 4


def test_budget_gives_unknown():
    d = decide(5, 3, 2, parse_targets("C4,C4,C4"), budget=20)
    assert d.outcome == UNKNOWN and d.certificate is None


def test_parallel_branches_agree():
    ts = parse_targets("C4,C4,C4")
    for n, want in [(4, GOOD), (5, FORCED)]:
        d = decide(n, 3, 2, ts, threads=2, prefix_depth=2)
        assert d.outcome == want and d.stats.branches >= 1
        if want == GOOD:
            assert verify_certificate(d.certificate).status == VALID_AND_FREE


@pytest.mark.parametrize(
    "targets, value",
    [("C4,C4,C4", 5), ("P3,P4,P4", 4), ("S2,S3,S3", 4), ("K3,P4,P4", 4), ("P3,P3,P3", 3)],
)
def test_ramsey_number_exact(targets, value):
    res = ramsey_number(3, 2, parse_targets(targets), 6)
    assert res.status == "exact" and res.value == value
    assert res.certificate.n == value - 1
    assert verify_certificate(res.certificate).status == VALID_AND_FREE
    assert any(d.n == value and d.outcome == FORCED for d in res.decisions)


def test_ramsey_number_interval_on_cap_and_budget():
    res = ramsey_number(3, 2, parse_targets("C4,C4,C4"), 4)
    assert res.status == "interval" and res.lo == 5
    # K_4 needs 45 nodes, so only the uniform-coloring bound survives
    res = ramsey_number(3, 2, parse_targets("C4,C4,C4"), 6, budget=30)
    assert res.status == "interval" and res.lo == 4 and res.hi is None
    js = res.to_json()
    assert js["exact"] is None and js["interval"] == [4, None]


def test_search_result_json():
    js = ramsey_number(3, 2, parse_targets("C4,C4,C4"), 6).to_json()
    assert list(js) == ["instance", "status", "exact", "interval", "decisions", "stats", "certificate"]
    assert js["exact"] == 5
    cert = Certificate.from_json(js["certificate"])
    assert verify_certificate(cert).status == VALID_AND_FREE


def test_instance_errors():
    with pytest.raises(ValueError):
        decide(4, 3, 3, parse_targets("C4,C4,C4"))
    with pytest.raises(ValueError):
        decide(4, 3, 2, parse_targets("C4,C4"))
    with pytest.raises(CapacityError):
        decide(65, 3, 2, parse_targets("C4,C4,C4"))
