"""Flip verification, order bound tables, and the sum-free subset search."""

import itertools

import pytest

from flipforge.analysis import (
    EXHAUSTIVE_ORDER_CAP,
    VIOLATION_JSON_CAP,
    assert_sum_free,
    bounds_table,
    bounds_to_csv,
    check_br_range,
    new_bound,
    new_bound_cap,
    old_bound,
    parity_factor,
    qk_bounds,
    search_sumfree_inverse_closed,
    verify_flip,
)
from flipforge.ecgraph import EdgeColouredGraph
from flipforge.group import cyclic
from flipforge.pipelines import build_br, plan_br
from flipforge.setalg import GroupSubset, is_inverse_closed, is_sum_free

C4_ALTERNATING = EdgeColouredGraph(4, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])


# ----------------------------------------------------------------- flip reports


def test_verify_flip_passes_on_construction():
    graph, _ = build_br(plan_br(4, 5))
    report = verify_flip(graph, expected=(4, 5))
    assert report.passed
    assert report.verdict == "pass"
    assert report.colour_degrees == (4, 5)
    assert report.uniform_e_chain == (7, 5)
    assert report.violations == ()


def test_verify_flip_expected_mismatch():
    graph, _ = build_br(plan_br(4, 5))
    report = verify_flip(graph, expected=(4, 6))
    assert not report.passed
    assert (None, "degrees-not-expected") in report.violations


def test_verify_flip_expected_length():
    with pytest.raises(ValueError):
        verify_flip(C4_ALTERNATING, expected=(1,))


def test_verify_flip_alternating_cycle():
    """Equal colour degrees and a flat chain: two distinct failure reasons."""
    report = verify_flip(C4_ALTERNATING)
    assert report.verdict == "fail"
    assert report.colour_degrees == (1, 1)
    assert report.uniform_e_chain == (1, 1)
    assert report.violations[0] == (None, "degrees-not-increasing")
    assert [v for v, reason in report.violations if reason == "chain-not-strict"] == [0, 1, 2, 3]


def test_verify_flip_irregular():
    path = EdgeColouredGraph(3, 1, [(0, 1, 1), (1, 2, 1)])
    report = verify_flip(path)
    assert not report.passed
    assert (1, "not-regular") in report.violations
    assert report.colour_degrees is None
    assert report.uniform_e_chain is None  # per-vertex chains differ


def test_verify_flip_degenerate_graphs():
    # an empty multi-coloured graph is vacuously regular with flat degrees
    empty = verify_flip(EdgeColouredGraph(0, 2, []))
    assert empty.violations == ((None, "degrees-not-increasing"),)
    assert empty.e_chain is None
    assert verify_flip(EdgeColouredGraph(0, 1, [])).passed
    single = verify_flip(EdgeColouredGraph(1, 1, []))
    assert single.passed
    assert single.uniform_e_chain == (0,)


def test_flip_report_json_caps_violations():
    cycle = 2 * (VIOLATION_JSON_CAP + 4)
    edges = [(i, (i + 1) % cycle, 1 + i % 2) for i in range(cycle)]
    report = verify_flip(EdgeColouredGraph(cycle, 2, edges))
    data = report.to_json_dict()
    assert data["violation_count"] == len(report.violations) > VIOLATION_JSON_CAP
    assert len(data["violations"]) == VIOLATION_JSON_CAP
    assert data["verdict"] == "fail"


def test_flip_report_json_uniform_chain():
    graph, report = build_br(plan_br(4, 5))
    data = report.to_json_dict()
    assert data["e_chain"] == [7, 5]
    assert data["colour_degrees"] == [4, 5]


# ------------------------------------------------------------------ order bounds


def test_old_bound_values():
    assert old_bound(3, 4) == 32
    assert old_bound(4, 5) == 48
    assert old_bound(6, 7) == 80
    assert old_bound(11, 12) == 160
    assert old_bound(11, 13) == 168
    assert old_bound(25, 26) == 384


def test_old_bound_range():
    with pytest.raises(ValueError):
        old_bound(2, 3)
    with pytest.raises(ValueError):
        old_bound(4, 4)
    with pytest.raises(ValueError):
        old_bound(4, 10)  # above b(b+1)/2 - 1
    old_bound(4, 9)  # the cap itself is fine


def test_parity_factor():
    assert parity_factor(4, 5) == 1
    assert parity_factor(4, 6) == 1
    assert parity_factor(11, 13) == 2


def test_new_bound_cap_and_range():
    assert new_bound_cap(4) == 6
    assert new_bound_cap(10) == 18
    assert new_bound_cap(42) == 140
    check_br_range(42, 135)
    with pytest.raises(ValueError, match="b >= 4"):
        check_br_range(3, 5)
    with pytest.raises(ValueError, match="r > b"):
        check_br_range(5, 5)
    with pytest.raises(ValueError, match="2\\*floor"):
        check_br_range(4, 6)


def test_new_bound_values():
    assert new_bound(4, 5) == 40
    assert new_bound(6, 7) == 56
    assert new_bound(11, 12) == 80
    assert new_bound(11, 13) == 160
    assert new_bound(25, 26) == 160


def test_new_bound_dominates_old():
    for b in range(4, 31):
        for r in range(b + 1, new_bound_cap(b)):
            assert new_bound(b, r) < old_bound(b, r), (b, r)


def test_qk_bounds():
    assert qk_bounds(6) == (1, 2)
    assert qk_bounds(8) == (1, 4)
    assert qk_bounds(9) == (2, 3)
    assert qk_bounds(12) == (2, 4)
    assert qk_bounds(9, literal_lower=True) == (1, 3)
    with pytest.raises(ValueError):
        qk_bounds(3)
    for k in range(4, 61):
        lower, upper = qk_bounds(k)
        assert 1 <= lower < upper


# ------------------------------------------------------------------ bound tables


def test_bounds_table_ranges():
    rows = bounds_table([11])
    assert [row.r for row in rows] == list(range(12, 19))
    assert all(row.old is not None and row.new is not None for row in rows)
    assert len(bounds_table([25])) == 31
    assert len(bounds_table([11, 25])) == 38


def test_bounds_table_b3_fallback():
    rows = bounds_table([3])
    assert [row.r for row in rows] == [4, 5]
    assert all(row.new is None for row in rows)
    assert rows[0].old == 32
    with pytest.raises(ValueError):
        bounds_table([2])


def test_bounds_csv():
    text = bounds_to_csv(bounds_table([11, 25]))
    lines = text.splitlines()
    assert lines[0] == "b,r,old_bound,new_bound"
    assert lines[1] == "11,12,160,80"
    assert lines[2] == "11,13,168,160"
    assert len(lines) == 39
    assert text.endswith("\n")
    # empty cells where the construction does not apply
    b3 = bounds_to_csv(bounds_table([3])).splitlines()
    assert b3[1] == "3,4,32,"


# ----------------------------------------------------------------------- search


def brute_force_maximum(spec):
    """Reference search over every subset of the group."""
    elements = list(spec.elements())
    best = 0
    for size in range(len(elements), 0, -1):
        for combo in itertools.combinations(elements, size):
            s = GroupSubset.of(spec, combo)
            if is_inverse_closed(s) and is_sum_free(s):
                return size
    return best


def test_search_exhaustive_z7():
    result = search_sumfree_inverse_closed(cyclic(7))
    assert result.size == 2
    assert result.subset.sorted_elements() == [(1,), (6,)]
    assert result.optimal
    assert result.examined == 8  # three atoms
    assert result.size == brute_force_maximum(cyclic(7))


def test_search_exhaustive_z8():
    result = search_sumfree_inverse_closed(cyclic(8))
    assert result.size == 4
    assert result.subset.sorted_elements() == [(1,), (3,), (5,), (7,)]
    assert result.examined == 16
    assert result.size == brute_force_maximum(cyclic(8))


def test_search_exhaustive_z2():
    result = search_sumfree_inverse_closed(cyclic(2))
    assert result.size == 1
    assert result.subset.sorted_elements() == [(1,)]


def test_search_found_sets_are_valid():
    for n in range(2, 17):
        result = search_sumfree_inverse_closed(cyclic(n))
        assert is_sum_free(result.subset)
        assert is_inverse_closed(result.subset)
        assert result.size == brute_force_maximum(cyclic(n)), n


def test_search_exhaustive_order_cap():
    with pytest.raises(ValueError):
        search_sumfree_inverse_closed(cyclic(EXHAUSTIVE_ORDER_CAP + 1))


def test_search_exhaustive_budget_exceeded():
    with pytest.raises(ValueError, match="budget"):
        search_sumfree_inverse_closed(cyclic(8), budget=5)


def test_search_greedy():
    result = search_sumfree_inverse_closed(cyclic(8), mode="greedy")
    assert result.subset.sorted_elements() == [(1,), (3,), (5,), (7,)]
    assert not result.optimal
    assert not result.budget_exhausted
    assert result.examined == 4


def test_search_greedy_budget():
    result = search_sumfree_inverse_closed(cyclic(8), mode="greedy", budget=2)
    assert result.budget_exhausted
    assert result.examined == 2
    assert result.subset.sorted_elements() == [(1,), (7,)]


def test_search_greedy_large_group():
    # greedy has no order cap; it just stays maximal, not maximum
    result = search_sumfree_inverse_closed(cyclic(100), mode="greedy")
    assert is_sum_free(result.subset)
    assert is_inverse_closed(result.subset)


def test_search_mode_validation():
    with pytest.raises(ValueError):
        search_sumfree_inverse_closed(cyclic(8), mode="annealing")


def test_assert_sum_free():
    assert_sum_free(GroupSubset.of(cyclic(8), [1, 7]), "ok set")
    with pytest.raises(ValueError, match="red class"):
        assert_sum_free(GroupSubset.of(cyclic(8), [1, 2]), "red class")
