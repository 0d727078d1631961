"""Gonality search against the enumeration oracle, plus its budget,
certificate, and determinism contracts."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chipfire import (
    BudgetExceededError,
    Divisor,
    SearchOptions,
    ValidationError,
    cartesian_product,
    catalog,
    conjecture_bound,
    dhar_burn,
    enumerate_effective_classes,
    expected_product_gonality,
    gonality,
    has_positive_rank,
    product_report,
    replicate_divisor,
)

import oracles


def test_gonality_matches_oracle():
    for g in [
        catalog.path(2),
        catalog.path(4),
        catalog.star(4),
        catalog.cycle(3),
        catalog.cycle(5),
        catalog.banana(2),
        catalog.banana(4),
        catalog.double_banana(2, 1),
        catalog.double_banana(3, 2),
        catalog.banana_loop(1, 1, 2),
        catalog.complete(4),
        catalog.tadpole(3, 1),
    ]:
        assert gonality(g).gonality == oracles.gonality(g), g.mult


def test_known_values():
    assert gonality(catalog.path(7)).gonality == 1
    assert gonality(catalog.complete(5)).gonality == 4
    assert gonality(catalog.cycle(9)).gonality == 2
    for n in (2, 3, 4):
        assert gonality(catalog.chain(n)).gonality == n
    rook = cartesian_product(catalog.complete(3), catalog.complete(3))
    assert gonality(rook, SearchOptions(threads=2)).gonality == 6


def test_certificate_witness_properties():
    g = catalog.complete(4)
    cert = gonality(g)
    w = cert.witness
    assert w.degree() == cert.gonality == 3
    assert w.is_effective()
    assert has_positive_rank(g, w)
    # witness is reduced at 0 and lexicographically least among reduced
    # positive-rank witnesses of that degree
    assert dhar_burn(g, w, 0).everything_burned()
    candidates = [
        Divisor(c)
        for c in oracles.effective_divisors(4, 3)
        if dhar_burn(g, Divisor(c), 0).everything_burned()
        and has_positive_rank(g, Divisor(c))
    ]
    assert min(c.chips for c in candidates) == w.chips


def test_classes_examined_counts():
    g = catalog.path(3)
    cert = gonality(g)
    assert cert.gonality == 1
    # degree-1 candidates: one chip somewhere, scanned in lex order
    assert cert.classes_examined[0][0] == 1
    assert cert.classes_examined[0][1] >= 1


def test_certificate_json_excludes_timing():
    g = catalog.cycle(4)
    cert = gonality(g)
    assert "elapsed" not in cert.to_json()
    assert cert.elapsed_s >= 0.0


def test_determinism_across_thread_counts():
    g = cartesian_product(catalog.complete(3), catalog.complete(3))
    outputs = {
        gonality(g, SearchOptions(threads=t)).to_json() for t in (1, 2, 4, 8)
    }
    assert len(outputs) == 1


def test_budget_raises_with_brackets():
    g = cartesian_product(catalog.complete(3), catalog.complete(4))
    with pytest.raises(BudgetExceededError) as info:
        gonality(g, SearchOptions(max_candidates=50))
    assert info.value.lower is not None
    assert info.value.upper is not None
    assert info.value.lower <= info.value.upper


def test_degree_cap_raises_when_no_witness_below():
    g = catalog.complete(5)  # gonality 4
    with pytest.raises(BudgetExceededError) as info:
        gonality(g, SearchOptions(degree_cap=2))
    assert info.value.lower == 3
    with pytest.raises(ValidationError):
        gonality(g, SearchOptions(degree_cap=0))


def test_time_budget_zero_trips_immediately():
    g = cartesian_product(catalog.complete(3), catalog.complete(3))
    with pytest.raises(BudgetExceededError):
        gonality(g, SearchOptions(time_budget_s=0.0))


def test_enumerate_effective_classes():
    g = catalog.cycle(3)
    classes = list(enumerate_effective_classes(g, 2))
    # every class exactly once, each reduced at 0
    assert len(set(d.chips for d in classes)) == len(classes)
    for d in classes:
        assert dhar_burn(g, d, 0).everything_burned()
    # C3 degree-2 classes: spanning trees = 3, so h^0 count is |Jac| = 3
    assert len(classes) == oracles.spanning_tree_count(g)


def test_replicate_divisor():
    a, b = catalog.complete(3), catalog.path(2)
    w = gonality(a).witness
    left = replicate_divisor(w, a, b, side="left")
    assert left.degree() == gonality(a).gonality * b.n
    assert has_positive_rank(cartesian_product(a, b), left)
    right = replicate_divisor(gonality(b).witness, a, b, side="right")
    assert right.degree() == gonality(b).gonality * a.n
    with pytest.raises(ValidationError):
        replicate_divisor(w, a, b, side="up")
    with pytest.raises(ValidationError):
        replicate_divisor(Divisor((1, 0, -1)), a, b, side="left")


def test_expected_and_conjecture_formulas():
    a, b = catalog.complete(3), catalog.cycle(4)
    assert expected_product_gonality(a, b, 2, 2) == min(2 * 4, 2 * 3)
    p = cartesian_product(a, b)
    assert conjecture_bound(p) == (p.genus() + 3) // 2


def test_product_report_exact():
    report = product_report(catalog.complete(3), catalog.complete(3))
    assert report.is_exact()
    assert report.actual == 6
    assert report.expected == 6
    assert report.gap_expected_minus_actual == 0
    assert report.equality_with_conjecture is True


def test_product_report_bracket_collapses_for_trees():
    # the strict bramble pins min(m, n) even when the search is starved
    opts = SearchOptions(max_candidates=10)
    report = product_report(catalog.path(5), catalog.path(5), opts)
    assert report.is_exact()
    assert report.actual == 5


def test_product_report_bracket_survives_for_nontrees():
    opts = SearchOptions(max_candidates=10)
    report = product_report(catalog.complete(3), catalog.complete(3), opts)
    assert not report.is_exact()
    lo, hi = report.actual
    assert 2 <= lo <= 6 <= hi <= 6


@given(st.integers(2, 4), st.integers(2, 4))
@settings(max_examples=9, deadline=None)
def test_tree_products_meet_min_bound(m, n):
    a, b = catalog.path(m), catalog.path(n)
    cert = gonality(cartesian_product(a, b))
    assert cert.gonality == min(m, n)
