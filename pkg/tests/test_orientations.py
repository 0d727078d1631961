import itertools

import pytest

from chipfire import (
    Divisor,
    Orientation,
    ValidationError,
    catalog,
    dhar_burn,
    divisor_from_orientation,
    find_sourceless_rep,
    has_effective_rep,
    is_equivalent,
    is_sourceless,
    rook_defeat_instance,
    sourceless_divisor_classes,
)


def _full_cycle_orientation(n):
    rows = []
    for u in range(n):
        v = (u + 1) % n
        if u < v:
            rows.append((u, v, 1, 0, 0))
        else:
            rows.append((v, u, 0, 1, 0))
    return Orientation(tuple(sorted(rows)))


def test_orientation_round_trip_and_validation():
    g = catalog.cycle(3)
    o = _full_cycle_orientation(3)
    assert Orientation.from_json(o.to_json()).rows == o.rows
    with pytest.raises(ValidationError):
        # counts exceed the bundle multiplicity
        divisor_from_orientation(
            g, Orientation(((0, 1, 2, 0, 0), (0, 2, 1, 0, 0), (1, 2, 0, 1, 0)))
        )
    with pytest.raises(ValidationError):
        # missing bundle
        divisor_from_orientation(g, Orientation(((0, 1, 1, 0, 0),)))


def test_divisor_from_orientation():
    g = catalog.cycle(3)
    o = _full_cycle_orientation(3)
    # a directed cycle gives everyone indegree 1, hence the zero divisor
    assert divisor_from_orientation(g, o).chips == (0, 0, 0)
    assert is_sourceless(g, o)


def test_partial_orientation_divisor():
    g = catalog.banana(4)
    o = Orientation(((0, 1, 1, 2, 1),))
    d = divisor_from_orientation(g, o)
    assert d.chips == (1, 0)
    assert is_sourceless(g, o)
    # leaving a vertex with no incoming edge is a source
    bad = Orientation(((0, 1, 4, 0, 0),))
    assert not is_sourceless(g, bad)


def test_sourceless_divisor_degree_bound():
    # indegrees sum to the number of oriented edges, at most |E|,
    # so a sourceless divisor has degree at most genus - 1
    g = catalog.double_banana(3, 2)
    o = Orientation(((0, 1, 2, 1, 0), (1, 2, 1, 1, 0)))
    if is_sourceless(g, o):
        d = divisor_from_orientation(g, o)
        assert d.degree() <= g.genus() - 1
        assert d.is_effective()


def test_find_sourceless_rep_requires_low_degree():
    g = catalog.cycle(3)  # genus 1
    with pytest.raises(ValidationError):
        find_sourceless_rep(g, Divisor((1, 0, 0)))


def test_find_sourceless_rep_on_known_classes():
    g = catalog.banana(4)  # genus 3
    o = find_sourceless_rep(g, Divisor((1, 0)))
    assert o is not None
    realized = divisor_from_orientation(g, o)
    assert is_sourceless(g, o)
    assert is_equivalent(g, realized, Divisor((1, 0)))
    # the zero class on a cycle comes from the directed cycle
    c3 = catalog.cycle(3)
    o = find_sourceless_rep(c3, Divisor((0, 0, 0)))
    assert o is not None
    assert divisor_from_orientation(c3, o).degree() == 0
    # a non-principal degree-0 class on the cycle has no effective rep
    assert find_sourceless_rep(c3, Divisor((1, -1, 0))) is None


def test_biconditional_with_effectivity():
    # deg <= g-1 classes: sourceless realizability iff effective rep
    for g in [
        catalog.banana(3),
        catalog.banana(4),
        catalog.double_banana(2, 1),
        catalog.double_banana(2, 2),
        catalog.banana_loop(1, 1, 2),
        catalog.complete(4),
    ]:
        genus = g.genus()
        for chips in itertools.product(range(-1, genus), repeat=g.n):
            if not -1 <= sum(chips) <= genus - 1:
                continue
            d = Divisor(chips)
            found = find_sourceless_rep(g, d)
            assert (found is not None) == has_effective_rep(g, d), (
                g.mult,
                chips,
            )
            if found is not None:
                assert is_equivalent(
                    g, divisor_from_orientation(g, found), d
                )


def test_sourceless_divisor_classes_sweep():
    c3 = catalog.cycle(3)
    classes = sourceless_divisor_classes(c3)
    assert set(classes) == {0}
    assert classes[0] == {(0, 0, 0)}
    k4 = catalog.complete(4)
    sweep = sourceless_divisor_classes(k4)
    # all degrees up to g-1 = 2 are realized on K4
    assert set(sweep) == {0, 1, 2}
    # cross-check the sweep against the single-class search
    for degree, reps in sweep.items():
        for chips in reps:
            assert find_sourceless_rep(k4, Divisor(chips)) is not None


def test_rook_defeat_instance():
    g, d = rook_defeat_instance()
    assert g.n == 25
    assert d.degree() == 19
    assert sorted(c for c in d.chips if c)[-3:] == [6, 6, 6]
    loaded = {v for v, c in enumerate(d.chips) if c == 6}
    for q in range(g.n):
        if d[q]:
            continue
        report = dhar_burn(g, d, q)
        assert loaded <= report.unburned
