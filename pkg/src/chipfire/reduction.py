"""Dhar's burning process and reduction to base-vertex normal form.

The burning process starts a fire at a chosen vertex; an unburned vertex
ignites as soon as its burning incident edges outnumber its chips.  A
divisor that is nonnegative away from the base and survives no fire (the
whole graph burns) is the unique reduced representative of its linear
equivalence class, which makes equivalence and effectivity decidable.

Reduction runs in two phases.  Phase 1 clears debt away from the base by
firing balls around the base, farthest BFS layer first, enough times to
lift each layer out of debt; later layers are never touched again, so one
downward pass suffices.  Phase 2 repeatedly burns from the base and fires
the surviving set as many times as it can legally pay, until the whole
graph burns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .divisor import Divisor, _check_divisor
from .errors import ValidationError
from .multigraph import Multigraph

__all__ = ["BurnReport", "dhar_burn", "q_reduce", "is_equivalent", "has_effective_rep"]


@dataclass(frozen=True)
class BurnReport:
    """Outcome of one burning pass.

    ignition_order lists (vertex, burning-edge count at ignition), source
    first with count 0; vertices igniting in the same wave appear in index
    order.  The burned set itself does not depend on processing order.
    """

    source: int
    burned: frozenset[int]
    unburned: frozenset[int]
    ignition_order: tuple[tuple[int, int], ...]

    def everything_burned(self) -> bool:
        return not self.unburned


# ---------------------------------------------------------------------
# array-level engine; chips arguments are int64 arrays mutated in place


def _burn_mask(mult: np.ndarray, chips: np.ndarray, q: int) -> np.ndarray:
    """Boolean mask of vertices reached by a fire started at q.

    Requires chips[v] >= 0 for v != q.
    """
    n = chips.shape[0]
    burned = np.zeros(n, dtype=bool)
    burned[q] = True
    heat = mult[:, q].copy()
    while True:
        newly = (heat > chips) & ~burned
        if not newly.any():
            return burned
        burned |= newly
        heat += mult[:, np.flatnonzero(newly)].sum(axis=1)


def _fire_unburned(mult, valences, chips, burned):
    """Fire the complement of the burned set as many times as every member
    can pay; Dhar guarantees at least one firing is legal."""
    inside = (~burned).astype(np.int64)
    delta = valences * inside - mult @ inside  # Laplacian applied to the set
    losing = delta > 0
    k = int((chips[losing] // delta[losing]).min())
    chips -= k * delta


def _superstabilize(mult, valences, chips, q):
    """Phase 2: drive chips (nonnegative off q) to the q-reduced form."""
    while True:
        burned = _burn_mask(mult, chips, q)
        if burned.all():
            return
        _fire_unburned(mult, valences, chips, burned)


def _base_gains_chip(mult, valences, chips, q) -> bool:
    """True iff the q-reduced form of chips (nonnegative off q) holds at
    least one chip at q.  Exits early: chips at q only ever grow during
    phase 2, so the fixed point is not needed once one arrives."""
    if chips[q] >= 1:
        return True
    while True:
        burned = _burn_mask(mult, chips, q)
        if burned.all():
            return bool(chips[q] >= 1)
        _fire_unburned(mult, valences, chips, burned)
        if chips[q] >= 1:
            return True


def _clear_debt(mult, valences, chips, q, dist):
    """Phase 1: make chips nonnegative away from q.

    Layers are processed farthest first.  Firing the ball of radius d
    pushes chips into layer d through its edges toward the base and leaves
    everything beyond layer d untouched, so each layer is fixed exactly
    once.
    """
    for d in range(int(dist.max()), 0, -1):
        layer = np.flatnonzero(dist == d)
        debts = -chips[layer]
        if (debts <= 0).all():
            continue
        ball = dist < d
        into = mult[np.ix_(layer, np.flatnonzero(ball))].sum(axis=1)
        k = 0
        for debt, e in zip(debts.tolist(), into.tolist()):
            if debt > 0:
                k = max(k, -(-debt // e))
        if k:
            inside = ball.astype(np.int64)
            delta = valences * inside - mult @ inside
            chips -= k * delta


def _reduce_array(g: Multigraph, chips: np.ndarray, base: int) -> np.ndarray:
    """q-reduce an int64 chip array in place and return it."""
    mult, valences = g.mult, g.valences()
    off_base = np.delete(chips, base)
    if (off_base < 0).any():
        _clear_debt(mult, valences, chips, base, g.bfs_distances(base))
    _superstabilize(mult, valences, chips, base)
    return chips


# ---------------------------------------------------------------------
# public operations


def dhar_burn(g: Multigraph, d: Divisor, source: int) -> BurnReport:
    """Run one burning pass from source and report what survived.

    The divisor must be nonnegative away from the source.  An unburned
    vertex always retains at least as many chips as it has edges into the
    burned set, which is exactly what lets the survivors fire together.
    """
    _check_divisor(g, d)
    g._check_vertex(source)
    chips = d.as_array()
    if (np.delete(chips, source) < 0).any():
        raise ValidationError("divisor must be nonnegative away from the source")
    mult = g.mult
    n = g.n
    burned = np.zeros(n, dtype=bool)
    burned[source] = True
    heat = mult[:, source].copy()
    order = [(source, 0)]
    while True:
        newly = (heat > chips) & ~burned
        if not newly.any():
            break
        idx = np.flatnonzero(newly)
        order.extend((int(v), int(heat[v])) for v in idx)
        burned |= newly
        heat += mult[:, idx].sum(axis=1)
    burned_set = frozenset(np.flatnonzero(burned).tolist())
    unburned_set = frozenset(np.flatnonzero(~burned).tolist())
    return BurnReport(
        source=source,
        burned=burned_set,
        unburned=unburned_set,
        ignition_order=tuple(order),
    )


def q_reduce(g: Multigraph, d: Divisor, base: int = 0) -> Divisor:
    """The unique equivalent divisor that is nonnegative off the base and
    survives no fire started there.  Idempotent; degree is preserved."""
    _check_divisor(g, d)
    g._check_vertex(base)
    chips = _reduce_array(g, d.as_array(), base)
    return Divisor(tuple(int(c) for c in chips))


def is_equivalent(g: Multigraph, d1: Divisor, d2: Divisor) -> bool:
    """Linear equivalence, decided by comparing reduced forms at base 0."""
    _check_divisor(g, d1)
    _check_divisor(g, d2)
    if d1.degree() != d2.degree():
        return False
    return q_reduce(g, d1, 0) == q_reduce(g, d2, 0)


def has_effective_rep(g: Multigraph, d: Divisor) -> bool:
    """Whether the class of d contains an everywhere-nonnegative divisor."""
    _check_divisor(g, d)
    if d.degree() < 0:
        return False
    return q_reduce(g, d, 0)[0] >= 0
