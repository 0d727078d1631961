"""Divisor rank in the sense of the chip-firing Riemann-Roch theory.

rank(D) is the largest r such that D minus any effective divisor of degree
r still has an effective representative (and -1 if D itself has none).
The implementation recurses on "rank at least k holds iff it survives
removing one chip at every vertex", memoized on reduced forms so that
equivalent divisors share work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .divisor import Divisor, _check_divisor, canonical_divisor
from .errors import BudgetExceededError
from .multigraph import Multigraph
from .reduction import _base_gains_chip, _reduce_array, q_reduce

__all__ = ["RankResult", "has_positive_rank", "rank", "riemann_roch_residual"]

_MAX_VERTICES = 14
_MAX_MEMO = 2_000_000


@dataclass(frozen=True)
class RankResult:
    """Rank value plus a certificate for the failing side.

    obstruction is an effective divisor of degree rank+1 whose removal
    leaves no effective representative; it is what stops the rank from
    being any higher.
    """

    rank: int
    obstruction: Divisor


def _positive_rank_effective(mult, valences, chips) -> bool:
    """True iff the class of an effective chip array can deliver a chip to
    every vertex.  Rejects on the first vertex that cannot be served."""
    for v in range(chips.shape[0]):
        if chips[v] >= 1:
            continue
        work = chips.copy()
        if not _base_gains_chip(mult, valences, work, v):
            return False
    return True


def has_positive_rank(g: Multigraph, d: Divisor) -> bool:
    """Whether rank(d) >= 1, i.e. d can cover a chip demand anywhere."""
    _check_divisor(g, d)
    if d.degree() < 1:
        return False
    reduced = _reduce_array(g, d.as_array(), 0)
    if reduced[0] < 0:
        return False
    return _positive_rank_effective(g.mult, g.valences(), reduced)


def rank(g: Multigraph, d: Divisor) -> RankResult:
    """Exact rank by recursion over single-chip removals.

    Exponential in the worst case; guarded by a vertex budget and a memo
    size cap.  The memo is keyed on (reduced form, k) and lives only for
    the duration of one call.
    """
    _check_divisor(g, d)
    if g.n > _MAX_VERTICES:
        raise BudgetExceededError(
            f"rank recursion capped at {_MAX_VERTICES} vertices"
        )
    mult, valences = g.mult, g.valences()
    n = g.n
    memo: dict = {}

    def failing_chain(chips: np.ndarray, k: int):
        """A list of k vertices whose removal strands the class in debt,
        or None if every removal sequence stays effective."""
        reduced = _reduce_array(g, chips.copy(), 0)
        if k == 0:
            return None if reduced[0] >= 0 else []
        if reduced[0] < 0:
            return []  # already stuck, any padding would do; keep it empty
        key = (reduced.tobytes(), k)
        if key in memo:
            return memo[key]
        if len(memo) > _MAX_MEMO:
            raise BudgetExceededError("rank memo exceeded its size budget")
        result = None
        for v in range(n):
            reduced[v] -= 1
            chain = failing_chain(reduced, k - 1)
            reduced[v] += 1
            if chain is not None:
                result = [v] + chain
                break
        memo[key] = result
        return result

    chips = d.as_array()
    if d.degree() < 0:
        return RankResult(rank=-1, obstruction=Divisor.zero(n))
    r = -1
    chain = failing_chain(chips, 0)
    while chain is None:
        r += 1
        if r > d.degree():  # rank never exceeds degree
            raise AssertionError("rank recursion ran past its degree bound")
        chain = failing_chain(chips, r + 1)
    # Chains can come back short when a branch hits debt early; removing
    # even more chips keeps the class in debt, so padding preserves the
    # certificate while pinning the degree at rank+1.
    obstruction = [0] * n
    for v in chain:
        obstruction[v] += 1
    obstruction[0] += (r + 1) - len(chain)
    return RankResult(rank=r, obstruction=Divisor(tuple(obstruction)))


def riemann_roch_residual(g: Multigraph, d: Divisor) -> int:
    """rank(D) - rank(K-D) - deg(D) + genus - 1; zero when the chip-firing
    Riemann-Roch identity holds."""
    _check_divisor(g, d)
    k = canonical_divisor(g)
    r_d = rank(g, d).rank
    r_kd = rank(g, k - d).rank
    return r_d - r_kd - d.degree() + g.genus() - 1
