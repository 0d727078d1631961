"""Gonality: the least degree of an effective divisor with positive rank.

The search enumerates effective divisors degree by degree in ascending
lexicographic order, skips everything that is not already in reduced form
at base 0 (each equivalence class contributes exactly one reduced member,
so nothing is missed), and tests the survivors for positive rank.  The
witness reported is therefore the lexicographically least reduced witness
of minimum degree, no matter how the scan is chunked across threads.

Products come with two a-priori bounds that keep the search finite: any
effective divisor of degree genus+1 has positive rank, and replicating a
positive-rank divisor across the other factor's copies caps a product's
gonality at min over sides of (factor gonality times other vertex count).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import json
from math import comb
import time

import numpy as np

from .brambles import tree_product_bramble, order as bramble_order
from .divisor import Divisor, _check_divisor
from .errors import BudgetExceededError, ValidationError
from .multigraph import Multigraph, ProductIndex, cartesian_product
from .rank import _positive_rank_effective, has_positive_rank
from .reduction import _burn_mask

__all__ = [
    "SearchOptions",
    "GonalityCertificate",
    "ProductReport",
    "enumerate_effective_classes",
    "gonality",
    "replicate_divisor",
    "expected_product_gonality",
    "conjecture_bound",
    "product_report",
]

_DEFAULT_MAX_CANDIDATES = 3_000_000
_CHUNK = 4096


@dataclass(frozen=True)
class SearchOptions:
    """Knobs for the exhaustive search.

    degree_cap truncates the search (bounds come back if it bites);
    max_candidates limits the total enumeration effort; the time budget is
    checked between chunks.  Thread count never changes any result, only
    how the chunks are dispatched.
    """

    degree_cap: int | None = None
    threads: int = 1
    time_budget_s: float | None = None
    max_candidates: int = _DEFAULT_MAX_CANDIDATES


@dataclass(frozen=True)
class GonalityCertificate:
    """Exact gonality plus the evidence of the search.

    witness is effective, has positive rank, and is the lexicographically
    least reduced divisor among minimum-degree witnesses.
    classes_examined records (degree, reduced classes inspected) pairs;
    lower degrees were exhausted without finding a witness.
    """

    gonality: int
    witness: Divisor
    classes_examined: tuple[tuple[int, int], ...]
    elapsed_s: float

    def to_json_obj(self) -> dict:
        # elapsed_s stays out: serialized certificates are byte-stable
        # across runs and thread counts
        return {
            "gonality": self.gonality,
            "witness": self.witness.to_json_obj(),
            "classes_examined": [[d, c] for d, c in self.classes_examined],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


# ---------------------------------------------------------------------
# composition enumeration (effective divisors of fixed degree)


def _num_compositions(total: int, parts: int) -> int:
    return comb(total + parts - 1, parts - 1)


def _unrank_composition(total: int, parts: int, index: int) -> list[int]:
    """index-th composition in ascending lexicographic order."""
    out = []
    for pos in range(parts - 1):
        a = 0
        while True:
            block = _num_compositions(total - a, parts - pos - 1)
            if index < block:
                break
            index -= block
            a += 1
        out.append(a)
        total -= a
    out.append(total)
    return out


def _advance_composition(c: list[int]) -> bool:
    """Step to the lexicographic successor in place; False at the end."""
    n = len(c)
    t = 0
    for j in range(n - 2, -1, -1):
        t += c[j + 1]
        if t > 0:
            c[j] += 1
            for i in range(j + 1, n - 1):
                c[i] = 0
            c[n - 1] = t - 1
            return True
    return False


# ---------------------------------------------------------------------
# scanning


def _scan_chunk(mult, valences, val_cap, degree, n, lo, hi):
    """Scan candidate indices [lo, hi) at the given degree.

    Returns (reduced classes examined, witness chips or None).  Stops at
    the first witness; everything the scan touches is in ascending
    lexicographic order, so the first witness in the chunk is its least.
    """
    c = _unrank_composition(degree, n, lo)
    examined = 0
    for _ in range(lo, hi):
        arr = np.array(c, dtype=np.int64)
        # reduced forms never exceed valence-1 off the base
        if not (arr[1:] <= val_cap).all():
            _advance_composition(c)
            continue
        if _burn_mask(mult, arr, 0).all():
            examined += 1
            if _positive_rank_effective(mult, valences, arr):
                return examined, tuple(int(x) for x in arr)
        _advance_composition(c)
    return examined, None


def _search_degree(g: Multigraph, degree: int, opts: SearchOptions, deadline):
    """Scan one degree completely (or up to the first witness).

    Returns (classes examined, witness tuple or None).  Chunk boundaries
    are fixed by _CHUNK alone, so counts and the witness are identical for
    every thread count.
    """
    mult, valences = g.mult, g.valences()
    n = g.n
    val_cap = (valences - 1)[1:]
    total = _num_compositions(degree, n)
    spans = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]

    def check_deadline():
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError(
                f"time budget exhausted at degree {degree}",
                lower=degree,
            )

    if opts.threads <= 1 or len(spans) <= 1:
        examined = 0
        for lo, hi in spans:
            check_deadline()
            count, witness = _scan_chunk(mult, valences, val_cap, degree, n, lo, hi)
            examined += count
            if witness is not None:
                return examined, witness
        return examined, None

    examined = 0
    with ThreadPoolExecutor(max_workers=opts.threads) as pool:
        pending = {}
        next_submit = 0
        next_take = 0
        while next_take < len(spans):
            check_deadline()
            while next_submit < len(spans) and len(pending) < opts.threads:
                lo, hi = spans[next_submit]
                pending[next_submit] = pool.submit(
                    _scan_chunk, mult, valences, val_cap, degree, n, lo, hi
                )
                next_submit += 1
            count, witness = pending.pop(next_take).result()
            next_take += 1
            examined += count
            if witness is not None:
                # chunks after this one can only hold larger candidates
                for fut in pending.values():
                    fut.cancel()
                return examined, witness
    return examined, None


def gonality(
    g: Multigraph,
    opts: SearchOptions | None = None,
    *,
    upper_bound_hint: int | None = None,
) -> GonalityCertificate:
    """Exact gonality by exhaustive search over reduced divisor classes.

    upper_bound_hint is a proven upper bound supplied by the caller (the
    replication bound, for products); it tightens both the search cap and
    the bracket reported on budget exhaustion.  Raises BudgetExceededError
    carrying bounds when a cap or budget cuts the search short.
    """
    opts = opts or SearchOptions()
    start = time.monotonic()
    deadline = (
        start + opts.time_budget_s if opts.time_budget_s is not None else None
    )
    hard_upper = g.genus() + 1  # every effective divisor there has positive rank
    if upper_bound_hint is not None:
        hard_upper = min(hard_upper, upper_bound_hint)
    cap = hard_upper
    if opts.degree_cap is not None:
        if opts.degree_cap < 1:
            raise ValidationError("degree cap must be at least 1")
        cap = min(cap, opts.degree_cap)

    counts = []
    spent = 0
    for degree in range(1, cap + 1):
        spent += _num_compositions(degree, g.n)
        if spent > opts.max_candidates:
            raise BudgetExceededError(
                f"candidate budget exhausted before degree {degree} "
                f"({spent} > {opts.max_candidates})",
                lower=degree,
                upper=hard_upper,
            )
        try:
            examined, witness = _search_degree(g, degree, opts, deadline)
        except BudgetExceededError as e:
            raise BudgetExceededError(str(e), lower=e.lower, upper=hard_upper)
        counts.append((degree, examined))
        if witness is not None:
            return GonalityCertificate(
                gonality=degree,
                witness=Divisor(witness),
                classes_examined=tuple(counts),
                elapsed_s=time.monotonic() - start,
            )
    if cap < hard_upper:
        raise BudgetExceededError(
            f"no witness up to the degree cap {cap}",
            lower=cap + 1,
            upper=hard_upper,
        )
    raise AssertionError("search exhausted its proven upper bound")


def enumerate_effective_classes(
    g: Multigraph, degree: int, max_candidates: int = _DEFAULT_MAX_CANDIDATES
) -> list[Divisor]:
    """All degree-d effective divisor classes, one reduced representative
    each, sorted lexicographically."""
    _ = g.mult
    if degree < 0:
        raise ValidationError("degree must be nonnegative")
    total = _num_compositions(degree, g.n)
    if total > max_candidates:
        raise BudgetExceededError(
            f"{total} candidates exceed the budget {max_candidates}"
        )
    mult = g.mult
    val_cap = (g.valences() - 1)[1:]
    out = []
    c = [0] * (g.n - 1) + [degree] if g.n > 1 else [degree]
    while True:
        arr = np.array(c, dtype=np.int64)
        if (g.n == 1 or (arr[1:] <= val_cap).all()) and _burn_mask(mult, arr, 0).all():
            out.append(Divisor(tuple(c)))
        if not _advance_composition(c):
            return out


def replicate_divisor(
    f: Divisor, g: Multigraph, h: Multigraph, side: str = "left"
) -> Divisor:
    """Spread a positive-rank divisor on one factor across the product.

    side 'left' means f lives on g: vertex (i, j) of the product receives
    f[i] chips, giving degree deg(f) * |V(h)|; 'right' is the mirror.
    The result again has positive rank on the product.
    """
    if side not in ("left", "right"):
        raise ValidationError("side must be 'left' or 'right'")
    factor = g if side == "left" else h
    _check_divisor(factor, f)
    if not f.is_effective():
        raise ValidationError("replication needs an effective divisor")
    if not has_positive_rank(factor, f):
        raise ValidationError("replication needs a divisor of positive rank")
    index = ProductIndex(g.n, h.n)
    chips = [0] * (g.n * h.n)
    for i in range(g.n):
        for j in range(h.n):
            chips[index.flat(i, j)] = f[i] if side == "left" else f[j]
    return Divisor(tuple(chips))


def expected_product_gonality(g: Multigraph, h: Multigraph, gon_g: int, gon_h: int) -> int:
    """Replication upper bound: min(gon(g)*|V(h)|, gon(h)*|V(g)|)."""
    return min(gon_g * h.n, gon_h * g.n)


def conjecture_bound(g: Multigraph) -> int:
    """floor((genus + 3) / 2), the conjectured genus-based gonality bound,
    proven for nontrivial products."""
    return (g.genus() + 3) // 2


@dataclass(frozen=True)
class ProductReport:
    """Comparison of a product's gonality against its a-priori bounds.

    actual is an exact value when the search finished, else a (lower,
    upper) bracket.  gap_expected_minus_actual and equality_with_conjecture
    are only populated in the exact case.
    """

    expected: int
    actual: int | tuple[int, int]
    conjecture_bound: int
    gap_expected_minus_actual: int | None
    equality_with_conjecture: bool | None

    def is_exact(self) -> bool:
        return isinstance(self.actual, int)

    def to_json_obj(self) -> dict:
        return {
            "expected": self.expected,
            "actual": self.actual if self.is_exact() else list(self.actual),
            "conjecture_bound": self.conjecture_bound,
            "gap_expected_minus_actual": self.gap_expected_minus_actual,
            "equality_with_conjecture": self.equality_with_conjecture,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def product_report(
    g: Multigraph, h: Multigraph, opts: SearchOptions | None = None
) -> ProductReport:
    """Exact-or-bracketed gonality of the product of two small factors.

    The factors are searched exactly (they are assumed small); the product
    search is capped by the replication bound and genus+1.  If the product
    is out of budget the report brackets the answer, pulling the lower
    bound up with a strict bramble when both factors are trees.
    """
    opts = opts or SearchOptions()
    factor_opts = SearchOptions(
        threads=opts.threads, time_budget_s=opts.time_budget_s
    )
    gon_g = gonality(g, factor_opts).gonality
    gon_h = gonality(h, factor_opts).gonality
    expected = expected_product_gonality(g, h, gon_g, gon_h)
    product = cartesian_product(g, h)
    conj = conjecture_bound(product)
    try:
        cert = gonality(product, opts, upper_bound_hint=expected)
        actual: int | tuple[int, int] = cert.gonality
    except BudgetExceededError as e:
        lower = e.lower or 1
        if g.is_tree() and h.is_tree():
            bramble = tree_product_bramble(g, h)
            lower = max(lower, bramble_order(product, bramble))
        elif not product.is_tree():
            lower = max(lower, 2)  # gonality 1 happens exactly on trees
        upper = min(e.upper or expected, expected)
        actual = (lower, upper)
        if lower == upper:
            actual = lower
    if isinstance(actual, int):
        return ProductReport(
            expected=expected,
            actual=actual,
            conjecture_bound=conj,
            gap_expected_minus_actual=expected - actual,
            equality_with_conjecture=actual == conj,
        )
    return ProductReport(
        expected=expected,
        actual=actual,
        conjecture_bound=conj,
        gap_expected_minus_actual=None,
        equality_with_conjecture=None,
    )
