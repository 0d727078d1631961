"""Partial orientations and the divisors they induce.

A partial orientation assigns each parallel edge bundle a split into
forward copies, backward copies, and unoriented copies.  Its divisor puts
indegree-minus-one chips on every vertex.  Sourceless partial orientations
(every vertex has an incoming edge) characterize, among divisors of degree
at most genus-1, exactly the classes with an effective representative;
find_sourceless_rep searches for such a witness by backtracking over
bundle splits.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

from .catalog import complete
from .divisor import Divisor, _check_divisor
from .errors import BudgetExceededError, ValidationError
from .multigraph import Multigraph, ProductIndex, cartesian_product
from .reduction import q_reduce

__all__ = [
    "Orientation",
    "divisor_from_orientation",
    "is_sourceless",
    "find_sourceless_rep",
    "sourceless_divisor_classes",
    "rook_defeat_instance",
]

_MAX_EDGES = 14


@dataclass(frozen=True)
class Orientation:
    """Per-bundle orientation counts.

    rows holds (u, v, forward, backward, unoriented) with u < v; forward
    copies point u -> v.  Counts must sum to the bundle's multiplicity in
    the graph it is used with.
    """

    rows: tuple[tuple[int, int, int, int, int], ...]

    def to_json_obj(self) -> list:
        return [list(r) for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Orientation":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON: {e}") from e
        if not isinstance(obj, list):
            raise ValidationError("orientation JSON must be a list of rows")
        rows = []
        for row in obj:
            if len(row) != 5:
                raise ValidationError(
                    "orientation rows are [u, v, forward, backward, unoriented]"
                )
            rows.append(tuple(int(x) for x in row))
        return Orientation(tuple(rows))


def _check_orientation(g: Multigraph, o: Orientation):
    seen = set()
    for u, v, f, b, un in o.rows:
        if not (0 <= u < v < g.n):
            raise ValidationError(f"orientation row ({u}, {v}) out of range")
        if (u, v) in seen:
            raise ValidationError(f"duplicate orientation row for ({u}, {v})")
        seen.add((u, v))
        if min(f, b, un) < 0 or f + b + un != g.multiplicity(u, v):
            raise ValidationError(
                f"row ({u}, {v}) must split multiplicity "
                f"{g.multiplicity(u, v)} into nonnegative parts"
            )
    expected = {(u, v) for u, v, _ in g.edges()}
    if seen != expected:
        raise ValidationError("orientation must cover every adjacent pair exactly once")


def _indegrees(g: Multigraph, o: Orientation) -> list[int]:
    indeg = [0] * g.n
    for u, v, f, b, _ in o.rows:
        indeg[v] += f
        indeg[u] += b
    return indeg


def divisor_from_orientation(g: Multigraph, o: Orientation) -> Divisor:
    """indegree(v) - 1 chips at every vertex."""
    _check_orientation(g, o)
    return Divisor(tuple(d - 1 for d in _indegrees(g, o)))


def is_sourceless(g: Multigraph, o: Orientation) -> bool:
    """True when every vertex has at least one incoming edge copy."""
    _check_orientation(g, o)
    return all(d >= 1 for d in _indegrees(g, o))


def _iter_sourceless(g: Multigraph):
    """Backtrack over bundle splits, yielding (rows, indegrees) for every
    sourceless partial orientation.  Bundles are processed in edge order;
    a vertex whose remaining bundles cannot reach indegree 1 prunes the
    branch."""
    pairs = [(u, v, m) for u, v, m in g.edges()]
    n = g.n
    # remaining potential indegree per vertex after bundle i
    potential = [[0] * n for _ in range(len(pairs) + 1)]
    for i in range(len(pairs) - 1, -1, -1):
        u, v, m = pairs[i]
        row = potential[i + 1][:]
        row[u] += m
        row[v] += m
        potential[i] = row

    indeg = [0] * n
    rows: list[tuple[int, int, int, int, int]] = []

    def rec(i: int):
        if any(indeg[x] + potential[i][x] < 1 for x in range(n)):
            return
        if i == len(pairs):
            yield tuple(rows), tuple(indeg)
            return
        u, v, m = pairs[i]
        for f in range(m + 1):
            indeg[v] += f
            for b in range(m - f + 1):
                indeg[u] += b
                rows.append((u, v, f, b, m - f - b))
                yield from rec(i + 1)
                rows.pop()
                indeg[u] -= b
            indeg[v] -= f
        return

    yield from rec(0)


def find_sourceless_rep(
    g: Multigraph, d: Divisor, max_edges: int = _MAX_EDGES
) -> Orientation | None:
    """A sourceless partial orientation whose divisor is equivalent to d,
    or None when no such orientation exists.

    Only defined for deg(d) <= genus - 1, where existence is equivalent
    to d having an effective representative.  The search is exponential
    in the number of adjacent pairs, hence the edge budget.
    """
    _check_divisor(g, d)
    if d.degree() > g.genus() - 1:
        raise ValidationError("sourceless search needs deg(d) <= genus - 1")
    if g.num_edges() > max_edges:
        raise BudgetExceededError(
            f"sourceless orientation search capped at {max_edges} edges"
        )
    # any orientation divisor has degree #oriented - |V| >= 0 when sourceless
    if d.degree() < 0:
        return None
    target = q_reduce(g, d, 0)
    for rows, indeg in _iter_sourceless(g):
        cand = Divisor(tuple(x - 1 for x in indeg))
        if cand.degree() != d.degree():
            continue
        if q_reduce(g, cand, 0) == target:
            return Orientation(rows)
    return None


def sourceless_divisor_classes(g: Multigraph, max_edges: int = _MAX_EDGES):
    """All divisor classes realized by sourceless partial orientations,
    as a dict degree -> set of reduced chip tuples.  One sweep of the
    same search that backs find_sourceless_rep, for callers that need
    every class at once."""
    if g.num_edges() > max_edges:
        raise BudgetExceededError(
            f"sourceless orientation sweep capped at {max_edges} edges"
        )
    found: dict[int, set[tuple[int, ...]]] = {}
    for _, indeg in _iter_sourceless(g):
        cand = Divisor(tuple(x - 1 for x in indeg))
        reduced = q_reduce(g, cand, 0)
        found.setdefault(cand.degree(), set()).add(reduced.chips)
    return found


def rook_defeat_instance() -> tuple[Multigraph, Divisor]:
    """The 5x5 rook product with the degree-19 divisor that defeats every
    burning attempt: 6 chips on three vertices sharing a column plus a
    single chip elsewhere.  Each loaded vertex faces at most 6 burning
    edges (4 row neighbors and the 2 unloaded column neighbors), so no
    fire started at a chipless vertex ever consumes it."""
    g = cartesian_product(complete(5), complete(5))
    index = ProductIndex(5, 5)
    chips = [0] * 25
    for row in range(3):
        chips[index.flat(row, 0)] = 6
    chips[index.flat(3, 1)] = 1
    return g, Divisor(tuple(chips))
