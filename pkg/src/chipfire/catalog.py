"""Named graph families and a census of small genus-1 multigraphs.

Every constructor documents its canonical vertex numbering, since divisors
and product indices refer to vertices by position.  The census enumerates
connected genus-1 multigraphs up to isomorphism by welding rooted forests
onto a cycle (a doubled edge counts as the 2-cycle), which is exhaustive
because a genus-1 graph has exactly one independent cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .multigraph import Multigraph, are_isomorphic, build

__all__ = [
    "FamilySpec",
    "make",
    "path",
    "cycle",
    "complete",
    "star",
    "banana",
    "double_banana",
    "banana_loop",
    "tadpole",
    "bull",
    "cricket",
    "chain",
    "k4_tail",
    "genus1_census",
    "census_entry_name",
    "small_instances",
]


def path(n: int) -> Multigraph:
    """Path on n >= 1 vertices, numbered along the path."""
    if n < 1:
        raise ValidationError("path needs at least one vertex")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    """Cycle on n >= 2 vertices, numbered around the cycle; n = 2 is the
    doubled edge (the smallest non-simple cycle)."""
    if n < 2:
        raise ValidationError("cycle needs at least two vertices")
    if n == 2:
        return banana(2)
    return build(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Multigraph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValidationError("complete graph needs at least one vertex")
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Multigraph:
    """Star on n >= 2 vertices: center 0, leaves 1..n-1."""
    if n < 2:
        raise ValidationError("star needs at least two vertices")
    return build(n, [(0, v) for v in range(1, n)])


def banana(n: int) -> Multigraph:
    """Two vertices joined by n >= 2 parallel edges."""
    if n < 2:
        raise ValidationError("banana needs at least two parallel edges")
    return build(2, [(0, 1, n)])


def double_banana(m: int, n: int) -> Multigraph:
    """Three vertices in a row: m edges between 0 and 1, n between 1 and 2.

    Requires m, n >= 1 with at least one of them >= 2 (otherwise it is
    just a path)."""
    if m < 1 or n < 1 or max(m, n) < 2:
        raise ValidationError("double banana needs m, n >= 1 with max >= 2")
    return build(3, [(0, 1, m), (1, 2, n)])


def banana_loop(l: int, m: int, n: int) -> Multigraph:
    """Triangle with fattened sides: l edges between 0 and 1, m between
    1 and 2, n between 0 and 2.  All counts >= 1."""
    if min(l, m, n) < 1:
        raise ValidationError("banana loop needs every side at least once")
    return build(3, [(0, 1, l), (1, 2, m), (0, 2, n)])


def tadpole(c: int, t: int) -> Multigraph:
    """Cycle on c >= 2 vertices with a t-vertex path (t >= 1) hanging off
    cycle vertex 0; path vertices are c..c+t-1 outward."""
    if c < 2 or t < 1:
        raise ValidationError("tadpole needs cycle length >= 2 and tail >= 1")
    edges = []
    if c == 2:
        edges.append((0, 1, 2))
    else:
        edges.extend((i, i + 1, 1) for i in range(c - 1))
        edges.append((0, c - 1, 1))
    edges.append((0, c, 1))
    edges.extend((c + i, c + i + 1, 1) for i in range(t - 1))
    return build(c + t, edges)


def bull() -> Multigraph:
    """Triangle 0,1,2 with pendant vertices 3 on 1 and 4 on 2."""
    return build(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def cricket() -> Multigraph:
    """Triangle 0,1,2 with both pendant vertices 3 and 4 on vertex 0."""
    return build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])


def chain(n: int) -> Multigraph:
    """n+1 vertices in a row; each of the first n-1 consecutive pairs is
    joined by n parallel edges and the last pair by a single edge.

    chain(2) is the (2,1) double banana."""
    if n < 2:
        raise ValidationError("chain needs n >= 2")
    edges = [(i, i + 1, n) for i in range(n - 1)]
    edges.append((n - 1, n, 1))
    return build(n + 1, edges)


def k4_tail() -> Multigraph:
    """Complete graph on vertices 0..3 with a four-vertex path 4..7
    attached to vertex 3."""
    edges = [(u, v, 1) for u in range(4) for v in range(u + 1, 4)]
    edges += [(3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1)]
    return build(8, edges)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "banana": (banana, 1),
    "double_banana": (double_banana, 2),
    "banana_loop": (banana_loop, 3),
    "tadpole": (tadpole, 2),
    "bull": (bull, 0),
    "cricket": (cricket, 0),
    "chain": (chain, 1),
    "k4_tail": (k4_tail, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters, e.g. ('tadpole', (3, 1))."""

    family: str
    params: tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(str(p) for p in self.params)}"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Inverse of str(): 'tadpole:3,1' or a bare name like 'bull'."""
        name, _, tail = text.strip().partition(":")
        if not name:
            raise ValidationError(f"empty family name in {text!r}")
        if not tail:
            return cls(name)
        try:
            params = tuple(int(p) for p in tail.split(","))
        except ValueError:
            raise ValidationError(
                f"parameters in {text!r} must be integers"
            ) from None
        return cls(name, params)


def make(spec: FamilySpec) -> Multigraph:
    """Instantiate a family spec."""
    if spec.family not in _FAMILIES:
        raise ValidationError(f"unknown family {spec.family!r}")
    ctor, arity = _FAMILIES[spec.family]
    if len(spec.params) != arity:
        raise ValidationError(
            f"family {spec.family!r} takes {arity} parameter(s), "
            f"got {len(spec.params)}"
        )
    return ctor(*spec.params)


# ---------------------------------------------------------------------
# genus-1 census


def _attachment_profiles(cycle_len: int, extra: int):
    """All ways to hang `extra` tree vertices off an existing graph prefix:
    vertex cycle_len+i picks a parent among everything built before it."""
    if extra == 0:
        yield ()
        return
    total = cycle_len + extra

    def rec(i, chosen):
        if i == total:
            yield tuple(chosen)
            return
        for parent in range(i):
            chosen.append(parent)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(cycle_len, [])


def genus1_census(vmin: int, vmax: int) -> list[Multigraph]:
    """Connected genus-1 multigraphs with vmin <= |V| <= vmax, one per
    isomorphism class, in deterministic construction order.

    Each graph is a cycle (length >= 2, where length 2 means a doubled
    edge) with rooted trees attached, so enumerating cycle lengths and
    parent assignments covers everything; duplicates are removed with the
    exact isomorphism test.
    """
    if vmin < 2 or vmax < vmin:
        raise ValidationError("census needs 2 <= vmin <= vmax")
    found: list[Multigraph] = []
    for n in range(vmin, vmax + 1):
        for c in range(2, n + 1):
            core = [(0, 1, 2)] if c == 2 else (
                [(i, i + 1, 1) for i in range(c - 1)] + [(0, c - 1, 1)]
            )
            for parents in _attachment_profiles(c, n - c):
                edges = list(core)
                for i, p in enumerate(parents):
                    edges.append((p, c + i, 1))
                g = build(n, edges)
                if not any(are_isomorphic(g, h) for h in found if h.n == n):
                    found.append(g)
    return found


def census_entry_name(g: Multigraph, index: int) -> str:
    """Stable display name for a census member."""
    kind = "simple" if g.is_simple() else "nonsimple"
    return f"genus1[{index}]({kind}, n={g.n})"


def small_instances(max_vertices: int = 8, max_edges: int = 28):
    """Deterministic list of (name, graph) pairs used by the verification
    suites: every family at every parameter choice within the size caps."""
    out = []

    def add(spec: FamilySpec):
        g = make(spec)
        if g.n <= max_vertices and g.num_edges() <= max_edges:
            out.append((str(spec), g))

    for n in range(2, max_vertices + 1):
        add(FamilySpec("path", (n,)))
    for n in range(3, max_vertices + 1):
        add(FamilySpec("star", (n,)))
    for n in range(3, max_vertices + 1):
        add(FamilySpec("cycle", (n,)))
    for n in range(3, max_vertices + 1):
        add(FamilySpec("complete", (n,)))
    for n in range(2, 11):
        add(FamilySpec("banana", (n,)))
    for m in range(1, 9):
        for n in range(m, 10 - m):
            if max(m, n) >= 2:
                add(FamilySpec("double_banana", (m, n)))
    for l in range(1, 9):
        for m in range(l, 9):
            for n in range(m, 9):
                if l + m + n <= 10 and n >= 2:
                    add(FamilySpec("banana_loop", (l, m, n)))
    for c in range(2, max_vertices):
        for t in range(1, max_vertices - c + 1):
            add(FamilySpec("tadpole", (c, t)))
    add(FamilySpec("bull"))
    add(FamilySpec("cricket"))
    for n in range(2, 5):
        add(FamilySpec("chain", (n,)))
    add(FamilySpec("k4_tail"))
    return out
