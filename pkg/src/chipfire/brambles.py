"""Brambles: families of connected, pairwise touching vertex sets.

Two elements touch when they share a vertex or an edge runs between them;
a bramble is strict when every pair actually shares a vertex.  The order
of a bramble is the size of a minimum hitting set, computed exactly by
branch and bound.  Strict brambles matter here because their order is a
lower bound for gonality, which is how tree products get pinned down
without an exhaustive divisor search.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

import numpy as np

from .errors import BudgetExceededError, ValidationError
from .multigraph import Multigraph, ProductIndex

__all__ = [
    "BrambleFamily",
    "classify",
    "order",
    "tree_product_bramble",
    "NOT_BRAMBLE",
    "BRAMBLE",
    "STRICT_BRAMBLE",
]

NOT_BRAMBLE = "not_bramble"
BRAMBLE = "bramble"
STRICT_BRAMBLE = "strict_bramble"

_MAX_ELEMENTS = 64
_MAX_VERTICES = 64


@dataclass(frozen=True)
class BrambleFamily:
    """An ordered family of vertex sets (order only affects display)."""

    elements: tuple[frozenset[int], ...]

    @staticmethod
    def from_lists(lists) -> "BrambleFamily":
        return BrambleFamily(tuple(frozenset(int(v) for v in xs) for xs in lists))

    def to_json_obj(self) -> list:
        return [sorted(e) for e in self.elements]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "BrambleFamily":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON: {e}") from e
        if not isinstance(obj, list):
            raise ValidationError("bramble JSON must be a list of vertex lists")
        return BrambleFamily.from_lists(obj)


def _validate_family(g: Multigraph, family: BrambleFamily):
    if not family.elements:
        raise ValidationError("family needs at least one element")
    for e in family.elements:
        for v in e:
            g._check_vertex(v)


def _is_connected_subset(g: Multigraph, vertices: frozenset[int]) -> bool:
    if not vertices:
        return False
    verts = sorted(vertices)
    sub = g.mult[np.ix_(verts, verts)]
    seen = np.zeros(len(verts), dtype=bool)
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = (sub[frontier].sum(axis=0) > 0) & ~seen
        seen |= nxt
        frontier = np.flatnonzero(nxt).tolist()
    return bool(seen.all())


def classify(g: Multigraph, family: BrambleFamily) -> str:
    """not_bramble, bramble, or strict_bramble.

    Elements must be nonempty and induce connected subgraphs; every pair
    must touch (strict: intersect)."""
    _validate_family(g, family)
    els = family.elements
    for e in els:
        if not e or not _is_connected_subset(g, e):
            return NOT_BRAMBLE
    strict = True
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            a, b = els[i], els[j]
            if a & b:
                continue
            strict = False
            la, lb = sorted(a), sorted(b)
            if g.mult[np.ix_(la, lb)].sum() == 0:
                return NOT_BRAMBLE
    return STRICT_BRAMBLE if strict else BRAMBLE


def order(g: Multigraph, family: BrambleFamily) -> int:
    """Exact minimum hitting set size over the family's elements.

    Branch and bound: branch on the unhit element with the fewest
    vertices, trying its vertices most-covering first, against a greedy
    incumbent.  Requires the family to be a bramble."""
    if classify(g, family) == NOT_BRAMBLE:
        raise ValidationError("order is only defined for brambles")
    elements = [frozenset(e) for e in family.elements]
    if len(elements) > _MAX_ELEMENTS or g.n > _MAX_VERTICES:
        raise BudgetExceededError(
            f"hitting-set search capped at {_MAX_ELEMENTS} elements "
            f"on {_MAX_VERTICES} vertices"
        )

    # dedupe: repeated elements do not change hitting sets
    elements = sorted(set(elements), key=sorted)
    vertex_pool = sorted(set().union(*elements))
    cover = {v: [i for i, e in enumerate(elements) if v in e] for v in vertex_pool}

    # greedy incumbent
    unhit = set(range(len(elements)))
    greedy = 0
    while unhit:
        v = max(vertex_pool, key=lambda u: len(unhit.intersection(cover[u])))
        unhit -= set(cover[v])
        greedy += 1

    best = greedy

    def dfs(unhit: frozenset[int], used: int):
        nonlocal best
        if not unhit:
            best = min(best, used)
            return
        if used + 1 >= best:
            return
        pivot = min(unhit, key=lambda i: (len(elements[i]), i))
        candidates = sorted(
            elements[pivot],
            key=lambda v: (-len(unhit.intersection(cover[v])), v),
        )
        for v in candidates:
            dfs(unhit - frozenset(cover[v]), used + 1)

    dfs(frozenset(range(len(elements))), 0)
    return best


def tree_product_bramble(t1: Multigraph, t2: Multigraph) -> BrambleFamily:
    """The cross family on the product of two trees.

    The element at (v, w) is v's copy of the second tree united with w's
    copy of the first; any two crosses intersect, so the family is a
    strict bramble, and its order is min(|V(t1)|, |V(t2)|)."""
    if not t1.is_tree() or not t2.is_tree():
        raise ValidationError("tree product bramble needs two trees")
    index = ProductIndex(t1.n, t2.n)
    elements = []
    for v in range(t1.n):
        for w in range(t2.n):
            cross = {index.flat(v, j) for j in range(t2.n)}
            cross.update(index.flat(i, w) for i in range(t1.n))
            elements.append(frozenset(cross))
    return BrambleFamily(tuple(elements))
