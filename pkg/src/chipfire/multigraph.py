"""Finite connected loopless multigraphs.

A multigraph is stored as a dense symmetric matrix of edge multiplicities
with a zero diagonal.  Instances are immutable values: the matrix is frozen
at construction and every operation returns a new object.  Vertices are the
integers 0..n-1 throughout; optional string labels are carried along for
display only and never affect structure.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

import numpy as np

from .errors import BudgetExceededError, ValidationError

__all__ = [
    "Multigraph",
    "ProductIndex",
    "build",
    "cartesian_product",
    "are_isomorphic",
]


class Multigraph:
    """Connected loopless multigraph on vertices 0..n-1."""

    __slots__ = ("_mult", "_n", "_labels", "_valences", "_dist_cache")

    def __init__(self, mult, labels=None):
        m = np.array(mult, dtype=np.int64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValidationError("multiplicity matrix must be square")
        n = m.shape[0]
        if n < 1:
            raise ValidationError("graph needs at least one vertex")
        if (m < 0).any():
            raise ValidationError("edge multiplicities must be nonnegative")
        if (np.diag(m) != 0).any():
            raise ValidationError("self-loops are not allowed")
        if (m != m.T).any():
            raise ValidationError("multiplicity matrix must be symmetric")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValidationError("label count must match vertex count")
        m.setflags(write=False)
        self._mult = m
        self._n = n
        self._labels = labels
        self._valences = m.sum(axis=1)
        self._valences.setflags(write=False)
        self._dist_cache = {}
        if not self._connected():
            raise ValidationError("graph must be connected")

    def _connected(self):
        seen = np.zeros(self._n, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = (self._mult[frontier].sum(axis=0) > 0) & ~seen
            seen |= nxt
            frontier = np.flatnonzero(nxt).tolist()
        return bool(seen.all())

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def mult(self) -> np.ndarray:
        return self._mult

    @property
    def labels(self):
        return self._labels

    def multiplicity(self, u: int, v: int) -> int:
        return int(self._mult[u, v])

    def valence(self, v: int) -> int:
        return int(self._valences[v])

    def valences(self) -> np.ndarray:
        return self._valences

    def num_edges(self) -> int:
        return int(self._mult.sum()) // 2

    def genus(self) -> int:
        """First Betti number |E| - |V| + 1 (zero exactly for trees)."""
        return self.num_edges() - self._n + 1

    def is_tree(self) -> bool:
        return self.genus() == 0

    def is_simple(self) -> bool:
        return bool((self._mult <= 1).all())

    def neighbors(self, v: int):
        return np.flatnonzero(self._mult[v]).tolist()

    def edges(self):
        """Yield (u, v, multiplicity) with u < v for every adjacent pair."""
        for u in range(self._n):
            for v in range(u + 1, self._n):
                m = int(self._mult[u, v])
                if m:
                    yield (u, v, m)

    def bfs_distances(self, source: int) -> np.ndarray:
        """Hop distances from source (edge multiplicities are irrelevant)."""
        self._check_vertex(source)
        cached = self._dist_cache.get(source)
        if cached is not None:
            return cached
        dist = np.full(self._n, -1, dtype=np.int64)
        dist[source] = 0
        frontier = [source]
        d = 0
        while frontier:
            d += 1
            nxt = (self._mult[frontier].sum(axis=0) > 0) & (dist < 0)
            dist[nxt] = d
            frontier = np.flatnonzero(nxt).tolist()
        dist.setflags(write=False)
        self._dist_cache[source] = dist
        return dist

    def _check_vertex(self, v: int):
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self._n):
            raise ValidationError(f"vertex {v!r} out of range for n={self._n}")

    # -- equality ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self._n == other._n
            and bool((self._mult == other._mult).all())
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((self._n, self._mult.tobytes()))

    def __repr__(self):
        return f"Multigraph(n={self._n}, edges={self.num_edges()})"

    # -- serialization -------------------------------------------------

    def to_json_obj(self) -> dict:
        obj = {
            "n": self._n,
            "edges": [[u, v, m] for u, v, m in self.edges()],
        }
        if self._labels is not None:
            obj["labels"] = list(self._labels)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @staticmethod
    def from_json_obj(obj) -> "Multigraph":
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise ValidationError("graph JSON needs 'n' and 'edges' fields")
        return build(obj["n"], obj["edges"], labels=obj.get("labels"))

    @staticmethod
    def from_json(text: str) -> "Multigraph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON: {e}") from e
        return Multigraph.from_json_obj(obj)

    def to_dot(self, name: str = "G") -> str:
        """GraphViz source; parallel edges are emitted as repeated lines."""
        lines = [f"graph {name} {{"]
        for v in range(self._n):
            label = self._labels[v] if self._labels else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for u, v, m in self.edges():
            lines.extend(f"  {u} -- {v};" for _ in range(m))
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(n, edges, labels=None) -> Multigraph:
    """Build a multigraph from an edge list of (u, v, multiplicity) triples.

    Pairs may not repeat, endpoints must satisfy 0 <= u < v < n, and every
    multiplicity must be a positive integer.  Plain (u, v) pairs are taken
    to have multiplicity 1.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValidationError("vertex count must be a positive integer")
    m = np.zeros((n, n), dtype=np.int64)
    seen = set()
    for item in edges:
        item = tuple(item)
        if len(item) == 2:
            u, v, k = item[0], item[1], 1
        elif len(item) == 3:
            u, v, k = item
        else:
            raise ValidationError(f"edge entry {item!r} must be (u, v[, mult])")
        if not (0 <= u < v < n):
            raise ValidationError(f"edge ({u}, {v}) needs 0 <= u < v < {n}")
        if not (isinstance(k, (int, np.integer)) and k >= 1):
            raise ValidationError(f"multiplicity for ({u}, {v}) must be >= 1")
        if (u, v) in seen:
            raise ValidationError(f"duplicate edge entry for pair ({u}, {v})")
        seen.add((u, v))
        m[u, v] = k
        m[v, u] = k
    return Multigraph(m, labels=labels)


@dataclass(frozen=True)
class ProductIndex:
    """Row-major vertex numbering for a product of an m-vertex and a
    k-vertex graph: (i, j) maps to i*k + j."""

    m: int
    k: int

    def flat(self, i: int, j: int) -> int:
        if not (0 <= i < self.m and 0 <= j < self.k):
            raise ValidationError(f"pair ({i}, {j}) out of range for {self}")
        return i * self.k + j

    def pair(self, idx: int) -> tuple[int, int]:
        if not (0 <= idx < self.m * self.k):
            raise ValidationError(f"index {idx} out of range for {self}")
        return divmod(idx, self.k)

    def __len__(self) -> int:
        return self.m * self.k


def cartesian_product(g: Multigraph, h: Multigraph) -> Multigraph:
    """Cartesian product: (i1,j1) ~ (i2,j2) iff equal in one coordinate and
    adjacent in the other, inheriting that factor's edge multiplicity."""
    a, b = g.mult, h.mult
    na, nb = g.n, h.n
    eye_a = np.eye(na, dtype=np.int64)
    eye_b = np.eye(nb, dtype=np.int64)
    mult = np.kron(a, eye_b) + np.kron(eye_a, b)
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = [f"({la},{lb})" for la in g.labels for lb in h.labels]
    return Multigraph(mult, labels=labels)


def are_isomorphic(g: Multigraph, h: Multigraph, max_vertices: int = 10) -> bool:
    """Exact isomorphism test by permutation backtracking.

    Candidate images are grouped by valence and pruned against the
    multiplicities into the already-mapped prefix.  Meant for the small
    graphs handled by the census; refuses anything larger than
    max_vertices.
    """
    if g.n > max_vertices or h.n > max_vertices:
        raise BudgetExceededError(
            f"isomorphism backtracking capped at {max_vertices} vertices"
        )
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    gv = sorted(g.valences().tolist())
    hv = sorted(h.valences().tolist())
    if gv != hv:
        return False
    gm, hm = g.mult, h.mult
    n = g.n
    # Sorted per-vertex multiplicity multisets must match too.
    if sorted(tuple(sorted(row)) for row in gm.tolist()) != sorted(
        tuple(sorted(row)) for row in hm.tolist()
    ):
        return False

    hv_arr = h.valences()
    gv_arr = g.valences()
    used = [False] * n
    mapping = [-1] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for w in range(n):
            if used[w] or hv_arr[w] != gv_arr[i]:
                continue
            if all(gm[i, j] == hm[w, mapping[j]] for j in range(i)):
                used[w] = True
                mapping[i] = w
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[i] = -1
        return False

    return extend(0)
