"""Divisors (chip configurations) and set-firing moves.

A divisor assigns an integer number of chips to each vertex.  Firing a set
S sends one chip along every edge leaving S; this is subtraction of the
Laplacian applied to the indicator of S, and generates the linear
equivalence relation used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

import numpy as np

from .errors import ValidationError
from .multigraph import Multigraph

__all__ = ["Divisor", "laplacian", "fire_set", "canonical_divisor"]

# API-level magnitude guard; keeps every intermediate inside int64 with
# plenty of headroom for firing arithmetic.
_CHIP_LIMIT = 1 << 40


@dataclass(frozen=True)
class Divisor:
    """Immutable chip vector indexed by vertex."""

    chips: tuple[int, ...]

    def __post_init__(self):
        chips = tuple(int(c) for c in self.chips)
        if not chips:
            raise ValidationError("divisor needs at least one vertex")
        if any(abs(c) > _CHIP_LIMIT for c in chips):
            raise ValidationError(f"chip counts must stay within +/-{_CHIP_LIMIT}")
        object.__setattr__(self, "chips", chips)

    @staticmethod
    def zero(n: int) -> "Divisor":
        return Divisor((0,) * n)

    @staticmethod
    def single(n: int, v: int, amount: int = 1) -> "Divisor":
        chips = [0] * n
        chips[v] = amount
        return Divisor(tuple(chips))

    def degree(self) -> int:
        return sum(self.chips)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.chips)

    def __len__(self) -> int:
        return len(self.chips)

    def __getitem__(self, v: int) -> int:
        return self.chips[v]

    def __add__(self, other: "Divisor") -> "Divisor":
        self._check_same_size(other)
        return Divisor(tuple(a + b for a, b in zip(self.chips, other.chips)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        self._check_same_size(other)
        return Divisor(tuple(a - b for a, b in zip(self.chips, other.chips)))

    def __neg__(self) -> "Divisor":
        return Divisor(tuple(-a for a in self.chips))

    def _check_same_size(self, other):
        if len(other.chips) != len(self.chips):
            raise ValidationError("divisors live on different vertex sets")

    def as_array(self) -> np.ndarray:
        return np.array(self.chips, dtype=np.int64)

    def to_json_obj(self) -> dict:
        return {"chips": list(self.chips)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @staticmethod
    def from_json_obj(obj) -> "Divisor":
        if not isinstance(obj, dict) or "chips" not in obj:
            raise ValidationError("divisor JSON needs a 'chips' field")
        return Divisor(tuple(obj["chips"]))

    @staticmethod
    def from_json(text: str) -> "Divisor":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON: {e}") from e
        return Divisor.from_json_obj(obj)


def _check_divisor(g: Multigraph, d: Divisor):
    if len(d) != g.n:
        raise ValidationError(
            f"divisor has {len(d)} entries but graph has {g.n} vertices"
        )


def laplacian(g: Multigraph) -> np.ndarray:
    """Graph Laplacian diag(valence) - multiplicity matrix."""
    return np.diag(g.valences()) - g.mult


def fire_set(g: Multigraph, d: Divisor, s, times: int = 1) -> Divisor:
    """Fire the vertex set s the given number of times (negative borrows).

    Each firing moves one chip along every edge from s to its complement;
    edges inside s cancel.  Degree is always preserved.
    """
    _check_divisor(g, d)
    s = set(s)
    for v in s:
        g._check_vertex(v)
    indicator = np.zeros(g.n, dtype=np.int64)
    indicator[list(s)] = 1
    delta = laplacian(g) @ indicator
    chips = d.as_array() - int(times) * delta
    return Divisor(tuple(int(c) for c in chips))


def canonical_divisor(g: Multigraph) -> Divisor:
    """valence(v) - 2 chips at every vertex; degree is 2*genus - 2."""
    return Divisor(tuple(int(x) - 2 for x in g.valences()))
