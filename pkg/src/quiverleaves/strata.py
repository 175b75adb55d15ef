"""Smoothness and symplectic leaves of the reductions N(lambda, alpha).

Leaves are the representation-type strata.  Each decomposition of alpha
into Sigma_lambda splits into parts with ``p = 0`` (a unique simple, so a
single entry) and parts with ``p > 0``; a choice of partition of the
multiplicity of each ``p > 0`` part gives one representation type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import Parameter
from .quiver import Quiver, p_value
from .sigma import Decomposition, require_decompositions, alpha_norm, canonical_decomposition

Vector = tuple[int, ...]


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as nonincreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@dataclass(frozen=True)
class RepType:
    """``(k, beta)`` entries: ``k`` copies of a simple of dimension ``beta``."""

    entries: tuple[tuple[int, Vector], ...]

    @classmethod
    def of(cls, entries) -> "RepType":
        return cls(tuple(sorted(((int(k), tuple(b)) for k, b in entries), key=lambda e: (e[1], -e[0]))))

    def total(self) -> Vector:
        n = len(self.entries[0][1])
        return tuple(sum(k * b[i] for k, b in self.entries) for i in range(n))

    def to_json(self) -> list:
        return [[k, list(b)] for k, b in self.entries]


@dataclass(frozen=True)
class Stratum:
    rep_type: RepType
    dimension: int

    def to_json(self) -> dict:
        return {"rep_type": self.rep_type.to_json(), "dim": self.dimension}


def is_smooth(q: Quiver, lam, a: Sequence[int]):
    """``(smooth, witness)``.

    The witness is ``None`` when smooth, a second :class:`Decomposition`
    when the decomposition is not unique, and otherwise the offending
    ``(part, multiplicity)`` with ``p(part) > 0`` and multiplicity > 1.
    """
    found = require_decompositions(q, lam, a)
    canonical = canonical_decomposition(q, lam, a)
    if len(found) > 1:
        return False, next(d for d in found if d != canonical)
    for v, m in canonical.parts:
        if m > 1 and p_value(q, v) > 0:
            return False, (v, m)
    return True, None


def _types_of(q: Quiver, d: Decomposition):
    fixed = []
    moving = []
    for v, m in d.parts:
        if p_value(q, v) == 0:
            fixed.append((m, v))
        else:
            moving.append((v, m))

    def rec(k: int, chosen: list, dim: int):
        if k == len(moving):
            yield RepType.of(fixed + chosen), dim
            return
        v, m = moving[k]
        pv = p_value(q, v)
        for sigma in partitions(m):
            yield from rec(k + 1, chosen + [(part, v) for part in sigma], dim + 2 * len(sigma) * pv)

    yield from rec(0, [], 0)


def leaves(q: Quiver, lam, a: Sequence[int]) -> list[Stratum]:
    """All symplectic leaves, largest dimension first."""
    found = require_decompositions(q, lam, a)
    strata: dict[RepType, int] = {}
    for d in found:
        for rep_type, dim in _types_of(q, d):
            strata.setdefault(rep_type, dim)
    out = [Stratum(t, dim) for t, dim in strata.items()]
    out.sort(key=lambda s: (-s.dimension, s.rep_type.entries))
    # the open stratum is the generic type of the canonical decomposition
    canonical = canonical_decomposition(q, lam, a)
    generic = _generic_type(q, canonical)
    if out[0].rep_type != generic or (len(out) > 1 and out[1].dimension == out[0].dimension):
        raise AssertionError(f"the largest stratum is not the generic type of {canonical.parts!r}")
    return out


def _generic_type(q: Quiver, d: Decomposition) -> RepType:
    entries = []
    for v, m in d.parts:
        entries += [(m, v)] if p_value(q, v) == 0 else [(1, v)] * m
    return RepType.of(entries)


def variety_dimension(q: Quiver, lam, a: Sequence[int]) -> int:
    dim = 2 * alpha_norm(q, lam, a)
    top = max(s.dimension for s in leaves(q, lam, a))
    if top != dim:
        raise AssertionError(f"top leaf has dimension {top} but 2|alpha|_lambda = {dim}")
    return dim


def stratum_report(q: Quiver, lam, a: Sequence[int]) -> dict:
    """The stratum report as a JSON-ready dict."""
    lam = Parameter.of(lam)
    smooth, _ = is_smooth(q, lam, a)
    return {
        "alpha": list(a),
        "lambda": lam.to_json(),
        "smooth": smooth,
        "variety_dim": variety_dimension(q, lam, a),
        "leaves": [s.to_json() for s in leaves(q, lam, a)],
        "schema_version": 1,
    }
