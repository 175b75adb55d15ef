"""Real and imaginary roots of a quiver.

Roots are classified by descent: a positive vector is pushed down by
simple reflections at loopfree vertices where its pairing is positive
until it becomes a coordinate vector (real), lands in the fundamental
region (imaginary), or leaves the positive cone / gets stuck (not a root).
Every step lowers the total dimension, so the loop terminates.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import product
from typing import Sequence

from .cyclotomic import Parameter
from .quiver import Quiver, QuiverError, as_vector, pairing_with_units, support_connected


class RootClass(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_ROOT = "not-root"


def in_fundamental_region(q: Quiver, a: Sequence[int]) -> bool:
    a = as_vector(q, a)
    if any(x < 0 for x in a) or not any(a):
        return False
    if not support_connected(q, a):
        return False
    return all(x <= 0 for x in pairing_with_units(q, a))


def classify_root(q: Quiver, a: Sequence[int]) -> RootClass:
    a = as_vector(q, a)
    if not any(a):
        raise QuiverError("classify_root is undefined on the zero vector")
    return _classify(q, a)


@lru_cache(maxsize=None)
def _class_table(q: Quiver) -> dict:
    return {}


def _classify(q: Quiver, a: tuple[int, ...]) -> RootClass:
    if any(x < 0 for x in a):
        if any(x > 0 for x in a):
            return RootClass.NOT_ROOT
        a = tuple(-x for x in a)
    table = _class_table(q)
    if a in table:
        return table[a]
    loopfree = q.loopfree_vertices
    # every vector on the descent path is in the same reflection orbit
    path = []
    while True:
        known = table.get(a)
        if known is not None:
            result = known
            break
        path.append(a)
        if sum(a) == 1:
            i = a.index(1)
            result = RootClass.REAL if q.is_loopfree(i) else RootClass.IMAGINARY
            break
        pairing = pairing_with_units(q, a)
        step = next((i for i in loopfree if pairing[i] > 0), None)
        if step is None:
            if all(x <= 0 for x in pairing) and support_connected(q, a):
                result = RootClass.IMAGINARY
            else:
                result = RootClass.NOT_ROOT
            break
        a = a[:step] + (a[step] - pairing[step],) + a[step + 1:]
        if a[step] < 0:
            result = RootClass.NOT_ROOT
            break
    for v in path:
        table[v] = result
    return result


def is_root(q: Quiver, a: Sequence[int]) -> bool:
    a = as_vector(q, a)
    return any(a) and _classify(q, a) is not RootClass.NOT_ROOT


def _box(bound: tuple[int, ...]):
    return product(*(range(b + 1) for b in bound))


def positive_roots_upto(q: Quiver, bound: Sequence[int]) -> list[tuple[int, ...]]:
    """All positive roots ``beta <= bound``, sorted lexicographically.

    On loopfree quivers the roots are grown from the coordinate vectors by
    adding one coordinate vector at a time (every positive non-simple root
    of a symmetric Kac-Moody root system has a simple root it can shed and
    stay a root).  Quivers with loops fall back to scanning the whole box.
    """
    bound = as_vector(q, bound)
    if any(b < 0 for b in bound):
        raise QuiverError(f"enumeration bound must be nonnegative, got {bound!r}")
    return list(_positive_roots(q, bound))


@lru_cache(maxsize=256)
def _positive_roots(q: Quiver, bound: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if len(q.loopfree_vertices) < len(q.vertices):
        found = [v for v in _box(bound) if any(v) and _classify(q, v) is not RootClass.NOT_ROOT]
        return tuple(sorted(found))
    n = len(bound)
    frontier = [q.unit(i) for i in range(n) if bound[i] > 0]
    seen = set(frontier)
    while frontier:
        grown = []
        for v in frontier:
            for i in range(n):
                if v[i] < bound[i]:
                    w = v[:i] + (v[i] + 1,) + v[i + 1:]
                    if w not in seen and _classify(q, w) is not RootClass.NOT_ROOT:
                        seen.add(w)
                        grown.append(w)
        frontier = grown
    return tuple(sorted(seen))


def classified_roots_upto(q: Quiver, bound: Sequence[int]) -> list[tuple[tuple[int, ...], RootClass]]:
    return [(v, _classify(q, v)) for v in positive_roots_upto(q, bound)]


def r_lambda_positive(q: Quiver, lam, bound: Sequence[int]) -> list[tuple[int, ...]]:
    """Positive roots ``beta <= bound`` with ``lam . beta == 0`` exactly."""
    lam = Parameter.of(lam)
    if len(lam) != len(q.vertices):
        raise QuiverError(f"parameter of length {len(lam)} for a quiver with {len(q.vertices)} vertices")
    return [v for v in positive_roots_upto(q, bound) if lam.annihilates(v)]
