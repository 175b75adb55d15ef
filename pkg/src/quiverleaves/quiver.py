"""Quivers, dimension vectors and their bilinear forms.

A quiver stores its vertex names in a side table and refers to vertices by
dense indices ``0..n-1`` everywhere else, so dimension vectors are plain
tuples of integers aligned with ``Quiver.vertices``.  Parallel arrows are
separate entries of ``Quiver.arrows``; loops are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence


class QuiverError(ValueError):
    """Malformed quiver or malformed input vector."""


class DimensionMismatch(QuiverError):
    pass


class ReflectionUndefined(QuiverError):
    pass


@dataclass(frozen=True)
class Quiver:
    """A finite quiver.

    ``arrows`` holds ``(tail, head)`` index pairs.  Build instances with
    :meth:`from_names` when arrows are given by vertex name.
    """

    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        verts = tuple(self.vertices)
        arrows = tuple((int(t), int(h)) for t, h in self.arrows)
        if len(set(verts)) != len(verts):
            raise QuiverError(f"duplicate vertex identifiers in {verts!r}")
        n = len(verts)
        for t, h in arrows:
            if not (0 <= t < n and 0 <= h < n):
                raise QuiverError(f"arrow ({t}, {h}) has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def from_names(cls, vertices: Sequence[Hashable], arrows: Iterable[tuple]) -> "Quiver":
        verts = tuple(vertices)
        index = {v: k for k, v in enumerate(verts)}
        if len(index) != len(verts):
            raise QuiverError(f"duplicate vertex identifiers in {verts!r}")
        pairs = []
        for arrow in arrows:
            t, h = arrow
            if t not in index or h not in index:
                raise QuiverError(f"arrow {arrow!r} refers to an undeclared vertex")
            pairs.append((index[t], index[h]))
        return cls(verts, tuple(pairs))

    @classmethod
    def from_edges(cls, n: int, arrows: Iterable[tuple[int, int]]) -> "Quiver":
        """Quiver on vertices ``0..n-1``."""
        return cls(tuple(range(n)), tuple(arrows))

    def __len__(self):
        return len(self.vertices)

    def index(self, vertex: Hashable) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise QuiverError(f"unknown vertex {vertex!r}") from None

    @cached_property
    def loops(self) -> tuple[int, ...]:
        """Number of loops at each vertex."""
        counts = [0] * len(self.vertices)
        for t, h in self.arrows:
            if t == h:
                counts[t] += 1
        return tuple(counts)

    def is_loopfree(self, i: int) -> bool:
        return self.loops[i] == 0

    @cached_property
    def loopfree_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.loops) if k == 0)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of the symmetric form: ``cartan[i][j] == (e_i, e_j)``."""
        n = len(self.vertices)
        c = [[0] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = 2
        for t, h in self.arrows:
            c[t][h] -= 1
            c[h][t] -= 1
        return tuple(tuple(row) for row in c)

    def unit(self, i: int) -> tuple[int, ...]:
        """Coordinate vector at vertex index ``i``."""
        v = [0] * len(self.vertices)
        v[i] = 1
        return tuple(v)

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [[str(self.vertices[t]), str(self.vertices[h])] for t, h in self.arrows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        try:
            vertices = [str(v) for v in data["vertices"]]
            arrows = [(str(t), str(h)) for t, h in data["arrows"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise QuiverError(f"quiver JSON must have 'vertices' and 'arrows' lists: {exc}") from None
        return cls.from_names(vertices, arrows)


def as_vector(q: Quiver, a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if len(a) != len(q.vertices):
        raise DimensionMismatch(f"vector of length {len(a)} for a quiver with {len(q.vertices)} vertices")
    return a


def double(q: Quiver) -> Quiver:
    """The double quiver.  Arrow ``k`` and arrow ``k + len(q.arrows)`` are paired."""
    reversed_arrows = tuple((h, t) for t, h in q.arrows)
    return Quiver(q.vertices, q.arrows + reversed_arrows)


def ringel_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    a, b = as_vector(q, a), as_vector(q, b)
    total = sum(x * y for x, y in zip(a, b))
    for t, h in q.arrows:
        total -= a[t] * b[h]
    return total


def sym_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    a, b = as_vector(q, a), as_vector(q, b)
    total = 0
    for i, row in enumerate(q.cartan):
        if a[i]:
            total += a[i] * sum(c * y for c, y in zip(row, b))
    return total


def pairing_with_units(q: Quiver, a: Sequence[int]) -> tuple[int, ...]:
    """``((a, e_i))_i``: the symmetric form against every coordinate vector."""
    return tuple(sum(c * x for c, x in zip(row, a)) for row in q.cartan)


def p_value(q: Quiver, a: Sequence[int]) -> int:
    """``1 - (a, a) / 2``."""
    s = sym_form(q, a, a)
    if s % 2:
        raise AssertionError(f"(a, a) = {s} is odd for integer vector {a!r}")
    return 1 - s // 2


def reflect(q: Quiver, i: int, a: Sequence[int]) -> tuple[int, ...]:
    """Simple reflection at a loopfree vertex."""
    a = as_vector(q, a)
    if not q.is_loopfree(i):
        raise ReflectionUndefined(f"vertex {q.vertices[i]!r} carries a loop")
    out = list(a)
    out[i] -= sum(c * x for c, x in zip(q.cartan[i], a))
    return tuple(out)


def support_connected(q: Quiver, a: Sequence[int]) -> bool:
    a = as_vector(q, a)
    if any(x < 0 for x in a):
        raise QuiverError(f"support_connected expects a nonnegative vector, got {a!r}")
    support = {i for i, x in enumerate(a) if x}
    if not support:
        return False
    adjacent = {i: set() for i in support}
    for t, h in q.arrows:
        if t in support and h in support:
            adjacent[t].add(h)
            adjacent[h].add(t)
    start = next(iter(support))
    seen = {start}
    stack = [start]
    while stack:
        for j in adjacent[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return seen == support


def dot(lam: Sequence, a: Sequence[int]):
    """``lam . a`` for any coefficient type supporting ``*`` by int and ``+``."""
    total = 0
    for x, y in zip(lam, a):
        if y:
            total = total + x * y
    return total
