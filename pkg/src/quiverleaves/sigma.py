"""Simple dimension vectors and decompositions into them.

Two different pools of parts are used here and must not be confused:

* membership in Sigma_lambda compares ``p(a)`` against every splitting of
  ``a`` into two or more positive roots annihilated by ``lambda``;
* ``decompositions`` / ``alpha_norm`` / ``canonical_decomposition`` only
  use parts that are themselves in Sigma_lambda.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .cyclotomic import Parameter
from .quiver import Quiver, QuiverError, as_vector, p_value
from .roots import is_root, r_lambda_positive


class NotRepresentable(QuiverError):
    """The vector is not a sum of elements of Sigma_lambda."""


class UniquenessViolation(AssertionError):
    """The decomposition theorem failed on computed data; this is a bug."""


Vector = tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """A multiset of dimension vectors, stored as sorted ``(vector, multiplicity)`` pairs."""

    parts: tuple[tuple[Vector, int], ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]]) -> "Decomposition":
        counts = Counter(tuple(v) for v in vectors)
        return cls(tuple(sorted(counts.items())))

    def vectors(self) -> list[Vector]:
        """Parts with repetition, in sorted order."""
        return [v for v, m in self.parts for _ in range(m)]

    def total(self) -> Vector:
        n = len(self.parts[0][0]) if self.parts else 0
        return tuple(sum(m * v[i] for v, m in self.parts) for i in range(n))

    def p_sum(self, q: Quiver) -> int:
        return sum(m * p_value(q, v) for v, m in self.parts)

    def __len__(self):
        return sum(m for _, m in self.parts)

    def to_json(self) -> list:
        return [[list(v), m] for v, m in self.parts]


def _leq(b: Vector, a: Vector) -> bool:
    return all(x <= y for x, y in zip(b, a))


def _sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def iter_decompositions(a: Sequence[int], parts: Sequence[Vector]) -> Iterator[tuple[Vector, ...]]:
    """Every multiset of ``parts`` summing to ``a``, each as a nondecreasing tuple.

    No memoization: this is the plain brute-force enumerator.
    """
    parts = sorted(set(tuple(p) for p in parts))
    a = tuple(a)

    def rec(rest: Vector, start: int):
        if not any(rest):
            yield ()
            return
        for k in range(start, len(parts)):
            beta = parts[k]
            if _leq(beta, rest):
                for tail in rec(_sub(rest, beta), k):
                    yield (beta,) + tail

    yield from rec(a, 0)


class _Search:
    """Memo tables for one ``(quiver, lambda)`` pair."""

    def __init__(self, q: Quiver, lam: Parameter):
        self.q = q
        self.lam = lam
        self.best_sum: dict[Vector, int | None] = {}
        self.sigma: dict[Vector, bool] = {}

    def r_pool(self, a: Vector) -> list[Vector]:
        return r_lambda_positive(self.q, self.lam, a)

    def in_r_lambda(self, a: Vector) -> bool:
        return is_root(self.q, a) and self.lam.annihilates(a)

    def max_root_sum(self, v: Vector, pool: list[Vector]) -> int | None:
        """Largest sum of p over splittings of ``v`` into parts of R_lambda^+ (None if none)."""
        if v in self.best_sum:
            return self.best_sum[v]
        best = p_value(self.q, v) if self.in_r_lambda(v) else None
        split = self.max_proper_split(v, pool)
        if split is not None and (best is None or split > best):
            best = split
        self.best_sum[v] = best
        return best

    def max_proper_split(self, v: Vector, pool: list[Vector]) -> int | None:
        """Largest sum of p over splittings of ``v`` into two or more R_lambda^+ parts."""
        lead = next(i for i, x in enumerate(v) if x)
        best = None
        # some part must cover the leading coordinate of v
        for beta in pool:
            if beta[lead] and beta != v and _leq(beta, v):
                rest = self.max_root_sum(_sub(v, beta), pool)
                if rest is not None:
                    total = p_value(self.q, beta) + rest
                    if best is None or total > best:
                        best = total
        return best

    def in_sigma(self, a: Vector) -> bool:
        if a in self.sigma:
            return self.sigma[a]
        result = False
        if self.in_r_lambda(a):
            split = self.max_proper_split(a, self.r_pool(a))
            result = split is None or p_value(self.q, a) > split
        self.sigma[a] = result
        return result

    def sigma_pool(self, bound: Vector) -> list[Vector]:
        return [v for v in self.r_pool(bound) if self.in_sigma(v)]

    def decompositions(self, a: Vector) -> list[Decomposition]:
        pool = self.sigma_pool(a)
        memo: dict[tuple[Vector, int], list[tuple[int, ...]]] = {}

        def rec(rest: Vector, start: int) -> list[tuple[int, ...]]:
            if not any(rest):
                return [()]
            key = (rest, start)
            if key in memo:
                return memo[key]
            out = []
            for k in range(start, len(pool)):
                beta = pool[k]
                if _leq(beta, rest):
                    out.extend((k,) + tail for tail in rec(_sub(rest, beta), k))
            memo[key] = out
            return out

        found = {Decomposition.from_vectors(pool[k] for k in combo) for combo in rec(a, 0)}
        return sorted(found, key=lambda d: d.parts)


@lru_cache(maxsize=64)
def _search(q: Quiver, lam: Parameter) -> _Search:
    return _Search(q, lam)


def _prepare(q: Quiver, lam, a) -> tuple[_Search, Vector]:
    lam = Parameter.of(lam)
    if len(lam) != len(q.vertices):
        raise QuiverError(f"parameter of length {len(lam)} for a quiver with {len(q.vertices)} vertices")
    return _search(q, lam), as_vector(q, a)


def in_sigma_lambda(q: Quiver, lam, a: Sequence[int]) -> bool:
    search, a = _prepare(q, lam, a)
    if any(x < 0 for x in a) or not any(a):
        raise QuiverError(f"Sigma_lambda membership needs a positive vector, got {a!r}")
    return search.in_sigma(a)


def sigma_lambda_upto(q: Quiver, lam, bound: Sequence[int]) -> list[Vector]:
    search, bound = _prepare(q, lam, bound)
    if any(x < 0 for x in bound):
        raise QuiverError(f"enumeration bound must be nonnegative, got {bound!r}")
    return search.sigma_pool(bound)


def decompositions(q: Quiver, lam, a: Sequence[int]) -> list[Decomposition]:
    """All ways of writing ``a`` as a sum of elements of Sigma_lambda."""
    search, a = _prepare(q, lam, a)
    if any(x < 0 for x in a) or not any(a):
        raise QuiverError(f"decompositions need a nonzero nonnegative vector, got {a!r}")
    return search.decompositions(a)


def require_decompositions(q: Quiver, lam, a) -> list[Decomposition]:
    found = decompositions(q, lam, a)
    if not found:
        raise NotRepresentable(f"{tuple(a)!r} is not a sum of elements of Sigma_lambda")
    return found


def alpha_norm(q: Quiver, lam, a: Sequence[int]) -> int:
    return max(d.p_sum(q) for d in require_decompositions(q, lam, a))


def refines(finer: Decomposition, coarser: Decomposition) -> bool:
    """True if the parts of ``finer`` can be grouped so each group sums to one part of ``coarser``."""
    pieces = sorted(finer.vectors(), key=sum, reverse=True)
    slots = tuple(sorted(coarser.vectors()))
    failed: set = set()

    def place(k: int, remaining: tuple[Vector, ...]) -> bool:
        if k == len(pieces):
            return not any(any(r) for r in remaining)
        key = (k, remaining)
        if key in failed:
            return False
        piece = pieces[k]
        tried = set()
        for j, slot in enumerate(remaining):
            if slot in tried or not _leq(piece, slot):
                continue
            tried.add(slot)
            nxt = remaining[:j] + (_sub(slot, piece),) + remaining[j + 1:]
            if place(k + 1, tuple(sorted(nxt))):
                return True
        failed.add(key)
        return False

    return place(0, slots)


def canonical_decomposition(q: Quiver, lam, a: Sequence[int]) -> Decomposition:
    """The unique decomposition maximizing the sum of p.

    Uniqueness and the refinement property are checked on every call and
    raise :class:`UniquenessViolation` if they fail.
    """
    found = require_decompositions(q, lam, a)
    top = max(d.p_sum(q) for d in found)
    winners = [d for d in found if d.p_sum(q) == top]
    if len(winners) != 1:
        raise UniquenessViolation(f"{len(winners)} decompositions of {tuple(a)!r} attain the maximum {top}")
    canonical = winners[0]
    for d in found:
        if not refines(d, canonical):
            raise UniquenessViolation(f"{d.parts!r} does not refine the canonical decomposition {canonical.parts!r}")
    return canonical
