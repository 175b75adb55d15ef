"""Moment map, symplectic form and preprojective relations on explicit matrices.

Matrices are numpy object arrays of ``Fraction``; a representation of the
double quiver carries one ``alpha[h] x alpha[t]`` matrix per arrow, with
arrow ``k`` paired to arrow ``k + m`` where ``m`` is the number of arrows
of the original quiver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .cyclotomic import Parameter
from .quiver import Quiver, QuiverError, double


class ShapeMismatch(QuiverError):
    pass


def as_matrix(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Exact matrix from nested lists of ints, Fractions or ``"p/q"`` strings."""
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return np.zeros(shape, dtype=object)
    m = np.array([[Fraction(x) for x in row] for row in rows], dtype=object)
    if m.ndim != 2:
        m = m.reshape(len(rows), -1)
    return m


def zeros(r: int, c: int) -> np.ndarray:
    m = np.empty((r, c), dtype=object)
    m.fill(Fraction(0))
    return m


def identity(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def _trace(a: np.ndarray) -> Fraction:
    return sum((a[i, i] for i in range(a.shape[0])), Fraction(0))


@dataclass(frozen=True, eq=False)
class Representation:
    """Matrices for every arrow of the double of ``base``."""

    base: Quiver
    alpha: tuple[int, ...]
    matrices: tuple

    def __post_init__(self):
        alpha = tuple(int(x) for x in self.alpha)
        if len(alpha) != len(self.base.vertices) or any(x < 0 for x in alpha):
            raise ShapeMismatch(f"alpha {alpha!r} does not fit a quiver with {len(self.base.vertices)} vertices")
        doubled = double(self.base)
        if len(self.matrices) != len(doubled.arrows):
            raise ShapeMismatch(f"{len(self.matrices)} matrices for {len(doubled.arrows)} arrows of the double quiver")
        mats = []
        for k, ((t, h), m) in enumerate(zip(doubled.arrows, self.matrices)):
            m = np.asarray(m, dtype=object)
            if m.size == 0:
                m = zeros(alpha[h], alpha[t])
            if m.shape != (alpha[h], alpha[t]):
                raise ShapeMismatch(f"arrow {k}: expected a {alpha[h]}x{alpha[t]} matrix, got {m.shape[0]}x{m.shape[1]}")
            mats.append(m)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "matrices", tuple(mats))

    @property
    def quiver(self) -> Quiver:
        return double(self.base)

    @classmethod
    def zero(cls, base: Quiver, alpha: Sequence[int]) -> "Representation":
        doubled = double(base)
        return cls(base, tuple(alpha), tuple(zeros(alpha[h], alpha[t]) for t, h in doubled.arrows))

    @classmethod
    def from_mapping(cls, base: Quiver, alpha: Sequence[int], matrices: Mapping[int, object]) -> "Representation":
        """Missing arrows get zero matrices."""
        doubled = double(base)
        mats = []
        for k, (t, h) in enumerate(doubled.arrows):
            if k in matrices:
                mats.append(as_matrix(matrices[k], (alpha[h], alpha[t])))
            else:
                mats.append(zeros(alpha[h], alpha[t]))
        extra = set(matrices) - set(range(len(doubled.arrows)))
        if extra:
            raise ShapeMismatch(f"no arrows with indices {sorted(extra)} in the double quiver")
        return cls(base, tuple(alpha), tuple(mats))

    def scaled(self, c) -> "Representation":
        return Representation(self.base, self.alpha, tuple(m * Fraction(c) for m in self.matrices))

    def basechange(self, g: Sequence[np.ndarray], g_inv: Sequence[np.ndarray]) -> "Representation":
        """``B_a -> g[h(a)] B_a g[t(a)]^-1`` for every arrow of the double quiver."""
        doubled = double(self.base)
        mats = tuple(
            _matmul(_matmul(g[h], m), g_inv[t]) for (t, h), m in zip(doubled.arrows, self.matrices)
        )
        return Representation(self.base, self.alpha, mats)


def moment_map(r: Representation) -> list[np.ndarray]:
    """Per-vertex values of the moment map."""
    m = len(r.base.arrows)
    out = [zeros(n, n) for n in r.alpha]
    for k, (t, h) in enumerate(r.base.arrows):
        b, b_star = r.matrices[k], r.matrices[k + m]
        out[h] = out[h] + _matmul(b, b_star)
        out[t] = out[t] - _matmul(b_star, b)
    total = sum((_trace(x) for x in out), Fraction(0))
    if total != 0:
        raise AssertionError(f"moment map has total trace {total}")
    return out


def check_preprojective(r: Representation, lam) -> tuple[bool, str]:
    """Whether the representation satisfies the deformed preprojective relation at ``lam``.

    Returns ``(verdict, reason)``; ``reason`` is ``"ok"`` on success.
    """
    lam = Parameter.of(lam)
    if len(lam) != len(r.alpha):
        raise ShapeMismatch(f"parameter of length {len(lam)} for {len(r.alpha)} vertices")
    if not lam.annihilates(r.alpha):
        return False, "lambda-dot-alpha nonzero"
    if not lam.is_rational():
        raise QuiverError("matrix checks need a rational parameter")
    for i, value in enumerate(moment_map(r)):
        target = identity(r.alpha[i]) * lam[i].to_fraction()
        if not np.array_equal(value, target):
            return False, f"moment map differs from lambda at vertex {r.base.vertices[i]}"
    return True, "ok"


def symplectic_form(r1: Representation, r2: Representation) -> Fraction:
    if r1.base != r2.base or r1.alpha != r2.alpha:
        raise ShapeMismatch("symplectic form needs representations of the same quiver and dimension vector")
    m = len(r1.base.arrows)
    total = Fraction(0)
    for k in range(m):
        total -= _trace(_matmul(r1.matrices[k + m], r2.matrices[k]))
        total += _trace(_matmul(r2.matrices[k + m], r1.matrices[k]))
    return total


def representation_from_json(data: dict, base: Quiver | None = None) -> Representation:
    """Read ``{"alpha": [...], "matrices": {"k": [["p/q", ...], ...]}}``.

    The base quiver comes from a ``"quiver"`` key unless given explicitly.
    """
    if base is None:
        if "quiver" not in data:
            raise QuiverError("representation JSON needs a 'quiver' entry")
        base = Quiver.from_json(data["quiver"])
    try:
        alpha = [int(x) for x in data["alpha"]]
        raw = {int(k): v for k, v in data.get("matrices", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"malformed representation JSON: {exc}") from None
    if len(alpha) != len(base.vertices):
        raise ShapeMismatch(f"alpha has {len(alpha)} entries for {len(base.vertices)} vertices")
    doubled = double(base)
    problems = []
    for k, rows in raw.items():
        if not 0 <= k < len(doubled.arrows):
            problems.append(f"arrow {k}: no such arrow in the double quiver")
            continue
        t, h = doubled.arrows[k]
        shape = (len(rows), len(rows[0]) if rows else 0)
        if alpha[h] == 0 or alpha[t] == 0:
            if any(len(row) for row in rows):
                problems.append(f"arrow {k}: expected a {alpha[h]}x{alpha[t]} matrix")
            continue
        if shape != (alpha[h], alpha[t]) or any(len(row) != alpha[t] for row in rows):
            problems.append(f"arrow {k}: expected a {alpha[h]}x{alpha[t]} matrix, got {shape[0]}x{shape[1]}")
    if problems:
        raise ShapeMismatch("; ".join(problems))
    return Representation.from_mapping(base, alpha, raw)


def matrix_to_json(m: np.ndarray) -> list[list[str]]:
    return [[str(Fraction(x)) for x in row] for row in m]
