"""Finite subgroups of SL(2, C), their McKay quivers and parameter maps.

Character tables are stored as static data over ``Q(zeta_N)`` with ``N``
the exponent of the group.  Every table is checked on construction:
row and column orthogonality, ``sum(delta_i**2) == |G|``, that ``delta``
is isotropic and orthogonal to every coordinate vector, and that the
tensor-with-the-natural-representation multiplicities reproduce the
edges of the stored extended Dynkin quiver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Sequence

from .cyclotomic import CycNumber, Parameter
from .quiver import Quiver, p_value, pairing_with_units, sym_form
from .roots import in_fundamental_region

INFINITY = "∞"


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GammaData:
    """A finite subgroup of SL(2, C) with its McKay data.

    ``characters[i][c]`` is the value of the i-th irreducible character on
    class ``c``; class 0 is the identity and irreducible 0 is trivial.
    ``natural`` is the character of the defining 2-dimensional representation.
    """

    kind: str
    order: int
    cyc_order: int
    class_sizes: tuple[int, ...]
    class_labels: tuple[str, ...]
    characters: tuple[tuple[CycNumber, ...], ...]
    natural: tuple[CycNumber, ...]
    quiver: Quiver
    delta: tuple[int, ...]
    extending_vertex: int = 0

    @property
    def nontrivial_classes(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.class_sizes)))

    def mckay_multiplicity(self, i: int, j: int) -> Fraction:
        """Multiplicity of irreducible ``i`` in ``S_j`` tensor the natural representation."""
        total = CycNumber(0)
        for c, size in enumerate(self.class_sizes):
            total = total + self.natural[c] * self.characters[j][c] * self.characters[i][c].conjugate() * size
        return (total / self.order).to_fraction()

    def edge_count(self, i: int, j: int) -> int:
        return sum(1 for arrow in self.quiver.arrows if arrow in ((i, j), (j, i)))

    def validate(self) -> None:
        n = len(self.characters)
        if n != len(self.class_sizes):
            raise GroupError(f"{self.kind}: {n} characters for {len(self.class_sizes)} classes")
        if sum(self.class_sizes) != self.order:
            raise GroupError(f"{self.kind}: class sizes sum to {sum(self.class_sizes)}, not {self.order}")
        if any(x != 1 for x in self.characters[0]):
            raise GroupError(f"{self.kind}: irreducible 0 is not the trivial character")
        for i in range(n):
            for j in range(n):
                s = sum(
                    (self.characters[i][c] * self.characters[j][c].conjugate() * size
                     for c, size in enumerate(self.class_sizes)),
                    CycNumber(0),
                )
                if s != (self.order if i == j else 0):
                    raise GroupError(f"{self.kind}: row orthogonality fails for characters {i}, {j}")
        for c in range(n):
            for d in range(n):
                s = sum((self.characters[i][c] * self.characters[i][d].conjugate() for i in range(n)), CycNumber(0))
                expected = Fraction(self.order, self.class_sizes[c]) if c == d else 0
                if s != expected:
                    raise GroupError(f"{self.kind}: column orthogonality fails for classes {c}, {d}")
        dims = tuple(int(row[0].to_fraction()) for row in self.characters)
        if dims != self.delta:
            raise GroupError(f"{self.kind}: delta {self.delta} differs from character degrees {dims}")
        if sum(d * d for d in self.delta) != self.order:
            raise GroupError(f"{self.kind}: sum of squared degrees is not |G|")
        if self.delta[self.extending_vertex] != 1:
            raise GroupError(f"{self.kind}: extending vertex has delta != 1")
        if any(pairing_with_units(self.quiver, self.delta)) or not in_fundamental_region(self.quiver, self.delta):
            raise GroupError(f"{self.kind}: delta is not the minimal imaginary root of the stored quiver")
        for i in range(n):
            for j in range(n):
                m = self.mckay_multiplicity(i, j)
                if m != self.edge_count(i, j):
                    raise GroupError(
                        f"{self.kind}: S_{i} occurs {m} times in S_{j} (x) L but the quiver has "
                        f"{self.edge_count(i, j)} edges between them"
                    )


@dataclass(frozen=True)
class CParam:
    """``c1`` and one value per nontrivial conjugacy class (in ``GammaData`` order)."""

    c1: object
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "c1", CycNumber.coerce(self.c1))
        object.__setattr__(self, "classes", tuple(CycNumber.coerce(x) for x in self.classes))

    @classmethod
    def of(cls, values: Sequence) -> "CParam":
        """From a flat sequence ``(c1, c_class1, c_class2, ...)``."""
        values = list(values)
        if not values:
            raise ValueError("c needs at least the c1 entry")
        return cls(values[0], tuple(values[1:]))


def _quiver(n: int, edges: Sequence[tuple[int, int]]) -> Quiver:
    # low index -> high index is acyclic
    names = [str(i) for i in range(n)]
    return Quiver.from_names(names, [(names[min(e)], names[max(e)]) for e in edges])


def _z(order: int, power: int) -> CycNumber:
    return CycNumber.zeta(order, power)


def _cyclic(ell: int) -> GammaData:
    if ell < 2:
        raise GroupError("cyclic:1 gives the Jordan quiver, which has a loop; use cyclic:ell with ell >= 2")
    chars = tuple(tuple(_z(ell, j * k) for j in range(ell)) for k in range(ell))
    natural = tuple(_z(ell, j) + _z(ell, -j) for j in range(ell))
    if ell == 2:
        edges = [(0, 1), (0, 1)]
    else:
        edges = [(k, k + 1) for k in range(ell - 1)] + [(0, ell - 1)]
    return GammaData(
        kind=f"cyclic:{ell}",
        order=ell,
        cyc_order=ell,
        class_sizes=(1,) * ell,
        class_labels=tuple("1" if j == 0 else f"g^{j}" for j in range(ell)),
        characters=chars,
        natural=natural,
        quiver=_quiver(ell, edges),
        delta=(1,) * ell,
    )


def _binary_dihedral(ell: int) -> GammaData:
    if ell < 2:
        raise GroupError("bindihedral:ell needs ell >= 2")
    n = 2 * ell * 4 // gcd(2 * ell, 4)
    z = n // (2 * ell)
    i4 = _z(n, n // 4)
    one = CycNumber(1)
    # classes: 1, a^ell, a^k (k = 1..ell-1), b, ab
    sizes = (1, 1) + (2,) * (ell - 1) + (ell, ell)
    labels = ("1", f"a^{ell}") + tuple(f"a^{k}" for k in range(1, ell)) + ("b", "ab")

    def row(on_a: Callable[[int], CycNumber], b: CycNumber, ab: CycNumber):
        return (on_a(0), on_a(ell)) + tuple(on_a(k) for k in range(1, ell)) + (b, ab)

    chars = [
        row(lambda k: one, one, one),
        row(lambda k: one, -one, -one),
    ]
    for h in range(1, ell):
        chars.append(row(lambda k, h=h: _z(n, z * h * k) + _z(n, -z * h * k), CycNumber(0), CycNumber(0)))
    sign = lambda k: one if k % 2 == 0 else -one
    if ell % 2 == 0:
        chars.append(row(sign, one, -one))
        chars.append(row(sign, -one, one))
    else:
        chars.append(row(sign, i4, -i4))
        chars.append(row(sign, -i4, i4))
    natural = chars[2]
    # D~_{ell+2}: 0,1 -- rho_1 -- ... -- rho_{ell-1} -- ell+1, ell+2
    edges = [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, ell)] + [(ell, ell + 1), (ell, ell + 2)]
    return GammaData(
        kind=f"bindihedral:{ell}",
        order=4 * ell,
        cyc_order=n,
        class_sizes=sizes,
        class_labels=labels,
        characters=tuple(chars),
        natural=natural,
        quiver=_quiver(ell + 3, edges),
        delta=(1, 1) + (2,) * (ell - 1) + (1, 1),
    )


def _table(rows) -> tuple[tuple[CycNumber, ...], ...]:
    return tuple(tuple(CycNumber.coerce(x) for x in r) for r in rows)


def _binary_tetrahedral() -> GammaData:
    w = _z(12, 4)
    w2 = w * w
    chars = _table([
        [1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, w, w2, w, w2],
        [1, 1, 1, w2, w, w2, w],
        [2, -2, 0, -1, -1, 1, 1],
        [2, -2, 0, -w, -w2, w, w2],
        [2, -2, 0, -w2, -w, w2, w],
        [3, 3, -1, 0, 0, 0, 0],
    ])
    return GammaData(
        kind="bintetra",
        order=24,
        cyc_order=12,
        class_sizes=(1, 1, 6, 4, 4, 4, 4),
        class_labels=("1", "-1", "4", "3a", "3b", "6a", "6b"),
        characters=chars,
        natural=chars[3],
        quiver=_quiver(7, [(0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)]),
        delta=(1, 1, 1, 2, 2, 2, 3),
    )


def _binary_octahedral() -> GammaData:
    r = _z(24, 3) + _z(24, -3)  # sqrt(2)
    chars = _table([
        [1, 1, 1, 1, 1, 1, 1, 1],
        [2, -2, 0, r, -r, -1, 1, 0],
        [3, 3, -1, 1, 1, 0, 0, -1],
        [4, -4, 0, 0, 0, 1, -1, 0],
        [3, 3, -1, -1, -1, 0, 0, 1],
        [2, -2, 0, -r, r, -1, 1, 0],
        [1, 1, 1, -1, -1, 1, 1, -1],
        [2, 2, 2, 0, 0, -1, -1, 0],
    ])
    return GammaData(
        kind="binocta",
        order=48,
        cyc_order=24,
        class_sizes=(1, 1, 6, 6, 6, 8, 8, 12),
        class_labels=("1", "-1", "4", "8a", "8b", "3", "6", "4'"),
        characters=chars,
        natural=chars[1],
        quiver=_quiver(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]),
        delta=(1, 2, 3, 4, 3, 2, 1, 2),
    )


def _binary_icosahedral() -> GammaData:
    c = _z(60, 12) + _z(60, -12)  # 2cos(2pi/5)
    phi = 1 + c
    psi = -c  # 1 - phi
    chars = _table([
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
        [2, -2, 0, 1, -1, phi, psi, -psi, -phi],
        [3, 3, -1, 0, 0, phi, psi, psi, phi],
        [4, -4, 0, -1, 1, 1, 1, -1, -1],
        [5, 5, 1, -1, -1, 0, 0, 0, 0],
        [6, -6, 0, 0, 0, -1, -1, 1, 1],
        [4, 4, 0, 1, 1, -1, -1, -1, -1],
        [2, -2, 0, 1, -1, psi, phi, -phi, -psi],
        [3, 3, -1, 0, 0, psi, phi, phi, psi],
    ])
    return GammaData(
        kind="binicosa",
        order=120,
        cyc_order=60,
        class_sizes=(1, 1, 30, 20, 20, 12, 12, 12, 12),
        class_labels=("1", "-1", "4", "6", "3", "10a", "10b", "5a", "5b"),
        characters=chars,
        natural=chars[1],
        quiver=_quiver(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]),
        delta=(1, 2, 3, 4, 5, 6, 4, 2, 3),
    )


def parse_kind(kind) -> tuple[str, int | None]:
    if isinstance(kind, tuple):
        name, arg = kind
        return str(name), (None if arg is None else int(arg))
    text = str(kind).strip().lower()
    name, _, arg = text.partition(":")
    if name in ("cyclic", "bindihedral"):
        try:
            return name, int(arg)
        except ValueError:
            raise GroupError(f"group kind {kind!r} needs an integer parameter, e.g. {name}:3") from None
    if name in ("bintetra", "binocta", "binicosa") and not arg:
        return name, None
    raise GroupError(f"unsupported group kind {kind!r}; use cyclic:l, bindihedral:l, bintetra, binocta or binicosa")


@lru_cache(maxsize=None)
def _build(name: str, arg: int | None) -> GammaData:
    if name == "cyclic":
        g = _cyclic(arg)
    elif name == "bindihedral":
        g = _binary_dihedral(arg)
    elif name == "bintetra":
        g = _binary_tetrahedral()
    elif name == "binocta":
        g = _binary_octahedral()
    else:
        g = _binary_icosahedral()
    g.validate()
    return g


def gamma_data(kind) -> GammaData:
    """Validated McKay data for ``"cyclic:l"``, ``"bindihedral:l"``, ``"bintetra"``, ``"binocta"`` or ``"binicosa"``."""
    return _build(*parse_kind(kind))


def cm_dim_vector(g: GammaData, n: int) -> tuple[int, ...]:
    """``e_inf + n delta`` on the framed quiver (infinity first)."""
    return (1,) + tuple(n * d for d in g.delta)


def frame(g: GammaData) -> tuple[Quiver, Callable[[int], tuple[int, ...]]]:
    """Framed quiver (new vertex first, one arrow to the extending vertex) and a dimension-vector builder."""
    q = g.quiver
    vertices = (INFINITY,) + q.vertices
    arrows = ((0, g.extending_vertex + 1),) + tuple((t + 1, h + 1) for t, h in q.arrows)
    return Quiver(vertices, arrows), lambda n: cm_dim_vector(g, n)


def lambda_of_c(g: GammaData, c) -> Parameter:
    if not isinstance(c, CParam):
        c = CParam.of(c)
    if len(c.classes) != len(g.nontrivial_classes):
        raise GroupError(
            f"{g.kind} has {len(g.nontrivial_classes)} nontrivial classes but c gives {len(c.classes)} values"
        )
    lam = []
    for k, row in enumerate(g.characters):
        value = CycNumber(0)
        if k == 0:
            value = value - c.c1 * Fraction(g.order, 2)
        for cls, cc in zip(g.nontrivial_classes, c.classes):
            value = value + cc * row[cls] * g.class_sizes[cls]
        lam.append(value)
    return Parameter(tuple(lam))


def lambda_prime(g: GammaData, lam, n: int) -> Parameter:
    lam = Parameter.of(lam)
    if len(lam) != len(g.delta):
        raise GroupError(f"parameter of length {len(lam)} for a quiver with {len(g.delta)} vertices")
    out = Parameter((-(lam.dot(g.delta) * n),) + lam.entries)
    if out.dot(cm_dim_vector(g, n)):
        raise AssertionError("lambda' does not annihilate e_inf + n delta")
    return out


def check_framing_lemma(g: GammaData, n: int) -> bool:
    """``p'(e_inf + n delta) == n`` on the framed quiver."""
    q, vec = frame(g)
    return p_value(q, vec(n)) == n


def mckay_info(g: GammaData) -> dict:
    return {
        "kind": g.kind,
        "order": g.order,
        "cyclotomic_order": g.cyc_order,
        "quiver": g.quiver.to_json(),
        "delta": list(g.delta),
        "extending_vertex": g.extending_vertex,
        "classes": [{"label": l, "size": s} for l, s in zip(g.class_labels, g.class_sizes)],
        "characters": [[str(x) for x in row] for row in g.characters],
        "delta_isotropic": sym_form(g.quiver, g.delta, g.delta) == 0,
        "validated": True,
    }
