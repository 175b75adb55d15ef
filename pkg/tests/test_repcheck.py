from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import a1, a2, jordan
from quiverleaves import Representation, check_preprojective, moment_map, symplectic_form
from quiverleaves.quiver import double
from quiverleaves.repcheck import ShapeMismatch, as_matrix, identity, representation_from_json, zeros


def scalar_rep(q, values):
    return Representation(q, (1,) * len(q.vertices), tuple(as_matrix([[v]]) for v in values))


def as_lists(ms):
    return [[[Fraction(x) for x in row] for row in m] for m in ms]


def test_zero_representation(A1):
    r = Representation.zero(A1, (2, 1))
    assert all(not m.any() for m in moment_map(r))
    assert check_preprojective(r, (0, 0)) == (True, "ok")


def test_scalar_moment_map(A1):
    r = scalar_rep(A1, (1, 3, 2, 0))
    assert as_lists(moment_map(r)) == [[[-2]], [[2]]]
    assert check_preprojective(r, (-2, 2)) == (True, "ok")
    assert check_preprojective(r, (-1, 1))[0] is False
    assert check_preprojective(r, (1, 1)) == (False, "lambda-dot-alpha nonzero")


def test_jordan_commutator(J):
    x = as_matrix([[1, 2], [0, 3]])
    y = as_matrix([[0, 1], [1, 0]])
    r = Representation(J, (2,), (x, y))
    (mu,) = moment_map(r)
    assert np.array_equal(mu, x.dot(y) - y.dot(x))
    assert mu[0, 0] + mu[1, 1] == 0


def test_symplectic_examples(A1):
    b = scalar_rep(A1, (1, 0, 0, 0))
    c = scalar_rep(A1, (0, 0, 1, 0))
    assert symplectic_form(b, c) == 1
    assert symplectic_form(b, b) == 0
    assert symplectic_form(b.scaled(2), c) == 2


def test_shape_errors(A1):
    with pytest.raises(ShapeMismatch):
        Representation(A1, (1, 1), (as_matrix([[1]]),))
    with pytest.raises(ShapeMismatch):
        Representation.from_mapping(A1, (2, 1), {0: [[1]]})
    with pytest.raises(ShapeMismatch):
        Representation.from_mapping(A1, (1, 1), {7: [[1]]})
    with pytest.raises(ShapeMismatch):
        symplectic_form(Representation.zero(A1, (1, 1)), Representation.zero(A1, (1, 2)))


def test_json_reports_every_bad_arrow():
    data = {
        "quiver": a1().to_json(),
        "alpha": [1, 2],
        "matrices": {"0": [["1"]], "1": [["1"], ["2"]], "2": [["1"]]},
    }
    with pytest.raises(ShapeMismatch) as err:
        representation_from_json(data)
    text = str(err.value)
    assert "arrow 0" in text and "arrow 2" in text and "arrow 1" not in text


@st.composite
def rational_reps(draw, q, max_dim=2):
    alpha = draw(st.tuples(*[st.integers(0, max_dim)] * len(q.vertices)))
    entries = st.fractions(-3, 3, max_denominator=3)
    mats = []
    for t, h in double(q).arrows:
        mats.append(np.array([[draw(entries) for _ in range(alpha[t])] for _ in range(alpha[h])], dtype=object)
                    .reshape(alpha[h], alpha[t]))
    return Representation(q, alpha, tuple(mats))


@st.composite
def invertible(draw, n):
    while True:
        m = sympy.Matrix(n, n, lambda i, j: sympy.Rational(draw(st.integers(-3, 3)), draw(st.integers(1, 3))))
        if m.det() != 0:
            inv = m.inv()
            to = lambda mat: np.array([[Fraction(int(x.p), int(x.q)) for x in row] for row in mat.tolist()],
                                      dtype=object).reshape(n, n)
            return to(m), to(inv)


def conj(g, m, g_inv):
    if m.shape[0] == 0:
        return m
    return g.dot(m).dot(g_inv)


QUIVERS = [a1(), a2(), jordan()]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(QUIVERS), st.data())
def test_moment_map_is_equivariant(q, data):
    r = data.draw(rational_reps(q))
    gs = [data.draw(invertible(n)) if n else (zeros(0, 0), zeros(0, 0)) for n in r.alpha]
    moved = r.basechange([g for g, _ in gs], [gi for _, gi in gs])
    for (g, gi), before, after in zip(gs, moment_map(r), moment_map(moved)):
        assert np.array_equal(after, conj(g, before, gi))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(QUIVERS), st.data())
def test_total_trace_vanishes(q, data):
    r = data.draw(rational_reps(q))
    total = sum((m[i, i] for m in moment_map(r) for i in range(m.shape[0])), Fraction(0))
    assert total == 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(QUIVERS), st.data(), st.fractions(-3, 3, max_denominator=4))
def test_symplectic_form_is_antisymmetric_and_bilinear(q, data, c):
    r1 = data.draw(rational_reps(q))
    alpha = r1.alpha
    r2 = _random_like(data, r1)
    r3 = _random_like(data, r1)
    assert symplectic_form(r1, r2) == -symplectic_form(r2, r1)
    assert symplectic_form(r1, r1) == 0
    summed = Representation(q, alpha, tuple(x + c * y for x, y in zip(r2.matrices, r3.matrices)))
    assert symplectic_form(r1, summed) == symplectic_form(r1, r2) + c * symplectic_form(r1, r3)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(QUIVERS), st.data())
def test_symplectic_form_is_invariant(q, data):
    r1 = data.draw(rational_reps(q))
    r2 = _random_like(data, r1)
    gs = [data.draw(invertible(n)) if n else (zeros(0, 0), zeros(0, 0)) for n in r1.alpha]
    g, gi = [x for x, _ in gs], [y for _, y in gs]
    assert symplectic_form(r1.basechange(g, gi), r2.basechange(g, gi)) == symplectic_form(r1, r2)


def _random_like(data, r):
    entries = st.fractions(-3, 3, max_denominator=3)
    mats = []
    for m in r.matrices:
        rows, cols = m.shape
        mats.append(np.array([[data.draw(entries) for _ in range(cols)] for _ in range(rows)], dtype=object)
                    .reshape(rows, cols))
    return Representation(r.base, r.alpha, tuple(mats))


class Dual:
    """``a + b t`` with ``t**2 = 0``, exact."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    @staticmethod
    def lift(x):
        return x if isinstance(x, Dual) else Dual(x)

    def __add__(self, o):
        o = Dual.lift(o)
        return Dual(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = Dual.lift(o)
        return Dual(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return Dual.lift(o) - self

    def __mul__(self, o):
        o = Dual.lift(o)
        return Dual(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = Dual.lift(o)
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))


def _dual(m, part=None):
    out = np.empty(m.shape, dtype=object)
    for idx, x in np.ndenumerate(m):
        out[idx] = Dual(x) if part is None else Dual(0, x)
    return out


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([a1(), a2()]), st.data())
def test_infinitesimal_shear(q, data):
    # g(t) = 1 + tA with A strictly upper triangular, so g(t)^-1 = 1 - tA exactly
    r = data.draw(rational_reps(q))
    blocks = []
    for n in r.alpha:
        a = zeros(n, n)
        for i in range(n):
            for j in range(i + 1, n):
                a[i, j] = data.draw(st.fractions(-2, 2, max_denominator=2))
        blocks.append(a)
    g = [_dual(identity(n)) + _dual(a, "t") for n, a in zip(r.alpha, blocks)]
    gi = [_dual(identity(n)) - _dual(a, "t") for n, a in zip(r.alpha, blocks)]
    lifted = Representation(q, r.alpha, tuple(_dual(m) for m in r.matrices))
    moved = lifted.basechange(g, gi)
    base = moment_map(r)
    for mu_t, mu, a in zip(moment_map(moved), base, blocks):
        expected = a.dot(mu) - mu.dot(a) if mu.shape[0] else mu
        for idx in np.ndindex(mu.shape):
            assert Dual.lift(mu_t[idx]) == Dual(mu[idx], expected[idx])
