from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverleaves import CycNumber, Parameter, p_value, sym_form
from quiverleaves.mckay import (
    GroupError,
    cm_dim_vector,
    frame,
    gamma_data,
    lambda_of_c,
    lambda_prime,
)
from quiverleaves.quiver import Quiver
from quiverleaves.roots import in_fundamental_region

KINDS = ["cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:7", "bindihedral:2", "bindihedral:3",
         "bindihedral:4", "bintetra", "binocta", "binicosa"]

# standard extended Dynkin delta vectors, sorted (independent of vertex order)
EXPECTED_DELTA = {
    "bindihedral:2": [1, 1, 1, 1, 2],
    "bindihedral:3": [1, 1, 1, 1, 2, 2],
    "bindihedral:4": [1, 1, 1, 1, 2, 2, 2],
    "bintetra": [1, 1, 1, 2, 2, 2, 3],
    "binocta": [1, 1, 2, 2, 2, 3, 3, 4],
    "binicosa": [1, 2, 2, 3, 3, 4, 4, 5, 6],
}


@pytest.mark.parametrize("kind", KINDS)
def test_tables_validate(kind):
    g = gamma_data(kind)
    g.validate()
    assert sum(d * d for d in g.delta) == g.order
    assert g.delta[0] == 1 and all(x == 1 for x in g.characters[0])
    assert in_fundamental_region(g.quiver, g.delta)
    assert sym_form(g.quiver, g.delta, g.delta) == 0
    # acyclic orientation
    assert all(t < h for t, h in g.quiver.arrows)
    if kind in EXPECTED_DELTA:
        assert sorted(g.delta) == EXPECTED_DELTA[kind]


def test_cyclic_two():
    g = gamma_data("cyclic:2")
    assert g.order == 2 and g.delta == (1, 1)
    assert len(g.quiver.vertices) == 2 and len(g.quiver.arrows) == 2
    assert g.characters[1][1] == -1


@pytest.mark.parametrize("ell", [3, 4, 5, 6])
def test_cyclic_characters(ell):
    g = gamma_data(f"cyclic:{ell}")
    assert g.delta == (1,) * ell
    for k in range(ell):
        for j in range(ell):
            assert g.characters[k][j] == CycNumber.zeta(ell, j * k)


@pytest.mark.parametrize("kind", ["cyclic:1", "cyclic:0", "bindihedral:1", "dihedral:3", "cyclic:x", "bintetra:2"])
def test_unsupported_kinds(kind):
    with pytest.raises(GroupError):
        gamma_data(kind)


def test_transcription_errors_are_caught():
    g = gamma_data("cyclic:3")
    bad = g.__class__(**{**g.__dict__, "characters": (g.characters[0], g.characters[2], g.characters[2])})
    with pytest.raises(GroupError):
        bad.validate()
    q = Quiver.from_edges(3, [(0, 1), (1, 2)])
    bad = g.__class__(**{**g.__dict__, "quiver": q})
    with pytest.raises(GroupError):
        bad.validate()


def test_frame_cyclic_two():
    q, vec = frame(gamma_data("cyclic:2"))
    assert q.vertices == ("∞", "0", "1")
    assert q.arrows == ((0, 1), (1, 2), (1, 2))
    assert vec(2) == (1, 2, 2)


@pytest.mark.parametrize("kind", KINDS)
def test_frame_shape_and_lemma(kind):
    g = gamma_data(kind)
    q, vec = frame(g)
    assert len(q.vertices) == len(g.quiver.vertices) + 1
    assert len(q.arrows) == len(g.quiver.arrows) + 1
    assert vec(1) == (1,) + g.delta
    for n in range(1, 6):
        assert p_value(q, vec(n)) == n
    # orientation of the framing arrow does not matter
    flipped = Quiver(q.vertices, ((q.arrows[0][1], 0),) + q.arrows[1:])
    assert all(p_value(flipped, vec(n)) == n for n in range(1, 6))


def test_lambda_examples():
    g = gamma_data("cyclic:2")
    c1, cg = Fraction(3, 2), Fraction(-5, 7)
    assert lambda_of_c(g, (c1, cg)) == Parameter((-c1 + cg, -cg))
    for n in (1, 2, 3):
        assert lambda_prime(g, lambda_of_c(g, (c1, cg)), n) == Parameter((n * c1, -c1 + cg, -cg))
    g3 = gamma_data("cyclic:3")
    assert lambda_of_c(g3, (0, 1, 1)) == Parameter((2, -1, -1))
    for kind in KINDS:
        g = gamma_data(kind)
        zero = lambda_of_c(g, (0,) * (1 + len(g.nontrivial_classes)))
        assert zero == Parameter.zeros(len(g.delta))
        assert lambda_prime(g, zero, 3) == Parameter.zeros(len(g.delta) + 1)


def test_lambda_length_mismatch():
    g = gamma_data("cyclic:3")
    with pytest.raises(GroupError):
        lambda_of_c(g, (1, 2))
    with pytest.raises(GroupError):
        lambda_prime(g, (1, 2), 1)


def test_cm_dim_vector():
    assert cm_dim_vector(gamma_data("cyclic:2"), 2) == (1, 2, 2)
    assert cm_dim_vector(gamma_data("cyclic:5"), 1) == (1,) * 6


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(KINDS), st.integers(1, 4), st.data())
def test_lambda_prime_annihilates_target(kind, n, data):
    g = gamma_data(kind)
    c = data.draw(st.lists(st.fractions(-3, 3, max_denominator=5), min_size=1 + len(g.nontrivial_classes),
                           max_size=1 + len(g.nontrivial_classes)))
    lam = lambda_prime(g, lambda_of_c(g, c), n)
    assert lam.annihilates(cm_dim_vector(g, n))
    # lambda . delta only sees c1
    assert lambda_of_c(g, c).dot(g.delta) == -Fraction(g.order, 2) * c[0]
