import pytest
from hypothesis import strategies as st

from quiverleaves import Quiver
from quiverleaves.mckay import frame, gamma_data


def a1():
    return Quiver.from_names(["0", "1"], [("0", "1"), ("0", "1")])


def framed_a1():
    return Quiver.from_names(["∞", "0", "1"], [("∞", "0"), ("0", "1"), ("0", "1")])


def a2():
    return Quiver.from_names(["0", "1", "2"], [("0", "1"), ("1", "2"), ("0", "2")])


def jordan():
    return Quiver.from_names(["0"], [("0", "0")])


def framed(kind):
    return frame(gamma_data(kind))


@pytest.fixture
def A1():
    return a1()


@pytest.fixture
def FA1():
    return framed_a1()


@pytest.fixture
def A2():
    return a2()


@pytest.fixture
def J():
    return jordan()


@st.composite
def quivers(draw, max_vertices=4, max_arrows=5, loops=True):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    m = draw(st.integers(min_value=0, max_value=max_arrows))
    arrows = []
    for _ in range(m):
        t = draw(st.integers(0, n - 1))
        h = draw(st.integers(0, n - 1))
        if t == h and not loops:
            continue
        arrows.append((t, h))
    return Quiver.from_edges(n, arrows)
