import random
from pathlib import Path

import pytest

from isoschur import Quiver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def make_q4():
    # wild 4-vertex quiver: three arrows into 1, two more out of 4
    return Quiver.from_labelled_arrows(
        ["1", "2", "3", "4"],
        [("2", "1"), ("3", "1"), ("4", "1"), ("4", "2"), ("4", "3")],
    )


def make_k2():
    return Quiver.from_labelled_arrows(["1", "2"], [("1", "2"), ("1", "2")])


def make_k3():
    return Quiver.from_labelled_arrows(
        ["1", "2"], [("1", "2"), ("1", "2"), ("1", "2")]
    )


def make_a2():
    return Quiver.from_labelled_arrows(["1", "2"], [("1", "2")])


def make_a3():
    return Quiver.from_labelled_arrows(["1", "2", "3"], [("1", "2"), ("2", "3")])


def make_a21tilde():
    return Quiver.from_labelled_arrows(
        ["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")]
    )


def make_d4tilde():
    return Quiver.from_labelled_arrows(
        ["0", "1", "2", "3", "4"],
        [("1", "0"), ("2", "0"), ("3", "0"), ("4", "0")],
    )


def make_e6tilde():
    return Quiver.from_labelled_arrows(
        ["c", "a1", "a2", "b1", "b2", "d1", "d2"],
        [
            ("a1", "c"), ("a2", "a1"),
            ("b1", "c"), ("b2", "b1"),
            ("d1", "c"), ("d2", "d1"),
        ],
    )


CORPUS = {
    "q4": make_q4,
    "k2": make_k2,
    "k3": make_k3,
    "a2": make_a2,
    "a3": make_a3,
    "a21tilde": make_a21tilde,
    "d4tilde": make_d4tilde,
    "e6tilde": make_e6tilde,
}


@pytest.fixture
def q4():
    return make_q4()


@pytest.fixture
def k2():
    return make_k2()


@pytest.fixture
def a21tilde():
    return make_a21tilde()


@pytest.fixture
def d4tilde():
    return make_d4tilde()


@pytest.fixture
def e6tilde():
    return make_e6tilde()


@pytest.fixture
def corpus():
    return {name: make() for name, make in CORPUS.items()}


def random_quiver(rng, nmin=2, nmax=5, max_extra=3):
    """Random connected acyclic quiver: vertices 0..n-1, arrows only from
    lower to higher index, at least a spanning path of random edges."""
    n = rng.randint(nmin, nmax)
    arrows = []
    for h in range(1, n):
        t = rng.randrange(h)
        arrows.append((t, h))
    for _ in range(rng.randint(0, max_extra)):
        t = rng.randrange(n - 1)
        h = rng.randint(t + 1, n - 1)
        arrows.append((t, h))
    labels = [str(i) for i in range(n)]
    return Quiver(labels, arrows)


def random_vector(rng, n, hi=3, allow_zero=False):
    while True:
        v = tuple(rng.randint(0, hi) for _ in range(n))
        if allow_zero or any(v):
            return v


def seeded(seed):
    return random.Random(seed)
