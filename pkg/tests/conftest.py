import random

import pytest
from hypothesis import strategies as st

from mcftiling import PartialQuotients
from mcftiling.errors import InvalidMixedConditions
from mcftiling.tiling import HeightConditions, check_mixed


def random_quotients(rng, n, lo=1, hi=4):
    a = [rng.randint(lo, hi) for _ in range(n + 1)]
    b = [rng.randint(lo, hi) for _ in range(n + 1)]
    c = [1] + [rng.randint(lo, hi) for _ in range(n)]
    return PartialQuotients(a, b, c)


def random_plain(rng, n, hi=3, wrap_bar=0):
    return HeightConditions(
        [rng.randint(1, hi) for _ in range(n + 1)],
        [rng.randint(0, hi) for _ in range(n + 1)],
        [rng.randint(0, hi) for _ in range(n + 1)],
        wrap_bar,
    )


def random_mixed(rng, n, bound=3):
    """Rejection-sample signed conditions that satisfy the mixed side conditions."""
    while True:
        h = HeightConditions(
            [rng.randint(1, bound) for _ in range(n + 1)],
            [rng.randint(-bound, bound) for _ in range(n + 1)],
            [rng.randint(-bound, bound) for _ in range(n + 1)],
        )
        try:
            check_mixed(h)
        except InvalidMixedConditions:
            continue
        return h


@pytest.fixture
def rng():
    return random.Random(20261016)


@st.composite
def quotients(draw, max_n=12, lo=-3, hi=5):
    n = draw(st.integers(0, max_n))
    ints = st.lists(st.integers(lo, hi), min_size=n + 1, max_size=n + 1)
    a, b, c = draw(ints), draw(ints), draw(ints)
    return PartialQuotients(a, b, [1] + c[1:])


@st.composite
def plain_conditions(draw, max_n=6, hi=3):
    n = draw(st.integers(0, max_n))
    a = draw(st.lists(st.integers(1, hi), min_size=n + 1, max_size=n + 1))
    b = draw(st.lists(st.integers(0, hi), min_size=n + 1, max_size=n + 1))
    c = draw(st.lists(st.integers(0, hi), min_size=n + 1, max_size=n + 1))
    return HeightConditions(a, b, c)
