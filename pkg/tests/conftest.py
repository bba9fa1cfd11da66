import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from braidkit.braid import BraidWord
from braidkit.skein import SkeinOracle

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def oracle():
    return SkeinOracle()


def random_word(rng: random.Random, max_strands=4, max_len=10, positive=False) -> BraidWord:
    n = rng.randint(1, max_strands)
    if n == 1:
        return BraidWord((), 1)
    length = rng.randint(0, max_len)
    letters = [rng.randint(1, n - 1) * (1 if positive else rng.choice((1, -1))) for _ in range(length)]
    return BraidWord(tuple(letters), n)


@st.composite
def braid_words(draw, max_strands=4, max_len=10, positive=False):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord((), 1)
    gen = st.integers(1, n - 1)
    if not positive:
        gen = st.tuples(gen, st.sampled_from((1, -1))).map(lambda p: p[0] * p[1])
    letters = draw(st.lists(gen, max_size=max_len))
    return BraidWord(tuple(letters), n)
