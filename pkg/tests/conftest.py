import numpy as np
import pytest
from hypothesis import settings, strategies as st

from sgap import FiniteRelation, FiniteSetoid
from sgap.families import family_semigroup

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def relations(draw, min_n=1, max_n=5, n=None):
    size = draw(st.integers(min_n, max_n)) if n is None else n
    bits = draw(st.lists(st.booleans(), min_size=size * size, max_size=size * size))
    return FiniteRelation(np.array(bits, dtype=bool).reshape(size, size))


@st.composite
def relation_pairs(draw, count=2, max_n=5):
    n = draw(st.integers(1, max_n))
    return tuple(draw(relations(n=n)) for _ in range(count))


@pytest.fixture
def discrete3():
    return FiniteSetoid.discrete(3)


@pytest.fixture
def z2():
    return family_semigroup("cyclic:2")


@pytest.fixture
def z3():
    return family_semigroup("cyclic:3")


@pytest.fixture
def z4():
    return family_semigroup("cyclic:4")


@pytest.fixture
def leftzero2():
    return family_semigroup("leftzero:2")
