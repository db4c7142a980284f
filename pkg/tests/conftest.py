import random

import pytest
from hypothesis import settings

from fusiongb.coeffs import ParamRat
from fusiongb.current import sl2_truncated

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def sl2():
    return sl2_truncated()


def random_poly(A, rng: random.Random, max_deg=3, max_terms=4, coeffs=("1", "-2", "a", "a^2+1", "1/(a+1)", "3/2")):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * A.n
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(A.n)] += 1
        terms[tuple(e)] = ParamRat(rng.choice(coeffs))
    return A.poly(terms)
