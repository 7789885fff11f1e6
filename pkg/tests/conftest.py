import random

import pytest

from bracketdec.poly import Poly

_VAR_INDEX = {"x": 0, "y": 1, "z": 2}


def _rand_poly(rng: random.Random, variables=("x", "y"), max_degree=3,
               coeff_lo=-9, coeff_hi=9, max_terms=6, nonzero=False) -> Poly:
    """Random integer-coefficient polynomial in the given variables."""
    allowed = [_VAR_INDEX[v] for v in variables]
    lo_terms = 1 if nonzero else 0
    while True:
        terms = []
        for _ in range(rng.randint(lo_terms, max_terms)):
            mono = [0, 0, 0]
            for _ in range(rng.randint(0, max_degree)):
                mono[rng.choice(allowed)] += 1
            terms.append((tuple(mono), rng.randint(coeff_lo, coeff_hi)))
        p = Poly(terms)
        if not nonzero or not p.is_zero():
            return p


@pytest.fixture
def rand_poly():
    return _rand_poly
