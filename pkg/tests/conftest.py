import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from ckinv import ck


def make_corpus(count: int):
    """Seed-fixed random valid matrices with sizes cycling over 2..12."""
    return [ck.gen_random_irreducible(2 + i % 11, 0.15 + 0.08 * (i % 8),
                                      seed=i)
            for i in range(count)]


@pytest.fixture(scope="session")
def corpus500():
    return make_corpus(500)


@pytest.fixture(scope="session")
def reports500(corpus500):
    return [ck.invariants(a) for a in corpus500]
