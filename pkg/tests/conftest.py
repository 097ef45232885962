import itertools

import pytest

from eprkit.pauli import PauliWord
from eprkit.singlet import build_singlet


@pytest.fixture(scope="session")
def singlet():
    return build_singlet()


@pytest.fixture(scope="session")
def all_words():
    """All 16 two-site words, lexicographically ordered."""
    return [PauliWord(t) for t in itertools.product(range(4), repeat=2)]


@pytest.fixture(scope="session")
def nontrivial(all_words):
    return [w for w in all_words if not w.is_identity]
