import pytest
from hypothesis import settings

from grothkit.perm import Permutation

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def P():
    return Permutation.parse
