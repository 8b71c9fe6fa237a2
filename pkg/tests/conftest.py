import random

import pytest

from periodica import FieldSpec


@pytest.fixture
def Q():
    return FieldSpec.rationals()


@pytest.fixture
def F101():
    return FieldSpec.prime_field(101)


@pytest.fixture
def F5():
    return FieldSpec.prime_field(5)


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture(params=["Q", "Fp:101"])
def any_field(request):
    return FieldSpec.from_label(request.param)
