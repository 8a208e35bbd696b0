import random

import pytest

from lotvg.generators import GeneratorSpec, generate

KINDS = ("uniform", "normal", "exponential", "conway", "walk")


def series(kind, length, seed=1024):
    return generate(GeneratorSpec(kind, length, seed))


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=KINDS)
def kind(request):
    return request.param
