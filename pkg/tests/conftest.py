from __future__ import annotations

import pytest

from tlfrobenius.scalars import make_params


@pytest.fixture(params=[1, 2, 3])
def params(request):
    return make_params(request.param)


@pytest.fixture
def P2():
    return make_params(2)
