import pytest

from app.config import Precision
from app.rootsys.cartan import CartanData, TorusPoint, Weight, new_cartan


@pytest.fixture
def cd3() -> CartanData:
    return new_cartan(3)


@pytest.fixture
def precision() -> Precision:
    return Precision()


@pytest.fixture
def nu33() -> Weight:
    """m=3 에서 ν(h_{α_i}) = -3, Godement 조건 내부"""
    return Weight(3, 3)


@pytest.fixture
def a22() -> TorusPoint:
    return TorusPoint(2.0, 2.0)


@pytest.fixture(params=[3, 4, 5, 6, 7])
def cd_any(request) -> CartanData:
    return new_cartan(request.param)
