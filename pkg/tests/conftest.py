import pytest

from twistknots.braids import BraidWord, braid_closure, torus_braid
from twistknots.diagram import OrientedLinkDiagram, parse_pd


@pytest.fixture
def trefoil_right():
    return braid_closure(torus_braid(3, 2))


@pytest.fixture
def trefoil_left():
    return braid_closure(torus_braid(3, 2)).mirror()


@pytest.fixture
def hopf_positive():
    return braid_closure(torus_braid(2, 2))


@pytest.fixture
def figure_eight():
    return braid_closure(BraidWord.from_ints(3, [1, -2, 1, -2]))


@pytest.fixture
def kink_negative():
    return parse_pd("X-[0,1,1,0]")


@pytest.fixture
def kink_positive():
    return parse_pd("X+[0,0,1,1]")


@pytest.fixture
def unknot_zero():
    return OrientedLinkDiagram.unknot()
