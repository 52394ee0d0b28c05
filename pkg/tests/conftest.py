import os
import sys

import pytest

# Add parent directory to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from brauer.presentation import make_koszul, make_star, present

GRAPHS_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'graphs'))


@pytest.fixture(scope="module")
def w222():
    """W_{2,(2,2,2)}: one exceptional edge, non-periodic simples S(0) and S(1)"""
    return present(make_star(2, (2, 2, 2)))


@pytest.fixture(scope="module")
def w23():
    """W_{2,(2,3)}: the exceptional-section case i = 1"""
    return present(make_star(2, (2, 3)))


@pytest.fixture(scope="module")
def koszul():
    return make_koszul(2, 2, 3)


@pytest.fixture
def graph_path():
    return lambda name: os.path.join(GRAPHS_DIR, name)
