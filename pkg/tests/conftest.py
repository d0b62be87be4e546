"""
Shared fixtures: the worked example pair over N = {1, 2, 3}.
"""

import pytest

from secorder import create_app
from secorder.models.family import GroundSet, SetFamily


@pytest.fixture
def app():
    """Toolkit configured for testing."""
    return create_app('testing')


@pytest.fixture
def ground():
    return GroundSet.numbered(3)


@pytest.fixture
def family_x(ground):
    """X = ({3}, {1,2,3})."""
    return SetFamily.from_labels(ground, [['3'], ['1', '2', '3']])


@pytest.fixture
def family_y(ground):
    """Y = ({2,3}, {1,3})."""
    return SetFamily.from_labels(ground, [['2', '3'], ['1', '3']])
