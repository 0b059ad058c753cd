from __future__ import annotations

import pytest

from stratkit import Decomposition, FiniteSpace, fixture


@pytest.fixture
def sierpinski() -> FiniteSpace:
    return fixture("sierpinski").document.value


@pytest.fixture
def line_3() -> Decomposition:
    return fixture("line_3").document.value


@pytest.fixture
def pseudo_circle_4() -> Decomposition:
    return fixture("pseudo_circle_4").document.value


@pytest.fixture
def quadrant_4() -> Decomposition:
    return fixture("quadrant_4").document.value


@pytest.fixture
def chain_3() -> Decomposition:
    return fixture("chain_3").document.value


@pytest.fixture
def two_point_discrete() -> Decomposition:
    return fixture("two_point_discrete").document.value
