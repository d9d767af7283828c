"""
Shared fixtures.
"""

import logging

import pytest

from lipset.bundled import bundled_chain
from lipset.construction import LipFunction


@pytest.fixture
def unit_chain():
    return bundled_chain("unit")


@pytest.fixture
def two_step_chain():
    return bundled_chain("two_step")


@pytest.fixture
def unit_f(unit_chain):
    return LipFunction(unit_chain)


@pytest.fixture
def two_step_f(two_step_chain):
    return LipFunction(two_step_chain)


@pytest.fixture(autouse=True)
def restore_root_logging():
    """CLI runs reconfigure the root logger; put it back after each test."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
