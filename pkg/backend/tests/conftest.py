"""
Test fixtures: environment, embedded ideals and engines.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

os.environ["ENVIRONMENT"] = "testing"

from app.application.stability_service import EngineLimits, StabilityEngine
from app.infrastructure.instances.reference_cases import EX6, EX8, KM4
from tests.helpers import ideal


@pytest.fixture
def k3():
    """(x1x2, x1x3, x2x3): the triangle's graphic ideal, also U(2,3)."""
    return ideal(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))


@pytest.fixture
def two_blocks():
    """(x1, x2)(x3, x4): relation graph with two components."""
    return ideal(4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))


@pytest.fixture(scope="session")
def ex6():
    return EX6.ideal()


@pytest.fixture(scope="session")
def ex8():
    return EX8.ideal()


@pytest.fixture(scope="session")
def km4():
    return KM4.ideal()


@pytest.fixture
def engine():
    return StabilityEngine(EngineLimits())


@pytest.fixture
def elevated_engine():
    return StabilityEngine(EngineLimits(exact_depth_max_generators=500, exact_depth_max_lattice=50000))


@pytest.fixture
def instance_file(tmp_path):
    """Write instance text to a temporary file and return its path."""

    def write(text: str, name: str = "instance.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
