from __future__ import annotations

import json
from pathlib import Path

import pytest

from carc.graph import builtin_example

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fig1():
    return builtin_example("fig1")


@pytest.fixture(scope="session")
def fig2():
    return builtin_example("fig2")


@pytest.fixture(scope="session")
def negative_fixture():
    with open(FIXTURES / "negative_bigraph.json") as fh:
        return json.load(fh)
