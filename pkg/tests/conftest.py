import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fpsoft.document import load_document  # noqa: E402

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / f"{name}.json"


@pytest.fixture
def example1():
    return load_document(FIXTURES / "example1.json")


@pytest.fixture
def example2():
    return load_document(FIXTURES / "example2.json")


@pytest.fixture
def example7():
    return load_document(FIXTURES / "example7.json")


@pytest.fixture
def car_gallery():
    return load_document(FIXTURES / "car_gallery.json")
