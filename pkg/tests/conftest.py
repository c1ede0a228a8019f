from pathlib import Path

import pytest

import ordtop as ot

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def vee() -> ot.Preorder:
    return ot.build_preorder(("a", "b", "c"), [("a", "c"), ("b", "c")])


@pytest.fixture
def chain3() -> ot.Preorder:
    return ot.build_preorder(("a", "b", "c"), [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain2() -> ot.Preorder:
    return ot.build_preorder(("a", "b"))


@pytest.fixture
def equiv2() -> ot.Preorder:
    return ot.build_preorder(("a", "b"), [("a", "b"), ("b", "a")])


@pytest.fixture
def single() -> ot.Preorder:
    return ot.build_preorder(("a",))


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")
