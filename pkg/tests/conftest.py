from pathlib import Path

import pytest
from hypothesis import strategies as st

from softtop import Context, SoftSet
from softtop.workspace import load

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / f"{name}.json"


@pytest.fixture
def workspace():
    return lambda name: load(FIXTURES / f"{name}.json")


contexts = st.builds(Context.of_size, st.integers(1, 3), st.integers(1, 3))


@st.composite
def soft_sets(draw, ctx=None, count=1):
    """A context plus ``count`` soft sets over it."""
    ctx = ctx or draw(contexts)
    return (ctx, *[SoftSet(ctx, draw(st.integers(0, ctx.full))) for _ in range(count)])
