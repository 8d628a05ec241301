import numpy as np
import pytest
from hypothesis import strategies as st

from bivector_bell.ga_core import Multivector, Vector3

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


coord = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


@st.composite
def unit_vectors(draw):
    x, y, z = draw(coord), draw(coord), draw(coord)
    n = float(np.linalg.norm([x, y, z]))
    if n < 1e-3:
        x, y, z, n = 0.0, 0.0, 1.0, 1.0
    return Vector3(x / n, y / n, z / n)


multivectors = st.lists(
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False), min_size=8, max_size=8
).map(Multivector)
