from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cohsys.brillnoether import genus4_bound
from cohsys.klattice import ClassVector

small = st.integers(min_value=-20, max_value=20)
vectors = st.builds(ClassVector, small, small, small)
rationals = st.builds(
    Fraction, st.integers(min_value=-60, max_value=60), st.integers(min_value=1, max_value=12)
)


@pytest.fixture(scope="session")
def g4():
    return genus4_bound()
