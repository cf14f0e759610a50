import pytest

from oracles import FROZEN, recompute


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_values_match_recomputation(name):
    assert FROZEN[name] == pytest.approx(float(recompute()[name]), rel=1e-15, abs=1e-17)
