import math

import pytest

from src.utils.ratios import implied_constant


class TestImpliedConstant:
    @pytest.mark.parametrize(
        "lhs, rhs, expected",
        [(3.0, 1.5, 2.0), (0.0, 2.0, 0.0), (0.0, 0.0, 0.0), (1.0, 0.0, math.inf)],
    )
    def test_cases(self, lhs: float, rhs: float, expected: float) -> None:
        assert implied_constant(lhs, rhs) == expected
