from .CflFactor import CflFactor
from .Exponent import Exponent
from .NestedScale import NestedScale
from .PositiveLength import PositiveLength

__all__ = ["CflFactor", "Exponent", "NestedScale", "PositiveLength"]
