"""Exact skew polynomial arithmetic and constructive normalization over the
rational quaternions and the rational function field."""

from .divalg import HQ, QX, Auto, Quat, RatFun
from .skewpoly import Ring, SkewPoly
from .subst import Witness, check_automorphic, linear_shift, power_shift, substitute

__version__ = "0.1.0"

__all__ = [
    "HQ",
    "QX",
    "Auto",
    "Quat",
    "RatFun",
    "Ring",
    "SkewPoly",
    "Witness",
    "check_automorphic",
    "linear_shift",
    "power_shift",
    "substitute",
    "__version__",
]
