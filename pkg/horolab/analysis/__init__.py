from .cfunction import (
    CALIBRATED_EXPONENT,
    CValue,
    c_function,
    c_mu,
    c_infinity,
    c_table,
)
from .rank_one import rank_one_integral_oracle

__all__ = [
    "CALIBRATED_EXPONENT",
    "CValue",
    "c_function",
    "c_mu",
    "c_infinity",
    "c_table",
    "rank_one_integral_oracle",
]
