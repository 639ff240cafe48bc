"""Conversions et combinateurs de conversions."""
from .errors import BudgetExceeded, ConversionError, NotAnEquation, ShapeMismatch
from .conversions import (
    Conv,
    abs_conv,
    all_conv,
    arg_conv,
    beta_conv,
    binop_conv,
    every_conv,
    first_conv,
    fun_conv,
    repeat_conv,
    rewr_conv,
    rhs_of,
    sub_conv,
    then_conv,
    top_conv,
    try_conv,
)

__all__ = [
    "BudgetExceeded",
    "ConversionError",
    "NotAnEquation",
    "ShapeMismatch",
    "Conv",
    "abs_conv",
    "all_conv",
    "arg_conv",
    "beta_conv",
    "binop_conv",
    "every_conv",
    "first_conv",
    "fun_conv",
    "repeat_conv",
    "rewr_conv",
    "rhs_of",
    "sub_conv",
    "then_conv",
    "top_conv",
    "try_conv",
]
