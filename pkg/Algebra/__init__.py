"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Algebra
"""

from .scalars import (
    DimScalar,
    DIM_FIELD,
    M,
    ZERO,
    ONE,
    dimscalar_arith,
    dim_eval,
    rising_product,
    odd_rising_coeff
)
