"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Poly
"""

from .models import (
    MultiPoly,
    VectorPoly,
    RadialPoly,
    PairingValue,
    format_rational
)

from .calculus import (
    dirac_apply,
    laplacian,
    dirac_power_at_zero,
    radial_deriv_at_zero,
    radial_laplacian
)

from .spherical import (
    sphere_moment,
    sphere_moment_quadrature,
    spherical_mean0,
    spherical_mean1
)

from .generate import random_poly

from .text import parse_poly
