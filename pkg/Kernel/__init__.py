"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Kernel
"""

from .models import (
    Space,
    Kind,
    RadialLabel,
    GeneralizedFunction,
    Distribution,
    SignumDistribution,
    RadialTerm,
    RadialForm,
    render_terms,
    is_equal
)

from .classical import (
    require_distribution,
    apply_dirac,
    apply_laplace,
    apply_euler,
    apply_gamma,
    mul_x,
    x_power_coefficient,
    x_power_identity,
    mul_x_pow,
    apply_omega_dr,
    apply_dr2,
    apply_inv_r_dr,
    div_x
)

from .transitions import (
    act_omega,
    act_r,
    act_dr,
    div_r
)

from .radial import (
    RADIAL_FAMILIES,
    to_radial,
    from_radial,
    radial_basis_text,
    radial_to_text,
    radial_power_coefficient,
    prop35_coefficient,
    radial_power_route,
    radial_power_distribution,
    has_alias
)
