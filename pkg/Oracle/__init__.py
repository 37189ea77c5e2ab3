"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Oracle
"""

from .models import (
    SCHEMA_VERSION,
    OracleConfig,
    SuiteEntry,
    SuiteReport,
    VerifyReport,
    TableRow
)

from .pairing import (
    c_constant,
    physics_coefficient,
    sample_polys,
    cartesian_basis_value,
    spherical_basis_value,
    pair_cartesian,
    pair_spherical,
    pair_signum,
    pair_signum_spherical,
    pair_routes,
    pair_physics
)

from .verify import (
    verify_identity,
    verify_duality,
    check_values
)

from .suites import (
    SUITES,
    SUITE_ALIASES,
    suite_names,
    resolve_suite,
    run_suite,
    run_all
)
