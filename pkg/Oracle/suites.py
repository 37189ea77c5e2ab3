"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Verification Suites
"""

# Libraries
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from itertools import product
from fractions import Fraction
from math import factorial
from typing import Callable

from Algebra import DimScalar, M, odd_rising_coeff, rising_product
from Kernel import (
    GeneralizedFunction, Distribution, SignumDistribution, RadialForm, RadialLabel,
    apply_dirac, apply_laplace, apply_euler, apply_gamma, mul_x, mul_x_pow, x_power_coefficient, x_power_identity,
    apply_omega_dr, apply_dr2, apply_inv_r_dr, div_x,
    act_r, act_dr, act_omega, div_r, from_radial,
    RADIAL_FAMILIES, radial_power_route, radial_power_distribution
)
from Oracle.models import OracleConfig, SuiteEntry, SuiteReport
from Oracle.pairing import c_constant, sample_polys, pair_cartesian, pair_spherical, pair_physics
from Oracle.verify import verify_identity, verify_duality, check_values
from Poly import (
    MultiPoly, laplacian, spherical_mean0, spherical_mean1, radial_laplacian,
    sphere_moment, sphere_moment_quadrature
)
from Utilities.error_tools import UnknownSuite
from Utilities.logging_tools import *

logger = get_logger("Oracle_Suites")

Check = Callable[[], SuiteEntry]

DELTA: Distribution = Distribution.delta()
COMPOSITION_NMAX: int = 9
INV_R_DR_KMAX: int = 6
PHYSICS_LMAX: int = 3
DUAL_ROUTE_NMAX: int = 10
MOMENT_DEGREE: int = 8

# ========== 도움 기능 ==========

def _radial(label: RadialLabel, order: int) -> GeneralizedFunction:
    return from_radial(RadialForm.single(label, order))

def d(order: int) -> GeneralizedFunction:
    return _radial(RadialLabel.D, order)

def v(order: int) -> GeneralizedFunction:
    return _radial(RadialLabel.V, order)

def sd(order: int) -> GeneralizedFunction:
    return _radial(RadialLabel.SD, order)

def sv(order: int) -> GeneralizedFunction:
    return _radial(RadialLabel.SV, order)

def basis(n: int) -> Distribution:
    return Distribution.basis(n)

def signum_basis(n: int) -> SignumDistribution:
    return SignumDistribution.basis(n)

def _identity(config: OracleConfig, label: str, lhs: GeneralizedFunction, rhs: GeneralizedFunction,
              note: str | None = None) -> Check:
    return partial(verify_identity, label, lhs, rhs, config.dims, config.trials, config.max_degree, config.seed, note)

def _duality(config: OracleConfig, label: str, signum: GeneralizedFunction, dist: GeneralizedFunction,
             note: str | None = None) -> Check:
    return partial(verify_duality, label, signum, dist, config.dims, config.trials, config.max_degree, config.seed, note)

def _repeat(action, G: GeneralizedFunction, count: int) -> GeneralizedFunction:
    for _ in range(count):
        G = action(G)
    return G

# ========== ∂_r² 와 (1/r)∂_r ==========

def radial_second_order(config: OracleConfig) -> list[Check]:
    checks: list[Check] = [
        _identity(config, "dr2_delta", apply_dr2(DELTA), apply_laplace(DELTA).scale((M + 1) / 2)),
        _identity(config, "inv_r_dr_delta", apply_inv_r_dr(DELTA), apply_laplace(DELTA).scale(DimScalar(-1) / 2)),
        _identity(config, "laplace_split", apply_dr2(DELTA) + apply_inv_r_dr(DELTA).scale(M - 1), apply_laplace(DELTA)),
        _identity(config, "inv_r_dr_by_dr2", apply_inv_r_dr(DELTA), apply_dr2(DELTA).scale(DimScalar(-1) / (M + 1))),
        _identity(config, "r2_dr2_delta", act_r(act_r(apply_dr2(DELTA))), DELTA.scale(M * (M + 1))),
        _identity(config, "euler_squared_delta", act_r(act_dr(act_r(act_dr(DELTA)))), DELTA.scale(M * M)),
        _identity(config, "r_inv_r_dr_delta", act_r(apply_inv_r_dr(DELTA)), act_dr(DELTA)),
    ]
    for k in range(config.kmax + 1):
        checks.append(_identity(config, f"dr2_d{2 * k:02d}", apply_dr2(d(2 * k)), d(2 * k + 2)))
        checks.append(_identity(config, f"dr2_v{2 * k + 1:02d}", apply_dr2(v(2 * k + 1)), v(2 * k + 3)))
    return checks

# ========== ω∂_r ==========

def omega_dr(config: OracleConfig) -> list[Check]:
    checks: list[Check] = [
        _identity(config, "omega_dr_delta", apply_omega_dr(DELTA), apply_dirac(DELTA)),
    ]
    for k in range(config.kmax + 1):
        checks.append(_identity(config, f"omega_dr_d{2 * k:02d}", apply_omega_dr(d(2 * k)), v(2 * k + 1)))
        checks.append(_identity(config, f"omega_dr_v{2 * k + 1:02d}", apply_omega_dr(v(2 * k + 1)), -d(2 * k + 2)))
        checks.append(_identity(
            config, f"dirac_even_omega_dr_{2 * k:02d}",
            _repeat(apply_dirac, apply_omega_dr(DELTA), 2 * k), basis(2 * k + 1)
        ))
        checks.append(_identity(
            config, f"dirac_odd_omega_dr_{2 * k + 1:02d}",
            _repeat(apply_dirac, apply_omega_dr(DELTA), 2 * k + 1),
            apply_omega_dr(basis(2 * k + 1)).scale(DimScalar(2 * (k + 1)) / (M + 2 * k + 1))
        ))
    return checks

def omega_dr_powers(config: OracleConfig) -> list[Check]:
    checks: list[Check] = []
    result: GeneralizedFunction = DELTA
    for n in range(config.nmax + 1):
        expected = Distribution.basis(n, odd_rising_coeff(n // 2))
        checks.append(_identity(config, f"omega_dr_power_{n:02d}", result, expected))
        result = apply_omega_dr(result)
    return checks

def inv_r_dr_powers(config: OracleConfig) -> list[Check]:
    checks: list[Check] = []
    result: GeneralizedFunction = DELTA
    for k in range(max(INV_R_DR_KMAX, config.kmax) + 1):
        expected = Distribution.basis(2 * k, DimScalar(1) / (2 ** k * factorial(k)))
        checks.append(_identity(config, f"inv_r_dr_power_{k:02d}", result, expected))
        result = apply_inv_r_dr(result)
    return checks

# ========== x 거듭제곱 ==========

def x_powers(config: OracleConfig) -> list[Check]:
    checks: list[Check] = [
        _identity(config, "x_delta", mul_x(DELTA), Distribution.zero()),
        _identity(config, "x2_delta", mul_x_pow(DELTA, 2), Distribution.zero()),
    ]
    for family in RADIAL_FAMILIES:
        for k in range(config.kmax + 1):
            for l in range(min(k, config.lmax) + 1):
                n: int = 2 * k + (1 if family in ("iii", "iv") else 0)
                p: int = 2 * l + (1 if family in ("ii", "iv") else 0)
                coefficient, target = x_power_identity(family, k, l)
                expected = Distribution.zero() if target is None else Distribution.basis(target, coefficient)
                label: str = f"{family}_k{k}_l{l}"
                checks.append(_identity(config, f"closed_{label}", mul_x_pow(basis(n), p), expected))
                checks.append(_identity(config, f"iterated_{label}", _repeat(mul_x, basis(n), p), expected))
    for n in range(config.nmax + 1):
        for p in range(1, n + 2):
            coefficient, target = x_power_coefficient(n, p)
            expected = Distribution.zero() if target is None else Distribution.basis(target, coefficient)
            checks.append(_identity(config, f"power_n{n:02d}_p{p:02d}", _repeat(mul_x, basis(n), p), expected))
    return checks

# ========== r 거듭제곱 × radial 미분 ==========

def radial_power_products(config: OracleConfig) -> list[Check]:
    checks: list[Check] = []
    for family in RADIAL_FAMILIES:
        for k in range(config.kmax + 1):
            for l in range(min(k, config.lmax) + 1):
                checks.append(_identity(
                    config, f"{family}_k{k}_l{l}",
                    radial_power_route(family, k, l), radial_power_distribution(family, k, l)
                ))
    return checks

# ========== signumdistribution 예제 ==========

def signum_examples(config: OracleConfig) -> list[Check]:
    dr_delta = act_dr(DELTA)
    dr3_delta = act_dr(apply_dr2(DELTA))
    canonical_note = "canonical rotation-invariant choice of the free terms"
    checks: list[Check] = [
        _identity(config, "r_delta", act_r(DELTA), SignumDistribution.zero()),
        _identity(config, "r_dirac_delta", act_r(apply_dirac(DELTA)), act_omega(DELTA).scale(-M)),
        _identity(config, "r_laplace_delta", act_r(apply_laplace(DELTA)), dr_delta.scale(-2)),
        _identity(config, "r_dr2_delta", act_r(apply_dr2(DELTA)), dr_delta.scale(-(M + 1))),
        _identity(config, "omega_omega_dr_delta", act_omega(apply_omega_dr(DELTA)), -dr_delta),
        _identity(config, "inv_r_delta", div_r(DELTA), dr_delta.scale(DimScalar(-1) / M), canonical_note),
        _identity(config, "inv_r3_delta", div_r(DELTA, 3), dr3_delta.scale(DimScalar(-1) / (M * (M + 1) * (M + 2)))),
        _identity(config, "inv_x_delta", div_x(DELTA), apply_dirac(DELTA).scale(DimScalar(1) / M), canonical_note),
        _duality(config, "pairing_omega_delta", act_omega(DELTA), -DELTA),
        _duality(config, "pairing_dr_delta", dr_delta, apply_omega_dr(DELTA)),
    ]
    for k in range(config.kmax + 1):
        checks.append(_identity(config, f"inv_r_d{2 * k:02d}", div_r(d(2 * k)), sd(2 * k + 1).scale(DimScalar(-1) / (M + 2 * k))))
        checks.append(_identity(config, f"inv_r_v{2 * k + 1:02d}", div_r(v(2 * k + 1)), sv(2 * k + 2).scale(DimScalar(-1) / (M + 2 * k + 1))))
        checks.append(_identity(config, f"r_inv_r_d{2 * k:02d}", act_r(div_r(d(2 * k))), d(2 * k)))
        checks.append(_identity(config, f"r_inv_r_v{2 * k + 1:02d}", act_r(div_r(v(2 * k + 1))), v(2 * k + 1)))
        checks.append(_identity(
            config, f"inv_r_power_{2 * k + 1:02d}",
            div_r(DELTA, 2 * k + 1), sd(2 * k + 1).scale(DimScalar(-1) / rising_product(M, 1, 2 * k + 1))
        ))
        checks.append(_identity(config, f"inv_x_even_{2 * k:02d}", div_x(basis(2 * k)), basis(2 * k + 1).scale(DimScalar(1) / (M + 2 * k))))
        checks.append(_identity(config, f"inv_x_odd_{2 * k + 1:02d}", div_x(basis(2 * k + 1)), basis(2 * k + 2).scale(DimScalar(1) / (2 * k + 2))))
        checks.append(_identity(config, f"x_inv_x_{2 * k:02d}", mul_x(div_x(basis(2 * k))), basis(2 * k)))
        checks.append(_duality(config, f"pairing_inv_r_{2 * k:02d}", div_r(basis(2 * k)), -div_x(basis(2 * k))))
        checks.append(_duality(config, f"pairing_inv_r_{2 * k + 1:02d}", div_r(basis(2 * k + 1)), -div_x(basis(2 * k + 1))))
    return checks

# ========== 공간 전이 규칙 ==========

def transition_rules(config: OracleConfig) -> list[Check]:
    checks: list[Check] = [
        _identity(config, "r_d00", act_r(d(0)), SignumDistribution.zero()),
        _identity(config, "r_sv00", act_r(sv(0)), Distribution.zero(), "r(w delta) = 0 like x delta = 0"),
    ]
    for k in range(config.kmax + 1):
        tag = f"{k:02d}"
        checks += [
            _identity(config, f"r_v_{tag}", act_r(v(2 * k + 1)), sv(2 * k).scale(-(M + 2 * k))),
            _identity(config, f"r_sd_{tag}", act_r(sd(2 * k + 1)), d(2 * k).scale(-(M + 2 * k))),
            _identity(config, f"dr_d_{tag}", act_dr(d(2 * k)), sd(2 * k + 1)),
            _identity(config, f"dr_v_{tag}", act_dr(v(2 * k + 1)), sv(2 * k + 2)),
            _identity(config, f"dr_sd_{tag}", act_dr(sd(2 * k + 1)), d(2 * k + 2)),
            _identity(config, f"dr_sv_{tag}", act_dr(sv(2 * k)), v(2 * k + 1)),
            _identity(config, f"w_d_{tag}", act_omega(d(2 * k)), sv(2 * k)),
            _identity(config, f"w_v_{tag}", act_omega(v(2 * k + 1)), -sd(2 * k + 1)),
            _identity(config, f"w_sv_{tag}", act_omega(sv(2 * k)), -d(2 * k)),
            _identity(config, f"w_sd_{tag}", act_omega(sd(2 * k + 1)), v(2 * k + 1)),
        ]
        if k >= 1:
            checks.append(_identity(config, f"r_d_{tag}", act_r(d(2 * k)), sd(2 * k - 1).scale(-(M + 2 * k - 1))))
            checks.append(_identity(config, f"r_sv_{tag}", act_r(sv(2 * k)), v(2 * k - 1).scale(-(M + 2 * k - 1))))
    for n in range(config.nmax + 1):
        T = basis(n)
        S = signum_basis(n)
        checks += [
            _duality(config, f"pairing_w_{n:02d}", act_omega(T), -T),
            _duality(config, f"pairing_r_{n:02d}", act_r(T), mul_x(T)),
            _duality(config, f"pairing_dr_{n:02d}", act_dr(T), apply_omega_dr(T)),
            _duality(config, f"pairing_w_signum_{n:02d}", S, act_omega(S)),
        ]
    return checks

# ========== 합성 규칙 ==========

def compositions(config: OracleConfig) -> list[Check]:
    checks: list[Check] = []
    gap_note = "r delta = 0, so d_r r is checked against E+1 from n = 1"
    for n in range(COMPOSITION_NMAX + 1):
        T = basis(n)
        S = signum_basis(n)
        tag = f"{n:02d}"
        checks += [
            _identity(config, f"r_r_{tag}", act_r(act_r(T)), mul_x_pow(T, 2).scale(-1)),
            _identity(config, f"r_dr_{tag}", act_r(act_dr(T)), apply_euler(T)),
            _identity(config, f"r_w_{tag}", act_r(act_omega(T)), mul_x(T)),
            _identity(config, f"w_r_{tag}", act_omega(act_r(T)), mul_x(T)),
            _identity(config, f"dr_dr_{tag}", act_dr(act_dr(T)), apply_dr2(T)),
            _identity(config, f"w_dr_{tag}", act_omega(act_dr(T)), apply_omega_dr(T)),
            _identity(config, f"dr_w_{tag}", act_dr(act_omega(T)), apply_omega_dr(T)),
            _identity(config, f"w_w_{tag}", act_omega(act_omega(T)), -T),
            _identity(config, f"w_w_signum_{tag}", act_omega(act_omega(S)), -S),
            _identity(config, f"r_dr_signum_{tag}", act_r(act_dr(S)), S.scale(-(M + n))),
        ]
        if n >= 1:
            checks.append(_identity(config, f"dr_r_{tag}", act_dr(act_r(T)), apply_euler(T) + T))
        else:
            checks.append(_identity(config, f"dr_r_{tag}", act_dr(act_r(T)), Distribution.zero(), gap_note))
    return checks

# ========== 동차 차수 ==========

def homogeneity(config: OracleConfig) -> list[Check]:
    checks: list[Check] = []
    for n in range(config.nmax + 1):
        T = basis(n)
        S = signum_basis(n)
        tag = f"{n:02d}"
        checks.append(_identity(config, f"euler_{tag}", apply_euler(T), T.scale(-(M + n))))
        for name, action, shift in (("r", act_r, -1), ("dr", act_dr, 1), ("w", act_omega, 0)):
            for space, G in (("dist", T), ("sign", S)):
                result = action(G)
                expected = sorted({n + shift} if not result.is_zero() else set())
                checks.append(partial(
                    check_values, f"degree_{name}_{space}_{tag}",
                    sorted(result.degree_offsets().values()), expected,
                    lhs_text=f"offsets of {name} {G.render()}", rhs_text=str(expected), seed=config.seed
                ))
    for k in range(config.kmax + 1):
        checks.append(_identity(config, f"euler_d{2 * k:02d}", apply_euler(d(2 * k)), d(2 * k).scale(-(M + 2 * k))))
        checks.append(_identity(config, f"euler_v{2 * k + 1:02d}", apply_euler(v(2 * k + 1)), v(2 * k + 1).scale(-(M + 2 * k + 1))))
        checks.append(_identity(config, f"gamma_{2 * k:02d}", apply_gamma(basis(2 * k)), Distribution.zero()))
        checks.append(_identity(config, f"beltrami_{2 * k:02d}", apply_gamma(basis(2 * k), beltrami=True), Distribution.zero()))
    return checks

# ========== 구면 평균과 물리 형태 ==========

def _physics_check(config: OracleConfig, n: int) -> SuiteEntry:
    label: str = f"physics_{'d' if n % 2 == 0 else 'v'}{n:02d}"
    element = d(n) if n % 2 == 0 else v(n)
    for m in config.dims:
        for phi in sample_polys(m, config.trials, config.max_degree, config.seed):
            left = pair_cartesian(element, phi, m)
            right = pair_physics(n, phi)
            if left != right:
                return check_values(label, left, right, config.dims, config.seed, note=f"m={m}, phi={phi.render()}")
    return check_values(label, True, True, config.dims, config.seed,
                        lhs_text=f"<{'d' if n % 2 == 0 else 'v'}_{n}, phi>",
                        rhs_text=f"(-1)^{n} m..(m+{n - 1})/{n}! d_r^{n} S{n % 2}[phi](0)")

def _dual_route_check(config: OracleConfig, n: int) -> SuiteEntry:
    label: str = f"dual_route_{n:02d}"
    dims: list[int] = sorted(set(config.dims) | {4})
    for m in dims:
        for phi in sample_polys(m, config.trials, config.max_degree, config.seed):
            left = pair_cartesian(basis(n), phi, m)
            right = pair_spherical(basis(n), phi, m)
            if left != right:
                return check_values(label, left, right, dims, config.seed, note=f"m={m}, phi={phi.render()}")
    return check_values(label, True, True, dims, config.seed,
                        lhs_text=f"cartesian <D^{n} delta, phi>", rhs_text=f"spherical <D^{n} delta, phi>")

def _mean_properties_check(config: OracleConfig, m: int) -> SuiteEntry:
    label: str = f"spherical_means_m{m}"
    for phi in sample_polys(m, config.trials, config.max_degree, config.seed):
        mean0, mean1 = spherical_mean0(phi), spherical_mean1(phi)
        problems: list[str] = []
        if not mean0.is_even():
            problems.append("first mean is not even")
        if not mean1.is_odd():
            problems.append("second mean is not odd")
        if mean0.coefficient(0) != phi.value_at_zero():
            problems.append("first mean at 0 differs from phi(0)")
        if spherical_mean0(laplacian(phi)) != radial_laplacian(mean0):
            problems.append("mean of the Laplacian differs from the radial Laplacian of the mean")
        if problems:
            return check_values(label, False, True, [m], config.seed, note=f"{'; '.join(problems)} for {phi.render()}")
    return check_values(label, True, True, [m], config.seed,
                        lhs_text="parity, value at 0, Laplacian of S0[phi]", rhs_text="expected")

def _moment_quadrature_check(config: OracleConfig, m: int, tolerance: float) -> SuiteEntry:
    label: str = f"moment_quadrature_m{m}"
    worst: float = 0.0
    for alpha in product(range(MOMENT_DEGREE + 1), repeat=m):
        if sum(alpha) > MOMENT_DEGREE:
            continue
        error = abs(float(sphere_moment(alpha, m)) - sphere_moment_quadrature(alpha, m))
        worst = max(worst, error)
    return check_values(label, worst <= tolerance, True, [m], config.seed,
                        lhs_text=f"max error {worst:.3e}", rhs_text=f"<= {tolerance:.0e}")

def _c_constant_check(config: OracleConfig, l: int) -> SuiteEntry:
    # C(l) (2l)! = Δ^l |x|^{2l} (0)
    values: list[Fraction] = []
    expected: list[Fraction] = []
    for m in config.dims:
        square = MultiPoly(m)
        for index in range(m):
            square = square + MultiPoly.variable(m, index, 2)
        phi = MultiPoly.constant(m, 1)
        for _ in range(l):
            phi = phi * square
        for _ in range(l):
            phi = laplacian(phi)
        values.append(c_constant(l, m))
        expected.append(phi.value_at_zero() / factorial(2 * l))
    return check_values(f"c_constant_{l:02d}", values, expected, config.dims, config.seed,
                        lhs_text=f"C({l}) at m in {config.dims}",
                        rhs_text=f"laplacian^{l} |x|^{2 * l} (0) / {2 * l}!",
                        note=None if values == expected else f"{[str(v) for v in values]} != {[str(v) for v in expected]}")

def spherical_physics(config: OracleConfig) -> list[Check]:
    checks: list[Check] = []
    for n in range(2 * PHYSICS_LMAX + 2):
        checks.append(partial(_physics_check, config, n))
    for n in range(DUAL_ROUTE_NMAX + 1):
        checks.append(partial(_dual_route_check, config, n))
    for m in config.dims:
        checks.append(partial(_mean_properties_check, config, m))
    checks.append(partial(_moment_quadrature_check, config, 2, 1e-12))
    checks.append(partial(_moment_quadrature_check, config, 3, 1e-10))
    for l in range(config.lmax + 1):
        checks.append(partial(_c_constant_check, config, l))
    return checks

# ========== 실행 부분 ==========

# 공개 suite 이름 -> 항목 생성 함수
SUITES: dict[str, Callable[[OracleConfig], list[Check]]] = {
    "prop31": radial_second_order,
    "prop32": omega_dr,
    "cor33": omega_dr_powers,
    "cor34": inv_r_dr_powers,
    "identities_x": x_powers,
    "prop35": radial_power_products,
    "examples_sec7": signum_examples,
    "properties_sec8": transition_rules,
    "remark_compositions": compositions,
    "homogeneity": homogeneity,
    "physics_sec5": spherical_physics,
}

# 함수 이름으로도 suite 를 고를 수 있게 함 ("radial_second_order" -> "prop31")
SUITE_ALIASES: dict[str, str] = {
    build.__name__: name for name, build in SUITES.items() if build.__name__ != name
}

# suite 이름 목록
def suite_names() -> list[str]:
    return list(SUITES)

# 별칭을 공개 suite 이름으로 바꾸는 기능
def resolve_suite(name: str) -> str:
    """
    :param name: suite 이름 또는 별칭
    :return: 공개 suite 이름
    """
    if name in SUITES:
        return name
    if name in SUITE_ALIASES:
        return SUITE_ALIASES[name]
    raise UnknownSuite(f"Unknown suite: {name} (known: {', '.join(SUITES)})", input=name)

# suite 하나를 실행하는 기능
def run_suite(name: str, config: OracleConfig | None = None) -> SuiteReport:
    """
    항목은 서로 독립이므로 workers > 1 이면 동시에 실행, 결과는 id 순서로 정렬
    :param name: suite 이름
    :param config: OracleConfig (없으면 기본값)
    :return: SuiteReport
    """
    name = resolve_suite(name)
    config = config or OracleConfig()

    checks: list[Check] = SUITES[name](config)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            entries: list[SuiteEntry] = list(executor.map(lambda check: check(), checks))
    else:
        entries = [check() for check in checks]

    report = SuiteReport(suite=name, entries=sorted(entries, key=lambda entry: entry.id))
    logger.info(f"suite {name}: {len(entries) - len(report.failures())}/{len(entries)} passed")
    return report

# 모든 suite 를 실행하는 기능
def run_all(config: OracleConfig | None = None) -> list[SuiteReport]:
    return [run_suite(name, config) for name in SUITES]
