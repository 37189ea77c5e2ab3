"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Identity Verification
"""

# Libraries
from typing import Any

from Kernel import GeneralizedFunction, Distribution, SignumDistribution, is_equal
from Oracle.models import SuiteEntry
from Oracle.pairing import sample_polys, pair_routes, pair_cartesian, pair_spherical, pair_signum, pair_signum_spherical
from Parser import print_canonical
from Utilities.error_tools import SpaceMismatch, PoleAtDimension
from Utilities.logging_tools import *

logger = get_logger("Oracle_Verify")

def _entry(label: str, passed: bool, lhs: str, rhs: str, dims: list[int], seed: int, note: str | None) -> SuiteEntry:
    if not passed:
        logger.warning(f"identity {label} failed: {lhs} != {rhs} ({note})")
    return SuiteEntry(
        id=label,
        status="pass" if passed else "fail",
        lhs=lhs,
        rhs=rhs,
        dims=list(dims),
        seed=seed,
        note=note
    )

# 두 일반화 함수가 같은지 기호 비교와 pairing 으로 확인하는 기능
def verify_identity(label: str, lhs: GeneralizedFunction, rhs: GeneralizedFunction, dims: list[int],
                    trials: int = 25, max_degree: int = 8, seed: int = 0, note: str | None = None) -> SuiteEntry:
    """
    (a) 기호 m 에서 계수표가 같고
    (b) 모든 m, 모든 시험 다항식에서 공간에 맞는 두 경로의 pairing 이 모두 같으면 통과
    :param label: 항목 id
    :param lhs: 왼쪽
    :param rhs: 오른쪽
    :param dims: 확인할 차원 목록
    :param trials: 차원별 시험 다항식 개수
    :param max_degree: 시험 다항식 최대 차수
    :param seed: 시험 다항식 seed
    :return: SuiteEntry
    """
    if lhs.space is not rhs.space:
        raise SpaceMismatch(f"Identity {label} compares {lhs.space.value} with {rhs.space.value}",
                            input=f"{lhs.render()} | {rhs.render()}")

    lhs_text, rhs_text = print_canonical(lhs), print_canonical(rhs)
    if not is_equal(lhs, rhs):
        return _entry(label, False, lhs_text, rhs_text, dims, seed, note or "symbolic coefficients differ")

    for m in dims:
        for phi in sample_polys(m, trials, max_degree, seed):
            try:
                left = pair_routes(lhs, phi, m)
                right = pair_routes(rhs, phi, m)
            except PoleAtDimension as error:
                return _entry(label, False, lhs_text, rhs_text, dims, seed, f"pole at m={m}: {error.message}")
            values = list(left.values()) + list(right.values())
            if any(value != values[0] for value in values):
                return _entry(label, False, lhs_text, rhs_text, dims, seed,
                              f"pairings disagree at m={m} for {phi.render()}")

    return _entry(label, True, lhs_text, rhs_text, dims, seed, note)

# ⟨S, ωφ⟩ = ⟨T, φ⟩ 를 확인하는 기능
def verify_duality(label: str, signum: GeneralizedFunction, dist: GeneralizedFunction, dims: list[int],
                   trials: int = 25, max_degree: int = 8, seed: int = 0, note: str | None = None) -> SuiteEntry:
    """
    ω, r, ∂_r, 1/r 작용을 정의하는 pairing 관계의 직접 확인
    :param signum: SignumDistribution (ωφ 와 짝지음)
    :param dist: Distribution (φ 와 짝지음)
    """
    if not isinstance(signum, SignumDistribution) or not isinstance(dist, Distribution):
        raise SpaceMismatch(f"Duality {label} needs a signum and a distribution side",
                            input=f"{signum.render()} | {dist.render()}")

    lhs_text, rhs_text = f"<{print_canonical(signum)}, w phi>", f"<{print_canonical(dist)}, phi>"
    for m in dims:
        for phi in sample_polys(m, trials, max_degree, seed):
            values = [
                pair_signum(signum, phi, m, allow_mixed=True),
                pair_signum_spherical(signum, phi, m, allow_mixed=True),
                pair_cartesian(dist, phi, m, allow_mixed=True),
                pair_spherical(dist, phi, m, allow_mixed=True),
            ]
            if any(value != values[0] for value in values):
                return _entry(label, False, lhs_text, rhs_text, dims, seed,
                              f"pairings disagree at m={m} for {phi.render()}")
    return _entry(label, True, lhs_text, rhs_text, dims, seed, note)

# 이미 계산된 두 값이 정확히 같은지 확인하는 기능
def check_values(label: str, lhs: Any, rhs: Any, dims: list[int] | None = None, seed: int = 0,
                 lhs_text: str | None = None, rhs_text: str | None = None, note: str | None = None) -> SuiteEntry:
    return _entry(
        label,
        lhs == rhs,
        lhs_text if lhs_text is not None else str(lhs),
        rhs_text if rhs_text is not None else str(rhs),
        dims or [],
        seed,
        note if lhs == rhs or note else "values differ"
    )
