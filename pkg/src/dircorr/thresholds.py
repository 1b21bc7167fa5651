"""Squeezing thresholds of each correlation class, closed form and by bisection."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np
from scipy.optimize import bisect

from . import measures
from .errors import DomainError, OracleError
from .gaussian_core import StsParams, sts_covariance

DEFAULT_R_MAX = 10.0
BISECTION_XTOL = 1e-10
MONOTONE_SAMPLES = 64
_EPS = np.finfo(float).eps


class Criterion(str, Enum):
    ENT_PPT = "ENT_PPT"
    STEER_AB = "STEER_AB"
    STEER_BA = "STEER_BA"
    DUAN_QT = "DUAN_QT"
    DUAN_ST = "DUAN_ST"


@dataclass(frozen=True)
class ThresholdSet:
    r_ent: float
    r_steer_ab: float
    r_steer_ba: float
    r_qt_duan: float
    r_st_duan: float

    def to_dict(self) -> dict:
        return asdict(self)

    def for_criterion(self, criterion: Criterion) -> float:
        return getattr(self, _FIELD_OF[Criterion(criterion)])


_FIELD_OF = {
    Criterion.ENT_PPT: "r_ent",
    Criterion.STEER_AB: "r_steer_ab",
    Criterion.STEER_BA: "r_steer_ba",
    Criterion.DUAN_QT: "r_qt_duan",
    Criterion.DUAN_ST: "r_st_duan",
}


def _check_noise(nA: float, nB: float) -> tuple[float, float]:
    nA, nB = float(nA), float(nB)
    for name, value in (("nA", nA), ("nB", nB)):
        if not math.isfinite(value) or value < 0.0:
            raise DomainError(f"{name}={value!r} must be finite and non-negative")
    return nA, nB


def _acosh_sqrt(arg: float) -> float:
    # already satisfied without squeezing
    if arg <= 1.0:
        return 0.0
    return math.acosh(math.sqrt(arg))


def closed_form_thresholds(nA: float, nB: float) -> ThresholdSet:
    """Minimum squeezing for PPT entanglement, steering in each direction and Duan.

    Thresholds are the squeezing above which the criterion holds; 0 means it
    holds for any ``r > 0``.
    """
    nA, nB = _check_noise(nA, nB)
    total = nA + nB + 1.0
    return ThresholdSet(
        r_ent=_acosh_sqrt((nA + 1.0) * (nB + 1.0) / total),
        r_steer_ab=_acosh_sqrt((2.0 * nA + 1.0) * (nB + 1.0) / total),
        r_steer_ba=_acosh_sqrt((nA + 1.0) * (2.0 * nB + 1.0) / total),
        r_qt_duan=0.5 * math.log(total),
        r_st_duan=0.5 * math.log(2.0 * total),
    )


def _margin_and_scale(criterion: Criterion, r: float, nA: float, nB: float):
    cm = sts_covariance(StsParams(r, nA, nB))
    if criterion is Criterion.ENT_PPT:
        return measures.ent_ppt(cm), cm.n * cm.n + cm.m * cm.m + 2.0 * cm.c1 * cm.c1
    scale = cm.n + cm.m
    if criterion is Criterion.STEER_AB:
        return measures.steering(cm, measures.Direction.AB).value - 1.0, scale
    if criterion is Criterion.STEER_BA:
        return measures.steering(cm, measures.Direction.BA).value - 1.0, scale
    if criterion is Criterion.DUAN_QT:
        return measures.duan(cm) - 1.0, scale
    return measures.duan(cm) - 0.5, scale


def criterion_margin(criterion: Criterion, r: float, nA: float, nB: float) -> float:
    """Signed distance of the criterion's measure from its threshold; negative = satisfied."""
    return _margin_and_scale(Criterion(criterion), r, nA, nB)[0]


def bisection_threshold(
    nA: float, nB: float, criterion: Criterion, r_max: float = DEFAULT_R_MAX
) -> float | None:
    """Threshold squeezing found numerically from the measures themselves.

    Independent of :func:`closed_form_thresholds`. Returns 0 when the
    criterion already holds at ``r -> 0+``, ``None`` when it still fails at
    ``r_max``. Raises :class:`OracleError` if the margin is not monotonically
    non-increasing on a 64-point sample of ``[0, r_max]``.
    """
    nA, nB = _check_noise(nA, nB)
    criterion = Criterion(criterion)
    if not (math.isfinite(r_max) and r_max > 0.0):
        raise DomainError(f"r_max={r_max!r} must be positive")

    grid = np.linspace(0.0, r_max, MONOTONE_SAMPLES)
    margins, scales = np.array([_margin_and_scale(criterion, r, nA, nB) for r in grid]).T
    # rounding of the cancelling terms grows with the CM entries
    slack = 1e-9 * np.maximum(1.0, np.abs(margins[:-1])) + 64 * _EPS * scales[1:]
    if np.any(np.diff(margins) > slack):
        raise OracleError(f"{criterion.value} margin is not monotone in r for nA={nA}, nB={nB}")

    if margins[0] <= 0.0:
        return 0.0
    if margins[-1] >= 0.0:
        return None
    # bracket from the sample to shorten the search
    k = int(np.argmax(margins < 0.0))
    return bisect(
        lambda r: criterion_margin(criterion, r, nA, nB),
        grid[k - 1],
        grid[k],
        xtol=BISECTION_XTOL,
    )
