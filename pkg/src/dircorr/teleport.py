"""Coherent-state teleportation diagnostics for squeezed-thermal resources.

The symmetric (Braunstein-Kimble) protocol has fidelity ``1/(1 + duan)``.
For asymmetric resources the teleportation direction follows ``g_sym``:
Alice to Bob when ``g_sym^{A|B} < 1``, Bob to Alice when it is ``> 1``. The
amplifying protocol with gain ``gbar >= 1`` reaches ``F = 1/gbar^2`` at the
operating point ``E(gbar) = gbar^2 - 1``; the report exposes the residual of
that condition rather than an off-condition fidelity.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import measures
from .errors import DomainError, ProductStateError
from .gaussian_core import CovarianceMatrix, StsParams, require_sts_form, sts_covariance
from .measures import Direction

SYMMETRY_BAND = 1e-9
RESIDUAL_TOL = 1e-6
QT_FIDELITY = 0.5
SECURE_FIDELITY = 2.0 / 3.0


class TeleportDirection(str, Enum):
    A_TO_B = "A_TO_B"
    B_TO_A = "B_TO_A"
    SYMMETRIC = "SYMMETRIC"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TeleportReport:
    fidelity_sym: float
    secure: bool
    qt_sym: bool
    direction: TeleportDirection
    gbar: float
    condition_residual: float
    f_g: float | None

    def to_dict(self) -> dict:
        return {
            "fidelity_sym": self.fidelity_sym,
            "secure": self.secure,
            "qt_sym": self.qt_sym,
            "direction": self.direction.value,
            "gbar": self.gbar,
            "condition_residual": self.condition_residual,
            "f_g": self.f_g,
        }


def fidelity_from_duan(duan: float) -> float:
    """Symmetric-protocol fidelity ``1 / (1 + duan)``."""
    return 1.0 / (1.0 + duan)


def secure_teleport_check(cm: CovarianceMatrix) -> bool:
    """Secure (fidelity > 2/3) teleportation resource, i.e. ``duan < 0.5``."""
    return measures.duan(cm) < 0.5


def _direction_and_gain(cm: CovarianceMatrix) -> tuple[TeleportDirection, float, Direction]:
    g_ab = measures.optimal_gain_sym(cm, Direction.AB)
    if abs(g_ab - 1.0) < SYMMETRY_BAND:
        return TeleportDirection.SYMMETRIC, 1.0, Direction.BA
    if g_ab < 1.0:
        # Bob's reconstruction is amplified by g_sym^{B|A} = 1/g_sym^{A|B}
        return TeleportDirection.A_TO_B, measures.optimal_gain_sym(cm, Direction.BA), Direction.BA
    return TeleportDirection.B_TO_A, g_ab, Direction.AB


def condition_residual(cm: CovarianceMatrix) -> float:
    """``E(gbar) - (gbar^2 - 1)`` in the teleporting direction."""
    _, gbar, steer_dir = _direction_and_gain(cm)
    return measures.steering(cm, steer_dir, gbar).value - (gbar * gbar - 1.0)


def teleport_report(cm: CovarianceMatrix) -> TeleportReport:
    require_sts_form(cm)
    if cm.c1 == 0.0:
        raise ProductStateError("a product state is no teleportation resource")
    fidelity = fidelity_from_duan(measures.duan(cm))
    direction, gbar, steer_dir = _direction_and_gain(cm)
    if not np.isfinite(gbar):
        raise DomainError(f"correlation c={cm.c1!r} too weak for a finite protocol gain")
    residual = measures.steering(cm, steer_dir, gbar).value - (gbar * gbar - 1.0)
    f_g = 1.0 / (gbar * gbar) if abs(residual) < RESIDUAL_TOL else None
    return TeleportReport(
        fidelity_sym=fidelity,
        secure=fidelity > SECURE_FIDELITY and secure_teleport_check(cm),
        qt_sym=fidelity > QT_FIDELITY,
        direction=direction,
        gbar=gbar,
        condition_residual=residual,
        f_g=f_g,
    )


def find_operating_point(
    nA: float, nB: float, r_max: float = 9.0, samples: int = 361, tol: float = RESIDUAL_TOL
) -> StsParams | None:
    """Smallest squeezing (on a grid refined by bisection) meeting ``|residual| < tol``.

    Returns ``None`` when no sampled ``r`` in ``(0, r_max]`` gets there.
    """
    def residual_at(r):
        return condition_residual(sts_covariance(StsParams(r, nA, nB)))

    grid = np.linspace(0.0, r_max, samples)[1:]
    previous = None
    for r in grid:
        if abs(residual_at(r)) < 0.5 * tol:
            if previous is None:
                return StsParams(r, nA, nB)
            lo, hi = previous, r
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if abs(residual_at(mid)) < 0.5 * tol:
                    hi = mid
                else:
                    lo = mid
            return StsParams(hi, nA, nB)
        previous = r
    return None


__all__ = [
    "TeleportDirection",
    "TeleportReport",
    "condition_residual",
    "find_operating_point",
    "fidelity_from_duan",
    "secure_teleport_check",
    "teleport_report",
]
