"""Two-mode Gaussian covariance matrices and their symplectic invariants.

Normalisation: the vacuum has unit quadrature variance, so every physical
state satisfies ``dX dP >= 1`` and has symplectic eigenvalues ``>= 1``.
(Some references use vacuum variance 1/2 or 1/4; convert before use.)

The covariance matrix of quadratures ``(X_A, P_A, X_B, P_B)`` is taken in
the standard form::

    [[n,  0,  c1, 0 ],
     [0,  n,  0,  c2],
     [c1, 0,  m,  0 ],
     [0,  c2, 0,  m ]]
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FormError, SpectrumError

#: Tolerance for clamping a slightly negative symplectic discriminant.
DISCRIMINANT_EPS = 1e-9
#: Relative tolerance of the ``c2 == -c1`` test.
STS_FORM_RTOL = 1e-12
#: Slack on ``d_minus >= 1`` in the physicality test.
PHYSICAL_EPS = 1e-12


@dataclass(frozen=True)
class CovarianceMatrix:
    """Standard-form two-mode covariance matrix."""

    n: float
    m: float
    c1: float
    c2: float

    def __post_init__(self):
        for name in ("n", "m", "c1", "c2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"covariance entry {name}={value!r} is not finite")
            object.__setattr__(self, name, value)

    @classmethod
    def from_sts_entries(cls, n: float, m: float, c: float) -> CovarianceMatrix:
        """Build the squeezed-thermal form ``c1 = c, c2 = -c``."""
        return cls(n, m, c, -c)

    @property
    def is_sts_form(self) -> bool:
        return is_sts_form(self)

    @property
    def c(self) -> float:
        """The single correlation ``c = c1``; requires squeezed-thermal form."""
        require_sts_form(self)
        return self.c1

    def as_array(self) -> np.ndarray:
        n, m, c1, c2 = self.n, self.m, self.c1, self.c2
        return np.array(
            [
                [n, 0.0, c1, 0.0],
                [0.0, n, 0.0, c2],
                [c1, 0.0, m, 0.0],
                [0.0, c2, 0.0, m],
            ]
        )

    def swapped(self) -> CovarianceMatrix:
        """Exchange the roles of modes A and B."""
        return CovarianceMatrix(self.m, self.n, self.c1, self.c2)


@dataclass(frozen=True)
class StsParams:
    """Squeezing ``r`` and mean thermal photon numbers ``nA``, ``nB``."""

    r: float
    nA: float
    nB: float

    def __post_init__(self):
        for name in ("r", "nA", "nB"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0.0:
                raise DomainError(f"{name}={value!r} must be finite and non-negative")
            object.__setattr__(self, name, value)

    def swapped(self) -> StsParams:
        return StsParams(self.r, self.nB, self.nA)


@dataclass(frozen=True)
class SymplecticSpectrum:
    I1: float
    I2: float
    I3: float
    I4: float
    delta: float
    d_plus: float
    d_minus: float
    d_minus_pt: float


def is_sts_form(cm: CovarianceMatrix) -> bool:
    scale = max(abs(cm.c1), abs(cm.c2))
    return abs(cm.c1 + cm.c2) <= STS_FORM_RTOL * scale


def require_sts_form(cm: CovarianceMatrix) -> None:
    if not is_sts_form(cm):
        raise FormError(f"not squeezed-thermal form: c1={cm.c1!r}, c2={cm.c2!r}")


def sts_entries(r, nA, nB):
    """Vectorised ``(n, m, c)`` for squeezed thermal states.

    Accepts scalars or broadcastable arrays; no validation.
    """
    ch2 = np.cosh(r) ** 2
    sh2 = np.sinh(r) ** 2
    a = 2.0 * np.asarray(nA, dtype=float) + 1.0
    b = 2.0 * np.asarray(nB, dtype=float) + 1.0
    n = a * ch2 + b * sh2
    m = b * ch2 + a * sh2
    c = (np.asarray(nA, dtype=float) + nB + 1.0) * np.sinh(2.0 * np.asarray(r, dtype=float))
    return n, m, c


def sts_covariance(p: StsParams) -> CovarianceMatrix:
    """Covariance matrix of a two-mode squeezed thermal state."""
    n, m, c = sts_entries(p.r, p.nA, p.nB)
    return CovarianceMatrix.from_sts_entries(float(n), float(m), float(c))


def _sqrt_discriminant(disc: float, what: str) -> float:
    if disc < 0.0:
        if disc < -DISCRIMINANT_EPS:
            raise SpectrumError(f"{what} discriminant {disc!r} is negative")
        return 0.0
    return math.sqrt(disc)


def symplectic_spectrum(cm: CovarianceMatrix) -> SymplecticSpectrum:
    """Symplectic invariants and eigenvalues, plus the partially transposed ``d~-``.

    For squeezed-thermal form the discriminants are evaluated in factored
    form, ``(n-m)^2 ((n+m)^2 - 4c^2)`` and ``(n+m)^2 ((n-m)^2 + 4c^2)``,
    which avoids the catastrophic cancellation of ``delta^2 - 4 det`` for
    nearly pure states. General standard-form matrices use the invariants
    directly.
    """
    n, m, c1, c2 = cm.n, cm.m, cm.c1, cm.c2
    I1 = n * n
    I2 = m * m
    I3 = c1 * c2
    I4 = (n * m - c1 * c1) * (n * m - c2 * c2)
    delta = I1 + I2 + 2.0 * I3
    delta_pt = I1 + I2 - 2.0 * I3

    if is_sts_form(cm):
        c = c1
        gap = abs(n - m)
        prod = (n + m - 2.0 * c) * (n + m + 2.0 * c)
        if c == 0.0:
            d_plus, d_minus = max(n, m), min(n, m)
        elif prod >= 0.0:
            s = math.sqrt(prod)
            d_plus = 0.5 * (s + gap)
            d_minus = 0.5 * abs(s - gap)
        else:
            d_plus, d_minus = _generic_pair(delta, I4, "CM")
        root_pt = (n + m) * math.sqrt((n - m) ** 2 + 4.0 * c * c)
        d_minus_pt = math.sqrt(max(0.0, 0.5 * (delta_pt - abs(root_pt))))
    else:
        d_plus, d_minus = _generic_pair(delta, I4, "CM")
        _, d_minus_pt = _generic_pair(delta_pt, I4, "partial-transpose")

    return SymplecticSpectrum(I1, I2, I3, I4, delta, d_plus, d_minus, d_minus_pt)


def _generic_pair(delta: float, det: float, what: str) -> tuple[float, float]:
    root = _sqrt_discriminant(delta * delta - 4.0 * det, what)
    d_plus = math.sqrt(max(0.0, 0.5 * (delta + root)))
    d_minus = math.sqrt(max(0.0, 0.5 * (delta - root)))
    return d_plus, d_minus


def is_physical(cm: CovarianceMatrix) -> bool:
    """Positive definite and ``d_minus >= 1`` (uncertainty principle)."""
    n, m = cm.n, cm.m
    if not (n > 0.0 and m > 0.0):
        return False
    if not (n * m - cm.c1 * cm.c1 > 0.0 and n * m - cm.c2 * cm.c2 > 0.0):
        return False
    try:
        spectrum = symplectic_spectrum(cm)
    except SpectrumError:
        return False
    return spectrum.d_minus >= 1.0 - PHYSICAL_EPS
