"""Scalar correlation measures of squeezed-thermal covariance matrices.

All functions take a :class:`~dircorr.gaussian_core.CovarianceMatrix` in
squeezed-thermal form (``c2 = -c1``) and work with the single correlation
``c = c1``. Directional quantities come in two flavours: ``A|B`` (Bob's
measurements infer or steer Alice's mode) and ``B|A``. Discord is in nats.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DomainError, ProductStateError
from .gaussian_core import CovarianceMatrix, require_sts_form, symplectic_spectrum

#: Arguments of the entropy function within this distance below 1 are clamped to 1.
ENTROPY_CLAMP = 1e-9


class Direction(str, Enum):
    AB = "A|B"
    BA = "B|A"

    @classmethod
    def parse(cls, value) -> Direction:
        if isinstance(value, cls):
            return value
        token = str(value).upper().replace("|", "")
        if token == "AB":
            return cls.AB
        if token == "BA":
            return cls.BA
        raise ValueError(f"unknown direction {value!r}; expected 'A|B' or 'B|A'")


class Steering(NamedTuple):
    value: float
    gain: float


class DiscordTerms(NamedTuple):
    value: float
    s_cond: float
    h_cond: float


@dataclass(frozen=True)
class CorrelationReport:
    ent_ppt: float
    duan: float
    e_ab: float
    e_ba: float
    g_ab_opt: float
    g_ba_opt: float
    g_sym_ab: float | None
    g_sym_ba: float | None
    d_ab: float
    d_ba: float
    s_cond_ab: float
    h_cond_ab: float
    s_cond_ba: float
    h_cond_ba: float

    def to_dict(self) -> dict:
        return asdict(self)


def _entries(cm: CovarianceMatrix) -> tuple[float, float, float]:
    require_sts_form(cm)
    return cm.n, cm.m, cm.c1


def _oriented(cm: CovarianceMatrix, direction) -> tuple[float, float, float]:
    """``(n, m, c)`` with the inferred mode first."""
    n, m, c = _entries(cm)
    if Direction.parse(direction) is Direction.BA:
        return m, n, c
    return n, m, c


def entropy_f(x: float) -> float:
    """Bosonic entropy ``((x+1)/2) ln((x+1)/2) - ((x-1)/2) ln((x-1)/2)``.

    ``f(1) = 0`` by continuity. Evaluated as ``ln(1+h) + h ln(1 + 1/h)`` with
    ``h = (x-1)/2``, which has no cancellation near 1 or for large ``x``.
    """
    if math.isnan(x) or x < 1.0 - ENTROPY_CLAMP:
        raise DomainError(f"entropy argument {x!r} < 1: unphysical covariance matrix")
    if x <= 1.0:
        return 0.0
    h = 0.5 * (x - 1.0)
    return math.log1p(h) + h * math.log1p(1.0 / h)


def ent_ppt(cm: CovarianceMatrix) -> float:
    """``(nm - c^2)^2 + 1 - (n^2 + m^2 + 2c^2)``; negative iff entangled."""
    n, m, c = _entries(cm)
    det_block = n * m - c * c
    return det_block * det_block + 1.0 - (n * n + m * m + 2.0 * c * c)


def ent_gain(cm: CovarianceMatrix, g: float, direction=Direction.AB) -> float:
    """Normalised EPR variance ``(n - 2gc + g^2 m) / (1 + g^2)``.

    Below 1 certifies entanglement. ``B|A`` exchanges ``n`` and ``m``.
    """
    g = float(g)
    if not math.isfinite(g):
        raise DomainError(f"gain {g!r} is not finite")
    n, m, c = _oriented(cm, direction)
    return (n - 2.0 * g * c + g * g * m) / (1.0 + g * g)


def optimal_gain_sym(cm: CovarianceMatrix, direction=Direction.AB) -> float:
    """Gain minimising :func:`ent_gain`; the two directions are reciprocal."""
    n, m, c = _oriented(cm, direction)
    if c == 0.0:
        raise ProductStateError("optimal gain undefined for a product state (c = 0)")
    s = math.hypot(n - m, 2.0 * c)
    # rationalised branch avoids cancellation when m >> n
    if n >= m:
        return (n - m + s) / (2.0 * c)
    return 2.0 * c / (m - n + s)


def duan(cm: CovarianceMatrix) -> float:
    """Symmetric Duan parameter ``(n + m - 2c) / 2``."""
    n, m, c = _entries(cm)
    return 0.5 * (n + m - 2.0 * c)


def steering(cm: CovarianceMatrix, direction=Direction.AB, g: float | None = None) -> Steering:
    """EPR steering parameter, e.g. ``E_A|B(g) = n + g^2 m - 2gc``.

    With ``g`` omitted the optimum ``n - c^2/m`` (gain ``c/m``) is returned.
    ``E_A|B < 1`` means Bob can steer Alice.
    """
    n, m, c = _oriented(cm, direction)
    if g is None:
        if m <= 0.0:
            raise DomainError("steering optimum needs a positive conditioning variance")
        return Steering(n - c * c / m, c / m)
    g = float(g)
    if not math.isfinite(g):
        raise DomainError(f"gain {g!r} is not finite")
    return Steering(n + g * g * m - 2.0 * g * c, g)


def discord(cm: CovarianceMatrix, direction=Direction.AB) -> DiscordTerms:
    """Gaussian discord ``f(m) - f(d+) - f(d-) + f(z)`` with ``z = (n + mn - c^2)/(m+1)``.

    Returns the value together with ``s_cond = f(d+) + f(d-) - f(m)`` and
    ``h_cond = f(z)`` so that ``value = h_cond - s_cond``.
    """
    n, m, c = _oriented(cm, direction)
    if c == 0.0:
        # product state: both conditional entropies are the local one
        local = entropy_f(n)
        entropy_f(m)  # domain check on the other mode
        return DiscordTerms(0.0, local, local)
    spectrum = symplectic_spectrum(cm)
    z = (n + m * n - c * c) / (m + 1.0)
    s_cond = entropy_f(spectrum.d_plus) + entropy_f(spectrum.d_minus) - entropy_f(m)
    h_cond = entropy_f(z)
    return DiscordTerms(h_cond - s_cond, s_cond, h_cond)


def correlation_report(cm: CovarianceMatrix) -> CorrelationReport:
    """Every scalar measure of one state.

    Raises :class:`DomainError` (from the entropy terms) for clearly
    unphysical input.
    """
    require_sts_form(cm)
    e_ab = steering(cm, Direction.AB)
    e_ba = steering(cm, Direction.BA)
    if cm.c1 == 0.0:
        g_sym_ab = g_sym_ba = None
    else:
        g_sym_ab = optimal_gain_sym(cm, Direction.AB)
        g_sym_ba = optimal_gain_sym(cm, Direction.BA)
    d_ab = discord(cm, Direction.AB)
    d_ba = discord(cm, Direction.BA)
    return CorrelationReport(
        ent_ppt=ent_ppt(cm),
        duan=duan(cm),
        e_ab=e_ab.value,
        e_ba=e_ba.value,
        g_ab_opt=e_ab.gain,
        g_ba_opt=e_ba.gain,
        g_sym_ab=g_sym_ab,
        g_sym_ba=g_sym_ba,
        d_ab=d_ab.value,
        d_ba=d_ba.value,
        s_cond_ab=d_ab.s_cond,
        h_cond_ab=d_ab.h_cond,
        s_cond_ba=d_ba.s_cond,
        h_cond_ba=d_ba.h_cond,
    )


__all__ = [
    "CorrelationReport",
    "Direction",
    "DiscordTerms",
    "Steering",
    "correlation_report",
    "discord",
    "duan",
    "ent_gain",
    "ent_ppt",
    "entropy_f",
    "optimal_gain_sym",
    "steering",
]
