"""Venn-class membership of squeezed-thermal states.

Membership flags are the ground truth. :class:`ClassLabel` flattens them into
a single "strongest class" token, ordered from weakest to strongest. A state
whose defining comparisons fall within ``BOUNDARY_BAND`` of a threshold, in a
way that could change its label, is labelled ``BOUNDARY``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .gaussian_core import CovarianceMatrix, is_physical, require_sts_form
from .measures import Direction, correlation_report

BOUNDARY_BAND = 1e-9


class ClassLabel(str, Enum):
    UNPHYSICAL = "UNPHYSICAL"
    PRODUCT = "PRODUCT"
    DISCORD_ONLY = "DISCORD_ONLY"
    ENTANGLED_PPT_ONLY = "ENTANGLED_PPT_ONLY"
    DUAN_ENTANGLED = "DUAN_ENTANGLED"
    ONE_WAY_STEER_AB = "ONE_WAY_STEER_AB"
    ONE_WAY_STEER_BA = "ONE_WAY_STEER_BA"
    TWO_WAY_STEER = "TWO_WAY_STEER"
    SYMMETRIC_EPR = "SYMMETRIC_EPR"
    BOUNDARY = "BOUNDARY"

    def __str__(self):
        return self.value


class Verdict(str, Enum):
    STEERING = "STEERING"
    ENTANGLEMENT = "ENTANGLEMENT"
    DISCORD_BEYOND_ENTANGLEMENT = "DISCORD_BEYOND_ENTANGLEMENT"

    def __str__(self):
        return self.value


# (name, measure field, threshold): each flag is ``measure < threshold``
COMPARISONS = (
    ("ent_ppt", "ent_ppt", 0.0),
    ("duan", "duan", 1.0),
    ("duan_secure", "duan", 0.5),
    ("e_ab", "e_ab", 1.0),
    ("e_ba", "e_ba", 1.0),
)


@dataclass(frozen=True)
class ClassFlags:
    physical: bool
    product: bool
    discord_ab: bool
    discord_ba: bool
    entangled_ppt: bool
    duan_entangled: bool
    steer_ab: bool
    steer_ba: bool
    two_way_steer: bool
    symmetric_epr: bool
    boundary: frozenset = frozenset()

    def to_dict(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__ if k != "boundary"}
        out["boundary"] = sorted(self.boundary)
        return out


@dataclass(frozen=True)
class UnifiedSignature:
    direction: Direction
    e: float
    steering_bound: float
    entanglement_bound: float
    verdict: Verdict
    boundary: bool

    def to_dict(self) -> dict:
        return {
            "direction": self.direction.value,
            "e": self.e,
            "steering_bound": self.steering_bound,
            "entanglement_bound": self.entanglement_bound,
            "verdict": self.verdict.value,
            "boundary": self.boundary,
        }


def _labels_from(physical, product, below):
    """Strongest-class label for boolean arrays; ``below`` maps comparison -> array."""
    ppt = below["ent_ppt"]
    duan = below["duan"]
    sym = below["duan_secure"]
    sab = below["e_ab"]
    sba = below["e_ba"]
    conditions = [
        ~physical,
        product,
        sym,
        sab & sba,
        sba,
        sab,
        duan,
        ppt,
    ]
    choices = [
        ClassLabel.UNPHYSICAL.value,
        ClassLabel.PRODUCT.value,
        ClassLabel.SYMMETRIC_EPR.value,
        ClassLabel.TWO_WAY_STEER.value,
        ClassLabel.ONE_WAY_STEER_BA.value,
        ClassLabel.ONE_WAY_STEER_AB.value,
        ClassLabel.DUAN_ENTANGLED.value,
        ClassLabel.ENTANGLED_PPT_ONLY.value,
    ]
    return np.select(conditions, choices, default=ClassLabel.DISCORD_ONLY.value)


def classify_arrays(fields: dict, c) -> dict:
    """Vectorised classification of kernel output.

    ``fields`` is the mapping returned by :func:`dircorr.kernels.evaluate`;
    ``c`` the matching correlation array. Returns boolean flag arrays, the
    per-comparison boundary masks (``boundary_<name>``), ``boundary_any`` and
    the ``label`` string array.
    """
    c = np.asarray(c, dtype=float)
    physical = np.asarray(fields["physical"], dtype=bool)
    product = physical & (c == 0.0)
    below = {}
    ambiguous = {}
    with np.errstate(invalid="ignore"):
        for name, field, threshold in COMPARISONS:
            value = np.asarray(fields[field])
            below[name] = physical & (value < threshold)
            ambiguous[name] = physical & ~product & (np.abs(value - threshold) < BOUNDARY_BAND)

    base = _labels_from(physical, product, below)
    any_amb = np.zeros(base.shape, dtype=bool)
    for mask in ambiguous.values():
        any_amb |= mask
    unstable = np.zeros(base.shape, dtype=bool)
    if any_amb.any():
        names = [name for name, _, _ in COMPARISONS]
        for bits in itertools.product((False, True), repeat=len(names)):
            trial = {
                name: np.where(ambiguous[name], bit, below[name]) for name, bit in zip(names, bits)
            }
            unstable |= _labels_from(physical, product, trial) != base
    labels = np.where(unstable, ClassLabel.BOUNDARY.value, base)

    discord = physical & ~product
    out = {
        "physical": physical,
        "product": product,
        "discord_ab": discord,
        "discord_ba": discord.copy(),
        "entangled_ppt": below["ent_ppt"],
        "duan_entangled": below["duan"],
        "steer_ab": below["e_ab"],
        "steer_ba": below["e_ba"],
        "two_way_steer": below["e_ab"] & below["e_ba"],
        "symmetric_epr": below["duan_secure"],
        "boundary_any": any_amb,
        "label": labels,
    }
    for name, mask in ambiguous.items():
        out[f"boundary_{name}"] = mask
    return out


def classify_batch(n, m, c, backend: str | None = None) -> dict:
    """Evaluate and classify arrays of squeezed-thermal ``(n, m, c)``."""
    fields = kernels.evaluate(n, m, c, backend=backend)
    return classify_arrays(fields, np.broadcast_to(np.asarray(c, dtype=float), fields["duan"].shape))


def classify(cm: CovarianceMatrix) -> tuple[ClassFlags, ClassLabel]:
    """Membership flags and strongest-class label of one state."""
    require_sts_form(cm)
    if not is_physical(cm):
        flags = ClassFlags(False, False, False, False, False, False, False, False, False, False)
        return flags, ClassLabel.UNPHYSICAL
    report = correlation_report(cm)
    fields = {
        "physical": np.array([True]),
        "ent_ppt": np.array([report.ent_ppt]),
        "duan": np.array([report.duan]),
        "e_ab": np.array([report.e_ab]),
        "e_ba": np.array([report.e_ba]),
    }
    result = classify_arrays(fields, np.array([cm.c1]))
    boundary = frozenset(
        name for name, _, _ in COMPARISONS if result[f"boundary_{name}"][0]
    )
    flags = ClassFlags(
        physical=True,
        product=bool(result["product"][0]),
        # discord is nonzero for every non-product Gaussian state; the sign of
        # the computed value is unreliable for |c| near rounding level
        discord_ab=bool(result["discord_ab"][0]),
        discord_ba=bool(result["discord_ba"][0]),
        entangled_ppt=bool(result["entangled_ppt"][0]),
        duan_entangled=bool(result["duan_entangled"][0]),
        steer_ab=bool(result["steer_ab"][0]),
        steer_ba=bool(result["steer_ba"][0]),
        two_way_steer=bool(result["two_way_steer"][0]),
        symmetric_epr=bool(result["symmetric_epr"][0]),
        boundary=boundary,
    )
    return flags, ClassLabel(str(result["label"][0]))


def verdicts(e, n, m):
    """Vectorised steering-parameter verdicts for ``E = e``, diagonal ``n`` (inferred) and ``m``."""
    e, n, m = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (e, n, m)))
    bound = (m + n - 1.0) / m
    return np.select(
        [e < 1.0, e < bound],
        [Verdict.STEERING.value, Verdict.ENTANGLEMENT.value],
        default=Verdict.DISCORD_BEYOND_ENTANGLEMENT.value,
    )


def unified_signature(cm: CovarianceMatrix, direction=Direction.AB) -> UnifiedSignature:
    """Read steering, entanglement or discord-only off one steering parameter.

    For ``A|B``: steering if ``E_A|B < 1``, entanglement if
    ``1 <= E_A|B < (m+n-1)/m``, otherwise discord beyond entanglement.
    ``B|A`` uses ``E_B|A`` and the bound ``(m+n-1)/n``.
    """
    require_sts_form(cm)
    direction = Direction.parse(direction)
    n, m, c = cm.n, cm.m, cm.c1
    if direction is Direction.BA:
        n, m = m, n
    e = n - c * c / m
    bound = (m + n - 1.0) / m
    verdict = Verdict(str(verdicts(e, n, m)))
    boundary = abs(e - 1.0) < BOUNDARY_BAND or abs(e - bound) < BOUNDARY_BAND
    return UnifiedSignature(direction, e, 1.0, bound, verdict, boundary)
