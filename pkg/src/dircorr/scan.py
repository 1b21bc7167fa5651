"""Parameter-grid sweeps producing contour-ready fields and class labels.

Two grid modes:

``STS_NOISE_GRID``
    fixed squeezing ``r``, axes ``nA`` (first, slowest) and ``nB``.
``RAW_NM_GRID``
    fixed correlation ``c``, axes ``n`` and ``m`` of the CM directly; cells
    violating the uncertainty principle are labelled ``UNPHYSICAL``.

Cells are stored row-major with the first axis slowest. Output is
deterministic for a given spec regardless of ``workers``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import kernels
from .classify import ClassLabel, classify_arrays
from .errors import ScanSpecError
from .gaussian_core import sts_entries


class ScanMode(str, Enum):
    STS_NOISE_GRID = "STS_NOISE_GRID"
    RAW_NM_GRID = "RAW_NM_GRID"


# quantity token -> kernel field
QUANTITY_FIELDS = {
    "ENT_PPT": "ent_ppt",
    "DUAN": "duan",
    "E_AB": "e_ab",
    "E_BA": "e_ba",
    "D_AB": "d_ab",
    "D_BA": "d_ba",
    "S_COND": "s_cond_ab",
    "H_COND": "h_cond_ab",
}
QUANTITIES = (*QUANTITY_FIELDS, "LABEL")
AXIS_NAMES = {
    ScanMode.STS_NOISE_GRID: ("nA", "nB"),
    ScanMode.RAW_NM_GRID: ("n", "m"),
}
FIXED_NAME = {ScanMode.STS_NOISE_GRID: "r", ScanMode.RAW_NM_GRID: "c"}


@dataclass(frozen=True)
class Axis:
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ScanSpecError(f"axis range [{lo}, {hi}] is not finite")
        if not lo < hi:
            raise ScanSpecError(f"axis range needs lo < hi, got [{lo}, {hi}]")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ScanSpecError(f"axis needs an integer step count >= 2, got {self.steps!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "steps", int(self.steps))

    @classmethod
    def parse(cls, text: str) -> Axis:
        """Parse ``lo:hi:steps``."""
        parts = str(text).split(":")
        if len(parts) != 3:
            raise ScanSpecError(f"axis {text!r} is not of the form lo:hi:steps")
        try:
            lo, hi = float(parts[0]), float(parts[1])
            steps = int(parts[2])
        except ValueError as exc:
            raise ScanSpecError(f"axis {text!r}: {exc}") from None
        return cls(lo, hi, steps)

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)

    @property
    def width(self) -> float:
        return (self.hi - self.lo) / (self.steps - 1)


@dataclass(frozen=True)
class ScanSpec:
    mode: ScanMode
    fixed: float
    axis1: Axis
    axis2: Axis
    quantities: tuple = QUANTITIES

    def __post_init__(self):
        try:
            mode = ScanMode(self.mode)
        except ValueError:
            raise ScanSpecError(f"unknown scan mode {self.mode!r}") from None
        object.__setattr__(self, "mode", mode)
        fixed = float(self.fixed)
        if not math.isfinite(fixed):
            raise ScanSpecError(f"fixed parameter {fixed!r} is not finite")
        if mode is ScanMode.STS_NOISE_GRID and (fixed < 0.0 or self.axis1.lo < 0.0 or self.axis2.lo < 0.0):
            raise ScanSpecError("squeezing and thermal occupations must be non-negative")
        object.__setattr__(self, "fixed", fixed)
        quantities = tuple(str(q).upper() for q in self.quantities)
        unknown = [q for q in quantities if q not in QUANTITIES]
        if unknown or not quantities:
            raise ScanSpecError(f"unknown quantities {unknown}; choose from {list(QUANTITIES)}")
        object.__setattr__(self, "quantities", tuple(dict.fromkeys(quantities)))

    @property
    def axis_names(self) -> tuple[str, str]:
        return AXIS_NAMES[self.mode]

    @property
    def scalar_quantities(self) -> tuple[str, ...]:
        return tuple(q for q in self.quantities if q != "LABEL")

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "fixed": self.fixed,
            "axis1": {"lo": self.axis1.lo, "hi": self.axis1.hi, "steps": self.axis1.steps},
            "axis2": {"lo": self.axis2.lo, "hi": self.axis2.hi, "steps": self.axis2.steps},
            "quantities": list(self.quantities),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ScanSpec:
        try:
            axes = [Axis(**data[key]) if isinstance(data[key], dict) else Axis.parse(data[key])
                    for key in ("axis1", "axis2")]
            return cls(
                mode=data["mode"],
                fixed=data["fixed"],
                axis1=axes[0],
                axis2=axes[1],
                quantities=tuple(data.get("quantities", QUANTITIES)),
            )
        except (KeyError, TypeError) as exc:
            raise ScanSpecError(f"malformed scan spec: {exc!r}") from None


@dataclass
class ScanResult:
    spec: ScanSpec
    axis1: np.ndarray
    axis2: np.ndarray
    n: np.ndarray
    m: np.ndarray
    c: np.ndarray
    physical: np.ndarray
    values: dict
    labels: np.ndarray
    boundary_count: int
    unphysical_count: int
    failures: list = field(default_factory=list)

    @property
    def shape(self) -> tuple[int, int]:
        return self.labels.shape

    def __len__(self):
        return self.labels.size

    def records(self):
        """Yield one dict per cell, row-major; unphysical cells carry ``None`` values."""
        name1, name2 = self.spec.axis_names
        for i, a in enumerate(self.axis1):
            for j, b in enumerate(self.axis2):
                rec = {name1: float(a), name2: float(b)}
                for q in self.spec.scalar_quantities:
                    v = self.values[q][i, j]
                    rec[q] = None if math.isnan(v) else float(v)
                rec["label"] = str(self.labels[i, j])
                yield rec


def _evaluate_chunked(n, m, c, workers: int, backend):
    flat = [np.ascontiguousarray(x.ravel()) for x in (n, m, c)]
    if workers <= 1:
        table = kernels.evaluate_matrix(*flat, backend=backend)
    else:
        bounds = np.linspace(0, flat[0].size, workers + 1).astype(int)
        pieces = [(lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda span: kernels.evaluate_matrix(*(x[span[0]:span[1]] for x in flat), backend=backend),
                pieces,
            ))
        table = np.concatenate(parts, axis=0)
    fields = {name: table[:, k].reshape(n.shape) for k, name in enumerate(kernels.FIELDS)}
    fields["physical"] = fields["physical"].astype(bool)
    return fields


def run_scan(spec: ScanSpec, workers: int = 1, backend: str | None = None) -> ScanResult:
    """Evaluate the requested quantities on every grid cell."""
    a1 = spec.axis1.values()
    a2 = spec.axis2.values()
    g1, g2 = np.meshgrid(a1, a2, indexing="ij")
    if spec.mode is ScanMode.STS_NOISE_GRID:
        n, m, c = sts_entries(spec.fixed, g1, g2)
        c = np.broadcast_to(c, g1.shape).copy()
    else:
        n, m = g1.copy(), g2.copy()
        c = np.full(g1.shape, spec.fixed)

    fields = _evaluate_chunked(n, m, c, max(1, int(workers)), backend)
    physical = fields["physical"]
    classes = classify_arrays(fields, c)
    labels = classes["label"]

    values = {}
    for q in spec.scalar_quantities:
        values[q] = np.where(physical, fields[QUANTITY_FIELDS[q]], np.nan)

    failures = []
    for q, arr in values.items():
        bad = physical & ~np.isfinite(arr)
        for i, j in zip(*np.nonzero(bad)):
            failures.append((int(i), int(j), f"{q} is not finite"))
    failures.sort()

    return ScanResult(
        spec=spec,
        axis1=a1,
        axis2=a2,
        n=n,
        m=m,
        c=c,
        physical=physical,
        values=values,
        labels=labels,
        boundary_count=int(np.count_nonzero(labels == ClassLabel.BOUNDARY.value)),
        unphysical_count=int(np.count_nonzero(~physical)),
        failures=failures,
    )


def extract_boundary(result: ScanResult, quantity: str, level: float) -> list[tuple[float, float]]:
    """Points where a scanned field crosses ``level``, by linear interpolation on grid edges.

    Cells are visited row-major; for each cell the crossing on the edge to its
    first-axis neighbour is emitted before the one to its second-axis
    neighbour. Edges touching a NaN value are skipped.
    """
    quantity = str(quantity).upper()
    if quantity not in result.values:
        raise KeyError(f"quantity {quantity!r} was not scanned")
    level = float(level)
    if not math.isfinite(level):
        raise ValueError("level must be finite")
    field_ = result.values[quantity] - level
    a1, a2 = result.axis1, result.axis2
    points = []
    rows, cols = field_.shape
    for i in range(rows):
        for j in range(cols):
            v = field_[i, j]
            if math.isnan(v):
                continue
            if i + 1 < rows:
                w = field_[i + 1, j]
                if _crosses(v, w):
                    t = v / (v - w)
                    points.append((a1[i] + t * (a1[i + 1] - a1[i]), float(a2[j])))
            if j + 1 < cols:
                w = field_[i, j + 1]
                if _crosses(v, w):
                    t = v / (v - w)
                    points.append((float(a1[i]), a2[j] + t * (a2[j + 1] - a2[j])))
    return [(float(x), float(y)) for x, y in points]


def _crosses(v: float, w: float) -> bool:
    if math.isnan(w):
        return False
    return (v < 0.0 <= w) or (w < 0.0 <= v)


def _fmt(value) -> str:
    value = float(value)
    return format(value if value != 0.0 else 0.0, ".12g")


def to_csv(result: ScanResult) -> str:
    """CSV with header ``<axis1>,<axis2>,<quantities...>,label``; empty fields for missing values."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    name1, name2 = result.spec.axis_names
    writer.writerow([name1, name2, *result.spec.scalar_quantities, "label"])
    for rec in result.records():
        row = [_fmt(rec[name1]), _fmt(rec[name2])]
        row += ["" if rec[q] is None else _fmt(rec[q]) for q in result.spec.scalar_quantities]
        row.append(rec["label"])
        writer.writerow(row)
    return buf.getvalue()


def _round12(value):
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return None
    return float(_fmt(value))


def to_json_dict(result: ScanResult) -> dict:
    name1, name2 = result.spec.axis_names
    return {
        "spec": result.spec.to_dict(),
        "shape": list(result.shape),
        "axes": {
            name1: [_round12(v) for v in result.axis1],
            name2: [_round12(v) for v in result.axis2],
        },
        "quantities": {
            q: [_round12(v) for v in result.values[q].ravel()]
            for q in result.spec.scalar_quantities
        },
        "labels": [str(v) for v in result.labels.ravel()],
        "counts": {
            "cells": len(result),
            "boundary": result.boundary_count,
            "unphysical": result.unphysical_count,
        },
        "failures": [{"index": [i, j], "message": msg} for i, j, msg in result.failures],
    }


def to_json(result: ScanResult) -> str:
    return json.dumps(to_json_dict(result), indent=None, separators=(",", ":")) + "\n"
