"""Coupling and nuclear-charge thresholds for enhanced binding.

Binding is certified to increase when the radiative correction R_C exceeds
the self-energy error envelope.  Solving err(alpha) < R_C(alpha) for alpha
and intersecting with the admissibility bound a pi / (4 lambda) gives
alpha_max; on the first branch alpha_max is proportional to (beta Z)^2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .field_kernels import FieldParams, _check_lambda
from .hydrogen import HydrogenModel, radiative_correction
from .self_energy import err_envelope

Z_PHYSICAL_MAX = 137


class Branch(enum.Enum):
    ERROR_VS_CORRECTION = "error_vs_correction"
    APRIORI_CONSTRAINT = "apriori_constraint"


@dataclass(frozen=True)
class ThresholdReport:
    alpha_max: float
    branch: Branch
    coefficient: float
    a_used: float
    z_min: int | None = None

    def as_dict(self) -> dict:
        return {
            "alpha_max": self.alpha_max,
            "branch": self.branch.value,
            "coefficient": self.coefficient,
            "a_used": self.a_used,
            "z_min": self.z_min,
        }


@dataclass(frozen=True)
class ScanRow:
    a: float
    coefficient: float
    branch: Branch


@dataclass(frozen=True)
class Certificate:
    enhanced: bool
    margin: float
    radiative_correction: float
    error: float

    def __bool__(self) -> bool:
        return self.enhanced


def _check_a(a: float) -> float:
    a = float(a)
    if not 0 < a < 1:
        raise ValueError(f"a must lie in (0, 1), got {a}")
    return a


def _error_branch(e0: float, lam: float, a: float) -> float:
    lam2 = lam * lam
    numerator = 16.0 * math.pi / 15.0 * e0 * math.log1p(lam)
    denominator = (28.0 * lam2 * (1.0 + lam2) / (3.0 * math.pi**2 * (1.0 - a))
                   + 7.0 * lam2 / math.pi**2)
    return numerator / denominator


def alpha_max(model: HydrogenModel, lam: float, a: float,
              alpha: float | None = None) -> ThresholdReport:
    """Largest coupling for which R_C provably dominates the error envelope.

    If ``alpha`` is given, the report also carries the smallest physical Z
    that admits it at the resulting coefficient.
    """
    lam = _check_lambda(lam)
    a = _check_a(a)
    first = _error_branch(model.e0, lam, a)
    second = a * math.pi / (4.0 * lam)
    if first <= second:
        value, branch = first, Branch.ERROR_VS_CORRECTION
    else:
        value, branch = second, Branch.APRIORI_CONSTRAINT
    coefficient = value / (model.beta * model.Z) ** 2
    zm = None
    if alpha is not None and branch is Branch.ERROR_VS_CORRECTION:
        zm = z_min(model.beta, alpha, lam, coefficient)
    return ThresholdReport(value, branch, coefficient, a, zm)


def coefficient_scan(model: HydrogenModel, lam: float, grid: Iterable[float]) -> list[ScanRow]:
    """alpha_max / (beta Z)^2 and the active branch for every ``a`` in ``grid``, ascending."""
    values = sorted({_check_a(a) for a in grid})
    if not values:
        raise ValueError("a-grid must be non-empty")
    rows = []
    for a in values:
        rep = alpha_max(model, lam, a)
        rows.append(ScanRow(a, rep.coefficient, rep.branch))
    return rows


def best_row(rows: list[ScanRow]) -> ScanRow:
    """Row maximizing alpha_max; ties go to the smallest a."""
    return max(rows, key=lambda row: (row.coefficient, -row.a))


def default_grid(step: float = 0.01) -> list[float]:
    n = int(round(1.0 / step))
    return [round(i * step, 12) for i in range(1, n)]


def z_min(beta: float, alpha: float, lam: float, coefficient: float) -> int | None:
    """Smallest integer Z in 1..137 with alpha <= coefficient * (beta Z)^2.

    ``lam`` is validated only; it enters through ``coefficient``.  Returns
    None when no physical charge qualifies.
    """
    for name, val in (("beta", beta), ("alpha", alpha), ("coefficient", coefficient)):
        if not val > 0:
            raise ValueError(f"{name} must be positive, got {val}")
    _check_lambda(lam)
    if math.isinf(coefficient):
        return 1
    z = max(1, math.ceil(math.sqrt(alpha / (coefficient * beta * beta))))
    # guard the ceiling against rounding on either side
    while z > 1 and alpha <= coefficient * (beta * (z - 1)) ** 2:
        z -= 1
    while alpha > coefficient * (beta * z) ** 2:
        z += 1
    return z if z <= Z_PHYSICAL_MAX else None


def enhancement_certificate(model: HydrogenModel, params: FieldParams) -> Certificate:
    """Whether R_C (approximate) strictly exceeds the self-energy error envelope."""
    params.check_admissible()
    rc = radiative_correction(model, params)
    err = err_envelope(params)
    return Certificate(bool(rc > err), rc - err, rc, err)


def z_scan(params: FieldParams, beta: float, z_values: Iterable[int] = range(1, Z_PHYSICAL_MAX + 1)):
    """(Z, certificate) for each charge; handy for locating the first enhanced Z."""
    return [(z, enhancement_certificate(HydrogenModel(z, beta), params)) for z in z_values]

