"""Self-energy of a free electron: leading order, upper bound, error envelope.

``sigma_secular`` goes one step beyond the fixed one-photon trial state: it
diagonalizes the Hamiltonian restricted to vacuum (+) one photon at zero
electron momentum.  The photon amplitude is then optimal rather than fixed,
and the lowest eigenvalue solves a scalar secular equation.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .field_kernels import (
    FieldParams,
    _lam_minus_log1p,
    dd_commutator,
    e_field_integral,
)
from .numerics import BracketError, find_root, integrate

# the a-priori estimates fix the second splitting constant at c = 2/pi
SPLIT_C = 2.0 / math.pi


@dataclass(frozen=True)
class SelfEnergyReport:
    alpha: float
    lam: float
    a: float
    leading: float
    thm1_upper: float
    err_envelope: float
    secular_value: float
    kinetic_apriori: float
    field_apriori: float

    def as_dict(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lam")
        return {"alpha": out.pop("alpha"), "lambda": out.pop("lambda"), **out}


def sigma_leading(params: FieldParams) -> float:
    """2 (alpha/pi) (lambda - ln(1 + lambda))."""
    return 2.0 * params.alpha / math.pi * _lam_minus_log1p(params.lam)


def sigma_upper_bound(params: FieldParams) -> float:
    """Variational upper bound: leading order + 2 alpha^2 lambda^2 ln(1 + lambda) / pi^2."""
    alpha, lam = params.alpha, params.lam
    return sigma_leading(params) + 2.0 / math.pi**2 * alpha**2 * lam**2 * math.log1p(lam)


def _secular_weight(lam: float, shift: float, rel_tol: float) -> float:
    # 4 pi int |H|^2 k^2 / (k^2 + k - shift) dk = (2/pi) int k^3 / (k^2 + k - shift) dk
    res = integrate(lambda k: k * k * k / (k * k + k - shift), (0.0, lam),
                    rel_tol=rel_tol, abs_tol=1e-300, vectorized=True)
    return 2.0 / math.pi * res.value


def sigma_secular(params: FieldParams, tol: float = 1e-12, margin: float = 0.5) -> float:
    """Lowest eigenvalue of the vacuum (+) one-photon restriction at zero momentum.

    Solves  shift = -alpha * (2/pi) int_0^lambda k^3 / (k^2 + k - shift) dk  for
    shift <= 0 and returns alpha*lambda^2/pi + shift.  ``tol`` is relative to
    the first-order shift alpha * e_field_integral.
    """
    alpha, lam = params.alpha, params.lam
    if alpha == 0:
        return 0.0
    first_order = alpha * e_field_integral(lam)
    rel = min(1e-12, tol)

    def secular(shift: float) -> float:
        return shift + alpha * _secular_weight(lam, shift, rel)

    lo = -first_order * (1.0 + margin)
    try:
        shift = find_root(secular, (lo, 0.0), tol=tol * first_order)
    except BracketError as exc:
        raise BracketError(f"secular equation not bracketed on [{lo:.6g}, 0]: {exc}") from exc
    return alpha * dd_commutator(lam) + shift


def err_envelope(params: FieldParams) -> float:
    """alpha^2 [56 lambda^2 (1 + lambda^2) / (3 pi^2 (1 - a)) + 14 lambda^2 / pi^2]."""
    alpha, lam, a = params.alpha, params.lam, params.a
    lam2 = lam * lam
    return alpha**2 * (56.0 * lam2 * (1.0 + lam2) / (3.0 * math.pi**2 * (1.0 - a))
                       + 14.0 * lam2 / math.pi**2)


def apriori_bounds(params: FieldParams) -> tuple[float, float]:
    """(field energy bound, kinetic energy bound) for an approximate ground state.

    Field: <H_f> <= 2 alpha lambda / pi (lambda <= 1 simplification).
    Kinetic: ||p Psi||^2 <= 2 alpha lambda (1 + lambda^2) / (pi (1 - a)).
    Raises ConstraintError unless alpha <= a pi / (4 lambda).
    """
    params.check_admissible()
    alpha, lam, a = params.alpha, params.lam, params.a
    field = 2.0 * alpha * lam / math.pi
    kinetic = 2.0 * alpha * lam * (1.0 + lam * lam) / (math.pi * (1.0 - a))
    return field, kinetic


def self_energy_report(params: FieldParams, tol: float = 1e-12) -> SelfEnergyReport:
    field, kinetic = apriori_bounds(params)
    return SelfEnergyReport(
        alpha=params.alpha,
        lam=params.lam,
        a=params.a,
        leading=sigma_leading(params),
        thm1_upper=sigma_upper_bound(params),
        err_envelope=err_envelope(params),
        secular_value=sigma_secular(params, tol=tol),
        kinetic_apriori=kinetic,
        field_apriori=field,
    )
