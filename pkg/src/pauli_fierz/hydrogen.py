"""Hydrogenic spectrum and dipole data for the radiative binding correction.

The Schroedinger operator is p^2 - Z beta / r (mass 1/2), so the levels are
-e0/n^2 with e0 = (beta Z)^2 / 4 and the Bohr radius is 2 / (beta Z).
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from .field_kernels import FieldParams, _check_lambda
from .numerics import integrate

DEFAULT_BETA = 1.0 / 137.0
SUM_RULE_TARGET = 2.0 / 15.0
# radial integrals are cut at this many Bohr radii; the 1s factor makes the tail < 1e-14
R_MAX_BOHR = 50.0


def default_beta() -> float:
    """Physical fine-structure constant, overridable through ``PF_BETA``."""
    raw = os.environ.get("PF_BETA")
    if raw is None or raw.strip() == "":
        return DEFAULT_BETA
    value = float(raw)
    if not value > 0:
        raise ValueError(f"PF_BETA must be positive, got {raw!r}")
    return value


@dataclass(frozen=True)
class HydrogenModel:
    Z: int = 1
    beta: float = DEFAULT_BETA

    def __post_init__(self):
        if isinstance(self.Z, bool) or int(self.Z) != self.Z or self.Z < 1:
            raise ValueError(f"Z must be a positive integer, got {self.Z!r}")
        object.__setattr__(self, "Z", int(self.Z))
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    @property
    def e0(self) -> float:
        return (self.beta * self.Z) ** 2 / 4.0

    @property
    def p_phi_sq(self) -> float:
        # virial theorem for the Coulomb ground state: <p^2> = e0
        return self.e0

    @property
    def bohr_radius(self) -> float:
        return 2.0 / (self.beta * self.Z)


@dataclass(frozen=True)
class DipoleSpectrum:
    coefficients: tuple[tuple[int, float], ...]
    partial_sum: float
    target: float = SUM_RULE_TARGET

    @property
    def n_max(self) -> int:
        return self.coefficients[-1][0]

    @property
    def relative_gap(self) -> float:
        return (self.partial_sum - self.target) / self.target


class CorrectionMode(enum.Enum):
    APPROX = "approx"
    SPECTRAL = "spectral"


def level_energy(model: HydrogenModel, n: int) -> float:
    """Binding energy e_n = e0 / n^2 of level ``n`` (the eigenvalue is -e_n)."""
    if int(n) != n or n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n!r}")
    return model.e0 / (n * n)


def radial_function(n: int, l: int, r, model: HydrogenModel):
    """Normalized hydrogenic R_nl(r) for the model's charge, r in the model's length unit."""
    if not 0 <= l < n:
        raise ValueError(f"need 0 <= l < n, got n={n}, l={l}")
    a = model.bohr_radius
    rho = 2.0 * np.asarray(r, dtype=float) / (n * a)
    log_norm = 0.5 * (3 * math.log(2.0 / (n * a)) + gammaln(n - l) - math.log(2 * n) - gammaln(n + l + 1))
    return math.exp(log_norm) * np.exp(-rho / 2) * rho**l * eval_genlaguerre(n - l - 1, 2 * l + 1, rho)


def dipole_coefficient(model: HydrogenModel, n: int) -> float:
    """c_n = int phi_{n10} phi_{100} cos(theta) r^2 dr dOmega.

    Only l = 1, m = 0 states couple; the angular factor is 1/sqrt(3).  The
    sign convention makes every c_n non-negative.
    """
    if int(n) != n or n < 2:
        raise ValueError(f"dipole coefficient needs n >= 2, got {n!r}")
    r_max = R_MAX_BOHR * model.bohr_radius
    res = integrate(lambda r: radial_function(n, 1, r, model) * radial_function(1, 0, r, model) * r * r,
                    (0.0, r_max), rel_tol=1e-12, abs_tol=1e-15, vectorized=True)
    return abs(res.value) / math.sqrt(3.0)


def sum_rule_partial(model: HydrogenModel, n_max: int) -> DipoleSpectrum:
    """Bound-state partial sum of |c_n|^2 for n = 2 .. n_max."""
    if int(n_max) != n_max or n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max!r}")
    coeffs = tuple((n, dipole_coefficient(model, n)) for n in range(2, n_max + 1))
    return DipoleSpectrum(coeffs, math.fsum(c * c for _, c in coeffs))


def excitation_integral(lam: float, gap: float) -> float:
    """int_0^lambda p / (gap + p^2 + p) dp; equals ln(1 + lambda) at zero gap."""
    lam = _check_lambda(lam)
    if gap < 0:
        raise ValueError(f"excitation gap must be >= 0, got {gap}")
    return integrate(lambda p: p / (gap + p * p + p), (0.0, lam), vectorized=True).value


def radiative_correction(model: HydrogenModel, params: FieldParams,
                         mode: CorrectionMode | str = CorrectionMode.APPROX,
                         n_max: int = 20, sum_rule: float | None = None,
                         zero_gap: bool = False) -> float:
    """First-order increase R_C of the binding energy.

    ``approx``: alpha e0 (32 pi / 15) ln(1 + lambda).
    ``spectral``: 16 pi alpha e0 sum_n |c_n|^2 int_0^lambda p / (e0 - e_n + p^2 + p) dp
    over bound p-states n = 2 .. n_max.  Passing ``sum_rule`` replaces the
    computed coefficients by that frozen total at zero gap; ``zero_gap`` drops
    the level gaps while keeping the computed coefficients.
    """
    mode = CorrectionMode(mode)
    alpha, lam = params.alpha, params.lam
    e0 = model.e0
    if mode is CorrectionMode.APPROX:
        return alpha * e0 * (32.0 * math.pi / 15.0) * math.log1p(lam)
    if sum_rule is not None:
        return 16.0 * math.pi * alpha * e0 * sum_rule * excitation_integral(lam, 0.0)
    spectrum = sum_rule_partial(model, n_max)
    total = math.fsum(
        c * c * excitation_integral(lam, 0.0 if zero_gap else e0 - level_energy(model, n))
        for n, c in spectrum.coefficients)
    return 16.0 * math.pi * alpha * e0 * total


def binding_gain_upper(model: HydrogenModel, params: FieldParams) -> float:
    """||p phi||^2 (32 pi / 3) ln(1 + lambda), per unit coupling."""
    return model.p_phi_sq * (32.0 * math.pi / 3.0) * math.log1p(params.lam)
