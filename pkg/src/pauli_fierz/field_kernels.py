"""Photon form factors and the closed-form one-photon field integrals.

Units: hbar = c = 1, electron mass 1/2.  The ultraviolet cutoff is the sharp
indicator chi(k) = 1 for |k| <= lambda.  Polarizations and spin are summed
out analytically, so every object here is a radial density in |k|, and all
3D momentum integrals reduce to 4*pi * int_0^lambda (...) k^2 dk.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .numerics import DEFAULT_ABS_TOL, DEFAULT_REL_TOL, integrate

TWO_PI_SQ = 2.0 * math.pi**2


class ConstraintError(ValueError):
    """Parameters violate a validity condition of an estimate (e.g. alpha <= a*pi/(4*lambda))."""


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not (lam > 0 and math.isfinite(lam)):
        raise ValueError(f"cutoff lambda must be positive and finite, got {lam}")
    return lam


@dataclass(frozen=True)
class FieldParams:
    """Coupling ``alpha``, cutoff ``lam`` and the estimate-splitting parameter ``a``."""

    alpha: float
    lam: float
    a: float = 0.5

    def __post_init__(self):
        if not (self.alpha >= 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        _check_lambda(self.lam)
        if not 0 < self.a < 1:
            raise ValueError(f"a must lie in (0, 1), got {self.a}")

    @property
    def alpha_admissible(self) -> float:
        """Largest coupling for which the a-priori kinetic estimate holds."""
        return self.a * math.pi / (4.0 * self.lam)

    def check_admissible(self) -> None:
        if self.alpha > self.alpha_admissible:
            raise ConstraintError(
                f"alpha={self.alpha:.9g} exceeds the admissible bound "
                f"a*pi/(4*lambda)={self.alpha_admissible:.9g} (a={self.a}, lambda={self.lam})")


class ProfileKind(enum.Enum):
    G_SQUARED = "G_squared"   # vector potential, |G(k)|^2 = chi/(2 pi^2 k)
    H_SQUARED = "H_squared"   # magnetic field,   |H(k)|^2 = chi k/(2 pi^2)


@dataclass(frozen=True)
class RadialProfile:
    kind: ProfileKind
    lam: float

    def __post_init__(self):
        _check_lambda(self.lam)

    def __call__(self, k):
        return profile_value(self, k)


def profile_value(profile: RadialProfile, k):
    """Polarization-summed squared form factor at momentum ``k`` (scalar or array)."""
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 0):
        raise ValueError("momentum must be non-negative")
    inside = k_arr <= profile.lam
    if profile.kind is ProfileKind.G_SQUARED:
        with np.errstate(divide="ignore"):
            out = np.where(inside & (k_arr > 0), 1.0 / (TWO_PI_SQ * np.where(k_arr > 0, k_arr, 1.0)), 0.0)
    else:
        out = np.where(inside, k_arr / TWO_PI_SQ, 0.0)
    return float(out) if out.ndim == 0 else out


# -- closed forms and their quadrature oracles -------------------------------

def e_field_integral(lam: float) -> float:
    """<0| E (p^2 + H_f)^-1 E* |0> = (lambda^2 - 2(lambda - ln(1 + lambda))) / pi."""
    lam = _check_lambda(lam)
    # lambda - log1p(lambda) loses digits for small lambda; use the series there
    return (lam * lam - 2.0 * _lam_minus_log1p(lam)) / math.pi


def e_field_integral_quad(lam: float, rel_tol: float = DEFAULT_REL_TOL,
                          abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """Same quantity from 4 pi int |H|^2 / (k^2 + k) k^2 dk by quadrature."""
    lam = _check_lambda(lam)
    prof = RadialProfile(ProfileKind.H_SQUARED, lam)
    res = integrate(lambda k: 4 * math.pi * prof(k) * k * k / (k * k + k), (0.0, lam),
                    rel_tol, abs_tol, vectorized=True)
    return res.value


def dd_commutator(lam: float) -> float:
    """[D, D*] = lambda^2 / pi, the vacuum fluctuation <0|A^2|0>."""
    lam = _check_lambda(lam)
    return lam * lam / math.pi


def dd_commutator_quad(lam: float, rel_tol: float = DEFAULT_REL_TOL,
                       abs_tol: float = DEFAULT_ABS_TOL) -> float:
    lam = _check_lambda(lam)
    prof = RadialProfile(ProfileKind.G_SQUARED, lam)
    res = integrate(lambda k: 4 * math.pi * prof(k) * k * k, (0.0, lam),
                    rel_tol, abs_tol, vectorized=True)
    return res.value


def _lam_minus_log1p(lam: float) -> float:
    if lam < 1e-3:
        # lam - ln(1+lam) = lam^2/2 - lam^3/3 + lam^4/4 - ...
        return sum((-1) ** n * lam**n / n for n in range(2, 12))
    return lam - math.log1p(lam)


_LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _LEVI_CIVITA[_i, _j, _k] = 1.0
    _LEVI_CIVITA[_i, _k, _j] = -1.0


def _sphere_rule(n_theta: int = 16, n_phi: int = 32):
    """Gauss-Legendre in cos(theta) times the periodic trapezoid rule in phi.

    Exact for polynomials in the unit vector components of total degree
    below 2*n_theta (and below n_phi in the azimuthal frequency).
    """
    x, w = np.polynomial.legendre.leggauss(n_theta)
    phi = 2 * math.pi * np.arange(n_phi) / n_phi
    sin_t = np.sqrt(1 - x * x)
    nx = np.outer(sin_t, np.cos(phi)).ravel()
    ny = np.outer(sin_t, np.sin(phi)).ravel()
    nz = np.repeat(x, n_phi)
    weights = np.repeat(w, n_phi) * (2 * math.pi / n_phi)
    return np.stack([nx, ny, nz], axis=1), weights


def gh_cross_integral(lam: float, i: int, j: int) -> float:
    """Polarization-summed cross term  sum_l int G_i(k) H_j(k) / (k^2 + k) d^3k.

    The integrand is (chi/(4 pi^2)) [delta_il - k_i k_l/k^2] eps_jln k_n / (k^3 + k^2)
    times -i.  The radial factor is int_0^lambda k/(k+1) dk; the angular part
    is integrated numerically over the sphere.  Returns the coefficient of -i,
    which vanishes identically.  ``i`` and ``j`` are 1-based axis indices.
    """
    lam = _check_lambda(lam)
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError(f"axis indices must be in {{1, 2, 3}}, got ({i}, {j})")
    ii, jj = i - 1, j - 1
    nhat, weights = _sphere_rule()
    # transverse projector row i, contracted with eps_{j l n} n_n
    proj = np.eye(3)[ii][None, :] - nhat[:, ii:ii + 1] * nhat
    curl = np.einsum("ln,qn->ql", _LEVI_CIVITA[jj], nhat)
    angular = float(weights @ np.sum(proj * curl, axis=1))
    radial = integrate(lambda k: k / (k + 1.0), (0.0, lam), vectorized=True).value
    return radial * angular / (4 * math.pi**2)


# -- one-photon operator inequalities ---------------------------------------

class InequalityKind(enum.Enum):
    DSTAR_D = "DstarD"
    ESTAR_E = "EstarE"
    NORM_D = "normD"
    NORM_E = "normE"

    @property
    def profile(self) -> ProfileKind:
        if self in (InequalityKind.DSTAR_D, InequalityKind.NORM_D):
            return ProfileKind.G_SQUARED
        return ProfileKind.H_SQUARED


def inequality_bound(kind: InequalityKind, lam: float) -> float:
    """Constant C with X*X <= C H_f: 2 lambda/pi for D-type, 2 lambda^3/(3 pi) for E-type."""
    lam = _check_lambda(lam)
    if kind.profile is ProfileKind.G_SQUARED:
        return 2 * lam / math.pi
    return 2 * lam**3 / (3 * math.pi)


def extremal_amplitude(kind: InequalityKind, lam: float) -> Callable:
    """The Cauchy-Schwarz optimizer psi(k) = |form factor|(k) / k."""
    prof = RadialProfile(kind.profile, lam)
    return lambda k: np.sqrt(prof(k)) / k


def operator_inequality_ratio(kind: InequalityKind, psi: Callable, lam: float,
                              support: float | None = None) -> float:
    """<psi| X* X |psi> / <psi| H_f |psi> for a radial one-photon amplitude ``psi``.

    ``psi`` is a vectorized callable on k > 0, supported on [0, support]
    (default: the cutoff).  X annihilates the photon into the vacuum, so the
    numerator is |4 pi int x(k) psi(k) k^2 dk|^2 with x the square root of the
    matching form-factor density.
    """
    lam = _check_lambda(lam)
    kind = InequalityKind(kind)
    upper = lam if support is None else float(support)
    prof = RadialProfile(kind.profile, lam)
    overlap = integrate(lambda k: 4 * math.pi * np.sqrt(prof(k)) * psi(k) * k * k,
                        (0.0, min(lam, upper)), vectorized=True).value
    energy = integrate(lambda k: 4 * math.pi * k * np.abs(psi(k)) ** 2 * k * k,
                       (0.0, upper), vectorized=True).value
    if energy <= 0:
        raise ZeroDivisionError("amplitude carries no field energy")
    return overlap * overlap / energy
