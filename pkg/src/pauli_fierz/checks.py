"""Oracle-equivalence checks run by ``pauli-fierz verify``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .field_kernels import (
    FieldParams,
    InequalityKind,
    dd_commutator,
    dd_commutator_quad,
    e_field_integral,
    e_field_integral_quad,
    extremal_amplitude,
    gh_cross_integral,
    inequality_bound,
    operator_inequality_ratio,
)
from .hydrogen import HydrogenModel, dipole_coefficient, radiative_correction, SUM_RULE_TARGET
from .self_energy import sigma_leading, sigma_secular, sigma_upper_bound
from .threshold import z_min

ORACLE_LAMBDAS = (0.1, 0.25, 1.0, 4.0, 10.0)
CROSS_LAMBDAS = (0.25, 1.0, 5.0)
AMPLITUDE_SEED = 20240617


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def random_amplitudes(lam: float, count: int = 100, seed: int = AMPLITUDE_SEED) -> list[Callable]:
    """Seeded one-photon radial amplitudes sum_j c_j k^m_j exp(-b_j k / lambda).

    Exponents m_j > -2 keep <H_f> = 4 pi int k^3 |psi|^2 dk finite.  Each
    amplitude lives on [0, 1.5 lambda], partly beyond the cutoff.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        terms = int(rng.integers(1, 5))
        c = rng.normal(size=terms)
        m = rng.uniform(-1.4, 2.0, size=terms)
        b = rng.uniform(0.0, 4.0, size=terms)

        def psi(k, c=c, m=m, b=b):
            k = np.asarray(k, dtype=float)[..., None]
            return np.sum(c * k**m * np.exp(-b * k / lam), axis=-1)

        out.append(psi)
    return out


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def check_field_oracles() -> list[Check]:
    checks = []
    worst_e = max(_rel(e_field_integral(L), e_field_integral_quad(L)) for L in ORACLE_LAMBDAS)
    checks.append(Check("e_field_integral closed form == quadrature", worst_e <= 1e-9,
                        f"max rel diff {worst_e:.3g} over lambda in {ORACLE_LAMBDAS}"))
    worst_d = max(_rel(dd_commutator(L), dd_commutator_quad(L)) for L in ORACLE_LAMBDAS)
    checks.append(Check("dd_commutator closed form == quadrature", worst_d <= 1e-9,
                        f"max rel diff {worst_d:.3g} over lambda in {ORACLE_LAMBDAS}"))
    worst_x = max(abs(gh_cross_integral(L, i, j))
                  for L in CROSS_LAMBDAS for i in (1, 2, 3) for j in (1, 2, 3))
    checks.append(Check("gh_cross_integral vanishes", worst_x < 1e-12,
                        f"max |value| {worst_x:.3g} over 9 index pairs, lambda in {CROSS_LAMBDAS}"))
    return checks


def check_cancellation(pairs: int = 20) -> Check:
    rng = np.random.default_rng(AMPLITUDE_SEED)
    worst = 0.0
    for alpha, lam in zip(rng.uniform(1e-4, 0.1, pairs), np.exp(rng.uniform(math.log(0.05), math.log(20), pairs))):
        lhs = alpha * dd_commutator(lam) - alpha * e_field_integral(lam)
        worst = max(worst, _rel(lhs, sigma_leading(FieldParams(float(alpha), float(lam)))))
    return Check("alpha[D,D*] - alpha<E A^-1 E*> == leading order", bool(worst <= 1e-12),
                 f"max rel diff {worst:.3g} over {pairs} (alpha, lambda) pairs")


def check_operator_inequalities(lam: float = 1.0) -> list[Check]:
    checks = []
    amplitudes = random_amplitudes(lam)
    for kind in InequalityKind:
        bound = inequality_bound(kind, lam)
        worst = max(operator_inequality_ratio(kind, psi, lam, support=1.5 * lam) for psi in amplitudes)
        extremal = operator_inequality_ratio(kind, extremal_amplitude(kind, lam), lam)
        ok = worst <= bound + 1e-9 and extremal >= 0.999 * bound
        checks.append(Check(f"{kind.value} <= {bound:.6g} H_f", ok,
                            f"max random ratio {worst:.6g}, extremal {extremal:.9g}"))
    return checks


def check_secular(lam: float = 1.0) -> list[Check]:
    alphas = np.array([1e-4, 3e-4, 1e-3, 3e-3, 1e-2])
    params = [FieldParams(float(a), lam) for a in alphas]
    sec = np.array([sigma_secular(p) for p in params])
    lead = np.array([sigma_leading(p) for p in params])
    upper = np.array([sigma_upper_bound(p) for p in params])
    slope = float(np.polyfit(np.log(alphas), np.log(sec - lead), 1)[0])
    return [
        Check("secular - leading is O(alpha^2)", abs(slope - 2.0) <= 0.1, f"log-log slope {slope:.4f}"),
        Check("secular <= upper bound", bool(np.all(sec <= upper + 1e-12)),
              f"max(secular - upper) {float(np.max(sec - upper)):.3g}"),
    ]


def check_hydrogen() -> list[Check]:
    c2 = dipole_coefficient(HydrogenModel(1), 2)
    exact = 96.0 / (81.0 * math.sqrt(18.0))
    model = HydrogenModel(13)
    params = FieldParams(1 / 137, 0.25)
    approx = radiative_correction(model, params, "approx")
    frozen = radiative_correction(model, params, "spectral", sum_rule=SUM_RULE_TARGET)
    return [
        Check("c_2 matches the analytic radial integral", abs(c2 - exact) <= 1e-12, f"c_2 = {c2:.12g}"),
        Check("spectral R_C with frozen 2/15 == approximate R_C", _rel(frozen, approx) <= 1e-12,
              f"rel diff {_rel(frozen, approx):.3g}"),
    ]


def check_threshold() -> Check:
    z = z_min(1 / 137, 1 / 137, 0.25, 0.85)
    return Check("z_min(alpha = beta = 1/137, coefficient 0.85) == 13", z == 13, f"z_min = {z}")


def run_all() -> list[Check]:
    checks = check_field_oracles()
    checks.append(check_cancellation())
    checks.extend(check_operator_inequalities())
    checks.extend(check_secular())
    checks.extend(check_hydrogen())
    checks.append(check_threshold())
    return checks
