"""Command-line front end.

    pauli-fierz self-energy --alpha 0.01 --lambda 1 --format json
    pauli-fierz threshold --Z 13 --lambda 0.25 --scan-a
    pauli-fierz verify
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import checks
from .field_kernels import (
    ConstraintError,
    FieldParams,
    dd_commutator,
    dd_commutator_quad,
    e_field_integral,
    e_field_integral_quad,
    gh_cross_integral,
)
from .hydrogen import (
    HydrogenModel,
    binding_gain_upper,
    default_beta,
    level_energy,
    radiative_correction,
    sum_rule_partial,
)
from .numerics import BracketError, QuadratureError
from .output import FORMATS, render
from .self_energy import err_envelope, self_energy_report, sigma_leading, sigma_upper_bound
from .threshold import alpha_max, best_row, coefficient_scan, default_grid, enhancement_certificate

DEFAULT_LAMBDA = 0.25
DEFAULT_A = 0.5
SWEEP_VARIABLES = ("alpha", "lambda", "Z", "a")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    values: tuple
    alpha: float
    lam: float
    a: float
    Z: int
    beta: float

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"cannot sweep {self.variable!r}; choose from {SWEEP_VARIABLES}")
        if not self.values:
            raise ValueError("sweep needs at least one value")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("sweep values must be strictly increasing")
        # validates the fixed parameters
        FieldParams(self.alpha, self.lam, self.a)
        HydrogenModel(self.Z, self.beta)

    def points(self):
        for v in self.values:
            fixed = {"alpha": self.alpha, "lambda": self.lam, "a": self.a, "Z": self.Z}
            fixed[self.variable] = v
            yield fixed


def _positive(text: str) -> float:
    value = float(text)
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _nonneg(text: str) -> float:
    value = float(text)
    if not (value >= 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text!r}")
    return value


def _charge(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"Z must be a positive integer, got {text!r}")
    return value


def _value_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


# -- subcommands ------------------------------------------------------------

def cmd_self_energy(args) -> dict:
    params = FieldParams(args.alpha, args.lam, args.a)
    return self_energy_report(params, tol=args.tol).as_dict()


def cmd_field_integrals(args) -> dict:
    lam = args.lam
    closed, quad = e_field_integral(lam), e_field_integral_quad(lam)
    dd, dd_q = dd_commutator(lam), dd_commutator_quad(lam)
    cross = max(abs(gh_cross_integral(lam, i, j)) for i in (1, 2, 3) for j in (1, 2, 3))
    return {
        "lambda": lam,
        "e_field_closed": closed,
        "e_field_quad": quad,
        "dd_commutator_closed": dd,
        "dd_commutator_quad": dd_q,
        "cancellation": dd - closed,
        "leading_per_alpha": sigma_leading(FieldParams(1.0, lam)),
        "gh_cross_max_abs": cross,
    }


def cmd_hydrogen(args):
    model = HydrogenModel(args.Z, args.beta)
    params = FieldParams(args.alpha, args.lam, args.a)
    spectrum = sum_rule_partial(model, args.n_max)
    if args.coefficients:
        return [{"n": n, "c_n": c, "c_n_sq": c * c, "e_n": level_energy(model, n)}
                for n, c in spectrum.coefficients]
    return {
        "Z": model.Z,
        "beta": model.beta,
        "alpha": params.alpha,
        "lambda": params.lam,
        "e0": model.e0,
        "p_phi_sq": model.p_phi_sq,
        "c2": spectrum.coefficients[0][1],
        "n_max": spectrum.n_max,
        "sum_rule_partial": spectrum.partial_sum,
        "sum_rule_target": spectrum.target,
        "rc_approx": radiative_correction(model, params, "approx"),
        "rc_spectral": radiative_correction(model, params, "spectral", n_max=args.n_max),
        "binding_gain_upper": binding_gain_upper(model, params),
    }


def cmd_threshold(args):
    model = HydrogenModel(args.Z, args.beta)
    if args.scan_a:
        rows = coefficient_scan(model, args.lam, default_grid(args.step))
        best = best_row(rows)
        return [{"a": r.a, "coefficient": r.coefficient,
                 "alpha_max": r.coefficient * (model.beta * model.Z) ** 2,
                 "branch": r.branch, "best": r is best} for r in rows]
    report = alpha_max(model, args.lam, args.a, alpha=args.alpha).as_dict()
    params = FieldParams(args.alpha, args.lam, args.a)
    try:
        cert = enhancement_certificate(model, params)
        report["enhanced"], report["margin"] = cert.enhanced, cert.margin
    except ConstraintError:
        report["enhanced"], report["margin"] = None, None
    return report


def cmd_sweep(args):
    values = args.values
    if args.variable == "Z":
        if any(v != int(v) for v in values):
            raise ValueError("Z values must be integers")
        values = [int(v) for v in values]
    spec = SweepSpec(args.variable, tuple(values), args.alpha, args.lam, args.a, args.Z, args.beta)
    rows = []
    for point in spec.points():
        params = FieldParams(point["alpha"], point["lambda"], point["a"])
        model = HydrogenModel(point["Z"], spec.beta)
        admissible = params.alpha <= params.alpha_admissible
        cert = enhancement_certificate(model, params) if admissible else None
        rows.append({
            "alpha": params.alpha, "lambda": params.lam, "a": params.a, "Z": model.Z,
            "leading": sigma_leading(params),
            "thm1_upper": sigma_upper_bound(params),
            "err_envelope": err_envelope(params),
            "radiative_correction": radiative_correction(model, params),
            "alpha_max": alpha_max(model, params.lam, params.a).alpha_max,
            "admissible": admissible,
            "enhanced": None if cert is None else cert.enhanced,
            "margin": None if cert is None else cert.margin,
        })
    return rows


def cmd_verify(args):
    results = checks.run_all()
    lines = [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in results]
    passed = sum(c.passed for c in results)
    lines.append(f"{passed}/{len(results)} identities passed")
    return "\n".join(lines) + "\n", all(c.passed for c in results)


# -- parser -----------------------------------------------------------------

def _add_common(p, *, alpha_required=False, beta_default=None):
    if alpha_required:
        p.add_argument("--alpha", type=_nonneg, required=True, help="coupling constant")
    else:
        p.add_argument("--alpha", type=_nonneg, default=None,
                       help="coupling constant (default: beta)")
    p.add_argument("--lambda", dest="lam", type=_positive, default=DEFAULT_LAMBDA,
                   help=f"ultraviolet cutoff (default {DEFAULT_LAMBDA})")
    p.add_argument("--a", type=float, default=DEFAULT_A,
                   help=f"estimate-splitting parameter in (0, 1) (default {DEFAULT_A})")
    p.add_argument("--format", choices=FORMATS, default="table")


def _add_model(p, z_default):
    p.add_argument("--Z", type=_charge, default=z_default, help=f"nuclear charge (default {z_default})")
    p.add_argument("--beta", type=_positive, default=None,
                   help="fine-structure constant (default 1/137, or $PF_BETA)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pauli-fierz",
                                     description="Self-energy and enhanced binding of one electron in a photon field.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("self-energy", help="leading order, bounds and error envelope")
    _add_common(p, alpha_required=True)
    p.add_argument("--tol", type=_positive, default=1e-12, help="relative root tolerance of the secular solver")

    p = sub.add_parser("field-integrals", help="closed-form field integrals against quadrature")
    p.add_argument("--lambda", dest="lam", type=_positive, default=DEFAULT_LAMBDA)
    p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("hydrogen", help="hydrogenic dipole data and radiative correction")
    _add_common(p)
    _add_model(p, 1)
    p.add_argument("--n-max", type=int, default=20, help="highest bound p-state in the spectral sum")
    p.add_argument("--coefficients", action="store_true", help="list c_n per level instead of the summary")

    p = sub.add_parser("threshold", help="alpha_max and the enhanced-binding certificate")
    _add_common(p)
    _add_model(p, 13)
    p.add_argument("--scan-a", action="store_true", help="tabulate the coefficient over a grid of a")
    p.add_argument("--step", type=_positive, default=0.01, help="a-grid spacing for --scan-a")

    p = sub.add_parser("sweep", help="tabulate energies over one varying parameter")
    _add_common(p)
    _add_model(p, 13)
    p.add_argument("--variable", choices=SWEEP_VARIABLES, required=True)
    p.add_argument("--values", type=_value_list, required=True, help="comma-separated, strictly increasing")

    sub.add_parser("verify", help="run every oracle-equivalence check")
    return parser


COMMANDS = {
    "self-energy": cmd_self_energy,
    "field-integrals": cmd_field_integrals,
    "hydrogen": cmd_hydrogen,
    "threshold": cmd_threshold,
    "sweep": cmd_sweep,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    if args.command == "verify":
        text, ok = cmd_verify(args)
        stdout.write(text)
        return EXIT_OK if ok else EXIT_CHECK_FAILED

    try:
        if getattr(args, "beta", "unset") is None:
            args.beta = default_beta()
        if getattr(args, "alpha", "unset") is None:
            args.alpha = args.beta
        payload = COMMANDS[args.command](args)
    except ConstraintError as exc:
        stderr.write(f"pauli-fierz {args.command}: constraint violated: {exc}\n")
        return EXIT_INVALID
    except (ValueError, QuadratureError, BracketError) as exc:
        stderr.write(f"pauli-fierz {args.command}: {exc}\n")
        return EXIT_INVALID
    stdout.write(render(payload, args.format))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
