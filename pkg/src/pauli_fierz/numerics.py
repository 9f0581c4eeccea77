"""Adaptive Gauss-Kronrod quadrature and bracketed root finding.

These are the numerical oracles that every closed-form expression in the
package is checked against, so they are kept deterministic: the same
inputs always produce the same panels, in the same order, with the same
floating-point result.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

DEFAULT_REL_TOL = 1e-10
DEFAULT_ABS_TOL = 1e-14
MAX_SUBDIVISIONS = 2000

# 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
# Nodes are listed from the edge inwards; odd positions are Gauss nodes.
_XGK = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208034065239,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651146,
])

# Symmetric expansion onto [-1, 1]: 21 nodes, Kronrod and Gauss weights.
_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[:-1][::-1]])
_KRONROD_W = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[:-1][::-1]])
_GAUSS_W = np.zeros(21)
_GAUSS_W[1:10:2] = _WG
_GAUSS_W[11:20:2] = _WG[::-1]


class QuadratureError(RuntimeError):
    """Raised when adaptive quadrature cannot meet its tolerance.

    ``best`` holds the partial :class:`QuadResult` at the point of failure.
    """

    def __init__(self, message: str, best: "QuadResult | None" = None,
                 abscissa: float | None = None):
        super().__init__(message)
        self.best = best
        self.abscissa = abscissa


class BracketError(ValueError):
    """The supplied bracket does not contain a sign change."""


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"interval is reversed: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def split(self) -> tuple["Interval", "Interval"]:
        mid = 0.5 * (self.lo + self.hi)
        return Interval(self.lo, mid), Interval(mid, self.hi)


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_error_estimate: float
    subdivisions: int


def _as_interval(rng) -> Interval:
    if isinstance(rng, Interval):
        return rng
    lo, hi = rng
    return Interval(float(lo), float(hi))


def _panel(f, lo: float, hi: float, vectorized: bool) -> tuple[float, float]:
    half = 0.5 * (hi - lo)
    center = 0.5 * (hi + lo)
    x = center + half * _NODES
    if vectorized:
        y = np.asarray(f(x), dtype=float)
        if y.shape != x.shape:
            y = np.broadcast_to(y, x.shape)
    else:
        y = np.fromiter((f(float(xi)) for xi in x), dtype=float, count=x.size)
    bad = ~np.isfinite(y)
    if bad.any():
        xb = float(x[np.argmax(bad)])
        raise QuadratureError(f"integrand returned {y[np.argmax(bad)]} at x={xb!r}", abscissa=xb)
    kronrod = half * float(_KRONROD_W @ y)
    gauss = half * float(_GAUSS_W @ y)
    return kronrod, abs(kronrod - gauss)


def integrate(f: Callable, rng, rel_tol: float = DEFAULT_REL_TOL,
              abs_tol: float = DEFAULT_ABS_TOL, *, vectorized: bool = False,
              max_subdivisions: int = MAX_SUBDIVISIONS) -> QuadResult:
    """Integrate ``f`` over ``rng`` with globally adaptive G10/K21 panels.

    The panel with the largest error estimate is bisected until the summed
    estimate is at most ``max(abs_tol, rel_tol * |value|)``.  The error
    estimate is the raw Kronrod-Gauss difference, which is pessimistic for
    smooth integrands.

    With ``vectorized=True`` the integrand is called once per panel on a
    numpy array of 21 abscissae.
    """
    if not (rel_tol > 0 and abs_tol > 0):
        raise ValueError("tolerances must be positive")
    interval = _as_interval(rng)
    if interval.width == 0.0:
        return QuadResult(0.0, 0.0, 1)

    value, err = _panel(f, interval.lo, interval.hi, vectorized)
    # min-heap on -err; the insertion counter keeps ordering deterministic
    heap = [(-err, 0, interval.lo, interval.hi, value)]
    total, total_err, count, panels = value, err, 1, 1

    while total_err > max(abs_tol, rel_tol * abs(total)):
        if panels >= max_subdivisions:
            best = QuadResult(total, total_err, panels)
            raise QuadratureError(
                f"no convergence after {panels} subdivisions "
                f"(estimate {total!r}, error {total_err:.3g})", best=best)
        neg_err, _, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            best = QuadResult(total, total_err, panels)
            raise QuadratureError(f"panel [{lo!r}, {hi!r}] cannot be bisected further", best=best)
        v1, e1 = _panel(f, lo, mid, vectorized)
        v2, e2 = _panel(f, mid, hi, vectorized)
        total += v1 + v2 - val
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, count + 1, lo, mid, v1))
        heapq.heappush(heap, (-e2, count + 2, mid, hi, v2))
        count += 2
        panels += 1

    # re-sum from the panels to shed drift from the running updates
    total = math.fsum(item[4] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return QuadResult(total, total_err, panels)


def find_root(g: Callable[[float], float], bracket, tol: float = 1e-14) -> float:
    """Root of ``g`` inside ``bracket`` to absolute tolerance ``tol`` (Brent's method)."""
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    interval = _as_interval(bracket)
    lo, hi = interval.lo, interval.hi
    glo, ghi = g(lo), g(hi)
    if not (math.isfinite(glo) and math.isfinite(ghi)):
        raise BracketError(f"g is not finite at the bracket ends: g({lo})={glo}, g({hi})={ghi}")
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if glo * ghi > 0:
        raise BracketError(f"no sign change on [{lo}, {hi}]: g(lo)={glo:.6g}, g(hi)={ghi:.6g}")
    return float(brentq(g, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=500))
