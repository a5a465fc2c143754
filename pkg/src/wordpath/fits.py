"""Statistical fits and closed-form relations for growth curves.

Covers vocabulary-growth (Heaps) exponent estimation, the conversion between
the Heaps exponent and the acceleration exponent, the saturation limit of
ASPL for fat-tailed degree distributions, and a diagnostic fit of L(N) to
the random-graph-style form A*ln N / (ln(c0/(alpha+1)) + alpha*ln N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .aspl import AsplCurve
from .errors import InsufficientDataError
from .tokens import TokenStream


@dataclass(frozen=True)
class HeapsFit:
    """Log-log least-squares fit of vocabulary size against text length."""

    delta: float
    prefactor: float
    fit_range: tuple[int, int]
    residual: float
    n_points: int

    def report(self) -> dict:
        return {
            "delta": self.delta,
            "prefactor": self.prefactor,
            "tau_min": self.fit_range[0],
            "tau_max": self.fit_range[1],
            "residual": self.residual,
            "n_points": self.n_points,
        }


def vocabulary_growth(ts: TokenStream) -> np.ndarray:
    """N(tau): distinct-word count after each token, length tau."""
    seen = np.zeros(ts.n_distinct, dtype=bool)
    out = np.empty(ts.n_tokens, dtype=np.int64)
    count = 0
    for idx, tid in enumerate(ts.token_ids()):
        if not seen[tid]:
            seen[tid] = True
            count += 1
        out[idx] = count
    return out


def fit_heaps(ts: TokenStream, fit_range: tuple[int, int],
              n_points: int = 50) -> HeapsFit:
    """Heaps exponent over log-spaced sample points within ``fit_range``.

    The power law does not hold over the whole length of real texts, so the
    range is mandatory and echoed in the result.  Sampling log-spaced
    abscissae keeps the large-tau end from dominating the regression.
    """
    tau_min, tau_max = fit_range
    tau_max = min(tau_max, ts.n_tokens)
    tau_min = max(1, tau_min)
    if tau_min >= tau_max:
        raise InsufficientDataError(
            f"fit range [{tau_min}, {tau_max}] is empty for tau={ts.n_tokens}"
        )
    taus = np.unique(np.round(np.geomspace(tau_min, tau_max, n_points)).astype(np.int64))
    if taus.size < 20:
        raise InsufficientDataError(
            f"only {taus.size} distinct sample points in range; need >= 20"
        )
    growth = vocabulary_growth(ts)
    log_tau = np.log(taus.astype(np.float64))
    log_n = np.log(growth[taus - 1].astype(np.float64))
    slope, intercept = np.polyfit(log_tau, log_n, 1)
    resid = log_n - (slope * log_tau + intercept)
    rms = float(np.sqrt(np.mean(resid ** 2)))
    return HeapsFit(delta=float(slope), prefactor=float(np.exp(intercept)),
                    fit_range=(int(tau_min), int(tau_max)), residual=rms,
                    n_points=int(taus.size))


def alpha_from_delta(delta: float) -> float:
    """Acceleration exponent from the Heaps exponent: alpha = 1/delta - 1."""
    if not 0 < delta <= 1:
        raise ValueError("delta must be in (0, 1]")
    return 1.0 / delta - 1.0


def delta_from_alpha(alpha: float) -> float:
    """Heaps exponent from the acceleration exponent: delta = 1/(alpha+1)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    return 1.0 / (alpha + 1.0)


def fronczak_limit(gamma: float) -> float:
    """Saturation value of ASPL, 1/2 + 2/(3-gamma), for 2 < gamma < 3.

    Diverges at the gamma -> 3 boundary; values outside the open interval
    are rejected because the formula does not apply there.
    """
    if not 2.0 < gamma < 3.0:
        raise ValueError("fronczak limit is defined for 2 < gamma < 3")
    return 0.5 + 2.0 / (3.0 - gamma)


@dataclass(frozen=True)
class ErApproxFit:
    """Result of the random-graph-style L(N) fit; diagnostic only.

    The three reported parameters are identifiable only up to a common scale
    (multiplying A, alpha_eff, and ln(c0_eff/(alpha_eff+1)) by one constant
    leaves the curve unchanged), so the fit pins A = 1 unless the caller
    supplies alpha explicitly.
    """

    amplitude: float
    c0_eff: float
    alpha_eff: float
    residual: float
    poor_fit: bool
    n_points: int


def fit_er_approx(curve: AsplCurve, n_min: int,
                  alpha: float | None = None) -> ErApproxFit:
    """Least-squares fit of L(N) = A*ln N / (ln(c0/(alpha+1)) + alpha*ln N).

    Fits over checkpoints with N >= n_min.  The reciprocal transform
    1/L = b/(A*ln N) + alpha/A is linear in 1/ln N and seeds a least-squares
    polish in L space.  With ``alpha`` given the remaining (A, c0_eff) pair
    is fitted, otherwise A is pinned to 1 (see class docstring).  A
    non-declining segment or an unusable transform sets ``poor_fit`` instead
    of failing silently.
    """
    from scipy.optimize import least_squares

    pts = [p for p in curve.points if p.n >= n_min]
    if len(pts) < 10:
        raise InsufficientDataError(
            f"need >= 10 checkpoints with N >= {n_min}, got {len(pts)}"
        )
    x = np.array([math.log(p.n) for p in pts])
    y = np.array([p.length for p in pts])
    declining = y[-1] < y[0]
    slope, intercept = np.polyfit(1.0 / x, 1.0 / y, 1)
    # slope = b/A, intercept = alpha/A with b = ln(c0/(alpha+1))
    poor = not declining or intercept <= 0

    def curve_fn(amplitude, alpha_eff, b):
        denom = b + alpha_eff * x
        with np.errstate(divide="ignore", invalid="ignore"):
            return amplitude * x / denom

    if alpha is not None:
        alpha_eff = float(alpha)
        amp0 = alpha / intercept if intercept > 0 else 1.0
        b0 = float(slope) * amp0

        def resid_fn(theta):
            return curve_fn(theta[0], alpha_eff, theta[1]) - y

        theta0 = [amp0, b0]
    else:
        amp0 = 1.0
        alpha_eff = float(intercept) if intercept > 0 else 0.5
        b0 = float(slope)

        def resid_fn(theta):
            return curve_fn(1.0, theta[0], theta[1]) - y

        theta0 = [alpha_eff, b0]

    try:
        sol = least_squares(resid_fn, theta0, method="lm", max_nfev=2000)
        theta = sol.x
        if not np.all(np.isfinite(theta)) or not np.all(np.isfinite(sol.fun)):
            raise ValueError
    except Exception:
        theta = theta0
    if alpha is not None:
        amplitude, b = float(theta[0]), float(theta[1])
    else:
        amplitude = 1.0
        alpha_eff, b = float(theta[0]), float(theta[1])

    resid = curve_fn(amplitude, alpha_eff, b) - y
    residual = float(np.sqrt(np.mean(resid ** 2)))
    if not np.isfinite(residual):
        poor, residual = True, float("inf")
    c0_eff = (alpha_eff + 1.0) * math.exp(b) if np.isfinite(b) else float("nan")
    return ErApproxFit(amplitude=amplitude, c0_eff=float(c0_eff),
                       alpha_eff=float(alpha_eff), residual=residual,
                       poor_fit=bool(poor), n_points=len(pts))
