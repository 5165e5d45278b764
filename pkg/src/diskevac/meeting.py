"""Bisection solver for the catch-up equation y = x + 2*sin((x + y + offset)/2).

The residual f(y) = x + 2*sin((x + y + offset)/2) - y is monotone
nonincreasing (f'(y) = cos(.) - 1 <= 0), so the root on [x, x + 2] is
unique.  f(x) = 2*sin((2x + offset)/2) >= 0 holds whenever
2x + offset <= 2*pi, and f(x + 2) <= 0 always because the chord term is
at most 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-6
MAX_ITER = 200
_BRACKET_SLACK = 1e-12


class RegimeError(ValueError):
    """Query outside the regime where the catch-up geometry is valid."""


class SolverError(RuntimeError):
    """Bisection failed to reach the residual tolerance."""


@dataclass(frozen=True)
class MeetQuery:
    """One catch-up equation instance.

    x is the arc already traveled by the discovering robot, offset the
    additive separation inside the sine (0, d or zeta), tol the residual
    tolerance.
    """

    x: float
    offset: float
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.x < 0.0:
            raise RegimeError(f"x must be nonnegative, got {self.x}")
        if not (0.0 <= self.offset <= math.pi + 1e-12):
            raise RegimeError(f"offset {self.offset} outside [0, pi]")
        if self.tol <= 0.0:
            raise RegimeError("tol must be positive")
        if self.x + self.offset > 2.0 * math.pi + 1e-9:
            raise RegimeError(
                f"x + offset = {self.x + self.offset} beyond 2*pi: chord "
                "geometry no longer applies"
            )


def residual(x: float, offset: float, y: float) -> float:
    return x + 2.0 * math.sin((x + y + offset) / 2.0) - y


def solve_meeting(q: MeetQuery) -> float:
    """Root of the catch-up equation on [x, x + 2], residual below q.tol."""
    lo, hi = q.x, q.x + 2.0
    flo = residual(q.x, q.offset, lo)
    if flo < -_BRACKET_SLACK:
        raise RegimeError(
            f"no catch-up root at or beyond x={q.x} (offset={q.offset}): "
            "bracket endpoints do not straddle a root"
        )
    if abs(flo) < q.tol:
        return lo
    fhi = residual(q.x, q.offset, hi)
    if fhi > _BRACKET_SLACK:
        raise RegimeError("upper bracket endpoint not below the root")
    for _ in range(MAX_ITER):
        mid = 0.5 * (lo + hi)
        fm = residual(q.x, q.offset, mid)
        if abs(fm) < q.tol:
            return mid
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
    raise SolverError(f"no convergence after {MAX_ITER} iterations for {q}")


def solve_meeting_xy(x: float, offset: float, tol: float = DEFAULT_TOL) -> float:
    return solve_meeting(MeetQuery(x, offset, tol))


def solve_meeting_arr(x, offset, tol: float = DEFAULT_TOL):
    """Vectorized bisection over an array of x values (shared offset).

    Replicates solve_meeting step for step, including its residual-driven
    stopping rule, so the scalar and batch evaluators return identical
    roots.  Entries outside the valid regime (f(x) < 0) come back as NaN.
    """
    x = np.asarray(x, dtype=float)
    lo = x.copy()
    hi = x + 2.0
    flo = 2.0 * np.sin((2.0 * x + offset) / 2.0)
    valid = flo >= -_BRACKET_SLACK
    done = np.abs(flo) < tol
    result = np.where(done, lo, np.nan)
    for _ in range(MAX_ITER):
        if bool(np.all(done | ~valid)):
            break
        mid = 0.5 * (lo + hi)
        fm = x + 2.0 * np.sin((x + mid + offset) / 2.0) - mid
        newly = ~done & (np.abs(fm) < tol)
        result = np.where(newly, mid, result)
        done |= newly
        take_lo = ~done & (fm > 0.0)
        take_hi = ~done & (fm <= 0.0)
        lo = np.where(take_lo, mid, lo)
        hi = np.where(take_hi, mid, hi)
    if not bool(np.all(done | ~valid)):
        raise SolverError("vector bisection failed to converge")
    return np.where(valid, result, np.nan)
