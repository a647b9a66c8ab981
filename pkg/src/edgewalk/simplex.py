"""Bounded-variable simplex for small dense linear programs.

Two-phase primal simplex where every variable carries explicit lower and
upper bounds.  Phase one puts an artificial variable on each equality row
and minimizes their sum; a positive optimum means the program is
infeasible.  Bland's rule keeps pivoting deterministic and cycle-free.

Sized for the network programs in this package (tens of variables): the
basis system is re-solved densely every iteration, trading speed for
simplicity and immunity to accumulated pivot drift.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, SolverError

_PIVOT_EPS = 1e-10


@dataclass
class SimplexResult:
    status: str
    x: np.ndarray
    objective: float
    iterations: int


class _Tableau:
    """Current basic solution: values, basis membership, nonbasic bounds."""

    def __init__(self, A, b, lo, hi, basis, x):
        self.A = A
        self.b = b
        self.lo = lo
        self.hi = hi
        self.basis = basis
        self.x = x
        self.in_basis = np.zeros(A.shape[1], dtype=bool)
        self.in_basis[basis] = True

    def refresh_basic_values(self):
        """Recompute basic values from the nonbasic bounds exactly."""
        nb = ~self.in_basis
        rhs = self.b - self.A[:, nb] @ self.x[nb]
        self.x[self.basis] = np.linalg.solve(self.A[:, self.basis], rhs)


def _iterate(t: _Tableau, c: np.ndarray, tol: float, max_iter: int) -> int:
    """Pivot until optimal; returns iterations used."""
    m, n = t.A.shape
    for it in range(max_iter):
        B = t.A[:, t.basis]
        y = np.linalg.solve(B.T, c[t.basis])
        reduced = c - t.A.T @ y
        entering = -1
        direction = 0.0
        for j in range(n):
            if t.in_basis[j] or t.hi[j] - t.lo[j] <= 0.0:
                continue
            at_lo = abs(t.x[j] - t.lo[j]) <= abs(t.x[j] - t.hi[j])
            if at_lo and reduced[j] < -tol:
                entering, direction = j, 1.0
                break
            if not at_lo and reduced[j] > tol:
                entering, direction = j, -1.0
                break
        if entering < 0:
            return it
        w = np.linalg.solve(B, t.A[:, entering])
        # basic values move by -direction * step * w; find the first bound hit
        step = np.inf
        leaving = -1
        for k in range(m):
            i = t.basis[k]
            rate = direction * w[k]
            if rate > _PIVOT_EPS:
                limit = (t.x[i] - t.lo[i]) / rate
            elif rate < -_PIVOT_EPS:
                if not np.isfinite(t.hi[i]):
                    continue
                limit = (t.hi[i] - t.x[i]) / -rate
            else:
                continue
            if limit < step - _PIVOT_EPS or (
                limit < step + _PIVOT_EPS
                and (leaving < 0 or i < t.basis[leaving])
            ):
                step = limit
                leaving = k
        span = t.hi[entering] - t.lo[entering]
        if span < step:
            # entering variable runs to its other bound; basis unchanged
            t.x[entering] = (
                t.hi[entering] if direction > 0 else t.lo[entering]
            )
            t.refresh_basic_values()
            continue
        if not np.isfinite(step):
            return -1
        hit = t.basis[leaving]
        t.x[hit] = t.lo[hit] if direction * w[leaving] > 0 else t.hi[hit]
        t.x[entering] += direction * step
        t.in_basis[hit] = False
        t.in_basis[entering] = True
        t.basis[leaving] = entering
        t.refresh_basic_values()
    raise SolverError(f"simplex did not converge within {max_iter} pivots")


def _validate(c, A, b, lo, hi):
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    m, n = A.shape
    if b.shape != (m,) or c.shape != (n,) or lo.shape != (n,) or hi.shape != (n,):
        raise InputError("inconsistent LP dimensions")
    if not np.isfinite(A).all() or not np.isfinite(b).all():
        raise InputError("LP rows must be finite")
    if (lo > hi).any():
        raise InputError("variable lower bound exceeds upper bound")
    if (~np.isfinite(lo)).any():
        raise InputError("every variable needs a finite lower bound")
    return c, A, b, lo, hi


def solve_bounded_lp(c, A, b, lo, hi, tol: float = 1e-7, max_iter: int = 10000) -> SimplexResult:
    """Minimize c @ x subject to A @ x == b and lo <= x <= hi."""
    c, A, b, lo, hi = _validate(c, A, b, lo, hi)
    m, n = A.shape

    x0 = lo.copy()
    residual = b - A @ x0
    signs = np.where(residual < 0.0, -1.0, 1.0)
    A1 = np.hstack([A * signs[:, None], np.eye(m)])
    b1 = b * signs
    lo1 = np.concatenate([lo, np.zeros(m)])
    hi1 = np.concatenate([hi, np.full(m, np.inf)])
    x1 = np.concatenate([x0, np.abs(residual)])
    basis = list(range(n, n + m))
    t = _Tableau(A1, b1, lo1, hi1, basis, x1)

    c1 = np.concatenate([np.zeros(n), np.ones(m)])
    used = _iterate(t, c1, tol, max_iter)
    art_sum = float(t.x[n:].sum())
    if art_sum > tol:
        return SimplexResult(
            status="infeasible",
            x=t.x[:n].copy(),
            objective=art_sum,
            iterations=used,
        )

    # pin the artificials at zero and optimize the real objective
    t.hi[n:] = 0.0
    t.x[n:] = 0.0
    t.refresh_basic_values()
    c2 = np.concatenate([c, np.zeros(m)])
    used2 = _iterate(t, c2, tol, max_iter - used)
    if used2 == -1:
        return SimplexResult(
            status="unbounded",
            x=t.x[:n].copy(),
            objective=-np.inf,
            iterations=used,
        )
    x = t.x[:n].copy()
    return SimplexResult(
        status="optimal",
        x=x,
        objective=float(c @ x),
        iterations=used + used2,
    )


def phase_one_feasible(A, b, lo, hi, tol: float = 1e-7, max_iter: int = 10000) -> bool:
    """True when some x with A @ x == b fits inside the bounds."""
    n = np.asarray(A).shape[1]
    res = solve_bounded_lp(np.zeros(n), A, b, lo, hi, tol=tol, max_iter=max_iter)
    return res.status != "infeasible"
