"""Dense two-phase primal simplex with Bland's rule.

Solves  max c.x  s.t.  A x (<=, ==, >=) b,  x >= 0.  Bland's smallest-index
pivoting rule everywhere guarantees termination and makes every solve
deterministic.  The pivot loop is the hot path; it ships as a numba kernel
with a vectorized numpy fallback (see accel).
"""

from dataclasses import dataclass

import numpy as np

from .accel import USE_NUMBA, njit

LEQ, EQ, GEQ = 0, 1, 2

_TOL = 1e-9
_FEAS_TOL = 1e-7

_OPTIMAL, _UNBOUNDED, _PIVOT_LIMIT = 0, 1, 2


class SimplexError(Exception):
    pass


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: np.ndarray | None
    objective: float


def _phase_loop(T, basis, cost, tol, max_pivots):
    rows = T.shape[0]
    ncols = T.shape[1] - 1
    pivots = 0
    while pivots < max_pivots:
        enter = -1
        for j in range(ncols):
            r = cost[j]
            for i in range(rows):
                cb = cost[basis[i]]
                if cb != 0.0:
                    r -= cb * T[i, j]
            if r > tol:
                enter = j
                break
        if enter < 0:
            return _OPTIMAL, pivots
        leave = -1
        best_ratio = 0.0
        for i in range(rows):
            a = T[i, enter]
            if a > tol:
                ratio = T[i, ncols] / a
                if leave < 0 or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    leave = i
                    best_ratio = ratio
        if leave < 0:
            return _UNBOUNDED, pivots
        piv = T[leave, enter]
        for j in range(ncols + 1):
            T[leave, j] /= piv
        for i in range(rows):
            if i != leave:
                f = T[i, enter]
                if f != 0.0:
                    for j in range(ncols + 1):
                        T[i, j] -= f * T[leave, j]
                    T[i, enter] = 0.0
        basis[leave] = enter
        pivots += 1
    return _PIVOT_LIMIT, pivots


def _phase_numpy(T, basis, cost, tol, max_pivots):
    rows = T.shape[0]
    ncols = T.shape[1] - 1
    pivots = 0
    while pivots < max_pivots:
        reduced = cost[:ncols] - cost[basis] @ T[:, :ncols]
        improving = np.nonzero(reduced > tol)[0]
        if improving.size == 0:
            return _OPTIMAL, pivots
        enter = int(improving[0])  # Bland: smallest improving index
        col = T[:, enter]
        eligible = np.nonzero(col > tol)[0]
        if eligible.size == 0:
            return _UNBOUNDED, pivots
        ratios = T[eligible, ncols] / col[eligible]
        best = ratios.min()
        ties = eligible[ratios == best]
        leave = int(ties[np.argmin(basis[ties])])
        T[leave, :] /= T[leave, enter]
        factors = T[:, enter].copy()
        factors[leave] = 0.0
        T -= np.outer(factors, T[leave, :])
        T[:, enter] = 0.0
        T[leave, enter] = 1.0
        basis[leave] = enter
        pivots += 1
    return _PIVOT_LIMIT, pivots


if USE_NUMBA:
    _phase = njit(cache=True)(_phase_loop)
else:
    _phase = _phase_numpy


def solve_lp(c, A, b, senses) -> LpResult:
    """Maximize c.x subject to A x (sense) b and x >= 0."""
    c = np.asarray(c, dtype=np.float64)
    A = np.asarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64).copy()
    senses = np.asarray(senses, dtype=np.int64).copy()
    n = c.shape[0]
    rows = b.shape[0]
    if A.shape != (rows, n):
        raise SimplexError(f"A must be ({rows}, {n}), got {A.shape}")
    A = A.copy()

    flip = b < 0
    A[flip] *= -1
    b[flip] *= -1
    senses[flip] = np.where(senses[flip] == LEQ, GEQ,
                            np.where(senses[flip] == GEQ, LEQ, EQ))

    n_slack = int(np.sum(senses != EQ))
    n_art = int(np.sum(senses != LEQ))
    ncols = n + n_slack + n_art
    T = np.zeros((rows, ncols + 1))
    T[:, :n] = A
    T[:, ncols] = b
    basis = np.zeros(rows, dtype=np.int64)
    slack_at = n
    art_at = n + n_slack
    art_start = art_at
    for i in range(rows):
        if senses[i] == LEQ:
            T[i, slack_at] = 1.0
            basis[i] = slack_at
            slack_at += 1
        elif senses[i] == GEQ:
            T[i, slack_at] = -1.0
            slack_at += 1
            T[i, art_at] = 1.0
            basis[i] = art_at
            art_at += 1
        else:
            T[i, art_at] = 1.0
            basis[i] = art_at
            art_at += 1

    max_pivots = 50_000 + 100 * (rows + ncols)

    if n_art > 0:
        phase1_cost = np.zeros(ncols)
        phase1_cost[art_start:] = -1.0
        status, _ = _phase(T, basis, phase1_cost, _TOL, max_pivots)
        if status == _PIVOT_LIMIT:
            raise SimplexError("pivot limit exceeded in phase 1")
        art_mass = -float(phase1_cost[basis] @ T[:, ncols])
        if art_mass > _FEAS_TOL:
            return LpResult(status="infeasible", x=None, objective=float("-inf"))
        T, basis = _purge_artificials(T, basis, art_start, ncols)
        ncols = art_start

    phase2_cost = np.zeros(ncols)
    phase2_cost[:n] = c
    status, _ = _phase(T, basis, phase2_cost, _TOL, max_pivots)
    if status == _PIVOT_LIMIT:
        raise SimplexError("pivot limit exceeded in phase 2")
    if status == _UNBOUNDED:
        return LpResult(status="unbounded", x=None, objective=float("inf"))

    x = np.zeros(n)
    rhs = T[:, -1]
    for i in range(T.shape[0]):
        if basis[i] < n:
            x[basis[i]] = rhs[i]
    return LpResult(status="optimal", x=x, objective=float(c @ x))


def _purge_artificials(T, basis, art_start, ncols):
    """Pivot or drop rows whose basic variable is still artificial."""
    keep_rows = []
    for i in range(T.shape[0]):
        if basis[i] < art_start:
            keep_rows.append(i)
            continue
        pivot_col = -1
        for j in range(art_start):
            if abs(T[i, j]) > _TOL:
                pivot_col = j
                break
        if pivot_col < 0:
            continue  # redundant 0 = 0 row
        piv = T[i, pivot_col]
        T[i, :] /= piv
        for r in range(T.shape[0]):
            if r != i:
                f = T[r, pivot_col]
                if f != 0.0:
                    T[r, :] -= f * T[i, :]
                    T[r, pivot_col] = 0.0
        basis[i] = pivot_col
        keep_rows.append(i)
    rows = np.array(keep_rows, dtype=np.int64)
    T2 = np.ascontiguousarray(
        np.hstack([T[rows][:, :art_start], T[rows][:, -1:]])
    )
    return T2, basis[rows].copy()
