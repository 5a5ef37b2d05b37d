"""Sentence expressiveness via sparse self-reconstruction.

Every news sentence vector doubles as a basis vector; one shared
non-negative coefficient vector A reconstructs the whole topic (news and
comment vectors) with an L1 penalty.  The loss is minimized by greedy
coordinate descent: pick the coordinate with the largest-magnitude
partial derivative, then apply a non-negative soft-threshold update that
exactly minimizes the loss along that coordinate (the step and threshold
are scaled by the coordinate's curvature, so the objective never
increases).  a_j is the expressiveness of news sentence j.
"""

from dataclasses import dataclass, field

import numpy as np

from .accel import USE_NUMBA, njit
from .corpus import TermVector


class ExpressivenessError(Exception):
    pass


class DimensionMismatch(ExpressivenessError):
    pass


class ZeroVector(ExpressivenessError):
    pass


class NonFiniteLoss(ExpressivenessError):
    pass


@dataclass
class ScModel:
    """Inputs of the expressiveness solver.

    X holds the m news vectors row-wise, Z the n comment vectors; rho and
    tau are the per-row reconstruction weights.  Defaults follow the
    standard configuration: position base C=0.8 capped at paragraph 4,
    sparsity 0.005, step scale 1, at most 300 iterations, stop when the
    loss moves by no more than 1e-4.
    """

    X: np.ndarray
    Z: np.ndarray
    rho: np.ndarray
    tau: np.ndarray
    lam: float = 0.005
    eta: float = 1.0
    max_iter: int = 300
    epsilon: float = 1e-4
    position_base: float = 0.8
    paragraph_cap: int = 4

    def __post_init__(self):
        self.X = np.ascontiguousarray(np.asarray(self.X, dtype=np.float64))
        self.Z = np.ascontiguousarray(np.asarray(self.Z, dtype=np.float64))
        if self.Z.size == 0:
            self.Z = self.Z.reshape(0, self.X.shape[1] if self.X.ndim == 2 else 0)
        self.rho = np.asarray(self.rho, dtype=np.float64)
        self.tau = np.asarray(self.tau, dtype=np.float64)
        if self.X.ndim != 2 or self.X.shape[0] < 1:
            raise DimensionMismatch("X must be a nonempty (m, d) array")
        if self.Z.ndim != 2 or (self.Z.shape[0] > 0 and self.Z.shape[1] != self.X.shape[1]):
            raise DimensionMismatch("Z must be (n, d) with the same d as X")
        if self.rho.shape != (self.X.shape[0],):
            raise DimensionMismatch("rho must have one weight per news vector")
        if self.tau.shape != (self.Z.shape[0],):
            raise DimensionMismatch("tau must have one weight per comment vector")
        if self.lam < 0:
            raise ValueError("sparsity penalty must be non-negative")
        if not 0 < self.position_base < 1:
            raise ValueError("position base must lie in (0, 1)")

    @property
    def m(self) -> int:
        return self.X.shape[0]

    @property
    def n(self) -> int:
        return self.Z.shape[0]


@dataclass
class ExpressivenessResult:
    A: np.ndarray
    loss_trace: np.ndarray
    iterations_run: int
    converged: bool


def position_weight(p: int, base: float = 0.8, cap: int = 4) -> float:
    """Paragraph-position prior: base**p, flat from paragraph `cap` on."""
    if p < 0:
        raise ValueError("paragraph index must be non-negative")
    return base ** min(p, cap)


def comment_weight(z: TermVector, news: list[TermVector]) -> float:
    """Mean cosine similarity of a comment vector against all news vectors."""
    if z.is_zero:
        raise ZeroVector("comment vector is zero; drop it before weighting")
    if not news:
        raise ValueError("news vector list is empty")
    return sum(z.cosine(x) for x in news) / len(news)


def loss(model: ScModel, A: np.ndarray) -> float:
    """Reconstruction loss: weighted news and comment error plus L1 term."""
    A = np.asarray(A, dtype=np.float64)
    if A.shape != (model.m,):
        raise DimensionMismatch(f"A must have shape ({model.m},)")
    xbar = A @ model.X
    news_term = float(model.rho @ ((model.X - xbar) ** 2).sum(axis=1)) / (2 * model.m)
    comment_term = 0.0
    if model.n > 0:
        comment_term = float(model.tau @ ((model.Z - xbar) ** 2).sum(axis=1)) / (2 * model.n)
    return news_term + comment_term + model.lam * float(np.abs(A).sum())


def gradient_coordinate(model: ScModel, A: np.ndarray, k: int) -> float:
    """Partial derivative of the smooth loss part for coordinate k."""
    A = np.asarray(A, dtype=np.float64)
    if A.shape != (model.m,):
        raise DimensionMismatch(f"A must have shape ({model.m},)")
    xbar = A @ model.X
    xk = model.X[k]
    grad = -float(model.rho @ ((model.X - xbar) @ xk)) / model.m
    if model.n > 0:
        grad -= float(model.tau @ ((model.Z - xbar) @ xk)) / model.n
    return grad


def _cd_inputs(model: ScModel):
    m = model.m
    gram = model.X @ model.X.T
    b = model.X @ (model.X.T @ (model.rho / m))
    const = float(model.rho @ (model.X ** 2).sum(axis=1)) / (2 * m)
    w = float(model.rho.sum()) / m
    if model.n > 0:
        n = model.n
        b = b + model.X @ (model.Z.T @ (model.tau / n))
        const += float(model.tau @ (model.Z ** 2).sum(axis=1)) / (2 * n)
        w += float(model.tau.sum()) / n
    return np.ascontiguousarray(gram), np.ascontiguousarray(b), w, const


def _cd_solve_numpy(gram, b, w, const, lam, eta, max_iter, eps):
    """Vectorized fallback of the coordinate-descent loop."""
    m = gram.shape[0]
    A = np.zeros(m)
    u = np.zeros(m)  # gram @ A, maintained incrementally
    trace = np.empty(max_iter + 1)
    trace[0] = const
    loss_prev = const
    t = 0
    converged = False
    diag = np.diag(gram).copy()
    while t < max_iter:
        g = w * u - b
        k = int(np.argmax(np.abs(g)))
        kappa = w * diag[k]
        new_val = A[k]
        if kappa > 0.0:
            step = eta / kappa
            v = A[k] - step * g[k]
            thr = lam * step
            if v > thr:
                new_val = v - thr
            elif v < -thr:
                new_val = v + thr
            else:
                new_val = 0.0
            if new_val < 0.0:
                new_val = 0.0
        delta = new_val - A[k]
        A[k] = new_val
        u += delta * gram[:, k]
        loss_now = const - b @ A + 0.5 * w * (A @ u) + lam * A.sum()
        t += 1
        trace[t] = loss_now
        diff = abs(loss_now - loss_prev)
        loss_prev = loss_now
        if diff <= eps:
            converged = True
            break
    return A, trace[: t + 1], t, converged


def _cd_solve_loop(gram, b, w, const, lam, eta, max_iter, eps):
    m = gram.shape[0]
    A = np.zeros(m)
    u = np.zeros(m)
    trace = np.empty(max_iter + 1)
    trace[0] = const
    loss_prev = const
    t = 0
    converged = False
    while t < max_iter:
        best = -1.0
        k = 0
        for j in range(m):
            mag = abs(w * u[j] - b[j])
            if mag > best:
                best = mag
                k = j
        gk = w * u[k] - b[k]
        kappa = w * gram[k, k]
        new_val = A[k]
        if kappa > 0.0:
            step = eta / kappa
            v = A[k] - step * gk
            thr = lam * step
            if v > thr:
                new_val = v - thr
            elif v < -thr:
                new_val = v + thr
            else:
                new_val = 0.0
            if new_val < 0.0:
                new_val = 0.0
        delta = new_val - A[k]
        A[k] = new_val
        dot_ba = 0.0
        dot_au = 0.0
        total = 0.0
        for j in range(m):
            u[j] += delta * gram[j, k]
            dot_ba += b[j] * A[j]
            dot_au += A[j] * u[j]
            total += A[j]
        loss_now = const - dot_ba + 0.5 * w * dot_au + lam * total
        t += 1
        trace[t] = loss_now
        diff = abs(loss_now - loss_prev)
        loss_prev = loss_now
        if diff <= eps:
            converged = True
            break
    return A, trace[: t + 1], t, converged


if USE_NUMBA:
    _cd_solve = njit(cache=True)(_cd_solve_loop)
else:
    _cd_solve = _cd_solve_numpy


def solve(model: ScModel) -> ExpressivenessResult:
    """Run greedy coordinate descent and return the expressiveness vector."""
    gram, b, w, const = _cd_inputs(model)
    A, trace, iters, converged = _cd_solve(
        gram, b, w, const, model.lam, model.eta, model.max_iter, model.epsilon
    )
    trace = np.asarray(trace)
    if not np.isfinite(trace).all() or not np.isfinite(A).all():
        raise NonFiniteLoss(
            "loss became non-finite; the step scale eta is too large for this data"
        )
    return ExpressivenessResult(
        A=A, loss_trace=trace, iterations_run=int(iters), converged=bool(converged)
    )
