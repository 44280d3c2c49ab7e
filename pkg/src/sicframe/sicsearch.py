"""Numerical minimization / maximization of the orbit SIC distance.

Projected descent on the unit sphere of the (sub)space: steepest-descent
steps with Armijo backtracking, accelerated by a memory-limited quasi-Newton
direction on the real 2d-coordinate embedding, renormalizing after every
step.  Restarts are independent Fubini-Study random draws on their own RNG
streams, so a fixed (config, seed) pair reproduces the identical result.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError
from .framepot import f_H_fast, f_H_gradient
from .heisenberg import hw_group, orbit
from .numcore import as_unit_vector, rng_stream, sample_fs
from .subspace import embedding_for_label

_ARMIJO = 1e-4
_MEMORY = 8
_MAX_BACKTRACK = 40


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    space: str | None = None
    mode: str = "min"  # "min" | "max"
    restarts: int = 50
    max_iters: int = 2000
    # a minimum below tol_value pins every orbit overlap within
    # sqrt(2 tol / N^2) <= 1e-6 of 1/(N+1), for any N >= 2
    tol_value: float = 1e-12
    tol_grad: float = 1e-8
    seed: int = 0


@dataclass(frozen=True)
class SearchResult:
    best_value: float
    best_vector: np.ndarray
    converged: bool
    restarts_used: int
    iterations: int
    history: tuple = field(default_factory=tuple)

    def record(self):
        return {
            "best_value": self.best_value,
            "converged": self.converged,
            "restarts_used": self.restarts_used,
            "iterations": self.iterations,
            "history": [[int(r), float(v)] for r, v in self.history],
        }


def _real_dot(u, v):
    return float(np.real(np.vdot(u, v)))


def _tangential(x, g):
    return g - _real_dot(x, g) * x


def _lbfgs_direction(g, pairs):
    """Two-loop recursion for the (negated) quasi-Newton step, H0 = gamma*I."""
    q = -g.copy()
    alphas = []
    for s, y, rho in reversed(pairs):
        a = rho * _real_dot(s, q)
        alphas.append(a)
        q -= a * y
    if pairs:
        s, y, rho = pairs[-1]
        q *= _real_dot(s, y) / _real_dot(y, y)
    for (s, y, rho), a in zip(pairs, reversed(alphas)):
        b = rho * _real_dot(y, q)
        q += (a - b) * s
    return q


def _descend(x0, value_grad, max_iters, stop_value, tol_grad):
    """Monotone projected descent from x0; returns (x, value, grad_norm, iters)."""
    x = x0
    val, grad = value_grad(x)
    pairs = []
    step = 1.0
    iters = 0
    for _ in range(max_iters):
        g_t = _tangential(x, grad)
        gnorm = float(np.linalg.norm(g_t))
        if gnorm <= tol_grad:
            break
        if stop_value is not None and val <= stop_value:
            break
        direction = _lbfgs_direction(g_t, pairs) if pairs else -g_t
        slope = _real_dot(direction, g_t)
        if slope >= 0.0:  # not a descent direction; fall back
            direction = -g_t
            slope = -gnorm * gnorm
        t = step if pairs else min(1.0, 1.0 / max(gnorm, 1.0))
        accepted = False
        for _bt in range(_MAX_BACKTRACK):
            cand = x + t * direction
            cand /= np.linalg.norm(cand)
            cand_val, cand_grad = value_grad(cand)
            if cand_val <= val + _ARMIJO * t * slope:
                accepted = True
                break
            t *= 0.5
        iters += 1
        if not accepted:
            break
        s = cand - x
        y = _tangential(cand, cand_grad) - g_t
        sy = _real_dot(s, y)
        if sy > 1e-12 * float(np.linalg.norm(s)) * float(np.linalg.norm(y)):
            pairs.append((s, y, 1.0 / sy))
            if len(pairs) > _MEMORY:
                pairs.pop(0)
        x, val, grad = cand, cand_val, cand_grad
        step = 1.0
    g_t = _tangential(x, grad)
    return x, val, float(np.linalg.norm(g_t)), iters


def search(config):
    """Multi-restart extremization of the orbit SIC distance.

    Minimization targets 0 and stops a restart early once ``tol_value`` is
    reached; maximization minimizes the negated function and declares
    convergence when the tangential gradient drops below ``tol_grad`` at the
    best point.  Ties between restarts break toward the lowest restart index.
    """
    if config.mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {config.mode!r}")
    if config.restarts < 1:
        raise ValueError("need at least one restart")
    embedding = embedding_for_label(config.space, config.dim)
    sign = 1.0 if config.mode == "min" else -1.0

    if embedding is None:
        sub_dim = config.dim

        def value_grad(x):
            return sign * f_H_fast(x), 2.0 * sign * f_H_gradient(x)
    else:
        sub_dim = embedding.sub_dim
        emb = embedding.matrix
        emb_h = emb.conj().T

        def value_grad(x):
            z = emb @ x
            return sign * f_H_fast(z), 2.0 * sign * (emb_h @ f_H_gradient(z))

    stop_value = config.tol_value if config.mode == "min" else None
    best_val = None
    best_x = None
    best_gnorm = np.inf
    history = []
    total_iters = 0
    restarts_used = 0
    for r in range(config.restarts):
        restarts_used = r + 1
        x0 = sample_fs(sub_dim, rng_stream(config.seed, r))
        x, val, gnorm, iters = _descend(
            x0, value_grad, config.max_iters, stop_value, config.tol_grad
        )
        total_iters += iters
        history.append((r, sign * val))
        if best_val is None or val < best_val:
            best_val, best_x, best_gnorm = val, x, gnorm
        if config.mode == "min" and best_val <= config.tol_value:
            break

    best_vector = best_x if embedding is None else embedding.matrix @ best_x
    best_vector = best_vector / np.linalg.norm(best_vector)
    best_value = f_H_fast(best_vector)
    if config.mode == "min":
        converged = best_value <= config.tol_value
    else:
        converged = best_gnorm <= config.tol_grad
    return SearchResult(
        best_value=best_value,
        best_vector=best_vector,
        converged=converged,
        restarts_used=restarts_used,
        iterations=total_iters,
        history=tuple(history),
    )


def verify_sic(fiducial, tol):
    """Check the equiangularity of the orbit of ``fiducial``.

    Returns ``(ok, max_deviation)`` where the deviation is the largest
    ``| |<psi_I|psi_J>|^2 - 1/(N+1) |`` over distinct orbit members.
    """
    psi = as_unit_vector(fiducial)
    n = psi.shape[0]
    if n < 2:
        raise DimensionError("orbit quantities need dimension >= 2")
    vecs = orbit(hw_group(n), psi)
    p = np.abs(vecs.conj() @ vecs.T) ** 2
    dev = np.abs(p - 1.0 / (n + 1))
    np.fill_diagonal(dev, 0.0)
    max_dev = float(dev.max())
    return max_dev <= tol, max_dev
