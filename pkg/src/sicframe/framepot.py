"""Frame potentials and the SIC-distance function, for vector sets and orbits.

For a set of N^2 unit vectors in C^N the SIC distance is

    f = (1/2) sum_{I != J} ( |<psi_I|psi_J>|^2 - 1/(N+1) )^2,

zero exactly when the set is equiangular with common overlap 1/(N+1).  On a
Heisenberg-Weyl orbit f collapses to a function f_H of the fiducial alone;
``f_H_fast`` evaluates it in O(N^3) through the Fourier-reduced form

    f_H = (N^3/2) ( sigma(z) - 2/(N+1) )

with sigma(z) the double sum computed by the kernels module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CountError, DimensionError, UnsupportedError
from .heisenberg import orbit
from .numcore import as_unit_vector

#: Negative roundoff below this magnitude is clamped to 0 in *reports* only.
_CLAMP = 1e-10


@dataclass(frozen=True)
class FrameReport:
    """Frame potentials and SIC distance of one N^2-vector configuration."""

    f1: float
    f2: float
    f: float
    n_vectors: int
    dim: int


def _stack_unit(vectors):
    vs = np.asarray(vectors, dtype=np.complex128)
    if vs.ndim != 2 or vs.shape[0] < 1:
        raise DimensionError(f"expected a stack of vectors, got shape {vs.shape}")
    norms = np.linalg.norm(vs, axis=1)
    if np.max(np.abs(norms - 1.0)) > 1e-9:
        raise DimensionError("vectors must be unit norm")
    return vs / norms[:, None]


def frame_potential(vectors, t):
    """Frame potential ``sum_{I,J} |<psi_I|psi_J>|^(2t)``, diagonal included."""
    if t not in (1, 2):
        raise UnsupportedError(f"frame potential only supports t in (1, 2), got {t}")
    vs = _stack_unit(vectors)
    p = np.abs(vs.conj() @ vs.T) ** 2
    if t == 2:
        p = p * p
    return float(p.sum())


def f_general(vectors):
    """SIC distance of exactly N^2 unit vectors in C^N (diagonal excluded)."""
    vs = _stack_unit(vectors)
    m, dim = vs.shape
    if m != dim * dim:
        raise CountError(f"need {dim * dim} vectors in dimension {dim}, got {m}")
    dev = np.abs(vs.conj() @ vs.T) ** 2 - 1.0 / (dim + 1)
    np.fill_diagonal(dev, 0.0)
    return float(0.5 * (dev * dev).sum())


def frame_report(vectors):
    """FrameReport for an N^2-vector configuration (f clamped at -1e-10)."""
    vs = _stack_unit(vectors)
    m, dim = vs.shape
    if m != dim * dim:
        raise CountError(f"need {dim * dim} vectors in dimension {dim}, got {m}")
    f1 = frame_potential(vs, 1)
    f2 = frame_potential(vs, 2)
    f = f_general(vs)
    if -_CLAMP < f < 0.0:
        f = 0.0
    return FrameReport(f1=f1, f2=f2, f=f, n_vectors=m, dim=dim)


def f_H_direct(group, fiducial):
    """Orbit SIC distance from the definition: build all N^2 overlaps.

    Equals ``(N^2/2) sum_{(i,j) != (0,0)} (|<psi_0|D(i,j) psi_0>|^2 - 1/(N+1))^2``.
    O(N^4); the reference implementation that anchors ``f_H_fast``.
    """
    psi = as_unit_vector(fiducial)
    n = group.dim
    vecs = orbit(group, psi)
    g = np.abs(vecs.conj() @ psi) ** 2
    dev = g - 1.0 / (n + 1)
    dev[0] = 0.0  # (i, j) = (0, 0) excluded
    return float(0.5 * n * n * (dev * dev).sum())


def f_H_fast(fiducial):
    """Orbit SIC distance in O(N^3) via the Fourier-reduced double sum."""
    z = as_unit_vector(fiducial)
    n = z.shape[0]
    if n < 2:
        raise DimensionError("orbit quantities need dimension >= 2")
    sigma = _kernels.fh_sum(z)
    return float(0.5 * n ** 3 * (sigma - 2.0 / (n + 1)))


def f_H_batch(fiducials):
    """``f_H_fast`` row-wise over an (m, N) stack of unit vectors."""
    zs = np.ascontiguousarray(fiducials, dtype=np.complex128)
    if zs.ndim != 2 or zs.shape[1] < 2:
        raise DimensionError(f"expected (m, N>=2) stack, got shape {zs.shape}")
    n = zs.shape[1]
    sigma = _kernels.fh_sum_batch(zs)
    return 0.5 * n ** 3 * (sigma - 2.0 / (n + 1))


def f_H_gradient(fiducial):
    """Wirtinger gradient of ``f_H_fast`` w.r.t. the conjugate coordinates.

    Treating z and conj(z) as independent, returns the complex vector
    ``d f_H / d conj(z_c)``.  The steepest-descent direction in the real
    2N-coordinate embedding is minus twice this vector; at critical points
    its projection tangent to the unit sphere vanishes.
    """
    z = as_unit_vector(fiducial)
    n = z.shape[0]
    if n < 2:
        raise DimensionError("orbit quantities need dimension >= 2")
    return 0.5 * n ** 3 * _kernels.fh_wirtinger(z)
