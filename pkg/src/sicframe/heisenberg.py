"""Heisenberg-Weyl group representation, orbits, and two normalizer elements.

The group is generated by the clock operator sigma (``sigma|a> = q^a|a>``,
``q = exp(2 pi i / N)``) and the cyclic shift tau (``tau|a> = |a+1 mod N>``),
with ``sigma tau = q tau sigma``.  Group elements are labelled
``D(i, j) = tau^i sigma^j`` up to phase; phases never enter any quantity we
compute, so no phase convention beyond that product is imposed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, UnsupportedDimensionError
from .numcore import as_unit_vector


@dataclass(frozen=True, eq=False)
class HWGroup:
    """Clock/shift representation in dimension ``dim``."""

    dim: int
    q: complex
    sigma: np.ndarray
    tau: np.ndarray


@dataclass(frozen=True, eq=False)
class CliffordElement:
    """A unitary normalizing the Heisenberg-Weyl group.

    ``kind`` is "parity" (order 2, ``a -> -a``) or "zauner7" (order 3, the
    doubling permutation in dimension 7).
    """

    dim: int
    matrix: np.ndarray
    order: int
    kind: str


def _phase_column(dim, j):
    # q^(b*j) for b = 0..dim-1, exponent reduced mod dim before exponentiating
    b = np.arange(dim)
    return np.exp(2j * np.pi * ((b * j) % dim) / dim)


def hw_group(dim):
    """Build the clock/shift pair in dimension ``dim`` >= 2."""
    if dim < 2:
        raise DimensionError(f"group dimension must be >= 2, got {dim}")
    q = complex(np.exp(2j * np.pi / dim))
    sigma = np.diag(_phase_column(dim, 1)).astype(np.complex128)
    tau = np.zeros((dim, dim), dtype=np.complex128)
    b = np.arange(dim)
    tau[(b + 1) % dim, b] = 1.0
    return HWGroup(dim=dim, q=q, sigma=sigma, tau=tau)


def displacement(group, i, j):
    """Matrix of ``tau^i sigma^j`` (indices taken mod N, no extra phase)."""
    n = group.dim
    i %= n
    j %= n
    d = np.zeros((n, n), dtype=np.complex128)
    b = np.arange(n)
    d[(b + i) % n, b] = _phase_column(n, j)
    return d


def orbit(group, fiducial):
    """All N^2 orbit vectors ``D(i, j) @ fiducial`` in row-major (i, j) order.

    Returns an (N^2, N) array whose row ``i*N + j`` is ``tau^i sigma^j``
    applied to the (unit) fiducial.  The ordering is part of the stable
    public contract.
    """
    psi = as_unit_vector(fiducial)
    n = group.dim
    if psi.shape[0] != n:
        raise DimensionError(f"fiducial has dim {psi.shape[0]}, group dim {n}")
    out = np.empty((n * n, n), dtype=np.complex128)
    for j in range(n):
        phased = psi * _phase_column(n, j)
        for i in range(n):
            out[i * n + j] = np.roll(phased, i)
    return out


def parity_operator(dim):
    """Order-2 normalizer element ``A|a> = |-a mod N>`` for odd ``dim``.

    Its eigenspaces split C^N into dimensions n and n-1 where N = 2n-1.
    """
    if dim < 3 or dim % 2 == 0:
        raise UnsupportedDimensionError(
            f"parity split needs odd dimension >= 3, got {dim}"
        )
    a = np.arange(dim)
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[(-a) % dim, a] = 1.0
    return CliffordElement(dim=dim, matrix=m, order=2, kind="parity")


def zauner7_operator():
    """Order-3 permutation ``U|a> = |2a mod 7>`` in dimension 7.

    The unique basis permutation of order 3 whose eigenspaces for the
    eigenvalues 1, w, w^2 (w a primitive third root of unity) have
    dimensions 3, 2, 2 and carry the symmetric coordinate patterns built in
    :mod:`sicframe.subspace`.
    """
    dim = 7
    a = np.arange(dim)
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[(2 * a) % dim, a] = 1.0
    return CliffordElement(dim=dim, matrix=m, order=3, kind="zauner7")
