"""Monomial isometric embeddings of the normalizer eigen-subspaces.

Each embedding maps C^d isometrically into C^N with every ambient coordinate
equal to a single scaled input coordinate (the "monomial" property).  That
structure is what keeps polynomial averages over the subspace exactly
computable, so rows store their coefficient exactly: a phase in Q(w) (w a
primitive third root of unity) times the square root of a rational.

Built-in labels:

    hplus / hminus    parity eigenspaces (odd N; dims n and n-1, N = 2n-1)
    zauner1           eigenvalue-1 space of the order-3 element, N = 7, dim 3
    zauner-alpha      eigenvalue-w space, N = 7, dim 2
    zauner-alpha2     eigenvalue-w^2 space, N = 7, dim 2
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import (
    DimensionError,
    UnsupportedDimensionError,
    UnsupportedSubspaceError,
)
from .numcore import Cyclo3, as_unit_vector, sample_fs, sample_fs_batch

LABELS = ("hplus", "hminus", "zauner1", "zauner-alpha", "zauner-alpha2")

_ONE = Cyclo3.one()
_MINUS_ONE = Cyclo3.rational(-1)


@dataclass(frozen=True, eq=False)
class SubspaceEmbedding:
    """Isometry C^sub_dim -> C^ambient_dim with one monomial per row.

    ``rows[a]`` is either None (the ambient coordinate is identically zero)
    or a triple ``(col, phase, mod2)`` meaning coordinate ``a`` of the image
    equals ``phase * sqrt(mod2) * x[col]`` with ``phase`` a Cyclo3 unit and
    ``mod2`` the rational squared modulus of the coefficient.
    """

    ambient_dim: int
    sub_dim: int
    rows: tuple
    label: str = "custom"

    def __post_init__(self):
        if len(self.rows) != self.ambient_dim:
            raise DimensionError("one row per ambient coordinate required")
        # exact isometry check: rows are monomial by construction, so E†E is
        # diagonal with entries sum of mod2 per column; each must equal 1
        col_norm = [Fraction(0)] * self.sub_dim
        for row in self.rows:
            if row is None:
                continue
            col, _phase, mod2 = row
            if not 0 <= col < self.sub_dim:
                raise DimensionError(f"column index {col} out of range")
            col_norm[col] += Fraction(mod2)
        if any(c != 1 for c in col_norm):
            raise DimensionError(f"not an isometry, column norms {col_norm}")

    @cached_property
    def matrix(self):
        """Dense (ambient_dim, sub_dim) complex matrix of the isometry."""
        e = np.zeros((self.ambient_dim, self.sub_dim), dtype=np.complex128)
        for a, row in enumerate(self.rows):
            if row is None:
                continue
            col, phase, mod2 = row
            e[a, col] = complex(phase) * np.sqrt(float(mod2))
        return e


def build_parity_subspaces(dim):
    """Parity eigenspace embeddings (plus, minus) for odd ``dim`` = 2n-1.

    The plus space keeps coordinate 0 and the symmetric combinations
    ``Z_k = Z_{N-k}``; the minus space has ``Z_0 = 0`` and the antisymmetric
    combinations ``Z_k = -Z_{N-k}``.
    """
    if dim < 3 or dim % 2 == 0:
        raise UnsupportedDimensionError(
            f"parity split needs odd dimension >= 3, got {dim}"
        )
    n = (dim + 1) // 2
    half = Fraction(1, 2)

    plus = [None] * dim
    plus[0] = (0, _ONE, Fraction(1))
    minus = [None] * dim
    for k in range(1, n):
        plus[k] = (k, _ONE, half)
        plus[dim - k] = (k, _ONE, half)
        minus[k] = (k - 1, _ONE, half)
        minus[dim - k] = (k - 1, _MINUS_ONE, half)
    return (
        SubspaceEmbedding(dim, n, tuple(plus), label="hplus"),
        SubspaceEmbedding(dim, n - 1, tuple(minus), label="hminus"),
    )


def build_zauner7_subspaces():
    """The three order-3 eigenspace embeddings in dimension 7 (dims 3, 2, 2).

    Coordinates are constant on the doubling orbits {0}, {1,2,4}, {3,6,5} up
    to powers of w: the eigenvalue-1 space repeats each input coordinate
    across its orbit, the eigenvalue-w and eigenvalue-w^2 spaces twist by
    conjugate powers of w, all scaled by 1/sqrt(3).
    """
    third = Fraction(1, 3)
    w = Cyclo3.omega_pow

    one = [None] * 7
    one[0] = (0, _ONE, Fraction(1))
    for a in (1, 2, 4):
        one[a] = (1, _ONE, third)
    for a in (3, 5, 6):
        one[a] = (2, _ONE, third)

    alpha = [None] * 7
    alpha[1] = (0, w(0), third)
    alpha[2] = (0, w(2), third)
    alpha[4] = (0, w(1), third)
    alpha[3] = (1, w(0), third)
    alpha[5] = (1, w(1), third)
    alpha[6] = (1, w(2), third)

    alpha2 = [None] * 7
    alpha2[1] = (0, w(0), third)
    alpha2[2] = (0, w(1), third)
    alpha2[4] = (0, w(2), third)
    alpha2[3] = (1, w(0), third)
    alpha2[5] = (1, w(2), third)
    alpha2[6] = (1, w(1), third)

    return (
        SubspaceEmbedding(7, 3, tuple(one), label="zauner1"),
        SubspaceEmbedding(7, 2, tuple(alpha), label="zauner-alpha"),
        SubspaceEmbedding(7, 2, tuple(alpha2), label="zauner-alpha2"),
    )


def embedding_for_label(label, dim):
    """Resolve a CLI label to an embedding; "full" (or None) means no restriction."""
    if label is None:
        return None
    key = label.strip().lower()
    if key == "full":
        return None
    try:
        if key in ("hplus", "hminus"):
            plus, minus = build_parity_subspaces(dim)
            return plus if key == "hplus" else minus
        if key in ("zauner1", "zauner-alpha", "zauner-alpha2"):
            if dim != 7:
                raise UnsupportedDimensionError(
                    f"order-3 subspaces are built only for dimension 7, got {dim}"
                )
            one, alpha, alpha2 = build_zauner7_subspaces()
            return {"zauner1": one, "zauner-alpha": alpha, "zauner-alpha2": alpha2}[key]
    except UnsupportedDimensionError as exc:
        raise UnsupportedSubspaceError(str(exc)) from exc
    raise UnsupportedSubspaceError(
        f"unknown subspace label {label!r}; choose from full, " + ", ".join(LABELS)
    )


def embed(embedding, x):
    """Map a unit vector of the subspace into ambient coordinates."""
    x = as_unit_vector(x)
    if x.shape[0] != embedding.sub_dim:
        raise DimensionError(
            f"input dim {x.shape[0]} != subspace dim {embedding.sub_dim}"
        )
    return embedding.matrix @ x


def sample_subspace(embedding, rng):
    """Fubini-Study random unit vector of the subspace, in ambient coordinates."""
    return embedding.matrix @ sample_fs(embedding.sub_dim, rng)


def sample_subspace_batch(embedding, n, rng):
    """Batch version of :func:`sample_subspace`; returns (n, ambient_dim)."""
    return sample_fs_batch(embedding.sub_dim, n, rng) @ embedding.matrix.T
