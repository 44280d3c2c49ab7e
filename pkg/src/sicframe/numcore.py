"""Dense complex vector plumbing, Fubini-Study sampling, and exact moment calculus.

Everything downstream (frame potentials, averages, searches) is built on the
three primitives here: reproducible RNG streams, unit vectors drawn from the
unitarily invariant (Fubini-Study) measure, and the exact rational value of
the moments ``< prod_a |Z_a|^(2 m_a) >`` over that measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DimensionError, NormError

#: How far from unit norm a vector may be before ingestion refuses it.
UNIT_TOL = 1e-12

#: Primitive third root of unity used by the order-3 eigenspaces.
OMEGA3 = complex(-0.5, math.sqrt(3.0) / 2.0)


def rng_stream(seed, stream=0):
    """Independent, reproducible generator for the pair (seed, stream).

    Distinct stream ids on the same seed give statistically independent
    streams, so parallel workers can each own one without coordination.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


def as_unit_vector(v, tol=UNIT_TOL):
    """Validate and return ``v`` as a unit complex128 vector.

    Vectors within ``tol`` of unit norm are renormalized silently; anything
    further off raises :class:`NormError`.
    """
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] < 1:
        raise DimensionError(f"expected a nonempty 1-d vector, got shape {v.shape}")
    nrm = float(np.linalg.norm(v))
    if abs(nrm - 1.0) > tol:
        raise NormError(f"vector norm {nrm!r} deviates from 1 by more than {tol}")
    return v / nrm


def inner(u, v):
    """Hermitian inner product ``sum_a conj(u_a) v_a``."""
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape or u.ndim != 1:
        raise DimensionError(f"incompatible shapes {u.shape} and {v.shape}")
    return complex(np.vdot(u, v))


def sample_fs_batch(dim, n, rng):
    """Draw ``n`` unit vectors in C^dim from the Fubini-Study measure.

    Each vector is a 2*dim-component standard Gaussian draw (first half real
    parts, second half imaginary parts), normalized.  Returns shape (n, dim).
    """
    if dim < 1:
        raise DimensionError(f"dimension must be >= 1, got {dim}")
    raw = rng.standard_normal((n, 2 * dim))
    z = raw[:, :dim] + 1j * raw[:, dim:]
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return z


def sample_fs(dim, rng):
    """Draw one Fubini-Study random unit vector in C^dim."""
    return sample_fs_batch(dim, 1, rng)[0]


@lru_cache(maxsize=None)
def _moment_from_multiset(dim, ms):
    total = sum(ms)
    num = math.factorial(dim - 1)
    for m in ms:
        num *= math.factorial(m)
    return Fraction(num, math.factorial(dim - 1 + total))


def fs_moment(dim, exponents):
    """Exact Fubini-Study average of ``prod_a |Z_a|^(2 m_a)`` in C^dim.

    Equals ``(dim-1)! * prod_a m_a! / (dim-1+M)!`` with ``M = sum m_a``,
    returned as an exact :class:`fractions.Fraction` (take ``float()`` of it
    for the double value).  Trailing zero exponents are irrelevant, but the
    number of nonzero exponents must fit inside ``dim`` coordinates.
    """
    if dim < 1:
        raise DimensionError(f"dimension must be >= 1, got {dim}")
    ms = []
    for m in exponents:
        m = int(m)
        if m < 0:
            raise ValueError(f"exponents must be non-negative, got {m}")
        if m > 0:
            ms.append(m)
    if len(ms) > dim:
        raise DimensionError(
            f"{len(ms)} distinct coordinates do not fit in dimension {dim}"
        )
    return _moment_from_multiset(dim, tuple(sorted(ms)))


@dataclass(frozen=True)
class Cyclo3:
    """Exact number ``a + b*w`` with ``w = exp(2*pi*i/3)`` and a, b rational.

    Closed under the ring operations via ``w^2 = -1 - w``; complex conjugation
    maps ``w`` to ``w^2``.  This is all the exact arithmetic the order-3
    eigenspace coefficients need.
    """

    a: Fraction
    b: Fraction

    @staticmethod
    def zero():
        return Cyclo3(Fraction(0), Fraction(0))

    @staticmethod
    def one():
        return Cyclo3(Fraction(1), Fraction(0))

    @staticmethod
    def rational(r):
        return Cyclo3(Fraction(r), Fraction(0))

    @staticmethod
    def omega_pow(j):
        """w**j for integer j (period 3)."""
        j = j % 3
        if j == 0:
            return Cyclo3.one()
        if j == 1:
            return Cyclo3(Fraction(0), Fraction(1))
        return Cyclo3(Fraction(-1), Fraction(-1))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo3(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo3(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a1 + b1 w)(a2 + b2 w), substituting w^2 = -1 - w
        return Cyclo3(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a - self.b * other.b,
        )

    __radd__ = __add__
    __rmul__ = __mul__

    def conjugate(self):
        return Cyclo3(self.a - self.b, -self.b)

    @property
    def is_rational(self):
        return self.b == 0

    def __complex__(self):
        return complex(self.a) + complex(self.b) * OMEGA3

    def __bool__(self):
        return bool(self.a) or bool(self.b)


def _coerce(x):
    if isinstance(x, Cyclo3):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclo3.rational(x)
    return NotImplemented
