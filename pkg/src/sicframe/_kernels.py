"""Hot numeric kernels behind the orbit frame-potential evaluations.

The quantity every inner loop needs is

    sigma(z) = sum_{i,k} | sum_a conj(z_a) conj(z_{a+k-i}) z_{a+k} z_{a-i} |^2

(all indices mod N) together with its Wirtinger gradient with respect to the
conjugate coordinates.  Monte Carlo averaging evaluates sigma on millions of
vectors and the fiducial search evaluates the gradient thousands of times, so
these carry numba @njit implementations with a pure-numpy fallback.

Backend selection: environment variable ``SICFRAME_KERNELS`` set to ``numba``
(default) or ``numpy``.  ``get_backend`` exposes both for benchmarking.
"""

from __future__ import annotations

import os
import warnings
from types import SimpleNamespace

import numpy as np

_ENV_VAR = "SICFRAME_KERNELS"


# ---------------------------------------------------------------------------
# pure-numpy implementations (vectorized over the cyclic index a)
# ---------------------------------------------------------------------------

def _np_fh_sum(z):
    n = z.shape[0]
    zb = np.conj(z)
    idx = np.arange(n)
    total = 0.0
    for i in range(n):
        for k in range(n):
            s = (zb * zb[(idx + k - i) % n] * z[(idx + k) % n] * z[(idx - i) % n]).sum()
            total += (s.real * s.real + s.imag * s.imag)
    return float(total)


def _np_fh_sum_batch(zs):
    zs = np.ascontiguousarray(zs, dtype=np.complex128)
    _, n = zs.shape
    zb = np.conj(zs)
    idx = np.arange(n)
    out = np.zeros(zs.shape[0])
    for i in range(n):
        for k in range(n):
            s = (zb * zb[:, (idx + k - i) % n]
                 * zs[:, (idx + k) % n] * zs[:, (idx - i) % n]).sum(axis=1)
            out += s.real * s.real + s.imag * s.imag
    return out


def _np_fh_wirtinger(z):
    n = z.shape[0]
    zb = np.conj(z)
    idx = np.arange(n)
    w = np.zeros(n, dtype=np.complex128)
    for i in range(n):
        for k in range(n):
            s = (zb * zb[(idx + k - i) % n] * z[(idx + k) % n] * z[(idx - i) % n]).sum()
            # the two slots of S hit by d/d conj(z_c), then the two of conj(S)
            d_s = (zb[(idx + k - i) % n] * z[(idx + k) % n] * z[(idx - i) % n]
                   + zb[(idx + i - k) % n] * z[(idx + i) % n] * z[(idx - k) % n])
            d_sb = (z[(idx - k) % n] * z[(idx - i) % n] * zb[(idx - i - k) % n]
                    + z[(idx + i) % n] * z[(idx + k) % n] * zb[(idx + i + k) % n])
            w += d_s * np.conj(s) + d_sb * s
    return w


def _build_numpy():
    return SimpleNamespace(
        name="numpy",
        fh_sum=_np_fh_sum,
        fh_sum_batch=_np_fh_sum_batch,
        fh_wirtinger=_np_fh_wirtinger,
    )


# ---------------------------------------------------------------------------
# numba implementations (plain loops; nogil so shard workers run in parallel)
# ---------------------------------------------------------------------------

def _build_numba():
    from numba import njit

    @njit(cache=True, nogil=True)
    def fh_sum(z):
        n = z.shape[0]
        total = 0.0
        for i in range(n):
            for k in range(n):
                s = 0.0 + 0.0j
                for a in range(n):
                    s += (np.conj(z[a] * z[(a + k - i) % n])
                          * z[(a + k) % n] * z[(a - i) % n])
                total += s.real * s.real + s.imag * s.imag
        return total

    @njit(cache=True, nogil=True)
    def fh_sum_batch(zs):
        out = np.empty(zs.shape[0])
        for r in range(zs.shape[0]):
            out[r] = fh_sum(zs[r])
        return out

    @njit(cache=True, nogil=True)
    def fh_wirtinger(z):
        n = z.shape[0]
        w = np.zeros(n, dtype=np.complex128)
        for i in range(n):
            for k in range(n):
                s = 0.0 + 0.0j
                for a in range(n):
                    s += (np.conj(z[a] * z[(a + k - i) % n])
                          * z[(a + k) % n] * z[(a - i) % n])
                sb = np.conj(s)
                for c in range(n):
                    d_s = (np.conj(z[(c + k - i) % n]) * z[(c + k) % n] * z[(c - i) % n]
                           + np.conj(z[(c + i - k) % n]) * z[(c + i) % n] * z[(c - k) % n])
                    d_sb = (z[(c - k) % n] * z[(c - i) % n] * np.conj(z[(c - i - k) % n])
                            + z[(c + i) % n] * z[(c + k) % n] * np.conj(z[(c + i + k) % n]))
                    w[c] += d_s * sb + d_sb * s
        return w

    return SimpleNamespace(
        name="numba",
        fh_sum=fh_sum,
        fh_sum_batch=fh_sum_batch,
        fh_wirtinger=fh_wirtinger,
    )


_BACKENDS = {}


def get_backend(name):
    """Backend namespace ("numba" or "numpy") with the three kernels."""
    name = name.strip().lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {name!r}")
    if name not in _BACKENDS:
        _BACKENDS[name] = _build_numba() if name == "numba" else _build_numpy()
    return _BACKENDS[name]


def _select_default():
    requested = os.environ.get(_ENV_VAR, "numba").strip().lower() or "numba"
    if requested == "numpy":
        return get_backend("numpy")
    if requested != "numba":
        raise ValueError(
            f"{_ENV_VAR} must be 'numba' or 'numpy', got {requested!r}"
        )
    try:
        return get_backend("numba")
    except ImportError:  # pragma: no cover - environment without numba
        warnings.warn("numba unavailable, falling back to numpy kernels")
        return get_backend("numpy")


_ACTIVE = _select_default()

BACKEND = _ACTIVE.name
fh_sum = _ACTIVE.fh_sum
fh_sum_batch = _ACTIVE.fh_sum_batch
fh_wirtinger = _ACTIVE.fh_wirtinger
