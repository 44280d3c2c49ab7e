"""Fubini-Study averages of the SIC distance, three independent ways.

* analytic: closed forms as exact rationals;
* exact: a generic monomial-enumeration oracle that expands the orbit double
  sum into degree-8 monomials, discards the phase-unbalanced ones (their
  average vanishes), and evaluates the survivors with the exact moment
  formula -- over the full space or any monomial subspace;
* Monte Carlo: sharded, seed-deterministic sampling with standard errors.

The enumeration replaces the per-parity and per-subspace hand counting with
one algorithm, so odd N, even N, and all built-in subspaces go through the
same code path.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DimensionError,
    NotTabulatedError,
    UnsupportedSubspaceError,
)
from .framepot import f_H_batch
from .numcore import Cyclo3, fs_moment, rng_stream, sample_fs_batch
from .subspace import LABELS

#: Samples per RNG shard; fixed so results never depend on the worker count.
MC_SHARD = 1 << 15


@dataclass(frozen=True)
class AverageResult:
    """One computed average, with the exact rational when the method has one."""

    value: float
    exact: Fraction | None
    method: str  # "analytic" | "exact" | "mc"
    space: str
    dim: int
    std_error: float | None = None
    n_samples: int | None = None
    seed: tuple | None = None

    def record(self):
        """Stable serialization record (field order is part of the contract)."""
        return {
            "dim": self.dim,
            "space": self.space,
            "method": self.method,
            "value": self.value,
            "exact": None if self.exact is None
            else f"{self.exact.numerator}/{self.exact.denominator}",
            "std_error": self.std_error,
            "n_samples": self.n_samples,
            "seed": None if self.seed is None else list(self.seed),
        }


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo sample mean with its standard error and provenance."""

    mean: float
    std_error: float
    n_samples: int
    seed: tuple

    def to_result(self, dim, space_label):
        return AverageResult(
            value=self.mean,
            exact=None,
            method="mc",
            space=space_label,
            dim=dim,
            std_error=self.std_error,
            n_samples=self.n_samples,
            seed=self.seed,
        )


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def analytic_avg_f(dim):
    """Average SIC distance of N^2 independent random vectors: (N^2/2)(N-1)/(N+1).

    Derived internally from the single-overlap reduction and the exact
    moments <t> = 1/N, <t^2> = 2/(N(N+1)) of t = |<e_0|psi>|^2, then checked
    against the closed form before returning.
    """
    if dim < 2:
        raise DimensionError(f"dimension must be >= 2, got {dim}")
    c = Fraction(1, dim + 1)
    t1 = fs_moment(dim, (1,))
    t2 = fs_moment(dim, (2,))
    derived = Fraction(dim * dim * (dim * dim - 1), 2) * (t2 - 2 * c * t1 + c * c)
    closed = Fraction(dim * dim, 2) * Fraction(dim - 1, dim + 1)
    if derived != closed:  # pragma: no cover - algebraic identity
        raise AssertionError(f"moment reduction {derived} != closed form {closed}")
    return AverageResult(
        value=float(closed), exact=closed, method="analytic", space="full", dim=dim
    )


def analytic_avg_fH(dim):
    """Average orbit SIC distance over the full space (parity-dependent form)."""
    if dim < 2:
        raise DimensionError(f"dimension must be >= 2, got {dim}")
    if dim % 2 == 1:
        val = Fraction(dim * dim, 2) * Fraction(dim * (dim - 1), (dim + 2) * (dim + 1))
    else:
        val = Fraction(dim * dim, 2) * Fraction(dim * dim, (dim + 3) * (dim + 1))
    return AverageResult(
        value=float(val), exact=val, method="analytic", space="full", dim=dim
    )


def analytic_avg_fH_subspace(label, dim):
    """Tabulated closed-form subspace averages; NotTabulatedError elsewhere.

    Covered: parity subspaces for odd N > 3 coprime to 3 (both eigenspaces
    share N^3(N-1)/((N+3)(N+1)); when 3 divides N extra index coincidences
    survive the phase integration, the eigenspace averages split, and no
    closed form is tabulated -- use the exact oracle), the plus space at
    N = 3 (27/10; dimension 3 is special, the generic form does not apply),
    and the three order-3 subspaces at N = 7.
    """
    key = label.strip().lower()
    if key not in LABELS:
        raise UnsupportedSubspaceError(f"unknown subspace label {label!r}")
    val = None
    if key in ("hplus", "hminus") and dim % 2 == 1 and dim > 3 and dim % 3 != 0:
        val = Fraction(dim ** 3 * (dim - 1), (dim + 3) * (dim + 1))
    elif key == "hplus" and dim == 3:
        val = Fraction(27, 10)
    elif key == "zauner1" and dim == 7:
        val = Fraction(151 * 7 ** 3, 5 * 3 ** 4 * 2 ** 3)
    elif key in ("zauner-alpha", "zauner-alpha2") and dim == 7:
        val = Fraction(37 * 7 ** 3, 5 * 3 ** 3 * 2 ** 3)
    if val is None:
        raise NotTabulatedError(
            f"no closed form tabulated for space {label!r} in dimension {dim}"
        )
    return AverageResult(
        value=float(val), exact=val, method="analytic", space=key, dim=dim
    )


# ---------------------------------------------------------------------------
# exact monomial-enumeration oracle
# ---------------------------------------------------------------------------

def _sqrt_fraction(fr):
    num = math.isqrt(fr.numerator)
    den = math.isqrt(fr.denominator)
    if num * num != fr.numerator or den * den != fr.denominator:
        raise UnsupportedSubspaceError(
            "subspace coefficient moduli leave the rationals; the exact "
            "oracle needs per-column uniform squared moduli"
        )
    return Fraction(num, den)


def _pattern(exponents):
    return tuple(sorted((m for m in exponents if m), reverse=True))


def _sigma_block(dim, rows, sub_dim, pairs):
    """Exact contribution of the (i, k) pairs to the double sum's average.

    Expands |S_ik|^2 = sum_{a,b} term(a) conj(term(b)) into monomials,
    keeps those whose holomorphic and antiholomorphic exponents balance,
    and integrates them with the moment formula in the effective dimension.
    Returns (Cyclo3 total, Counter of surviving exponent patterns).
    """
    total = Cyclo3.zero()
    counts = Counter()
    rng_dim = range(dim)
    for i, k in pairs:
        for a in rng_dim:
            for b in rng_dim:
                z_rows = ((a + k) % dim, (a - i) % dim, b, (b + k - i) % dim)
                zbar_rows = (a, (a + k - i) % dim, (b + k) % dim, (b - i) % dim)
                if rows is None:
                    m = [0] * dim
                    n = [0] * dim
                    for r in z_rows:
                        m[r] += 1
                    for r in zbar_rows:
                        n[r] += 1
                    if m != n:
                        continue
                    counts[_pattern(m)] += 1
                    total = total + fs_moment(dim, m)
                else:
                    m = [0] * sub_dim
                    n = [0] * sub_dim
                    phase = Cyclo3.one()
                    rad = Fraction(1)
                    dead = False
                    for r in z_rows:
                        row = rows[r]
                        if row is None:
                            dead = True
                            break
                        col, ph, mod2 = row
                        m[col] += 1
                        phase = phase * ph
                        rad *= mod2
                    if dead:
                        continue
                    for r in zbar_rows:
                        row = rows[r]
                        if row is None:
                            dead = True
                            break
                        col, ph, mod2 = row
                        n[col] += 1
                        phase = phase * ph.conjugate()
                        rad *= mod2
                    if dead or m != n:
                        continue
                    counts[_pattern(m)] += 1
                    coeff = phase * _sqrt_fraction(rad)
                    total = total + coeff * fs_moment(sub_dim, m)
    return total, counts


def _sigma_exact(dim, space, threads=1):
    if dim < 2:
        raise DimensionError(f"dimension must be >= 2, got {dim}")
    rows = None
    sub_dim = dim
    if space is not None:
        if space.ambient_dim != dim:
            raise DimensionError(
                f"subspace is ambient dim {space.ambient_dim}, requested {dim}"
            )
        rows = space.rows
        sub_dim = space.sub_dim
    pairs = [(i, k) for i in range(dim) for k in range(dim)]
    threads = max(1, int(threads))
    if threads == 1:
        return _sigma_block(dim, rows, sub_dim, pairs)
    # shard the (i, k) grid; rational arithmetic is exact, so any grouping
    # reduces to the identical result
    chunks = [pairs[s::threads] for s in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda c: _sigma_block(dim, rows, sub_dim, c), chunks))
    total = Cyclo3.zero()
    counts = Counter()
    for part_total, part_counts in parts:
        total = total + part_total
        counts.update(part_counts)
    return total, counts


def exact_avg_fH(dim, space=None, threads=1):
    """Exact average orbit SIC distance via monomial enumeration.

    ``space`` restricts the fiducial to a monomial subspace embedding; None
    averages over the full space.  The result is an exact rational: phases
    from the order-3 subspaces live in Q(w) and provably cancel, which is
    asserted rather than rounded away.
    """
    sigma, _ = _sigma_exact(dim, space, threads)
    if not sigma.is_rational:
        raise AssertionError(f"average has irrational residue: {sigma}")
    val = Fraction(dim ** 3, 2) * (sigma.a - Fraction(2, dim + 1))
    label = "full" if space is None else space.label
    return AverageResult(
        value=float(val), exact=val, method="exact", space=label, dim=dim
    )


def monomial_pattern_counts(dim, space=None):
    """How many surviving monomials of each exponent pattern the oracle sees.

    Keys are descending tuples of the nonzero exponents m_a of
    ``prod |Z_a|^(2 m_a)``, e.g. (4,) for the pure eighth power and
    (1, 1, 1, 1) for four distinct squared moduli.
    """
    _, counts = _sigma_exact(dim, space)
    return dict(counts)


# ---------------------------------------------------------------------------
# Monte Carlo
# ---------------------------------------------------------------------------

def _merge_moments(stats):
    # Chan's parallel update, applied in fixed shard order
    n, mean, m2 = 0, 0.0, 0.0
    for cnt, s_mean, s_m2 in stats:
        if cnt == 0:
            continue
        delta = s_mean - mean
        tot = n + cnt
        mean += delta * cnt / tot
        m2 += s_m2 + delta * delta * n * cnt / tot
        n = tot
    return n, mean, m2


def _mc_run(values_of_shard, n_samples, seed, threads=1):
    """Sharded MC driver: per-shard RNG streams, order-fixed reduction."""
    if n_samples < 100:
        raise ValueError(f"need at least 100 samples, got {n_samples}")
    plan = []
    start = 0
    shard = 0
    while start < n_samples:
        cnt = min(MC_SHARD, n_samples - start)
        plan.append((shard, cnt))
        start += cnt
        shard += 1

    def run_one(item):
        idx, cnt = item
        vals = values_of_shard(rng_stream(seed, idx), cnt)
        return cnt, float(np.mean(vals)), float(np.var(vals) * cnt)

    threads = max(1, int(threads))
    if threads == 1:
        stats = [run_one(item) for item in plan]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            stats = list(pool.map(run_one, plan))
    n, mean, m2 = _merge_moments(stats)
    var = m2 / (n - 1)
    return McEstimate(
        mean=mean,
        std_error=math.sqrt(max(var, 0.0) / n),
        n_samples=n,
        seed=(seed, 0),
    )


def mc_avg(dim, space=None, n_samples=100_000, seed=0, threads=1):
    """Monte Carlo average of the orbit SIC distance, optionally in a subspace."""
    if dim < 2:
        raise DimensionError(f"dimension must be >= 2, got {dim}")
    if space is not None and space.ambient_dim != dim:
        raise DimensionError(
            f"subspace is ambient dim {space.ambient_dim}, requested {dim}"
        )
    if space is None:
        def values(rng, cnt):
            return f_H_batch(sample_fs_batch(dim, cnt, rng))
    else:
        emb_t = space.matrix.T

        def values(rng, cnt):
            return f_H_batch(sample_fs_batch(space.sub_dim, cnt, rng) @ emb_t)

    return _mc_run(values, n_samples, seed, threads)


def mc_avg_f(dim, n_samples=100_000, seed=0, threads=1):
    """Monte Carlo average of the unstructured SIC distance.

    Uses the single-overlap reduction: f averages to
    N^2(N^2-1)/2 * <(|<e_0|psi>|^2 - 1/(N+1))^2>, one inner product per
    sample, so each sample costs O(N).
    """
    if dim < 2:
        raise DimensionError(f"dimension must be >= 2, got {dim}")
    c = 1.0 / (dim + 1)
    scale = 0.5 * dim * dim * (dim * dim - 1)

    def values(rng, cnt):
        z0 = sample_fs_batch(dim, cnt, rng)[:, 0]
        t = z0.real * z0.real + z0.imag * z0.imag
        d = t - c
        return scale * d * d

    return _mc_run(values, n_samples, seed, threads)
