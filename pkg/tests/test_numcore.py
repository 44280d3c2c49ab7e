import math
from fractions import Fraction

import numpy as np
import pytest

from sicframe import (
    Cyclo3,
    DimensionError,
    NormError,
    as_unit_vector,
    fs_moment,
    inner,
    rng_stream,
    sample_fs,
    sample_fs_batch,
)


def test_inner_basic():
    assert inner([1, 0, 0], [1, 0, 0]) == 1
    assert inner([1, 0], [0, 1]) == 0
    v = np.array([0, 1, -1]) / np.sqrt(2)
    assert abs(inner(v, [1, 0, 0])) == 0


def test_inner_conjugate_symmetry():
    rng = rng_stream(11)
    for _ in range(20):
        u = sample_fs(6, rng)
        v = sample_fs(6, rng)
        assert abs(inner(u, v) - np.conj(inner(v, u))) <= 1e-14


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionError):
        inner([1, 0], [1, 0, 0])


def test_as_unit_vector_renormalizes_within_tol():
    v = np.array([1.0 + 5e-13, 0.0])
    out = as_unit_vector(v)
    assert abs(np.linalg.norm(out) - 1.0) <= 1e-15


def test_as_unit_vector_rejects_far_from_unit():
    with pytest.raises(NormError):
        as_unit_vector([1.0, 1.0])


def test_sample_fs_dim1_unit_modulus():
    rng = rng_stream(0)
    for _ in range(10):
        z = sample_fs(1, rng)
        assert abs(abs(z[0]) - 1.0) <= 1e-14


def test_sample_fs_batch_matches_single():
    a = sample_fs(5, rng_stream(3))
    b = sample_fs_batch(5, 1, rng_stream(3))[0]
    assert np.array_equal(a, b)


def test_sample_fs_mean_abs_square():
    # <|Z_0|^2> = 1/N
    rng = rng_stream(1)
    z = sample_fs_batch(4, 100_000, rng)
    t = np.abs(z[:, 0]) ** 2
    se = t.std() / math.sqrt(t.size)
    assert abs(t.mean() - 0.25) <= 4 * se


def test_sample_fs_fourth_moment():
    # <|Z_0|^4> in dim 7 is 2/(7*8)
    rng = rng_stream(2)
    z = sample_fs_batch(7, 100_000, rng)
    t = np.abs(z[:, 0]) ** 4
    se = t.std() / math.sqrt(t.size)
    assert abs(t.mean() - 2.0 / 56.0) <= 4 * se


def test_sample_fs_unitary_invariance_proxy():
    # |<e_0|psi>|^2 and |<u|psi>|^2 agree in mean and variance for fixed u
    rng = rng_stream(4)
    n = 100_000
    z = sample_fs_batch(5, n, rng)
    u = sample_fs(5, rng_stream(99))
    t0 = np.abs(z[:, 0]) ** 2
    tu = np.abs(z @ np.conj(u)) ** 2
    se_mean = math.sqrt(t0.var() / n + tu.var() / n)
    assert abs(t0.mean() - tu.mean()) <= 4 * se_mean
    # standard error of a sample variance: sqrt((m4 - var^2)/n)
    def var_se(t):
        c = t - t.mean()
        m4 = np.mean(c ** 4)
        return math.sqrt(max(m4 - t.var() ** 2, 0.0) / t.size)
    se_var = math.sqrt(var_se(t0) ** 2 + var_se(tu) ** 2)
    assert abs(t0.var() - tu.var()) <= 4 * se_var


def test_mixed_phase_monomial_averages_to_zero():
    # <Z_0^2 conj(Z_0) conj(Z_1)> has unbalanced exponents, so it vanishes
    rng = rng_stream(5)
    z = sample_fs_batch(3, 100_000, rng)
    vals = z[:, 0] ** 2 * np.conj(z[:, 0]) * np.conj(z[:, 1])
    for part in (vals.real, vals.imag):
        se = part.std() / math.sqrt(part.size)
        assert abs(part.mean()) <= 4 * se


def test_rng_streams_are_independent_and_reproducible():
    a = rng_stream(7, 0).standard_normal(4)
    b = rng_stream(7, 0).standard_normal(4)
    c = rng_stream(7, 1).standard_normal(4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


# ---------------------------------------------------------------------------
# exact moments
# ---------------------------------------------------------------------------

def test_fs_moment_standard_integrals():
    # the five standard degree-8 integrals, exact for every dimension in
    # which the pattern fits (a k-coordinate pattern needs dim >= k)
    for n in range(2, 21):
        base = Fraction(math.factorial(n - 1), math.factorial(n + 3))
        if n >= 4:
            assert fs_moment(n, (1, 1, 1, 1)) == base
        if n >= 3:
            assert fs_moment(n, (2, 1, 1)) == 2 * base
        assert fs_moment(n, (2, 2)) == 4 * base
        assert fs_moment(n, (3, 1)) == 6 * base
        assert fs_moment(n, (4,)) == 24 * base


def test_fs_moment_values():
    assert fs_moment(7, (4,)) == Fraction(1, 210)
    assert fs_moment(5, ()) == 1
    assert fs_moment(3, (0, 0, 0)) == 1
    assert fs_moment(4, (1,)) == Fraction(1, 4)
    assert fs_moment(4, (2,)) == Fraction(2, 4 * 5)


def test_fs_moment_exponent_order_irrelevant():
    assert fs_moment(6, (2, 0, 1)) == fs_moment(6, (0, 1, 2))


def test_fs_moment_errors():
    with pytest.raises(DimensionError):
        fs_moment(0, (1,))
    with pytest.raises(DimensionError):
        fs_moment(2, (1, 1, 1))
    with pytest.raises(ValueError):
        fs_moment(3, (-1,))


# ---------------------------------------------------------------------------
# exact third-root-of-unity arithmetic
# ---------------------------------------------------------------------------

def test_cyclo3_ring_relations():
    w = Cyclo3.omega_pow(1)
    assert w * w == Cyclo3.omega_pow(2)
    assert w * w * w == Cyclo3.one()
    assert w * w + w + Cyclo3.one() == Cyclo3.zero()
    assert Cyclo3.omega_pow(5) == Cyclo3.omega_pow(2)


def test_cyclo3_conjugation_and_complex_value():
    w = Cyclo3.omega_pow(1)
    assert w.conjugate() == Cyclo3.omega_pow(2)
    assert abs(complex(w) - np.exp(2j * np.pi / 3)) <= 1e-15
    x = Cyclo3(Fraction(3, 4), Fraction(-2, 5))
    assert abs(complex(x.conjugate()) - complex(x).conjugate()) <= 1e-15


def test_cyclo3_rational_predicate():
    assert Cyclo3.rational(Fraction(5, 3)).is_rational
    assert not Cyclo3.omega_pow(1).is_rational
    assert (Cyclo3.omega_pow(1) + Cyclo3.omega_pow(2)).is_rational
