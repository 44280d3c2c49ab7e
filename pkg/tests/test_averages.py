from fractions import Fraction

import numpy as np
import pytest

from sicframe import (
    DimensionError,
    NotTabulatedError,
    UnsupportedSubspaceError,
    analytic_avg_f,
    analytic_avg_fH,
    analytic_avg_fH_subspace,
    build_parity_subspaces,
    build_zauner7_subspaces,
    embedding_for_label,
    exact_avg_fH,
    mc_avg,
    mc_avg_f,
    monomial_pattern_counts,
)


# ---------------------------------------------------------------------------
# analytic closed forms
# ---------------------------------------------------------------------------

def test_analytic_avg_f_values():
    assert analytic_avg_f(7).exact == Fraction(147, 8)
    assert analytic_avg_f(7).value == 18.375
    assert analytic_avg_f(2).exact == Fraction(2, 3)


def test_analytic_avg_f_monotone_ratio():
    # value / (N^2/2) = (N-1)/(N+1) increases toward 1
    prev = 0.0
    for n in range(2, 30):
        ratio = analytic_avg_f(n).value / (n * n / 2)
        assert prev < ratio < 1.0
        prev = ratio


def test_analytic_avg_fH_values():
    assert analytic_avg_fH(7).exact == Fraction(343, 24)
    assert analytic_avg_fH(2).exact == Fraction(8, 15)
    assert analytic_avg_fH(3).exact == Fraction(27, 20)


def test_analytic_subspace_values():
    assert analytic_avg_fH_subspace("hminus", 7).exact == Fraction(1029, 40)
    assert analytic_avg_fH_subspace("hminus", 7).value == 25.725
    assert analytic_avg_fH_subspace("hplus", 7).exact == Fraction(1029, 40)
    assert analytic_avg_fH_subspace("zauner1", 7).exact == Fraction(51793, 3240)
    assert analytic_avg_fH_subspace("zauner-alpha", 7).exact == Fraction(12691, 1080)
    assert analytic_avg_fH_subspace("zauner-alpha2", 7).exact == Fraction(12691, 1080)
    assert analytic_avg_fH_subspace("hplus", 3).exact == Fraction(27, 10)


def test_analytic_subspace_not_tabulated():
    with pytest.raises(NotTabulatedError):
        analytic_avg_fH_subspace("hminus", 3)
    with pytest.raises(NotTabulatedError):
        analytic_avg_fH_subspace("zauner1", 9)
    with pytest.raises(NotTabulatedError):
        analytic_avg_fH_subspace("hplus", 4)
    # multiples of 3 fall outside the generic parity closed form
    with pytest.raises(NotTabulatedError):
        analytic_avg_fH_subspace("hplus", 9)
    with pytest.raises(UnsupportedSubspaceError):
        analytic_avg_fH_subspace("bogus", 7)


# ---------------------------------------------------------------------------
# exact oracle
# ---------------------------------------------------------------------------

def test_exact_matches_analytic_full_space():
    for n in range(2, 10):
        assert exact_avg_fH(n).exact == analytic_avg_fH(n).exact


def test_exact_subspace_values():
    plus5, minus5 = build_parity_subspaces(5)
    one, alpha, alpha2 = build_zauner7_subspaces()
    assert exact_avg_fH(5, minus5).exact == Fraction(125, 12)
    assert exact_avg_fH(5, plus5).exact == Fraction(125, 12)
    assert exact_avg_fH(7, one).exact == Fraction(51793, 3240)
    assert exact_avg_fH(7, alpha).exact == Fraction(12691, 1080)
    assert exact_avg_fH(7, alpha2).exact == exact_avg_fH(7, alpha).exact


def test_exact_minus_dim3_is_zero():
    _, minus3 = build_parity_subspaces(3)
    assert exact_avg_fH(3, minus3).exact == 0


def test_exact_agrees_with_analytic_on_tabulated_subspaces():
    for label, dim in (("hplus", 5), ("hminus", 5), ("hplus", 7), ("hminus", 7),
                       ("hplus", 11), ("hminus", 11), ("hplus", 3),
                       ("zauner1", 7), ("zauner-alpha", 7), ("zauner-alpha2", 7)):
        emb = embedding_for_label(label, dim)
        assert exact_avg_fH(dim, emb).exact == \
            analytic_avg_fH_subspace(label, dim).exact


def test_exact_parity_split_when_three_divides_dim():
    # at N = 9 the two parity eigenspace averages differ and neither matches
    # the generic closed form (extra index coincidences survive)
    plus9, minus9 = build_parity_subspaces(9)
    exp = exact_avg_fH(9, plus9).exact
    exm = exact_avg_fH(9, minus9).exact
    assert exp == Fraction(13851, 280)
    assert exm == Fraction(6561, 140)
    assert exp != exm != Fraction(9 ** 3 * 8, 12 * 10)


def test_exact_result_record():
    res = exact_avg_fH(7)
    assert res.method == "exact"
    assert res.value == float(res.exact)
    rec = res.record()
    assert list(rec) == ["dim", "space", "method", "value", "exact",
                         "std_error", "n_samples", "seed"]
    assert rec["exact"] == "343/24"
    assert rec["std_error"] is None


def test_exact_threads_bitwise_identical():
    emb = embedding_for_label("zauner1", 7)
    a = exact_avg_fH(7, emb, threads=1)
    b = exact_avg_fH(7, emb, threads=4)
    assert a.exact == b.exact
    assert a.value == b.value
    c = exact_avg_fH(6, threads=3)
    assert c.exact == exact_avg_fH(6).exact


def test_exact_wrong_ambient_dim():
    plus5, _ = build_parity_subspaces(5)
    with pytest.raises(DimensionError):
        exact_avg_fH(7, plus5)


def test_pattern_counts_odd_n():
    for n in (5, 7):
        counts = monomial_pattern_counts(n)
        assert counts == {
            (4,): n,
            (2, 2): 3 * n * (n - 1),
            (2, 1, 1): 6 * n * (n - 1),
            (1, 1, 1, 1): 3 * n * (n - 1) * (n - 3),
        }


def test_pattern_counts_even_n_differ_from_odd_formula():
    # even dimensions pick up extra surviving cross terms, so the counts
    # exceed the odd-N tallies (e.g. the two-fourth-powers pattern)
    for n in (4, 6):
        counts = monomial_pattern_counts(n)
        assert counts[(2, 2)] > 3 * n * (n - 1)
        assert counts[(4,)] == n


# ---------------------------------------------------------------------------
# Monte Carlo
# ---------------------------------------------------------------------------

def test_mc_avg_full_space_dim3():
    est = mc_avg(3, None, n_samples=20_000, seed=1)
    assert abs(est.mean - 27.0 / 20.0) <= 4 * est.std_error
    assert est.n_samples == 20_000
    assert est.seed == (1, 0)


def test_mc_avg_seed_deterministic():
    a = mc_avg(3, None, n_samples=5_000, seed=9)
    b = mc_avg(3, None, n_samples=5_000, seed=9)
    assert (a.mean, a.std_error) == (b.mean, b.std_error)
    c = mc_avg(3, None, n_samples=5_000, seed=10)
    assert a.mean != c.mean


def test_mc_avg_thread_count_invariant():
    a = mc_avg(4, None, n_samples=100_000, seed=3, threads=1)
    b = mc_avg(4, None, n_samples=100_000, seed=3, threads=4)
    assert (a.mean, a.std_error, a.n_samples) == (b.mean, b.std_error, b.n_samples)


def test_mc_avg_constant_subspace():
    _, minus5 = build_parity_subspaces(5)
    est = mc_avg(5, minus5, n_samples=10_000, seed=2)
    assert abs(est.mean - 125.0 / 12.0) <= 1e-9
    assert est.std_error <= 1e-10 * est.mean


def test_mc_avg_single_ray_subspace():
    _, minus3 = build_parity_subspaces(3)
    est = mc_avg(3, minus3, n_samples=1_000, seed=0)
    assert abs(est.mean) <= 1e-12
    assert est.std_error <= 1e-12


def test_mc_avg_f_values():
    est = mc_avg_f(2, n_samples=200_000, seed=4)
    assert abs(est.mean - 2.0 / 3.0) <= 4 * est.std_error
    est7 = mc_avg_f(7, n_samples=200_000, seed=5)
    assert abs(est7.mean - 18.375) <= 4 * est7.std_error


def test_mc_requires_min_samples():
    with pytest.raises(ValueError):
        mc_avg(3, None, n_samples=50, seed=0)


def test_mc_result_record():
    est = mc_avg(3, None, n_samples=1_000, seed=8)
    rec = est.to_result(3, "full").record()
    assert rec["method"] == "mc"
    assert rec["exact"] is None
    assert rec["n_samples"] == 1_000
    assert rec["seed"] == [8, 0]


def test_mc_phase_unbalanced_monomial_vanishes():
    # random unbalanced monomial: MC mean consistent with the oracle's zero
    from sicframe import rng_stream, sample_fs_batch
    z = sample_fs_batch(4, 50_000, rng_stream(6))
    vals = z[:, 1] ** 2 * np.conj(z[:, 2]) * np.conj(z[:, 3])
    for part in (vals.real, vals.imag):
        se = part.std() / np.sqrt(part.size)
        assert abs(part.mean()) <= 4 * se
