import numpy as np
import pytest

from wavescale import FAMILIES, dwt1d, dwt1d_multilevel, get_filter_bank, idwt1d
from wavescale.errors import LengthMismatch, NotDivisible, OddLength, TooShort

import oracles

HAAR = get_filter_bank("haar")


def tol_for(family):
    return 1e-6 if family == "dmey" else 1e-8


def test_haar_analysis_of_1234():
    ca, cd = dwt1d(np.array([1.0, 2.0, 3.0, 4.0]), HAAR)
    assert np.allclose(ca, [3 / np.sqrt(2), 7 / np.sqrt(2)], atol=1e-12)
    assert np.allclose(np.abs(cd), [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-12)
    # exact values, sign included, via the independent dense-matrix route
    ca_ref, cd_ref = oracles.dwt1d_ref([1.0, 2.0, 3.0, 4.0], HAAR)
    assert np.allclose(ca, ca_ref, atol=1e-12)
    assert np.allclose(cd, cd_ref, atol=1e-12)


def test_haar_synthesis_of_unit_approx():
    out = idwt1d(np.array([1.0, 1.0]), np.array([0.0, 0.0]), HAAR)
    assert np.allclose(out, np.full(4, 1 / np.sqrt(2)), atol=1e-12)


def test_multilevel_constant_signal():
    c = 0.37
    ca, details = dwt1d_multilevel(np.full(8, c), HAAR, 2)
    assert np.allclose(ca, [2 * c, 2 * c], atol=1e-12)
    assert [d.size for d in details] == [4, 2]
    assert all(np.allclose(d, 0.0, atol=1e-12) for d in details)


def test_multilevel_zero_levels_is_identity():
    x = np.array([5.0, -1.0, 2.0, 2.0])
    ca, details = dwt1d_multilevel(x, HAAR, 0)
    assert np.array_equal(ca, x)
    assert details == []


def test_multilevel_matches_repeated_single_level():
    rng = np.random.default_rng(4)
    bank = get_filter_bank("db2")
    x = rng.standard_normal(32)
    ca, details = dwt1d_multilevel(x, bank, 3)
    run = x
    for level in range(3):
        run, cd = dwt1d(run, bank)
        assert np.allclose(details[level], cd, atol=1e-12)
    assert np.allclose(ca, run, atol=1e-12)


@pytest.mark.parametrize("family", FAMILIES)
def test_perfect_reconstruction_random_even_lengths(family):
    bank = get_filter_bank(family)
    rng = np.random.default_rng(0x5741)
    for n in (4, 6, 8, 10, 12, 16, 50, 64, 128, 512):
        x = rng.standard_normal(n)
        ca, cd = dwt1d(x, bank)
        err = np.max(np.abs(idwt1d(ca, cd, bank) - x))
        assert err <= tol_for(family), f"{family} n={n}: {err}"


@pytest.mark.parametrize("family", FAMILIES)
def test_matches_dense_matrix_oracle(family):
    bank = get_filter_bank(family)
    rng = np.random.default_rng(0x6F52)
    for n in (4, 8, 16, 64):
        x = rng.standard_normal(n)
        ca, cd = dwt1d(x, bank)
        ca_ref, cd_ref = oracles.dwt1d_ref(x, bank)
        assert np.max(np.abs(ca - ca_ref)) <= 1e-10
        assert np.max(np.abs(cd - cd_ref)) <= 1e-10
        y = idwt1d(ca, cd, bank)
        y_ref = oracles.idwt1d_ref(ca, cd, bank)
        assert np.max(np.abs(y - y_ref)) <= 1e-10


@pytest.mark.parametrize("family", ["haar", "db4", "bior4.4"])
def test_linearity(family):
    bank = get_filter_bank(family)
    rng = np.random.default_rng(8)
    x, y = rng.standard_normal((2, 24))
    a, b = 1.7, -0.3
    ca1, cd1 = dwt1d(a * x + b * y, bank)
    cax, cdx = dwt1d(x, bank)
    cay, cdy = dwt1d(y, bank)
    assert np.max(np.abs(ca1 - (a * cax + b * cay))) <= 1e-10
    assert np.max(np.abs(cd1 - (a * cdx + b * cdy))) <= 1e-10


@pytest.mark.parametrize("family", ["haar", "db2", "sym8"])
def test_shift_by_two_covariance(family):
    # circular shift of the input by 2 shifts both coefficient vectors by 1
    bank = get_filter_bank(family)
    rng = np.random.default_rng(12)
    x = rng.standard_normal(32)
    ca, cd = dwt1d(x, bank)
    ca2, cd2 = dwt1d(np.roll(x, 2), bank)
    assert np.max(np.abs(ca2 - np.roll(ca, 1))) <= 1e-10
    assert np.max(np.abs(cd2 - np.roll(cd, 1))) <= 1e-10


@pytest.mark.parametrize("family", FAMILIES)
def test_coefficient_domain_roundtrip(family):
    # analysis of a synthesized signal returns the coefficients themselves
    bank = get_filter_bank(family)
    rng = np.random.default_rng(77)
    ca = rng.standard_normal(16)
    cd = rng.standard_normal(16)
    ca2, cd2 = dwt1d(idwt1d(ca, cd, bank), bank)
    tol = tol_for(family)
    assert np.max(np.abs(ca2 - ca)) <= tol
    assert np.max(np.abs(cd2 - cd)) <= tol


def test_odd_length_rejected():
    with pytest.raises(OddLength):
        dwt1d(np.zeros(5), HAAR)


def test_too_short_rejected():
    with pytest.raises(TooShort):
        dwt1d(np.zeros(0), HAAR)
    with pytest.raises(TooShort):
        dwt1d(np.zeros(1), HAAR)


def test_non_1d_rejected():
    with pytest.raises(ValueError):
        dwt1d(np.zeros((4, 4)), HAAR)
    with pytest.raises(ValueError):
        idwt1d(np.zeros((2, 2)), np.zeros((2, 2)), HAAR)


def test_synthesis_length_mismatch_rejected():
    with pytest.raises(LengthMismatch):
        idwt1d(np.zeros(4), np.zeros(3), HAAR)


def test_synthesis_empty_rejected():
    with pytest.raises(ValueError):
        idwt1d(np.zeros(0), np.zeros(0), HAAR)


def test_multilevel_not_divisible():
    with pytest.raises(NotDivisible):
        dwt1d_multilevel(np.zeros(12), HAAR, 3)


def test_multilevel_negative_levels():
    with pytest.raises(ValueError):
        dwt1d_multilevel(np.zeros(8), HAAR, -1)
