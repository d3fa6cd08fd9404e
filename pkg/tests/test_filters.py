import numpy as np
import pytest

from wavescale import FAMILIES, FilterBank, derive_highpass, get_filter_bank, validate_bank
from wavescale.errors import NotOrthogonal, UnknownFamily

SQRT2 = np.sqrt(2.0)

# analysis filter lengths per family
EXPECTED_LENGTHS = {
    "haar": 2,
    "db2": 4,
    "db4": 8,
    "sym8": 16,
    "coif3": 18,
    "bior3.3": 8,
    "bior4.4": 10,
    "bior6.8": 18,
    "rbio3.3": 8,
    "dmey": 62,
}

ORTHOGONAL = [f for f in FAMILIES if get_filter_bank(f).orthogonal]
BIORTHOGONAL = [f for f in FAMILIES if not get_filter_bank(f).orthogonal]


def test_family_enumeration():
    assert set(FAMILIES) == set(EXPECTED_LENGTHS)
    assert len(FAMILIES) == 10


def test_unknown_family_rejected():
    with pytest.raises(UnknownFamily):
        get_filter_bank("db3")
    with pytest.raises(UnknownFamily):
        get_filter_bank("")


@pytest.mark.parametrize("family", FAMILIES)
def test_filter_lengths(family):
    bank = get_filter_bank(family)
    assert len(bank.dec_lo) == EXPECTED_LENGTHS[family]
    assert len(bank.dec_lo) == len(bank.dec_hi)
    assert len(bank.rec_lo) == len(bank.rec_hi)


def test_haar_exact_coefficients():
    bank = get_filter_bank("haar")
    assert np.allclose(bank.dec_lo, [1 / SQRT2, 1 / SQRT2], atol=1e-15)
    assert np.allclose(np.abs(bank.dec_hi), [1 / SQRT2, 1 / SQRT2], atol=1e-15)
    assert np.isclose(np.sum(bank.dec_hi), 0.0, atol=1e-15)
    assert bank.orthogonal


def test_biorthogonal_flags():
    assert set(BIORTHOGONAL) == {"bior3.3", "bior4.4", "bior6.8", "rbio3.3"}


@pytest.mark.parametrize("family", ORTHOGONAL)
def test_orthogonal_sum_identities(family):
    bank = get_filter_bank(family)
    assert abs(np.sum(bank.dec_lo) - SQRT2) <= 1e-10
    assert abs(np.sum(bank.dec_hi)) <= 1e-10
    assert abs(np.sum(np.square(bank.dec_lo)) - 1.0) <= 1e-10


@pytest.mark.parametrize("family", ORTHOGONAL)
def test_derive_highpass_matches_embedded(family):
    bank = get_filter_bank(family)
    derived = derive_highpass(bank.dec_lo)
    same = np.max(np.abs(derived - bank.dec_hi))
    flipped = np.max(np.abs(derived + bank.dec_hi))
    assert min(same, flipped) <= 1e-10


def test_derive_highpass_haar():
    derived = derive_highpass(np.array([1 / SQRT2, 1 / SQRT2]))
    target = np.array([1 / SQRT2, -1 / SQRT2])
    assert (np.allclose(derived, target, atol=1e-12)
            or np.allclose(derived, -target, atol=1e-12))


@pytest.mark.parametrize("family", BIORTHOGONAL)
def test_derive_highpass_rejects_biorthogonal(family):
    bank = get_filter_bank(family)
    with pytest.raises(NotOrthogonal):
        derive_highpass(bank.dec_lo)


@pytest.mark.parametrize("family", FAMILIES)
def test_validate_bank_passes(family):
    report = validate_bank(get_filter_bank(family))
    assert report.ok
    assert report.reconstruction_ok
    assert report.counts_ok
    assert report.identities_ok
    budget = 1e-6 if family == "dmey" else 1e-8
    assert report.max_roundtrip_error <= budget


def test_validate_bank_detects_destroyed_highpass():
    good = get_filter_bank("haar")
    broken = FilterBank(
        family="haar",
        dec_lo=np.array(good.dec_lo),
        dec_hi=np.zeros_like(good.dec_hi),
        rec_lo=np.array(good.rec_lo),
        rec_hi=np.array(good.rec_hi),
        orthogonal=True,
    )
    report = validate_bank(broken)
    assert not report.reconstruction_ok
    assert not report.ok


@pytest.mark.parametrize("family", FAMILIES)
def test_roundtrip_even_lengths_4_to_256(family):
    from wavescale import dwt1d, idwt1d

    bank = get_filter_bank(family)
    tol = 1e-6 if family == "dmey" else 1e-8
    rng = np.random.default_rng(hash(family) % 2**32)
    for n in (4, 6, 10, 16, 34, 64, 130, 256):
        x = rng.standard_normal(n)
        ca, cd = dwt1d(x, bank)
        assert ca.shape == cd.shape == (n // 2,)
        err = np.max(np.abs(idwt1d(ca, cd, bank) - x))
        assert err <= tol, f"{family} n={n}: {err}"


@pytest.mark.parametrize("family", ORTHOGONAL)
def test_energy_identity(family):
    from wavescale import dwt1d

    bank = get_filter_bank(family)
    rng = np.random.default_rng(99)
    for n in (8, 32, 128):
        x = rng.standard_normal(n)
        ca, cd = dwt1d(x, bank)
        lhs = np.sum(ca**2) + np.sum(cd**2)
        rhs = np.sum(x**2)
        assert abs(lhs - rhs) <= 1e-8 * rhs


def test_bank_arrays_are_read_only():
    bank = get_filter_bank("db2")
    with pytest.raises(ValueError):
        bank.dec_lo[0] = 0.0
