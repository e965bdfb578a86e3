import pytest

from majcoh import DEFAULT_TOL, ToleranceConfig


def test_defaults():
    assert DEFAULT_TOL.norm_tol == 1e-10
    assert DEFAULT_TOL.herm_tol == 1e-10
    assert DEFAULT_TOL.psd_tol == 1e-9
    assert DEFAULT_TOL.complete_tol == 1e-9
    assert DEFAULT_TOL.major_tol == 1e-10
    assert DEFAULT_TOL.purity_tol == 1e-10
    assert DEFAULT_TOL.nonneg_tol == 1e-12


def test_all_fields_must_be_positive():
    with pytest.raises(ValueError, match="norm_tol"):
        ToleranceConfig(norm_tol=0.0)
    with pytest.raises(ValueError, match="major_tol"):
        ToleranceConfig(major_tol=-1e-10)


def test_replace_overrides_one_field():
    loose = DEFAULT_TOL.replace(norm_tol=1e-5)
    assert loose.norm_tol == 1e-5
    assert loose.herm_tol == DEFAULT_TOL.herm_tol
