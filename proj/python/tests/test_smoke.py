import math

import numpy as np
import pytest

import relosc


def test_spectrum_g0():
    p = relosc.OscillatorParams.natural(0.0, 2.0)
    sol = relosc.compute_alpha_nu(p)
    assert sol.regime == relosc.Regime.Real
    assert sol.nu.real == pytest.approx(4.5311288741492748262, rel=1e-14)
    assert relosc.energy_level(0, p).real == pytest.approx(5.5311288741492748262, rel=1e-14)


def test_wavefunction_value_and_array():
    p = relosc.OscillatorParams.natural(0.5, 3.0)
    v = relosc.wavefunction(2, 1.7, p)
    assert abs(v - complex(0.034804048234005079872, -0.31532456468218186137)) < 1e-11
    arr = relosc.wavefunction(0, np.linspace(0.0, 5.0, 11), p)
    assert arr.shape == (11,)
    assert arr[0] == 0


def test_overlap_is_identity():
    g = relosc.overlap_matrix(5, relosc.OscillatorParams.natural(1.0, 4.0))
    assert g.shape == (5, 5)
    assert np.max(np.abs(g - np.eye(5))) < 1e-8


def test_cdh_paths_agree():
    cp = relosc.CdhParams(1.2, 0.8, 0.5)
    a = relosc.cdh_series(7, 2.3, cp)
    b = relosc.cdh_recurrence(7, 2.3, cp)
    assert abs(a - b) <= 1e-10 * abs(b)


def test_meixner_pollaczek_low_degree():
    assert relosc.meixner_pollaczek(2, 0.7, 1.3, math.pi / 2).real == pytest.approx(-0.32)


def test_collapse_raises():
    p = relosc.OscillatorParams.natural(-1.0, 1.0)
    assert relosc.classify_regime(p) == relosc.Regime.Collapse
    assert relosc.critical_coupling(p) == pytest.approx(-0.15625)
    with pytest.raises(relosc.CollapseError):
        relosc.wavefunction(0, 1.0, p)


def test_invalid_params():
    with pytest.raises(ValueError):
        relosc.OscillatorParams(-1.0, 1.0, 0.0, 1.0, 1.0)


def test_suite_subset():
    reports = relosc.run_verification_suite(only=["eigen-residual", "free-theory"])
    assert [r.check_name for r in reports] == ["eigen-residual", "free-theory"]
    assert all(r.passed for r in reports)
    assert "mp-even-identity" in relosc.check_names()
