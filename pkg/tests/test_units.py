import math

import pytest

import pfspec as pf
from pfspec import units

# CODATA 2018 reduced Compton wavelength of the electron
ELECTRON_COMPTON_M = 3.8615926796e-13
# CODATA 2018 fine-structure constant
ALPHA_CODATA = 7.2973525693e-3


def test_electron_compton_length():
    scheme = pf.make_unit_scheme(510998.95)
    assert scheme.compton_length == pytest.approx(ELECTRON_COMPTON_M, rel=1e-8)


def test_closure_identity():
    for rest in (1.0, 510998.95, 9.38272e8):
        scheme = pf.make_unit_scheme(rest)
        assert scheme.closure_residual < 1e-12


def test_natural_units_override():
    scheme = pf.make_unit_scheme(1.0, hbar=1.0, c=1.0, ev_to_joule=1.0)
    assert scheme.compton_length == 1.0


def test_non_positive_rest_energy_rejected():
    with pytest.raises(ValueError):
        pf.make_unit_scheme(0.0)
    with pytest.raises(ValueError):
        pf.make_unit_scheme(-13.6)


def test_round_trip_conversion():
    scheme = pf.electron_scheme()
    for e in (-13.6057, 0.0, 1.0, 510998.95, 2.5e6):
        assert scheme.to_ev(scheme.to_dimensionless(e)) == pytest.approx(e, rel=1e-12, abs=1e-300)


def test_hydrogen_coupling_matches_quoted_square():
    g = pf.hydrogen_coupling()
    assert g.gsq == pytest.approx(5.4e-5, rel=0.02)
    assert g.g == pytest.approx(ALPHA_CODATA, rel=1e-6)
    assert g.gsq == pytest.approx(g.g * g.g, rel=1e-15)


def test_zero_coupling():
    g = units.CouplingG(0.0)
    assert g.gsq == 0.0


def test_coupling_bounds():
    with pytest.raises(ValueError):
        units.CouplingG(0.5)
    with pytest.raises(ValueError):
        units.CouplingG(-1e-3)


def test_nonrel_level_value():
    g = pf.CouplingG.from_gsq(5.4e-5)
    assert pf.non_rel_hydrogen_level(1, g) == pytest.approx(-2.7e-5, rel=1e-12)
    assert pf.non_rel_hydrogen_level(2, units.CouplingG(0.0)) == 0.0


def test_nonrel_level_scaling():
    g = pf.hydrogen_coupling()
    base = pf.non_rel_hydrogen_level(1, g)
    for n in range(1, 12):
        assert n * n * pf.non_rel_hydrogen_level(n, g) == pytest.approx(base, rel=1e-14)


def test_nonrel_level_electron_ev():
    scheme = pf.electron_scheme()
    ev = scheme.to_ev(pf.non_rel_hydrogen_level(1, pf.hydrogen_coupling()))
    assert ev == pytest.approx(-13.6057, abs=2e-4)


def test_nonrel_level_domain():
    with pytest.raises(ValueError):
        pf.non_rel_hydrogen_level(0, pf.hydrogen_coupling())


def test_oscillator_coupling_regime_warning():
    lam = units.OscillatorCoupling(0.05)
    with pytest.warns(UserWarning):
        lam.check_regime(5)


def test_oscillator_coupling_validation():
    with pytest.raises(ValueError):
        units.OscillatorCoupling(-1e-3)


def test_config_file_round_trip(tmp_path):
    cfg = tmp_path / "constants.cfg"
    cfg.write_text("# overrides\nrest_energy_ev = 1.0\nhbar=1.0\nc = 1.0\ng=0.01\n")
    values = pf.load_config(str(cfg))
    assert values == {"rest_energy_ev": 1.0, "hbar": 1.0, "c": 1.0, "g": 0.01}
    scheme = units.scheme_from_config(values)
    assert scheme.rest_energy_ev == 1.0
    assert units.coupling_from_config(values).g == 0.01


def test_config_file_rejects_unknown_key(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("mass = 2\n")
    with pytest.raises(ValueError):
        pf.load_config(str(cfg))
