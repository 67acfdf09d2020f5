import math
from math import factorial

import numpy as np
import pytest
from scipy import integrate
from scipy.special import sph_harm_y

import pfspec as pf
from pfspec import hydrogen

G_54 = pf.CouplingG.from_gsq(5.4e-5)  # rounded coupling with G^2 = 5.4e-5
ALPHA = pf.hydrogen_coupling()

# N/sqrt(G^2+N^2) at n=1, l=0, G^2 = 5.4e-5, evaluated with 50-digit mpmath
E_1S_G54 = 0.9999729981772933


def laguerre_coefficients(n, l):
    """Row of the associated Laguerre polynomial L^{2l+1}_{n-l-1}(2*rho),
    normalised to a unit constant term; independent closed form."""
    q = n - l - 1
    p = 2 * l + 1
    return [(-1) ** j * 2 ** j * factorial(q) * factorial(p)
            / (factorial(q - j) * factorial(p + j) * factorial(j))
            for j in range(q + 1)]


# ---------------------------------------------------------------------------
# quantum numbers and coefficients
# ---------------------------------------------------------------------------

def test_quantum_state_validation():
    state = pf.QuantumState(3, 1, -1)
    assert state.jmax == 1
    with pytest.raises(ValueError):
        pf.QuantumState(0, 0)
    with pytest.raises(ValueError):
        pf.QuantumState(2, 2)
    with pytest.raises(ValueError):
        pf.QuantumState(2, 1, 2)
    with pytest.raises(ValueError):
        pf.QuantumState(2, 0, m=1)


def test_state_relation_n_jmax():
    for n in range(1, 7):
        for l in range(n):
            assert pf.QuantumState(n, l).jmax + l + 1 == n


def test_shifted_index_consistency():
    for l in range(5):
        b = pf.shifted_orbital_index(l, G_54)
        assert b * (b + 1.0) == pytest.approx(l * (l + 1) - G_54.gsq, abs=1e-12)
        assert b == pytest.approx(-0.5 + math.sqrt((l + 0.5) ** 2 - G_54.gsq), rel=1e-15)


def test_shifted_index_domain_error():
    from types import SimpleNamespace

    # the CouplingG type already forbids G >= 1/2, so the complex-index
    # guard is only reachable with a raw coupling stand-in
    overstrong = SimpleNamespace(g=0.6, gsq=0.36)
    with pytest.raises(ValueError):
        hydrogen.shifted_orbital_index(0, overstrong)
    assert pf.shifted_orbital_index(1, pf.CouplingG(0.49)) > 0


def test_radial_coefficients_invariants():
    state = pf.QuantumState(2, 1)
    energy = pf.exact_energy(state, G_54)
    coeffs = pf.RadialCoefficients.from_energy(1, energy, G_54)
    assert coeffs.a == pytest.approx(2.0 * energy * G_54.g, rel=1e-15)
    assert coeffs.d ** 2 == pytest.approx(1.0 - energy * energy, rel=1e-12)
    assert coeffs.d ** 2 > 0
    assert coeffs.rho0 == pytest.approx(coeffs.a / coeffs.d, rel=1e-14)
    with pytest.raises(ValueError):
        pf.RadialCoefficients.from_energy(1, 1.5, G_54)


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def test_exact_energy_zero_coupling():
    g0 = pf.CouplingG(0.0)
    for n in range(1, 5):
        for l in range(n):
            assert pf.exact_energy(pf.QuantumState(n, l), g0) == 1.0


def test_exact_energy_frozen_value():
    energy = pf.exact_energy(pf.QuantumState(1, 0), G_54)
    assert energy == pytest.approx(E_1S_G54, rel=1e-15)
    assert energy == pytest.approx(1.0 - 2.7e-5, abs=2e-9)
    assert 0.0 < energy < 1.0


def test_exact_energy_minus_branch():
    energy = pf.exact_energy(pf.QuantumState(1, 0), G_54, branch=-1)
    assert energy == pytest.approx(-E_1S_G54, rel=1e-15)


def test_branch_identity():
    for n in range(1, 6):
        for l in range(n):
            state = pf.QuantumState(n, l)
            energy = pf.exact_energy(state, ALPHA)
            n_index = state.jmax + 0.5 + math.sqrt((l + 0.5) ** 2 - ALPHA.gsq)
            lhs = energy * energy * (ALPHA.gsq + n_index * n_index)
            assert lhs == pytest.approx(n_index * n_index, rel=1e-13)


def test_monotone_in_jmax_and_l():
    for l in range(3):
        energies = [pf.exact_energy(pf.QuantumState(n, l), ALPHA)
                    for n in range(l + 1, l + 5)]
        assert all(b > a for a, b in zip(energies, energies[1:]))
    for n in range(2, 6):
        energies = [pf.exact_energy(pf.QuantumState(n, l), ALPHA) for l in range(n)]
        assert all(b > a for a, b in zip(energies, energies[1:]))


def test_degeneracy_break_at_fourth_order():
    gap = (pf.exact_energy(pf.QuantumState(2, 1), G_54)
           - pf.exact_energy(pf.QuantumState(2, 0), G_54))
    predicted = (pf.expanded_energy(pf.QuantumState(2, 1), G_54)
                 - pf.expanded_energy(pf.QuantumState(2, 0), G_54))
    g6 = G_54.g ** 6
    assert gap > 0
    assert abs(gap - predicted) <= 20.0 * g6


def test_expanded_energy_zero_coupling():
    assert pf.expanded_energy(pf.QuantumState(3, 1), pf.CouplingG(0.0)) == 1.0


def test_expanded_matches_exact_to_sixth_order():
    g6 = ALPHA.g ** 6
    for n in range(1, 6):
        for l in range(n):
            state = pf.QuantumState(n, l)
            gap = abs(pf.exact_energy(state, ALPHA) - pf.expanded_energy(state, ALPHA))
            assert gap <= 10.0 * g6


def test_first_level_correction_electron_volts():
    scheme = pf.electron_scheme()
    e_n = pf.non_rel_hydrogen_level(1, ALPHA)
    correction = pf.expanded_energy(pf.QuantumState(1, 0), ALPHA) - 1.0 - e_n
    assert scheme.to_ev(correction) == pytest.approx(-9.05e-4, rel=5e-3)
    # assembled binding: E_1 plus the quartic correction
    assert scheme.to_ev(e_n) == pytest.approx(-13.6057, abs=1e-4)


def test_composed_expansion_chain():
    g6 = ALPHA.g ** 6
    for n in range(1, 6):
        for l in range(n):
            state = pf.QuantumState(n, l)
            gap = abs(pf.composed_expanded_energy(state, ALPHA)
                      - pf.expanded_energy(state, ALPHA))
            assert gap <= 10.0 * g6


def test_zero_coupling_limit_of_binding():
    # (E - 1)/G^2 -> -1/(2 n^2); stable binding evaluation, G small enough
    # that the O(G^2) remainder sits below the 1e-10 gate
    g_small = pf.CouplingG(1e-6)
    for n in range(1, 6):
        for l in range(n):
            ratio = pf.exact_binding_energy(pf.QuantumState(n, l), g_small) / g_small.gsq
            assert abs(ratio + 1.0 / (2.0 * n * n)) < 1e-10


def test_zero_coupling_limit_second_order_remainder():
    # at G = 1e-4 the same ratio differs from -1/(2n^2) by c4*G^2 with
    # c4 = 3/(8 n^4) - 1/(2 n^3 (l+1/2))
    g = pf.CouplingG(1e-4)
    for n, l in ((1, 0), (3, 1)):
        ratio = pf.exact_binding_energy(pf.QuantumState(n, l), g) / g.gsq
        c4 = 3.0 / (8.0 * n ** 4) - 1.0 / (2.0 * n ** 3 * (l + 0.5))
        assert ratio + 1.0 / (2.0 * n * n) == pytest.approx(c4 * g.gsq, rel=1e-3)


def test_termination_duality():
    for n in range(1, 6):
        for l in range(n):
            state = pf.QuantumState(n, l)
            assert pf.energy_from_termination(state, ALPHA) == pytest.approx(
                pf.exact_energy(state, ALPHA), abs=1e-12)


# ---------------------------------------------------------------------------
# series solution
# ---------------------------------------------------------------------------

def test_series_trivial_for_jmax_zero():
    for l in range(4):
        series = pf.series_solve(pf.QuantumState(l + 1, l), G_54)
        assert series.coeffs == (1.0,)


def test_series_2s_coefficient_at_zero_coupling():
    # recursion with rho0 = 4, B = 0 gives c1 = (2 - 4)/(1*2) = -1, the
    # associated-Laguerre value in the rho variable
    series = pf.series_solve(pf.QuantumState(2, 0), pf.CouplingG(0.0))
    assert series.rho0 == 4.0
    assert series.b == 0.0
    assert series.coeffs[1] == pytest.approx(-1.0, abs=1e-15)


def test_series_recursion_recomputation():
    for n in range(1, 7):
        for l in range(n):
            series = pf.series_solve(pf.QuantumState(n, l), G_54)
            for j in range(series.jmax):
                step = hydrogen.recursion_step(j, series.b, series.rho0)
                assert series.coeffs[j + 1] == pytest.approx(
                    step * series.coeffs[j], rel=1e-15)


def test_series_termination():
    for n in range(1, 7):
        for l in range(n):
            series = pf.series_solve(pf.QuantumState(n, l), G_54)
            leftover = (hydrogen.recursion_step(series.jmax, series.b, series.rho0)
                        * series.coeffs[-1])
            assert abs(leftover) < 1e-14 * abs(series.coeffs[-1])


def test_series_matches_laguerre_at_zero_coupling():
    g0 = pf.CouplingG(0.0)
    for n in range(1, 7):
        for l in range(n):
            series = pf.series_solve(pf.QuantumState(n, l), g0)
            reference = laguerre_coefficients(n, l)
            assert len(series.coeffs) == len(reference)
            for computed, expected in zip(series.coeffs, reference):
                assert computed == pytest.approx(expected, abs=1e-12)


def test_series_energy_matches_exact():
    series = pf.series_solve(pf.QuantumState(3, 1), G_54)
    assert series.energy == pytest.approx(
        pf.exact_energy(pf.QuantumState(3, 1), G_54), abs=1e-14)


# ---------------------------------------------------------------------------
# radial wavefunction
# ---------------------------------------------------------------------------

def radial_for(n, l, coupling=G_54):
    return pf.radial_wavefunction(pf.series_solve(pf.QuantumState(n, l), coupling))


def test_u_vanishes_at_origin():
    for n, l in ((1, 0), (3, 1), (4, 3)):
        radial = radial_for(n, l)
        assert float(radial.u(0.0)) == 0.0


@pytest.mark.parametrize("n,l", [(n, l) for n in range(1, 5) for l in range(n)])
def test_u_node_count(n, l):
    radial = radial_for(n, l)
    grid = np.linspace(1e-4, 60.0, 20001)
    values = radial.u(grid)
    assert int(np.sum(values[:-1] * values[1:] < 0)) == n - l - 1


@pytest.mark.parametrize("n,l", [(n, l) for n in range(1, 5) for l in range(n)])
def test_radial_equation_residual(n, l):
    radial = radial_for(n, l)
    series = radial.series
    w = lambda rho: 1.0 - series.rho0 / rho + series.b * (series.b + 1.0) / rho ** 2
    grid = np.linspace(0.01, 40.0, 1500)
    step = 3e-3 * np.minimum(grid, 1.0) ** 0.8
    assert pf.grid_residual(radial.u, w, grid, step) < 1e-8


@pytest.mark.parametrize("n,l", [(1, 0), (2, 1), (4, 0)])
def test_radial_normalization(n, l):
    radial = radial_for(n, l)
    top = 80.0 / radial.series.d
    total, _ = integrate.quad(lambda r: float(radial(r)) ** 2 * r * r,
                              1e-12, top, limit=400, epsabs=1e-14, epsrel=1e-12)
    assert total == pytest.approx(1.0, abs=1e-8)


def test_radial_ground_state_matches_nonrelativistic_form():
    # R_10 -> 2 a^(-3/2) exp(-r/a) with a = 1/G as the coupling shrinks
    g = pf.CouplingG(1e-3)
    radial = radial_for(1, 0, g)
    a = 1.0 / g.g
    for r in (0.3 * a, a, 2.5 * a):
        reference = 2.0 * a ** -1.5 * math.exp(-r / a)
        assert float(radial(r)) == pytest.approx(reference, rel=5e-3)


def test_radial_orthogonality_small_coupling():
    # equal-l, different-n overlaps: not exactly zero here (the effective
    # problem depends on E), but below 1e-6 for G <= 1e-3
    for g_value in (1e-4, 1e-3):
        g = pf.CouplingG(g_value)
        for l in (0, 1):
            functions = {n: radial_for(n, l, g) for n in range(l + 1, 4)}
            top = 220.0 / functions[3].series.d
            for n1 in functions:
                for n2 in functions:
                    if n1 >= n2:
                        continue
                    overlap, _ = integrate.quad(
                        lambda r: float(functions[n1](r)) * float(functions[n2](r)) * r * r,
                        1e-12, top, limit=500, epsabs=1e-14, epsrel=1e-12)
                    assert abs(overlap) < 1e-6


# ---------------------------------------------------------------------------
# angular factor
# ---------------------------------------------------------------------------

def angular_quadrature(f):
    xs, ws = np.polynomial.legendre.leggauss(64)
    theta = np.arccos(xs)
    phi = np.linspace(0.0, 2.0 * np.pi, 129)[:-1]
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    return float(np.sum(ws[:, None] * f(th, ph)) * (2.0 * np.pi / 128.0))


def test_monopole_harmonic_constant():
    y00 = pf.spherical_harmonic(0, 0)
    for theta, phi in ((0.3, 0.0), (1.2, 2.0), (2.9, 5.5)):
        assert complex(y00(theta, phi)) == pytest.approx(1.0 / math.sqrt(4.0 * math.pi))


@pytest.mark.parametrize("l,m", [(l, m) for l in range(5) for m in range(-l, l + 1)])
def test_harmonic_unit_norm(l, m):
    ylm = pf.spherical_harmonic(l, m)
    norm = angular_quadrature(lambda th, ph: np.abs(ylm(th, ph)) ** 2)
    assert norm == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("l,m", [(1, 0), (2, 1), (3, -2), (4, 3)])
def test_harmonic_matches_scipy(l, m):
    ylm = pf.spherical_harmonic(l, m)
    theta = np.array([0.3, 1.1, 2.4])
    phi = np.array([0.0, 2.5, 5.0])
    assert np.allclose(ylm(theta, phi), sph_harm_y(l, m, theta, phi), atol=1e-13)


def test_angular_operator_eigenvalue():
    # the angular part of the separated equation applied to Y_2^1 returns
    # -l(l+1) = -6 times Y_2^1 (4th-order finite differences)
    ylm = pf.spherical_harmonic(2, 1)
    h = 1e-3

    def operator(theta, phi):
        def d_theta(f, t):
            return (-f(t + 2 * h) + 8.0 * f(t + h)
                    - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h)

        flux = lambda t: math.sin(t) * d_theta(lambda s: ylm(s, phi), t)
        term_theta = d_theta(flux, theta) / math.sin(theta)
        term_phi = (-ylm(theta, phi + 2 * h) + 16.0 * ylm(theta, phi + h)
                    - 30.0 * ylm(theta, phi) + 16.0 * ylm(theta, phi - h)
                    - ylm(theta, phi - 2 * h)) / (12.0 * h * h)
        return term_theta + term_phi / math.sin(theta) ** 2

    for theta, phi in ((0.7, 1.1), (1.9, 4.0), (2.3, 0.4)):
        lhs = operator(theta, phi)
        rhs = -6.0 * ylm(theta, phi)
        assert abs(lhs - rhs) < 1e-6


def test_harmonic_rejects_bad_m():
    with pytest.raises(ValueError):
        pf.spherical_harmonic(1, 2)


# ---------------------------------------------------------------------------
# assembled state
# ---------------------------------------------------------------------------

def test_assembled_state_normalized():
    psi = pf.assemble(pf.QuantumState(1, 0, 0), G_54)
    series = pf.series_solve(pf.QuantumState(1, 0), G_54)
    radial_part, _ = integrate.quad(
        lambda r: abs(complex(psi(r, 0.7, 0.0))) ** 2
        / abs(complex(pf.spherical_harmonic(0, 0)(0.7, 0.0))) ** 2 * r * r,
        1e-12, 80.0 / series.d, limit=400, epsabs=1e-14, epsrel=1e-12)
    angular_part = angular_quadrature(
        lambda th, ph: np.abs(pf.spherical_harmonic(0, 0)(th, ph)) ** 2)
    assert radial_part * angular_part == pytest.approx(1.0, abs=1e-8)


def test_assembled_210_vanishes_in_equatorial_plane():
    psi = pf.assemble(pf.QuantumState(2, 1, 0), G_54)
    for r in (0.5 / G_54.g, 2.0 / G_54.g):
        for phi in (0.0, 1.0, 4.4):
            assert abs(complex(psi(r, math.pi / 2.0, phi))) < 1e-15
