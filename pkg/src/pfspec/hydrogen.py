"""Hydrogen-like spectrum and wavefunctions of the squared-potential
radial problem.

In rest-energy and Compton units the radial function u(r) = r R(r) of a
bound state obeys, after the substitutions rho = D*r, D = sqrt(1 - E^2),
rho0 = 2*E*G/D,

    u''(rho) = [1 - rho0/rho + B(B+1)/rho^2] u(rho),

where B = -1/2 + sqrt((l+1/2)^2 - G^2) replaces the orbital index l and
G is the dimensionless Coulomb coupling.  The regular solution is a
terminating power series

    u(rho) = rho^(B+1) e^(-rho) * sum_j c_j rho^j,
    c_{j+1} = [2(j+B+1) - rho0] / [(j+1)(j+2B+2)] * c_j,

and termination after j_max = n - l - 1 steps pins rho0 = 2(j_max+B+1),
which inverts to the exact spectrum

    E = +- N / sqrt(G^2 + N^2),    N = j_max + 1/2 + sqrt((l+1/2)^2 - G^2).

Expanding through order G^4 reproduces the standard first-order
relativistic kinetic correction to the nonrelativistic levels
E_n = -G^2/(2 n^2):

    E = 1 + E_n - (E_n^2/2) * (4n/(l+1/2) - 3).

The angular factor is the ordinary orthonormal spherical harmonic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate
from scipy.special import gammaincc, gammaln

from .units import CouplingG


def shifted_orbital_index(l: int, coupling: CouplingG) -> float:
    """B = -1/2 + sqrt((l+1/2)^2 - G^2); the root with normalizable u."""
    if not isinstance(l, int) or l < 0:
        raise ValueError("orbital quantum number l must be a non-negative integer")
    disc = (l + 0.5) ** 2 - coupling.gsq
    if disc <= 0:
        raise ValueError("(l + 1/2)^2 must exceed G^2 (index would be complex)")
    return -0.5 + math.sqrt(disc)


@dataclass(frozen=True)
class QuantumState:
    """Quantum numbers (n, l, m) with n = j_max + l + 1."""

    n: int
    l: int
    m: int = 0

    def __post_init__(self):
        for name in ("n", "l", "m"):
            if not isinstance(getattr(self, name), int):
                raise ValueError(f"{name} must be an integer")
        if self.n < 1:
            raise ValueError("principal quantum number n must be >= 1")
        if not 0 <= self.l < self.n:
            raise ValueError("orbital quantum number must satisfy 0 <= l < n")
        if abs(self.m) > self.l:
            raise ValueError("magnetic quantum number must satisfy |m| <= l")

    @property
    def jmax(self) -> int:
        return self.n - self.l - 1


@dataclass(frozen=True)
class RadialCoefficients:
    """Dimensionless coefficients of the radial equation at energy E:
    a = 2*E*G, d = sqrt(1 - E^2), rho0 = a/d, and the shifted index b."""

    a: float
    g: float
    b: float
    d: float
    rho0: float

    @classmethod
    def from_energy(cls, l: int, energy: float, coupling: CouplingG) -> "RadialCoefficients":
        if not 0.0 < energy < 1.0:
            raise ValueError("bound states require 0 < E < 1 in rest-energy units")
        b = shifted_orbital_index(l, coupling)
        a = 2.0 * energy * coupling.g
        d = math.sqrt((1.0 - energy) * (1.0 + energy))
        return cls(a=a, g=coupling.g, b=b, d=d, rho0=a / d)


def _state_index(state: QuantumState, coupling: CouplingG) -> float:
    return state.jmax + 0.5 + math.sqrt((state.l + 0.5) ** 2 - coupling.gsq)


def exact_energy(state: QuantumState, coupling: CouplingG, branch: int = +1) -> float:
    """Exact bound energy E = +- N / sqrt(G^2 + N^2) in rest-energy units."""
    if branch not in (+1, -1):
        raise ValueError("branch must be +1 or -1")
    n_index = _state_index(state, coupling)
    return branch * n_index / math.sqrt(coupling.gsq + n_index * n_index)


def exact_binding_energy(state: QuantumState, coupling: CouplingG) -> float:
    """E - 1 for the plus branch, computed without cancellation:
    E - 1 = -G^2 / (S (N + S)) with S = sqrt(G^2 + N^2)."""
    n_index = _state_index(state, coupling)
    s = math.sqrt(coupling.gsq + n_index * n_index)
    return -coupling.gsq / (s * (n_index + s))


def expanded_energy(state: QuantumState, coupling: CouplingG) -> float:
    """Fourth-order expansion E = 1 + E_n - (E_n^2/2)(4n/(l+1/2) - 3)."""
    _state_index(state, coupling)  # domain check
    e_n = -coupling.gsq / (2.0 * state.n ** 2)
    return 1.0 + e_n - 0.5 * e_n * e_n * (4.0 * state.n / (state.l + 0.5) - 3.0)


def truncated_index_root(l: int, coupling: CouplingG) -> float:
    """Second-order truncation of sqrt((l+1/2)^2 - G^2):
    (l+1/2) - G^2/(2(l+1/2)) - G^4/(8(l+1/2)^3)."""
    lp = l + 0.5
    gsq = coupling.gsq
    return lp - gsq / (2.0 * lp) - gsq * gsq / (8.0 * lp ** 3)


def truncated_inverse_norm(jmax: int, l: int, coupling: CouplingG) -> float:
    """Second-order truncation of [G^2 + (j' + l' sqrt(1 - G^2/l'^2))^2]^(-1/2)
    in terms of j' = jmax + 1/2, l' = l + 1/2 and n = j' + l'."""
    jp = jmax + 0.5
    lp = l + 0.5
    n = jp + lp
    x = coupling.gsq / (lp * lp)
    return (1.0 / n) * (1.0
                        + (jp * lp / n ** 2) * (x / 2.0)
                        + 0.125 * (jp * lp / n ** 2) * (1.0 + 3.0 * jp * lp / n ** 2) * x * x)


def composed_expanded_energy(state: QuantumState, coupling: CouplingG) -> float:
    """Expansion assembled from the two truncated factors; agrees with
    expanded_energy to O(G^6)."""
    n_trunc = (state.jmax + 0.5) + truncated_index_root(state.l, coupling)
    return n_trunc * truncated_inverse_norm(state.jmax, state.l, coupling)


def energy_from_termination(state: QuantumState, coupling: CouplingG) -> float:
    """Invert rho0 = 2*E*G/sqrt(1-E^2) at the termination value
    rho0 = 2(j_max + B + 1); algebraically identical to exact_energy."""
    b = shifted_orbital_index(state.l, coupling)
    rho0 = 2.0 * (state.jmax + b + 1.0)
    return rho0 / math.sqrt(rho0 * rho0 + 4.0 * coupling.gsq)


@dataclass(frozen=True)
class RadialSeries:
    """Terminating series solution: coefficients c_j (c_0 = 1), the shifted
    index b, decay rate d = sqrt(1 - E^2), rho0 and the energy implied by
    termination."""

    coeffs: tuple
    jmax: int
    b: float
    d: float
    rho0: float
    energy: float

    def polynomial(self, rho):
        rho = np.asarray(rho, dtype=float)
        acc = np.zeros_like(rho)
        for c in reversed(self.coeffs):
            acc = acc * rho + c
        return acc


def recursion_step(j: int, b: float, rho0: float) -> float:
    """Multiplier c_{j+1}/c_j of the series recursion."""
    return (2.0 * (j + b + 1.0) - rho0) / ((j + 1.0) * (j + 2.0 * b + 2.0))


def series_solve(state: QuantumState, coupling: CouplingG) -> RadialSeries:
    """Solve the radial series: set rho0 to its termination value, then fill
    c_1..c_jmax from the recursion.  The recursion numerator vanishes at
    j = jmax by construction, which is asserted."""
    b = shifted_orbital_index(state.l, coupling)
    rho0 = 2.0 * (state.jmax + b + 1.0)
    coeffs = [1.0]
    for j in range(state.jmax):
        coeffs.append(recursion_step(j, b, rho0) * coeffs[j])
    leftover = recursion_step(state.jmax, b, rho0) * coeffs[-1]
    if abs(leftover) > 1e-14 * abs(coeffs[-1]):
        raise AssertionError("series failed to terminate at j = jmax")
    return RadialSeries(coeffs=tuple(coeffs), jmax=state.jmax, b=b,
                        d=math.sqrt(max(0.0, 1.0 - energy_from_termination(state, coupling) ** 2)),
                        rho0=rho0,
                        energy=energy_from_termination(state, coupling))


def _normalization_cutoff(q: float) -> float:
    # solve e^-rho * rho^q = 1e-18, i.e. rho = 18 ln10 + q ln rho
    rho = 18.0 * math.log(10.0) + 5.0
    for _ in range(60):
        rho = 18.0 * math.log(10.0) + q * math.log(rho)
    return rho


@dataclass(frozen=True)
class RadialWavefunction:
    """Normalized radial factor.

    u(rho) = norm * rho^(B+1) e^(-rho) v(rho) with int u^2 drho = 1, and
    R(r) = sqrt(d) * u(d*r) / r so that int R^2 r^2 dr = 1 (r > 0, in
    Compton units)."""

    series: RadialSeries
    norm: float
    tail_bound: float

    def u(self, rho):
        rho = np.asarray(rho, dtype=float)
        s = self.series
        return self.norm * rho ** (s.b + 1.0) * np.exp(-rho) * s.polynomial(rho)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        return self.u(self.series.d * r) / r * math.sqrt(self.series.d)


def radial_wavefunction(series: RadialSeries) -> RadialWavefunction:
    """Normalize the series solution by adaptive quadrature.

    The squared integrand is cut where e^-rho rho^(B+1+jmax) < 1e-18;
    the discarded tail is bounded analytically with the upper incomplete
    gamma function and checked to be negligible.
    """
    s = series
    q = s.b + 1.0 + s.jmax

    def usq(rho):
        return (rho ** (s.b + 1.0) * math.exp(-rho) * float(s.polynomial(rho))) ** 2

    rho_cut = _normalization_cutoff(q)
    breaks = sorted({0.5, s.rho0 / 2.0, s.rho0, min(2.0 * s.rho0, rho_cut - 1.0)})
    total, _ = integrate.quad(usq, 0.0, rho_cut, points=breaks,
                              limit=400, epsabs=1e-15, epsrel=1e-13)
    coeff_sum = float(np.sum(np.abs(s.coeffs)))
    # tail <= coeff_sum^2 * int_{cut}^inf rho^{2q} e^{-2 rho} drho
    log_tail = (2.0 * math.log(coeff_sum + 1e-300)
                + gammaln(2.0 * q + 1.0)
                - (2.0 * q + 1.0) * math.log(2.0))
    tail = math.exp(log_tail) * float(gammaincc(2.0 * q + 1.0, 2.0 * rho_cut))
    if tail > 1e-16 * total:
        raise AssertionError("normalization tail bound unexpectedly large")
    return RadialWavefunction(series=series, norm=1.0 / math.sqrt(total),
                              tail_bound=tail)


# ---------------------------------------------------------------------------
# Angular factor
# ---------------------------------------------------------------------------

def _normalized_legendre(l: int, m: int, x):
    """Associated Legendre P_l^m(x) carrying the full spherical-harmonic
    normalization and Condon-Shortley phase, by stable upward recurrence."""
    x = np.asarray(x, dtype=float)
    somx2 = np.sqrt(np.maximum(0.0, (1.0 - x) * (1.0 + x)))
    # P~_mm
    pmm = np.full_like(x, 1.0 / math.sqrt(4.0 * math.pi))
    for k in range(1, m + 1):
        pmm = -pmm * math.sqrt((2.0 * k + 1.0) / (2.0 * k)) * somx2
    if l == m:
        return pmm
    pm1 = math.sqrt(2.0 * m + 3.0) * x * pmm
    if l == m + 1:
        return pm1
    for ll in range(m + 2, l + 1):
        a = math.sqrt((4.0 * ll * ll - 1.0) / (ll * ll - m * m))
        bb = math.sqrt(((ll - 1.0) ** 2 - m * m) / (4.0 * (ll - 1.0) ** 2 - 1.0))
        pm1, pmm = a * (x * pm1 - bb * pmm), pm1
    return pm1


def spherical_harmonic(l: int, m: int) -> Callable:
    """Orthonormal spherical harmonic Y_l^m(theta, phi) as a complex field."""
    if not (isinstance(l, int) and isinstance(m, int)):
        raise ValueError("l and m must be integers")
    if l < 0 or abs(m) > l:
        raise ValueError("require l >= 0 and |m| <= l")
    m_abs = abs(m)

    def ylm(theta, phi):
        theta = np.asarray(theta, dtype=float)
        phi = np.asarray(phi, dtype=float)
        val = _normalized_legendre(l, m_abs, np.cos(theta)) * np.exp(1j * m_abs * phi)
        if m < 0:
            val = (-1.0) ** m_abs * np.conj(val)
        return val

    return ylm


def assemble(state: QuantumState, coupling: CouplingG) -> Callable:
    """Full bound-state field psi(r, theta, phi) = R_nl(r) Y_l^m(theta, phi),
    unit-normalized in three dimensions (r in Compton units)."""
    radial = radial_wavefunction(series_solve(state, coupling))
    angular = spherical_harmonic(state.l, state.m)

    def psi(r, theta, phi):
        return radial(r) * angular(theta, phi)

    return psi
