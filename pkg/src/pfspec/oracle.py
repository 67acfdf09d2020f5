"""Independent numerical eigenvalue machinery.

Two-sided shooting for boundary-value problems of the form

    u''(s) = W(s; E) u(s),      W(s) = c2*s^2 + c0 + cm1/s + cm2/s^2

with the spectral parameter E bisected on the matching mismatch at an
interior point.  The coefficient form covers all three equation families
solved in this package (harmonic wells, the two relativistic oscillator
reductions, and the transformed Coulomb radial equation); no quantization
formula ever enters these routines, so their eigenvalues are an independent
check on every closed form.

Also provides a Brent-style bracketed scalar root finder, a finite-difference
residual check for candidate eigenfunctions, and a dense-matrix fallback used
only as a textbook sanity anchor.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except Exception:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


class BracketError(RuntimeError):
    """The supplied interval does not bracket a sign change."""


class SpectrumOrderingError(RuntimeError):
    """A converged eigenvalue has the wrong interior node count."""


@njit(cache=True)
def _wpot(c2, c0, cm1, cm2, s):
    w = c2 * s * s + c0
    if cm1 != 0.0:
        w += cm1 / s
    if cm2 != 0.0:
        w += cm2 / (s * s)
    return w


@njit(cache=True)
def _march(c2, c0, cm1, cm2, s0, s1, h_nom, u, du):
    """RK4 integration of u'' = W u from s0 to s1 (either direction).

    Near a regular singular point (cm1 or cm2 nonzero) the step is capped
    at a fraction of |s| so the 1/s^2 term stays resolved.  Returns the
    final (u, u'), the interior sign-change count and the step count.
    """
    singular = (cm1 != 0.0) or (cm2 != 0.0)
    forward = s1 > s0
    sign = 1.0 if forward else -1.0
    s = s0
    nodes = 0
    steps = 0
    while (s < s1) if forward else (s > s1):
        h = h_nom
        if singular:
            hs = 0.02 * abs(s)
            if hs < h:
                h = hs if hs > 1e-9 else 1e-9
        rem = abs(s1 - s)
        if h > rem:
            h = rem
        hh = sign * h

        k1u = du
        k1d = _wpot(c2, c0, cm1, cm2, s) * u
        um = u + 0.5 * hh * k1u
        dum = du + 0.5 * hh * k1d
        wm = _wpot(c2, c0, cm1, cm2, s + 0.5 * hh)
        k2u = dum
        k2d = wm * um
        um = u + 0.5 * hh * k2u
        dum = du + 0.5 * hh * k2d
        k3u = dum
        k3d = wm * um
        um = u + hh * k3u
        dum = du + hh * k3d
        we = _wpot(c2, c0, cm1, cm2, s + hh)
        k4u = dum
        k4d = we * um

        u_new = u + hh / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        du_new = du + hh / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)

        if u * u_new < 0.0:
            nodes += 1
        u = u_new
        du = du_new
        s = s + hh
        steps += 1

        scale = abs(u) + abs(du)
        if scale > 1e250:
            u /= scale
            du /= scale
        if steps > 50_000_000:  # safety stop; never reached in practice
            break
    return u, du, nodes, steps


@dataclass(frozen=True)
class ShootingProblem:
    """Two-sided shooting specification for u'' = W(s; E) u.

    `coeffs` maps the spectral parameter E to the potential coefficients
    (c2, c0, cm1, cm2).  `left_init` / `right_init` give (u, u') starting
    values at s_min / s_max for a trial E; the left start follows the
    power-law index of the regular solution, the right start a decaying
    exponential.
    """

    coeffs: Callable[[float], tuple[float, float, float, float]]
    s_min: float
    s_max: float
    s_match: float
    step: float
    left_init: Callable[[float], tuple[float, float]]
    right_init: Callable[[float], tuple[float, float]]
    left_exponent: float = 0.0
    right_decay: float = 0.0
    name: str = ""

    def __post_init__(self):
        if not (self.s_min < self.s_match < self.s_max):
            raise ValueError("require s_min < s_match < s_max")
        if not self.step > 0:
            raise ValueError("step must be positive")

    def effective_potential(self, s, energy: float):
        c2, c0, cm1, cm2 = self.coeffs(energy)
        s = np.asarray(s, dtype=float)
        w = c2 * s * s + c0
        if cm1 != 0.0:
            w = w + cm1 / s
        if cm2 != 0.0:
            w = w + cm2 / (s * s)
        return w

    def frozen_potential(self, energy: float) -> Callable:
        """W(s) with the spectral parameter fixed."""
        return lambda s: self.effective_potential(s, energy)


@dataclass(frozen=True)
class EigenResult:
    eigenvalue: float
    nodes: int
    match_residual: float
    grid_size: int
    converged: bool


def _mismatch(problem: ShootingProblem, energy: float):
    c2, c0, cm1, cm2 = problem.coeffs(energy)
    ul0, dul0 = problem.left_init(energy)
    ur0, dur0 = problem.right_init(energy)
    ul, dul, nodes_l, n_l = _march(c2, c0, cm1, cm2, problem.s_min,
                                   problem.s_match, problem.step, ul0, dul0)
    ur, dur, nodes_r, n_r = _march(c2, c0, cm1, cm2, problem.s_max,
                                   problem.s_match, problem.step, ur0, dur0)
    norm = math.hypot(ul, dul) * math.hypot(ur, dur)
    w = (dul * ur - ul * dur) / norm
    return w, nodes_l + nodes_r, n_l + n_r


def shoot_eigenvalue(problem: ShootingProblem, target_nodes: int,
                     bracket: tuple[float, float], *,
                     residual_tol: float = 1e-10,
                     max_iter: int = 200) -> EigenResult:
    """Locate one eigenvalue inside `bracket` by bisecting the mismatch.

    The mismatch is the Wronskian of the left and right solutions at the
    match point, normalised by their phase-space amplitudes; it crosses
    zero transversally at an eigenvalue.  The reported `match_residual`
    is the secant-based eigenvalue uncertainty |w / (dw/dE)|, i.e. it is
    measured in units of the spectral parameter.

    Raises BracketError when the mismatch does not change sign over the
    bracket, and SpectrumOrderingError when the converged solution does
    not carry `target_nodes` interior nodes.
    """
    a, b = float(bracket[0]), float(bracket[1])
    if not a < b:
        raise ValueError("bracket must satisfy a < b")
    wa, _, _ = _mismatch(problem, a)
    wb, _, _ = _mismatch(problem, b)
    grid = 0
    if wa == 0.0:
        b = a
    elif wb == 0.0:
        a = b
    elif wa * wb > 0.0:
        raise BracketError(
            f"no mismatch sign change on [{a}, {b}] for {problem.name or 'problem'};"
            " widen the bracket")
    else:
        for _ in range(max_iter):
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            wm, _, g = _mismatch(problem, mid)
            grid = g
            if wm == 0.0:
                a = b = mid
                break
            if (wm < 0.0) == (wa < 0.0):
                a, wa = mid, wm
            else:
                b, wb = mid, wm

    eigenvalue = 0.5 * (a + b)
    w_final, nodes, g = _mismatch(problem, eigenvalue)
    grid = max(grid, g)
    if b > a and wb != wa:
        slope = abs((wb - wa) / (b - a))
        residual = abs(w_final) / slope if slope > 0 else abs(w_final)
    else:
        residual = 0.0
    converged = residual < residual_tol
    if nodes != target_nodes:
        raise SpectrumOrderingError(
            f"converged state has {nodes} interior nodes, expected {target_nodes}"
            f" ({problem.name or 'problem'})")
    return EigenResult(eigenvalue=eigenvalue, nodes=nodes,
                       match_residual=residual, grid_size=grid,
                       converged=converged)


def bracketed_root(f: Callable[[float], float], a: float, b: float,
                   tol: float = 1e-12, max_iter: int = 200) -> float:
    """Brent-style bracketed root: |interval| < tol plus machine rounding.

    f(a) and f(b) must have opposite signs.
    """
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise BracketError(f"f({a}) = {fa:g} and f({b}) = {fb:g} do not bracket a root")
    c, fc = a, fa
    d = e = b - a
    eps = np.finfo(float).eps
    for _ in range(max_iter):
        if fb * fc > 0.0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * eps * abs(b) + 0.5 * tol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += tol1 if xm > 0 else -tol1
        fb = f(b)
    return b


def grid_residual(u: Callable, w: Callable, grid, step=1e-3) -> float:
    """max |u'' - W u| / max |u''| over the grid, u'' by 5-point differences.

    `step` may be a scalar or a per-point array (useful near a singular
    endpoint where the optimal difference step shrinks).
    """
    s = np.asarray(grid, dtype=float)
    h = np.broadcast_to(np.asarray(step, dtype=float), s.shape)
    d2 = (-u(s + 2 * h) + 16.0 * u(s + h) - 30.0 * u(s)
          + 16.0 * u(s - h) - u(s - 2 * h)) / (12.0 * h * h)
    residual = d2 - np.asarray(w(s)) * u(s)
    scale = float(np.max(np.abs(d2)))
    if scale == 0.0:
        warnings.warn("zero second derivative on the whole grid; residual is degenerate",
                      stacklevel=2)
        return 0.0
    return float(np.max(np.abs(residual)) / scale)


def dense_oscillator_anchor(n_levels: int, box: float = 8.0,
                            n_grid: int = 4001) -> np.ndarray:
    """Finite-difference diagonalization of u'' = (s^2 - eps) u.

    Sanity anchor only (O(h^2) accurate); the shooting solver is the
    production oracle.
    """
    from scipy.linalg import eigvalsh_tridiagonal

    s = np.linspace(-box, box, n_grid)
    h = s[1] - s[0]
    interior = s[1:-1]
    diag = 2.0 / h ** 2 + interior ** 2
    off = np.full(interior.size - 1, -1.0 / h ** 2)
    return eigvalsh_tridiagonal(diag, off, select="i",
                                select_range=(0, n_levels - 1))


# ---------------------------------------------------------------------------
# Problem builders for the three equation families
# ---------------------------------------------------------------------------

def textbook_oscillator_problem(n_target: int) -> ShootingProblem:
    """u'' = (s^2 - eps) u with the eigenparameter eps bisected directly."""
    y_t = math.sqrt(2.0 * n_target + 1.0)
    box = y_t + 6.0
    match = y_t + 1.0

    def coeffs(eps):
        return (1.0, -eps, 0.0, 0.0)

    def left_init(eps):
        return 1.0, math.sqrt(max(box * box - eps, 1e-12))

    def right_init(eps):
        return 1.0, -math.sqrt(max(box * box - eps, 1e-12))

    return ShootingProblem(coeffs, -box, box, match, 1e-3,
                           left_init, right_init,
                           right_decay=math.sqrt(max(box * box - (2 * n_target + 1), 1.0)),
                           name=f"textbook-oscillator-n{n_target}")


def _oscillator_problem(lam: float, n_target: int, alpha_sq_of,
                        name: str) -> ShootingProblem:
    if not lam > 0:
        raise ValueError("shooting needs a strictly positive coupling")
    scale = 1.0 / math.sqrt(lam)  # oscillator length for E near 1
    y_t = math.sqrt(2.0 * n_target + 1.0)
    box = (y_t + 6.0) * scale
    match = (y_t + 1.0) * scale
    step = 1e-3 * scale

    def coeffs(energy):
        return (alpha_sq_of(energy), 1.0 - energy * energy, 0.0, 0.0)

    def wall(energy):
        a2 = alpha_sq_of(energy)
        return math.sqrt(max(a2 * box * box - (energy * energy - 1.0), 1e-12))

    def left_init(energy):
        return 1.0, wall(energy)

    def right_init(energy):
        return 1.0, -wall(energy)

    return ShootingProblem(coeffs, -box, box, match, step,
                           left_init, right_init,
                           right_decay=lam * box, name=name)


def mass_dependent_oscillator_problem(lam: float, n_target: int) -> ShootingProblem:
    """Oscillator reduction whose squared coefficient is (E*lambda)^2."""
    return _oscillator_problem(lam, n_target,
                               lambda e: (e * lam) ** 2,
                               f"osc-massdep-lam{lam:g}-n{n_target}")


def mass_independent_oscillator_problem(lam: float, n_target: int, *,
                                        frozen_alpha: bool = True) -> ShootingProblem:
    """Oscillator reduction with squared coefficient E*lambda^2.

    With frozen_alpha=True the coefficient is evaluated at E = 1 (the
    weak-coupling substitution that produces the square-root spectrum);
    with False it keeps the full E dependence, whose eigenvalue is the
    unapproximated secular root.
    """
    if frozen_alpha:
        alpha_sq_of = lambda e: lam * lam
        tag = "frozen"
    else:
        alpha_sq_of = lambda e: e * lam * lam
        tag = "self-consistent"
    return _oscillator_problem(lam, n_target, alpha_sq_of,
                               f"osc-massindep-{tag}-lam{lam:g}-n{n_target}")


def hydrogen_radial_problem(l: int, coupling, n_scale: int) -> ShootingProblem:
    """Transformed Coulomb radial equation u'' = [1 - rho0/s + B(B+1)/s^2] u.

    The spectral parameter is the dimensionless energy E in (0, 1);
    rho0(E) = 2 E G / sqrt(1 - E^2).  `n_scale` sets the domain extent
    (rho0 is near 2n for the bound states of interest).
    """
    gsq = coupling.gsq
    if (l + 0.5) ** 2 <= gsq:
        raise ValueError("(l + 1/2)^2 must exceed G^2")
    bp1 = 0.5 + math.sqrt((l + 0.5) ** 2 - gsq)  # indicial exponent B+1
    cm2 = l * (l + 1) - gsq
    s_min = 1e-6
    s_max = 2.0 * n_scale + 25.0
    match = 2.0 * n_scale + 2.0

    def rho0(energy):
        if not 0.0 < energy < 1.0:
            raise ValueError("bound radial problem requires 0 < E < 1")
        return 2.0 * energy * coupling.g / math.sqrt(1.0 - energy * energy)

    def coeffs(energy):
        return (0.0, 1.0, -rho0(energy), cm2)

    def left_init(energy):
        c1 = (2.0 * bp1 - rho0(energy)) / (2.0 * bp1)  # first series coefficient
        u = s_min ** bp1 * (1.0 + c1 * s_min)
        du = s_min ** (bp1 - 1.0) * (bp1 + (bp1 + 1.0) * c1 * s_min)
        return u, du

    def right_init(energy):
        w_edge = 1.0 - rho0(energy) / s_max + cm2 / s_max ** 2
        return 1.0, -math.sqrt(max(w_edge, 1e-12))

    return ShootingProblem(coeffs, s_min, s_max, match, 1e-3,
                           left_init, right_init,
                           left_exponent=bp1, right_decay=1.0,
                           name=f"hydrogen-l{l}-g{coupling.g:g}")
