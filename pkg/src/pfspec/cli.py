"""Command-line interface: spectra, sampled wavefunctions, and the
verification suites.

Exit codes: 0 success / all checks passed, 2 usage error, 3 numerical
failure (oracle bracketing or convergence).  CSV and JSON output is
deterministic for a fixed configuration and seed; every numeric cell
round-trips exactly through float().
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import dynamics, hydrogen, oracle, oscillator, units

OSC_MODELS = ("osc-massdep", "osc-massindep", "osc-kleingordon")
HYD_MODELS = ("hydrogen-exact", "hydrogen-expanded", "hydrogen-nonrel")
MODELS = OSC_MODELS + HYD_MODELS

SPECTRUM_SCHEMA_OSC = "pfspec.spectrum.oscillator.v1"
SPECTRUM_SCHEMA_HYD = "pfspec.spectrum.hydrogen.v1"
WAVEFUNCTION_SCHEMA = "pfspec.wavefunction.v1"
VERIFY_SCHEMA = "pfspec.verify.v1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _load_env_config() -> dict[str, float]:
    path = os.environ.get(units.CONFIG_ENV_VAR)
    if not path:
        return {}
    return units.load_config(path)


def _resolve_scheme(args, config) -> units.UnitScheme:
    if getattr(args, "units", "ev") == "natural":
        return units.make_unit_scheme(1.0, hbar=1.0, c=1.0, ev_to_joule=1.0)
    return units.scheme_from_config(config)


def _resolve_hydrogen_coupling(args, config) -> units.CouplingG:
    if getattr(args, "g", None) is not None and getattr(args, "g2", None) is not None:
        raise UsageError("pass only one of --g / --g2")
    if getattr(args, "g", None) is not None:
        return units.CouplingG(args.g)
    if getattr(args, "g2", None) is not None:
        return units.CouplingG.from_gsq(args.g2)
    return units.coupling_from_config(config)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def _oscillator_rows(model, nmax, lam_coupling):
    rows = []
    for n in range(nmax + 1):
        if model == "osc-massdep":
            level = oscillator.energy_mass_dependent(n, lam_coupling)
        elif model == "osc-massindep":
            level = oscillator.mass_independent_secular_root(n, lam_coupling)
        else:  # osc-kleingordon
            level = oscillator.energy_mass_independent(n, lam_coupling)
        rows.append({"n": n, "energy": level.energy,
                     "binding": level.energy - 1.0})
    return rows


def _hydrogen_rows(model, nmax, l_filter, coupling):
    rows = []
    for n in range(1, nmax + 1):
        for l in range(n):
            if l_filter is not None and l != l_filter:
                continue
            state = hydrogen.QuantumState(n, l)
            if model == "hydrogen-exact":
                energy = hydrogen.exact_energy(state, coupling)
                binding = hydrogen.exact_binding_energy(state, coupling)
            elif model == "hydrogen-expanded":
                energy = hydrogen.expanded_energy(state, coupling)
                binding = energy - 1.0
            else:  # hydrogen-nonrel
                binding = units.non_rel_hydrogen_level(n, coupling)
                energy = 1.0 + binding
            rows.append({"n": n, "l": l, "energy": energy, "binding": binding})
    return rows


def _oscillator_oracle(model, n, lam):
    if model == "osc-massdep":
        problem = oracle.mass_dependent_oscillator_problem(lam.lam, n)
        center = oscillator.energy_mass_dependent(n, lam).energy
    elif model == "osc-massindep":
        problem = oracle.mass_independent_oscillator_problem(lam.lam, n, frozen_alpha=False)
        center = oscillator.mass_independent_secular_root(n, lam).energy
    else:
        problem = oracle.mass_independent_oscillator_problem(lam.lam, n, frozen_alpha=True)
        center = oscillator.energy_mass_independent(n, lam).energy
    half = 0.45 * lam.lam
    return oracle.shoot_eigenvalue(problem, n, (center - half, center + half)).eigenvalue


def _hydrogen_bracket(state, coupling):
    center = hydrogen.exact_energy(state, coupling)
    gaps = [hydrogen.exact_energy(hydrogen.QuantumState(state.n + 1, state.l), coupling) - center]
    if state.jmax >= 1:
        gaps.append(center - hydrogen.exact_energy(
            hydrogen.QuantumState(state.n - 1, state.l), coupling))
    half = 0.45 * min(gaps)
    return center - half, center + half


def _hydrogen_oracle(n, l, coupling):
    state = hydrogen.QuantumState(n, l)
    problem = oracle.hydrogen_radial_problem(l, coupling, n)
    return oracle.shoot_eigenvalue(problem, state.jmax,
                                   _hydrogen_bracket(state, coupling)).eigenvalue


def cmd_spectrum(args) -> int:
    config = _load_env_config()
    scheme = _resolve_scheme(args, config)
    meta = {"model": args.model, "nmax": args.nmax,
            "rest_energy_ev": scheme.rest_energy_ev, "seed": args.seed}
    if args.model in OSC_MODELS:
        if args.nmax < 0:
            raise UsageError("--nmax must be >= 0 for oscillator models")
        if args.g is not None or args.g2 is not None:
            raise UsageError("--g/--g2 apply to hydrogen models only")
        lam = units.OscillatorCoupling(args.lam if args.lam is not None else 1e-3)
        meta["lambda"] = lam.lam
        rows = _oscillator_rows(args.model, args.nmax, lam)
        schema = SPECTRUM_SCHEMA_OSC
        columns = ["n", "energy_dimensionless", "energy_ev", "binding_ev"]
    else:
        if args.nmax < 1:
            raise UsageError("--nmax must be >= 1 for hydrogen models")
        if args.lam is not None:
            raise UsageError("--lambda applies to oscillator models only")
        coupling = _resolve_hydrogen_coupling(args, config)
        meta["g"] = coupling.g
        rows = _hydrogen_rows(args.model, args.nmax, args.l, coupling)
        if not rows:
            raise UsageError("no states selected (check --l against --nmax)")
        schema = SPECTRUM_SCHEMA_HYD
        columns = ["n", "l", "energy_dimensionless", "energy_ev", "binding_ev"]

    compare = args.compare == "oracle"
    if compare:
        columns += ["oracle_dimensionless", "rel_deviation"]
        meta["tol"] = args.tol
        for row in rows:
            if args.model in OSC_MODELS:
                ref = _oscillator_oracle(args.model, row["n"], lam)
            else:
                ref = _hydrogen_oracle(row["n"], row["l"], coupling)
            row["oracle"] = ref
            row["rel_deviation"] = abs(row["energy"] - ref) / abs(ref)

    out_rows = []
    for row in rows:
        cells = {"n": row["n"]}
        if "l" in row:
            cells["l"] = row["l"]
        cells["energy_dimensionless"] = row["energy"]
        cells["energy_ev"] = scheme.to_ev(row["energy"])
        cells["binding_ev"] = scheme.to_ev(row["binding"])
        if compare:
            cells["oracle_dimensionless"] = row["oracle"]
            cells["rel_deviation"] = row["rel_deviation"]
        out_rows.append(cells)

    _emit(args, schema, meta, columns, out_rows)
    if compare and any(r["rel_deviation"] > args.tol for r in out_rows):
        return 1
    return EXIT_OK


# ---------------------------------------------------------------------------
# wavefunction
# ---------------------------------------------------------------------------

def cmd_wavefunction(args) -> int:
    config = _load_env_config()
    if args.samples < 8:
        raise UsageError("--samples must be at least 8")
    if args.model in OSC_MODELS:
        if args.g is not None or args.g2 is not None:
            raise UsageError("--g/--g2 apply to hydrogen models only")
        lam = units.OscillatorCoupling(args.lam if args.lam is not None else 1e-3)
        if args.model == "osc-massdep":
            level = oscillator.energy_mass_dependent(args.n, lam)
        elif args.model == "osc-massindep":
            level = oscillator.mass_independent_secular_root(args.n, lam)
        else:
            level = oscillator.energy_mass_independent(args.n, lam)
        alpha = math.sqrt(level.alpha_sq)
        chi = oscillator.eigenfunction(args.n, alpha)
        half_width = (math.sqrt(2 * args.n + 1) + 6.0) / math.sqrt(alpha)
        grid = np.linspace(-half_width, half_width, args.samples)
        values = np.asarray(chi(grid), dtype=float)
        from scipy import integrate
        norm, _ = integrate.quad(lambda x: float(chi(x)) ** 2,
                                 -half_width, half_width,
                                 limit=300, epsabs=1e-13, epsrel=1e-12)
        meta = {"model": args.model, "n": args.n, "lambda": lam.lam,
                "energy_dimensionless": level.energy,
                "grid": "x_compton"}
        grid_label = "x"
    else:
        if args.lam is not None:
            raise UsageError("--lambda applies to oscillator models only")
        coupling = _resolve_hydrogen_coupling(args, config)
        state = hydrogen.QuantumState(args.n, args.l, args.m)
        series = hydrogen.series_solve(state, coupling)
        radial = hydrogen.radial_wavefunction(series)
        r_max = args.rmax if args.rmax else 45.0 / series.d
        grid = (np.arange(args.samples) + 0.5) * (r_max / args.samples)
        values = np.asarray(radial(grid), dtype=float)
        from scipy import integrate
        norm, _ = integrate.quad(lambda r: float(radial(r)) ** 2 * r * r,
                                 1e-12, r_max, limit=400,
                                 epsabs=1e-13, epsrel=1e-12)
        if args.model == "hydrogen-expanded":
            energy = hydrogen.expanded_energy(state, coupling)
        elif args.model == "hydrogen-nonrel":
            energy = 1.0 + units.non_rel_hydrogen_level(args.n, coupling)
        else:
            energy = hydrogen.exact_energy(state, coupling)
        meta = {"model": args.model, "n": args.n, "l": args.l, "m": args.m,
                "g": coupling.g, "energy_dimensionless": energy,
                "grid": "r_compton"}
        grid_label = "r"

    scale = float(np.max(np.abs(values))) or 1.0
    nonzero = values[np.abs(values) > 1e-13 * scale]
    nodes = int(np.sum(nonzero[:-1] * nonzero[1:] < 0))
    meta["normalization"] = norm
    meta["nodes"] = nodes

    columns = [grid_label, "value"]
    rows = [{grid_label: float(g), "value": float(v)} for g, v in zip(grid, values)]
    _emit(args, WAVEFUNCTION_SCHEMA, meta, columns, rows)

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(grid, values, lw=1.2)
        ax.axhline(0.0, color="0.6", lw=0.6)
        ax.set_xlabel(meta["grid"])
        ax.set_ylabel("amplitude")
        ax.set_title(f"{args.model} n={args.n}" +
                     (f" l={args.l}" if args.model in HYD_MODELS else ""))
        fig.tight_layout()
        fig.savefig(args.plot)
        plt.close(fig)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    measured: float
    tolerance: float
    passed: bool
    info: str = ""


def _suite_oscillator() -> list[Check]:
    checks = []
    worst_dep = 0.0
    worst_indep = 0.0
    for lam_value in (1e-4, 1e-3):
        lam = units.OscillatorCoupling(lam_value)
        for n in range(6):
            level = oscillator.energy_mass_dependent(n, lam)
            problem = oracle.mass_dependent_oscillator_problem(lam_value, n)
            half = 0.45 * lam_value
            res = oracle.shoot_eigenvalue(problem, n,
                                          (level.energy - half, level.energy + half))
            worst_dep = max(worst_dep, abs(res.eigenvalue - level.energy) / level.energy)

            sqrt_level = oscillator.energy_mass_independent(n, lam)
            frozen = oracle.mass_independent_oscillator_problem(lam_value, n,
                                                                frozen_alpha=True)
            res = oracle.shoot_eigenvalue(frozen, n,
                                          (sqrt_level.energy - half, sqrt_level.energy + half))
            worst_indep = max(worst_indep,
                              abs(res.eigenvalue - sqrt_level.energy) / sqrt_level.energy)
    checks.append(Check("massdep closed form vs shooting (lam in {1e-4,1e-3}, n<=5)",
                        worst_dep, 1e-8, worst_dep <= 1e-8))
    checks.append(Check("sqrt spectrum vs shooting on frozen-coefficient equation",
                        worst_indep, 1e-8, worst_indep <= 1e-8))

    # quadratic-in-level expansion term: E - 1 - e0 -> +e0^2/2 at lam = 1e-3
    lam = units.OscillatorCoupling(1e-3)
    worst = 0.0
    for n in range(6):
        level = oscillator.energy_mass_dependent(n, lam)
        term = level.energy - 1.0 - level.e0
        worst = max(worst, abs(term - 0.5 * level.e0 ** 2) / (0.5 * level.e0 ** 2))
    checks.append(Check("massdep second-order term +e0^2/2 (lam=1e-3)",
                        worst, 1e-2, worst <= 1e-2))

    # secular root sits e0^2/2 above the sqrt spectrum (second-order gap)
    worst = 0.0
    for n in range(6):
        e0 = lam.level_scale(n)
        gap = (oscillator.mass_independent_secular_root(n, lam).energy
               - oscillator.energy_mass_independent(n, lam).energy)
        worst = max(worst, abs(gap - 0.5 * e0 * e0) / e0 ** 3)
    checks.append(Check("secular-vs-sqrt gap equals e0^2/2 (deviation over e0^3)",
                        worst, 2.0, worst <= 2.0))
    return checks


def _suite_hydrogen() -> list[Check]:
    checks = []
    g54 = units.CouplingG.from_gsq(5.4e-5)
    worst = 0.0
    for n in range(1, 5):
        for l in range(n):
            state = hydrogen.QuantumState(n, l)
            pred = hydrogen.exact_energy(state, g54)
            problem = oracle.hydrogen_radial_problem(l, g54, n)
            res = oracle.shoot_eigenvalue(problem, state.jmax,
                                          _hydrogen_bracket(state, g54))
            worst = max(worst, abs(res.eigenvalue - pred) / pred)
    checks.append(Check("exact spectrum vs shooting (G^2=5.4e-5, n<=4)",
                        worst, 1e-8, worst <= 1e-8))

    alpha = units.hydrogen_coupling()
    g6 = alpha.g ** 6
    worst = 0.0
    for n in range(1, 6):
        for l in range(n):
            state = hydrogen.QuantumState(n, l)
            worst = max(worst, abs(hydrogen.exact_energy(state, alpha)
                                   - hydrogen.expanded_energy(state, alpha)))
    checks.append(Check("exact-expanded <= 10*G^6 (G=alpha, n<=5)",
                        worst, 10.0 * g6, worst <= 10.0 * g6))

    worst = 0.0
    for n in range(1, 6):
        for l in range(n):
            state = hydrogen.QuantumState(n, l)
            worst = max(worst, abs(hydrogen.composed_expanded_energy(state, alpha)
                                   - hydrogen.expanded_energy(state, alpha)))
    checks.append(Check("composed truncation chain vs expansion <= 10*G^6",
                        worst, 10.0 * g6, worst <= 10.0 * g6))

    scheme = units.electron_scheme()
    state = hydrogen.QuantumState(1, 0)
    e_n = units.non_rel_hydrogen_level(1, alpha)
    corr_ev = scheme.to_ev(hydrogen.expanded_energy(state, alpha) - 1.0 - e_n)
    rel = abs(corr_ev - (-9.05e-4)) / 9.05e-4
    checks.append(Check("1s correction -9.05e-4 eV within 0.5%",
                        rel, 5e-3, rel <= 5e-3, info=f"{corr_ev:.6e} eV"))

    worst = 0.0
    worst_lag = 0.0
    g0 = units.CouplingG(0.0)
    for n in range(1, 7):
        for l in range(n):
            state = hydrogen.QuantumState(n, l)
            series = hydrogen.series_solve(state, alpha)
            leftover = abs(hydrogen.recursion_step(series.jmax, series.b, series.rho0)
                           * series.coeffs[-1])
            worst = max(worst, leftover / abs(series.coeffs[-1]))
            series0 = hydrogen.series_solve(state, g0)
            ref = _laguerre_coefficients(n, l)
            worst_lag = max(worst_lag, max(abs(a - b) for a, b
                                           in zip(series0.coeffs, ref)))
    checks.append(Check("series termination |c_{jmax+1}|/|c_jmax| (n<=6)",
                        worst, 1e-14, worst <= 1e-14))
    checks.append(Check("G=0 series equals Laguerre coefficients (n<=6)",
                        worst_lag, 1e-12, worst_lag <= 1e-12))

    worst_nodes = 0
    worst_norm = 0.0
    worst_res = 0.0
    from scipy import integrate
    for n in range(1, 5):
        for l in range(n):
            state = hydrogen.QuantumState(n, l)
            series = hydrogen.series_solve(state, g54)
            radial = hydrogen.radial_wavefunction(series)
            grid = np.linspace(1e-4, 60.0, 20001)
            u_values = radial.u(grid)
            nodes = int(np.sum(u_values[:-1] * u_values[1:] < 0))
            worst_nodes = max(worst_nodes, abs(nodes - state.jmax))
            norm, _ = integrate.quad(lambda r: float(radial(r)) ** 2 * r * r,
                                     1e-12, 80.0 / series.d,
                                     limit=400, epsabs=1e-14, epsrel=1e-12)
            worst_norm = max(worst_norm, abs(norm - 1.0))
            w = _radial_w(series)
            rgrid = np.linspace(0.01, 40.0, 1200)
            step = 3e-3 * np.minimum(rgrid, 1.0) ** 0.8
            worst_res = max(worst_res, oracle.grid_residual(radial.u, w, rgrid, step))
    checks.append(Check("node count equals jmax (n<=4)",
                        float(worst_nodes), 0.0, worst_nodes == 0))
    checks.append(Check("radial normalization (n<=4)",
                        worst_norm, 1e-8, worst_norm <= 1e-8))
    checks.append(Check("radial equation residual (n<=4)",
                        worst_res, 1e-8, worst_res <= 1e-8))

    worst = 0.0
    for n in range(1, 5):
        for l in range(n):
            state = hydrogen.QuantumState(n, l)
            worst = max(worst, abs(hydrogen.energy_from_termination(state, alpha)
                                   - hydrogen.exact_energy(state, alpha)))
    checks.append(Check("termination rule inverts to the exact spectrum",
                        worst, 1e-12, worst <= 1e-12))
    return checks


def _radial_w(series):
    return lambda rho: 1.0 - series.rho0 / rho + series.b * (series.b + 1.0) / rho ** 2


def _laguerre_coefficients(n, l):
    from math import factorial

    q = n - l - 1
    p = 2 * l + 1
    return [(-1) ** j * 2 ** j * factorial(q) * factorial(p)
            / (factorial(q - j) * factorial(p + j) * factorial(j))
            for j in range(q + 1)]


def _suite_dynamics(seed: int) -> list[Check]:
    checks = []
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(1000):
        dt = float(rng.uniform(0.1, 1.0))
        qdot = float(rng.uniform(-0.95, 0.95))
        boost = float(rng.uniform(-0.95, 0.95))
        ds2, ds2_b = dynamics.interval_check(dt, qdot, boost)
        worst = max(worst, abs(ds2 - ds2_b))
    checks.append(Check("interval invariance over 1000 random triples (seed fixed)",
                        worst, 1e-12, worst <= 1e-12))

    worst = 0.0
    for v in (1e-3, 0.1, 0.37, 0.6, 0.99):
        kin = dynamics.PFKinematics(v_p=v, chi_prime=0.0)
        worst = max(worst, abs(dynamics.relativistic_qdot(kin).value - v))
    checks.append(Check("joint rate reduces to v_p at zero slope",
                        worst, 1e-14, worst <= 1e-14))

    alpha = 1.0
    chi = oscillator.eigenfunction(0, alpha)
    chi_prime = lambda x: -alpha * x * float(chi(x))
    q = dynamics.trajectory_q(lambda x: float(chi(x)), (-3.0, 3.0),
                              chi_prime=chi_prime)
    worst = 0.0
    h = 4e-3
    for x in np.linspace(-2.5, 2.5, 21):
        dq = (-q(x + 2 * h) + 8 * q(x + h) - 8 * q(x - h) + q(x - 2 * h)) / (12 * h)
        target = math.sqrt(1.0 + chi_prime(x) ** 2)
        worst = max(worst, abs(dq - target))
    checks.append(Check("trajectory derivative identity q' = g*sqrt(1+chi'^2)",
                        worst, 1e-9, worst <= 1e-9))

    kin = dynamics.PFKinematics(v_p=1e-2, chi_prime=0.7)
    ratio = (dynamics.field_force(kin, 0.0, 1.0, 0.0, "rel")
             / dynamics.field_force(kin, 0.0, 1.0, 0.0, "nonrel"))
    checks.append(Check("field-force regimes agree as v_p -> 0 (ratio-1 at v=1e-2)",
                        abs(ratio - 1.0), 1e-4, abs(ratio - 1.0) <= 1e-4))

    diag = dynamics.boost_consistency_diagnostic(0.6, 1.0, 0.3)
    checks.append(Check("slope-invariance velocity-addition diagnostic (informative)",
                        abs(diag["difference"]), math.inf, True,
                        info=f"direct={diag['boosted_direct']:.6f} "
                             f"recomputed={diag['recomputed_from_boosted_speed']:.6f}"))
    return checks


def cmd_verify(args) -> int:
    suites = {
        "oscillator": lambda: _suite_oscillator(),
        "hydrogen": lambda: _suite_hydrogen(),
        "dynamics": lambda: _suite_dynamics(args.seed),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    checks: list[tuple[str, Check]] = []
    for name in names:
        for check in suites[name]():
            checks.append((name, check))

    meta = {"suite": args.suite, "seed": args.seed}
    columns = ["suite", "check", "measured", "tolerance", "status"]
    rows = [{"suite": name, "check": c.name, "measured": c.measured,
             "tolerance": c.tolerance,
             "status": "PASS" if c.passed else "FAIL",
             **({"info": c.info} if c.info else {})}
            for name, c in checks]
    _emit(args, VERIFY_SCHEMA, meta, columns, rows)
    return EXIT_OK if all(c.passed for _, c in checks) else 1


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _emit(args, schema, meta, columns, rows) -> None:
    fmt = args.format
    if fmt == "csv":
        lines = [f"# schema={schema}"]
        meta_text = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(meta.items()))
        lines.append(f"# {meta_text}")
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt(row.get(col, "")) for col in columns))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = json.dumps({"schema": schema, "meta": meta, "rows": rows},
                          sort_keys=True, indent=2) + "\n"
    else:  # table
        widths = {c: max(len(c), *(len(_short(r.get(c, ""))) for r in rows))
                  for c in columns}
        lines = [" ".join(f"{k}={_fmt(v)}" for k, v in sorted(meta.items()))]
        lines.append("  ".join(c.ljust(widths[c]) for c in columns))
        for row in rows:
            lines.append("  ".join(_short(row.get(c, "")).ljust(widths[c])
                                   for c in columns))
        extra = [f"    {r['check']}: {r['info']}" for r in rows if r.get("info")]
        text = "\n".join(lines + extra) + "\n"

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _short(value) -> str:
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfspec",
        description="Spectra, wavefunctions and verification suites for "
                    "relativistic particle-field bound states.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "table"),
                        default="table")
    common.add_argument("--output", default=None, help="write to file instead of stdout")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property suites")

    spectrum = sub.add_parser("spectrum", parents=[common],
                              help="tabulate energy levels")
    spectrum.add_argument("--model", choices=MODELS, required=True)
    spectrum.add_argument("--nmax", type=int, required=True)
    spectrum.add_argument("--l", type=int, default=None,
                          help="restrict hydrogen rows to one orbital number")
    spectrum.add_argument("--lambda", dest="lam", type=float, default=None,
                          help="oscillator coupling hbar*w0/(m0 c^2) "
                               "(default 1e-3 for oscillator models)")
    spectrum.add_argument("--g", type=float, default=None,
                          help="Coulomb coupling G (default: CODATA value)")
    spectrum.add_argument("--g2", type=float, default=None,
                          help="Coulomb coupling squared G^2")
    spectrum.add_argument("--units", choices=("ev", "natural"), default="ev")
    spectrum.add_argument("--compare", choices=("oracle",), default=None,
                          help="add shooting-oracle columns")
    spectrum.add_argument("--tol", type=float, default=1e-8,
                          help="oracle deviation gate for the exit code")
    spectrum.set_defaults(func=cmd_spectrum)

    wavefunction = sub.add_parser("wavefunction", parents=[common],
                                  help="sample a level function on a grid")
    wavefunction.add_argument("--model", choices=MODELS, required=True)
    wavefunction.add_argument("--n", type=int, required=True)
    wavefunction.add_argument("--l", type=int, default=0)
    wavefunction.add_argument("--m", type=int, default=0)
    wavefunction.add_argument("--samples", type=int, default=1000)
    wavefunction.add_argument("--lambda", dest="lam", type=float, default=None)
    wavefunction.add_argument("--g", type=float, default=None)
    wavefunction.add_argument("--g2", type=float, default=None)
    wavefunction.add_argument("--rmax", type=float, default=None,
                              help="radial grid extent in Compton units")
    wavefunction.add_argument("--plot", default=None,
                              help="write a static plot file (e.g. .svg)")
    wavefunction.set_defaults(func=cmd_wavefunction)

    verify = sub.add_parser("verify", parents=[common],
                            help="run the verification suites")
    verify.add_argument("--suite", choices=("all", "oscillator", "hydrogen", "dynamics"),
                        default="all")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (oracle.BracketError, oracle.SpectrumOrderingError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
