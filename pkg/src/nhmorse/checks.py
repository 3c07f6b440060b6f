"""Named verification checks.

Each check returns a ResidualReport; the registry drives both the CLI
`verify` subcommand and the acceptance test module, so the two surfaces
can never drift apart.
"""

from __future__ import annotations

import math
import random
from typing import Callable

import numpy as np

from . import morse, riccati, specfun, susy, verify
from .morse import BoundStateConvention, MorseParameters, ParameterMap
from .riccati import MorseRiccati, RiccatiSign
from .susy import ExtensionParams, Sector
from .verify import Grid1D, ResidualReport

FIG_PARAMS = MorseParameters(A=1.0, B=2.0, a=0.5, K=0.0, Kprime=2.0)


def _report(name, rel, tol, grid_size=0, abs_res=None, note=""):
    return ResidualReport(
        name=name,
        grid_size=grid_size,
        max_abs_residual=rel if abs_res is None else abs_res,
        max_rel_residual=rel,
        passed=rel <= tol,
        tolerance=tol,
        note=note,
    )


def _admissible_b(rng: random.Random) -> complex:
    while True:
        b = complex(rng.uniform(-7.0, 7.0), rng.uniform(-7.0, 7.0))
        r = round(b.real)
        if not (r <= 0 and abs(b - r) < 0.05):
            return b


def check_kummer_oracle(tol: float = 1e-10) -> ResidualReport:
    """kummer_m against the compensated-summation reference, 1000 samples."""
    rng = random.Random(20060515)
    worst = 0.0
    for _ in range(1000):
        a = complex(rng.uniform(-7.0, 7.0), rng.uniform(-7.0, 7.0))
        b = _admissible_b(rng)
        z = rng.uniform(1e-6, 30.0)
        ref = verify.reference_kummer(a, b, z, target_rel=1e-13)
        val = specfun.kummer_m(a, b, z)
        worst = max(worst, abs(val - ref) / max(abs(ref), 1e-300))
    return _report("kummer-oracle", worst, tol, grid_size=1000)


def _solution_params(K: float, kind: str) -> MorseParameters:
    if kind == "m":
        return MorseParameters(K=K, alpha1=1, beta1=0, alpha2=1, beta2=0)
    return MorseParameters(K=K, alpha1=0, beta1=1, alpha2=0, beta2=1)


def _residual_sweep(pmap: ParameterMap, tol: float) -> tuple[float, list[str]]:
    grid = Grid1D(0.0, 3.0, 301)
    worst = 0.0
    skipped: list[str] = []
    for K in (0.0, 0.5, 1.0, 2.0):
        for sector in Sector:
            for kind in ("m", "w"):
                p = _solution_params(K, kind)

                def Q(x, p=p, sector=sector):
                    return morse.ode_coefficient(p, sector, x)

                def w(x, p=p, sector=sector):
                    return morse.wavefunction_derivs(p, sector, pmap, x)[0]

                def d2w(x, p=p, sector=sector):
                    return morse.wavefunction_derivs(p, sector, pmap, x)[2]

                try:
                    rep = verify.ode_residual(Q, w, grid, d2w=d2w, tol=tol)
                except Exception as exc:  # noqa: BLE001 - recorded, not hidden
                    skipped.append(f"K={K} {sector.value} {kind}: {type(exc).__name__}")
                    continue
                worst = max(worst, rep.max_rel_residual)
    return worst, skipped


def check_residual_derived(tol: float = 1e-8) -> ResidualReport:
    """Derived-map closed forms satisfy their printed equations."""
    worst, skipped = _residual_sweep(ParameterMap.DERIVED, tol)
    note = "; ".join(skipped)
    rep = _report("residual-derived", worst, tol, grid_size=301, note=note)
    if skipped:
        rep.passed = False
    return rep


def check_residual_printed(tol: float = math.inf) -> ResidualReport:
    """Report-only: printed-map residuals are measured, not required to pass.

    The published index formula omits the A^2 contribution of the
    expanded coefficient, so for A != 0 these residuals are expected to
    be large; the check passes as long as the report is produced.
    """
    worst, skipped = _residual_sweep(ParameterMap.PRINTED, 1e-8)
    note = f"documented finding: printed map max residual {worst:.3e}"
    if skipped:
        note += "; skipped " + "; ".join(skipped)
    return _report("residual-printed-report", worst, tol, grid_size=301, note=note)


def check_integration_cross(tol: float = 1e-6) -> ResidualReport:
    """Seed the fermionic equation at x=1 from the closed form, RK4 to x=2."""
    p = MorseParameters(K=1.0)
    pmap = ParameterMap.DERIVED
    sector = Sector.FERMIONIC

    def Q(x):
        return morse.ode_coefficient(p, sector, x)

    w0, dw0, _ = morse.wavefunction_derivs(p, sector, pmap, 1.0)
    w1, _ = verify.integrate_ode(Q, 1.0, w0, dw0, 2.0, step=1e-4)
    exact = morse.wavefunction(p, sector, pmap, 2.0)
    rel = abs(w1 - exact) / abs(exact)
    return _report("integration-cross-check", rel, tol)


def check_intertwining(tol: float = 1e-8) -> ResidualReport:
    rep = verify.intertwining_check(
        MorseParameters(K=1.0), ParameterMap.DERIVED, Grid1D(0.2, 3.0, 57), tol=tol
    )
    rep.name = "intertwining"
    return rep


def check_riccati_closure(tol: float = 1e-12) -> ResidualReport:
    """u is built from R, so the Riccati residual must close to roundoff."""
    shape = MorseRiccati(A=1.0, B=2.0, a=0.5)
    worst = 0.0
    for sign in RiccatiSign:
        sol = riccati.morse_riccati(shape, sign)
        for x in np.linspace(-5.0, 10.0, 301):
            worst = max(worst, riccati.riccati_residual(sol, x))
    return _report("riccati-closure", worst, tol, grid_size=602)


def check_expansion_identity(tol: float = 1e-12) -> ResidualReport:
    """Expanded Morse coefficient vs the generic bracket on the superpotential."""
    worst = 0.0
    count = 0
    for A in (-1.0, 0.0, 0.5, 1.0, 2.0):
        for B in (1.0, 2.0):
            for a in (0.5, 1.0):
                for K in (0.0, 1.0, 2.0):
                    for Kp in (0.0, 2.0):
                        p = MorseParameters(A=A, B=B, a=a, K=K, Kprime=Kp)
                        sol = morse.morse_solution(p)
                        ext = ExtensionParams(K=K, Kprime=Kp)
                        for sector in Sector:
                            for x in np.linspace(0.0, 3.0, 11):
                                lhs = morse.ode_coefficient(p, sector, x)
                                rhs = susy.complex_potential_coefficient(sol, ext, sector, x)
                                worst = max(worst, abs(lhs - rhs) / (1.0 + abs(rhs)))
                                count += 1
    return _report("expansion-identity", worst, tol, grid_size=count)


def check_laguerre_identity(tol: float = 1e-10) -> ResidualReport:
    """Whittaker-to-Laguerre reduction with the explicit Pochhammer factor."""
    worst = 0.0
    for n in (0, 1, 2):
        for p in (1.0, 2.0, 3.0):
            for y in (0.5, 1.0, 8.0):
                lhs, rhs_printed, rhs_corrected = morse.whittaker_laguerre_identity(n, p, y)
                worst = max(worst, abs(lhs - rhs_corrected) / abs(lhs))
                if n >= 1 and rhs_printed != 0.0:
                    factor = math.factorial(n) / morse.pochhammer(p + 1.0, n)
                    worst = max(worst, abs(lhs / rhs_printed - factor) / abs(factor))
    return _report("laguerre-identity", worst, tol, grid_size=27)


def check_reality_k0(tol: float = 1e-12) -> ResidualReport:
    """K = 0 slice of the figure grid is purely real (printed map)."""
    worst = 0.0
    for sector in Sector:
        for x in np.linspace(0.0, 3.0, 61):
            w = morse.wavefunction_laguerre_form(FIG_PARAMS, sector, ParameterMap.PRINTED, x)
            worst = max(worst, abs(w.imag))
    return _report("reality-k0", worst, tol, grid_size=122)


def check_wronskian(tol: float = 1e-8) -> ResidualReport:
    """M/W solution pairs (derived map, K = 1) have an x-independent Wronskian."""
    grid = Grid1D(0.2, 3.0, 57)
    worst = 0.0
    for sector in Sector:
        pm = _solution_params(1.0, "m")
        pw = _solution_params(1.0, "w")
        pmap = ParameterMap.DERIVED

        def f(x, p=pm, sector=sector):
            return morse.wavefunction_derivs(p, sector, pmap, x)[0]

        def df(x, p=pm, sector=sector):
            return morse.wavefunction_derivs(p, sector, pmap, x)[1]

        def g(x, p=pw, sector=sector):
            return morse.wavefunction_derivs(p, sector, pmap, x)[0]

        def dg(x, p=pw, sector=sector):
            return morse.wavefunction_derivs(p, sector, pmap, x)[1]

        rep = verify.wronskian_constancy(f, df, g, dg, grid, tol=tol)
        worst = max(worst, rep.max_rel_residual)
    return _report("wronskian", worst, tol, grid_size=114)


def check_grid_shape(tol: float = 1e-12) -> ResidualReport:
    """Default figure grid: exact header, 61 x 41 rows, byte-identical reruns,
    real K = 0 rows."""
    from . import cli

    first = cli.render_grid(cli.GridSpec())
    second = cli.render_grid(cli.GridSpec())
    lines = first.split("\n")
    problems = []
    if first != second:
        problems.append("output not deterministic")
    if lines[0] != "x,K,y,re,im":
        problems.append(f"bad header {lines[0]!r}")
    body = [ln for ln in lines[1:] if ln]
    if len(body) != 61 * 41:
        problems.append(f"expected {61*41} rows, got {len(body)}")
    worst_im = 0.0
    for ln in body:
        parts = ln.split(",")
        if float(parts[1]) == 0.0:
            worst_im = max(worst_im, abs(float(parts[4])))
    rep = _report("grid-shape", worst_im, tol, grid_size=len(body), note="; ".join(problems))
    if problems:
        rep.passed = False
    return rep


def check_rk4_order(tol: float = 0.25) -> ResidualReport:
    """Order-4 convergence on w'' + w = 0: error ratio h vs h/2 near 16.

    Reported residual is |ratio/16 - 1|; tolerance 0.25 corresponds to
    the acceptance window [12, 20].
    """
    def Q(x):
        return 1.0 + 0.0j

    # endpoint 1.0: at pi/2 the leading error term of the w component
    # vanishes (superconvergence) and the measured order jumps to 5
    errs = []
    for h in (0.02, 0.01):
        w, dw = verify.integrate_ode(Q, 0.0, 0.0, 1.0, 1.0, step=h)
        errs.append(math.hypot(abs(w - math.sin(1.0)), abs(dw - math.cos(1.0))))
    ratio = errs[0] / errs[1]
    return _report("rk4-order", abs(ratio / 16.0 - 1.0), tol, note=f"ratio = {ratio:.3f}")


CHECKS: dict[str, Callable[..., ResidualReport]] = {
    "kummer-oracle": check_kummer_oracle,
    "residual-derived": check_residual_derived,
    "residual-printed-report": check_residual_printed,
    "integration-cross-check": check_integration_cross,
    "intertwining": check_intertwining,
    "riccati-closure": check_riccati_closure,
    "expansion-identity": check_expansion_identity,
    "laguerre-identity": check_laguerre_identity,
    "reality-k0": check_reality_k0,
    "wronskian": check_wronskian,
    "grid-shape": check_grid_shape,
    "rk4-order": check_rk4_order,
}


def run_checks(only: str | None = None, tol: float | None = None) -> list[ResidualReport]:
    if only is not None and only not in CHECKS:
        raise KeyError(only)
    names = [only] if only is not None else list(CHECKS)
    reports = []
    for name in names:
        fn = CHECKS[name]
        reports.append(fn(tol) if tol is not None else fn())
    return reports
