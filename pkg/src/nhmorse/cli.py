"""Command-line surface: figure grids as CSV, parameter tables,
bound-state tables, and the verification suite.

Exit codes: 0 success / all checks pass, 1 evaluation or verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import checks, morse, verify
from .morse import BoundStateConvention, MorseParameters, ParameterMap
from .riccati import MorseRiccati, morse_y
from .susy import Sector

HEADER = "x,K,y,re,im"


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


@dataclass(frozen=True)
class GridSpec:
    """Everything needed to render one figure grid; defaults reproduce the
    published figure parameters."""

    A: float = 1.0
    B: float = 2.0
    a: float = 0.5
    Kprime: float = 2.0
    component: Sector = Sector.BOSONIC
    param_map: ParameterMap = ParameterMap.PRINTED
    solution: str = "m"
    alpha: complex = 1.0 + 0.0j
    beta: complex = 0.0 + 0.0j
    x_min: float = 0.0
    x_max: float = 3.0
    nx: int = 61
    K_min: float = 0.0
    K_max: float = 2.0
    nK: int = 41


def _grid_value(spec: GridSpec, K: float, x: float) -> complex:
    if spec.solution == "m":
        p = MorseParameters(
            A=spec.A, B=spec.B, a=spec.a, K=K, Kprime=spec.Kprime,
            alpha1=spec.alpha, beta1=0.0, alpha2=spec.alpha, beta2=0.0,
        )
        return morse.wavefunction_laguerre_form(p, spec.component, spec.param_map, x)
    if spec.solution == "w":
        p = MorseParameters(
            A=spec.A, B=spec.B, a=spec.a, K=K, Kprime=spec.Kprime,
            alpha1=0.0, beta1=spec.beta, alpha2=0.0, beta2=spec.beta,
        )
    else:
        p = MorseParameters(
            A=spec.A, B=spec.B, a=spec.a, K=K, Kprime=spec.Kprime,
            alpha1=spec.alpha, beta1=spec.beta, alpha2=spec.alpha, beta2=spec.beta,
        )
    return morse.wavefunction(p, spec.component, spec.param_map, x)


def render_grid(spec: GridSpec) -> str:
    """CSV text for the grid: K outer loop ascending, x inner ascending."""
    shape = MorseRiccati(A=spec.A, B=spec.B, a=spec.a)
    xs = np.linspace(spec.x_min, spec.x_max, spec.nx)
    Ks = np.linspace(spec.K_min, spec.K_max, spec.nK)
    lines = [HEADER]
    for K in Ks:
        for x in xs:
            try:
                w = _grid_value(spec, float(K), float(x))
            except Exception as exc:
                raise RuntimeError(f"evaluation failed at x={x:.17g}, K={K:.17g}: {exc}") from exc
            y = morse_y(shape, float(x))
            lines.append(
                f"{_fmt(float(x))},{_fmt(float(K))},{_fmt(y)},{_fmt(w.real)},{_fmt(w.imag)}"
            )
    return "\n".join(lines) + "\n"


def _add_shared_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--A", type=float, default=1.0)
    p.add_argument("--B", type=float, default=2.0)
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--K", type=float, default=0.0)
    p.add_argument("--Kprime", type=float, default=2.0)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nhmorse")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grid", help="emit a wavefunction grid as CSV")
    _add_shared_flags(g)
    g.add_argument("--component", choices=[s.value for s in Sector], default="bosonic")
    g.add_argument("--param-map", choices=[m.value for m in ParameterMap], default="printed")
    g.add_argument("--solution", choices=["m", "w", "mix"], default="m",
                   help="m: regular (Laguerre-form), w: recessive, mix: alpha*M + beta*W")
    g.add_argument("--alpha", type=_parse_complex, default=1.0 + 0.0j, metavar="RE[,IM]")
    g.add_argument("--beta", type=_parse_complex, default=0.0 + 0.0j, metavar="RE[,IM]")
    g.add_argument("--x-min", type=float, default=0.0)
    g.add_argument("--x-max", type=float, default=3.0)
    g.add_argument("--nx", type=int, default=61)
    g.add_argument("--K-min", type=float, default=0.0)
    g.add_argument("--K-max", type=float, default=2.0)
    g.add_argument("--nK", type=int, default=41)
    g.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("params", help="print index/coefficient table")
    _add_shared_flags(p)
    p.add_argument("--x-min", type=float, default=0.0)
    p.add_argument("--x-max", type=float, default=3.0)

    b = sub.add_parser("bound-states", help="hermitic bound-state table with residuals")
    _add_shared_flags(b)
    b.add_argument("--convention", choices=[c.value for c in BoundStateConvention],
                   default="paper")

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--only", default=None, metavar="CHECK",
                   help="run a single named check")
    v.add_argument("--tol", type=float, default=None,
                   help="override the tolerance of the selected checks")
    return parser


def cmd_grid(args) -> int:
    spec = GridSpec(
        A=args.A, B=args.B, a=args.a, Kprime=args.Kprime,
        component=Sector(args.component),
        param_map=ParameterMap(args.param_map),
        solution=args.solution,
        alpha=args.alpha, beta=args.beta,
        x_min=args.x_min, x_max=args.x_max, nx=args.nx,
        K_min=args.K_min, K_max=args.K_max, nK=args.nK,
    )
    try:
        text = render_grid(spec)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return 0


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.17g} {z.imag:+.17g}i"


def cmd_params(args) -> int:
    p = MorseParameters(A=args.A, B=args.B, a=args.a, K=args.K, Kprime=args.Kprime)
    printed = morse.indices(p, ParameterMap.PRINTED)
    derived = morse.indices(p, ParameterMap.DERIVED)
    shape = p.shape()
    rows = [
        ("kappa1", _fmt_complex(printed.kappa1)),
        ("kappa2", _fmt_complex(printed.kappa2)),
        ("mu_printed", _fmt_complex(printed.mu)),
        ("mu_derived", _fmt_complex(derived.mu)),
        ("B_bar", _fmt(p.B_bar)),
        ("C1_bar", _fmt(p.C1_bar)),
        ("C2_bar", _fmt(p.C2_bar)),
        ("y(x_min)", _fmt(morse_y(shape, args.x_min))),
        ("y(x_max)", _fmt(morse_y(shape, args.x_max))),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {value}")
    return 0


def cmd_bound_states(args) -> int:
    convention = BoundStateConvention(args.convention)
    A, B, a = args.A, args.B, args.a
    grid = verify.Grid1D(0.0, 3.0, 301)
    rows = []
    n = 0
    while morse.bound_state_exponent(A, a, n, convention) > 0.0:
        kprime = morse.bound_state_kprime(A, a, n, convention)
        s = morse.bound_state_exponent(A, a, n, convention)
        kp2_matched = a * a * s * s - A * A
        res_conv = verify.bound_state_residual(A, B, a, n, convention, kprime * kprime, grid)
        res_matched = verify.bound_state_residual(A, B, a, n, convention, kp2_matched, grid)
        rows.append((n, kprime, s, res_conv.max_rel_residual, res_matched.max_rel_residual))
        n += 1
    if not rows:
        print("no bound states")
        return 0
    print("n  Kprime  exponent  residual(Kprime^2)  residual(matched Kprime^2)")
    for n, kprime, s, r1, r2 in rows:
        print(f"{n}  {_fmt(kprime)}  {_fmt(s)}  {r1:.3e}  {r2:.3e}")
    return 0


def cmd_verify(args) -> int:
    try:
        reports = checks.run_checks(only=args.only, tol=args.tol)
    except KeyError:
        known = ", ".join(checks.CHECKS)
        print(f"error: unknown check {args.only!r}; known checks: {known}", file=sys.stderr)
        return 2
    all_pass = True
    for rep in reports:
        print(rep.line())
        all_pass = all_pass and rep.passed
    return 0 if all_pass else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "grid":
        return cmd_grid(args)
    if args.command == "params":
        return cmd_params(args)
    if args.command == "bound-states":
        return cmd_bound_states(args)
    return cmd_verify(args)


if __name__ == "__main__":
    raise SystemExit(main())
