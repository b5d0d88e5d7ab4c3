"""Command-line front end.

Subcommands write CSV (header row, ``%.16e`` floats, LF line endings) to
``--out`` or stdout.  Human-readable summaries are ``#``-prefixed lines on
stdout.  Exit codes: 0 ok, 1 verify failure, 2 validation error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .errors import InvalidParams, NumericalFailure
from .exact import evolve_exact
from .modes import ModeIndex, PhysParams, mode_energy
from .oracle import OdeRun, evolve_ode_with_stats
from .perturb import eps0, eps1, eps2
from .verify import GROUPS, run_groups
from .vacuum import MomentumGrid, TWO_PI, pair_values, vacuum_density_direct, vacuum_density_pert, vacuum_integrand

EXIT_OK, EXIT_VERIFY, EXIT_VALIDATION, EXIT_NUMERICAL = 0, 1, 2, 3

MODE_COLUMNS = ["lambda", "p", "E", "eps_exact", "eps_oracle", "eps0", "eps1", "eps2",
                "delta_exact", "delta_pert", "residual", "norm_drift"]
VACUUM_COLUMNS = ["p", "integrand", "pair_pert", "pair_exact"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(x: float) -> str:
    return f"{x:.16e}"


def _write_csv(path, header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, (int, str)) else fmt(v) for v in row])
    if path is None or path == "-":
        sys.stdout.write(buf.getvalue())
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())


def _params(args) -> PhysParams:
    if args.alpha * args.c < 0.0:
        raise InvalidParams(f"alpha*c must be >= 0, got alpha={args.alpha}, c={args.c}")
    return PhysParams(m=args.m, alpha=args.alpha, cdecay=args.c,
                      series_tol=args.tol, ode_tol=args.ode_tol)


def mode_row(lam: int, p: float, params: PhysParams, t1: float = 0.0,
             threshold: float = 1e-12) -> list:
    mode = ModeIndex(lam, p)
    e0 = eps0(mode, params)
    e1 = eps1(mode, params, t1)
    e2 = eps2(mode, params, t1).total
    ex = mode_energy(evolve_exact(mode, params, t1), mode, params)
    state, stats = evolve_ode_with_stats(mode, params, OdeRun.seeded(params, t1, threshold))
    orc = mode_energy(state, mode, params)
    return [lam, p, mode.energy(params.m), ex, orc, e0, e1, e2,
            ex - e0, e1 + e2, ex - (e0 + e1 + e2), stats.norm_drift]


def _mode_row_job(job):
    return mode_row(*job)


def run_mode_energy(args) -> int:
    params = _params(args)
    if args.t1 > 0.0:
        raise InvalidParams(f"--t1 must be <= 0, got {args.t1}")
    rows = [mode_row(lam, p, params, args.t1, args.seed_threshold)
            for lam in args.lam for p in args.p]
    _write_csv(args.out, MODE_COLUMNS, rows)
    return EXIT_OK


def run_sweep(args) -> int:
    base = _params(args)
    if args.t1 > 0.0:
        raise InvalidParams(f"--t1 must be <= 0, got {args.t1}")
    momenta = np.linspace(-args.p_max, args.p_max, args.n_points)
    jobs = [(lam, float(p), base, args.t1, args.seed_threshold)
            for lam in args.lam for p in momenta]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_mode_row_job, jobs, chunksize=4))
    else:
        rows = [_mode_row_job(j) for j in jobs]
    _write_csv(args.out, MODE_COLUMNS, rows)
    return EXIT_OK


def run_vacuum(args) -> int:
    params = _params(args)
    grid = MomentumGrid(p_max=args.p_max, n_points=args.n_points)
    pert = vacuum_density_pert(params)
    density_exact, bound = vacuum_density_direct(params, grid, "exact", args.seed_threshold)
    _, momenta = grid.nodes()
    integrand = [vacuum_integrand(float(p), params.m, params.cdecay) for p in momenta]
    rows = zip(momenta.tolist(), integrand,
               pair_values(params, momenta, "perturbative").tolist(),
               pair_values(params, momenta, "exact").tolist())
    _write_csv(args.out, VACUUM_COLUMNS, rows)
    if params.alpha == 0.0:
        verdict = "zero"
    else:
        verdict = "true" if (pert.density_pert < 0.0 and density_exact < 0.0) else "false"
    print(f"# integral_I = {fmt(pert.integral_I)}")
    print(f"# density_pert = {fmt(pert.density_pert)}")
    print(f"# density_exact = {fmt(density_exact)}")
    print(f"# tail_bound = {fmt(bound)}")
    print(f"# density < 0: {verdict}")
    return EXIT_OK


def run_verify(args) -> int:
    params = _params(args)
    names = args.group or list(GROUPS)
    failed = 0
    start = time.perf_counter()
    for name, ok, detail in run_groups(params, names):
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        failed += not ok
    print(f"# {len(names) - failed}/{len(names)} groups passed "
          f"in {time.perf_counter() - start:.1f} s")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--m", type=float, default=1.0)
    common.add_argument("--alpha", type=float, default=-0.01)
    common.add_argument("--c", type=float, default=-1.0, help="switch rate (< 0)")
    common.add_argument("--tol", type=float, default=1e-13, help="hypergeometric series tolerance")
    common.add_argument("--ode-tol", type=float, default=1e-12)
    common.add_argument("--seed-threshold", type=float, default=1e-12,
                        help="R(t) at which the ODE oracle is seeded")
    common.add_argument("--out", default=None, help="CSV path (default stdout)")

    parser = _Parser(prog="diracsea", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    me = sub.add_parser("mode-energy", parents=[common], help="single-mode comparison")
    me.add_argument("--lambda", dest="lam", type=int, nargs="+", default=[-1], choices=(1, -1))
    me.add_argument("--p", type=float, nargs="+", default=[1.0])
    me.add_argument("--t1", type=float, default=0.0)
    me.set_defaults(func=run_mode_energy)

    sw = sub.add_parser("sweep", parents=[common], help="mode table over a momentum grid")
    sw.add_argument("--lambda", dest="lam", type=int, nargs="+", default=[-1, 1], choices=(1, -1))
    sw.add_argument("--p-max", type=float, default=3.0)
    sw.add_argument("--n-points", type=int, default=13)
    sw.add_argument("--t1", type=float, default=0.0)
    sw.add_argument("--jobs", type=int, default=1)
    sw.set_defaults(func=run_sweep)

    va = sub.add_parser("vacuum", parents=[common], help="vacuum energy density")
    va.add_argument("--p-max", type=float, default=50.0)
    va.add_argument("--n-points", type=int, default=513)
    va.set_defaults(func=run_vacuum)

    ve = sub.add_parser("verify", parents=[common], help="run the self-check groups")
    ve.add_argument("--group", action="append", choices=sorted(GROUPS))
    ve.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, InvalidParams) as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalFailure as exc:
        print(f"error: numerical: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
