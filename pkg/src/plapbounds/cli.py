"""
Command-line interface.

Subcommands:

* ``bounds``      -- closed-form bound table for one (n, p, K[, lam]).
* ``eigen``       -- one eigenvalue solve (ball, flat ball, or 1-D
                     interval; shooting or Rayleigh route).
* ``sweep``       -- grid of eigenvalue solves + bound comparisons,
                     written as CSV with a fixed column set.
* ``verify``      -- run a named verification suite; nonzero exit on
                     any failing check.
* ``limit-check`` -- tabulate the p -> 2 and R -> infinity limits,
                     optionally writing two-column plot data.

Exit codes: 0 success, 1 check failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from . import bounds as bd
from . import certificate as ct
from . import solver as sv
from .geometry import ModelSpace
from .suites import run_suite

CSV_COLUMNS = (
    "n,p,K,R,lambda_solver,bound_paper,ratio,grad_sup,grad_bound,sigma,residual,error"
)

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2

CONFIG_VERSION = 1
_CONFIG_LIST_KEYS = ("n", "p", "K", "R")
_CONFIG_SCALAR_KEYS = ("version", "tol", "method", "mesh", "out")


class ConfigError(ValueError):
    pass


def _fmt17(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.17g}"


def _fmt6(x: float) -> str:
    return f"{x:.6g}"


# ----------------------------------------------------------------------
# bounds
# ----------------------------------------------------------------------


def cmd_bounds(args) -> int:
    n, p, K = args.n, args.p, args.K
    lines = []
    eig = bd.eigen_upper_bound(n, p, K)
    lines.append(f"eigenvalue upper bound ((n-1)K/p)^p : {_fmt6(eig)}")
    if p == 2:
        lines.append(f"p = 2 value (Cheng)                : {_fmt6(bd.cheng_bound(n, K))}")
        lines.append(f"p-harmonic gradient bound (limit)  : {_fmt6(bd.p_harmonic_bound(n, p, K))}")
    else:
        lines.append(f"p-harmonic gradient bound (lam=0)  : {_fmt6(bd.p_harmonic_bound(n, p, K))}")
        if args.lam is not None:
            try:
                bb = bd.grad_bound(bd.SpectralInput(n, p, K, args.lam))
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            lines.append(f"gradient bound at lam={_fmt6(args.lam)}:")
            lines.append(f"  prefactor     : {_fmt6(bb.prefactor)}")
            lines.append(f"  linear term   : {_fmt6(bb.linear_term)}")
            lines.append(f"  sqrt argument : {_fmt6(bb.sqrt_argument)}")
            lines.append(f"  sqrt value    : {_fmt6(bb.sqrt_value)}")
            lines.append(f"  total         : {_fmt6(bb.total)}")
    text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ----------------------------------------------------------------------
# eigen
# ----------------------------------------------------------------------


def cmd_eigen(args) -> int:
    if args.interval:
        if args.L is None:
            print("error: --interval requires --L", file=sys.stderr)
            return EXIT_USAGE
        if args.method == "rayleigh":
            res = sv.rayleigh_minimize_interval(args.p, args.L, mesh_size=args.mesh)
        else:
            res = sv.interval_eigenvalue_1d(args.p, args.L, tol=args.tol)
        exact = (args.p - 1.0) * (sv.pi_p(args.p) / args.L) ** args.p
        print(f"interval p={_fmt6(args.p)} L={_fmt6(args.L)}")
        print(f"lambda_1        : {_fmt17(res.lam)}")
        print(f"closed form     : {_fmt17(exact)}")
        print(f"residual        : {_fmt6(res.residual)}")
        print(f"iterations      : {res.iterations}")
        return EXIT_OK

    K = 0.0 if args.flat else args.K
    ms = ModelSpace(args.n, K)
    if args.method == "rayleigh":
        res = sv.rayleigh_minimize(ms, args.p, args.R, mesh_size=args.mesh)
    else:
        res = sv.dirichlet_eigenvalue(ms, args.p, args.R, tol=args.tol)
    bound = bd.eigen_upper_bound(args.n, args.p, K)
    print(f"ball n={args.n} p={_fmt6(args.p)} K={_fmt6(K)} R={_fmt6(args.R)} ({args.method})")
    print(f"lambda_1        : {_fmt17(res.lam)}")
    print(f"bound ((n-1)K/p)^p : {_fmt17(bound)}")
    if bound > 0:
        print(f"ratio           : {_fmt6(res.lam / bound)}")
    print(f"bracket         : ({_fmt17(res.bracket[0])}, {_fmt17(res.bracket[1])})")
    print(f"residual        : {_fmt6(res.residual)}")
    print(f"iterations      : {res.iterations}")
    return EXIT_OK


# ----------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------


@dataclass
class SweepSpec:
    """Grid of solver cells plus tolerance and output settings."""

    n: List[int] = field(default_factory=lambda: [2])
    p: List[float] = field(default_factory=lambda: [2.0])
    K: List[float] = field(default_factory=lambda: [1.0])
    R: List[float] = field(default_factory=lambda: [10.0])
    tol: float = 1e-8
    method: str = "shoot"
    mesh: int = 2000
    out: Optional[str] = None

    def cells(self):
        return sorted(
            (n, p, K, R) for n in self.n for p in self.p for K in self.K for R in self.R
        )


def parse_config(path: str) -> Dict[str, object]:
    """Flat key/value + comma-array config; schema is versioned."""
    values: Dict[str, object] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key in _CONFIG_LIST_KEYS:
                try:
                    items = [float(tok) for tok in val.replace(",", " ").split()]
                except ValueError as exc:
                    raise ConfigError(f"{path}:{lineno}: bad number in {key}: {exc}")
                values[key] = items
            elif key in _CONFIG_SCALAR_KEYS:
                values[key] = val
            else:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    version = values.pop("version", None)
    if version is None or int(float(str(version))) != CONFIG_VERSION:
        raise ConfigError(
            f"{path}: missing or unsupported schema version (need version = {CONFIG_VERSION})"
        )
    return values


def _spec_from_args(args) -> SweepSpec:
    spec = SweepSpec()
    if args.config:
        cfg = parse_config(args.config)
        if "n" in cfg:
            spec.n = [int(x) for x in cfg["n"]]
        if "p" in cfg:
            spec.p = list(cfg["p"])
        if "K" in cfg:
            spec.K = list(cfg["K"])
        if "R" in cfg:
            spec.R = list(cfg["R"])
        if "tol" in cfg:
            spec.tol = float(str(cfg["tol"]))
        if "method" in cfg:
            spec.method = str(cfg["method"])
        if "mesh" in cfg:
            spec.mesh = int(float(str(cfg["mesh"])))
        if "out" in cfg:
            spec.out = str(cfg["out"])
    # flags override the config file
    if args.n:
        spec.n = [int(x) for x in args.n]
    if args.p:
        spec.p = list(args.p)
    if args.K:
        spec.K = list(args.K)
    if args.R:
        spec.R = list(args.R)
    if args.tol is not None:
        spec.tol = args.tol
    if args.method:
        spec.method = args.method
    if args.mesh is not None:
        spec.mesh = args.mesh
    if args.out:
        spec.out = args.out
    if spec.method not in ("shoot", "rayleigh"):
        raise ConfigError(f"unknown method {spec.method!r} (shoot|rayleigh)")
    return spec


def sweep_cell(n: int, p: float, K: float, R: float, tol: float, method: str, mesh: int) -> Dict[str, Optional[float]]:
    """One sweep row; partial results carry a reason in 'error'."""
    row: Dict[str, object] = {
        "n": n, "p": p, "K": K, "R": R,
        "lambda_solver": None, "bound_paper": None, "ratio": None,
        "grad_sup": None, "grad_bound": None, "sigma": None,
        "residual": None, "error": "",
    }
    notes: List[str] = []
    try:
        ms = ModelSpace(n, K)
        bound = bd.eigen_upper_bound(n, p, K)
        row["bound_paper"] = bound
        if method == "rayleigh":
            res = sv.rayleigh_minimize(ms, p, R, mesh_size=mesh)
        else:
            res = sv.dirichlet_eigenvalue(ms, p, R, tol=tol)
        row["lambda_solver"] = res.lam
        if bound > 0:
            row["ratio"] = res.lam / bound
        else:
            notes.append("flat space: bound is 0, ratio undefined")
        if K > 0:
            lam9 = 0.9 * bound
            prof, zero = sv.shoot(ms, p, lam9, R)
            if zero is not None:
                notes.append(f"positive solution at 0.9*bound vanished at r={zero:.6g}")
            else:
                row["grad_sup"] = sv.sup_gradient(prof, 0.5)
                row["sigma"] = sv.sigma_ratio(prof)
                row["residual"] = sv.equation_residual(prof)
                if p != 2:
                    row["grad_bound"] = bd.grad_bound(
                        bd.SpectralInput(n, p, K, lam9)
                    ).total
                else:
                    notes.append("p=2: gradient formulas stated for p != 2 only")
        else:
            notes.append("flat space: gradient block skipped (bound is 0)")
    except Exception as exc:  # noqa: BLE001 - cell failures go to the CSV
        notes.append(f"{type(exc).__name__}: {exc}")
    row["error"] = "; ".join(notes)
    return row


def _row_to_csv(row: Dict[str, object]) -> str:
    fields = [
        str(int(row["n"])),
        _fmt17(row["p"]),
        _fmt17(row["K"]),
        _fmt17(row["R"]),
        _fmt17(row["lambda_solver"]),
        _fmt17(row["bound_paper"]),
        _fmt17(row["ratio"]),
        _fmt17(row["grad_sup"]),
        _fmt17(row["grad_bound"]),
        _fmt17(row["sigma"]),
        _fmt17(row["residual"]),
        str(row["error"]),
    ]
    return ",".join(fields)


def cmd_sweep(args) -> int:
    try:
        spec = _spec_from_args(args)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cells = spec.cells()
    rows: List[Dict[str, object]] = []
    if cells:
        workers = max(1, args.workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(sweep_cell, n, p, K, R, spec.tol, spec.method, spec.mesh)
                for (n, p, K, R) in cells
            ]
            rows = [f.result() for f in futures]
    rows.sort(key=lambda r: (r["n"], r["p"], r["K"], r["R"]))
    lines = [CSV_COLUMNS] + [_row_to_csv(r) for r in rows]
    text = "\n".join(lines)
    if spec.out:
        with open(spec.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(rows)} rows to {spec.out}")
    else:
        print(text)
    return EXIT_OK


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.suite)
    except KeyError as exc:
        print(f"usage error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failures += 1
        print(f"{status} [{r.suite}] {r.name}: {r.detail}")
    print(f"{len(results)} checks, {failures} failures")
    return EXIT_CHECK_FAILURE if failures else EXIT_OK


# ----------------------------------------------------------------------
# limit-check
# ----------------------------------------------------------------------


def _write_curve(path: str, xs: Sequence[float], ys: Sequence[float]):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for x, y in zip(xs, ys):
            fh.write(f"{x:.17g} {y:.17g}\n")


def cmd_limit_check(args) -> int:
    if args.kind == "p2":
        n, K = args.n, args.K
        cheng = bd.cheng_bound(n, K)
        deltas = [10.0 ** (-k) for k in range(1, 7)]
        gaps = []
        print(f"p -> 2 limits at n={n}, K={_fmt6(K)} (Cheng value {_fmt6(cheng)})")
        print("delta      eigen(2+d)   eigen(2-d)   max rel gap   grad^(1/p) gap")
        for d in deltas:
            hi = bd.eigen_upper_bound(n, 2.0 + d, K)
            lo = bd.eigen_upper_bound(n, 2.0 - d, K)
            gap = max(abs(hi - cheng), abs(lo - cheng)) / cheng
            ggap = max(
                abs(bd.p_harmonic_bound(n, 2.0 + d, K) ** (1 / (2.0 + d)) - (n - 1) * K),
                abs(bd.p_harmonic_bound(n, 2.0 - d, K) ** (1 / (2.0 - d)) - (n - 1) * K),
            ) / ((n - 1) * K)
            gaps.append(gap)
            print(f"{d:<10.0e} {_fmt6(hi):<12} {_fmt6(lo):<12} {gap:<13.3e} {ggap:.3e}")
        if args.out:
            _write_curve(args.out, deltas, gaps)
            print(f"wrote curve to {args.out}")
        return EXIT_OK

    # kind == "finite-R"
    n, p, K, lam = args.n, args.p, args.K, args.lam
    if p == 2:
        print("error: finite-R chain needs p != 2", file=sys.stderr)
        return EXIT_USAGE
    super_ = p > 2
    e3 = (
        ct.eps3_star_supercritical(n, p)
        if super_
        else ct.eps3_star_subcritical(n, p, K)
    )
    fn = ct.finite_R_bound_supercritical if super_ else ct.finite_R_bound_subcritical
    limit = fn(n, p, K, lam, ct.FiniteRContext(R=math.inf, eps3=e3))
    print(
        f"finite-R bound at n={n}, p={_fmt6(p)}, K={_fmt6(K)}, lam={_fmt6(lam)} "
        f"(eps3* = {_fmt6(e3)}, R=inf value {_fmt6(limit)})"
    )
    print("R            bound          rel gap to R=inf")
    Rs = [10.0**k for k in range(1, 11)]
    vals = []
    for R in Rs:
        val = fn(n, p, K, lam, ct.FiniteRContext(R=R, eps3=e3))
        vals.append(val)
        print(f"{R:<12.4g} {val:<14.8g} {abs(val - limit) / limit:.3e}")
    if args.out:
        _write_curve(args.out, Rs, vals)
        print(f"wrote curve to {args.out}")
    return EXIT_OK


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="plapbounds",
        description="p-Laplacian eigenvalue bounds, solvers, and verification suites",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="closed-form bound table")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--p", type=float, required=True)
    b.add_argument("--K", type=float, required=True)
    b.add_argument("--lambda", dest="lam", type=float, default=None)
    b.add_argument("--out", default=None)
    b.set_defaults(fn=cmd_bounds)

    e = sub.add_parser("eigen", help="one eigenvalue solve")
    e.add_argument("--n", type=int, default=2)
    e.add_argument("--p", type=float, required=True)
    e.add_argument("--K", type=float, default=1.0)
    e.add_argument("--R", type=float, default=10.0)
    e.add_argument("--L", type=float, default=None, help="interval length (with --interval)")
    e.add_argument("--flat", action="store_true", help="use the flat space (K = 0)")
    e.add_argument("--interval", action="store_true", help="1-D interval oracle")
    e.add_argument("--tol", type=float, default=1e-8)
    e.add_argument("--mesh", type=int, default=2000)
    e.add_argument("--method", choices=("shoot", "rayleigh"), default="shoot")
    e.set_defaults(fn=cmd_eigen)

    w = sub.add_parser("sweep", help="grid of solves, CSV output")
    w.add_argument("--config", default=None, help="key = value config file")
    w.add_argument("--n", type=float, nargs="+", default=None)
    w.add_argument("--p", type=float, nargs="+", default=None)
    w.add_argument("--K", type=float, nargs="+", default=None)
    w.add_argument("--R", type=float, nargs="+", default=None)
    w.add_argument("--tol", type=float, default=None)
    w.add_argument("--mesh", type=int, default=None)
    w.add_argument("--method", choices=("shoot", "rayleigh"), default=None)
    w.add_argument("--out", default=None)
    w.add_argument("--workers", type=int, default=4)
    w.set_defaults(fn=cmd_sweep)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   help="bounds | certificate | solver | lemma | all")
    v.set_defaults(fn=cmd_verify)

    lc = sub.add_parser("limit-check", help="p->2 and R->infinity limit tables")
    lc.add_argument("--kind", choices=("p2", "finite-R"), required=True)
    lc.add_argument("--n", type=int, default=3)
    lc.add_argument("--p", type=float, default=3.0)
    lc.add_argument("--K", type=float, default=1.0)
    lc.add_argument("--lambda", dest="lam", type=float, default=0.1)
    lc.add_argument("--out", default=None, help="two-column (x, y) plot data file")
    lc.set_defaults(fn=cmd_limit_check)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, sv.SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
