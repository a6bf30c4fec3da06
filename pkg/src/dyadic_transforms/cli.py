"""Command-line front end.

Subcommands::

    matrix    dyadic approximation numerators (or a corrected forward operator)
    tables    alpha, beta, dct-metrics, dct-metrics-polar, condition
    verify    exact identity checks; exit 1 if any fails
    freqresp  magnitude response of one basis row

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.  Output is deterministic for a fixed set of flags.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import __version__, exact, reference
from .dyadic import DyadicMatrix, dyadic_matrix
from .evaluation import (
    basis_frequency_response,
    dct_exact_metrics,
    dct_polar_metrics,
    dct_scalar_metrics,
)
from .fastalg import (
    F8_M1_D_INV_TIMES_16,
    F8_M1_NUMERATORS,
    c8_adjustments,
    c8_m0_factors,
    count_ops,
    f8_m1_factors,
    f8_squarewave_inverse,
    h8_squarewave_inverse,
    h16_m0_matrix,
    h16_reference_generation,
    hartley_m0_fast,
)
from .kernels import TransformKind, exact_matrix
from .matops import condition_number_2, gram, hermitian_inverse_sqrt
from .ortho import Mode, build_pair
from .scalaropt import optimal_alpha, optimal_beta

MAX_N = 1024
MAX_M = 12
TABLES = ("alpha", "beta", "dct-metrics", "dct-metrics-polar", "condition")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- formatting


def fmt_real(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, str):
        return x
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.10g}"
    return "0" if s == "-0" else s


def fmt_complex(z) -> str:
    z = complex(z)
    re = fmt_real(z.real)
    im = fmt_real(abs(z.imag))
    sign = "-" if math.copysign(1.0, z.imag) < 0 and z.imag != 0 else "+"
    return f"{re}{sign}{im}i"


def fmt_gaussian(re: int, im: int) -> str:
    return f"{int(re)}{'-' if im < 0 else '+'}{abs(int(im))}i"


def json_value(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isinf(x) or math.isnan(x):
            return fmt_real(x)
        return float(fmt_real(x))
    return x


@dataclass
class Table:
    columns: list[str]
    rows: list[list]
    meta: dict


def render(table: Table, fmt: str, header: bool) -> str:
    buf = io.StringIO()
    if fmt == "json":
        doc = dict(table.meta)
        if header:
            doc = {"version": __version__, **doc}
        doc["columns"] = table.columns
        doc["rows"] = [[json_value(v) for v in r] for r in table.rows]
        buf.write(json.dumps(doc, indent=2, sort_keys=False))
        buf.write("\n")
        return buf.getvalue()
    if header:
        buf.write(f"# dyadic-transforms {__version__}\n")
    for k, v in table.meta.items():
        buf.write(f"# {k}={v}\n")
    w = csv.writer(buf, lineterminator="\n")
    if table.columns:
        w.writerow(table.columns)
    for r in table.rows:
        w.writerow([v if isinstance(v, str) else fmt_real(v) for v in r])
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def cmd_matrix(args) -> Table:
    _require(args, "kind", "n")
    kind = TransformKind.parse(args.kind)
    if args.exact:
        M = exact_matrix(kind, args.n).entries
        rows = [[float(v.real) if kind.is_real else fmt_complex(v) for v in r] for r in M]
        return Table([], rows, {"kind": kind.value, "n": args.n, "matrix": "exact"})
    _require(args, "m")
    if args.mode is not None:
        pair = build_pair(kind, args.n, args.m, args.mode)
        F = pair.forward
        real = kind.is_real
        rows = [[float(v.real) if real else fmt_complex(v) for v in r] for r in F]
        return Table([], rows, {"kind": kind.value, "n": args.n, "m": args.m, "matrix": f"forward-{Mode.parse(args.mode).value}"})
    D = dyadic_matrix(kind, args.n, args.m)
    if kind.is_real:
        rows = [[int(v) for v in r] for r in D.re]
    else:
        rows = [[fmt_gaussian(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(D.re, D.im)]
    return Table([], rows, {"kind": kind.value, "n": args.n, "m": args.m, "denominator": 2**args.m})


def _dev(a, b):
    return None if a is None or b is None else abs(a - b)


def table_alpha(args) -> Table:
    rows = []
    for m, ref in reference.ALPHA.items():
        a = optimal_alpha(m).alpha
        rows.append([m, a, ref, _dev(a, ref)])
    rows.append(["inf", 1.0, 1.0, 0.0])
    return Table(["m", "alpha", "reference", "abs_dev"], rows, {"table": "alpha"})


def table_beta(args) -> Table:
    kinds = [TransformKind.parse(args.kind)] if args.kind else list(TransformKind)
    rows = []
    for kind in kinds:
        for n in reference.BETA_BLOCKLENGTHS:
            for j, m in enumerate(reference.BETA_ORDERS):
                b = optimal_beta(kind, n, m).beta
                ref = reference.BETA[kind.value][n][j]
                rows.append([kind.value, n, m, b, ref, _dev(b, ref)])
            inf = 1 / kind.eta(n)
            rows.append([kind.value, n, "inf", inf, inf, 0.0])
    return Table(["kind", "n", "m", "beta", "reference", "abs_dev"], rows, {"table": "beta"})


def _metric_cols(names):
    out = []
    for c in names:
        out += [c, f"{c}_reference", f"{c}_abs_dev"]
    return out


def table_dct_scalar(args) -> Table:
    rows = []
    for m, (b_ref, mse_ref, cg_ref, eff_ref) in reference.DCT_SCALAR.items():
        r = dct_scalar_metrics(m)
        rows.append(
            [m, r.beta, b_ref, _dev(r.beta, b_ref), r.mse, mse_ref, _dev(r.mse, mse_ref),
             r.coding_gain_db, cg_ref, _dev(r.coding_gain_db, cg_ref),
             r.efficiency_pct, eff_ref, _dev(r.efficiency_pct, eff_ref), r.coding_gain_biorthogonal_db]
        )
    e = dct_exact_metrics()
    cg_ref, eff_ref = reference.DCT_EXACT
    rows.append(["inf", e.beta, 0.5, 0.0, None, None, None, e.coding_gain_db, cg_ref, _dev(e.coding_gain_db, cg_ref),
                 e.efficiency_pct, eff_ref, _dev(e.efficiency_pct, eff_ref), e.coding_gain_biorthogonal_db])
    cols = ["m"] + _metric_cols(["beta", "mse", "coding_gain_db", "efficiency_pct"]) + ["coding_gain_biorthogonal_db"]
    return Table(cols, rows, {"table": "dct-metrics", "n": 8, "rho": 0.95})


def table_dct_polar(args) -> Table:
    rows = []
    for m, (mse_ref, cg_ref, eff_ref) in reference.DCT_POLAR.items():
        r = dct_polar_metrics(m)
        rows.append([m, r.mse, mse_ref, _dev(r.mse, mse_ref), r.coding_gain_db, cg_ref, _dev(r.coding_gain_db, cg_ref),
                     r.efficiency_pct, eff_ref, _dev(r.efficiency_pct, eff_ref)])
    e = dct_exact_metrics()
    cg_ref, eff_ref = reference.DCT_EXACT
    rows.append(["inf", None, None, None, e.coding_gain_db, cg_ref, _dev(e.coding_gain_db, cg_ref),
                 e.efficiency_pct, eff_ref, _dev(e.efficiency_pct, eff_ref)])
    cols = ["m"] + _metric_cols(["mse", "coding_gain_db", "efficiency_pct"])
    return Table(cols, rows, {"table": "dct-metrics-polar", "n": 8, "rho": 0.95})


def condition_grid(max_n: int, all_n: bool = False):
    ns = range(2, max_n + 1) if all_n else [2**p for p in range(1, int(math.log2(max_n)) + 1)]
    for n in ns:
        for m in range(7):
            for kind in TransformKind:
                yield kind, n, m, condition_number_2(dyadic_matrix(kind, n, m).values)


def table_condition(args) -> Table:
    rows = []
    for kind, n, m, c in condition_grid(args.max_n, args.all_n):
        rows.append([kind.value, n, m, c, reference.CONDITION_BOUND[kind.value]])
    return Table(["kind", "n", "m", "condition", "reference_bound"], rows,
                 {"table": "condition", "max_n": args.max_n, "blocklengths": "all" if args.all_n else "powers-of-two"})


TABLE_BUILDERS: dict[str, Callable] = {
    "alpha": table_alpha,
    "beta": table_beta,
    "dct-metrics": table_dct_scalar,
    "dct-metrics-polar": table_dct_polar,
    "condition": table_condition,
}


def cmd_tables(args) -> Table:
    return TABLE_BUILDERS[args.table](args)


def cmd_freqresp(args) -> Table:
    _require(args, "kind", "n", "row")
    kind = TransformKind.parse(args.kind)
    if args.exact:
        K = exact_matrix(kind, args.n).entries
        label = "exact"
    else:
        _require(args, "m")
        if args.mode is not None:
            K = build_pair(kind, args.n, args.m, args.mode).forward
            label = f"forward-{Mode.parse(args.mode).value}"
        else:
            K = dyadic_matrix(kind, args.n, args.m).values
            label = "dyadic"
    if not 0 <= args.row < args.n:
        raise UsageError(f"--row must lie in [0, {args.n - 1}]")
    data = basis_frequency_response(K, args.row, args.points)
    meta = {"kind": kind.value, "n": args.n, "row": args.row, "matrix": label}
    if not args.exact:
        meta["m"] = args.m
    return Table(["frequency", "magnitude"], [[w, a] for w, a in data], meta)


# ---------------------------------------------------------------- verify


@dataclass
class Check:
    name: str
    passed: bool
    detail: str


def _check_f8_factorization(fault: bool) -> Check:
    F = f8_m1_factors()
    gen = dyadic_matrix(TransformKind.FOURIER, 8, 1)
    display_ok = np.array_equal(F8_M1_NUMERATORS.real, gen.re) and np.array_equal(F8_M1_NUMERATORS.imag, gen.im)
    ops = count_ops(F)
    prod_ok = exact.is_equal(F.product(), exact.scale(gen.to_exact(), F.constant))
    ok = display_ok and prod_ok and (ops.additions, ops.shifts, ops.multiplications) == (26, 2, 0)
    return Check("f8-factorization", ok,
                 f"c={F.constant} additions={ops.additions} shifts={ops.shifts} multiplications={ops.multiplications}")


def _check_f8_inverse(fault: bool) -> Check:
    A = dyadic_matrix(TransformKind.FOURIER, 8, 1).to_exact()
    inv = exact.exact_inverse(A)
    sq = exact.is_equal(inv, f8_squarewave_inverse())
    d_inv = exact.exact_inverse(A * exact.conj_transpose(A))
    disp = exact.scale(exact.from_entries(F8_M1_D_INV_TIMES_16.tolist()), Fraction(1, 16))
    d_ok = exact.is_equal(d_inv, disp)
    return Check("f8-inverse", sq and d_ok, f"squarewave={sq} d_inv_display={d_ok}")


def _check_h8_inverse(fault: bool) -> Check:
    A = dyadic_matrix(TransformKind.HARTLEY, 8, 1).to_exact()
    ok = exact.is_equal(exact.exact_inverse(A), h8_squarewave_inverse())
    return Check("h8-inverse", ok, f"squarewave={ok}")


def _h16(fault: bool) -> DyadicMatrix:
    H = h16_m0_matrix()
    if not fault:
        return H
    re = H.re.copy()
    re[2, 3] = 1 - re[2, 3]
    return DyadicMatrix(H.kind, H.n, H.m, re, H.im.copy())


def _check_h16_transcription(fault: bool) -> Check:
    H = _h16(fault)
    ok = H == h16_reference_generation()
    mismatch = int(np.sum(H.re != dyadic_matrix(TransformKind.HARTLEY, 16, 0).re))
    return Check("h16-transcription", ok,
                 f"matches [cas]={ok} entries differing from [sqrt(n/2) H]_0={mismatch}")


def _check_h16_fast(fault: bool) -> Check:
    H = _h16(fault)
    rng = np.random.default_rng(16)
    ok = True
    for _ in range(8):
        x = rng.integers(-64, 65, size=16)
        y, inter = hartley_m0_fast(x, H)
        ok &= np.array_equal(y, H.re @ x)
        for L in (2, 4, 8):
            sub = x[:: 16 // L]
            ok &= np.array_equal(inter[L], dyadic_matrix(TransformKind.HARTLEY, L, 0).re @ sub)
    return Check("h16-fast", bool(ok), "embedded lengths=2,4,8")


def _check_c8(fault: bool) -> Check:
    C = dyadic_matrix(TransformKind.COSINE, 8, 0)
    G = C.re @ C.re.T
    gram_ok = np.array_equal(G, np.diag([8, 6, 4, 6, 8, 6, 4, 6]))
    s_diag, d_diag = c8_adjustments()
    S = hermitian_inverse_sqrt(gram(C.values)).entries
    D = np.linalg.inv(gram(C.values).entries)
    adj_ok = np.max(np.abs(np.diag(S) - s_diag)) < 1e-12 and np.max(np.abs(np.diag(D) - d_diag)) < 1e-12
    fac = c8_m0_factors()
    ops = count_ops(fac)
    dc_ok = bool(np.all(C.re[1:].sum(axis=1) == 0))
    ok = gram_ok and adj_ok and dc_ok and fac.constant == 1 and (ops.additions, ops.shifts, ops.multiplications) == (24, 0, 0)
    return Check("c8-adjustments", bool(ok),
                 f"gram_diagonal={gram_ok} adjustments={adj_ok} additions={ops.additions} dc_leakage_free={dc_ok}")


def _check_reconstruction(fault: bool) -> Check:
    rng = np.random.default_rng(0)
    worst = 0.0
    for mode in Mode:
        for kind in TransformKind:
            for n in (4, 8, 16, 32):
                for m in range(5):
                    p = build_pair(kind, n, m, mode)
                    v = rng.standard_normal((n, 20)) + 1j * rng.standard_normal((n, 20))
                    worst = max(worst, float(np.max(np.abs(p.reconstruct(p.apply(v)) - v))))
    return Check("reconstruction", worst < 1e-9, f"max_abs_error={worst:.3e}")


CHECKS: dict[str, Callable[[bool], Check]] = {
    "f8-factorization": _check_f8_factorization,
    "f8-inverse": _check_f8_inverse,
    "h8-inverse": _check_h8_inverse,
    "h16-transcription": _check_h16_transcription,
    "h16-fast": _check_h16_fast,
    "c8-adjustments": _check_c8,
    "reconstruction": _check_reconstruction,
}


def run_checks(names=None, fault: bool = False) -> list[Check]:
    return [CHECKS[n](fault) for n in (names or CHECKS)]


def cmd_verify(args) -> tuple[str, int]:
    results = run_checks(args.check, args.inject_fault)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in results]
    ok = all(c.passed for c in results)
    lines.append(f"{sum(c.passed for c in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", 0 if ok else 1


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _order(s: str) -> int:
    v = int(s)
    if not 0 <= v <= MAX_M:
        raise argparse.ArgumentTypeError(f"must lie in [0, {MAX_M}]")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--header", action="store_true", help="prefix output with a version line")

    selector = _Parser(add_help=False)
    selector.add_argument("--kind", choices=[k.value for k in TransformKind])
    selector.add_argument("--n", type=_positive)
    selector.add_argument("--m", type=_order)
    selector.add_argument("--mode", choices=[m.value for m in Mode])
    selector.add_argument("--exact", action="store_true", help="use the exact unitary matrix")

    p = _Parser(prog="dyadic-transforms", description="Dyadic rational approximations of sinusoidal transforms.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("matrix", parents=[selector, common], help="emit an approximation matrix")

    t = sub.add_parser("tables", parents=[common], help="regenerate a result table")
    t.add_argument("table", choices=TABLES)
    t.add_argument("--kind", choices=[k.value for k in TransformKind])
    t.add_argument("--max-n", type=_positive, default=256)
    t.add_argument("--all-n", action="store_true", help="sweep every blocklength, not only powers of two")

    v = sub.add_parser("verify", help="run exact identity checks")
    v.add_argument("--check", action="append", choices=list(CHECKS))
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.add_argument("--out", metavar="PATH")

    f = sub.add_parser("freqresp", parents=[selector, common], help="basis-row magnitude response")
    f.add_argument("--row", type=int)
    f.add_argument("--points", type=int, default=256)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_n", None) is not None and args.max_n > MAX_N:
            raise UsageError(f"--max-n must not exceed {MAX_N}")
        if getattr(args, "n", None) is not None and args.n > MAX_N:
            raise UsageError(f"--n must not exceed {MAX_N}")
        if getattr(args, "points", 2) < 2:
            raise UsageError("--points must be at least 2")
        if args.command == "verify":
            text, status = cmd_verify(args)
            emit(text, args.out)
            return status
        builder = {"matrix": cmd_matrix, "tables": cmd_tables, "freqresp": cmd_freqresp}[args.command]
        table = builder(args)
        emit(render(table, args.format, args.header), args.out)
        return 0
    except UsageError as exc:
        sys.stderr.write(f"dyadic-transforms: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
