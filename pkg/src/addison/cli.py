"""Command-line front end: ``addison <eval|constant|verify|table>``.

Exit codes: 0 success (consistent rows, all checks passed), 1 numeric failure
(inconsistent rows, truncation, failed checks), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field

from .quad import DEFAULT
from .result import DomainError, Eval, PrecisionError, TruncationError

ENV_TOL = "ADDISON_TOL"
DIGITS = 15
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def num(x: float) -> float:
    """Round to 15 significant digits, so that printed and parsed values coincide."""
    x = float(x)
    return float(f"{x:.{DIGITS}g}") if math.isfinite(x) else x


def _fmt(x) -> str:
    if isinstance(x, int):
        return str(x)
    return f"{float(x):.{DIGITS}g}"


# ------------------------------------------------------------------ report

@dataclass
class Row:
    method: str
    value: float
    err_est: float
    work: int
    runtime_ms: float

    @classmethod
    def from_eval(cls, method: str, e: Eval, seconds: float) -> "Row":
        return cls(method, num(e.value), num(e.err_est), int(e.work), round(1000.0 * seconds, 3))


def verdict(rows, partial: bool = False) -> str:
    """consistent iff every pair satisfies |vi - vj| <= ei + ej."""
    if partial:
        return "partial"
    for a, b in itertools.combinations(rows, 2):
        if not abs(a.value - b.value) <= a.err_est + b.err_est:
            return "inconsistent"
    return "consistent"


@dataclass
class Report:
    target: str
    rows: list
    verdict: str
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"target": self.target, "rows": [r.__dict__ if hasattr(r, "__dict__") else r for r in self.rows],
             "verdict": self.verdict}
        d.update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        rows = [Row(**r) if set(r) == set(Row.__dataclass_fields__) else r for r in d.pop("rows")]
        target, v = d.pop("target"), d.pop("verdict")
        return cls(target, rows, v, d)


def _rows_as_dicts(rows):
    return [r.__dict__ if isinstance(r, Row) else r for r in rows]


def render(report: Report, fmt: str, columns=None) -> str:
    rows = _rows_as_dicts(report.rows)
    columns = columns or (list(rows[0]) if rows else list(Row.__dataclass_fields__))
    if fmt == "json":
        return report.to_json() + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(r[c]) if isinstance(r[c], (int, float)) and not isinstance(r[c], bool)
                        else r[c] for c in columns])
        return buf.getvalue()
    table = [columns] + [[_fmt(r[c]) if isinstance(r[c], (int, float)) and not isinstance(r[c], bool)
                          else str(r[c]) for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    out = [f"target: {report.target}"]
    out += ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in table]
    for k, v in report.extra.items():
        out.append(f"{k}: {_fmt(v) if isinstance(v, float) else v}")
    out.append(f"verdict: {report.verdict}")
    return "\n".join(out) + "\n"


# -------------------------------------------------------------- tolerance

def resolve_tol(flag: float | None, default: float | None) -> float | None:
    """--tol flag, then the ADDISON_TOL environment variable, then ``default``."""
    if flag is not None:
        tol = flag
    elif os.environ.get(ENV_TOL, "").strip():
        try:
            tol = float(os.environ[ENV_TOL])
        except ValueError:
            raise UsageError(f"{ENV_TOL} must be a number, got {os.environ[ENV_TOL]!r}") from None
    else:
        return default
    if not (tol > 0 and math.isfinite(tol)):
        raise UsageError(f"tolerance must be positive, got {tol!r}")
    return tol


def _spec(tol):
    return DEFAULT if tol is None else DEFAULT.with_tol(tol)


# ------------------------------------------------------------------- eval

@dataclass(frozen=True)
class Function:
    params: tuple
    call: object
    methods: tuple = ()
    defaults: dict = field(default_factory=dict)
    ints: tuple = ()


def _functions() -> dict:
    from . import clausen, constants, kinkelin, lerch, negazeta, refine, zetafun
    F = Function
    return {
        "lerch": F(("z", "s", "a"), lambda p, m, sp: lerch.lerch_phi(p["z"], p["s"], p["a"], sp)),
        "lerch_series": F(("z", "s", "a"), lambda p, m, sp: lerch.lerch_series_oracle(p["z"], p["s"], p["a"])),
        "polylog": F(("s", "z"), lambda p, m, sp: lerch.polylog(p["s"], p["z"], sp)),
        "hurwitz": F(("s", "a"), lambda p, m, sp: zetafun.hurwitz(p["s"], p["a"], sp)),
        "zeta": F(("s",), lambda p, m, sp: zetafun.zeta(p["s"], sp)),
        "zeta_deriv": F(("n", "s"), lambda p, m, sp: zetafun.zeta_nderiv(p["n"], p["s"], sp), ints=("n",)),
        "hurwitz_sderiv": F(("s", "a"), lambda p, m, sp: zetafun.hurwitz_sderiv(p["s"], p["a"], sp)),
        "stieltjes": F(("n", "a"), lambda p, m, sp: zetafun.stieltjes(p["n"], p["a"], sp),
                       defaults={"a": 1.0}, ints=("n",)),
        "digamma": F(("a",), lambda p, m, sp: zetafun.digamma(p["a"], sp)),
        "clausen": F(("n", "theta"), lambda p, m, sp: clausen.clausen(p["n"], p["theta"], sp), ints=("n",)),
        "dirichlet_L4": F(("s",), lambda p, m, sp: clausen.dirichlet_L4(p["s"], m, sp),
                          ("hurwitz_combo", "addison")),
        "zeta_prime_addison": F(("s", "k"), lambda p, m, sp: refine.zeta_prime_addison(p["s"], p["k"]),
                                defaults={"k": 2}, ints=("k",)),
        "hurwitz_prime_addison": F(("s", "a", "k"), lambda p, m, sp: refine.hurwitz_prime_addison(
            p["s"], p["a"], refine.RefineParams(k=p["k"])), defaults={"k": 2}, ints=("k",)),
        "loggamma_addison": F(("z",), lambda p, m, sp: refine.loggamma_addison(p["z"])),
        "L4_addison": F(("s",), lambda p, m, sp: refine.L4_addison(p["s"])),
        "somos": F(("t",), lambda p, m, sp: constants.somos_ln(p["t"], m, sp), constants.SOMOS_METHODS),
        "euler_sum": F(("s", "a"), lambda p, m, sp: constants.euler_sum_H(p["s"], p["a"], sp)),
        "hyperfactorial": F(("x",), lambda p, m, sp: constants.hyperfactorial(p["x"], sp)),
        "kinkelin": F((), lambda p, m, sp: kinkelin.kinkelin(m, sp), kinkelin.KINKELIN_METHODS),
        "gamma_moment_x": F((), lambda p, m, sp: kinkelin.gamma_moment_x(m, spec=sp),
                            kinkelin.MOMENT_X_METHODS),
        "gamma_moment_sin": F(("alpha",), lambda p, m, sp: kinkelin.gamma_moment_sin(p["alpha"], m, spec=sp),
                              kinkelin.MOMENT_SIN_METHODS, defaults={"alpha": 1.0}),
        "a_k": F(("k", "q"), lambda p, m, sp: negazeta.a_k(p["k"], p["q"], m, spec=sp),
                 negazeta.AK_METHODS, ints=("k",)),
    }


def _parse_params(fn: Function, extra: list) -> dict:
    """Turn ``--name value`` pairs into floats (ints where the function needs them)."""
    vals = dict(fn.defaults)
    it = iter(extra)
    for tok in it:
        if not tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}")
        name, _, text = tok[2:].partition("=")
        if not text:
            text = next(it, None)
            if text is None:
                raise UsageError(f"--{name} needs a value")
        if name not in fn.params:
            raise UsageError(f"unknown parameter --{name}; expected {', '.join('--' + p for p in fn.params)}")
        try:
            v = float(text)
        except ValueError:
            raise UsageError(f"--{name} must be a number, got {text!r}") from None
        if name in fn.ints:
            if v != int(v):
                raise UsageError(f"--{name} must be an integer")
            v = int(v)
        vals[name] = v
    missing = [p for p in fn.params if p not in vals]
    if missing:
        raise UsageError(f"missing {', '.join('--' + p for p in missing)}")
    return vals


def _timed(fn):
    """(Eval, seconds, partial flag); a truncation failure yields its partial value."""
    start = time.perf_counter()
    try:
        e = fn()
        partial = False
    except (TruncationError, PrecisionError) as exc:
        print(f"addison: numeric failure: {exc}", file=sys.stderr)
        e = getattr(exc, "partial", None) or Eval(math.nan, math.inf)
        partial = True
    return e, time.perf_counter() - start, partial


def cmd_eval(args, extra) -> tuple[Report, int]:
    funcs = _functions()
    if args.function not in funcs:
        raise UsageError(f"unknown function {args.function!r}; choose from {', '.join(funcs)}")
    fn = funcs[args.function]
    params = _parse_params(fn, extra)
    method = args.method or (fn.methods[0] if fn.methods else None)
    if fn.methods and method not in fn.methods:
        raise UsageError(f"unknown method {method!r}; choose from {', '.join(fn.methods)}")
    if not fn.methods and args.method:
        raise UsageError(f"{args.function} has a single method")
    spec = _spec(resolve_tol(args.tol, None))
    e, secs, partial = _timed(lambda: fn.call(params, method, spec))
    label = method or args.function
    arglist = ",".join(f"{k}={_fmt(v)}" for k, v in params.items() if k in fn.params)
    report = Report(f"{args.function}({arglist})", [Row.from_eval(label, e, secs)], verdict([], partial))
    return report, 1 if partial else 0


# --------------------------------------------------------------- constant

def cmd_constant(args, extra) -> tuple[Report, int]:
    from .constants import registry
    if extra:
        raise UsageError(f"unexpected arguments {' '.join(extra)}")
    reg = registry()
    if args.name not in reg:
        raise UsageError(f"unknown constant {args.name!r}; choose from {', '.join(reg)}")
    rec = reg[args.name]
    methods = list(rec.methods) if args.method == "all" else [args.method]
    for m in methods:
        if m not in rec.methods:
            raise UsageError(f"{rec.name} has no method {m!r}; choose from all, {', '.join(rec.methods)}")
    spec = _spec(resolve_tol(args.tol, None))
    rows, partial = [], False
    for m in methods:
        e, secs, p = _timed(lambda m=m: rec.evaluate(m, spec))
        partial |= p
        rows.append(Row.from_eval(m, e, secs))
    extra_fields = {}
    if rec.log_valued:
        # the rows hold the logarithm; report the constant itself as well
        extra_fields["exp_value"] = num(math.exp(rows[0].value))
    report = Report(rec.name, rows, verdict(rows, partial), extra_fields)
    return report, 0 if report.verdict == "consistent" else 1


# ------------------------------------------------------------------ table

def _table_oracle(family: str, s):
    from .clausen import dirichlet_L4
    from .zetafun import EULER_GAMMA, LOG_2PI, zeta_nderiv
    if family == "gamma_addison":
        return EULER_GAMMA
    if family == "zeta_prime":
        return zeta_nderiv(1, 2.0 if s is None else s).value
    if family == "L4":
        return dirichlet_L4(1.0 if s is None else s).value
    return 0.5 * LOG_2PI


def cmd_table(args, extra) -> tuple[Report, int]:
    from .refine import TABLE_FAMILIES, addison_partials
    if extra:
        raise UsageError(f"unexpected arguments {' '.join(extra)}")
    if args.series not in TABLE_FAMILIES:
        raise UsageError(f"unknown series {args.series!r}; choose from {', '.join(TABLE_FAMILIES)}")
    if args.nmax < 1:
        raise UsageError("--nmax must be positive")
    values = addison_partials(args.series, args.nmax, args.k, args.s)
    oracle = _table_oracle(args.series, args.s)
    rows = [{"depth": d, "value": num(v), "residual": num(abs(v - oracle))}
            for d, v in enumerate(values, start=1)]
    res = [r["residual"] for r in rows]
    shrinking = all(b < a for a, b in zip(res, res[1:]))
    label = args.series if args.series == "gamma_addison" else f"{args.series}(k={args.k})"
    report = Report(label, rows, "consistent" if shrinking else "inconsistent")
    return report, 0 if shrinking else 1


# ----------------------------------------------------------------- verify

def cmd_verify(args, extra) -> tuple[Report, int]:
    from .variants import write_deviations
    from .verify import run_suite
    if extra:
        raise UsageError(f"unexpected arguments {' '.join(extra)}")
    tol = resolve_tol(args.tol, None)
    live = args.format == "text"

    def show(r):
        if live:
            print(r.line(), flush=True)

    results = run_suite(args.suite, tol, on_result=show)
    write_deviations(args.deviations)
    rows = [{"check": r.name, "suite": r.suite, "residual": num(r.residual), "tol": num(r.tol),
             "passed": r.passed, "runtime_ms": round(1000.0 * r.seconds, 3)} for r in results]
    ok = all(r.passed for r in results)
    failed = sum(not r.passed for r in results)
    report = Report(f"verify:{args.suite}", rows, "consistent" if ok else "inconsistent",
                    {"passed": len(results) - failed, "failed": failed, "deviations": args.deviations})
    return report, 0 if ok else 1


# ------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="addison", description=__doc__.splitlines()[0], allow_abbrev=False)
    # no abbreviations: eval parameters such as --t must not resolve to --tol
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--tol", type=float, default=None,
                        help=f"tolerance (overrides {ENV_TOL})")
        sp.add_argument("--format", choices=FORMATS, default="text")

    e = sub.add_parser("eval", allow_abbrev=False, help="evaluate one function; parameters as --name value")
    e.add_argument("function")
    e.add_argument("--method", default=None)
    common(e)

    c = sub.add_parser("constant", allow_abbrev=False, help="a constant by one or all of its routes")
    c.add_argument("name")
    c.add_argument("--method", default="all")
    common(c)

    v = sub.add_parser("verify", allow_abbrev=False, help="run an invariant suite and write deviations.md")
    v.add_argument("--suite", choices=("core", "appendix_a", "appendix_b", "all"), default="all")
    v.add_argument("--deviations", default="deviations.md", help="output path of the deviations report")
    common(v)

    t = sub.add_parser("table", allow_abbrev=False, help="convergence table of a truncated Addison-type series")
    t.add_argument("series")
    t.add_argument("--k", type=int, default=2)
    t.add_argument("--nmax", type=int, default=20)
    t.add_argument("--s", type=float, default=None)
    common(t)
    return p


COMMANDS = {"eval": cmd_eval, "constant": cmd_constant, "table": cmd_table, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if extra and args.command != "eval":
        parser.print_usage(sys.stderr)
        print(f"addison: error: unrecognized arguments: {' '.join(extra)}", file=sys.stderr)
        return 2
    try:
        report, code = COMMANDS[args.command](args, extra)
    except (UsageError, DomainError) as exc:
        print(f"addison: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"addison: numeric failure: {exc}", file=sys.stderr)
        return 1
    if args.command == "table" and args.format == "csv":
        sys.stdout.write(render(report, "csv", ["depth", "value", "residual"]))
    elif args.command == "verify" and args.format == "text":
        print(f"{report.extra['passed']} passed, {report.extra['failed']} failed; "
              f"deviations written to {report.extra['deviations']}")
    else:
        sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
