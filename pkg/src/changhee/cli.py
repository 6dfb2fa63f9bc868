"""Command-line front end.

    changhee table  --a 1,1 --b 1,2 --q 1/2 --n-max 6
    changhee eval   zeta --s -1,0 --x 1 --q 0.5,0 --a 1 --b 1
    changhee verify theorem3

Every run prints a JSON report ``{"payload": ..., "meta": ...}``; the payload
is deterministic, wall time lives in ``meta``.  Exit status: 0 when every
asserted check passes, 1 when one fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from typing import Optional, Sequence

from .analytic import (
    AnalyticParams,
    default_eps,
    dirichlet_l,
    genfun_closed_form,
    genfun_series,
    moment_series,
    zeta_r,
)
from .characters import DirichletCharacter, load_character, quadratic_character
from .errors import QEulerError
from .exact import format_rational, parse_rational
from .qeuler import QEulerSpec, generalized_q_euler_table, q_euler_table
from .verify import SUITES, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

VALUE_FLAGS = {
    "--r", "--a", "--b", "--q", "--x", "--n-max", "--chi", "--chi-file", "--format",
    "--s", "--t", "--k", "--eps", "--f", "--n", "--k-max", "--M", "--N-max",
}
_NEGATIVE_VALUE = re.compile(r"^-[\d.]")


class InvalidInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--s -1,0`` into ``--s=-1,0`` so argparse does not see a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise InvalidInput(f"expected a comma-separated integer list, got {text!r}") from exc


def _complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise InvalidInput(f"expected 're,im', got {text!r}")


def _character(args) -> Optional[DirichletCharacter]:
    if getattr(args, "chi_file", None):
        return load_character(args.chi_file)
    spec = getattr(args, "chi", None)
    if not spec:
        return None
    kind, _, arg = spec.partition(":")
    if kind != "quadratic" or not arg:
        raise InvalidInput(f"unknown character spec {spec!r}; use quadratic:p or --chi-file")
    try:
        p = int(arg)
    except ValueError as exc:
        raise InvalidInput(f"bad modulus in {spec!r}") from exc
    return quadratic_character(p)


def _ab(args) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a, b = _int_list(args.a), _int_list(args.b)
    if args.r is not None and not (len(a) == len(b) == args.r):
        raise InvalidInput(f"--r {args.r} does not match the lengths of --a and --b")
    return a, b


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


# -- commands -----------------------------------------------------------------


def cmd_table(args) -> dict:
    a, b = _ab(args)
    q = parse_rational(args.q)
    x = parse_rational(args.x)
    chi = _character(args)
    if chi is not None:
        if x != 0:
            raise InvalidInput("--x does not apply to character-twisted numbers")
        values = generalized_q_euler_table(chi, a, b, q, args.n_max)
        params = {"a": list(a), "b": list(b), "q": format_rational(q), "chi": list(map(str, chi.values))}
    else:
        spec = QEulerSpec(a, b, q, x)
        values = list(q_euler_table(spec, args.n_max).values)
        params = spec.to_json()
    params["n_max"] = args.n_max
    return {
        "params": params,
        "results": {"values": [format_rational(v) for v in values]},
        "checks": [],
        "_rows": [(n, format_rational(v)) for n, v in enumerate(values)],
    }


def cmd_eval(args) -> dict:
    a, b = _ab(args)
    q = _complex(args.q)
    eps = args.eps if args.eps is not None else default_eps()
    params = AnalyticParams(q, a, b, eps)
    echo = {"kind": args.kind, "q": _pair(q), "a": list(a), "b": list(b), "eps": eps}
    if args.kind == "zeta":
        x = 1.0 if args.x is None else float(args.x)
        s = _complex(args.s)
        result = zeta_r(s, x, params)
        echo.update(s=_pair(s), x=x)
    elif args.kind == "l":
        chi = _character(args)
        if chi is None:
            raise InvalidInput("eval l needs --chi or --chi-file")
        s = _complex(args.s)
        result = dirichlet_l(s, chi, params)
        echo.update(s=_pair(s), chi=[str(v) for v in chi.values])
    elif args.kind == "moment":
        x = 0.0 if args.x is None else float(args.x)
        result = moment_series(args.k, x, params, _character(args))
        echo.update(k=args.k, x=x)
    else:
        x = 0.0 if args.x is None else float(args.x)
        t = _complex(args.t)
        result = genfun_series(t, params, x)
        echo.update(t=_pair(t), x=x)
        out = result.to_json()
        out["closed_form"] = _pair(genfun_closed_form(t, params, x))
        return {"params": echo, "results": out, "checks": []}
    return {"params": echo, "results": result.to_json(), "checks": []}


def cmd_verify(args) -> dict:
    overrides = {
        k: v
        for k, v in {
            "f": args.f, "n": args.n, "n_max": args.n_max, "k_max": args.k_max,
            "M": args.M, "N_max": args.N_max,
        }.items()
        if v is not None
    }
    checks = run_suite(args.suite, **overrides)
    return {
        "params": {"suite": args.suite, **overrides},
        "results": {"summary": summarize(checks)},
        "checks": [c.to_json() for c in checks],
    }


# -- parser and driver ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="changhee", description="q-Euler numbers, q-zeta and L-series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_flags(p, q_default):
        p.add_argument("--r", type=int, default=None)
        p.add_argument("--a", default="1")
        p.add_argument("--b", default="1")
        p.add_argument("--q", default=q_default)
        p.add_argument("--chi", default=None, help="quadratic:p")
        p.add_argument("--chi-file", default=None)

    t = sub.add_parser("table", help="exact table of q-Euler numbers")
    spec_flags(t, "1")
    t.add_argument("--x", default="0")
    t.add_argument("--n-max", type=int, default=10)
    t.add_argument("--format", choices=("json", "csv"), default="json")

    e = sub.add_parser("eval", help="evaluate zeta_r, L_r, the generating series or a moment")
    e.add_argument("kind", choices=("zeta", "l", "genfun", "moment"))
    spec_flags(e, None)
    e.add_argument("--s", default="0,0")
    e.add_argument("--t", default="0,0")
    e.add_argument("--k", type=int, default=1)
    e.add_argument("--x", default=None)
    e.add_argument("--eps", type=float, default=None)

    v = sub.add_parser("verify", help="run a cross-check suite")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--f", type=int, default=None)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--k-max", type=int, default=None)
    v.add_argument("--M", type=int, default=None)
    v.add_argument("--N-max", type=int, default=None)
    return parser


COMMANDS = {"table": cmd_table, "eval": cmd_eval, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    started = time.perf_counter()
    payload: dict = {"command": argv}
    fmt = "json"
    rows = None
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        fmt = getattr(args, "format", "json")
        if args.command == "eval" and args.q is None:
            raise InvalidInput("eval needs --q re,im")
        body = COMMANDS[args.command](args)
        rows = body.pop("_rows", None)
        payload.update(body)
        failed = any(c["status"] == "fail" for c in payload["checks"])
        payload["status"] = "fail" if failed else "ok"
        code = EXIT_FAIL if failed else EXIT_OK
    except (InvalidInput, QEulerError, ValueError, OSError) as exc:
        payload.update(status="invalid", error=f"{type(exc).__name__}: {exc}", checks=[])
        code = EXIT_INVALID
    report = {"payload": payload, "meta": {"wall_time_s": round(time.perf_counter() - started, 6)}}
    text = json.dumps(report, indent=2)
    if fmt == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value"])
        writer.writerows(rows)
        stdout.write(buf.getvalue())
        stderr.write(text + "\n")
    else:
        stdout.write(text + "\n")
        if code == EXIT_INVALID:
            stderr.write(payload["error"] + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
