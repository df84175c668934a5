"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failures.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
import warnings
from pathlib import Path
from typing import Any, Callable

from . import bounds as B
from .cache import ResultCache
from .interval import interval_count_below, interval_eigenvalue
from .optimize import optimal_sum_probe, optimize_rectangle, optimize_union, solve_transition, transition_crossing_check
from .params import BoundaryParam, DomainError, as_boundary, check_robin
from .rectangles import RectSpec, UnionSpec, rect_counting, rect_eigenvalue, union_eigenvalue
from .verify import SUITES, run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_FAILURES = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- domain specs -------------------------------------------------------------


def _kv(body: str) -> dict[str, float]:
    out = {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        key, sep, val = part.partition("=")
        if not sep:
            raise UsageError(f"expected key=value in domain spec, got {part!r}")
        try:
            out[key.strip()] = float(val)
        except ValueError:
            raise UsageError(f"non-numeric value in domain spec: {part!r}") from None
    return out


def parse_domain(text: str):
    """Parse ``interval:L=..``, ``rect:A=..,a=..``, ``square:A=..`` or ``union:A=..,a=..;A=..,a=..``."""
    kind, sep, body = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise UsageError(f"domain spec must look like kind:key=value,..., got {text!r}")
    if kind == "interval":
        kv = _kv(body)
        if "L" not in kv:
            raise UsageError("interval spec needs L=<length>")
        return ("interval", kv["L"])
    if kind in ("rect", "rectangle", "square"):
        kv = _kv(body)
        aspect = 1.0 if kind == "square" else kv.get("a", 1.0)
        return ("rect", RectSpec(kv.get("A", 1.0), aspect))
    if kind == "union":
        comps = []
        for chunk in filter(None, (c.strip() for c in body.split(";"))):
            kv = _kv(chunk)
            comps.append(RectSpec(kv.get("A", 1.0), kv.get("a", 1.0)))
        return ("union", UnionSpec(tuple(comps)))
    raise UsageError(f"unknown domain kind {kind!r}")


def _load_union(path: str) -> UnionSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return UnionSpec.from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


# -- output -------------------------------------------------------------------


def _flatten(obj: Any, prefix: str = "") -> dict[str, Any]:
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            out.update(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(obj, list):
        out = {}
        for i, v in enumerate(obj):
            out.update(_flatten(v, f"{prefix}.{i}" if prefix else str(i)))
        return out
    return {prefix: obj}


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(result: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    rows = result if isinstance(result, list) else [result]
    flat = [_flatten(r) for r in rows]
    keys: list[str] = []
    for f in flat:
        keys.extend(k for k in f if k not in keys)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys)
    for f in flat:
        w.writerow([_cell(f.get(k)) for k in keys])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------


def _alpha(args) -> BoundaryParam:
    return as_boundary(args.alpha)


def _rect_from(args) -> RectSpec:
    if args.domain:
        kind, dom = parse_domain(args.domain)
        if kind != "rect":
            raise UsageError(f"expected a rectangle spec, got {args.domain!r}")
        return dom
    return RectSpec(args.area, args.aspect)


def cmd_eig(args, cache) -> dict:
    bc = _alpha(args)
    if args.target == "interval":
        length = args.length
        if args.domain:
            kind, dom = parse_domain(args.domain)
            if kind != "interval":
                raise UsageError(f"expected an interval spec, got {args.domain!r}")
            length = dom
        if length is None:
            length = math.sqrt(args.area) * args.aspect
        tol = args.tol if args.tol is not None else 1e-12
        lam = interval_eigenvalue(length, bc, args.k, rtol=tol)
        return {"domain": "interval", "length": length, "alpha": bc.to_json(), "k": args.k, "lambda": lam}
    if args.target == "rect":
        rect = _rect_from(args)
        ev = rect_eigenvalue(rect, bc, args.k)
        return {"domain": "rect", **rect.to_json(), "alpha": bc.to_json(), "k": args.k, "lambda": ev.value, "mode": [ev.mode.i, ev.mode.j]}
    union = _union_from(args)
    ev = union_eigenvalue(union, bc, args.k)
    return {
        "domain": "union",
        "union": union.to_json(),
        "alpha": bc.to_json(),
        "k": args.k,
        "lambda": ev.value,
        "component": ev.component,
        "index": ev.index,
    }


def _union_from(args) -> UnionSpec:
    if args.spec:
        return _load_union(args.spec)
    if args.domain:
        kind, dom = parse_domain(args.domain)
        if kind == "rect":
            return UnionSpec((dom,))
        if kind != "union":
            raise UsageError(f"expected a union spec, got {args.domain!r}")
        return dom
    raise UsageError("eig union needs --spec FILE or an inline union:... spec")


def _cached(cache: ResultCache | None, op: str, params: dict, compute: Callable[[], Any], verbose: bool):
    start = time.perf_counter()
    if cache is None:
        value, hit = compute(), False
    else:
        value, hit = cache.roundtrip(op, params, compute)
    if verbose:
        state = "hit" if hit else ("miss" if cache is not None else "disabled")
        print(f"cache {state}: {op} in {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return value


def cmd_optimize(args, cache) -> dict:
    bc = _alpha(args)
    params = {"k": args.k, "A": args.area, "alpha": bc.to_json()}
    if args.target == "rect":
        if args.tol is not None:
            params["tol"] = args.tol
        rtol = args.tol if args.tol is not None else 1e-8
        compute = lambda: optimize_rectangle(args.k, args.area, bc, rtol=rtol).to_json()
        return _cached(cache, "optimize-rect", params, compute, args.verbose)
    compute = lambda: optimize_union(args.k, args.area, bc).to_json()
    return _cached(cache, "optimize-union", params, compute, args.verbose)


def cmd_transition(args, cache) -> dict:
    sol = solve_transition()
    out = sol.to_json()
    if args.k_given:
        out["crossing"] = transition_crossing_check(args.k, args.area, sol).to_json()
    return out


def cmd_count(args, cache) -> dict:
    if args.lam is None:
        raise UsageError("count needs --lambda")
    bc = _alpha(args)
    if args.domain and parse_domain(args.domain)[0] == "interval":
        length = parse_domain(args.domain)[1]
        n = interval_count_below(length, bc, args.lam)
        return {"domain": "interval", "length": length, "alpha": bc.to_json(), "lambda": args.lam, "count": n}
    rect = _rect_from(args)
    n = rect_counting(rect, bc, args.lam)
    return {
        "domain": "rect",
        **rect.to_json(),
        "alpha": bc.to_json(),
        "lambda": args.lam,
        "count": n,
        "upper_bound": B.counting_upper_bound(rect.aspect, rect.area, args.lam),
    }


def cmd_sum(args, cache) -> dict:
    bc = _alpha(args)
    params = {"k": args.k, "A": args.area, "alpha": bc.to_json(), "cap": args.k_cap}
    compute = lambda: optimal_sum_probe(args.k, args.area, bc, k_cap=args.k_cap).to_json()
    return _cached(cache, "sum", params, compute, args.verbose)


BOUND_NAMES = (
    "eig1",
    "eig1-simple",
    "eig1-series-small-a",
    "eig1-series-large-alpha",
    "eig2",
    "eig2-series-small-a",
    "eig2-series-large-alpha",
    "tan-envelope",
    "gap",
    "union-squares",
    "counting",
    "thresholds",
    "envelope",
    "optimal-union-series",
    "rectangle",
)


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"this bound needs {flag}")
    return value


def cmd_bounds(args, cache) -> dict:
    name = args.name
    length = args.length if args.length is not None else math.sqrt(args.area) * args.aspect
    alpha = lambda: check_robin(args.alpha)
    if name == "eig1":
        b = B.eig1_bounds(length, alpha())
        return {"bound": name, "a": length, "alpha": alpha(), "lower": b.lower, "upper": b.upper}
    if name == "eig1-simple":
        return {"bound": name, "a": length, "alpha": alpha(), "upper": B.eig1_upper_simple(length, alpha())}
    if name == "eig2":
        b = B.eig2_bounds(length, alpha())
        return {"bound": name, "a": length, "alpha": alpha(), "lower": b.lower, "upper": b.upper}
    series = {
        "eig1-series-small-a": B.eig1_series_small_a,
        "eig1-series-large-alpha": B.eig1_series_large_alpha,
        "eig2-series-small-a": B.eig2_series_small_a,
        "eig2-series-large-alpha": B.eig2_series_large_alpha,
    }
    if name in series:
        fn = series[name]
        s = fn(length, alpha()) if args.order is None else fn(length, alpha(), args.order)
        return {"bound": name, "a": length, "alpha": alpha(), "value": s.value, "order": s.order, "truncation_power": s.truncation_power}
    if name == "tan-envelope":
        x = _need(args.x, "--x")
        b = B.tan_envelope(x)
        return {"bound": name, "x": x, "lower": b.lower, "upper": b.upper}
    if name == "gap":
        return {"bound": name, "D": length, "lower": B.gap_lower_bound(length)}
    if name == "union-squares":
        b = B.union_squares_bounds(args.k, args.area, alpha())
        return {"bound": name, "k": args.k, "A": args.area, "alpha": alpha(), "lower": b.lower, "upper": b.upper}
    if name == "counting":
        lam = _need(args.lam, "--lambda")
        return {"bound": name, "a": args.aspect, "A": args.area, "lambda": lam, "upper": B.counting_upper_bound(args.aspect, args.area, lam)}
    if name == "thresholds":
        return {"bound": name, "k": args.k, "A": args.area, **B.thresholds(args.k, args.area)._asdict()}
    if name == "envelope":
        up, lo = B.envelope_constants(args.dim)
        return {"bound": name, "d": args.dim, "upper_regime": up, "lower_regime": lo}
    if name == "optimal-union-series":
        s = B.optimal_union_series(args.k, args.area, alpha(), 5 if args.order is None else args.order)
        return {"bound": name, "k": args.k, "A": args.area, "alpha": alpha(), "value": s.value, "order": s.order}
    if name == "rectangle":
        b = B.rectangle_value_bounds(args.k, args.area, alpha())
        return {"bound": name, "k": args.k, "A": args.area, "alpha": alpha(), "lower": b.lower, "upper": b.upper}
    raise UsageError(f"unknown bound {name!r}")


# -- parser -------------------------------------------------------------------


def _int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    return v


_DEFAULTS = {
    "area": 1.0,
    "alpha": "1",
    "k": 1,
    "aspect": 1.0,
    "length": None,
    "lam": None,
    "tol": None,
    "format": "json",
    "out": None,
    "seed": 0,
    "cache_dir": None,
    "no_cache": False,
    "spec": None,
    "verbose": False,
}


def _common() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; defaults are applied after parsing so
    they may appear before or after the subcommand name."""
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    g = p.add_argument_group("common options")
    g.add_argument("-A", "--area", type=float, help="total area (default 1)")
    g.add_argument("--alpha", help="Robin coefficient, or 'dirichlet' (default 1)")
    g.add_argument("--k", type=_int, help="eigenvalue index (default 1)")
    g.add_argument("--aspect", type=float, help="rectangle aspect a >= 1 (default 1)")
    g.add_argument("--length", type=float, help="interval length (default sqrt(A)*aspect)")
    g.add_argument("--lambda", dest="lam", type=float, help="spectral level for counting")
    g.add_argument("--tol", type=float, help="solver tolerance")
    g.add_argument("--format", choices=("json", "csv"), help="output format (default json)")
    g.add_argument("--out", help="output path (default stdout)")
    g.add_argument("--seed", type=int, help="random seed for suites (default 0)")
    g.add_argument("--cache-dir", help="cache directory (default $ROBIN_SPECTRA_CACHE or ~/.cache/robin-spectra)")
    g.add_argument("--no-cache", action="store_true")
    g.add_argument("--spec", help="union JSON file {'components': [{'area':..,'aspect':..}, ...]}")
    g.add_argument("--verbose", "-v", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(
        prog="robin-spectra",
        description="Robin eigenvalues of intervals, rectangles and unions of rectangles.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eig", parents=[common], help="eigenvalue of a domain")
    p.add_argument("target", choices=("interval", "rect", "union"))
    p.add_argument("domain", nargs="?", help="inline spec, e.g. rect:A=1,a=2")
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("optimize", parents=[common], help="minimise lambda_k over rectangles or unions")
    p.add_argument("target", choices=("rect", "union"))
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("transition", parents=[common], help="solve the three-to-one transition system")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("count", parents=[common], help="exact eigenvalue counting function")
    p.add_argument("domain", nargs="?", help="inline spec, e.g. rect:A=1,a=2 or interval:L=1")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sum", parents=[common], help="sums of optimal eigenvalues")
    p.add_argument("--k-cap", type=int, default=50, help="largest k for which optima are summed")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=tuple(SUITES))
    p.add_argument("--config", default=None, help="JSON object (or file) overriding suite defaults")
    p.set_defaults(func=None)

    p = sub.add_parser("bounds", parents=[common], help="evaluate a closed-form bound")
    p.add_argument("name", choices=BOUND_NAMES)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(func=cmd_bounds)
    return parser


def _suite_config(text: str | None) -> dict:
    if not text:
        return {}
    try:
        src = Path(text).read_text(encoding="utf-8") if Path(text).is_file() else text
        cfg = json.loads(src)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--config must be a JSON object or file: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("--config must be a JSON object")
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.k_given = hasattr(args, "k")
        for name, value in _DEFAULTS.items():
            if not hasattr(args, name):
                setattr(args, name, value)
        if args.k < 1:
            raise UsageError(f"--k must be >= 1, got {args.k}")
        cache = None if args.no_cache else ResultCache(args.cache_dir)
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            if args.command == "verify":
                report = run_suite(args.suite, _suite_config(args.config), seed=args.seed)
                if args.verbose:
                    print(f"{args.suite}: {report.n_pass} passed, {report.n_fail} failed in {report.wall_time:.2f}s", file=sys.stderr)
                text = report.to_csv() if args.format == "csv" else json.dumps(report.to_json(), indent=2) + "\n"
                _emit(text, args.out)
                return EXIT_OK if report.ok else EXIT_FAILURES
            result = args.func(args, cache)
        _emit(render(result, args.format), args.out)
        return EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
