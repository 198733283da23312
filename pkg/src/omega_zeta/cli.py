"""Command-line front-end.

Subcommands: zeta, phi, gamma-pfd, zeta3, converge, verify.  Output is
JSON by default (one record per line) with the converge table in CSV.
Exit codes: 0 success, 2 divergence detected, 3 domain/parse error,
4 internal numerical-residue failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .accel import AccelerationMethod, sum_alternating
from .errors import (
    DegenerateNodesError,
    DivergenceError,
    DomainError,
    PoleError,
    ResidueError,
    SignPatternError,
)
from .gamma_pfd import gamma_pair, gamma_pfd_series
from .oracle import PrecisionConfig, zeta_oracle
from .unity_product import ExpZetaSeries, GammaProduct, TruncatedProduct, unity_gamma_product
from .verify import SUITE_NAMES, run_suite
from .zeta3 import Zeta3Variant, zeta3_series
from .zeta_series import zeta_term, zeta_via_series

EXIT_OK = 0
EXIT_DIVERGENCE = 2
EXIT_DOMAIN = 3
EXIT_RESIDUE = 4

_METHODS = {"none": AccelerationMethod.NO_ACCELERATION,
            "euler": AccelerationMethod.EULER_TRANSFORM,
            "cvz": AccelerationMethod.CHEBYSHEV_ALTERNATING}


def _parse_complex(text: str) -> complex:
    try:
        re_part, im_part = text.split(",")
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise DomainError(f"cannot parse complex value {text!r}; use 're,im'")


def _thread_count(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("OMEGA_ZETA_THREADS")
    if env and env.isdigit():
        return max(1, int(env))
    return 1


def _map_ordered(func, items, threads: int):
    if threads <= 1:
        return [func(i) for i in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def _record(command: str, inputs: dict, value: complex, est: float,
            terms: int, method: str, started: float, **extras) -> dict:
    rec = {
        "command": command,
        "inputs": inputs,
        "value_re": complex(value).real,
        "value_im": complex(value).imag,
        "abs_error_estimate": est,
        "terms_used": terms,
        "method": method,
    }
    rec.update(extras)
    rec["elapsed_ms"] = (time.perf_counter() - started) * 1000.0
    return rec


def _emit(records, fmt: str):
    if fmt == "json":
        for rec in records:
            print(json.dumps(rec))
    elif fmt == "csv":
        keys = list(records[0].keys())
        flat_keys = [k for k in keys if k != "inputs"]
        print(",".join(flat_keys))
        for rec in records:
            print(",".join(repr(rec[k]) if isinstance(rec[k], float)
                           else str(rec[k]) for k in flat_keys))
    else:
        for rec in records:
            pieces = [f"{rec['command']}"]
            for k, v in rec["inputs"].items():
                pieces.append(f"{k}={v}")
            pieces.append(f"value={rec['value_re']!r}"
                          + (f"+{rec['value_im']!r}i" if rec["value_im"] else ""))
            pieces.append(f"error_estimate={rec['abs_error_estimate']:.3g}")
            pieces.append(f"terms={rec['terms_used']}")
            pieces.append(f"method={rec['method']}")
            print("  ".join(pieces))


def _cmd_zeta(args) -> int:
    started = time.perf_counter()
    if args.m < 2:
        raise DomainError(f"zeta argument must be >= 2, got {args.m}")
    threads = _thread_count(args)
    traces = _map_ordered(lambda n: zeta_term(args.m, n),
                          range(1, args.terms + 1), threads)
    rep = sum_alternating([t.value for t in traces], _METHODS[args.method])
    rec = _record("zeta", {"m": args.m, "terms": args.terms},
                  rep.value, rep.error_estimate, rep.terms_used,
                  args.method, started)
    _emit([rec], args.format)
    return EXIT_OK


_ROUTES = {
    "product": ("product", lambda: TruncatedProduct(1000)),
    "gamma": ("gamma", lambda: GammaProduct()),
    "expzeta": ("expzeta", lambda: ExpZetaSeries()),
}


def _cmd_phi(args) -> int:
    started = time.perf_counter()
    z = _parse_complex(args.z)
    names = list(_ROUTES) if args.route == "all" else [args.route]
    records = []
    values = []
    for name in names:
        value = unity_gamma_product(args.m, z, _ROUTES[name][1]())
        values.append(value)
        records.append(_record("phi", {"m": args.m, "z": args.z, "route": name},
                               value, 0.0, 1, name, started))
    if len(values) > 1:
        scale = max(abs(v) for v in values)
        disagreement = max(abs(a - b) for a in values for b in values) / scale
        records.append(_record("phi-disagreement",
                               {"m": args.m, "z": args.z},
                               disagreement, 0.0, len(values), "all", started))
    _emit(records, args.format)
    return EXIT_OK


def _cmd_gamma_pfd(args) -> int:
    started = time.perf_counter()
    z = _parse_complex(args.z)
    rep = gamma_pfd_series(args.a, z, args.terms, _METHODS[args.method])
    ref = gamma_pair(args.a, z)
    deviation = abs(complex(rep.value) - ref)
    rec = _record("gamma-pfd",
                  {"a": args.a, "z": args.z, "terms": args.terms},
                  rep.value, rep.error_estimate, rep.terms_used, args.method,
                  started, reference_re=ref.real, reference_im=ref.imag,
                  deviation=deviation)
    _emit([rec], args.format)
    return EXIT_OK


def _cmd_zeta3(args) -> int:
    started = time.perf_counter()
    variant = Zeta3Variant(args.variant)
    config = PrecisionConfig(max_terms=args.terms, method=args.method)
    rep = zeta3_series(variant, config)
    rec = _record("zeta3", {"variant": args.variant, "terms": args.terms},
                  rep.value, rep.error_estimate, rep.terms_used, args.method,
                  started)
    _emit([rec], args.format)
    return EXIT_OK


def _cmd_converge(args) -> int:
    if args.m < 2:
        raise DomainError(f"zeta argument must be >= 2, got {args.m}")
    threads = _thread_count(args)
    traces = _map_ordered(lambda n: zeta_term(args.m, n),
                          range(1, args.max_terms + 1), threads)
    terms = [t.value for t in traces]
    ref = zeta_oracle(args.m)
    print("n,term,partial_sum,accelerated,abs_error_vs_oracle")
    partial = 0.0
    for i, t in enumerate(terms, start=1):
        partial += t
        accel = sum_alternating(terms[:i], _METHODS[args.method]).value
        print(f"{i},{t!r},{partial!r},{accel!r},{abs(accel - ref)!r}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, args.tolerance)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.suite}: {r.name}"
        if not r.passed and r.detail:
            line += f" ({r.detail})"
        print(line)
        failed += not r.passed
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omega-zeta",
        description="Zeta values from gamma products at roots of unity.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, default_format="json"):
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default=default_format)
        p.add_argument("--threads", type=int, default=None,
                       help="parallel term evaluation (default 1 or "
                            "OMEGA_ZETA_THREADS)")

    p = sub.add_parser("zeta", help="evaluate the series for zeta(m)")
    p.add_argument("m", type=int)
    p.add_argument("--terms", type=int, default=64)
    p.add_argument("--method", choices=tuple(_METHODS), default="cvz")
    common(p)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("phi", help="evaluate the root-of-unity gamma product")
    p.add_argument("m", type=int)
    p.add_argument("--z", required=True, metavar="RE,IM")
    p.add_argument("--route", choices=("product", "gamma", "expzeta", "all"),
                   default="gamma")
    common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("gamma-pfd",
                       help="partial-fraction series for Gamma(a+z)Gamma(a-z)")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--z", required=True, metavar="RE,IM")
    p.add_argument("--terms", type=int, default=64)
    p.add_argument("--method", choices=tuple(_METHODS), default="euler")
    common(p)
    p.set_defaults(func=_cmd_gamma_pfd)

    p = sub.add_parser("zeta3", help="alternative series for zeta(3)")
    p.add_argument("--variant", choices=[v.value for v in Zeta3Variant],
                   default="hyperbolic")
    p.add_argument("--terms", type=int, default=40)
    p.add_argument("--method", choices=tuple(_METHODS), default="cvz")
    common(p)
    p.set_defaults(func=_cmd_zeta3)

    p = sub.add_parser("converge", help="per-term convergence table (CSV)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-terms", type=int, default=64)
    p.add_argument("--method", choices=tuple(_METHODS), default="cvz")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    except (DomainError, PoleError, DegenerateNodesError, OverflowError,
            SignPatternError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResidueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESIDUE


if __name__ == "__main__":
    sys.exit(main())
