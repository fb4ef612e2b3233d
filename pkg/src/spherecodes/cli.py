"""Command-line front end.

Exit codes: 0 success, 1 a check disagreed with ``--expect``, 2 usage error,
3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .analysis import code_params, design_strength, venkov_check
from .configurations import (
    CONFIG_MAGIC,
    FORMAT_VERSION,
    HEAVY,
    ConfigurationError,
    FormatError,
    PointConfiguration,
    available,
    construct,
    load,
    normalized_gram,
    save,
)
from .embedding import GRAM_MAGIC, embed_coords, load_gram, save_coords, save_gram
from .pipeline import summarize
from .scalars import QuadScalar
from .search import FISHER_RULE, enumerate_parameters, rows_to_csv, rows_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
REPORT_SCHEMA = "spherecodes-report/1"
HEAVY_POINTS = 2000


class UsageError(Exception):
    pass


def format_ip_set(values) -> str:
    """``{-1,+-1/2,0}`` style: antipodal value first, then by decreasing magnitude."""
    vals = set(values)
    parts = []
    if QuadScalar(-1) in vals:
        parts.append("-1")
        vals.discard(QuadScalar(-1))
    seen = set()
    for v in sorted(vals, key=lambda x: (-float(abs(x)), -float(x))):
        if v in seen:
            continue
        if v and -v in vals:
            text = str(abs(v))
            # parenthesize compound values such as -1/4+1/4*sqrt(5)
            parts.append("±" + (f"({text})" if "+" in text or "-" in text else text))
            seen.update({v, -v})
        else:
            parts.append(str(v))
            seen.add(v)
    return "{" + ",".join(parts) + "}"


def _summary_line(X: PointConfiguration) -> str:
    ips = X.row_inner_product_counts(0) if X.n_points > HEAVY_POINTS else code_params(normalized_gram(X)).ip_set
    ips = set(ips) - {QuadScalar(1)}
    return f"n={X.dim} N={X.n_points} ips={format_ip_set(ips)}"


def _projected_cost(n: int) -> str:
    return f"{n}x{n} Gram, {n * n:.3e} pair terms"


def _require_heavy(n: int, args) -> None:
    if n > HEAVY_POINTS:
        print(f"heavy input: {_projected_cost(n)}", file=sys.stderr)
        if not args.heavy:
            raise UsageError(f"{n} points exceeds {HEAVY_POINTS}; rerun with --heavy")


def _read_input(path: str):
    first = Path(path).read_text(encoding="utf-8").split("\n", 1)[0]
    if first.startswith(GRAM_MAGIC):
        return load_gram(path)
    if first.startswith(CONFIG_MAGIC):
        return load(path)
    raise FormatError(f"unrecognized file header {first!r}")


def _parse_expect(items: list[str]) -> dict[str, str]:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--expect needs key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _flatten(report: dict, prefix: str = "") -> dict[str, str]:
    flat = {}
    for k, v in report.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            flat.update(_flatten(v, key + "."))
        flat[key] = json.dumps(v) if isinstance(v, (bool, list, dict)) or v is None else str(v)
        # leaf shortcut without section prefix
        flat.setdefault(str(k), flat[key])
    return flat


# -- subcommands ---------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.name in HEAVY and not args.heavy:
        raise UsageError(f"'{args.name}' is a Leech-family construction; rerun with --heavy")
    X = construct(args.name)
    if args.out:
        save(X, args.out)
        args.outputs.append(args.out)
    print(_summary_line(X))
    return EXIT_OK


def cmd_check(args) -> int:
    obj = _read_input(args.input)
    if isinstance(obj, PointConfiguration):
        _require_heavy(obj.n_points, args)
        G = normalized_gram(obj)
    else:
        G = obj
        _require_heavy(G.n, args)
    want_all = not (args.design_strength or args.venkov or args.code_params)
    report: dict = {"schema": REPORT_SCHEMA, "input": args.input, "n": G.n, "d": G.d}
    if args.code_params or want_all:
        report["code_params"] = code_params(G).as_dict()
    if args.venkov or want_all:
        report["venkov"] = venkov_check(G).as_dict()
    if args.design_strength or want_all:
        report["design"] = design_strength(G, t_max=args.design_strength or 12).as_dict()
    print(json.dumps(report, indent=2))
    expect = _parse_expect(args.expect)
    flat = _flatten(report)
    failed = [k for k, v in expect.items() if flat.get(k) != v]
    for k in failed:
        print(f"expectation failed: {k}={expect[k]} (got {flat.get(k)})", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_embed(args) -> int:
    X = load(args.input)
    _require_heavy(X.n_points, args)
    s = summarize(X)
    out = args.out or str(Path(args.input).with_suffix(".gram"))
    save_gram(s.code.gram, out)
    args.outputs.append(out)
    if args.coords:
        save_coords(embed_coords(X), args.coords, name=f"embedded {X.name}")
        args.outputs.append(args.coords)
    print(f"{s.label()} optimal={str(s.optimal).lower()} design3={str(s.design3).lower()}")
    return EXIT_OK


def cmd_search(args) -> int:
    if args.dmax < 3:
        raise UsageError("--dmax must be at least 3")
    if args.mmax < 1:
        raise UsageError("--mmax must be at least 1")
    rows = enumerate_parameters(args.dmax, args.mmax)
    if args.format == "csv":
        text = rows_to_csv(rows)
    else:
        text = rows_to_json(rows, dmax=args.dmax, mmax=args.mmax) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
        args.outputs.append(args.out)
        print(f"{len(rows)} rows written to {args.out} ({FISHER_RULE})")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spherecodes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifest", help="write a JSON run manifest to this path")
    common.add_argument("--heavy", action="store_true", help="allow Leech-family and large inputs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a configuration")
    p.add_argument("name", help=f"one of {', '.join(available())} or section:<base>:<i,..>:<ip,..>")
    p.add_argument("-o", "--out", help="configuration file to write")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="verify a configuration or Gram file")
    p.add_argument("input")
    p.add_argument("--design-strength", type=int, metavar="T", help="test moment sums up to degree T")
    p.add_argument("--venkov", action="store_true")
    p.add_argument("--code-params", action="store_true")
    p.add_argument("--expect", action="append", metavar="KEY=VALUE", help="e.g. strength=7, design3=true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("embed", parents=[common], help="embed into Harm_2 and write the exact Gram")
    p.add_argument("input")
    p.add_argument("-o", "--out", help="Gram file (default: input with .gram suffix)")
    p.add_argument("--coords", metavar="PATH", help="also write float coordinates")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("search", parents=[common], help="enumerate admissible (d+1, 2N, l) parameters")
    p.add_argument("--dmax", type=int, default=100, help="largest d+1 (default 100)")
    p.add_argument("--mmax", type=int, default=200, help="largest m (default 200)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.outputs = []
    start = time.perf_counter()
    try:
        status = args.func(args)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, (FormatError, ConfigurationError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.manifest:
        params = {k: v for k, v in vars(args).items() if k not in {"func", "outputs", "manifest"}}
        manifest = {
            "command": args.command,
            "parameters": params,
            "outputs": args.outputs,
            "versions": {"spherecodes": __version__, "config_format": FORMAT_VERSION, "report": REPORT_SCHEMA},
            "timing": {"total_s": round(time.perf_counter() - start, 6)},
            "status": status,
        }
        Path(args.manifest).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return status


if __name__ == "__main__":
    sys.exit(main())
