"""Command-line interface: ``tricensus {gen,census,min-c4,verify,convert}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import generate, verify
from .census import census
from .embed import Triangulation
from .errors import FormatError, LimitExceeded, UnknownPredicateField
from .io import decode_planar_code, encode_graph6, encode_planar_code

CONFIG_KEYS = {"max_n": int, "class_budget": int, "threads": int}


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    cfg = json.loads(Path(path).read_text())
    unknown = set(cfg) - set(CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return {k: CONFIG_KEYS[k](v) for k, v in cfg.items()}


def _settings(args: argparse.Namespace) -> dict:
    cfg = {"max_n": generate.DEFAULT_MAX_N, "class_budget": generate.DEFAULT_CLASS_BUDGET, "threads": 1}
    cfg.update(_load_config(getattr(args, "config", None)))
    if getattr(args, "limit", None) is not None:
        cfg["max_n"] = args.limit
    if getattr(args, "threads", None) is not None:
        cfg["threads"] = args.threads
    if cfg["threads"] < 1:
        raise ValueError("--threads must be at least 1")
    return cfg


def _read(path: str) -> bytes:
    return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()


def _write(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _dump(obj) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True) + "\n").encode()


def _format(graphs: list[Triangulation], fmt: str, header: bool = False) -> bytes:
    if fmt == "planar_code":
        return encode_planar_code(graphs, with_header=header)
    if fmt == "graph6":
        return "".join(encode_graph6(T) + "\n" for T in graphs).encode()
    if fmt == "canonical":
        return "".join(T.code.hex() + "\n" for T in graphs).encode()
    raise ValueError(fmt)


def cmd_gen(args, cfg) -> int:
    cat = verify.Catalog(max_n=cfg["max_n"], threads=cfg["threads"])
    pred = {}
    if args.min_degree is not None:
        pred["min_degree"] = args.min_degree
    if args.connectivity is not None:
        pred["connectivity"] = args.connectivity
    if pred:
        codes = verify.filter_triangulations(args.n, cat, **pred)
    else:
        codes = cat.codes(args.n)
    graphs = [Triangulation.from_code(c) for c in codes]
    _write(args.output, _format(graphs, args.format, args.header) if graphs else b"")
    return 0


def cmd_census(args, cfg) -> int:
    graphs = decode_planar_code(_read(args.input))
    rows = [census(T) for T in graphs]
    if args.json:
        objs = []
        for i, (T, c) in enumerate(zip(graphs, rows)):
            d = c.as_dict()
            if not args.per_vertex:
                d.pop("per_vertex_c4")
            d["index"] = i
            d["code"] = T.code.hex()
            objs.append(d)
        _write(None, _dump(objs))
        return 0
    lines = [f"{'#':>6} {'n':>3} {'c3':>5} {'c4':>5} {'diamond':>7} {'separating':>10}"]
    for i, c in enumerate(rows):
        line = f"{i:>6} {c.n:>3} {c.c3:>5} {c.c4:>5} {c.c4_diamond:>7} {c.c4_separating:>10}"
        if args.per_vertex:
            line += "  " + " ".join(str(x) for x in c.per_vertex_c4)
        lines.append(line)
    _write(None, ("\n".join(lines) + "\n").encode())
    return 0


def cmd_min_c4(args, cfg) -> int:
    cat = verify.Catalog(max_n=cfg["max_n"], threads=cfg["threads"])
    rec = verify.min_c4(args.n, cat)
    mins = [
        {"code": c.hex(), "planar_code": encode_planar_code([Triangulation.from_code(c)]).hex()}
        for c in rec.minimizer_codes
    ]
    if args.json:
        _write(
            None,
            _dump(
                {
                    "n": rec.n,
                    "g_value": rec.g_value,
                    "minimizer_count": rec.minimizer_count,
                    "catalog_size": len(cat.codes(args.n)),
                    "minimizers": mins,
                }
            ),
        )
    else:
        out = [f"g({rec.n}, C4) = {rec.g_value}  minimizers: {rec.minimizer_count}"]
        out += [f"  {m['code']}" for m in mins]
        _write(None, ("\n".join(out) + "\n").encode())
    return 0


def _reports(which: str, max_n: int, cat: verify.Catalog, cfg) -> list[verify.VerificationReport]:
    if which == "theorem1":
        return [verify.verify_theorem1(max_n, cat)]
    if which == "lemmas":
        return [verify.verify_lemma(k, max_n, cat) for k in (1, 2, 3) if max_n >= (4, 6, 7)[k - 1]]
    if which == "identities":
        return [verify.verify_degree_identities(n, cat) for n in (9, 10, 11) if n <= max_n]
    if which == "claims":
        return [
            *verify.verify_structural_claims(max_n, cat),
            verify.verify_bounds(max_n, cat),
            verify.verify_recursion(max_n, cat),
            verify.verify_minimizers(max_n, cat),
        ]
    if which == "oracle":
        return [
            verify.verify_generator_oracle(
                max_n, cat, threads=cfg["threads"], budget=cfg["class_budget"]
            ),
            verify.verify_counting_oracle(max_n, cat),
        ]
    raise ValueError(which)


def cmd_verify(args, cfg) -> int:
    cat = verify.Catalog(max_n=cfg["max_n"], threads=cfg["threads"])
    generate._check_n(args.max_n, cfg["max_n"])
    reports = _reports(args.claim, args.max_n, cat, cfg)
    if args.json:
        _write(None, _dump([r.as_dict() for r in reports]))
    else:
        lines = []
        for r in reports:
            lo, hi = r.n_range
            lines.append(f"{r.status.upper():4}  {r.claim_id:<20} n={lo}..{hi}  counterexamples={len(r.counterexamples)}")
            if r.claim_id == "theorem1":
                lines.append("      g = " + ", ".join(f"{n}:{s['g']}" for n, s in sorted(r.statistics.items())))
        _write(None, ("\n".join(lines) + "\n").encode())
    return 0 if all(r.passed for r in reports) else 1


def cmd_convert(args, cfg) -> int:
    graphs = decode_planar_code(_read(args.input))
    _write(args.output, _format(graphs, args.to, args.header))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads", type=int, default=argparse.SUPPRESS,
        help="worker threads (runtime only; output is identical)",
    )
    common.add_argument(
        "--config", default=argparse.SUPPRESS, help="JSON file with max_n, class_budget, threads"
    )
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="override the configured max n")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="tricensus", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="enumerate triangulations on n vertices")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("--min-degree", type=int)
    g.add_argument("--connectivity", type=int)
    g.add_argument("-o", "--output")
    g.add_argument("--format", choices=("planar_code", "graph6", "canonical"), default="planar_code")
    g.add_argument("--header", action="store_true", help="prefix planar_code output with its header")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("census", parents=[common], help="cycle census of each graph in a planar_code file")
    c.add_argument("-i", "--input", required=True)
    c.add_argument("--per-vertex", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_census)

    m = sub.add_parser("min-c4", parents=[common], help="minimum 4-cycle count and its minimizers")
    m.add_argument("-n", type=int, required=True)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_min_c4)

    v = sub.add_parser("verify", parents=[common], help="run exhaustive checkers")
    v.add_argument("claim", choices=("theorem1", "lemmas", "identities", "claims", "oracle"))
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("convert", parents=[common], help="transcode a planar_code file")
    x.add_argument("-i", "--input", required=True)
    x.add_argument("--to", choices=("planar_code", "graph6", "canonical"), required=True)
    x.add_argument("-o", "--output")
    x.add_argument("--header", action="store_true")
    x.set_defaults(func=cmd_convert)
    return p


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING)
    try:
        return args.func(args, _settings(args))
    except (LimitExceeded, FormatError, UnknownPredicateField, ValueError) as exc:
        print(f"tricensus: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
