"""Command-line interface.

Exit codes: 0 success (and mathematically minimal / all checks hold),
3 verified-non-minimal (or a failed check), 2 usage or bad input,
1 internal error.  Code 3 lets scripts tell a negative mathematical
verdict apart from a broken invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .codes import (
    DEFAULT_CAP,
    GeneratorMatrix,
    MinimalityReport,
    enumerate_code,
    is_minimal_code,
)
from .construction import (
    ColumnKind,
    DemoName,
    build_G,
    build_G_omitted,
    build_G_scaled,
    demo_matrix,
    from_text,
    to_text,
)
from .errors import RingCodesError
from .ring import make_ring
from .structure import verify_all
from . import __version__

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_NOT_MINIMAL = 3

CAP_ENV = "RINGCODES_CAP"


@dataclass
class RunConfig:
    command: str
    ring: int | None = None
    demo: str | None = None
    file: str | None = None
    extra: tuple[tuple[int, int], ...] = ()
    omit: ColumnKind | None = None
    scale: tuple[int, ...] | None = None
    random_a: int = 0
    seed: int = 0
    fmt: str = "text"
    cap: int = DEFAULT_CAP
    out: str | None = None


def _parse_columns(text: str) -> tuple[tuple[int, int], ...]:
    cols = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(
                f"column {chunk!r} must be two comma-separated integers"
            )
        try:
            cols.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError(f"non-integer column {chunk!r}")
    return tuple(cols)


def _parse_scale(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scaling vector {text!r}")


def _parse_omit(text: str) -> ColumnKind:
    head, _, param = text.partition(":")
    head = head.strip().lower()
    if head in ("e1", "e2") and not param:
        return ColumnKind.e1() if head == "e1" else ColumnKind.e2()
    if head in ("unit", "d", "dstar"):
        try:
            value = int(param)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"{head} omission needs an integer parameter, e.g. {head}:2"
            )
        maker = {
            "unit": ColumnKind.unit,
            "d": ColumnKind.d_col,
            "dstar": ColumnKind.d_star,
        }[head]
        return maker(value)
    raise argparse.ArgumentTypeError(
        f"bad omit spec {text!r}; expected e1, e2, unit:U, d:D or dstar:D"
    )


def _default_cap() -> int:
    env = os.environ.get(CAP_ENV)
    if env is None:
        return DEFAULT_CAP
    try:
        return int(env)
    except ValueError:
        return DEFAULT_CAP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringcodes",
        description="Construct and brute-force-verify two-dimensional "
        "minimal linear codes over Z/p^n.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_builder_opts(p: argparse.ArgumentParser, ring_required: bool):
        p.add_argument("--ring", type=int, required=ring_required,
                       help="modulus M of the ring Z/M")
        p.add_argument("--extra", type=_parse_columns, default=(),
                       help="extra columns 'a,b;c,d;...'")
        p.add_argument("--omit", type=_parse_omit, default=None,
                       help="drop a column kind: e1, e2, unit:U, d:D, dstar:D")
        p.add_argument("--scale", type=_parse_scale, default=None,
                       help="unit multipliers for the canonical prefix, 'u1,u2,...'")

    def add_source_opts(p: argparse.ArgumentParser):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--demo", choices=[d.value for d in DemoName],
                         help="one of the built-in demonstration matrices")
        src.add_argument("--file", help="matrix in the 4-line text format")
        src.add_argument("--ring", type=int, help="build the canonical matrix for Z/M")
        p.add_argument("--extra", type=_parse_columns, default=())
        p.add_argument("--omit", type=_parse_omit, default=None)
        p.add_argument("--scale", type=_parse_scale, default=None)
        p.add_argument("--cap", type=int, default=None,
                       help=f"enumeration budget (default {DEFAULT_CAP}, "
                       f"env {CAP_ENV})")

    c = sub.add_parser("construct", help="build a generator matrix")
    add_builder_opts(c, ring_required=True)
    c.add_argument("--random-a", type=int, default=0, metavar="K",
                   help="append K pseudorandom extra columns")
    c.add_argument("--seed", type=int, default=0,
                   help="seed for --random-a")
    c.add_argument("--out", help="write the matrix here instead of stdout")

    k = sub.add_parser("check", help="enumerate a code and test minimality")
    add_source_opts(k)
    k.add_argument("--format", choices=["text", "json"], default="text")

    e = sub.add_parser("enumerate", help="list all codewords with supports")
    add_source_opts(e)

    v = sub.add_parser("verify-lemmas", help="run the six exhaustive ring checks")
    v.add_argument("--ring", type=int, required=True)
    v.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cap = getattr(args, "cap", None)
    return RunConfig(
        command=args.command,
        ring=getattr(args, "ring", None),
        demo=getattr(args, "demo", None),
        file=getattr(args, "file", None),
        extra=getattr(args, "extra", ()),
        omit=getattr(args, "omit", None),
        scale=getattr(args, "scale", None),
        random_a=getattr(args, "random_a", 0),
        seed=getattr(args, "seed", 0),
        fmt=getattr(args, "format", "text"),
        cap=cap if cap is not None else _default_cap(),
        out=getattr(args, "out", None),
    )


def _build_from_config(cfg: RunConfig) -> GeneratorMatrix:
    if cfg.omit is not None and cfg.scale is not None:
        raise RingCodesError("--omit and --scale cannot be combined")
    ring = make_ring(cfg.ring)
    extra = list(cfg.extra)
    if cfg.random_a:
        rng = random.Random(cfg.seed)
        M = ring.modulus
        extra += [(rng.randrange(M), rng.randrange(M)) for _ in range(cfg.random_a)]
    if cfg.omit is not None:
        return build_G_omitted(ring, cfg.omit, extra)
    if cfg.scale is not None:
        return build_G_scaled(ring, cfg.scale, extra)
    return build_G(ring, extra)


def _resolve_matrix(cfg: RunConfig) -> GeneratorMatrix:
    if cfg.demo is not None:
        return demo_matrix(cfg.demo)
    if cfg.file is not None:
        return from_text(Path(cfg.file).read_text())
    return _build_from_config(cfg)


def _fmt_vector(components: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in components) + ")"


def _fmt_support(support: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in support) + "}"


def cmd_construct(cfg: RunConfig) -> int:
    text = to_text(_build_from_config(cfg))
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _report_json(report: MinimalityReport) -> dict:
    return {
        "verdict": "minimal" if report.minimal else "not-minimal",
        "witnesses": [
            {"covered": list(v.components), "coverer": list(u.components)}
            for v, u in report.witnesses
        ],
        "w_min": report.w_min,
        "w_max": report.w_max,
        "ab_ratio_ok": report.ab_ratio_ok,
        "cases": report.cases_checked,
    }


def cmd_check(cfg: RunConfig) -> int:
    G = _resolve_matrix(cfg)
    code = enumerate_code(G, cap=cfg.cap)
    report = is_minimal_code(code)
    if cfg.fmt == "json":
        print(json.dumps(_report_json(report), indent=2))
    else:
        print(f"verdict: {'minimal' if report.minimal else 'not minimal'}")
        print(f"codewords: {len(code)}")
        print(f"w_min: {report.w_min}")
        print(f"w_max: {report.w_max}")
        print(f"ab_ratio_ok: {'yes' if report.ab_ratio_ok else 'no'}")
        print(f"cases: {report.cases_checked}")
        if report.witnesses:
            print(f"witnesses: {len(report.witnesses)}")
            for v, u in report.witnesses[:5]:
                print(f"  covered={_fmt_vector(v.components)} "
                      f"coverer={_fmt_vector(u.components)}")
            if len(report.witnesses) > 5:
                print(f"  ... {len(report.witnesses) - 5} more")
    return EXIT_OK if report.minimal else EXIT_NOT_MINIMAL


def cmd_enumerate(cfg: RunConfig) -> int:
    G = _resolve_matrix(cfg)
    code = enumerate_code(G, cap=cfg.cap)
    M = G.ring.modulus
    print(f"modulus {M} cols {G.m} coefficient-pairs {M * M} codewords {len(code)}")
    for word in code.codewords:
        print(f"{_fmt_vector(word.components)} supp={_fmt_support(word.support)}")
    return EXIT_OK


def cmd_verify_lemmas(cfg: RunConfig) -> int:
    ring = make_ring(cfg.ring)
    reports = verify_all(ring)
    all_hold = all(r.holds for r in reports)
    if cfg.fmt == "json":
        payload = [
            {
                "lemma": r.lemma_id.value,
                "holds": r.holds,
                "cases": r.cases_checked,
                "witness": list(r.witness) if r.witness else None,
            }
            for r in reports
        ]
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            status = "holds" if r.holds else f"FAILS at {r.witness}"
            print(f"{r.lemma_id.value}: {status} (cases={r.cases_checked})")
    return EXIT_OK if all_hold else EXIT_NOT_MINIMAL


_COMMANDS = {
    "construct": cmd_construct,
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "verify-lemmas": cmd_verify_lemmas,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except RingCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - last-resort guard for exit code 1
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
