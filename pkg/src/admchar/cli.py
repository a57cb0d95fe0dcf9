"""Command-line front end.

Subcommands: enumerate, character, solve, verify-recurrence, verify-exactness,
lemmas.  All output on stdout is canonical JSON (or CSV where requested) and
byte-identical across runs with the same arguments.  Exit codes: 0 success /
all checks pass, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .cache import ResultCache
from .configs import (
    Composition,
    DEFAULT_OUTPUT_CAP,
    compositions,
    degree,
    enumerate_admissible,
    weight,
)
from .errors import ResourceLimitError
from .exactness import exactness_report_csv, verify_exactness
from .indexsets import run_lemma_suite
from .qseries import canonical_json, first_mismatch
from .recurrence import compute_character, solve_character, verify_recurrence

CACHE_ENV_VAR = "ADMCHAR_CACHE_DIR"


class UsageError(Exception):
    pass


def _parse_composition(text: str, ell: int | None) -> Composition:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse composition {text!r}")
    if len(parts) < 2:
        raise UsageError("a composition needs at least two parts")
    if any(p < 0 for p in parts):
        raise UsageError("composition parts must be nonnegative")
    if ell is not None and len(parts) != ell + 1:
        raise UsageError(
            f"composition {text!r} has {len(parts)} parts, expected ell+1 = {ell + 1}"
        )
    return Composition(parts)


def _cache_dir(args) -> str | None:
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    return os.environ.get(CACHE_ENV_VAR) or None


def cmd_enumerate(args) -> int:
    K = _parse_composition(args.K, args.ell)
    for cfg in enumerate_admissible(K, args.max_degree, args.cap):
        line = {
            "entries": list(cfg.entries),
            "degree": degree(cfg, K.rank),
            "weight": list(weight(cfg, K.rank)),
        }
        print(canonical_json(line))
    return 0


def _character_payload(K: Composition, trunc: int, method: str, cap: int):
    if method == "enum":
        return compute_character(K, trunc, cap).to_jsonable()
    if method == "solve":
        return solve_character(K, trunc).to_jsonable()
    enum_ch = compute_character(K, trunc, cap)
    solve_ch = solve_character(K, trunc)
    verdict = "match" if first_mismatch(enum_ch, solve_ch) is None else "mismatch"
    return {
        "method": "both",
        "enum": enum_ch.to_jsonable(),
        "solve": solve_ch.to_jsonable(),
        "verdict": verdict,
    }


def cmd_character(args, method_override: str | None = None) -> int:
    K = _parse_composition(args.K, args.ell)
    method = method_override or args.method
    cache_dir = _cache_dir(args)
    payload = None
    key = canonical_json(
        {
            "artifact": "admchar",
            "version": __version__,
            "command": "character",
            "ell": K.rank,
            "k": K.level(),
            "K": list(K.parts),
            "M": args.M,
            "method": method,
        }
    )
    cache = ResultCache(cache_dir) if cache_dir else None
    if cache is not None:
        payload = cache.load(key)
        if payload is not None:
            print(f"cache: hit {cache.path_for(key)}", file=sys.stderr)
    if payload is None:
        payload = _character_payload(K, args.M, method, args.cap)
        if cache is not None:
            cache.store(key, payload)
            print(f"cache: store {cache.path_for(key)}", file=sys.stderr)
    print(canonical_json(payload))
    if payload.get("verdict") == "mismatch":
        return 1
    return 0


def cmd_solve(args) -> int:
    return cmd_character(args, method_override="solve")


def cmd_verify_recurrence(args) -> int:
    only = _parse_composition(args.K, args.ell) if args.K else None
    if only is not None and only.level() != args.k:
        raise UsageError(f"composition {args.K} has level {only.level()}, expected {args.k}")
    report = verify_recurrence(args.ell, args.k, args.M, only=only, cap=args.cap)
    print(canonical_json(report.to_jsonable()))
    return 0 if report.all_ok else 1


def cmd_verify_exactness(args) -> int:
    if args.K:
        targets = [_parse_composition(args.K, args.ell)]
        if targets[0].level() != args.k:
            raise UsageError(
                f"composition {args.K} has level {targets[0].level()}, expected {args.k}"
            )
    else:
        targets = compositions(args.ell, args.k)
    reports = [verify_exactness(K, args.max_degree, args.cap) for K in targets]
    all_ok = all(r.all_ok for r in reports)
    if args.format == "csv":
        chunks = [exactness_report_csv(r) for r in reports]
        header, *_ = chunks[0].splitlines()
        body = [line for chunk in chunks for line in chunk.splitlines()[1:]]
        print("\n".join([header] + body))
    else:
        print(
            canonical_json(
                {
                    "ell": args.ell,
                    "k": args.k,
                    "max_degree": args.max_degree,
                    "all_ok": all_ok,
                    "reports": [r.to_jsonable() for r in reports],
                }
            )
        )
    return 0 if all_ok else 1


def cmd_lemmas(args) -> int:
    report = run_lemma_suite(args.ell, args.k, args.max_degree, args.cap)
    print(canonical_json(report.to_jsonable()))
    return 0 if report.ok else 1


def _add_common(parser, *, want_k=False, want_K=False, K_required=False,
                want_M=False, want_max_degree=False):
    parser.add_argument("--ell", type=int, help="rank l (number of colors)")
    if want_k:
        parser.add_argument("--k", type=int, required=True, help="level")
    if want_K:
        parser.add_argument(
            "--K",
            required=K_required,
            help="composition as comma-separated parts k0,k1,...,kl",
        )
    if want_M:
        parser.add_argument("--M", type=int, required=True, help="truncation order")
    if want_max_degree:
        parser.add_argument("--max-degree", type=int, required=True)
    parser.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_OUTPUT_CAP,
        help="enumeration output cap (exit 3 when exceeded)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="admchar",
        description="Characters of admissible-configuration spaces: "
        "enumeration, recurrence and exactness verification, coefficient solving.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list admissible configurations as JSON lines")
    _add_common(p, want_K=True, K_required=True, want_max_degree=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("character", help="character table of one composition")
    _add_common(p, want_K=True, K_required=True, want_M=True)
    p.add_argument("--method", choices=["enum", "solve", "both"], default="enum")
    p.add_argument("--cache-dir", help=f"cache directory (or ${CACHE_ENV_VAR})")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("solve", help="character via the coefficient solver")
    _add_common(p, want_K=True, K_required=True, want_M=True)
    p.add_argument("--cache-dir", help=f"cache directory (or ${CACHE_ENV_VAR})")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify-recurrence", help="check the character recurrence system")
    _add_common(p, want_k=True, want_K=True, want_M=True)
    p.set_defaults(func=cmd_verify_recurrence)

    p = sub.add_parser("verify-exactness", help="check exactness of the region complex")
    _add_common(p, want_k=True, want_K=True, want_max_degree=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify_exactness)

    p = sub.add_parser("lemmas", help="run the region lemma property suite")
    _add_common(p, want_k=True, want_max_degree=True)
    p.set_defaults(func=cmd_lemmas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.ell is not None and args.ell < 1:
        print("error: --ell must be >= 1", file=sys.stderr)
        return 2
    needs_ell = args.command in ("verify-recurrence", "verify-exactness", "lemmas")
    if needs_ell and args.ell is None:
        print("error: --ell is required", file=sys.stderr)
        return 2
    if args.command in ("enumerate", "character", "solve") and not getattr(args, "K", None):
        print("error: --K is required", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
