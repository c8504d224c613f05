"""Command-line interface: classification, construction, verification, search.

Reports are JSON on stdout by default (--text switches to a human-readable
rendering, --output redirects to a file); the css command additionally
writes alist files.  Exit codes: 0 success, 2 usage error, 3 domain error
such as a modulus admitting no square.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .algebra import AffineMap, factorize, verify_square
from .centralizer import (
    commutation_matrix,
    common_centralizer_zn,
    is_abelian,
    smith_normal_form,
    valuation,
)
from .classify import NoPairError, NoSquareError, classify_zn, construct_square
from .css import build_block_arrays, detect_commuting_2x3, export_alist, gf2_product_is_zero, tanner_girth
from .oracle import brute_force_square_exists, sn_square

GIRTH_CAP = 12


def _parse_positive(value: str, minimum: int, what: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {value!r}")
    if number < minimum:
        raise ValueError(f"{what} must be at least {minimum}, got {number}")
    return number


def _parse_map(n: int, token: str) -> AffineMap:
    parts = token.split(",")
    if len(parts) != 2:
        raise ValueError(f"map token must look like 'a,b', got {token!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"map token must hold integers, got {token!r}")
    return AffineMap(n, a, b)


def _thread_cap() -> int:
    """Validate AFFSQ_THREADS; execution is serial, so any cap >= 1 is honored."""
    raw = os.environ.get("AFFSQ_THREADS")
    if raw is None:
        return 1
    return _parse_positive(raw, 1, "AFFSQ_THREADS")


def run_classify(args) -> dict:
    n = _parse_positive(args.n, 2, "n")
    verdict = classify_zn(n)
    return {
        "n": n,
        "exists": verdict.exists,
        "factors": [[f.p, f.e] for f in factorize(n)],
        "bigFactors": [f.q for f in verdict.big_factors],
        "reason": verdict.reason,
        "chosenIndices": list(verdict.chosen_indices) if verdict.chosen_indices else None,
    }


def run_construct(args) -> dict:
    n = _parse_positive(args.n, 2, "n")
    witness = construct_square(n)
    verdict = verify_square(*witness.quadruple)
    return {"n": n, "witness": witness.as_dict(), "verification": verdict.as_dict()}


def run_verify(args) -> dict:
    n = _parse_positive(args.n, 2, "n")
    maps = [_parse_map(n, token) for token in args.maps]
    verdict = verify_square(*maps)
    return {
        "n": n,
        "maps": [m.as_dict() for m in maps],
        "verification": verdict.as_dict(),
    }


def run_centralizer(args) -> dict:
    n = _parse_positive(args.n, 2, "n")
    f0 = _parse_map(n, args.maps[0])
    f1 = _parse_map(n, args.maps[1])
    cent = common_centralizer_zn(f0, f1)
    result = {
        "n": n,
        "F0": f0.as_dict(),
        "F1": f1.as_dict(),
        "size": len(cent),
        "abelian": is_abelian(cent),
        "elements": [{"a": g.a, "b": g.b} for g in cent],
    }
    if len(factorize(n)) == 1:
        cm = commutation_matrix(f0, f1)
        dec = smith_normal_form(cm.entries, cm.ring)
        result["snf"] = {
            "alpha": dec.alpha,
            "beta": dec.beta,
            "deltaValuation": valuation(cm.delta, cm.ring),
        }
    return result


def run_search(args) -> dict:
    n = _parse_positive(args.n, 2, "n")
    return brute_force_square_exists(n).as_dict()


def run_perm_square(args) -> dict:
    n = _parse_positive(args.n, 6, "n")
    f0, f1, g0, g1 = sn_square(n)
    return {
        "n": n,
        "F0": f0.cycle_string(),
        "F1": f1.cycle_string(),
        "G0": g0.cycle_string(),
        "G1": g1.cycle_string(),
        "verified": True,
    }


def run_css(args) -> dict:
    n = _parse_positive(args.n, 2, "n")
    m = _parse_positive(args.m, 3, "m")
    if len(args.maps) != 2 * m:
        raise ValueError(f"expected {2 * m} map tokens (F side then G side), got {len(args.maps)}")
    maps = [_parse_map(n, token) for token in args.maps]
    fs, gs = maps[:m], maps[m:]
    pair = build_block_arrays(fs, gs)
    orthogonality = gf2_product_is_zero(pair)
    hx_path = f"{args.out}.hx.alist"
    hz_path = f"{args.out}.hz.alist"
    with open(hx_path, "w", encoding="ascii") as handle:
        handle.write(export_alist(pair.hx))
    with open(hz_path, "w", encoding="ascii") as handle:
        handle.write(export_alist(pair.hz))
    return {
        "n": n,
        "m": m,
        "files": {"hx": hx_path, "hz": hz_path},
        "orthogonal": orthogonality.is_zero,
        "nonzeroBlocks": [list(b) for b in orthogonality.nonzero_blocks],
        "commutingWindowsF": [w.as_dict() for w in detect_commuting_2x3(fs)],
        "commutingWindowsG": [w.as_dict() for w in detect_commuting_2x3(gs)],
        "girthHX": tanner_girth(pair.hx, GIRTH_CAP),
        "girthHZ": tanner_girth(pair.hz, GIRTH_CAP),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affsq",
        description="Cross-commuting nonabelian squares in AGL1(Z/nZ).",
    )
    parser.add_argument("--text", action="store_true", help="human-readable output")
    parser.add_argument("--output", help="write the JSON report to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("classify", help="decide whether a square exists mod n")
    cmd.add_argument("n")
    cmd.set_defaults(handler=run_classify)

    cmd = sub.add_parser("construct", help="build the canonical witness mod n")
    cmd.add_argument("n")
    cmd.set_defaults(handler=run_construct)

    cmd = sub.add_parser("verify", help="check a quadruple F0 F1 G0 G1 of a,b tokens")
    cmd.add_argument("n")
    cmd.add_argument("maps", nargs=4, metavar="a,b")
    cmd.set_defaults(handler=run_verify)

    cmd = sub.add_parser("centralizer", help="common centralizer of two maps")
    cmd.add_argument("n")
    cmd.add_argument("maps", nargs=2, metavar="a,b")
    cmd.set_defaults(handler=run_centralizer)

    cmd = sub.add_parser("search", help="exhaustive brute-force square search")
    cmd.add_argument("n")
    cmd.set_defaults(handler=run_search)

    cmd = sub.add_parser("perm-square", help="the standard square inside S_n")
    cmd.add_argument("n")
    cmd.set_defaults(handler=run_perm_square)

    cmd = sub.add_parser("css", help="build block arrays and alist files from families")
    cmd.add_argument("n")
    cmd.add_argument("m")
    cmd.add_argument("maps", nargs="+", metavar="a,b")
    cmd.add_argument("--out", default="css", help="output file prefix")
    cmd.set_defaults(handler=run_css)
    return parser


def _render_text(payload: dict) -> str:
    lines = [f"command: {payload['command']}"]
    body = payload.get("result") or payload.get("error") or {}
    for key, value in body.items():
        if key == "elements":
            listing = " ".join("({a},{b})".format(**e) for e in value)
            lines.append(f"  elements: {listing}")
        else:
            lines.append(f"  {key}: {json.dumps(value)}")
    lines.append(f"  elapsedMs: {payload['elapsedMs']}")
    return "\n".join(lines) + "\n"


def _emit(payload: dict, args) -> None:
    text = _render_text(payload) if args.text else json.dumps(payload, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        _thread_cap()
        result = args.handler(args)
    except (NoSquareError, NoPairError) as exc:
        error: dict = {"type": type(exc).__name__.removesuffix("Error"), "message": str(exc)}
        if isinstance(exc, NoSquareError):
            error["reason"] = exc.verdict.reason
        payload = {
            "command": args.command,
            "error": error,
            "toolVersion": __version__,
            "elapsedMs": round((time.perf_counter() - start) * 1000, 3),
        }
        _emit(payload, args)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "command": args.command,
        "result": result,
        "toolVersion": __version__,
        "elapsedMs": round((time.perf_counter() - start) * 1000, 3),
    }
    _emit(payload, args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
