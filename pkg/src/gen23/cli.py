"""Command-line front end: claim verification, parameter search, closures.

Exit codes: 0 all verdicts positive; 1 a verification failed (a registered
claim is falsified, which should never happen); 2 usage error; 3 resource cap
reached.  Progress goes to stderr; reports and results go to stdout or to the
requested JSON/markdown paths, and are deterministic for a fixed seed and cap
up to the per-claim timing fields.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import claims
from .engine import DEFAULT_CAP, closure
from .fields import parse_field
from .matgroup import Matrix, matrix_from_json
from .reports import _jsonable

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _env_from_args(args) -> claims.RunEnv:
    return claims.RunEnv(
        cap=args.cap,
        threads=args.threads,
        seed=args.seed,
        progress=_progress if args.verbose else None,
    )


def cmd_verify(args) -> int:
    reg = claims.registry()
    if args.claims == ["all"] or not args.claims:
        ids = [cid for cid, c in reg.items() if args.slow or not c.slow]
    else:
        unknown = [c for c in args.claims if c not in reg]
        if unknown:
            print(f"unknown claim id(s): {', '.join(unknown)}", file=sys.stderr)
            print("known ids:", ", ".join(sorted(reg)), file=sys.stderr)
            return EXIT_USAGE
        ids = args.claims
    env = _env_from_args(args)
    reports = []
    capped = False
    for cid in ids:
        _progress(f"== {cid}")
        try:
            rep = claims.run_claim(cid, env)
        except MemoryError:
            return EXIT_CAP
        reports.append(rep)
        verdict = "PASS" if rep.ok else "FAIL"
        print(f"{verdict}  {cid:32s} {rep.elapsed:9.2f}s")
        if not rep.ok:
            det = rep.details
            if det.get("truncated"):
                capped = True
            print(f"      {json.dumps(_jsonable(det))[:400]}")
    all_ok = all(r.ok for r in reports)
    payload = {
        "environment": {
            "seed": args.seed,
            "cap": args.cap,
            "threads": args.threads,
            "slow": bool(args.slow),
        },
        "all_ok": all_ok,
        "claims": [r.to_json() for r in reports],
    }
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.md:
        with open(args.md, "w") as fh:
            fh.write(_markdown_report(payload))
    print(f"{sum(r.ok for r in reports)}/{len(reports)} claims verified")
    if capped:
        return EXIT_CAP
    return EXIT_OK if all_ok else EXIT_FAIL


def _markdown_report(payload: dict) -> str:
    lines = ["# Verification report", ""]
    env = payload["environment"]
    lines.append(
        f"seed {env['seed']}, cap {env['cap']}, threads {env['threads']}, "
        f"slow {'on' if env['slow'] else 'off'}"
    )
    lines.append("")
    lines.append("| claim | verdict | seconds |")
    lines.append("|---|---|---|")
    for rep in payload["claims"]:
        lines.append(
            f"| `{rep['claim']}` | {'PASS' if rep['ok'] else '**FAIL**'} "
            f"| {rep['elapsed']} |"
        )
    lines.append("")
    lines.append(f"overall: {'all claims verified' if payload['all_ok'] else 'FAILURES PRESENT'}")
    lines.append("")
    return "\n".join(lines)


def cmd_search(args) -> int:
    from .constructions import build_pair, search_params

    target = args.target.upper()
    if target not in ("SL3", "SU3", "SL5", "SU5"):
        print("target must be one of sl3, su3, sl5, su5", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.field:
            F = parse_field(args.field)
        else:
            F = _default_search_field(target, args.q)
    except ValueError as exc:
        print(f"bad field: {exc}", file=sys.stderr)
        return EXIT_USAGE
    res = search_params(target, F, order_hint=args.order_hint)
    if not res.found:
        print(f"none (search exhausted after {res.candidates_tried} candidates)")
        return EXIT_OK
    pair = build_pair(target, res.params)
    out = {
        "target": target,
        "field": str(F),
        "result": res.to_json(),
        "params": {
            k: ",".join(str(d) for d in F.decode(v))
            for k, v in _param_dict(res.params).items()
        },
        "x": pair.x.to_json(),
        "y": pair.y.to_json(),
    }
    text = json.dumps(_jsonable(out), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"witness written to {args.out}")
    else:
        print(text)
    return EXIT_OK


def _param_dict(params) -> dict:
    from .constructions import Dim3Params

    if isinstance(params, Dim3Params):
        return {"a": params.a, "b": params.b}
    return {"b": params.b, "c": params.c}


def _default_search_field(target: str, q: int):
    from . import numth
    from .fields import make_field

    if q is None:
        raise ValueError("provide --q or --field")
    fac = numth.factorize(q)
    if len(fac) != 1:
        raise ValueError(f"q={q} is not a prime power")
    ((p, e),) = fac.items()
    if target in ("SU3", "SU5"):
        return make_field(p, 2 * e)
    return make_field(p, e)


def cmd_closure(args) -> int:
    mats = []
    for path in args.matrices:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"cannot read {path}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        try:
            mats.append(matrix_from_json(data))
        except (KeyError, ValueError) as exc:
            print(f"bad matrix in {path}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if not mats:
        print("no matrices given", file=sys.stderr)
        return EXIT_USAGE
    if any(m.field != mats[0].field for m in mats):
        print("matrices over mismatched fields", file=sys.stderr)
        return EXIT_USAGE
    res = closure(mats, cap=args.cap, threads=args.threads,
                  progress=_progress if args.verbose else None)
    print(f"order: {res.order}")
    print(f"scalar subgroup order: {res.scalar_subgroup_order}")
    print(f"projective order: {res.projective_order}")
    print(f"truncated: {res.truncated}")
    return EXIT_CAP if res.truncated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gen23",
        description="verification toolkit for (2,3)-generator constructions "
        "of SL3/SU3/SL5/SU5 over finite fields",
    )
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP,
                    help="element cap for closure enumeration")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command")

    v = sub.add_parser("verify", help="run registered claims")
    v.add_argument("claims", nargs="*", default=["all"],
                   help="claim ids, or 'all' (default)")
    v.add_argument("--slow", action="store_true",
                   help="include the slow claims (SL3(9), PSU3(25) scan)")
    v.add_argument("--json", metavar="PATH", help="write the JSON report here")
    v.add_argument("--md", metavar="PATH", help="write the markdown report here")
    v.add_argument("--list", action="store_true", help="list claim ids and exit")

    s = sub.add_parser("search", help="search for a theorem witness parameter")
    s.add_argument("--target", required=True, help="sl3 | su3 | sl5 | su5")
    s.add_argument("--q", type=int, help="defining prime power q")
    s.add_argument("--field", help="explicit field p^m[/modulus]")
    s.add_argument("--order-hint", type=int, dest="order_hint",
                   help="restrict candidates to elements of this order")
    s.add_argument("--out", metavar="PATH", help="write the witness JSON here")

    c = sub.add_parser("closure", help="exact order of the group generated by "
                       "the matrices in the given JSON files")
    c.add_argument("matrices", nargs="+", metavar="FILE")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        if args.list:
            for cid, c in sorted(claims.registry().items()):
                tag = " [slow]" if c.slow else ""
                print(f"{cid:32s} {c.feasibility:20s}{tag}  {c.description}")
            return EXIT_OK
        return cmd_verify(args)
    if args.command == "search":
        return cmd_search(args)
    if args.command == "closure":
        return cmd_closure(args)
    ap.print_help()
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
