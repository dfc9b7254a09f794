"""Command line front end.

Output is NDJSON (one JSON object per line) unless --pretty is given.
Exit codes: 0 success, 1 domain or predicate failure, 2 malformed
input or a construction that failed its own verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import comb

from .codes import (
    MdsVerdict,
    VerificationReport,
    code_from_json,
    is_euclidean_self_dual,
    is_hermitian_self_dual,
    mds_check,
    min_distance_exhaustive,
)
from .config import current_guards
from .constructions import (
    build_constacyclic_hermitian,
    build_euclidean_duadic_extended,
    build_grs_hermitian,
    build_hermitian_extended_duadic,
    build_hermitian_n5,
    build_negacyclic_hermitian,
    exists_hermitian_dispatch,
)
from .cosets import DefiningSet, check_duadic_splitting, consecutive_run
from .errors import (
    MalformedInput,
    NoCyclicStructure,
    SelfDualError,
    VerificationFailed,
)
from .fields import TowerSpec

CONSTRUCT_ROUTES = (
    "euclidean-duadic",
    "grs-hermitian",
    "constacyclic",
    "negacyclic",
    "hermitian-duadic",
    "hermitian-n5",
    "dispatch",
)


def _emit(obj, pretty: bool) -> None:
    print(json.dumps(obj, indent=2 if pretty else None))


def _require_n(args) -> int:
    if args.n is None:
        raise MalformedInput("route %r needs --n" % args.route)
    return args.n


def cmd_construct(args) -> int:
    guards = current_guards(None)
    route = args.route
    if route == "euclidean-duadic":
        result = build_euclidean_duadic_extended(args.p, args.t,
                                                 _require_n(args), guards)
    elif route == "grs-hermitian":
        points = None
        if args.points is not None:
            try:
                points = [int(x) for x in args.points.split(",") if x.strip()]
            except ValueError as exc:
                raise MalformedInput("bad --points list: %s" % exc) from exc
        result = build_grs_hermitian(args.p, args.t, _require_n(args),
                                     points=points, v_choice=args.v_choice,
                                     guards=guards)
    elif route == "constacyclic":
        if args.r is None:
            raise MalformedInput("constacyclic needs --r")
        result = build_constacyclic_hermitian(args.p, args.t,
                                              _require_n(args), args.r, guards)
    elif route == "negacyclic":
        result = build_negacyclic_hermitian(args.p, args.t,
                                            _require_n(args), guards)
    elif route == "hermitian-duadic":
        result = build_hermitian_extended_duadic(args.p, args.t,
                                                 _require_n(args), guards)
    elif route == "hermitian-n5":
        if args.n is not None and args.n != 5:
            raise MalformedInput("hermitian-n5 fixes n = 5")
        result = build_hermitian_n5(args.p, args.t, guards)
    else:  # dispatch
        result = exists_hermitian_dispatch(args.p, args.t,
                                           _require_n(args), guards)
    _emit(result.to_json(), args.pretty)
    return 0


def cmd_verify(args) -> int:
    guards = current_guards(None)
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, ValueError) as exc:
        raise MalformedInput("cannot read %s: %s" % (args.file, exc)) from exc
    try:
        code, metadata = code_from_json(obj)
    except SelfDualError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedInput("bad code record: %s" % exc) from exc

    over_tower = isinstance(code.field, TowerSpec)
    inner = args.inner
    if inner == "auto":
        inner = "hermitian" if over_tower else "euclidean"
    if inner == "hermitian" and not over_tower:
        raise MalformedInput(
            "hermitian check needs a code over a quadratic extension"
        )
    euclid = is_euclidean_self_dual(code)
    herm = is_hermitian_self_dual(code) if over_tower else None
    ok = euclid if inner == "euclidean" else bool(herm)

    defining = None
    if isinstance(metadata, dict) and metadata.get("defining_set"):
        try:
            defining = DefiningSet.from_json(metadata["defining_set"])
        except (SelfDualError, KeyError, TypeError, ValueError):
            defining = None

    n, k, q = code.n, code.k, code.field.order
    target = n - k + 1
    d_exact = None
    d_lower = None
    warning = None

    mode = args.mds
    if mode == "auto":
        if q ** k <= guards.exhaustive_tier_limit:
            mode = "exhaustive"
        elif (comb(n, k) <= guards.column_limit
                and comb(n, k) * k ** 3 <= guards.column_work_limit
                and q <= guards.dlog_limit):
            mode = "columns"
        elif defining is not None:
            mode = "bch"
        else:
            mode = "monte-carlo"

    if mode == "exhaustive":
        if q ** k > guards.codeword_limit:
            verdict = MdsVerdict("guarded")
            warning = ("q**k = %d exceeds the codeword guard; "
                       "no distance computed" % q ** k)
        else:
            d_exact = min_distance_exhaustive(code, guards)
            verdict = (MdsVerdict("certified-exact") if d_exact == target
                       else MdsVerdict("refuted"))
    elif mode == "columns":
        if comb(n, k) > guards.column_limit:
            verdict = MdsVerdict("guarded")
            warning = "C(n, k) = %d exceeds the column guard" % comb(n, k)
        else:
            verdict = mds_check(code, "exhaustive-columns", guards=guards)
            if verdict.status == "certified-exact":
                d_exact = target
    elif mode == "bch":
        if defining is None:
            raise NoCyclicStructure("no defining set in the code metadata")
        verdict = mds_check(code, "bch", defining=defining, guards=guards)
        if verdict.status == "certified-bch":
            d_lower = consecutive_run(defining) + 1
    else:  # monte-carlo
        verdict = mds_check(code, "monte-carlo", trials=args.trials,
                            guards=guards)

    if verdict.status == "refuted":
        ok = False
    report = VerificationReport(euclid, herm, d_exact, d_lower, verdict,
                                warning)
    _emit(report.to_json(), args.pretty)
    return 0 if ok else 1


def cmd_table(args) -> int:
    from .table import all_match, run_table

    outcomes = run_table()
    for outcome in outcomes:
        _emit(outcome.to_json(), args.pretty)
    counts = {"CONFIRMED": 0, "UNSUPPORTED": 0, "GUARDED": 0}
    for outcome in outcomes:
        counts[outcome.verdict] = counts.get(outcome.verdict, 0) + 1
    matched = all_match(outcomes)
    _emit({
        "pairs": len(outcomes),
        "confirmed": counts.get("CONFIRMED", 0),
        "unsupported": counts.get("UNSUPPORTED", 0),
        "guarded": counts.get("GUARDED", 0),
        "all_match_expected": matched,
    }, args.pretty)
    return 0 if matched else 1


def cmd_splitting(args) -> int:
    if args.set_from > args.set_to:
        raise MalformedInput("--set-from exceeds --set-to")
    T = DefiningSet(args.n, tuple(range(args.set_from, args.set_to + 1)))
    report = check_duadic_splitting(T, args.multiplier, args.n, args.q)
    _emit(report.to_json(), args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="selfdual",
        description="Construct and verify MDS self-dual codes over "
                    "finite fields.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build one code and print it")
    c.add_argument("route", choices=CONSTRUCT_ROUTES)
    c.add_argument("--p", type=int, required=True, help="field characteristic")
    c.add_argument("--t", type=int, default=1, help="extension degree")
    c.add_argument("--n", type=int, help="code or cyclic length")
    c.add_argument("--r", type=int, help="shift constant order (constacyclic)")
    c.add_argument("--v-choice", dest="v_choice", choices=["norm", "square"],
                   default="norm", help="how GRS column scalars are chosen")
    c.add_argument("--points", help="comma separated point indices (GRS)")
    c.add_argument("--pretty", action="store_true")

    v = sub.add_parser("verify", help="re-check a serialized code")
    v.add_argument("file", help="JSON file produced by construct")
    v.add_argument("--mds",
                   choices=["auto", "exhaustive", "columns", "monte-carlo",
                            "bch"],
                   default="auto")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--inner", choices=["auto", "euclidean", "hermitian"],
                   default="auto")
    v.add_argument("--pretty", action="store_true")

    tbl = sub.add_parser("table", help="run the reference length sweep")
    tbl.add_argument("--pretty", action="store_true")

    s = sub.add_parser("splitting", help="check a multiplier splitting")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True,
                   help="coset multiplier base")
    s.add_argument("--multiplier", type=int, required=True)
    s.add_argument("--set-from", dest="set_from", type=int, required=True)
    s.add_argument("--set-to", dest="set_to", type=int, required=True)
    s.add_argument("--pretty", action="store_true")
    return ap


_COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "table": cmd_table,
    "splitting": cmd_splitting,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        return handler(args)
    except MalformedInput as exc:
        _emit({"error": exc.code, "message": exc.message}, False)
        return 2
    except VerificationFailed as exc:
        _emit({"error": exc.code, "predicate": exc.predicate,
               "message": exc.message}, False)
        return 2
    except SelfDualError as exc:
        out = {"error": exc.code, "message": exc.message}
        reason = getattr(exc, "reason", None)
        if reason:
            out["reason"] = reason
        _emit(out, False)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
