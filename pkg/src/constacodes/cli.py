"""Command-line front end.

Subcommands: factor, count, enumerate, oracle, selfdual.  All output is
JSON (schema field = 1) except `enumerate --format csv`, which emits a
flat descriptor table.  Exit codes: 0 success, 1 verification mismatch,
2 invalid input.

Caps may be set by flag or by the environment variables
CONSTACODES_MAT_CAP / CONSTACODES_ORACLE_DIM_CAP; a flag wins.  The
--threads flag bounds worker parallelism and is validated; the current
implementation runs every stage serially, so any accepted value yields
byte-identical output.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from typing import IO

from . import ambient as amb
from . import enumerator as en
from .factorizer import build_factor_data
from .params import Params

SCHEMA = 1


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, required=True, help="field extension degree")
    parser.add_argument("--n", type=int, default=1, help="odd length factor (default 1)")
    parser.add_argument("--k", type=int, default=2, help="power-of-two exponent (default 2)")
    parser.add_argument("--lambda", dest="lam", type=int, default=2,
                        help="half the u-nilpotency (default 2)")
    parser.add_argument("--delta", type=int, default=1, help="shift constant delta (default 1)")
    parser.add_argument("--alpha", type=int, default=1, help="shift constant alpha (default 1)")
    parser.add_argument("--reduction", type=int, default=None,
                        help="override the field reduction polynomial (packed bits)")
    parser.add_argument("--seed", type=int, default=0, help="seed for the factorizer RNG")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker bound (validated; execution is serial)")
    parser.add_argument("--out", type=str, default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="constacodes")
    sub = p.add_subparsers(dest="cmd", required=True)

    f = sub.add_parser("factor", help="factor the core polynomial and print split data")
    _common(f)

    c = sub.add_parser("count", help="count all codes; both formulas must agree")
    _common(c)

    e = sub.add_parser("enumerate", help="stream code descriptors")
    _common(e)
    e.add_argument("--offset", type=int, default=0)
    e.add_argument("--limit", type=int, default=None)
    e.add_argument("--with-generators", action="store_true",
                   help="attach lifted generator words to each code")
    e.add_argument("--format", choices=("json", "csv"), default="json")

    o = sub.add_parser("oracle", help="diff the enumeration against the brute-force oracle")
    _common(o)
    o.add_argument("--oracle-dim-cap", type=int, default=None)

    s = sub.add_parser("selfdual", help="list the self-dual codes of length 4")
    _common(s)
    s.add_argument("--verify", dest="verify", action="store_true", default=True)
    s.add_argument("--no-verify", dest="verify", action="store_false")
    s.add_argument("--mat-cap", type=int, default=None)
    return p


def _make_params(args) -> Params:
    return Params(args.m, args.n, args.k, args.lam, args.delta, args.alpha,
                  reduction=args.reduction)


def _check_threads(args) -> None:
    if args.threads is None:
        args.threads = os.cpu_count() or 1
    if args.threads < 1:
        raise ValueError(f"--threads must be >= 1, got {args.threads}")


def _open_out(args) -> IO[str]:
    if args.out:
        return open(args.out, "w", encoding="utf-8")
    return sys.stdout


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_factor(args) -> int:
    params = _make_params(args)
    fd = build_factor_data(params, rng=random.Random(args.seed))
    doc = {
        "schema": SCHEMA,
        "params": params.as_dict(),
        "factors": [{"degree": ent.degree, "coeffs": list(ent.f)} for ent in fd.entries],
        "cofactors": [list(ent.cofactor) for ent in fd.entries],
        "idempotents": [list(ent.idempotent) for ent in fd.entries],
    }
    with _open_out(args) as out:
        out.write(_dump(doc) + "\n")
    return 0


def cmd_count(args) -> int:
    params = _make_params(args)
    fd = build_factor_data(params, rng=random.Random(args.seed))
    per_factor = []
    total_sum = 1
    total_closed = 1
    for ent in fd.entries:
        q = 1 << (params.m * ent.degree)
        s = en.count_ideals_sum_form(q, params.k, params.lam)
        c = en.count_ideals_closed_form(q, params.k, params.lam)
        if s != c:
            print(f"count mismatch at factor degree {ent.degree}: {s} != {c}",
                  file=sys.stderr)
            return 1
        per_factor.append({"degree": ent.degree, "count": str(s)})
        total_sum *= s
        total_closed *= c
    doc = {
        "schema": SCHEMA,
        "params": params.as_dict(),
        "per_factor": per_factor,
        "count_sum_form": str(total_sum),
        "count_closed_form": str(total_closed),
        "count": str(total_sum),
    }
    with _open_out(args) as out:
        out.write(_dump(doc) + "\n")
    return 0


def _descriptor_json(desc: en.IdealDescriptor) -> dict:
    return desc.as_dict()


def cmd_enumerate(args) -> int:
    if args.offset < 0 or (args.limit is not None and args.limit < 0):
        raise ValueError("--offset and --limit must be nonnegative")
    params = _make_params(args)
    fd = build_factor_data(params, rng=random.Random(args.seed))
    ctxs = en.chain_contexts(params, fd)
    total = en.count_codes(params, fd)
    stream = en.enumerate_codes(params, fd, ctxs)
    stop = None if args.limit is None else args.offset + args.limit
    window = itertools.islice(stream, args.offset, stop)

    with _open_out(args) as out:
        if args.format == "csv":
            out.write("index,factor,family,s,t,h,size\n")
            for idx, code in enumerate(window, start=args.offset):
                size = en.code_size(params, fd, code)
                for comp in code.components:
                    h = ";".join(str(x) for x in comp.h)
                    t = "" if comp.t is None else comp.t
                    out.write(f"{idx},{comp.factor},{comp.family},{comp.s},{t},{h},{size}\n")
            return 0
        out.write(
            '{"schema":%d,"params":%s,"total":"%s","offset":%d,"limit":%s,"codes":['
            % (
                SCHEMA,
                _dump(params.as_dict()),
                total,
                args.offset,
                "null" if args.limit is None else str(args.limit),
            )
        )
        first = True
        for code in window:
            entry = {
                "size": str(en.code_size(params, fd, code)),
                "components": [_descriptor_json(c) for c in code.components],
            }
            if args.with_generators:
                gens = amb.code_ambient_generators(params, fd, code, ctxs)
                entry["generators_lifted"] = [
                    [list(digits) for digits in amb.psi_lift(params, g)] for g in gens
                ]
            out.write(("" if first else ",") + _dump(entry))
            first = False
        out.write("]}\n")
    return 0


def cmd_oracle(args) -> int:
    params = _make_params(args)
    fd = build_factor_data(params, rng=random.Random(args.seed))
    ctxs = en.chain_contexts(params, fd)
    ideals = amb.brute_force_ideals(params, dim_cap=args.oracle_dim_cap)
    oracle_bases = {i.basis for i in ideals}

    enum_bases = set()
    for code in en.enumerate_codes(params, fd, ctxs):
        enum_bases.add(amb.code_bit_basis(params, fd, code, ctxs).basis)

    missing = sorted(oracle_bases - enum_bases)
    extra = sorted(enum_bases - oracle_bases)
    status = "PASS" if not missing and not extra and len(enum_bases) == len(oracle_bases) else "FAIL"
    doc = {
        "schema": SCHEMA,
        "params": params.as_dict(),
        "enumerated": len(enum_bases),
        "oracle": len(oracle_bases),
        "status": status,
        "missing": [[hex(r) for r in b] for b in missing],
        "extra": [[hex(r) for r in b] for b in extra],
        "ideals": [
            {
                "dim": i.dim,
                "size": str(i.size),
                "generators": [hex(g) for g in amb.recover_generators(params, i)],
            }
            for i in ideals
        ],
    }
    with _open_out(args) as out:
        out.write(_dump(doc) + "\n")
    return 0 if status == "PASS" else 1


def cmd_selfdual(args) -> int:
    params = _make_params(args)
    codes = en.list_self_dual_length4(params)
    fd = build_factor_data(params, rng=random.Random(args.seed))
    ctxs = en.chain_contexts(params, fd)
    entries = []
    all_ok = True
    for code in codes:
        entry = {
            "size": str(en.code_size(params, fd, code)),
            "components": [_descriptor_json(c) for c in code.components],
        }
        if args.verify:
            basis = amb.code_bit_basis(params, fd, code, ctxs).basis
            dual = amb.dual_bit_basis(params, basis)
            entry["self_dual"] = dual == basis
            all_ok = all_ok and entry["self_dual"]
        entries.append(entry)
    expected = 1 + (1 << params.m) + 2 * (1 << (2 * params.m))
    doc = {
        "schema": SCHEMA,
        "params": params.as_dict(),
        "count": len(entries),
        "expected_count": expected,
        "verified": bool(args.verify),
        "codes": entries,
    }
    status_ok = len(entries) == expected and all_ok
    with _open_out(args) as out:
        out.write(_dump(doc) + "\n")
    return 0 if status_ok else 1


_DISPATCH = {
    "factor": cmd_factor,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "oracle": cmd_oracle,
    "selfdual": cmd_selfdual,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_threads(args)
        return _DISPATCH[args.cmd](args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
