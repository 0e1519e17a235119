"""Command-line front end: ``surfbraid <subcommand> ...``.

Exit codes: 0 on success (for ``verify``: every suite passed), 1 when a
verification fails or a specialization is rejected, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .hgroup import HGroupError, RingMode, collect_naive
from .matrix import MatrixError
from .presentations import alphabet
from .rep import (Character, RepError, phi1_word, phi2_curated, rank, specialize,
                  twist, v_block, validate_specialization)
from .suites import SUITES, run_suite
from .words import WordError, parse_word


def _emit_matrix(m, args, g, n, k):
    if args.json:
        print(m.to_json(g, n, k))
    else:
        print(m.pretty())


def cmd_rank(args):
    print(rank(args.g, args.n, args.k))
    return 0


_FACTOR = re.compile(r"([qt]|[mlML][1-9][0-9]*)(?:\^([+-]?[0-9]+))?")


def cmd_hmul(args):
    letters = []
    genus = 0
    for tok in args.expr.split():
        m = _FACTOR.fullmatch(tok)
        if m is None:
            raise HGroupError(f"unknown factor {tok!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        if name[1:]:
            genus = max(genus, int(name[1:]))
        letters.append((name, e))
    g = genus if args.g is None else args.g
    mode = RingMode.for_k(g, args.k)
    if mode.kills_t:
        letters = [(x, e) for x, e in letters if x != "t"]
    print(collect_naive(mode, letters))
    return 0


def cmd_phi1(args):
    w = parse_word(args.word, alphabet(args.g, args.n))
    _emit_matrix(phi1_word(args.g, args.n, w), args, args.g, args.n, 1)
    return 0


def cmd_phi2(args):
    if args.subst not in (None, "t=-t"):
        raise RepError(f"unsupported substitution {args.subst!r}; only t=-t is known")
    if args.basis == "w":
        m = phi2_curated(args.gen)
        if args.subst:
            from .rep import substitute_t_sign

            m = m.map_entries(substitute_t_sign)
        _emit_matrix(m, args, 1, 3, 2)
        return 0
    phi2_curated(args.gen)  # rejects generators without data
    _emit_matrix(v_block(subst=bool(args.subst)), args, 0, 3, 2)
    return 0


def cmd_verify(args):
    names = args.suite or ["phi1"]
    if "all" in names:
        names = list(SUITES)
    results = [run_suite(name, g=args.g, n=args.n, k=args.k) for name in names]
    ok = all(r.ok for r in results)
    report = {"g": args.g, "n": args.n, "k": args.k, "ok": ok,
              "suites": [r.to_json_obj() for r in results]}
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for r in results:
            print(f"{r.name}: {'PASS' if r.ok else 'FAIL'}")
    return 0 if ok else 1


def _parse_assign(text):
    out = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, val = item.partition("=")
        if not sep:
            raise RepError(f"expected name=value, got {item!r}")
        try:
            out[key.strip()] = Fraction(val.strip())
        except ValueError:
            out[key.strip()] = complex(val.strip().replace("i", "j"))
    return out


def cmd_specialize(args):
    assign = _parse_assign(args.assign or "")
    bad = validate_specialization(assign, g=args.g, k=1)
    if bad:
        print("rejected: " + ", ".join(bad))
        return 1
    w = parse_word(args.word, alphabet(args.g, args.n))
    arr = specialize(phi1_word(args.g, args.n, w), assign)
    if args.json:
        print(json.dumps([[str(x) for x in row] for row in arr.tolist()]))
    else:
        cells = [[str(x) for x in row] for row in arr.tolist()]
        width = max((len(c) for row in cells for c in row), default=1)
        for row in cells:
            print("[" + "  ".join(c.rjust(width) for c in row) + "]")
    return 0


def cmd_twist(args):
    ch = Character.parse(args.char or "", args.g).validate(args.n)
    w = parse_word(args.word, alphabet(args.g, args.n))
    _emit_matrix(twist(ch, phi1_word(args.g, args.n, w), w), args, args.g, args.n, 1)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfbraid",
                                description="Surface braid group representations over Z[H].")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k=True):
        sp.add_argument("--g", type=int, default=2, help="genus (default 2)")
        sp.add_argument("--n", type=int, default=3, help="strands (default 3)")
        if k:
            sp.add_argument("--k", type=int, default=1, help="points (default 1)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("rank", help="rank of the homology module")
    common(sp)
    sp.set_defaults(fn=cmd_rank)

    sp = sub.add_parser("hmul", help="normal form of a product in H")
    sp.add_argument("expr", help='factors such as "m1 l1 m1^-1 l1^-1"')
    sp.add_argument("--g", type=int, default=None, help="genus (default: largest index used)")
    sp.add_argument("--k", type=int, default=2, help="k = 1 kills t (default 2)")
    sp.set_defaults(fn=cmd_hmul)

    sp = sub.add_parser("phi1", help="Phi_1 matrix of a braid word")
    common(sp, k=False)
    sp.add_argument("--word", default="", help='braid word, e.g. "s1 a1^-1"')
    sp.set_defaults(fn=cmd_phi1)

    sp = sub.add_parser("phi2", help="curated Phi_2 matrix (g=1, n=3)")
    sp.add_argument("--gen", default="s1")
    sp.add_argument("--basis", choices=("w", "v"), default="w")
    sp.add_argument("--subst", default=None, help='"t=-t"')
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_phi2)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", action="append", choices=list(SUITES) + ["all"],
                    help="repeatable; default phi1")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("specialize", help="evaluate Phi_1 of a word at numbers")
    common(sp, k=False)
    sp.add_argument("--word", default="")
    sp.add_argument("--assign", default="", help='e.g. "q=1,m1=2"; others go to 1')
    sp.set_defaults(fn=cmd_specialize)

    sp = sub.add_parser("twist", help="Phi_1 twisted by a central character")
    common(sp, k=False)
    sp.add_argument("--word", default="")
    sp.add_argument("--char", default="", help='e.g. "a1=q,b1=q^-1"')
    sp.set_defaults(fn=cmd_twist)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (RepError, WordError, HGroupError, MatrixError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
