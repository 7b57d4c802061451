"""Command-line front end.

Words are comma-separated 1-based simple-reflection indices; ``e`` or an empty
string is the identity.  Exit codes: 0 ok, 1 computation error, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import polyops
from .coeffring import format_scalar, scalar_to_json
from .errors import InvalidTypeError, NilHeckeError, NotReducedError
from .rootdata import parse_type, root_datum
from .weyl import GroupTable, generate, group_cap, group_order, is_reduced

ALGOS = ("recursive", "complete", "bs", "bij", "loc", "hecke")


# -- argument types

def _type_arg(text: str):
    try:
        return root_datum(parse_type(text))
    except InvalidTypeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        word = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad word {text!r}: expected e.g. 1,2,1") from None
    if any(i < 1 for i in word):
        raise argparse.ArgumentTypeError(f"bad word {text!r}: indices start at 1")
    return word


def _set_arg(text: str) -> frozenset[int]:
    return frozenset(_word_arg(text))


# -- helpers

def _check_word(datum, word, what: str) -> tuple[int, ...]:
    if any(i > datum.n for i in word):
        raise NilHeckeError(f"{what}={list(word)} uses an index above the rank {datum.n}")
    return word


def _table(datum) -> GroupTable:
    return generate(datum)


def _fits(datum) -> bool:
    return group_order(datum) <= group_cap()


def _index(table: GroupTable, word, what: str) -> int:
    _check_word(table.datum, word, what)
    if not is_reduced(table.datum, word):
        raise NotReducedError(f"{what}={list(word)} is not a reduced word")
    return table.from_word(word)


def _w(table, k) -> list[int]:
    return list(table.words[k])


class Output:
    def __init__(self, args):
        self.json = args.json
        self.base = args.var_base

    def poly(self, p) -> str:
        return p.to_str(self.base)

    def emit(self, query: dict, result, algo=None, text: str | None = None):
        if self.json:
            print(json.dumps({"query": query, "result": result, "algo": algo}, sort_keys=True))
        else:
            print(text)


# -- subcommands

def cmd_group_info(args, out: Output) -> int:
    d = args.type
    table = _table(d)
    ring = d.ring
    info = {
        "type": d.name,
        "rank": d.n,
        "order": table.order,
        "roots": 2 * len(d.positive_roots),
        "positive_roots": len(d.positive_roots),
        "lattice": d.lattice,
        "lattice_index": d.lattice_index,
        "crystallographic": d.is_crystallographic,
        "cartan": [[scalar_to_json(x) for x in row] for row in d.cartan],
        "longest_word": _w(table, table.longest),
        "coefficient_ring": "Z" if ring.degree == 1 else ring.to_json(),
    }
    lines = [f"type: {d.name}", f"order: {table.order}", f"roots: {info['roots']}",
             f"index: {d.lattice_index}",
             "ring: " + ("Z" if ring.degree == 1 else f"Z[tau], tau = 2cos(pi/{ring.m}), "
                         f"minimal polynomial coefficients {list(ring.minimal_polynomial)}"),
             f"crystallographic: {'yes' if d.is_crystallographic else 'no'}",
             "cartan: " + "; ".join(" ".join(format_scalar(x) for x in row) for row in d.cartan),
             "longest: " + ",".join(map(str, info["longest_word"]))]
    out.emit({"cmd": "group-info", "type": d.name}, info, None, "\n".join(lines))
    return 0


def _schub_value(d, algo, w_word, u_word, v_word):
    from .structconst import compute, p_complete
    if not _fits(d):
        if algo not in ("recursive", "complete"):
            raise NilHeckeError(f"the group of {d.name} is above the cap; only word-based evaluation "
                                f"(--algo complete) is available")
        for name, word in (("w", w_word), ("u", u_word), ("v", v_word)):
            _check_word(d, word, name)
        return p_complete(d, w_word, u_word, v_word), "complete"
    table = _table(d)
    w = _index(table, w_word, "w")
    u = _index(table, u_word, "u")
    v = _index(table, v_word, "v")
    if algo != "all":
        return compute(table, algo, w, u, v), algo
    values = {}
    for a in ALGOS:
        if a == "hecke" and table.lengths[u] + table.lengths[v] != table.lengths[w]:
            continue
        values[a] = compute(table, a, w, u, v)
    first = next(iter(values.values()))
    bad = [a for a, p in values.items() if p != first]
    if bad:
        raise NilHeckeError(f"algorithms disagree: {', '.join(bad)} differ from recursive")
    return first, "all"


def cmd_schub(args, out: Output) -> int:
    d = args.type
    if args.all_pairs:
        from .structconst import compute
        table = _table(d)
        w = _index(table, args.w, "w")
        algo = "recursive" if args.algo == "all" else args.algo
        rows = []
        ideal = sorted(table.lower_ideal(w))
        for u in ideal:
            for v in ideal:
                if algo == "hecke" and table.lengths[u] + table.lengths[v] != table.lengths[w]:
                    continue
                p = compute(table, algo, w, u, v)
                if p:
                    rows.append({"u": _w(table, u), "v": _w(table, v), "w": _w(table, w),
                                 "polynomial": out.poly(p), "algo": algo})
        text = "\n".join(f"u={','.join(map(str, r['u'])) or 'e'} v={','.join(map(str, r['v'])) or 'e'}: "
                         f"{r['polynomial']}" for r in rows)
        out.emit({"cmd": "schub", "type": d.name, "w": list(args.w), "all_pairs": True}, rows, algo, text)
        return 0
    if args.u is None or args.v is None:
        raise NilHeckeError("--u and --v are required unless --all-pairs is given")
    p, used = _schub_value(d, args.algo, args.w, args.u, args.v)
    query = {"cmd": "schub", "type": d.name, "w": list(args.w), "u": list(args.u), "v": list(args.v)}
    out.emit(query, {"polynomial": out.poly(p), "terms": p.to_json()}, used, out.poly(p))
    return 0


def cmd_transition(args, out: Output) -> int:
    from .structconst import transition_matrices
    d = args.type
    table = _table(d)
    w = _index(table, args.w, "w")
    v = _index(table, args.v, "v")
    tm = transition_matrices(table)
    c = tm.check_c(w, v) if args.check else tm.c(w, v)
    dv = tm.d(w, v)
    query = {"cmd": "transition", "type": d.name, "w": list(args.w), "v": list(args.v)}
    result = {"c": c.to_str(out.base), "d": out.poly(dv)}
    out.emit(query, result, "expansion", f"c = {result['c']}\nd = {result['d']}")
    return 0


def cmd_billey(args, out: Output) -> int:
    from .twistedalg import billey_d
    d = args.type
    table = _table(d)
    u = _index(table, args.u, "u")
    v = _index(table, args.v, "v")
    p = billey_d(table, u, v, args.v)
    query = {"cmd": "billey", "type": d.name, "u": list(args.u), "v": list(args.v)}
    out.emit(query, {"polynomial": out.poly(p)}, "billey", out.poly(p))
    return 0


def cmd_smooth(args, out: Output) -> int:
    from .smoothness import parabolic_smooth, report
    d = args.type
    table = _table(d)
    w = _index(table, args.w, "w")
    if args.parabolic is not None:
        ok = parabolic_smooth(table, w, args.parabolic)
        query = {"cmd": "smooth", "type": d.name, "w": list(args.w), "J": sorted(args.parabolic)}
        out.emit(query, {"smooth": ok}, None, f"smooth: {'yes' if ok else 'no'}")
        return 0
    v = _index(table, args.v, "v")
    rep = report(table, w, v, rational=args.rational)
    data = rep.to_json(table, out.base)
    lines = [
        "S: " + "; ".join("(" + ",".join(format_scalar(x) for x in d.positive_roots[b]) + ")"
                          for b in rep.s_set),
        f"c': {data['c_prime']}",
        f"smooth: {'yes' if rep.smooth else 'no'}",
    ]
    if rep.rationally_smooth is not None:
        lines.append(f"rationally smooth: {'yes' if rep.rationally_smooth else 'no'}")
    lines.append(f"verdict: {rep.kind}")
    text = "\n".join(lines)
    query = {"cmd": "smooth", "type": d.name, "w": list(args.w), "v": list(args.v)}
    out.emit(query, data, None, text)
    return 0


def cmd_rank2(args, out: Output) -> int:
    from .structconst import rank2_from_datum
    d = args.type
    data = rank2_from_datum(d)
    m = data.m
    rows = []
    for r in range(1, m):
        for t in range(1, m - r + 1):
            rows.append({"r": r, "t": t, "C": data.C(r, t), "D": data.D(r, t)})
    lines = ["A: " + ", ".join(format_scalar(x) for x in data.A),
             "B: " + ", ".join(format_scalar(x) for x in data.B)]
    lines += [f"C({x['r']},{x['t']}) = {format_scalar(x['C'])}   D({x['r']},{x['t']}) = {format_scalar(x['D'])}"
              for x in rows]
    result = {"m": m, "A": [scalar_to_json(x) for x in data.A], "B": [scalar_to_json(x) for x in data.B],
              "binomials": [{"r": x["r"], "t": x["t"], "C": scalar_to_json(x["C"]),
                             "D": scalar_to_json(x["D"])} for x in rows]}
    out.emit({"cmd": "rank2", "type": d.name}, result, None, "\n".join(lines))
    return 0


def cmd_ck_schub(args, out: Output) -> int:
    from .connective import ck_coproduct, ck_coproduct_coefficient, ck_specialize
    d = args.type
    table = _table(d)
    w = _index(table, args.w, "w")
    if (args.u is None) != (args.v is None):
        raise NilHeckeError("give both --u and --v, or neither for the full table")
    if args.u is not None:
        key = (_index(table, args.u, "u"), _index(table, args.v, "v"))
        pairs = {key: ck_coproduct_coefficient(table, w, *key)}
    else:
        pairs = ck_coproduct(table, w)

    def render(u, v, val):
        if args.specialize is None:
            return str(val), val.to_json()
        cap = table.lengths[u] + table.lengths[v]
        s = ck_specialize(val, args.specialize, cap)
        if args.specialize == "t0":
            return out.poly(s), s.to_json()
        return str(s), s.to_json()

    rows = []
    for (u, v), val in sorted(pairs.items(), key=lambda kv: (table.lengths[kv[0][0]], kv[0][0],
                                                              table.lengths[kv[0][1]], kv[0][1])):
        text, js = render(u, v, val)
        if text == "0":
            continue
        rows.append({"u": _w(table, u), "v": _w(table, v), "text": text, "value": js})
    lines = [f"u={','.join(map(str, r['u'])) or 'e'} v={','.join(map(str, r['v'])) or 'e'}: {r['text']}"
             for r in rows]
    query = {"cmd": "ck-schub", "type": d.name, "w": list(args.w), "specialize": args.specialize}
    out.emit(query, rows, "recursive", "\n".join(lines) if lines else "0")
    return 0


def cmd_selftest(args, out: Output) -> int:
    from .selftest import run_selftest
    results = run_selftest(verbose=not args.json)
    failed = [r for r in results if r["status"] == "FAIL"]
    if args.json:
        print(json.dumps({"query": {"cmd": "selftest"}, "result": results, "algo": None}, sort_keys=True))
    if failed:
        print("selftest failed: " + ", ".join(r["anchor"] for r in failed), file=sys.stderr)
        return 1
    return 0


# -- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilhecke", description="Equivariant Schubert calculus on nil-Hecke rings")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--var-base", type=int, default=polyops.DEFAULT_VAR_BASE,
                        help="index of the variable naming alpha_1 (default %(default)s)")
    typed = argparse.ArgumentParser(add_help=False, parents=[common])
    typed.add_argument("--type", type=_type_arg, required=True,
                       help="root datum, e.g. A3, G2, H3, I2(5):normalized, B2@weight")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("group-info", parents=[typed], help="order, roots and Cartan data")
    p.set_defaults(func=cmd_group_info)

    p = sub.add_parser("schub", parents=[typed], help="structure constants p^w_{u,v}")
    p.add_argument("--w", type=_word_arg, required=True)
    p.add_argument("--u", type=_word_arg)
    p.add_argument("--v", type=_word_arg)
    p.add_argument("--algo", choices=ALGOS + ("all",), default="recursive")
    p.add_argument("--all-pairs", action="store_true", help="every nonzero p^w_{u,v}")
    p.set_defaults(func=cmd_schub)

    p = sub.add_parser("transition", parents=[typed], help="transition coefficients c_{w,v}, d_{w,v}")
    p.add_argument("--w", type=_word_arg, required=True)
    p.add_argument("--v", type=_word_arg, required=True)
    p.add_argument("--check", action="store_true", help="recompute c by the subsequence sum")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("billey", parents=[typed], help="d_{u,v} by the subword product formula")
    p.add_argument("--u", type=_word_arg, required=True)
    p.add_argument("--v", type=_word_arg, required=True, help="reduced word of v used by the formula")
    p.set_defaults(func=cmd_billey)

    p = sub.add_parser("smooth", parents=[typed], help="smoothness of X(w) at v")
    p.add_argument("--w", type=_word_arg, required=True)
    p.add_argument("--v", type=_word_arg, default=())
    p.add_argument("--rational", action="store_true", help="also decide rational smoothness")
    p.add_argument("--parabolic", type=_set_arg, metavar="J",
                   help="test X^J(w) for a minimal coset representative w")
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("rank2", parents=[typed], help="rank-2 sequences and binomials")
    p.set_defaults(func=cmd_rank2)

    p = sub.add_parser("ck-schub", parents=[typed], help="connective K-theory constants")
    p.add_argument("--w", type=_word_arg, required=True)
    p.add_argument("--u", type=_word_arg)
    p.add_argument("--v", type=_word_arg)
    p.add_argument("--specialize", choices=("t0", "t1"))
    p.set_defaults(func=cmd_ck_schub)

    p = sub.add_parser("selftest", parents=[common], help="golden values and cross-checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, Output(args))
    except NilHeckeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RecursionError:
        print("error: recursion limit reached", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


__all__ = ["main", "build_parser", "entry"]
