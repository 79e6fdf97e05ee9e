"""Command-line surface: ``sginv <subcommand> <file> [flags]``.

Exit codes: 0 success, 1 computation error (unbalanced weights, crossing cap
exceeded, no Hamiltonian cycle, ...), 2 input error (unreadable file, broken
JSON, unknown flags).  Output is deterministic: identical input and flags
give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .alexander import (WeightError, alexander_polynomial, graph_determinant,
                        wirtinger_presentation)
from .constituents import (conway_gordon_sum, enumerate_constituents,
                           _fingerprint_value)
from .diagram import (DiagramError, derive_edges, parse_document,
                      seg_to_edge_id, validate)
from .quandle import (FiniteQuandle, QuandleError, count_colorings,
                      dihedral_quandle, is_p_colorable, trivial_quandle,
                      verify_quandle)
from .yamada import yamada_normalized, yamada_raw

DEFAULT_MAX_CROSSINGS = 18


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(2, f"cannot read {path}: {exc.strerror}") from None


def _load(path, check=True):
    try:
        return parse_document(_read(path), check=check)
    except DiagramError as exc:
        raise CliError(2, f"{path}: {exc}") from None


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(args, payload, text):
    print(_dump(payload) if args.json else text)


def _resolve_weights(d, file_weights, flag_weights):
    eids = set(seg_to_edge_id(derive_edges(d)).values())
    weights = {e: 1 for e in sorted(eids)}
    for source in (file_weights or {}, flag_weights):
        for eid, w in source.items():
            if eid not in eids:
                raise CliError(2, f"unknown edge {eid}")
            weights[eid] = w
    return weights


def _parse_weight_flags(pairs):
    out = {}
    for raw in pairs or []:
        eid, sep, value = raw.partition("=")
        if not sep or not eid.startswith("e"):
            raise CliError(2, f"bad --weight {raw!r}; expected e<k>=<int>")
        try:
            out[eid] = int(value)
        except ValueError:
            raise CliError(2, f"bad --weight {raw!r}; expected e<k>=<int>") from None
    return out


def _crossing_cap(args):
    if args.max_crossings is not None:
        return args.max_crossings
    env = os.environ.get("SGINV_MAX_CROSSINGS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(2, f"bad SGINV_MAX_CROSSINGS value {env!r}") from None
    return DEFAULT_MAX_CROSSINGS


def _check_cap(d, args):
    cap = _crossing_cap(args)
    if len(d.crossings) > cap:
        raise CliError(1, f"diagram has {len(d.crossings)} crossings, above "
                          f"the cap of {cap}; raise --max-crossings")


def _quandle_from_args(args):
    if args.dihedral is not None:
        return dihedral_quandle(args.dihedral)
    if args.trivial is not None:
        return trivial_quandle(args.trivial)
    try:
        doc = json.loads(_read(args.quandle))
        op = doc["op"]
        if len(op) != int(doc["n"]):
            raise CliError(2, f"{args.quandle}: op table size disagrees with n")
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(2, f"{args.quandle}: bad quandle table: {exc}") from None
    bad = verify_quandle(op)
    if bad:
        axiom, witness = bad[0]
        raise CliError(2, f"{args.quandle}: axiom {axiom} fails at {witness}")
    return FiniteQuandle.from_op(op)


# -- subcommand handlers ----------------------------------------------------

def _cmd_validate(args):
    d, _ = _load(args.file, check=False)
    issues = validate(d)
    if args.json:
        print(_dump({"valid": not issues, "violations": issues}))
    else:
        print("ok" if not issues else "\n".join(issues))
    return 0 if not issues else 1


def _cmd_yamada(args):
    d, _ = _load(args.file)
    _check_cap(d, args)
    poly = yamada_normalized(d).normalized if args.normalized else yamada_raw(d)
    _emit(args, {"yamada": poly.to_pairs()}, str(poly))
    return 0


def _cmd_alexander(args):
    d, file_weights = _load(args.file)
    weights = _resolve_weights(d, file_weights, _parse_weight_flags(args.weight))
    poly = alexander_polynomial(d, weights)
    _emit(args, {"alexander": poly.to_pairs()}, str(poly))
    return 0


def _cmd_determinant(args):
    d, file_weights = _load(args.file)
    weights = _resolve_weights(d, file_weights, _parse_weight_flags(args.weight))
    det = graph_determinant(d, weights)
    _emit(args, {"determinant": det}, str(det))
    return 0


def _cmd_colorings(args):
    d, _ = _load(args.file)
    count = count_colorings(d, _quandle_from_args(args))
    _emit(args, {"colorings": count}, str(count))
    return 0


def _cmd_pcolor(args):
    d, _ = _load(args.file)
    answer = is_p_colorable(d, args.p)
    _emit(args, {"p_colorable": answer},
          "colorable" if answer else "not colorable")
    return 0


def _cmd_constituents(args):
    d, _ = _load(args.file)
    members = enumerate_constituents(d)
    if args.drop_empty:
        members = [m for m in members if not m.is_empty]
    entries = []
    values = []
    for m in members:
        value = _fingerprint_value(m.diagram, args.invariant)
        values.append(value)
        entries.append({
            "choice": [[vid, list(pair)] for vid, pair in m.choice],
            "components": m.components,
            "fingerprint": value,
        })
    doc = {"constituents": entries,
           "multiset": sorted(values, key=lambda v: (str(v), repr(v)))}
    print(_dump(doc))
    return 0


def _cmd_group(args):
    d, _ = _load(args.file)
    pres = wirtinger_presentation(d)
    if args.json:
        print(_dump({"generators": list(pres.generators),
                     "relators": [[[g, e] for g, e in rel]
                                  for rel in pres.relators]}))
    else:
        print(pres.render())
    return 0


def _cmd_cg(args):
    d, _ = _load(args.file)
    total = conway_gordon_sum(d)
    _emit(args, {"conway_gordon": total}, str(total))
    return 0


# -- parser -----------------------------------------------------------------

def _prime(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if p < 2 or any(p % i == 0 for i in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="diagram JSON file")
    common.add_argument("--json", action="store_true",
                        help="emit JSON instead of plain text")

    top = argparse.ArgumentParser(
        prog="sginv", description="spatial-graph invariants")
    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common],
                   help="check diagram wiring").set_defaults(func=_cmd_validate)

    p = sub.add_parser("yamada", parents=[common], help="Yamada polynomial")
    p.add_argument("--normalized", action="store_true",
                   help="report the unit-normalized polynomial")
    p.add_argument("--max-crossings", type=int, default=None,
                   help=f"crossing cap (default {DEFAULT_MAX_CROSSINGS}, "
                        "or SGINV_MAX_CROSSINGS)")
    p.set_defaults(func=_cmd_yamada)

    for name, func, title in (("alexander", _cmd_alexander,
                               "Alexander polynomial"),
                              ("determinant", _cmd_determinant,
                               "determinant of the diagram")):
        p = sub.add_parser(name, parents=[common], help=title)
        p.add_argument("--weight", action="append", metavar="e<k>=<int>",
                       help="override the weight of one edge (repeatable)")
        p.set_defaults(func=func)

    p = sub.add_parser("colorings", parents=[common],
                       help="count quandle colorings")
    pick = p.add_mutually_exclusive_group(required=True)
    pick.add_argument("--dihedral", type=int, metavar="N",
                      help="dihedral quandle R_N")
    pick.add_argument("--trivial", type=int, metavar="N",
                      help="trivial quandle of order N")
    pick.add_argument("--quandle", metavar="TABLE.json",
                      help='explicit table {"n": ..., "op": [[...]]}')
    p.set_defaults(func=_cmd_colorings)

    p = sub.add_parser("pcolor", parents=[common],
                       help="Fox p-colorability")
    p.add_argument("--p", type=_prime, required=True, help="an odd prime")
    p.set_defaults(func=_cmd_pcolor)

    p = sub.add_parser("constituents", parents=[common],
                       help="constituent links and fingerprint")
    p.add_argument("--invariant", required=True,
                   choices=("yamada", "alexander", "determinant"))
    p.add_argument("--drop-empty", action="store_true",
                   help="omit choices that leave no closed component")
    p.set_defaults(func=_cmd_constituents)

    sub.add_parser("group", parents=[common],
                   help="fundamental group presentation"
                   ).set_defaults(func=_cmd_group)
    sub.add_parser("cg", parents=[common],
                   help="Conway-Gordon sum over Hamiltonian constituents"
                   ).set_defaults(func=_cmd_cg)
    return top


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"sginv: {exc}", file=sys.stderr)
        return exc.code
    except (DiagramError, WeightError, QuandleError) as exc:
        print(f"sginv: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
