"""Command-line front end.

Exit codes: 0 success, 1 negative answer, 2 usage or input error (JSON on
stderr), 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import burnside as bs
from . import chain, gcw
from .classify import classify
from .exact_linalg import Ring
from .group_core import FiniteGroup, GroupError, group_from_generators, group_preset
from .resolving import (
    PPowerOrder,
    is_resolving,
    m_p,
    m_p_closed_form,
    realizable_fixed_euler,
    resolving_lattice,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _load_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def load_group(args) -> FiniteGroup:
    if args.group:
        data = _load_json(args.group)
        if "mul" in data:
            return FiniteGroup(data["mul"], name=data.get("name"))
        return group_from_generators(int(data["degree"]), data["generators"], name=data.get("name"))
    if args.preset:
        return group_preset(args.preset)
    raise UsageError("a group is required: pass --preset NAME or --group FILE")


def _ints(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}")


def _scf(lat, text):
    vals = _ints(text)
    if len(vals) != lat.num_classes:
        raise UsageError(f"expected {lat.num_classes} values (one per class), got {len(vals)}")
    return bs.SuperClassFunction(lat, tuple(vals))


def _table(header, rows):
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


# ---------------------------------------------------------------- commands

def cmd_group(args):
    G = load_group(args)
    lat = G.lattice
    if args.action == "info":
        payload = {
            "name": G.name,
            "order": G.order,
            "abelian": G.is_abelian(),
            "generators": list(G.generators),
            "num_subgroups": len(lat.subgroups),
            "num_classes": lat.num_classes,
        }
        text = "\n".join(f"{k}: {payload[k]}" for k in ("name", "order", "abelian", "num_subgroups", "num_classes"))
        _emit(args, payload, text)
        return EXIT_OK
    rows = [(lat.class_names[c], lat.class_order(c), len(lat.class_members[c]), lat.weyl_order[c])
            for c in range(lat.num_classes)]
    _emit(args, lat.to_dict(), _table(("class", "order", "conjugates", "weyl"), rows))
    return EXIT_OK


def cmd_marks(args):
    G = load_group(args)
    lat = G.lattice
    tom = bs.table_of_marks(lat)
    names = lat.class_names
    rows = [[names[c]] + list(tom.rows[c]) for c in range(lat.num_classes)]
    _emit(args, tom.to_dict(), _table(["G/K"] + list(names), rows))
    return EXIT_OK


def cmd_classify(args):
    G = load_group(args)
    d = classify(G, args.prime).to_dict()
    text = "\n".join([
        f"p-hypoelementary classes: {', '.join(d['hypoelementary_classes'])}",
        f"G in G_p^1: {str(d['in_Gp1']).lower()}",
        f"G in G_p^q for q in: {d['Gpq_primes']}",
        f"G in G_p: {str(d['in_Gp']).lower()}",
    ])
    _emit(args, d, text)
    return EXIT_OK


def cmd_burnside(args):
    G = load_group(args)
    lat = G.lattice
    if args.action == "mul":
        x, y = bs.parse_burnside(lat, _need(args.x, "--x")), bs.parse_burnside(lat, _need(args.y, "--y"))
        z = bs.burnside_mul(x, y)
        _emit(args, {"product": bs.format_burnside(z), "coeffs": list(z.coeffs), "marks": list(z.marks().values)},
              bs.format_burnside(z))
        return EXIT_OK
    if args.action == "solve":
        v = _scf(lat, _need(args.marks, "--marks"))
        x = bs.rho_solve(v)
        if x is None:
            obs = bs.psi(v)
            _emit(args, {"in_image": False, "obstruction": list(obs.residues), "moduli": list(obs.moduli)},
                  "not in the image of the mark homomorphism")
            return EXIT_NO
        _emit(args, {"in_image": True, "element": bs.format_burnside(x), "coeffs": list(x.coeffs)},
              bs.format_burnside(x))
        return EXIT_OK
    p = _need(args.prime, "--prime")
    x, y = bs.parse_burnside(lat, _need(args.x, "--x")), bs.parse_burnside(lat, _need(args.y, "--y"))
    equal = bs.conlon_equal(x, y, p)
    _emit(args, {"p": p, "equal": equal, "marks_x": list(x.marks().values), "marks_y": list(y.marks().values)},
          "equal" if equal else "not equal")
    return EXIT_OK if equal else EXIT_NO


def cmd_resolving(args):
    G = load_group(args)
    lat = G.lattice
    p = args.prime
    if args.action == "solve":
        L = resolving_lattice(lat, p)
        text = _table(list(lat.class_names), [list(v.values) for v in L.basis]) if L.basis else "0"
        _emit(args, L.to_dict(), text)
        return EXIT_OK
    cert = is_resolving(_scf(lat, _need(args.phi, "--phi")), p)
    d = cert.to_dict()
    text = "resolving" if cert.ok else f"not resolving: {d['failure']['condition']} fails at {d['failure']['class']}"
    _emit(args, d, text)
    return EXIT_OK if cert.ok else EXIT_NO


def cmd_mp(args):
    G = load_group(args)
    a, b = m_p(G, args.prime), m_p_closed_form(G, args.prime)
    _emit(args, {"p": args.prime, "lattice_gcd": a, "closed_form": b, "agree": a == b},
          f"m_{args.prime}(G) = {a} (lattice gcd), {b} (closed form)")
    if a != b:
        raise AssertionError(f"m_p mismatch: lattice gcd {a}, closed form {b}")
    return EXIT_OK


def cmd_realizable(args):
    G = load_group(args)
    ok = realizable_fixed_euler(G, args.prime, args.chi)
    m = m_p(G, args.prime)
    _emit(args, {"p": args.prime, "chi": args.chi, "m_p": m, "realizable": ok}, str(ok).lower())
    return EXIT_OK if ok else EXIT_NO


def _homology_text(H):
    return "\n".join(f"H_{i} = {H[i]}" for i in sorted(H))


def _homology_json(H):
    return {str(i): {"betti": h.betti, "torsion": h.torsion} for i, h in sorted(H.items())}


def cmd_complex(args):
    G = load_group(args)
    data = _load_json(_need(args.input, "--input"))
    if args.action == "kw-check":
        field = Ring.parse(args.field or "QQ")
        f = chain.chain_map_from_dict(G, data, field)
        try:
            cert = chain.kw_equivalence(f, field)
        except chain.NotQuasiIso as e:
            _emit(args, {"ok": False, "class": e.class_name, "degree": e.degree}, str(e))
            return EXIT_NO
        _emit(args, cert.to_dict(), f"homotopy equivalence certified over {field}")
        return EXIT_OK
    C = chain.complex_from_dict(G, data, args.ring)
    if args.action == "homology":
        P = C.underlying()
        if args.subgroup:
            P = chain.fixed_subcomplex(C, G.lattice.rep(G.lattice.class_by_name(args.subgroup)))
        H = chain.homology(P, args.ring, args.reduced)
        _emit(args, _homology_json(H), _homology_text(H))
        return EXIT_OK
    if args.action == "split-check":
        res = chain.g_split_check(C)
        if isinstance(res, chain.SplitFailure):
            _emit(args, res.to_dict(), f"not G-split: degree {res.degree}: {res.reason}")
            return EXIT_NO
        _emit(args, res.to_dict(), f"G-split: sections in degrees {sorted(res.sections)}")
        return EXIT_OK
    Q = chain.quotient_complex(C)
    H = chain.homology(Q)
    _emit(args, {"complex": Q.to_dict(), "homology": _homology_json(H)}, _homology_text(H))
    return EXIT_OK


_BUILTINS = {
    "point": gcw.point,
    "simplex": gcw.full_simplex,
    "boundary": gcw.simplex_boundary,
}


def _load_complex(args, G):
    if args.builtin:
        K = _BUILTINS[args.builtin](G)
    else:
        K = gcw.GSimplicialComplex.from_dict(G, _load_json(_need(args.input, "--input")))
    for op in args.pre or []:
        K = gcw.barycentric_subdivision(K) if op == "sd" else gcw.cone(K)
    return K


def cmd_gcw(args):
    G = load_group(args)
    lat = G.lattice
    K = _load_complex(args, G)
    act = args.action
    if act in ("sd", "cone"):
        out = gcw.barycentric_subdivision(K) if act == "sd" else gcw.cone(K)
        _emit(args, out.to_dict(), f"f-vector {out.f_vector()}")
        return EXIT_OK
    if act == "regular":
        w = gcw.validate_regular(K)
        if w is None:
            _emit(args, {"regular": True}, "regular")
            return EXIT_OK
        _emit(args, {"regular": False, "element": w[0], "simplex": list(w[1])},
              f"not regular: element {w[0]} reverses simplex {list(w[1])}")
        return EXIT_NO
    if act == "fixed":
        h = lat.rep(lat.class_by_name(_need(args.subgroup, "--subgroup")))
        F = gcw.fixed_complex(K, h)
        _emit(args, {"f_vector": F.f_vector(), "euler": F.euler_char(), "simplices": [list(s) for s in F.simplices]},
              f"f-vector {F.f_vector()}, euler characteristic {F.euler_char()}")
        return EXIT_OK
    if act == "chain":
        C = gcw.cellular_chain_complex(K, args.ring or "ZZ", augmented=args.augmented)
        _emit(args, C.to_dict(), f"special complex with dims {C.dims()}")
        return EXIT_OK
    if act == "quotient":
        C = gcw.cellular_chain_complex(K, args.ring or "ZZ")
        Q = chain.quotient_complex(C)
        H = chain.homology(Q)
        _emit(args, {"complex": Q.to_dict(), "homology": _homology_json(H), "acyclic": chain.is_acyclic(Q)},
              _homology_text(H))
        return EXIT_OK
    x = gcw.burnside_class(K)
    eul = [gcw.euler_char(K, lat.rep(c)) for c in range(lat.num_classes)]
    marks = list(x.marks().values)
    _emit(args, {"element": bs.format_burnside(x), "coeffs": list(x.coeffs), "marks": marks, "fixed_euler": eul},
          f"{bs.format_burnside(x)}\nmarks {marks}")
    if marks != eul:
        raise AssertionError("marks disagree with fixed-point Euler characteristics")
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--preset", help="catalog group, e.g. S3, D4, C2xC2, A5")
    src.add_argument("--group", help="group JSON file: {degree, generators} or {mul}")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="orbitcat", description="Burnside rings, resolving functions and special G-complexes.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("group", parents=[common])
    p.add_argument("action", choices=["info", "lattice"])
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("marks", parents=[common])
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("burnside", parents=[common])
    p.add_argument("action", choices=["mul", "solve", "conlon"])
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--marks", help="super class function, one value per class")
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_burnside)

    p = sub.add_parser("resolving", parents=[common])
    p.add_argument("action", choices=["solve", "check"])
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--phi", help="values per class")
    p.set_defaults(func=cmd_resolving)

    p = sub.add_parser("mp", parents=[common])
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("realizable", parents=[common])
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.set_defaults(func=cmd_realizable)

    p = sub.add_parser("complex", parents=[common])
    p.add_argument("action", choices=["homology", "split-check", "kw-check", "quotient"])
    p.add_argument("--input", help="complex JSON (chain map JSON for kw-check); '-' reads stdin")
    p.add_argument("--ring", help="ZZ, QQ or GF(p)")
    p.add_argument("--field", help="QQ or GF(p) for kw-check")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--subgroup", help="class name; homology of the fixed subcomplex")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("gcw", parents=[common])
    p.add_argument("action", choices=["sd", "cone", "fixed", "chain", "quotient", "class", "regular"])
    p.add_argument("--input", help="simplicial JSON: {vertices, action, simplices}")
    p.add_argument("--builtin", choices=sorted(_BUILTINS), help="complex on the group's defining points")
    p.add_argument("--pre", action="append", choices=["sd", "cone"],
                   help="apply sd or cone to the input first (repeatable, in order)")
    p.add_argument("--subgroup")
    p.add_argument("--ring")
    p.add_argument("--augmented", action="store_true")
    p.set_defaults(func=cmd_gcw)
    return parser


def _fail(kind, message, code):
    print(json.dumps({"error": kind, "message": message}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "ring") and args.ring:
            Ring.parse(args.ring)
        return args.func(args)
    except UsageError as e:
        return _fail("usage", str(e), EXIT_USAGE)
    except (GroupError, chain.ChainError, gcw.NotRegular, PPowerOrder, ValueError, KeyError, OSError) as e:
        return _fail(type(e).__name__, str(e), EXIT_USAGE)
    except AssertionError as e:
        return _fail("internal", str(e), EXIT_INTERNAL)


if __name__ == "__main__":
    sys.exit(main())
