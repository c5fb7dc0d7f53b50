"""Command-line front end: enumeration, characters, verification, graphs.

Exit codes: 0 success (and all verified identities holding), 1 verification
mismatch, 2 usage errors, 3 node-budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters as ch
from .cartan import CartanDatum, build
from .peterson import ParabolicQuotient
from .qls import QLSCrystal
from .sils import SiLSCrystal, SiLSPath
from .weyl import (
    AffineWeylElt,
    BudgetExceeded,
    FiniteWeylElt,
    affine_identity,
    finite_from_word,
)

USAGE_ERROR = 2
BUDGET_ERROR = 3


def _parse_lambda(datum: CartanDatum, text: str) -> tuple[int, ...]:
    parts = tuple(int(p) for p in text.split(","))
    if len(parts) != datum.rank or any(p < 0 for p in parts):
        raise ValueError(f"lambda {text!r} is not dominant of rank {datum.rank}")
    return parts


def _parse_finite_word(datum: CartanDatum, text: str) -> FiniteWeylElt:
    word = [int(p) for p in text.split(",") if p != ""]
    if any(not 1 <= i <= datum.rank for i in word):
        raise ValueError(f"word {text!r} uses nodes outside 1..{datum.rank}")
    return finite_from_word(datum, word)


def _parse_x(datum: CartanDatum, text: str) -> AffineWeylElt:
    """Parse "word|coweight", e.g. "1,2|0,1"; both halves may be empty."""
    word_text, _, xi_text = text.partition("|")
    w = _parse_finite_word(datum, word_text)
    xi = tuple(int(p) for p in xi_text.split(",")) if xi_text else (0,) * datum.rank
    if len(xi) != datum.rank:
        raise ValueError(f"coweight in {text!r} must have {datum.rank} entries")
    return AffineWeylElt(w, xi)


def _direction_json(x: AffineWeylElt) -> dict:
    return {"w": list(x.w.reduced_word()), "xi": list(x.xi)}


def _path_json(crystal: SiLSCrystal, eta: SiLSPath) -> dict:
    wt = crystal.weight(eta)
    return {
        "directions": [_direction_json(x) for x in eta.directions],
        "cuts": [str(a) for a in eta.cuts],
        "weight": {"fw": list(wt.fw), "delta": wt.delta},
    }


def _character_json(meta: dict, gc: ch.GradedCharacter) -> dict:
    return {
        "meta": meta,
        "terms": [
            {"fw": list(fw), "q": q, "coeff": c} for fw, q, c in gc.sorted_terms()
        ],
    }


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cmd_root_system(args) -> int:
    datum = build(args.type, args.rank)
    _emit(
        {
            "type": datum.type_label,
            "rank": datum.rank,
            "cartan_matrix": [list(r) for r in datum.cartan],
            "symmetrizer": list(datum.sym),
            "positive_roots": [list(u) for u in datum.pos_roots],
            "theta": list(datum.theta),
            "marks": [1] + list(datum.marks),
            "comarks": [1] + list(datum.comarks),
            "sigma": list(datum.sigma),
        }
    )
    return 0


def _cmd_si_graph(args) -> int:
    datum = build(args.type, args.rank)
    lam = _parse_lambda(datum, getattr(args, "lambda"))
    quotient = ParabolicQuotient.for_weight(datum, lam)
    a = Fraction(args.a) if args.a else None
    ball = [
        x
        for x in quotient.si_ball(args.radius)
        if -args.radius <= x.si_length <= args.radius
    ]

    def node_name(x: AffineWeylElt) -> str:
        word = "".join(map(str, x.w.reduced_word())) or "e"
        xi = ",".join(map(str, x.xi))
        return f"{word} | {xi}"

    lines = ["digraph si_bruhat {"]
    for x in ball:
        lines.append(f'  "{node_name(x)}";')
    in_ball = set(ball)
    for x in ball:
        for beta, y in quotient.si_covers(x, a):
            if y in in_ball:
                label = "+".join(
                    filter(None, [str(list(beta.finite)), f"{beta.n}d" if beta.n else ""])
                )
                lines.append(f'  "{node_name(x)}" -> "{node_name(y)}" [label="{label}"];')
    lines.append("}")
    print("\n".join(lines))
    return 0


def _cmd_sils(args) -> int:
    datum = build(args.type, args.rank)
    lam = _parse_lambda(datum, getattr(args, "lambda"))
    crystal = SiLSCrystal(datum, lam)
    x = _parse_x(datum, args.x) if args.x else affine_identity(datum)
    # the truncated set only depends on the coset of x, so normalize it
    x = crystal.quotient.project(x)
    paths = crystal.enumerate_demazure(x, args.depth, budget=args.budget)
    if args.out == "json":
        for eta in paths:
            _emit(_path_json(crystal, eta))
    else:
        index = {eta: k for k, eta in enumerate(paths)}
        print("digraph sils {")
        for k, eta in enumerate(paths):
            print(f'  "p{k}" [label="{eta!r}"];')
        for eta, k in index.items():
            for j in range(datum.rank + 1):
                img = crystal.root_f(eta, j)
                if img is not None and img in index:
                    print(f'  "p{k}" -> "p{index[img]}" [label="f{j}"];')
        print("}")
    return 0


def _cmd_qls(args) -> int:
    datum = build(args.type, args.rank)
    lam = _parse_lambda(datum, getattr(args, "lambda"))
    crystal = QLSCrystal(datum, lam)
    for psi in crystal.paths():
        _emit(
            {
                "directions": [list(w.reduced_word()) for w in psi.directions],
                "cuts": [str(a) for a in psi.cuts],
                "weight": list(crystal.weight(psi)),
                "deg_tail": crystal.deg_tail(psi),
                "kappa_of_lift": list(crystal.kappa_direction(psi).reduced_word()),
                "iota_of_tilde_lift": list(crystal.iota_direction(psi).reduced_word()),
            }
        )
    return 0


def _diff_report(name: str, lhs: ch.GradedCharacter, rhs: ch.GradedCharacter) -> None:
    print(f"MISMATCH in {name}", file=sys.stderr)
    for key in sorted(set(lhs.terms) | set(rhs.terms), key=lambda t: (t[1], t[0])):
        a, b = lhs.terms.get(key, 0), rhs.terms.get(key, 0)
        if a != b:
            print(f"  fw={list(key[0])} q={key[1]}: {a} vs {b}", file=sys.stderr)


def _cmd_char(args) -> int:
    datum = build(args.type, args.rank)
    lam = _parse_lambda(datum, getattr(args, "lambda"))
    meta = {
        "type": datum.type_label,
        "rank": datum.rank,
        "lambda": list(lam),
        "depth": args.depth,
    }
    mode = args.mode
    if mode == "macdonald":
        _emit(_character_json(meta, ch.macdonald_t0(datum, lam)))
    elif mode == "demazure-minus":
        _emit(_character_json(meta, ch.gch_demazure_minus_e(datum, lam, args.depth)))
    elif mode == "demazure-plus":
        _emit(_character_json(meta, ch.gch_demazure_plus_w0(datum, lam, args.depth)))
    elif mode in ("quotient-minus", "quotient-plus"):
        if args.w is None:
            raise ValueError("quotient characters require --w")
        w = _parse_finite_word(datum, args.w)
        fn = ch.gch_quotient_minus if mode == "quotient-minus" else ch.gch_quotient_plus
        _emit(_character_json(meta, fn(datum, lam, w)))
    elif mode == "verify-grch1":
        closed = ch.gch_demazure_minus_e(datum, lam, args.depth)
        brute = ch.brute_force_gch_minus_e(datum, lam, args.depth, budget=args.budget)
        if closed != brute:
            _diff_report("graded character of the minus Demazure module", closed, brute)
            return 1
        print(f"verified: minus Demazure character, depth {args.depth}, "
              f"{len(closed.terms)} terms")
    elif mode == "verify-grch2":
        plus = ch.gch_demazure_plus_w0(datum, lam, args.depth)
        dual_lam = tuple(lam[datum.sigma[i] - 1] for i in range(datum.rank))
        minus = ch.gch_demazure_minus_e(datum, dual_lam, args.depth)
        flipped = minus.invert_q().invert_x()
        if plus != flipped:
            _diff_report("plus/minus Demazure duality", plus, flipped)
            return 1
        print(f"verified: plus Demazure character duality, depth {args.depth}, "
              f"{len(plus.terms)} terms")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="silspath",
        description="exact level-zero path crystals and graded characters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)

    p = sub.add_parser("root-system", help="print the root-system tables")
    common(p)
    p.set_defaults(fn=_cmd_root_system)

    p = sub.add_parser("si-graph", help="cover graph around the identity as DOT")
    common(p)
    p.add_argument("--lambda", required=True)
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--a", default=None, help="rational level p/q for the subgraph")
    p.set_defaults(fn=_cmd_si_graph)

    p = sub.add_parser("sils", help="path enumeration")
    p.add_argument("action", choices=["enumerate"])
    common(p)
    p.add_argument("--lambda", required=True)
    p.add_argument("--x", default=None, help='final-direction bound, "word|coweight"')
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--out", choices=["json", "dot"], default="json")
    p.add_argument("--budget", type=int, default=500_000)
    p.set_defaults(fn=_cmd_sils)

    p = sub.add_parser("qls", help="finite quantum path crystal")
    p.add_argument("action", choices=["enumerate"])
    common(p)
    p.add_argument("--lambda", required=True)
    p.set_defaults(fn=_cmd_qls)

    p = sub.add_parser("char", help="graded characters and verification")
    p.add_argument(
        "mode",
        choices=[
            "macdonald",
            "demazure-minus",
            "demazure-plus",
            "quotient-minus",
            "quotient-plus",
            "verify-grch1",
            "verify-grch2",
        ],
    )
    common(p)
    p.add_argument("--lambda", required=True)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--w", default=None, help="reduced word, e.g. 1,2")
    p.add_argument("--budget", type=int, default=500_000)
    p.set_defaults(fn=_cmd_char)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc} (partial results discarded)", file=sys.stderr)
        return BUDGET_ERROR


if __name__ == "__main__":
    sys.exit(main())
