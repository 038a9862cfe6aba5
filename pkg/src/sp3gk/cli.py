"""Command-line frontend with machine-readable JSON output.

Every subcommand prints deterministic JSON (fixed term orderings) so that
outputs can be diffed byte for byte; ``verify`` runs the exact verification
sweeps and exits nonzero on any failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import clebsch, contiguous, glmodule, suites, whittaker
from .gtpattern import (Pattern, SigmaChar, enumerate_patterns, l_index,
                        l_sigma_index, sigma_enumerate)


def _parse_triple(text: str) -> tuple:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three integers: {text!r}")
    return tuple(parts)


def _parse_pattern(text: str) -> Pattern:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            f"expected m13,m23,m33,m12,m22,m11: {text!r}")
    return Pattern(*parts)


def _parse_dir(text: str) -> tuple:
    if text in ("e1", "e2", "e3"):
        return ("vec", int(text[1]))
    if len(text) == 3 and text[0] in "+-":
        kind = "pos" if text[0] == "+" else "neg"
        return (kind, (int(text[1]), int(text[2])))
    raise argparse.ArgumentTypeError(f"bad direction {text!r}")


def _frac(value) -> str:
    return str(Fraction(value))


def _pattern_json(M: Pattern) -> dict:
    return {"rows": M.rows()}


def _nupoly_json(poly) -> list:
    return [{"exp": list(key), "coeff": _frac(poly[key])}
            for key in sorted(poly.keys(), reverse=True)]


def _pvector_json(vec) -> list:
    return [{"gen": f"X{k[0]}{k[1]}{k[2]}", "coeff": _frac(vec[k])}
            for k in sorted(vec.keys())]


def _emit(args, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_patterns(args) -> int:
    lam = args.type
    pats = enumerate_patterns(lam)
    sigma = SigmaChar.of(args.sigma) if args.sigma else None
    sig_list = sigma_enumerate(lam, sigma) if sigma else []
    rows = []
    for n, M in enumerate(pats, start=1):
        entry = {"rows": M.rows(), "weight": list(M.weight()), "l": n,
                 "l_sigma": (sig_list.index(M) + 1
                             if sigma and M in sig_list else None)}
        if sigma is None or entry["l_sigma"] is not None or not args.only_sigma:
            rows.append(entry)
    if args.only_sigma and sigma:
        rows = [r for r in rows if r["l_sigma"] is not None]
    if args.format == "text":
        for r in rows:
            print(f"l={r['l']:3d}  {r['rows']}  wt={r['weight']}"
                  + (f"  l_sigma={r['l_sigma']}" if r["l_sigma"] else ""))
        return 0
    _emit(args, rows)
    return 0


def cmd_action(args) -> int:
    lam = args.type
    if args.pattern is not None:
        image = glmodule.act_basis(args.gen, args.pattern)
        payload = {"terms": [
            {"pattern": _pattern_json(M), "coeff": _frac(c)}
            for M, c in sorted(image.items())]}
    else:
        mat = glmodule.matrix_of(args.gen, lam)
        payload = {"matrix": [[_frac(v) for v in row] for row in mat]}
    _emit(args, payload)
    return 0


def cmd_cg(args) -> int:
    kind, data = args.dir
    if kind == "vec":
        image = clebsch.inject_vec(args.source, data, args.pattern)
    elif kind == "pos":
        image = clebsch.inject_pos(args.source, data, args.pattern, args.mode)
    else:
        image = clebsch.inject_neg(args.source, data, args.pattern)
    payload = {"terms": [
        {"left": _pattern_json(a), "right": _pattern_json(b),
         "coeff": _frac(c)}
        for (a, b), c in sorted(image.items())]}
    _emit(args, payload)
    return 0


def cmd_pmatrix(args) -> int:
    kind, ij = args.dir
    if kind == "vec":
        raise SystemExit("pmatrix needs a direction of the form +ij or -ij")
    sign = "+" if kind == "pos" else "-"
    P = contiguous.pmatrix(args.type, sign, ij)
    payload = {"shape": list(P.shape), "entries": [
        [_pvector_json(P.entries[r][c]) for c in range(P.shape[1])]
        for r in range(P.shape[0])]}
    _emit(args, payload)
    return 0


def cmd_rmatrix(args) -> int:
    kind, ij = args.dir
    if kind == "vec":
        raise SystemExit("rmatrix needs a direction of the form +ij or -ij")
    sign = "+" if kind == "pos" else "-"
    R = contiguous.rmatrix(args.sigma, args.type, sign, ij)
    payload = {"shape": list(R.shape), "entries": [
        [_nupoly_json(R[r, c]) for c in range(R.shape[1])]
        for r in range(R.shape[0])]}
    _emit(args, payload)
    return 0


def cmd_chi(args) -> int:
    n = {"2": 1, "4": 2, "6": 3, "tilde": "tilde"}[args.index]
    value = whittaker.chi(args.sigma, args.ktype, n, args.l)
    payload = {"chi": _nupoly_json(value)}
    if args.oracle:
        oracle = whittaker.chi_oracle(args.sigma, args.ktype, n, args.l)
        payload["oracle"] = _nupoly_json(oracle)
        payload["agree"] = oracle == value
    _emit(args, payload)
    return 0


def _weylop_json(op) -> list:
    return [{"coeff": {"re": _frac(c.re), "im": _frac(c.im)},
             "xdeg": list(z), "thetadeg": list(t)}
            for (z, t), c in sorted(op.items())]


def _weylop_latex(op, coords: str) -> str:
    if not op:
        return "0"
    names = [f"{coords}_{i}" for i in (1, 2, 3)]
    parts = []
    for (z, t), c in sorted(op.items()):
        factors = []
        for a in range(3):
            if z[a]:
                factors.append(names[a] + (f"^{z[a]}" if z[a] > 1 else ""))
        for a in range(3):
            if t[a]:
                factors.append(f"\\theta_{{{names[a]}}}"
                               + (f"^{t[a]}" if t[a] > 1 else ""))
        parts.append(f"({c})" + " ".join(factors))
    return " + ".join(parts)


def cmd_system(args) -> int:
    system = whittaker.holonomic_system(args.sigma, args.l, args.ktype)
    if args.format == "latex":
        lines = []
        for block in system.blocks:
            lines.append(f"% block {block.name}")
            d = len(block.op)
            for r in range(d):
                terms = [f"[{_weylop_latex(block.op[r][c], system.coords)}]"
                         f"\\phi_{c + 1}" for c in range(d)]
                rhs = [f"[{rc}]\\phi_{c + 1}"
                       for c, rc in enumerate(block.rhs[r]) if rc]
                lines.append(" + ".join(terms) + " = "
                             + (" + ".join(rhs) if rhs else "0"))
        out = "\n".join(lines)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out + "\n")
        else:
            print(out)
        return 0
    payload = {
        "ktype": system.ktype, "sigma": list(system.sigma), "l": system.l,
        "coords": system.coords, "rank": system.rank,
        "matches_closed_form": system.all_match(),
        "blocks": [{
            "name": block.name,
            "operators": [[_weylop_json(block.op[r][c])
                           for c in range(len(block.op))]
                          for r in range(len(block.op))],
            "rhs": [[_nupoly_json(v) for v in row] for row in block.rhs],
        } for block in system.blocks],
    }
    _emit(args, payload)
    return 0


def cmd_verify(args) -> int:
    names = (list(suites.SUITES) if args.suite == "all" else [args.suite])
    if args.max_spread is not None:
        import os
        os.environ["SP3GK_MAX_SPREAD"] = str(args.max_spread)
    results = suites.run_suites(names)
    width = max(len(n) for n in results)
    failed = False
    for name, rep in results.items():
        status = "pass" if rep["passed"] else "FAIL"
        print(f"{name.ljust(width)}  {status}  ({rep['checked']} cases)")
        if not rep["passed"]:
            failed = True
            for f in rep["failures"][:20]:
                print(f"    {f}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sp3gk",
        description="Exact computations in the module structure of the "
                    "rank-three real symplectic principal series")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("patterns", help="enumerate triangular patterns")
    p.add_argument("--type", type=_parse_triple, required=True)
    p.add_argument("--sigma", type=_parse_triple, default=None)
    p.add_argument("--only-sigma", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("action", help="monomial-basis action of a generator")
    p.add_argument("--type", type=_parse_triple, required=True)
    p.add_argument("--gen", required=True, choices=glmodule.GENERATORS)
    p.add_argument("--pattern", type=_parse_pattern, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_action)

    p = sub.add_parser("cg", help="tensor-product injector images")
    p.add_argument("--source", type=_parse_triple, required=True)
    p.add_argument("--dir", type=_parse_dir, required=True)
    p.add_argument("--pattern", type=_parse_pattern, required=True)
    p.add_argument("--mode", choices=("closed", "composed"), default="closed")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cg)

    p = sub.add_parser("pmatrix", help="root-vector block matrix")
    p.add_argument("--type", type=_parse_triple, required=True)
    p.add_argument("--dir", type=_parse_dir, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pmatrix)

    p = sub.add_parser("rmatrix", help="closed-form contiguous matrix")
    p.add_argument("--type", type=_parse_triple, required=True)
    p.add_argument("--sigma", type=_parse_triple, required=True)
    p.add_argument("--dir", type=_parse_dir, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("chi", help="invariant-operator eigenvalues")
    p.add_argument("--sigma", type=_parse_triple, required=True)
    p.add_argument("--ktype", choices=whittaker.KTYPES, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--index", choices=("2", "4", "6", "tilde"), required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also evaluate the factorization route")
    p.add_argument("--out")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("system", help="radial holonomic system")
    p.add_argument("--sigma", type=_parse_triple, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--ktype", choices=whittaker.KTYPES, required=True)
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("verify", help="run exact verification sweeps")
    p.add_argument("--suite", default="all",
                   choices=("all",) + tuple(suites.SUITES)
                   + tuple(suites.SUITE_ALIASES))
    p.add_argument("--max-spread", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
