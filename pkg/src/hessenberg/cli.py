"""
Command-line front end.

    hessenberg decompose --n 5 --h 4,4,4,5,5
    hessenberg verify semisimple --n 3 --q 2 --json
    hessenberg roots --system B3 --alpha -1,-1,-2

Exit status: 0 ok/verified, 1 a verification returned false, 2 usage or
input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, HessenbergError, NoSolution
from .fforacle import (
    PRESETS, cell_union_counts, flag_count, parse_matrix, point_count, preset_matrix,
    semisimple_partition, verify_equivalence, verify_not_cell_union, verify_semisimple_example,
)
from .hessfn import corners, is_minimal, minimize_nilpotent, parse_hessenberg
from .hwdecomp import decompose, is_pure_banded, variety_cells
from .permcore import length
from .rootsys import (
    h_alpha, highest_weight_sides, max_coset_rep, parse_root, parse_system,
    weyl_group,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by itself; route through our handler instead so
    # that main() always returns.
    def error(self, message):
        raise UsageError(message)


def _h(args):
    if args.h is None:
        raise UsageError("--h is required")
    h = parse_hessenberg(args.h)
    if args.n is not None and args.n != h.n:
        raise UsageError(f"--n {args.n} does not match the length of --h ({h.n})")
    return h


def _matrix(args, n: int, q: int, default: str):
    if args.matrix is not None:
        X = parse_matrix(args.matrix, q)
        if X.n != n:
            raise UsageError(f"--matrix is {X.n}x{X.n} but n={n}")
        return X, None
    name = args.x or default
    return preset_matrix(name, n, q), name


def _emit(args, payload: dict, text: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text))


def cmd_decompose(args) -> int:
    given = _h(args)
    h = minimize_nilpotent(given)
    rep = decompose(h, with_cells=args.cells)
    text = [f"h = {given}", f"minimal h = {h}"]
    for c, w, d in rep.components:
        text.append(f"corner ({c}): w = {w}, dim {d}")
    text.append(f"pure = {str(rep.pure).lower()}")
    if args.cells:
        text.append("cells: " + " ".join(str(s) for s in rep.cell_set))
    _emit(args, rep.to_dict(include_cells=args.cells, input_h=given), text)
    return EXIT_OK


def cmd_minimize(args) -> int:
    h = _h(args)
    m = minimize_nilpotent(h)
    _emit(args, {"h": list(h.values), "minimal_h": list(m.values), "was_minimal": is_minimal(h)},
          [str(m)])
    return EXIT_OK


def cmd_purity(args) -> int:
    h = minimize_nilpotent(_h(args))
    rep = decompose(h, with_cells=False)
    banded = is_pure_banded(h)
    _emit(args, {"minimal_h": list(h.values), "pure": rep.pure, "banded": banded,
                 "dims": rep.dimensions()},
          [f"minimal h = {h}", f"pure = {str(rep.pure).lower()}",
           f"banded = {str(banded).lower()}"])
    # the two verdicts are equivalent; disagreement is a bug
    return EXIT_OK if banded == rep.pure else EXIT_FAILED


def cmd_corners(args) -> int:
    h = _h(args)
    cs = corners(h)
    _emit(args, {"h": list(h.values), "corners": [[c.i, c.j] for c in cs]},
          [" ".join(f"({c})" for c in cs) or "(none)"])
    return EXIT_OK


def _predicted(name, h, q):
    if name == "e1n":
        return sum(q ** length(s) for s in variety_cells(h))
    if name == "zero":
        return flag_count(h.n, q)
    return None


def cmd_count(args) -> int:
    h = _h(args)
    q = args.q
    X, name = _matrix(args, h.n, q, default="e1n")
    count = point_count(X, h, q)
    predicted = _predicted(name, h, q)
    match = None if predicted is None else count == predicted
    text = [f"count = {count}"]
    if predicted is not None:
        text.append(f"predicted = {predicted} ({'match' if match else 'MISMATCH'})")
    _emit(args, {"n": h.n, "q": q, "count": count, "predicted": predicted, "match": match}, text)
    return EXIT_FAILED if match is False else EXIT_OK


def cmd_verify(args) -> int:
    q = args.q
    kind = args.kind
    if kind == "semisimple":
        if args.n is None:
            raise UsageError("--n is required")
        predicted, actual = verify_semisimple_example(args.n, q)
        split = semisimple_partition(args.n, q)
        ok = predicted == actual and split.other == 0
        payload = {"n": args.n, "q": q, "predicted": predicted, "actual": actual,
                   "bundle": split.bundle, "flat": split.flat, "other": split.other}
        text = [f"predicted = {predicted}", f"actual = {actual}",
                f"partition = {split.bundle} + {split.flat} (other {split.other})"]
    elif kind == "cell-union":
        h = _h(args)
        res = cell_union_counts(h, q)
        ok = res.consistent and res.count == res.predicted
        payload = {"n": h.n, "q": q, "count": res.count, "predicted": res.predicted,
                   "consistent": res.consistent}
        text = [f"count = {res.count}", f"predicted = {res.predicted}",
                f"cells uniform = {str(res.consistent).lower()}"]
    elif kind == "not-cell-union":
        h = _h(args)
        X, _ = _matrix(args, h.n, q, default="regular-nilpotent")
        ok = verify_not_cell_union(X, h, q)
        payload = {"n": h.n, "q": q, "split_cell_found": ok}
        text = [f"some cell splits = {str(ok).lower()}"]
    else:
        h = _h(args)
        if args.h2 is None:
            raise UsageError("--h2 is required")
        h2 = parse_hessenberg(args.h2)
        X, _ = _matrix(args, h.n, q, default="e1n")
        ok = verify_equivalence(X, h, h2, q)
        payload = {"n": h.n, "q": q, "h": list(h.values), "h2": list(h2.values), "equal": ok}
        text = [f"varieties equal = {str(ok).lower()}"]
    payload["verified"] = ok
    text.append("VERIFIED" if ok else "FAILED")
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_roots(args) -> int:
    if args.system is None:
        raise UsageError("--system is required")
    rs = parse_system(args.system)
    if args.alpha is None:
        W = weyl_group(rs)
        payload = {"system": rs.name, "positive_roots": len(rs.positive_roots),
                   "highest_root": list(rs.highest_root), "weyl_order": len(W),
                   "longest": str(W.longest())}
        _emit(args, payload, [f"{k} = {v}" for k, v in sorted(payload.items())])
        return EXIT_OK
    a = parse_root(rs, args.alpha)
    space = h_alpha(rs, a)
    payload = {"system": rs.name, "alpha": list(a), "long": rs.is_long(a),
               "h_alpha": space.to_dict(rs)}
    text = [f"H_alpha: {len(space.roots)} root vectors, toral {sorted(space.toral)}"]
    try:
        w = max_coset_rep(rs, a)
        lhs, rhs = highest_weight_sides(rs, a)
    except NoSolution as exc:
        payload.update(w=None, verified=None, note=str(exc))
        text.append(f"no solution: {exc}")
        _emit(args, payload, text)
        return EXIT_OK
    ok = lhs == rhs
    payload.update(w=str(w), w_word=list(w.word), length=w.length, verified=ok)
    text += [f"w = {w} (length {w.length})", "VERIFIED" if ok else "FAILED"]
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_selftest(args) -> int:
    from .acceptance import run_all
    results = run_all(echo=None if args.json else print)
    if args.json:
        print(json.dumps([
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
             "limit": r.limit} for r in results], sort_keys=True))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--n", type=int)
    common.add_argument("--h", help="Hessenberg function as a comma list, e.g. 2,3,4,4")
    fq = _Parser(add_help=False)
    fq.add_argument("--q", type=int, default=2, help="field size (prime <= 13)")
    fq.add_argument("--x", choices=sorted(PRESETS), help="matrix preset")
    fq.add_argument("--matrix", help="row-major JSON matrix over F_q")

    p = _Parser(prog="hessenberg", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    d = sub.add_parser("decompose", parents=[common], help="components of X_h for E_1n")
    d.add_argument("--cells", action="store_true", help="also list the permutation flags")
    sub.add_parser("minimize", parents=[common], help="minimal E_1n-equivalent h")
    sub.add_parser("purity", parents=[common], help="pure-dimensionality check")
    sub.add_parser("corners", parents=[common], help="corners of H_h")
    sub.add_parser("count", parents=[common, fq], help="|H(X, h)(F_q)| by exhaustive scan")
    v = sub.add_parser("verify", parents=[common, fq], help="finite-field verifications")
    v.add_argument("kind", choices=["semisimple", "cell-union", "not-cell-union", "equivalence"])
    v.add_argument("--h2", help="second Hessenberg function for equivalence")
    r = sub.add_parser("roots", parents=[common], help="general-type highest-weight check")
    r.add_argument("--system", help="e.g. A3, B3, G2, F4")
    r.add_argument("--alpha", help="root in simple-root coordinates, e.g. -1,-1,-2")
    sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    return p


COMMANDS = {
    "decompose": cmd_decompose, "minimize": cmd_minimize, "purity": cmd_purity,
    "corners": cmd_corners, "count": cmd_count, "verify": cmd_verify,
    "roots": cmd_roots, "selftest": cmd_selftest,
}


def _glue_values(argv: list[str]) -> list[str]:
    # "--alpha -1,-1,-2" would be read as an option; bind the value explicitly
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--alpha", "--h", "--h2"):
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_values(argv))
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HessenbergError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
