"""Command-line front end: ``supertropical VERB FILE... [--json] [--oracle]``.

Exit status is 0 on success, 1 for domain errors (wrong shape, strictly
singular input, ...) and 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import charpoly as cp
from . import digraph as dg
from . import eigen
from . import oracle
from .adjoint import adjoint, quasi_identities, quasi_inverse, solve_ghost, vn_regular
from .checks import SUITES, run_suite
from .element import Element, ParseError
from .matrix import (
    DEFAULT_MAX_ENUM,
    Matrix,
    ShapeError,
    SingularMatrixError,
    attaining_permutations,
    classify,
    format_stm,
    parse_stm,
    tropical_det,
)

VERBS = ("det", "classify", "adj", "qinv", "qid", "vnreg", "charpoly", "essential", "roots",
         "eigen", "dep", "diag", "mul", "add", "pow", "graph", "solve", "check")


class InputError(Exception):
    pass


# -- structured output --------------------------------------------------------


def el(x: Element) -> dict:
    return {"value": "-inf" if x.is_bottom else str(x.lift()), "layer": x.layer.value}


def mat(A: Matrix) -> list:
    return [[el(x) for x in row] for row in A.rows]


def vec(v) -> list:
    return [el(x) for x in v]


def poly(f: cp.Poly) -> dict:
    return {"text": str(f), "terms": [{"exponent": i, "coefficient": el(c)} for i, c in f.terms()]}


def one_based(perm) -> list[int]:
    return [p + 1 for p in perm]


def _interval_text(iv) -> str:
    lo, hi = iv
    left = "-inf" if lo is None else str(Element(lo))
    right = "inf" if hi is None else str(Element(hi))
    return f"[{left}, {right}]"


# -- commands ----------------------------------------------------------------
# Each returns (human text, json-able document).


def cmd_det(args, A):
    d = tropical_det(A)
    doc = {"value": el(d.value), "classification": d.classification.value,
           "witness": None if d.witness is None else one_based(d.witness)}
    text = f"{d.value} ({d.classification})"
    if A.shape[0] <= args.max_enum:
        doc["attaining"] = [one_based(p) for p in attaining_permutations(A, args.max_enum)]
    if args.oracle:
        b = oracle.brute_det(A, cap=args.max_enum)
        doc["oracle"] = {"value": el(b), "agree": b == d.value}
        text += f"\noracle: {b} ({'agree' if b == d.value else 'DISAGREE'})"
    return text, doc


def cmd_classify(args, A):
    c = classify(A)
    return str(c), {"classification": c.value}


def cmd_adj(args, A):
    R = adjoint(A)
    return format_stm(R), {"matrix": mat(R)}


def cmd_qinv(args, A):
    R = quasi_inverse(A)
    return format_stm(R), {"matrix": mat(R)}


def cmd_qid(args, A):
    q = quasi_identities(A)
    text = f"A A^q:\n{format_stm(q.left)}\n\nA^q A:\n{format_stm(q.right)}"
    return text, {"left": mat(q.left), "right": mat(q.right)}


def cmd_vnreg(args, A):
    ok, bad = vn_regular(A)
    pos = [[i + 1, j + 1] for i, j in bad]
    text = "regular" if ok else "not regular at " + ", ".join(f"({i},{j})" for i, j in pos)
    return text, {"regular": ok, "positions": pos}


def _charpoly_oracle(args, A, f, text, doc):
    if args.oracle:
        b = oracle.brute_charpoly(A, cap=min(args.max_enum, oracle.CHARPOLY_CAP))
        doc["oracle"] = {"poly": poly(b), "agree": b == f}
        text += f"\noracle: {b} ({'agree' if b == f else 'DISAGREE'})"
    return text, doc


def cmd_charpoly(args, A):
    f = cp.char_poly(A)
    return _charpoly_oracle(args, A, f, str(f), {"poly": poly(f)})


def cmd_essential(args, A):
    f = cp.char_poly(A)
    e = cp.essential_part(f)
    return str(e), {"poly": poly(f), "essential": poly(e)}


def cmd_roots(args, A):
    f = cp.char_poly(A)
    r = cp.tangible_roots(f)
    lines = ["corners: " + ", ".join(str(x) for x in r.corners)]
    if r.ghost_intervals:
        lines.append("ghost intervals: " + ", ".join(_interval_text(iv) for iv in r.ghost_intervals))
    doc = {
        "poly": poly(f),
        "corners": [el(x) for x in r.corners],
        "ghost_intervals": [[None if lo is None else el(Element(lo)), None if hi is None else el(Element(hi))]
                            for lo, hi in r.ghost_intervals],
    }
    if args.oracle and r.corners:
        lo = min(x.value for x in r.corners) - 1
        hi = max(x.value for x in r.corners) + 1
        scanned = set(oracle.scan_roots(f, lo, hi, 1))
        agree = all(x in scanned for x in r.corners)
        doc["oracle"] = {"scanned": [el(x) for x in sorted(scanned, key=lambda e: e.value)], "agree": agree}
        lines.append(f"oracle: corners {'confirmed' if agree else 'NOT confirmed'} by scan")
    return "\n".join(lines), doc


def cmd_eigen(args, A):
    pairs = eigen.eigen_pairs(A)
    lines = [f"{p.eigenvalue} {p.eigenvector}{' exact' if p.exact else ''}" for p in pairs]
    doc = {"pairs": [{"eigenvalue": el(p.eigenvalue), "eigenvector": vec(p.eigenvector),
                      "image": vec(A @ p.eigenvector), "exact": p.exact} for p in pairs]}
    return "\n".join(lines) if lines else "no tangible eigenvalues", doc


def cmd_dep(args, A):
    w = eigen.dependence_witness(A.rows)
    if w is None:
        return "independent", {"witness": None}
    text = f"coefficients {w.coefficients}\ncombination {w.combination}"
    return text, {"witness": {"coefficients": vec(w.coefficients), "combination": vec(w.combination)}}


def cmd_diag(args, A):
    r = eigen.diagonalize(A)
    if r is None:
        return "not diagonalizable", {"diagonalization": None}
    U, D = r
    conj = eigen.conjugate(A, U)
    text = f"U:\n{format_stm(U)}\n\nD:\n{format_stm(D)}\n\nU^q A U:\n{format_stm(conj)}"
    return text, {"diagonalization": {"U": mat(U), "D": mat(D), "conjugate": mat(conj)}}


def cmd_mul(args, A, B):
    R = A @ B
    return format_stm(R), {"matrix": mat(R)}


def cmd_add(args, A, B):
    R = A + B
    return format_stm(R), {"matrix": mat(R)}


def cmd_pow(args, A):
    R = A ** args.exponent
    return format_stm(R), {"matrix": mat(R)}


def cmd_graph(args, A):
    G = dg.from_matrix(A)
    red = dg.reduced(G).edge_set()
    edges = [{"source": i + 1, "target": j + 1, "weight": el(w), "on_cycle": (i, j) in red}
             for i, j, w in G.edges]
    lines = [f"vertices: {G.n}"]
    lines += [f"{e['source']} -> {e['target']}  {w}{'' if e['on_cycle'] else '  (not on a cycle)'}"
              for e, (_, _, w) in zip(edges, G.edges)]
    cover = dg.perfect_matching(G)
    lines.append("cyclic cover: " + ("none" if cover is None else " ".join(map(str, one_based(cover)))))
    doc = {"vertices": G.n, "edges": edges, "cyclic_cover": None if cover is None else one_based(cover)}
    return "\n".join(lines), doc


def cmd_solve(args, A, V):
    rows, cols = V.shape
    if rows != 1 and cols != 1:
        raise ShapeError(f"right-hand side must be a single row or column, got shape {rows}x{cols}")
    v = V.row(0) if rows == 1 else V.column(0)
    w = solve_ghost(A, v)
    Aw = A @ w
    return f"w = {w}\nA w = {Aw}", {"solution": vec(w), "image": vec(Aw)}


def cmd_check(args):
    r = run_suite(args.suite, seed=args.seed, cases=args.cases)
    text = f"{r.name}: {r.cases - r.failures}/{r.cases} passed (seed {args.seed})"
    if r.samples:
        text += "\n" + "\n---\n".join(r.samples)
    return text, {"suite": r.name, "seed": args.seed, "cases": r.cases, "failures": r.failures}


# -- argument handling -------------------------------------------------------

ONE_MATRIX = {
    "det": cmd_det, "classify": cmd_classify, "adj": cmd_adj, "qinv": cmd_qinv, "qid": cmd_qid,
    "vnreg": cmd_vnreg, "charpoly": cmd_charpoly, "essential": cmd_essential, "roots": cmd_roots,
    "eigen": cmd_eigen, "dep": cmd_dep, "diag": cmd_diag, "graph": cmd_graph, "pow": cmd_pow,
}
TWO_MATRICES = {"mul": cmd_mul, "add": cmd_add, "solve": cmd_solve}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    common.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM, metavar="N",
                        help="size cap for enumeration and brute-force oracles (default %(default)s)")

    p = argparse.ArgumentParser(prog="supertropical", description="Supertropical matrix algebra on .stm files.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")
    for verb in ONE_MATRIX:
        sp = sub.add_parser(verb, parents=[common])
        sp.add_argument("matrix", help=".stm file, or - for stdin")
        if verb == "pow":
            sp.add_argument("exponent", type=int)
    for verb in TWO_MATRICES:
        sp = sub.add_parser(verb, parents=[common])
        sp.add_argument("matrix")
        sp.add_argument("other", help="second .stm file" if verb != "solve" else "right-hand side vector (.stm)")
    sp = sub.add_parser("check", parents=[common])
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=500)
    return p


def read_matrix(path: str) -> Matrix:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_stm(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "check":
            text, doc = cmd_check(args)
        elif args.verb in TWO_MATRICES:
            text, doc = TWO_MATRICES[args.verb](args, read_matrix(args.matrix), read_matrix(args.other))
        else:
            text, doc = ONE_MATRIX[args.verb](args, read_matrix(args.matrix))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ShapeError, SingularMatrixError, oracle.OracleCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(doc, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)
    if args.verb == "check" and doc["failures"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
