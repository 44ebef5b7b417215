"""Command line front end.

Thin adapters only: each command parses arguments, calls into the library,
and renders the result either as text or as one canonical JSON document.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .chevalley import CONVENTION, ChevalleyAlgebra, construct, verify_algebra
from .errors import (
    InvalidLieTypeError,
    NodeError,
    NotARootError,
    PrimeConditionError,
)
from .intform import FactoredInteger, determinant, elementary_divisors
from .parahoric import ParahoricReport, build_report, matching_parahorics, node_label
from .rootsys import RootSystem, build
from .verify import FAIL, run_checks, summarize

SCHEMA_VERSION = 1

_USAGE_ERRORS = (
    InvalidLieTypeError,
    NodeError,
    NotARootError,
    PrimeConditionError,
    ValueError,
)


def _factored_doc(f: FactoredInteger) -> dict[str, Any]:
    return {
        "string": str(f),
        "sign": f.sign,
        "factors": [[p, e] for p, e in f.factors],
    }


def _emit(args: argparse.Namespace, command: str, request: dict[str, Any],
          payload: Any, text_lines: list[str]) -> None:
    if getattr(args, "machine", False):
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "request": request,
            "payload": payload,
        }
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def parse_node_selector(rs: RootSystem, text: str) -> int:
    """Resolve a node given as an index, "affine", "alphaK", or "mark=M"."""
    t = text.strip().lower().replace("α", "alpha")
    if t == "affine":
        return 0
    if t.startswith("alpha"):
        rest = t[len("alpha"):]
        if rest.isdigit() and 1 <= int(rest) <= rs.rank:
            return int(rest)
        raise NodeError(f"unknown node name {text!r}; expected alpha1..alpha{rs.rank}")
    if t.startswith("mark="):
        try:
            mark = int(t[len("mark="):])
        except ValueError:
            raise NodeError(f"bad mark selector {text!r}") from None
        hits = [k for k in range(rs.rank + 1)
                if (1 if k == 0 else rs.marks[k - 1]) == mark]
        if len(hits) == 1:
            return hits[0]
        raise NodeError(
            f"mark={mark} matches nodes {hits}; pick one by name or index")
    try:
        node = int(t)
    except ValueError:
        raise NodeError(
            f"bad node selector {text!r}; use an index 0..{rs.rank}, "
            f"'affine', 'alphaK', or 'mark=M'") from None
    if not 0 <= node <= rs.rank:
        raise NodeError(f"node {node} out of range 0..{rs.rank}")
    return node


def _check_prime_arg(p: int) -> int:
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise PrimeConditionError(f"{p} is not prime")
    return p


# -- subcommands ---------------------------------------------------------------------


def _torus_det(alg: ChevalleyAlgebra) -> FactoredInteger:
    from .intform import IntegerForm

    rank = alg.rs.rank
    gram = alg.normalized_gram().gram
    block = IntegerForm(tuple(tuple(row[:rank]) for row in gram[:rank]))
    det = determinant(block)
    assert det is not None  # the torus block is positive definite
    return det


def cmd_info(args: argparse.Namespace) -> int:
    rs = build(args.type)
    alg = construct(rs)
    h, c, hv = rs.numbers()
    det_g = determinant(alg.normalized_gram())
    assert det_g is not None
    det_g = det_g.abs()
    det_t = _torus_det(alg).abs()
    payload = {
        "type": str(rs.lie_type),
        "family": rs.lie_type.family,
        "rank": rs.rank,
        "dim": rs.dim,
        "roots": len(rs.roots),
        "positive_roots": len(rs.positive),
        "coxeter_h": h,
        "ratio_c": c,
        "dual_coxeter": hv,
        "marks": list(rs.marks),
        "center_order": rs.center_order,
        "det_gram": _factored_doc(det_g),
        "det_torus_gram": _factored_doc(det_t),
    }
    text = [
        f"{rs.lie_type}: rank {rs.rank}, dimension {rs.dim}",
        f"roots: {len(rs.roots)} ({len(rs.positive)} positive), "
        f"marks {tuple(rs.marks)}",
        f"h = {h}, c = {c}, dual Coxeter = {hv}, center order = {rs.center_order}",
        f"|det| of normalized form: {det_g} on g, {det_t} on Lie(T)",
    ]
    _emit(args, "info", {"type": args.type}, payload, text)
    return 0


def cmd_roots(args: argparse.Namespace) -> int:
    rs = build(args.type)
    rows = [
        {"coords": list(r.coords), "height": r.height, "length": r.length_class}
        for r in rs.roots
    ]
    payload = {"type": str(rs.lie_type), "count": len(rows), "roots": rows}
    text = [f"{rs.lie_type}: {len(rows)} roots (positive first, by height)"]
    for r in rs.roots:
        text.append(f"  {r.coords}  height {r.height:3d}  {r.length_class}")
    _emit(args, "roots", {"type": args.type}, payload, text)
    return 0


def cmd_algebra(args: argparse.Namespace) -> int:
    rs = build(args.type)
    alg = construct(rs, tie_break=args.tie_break)
    payload: dict[str, Any] = {
        "type": str(rs.lie_type),
        "dim": alg.dim,
        "convention": CONVENTION,
        "tie_break": alg.tie_break,
        "basis": {"torus": rs.rank, "root_vectors": len(rs.roots)},
    }
    text = [
        f"{rs.lie_type}: Chevalley basis with {rs.rank} torus elements and "
        f"{len(rs.roots)} root vectors (dim {alg.dim})",
        f"sign convention: {CONVENTION}, tie break {alg.tie_break}",
    ]
    code = 0
    if args.verify:
        rep = verify_algebra(alg, mode=args.verify)
        payload["verification"] = {
            "mode": rep.mode,
            "ok": rep.ok,
            "antisymmetry_pairs": rep.antisymmetry_pairs,
            "string_law_pairs": rep.string_law_pairs,
            "jacobi_triples": rep.jacobi_triples,
            "first_violation": rep.first_violation,
        }
        text.append(
            f"verification ({rep.mode}): "
            f"{'ok' if rep.ok else 'FAILED: ' + str(rep.first_violation)} "
            f"({rep.jacobi_triples} Jacobi triples)")
        code = 0 if rep.ok else 1
    _emit(args, "algebra",
          {"type": args.type, "verify": args.verify, "tie_break": args.tie_break},
          payload, text)
    return code


def cmd_gram(args: argparse.Namespace) -> int:
    rs = build(args.type)
    alg = construct(rs)
    form = alg.normalized_gram() if args.normalized else alg.killing_gram()
    det = determinant(form)
    payload: dict[str, Any] = {
        "type": str(rs.lie_type),
        "normalized": bool(args.normalized),
        "dim": form.dim,
        "det": None if det is None else _factored_doc(det),
        "matrix": [list(row) for row in form.gram],
    }
    name = "normalized form" if args.normalized else "Killing form"
    text = [f"{rs.lie_type}: {name} Gram matrix, dim {form.dim}",
            f"det = {det}"]
    if args.divisors:
        divs = elementary_divisors(form)
        payload["elementary_divisors"] = list(divs)
        text.append(f"elementary divisors: {list(divs)}")
    if form.dim <= 30:
        width = max(len(str(x)) for row in form.gram for x in row)
        for row in form.gram:
            text.append("  " + " ".join(str(x).rjust(width) for x in row))
    else:
        text.append(f"(matrix with {form.dim} rows omitted; use --machine)")
    _emit(args, "gram",
          {"type": args.type, "normalized": bool(args.normalized),
           "divisors": bool(args.divisors)},
          payload, text)
    return 0


def _report_doc(rep: ParahoricReport) -> dict[str, Any]:
    return {
        "type": rep.lie_type,
        "node": rep.node,
        "name": rep.node_name,
        "mark": rep.mark,
        "prime": rep.prime,
        "reduced": {
            "label": rep.reduced_label,
            "components": [[f, r] for f, r in rep.reduced_components],
            "dim": rep.dim_reduced,
        },
        "dim_unipotent": rep.dim_unipotent,
        "layers": [
            {
                "index": lay.index,
                "dim": lay.dimension,
                "orbit_sizes": list(lay.orbit_sizes),
                "factor_dims": None if lay.factors is None else list(lay.factors),
                "highest_weights": None if lay.highest_weights is None
                else [list(w) for w in lay.highest_weights],
            }
            for lay in rep.layers
        ],
        "discriminant": _factored_doc(rep.discriminant),
    }


def _report_text(rep: ParahoricReport) -> list[str]:
    head = f"{rep.node_name} (mark {rep.mark})"
    lines = [
        f"{rep.lie_type} at p = {rep.prime}, node {head}:",
        f"  reduced type {rep.reduced_label} (dim {rep.dim_reduced}), "
        f"unipotent part dim {rep.dim_unipotent}",
    ]
    for lay in rep.layers:
        desc = f"  U{lay.index}: dim {lay.dimension}, orbit sizes {lay.orbit_sizes}"
        if lay.factors is not None:
            desc += f", factor dims {lay.factors}"
        lines.append(desc)
    lines.append(f"  discriminant {rep.discriminant}")
    return lines


def cmd_parahoric(args: argparse.Namespace) -> int:
    rs = build(args.type)
    p = _check_prime_arg(args.prime)
    alg = construct(rs)
    if args.node.strip().lower() == "all":
        nodes = list(range(rs.rank + 1))
    else:
        nodes = [parse_node_selector(rs, args.node)]
    reports = [build_report(alg, node, p) for node in nodes]
    payload = {"reports": [_report_doc(r) for r in reports]}
    text: list[str] = []
    for r in reports:
        text.extend(_report_text(r))
    _emit(args, "parahoric",
          {"type": args.type, "node": args.node, "prime": p},
          payload, text)
    return 0


def cmd_match(args: argparse.Namespace) -> int:
    rs = build(args.type)
    p = _check_prime_arg(args.prime)
    candidate = FactoredInteger.parse(args.disc)
    alg = construct(rs)
    nodes = matching_parahorics(alg, p, candidate)
    reports = [build_report(alg, node, p) for node in nodes]
    payload = {
        "candidate": _factored_doc(candidate),
        "matches": list(nodes),
        "reports": [_report_doc(r) for r in reports],
    }
    if nodes:
        text = [f"{rs.lie_type} at p = {p}: discriminant {candidate} matches "
                + ", ".join(f"{node_label(rs, n)} (mark "
                            f"{1 if n == 0 else rs.marks[n - 1]})" for n in nodes)]
        for r in reports:
            text.extend(_report_text(r))
    else:
        text = [f"{rs.lie_type} at p = {p}: no maximal parahoric lattice has "
                f"discriminant {candidate}"]
    _emit(args, "match", {"type": args.type, "prime": p, "disc": args.disc},
          payload, text)
    return 0


def cmd_verify_paper(args: argparse.Namespace) -> int:
    results = run_checks(slow=args.slow)
    passed, failed, info = summarize(results)
    payload = {
        "tier": "slow" if args.slow else "fast",
        "results": [
            {"name": r.name, "status": r.status, "detail": r.detail}
            for r in results
        ],
        "passed": passed,
        "failed": failed,
        "informational": info,
    }
    text = [f"[{r.status.upper():4s}] {r.name}: {r.detail}" for r in results]
    text.append(f"checks: {passed} passed, {failed} failed, {info} informational")
    _emit(args, "verify-paper", {"slow": bool(args.slow)}, payload, text)
    return 1 if failed else 0


# -- parser --------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chevlie",
        description="Integral Chevalley Lie algebras, their normalized Killing "
                    "forms, and the Lie lattices of maximal parahoric subgroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--machine", action="store_true",
                        help="emit one canonical JSON document")
        return sp

    sp = add("info", cmd_info, "rank, dimension, Coxeter data, discriminants")
    sp.add_argument("type", help="Lie type, e.g. E8 or B4")

    sp = add("roots", cmd_roots, "list every root with height and length class")
    sp.add_argument("type")

    sp = add("algebra", cmd_algebra, "construct the Chevalley basis")
    sp.add_argument("type")
    sp.add_argument("--verify", choices=("fast", "full"), default=None,
                    help="check antisymmetry, root strings, and Jacobi")
    sp.add_argument("--tie-break", choices=("lex", "revlex"), default="lex",
                    help="ordering used to pick special pairs")

    sp = add("gram", cmd_gram, "Gram matrix of the Killing or normalized form")
    sp.add_argument("type")
    sp.add_argument("--normalized", action="store_true",
                    help="divide the Killing form by 2 * dual Coxeter number")
    sp.add_argument("--divisors", action="store_true",
                    help="also compute elementary divisors")

    sp = add("parahoric", cmd_parahoric,
             "reduced type, layers, and discriminant of a maximal parahoric")
    sp.add_argument("type")
    sp.add_argument("--node", required=True,
                    help="node index, 'affine', 'alphaK', 'mark=M', or 'all'")
    sp.add_argument("--prime", required=True, type=int)

    sp = add("match", cmd_match,
             "find the maximal parahorics with a given discriminant")
    sp.add_argument("type")
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--disc", required=True,
                    help="factored integer such as 2^200 or 2^26*3^36")

    sp = add("verify-paper", cmd_verify_paper,
             "run every tabulated golden-value check")
    sp.add_argument("--slow", action="store_true",
                    help="enumerate all Jacobi triples on E6/E7/E8")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
