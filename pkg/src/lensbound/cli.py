"""Command-line front end.

Exit codes: 0 computed (verdicts included), 1 usage error, 2 invalid input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, TextIO

from .actions import WeightedCP2Action, fixed_point_types, orbifold_boundary, verify_action_consistency
from .bounding_index import chib_lower_bound, is_prime, euler_ledger, ob_lens_prime, step_from_json, step_to_json
from .cobordism import BoundaryProblem, pi1_cobordant_pair, pi1_cobound
from .errors import LensboundError, TheoremViolation
from .groups import (
    FinitePresentation,
    abelianization,
    cyclic_homology,
    element_order,
    i3_trivial_in_semidirect,
    is_extrapolated_degree,
    power_map_action_on_H,
    semidirect_group,
    sigma_presentation,
)
from .lens import LensSpace, canonical_form, degree_set, homotopy_equivalent_oriented

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")




def _load_json(source: str) -> Any:
    """Inline JSON, ``-`` for stdin, or a path to a JSON file."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LensboundError(f"invalid JSON: {exc}") from exc


def _witness_text(w) -> str:
    return f"k={tuple(w.k)} x={tuple(w.x)} degrees={tuple(w.degrees)}"


def cmd_classify(args) -> tuple[dict, str]:
    L1, L2 = LensSpace.parse(args.lens1), LensSpace.parse(args.lens2)
    verdict = homotopy_equivalent_oriented(L1, L2)
    cobordant = pi1_cobordant_pair(L1, L2)
    out = {
        "lens1": str(L1),
        "lens2": str(L2),
        "canonical": [str(canonical_form(L1)), str(canonical_form(L2))],
        "homeomorphic": canonical_form(L1) == canonical_form(L2),
        "homotopy_equivalent": verdict.equivalent,
        "witness": list(verdict.witness) if verdict.witness else None,
        "pi1_cobordant": cobordant,
    }
    lines = [
        f"{L1} vs {L2}",
        f"canonical forms: {out['canonical'][0]} {out['canonical'][1]}",
        f"orientation-preserving homeomorphic: {str(out['homeomorphic']).lower()}",
        "homotopy-equivalent: " + (
            f"true, witness ({verdict.witness[0]},{verdict.witness[1]})" if verdict else "false"),
        f"pi1-cobordant: {str(cobordant).lower()}",
    ]
    return out, "\n".join(lines)


def cmd_degrees(args) -> tuple[dict, str]:
    L1, L2 = LensSpace.parse(args.lens1), LensSpace.parse(args.lens2)
    D = degree_set(L1, L2)
    residues = [int(r) for r in D]
    out = {"lens1": str(L1), "lens2": str(L2), "modulus": D.modulus, "residues": residues}
    return out, f"degrees {L1} -> {L2} mod {D.modulus}: {{{', '.join(map(str, residues))}}}"


def _cobound_one(obj: Any) -> tuple[dict, str]:
    if not isinstance(obj, dict):
        raise LensboundError(f"expected a JSON object, got {obj!r}")
    problem = BoundaryProblem.from_json(obj)
    w = pi1_cobound(problem)
    out = {"problem": problem.to_json(), "sat": w is not None, "witness": w.to_json() if w else None}
    text = f"n={problem.n} q={list(problem.q)}: " + (f"SAT {_witness_text(w)}" if w else "UNSAT")
    return out, text


def _is_batch(source: str) -> bool:
    return source == "-" or os.path.isfile(source)


def cmd_ob(args) -> tuple[dict, str]:
    L = LensSpace.parse(args.lens)
    value = ob_lens_prime(L)
    return {"lens": str(L), "ob": value, "chi_b_lower_bound": chib_lower_bound(L)}, str(value)


def cmd_chi(args) -> tuple[dict, str]:
    raw = _load_json(args.ledger)
    if not isinstance(raw, list):
        raise LensboundError("a ledger is a JSON list of steps")
    steps = [step_from_json(s) for s in raw]
    chi = euler_ledger(steps)
    return {"steps": [step_to_json(s) for s in steps], "chi": chi}, str(chi)


def cmd_group_sigma(args) -> tuple[dict, str]:
    P = FinitePresentation.from_json(_load_json(args.presentation))
    S = sigma_presentation(P)
    ab = abelianization(S)
    k = len(P.generators)
    ys = S.generators[k:2 * k]
    out = {
        "presentation": S.to_json(),
        "abelianization": {"torsion": list(ab.torsion), "free_rank": ab.free_rank,
                           "images": {g: list(v) for g, v in ab.images.items()}},
        "diagonal_copy_killed": all(ab.is_trivial_image(y) for y in ys),
    }
    text = "\n".join([
        str(S),
        f"abelianization: {ab}",
        f"second-factor generators {', '.join(ys) or '(none)'} vanish in H_1: "
        + str(out["diagonal_copy_killed"]).lower(),
    ])
    return out, text


def cmd_group_semidirect(args) -> tuple[dict, str]:
    G = semidirect_group(args.p, args.u, args.d)
    out = {
        "p": G.p, "u": G.u, "d": G.d,
        "order": G.order,
        "abelian": G.is_abelian(),
        "rotation_subgroup_normal": G.is_normal(G.rotation_subgroup()),
        "order_of_alpha": element_order(G, (1, 0)),
        "order_of_beta": element_order(G, (0, 1)),
    }
    if is_prime(G.p):
        out["h3_inclusion_trivial"] = i3_trivial_in_semidirect(G.p, G.u, G.d)
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in out.items())
    return out, text


def cmd_group_homology(args) -> tuple[dict, str]:
    entry = cyclic_homology(args.n, args.k)
    out: dict[str, Any] = {"n": args.n, "k": args.k, "group": str(entry)}
    lines = [f"H_{args.k}(Z_{args.n}) = {entry}"]
    if args.twist is not None:
        m = power_map_action_on_H(args.n, args.twist, args.k)
        out["multiplier"] = m
        out["extrapolated"] = is_extrapolated_degree(args.k)
        note = " (pattern extended beyond degrees 1 and 3)" if out["extrapolated"] else ""
        lines.append(f"a -> a^{args.twist} acts by multiplication by {m}{note}")
    return out, "\n".join(lines)


def cmd_action(args) -> tuple[dict, str]:
    A = WeightedCP2Action(args.n, tuple(args.weights))
    types = fixed_point_types(A)
    boundary = orbifold_boundary(A)
    w = verify_action_consistency(A)
    out = {
        "action": A.to_json(),
        "fixed_point_types": [str(L) for L in types],
        "canonical_types": [str(canonical_form(L)) for L in types],
        "boundary": boundary.to_json(),
        "witness": w.to_json(),
    }
    text = "\n".join([
        "fixed-point types: " + ", ".join(out["fixed_point_types"]),
        "canonical: " + ", ".join(out["canonical_types"]),
        "boundary: " + " u ".join(str(L) for L in boundary.lens_spaces()),
        f"witness: {_witness_text(w)}",
    ])
    return out, text


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = _Parser(prog="lensbound", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="homotopy and cobordism verdicts for two lens spaces")
    p.add_argument("lens1")
    p.add_argument("lens2")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("degrees", parents=[common], help="degrees of pi_1-isomorphic maps mod n")
    p.add_argument("lens1")
    p.add_argument("lens2")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("cobound", parents=[common],
                       help="decide pi_1-isomorphic bounding; inline JSON, or a file/'-' with one object per line")
    p.add_argument("source")
    p.set_defaults(func=None)

    p = sub.add_parser("ob", parents=[common], help="minimal bounding index of L(p,q), p prime >= 5")
    p.add_argument("lens")
    p.set_defaults(func=cmd_ob)

    p = sub.add_parser("chi", parents=[common], help="evaluate an Euler characteristic ledger")
    p.add_argument("ledger", help="JSON list of steps, inline or a file path")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("group", parents=[common], help="group constructions")
    gsub = p.add_subparsers(dest="group_command", required=True, parser_class=_Parser)
    g = gsub.add_parser("sigma", parents=[common], help="HNN double of a presentation and its abelianization")
    g.add_argument("presentation", help='JSON like {"gens": ["a"], "rels": [["a","a"]]}, inline or a file')
    g.set_defaults(func=cmd_group_sigma)
    g = gsub.add_parser("semidirect", parents=[common], help="facts about Z_p x|_u Z_d")
    g.add_argument("p", type=int)
    g.add_argument("u", type=int)
    g.add_argument("d", type=int)
    g.set_defaults(func=cmd_group_semidirect)
    g = gsub.add_parser("homology", parents=[common], help="H_k of a cyclic group")
    g.add_argument("n", type=int)
    g.add_argument("k", type=int)
    g.add_argument("--twist", type=int, help="unit u; report the action of a -> a^u")
    g.set_defaults(func=cmd_group_homology)

    p = sub.add_parser("action", parents=[common], help="analyze a weighted Z_n action on CP^2")
    p.add_argument("n", type=int)
    p.add_argument("weights", type=int, nargs=3)
    p.set_defaults(func=cmd_action)
    return parser


def _emit(out: TextIO, fmt: str, obj: dict, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _guarded(fn: Callable[[], tuple[dict, str]]) -> tuple[int, dict, str]:
    try:
        obj, text = fn()
        return EXIT_OK, obj, text
    except TheoremViolation as exc:
        return EXIT_INTERNAL, {"error": str(exc), "kind": "TheoremViolation"}, f"internal error: {exc}"
    except LensboundError as exc:
        return EXIT_INPUT, {"error": str(exc), "kind": type(exc).__name__}, f"error: {exc}"


def _run_cobound(args, out: TextIO, err: TextIO) -> int:
    if not _is_batch(args.source):
        code, obj, text = _guarded(lambda: _cobound_one(_load_json(args.source)))
        _emit(out if code == EXIT_OK else err, args.format, obj, text)
        return code
    if args.source == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.source) as fh:
            lines = fh.read().splitlines()
    worst = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        code, obj, text = _guarded(lambda: _cobound_one(_load_json(line)))
        if code != EXIT_OK:
            obj = {"line": lineno, **obj}
            text = f"line {lineno}: {text}"
        _emit(out, args.format, obj, text)
        worst = max(worst, code)
    return worst


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(parser.format_usage() + str(exc) + "\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if args.command == "cobound":
        return _run_cobound(args, out, err)
    code, obj, text = _guarded(lambda: args.func(args))
    _emit(out if code == EXIT_OK else err, args.format, obj, text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
