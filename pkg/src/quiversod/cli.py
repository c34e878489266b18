"""Command-line front end.

Exit codes: 0 success / Positive, 1 Negative (or failed assumptions for
``check-assumptions``), 2 Inconclusive, 3 usage or input error, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .betti import poincare_polynomial
from .bundles import format_rational, parse_bundle
from .core import QuiverError
from .hn import hn_types
from .io import InputError, Problem, load_problem, parse_int_list
from .sod import Questions
from .teleman import eta_bound, strata, t_star, weight_linearised, weights_hom, weights_universal

SCHEMA = "quiversod/1"
EXIT_USAGE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rat(x) -> str:
    return format_rational(x)


def _json_rat(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _type_str(parts) -> str:
    return "(" + ", ".join("(" + ", ".join(map(str, p)) + ")" for p in parts) + ")"


# -- subcommands ---------------------------------------------------------------


def cmd_check_assumptions(problem: Problem, args) -> tuple[dict, list[str], int]:
    M = problem.moduli
    rep = M.assumptions
    payload = {
        "theta": list(M.theta),
        "theta_can": list(M.theta_can),
        "acyclic": rep.acyclic,
        "coprime": rep.coprime,
        "strongly_amply_stable": rep.strongly_amply_stable,
        "witnesses": {k: [list(w) for w in v] if isinstance(v, list) and v and isinstance(v[0], (list, tuple)) else v
                      for k, v in rep.witnesses.items()},
        "ok": rep.ok,
    }
    lines = [
        f"theta = {list(M.theta)}",
        f"acyclic: {'yes' if rep.acyclic else 'no'}",
        f"coprime: {'yes' if rep.coprime else 'no'}",
        f"strongly amply stable: {'yes' if rep.strongly_amply_stable else 'no'}",
    ]
    for k, v in rep.witnesses.items():
        lines.append(f"witness for {k}: {v}")
    if rep.ok:
        payload.update(index=M.index, dimension=M.dimension)
        lines += [f"index r = {M.index}", f"dimension = {M.dimension}"]
    return payload, lines, 0 if rep.ok else 1


def cmd_hn_types(problem: Problem, args):
    M = problem.moduli
    types = hn_types(M.quiver, M.d, M.theta)
    payload = {"theta": list(M.theta), "types": [t.to_list() for t in types]}
    lines = [_type_str(t.parts) for t in types]
    return payload, lines, 0


def _union(multisets):
    out = set()
    for w in multisets:
        out |= set(w.support())
    return sorted(out)


def cmd_teleman_table(problem: Problem, args):
    M = problem.moduli
    M.require_assumptions()
    a = _linearisation(problem, args)
    rows, lines = [], []
    lines.append("type | W(U_i^ * U_j) | W(U_i(a)) | W(O(H)) | eta")
    for sw in strata(M):
        hom = [weights_hom(sw, i, j) for i in range(1, M.n + 1) for j in range(1, M.n + 1)]
        uni = [weights_universal(sw, i, a) for i in range(1, M.n + 1)]
        h = weight_linearised(sw, M.h_character)
        eta = eta_bound(sw, M.quiver)
        hom_mult = {}
        for w in hom:
            for x, m in w.items():
                hom_mult[x] = hom_mult.get(x, 0) + m
        rows.append({
            "type": sw.hn_type.to_list(),
            "c": sw.c,
            "k": list(sw.k),
            "hom_support": [_json_rat(x) for x in _union(hom)],
            "universal_support": [_json_rat(x) for x in _union(uni)],
            "h_weight": _json_rat(h),
            "eta": _json_rat(eta),
            "multiplicities": {
                "hom": {str(_json_rat(x)): m for x, m in sorted(hom_mult.items())},
                "universal": [
                    {str(_json_rat(x)): m for x, m in w.items()} for w in uni
                ],
            },
        })
        lines.append(" | ".join([
            _type_str(sw.parts),
            " ".join(_rat(x) for x in _union(hom)),
            " ".join(_rat(x) for x in _union(uni)),
            _rat(h),
            _rat(eta),
        ]))
    return {"linearisation": list(a), "strata": rows}, lines, 0


def cmd_hodge(problem: Problem, args):
    M = problem.moduli
    P = poincare_polynomial(M.quiver, M.d, M.theta)
    payload = {"hodge": list(P.coefficients), "hh0": P.total, "picard_rank": P[1] if P.degree else 0}
    return payload, [" ".join(map(str, P.coefficients)) + f" | HH0 = {P.total}"], 0


def _presentation(problem: Problem, args):
    from .chow import Presentation

    return Presentation(problem.moduli, _linearisation(problem, args))


def cmd_chow_basis(problem: Problem, args):
    P = _presentation(problem, args)
    payload = {"linearisation": list(P.a), "basis_sizes": P.basis_sizes, "degree_scalar": _json_rat(P.degree_scalar)}
    return payload, [" ".join(map(str, P.basis_sizes))], 0


def cmd_euler_char(problem: Problem, args):
    if not args.expr:
        raise UsageError("euler-char requires --expr")
    P = _presentation(problem, args)
    F = parse_bundle(args.expr, P.moduli, P.a)
    chi = P.euler_characteristic(F)
    return {"expr": args.expr, "bundle": F.describe(P.moduli), "linearisation": list(P.a), "chi": chi}, [f"chi({F.describe(P.moduli)}) = {chi}"], 0


def _verdict_payload(req, v):
    return {
        "bundle": v.label,
        "scope": req.scope,
        "ranges": {k: s.value for k, s in v.degree_ranges.items()},
        "evidence": [str(e) for e in v.evidence],
        "chi": v.chi,
    }


def _question_output(qv):
    payload = {
        "question": qv.question,
        "answer": qv.answer.value,
        "collection": qv.collection,
        "predicted_collection_length": qv.predicted_collection_length,
        "hh0": qv.hh0,
        "notes": qv.notes,
        "verdicts": [_verdict_payload(r, v) for r, v in qv.verdicts],
    }
    lines = [f"question {qv.question}: {qv.answer.value}",
             f"collection ({qv.predicted_collection_length} objects, HH0 = {qv.hh0}): {', '.join(qv.collection)}"]
    lines += [f"note: {n}" for n in qv.notes]
    if qv.verdicts:
        lines.append("bundle | needs | H0 | H>=1 | all | evidence")
        for r, v in qv.verdicts:
            rng = v.degree_ranges
            lines.append(" | ".join([
                v.label, r.scope, rng["H0"].value, rng["H>=1"].value, rng["all"].value,
                ", ".join(str(e) for e in v.evidence) or "-",
            ]))
    return payload, lines


def cmd_verify_sod(problem: Problem, args):
    M = problem.moduli
    M.require_assumptions()
    q = Questions(M, _linearisation(problem, args))
    which = args.question.upper()
    if which == "A":
        qv = q.question_a()
    elif which == "B":
        qv = q.question_b()
    elif which == "C":
        qv = q.question_c(args.collection)
    else:
        qv = q.theorem_d()
    payload, lines = _question_output(qv)
    payload["linearisation"] = list(q.a)
    return payload, lines, qv.exit_code


def cmd_theorem_d(problem: Problem, args):
    M = problem.moduli
    M.require_assumptions()
    per_type, tmin = t_star(M.quiver, M.d)
    q = Questions(M, _linearisation(problem, args))
    qv = q.theorem_d()
    payload, lines = _question_output(qv)
    payload["t_star"] = [{"type": t.to_list(), "t": v} for t, v in per_type.items()]
    payload["min_t_star"] = tmin
    payload["criterion"] = tmin == M.index - 1
    head = [f"{_type_str(t.parts)} | t = {v}" for t, v in per_type.items()]
    head.append(f"min t = {tmin}, r - 1 = {M.index - 1}, criterion {'holds' if tmin == M.index - 1 else 'fails'}")
    return payload, head + lines, qv.exit_code


COMMANDS = {
    "check-assumptions": cmd_check_assumptions,
    "hn-types": cmd_hn_types,
    "teleman-table": cmd_teleman_table,
    "hodge": cmd_hodge,
    "chow-basis": cmd_chow_basis,
    "euler-char": cmd_euler_char,
    "verify-sod": cmd_verify_sod,
    "theorem-d": cmd_theorem_d,
}


def _linearisation(problem: Problem, args):
    if args.linearisation:
        a = parse_int_list(args.linearisation, "linearisation")
    else:
        a = problem.linearisation_or_default()
    return problem.moduli.check_linearisation(a)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiversod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="quiver input document (JSON)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--linearisation", help="a1,...,an with a . d = 1")
        p.add_argument("--theta", help="stability parameter t1,...,tn")
        if name == "euler-char":
            p.add_argument("--expr", required=True, help='bundle expression, e.g. "U1^ * U2 * O(-1H)"')
        if name == "verify-sod":
            p.add_argument("--question", choices=("A", "B", "C", "D", "a", "b", "c", "d"), default="A")
            p.add_argument("--collection", choices=("A", "B", "U"), default=None,
                           help="collection checked by question C (default: B if question B is positive, else A)")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"a subcommand is required: {', '.join(COMMANDS)}")
        problem = load_problem(args.input)
        if args.theta:
            theta = parse_int_list(args.theta, "theta")
            problem = Problem(problem.quiver, problem.d, theta, problem.linearisation)
        payload, lines, code = COMMANDS[args.command](problem, args)
    except (UsageError, InputError, QuiverError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command, **payload}
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
