"""Command line front end: ``qbasis {compute,verify,member,coords} FILE``.

Exit codes: 0 success, 1 clean negative answer, 2 invalid input,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import StructuralError
from .fileformat import (ProblemError, dumps, load_problem, parse_vector, problem_header,
                         ring_doc, vector_doc)
from .field import format_rational
from .oracle import oracle_rank_profile, oracle_supports
from .quasibasis import QuasiBasis, construct, coordinates, rank_profile, verify
from .stratification import nonmembership_idempotent

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_ORACLE = 0, 1, 2, 3


def _basis_doc(qb: QuasiBasis) -> dict:
    return {
        "n": len(qb),
        "elements": [vector_doc(x) for x in qb.elements],
        "supports": qb.support_chain(),
    }


def cmd_compute(problem, args):
    qb = construct(problem.generators)
    doc = problem_header(problem)
    doc["generators"] = [vector_doc(z) for z in problem.generators]
    doc.update(_basis_doc(qb))
    doc["strata"] = rank_profile(qb).as_lists()
    code = EXIT_OK
    if args.oracle_check:
        oracle = oracle_rank_profile(problem.generators)
        chain = [s.sorted_atoms() for s in oracle_supports(problem.generators)]
        doc["oracle"] = {"supports": chain, "strata": oracle.as_lists()}
        match = doc["strata"] == doc["oracle"]["strata"] and doc["supports"] == chain
        doc["oracle_match"] = match
        if not match:
            code = EXIT_ORACLE
    return doc, code


def _candidate(problem, raw_doc, source="input"):
    for key in ("basis", "elements"):
        if key in raw_doc:
            raw = raw_doc[key]
            if not isinstance(raw, list):
                raise ProblemError(f"{source}: {key}: expected a list")
            return [parse_vector(b, problem.space, problem.ambient_rank, f"{key}[{k}]")
                    for k, b in enumerate(raw)]
    raise ProblemError(f"{source}: verify needs a 'basis' (or 'elements') list of candidate vectors")


def cmd_verify(problem, args):
    if args.basis:
        try:
            with open(args.basis, encoding="utf-8") as fh:
                raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ProblemError(f"{args.basis}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        if not isinstance(raw, dict):
            raise ProblemError(f"{args.basis}: expected a JSON object")
        candidate = _candidate(problem, raw, args.basis)
    else:
        candidate = _candidate(problem, args.raw)
    qb = QuasiBasis(tuple(candidate), problem.space, problem.ambient_rank)
    report = verify(qb, problem.generators)
    doc = problem_header(problem)
    doc.update({
        "span_ok": report.span_ok,
        "chain_ok": report.chain_ok,
        "independent_ok": report.independent_ok,
        "counterexample": report.counterexample,
        "verified": report.ok,
    })
    return doc, EXIT_OK if report.ok else EXIT_NEGATIVE


def _need_queries(problem):
    if not problem.queries:
        raise ProblemError("queries: at least one query vector is required")


def cmd_member(problem, args):
    _need_queries(problem)
    results = []
    for k, x in enumerate(problem.queries):
        rep = nonmembership_idempotent(x, problem.generators)
        results.append({
            "query": k,
            "member": rep.is_member,
            "outside": rep.outside.sorted_atoms(),
            "witnesses": [{"atom": w, "coefficients": [format_rational(v) for v in c]}
                          for w, c in sorted(rep.witness.items())],
        })
    doc = problem_header(problem)
    doc["results"] = results
    return doc, EXIT_OK if all(r["member"] for r in results) else EXIT_NEGATIVE


def cmd_coords(problem, args):
    _need_queries(problem)
    qb = construct(problem.generators)
    doc = problem_header(problem)
    doc.update(_basis_doc(qb))
    results = []
    for k, x in enumerate(problem.queries):
        rep = nonmembership_idempotent(x, qb.elements)
        if rep.is_member:
            coeffs = coordinates(x, qb)
            results.append({"query": k, "representable": True,
                            "coefficients": [ring_doc(a) for a in coeffs]})
        else:
            results.append({"query": k, "representable": False,
                            "outside": rep.outside.sorted_atoms()})
    doc["results"] = results
    return doc, EXIT_OK if all(r["representable"] for r in results) else EXIT_NEGATIVE


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "member": cmd_member, "coords": cmd_coords}


def _load(path):
    problem = load_problem(path)
    with open(path, encoding="utf-8") as fh:
        return problem, json.load(fh)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="problem file (JSON)")
    common.add_argument("--output", "-o", help="write the result document here instead of stdout")
    common.add_argument("--quiet", "-q", action="store_true",
                        help="suppress the document on stdout and diagnostics; exit code only")
    parser = argparse.ArgumentParser(prog="qbasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("compute", parents=[common], help="construct a quasi-basis and its rank strata")
    p.add_argument("--oracle-check", action="store_true",
                   help="cross-check strata against the fiber-rank oracle (exit 3 on mismatch)")
    p = sub.add_parser("verify", parents=[common], help="check a candidate quasi-basis")
    p.add_argument("--basis", help="read the candidate from this file ('basis' or 'elements')")
    sub.add_parser("member", parents=[common], help="separation idempotents of the queries")
    sub.add_parser("coords", parents=[common], help="coordinates of the queries in the quasi-basis")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem, args.raw = _load(args.input)
        doc, code = COMMANDS[args.command](problem, args)
    except (ProblemError, StructuralError) as exc:
        if not args.quiet:
            print(f"qbasis: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        if not args.quiet:
            print(f"qbasis: {exc}", file=sys.stderr)
        return EXIT_INVALID
    text = dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    elif not args.quiet:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
