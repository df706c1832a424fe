"""JSON problem files and result documents.

A problem file looks like::

    {"omega_size": 3, "ambient_rank": 2,
     "generators": [[["1", "0", "0"], ["0", "2", "0"]], ...],
     "weights": ["1/3", "1/3", "1/3"],          (optional)
     "queries": [...], "basis": [...]}          (optional)

Each vector is an m-by-n matrix: outer index = coordinate, inner = atom.
Rationals are strings ``"p"`` or ``"p/q"``; idempotents are sorted atom lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .field import format_rational, parse_rational
from .module import GeneratorSet, ModVector
from .ring import AtomSpace, RingElem


class ProblemError(ValueError):
    """Invalid problem file; the message names the offending field."""


@dataclass
class Problem:
    space: AtomSpace
    ambient_rank: int
    generators: GeneratorSet
    queries: list = field(default_factory=list)
    basis: Optional[list] = None


def _rational(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ProblemError(f"{where}: expected a rational string 'p' or 'p/q', got {value!r}")
    try:
        return parse_rational(str(value))
    except ValueError as exc:
        raise ProblemError(f"{where}: {exc}") from None


def parse_vector(raw, space: AtomSpace, m: int, where: str) -> ModVector:
    if not isinstance(raw, list) or len(raw) != m:
        got = len(raw) if isinstance(raw, list) else type(raw).__name__
        raise ProblemError(f"{where}: expected {m} coordinate rows, got {got}")
    coords = []
    for k, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != space.n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ProblemError(f"{where}[{k}]: expected {space.n} atom values, got {got}")
        coords.append(RingElem(tuple(_rational(v, f"{where}[{k}][{w}]") for w, v in enumerate(row)),
                               space))
    return ModVector(tuple(coords), space)


def _positive_int(doc, key):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ProblemError(f"{key}: expected a positive integer, got {v!r}")
    return v


def parse_problem(doc) -> Problem:
    if not isinstance(doc, dict):
        raise ProblemError("top level: expected a JSON object")
    n = _positive_int(doc, "omega_size")
    m = _positive_int(doc, "ambient_rank")
    weights = doc.get("weights")
    if weights is not None:
        if not isinstance(weights, list):
            raise ProblemError("weights: expected a list")
        weights = tuple(_rational(v, f"weights[{w}]") for w, v in enumerate(weights))
    try:
        space = AtomSpace(n, weights)
    except ValueError as exc:
        raise ProblemError(f"weights: {exc}") from None
    raw_gens = doc.get("generators")
    if not isinstance(raw_gens, list):
        raise ProblemError("generators: expected a list of m-by-n matrices")
    gens = [parse_vector(g, space, m, f"generators[{k}]") for k, g in enumerate(raw_gens)]
    queries = doc.get("queries", [])
    if "query" in doc:
        queries = [doc["query"]] + list(queries)
    if not isinstance(queries, list):
        raise ProblemError("queries: expected a list")
    queries = [parse_vector(q, space, m, f"queries[{k}]") for k, q in enumerate(queries)]
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list):
            raise ProblemError("basis: expected a list")
        basis = [parse_vector(b, space, m, f"basis[{k}]") for k, b in enumerate(basis)]
    return Problem(space, m, GeneratorSet(tuple(gens), m, space), queries, basis)


def load_problem(path) -> Problem:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_problem(doc)


def vector_doc(x: ModVector) -> list:
    return [[format_rational(v) for v in c.values] for c in x.coords]


def ring_doc(a: RingElem) -> list:
    return [format_rational(v) for v in a.values]


def problem_header(problem: Problem) -> dict:
    head = {"omega_size": problem.space.n}
    if problem.space.weights is not None:
        head["weights"] = [format_rational(v) for v in problem.space.weights]
    head["ambient_rank"] = problem.ambient_rank
    return head


def _depth(value) -> int:
    if isinstance(value, list):
        return 1 + max((_depth(v) for v in value), default=0)
    if isinstance(value, dict):
        return 99
    return 0


def _emit(value, indent: int) -> str:
    # arrays nested at most two deep (one vector, one support list) stay on one line
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_emit(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and _depth(value) > 2:
        items = [pad + _emit(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def dumps(doc) -> str:
    """Deterministic pretty JSON: stable key order, short arrays inline."""
    return _emit(doc, 0) + "\n"
