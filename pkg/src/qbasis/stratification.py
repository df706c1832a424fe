"""Separation idempotents for a vector against a span, and stratified solving.

Membership of ``x`` in the span of ``z_1..z_l`` over K^Omega decouples into
one K-linear system per atom. The atoms where the fiber system has no
solution form the separation idempotent; elsewhere the reduced-echelon
solution (free variables zero) is kept as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Sequence

from .errors import MembershipError, StructuralError
from .linalg import solve_columns
from .module import GeneratorSet, ModVector, vec_support
from .ring import ZERO, Idempotent, RingElem


@dataclass(frozen=True)
class MembershipReport:
    """``outside``: atoms where ``x`` leaves the fiber span.

    ``witness`` maps every other atom to coefficients ``c`` with
    ``sum_j c[j] * z_j(w) == x(w)``.
    """

    outside: Idempotent
    witness: Dict[int, tuple] = field(default_factory=dict)

    @property
    def is_member(self) -> bool:
        return self.outside.is_zero()


def _gens(G):
    return list(G.gens) if isinstance(G, GeneratorSet) else list(G)


def _check(x: ModVector, gens):
    for k, z in enumerate(gens):
        if z.space != x.space or z.ambient_rank != x.ambient_rank:
            raise StructuralError(f"generator {k} does not match the query vector's space/rank")


def fiber_solve(x: ModVector, gens, w: int):
    """Coefficients expressing ``x(w)`` in the fibers of ``gens`` at ``w``, or None."""
    columns = [z.fiber(w) for z in gens]
    return solve_columns(columns, x.fiber(w), ZERO)


def nonmembership_idempotent(x: ModVector, G) -> MembershipReport:
    gens = _gens(G)
    _check(x, gens)
    outside = []
    witness = {}
    for w in range(x.space.n):
        c = fiber_solve(x, gens, w)
        if c is None:
            outside.append(w)
        else:
            witness[w] = tuple(c)
    return MembershipReport(Idempotent(frozenset(outside), x.space), witness)


def equality_stratifier(x: ModVector, y: ModVector) -> Idempotent:
    """Least idempotent off which ``x`` and ``y`` agree: ``vec_support(x - y)``."""
    return vec_support(x - y)


def solve_on_stratum(x: ModVector, G, i: Idempotent) -> list:
    """Ring coefficients ``c`` with ``i * sum_j c_j z_j == i * x`` and ``support(c_j) <= i``."""
    gens = _gens(G)
    _check(x, gens)
    if i.space != x.space:
        raise StructuralError("idempotent and vector live over different atom spaces")
    n = x.space.n
    table = [[ZERO] * n for _ in gens]
    bad = []
    for w in sorted(i.atoms):
        c = fiber_solve(x, gens, w)
        if c is None:
            bad.append(w)
            continue
        for j, v in enumerate(c):
            table[j][w] = v
    if bad:
        outside = Idempotent(frozenset(bad), x.space)
        raise MembershipError(f"vector is not in the span at atoms {bad}", outside)
    return [RingElem(tuple(row), x.space) for row in table]


def combine(coeffs: Sequence[RingElem], gens, space, m) -> ModVector:
    """``sum_j coeffs[j] * gens[j]`` (the zero vector for an empty sum)."""
    total = ModVector.zero(space, m)
    for c, z in zip(coeffs, gens):
        total = total + c * z
    return total
