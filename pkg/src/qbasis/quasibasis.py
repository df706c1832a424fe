"""Quasi-basis construction, verification, rank strata and coordinates.

The construction scans generators in input order. A generator already in
the current span is skipped; otherwise its separation idempotent ``j0`` is
pushed down the support chain: slot ``p`` absorbs ``z`` on the atoms of the
running idempotent where ``x_p`` vanishes, the running idempotent shrinks
to its meet with ``supp(x_p)``, and whatever survives the last slot becomes
a new element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import MembershipError, PreconditionError, StructuralError
from .linalg import rank
from .module import GeneratorSet, ModVector, restrict, vec_support
from .ring import AtomSpace, Idempotent
from .stratification import nonmembership_idempotent, solve_on_stratum


@dataclass(frozen=True)
class QuasiBasis:
    """Ordered candidate ``x_1..x_n``; :func:`verify` decides if it is one."""

    elements: tuple
    space: AtomSpace
    ambient_rank: int
    supports: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        for k, x in enumerate(elements):
            if x.space != self.space or x.ambient_rank != self.ambient_rank:
                raise StructuralError(f"element {k} does not match the ambient space")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "supports", tuple(vec_support(x) for x in elements))

    @classmethod
    def empty(cls, space: AtomSpace, m: int) -> "QuasiBasis":
        return cls((), space, m)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def support_chain(self) -> list:
        return [s.sorted_atoms() for s in self.supports]


@dataclass(frozen=True)
class RankProfile:
    """``strata[j]`` is the locus where the module is free of rank ``j``."""

    strata: tuple

    def as_lists(self) -> list:
        return [s.sorted_atoms() for s in self.strata]


@dataclass(frozen=True)
class VerificationReport:
    span_ok: bool
    chain_ok: bool
    independent_ok: bool
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.span_ok and self.chain_ok and self.independent_ok


def _cascade(current: QuasiBasis, z: ModVector, j0: Idempotent) -> QuasiBasis:
    running = j0
    new = list(current.elements)
    for p, (x, s) in enumerate(zip(current.elements, current.supports)):
        nxt = running & s
        gap = running.minus(nxt)
        if gap:
            new[p] = x + restrict(gap, z)
        running = nxt
        if not running:
            break
    if running:
        new.append(restrict(running, z))
    return QuasiBasis(tuple(new), current.space, current.ambient_rank)


def insert_generator(current: QuasiBasis, z: ModVector) -> QuasiBasis:
    """One induction step: absorb ``z``, which must not lie in ``span(current)``."""
    j0 = nonmembership_idempotent(z, current.elements).outside
    if not j0:
        raise PreconditionError("generator is already a member of the current span")
    return _cascade(current, z, j0)


def construct(G: GeneratorSet) -> QuasiBasis:
    qb = QuasiBasis.empty(G.space, G.ambient_rank)
    for z in G.gens:
        j0 = nonmembership_idempotent(z, qb.elements).outside
        if j0:
            qb = _cascade(qb, z, j0)
    return qb


def construct_steps(G: GeneratorSet):
    """Yield ``(k, qb)`` after each generator ``k``, including skipped ones."""
    qb = QuasiBasis.empty(G.space, G.ambient_rank)
    for k, z in enumerate(G.gens):
        j0 = nonmembership_idempotent(z, qb.elements).outside
        if j0:
            qb = _cascade(qb, z, j0)
        yield k, qb


def _first_independence_failure(elements, supports, space):
    for w in range(space.n):
        live = [k for k, s in enumerate(supports) if w in s.atoms]
        fibers = [elements[k].fiber(w) for k in live]
        if rank(fibers) < len(fibers):
            return {"clause": "independence", "atom": w, "elements": live}
    return None


def verify(qb: QuasiBasis, G: GeneratorSet) -> VerificationReport:
    """Check the three quasi-basis clauses of ``qb`` with respect to ``G``."""
    if qb.space != G.space or qb.ambient_rank != G.ambient_rank:
        raise StructuralError("candidate and generators live in different ambient modules")
    counterexample = None

    span_ok = True
    for k, z in enumerate(G.gens):
        out = nonmembership_idempotent(z, qb.elements).outside
        if out:
            span_ok = False
            counterexample = {"clause": "span", "generator": k, "atoms": out.sorted_atoms()}
            break
    if span_ok:
        for k, x in enumerate(qb.elements):
            out = nonmembership_idempotent(x, G.gens).outside
            if out:
                span_ok = False
                counterexample = {"clause": "span", "element": k, "atoms": out.sorted_atoms()}
                break

    chain_ok = True
    for k in range(len(qb.supports) - 1):
        if not qb.supports[k + 1] <= qb.supports[k]:
            chain_ok = False
            extra = qb.supports[k + 1].atoms - qb.supports[k].atoms
            counterexample = counterexample or {"clause": "chain", "element": k + 1,
                                                "atom": min(extra)}
            break

    failure = _first_independence_failure(qb.elements, qb.supports, qb.space)
    independent_ok = failure is None
    counterexample = counterexample or failure

    return VerificationReport(span_ok, chain_ok, independent_ok, counterexample)


def rank_profile(qb: QuasiBasis) -> RankProfile:
    chain = all(qb.supports[k + 1] <= qb.supports[k] for k in range(len(qb) - 1))
    if not chain:
        raise PreconditionError("supports are not a nonincreasing chain")
    if _first_independence_failure(qb.elements, qb.supports, qb.space) is not None:
        raise PreconditionError("elements are not fiber-wise independent")
    e = qb.space.one()
    chain = [e, *qb.supports, qb.space.zero()]
    return RankProfile(tuple(chain[j].minus(chain[j + 1]) for j in range(len(qb) + 1)))


def coordinates(x: ModVector, qb: QuasiBasis) -> list:
    """Unique coefficients ``a`` with ``sum a_j x_j == x`` and ``a_j * i_{x_j} == a_j``."""
    report = nonmembership_idempotent(x, qb.elements)
    if not report.is_member:
        raise MembershipError(f"vector is outside the span at atoms {report.outside.sorted_atoms()}",
                              report.outside)
    coeffs = solve_on_stratum(x, qb.elements, qb.space.one())
    return [a * s for a, s in zip(coeffs, qb.supports)]


def from_generators(gens: Sequence[ModVector], space: AtomSpace = None, m: int = None) -> QuasiBasis:
    """Shortcut: ``construct`` on a plain list."""
    return construct(GeneratorSet.of(gens, space, m))
