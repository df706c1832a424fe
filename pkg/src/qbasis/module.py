"""Vectors of the free module R^m over R = K^Omega.

A vector is stored coordinate-major: ``coords[k]`` is a ring element, so
``coords[k][w]`` is the value of coordinate ``k`` at atom ``w``. The fiber at
an atom is the K^m vector obtained by reading every coordinate there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, StructuralError
from .ring import ZERO, AtomSpace, Idempotent, RingElem, idem_sup, support


@dataclass(frozen=True)
class ModVector:
    coords: tuple
    space: AtomSpace

    def __post_init__(self):
        coords = tuple(c if isinstance(c, RingElem) else RingElem(tuple(c), self.space)
                       for c in self.coords)
        if not coords:
            raise StructuralError("ambient rank must be at least 1")
        for c in coords:
            if c.space != self.space:
                raise StructuralError("coordinates live over different atom spaces")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_fibers(cls, space: AtomSpace, fibers: Sequence[Sequence]) -> "ModVector":
        """Build from one K^m fiber per atom."""
        if len(fibers) != space.n:
            raise StructuralError(f"expected {space.n} fibers, got {len(fibers)}")
        m = len(fibers[0])
        if any(len(f) != m for f in fibers):
            raise StructuralError("fibers have different lengths")
        return cls(tuple(RingElem(tuple(f[k] for f in fibers), space) for k in range(m)), space)

    @classmethod
    def zero(cls, space: AtomSpace, m: int) -> "ModVector":
        return cls(tuple(RingElem((ZERO,) * space.n, space) for _ in range(m)), space)

    @property
    def ambient_rank(self) -> int:
        return len(self.coords)

    def fiber(self, w: int) -> tuple:
        return tuple(c.values[w] for c in self.coords)

    def fibers(self) -> list:
        return [self.fiber(w) for w in range(self.space.n)]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: "ModVector") -> "ModVector":
        return vec_add(self, other)

    def __sub__(self, other: "ModVector") -> "ModVector":
        _check_compatible(self, other)
        return ModVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.space)

    def __neg__(self) -> "ModVector":
        return ModVector(tuple(-a for a in self.coords), self.space)

    def __rmul__(self, a) -> "ModVector":
        if isinstance(a, Idempotent):
            return restrict(a, self)
        return scalar_mul(a, self)

    def __repr__(self):
        rows = [[str(v) for v in c.values] for c in self.coords]
        return f"ModVector({rows})"


def _check_compatible(x: ModVector, y: ModVector):
    if x.space != y.space:
        raise StructuralError(f"atom space mismatch: {x.space} vs {y.space}")
    if x.ambient_rank != y.ambient_rank:
        raise StructuralError(f"ambient rank mismatch: {x.ambient_rank} vs {y.ambient_rank}")


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generators of a submodule of R^m; zeros and repeats are allowed."""

    gens: tuple
    ambient_rank: int
    space: AtomSpace

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if self.ambient_rank < 1:
            raise StructuralError("ambient rank must be at least 1")
        for k, g in enumerate(gens):
            if g.space != self.space or g.ambient_rank != self.ambient_rank:
                raise StructuralError(f"generator {k} does not match the ambient space")

    @classmethod
    def of(cls, gens: Iterable[ModVector], space: AtomSpace = None, m: int = None) -> "GeneratorSet":
        gens = tuple(gens)
        if gens:
            space = space or gens[0].space
            m = m or gens[0].ambient_rank
        if space is None or m is None:
            raise StructuralError("an empty generator set needs its atom space and ambient rank")
        return cls(gens, m, space)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, k):
        return self.gens[k]


def vec_support(x: ModVector) -> Idempotent:
    """Atoms where the fiber of ``x`` is nonzero, i.e. the least ``i`` with ``i*x == x``."""
    return idem_sup((support(c) for c in x.coords), x.space)


def scalar_mul(a: RingElem, x: ModVector) -> ModVector:
    if a.space != x.space:
        raise StructuralError("scalar and vector live over different atom spaces")
    return ModVector(tuple(a * c for c in x.coords), x.space)


def vec_add(x: ModVector, y: ModVector) -> ModVector:
    _check_compatible(x, y)
    return ModVector(tuple(a + b for a, b in zip(x.coords, y.coords)), x.space)


def restrict(i: Idempotent, x: ModVector) -> ModVector:
    """``i * x``: keep the fibers on ``i`` and zero the rest."""
    if i.space != x.space:
        raise StructuralError("idempotent and vector live over different atom spaces")
    return scalar_mul(i.to_ring(), x)


def evaluate_at(x: ModVector, w: int) -> tuple:
    if not (isinstance(w, int) and 0 <= w < x.space.n):
        raise StructuralError(f"atom index {w!r} out of range for n={x.space.n}")
    return x.fiber(w)


def is_partition(parts: Sequence[Idempotent], space: AtomSpace) -> bool:
    seen = set()
    for p in parts:
        if p.space != space or seen & p.atoms:
            return False
        seen |= p.atoms
    return len(seen) == space.n


def concatenate(partition: Sequence[Idempotent], parts: Sequence[ModVector]) -> ModVector:
    """Glue ``parts[k]`` along ``partition[k]``.

    The result ``x`` is the unique vector with ``i_k * x == i_k * parts[k]``
    for every ``k``. Any countable partition of e at finite Omega has finitely
    many nonzero members, so a finite list covers the general case.
    """
    if len(partition) != len(parts):
        raise StructuralError("partition and parts have different lengths")
    if not parts:
        raise PreconditionError("empty list is not a partition of e")
    space = parts[0].space
    if not is_partition(partition, space):
        raise PreconditionError("idempotents are not a pairwise disjoint family joining to e")
    for p in parts[1:]:
        _check_compatible(parts[0], p)
    owner = {}
    for k, i in enumerate(partition):
        for w in i.atoms:
            owner[w] = k
    fibers = [parts[owner[w]].fiber(w) for w in range(space.n)]
    return ModVector.from_fibers(space, fibers)


def split(x: ModVector, partition: Sequence[Idempotent]) -> list:
    return [restrict(i, x) for i in partition]
