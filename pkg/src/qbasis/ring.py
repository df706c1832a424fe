"""The coefficient ring K^Omega over a finite atom space.

Elements are functions on ``n`` atoms with exact scalar values. Idempotents
are kept extensionally as atom sets so lattice operations are set
operations; :meth:`Idempotent.to_ring` and :func:`idempotent_of` convert
between the two views.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Tuple

from .errors import StructuralError
from .field import Scalar, to_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class AtomSpace:
    """``n`` atoms of a finite sigma-algebra.

    ``weights`` are probabilities carried as metadata only; nothing in the
    algebra reads them.
    """

    n: int
    weights: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"atom count must be a positive integer, got {self.n!r}")
        if self.weights is not None:
            w = tuple(Fraction(to_scalar(v)) for v in self.weights)
            object.__setattr__(self, "weights", w)
            if len(w) != self.n:
                raise ValueError(f"expected {self.n} weights, got {len(w)}")
            if any(v <= 0 for v in w):
                raise ValueError("weights must be positive")
            if sum(w) != 1:
                raise ValueError(f"weights sum to {sum(w)}, not 1")

    @property
    def atoms(self) -> range:
        return range(self.n)

    def zero(self) -> "Idempotent":
        return Idempotent(frozenset(), self)

    def one(self) -> "Idempotent":
        return Idempotent(frozenset(range(self.n)), self)

    def idempotent(self, atoms: Iterable[int]) -> "Idempotent":
        return Idempotent(frozenset(atoms), self)

    def elem(self, values: Iterable) -> "RingElem":
        return RingElem(tuple(values), self)

    def constant(self, value) -> "RingElem":
        return RingElem((value,) * self.n, self)

    def all_idempotents(self):
        """Every idempotent, in order of the bitmask ``0 .. 2**n - 1``."""
        for mask in range(1 << self.n):
            yield Idempotent(frozenset(w for w in range(self.n) if mask >> w & 1), self)


def _check_space(a, b):
    if a.space != b.space:
        raise StructuralError(f"atom space mismatch: {a.space} vs {b.space}")


@dataclass(frozen=True)
class Idempotent:
    """Indicator of an atom set; the zero idempotent has no atoms."""

    atoms: frozenset
    space: AtomSpace

    def __post_init__(self):
        atoms = frozenset(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        bad = [w for w in atoms if not (isinstance(w, int) and 0 <= w < self.space.n)]
        if bad:
            raise StructuralError(f"atom indices {sorted(bad)} out of range for n={self.space.n}")

    def join(self, other: "Idempotent") -> "Idempotent":
        _check_space(self, other)
        return Idempotent(self.atoms | other.atoms, self.space)

    def meet(self, other: "Idempotent") -> "Idempotent":
        _check_space(self, other)
        return Idempotent(self.atoms & other.atoms, self.space)

    def complement(self) -> "Idempotent":
        return Idempotent(frozenset(range(self.space.n)) - self.atoms, self.space)

    def minus(self, other: "Idempotent") -> "Idempotent":
        """``self - other`` as a ring element; requires ``other <= self``."""
        _check_space(self, other)
        if not other.atoms <= self.atoms:
            raise StructuralError("difference of idempotents is idempotent only when other <= self")
        return Idempotent(self.atoms - other.atoms, self.space)

    __or__ = join
    __and__ = meet
    __invert__ = complement

    def __le__(self, other: "Idempotent") -> bool:
        _check_space(self, other)
        return self.atoms <= other.atoms

    def __ge__(self, other: "Idempotent") -> bool:
        return other <= self

    def __lt__(self, other: "Idempotent") -> bool:
        return self <= other and self.atoms != other.atoms

    def __gt__(self, other: "Idempotent") -> bool:
        return other < self

    def is_zero(self) -> bool:
        return not self.atoms

    def __bool__(self):
        return bool(self.atoms)

    def is_one(self) -> bool:
        return len(self.atoms) == self.space.n

    def sorted_atoms(self) -> list:
        return sorted(self.atoms)

    def to_ring(self) -> "RingElem":
        return RingElem(tuple(ONE if w in self.atoms else ZERO for w in range(self.space.n)), self.space)

    def __repr__(self):
        return f"Idempotent({self.sorted_atoms()}, n={self.space.n})"


@dataclass(frozen=True)
class RingElem:
    """A function Omega -> K, stored as one exact scalar per atom."""

    values: tuple
    space: AtomSpace = field(repr=False)

    def __post_init__(self):
        vals = tuple(to_scalar(v) for v in self.values)
        if len(vals) != self.space.n:
            raise StructuralError(f"expected {self.space.n} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def _raw(cls, values, space):
        # skips coercion; values must already be exact scalars of the right length
        obj = object.__new__(cls)
        object.__setattr__(obj, "values", values)
        object.__setattr__(obj, "space", space)
        return obj

    def __add__(self, other: "RingElem") -> "RingElem":
        _check_space(self, other)
        return RingElem._raw(tuple(a + b for a, b in zip(self.values, other.values)), self.space)

    def __sub__(self, other: "RingElem") -> "RingElem":
        _check_space(self, other)
        return RingElem._raw(tuple(a - b for a, b in zip(self.values, other.values)), self.space)

    def __neg__(self) -> "RingElem":
        return RingElem._raw(tuple(-a for a in self.values), self.space)

    def __mul__(self, other: "RingElem") -> "RingElem":
        if isinstance(other, Idempotent):
            other = other.to_ring()
        elif not isinstance(other, RingElem):
            return NotImplemented
        _check_space(self, other)
        return RingElem._raw(tuple(a * b for a, b in zip(self.values, other.values)), self.space)

    def __getitem__(self, w: int) -> Scalar:
        return self.values[w]

    def is_zero(self) -> bool:
        return not any(self.values)

    def support(self) -> Idempotent:
        return support(self)

    def gen_inverse(self) -> "RingElem":
        return gen_inverse(self)


def idem_join(a: Idempotent, b: Idempotent) -> Idempotent:
    return a.join(b)


def idem_meet(a: Idempotent, b: Idempotent) -> Idempotent:
    return a.meet(b)


def idem_complement(a: Idempotent) -> Idempotent:
    return a.complement()


def idem_sup(family, space: Optional[AtomSpace] = None) -> Idempotent:
    """Join of a finite family. The empty family needs ``space`` and gives 0."""
    family = list(family)
    if not family:
        if space is None:
            raise StructuralError("the supremum of an empty family needs an atom space")
        return space.zero()
    if space is not None:
        _check_space(family[0], Idempotent(frozenset(), space))
    return reduce(Idempotent.join, family)


def idem_inf(family, space: Optional[AtomSpace] = None) -> Idempotent:
    family = list(family)
    if not family:
        if space is None:
            raise StructuralError("the infimum of an empty family needs an atom space")
        return space.one()
    return reduce(Idempotent.meet, family)


def ring_add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def support(a: RingElem) -> Idempotent:
    """Least idempotent ``i`` with ``i*a == a``: the atoms where ``a`` is nonzero."""
    return Idempotent(frozenset(w for w, v in enumerate(a.values) if v != 0), a.space)


def gen_inverse(a: RingElem) -> RingElem:
    """Pointwise reciprocal on the support of ``a`` and zero elsewhere."""
    return RingElem._raw(tuple(1 / v if v != 0 else v for v in a.values), a.space)


def idempotent_of(a: RingElem) -> Idempotent:
    """Convert a ring element that satisfies a*a == a back to an atom set."""
    for w, v in enumerate(a.values):
        if v != 0 and v != 1:
            raise ValueError(f"value {v} at atom {w} is not 0 or 1; element is not idempotent")
    return support(a)
