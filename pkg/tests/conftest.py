from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from qbasis import AtomSpace, GeneratorSet, Idempotent, ModVector, RingElem

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ENTRIES = [Fraction(v) for v in (-2, -1, 0, 1, 2)] + [Fraction(1, 2), Fraction(-1, 3)]


@pytest.fixture
def f1():
    """Three generators of a submodule of R^2 over three atoms.

    Fibers: z1 = (1,0),(0,2),(0,0); z2 = (0,0),(1,1),(0,0); z3 = (1,1),(0,0),(1,0).
    """
    space = AtomSpace(3)
    z1 = ModVector.from_fibers(space, [(1, 0), (0, 2), (0, 0)])
    z2 = ModVector.from_fibers(space, [(0, 0), (1, 1), (0, 0)])
    z3 = ModVector.from_fibers(space, [(1, 1), (0, 0), (1, 0)])
    return GeneratorSet.of([z1, z2, z3])


scalars = st.sampled_from(ENTRIES) | st.fractions(max_denominator=7).filter(
    lambda q: abs(q.numerator) < 50)


@st.composite
def spaces(draw, max_n=6):
    return AtomSpace(draw(st.integers(1, max_n)))


def ring_elems(space, values=scalars):
    return st.lists(values, min_size=space.n, max_size=space.n).map(
        lambda vs: RingElem(tuple(vs), space))


def idempotents(space):
    return st.sets(st.integers(0, space.n - 1)).map(lambda s: Idempotent(frozenset(s), space))


def vectors(space, m, values=scalars):
    return st.lists(st.lists(values, min_size=m, max_size=m), min_size=space.n,
                    max_size=space.n).map(lambda fs: ModVector.from_fibers(space, fs))


@st.composite
def generator_sets(draw, max_n=5, max_m=4, max_l=5):
    space = draw(spaces(max_n))
    m = draw(st.integers(1, max_m))
    sparse = st.sampled_from(ENTRIES + [Fraction(0)] * 6)
    gens = draw(st.lists(vectors(space, m, sparse), max_size=max_l))
    return GeneratorSet(tuple(gens), m, space)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
