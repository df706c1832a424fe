
import pytest
from hypothesis import given, strategies as st

from qbasis import (AtomSpace, ModVector, PreconditionError, StructuralError, concatenate,
                    evaluate_at, restrict, scalar_mul, support, vec_add, vec_support)
from qbasis.module import split

from conftest import ring_elems, spaces, vectors


def test_vec_support_f1(f1):
    z1 = f1[0]
    # fibers (1,0), (0,2), (0,0)
    assert vec_support(z1).sorted_atoms() == [0, 1]
    assert vec_support(ModVector.zero(f1.space, 2)).is_zero()


def test_evaluate_at(f1):
    assert evaluate_at(f1[0], 0) == (1, 0)
    assert evaluate_at(ModVector.zero(f1.space, 2), 2) == (0, 0)
    with pytest.raises(StructuralError):
        evaluate_at(f1[0], 3)


def test_plumbing_examples(f1):
    x = f1[2]
    s = f1.space
    assert restrict(s.one(), x) == x
    assert restrict(s.zero(), x) == ModVector.zero(s, 2)
    assert scalar_mul(s.constant(1), x) == x
    for i in s.all_idempotents():
        assert vec_support(restrict(i, x)) <= i


def test_mismatch_errors(f1):
    with pytest.raises(StructuralError):
        vec_add(f1[0], ModVector.zero(f1.space, 3))
    with pytest.raises(StructuralError):
        vec_add(f1[0], ModVector.zero(AtomSpace(4), 2))


def test_concatenate_examples(f1):
    s, x, y = f1.space, f1[0], f1[2]
    assert concatenate([s.idempotent([0]), s.idempotent([1, 2])], [x, x]) == x
    assert concatenate([s.one()], [y]) == y
    s2 = AtomSpace(2)
    a = ModVector((s2.elem([5, 7]),), s2)
    b = ModVector((s2.elem([9, 4]),), s2)
    got = concatenate([s2.idempotent([0]), s2.idempotent([1])], [a, b])
    assert got == ModVector((s2.elem([5, 4]),), s2)


def test_concatenate_requires_partition(f1):
    s, x = f1.space, f1[0]
    with pytest.raises(PreconditionError):
        concatenate([s.idempotent([0]), s.idempotent([0, 1])], [x, x])
    with pytest.raises(PreconditionError):
        concatenate([s.idempotent([0])], [x])


@st.composite
def vec_and_partition(draw):
    s = draw(spaces())
    x = draw(vectors(s, draw(st.integers(1, 3))))
    labels = draw(st.lists(st.integers(0, 3), min_size=s.n, max_size=s.n))
    parts = [s.idempotent(w for w in range(s.n) if labels[w] == k) for k in range(4)]
    return x, parts


@given(vec_and_partition())
def test_split_then_concatenate(xp):
    x, parts = xp
    assert concatenate(parts, split(x, parts)) == x


@given(vec_and_partition(), st.data())
def test_partition_convention(xp, data):
    # agreement on every piece of a partition of e forces equality
    x, parts = xp
    y = data.draw(vectors(x.space, x.ambient_rank))
    agree = all(restrict(i, x) == restrict(i, y) for i in parts)
    assert agree == (x == y)


@st.composite
def elem_vec(draw):
    s = draw(spaces())
    return draw(ring_elems(s)), draw(vectors(s, draw(st.integers(1, 3))))


@given(elem_vec())
def test_vec_support_laws(ax):
    a, x = ax
    assert vec_support(x).is_zero() == x.is_zero()
    assert vec_support(scalar_mul(a, x)) == support(a) & vec_support(x)
    for w in range(x.space.n):
        assert evaluate_at(x + x, w) == tuple(2 * v for v in evaluate_at(x, w))
