from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qbasis import (AtomSpace, GeneratorSet, MembershipError, ModVector, PreconditionError,
                    QuasiBasis, construct, coordinates, insert_generator,
                    oracle_rank_profile, rank_profile, restrict, verify, vec_support)
from qbasis.oracle import oracle_supports
from qbasis.quasibasis import construct_steps
from qbasis.stratification import combine

from conftest import generator_sets


def chain(qb):
    return qb.support_chain()


def test_insert_into_empty(f1):
    qb = insert_generator(QuasiBasis.empty(f1.space, 2), f1[0])
    assert qb.elements == (f1[0],)
    assert chain(qb) == [[0, 1]]


def test_insert_second_f1(f1):
    qb = insert_generator(QuasiBasis((f1[0],), f1.space, 2), f1[1])
    # z2 leaves span{z1} only at w1, where its fiber (1,1) is off the line of (0,2)
    assert chain(qb) == [[0, 1], [1]]
    assert qb[0] == f1[0]
    assert qb[1] == restrict(f1.space.idempotent([1]), f1[1])


def test_insert_disjoint_merges():
    s = AtomSpace(3)
    x1 = ModVector.from_fibers(s, [(1,), (0,), (0,)])
    z = ModVector.from_fibers(s, [(0,), (3,), (0,)])
    qb = insert_generator(QuasiBasis((x1,), s, 1), z)
    assert len(qb) == 1
    assert qb[0] == x1 + z
    assert chain(qb) == [[0, 1]]


def test_insert_member_refused(f1):
    qb = construct(f1)
    with pytest.raises(PreconditionError):
        insert_generator(qb, f1[2])


def test_construct_f1(f1):
    qb = construct(f1)
    assert len(qb) == 2
    assert chain(qb) == [[0, 1, 2], [0, 1]]
    assert verify(qb, f1).ok
    assert rank_profile(qb).as_lists() == [[], [2], [0, 1]]


def test_construct_degenerate():
    s = AtomSpace(3)
    zero = ModVector.zero(s, 2)
    assert len(construct(GeneratorSet.of([zero], s, 2))) == 0
    assert len(construct(GeneratorSet.of([], s, 2))) == 0
    assert rank_profile(QuasiBasis.empty(s, 2)).as_lists() == [[0, 1, 2]]
    z = ModVector.from_fibers(s, [(0, 1), (2, 0), (0, 0)])
    qb = construct(GeneratorSet.of([zero, z, z], s, 2))
    assert qb.elements == (z,)
    assert qb.supports == (vec_support(z),)


def test_full_rank_profile():
    s = AtomSpace(2)
    basis = [ModVector.from_fibers(s, [[int(k == j) for k in range(3)]] * 2) for j in range(3)]
    qb = construct(GeneratorSet.of(basis))
    assert rank_profile(qb).as_lists() == [[], [], [], [0, 1]]


def test_verify_duplicate(f1):
    z1 = f1[0]
    rep = verify(QuasiBasis((z1, z1), f1.space, 2), GeneratorSet.of([z1]))
    assert rep.span_ok and rep.chain_ok
    assert not rep.independent_ok
    assert rep.counterexample["atom"] == 0


def test_verify_chain_order(f1):
    s = f1.space
    x1 = ModVector.from_fibers(s, [(0, 0), (1, 0), (0, 0)])
    x2 = ModVector.from_fibers(s, [(1, 0), (0, 1), (1, 0)])
    rep = verify(QuasiBasis((x1, x2), s, 2), GeneratorSet.of([x1, x2]))
    assert not rep.chain_ok
    assert rep.span_ok and rep.independent_ok
    with pytest.raises(PreconditionError):
        rank_profile(QuasiBasis((x1, x2), s, 2))


def test_verify_span_both_ways(f1):
    qb = construct(f1)
    assert not verify(QuasiBasis(qb.elements[:1], f1.space, 2), f1).span_ok
    bigger = GeneratorSet.of(list(f1.gens)[:2])
    assert not verify(qb, bigger).span_ok


def test_coordinates_examples(f1):
    qb = construct(f1)
    s = f1.space
    a = coordinates(qb[0], qb)
    assert a[0] == qb.supports[0].to_ring() and a[1].is_zero()
    assert all(c.is_zero() for c in coordinates(ModVector.zero(s, 2), qb))
    a = coordinates(f1[2], qb)
    assert combine(a, qb.elements, s, 2) == f1[2]
    # frozen by hand: z3 = x1 on w2, x2 on w0, zero on w1
    assert a[0] == s.elem([0, 0, 1]) and a[1] == s.elem([1, 0, 0])


def test_coordinates_outside(f1):
    qb = construct(f1)
    x = ModVector.from_fibers(f1.space, [(0, 0), (0, 0), (0, 1)])
    with pytest.raises(MembershipError) as exc:
        coordinates(x, qb)
    assert exc.value.outside.sorted_atoms() == [2]


@given(generator_sets())
def test_construct_matches_oracle(G):
    qb = construct(G)
    assert verify(qb, G).ok
    assert rank_profile(qb) == oracle_rank_profile(G)
    assert list(qb.supports) == oracle_supports(G)
    assert len(qb) <= min(len(G), G.ambient_rank)
    assert (len(qb) == 0) == all(z.is_zero() for z in G)


@given(generator_sets())
def test_span_preserved_each_step(G):
    for k, qb in construct_steps(G):
        prefix = GeneratorSet(G.gens[: k + 1], G.ambient_rank, G.space)
        assert verify(qb, prefix).ok


@given(generator_sets(), st.randoms(use_true_random=False))
def test_permutation_and_unit_invariance(G, rnd):
    base = construct(G).support_chain()
    gens = list(G.gens)
    rnd.shuffle(gens)
    units = [G.space.elem([rnd.choice([-2, -1, Fraction(1, 2), 3]) for _ in range(G.space.n)])
             for _ in gens]
    scaled = GeneratorSet(tuple(u * z for u, z in zip(units, gens)), G.ambient_rank, G.space)
    assert construct(scaled).support_chain() == base


@given(generator_sets(), st.data())
def test_coordinates_roundtrip(G, data):
    qb = construct(G)
    s, m = G.space, G.ambient_rank
    b = [s.elem(data.draw(st.lists(st.sampled_from([0, 1, -1, Fraction(2, 3)]),
                                   min_size=s.n, max_size=s.n))) for _ in qb]
    x = combine(b, qb.elements, s, m)
    a = coordinates(x, qb)
    assert combine(a, qb.elements, s, m) == x
    assert all(aj * sj == aj for aj, sj in zip(a, qb.supports))
    # uniqueness under the canonicalization
    assert all(aj == bj * sj for aj, bj, sj in zip(a, b, qb.supports))


@given(generator_sets())
def test_strata_are_free(G):
    # on stratum j the first j restricted elements have independent fibers spanning the fiber space
    qb = construct(G)
    for j, stratum in enumerate(rank_profile(qb).strata):
        for w in stratum.atoms:
            live = [k for k, sup in enumerate(qb.supports) if w in sup.atoms]
            assert live == list(range(j))


def test_gaussian_rational_generators():
    from qbasis import GaussianRational as Q
    s = AtomSpace(2)
    i = Q(0, 1)
    z1 = ModVector.from_fibers(s, [(1, i), (1, 0)])
    z2 = ModVector.from_fibers(s, [(i, -1), (0, 1)])
    G = GeneratorSet.of([z1, z2])
    qb = construct(G)
    # z2 = i*z1 on atom 0, independent on atom 1
    assert qb.support_chain() == [[0, 1], [1]]
    assert verify(qb, G).ok
    assert rank_profile(qb) == oracle_rank_profile(G)
