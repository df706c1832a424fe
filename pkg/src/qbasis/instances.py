"""Random problem instances for property tests and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .module import GeneratorSet, ModVector
from .ring import AtomSpace, RingElem

DEFAULT_ENTRIES = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2),
                   Fraction(1, 2), Fraction(-1, 3))


@dataclass
class InstanceConfig:
    n_range: tuple = (1, 8)
    m_range: tuple = (1, 6)
    l_range: tuple = (1, 6)
    entries: tuple = DEFAULT_ENTRIES
    # probability that an entry is forced to zero; also used per generator fiber
    sparsity: float = 0.4
    seed: int = 0


def random_vector(rng: random.Random, space: AtomSpace, m: int, cfg: InstanceConfig) -> ModVector:
    fibers = []
    for _ in range(space.n):
        if rng.random() < cfg.sparsity / 2:
            fibers.append([Fraction(0)] * m)
            continue
        fibers.append([Fraction(0) if rng.random() < cfg.sparsity else rng.choice(cfg.entries)
                       for _ in range(m)])
    return ModVector.from_fibers(space, fibers)


def random_generators(rng: random.Random, cfg: InstanceConfig, n=None, m=None, l=None) -> GeneratorSet:
    n = n or rng.randint(*cfg.n_range)
    m = m or rng.randint(*cfg.m_range)
    l = l if l is not None else rng.randint(*cfg.l_range)
    space = AtomSpace(n)
    gens = [random_vector(rng, space, m, cfg) for _ in range(l)]
    # occasionally plant a dependent generator so the skip path gets exercised
    if l >= 2 and rng.random() < 0.3:
        k = rng.randrange(l)
        others = [g for j, g in enumerate(gens) if j != k]
        gens[k] = rng.choice(others) + random_ring(rng, space, cfg) * rng.choice(others)
    return GeneratorSet(tuple(gens), m, space)


def random_ring(rng: random.Random, space: AtomSpace, cfg: InstanceConfig) -> RingElem:
    return RingElem(tuple(Fraction(0) if rng.random() < cfg.sparsity else rng.choice(cfg.entries)
                          for _ in range(space.n)), space)


def random_unit(rng: random.Random, space: AtomSpace, cfg: InstanceConfig) -> RingElem:
    nonzero = [v for v in cfg.entries if v != 0]
    return RingElem(tuple(rng.choice(nonzero) for _ in range(space.n)), space)


def instances(count: int, cfg: InstanceConfig = None):
    cfg = cfg or InstanceConfig()
    rng = random.Random(cfg.seed)
    for _ in range(count):
        yield random_generators(rng, cfg)
