"""Independent ground truth for rank strata.

Ranks are computed per atom with a division-free elimination that shares no
code with the solver used by the construction: rows are combined by
cross-multiplication, so only ring operations and comparison with zero are
needed.
"""

from __future__ import annotations

from .quasibasis import RankProfile
from .ring import Idempotent


def fiber_rank(vectors) -> int:
    rows = [list(v) for v in vectors if any(x != 0 for x in v)]
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for col in range(width):
        pivot = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        for k in range(r + 1, len(rows)):
            f = rows[k][col]
            if f != 0:
                rows[k] = [p * a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def fiber_ranks(G) -> list:
    gens = list(G.gens)
    return [fiber_rank([z.fiber(w) for z in gens]) for w in range(G.space.n)]


def oracle_rank_profile(G) -> RankProfile:
    ranks = fiber_ranks(G)
    top = max(ranks)
    return RankProfile(tuple(
        Idempotent(frozenset(w for w, r in enumerate(ranks) if r == j), G.space)
        for j in range(top + 1)
    ))


def oracle_supports(G) -> list:
    """Support chain every quasi-basis of span(G) must have: ``{w : rank(w) >= j}``."""
    ranks = fiber_ranks(G)
    return [Idempotent(frozenset(w for w, r in enumerate(ranks) if r >= j), G.space)
            for j in range(1, max(ranks) + 1)]


def oracle_member_on(x, G, i) -> bool:
    """Does some combination of ``G`` agree with ``x`` on every atom of ``i``?

    Decided by comparing ranks with and without ``x`` appended.
    """
    gens = list(G.gens) if hasattr(G, "gens") else list(G)
    for w in i.atoms:
        fibers = [z.fiber(w) for z in gens]
        if fiber_rank(fibers + [x.fiber(w)]) != fiber_rank(fibers):
            return False
    return True
