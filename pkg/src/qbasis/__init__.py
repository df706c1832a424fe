"""Quasi-bases for finitely generated modules over the simple-function ring K^Omega."""

from .errors import MembershipError, PreconditionError, StructuralError
from .field import GaussianRational, parse_rational
from .module import (GeneratorSet, ModVector, concatenate, evaluate_at, restrict, scalar_mul,
                     vec_add, vec_support)
from .oracle import oracle_rank_profile, oracle_supports
from .quasibasis import (QuasiBasis, RankProfile, VerificationReport, construct, coordinates,
                         insert_generator, rank_profile, verify)
from .ring import (AtomSpace, Idempotent, RingElem, gen_inverse, idem_complement, idem_join,
                   idem_meet, idem_sup, idempotent_of, ring_add, ring_mul, support)
from .stratification import (MembershipReport, equality_stratifier, nonmembership_idempotent,
                             solve_on_stratum)

__all__ = [
    "AtomSpace", "Idempotent", "RingElem", "ModVector", "GeneratorSet", "QuasiBasis",
    "RankProfile", "VerificationReport", "MembershipReport", "GaussianRational",
    "StructuralError", "PreconditionError", "MembershipError",
    "idem_join", "idem_meet", "idem_complement", "idem_sup", "idempotent_of",
    "ring_add", "ring_mul", "support", "gen_inverse", "parse_rational",
    "vec_support", "scalar_mul", "vec_add", "restrict", "concatenate", "evaluate_at",
    "nonmembership_idempotent", "equality_stratifier", "solve_on_stratum",
    "insert_generator", "construct", "verify", "rank_profile", "coordinates",
    "oracle_rank_profile", "oracle_supports",
]
