"""Randomized sweep: construct vs. fiber-rank oracle, with timing and stratum stats.

    python scripts/oracle_sweep.py --count 5000 --max-atoms 8 --sparsity 0.4
"""

import argparse
import time
from collections import Counter

from qbasis import construct, oracle_rank_profile, rank_profile, verify
from qbasis.instances import InstanceConfig, instances


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--max-atoms", type=int, default=8)
    ap.add_argument("--max-rank", type=int, default=6)
    ap.add_argument("--max-gens", type=int, default=6)
    ap.add_argument("--sparsity", type=float, default=0.4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = InstanceConfig(n_range=(1, args.max_atoms), m_range=(1, args.max_rank),
                         l_range=(1, args.max_gens), sparsity=args.sparsity, seed=args.seed)

    lengths = Counter()
    mismatches = unverified = 0
    start = time.perf_counter()
    for G in instances(args.count, cfg):
        qb = construct(G)
        lengths[len(qb)] += 1
        mismatches += rank_profile(qb) != oracle_rank_profile(G)
        unverified += not verify(qb, G).ok
    elapsed = time.perf_counter() - start

    print(f"instances        {args.count}")
    print(f"oracle mismatch  {mismatches}")
    print(f"verify failures  {unverified}")
    print(f"elapsed          {elapsed:.2f}s ({1e3 * elapsed / args.count:.2f} ms/instance)")
    print("quasi-basis length histogram:")
    for n in sorted(lengths):
        print(f"  n={n}: {lengths[n]}")
    return 1 if mismatches or unverified else 0


if __name__ == "__main__":
    raise SystemExit(main())
