"""Replaying the count bound n <= k(k+1)/2 on random tuples.

Run: python demos/bound_replay.py
"""

import random

from irrmeasure import render_proof_trace, verify_with_retries
from irrmeasure.corpus import random_independent_members

rng = random.Random(20250810)

for n in (2, 3, 5):
    cfs = random_independent_members(rng, n)
    run = verify_with_retries(cfs, t_max=2000, retries=8)
    verdict = run.bound
    print(f"n = {n}: window saw k = {verdict.k} orderings after "
          f"{run.doublings} doublings")
    print(f"  n <= 1 + sum(n_j) = {1 + verdict.sum_nj} "
          f"(margin {verdict.margin_count})")
    print(f"  1 + sum(n_j) <= k(k+1)/2 = {verdict.k * (verdict.k + 1) // 2} "
          f"(margin {verdict.margin_k})")
    if verdict.margin_count == 0 or verdict.margin_k == 0:
        print("  extremal margin hit on this window")
    print()

print("full trace of the last run:")
print(render_proof_trace(run.trace))
