"""Tracking which of two step functions runs higher, and how often the
order flips.

Run: python demos/pair_ordering_sweep.py
"""

from fractions import Fraction

from irrmeasure import (QuadraticSurd, TupleContext, serialize_report,
                        sigma_at, sign_change_count, sqrt_of, surd_to_cf,
                        sweep, tau_at)

golden = surd_to_cf(QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5))
sqrt2 = surd_to_cf(sqrt_of(2))

ctx = TupleContext([golden, sqrt2], t_max=10_000, burn_in=1,
                   names=["phi", "root2"])

print("ordering at a few times (labels sorted by decreasing psi):")
for t in (1, 4, 5, 12, 100):
    print(f"  sigma({t}) = {sigma_at(ctx, t)}")
print()

print("joint jumps: tau(5) =", tau_at(ctx, 5), " tau(12) =", tau_at(ctx, 12))
print()

report = sweep(ctx)
print(f"the window (1, 10000] sees {report.k_hat} distinct orderings, "
      f"max joint jump {report.max_tau}, "
      f"{report.sign_changes[(1, 2)]} order flips")
print()
print("first events:")
for ev in report.events[:6]:
    print(f"  t={ev.time}: {ev.before} -> {ev.after}, jumpers {sorted(ev.jumpers)}")
print()
print("pairwise flip count recomputed:", sign_change_count(ctx, 1, 2))
print()
print("full serialized report ends with the summary block:")
print("\n".join(serialize_report(report).splitlines()[-6:]))
