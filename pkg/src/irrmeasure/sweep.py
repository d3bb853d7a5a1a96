"""Permutation trajectory of a tuple of independent numbers.

sigma(t) orders the members by strictly decreasing step-function value,
certified by enclosure comparison; it is constant between convergent
denominators, so a sweep only evaluates the merged breakpoint times.
The report counts distinct orderings on the window (the finite-horizon
surrogate of the infinitely-recurring count), the jump multiplicities,
and the per-pair order flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .cf import ContinuedFraction, Ordering, compare_errors
from .errors import (DependentTuple, UndecidedComparison, UndecidedOrdering,
                     WindowTooShort)
from .screening import CoincidenceLog, Verdict, scan_coincidences
from .stepfunc import build_trajectory, psi_at

#: default lower bound for the burn-in time; the structural statements
#: hold "eventually", so tiny windows are never trusted by default
DEFAULT_BURN_IN_FLOOR = 100


class TupleContext:
    """n >= 2 numbers with their trajectories over a window [t0, t_max].

    Construction screens every pair: a proven dependence aborts with
    DependentTuple. The default burn-in t0 is the largest structural
    coincidence time seen by screening, floored at 100; an explicit
    burn_in overrides the policy.
    """

    def __init__(self, cfs, *, t_max: int, burn_in: int | None = None,
                 names=None, screen_depth: int = 40,
                 max_compare_depth: int = 64) -> None:
        cfs = tuple(cfs)
        if len(cfs) < 2:
            raise ValueError("a tuple context needs at least two members")
        if names is None:
            names = tuple(f"x{i}" for i in range(1, len(cfs) + 1))
        names = tuple(names)
        if len(names) != len(cfs):
            raise ValueError("need exactly one name per member")
        if len(set(names)) != len(names):
            raise ValueError("member names must be unique")
        if t_max < 1:
            raise ValueError("t_max must be >= 1")
        self.cfs = cfs
        self.names = names
        self.t_max = t_max
        self.max_compare_depth = max_compare_depth
        self.screen_logs: dict[tuple[int, int], CoincidenceLog] = {}
        horizon = 0
        for i in range(len(cfs)):
            for j in range(i + 1, len(cfs)):
                log = scan_coincidences(cfs[i], cfs[j], depth=screen_depth)
                self.screen_logs[(i + 1, j + 1)] = log
                if log.verdict is Verdict.DEPENDENT:
                    raise DependentTuple(
                        f"members {names[i]} and {names[j]} are dependent "
                        f"({log.combination.value})", origin="sweep.TupleContext")
                horizon = max(horizon, log.time_horizon)
        self.coincidence_horizon = horizon
        t0 = burn_in if burn_in is not None else max(DEFAULT_BURN_IN_FLOOR, horizon)
        if not 1 <= t0 < t_max:
            raise WindowTooShort(
                f"burn-in {t0} does not satisfy 1 <= burn_in < t_max = {t_max}",
                origin="sweep.TupleContext")
        self.t0 = t0
        self.trajectories = tuple(build_trajectory(cf, t_max) for cf in cfs)
        self.jump_sets = tuple(frozenset(tr.jump_times()) for tr in self.trajectories)

    @property
    def n(self) -> int:
        return len(self.cfs)


def sigma_at(ctx: TupleContext, t: int) -> tuple[int, ...]:
    """Member labels (1-based) ordered by strictly decreasing step value,
    every adjacency certified."""
    if not ctx.t0 <= t <= ctx.t_max:
        raise ValueError(f"t = {t} outside the window [{ctx.t0}, {ctx.t_max}]")
    terms = [psi_at(tr, t) for tr in ctx.trajectories]

    def cmp(i: int, j: int) -> int:
        try:
            order = compare_errors(terms[i - 1], terms[j - 1], ctx.max_compare_depth)
        except UndecidedComparison as exc:
            raise UndecidedOrdering(
                f"cannot order members {ctx.names[i - 1]} and {ctx.names[j - 1]} "
                f"at t = {t}", origin="sweep.sigma_at", time=t, pair=(i, j)) from exc
        return -1 if order is Ordering.GREATER else 1

    return tuple(sorted(range(1, ctx.n + 1), key=cmp_to_key(cmp)))


def tau_at(ctx: TupleContext, t: int) -> int:
    """How many members have t as a convergent denominator (and so jump)."""
    if not 1 <= t <= ctx.t_max:
        raise ValueError(f"t = {t} outside [1, {ctx.t_max}]")
    return sum(1 for js in ctx.jump_sets if t in js)


@dataclass(frozen=True)
class PermutationEvent:
    """One merged breakpoint time with the orderings around it."""

    time: int
    before: tuple[int, ...]
    after: tuple[int, ...]
    jumpers: frozenset[int]


@dataclass
class TrajectoryReport:
    """Sweep output over (t0, t_max].

    perm_spans maps each ordering seen on [t0, t_max] to the first and
    last integer time it is in effect; k_hat is the number of distinct
    orderings, a finite-window surrogate for the infinitely-recurring
    count (never claimed to equal it).
    """

    t0: int
    t_max: int
    events: tuple[PermutationEvent, ...]
    perm_spans: dict[tuple[int, ...], tuple[int, int]]
    k_hat: int
    max_tau: int
    sign_changes: dict[tuple[int, int], int]


def sweep(ctx: TupleContext) -> TrajectoryReport:
    """Visit exactly the merged breakpoint times in (t0, t_max].

    The ordering is constant between breakpoints, so nothing else is
    evaluated; the before-ordering of each event is re-evaluated at
    time-1 and checked against the running ordering as a self-test.
    """
    times = sorted(t for t in frozenset().union(*ctx.jump_sets)
                   if ctx.t0 < t <= ctx.t_max)
    events: list[PermutationEvent] = []
    spans: dict[tuple[int, ...], tuple[int, int]] = {}

    def stamp(perm: tuple[int, ...], start: int, end: int) -> None:
        first, _ = spans.get(perm, (start, end))
        spans[perm] = (first, end)

    counts = {(i, j): 0 for i in range(1, ctx.n + 1)
              for j in range(i + 1, ctx.n + 1)}
    sigma_cur = sigma_at(ctx, ctx.t0)
    seg_start = ctx.t0
    max_tau = 0
    for t in times:
        before = sigma_at(ctx, t - 1)
        if before != sigma_cur:
            raise AssertionError("ordering changed between breakpoints")
        after = sigma_at(ctx, t)
        jumpers = frozenset(i for i in range(1, ctx.n + 1)
                            if t in ctx.jump_sets[i - 1])
        max_tau = max(max_tau, len(jumpers))
        events.append(PermutationEvent(time=t, before=before, after=after,
                                       jumpers=jumpers))
        stamp(sigma_cur, seg_start, t - 1)
        bpos = {m: r for r, m in enumerate(before)}
        apos = {m: r for r, m in enumerate(after)}
        for pair in counts:
            i, j = pair
            if (bpos[i] < bpos[j]) != (apos[i] < apos[j]):
                counts[pair] += 1
        sigma_cur = after
        seg_start = t
    stamp(sigma_cur, seg_start, ctx.t_max)
    return TrajectoryReport(t0=ctx.t0, t_max=ctx.t_max, events=tuple(events),
                            perm_spans=spans, k_hat=len(spans),
                            max_tau=max_tau, sign_changes=counts)


def sign_change_count(ctx: TupleContext, i: int, j: int) -> int:
    """How often the certified order of members i and j flips across the
    merged evaluation times in (t0, t_max]."""
    if i == j:
        raise ValueError("need two distinct members")
    times = sorted(t for t in (ctx.jump_sets[i - 1] | ctx.jump_sets[j - 1])
                   if ctx.t0 < t <= ctx.t_max)

    def order(t: int) -> Ordering:
        try:
            return compare_errors(psi_at(ctx.trajectories[i - 1], t),
                                  psi_at(ctx.trajectories[j - 1], t),
                                  ctx.max_compare_depth)
        except UndecidedComparison as exc:
            raise UndecidedOrdering(
                f"cannot order members {ctx.names[i - 1]} and "
                f"{ctx.names[j - 1]} at t = {t}",
                origin="sweep.sign_change_count", time=t, pair=(i, j)) from exc

    current = order(ctx.t0)
    flips = 0
    for t in times:
        nxt = order(t)
        if nxt is not current:
            flips += 1
            current = nxt
    return flips


def format_permutation(perm: tuple[int, ...]) -> str:
    return ",".join(map(str, perm))


def serialize_report(report: TrajectoryReport) -> str:
    """Event records `t <tab> before <tab> after <tab> jumpers`, then a
    blank line and the summary block."""
    lines = [
        f"{ev.time}\t{format_permutation(ev.before)}\t"
        f"{format_permutation(ev.after)}\t{','.join(map(str, sorted(ev.jumpers)))}"
        for ev in report.events
    ]
    lines.append("")
    lines.append(f"window\t{report.t0}\t{report.t_max}")
    lines.append(f"k_hat\t{report.k_hat}")
    lines.append(f"max_tau\t{report.max_tau}")
    for perm, (first, last) in report.perm_spans.items():
        lines.append(f"perm\t{format_permutation(perm)}\t{first}\t{last}")
    for (i, j), count in sorted(report.sign_changes.items()):
        lines.append(f"sign_changes\t{i},{j}\t{count}")
    return "\n".join(lines) + "\n"
