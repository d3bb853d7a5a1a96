"""Coincidence scans, the rigidity checker, and the reversal pattern."""

import random
from collections import Counter
from fractions import Fraction

import pytest

from irrmeasure import (ContinuedFraction, QuadraticSurd, RigidityOutcome,
                        Verdict, check_reversal_pattern, check_rigidity,
                        convergents, rigidity_scan, scan_coincidences,
                        sqrt_of, surd_to_cf)
from irrmeasure.corpus import random_independent_members, random_periodic_cf
from irrmeasure.errors import UndecidedComparison


# ------------------------------------------------------------------ scans

def test_integer_shift_is_dependent(sqrt2_cf):
    shifted = surd_to_cf(QuadraticSurd(Fraction(1), Fraction(1), 2))
    log = scan_coincidences(sqrt2_cf, shifted, depth=30)
    assert log.verdict is Verdict.DEPENDENT
    # identical tails: every index pair (nu, nu) shares (q, q')
    assert all(nu == mu for nu, mu in log.shared_pairs)
    assert len(log.shared_pairs) == 30


def test_same_stream_is_dependent(sqrt2_periodic):
    other = ContinuedFraction.periodic([1], [2])
    log = scan_coincidences(sqrt2_periodic, other, depth=20)
    assert log.verdict is Verdict.DEPENDENT


def test_phi_sqrt2_independent_likely(phi_cf, sqrt2_cf):
    log = scan_coincidences(phi_cf, sqrt2_cf, depth=40)
    assert log.verdict is Verdict.INDEPENDENT_LIKELY
    # the only early coincidences: the shared pair (1, 2) and the equal
    # star 1/2, both within the first few indices
    assert log.shared_pairs == ((1, 0),)
    assert log.equal_stars == ((2, 1),)
    assert log.time_horizon == 2


def test_equal_stars_force_matching_denominators():
    # executable form on every logged coincidence across a random corpus
    rng = random.Random(130)
    for _ in range(30):
        a, b = random_periodic_cf(rng), random_periodic_cf(rng)
        log = scan_coincidences(a, b, depth=30)
        qa = [c.q for c in convergents(a, 31)]
        rb = [c.q for c in convergents(b, 31)]
        for nu, mu in log.equal_stars:
            assert qa[nu - 1] == rb[mu - 1]
            assert qa[nu] == rb[mu]
        if log.verdict is Verdict.INDEPENDENT_LIKELY:
            locations = [max(nu + 1, mu + 1) for nu, mu in log.shared_pairs]
            locations += [max(nu, mu) for nu, mu in log.equal_stars]
            assert all(2 * loc < 30 for loc in locations)


def test_late_coincidences_force_undecided():
    # two streams sharing a long prefix keep coinciding deep into the
    # scan window; without a symbolic proof the verdict must stay open
    a = ContinuedFraction.from_rule(lambda nu: 2, depth_cap=100)
    b = ContinuedFraction.from_rule(lambda nu: 2 if nu < 35 else 3, depth_cap=100)
    log = scan_coincidences(a, b, depth=40)
    assert log.verdict is Verdict.UNDECIDED


# --------------------------------------------------------------- rigidity

def test_rigidity_not_applicable_without_denominator_match(phi_cf, sqrt2_cf):
    rec = check_rigidity(phi_cf, sqrt2_cf, 6, 6, 1)
    assert rec.outcome is RigidityOutcome.NOT_APPLICABLE
    assert rec.failed_hypothesis == "q_{nu+2} = r_{mu+d}"


def test_rigidity_confirms_on_shared_tail_structure(sqrt2_cf):
    # b = a + 3 keeps every coefficient beyond a0, hence all q and error
    # terms: the hypotheses hold with equality at (nu, nu, 2) and the
    # conclusion must follow
    b = surd_to_cf(QuadraticSurd(Fraction(3), Fraction(1), 2))
    for nu in range(6):
        rec = check_rigidity(sqrt2_cf, b, nu, nu, 2)
        assert rec.outcome is RigidityOutcome.CONFIRMED
        assert rec.detail["sign_head"] == 0
        assert rec.detail["star_a(nu+2)"] == rec.detail["star_b(mu+2)"]
    # with d != 2 the denominator-match hypothesis fails
    assert check_rigidity(sqrt2_cf, b, 3, 3, 3).outcome is RigidityOutcome.NOT_APPLICABLE


def test_rigidity_scan_zero_violations_on_random_pairs():
    rng = random.Random(917)
    for _ in range(6):
        a, b = random_independent_members(rng, 2)
        outcomes = Counter(r.outcome for r in
                           rigidity_scan(a, b, max_index=12, max_d=4))
        assert outcomes[RigidityOutcome.VIOLATION] == 0


def test_rigidity_without_backend_raises_undecided_on_equal_values():
    a = ContinuedFraction.from_rule(lambda nu: 2, depth_cap=200)
    b = ContinuedFraction.from_rule(lambda nu: 2, depth_cap=200)
    with pytest.raises(UndecidedComparison):
        check_rigidity(a, b, 2, 2, 2, max_compare_depth=8)


# --------------------------------------------------------------- reversal

def test_reversal_pattern_at_shared_denominator_five(phi_cf, sqrt2_cf):
    records = check_reversal_pattern(phi_cf, sqrt2_cf, depth=12)
    assert len(records) == 1
    rec = records[0]
    assert rec.shared_q == 5 and (rec.nu, rec.mu) == (4, 2)
    # hypothesis: psi_phi(4) = 0.1459 < psi_root2(4) = 0.1716
    assert rec.applicable
    # prediction at the a-side previous denominator (q = 3, so t = 2):
    # psi_phi(2) = 0.2361 > psi_root2(2) = 0.1716
    assert rec.alpha_prev_time == 2
    assert rec.reversal_at_alpha_prev is True
    assert set(rec.enclosures) == {"a@shared-1", "b@shared-1", "a@alpha_prev",
                                   "b@alpha_prev", "a@beta_prev", "b@beta_prev"}


def test_reversal_hypothesis_gate(phi_cf, sqrt2_cf):
    # swapped roles: psi_root2(4) > psi_phi(4) fails the hypothesis
    records = check_reversal_pattern(sqrt2_cf, phi_cf, depth=12)
    assert len(records) == 1
    assert records[0].applicable is False
    assert records[0].reversal_at_alpha_prev is None


def test_reversal_empty_without_shared_denominators():
    a = ContinuedFraction.periodic([1], [3])   # q: 1, 3, 10, 33, ...
    b = ContinuedFraction.periodic([1], [5])   # q: 1, 5, 26, 131, ...
    assert check_reversal_pattern(a, b, depth=10) == []


def test_reversal_burn_in_filters_records(phi_cf, sqrt2_cf):
    assert check_reversal_pattern(phi_cf, sqrt2_cf, depth=12, burn_in=5) == []


def test_reversal_prediction_holds_past_burn_in(sqrt2_cf):
    # partners crafted to share the denominator 169 with sqrt2 well past
    # the default burn-in; every applicable record must show the
    # predicted reversal at the a-side previous denominator
    for period in ([5], [3, 1], [2, 7], [1, 1, 6]):
        b = ContinuedFraction.periodic([1, 2, 84], period)
        log = scan_coincidences(sqrt2_cf, b, depth=40)
        assert log.verdict is Verdict.INDEPENDENT_LIKELY
        burn_in = max(100, log.time_horizon)
        records = check_reversal_pattern(sqrt2_cf, b, depth=40, burn_in=burn_in)
        applicable = [r for r in records if r.applicable]
        assert applicable, "the crafted shared denominator must show up"
        for rec in applicable:
            assert rec.reversal_at_alpha_prev is True
