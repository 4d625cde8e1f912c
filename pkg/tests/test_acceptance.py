"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``.  Under pytest every criterion prints a
single ``PASS``/``FAIL`` line (visible even without ``-s``); running the file
directly prints the same lines and exits non-zero on any failure.
"""
import dataclasses
import itertools
import math
import random
import sys
import time
from fractions import Fraction

import pytest

from mcftiling import (
    PartialQuotients,
    check_e_remark,
    check_factorial_identity,
    classical_convergents,
    convergents_by_matrix,
    convergents_by_tail_recurrence,
    estimate_limit,
    evaluate_classical_cf,
    evaluate_finite,
    factorial_mcf,
    jacobi_expand,
    perron_expand,
)
from mcftiling.identities import e_fraction
from mcftiling.tiling import (
    HeightConditions,
    check_mixed,
    count_B,
    count_C,
    count_circular,
    count_degree_m,
    count_fast,
    count_mixed,
    enumerate_circular,
    enumerate_mixed,
    enumerate_plain,
    enumerate_prefixed,
    enumerate_shifted,
)
from mcftiling.errors import InvalidMixedConditions

SEED = 20261016


def _plain(rng, n, lo=0, hi=3):
    return HeightConditions(
        [rng.randint(1, hi) for _ in range(n + 1)],
        [rng.randint(lo, hi) for _ in range(n + 1)],
        [rng.randint(lo, hi) for _ in range(n + 1)],
    )


def _oracle_instances():
    """Exhaustive grid for small boards, subsampled beyond, then random boards."""
    grid = []
    rng = random.Random(SEED)
    for n in range(6):
        width = 3 * (n + 1)
        if 3**width <= 800:
            cells = list(itertools.product((1, 2, 3), repeat=width))
        else:
            cells = [tuple(rng.choice((1, 2, 3)) for _ in range(width)) for _ in range(400)]
        for flat in cells:
            a, b, c = flat[: n + 1], flat[n + 1 : 2 * n + 2], flat[2 * n + 2 :]
            grid.append(HeightConditions(a, b, c))
    randoms = [_plain(rng, rng.randint(0, 6)) for _ in range(500)]
    return grid, randoms


def _timed(limit):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            ok, detail = fn()
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                return False, f"{detail}; took {elapsed:.2f}s, limit {limit}s"
            return ok, f"{detail}; {elapsed:.2f}s"

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


@_timed(1.0)
def factorial_identity():
    """factorial MCF numerators"""
    head = [t.A for t in convergents_by_tail_recurrence(factorial_mcf(2))]
    rep = check_factorial_identity(20)
    return head == [4, 9, 32] and rep.ok and rep.verified_up_to == 20, f"A_0..A_2={head}, n<=20 exact"


@_timed(1.0)
def limit_estimate():
    """factorial MCF limit"""
    est = estimate_limit(15)
    series = [estimate_limit(n) for n in range(10, 16)]
    spread = max(abs(x - y) for x, y in zip(series, series[1:]))
    ok = abs(est - 4.54752) < 1e-4 and spread < 1e-5
    return ok, f"A_15/C_15={est:.12f}, max step change {spread:.2e}"


@_timed(1.0)
def e_numerators():
    """classical fraction for e"""
    value = evaluate_classical_cf(*e_fraction(12))
    err = abs(float(value) - math.e)
    rep = check_e_remark(15)
    nums = [p for p, _ in classical_convergents(*e_fraction(15))]
    exact = all(p == math.factorial(n + 1) + math.factorial(n) for n, p in enumerate(nums))
    return err < 1e-6 and rep.ok and exact, f"depth-12 error {err:.2e}, numerators n<=15 exact={exact}"


@_timed(60.0)
def plain_oracle():
    """plain count vs enumeration"""
    grid, randoms = _oracle_instances()
    bad = [h for h in grid + randoms if count_fast(h) != len(enumerate_plain(h))]
    return not bad, f"{len(grid)} grid + {len(randoms)} random instances, {len(bad)} mismatches"


@_timed(None)
def b_and_c_counts():
    """B and C counts"""
    grid, randoms = _oracle_instances()
    bad = 0
    for h in grid + randoms:
        last = convergents_by_matrix(h.to_quotients())[-1]
        if not count_B(h) == len(enumerate_prefixed(h)) == last.B:
            bad += 1
        if not count_C(h) == len(enumerate_shifted(h)) == last.C:
            bad += 1
    return bad == 0, f"{len(grid) + len(randoms)} instances, {bad} mismatches"


@_timed(None)
def circular_count():
    """circular board"""
    rng = random.Random(SEED + 6)
    bad = 0
    for _ in range(250):
        h = _plain(rng, rng.randint(0, 6))
        expected = count_fast(h) + count_B(h.truncate(h.n - 1))
        if not len(enumerate_circular(h)) == expected == count_circular(h):
            bad += 1
    return bad == 0, f"250 instances, {bad} mismatches"


def _mixed(rng, n):
    while True:
        h = HeightConditions(
            [rng.randint(1, 3) for _ in range(n + 1)],
            [rng.randint(-3, 3) for _ in range(n + 1)],
            [rng.randint(-3, 3) for _ in range(n + 1)],
        )
        try:
            check_mixed(h)
        except InvalidMixedConditions:
            continue
        return h


@_timed(120.0)
def mixed_oracle():
    """mixed count vs enumeration"""
    rng = random.Random(SEED + 7)
    worked = HeightConditions((2, 3, 1, 2, 2, 3), (0, -1, 3, 3, 2, -1), (0, 0, -2, 2, 1, -1))
    cases = [worked] + [_mixed(rng, rng.randint(0, 6)) for _ in range(520)]
    negative = sum(1 for h in cases if not h.is_plain)
    bad = sum(1 for h in cases if count_mixed(h) != len(enumerate_mixed(h)))
    ok = bad == 0 and count_mixed(worked) == 245
    return ok, f"{len(cases)} instances ({negative} with negative entries), {bad} mismatches"


@_timed(None)
def dependence():
    """placeholder independence"""
    rng = random.Random(SEED + 8)
    bad = 0
    for _ in range(150):
        n = rng.randint(0, 8)
        pq = PartialQuotients(
            [rng.randint(-3, 5) for _ in range(n + 1)],
            [rng.randint(-3, 5) for _ in range(n + 1)],
            [1] + [rng.randint(-3, 5) for _ in range(n)],
        )
        base = convergents_by_matrix(pq)
        r = lambda: rng.randint(-9, 9)
        b, c = list(pq.b), list(pq.c)
        b[0] = r()
        if n >= 1:
            c[1] = r()
        moved = convergents_by_matrix(dataclasses.replace(pq, b=b, c=c))
        bad += [t.A for t in moved] != [t.A for t in base]
        a, b, c = list(pq.a), list(pq.b), list(pq.c)
        a[0] = r()
        if n >= 1:
            b[1] = r()
        if n >= 2:
            c[2] = r()
        moved = convergents_by_matrix(PartialQuotients(a, b, c))
        bad += [t.B for t in moved] != [t.B for t in base]
    return bad == 0, f"150 instances, {bad} mismatches"


@_timed(None)
def jacobi_round_trip():
    """Jacobi round trip"""
    rng = random.Random(SEED + 9)
    checked = skipped = bad = 0
    while checked < 300:
        alpha = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        beta = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        res = jacobi_expand(alpha, beta, max_steps=30)
        if not res.exact:
            skipped += 1
            continue
        checked += 1
        if evaluate_finite(res.quotients) != (alpha, beta):
            bad += 1
        p = perron_expand([alpha, beta], max_steps=30)
        if p.quotients != (res.quotients.a, res.quotients.b):
            bad += 1
    detail = f"{checked} exact expansions ({skipped} non-exact skipped), {bad} mismatches"
    return bad == 0, detail


@_timed(None)
def degree_m():
    """degree-m counts"""
    fib = [1, 2]
    while len(fib) < 21:
        fib.append(fib[-1] + fib[-2])
    ones = [1] * 21
    fib_ok = all(count_degree_m([ones, ones], n=n) == fib[n] for n in range(21))
    rng = random.Random(SEED + 10)
    bad = 0
    for _ in range(100):
        h = _plain(rng, rng.randint(0, 8))
        bad += count_degree_m([h.a, h.b, h.c]) != count_fast(h)
    return fib_ok and bad == 0, f"Fibonacci n<=20 ok={fib_ok}, 100 degree-2 instances, {bad} mismatches"


CRITERIA = [
    factorial_identity,
    limit_estimate,
    e_numerators,
    plain_oracle,
    b_and_c_counts,
    circular_count,
    mixed_oracle,
    dependence,
    jacobi_round_trip,
    degree_m,
]


def _line(number, check, ok, detail):
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {check.__doc__}: {detail}"


@pytest.mark.parametrize(
    "number, check", list(enumerate(CRITERIA, 1)), ids=[c.__name__ for c in CRITERIA]
)
def test_criterion(number, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, check, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, check in enumerate(CRITERIA, 1):
        ok, detail = check()
        failures += not ok
        print(_line(number, check, ok, detail))
    sys.exit(1 if failures else 0)
