"""Acceptance suite: one test per exit criterion, each printing a PASS line.

Every expected value here is exact; runtime bounds are asserted where the
criterion states one. Run with ``pytest tests/test_acceptance.py -v -s``
to see the per-criterion lines.
"""

import itertools
from math import comb
from time import perf_counter

import pytest

from sgranks.core import (
    complement_mask,
    elements_of,
    is_generating,
    is_independent,
    is_prime_subset,
    is_subsemigroup,
    ksubsets_canonical,
)
from sgranks.families import (
    brandt,
    cyclic_group,
    monogenic,
    order_preserving_singular,
    standard_corpus,
    symmetric_group,
    witness_prime_brandt,
    witness_prime_on,
    zeta,
)
from sgranks.prime_search import (
    enumerate_prime_subsets_upto,
    smallest_proper_prime_subset,
)
from sgranks.ranks import (
    closed_form,
    large_rank,
    large_rank_direct,
    large_rank_via_indecomposable,
    lower_rank,
    rank_chain_check,
    small_rank,
)
from sgranks import cli

BRANDT_CASES = [
    ("Z1", 2, 5),
    ("Z1", 3, 9),
    ("Z1", 4, 15),
    ("Z2", 2, 8),
    ("Z3", 2, 11),
    ("Z2", 3, 16),
    ("S3", 2, 20),
]

GROUPS = {
    "Z1": cyclic_group(1),
    "Z2": cyclic_group(2),
    "Z3": cyclic_group(3),
    "S3": symmetric_group(3),
}

_on_search_cache: dict[int, object] = {}


def _on_search(n):
    if n not in _on_search_cache:
        S, _ = order_preserving_singular(n)
        _on_search_cache[n] = (S, smallest_proper_prime_subset(S))
    return _on_search_cache[n]


def report(number, text):
    print(f"ACCEPTANCE {number:02d} PASS: {text}")


def test_criterion_01_brandt_large_rank():
    start = perf_counter()
    for gname, n, expected in BRANDT_CASES:
        G = GROUPS[gname]
        S, _ = brandt(G, n)
        result = smallest_proper_prime_subset(S)
        value = S.order - result.size + 1
        assert value == expected == (n * n - n + 1) * G.order + 2
    elapsed = perf_counter() - start
    assert elapsed < 60.0
    report(1, f"Brandt large ranks match the closed form for 7 cases in {elapsed:.2f}s")


def test_criterion_02_bn_corollary():
    start = perf_counter()
    for n in (2, 3, 4):
        S, _ = brandt(cyclic_group(1), n)
        value = large_rank(S).value
        assert value == n * n - n + 3
    elapsed = perf_counter() - start
    assert elapsed < 30.0
    report(2, f"B_n large rank equals n^2-n+3 for n=2,3,4 in {elapsed:.2f}s")


def test_criterion_03_on_large_rank():
    start = perf_counter()
    expected = {3: 8, 4: 32, 5: 122}
    for n in (3, 4, 5):
        S, result = _on_search(n)
        value = S.order - result.size + 1
        assert value == expected[n] == comb(2 * n - 1, n - 1) - n + 1
    elapsed = perf_counter() - start
    assert elapsed < 300.0
    o2, _ = order_preserving_singular(2)
    assert large_rank_direct(o2) == 2
    report(3, f"order-preserving large ranks 8, 32, 122 and direct r5(O2)=2 in {elapsed:.2f}s")


def test_criterion_04_on_sizes():
    start = perf_counter()
    expected = {2: 2, 3: 9, 4: 34, 5: 125, 6: 461, 7: 1715}
    for n in range(2, 8):
        S, _ = order_preserving_singular(n)
        assert S.order == expected[n] == comb(2 * n - 1, n - 1) - 1
    elapsed = perf_counter() - start
    assert elapsed < 30.0
    report(4, f"order-preserving family sizes match for n=2..7 in {elapsed:.2f}s")


def test_criterion_05_lower_bound_on_prime_subsets():
    for n in (3, 4, 5):
        S, result = _on_search(n)
        assert enumerate_prime_subsets_upto(S, n - 2) == []
        assert result.size == n - 1
    report(5, "no prime subsets below n-1 elements and the witness has exactly n-1")


def test_criterion_06_zeta_product_law():
    from sgranks.families import compose, image_and_kernel

    violations = 0
    for n in range(3, 7):
        for p in range(1, n):
            for q in range(1, n + 1):
                zpq = zeta(n, p, q)
                for r in range(1, n):
                    for s in range(1, n + 1):
                        product = compose(zpq, zeta(n, r, s))
                        image, _ = image_and_kernel(product)
                        full_rank = len(image) == n - 1
                        if q in (r, r + 1):
                            if not (full_rank and product.img == zeta(n, p, s).img):
                                violations += 1
                        elif full_rank:
                            violations += 1
    assert violations == 0
    report(6, "zeta product law holds exhaustively for n=3..6")


def test_criterion_07_witness_primality():
    for gname, n, _ in BRANDT_CASES:
        G = GROUPS[gname]
        S, _ = brandt(G, n)
        assert is_prime_subset(S, witness_prime_brandt(G, n))
    for n in (3, 4, 5):
        S, _ = _on_search(n)
        for q in range(1, n + 1):
            assert is_prime_subset(S, witness_prime_on(n, q))
    report(7, "every constructed witness set is a prime subset")


def test_criterion_08_oracle_equivalence():
    start = perf_counter()
    for name, S in standard_corpus():
        assert large_rank(S).value == large_rank_direct(S), name
    elapsed = perf_counter() - start
    assert elapsed < 60.0
    report(8, f"search and definition-based large rank agree on the corpus in {elapsed:.2f}s")


def test_criterion_09_duality_exhaustive():
    violations = 0
    for name, S in standard_corpus():
        if S.order > 10:
            continue
        m = S.order
        for mask in range(1, (1 << m) - 1):
            if is_prime_subset(S, mask) != is_subsemigroup(S, complement_mask(mask, m)):
                violations += 1
    assert violations == 0
    report(9, "prime/subsemigroup duality holds for every subset of every corpus member")


def test_criterion_10_cited_rank_facts():
    for n in (2, 3, 4):
        S, _ = order_preserving_singular(n)
        assert lower_rank(S)[0] == n
    assert small_rank(order_preserving_singular(2)[0])[0] == 2
    assert small_rank(order_preserving_singular(3)[0])[0] == 1
    assert small_rank(order_preserving_singular(4)[0])[0] == 1
    report(10, "lower rank n and small rank facts for the order-preserving family")


def test_criterion_11_indecomposable_shortcut():
    for index in range(2, 7):
        for period in range(1, 8 - index):
            S = monogenic(index, period)
            shortcut = large_rank_via_indecomposable(S)
            assert shortcut == S.order
            assert large_rank(S).value == S.order
    report(11, "monogenic large rank equals the order by shortcut and by search")


def test_criterion_12_rank_chain():
    for name, S in standard_corpus():
        if S.order > 10:
            continue
        ok, rep = rank_chain_check(S)
        assert ok, (name, rep.r1, rep.r2, rep.r3, rep.r4, rep.r5)
    report(12, "r1 <= r2 <= r3 <= r4 <= r5 across the corpus")


def test_criterion_13_rank_layer_decomposition():
    start = perf_counter()
    for n in (4, 5):
        S, codec = order_preserving_singular(n)
        by_rank = {}
        for x, w in enumerate(codec.words):
            by_rank.setdefault(len(set(w)), []).append(x)
        for r in range(1, n - 1):
            upper = by_rank[r + 1]
            reachable = {
                S.cayley[b][d] for b in upper for d in upper
            }
            missing = [x for x in by_rank[r] if x not in reachable]
            assert missing == []
    elapsed = perf_counter() - start
    assert elapsed < 60.0
    report(13, f"every lower-rank map factors through the next layer in {elapsed:.2f}s")


def test_criterion_14_thread_determinism(capsys):
    def lines(argv):
        code = cli.main(argv)
        assert code == 0
        return [
            line
            for line in capsys.readouterr().out.splitlines()
            if not line.startswith("elapsed=")
        ]

    for suite_args in (
        ["verify", "brandt", "--groups", "Z1,Z2", "--n", "2..3"],
        ["verify", "on", "--n", "3..4"],
    ):
        single = lines(suite_args + ["--threads", "1"])
        threaded = lines(suite_args + ["--threads", "8"])
        assert single == threaded
    with capsys.disabled():
        print()
        report(14, "verify reports are identical under 1 and 8 threads")
