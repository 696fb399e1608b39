"""Exact search for smallest proper prime subsets.

A nonempty subset U is prime when every factorization a*b of every element
of U keeps a factor inside U; equivalently, the complement of U is a
subsemigroup, so a smallest proper prime subset is the complement of a
largest proper subsemigroup.

The solver works over the factorization index (all ordered pairs (a, b)
per product c). A candidate set containing c with a factorization (a, b)
where neither factor is inside has a violated constraint; any prime
superset must contain a or b, so the search branches on those two repairs
(one repair when a = b). Running this repair DFS to a fixed size bound,
for every seed element, and deepening the bound one element at a time
yields the exact minimum: the levels below the answer are exhausted, which
is the optimality proof, and the first level with hits holds every
minimum-size prime subset, from which the canonically smallest mask is
reported. The per-level trees do not depend on results found elsewhere,
so node counts and witnesses are identical under any thread schedule.

Constraint selection is fail-first and deterministic: among violated
factorizations, prefer the forced ones (a = b, a single repair), breaking
ties by smallest (c, a, b).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from time import perf_counter

from . import config
from .core import (
    FiniteSemigroup,
    GuardError,
    complement_mask,
    is_prime_subset,
    mask_key,
)


class NoProperPrimeSubsetError(ValueError):
    """Raised for order-1 semigroups, whose only proper subset is empty."""


@dataclass(frozen=True)
class FactorizationIndex:
    """For each element c, every ordered pair (a, b) with a*b = c, in
    row-major table scan order."""

    by_product: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def pair_count(self) -> int:
        return sum(len(block) for block in self.by_product)


@dataclass(frozen=True)
class SearchResult:
    witness: int
    size: int
    nodes_visited: int
    proven_optimal: bool
    elapsed: float


def build_factorization_index(S: FiniteSemigroup) -> FactorizationIndex:
    lists: list[list[tuple[int, int]]] = [[] for _ in range(S.order)]
    for a, row in enumerate(S.cayley):
        for b, c in enumerate(row):
            lists[c].append((a, b))
    return FactorizationIndex(tuple(tuple(block) for block in lists))


def _select_violation(
    by_product: tuple[tuple[tuple[int, int], ...], ...], mask: int
) -> tuple[int, ...] | None:
    """The repair options of the chosen violated constraint, or None when
    the mask is already prime."""
    first: tuple[int, int] | None = None
    rest = mask
    while rest:
        low = rest & -rest
        c = low.bit_length() - 1
        rest ^= low
        for a, b in by_product[c]:
            if mask >> a & 1 or mask >> b & 1:
                continue
            if a == b:
                return (a,)  # forced repair beats every two-option constraint
            if first is None:
                first = (a, b)
    return first


def _count_disjoint_violations(
    by_product: tuple[tuple[tuple[int, int], ...], ...], mask: int
) -> int:
    """Greedy count of violated factorizations sharing no elements; each
    needs its own repair, so this lower-bounds the elements still missing."""
    used = 0
    count = 0
    rest = mask
    while rest:
        low = rest & -rest
        c = low.bit_length() - 1
        rest ^= low
        for a, b in by_product[c]:
            if mask >> a & 1 or mask >> b & 1:
                continue
            pair_bits = (1 << a) | (1 << b)
            if used & pair_bits:
                continue
            used |= pair_bits
            count += 1
    return count


def _bounded_search(
    by_product: tuple[tuple[tuple[int, int], ...], ...],
    seed: int,
    limit: int,
    use_matching_bound: bool,
) -> tuple[int, list[int]]:
    """Exhaust the repair tree rooted at {seed} up to ``limit`` elements.

    Returns (nodes visited, prime masks found). With the optional matching
    bound, branches that provably cannot stay within the limit are cut;
    the set of prime masks found is unchanged.
    """
    nodes = 0
    hits: list[int] = []
    stack = [(1 << seed, 1)]
    while stack:
        mask, size = stack.pop()
        nodes += 1
        options = _select_violation(by_product, mask)
        if options is None:
            hits.append(mask)
            continue
        if size == limit:
            continue
        if use_matching_bound and size + _count_disjoint_violations(
            by_product, mask
        ) > limit:
            continue
        for x in options:
            stack.append((mask | (1 << x), size + 1))
    return nodes, hits


def smallest_proper_prime_subset(
    S: FiniteSemigroup,
    upper_bound_hint: int | None = None,
    threads: int = 1,
    use_matching_bound: bool = False,
) -> SearchResult:
    """The minimum-cardinality proper prime subset, deterministically the
    canonically smallest mask among the minimum-size witnesses.

    ``upper_bound_hint`` must itself be a proper prime subset; it caps the
    deepening but never changes the result.
    """
    m = S.order
    if m < 2:
        raise NoProperPrimeSubsetError(
            "an order-1 semigroup has no nonempty proper prime subset"
        )
    start = perf_counter()
    if upper_bound_hint is not None:
        if not (
            0 < upper_bound_hint < S.full_mask
            and is_prime_subset(S, upper_bound_hint)
        ):
            raise ValueError("upper_bound_hint is not a proper prime subset")
        cap = upper_bound_hint.bit_count()
    else:
        # the complement of any idempotent is a proper prime subset, and a
        # finite semigroup always has an idempotent
        cap = m - 1
    by_product = build_factorization_index(S).by_product
    nodes_total = 0
    for limit in range(1, cap + 1):
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                per_seed = list(
                    pool.map(
                        lambda seed: _bounded_search(
                            by_product, seed, limit, use_matching_bound
                        ),
                        range(m),
                    )
                )
        else:
            per_seed = [
                _bounded_search(by_product, seed, limit, use_matching_bound)
                for seed in range(m)
            ]
        level_hits: set[int] = set()
        for nodes, hits in per_seed:
            nodes_total += nodes
            level_hits.update(hits)
        if level_hits:
            witness = min(level_hits, key=lambda w: mask_key(w, m))
            return SearchResult(
                witness=witness,
                size=limit,
                nodes_visited=nodes_total,
                proven_optimal=True,
                elapsed=perf_counter() - start,
            )
    # Unreachable for a genuine semigroup: the complement of an idempotent
    # is always a proper prime subset. A trusted-but-bogus table can land here.
    raise NoProperPrimeSubsetError(
        "search exhausted without finding a proper prime subset; "
        "is the table associative?"
    )


def largest_proper_subsemigroup(
    S: FiniteSemigroup, threads: int = 1
) -> int:
    """Complement of the smallest proper prime subset: a maximum-size
    proper subsemigroup, deterministic like the prime search."""
    result = smallest_proper_prime_subset(S, threads=threads)
    return complement_mask(result.witness, S.order)


def enumerate_prime_subsets_upto(
    S: FiniteSemigroup, size_limit: int, max_candidates: int | None = None
) -> list[int]:
    """Every proper prime subset of size at most ``size_limit``, ascending
    by size and canonically within a size. Brute force by design: this is
    the oracle the branch-and-bound is validated against."""
    guard = config.ORACLE_CANDIDATE_GUARD if max_candidates is None else max_candidates
    m = S.order
    limit = min(size_limit, m - 1)  # proper subsets only
    candidates = sum(comb(m, k) for k in range(1, limit + 1))
    if candidates > guard:
        raise GuardError(
            f"enumeration would scan {candidates} candidate subsets, guard is {guard}"
        )
    by_product = build_factorization_index(S).by_product
    out: list[int] = []
    for k in range(1, limit + 1):
        found: list[int] = []
        for combo in itertools.combinations(range(m), k):
            mask = 0
            for x in combo:
                mask |= 1 << x
            prime = True
            for c in combo:
                for a, b in by_product[c]:
                    if not (mask >> a & 1 or mask >> b & 1):
                        prime = False
                        break
                if not prime:
                    break
            if prime:
                found.append(mask)
        found.sort(key=lambda w: mask_key(w, m))
        out.extend(found)
    return out
