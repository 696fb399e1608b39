"""The five subset ranks of a finite semigroup, with witnesses.

* small rank r1: largest k such that every k-subset is independent,
* lower rank r2: least size of a generating set,
* intermediate rank r3: largest size of an independent generating set,
* upper rank r4: largest size of an independent set,
* large rank r5: least k such that every k-subset generates.

For any finite semigroup r1 <= r2 <= r3 <= r4 <= r5. The large rank comes
from the prime-subset search (r5 = order - |smallest proper prime subset|
+ 1), with an independent definition-based scan and closed-form family
evaluations available as cross-checks.

All searches enumerate subsets in the canonical mask order of core, so
the reported witnesses are deterministic. The k range for r1 is 1..m;
singletons are always independent, so r1 >= 1, and a semigroup with no
dependent subset at all has r1 = m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import config
from .core import (
    FiniteSemigroup,
    GuardError,
    complement_mask,
    indecomposable_elements,
    is_generating,
    is_independent,
    ksubsets_canonical,
)
from .prime_search import SearchResult, smallest_proper_prime_subset


@dataclass(frozen=True)
class LargeRankResult:
    value: int
    prime_witness: int | None
    subsemigroup_witness: int | None
    search: SearchResult | None


@dataclass
class RankReport:
    """Computed ranks and witnesses; fields are None when not computed."""

    order: int
    name: str | None = None
    r1: int | None = None
    r2: int | None = None
    r3: int | None = None
    r4: int | None = None
    r5: int | None = None
    r1_certificate: int | None = None  # a smallest dependent subset, size r1+1
    r2_witness: int | None = None
    r3_witness: int | None = None
    r4_witness: int | None = None
    r5_prime_witness: int | None = None
    r5_subsemigroup_witness: int | None = None
    r5_search: "SearchResult | None" = None
    methods: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def chain_holds(self) -> bool:
        values = [self.r1, self.r2, self.r3, self.r4, self.r5]
        present = [v for v in values if v is not None]
        return all(x <= y for x, y in zip(present, present[1:]))


# ---------------------------------------------------------------------------
# Large rank


def large_rank(S: FiniteSemigroup, threads: int = 1) -> LargeRankResult:
    """r5 via the prime-subset search. The order-1 semigroup is special
    cased to 1: it has no proper prime subset, but its unique 1-subset
    generates."""
    if S.order == 1:
        return LargeRankResult(1, None, None, None)
    result = smallest_proper_prime_subset(S, threads=threads)
    return LargeRankResult(
        value=S.order - result.size + 1,
        prime_witness=result.witness,
        subsemigroup_witness=complement_mask(result.witness, S.order),
        search=result,
    )


def large_rank_direct(S: FiniteSemigroup, max_order: int | None = None) -> int:
    """r5 straight from the definition: the least k such that every
    k-subset generates. Independent of the prime-subset route."""
    limit = config.DIRECT_LARGE_RANK_MAX_ORDER if max_order is None else max_order
    m = S.order
    if m > limit:
        raise GuardError(f"direct large-rank guard: order {m} exceeds {limit}")
    for k in range(1, m + 1):
        if all(is_generating(S, mask) for mask in ksubsets_canonical(m, k)):
            return k
    raise AssertionError("the full set always generates")


def large_rank_via_indecomposable(S: FiniteSemigroup) -> int | None:
    """r5 = order when some element is not a product of any pair (removing
    it from a subset can never be repaired by generation); None when the
    shortcut does not apply."""
    return S.order if indecomposable_elements(S) else None


# ---------------------------------------------------------------------------
# Subset-search ranks


def _candidate_guard(m: int, k: int, guard: int) -> None:
    if comb(m, k) > guard:
        raise GuardError(
            f"subset search guard: C({m},{k}) = {comb(m, k)} exceeds {guard}"
        )


def lower_rank(
    S: FiniteSemigroup, max_candidates: int | None = None
) -> tuple[int, int]:
    """r2 and the first minimum generating set in canonical order."""
    guard = config.ORACLE_CANDIDATE_GUARD if max_candidates is None else max_candidates
    m = S.order
    for k in range(1, m + 1):
        _candidate_guard(m, k, guard)
        for mask in ksubsets_canonical(m, k):
            if is_generating(S, mask):
                return k, mask
    raise AssertionError("the full set always generates")


def small_rank(
    S: FiniteSemigroup, max_candidates: int | None = None
) -> tuple[int, int | None]:
    """r1 and a smallest dependent subset as certificate (None when every
    subset is independent, in which case r1 = order)."""
    guard = config.ORACLE_CANDIDATE_GUARD if max_candidates is None else max_candidates
    m = S.order
    for k in range(2, m + 1):  # singletons are always independent
        _candidate_guard(m, k, guard)
        for mask in ksubsets_canonical(m, k):
            if not is_independent(S, mask):
                return k - 1, mask
    return m, None


def upper_rank(S: FiniteSemigroup, max_order: int | None = None) -> tuple[int, int]:
    """r4 and the first maximum independent set in canonical order."""
    limit = config.INDEPENDENCE_SEARCH_MAX_ORDER if max_order is None else max_order
    m = S.order
    if m > limit:
        raise GuardError(f"independence search guard: order {m} exceeds {limit}")
    for k in range(m, 0, -1):
        for mask in ksubsets_canonical(m, k):
            if is_independent(S, mask):
                return k, mask
    raise AssertionError("singletons are always independent")


def intermediate_rank(
    S: FiniteSemigroup, max_order: int | None = None
) -> tuple[int, int]:
    """r3 and the first maximum independent generating set in canonical
    order. Always defined: a minimum generating set is independent."""
    limit = config.INDEPENDENCE_SEARCH_MAX_ORDER if max_order is None else max_order
    m = S.order
    if m > limit:
        raise GuardError(f"independence search guard: order {m} exceeds {limit}")
    for k in range(m, 0, -1):
        for mask in ksubsets_canonical(m, k):
            if is_generating(S, mask) and is_independent(S, mask):
                return k, mask
    raise AssertionError("a minimum generating set is independent")


# ---------------------------------------------------------------------------
# Closed forms


def _checked(value: int) -> int:
    if value > config.INT64_MAX:
        raise OverflowError(f"closed-form value {value} exceeds 64-bit range")
    return value


def closed_form(
    family: str,
    *,
    n: int,
    group_order: int | None = None,
    variant: str = "large_rank",
) -> int:
    """Closed-form family values.

    * ``brandt``: r5(B(G, n)) = (n^2 - n + 1)|G| + 2 for n >= 2,
    * ``order_preserving`` with variant ``large_rank``:
      r5 = C(2n-1, n-1) - n + 1 for n >= 3, and 2 for n = 2,
    * ``order_preserving`` with variant ``size``: C(2n-1, n-1) - 1.

    Arithmetic is range-checked against 64 bits; n is capped at a small
    guard so the binomials stay in range.
    """
    if n > config.CLOSED_FORM_MAX_N:
        raise GuardError(f"closed-form guard: n = {n} exceeds {config.CLOSED_FORM_MAX_N}")
    if family == "brandt":
        if variant != "large_rank":
            raise GuardError(f"unknown brandt variant {variant!r}")
        if group_order is None or group_order < 1:
            raise GuardError("brandt closed form needs a group order >= 1")
        if n < 2:
            raise GuardError(f"brandt closed form needs n >= 2, got {n}")
        return _checked((n * n - n + 1) * group_order + 2)
    if family == "order_preserving":
        if n < 2:
            raise GuardError(f"order-preserving closed form needs n >= 2, got {n}")
        if variant == "size":
            return _checked(comb(2 * n - 1, n - 1) - 1)
        if variant == "large_rank":
            if n == 2:
                return 2
            return _checked(comb(2 * n - 1, n - 1) - n + 1)
        raise GuardError(f"unknown order-preserving variant {variant!r}")
    raise GuardError(f"unknown closed-form family {family!r}")


# ---------------------------------------------------------------------------
# Reports


def compute_rank_report(
    S: FiniteSemigroup,
    which: tuple[str, ...] = ("r5",),
    threads: int = 1,
    max_candidates: int | None = None,
    independence_max_order: int | None = None,
) -> RankReport:
    report = RankReport(order=S.order, name=S.name)
    if "r1" in which:
        report.r1, report.r1_certificate = small_rank(S, max_candidates)
        report.methods["r1"] = "search"
    if "r2" in which:
        report.r2, report.r2_witness = lower_rank(S, max_candidates)
        report.methods["r2"] = "search"
    if "r3" in which:
        report.r3, report.r3_witness = intermediate_rank(S, independence_max_order)
        report.methods["r3"] = "search"
    if "r4" in which:
        report.r4, report.r4_witness = upper_rank(S, independence_max_order)
        report.methods["r4"] = "search"
    if "r5" in which:
        result = large_rank(S, threads=threads)
        report.r5 = result.value
        report.r5_prime_witness = result.prime_witness
        report.r5_subsemigroup_witness = result.subsemigroup_witness
        report.r5_search = result.search
        if result.search is None:
            report.methods["r5"] = "definition"
            report.notes.append("order 1: large rank forced by definition")
        else:
            report.methods["r5"] = "search"
    return report


def rank_chain_check(
    S: FiniteSemigroup,
    threads: int = 1,
    max_candidates: int | None = None,
    independence_max_order: int | None = None,
) -> tuple[bool, RankReport]:
    """Compute all five ranks and check r1 <= r2 <= r3 <= r4 <= r5.

    Guard errors from the component searches propagate."""
    report = compute_rank_report(
        S,
        which=("r1", "r2", "r3", "r4", "r5"),
        threads=threads,
        max_candidates=max_candidates,
        independence_max_order=independence_max_order,
    )
    return report.chain_holds(), report
