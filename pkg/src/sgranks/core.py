"""Exact predicates and closure computation for finite semigroups.

A semigroup of order m is stored as an m x m Cayley table of element
indices: ``cayley[a][b]`` is the product a*b. Subsets of the element set
are plain int bitmasks (bit i set iff element i is a member); SubsetMask
and ElementId below are aliases rather than wrapper classes, so subset
algebra stays cheap, hashable and order-free.

Wherever one subset of a given size must be preferred over another
(witness tie-breaks, enumeration order), masks are compared by mask_key,
which reads the membership bitstring from element 0 upward with absent
sorting before present. The first k-subset in this order is
{m-k, ..., m-1}; singletons come out in the order {m-1}, {m-2}, ..., {0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

SubsetMask = int
ElementId = int


class GuardError(ValueError):
    """A size guard or parameter-domain limit was exceeded."""


class NotAssociativeError(ValueError):
    """A Cayley table failed the associativity check."""

    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"not associative at triple ({a}, {b}, {c})")
        self.triple = (a, b, c)


@dataclass(frozen=True, repr=False)
class FiniteSemigroup:
    """A finite semigroup: order, Cayley table, optional display labels."""

    order: int
    cayley: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    name: str | None = None

    def __repr__(self) -> str:
        return f"<{self.name or 'semigroup'}, order {self.order}>"

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def labels_of(self, mask: int) -> str:
        """Space-joined labels of the members of ``mask``, ascending index."""
        return " ".join(self.label(x) for x in elements_of(mask))


# ---------------------------------------------------------------------------
# Bitmask helpers


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for x in indices:
        mask |= 1 << x
    return mask


def elements_of(mask: int) -> list[int]:
    """Member indices of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def complement_mask(mask: int, m: int) -> int:
    return ((1 << m) - 1) & ~mask


def mask_key(mask: int, m: int) -> int:
    """Canonical sort key: the membership bitstring of element 0..m-1 read
    as a big-endian binary number. Smaller key = earlier subset."""
    key = 0
    while mask:
        low = mask & -mask
        key |= 1 << (m - 1 - (low.bit_length() - 1))
        mask ^= low
    return key


def ksubsets_canonical(m: int, k: int) -> Iterator[int]:
    """Yield every k-element mask of [0, m) in canonical order.

    Uses Gosper's hack on the bit-reversed masks: those run through all
    same-popcount integers in ascending numeric order, which is exactly
    ascending mask_key after reversal.
    """
    if k == 0:
        yield 0
        return
    if k > m:
        return
    v = (1 << k) - 1
    top = 1 << m
    while v < top:
        yield mask_key(v, m)  # bit reversal is an involution
        c = v & -v
        r = v + c
        v = r | ((v ^ r) >> (c.bit_length() + 1))


# ---------------------------------------------------------------------------
# Table validation and construction


def validate_associativity(
    table: Sequence[Sequence[int]],
) -> tuple[int, int, int] | None:
    """Return None when the table associates, else the first bad triple.

    The table must be square with entries in [0, m); a malformed row or an
    out-of-range entry raises ValueError naming its position before any
    associativity work happens. The returned triple (a, b, c) is the
    lexicographically first with (a*b)*c != a*(b*c).
    """
    m = len(table)
    for a, row in enumerate(table):
        if len(row) != m:
            raise ValueError(f"row {a} has {len(row)} entries, expected {m}")
        for b, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < m:
                raise ValueError(f"entry out of range at row {a}, column {b}: {v!r}")
    if m == 0:
        return None
    arr = np.asarray(table, dtype=np.int64)
    for a in range(m):
        left = arr[arr[a]]  # left[b, c] = (a*b)*c
        right = arr[a][arr]  # right[b, c] = a*(b*c)
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            return (a, int(b), int(c))
    return None


def make_semigroup(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str | None = None,
    trusted: bool = False,
) -> FiniteSemigroup:
    """Build a FiniteSemigroup from a table, checking the invariants.

    ``trusted`` skips the O(m^3) associativity check; entry ranges and
    label consistency are always verified.
    """
    m = len(table)
    if not trusted:
        bad = validate_associativity(table)
        if bad is not None:
            raise NotAssociativeError(bad)
    else:
        for a, row in enumerate(table):
            if len(row) != m:
                raise ValueError(f"row {a} has {len(row)} entries, expected {m}")
            for b, v in enumerate(row):
                if not 0 <= v < m:
                    raise ValueError(f"entry out of range at row {a}, column {b}: {v!r}")
    label_tuple = None
    if labels is not None:
        label_tuple = tuple(labels)
        if len(label_tuple) != m:
            raise ValueError(f"expected {m} labels, got {len(label_tuple)}")
        if len(set(label_tuple)) != m:
            raise ValueError("labels are not distinct")
    return FiniteSemigroup(
        order=m,
        cayley=tuple(tuple(int(v) for v in row) for row in table),
        labels=label_tuple,
        name=name,
    )


# ---------------------------------------------------------------------------
# Basic operations


def multiply(S: FiniteSemigroup, a: int, b: int) -> int:
    if not 0 <= a < S.order or not 0 <= b < S.order:
        raise IndexError(f"element index out of range: ({a}, {b})")
    return S.cayley[a][b]


def closure(S: FiniteSemigroup, mask: int) -> int:
    """The least subset containing ``mask`` that is closed under the
    product. The empty set closes to itself."""
    if mask == 0:
        return 0
    table = S.cayley
    full = S.full_mask
    members = elements_of(mask)
    seen = mask
    i = 0
    while i < len(members):
        x = members[i]
        i += 1
        row = table[x]
        # Products with elements appended during this pass are handled
        # when those elements are themselves dequeued.
        snapshot = len(members)
        for j in range(snapshot):
            w = members[j]
            p = row[w]
            bit = 1 << p
            if not seen & bit:
                seen |= bit
                members.append(p)
            q = table[w][x]
            bit = 1 << q
            if not seen & bit:
                seen |= bit
                members.append(q)
        if seen == full:
            return full
    return seen


def is_subsemigroup(S: FiniteSemigroup, mask: int) -> bool:
    """True iff the subset is closed under the product (empty set counts)."""
    table = S.cayley
    elems = elements_of(mask)
    for a in elems:
        row = table[a]
        for b in elems:
            if not mask >> row[b] & 1:
                return False
    return True


def is_generating(S: FiniteSemigroup, mask: int) -> bool:
    return closure(S, mask) == S.full_mask


def is_independent(S: FiniteSemigroup, mask: int) -> bool:
    """True iff no member lies in the subsemigroup generated by the other
    members. Raises ValueError on the empty set, whose independence is
    left undefined."""
    if mask == 0:
        raise ValueError("independence of the empty set is undefined")
    for a in elements_of(mask):
        if closure(S, mask & ~(1 << a)) >> a & 1:
            return False
    return True


def is_prime_subset(S: FiniteSemigroup, mask: int) -> bool:
    """True iff the subset is nonempty and every product that lands in it
    has a factor in it; equivalently, its complement is closed."""
    if mask == 0:
        return False
    table = S.cayley
    outside = [x for x in range(S.order) if not mask >> x & 1]
    for a in outside:
        row = table[a]
        for b in outside:
            if mask >> row[b] & 1:
                return False
    return True


def idempotents(S: FiniteSemigroup) -> int:
    mask = 0
    for x in range(S.order):
        if S.cayley[x][x] == x:
            mask |= 1 << x
    return mask


def indecomposable_elements(S: FiniteSemigroup) -> int:
    """Mask of elements that are not a product of any ordered pair."""
    decomposable = 0
    for row in S.cayley:
        for p in row:
            decomposable |= 1 << p
    return S.full_mask & ~decomposable
