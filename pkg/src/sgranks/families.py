"""Constructors for the semigroup families the workbench studies.

Each constructor returns an immutable FiniteSemigroup (plus, where the
elements carry structure, a codec translating between structured elements
and table indices). Conventions fixed here so that masks and reports are
bit-identical across runs:

* elements are 0-indexed internally; labels use 1-based display forms,
* Brandt triples (i, g, j) encode to ((i-1)*|G| + g)*n + (j-1) with the
  absorbing zero last,
* transformations compose left to right: (a then b)(x) = b(a(x)),
* transformation families are ordered lexicographically by image word,
  cyclic groups by residue, symmetric groups lexicographically by the
  image word of the permutation.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from . import config
from .core import (
    FiniteSemigroup,
    GuardError,
    NotAssociativeError,
    mask_of,
    validate_associativity,
)


@dataclass(frozen=True, repr=False)
class FiniteGroup:
    """A finite group presented as a semigroup with identity and inverses."""

    underlying: FiniteSemigroup
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.underlying.order

    @property
    def name(self) -> str | None:
        return self.underlying.name

    def __repr__(self) -> str:
        return f"<group {self.name or '?'}, order {self.order}>"


@dataclass(frozen=True)
class BrandtCodec:
    """Index codec for B(G, n): triples (i, g, j) with 1 <= i, j <= n and
    g a group element index, plus the absorbing zero at the last index."""

    n: int
    group_order: int

    @property
    def zero_index(self) -> int:
        return self.n * self.n * self.group_order

    def encode(self, i: int, g: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n and 0 <= g < self.group_order):
            raise GuardError(f"triple ({i}, {g}, {j}) outside [n] x G x [n]")
        return ((i - 1) * self.group_order + g) * self.n + (j - 1)

    def decode(self, index: int) -> tuple[int, int, int] | None:
        """The triple at ``index``, or None for the zero element."""
        if index == self.zero_index:
            return None
        j = index % self.n
        t = index // self.n
        return (t // self.group_order + 1, t % self.group_order, j + 1)


@dataclass(frozen=True)
class Transformation:
    """A self-map of [n]; img[x] is the 0-based image of point x."""

    img: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.img)

    def is_order_preserving(self) -> bool:
        return all(self.img[i] <= self.img[i + 1] for i in range(len(self.img) - 1))

    def is_singular(self) -> bool:
        return len(set(self.img)) < len(self.img)

    def word(self) -> str:
        """1-based display word, e.g. '112' for 1->1, 2->1, 3->2."""
        return "".join(str(v + 1) for v in self.img)


@dataclass(frozen=True)
class TransformationCodec:
    """Index codec for a transformation family ordered lexicographically
    by image word."""

    n: int
    words: tuple[tuple[int, ...], ...]

    def index_of(self, t: Transformation) -> int:
        i = bisect_left(self.words, t.img)
        if i == len(self.words) or self.words[i] != t.img:
            raise KeyError(f"transformation {t.img} is not in the family")
        return i

    def decode(self, index: int) -> Transformation:
        return Transformation(self.words[index])


# ---------------------------------------------------------------------------
# Groups


def cyclic_group(m: int, max_order: int | None = None) -> FiniteGroup:
    limit = config.CYCLIC_MAX_ORDER if max_order is None else max_order
    if not 1 <= m <= limit:
        raise GuardError(f"cyclic group order {m} outside [1, {limit}]")
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    labels = ("e",) if m == 1 else tuple(str(i) for i in range(m))
    S = FiniteSemigroup(m, table, labels, f"Z{m}")
    return FiniteGroup(S, identity=0, inverse=tuple((m - i) % m for i in range(m)))


def symmetric_group(m: int, max_degree: int | None = None) -> FiniteGroup:
    limit = config.SYMMETRIC_MAX_DEGREE if max_degree is None else max_degree
    if not 1 <= m <= limit:
        raise GuardError(f"symmetric group degree {m} outside [1, {limit}]")
    perms = list(itertools.permutations(range(m)))  # lexicographic by image word
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(q[v] for v in p)] for q in perms) for p in perms
    )
    inverse = []
    for p in perms:
        inv = [0] * m
        for x, v in enumerate(p):
            inv[v] = x
        inverse.append(index[tuple(inv)])
    labels = tuple("".join(str(v + 1) for v in p) for p in perms)
    S = FiniteSemigroup(len(perms), table, labels, f"S{m}")
    return FiniteGroup(S, identity=0, inverse=tuple(inverse))


def group_from_table(table) -> FiniteGroup:
    """Validate an arbitrary square index table as a group.

    Raises NotAssociativeError, or ValueError naming the defect, when the
    table is not associative, has no two-sided identity, or has an element
    without an inverse.
    """
    bad = validate_associativity(table)
    if bad is not None:
        raise NotAssociativeError(bad)
    m = len(table)
    identity = None
    for e in range(m):
        if all(table[e][x] == x and table[x][e] == x for x in range(m)):
            identity = e
            break
    if identity is None:
        raise ValueError("no identity element")
    inverse = []
    for g in range(m):
        for h in range(m):
            if table[g][h] == identity and table[h][g] == identity:
                inverse.append(h)
                break
        else:
            raise ValueError(f"element {g} has no inverse")
    S = FiniteSemigroup(m, tuple(tuple(int(v) for v in row) for row in table))
    return FiniteGroup(S, identity, tuple(inverse))


# ---------------------------------------------------------------------------
# Brandt semigroups


def brandt(
    G: FiniteGroup, n: int, max_order: int | None = None
) -> tuple[FiniteSemigroup, BrandtCodec]:
    """B(G, n): triples [n] x G x [n] plus an absorbing zero, with
    (i, a, j)(k, b, l) = (i, ab, l) when j = k and zero otherwise."""
    limit = config.BRANDT_MAX_ORDER if max_order is None else max_order
    if n < 1:
        raise GuardError(f"Brandt parameter n must be >= 1, got {n}")
    go = G.order
    m = n * n * go + 1
    if m > limit:
        raise GuardError(f"Brandt semigroup order {m} exceeds guard {limit}")
    zero = m - 1
    gt = G.underlying.cayley
    # Every entry not filled below is zero: mismatched inner indices, the
    # zero row and the zero column.
    rows = [[zero] * m for _ in range(m)]
    for i in range(1, n + 1):
        for g in range(go):
            for j in range(1, n + 1):
                x = ((i - 1) * go + g) * n + (j - 1)
                row = rows[x]
                for h in range(go):
                    ybase = ((j - 1) * go + h) * n  # partners (j, h, l)
                    pbase = ((i - 1) * go + gt[g][h]) * n
                    for l in range(n):
                        row[ybase + l] = pbase + l
    codec = BrandtCodec(n=n, group_order=go)
    glabels = G.underlying.labels or tuple(str(g) for g in range(go))
    labels = []
    for i in range(1, n + 1):
        for g in range(go):
            for j in range(1, n + 1):
                labels.append(f"({i},{glabels[g]},{j})")
    labels.append("0")
    name = f"B{n}" if go == 1 else f"B({G.name or 'G'},{n})"
    S = FiniteSemigroup(m, tuple(tuple(r) for r in rows), tuple(labels), name)
    return S, codec


def witness_prime_brandt(G: FiniteGroup, n: int) -> int:
    """The size (n-1)|G| prime subset {(n, a, k) : a in G, 1 <= k <= n-1}
    of B(G, n), as a mask over the standard encoding. Requires n >= 2."""
    if n < 2:
        raise GuardError(f"witness requires n >= 2, got {n}")
    codec = BrandtCodec(n=n, group_order=G.order)
    return mask_of(
        codec.encode(n, a, k) for a in range(G.order) for k in range(1, n)
    )


# ---------------------------------------------------------------------------
# Monogenic semigroups


def monogenic(index: int, period: int, max_order: int | None = None) -> FiniteSemigroup:
    """The semigroup generated by one element a with a^(index+period) equal
    to a^index: elements a^1 .. a^(index+period-1)."""
    limit = config.MONOGENIC_MAX_ORDER if max_order is None else max_order
    if index < 1 or period < 1:
        raise GuardError(f"index and period must be >= 1, got ({index}, {period})")
    m = index + period - 1
    if m > limit:
        raise GuardError(f"monogenic order {m} exceeds guard {limit}")

    def fold(e: int) -> int:
        return e if e <= m else index + (e - index) % period

    table = tuple(
        tuple(fold((i + 1) + (j + 1)) - 1 for j in range(m)) for i in range(m)
    )
    labels = tuple("a" if k == 0 else f"a^{k + 1}" for k in range(m))
    return FiniteSemigroup(m, table, labels, f"monogenic({index},{period})")


# ---------------------------------------------------------------------------
# Transformation semigroups


def compose(a: Transformation, b: Transformation) -> Transformation:
    """Apply a first, then b: the result maps x to b.img[a.img[x]]."""
    if a.n != b.n:
        raise ValueError(f"mismatched degrees {a.n} and {b.n}")
    return Transformation(tuple(b.img[v] for v in a.img))


def image_and_kernel(
    t: Transformation,
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """The (sorted) image and the kernel classes of a transformation.

    Kernel classes partition the points by equal image value; the blocks
    are ordered by their smallest point.
    """
    by_value: dict[int, list[int]] = {}
    for x, v in enumerate(t.img):
        by_value.setdefault(v, []).append(x)
    blocks = sorted(by_value.values(), key=lambda block: block[0])
    image = tuple(sorted(by_value))
    return image, tuple(tuple(block) for block in blocks)


def _composition_table(words: list[tuple[int, ...]], n: int) -> tuple[tuple[int, ...], ...]:
    # words must be lex-sorted and closed under left-to-right composition
    arr = np.asarray(words, dtype=np.int64)
    powers = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keys = arr @ powers  # strictly ascending because words are lex-sorted
    rows = []
    for a in range(len(words)):
        comp = arr[:, arr[a]]  # comp[b, x] = words[b][words[a][x]]
        ck = comp @ powers
        idx = np.searchsorted(keys, ck)
        if idx.max(initial=0) >= len(words) or not np.array_equal(keys[idx], ck):
            raise AssertionError("family is not closed under composition")
        rows.append(tuple(int(v) for v in idx))
    return tuple(rows)


def full_transformation(
    n: int, max_degree: int | None = None
) -> tuple[FiniteSemigroup, TransformationCodec]:
    """All n^n self-maps of [n] under left-to-right composition."""
    limit = config.FULL_TRANSFORMATION_MAX_DEGREE if max_degree is None else max_degree
    if not 1 <= n <= limit:
        raise GuardError(f"full transformation degree {n} outside [1, {limit}]")
    words = list(itertools.product(range(n), repeat=n))
    table = _composition_table(words, n)
    labels = tuple("".join(str(v + 1) for v in w) for w in words)
    S = FiniteSemigroup(len(words), table, labels, f"T{n}")
    return S, TransformationCodec(n=n, words=tuple(words))


def _order_preserving_singular_words(n: int) -> list[tuple[int, ...]]:
    identity = tuple(range(n))
    return [
        w
        for w in itertools.combinations_with_replacement(range(n), n)
        if w != identity
    ]


def order_preserving_singular(
    n: int, max_degree: int | None = None
) -> tuple[FiniteSemigroup, TransformationCodec]:
    """All order-preserving non-bijective self-maps of [n]: the
    non-decreasing image words except the identity, under left-to-right
    composition."""
    limit = config.ORDER_PRESERVING_MAX_DEGREE if max_degree is None else max_degree
    if not 2 <= n <= limit:
        raise GuardError(f"order-preserving degree {n} outside [2, {limit}]")
    words = _order_preserving_singular_words(n)
    table = _composition_table(words, n)
    labels = tuple("".join(str(v + 1) for v in w) for w in words)
    S = FiniteSemigroup(len(words), table, labels, f"O{n}")
    return S, TransformationCodec(n=n, words=tuple(words))


def zeta(n: int, i: int, k: int) -> Transformation:
    """The unique order-preserving map of [n] whose kernel collapses only
    {i, i+1} and whose image misses exactly k (both 1-based)."""
    if not 1 <= i <= n - 1:
        raise GuardError(f"kernel position i={i} outside [1, {n - 1}]")
    if not 1 <= k <= n:
        raise GuardError(f"missing image point k={k} outside [1, {n}]")
    img = []
    for x in range(1, n + 1):
        c = x if x <= i else x - 1
        v = c if c < k else c + 1
        img.append(v - 1)
    return Transformation(tuple(img))


def witness_prime_on(n: int, q: int) -> int:
    """The size n-1 prime subset {zeta(i, q) : 1 <= i <= n-1} of the
    order-preserving singular family, as a mask over its standard
    ordering. Requires n >= 3."""
    if n < 3:
        raise GuardError(f"witness requires n >= 3, got {n}")
    if not 1 <= q <= n:
        raise GuardError(f"q={q} outside [1, {n}]")
    words = _order_preserving_singular_words(n)
    mask = 0
    for i in range(1, n):
        w = zeta(n, i, q).img
        pos = bisect_left(words, w)
        mask |= 1 << pos
    return mask


# ---------------------------------------------------------------------------
# Trivial families and the small test corpus


def left_zero(m: int) -> FiniteSemigroup:
    table = tuple(tuple(i for _ in range(m)) for i in range(m))
    return FiniteSemigroup(m, table, tuple(str(i) for i in range(m)), f"LZ{m}")


def right_zero(m: int) -> FiniteSemigroup:
    table = tuple(tuple(j for j in range(m)) for _ in range(m))
    return FiniteSemigroup(m, table, tuple(str(i) for i in range(m)), f"RZ{m}")


def standard_corpus() -> list[tuple[str, FiniteSemigroup]]:
    """The small semigroups used for oracle cross-checks: two Brandt
    semigroups, the degree 2 and 3 order-preserving families, cyclic
    groups Z2..Z6, all monogenic semigroups of order at most 6, and the
    left- and right-zero semigroups of orders 2..4."""
    corpus: list[tuple[str, FiniteSemigroup]] = []
    corpus.append(("B2", brandt(cyclic_group(1), 2)[0]))
    corpus.append(("B(Z2,2)", brandt(cyclic_group(2), 2)[0]))
    corpus.append(("O2", order_preserving_singular(2)[0]))
    corpus.append(("O3", order_preserving_singular(3)[0]))
    for k in range(2, 7):
        corpus.append((f"Z{k}", cyclic_group(k).underlying))
    for index in range(1, 7):
        for period in range(1, 8 - index):
            corpus.append(
                (f"monogenic({index},{period})", monogenic(index, period))
            )
    for k in range(2, 5):
        corpus.append((f"LZ{k}", left_zero(k)))
        corpus.append((f"RZ{k}", right_zero(k)))
    return corpus
