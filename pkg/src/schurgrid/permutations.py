"""Permutations of [n] with descent statistics and group operations.

A permutation is stored in one-line notation as a tuple of the values
``1..n``, each appearing exactly once; the empty tuple is the (unique)
permutation of degree 0.  Descent sets are subsets of ``[n-1]`` stored as
bitmasks wrapped in :class:`DescSet` (bit ``i-1`` set  <=>  ``i`` is a
descent position).

>>> des_set(parse_perm("62354781")).braces()
'{1,4,7}'
>>> format_perm(vertical_rotate(parse_perm("12345"), 1))
'23451'
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Perm",
    "Composition",
    "DescSet",
    "perm_from_word",
    "identity",
    "longest_element",
    "cycle_perm",
    "parse_perm",
    "format_perm",
    "des_mask",
    "des_set",
    "cdes_set",
    "cdes_count",
    "inverse",
    "compose",
    "vertical_rotate",
    "horizontal_rotate",
    "reverse",
    "complement",
    "rotate180",
    "standardize",
    "composition",
    "composition_partial_sums",
    "composition_boundary_mask",
    "composition_of_descents",
    "sorted_composition_key",
    "is_mu_modal_desset",
    "is_mu_modal_mask",
    "shuffle_words",
    "shuffles",
]

# One-line notation: word[i] is the image of position i+1.
Perm = tuple[int, ...]

# A sequence of positive integers; compositions index descent statistics.
Composition = tuple[int, ...]


def perm_from_word(word: Sequence[int]) -> Perm:
    """Validate and freeze a one-line word into a permutation.

    >>> perm_from_word([2, 3, 1])
    (2, 3, 1)
    """
    w = tuple(int(v) for v in word)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w!r}")
    return w


def identity(n: int) -> Perm:
    """The identity permutation of degree ``n``."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The order-reversing permutation ``n, n-1, ..., 1``."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return tuple(range(n, 0, -1))


def cycle_perm(n: int) -> Perm:
    """The n-cycle sending each value ``v`` to ``v+1`` modulo ``n``.

    >>> cycle_perm(4)
    (2, 3, 4, 1)
    """
    if n <= 0:
        raise ValueError("degree must be >= 1")
    return tuple(list(range(2, n + 1)) + [1])


def parse_perm(text: str) -> Perm:
    """Parse permutation text: space-free digits for degree <= 9,
    comma-separated values otherwise.

    >>> parse_perm("312")
    (3, 1, 2)
    >>> parse_perm("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        values = [int(part) for part in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"invalid permutation text: {text!r}")
        values = [int(ch) for ch in text]
    return perm_from_word(values)


def format_perm(p: Perm) -> str:
    """Inverse of :func:`parse_perm`.

    >>> format_perm((3, 1, 2))
    '312'
    """
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


# ---------------------------------------------------------------------------
# Descent sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class DescSet:
    """A subset of ``[n-1]`` attached to its ambient degree ``n``.

    Stored as a bitmask for O(1) set algebra: bit ``i-1`` is set exactly
    when ``i`` is a member.

    >>> DescSet.of(8, [1, 4, 7]).braces()
    '{1,4,7}'
    >>> 4 in DescSet.of(8, [1, 4, 7])
    True
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ambient degree must be >= 0")
        width = max(self.n - 1, 0)
        if not 0 <= self.mask < (1 << width):
            raise ValueError(
                f"mask {self.mask:#x} out of range for degree {self.n}"
            )

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "DescSet":
        mask = 0
        for i in members:
            if not 1 <= i <= n - 1:
                raise ValueError(f"member {i} outside 1..{n - 1}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def from_braces(cls, n: int, text: str) -> "DescSet":
        """Parse the canonical textual form ``{1,4,7}`` (``{}`` for empty)."""
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"expected braces: {text!r}")
        inner = text[1:-1].strip()
        members = [int(part) for part in inner.split(",")] if inner else []
        return cls.of(n, members)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(max(self.n - 1, 0)) if self.mask >> i & 1)

    def braces(self) -> str:
        return "{" + ",".join(str(i) for i in self.members) + "}"

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n - 1 and bool(self.mask >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def reflect(self) -> "DescSet":
        """The set ``{n - i : i in self}`` in the same ambient degree."""
        return DescSet.of(self.n, (self.n - i for i in self.members))


def des_mask(word: Sequence[int]) -> int:
    """Descent positions of a word as a bitmask (fast inner-loop form)."""
    mask = 0
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            mask |= 1 << i
    return mask


def des_set(p: Perm) -> DescSet:
    """Positions ``i`` with ``p(i) > p(i+1)``.

    >>> des_set((6, 2, 3, 5, 4, 7, 8, 1)).members
    (1, 4, 7)
    """
    return DescSet(len(p), des_mask(p))


def cdes_set(p: Perm) -> frozenset[int]:
    """Cyclic descent set: the descents, plus ``n`` when ``p(n) > p(1)``.

    >>> sorted(cdes_set((1, 2, 3, 4, 5)))
    [5]
    >>> sorted(cdes_set((4, 3, 2, 1)))
    [1, 2, 3]
    """
    n = len(p)
    members = set(des_set(p).members)
    if n >= 1 and p[n - 1] > p[0]:
        members.add(n)
    return frozenset(members)


def cdes_count(p: Perm) -> int:
    """Number of cyclic descents."""
    return len(cdes_set(p))


# ---------------------------------------------------------------------------
# Group operations
# ---------------------------------------------------------------------------


def inverse(p: Perm) -> Perm:
    """Group inverse.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(p)
    for pos, val in enumerate(p):
        out[val - 1] = pos + 1
    return tuple(out)


def compose(p: Perm, q: Perm) -> Perm:
    """Composition ``p o q`` (apply ``q`` first): position i maps to p(q(i))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[v - 1] for v in q)


def vertical_rotate(p: Perm, k: int) -> Perm:
    """Add ``k`` to every value modulo ``n`` (values stay in ``1..n``).

    >>> vertical_rotate((1, 2, 3, 4, 5), 1)
    (2, 3, 4, 5, 1)
    """
    n = len(p)
    if n == 0:
        return p
    return tuple((v - 1 + k) % n + 1 for v in p)


def horizontal_rotate(p: Perm, k: int) -> Perm:
    """Cyclic position shift left by ``k``: the composition of ``p`` with the
    k-th power of the n-cycle.

    >>> horizontal_rotate((2, 3, 1, 4, 5), 1)
    (3, 1, 4, 5, 2)
    """
    n = len(p)
    if n == 0:
        return p
    return tuple(p[(i + k) % n] for i in range(n))


def reverse(p: Perm) -> Perm:
    """Read the word backwards (right multiplication by the longest element)."""
    return p[::-1]


def complement(p: Perm) -> Perm:
    """Replace each value v by n+1-v (left multiplication by the longest element)."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def rotate180(p: Perm) -> Perm:
    """Reverse and complement together; descent set reflects: i -> n-i."""
    return complement(reverse(p))


def standardize(values: Sequence[int]) -> Perm:
    """The permutation order-isomorphic to a sequence of distinct integers.

    >>> standardize((4, 5, 1, 7))
    (2, 3, 1, 4)
    >>> standardize((90, 10, 50))
    (3, 1, 2)
    """
    seq = tuple(values)
    if len(set(seq)) != len(seq):
        raise ValueError(f"entries not distinct: {seq!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return tuple(rank[v] for v in seq)


# ---------------------------------------------------------------------------
# Compositions and modality
# ---------------------------------------------------------------------------


def composition(parts: Iterable[int]) -> Composition:
    """Validate a sequence of positive integers."""
    mu = tuple(int(x) for x in parts)
    if any(x < 1 for x in mu):
        raise ValueError(f"composition parts must be >= 1: {mu!r}")
    return mu


def composition_partial_sums(mu: Composition) -> tuple[int, ...]:
    """Proper partial sums: ``mu_1, mu_1+mu_2, ...`` excluding the total."""
    sums = []
    total = 0
    for part in mu[:-1]:
        total += part
        sums.append(total)
    return tuple(sums)


def composition_boundary_mask(mu: Composition) -> int:
    """Bitmask over ``[n-1]`` of the proper partial sums of ``mu``."""
    mask = 0
    for s in composition_partial_sums(mu):
        mask |= 1 << (s - 1)
    return mask


def composition_of_descents(d: DescSet) -> Composition:
    """The composition of ``d.n`` whose proper partial sums are ``d``.

    >>> composition_of_descents(DescSet.of(9, [1, 3, 5, 6]))
    (1, 2, 2, 1, 3)
    """
    if d.n == 0:
        return ()
    prev = 0
    parts = []
    for i in d.members:
        parts.append(i - prev)
        prev = i
    parts.append(d.n - prev)
    return tuple(parts)


def sorted_composition_key(d: DescSet) -> Composition:
    """Multiset of block lengths of ``d`` (sorted descending): two subsets are
    rearrangements of each other exactly when these keys agree."""
    return tuple(sorted(composition_of_descents(d), reverse=True))


def is_mu_modal_desset(d: DescSet, mu: Composition) -> bool:
    """Whether some permutation whose every mu-block is co-unimodal
    (strictly decreasing then strictly increasing) has descent set ``d``.

    Equivalently: inside the interior of each mu-block the members of ``d``
    form a prefix run anchored at the block start; members at block
    boundaries are unconstrained.

    >>> is_mu_modal_desset(DescSet.of(8, [1, 3, 5]), (3, 1, 4))
    True
    >>> is_mu_modal_desset(DescSet.of(6, [2]), (6,))
    False
    """
    mu = composition(mu)
    if sum(mu) != d.n:
        raise ValueError(f"composition sums to {sum(mu)}, expected {d.n}")
    return is_mu_modal_mask(d.mask, d.n, mu)


def is_mu_modal_mask(mask: int, n: int, mu: Composition) -> bool:
    """Mask-level form of :func:`is_mu_modal_desset` (no validation)."""
    lo = 1
    for part in mu:
        hi = lo + part - 1
        # Interior descent positions of this block are lo..hi-1.
        block = (mask >> (lo - 1)) & ((1 << (hi - lo)) - 1)
        # A prefix run anchored at the block start is a mask of the
        # form 0...011...1.
        if block & (block + 1):
            return False
        lo = hi + 1
    return True


# ---------------------------------------------------------------------------
# Shuffles
# ---------------------------------------------------------------------------


def shuffle_words(u: Sequence[int], v: Sequence[int]) -> list[tuple[int, ...]]:
    """All interleavings of two words on disjoint letter sets.

    The result has exactly ``binomial(|u|+|v|, |u|)`` distinct words.

    >>> sorted(shuffle_words((1, 2), (3,)))
    [(1, 2, 3), (1, 3, 2), (3, 1, 2)]
    """
    u = tuple(u)
    v = tuple(v)
    if set(u) & set(v):
        raise ValueError("letter sets overlap")
    n = len(u) + len(v)
    out = []
    for positions in combinations(range(n), len(u)):
        word = [0] * n
        taken = set(positions)
        it_u = iter(u)
        it_v = iter(v)
        for i in range(n):
            word[i] = next(it_u) if i in taken else next(it_v)
        out.append(tuple(word))
    assert len(out) == comb(n, len(u))
    return out


def shuffles(
    a: Mapping[tuple[int, ...], int] | Iterable[tuple[int, ...]],
    b: Mapping[tuple[int, ...], int] | Iterable[tuple[int, ...]],
) -> dict[tuple[int, ...], int]:
    """Shuffle two (multi)sets of words on disjoint letter sets.

    Inputs may be plain iterables (multiplicity one each) or mappings
    word -> multiplicity; the result maps each interleaving to its total
    multiplicity.

    >>> shuffles({(1, 2): 2}, {(3,): 1})
    {(1, 2, 3): 2, (1, 3, 2): 2, (3, 1, 2): 2}
    """
    a_items = list(a.items()) if isinstance(a, Mapping) else [(w, 1) for w in a]
    b_items = list(b.items()) if isinstance(b, Mapping) else [(w, 1) for w in b]
    out: dict[tuple[int, ...], int] = {}
    for u, mu in a_items:
        for v, mv in b_items:
            weight = mu * mv
            for word in shuffle_words(u, v):
                out[word] = out.get(word, 0) + weight
    return dict(sorted(out.items()))
