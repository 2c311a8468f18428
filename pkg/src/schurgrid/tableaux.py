"""Partitions, skew shapes, standard Young tableaux, RSK, and two
descent-preserving bijections used by the verification harness.

Shapes are stored in English notation: rows are numbered from the top
starting at 1, and a skew shape is an (outer, inner) pair of partitions
with ``inner`` contained in ``outer`` componentwise.  Three shape builders
cover everything the package needs:

- :func:`ribbon_shape` -- the connected ribbon encoding a descent set;
- :func:`strip_chain_shape` -- corner-touching horizontal strips whose top
  right cell is a single box;
- :func:`disconnected_shape` -- two straight shapes touching at one corner.

>>> ribbon_shape(9, DescSet.of(9, [1, 3, 5, 6])).row_sizes()
(3, 1, 2, 2, 1)
>>> strip_chain_shape(5, DescSet.of(5, [1]))
SkewShape(outer=(5, 4, 1), inner=(4, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .permutations import (
    DescSet,
    Perm,
    compose,
    cycle_perm,
    des_mask,
    inverse,
    perm_from_word,
)

__all__ = [
    "Partition",
    "partitions",
    "conjugate_partition",
    "is_partition",
    "SkewShape",
    "straight_shape",
    "ribbon_shape",
    "strip_chain_shape",
    "disconnected_shape",
    "StandardTableau",
    "parse_tableau",
    "enumerate_syt",
    "count_syt",
    "syt_des",
    "rsk",
    "insertion_tableau",
    "knuth_class_words",
    "shuffle_recording_map",
    "rotation_bijection",
]

# Weakly decreasing positive parts; () is the unique partition of 0.
Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    ) and all(p >= 1 for p in parts)


def _check_partition(parts: Sequence[int]) -> Partition:
    mu = tuple(int(p) for p in parts)
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu!r}")
    return mu


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(gen(n, n))


def conjugate_partition(mu: Sequence[int]) -> Partition:
    """Transpose of the diagram.

    >>> conjugate_partition((3, 2))
    (2, 2, 1)
    """
    mu = _check_partition(mu)
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= c) for c in range(1, mu[0] + 1))


@dataclass(frozen=True, order=True)
class SkewShape:
    """An (outer, inner) pair of partitions with inner inside outer.

    Normal form: no trailing zeros in either partition and no leading rows
    with ``outer == inner`` (fully empty top rows are meaningless here).
    """

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        _check_partition(self.outer)
        _check_partition(self.inner)
        if len(self.inner) > len(self.outer):
            raise ValueError("inner partition has more rows than outer")
        for r, inner_len in enumerate(self.inner):
            if inner_len > self.outer[r]:
                raise ValueError(
                    f"inner row {r + 1} is longer than the outer row"
                )

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    def inner_len(self, row: int) -> int:
        """Length of the inner partition at 1-based ``row`` (0 when absent)."""
        return self.inner[row - 1] if row - 1 < len(self.inner) else 0

    def row_sizes(self) -> tuple[int, ...]:
        return tuple(
            self.outer[r] - self.inner_len(r + 1) for r in range(self.n_rows)
        )

    def size(self) -> int:
        return sum(self.row_sizes())

    def cells(self) -> tuple[tuple[int, int], ...]:
        """All (row, col) cells, both 1-based, row-major order."""
        out = []
        for r in range(1, self.n_rows + 1):
            for c in range(self.inner_len(r) + 1, self.outer[r - 1] + 1):
                out.append((r, c))
        return tuple(out)

    def contains(self, row: int, col: int) -> bool:
        return (
            1 <= row <= self.n_rows
            and self.inner_len(row) < col <= self.outer[row - 1]
        )

    def is_straight(self) -> bool:
        return not self.inner


def straight_shape(mu: Sequence[int]) -> SkewShape:
    """The skew shape with empty inner partition."""
    return SkewShape(_check_partition(mu), ())


def ribbon_shape(n: int, j: DescSet) -> SkewShape:
    """The connected ribbon with ``n`` cells where cell ``i+1`` sits above
    cell ``i`` exactly when ``i`` is a member of ``j`` (else to its right),
    counting cells from the bottom-left end.

    >>> ribbon_shape(4, DescSet.of(4, [1, 2, 3]))
    SkewShape(outer=(1, 1, 1, 1), inner=())
    """
    if n < 1:
        raise ValueError("ribbon needs n >= 1")
    if j.n != n:
        raise ValueError(f"descent set has ambient degree {j.n}, expected {n}")
    # Walk the ribbon in bottom-up row coordinates.
    row_b, col = 0, 0
    cells = [(row_b, col)]
    for i in range(1, n):
        if i in j:
            row_b += 1
        else:
            col += 1
        cells.append((row_b, col))
    top = max(r for r, _ in cells)
    outer = []
    inner = []
    for r_top in range(top + 1):
        cols = [c for r, c in cells if top - r == r_top]
        outer.append(max(cols) + 1)
        inner.append(min(cols))
    while inner and inner[-1] == 0:
        inner.pop()
    return SkewShape(tuple(outer), tuple(inner))


def strip_chain_shape(n: int, j: DescSet) -> SkewShape:
    """Corner-touching horizontal strips, left to right, of sizes
    ``j_1, j_2-j_1, ..., n-1-j_t, 1`` for ``j = {j_1 < ... < j_t}``; the
    rightmost strip is the single top cell.

    Members of ``j`` must lie in ``[n-2]``.

    >>> strip_chain_shape(5, DescSet.of(5, []))
    SkewShape(outer=(5, 4), inner=(4,))
    """
    if n < 1:
        raise ValueError("strip chain needs n >= 1")
    if j.n != n:
        raise ValueError(f"descent set has ambient degree {j.n}, expected {n}")
    if any(i > n - 2 for i in j.members):
        raise ValueError(f"members {j.braces()} not inside [{n - 2}]")
    cuts = list(j.members)
    sizes = []
    prev = 0
    for cut in cuts:
        sizes.append(cut - prev)
        prev = cut
    if n >= 2:
        sizes.append(n - 1 - prev)
    sizes.append(1)
    # Strip i spans columns start_i .. start_i + size_i - 1; consecutive
    # strips touch at one corner, and strips are stacked bottom-up, so the
    # top row is the rightmost (single-cell) strip.
    outer = []
    inner = []
    start = 1
    for size in sizes:
        outer.append(start + size - 1)
        inner.append(start - 1)
        start += size
    outer.reverse()
    inner.reverse()
    while inner and inner[-1] == 0:
        inner.pop()
    return SkewShape(tuple(outer), tuple(inner))


def disconnected_shape(lower_left: Sequence[int], upper_right: Sequence[int]) -> SkewShape:
    """Two straight shapes placed so the upper-right corner of the first
    touches the lower-left corner of the second.

    >>> disconnected_shape((2, 1), (3, 2))
    SkewShape(outer=(5, 4, 2, 1), inner=(2, 2))
    """
    mu = _check_partition(lower_left)
    nu = _check_partition(upper_right)
    if not mu:
        return straight_shape(nu)
    if not nu:
        return straight_shape(mu)
    shift = mu[0]
    outer = tuple(part + shift for part in nu) + mu
    inner = (shift,) * len(nu)
    return SkewShape(outer, inner)


# ---------------------------------------------------------------------------
# Standard tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class StandardTableau:
    """A bijective filling of a skew shape by ``1..n`` increasing along
    rows (left to right) and down columns (top to bottom)."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        sizes = self.shape.row_sizes()
        if tuple(len(r) for r in self.rows) != sizes:
            raise ValueError("row lengths do not match the shape")
        n = self.shape.size()
        entries = [e for row in self.rows for e in row]
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries are not exactly 1..{n}")
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must strictly increase")
        pos = self.position_of_entries()
        for value, (r, c) in pos.items():
            if self.shape.contains(r - 1, c):
                above = self.entry_at(r - 1, c)
                if above >= value:
                    raise ValueError("columns must strictly increase")

    @property
    def size(self) -> int:
        return self.shape.size()

    def entry_at(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - self.shape.inner_len(row) - 1]

    def position_of_entries(self) -> dict[int, tuple[int, int]]:
        out = {}
        for r, row in enumerate(self.rows, start=1):
            offset = self.shape.inner_len(r)
            for i, value in enumerate(row, start=1):
                out[value] = (r, offset + i)
        return out

    def row_of(self, value: int) -> int:
        for r, row in enumerate(self.rows, start=1):
            if value in row:
                return r
        raise KeyError(value)

    def reading_word(self) -> tuple[int, ...]:
        """Entries row by row, top to bottom, left to right."""
        return tuple(e for row in self.rows for e in row)

    def text(self) -> str:
        """Rows top to bottom; inner cells printed as a centered dot;
        entries space-separated.

        >>> print(StandardTableau(strip_chain_shape(3, DescSet.of(3, [])),
        ...                       ((3,), (1, 2))).text())
        · · 3
        1 2
        """
        lines = []
        for r, row in enumerate(self.rows, start=1):
            cells = ["·"] * self.shape.inner_len(r) + [str(e) for e in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def parse_tableau(text: str) -> StandardTableau:
    """Parse the textual tableau form produced by :meth:`StandardTableau.text`."""
    rows: list[list[int]] = []
    inner: list[int] = []
    for line in text.strip().splitlines():
        parts = line.split()
        pad = 0
        while pad < len(parts) and parts[pad] in {"·", "."}:
            pad += 1
        entries = [int(p) for p in parts[pad:]]
        if any(p in {"·", "."} for p in parts[pad:]):
            raise ValueError("inner-cell markers must be leading")
        rows.append(entries)
        inner.append(pad)
    outer = tuple(inner[i] + len(rows[i]) for i in range(len(rows)))
    inner_t = list(inner)
    while inner_t and inner_t[-1] == 0:
        inner_t.pop()
    shape = SkewShape(outer, tuple(inner_t))
    return StandardTableau(shape, tuple(tuple(r) for r in rows))


def enumerate_syt(shape: SkewShape) -> list[StandardTableau]:
    """All standard tableaux of a skew shape, sorted lexicographically by
    row-reading word (deterministic canonical order).

    >>> len(enumerate_syt(straight_shape((3, 2))))
    5
    """
    sizes = shape.row_sizes()
    n = shape.size()
    inner = [shape.inner_len(r + 1) for r in range(shape.n_rows)]
    outer = list(shape.outer)
    # fill[r] = number of placed entries in row r (from the left edge of
    # the skew row).
    fill = [0] * shape.n_rows
    rows: list[list[int]] = [[] for _ in range(shape.n_rows)]
    out: list[StandardTableau] = []

    def cell_is_ready(r: int) -> bool:
        if fill[r] >= sizes[r]:
            return False
        col = inner[r] + fill[r] + 1
        if r == 0:
            return True
        # The cell directly above (if inside the shape) must be filled.
        if inner[r - 1] < col <= outer[r - 1]:
            return fill[r - 1] >= col - inner[r - 1]
        return True

    def place(value: int) -> None:
        if value > n:
            out.append(
                StandardTableau(shape, tuple(tuple(r) for r in rows))
            )
            return
        for r in range(shape.n_rows):
            if cell_is_ready(r):
                rows[r].append(value)
                fill[r] += 1
                place(value + 1)
                fill[r] -= 1
                rows[r].pop()

    place(1)
    out.sort(key=lambda t: t.reading_word())
    return out


def count_syt(shape: SkewShape) -> int:
    return len(enumerate_syt(shape))


def syt_des(t: StandardTableau) -> DescSet:
    """Entries ``i`` whose successor ``i+1`` sits in a strictly lower row.

    >>> syt_des(StandardTableau(straight_shape((2, 1)), ((1, 3), (2,)))).members
    (1,)
    """
    n = t.size
    row = {}
    for r, entries in enumerate(t.rows, start=1):
        for e in entries:
            row[e] = r
    return DescSet.of(n, (i for i in range(1, n) if row[i + 1] > row[i]))


# ---------------------------------------------------------------------------
# RSK and Knuth classes
# ---------------------------------------------------------------------------


def rsk(p: Perm) -> tuple[StandardTableau, StandardTableau]:
    """Row-insertion correspondence.  Returns the (insertion, recording)
    pair; the recording tableau has the descent set of ``p`` and the
    insertion tableau that of its inverse.

    >>> ins, rec = rsk((2, 3, 1))
    >>> ins.rows, rec.rows
    (((1, 3), (2,)), ((1, 2), (3,)))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(p, start=1):
        v = value
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([v])
                q_rows.append([step])
                break
            row = p_rows[r]
            # Find the leftmost entry strictly greater than v.
            idx = _bisect_gt(row, v)
            if idx == len(row):
                row.append(v)
                q_rows[r].append(step)
                break
            row[idx], v = v, row[idx]
            r += 1
    shape = straight_shape(tuple(len(r) for r in p_rows))
    return (
        StandardTableau(shape, tuple(tuple(r) for r in p_rows)),
        StandardTableau(shape, tuple(tuple(r) for r in q_rows)),
    )


def _bisect_gt(row: list[int], v: int) -> int:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] <= v:
            lo = mid + 1
        else:
            hi = mid
    return lo


def insertion_tableau(p: Perm) -> StandardTableau:
    return rsk(p)[0]


def knuth_class_words(t: StandardTableau) -> list[Perm]:
    """All permutations whose insertion tableau equals ``t``, built by
    pairing ``t`` with every recording tableau of the same shape (the
    inverse RSK map), in lexicographic order.

    >>> sorted(knuth_class_words(StandardTableau(straight_shape((2, 2)),
    ...                                          ((1, 3), (2, 4)))))
    [(2, 1, 4, 3), (2, 4, 1, 3)]
    """
    if not t.shape.is_straight():
        raise ValueError("insertion tableaux have straight shape")
    out = []
    for rec in enumerate_syt(t.shape):
        out.append(_inverse_rsk(t, rec))
    out.sort()
    return out


def _inverse_rsk(ins: StandardTableau, rec: StandardTableau) -> Perm:
    """Reverse row insertion: peel entries of ``rec`` from n down to 1."""
    p_rows = [list(r) for r in ins.rows]
    pos = rec.position_of_entries()
    n = ins.size
    word = [0] * n
    for step in range(n, 0, -1):
        r, c = pos[step]
        v = p_rows[r - 1].pop()
        assert c == len(p_rows[r - 1]) + 1
        for upper in range(r - 2, -1, -1):
            row = p_rows[upper]
            idx = _bisect_gt(row, v) - 1
            row[idx], v = v, row[idx]
        word[step - 1] = v
        if not p_rows[-1]:
            p_rows.pop()
    return perm_from_word(word)


# ---------------------------------------------------------------------------
# Descent-preserving bijections
# ---------------------------------------------------------------------------


def shuffle_recording_map(p: Perm, k: int) -> StandardTableau:
    """Skew recording tableau of the unique decomposition of ``p`` as an
    interleaving of its letters ``1..k`` with its letters ``k+1..n``.

    The letters ``<= k`` form a word ``sigma`` and the rest standardize to
    ``tau``; the result relabels the recording tableau of ``sigma`` by the
    positions of small letters and that of ``tau`` by the positions of
    large letters, placed on the two-component shape.  The descent set of
    the output equals the descent set of ``p``.

    >>> t = shuffle_recording_map(perm_from_word((1, 6, 7, 8, 3, 2, 4, 5)), 3)
    >>> print(t.text())
    · · 2 3 4
    · · 7 8
    1 5
    6
    """
    n = len(p)
    if not 0 <= k <= n:
        raise ValueError(f"split point {k} outside 0..{n}")
    small_positions = [i + 1 for i, v in enumerate(p) if v <= k]
    large_positions = [i + 1 for i, v in enumerate(p) if v > k]
    sigma = tuple(v for v in p if v <= k)
    tau = tuple(v - k for v in p if v > k)
    rec_parts: list[tuple[StandardTableau, list[int]]] = []
    if sigma:
        rec_parts.append((rsk(sigma)[1], small_positions))
    if tau:
        rec_parts.append((rsk(tau)[1], large_positions))
    if not rec_parts:
        return StandardTableau(SkewShape((), ()), ())
    if len(rec_parts) == 1:
        rec, positions = rec_parts[0]
        rows = tuple(
            tuple(positions[e - 1] for e in row) for row in rec.rows
        )
        return StandardTableau(rec.shape, rows)
    (rec_s, pos_s), (rec_t, pos_t) = rec_parts
    shape = disconnected_shape(rec_s.shape.outer, rec_t.shape.outer)
    upper = tuple(tuple(pos_t[e - 1] for e in row) for row in rec_t.rows)
    lower = tuple(tuple(pos_s[e - 1] for e in row) for row in rec_s.rows)
    return StandardTableau(shape, upper + lower)


def rotation_bijection(p: Perm, j: DescSet) -> StandardTableau:
    """Descent-preserving image of ``p`` on the strip chain shape.

    ``p`` must factor as ``sigma`` composed with an inverse power of the
    n-cycle, where ``sigma`` fixes ``n`` and the descent set of its inverse
    is contained in ``j``.  The tableau is built by filling the strip chain
    left to right with the inverse word of ``sigma``, adding the rotation
    amount to every entry modulo ``n`` (values stay in ``1..n``), and
    re-sorting rows; its top-right entry is the position of ``n`` in ``p``.

    >>> t = rotation_bijection(perm_from_word((3, 1, 4, 5, 2)), DescSet.of(5, [1]))
    >>> print(t.text())
    · · · · 4
    · 1 3 5
    2
    """
    n = len(p)
    if n < 1:
        raise ValueError("degree must be >= 1")
    if j.n != n or any(i > n - 2 for i in j.members):
        raise ValueError("strip chain index must satisfy members <= n-2")
    k = inverse(p)[n - 1] % n
    sigma = compose(p, _cycle_power(n, k))
    if sigma[n - 1] != n:
        raise ValueError("decomposition failed to fix the last letter")
    sigma_inv = inverse(sigma)
    if des_mask(sigma_inv) & ~j.mask:
        raise ValueError(
            "permutation does not decompose over the given strip chain index"
        )
    shape = strip_chain_shape(n, j)
    # Fill cells left to right (one cell per column) with the inverse word,
    # then rotate entries and restore increasing rows.
    column_entry = {
        col: (sigma_inv[col - 1] - 1 + k) % n + 1
        for col in range(1, n + 1)
    }
    rows = []
    for r in range(1, shape.n_rows + 1):
        lo = shape.inner_len(r) + 1
        hi = shape.outer[r - 1]
        rows.append(tuple(sorted(column_entry[c] for c in range(lo, hi + 1))))
    return StandardTableau(shape, tuple(rows))


@lru_cache(maxsize=None)
def _cycle_power(n: int, k: int) -> Perm:
    c = cycle_perm(n)
    out = tuple(range(1, n + 1))
    for _ in range(k % n):
        out = compose(c, out)
    return out
