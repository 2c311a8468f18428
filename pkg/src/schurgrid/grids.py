"""Geometric grid classes of permutations.

A grid matrix has entries in {-1, 0, +1}; row 1 is the TOP row.  The class
it defines at degree ``n`` consists of all patterns of ``n`` points drawn on
a picture with one increasing segment per ``+1`` cell and one decreasing
segment per ``-1`` cell.

Enumeration is exact: when the matrix admits a consistent orientation of
rows and columns (signs with ``row * col == entry`` on every nonzero cell),
every drawing can be normalized so that all points share one global integer
parameter, and the class is the image of all ``cells**n`` parameter words.
A matrix with no consistent orientation is refined by splitting every cell
into a 2x2 block (each segment cut at its midpoint), which always yields an
orientable matrix describing the same picture.

>>> sorted(enumerate_grid(parse_grid_matrix("+"), 3))
[(1, 2, 3)]
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .permutations import (
    Perm,
    cdes_count,
    des_set,
    inverse,
)

__all__ = [
    "GridMatrix",
    "parse_grid_matrix",
    "format_grid_matrix",
    "GridResourceError",
    "consistent_orientation",
    "refine_matrix",
    "enumerate_grid",
    "grid_budget",
    "complement_matrix",
    "rotate180_matrix",
    "reflect_matrix_horizontal",
    "reflect_matrix_vertical",
    "diagonal_reflect_matrix",
    "one_column_matrix",
    "stack_matrix",
    "star_product",
    "inverse_sign_vector",
    "parse_sign_vector",
    "format_sign_vector",
    "identity_matrix",
    "zigzag_matrix",
    "fig_matrix",
    "j_matrix",
    "k_matrix",
    "arc_matrices",
    "left_unimodal_matrix",
    "is_left_unimodal",
    "is_arc",
    "is_colayered",
    "one_column_member",
    "plus_member",
    "minus_member",
    "zigzag_member",
]

SignVector = tuple[int, ...]

_CHAR_TO_ENTRY = {"0": 0, "+": 1, "-": -1}
_ENTRY_TO_CHAR = {0: "0", 1: "+", -1: "-"}


@dataclass(frozen=True)
class GridMatrix:
    """Rectangular sign matrix; ``rows[0]`` is the top row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("matrix rows must have equal length")
            for e in row:
                if e not in (-1, 0, 1):
                    raise ValueError("entries must be -1, 0 or +1")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    def entry(self, i: int, j: int) -> int:
        """1-based access; row 1 is the top row."""
        return self.rows[i - 1][j - 1]

    def cells(self) -> list[tuple[int, int]]:
        """0-based (row, col) positions of the nonzero entries."""
        return [
            (i, j)
            for i, row in enumerate(self.rows)
            for j, e in enumerate(row)
            if e
        ]

    def serialize(self) -> str:
        return format_grid_matrix(self)


def parse_grid_matrix(text: str) -> GridMatrix:
    """Parse rows separated by ``/``, characters ``0``, ``+``, ``-``;
    rows are listed top to bottom.

    >>> parse_grid_matrix("0+/-0/+-").rows
    ((0, 1), (-1, 0), (1, -1))
    """
    rows = []
    for chunk in text.strip().split("/"):
        chunk = chunk.strip()
        try:
            rows.append(tuple(_CHAR_TO_ENTRY[ch] for ch in chunk))
        except KeyError as exc:
            raise ValueError(f"bad matrix character {exc.args[0]!r}") from None
    return GridMatrix(tuple(rows))


def format_grid_matrix(m: GridMatrix) -> str:
    """Inverse of :func:`parse_grid_matrix`.

    >>> format_grid_matrix(GridMatrix(((0, 1), (-1, 0), (1, -1))))
    '0+/-0/+-'
    """
    return "/".join("".join(_ENTRY_TO_CHAR[e] for e in row) for row in m.rows)


# ---------------------------------------------------------------------------
# Matrix symmetries
# ---------------------------------------------------------------------------


def complement_matrix(m: GridMatrix) -> GridMatrix:
    """Flip upside down and negate entries (complement of the class)."""
    return GridMatrix(tuple(tuple(-e for e in row) for row in reversed(m.rows)))


def rotate180_matrix(m: GridMatrix) -> GridMatrix:
    """Flip upside down and left-right (same entry signs)."""
    return GridMatrix(tuple(tuple(reversed(row)) for row in reversed(m.rows)))


def reflect_matrix_horizontal(m: GridMatrix) -> GridMatrix:
    """Flip left-right and negate entries (reverse of the class)."""
    return GridMatrix(tuple(tuple(-e for e in reversed(row)) for row in m.rows))


def reflect_matrix_vertical(m: GridMatrix) -> GridMatrix:
    """Flip upside down and negate entries (complement of the class)."""
    return complement_matrix(m)


def diagonal_reflect_matrix(m: GridMatrix) -> GridMatrix:
    """Reflect across the main diagonal (class of inverses): the new
    (a, b) entry is the old (rows+1-b, cols+1-a) entry.

    >>> format_grid_matrix(diagonal_reflect_matrix(parse_grid_matrix("+-/0+")))
    '+-/0+'
    """
    k, l = m.n_rows, m.n_cols
    return GridMatrix(
        tuple(
            tuple(m.entry(k + 1 - b, l + 1 - a) for b in range(1, k + 1))
            for a in range(1, l + 1)
        )
    )


# ---------------------------------------------------------------------------
# Sign vectors and one-column matrices
# ---------------------------------------------------------------------------


def parse_sign_vector(text: str) -> SignVector:
    """Parse ``+``/``-`` characters, read bottom cell to top cell.

    >>> parse_sign_vector("-+")
    (-1, 1)
    """
    out = []
    for ch in text.strip():
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ValueError(f"bad sign character {ch!r}")
    if not out:
        raise ValueError("sign vector must be nonempty")
    return tuple(out)


def format_sign_vector(v: SignVector) -> str:
    return "".join("+" if s > 0 else "-" for s in v)


def one_column_matrix(v: SignVector) -> GridMatrix:
    """Single-column matrix whose bottom-to-top cell signs are ``v``.

    >>> format_grid_matrix(one_column_matrix((-1, 1)))
    '+/-'
    """
    _check_signs(v)
    return GridMatrix(tuple((s,) for s in reversed(v)))


def _check_signs(v: Sequence[int]) -> None:
    if not v or any(s not in (-1, 1) for s in v):
        raise ValueError("sign vector entries must be +1/-1 and nonempty")


def inverse_sign_vector(v: SignVector) -> SignVector:
    """Reverse the order and negate each sign.

    >>> inverse_sign_vector((1, -1, -1))
    (1, 1, -1)
    """
    _check_signs(v)
    return tuple(-s for s in reversed(v))


def star_product(v: SignVector, w: SignVector) -> SignVector:
    """Concatenate one copy of ``w`` per entry of ``v`` (bottom to top),
    using ``w`` itself for a plus and its inverse for a minus.

    >>> star_product((-1, 1), (1, -1, -1))
    (1, 1, -1, 1, -1, -1)
    """
    _check_signs(v)
    _check_signs(w)
    out: list[int] = []
    winv = inverse_sign_vector(w)
    for s in v:
        out.extend(w if s > 0 else winv)
    return tuple(out)


def stack_matrix(v: SignVector, m: GridMatrix) -> GridMatrix:
    """Stack one copy of ``m`` per entry of ``v`` (bottom to top), using
    ``m`` for a plus and its complement for a minus.

    >>> format_grid_matrix(stack_matrix((-1, 1), GridMatrix(((1,),))))
    '+/-'
    """
    _check_signs(v)
    rows: list[tuple[int, ...]] = []
    comp = complement_matrix(m)
    for s in reversed(v):
        rows.extend((m if s > 0 else comp).rows)
    return GridMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# Named matrices
# ---------------------------------------------------------------------------


def identity_matrix(k: int) -> GridMatrix:
    """k-by-k matrix with plus cells on the top-left to bottom-right
    diagonal; its class is the colayered family."""
    if k < 1:
        raise ValueError("size must be >= 1")
    return GridMatrix(
        tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    )


def zigzag_matrix(k: int) -> GridMatrix:
    """2k-by-2 matrix whose rows from the top alternate ``+0`` and ``0+``;
    k = 1 gives the cyclic class."""
    if k < 1:
        raise ValueError("size must be >= 1")
    rows = []
    for i in range(2 * k):
        rows.append((1, 0) if i % 2 == 0 else (0, 1))
    return GridMatrix(tuple(rows))


def fig_matrix() -> GridMatrix:
    """Running 3x2 example matrix ``0+/-0/+-``."""
    return parse_grid_matrix("0+/-0/+-")


def j_matrix() -> GridMatrix:
    """4x2 plus-cell matrix ``0+/+0/+0/0+``."""
    return parse_grid_matrix("0+/+0/+0/0+")


def k_matrix() -> GridMatrix:
    """4x2 matrix ``+0/0+/-0/0-``."""
    return parse_grid_matrix("+0/0+/-0/0-")


def arc_matrices() -> tuple[GridMatrix, GridMatrix]:
    """The two 4x2 matrices whose classes union to the arc family."""
    return (
        parse_grid_matrix("+0/-0/0-/0+"),
        parse_grid_matrix("0-/0+/+0/-0"),
    )


def left_unimodal_matrix() -> GridMatrix:
    """One-column matrix (decreasing below, increasing above)."""
    return one_column_matrix((-1, 1))


# ---------------------------------------------------------------------------
# Orientation and refinement
# ---------------------------------------------------------------------------


def consistent_orientation(
    m: GridMatrix,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Signs for rows and columns with ``row*col == entry`` on every
    nonzero cell, or None when impossible.  Rows are listed top to bottom;
    untouched rows/columns get ``+1``.

    >>> consistent_orientation(parse_grid_matrix("+-/0+"))
    ((1, -1), (1, -1))
    >>> consistent_orientation(parse_grid_matrix("++/+-")) is None
    True
    """
    nr, nc = m.n_rows, m.n_cols
    row_sign = [0] * nr
    col_sign = [0] * nc
    row_adj: list[list[tuple[int, int]]] = [[] for _ in range(nr)]
    col_adj: list[list[tuple[int, int]]] = [[] for _ in range(nc)]
    for i, j in m.cells():
        e = m.rows[i][j]
        row_adj[i].append((j, e))
        col_adj[j].append((i, e))
    for start in range(nr):
        if row_sign[start] or not row_adj[start]:
            continue
        row_sign[start] = 1
        stack: list[tuple[str, int]] = [("row", start)]
        while stack:
            kind, node = stack.pop()
            if kind == "row":
                for j, e in row_adj[node]:
                    want = e * row_sign[node]
                    if col_sign[j] == 0:
                        col_sign[j] = want
                        stack.append(("col", j))
                    elif col_sign[j] != want:
                        return None
            else:
                for i, e in col_adj[node]:
                    want = e * col_sign[node]
                    if row_sign[i] == 0:
                        row_sign[i] = want
                        stack.append(("row", i))
                    elif row_sign[i] != want:
                        return None
    return (
        tuple(s if s else 1 for s in row_sign),
        tuple(s if s else 1 for s in col_sign),
    )


def refine_matrix(m: GridMatrix) -> GridMatrix:
    """Split every cell into a 2x2 block, cutting each segment at its
    midpoint; the result is always consistently orientable and draws the
    same pictures.

    >>> format_grid_matrix(refine_matrix(GridMatrix(((1,),))))
    '0+/+0'
    """
    nr, nc = m.n_rows, m.n_cols
    out = [[0] * (2 * nc) for _ in range(2 * nr)]
    for i, j in m.cells():
        e = m.rows[i][j]
        if e > 0:
            out[2 * i + 1][2 * j] = 1
            out[2 * i][2 * j + 1] = 1
        else:
            out[2 * i][2 * j] = -1
            out[2 * i + 1][2 * j + 1] = -1
    return GridMatrix(tuple(tuple(row) for row in out))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


class GridResourceError(RuntimeError):
    """Raised when an enumeration would exceed the word budget."""


def grid_budget() -> int:
    """Maximum number of parameter words enumerated without an override
    (override with the SCHURGRID_GRID_BUDGET environment variable)."""
    env = os.environ.get("SCHURGRID_GRID_BUDGET")
    return int(env) if env else 100_000_000


_CHUNK = 1 << 18

_grid_cache: dict[tuple[GridMatrix, int], frozenset[Perm]] = {}


def enumerate_grid(
    m: GridMatrix, n: int, override_budget: bool = False
) -> frozenset[Perm]:
    """All degree-``n`` patterns drawable on the matrix picture.

    >>> sorted(enumerate_grid(zigzag_matrix(1), 3))
    [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    key = (m, n)
    cached = _grid_cache.get(key)
    if cached is not None:
        return cached
    oriented = consistent_orientation(m)
    work = m
    if oriented is None:
        work = refine_matrix(m)
        oriented = consistent_orientation(work)
        assert oriented is not None, "refined matrix must be orientable"
    out = _enumerate_oriented(work, oriented, n, override_budget)
    _grid_cache[key] = out
    return out


def _enumerate_oriented(
    m: GridMatrix,
    oriented: tuple[tuple[int, ...], tuple[int, ...]],
    n: int,
    override_budget: bool,
) -> frozenset[Perm]:
    cells = m.cells()
    s = len(cells)
    if n == 0:
        return frozenset({()})
    if s == 0:
        return frozenset()
    total = s**n
    if total > grid_budget() and not override_budget:
        raise GridResourceError(
            f"enumeration needs {total} words (budget {grid_budget()}); "
            "pass override or raise SCHURGRID_GRID_BUDGET"
        )
    row_sign, col_sign = oriented
    nr = m.n_rows
    band = n + 1
    # Point with parameter t in cell (i, j) sits at
    #   X = bx + ax*t,  Y = by + ay*t.
    ax = np.empty(s, dtype=np.int64)
    bx = np.empty(s, dtype=np.int64)
    ay = np.empty(s, dtype=np.int64)
    by = np.empty(s, dtype=np.int64)
    for idx, (i, j) in enumerate(cells):
        if col_sign[j] > 0:
            ax[idx], bx[idx] = 1, j * band
        else:
            ax[idx], bx[idx] = -1, (j + 1) * band
        vertical = nr - 1 - i
        if row_sign[i] > 0:
            ay[idx], by[idx] = 1, vertical * band
        else:
            ay[idx], by[idx] = -1, (vertical + 1) * band
    t = np.arange(1, n + 1, dtype=np.int64)
    powers = np.array([n**k for k in range(n)], dtype=np.int64)
    codes: set[int] = set()
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = np.empty((len(idx), n), dtype=np.int64)
        rem = idx
        for pos in range(n - 1, -1, -1):
            digits[:, pos] = rem % s
            rem = rem // s
        x = bx[digits] + ax[digits] * t
        y = by[digits] + ay[digits] * t
        order = np.argsort(x, axis=1, kind="stable")
        y_sorted = np.take_along_axis(y, order, axis=1)
        ranks = np.argsort(
            np.argsort(y_sorted, axis=1, kind="stable"), axis=1, kind="stable"
        )
        codes.update(np.unique(ranks @ powers).tolist())
    out = set()
    for code in codes:
        word = []
        rem = code
        for _ in range(n):
            word.append(rem % n + 1)
            rem //= n
        out.add(tuple(word))
    return frozenset(out)


# ---------------------------------------------------------------------------
# Named membership predicates
# ---------------------------------------------------------------------------


def is_left_unimodal(p: Perm) -> bool:
    """Every prefix of the word is an interval of values.

    >>> is_left_unimodal((3, 2, 4, 1, 5))
    True
    >>> is_left_unimodal((1, 3, 2))
    False
    """
    lo = hi = None
    for k, v in enumerate(p, start=1):
        lo = v if lo is None else min(lo, v)
        hi = v if hi is None else max(hi, v)
        if hi - lo + 1 != k:
            return False
    return True


def is_arc(p: Perm) -> bool:
    """Every prefix of the word is a cyclic interval of values modulo n.

    >>> is_arc((2, 1, 3, 4))
    True
    >>> is_arc((2, 4, 1, 3))
    False
    """
    n = len(p)
    seen = [False] * (n + 1)
    for k, v in enumerate(p, start=1):
        seen[v] = True
        if k in (1, n):
            continue
        runs = 0
        for u in range(1, n + 1):
            succ = u % n + 1
            if seen[u] and not seen[succ]:
                runs += 1
        if runs > 1:
            return False
    return True


def is_colayered(p: Perm, k: int) -> bool:
    """At most ``k`` increasing blocks of consecutive positions, with every
    value in a block larger than every value in later blocks.

    >>> is_colayered((4, 5, 1, 2, 3), 2)
    True
    >>> is_colayered((4, 5, 1, 2, 3), 1)
    False
    """
    if k < 1:
        raise ValueError("block bound must be >= 1")
    n = len(p)
    descents = des_set(p)
    if len(descents) > k - 1:
        return False
    prefix_min = []
    running = None
    for v in p:
        running = v if running is None else min(running, v)
        prefix_min.append(running)
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = max(p[i], suffix_max[i + 1])
    return all(prefix_min[i - 1] > suffix_max[i] for i in descents)


def one_column_member(p: Perm, v: SignVector) -> bool:
    """Whether the word lies in the one-column class with bottom-to-top
    signs ``v``: the values split into consecutive intervals, one per sign,
    each placed increasingly (plus) or decreasingly (minus).

    >>> one_column_member((3, 2, 4, 1, 5), (-1, 1))
    True
    >>> one_column_member((1, 3, 2), (1,))
    False
    """
    _check_signs(v)
    n = len(p)
    if n == 0:
        return True
    q = inverse(p)
    k = len(v)
    # reachable[m] = the first m values can be assigned to intervals 1..m+1
    reachable = [False] * k
    reachable[0] = True
    for i in range(1, n):
        ascent = q[i - 1] < q[i]
        stay = [
            reachable[m] and ((v[m] > 0) == ascent) for m in range(k)
        ]
        lowest = next((m for m in range(k) if reachable[m]), None)
        nxt = [False] * k
        for m in range(k):
            if stay[m]:
                nxt[m] = True
        if lowest is not None:
            for m in range(lowest + 1, k):
                nxt[m] = True
        reachable = nxt
        if not any(reachable):
            return False
    return any(reachable)


def plus_member(p: Perm, k: int) -> bool:
    """Membership in the all-plus one-column class of ``k`` cells: the
    inverse has at most ``k-1`` descents."""
    if k < 1:
        raise ValueError("cell count must be >= 1")
    return len(des_set(inverse(p))) <= k - 1


def minus_member(p: Perm, k: int) -> bool:
    """Membership in the all-minus one-column class of ``k`` cells: the
    inverse has at most ``k-1`` ascents."""
    if k < 1:
        raise ValueError("cell count must be >= 1")
    n = len(p)
    return (n - 1) - len(des_set(inverse(p))) <= k - 1


def zigzag_member(p: Perm, k: int) -> bool:
    """Membership in the zigzag class of parameter ``k``: the inverse has
    at most ``k`` cyclic descents.

    >>> [zigzag_member((2, 3, 1), k) for k in (1, 2)]
    [True, True]
    """
    if k < 1:
        raise ValueError("parameter must be >= 1")
    return cdes_count(inverse(p)) <= k


def members_of(
    words: Iterable[Perm], predicate, *args
) -> frozenset[Perm]:
    """Filter helper used by the family builders."""
    return frozenset(w for w in words if predicate(w, *args))
