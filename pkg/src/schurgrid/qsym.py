"""Exact arithmetic in the fundamental quasisymmetric basis and the Schur
basis.

A degree-``n`` quasisymmetric function is a dense integer vector indexed by
subsets of ``[n-1]`` (bitmask order); a symmetric function is a map from
partitions of ``n`` to integers.  The bridge between the two worlds is the
descent-count table ``d[shape][descent-set]`` = number of standard tableaux
of the shape with that descent set: a quasisymmetric vector is symmetric
exactly when the linear system ``q = d . c`` is solvable, and then ``c`` is
its Schur expansion.

>>> schur_expand(QSym.unit(3) + QSym.single(3, DescSet.of(3, [1]))
...              + QSym.single(3, DescSet.of(3, [2]))).serialize()
's[3] + s[2,1]'
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

from .permutations import (
    Composition,
    DescSet,
    Perm,
    des_mask,
    shuffle_words,
    sorted_composition_key,
)
from .tableaux import (
    Partition,
    SkewShape,
    enumerate_syt,
    partitions,
    straight_shape,
    syt_des,
)

__all__ = [
    "QSym",
    "qsym_of",
    "qsym_mul",
    "descent_class_representative",
    "SchurExpansion",
    "NotSymmetric",
    "NonIntegralExpansionError",
    "schur_expand",
    "is_schur_positive",
    "schur_f_vector",
    "skew_schur_f_vector",
    "pieri_up",
    "pieri_down",
    "DescentCountTable",
    "descent_count_table",
    "cache_dir",
    "monomial_coefficients",
    "is_symmetric_by_monomials",
]


def _width(n: int) -> int:
    return 1 << max(n - 1, 0)


@dataclass(frozen=True)
class QSym:
    """Integer vector over the fundamental basis of degree ``n``.

    ``coeffs[mask]`` is the coefficient of the basis element indexed by the
    subset of ``[n-1]`` encoded by ``mask``.
    """

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("degree must be >= 0")
        if len(self.coeffs) != _width(self.n):
            raise ValueError(
                f"expected {_width(self.n)} coefficients, got {len(self.coeffs)}"
            )

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "QSym":
        return cls(n, (0,) * _width(n))

    @classmethod
    def unit(cls, n: int) -> "QSym":
        """The basis element of the empty descent set."""
        return cls.single(n, DescSet(n, 0))

    @classmethod
    def single(cls, n: int, d: DescSet, coeff: int = 1) -> "QSym":
        if d.n != n:
            raise ValueError("descent set degree mismatch")
        v = [0] * _width(n)
        v[d.mask] = coeff
        return cls(n, tuple(v))

    @classmethod
    def from_mask_dict(cls, n: int, data: Mapping[int, int]) -> "QSym":
        v = [0] * _width(n)
        for mask, c in data.items():
            v[mask] += c
        return cls(n, tuple(v))

    # -- ring-ish operations -----------------------------------------------
    def _require_same_degree(self, other: "QSym") -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "QSym") -> "QSym":
        self._require_same_degree(other)
        return QSym(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSym") -> "QSym":
        self._require_same_degree(other)
        return QSym(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSym":
        return QSym(self.n, tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> "QSym":
        return QSym(self.n, tuple(k * a for a in self.coeffs))

    def divide_exact(self, k: int) -> "QSym":
        if any(a % k for a in self.coeffs):
            raise ValueError(f"vector is not divisible by {k}")
        return QSym(self.n, tuple(a // k for a in self.coeffs))

    def coeff(self, d: DescSet) -> int:
        if d.n != self.n:
            raise ValueError("descent set degree mismatch")
        return self.coeffs[d.mask]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[DescSet]:
        return [DescSet(self.n, m) for m, c in enumerate(self.coeffs) if c]

    def reflect(self) -> "QSym":
        """Apply the index reflection sending each subset D to n - D."""
        v = [0] * len(self.coeffs)
        for mask, c in enumerate(self.coeffs):
            if c:
                v[DescSet(self.n, mask).reflect().mask] += c
        return QSym(self.n, tuple(v))

    def serialize(self) -> str:
        """Canonical text, e.g. ``n=3; F{} + 2*F{1} + F{1,2}``."""
        terms = []
        for mask, c in enumerate(self.coeffs):
            if not c:
                continue
            braces = DescSet(self.n, mask).braces()
            if c == 1:
                terms.append(f"F{braces}")
            elif c == -1:
                terms.append(f"-F{braces}")
            else:
                terms.append(f"{c}*F{braces}")
        body = " + ".join(terms) if terms else "0"
        return f"n={self.n}; {body}"

    def evaluate_monomials(self, n_vars: int) -> dict[tuple[int, ...], int]:
        """Expansion into monomials in ``x_1..x_{n_vars}``: maps exponent
        vectors (length ``n_vars``) to integer coefficients."""
        if n_vars < 0:
            raise ValueError("number of variables must be >= 0")
        out: dict[tuple[int, ...], int] = {}
        for mask, c in enumerate(self.coeffs):
            if not c:
                continue
            for expo in _fundamental_monomials(self.n, mask, n_vars):
                out[expo] = out.get(expo, 0) + c
        return {e: c for e, c in sorted(out.items()) if c}


@lru_cache(maxsize=4096)
def _fundamental_monomials(
    n: int, mask: int, n_vars: int
) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the monomials of one fundamental basis element:
    weakly increasing maps [n] -> [n_vars], strict where the mask is set."""
    out: list[tuple[int, ...]] = []
    expo = [0] * n_vars

    def walk(pos: int, var: int) -> None:
        if pos == n:
            out.append(tuple(expo))
            return
        strict_next = bool(mask >> pos & 1) if pos < n - 1 else False
        for v in range(var, n_vars + 1):
            expo[v - 1] += 1
            walk(pos + 1, v + 1 if strict_next else v)
            expo[v - 1] -= 1

    walk(0, 1)
    return tuple(out)


def qsym_of(
    elems: Union[Mapping[Perm, int], Iterable[Perm]],
    n: int | None = None,
) -> QSym:
    """Descent generating function of a (multi)set of permutations.

    Accepts a mapping word -> multiplicity or a plain iterable; ``n`` is
    required only when the collection is empty.

    >>> qsym_of([(1, 2, 3)]).serialize()
    'n=3; F{}'
    """
    items = (
        list(elems.items())
        if isinstance(elems, Mapping)
        else [(w, 1) for w in elems]
    )
    if not items:
        if n is None:
            raise ValueError("empty collection needs an explicit degree")
        return QSym.zero(n)
    degree = len(items[0][0])
    if n is not None and n != degree:
        raise ValueError(f"degree mismatch: elements have degree {degree}")
    v = [0] * _width(degree)
    for word, mult in items:
        if len(word) != degree:
            raise ValueError("mixed degrees in collection")
        v[des_mask(word)] += mult
    return QSym(degree, tuple(v))


# ---------------------------------------------------------------------------
# Product in the fundamental basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def descent_class_representative(n: int, mask: int) -> Perm:
    """A canonical permutation with the given descent set: blocks are
    increasing runs, and value blocks are assigned from the back so each
    block dominates the next.

    >>> descent_class_representative(3, DescSet.of(3, [1]).mask)
    (3, 1, 2)
    """
    d = DescSet(n, mask)
    boundaries = [0, *d.members, n]
    sizes = [boundaries[i + 1] - boundaries[i] for i in range(len(boundaries) - 1)]
    word: list[int] = []
    consumed = 0
    for size in sizes:
        start = n - consumed - size + 1
        word.extend(range(start, start + size))
        consumed += size
    out = tuple(word)
    assert des_mask(out) == mask
    return out


@lru_cache(maxsize=None)
def _fundamental_pair_product(
    na: int, mask_a: int, nb: int, mask_b: int
) -> tuple[int, ...]:
    """Dense degree-(na+nb) vector of the product of two basis elements,
    realized by shuffling canonical representatives on disjoint alphabets."""
    rep_a = descent_class_representative(na, mask_a)
    rep_b = tuple(v + na for v in descent_class_representative(nb, mask_b))
    v = [0] * _width(na + nb)
    for word in shuffle_words(rep_a, rep_b):
        v[des_mask(word)] += 1
    return tuple(v)


def qsym_mul(a: QSym, b: QSym) -> QSym:
    """Product of quasisymmetric functions (degrees add).

    >>> one = QSym.unit(1)
    >>> (one * one).serialize()
    'n=2; F{} + F{1}'
    """
    if a.n == 0:
        return b.scale(a.coeffs[0])
    if b.n == 0:
        return a.scale(b.coeffs[0])
    n = a.n + b.n
    acc = [0] * _width(n)
    for mask_a, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for mask_b, cb in enumerate(b.coeffs):
            if not cb:
                continue
            vec = _fundamental_pair_product(a.n, mask_a, b.n, mask_b)
            w = ca * cb
            for m, c in enumerate(vec):
                if c:
                    acc[m] += w * c
    return QSym(n, tuple(acc))


QSym.__mul__ = lambda self, other: qsym_mul(self, other)  # type: ignore[assignment]


# ---------------------------------------------------------------------------
# Schur expansions
# ---------------------------------------------------------------------------


def _format_partition(mu: Partition) -> str:
    return "s[" + ",".join(str(p) for p in mu) + "]"


@dataclass(frozen=True)
class SchurExpansion:
    """Integer combination of Schur basis elements of degree ``n``."""

    n: int
    coeffs: tuple[tuple[Partition, int], ...]

    def __post_init__(self) -> None:
        for mu, _ in self.coeffs:
            if sum(mu) != self.n:
                raise ValueError(f"partition {mu} has size != {self.n}")

    @classmethod
    def from_dict(cls, n: int, data: Mapping[Partition, int]) -> "SchurExpansion":
        items = tuple(
            (mu, int(c))
            for mu, c in sorted(data.items(), key=lambda kv: kv[0], reverse=True)
            if c
        )
        return cls(n, items)

    @classmethod
    def zero(cls, n: int) -> "SchurExpansion":
        return cls.from_dict(n, {})

    @classmethod
    def single(cls, mu: Sequence[int], coeff: int = 1) -> "SchurExpansion":
        mu = tuple(mu)
        return cls.from_dict(sum(mu), {mu: coeff})

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.coeffs)

    def coeff(self, mu: Sequence[int]) -> int:
        return self.as_dict().get(tuple(mu), 0)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        data = self.as_dict()
        for mu, c in other.coeffs:
            data[mu] = data.get(mu, 0) + c
        return SchurExpansion.from_dict(self.n, data)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + other.scale(-1)

    def scale(self, k: int) -> "SchurExpansion":
        return SchurExpansion.from_dict(
            self.n, {mu: k * c for mu, c in self.coeffs}
        )

    def divide_exact(self, k: int) -> "SchurExpansion":
        if any(c % k for _, c in self.coeffs):
            raise ValueError(f"expansion is not divisible by {k}")
        return SchurExpansion.from_dict(
            self.n, {mu: c // k for mu, c in self.coeffs}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def dimension(self) -> int:
        """Sum of coefficients times tableau counts (character degree)."""
        table = descent_count_table(self.n)
        return sum(c * sum(table.counts[mu]) for mu, c in self.coeffs)

    def serialize(self) -> str:
        """Canonical text: terms in descending lexicographic partition
        order, e.g. ``s[5] + s[4,1]``; ``0`` when empty.

        >>> SchurExpansion.from_dict(3, {(3,): 1, (2, 1): 2}).serialize()
        's[3] + 2*s[2,1]'
        """
        if not self.coeffs:
            return "0"
        parts = []
        for mu, c in self.coeffs:
            name = _format_partition(mu)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts)


def is_schur_positive(e: SchurExpansion) -> bool:
    """Whether every Schur coefficient is nonnegative."""
    return all(c >= 0 for _, c in e.coeffs)


class NonIntegralExpansionError(RuntimeError):
    """Raised when a solved Schur expansion has a non-integer coefficient
    (impossible for integer symmetric inputs; indicates a bug)."""


@dataclass(frozen=True)
class NotSymmetric:
    """Certificate that a quasisymmetric vector is not symmetric: two
    subsets with the same sorted block-length multiset but different
    monomial coefficients."""

    n: int
    witness: tuple[DescSet, DescSet]
    values: tuple[int, int]

    def serialize(self) -> str:
        d1, d2 = self.witness
        v1, v2 = self.values
        return (
            f"NotSymmetric(n={self.n}; monomial coefficient at {d1.braces()} "
            f"is {v1} but at {d2.braces()} is {v2})"
        )


def monomial_coefficients(q: QSym) -> list[int]:
    """Coefficients in the monomial quasisymmetric basis: the subset-sum
    (zeta) transform of the fundamental coefficients."""
    v = list(q.coeffs)
    width = max(q.n - 1, 0)
    for bit in range(width):
        step = 1 << bit
        for mask in range(len(v)):
            if mask & step:
                v[mask] += v[mask ^ step]
    return v


def _monomial_witness(q: QSym) -> NotSymmetric | None:
    mono = monomial_coefficients(q)
    seen: dict[Composition, tuple[int, int]] = {}
    for mask in range(len(mono)):
        d = DescSet(q.n, mask)
        key = sorted_composition_key(d)
        if key not in seen:
            seen[key] = (mask, mono[mask])
            continue
        first_mask, first_val = seen[key]
        if mono[mask] != first_val:
            return NotSymmetric(
                q.n,
                (DescSet(q.n, first_mask), d),
                (first_val, mono[mask]),
            )
    return None


def is_symmetric_by_monomials(q: QSym) -> bool:
    """Independent symmetry test: monomial coefficients must be constant on
    rearrangement classes of the block-length composition."""
    return _monomial_witness(q) is None


def schur_expand(q: QSym) -> SchurExpansion | NotSymmetric:
    """Solve for the Schur expansion of a quasisymmetric vector, or return
    a :class:`NotSymmetric` certificate.

    Solvability of the linear system against the descent-count table is
    equivalent to symmetry; the forward pass is fraction-free integer
    elimination, the back-substitution exact rational arithmetic, and the
    result is asserted integral.

    >>> isinstance(schur_expand(QSym.single(3, DescSet.of(3, [1]), 2)
    ...                         + QSym.unit(3)), NotSymmetric)
    True
    """
    n = q.n
    parts = partitions(n)
    m = len(parts)
    table = descent_count_table(n)
    columns = [table.counts[mu] for mu in parts]
    width = _width(n)
    rows = [
        [columns[j][mask] for j in range(m)] + [q.coeffs[mask]]
        for mask in range(width)
    ]
    # Bareiss fraction-free forward elimination with full row pivoting.
    rank = 0
    prev_pivot = 1
    n_rows = len(rows)
    for col in range(m):
        pivot_row = next(
            (r for r in range(rank, n_rows) if rows[r][col]), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, n_rows):
            if not any(rows[r][col:]):
                continue
            factor = rows[r][col]
            row_r = rows[r]
            row_p = rows[rank]
            for c in range(col, m + 1):
                row_r[c] = (row_r[c] * pivot - factor * row_p[c]) // prev_pivot
        prev_pivot = pivot
        rank += 1
    if rank < m:
        raise RuntimeError("descent-count table lost column rank (bug)")
    # Inconsistent leftover rows mean the vector is not symmetric.
    for r in range(rank, n_rows):
        if rows[r][m] != 0:
            witness = _monomial_witness(q)
            if witness is None:
                raise RuntimeError(
                    "inconsistent system but monomially symmetric (bug)"
                )
            return witness
    # Back-substitute on the m echelon rows.
    solution: list[Fraction] = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        row = rows[i]
        lead = next(c for c in range(m) if row[c])
        acc = Fraction(row[m])
        for c in range(lead + 1, m):
            if row[c]:
                acc -= row[c] * solution[c]
        solution[lead] = acc / row[lead]
    out: dict[Partition, int] = {}
    for mu, value in zip(parts, solution):
        if value.denominator != 1:
            raise NonIntegralExpansionError(
                f"coefficient of {mu} solved to non-integer {value}"
            )
        if value:
            out[mu] = int(value)
    return SchurExpansion.from_dict(n, out)


def skew_schur_f_vector(shape: SkewShape) -> QSym:
    """Fundamental-basis vector of a skew shape: descent generating
    function of its standard tableaux."""
    n = shape.size()
    v = [0] * _width(n)
    for t in enumerate_syt(shape):
        v[syt_des(t).mask] += 1
    return QSym(n, tuple(v))


def schur_f_vector(e: SchurExpansion) -> QSym:
    """Fundamental-basis vector of a Schur expansion via the
    descent-count table."""
    table = descent_count_table(e.n)
    v = [0] * _width(e.n)
    for mu, c in e.coeffs:
        col = table.counts[mu]
        for mask, d in enumerate(col):
            if d:
                v[mask] += c * d
    return QSym(e.n, tuple(v))


# ---------------------------------------------------------------------------
# Corner moves (degree-raising induction / degree-lowering restriction)
# ---------------------------------------------------------------------------


def _addable_corners(mu: Partition) -> list[Partition]:
    out = []
    rows = len(mu)
    for i in range(rows + 1):
        here = mu[i] if i < rows else 0
        above = mu[i - 1] if i > 0 else None
        if above is None or above > here:
            new = list(mu[:i]) + [here + 1] + list(mu[i + 1 :] if i < rows else [])
            out.append(tuple(new))
    return out


def _removable_corners(mu: Partition) -> list[Partition]:
    out = []
    rows = len(mu)
    for i in range(rows):
        below = mu[i + 1] if i + 1 < rows else 0
        if mu[i] > below:
            new = list(mu)
            new[i] -= 1
            if new[i] == 0:
                new.pop(i)
            out.append(tuple(new))
    return out


def pieri_up(e: SchurExpansion) -> SchurExpansion:
    """Add one corner box in every possible way (linear extension).

    >>> pieri_up(SchurExpansion.single((2,))).serialize()
    's[3] + s[2,1]'
    """
    data: dict[Partition, int] = {}
    for mu, c in e.coeffs:
        for new in _addable_corners(mu):
            data[new] = data.get(new, 0) + c
    return SchurExpansion.from_dict(e.n + 1, data)


def pieri_down(e: SchurExpansion) -> SchurExpansion:
    """Remove one corner box in every possible way (linear extension).

    >>> pieri_up(pieri_down(SchurExpansion.single((3,)))).serialize()
    's[3] + s[2,1]'
    """
    if e.n == 0:
        return SchurExpansion.zero(0)
    data: dict[Partition, int] = {}
    for mu, c in e.coeffs:
        for new in _removable_corners(mu):
            data[new] = data.get(new, 0) + c
    return SchurExpansion.from_dict(e.n - 1, data)


# ---------------------------------------------------------------------------
# Descent-count table with on-disk cache
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DescentCountTable:
    """For each partition of ``n``, the dense vector (indexed by descent
    mask) counting standard tableaux of that shape and descent set."""

    n: int
    counts: dict[Partition, tuple[int, ...]]

    def entry(self, mu: Sequence[int], d: DescSet) -> int:
        return self.counts[tuple(mu)][d.mask]


def cache_dir() -> Path:
    """Directory for descent-count table files (override with the
    SCHURGRID_CACHE_DIR environment variable)."""
    env = os.environ.get("SCHURGRID_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "schurgrid"


def _table_entries(table: DescentCountTable) -> list[dict]:
    entries = []
    for mu in partitions(table.n):
        col = table.counts[mu]
        for mask in range(len(col)):
            if col[mask]:
                entries.append(
                    {
                        "lambda": list(mu),
                        "D": list(DescSet(table.n, mask).members),
                        "count": col[mask],
                    }
                )
    return entries


def _entries_checksum(entries: list[dict]) -> str:
    canonical = json.dumps(entries, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _compute_table(n: int) -> DescentCountTable:
    counts: dict[Partition, tuple[int, ...]] = {}
    for mu in partitions(n):
        v = [0] * _width(n)
        for t in enumerate_syt(straight_shape(mu)):
            v[syt_des(t).mask] += 1
        counts[mu] = tuple(v)
    return DescentCountTable(n, counts)


def _table_path(n: int) -> Path:
    return cache_dir() / f"dtable_{n}.json"


def write_table(table: DescentCountTable) -> Path:
    """Atomically persist a table (complete temp file, then rename)."""
    path = _table_path(table.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    entries = _table_entries(table)
    payload = {
        "n": table.n,
        "entries": entries,
        "checksum": _entries_checksum(entries),
    }
    fd, tmp_name = tempfile.mkstemp(
        prefix=f"dtable_{table.n}.", suffix=".tmp", dir=path.parent
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
    return path


def _load_table(n: int) -> DescentCountTable | None:
    path = _table_path(n)
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    entries = payload.get("entries")
    if (
        payload.get("n") != n
        or not isinstance(entries, list)
        or payload.get("checksum") != _entries_checksum(entries)
    ):
        return None
    counts = {mu: [0] * _width(n) for mu in partitions(n)}
    try:
        for item in entries:
            mu = tuple(item["lambda"])
            mask = DescSet.of(n, item["D"]).mask
            counts[mu][mask] = int(item["count"])
    except (KeyError, TypeError, ValueError):
        return None
    return DescentCountTable(n, {mu: tuple(v) for mu, v in counts.items()})


_table_memory: dict[int, DescentCountTable] = {}


def descent_count_table(n: int, refresh: bool = False) -> DescentCountTable:
    """The cached descent-count table of degree ``n``; corrupt or missing
    cache files are recomputed and rewritten.

    >>> descent_count_table(3).entry((2, 1), DescSet.of(3, [1]))
    1
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not refresh and n in _table_memory:
        return _table_memory[n]
    table = None if refresh else _load_table(n)
    if table is None:
        table = _compute_table(n)
        write_table(table)
    _table_memory[n] = table
    return table


def verify_table_file(n: int) -> bool:
    """Whether the on-disk cache file for degree ``n`` exists, has a valid
    checksum, and matches a fresh recomputation."""
    loaded = _load_table(n)
    if loaded is None:
        return False
    return loaded == _compute_table(n)
