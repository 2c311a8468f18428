"""Registry of machine-verified identities and conjecture scanners.

Every entry pairs a named claim about descent generating functions of
permutation sets with an executable verification that compares two
independently computed sides in exact integer arithmetic.  Results are
returned as structured reports; conjecture scans additionally persist
one verdict file per degree so that later runs can re-verify them.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
import random
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .characters import kronecker, sign_twist
from .grids import (
    GridMatrix,
    GridResourceError,
    arc_matrices,
    complement_matrix,
    enumerate_grid,
    fig_matrix,
    format_grid_matrix,
    format_sign_vector,
    identity_matrix,
    j_matrix,
    k_matrix,
    one_column_matrix,
    parse_grid_matrix,
    reflect_matrix_horizontal,
    rotate180_matrix,
    stack_matrix,
    star_product,
    zigzag_matrix,
)
from .permutations import (
    DescSet,
    Perm,
    compose,
    des_set,
    format_perm,
    inverse,
    longest_element,
    parse_perm,
)
from .permsets import (
    PermSet,
    arc_class,
    cdes_inverse_class,
    colayered_class,
    cyclic_class,
    embed,
    fine_battery,
    inv_descent_class,
    inv_weak_descent_class,
    j_class,
    k_class,
    left_unimodal_class,
    multiset_product,
    one_column_class,
    plus_class,
    product_qsym,
    set_product,
    zigzag_class,
)
from .qsym import (
    NotSymmetric,
    QSym,
    SchurExpansion,
    cache_dir,
    is_schur_positive,
    qsym_of,
    pieri_down,
    pieri_up,
    schur_expand,
    schur_f_vector,
    skew_schur_f_vector,
)
from .tableaux import (
    count_syt,
    enumerate_syt,
    is_partition,
    ribbon_shape,
    rotation_bijection,
    strip_chain_shape,
    syt_des,
)

__all__ = [
    "CheckReport",
    "ScanRecord",
    "ScanReport",
    "DEFAULT_CHECK_BUDGET",
    "check_budget",
    "results_dir",
    "list_checks",
    "list_scans",
    "run_check",
    "run_checks",
    "scan_conjecture",
    "CHECK_IDS",
    "SCAN_IDS",
]

STATUS_VERIFIED = "verified"
STATUS_REFUTED = "refuted"
STATUS_HOLDS = "holds-up-to"
STATUS_SKIPPED = "resource-skipped"

DEFAULT_CHECK_BUDGET = 200_000_000
_SAMPLE_SEED = 20260814


def check_budget() -> int:
    """Work budget (estimated elementary objects) a single check may use."""
    return int(os.environ.get("SCHURGRID_CHECK_BUDGET", DEFAULT_CHECK_BUDGET))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one registered check at one degree."""

    check_id: str
    n: int
    status: str
    lhs: str
    rhs: str
    elapsed_ms: int
    notes: str = ""

    def to_json(self) -> dict[str, object]:
        return {
            "check_id": self.check_id,
            "n": self.n,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "CheckReport":
        return cls(
            check_id=str(data["check_id"]),
            n=int(data["n"]),  # type: ignore[arg-type]
            status=str(data["status"]),
            lhs=str(data["lhs"]),
            rhs=str(data["rhs"]),
            elapsed_ms=int(data["elapsed_ms"]),  # type: ignore[arg-type]
            notes=str(data.get("notes", "")),
        )

    def summary_lines(self) -> list[str]:
        out = [
            f"check {self.check_id} (n={self.n}): {self.status} "
            f"[{self.elapsed_ms} ms]",
            f"  lhs: {self.lhs}",
            f"  rhs: {self.rhs}",
        ]
        if self.notes:
            out.append(f"  notes: {self.notes}")
        return out


class _CaseLedger:
    """Collects per-case left/right serializations.

    The check is verified when every case matches; the first mismatch
    becomes the refutation witness.  Verified multi-case checks report a
    digest over all case lines so the two sides stay comparable strings.
    """

    def __init__(self) -> None:
        self._lhs: list[str] = []
        self._rhs: list[str] = []
        self._mismatch: tuple[str, str, str] | None = None
        self._info: list[str] = []

    @property
    def cases(self) -> int:
        return len(self._lhs)

    def note(self, text: str) -> None:
        self._info.append(text)

    def add(self, label: str, lhs: str, rhs: str) -> None:
        self._lhs.append(f"{label} :: {lhs}")
        self._rhs.append(f"{label} :: {rhs}")
        if lhs != rhs and self._mismatch is None:
            self._mismatch = (label, lhs, rhs)

    def add_sets(self, label: str, left: PermSet, right: PermSet) -> None:
        if left == right:
            text = f"set of {len(left)} sha256:{_digest(sorted(map(format_perm, left)))}"
            self.add(label, text, text)
            return
        only_l = ",".join(format_perm(p) for p in sorted(left - right)[:4])
        only_r = ",".join(format_perm(p) for p in sorted(right - left)[:4])
        self.add(
            label,
            f"set of {len(left)}; not on right: {only_l or '-'}",
            f"set of {len(right)}; not on left: {only_r or '-'}",
        )

    def outcome(self) -> tuple[str, str, str, str]:
        notes = "; ".join(self._info)
        if self._mismatch is not None:
            label, lhs, rhs = self._mismatch
            prefix = f"counterexample at case '{label}'"
            return (
                STATUS_REFUTED,
                lhs,
                rhs,
                f"{prefix}; {notes}" if notes else prefix,
            )
        if self.cases == 1:
            lhs = self._lhs[0].split(" :: ", 1)[1]
            return STATUS_VERIFIED, lhs, lhs, notes
        text = f"cases={self.cases} sha256:{_digest(self._lhs)}"
        return STATUS_VERIFIED, text, text, notes


def _digest(lines: Iterable[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode())
        h.update(b"\n")
    return h.hexdigest()


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _fact(n: int) -> int:
    return math.factorial(n)


def _fubini(n: int) -> int:
    # number of ordered set partitions; controls total weak-class size
    vals = [1]
    for m in range(1, n + 1):
        vals.append(
            sum(math.comb(m, k) * vals[m - k] for k in range(1, m + 1))
        )
    return vals[n]


def _involutions(n: int) -> int:
    a, b = 1, 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b if n >= 1 else 1


def _battery_count(n: int) -> int:
    from .tableaux import partitions

    return (
        _involutions(n)
        + len(partitions(n))
        + (n * (n - 1) // 2 + 1)
        + (1 << (n - 1))
        + n
    )


def _battery_elems(n: int) -> int:
    # knuth/conj/invfix/Dinv families partition the full group once each;
    # the nested colayered family contributes roughly two more copies
    return 6 * _fact(n)


def _dessets(n: int, top: int) -> list[DescSet]:
    """All descent sets of degree ``n`` supported inside ``{1..top}``."""
    items = list(range(1, top + 1))
    out = []
    for mask in range(1 << len(items)):
        members = [items[i] for i in range(len(items)) if mask >> i & 1]
        out.append(DescSet.of(n, members))
    return out


def _sign_vectors(max_len: int, min_len: int = 1) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for k in range(min_len, max_len + 1):
        for mask in range(1 << k):
            out.append(tuple(1 if mask >> i & 1 else -1 for i in range(k)))
    return out


_RIBBON_CACHE: dict[tuple[int, int], SchurExpansion] = {}
_RIBBON_F_CACHE: dict[tuple[int, int], QSym] = {}


def _ribbon_f(n: int, d: DescSet) -> QSym:
    key = (n, d.mask)
    got = _RIBBON_F_CACHE.get(key)
    if got is None:
        got = skew_schur_f_vector(ribbon_shape(n, d))
        _RIBBON_F_CACHE[key] = got
    return got


def _ribbon_schur(n: int, d: DescSet) -> SchurExpansion:
    key = (n, d.mask)
    got = _RIBBON_CACHE.get(key)
    if got is None:
        e = schur_expand(_ribbon_f(n, d))
        assert isinstance(e, SchurExpansion)
        _RIBBON_CACHE[key] = e
        got = e
    return got


def _expanded_battery(
    n: int,
) -> list[tuple[str, PermSet, SchurExpansion]]:
    out = []
    for name, bset in fine_battery(n):
        e = schur_expand(qsym_of(bset, n))
        if isinstance(e, NotSymmetric):
            raise RuntimeError(
                f"battery set {name} is unexpectedly not symmetric: "
                f"{e.serialize()}"
            )
        out.append((name, bset, e))
    return out


def _fineness(e: SchurExpansion | NotSymmetric) -> str:
    if isinstance(e, NotSymmetric):
        return e.serialize()
    if not is_schur_positive(e):
        return f"symmetric, not Schur-positive: {e.serialize()}"
    return "symmetric and Schur-positive"


def _schur_sum(n: int, items: Iterable[tuple[tuple[int, ...], int]]) -> SchurExpansion:
    data: dict[tuple[int, ...], int] = {}
    for parts, coeff in items:
        clean = tuple(p for p in parts if p)
        if not is_partition(clean) or sum(clean) != n or coeff == 0:
            continue
        data[clean] = data.get(clean, 0) + coeff
    return SchurExpansion.from_dict(n, data)


def _subseq(small: Sequence[int], big: Sequence[int]) -> bool:
    it = iter(big)
    return all(any(x == y for y in it) for x in small)


def _fine_matrix_corpus() -> list[tuple[str, GridMatrix]]:
    out: list[tuple[str, GridMatrix]] = [
        (f"onecol[{format_sign_vector(v)}]", one_column_matrix(v))
        for v in _sign_vectors(3)
    ]
    out += [
        ("identity[2]", identity_matrix(2)),
        ("identity[3]", identity_matrix(3)),
        ("zigzag[2]", zigzag_matrix(2)),
        ("jgrid", j_matrix()),
        ("kgrid", k_matrix()),
    ]
    return out


def _wide_matrix_corpus() -> list[tuple[str, GridMatrix]]:
    out = _fine_matrix_corpus()
    out += [
        ("fig", fig_matrix()),
        ("arc0", arc_matrices()[0]),
        ("negstack", stack_matrix((-1, 1), identity_matrix(2))),
        ("rowpair", parse_grid_matrix("-+")),
    ]
    return out


# ---------------------------------------------------------------------------
# Check runners (each returns a populated _CaseLedger)
# ---------------------------------------------------------------------------


def _run_thm_main_1(n: int) -> _CaseLedger:
    led = _CaseLedger()
    battery = _expanded_battery(n)
    for d in _dessets(n, n - 1):
        rclass = inv_weak_descent_class(n, d)
        r_expansion = SchurExpansion.zero(n)
        for size in range(len(d.members) + 1):
            for chosen in itertools.combinations(d.members, size):
                r_expansion = r_expansion + _ribbon_schur(n, DescSet.of(n, chosen))
        direct = schur_expand(qsym_of(rclass, n))
        led.add(
            f"R{d.braces()} two routes",
            direct.serialize(),
            r_expansion.serialize(),
        )
        for name, bset, be in battery:
            rhs_e = kronecker(be, r_expansion)
            lhs_q = product_qsym(bset, rclass)
            led.add(
                f"{name} * R{d.braces()}",
                lhs_q.serialize(),
                schur_f_vector(rhs_e).serialize(),
            )
            led.add(
                f"{name} * R{d.braces()} positive",
                "Schur-positive" if is_schur_positive(rhs_e) else rhs_e.serialize(),
                "Schur-positive",
            )
    return led


def _run_thm_main_2(n: int) -> _CaseLedger:
    led = _CaseLedger()
    battery = _expanded_battery(n)
    dessets = _dessets(n, n - 1)
    pairs = [(i, d) for i in range(len(battery)) for d in dessets]
    if n >= 6:
        rng = random.Random(_SAMPLE_SEED)
        pairs = rng.sample(pairs, 60)
        led.note(f"degree {n}: deterministic sample of 60 pairs (seed {_SAMPLE_SEED})")
    for i, d in pairs:
        name, bset, be = battery[i]
        rhs_e = kronecker(be, _ribbon_schur(n, d))
        lhs_q = product_qsym(bset, inv_descent_class(n, d))
        led.add(
            f"{name} * D{d.braces()}",
            lhs_q.serialize(),
            schur_f_vector(rhs_e).serialize(),
        )
        led.add(
            f"{name} * D{d.braces()} positive",
            "Schur-positive" if is_schur_positive(rhs_e) else rhs_e.serialize(),
            "Schur-positive",
        )
    return led


def _run_cor_vertical(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cyc = cyclic_class(n)
    for d in _dessets(n, n - 1):
        lhs = product_qsym(cyc, inv_descent_class(n, d))
        rhs = schur_f_vector(pieri_up(pieri_down(_ribbon_schur(n, d))))
        led.add(f"D{d.braces()}", lhs.serialize(), rhs.serialize())
    return led


def _r2_expected(n: int) -> SchurExpansion:
    items: list[tuple[tuple[int, ...], int]] = [((n,), 1), ((n - 1, 1), n - 1)]
    for a in range(2, n // 2):
        items.append(((n - a, a), 2 * n - 4 * a + 2))
    for a in range(1, (n - 1) // 2 + 1):
        items.append(((n - a - 1, a, 1), n - 2 * a))
    if n >= 4 and n % 2 == 0:
        items.append(((n // 2, n // 2), 2))
    if n >= 5 and n % 2 == 1:
        items.append((((n + 1) // 2, (n - 1) // 2), 4))
    return _schur_sum(n, items)


def _run_prop_r2(n: int) -> _CaseLedger:
    led = _CaseLedger()
    e = schur_expand(qsym_of(zigzag_class(n, 2), n))
    led.add("closed form", e.serialize(), _r2_expected(n).serialize())
    return led


def _run_eq_recurrence(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cyc = cyclic_class(n)
    prev = qsym_of(zigzag_class(n, 1), n)
    led.add("base", prev.serialize(), qsym_of(cyc, n).serialize())
    for k in range(2, n + 1):
        cur = qsym_of(zigzag_class(n, k), n)
        rhs = product_qsym(cyc, plus_class(n, k)) - prev.scale(n - k)
        led.add(f"k={k}", cur.scale(k).serialize(), rhs.serialize())
        prev = cur
    return led


def _run_arc_formula(n: int) -> _CaseLedger:
    led = _CaseLedger()
    items: list[tuple[tuple[int, ...], int]] = [((n,), 1), ((1,) * n, 1)]
    for k in range(1, n - 1):
        items.append(((n - k,) + (1,) * k, 2))
    for k in range(2, n - 1):
        items.append(((n - k, 2) + (1,) * (k - 2), 1))
    e = schur_expand(qsym_of(arc_class(n), n))
    led.add(
        "closed form",
        e.serialize(),
        _schur_sum(n, items).serialize(),
    )
    return led


def _run_thm_horizontal1(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cyc = cyclic_class(n)
    for d in _dessets(n - 1, n - 2):
        dn = DescSet.of(n, d.members)
        exact = multiset_product(embed(inv_descent_class(n - 1, d), n), cyc)
        weak = multiset_product(embed(inv_weak_descent_class(n - 1, d), n), cyc)
        shape = strip_chain_shape(n, dn)
        led.add(
            f"J={d.braces()} products are sets",
            "sets" if exact.is_set() and weak.is_set() else "repeats present",
            "sets",
        )
        audit = "bijective, descent-preserving, corner-tracking"
        images: set = set()
        problem = None
        for p in sorted(weak.support()):
            try:
                t = rotation_bijection(p, dn)
            except ValueError as exc:
                problem = f"{format_perm(p)}: map undefined ({exc})"
                break
            if t.shape != shape:
                problem = f"{format_perm(p)}: image has wrong shape"
                break
            if syt_des(t) != des_set(p):
                problem = f"{format_perm(p)}: descent set not preserved"
                break
            if t.entry_at(1, n) != inverse(p)[n - 1]:
                problem = f"{format_perm(p)}: top corner is not the position of {n}"
                break
            if t in images:
                problem = f"{format_perm(p)}: image repeated (not injective)"
                break
            images.add(t)
        if problem is None and images != set(enumerate_syt(shape)):
            problem = (
                f"image misses {count_syt(shape) - len(images)} of "
                f"{count_syt(shape)} tableaux (not surjective)"
            )
        led.add(f"J={d.braces()} bijection audit", problem or audit, audit)
        led.add(
            f"J={d.braces()} strip chain tableaux",
            weak.qsym().serialize(),
            skew_schur_f_vector(shape).serialize(),
        )
        led.add(
            f"J={d.braces()} row-extension route",
            exact.qsym().serialize(),
            schur_f_vector(pieri_up(_ribbon_schur(n - 1, d))).serialize(),
        )
    return led


def _run_cor_rotated_shuffles2(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cyc = cyclic_class(n)
    for k in range(1, n + 1):
        z = zigzag_class(n, k)
        led.add(
            f"k={k} fine",
            _fineness(schur_expand(qsym_of(z, n))),
            "symmetric and Schur-positive",
        )
        rotated = set_product(embed(plus_class(n - 1, k), n), cyc)
        led.add_sets(f"k={k} factorization", z, rotated)
    return led


def _run_cor_cyc_fine(n: int) -> _CaseLedger:
    led = _CaseLedger()
    for k in range(1, n):
        rhs = SchurExpansion.zero(n)
        for d in _dessets(n - 1, n - 2):
            if len(d.members) == k - 1:
                rhs = rhs + pieri_up(_ribbon_schur(n - 1, d))
        led.add(
            f"k={k}",
            qsym_of(cdes_inverse_class(n, k), n).serialize(),
            schur_f_vector(rhs).serialize(),
        )
    return led


def _run_cor_lc_cl(n: int) -> _CaseLedger:
    led = _CaseLedger()
    lifted = embed(left_unimodal_class(n - 1), n)
    cyc = cyclic_class(n)
    arcs = arc_class(n)
    lc = multiset_product(lifted, cyc)
    cl = multiset_product(cyc, lifted)
    led.add(
        "horizontal rotations qsym",
        lc.qsym().serialize(),
        qsym_of(arcs, n).serialize(),
    )
    led.note(
        "schur of horizontal rotations: "
        f"{schur_expand(lc.qsym()).serialize()}; "
        f"schur of arc class: {schur_expand(qsym_of(arcs, n)).serialize()}"
    )
    led.add(
        "vertical rotations form a set",
        "set" if cl.is_set() else "multiset with repeats",
        "set",
    )
    led.add_sets("vertical rotations", frozenset(cl.support()), arcs)
    if n >= 4:
        diff = frozenset(lc.support()) != arcs
        led.add(
            "horizontal rotations differ as a set",
            "differs" if diff else "equal",
            "differs",
        )
    if n == 4:
        p = parse_perm("1342")
        led.add(
            "1342 separates the sets",
            f"in product: {p in lc.support()}; arc: {p in arcs}",
            "in product: True; arc: False",
        )
    return led


def _run_cor_hrc(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cyc = cyclic_class(n)
    prev = colayered_class(n - 1, 1)
    for k in range(2, n):
        cur = colayered_class(n - 1, k)
        band = cur - prev
        lhs = product_qsym(embed(band, n), cyc)
        rhs = _schur_sum(
            n,
            [
                ((n - k,) + (1,) * k, 1),
                ((n - k + 1,) + (1,) * (k - 1), 1),
                ((n - k, 2) + (1,) * (k - 2), 1),
            ],
        )
        led.add(f"k={k}", lhs.serialize(), schur_f_vector(rhs).serialize())
        prev = cur
    return led


def _run_prop_reflections(n: int) -> _CaseLedger:
    led = _CaseLedger()
    w0 = longest_element(n)
    for name, m in _fine_matrix_corpus():
        g = enumerate_grid(m, n)
        e = schur_expand(qsym_of(g, n))
        if isinstance(e, NotSymmetric) or not is_schur_positive(e):
            raise RuntimeError(f"corpus matrix {name} is unexpectedly not fine")
        vclass = enumerate_grid(complement_matrix(m), n)
        hclass = enumerate_grid(reflect_matrix_horizontal(m), n)
        led.add_sets(
            f"{name} vertical flip set",
            vclass,
            frozenset(compose(w0, p) for p in g),
        )
        led.add_sets(
            f"{name} horizontal flip set",
            hclass,
            frozenset(compose(p, w0) for p in g),
        )
        twisted = schur_f_vector(sign_twist(e)).serialize()
        led.add(f"{name} vertical flip qsym", qsym_of(vclass, n).serialize(), twisted)
        led.add(f"{name} horizontal flip qsym", qsym_of(hclass, n).serialize(), twisted)
    return led


def _run_cor_equid_rotation(n: int) -> _CaseLedger:
    led = _CaseLedger()
    for name, m in _wide_matrix_corpus():
        q = qsym_of(enumerate_grid(m, n), n)
        e = schur_expand(q)
        if isinstance(e, NotSymmetric) or not is_schur_positive(e):
            led.add(f"{name} vacuous", "premise false", "premise false")
            continue
        rotated = qsym_of(enumerate_grid(rotate180_matrix(m), n), n)
        led.add(f"{name} rotation", q.serialize(), rotated.serialize())
    for v in _sign_vectors(3, min_len=2):
        led.add(
            f"onecol[{format_sign_vector(v)}] reversal",
            qsym_of(one_column_class(v, n), n).serialize(),
            qsym_of(one_column_class(tuple(reversed(v)), n), n).serialize(),
        )
    m = parse_grid_matrix("-+")
    q3 = qsym_of(enumerate_grid(m, 3), 3)
    q3r = qsym_of(enumerate_grid(rotate180_matrix(m), 3), 3)
    led.add("rowpair degree-3 value", q3.serialize(), "n=3; F{} + 2*F{1} + F{1,2}")
    led.add(
        "rowpair degree-3 rotated value",
        q3r.serialize(),
        "n=3; F{} + 2*F{2} + F{1,2}",
    )
    led.add(
        "rowpair rotation changes qsym",
        "differs" if q3 != q3r else "equal",
        "differs",
    )
    return led


def _run_kj_cardinality(n: int) -> _CaseLedger:
    led = _CaseLedger()
    expected = str((n - 2) * (1 << (n - 1)) + 2)
    led.add("interleaved identity family", str(len(j_class(n))), expected)
    led.add("interleaved reversal family", str(len(k_class(n))), expected)
    return led


def _run_j_formula(n: int) -> _CaseLedger:
    led = _CaseLedger()
    items: list[tuple[tuple[int, ...], int]] = [((n,), 1)]
    for a in range(1, n // 2 + 1):
        items.append(((n - a, a), n - 2 * a + 1))
    for a in range(1, (n - 1) // 2 + 1):
        items.append(((n - a - 1, a, 1), n - 2 * a))
    e = schur_expand(qsym_of(j_class(n), n))
    led.add("closed form", e.serialize(), _schur_sum(n, items).serialize())
    return led


def _run_k_formula(n: int) -> _CaseLedger:
    led = _CaseLedger()
    items: list[tuple[tuple[int, ...], int]] = [((n,), 1), ((1,) * n, 1)]
    for k in range(1, n - 1):
        items.append(((n - k,) + (1,) * k, 2))
    for k in range(1, n - 2):
        items.append(((n - k - 1, 2) + (1,) * (k - 1), 2))
    e = schur_expand(qsym_of(k_class(n), n))
    led.add("closed form", e.serialize(), _schur_sum(n, items).serialize())
    return led


def _run_qsh_formula(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cls = plus_class(n, 2)
    items: list[tuple[tuple[int, ...], int]] = [((n,), 1)]
    for a in range(1, n // 2 + 1):
        items.append(((n - a, a), n - 2 * a + 1))
    e = schur_expand(qsym_of(cls, n))
    led.add("closed form", e.serialize(), _schur_sum(n, items).serialize())
    led.add("cardinality", str(len(cls)), str(2**n - n))
    return led


def _run_ll_formula(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cls = left_unimodal_class(n)
    items = [((n - k,) + (1,) * k, 1) for k in range(n)]
    e = schur_expand(qsym_of(cls, n))
    led.add("closed form", e.serialize(), _schur_sum(n, items).serialize())
    led.add("cardinality", str(len(cls)), str(1 << (n - 1)))
    return led


def _run_colayer_hooks(n: int) -> _CaseLedger:
    led = _CaseLedger()
    for k in range(1, n + 1):
        items = [((n - j,) + (1,) * j, 1) for j in range(k)]
        e = schur_expand(qsym_of(colayered_class(n, k), n))
        led.add(f"k={k}", e.serialize(), _schur_sum(n, items).serialize())
    return led


def _run_onecol_zigzags(n: int) -> _CaseLedger:
    led = _CaseLedger()
    universe = _sign_vectors(n - 1, min_len=n - 1)
    ribbons = {
        u: _ribbon_f(n, DescSet.of(n, [i + 1 for i, s in enumerate(u) if s > 0]))
        for u in universe
    }
    for v in _sign_vectors(n - 1):
        rhs = QSym.zero(n)
        for u in universe:
            if not _subseq(v, u):
                rhs = rhs + ribbons[u]
        led.add(
            f"v={format_sign_vector(v)}",
            qsym_of(one_column_class(v, n), n).serialize(),
            rhs.serialize(),
        )
    return led


def _run_prop_prod_onecol(n: int) -> _CaseLedger:
    led = _CaseLedger()
    mats = [
        ("identity[2]", identity_matrix(2)),
        ("identity[3]", identity_matrix(3)),
        ("zigzag[2]", zigzag_matrix(2)),
        ("fig", fig_matrix()),
        ("onecol[+-]", one_column_matrix((1, -1))),
    ]
    combos = [(v, name, m) for v in _sign_vectors(2) for name, m in mats]
    rng = random.Random(_SAMPLE_SEED)
    sample = rng.sample(combos, 10)
    led.note(f"deterministic sample of 10 of {len(combos)} pairs (seed {_SAMPLE_SEED})")
    for v, name, m in sample:
        left = set_product(one_column_class(v, n), enumerate_grid(m, n))
        right = enumerate_grid(stack_matrix(v, m), n)
        led.add_sets(f"{format_sign_vector(v)} over {name}", left, right)
    return led


def _run_cor_star(n: int) -> _CaseLedger:
    led = _CaseLedger()
    led.add(
        "star of -+ with +--",
        format_sign_vector(star_product((-1, 1), (1, -1, -1))),
        "++-+--",
    )
    vs = _sign_vectors(3)
    for v in vs:
        for w in vs:
            left = set_product(one_column_class(v, n), one_column_class(w, n))
            right = one_column_class(star_product(v, w), n)
            led.add_sets(
                f"{format_sign_vector(v)} * {format_sign_vector(w)}", left, right
            )
    return led


def _run_thm_horiz_induction(n: int) -> _CaseLedger:
    led = _CaseLedger()
    cyc = cyclic_class(n)
    for name, bset, be in _expanded_battery(n - 1):
        lhs = product_qsym(embed(bset, n), cyc)
        rhs = schur_f_vector(pieri_up(be))
        led.add(name, lhs.serialize(), rhs.serialize())
    return led


def _run_neg_arc_grid(n: int) -> _CaseLedger:
    led = _CaseLedger()
    m = arc_matrices()[0]
    e = schur_expand(qsym_of(enumerate_grid(m, n), n))
    if isinstance(e, NotSymmetric):
        led.note(e.serialize())
        verdict = "not symmetric"
    else:
        verdict = f"symmetric: {e.serialize()}"
    led.add(f"grid {format_grid_matrix(m)}", verdict, "not symmetric")
    return led


def _run_neg_knuth_rot(n: int) -> _CaseLedger:
    led = _CaseLedger()
    base = frozenset({parse_perm("2143"), parse_perm("2413")})
    lifted = embed(base, 5)
    e_base = schur_expand(qsym_of(base, 4))
    led.add(
        "plactic class itself is fine",
        _fineness(e_base),
        "symmetric and Schur-positive",
    )
    e = schur_expand(product_qsym(cyclic_class(5), lifted))
    led.note(e.serialize())
    led.add(
        "vertical rotations are not fine",
        "not fine" if isinstance(e, NotSymmetric) or not is_schur_positive(e)
        else f"fine: {e.serialize()}",
        "not fine",
    )
    e_horiz = schur_expand(product_qsym(lifted, cyclic_class(5)))
    led.add(
        "horizontal rotations stay fine",
        _fineness(e_horiz),
        "symmetric and Schur-positive",
    )
    return led


def _run_neg_stack(n: int) -> _CaseLedger:
    led = _CaseLedger()
    v = (-1, 1)
    m = stack_matrix(v, identity_matrix(2))
    led.add("stacked matrix", format_grid_matrix(m), "+0/0+/0-/-0")
    left = set_product(one_column_class(v, 6), colayered_class(6, 2))
    right = enumerate_grid(m, 6)
    led.add_sets("product set", left, right)
    e = schur_expand(qsym_of(right, 6))
    if isinstance(e, NotSymmetric):
        led.note(e.serialize())
        verdict = "not symmetric"
    else:
        verdict = f"symmetric: {e.serialize()}"
    led.add("asymmetry", verdict, "not symmetric")
    return led


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    description: str
    default_n: int
    min_n: int
    cost: Callable[[int], int]
    runner: Callable[[int], _CaseLedger]
    fixed_n: bool = False


_REGISTRY: dict[str, CheckSpec] = {}


def _register(spec: CheckSpec) -> None:
    _REGISTRY[spec.check_id] = spec


_register(
    CheckSpec(
        "thm-main-1",
        "Right multiset product with a weak inverse-descent class matches the"
        " pointwise character product route and is Schur-positive; the weak"
        " class expands as the sum of its ribbon summands.",
        5,
        2,
        lambda n: _battery_count(n) * _fubini(n) * (6 * _fact(n) // _battery_count(n)),
        _run_thm_main_1,
    )
)
_register(
    CheckSpec(
        "thm-main-2",
        "Right multiset product with an exact inverse-descent class matches"
        " the character product against the class's ribbon; exhaustive"
        " battery x subsets through degree 5, seeded sample of 60 beyond.",
        5,
        2,
        lambda n: 6 * _fact(n) ** 2 if n <= 5 else 60 * (6 * _fact(n) // _battery_count(n)) * (_fact(n) >> (n - 1)),
        _run_thm_main_2,
    )
)
_register(
    CheckSpec(
        "cor-vertical",
        "Vertical rotations of an inverse-descent class have the descent"
        " generating function of the remove-then-add-a-corner route.",
        7,
        2,
        lambda n: n * _fact(n),
        _run_cor_vertical,
    )
)
_register(
    CheckSpec(
        "prop-R2",
        "Closed Schur form of the two-strip cyclic ball (inverse cyclic"
        " descents at most 2).",
        7,
        3,
        lambda n: n * _fact(n),
        _run_prop_r2,
    )
)
_register(
    CheckSpec(
        "eq-recurrence",
        "Scaling recurrence tying the k-strip cyclic ball to vertical"
        " rotations of the k-cell one-column class.",
        7,
        2,
        lambda n: 2 * n * n * _fact(n) + n**n,
        _run_eq_recurrence,
    )
)
_register(
    CheckSpec(
        "arc-formula",
        "Closed Schur form of the circular-prefix (arc) class.",
        7,
        2,
        lambda n: 2 * 4**n + n * _fact(n),
        _run_arc_formula,
    )
)
_register(
    CheckSpec(
        "thm-horizontal1",
        "Horizontal rotations of an inverse-descent class: set structure,"
        " explicit descent-preserving bijection onto strip chain tableaux,"
        " and two quasisymmetric routes.",
        7,
        2,
        lambda n: 4 * _fact(n) + n * _fubini(n - 1),
        _run_thm_horizontal1,
    )
)
_register(
    CheckSpec(
        "cor-rotated-shuffles2",
        "Every k-strip cyclic ball is fine and factors as horizontal"
        " rotations of the k-cell ascending one-column class.",
        7,
        2,
        lambda n: 3 * n * _fact(n) + n * n**n,
        _run_cor_rotated_shuffles2,
    )
)
_register(
    CheckSpec(
        "cor-cyc-fine",
        "Level sets of the inverse cyclic descent number expand as sums of"
        " corner-added ribbons.",
        7,
        2,
        lambda n: 2 * n * _fact(n),
        _run_cor_cyc_fine,
    )
)
_register(
    CheckSpec(
        "cor-LC-CL",
        "Horizontal and vertical rotations of the left-unimodal class share"
        " one descent generating function; only the vertical ones give the"
        " arc class as a set.",
        7,
        2,
        lambda n: 4 * 4**n + n * (1 << n) + _fact(n) // 100 + 1,
        _run_cor_lc_cl,
    )
)
_register(
    CheckSpec(
        "cor-hrc",
        "Horizontal rotations of each fresh colayer band expand into at most"
        " three hook-like Schur terms.",
        7,
        3,
        lambda n: (n - 1) ** (n - 1) + n * (1 << n),
        _run_cor_hrc,
    )
)
_register(
    CheckSpec(
        "prop-reflections",
        "Vertical/horizontal flips of a fine grid class equal left/right"
        " composition with the order-reversing permutation and twist the"
        " expansion by the sign character.",
        6,
        1,
        lambda n: 60 * 4**n,
        _run_prop_reflections,
    )
)
_register(
    CheckSpec(
        "cor-equid-rotation",
        "Half-turn rotation preserves the descent generating function of"
        " Schur-positive grid classes, but not of a two-cell row witness"
        " whose exact degree-3 values are frozen.",
        6,
        3,
        lambda n: 60 * 4**n + 2 * _fact(n),
        _run_cor_equid_rotation,
    )
)
_register(
    CheckSpec(
        "kj-cardinality",
        "Both four-cell interleaving families have (n-2)*2^(n-1)+2 members.",
        8,
        3,
        lambda n: 2 * 4**n,
        _run_kj_cardinality,
    )
)
_register(
    CheckSpec(
        "j-formula",
        "Closed Schur form of the identity-interleaving family.",
        7,
        3,
        lambda n: 4**n + n * n,
        _run_j_formula,
    )
)
_register(
    CheckSpec(
        "k-formula",
        "Closed Schur form of the reversal-interleaving family.",
        7,
        3,
        lambda n: 4**n + n * n,
        _run_k_formula,
    )
)
_register(
    CheckSpec(
        "qsh-formula",
        "Closed Schur form and cardinality 2^n-n of the two-cell ascending"
        " one-column class.",
        7,
        2,
        lambda n: 2**n + n * n,
        _run_qsh_formula,
    )
)
_register(
    CheckSpec(
        "ll-formula",
        "Closed hook-sum form and cardinality 2^(n-1) of the left-unimodal"
        " class.",
        7,
        2,
        lambda n: 2**n + n * n,
        _run_ll_formula,
    )
)
_register(
    CheckSpec(
        "colayer-hooks",
        "Each colayer ball expands as the first k hook Schur functions.",
        7,
        1,
        lambda n: 2 * n**n,
        _run_colayer_hooks,
    )
)
_register(
    CheckSpec(
        "onecol-zigzags",
        "A one-column class expands over the ribbons of the sign words that"
        " avoid its sign vector as a subsequence.",
        7,
        2,
        lambda n: (1 << (n - 1)) * (n - 1) ** n + n * _fact(n),
        _run_onecol_zigzags,
    )
)
_register(
    CheckSpec(
        "prop-prod-onecol",
        "Composing a one-column class with a grid class lands exactly on the"
        " stacked grid class (seeded sample of pairs).",
        6,
        2,
        lambda n: 12 * 6**n,
        _run_prop_prod_onecol,
    )
)
_register(
    CheckSpec(
        "cor-star",
        "Composing two one-column classes lands exactly on the one-column"
        " class of the star product of their sign vectors.",
        6,
        2,
        lambda n: 100 * 9**n,
        _run_cor_star,
    )
)
_register(
    CheckSpec(
        "thm-horiz-induction",
        "Horizontal rotations of any fine battery set expand by adding one"
        " corner cell to its Schur support.",
        6,
        2,
        lambda n: 6 * _fact(n),
        _run_thm_horiz_induction,
    )
)
_register(
    CheckSpec(
        "neg-arc-grid",
        "A single arc-family grid component is not even symmetric.",
        4,
        4,
        lambda n: 4**n,
        _run_neg_arc_grid,
        fixed_n=True,
    )
)
_register(
    CheckSpec(
        "neg-knuth-rot",
        "Vertical rotations of an embedded plactic class can fail to be"
        " fine even though the class and its horizontal rotations are fine.",
        5,
        5,
        lambda n: 4 * _fact(5),
        _run_neg_knuth_rot,
        fixed_n=True,
    )
)
_register(
    CheckSpec(
        "neg-stack",
        "A stacked grid whose base is not one-column can fail symmetry; its"
        " matrix and product factorization are pinned exactly.",
        6,
        6,
        lambda n: 8 * 6**6,
        _run_neg_stack,
        fixed_n=True,
    )
)

CHECK_IDS: tuple[str, ...] = tuple(_REGISTRY)


def list_checks() -> list[tuple[str, int, str]]:
    """(check id, default degree, description) for every registered check."""
    return [(s.check_id, s.default_n, s.description) for s in _REGISTRY.values()]


def run_check(check_id: str, n: int | None = None) -> CheckReport:
    """Execute one registered check and wrap the outcome in a report.

    Unknown ids raise ``ValueError``; degrees beyond the declared cost
    model produce a ``resource-skipped`` report instead of running.
    """
    spec = _REGISTRY.get(check_id)
    if spec is None:
        known = ", ".join(sorted(_REGISTRY))
        raise ValueError(f"unknown check id {check_id!r}; known ids: {known}")
    degree = spec.default_n if n is None else n
    if spec.fixed_n and degree != spec.default_n:
        raise ValueError(
            f"check {check_id} pins a frozen counterexample at degree "
            f"{spec.default_n}; --n cannot override it"
        )
    if degree < spec.min_n:
        raise ValueError(
            f"check {check_id} needs degree >= {spec.min_n}, got {degree}"
        )
    budget = check_budget()
    estimated = spec.cost(degree)
    if estimated > budget:
        return CheckReport(
            check_id,
            degree,
            STATUS_SKIPPED,
            "",
            "",
            0,
            f"estimated work {estimated} exceeds budget {budget}; raise "
            "SCHURGRID_CHECK_BUDGET to force",
        )
    start = time.perf_counter()
    try:
        ledger = spec.runner(degree)
    except GridResourceError as exc:
        return CheckReport(
            check_id,
            degree,
            STATUS_SKIPPED,
            "",
            "",
            int((time.perf_counter() - start) * 1000),
            f"grid enumeration over budget: {exc}",
        )
    status, lhs, rhs, notes = ledger.outcome()
    return CheckReport(
        check_id,
        degree,
        status,
        lhs,
        rhs,
        int((time.perf_counter() - start) * 1000),
        notes,
    )


def run_checks(
    check_ids: Sequence[str] | None = None,
    n_overrides: Mapping[str, int] | None = None,
    max_workers: int | None = None,
) -> list[CheckReport]:
    """Run several checks concurrently (each check is an independent job)."""
    ids = list(_REGISTRY) if check_ids is None else list(check_ids)
    overrides = dict(n_overrides or {})
    for cid in ids:
        if cid not in _REGISTRY:
            raise ValueError(f"unknown check id {cid!r}")
    workers = max_workers or min(8, max(1, len(ids)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda cid: run_check(cid, overrides.get(cid)), ids))


# ---------------------------------------------------------------------------
# Conjecture scans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    """Persisted verdict of one conjecture at one degree."""

    conjecture: str
    n: int
    verdict: str  # "holds" | "refuted"
    cases: int
    witness: str | None
    elapsed_ms: int
    created: str

    def to_json(self) -> dict[str, object]:
        return {
            "conjecture": self.conjecture,
            "n": self.n,
            "verdict": self.verdict,
            "cases": self.cases,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
            "created": self.created,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "ScanRecord":
        return cls(
            conjecture=str(data["conjecture"]),
            n=int(data["n"]),  # type: ignore[arg-type]
            verdict=str(data["verdict"]),
            cases=int(data["cases"]),  # type: ignore[arg-type]
            witness=None if data.get("witness") is None else str(data["witness"]),
            elapsed_ms=int(data["elapsed_ms"]),  # type: ignore[arg-type]
            created=str(data["created"]),
        )


@dataclass(frozen=True)
class ScanReport:
    """Aggregate outcome of scanning one conjecture up to a degree."""

    conj_id: str
    max_n: int
    frontier: int
    status: str  # "holds-up-to" | "refuted"
    witness: str | None
    records: tuple[ScanRecord, ...]
    notes: str = ""

    def to_json(self) -> dict[str, object]:
        return {
            "conjecture": self.conj_id,
            "max_n": self.max_n,
            "frontier": self.frontier,
            "status": self.status,
            "witness": self.witness,
            "records": [r.to_json() for r in self.records],
            "notes": self.notes,
        }

    def summary_lines(self) -> list[str]:
        out = []
        for r in self.records:
            line = f"  n={r.n}: {r.verdict} ({r.cases} cases, {r.elapsed_ms} ms)"
            if r.witness:
                line += f" witness: {r.witness}"
            out.append(line)
        if self.status == STATUS_REFUTED:
            head = f"scan {self.conj_id}: refuted at n={self.records[-1].n}"
        else:
            head = f"scan {self.conj_id}: holds up to n={self.frontier}"
        if self.notes:
            out.append(f"  notes: {self.notes}")
        return [head, *out]


@dataclass(frozen=True)
class ScanSpec:
    conj_id: str
    description: str
    n_min: int
    cost: Callable[[int], int]
    runner: Callable[[int], tuple[str, int, str | None]]


def _scan_conj_10_1(n: int) -> tuple[str, int, str | None]:
    cyc = cyclic_class(n)
    cases = 0
    for v in _sign_vectors(n - 1):
        cases += 1
        e = schur_expand(product_qsym(cyc, one_column_class(v, n)))
        if isinstance(e, NotSymmetric) or not is_schur_positive(e):
            return (
                "refuted",
                cases,
                f"v={format_sign_vector(v)}: {_fineness(e)}",
            )
    return "holds", cases, None


def _scan_conj_10_2(n: int) -> tuple[str, int, str | None]:
    cyc = cyclic_class(n)
    cases = 0
    for d in _dessets(n - 1, n - 2):
        cases += 1
        lifted = embed(inv_descent_class(n - 1, d), n)
        left = multiset_product(cyc, lifted)
        right = multiset_product(lifted, cyc)
        if not (left.is_set() and right.is_set()):
            return "refuted", cases, f"J={d.braces()}: a product has repeats"
        if left.qsym() != right.qsym():
            return (
                "refuted",
                cases,
                f"J={d.braces()}: {left.qsym().serialize()} != "
                f"{right.qsym().serialize()}",
            )
    return "holds", cases, None


def _scan_conj_10_3(n: int) -> tuple[str, int, str | None]:
    battery = fine_battery(n)
    cases = 0
    for d in _dessets(n, n - 1):
        dclass = inv_descent_class(n, d)
        for name, bset in battery:
            cases += 1
            left = product_qsym(dclass, bset)
            right = product_qsym(bset, dclass)
            if left != right:
                return (
                    "refuted",
                    cases,
                    f"B={name}, J={d.braces()}: {left.serialize()} != "
                    f"{right.serialize()}",
                )
    return "holds", cases, None


def _scan_knuth_product(n: int) -> tuple[str, int, str | None]:
    from .tableaux import insertion_tableau

    classes: dict[object, list[Perm]] = {}
    for p in itertools.permutations(range(1, n + 1)):
        classes.setdefault(insertion_tableau(p), []).append(p)
    items = sorted(classes.items(), key=lambda kv: min(kv[1]))
    cases = 0
    for ta, aa in items:
        ea = SchurExpansion.single(ta.shape.outer)
        for tb, bb in items:
            cases += 1
            expected = kronecker(ea, SchurExpansion.single(tb.shape.outer))
            got = schur_expand(product_qsym(frozenset(aa), frozenset(bb)))
            if isinstance(got, NotSymmetric):
                return (
                    "refuted",
                    cases,
                    f"A=class of {format_perm(min(aa))}, "
                    f"B=class of {format_perm(min(bb))}: {got.serialize()}",
                )
            if got != expected:
                return (
                    "refuted",
                    cases,
                    f"A=class of {format_perm(min(aa))}, "
                    f"B=class of {format_perm(min(bb))}: {got.serialize()} != "
                    f"{expected.serialize()}",
                )
    return "holds", cases, None


def _scan_restriction(n: int) -> tuple[str, int, str | None]:
    cases = 0
    for name, m in _wide_matrix_corpus():
        cases += 1
        e_hi = schur_expand(qsym_of(enumerate_grid(m, n), n))
        hi = isinstance(e_hi, SchurExpansion) and is_schur_positive(e_hi)
        if not hi:
            continue
        e_lo = schur_expand(qsym_of(enumerate_grid(m, n - 1), n - 1))
        lo = isinstance(e_lo, SchurExpansion) and is_schur_positive(e_lo)
        if not lo:
            return (
                "refuted",
                cases,
                f"{name}: Schur-positive at degree {n} but at degree {n - 1}: "
                f"{_fineness(e_lo)}",
            )
    return "holds", cases, None


_SCANS: dict[str, ScanSpec] = {
    s.conj_id: s
    for s in (
        ScanSpec(
            "conj-10-1",
            "Vertical rotations of every one-column class stay symmetric and"
            " Schur-positive.",
            3,
            lambda n: (1 << n) * n * _fact(n),
            _scan_conj_10_1,
        ),
        ScanSpec(
            "conj-10-2",
            "Vertical and horizontal rotations of an embedded inverse-descent"
            " class form sets with equal descent generating functions.",
            3,
            lambda n: 4 * _fact(n),
            _scan_conj_10_2,
        ),
        ScanSpec(
            "conj-10-3",
            "Inverse-descent classes commute with every battery set in the"
            " descent generating function.",
            3,
            lambda n: 12 * _fact(n) ** 2,
            _scan_conj_10_3,
        ),
        ScanSpec(
            "knuth-product",
            "The product of two plactic classes matches the pointwise"
            " character product of their shapes.",
            3,
            lambda n: _fact(n) ** 2 + n * _fact(n),
            _scan_knuth_product,
        ),
        ScanSpec(
            "restriction",
            "Grid classes Schur-positive at one degree stay Schur-positive"
            " one degree below.",
            4,
            lambda n: 100 * 4**n,
            _scan_restriction,
        ),
    )
}

SCAN_IDS: tuple[str, ...] = tuple(_SCANS)


def list_scans() -> list[tuple[str, int, str]]:
    """(conjecture id, first scanned degree, description) for every scanner."""
    return [(s.conj_id, s.n_min, s.description) for s in _SCANS.values()]


def results_dir() -> Path:
    """Directory holding persisted per-degree scan verdicts."""
    override = os.environ.get("SCHURGRID_RESULTS_DIR")
    return Path(override) if override else cache_dir() / "results"


def _record_path(conj_id: str, n: int) -> Path:
    return results_dir() / f"{conj_id}-n{n}.json"


def _store_record(record: ScanRecord) -> None:
    path = _record_path(record.conjecture, record.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(record.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_record(conj_id: str, n: int) -> ScanRecord | None:
    path = _record_path(conj_id, n)
    if not path.exists():
        return None
    try:
        return ScanRecord.from_json(json.loads(path.read_text()))
    except (ValueError, KeyError, TypeError):
        return None


def scan_conjecture(conj_id: str, max_n: int) -> ScanReport:
    """Scan one conjecture degree by degree up to ``max_n``.

    Each degree's verdict is persisted once (append-only); reruns recompute
    and must reproduce the stored verdict, otherwise they raise.  The scan
    stops at the first refuting degree or when the cost model exceeds the
    work budget.
    """
    spec = _SCANS.get(conj_id)
    if spec is None:
        known = ", ".join(sorted(_SCANS))
        raise ValueError(f"unknown conjecture id {conj_id!r}; known ids: {known}")
    records: list[ScanRecord] = []
    status = STATUS_HOLDS
    witness: str | None = None
    frontier = spec.n_min - 1
    notes = ""
    for n in range(spec.n_min, max_n + 1):
        estimated = spec.cost(n)
        if estimated > check_budget():
            notes = (
                f"stopped before n={n}: estimated work {estimated} exceeds "
                f"budget {check_budget()}"
            )
            break
        start = time.perf_counter()
        verdict, cases, found = spec.runner(n)
        elapsed = int((time.perf_counter() - start) * 1000)
        record = ScanRecord(
            conj_id,
            n,
            verdict,
            cases,
            found,
            elapsed,
            datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )
        stored = _load_record(conj_id, n)
        if stored is None:
            _store_record(record)
        elif stored.verdict != verdict:
            raise RuntimeError(
                f"stored verdict for {conj_id} at n={n} is {stored.verdict!r} "
                f"but recomputation gives {verdict!r}; inspect "
                f"{_record_path(conj_id, n)}"
            )
        records.append(record)
        if verdict == "refuted":
            status = STATUS_REFUTED
            witness = found
            break
        frontier = n
    return ScanReport(
        conj_id, max_n, frontier, status, witness, tuple(records), notes
    )
