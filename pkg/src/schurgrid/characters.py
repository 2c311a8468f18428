"""Characters of symmetric groups, Kronecker products, and the signed
descent-sum evaluation of the character attached to a permutation set.

Irreducible character values are computed by border-strip removal on
first-column hook lengths (beta-sets); Kronecker coefficients come from the
pointwise product of character vectors paired back against the irreducibles,
with exact integer arithmetic throughout.

>>> mn_character((2, 1), (1, 1, 1))
2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .permutations import (
    DescSet,
    Perm,
    composition_boundary_mask,
    des_mask,
    is_mu_modal_mask,
)
from .qsym import SchurExpansion
from .tableaux import Partition, conjugate_partition, partitions

__all__ = [
    "z_of",
    "class_size",
    "mn_character",
    "character_row",
    "character_table",
    "CharacterVector",
    "char_vector",
    "schur_from_char_vector",
    "kronecker",
    "sign_twist",
    "char_from_signed_formula",
    "signed_char_vector",
]


def z_of(rho: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type ``rho``.

    >>> z_of((2, 2, 1))
    8
    """
    mult: dict[int, int] = {}
    for part in rho:
        if part <= 0:
            raise ValueError("cycle type parts must be positive")
        mult[part] = mult.get(part, 0) + 1
    out = 1
    for part, m in mult.items():
        out *= part**m * math.factorial(m)
    return out


def class_size(rho: Sequence[int]) -> int:
    """Number of permutations with cycle type ``rho``."""
    return math.factorial(sum(rho)) // z_of(rho)


@lru_cache(maxsize=None)
def _mn_beta(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Character value from a beta-set (strictly decreasing first-column
    hook lengths); one cycle length is stripped per recursion step."""
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    members = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in members:
            continue
        # Sign = parity of the number of beta entries strictly between.
        jumped = sum(1 for x in beta if target < x < b)
        new = tuple(sorted((*(x for x in beta if x != b), target), reverse=True))
        term = _mn_beta(new, rest)
        total += -term if jumped % 2 else term
    return total


def _beta_set(lam: Partition) -> tuple[int, ...]:
    k = len(lam)
    return tuple(lam[i] + (k - 1 - i) for i in range(k))


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """Irreducible character of shape ``lam`` at cycle type ``rho``.

    >>> mn_character((3, 2), (2, 2, 1))
    1
    >>> mn_character((1, 1, 1), (3,))
    1
    """
    lam = tuple(lam)
    rho = tuple(sorted(rho, reverse=True))
    if sum(lam) != sum(rho):
        raise ValueError("shape and cycle type have different sizes")
    if not lam:
        return 1
    return _mn_beta(_beta_set(lam), rho)


@lru_cache(maxsize=None)
def character_row(lam: Partition, n: int) -> tuple[int, ...]:
    """Values of one irreducible character, indexed like ``partitions(n)``."""
    return tuple(mn_character(lam, rho) for rho in partitions(n))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, tuple[int, ...]]:
    """Full character table of degree ``n``: rows by shape, columns by
    cycle type in ``partitions(n)`` order."""
    return {lam: character_row(lam, n) for lam in partitions(n)}


@dataclass(frozen=True)
class CharacterVector:
    """A class function of degree ``n``: one integer per cycle type,
    in ``partitions(n)`` order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(partitions(self.n)):
            raise ValueError("wrong number of class values")

    def value(self, rho: Sequence[int]) -> int:
        rho = tuple(sorted(rho, reverse=True))
        return self.values[partitions(self.n).index(rho)]

    def pointwise_mul(self, other: "CharacterVector") -> "CharacterVector":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return CharacterVector(
            self.n, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def degree(self) -> int:
        """Value at the identity class."""
        return self.value((1,) * self.n) if self.n else self.values[0]


def char_vector(e: SchurExpansion) -> CharacterVector:
    """Class-function values of a Schur expansion."""
    parts = partitions(e.n)
    acc = [0] * len(parts)
    for lam, c in e.coeffs:
        row = character_row(lam, e.n)
        for i, v in enumerate(row):
            acc[i] += c * v
    return CharacterVector(e.n, tuple(acc))


def schur_from_char_vector(v: CharacterVector) -> SchurExpansion:
    """Expand a class function over the irreducibles; coefficients are
    asserted integral (inner products with exact class weights).

    >>> schur_from_char_vector(char_vector(SchurExpansion.single((2, 1), 3)))
    ... # doctest: +ELLIPSIS
    SchurExpansion(n=3, coeffs=(((2, 1), 3),))
    """
    n = v.n
    parts = partitions(n)
    weights = [class_size(rho) for rho in parts]
    n_fact = math.factorial(n)
    out: dict[Partition, int] = {}
    for lam in parts:
        row = character_row(lam, n)
        total = sum(w * a * b for w, a, b in zip(weights, v.values, row))
        if total % n_fact:
            raise ValueError(
                f"class function has non-integral multiplicity at {lam}"
            )
        if total:
            out[lam] = total // n_fact
    return SchurExpansion.from_dict(n, out)


def kronecker(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    """Kronecker (internal) product: pointwise product of character
    vectors, re-expanded over the irreducibles.

    >>> kronecker(SchurExpansion.single((2, 1)),
    ...           SchurExpansion.single((1, 1, 1))).serialize()
    's[2,1]'
    """
    if a.n != b.n:
        raise ValueError("Kronecker product needs equal degrees")
    return schur_from_char_vector(char_vector(a).pointwise_mul(char_vector(b)))


def sign_twist(e: SchurExpansion) -> SchurExpansion:
    """Kronecker product with the sign character: conjugate every shape.

    >>> sign_twist(SchurExpansion.single((3, 1))).serialize()
    's[2,1,1]'
    """
    return SchurExpansion.from_dict(
        e.n, {conjugate_partition(mu): c for mu, c in e.coeffs}
    )


def char_from_signed_formula(
    elems: Union[Mapping[Perm, int], Iterable[Perm]],
    mu: Sequence[int],
    n: int | None = None,
) -> int:
    """Signed descent-sum character evaluation at cycle type ``mu``: sum,
    over block-unimodal members, of (-1)**(descents outside the block
    boundaries).

    >>> char_from_signed_formula([(2, 1, 3), (2, 3, 1)], (2, 1))
    0
    """
    mu = tuple(mu)
    items = (
        list(elems.items())
        if isinstance(elems, Mapping)
        else [(w, 1) for w in elems]
    )
    if not items:
        if n is None:
            raise ValueError("empty collection needs an explicit degree")
        degree = n
    else:
        degree = len(items[0][0])
        if n is not None and n != degree:
            raise ValueError("degree mismatch")
    if sum(mu) != degree:
        raise ValueError("cycle type size must match the degree")
    boundary = composition_boundary_mask(mu)
    total = 0
    for word, mult in items:
        mask = des_mask(word)
        if not is_mu_modal_mask(mask, degree, mu):
            continue
        outside = bin(mask & ~boundary).count("1")
        total += -mult if outside % 2 else mult
    return total


def signed_char_vector(
    elems: Union[Mapping[Perm, int], Iterable[Perm]],
    n: int | None = None,
) -> CharacterVector:
    """All signed descent-sum values of a permutation set, one per cycle
    type (an independent route to its class function)."""
    items = (
        dict(elems) if isinstance(elems, Mapping) else {w: 1 for w in elems}
    )
    if items:
        degree = len(next(iter(items)))
    elif n is not None:
        degree = n
    else:
        raise ValueError("empty collection needs an explicit degree")
    values = tuple(
        char_from_signed_formula(items, rho, n=degree)
        for rho in partitions(degree)
    )
    return CharacterVector(degree, values)
