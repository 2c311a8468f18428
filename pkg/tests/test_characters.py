"""Symmetric group characters: recursion, orthogonality, two evaluation
routes for permutation-set class functions, Kronecker products."""

from __future__ import annotations

import itertools
import math

import pytest

from schurgrid.characters import (
    CharacterVector,
    char_from_signed_formula,
    char_vector,
    character_table,
    class_size,
    kronecker,
    mn_character,
    schur_from_char_vector,
    sign_twist,
    signed_char_vector,
    z_of,
)
from schurgrid.permutations import des_set, inverse
from schurgrid.qsym import SchurExpansion, qsym_of, schur_expand
from schurgrid.tableaux import (
    conjugate_partition,
    count_syt,
    partitions,
    straight_shape,
)


def cycle_type_of(w):
    seen = [False] * len(w)
    parts = []
    for start in range(len(w)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = w[i] - 1
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def test_centralizer_orders_and_class_sizes():
    assert z_of((2, 2, 1)) == 8
    assert z_of((5,)) == 5
    assert z_of((1, 1, 1)) == 6
    with pytest.raises(ValueError):
        z_of((0, 1))
    for n in range(1, 8):
        assert sum(class_size(rho) for rho in partitions(n)) == math.factorial(n)


def test_class_sizes_by_enumeration():
    for n in range(1, 6):
        brute = {}
        for w in itertools.permutations(range(1, n + 1)):
            t = cycle_type_of(w)
            brute[t] = brute.get(t, 0) + 1
        for rho in partitions(n):
            assert class_size(rho) == brute[rho]


def test_character_table_degree_3_frozen():
    table = character_table(3)
    cols = partitions(3)  # ((3,), (2, 1), (1, 1, 1))
    assert cols == ((3,), (2, 1), (1, 1, 1))
    assert table[(3,)] == (1, 1, 1)
    assert table[(2, 1)] == (-1, 0, 2)
    assert table[(1, 1, 1)] == (1, -1, 1)


def test_character_first_column_is_tableau_count():
    for n in range(1, 8):
        for lam in partitions(n):
            assert mn_character(lam, (1,) * n) == count_syt(straight_shape(lam))


def test_character_orthogonality():
    for n in range(1, 7):
        parts = partitions(n)
        weights = [class_size(rho) for rho in parts]
        table = character_table(n)
        for lam in parts:
            for nu in parts:
                inner = sum(
                    w * a * b
                    for w, a, b in zip(weights, table[lam], table[nu])
                )
                assert inner == (math.factorial(n) if lam == nu else 0)


def test_conjugate_shape_twists_by_sign():
    for n in range(1, 7):
        for lam in partitions(n):
            for rho in partitions(n):
                sign = (-1) ** (n - len(rho))
                assert mn_character(conjugate_partition(lam), rho) == sign * mn_character(
                    lam, rho
                )


def test_character_values_by_permutation_matrices():
    # chi^lambda(rho) summed over an exact construction: the number of
    # fixed points of rho acting on words gives the permutation character
    # sum_mu K_mu chi^mu; checking the regular-representation column
    # instead keeps it elementary: sum_lam f^lam * chi^lam(rho) vanishes
    # off the identity class.
    for n in range(1, 7):
        for rho in partitions(n):
            total = sum(
                count_syt(straight_shape(lam)) * mn_character(lam, rho)
                for lam in partitions(n)
            )
            expected = math.factorial(n) if rho == (1,) * n else 0
            assert total == expected


def test_character_vector_wrapping():
    v = CharacterVector(3, (1, 2, 3))
    assert v.value((1, 2)) == 2
    assert v.value((2, 1)) == 2
    assert v.degree() == 3
    with pytest.raises(ValueError):
        CharacterVector(3, (1, 2))


def test_schur_round_trip_through_class_functions():
    for n in range(1, 7):
        for lam in partitions(n):
            e = SchurExpansion.single(lam)
            assert schur_from_char_vector(char_vector(e)) == e


def test_schur_from_char_vector_rejects_non_characters():
    bad = CharacterVector(2, (1, 0))  # half a regular character
    with pytest.raises(ValueError):
        schur_from_char_vector(bad)


def test_kronecker_frozen_values():
    triv = SchurExpansion.single((4,))
    sign = SchurExpansion.single((1, 1, 1, 1))
    hook = SchurExpansion.single((2, 1, 1))
    assert kronecker(triv, hook) == hook
    assert kronecker(sign, hook) == SchurExpansion.single((3, 1))
    assert sign_twist(hook) == SchurExpansion.single((3, 1))
    two_one = SchurExpansion.single((2, 1))
    assert kronecker(two_one, two_one).serialize() == "s[3] + s[2,1] + s[1,1,1]"
    with pytest.raises(ValueError):
        kronecker(triv, two_one)


def test_kronecker_dimensions_multiply():
    for n in range(2, 6):
        for lam in partitions(n):
            for nu in partitions(n):
                prod = kronecker(
                    SchurExpansion.single(lam), SchurExpansion.single(nu)
                )
                assert prod.dimension() == count_syt(
                    straight_shape(lam)
                ) * count_syt(straight_shape(nu))


# ---------------------------------------------------------------------------
# Signed descent-sum evaluation versus the recursion route
# ---------------------------------------------------------------------------


def test_signed_formula_on_single_ribbon_class():
    # The inverse descent class of the empty set is {identity}; its
    # expansion is the trivial character.
    for n in range(1, 6):
        ident = [tuple(range(1, n + 1))]
        for rho in partitions(n):
            assert char_from_signed_formula(ident, rho) == 1


def test_signed_formula_matches_recursion_on_inverse_descent_classes():
    from schurgrid.permsets import inv_descent_class
    from schurgrid.permutations import DescSet

    for n in range(1, 7):
        for r in range(n):
            for members in itertools.combinations(range(1, n), r):
                cls = inv_descent_class(n, DescSet.of(n, members))
                e = schur_expand(qsym_of(cls, n))
                assert isinstance(e, SchurExpansion)
                expected = char_vector(e)
                got = signed_char_vector(cls, n)
                assert got == expected, (n, members)


def test_signed_formula_validates_input():
    with pytest.raises(ValueError):
        char_from_signed_formula([], (2, 1))
    assert char_from_signed_formula([], (2, 1), n=3) == 0
    with pytest.raises(ValueError):
        char_from_signed_formula([(1, 2)], (3,))
