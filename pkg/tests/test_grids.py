"""Geometric grid classes: matrix text forms, symmetries, enumeration
versus membership predicates, resource budgeting."""

from __future__ import annotations

import itertools

import pytest

from schurgrid.grids import (
    GridMatrix,
    GridResourceError,
    arc_matrices,
    complement_matrix,
    consistent_orientation,
    diagonal_reflect_matrix,
    enumerate_grid,
    fig_matrix,
    format_grid_matrix,
    format_sign_vector,
    grid_budget,
    identity_matrix,
    inverse_sign_vector,
    is_arc,
    is_colayered,
    is_left_unimodal,
    j_matrix,
    k_matrix,
    left_unimodal_matrix,
    minus_member,
    one_column_matrix,
    one_column_member,
    parse_grid_matrix,
    parse_sign_vector,
    plus_member,
    reflect_matrix_horizontal,
    reflect_matrix_vertical,
    refine_matrix,
    rotate180_matrix,
    star_product,
    stack_matrix,
    zigzag_matrix,
    zigzag_member,
)
from schurgrid.permutations import inverse


def all_perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def sign_vectors(max_len, min_len=1):
    for k in range(min_len, max_len + 1):
        yield from itertools.product((1, -1), repeat=k)


# ---------------------------------------------------------------------------
# Matrix text forms and symmetries
# ---------------------------------------------------------------------------


def test_parse_format_round_trip():
    for text in ("+", "-", "0+", "+0/0-", "0+/-0/+-", "+0/0+/-0/0-"):
        m = parse_grid_matrix(text)
        assert format_grid_matrix(m) == text
    with pytest.raises(ValueError):
        parse_grid_matrix("+x")
    with pytest.raises(ValueError):
        parse_grid_matrix("+0/+")  # ragged rows


def test_sign_vector_text_forms():
    assert parse_sign_vector("-+") == (-1, 1)
    assert format_sign_vector((-1, 1)) == "-+"
    with pytest.raises(ValueError):
        parse_sign_vector("+0")


def test_named_matrices_frozen():
    assert format_grid_matrix(j_matrix()) == "0+/+0/+0/0+"
    assert format_grid_matrix(k_matrix()) == "+0/0+/-0/0-"
    a1, a2 = arc_matrices()
    assert format_grid_matrix(a1) == "+0/-0/0-/0+"
    assert format_grid_matrix(a2) == "0-/0+/+0/-0"
    assert format_grid_matrix(fig_matrix()) == "0+/-0/+-"
    assert format_grid_matrix(identity_matrix(2)) == "+0/0+"
    assert format_grid_matrix(zigzag_matrix(2)) == "+0/0+/+0/0+"
    assert format_grid_matrix(left_unimodal_matrix()) == "+/-"
    assert format_grid_matrix(one_column_matrix((-1, 1))) == "+/-"


def test_matrix_transform_involutions():
    for text in ("0+/-0/+-", "+0/0+", "+-"):
        m = parse_grid_matrix(text)
        assert complement_matrix(complement_matrix(m)) == m
        assert rotate180_matrix(rotate180_matrix(m)) == m
        assert reflect_matrix_horizontal(reflect_matrix_horizontal(m)) == m
        assert reflect_matrix_vertical(reflect_matrix_vertical(m)) == m
        assert rotate180_matrix(m) == reflect_matrix_horizontal(
            reflect_matrix_vertical(m)
        )


def test_matrix_transforms_act_on_classes():
    # Complementing the picture complements every drawn pattern; the
    # left-right flip reverses them; the half turn does both.
    n = 4
    for m in (fig_matrix(), one_column_matrix((1, 1))):
        base = enumerate_grid(m, n)
        complemented = enumerate_grid(complement_matrix(m), n)
        assert complemented == frozenset(
            tuple(n + 1 - v for v in w) for w in base
        )
        mirrored = enumerate_grid(reflect_matrix_horizontal(m), n)
        assert mirrored == frozenset(tuple(reversed(w)) for w in base)
        rotated = enumerate_grid(rotate180_matrix(m), n)
        assert rotated == frozenset(
            tuple(n + 1 - v for v in reversed(w)) for w in base
        )
    # The all-increasing two-cell class is genuinely asymmetric, so the
    # assertions above are not vacuous.
    m = one_column_matrix((1, 1))
    assert enumerate_grid(m, n) != enumerate_grid(complement_matrix(m), n)


def test_diagonal_reflection_inverts_patterns():
    for text in ("+0/0+", "0+/-0/+-", "+-"):
        m = parse_grid_matrix(text)
        base = enumerate_grid(m, 4)
        inverted = enumerate_grid(diagonal_reflect_matrix(m), 4)
        assert inverted == frozenset(inverse(w) for w in base)


def test_consistent_orientation_and_refinement():
    oriented = consistent_orientation(parse_grid_matrix("+0/0+"))
    assert oriented is not None
    row_sign, col_sign = oriented
    assert len(row_sign) == 2 and len(col_sign) == 2
    # Signs must factor as row*column; this square has an odd sign cycle.
    clash = parse_grid_matrix("++/+-")
    assert consistent_orientation(clash) is None
    refined = refine_matrix(clash)
    assert consistent_orientation(refined) is not None
    for n in range(0, 5):
        assert enumerate_grid(clash, n) == enumerate_grid(refined, n)


# ---------------------------------------------------------------------------
# Enumeration versus membership predicates
# ---------------------------------------------------------------------------


def test_one_column_enumeration_matches_predicate():
    for v in sign_vectors(3):
        matrix = one_column_matrix(v)
        for n in range(0, 6):
            enumerated = enumerate_grid(matrix, n)
            brute = frozenset(
                w for w in itertools.permutations(range(1, n + 1))
                if one_column_member(w, v)
            )
            assert enumerated == brute, (v, n)


def test_plus_minus_classes_match_predicates():
    for k in range(1, 4):
        for n in range(1, 6):
            plus = enumerate_grid(one_column_matrix((1,) * k), n)
            assert plus == frozenset(
                w for w in all_perms(n) if plus_member(w, k)
            )
            minus = enumerate_grid(one_column_matrix((-1,) * k), n)
            assert minus == frozenset(
                w for w in all_perms(n) if minus_member(w, k)
            )


def test_left_unimodal_matches_predicate():
    for n in range(0, 7):
        enumerated = enumerate_grid(left_unimodal_matrix(), n)
        assert enumerated == frozenset(
            w for w in itertools.permutations(range(1, n + 1))
            if is_left_unimodal(w)
        )
        assert len(enumerated) == (2 ** (n - 1) if n else 1)


def test_colayered_matches_predicate():
    for k in range(1, 5):
        for n in range(1, 6):
            enumerated = enumerate_grid(identity_matrix(k), n)
            assert enumerated == frozenset(
                w for w in all_perms(n) if is_colayered(w, k)
            )


def test_arc_union_matches_predicate():
    a1, a2 = arc_matrices()
    for n in range(1, 7):
        union = enumerate_grid(a1, n) | enumerate_grid(a2, n)
        assert union == frozenset(w for w in all_perms(n) if is_arc(w))


def test_zigzag_matches_predicate():
    for k in range(1, 4):
        for n in range(1, 6):
            enumerated = enumerate_grid(zigzag_matrix(k), n)
            assert enumerated == frozenset(
                w for w in all_perms(n) if zigzag_member(w, k)
            )


def test_zigzag_one_strip_is_the_cyclic_class():
    from schurgrid.permsets import cyclic_class

    for n in range(1, 7):
        assert enumerate_grid(zigzag_matrix(1), n) == cyclic_class(n)


# ---------------------------------------------------------------------------
# Sign-vector algebra
# ---------------------------------------------------------------------------


def test_inverse_sign_vector_reverses_and_negates():
    assert inverse_sign_vector((1, -1, -1)) == (1, 1, -1)
    for v in sign_vectors(4):
        assert inverse_sign_vector(inverse_sign_vector(v)) == v


def test_star_product_frozen_and_shapes():
    got = star_product((-1, 1), (1, -1, -1))
    assert format_sign_vector(got) == "++-+--"
    for v in sign_vectors(2):
        for w in sign_vectors(2):
            assert len(star_product(v, w)) == len(v) * len(w)


def test_stack_matrix_frozen():
    stacked = stack_matrix((-1, 1), identity_matrix(2))
    assert format_grid_matrix(stacked) == "+0/0+/0-/-0"


# ---------------------------------------------------------------------------
# Resource budgeting and caching
# ---------------------------------------------------------------------------


def test_budget_exceeded_raises(monkeypatch):
    monkeypatch.setenv("SCHURGRID_GRID_BUDGET", "100")
    assert grid_budget() == 100
    matrix = parse_grid_matrix("0-/+0/0-/+0")  # 4 cells, 4^4 = 256 words
    with pytest.raises(GridResourceError):
        enumerate_grid(matrix, 4)
    assert len(enumerate_grid(matrix, 4, override_budget=True)) > 0


def test_enumeration_uses_cache(monkeypatch):
    m = parse_grid_matrix("+0/0+")
    first = enumerate_grid(m, 5)
    monkeypatch.setenv("SCHURGRID_GRID_BUDGET", "1")
    # Cached result is served even though the budget would now forbid it.
    assert enumerate_grid(m, 5) is first


def test_empty_and_degenerate_cases():
    m = parse_grid_matrix("+")
    assert enumerate_grid(m, 0) == frozenset({()})
    assert enumerate_grid(m, 3) == frozenset({(1, 2, 3)})
    with pytest.raises(ValueError):
        enumerate_grid(m, -1)
