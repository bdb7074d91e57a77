"""Decompositions and the closed forms C, S and f."""

import pytest

from src.errors import EdgeCountError, NegativeRadicandError
from src.exact_core import (
    WINNER_C,
    WINNER_S,
    WINNER_TIE,
    binom2,
    co_decompose,
    complement_transfer,
    f_exact,
    is_subtle,
    isqrt,
    triangular_decompose,
    value_C,
    value_S,
    winner,
)
from tests.conftest import small_grid


@pytest.mark.parametrize("x, expected", [(0, 0), (1, 1), (48, 6), (49, 7), (10 ** 40, 10 ** 20)])
def test_isqrt(x, expected):
    assert isqrt(x) == expected


def test_isqrt_floor_property_on_large_values():
    for x in (2 ** 200 - 1, 3 ** 150, 10 ** 60 + 12345):
        v = isqrt(x)
        assert v * v <= x < (v + 1) * (v + 1)


def test_isqrt_rejects_negative():
    with pytest.raises(NegativeRadicandError, match="negative radicand"):
        isqrt(-1)


@pytest.mark.parametrize("x, expected", [(0, 0), (1, 0), (5, 10), (1000, 499500)])
def test_binom2(x, expected):
    assert binom2(x) == expected


@pytest.mark.parametrize("m, r, q", [(0, 1, 0), (1, 2, 0), (7, 4, 1), (10, 5, 0), (250000, 707, 429)])
def test_triangular_decompose(m, r, q):
    tri = triangular_decompose(m)
    assert (tri.r, tri.q) == (r, q)


def test_triangular_decompose_invariant_for_every_small_m():
    for m in range(5000):
        tri = triangular_decompose(m)
        assert 0 <= tri.q < tri.r
        assert binom2(tri.r) + tri.q == m


@pytest.mark.slow
def test_triangular_decompose_invariant_up_to_a_million():
    for m in range(5000, 10 ** 6 + 1):
        tri = triangular_decompose(m)
        assert 0 <= tri.q < tri.r, m
        assert binom2(tri.r) + tri.q == m, m


def test_triangular_decompose_rejects_negative():
    with pytest.raises(EdgeCountError):
        triangular_decompose(-1)


@pytest.mark.parametrize("n, m, s, t", [(5, 4, 4, 0), (5, 10, 1, 0), (5, 6, 3, 1), (1000, 250000, 706, 635)])
def test_co_decompose(n, m, s, t):
    co = co_decompose(n, m)
    assert (co.s, co.t) == (s, t)


def test_co_decompose_rejects_too_many_edges():
    with pytest.raises(EdgeCountError, match="edge count exceeds binom"):
        co_decompose(5, 11)


@pytest.mark.parametrize("n, m, expected", [(3, 3, 12), (6, 7, 44), (5, 0, 0), (5, 4, 18), (5, 6, 36),
                                            (1000, 250000, 353184470)])
def test_value_C(n, m, expected):
    assert value_C(n, m) == expected


@pytest.mark.parametrize("n, m, expected", [(5, 4, 20), (5, 6, 34), (4, 6, 36), (5, 0, 0),
                                            (1000, 250000, 353197860)])
def test_value_S(n, m, expected):
    assert value_S(n, m) == expected


@pytest.mark.parametrize("n, m, expected", [(5, 4, 20), (4, 6, 36), (5, 6, 36), (1, 0, 0),
                                            (1000, 250000, 353197860)])
def test_f_exact(n, m, expected):
    assert f_exact(n, m) == expected


@pytest.mark.parametrize("n, m, expected", [(5, 4, WINNER_S), (5, 6, WINNER_C), (4, 6, WINNER_TIE)])
def test_winner(n, m, expected):
    assert winner(n, m) == expected


@pytest.mark.parametrize("n, m", [(0, 0), (5, 11), (5, -1)])
def test_invalid_counts_raise(n, m):
    with pytest.raises(EdgeCountError):
        f_exact(n, m)


def test_f_is_the_max_of_both_forms_and_never_below_either():
    for n, m in small_grid(25):
        f = f_exact(n, m)
        assert f == max(value_C(n, m), value_S(n, m))
        assert f >= value_C(n, m) and f >= value_S(n, m)


def test_complete_graph_values():
    for n in range(1, 40):
        full = binom2(n)
        expected = n * (n - 1) ** 2
        assert value_C(n, full) == expected
        assert value_S(n, full) == expected


@pytest.mark.parametrize("n, m, f_of_m, expected", [(5, 0, 0, 80), (4, 0, 0, 36)])
def test_complement_transfer_examples(n, m, f_of_m, expected):
    assert complement_transfer(n, m, f_of_m) == expected


def test_complement_transfer_fixes_self_complementary_count():
    f = f_exact(5, 5)
    assert complement_transfer(5, 5, f) == f


def test_complement_transfer_lands_on_f_of_the_co_count():
    for n, m in small_grid(30):
        assert complement_transfer(n, m, f_exact(n, m)) == f_exact(n, binom2(n) - m)


@pytest.mark.parametrize("n, m, expected", [(10, 22, True), (10, 10, False), (5, 5, True), (5, 0, False)])
def test_is_subtle(n, m, expected):
    assert is_subtle(n, m) is expected
