"""Exhaustive oracle against the closed form."""

import pytest

from src.errors import OracleCapExceededError
from src.exact_core import binom2, complement_transfer, f_exact
from src.oracle import BruteForceOracle, brute_force_max, brute_force_sweep


@pytest.mark.parametrize("n, m, expected", [(5, 4, 20), (3, 3, 12), (6, 0, 0), (1, 0, 0), (6, 7, 44)])
def test_brute_force_max(n, m, expected):
    result = brute_force_max(n, m)
    assert result.max_value == expected
    assert result.witness.sum_of_squares == expected
    assert result.witness.edge_count == m
    assert result.witness.is_graphical()


def test_sweep_small_values():
    assert [r.max_value for r in brute_force_sweep(3)] == [0, 2, 6, 12]
    assert [r.max_value for r in brute_force_sweep(1)] == [0]


@pytest.mark.parametrize("n", range(1, 7))
def test_sweep_matches_closed_form(n):
    results = brute_force_sweep(n)
    assert [r.m for r in results] == list(range(binom2(n) + 1))
    for r in results:
        assert r.max_value == f_exact(n, r.m)
        assert r.witness.sum_of_squares == r.max_value
        assert r.witness.edge_count == r.m


def test_complement_orientation_against_oracle():
    for n in range(1, 7):
        maxima = [r.max_value for r in brute_force_sweep(n)]
        full = binom2(n)
        for m in range(full + 1):
            assert complement_transfer(n, m, maxima[m]) == maxima[full - m]


def test_small_chunks_give_the_same_maxima():
    oracle = BruteForceOracle(chunk_size=7)
    assert [r.max_value for r in oracle.sweep(5)] == [f_exact(5, m) for m in range(11)]
    assert oracle.max(5, 4).max_value == 20


def test_cap_is_enforced():
    with pytest.raises(OracleCapExceededError, match="oracle cap exceeded"):
        brute_force_max(9, 3, allow_large=True)
    with pytest.raises(OracleCapExceededError, match="oracle cap exceeded"):
        brute_force_sweep(8)
    with pytest.raises(OracleCapExceededError):
        BruteForceOracle(cap=4).max(5, 2)


def test_allow_large_lifts_the_configured_cap():
    assert BruteForceOracle(cap=4, allow_large=True).max(5, 4).max_value == 20


def test_parallel_sweep_matches_serial():
    serial = [r.max_value for r in BruteForceOracle(chunk_size=1 << 10).sweep(6)]
    parallel = [r.max_value for r in BruteForceOracle(chunk_size=1 << 10, jobs=2).sweep(6)]
    assert parallel == serial


@pytest.mark.slow
def test_sweep_matches_closed_form_at_seven():
    for r in brute_force_sweep(7):
        assert r.max_value == f_exact(7, r.m)


@pytest.mark.slow
def test_sweep_matches_closed_form_at_eight():
    oracle = BruteForceOracle(allow_large=True, jobs=4)
    for r in oracle.sweep(8):
        assert r.max_value == f_exact(8, r.m)
