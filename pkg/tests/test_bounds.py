"""De Caen's bound, the sharp bound, the radical bounds and BoundReport."""

import json
from fractions import Fraction

import pytest

from src.bound_suite import (
    SHARP_DENSE,
    SHARP_SPARSE,
    Ordering,
    Surd,
    asymptotic_de_caen_ratio,
    build_bound_report,
    de_caen_D,
    radical_below_de_caen_range,
    radical_bounds,
    sharp_below_de_caen_range,
    sharp_bound_branch,
    sharp_bound_F,
    surd_cmp,
)
from src.errors import EdgeCountError, UndefinedBoundError


@pytest.mark.parametrize("n, m, expected", [
    (3, 3, 12),
    (5, 4, 20),
    (5, 0, 0),
    (5, 6, 36),
    (1000, 250000, Fraction(374250500000, 999)),
])
def test_de_caen_D(n, m, expected):
    assert de_caen_D(n, m) == expected


def test_de_caen_D_undefined_for_one_vertex():
    with pytest.raises(UndefinedBoundError, match="de Caen bound undefined"):
        de_caen_D(1, 0)


@pytest.mark.parametrize("n, m, expected, branch", [
    (2, 1, Surd(0, 1, 8), SHARP_DENSE),
    (5, 6, Surd(-5, 1, 2197), SHARP_SPARSE),
    (4, 6, Surd(0, 1, 1728), SHARP_DENSE),
    (5, 4, Surd(-45, 17, 17), SHARP_SPARSE),
    (7, 0, Surd(0), SHARP_SPARSE),
])
def test_sharp_bound_F(n, m, expected, branch):
    assert sharp_bound_F(n, m) == expected
    assert sharp_bound_branch(n, m) == branch


def test_sharp_bound_rejects_bad_counts():
    with pytest.raises(EdgeCountError):
        sharp_bound_F(5, 11)


def test_radical_bounds_complete_graph_is_tight():
    bounds = radical_bounds(4, 6)
    assert bounds.lower == 24
    assert bounds.upper == 36
    assert bounds.applies


def test_radical_bounds_triangle():
    bounds = radical_bounds(3, 3)
    assert (bounds.lower, bounds.upper, bounds.applies) == (6, 12, True)


def test_radical_bounds_range():
    assert not radical_bounds(5, 2).applies
    assert radical_bounds(7, 11).applies


@pytest.mark.parametrize("n, m, expected", [(10, 20, True), (5, 6, False), (100, 1000, True), (1, 0, False)])
def test_radical_below_de_caen_range(n, m, expected):
    assert radical_below_de_caen_range(n, m) is expected


@pytest.mark.parametrize("n, m, expected", [(100, 2000, True), (100, 900, False), (1000, 250000, True),
                                            (100, 4950, False), (100, 0, False)])
def test_sharp_below_de_caen_range(n, m, expected):
    assert sharp_below_de_caen_range(n, m) is expected


def test_asymptotic_ratio():
    limit = asymptotic_de_caen_ratio()
    assert (limit.numerator.p, limit.numerator.c, limit.numerator.k) == (0, 3, 2)
    assert limit.denominator == 4
    assert float(limit) == pytest.approx(1.0606601717798212, rel=1e-12)


def test_de_caen_ratio_sits_just_above_its_limit():
    limit = asymptotic_de_caen_ratio()
    ratio = build_bound_report(1000, 250000).ratio
    # 4 * D/f against 3*sqrt(2), exactly
    assert surd_cmp(limit.denominator * ratio, limit.numerator) is Ordering.GREATER
    assert surd_cmp(limit.denominator * Fraction(106, 100), limit.numerator) is Ordering.LESS


def test_bound_report_keeps_both_sharp_formulas():
    report = build_bound_report(5, 6)
    assert report.F_dense == Surd.power_three_halves(12)
    assert report.F_sparse == Surd(-5, 1, 13 ** 3)
    assert report.F == max(report.F_dense, report.F_sparse)


def test_bound_report_fields():
    report = build_bound_report(5, 6)
    assert (report.C, report.S, report.f, report.winner) == (36, 34, 36, "C")
    assert report.D == 36
    assert report.F == Surd(-5, 13, 13)
    assert report.radical_applies
    assert report.radical_upper == 36
    assert not report.radical_below_de_caen_range
    assert report.ratio == 1


def test_bound_report_display_values():
    shown = build_bound_report(5, 6).display_values()
    assert shown == {
        'D_display': '36',
        'F_display': '41.8722',
        'radical_lo_display': '24',
        'radical_hi_display': '36',
        'ratio_display': '1',
    }


def test_bound_report_empty_graph():
    report = build_bound_report(5, 0)
    assert (report.f, report.D, report.F) == (0, 0, 0)
    assert report.ratio is None


def test_bound_report_single_vertex_marks_D_undefined():
    report = build_bound_report(1, 0)
    assert report.f == 0
    assert report.D is None
    assert report.display_values()['D_display'] == 'undefined'


def test_bound_report_to_dict_is_json_ready():
    data = json.loads(json.dumps(build_bound_report(1000, 250000).to_dict()))
    assert data['f'] == 353197860
    assert data['D'] == {'num': 374250500000, 'den': 999}
    assert data['F']['k'] == 500000 ** 3
    assert data['sharp_branch'] == SHARP_DENSE
    assert 1.060 <= float(data['ratio_display']) <= 1.062
