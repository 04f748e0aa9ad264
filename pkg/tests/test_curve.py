import itertools

import pytest

from hermlift.curve import (
    HermitianCurve,
    all_lines,
    enumerate_points,
    intersection_count,
    is_on_curve,
    line_poly,
    line_roots,
    lines_through,
    make_line,
)
from hermlift.polyring import UniPoly

from conftest import curve, field

Z = 3


@pytest.mark.parametrize("p,l,n", [(3, 1, 27), (2, 2, 64), (5, 1, 125), (2, 1, 8)])
def test_point_count(p, l, n):
    assert len(enumerate_points(field(p, l))) == n


def test_points_ordered_and_on_curve(F9):
    pts = enumerate_points(F9)
    assert [(P.y, P.x) for P in pts] == sorted((P.y, P.x) for P in pts)
    assert all(is_on_curve(F9, P.x, P.y) for P in pts)
    assert [P.index for P in pts] == list(range(27))
    assert is_on_curve(F9, 0, 0)
    assert {(P.x, P.y) for P in pts if P.y == 0} == {(0, 0), (Z, 0), (2 * Z, 0)}


def test_points_against_brute_force(F81):
    F = F81
    q = F.q
    brute = [(x, y) for y in F.elements() for x in F.elements()
             if F.add(F.add(F.pow(x, q), x), F.pow(y, q + 1)) == 0]
    assert [(P.x, P.y) for P in enumerate_points(F)] == brute


def test_line_poly_examples(F9):
    assert line_poly(make_line(F9, 0, 0)) == UniPoly.monomial(F9, 4)
    assert line_poly(make_line(F9, 1, 0)) == UniPoly(F9, [0, 1, 0, 1, 1])


def test_intersection_examples(F9):
    assert intersection_count(make_line(F9, 0, 0)) == 1
    assert intersection_count(make_line(F9, 0, 1)) == 4


def test_roots_land_on_curve_exhaustive(F9):
    for line in all_lines(F9):
        for t in line_roots(line):
            assert is_on_curve(F9, *line(t))
        assert intersection_count(line) in (1, 4)
        assert (intersection_count(line) == 1) == line.tangent


def test_make_line_check_cross_validates(F9):
    for a, b in itertools.product(range(9), repeat=2):
        make_line(F9, a, b, check=True)


def test_lines_through_points(H3):
    F = H3.field
    for P in H3.points:
        lines = lines_through(F, P)
        assert len(lines) == 9
        assert sum(L.tangent for L in lines) == 1
        for L in lines:
            assert L(P.y) == (P.x, P.y)


def test_secants_through_a_point_share_only_it(H3):
    F = H3.field
    for P in H3.points:
        sec = [L for L in lines_through(F, P) if not L.tangent]
        for L1, L2 in itertools.combinations(sec, 2):
            assert set(H3.line_points(L1)) & set(H3.line_points(L2)) == {P.index}


def test_incidence_matches_root_scan(H3):
    for L in H3.lines:
        assert H3.points_on(L.alpha, L.beta) == sorted(H3.line_points(L), key=lambda i: H3.points[i].y)


def test_uncached_incidence_path(monkeypatch):
    import hermlift.curve as cm

    H = HermitianCurve(field(3, 1))
    ref = curve(3, 1)
    monkeypatch.setattr(cm, "INCIDENCE_CACHE_MAX_Q", 1)
    for a in range(9):
        for b in range(9):
            assert H.points_on(a, b) == ref.points_on(a, b)
