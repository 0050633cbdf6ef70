import itertools

import pytest
from hypothesis import given, strategies as st

from galois_locus.fields import make_field
from galois_locus.geometry import (ProjLine, ProjPoint, change_coordinates, enumerate_lines,
                                   enumerate_plane, incident, join, line, meet, pencil_lines,
                                   point)
from galois_locus.polys import HomPoly3

F2, F3, F9 = make_field(2, 1), make_field(3, 1), make_field(3, 2)


@pytest.mark.parametrize("F,n", [(F2, 7), (F3, 13), (F9, 91)])
def test_enumerate_plane_counts(F, n):
    pts = enumerate_plane(F)
    assert len(pts) == n == len(set(pts))
    assert len(enumerate_lines(F)) == n


def test_normalization_and_equality():
    assert point(F3, 2, 1, 0) == point(F3, 1, 2, 0)
    assert hash(point(F3, 0, 2, 2)) == hash(point(F3, 0, 1, 1))
    assert point(F3, 1, 0, 0) != line(F3, 1, 0, 0)
    with pytest.raises(ValueError):
        point(F3, 0, 0, 0)


def test_join_meet_examples():
    assert join(point(F3, 1, 0, 0), point(F3, 0, 1, 0)) == line(F3, 0, 0, 1)
    assert join(point(F3, 1, 1, 0), point(F3, 0, 0, 1)) == line(F3, 1, -1, 0)
    assert meet(line(F3, 1, 0, 0), line(F3, 0, 1, 0)) == point(F3, 0, 0, 1)
    assert meet(line(F3, 1, 0, 0), line(F3, 0, 0, 1)) == point(F3, 0, 1, 0)
    with pytest.raises(ValueError):
        join(point(F3, 1, 0, 0), point(F3, 2, 0, 0))


codes9 = st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8)).filter(any)


@given(codes9, codes9)
def test_join_meet_incidence(a, b):
    P, R = ProjPoint.from_codes(F9, a), ProjPoint.from_codes(F9, b)
    if P == R:
        return
    L = join(P, R)
    assert incident(P, L) and incident(R, L)
    M = ProjLine.from_codes(F9, a)
    N = ProjLine.from_codes(F9, b)
    X = meet(M, N)
    assert M.contains(X) and N.contains(X)


@given(codes9, st.integers(0, 8), st.integers(0, 8))
def test_line_parameter_roundtrip(c, s, t):
    L = ProjLine.from_codes(F9, c)
    if not (s or t):
        return
    P = L.point_at(s, t)
    assert L.contains(P)
    par = L.parameter_of(P)
    assert L.point_at(*par.c) == P


def test_pencil_examples():
    lines = pencil_lines(point(F2, 0, 0, 1))
    assert set(lines) == {line(F2, 1, 0, 0), line(F2, 0, 1, 0), line(F2, 1, 1, 0)}
    for P in enumerate_plane(F3)[::4]:
        pen = pencil_lines(P)
        assert len(pen) == 4
        for a, b in itertools.combinations(pen, 2):
            assert meet(a, b) == P


def test_pencil_partitions_plane():
    plane = enumerate_plane(F9)
    for P in plane[::17]:
        pen = pencil_lines(P)
        assert len(pen) == 10
        covered = {R for R in plane for L in pen if L.contains(R)}
        assert covered == set(plane)
        for R in plane:
            if R != P:
                assert sum(L.contains(R) for L in pen) == 1


def test_pencil_requires_rational_center():
    P = point(F9, 1, F9.gen, 0)
    with pytest.raises(ValueError):
        pencil_lines(P, F3)


def test_change_coordinates_identity_and_swap():
    I = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    P = point(F9, 1, 2, 5)
    L = line(F9, 0, 1, 7)
    assert change_coordinates(I, P, F9) == P
    assert change_coordinates(I, L, F9) == L
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert change_coordinates(swap, line(F3, 1, 0, 0), F3) == line(F3, 0, 1, 0)
    with pytest.raises(ValueError):
        change_coordinates([[1, 0, 0], [1, 0, 0], [0, 0, 1]], P, F9)


@given(st.lists(st.integers(0, 8), min_size=9, max_size=9), codes9, codes9)
def test_change_coordinates_preserves_incidence_and_forms(m, pc, lc):
    M = [m[0:3], m[3:6], m[6:9]]
    P = ProjPoint.from_codes(F9, pc)
    L = ProjLine.from_codes(F9, lc)
    try:
        P2 = change_coordinates(M, P, F9)
    except ValueError:
        return
    L2 = change_coordinates(M, L, F9)
    assert L.contains(P) == L2.contains(P2)
    X, Y, Z = (HomPoly3.variable(F9, i) for i in range(3))
    G = X * Y + Z * Z
    G2 = change_coordinates(M, G, F9)
    assert (G.eval_codes(*P.c) == 0) == (G2.eval_codes(*P2.c) == 0)


def test_normalizing_a_flag(herm9):
    from galois_locus import linalg
    from galois_locus.curves import tangent_line

    C = herm9.curve
    P = C.rational_points()[5]
    T = tangent_line(C, P)
    A, B = T.parametrization_codes()
    other = next(R for R in (A, B) if ProjPoint.from_codes(F9, R) != P)
    third = next(R.c for R in enumerate_plane(F9) if not T.contains(R))
    # columns: a point off T, a second point of T, then P; the inverse
    # sends P to (0:0:1) and T to X = 0
    N = [[third[r], other[r], P.c[r]] for r in range(3)]
    Minv = linalg.inverse3(F9, N)
    assert change_coordinates(Minv, P, F9) == point(F9, 0, 0, 1)
    assert change_coordinates(Minv, T, F9) == line(F9, 1, 0, 0)
    D = change_coordinates(Minv, C.F, F9)
    assert D.eval_codes(0, 0, 1) == 0
