import pytest
from hypothesis import given, strategies as st

from galois_locus.curves import multiplicity, singular_points, tangent_line
from galois_locus.fields import enumerate_field, extension, make_field
from galois_locus.geometry import ProjLine, enumerate_plane, line, point
from galois_locus.parametrized import (INFINITE_ORDER, ParametrizationError, RationalMap,
                                       branch_ramification, branch_tangent, compose_projection,
                                       covering_fiber_form, evaluate, fiber, fiber_profile,
                                       fiber_size, local_expansion_order, ramification_points)
from galois_locus.polys import BinForm, P1Point, enumerate_p1

F3, F5, F9 = make_field(3, 1), make_field(5, 1), make_field(3, 2)


def st_forms(F):
    return BinForm.s(F), BinForm.t(F)


def test_rational_map_validation():
    s, t = st_forms(F3)
    with pytest.raises(ParametrizationError):
        RationalMap((s * t, s * s, s * (s + t)))
    with pytest.raises(ParametrizationError):
        RationalMap((s, t * t, t))
    with pytest.raises(ParametrizationError):
        RationalMap((s,))


def test_evaluate_examples(bh3):
    pi = bh3.parametrization
    assert evaluate(pi, P1Point(F3, 1, 0)) == point(F3, 1, 1, 0)
    assert evaluate(pi, P1Point(F3, 0, 1)) == point(F3, 0, 1, 1)
    s, t = st_forms(F3)
    emb = RationalMap((s, t, BinForm.from_codes(F3, 1, [])))
    assert evaluate(emb, P1Point(F3, 1, 2)) == point(F3, 1, 2, 0)


def test_fibers_of_ballico_hefez(bh3):
    pi, C = bh3.parametrization, bh3.curve
    sing = {r.point for r in singular_points(C, 1)}
    for Q in enumerate_plane(F3):
        if not C.contains(Q):
            assert fiber(pi, Q, 2) == [] and fiber_size(pi, Q) == 0
            continue
        n = len(fiber(pi, Q, 2))
        assert n == fiber_size(pi, Q) == multiplicity(C, Q)
        assert n == (2 if Q in sing else 1)
        if Q not in sing:
            assert len(fiber(pi, Q, 1)) == 1


def test_branch_tangent_formula(bh3):
    pi = bh3.parametrization
    for t0 in enumerate_field(F9):
        a = (t0 + 1) ** 3
        expected = ProjLine(F9, [t0**3 * a, -(t0**3), a])
        assert branch_tangent(pi, P1Point(F9, 1, t0)) == expected
    assert branch_tangent(pi, P1Point(F3, 1, 0)) == line(F3, 0, 0, 1)


def test_branch_tangent_matches_implicit_tangent(bh3):
    pi, C = bh3.parametrization, bh3.curve
    for b in enumerate_p1(F3):
        assert branch_tangent(pi, b) == tangent_line(C, evaluate(pi, b))


def test_branch_tangent_rank_error():
    s, t = st_forms(F5)
    cusp = RationalMap((s**3, s * t * t, t**3))
    with pytest.raises(ParametrizationError):
        branch_tangent(cusp, P1Point(F5, 1, 0))


def test_compose_projection_examples(bh3):
    pi = bh3.parametrization
    s, t = st_forms(F3)
    phi = compose_projection(pi, point(F3, 1, 1, 0))
    assert phi.degree == 3
    assert phi.components == (s**3 + s * t * t + t**3, t**3)
    # the same pair from ((s+t)^4 - s^4 : t^4) by cancelling t
    raw = ((s + t) ** 4 - s**4, t**4)
    assert raw[0] == phi.components[0] * t and raw[1] == phi.components[1] * t
    off = next(Q for Q in enumerate_plane(F3) if not bh3.curve.contains(Q))
    assert compose_projection(pi, off).degree == 4
    emb = RationalMap((s, t, BinForm.from_codes(F3, 1, [])))
    assert compose_projection(emb, point(F3, 0, 0, 1)).degree == 1


def test_compose_projection_singular_center(bh3):
    pi, C = bh3.parametrization, bh3.curve
    for rec in singular_points(C, 1):
        assert compose_projection(pi, rec.point).degree == 4 - rec.multiplicity


def test_branch_ramification_examples(bh3):
    s, t = st_forms(F3)
    phi = RationalMap((s**3 + s * t * t + t**3, t**3))
    assert [branch_ramification(phi, P1Point(F3, 1, t0)) for t0 in range(3)] == [3, 1, 1]
    assert branch_ramification(phi, P1Point(F3, 0, 1)) == 1
    F7 = make_field(7, 1)
    s7, t7 = st_forms(F7)
    kummer = RationalMap((s7**3, t7**3))
    assert branch_ramification(kummer, P1Point(F7, 1, 0)) == 3
    assert branch_ramification(kummer, P1Point(F7, 0, 1)) == 3
    assert branch_ramification(kummer, P1Point(F7, 1, 1)) == 1
    with pytest.raises(ParametrizationError):
        branch_ramification(bh3.parametrization, P1Point(F3, 1, 0))


def test_fiber_sum_over_gf27():
    s, t = st_forms(F3)
    phi = RationalMap((s**3 + s * t * t + t**3, t**3))
    W = extension(F3, 3)
    for w in enumerate_p1(W):
        assert sum(fiber_profile(phi, w)) == 3
    assert fiber_profile(phi, P1Point(F3, 1, 0)) == [3]
    ram = ramification_points(phi, 1)
    assert list(ram) == [P1Point(F3, 1, 0)]
    assert ram[P1Point(F3, 1, 0)] == [(P1Point(F3, 1, 0), 3)]


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_fiber_sum_property(a, b, c, d):
    """Ramification indices over a target sum to the degree."""
    s, t = st_forms(F9)
    u = (s + t.scale(a)) ** 2 * s.scale(b or 1) + t**3
    v = s**3 + (s * t * t).scale(c) + t**3
    try:
        phi = RationalMap((u, v))
    except ParametrizationError:
        return
    w = P1Point.from_codes(F9, *((1, d) if a % 2 else (d, 1)))
    G = covering_fiber_form(phi, w)
    if G.is_zero():
        return
    assert sum(G.multiplicity_profile()) == phi.degree
    for pt, e in G.roots():
        assert branch_ramification(phi, pt) == e


def test_local_expansion_order(bh3):
    pi = bh3.parametrization
    for b in enumerate_p1(F3):
        T = branch_tangent(pi, b)
        assert local_expansion_order(pi, b, T) == 4
    b = P1Point(F9, 1, F9.gen)
    assert local_expansion_order(pi, b, branch_tangent(pi, b)) == 3
    Q = evaluate(pi, P1Point(F3, 0, 1))
    other = next(L for L in enumerate_plane(F3) if not ProjLine(F3, L.c).contains(Q))
    assert local_expansion_order(pi, P1Point(F3, 0, 1), ProjLine(F3, other.c)) == 0
    through = [ProjLine.from_codes(F3, L.c) for L in enumerate_plane(F3)]
    through = [L for L in through if L.contains(Q) and L != branch_tangent(pi, P1Point(F3, 0, 1))]
    assert all(local_expansion_order(pi, P1Point(F3, 0, 1), L) == 1 for L in through)
    s, t = st_forms(F3)
    emb = RationalMap((s, t, BinForm.from_codes(F3, 1, [])))
    assert local_expansion_order(emb, P1Point(F3, 1, 0), (0, 0, 1)) == INFINITE_ORDER
