import pytest
from hypothesis import given, strategies as st

from galois_locus.fields import enumerate_field, make_field
from galois_locus.geometry import ProjLine, enumerate_lines
from galois_locus.parametrized import RationalMap
from galois_locus.polys import (BinForm, HomPoly3, P1Point, ParseError, UniPoly, binform_divide,
                                binform_gcd, derivative, enumerate_p1, implicitize,
                                implicitize_by_coefficients, parse_binform, parse_hompoly,
                                root_multiplicity, roots_by_enumeration, roots_over_extension,
                                substitute_line, uni_gcd)

F3, F5, F7, F9 = (make_field(3, 1), make_field(5, 1), make_field(7, 1), make_field(3, 2))


def U(F, *coeffs):
    return UniPoly(F, list(coeffs))


def test_gcd_examples():
    assert uni_gcd(U(F5, -1, 0, 1), U(F5, -1, 1)) == U(F5, -1, 1)
    x = UniPoly.x(F7)
    c = F7(3)
    f = (x - c) ** 3
    assert uni_gcd(f, f.derivative()) == (x - c) ** 2


def test_gcd_char3_expansion():
    s = UniPoly.x(F3)
    f = (s + 1) ** 4 - s ** 4
    assert f == s ** 3 + s + 1
    assert f.derivative() == U(F3, 1)
    assert uni_gcd(f, f.derivative()) == U(F3, 1)


def test_gcd_zero_error():
    with pytest.raises(ValueError):
        uni_gcd(U(F3), U(F3))


def test_root_multiplicity_examples():
    x = UniPoly.x(F7)
    assert root_multiplicity((x - 1) ** 3 * (x + 1), F7(1)) == 3
    f = U(F3, 1, 1, 0, 1)  # x^3 + x + 1
    assert [root_multiplicity(f, a) for a in enumerate_field(F3)] == [0, 1, 0]
    assert f(F3(1)) == F3(0) and f.derivative()(F3(1)) == F3(1)
    assert root_multiplicity(U(F7, 5), F7(2)) == 0
    with pytest.raises(ValueError):
        root_multiplicity(U(F7), F7(2))


def test_root_multiplicity_in_extension():
    f = U(F3, 1, 0, 1)  # x^2 + 1
    i = [a for a in enumerate_field(F9) if a * a == F9(-1)][0]
    assert root_multiplicity(f, i) == 1


def test_roots_over_extension_examples():
    s4 = U(F3, 0, 0, 0, 0, 1)
    assert [(r.code, m) for r, m in roots_over_extension(s4, 1)] == [(0, 4)]
    f = U(F3, 1, 0, 1)
    assert roots_over_extension(f, 1) == []
    r2 = roots_over_extension(f, 2)
    assert len(r2) == 2 and all(m == 1 for _, m in r2)
    for q, F in [(5, F5), (9, F9)]:
        xq = UniPoly(F, [0, -1] + [0] * (q - 2) + [1])
        roots = roots_over_extension(xq, 1)
        assert len(roots) == q and all(m == 1 for _, m in roots)


@pytest.mark.parametrize("p,k", [(2, 4), (3, 2), (5, 1), (2, 9), (3, 6)])
def test_roots_match_enumeration_oracle(p, k):
    F = make_field(p, k)

    @given(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=5),
           st.lists(st.integers(1, 3), min_size=1, max_size=5),
           st.integers(0, F.q - 1))
    def check(roots, mults, extra):
        f = UniPoly(F, [1])
        for r, m in zip(roots, mults):
            f = f * UniPoly.from_codes(F, [F.neg(r), 1]) ** m
        f = f * UniPoly.from_codes(F, [extra, 0, 1])
        fast = [(r.code, m) for r, m in f.roots()]
        slow = [(r.code, m) for r, m in roots_by_enumeration(f)]
        assert sorted(fast) == sorted(slow)
        assert sum(m for _, m in fast) <= f.degree

    check()


def test_root_multiplicity_matches_synthetic_division():
    F = make_field(5, 1)

    @given(st.lists(st.integers(0, 4), min_size=1, max_size=7), st.integers(0, 4))
    def check(coeffs, a):
        f = UniPoly(F, coeffs + [1])
        m = root_multiplicity(f, F(a))
        lin = UniPoly(F, [-a, 1])
        assert (f % lin ** m).is_zero()
        assert not (f % lin ** (m + 1)).is_zero()
        assert (m >= 1) == (f(F(a)) == F(0))

    check()


def test_squarefree_profile_inseparable():
    # x^3 - a has a triple root in characteristic 3
    f = U(F9, 2, 0, 0, 1)
    assert f.multiplicity_profile() == [3]


def test_substitute_line_linear_form():
    F = F3
    Y = HomPoly3.variable(F, 1)
    line = ProjLine(F, [0, 0, 1])  # Z = 0, parametrized (s:t) -> (s:t:0)
    B = substitute_line(Y, line)
    assert B == BinForm.t(F)


def test_substitute_line_hermitian_tangent(herm9):
    from galois_locus.curves import tangent_line

    C = herm9.curve
    for P in C.rational_points()[:6]:
        B = substitute_line(C.F, tangent_line(C, P))
        assert B.multiplicity_profile() == [4]
        assert B.root_multiplicity(tangent_line(C, P).parameter_of(P)) == 4


def test_substitute_line_contained_line_is_zero():
    F = F3
    X, Y, Z = (HomPoly3.variable(F, i) for i in range(3))
    reducible = X * (Y * Y - X * Z)
    assert substitute_line(reducible, ProjLine(F, [1, 0, 0])).is_zero()


def test_derivative_examples():
    F2 = make_field(2, 1)
    t4 = UniPoly(F2, [0, 0, 0, 0, 1])
    assert derivative(t4).is_zero()
    s = UniPoly.x(F3)
    assert derivative((s + 1) ** 4 - s ** 4) == U(F3, 1)
    X, Y, Z = (HomPoly3.variable(F9, i) for i in range(3))
    H = X ** 3 * Z + X * Z ** 3 - Y ** 4
    assert derivative(H, "Z") == X ** 3


def _random_uni(F, draw_coeffs):
    return UniPoly.from_codes(F, draw_coeffs)


def test_derivative_linear_and_leibniz():
    F = F9
    coeffs = st.lists(st.integers(0, 8), max_size=6)

    @given(coeffs, coeffs, st.integers(0, 8))
    def check(a, b, c):
        f, g = UniPoly.from_codes(F, a), UniPoly.from_codes(F, b)
        lam = F.element(c)
        assert (f + g * lam).derivative() == f.derivative() + g.derivative() * lam
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()

    check()


def test_hompoly_homogeneity():
    F = F9
    X, Y, Z = (HomPoly3.variable(F, i) for i in range(3))
    H = X ** 3 * Z + X * Z ** 3 - Y ** 4

    @given(st.integers(1, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
    def check(lam, x, y, z):
        val = H.eval_codes(x, y, z)
        scaled = H.eval_codes(F.mul(lam, x), F.mul(lam, y), F.mul(lam, z))
        assert scaled == F.mul(F.pow(lam, 4), val)

    check()
    assert all(sum(e) == 4 for e in H.terms)


def test_binform_gcd_and_division():
    s, t = BinForm.s(F3), BinForm.t(F3)
    a = (s + t) ** 2 * t
    b = (s + t) * s * t
    g = binform_gcd(a, b)
    assert g == ((s + t) * t).normalized()
    assert binform_divide(a, g) * g == a
    with pytest.raises(ValueError):
        binform_divide(s * s, s + t)


def test_enumerate_p1_order():
    pts = enumerate_p1(F3)
    assert pts[0] == P1Point(F3, 0, 1)
    assert [p.c for p in pts[1:]] == [(1, 0), (1, 1), (1, 2)]


def test_implicitize_line():
    F = F3
    s, t = BinForm.s(F), BinForm.t(F)
    pi = RationalMap((s, t, BinForm.from_codes(F, 1, [])))
    assert implicitize(pi, 1) == HomPoly3.variable(F, 2)


def test_implicitize_ballico_hefez(bh3):
    pi = bh3.parametrization
    G = implicitize(pi, 4)
    assert G.compose(pi.components).is_zero()
    oracle = implicitize_by_coefficients(pi, 4)
    assert len(oracle) == 1
    a = next(iter(G.terms.values()))
    b = oracle[0].terms[next(iter(G.terms))]
    F = G.field
    assert G == oracle[0] * F.element(F.div(a, b))


def test_implicitize_cuspidal_cubic():
    F = make_field(5, 1)
    s, t = BinForm.s(F), BinForm.t(F)
    pi = RationalMap((s ** 3, s * t * t, t ** 3))
    G = implicitize(pi, 3)
    X, Y, Z = (HomPoly3.variable(F, i) for i in range(3))
    target = Y ** 3 - X * Z * Z
    lead = G.terms[(0, 3, 0)]
    assert G == target * F.element(lead)


def test_implicitize_wrong_degree_errors():
    F = make_field(5, 1)
    s, t = BinForm.s(F), BinForm.t(F)
    pi = RationalMap((s ** 3, s * t * t, t ** 3))
    with pytest.raises(ValueError):
        implicitize(pi, 4)  # kernel of dimension > 1


def test_bezout_for_lines_hermitian(herm9):
    from galois_locus.curves import bezout_line_sum

    C = herm9.curve
    for ell in enumerate_lines(F9)[::7]:
        total, m = bezout_line_sum(C, ell)
        assert total == 4


def test_parse_polynomials():
    H = parse_hompoly("X^3*Z + X*Z^3 - Y^4", F9)
    assert set(H.terms) == {(3, 0, 1), (1, 0, 3), (0, 4, 0)}
    B = parse_binform("(s+t)^4", F3)
    assert B == (BinForm.s(F3) + BinForm.t(F3)) ** 4
    assert parse_hompoly("g*X + Y", F9).terms[(1, 0, 0)] == F9.gen.code
    with pytest.raises(ParseError) as err:
        parse_hompoly("X^2 + Y", F3)
    assert "homogeneous" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_hompoly("X + * Y", F3, line=4)
    assert err.value.line == 4 and err.value.column > 1
