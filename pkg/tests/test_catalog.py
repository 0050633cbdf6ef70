import pytest

from galois_locus.catalog import BELOW_MIN_DEGREE, ballico_hefez, get_entry, hermitian, mutate
from galois_locus.curves import singular_points
from galois_locus.facts import verify_facts
from galois_locus.fields import make_field
from galois_locus.galois import Verdict, galois_locus
from galois_locus.geometry import enumerate_plane
from galois_locus.parametrized import fiber_size
from galois_locus.polys import BinForm, format_hompoly

F3 = make_field(3, 1)


def test_hermitian_entry(herm9):
    C = herm9.curve
    assert C.degree == 4 and herm9.field.q == 9
    assert set(C.F.terms) == {(3, 0, 1), (1, 0, 3), (0, 4, 0)}
    assert len(C.rational_points()) == 28
    assert singular_points(C, 1) == []
    with pytest.raises(ValueError):
        hermitian(4)
    with pytest.raises(ValueError):
        hermitian(27)


def test_klein_entry(klein):
    C = klein.curve
    assert C.degree == 4 and klein.field.q == 2
    assert singular_points(C, 3) == []
    assert len(C.rational_points()) == 0


def test_ballico_hefez_entry(bh3):
    pi, C = bh3.parametrization, bh3.curve
    assert pi.degree == 4 and C.degree == 4
    assert C.F.compose(pi.components).is_zero()
    sing = singular_points(C, 2)
    assert len(sing) == 3
    for rec in sing:
        assert rec.multiplicity == 2 and fiber_size(pi, rec.point) == 2
    bh4 = ballico_hefez(4)
    assert bh4.parametrization.degree == 5 and bh4.field.q == 4
    assert BELOW_MIN_DEGREE in ballico_hefez(2).notes


def test_get_entry():
    assert get_entry("klein").name == "klein"
    assert get_entry("hermitian").params == {"q": 9}
    assert get_entry("ballico-hefez", 4).params == {"q": 4}
    with pytest.raises(KeyError):
        get_entry("fermat")


def test_mutate_identity(bh3):
    assert mutate(bh3) is bh3.parametrization
    with pytest.raises(ValueError):
        mutate(hermitian(9), seed=0)


def test_mutate_equivalent_replacement(bh3):
    s, t = BinForm.s(F3), BinForm.t(F3)
    pi = mutate(bh3, replace={1: (s + t.scale(2)) ** 4})
    assert galois_locus(pi, m_max=2).flag


def test_mutate_generic_replacement(bh3):
    s, t = BinForm.s(F3), BinForm.t(F3)
    pi = mutate(bh3, replace={1: s * (s + t) ** 3})
    assert not galois_locus(pi, m_max=2).flag


def test_mutate_seeded_is_reproducible(bh3):
    a, b = mutate(bh3, seed=0), mutate(bh3, seed=0)
    assert a == b and a != bh3.parametrization
    res = galois_locus(a, m_max=2)
    assert not res.flag
    assert any(r.verdict is Verdict.NOT_GALOIS and r.certificate == "filter-witness"
               for r in res.reports)


@pytest.mark.parametrize("name,q", [("ballico-hefez", 3), ("ballico-hefez", 4),
                                    ("klein", None), ("hermitian", 9)])
def test_verify_facts_passes(name, q):
    ledger = verify_facts(get_entry(name, q))
    assert ledger.passed, "\n".join(c.line() for c in ledger.checks if not c.passed)
    names = [c.name for c in ledger.checks]
    assert any(n.startswith("Bezout") for n in names)
    assert any(n.startswith("deck sets are groups") for n in names)


def test_verify_facts_detects_a_broken_entry(bh3):
    # pretend the implicit curve of a mutated map belongs to the BH entry
    from dataclasses import replace

    from galois_locus.parametrized import implicit_curve

    s, t = BinForm.s(F3), BinForm.t(F3)
    pi = mutate(bh3, replace={1: s * (s + t) ** 3})
    broken = replace(bh3, curve=implicit_curve(pi), parametrization=pi)
    ledger = verify_facts(broken, m_max=2)
    assert not ledger.passed
    assert not next(c for c in ledger.checks if c.name.startswith("total flex")).passed


def test_catalog_equation_text(herm9):
    assert format_hompoly(herm9.curve.F) == "X^3*Z + X*Z^3 + 2*Y^4"
    assert len(enumerate_plane(herm9.field)) == 91
