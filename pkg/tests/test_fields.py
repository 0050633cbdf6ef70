import pickle

import pytest
from hypothesis import given, strategies as st

from galois_locus.fields import (FieldElement, FieldError, FieldSpec, K_MAX, common_field, embed,
                                 embedding_table, enumerate_field, extension, field_of_order,
                                 is_irreducible, make_field, parse_element, prime_power)

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]


def test_make_field_prime():
    F = make_field(2, 1)
    assert F.q == 2 and [x.code for x in enumerate_field(F)] == [0, 1]


def test_make_field_gf9_frobenius_order_two():
    F = make_field(3, 2)
    assert F.q == 9
    xs = enumerate_field(F)
    assert all(x.frobenius(2) == x for x in xs)
    assert any(x.frobenius(1) != x for x in xs)


def test_make_field_gf8_group_order():
    F = make_field(2, 3)
    assert all(x**7 == F.one for x in enumerate_field(F) if x)


@pytest.mark.parametrize("p,k", [(4, 1), (1, 2), (9, 1)])
def test_make_field_rejects_non_prime(p, k):
    with pytest.raises(FieldError):
        make_field(p, k)


@pytest.mark.parametrize("k", [0, K_MAX + 1])
def test_make_field_rejects_degree(k):
    with pytest.raises(FieldError):
        make_field(2, k)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        make_field(3, 2, [2, 0, 1])  # x^2 - 1


def test_default_modulus_is_smallest_irreducible():
    # smallest by the code sum c_i p^i over the non-leading coefficients
    for p, k in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        F = make_field(p, k)
        code = sum(c * p**i for i, c in enumerate(F.modulus[:-1]))
        for smaller in range(code):
            low = [(smaller // p**i) % p for i in range(k)]
            assert not is_irreducible(low + [1], p)
    assert make_field(3, 2).modulus_str() == "x^2+1"
    assert make_field(2, 3).modulus_str() == "x^3+x+1"


def test_construction_is_deterministic():
    assert make_field(3, 2) is make_field(3, 2)
    assert make_field(3, 2, [1, 0, 1]) is make_field(3, 2)
    assert pickle.loads(pickle.dumps(make_field(2, 4))) == make_field(2, 4)


def test_prime_power():
    assert prime_power(9) == (3, 2) and prime_power(7) == (7, 1)
    with pytest.raises(FieldError):
        prime_power(12)


@pytest.mark.parametrize("p,k", SMALL)
def test_enumerate_counts_and_fermat(p, k):
    F = make_field(p, k)
    xs = enumerate_field(F)
    assert len(set(xs)) == F.q
    assert all(x**F.q == x for x in xs)


def test_gf9_wilson():
    F = make_field(3, 2)
    prod = F.one
    for x in enumerate_field(F):
        if x:
            prod = prod * x
    assert prod == F(-1)


def test_gf4_cube_roots():
    F = make_field(2, 2)
    assert sum(1 for x in enumerate_field(F) if x and x**3 == F.one) == 3


@pytest.mark.parametrize("p,k", SMALL)
def test_frobenius_order_exactly_k(p, k):
    F = make_field(p, k)
    xs = enumerate_field(F)
    for j in range(1, k):
        assert any(x.frobenius(j) != x for x in xs)
    assert all(x.frobenius(k) == x for x in xs)
    for a in xs[:20]:
        for b in xs[:20]:
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()


def _elements(F):
    return st.integers(0, F.q - 1).map(F.element)


@pytest.mark.parametrize("p,k", [(2, 4), (3, 2), (5, 2), (7, 1), (2, 8)])
def test_field_axioms(p, k):
    F = make_field(p, k)

    @given(_elements(F), _elements(F), _elements(F))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == F.zero
        if a:
            assert a * a.inverse() == F.one
            assert (b / a) * a == b

    check()


def test_cross_field_arithmetic_is_an_error():
    a = make_field(3, 2).gen
    b = make_field(3, 4).gen
    with pytest.raises(FieldError):
        a + b


def test_embed_prime_subfield_identity():
    F3, F9 = make_field(3, 1), make_field(3, 2)
    assert embed(F3(2), F9) == F9(2)


def test_embed_gf4_into_gf16_order_three():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    g = embed(F4.gen, F16)
    assert g.multiplicative_order() == 3
    # the minimal polynomial x^2 + x + 1 of g maps to zero
    assert g * g + g + F16.one == F16.zero
    # oracle: order-3 elements of GF(16) found by scanning
    order3 = [x for x in enumerate_field(F16) if x and x.multiplicative_order() == 3]
    assert g in order3 and len(order3) == 2


def test_embed_identity():
    F9 = make_field(3, 2)
    assert all(embed(x, F9) == x for x in enumerate_field(F9))


def test_embed_requires_divisibility():
    with pytest.raises(FieldError):
        embed(make_field(2, 2).gen, make_field(2, 3))


@pytest.mark.parametrize("src,dst", [((2, 2), (2, 4)), ((2, 2), (2, 6)), ((3, 1), (3, 4)),
                                     ((3, 2), (3, 4)), ((2, 4), (2, 8)), ((2, 3), (2, 6))])
def test_embed_homomorphism_exhaustive(src, dst):
    S, T = make_field(*src), make_field(*dst)
    xs = enumerate_field(S)
    imgs = [embed(x, T) for x in xs]
    assert len(set(imgs)) == len(xs)
    for a in xs:
        for b in xs:
            assert embed(a * b, T) == embed(a, T) * embed(b, T)
            assert embed(a + b, T) == embed(a, T) + embed(b, T)


def test_embedding_memoized():
    S, T = make_field(3, 2), make_field(3, 4)
    assert embedding_table(S, T) is embedding_table(S, T)


def test_common_field_and_extension():
    assert common_field(make_field(2, 2), make_field(2, 3)) == make_field(2, 6)
    assert extension(field_of_order(9), 2) == make_field(3, 4)


@pytest.mark.parametrize("p,k", [(3, 2), (2, 4), (5, 2)])
def test_parse_format_round_trip(p, k):
    F = make_field(p, k)
    for x in enumerate_field(F):
        assert parse_element(F.format_code(x.code), F) == x


def test_parse_g_syntax():
    F = make_field(3, 2)
    assert parse_element("g^1+2", F) == F.gen + 2
    assert parse_element("2*g+1", F) == F.gen * 2 + 1
    assert isinstance(F, FieldSpec) and isinstance(F.gen, FieldElement)


@pytest.mark.parametrize("p,chain", [(2, (3, 6, 12)), (2, (1, 2, 4, 8)), (2, (2, 6, 12)),
                                     (3, (2, 4, 8)), (5, (1, 2, 4))])
def test_embeddings_commute_along_towers(p, chain):
    fields = [make_field(p, k, k_max=16) for k in chain]
    for i, A in enumerate(fields):
        for j in range(i + 1, len(fields)):
            for B_, C_ in [(fields[j], D) for D in fields[j + 1:]]:
                ab, bc, ac = (embedding_table(A, B_), embedding_table(B_, C_),
                              embedding_table(A, C_))
                assert all(bc[ab[x]] == ac[x] for x in range(A.q))
