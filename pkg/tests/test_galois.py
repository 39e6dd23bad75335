"""Field tower tests with independently derived expected values."""

import pytest

from matroidfrag import (
    DegreeCap,
    DivisionByZero,
    FieldMismatch,
    InvalidArgs,
    InvalidField,
    NotASubfield,
    embed,
    extend_field,
    field_from_tower,
    field_of_order,
    is_in_subfield,
    is_irreducible,
    is_tower_prefix,
    make_prime_field,
    subfield_basis,
)

GF2 = make_prime_field(2)
GF3 = make_prime_field(3)
GF4 = extend_field(GF2, 2)
GF8 = extend_field(GF2, 3)
GF9 = extend_field(GF3, 2)
GF16_OVER_GF4 = extend_field(GF4, 2)


def check_axioms(F):
    # exhaustive, so keep orders small
    elems = list(range(F.order))
    add, mul, neg = F.add_enc, F.mul_enc, F.neg_enc
    for a in elems:
        assert add(a, 0) == a
        assert mul(a, 1) == a
        assert mul(a, 0) == 0
        assert add(a, neg(a)) == 0
        if a:
            assert mul(a, F.inv_enc(a)) == 1
    for a in elems:
        for b in elems:
            assert add(a, b) == add(b, a)
            assert mul(a, b) == mul(b, a)
    for a in elems:
        for b in elems:
            for c in elems:
                assert add(add(a, b), c) == add(a, add(b, c))
                assert mul(mul(a, b), c) == mul(a, mul(b, c))
                assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


def test_axioms_small_orders():
    for q in (2, 3, 4, 5, 7, 8, 9):
        check_axioms(field_of_order(q))


def test_canonical_moduli_frozen():
    # lex-least monic irreducibles, constant term first, leading 1 last
    assert GF4.steps == ((2, (1, 1, 1)),)
    assert GF8.steps == ((3, (1, 0, 1, 1)),)
    assert GF9.steps == ((2, (1, 0, 1)),)
    assert GF16_OVER_GF4.steps == ((2, (1, 1, 1)), (2, (1, 2, 1)))


def _poly_mul(F, f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = F.add_enc(out[i + j], F.mul_enc(a, b))
    return tuple(out)


def _monic_polys(F, deg):
    from itertools import product

    for tail in product(range(F.order), repeat=deg):
        yield (*tail, 1)


def test_moduli_irreducible_by_brute_force():
    # independent check: no monic factorization reproduces the modulus
    for F in (GF4, GF8, GF9, GF16_OVER_GF4):
        base = F.base
        k, modulus = F.steps[-1]
        for d in range(1, k):
            for g in _monic_polys(base, d):
                for h in _monic_polys(base, k - d):
                    assert _poly_mul(base, g, h) != modulus


def test_moduli_lex_least():
    for F in (GF4, GF8, GF9):
        base = F.base
        k, modulus = F.steps[-1]
        for cand in _monic_polys(base, k):
            if cand == modulus:
                break
            assert not is_irreducible(base, cand)


def test_gf4_multiplication_table():
    # encodings 0, 1, w, w+1; w*w = w+1 under x^2+x+1
    assert GF4.mul_enc(2, 2) == 3
    assert GF4.mul_enc(2, 3) == 1
    assert GF4.mul_enc(3, 3) == 2
    assert GF4.add_enc(2, 3) == 1


def test_gf8_generator_relation():
    # modulus x^3 + x^2 + 1, so t^3 = t^2 + 1, encoded 4 + 1 = 5
    t = GF8.gen
    assert t.enc == 2
    assert (t * t * t).enc == 5
    assert (t * t * t + t * t + 1).enc == 0


def test_gf9_generator_relation():
    # modulus x^2 + 1, so t^2 = -1 = 2
    t = GF9.gen
    assert t.enc == 3
    assert (t * t).enc == 2
    assert GF9.add_enc(1, 2) == 0


def test_gf16_over_gf4_generator_relation():
    # modulus x^2 + w x + 1 over GF(4); t^2 = -(1 + w t) = 1 + w t
    F = GF16_OVER_GF4
    t = F.gen
    assert t.enc == 4
    w = embed(GF4.elem(2), F)
    assert t * t == F.one + w * t


def test_char_and_frobenius():
    for F in (GF4, GF8):
        for a in F.elements():
            assert (a + a).enc == 0
    for a in GF9.elements():
        assert (a + a + a).enc == 0
    # x -> x^p is additive
    for a in GF9.elements():
        for b in GF9.elements():
            assert (a + b) ** 3 == a**3 + b**3


def test_multiplicative_order():
    for F in (GF4, GF8, GF9, GF16_OVER_GF4):
        for a in F.elements():
            if a.enc:
                assert (a ** (F.order - 1)).enc == 1


def test_from_int_vs_elem():
    F5 = make_prime_field(5)
    assert F5.from_int(7).enc == 2
    assert F5.from_int(-1).enc == 4
    # from_int reduces mod p even in extensions; elem takes raw encodings
    assert GF4.from_int(2).enc == 0
    assert GF4.elem(2).enc == 2


def test_elem_encoding_range():
    with pytest.raises(InvalidArgs):
        GF4.elem(4)
    with pytest.raises(InvalidArgs):
        GF4.elem(-1)


def test_operator_coercion_and_mismatch():
    a = GF9.elem(5)
    assert (1 + a) == GF9.one + a
    assert (0 * a).enc == 0
    assert (a - a).enc == 0
    assert (a / a).enc == 1
    with pytest.raises(FieldMismatch):
        _ = a + GF3.one


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF4.inv_enc(0)
    with pytest.raises(ZeroDivisionError):
        _ = GF4.one / GF4.zero


def test_embedding_image_matches_frobenius_fixed_points():
    for sub, sup in ((GF2, GF4), (GF3, GF9), (GF4, GF16_OVER_GF4)):
        image = {embed(a, sup).enc for a in sub.elements()}
        fixed = {a.enc for a in sup.elements() if is_in_subfield(a, sub)}
        assert image == fixed
        assert len(image) == sub.order


def test_embedding_is_a_homomorphism():
    for sub, sup in ((GF2, GF4), (GF3, GF9), (GF4, GF16_OVER_GF4)):
        for a in sub.elements():
            for b in sub.elements():
                assert embed(a + b, sup) == embed(a, sup) + embed(b, sup)
                assert embed(a * b, sup) == embed(a, sup) * embed(b, sup)


def test_embed_requires_tower_prefix():
    assert is_tower_prefix(GF2, GF8)
    assert not is_tower_prefix(GF4, GF8)
    with pytest.raises(NotASubfield):
        embed(GF4.one, GF8)
    with pytest.raises(NotASubfield):
        is_in_subfield(GF8.gen, GF4)


def test_subfield_basis():
    assert tuple(e.enc for e in subfield_basis(GF4, GF2)) == (1, 2)
    assert tuple(e.enc for e in subfield_basis(GF16_OVER_GF4, GF4)) == (1, 4)
    assert tuple(e.enc for e in subfield_basis(GF9, GF9)) == (1,)
    with pytest.raises(NotASubfield):
        subfield_basis(GF16_OVER_GF4, GF2)


def test_subfield_basis_spans():
    # every element of GF(16) is a0 + a1 t with a0, a1 in GF(4)
    F = GF16_OVER_GF4
    one, t = subfield_basis(F, GF4)
    seen = set()
    for a0 in GF4.elements():
        for a1 in GF4.elements():
            seen.add((embed(a0, F) * one + embed(a1, F) * t).enc)
    assert seen == set(range(16))


def test_field_of_order():
    assert field_of_order(7).p == 7
    assert field_of_order(7).steps == ()
    assert field_of_order(8) is GF8
    assert field_of_order(9) is GF9
    for bad in (0, 1, 6, 12):
        with pytest.raises(InvalidField):
            field_of_order(bad)


def test_interning():
    assert extend_field(GF2, 2) is GF4
    assert field_from_tower(2, [(2, (1, 1, 1))]) is GF4
    assert extend_field(GF4, 1) is GF4


def test_tower_validation():
    with pytest.raises(InvalidField):
        field_from_tower(2, [(2, (1, 1))])  # too few coefficients
    with pytest.raises(InvalidField):
        field_from_tower(2, [(2, (1, 1, 0))])  # not monic
    with pytest.raises(InvalidField):
        field_from_tower(2, [(2, (0, 0, 1))])  # x^2 is reducible
    with pytest.raises(InvalidField):
        make_prime_field(4)


def test_degree_and_characteristic_caps():
    with pytest.raises(DegreeCap):
        extend_field(GF2, 17)
    with pytest.raises(DegreeCap):
        field_of_order(2**17)
    with pytest.raises(DegreeCap):
        extend_field(make_prime_field(17), 2)
    assert extend_field(GF2, 17, degree_cap=17).degree == 17


def test_coeffs_view():
    # encoding 6 in GF(8) is t^2 + t
    a = GF8.elem(6)
    assert tuple(c.enc for c in a.coeffs) == (0, 1, 1)
    assert GF2.one.coeffs == ()


def test_is_irreducible_input_validation():
    assert is_irreducible(GF2, (1, 1, 1))
    assert not is_irreducible(GF2, (1, 0, 1))  # (x+1)^2
    assert not is_irreducible(GF2, (1, 0, 1, 0, 1))  # (x^2+x+1)^2, no roots
    with pytest.raises(InvalidArgs):
        is_irreducible(GF2, (1,))
    with pytest.raises(InvalidArgs):
        is_irreducible(GF3, (1, 1, 2))  # not monic
