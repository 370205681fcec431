import numpy as np
import pytest

from powersums.errors import NotPrimitive
from powersums.finite_field import (
    ExtensionField,
    PrimeField,
    build_field,
    dlog_table,
    element_order,
    is_irreducible,
)
from powersums.numtheory import PrimePower


def pp(p, k=1):
    return PrimePower(p, k, p**k)


def test_gf8_canonical_modulus_and_reduction():
    f8 = build_field(pp(2), 3)
    # first primitive cubic over Z_2 in counting order
    assert f8.modulus_poly == (1, 1, 0, 1)  # x^3 + x + 1
    x = f8.generator
    assert (x * x * x).coeffs == (1, 1, 0)  # x^3 = x + 1, reduced by hand
    assert element_order(x) == 7


def test_prime_field_degree_one():
    f3 = build_field(pp(3), 1)
    assert isinstance(f3, PrimeField)
    assert f3.order == 3
    a = f3.element(2)
    assert (a * a).raw == 1


def test_gf16_tower_over_gf4():
    f16 = build_field(pp(2, 2), 2)
    assert isinstance(f16, ExtensionField)
    assert f16.base.order == 4
    assert f16.order == 16
    assert element_order(f16.generator) == 15


def test_gf9_generator_is_primitive():
    f9 = build_field(pp(3), 2)
    assert element_order(f9.generator) == 8
    # without the primitivity requirement the first irreducible wins
    first = build_field(pp(3), 2, primitive_generator=False)
    assert first.modulus_poly == (1, 0, 1)  # x^2 + 1, x has order 4
    assert element_order(first.generator) == 4


@pytest.mark.parametrize("field_args", [(pp(2), 3), (pp(3), 2), (pp(5), 2), (pp(2, 2), 2)])
def test_field_axioms_random_triples(field_args):
    ctx = build_field(*field_args)
    rng = np.random.default_rng(hash(field_args) % 2**32)
    elems = list(ctx.iter_raws())
    for _ in range(1000):
        a, b, c = (elems[i] for i in rng.integers(0, len(elems), size=3))
        assert ctx.radd(a, b) == ctx.radd(b, a)
        assert ctx.rmul(a, b) == ctx.rmul(b, a)
        assert ctx.rmul(a, ctx.rmul(b, c)) == ctx.rmul(ctx.rmul(a, b), c)
        assert ctx.rmul(a, ctx.radd(b, c)) == ctx.radd(ctx.rmul(a, b), ctx.rmul(a, c))
        if a != ctx.zero_raw:
            assert ctx.rmul(a, ctx.rinv(a)) == ctx.one_raw
            assert ctx.rpow(a, ctx.mult_order) == ctx.one_raw  # Lagrange


@pytest.mark.parametrize("field_args", [(pp(2), 3), (pp(3), 2), (pp(7), 2)])
def test_frobenius_additivity(field_args):
    ctx = build_field(*field_args)
    p = ctx.char
    rng = np.random.default_rng(5)
    elems = list(ctx.iter_raws())
    for _ in range(200):
        a, b = (elems[i] for i in rng.integers(0, len(elems), size=2))
        lhs = ctx.rpow(ctx.radd(a, b), p)
        rhs = ctx.radd(ctx.rpow(a, p), ctx.rpow(b, p))
        assert lhs == rhs


@pytest.mark.parametrize("field_args", [(pp(3), 2), (pp(2, 2), 2), (pp(5), 3)])
def test_subfield_elements_fixed_by_frobenius_power(field_args):
    ctx = build_field(*field_args)
    q = ctx.base.order
    for raw in ctx.base.iter_raws():
        emb = ctx.embed(raw)
        assert ctx.rpow(emb, q) == emb


def test_element_orders_divide_group_order():
    ctx = build_field(pp(3), 2)
    for a in ctx.elements():
        if a.is_zero():
            continue
        assert ctx.mult_order % element_order(a) == 0
    assert element_order(ctx.one) == 1


def brute_force_order(ctx, raw):
    acc = raw
    for k in range(1, ctx.order):
        if acc == ctx.one_raw:
            return k
        acc = ctx.rmul(acc, raw)
    raise AssertionError("no order found")


@pytest.mark.parametrize("field_args", [(pp(2), 3), (pp(3), 2)])
def test_element_order_matches_exhaustive_powers(field_args):
    ctx = build_field(*field_args)
    for a in ctx.elements():
        if a.is_zero():
            continue
        assert element_order(a) == brute_force_order(ctx, a.raw)


def test_inverse_of_zero_raises():
    ctx = build_field(pp(2), 3)
    with pytest.raises(ZeroDivisionError):
        ctx.zero.inv()
    with pytest.raises(ZeroDivisionError):
        element_order(ctx.zero)


def test_dlog_table_basics():
    ctx = build_field(pp(2, 2), 1)  # GF(4) with primitive x
    theta = ctx.generator
    table = dlog_table(ctx, theta)
    assert table[ctx.one] == 0
    assert table[theta] == 1
    assert table[theta * theta] == 2
    assert len(table) == 3


def test_dlog_table_full_and_consistent():
    ctx = build_field(pp(3), 2)
    theta = ctx.generator
    table = dlog_table(ctx, theta)
    assert len(table) == ctx.mult_order
    for i in (0, 1, 5, 7):
        assert table[theta**i] == i


def test_dlog_rejects_non_primitive():
    ctx = build_field(pp(3), 2, primitive_generator=False)  # x has order 4
    with pytest.raises(NotPrimitive):
        dlog_table(ctx, ctx.generator)


def test_is_irreducible_against_brute_force_over_z2():
    # oracle: a cubic over Z_2 is reducible iff it has a root or factors
    # into irreducible quadratic times linear; root check suffices for deg 3
    z2 = PrimeField(2)
    for enc in range(8):
        c = (enc & 1, (enc >> 1) & 1, (enc >> 2) & 1)
        f = (*c, 1)
        def value(x):
            return (c[0] + c[1] * x + c[2] * x * x + x**3) % 2
        has_root = value(0) == 0 or value(1) == 0
        assert is_irreducible(z2, f) == (not has_root)


def test_higher_degree_irreducibility():
    z2 = PrimeField(2)
    # x^4 + x + 1 is irreducible over Z_2; x^4 + x^2 + 1 = (x^2+x+1)^2 is not
    assert is_irreducible(z2, (1, 1, 0, 0, 1))
    assert not is_irreducible(z2, (1, 0, 1, 0, 1))
    # GF(32) needs a quintic: the builder must find one and x must generate
    f32 = build_field(pp(2, 5), 1)
    assert f32.order == 32
    assert element_order(f32.generator) == 31


def test_explicit_modulus_constructor_validates():
    z2 = PrimeField(2)
    gf8 = ExtensionField(z2, (1, 1, 0, 1))
    assert gf8.order == 8
    with pytest.raises(ValueError):
        ExtensionField(z2, (1, 0, 0, 1))  # x^3 + 1 has root 1


def test_element_wrapper_operations():
    ctx = build_field(pp(5), 2)
    a = ctx.element(7)
    b = ctx.element(13)
    assert (a + b - b) == a
    assert (a * b / b) == a
    assert a + 0 == a
    assert a * 1 == a
    assert (a - a).is_zero()
    two = ctx.element([2, 0])
    assert two + 3 == ctx.element([0, 0])  # integer embeds mod p
