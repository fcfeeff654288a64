import numpy as np
import pytest

from catalog import build_group
from galgebra import (
    AlgebraContext,
    ContextMismatchError,
    ElementParseError,
    ModularityError,
    NotNormalizedError,
    add,
    augmentation,
    class_sum,
    format_element,
    inverse_normalized,
    involution,
    is_central,
    is_orbit_constant,
    is_symmetric,
    mul,
    nilpotency_index,
    parse_element,
    random_element,
    random_normalized_unit,
)

SAMPLES = 1000


def el(ctx, text):
    return parse_element(ctx, text)


# ---------------------------------------------------------
# Context
# ---------------------------------------------------------

def test_context_caches(kq8):
    assert kq8.inversion_orbits == ((0,), (1, 3), (2,), (4, 6), (5, 7))
    assert len(kq8.class_sum_cache) == 5
    for cls, s in zip(kq8.conjugacy.classes, kq8.class_sum_cache):
        assert set(np.flatnonzero(s.coeffs)) == set(cls)
        assert all(s.coeffs[i] == 1 for i in cls)


@pytest.mark.parametrize("spec, p", [("q8", 3), ("c9", 2), ("c2", 4), ("c2", 1)])
def test_non_modular_pairs_are_rejected(spec, p):
    with pytest.raises(ModularityError):
        AlgebraContext(build_group(spec), p)


def test_trivial_group_pairs_with_any_prime():
    ctx = AlgebraContext(build_group("c1"), 5)
    assert ctx.one == ctx.element([1])


def test_large_characteristic_keeps_distinct_keys():
    ctx = AlgebraContext(build_group("c1"), 257)
    top = ctx.element([256])
    assert top != ctx.zero
    assert len({top, ctx.zero, ctx.one}) == 3
    assert sorted([top, ctx.one, ctx.zero]) == [ctx.zero, ctx.one, top]
    assert mul(top, top) == ctx.one


def test_characteristic_above_int32():
    p = 2 ** 31 - 1
    ctx = AlgebraContext(build_group("c1"), p)
    minus_one = ctx.element([p - 1])
    assert mul(minus_one, minus_one) == ctx.one
    assert minus_one * 2 == ctx.element([p - 2])


@pytest.mark.parametrize("p", [2 ** 61 - 1, 2 ** 89 - 1])
def test_characteristic_beyond_int64_is_rejected(p):
    with pytest.raises(ModularityError, match="too large"):
        AlgebraContext(build_group("c1"), p)


def test_context_mismatch(kq8, kd8):
    with pytest.raises(ContextMismatchError):
        add(kq8.one, kd8.one)
    with pytest.raises(ContextMismatchError):
        mul(kq8.one, kd8.one)


# ---------------------------------------------------------
# add / mul
# ---------------------------------------------------------

def test_add(kq8):
    x = el(kq8, "1 + a + b")
    assert add(x, kq8.zero) == x
    assert add(x, x) == kq8.zero
    assert el(kq8, "1 + a") + el(kq8, "a + b") == el(kq8, "1 + b")


def test_mul_embeds_the_group(kq8):
    G = kq8.group
    for g in range(8):
        for h in range(8):
            assert mul(kq8.embed(g), kq8.embed(h)) == kq8.embed(G.mul(g, h))


def test_mul_examples(kq8):
    b = el(kq8, "b")
    assert mul(b, b) == el(kq8, "a^2")
    x = el(kq8, "1 + a")
    assert mul(x, x) == el(kq8, "1 + a^2")


def test_mul_over_gf3():
    ctx = AlgebraContext(build_group("c3"), 3)
    x = el(ctx, "1 + g")
    # (1 + g)^2 = 1 + 2g + g^2
    assert mul(x, x) == el(ctx, "1 + 2*g + g^2")
    assert x ** 3 == el(ctx, "2")


# ---------------------------------------------------------
# Involution, augmentation, symmetry
# ---------------------------------------------------------

def test_involution_examples(kq8):
    assert involution(el(kq8, "a")) == el(kq8, "a^3")
    assert involution(el(kq8, "1 + a + b")) == el(kq8, "1 + a^3 + a^2*b")
    for k in range(5):
        s = class_sum(kq8, k)
        assert involution(s) == s


def test_augmentation_examples(kq8):
    for g in range(8):
        assert augmentation(kq8.embed(g)) == 1
    assert augmentation(el(kq8, "a + b")) == 0
    # alpha_0 = 1, alpha_1 = 0, gamma = (a + a^3) + (b + a^2*b)
    assert augmentation(el(kq8, "1 + a + a^3 + b + a^2*b")) == 1
    assert augmentation(el(kq8, "a^2 + a + a^3")) == 1


def test_symmetric_examples(kq8):
    assert is_symmetric(kq8.one)
    assert not is_symmetric(el(kq8, "a"))
    assert is_symmetric(el(kq8, "a + a^3"))


def test_central_examples(kq8):
    assert is_central(kq8.one)
    assert not is_central(el(kq8, "a"))
    assert is_central(el(kq8, "a^2"))
    assert is_central(el(kq8, "a + a^3"))


# ---------------------------------------------------------
# Class sums
# ---------------------------------------------------------

def test_class_sums(kq8):
    assert class_sum(kq8, 0) == kq8.one
    assert class_sum(kq8, 1) == el(kq8, "a + a^3")
    assert class_sum(kq8, 3) == el(kq8, "b + a^2*b")
    with pytest.raises(IndexError):
        class_sum(kq8, 5)


@pytest.mark.parametrize("spec", ["q8", "d8", "d16", "q8xc2", "c4xc2"])
def test_class_sums_are_central(spec):
    ctx = AlgebraContext(build_group(spec), 2)
    for k, cls in enumerate(ctx.conjugacy.classes):
        s = class_sum(ctx, k)
        assert is_central(s)
        if len(cls) == 1:
            assert s == ctx.embed(cls[0])
            assert cls[0] in ctx.center


# ---------------------------------------------------------
# Inverses of normalized units
# ---------------------------------------------------------

def test_inverse_examples(kq8):
    G = kq8.group
    assert inverse_normalized(kq8.one) == kq8.one
    for g in range(8):
        assert inverse_normalized(kq8.embed(g)) == kq8.embed(G.inv(g))
        assert involution(kq8.embed(g)) == inverse_normalized(kq8.embed(g))
    s = el(kq8, "1 + b + a^2*b")
    assert inverse_normalized(s) == s


def test_inverse_requires_augmentation_one(kq8):
    with pytest.raises(NotNormalizedError):
        inverse_normalized(kq8.zero)
    with pytest.raises(NotNormalizedError):
        inverse_normalized(el(kq8, "1 + a"))


@pytest.mark.parametrize("ctx_name", ["kq8", "kc4c2"])
def test_inverse_of_random_units(ctx_name, request, rng):
    ctx = request.getfixturevalue(ctx_name)
    for _ in range(SAMPLES):
        x = random_normalized_unit(ctx, rng)
        y = inverse_normalized(x)
        assert mul(x, y) == ctx.one
        assert mul(y, x) == ctx.one
        assert inverse_normalized(y) == x


def test_inverse_over_gf3(rng):
    ctx = AlgebraContext(build_group("c3xc3"), 3)
    for _ in range(200):
        x = random_normalized_unit(ctx, rng)
        assert mul(x, x ** -1) == ctx.one


def test_nilpotency_index():
    c2 = AlgebraContext(build_group("c2"), 2)
    c4 = AlgebraContext(build_group("c4"), 2)
    assert nilpotency_index(el(c2, "1 + g")) == 2
    assert nilpotency_index(el(c4, "1 + g")) == 4
    assert nilpotency_index(c4.zero) == 1
    with pytest.raises(ValueError):
        nilpotency_index(c4.one)


# ---------------------------------------------------------
# Antiautomorphism and ring-homomorphism properties
# ---------------------------------------------------------

@pytest.mark.parametrize("ctx_name", ["kq8", "kd8"])
def test_involution_is_an_antiautomorphism(ctx_name, request, rng):
    ctx = request.getfixturevalue(ctx_name)
    for _ in range(SAMPLES):
        x, y = random_element(ctx, rng), random_element(ctx, rng)
        assert involution(involution(x)) == x
        assert involution(mul(x, y)) == mul(involution(y), involution(x))
        assert involution(add(x, y)) == add(involution(x), involution(y))
        assert augmentation(mul(x, y)) == augmentation(x) * augmentation(y) % ctx.p
        assert augmentation(add(x, y)) == (augmentation(x) + augmentation(y)) % ctx.p


@pytest.mark.parametrize("ctx_name", ["kq8", "kd8"])
def test_x_star_x_is_symmetric(ctx_name, request, rng):
    ctx = request.getfixturevalue(ctx_name)
    for _ in range(SAMPLES):
        x = random_normalized_unit(ctx, rng)
        assert is_symmetric(mul(involution(x), x))


@pytest.mark.parametrize("ctx_name", ["kq8", "kd8", "kc4c2"])
def test_symmetric_iff_constant_on_inversion_orbits(ctx_name, request, rng):
    ctx = request.getfixturevalue(ctx_name)
    for _ in range(200):
        x = random_element(ctx, rng)
        symmetrized = add(x, involution(x))
        assert is_symmetric(x) == is_orbit_constant(x)
        assert is_orbit_constant(symmetrized)


# ---------------------------------------------------------
# Text format
# ---------------------------------------------------------

def test_format(kq8):
    assert format_element(kq8.zero) == "0"
    assert format_element(kq8.one) == "1"
    assert str(el(kq8, "a^2*b + 1 + a")) == "1 + a + a^2*b"
    ctx = AlgebraContext(build_group("c3"), 3)
    assert str(el(ctx, "1 + 2*g")) == "1 + 2*g"
    assert str(el(ctx, "g + g")) == "2*g"
    assert str(el(ctx, "2 + g^2")) == "2 + g^2"


def test_parse_round_trip(kd8, rng):
    for _ in range(100):
        x = random_element(kd8, rng)
        assert parse_element(kd8, str(x)) == x


@pytest.mark.parametrize("text", ["", "a +", "q", "1 + c", "2*"])
def test_parse_errors(kq8, text):
    with pytest.raises(ElementParseError):
        parse_element(kq8, text)
