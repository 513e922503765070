"""F2 polynomial ring tests: ring axioms, Frobenius, the rationality classifier."""

import random

import pytest

from crlab.coeffring import (
    ORDINARY,
    SQRT,
    UNIT,
    SOLVABLE_CANDIDATE,
    UNSOLVABLE_OVER_K,
    Polynomial,
    VariableRegistry,
    classify_square_obstruction,
)


def make_registry():
    reg = VariableRegistry()
    for i in range(4, 13):
        reg.add(f"x{i}")
    reg.add("y")
    reg.add("t", UNIT)
    reg.add("s", SQRT)
    return reg


def random_poly(reg, rng, nvars=4, nterms=4, maxexp=2):
    p = reg.zero()
    names = [n for n, k in zip(reg.names, reg.kinds) if k == ORDINARY][:nvars]
    for _ in range(rng.randrange(nterms + 1)):
        m = reg.one()
        for _ in range(rng.randrange(3)):
            m = m * reg.var(rng.choice(names)) ** rng.randrange(1, maxexp + 1)
        p = p + m
    return p


def test_char_two_addition():
    reg = make_registry()
    x, y = reg.var("x4"), reg.var("y")
    assert (x + x).is_zero
    p = x * y + y ** 2
    assert (p + p).is_zero


def test_frobenius():
    reg = make_registry()
    x, y = reg.var("x4"), reg.var("y")
    assert (x + y) ** 2 == x ** 2 + y ** 2
    rng = random.Random(3)
    for _ in range(50):
        p, q = random_poly(reg, rng), random_poly(reg, rng)
        assert (p + q) ** 2 == p ** 2 + q ** 2


def test_distributivity_example():
    reg = make_registry()
    x5, x8, x10, x11 = (reg.var(f"x{i}") for i in (5, 8, 10, 11))
    lhs = (x5 + x8) * (x10 + x11)
    rhs = x5 * x10 + x5 * x11 + x8 * x10 + x8 * x11
    assert lhs == rhs
    assert str(lhs) == "x5x10+x5x11+x8x10+x8x11"


def test_ring_axioms_random():
    reg = make_registry()
    rng = random.Random(9)
    for _ in range(60):
        p, q, r = (random_poly(reg, rng) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_registry_mismatch_raises():
    reg1, reg2 = make_registry(), make_registry()
    with pytest.raises(ValueError):
        reg1.var("y") + reg2.var("y")


def test_laurent_units():
    reg = make_registry()
    t, x = reg.var("t"), reg.var("x4")
    tinv = t.unit_inverse()
    assert t * tinv == reg.one()
    assert str(t ** -2 * x) == "x4t^-2"
    with pytest.raises(ValueError):
        x.unit_inverse()
    with pytest.raises(ValueError):
        reg.monomial({"x4": -1})


def test_substitute_identity_and_zero():
    reg = make_registry()
    y, x9, s = reg.var("y"), reg.var("x9"), reg.var("s")
    p = y ** 2 + x9 ** 2 + s ** 2
    assert p.substitute({"x4": y, "x9": x9}) == p
    assert (s ** 2 + reg.var("x4") ** 2).substitute({"s": reg.zero()}) == reg.var("x4") ** 2


def test_substitute_unit_guard():
    reg = make_registry()
    with pytest.raises(ValueError):
        reg.var("t").substitute({"t": reg.var("x4") + reg.var("y")})
    assert reg.var("t").substitute({"t": reg.var("t") ** 2}) == reg.var("t") ** 2


def test_classifier_key_cases():
    reg = make_registry()
    y, x9, x6, s = reg.var("y"), reg.var("x9"), reg.var("x6"), reg.var("s")
    assert classify_square_obstruction(y ** 2 + x9 ** 2 + s ** 2) == UNSOLVABLE_OVER_K
    assert classify_square_obstruction(reg.var("x4") ** 2) == SOLVABLE_CANDIDATE
    assert classify_square_obstruction(x6 ** 2) == SOLVABLE_CANDIDATE


def test_classifier_negative_cases():
    reg = make_registry()
    x, y, s = reg.var("x4"), reg.var("y"), reg.var("s")
    # odd exponent next to s^2: not of the shape q^2 + s^2
    assert classify_square_obstruction(x * y + s ** 2) == SOLVABLE_CANDIDATE
    # s^4 = a^2 is not the monomial s^2
    assert classify_square_obstruction(s ** 4 + x ** 2) == SOLVABLE_CANDIDATE
    # s-containing mixed monomial disqualifies
    assert classify_square_obstruction(s ** 2 + (s * x) ** 2) == SOLVABLE_CANDIDATE


def test_classifier_random_q():
    reg = make_registry()
    s = reg.var("s")
    rng = random.Random(17)
    for _ in range(100):
        q = random_poly(reg, rng)
        assert classify_square_obstruction(q ** 2 + s ** 2) == UNSOLVABLE_OVER_K


def test_split_by_units():
    reg = make_registry()
    t, x, y = reg.var("t"), reg.var("x4"), reg.var("y")
    eq = t ** 2 * x + x + y
    groups = eq.split_by_units()
    assert len(groups) == 2
    vals = sorted(str(p) for p in groups.values())
    assert vals == ["x4", "x4+y"]


def test_rendering_sorted():
    reg = make_registry()
    x5, x7, x8, x9, x10, x11 = (reg.var(f"x{i}") for i in (5, 7, 8, 9, 10, 11))
    s = reg.var("s")
    p = x5 * x10 + x5 * x11 + x7 * x8 + x7 * x11 + x8 * x10 + x9 ** 2 + s ** 2
    assert str(p) == "x5x10+x5x11+x7x8+x7x11+x8x10+x9^2+s^2"
    assert str(reg.zero()) == "0"
    assert str(reg.one()) == "1"


def test_sqrt_uniqueness():
    reg = make_registry()
    with pytest.raises(ValueError):
        reg.add("s2", SQRT)
