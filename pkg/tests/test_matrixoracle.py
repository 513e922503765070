"""Matrix model invariants and engine-vs-oracle agreement on A2."""

import random

import pytest

from crlab.coeffring import UNIT, SQRT, VariableRegistry
from crlab.chevalley import (
    GraphAut,
    RootElement,
    TorusValue,
    WeylRep,
    normalize,
    normalized_word,
    word,
)
from crlab.matrixoracle import (
    GF,
    IDENT,
    A2Matrix,
    enumerate_m_conjugacy,
    evaluate_word,
    m_group_elements,
    matrix_oracle_check,
    mat_det,
    mat_inv,
    mat_mul,
    sigma_element,
    sigma_twist,
    transvection,
)
from crlab.rootsys import root_system


def setup():
    sys = root_system("a2")
    reg = VariableRegistry()
    for n in ("x", "y", "z"):
        reg.add(n)
    reg.add("t", UNIT)
    reg.add("s", SQRT)
    return sys, reg


def test_gf_arithmetic():
    for q in (2, 4, 16):
        gf = GF(q)
        for a in range(1, q):
            assert gf.mul(a, gf.inv(a)) == 1
        for a in range(q):
            for b in range(q):
                assert gf.mul(a, b) == gf.mul(b, a)
    gf = GF(4)
    assert gf.mul(2, 2) == 3  # u^2 = u + 1


def test_mat_inverse():
    gf = GF(16)
    rng = random.Random(2)
    found = 0
    while found < 25:
        A = tuple(tuple(rng.randrange(16) for _ in range(3)) for _ in range(3))
        if mat_det(gf, A) == 0:
            continue
        found += 1
        assert mat_mul(gf, A, mat_inv(gf, A)) == IDENT


def test_sigma_invariants():
    gf = GF(16)
    sig = sigma_element(gf)
    assert sig * sig == A2Matrix(gf, IDENT)
    for x in range(16):
        assert sig * transvection(gf, 1, x) * sig == transvection(gf, 2, x)
        assert sig * transvection(gf, -1, x) * sig == transvection(gf, -2, x)
        assert sig * transvection(gf, 3, x) * sig == transvection(gf, 3, x)
    # sigma fixes the image of (alpha+beta)^v pointwise
    from crlab.matrixoracle import torus_matrix
    for t in range(1, 16):
        tv = torus_matrix(gf, (1, 1), t)
        assert sig * tv * sig == tv


def test_sl3_determinant_one():
    gf = GF(4)
    for g in m_group_elements(gf):
        assert mat_det(gf, g.mat) == 1
    assert len(m_group_elements(gf)) == 120


def test_oracle_sigma_conjugation_identity():
    sys, reg = setup()
    x, y, z = reg.var("x"), reg.var("y"), reg.var("z")
    rng = random.Random(0)
    sigma = word(sys, reg, GraphAut(sys, "sigma"))
    u = word(sys, reg, RootElement(sys.root_by_label(1), x),
             RootElement(sys.root_by_label(2), y),
             RootElement(sys.root_by_label(3), z))
    lhs = sigma * u * sigma.inverse()
    rhs = word(sys, reg, RootElement(sys.root_by_label(1), y),
               RootElement(sys.root_by_label(2), x),
               RootElement(sys.root_by_label(3), x * y + z))
    assert matrix_oracle_check(lhs, rhs, rng)


def test_oracle_curve_identity():
    sys, reg = setup()
    x = reg.var("x")
    rng = random.Random(1)
    v = word(sys, reg, RootElement(sys.root_by_label(1), x),
             RootElement(sys.root_by_label(2), x))
    sigma = word(sys, reg, GraphAut(sys, "sigma"))
    lhs = v * sigma * v.inverse()
    rhs = sigma * word(sys, reg, RootElement(sys.root_by_label(3), x * x))
    assert matrix_oracle_check(lhs, rhs, rng)


def test_oracle_trivial_identity():
    sys, reg = setup()
    rng = random.Random(2)
    assert matrix_oracle_check(word(sys, reg), word(sys, reg), rng)


def test_oracle_detects_wrong_identity():
    sys, reg = setup()
    x = reg.var("x")
    rng = random.Random(3)
    lhs = word(sys, reg, RootElement(sys.root_by_label(1), x))
    rhs = word(sys, reg, RootElement(sys.root_by_label(2), x))
    assert not matrix_oracle_check(lhs, rhs, rng)


def test_oracle_rejects_non_a2():
    d4 = root_system("d4")
    reg = VariableRegistry()
    rng = random.Random(4)
    w = word(d4, reg)
    with pytest.raises(ValueError):
        matrix_oracle_check(w, w, rng)


def random_a2_word(sys, reg, rng, max_len=8):
    atoms = []
    # pick an orientation so the unipotent support can stay nilpotent
    sign = rng.choice((1, -1))
    names = ["x", "y", "z"]
    for _ in range(rng.randrange(0, max_len + 1)):
        kind = rng.randrange(4)
        if kind == 0:
            coeff = reg.var(rng.choice(names))
            if rng.randrange(2):
                coeff = coeff * reg.var(rng.choice(names)) + reg.one()
            atoms.append(RootElement(sys.root_by_label(sign * rng.randrange(1, 4)), coeff))
        elif kind == 1:
            atoms.append(WeylRep(sys.root_by_label(rng.randrange(1, 4))))
        elif kind == 2:
            atoms.append(GraphAut(sys, "sigma"))
        else:
            atoms.append(TorusValue(sys.cocharacter((rng.randrange(-2, 3), rng.randrange(-2, 3))), "t"))
    return word(sys, reg, *atoms)


def test_engine_normal_form_agrees_with_matrices():
    sys, reg = setup()
    rng = random.Random(2024)
    for _ in range(200):
        w = random_a2_word(sys, reg, rng)
        canon = normalized_word(w)
        for _ in range(8):
            assign_rng = random.Random(rng.randrange(1 << 30))
            gf = GF(16)
            from crlab.matrixoracle import random_assignment
            assign = random_assignment([w, canon], gf, assign_rng)
            assert evaluate_word(w, assign, gf) == evaluate_word(canon, assign, gf)


def test_lie_adjoint_sigma_fixes_the_sum():
    gf = GF(16)
    from crlab.matrixoracle import lie_adjoint
    X = ((0, 1, 0), (0, 0, 1), (0, 0, 0))  # E12 + E23
    assert lie_adjoint(gf, sigma_element(gf), X) == X


def test_engine_adjoint_agrees_with_matrix_adjoint():
    from crlab.chevalley import LieVector, adjoint
    from crlab.matrixoracle import lie_adjoint, lie_vector_matrix, random_assignment

    sys, reg = setup()
    rng = random.Random(99)
    gf = GF(16)
    basis = [LieVector.basis_e(sys, reg, lbl) for lbl in (1, 2, 3, -1, -2, -3)]
    basis += [LieVector.basis_h(sys, reg, i) for i in (0, 1)]
    for _ in range(150):
        w = random_a2_word(sys, reg, rng, max_len=5)
        v = rng.choice(basis)
        got = adjoint(w, v)
        assign = random_assignment([w], gf, rng)
        for name in ("x", "y", "z"):
            assign.setdefault(name, rng.randrange(16))
        lhs = lie_vector_matrix(got, assign, gf)
        rhs = lie_adjoint(gf, evaluate_word(w, assign, gf), lie_vector_matrix(v, assign, gf))
        assert lhs == rhs


def test_enumerate_m_conjugacy_f4_is_singletons():
    classes = enumerate_m_conjugacy(4, list(range(4)))
    assert sorted(classes) == [[0], [1], [2], [3]]


def test_enumerate_m_conjugacy_f2():
    classes = enumerate_m_conjugacy(2, [0, 1])
    assert sorted(classes) == [[0], [1]]


def test_enumerate_single_value():
    assert enumerate_m_conjugacy(4, [0]) == [[0]]
