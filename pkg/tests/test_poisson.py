import random

import pytest

from qweyl import (
    MuPoly,
    PoissonElement,
    WeylElement,
    gamma1,
    jacobiator,
    p_z,
    pb_bracket,
    pe_div_exact,
    semiclassical_bracket,
    wa_z,
)
from qweyl.suites import random_params, random_poisson, random_weyl


def pgen(params, kind, i):
    return PoissonElement.generator(params, kind, i)


def test_bracket_same_index(params2):
    # {x1, y1} = mu1 (1 + y1 x1) for s1 = (1,0)
    got = pb_bracket(pgen(params2, "x", 1), pgen(params2, "y", 1))
    assert got == p_z(params2, 1).scale(MuPoly.variable(2, 0))


def test_bracket_antisymmetry_and_self(params2):
    rng = random.Random(2)
    for _ in range(50):
        a, b = random_poisson(rng, params2), random_poisson(rng, params2)
        assert pb_bracket(a, b) == -pb_bracket(b, a)
        assert pb_bracket(a, a) == PoissonElement.zero(params2)


def test_bracket_xx_example(params2):
    # {x2, x1} = -((s1 + L12) . mu) x1 x2 = -2 mu1 x1 x2
    got = pb_bracket(pgen(params2, "x", 2), pgen(params2, "x", 1))
    want = PoissonElement.monomial(
        params2, (0, 1, 0, 1), MuPoly(2, {(1, 0): -2})
    )
    assert got == want


def test_bracket_leibniz(params2):
    rng = random.Random(3)
    for _ in range(40):
        a, b, c = (random_poisson(rng, params2) for _ in range(3))
        assert pb_bracket(a * b, c) == a * pb_bracket(b, c) + pb_bracket(a, c) * b


def test_jacobiator_zero(params2):
    y1, x1, x2 = pgen(params2, "y", 1), pgen(params2, "x", 1), pgen(params2, "x", 2)
    assert jacobiator(y1, x1, y1) == PoissonElement.zero(params2)
    assert jacobiator(x1, y1, x2) == PoissonElement.zero(params2)
    rng = random.Random(4)
    for _ in range(40):
        a, b, c = (random_poisson(rng, params2) for _ in range(3))
        assert jacobiator(a, b, c) == PoissonElement.zero(params2)


def test_gamma1(params2):
    q1 = params2.q_scalar(1)
    a = WeylElement.monomial(params2, (1, 1, 0, 0), q1) + WeylElement.scalar(
        params2, q1 - 1
    )
    assert gamma1(a) == PoissonElement.monomial(params2, (1, 1, 0, 0))
    assert gamma1(WeylElement.one(params2)) == PoissonElement.one(params2)
    for i in range(3):
        assert gamma1(wa_z(params2, i)) == p_z(params2, i)


def test_semiclassical_examples(params2):
    x1 = WeylElement.generator(params2, "x", 1)
    y1 = WeylElement.generator(params2, "y", 1)
    assert semiclassical_bracket(x1, y1) == p_z(params2, 1).scale(MuPoly.variable(2, 0))
    a = random_weyl(random.Random(6), params2)
    assert semiclassical_bracket(a, a) == PoissonElement.zero(params2)
    # (x2, y1): coefficient (s1 + L12) . mu on y1 x2
    x2 = WeylElement.generator(params2, "x", 2)
    got = semiclassical_bracket(x2, y1)
    assert got == PoissonElement.monomial(params2, (1, 0, 0, 1), MuPoly(2, {(1, 0): 2}))


def test_semiclassical_matches_table_randomized():
    rng = random.Random(7)
    for _ in range(60):
        params = random_params(rng, rng.randint(1, 3), rng.randint(1, 2))
        a, b = random_weyl(rng, params), random_weyl(rng, params)
        assert pb_bracket(gamma1(a), gamma1(b)) == semiclassical_bracket(a, b)


def test_poisson_normality_of_z(params3):
    # {g, z_i} is an exact multiple of z_i for every generator g
    for i in range(1, 4):
        zi = p_z(params3, i)
        for kind in ("y", "x"):
            for j in range(1, 4):
                br = pb_bracket(pgen(params3, kind, j), zi)
                if not br:
                    continue
                quot = pe_div_exact(br, zi)
                assert quot * zi == br


def test_pe_div_rejects_nonmultiple(params2):
    z1 = p_z(params2, 1)
    with pytest.raises(ArithmeticError):
        pe_div_exact(PoissonElement.one(params2) + pgen(params2, "y", 1), z1)


def test_mu_forms_nonzero_and_skew(params3):
    # s_i . mu is a nonzero form since s_i != 0; the L matrix of forms is skew
    for i in range(1, 4):
        assert MuPoly.linear(params3.s(i)) != MuPoly.zero(params3.r)
    for i in range(1, 4):
        for j in range(1, 4):
            assert MuPoly.linear(params3.L(i, j)) == -MuPoly.linear(params3.L(j, i))


def test_bracket_coefficients_are_mu_linear(params2):
    rng = random.Random(8)
    for _ in range(30):
        a, b = random_weyl(rng, params2), random_weyl(rng, params2)
        for _, c in semiclassical_bracket(a, b).terms:
            assert c.degree() <= 1
