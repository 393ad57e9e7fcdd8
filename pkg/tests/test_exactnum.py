import math
import random
from fractions import Fraction

import pytest

from ennola.exactnum import (
    ConductorError,
    Cyclotomic,
    QPoly,
    cyclo_arith,
    cyclotomic_polynomial,
    euler_phi,
    qpoly_eval,
)


def test_qpoly_eval_basic():
    assert qpoly_eval(QPoly({0: 1, 1: -1}), -2) == 3
    assert qpoly_eval(QPoly({2: 1, 1: -1}), -2) == 6
    assert qpoly_eval(QPoly({0: 1}), 7) == 1


def test_qpoly_eval_laurent():
    p = QPoly({-2: 3, 1: Fraction(1, 2)})
    assert p.eval(2) == Fraction(3, 4) + 1
    with pytest.raises(ZeroDivisionError):
        p.eval(0)


def test_qpoly_eval_multiplicative():
    rng = random.Random(7)
    for _ in range(50):
        p = QPoly({rng.randint(-3, 4): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)})
        q = QPoly({rng.randint(-3, 4): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)})
        v = Fraction(rng.randint(1, 7), rng.randint(1, 3)) * rng.choice([1, -1])
        assert (p * q).eval(v) == p.eval(v) * q.eval(v)
        assert (p + q).eval(v) == p.eval(v) + q.eval(v)


def test_qpoly_algebra():
    t = QPoly.gen()
    assert (1 - t) * (1 + t) == 1 - t**2
    assert (t - 1).shift(-1) == 1 - t.inverse_variable()
    assert ((t + 1) ** 3).coeffs == ((0, 1), (1, 3), (2, 3), (3, 1))
    assert QPoly({0: 0}) == QPoly()
    assert not QPoly()
    assert QPoly({5: 2, -1: 1}).min_exp() == -1
    with pytest.raises(ValueError):
        (t + 1).constant_value()
    assert QPoly({0: Fraction(3, 2)}).constant_value() == Fraction(3, 2)


def test_cyclotomic_polynomials_known():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_polynomial_divides_xn_minus_1():
    for n in range(1, 31):
        phi = cyclotomic_polynomial(n)
        assert len(phi) - 1 == euler_phi(n)
        # multiply Phi_d over all d | n and compare with x^n - 1
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                pd = cyclotomic_polynomial(d)
                prod = [
                    sum(prod[i] * pd[k - i] for i in range(len(prod)) if 0 <= k - i < len(pd))
                    for k in range(len(prod) + len(pd) - 1)
                ]
        expect = [0] * (n + 1)
        expect[0], expect[n] = -1, 1
        assert prod == expect


def test_zeta_basics():
    z3 = Cyclotomic.root(3)
    assert z3 + z3 * z3 + 1 == 0
    assert z3 * (z3 * z3) == 1
    assert Cyclotomic.root(9).conj() == Cyclotomic.root(9, 8)
    assert Cyclotomic.root(2) == -1
    assert cyclo_arith(z3, z3 * z3, "mul") == Cyclotomic.from_rational(1, 3)
    assert cyclo_arith(z3, None, "conj") == Cyclotomic.root(3, 2)
    assert cyclo_arith(z3, z3, "eq") is True


def test_zeta_order_reduction():
    for n in range(1, 31):
        z = Cyclotomic.root(n)
        assert z**n == 1
        assert Cyclotomic.root(n, n + 3) == Cyclotomic.root(n, 3)


def _random_cyclo(rng: random.Random, n: int) -> Cyclotomic:
    d = euler_phi(n)
    return Cyclotomic(n, [rng.randint(-4, 4) for _ in range(d)], rng.randint(1, 5))


def test_cyclotomic_ring_axioms():
    rng = random.Random(11)
    for n in (5, 8, 12):
        for _ in range(25):
            a, b, c = (_random_cyclo(rng, n) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_conj_is_ring_involution():
    rng = random.Random(13)
    for _ in range(25):
        a, b = _random_cyclo(rng, 12), _random_cyclo(rng, 12)
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        norm = a * a.conj()
        assert norm == norm.conj()


def test_conductor_mismatch_and_lift():
    z3, z4 = Cyclotomic.root(3), Cyclotomic.root(4)
    with pytest.raises(ConductorError):
        z3 * z4
    a, b = Cyclotomic.common(z3, z4)
    assert a.conductor == b.conductor == 12
    assert a == Cyclotomic.root(12, 4)
    assert b == Cyclotomic.root(12, 3)
    assert z3.lift(9) == Cyclotomic.root(9, 3)
    with pytest.raises(ConductorError):
        z4.lift(9)
    # equality across conductors goes through the common lift
    assert Cyclotomic.from_rational(5, 3) == Cyclotomic.from_rational(5, 4)


def test_rational_detection_and_json():
    z5 = Cyclotomic.root(5)
    v = z5 + z5**2 + z5**3 + z5**4
    assert v.is_rational() and v.rational_value() == -1
    half = Cyclotomic.from_rational(Fraction(1, 2), 5)
    doc = (half + z5).to_json()
    assert doc["N"] == 5
    assert doc["coeffs"][0] == [1, 2] and doc["coeffs"][1] == [1, 1]
    with pytest.raises(ValueError):
        z5.rational_value()


def test_approx_embedding():
    z8 = Cyclotomic.root(8)
    assert abs(z8.approx() - complex(math.sqrt(0.5), math.sqrt(0.5))) < 1e-12
