import random
from fractions import Fraction

import pytest

from su21.surd import (Surd, LambdaPoly, CSurd, half, hrange,
                       surd_normalize, squarefree_decompose)


def rand_surd(rng, nterms=3):
    out = Surd()
    for _ in range(rng.randint(0, nterms)):
        out = out + Surd.sqrt(rng.randint(0, 30),
                              Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return out


def test_normalize_examples():
    assert surd_normalize(1, 8) == Surd.sqrt(2, 2)
    assert str(surd_normalize(1, 8)) == "2*sqrt(2)"
    assert surd_normalize(1, Fraction(9, 4)) == Surd.of(Fraction(3, 2))
    assert surd_normalize(1, 0) == Surd()
    with pytest.raises(ValueError):
        surd_normalize(1, -2)


def test_squarefree_decompose():
    assert squarefree_decompose(60) == (2, 15)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(49) == (7, 1)


def test_arithmetic_examples():
    assert Surd.sqrt(2) + Surd.sqrt(2) == Surd.sqrt(2, 2)
    assert Surd.sqrt(6) * Surd.sqrt(10) == Surd.sqrt(15, 2)
    assert (1 + Surd.sqrt(2)) * (1 - Surd.sqrt(2)) == Surd.of(-1)


def test_canonical_idempotent():
    rng = random.Random(1)
    for _ in range(200):
        x = rand_surd(rng)
        assert Surd(x.terms) == x
        for r in x.terms:
            s, r0 = squarefree_decompose(r)
            assert s == 1 and r0 == r  # stored radicands square-free
        assert all(c != 0 for c in x.terms.values())


def test_ring_axioms_random():
    rng = random.Random(2)
    for _ in range(120):
        a, b, c = (rand_surd(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_division_inverts_multiplication():
    rng = random.Random(3)
    for _ in range(60):
        a, b = rand_surd(rng), rand_surd(rng)
        if b.is_zero():
            continue
        assert (a * b) / b == a


def test_eval_additive_within_4ulp():
    rng = random.Random(4)
    for _ in range(100):
        a, b = rand_surd(rng), rand_surd(rng)
        lhs = (a + b).eval()
        rhs = a.eval() + b.eval()
        scale = max(abs(a.eval()), abs(b.eval()), abs(rhs))
        assert lhs == pytest.approx(rhs, abs=4 * scale * 2.0**-52 + 1e-300)


def test_eval_examples():
    assert Surd.sqrt(2, 2).eval() == pytest.approx(2.8284271247461903, abs=1e-15)
    assert Surd().eval() == 0.0
    assert Surd.of(Fraction(3, 2)).eval() == 1.5
    with pytest.raises(ValueError):
        Surd.sqrt(2).eval_fraction(10)  # precision must be >= 53 bits
    # high-precision fraction approximation really tightens
    approx = Surd.sqrt(2).eval_fraction(150)
    assert abs(approx * approx - 2) < Fraction(1, 2**140)


def test_render_parse_roundtrip():
    rng = random.Random(5)
    assert str(Surd.sqrt(5, Fraction(3, 2)) + Surd.of(Fraction(1, 4))) \
        == "3/2*sqrt(5) + 1/4"
    assert Surd.parse("3/2*sqrt(5) + 1/4") \
        == Surd.sqrt(5, Fraction(3, 2)) + Surd.of(Fraction(1, 4))
    for _ in range(100):
        x = rand_surd(rng)
        assert Surd.parse(str(x)) == x


def test_halfint():
    j = half("3/2")
    assert j.twice == 3 and not j.is_integer()
    assert (j + half("1/2")).as_int() == 2
    assert -j == half(Fraction(-3, 2))
    assert abs(half(-3)) == half(3)
    assert sorted(hrange(half(Fraction(-3, 2)), j)) == \
        [half(Fraction(t, 2)) for t in (-3, -1, 1, 3)]
    with pytest.raises(ValueError):
        half(Fraction(1, 3))
    with pytest.raises(ValueError):
        j.as_int()


def test_lambda_poly():
    L = LambdaPoly.LAMBDA
    assert (L + 2) + (-L) == LambdaPoly.const(2)
    assert (L + 2) * (L - 2) == LambdaPoly(Surd.of(-4), Surd.of(0), Surd.of(1))
    assert ((L + 2) * (L - 2)).eval_at(4) == 12
    assert ((L + 2) * (L - 2)).eval_at(2.0 + 1.0j) == pytest.approx((2 + 1j) ** 2 - 4)
    with pytest.raises(OverflowError):
        (L * L) * L  # degree cap is 2
    assert (L * L).degree() == 2 and LambdaPoly.const(0).degree() == 0


def test_csurd():
    i = CSurd.I
    assert i * i == CSurd.of(-1)
    z = CSurd(Surd.sqrt(2), Surd.of(1))
    assert z * z.conj() == CSurd.of(3)
    assert (z / z) == CSurd.of(1)
    assert complex(CSurd.of(Fraction(1, 2), 1)) == 0.5 + 1j
