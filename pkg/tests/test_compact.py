import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from su21.surd import Surd, HalfInt, half, hrange, ZERO
from su21.compact import (
    EulerAngles, UnitaryMatrix2, WignerIndex, TrigPolynomial,
    matrix_from_euler, euler_from_matrix, euler_from_unitary,
    quaternion_from_euler, little_d, little_d_jacobi_trig, little_d_hyper,
    little_d_jacobi, jacobi_P, jacobi_P_hyper, wigner_D, wigner_D_matrix_arg,
    c_factor, cg, threej, product_expand,
)
from conftest import random_angles


def u2_from_exponentials(psi, theta, phi, zeta=0.0):
    """Independent construction: multiply the three closed-form exponentials."""
    def ez(a):  # e^{-a g3}
        return np.array([[cmath.exp(-0.5j * a), 0], [0, cmath.exp(0.5j * a)]])
    def ey(a):  # e^{-a g2}
        return np.array([[math.cos(a / 2), -math.sin(a / 2)],
                         [math.sin(a / 2), math.cos(a / 2)]])
    return cmath.exp(-0.5j * zeta) * (ez(psi) @ ey(theta) @ ez(phi))


class TestEulerParametrization:
    def test_identity(self):
        u = matrix_from_euler(EulerAngles(0, 0, 0, 0))
        assert u.entries() == (1, 0, 0, 1)

    def test_theta_pi(self):
        u = matrix_from_euler(EulerAngles(0, 0, math.pi, 0))
        assert np.allclose(u.entries(), (0, -1, 1, 0), atol=1e-15)

    def test_against_exponential_product(self, rng):
        for angles in [EulerAngles(0, math.pi / 2, math.pi / 2, -math.pi / 2)] + \
                      [random_angles(rng) for _ in range(50)]:
            u = matrix_from_euler(angles)
            v = u2_from_exponentials(angles.psi, angles.theta, angles.phi, angles.zeta)
            assert np.allclose(np.array(u.entries()).reshape(2, 2), v, atol=1e-14)

    def test_euler_from_matrix_identity_convention(self):
        a = euler_from_matrix(1.0, 0.0, 0.0)
        assert (a.zeta, a.psi, a.theta, a.phi) == (0.0, 0.0, 0.0, 0.0)

    def test_round_trip_specific(self):
        src = EulerAngles(0.0, 0.7, 1.1, -0.3)
        u = matrix_from_euler(src)
        back = euler_from_matrix(u.a, u.c, 0.0)
        assert back.psi == pytest.approx(0.7, abs=1e-9)
        assert back.theta == pytest.approx(1.1, abs=1e-9)
        assert back.phi == pytest.approx(-0.3, abs=1e-9)

    def test_degenerate_fold(self):
        t = math.pi / 3
        a = euler_from_matrix(cmath.exp(-1j * t), 0.0, 0.0)
        assert a.theta == 0.0 and a.phi == 0.0
        assert a.psi == pytest.approx(2 * t, abs=1e-12)

    def test_round_trip_random(self, rng):
        for _ in range(300):
            angles = random_angles(rng)
            u = matrix_from_euler(angles)
            v = matrix_from_euler(euler_from_unitary(u))
            assert max(abs(x - y) for x, y in zip(u.entries(), v.entries())) < 1e-9

    def test_range_validation(self):
        with pytest.raises(ValueError):
            EulerAngles(0, 0, -0.5, 0)
        with pytest.raises(ValueError):
            EulerAngles(0, 4 * math.pi, 0.5, 0)
        with pytest.raises(ValueError):
            euler_from_matrix(1.0, 1.0, 0.0)  # not on the unit sphere

    def test_unitary_validation(self):
        with pytest.raises(ValueError):
            UnitaryMatrix2(1, 0, 0, 2)


class TestQuaternions:
    def test_examples(self):
        assert quaternion_from_euler(EulerAngles(0, 0, 0, 0)) == (1, 0, 0, 0)
        q = quaternion_from_euler(EulerAngles(0, 0, math.pi, 0))
        assert np.allclose(q, (0, 0, -1, 0), atol=1e-15)

    def test_matches_matrix_correspondence(self, rng):
        for _ in range(100):
            angles = random_angles(rng)
            u = matrix_from_euler(
                EulerAngles(0.0, angles.psi, angles.theta, angles.phi))
            q = quaternion_from_euler(angles)
            assert sum(x * x for x in q) == pytest.approx(1.0, abs=1e-12)
            want = (u.a.real, u.a.imag, -u.c.real, u.c.imag)
            assert np.allclose(q, want, atol=1e-12)


class TestLittleD:
    def test_theta_zero(self):
        # only the pure-cos monomial survives; its value is the inverse
        # normalization, so the c-factors restore the Kronecker delta
        for jt in range(0, 5):
            j = HalfInt(jt)
            for m1 in hrange(-j, j):
                for m2 in hrange(-j, j):
                    v = little_d(j, m1, m2).eval(0.0)
                    if m1 != m2:
                        assert v == 0.0
                    else:
                        cc = (c_factor(j, m1) * c_factor(j, m2)).eval()
                        assert cc * v == pytest.approx(1.0, abs=1e-14)

    def test_swap_symmetry_exact(self):
        for jt in range(0, 7):
            j = HalfInt(jt)
            for m1 in hrange(-j, j):
                for m2 in hrange(-j, j):
                    sign = -1 if (m2 - m1).as_int() % 2 else 1
                    assert little_d(j, m1, m2) == little_d(j, m2, m1).scale(sign)

    def test_half_spin_matches_su2_matrix(self, rng):
        idx = {-1: 0, 1: 1}
        for _ in range(20):
            a = random_angles(rng)
            u = np.array(matrix_from_euler(
                EulerAngles(0.0, a.psi, a.theta, a.phi)).entries()).reshape(2, 2)
            for m1 in (half("-1/2"), half("1/2")):
                for m2 in (half("-1/2"), half("1/2")):
                    w = wigner_D(WignerIndex(half("1/2"), half("1/2"), m1, m2),
                                 EulerAngles(0.0, a.psi, a.theta, a.phi))
                    assert w == pytest.approx(u[idx[m1.twice], idx[m2.twice]], abs=1e-12)

    def test_parity_validation(self):
        with pytest.raises(ValueError):
            little_d(1, half("1/2"), 0)
        with pytest.raises(ValueError):
            little_d(1, 2, 0)

    def test_exact_jacobi_identity_smoke(self):
        for jt in range(0, 5):
            j = HalfInt(jt)
            for m1 in hrange(-j, j):
                for m2 in hrange(-j, j):
                    assert little_d(j, m1, m2) == little_d_jacobi_trig(j, m1, m2)

    def test_monomials_homogeneous(self):
        d = little_d(half("5/2"), half("1/2"), half("-3/2"))
        assert all(a + b == 5 for a, b in d.monomials)


class TestJacobi:
    def test_p0_is_one(self):
        for a, b in ((0, 0), (2, 1), (-1, 3), (0.5, -0.25)):
            assert jacobi_P(0, a, b, 0.3) == 1.0

    def test_p1_legendre(self):
        for x in np.linspace(-1, 1, 7):
            assert jacobi_P(1, 0, 0, x) == pytest.approx(x, abs=1e-15)

    def test_two_routes_agree(self, rng):
        for _ in range(80):
            n = rng.randint(0, 6)
            a = rng.choice([0, 1, 2, 3, rng.uniform(-0.9, 4.0)])
            b = rng.choice([0, 1, 2, -1, rng.uniform(-0.9, 4.0)])
            x = rng.uniform(-0.99, 0.99)
            assert jacobi_P(n, a, b, x) == pytest.approx(
                jacobi_P_hyper(n, a, b, x), rel=1e-12, abs=1e-12)

    def test_d_via_jacobi_spot(self):
        for t in np.linspace(0.1, 3.0, 9):
            assert little_d_jacobi(1, 0, 0, t) == pytest.approx(math.cos(t), abs=1e-14)


class TestWignerD:
    def test_identity_angles(self):
        a = EulerAngles(0, 0, 0, 0)
        for jt in range(0, 6):
            j = HalfInt(jt)
            for m1 in hrange(-j, j):
                for m2 in hrange(-j, j):
                    v = wigner_D(WignerIndex(j, j, m1, m2), a)
                    assert v == pytest.approx(1.0 if m1 == m2 else 0.0, abs=1e-14)

    def test_inverse_relation(self, rng):
        # (-1)^(m2-m1) W[j,-n; -m1,-m2](k) = W[j,n; m2,m1](k^{-1})
        for _ in range(25):
            a = random_angles(rng)
            u = matrix_from_euler(a)
            ainv = euler_from_unitary(u.inv())
            for jt in range(0, 5):
                j = HalfInt(jt)
                n = HalfInt(jt % 2 + 2 * (jt // 2))  # any valid parity
                for m1 in hrange(-j, j):
                    for m2 in hrange(-j, j):
                        sign = -1 if (m2 - m1).as_int() % 2 else 1
                        lhs = sign * wigner_D(WignerIndex(j, -n, -m1, -m2), a)
                        rhs = wigner_D(WignerIndex(j, n, m2, m1), ainv)
                        assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_symbolic_unitarity(self):
        # sum_m3 c(m1) c(m2) c(m3)^2 d[m1,m3] d[m2,m3] = delta exactly,
        # after reducing with sin^2 + cos^2 = 1
        for jt in range(0, 4):
            j = HalfInt(jt)
            for m1 in hrange(-j, j):
                for m2 in hrange(-j, j):
                    total = TrigPolynomial({})
                    for m3 in hrange(-j, j):
                        cc = (c_factor(j, m1) * c_factor(j, m2)
                              * c_factor(j, m3) * c_factor(j, m3))
                        total = total + (little_d(j, m1, m3)
                                         * little_d(j, m2, m3)).scale(cc)
                    want = {(0, 0): Surd.of(1)} if m1 == m2 else {}
                    assert total.reduced() == want


class TestClebschGordan:
    def test_stretched(self):
        assert cg(1, 1, half("1/2"), half("1/2"), half("3/2"), half("3/2")) == Surd.of(1)
        assert cg(half("5/2"), half("5/2"), 2, 2, half("9/2"), half("9/2")) == Surd.of(1)

    def test_table_one_entries(self):
        j, m1 = half("3/2"), half("1/2")
        jf, m = j.as_fraction(), m1.as_fraction()
        assert cg(j, m1, half("1/2"), half("-1/2"), 1, 0) \
            == Surd.sqrt((jf + m) / (2 * jf + 1))
        assert cg(j, m1, half("1/2"), half("1/2"), 1, 1) \
            == -Surd.sqrt((jf - m) / (2 * jf + 1))

    def test_table_two_entry(self):
        # (j, m1, 1, 0 -> j, m1) = m1 / sqrt(j(j+1))
        for jt, m1t in ((2, 0), (3, -3), (4, 2), (5, 5), (2, 2)):
            j, m1 = half(Fraction(jt, 2)), half(Fraction(m1t, 2))
            jf, m = j.as_fraction(), m1.as_fraction()
            assert cg(j, m1, 1, 0, j, m1) == Surd.of(m) / Surd.sqrt(jf * (jf + 1))

    def test_zero_outside_selection(self):
        assert cg(1, 0, 1, 0, 3, 0) == ZERO            # triangle
        assert cg(1, 1, 1, 1, 1, 0) == ZERO            # M != m1+m2
        assert cg(1, 1, 1, 1, 0, 2) == ZERO            # |M| > J
        with pytest.raises(ValueError):
            cg(1, half("1/2"), 1, 0, 1, half("1/2"))   # parity violation

    def test_orthogonality_exact(self):
        for j1t, j2t in ((1, 1), (2, 1), (3, 2), (3, 3), (2, 2)):
            j1, j2 = half(Fraction(j1t, 2)), half(Fraction(j2t, 2))
            for m1 in hrange(-j1, j1):
                for m2 in hrange(-j2, j2):
                    for m1p in hrange(-j1, j1):
                        m2p = m1 + m2 - m1p
                        if abs(m2p) > j2:
                            continue
                        total = ZERO
                        for J in hrange(abs(j1 - j2), j1 + j2):
                            total = total + cg(j1, m1, j2, m2, J, m1 + m2) \
                                * cg(j1, m1p, j2, m2p, J, m1 + m2)
                        want = Surd.of(1) if m1 == m1p else ZERO
                        assert total == want


class TestThreeJ:
    def test_selection_rules(self):
        assert threej(1, 1, 1, 1, 1, 1) == ZERO         # m-sum nonzero
        assert threej(1, 1, 3, 0, 0, 0) == ZERO         # triangle
        assert threej(half("1/2"), half("1/2"), half("1/2"),
                      half("1/2"), half("-1/2"), 0) == ZERO  # integer perimeter
        assert threej(1, 1, 1, 2, -1, -1) == ZERO       # |m| > j

    def _residual(self, j1, j2, j3, m1, m2, m3, s):
        js = (j1, j2, j3)
        ms = [m1, m2, m3]
        total = ZERO
        for i in range(3):
            amp = Surd.sqrt((js[i].as_fraction() - s * ms[i].as_fraction())
                            * (js[i].as_fraction() + s * ms[i].as_fraction() + 1))
            shifted = list(ms)
            shifted[i] = ms[i] + s
            if abs(shifted[i]) > js[i]:
                continue
            total = total + amp * threej(*js, *shifted)
        return total

    def test_recursion_specific(self):
        # tuple sums to +1, so the lowering branch applies
        r = self._residual(half("1/2"), half("1/2"), HalfInt(2),
                           half("1/2"), half("1/2"), HalfInt(-2), -1)
        assert r == ZERO

    def test_recursion_random(self, rng):
        count = 0
        while count < 40:
            j1 = half(Fraction(rng.randint(0, 4), 2))
            j2 = half(Fraction(rng.randint(0, 4), 2))
            j3s = hrange(abs(j1 - j2), j1 + j2)
            j3 = j3s[rng.randint(0, len(j3s) - 1)]
            s = rng.choice((1, -1))
            # need m1 + m2 + m3 = -s for the shifted symbols to be on shell
            m1 = rng.choice(hrange(-j1, j1))
            m2 = rng.choice(hrange(-j2, j2))
            m3 = -s - m1 - m2
            if abs(m3) > j3 or not (j3 + m3).is_integer():
                continue
            count += 1
            assert self._residual(j1, j2, j3, m1, m2, m3, s) == ZERO

    def test_relation_to_cg(self, rng):
        count = 0
        while count < 50:
            j1 = half(Fraction(rng.randint(0, 5), 2))
            j2 = half(Fraction(rng.randint(0, 5), 2))
            j3s = hrange(abs(j1 - j2), j1 + j2)
            j3 = j3s[rng.randint(0, len(j3s) - 1)]
            m1 = rng.choice(hrange(-j1, j1))
            m2 = rng.choice(hrange(-j2, j2))
            m3 = -(m1 + m2)
            if abs(m3) > j3:
                continue
            count += 1
            M = -m3
            sign = -1 if (j2 - j1 - M).as_int() % 2 else 1
            lhs = threej(j1, j2, j3, m1, m2, m3)
            rhs = cg(j1, m1, j2, m2, j3, M) * sign / Surd.sqrt((2 * j3 + 1).as_int())
            assert lhs == rhs


class TestProductExpansion:
    def test_trivial_factor(self):
        idx = WignerIndex(1, 3, 1, 0)
        out = product_expand(idx, WignerIndex(0, 0, 0, 0))
        assert len(out) == 1
        coeff, tgt = out[0]
        assert coeff == Surd.of(1) and tgt == idx

    def test_triangle_range(self):
        out = product_expand(
            WignerIndex(half("1/2"), half("3/2"), half("1/2"), half("1/2")),
            WignerIndex(half("1/2"), half("-3/2"), half("-1/2"), half("-1/2")))
        assert sorted(t.j.twice for _, t in out) == [0, 2]

    def test_pointwise(self, rng):
        for _ in range(20):
            a = random_angles(rng)
            for m11 in (half("-1/2"), half("1/2")):
                for m12 in (half("-1/2"), half("1/2")):
                    for m21 in (half("-1/2"), half("1/2")):
                        for m22 in (half("-1/2"), half("1/2")):
                            i1 = WignerIndex(half("1/2"), half("1/2"), m11, m12)
                            i2 = WignerIndex(half("1/2"), half("3/2"), m21, m22)
                            lhs = wigner_D(i1, a) * wigner_D(i2, a)
                            rhs = sum(c.eval() * wigner_D(t, a)
                                      for c, t in product_expand(i1, i2))
                            assert lhs == pytest.approx(rhs, abs=1e-9)


class TestExternalOracle:
    def test_cg_against_sympy(self, rng):
        sympy = pytest.importorskip("sympy")
        from sympy.physics.quantum.cg import CG
        S = sympy.S
        count = 0
        while count < 80:
            j1t, j2t = rng.randint(0, 5), rng.randint(0, 5)
            j1, j2 = half(Fraction(j1t, 2)), half(Fraction(j2t, 2))
            Js = hrange(abs(j1 - j2), j1 + j2)
            J = Js[rng.randint(0, len(Js) - 1)]
            m1 = rng.choice(hrange(-j1, j1))
            m2 = rng.choice(hrange(-j2, j2))
            M = m1 + m2
            if abs(M) > J:
                continue
            count += 1
            mine = cg(j1, m1, j2, m2, J, M).eval()
            ref = float(CG(S(j1t) / 2, S(m1.twice) / 2, S(j2t) / 2,
                           S(m2.twice) / 2, S(J.twice) / 2, S(M.twice) / 2).doit())
            assert mine == pytest.approx(ref, abs=1e-12), (j1, m1, j2, m2, J, M)
