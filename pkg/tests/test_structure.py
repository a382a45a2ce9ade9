from fractions import Fraction

import numpy as np
import pytest

from su21.surd import Surd, CSurd
from su21 import structure as st


def test_identity_suite_all_pass():
    results = st.structure_identity_suite()
    failed = [name for name, ok in results if not ok]
    assert not failed, failed


def test_named_generators():
    u3 = st.basis_matrix("U3").to_numpy()
    assert np.allclose(u3, np.diag([0.5j, -0.5j, 0.0]))
    assert st.basis_matrix("v(a2)") == st.basis_matrix("X(a2)").scale(-1)
    with pytest.raises(ValueError):
        st.basis_matrix("nonsense")


def test_bracket_u1_u2():
    assert st.U1.bracket(st.U2) == st.U3.scale(-1)


def test_cayley_exact_entries():
    p = st.cayley_matrix()
    assert p.entry(0, 0).re == Surd.sqrt(Fraction(1, 2))
    assert (p @ st.CAYLEY_Q) == st.Matrix3C.identity()
    assert st.cayley_conj(st.A_GEN, inverse=True) == st.H1 + st.H2


def test_iwasawa_valpha_exact():
    for root in st.ROOT_TAGS:
        dec = st.iwasawa_valpha(root)
        assert dec.verify(), root
    with pytest.raises(ValueError):
        st.iwasawa_valpha("a1")  # compact root has no such splitting


def test_express_in_kp_spot():
    c = st.express_in_kp(st.basis_matrix("X(a1)"))
    assert c["U1"] == CSurd.of(0, -1) and c["U2"] == CSurd.of(1)
    c = st.express_in_kp(st.H1)
    assert c["U3"] == CSurd.of(0, -2)
    c = st.express_in_kp(st.basis_matrix("v(a2)"))
    assert c["v(a2)"] == CSurd.of(1)
    # round-trip for every bracket of basis elements
    tags = list(st.KP_BASIS)
    for t1 in tags:
        for t2 in tags:
            m = st.basis_matrix(t1).bracket(st.basis_matrix(t2))
            coeffs = st.express_in_kp(m)
            rebuilt = st.Matrix3C.zero()
            for tag, c in coeffs.items():
                rebuilt = rebuilt + st.basis_matrix(tag).scale(c)
            assert rebuilt == m, (t1, t2)


def test_express_in_kp_outside_span():
    bad = st.Matrix3C([[1, 0, 0], [0, 1, 0], [0, 0, 1]])  # not traceless
    with pytest.raises(ValueError):
        st.express_in_kp(bad)


def test_nbar_membership():
    rng = np.random.default_rng(7)
    for _ in range(20):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        w = rng.uniform(-2, 2)
        g = st.nbar_group(z, w)
        assert st.in_su21(g)


def test_iwasawa_group_reassembly():
    rng = np.random.default_rng(11)
    for _ in range(100):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        w = rng.uniform(-3, 3)
        fac = st.iwasawa_group(z, w)
        assert fac.reassembly_error() < 1e-10
        assert st.in_su21(fac.k)
        assert np.max(np.abs(fac.k.conj().T @ fac.k - np.eye(3))) < 1e-10
        assert abs(np.linalg.det(fac.k) - 1.0) < 1e-10
        # a and n land in the right subgroups: positive-diagonal and unipotent
        # in the Cayley frame
        a_diag = st.CAYLEY_Q.to_numpy() @ fac.a @ st.CAYLEY_P.to_numpy()
        n_tri = st.CAYLEY_Q.to_numpy() @ fac.n @ st.CAYLEY_P.to_numpy()
        assert np.max(np.abs(a_diag - np.diag(np.diag(a_diag)))) < 1e-10
        assert np.min(np.diag(a_diag).real) > 0
        assert np.max(np.abs(np.tril(n_tri, -1))) < 1e-10
        assert np.max(np.abs(np.diag(n_tri) - 1.0)) < 1e-10


def test_iwasawa_group_trivial():
    fac = st.iwasawa_group(0.0, 0.0)
    for m in (fac.k, fac.a, fac.n):
        assert np.allclose(m, np.eye(3), atol=1e-14)


def test_k_block_feeds_wigner():
    from su21.compact import wigner_D_matrix_arg, WignerIndex
    fac = st.iwasawa_group(1 + 1j, 0.5)
    u = fac.k_block()
    # the U(2) block determines the third entry by det^(-1)
    assert fac.k[2, 2] == pytest.approx(1.0 / u.det(), abs=1e-12)
    v = wigner_D_matrix_arg(WignerIndex(0, 0, 0, 0), u)
    assert v == pytest.approx(1.0, abs=1e-14)
