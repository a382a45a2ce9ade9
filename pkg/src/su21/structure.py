"""Concrete 3x3 matrix layer for su(2,1).

Named generators of the maximal compact subalgebra and the root spaces, the
Cayley transform between the compact and maximally split Cartan frames,
the nilpotent chart n_{z,w}, the four Lie-algebra Iwasawa identities, and
the group-level KAN factorization used by the intertwining integral.

Exact matrices carry CSurd entries (complex numbers with surd real/imaginary
parts), so every identity here is checked with no rounding at all; only the
group factorization, whose entries involve sqrt((|z|^2+1)^2 + 4w^2), works in
floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .surd import Surd, CSurd

HALF = Fraction(1, 2)


class Matrix3C:
    """3x3 complex matrix, exact (CSurd entries) or float (numpy) mode."""

    __slots__ = ("rows", "exact")

    def __init__(self, rows, exact: bool = True):
        if exact:
            self.rows = tuple(tuple(_centry(e) for e in row) for row in rows)
        else:
            self.rows = np.asarray(rows, dtype=complex)
        self.exact = exact

    @staticmethod
    def zero() -> "Matrix3C":
        return Matrix3C([[0, 0, 0], [0, 0, 0], [0, 0, 0]])

    @staticmethod
    def identity() -> "Matrix3C":
        return Matrix3C([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def __add__(self, other: "Matrix3C") -> "Matrix3C":
        if self.exact and other.exact:
            return Matrix3C([[a + b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.rows, other.rows)])
        return Matrix3C(self.to_numpy() + other.to_numpy(), exact=False)

    def __sub__(self, other: "Matrix3C") -> "Matrix3C":
        return self + other.scale(-1)

    def __matmul__(self, other: "Matrix3C") -> "Matrix3C":
        if self.exact and other.exact:
            out = [[CSurd() for _ in range(3)] for _ in range(3)]
            for i in range(3):
                for k in range(3):
                    a = self.rows[i][k]
                    if a.is_zero():
                        continue
                    for j in range(3):
                        out[i][j] = out[i][j] + a * other.rows[k][j]
            return Matrix3C(out)
        return Matrix3C(self.to_numpy() @ other.to_numpy(), exact=False)

    def scale(self, c) -> "Matrix3C":
        if self.exact:
            return Matrix3C([[e * _centry(c) for e in row] for row in self.rows])
        return Matrix3C(self.to_numpy() * complex(c), exact=False)

    def bracket(self, other: "Matrix3C") -> "Matrix3C":
        return self @ other - other @ self

    def conj_transpose(self) -> "Matrix3C":
        if self.exact:
            return Matrix3C([[self.rows[j][i].conj() for j in range(3)] for i in range(3)])
        return Matrix3C(self.to_numpy().conj().T, exact=False)

    def is_zero(self) -> bool:
        if self.exact:
            return all(e.is_zero() for row in self.rows for e in row)
        return bool(np.all(np.abs(self.rows) < 1e-12))

    def __eq__(self, other):
        if not isinstance(other, Matrix3C):
            return NotImplemented
        return (self - other).is_zero()

    def to_numpy(self) -> np.ndarray:
        if self.exact:
            return np.array([[complex(e) for e in row] for row in self.rows])
        return self.rows

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def __repr__(self):
        if self.exact:
            body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
            return f"Matrix3C[{body}]"
        return f"Matrix3C(float)\n{self.rows}"


def _centry(e) -> CSurd:
    if isinstance(e, CSurd):
        return e
    if isinstance(e, Surd):
        return CSurd(e)
    if isinstance(e, complex):
        re, im = Fraction(e.real), Fraction(e.imag)
        return CSurd(Surd.of(re), Surd.of(im))
    return CSurd(Surd.of(Fraction(e)))


def _m(entries) -> Matrix3C:
    return Matrix3C(entries)


I = CSurd.I
J_FORM = _m([[1, 0, 0], [0, 1, 0], [0, 0, -1]])  # the Hermitian form diag(1,1,-1)

# compact generators (images of the i/2-scaled Pauli matrices in su(2,1))
U0 = _m([[I * HALF, 0, 0], [0, I * HALF, 0], [0, 0, -I]])
U1 = _m([[0, I * HALF, 0], [I * HALF, 0, 0], [0, 0, 0]])
U2 = _m([[0, HALF, 0], [-HALF, 0, 0], [0, 0, 0]])
U3 = _m([[I * HALF, 0, 0], [0, -I * HALF, 0], [0, 0, 0]])

# Cartan and root generators of sl(3)
H1 = _m([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
H2 = _m([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
X_A1 = _m([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
X_A2 = _m([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
X_A12 = _m([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
X_MA1 = _m([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
X_MA2 = _m([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
X_MA12 = _m([[0, 0, 0], [0, 0, 0], [1, 0, 0]])

# weight vectors of the noncompact part, with their (m, n) weight pairs
V_ALPHA = {
    "a2": X_A2.scale(-1),
    "a1+a2": X_A12,
    "-a2": X_MA2,
    "-a1-a2": X_MA12,
}
WEIGHT_PAIRS = {
    "a2": (Fraction(-1, 2), Fraction(3, 2)),
    "a1+a2": (Fraction(1, 2), Fraction(3, 2)),
    "-a2": (Fraction(1, 2), Fraction(-3, 2)),
    "-a1-a2": (Fraction(-1, 2), Fraction(-3, 2)),
}
POSITIVE_ROOTS = ("a2", "a1+a2")
NEGATIVE_ROOTS = ("-a2", "-a1-a2")
ROOT_TAGS = POSITIVE_ROOTS + NEGATIVE_ROOTS

A_GEN = X_A12 + X_MA12  # generator of the split line
W0 = _m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])  # restricted Weyl reflection

BASIS_MATRICES = {
    "U0": U0, "U1": U1, "U2": U2, "U3": U3,
    "H1": H1, "H2": H2,
    "X(a1)": X_A1, "X(a2)": X_A2, "X(a1+a2)": X_A12,
    "X(-a1)": X_MA1, "X(-a2)": X_MA2, "X(-a1-a2)": X_MA12,
    "v(a2)": V_ALPHA["a2"], "v(-a2)": V_ALPHA["-a2"],
    "v(a1+a2)": V_ALPHA["a1+a2"], "v(-a1-a2)": V_ALPHA["-a1-a2"],
}


def basis_matrix(tag: str) -> Matrix3C:
    """Exact matrix of a named generator."""
    try:
        return BASIS_MATRICES[tag]
    except KeyError:
        raise ValueError(f"unknown generator tag {tag!r}") from None


def sigma(x: Matrix3C) -> Matrix3C:
    """Conjugation fixing the real form: X -> -J conj(X)^t J."""
    return (J_FORM @ x.conj_transpose() @ J_FORM).scale(-1)


def theta_involution(x: Matrix3C) -> Matrix3C:
    """Cartan involution X -> -conj(X)^t (= J X J on the real form)."""
    return x.conj_transpose().scale(-1)


def n_matrix(z_re, z_im, w) -> Matrix3C:
    """Element n_{z,w} of the positive restricted-root spaces, exact.

    z = z_re + i z_im parametrizes the 2-dimensional root space, w the
    1-dimensional one.
    """
    z = CSurd(Surd.of(Fraction(z_re)), Surd.of(Fraction(z_im)))
    zbar = z.conj()
    iw = I * Fraction(w)
    return _m([[iw, z, -iw], [-zbar, 0, zbar], [iw, z, -iw]])


def n_matrix_float(z: complex, w: float) -> np.ndarray:
    iw = 1j * w
    return np.array([[iw, z, -iw], [-z.conjugate(), 0, z.conjugate()], [iw, z, -iw]])


# ---------------------------------------------------------------------------
# Cayley transform
# ---------------------------------------------------------------------------

_S2H = Surd.sqrt(Fraction(1, 2))  # sqrt(2)/2

# exp((pi/4)(sigma(v_{a1+a2}) - v_{a1+a2})): the exponent generates a plane
# rotation in the (1,3) coordinates, so the exponential closes in sqrt(2)/2.
CAYLEY_P = _m([[_S2H, 0, -_S2H], [0, 1, 0], [_S2H, 0, _S2H]])
CAYLEY_Q = _m([[_S2H, 0, _S2H], [0, 1, 0], [-_S2H, 0, _S2H]])  # inverse


def cayley_matrix() -> Matrix3C:
    """The group element implementing the Cayley transform (exact entries)."""
    return CAYLEY_P


def cayley_conj(x: Matrix3C, inverse: bool = False) -> Matrix3C:
    """Ad of the Cayley element: P X P^{-1} (or Q X Q^{-1} with inverse=True)."""
    if inverse:
        return CAYLEY_Q @ x @ CAYLEY_P
    return CAYLEY_P @ x @ CAYLEY_Q


# ---------------------------------------------------------------------------
# Lie-algebra Iwasawa identities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValphaDecomposition:
    """v_alpha = k_part + a_part + n_part along k + m + a + n^+."""

    root: str
    k_part: Matrix3C
    a_part: Matrix3C
    n_part: Matrix3C

    def reassembled(self) -> Matrix3C:
        return self.k_part + self.a_part + self.n_part

    def verify(self) -> bool:
        return self.reassembled() == V_ALPHA[self.root]


def iwasawa_valpha(root: str) -> ValphaDecomposition:
    """The exact k/a/n splitting of a noncompact weight vector."""
    ih = I * HALF
    if root == "a1+a2":
        return ValphaDecomposition(root, (U0 + U3).scale(-ih), A_GEN.scale(HALF),
                                   n_matrix(0, 0, 1).scale(ih))
    if root == "-a1-a2":
        return ValphaDecomposition(root, (U0 + U3).scale(ih), A_GEN.scale(HALF),
                                   n_matrix(0, 0, 1).scale(-ih))
    if root == "a2":
        k = (U1 - U2.scale(I)).scale(I)
        return ValphaDecomposition(root, k, Matrix3C.zero(),
                                   n_matrix(1, 0, 0).scale(-HALF) + n_matrix(0, 1, 0).scale(-ih))
    if root == "-a2":
        k = (U1 + U2.scale(I)).scale(I)
        return ValphaDecomposition(root, k, Matrix3C.zero(),
                                   n_matrix(1, 0, 0).scale(HALF) + n_matrix(0, 1, 0).scale(-ih))
    raise ValueError(f"unknown noncompact root tag {root!r}")


# ---------------------------------------------------------------------------
# coordinates on k + p
# ---------------------------------------------------------------------------

KP_BASIS = ("U0", "U1", "U2", "U3", "v(a2)", "v(-a2)", "v(a1+a2)", "v(-a1-a2)")


def express_in_kp(x: Matrix3C) -> dict:
    """Exact coordinates of x over {U_i} + {v_alpha}; raises if x is outside."""
    cols = [basis_matrix(t) for t in KP_BASIS]
    # 9 equations (matrix entries), 8 unknowns; Gaussian elimination over CSurd
    rows = []
    for i in range(3):
        for j in range(3):
            rows.append([c.rows[i][j] for c in cols] + [x.rows[i][j]])
    ncols = len(KP_BASIS)
    pivot_rows = []
    used = [False] * len(rows)
    for col in range(ncols):
        piv = next((r for r in range(len(rows))
                    if not used[r] and not rows[r][col].is_zero()), None)
        if piv is None:
            continue
        used[piv] = True
        pivot_rows.append((col, piv))
        inv = CSurd.of(1) / rows[piv][col]
        rows[piv] = [e * inv for e in rows[piv]]
        for r in range(len(rows)):
            if r != piv and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
    coeffs = {}
    solved = {col: piv for col, piv in pivot_rows}
    for col, tag in enumerate(KP_BASIS):
        coeffs[tag] = rows[solved[col]][-1] if col in solved else CSurd()
    for r in range(len(rows)):
        if not used[r] and not rows[r][-1].is_zero():
            raise ValueError("matrix is outside the k + p span")
    return coeffs


# ---------------------------------------------------------------------------
# group-level Iwasawa factorization of the opposite unipotent
# ---------------------------------------------------------------------------


@dataclass
class IwasawaFactors:
    """nbar(z, w) = k * a * n in SU(2,1); float matrices."""

    k: np.ndarray
    a: np.ndarray
    n: np.ndarray
    source: np.ndarray  # the factored element

    def reassembly_error(self) -> float:
        return float(np.max(np.abs(self.k @ self.a @ self.n - self.source)))

    def k_block(self):
        """The U(2) block of the K factor, for D-function evaluation."""
        from .compact import UnitaryMatrix2
        k = self.k
        return UnitaryMatrix2(k[0, 0], k[0, 1], k[1, 0], k[1, 1])


_P_FLOAT = CAYLEY_P.to_numpy()
_Q_FLOAT = CAYLEY_Q.to_numpy()


def nbar_group(z: complex, w: float) -> np.ndarray:
    """The opposite-unipotent group element parametrized by (z, w)."""
    lower = np.array([
        [1, 0, 0],
        [math.sqrt(2) * z, 1, 0],
        [abs(z) ** 2 - 2j * w, math.sqrt(2) * z.conjugate(), 1],
    ], dtype=complex)
    return _P_FLOAT @ lower @ _Q_FLOAT


def iwasawa_k_matrix(z: complex, w: float) -> np.ndarray:
    """The K factor of nbar(z, w), block-diagonal in U(2) x U(1)."""
    z = complex(z)
    q = abs(z) ** 2
    norm = math.sqrt((q + 1.0) ** 2 + 4.0 * w * w)
    d = q - 2j * w + 1.0
    return np.array([
        [-(q - 2j * w - 1.0) / norm, -2.0 * z.conjugate() / d, 0],
        [2.0 * z / norm, -(q + 2j * w - 1.0) / d, 0],
        [0, 0, (q - 2j * w + 1.0) / norm],
    ])


def iwasawa_group(z: complex, w: float) -> IwasawaFactors:
    """K * A * N factorization of nbar(z, w); reassembles within 1e-10."""
    z = complex(z)
    q = abs(z) ** 2
    norm = math.sqrt((q + 1.0) ** 2 + 4.0 * w * w)
    k = iwasawa_k_matrix(z, w)
    a_diag = np.diag([norm, 1.0, 1.0 / norm]).astype(complex)
    n_upper = np.array([
        [1, math.sqrt(2) * z.conjugate() / (q - 2j * w + 1), (q + 2j * w) / norm**2],
        [0, 1, math.sqrt(2) * z / (q + 2j * w + 1)],
        [0, 0, 1],
    ], dtype=complex)
    return IwasawaFactors(
        k=k,
        a=_P_FLOAT @ a_diag @ _Q_FLOAT,
        n=_P_FLOAT @ n_upper @ _Q_FLOAT,
        source=nbar_group(z, w),
    )


def in_su21(g: np.ndarray, tol: float = 1e-10) -> bool:
    """Membership check g^dagger J g = J, det g = 1."""
    j = np.diag([1.0, 1.0, -1.0])
    return (np.max(np.abs(g.conj().T @ j @ g - j)) < tol
            and abs(np.linalg.det(g) - 1.0) < tol)


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------


def structure_identity_suite(rng=None) -> list:
    """Run the exact identity checks; returns [(name, passed), ...]."""
    import random
    rng = rng or random.Random(20240901)
    results = []

    def check(name, ok):
        results.append((name, bool(ok)))

    # Pauli commutators under the U(2) -> K embedding: [U_i, U_j] = -eps_{ijk} U_k
    us = {1: U1, 2: U2, 3: U3}
    eps = {(1, 2): 3, (2, 3): 1, (3, 1): 2}
    ok = all(us[i].bracket(us[j]) == us[k].scale(-1) for (i, j), k in eps.items())
    ok = ok and all(U0.bracket(u).is_zero() for u in (U1, U2, U3))
    check("compact commutation relations", ok)

    check("v-table: v(a2) = -X(a2)", V_ALPHA["a2"] == X_A2.scale(-1))
    check("U3 diagonal", U3 == _m([[I * HALF, 0, 0], [0, -I * HALF, 0], [0, 0, 0]]))

    for root in ROOT_TAGS:
        check(f"iwasawa split of v({root})", iwasawa_valpha(root).verify())

    # sigma-conjugation symmetry of the weight vectors
    check("sigma(v(a1+a2)) = v(-a1-a2)", sigma(V_ALPHA["a1+a2"]) == V_ALPHA["-a1-a2"])
    check("sigma(v(a2)) = -v(-a2)", sigma(V_ALPHA["a2"]) == V_ALPHA["-a2"].scale(-1))

    # Cayley transform
    check("cayley sends a-line to the compact Cartan",
          cayley_conj(A_GEN, inverse=True) == H1 + H2)
    check("cayley inverse pair", CAYLEY_P @ CAYLEY_Q == Matrix3C.identity())
    check("cayley images the Cartan into the a-line",
          cayley_conj(H1 + H2) == A_GEN)

    # raising/lowering on the weight vectors: ad(U1 +- iU2) v_a = -i v_{a1 +- a}
    up = U1 + U2.scale(I)
    dn = U1 - U2.scale(I)
    check("ad(U1+iU2) v(a2) = -i v(a1+a2)",
          up.bracket(V_ALPHA["a2"]) == V_ALPHA["a1+a2"].scale(-I))
    check("ad(U1-iU2) v(a1+a2) = -i v(a2)",
          dn.bracket(V_ALPHA["a1+a2"]) == V_ALPHA["a2"].scale(-I))
    check("ad(U1+iU2) v(-a1-a2) = -i v(-a2)",
          up.bracket(V_ALPHA["-a1-a2"]) == V_ALPHA["-a2"].scale(-I))
    check("ad(U1-iU2) v(-a2) = -i v(-a1-a2)",
          dn.bracket(V_ALPHA["-a2"]) == V_ALPHA["-a1-a2"].scale(-I))

    # infinitesimal weight correspondence at random rational (a, b)
    ok = True
    for _ in range(5):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        h = U0.scale(a) + U3.scale(b)
        for tag, (mw, nw) in WEIGHT_PAIRS.items():
            expect = V_ALPHA[tag].scale(I * (nw * a + mw * b))
            ok = ok and h.bracket(V_ALPHA[tag]) == expect
    check("weight pairs (m, n) under ad of the compact torus", ok)

    # restricted-root grading against the split generator
    check("[a-gen, n(z,0)] = n(z,0)",
          A_GEN.bracket(n_matrix(2, 3, 0)) == n_matrix(2, 3, 0))
    check("[a-gen, n(0,w)] = 2 n(0,w)",
          A_GEN.bracket(n_matrix(0, 0, 5)) == n_matrix(0, 0, 5).scale(2))
    low1 = theta_involution(n_matrix(2, 3, 0))
    low2 = theta_involution(n_matrix(0, 0, 5))
    check("[a-gen, lower chart] = -1, -2",
          A_GEN.bracket(low1) == low1.scale(-1)
          and A_GEN.bracket(low2) == low2.scale(-2))

    # 2a0-part additivity: the bracket of two a0-chart elements is pure n(0, .)
    br = n_matrix(1, 0, 0).bracket(n_matrix(0, 1, 0))
    check("[n(1,0), n(i,0)] proportional to n(0,w)",
          any(br == n_matrix(0, 0, w) for w in (-8, -4, -2, -1, 1, 2, 4, 8)))

    # n_{z,w} upper-triangularizes in the Cayley frame
    tri = cayley_conj(n_matrix(2, 1, 3), inverse=True)
    check("n(z,w) upper triangular after cayley",
          all(tri.rows[i][j].is_zero() for i in range(3) for j in range(3) if i > j))

    # express_in_kp spot identities
    c = express_in_kp(X_A1)
    check("X(a1) = -i(U1 + iU2)",
          c["U1"] == CSurd.of(0, -1) and c["U2"] == CSurd.of(1)
          and all(c[t].is_zero() for t in KP_BASIS if t not in ("U1", "U2")))
    c = express_in_kp(H1)
    check("H1 = -2i U3", c["U3"] == CSurd.of(0, -2)
          and all(c[t].is_zero() for t in KP_BASIS if t != "U3"))
    c = express_in_kp(V_ALPHA["a2"])
    check("v(a2) = itself", c["v(a2)"] == CSurd.of(1)
          and all(c[t].is_zero() for t in KP_BASIS if t != "v(a2)"))

    # group Iwasawa reassembly and K membership over random points
    ok_re, ok_k = True, True
    for _ in range(100):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        w = rng.uniform(-3, 3)
        fac = iwasawa_group(z, w)
        ok_re = ok_re and fac.reassembly_error() < 1e-10
        ok_k = ok_k and in_su21(fac.k) and abs(np.linalg.det(fac.k) - 1) < 1e-10
        ok_k = ok_k and np.max(np.abs(fac.k.conj().T @ fac.k - np.eye(3))) < 1e-10
    check("group iwasawa reassembly within 1e-10 (100 random points)", ok_re)
    check("K factor in SU(2,1) and U(3)", ok_k)

    return results
