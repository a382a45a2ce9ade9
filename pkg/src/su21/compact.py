"""U(2)/SU(2) representation calculus.

zyz Euler angles with a central phase, Wigner D-functions in three equivalent
forms (defining trig polynomial, terminating hypergeometric series, Jacobi
polynomials), exact Clebsch-Gordan and 3j coefficients, and the product
expansion of two D-functions.

Conventions: a group element is e^{-zeta*g0} e^{-psi*g3} e^{-theta*g2}
e^{-phi*g3} with g_i the i/2-scaled Pauli matrices, and

    W[j,n;m1,m2] = c(j,m1) c(j,m2) e^{i n zeta} e^{i(m1 psi + m2 phi)}
                   * d[j;m1,m2](theta),      c(j,m) = sqrt((j+m)!(j-m)!).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .surd import Surd, HalfInt, half, hrange, ZERO

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# angles and 2x2 unitaries
# ---------------------------------------------------------------------------

_RANGE_SLACK = 1e-9


@dataclass(frozen=True)
class EulerAngles:
    """(zeta, psi, theta, phi) with phi in (-pi,pi], theta in [0,pi],
    psi in (-pi,3pi], zeta in (-2pi,2pi]."""

    zeta: float
    psi: float
    theta: float
    phi: float

    def __post_init__(self):
        checks = [
            (-TWO_PI, self.zeta, TWO_PI, "zeta"),
            (-math.pi, self.psi, 3 * math.pi, "psi"),
            (0.0, self.theta, math.pi, "theta"),
            (-math.pi, self.phi, math.pi, "phi"),
        ]
        for lo, v, hi, name in checks:
            if not (lo - _RANGE_SLACK <= v <= hi + _RANGE_SLACK):
                raise ValueError(f"{name}={v} outside [{lo}, {hi}]")


class UnitaryMatrix2:
    """2x2 unitary with |det| = 1, stored as four complex entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, check: bool = True):
        self.a, self.b, self.c, self.d = complex(a), complex(b), complex(c), complex(d)
        if check:
            r1 = abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0
            r2 = abs(self.c) ** 2 + abs(self.d) ** 2 - 1.0
            r3 = self.a * self.c.conjugate() + self.b * self.d.conjugate()
            if max(abs(r1), abs(r2), abs(r3)) > 1e-12 or abs(abs(self.det()) - 1) > 1e-12:
                raise ValueError("matrix is not unitary within 1e-12")

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "UnitaryMatrix2") -> "UnitaryMatrix2":
        return UnitaryMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            check=False,
        )

    def inv(self) -> "UnitaryMatrix2":
        # unitary inverse = conjugate transpose
        return UnitaryMatrix2(self.a.conjugate(), self.c.conjugate(),
                              self.b.conjugate(), self.d.conjugate(), check=False)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"UnitaryMatrix2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def matrix_from_euler(angles: EulerAngles) -> UnitaryMatrix2:
    """The generic U(2) element e^{-zeta*g0} e^{-psi*g3} e^{-theta*g2} e^{-phi*g3}."""
    z, p, t, f = angles.zeta, angles.psi, angles.theta, angles.phi
    co, si = math.cos(t / 2), math.sin(t / 2)
    return UnitaryMatrix2(
        cmath.exp(0.5j * (-z - f - p)) * co,
        -cmath.exp(0.5j * (-z + f - p)) * si,
        cmath.exp(0.5j * (-z - f + p)) * si,
        cmath.exp(0.5j * (-z + f + p)) * co,
    )


def _arg2(x: float, y: float) -> float:
    """Two-argument arctan: the principal argument of x + iy, in (-pi, pi]."""
    return math.atan2(y, x)


def _fold(value: float, lo: float, period: float) -> float:
    """Shift by multiples of `period` into (lo, lo + period]."""
    out = math.fmod(value - lo, period)
    if out <= 0:
        out += period
    return out + lo


def euler_from_matrix(alpha: complex, beta: complex, zeta: float = 0.0) -> EulerAngles:
    """Euler angles of e^{-zeta*g0} [[alpha, -conj(beta)], [beta, conj(alpha)]].

    Degenerate theta in {0, pi} takes phi = 0 with the full rotation folded
    into psi (mod 4pi into (-pi, 3pi]).
    """
    nrm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(nrm - 1.0) > 1e-10:
        raise ValueError("(alpha, beta) is not on the unit sphere")
    theta = math.acos(max(-1.0, min(1.0, 1.0 - 2.0 * abs(beta) ** 2)))
    if abs(beta) < 1e-14:  # theta = 0: alpha = e^{-i(psi+phi)/2}
        return EulerAngles(zeta, _fold(-2.0 * cmath.phase(alpha), -math.pi, 4 * math.pi), 0.0, 0.0)
    if abs(alpha) < 1e-14:  # theta = pi: beta = e^{i(psi-phi)/2}
        return EulerAngles(zeta, _fold(2.0 * cmath.phase(beta), -math.pi, 4 * math.pi), math.pi, 0.0)
    ra, ia = alpha.real, alpha.imag
    rb, ib = beta.real, beta.imag
    phi = _arg2(-ia * ib + ra * rb, -ib * ra - ia * rb)
    psi0 = _arg2((beta * alpha.conjugate() + alpha * beta.conjugate()).real,
                 (2 * alpha * beta.imag - 2 * beta * alpha.imag).real)
    branch = (cmath.phase(alpha.conjugate() * beta)
              - 2 * cmath.phase(alpha.conjugate())
              + cmath.phase((alpha * beta).conjugate()))
    eps = 1.0 if cmath.exp(-0.5j * branch).real >= 0.0 else -1.0  # +-1 exactly
    psi = psi0 + math.pi * (1.0 - eps)
    return EulerAngles(zeta, psi, theta, phi)


def euler_from_unitary(u: UnitaryMatrix2) -> EulerAngles:
    """Euler angles of an arbitrary U(2) element (central phase from det)."""
    zeta = -cmath.phase(u.det())
    w = cmath.exp(0.5j * zeta)
    return euler_from_matrix(w * u.a, w * u.c, zeta)


def quaternion_from_euler(angles: EulerAngles):
    """Unit quaternion (q0, q1, q2, q3) of the SU(2) part."""
    p, t, f = angles.psi, angles.theta, angles.phi
    co, si = math.cos(t / 2), math.sin(t / 2)
    return (
        co * math.cos((p + f) / 2),
        -co * math.sin((p + f) / 2),
        -si * math.cos((f - p) / 2),
        si * math.sin((-f + p) / 2),
    )


# ---------------------------------------------------------------------------
# Wigner index and trig polynomials
# ---------------------------------------------------------------------------


class WignerIndex:
    """(j, n, m1, m2) indexing the basis function W[j,n;m1,m2].

    Requires j >= 0, j+n and j+-m_i integral, |m_i| <= j.
    """

    __slots__ = ("j", "n", "m1", "m2")

    def __init__(self, j, n, m1, m2):
        j, n, m1, m2 = (x if isinstance(x, HalfInt) else half(x) for x in (j, n, m1, m2))
        if j < 0:
            raise ValueError("j must be nonnegative")
        if not (j + n).is_integer():
            raise ValueError(f"j+n = {j + n} must be an integer")
        for name, m in (("m1", m1), ("m2", m2)):
            if not (j + m).is_integer():
                raise ValueError(f"j+{name} must be an integer")
            if abs(m) > j:
                raise ValueError(f"|{name}| exceeds j")
        self.j, self.n, self.m1, self.m2 = j, n, m1, m2

    def key(self):
        return (self.j.twice, self.n.twice, self.m1.twice, self.m2.twice)

    def __eq__(self, other):
        return isinstance(other, WignerIndex) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"W({self.j}, {self.n}; {self.m1}, {self.m2})"


class TrigPolynomial:
    """sum c[a,b] sin^a(theta/2) cos^b(theta/2) with exact Surd coefficients."""

    __slots__ = ("monomials",)

    def __init__(self, monomials=None):
        clean = {}
        for (a, b), c in (monomials or {}).items():
            if isinstance(c, (int, Fraction)):
                c = Surd.of(c)
            if not c.is_zero():
                if a < 0 or b < 0:
                    raise ValueError("negative trig exponent")
                clean[(a, b)] = c
        self.monomials = clean

    def __add__(self, other):
        out = dict(self.monomials)
        for k, c in other.monomials.items():
            s = out.get(k, ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        t = TrigPolynomial.__new__(TrigPolynomial)
        t.monomials = out
        return t

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.monomials.items():
            for (a2, b2), c2 in other.monomials.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        t = TrigPolynomial.__new__(TrigPolynomial)
        t.monomials = out
        return t

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = Surd.of(c)
        t = TrigPolynomial.__new__(TrigPolynomial)
        t.monomials = {} if c.is_zero() else {k: v * c for k, v in self.monomials.items()}
        return t

    def is_zero(self):
        return not self.monomials

    def __eq__(self, other):
        return isinstance(other, TrigPolynomial) and self.monomials == other.monomials

    def eval(self, theta: float) -> float:
        s, c = math.sin(theta / 2), math.cos(theta / 2)
        return sum(coef.eval() * s**a * c**b for (a, b), coef in self.monomials.items())

    def reduced(self):
        """Canonical form after sin^2 + cos^2 -> 1: cos appears to power <= 1.

        Returns a dict {(sin_power, cos_parity): Surd}.
        """
        out = {}
        for (a, b), coef in self.monomials.items():
            q, eps = divmod(b, 2)
            for i in range(q + 1):  # cos^{2q} = (1 - sin^2)^q
                term = coef * Surd.of(Fraction(math.comb(q, i) * (-1) ** i))
                k = (a + 2 * i, eps)
                s = out.get(k, ZERO) + term
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def equivalent(self, other) -> bool:
        """Equality as functions of theta (modulo the Pythagorean relation)."""
        return self.reduced() == other.reduced()

    def __str__(self):
        if not self.monomials:
            return "0"
        def mono(a, b):
            parts = []
            if a:
                parts.append(f"s^{a}" if a > 1 else "s")
            if b:
                parts.append(f"c^{b}" if b > 1 else "c")
            return "*".join(parts) or "1"
        keys = sorted(self.monomials, key=lambda k: (k[0], k[1]))
        return " + ".join(f"({self.monomials[k]})*{mono(*k)}" for k in keys)

    def __repr__(self):
        return f"TrigPolynomial[{self}]  (s=sin(t/2), c=cos(t/2))"


# ---------------------------------------------------------------------------
# little-d: defining sum, Jacobi route, hypergeometric route
# ---------------------------------------------------------------------------


def _check_d_index(j, m1, m2):
    j, m1, m2 = (x if isinstance(x, HalfInt) else half(x) for x in (j, m1, m2))
    if j < 0:
        raise ValueError("j must be nonnegative")
    for m in (m1, m2):
        if not (j + m).is_integer() or abs(m) > j:
            raise ValueError(f"invalid weight {m} for j={j}")
    return j, m1, m2


@lru_cache(maxsize=None)
def _little_d_cached(jt, m1t, m2t):
    j, m1, m2 = HalfInt(jt), HalfInt(m1t), HalfInt(m2t)
    terms = {}
    p_lo = max(0, (m1 - m2).as_int())
    p_hi = min((j - m2).as_int(), (j + m1).as_int())
    for p in range(p_lo, p_hi + 1):
        den = (math.factorial((j + m1).as_int() - p) * math.factorial(p)
               * math.factorial((m2 - m1).as_int() + p)
               * math.factorial((j - m2).as_int() - p))
        coef = Fraction((-1) ** ((m2 - m1).as_int() + p), den)
        a = (m2 - m1).as_int() + 2 * p
        b = (2 * j + (m1 - m2)).as_int() - 2 * p
        terms[(a, b)] = Surd.of(coef)
    return TrigPolynomial(terms)


def little_d(j, m1, m2) -> TrigPolynomial:
    """The theta-part of a Wigner D-function, as an exact trig polynomial.

    Every monomial sin^a cos^b has a + b = 2j.
    """
    j, m1, m2 = _check_d_index(j, m1, m2)
    return _little_d_cached(j.twice, m1.twice, m2.twice)


def little_d_jacobi_trig(j, m1, m2) -> TrigPolynomial:
    """little-d through the Jacobi-polynomial expression, expanded exactly.

    Uses P_n^{(a,b)}(cos t) = sum_s C(n+a, n-s) C(n+b, s) (-sin^2)^s (cos^2)^{n-s}
    in half-angle variables; generalized binomials vanish exactly where the
    sign-definite prefactor sin^{m1-m2} would have a negative exponent.
    """
    j, m1, m2 = _check_d_index(j, m1, m2)
    n = (j - m1).as_int()
    na = (j - m2).as_int()  # n + alpha
    nb = (j + m2).as_int()  # n + beta
    norm = Fraction(1, math.factorial(na) * math.factorial(nb))
    terms = {}
    for s in range(n + 1):
        c = math.comb(na, n - s) * math.comb(nb, s) if 0 <= n - s <= na and s <= nb else 0
        if c == 0:
            continue
        a = (m1 - m2).as_int() + 2 * s
        b = (2 * j - (m1 - m2)).as_int() - 2 * s
        if a < 0:
            raise AssertionError("nonvanishing coefficient at negative sin power")
        terms[(a, b)] = Surd.of(Fraction((-1) ** s * c) * norm)
    return TrigPolynomial(terms)


def _falling_binom(top: Fraction, k: int) -> Fraction:
    """Generalized binomial C(top, k) = top (top-1) ... (top-k+1) / k!."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= top - i
    return num / math.factorial(k)


def jacobi_P(n: int, alpha, beta, x: float) -> float:
    """Jacobi polynomial P_n^{(alpha,beta)}(x), finite-sum definition."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha, beta = Fraction(alpha), Fraction(beta)
    u = Fraction(x - 1.0) / 2  # exact rational image of the float argument
    total = Fraction(0)
    for m in range(n + 1):
        c = Fraction(math.comb(n, m), math.factorial(n))
        for i in range(m + 1, n + 1):
            c *= alpha + i
        for i in range(1, m + 1):
            c *= alpha + beta + n + i
        total += c * u**m
    return float(total)


def jacobi_P_hyper(n: int, alpha, beta, x: float) -> float:
    """Jacobi polynomial through the binomial * 2F1 form (second route).

    Requires alpha + 1 to stay clear of the nonpositive integers hit by the
    terminating series (guaranteed for alpha > -1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha, beta = Fraction(alpha), Fraction(beta)
    if x == -1.0:
        return float(_falling_binom(n + beta, n)) * (-1.0) ** n
    z = (x - 1.0) / (x + 1.0)
    series = 0.0
    term = 1.0
    for k in range(n + 1):
        series += term
        den = (float(alpha) + 1 + k) * (k + 1)
        if den == 0:
            raise ValueError("hypergeometric route hits a pole; use jacobi_P")
        term *= (-n + k) * (-n - float(beta) + k) / den * z
    return float(_falling_binom(n + alpha, n)) * ((x + 1.0) / 2.0) ** n * series


def little_d_jacobi(j, m1, m2, theta: float) -> float:
    """little-d evaluated through Jacobi polynomials.

    For m1 < m2 the sign-flip symmetry d[m1,m2] = (-1)^{m2-m1} d[m2,m1] avoids
    the negative power of sin in the direct expression.
    """
    j, m1, m2 = _check_d_index(j, m1, m2)
    if m1 < m2:
        return (-1.0) ** ((m2 - m1).as_int()) * little_d_jacobi(j, m2, m1, theta)
    a = (m1 - m2).as_int()
    b = (m1 + m2).as_int()
    n = (j - m1).as_int()
    norm = math.factorial((j + m2).as_int()) * math.factorial((j - m2).as_int())
    return (math.sin(theta / 2) ** a * math.cos(theta / 2) ** b / norm
            * jacobi_P(n, a, b, math.cos(theta)))


def little_d_hyper(j, m1, m2, theta: float) -> float:
    """little-d evaluated through the terminating hypergeometric series."""
    j, m1, m2 = _check_d_index(j, m1, m2)
    s, c = math.sin(theta / 2), math.cos(theta / 2)
    if c == 0.0:
        return little_d(j, m1, m2).eval(theta)
    z = -Fraction(s) ** 2 / Fraction(c) ** 2  # exact, so the alternating sum cannot cancel
    if m1 > m2:
        k = (m1 - m2).as_int()
        pref = s**k * c ** ((2 * j - (m1 - m2)).as_int()) / (
            math.factorial((j - m1).as_int()) * math.factorial(k)
            * math.factorial((j + m2).as_int()))
        p, q = (m1 - j).as_int(), (-j - m2).twice // 2
        nmax = (j - m1).as_int()
    else:
        k = (m2 - m1).as_int()
        pref = (-1) ** k * s**k * c ** ((2 * j + (m1 - m2)).as_int()) / (
            math.factorial((j + m1).as_int()) * math.factorial(k)
            * math.factorial((j - m2).as_int()))
        p, q = (-j - m1).twice // 2, (m2 - j).as_int()
        nmax = min((j + m1).as_int(), (j - m2).as_int())
    series, term = Fraction(0), Fraction(1)
    for i in range(nmax + 1):
        series += term
        term *= Fraction((p + i) * (q + i), (k + 1 + i) * (i + 1)) * z
    return pref * float(series)


@lru_cache(maxsize=None)
def _c_factor(jt: int, mt: int) -> Surd:
    j, m = HalfInt(jt), HalfInt(mt)
    return Surd.sqrt(math.factorial((j + m).as_int()) * math.factorial((j - m).as_int()))


def c_factor(j, m) -> Surd:
    """Normalization sqrt((j+m)!(j-m)!)."""
    j, m = (x if isinstance(x, HalfInt) else half(x) for x in (j, m))
    return _c_factor(j.twice, m.twice)


def wigner_D(idx: WignerIndex, angles: EulerAngles) -> complex:
    """Matrix coefficient of the irreducible U(2)-representation (j, n)."""
    cc = (c_factor(idx.j, idx.m1) * c_factor(idx.j, idx.m2)).eval()
    phase = cmath.exp(1j * (float(idx.n) * angles.zeta
                            + float(idx.m1) * angles.psi
                            + float(idx.m2) * angles.phi))
    return cc * phase * little_d(idx.j, idx.m1, idx.m2).eval(angles.theta)


def wigner_D_matrix_arg(idx: WignerIndex, u: UnitaryMatrix2) -> complex:
    """wigner_D with the group element given as a 2x2 unitary."""
    return wigner_D(idx, euler_from_unitary(u))


# ---------------------------------------------------------------------------
# Clebsch-Gordan / 3j
# ---------------------------------------------------------------------------

# memo keyed by doubled (j1, j2, J); values are immutable once inserted, and
# a racing duplicate insert under the GIL just recomputes the same table
_cg_tables: dict = {}


def _coupled_states(j1t: int, j2t: int, Jt: int):
    """dict M.twice -> dict m1.twice -> Surd for the coupled basis of (j1, j2, J).

    Built from the top weight state down: the top state is fixed (up to the
    standard positive-leading-coefficient convention) by annihilation under
    the raising operator, lower states follow by applying the lowering
    operator.  All arithmetic is exact.
    """
    key = (j1t, j2t, Jt)
    if key in _cg_tables:
        return _cg_tables[key]
    j1, j2, J = Fraction(j1t, 2), Fraction(j2t, 2), Fraction(Jt, 2)
    states = {}
    # top state |J, J>
    top = {}
    m1_lo, m1_hi = max(-j1, J - j2), min(j1, J + j2)
    a = Surd.of(1)
    m1 = m1_lo
    top[m1] = a
    while m1 < m1_hi:
        num = Surd.sqrt((j1 - m1) * (j1 + m1 + 1))
        den = Surd.sqrt((j2 - J + m1 + 1) * (j2 + J - m1))
        a = -(a * num) / den
        m1 += 1
        top[m1] = a
    norm2 = sum((c * c).as_rational() for c in top.values())
    scale = Surd.of(1) / Surd.sqrt(norm2)
    if top[m1_hi].eval() < 0:
        scale = -scale  # leading coefficient (largest m1) positive
    cur = {m1: c * scale for m1, c in top.items() if not (c * scale).is_zero()}
    states[J] = cur
    # lower
    M = J
    while M > -J:
        nxt = {}
        inv = Surd.of(1) / Surd.sqrt((J + M) * (J - M + 1))
        for m1, c in cur.items():
            m2 = M - m1
            if m1 - 1 >= max(-j1, M - 1 - j2):
                t = c * Surd.sqrt((j1 + m1) * (j1 - m1 + 1)) * inv
                nxt[m1 - 1] = nxt.get(m1 - 1, ZERO) + t
            if m2 - 1 >= -j2:
                t = c * Surd.sqrt((j2 + m2) * (j2 - m2 + 1)) * inv
                nxt[m1] = nxt.get(m1, ZERO) + t
        cur = {m1: c for m1, c in nxt.items() if not c.is_zero()}
        M -= 1
        states[M] = cur
    table = {int(2 * M): {int(2 * m1): c for m1, c in st.items()}
             for M, st in states.items()}
    _cg_tables[key] = table
    return table


def cg(j1, m1, j2, m2, J, M) -> Surd:
    """Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, exact.

    Zero (not an error) when M != m1+m2 or J fails the triangle rule;
    parity violations between each j and its m raise.
    """
    j1, m1, j2, m2, J, M = (x if isinstance(x, HalfInt) else half(x)
                            for x in (j1, m1, j2, m2, J, M))
    for j, m in ((j1, m1), (j2, m2), (J, M)):
        if j < 0 or not (j + m).is_integer():
            raise ValueError(f"invalid weight pair (j={j}, m={m})")
    if abs(m1) > j1 or abs(m2) > j2 or abs(M) > J:
        return ZERO
    if (m1 + m2) != M or J < abs(j1 - j2) or J > j1 + j2:
        return ZERO
    if not (J - abs(j1 - j2)).is_integer():
        return ZERO
    table = _coupled_states(j1.twice, j2.twice, J.twice)
    return table.get(M.twice, {}).get(m1.twice, ZERO)


def threej(j1, j2, j3, m1, m2, m3) -> Surd:
    """Wigner 3j symbol, exact; zero when any selection rule fails."""
    j1, j2, j3, m1, m2, m3 = (x if isinstance(x, HalfInt) else half(x)
                              for x in (j1, j2, j3, m1, m2, m3))
    for j, m in ((j1, m1), (j2, m2), (j3, m3)):
        if j < 0 or not (j + m).is_integer() or abs(m) > j:
            return ZERO
    if (m1 + m2 + m3) != 0:
        return ZERO
    if j3 < abs(j1 - j2) or j3 > j1 + j2:
        return ZERO
    if not (j1 + j2 + j3).is_integer():
        return ZERO
    M = -m3
    sign = -1 if (j2 - j1 - M).as_int() % 2 else 1
    return cg(j1, m1, j2, m2, j3, M) * sign / Surd.sqrt((2 * j3 + 1).as_int())


def product_expand(idx1: WignerIndex, idx2: WignerIndex):
    """Expand W[idx1] * W[idx2] as sum of (coefficient, WignerIndex).

    Coefficients are products of two Clebsch-Gordan values.
    """
    out = []
    M1, M2 = idx1.m1 + idx2.m1, idx1.m2 + idx2.m2
    for J in hrange(abs(idx1.j - idx2.j), idx1.j + idx2.j):
        if abs(M1) > J or abs(M2) > J:
            continue
        c = (cg(idx1.j, idx1.m1, idx2.j, idx2.m1, J, M1)
             * cg(idx1.j, idx1.m2, idx2.j, idx2.m2, J, M2))
        if not c.is_zero():
            out.append((c, WignerIndex(J, idx1.n + idx2.n, M1, M2)))
    return out
