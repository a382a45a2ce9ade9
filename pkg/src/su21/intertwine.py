"""The long intertwining operator on each K-type, by three independent paths.

1. a_closed    -- the closed Gamma-ratio formula (grouped into Pochhammer
                  products so cancelling prefactor poles never appear);
2. a_gammasum  -- the finite triple sum of multinomial coefficients;
3. a_quadrature-- direct numerical integration of the defining singular
                  integral over the opposite unipotent group.

All paths share one complex log-Gamma kernel (Lanczos with reflection), so a
disagreement isolates a formula error rather than a Gamma implementation
difference.  Exact zero/pole bookkeeping is available for integral
parameters, where the operator's zeros encode reducibility.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.integrate import quad

from .surd import HalfInt, half
from .compact import WignerIndex

PI = math.pi


# ---------------------------------------------------------------------------
# complex log-Gamma (Lanczos g = 7 with reflection)
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_C0 = 0.99999999999980993
_LANCZOS_C = (
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def is_nonpositive_int(z) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


def log_gamma(z) -> complex:
    """A logarithm of Gamma(z); accurate to ~14 digits away from the poles."""
    z = complex(z)
    if is_nonpositive_int(z):
        raise ZeroDivisionError(f"log_gamma pole at {z}")
    if z.real < 0.5:
        # reflection; adequate for the moderate imaginary parts used here
        return cmath.log(PI / cmath.sin(PI * z)) - log_gamma(1.0 - z)
    z -= 1.0
    x = _LANCZOS_C0
    for i, c in enumerate(_LANCZOS_C):
        x += c / (z + i + 1.0)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * PI) + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma_fn(z) -> complex:
    if is_nonpositive_int(z):
        return complex("inf")
    return cmath.exp(log_gamma(z))


def recip_gamma(z) -> complex:
    """1/Gamma(z), with the exact zero at nonpositive integers."""
    if is_nonpositive_int(z):
        return 0.0 + 0.0j
    return cmath.exp(-log_gamma(z))


def pochhammer(x, n: int):
    """x (x+1) ... (x+n-1); exact for Fraction input."""
    out = Fraction(1) if isinstance(x, (int, Fraction)) else complex(1.0)
    for i in range(n):
        out = out * (x + i)
    return out


def falling(x, n: int):
    """x (x-1) ... (x-n+1); exact for Fraction input."""
    out = Fraction(1) if isinstance(x, (int, Fraction)) else complex(1.0)
    for i in range(n):
        out = out * (x - i)
    return out


# ---------------------------------------------------------------------------
# Gamma ratios with zero/pole bookkeeping
# ---------------------------------------------------------------------------


@dataclass
class GammaRatio:
    """prefactor * pi^pi_power * 2^two_exp * prod Gamma(num) / prod Gamma(den).

    Arguments may be exact Fractions (bookkeeping mode) or complex numbers
    (evaluation only).  `order` counts zeros minus poles: a positive order is
    a zero of the value, a negative order a pole.
    """

    num: list
    den: list
    pi_power: int = 0
    two_exp: object = 0
    prefactor: object = 1

    def order(self) -> int:
        o = 0
        for a in self.den:
            if isinstance(a, (int, Fraction)) and is_nonpositive_int(Fraction(a)):
                o += 1
        for a in self.num:
            if isinstance(a, (int, Fraction)) and is_nonpositive_int(Fraction(a)):
                o -= 1
        return o

    def exact_coefficient(self) -> Fraction:
        """The rational value of the Gamma quotient (pi/2 powers excluded).

        Defined when the order is 0 and every argument is an integer; pole
        pairs are resolved by the residue limit G(-a+e)/G(-b+e) ->
        (-1)^(a+b) b!/a!.
        """
        if self.order() != 0:
            raise ValueError("zero or pole; no finite coefficient")
        num = [Fraction(a) for a in self.num]
        den = [Fraction(a) for a in self.den]
        if any(a.denominator != 1 for a in num + den):
            raise ValueError("non-integer Gamma argument; no rational value")
        npoles = [int(-a) for a in num if a <= 0]
        dpoles = [int(-a) for a in den if a <= 0]
        out = Fraction(self.prefactor)
        for a, b in zip(npoles, dpoles):  # order 0 means equal counts
            out *= Fraction((-1) ** (a + b) * math.factorial(b), math.factorial(a))
        for a in num:
            if a > 0:
                out *= math.factorial(int(a) - 1)
        for b in den:
            if b > 0:
                out /= math.factorial(int(b) - 1)
        return out

    def value(self) -> complex:
        """Float value; 0 at zeros, inf at poles, residue-paired otherwise."""
        o = self.order()
        if o > 0:
            return 0.0 + 0.0j
        if o < 0:
            return complex("inf")
        try:
            coef = self.exact_coefficient()
            return float(coef) * PI**self.pi_power * 2.0 ** float(self.two_exp)
        except ValueError:
            pass
        acc = cmath.log(complex(self.prefactor)) if self.prefactor != 1 else 0.0
        for a in self.num:
            acc += log_gamma(float(a) if isinstance(a, Fraction) else a)
        for b in self.den:
            acc -= log_gamma(float(b) if isinstance(b, Fraction) else b)
        return cmath.exp(acc) * PI**self.pi_power * 2.0 ** float(self.two_exp)


# ---------------------------------------------------------------------------
# path 1: closed form
# ---------------------------------------------------------------------------


def _jm(j, m1):
    j = j if isinstance(j, HalfInt) else half(j)
    m1 = m1 if isinstance(m1, HalfInt) else half(m1)
    if not (j + m1).is_integer() or abs(m1) > j or j < 0:
        raise ValueError(f"invalid (j, m1) = ({j}, {m1})")
    return (j + m1).as_int(), (j - m1).as_int()


def a_closed(j, m1, delta: int, lam) -> complex:
    """Eigenvalue of the long intertwining operator on the (j, m1) line.

    pi^2 2^(-lam-1) Gamma(lam)
      * Gamma(j+m1-(lam+d)/2+1) Gamma(j-m1-(lam-d)/2+1)
      / (Gamma(1-(lam-d)/2) Gamma(1-(lam+d)/2)
         Gamma(j+m1+(lam-d)/2+1) Gamma(j-m1+(lam+d)/2+1)),

    evaluated with the cancelling prefactor Gammas grouped into Pochhammer
    products, so the value is finite wherever the meromorphic function is.
    """
    jp, jm = _jm(j, m1)
    lam = complex(lam)
    if is_nonpositive_int(lam):
        return complex("inf")
    sp = (lam + delta) / 2.0
    sm = (lam - delta) / 2.0
    val = PI**2 * cmath.exp(-(lam + 1) * math.log(2.0) + log_gamma(lam))
    val *= pochhammer(1.0 - sp, jp) * pochhammer(1.0 - sm, jm)
    val *= recip_gamma(jp + sm + 1.0) * recip_gamma(jm + sp + 1.0)
    return val


def a_closed_unreflected(j, m1, delta: int, lam) -> complex:
    """The pre-reflection intermediate of the same formula:

    pi^2 2^(-lam-1) (-1)^(j-m1) Gamma(lam) Gamma((lam-d)/2)
      * Gamma(j+m1-(lam+d)/2+1)
      / (Gamma(1-(lam+d)/2) Gamma(-j+m1+(lam-d)/2)
         Gamma(j+m1+(lam-d)/2+1) Gamma(j-m1+(lam+d)/2+1)).

    Agrees with a_closed wherever both sides are finite.
    """
    jp, jm = _jm(j, m1)
    lam = complex(lam)
    sp = (lam + delta) / 2.0
    sm = (lam - delta) / 2.0
    sign = (-1.0) ** jm
    num = log_gamma(lam) + log_gamma(sm) + log_gamma(jp - sp + 1.0)
    den = log_gamma(1.0 - sp) + log_gamma(sm - jm) \
        + log_gamma(jp + sm + 1.0) + log_gamma(jm + sp + 1.0)
    return PI**2 * sign * cmath.exp(-(lam + 1) * math.log(2.0) + num - den)


@dataclass
class ClosedFormValue:
    """Exact-mode result: net zero/pole order and, when finite, the value
    as rational * pi^2 * 2^(-lam-1)."""

    j: HalfInt
    m1: HalfInt
    delta: int
    lam: int
    order: int
    rational: Fraction | None

    @property
    def value(self) -> float:
        if self.order > 0:
            return 0.0
        if self.order < 0:
            return math.inf
        return float(self.rational) * PI**2 * 2.0 ** (-self.lam - 1)


def a_closed_exact(j, m1, delta: int, lam: int) -> ClosedFormValue:
    """Zero/pole bookkeeping of a_closed at integral parameters.

    A positive order is a zero (of that order), a negative order a pole.
    The finite rational part is exact when lam +- delta is even.
    """
    j = j if isinstance(j, HalfInt) else half(j)
    m1 = m1 if isinstance(m1, HalfInt) else half(m1)
    jp, jm = _jm(j, m1)
    sp = Fraction(lam + delta, 2)
    sm = Fraction(lam - delta, 2)
    ratio = GammaRatio(
        num=[Fraction(lam), jp - sp + 1, jm - sm + 1],
        den=[1 - sm, 1 - sp, jp + sm + 1, jm + sp + 1],
        pi_power=2,
        two_exp=-lam - 1,
    )
    order = ratio.order()
    rational = None
    if order == 0:
        try:
            rational = ratio.exact_coefficient()
        except ValueError:
            rational = None  # odd parity: finite but irrational in sqrt(pi)
    return ClosedFormValue(j, m1, delta, lam, order, rational)


# ---------------------------------------------------------------------------
# path 2: multinomial Gamma sum
# ---------------------------------------------------------------------------


def _sum_support(jp: int, jm: int):
    for p in range(0, min(jp, jm) + 1):
        for k1 in range(0, jm - p + 1):
            for k2 in range(0, jp - p + 1):
                yield k1, k2, p


def a_gammasum(j, m1, delta: int, lam) -> complex:
    """The finite multinomial/Gamma triple sum for the same eigenvalue.

    (k, l) = (2j, 2m1); the sum runs over the lattice cube where the
    multinomial coefficients are nonzero: p+K1 <= (k-l)/2, p+K2 <= (k+l)/2.
    For real lambda the alternating sum is carried out in exact rational
    arithmetic (it is a polynomial combination of Pochhammer symbols), which
    removes the cancellation the float sum would suffer.
    """
    jp, jm = _jm(j, m1)  # (k+l)/2, (k-l)/2
    lam = complex(lam)
    pref = (PI**2 * (-1.0) ** jp
            * cmath.exp(-(lam + 1) * math.log(2.0)
                        + log_gamma(jp + 1.0) + log_gamma(jm + 1.0) + log_gamma(lam))
            * recip_gamma(jp + (lam - delta) / 2.0 + 1.0)
            * recip_gamma(jm + (lam + delta) / 2.0 + 1.0))
    if lam.imag == 0.0:
        return pref * float(gammasum_bare_exact(j, m1, delta, Fraction(lam.real)))
    e3 = jm + (lam + delta) / 2.0
    if is_nonpositive_int(e3 + 1.0):
        raise ZeroDivisionError(f"gamma sum hits a pole at trinomial power {e3}")
    total = 0.0 + 0.0j
    lg_lam = log_gamma(lam)
    lg_e3 = log_gamma(e3 + 1.0)
    for k1, k2, p in _sum_support(jp, jm):
        q1, q2 = jm - p - k1, jp - p - k2
        q3 = e3 - q1 - q2
        term = (-1.0) ** (k1 + k2)
        term *= cmath.exp(log_gamma(k1 + p + lam) - lg_lam) \
            / (math.factorial(k1) * math.factorial(p))
        term *= math.comb(k2 + p, p)
        term *= cmath.exp(lg_e3) \
            * recip_gamma(q1 + 1.0) * recip_gamma(q2 + 1.0) * recip_gamma(q3 + 1.0)
        total += term
    return pref * total


def gammasum_bare_exact(j, m1, delta: int, lam) -> Fraction:
    """The bare multinomial sum (prefactor stripped), exact for rational lam."""
    jp, jm = _jm(j, m1)
    lam = Fraction(lam)
    e3 = jm + Fraction(lam + delta, 2)
    total = Fraction(0)
    for k1, k2, p in _sum_support(jp, jm):
        q1, q2 = jm - p - k1, jp - p - k2
        term = Fraction((-1) ** (k1 + k2))
        term *= pochhammer(lam, k1 + p) / (math.factorial(k1) * math.factorial(p))
        term *= math.comb(k2 + p, p)
        term *= falling(e3, q1 + q2) / (math.factorial(q1) * math.factorial(q2))
        total += term
    return total


def gammasum_term_count(j, m1) -> int:
    jp, jm = _jm(j, m1)
    return sum(1 for _ in _sum_support(jp, jm))


def a_gammasum_exact(j, m1, delta: int, lam: int) -> ClosedFormValue:
    """Exact evaluation of the Gamma-sum path at even-parity integers.

    When the bare sum vanishes, the reported zero order is a lower bound
    (the sum's multiplicity in lambda is not resolved); a_closed_exact is
    the authoritative zero/pole ledger.
    """
    if (lam + delta) % 2:
        raise ValueError("exact gamma sum needs lam + delta even")
    j = j if isinstance(j, HalfInt) else half(j)
    m1 = m1 if isinstance(m1, HalfInt) else half(m1)
    jp, jm = _jm(j, m1)
    bare = gammasum_bare_exact(j, m1, delta, lam)
    pref = GammaRatio(
        num=[Fraction(jp + 1), Fraction(jm + 1), Fraction(lam)],
        den=[jp + Fraction(lam - delta, 2) + 1, jm + Fraction(lam + delta, 2) + 1],
        pi_power=2,
        two_exp=-lam - 1,
        prefactor=Fraction((-1) ** jp),
    )
    order = pref.order() + (0 if bare != 0 else 1)
    rational = None
    if order == 0:
        rational = pref.exact_coefficient() * bare
    return ClosedFormValue(j, m1, delta, lam, order, rational)


# ---------------------------------------------------------------------------
# path 3: quadrature of the defining integral
# ---------------------------------------------------------------------------


@dataclass
class QuadratureSpec:
    """Tolerances for the nested adaptive integration."""

    rel_tol: float = 1e-9
    abs_floor: float = 1e-11
    max_subdivisions: int = 200
    transform: str = "uv"

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-3):
            raise ValueError("rel_tol must lie in (0, 1e-3]")
        if self.transform != "uv":
            raise ValueError(f"unknown transform {self.transform!r}")


class QuadratureError(RuntimeError):
    """Raised when the error bound misses the tolerance; carries the result."""

    def __init__(self, estimate: complex, bound: float):
        super().__init__(f"quadrature tolerance not reached: estimate "
                         f"{estimate}, error bound {bound:.3e}")
        self.estimate = estimate
        self.bound = bound


def _radial_integral(a1: int, a2: int, e1, e2, vpow, lam, spec: QuadratureSpec,
                     abs_target: float):
    """(1/4) * int_0^1 v^vpow (1-v)^(vpow+lam-1)
         int_R (2v-1+iu)^a1 (2v-1-iu)^a2 (1-iu)^(-e1) (1+iu)^(-e2) du dv.

    This is the w-integral of the defining kernel after u = 2w/(1+r^2),
    v = r^2/(1+r^2); the coupled (1+r^2) scale drops out and both axes
    become standard improper/endpoint-singular 1D integrals.  `abs_target`
    is the absolute accuracy this term must deliver, so that terms
    cancelling against each other in the caller's sum cannot hide error.
    """
    inner_err = 0.0

    def inner(v: float) -> complex:
        nonlocal inner_err
        c = 2.0 * v - 1.0

        def f(u: float) -> complex:
            zp, zm = complex(c, u), complex(c, -u)
            val = zp**a1 * zm**a2
            val *= cmath.exp(-e1 * cmath.log(complex(1.0, -u))
                             - e2 * cmath.log(complex(1.0, u)))
            return val

        # one order tighter than verified, so the combined bound has headroom
        val, err = quad(f, -math.inf, math.inf, complex_func=True,
                        epsabs=abs_target / 10.0, epsrel=spec.rel_tol / 100.0,
                        limit=spec.max_subdivisions)
        inner_err = max(inner_err, abs(err))
        return val

    def outer(v: float) -> complex:
        if v <= 0.0 or v >= 1.0:
            return 0.0 + 0.0j
        weight = cmath.exp(vpow * math.log(v) + (vpow + lam - 1.0) * math.log1p(-v))
        return 0.25 * weight * inner(v)

    val, err = quad(outer, 0.0, 1.0, complex_func=True,
                    epsabs=abs_target, epsrel=spec.rel_tol / 100.0,
                    limit=spec.max_subdivisions)
    # the inner error enters through the outer weight; bound it by the
    # weight's total mass (1/4) B(vpow+1, vpow+Re lam)
    lr = lam.real if isinstance(lam, complex) else float(lam)
    mass = 0.25 * math.exp(math.lgamma(vpow + 1.0) + math.lgamma(vpow + lr)
                           - math.lgamma(2.0 * vpow + lr + 1.0))
    return val, abs(err) + inner_err * mass


def _angular_integral(dm: int, spec: QuadratureSpec):
    """int_0^{2pi} e^{i dm theta} dtheta, numerically (exactly 2pi at dm=0)."""
    re, re_err = quad(lambda t: math.cos(dm * t), 0.0, 2.0 * PI,
                      epsabs=spec.abs_floor, epsrel=spec.rel_tol,
                      limit=spec.max_subdivisions)
    im, im_err = quad(lambda t: math.sin(dm * t), 0.0, 2.0 * PI,
                      epsabs=spec.abs_floor, epsrel=spec.rel_tol,
                      limit=spec.max_subdivisions)
    return complex(re, im), re_err + im_err


def a_quadrature(idx: WignerIndex, delta: int, lam,
                 spec: QuadratureSpec | None = None) -> complex:
    """The defining integral of the intertwining operator on W[idx].

    Requires 3*m2 - n = delta and Re(lam) > 0 (warns below 1, where the
    radial endpoint makes convergence slow).  Off-diagonal entries carry the
    numerically-evaluated angular factor, which vanishes.
    """
    spec = spec or QuadratureSpec()
    lam = complex(lam)
    if 3 * idx.m2.twice - idx.n.twice != 2 * delta:
        raise ValueError(f"index {idx} violates 3*m2 - n = {delta}")
    if lam.real <= 0.0:
        raise ValueError("the defining integral needs Re(lambda) > 0")
    if lam.real < 1.0:
        warnings.warn("Re(lambda) < 1: radial endpoint is barely integrable; "
                      "expect slow convergence", stacklevel=2)
    j, n, m1, m2 = idx.j, idx.n, idx.m1, idx.m2
    jn, mm = (j + m1).as_int(), (j - m2).as_int()
    dm = (m1 - m2).as_int()
    cc = math.sqrt(math.factorial((j + m1).as_int()) * math.factorial((j - m1).as_int())
                   * math.factorial((j + m2).as_int()) * math.factorial((j - m2).as_int()))
    angular, ang_err = (2.0 * PI, 0.0) if dm == 0 else _angular_integral(dm, spec)
    e1 = (float((2 * j + m2 - n).as_fraction()) + lam + 2.0) / 2.0
    e2 = (float((2 * j - m2 + n).as_fraction()) + lam + 2.0) / 2.0
    total = 0.0 + 0.0j
    err = 0.0
    p_range = range(max(0, dm), min(mm, jn) + 1)
    nterms = max(1, len(p_range))
    for p in p_range:
        coeff = ((-1.0) ** p * 2.0 ** (-dm + 2 * p)
                 / (math.factorial(jn - p) * math.factorial(p)
                    * math.factorial(-dm + p) * math.factorial(mm - p)))
        a1 = jn - p
        a2 = mm - p
        vpow = 0.5 * (-dm) + p
        abs_target = spec.abs_floor / (20.0 * nterms * cc * abs(angular) * abs(coeff))
        radial, rerr = _radial_integral(a1, a2, e1, e2, vpow, lam, spec, abs_target)
        total += coeff * radial
        err += abs(coeff) * rerr
    value = cc * angular * total
    bound = cc * (abs(angular) * err + ang_err * (abs(total) + err))
    if bound > spec.rel_tol * max(abs(value), spec.abs_floor) + spec.abs_floor:
        raise QuadratureError(value, bound)
    return value


# ---------------------------------------------------------------------------
# constant-term oracle (exact, integer lambda)
# ---------------------------------------------------------------------------


def _gen_binom(top: Fraction, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    return falling(Fraction(top), k) / math.factorial(k)


def constant_term_oracle(j, m1, delta: int, lam: int) -> Fraction:
    """[s^(lam-1) t^0] of

    (1+s)^((k-l)/2+lam-1) (1+t)^((k-l)/2) (1+1/t)^((k+l)/2)
        * (1 - 1/((1+s)(1+t)) - 1/(1+1/t))^((k-l+lam+delta)/2)

    by exact trinomial expansion; equals (-1)^k times the bare Gamma sum.
    Needs lam >= 1 and k - l + lam + delta even and nonnegative (otherwise
    the expansion does not terminate and the identity has no finite reading).
    """
    jp, jm = _jm(j, m1)  # (k+l)/2, (k-l)/2
    k = jp + jm
    if not isinstance(lam, int) or lam < 1:
        raise ValueError("constant-term oracle needs an integer lambda >= 1")
    if (2 * jm + lam + delta) % 2:
        raise ValueError("unsupported: trinomial power (k-l+lam+delta)/2 "
                         "is not an integer")
    e3 = jm + (lam + delta) // 2
    if e3 < 0:
        raise ValueError("unsupported: negative trinomial power")
    e1 = jm + lam - 1
    total = Fraction(0)
    for a in range(e3 + 1):
        s_coef = _gen_binom(Fraction(e1 - a), lam - 1)
        if s_coef == 0:
            continue
        for b in range(e3 - a + 1):
            mult = Fraction(math.factorial(e3),
                            math.factorial(a) * math.factorial(b)
                            * math.factorial(e3 - a - b))
            B = jp - b
            if B < 0:
                continue
            t_coef = _gen_binom(Fraction(k - a - b), B)
            total += Fraction((-1) ** (a + b)) * mult * s_coef * t_coef
    return total


def constant_term_gamma_form(j, m1, delta: int, lam) -> GammaRatio:
    """Closed Gamma-ratio form of the same constant term (binomial theorem).

    Returned as a GammaRatio so cancelling poles at integral parameters
    resolve by residue pairing; .value() or .exact_coefficient() evaluate it.
    """
    jp, jm = _jm(j, m1)
    k = jp + jm
    is_rat = isinstance(lam, (int, Fraction))
    two = Fraction(2) if is_rat else 2.0
    sp = (lam + delta) / two
    sm = (lam - delta) / two
    return GammaRatio(num=[1 + jp - sp, sm],
                      den=[jp + 1, jm + 1, 1 - sp, sm - jm],
                      prefactor=(-1) ** k)


# ---------------------------------------------------------------------------
# aggregate evaluation
# ---------------------------------------------------------------------------


@dataclass
class IntertwineResult:
    j: HalfInt
    m1: HalfInt
    delta: int
    lam: complex
    values: dict = field(default_factory=dict)
    order: int | None = None

    def agreement(self) -> float:
        vals = [v for v in self.values.values() if v is not None]
        if len(vals) < 2:
            return 0.0
        scale = max(abs(v) for v in vals) or 1.0
        return max(abs(a - b) for a in vals for b in vals) / scale


def evaluate(j, m1, delta: int, lam, paths=("closed", "gammasum", "quadrature"),
             spec: QuadratureSpec | None = None) -> IntertwineResult:
    """Evaluate the intertwining eigenvalue by the requested paths."""
    j = j if isinstance(j, HalfInt) else half(j)
    m1 = m1 if isinstance(m1, HalfInt) else half(m1)
    res = IntertwineResult(j, m1, delta, complex(lam))
    if "closed" in paths:
        res.values["closed"] = a_closed(j, m1, delta, lam)
    if "gammasum" in paths:
        res.values["gammasum"] = a_gammasum(j, m1, delta, lam)
    if "quadrature" in paths:
        n = half(3 * m1.as_fraction() - delta)
        idx = WignerIndex(j, n, m1, m1)
        res.values["quadrature"] = a_quadrature(idx, delta, lam, spec)
    lc = complex(lam)
    if lc.imag == 0.0 and lc.real == round(lc.real):
        res.order = a_closed_exact(j, m1, delta, int(lc.real)).order
    return res
