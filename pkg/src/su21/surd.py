"""Exact scalar arithmetic: sums of rational multiples of square roots.

Every algebraic coefficient in this package (Clebsch-Gordan values, ladder
amplitudes, normalization constants) is a finite sum  sum_i  c_i * sqrt(r_i)
with c_i rational and r_i square-free positive integers.  Radicand 1 carries
the rational part.  Canonical form makes equality a dictionary comparison.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = s^2 * r with r square-free; return (s, r).  Requires n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    s, r, d = 1, 1, 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * n


class Surd:
    """A canonical finite sum of rational multiples of square roots.

    Immutable.  `terms` maps a square-free radicand (positive int) to a
    nonzero Fraction; the empty map is zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for r, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                s, r0 = squarefree_decompose(int(r))
                if s == 0:
                    continue
                clean[r0] = clean.get(r0, Fraction(0)) + c * s
                if clean[r0] == 0:
                    del clean[r0]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(q) -> "Surd":
        """Rational value as a Surd."""
        return Surd({1: Fraction(q)})

    @staticmethod
    def sqrt(q, coef=1) -> "Surd":
        """coef * sqrt(q) for a nonnegative rational q, in canonical form.

        sqrt(p/q) is rewritten as sqrt(p*q)/q before square-free extraction.
        """
        q = Fraction(q)
        if q < 0:
            raise ValueError("negative radicand")
        if q == 0:
            return Surd()
        s, r = squarefree_decompose(q.numerator * q.denominator)
        return Surd({r: Fraction(coef) * Fraction(s, q.denominator)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or set(self.terms) == {1}

    def as_rational(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {1}:
            raise ValueError(f"{self} is irrational")
        return self.terms[1]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, Fraction(0)) + c
            if out[r] == 0:
                del out[r]
        s = Surd.__new__(Surd)
        s.terms = out
        return s

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        s = Surd.__new__(Surd)
        s.terms = {r: -c for r, c in self.terms.items()}
        return s

    def __sub__(self, other):
        try:
            return self + (-_coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                g = math.gcd(r1, r2)
                # sqrt(r1)*sqrt(r2) = g * sqrt((r1/g)*(r2/g)), still square-free
                r = (r1 // g) * (r2 // g)
                c = c1 * c2 * g
                out[r] = out.get(r, Fraction(0)) + c
                if out[r] == 0:
                    del out[r]
        s = Surd.__new__(Surd)
        s.terms = out
        return s

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Surd":
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("surd division by zero")
        num, den = self, other
        # rationalize: conjugate away one prime of the denominator at a time
        while not den.is_rational():
            p = _a_prime_of(den)
            conj = Surd({r: (-c if r % p == 0 else c) for r, c in den.terms.items()})
            num = num * conj
            den = den * conj
        q = den.as_rational()
        s = Surd.__new__(Surd)
        s.terms = {r: c / q for r, c in num.terms.items()}
        return s

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int) -> "Surd":
        if k < 0:
            return Surd.of(1) / self ** (-k)
        out = Surd.of(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            return self.terms == _coerce(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- numeric evaluation ------------------------------------------------

    def eval_fraction(self, bits: int = 80) -> Fraction:
        """Rational approximation with absolute error below 2**(1-bits) * scale."""
        if bits < 53:
            raise ValueError("precision below 53 bits")
        total = Fraction(0)
        shift = 1 << (bits + 4)
        for r, c in self.terms.items():
            if r == 1:
                total += c
            else:
                root = Fraction(math.isqrt(r * shift * shift), shift)
                total += c * root
        return total

    def eval(self, bits: int = 80) -> float:
        return float(self.eval_fraction(bits))

    __float__ = eval

    # -- rendering / parsing -----------------------------------------------

    def __repr__(self):
        return f"Surd({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for r in sorted(self.terms, reverse=True):
            c = self.terms[r]
            if r == 1:
                body = str(abs(c))
            elif abs(c) == 1:
                body = f"sqrt({r})"
            else:
                body = f"{abs(c)}*sqrt({r})"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def parse(text: str) -> "Surd":
        """Inverse of str(); accepts e.g. "3/2*sqrt(5) + 1/4" or "-sqrt(2)"."""
        s = text.replace(" ", "")
        if s == "0":
            return Surd()
        out = Surd()
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(?:sqrt\((\d+)\))?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse surd term {body!r}")
            coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            if sign == "-":
                coef = -coef
            rad = int(m.group(2)) if m.group(2) else 1
            out = out + Surd.sqrt(rad, coef)
        return out


def _coerce(x) -> Surd:
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd.of(x)
    if isinstance(x, HalfInt):
        return Surd.of(x.as_fraction())
    raise TypeError(f"cannot coerce {type(x).__name__} to Surd")


def _a_prime_of(s: Surd) -> int:
    for r in s.terms:
        if r > 1:
            d = 2
            while r % d:
                d += 1 if d == 2 else 2
            return d
    raise ValueError("rational surd has no prime radicand")


def surd_normalize(coef, radicand) -> Surd:
    """c * sqrt(r) in canonical form; domain error on negative radicand."""
    return Surd.sqrt(radicand, coef)


ZERO = Surd()
ONE = Surd.of(1)


class HalfInt:
    """Half-integer stored as twice its value, so parity checks stay integral."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        self.twice = int(twice)

    @staticmethod
    def of(value) -> "HalfInt":
        """From an int, Fraction, or float representing k/2 exactly."""
        f = Fraction(value)
        if f.denominator not in (1, 2):
            raise ValueError(f"{value} is not a half-integer")
        return HalfInt(f.numerator * (2 // f.denominator))

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def as_int(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other):
        return HalfInt(self.twice + _twice(other))

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - _twice(other))

    def __rsub__(self, other):
        return HalfInt(_twice(other) - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, k):
        if isinstance(k, int):
            return HalfInt(self.twice * k)
        return self.as_fraction() * k

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.twice == _twice(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < _twice(other)

    def __le__(self, other):
        return self.twice <= _twice(other)

    def __gt__(self, other):
        return self.twice > _twice(other)

    def __ge__(self, other):
        return self.twice >= _twice(other)

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __float__(self):
        return self.twice / 2.0

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def _twice(x) -> int:
    if isinstance(x, HalfInt):
        return x.twice
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, Fraction):
        return HalfInt.of(x).twice
    raise TypeError(f"cannot mix HalfInt with {type(x).__name__}")


def half(value) -> HalfInt:
    return HalfInt.of(value)


def hrange(lo: HalfInt, hi: HalfInt):
    """Half-integers lo, lo+1, ..., hi (inclusive, integer steps)."""
    return [HalfInt(t) for t in range(lo.twice, hi.twice + 1, 2)]


class LambdaPoly:
    """Polynomial of degree <= 2 in the induction parameter, Surd coefficients."""

    __slots__ = ("coeffs",)

    MAX_DEGREE = 2

    def __init__(self, c0=ZERO, c1=ZERO, c2=ZERO):
        self.coeffs = (_coerce(c0), _coerce(c1), _coerce(c2))

    @staticmethod
    def const(c) -> "LambdaPoly":
        return LambdaPoly(_coerce(c))

    @staticmethod
    def affine(const, slope) -> "LambdaPoly":
        """const + slope * lambda."""
        return LambdaPoly(_coerce(const), _coerce(slope))

    LAMBDA = None  # set below

    def degree(self) -> int:
        for d in (2, 1, 0):
            if not self.coeffs[d].is_zero():
                return d
        return 0

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return LambdaPoly(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(*(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        if self.degree() + other.degree() > self.MAX_DEGREE:
            raise OverflowError("product exceeds degree 2 in exact mode")
        out = [ZERO, ZERO, ZERO]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero() or i + j > 2:
                    continue
                out[i + j] = out[i + j] + a * b
        return LambdaPoly(*out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.coeffs == _as_poly(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def eval_at(self, lam):
        """Evaluate at a numeric lambda (int, float, or complex)."""
        if isinstance(lam, (int, Fraction)) and all(c.is_rational() for c in self.coeffs):
            lam = Fraction(lam)
            return sum(c.as_rational() * lam**d for d, c in enumerate(self.coeffs))
        c0, c1, c2 = (c.eval() for c in self.coeffs)
        return c0 + c1 * lam + c2 * lam * lam

    def __str__(self):
        if self.is_zero():
            return "0"
        names = ["", "*L", "*L^2"]
        parts = [f"({c}){names[d]}" for d, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts)

    def __repr__(self):
        return f"LambdaPoly[{self}]"


LambdaPoly.LAMBDA = LambdaPoly(ZERO, ONE)


def _as_poly(x) -> LambdaPoly:
    if isinstance(x, LambdaPoly):
        return x
    return LambdaPoly(_coerce(x))


class CSurd:
    """Complex number with exact Surd real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        self.re = _coerce(re)
        self.im = _coerce(im)

    @staticmethod
    def of(re, im=0) -> "CSurd":
        return CSurd(_coerce(re), _coerce(im))

    I = None  # set below

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def conj(self) -> "CSurd":
        return CSurd(self.re, -self.im)

    def __add__(self, other):
        try:
            other = _as_csurd(other)
        except TypeError:
            return NotImplemented
        return CSurd(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CSurd(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_csurd(other))

    def __rsub__(self, other):
        return _as_csurd(other) + (-self)

    def __mul__(self, other):
        try:
            other = _as_csurd(other)
        except TypeError:
            return NotImplemented
        return CSurd(self.re * other.re - self.im * other.im,
                     self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_csurd(other)
        n2 = other.re * other.re + other.im * other.im
        if n2.is_zero():
            raise ZeroDivisionError
        num = self * other.conj()
        return CSurd(num.re / n2, num.im / n2)

    def __eq__(self, other):
        try:
            other = _as_csurd(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re.eval(), self.im.eval())

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        if self.re.is_zero():
            return f"({self.im})*i"
        return f"({self.re}) + ({self.im})*i"

    def __repr__(self):
        return f"CSurd({self})"


CSurd.I = CSurd(ZERO, ONE)


def _as_csurd(x) -> CSurd:
    if isinstance(x, CSurd):
        return x
    return CSurd(_coerce(x))
