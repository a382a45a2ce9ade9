"""Composition-series classification of the principal series by Weyl chamber.

Integral characters (delta, lambda) with lambda +- delta even and off the
reflection walls fall into six chambers; each chamber fixes a filtration of
the K-type lattice into at most four subquotients (finite-dimensional,
holomorphic/antiholomorphic, quaternionic, and the two Q pieces), cut out by
linear inequalities in the lattice coordinates (k, l) = (2j, 2m2).

verify_closure checks the filtration against the actual ladder action: a
transition leaving the closed union of a level must carry an exactly-zero
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .surd import HalfInt, half
from .action import _Q_AMPLITUDE, _kappa

V_FIN = "V_fin"
V_DISC_P = "V_disc+"
V_DISC_M = "V_disc-"
V_H = "V_H"
Q_P = "Q+"
Q_M = "Q-"

CHAMBERS = ("I1", "I2", "II1", "II2", "III1", "III2")

# words of simple reflections carrying each chamber's sample back to I1,
# in application order (first entry acts first)
CHAMBER_WORDS = {
    "I1": [],
    "II1": ["a2"],
    "II2": ["a2", "a1"],
    "I2": ["a1", "a2", "a1"],
    "III1": ["a1"],
    "III2": ["a1", "a2"],
}


def weyl_reflect(word, delta, lam):
    """Apply simple reflections (strings 'a1'/'a2', first entry first).

    a1: (d, l) -> (-(3l+d)/2, (l-d)/2);  a2: (d, l) -> ((3l-d)/2, (l+d)/2).
    Returns Fractions; integrality is the caller's concern in decomposition
    mode (see is_integral_char).
    """
    d, l = Fraction(delta), Fraction(lam)
    for w in word:
        if w == "a1":
            d, l = -(3 * l + d) / 2, (l - d) / 2
        elif w == "a2":
            d, l = (3 * l - d) / 2, (l + d) / 2
        else:
            raise ValueError(f"unknown reflection {w!r}")
    return d, l


def is_integral_char(delta, lam) -> bool:
    d, l = Fraction(delta), Fraction(lam)
    return d.denominator == 1 and l.denominator == 1 and (l + d) % 2 == 0


def chamber_classify(delta: int, lam: int):
    """Chamber tag of an integral character, or None when unclassified
    (odd parity, a reflection wall, or lambda = 0 between the II/III pairs)."""
    if not is_integral_char(delta, lam):
        return None
    sp, sm = lam + delta, lam - delta
    if sp == 0 or sm == 0:
        return None
    if sp > 0 and sm > 0:
        return "I1"
    if sp < 0 and sm < 0:
        return "I2"
    if sp > 0 and sm < 0:
        return "II1" if lam > 0 else ("II2" if lam < 0 else None)
    return "III1" if lam > 0 else ("III2" if lam < 0 else None)


def _region_predicates(chamber: str, delta: int, lam: int):
    """tag -> predicate on (k, l), partitioning the lattice."""
    d, s = delta, lam
    if chamber == "I1":
        return {
            V_FIN: lambda k, l: k + l < s + d and k - l < s - d,
            Q_P: lambda k, l: k - l < s - d and k + l >= s + d,
            Q_M: lambda k, l: k + l < s + d and k - l >= s - d,
            V_H: lambda k, l: k - l >= s - d and k + l >= s + d,
        }
    if chamber == "I2":
        # chamber I1 cut out at the long-word reflected character (d, -s);
        # the printed I2 inequalities interchange the two walls, which the
        # ladder action contradicts for d != 0 (see the decisions ledger)
        return {
            V_FIN: lambda k, l: k + l < -s + d and k - l < -s - d,
            Q_P: lambda k, l: k - l < -s - d and k + l >= -s + d,
            Q_M: lambda k, l: k + l < -s + d and k - l >= -s - d,
            V_H: lambda k, l: k - l >= -s - d and k + l >= -s + d,
        }
    if chamber == "II1":
        return {
            V_DISC_M: lambda k, l: k + l < d - s,
            Q_M: lambda k, l: d - s <= k + l < d + s,
            V_H: lambda k, l: k + l >= d + s,
        }
    if chamber == "II2":
        return {
            V_DISC_M: lambda k, l: k + l < d + s,
            Q_M: lambda k, l: d + s <= k + l < d - s,
            V_H: lambda k, l: k + l >= d - s,
        }
    if chamber == "III1":
        return {
            V_DISC_P: lambda k, l: k - l < -s - d,
            Q_P: lambda k, l: -s - d <= k - l < s - d,
            V_H: lambda k, l: k - l >= s - d,
        }
    if chamber == "III2":
        return {
            V_DISC_P: lambda k, l: k - l < s - d,
            Q_P: lambda k, l: s - d <= k - l < -s - d,
            V_H: lambda k, l: k - l >= -s - d,
        }
    raise ValueError(f"unknown chamber {chamber!r}")


# filtration levels, socle first; tags within one level are direct summands
_FILTRATIONS = {
    "I1": [frozenset({V_H}), frozenset({Q_P, Q_M}), frozenset({V_FIN})],
    "I2": [frozenset({V_FIN}), frozenset({Q_P, Q_M}), frozenset({V_H})],
    "II1": [frozenset({V_H, V_DISC_M}), frozenset({Q_M})],
    "II2": [frozenset({Q_M}), frozenset({V_H, V_DISC_M})],
    "III1": [frozenset({V_H, V_DISC_P}), frozenset({Q_P})],
    "III2": [frozenset({Q_P}), frozenset({V_H, V_DISC_P})],
}

# lowest K-type (j, n) of each subquotient, as printed in the chamber tables
def _lowest_table(chamber: str, delta: int, lam: int):
    d, s = Fraction(delta), Fraction(lam)
    if chamber == "I1":
        return {V_FIN: (Fraction(0), -d), Q_P: ((s + d) / 4, (3 * s - d) / 4),
                Q_M: ((s - d) / 4, (-3 * s - d) / 4), V_H: (s / 2, d / 2)}
    if chamber == "I2":
        return {V_FIN: (Fraction(0), -d), Q_P: ((-s + d) / 4, (-3 * s - d) / 4),
                Q_M: ((-s - d) / 4, (3 * s - d) / 4), V_H: (-s / 2, d / 2)}
    if chamber == "II1":
        return {V_DISC_M: (Fraction(0), -d), Q_M: ((-s + d) / 4, (-3 * s - d) / 4),
                V_H: ((s + d) / 4, (3 * s - d) / 4)}
    if chamber == "II2":
        return {V_DISC_M: (Fraction(0), -d), Q_M: ((s + d) / 4, (3 * s - d) / 4),
                V_H: ((-s + d) / 4, (-3 * s - d) / 4)}
    if chamber == "III1":
        return {V_DISC_P: (Fraction(0), -d), Q_P: ((-s - d) / 4, (3 * s - d) / 4),
                V_H: ((s - d) / 4, (-3 * s - d) / 4)}
    if chamber == "III2":
        return {V_DISC_P: (Fraction(0), -d), Q_P: ((s - d) / 4, (-3 * s - d) / 4),
                V_H: ((-s - d) / 4, (3 * s - d) / 4)}
    raise ValueError(chamber)


@dataclass(frozen=True)
class CompositionSeries:
    """Filtration 0 = F_{-1} < F_0 < ... < F_top = I(chi); levels[i] is the
    set of direct summands of F_i / F_{i-1}, socle first."""

    chamber: str
    delta: int
    lam: int
    levels: tuple

    def submodule_chain(self):
        out, acc = [], set()
        for lv in self.levels:
            acc |= set(lv)
            out.append(frozenset(acc))
        return out

    def tags(self):
        return frozenset(t for lv in self.levels for t in lv)

    def closure_of(self, tag: str):
        """Subquotients reachable from `tag` under the Lie algebra action."""
        for i, lv in enumerate(self.levels):
            if tag in lv:
                allowed = {tag}
                for lower in self.levels[:i]:
                    allowed |= set(lower)
                return frozenset(allowed)
        raise ValueError(f"{tag} not in chamber {self.chamber}")


def composition_series(delta: int, lam: int) -> CompositionSeries:
    chamber = chamber_classify(delta, lam)
    if chamber is None:
        raise ValueError(f"character ({delta}, {lam}) is unclassified")
    return CompositionSeries(chamber, delta, lam, tuple(_FILTRATIONS[chamber]))


def lattice_points(kmax: int):
    """All (k, l) with 0 <= k <= kmax, |l| <= k, k = l mod 2."""
    for k in range(kmax + 1):
        for l in range(-k, k + 1, 2):
            yield (k, l)


def region_of(delta: int, lam: int, k: int, l: int) -> str:
    """Subquotient tag containing the lattice point (k, l)."""
    chamber = chamber_classify(delta, lam)
    if chamber is None:
        raise ValueError(f"character ({delta}, {lam}) is unclassified")
    hits = [t for t, pred in _region_predicates(chamber, delta, lam).items() if pred(k, l)]
    if len(hits) != 1:
        raise AssertionError(f"point ({k},{l}) lies in {hits}")
    return hits[0]


def subquotient_ktypes(tag: str, delta: int, lam: int, kmax: int) -> set:
    """Lattice points of one subquotient up to k <= kmax."""
    chamber = chamber_classify(delta, lam)
    if chamber is None:
        raise ValueError(f"character ({delta}, {lam}) is unclassified")
    preds = _region_predicates(chamber, delta, lam)
    if tag not in preds:
        raise ValueError(f"{tag} does not occur in chamber {chamber}")
    return {(k, l) for (k, l) in lattice_points(kmax) if preds[tag](k, l)}


def lowest_ktype(tag: str, delta: int, lam: int, kmax: int = 64):
    """Minimal (k, then |l|, then l) point of a subquotient, as (j, n)."""
    pts = subquotient_ktypes(tag, delta, lam, kmax)
    if not pts:
        raise ValueError(f"{tag} is empty up to k={kmax}")
    k, l = min(pts, key=lambda p: (p[0], abs(p[1]), p[1]))
    return (Fraction(k, 2), Fraction(3 * l, 2) - delta)


def lowest_ktype_table(delta: int, lam: int):
    """The printed lowest-(j,n) table of the chamber."""
    chamber = chamber_classify(delta, lam)
    if chamber is None:
        raise ValueError(f"character ({delta}, {lam}) is unclassified")
    return _lowest_table(chamber, delta, lam)


# ---------------------------------------------------------------------------
# closure of the filtration under the ladder action
# ---------------------------------------------------------------------------


@dataclass
class ClosureReport:
    delta: int
    lam: int
    chamber: str
    sources: int
    transitions: int
    violations: list

    @property
    def ok(self):
        return not self.violations


def verify_closure(delta: int, lam: int, kmax: int) -> ClosureReport:
    """Exhaustively check that every nonzero ladder transition stays inside
    the closed union of its source's filtration level.

    Transition weight at the K-type level is the exact product of the
    square-root amplitude and the lambda-affine factor evaluated at the
    integer lambda; boundary crossings must carry weight exactly zero.
    """
    series = composition_series(delta, lam)
    lamf = Fraction(lam)
    sources = transitions = 0
    violations = []
    for (k, l) in lattice_points(kmax):
        src_tag = region_of(delta, lam, k, l)
        allowed = series.closure_of(src_tag)
        j, m2 = HalfInt(k), HalfInt(l)
        n = half(Fraction(3 * l, 2) - delta)
        sources += 1
        for sign in (+1, -1):
            for j0t in (-1, +1):
                kk, ll = k + j0t, l + sign
                if kk < 0:
                    continue
                transitions += 1
                amp = _Q_AMPLITUDE[(j0t, sign)](j, m2)
                lin = _kappa(j0t, sign, j, n, m2).eval_at(lamf)
                weight_zero = amp.is_zero() or lin == 0
                if abs(ll) > kk:
                    if not weight_zero:
                        violations.append(((k, l), sign, j0t, (kk, ll),
                                           "nonzero weight leaving the lattice"))
                    continue
                tgt_tag = region_of(delta, lam, kk, ll)
                if tgt_tag not in allowed and not weight_zero:
                    violations.append(((k, l), sign, j0t, (kk, ll),
                                       f"{src_tag} -> {tgt_tag} with weight "
                                       f"{amp} * ({lin})"))
    return ClosureReport(delta, lam, series.chamber, sources, transitions, violations)


@dataclass
class FiniteDimReport:
    delta: int
    lam: int
    enumerated: int
    weyl: int

    @property
    def ok(self):
        return self.enumerated == self.weyl

    @property
    def dimension(self):
        return self.enumerated


def finite_dim_check(delta: int, lam: int) -> FiniteDimReport:
    """Dimension of the finite-dimensional subquotient, two ways: summing
    K-type dimensions (k+1) over the lattice region, and the Weyl dimension
    formula (a+1)(b+1)(a+b+2)/2."""
    chamber = chamber_classify(delta, lam)
    if chamber not in ("I1", "I2"):
        raise ValueError("finite-dimensional piece only occurs in chambers I1/I2")
    sgn = 1 if chamber == "I1" else -1
    kmax = abs(lam) + abs(delta) + 2
    pts = subquotient_ktypes(V_FIN, delta, lam, kmax)
    enumerated = sum(k + 1 for (k, _) in pts)
    a = (sgn * (lam + delta)) // 2 - 1
    b = (sgn * (lam - delta)) // 2 - 1
    weyl = (a + 1) * (b + 1) * (a + b + 2) // 2
    return FiniteDimReport(delta, lam, enumerated, weyl)


def partition_ok(delta: int, lam: int, kmax: int) -> bool:
    """Every lattice point with k <= kmax lies in exactly one subquotient."""
    try:
        for (k, l) in lattice_points(kmax):
            region_of(delta, lam, k, l)
    except (AssertionError, ValueError):
        return False
    return True


SAMPLE_CHARACTERS = ((0, 4), (6, 2), (6, -2), (0, -4), (-6, 2), (-6, -2))
