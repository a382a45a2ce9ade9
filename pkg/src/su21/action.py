"""The (g,K)-module of the minimal principal series.

K-types are Wigner basis functions W[j,n;m1,m2] with 3*m2 - n = delta; the
noncompact weight vectors act by the ladder formula

    dl(v_root) W = 1/(2 sqrt(2j+1)) * sum_{j0 = +-1/2}
        <j m1; 1/2 m_root | j+j0, m1+m_root> * q * kappa(lambda) * W'

with q a square-root amplitude in (j, m2) and kappa affine in the induction
parameter.  All coefficients are exact; numeric lambda is substituted only on
request.  Compact generators act by the usual left-regular formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .surd import Surd, CSurd, HalfInt, LambdaPoly, half, hrange, ZERO
from .compact import WignerIndex, cg
from . import structure

HALF = HalfInt(1)
L = LambdaPoly.LAMBDA


# ---------------------------------------------------------------------------
# induction characters and K-types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InductionChar:
    """chi_{delta, lambda}; mode is 'formal', 'decomposition', or 'analytic'."""

    delta: int
    lam: object = None
    mode: str = "formal"

    def __post_init__(self):
        if self.mode == "formal":
            if self.lam is not None:
                raise ValueError("formal mode carries no lambda value")
        elif self.mode == "decomposition":
            if not isinstance(self.lam, int):
                raise ValueError("decomposition mode needs an integer lambda")
            if (self.lam + self.delta) % 2 or (self.lam - self.delta) % 2:
                raise ValueError("decomposition mode needs lambda +- delta even")
        elif self.mode == "analytic":
            complex(self.lam)
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    def lam_value(self):
        return None if self.mode == "formal" else self.lam


@dataclass(frozen=True)
class KType:
    """A K-isotypic label (j, n) with its unique column weight m2 and
    lattice coordinates (k, l) = (2j, 2m2)."""

    j: HalfInt
    n: HalfInt
    m2: HalfInt

    @property
    def k(self) -> int:
        return self.j.twice

    @property
    def l(self) -> int:
        return self.m2.twice

    def indices(self):
        return [WignerIndex(self.j, self.n, m1, self.m2) for m1 in hrange(-self.j, self.j)]

    def __repr__(self):
        return f"KType(j={self.j}, n={self.n})"


def ktype_set(delta: int, jmax) -> list:
    """All K-types of the delta-sector with j <= jmax, ordered by (k, l)."""
    jmax = jmax if isinstance(jmax, HalfInt) else half(jmax)
    out = []
    for jt in range(0, jmax.twice + 1):
        j = HalfInt(jt)
        for m2 in hrange(-j, j):
            out.append(KType(j, half(3 * m2.as_fraction() - delta), m2))
    out.sort(key=lambda t: (t.k, t.l))
    return out


def delta_of(idx: WignerIndex) -> int:
    """The sector 3*m2 - n of a basis index (always an integer)."""
    t = 3 * idx.m2.twice - idx.n.twice
    if t % 2:
        raise AssertionError("3*m2 - n is not an integer")
    return t // 2


def principal_indices(delta: int, jmax) -> list:
    """All basis indices of the delta-sector with j <= jmax."""
    return [idx for kt in ktype_set(delta, jmax) for idx in kt.indices()]


# ---------------------------------------------------------------------------
# complex-valued lambda polynomials (operator coefficients)
# ---------------------------------------------------------------------------


class CLambda:
    """LambdaPoly with complex (surd) coefficients, as a (re, im) pair."""

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = re if isinstance(re, LambdaPoly) else LambdaPoly.const(re or 0)
        self.im = im if isinstance(im, LambdaPoly) else LambdaPoly.const(im or 0)

    @staticmethod
    def of(x) -> "CLambda":
        if isinstance(x, CLambda):
            return x
        if isinstance(x, CSurd):
            return CLambda(LambdaPoly.const(x.re), LambdaPoly.const(x.im))
        if isinstance(x, LambdaPoly):
            return CLambda(x)
        return CLambda(LambdaPoly.const(x))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __add__(self, other):
        other = CLambda.of(other)
        return CLambda(self.re + other.re, self.im + other.im)

    def __neg__(self):
        return CLambda(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-CLambda.of(other))

    def __mul__(self, other):
        other = CLambda.of(other)
        return CLambda(self.re * other.re - self.im * other.im,
                       self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = CLambda.of(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def eval_at(self, lam) -> complex:
        return complex(self.re.eval_at(lam)) + 1j * complex(self.im.eval_at(lam))

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        return f"({self.re}) + i*({self.im})"

    def __repr__(self):
        return f"CLambda[{self}]"


# ---------------------------------------------------------------------------
# left action
# ---------------------------------------------------------------------------

_Q_AMPLITUDE = {
    # (2*j0, sign): (j, m2) -> Surd
    (-1, +1): lambda j, m2: Surd.sqrt((j - m2).as_int()),
    (-1, -1): lambda j, m2: Surd.sqrt((j + m2).as_int()),
    (+1, +1): lambda j, m2: Surd.sqrt((j + m2).as_int() + 1),
    (+1, -1): lambda j, m2: Surd.sqrt((j - m2).as_int() + 1),
}


def _kappa(j0t: int, sign: int, j, n, m2) -> LambdaPoly:
    """The lambda-affine factor of the ladder coefficient."""
    base = 2 * j.as_fraction()
    if j0t == -1:
        if sign > 0:
            return LambdaPoly.affine(base + m2.as_fraction() - n.as_fraction(), -1)
        return LambdaPoly.affine(-(base - m2.as_fraction() + n.as_fraction()), 1)
    if sign > 0:
        return LambdaPoly.affine(base - m2.as_fraction() + n.as_fraction() + 2, 1)
    return LambdaPoly.affine(base + m2.as_fraction() - n.as_fraction() + 2, 1)


def dl_valpha(root: str, src: WignerIndex, chi: InductionChar | None = None):
    """Left action of a noncompact weight vector: list of (target, LambdaPoly).

    At most two terms (j -> j +- 1/2); terms with vanishing amplitude are
    dropped.  With `chi` given, the source must lie in the delta-sector.
    """
    if root not in structure.ROOT_TAGS:
        raise ValueError(f"unknown noncompact root tag {root!r}")
    if chi is not None and delta_of(src) != chi.delta:
        raise ValueError(f"source {src} violates 3*m2 - n = {chi.delta}")
    sign = +1 if root in structure.POSITIVE_ROOTS else -1
    m_root = half(structure.WEIGHT_PAIRS[root][0])
    j, n, m1, m2 = src.j, src.n, src.m1, src.m2
    pref = Surd.of(Fraction(1, 2)) / Surd.sqrt(j.twice + 1)
    out = []
    for j0t in (-1, +1):
        jj = HalfInt(j.twice + j0t)
        if jj < 0:
            continue
        amp = _Q_AMPLITUDE[(j0t, sign)](j, m2)
        cgv = cg(j, m1, HALF, m_root, jj, m1 + m_root)
        scale = pref * amp * cgv
        if scale.is_zero():
            continue
        poly = _kappa(j0t, sign, j, n, m2)
        target = WignerIndex(jj, n + sign * half(Fraction(3, 2)),
                             m1 + m_root, m2 + sign * half(Fraction(1, 2)))
        out.append((target, scale * poly))
    return out


def dl_valpha_raw(root: str, src: WignerIndex):
    """The same action assembled from the unsimplified product expansion

    (ladder amplitude on m2 and the right-action scalar, each multiplied by a
    pair of Clebsch-Gordan coefficients).  Independent route used to verify
    the closed-form tables.
    """
    sign = +1 if root in structure.POSITIVE_ROOTS else -1
    m_root = half(structure.WEIGHT_PAIRS[root][0])
    j, n, m1, m2 = src.j, src.n, src.m1, src.m2
    s = half(Fraction(sign, 2))
    out = []
    for j0t in (-1, +1):
        jj = HalfInt(j.twice + j0t)
        if jj < 0:
            continue
        # raising/lowering part of dr(v_{+-a2})
        amp = Surd.sqrt((j.as_fraction() - sign * m2.as_fraction())
                        * (j.as_fraction() + sign * m2.as_fraction() + 1))
        shifted = m2 + 2 * s
        if abs(shifted) <= j:
            first = amp * cg(j, shifted, HALF, -s, jj, m2 + s)
        else:
            first = ZERO
        # scalar part of dr(v_{+-(a1+a2)}): (1/2)(-+n -+ m2 - lambda - 2)
        const = Fraction(-sign) * (n.as_fraction() + m2.as_fraction()) - 2
        scalar = LambdaPoly.affine(Fraction(const, 2), Fraction(-1, 2))
        second = cg(j, m2, HALF, s, jj, m2 + s)
        bracket = LambdaPoly.const(first) - scalar * second
        outer = cg(j, m1, HALF, m_root, jj, m1 + m_root)
        poly = bracket * outer
        if poly.is_zero():
            continue
        target = WignerIndex(jj, n + sign * half(Fraction(3, 2)), m1 + m_root, m2 + s)
        out.append((target, poly))
    return out


# ---------------------------------------------------------------------------
# elementary operators and composition
# ---------------------------------------------------------------------------

_ELEMENTARY = ("U0", "U3", "U1+iU2", "U1-iU2", "v(a2)", "v(-a2)", "v(a1+a2)", "v(-a1-a2)")


def _apply_elementary(tag: str, idx: WignerIndex):
    """dl of an elementary generator on one basis vector: [(idx', CLambda)]."""
    j, n, m1, m2 = idx.j, idx.n, idx.m1, idx.m2
    if tag == "U0":
        return [(idx, CLambda(None, LambdaPoly.const(n.as_fraction())))]
    if tag == "U3":
        return [(idx, CLambda(None, LambdaPoly.const(m1.as_fraction())))]
    if tag == "U1+iU2":
        if m1 == j:
            return []
        amp = Surd.sqrt((j.as_fraction() - m1.as_fraction())
                        * (j.as_fraction() + m1.as_fraction() + 1))
        return [(WignerIndex(j, n, m1 + 1, m2), CLambda(None, LambdaPoly.const(-amp)))]
    if tag == "U1-iU2":
        if m1 == -j:
            return []
        amp = Surd.sqrt((j.as_fraction() + m1.as_fraction())
                        * (j.as_fraction() - m1.as_fraction() + 1))
        return [(WignerIndex(j, n, m1 - 1, m2), CLambda(None, LambdaPoly.const(-amp)))]
    if tag.startswith("v("):
        return [(t, CLambda(p)) for t, p in dl_valpha(tag[2:-1], idx)]
    raise ValueError(f"unknown elementary tag {tag!r}")


def dl_k(tag: str, src: WignerIndex):
    """Left action of a compact generator; tags U0, U3, U1, U2, U1+-iU2."""
    if tag in ("U0", "U3", "U1+iU2", "U1-iU2"):
        return _apply_elementary(tag, src)
    if tag in ("U1", "U2"):
        up = _apply_elementary("U1+iU2", src)
        dn = _apply_elementary("U1-iU2", src)
        if tag == "U1":
            cu = cd = CLambda.of(Fraction(1, 2))
        else:
            cu = CLambda.of(CSurd.of(0, Fraction(-1, 2)))
            cd = CLambda.of(CSurd.of(0, Fraction(1, 2)))
        return _merge([(t, cu * c) for t, c in up] + [(t, cd * c) for t, c in dn])
    raise ValueError(f"unknown compact tag {tag!r}")


def dr_op(tag: str, src: WignerIndex):
    """Right action: a-generator, noncompact weight vectors, compact tags."""
    j, n, m1, m2 = src.j, src.n, src.m1, src.m2
    if tag == "a":
        return [(src, CLambda(LambdaPoly.affine(-2, -1)))]
    if tag in ("v(a1+a2)", "v(-a1-a2)"):
        sign = +1 if tag == "v(a1+a2)" else -1
        const = Fraction(-sign) * (n.as_fraction() + m2.as_fraction()) - 2
        return [(src, CLambda(LambdaPoly.affine(Fraction(const, 2), Fraction(-1, 2))))]
    if tag in ("v(a2)", "v(-a2)"):
        sign = +1 if tag == "v(a2)" else -1
        if (sign > 0 and m2 == j) or (sign < 0 and m2 == -j):
            return []
        amp = Surd.sqrt((j.as_fraction() - sign * m2.as_fraction())
                        * (j.as_fraction() + sign * m2.as_fraction() + 1))
        tgt = WignerIndex(j, n, m1, m2 + sign)
        return [(tgt, CLambda(LambdaPoly.const(-amp)))]
    if tag == "U0":
        return [(src, CLambda(None, LambdaPoly.const(-n.as_fraction())))]
    if tag == "U3":
        return [(src, CLambda(None, LambdaPoly.const(-m2.as_fraction())))]
    if tag in ("U1+iU2", "U1-iU2"):
        sign = +1 if tag == "U1+iU2" else -1
        if (sign > 0 and m2 == -j) or (sign < 0 and m2 == j):
            return []
        amp = Surd.sqrt((j.as_fraction() + sign * m2.as_fraction())
                        * (j.as_fraction() - sign * m2.as_fraction() + 1))
        tgt = WignerIndex(j, n, m1, m2 - sign)
        return [(tgt, CLambda(None, LambdaPoly.const(amp)))]
    raise ValueError(f"unknown right-action tag {tag!r}")


def _merge(terms):
    acc = {}
    for idx, c in terms:
        acc[idx] = acc.get(idx, CLambda()) + c
    return [(idx, c) for idx, c in acc.items() if not c.is_zero()]


def lincomb_of_matrix(m: structure.Matrix3C):
    """Matrix in k + p  ->  list of (CSurd, elementary tag) for dl."""
    coeffs = structure.express_in_kp(m)
    out = []
    ih = Fraction(1, 2)
    for tag, c in coeffs.items():
        if c.is_zero():
            continue
        if tag == "U1":
            out.append((c * CSurd.of(ih), "U1+iU2"))
            out.append((c * CSurd.of(ih), "U1-iU2"))
        elif tag == "U2":
            out.append((c * CSurd.of(0, -ih), "U1+iU2"))
            out.append((c * CSurd.of(0, ih), "U1-iU2"))
        else:
            out.append((c, tag))
    return out


def apply_lincomb(lc, vec: dict) -> dict:
    """Apply sum_i c_i dl(tag_i) to a vector {index: CLambda}."""
    out = {}
    for idx, coeff in vec.items():
        if coeff.is_zero():
            continue
        for csc, tag in lc:
            for tgt, c in _apply_elementary(tag, idx):
                t = CLambda.of(csc) * c * coeff
                out[tgt] = out.get(tgt, CLambda()) + t
    return {k: v for k, v in out.items() if not v.is_zero()}


def dl_of_matrix(m: structure.Matrix3C, idx: WignerIndex):
    """dl of an arbitrary k + p matrix on one basis vector."""
    return sorted(apply_lincomb(lincomb_of_matrix(m), {idx: CLambda.of(1)}).items(),
                  key=lambda kv: kv[0].key())


# ---------------------------------------------------------------------------
# assembled operator matrices
# ---------------------------------------------------------------------------


@dataclass
class OperatorMatrix:
    """Sparse action of a generator program on the truncated basis."""

    delta: int
    jmax: HalfInt
    rows: dict = field(default_factory=dict)  # WignerIndex -> [(WignerIndex, coeff)]
    leak_rows: set = field(default_factory=set)
    numeric: bool = False

    def row(self, idx: WignerIndex):
        return self.rows.get(idx, [])


_PROGRAM_ALIASES = {"g0": "U0", "g1": "U1", "g2": "U2", "g3": "U3"}


def parse_program(text: str) -> list:
    """Composition program: whitespace/'*'-separated generator names,
    leftmost applied last (operator product order)."""
    toks = [t for t in text.replace("*", " ").split() if t]
    out = []
    for t in toks:
        t = _PROGRAM_ALIASES.get(t, t)
        out.append(lincomb_of_matrix(structure.basis_matrix(t)))  # raises on unknown tags
    return out


def operator_matrix(program, chi: InductionChar, jmax) -> OperatorMatrix:
    """Assemble a composition of dl generators over the truncated basis.

    `program` is a string (see parse_program) or a list of linear
    combinations; the leftmost factor is applied last.  Rows whose image
    leaves the truncation are flagged in `leak_rows`, never silently cut.
    """
    if isinstance(program, str):
        program = parse_program(program)
    jmax = jmax if isinstance(jmax, HalfInt) else half(jmax)
    numeric = chi.mode != "formal"
    lam = chi.lam_value()
    mat = OperatorMatrix(chi.delta, jmax, numeric=numeric)
    for src in principal_indices(chi.delta, jmax):
        vec = {src: CLambda.of(1)}
        for lc in reversed(program):
            vec = apply_lincomb(lc, vec)
        if any(t.j > jmax for t in vec):
            mat.leak_rows.add(src)
        if numeric:
            row = [(t, c.eval_at(lam)) for t, c in vec.items()]
            row = [(t, c) for t, c in row if abs(c) > 0]
        else:
            row = list(vec.items())
        mat.rows[src] = sorted(row, key=lambda kv: kv[0].key())
    return mat


def interior_indices(delta: int, jmax) -> list:
    """Rows whose two-step compositions stay inside the truncation."""
    jmax = jmax if isinstance(jmax, HalfInt) else half(jmax)
    return principal_indices(delta, HalfInt(jmax.twice - 2))


# ---------------------------------------------------------------------------
# bracket consistency
# ---------------------------------------------------------------------------

GENERATOR_TAGS = ("v(a2)", "v(-a2)", "v(a1+a2)", "v(-a1-a2)",
                  "U0", "U3", "U1", "U2")


@dataclass
class BracketReport:
    pairs_checked: int
    rows_checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def verify_brackets(delta: int, jmax, tags=GENERATOR_TAGS) -> BracketReport:
    """Check [dl(X), dl(Y)] = dl([X, Y]) exactly on interior rows.

    The bracket [X, Y] is taken as 3x3 matrices and re-expressed over the
    k + p basis, so the check ties the ladder tables to the matrix layer.
    """
    rows = interior_indices(delta, jmax)
    failures = []
    pairs = 0
    for i, tx in enumerate(tags):
        mx = structure.basis_matrix(tx)
        lx = lincomb_of_matrix(mx)
        for ty in tags[i + 1:]:
            my = structure.basis_matrix(ty)
            ly = lincomb_of_matrix(my)
            lbr = lincomb_of_matrix(mx.bracket(my))
            pairs += 1
            for src in rows:
                v = {src: CLambda.of(1)}
                xy = apply_lincomb(lx, apply_lincomb(ly, dict(v)))
                yx = apply_lincomb(ly, apply_lincomb(lx, dict(v)))
                expect = apply_lincomb(lbr, dict(v))
                diff = dict(xy)
                for k2, c in yx.items():
                    diff[k2] = diff.get(k2, CLambda()) - c
                for k2, c in expect.items():
                    diff[k2] = diff.get(k2, CLambda()) - c
                bad = {k2: c for k2, c in diff.items() if not c.is_zero()}
                if bad:
                    failures.append((tx, ty, src, bad))
    return BracketReport(pairs, len(rows), failures)


# ---------------------------------------------------------------------------
# Casimir elements
# ---------------------------------------------------------------------------


def casimir2_scalar(chi: InductionChar):
    """Scalar of the quadratic Casimir on the principal series:
    (3(lambda^2 - 4) + delta^2) / 36."""
    d2 = Fraction(chi.delta**2, 36)
    if chi.mode == "formal":
        return LambdaPoly(Surd.of(d2 - Fraction(1, 3)), ZERO, Surd.of(Fraction(1, 12)))
    lam = chi.lam_value()
    if isinstance(lam, int):
        return Fraction(3 * (lam * lam - 4)) / 36 + d2
    return (3.0 * (lam * lam - 4) + chi.delta**2) / 36.0


def casimir3_scalar(chi: InductionChar):
    """Scalar of the cubic Casimir, from its Harish-Chandra polynomial:
    (delta-3)(delta-3(lambda-2))(delta+3(lambda+2)) / (2^5 3^5)."""
    if chi.mode == "formal":
        raise ValueError("cubic scalar exceeds the degree-2 polynomial cap; "
                         "evaluate at a numeric lambda")
    d, lam = chi.delta, chi.lam_value()
    val = (d - 3) * (d - 3 * (lam - 2)) * (d + 3 * (lam + 2))
    if isinstance(lam, int):
        return Fraction(val, 2**5 * 3**5)
    return val / (2**5 * 3**5)


def _casimir2_program():
    """Factor list of the quadratic Casimir as (coefficient, [factors...]).

    (1/9)(H1^2 + H1 H2 + H2^2 + 3 H1 + 3 H2) + (1/3) sum_a X(-a) X(a).
    The ladder normalization 1/3 (not the misprinted 1/18) is what acts by
    casimir2_scalar; see the decisions ledger.
    """
    h1 = lincomb_of_matrix(structure.H1)
    h2 = lincomb_of_matrix(structure.H2)
    terms = [
        (Fraction(1, 9), [h1, h1]),
        (Fraction(1, 9), [h1, h2]),
        (Fraction(1, 9), [h2, h2]),
        (Fraction(1, 3), [h1]),
        (Fraction(1, 3), [h2]),
    ]
    for pos, neg in (("a1", "-a1"), ("a2", "-a2"), ("a1+a2", "-a1-a2")):
        lo = lincomb_of_matrix(structure.basis_matrix(f"X({neg})"))
        hi = lincomb_of_matrix(structure.basis_matrix(f"X({pos})"))
        terms.append((Fraction(1, 3), [lo, hi]))
    return terms


@dataclass
class CasimirReport:
    delta: int
    jmax: HalfInt
    rows_checked: int
    scalar: object
    failures: list
    ok: bool


def casimir2_apply(chi: InductionChar, jmax) -> CasimirReport:
    """Assemble the quadratic Casimir and verify it acts by casimir2_scalar.

    Formal mode checks the LambdaPoly identity exactly on every interior
    row; numeric modes substitute lambda first.  Off-diagonal residuals must
    vanish identically.
    """
    jmax = jmax if isinstance(jmax, HalfInt) else half(jmax)
    if jmax < half(Fraction(3, 2)):
        raise ValueError("need jmax >= 3/2 to see ladder terms")
    program = _casimir2_program()
    expect = casimir2_scalar(InductionChar(chi.delta, mode="formal"))
    rows = interior_indices(chi.delta, jmax)
    failures = []
    lam = chi.lam_value()
    for src in rows:
        acc: dict = {}
        for coef, factors in program:
            vec = {src: CLambda.of(1)}
            for lc in reversed(factors):
                vec = apply_lincomb(lc, vec)
            for tgt, c in vec.items():
                acc[tgt] = acc.get(tgt, CLambda()) + CLambda.of(Fraction(coef)) * c
        diag = acc.pop(src, CLambda())
        off = {t: c for t, c in acc.items() if not c.is_zero()}
        want = CLambda(expect)
        if chi.mode == "formal":
            good = diag == want and not off
        else:
            good = (abs(diag.eval_at(lam) - complex(want.eval_at(lam))) < 1e-12
                    and all(abs(c.eval_at(lam)) < 1e-12 for c in off.values()))
        if not good:
            failures.append((src, diag, off))
    scalar = expect if chi.mode == "formal" else casimir2_scalar(chi)
    return CasimirReport(chi.delta, jmax, len(rows), scalar, failures, not failures)
