"""High-precision asymptotics of the counting sequences.

The product-formula classes (ASM, OSASM with n even, and conjecturally with
n odd) have complete asymptotic expansions whose constants are closed forms
in pi, Gamma(1/3) and zeta'(-1); this module evaluates those expansions via
the large-z expansion of the Barnes G-function, checks the exact telescoping
count ratios that drive the leading-order theorem, tabulates the approach of
|count|^(e/n^2) to its limit 3*sqrt(3)/4, and fits the conjectured expansion
of the DSASM counts, whose constants C, a, b have no known closed form.

All floating arithmetic is arbitrary-precision binary (mpmath), default 256
bits: the fit design matrices at n in [150, 400] are far too ill-conditioned
for double precision.  Exact rational pieces (Bernoulli numbers, series
coefficients, ratio identities) stay in Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import FitError, IdentityFailure, RegimeError
from .errors import CheckReport
from .genfun import asm_class_count, class_admissible, dsasm_count_range

__all__ = [
    "FitResult",
    "LeadLimitReport",
    "PRECISION_BITS",
    "RATIO_CLASSES",
    "ZETA_PRIME_MINUS1",
    "asm_const",
    "asm_expansion",
    "bernoulli",
    "dsasm_fit",
    "lead_limit_report",
    "log_barnes",
    "osasm_expansion",
    "ratio_identity_check",
]

#: default binary working precision
PRECISION_BITS = 256

#: zeta'(-1) = 1/12 - log(A), A the Glaisher-Kinkelin constant; 50 d.p.
ZETA_PRIME_MINUS1 = "-0.16542114370045092921391966024278064276403638033520"


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def _zp1():
    return mp.mpf(ZETA_PRIME_MINUS1)


# ---------------------------------------------------------------------------
# Bernoulli numbers and the Barnes G expansion

_bernoulli_cache = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """The k-th Bernoulli number, exact, with the B_1 = -1/2 convention
    (sum_{j=0}^{k} C(k+1, j) B_j = 0)."""
    if k < 0:
        raise ValueError("k >= 0 required")
    while len(_bernoulli_cache) <= k:
        m = len(_bernoulli_cache)
        acc = sum(
            Fraction(math.comb(m + 1, j)) * _bernoulli_cache[j] for j in range(m)
        )
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[k]


def log_barnes(z, order: int = 3, prec: int = PRECISION_BITS):
    """log G(1+z) by the large-z asymptotic expansion.

    The partial sum runs through the B_{2i+2}/(4i(i+1) z^{2i}) term with
    i = order, so the truncation error is O(z^{-2*order-2}).  Restricted to
    real z >= 4: this is an asymptotic series, and small z is not its
    regime.
    """
    with mp.workprec(prec):
        z = _to_mpf(z)
        if not z >= 4:
            raise RegimeError(f"asymptotic regime needs real z >= 4, got {z}")
        total = (
            z * z * mp.log(z) / 2
            - 3 * z * z / 4
            + mp.log(2 * mp.pi) * z / 2
            - mp.log(z) / 12
            + _zp1()
        )
        for i in range(1, order + 1):
            total += _to_mpf(bernoulli(2 * i + 2)) / (4 * i * (i + 1) * z ** (2 * i))
        return total


# ---------------------------------------------------------------------------
# closed-form expansions for the product-formula classes


def asm_const(prec: int = PRECISION_BITS):
    """The ASM expansion constant 2^(5/12) pi^(1/3) e^(zeta'(-1)/3) /
    (3^(7/36) Gamma(1/3)^(2/3)) = 0.7746696632..."""
    with mp.workprec(prec):
        third = mp.mpf(1) / 3
        return (
            mp.mpf(2) ** (mp.mpf(5) / 12)
            * mp.pi**third
            * mp.exp(_zp1() * third)
            / (mp.mpf(3) ** (mp.mpf(7) / 36) * mp.gamma(third) ** (2 * third))
        )


#: correction terms of the ASM expansion: (exponent of 1/n, coefficient)
_ASM_TERMS = (
    (2, Fraction(-115, 15552)),
    (4, Fraction(796873, 483729408)),
    (6, Fraction(-23733315595, 22568879259648)),
)

#: correction terms of the OSASM expansions, by parity
_OSASM_TERMS = {
    "even": (
        (1, Fraction(-5, 144)),
        (2, Fraction(-385, 124416)),
        (3, Fraction(57365, 5971968)),
        (4, Fraction(15026011, 30958682112)),
    ),
    "odd": (
        (1, Fraction(67, 144)),
        (2, Fraction(6095, 124416)),
        (3, Fraction(-173635, 5971968)),
        (4, Fraction(-417738629, 30958682112)),
    ),
}


def asm_expansion(n: int, terms: int = 3, prec: int = PRECISION_BITS):
    """The asymptotic value of |ASM(n)|: constant times (3 sqrt(3)/4)^(n^2)
    n^(-5/36) times the series 1 - 115/(15552 n^2) + ... through the
    requested number of correction terms (0..3)."""
    if n < 4:
        raise ValueError("n >= 4 required (asymptotic regime)")
    if not 0 <= terms <= len(_ASM_TERMS):
        raise ValueError(f"0..{len(_ASM_TERMS)} correction terms available")
    with mp.workprec(prec):
        nn = mp.mpf(n)
        series = mp.mpf(1)
        for e, c in _ASM_TERMS[:terms]:
            series += _to_mpf(c) / nn**e
        lead = (3 * mp.sqrt(3) / 4) ** (nn * nn) * nn ** (mp.mpf(-5) / 36)
        return asm_const(prec) * lead * series


def osasm_expansion(n: int, parity: str, terms: int = 4, prec: int = PRECISION_BITS):
    """The asymptotic value of |OSASM(n)| for the given parity branch.

    Both branches share the factor (3 sqrt(3)/4)^(n^2/2) (3/4)^(3n/4); the
    even branch (a theorem) carries n^(-5/72), the odd branch (resting on
    the conjectured product formula) n^(67/72), with different constants
    and correction series.  ``terms`` selects 0..4 corrections.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if n % 2 != (0 if parity == "even" else 1):
        raise ValueError(f"n = {n} does not have parity {parity!r}")
    if n < 4:
        raise ValueError("n >= 4 required (asymptotic regime)")
    if not 0 <= terms <= 4:
        raise ValueError("0..4 correction terms available")
    with mp.workprec(prec):
        third = mp.mpf(1) / 3
        shared = mp.pi ** (mp.mpf(1) / 6) * mp.exp(_zp1() / 6) / mp.gamma(third) ** third
        if parity == "even":
            const = shared * mp.mpf(3) ** (mp.mpf(11) / 72) / mp.mpf(2) ** (mp.mpf(1) / 24)
            npow = mp.mpf(-5) / 72
        else:
            const = shared * mp.mpf(3) ** (mp.mpf(83) / 72) / mp.mpf(2) ** (mp.mpf(49) / 24)
            npow = mp.mpf(67) / 72
        nn = mp.mpf(n)
        series = mp.mpf(1)
        for e, c in _OSASM_TERMS[parity][:terms]:
            series += _to_mpf(c) / nn**e
        lead = (3 * mp.sqrt(3) / 4) ** (nn * nn / 2) * (mp.mpf(3) / 4) ** (3 * nn / 4)
        return const * lead * nn**npow * series


# ---------------------------------------------------------------------------
# exact ratio identities (the engine of the leading-order theorem)

RATIO_CLASSES = ("ASM", "VSASM", "VHSASM", "HTSASM_even", "HTSASM_odd")


def ratio_identity_check(klass: str, n: int) -> CheckReport:
    """The telescoping three-term count ratio of a product-formula class
    against its printed rational closed form, as an exact Fraction identity.

    The parameter n indexes the closed form; the counts involved are at the
    three consecutive admissible sizes built from it (n, n+1, n+2 for ASM;
    2n-1, 2n+1, 2n+3 for the odd-size classes; 2n, 2n+2, 2n+4 for the even
    half-turn branch).
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    cc = asm_class_count
    if klass == "ASM":
        lhs = Fraction(cc("ASM", n + 2) * cc("ASM", n), cc("ASM", n + 1) ** 2)
        rhs = Fraction(3 * (3 * n + 2) * (3 * n + 4), 4 * (2 * n + 1) * (2 * n + 3))
    elif klass == "VSASM":
        lhs = Fraction(
            cc("VSASM", 2 * n + 3) * cc("VSASM", 2 * n - 1), cc("VSASM", 2 * n + 1) ** 2
        )
        rhs = Fraction(
            9 * (3 * n + 1) * (3 * n + 2) * (6 * n - 1) * (6 * n + 1),
            4 * (4 * n - 1) * (4 * n + 1) ** 2 * (4 * n + 3),
        )
    elif klass == "VHSASM":
        sg = -1 if n % 2 else 1
        lhs = Fraction(
            cc("VHSASM", 2 * n + 3) * cc("VHSASM", 2 * n - 1),
            cc("VHSASM", 2 * n + 1) ** 2,
        )
        rhs = Fraction(
            3 * (3 * n + 2 * sg) * (3 * n - sg), 4 * (2 * n - 1) * (2 * n + 1)
        )
    elif klass == "HTSASM_even":
        lhs = Fraction(
            cc("HTSASM", 2 * n + 4) * cc("HTSASM", 2 * n), cc("HTSASM", 2 * n + 2) ** 2
        )
        rhs = Fraction(
            9 * (3 * n + 1) * (3 * n + 2) * (3 * n + 4) * (3 * n + 5),
            16 * (2 * n + 1) ** 2 * (2 * n + 3) ** 2,
        )
    elif klass == "HTSASM_odd":
        lhs = Fraction(
            cc("HTSASM", 2 * n + 3) * cc("HTSASM", 2 * n - 1),
            cc("HTSASM", 2 * n + 1) ** 2,
        )
        rhs = Fraction(9 * (3 * n + 1) ** 2 * (3 * n + 2) ** 2, 16 * (2 * n + 1) ** 4)
    else:
        raise KeyError(f"unknown ratio class {klass!r}; have {RATIO_CLASSES}")
    if lhs != rhs:
        raise IdentityFailure(f"{klass} ratio fails at n = {n}: {lhs} != {rhs}")
    return CheckReport(f"ratio:{klass}", True, f"n = {n}: both sides {lhs}")


# ---------------------------------------------------------------------------
# leading-order limit tabulation

#: exponent e such that |C(n)|^(e/n^2) -> 3 sqrt(3)/4 (the order of the
#: symmetry group, or 2 for the DSASM subclasses)
_LEAD_EXPONENT = {
    "ASM": 1,
    "VSASM": 2,
    "VHSASM": 4,
    "HTSASM": 2,
    "QTSASM": 4,
    "DASASM_odd": 4,
    "OSASM_even": 2,
    "OSASM_odd_conj": 2,
    "DSASM": 2,
}


@dataclass(frozen=True)
class LeadLimitReport:
    """Tabulated approach of |count(n)|^(e/n^2) to 3 sqrt(3)/4.

    ``rows`` holds (n, value, distance) triples for every admissible size;
    ``tail_decreasing`` says whether the distance was non-increasing over
    the final stretch of rows.  No limit is asserted: a finite table cannot
    verify one, it can only fail to refute it.
    """

    klass: str
    exponent: int
    target: object
    rows: tuple
    tail_decreasing: bool

    def __str__(self):
        lines = [
            f"{self.klass}: |count(n)|^({self.exponent}/n^2) vs 3*sqrt(3)/4 = "
            f"{mp.nstr(self.target, 12)}"
        ]
        show = self.rows if len(self.rows) <= 12 else self.rows[-12:]
        for n, v, d in show:
            lines.append(f"  n = {n:4d}: {mp.nstr(v, 12)}  (distance {mp.nstr(d, 4)})")
        lines.append(f"  distance non-increasing over the tail: {self.tail_decreasing}")
        return "\n".join(lines)


def lead_limit_report(
    klass: str, n_max: int, counts=None, prec: int = PRECISION_BITS
) -> LeadLimitReport:
    """Tabulate |count(n)|^(e/n^2) for all admissible n <= n_max.

    ``klass`` is a product-formula class name or "DSASM"; for "DSASM" the
    counts come from the Pfaffian count table (or a precomputed ``counts``
    mapping, e.g. a parsed CLI cache).
    """
    try:
        expo = _LEAD_EXPONENT[klass]
    except KeyError:
        raise KeyError(f"unknown class {klass!r}; have {sorted(_LEAD_EXPONENT)}") from None
    if klass == "DSASM":
        if counts is None:
            counts = dsasm_count_range(n_max)
        ns = [n for n in sorted(counts) if n <= n_max]
        get = counts.__getitem__
    else:
        ns = [n for n in range(1, n_max + 1) if class_admissible(klass, n)]
        if counts is not None:
            get = counts.__getitem__
        else:
            get = lambda n: asm_class_count(klass, n)
    with mp.workprec(prec):
        target = 3 * mp.sqrt(3) / 4
        rows = []
        for n in ns:
            v = mp.exp(mp.mpf(expo) * mp.log(mp.mpf(get(n))) / (n * n))
            rows.append((n, v, abs(v - target)))
        tail = rows[-min(10, len(rows)) :]
        decreasing = all(b[2] <= a[2] for a, b in zip(tail, tail[1:]))
        return LeadLimitReport(klass, expo, target, tuple(rows), decreasing)


# ---------------------------------------------------------------------------
# fitting the conjectured DSASM expansion


@dataclass(frozen=True)
class FitResult:
    """Result of the least-squares fit of the conjectured DSASM expansion.

    C is the shared overall constant, a and b the even/odd n^(-5/2)
    amplitudes, c2 the shared n^(-2) coefficient (conjecturally
    -385/31104).  ``coeffs_even``/``coeffs_odd`` are the raw linear
    coefficients per branch (C, C*c2, C*a_or_b, C*c3, C*c72);
    ``residuals_even``/``residuals_odd`` hold (n, y_n - model(n)) pairs,
    and ``residual_norm_*`` their Euclidean norms.
    """

    C: object
    a: object
    b: object
    c2: object
    coeffs_even: tuple
    coeffs_odd: tuple
    residuals_even: tuple
    residuals_odd: tuple
    residual_norm_even: object
    residual_norm_odd: object
    cond_even: object
    cond_odd: object
    window: tuple


def _branch_fit(ns, ys, sign_of):
    """Least squares of y ~ C (1 + c2/n^2 + s_n c/n^(5/2) + c3/n^3 + c72/n^(7/2))."""
    rows = []
    for n in ns:
        nn = mp.mpf(n)
        rows.append(
            [
                mp.mpf(1),
                nn**-2,
                sign_of(n) * nn ** (mp.mpf(-5) / 2),
                nn**-3,
                nn ** (mp.mpf(-7) / 2),
            ]
        )
    A = mp.matrix(rows)
    y = mp.matrix([ys[n] for n in ns])
    _, R = mp.qr(A)
    diag = [abs(R[i, i]) for i in range(A.cols)]
    if min(diag) == 0:
        raise FitError("rank-deficient design matrix")
    cond = max(diag) / min(diag)
    if cond > mp.mpf(2) ** (mp.mp.prec // 2):
        raise FitError(f"ill-conditioned design matrix: R-diagonal ratio {mp.nstr(cond, 5)}")
    x, _ = mp.qr_solve(A, y)
    resid = []
    for idx, n in enumerate(ns):
        model = sum(A[idx, j] * x[j] for j in range(A.cols))
        resid.append((n, ys[n] - model))
    norm = mp.sqrt(sum(r * r for _, r in resid))
    return tuple(x), tuple(resid), norm, cond


def dsasm_fit(counts, window=(150, 400), prec: int = PRECISION_BITS) -> FitResult:
    """Fit the conjectured DSASM asymptotic expansion to exact counts.

    Each count is divided by (3 sqrt(3)/4)^(n^2/2) 3^(n/4) n^(-5/72); the
    scaled values are fit, separately for even and odd n (the n^(-5/2) term
    alternates in sign with period 4 within each parity class), to
    C (1 + c2 n^-2 +- c n^(-5/2) + c3 n^-3 + c72 n^(-7/2)), and the results
    are merged: a from the even branch, b from the odd branch, C and c2
    averaged.  Conjecturally b/a = 1 + sqrt(2).
    """
    lo, hi = window
    if hi < 200:
        raise ValueError("window max >= 200 required for a meaningful fit")
    ns = range(lo, hi + 1)
    missing = [n for n in ns if n not in counts]
    if missing:
        raise ValueError(f"counts missing for n in {missing[:5]}...")
    with mp.workprec(prec):
        log_lead = mp.log(3 * mp.sqrt(3) / 4)
        log3 = mp.log(mp.mpf(3))
        ys = {}
        for n in ns:
            logy = (
                mp.log(mp.mpf(counts[n]))
                - mp.mpf(n) * n / 2 * log_lead
                - mp.mpf(n) / 4 * log3
                + mp.mpf(5) / 72 * mp.log(mp.mpf(n))
            )
            ys[n] = mp.exp(logy)
        even_ns = [n for n in ns if n % 2 == 0]
        odd_ns = [n for n in ns if n % 2 == 1]
        ce, re_, ne_, ke = _branch_fit(even_ns, ys, lambda n: (-1) ** (n // 2))
        co, ro, no_, ko = _branch_fit(odd_ns, ys, lambda n: (-1) ** ((n + 1) // 2))
        C = (ce[0] + co[0]) / 2
        if not C > 0:
            raise FitError(f"nonpositive constant estimate {mp.nstr(C, 10)}")
        return FitResult(
            C=C,
            a=ce[2] / ce[0],
            b=co[2] / co[0],
            c2=(ce[1] / ce[0] + co[1] / co[0]) / 2,
            coeffs_even=ce,
            coeffs_odd=co,
            residuals_even=re_,
            residuals_odd=ro,
            residual_norm_even=ne_,
            residual_norm_odd=no_,
            cond_even=ke,
            cond_odd=ko,
            window=(lo, hi),
        )
