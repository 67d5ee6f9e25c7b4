"""Entries of the Pfaffian and determinant formulas.

Every formula assembled in :mod:`dsasm.genfun` takes as input the coefficients
``[u^i v^j] f(u, v)`` (or ``[u^i] f(u)`` for last columns) of a specific
rational function.  This module knows those rational functions by name, and
produces their coefficients three ways:

* :func:`oracle_entry` expands the rational function as a power series and
  reads the coefficient off directly -- slow but assumption-free; it is the
  reference the other routes are tested against,
* closed forms (:func:`entry_rs`, :func:`entry_count`, :func:`entry_reform`,
  :func:`entry_rst_lastcol`, :func:`entry_dspm`),
* recurrences (:func:`entry_recur_table`), which are what make large-order
  Pfaffians affordable.

Closed-form functions accept ``check=True`` to assert agreement with the
series oracle on the spot.  Binomial coefficients follow the convention that
C(n, k) = 0 unless 0 <= k <= n, including for negative n; several of the
closed forms silently rely on this.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalIdentityError
from .exact import (
    BiSeries,
    MultiPoly,
    RatFunc,
    binom,
    odd,
    pvar,
    series_of_ratfunc,
)

_u, _v = pvar("u"), pvar("v")
_r, _s, _t, _p = pvar("r"), pvar("s"), pvar("t"), pvar("p")
_sp, _sm = pvar("sp"), pvar("sm")

KERNEL_IDS = (
    "dsasm_rs",
    "dsasm_count",
    "dsasm_reform",
    "dsasm_rst_lastcol",
    "dsasm_divdiff",
    "osasm",
    "osasm_count",
    "dspm",
    "general_t1",
    "general_sym_lastcol",
    "asm_mi",
)


def kernel_ratfunc(kernel: str, n=None) -> RatFunc:
    """The defining rational function of a kernel, as num/den in u (and v).

    ``n`` is required for the kernels whose entries depend on the matrix
    order (``dspm``).  ``dsasm_divdiff`` has no single rational function; use
    :func:`entry_divdiff`.
    """
    u, v, r, s, t, p = _u, _v, _r, _s, _t, _p
    d2 = (1 - r * u) * (1 - r * v) - u * v
    if kernel == "dsasm_rs":
        return RatFunc((v - u) * (s**2 * d2 + r * (1 + u) * (1 + v)), (1 - u * v) * d2)
    if kernel == "dsasm_count":
        return RatFunc((v - u) * (2 + u * v), (1 - u * v) * (1 - u - v))
    if kernel == "dsasm_reform":
        return RatFunc(
            (v - u) * (s**2 * d2 + r * (1 + u) * (1 + v)),
            (1 - u * v) * (1 + u) * (1 + v) * d2,
        )
    if kernel == "osasm":
        return RatFunc((v - u) * (1 + u) * (1 + v), (1 - u * v) * d2)
    if kernel == "osasm_reform":
        return RatFunc(v - u, (1 - u * v) * d2)
    if kernel == "osasm_count":
        return RatFunc(v - u, (1 - u * v) * (1 - u - v))
    if kernel == "osasm_count_sym":
        return RatFunc((v - u) * (1 + u) * (1 + v), (1 - u * v) * (1 - u - v))
    if kernel == "dspm":
        if n is None or n < 2:
            raise ValueError("dspm kernel needs the matrix order n >= 2")
        tail = (t - 1) * sum((n - k - 1) * t**k for k in range(n - 1))
        extra = (1 - u * v) * u ** (n - 2) * v ** (n - 2) * tail
        return RatFunc(
            (v - u) * (s**2 * (1 - u * v) + (1 + u) * (1 + v) + extra),
            (1 - u * v) ** 2,
        )
    if kernel == "general_t1":
        d2p = (1 - r * u) * (1 - r * v) - p * u * v
        sp, sm = _sp, _sm
        return RatFunc(
            (v - u)
            * ((sp - sm * u) * (sp - sm * v) * d2p + r * (1 - u**2) * (1 - v**2)),
            (1 - u * v) * d2p,
        )
    if kernel == "general_sym":
        d2p = (1 - r * u) * (1 - r * v) - p * u * v
        return RatFunc(
            (v - u) * (s**2 * d2p + r * (1 + u) * (1 + v)), (1 - u * v) * d2p
        )
    if kernel == "osasm_lastcol":
        return RatFunc(
            (t - 1 - r * t * u) * (1 + u),
            (r * t - (t - 1) * u) * (r - (t - 1 + r**2) * u),
        )
    if kernel == "asm_mi":
        d2p = (1 - r * u) * (1 - r * v) - p * u * v
        return RatFunc(MultiPoly.const(1), (1 - u * v) * d2p)
    if kernel == "dsasm_rst_lastcol":
        den1 = r * t - (t - 1) * u
        den2 = r - (t - 1 + r**2) * u
        return RatFunc(
            (t - 1 - r * t * u) * (s**2 * den2 + r * (t - 1 + r * t) * (1 + u)),
            den1 * den2,
        )
    if kernel == "general_sym_lastcol":
        den1 = r * t - (t - 1) * u
        den2 = r - (p * t - p + r**2) * u
        return RatFunc(
            (t - 1 - r * t * u) * (s**2 * den2 + r * (t - 1 + r * t) * (1 + u)),
            den1 * den2,
        )
    raise KeyError(f"unknown kernel {kernel!r}")


_UNIVARIATE = {"dsasm_rst_lastcol", "general_sym_lastcol", "osasm_lastcol"}
_series_cache: dict = {}


def _kernel_series(kernel, du, dv, n=None) -> BiSeries:
    key = (kernel, n)
    cached = _series_cache.get(key)
    if cached is not None and cached.du >= du and cached.dv >= dv:
        return cached
    f = kernel_ratfunc(kernel, n=n)
    ser = series_of_ratfunc(f, max(du, 4), max(dv, 4))
    _series_cache[key] = ser
    return ser


def oracle_entry(kernel: str, i: int, j=None, n=None):
    """Coefficient of u^i v^j (or u^i for last-column kernels) straight from
    the power series of the kernel's rational function."""
    if kernel in _UNIVARIATE:
        ser = _kernel_series(kernel, i, 0, n=n)
        return ser.coeff(i, 0)
    if j is None:
        raise TypeError(f"kernel {kernel!r} is bivariate; j is required")
    ser = _kernel_series(kernel, i, j, n=n)
    return ser.coeff(i, j)


# ---------------------------------------------------------------------------
# closed forms


def entry_count(i: int, j: int, check: bool = False) -> int:
    """Entry of the DSASM counting Pfaffian, [u^i v^j] (v-u)(2+uv)/((1-uv)(1-u-v)).

    Both printed closed forms are evaluated and compared; the second makes
    positivity obvious, the first integrality.
    """
    if not 0 <= i < j:
        raise IndexError(f"need 0 <= i < j, got ({i}, {j})")
    first = sum(
        (3 - (k == 0)) * (binom(i + j - 2 * k - 1, i - k) - binom(i + j - 2 * k - 1, j - k))
        for k in range(i + 1)
    )
    second = (j - i) * sum(
        Fraction(3 - (k == 0), i + j - 2 * k) * binom(i + j - 2 * k, i - k)
        for k in range(i + 1)
    )
    if first != second:
        raise InternalIdentityError(f"count entry forms disagree at ({i}, {j})")
    if check and first != oracle_entry("dsasm_count", i, j):
        raise InternalIdentityError(f"count entry vs series oracle at ({i}, {j})")
    return int(first)


def _rpoly(coeffs):
    """MultiPoly in r from a dict power -> integer coefficient."""
    out = MultiPoly()
    for e, c in coeffs.items():
        if not c:
            continue
        if e < 0:
            raise InternalIdentityError("negative power of r with nonzero coefficient")
        out = out + c * _r**e
    return out


def entry_rs(i: int, j: int, check: bool = False) -> MultiPoly:
    """Entry of the X_n(r,s,1) Pfaffian: the triple-binomial closed form."""
    if not 0 <= i < j:
        raise IndexError(f"need 0 <= i < j, got ({i}, {j})")
    d = j - i
    coeffs: dict = {}
    for k in range(i + 1):
        for l in range(k + 1):
            c1 = binom(k, l) * binom(d + k - 1, l) - binom(k - 1, l) * binom(d + k, l)
            c2 = binom(k, l) * binom(d + k - 2, l) - binom(k - 2, l) * binom(d + k, l)
            c3 = binom(k - 1, l) * binom(d + k - 2, l) - binom(k - 2, l) * binom(d + k - 1, l)
            e = d + 2 * k - 2 * l
            for de, c in ((0, c1), (-1, c2), (-2, c3)):
                if c:
                    coeffs[e + de] = coeffs.get(e + de, 0) + c
    out = _rpoly(coeffs)
    if j == i + 1:
        out = out + _s**2
    if check and out != oracle_entry("dsasm_rs", i, j):
        raise InternalIdentityError(f"rs entry vs series oracle at ({i}, {j})")
    return out


def entry_reform(i: int, j: int, check: bool = False) -> MultiPoly:
    """Entry of the reformulated X_n(r,s,1) Pfaffian: the short closed form
    s^2 (-1)^{i+j+1} plus a single binomial sum."""
    if not 0 <= i < j:
        raise IndexError(f"need 0 <= i < j, got ({i}, {j})")
    d = j - i
    coeffs: dict = {}
    for k in range(i + 1):
        for l in range(k + 1):
            c = binom(k, l) * binom(d + k - 1, l) - binom(k - 1, l) * binom(d + k, l)
            if c:
                e = d + 2 * k - 2 * l
                coeffs[e] = coeffs.get(e, 0) + c
    out = _rpoly(coeffs) + (-1) ** (i + j + 1) * _s**2
    if check and out != oracle_entry("dsasm_reform", i, j):
        raise InternalIdentityError(f"reform entry vs series oracle at ({i}, {j})")
    return out


def entry_dspm(i: int, j: int, n: int) -> MultiPoly:
    """Banded entries of the involution-counting Pfaffian in s, t."""
    if not (odd(n) <= i < j <= n - 1):
        raise IndexError(f"need odd(n) <= i < j <= n-1, got ({i}, {j}) for n={n}")
    if j == i + 1:
        out = 2 * i + 1 + _s**2
        if i == n - 2:
            out = out + (_t - 1) * sum((n - k - 1) * _t**k for k in range(n - 1))
        return out
    if j == i + 2:
        return MultiPoly.const(i + 1)
    return MultiPoly()


def entry_rst_lastcol(i: int, check: bool = False) -> RatFunc:
    """Last-column entry of the t-general DSASM Pfaffian, as a rational
    function of r, s, t.  Both printed branch forms are computed and compared,
    and optionally checked against the series oracle and against substituting
    v = (t-1)/(rt) into the t = 1 kernel.
    """
    if i < 0:
        raise IndexError(f"need i >= 0, got {i}")
    r, s, t = _r, _s, _t
    if i == 0:
        out = RatFunc((t - 1) * (s**2 + t - 1 + r * t), r * t)
    else:
        pre = RatFunc(t - 1 + r * t, (r * t) ** (i + 1))
        a = s**2 * (t - 1 - r * t) * (t - 1) ** (i - 1)
        mid = (t - 1 + r * t) ** 2 * (t - 1 - r * t) * sum(
            ((t - 1) ** k * t ** (i - k - 2) * (t - 1 + r**2) ** (i - k - 2)
             for k in range(i - 1)),
            start=MultiPoly(),
        )
        b = ((t - 1) ** 2 * (t + 1) + r * t * (t - 1 - r)) * t ** (i - 1) * (t - 1 + r**2) ** (i - 1)
        out = pre * (a + mid + b)
        alt = pre * (
            RatFunc(a)
            + ((t - 1 + r * t) ** 2 * (t - 1 - r * t) * (t - 1) ** (i - 1)
               - (t - 1 + r + r**2) * ((t - 1) ** 2 - r**2) * t ** (i + 1) * (t - 1 + r**2) ** (i - 1))
            / (t - 1 - t * (t - 1 + r**2))
        )
        if out != alt:
            raise InternalIdentityError(f"last-column branch forms disagree at i={i}")
    if check and out != oracle_entry("dsasm_rst_lastcol", i):
        raise InternalIdentityError(f"last-column entry vs series oracle at i={i}")
    return out


# ---------------------------------------------------------------------------
# recurrences


@dataclass
class EntryTable:
    """A full (N+1) x (N+1) table of kernel entries built by recurrence."""

    kernel: str
    params: tuple
    N: int
    M: list

    def __getitem__(self, ij):
        i, j = ij
        return self.M[i][j]


def entry_recur_table(N: int, variant: int, r=None, s=None) -> EntryTable:
    """Table of [u^i v^j] coefficients of the X_n(r,s,1) kernel for
    0 <= i, j <= N, by one of the three recurrences (numerator/denominator
    clearing in different amounts).

    ``r`` and ``s`` default to the symbols; passing numbers gives a numeric
    table (with r = s = 1 the table is integer-valued and fast, which is what
    the large-order counting path uses).  Boundary condition: entries with a
    negative index are zero.
    """
    if N < 1:
        raise ValueError("N >= 1 required")
    r = _r if r is None else r
    s = _s if s is None else s
    s2 = s * s
    zero = MultiPoly() if isinstance(r, MultiPoly) or isinstance(s, MultiPoly) else 0

    def get(M, i, j):
        return M[i][j] if i >= 0 and j >= 0 else zero

    M = [[zero] * (N + 1) for _ in range(N + 1)]
    if variant == 1:
        c1, c2, c3 = r + s2, r * (1 - s2), r - s2 + r * r * s2

        def src(i, j):
            acc = zero
            if (i, j) == (0, 1):
                acc = acc + c1
            elif (i, j) == (1, 0):
                acc = acc - c1
            if (i, j) == (0, 2):
                acc = acc + c2
            elif (i, j) == (2, 0):
                acc = acc - c2
            if (i, j) == (1, 2):
                acc = acc + c3
            elif (i, j) == (2, 1):
                acc = acc - c3
            return acc

        for i in range(N + 1):
            for j in range(N + 1):
                M[i][j] = (
                    r * (get(M, i, j - 1) + get(M, i - 1, j))
                    - (r * r - 2) * get(M, i - 1, j - 1)
                    - r * (get(M, i - 1, j - 2) + get(M, i - 2, j - 1))
                    - (1 - r * r) * get(M, i - 2, j - 2)
                    + src(i, j)
                )
    elif variant == 2:
        c1, c2, c3 = r * (r * s2 + 2), r * (1 - s2), s2 - r * r * s2 - r

        def src(i, j):
            acc = zero
            if j == i + 1:
                acc = acc + c1
            elif i == j + 1:
                acc = acc - c1
            if j == i + 2:
                acc = acc + c2
            elif i == j + 2:
                acc = acc - c2
            if (i, j) == (0, 1):
                acc = acc + c3
            elif (i, j) == (1, 0):
                acc = acc - c3
            return acc

        for i in range(N + 1):
            for j in range(N + 1):
                M[i][j] = (
                    r * (get(M, i, j - 1) + get(M, i - 1, j))
                    - (r * r - 1) * get(M, i - 1, j - 1)
                    + src(i, j)
                )
    elif variant == 3:

        def src(i, j):
            coeffs: dict = {}
            for k in range(min(i, j) + 1):
                b1 = binom(i, k) * binom(j - 1, k) - binom(i - 1, k) * binom(j, k)
                b2 = binom(i, k) * binom(j - 2, k) - binom(i - 2, k) * binom(j, k)
                b3 = binom(i - 1, k) * binom(j - 2, k) - binom(i - 2, k) * binom(j - 1, k)
                e = i + j - 2 * k
                for de, c in ((0, b1), (-1, b2), (-2, b3)):
                    if c:
                        coeffs[e + de] = coeffs.get(e + de, 0) + c
            acc = zero
            for e, c in coeffs.items():
                if not c:
                    continue
                if e < 0:
                    raise InternalIdentityError("negative r power in recurrence source")
                acc = acc + c * r**e
            if (i, j) == (0, 1):
                acc = acc + s2
            elif (i, j) == (1, 0):
                acc = acc - s2
            return acc

        for i in range(N + 1):
            for j in range(N + 1):
                M[i][j] = get(M, i - 1, j - 1) + src(i, j)
    else:
        raise ValueError(f"variant must be 1, 2 or 3, got {variant!r}")
    return EntryTable(kernel="dsasm_rs", params=(r, s), N=N, M=M)


def count_table(N: int) -> EntryTable:
    """Integer entry table for the DSASM counting Pfaffian, 0 <= i, j <= N."""
    return entry_recur_table(N, 2, r=1, s=1)


# ---------------------------------------------------------------------------
# divided differences


_divdiff_cache: dict = {}


def divdiff_fun(n: int) -> RatFunc:
    """The n-th divided difference (in v, at 0,...,0,v) of the t = 1 kernel,
    as an explicit rational function of u and v: f_0 is the kernel itself and
    f_n = (f_{n-1}(u,v) - f_{n-1}(u,0))/v.

    Unrolling the recursion gives f_n = (f_0 - T_{n-1})/v^n with T_{n-1} the
    v-Taylor polynomial of f_0 of order n - 1, which is what is computed here
    (the naive recursion squares the denominator at every step).
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    if n in _divdiff_cache:
        return _divdiff_cache[n]
    if n == 0:
        f = kernel_ratfunc("dsasm_rs")
    else:
        base = kernel_ratfunc("dsasm_rs")
        num, den = base.num, base.den
        dv = [den.coeff_of("v", j) for j in range(den.degree("v") + 1)]
        d0 = dv[0]
        # e_k/d0^(k+1) = [v^k] f_0, by the linear recurrence den*f_0 = num
        e = []
        for k in range(n):
            acc = num.coeff_of("v", k) * d0**k
            for j in range(1, min(k, len(dv) - 1) + 1):
                acc = acc - dv[j] * e[k - j] * d0 ** (j - 1)
            e.append(acc)
        taylor_num = sum(
            (e[k] * _v**k * d0 ** (n - 1 - k) for k in range(n)), MultiPoly()
        )
        shifted = (num * d0**n - den * taylor_num).exact_div(_v**n)
        f = RatFunc(shifted, den * d0**n)
    _divdiff_cache[n] = f
    return f


def entry_divdiff(i: int, n: int, v) -> RatFunc:
    """[u^i] f_n(u, v) with the given value substituted for v.

    This is the last-column entry of the divided-difference form of the
    t-general Pfaffian when v = (t-1)/(rt).
    """
    if i < 0 or n < 0:
        raise IndexError("need i, n >= 0")
    f = divdiff_fun(n).subs(v=v)
    ser = series_of_ratfunc(f, i, 0)
    return ser.coeff(i, 0)
