"""Exact arithmetic building blocks.

Everything downstream (Pfaffians, generating functions, the six-vertex
partition function) is computed exactly.  Plain Python ``int`` and
``fractions.Fraction`` serve as the integers and rationals; this module adds
the polynomial-flavoured rings on top of them:

* :class:`MultiPoly` -- sparse multivariate polynomials over Q in a fixed
  ten-letter alphabet,
* :class:`RatFunc` -- quotients of those, compared by cross-multiplication,
* :class:`BiSeries` -- power series in u and v truncated at fixed orders,
  with coefficients in any of the rings above (duck-typed),
* :class:`LaurentPoly` -- univariate Laurent polynomials over a field,
* :class:`Cyclo12` -- the field Q(zeta_12) = Q[x]/(x^4 - x^2 + 1), which
  hosts the crossing parameter q = zeta_12 with q^2 + q^-2 = 1.

All containers are immutable in spirit: no method mutates ``self``.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Union

from .errors import DivisionError, NotASeriesError, TruncationError

# ---------------------------------------------------------------------------
# rationals and binomials
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction]


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 unless 0 <= k <= n.

    The zero-outside convention also applies to negative n, which differs
    from the usual extension of C(n, k) to negative arguments.  Every sum
    in this package relies on this convention to self-truncate.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def odd(n: int) -> int:
    """1 if n is odd, else 0."""
    return n & 1


def even(n: int) -> int:
    """1 if n is even, else 0."""
    return 1 - (n & 1)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

#: The fixed variable alphabet.  sp and sm are the s_plus / s_minus weights
#: attached to the two kinds of left-boundary vertex; the rest match their
#: usual statistic or spectral-parameter names.
VARS = ("r", "s", "t", "p", "sp", "sm", "u", "v", "z", "w")
NVARS = len(VARS)
VAR_INDEX = {name: k for k, name in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected a rational scalar, got {type(c).__name__}")


class MultiPoly:
    """A sparse polynomial over Q in the variables of :data:`VARS`.

    Internally a dict from exponent tuples (length ``NVARS``) to nonzero
    Fractions.  Construct with :meth:`const` / :meth:`var`, or via the
    ``pvar`` shorthand, and combine with ordinary operators; dividing two
    polynomials yields a :class:`RatFunc`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for exp, coef in terms.items():
                coef = _as_fraction(coef)
                if coef:
                    t[exp] = coef
        self.terms = t

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _as_fraction(c)
        return cls({_ZERO_EXP: c} if c else None)

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        if name not in VAR_INDEX:
            raise KeyError(f"unknown variable {name!r} (alphabet: {VARS})")
        if power < 0:
            raise ValueError("negative powers live in RatFunc, not MultiPoly")
        exp = [0] * NVARS
        exp[VAR_INDEX[name]] = power
        return cls({tuple(exp): Fraction(1)})

    @staticmethod
    def _coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiPoly.const(x)
        raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")

    # -- predicates and views ---------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if not constant)."""
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def degree(self, name: str) -> int:
        """Largest exponent of one variable (-1 for the zero polynomial)."""
        k = VAR_INDEX[name]
        return max((e[k] for e in self.terms), default=-1)

    def variables(self) -> set:
        return {VARS[k] for e in self.terms for k in range(NVARS) if e[k]}

    def coeff_of(self, name: str, power: int) -> "MultiPoly":
        """The coefficient of name**power, as a polynomial in the rest."""
        k = VAR_INDEX[name]
        out = {}
        for e, c in self.terms.items():
            if e[k] == power:
                e2 = list(e)
                e2[k] = 0
                out[tuple(e2)] = c
        return MultiPoly(out)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        try:
            other = MultiPoly._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MultiPoly.__new__(MultiPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MultiPoly.__new__(MultiPoly)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        try:
            other = MultiPoly._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly()
            p = MultiPoly.__new__(MultiPoly)
            p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(operator.add, e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = MultiPoly.__new__(MultiPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power: use RatFunc")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, MultiPoly):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(MultiPoly.const(other), self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- substitution ------------------------------------------------------

    def subs(self, **values) -> "MultiPoly":
        """Substitute polynomials/rationals for some variables.

        Values must be int, Fraction or MultiPoly; the result stays a
        MultiPoly.  For substitution into other rings use :meth:`evaluate`.
        """
        for name in values:
            if name not in VAR_INDEX:
                raise KeyError(f"unknown variable {name!r}")
        result = MultiPoly()
        for e, c in self.terms.items():
            term = MultiPoly.const(c)
            residual = list(e)
            for name, val in values.items():
                k = VAR_INDEX[name]
                if e[k]:
                    term = term * MultiPoly._coerce(val) ** e[k]
                    residual[k] = 0
            term = term * MultiPoly({tuple(residual): Fraction(1)})
            result = result + term
        return result

    def evaluate(self, **values):
        """Fully evaluate, with values in an arbitrary commutative ring.

        Every variable that occurs must be assigned.  Returns a ring
        element (Fraction if all values are rational).
        """
        missing = self.variables() - set(values)
        if missing:
            raise KeyError(f"no value for variable(s) {sorted(missing)}")
        total = None
        for e, c in self.terms.items():
            term = c
            for k in range(NVARS):
                if e[k]:
                    term = term * values[VARS[k]] ** e[k]
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    # -- exact division ----------------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient self / divisor, raising DivisionError unless exact.

        Long division by lexicographically leading terms; for an exact
        quotient this terminates with remainder zero regardless of the
        tie-break order.
        """
        divisor = MultiPoly._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_constant:
            return self * (Fraction(1) / divisor.constant_value())
        rem = dict(self.terms)
        lead_d = max(divisor.terms)
        cd = divisor.terms[lead_d]
        quot = {}
        while rem:
            lead_r = max(rem)
            qe = tuple(map(operator.sub, lead_r, lead_d))
            if min(qe) < 0:
                raise DivisionError(
                    f"inexact polynomial division (stuck at {MultiPoly({lead_r: rem[lead_r]})})"
                )
            qc = rem[lead_r] / cd
            quot[qe] = quot.get(qe, Fraction(0)) + qc
            for e, c in divisor.terms.items():
                e2 = tuple(map(operator.add, qe, e))
                s = rem.get(e2, 0) - qc * c
                if s:
                    rem[e2] = s
                else:
                    rem.pop(e2, None)
        return MultiPoly({e: c for e, c in quot.items() if c})

    # -- printing ----------------------------------------------------------

    def text(self) -> str:
        """Canonical text form: terms in ascending lexicographic order.

        Example: ``s^3*t + r*s*t + r*s*t^2 + r*s*t^3 + r^2*s*t^2``.
        """
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = [
                VARS[k] if e[k] == 1 else f"{VARS[k]}^{e[k]}"
                for k in range(NVARS)
                if e[k]
            ]
            mag = abs(c)
            if mag != 1 or not mono:
                mono.insert(0, str(mag))
            pieces.append((c < 0, "*".join(mono)))
        first_neg, first = pieces[0]
        out = ("-" if first_neg else "") + first
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __str__ = text

    def __repr__(self):
        return f"MultiPoly({self.text()})"


def pvar(name: str) -> MultiPoly:
    """Shorthand for MultiPoly.var."""
    return MultiPoly.var(name)


def pconst(c) -> MultiPoly:
    """Shorthand for MultiPoly.const."""
    return MultiPoly.const(c)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """A quotient of two MultiPolys.

    No multivariate gcd is attempted; only monomial and rational content
    common to numerator and denominator is cancelled.  Equality is decided
    by cross-multiplication, which is exact and gcd-free.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = MultiPoly._coerce(num)
        den = MultiPoly._coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _cancel_content(num, den)

    @staticmethod
    def _coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return RatFunc(MultiPoly._coerce(x))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def as_poly(self) -> MultiPoly:
        """Exact conversion back to MultiPoly (raises if denominator remains)."""
        return self.num.exact_div(self.den)

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other):
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        # hashing consistent with == would need canonical forms; forbid it
        raise TypeError("RatFunc is unhashable (equality is by cross-multiplication)")

    def subs(self, **values) -> "RatFunc":
        if any(isinstance(v, RatFunc) for v in values.values()):
            # substitute through ring evaluation, keeping the remaining
            # variables symbolic
            def ev(poly):
                vals = {name: MultiPoly.var(name) for name in poly.variables()}
                vals.update({k: v for k, v in values.items() if k in vals})
                return poly.evaluate(**vals) if poly.terms else MultiPoly()

            num, den = ev(self.num), ev(self.den)
            if _is_zero(den):
                raise ZeroDivisionError("denominator vanishes under substitution")
            out = num / den
            return out if isinstance(out, RatFunc) else RatFunc(out)
        return RatFunc(self.num.subs(**values), self.den.subs(**values))

    def evaluate(self, **values):
        d = self.den.evaluate(**values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.evaluate(**values) / d

    def __str__(self):
        if self.den == 1:
            return self.num.text()
        return f"({self.num.text()}) / ({self.den.text()})"

    def __repr__(self):
        return f"RatFunc({self})"


def _cancel_content(num: MultiPoly, den: MultiPoly):
    """Divide num and den by their common monomial and rational content."""
    if num.is_zero:
        return num, MultiPoly.const(1)
    exps = list(num.terms) + list(den.terms)
    common = tuple(min(e[k] for e in exps) for k in range(NVARS))
    if any(common):
        shift = lambda t: {tuple(map(operator.sub, e, common)): c for e, c in t.items()}
        num = MultiPoly(shift(num.terms))
        den = MultiPoly(shift(den.terms))
    coefs = list(num.terms.values()) + list(den.terms.values())
    g = Fraction(
        math.gcd(*(c.numerator for c in coefs)),
        math.lcm(*(c.denominator for c in coefs)),
    )
    # normalise the sign of the denominator's lexicographic leading term
    if den.terms[max(den.terms)] < 0:
        g = -g
    if g != 1:
        inv = Fraction(1) / g
        num, den = num * inv, den * inv
    return num, den


# ---------------------------------------------------------------------------
# truncated bivariate power series
# ---------------------------------------------------------------------------


class BiSeries:
    """A power series in u and v truncated at orders (du, dv) inclusive.

    Coefficients live in a commutative coefficient ring accessed purely
    through operators: Fractions for numeric kernels, MultiPolys in the
    statistic variables for refined kernels, RatFuncs when a denominator's
    constant term is itself a parameter polynomial.  Cells are addressed as
    ``c[i][j]`` = coefficient of u^i v^j; ``0`` (the int) is the generic
    zero.
    """

    __slots__ = ("du", "dv", "c")

    def __init__(self, du: int, dv: int, cells=None):
        self.du, self.dv = du, dv
        self.c = [[0] * (dv + 1) for _ in range(du + 1)]
        if cells:
            for (i, j), val in cells.items():
                if i <= du and j <= dv:
                    self.c[i][j] = val

    def coeff(self, i: int, j: int = 0):
        """The coefficient of u^i v^j."""
        if i < 0 or j < 0:
            return 0
        if i > self.du or j > self.dv:
            raise TruncationError(
                f"coefficient ({i},{j}) beyond truncation order ({self.du},{self.dv})"
            )
        return self.c[i][j]

    def _nonzero(self):
        for i in range(self.du + 1):
            row = self.c[i]
            for j in range(self.dv + 1):
                if not _is_zero(row[j]):
                    yield i, j, row[j]

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        du, dv = min(self.du, other.du), min(self.dv, other.dv)
        out = BiSeries(du, dv)
        for i in range(du + 1):
            for j in range(dv + 1):
                out.c[i][j] = self.c[i][j] + other.c[i][j]
        return out

    def __neg__(self):
        out = BiSeries(self.du, self.dv)
        for i in range(self.du + 1):
            for j in range(self.dv + 1):
                out.c[i][j] = -self.c[i][j]
        return out

    def __sub__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        du, dv = min(self.du, other.du), min(self.dv, other.dv)
        out = BiSeries(du, dv)
        # iterate the sparser operand's nonzero cells
        a, b = self, other
        if sum(1 for _ in a._nonzero()) > sum(1 for _ in b._nonzero()):
            a, b = b, a
        for i, j, val in a._nonzero():
            for k in range(min(du - i, b.du) + 1):
                brow = b.c[k]
                for l in range(min(dv - j, b.dv) + 1):
                    bv = brow[l]
                    if not _is_zero(bv):
                        out.c[i + k][j + l] = out.c[i + k][j + l] + val * bv
        return out

    def inverse(self) -> "BiSeries":
        """Multiplicative inverse; the constant cell must be invertible."""
        c00 = self.c[0][0]
        if _is_zero(c00):
            raise NotASeriesError("constant term is zero; no series inverse")
        inv00 = _ring_inverse(c00)
        du, dv = self.du, self.dv
        g = BiSeries(du, dv)
        g.c[0][0] = inv00
        lower = [(i, j, v) for i, j, v in self._nonzero() if (i, j) != (0, 0)]
        for i in range(du + 1):
            for j in range(dv + 1):
                if i == 0 and j == 0:
                    continue
                acc = 0
                for k, l, dv_ in lower:
                    if k <= i and l <= j:
                        acc = acc + dv_ * g.c[i - k][j - l]
                g.c[i][j] = -(inv00 * acc)
        return g


def _is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    if isinstance(x, Fraction):
        return not x
    return not bool(x)


def _ring_inverse(x):
    """1/x in the coefficient ring; a MultiPoly only if it is a constant."""
    if isinstance(x, int):
        return Fraction(1, x)
    if isinstance(x, Fraction):
        return Fraction(1) / x
    if isinstance(x, MultiPoly):
        if x.is_constant:
            return Fraction(1) / x.constant_value()
        return RatFunc(MultiPoly.const(1), x)
    return 1 / x  # fields (RatFunc, Cyclo12) handle this themselves


def _split_uv(poly: MultiPoly, du: int, dv: int) -> BiSeries:
    """View a MultiPoly as a BiSeries in u, v with parameter coefficients.

    Terms of u- or v-degree beyond the truncation are dropped, consistent
    with arithmetic in the truncated ring.
    """
    iu, iv = VAR_INDEX["u"], VAR_INDEX["v"]
    out = BiSeries(du, dv)
    for e, c in poly.terms.items():
        i, j = e[iu], e[iv]
        if i > du or j > dv:
            continue
        e2 = list(e)
        e2[iu] = e2[iv] = 0
        mono = MultiPoly({tuple(e2): c})
        out.c[i][j] = out.c[i][j] + mono
    # collapse cells that are plain rationals
    for i in range(du + 1):
        for j in range(dv + 1):
            cell = out.c[i][j]
            if isinstance(cell, MultiPoly) and cell.is_constant:
                out.c[i][j] = cell.constant_value()
    return out


def series_of_ratfunc(f, du: int, dv: int = 0) -> BiSeries:
    """Expand a rational function as a power series in u and v.

    ``f`` may be a MultiPoly or RatFunc over the full alphabet; u and v are
    the series variables, everything else ends up in the coefficients.  If
    the denominator's (u,v)-constant cell is a nonconstant parameter
    polynomial, all coefficients are lifted to RatFunc so the inversion
    stays exact.
    """
    if isinstance(f, (int, Fraction)):
        f = MultiPoly.const(f)
    if isinstance(f, MultiPoly):
        return _split_uv(f, du, dv)
    if not isinstance(f, RatFunc):
        raise TypeError(f"cannot expand {type(f).__name__} as a series")
    num = _split_uv(f.num, du, dv)
    den = _split_uv(f.den, du, dv)
    c00 = den.c[0][0]
    if _is_zero(c00):
        raise NotASeriesError("denominator vanishes at u = v = 0")
    if isinstance(c00, MultiPoly) and not c00.is_constant:
        lift = lambda s: BiSeries(
            du, dv, {(i, j): RatFunc(x) for i, j, x in s._nonzero()}
        )
        num, den = lift(num), lift(den)
    return num * den.inverse()


def coeff(series: BiSeries, i: int, j: int = 0):
    """The u^i v^j coefficient of a truncated series (function form)."""
    return series.coeff(i, j)


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Named dispatch over the four polynomial ring operations."""
    a, b = MultiPoly._coerce(a), MultiPoly._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "exact_div":
        return a.exact_div(b)
    raise ValueError(f"unknown op {op!r} (add, sub, mul, exact_div)")


# ---------------------------------------------------------------------------
# Laurent polynomials over a field
# ---------------------------------------------------------------------------


class LaurentPoly:
    """A univariate Laurent polynomial with coefficients in a field.

    The coefficient field is whatever the supplied values are (Fraction,
    Cyclo12, ...); only +, -, *, / and zero-tests are used.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if not _is_zero(c):
                    self.coeffs[k] = c

    @classmethod
    def term(cls, c, k: int = 0) -> "LaurentPoly":
        return cls({k: c})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def bounds(self):
        """(lowest, highest) exponent; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("zero Laurent polynomial has no degree bounds")
        return min(self.coeffs), max(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs.get(k, 0)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if _is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if _is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return LaurentPoly(out)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self):
        raise TypeError("LaurentPoly is unhashable")

    def evaluate(self, x):
        total = None
        for k, c in self.coeffs.items():
            term = c * x**k if k >= 0 else c * (1 / x) ** (-k)
            total = term if total is None else total + term
        return 0 if total is None else total

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient (DivisionError if the remainder is nonzero)."""
        if divisor.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        rem = dict(self.coeffs)
        hi_d = max(divisor.coeffs)
        lead = divisor.coeffs[hi_d]
        quot = {}
        while rem:
            hi_r = max(rem)
            k = hi_r - hi_d
            qc = rem[hi_r] * _field_inv(lead)
            quot[k] = qc
            for kd, cd in divisor.coeffs.items():
                key = k + kd
                s = rem.get(key, 0) - qc * cd
                if _is_zero(s):
                    rem.pop(key, None)
                else:
                    rem[key] = s
            if rem and max(rem) >= hi_r:
                raise DivisionError("inexact Laurent division")
        return LaurentPoly(quot)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            parts.append(f"({self.coeffs[k]})*y^{k}" if k else f"({self.coeffs[k]})")
        return " + ".join(parts)

    __repr__ = __str__


def _field_inv(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1) / Fraction(x)
    return 1 / x


# ---------------------------------------------------------------------------
# the cyclotomic field Q(zeta_12)
# ---------------------------------------------------------------------------


def _poly_xgcd(a: list, b: list):
    """Extended gcd of two rational coefficient lists (univariate)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    t0, t1 = [Fraction(0)], [Fraction(1)]

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def sub_scaled(p, q, c, shift):
        out = list(p) + [Fraction(0)] * max(0, len(q) + shift - len(p))
        for i, qc in enumerate(q):
            out[i + shift] -= c * qc
        return trim(out)

    r0, r1 = trim(r0), trim(r1)
    while r1:
        q_acc = []
        # long division r0 = q*r1 + rem, applied to the Bezout rows too
        while len(r0) >= len(r1) and r0:
            shift = len(r0) - len(r1)
            c = r0[-1] / r1[-1]
            q_acc.append((c, shift))
            r0 = sub_scaled(r0, r1, c, shift)
        for c, shift in q_acc:
            s0 = sub_scaled(s0, s1, c, shift)
            t0 = sub_scaled(t0, t1, c, shift)
        r0, r1 = r1, r0
        s0, s1 = s1, s0
        t0, t1 = t1, t0
    return r0, s0, t0


class Cyclo12:
    """An element of Q[x]/(x^4 - x^2 + 1), i.e. the 12th cyclotomic field.

    The generator x is a primitive 12th root of unity; it plays the role of
    the crossing parameter q, for which q^2 + q^-2 = 1 and q^4 - q^2 = -1.
    Stored as four Fractions (coefficients of 1, x, x^2, x^3).
    """

    __slots__ = ("c",)

    #: reduction rules: x^4 = x^2 - 1, x^5 = x^3 - x, x^6 = -1
    _RED = {
        4: (Fraction(-1), Fraction(0), Fraction(1), Fraction(0)),
        5: (Fraction(0), Fraction(-1), Fraction(0), Fraction(1)),
        6: (Fraction(-1), Fraction(0), Fraction(0), Fraction(0)),
    }

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (
            _as_fraction(c0),
            _as_fraction(c1),
            _as_fraction(c2),
            _as_fraction(c3),
        )

    @classmethod
    def gen(cls) -> "Cyclo12":
        return cls(0, 1)

    @staticmethod
    def _coerce(x) -> "Cyclo12":
        if isinstance(x, Cyclo12):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclo12(x)
        raise TypeError(f"cannot treat {type(x).__name__} as a Cyclo12 element")

    @property
    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.c[0]

    def __add__(self, other):
        try:
            other = Cyclo12._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo12(*(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo12(*(-a for a in self.c))

    def __sub__(self, other):
        try:
            other = Cyclo12._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Cyclo12._coerce(other)
        except TypeError:
            return NotImplemented
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:4])
        for d in (4, 5, 6):
            if prod[d]:
                red = Cyclo12._RED[d]
                for k in range(4):
                    out[k] += prod[d] * red[k]
        return Cyclo12(*out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo12":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        modulus = [Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]
        g, _, t = _poly_xgcd(modulus, list(self.c))
        # g is a nonzero constant (the modulus is irreducible over Q)
        scale = Fraction(1) / g[0]
        t = [c * scale for c in t]
        acc = Cyclo12()
        xpow = Cyclo12(1)
        x = Cyclo12.gen()
        for c in t:
            acc = acc + Cyclo12(c) * xpow
            xpow = xpow * x
        return acc

    def __truediv__(self, other):
        try:
            other = Cyclo12._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = Cyclo12._coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo12(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = Cyclo12._coerce(other)
        except TypeError:
            return NotImplemented
        return self.c == other.c

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, a in enumerate(self.c):
            if a:
                if k == 0:
                    parts.append(str(a))
                elif k == 1:
                    parts.append(f"{a}*x" if a != 1 else "x")
                else:
                    parts.append(f"{a}*x^{k}" if a != 1 else f"x^{k}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Cyclo12({self})"


#: q = zeta_12, the crossing parameter for the combinatorial point.
ZETA12 = Cyclo12.gen()
