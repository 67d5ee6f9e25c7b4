"""Pfaffians of triangular arrays, plus machine checks of their identities.

A triangular array (B_ij) for lo <= i < j <= hi determines a unique
skew-symmetric matrix; its Pfaffian is the matching sum

    Pf B = sum over perfect matchings {{i1,j1},...,{in,jn}}
           of sgn(i1 j1 ... in jn) * B_{i1,j1} ... B_{in,jn},

with Pf(empty) = 1.  Two evaluators are provided: the literal matching sum
(`pf_definition`, usable up to size 12) and an O(m^3) elimination
(`pf_eliminate`) which works over every coefficient ring in the package.
`check_identity` confirms the classical Pfaffian identities on random
instances; `leading_pfaffians` is the workhorse that computes the Pfaffians
of all leading principal subarrays of one big integer array in a single
fraction-free pass.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import gmpy2

from .errors import CheckReport, InternalIdentityError, ParityError
from .exact import (
    MultiPoly,
    RatFunc,
    Cyclo12,
    pvar,
    series_of_ratfunc,
    _is_zero,
)

# ---------------------------------------------------------------------------
# triangular arrays
# ---------------------------------------------------------------------------


class TriArray:
    """Entries B_ij for lo <= i < j <= hi, implicitly skew-completed.

    ``B[i, j]`` works for any i, j in range: the diagonal reads 0 and
    B[j, i] reads -B[i, j].  Entries not stored are 0, which keeps banded
    arrays cheap.
    """

    __slots__ = ("lo", "hi", "e")

    def __init__(self, lo: int, hi: int, entries=None):
        self.lo, self.hi = lo, hi
        self.e = {}
        if entries:
            for (i, j), val in entries.items():
                if not (lo <= i < j <= hi):
                    raise IndexError(f"entry ({i},{j}) outside lo={lo}..hi={hi}")
                if not _is_zero(val):
                    self.e[(i, j)] = val

    @classmethod
    def from_func(cls, lo: int, hi: int, f) -> "TriArray":
        return cls(lo, hi, {(i, j): f(i, j) for i in range(lo, hi + 1) for j in range(i + 1, hi + 1)})

    @classmethod
    def from_matrix(cls, lo: int, M) -> "TriArray":
        """Upper triangle of a full (skew-symmetric) matrix."""
        m = len(M)
        return cls(lo, lo + m - 1, {(lo + i, lo + j): M[i][j] for i in range(m) for j in range(i + 1, m)})

    @property
    def size(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __getitem__(self, ij):
        i, j = ij
        if not (self.lo <= i <= self.hi and self.lo <= j <= self.hi):
            raise IndexError(f"({i},{j}) outside lo={self.lo}..hi={self.hi}")
        if i == j:
            return 0
        if i < j:
            return self.e.get((i, j), 0)
        v = self.e.get((j, i), 0)
        return -v if not _is_zero(v) else 0

    def matrix(self) -> list:
        """The full skew-symmetric completion as a list of lists."""
        m = self.size
        M = [[0] * m for _ in range(m)]
        for (i, j), v in self.e.items():
            M[i - self.lo][j - self.lo] = v
            M[j - self.lo][i - self.lo] = -v
        return M

    def restrict(self, keep) -> "TriArray":
        """The subarray on a sorted subset of indices, reindexed from 0."""
        keep = sorted(keep)
        e = {}
        for a, i in enumerate(keep):
            for b in range(a + 1, len(keep)):
                v = self[i, keep[b]]
                if not _is_zero(v):
                    e[(a, b)] = v
        return TriArray(0, len(keep) - 1, e)


# ---------------------------------------------------------------------------
# the matching-sum definition
# ---------------------------------------------------------------------------


def _perm_sign(seq) -> int:
    """Sign of a permutation given in one-line notation (of distinct ints)."""
    seen = [False] * len(seq)
    rank = {v: k for k, v in enumerate(sorted(seq))}
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = rank[seq[k]]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _matchings(items):
    """All perfect matchings as lists of (i, j) pairs with i < j."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for sub in _matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, partner)] + sub


def pf_definition(arr: TriArray):
    """The Pfaffian straight from the matching-sum definition.

    Practical only up to size 12 ((2n-1)!! terms); this is the oracle the
    elimination evaluator is tested against.
    """
    m = arr.size
    if m == 0:
        return 1
    if m % 2:
        raise ParityError(f"Pfaffian of odd-sized array (size {m})")
    if m > 12:
        raise ValueError("pf_definition is a small-size oracle (size <= 12)")
    idx = list(arr.indices())
    total = None
    for pairs in _matchings(idx):
        flat = [x for pair in pairs for x in pair]
        term = _perm_sign(flat)
        for i, j in pairs:
            term = term * arr[i, j]
        total = term if total is None else total + term
    return 0 if total is None else total


def pf_expand_row(arr: TriArray):
    """Pfaffian via repeated expansion along the first row."""
    idx = tuple(arr.indices())
    if len(idx) % 2:
        raise ParityError(f"Pfaffian of odd-sized array (size {len(idx)})")
    memo = {}

    def rec(sub):
        if not sub:
            return 1
        if sub in memo:
            return memo[sub]
        i0 = sub[0]
        total = None
        for pos in range(1, len(sub)):
            b = arr[i0, sub[pos]]
            if _is_zero(b):
                continue
            rest = sub[1:pos] + sub[pos + 1 :]
            term = b * rec(rest)
            if pos % 2 == 0:
                term = -term
            total = term if total is None else total + term
        total = 0 if total is None else total
        memo[sub] = total
        return total

    return rec(idx)


def pf_expand_col(arr: TriArray):
    """Pfaffian via repeated expansion along the last column."""
    idx = tuple(arr.indices())
    if len(idx) % 2:
        raise ParityError(f"Pfaffian of odd-sized array (size {len(idx)})")
    memo = {}

    def rec(sub):
        if not sub:
            return 1
        if sub in memo:
            return memo[sub]
        jl = sub[-1]
        total = None
        for pos in range(len(sub) - 1):
            b = arr[sub[pos], jl]
            if _is_zero(b):
                continue
            rest = sub[:pos] + sub[pos + 1 : -1]
            term = b * rec(rest)
            if pos % 2 == 1:
                term = -term
            total = term if total is None else total + term
        total = 0 if total is None else total
        memo[sub] = total
        return total

    return rec(idx)


# ---------------------------------------------------------------------------
# elimination evaluators
# ---------------------------------------------------------------------------


def _entry_kind(values) -> str:
    """Pick an elimination strategy from the entry types present."""
    kind = "int"
    for v in values:
        if isinstance(v, (RatFunc, Cyclo12)):
            return "field"
        if isinstance(v, MultiPoly):
            kind = "poly"
        elif isinstance(v, Fraction) and kind == "int":
            kind = "frac"
    return kind


def pf_eliminate(arr: TriArray):
    """The Pfaffian by skew elimination, O(m^3) ring operations.

    Over fields (Fraction, RatFunc, Cyclo12) this is division-based with
    partial pivoting and sign tracking; over Integer/MultiPoly entries it
    runs fraction-free (every division is exact, by the previous pivot),
    which avoids rational-function growth entirely.
    """
    m = arr.size
    if m == 0:
        return 1
    if m % 2:
        raise ParityError(f"Pfaffian of odd-sized array (size {m})")
    kind = _entry_kind(arr.e.values())
    A = arr.matrix()
    if kind in ("field", "frac"):
        return _pf_field(A, m)
    if kind == "poly":
        A = [[MultiPoly._coerce(x) for x in row] for row in A]
        return _pf_fraction_free(A, m, lambda a, b: a.exact_div(b))
    return _pf_fraction_free(A, m, _int_divexact)


def _int_divexact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InternalIdentityError("inexact integer division in fraction-free elimination")
    return q


def _find_pivot(A, m, t):
    """First j > t with A[t][j] nonzero, or None if the row is dead."""
    for j in range(t + 1, m):
        if not _is_zero(A[t][j]):
            return j
    return None


def _swap(A, m, a, b):
    A[a], A[b] = A[b], A[a]
    for i in range(m):
        A[i][a], A[i][b] = A[i][b], A[i][a]


def _pf_field(A, m):
    sign = 1
    result = None
    for t in range(0, m, 2):
        j = _find_pivot(A, m, t)
        if j is None:
            return 0
        if j != t + 1:
            _swap(A, m, t + 1, j)
            sign = -sign
        p = A[t][t + 1]
        result = p if result is None else result * p
        inv = 1 / p
        rowt, rowt1 = A[t], A[t + 1]
        for i in range(t + 2, m):
            ci, di = rowt[i], rowt1[i]
            if _is_zero(ci) and _is_zero(di):
                continue
            rowi = A[i]
            for j2 in range(t + 2, m):
                rowi[j2] = rowi[j2] - (ci * rowt1[j2] - rowt[j2] * di) * inv
    return result if sign == 1 else -result


def _pf_fraction_free(A, m, divexact):
    """Pfaffian condensation: entries stay in the base ring throughout.

    After step t (t even), A[i][j] holds the Pfaffian of the subarray on
    indices {0..t+1, i, j}; the pivot A[t][t+1] is the leading principal
    Pfaffian of size t+2, and each update divides exactly by the previous
    pivot.
    """
    sign = 1
    prev = None
    for t in range(0, m, 2):
        j = _find_pivot(A, m, t)
        if j is None:
            return 0
        if j != t + 1:
            _swap(A, m, t + 1, j)
            sign = -sign
        p = A[t][t + 1]
        if t + 2 < m:
            rowt, rowt1 = A[t], A[t + 1]
            for i in range(t + 2, m):
                ci, di = rowt[i], rowt1[i]
                rowi = A[i]
                for j2 in range(i + 1, m):
                    num = p * rowi[j2] - ci * rowt1[j2] + rowt[j2] * di
                    rowi[j2] = num if prev is None else divexact(num, prev)
            # mirror so later swaps and pivot searches see a consistent matrix
            for i in range(t + 2, m):
                for j2 in range(i + 1, m):
                    A[j2][i] = -A[i][j2]
        prev = p
    return prev if sign == 1 else -prev


def leading_pfaffians(entry, lo: int, hi: int):
    """Pfaffians of all leading principal subarrays [lo, lo+1], [lo, lo+3], ...

    One fraction-free condensation over gmpy2 integers yields every even
    leading Pfaffian of the array at once: the t-th pivot *is* the leading
    Pfaffian of size 2t+2.  Requires those leading Pfaffians to be nonzero
    (true for the counting arrays here, whose leading Pfaffians are counts
    of nonempty sets); a zero raises InternalIdentityError.

    ``entry(i, j)`` must return an int for lo <= i < j <= hi.  Returns the
    list [Pf(size 2), Pf(size 4), ...].
    """
    m = hi - lo + 1
    mpz = gmpy2.mpz
    A = [None] * m
    for i in range(m):
        A[i] = [None] * (i + 1) + [mpz(entry(lo + i, lo + j)) for j in range(i + 1, m)]
    out = []
    prev = mpz(1)
    for t in range(0, m - 1, 2):
        p = A[t][t + 1]
        if p == 0:
            raise InternalIdentityError(
                f"zero leading Pfaffian at size {t + 2}; nested condensation needs nonzero pivots"
            )
        out.append(int(p))
        rowt, rowt1 = A[t], A[t + 1]
        for i in range(t + 2, m):
            ci, di = rowt[i], rowt1[i]
            rowi = A[i]
            for j in range(i + 1, m):
                rowi[j] = gmpy2.divexact(p * rowi[j] - ci * rowt1[j] + rowt[j] * di, prev)
        A[t] = A[t + 1] = None  # free finished rows early
        prev = p
    return out


# ---------------------------------------------------------------------------
# determinants and linear solves (companions to the congruence identity)
# ---------------------------------------------------------------------------


def det(M):
    """Determinant over any supported exact ring (auto strategy)."""
    m = len(M)
    if m == 0:
        return 1
    vals = [x for row in M for x in row]
    kind = _entry_kind(vals)
    A = [list(row) for row in M]
    if kind in ("field", "frac"):
        return _det_field(A, m)
    if kind == "poly":
        A = [[MultiPoly._coerce(x) for x in row] for row in A]
        return _det_bareiss(A, m, lambda a, b: a.exact_div(b))
    return _det_bareiss(A, m, _int_divexact)


def _det_field(A, m):
    sign = 1
    result = None
    for c in range(m):
        piv = next((r for r in range(c, m) if not _is_zero(A[r][c])), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        p = A[c][c]
        result = p if result is None else result * p
        inv = 1 / p
        for r in range(c + 1, m):
            f = A[r][c]
            if _is_zero(f):
                continue
            f = f * inv
            for c2 in range(c, m):
                A[r][c2] = A[r][c2] - f * A[c][c2]
    return result if sign == 1 else -result


def _det_bareiss(A, m, divexact):
    sign = 1
    prev = None
    for c in range(m):
        piv = next((r for r in range(c, m) if not _is_zero(A[r][c])), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        p = A[c][c]
        for r in range(c + 1, m):
            for c2 in range(c + 1, m):
                num = p * A[r][c2] - A[r][c] * A[c][c2]
                A[r][c2] = num if prev is None else divexact(num, prev)
            A[r][c] = 0
        prev = p
    return prev if sign == 1 else -prev


def solve_field(M, rhs):
    """Solve M x = rhs over a field by Gauss-Jordan; raises if singular."""
    m = len(M)
    A = [list(row) + [rhs[r]] for r, row in enumerate(M)]
    for c in range(m):
        piv = next((r for r in range(c, m) if not _is_zero(A[r][c])), None)
        if piv is None:
            raise ValueError("singular system")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(m):
            if r != c and not _is_zero(A[r][c]):
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[r][m] for r in range(m)]


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------

IDENTITY_IDS = (
    "interchange",
    "scaling",
    "row_expansion",
    "col_expansion",
    "congruence",
    "det_square",
    "first_row_to_last_col",
    "div_id",
    "tridiag",
    "homog_base",
    "homog_transform",
    "shift",
)


def _rand_frac(rng) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_small_poly(rng) -> MultiPoly:
    from .exact import NVARS, VAR_INDEX

    terms = {}
    for _ in range(rng.randint(1, 3)):
        e = [0] * NVARS
        e[VAR_INDEX["r"]] = rng.randint(0, 2)
        e[VAR_INDEX["s"]] = rng.randint(0, 1)
        terms[tuple(e)] = terms.get(tuple(e), 0) + rng.randint(-4, 4)
    p = MultiPoly(terms)
    return p if not p.is_zero else MultiPoly.const(rng.randint(1, 4))


def _value_factory(domain: str):
    if domain == "rational":
        return _rand_frac
    if domain == "poly":
        return _rand_small_poly
    raise ValueError(f"unknown coefficient domain {domain!r}")


def _random_tri(rng, rand, lo, hi) -> TriArray:
    return TriArray.from_func(lo, hi, lambda i, j: rand(rng))


def _uv_poly(rng, rand, dmax=3) -> MultiPoly:
    """A random polynomial in u (and coefficients from the domain)."""
    u = pvar("u")
    p = MultiPoly()
    for k in range(dmax + 1):
        if rng.random() < 0.7:
            p = p + rand(rng) * u**k
    return p if not p.is_zero else MultiPoly.const(1)


def _antisym_poly(rng, rand, dmax=3) -> MultiPoly:
    """f(u,v) - f(v,u) for a random bivariate polynomial f."""
    u, v = pvar("u"), pvar("v")
    g = MultiPoly()
    for a in range(dmax + 1):
        for b in range(dmax + 1):
            if rng.random() < 0.4:
                g = g + rand(rng) * u**a * v**b
    return g - g.subs(u=v, v=u)


def _pcoeff_uv(f: MultiPoly, i: int, j: int) -> MultiPoly:
    return f.coeff_of("u", i).coeff_of("v", j)


def _chk_interchange(rng, rand):
    m = rng.choice([2, 4, 6, 8])
    tri = _random_tri(rng, rand, 1, m)
    i, j = sorted(rng.sample(range(m), 2))
    M = tri.matrix()
    M[i], M[j] = M[j], M[i]
    for row in M:
        row[i], row[j] = row[j], row[i]
    lhs = pf_eliminate(TriArray.from_matrix(1, M))
    rhs = -pf_eliminate(tri)
    return lhs == rhs, f"size {m}, swap positions {i},{j}"


def _chk_scaling(rng, rand):
    m = rng.choice([2, 4, 6])
    tri = _random_tri(rng, rand, 1, m)
    cs = {i: rand(rng) for i in tri.indices()}
    scaled = TriArray.from_func(1, m, lambda i, j: cs[i] * cs[j] * tri[i, j])
    prod = 1
    for c in cs.values():
        prod = prod * c
    return pf_eliminate(scaled) == prod * pf_eliminate(tri), f"size {m}"


def _chk_row_expansion(rng, rand):
    m = rng.choice([4, 6, 8])
    tri = _random_tri(rng, rand, 1, m)
    idx = list(tri.indices())
    total = None
    for k in range(2, m + 1):
        rest = [x for x in idx if x not in (1, k)]
        term = tri[1, k] * pf_eliminate(tri.restrict(rest))
        if k % 2:
            term = -term
        total = term if total is None else total + term
    return total == pf_eliminate(tri), f"size {m}"


def _chk_col_expansion(rng, rand):
    m = rng.choice([4, 6, 8])
    tri = _random_tri(rng, rand, 1, m)
    idx = list(tri.indices())
    total = None
    for k in range(1, m):
        rest = [x for x in idx if x not in (k, m)]
        term = tri[k, m] * pf_eliminate(tri.restrict(rest))
        if k % 2 == 0:
            term = -term
        total = term if total is None else total + term
    return total == pf_eliminate(tri), f"size {m}"


def _chk_congruence(rng, rand):
    m = rng.choice([2, 4, 6])
    tri = _random_tri(rng, rand, 1, m)
    Y = [[rand(rng) for _ in range(m)] for _ in range(m)]
    A = tri.matrix()
    YtA = [[sum_ring(Y[k][i] * A[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    YtAY = [[sum_ring(YtA[i][k] * Y[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    lhs = pf_eliminate(TriArray.from_matrix(1, YtAY))
    rhs = det(Y) * pf_eliminate(tri)
    return lhs == rhs, f"size {m}"


def _chk_det_square(rng, rand):
    m = rng.choice([2, 4, 6])
    tri = _random_tri(rng, rand, 1, m)
    p = pf_eliminate(tri)
    return det(tri.matrix()) == p * p, f"size {m}"


def _chk_first_row_to_last_col(rng, rand):
    n = rng.choice([1, 3, 5, 7])
    a = _random_tri(rng, rand, 1, n)
    b = {j: rand(rng) for j in range(1, n + 1)}
    lhs = TriArray.from_func(0, n, lambda i, j: b[j] if i == 0 else a[i, j])
    rhs = TriArray.from_func(1, n + 1, lambda i, j: b[i] if j == n + 1 else a[i, j])
    return pf_eliminate(lhs) == pf_eliminate(rhs), f"n={n}"


def _chk_div_id(rng, rand):
    n = rng.choice([2, 3, 4, 5, 6])
    K = n + 3
    a = _random_tri(rng, rand, 0, K)
    v = _rand_frac(rng)

    def vsum(i, shift):
        acc = None
        for k in range(K + 1):
            if k + shift > K:
                break
            term = a[i, k + shift] * v**k
            acc = term if acc is None else acc + term
        return 0 if acc is None else acc

    o = n & 1
    lhs = pf_eliminate(
        TriArray.from_func(o, n - 1, lambda i, j: vsum(i, 0) if j == n - 1 else a[i, j])
    )
    rhs = v ** (n - 1) * pf_eliminate(
        TriArray.from_func(o, n - 1, lambda i, j: vsum(i, n - 1) if j == n - 1 else a[i, j])
    )
    if o:
        rhs = rhs - pf_eliminate(TriArray.from_func(0, n - 2, lambda i, j: a[i, j]))
    return lhs == rhs, f"n={n}"


def _chk_tridiag(rng, rand):
    n = rng.randint(1, 12)
    o = n & 1
    a = {i: rand(rng) for i in range(o, n - 1)}
    b = {i: rand(rng) for i in range(o, n - 2)}
    banded = TriArray.from_func(
        o, n - 1, lambda i, j: a[i] if j == i + 1 else (b[i] if j == i + 2 else 0)
    )
    lhs = pf_eliminate(banded)
    half = n // 2
    D = [[0] * half for _ in range(half)]
    for i in range(1, half + 1):
        for j in range(1, half + 1):
            if o:
                val = (
                    (a[2 * i - 1] if i == j else 0)
                    + (b[2 * i - 1] if j == i + 1 else 0)
                    + (b[2 * i - 2] if i == j + 1 else 0)
                )
            else:
                val = (
                    (a[2 * i - 2] if i == j else 0)
                    + (b[2 * i - 2] if j == i + 1 else 0)
                    + (b[2 * i - 3] if i == j + 1 else 0)
                )
            D[i - 1][j - 1] = val
    return lhs == det(D), f"n={n}"


def _chk_homog_base(rng, rand):
    two_n = 4
    m = rng.randint(0, 3)
    xs = [pvar(name) for name in ("z", "w", "p")][:m]
    f = _antisym_poly(rng, rand)
    gs = {j: _uv_poly(rng, rand) for j in range(m + 1, two_n + 1)}
    a = _random_tri(rng, rand, 1, two_n)

    def lhs_entry(i, j):
        if j <= m:
            return f.subs(u=xs[i - 1], v=xs[j - 1])
        if i <= m:
            return gs[j].subs(u=xs[i - 1])
        return MultiPoly._coerce(a[i, j])

    N = pf_eliminate(TriArray.from_func(1, two_n, lhs_entry))
    N = MultiPoly._coerce(N)
    for i, j in combinations(range(m), 2):
        N = N.exact_div(xs[j] - xs[i])
    lhs = N.subs(**{name: 0 for name in ("z", "w", "p")[:m]})

    def rhs_entry(i, j):
        if j <= m:
            return _pcoeff_uv(f, i - 1, j - 1)
        if i <= m:
            return gs[j].coeff_of("u", i - 1)
        return a[i, j]

    rhs = pf_eliminate(TriArray.from_func(1, two_n, rhs_entry))
    return lhs == rhs, f"m={m}"


def _chk_homog_transform(rng, rand):
    two_n = 4
    m = rng.randint(0, 4)
    f = _antisym_poly(rng, rand)
    gs = {j: _uv_poly(rng, rand) for j in range(m + 1, two_n + 1)}
    a = _random_tri(rng, rand, 1, two_n)
    u, v = pvar("u"), pvar("v")
    h = _uv_poly(rng, rand, dmax=2)
    k = _uv_poly(rng, rand, dmax=2)
    # keep the constant terms rational so the prefactor is easy to state
    h = h - h.coeff_of("u", 0) + _rand_frac(rng)
    k = k - k.coeff_of("u", 0) + _rand_frac(rng)
    h0 = h.coeff_of("u", 0).constant_value()
    k0 = k.coeff_of("u", 0).constant_value()
    hv, kv = h.subs(u=v), k.subs(u=v)
    fhk = k * kv * f.subs(u=h * u, v=hv * v)
    gk = {j: k * gs[j].subs(u=h * u) for j in gs}

    def lhs_entry(i, j):
        if j <= m:
            return _pcoeff_uv(fhk, i - 1, j - 1)
        if i <= m:
            return gk[j].coeff_of("u", i - 1)
        return a[i, j]

    lhs = pf_eliminate(TriArray.from_func(1, two_n, lhs_entry))

    def plain_entry(i, j):
        if j <= m:
            return _pcoeff_uv(f, i - 1, j - 1)
        if i <= m:
            return gs[j].coeff_of("u", i - 1)
        return a[i, j]

    pref = k0**m * h0 ** (m * (m - 1) // 2)
    rhs = pref * pf_eliminate(TriArray.from_func(1, two_n, plain_entry))
    return lhs == rhs, f"m={m}"


def _chk_shift(rng, rand):
    n = rng.randint(1, 6)
    o = n & 1
    f = _antisym_poly(rng, rand, dmax=n + 1)
    u, v = pvar("u"), pvar("v")
    lhs = pf_eliminate(TriArray.from_func(o, n - 1, lambda i, j: _pcoeff_uv(f, i, j)))
    ser = series_of_ratfunc(f / ((1 + u) * (1 + v)), n, n)

    def rhs_entry(i, j):
        if j <= n - 1:
            return ser.coeff(i, j)
        return -1 if i % 2 else 1

    rhs = pf_eliminate(TriArray.from_func(0, n - (1 - o), rhs_entry))
    return lhs == rhs, f"n={n}"


def sum_ring(items):
    """Sum that works for arbitrary ring elements (no int 0 start needed)."""
    total = None
    for x in items:
        total = x if total is None else total + x
    return 0 if total is None else total


_CHECKERS = {
    "interchange": _chk_interchange,
    "scaling": _chk_scaling,
    "row_expansion": _chk_row_expansion,
    "col_expansion": _chk_col_expansion,
    "congruence": _chk_congruence,
    "det_square": _chk_det_square,
    "first_row_to_last_col": _chk_first_row_to_last_col,
    "div_id": _chk_div_id,
    "tridiag": _chk_tridiag,
    "homog_base": _chk_homog_base,
    "homog_transform": _chk_homog_transform,
    "shift": _chk_shift,
}


def check_identity(identity: str, seed: int = 0, domain: str = "rational") -> CheckReport:
    """Check one Pfaffian identity on a pseudo-random instance.

    ``identity`` is one of IDENTITY_IDS; ``domain`` selects rational or
    small-polynomial entries.  Failure is reported, not raised.
    """
    if identity not in _CHECKERS:
        raise KeyError(f"unknown identity {identity!r}; choose from {IDENTITY_IDS}")
    rng = random.Random((identity, seed, domain).__repr__())
    ok, detail = _CHECKERS[identity](rng, _value_factory(domain))
    return CheckReport(name=f"pfaffian:{identity}", ok=ok, detail=f"seed={seed} {domain} {detail}")
