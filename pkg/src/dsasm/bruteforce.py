"""Exhaustive enumeration of alternating sign matrices with diagonal symmetry.

This module is the ground-truth oracle for the rest of the package: it
enumerates ASMs, DSASMs, OSASMs and DSPMs directly, computes every statistic
straight from its defining sum, realizes the correspondence with six-vertex
model configurations on the triangular grid, and implements the involutions
``star``, ``dagger`` and ``antidiag``.  Everything favours transparency over
speed; the enumeration guards keep run times sane.

Matrices are plain tuples of tuples of ints in {-1, 0, 1}, so they are
hashable and can be collected into sets.

Six-vertex conventions
----------------------
A configuration on the triangular grid has bulk vertices (i, j) for
1 <= i < j <= n, left boundary vertices (i, i), top vertices (0, j) and right
half-edge stubs at (i, n+1).  We store one bit per edge, equal to the partial
sum the edge carries under the correspondence with matrices:

* vertical edge between (i-1, j) and (i, j), key ``(i, j)`` with i <= j:
  value ``sum(A[k][j] for k < i)``; 0 means the edge points up, 1 down.
* horizontal edge between (i, j) and (i, j+1), key ``(i, j)`` with i <= j:
  value ``sum(A[i][k] for k <= j)``; 0 means it points right, 1 left.

The boundary conditions (top edges up, right stubs left) read
``vert[(1, j)] == 0`` and ``hor[(i, n)] == 1``.

Local configurations are named "v1" .. "v6" at bulk vertices and "l_up",
"l_down", "l_out", "l_in" at left boundary vertices.  A vertex of type v5
carries a matrix entry 1 and one of type v6 an entry -1; v1..v4 all carry 0
and are distinguished by their (column, row) partial sums: v1 = (0, 0),
v2 = (1, 1), v3 = (0, 1), v4 = (1, 0).  On the left boundary, l_up / l_down
carry a diagonal entry 1 / -1, while l_out (both edges out) and l_in (both
edges in) carry 0.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BijectionError, ResourceLimit
from .exact import MultiPoly, VARS

DSASM_GUARD = 11
ASM_GUARD = 7


# ---------------------------------------------------------------------------
# validation


def is_asm(A) -> bool:
    """True if A (tuple of tuples) is an alternating sign matrix.

    Equivalent to the usual condition that along every row and column the
    nonzero entries alternate in sign, beginning and ending with 1: all
    partial sums lie in {0, 1} and the total is 1.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        return False
    if any(e not in (-1, 0, 1) for row in A for e in row):
        return False
    for i in range(n):
        r = c = 0
        for j in range(n):
            r += A[i][j]
            c += A[j][i]
            if r not in (0, 1) or c not in (0, 1):
                return False
        if r != 1 or c != 1:
            return False
    return True


def is_dsasm(A) -> bool:
    n = len(A)
    return is_asm(A) and all(A[i][j] == A[j][i] for i in range(n) for j in range(i))


def is_osasm(A) -> bool:
    """True if A is an off-diagonally symmetric ASM.

    For even order all diagonal entries are zero; for odd order exactly one
    diagonal entry is nonzero.
    """
    if not is_dsasm(A):
        return False
    nonzero = sum(1 for i in range(len(A)) if A[i][i] != 0)
    return nonzero == len(A) % 2


def is_dspm(A) -> bool:
    """True if A is a diagonally symmetric permutation matrix."""
    return is_dsasm(A) and all(e != -1 for row in A for e in row)


# ---------------------------------------------------------------------------
# enumeration


def enum_dsasm(n: int, limit: int = DSASM_GUARD):
    """Yield every n x n DSASM exactly once, in a fixed depth-first order.

    The search walks the rows of the associated six-vertex configuration on
    the triangular grid, carrying the orientations of the vertical edges --
    equivalently the column partial sums -- as state.  Row i only chooses the
    entries A[i][i..n]; the part left of the diagonal is forced by symmetry,
    and the column conditions below the diagonal repeat the row conditions.
    """
    if n > limit:
        raise ResourceLimit(f"enum_dsasm({n}) exceeds guard {limit}")
    if n == 0:
        yield ()
        return

    def rows(i, cols, upper):
        # cols[j - i] = sum of column j through row i-1, for j = i..n-1
        if i == n:
            yield _symmetric(upper, n)
            return
        m = n - i

        def cells(j, rho, row, newcols):
            # j counts offsets within the row; rho is the running row sum
            if j == m:
                if rho == 1:
                    yield from rows(i + 1, tuple(newcols), upper + (tuple(row),))
                return
            for e in (-1, 0, 1):
                r2 = rho + e
                if r2 not in (0, 1):
                    continue
                if j > 0:
                    c2 = cols[j] + e
                    if c2 not in (0, 1):
                        continue
                    yield from cells(j + 1, r2, row + [e], newcols + [c2])
                else:
                    yield from cells(j + 1, r2, row + [e], newcols)

        # row sum so far, from the mirrored entries left of the diagonal
        yield from cells(0, cols[0], [], [])

    yield from rows(0, (0,) * n, ())


def _symmetric(upper, n):
    """Assemble a full symmetric matrix from its rows at and above the diagonal."""
    A = [[0] * n for _ in range(n)]
    for i, row in enumerate(upper):
        for k, e in enumerate(row):
            A[i][i + k] = e
            A[i + k][i] = e
    return tuple(tuple(r) for r in A)


def enum_asm(n: int, limit: int = ASM_GUARD):
    """Yield every n x n ASM once, via the standard column-partial-sum DFS."""
    if n > limit:
        raise ResourceLimit(f"enum_asm({n}) exceeds guard {limit}")
    if n == 0:
        yield ()
        return

    def rows(i, cols, acc):
        if i == n:
            if all(c == 1 for c in cols):
                yield tuple(acc)
            return

        def cells(j, rho, row, newcols):
            if j == n:
                if rho == 1:
                    yield from rows(i + 1, tuple(newcols), acc + (tuple(row),))
                return
            for e in (-1, 0, 1):
                r2 = rho + e
                c2 = cols[j] + e
                if r2 in (0, 1) and c2 in (0, 1):
                    yield from cells(j + 1, r2, row + [e], newcols + [c2])

        yield from cells(0, 0, [], [])

    yield from rows(0, (0,) * n, ())


def enum_osasm(n: int, limit: int = DSASM_GUARD):
    for A in enum_dsasm(n, limit):
        if sum(1 for i in range(n) if A[i][i] != 0) == n % 2:
            yield A


def enum_dspm(n: int, limit: int = DSASM_GUARD):
    for A in enum_dsasm(n, limit):
        if all(e != -1 for row in A for e in row):
            yield A


# ---------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class StatRecord:
    """The statistics of a single matrix.

    R: nonzero entries strictly above the diagonal
    S: nonzero entries on the diagonal
    T: column of the 1 in the first row (1-based)
    P: the double-sum pair statistic (a nonnegative integer)
    Sp, Sm: numbers of 1's and -1's on the diagonal
    M: number of -1's anywhere
    U: sum of all strictly upper triangular entries
    I: number of inversions
    """

    R: int
    S: int
    T: int
    P: int
    Sp: int
    Sm: int
    M: int
    U: int
    I: int


def stats(A) -> StatRecord:
    n = len(A)
    R = sum(abs(A[i][j]) for i in range(n) for j in range(i + 1, n))
    S = sum(abs(A[i][i]) for i in range(n))
    T = next(j + 1 for j in range(n) if A[0][j] == 1)
    Sp = sum(1 for i in range(n) if A[i][i] == 1)
    Sm = sum(1 for i in range(n) if A[i][i] == -1)
    M = sum(1 for row in A for e in row if e == -1)
    U = sum(A[i][j] for i in range(n) for j in range(i + 1, n))
    # prefix[i][j] = sum of A[i][0..j]
    prefix = [[0] * n for _ in range(n)]
    for i in range(n):
        acc = 0
        for j in range(n):
            acc += A[i][j]
            prefix[i][j] = acc
    P = sum(
        A[i][j] * prefix[i2][j]
        for j in range(n)
        for i in range(j)
        for i2 in range(i + 1, j)
    )
    I = sum(
        A[i][j] * prefix[i2][j]
        for i in range(n)
        for i2 in range(i + 1, n)
        for j in range(n)
    )
    return StatRecord(R=R, S=S, T=T, P=P, Sp=Sp, Sm=Sm, M=M, U=U, I=I)


# ---------------------------------------------------------------------------
# six-vertex configurations


@dataclass
class SvConfig:
    """Edge orientations of a six-vertex configuration on the triangular grid.

    ``vert[(i, j)]`` and ``hor[(i, j)]`` hold the partial-sum bits described
    in the module docstring.  Mutable on purpose: the involutions work by
    flipping a few edges and mapping back.
    """

    n: int
    vert: dict
    hor: dict


def to_svconfig(A) -> SvConfig:
    if not is_dsasm(A):
        raise BijectionError("not a DSASM")
    n = len(A)
    vert = {}
    hor = {}
    for j in range(1, n + 1):
        acc = 0
        for i in range(1, j + 1):
            vert[(i, j)] = acc
            acc += A[i - 1][j - 1]
    for i in range(1, n + 1):
        acc = sum(A[i - 1][k] for k in range(i - 1))
        for j in range(i, n + 1):
            acc += A[i - 1][j - 1]
            hor[(i, j)] = acc
    return SvConfig(n=n, vert=vert, hor=hor)


def from_svconfig(C: SvConfig):
    """Inverse of :func:`to_svconfig`; raises :class:`BijectionError` if the
    edge data violates the ice rule or the boundary conditions."""
    n = C.n
    for (i, j), v in list(C.vert.items()) + list(C.hor.items()):
        if v not in (0, 1) or not 1 <= i <= j <= n:
            raise BijectionError(f"bad edge ({i},{j}) = {v}")
    if len(C.vert) != n * (n + 1) // 2 or len(C.hor) != n * (n + 1) // 2:
        raise BijectionError("wrong number of edges")
    for j in range(1, n + 1):
        if C.vert[(1, j)] != 0:
            raise BijectionError(f"top edge of column {j} not directed up")
    for i in range(1, n + 1):
        if C.hor[(i, n)] != 1:
            raise BijectionError(f"right stub of row {i} not directed left")
    A = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        # left boundary vertex (i, i): entry from its N and E edges
        A[i - 1][i - 1] = C.hor[(i, i)] - C.vert[(i, i)]
        for j in range(i + 1, n + 1):
            e = C.vert[(i + 1, j)] - C.vert[(i, j)]
            if e != C.hor[(i, j)] - C.hor[(i, j - 1)]:
                raise BijectionError(f"ice rule fails at vertex ({i},{j})")
            A[i - 1][j - 1] = e
            A[j - 1][i - 1] = e
    A = tuple(tuple(r) for r in A)
    if not is_dsasm(A):
        raise BijectionError("configuration does not encode a DSASM")
    return A


def local_type(C: SvConfig, i: int, j: int) -> str:
    """Name of the local configuration at vertex (i, j), 1 <= i <= j <= n."""
    if i == j:
        up = C.vert[(i, i)] == 0  # N edge points away from (i, i)
        right = C.hor[(i, i)] == 0  # E edge points away from (i, i)
        if up and not right:
            return "l_up"
        if not up and right:
            return "l_down"
        return "l_out" if up and right else "l_in"
    c_above = C.vert[(i, j)]
    c_below = C.vert[(i + 1, j)]
    r_right = C.hor[(i, j)]
    e = c_below - c_above
    if e == 1:
        return "v5"
    if e == -1:
        return "v6"
    return {(0, 0): "v1", (1, 1): "v2", (0, 1): "v3", (1, 0): "v4"}[(c_above, r_right)]


def type_census(C: SvConfig):
    """Counts of each local configuration name over all vertices."""
    counts = {}
    for i in range(1, C.n + 1):
        for j in range(i, C.n + 1):
            t = local_type(C, i, j)
            counts[t] = counts.get(t, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# involutions


def star(A):
    """Flip, at every superdiagonal vertex (k-1, k), the orientations of the
    two edges joining it to the left boundary; v3 <-> v5 and v6 <-> v4 there."""
    C = to_svconfig(A)
    for k in range(2, C.n + 1):
        w = C.hor[(k - 1, k - 1)]
        s = C.vert[(k, k)]
        C.hor[(k - 1, k - 1)], C.vert[(k, k)] = s, w
    return from_svconfig(C)


def dagger(A):
    """Apply the local flip of ``star`` at the first superdiagonal vertex
    whose configuration is not v1 or v2; identity if there is none."""
    C = to_svconfig(A)
    for k in range(2, C.n + 1):
        w = C.hor[(k - 1, k - 1)]
        s = C.vert[(k, k)]
        if w != s:
            C.hor[(k - 1, k - 1)], C.vert[(k, k)] = s, w
            return from_svconfig(C)
    return A


def antidiag(A):
    """Reflection in the antidiagonal: entry (i, j) maps to (n+1-j, n+1-i)."""
    n = len(A)
    return tuple(tuple(A[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# direct generating functions

_CLASSES = {
    "asm": (enum_asm, ASM_GUARD),
    "dsasm": (enum_dsasm, DSASM_GUARD),
    "osasm": (enum_osasm, DSASM_GUARD),
    "dspm": (enum_dspm, DSASM_GUARD),
}


def genfun_direct(n: int, stats_weights, klass: str = "dsasm") -> MultiPoly:
    """Literal weighted sum over an enumerated class of matrices.

    ``stats_weights`` maps variable names to either the name of a
    :class:`StatRecord` field or a callable taking the record; the monomial of
    a matrix is the product of var**exponent.  For example
    ``genfun_direct(3, {"r": "R", "s": "S", "t": "T"})`` is the three-variable
    DSASM generating function at n = 3.
    """
    enum, guard = _CLASSES[klass]
    spots = []
    for var, how in stats_weights.items():
        idx = VARS.index(var)
        f = (lambda rec, name=how: getattr(rec, name)) if isinstance(how, str) else how
        spots.append((idx, f))
    terms = {}
    for A in enum(n, guard):
        rec = stats(A)
        exp = [0] * len(VARS)
        for idx, f in spots:
            exp[idx] = f(rec)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly({k: Fraction(v) for k, v in terms.items()})


# ---------------------------------------------------------------------------
# text format


def format_matrix(A) -> str:
    """Rows of space-separated entries, one row per line."""
    return "\n".join(" ".join(str(e) for e in row) for row in A)


def parse_matrix(text: str):
    rows = [tuple(int(tok) for tok in line.split()) for line in text.strip().splitlines() if line.strip()]
    return tuple(rows)
