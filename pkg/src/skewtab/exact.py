"""Exact counting of standard Young tableaux and friends.

Everything here is integer or Fraction arithmetic; no floats.  Counts are
plain Python ints (arbitrary precision), ratios are fractions.Fraction in
lowest terms.  All functions are pure; the factorial-family caches are
append-only module lists grown under the interpreter lock, so concurrent
use is safe.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb, factorial

from .errors import CapExceeded
from .shapes import Cell, Partition, SkewShape

DEFAULT_BRUTE_CAP = 24
DEFAULT_LR_CAP = 12
DEFAULT_EULER_CAP = 1000


# -- factorial families -------------------------------------------------------

_superfactorials = [1]
_double_superfactorials = [1]
_super_doublefactorials = [1]


def odd_double_factorial(n: int) -> int:
    """1 * 3 * 5 * ... * (2n - 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return factorial(2 * n) // (2**n * factorial(n))


def superfactorial(n: int) -> int:
    """1! * 2! * ... * n!"""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_superfactorials) <= n:
        m = len(_superfactorials)
        _superfactorials.append(_superfactorials[-1] * factorial(m))
    return _superfactorials[n]


def double_superfactorial(n: int) -> int:
    """1! * 3! * 5! * ... * (2n - 1)!"""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_double_superfactorials) <= n:
        m = len(_double_superfactorials)
        _double_superfactorials.append(_double_superfactorials[-1] * factorial(2 * m - 1))
    return _double_superfactorials[n]


def super_doublefactorial(n: int) -> int:
    """1!! * 3!! * 5!! * ... * (2n - 1)!!"""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_super_doublefactorials) <= n:
        m = len(_super_doublefactorials)
        _super_doublefactorials.append(
            _super_doublefactorials[-1] * odd_double_factorial(m)
        )
    return _super_doublefactorials[n]


FACTORIAL_KINDS = {
    "factorial": factorial,
    "odd-double-factorial": odd_double_factorial,
    "superfactorial": superfactorial,
    "double-superfactorial": double_superfactorial,
    "super-doublefactorial": super_doublefactorial,
}


def factorials(kind: str, n: int) -> int:
    """Dispatch into the factorial family by name."""
    try:
        fn = FACTORIAL_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown factorial kind '{kind}'") from None
    return fn(n)


# -- hook-length counts --------------------------------------------------------


def hlf_count(lam: Partition) -> int:
    """Number of standard tableaux of a straight shape, by the hook-length formula."""
    prod = 1
    for h in lam.hooks().values():
        prod *= h
    num = factorial(lam.size)
    assert num % prod == 0
    return num // prod


def naive_hlf(shape: SkewShape) -> Fraction:
    """n! over the product of outer-shape hooks of the skew cells (not always integral)."""
    return Fraction(factorial(shape.size), shape.hook_product())


# -- Jacobi-Trudi determinant ---------------------------------------------------


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss elimination).

    All intermediate divisions are exact, so the arithmetic stays in the
    integers and avoids rational blow-up.
    """
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def jacobi_trudi_count(shape: SkewShape) -> int:
    """Number of standard tableaux of a skew shape via the factorial determinant.

    The matrix has entries 1/(outer_i - inner_j - i + j)! with 1/m! = 0 for
    m < 0.  Denominators are cleared row by row (multiply row i by the
    largest factorial occurring in it) so the determinant is evaluated over
    exact integers.
    """
    lam, mu = shape.outer, shape.inner
    ell = len(lam)
    n = shape.size
    if ell == 0:
        return 1
    row_clear = []
    mat = []
    for i in range(1, ell + 1):
        top = lam.part(i) - mu.part(ell) - i + ell
        row_clear.append(max(top, 0))
        row = []
        for j in range(1, ell + 1):
            m = lam.part(i) - mu.part(j) - i + j
            row.append(0 if m < 0 else _falling_ratio(row_clear[-1], m))
        mat.append(row)
    det = _bareiss_det(mat)
    denom = 1
    for r in row_clear:
        denom *= factorial(r)
    num = factorial(n) * det
    assert num % denom == 0, "determinant count is not an integer"
    count = num // denom
    assert count >= 0, "determinant count is negative"
    return count


def _falling_ratio(big: int, small: int) -> int:
    """big!/small! for big >= small >= 0."""
    out = 1
    for v in range(small + 1, big + 1):
        out *= v
    return out


# -- brute force: linear extensions of the cell poset ---------------------------


def brute_force_count(shape: SkewShape, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Count standard fillings by dynamic programming over order ideals.

    A state records how many cells of each row are filled; it is a valid
    ideal iff the filled prefix of row i never extends past the filled
    prefix of row i-1 (cells increase downward and to the right).
    """
    n = shape.size
    if n > cap:
        raise CapExceeded(f"brute-force count needs n <= {cap}, got {n}")
    bounds = shape.row_bounds()
    rows = len(bounds)
    if rows == 0:
        return 1
    widths = [hi - lo for lo, hi in bounds]
    starts = [lo for lo, _ in bounds]
    counts = {tuple([0] * rows): 1}
    for _ in range(n):
        nxt: dict[tuple, int] = {}
        for state, ways in counts.items():
            for r in range(rows):
                c = state[r]
                if c >= widths[r]:
                    continue
                if r > 0 and starts[r] + c + 1 > starts[r - 1] + state[r - 1]:
                    continue
                new = state[:r] + (c + 1,) + state[r + 1 :]
                nxt[new] = nxt.get(new, 0) + ways
        counts = nxt
    assert len(counts) == 1
    return next(iter(counts.values()))


# -- classical sequences ---------------------------------------------------------


def euler_number(n: int, cap: int = DEFAULT_EULER_CAP) -> int:
    """Number of alternating permutations of n, by the boustrophedon recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise CapExceeded(f"euler number needs n <= {cap}, got {n}")
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0]
        for k in range(1, m + 1):
            row.append(row[k - 1] + prev[m - k])
    return row[-1]


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("m must be >= 0")
    return comb(2 * m, m) // (m + 1)


# -- Littlewood-Richardson coefficients by brute force ----------------------------


def lr_coefficient(lam, mu, nu, cap: int = DEFAULT_LR_CAP) -> int:
    """Multiplicity c^lam_{mu,nu}: skew semistandard fillings of lam/mu with
    content nu whose reverse reading word is a lattice word."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    nu = nu if isinstance(nu, Partition) else Partition(nu)
    if lam.size != mu.size + nu.size:
        raise ValueError("sizes must satisfy |lam| = |mu| + |nu|")
    if lam.size > cap:
        raise CapExceeded(f"LR enumeration needs |lam| <= {cap}, got {lam.size}")
    if not lam.contains(mu):
        return 0
    shape = SkewShape(lam, mu)
    # cells in reverse reading order: rows top to bottom, right to left
    order = []
    for i, (lo, hi) in enumerate(shape.row_bounds(), start=1):
        order.extend(Cell(i, j) for j in range(hi, lo, -1))
    nparts = len(nu)
    quota = [nu.part(v) for v in range(1, nparts + 1)]
    filling: dict[Cell, int] = {}
    seen = [0] * (nparts + 1)

    def backtrack(idx: int) -> int:
        if idx == len(order):
            return 1
        i, j = order[idx]
        lo_v = 1
        hi_v = nparts
        right = filling.get(Cell(i, j + 1))
        if right is not None:
            hi_v = min(hi_v, right)
        above = filling.get(Cell(i - 1, j))
        if above is not None:
            lo_v = max(lo_v, above + 1)
        total = 0
        for v in range(lo_v, hi_v + 1):
            if seen[v] >= quota[v - 1]:
                continue
            if v > 1 and seen[v] >= seen[v - 1]:
                continue  # lattice word condition
            seen[v] += 1
            filling[Cell(i, j)] = v
            total += backtrack(idx + 1)
            del filling[Cell(i, j)]
            seen[v] -= 1
        return total

    return backtrack(0)


# -- principal specialization and hook identities ----------------------------------


def schur_principal(mu, ell: int) -> int:
    """Schur polynomial of mu at ell ones: semistandard fillings with entries <= ell."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if ell < len(mu):
        return 0
    hooks = mu.hooks()
    num = 1
    den = 1
    for (i, j), h in hooks.items():
        num *= ell + j - i
        den *= h
    assert num % den == 0
    return num // den


def dual_hook_products(nu) -> tuple[int, int]:
    """Product of hooks and product of the complementary lengths i + j - 1."""
    nu = nu if isinstance(nu, Partition) else Partition(nu)
    h = 1
    for v in nu.hooks().values():
        h *= v
    hstar = 1
    for i, j in nu.cells():
        hstar *= i + j - 1
    return h, hstar


def rv_hook_identity_check(sigma, rows: int, cols: int) -> bool:
    """True iff the rectangle-with-attached-copies shape has the same hook
    multiset as sigma and the rectangle taken together."""
    from .shapes import regev_vershik_shape

    sigma = sigma if isinstance(sigma, Partition) else Partition(sigma)
    shape = regev_vershik_shape(sigma, rows, cols)
    expected = Counter(sigma.hooks().values())
    expected.update(Partition([cols] * rows).hooks().values())
    return shape.hook_multiset() == expected
