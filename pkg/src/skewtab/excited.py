"""Excited diagrams: enumeration, the flag determinant, the hook-sum count,
the lattice-path decomposition, and the closed product forms.

An excited diagram of outer/inner is any cell set reachable from the inner
diagram by moves (i, j) -> (i+1, j+1), allowed when the three cells to the
right, below, and diagonally below-right are all free cells of the outer
shape.  Diagrams are represented as tuples of cells sorted in reading
order; enumeration output is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from .errors import CapExceeded
from .exact import (
    _bareiss_det,
    odd_double_factorial,
    schur_principal,
    superfactorial,
)
from .shapes import Cell, Partition, SkewShape

DEFAULT_MU_CAP = 12
DEFAULT_XI_CAP = 10**7

Diagram = tuple[Cell, ...]


def enumerate_excited(
    shape: SkewShape,
    mu_cap: int = DEFAULT_MU_CAP,
    xi_cap: int = DEFAULT_XI_CAP,
) -> list[Diagram]:
    """All excited diagrams, breadth-first from the inner shape.

    The same diagram is reachable along many move orders, so states are
    deduplicated by their sorted cell set.  The first element is always the
    inner diagram itself.
    """
    lam, mu = shape.outer, shape.inner
    if mu.size > mu_cap:
        raise CapExceeded(f"excited enumeration needs |inner| <= {mu_cap}, got {mu.size}")
    start = tuple(sorted(mu.cells()))
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        diagram = queue.popleft()
        occupied = set(diagram)
        for i, j in diagram:
            moved = _excited_move(lam, occupied, i, j)
            if moved is None:
                continue
            if moved not in seen:
                seen.add(moved)
                if len(seen) > xi_cap:
                    raise CapExceeded(f"more than {xi_cap} excited diagrams")
                order.append(moved)
                queue.append(moved)
    return order


def _excited_move(lam, occupied, i, j):
    for nb in ((i + 1, j), (i, j + 1), (i + 1, j + 1)):
        if nb not in lam or nb in occupied:
            return None
    new = set(occupied)
    new.remove((i, j))
    new.add(Cell(i + 1, j + 1))
    return tuple(sorted(new))


def is_excited_diagram(shape: SkewShape, diagram) -> bool:
    """Check the diagonal-count and order-relation characterization."""
    lam, mu = shape.outer, shape.inner
    cells = [Cell(i, j) for i, j in diagram]
    if len(cells) != mu.size or any(c not in lam for c in cells):
        return False
    by_diag: dict[int, list[Cell]] = {}
    for c in sorted(cells):
        by_diag.setdefault(c.col - c.row, []).append(c)
    image: dict[Cell, Cell] = {}
    for c in sorted(mu.cells()):
        lst = by_diag.get(c.col - c.row)
        if not lst:
            return False
        image[c] = lst.pop(0)
    if any(lst for lst in by_diag.values()):
        return False
    for (i, j), target in image.items():
        for nb in (Cell(i, j + 1), Cell(i + 1, j)):
            if nb in mu:
                other = image[nb]
                if not (target.row <= other.row and target.col <= other.col):
                    return False
    return True


def flagged_tableaux_count(shape: SkewShape) -> int:
    """Semistandard fillings of the inner shape with row-i entries at most the
    i-th flag; equinumerous with the excited diagrams (test cross-check)."""
    mu = shape.inner
    flags = row_flags(shape)
    rows = [mu.part(i) for i in range(1, len(mu) + 1)]
    grid: list[list[int]] = [[0] * r for r in rows]

    def backtrack(i: int, j: int) -> int:
        if i == len(rows):
            return 1
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0 and j < rows[i - 1]:
            lo = max(lo, grid[i - 1][j] + 1)
        total = 0
        for v in range(lo, flags[i] + 1):
            grid[i][j] = v
            total += backtrack(ni, nj)
        grid[i][j] = 0
        return total

    return backtrack(0, 0) if rows else 1


def row_flags(shape: SkewShape) -> list[int]:
    """Flag of row i: the last row at which the diagonal through the end of
    inner row i is still inside the outer shape."""
    lam, mu = shape.outer, shape.inner
    flags = []
    for i in range(1, len(mu) + 1):
        j = mu.part(i)
        t = 0
        while (i + t + 1, j + t + 1) in lam:
            t += 1
        flags.append(i + t)
    return flags


def xi_determinant(shape: SkewShape) -> int:
    """Number of excited diagrams, by the binomial determinant over flags."""
    mu = shape.inner
    if not shape.outer.contains(mu):
        raise ValueError("inner not contained in outer")
    ell = len(mu)
    if ell == 0:
        return 1
    flags = row_flags(shape)
    mat = [
        [comb(flags[i - 1] + mu.part(i) - i + j - 1, flags[i - 1] - 1) for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    return _bareiss_det(mat)


# -- the hook-sum count -------------------------------------------------------


def nhlf_count(shape: SkewShape, **caps) -> int:
    """Count standard tableaux as n! times the sum over excited diagrams of
    reciprocal free-hook products; must agree with the determinant count."""
    lam = shape.outer
    hooks = lam.hooks()
    total_product = 1
    for h in hooks.values():
        total_product *= h
    acc = 0
    for diagram in enumerate_excited(shape, **caps):
        term = 1
        for c in diagram:
            term *= hooks[c]
        acc += term
    num = factorial(shape.size) * acc
    assert num % total_product == 0, "hook-sum count is not an integer"
    return num // total_product


def min_max_term(shape: SkewShape, **caps) -> tuple[Fraction, Fraction]:
    """Smallest and largest reciprocal hook product over excited diagrams.

    The largest is attained at the inner diagram itself, since every move
    only grows the product of free hooks.
    """
    lam = shape.outer
    hooks = lam.hooks()
    total_product = 1
    for h in hooks.values():
        total_product *= h
    best = None
    worst = None
    for diagram in enumerate_excited(shape, **caps):
        term = 1
        for c in diagram:
            term *= hooks[c]
        best = term if best is None else max(best, term)
        worst = term if worst is None else min(worst, term)
    return Fraction(worst, total_product), Fraction(best, total_product)


# -- lattice paths ------------------------------------------------------------


@dataclass(frozen=True)
class PathFamily:
    """Non-intersecting monotone paths whose union is the complement of an
    excited diagram inside the outer shape."""

    paths: tuple[tuple[Cell, ...], ...]

    @property
    def support(self) -> frozenset:
        return frozenset(c for p in self.paths for c in p)

    def endpoints(self) -> tuple[tuple[Cell, Cell], ...]:
        return tuple((p[0], p[-1]) for p in self.paths)


def _strip_components(layer: set[Cell]) -> list[tuple[Cell, ...]]:
    comps = []
    todo = set(layer)
    while todo:
        seed = todo.pop()
        comp = {seed}
        queue = deque([seed])
        while queue:
            i, j = queue.popleft()
            for nb in (Cell(i + 1, j), Cell(i - 1, j), Cell(i, j + 1), Cell(i, j - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    queue.append(nb)
        # cells of one component lie on consecutive diagonals, SW to NE
        comps.append(tuple(sorted(comp, key=lambda c: c.col - c.row)))
    comps.sort(key=lambda p: p[0])
    return comps


def _peel_strips(support: set[Cell]) -> list[tuple[Cell, ...]]:
    """Split a diagram complement into border strips, innermost first.

    Each layer takes the cells whose upper-left diagonal neighbor lies outside
    the remaining support; layers hug the inner shape, so every strip runs
    from the southern box of a column to the eastern box of a row and the
    endpoints do not depend on which excited diagram was removed.
    """
    strips = []
    remaining = set(support)
    while remaining:
        layer = {c for c in remaining if (c.row - 1, c.col - 1) not in remaining}
        strips.extend(_strip_components(layer))
        remaining -= layer
    strips.sort(key=lambda p: p[0])
    return strips


def border_strip_decomposition(shape: SkewShape) -> list[tuple[Cell, ...]]:
    """The unique decomposition of the skew cells into border strips, each
    running from the bottom of a column to the end of a row."""
    return _peel_strips({Cell(i, j) for i, j in shape.cells()})


def paths_from_diagram(shape: SkewShape, diagram) -> PathFamily:
    """Decompose the complement of an excited diagram into its path family.

    The starts and ends are those of the canonical border-strip decomposition
    of the skew shape itself; the complement of any excited diagram splits
    uniquely into non-intersecting monotone paths joining them.  Paths are
    traced innermost first (by start column): from each cell the path climbs
    when the cell above is free and not blocked diagonally, else moves right.
    """
    if not is_excited_diagram(shape, diagram):
        raise ValueError("not an excited diagram of this shape")
    base = border_strip_decomposition(shape)
    expected_end = {p[0]: p[-1] for p in base}
    remaining = {Cell(i, j) for i, j in shape.outer.cells()}
    remaining -= {Cell(i, j) for i, j in diagram}
    paths = []
    for start in sorted(expected_end, key=lambda c: (c.col, c.row)):
        if start not in remaining:
            raise ValueError(f"path start {start} covered by the diagram")
        path = [start]
        remaining.remove(start)
        while True:
            i, j = path[-1]
            up, right = Cell(i - 1, j), Cell(i, j + 1)
            if up in remaining and (i - 1, j - 1) not in remaining:
                nxt = up
            elif right in remaining:
                nxt = right
            else:
                break
            path.append(nxt)
            remaining.remove(nxt)
        if path[-1] != expected_end[start]:
            raise ValueError(f"path from {start} ended at {path[-1]}")
        paths.append(tuple(path))
    if remaining:
        raise ValueError("path decomposition did not cover the complement")
    paths.sort(key=lambda p: p[0])
    return PathFamily(tuple(paths))


def xi_bounds(shape: SkewShape) -> tuple[int, int]:
    """(2^(n-k), n^(2 d^2)): the step-count and Durfee bounds on the number
    of excited diagrams; k is the number of border strips, d the Durfee side
    of the outer shape."""
    n = shape.size
    if n == 0:
        return 1, 1
    k = len(border_strip_decomposition(shape))
    d = shape.outer.durfee()
    return 2 ** (n - k), n ** (2 * d * d)


# -- closed product forms ------------------------------------------------------


def proctor_xi(k: int) -> int:
    """Excited-diagram count of the half staircase delta_{2k}/delta_k for even
    k: reverse plane partitions of staircase shape with bounded entries."""
    if k < 2 or k % 2:
        raise ValueError("the product form needs even k >= 2")
    num = 1
    den = 1
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            num *= k + i + j - 1
            den *= i + j - 1
    assert num % den == 0
    return num // den


def proctor_xi_superfactorial(k: int) -> int:
    """The same count as a square root of a superfactorial ratio."""
    if k < 2 or k % 2:
        raise ValueError("the superfactorial form needs even k >= 2")
    num = (
        superfactorial(3 * k - 1)
        * superfactorial(k - 1) ** 3
        * odd_double_factorial(k)
        * odd_double_factorial(k // 2)
    )
    den = superfactorial(2 * k - 1) ** 3 * odd_double_factorial(3 * k // 2)
    assert num % den == 0
    radicand = num // den
    root = isqrt(radicand)
    assert root * root == radicand, "radicand is not a perfect square"
    return root


def macmahon_xi(k: int) -> int:
    """Excited-diagram count of the inverted thick hook (2k)^(2k)/k^k: plane
    partitions in a k-cube."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = 1
    den = 1
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            num *= k + i + j - 1
            den *= i + j - 1
    assert num % den == 0
    return num // den


def macmahon_xi_superfactorial(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    num = superfactorial(k - 1) ** 3 * superfactorial(3 * k - 1)
    den = superfactorial(2 * k - 1) ** 3
    assert num % den == 0
    return num // den


# -- slim shapes ---------------------------------------------------------------


@dataclass(frozen=True)
class SlimReport:
    ell: int
    xi: int
    ratio: Fraction  # xi * prod(inner hooks) / ell^|inner|, tends to 1
    staircase_power_ok: bool | None  # xi == 2^C(ell,2) when inner is a staircase


def slim_xi_checks(shape: SkewShape) -> SlimReport:
    """Slim shapes: the excited count depends only on the inner shape and the
    number of outer rows, and equals the principal Schur value."""
    lam, mu = shape.outer, shape.inner
    ell = len(lam)
    if ell == 0 or lam.part(ell) < mu.part(1) + ell:
        raise ValueError("shape is not slim: need last outer part >= inner width + rows")
    xi = xi_determinant(shape)
    assert xi == schur_principal(mu, ell)
    prod = 1
    for h in mu.hooks().values():
        prod *= h
    ratio = Fraction(xi * prod, ell**mu.size)
    staircase_ok = None
    if mu == Partition(range(ell - 1, 0, -1)):
        staircase_ok = xi == 2 ** comb(ell, 2)
    return SlimReport(ell=ell, xi=xi, ratio=ratio, staircase_power_ok=staircase_ok)
