"""Lower and upper bounds on the number of standard tableaux of a skew shape,
assembled into a verdict report.

All comparisons are exact (integers and fractions); the only floats are the
log-scale gap diagnostics attached to the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .exact import jacobi_trudi_count, naive_hlf
from .excited import xi_determinant
from .shapes import Cell, SkewShape


def antidiagonal_chains(shape: SkewShape) -> "ChainDecomposition":
    """Chain partition pairing each even diagonal j - i with the odd one above.

    Within such a pair the cells in reading order are always pairwise
    comparable, so every nonempty pair contributes one chain.  The partition
    is valid for every skew shape; it is not claimed optimal.
    """
    groups: dict[int, list[Cell]] = {}
    for i, j in shape.cells():
        d = j - i
        # group key: the even member of the pair {2m, 2m+1}
        key = d if d % 2 == 0 else d - 1
        groups.setdefault(key, []).append(Cell(i, j))
    chains = [tuple(sorted(cells)) for cells in groups.values()]
    chains.sort(key=lambda c: (-len(c), c[0]))
    return ChainDecomposition(tuple(chains))


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple[tuple[Cell, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.chains)


def rank_factorial_lower(shape: SkewShape) -> int:
    """Product of factorials of the antidiagonal rank sizes."""
    prod = 1
    for r in shape.antidiagonal_ranks():
        prod *= factorial(r)
    return prod


def chain_upper(shape: SkewShape, decomposition: ChainDecomposition | None = None) -> int:
    """Multinomial bound n!/(l_1! ... l_m!) for a chain partition."""
    if decomposition is None:
        decomposition = antidiagonal_chains(shape)
    _validate_chains(shape, decomposition)
    num = factorial(shape.size)
    for size in decomposition.sizes:
        num, rem = divmod(num, factorial(size))
        assert rem == 0
    return num


def _validate_chains(shape: SkewShape, decomposition: ChainDecomposition) -> None:
    seen: set[Cell] = set()
    for chain in decomposition.chains:
        cells = sorted(chain)
        for a, b in zip(cells, cells[1:]):
            if not (a.row <= b.row and a.col <= b.col):
                raise ValueError(f"cells {a} and {b} are incomparable within a chain")
        if seen.intersection(cells):
            raise ValueError("chains overlap")
        seen.update(cells)
    if seen != set(shape.cells()):
        raise ValueError("chains do not cover the shape")


def upper_ideal_sizes(shape: SkewShape) -> dict[Cell, int]:
    """For each cell, the number of cells weakly below and to the right."""
    cells = shape.cells()
    return {
        c: sum(1 for d in cells if d.row >= c.row and d.col >= c.col) for c in cells
    }


def hp_lower(shape: SkewShape, use_dual: bool = True) -> Fraction:
    """n! over the product of upper-ideal sizes.

    The bound is orientation dependent, so by default it is also evaluated on
    the 180-degree rotation and the larger value is returned.  With
    use_dual=False the single-orientation value is returned; on ribbon hooks
    that value coincides exactly with the naive hook-length bound.
    """
    orientations = (shape, shape.rotate180()) if use_dual else (shape,)
    best = None
    for s in orientations:
        prod = 1
        for v in upper_ideal_sizes(s).values():
            prod *= v
        q = Fraction(factorial(s.size), prod)
        best = q if best is None else max(best, q)
    return best


def skew_lr_upper(shape: SkewShape) -> Fraction:
    """Hook-product ratio outer/inner; equals |outer|! f^inner / (|inner|! f^outer)."""
    num = 1
    for h in shape.outer.hooks().values():
        num *= h
    den = 1
    for h in shape.inner.hooks().values():
        den *= h
    return Fraction(num, den)


def main_sandwich(shape: SkewShape) -> tuple[Fraction, Fraction]:
    """(F, xi * F): the naive hook-length value and its excited-count multiple."""
    F = naive_hlf(shape)
    return F, xi_determinant(shape) * F


def compare_check(shape: SkewShape) -> bool | None:
    """Whether the rank factorial is below the naive hook-length value.

    Applies when the antidiagonal rank sizes are monotone in either reading
    direction; returns None (not applicable) otherwise.  The inequality can
    genuinely fail off the theorem's hypothesis, e.g. on (2,2)/(1).
    """
    ranks = shape.antidiagonal_ranks()
    increasing = all(a <= b for a, b in zip(ranks, ranks[1:]))
    decreasing = all(a >= b for a, b in zip(ranks, ranks[1:]))
    if not (increasing or decreasing):
        return None
    return rank_factorial_lower(shape) <= naive_hlf(shape)


def binom_lemma_check(t: int, r: int) -> bool | None:
    """Exact check of C(t+r, r) >= ((2t+r-1)/r)^r; None outside t >= r >= 3.

    The inequality holds throughout r >= 6 but genuinely fails for r in
    {3, 4, 5} once t grows (first failures t = 4, 8, 21), so a False return
    is a real outcome, not a bug.
    """
    if not t >= r >= 3:
        return None
    return comb(t + r, r) * r**r >= (2 * t + r - 1) ** r


@dataclass
class BoundsReport:
    shape: SkewShape
    exact: int
    xi: int
    lower: dict = field(default_factory=dict)
    upper: dict = field(default_factory=dict)
    chains: ChainDecomposition | None = None
    verdicts: dict = field(default_factory=dict)
    log_gaps: dict = field(default_factory=dict)

    @property
    def all_verdicts_hold(self) -> bool:
        return all(self.verdicts.values())


def bounds_report(shape: SkewShape, exact: int | None = None) -> BoundsReport:
    """Evaluate every bound against the exact count and record verdicts.

    Every verdict is expected to hold on every shape; a False entry means a
    soundness bug, not a legitimate report state.
    """
    from .asymptotics import log_fraction

    if exact is None:
        exact = jacobi_trudi_count(shape)
    F = naive_hlf(shape)
    xi = xi_determinant(shape)
    chains = antidiagonal_chains(shape)
    report = BoundsReport(shape=shape, exact=exact, xi=xi, chains=chains)
    report.lower = {
        "rank-factorial": rank_factorial_lower(shape),
        "hp": hp_lower(shape),
        "naive-hlf": F,
    }
    report.upper = {
        "chain": chain_upper(shape, chains),
        "xi-times-F": xi * F,
        "skew-lr": skew_lr_upper(shape),
    }
    for name, bound in report.lower.items():
        report.verdicts[name] = bound <= exact
    for name, bound in report.upper.items():
        report.verdicts[name] = exact <= bound
    if exact > 0:
        for name, bound in report.lower.items():
            if bound > 0:
                report.log_gaps[name] = log_fraction(Fraction(exact) / bound)
        for name, bound in report.upper.items():
            report.log_gaps[name] = log_fraction(Fraction(bound) / exact)
    return report
