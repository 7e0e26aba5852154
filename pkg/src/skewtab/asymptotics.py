"""Finite-scale asymptotics: log-scale factorial estimates, second-order
constants for the named families, the hook integral over stable shapes, and
the Frobenius-coordinate limit constant.

This is the only module that touches floating point.  Exact inequalities are
always checked in integer/fraction arithmetic first; floats only enter when a
quantity is reported on the log scale.  Quadrature error is controlled by a
half-resolution refinement check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import log, sqrt

import numpy as np

from .exact import (
    FACTORIAL_KINDS,
    jacobi_trudi_count,
    naive_hlf,
)
from .excited import xi_determinant
from .shapes import Partition, ShapeFamily, SkewShape


def log_int(n: int) -> float:
    """Natural log of a positive integer of any size."""
    if n <= 0:
        raise ValueError("log_int needs a positive integer")
    return log(n)


def log_fraction(q: Fraction) -> float:
    if q <= 0:
        raise ValueError("log_fraction needs a positive rational")
    return log(q.numerator) - log(q.denominator)


# -- factorial families on the log scale ----------------------------------------


@dataclass(frozen=True)
class LogEstimate:
    exact: float
    estimate: float

    @property
    def gap(self) -> float:
        return self.exact - self.estimate


def log_factorial_family(kind: str, n: int) -> LogEstimate:
    """Exact log of a factorial-family value next to its main-term estimate.

    The estimate keeps the displayed leading terms only; the gap is reported,
    not assumed small (the lower-order coefficients are rough).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind not in FACTORIAL_KINDS:
        raise ValueError(f"unknown factorial kind '{kind}'")
    exact = log_int(FACTORIAL_KINDS[kind](n))
    ln, l2 = log(n), log(2)
    if kind == "factorial":
        est = n * ln - n
    elif kind == "odd-double-factorial":
        est = n * ln + (l2 - 1) * n
    elif kind == "superfactorial":
        est = 0.5 * n * n * ln - 0.75 * n * n + 2 * n * ln
    elif kind == "double-superfactorial":
        est = n * n * ln + (l2 - 1.5) * n * n + 2.5 * n * ln
    elif kind == "super-doublefactorial":
        est = 0.5 * n * n * ln + (l2 / 2 - 0.75) * n * n + 0.5 * n * ln
    else:
        raise ValueError(f"unknown factorial kind '{kind}'")
    return LogEstimate(exact=exact, estimate=est)


# -- second-order constants -------------------------------------------------------


def second_order_constant(shape: SkewShape, exact: int | None = None) -> float:
    """(log e - n log n / 2) / n for the exact count e of the shape."""
    n = shape.size
    if n == 0:
        raise ValueError("empty shape has no asymptotic constant")
    if exact is None:
        exact = jacobi_trudi_count(shape)
    return (log_int(exact) - 0.5 * n * log(n)) / n


@dataclass(frozen=True)
class BandConstants:
    lower: float
    upper: float
    exact: float | None = None


def band_constants(kind: str) -> BandConstants:
    """Closed-form second-term band constants for the supported families."""
    l2, l3 = log(2), log(3)
    if kind == "thick-ribbon":
        lower = 1 / 6 - 1.5 * l2 + 0.5 * l3
        return BandConstants(lower=lower, upper=1 / 6 - 3.5 * l2 + 2 * l3)
    if kind == "inverted-thick-hook":
        c1, c2, c3 = corner_constants()
        lower = -1 - c1 / 3 - 2 * c2 / 3
        return BandConstants(
            lower=lower,
            upper=lower + log(3 * sqrt(3) / 4),
            exact=-1 - 2 * c1 / 3 - c3 / 3,
        )
    if kind == "square":
        return BandConstants(lower=-1.5, upper=0.5 - l2, exact=0.5 - 2 * l2)
    raise ValueError(f"no band constants for family '{kind}'")


def corner_constants() -> tuple[float, float, float]:
    """Closed forms of the three unit-square integrals of log(c + x + y)."""
    l2, l3 = log(2), log(3)
    c1 = 2 * l2 - 1.5
    c2 = 4.5 * l3 - 4 * l2 - 1.5
    c3 = 18 * l2 - 9 * l3 - 1.5
    return c1, c2, c3


# -- stable shapes and the hook integral --------------------------------------------


class _Boundary:
    """A weakly decreasing piecewise-linear curve given by breakpoints.

    Vertical segments (equal x) and plateaus (equal y) are both allowed; the
    forward evaluation and the generalized inverse use sup semantics at ties.
    """

    def __init__(self, points):
        pts = [(float(x), float(y)) for x, y in points]
        if len(pts) < 2:
            raise ValueError("a boundary needs at least two points")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x1 < x0 or y1 > y0:
                raise ValueError("boundary must move right and weakly down")
        self.points = pts
        self.x_min = pts[0][0]
        self.x_max = pts[-1][0]
        self.y_min = pts[-1][1]
        self.y_max = pts[0][1]
        segs = [
            (x0, y0, x1, y1) for (x0, y0), (x1, y1) in zip(pts, pts[1:]) if x1 > x0
        ]
        self._seg_r = np.array([s[2] for s in segs])
        self._segs = segs
        # strictly decreasing pieces, reversed: the graph of the inverse
        inv = [
            (y1, x1, y0, x0)
            for (x0, y0), (x1, y1) in zip(pts, pts[1:])
            if y0 > y1
        ]
        inv.reverse()  # ascending in y
        self._inv = inv
        self._inv_r = np.array([s[2] for s in inv])

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if not self._segs:
            return np.full_like(x, self.y_max)
        idx = np.clip(np.searchsorted(self._seg_r, x, side="left"), 0, len(self._segs) - 1)
        out = np.empty_like(x)
        for i, (x0, y0, x1, y1) in enumerate(self._segs):
            m = idx == i
            if np.any(m):
                t = (x[m] - x0) / (x1 - x0)
                out[m] = y0 + t * (y1 - y0)
        return out

    def inverse(self, y):
        """Rightmost x at which the curve is still >= y (sup of the row).

        Rows at or below the curve's final height run to the end of the
        domain.  Callers only query heights inside the region.
        """
        y = np.asarray(y, dtype=float)
        out = np.full_like(y, self.x_max)
        if not self._inv:
            return out
        idx = np.searchsorted(self._inv_r, y, side="left")
        below = y <= self._inv[0][0]
        for i, (ylo, xlo, yhi, xhi) in enumerate(self._inv):
            m = (idx == i) & ~below
            if np.any(m):
                t = (y[m] - ylo) / (yhi - ylo)
                out[m] = xlo + t * (xhi - xlo)
        return out

    def integral(self) -> float:
        return sum((x1 - x0) * (y0 + y1) / 2 for x0, y0, x1, y1 in self._segs)


class StableShape:
    """A scaled-limit skew region between two piecewise-linear boundaries."""

    def __init__(self, outer_points, inner_points=None):
        self.outer = _Boundary(outer_points)
        if inner_points is None:
            inner_points = [(self.outer.x_min, 0.0), (self.outer.x_max, 0.0)]
        self.inner = _Boundary(inner_points)
        if abs(self.inner.x_min - self.outer.x_min) > 1e-12 or abs(
            self.inner.x_max - self.outer.x_max
        ) > 1e-12:
            raise ValueError("inner and outer boundaries need the same x-domain")
        xs = np.linspace(self.outer.x_min, self.outer.x_max, 513)[1:-1]
        if np.any(self.inner(xs) > self.outer(xs) + 1e-9):
            raise ValueError("inner boundary exceeds outer boundary")

    def area(self) -> float:
        return self.outer.integral() - self.inner.integral()

    @classmethod
    def unit_square(cls) -> "StableShape":
        return cls([(0.0, 1.0), (1.0, 1.0)])

    @classmethod
    def inverted_thick_hook(cls) -> "StableShape":
        """2x2 square minus its corner unit square, scaled to area 1."""
        s = 1 / sqrt(3)
        return cls(
            [(0.0, 2 * s), (2 * s, 2 * s)],
            [(0.0, s), (s, s), (s, 0.0), (2 * s, 0.0)],
        )

    @classmethod
    def thick_l(cls) -> "StableShape":
        """The 180-degree rotation of the inverted thick hook, as a straight shape."""
        s = 1 / sqrt(3)
        return cls([(0.0, 2 * s), (s, 2 * s), (s, s), (2 * s, s)])


def _hook_integral_at(shape: StableShape, grid: int) -> float:
    outer, inner = shape.outer, shape.inner
    a0, a1 = outer.x_min, outer.x_max
    dx = (a1 - a0) / grid
    xs = a0 + dx * (np.arange(grid) + 0.5)
    tops = outer(xs)
    bots = inner(xs)
    total = 0.0
    for x, top, bot in zip(xs, tops, bots):
        height = top - bot
        if height <= 0:
            continue
        dy = height / grid
        ys = bot + dy * (np.arange(grid) + 0.5)
        arms = outer.inverse(ys) - x
        legs = top - ys
        vals = np.log(arms + legs)
        total += float(vals.sum()) * dx * dy
    return total


def hook_integral(shape: StableShape, grid: int = 512, refine_tol: float = 1e-3) -> float:
    """Midpoint quadrature of log(arm + leg) over the region between the curves.

    The integrand has an integrable log singularity along the outer boundary;
    midpoints never sit on it.  The value at half resolution must agree within
    refine_tol, otherwise the quadrature is declared non-convergent.
    """
    if grid < 64:
        raise ValueError("grid must be >= 64")
    coarse = _hook_integral_at(shape, grid // 2)
    fine = _hook_integral_at(shape, grid)
    if abs(fine - coarse) > refine_tol:
        raise ArithmeticError(
            f"quadrature not converged: |{fine} - {coarse}| > {refine_tol}"
        )
    return fine


def unit_box_log_integral(shift: float, grid: int = 512) -> float:
    """Midpoint quadrature of log(shift + x + y) over the unit square."""
    dx = 1.0 / grid
    mids = dx * (np.arange(grid) + 0.5)
    vals = np.log(shift + mids[:, None] + mids[None, :])
    return float(vals.sum()) * dx * dx


# -- Frobenius-coordinate limit ------------------------------------------------------


@dataclass(frozen=True)
class TvkData:
    """Scaled Frobenius coordinates of the outer and inner limit shapes."""

    alpha: tuple
    beta: tuple
    pi: tuple
    tau: tuple

    def __post_init__(self):
        k = len(self.alpha)
        if not (len(self.beta) == len(self.pi) == len(self.tau) == k):
            raise ValueError("all four coordinate vectors need equal length")
        for a, p in zip(self.alpha, self.pi):
            if a < p or p < 0:
                raise ValueError("need alpha_i >= pi_i >= 0")
        for b, t in zip(self.beta, self.tau):
            if b < t or t < 0:
                raise ValueError("need beta_i >= tau_i >= 0")
        if self.gamma <= 0:
            raise ValueError("total coordinate excess must be positive")

    @property
    def gamma(self) -> float:
        return sum(self.alpha) + sum(self.beta) - sum(self.pi) - sum(self.tau)


def _xlogx(v: float) -> float:
    return 0.0 if v == 0 else v * log(v)


def tvk_constant(data: TvkData) -> float:
    """Growth constant of the log count per unit of the scale parameter."""
    c = _xlogx(data.gamma)
    for a, p in zip(data.alpha, data.pi):
        c -= _xlogx(a - p)
    for b, t in zip(data.beta, data.tau):
        c -= _xlogx(b - t)
    return c


def _floored_coords(firsts, seconds, n):
    arms, legs = [], []
    for a, b in zip(firsts, seconds):
        fa, fb = int(a * n), int(b * n)
        if fa == 0 and fb == 0:
            break  # no diagonal cell survives at this scale
        if arms and not (fa < arms[-1] and fb < legs[-1]):
            break
        arms.append(fa)
        legs.append(fb)
    return arms, legs


def tvk_skew_shape(data: TvkData, n: int) -> SkewShape:
    """The discretized shape at scale n: Frobenius coordinates floor(coord * n)."""
    outer = Partition.from_frobenius(*_floored_coords(data.alpha, data.beta, n))
    inner = Partition.from_frobenius(*_floored_coords(data.pi, data.tau, n))
    return SkewShape(outer, inner)


# -- depth decompositions ----------------------------------------------------------


@dataclass(frozen=True)
class SubpolyReport:
    n: int
    width: int
    depth: int
    n_log_n: float
    sum_log_hooks: float
    n_log_depth: float
    log_naive: float
    hook_bound_ok: bool


def subpoly_report(shape: SkewShape) -> SubpolyReport:
    """Decompose log F into n log n minus the hook-log sum, with the exact
    check that the hook product is at most depth^n."""
    n = shape.size
    width, depth = shape.width_depth()
    prod = shape.hook_product()
    sum_log_hooks = log_int(prod) if prod > 1 else 0.0
    return SubpolyReport(
        n=n,
        width=width,
        depth=depth,
        n_log_n=n * log(n) if n else 0.0,
        sum_log_hooks=sum_log_hooks,
        n_log_depth=n * log(depth) if depth else 0.0,
        log_naive=log_fraction(naive_hlf(shape)) if n else 0.0,
        hook_bound_ok=prod <= depth**n if n else True,
    )


@dataclass(frozen=True)
class RibbonTermsReport:
    k: int
    m: int
    n: int
    terms: tuple  # (n log n, -n log m, -n log m / 2m, -n/m)
    estimate: float
    log_exact: float
    residual: float


def ribbon_rho_terms(k: int, m: int) -> RibbonTermsReport:
    """Evaluate the four-term expansion for the all-columns-length-m ribbon and
    report the residual against the exact count."""
    from .shapes import column_ribbon

    shape = column_ribbon(k, m)
    n = shape.size
    lm = log(m)
    terms = (n * log(n), -n * lm, -n * lm / (2 * m), -n / m)
    estimate = sum(terms)
    exact = jacobi_trudi_count(shape)
    log_exact = log_int(exact) if exact > 0 else 0.0
    return RibbonTermsReport(
        k=k, m=m, n=n, terms=terms, estimate=estimate, log_exact=log_exact,
        residual=log_exact - estimate,
    )


# -- per-family report rows -----------------------------------------------------------


@dataclass(frozen=True)
class FamilyRow:
    family: str
    k: int
    n: int
    log_e: float
    c_k: float
    log_F: float
    log_xi: float
    verdict: bool


_SWEEP_KEY = {"slim-stripe": "ell"}


def family_row(kind: str, k: int, **extra) -> FamilyRow:
    """Exact counts and log-scale summary for one family member.

    The verdict is the exact sandwich F <= e <= xi * F, checked in rational
    arithmetic before anything is floated.
    """
    params = {_SWEEP_KEY.get(kind, "k"): k}
    params.update(extra)
    shape = ShapeFamily(kind, **params).build()
    n = shape.size
    e = jacobi_trudi_count(shape)
    F = naive_hlf(shape)
    xi = xi_determinant(shape)
    verdict = F <= e <= xi * F
    return FamilyRow(
        family=kind,
        k=k,
        n=n,
        log_e=log_int(e),
        c_k=second_order_constant(shape, exact=e),
        log_F=log_fraction(F),
        log_xi=log_int(xi),
        verdict=verdict,
    )


def family_report(kind: str, ks, **extra) -> list[FamilyRow]:
    return [family_row(kind, k, **extra) for k in ks]
