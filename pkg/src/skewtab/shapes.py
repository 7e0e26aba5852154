"""Partitions, skew shapes, hooks, and generators for named shape families.

Cells are (row, col) pairs, 1-based, with rows increasing downward, so the
cell poset order is componentwise: (i, j) <= (i', j') iff i <= i' and
j <= j'.  All objects here are immutable values and every function is pure.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


class Partition:
    """Integer partition: a weakly decreasing tuple of positive parts.

    Trailing zeros are stripped on construction; the empty partition is
    ``Partition()``.  Indexing is 1-based via :meth:`part`, which returns 0
    beyond the last row (the usual zero padding).
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i in range(len(parts)):
            if parts[i] < 0:
                raise ValueError(f"negative part at index {i + 1}")
            if i and parts[i - 1] < parts[i]:
                raise ValueError(f"parts not weakly decreasing at index {i + 1}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    # -- basic structure ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part access with zero padding past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Column lengths: part j of the conjugate is #{i : parts[i] >= j}."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def cells(self) -> Iterator[Cell]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    # -- hooks and statistics ----------------------------------------------

    def hook(self, i: int, j: int) -> int:
        """Hook length of cell (i, j): arm + leg + 1."""
        if (i, j) not in self:
            raise ValueError(f"cell ({i}, {j}) outside the diagram")
        conj = self.conjugate()
        return self.part(i) - i + conj.part(j) - j + 1

    def hooks(self) -> dict[Cell, int]:
        """Hook lengths of every cell, as a dict."""
        conj = self.conjugate()
        return {
            Cell(i, j): self.part(i) - i + conj.part(j) - j + 1
            for i, p in enumerate(self.parts, start=1)
            for j in range(1, p + 1)
        }

    def durfee(self) -> int:
        """Side of the largest square fitting in the diagram."""
        d = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                d = i
        return d

    def frobenius(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Arm and leg lengths along the main diagonal."""
        d = self.durfee()
        conj = self.conjugate()
        arms = tuple(self.part(i) - i for i in range(1, d + 1))
        legs = tuple(conj.part(i) - i for i in range(1, d + 1))
        return arms, legs

    @classmethod
    def from_frobenius(cls, arms, legs) -> "Partition":
        """Rebuild a partition from strictly decreasing arm/leg lengths."""
        arms, legs = tuple(arms), tuple(legs)
        if len(arms) != len(legs):
            raise ValueError("arm and leg sequences must have equal length")
        for seq in (arms, legs):
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError("Frobenius coordinates must be strictly decreasing")
            if any(a < 0 for a in seq):
                raise ValueError("Frobenius coordinates must be nonnegative")
        d = len(arms)
        parts = [arms[i] + i + 1 for i in range(d)]
        for i in range(d + 1, (legs[0] + 1 if legs else 0) + 1):
            row = sum(1 for j in range(d) if legs[j] + j + 1 >= i)
            if row:
                parts.append(row)
        return cls(parts)


class SkewShape:
    """A skew diagram outer/inner with inner contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        outer = outer if isinstance(outer, Partition) else Partition(outer)
        inner = inner if isinstance(inner, Partition) else Partition(inner)
        if not outer.contains(inner):
            for i in range(1, len(inner) + 1):
                if inner.part(i) > outer.part(i):
                    raise ValueError(f"inner part exceeds outer part at row {i}")
        self.outer = outer
        self.inner = inner

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({list(self.outer.parts)!r}, {list(self.inner.parts)!r})"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_bounds(self) -> list[tuple[int, int]]:
        """Per row i the half-open column interval (inner_i, outer_i]."""
        return [
            (self.inner.part(i), self.outer.part(i))
            for i in range(1, len(self.outer) + 1)
        ]

    def cells(self) -> list[Cell]:
        out = []
        for i, (lo, hi) in enumerate(self.row_bounds(), start=1):
            out.extend(Cell(i, j) for j in range(lo + 1, hi + 1))
        return out

    def __contains__(self, cell) -> bool:
        i, j = cell
        return cell in self.outer and j > self.inner.part(i)

    # -- statistics ----------------------------------------------------------

    def hook_multiset(self) -> Counter:
        """Hooks of the skew cells, computed in the outer shape."""
        hooks = self.outer.hooks()
        return Counter(hooks[c] for c in self.cells())

    def hook_product(self) -> int:
        prod = 1
        for h, mult in self.hook_multiset().items():
            prod *= h**mult
        return prod

    def is_connected(self) -> bool:
        """Edge-connectivity of the cell set; the empty shape counts as connected."""
        cells = set(self.cells())
        if not cells:
            return True
        seen = set()
        queue = deque([next(iter(cells))])
        while queue:
            i, j = queue.popleft()
            if (i, j) in seen:
                continue
            seen.add((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    queue.append(nb)
        return len(seen) == len(cells)

    def is_ribbon_hook(self) -> bool:
        """At most one cell on every diagonal j - i."""
        diags = Counter(j - i for i, j in self.cells())
        return all(v <= 1 for v in diags.values())

    def antidiagonal_ranks(self) -> tuple[int, ...]:
        """Cell counts per antidiagonal i + j, indexed from the first occupied one."""
        cells = self.cells()
        if not cells:
            return ()
        counts = Counter(i + j for i, j in cells)
        lo, hi = min(counts), max(counts)
        return tuple(counts.get(v, 0) for v in range(lo, hi + 1))

    def width_depth(self) -> tuple[int, int]:
        """(min of first row/column of the outer shape, max skew hook)."""
        lam = self.outer
        width = min(lam.part(1), len(lam)) if len(lam) else 0
        hooks = self.hook_multiset()
        depth = max(hooks) if hooks else 0
        return width, depth

    def canonical(self) -> "SkewShape":
        """Drop empty border rows and shift left so the diagram touches column 1."""
        outer = list(self.outer.parts)
        inner = [self.inner.part(i) for i in range(1, len(outer) + 1)]
        while outer and outer[0] == inner[0]:
            outer.pop(0)
            inner.pop(0)
        while outer and outer[-1] == inner[-1]:
            outer.pop()
            inner.pop()
        shift = min(inner) if outer else 0
        return SkewShape([p - shift for p in outer], [p - shift for p in inner])

    def rotate180(self) -> "SkewShape":
        """The dual shape: the diagram rotated 180 degrees, canonicalized."""
        lam, mu = self.outer, self.inner
        ell = len(lam)
        if ell == 0:
            return SkewShape(())
        w = lam.part(1)
        new_outer = [w - mu.part(ell + 1 - i) for i in range(1, ell + 1)]
        new_inner = [w - lam.part(ell + 1 - i) for i in range(1, ell + 1)]
        return SkewShape(new_outer, new_inner).canonical()


# -- text notation ----------------------------------------------------------
#
# "4,4,3,2/2,1" denotes outer/inner; the inner part is omitted when empty,
# and "-" stands for the empty partition.  Families are "name:key=value:..."
# and are parsed by parse_shape into a ShapeFamily.


class ShapeParseError(ValueError):
    pass


def _parse_parts(text: str, what: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    parts = []
    for pos, token in enumerate(text.split(","), start=1):
        token = token.strip()
        if not token.isdigit():
            raise ShapeParseError(f"{what}: part {pos} is not a positive integer")
        parts.append(int(token))
        if parts[-1] == 0:
            raise ShapeParseError(f"{what}: part {pos} must be positive")
        if len(parts) > 1 and parts[-2] < parts[-1]:
            raise ShapeParseError(f"{what}: parts not weakly decreasing at index {pos}")
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse a bare comma-separated partition; '-' or '' give the empty one."""
    return _parse_parts(text, "partition")


def parse_shape(text: str):
    """Parse shape notation into a SkewShape, or a family spec into a ShapeFamily."""
    text = text.strip()
    if ":" in text:
        return parse_family(text)
    head, sep, tail = text.partition("/")
    outer = _parse_parts(head, "outer")
    inner = _parse_parts(tail, "inner") if sep else Partition()
    if not outer.contains(inner):
        for i in range(1, len(inner) + 1):
            if inner.part(i) > outer.part(i):
                raise ShapeParseError(f"inner not contained in outer at row {i}")
    return SkewShape(outer, inner)


def shape_text(shape: SkewShape) -> str:
    """Canonical text form; round-trips with parse_shape."""
    outer = ",".join(str(p) for p in shape.outer) or "-"
    if shape.inner.size == 0:
        return outer
    return outer + "/" + ",".join(str(p) for p in shape.inner)


# -- shape families ----------------------------------------------------------


def staircase(k: int) -> Partition:
    """The staircase with k - 1 rows: (k-1, k-2, ..., 1)."""
    if k < 1:
        raise ValueError("staircase parameter must be >= 1")
    return Partition(range(k - 1, 0, -1))


def square_shape(k: int) -> SkewShape:
    if k < 1:
        raise ValueError("square parameter must be >= 1")
    return SkewShape([k] * k)


def thick_ribbon(k: int, r: int | None = None) -> SkewShape:
    """Staircase difference delta_{k+r}/delta_k; r defaults to k."""
    if r is None:
        r = k
    if k < 1 or r < 1:
        raise ValueError("thick ribbon parameters must be >= 1")
    return SkewShape(staircase(k + r), staircase(k))


def zigzag(k: int) -> SkewShape:
    """The odd zigzag ribbon delta_{k+2}/delta_k."""
    return thick_ribbon(k, 2)


def inverted_hook(k: int) -> SkewShape:
    if k < 1:
        raise ValueError("inverted hook parameter must be >= 1")
    return SkewShape([k + 1] * (k + 1), [k] * k)


def inverted_thick_hook(k: int) -> SkewShape:
    if k < 1:
        raise ValueError("inverted thick hook parameter must be >= 1")
    return SkewShape([2 * k] * (2 * k), [k] * k)


def column_ribbon(k: int, m: int) -> SkewShape:
    """The ribbon hook with k columns, all of length m (n = k*m cells).

    Consecutive columns overlap in exactly one row; column k sits on top.
    """
    if k < 1 or m < 1:
        raise ValueError("ribbon parameters must be >= 1")
    nrows = (k - 1) * (m - 1) + m if m > 1 else 1
    if m == 1:
        return SkewShape([k])
    outer, inner = [], []
    for i in range(1, nrows + 1):
        cols = [
            c
            for c in range(1, k + 1)
            if (k - c) * (m - 1) + 1 <= i <= (k - c) * (m - 1) + m
        ]
        outer.append(max(cols))
        inner.append(min(cols) - 1)
    return SkewShape(outer, inner)


def slim_stripe(ell: int) -> SkewShape:
    """A slim shape with staircase inner: rows 3*ell-1-i over delta_ell."""
    if ell < 1:
        raise ValueError("slim stripe parameter must be >= 1")
    return SkewShape([3 * ell - 1 - i for i in range(1, ell + 1)], staircase(ell))


def regev_vershik_shape(sigma, rows: int, cols: int) -> SkewShape:
    """Rectangle with two rotated copies of sigma attached above and left.

    sigma must fit in the rows x cols rectangle.  The rotated copy is also
    removed from the rectangle's bottom-right corner, so the result has
    |sigma| + rows*cols cells and its skew hooks are exactly the hooks of
    sigma together with the hooks of the rectangle.
    """
    sigma = sigma if isinstance(sigma, Partition) else Partition(sigma)
    if rows < 1 or cols < 1:
        raise ValueError("rectangle dimensions must be >= 1")
    if len(sigma) > rows or sigma.part(1) > cols:
        raise ValueError("sigma does not fit inside the rectangle")
    kp, w = len(sigma), sigma.part(1)
    outer = [w + cols] * kp + [w + cols - sigma.part(rows + 1 - i) for i in range(1, rows + 1)]
    inner = [w + cols - sigma.part(kp + 1 - i) for i in range(1, kp + 1)] + [
        w - sigma.part(rows + 1 - i) for i in range(1, rows + 1)
    ]
    return SkewShape(outer, inner)


class ShapeFamily:
    """A named parametric family, e.g. thick-ribbon:k=4."""

    __slots__ = ("kind", "params")

    def __init__(self, kind: str, **params):
        if kind not in FAMILY_BUILDERS:
            raise ShapeParseError(f"unknown family '{kind}'")
        self.kind = kind
        self.params = dict(params)

    def build(self) -> SkewShape:
        try:
            return FAMILY_BUILDERS[self.kind](**self.params)
        except TypeError as exc:
            raise ShapeParseError(f"bad parameters for family '{self.kind}': {exc}") from None

    def label(self) -> str:
        items = ":".join(f"{k}={_fmt_param(v)}" for k, v in self.params.items())
        return f"{self.kind}:{items}" if items else self.kind

    def __repr__(self) -> str:
        return f"ShapeFamily({self.label()!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ShapeFamily)
            and self.kind == other.kind
            and self.params == other.params
        )


def _fmt_param(v):
    if isinstance(v, Partition):
        return ",".join(str(p) for p in v) or "-"
    return str(v)


FAMILY_BUILDERS = {
    "square": square_shape,
    "staircase": lambda k: SkewShape(staircase(k)),
    "thick-ribbon": thick_ribbon,
    "zigzag": zigzag,
    "inverted-hook": inverted_hook,
    "inverted-thick-hook": inverted_thick_hook,
    "ribbon-rho": column_ribbon,
    "slim-stripe": slim_stripe,
    "regev-vershik": regev_vershik_shape,
}

_INT_KEYS = {"k", "r", "m", "ell", "rows", "cols"}


def parse_family(text: str) -> ShapeFamily:
    head, *rest = text.strip().split(":")
    kind = head.strip()
    if kind not in FAMILY_BUILDERS:
        raise ShapeParseError(f"unknown family '{kind}'")
    params = {}
    for pos, item in enumerate(rest, start=1):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ShapeParseError(f"family parameter {pos} is not key=value")
        if key in _INT_KEYS:
            if not value.strip().lstrip("-").isdigit():
                raise ShapeParseError(f"family parameter '{key}' must be an integer")
            params[key] = int(value)
        elif key == "sigma":
            params[key] = _parse_parts(value, "sigma")
        else:
            raise ShapeParseError(f"unknown family parameter '{key}'")
    return ShapeFamily(kind, **params)


# -- small enumeration helpers (used by sweeps and tests) --------------------


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts bounded by max_part, lex-descending."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in lam (including the empty one and lam)."""

    def rec(i: int, bound: int):
        if i > len(lam):
            yield ()
            return
        for p in range(min(bound, lam.part(i)), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    for parts in rec(1, lam.part(1) if len(lam) else 0):
        yield Partition(parts)
