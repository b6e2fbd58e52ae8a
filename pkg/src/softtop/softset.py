"""Soft sets over a finite universe.

A soft set assigns to every parameter a subset of the universe.  With ``n``
points and ``m`` parameters it is an ``m x n`` bit matrix, stored here as a
single integer read row-major with the first cell as the most significant bit.
Integer order is therefore lexicographic order on the matrix, which is the
canonical order used for every listing in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping, Sequence


class SoftSetError(Exception):
    """Base class for errors raised by this package."""


class ContextMismatch(SoftSetError, ValueError):
    pass


class EmptyCarrier(SoftSetError, ValueError):
    pass


class EmptyFamily(SoftSetError, ValueError):
    pass


class UnknownLabel(SoftSetError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown label"


@dataclass(frozen=True)
class Context:
    """A universe of point labels and a list of parameter labels."""

    universe: tuple[str, ...]
    parameters: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "parameters", tuple(self.parameters))
        if not self.universe:
            raise ValueError("universe must be non-empty")
        if not self.parameters:
            raise ValueError("parameter list must be non-empty")
        for kind, labels in (("universe", self.universe), ("parameters", self.parameters)):
            if len(set(labels)) != len(labels):
                raise ValueError(f"duplicate label in {kind}: {list(labels)}")
        object.__setattr__(self, "_points", {x: i for i, x in enumerate(self.universe)})
        object.__setattr__(self, "_params", {e: i for i, e in enumerate(self.parameters)})

    @classmethod
    def of_size(cls, n: int, m: int) -> Context:
        """Context with points ``h1..hn`` and parameters ``e1..em``."""
        return cls(tuple(f"h{i + 1}" for i in range(n)), tuple(f"e{j + 1}" for j in range(m)))

    @property
    def n(self) -> int:
        return len(self.universe)

    @property
    def m(self) -> int:
        return len(self.parameters)

    @property
    def cells(self) -> int:
        return self.n * self.m

    @property
    def full(self) -> int:
        return (1 << self.cells) - 1

    def point_index(self, label: str) -> int:
        try:
            return self._points[label]
        except KeyError:
            raise UnknownLabel(f"unknown point label {label!r}") from None

    def param_index(self, label: str) -> int:
        try:
            return self._params[label]
        except KeyError:
            raise UnknownLabel(f"unknown parameter label {label!r}") from None

    def bit(self, parameter: int, point: int) -> int:
        """Mask of the single cell (parameter, point)."""
        return 1 << ((self.m - 1 - parameter) * self.n + (self.n - 1 - point))

    def row_shift(self, parameter: int) -> int:
        return (self.m - 1 - parameter) * self.n

    def row_mask(self, points: Iterable[int]) -> int:
        """n-bit row with the given point indices set."""
        row = 0
        for x in points:
            if not 0 <= x < self.n:
                raise IndexError(f"point index {x} out of range")
            row |= 1 << (self.n - 1 - x)
        return row

    def constant_mask(self, row: int) -> int:
        """Repeat an n-bit row across every parameter."""
        out = 0
        for e in range(self.m):
            out |= row << self.row_shift(e)
        return out

    def carrier_indices(self, carrier: Iterable[int | str]) -> tuple[int, ...]:
        idx = set()
        for x in carrier:
            idx.add(self.point_index(x) if isinstance(x, str) else int(x))
        for x in idx:
            if not 0 <= x < self.n:
                raise IndexError(f"point index {x} out of range")
        return tuple(sorted(idx))

    def same(self, other: Context) -> bool:
        return self is other or self == other


def _check(a: Context, b: Context) -> None:
    if not a.same(b):
        raise ContextMismatch("soft sets live over different contexts")


@dataclass(frozen=True)
class SoftSet:
    """A parameterized family of subsets of ``context.universe``.

    ``bits`` is the bit matrix packed as described in the module docstring.
    Comparison operators follow the builtin ``set`` conventions: ``F <= G`` is
    soft inclusion, ``|``, ``&``, ``-`` and ``~`` are union, intersection,
    difference and complement.
    """

    context: Context
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.context.full:
            raise ValueError("bit matrix does not fit the context")

    @classmethod
    def from_rows(cls, ctx: Context, rows: Mapping[str, Iterable[str]]) -> SoftSet:
        """Build from ``{parameter label: point labels}``; omitted rows are empty."""
        bits = 0
        for e_label, points in rows.items():
            e = ctx.param_index(e_label)
            for x_label in points:
                bits |= ctx.bit(e, ctx.point_index(x_label))
        return cls(ctx, bits)

    @classmethod
    def from_matrix(cls, ctx: Context, matrix: Sequence[Sequence[int] | str]) -> SoftSet:
        """Build from an ``m x n`` 0/1 matrix (rows may be strings like ``"010"``)."""
        if len(matrix) != ctx.m:
            raise ValueError(f"expected {ctx.m} rows, got {len(matrix)}")
        bits = 0
        for row in matrix:
            if len(row) != ctx.n:
                raise ValueError(f"expected rows of length {ctx.n}")
            for cell in row:
                bits = (bits << 1) | (1 if int(cell) else 0)
        return cls(ctx, bits)

    def row_bits(self, parameter: int) -> int:
        ctx = self.context
        return (self.bits >> ctx.row_shift(parameter)) & ((1 << ctx.n) - 1)

    def row(self, parameter: int) -> frozenset[int]:
        """Point indices of the approximation at ``parameter``."""
        r = self.row_bits(parameter)
        n = self.context.n
        return frozenset(x for x in range(n) if r >> (n - 1 - x) & 1)

    def approximation(self, parameter: str) -> tuple[str, ...]:
        """Point labels of the approximation at a parameter label, in universe order."""
        ctx = self.context
        return tuple(ctx.universe[x] for x in sorted(self.row(ctx.param_index(parameter))))

    def rows(self) -> dict[str, tuple[str, ...]]:
        return {e: self.approximation(e) for e in self.context.parameters}

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        ctx = self.context
        return tuple(
            tuple(1 if x in self.row(e) else 0 for x in range(ctx.n)) for e in range(ctx.m)
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {{{', '.join(xs)}}}" for e, xs in self.rows().items())
        return f"SoftSet({body})"

    def __le__(self, other: SoftSet) -> bool:
        return is_subset(self, other)

    def __ge__(self, other: SoftSet) -> bool:
        return is_subset(other, self)

    def __or__(self, other: SoftSet) -> SoftSet:
        return union(self, other)

    def __and__(self, other: SoftSet) -> SoftSet:
        return intersection(self, other)

    def __sub__(self, other: SoftSet) -> SoftSet:
        return difference(self, other)

    def __invert__(self) -> SoftSet:
        return complement(self)


@dataclass(frozen=True)
class SoftPoint:
    """The soft set with the single point ``point`` at ``parameter``.

    Points sort parameter-major, point-minor, matching the canonical listing.
    """

    context: Context
    point: int
    parameter: int

    def __post_init__(self) -> None:
        if not (0 <= self.parameter < self.context.m and 0 <= self.point < self.context.n):
            raise IndexError("soft point outside the context")

    def __lt__(self, other: SoftPoint) -> bool:
        return (self.parameter, self.point) < (other.parameter, other.point)

    @classmethod
    def of(cls, ctx: Context, point: str, parameter: str) -> SoftPoint:
        return cls(ctx, ctx.point_index(point), ctx.param_index(parameter))

    @property
    def bit(self) -> int:
        return self.context.bit(self.parameter, self.point)

    def as_softset(self) -> SoftSet:
        return SoftSet(self.context, self.bit)

    @property
    def label(self) -> tuple[str, str]:
        return (self.context.universe[self.point], self.context.parameters[self.parameter])

    def __str__(self) -> str:
        return "({},{})".format(*self.label)


def null_soft_set(ctx: Context) -> SoftSet:
    return SoftSet(ctx, 0)


def absolute_soft_set(ctx: Context) -> SoftSet:
    return SoftSet(ctx, ctx.full)


def constant_soft_set(ctx: Context, carrier: Iterable[int | str]) -> SoftSet:
    """Every approximation equals ``carrier`` (labels or indices)."""
    idx = ctx.carrier_indices(carrier)
    if not idx:
        raise EmptyCarrier("constant soft set needs a non-empty carrier")
    return SoftSet(ctx, ctx.constant_mask(ctx.row_mask(idx)))


def is_subset(F: SoftSet, G: SoftSet) -> bool:
    _check(F.context, G.context)
    return F.bits & ~G.bits == 0


def union(F: SoftSet, G: SoftSet) -> SoftSet:
    _check(F.context, G.context)
    return SoftSet(F.context, F.bits | G.bits)


def intersection(F: SoftSet, G: SoftSet) -> SoftSet:
    _check(F.context, G.context)
    return SoftSet(F.context, F.bits & G.bits)


def complement(F: SoftSet) -> SoftSet:
    return SoftSet(F.context, F.context.full & ~F.bits)


def difference(F: SoftSet, G: SoftSet) -> SoftSet:
    _check(F.context, G.context)
    return SoftSet(F.context, F.bits & ~G.bits)


def _nonempty(sets: Iterable[SoftSet]) -> list[SoftSet]:
    sets = list(sets)
    if not sets:
        raise EmptyFamily("operation is only defined for a non-empty family")
    for s in sets[1:]:
        _check(sets[0].context, s.context)
    return sets


def big_union(sets: Iterable[SoftSet]) -> SoftSet:
    sets = _nonempty(sets)
    return SoftSet(sets[0].context, reduce(lambda a, b: a | b, (s.bits for s in sets)))


def big_intersection(sets: Iterable[SoftSet]) -> SoftSet:
    sets = _nonempty(sets)
    return SoftSet(sets[0].context, reduce(lambda a, b: a & b, (s.bits for s in sets)))


def is_disjoint(F: SoftSet, G: SoftSet) -> bool:
    _check(F.context, G.context)
    return F.bits & G.bits == 0


def all_soft_points(ctx: Context) -> list[SoftPoint]:
    return [SoftPoint(ctx, x, e) for e in range(ctx.m) for x in range(ctx.n)]


def soft_points_of(F: SoftSet) -> list[SoftPoint]:
    """Soft points soft-belonging to ``F``, parameter-major."""
    return [p for p in all_soft_points(F.context) if F.bits & p.bit]


def softpoint_in(p: SoftPoint, F: SoftSet) -> bool:
    _check(p.context, F.context)
    return bool(F.bits & p.bit)


def point_in(p: int | str, F: SoftSet) -> bool:
    """Ordinary membership: ``p`` lies in every approximation of ``F``."""
    ctx = F.context
    x = ctx.point_index(p) if isinstance(p, str) else p
    if not 0 <= x < ctx.n:
        raise IndexError(f"point index {x} out of range")
    col = ctx.constant_mask(ctx.row_mask([x]))
    return F.bits & col == col


def restrict(F: SoftSet, carrier: Iterable[int | str]) -> SoftSet:
    """Intersect every approximation with ``carrier``; the context is unchanged."""
    return intersection(F, constant_soft_set(F.context, carrier))
